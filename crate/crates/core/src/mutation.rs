//! Sign-convention switches used only by the mutation-sensitivity suite.
//!
//! Each variant disables one sign rule. The identity checks must notice every
//! one of them; with `Mutation::None` (the default) nothing is altered.

use core::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum Mutation {
    None = 0,
    /// Drop the (−1)^{j̄} of the super flip, i.e. the sign of the S_r action on tensors.
    FlipSign = 1,
    /// Drop the comodule sign in ⟨I|X₁⋯X_r|J⟩.
    ComoduleSign = 2,
    /// Drop the (−1)^{Σ ī_k j̄_k} prefactor of the super-immanant.
    ImmanantPrefactor = 3,
    /// Let odd generators commute (Koszul sign of the product ignored).
    KoszulSign = 4,
    /// Use the plain trace instead of the supertrace.
    SupertraceSign = 5,
}

pub const ALL: [Mutation; 5] = [
    Mutation::FlipSign,
    Mutation::ComoduleSign,
    Mutation::ImmanantPrefactor,
    Mutation::KoszulSign,
    Mutation::SupertraceSign,
];

static ACTIVE: AtomicU8 = AtomicU8::new(0);

pub fn set(m: Mutation) {
    ACTIVE.store(m as u8, Ordering::SeqCst);
}

pub fn active(m: Mutation) -> bool {
    ACTIVE.load(Ordering::Relaxed) == m as u8
}

impl Mutation {
    pub fn name(self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::FlipSign => "flip-sign",
            Mutation::ComoduleSign => "comodule-sign",
            Mutation::ImmanantPrefactor => "immanant-prefactor",
            Mutation::KoszulSign => "koszul-sign",
            Mutation::SupertraceSign => "supertrace-sign",
        }
    }
}
