//! The rational group algebra of S_r: permutations, Jucys–Murphy elements,
//! primitive idempotents E_T, character elements and the fusion cross-check.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tableaux::{hook_product, CharacterTable, Partition, StandardTableau};
use crate::Q;

/// σ stored by its images σ(1..r), 0-based internally. Composition is
/// `(σ∘τ)(k) = σ(τ(k))`, which is also the group-algebra product στ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { images: (0..r as u8).collect() }
    }

    /// From 1-based images σ(1), …, σ(r).
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &i in images {
            if i == 0 || i > r || seen[i - 1] {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&i| (i - 1) as u8).collect() })
    }

    /// The transposition (a, b), 1-based.
    pub fn transposition(r: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(r);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// σ(k), 1-based.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&k| self.images[k as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    pub fn cycle_type(&self) -> Partition {
        let r = self.images.len();
        let mut seen = vec![false; r];
        let mut parts = Vec::new();
        for s in 0..r {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    pub fn sign(&self) -> i64 {
        let t = self.cycle_type();
        if (self.images.len() - t.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Lehmer-code rank in lexicographic order of image words.
    pub fn rank(&self) -> usize {
        let r = self.images.len();
        let mut rank = 0usize;
        for i in 0..r {
            let smaller = self.images[i + 1..].iter().filter(|&&v| v < self.images[i]).count();
            rank = rank * (r - i) + smaller;
        }
        rank
    }

    fn unrank(r: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0usize; r];
        for i in (0..r).rev() {
            let base = r - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..r as u8).collect();
        let images = digits.iter().map(|&d| pool.remove(d)).collect();
        Permutation { images }
    }

    fn swap_positions(&self, a: usize, b: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(a, b);
        p
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// All permutations of degree r in rank order, with a Cayley table for r ≤ 6.
pub struct SymGroup {
    r: usize,
    elements: Vec<Permutation>,
    table: Option<Vec<u16>>,
}

const TABLE_MAX: usize = 6;

impl SymGroup {
    fn build(r: usize) -> SymGroup {
        let size = crate::tableaux::factorial(r as u32) as usize;
        let elements: Vec<Permutation> = (0..size).map(|k| Permutation::unrank(r, k)).collect();
        let table = (r <= TABLE_MAX).then(|| {
            let mut t = Vec::with_capacity(size * size);
            for a in &elements {
                for b in &elements {
                    t.push(a.compose(b).rank() as u16);
                }
            }
            t
        });
        SymGroup { r, elements, table }
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &Permutation {
        &self.elements[k]
    }

    /// Rank of the product of the elements of rank a and b.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.elements[a].compose(&self.elements[b]).rank(),
        }
    }
}

#[cfg(feature = "std")]
pub fn sym_group(r: usize) -> Arc<SymGroup> {
    use std::collections::BTreeMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<SymGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(g) = cache.lock().unwrap().get(&r) {
        return g.clone();
    }
    let g = Arc::new(SymGroup::build(r));
    cache.lock().unwrap().entry(r).or_insert(g).clone()
}

#[cfg(not(feature = "std"))]
pub fn sym_group(r: usize) -> Arc<SymGroup> {
    Arc::new(SymGroup::build(r))
}

/// Σ c_σ σ over S_r, stored densely by rank.
#[derive(Clone)]
pub struct GroupAlgebraElement {
    group: Arc<SymGroup>,
    coeffs: Vec<Q>,
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, o: &Self) -> bool {
        self.group.r == o.group.r && self.coeffs == o.coeffs
    }
}

impl Eq for GroupAlgebraElement {}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}·{p:?}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl GroupAlgebraElement {
    pub fn zero(r: usize) -> Self {
        let group = sym_group(r);
        let coeffs = vec![Q::zero(); group.order()];
        GroupAlgebraElement { group, coeffs }
    }

    pub fn identity(r: usize) -> Self {
        let mut e = Self::zero(r);
        e.coeffs[0] = Q::one();
        e
    }

    pub fn from_perm(p: &Permutation) -> Self {
        let mut e = Self::zero(p.degree());
        e.coeffs[p.rank()] = Q::one();
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Q)>>(r: usize, terms: I) -> Self {
        let mut e = Self::zero(r);
        for (p, c) in terms {
            e.coeffs[p.rank()] += c;
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.group.r
    }

    pub fn group(&self) -> &Arc<SymGroup> {
        &self.group
    }

    pub fn coeff(&self, p: &Permutation) -> &Q {
        &self.coeffs[p.rank()]
    }

    /// Coefficient by rank.
    pub fn coeff_at(&self, k: usize) -> &Q {
        &self.coeffs[k]
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Q)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (&self.group.elements[k], c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &Q) -> Self {
        GroupAlgebraElement { group: self.group.clone(), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![Q::zero(); self.coeffs.len()];
        let right: Vec<(usize, &Q)> = o.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for &(b, cb) in &right {
                out[self.group.mul_index(a, b)] += ca * cb;
            }
        }
        GroupAlgebraElement { group: self.group.clone(), coeffs: out }
    }

    /// x · (a, b), 1-based transposition.
    pub fn mul_transposition_right(&self, a: usize, b: usize) -> Self {
        let mut out = vec![Q::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[self.group.elements[k].swap_positions(a - 1, b - 1).rank()] = c.clone();
            }
        }
        GroupAlgebraElement { group: self.group.clone(), coeffs: out }
    }

    /// x · y_k.
    pub fn mul_jucys_murphy(&self, k: usize) -> Self {
        let mut acc = Self::zero(self.degree());
        for a in 1..k {
            acc = acc.add(&self.mul_transposition_right(a, k));
        }
        acc
    }

    /// σ ↦ σ⁻¹ extended linearly.
    pub fn antipode(&self) -> Self {
        let mut out = vec![Q::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[self.group.elements[k].inverse().rank()] = c.clone();
            }
        }
        GroupAlgebraElement { group: self.group.clone(), coeffs: out }
    }

    /// Σ_σ σ x σ⁻¹.
    pub fn conjugation_sum(&self) -> Self {
        let mut out = vec![Q::zero(); self.coeffs.len()];
        for s in &self.group.elements {
            let si = s.inverse();
            for (k, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out[s.compose(&self.group.elements[k]).compose(&si).rank()] += c;
                }
            }
        }
        GroupAlgebraElement { group: self.group.clone(), coeffs: out }
    }
}

pub fn jucys_murphy(k: usize, r: usize) -> Result<GroupAlgebraElement> {
    if k == 0 || k > r {
        return Err(Error::Domain(format!("y_{k} does not exist in S_{r}")));
    }
    Ok(GroupAlgebraElement::identity(r).mul_jucys_murphy(k))
}

/// Contents of the boxes that can be added to the shape holding 1..k−1 of T.
fn addable_contents(t: &StandardTableau, k: usize) -> Vec<i64> {
    let shape = if k == 1 { Partition::empty() } else { t.restrict(k - 1).shape().clone() };
    shape.addable_rows().into_iter().map(|i| shape.part(i + 1) as i64 - i as i64).collect()
}

/// E_T = Π_{k=2}^{r} Π_{c ∈ Spec_k(T), c ≠ c_k} (y_k − c)/(c_k − c).
pub fn primitive_idempotent(t: &StandardTableau) -> GroupAlgebraElement {
    let r = t.size();
    let mut e = GroupAlgebraElement::identity(r);
    for k in 2..=r {
        let ck = t.content(k);
        for c in addable_contents(t, k) {
            if c == ck {
                continue;
            }
            let y = e.mul_jucys_murphy(k);
            let num = y.sub(&e.scale(&Q::from_integer(c.into())));
            e = num.scale(&Q::new(1.into(), (ck - c).into()));
        }
    }
    e
}

/// Validates a filling and builds E_T from it.
pub fn primitive_idempotent_from_rows(rows: Vec<Vec<u32>>) -> Result<GroupAlgebraElement> {
    Ok(primitive_idempotent(&StandardTableau::new(rows)?))
}

/// Polynomial in one variable z with group-algebra coefficients (index = power).
#[derive(Clone)]
struct AlgPoly(Vec<GroupAlgebraElement>);

impl AlgPoly {
    fn constant(x: GroupAlgebraElement) -> Self {
        AlgPoly(vec![x])
    }

    /// self · (u − z − P_{(a,b)}) where u is a rational constant.
    fn mul_factor(&self, u: &Q, a: usize, b: usize) -> Self {
        let r = self.0[0].degree();
        let mut out = vec![GroupAlgebraElement::zero(r); self.0.len() + 1];
        for (p, c) in self.0.iter().enumerate() {
            let cp = c.mul_transposition_right(a, b);
            out[p] = out[p].add(&c.scale(u)).sub(&cp);
            out[p + 1] = out[p + 1].sub(c);
        }
        AlgPoly(out)
    }

    /// Exact division by (z − c); errors on a nonzero remainder.
    fn divide_linear(&self, c: &Q) -> Result<Self> {
        let d = self.0.len() - 1;
        let r = self.0[0].degree();
        let mut q = vec![GroupAlgebraElement::zero(r); d];
        let mut carry = GroupAlgebraElement::zero(r);
        for p in (0..=d).rev() {
            let cur = self.0[p].add(&carry);
            if p == 0 {
                if !cur.is_zero() {
                    return Err(Error::Fusion(format!("pole at z = {c} does not cancel")));
                }
            } else {
                q[p - 1] = cur.clone();
                carry = cur.scale(c);
            }
        }
        Ok(AlgPoly(q))
    }

    fn eval(&self, z: &Q) -> GroupAlgebraElement {
        let mut acc = GroupAlgebraElement::zero(self.0[0].degree());
        for c in self.0.iter().rev() {
            acc = acc.scale(z).add(c);
        }
        acc
    }
}

/// The ordered product Π (1 − P_{(a,b)}/(z_a − z_b)) at a generic rational point,
/// in either lexicographic or colexicographic order of the pairs (a, b).
pub fn fusion_product_at(z: &[Q], colex: bool) -> Result<GroupAlgebraElement> {
    let r = z.len();
    let mut pairs: Vec<(usize, usize)> = (1..=r).flat_map(|a| (a + 1..=r).map(move |b| (a, b))).collect();
    if colex {
        pairs.sort_by_key(|&(a, b)| (b, a));
    }
    let mut e = GroupAlgebraElement::identity(r);
    for (a, b) in pairs {
        let d = &z[a - 1] - &z[b - 1];
        if d.is_zero() {
            return Err(Error::Fusion(format!("z_{a} = z_{b}")));
        }
        e = e.sub(&e.mul_transposition_right(a, b).scale(&(Q::one() / d)));
    }
    Ok(e)
}

/// h(λ)⁻¹ · φ(z₁,…,z_r) evaluated consecutively at z_k = c_k(T).
///
/// φ is expanded in colexicographic order of the pairs (equal to the
/// lexicographic product by the Yang–Baxter relation), so the k-th stage only
/// involves the single free variable z_k.
pub fn fusion_idempotent(t: &StandardTableau) -> Result<GroupAlgebraElement> {
    let r = t.size();
    let contents: Vec<Q> = (1..=r).map(|k| Q::from_integer(t.content(k).into())).collect();
    let mut acc = GroupAlgebraElement::identity(r);
    for b in 2..=r {
        // acc · Π_{a<b} (1 − P_ab/(c_a − z)) = acc · Π((c_a − z) − P_ab) / Π(c_a − z)
        let mut num = AlgPoly::constant(acc.clone());
        for a in 1..b {
            num = num.mul_factor(&contents[a - 1], a, b);
        }
        let cb = &contents[b - 1];
        let mut denom_rest = Q::one();
        for a in 1..b {
            let u = &contents[a - 1];
            if u == cb {
                // (u − z) = −(z − u)
                num = num.divide_linear(u)?;
                denom_rest = -denom_rest;
            } else {
                denom_rest *= u - cb;
            }
        }
        acc = num.eval(cb).scale(&(Q::one() / denom_rest));
    }
    Ok(acc.scale(&Q::new(1.into(), hook_product(t.shape()).into())))
}

/// Σ_σ χ^λ(σ) σ.
pub fn character_element(lambda: &Partition) -> GroupAlgebraElement {
    let r = lambda.size() as usize;
    let g = sym_group(r);
    let mut table = CharacterTable::new();
    let mut e = GroupAlgebraElement::zero(r);
    for (k, s) in g.elements().iter().enumerate() {
        e.coeffs[k] = Q::from_integer(table.value(lambda, &s.cycle_type()).unwrap().into());
    }
    e
}

/// Σ_σ f(σ) σ for any class function given on cycle types.
pub fn class_function_element<F: FnMut(&Partition) -> Q>(r: usize, mut f: F) -> GroupAlgebraElement {
    let g = sym_group(r);
    let mut e = GroupAlgebraElement::zero(r);
    for (k, s) in g.elements().iter().enumerate() {
        e.coeffs[k] = f(&s.cycle_type());
    }
    e
}

/// z_λ = dim λ / r! · Σ_σ χ^λ(σ⁻¹) σ.
pub fn central_idempotent(lambda: &Partition) -> GroupAlgebraElement {
    let r = lambda.size();
    let d = crate::tableaux::dim(lambda);
    let f = crate::tableaux::factorial(r);
    character_element(lambda).antipode().scale(&Q::new(d.into(), f.into()))
}

/// Both sides of E_T·(P_{(a,a+1)} − 1/d_a(T)) = E_T P_{(a,a+1)} E_{(a,a+1)T}.
pub struct TranspositionRelation {
    pub d: i64,
    pub lhs: GroupAlgebraElement,
    pub rhs: GroupAlgebraElement,
    pub flipped_standard: bool,
}

impl TranspositionRelation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn apply_transposition_relation(t: &StandardTableau, a: usize) -> Result<TranspositionRelation> {
    let r = t.size();
    if a == 0 || a >= r {
        return Err(Error::Domain(format!("a = {a} outside 1..{r}")));
    }
    let e = primitive_idempotent(t);
    let d = t.axial_distance(a);
    let es = e.mul_transposition_right(a, a + 1);
    let lhs = es.sub(&e.scale(&Q::new(1.into(), d.into())));
    let (rhs, flipped_standard) = match t.swap(a) {
        Some(t2) => (es.mul(&primitive_idempotent(&t2)), true),
        None => (GroupAlgebraElement::zero(r), false),
    };
    Ok(TranspositionRelation { d, lhs, rhs, flipped_standard })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_syt, partitions};

    fn half() -> Q {
        Q::new(1.into(), 2.into())
    }

    #[test]
    fn rank_roundtrip() {
        let g = sym_group(4);
        for (k, p) in g.elements().iter().enumerate() {
            assert_eq!(p.rank(), k);
        }
        let s = Permutation::from_images(&[2, 3, 1]).unwrap();
        let t = Permutation::from_images(&[2, 1, 3]).unwrap();
        assert_eq!(s.compose(&t).images(), vec![3, 2, 1]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
    }

    #[test]
    fn jucys_murphy_basics() {
        let s = Permutation::transposition(2, 1, 2);
        assert_eq!(jucys_murphy(2, 2).unwrap(), GroupAlgebraElement::from_perm(&s));
        assert!(jucys_murphy(1, 3).unwrap().is_zero());
        assert!(jucys_murphy(4, 3).is_err());
        for r in 2..=5 {
            let ys: Vec<_> = (1..=r).map(|k| jucys_murphy(k, r).unwrap()).collect();
            for a in &ys {
                for b in &ys {
                    assert_eq!(a.mul(b), b.mul(a));
                }
            }
        }
    }

    #[test]
    fn idempotents_r2() {
        let s = GroupAlgebraElement::from_perm(&Permutation::transposition(2, 1, 2));
        let one = GroupAlgebraElement::identity(2);
        let row = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        let col = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(primitive_idempotent(&row), one.add(&s).scale(&half()));
        assert_eq!(primitive_idempotent(&col), one.sub(&s).scale(&half()));
        assert_eq!(fusion_idempotent(&row).unwrap(), primitive_idempotent(&row));
        assert_eq!(fusion_idempotent(&col).unwrap(), primitive_idempotent(&col));
        assert!(primitive_idempotent_from_rows(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn completeness_orthogonality() {
        for r in 1..=5 {
            let mut sum = GroupAlgebraElement::zero(r);
            let mut all = Vec::new();
            for l in partitions(r as u32) {
                for t in enumerate_syt(&l) {
                    let e = primitive_idempotent(&t);
                    sum = sum.add(&e);
                    all.push((t, e));
                }
            }
            assert_eq!(sum, GroupAlgebraElement::identity(r));
            if r <= 4 {
                for (t, e) in &all {
                    for (t2, e2) in &all {
                        let p = e.mul(e2);
                        if t == t2 {
                            assert_eq!(&p, e);
                        } else {
                            assert!(p.is_zero());
                        }
                    }
                    for k in 1..=r {
                        let c = Q::from_integer(t.content(k).into());
                        assert_eq!(e.mul_jucys_murphy(k), e.scale(&c));
                        assert_eq!(jucys_murphy(k, r).unwrap().mul(e), e.scale(&c));
                    }
                }
            }
        }
    }

    #[test]
    fn fusion_matches_jucys_murphy() {
        for r in 1..=4 {
            for l in partitions(r) {
                for t in enumerate_syt(&l) {
                    assert_eq!(fusion_idempotent(&t).unwrap(), primitive_idempotent(&t), "{:?}", t.rows());
                }
            }
        }
    }

    #[test]
    fn lex_equals_colex() {
        let pts: [&[i64]; 3] = [&[3, -1, 7, 2], &[0, 5, -3, 11], &[1, 2, 4, 8]];
        for p in pts {
            for r in 2..=4 {
                let z: Vec<Q> = p[..r].iter().map(|&v| Q::from_integer(v.into())).collect();
                assert_eq!(fusion_product_at(&z, false).unwrap(), fusion_product_at(&z, true).unwrap());
            }
        }
    }

    #[test]
    fn character_elements() {
        for r in 1..=4 {
            for l in partitions(r) {
                let ch = character_element(&l);
                for t in enumerate_syt(&l) {
                    assert_eq!(primitive_idempotent(&t).conjugation_sum(), ch);
                }
                for l2 in partitions(r) {
                    let p = central_idempotent(&l).mul(&central_idempotent(&l2));
                    if l == l2 {
                        assert_eq!(p, central_idempotent(&l));
                    } else {
                        assert!(p.is_zero());
                    }
                }
            }
            let triv = character_element(&Partition::new(vec![r]));
            assert!(triv.coeffs.iter().all(|c| c.is_one()));
        }
    }

    #[test]
    fn transposition_relation() {
        let row = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        let rel = apply_transposition_relation(&row, 1).unwrap();
        assert_eq!(rel.d, 1);
        assert!(!rel.flipped_standard);
        assert!(rel.lhs.is_zero() && rel.holds());
        for r in 2..=4 {
            for l in partitions(r) {
                for t in enumerate_syt(&l) {
                    for a in 1..r as usize {
                        assert!(apply_transposition_relation(&t, a).unwrap().holds(), "{:?} a={a}", t.rows());
                    }
                }
            }
        }
    }
}
