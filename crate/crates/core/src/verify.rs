//! Exact pass/fail checks of the identity catalogue. Every check returns a
//! [`CheckReport`] carrying case counts and, on failure, the first differing pair.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Display;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::superimm::{
    alpha_k, beta_k, chain_coefficient, chain_coefficient_slots, determinant, eigen_decompose, gamma_k,
    idempotent_supertrace, kostant_rhs, normalized_immanant_sum, operator_matrix, schur_weyl_vector_checks,
    super_immanant, super_immanant_lambda, MultiIndex, SuperMatrix, TensorOperator,
};
use crate::superring::{series_derivative, series_mul, Generator, GrassmannPoint, SuperPoly, TruncatedSeries};
use crate::supersym::{evaluate_sym, is_supersymmetric, phi_specialize, power_sum, schur_super};
use crate::symgroup::{
    character_element, class_function_element, primitive_idempotent, sym_group, GroupAlgebraElement, Permutation,
};
use crate::tableaux::{
    class_size, enumerate_ssyt, enumerate_syt, factorial, in_hook, kostka, partitions, weak_compositions,
    CharacterTable, KostkaMatrix, Partition, StandardTableau,
};
use crate::Q;

/// First failing case of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
    /// First monomial on which the two sides differ, with both coefficients.
    pub difference: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub cases: usize,
    pub skipped: Vec<String>,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Aggregates sub-reports: cases add up, the first witness wins.
    pub fn merge(name: &str, params: Vec<(String, String)>, parts: Vec<CheckReport>) -> CheckReport {
        let mut out = CheckReport { name: name.into(), params, passed: true, cases: 0, skipped: vec![], witness: None };
        for p in parts {
            out.cases += p.cases;
            out.passed &= p.passed;
            out.skipped.extend(p.skipped);
            if out.witness.is_none() {
                out.witness = p.witness.map(|mut w| {
                    let ps: Vec<String> = p.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    w.case = format!("[{}] {}", ps.join(" "), w.case);
                    w
                });
            }
        }
        out
    }
}

struct Checker {
    report: CheckReport,
}

impl Checker {
    fn new(name: &str) -> Self {
        Checker {
            report: CheckReport {
                name: name.into(),
                params: vec![],
                passed: true,
                cases: 0,
                skipped: vec![],
                witness: None,
            },
        }
    }

    fn param(mut self, k: &str, v: impl Display) -> Self {
        self.report.params.push((k.into(), v.to_string()));
        self
    }

    fn fail(&mut self, case: String, lhs: String, rhs: String, difference: Option<String>) {
        self.report.passed = false;
        if self.report.witness.is_none() {
            self.report.witness = Some(Witness { case, lhs, rhs, difference });
        }
    }

    fn eq<F: FnOnce() -> String>(&mut self, case: F, lhs: &SuperPoly, rhs: &SuperPoly) -> bool {
        self.report.cases += 1;
        if lhs == rhs {
            return true;
        }
        let diff = lhs.first_difference(rhs).map(|(mono, a, b)| {
            let p = SuperPoly::term(Q::one(), mono);
            format!("{p}: {a} vs {b}")
        });
        self.fail(case(), lhs.to_string(), rhs.to_string(), diff);
        false
    }

    fn truth<F: FnOnce() -> (String, String, String)>(&mut self, ok: bool, detail: F) -> bool {
        self.report.cases += 1;
        if !ok {
            let (case, lhs, rhs) = detail();
            self.fail(case, lhs, rhs, None);
        }
        ok
    }

    fn finish(mut self, r: Result<()>) -> CheckReport {
        if let Err(e) = r {
            self.fail(String::from("evaluation error"), e.to_string(), String::new(), None);
        }
        self.report
    }
}

fn frac(p: &SuperPoly, a: u64) -> SuperPoly {
    p.scale(&Q::new(1.into(), a.into()))
}

fn parts_of(r: usize) -> Vec<Partition> {
    partitions(r as u32)
}

fn idx_str(i: &MultiIndex) -> String {
    format!("{:?}", i.entries())
}

/// Imm_{χ^λ}(X_I) for I = J, with Imm_∅ = 1; memoized.
struct ImmCache<'a> {
    x: &'a SuperMatrix,
    memo: BTreeMap<(Partition, Vec<usize>), SuperPoly>,
}

impl<'a> ImmCache<'a> {
    fn new(x: &'a SuperMatrix) -> Self {
        ImmCache { x, memo: BTreeMap::new() }
    }

    fn get(&mut self, l: &Partition, i: &MultiIndex) -> Result<SuperPoly> {
        if l.size() == 0 {
            return Ok(SuperPoly::one());
        }
        let key = (l.clone(), i.entries().to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let v = super_immanant_lambda(l, self.x, i, i)?;
        self.memo.insert(key, v.clone());
        Ok(v)
    }
}

fn sub_counts(mult: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(v: usize, left: usize, mult: &[usize], c: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == mult.len() {
            if left == 0 {
                out.push(c.clone());
            }
            return;
        }
        for t in 0..=mult[v].min(left) {
            c[v] = t;
            rec(v + 1, left - t, mult, c, out);
        }
        c[v] = 0;
    }
    let mut out = Vec::new();
    rec(0, k, mult, &mut vec![0; mult.len()], &mut out);
    out
}

/// Ordered sequences (I₁,…,I_l) of sorted multisets with |I_j| = sizes[j] whose
/// disjoint union is I.
pub fn multiset_splits(i: &MultiIndex, sizes: &[usize]) -> Result<Vec<Vec<MultiIndex>>> {
    fn rec(mult: &mut Vec<usize>, sizes: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        match sizes.split_first() {
            None => {
                if mult.iter().all(|&c| c == 0) {
                    out.push(cur.clone());
                }
            }
            Some((&k, rest)) => {
                for c in sub_counts(mult, k) {
                    let entries: Vec<usize> = c.iter().enumerate().flat_map(|(v, &t)| std::iter::repeat_n(v + 1, t)).collect();
                    for (v, t) in c.iter().enumerate() {
                        mult[v] -= t;
                    }
                    cur.push(entries);
                    rec(mult, rest, cur, out);
                    cur.pop();
                    for (v, t) in c.iter().enumerate() {
                        mult[v] += t;
                    }
                }
            }
        }
    }
    let (m, n) = i.dims();
    let mut mult = vec![0usize; m + n];
    for &e in i.entries() {
        mult[e - 1] += 1;
    }
    let mut raw = Vec::new();
    rec(&mut mult, sizes, &mut Vec::new(), &mut raw);
    raw.into_iter().map(|parts| parts.into_iter().map(|p| MultiIndex::new(p, m, n)).collect()).collect()
}

// ---------------------------------------------------------------------------
// Littlewood–Richardson oracles

fn embed(e: &GroupAlgebraElement, offset: usize, r: usize) -> Result<GroupAlgebraElement> {
    let mut terms = Vec::new();
    for (p, c) in e.terms() {
        let mut img: Vec<usize> = (1..=r).collect();
        for k in 1..=p.degree() {
            img[offset + k - 1] = offset + p.apply(k);
        }
        terms.push((Permutation::from_images(&img)?, c.clone()));
    }
    Ok(GroupAlgebraElement::from_terms(r, terms))
}

fn trivial_expansion(mu: &Partition, nu: &Partition) -> Option<Vec<(Partition, i64)>> {
    let single = if mu.size() == 0 {
        nu
    } else if nu.size() == 0 {
        mu
    } else {
        return None;
    };
    Some(parts_of(single.size() as usize).into_iter().map(|l| { let c = (l == *single) as i64; (l, c) }).collect())
}

/// c^λ_{μν} for all λ ⊢ |μ|+|ν| from ⟨Σ_σ σ E^μ E^ν σ⁻¹, χ^λ⟩.
pub fn lr_by_characters(mu: &Partition, nu: &Partition) -> Result<Vec<(Partition, i64)>> {
    if let Some(t) = trivial_expansion(mu, nu) {
        return Ok(t);
    }
    let (a, b) = (mu.size() as usize, nu.size() as usize);
    let r = a + b;
    let em = embed(&primitive_idempotent(&StandardTableau::row_reading(mu)), 0, r)?;
    let en = embed(&primitive_idempotent(&StandardTableau::row_reading(nu)), a, r)?;
    let ind = em.mul(&en).conjugation_sum();
    let rf = Q::from_integer(factorial(r as u32).into());
    let mut out = Vec::new();
    for l in parts_of(r) {
        let ch = character_element(&l);
        let mut s = Q::zero();
        for (p, c) in ind.terms() {
            s += c * ch.coeff(p);
        }
        let c = s / &rf;
        if !c.is_integer() {
            return Err(Error::Domain(format!("non-integral multiplicity {c} of χ^{l}")));
        }
        out.push((l, i64::try_from(c.to_integer()).map_err(|_| Error::Domain(String::from("overflow")))?));
    }
    Ok(out)
}

/// s_λ(x₁…x_N) as a sum over semistandard tableaux.
pub fn schur_tableau_sum(lambda: &Partition, vars: usize) -> SuperPoly {
    let mut s = SuperPoly::zero();
    for t in enumerate_ssyt(lambda, vars, 0) {
        let mut mono = SuperPoly::one();
        for &e in t.rows.iter().flatten() {
            mono = &mono * &SuperPoly::gen(Generator::sym_x(e as usize));
        }
        s += &mono;
    }
    s
}

/// c^λ_{μν} by expanding s_μ s_ν in |λ| variables and peeling leading monomials.
pub fn lr_by_schur_polynomials(mu: &Partition, nu: &Partition) -> Result<Vec<(Partition, i64)>> {
    if let Some(t) = trivial_expansion(mu, nu) {
        return Ok(t);
    }
    let r = (mu.size() + nu.size()) as usize;
    let mut f = &schur_tableau_sum(mu, r) * &schur_tableau_sum(nu, r);
    let mut out = Vec::new();
    for l in parts_of(r) {
        let mut mono = SuperPoly::one();
        for (i, &p) in l.parts().iter().enumerate() {
            mono = &mono * &SuperPoly::gen(Generator::sym_x(i + 1)).pow(p);
        }
        let key = mono.terms().next().map(|(k, _)| k.clone()).unwrap();
        let c = f.terms().find(|(k, _)| **k == key).map(|(_, c)| c.clone()).unwrap_or_else(Q::zero);
        f = &f - &schur_tableau_sum(&l, r).scale(&c);
        out.push((l, i64::try_from(c.to_integer()).map_err(|_| Error::Domain(String::from("overflow")))?));
    }
    if !f.is_zero() {
        return Err(Error::Domain(String::from("s_μ s_ν is not in the Schur span")));
    }
    Ok(out)
}

/// Both oracles, required to agree.
pub fn lr_expansion(mu: &Partition, nu: &Partition) -> Result<Vec<(Partition, i64)>> {
    let a = lr_by_characters(mu, nu)?;
    let b = lr_by_schur_polynomials(mu, nu)?;
    if a != b {
        return Err(Error::Domain(format!("LR oracles disagree for {mu}·{nu}: {a:?} vs {b:?}")));
    }
    Ok(a)
}

pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<i64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::Size(format!("|{mu}| + |{nu}| ≠ |{lambda}|")));
    }
    Ok(lr_expansion(mu, nu)?.into_iter().find(|(l, _)| l == lambda).map(|(_, c)| c).unwrap_or(0))
}

// ---------------------------------------------------------------------------
// Theorem-level checks

fn generic(m: usize, n: usize) -> SuperMatrix {
    SuperMatrix::generator(m, n)
}

/// Imm_{χ^λ}(X^I_J) = 0 for λ ∉ H(m,n;r): every sorted I with J = I, and every ordered pair (I, J).
pub fn check_vanishing(m: usize, n: usize, max_r: usize) -> CheckReport {
    let mut c = Checker::new("vanishing").param("m", m).param("n", n).param("max_r", max_r);
    let x = generic(m, n);
    let res = (|| {
        for r in 1..=max_r {
            for l in parts_of(r).into_iter().filter(|l| !in_hook(l, m, n, r as u32)) {
                let ch = character_element(&l);
                for i in MultiIndex::sorted_all(r, m, n) {
                    let v = super_immanant(&ch, &x, &i, &i)?;
                    c.eq(|| format!("λ={l} I={}", idx_str(&i)), &v, &SuperPoly::zero());
                }
                for i in MultiIndex::all(r, m, n) {
                    for j in MultiIndex::all(r, m, n) {
                        let v = super_immanant(&ch, &x, &i, &j)?;
                        c.eq(|| format!("λ={l} I={} J={}", idx_str(&i), idx_str(&j)), &v, &SuperPoly::zero());
                    }
                }
            }
        }
        Ok(())
    })();
    c.finish(res)
}

/// Imm_{χ^λ}(X_I)/α(I) = supertrace over the μ-weight space of E_T·V^{⊗r}, all (λ, T, μ).
pub fn check_kostant(m: usize, n: usize, max_r: usize) -> CheckReport {
    let mut c = Checker::new("kostant").param("m", m).param("n", n).param("max_r", max_r);
    let x = generic(m, n);
    let res = (|| {
        for r in 1..=max_r {
            for l in parts_of(r) {
                for mu in weak_compositions(r as u32, m + n) {
                    let i = MultiIndex::from_composition(&mu, m, n)?;
                    let lhs = frac(&super_immanant_lambda(&l, &x, &i, &i)?, i.alpha());
                    for t in enumerate_syt(&l) {
                        let rhs = kostant_rhs(&t, &mu, &x)?;
                        c.eq(|| format!("λ={l} T={:?} μ={:?}", t.rows(), mu.0), &lhs, &rhs);
                    }
                }
            }
        }
        Ok(())
    })();
    c.finish(res)
}

/// Vanishing, unique-preimage norm and aggregate norm of E_T e_{I(μ)}.
pub fn check_schur_weyl(m: usize, n: usize, max_r: usize) -> CheckReport {
    let mut c = Checker::new("schur-weyl").param("m", m).param("n", n).param("max_r", max_r);
    let res = (|| {
        for r in 1..=max_r {
            for l in parts_of(r) {
                for t in enumerate_syt(&l) {
                    for mu in weak_compositions(r as u32, m + n) {
                        let rep = schur_weyl_vector_checks(&t, &mu, m, n)?;
                        c.truth(rep.passed(), || {
                            (
                                format!("λ={l} T={:?} μ={:?}", t.rows(), mu.0),
                                format!("norm {} semistandard {} preimages {}", rep.norm, rep.semistandard, rep.preimages),
                                format!("vanishing_ok {} norm_ok {}", rep.vanishing_ok, rep.norm_ok),
                            )
                        });
                    }
                }
            }
        }
        Ok(())
    })();
    c.finish(res)
}

fn product_over_split(cache: &mut ImmCache, shapes: &[Partition], split: &[MultiIndex]) -> Result<(SuperPoly, u64)> {
    let mut p = SuperPoly::one();
    let mut a = 1u64;
    for (l, s) in shapes.iter().zip(split) {
        p = &p * &cache.get(l, s)?;
        a *= s.alpha();
    }
    Ok((p, a))
}

/// Σ_{ordered disjoint (I₁,I₂), I₁⊔I₂=[m+n]} Imm_μ(X_{I₁})Imm_ν(X_{I₂}) = Σ_λ c^λ_{μν} Imm_λ(X_{[m+n]}).
pub fn check_littlewood_i(mu: &Partition, nu: &Partition, x: &SuperMatrix) -> Result<CheckReport> {
    let (m, n) = x.dims();
    if (mu.size() + nu.size()) as usize != m + n {
        return Err(Error::Size(format!("|{mu}| + |{nu}| ≠ m + n = {}", m + n)));
    }
    let mut c = Checker::new("littlewood1").param("m", m).param("n", n).param("mu", mu).param("nu", nu);
    let res = (|| {
        let full = MultiIndex::new((1..=m + n).collect(), m, n)?;
        let mut cache = ImmCache::new(x);
        let mut lhs = SuperPoly::zero();
        let shapes = [mu.clone(), nu.clone()];
        for split in multiset_splits(&full, &[mu.size() as usize, nu.size() as usize])? {
            lhs += &product_over_split(&mut cache, &shapes, &split)?.0;
        }
        let mut rhs = SuperPoly::zero();
        for (l, k) in lr_expansion(mu, nu)? {
            if k != 0 {
                rhs += &cache.get(&l, &full)?.scale(&Q::from_integer(k.into()));
            }
        }
        c.eq(|| String::from("I = [m+n]"), &lhs, &rhs);
        Ok(())
    })();
    Ok(c.finish(res))
}

/// Three-factor form of Littlewood I, with coefficients Σ_ρ c^ρ_{μν} c^λ_{ρκ}.
pub fn check_littlewood_i_three(mu: &Partition, nu: &Partition, kappa: &Partition, x: &SuperMatrix) -> Result<CheckReport> {
    let (m, n) = x.dims();
    let r = (mu.size() + nu.size() + kappa.size()) as usize;
    if r != m + n {
        return Err(Error::Size(format!("|μ|+|ν|+|κ| = {r} ≠ m + n = {}", m + n)));
    }
    let mut c =
        Checker::new("littlewood1-three").param("m", m).param("n", n).param("mu", mu).param("nu", nu).param("kappa", kappa);
    let res = (|| {
        let full = MultiIndex::new((1..=r).collect(), m, n)?;
        let mut cache = ImmCache::new(x);
        let shapes = [mu.clone(), nu.clone(), kappa.clone()];
        let sizes: Vec<usize> = shapes.iter().map(|s| s.size() as usize).collect();
        let mut lhs = SuperPoly::zero();
        for split in multiset_splits(&full, &sizes)? {
            lhs += &product_over_split(&mut cache, &shapes, &split)?.0;
        }
        let mut coeff: BTreeMap<Partition, i64> = BTreeMap::new();
        for (rho, a) in lr_expansion(mu, nu)? {
            if a == 0 {
                continue;
            }
            for (l, b) in lr_expansion(&rho, kappa)? {
                *coeff.entry(l).or_insert(0) += a * b;
            }
        }
        let mut rhs = SuperPoly::zero();
        for (l, k) in coeff {
            if k != 0 {
                rhs += &cache.get(&l, &full)?.scale(&Q::from_integer(k.into()));
            }
        }
        c.eq(|| String::from("I = [m+n]"), &lhs, &rhs);
        Ok(())
    })();
    Ok(c.finish(res))
}

/// Σ_{(I₁,I₂)} Imm_μ Imm_ν/(α(I₁)α(I₂)) = Σ_λ c^λ_{μν} Imm_λ(X_I)/α(I), per sorted I and summed.
pub fn check_littlewood_ii(mu: &Partition, nu: &Partition, x: &SuperMatrix) -> Result<CheckReport> {
    let (m, n) = x.dims();
    let r = (mu.size() + nu.size()) as usize;
    let mut c = Checker::new("littlewood2").param("m", m).param("n", n).param("mu", mu).param("nu", nu);
    let res = (|| {
        let lr = lr_expansion(mu, nu)?;
        let mut cache = ImmCache::new(x);
        let shapes = [mu.clone(), nu.clone()];
        let (mut tl, mut tr) = (SuperPoly::zero(), SuperPoly::zero());
        for i in MultiIndex::sorted_all(r, m, n) {
            let mut lhs = SuperPoly::zero();
            for split in multiset_splits(&i, &[mu.size() as usize, nu.size() as usize])? {
                let (p, a) = product_over_split(&mut cache, &shapes, &split)?;
                lhs += &frac(&p, a);
            }
            let mut rhs = SuperPoly::zero();
            for (l, k) in &lr {
                if *k != 0 {
                    rhs += &frac(&cache.get(l, &i)?, i.alpha()).scale(&Q::from_integer((*k).into()));
                }
            }
            c.eq(|| format!("I={}", idx_str(&i)), &lhs, &rhs);
            tl += &lhs;
            tr += &rhs;
        }
        c.eq(|| String::from("sum over I"), &tl, &tr);
        Ok(())
    })();
    Ok(c.finish(res))
}

/// Character of S_r induced from the sign (or trivial) character of S_λ, from the coset formula.
pub fn induced_young_character(lambda: &Partition, sign: bool) -> GroupAlgebraElement {
    let r = lambda.size() as usize;
    let mut block = Vec::with_capacity(r);
    for (b, &p) in lambda.parts().iter().enumerate() {
        block.extend(std::iter::repeat_n(b, p as usize));
    }
    let g = sym_group(r);
    let order: u64 = lambda.parts().iter().map(|&p| factorial(p)).product();
    let mut terms = Vec::new();
    for h in g.elements() {
        let mut v = 0i64;
        for s in g.elements() {
            let k = s.inverse().compose(h).compose(s);
            if (1..=r).all(|a| block[k.apply(a) - 1] == block[a - 1]) {
                v += if sign { k.sign() } else { 1 };
            }
        }
        terms.push((h.clone(), Q::new(v.into(), order.into())));
    }
    GroupAlgebraElement::from_terms(r, terms)
}

/// Both generalized Littlewood–Merris–Watkins identities for every sorted I.
pub fn check_lmw(lambda: &Partition, x: &SuperMatrix) -> CheckReport {
    let (m, n) = x.dims();
    let r = lambda.size() as usize;
    let mut c = Checker::new("lmw").param("m", m).param("n", n).param("lambda", lambda);
    let res = (|| {
        let lt = lambda.conjugate();
        for (sign, name) in [(true, "ψ"), (false, "φ")] {
            let ind = induced_young_character(lambda, sign);
            let via_kostka = class_function_element(r, |ct| {
                let mut t = CharacterTable::new();
                let mut s = 0i64;
                for rho in parts_of(r) {
                    let kk = if sign { kostka(&rho.conjugate(), lambda.parts()) } else { kostka(&rho, lambda.parts()) };
                    s += kk.unwrap() as i64 * t.value(&rho, ct).unwrap();
                }
                Q::from_integer(s.into())
            });
            c.truth(ind == via_kostka, || (format!("{name}^{lambda} decomposition"), format!("{ind:?}"), format!("{via_kostka:?}")));
            let shapes: Vec<Partition> = lambda
                .parts()
                .iter()
                .map(|&p| if sign { Partition::new(vec![1; p as usize]) } else { Partition::new(vec![p]) })
                .collect();
            let sizes: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
            let mut cache = ImmCache::new(x);
            for i in MultiIndex::sorted_all(r, m, n) {
                let lhs = super_immanant(&ind, x, &i, &i)?;
                let mut rhs = SuperPoly::zero();
                for split in multiset_splits(&i, &sizes)? {
                    let (p, a) = product_over_split(&mut cache, &shapes, &split)?;
                    rhs += &frac(&p.scale(&Q::from_integer(i.alpha().into())), a);
                }
                c.eq(|| format!("{name}, λᵀ={lt}, I={}", idx_str(&i)), &lhs, &rhs);
            }
        }
        Ok(())
    })();
    c.finish(res)
}

fn alpha_series(x: &SuperMatrix, order: usize, beta: bool) -> Result<TruncatedSeries> {
    let coeffs = (0..=order as i64).map(|k| if beta { beta_k(x, k) } else { alpha_k(x, k) }).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs, order))
}

fn series_eq(c: &mut Checker, label: &str, a: &TruncatedSeries, b: &TruncatedSeries) {
    for k in 0..=a.order().min(b.order()) {
        c.eq(|| format!("{label}, t^{k}"), a.coeff(k), b.coeff(k));
    }
}

/// λ(−t)σ(t) = 1.
pub fn check_macmahon(m: usize, n: usize, order: usize) -> CheckReport {
    let mut c = Checker::new("macmahon").param("m", m).param("n", n).param("order", order);
    let x = generic(m, n);
    let res = (|| {
        let lam = alpha_series(&x, order, false)?;
        let sig = alpha_series(&x, order, true)?;
        series_eq(&mut c, "λ(−t)σ(t)", &series_mul(&lam.negate_variable(), &sig), &TruncatedSeries::one(order));
        Ok(())
    })();
    c.finish(res)
}

/// ∂λ(−t) = −λ(−t)ψ(t) and ∂σ(t) = ψ(t)σ(t), ψ(t) = Σ γ_{k+1} t^k.
pub fn check_newton(m: usize, n: usize, order: usize) -> CheckReport {
    let mut c = Checker::new("newton").param("m", m).param("n", n).param("order", order);
    let x = generic(m, n);
    let res = (|| {
        if order == 0 {
            return Ok(());
        }
        let lam = alpha_series(&x, order, false)?.negate_variable();
        let sig = alpha_series(&x, order, true)?;
        let psi = TruncatedSeries::new((0..order).map(|k| gamma_k(&x, k + 1)).collect::<Result<Vec<_>>>()?, order - 1);
        let lam1 = lam.truncate(order - 1);
        let sig1 = sig.truncate(order - 1);
        series_eq(&mut c, "∂λ(−t) + λ(−t)ψ(t)", &series_derivative(&lam)?, &series_mul(&lam1, &psi).neg());
        series_eq(&mut c, "∂σ(t) − ψ(t)σ(t)", &series_derivative(&sig)?, &series_mul(&psi, &sig1));
        Ok(())
    })();
    c.finish(res)
}

struct AlphaBeta<'a> {
    x: &'a SuperMatrix,
    a: BTreeMap<i64, SuperPoly>,
    b: BTreeMap<i64, SuperPoly>,
}

impl<'a> AlphaBeta<'a> {
    fn new(x: &'a SuperMatrix) -> Self {
        AlphaBeta { x, a: BTreeMap::new(), b: BTreeMap::new() }
    }

    fn alpha(&mut self, k: i64) -> Result<SuperPoly> {
        if let Some(v) = self.a.get(&k) {
            return Ok(v.clone());
        }
        let v = alpha_k(self.x, k)?;
        self.a.insert(k, v.clone());
        Ok(v)
    }

    fn beta(&mut self, k: i64) -> Result<SuperPoly> {
        if let Some(v) = self.b.get(&k) {
            return Ok(v.clone());
        }
        let v = beta_k(self.x, k)?;
        self.b.insert(k, v.clone());
        Ok(v)
    }
}

fn jacobi_trudi<F: FnMut(i64) -> Result<SuperPoly>>(shape: &Partition, mut f: F) -> Result<SuperPoly> {
    let l = shape.len();
    let mut mat = vec![vec![SuperPoly::zero(); l]; l];
    for i in 1..=l {
        for j in 1..=l {
            mat[i - 1][j - 1] = f(shape.part(i) as i64 - i as i64 + j as i64)?;
        }
    }
    Ok(determinant(&mat, &SuperPoly::one()))
}

/// det(α_{λᵀ_i−i+j}) = det(β_{λ_i−i+j}) = str E_T X₁⋯X_r = Σ Imm/α, plus the inverse-Kostka expansions.
pub fn check_goulden_jackson(lambda: &Partition, x: &SuperMatrix) -> CheckReport {
    let (m, n) = x.dims();
    let r = lambda.size();
    let mut c = Checker::new("goulden-jackson").param("m", m).param("n", n).param("lambda", lambda);
    let res = (|| {
        let mut ab = AlphaBeta::new(x);
        let lt = lambda.conjugate();
        let det_a = jacobi_trudi(&lt, |k| ab.alpha(k))?;
        let det_b = jacobi_trudi(lambda, |k| ab.beta(k))?;
        let imm = normalized_immanant_sum(lambda, x)?;
        let tr = idempotent_supertrace(&primitive_idempotent(&StandardTableau::row_reading(lambda)), x)?;
        c.eq(|| String::from("det A vs Σ Imm/α"), &det_a, &imm);
        c.eq(|| String::from("det B vs Σ Imm/α"), &det_b, &imm);
        c.eq(|| String::from("str E_T X vs Σ Imm/α"), &tr, &imm);
        let km = KostkaMatrix::new(r);
        let (mut ea, mut eb) = (SuperPoly::zero(), SuperPoly::zero());
        for mu in parts_of(r as usize) {
            let ka = km.inverse_entry(&mu, &lt)?;
            let kb = km.inverse_entry(&mu, lambda)?;
            if ka != 0 {
                let mut p = SuperPoly::one();
                for &q in mu.parts() {
                    p = &p * &ab.alpha(q as i64)?;
                }
                ea += &p.scale(&Q::from_integer(ka.into()));
            }
            if kb != 0 {
                let mut p = SuperPoly::one();
                for &q in mu.parts() {
                    p = &p * &ab.beta(q as i64)?;
                }
                eb += &p.scale(&Q::from_integer(kb.into()));
            }
        }
        c.eq(|| String::from("inverse-Kostka α expansion vs det A"), &ea, &det_a);
        c.eq(|| String::from("inverse-Kostka β expansion vs det B"), &eb, &det_b);
        Ok(())
    })();
    c.finish(res)
}

/// Σ Imm_{χ^λ}(X_I)/α(I) = Imm_{χ^λ}(Γ_r)/r! with Γ_r the lower Hessenberg matrix of γ's.
pub fn check_hessenberg(lambda: &Partition, x: &SuperMatrix) -> CheckReport {
    let (m, n) = x.dims();
    let r = lambda.size() as usize;
    let mut c = Checker::new("hessenberg").param("m", m).param("n", n).param("lambda", lambda);
    let res = (|| {
        let gam = (1..=r).map(|k| gamma_k(x, k)).collect::<Result<Vec<_>>>()?;
        for a in 0..r {
            for b in a + 1..r {
                c.eq(|| format!("γ_{}γ_{} = γ_{}γ_{}", a + 1, b + 1, b + 1, a + 1), &(&gam[a] * &gam[b]), &(&gam[b] * &gam[a]));
            }
        }
        let entry = |i: usize, j: usize| -> SuperPoly {
            if j <= i {
                gam[i - j].clone()
            } else if j == i + 1 {
                SuperPoly::int(i as i64 + 1)
            } else {
                SuperPoly::zero()
            }
        };
        let mut table = CharacterTable::new();
        let mut imm = SuperPoly::zero();
        for s in sym_group(r).elements() {
            let ch = table.value(lambda, &s.cycle_type())?;
            if ch == 0 {
                continue;
            }
            let mut p = SuperPoly::int(ch);
            for i in 0..r {
                p = &p * &entry(i, s.apply(i + 1) - 1);
            }
            imm += &p;
        }
        let lhs = normalized_immanant_sum(lambda, x)?;
        c.eq(|| String::from("Σ Imm/α vs Imm(Γ_r)/r!"), &lhs, &frac(&imm, factorial(r as u32)));
        Ok(())
    })();
    c.finish(res)
}

fn rank(vectors: &[SuperPoly]) -> usize {
    let mut keys = BTreeMap::new();
    for v in vectors {
        for (k, _) in v.terms() {
            let len = keys.len();
            keys.entry(k.clone()).or_insert(len);
        }
    }
    let mut rows: Vec<Vec<Q>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Q::zero(); keys.len()];
            for (k, c) in v.terms() {
                row[keys[k]] = c.clone();
            }
            row
        })
        .collect();
    let mut rk = 0;
    for col in 0..keys.len() {
        let Some(p) = (rk..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rk, p);
        let inv = rows[rk][col].recip();
        for r in 0..rows.len() {
            if r != rk && !rows[r][col].is_zero() {
                let f = &rows[r][col] * &inv;
                for k in col..keys.len() {
                    let v = &rows[rk][k] * &f;
                    rows[r][k] -= v;
                }
            }
        }
        rk += 1;
    }
    rk
}

/// Φ(Σ_I Imm_{χ^λ}(X_I)/α(I)) = 𝕊_λ(X_m, Y_n) for λ ∈ H(m,n), |λ| ≤ max_r; the images are
/// supersymmetric and linearly independent.
pub fn check_phi(m: usize, n: usize, max_r: usize) -> CheckReport {
    let mut c = Checker::new("phi").param("m", m).param("n", n).param("max_r", max_r);
    let x = generic(m, n);
    let res = (|| {
        let mut images = Vec::new();
        for r in 1..=max_r {
            for l in parts_of(r).into_iter().filter(|l| in_hook(l, m, n, r as u32)) {
                let img = phi_specialize(&normalized_immanant_sum(&l, &x)?, m, n)?;
                c.eq(|| format!("λ={l}"), &img, &schur_super(&l, m, n)?);
                let ss = is_supersymmetric(&img, m, n).unwrap_or(false);
                c.truth(ss, || (format!("λ={l} supersymmetric"), img.to_string(), String::from("supersymmetric")));
                images.push(img);
            }
        }
        let rk = rank(&images);
        c.truth(rk == images.len(), || (String::from("linear independence"), format!("rank {rk}"), format!("{} images", images.len())));
        Ok(())
    })();
    c.finish(res)
}

fn theta_monomials(units: usize, degree: usize) -> Vec<SuperPoly> {
    fn rec(start: usize, units: usize, left: usize, cur: SuperPoly, out: &mut Vec<SuperPoly>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for k in start..=units {
            rec(k + 1, units, left - 1, &cur * &SuperPoly::gen(Generator::theta(k)), out);
        }
    }
    let mut out = Vec::new();
    rec(1, units, degree, SuperPoly::one(), &mut out);
    out
}

fn random_soul<R: Rng>(rng: &mut R, units: usize, degrees: &[usize]) -> SuperPoly {
    let mut s = SuperPoly::zero();
    for &d in degrees {
        for mono in theta_monomials(units, d) {
            s += &mono.scale(&Q::from_integer(rng.gen_range(-1i64..=1).into()));
        }
    }
    s
}

/// A Λ_N point of the generator matrix whose even blocks have upper-triangular bodies with
/// distinct integer diagonals in [−5, 5]; souls have coefficients in {−1, 0, 1}.
pub fn random_point<R: Rng>(m: usize, n: usize, units: usize, rng: &mut R) -> Result<GrassmannPoint> {
    let d = m + n;
    let mut pool: Vec<i64> = (-5..=5).collect();
    pool.shuffle(rng);
    let mut pt = GrassmannPoint::new(units);
    for i in 1..=d {
        for j in 1..=d {
            let g = Generator::matrix(i, j, m);
            let v = if g.parity.is_odd() {
                random_soul(rng, units, &[1, 3])
            } else {
                let body = if i == j {
                    pool[i - 1]
                } else if i < j {
                    rng.gen_range(-5i64..=5)
                } else {
                    0
                };
                SuperPoly::int(body) + random_soul(rng, units, &[2, 4])
            };
            pt.assign(g, v)?;
        }
    }
    Ok(pt)
}

/// Littlewood III at one Λ_N point: Σ Imm/α(X) = str E^λ X₁⋯X_r = 𝕊_λ(ω, −ϖ) with (ω | ϖ) the
/// eigenvalues of the operator matrix, for all λ ⊢ r ≤ max_r; plus β_r, α_r, γ_r.
pub fn check_littlewood_iii(m: usize, n: usize, max_r: usize, pt: &GrassmannPoint) -> CheckReport {
    let mut c = Checker::new("littlewood3").param("m", m).param("n", n).param("max_r", max_r);
    let res = (|| {
        let xp = generic(m, n).evaluate(pt)?;
        let xh = operator_matrix(&xp);
        let dec = match eigen_decompose(&xh) {
            Ok(d) => d,
            Err(Error::DegenerateSpectrum(why)) => {
                c.report.skipped.push(format!("degenerate spectrum: {why}"));
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        let resid = dec.residual(&xh);
        let zero = resid.entries().iter().flatten().all(|p| p.is_zero());
        c.truth(zero, || (String::from("eigen residual"), format!("{:?}", resid.entries()), String::from("0")));
        let omega = dec.omega.clone();
        let neg_varpi: Vec<SuperPoly> = dec.varpi.iter().map(|v| -v.clone()).collect();
        let at = |f: &SuperPoly| evaluate_sym(f, &omega, &neg_varpi);
        for r in 1..=max_r {
            for l in parts_of(r) {
                let s = at(&schur_super(&l, m, n)?)?;
                c.eq(|| format!("λ={l}: Σ Imm/α"), &normalized_immanant_sum(&l, &xp)?, &s);
                let e = primitive_idempotent(&StandardTableau::row_reading(&l));
                c.eq(|| format!("λ={l}: str E X"), &idempotent_supertrace(&e, &xp)?, &s);
            }
            let ri = r as i64;
            c.eq(|| format!("β_{r}"), &beta_k(&xp, ri)?, &at(&schur_super(&Partition::new(vec![r as u32]), m, n)?)?);
            c.eq(|| format!("α_{r}"), &alpha_k(&xp, ri)?, &at(&schur_super(&Partition::new(vec![1; r]), m, n)?)?);
            c.eq(|| format!("γ_{r}"), &gamma_k(&xp, r)?, &at(&power_sum(r as u32, m, n)?)?);
        }
        Ok(())
    })();
    c.finish(res)
}

/// `trials` seeded Λ₄ points.
pub fn check_littlewood_iii_random(m: usize, n: usize, max_r: usize, seed: u64, trials: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts = Vec::new();
    for t in 0..trials {
        let rep = match random_point(m, n, 4, &mut rng) {
            Ok(pt) => check_littlewood_iii(m, n, max_r, &pt),
            Err(e) => Checker::new("littlewood3").finish(Err(e)),
        };
        let mut rep = rep;
        rep.params.push((String::from("trial"), t.to_string()));
        parts.push(rep);
    }
    let params = vec![
        (String::from("m"), m.to_string()),
        (String::from("n"), n.to_string()),
        (String::from("max_r"), max_r.to_string()),
        (String::from("seed"), seed.to_string()),
        (String::from("trials"), trials.to_string()),
    ];
    CheckReport::merge("littlewood3", params, parts)
}

// ---------------------------------------------------------------------------
// Kernel checks

fn random_homogeneous<R: Rng>(rng: &mut R, odd: bool) -> SuperPoly {
    let mut p = SuperPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut t = SuperPoly::int(rng.gen_range(1i64..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
        for k in 1..=2 {
            t = &t * &SuperPoly::gen(Generator::formal(k)).pow(rng.gen_range(0..=2));
        }
        let mut thetas: Vec<usize> = (1..=5).collect();
        thetas.shuffle(rng);
        let mut deg = rng.gen_range(0..=3usize);
        if (deg % 2 == 1) != odd {
            deg += 1;
        }
        for &k in &thetas[..deg] {
            t = &t * &SuperPoly::gen(Generator::theta(k));
        }
        p += &t;
    }
    p
}

/// Supercommutativity, associativity and distributivity on seeded random homogeneous elements.
pub fn check_ring_axioms(seed: u64, cases: usize) -> CheckReport {
    let mut c = Checker::new("ring-axioms").param("seed", seed).param("cases", cases);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..cases {
        let (pa, pb) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
        let a = random_homogeneous(&mut rng, pa);
        let b = random_homogeneous(&mut rng, pb);
        let pc = rng.gen_bool(0.5);
        let cc = random_homogeneous(&mut rng, pc);
        let ba = &b * &a;
        let swapped = if pa && pb { -ba } else { ba };
        c.eq(|| format!("case {k}: ab = (−1)^(|a||b|) ba"), &(&a * &b), &swapped);
        c.eq(|| format!("case {k}: (ab)c = a(bc)"), &(&(&a * &b) * &cc), &(&a * &(&b * &cc)));
        c.eq(|| format!("case {k}: a(b+c) = ab + ac"), &(&a * &(&b + &cc)), &(&(&a * &b) + &(&a * &cc)));
    }
    c.finish(Ok(()))
}

/// Σ_T E_T = 1 and E_T E_S = δ_{TS} E_T over all standard tableaux of size r ≤ max_r.
pub fn check_idempotents(max_r: usize) -> CheckReport {
    let mut c = Checker::new("idempotents").param("max_r", max_r);
    for r in 1..=max_r {
        let ts: Vec<StandardTableau> = parts_of(r).iter().flat_map(enumerate_syt).collect();
        let es: Vec<GroupAlgebraElement> = ts.iter().map(primitive_idempotent).collect();
        let sum = es.iter().fold(GroupAlgebraElement::zero(r), |a, e| a.add(e));
        let id = GroupAlgebraElement::identity(r);
        c.truth(sum == id, || (format!("r={r}: Σ E_T"), format!("{sum:?}"), String::from("1")));
        for (a, ea) in es.iter().enumerate() {
            for (b, eb) in es.iter().enumerate() {
                let p = ea.mul(eb);
                let want = if a == b { ea.clone() } else { GroupAlgebraElement::zero(r) };
                c.truth(p == want, || (format!("E_{:?} E_{:?}", ts[a].rows(), ts[b].rows()), format!("{p:?}"), format!("{want:?}")));
            }
        }
    }
    c.finish(Ok(()))
}

/// Row and column orthogonality of the character table, r ≤ max_r.
pub fn check_character_orthogonality(max_r: usize) -> CheckReport {
    let mut c = Checker::new("characters").param("max_r", max_r);
    let res = (|| {
        let mut t = CharacterTable::new();
        for r in 1..=max_r {
            let ps = parts_of(r);
            let rf = factorial(r as u32) as i128;
            let mut tab = Vec::new();
            for l in &ps {
                tab.push(ps.iter().map(|ct| t.value(l, ct)).collect::<Result<Vec<i64>>>()?);
            }
            let sizes: Vec<i128> = ps.iter().map(|ct| class_size(ct) as i128).collect();
            for a in 0..ps.len() {
                for b in 0..ps.len() {
                    let row: i128 = (0..ps.len()).map(|k| sizes[k] * tab[a][k] as i128 * tab[b][k] as i128).sum();
                    let want = if a == b { rf } else { 0 };
                    c.truth(row == want, || (format!("rows {} {}", ps[a], ps[b]), row.to_string(), want.to_string()));
                    let col: i128 = (0..ps.len()).map(|k| tab[k][a] as i128 * tab[k][b] as i128).sum();
                    let want = if a == b { rf / sizes[a] } else { 0 };
                    c.truth(col == want, || (format!("columns {} {}", ps[a], ps[b]), col.to_string(), want.to_string()));
                }
            }
        }
        Ok(())
    })();
    c.finish(res)
}

/// Closed-form chain sign, slot-by-slot Koszul action and the tensor-operator product agree.
pub fn check_chain_oracles(m: usize, n: usize, max_r: usize) -> CheckReport {
    let mut c = Checker::new("chain-oracles").param("m", m).param("n", n).param("max_r", max_r);
    let x = generic(m, n);
    let res = (|| {
        for r in 1..=max_r {
            let op = TensorOperator::chain(&x, r);
            for i in MultiIndex::all(r, m, n) {
                for j in MultiIndex::all(r, m, n) {
                    let a = chain_coefficient(&x, &i, &j)?;
                    c.eq(|| format!("slots I={} J={}", idx_str(&i), idx_str(&j)), &a, &chain_coefficient_slots(&x, &i, &j)?);
                    c.eq(|| format!("operator I={} J={}", idx_str(&i), idx_str(&j)), &a, &op.coefficient(i.entries(), j.entries()));
                }
            }
        }
        Ok(())
    })();
    c.finish(res)
}

/// At n = 0 the super-immanant is the classical Σ_σ χ^λ(σ) Π_a x_{i_σ(a), j_a}.
pub fn check_classical_degeneration(max_m: usize, max_r: usize) -> CheckReport {
    let mut c = Checker::new("classical").param("max_m", max_m).param("max_r", max_r);
    let res = (|| {
        let mut t = CharacterTable::new();
        for m in 1..=max_m {
            let x = generic(m, 0);
            for r in 1..=max_r {
                let g = sym_group(r);
                let idx = MultiIndex::sorted_all(r, m, 0);
                for l in parts_of(r) {
                    let ch = character_element(&l);
                    let vals = g.elements().iter().map(|s| t.value(&l, &s.cycle_type())).collect::<Result<Vec<i64>>>()?;
                    for i in &idx {
                        for j in &idx {
                            let mut want = SuperPoly::zero();
                            for (s, &v) in g.elements().iter().zip(&vals) {
                                let mut p = SuperPoly::int(v);
                                for a in 1..=r {
                                    p = &p * x.get(i.entries()[s.apply(a) - 1], j.entries()[a - 1]);
                                }
                                want += &p;
                            }
                            let got = super_immanant(&ch, &x, i, j)?;
                            c.eq(|| format!("m={m} λ={l} I={} J={}", idx_str(i), idx_str(j)), &got, &want);
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    c.finish(res)
}

// ---------------------------------------------------------------------------
// Sweeps and the dispatcher

fn base_params(m: usize, n: usize, max_r: usize) -> Vec<(String, String)> {
    vec![(String::from("m"), m.to_string()), (String::from("n"), n.to_string()), (String::from("max_r"), max_r.to_string())]
}

/// Littlewood I for every (μ, ν) with |μ|+|ν| = m+n, plus the three-factor form with single boxes.
pub fn check_littlewood_i_all(m: usize, n: usize) -> CheckReport {
    let x = generic(m, n);
    let d = m + n;
    let mut parts = Vec::new();
    for a in 0..=d {
        for mu in parts_of(a) {
            for nu in parts_of(d - a) {
                parts.push(check_littlewood_i(&mu, &nu, &x).unwrap_or_else(|e| Checker::new("littlewood1").finish(Err(e))));
            }
        }
    }
    if d >= 3 {
        let one = Partition::new(vec![1]);
        let rest = Partition::new(vec![(d - 2) as u32]);
        parts.push(check_littlewood_i_three(&one, &one, &rest, &x).unwrap_or_else(|e| Checker::new("littlewood1").finish(Err(e))));
    }
    CheckReport::merge("littlewood1", base_params(m, n, d), parts)
}

pub fn check_littlewood_ii_all(m: usize, n: usize, max_r: usize) -> CheckReport {
    let x = generic(m, n);
    let mut parts = Vec::new();
    for r in 1..=max_r {
        for a in 0..=r {
            for mu in parts_of(a) {
                for nu in parts_of(r - a) {
                    parts.push(check_littlewood_ii(&mu, &nu, &x).unwrap_or_else(|e| Checker::new("littlewood2").finish(Err(e))));
                }
            }
        }
    }
    CheckReport::merge("littlewood2", base_params(m, n, max_r), parts)
}

fn per_shape<F: Fn(&Partition, &SuperMatrix) -> CheckReport>(name: &str, m: usize, n: usize, max_r: usize, f: F) -> CheckReport {
    let x = generic(m, n);
    let parts = (1..=max_r).flat_map(parts_of).map(|l| f(&l, &x)).collect();
    CheckReport::merge(name, base_params(m, n, max_r), parts)
}

pub fn check_lmw_all(m: usize, n: usize, max_r: usize) -> CheckReport {
    per_shape("lmw", m, n, max_r, check_lmw)
}

pub fn check_goulden_jackson_all(m: usize, n: usize, max_r: usize) -> CheckReport {
    per_shape("goulden-jackson", m, n, max_r, check_goulden_jackson)
}

pub fn check_hessenberg_all(m: usize, n: usize, max_r: usize) -> CheckReport {
    per_shape("hessenberg", m, n, max_r, check_hessenberg)
}

/// Parameters shared by every named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub m: usize,
    pub n: usize,
    pub max_r: usize,
    pub order: usize,
    pub seed: u64,
    pub trials: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { m: 1, n: 1, max_r: 3, order: 3, seed: 0, trials: 10 }
    }
}

pub const CHECK_NAMES: [&str; 12] = [
    "vanishing",
    "kostant",
    "schur-weyl",
    "littlewood1",
    "littlewood2",
    "lmw",
    "macmahon",
    "newton",
    "goulden-jackson",
    "littlewood3",
    "hessenberg",
    "phi",
];

/// Runs one named check, or every check for `all`.
pub fn run_check(name: &str, o: &CheckOptions) -> Result<Vec<CheckReport>> {
    let (m, n, r) = (o.m, o.n, o.max_r);
    let rep = match name {
        "vanishing" => check_vanishing(m, n, r),
        "kostant" => check_kostant(m, n, r),
        "schur-weyl" => check_schur_weyl(m, n, r),
        "littlewood1" => check_littlewood_i_all(m, n),
        "littlewood2" => check_littlewood_ii_all(m, n, r),
        "lmw" => check_lmw_all(m, n, r),
        "macmahon" => check_macmahon(m, n, o.order),
        "newton" => check_newton(m, n, o.order),
        "goulden-jackson" => check_goulden_jackson_all(m, n, r),
        "littlewood3" => check_littlewood_iii_random(m, n, r, o.seed, o.trials),
        "hessenberg" => check_hessenberg_all(m, n, r),
        "phi" => check_phi(m, n, r),
        "all" => {
            let mut out = Vec::new();
            for k in CHECK_NAMES {
                out.extend(run_check(k, o)?);
            }
            return Ok(out);
        }
        other => return Err(Error::Domain(format!("unknown check {other:?}; expected one of {:?} or \"all\"", CHECK_NAMES))),
    };
    Ok(vec![rep])
}

/// A fast battery used to confirm that each sign mutation is detected.
pub fn mutation_probe() -> Vec<CheckReport> {
    let mut out = vec![
        check_ring_axioms(7, 40),
        check_chain_oracles(1, 1, 2),
        check_vanishing(1, 1, 3),
        check_kostant(1, 1, 2),
        check_schur_weyl(1, 1, 2),
        check_macmahon(1, 1, 3),
        check_newton(1, 1, 3),
        check_phi(1, 1, 3),
    ];
    out.push(check_goulden_jackson_all(1, 1, 3));
    out.push(check_littlewood_iii_random(1, 1, 2, 1, 2));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superring::q;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn th(k: usize) -> SuperPoly {
        SuperPoly::gen(Generator::theta(k))
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[3])).unwrap(), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
    }

    #[test]
    fn splits_count() {
        let i = MultiIndex::new(vec![1, 1, 2], 1, 1).unwrap();
        let s = multiset_splits(&i, &[1, 2]).unwrap();
        let got: Vec<Vec<Vec<usize>>> = s.iter().map(|v| v.iter().map(|x| x.entries().to_vec()).collect()).collect();
        assert_eq!(got, vec![vec![vec![2], vec![1, 1]], vec![vec![1], vec![1, 2]]]);
        let full = MultiIndex::new(vec![1, 2, 3], 2, 1).unwrap();
        assert_eq!(multiset_splits(&full, &[1, 2]).unwrap().len(), 3);
    }

    #[test]
    fn induced_characters() {
        // ψ^{(1^r)} is the regular character; φ^{(r)} the trivial one
        let reg = induced_young_character(&p(&[1, 1, 1]), true);
        let mut want = GroupAlgebraElement::zero(3);
        want = want.add(&GroupAlgebraElement::identity(3).scale(&q(6)));
        assert_eq!(reg, want);
        let triv = induced_young_character(&p(&[3]), false);
        assert_eq!(triv, character_element(&p(&[3])));
    }

    #[test]
    fn small_checks_pass() {
        assert!(check_vanishing(1, 1, 3).passed);
        assert!(check_macmahon(1, 1, 4).passed);
        assert!(check_newton(1, 1, 4).passed);
        assert!(check_phi(1, 1, 3).passed);
        let x = generic(1, 1);
        assert!(check_littlewood_i(&p(&[1]), &p(&[1]), &x).unwrap().passed);
        assert!(check_littlewood_i(&p(&[2]), &Partition::empty(), &x).unwrap().passed);
        assert!(check_littlewood_i(&p(&[2]), &p(&[1]), &x).is_err());
        assert!(check_littlewood_ii(&p(&[2]), &p(&[1]), &x).unwrap().passed);
        assert!(check_lmw(&p(&[2, 1]), &x).passed);
        for l in [p(&[1]), p(&[2, 1]), p(&[2, 2])] {
            let r = check_goulden_jackson(&l, &x);
            assert!(r.passed, "{r:?}");
        }
        for l in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let r = check_hessenberg(&l, &x);
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn littlewood_iii_fixed_point() {
        // a = 2, d = 1, off-diagonal θ₁, θ₂
        let mut pt = GrassmannPoint::new(2);
        pt.assign(Generator::matrix(1, 1, 1), SuperPoly::int(2)).unwrap();
        pt.assign(Generator::matrix(1, 2, 1), th(1)).unwrap();
        pt.assign(Generator::matrix(2, 1, 1), th(2)).unwrap();
        pt.assign(Generator::matrix(2, 2, 1), SuperPoly::int(1)).unwrap();
        let r = check_littlewood_iii(1, 1, 2, &pt);
        assert!(r.passed, "{r:?}");
        // diagonal point: classical evaluation
        let mut pt = GrassmannPoint::new(0);
        for (i, j, v) in [(1, 1, 3), (1, 2, 0), (2, 1, 0), (2, 2, -2)] {
            pt.assign(Generator::matrix(i, j, 1), SuperPoly::int(v)).unwrap();
        }
        let r = check_littlewood_iii(1, 1, 3, &pt);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn failure_carries_witness() {
        let mut c = Checker::new("demo");
        c.eq(|| String::from("case"), &SuperPoly::int(1), &SuperPoly::int(2));
        let r = c.finish(Ok(()));
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!(w.case, "case");
        assert!(w.difference.is_some());
    }

    #[test]
    fn deterministic_reports() {
        assert_eq!(check_littlewood_iii_random(1, 1, 2, 5, 2), check_littlewood_iii_random(1, 1, 2, 5, 2));
        assert!(run_check("nope", &CheckOptions::default()).is_err());
    }
}
