//! Supersymmetric polynomials in commuting variables x₁…x_m, y₁…y_n: power sums,
//! the generating coefficients 𝕊_k, Jacobi–Trudi Schur functions 𝕊_λ, the
//! supersymmetry test and the diagonal specialization Φ.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::superimm::determinant;
use crate::superring::{series_invert, series_mul, Generator, SuperPoly, TruncatedSeries};
use crate::tableaux::Partition;

/// A SuperPoly in the even generators `x_i`, `y_j`.
pub type SymPoly = SuperPoly;

pub fn x(i: usize) -> SymPoly {
    SuperPoly::gen(Generator::sym_x(i))
}

pub fn y(j: usize) -> SymPoly {
    SuperPoly::gen(Generator::sym_y(j))
}

/// p^{(r)} = Σ x_i^r + (−1)^{r−1} Σ y_j^r.
pub fn power_sum(r: u32, m: usize, n: usize) -> Result<SymPoly> {
    if r == 0 {
        return Err(Error::Domain(String::from("power sums start at r = 1")));
    }
    let mut s = SuperPoly::zero();
    for i in 1..=m {
        s += &x(i).pow(r);
    }
    for j in 1..=n {
        let t = y(j).pow(r);
        s += &if r % 2 == 1 { t } else { -t };
    }
    Ok(s)
}

/// Π(1 − x_i t)⁻¹ Π(1 + y_j t) to the given order.
pub fn s_hat_series(m: usize, n: usize, order: usize) -> Result<TruncatedSeries> {
    let mut den = TruncatedSeries::one(order);
    for i in 1..=m {
        den = series_mul(&den, &TruncatedSeries::new(vec![SuperPoly::one(), -x(i)], order));
    }
    let mut num = TruncatedSeries::one(order);
    for j in 1..=n {
        num = series_mul(&num, &TruncatedSeries::new(vec![SuperPoly::one(), y(j)], order));
    }
    Ok(series_mul(&series_invert(&den)?, &num))
}

/// 𝕊_k; zero for k < 0.
pub fn s_hat(k: i64, m: usize, n: usize) -> Result<SymPoly> {
    if k < 0 {
        return Ok(SuperPoly::zero());
    }
    Ok(s_hat_series(m, n, k as usize)?.coeff(k as usize).clone())
}

/// 𝕊_λ = det(𝕊_{λ_i − i + j}).
pub fn schur_super(lambda: &Partition, m: usize, n: usize) -> Result<SymPoly> {
    let l = lambda.len();
    if l == 0 {
        return Ok(SuperPoly::one());
    }
    let top = lambda.part(1) as usize + l;
    let series = s_hat_series(m, n, top)?;
    let s = |k: i64| if k < 0 || k as usize > top { SuperPoly::zero() } else { series.coeff(k as usize).clone() };
    let mat: Vec<Vec<SymPoly>> =
        (1..=l).map(|i| (1..=l).map(|j| s(lambda.part(i) as i64 - i as i64 + j as i64)).collect()).collect();
    Ok(determinant(&mat, &SuperPoly::one()))
}

fn swap_vars(f: &SymPoly, a: Generator, b: Generator) -> Result<SymPoly> {
    f.substitute(|g| {
        Some(if g == a {
            SuperPoly::gen(b)
        } else if g == b {
            SuperPoly::gen(a)
        } else {
            SuperPoly::gen(g)
        })
    })
}

/// S_m × S_n invariance, then t-independence of f(x₁ = t, y₁ = −t).
pub fn is_supersymmetric(f: &SymPoly, m: usize, n: usize) -> Result<bool> {
    for i in 1..m {
        if swap_vars(f, Generator::sym_x(i), Generator::sym_x(i + 1))? != *f {
            return Err(Error::Domain(format!("not invariant under x_{i} ↔ x_{}", i + 1)));
        }
    }
    for j in 1..n {
        if swap_vars(f, Generator::sym_y(j), Generator::sym_y(j + 1))? != *f {
            return Err(Error::Domain(format!("not invariant under y_{j} ↔ y_{}", j + 1)));
        }
    }
    if m == 0 || n == 0 {
        return Ok(true);
    }
    let t = Generator::formal(0);
    let g = f.substitute(|h| {
        Some(if h == Generator::sym_x(1) {
            SuperPoly::gen(t)
        } else if h == Generator::sym_y(1) {
            -SuperPoly::gen(t)
        } else {
            SuperPoly::gen(h)
        })
    })?;
    Ok(g.derivative_even(t).is_zero())
}

/// Φ: x_{ii} ↦ x_i (i ≤ m), x_{m+j,m+j} ↦ −y_j, off-diagonal x_{ij} ↦ 0.
pub fn phi_specialize(p: &SuperPoly, m: usize, n: usize) -> Result<SymPoly> {
    p.substitute(|g| match g.matrix_index() {
        Some((i, j)) if i != j => Some(SuperPoly::zero()),
        Some((i, _)) if i <= m => Some(x(i)),
        Some((i, _)) if i <= m + n => Some(-y(i - m)),
        _ => Some(SuperPoly::gen(g)),
    })
}

/// f(x₁..x_m, y₁..y_n) at the given values (elements of any supercommutative ring).
pub fn evaluate_sym(f: &SymPoly, xs: &[SuperPoly], ys: &[SuperPoly]) -> Result<SuperPoly> {
    f.substitute(|g| {
        for (i, v) in xs.iter().enumerate() {
            if g == Generator::sym_x(i + 1) {
                return Some(v.clone());
            }
        }
        for (j, v) in ys.iter().enumerate() {
            if g == Generator::sym_y(j + 1) {
                return Some(v.clone());
            }
        }
        None
    })
    .map_err(|_| Error::Unassigned(String::from("a variable of f has no value")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{in_hook, partitions};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, 2, 1).unwrap(), x(1) + x(2) + y(1));
        assert_eq!(power_sum(2, 1, 1).unwrap(), &x(1) * &x(1) - &y(1) * &y(1));
        for r in 1..=6 {
            assert!(is_supersymmetric(&power_sum(r, 2, 2).unwrap(), 2, 2).unwrap());
        }
    }

    #[test]
    fn s_hat_examples() {
        // n = 0: h_k; m = 0: e_k
        let h2 = &x(1) * &x(1) + &x(1) * &x(2) + &x(2) * &x(2);
        assert_eq!(s_hat(2, 2, 0).unwrap(), h2);
        assert_eq!(s_hat(2, 0, 3).unwrap(), &y(1) * &y(2) + &y(1) * &y(3) + &y(2) * &y(3));
        assert_eq!(s_hat(3, 0, 2).unwrap(), SuperPoly::zero());
        assert_eq!(s_hat(0, 1, 1).unwrap(), SuperPoly::one());
        for k in 1..=5 {
            assert_eq!(s_hat(k, 1, 1).unwrap(), &x(1).pow(k as u32 - 1) * &(x(1) + y(1)));
        }
    }

    #[test]
    fn generating_function_identity() {
        let (m, n, order) = (2, 2, 6);
        let s = s_hat_series(m, n, order).unwrap();
        let mut lhs = s;
        for i in 1..=m {
            lhs = series_mul(&lhs, &TruncatedSeries::new(vec![SuperPoly::one(), -x(i)], order));
        }
        let mut rhs = TruncatedSeries::one(order);
        for j in 1..=n {
            rhs = series_mul(&rhs, &TruncatedSeries::new(vec![SuperPoly::one(), y(j)], order));
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_super(&p(&[3]), 1, 1).unwrap(), s_hat(3, 1, 1).unwrap());
        assert_eq!(schur_super(&p(&[1, 1]), 1, 1).unwrap(), &y(1) * &(x(1) + y(1)));
        assert!(schur_super(&p(&[2, 2]), 1, 1).unwrap().is_zero());
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            for r in 1..=5 {
                for l in partitions(r) {
                    let s = schur_super(&l, m, n).unwrap();
                    assert_eq!(s.is_zero(), !in_hook(&l, m, n, r), "{l} ({m}|{n})");
                    assert!(is_supersymmetric(&s, m, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn supersymmetry_test() {
        assert!(is_supersymmetric(&x(1), 2, 0).is_err());
        assert!(is_supersymmetric(&(x(1) + y(1)), 1, 1).unwrap());
        assert!(!is_supersymmetric(&(x(1) - y(1)), 1, 1).unwrap());
    }

    #[test]
    fn phi_examples() {
        let m = 1;
        let x11 = SuperPoly::gen(Generator::matrix(1, 1, m));
        let x22 = SuperPoly::gen(Generator::matrix(2, 2, m));
        let x12 = SuperPoly::gen(Generator::matrix(1, 2, m));
        assert_eq!(phi_specialize(&(x11.clone() - x22.clone()), 1, 1).unwrap(), x(1) + y(1));
        assert!(phi_specialize(&(&x12 * &x11), 1, 1).unwrap().is_zero());
    }
}
