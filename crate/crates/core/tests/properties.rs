//! Property tests for the algebraic kernel and the remaining module invariants.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superimmanant::superimm::{alpha_k, berezinian_series, MultiIndex, SuperMatrix, TensorOperator};
use superimmanant::superring::{
    evaluate, series_invert, series_mul, Generator, GrassmannPoint, Parity, SuperPoly, TruncatedSeries,
};
use superimmanant::supersym::{s_hat, x, y};
use superimmanant::symgroup::{character_element, primitive_idempotent, sym_group, GroupAlgebraElement};
use superimmanant::tableaux::{dim, enumerate_syt, factorial, hook_product, partitions, weak_compositions};
use superimmanant::verify::{check_littlewood_iii_random, random_point};

/// (coefficient, exponents of two even formal variables, subset of θ₁..θ₅ as a bitmask)
type Term = (i64, u32, u32, u8);

fn build(terms: &[Term], parity: u32) -> SuperPoly {
    let mut p = SuperPoly::zero();
    for &(c, e1, e2, mask) in terms {
        let mut mask = mask & 0x1f;
        if mask.count_ones() % 2 != parity {
            mask ^= 1;
        }
        let mut t = SuperPoly::int(c);
        t = &t * &SuperPoly::gen(Generator::formal(1)).pow(e1);
        t = &t * &SuperPoly::gen(Generator::formal(2)).pow(e2);
        for k in 0..5 {
            if mask & (1 << k) != 0 {
                t = &t * &SuperPoly::gen(Generator::theta(k + 1));
            }
        }
        p += &t;
    }
    p
}

fn terms() -> impl Strategy<Value = Vec<Term>> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3, any::<u8>()), 0..4)
}

/// Elements of Λ₅ of the given parity: the formal exponents are dropped.
fn grassmann(terms: &[Term], parity: u32) -> SuperPoly {
    build(&terms.iter().map(|&(c, _, _, m)| (c, 0, 0, m)).collect::<Vec<_>>(), parity)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn supercommutative(a in terms(), b in terms(), pa in 0u32..2, pb in 0u32..2) {
        let (a, b) = (build(&a, pa), build(&b, pb));
        let ba = &b * &a;
        prop_assert_eq!(&a * &b, if pa * pb == 1 { -ba } else { ba });
    }

    #[test]
    fn associative_distributive(a in terms(), b in terms(), c in terms(), p in 0u32..8) {
        let (a, b, c) = (build(&a, p & 1), build(&b, (p >> 1) & 1), build(&c, (p >> 2) & 1));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in terms(), v in terms(), w in terms(), z in terms()) {
        // polynomials in two even and two odd abstract generators
        let (e1, e2) = (Generator::formal(7), Generator::formal(8));
        let (o1, o2) = (Generator::new(11, Parity::Odd), Generator::new(12, Parity::Odd));
        let mut pt = GrassmannPoint::new(5);
        pt.assign(e1, grassmann(&u, 0)).unwrap();
        pt.assign(e2, grassmann(&v, 0)).unwrap();
        pt.assign(o1, grassmann(&w, 1)).unwrap();
        pt.assign(o2, grassmann(&z, 1)).unwrap();
        let g = |k: Generator| SuperPoly::gen(k);
        let a = &(&g(e1) * &g(o1)) + &(&g(e2) * &g(e2));
        let b = &(&g(o2) + &g(o1)) + &(&g(e1) * &g(o2));
        let ea = evaluate(&a, &pt).unwrap();
        let eb = evaluate(&b, &pt).unwrap();
        prop_assert_eq!(evaluate(&(&a * &b), &pt).unwrap(), &ea * &eb);
        prop_assert!(eb.is_zero() || eb.homogeneous_parity() == Some(Parity::Odd));
    }

    #[test]
    fn series_inverse(c0 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), soul in terms(), rest in prop::collection::vec(terms(), 0..4), order in 0usize..5) {
        // unit constant term: nonzero rational plus a nilpotent even part
        let nil: Vec<Term> = soul.iter().map(|&(c, _, _, m)| (c, 0, 0, m | 2)).collect();
        let mut coeffs = vec![SuperPoly::int(c0) + build(&nil, 0)];
        coeffs.extend(rest.iter().map(|t| build(t, 0)));
        let f = TruncatedSeries::new(coeffs, order);
        let g = series_invert(&f).unwrap();
        prop_assert!(series_mul(&f, &g).is_one());
    }

    #[test]
    fn reports_are_deterministic(seed in 0u64..1000) {
        prop_assert_eq!(check_littlewood_iii_random(1, 1, 2, seed, 1), check_littlewood_iii_random(1, 1, 2, seed, 1));
    }
}

#[test]
fn hook_length_formula() {
    for r in 1..=8 {
        for l in partitions(r) {
            assert_eq!(hook_product(&l) * dim(&l), factorial(r), "{l}");
            assert_eq!(enumerate_syt(&l).len() as u64, dim(&l));
        }
    }
}

#[test]
fn conjugation_sum_of_idempotent_is_character() {
    for r in 1..=4u32 {
        for l in partitions(r) {
            for t in enumerate_syt(&l) {
                assert_eq!(primitive_idempotent(&t).conjugation_sum(), character_element(&l), "{:?}", t.rows());
            }
        }
    }
}

#[test]
fn orthogonality_sampled_at_r5() {
    let ts: Vec<_> = partitions(5).iter().flat_map(enumerate_syt).collect();
    for (a, b) in [(0, 0), (3, 3), (3, 4), (10, 2), (25, 24), (12, 12), (7, 19)] {
        let p = primitive_idempotent(&ts[a]).mul(&primitive_idempotent(&ts[b]));
        if a == b {
            assert_eq!(p, primitive_idempotent(&ts[a]));
        } else {
            assert!(p.is_zero());
        }
    }
}

#[test]
fn permutation_operators_form_a_representation() {
    for (m, n) in [(1, 1), (2, 1)] {
        for r in 1..=3 {
            let g = sym_group(r);
            for s in g.elements() {
                for t in g.elements() {
                    let lhs = TensorOperator::from_permutation(s, m, n).compose(&TensorOperator::from_permutation(t, m, n));
                    assert_eq!(lhs, TensorOperator::from_permutation(&s.compose(t), m, n));
                }
            }
            let e = GroupAlgebraElement::identity(r);
            assert_eq!(TensorOperator::from_group_element(&e, m, n), TensorOperator::identity(r, m, n));
        }
    }
}

#[test]
fn alphas_commute() {
    let x = SuperMatrix::generator(1, 1);
    let al: Vec<SuperPoly> = (0..=5).map(|k| alpha_k(&x, k).unwrap()).collect();
    for j in 1..=5 {
        for k in 1..=6 - j {
            assert_eq!(&al[j] * &al[k], &al[k] * &al[j]);
        }
    }
}

#[test]
fn berezinian_series_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (m, n) in [(1, 1), (2, 1)] {
        for _ in 0..10 {
            let pt = random_point(m, n, 4, &mut rng).unwrap();
            let xp = SuperMatrix::generator(m, n).evaluate(&pt).unwrap();
            let s = berezinian_series(&xp, 3).unwrap();
            for k in 0..=3 {
                let a = alpha_k(&xp, k as i64).unwrap();
                assert_eq!(*s.coeff(k), if k % 2 == 0 { a } else { -a });
            }
        }
    }
}

#[test]
fn duality_degenerations() {
    for k in 0..=6u32 {
        // h_k(x₁,x₂,x₃) as a sum over exponent vectors
        let mut h = SuperPoly::zero();
        for c in weak_compositions(k, 3) {
            let mut t = SuperPoly::one();
            for (i, &e) in c.0.iter().enumerate() {
                t = &t * &x(i + 1).pow(e);
            }
            h += &t;
        }
        assert_eq!(s_hat(k as i64, 3, 0).unwrap(), h, "h_{k}");
        // e_k(y₁..y₄) over k-subsets
        let mut e = SuperPoly::zero();
        for i in MultiIndex::sorted_all(k as usize, 4, 0) {
            if i.entries().windows(2).all(|w| w[0] < w[1]) {
                e += &i.entries().iter().fold(SuperPoly::one(), |a, &j| &a * &y(j));
            }
        }
        assert_eq!(s_hat(k as i64, 0, 4).unwrap(), e, "e_{k}");
    }
}
