//! Free supercommutative ℚ-algebras, truncated power series over them, and
//! evaluation at points of a finite Grassmann algebra Λ_N.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mutation::{self, Mutation};
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u32) -> Parity {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() + o.bit())
    }
}

/// Reserved id ranges. Ids order the odd part of every monomial.
pub mod ids {
    pub const MATRIX: u32 = 1_000_000;
    pub const THETA: u32 = 2_000_000;
    pub const SYM_X: u32 = 3_000_000;
    pub const SYM_Y: u32 = 3_100_000;
    pub const FORMAL: u32 = 4_000_000;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub id: u32,
    pub parity: Parity,
}

impl Generator {
    pub const fn new(id: u32, parity: Parity) -> Self {
        Generator { id, parity }
    }

    /// x_{ij} of the generator supermatrix (1-based), parity ī + j̄.
    pub fn matrix(i: usize, j: usize, m: usize) -> Self {
        let p = Parity::from_bit((i > m) as u32 + (j > m) as u32);
        Generator::new(ids::MATRIX + (i as u32) * 1000 + j as u32, p)
    }

    /// The k-th anticommuting unit θ_k of Λ_N (1-based).
    pub fn theta(k: usize) -> Self {
        Generator::new(ids::THETA + k as u32, Parity::Odd)
    }

    pub fn sym_x(i: usize) -> Self {
        Generator::new(ids::SYM_X + i as u32, Parity::Even)
    }

    pub fn sym_y(j: usize) -> Self {
        Generator::new(ids::SYM_Y + j as u32, Parity::Even)
    }

    /// A formal even variable outside every other range.
    pub fn formal(k: usize) -> Self {
        Generator::new(ids::FORMAL + k as u32, Parity::Even)
    }

    pub fn is_theta(&self) -> bool {
        (ids::THETA..ids::SYM_X).contains(&self.id)
    }

    /// (i, j) when this is a matrix generator.
    pub fn matrix_index(&self) -> Option<(usize, usize)> {
        if (ids::MATRIX..ids::THETA).contains(&self.id) {
            let k = self.id - ids::MATRIX;
            Some(((k / 1000) as usize, (k % 1000) as usize))
        } else {
            None
        }
    }

    pub fn default_name(&self) -> String {
        let id = self.id;
        if let Some((i, j)) = self.matrix_index() {
            if i < 10 && j < 10 {
                format!("x{i}{j}")
            } else {
                format!("x{i}_{j}")
            }
        } else if self.is_theta() {
            format!("th{}", id - ids::THETA)
        } else if (ids::SYM_X..ids::SYM_Y).contains(&id) {
            format!("x_{}", id - ids::SYM_X)
        } else if (ids::SYM_Y..ids::FORMAL).contains(&id) {
            format!("y_{}", id - ids::SYM_Y)
        } else if id >= ids::FORMAL {
            format!("t{}", id - ids::FORMAL)
        } else {
            format!("g{id}")
        }
    }
}

/// Even part: sorted (generator, exponent ≥ 1); odd part: strictly increasing ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SuperMonomial {
    even: Vec<(Generator, u32)>,
    odd: Vec<Generator>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial::default()
    }

    pub fn even_part(&self) -> &[(Generator, u32)] {
        &self.even
    }

    pub fn odd_part(&self) -> &[Generator] {
        &self.odd
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odd.len() as u32)
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().map(|e| e.1).sum::<u32>() + self.odd.len() as u32
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.even.iter().map(|e| e.0).chain(self.odd.iter().copied())
    }

    /// Build from an arbitrary word of generators; returns the normal form and
    /// its sign, or `None` if an odd generator repeats.
    pub fn from_word(word: &[Generator]) -> Option<(SuperMonomial, bool)> {
        let mut m = SuperMonomial::one();
        let mut neg = false;
        for g in word {
            let (next, s) = m.mul(&SuperMonomial::single(*g))?;
            m = next;
            neg ^= s;
        }
        Some((m, neg))
    }

    pub fn single(g: Generator) -> Self {
        match g.parity {
            Parity::Even => SuperMonomial { even: vec![(g, 1)], odd: Vec::new() },
            Parity::Odd => SuperMonomial { even: Vec::new(), odd: vec![g] },
        }
    }

    /// Product of normal forms; the flag is true when the Koszul sign is −1.
    pub fn mul(&self, o: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        let mut odd = Vec::with_capacity(self.odd.len() + o.odd.len());
        let mut inversions = 0usize;
        let (mut a, mut b) = (0, 0);
        while a < self.odd.len() || b < o.odd.len() {
            if b == o.odd.len() {
                odd.push(self.odd[a]);
                a += 1;
            } else if a == self.odd.len() {
                odd.push(o.odd[b]);
                b += 1;
            } else {
                match self.odd[a].id.cmp(&o.odd[b].id) {
                    Ordering::Less => {
                        odd.push(self.odd[a]);
                        a += 1;
                    }
                    Ordering::Greater => {
                        // o.odd[b] moves left past every remaining left factor
                        inversions += self.odd.len() - a;
                        odd.push(o.odd[b]);
                        b += 1;
                    }
                    Ordering::Equal => return None,
                }
            }
        }
        let mut even = Vec::with_capacity(self.even.len() + o.even.len());
        let (mut a, mut b) = (0, 0);
        while a < self.even.len() || b < o.even.len() {
            if b == o.even.len() {
                even.push(self.even[a]);
                a += 1;
            } else if a == self.even.len() {
                even.push(o.even[b]);
                b += 1;
            } else {
                match self.even[a].0.id.cmp(&o.even[b].0.id) {
                    Ordering::Less => {
                        even.push(self.even[a]);
                        a += 1;
                    }
                    Ordering::Greater => {
                        even.push(o.even[b]);
                        b += 1;
                    }
                    Ordering::Equal => {
                        even.push((self.even[a].0, self.even[a].1 + o.even[b].1));
                        a += 1;
                        b += 1;
                    }
                }
            }
        }
        let neg = inversions % 2 == 1 && !mutation::active(Mutation::KoszulSign);
        Some((SuperMonomial { even, odd }, neg))
    }
}

/// A finite ℚ-combination of super monomials in normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SuperPoly {
    terms: BTreeMap<SuperMonomial, Q>,
}

impl SuperPoly {
    pub fn zero() -> Self {
        SuperPoly::default()
    }

    pub fn one() -> Self {
        SuperPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        SuperPoly::term(c, SuperMonomial::one())
    }

    pub fn int(c: i64) -> Self {
        SuperPoly::constant(Q::from_integer(BigInt::from(c)))
    }

    pub fn term(c: Q, m: SuperMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SuperPoly { terms }
    }

    pub fn gen(g: Generator) -> Self {
        SuperPoly::term(Q::one(), SuperMonomial::single(g))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn from_terms<I: IntoIterator<Item = (SuperMonomial, Q)>>(it: I) -> Self {
        let mut p = SuperPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Constant (generator-free) coefficient; the body for Λ_N elements.
    pub fn body(&self) -> Q {
        self.terms.get(&SuperMonomial::one()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn soul(&self) -> SuperPoly {
        let mut s = self.clone();
        s.terms.remove(&SuperMonomial::one());
        s
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&SuperMonomial::one()).cloned(),
            _ => None,
        }
    }

    /// `Some(p)` when every term has parity p (zero is even).
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    pub fn parity_part(&self, p: Parity) -> SuperPoly {
        SuperPoly {
            terms: self.terms.iter().filter(|(m, _)| m.parity() == p).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn generators(&self) -> alloc::collections::BTreeSet<Generator> {
        self.terms.keys().flat_map(|m| m.generators()).collect()
    }

    /// Every term has at least one odd generator (hence the element is nilpotent).
    pub fn is_nilpotent(&self) -> bool {
        self.terms.keys().all(|m| !m.odd.is_empty())
    }

    pub fn scale(&self, c: &Q) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero();
        }
        SuperPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Product, rejecting generators that appear with two parities.
    pub fn checked_mul(&self, o: &SuperPoly) -> Result<SuperPoly> {
        let mut seen: BTreeMap<u32, Parity> = BTreeMap::new();
        for g in self.generators().into_iter().chain(o.generators()) {
            if let Some(p) = seen.insert(g.id, g.parity) {
                if p != g.parity {
                    return Err(Error::Context(format!("generator {} used with both parities", g.id)));
                }
            }
        }
        Ok(self * o)
    }

    pub fn pow(&self, k: u32) -> SuperPoly {
        let mut r = SuperPoly::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Inverse of `c + nilpotent` with c ≠ 0, via the terminating Neumann series.
    pub fn inverse(&self) -> Result<SuperPoly> {
        let c = self.body();
        let s = self.soul();
        if c.is_zero() || !s.is_nilpotent() {
            return Err(Error::NotInvertible(format!("{self}")));
        }
        let cinv = c.recip();
        let x = s.scale(&(-cinv.clone()));
        // (c(1 − x))⁻¹ = c⁻¹ Σ xᵏ
        let mut acc = SuperPoly::one();
        let mut pw = SuperPoly::one();
        loop {
            pw = &pw * &x;
            if pw.is_zero() {
                break;
            }
            acc += &pw;
        }
        Ok(acc.scale(&cinv))
    }

    /// Ring homomorphism sending each generator to the value returned by `f`.
    pub fn substitute<F>(&self, f: F) -> Result<SuperPoly>
    where
        F: Fn(Generator) -> Option<SuperPoly>,
    {
        let mut cache: BTreeMap<Generator, SuperPoly> = BTreeMap::new();
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            let mut v = SuperPoly::constant(c.clone());
            for (g, e) in &m.even {
                let val = lookup(&mut cache, &f, *g)?;
                v = &v * &val.pow(*e);
            }
            for g in &m.odd {
                let val = lookup(&mut cache, &f, *g)?;
                v = &v * &val;
            }
            out += &v;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to an even generator.
    pub fn derivative_even(&self, g: Generator) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.even.iter().position(|e| e.0 == g) {
                let e = m.even[pos].1;
                let mut nm = m.clone();
                if e == 1 {
                    nm.even.remove(pos);
                } else {
                    nm.even[pos].1 = e - 1;
                }
                out.add_term(nm, c * Q::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Supercommutator-free check: coefficient-wise equality.
    pub fn first_difference<'a>(&'a self, o: &'a SuperPoly) -> Option<(SuperMonomial, Q, Q)> {
        for (m, c) in &self.terms {
            let d = o.terms.get(m).cloned().unwrap_or_else(Q::zero);
            if &d != c {
                return Some((m.clone(), c.clone(), d));
            }
        }
        for (m, d) in &o.terms {
            if !self.terms.contains_key(m) {
                return Some((m.clone(), Q::zero(), d.clone()));
            }
        }
        None
    }

    pub fn display_with<F: Fn(Generator) -> String>(&self, name: F) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (g, e) in &m.even {
                if *e == 1 {
                    factors.push(name(*g));
                } else {
                    factors.push(format!("{}^{}", name(*g), e));
                }
            }
            for g in &m.odd {
                factors.push(name(*g));
            }
            if factors.is_empty() {
                s.push_str(&format!("{a}"));
            } else {
                if !a.is_one() {
                    s.push_str(&format!("{a}*"));
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

fn lookup<F>(cache: &mut BTreeMap<Generator, SuperPoly>, f: &F, g: Generator) -> Result<SuperPoly>
where
    F: Fn(Generator) -> Option<SuperPoly>,
{
    if let Some(v) = cache.get(&g) {
        return Ok(v.clone());
    }
    let v = f(g).ok_or_else(|| Error::Unassigned(g.default_name()))?;
    cache.insert(g, v.clone());
    Ok(v)
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|g| g.default_name()))
    }
}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&SuperPoly> for SuperPoly {
    fn add_assign(&mut self, o: &SuperPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, o: &SuperPoly) -> SuperPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Add for SuperPoly {
    type Output = SuperPoly;
    fn add(mut self, o: SuperPoly) -> SuperPoly {
        self += &o;
        self
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        SuperPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        -&self
    }
}

impl Sub for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, o: &SuperPoly) -> SuperPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }
}

impl Sub for SuperPoly {
    type Output = SuperPoly;
    fn sub(self, o: SuperPoly) -> SuperPoly {
        &self - &o
    }
}

impl Mul for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, o: &SuperPoly) -> SuperPoly {
        let mut r = SuperPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                if let Some((m, neg)) = ma.mul(mb) {
                    let c = ca * cb;
                    r.add_term(m, if neg { -c } else { c });
                }
            }
        }
        r
    }
}

impl Mul for SuperPoly {
    type Output = SuperPoly;
    fn mul(self, o: SuperPoly) -> SuperPoly {
        &self * &o
    }
}

/// Power series in an even central variable t, known up to and including t^order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<SuperPoly>,
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(mut coeffs: Vec<SuperPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, SuperPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(vec![SuperPoly::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &SuperPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[SuperPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    /// f(−t).
    pub fn negate_variable(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect();
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let ord = self.order().min(o.order());
        TruncatedSeries { coeffs: (0..=ord).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect() }
    }

    pub fn sub(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let ord = self.order().min(o.order());
        TruncatedSeries { coeffs: (0..=ord).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect() }
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &SuperPoly) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| c * x).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == SuperPoly::one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

/// Cauchy product to the smaller of the two truncation orders.
pub fn series_mul(f: &TruncatedSeries, g: &TruncatedSeries) -> TruncatedSeries {
    let ord = f.order().min(g.order());
    let mut coeffs = vec![SuperPoly::zero(); ord + 1];
    for (i, a) in f.coeffs.iter().enumerate().take(ord + 1) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate().take(ord + 1 - i) {
            if !b.is_zero() {
                coeffs[i + j] += &(a * b);
            }
        }
    }
    TruncatedSeries { coeffs }
}

/// Right inverse g with f·g = 1 to the order of f.
pub fn series_invert(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let c0inv = f.coeffs[0].inverse().map_err(|_| Error::NotInvertible(format!("constant term {}", f.coeffs[0])))?;
    let ord = f.order();
    let mut g: Vec<SuperPoly> = Vec::with_capacity(ord + 1);
    g.push(c0inv.clone());
    for k in 1..=ord {
        let mut s = SuperPoly::zero();
        for j in 1..=k {
            if !f.coeffs[j].is_zero() && !g[k - j].is_zero() {
                s += &(&f.coeffs[j] * &g[k - j]);
            }
        }
        g.push(-(&c0inv * &s));
    }
    Ok(TruncatedSeries { coeffs: g })
}

/// d/dt; the result is known to one order less.
pub fn series_derivative(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    if f.order() == 0 {
        return Err(Error::OrderExhausted);
    }
    let coeffs = (1..=f.order()).map(|k| f.coeffs[k].scale(&Q::from_integer(BigInt::from(k)))).collect();
    Ok(TruncatedSeries { coeffs })
}

/// An element of Λ_N is a `SuperPoly` whose generators are among θ₁…θ_N.
pub fn is_grassmann(p: &SuperPoly, n_units: usize) -> bool {
    p.generators().iter().all(|g| g.is_theta() && (g.id - ids::THETA) as usize <= n_units && g.id > ids::THETA)
}

/// An assignment of Λ_N values to generators of matching parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannPoint {
    n_units: usize,
    assignment: BTreeMap<Generator, SuperPoly>,
}

impl GrassmannPoint {
    pub fn new(n_units: usize) -> Self {
        GrassmannPoint { n_units, assignment: BTreeMap::new() }
    }

    pub fn units(&self) -> usize {
        self.n_units
    }

    pub fn assign(&mut self, g: Generator, v: SuperPoly) -> Result<()> {
        if !is_grassmann(&v, self.n_units) {
            return Err(Error::Assignment(format!("{} is not an element of Λ_{}", v, self.n_units)));
        }
        if !v.is_zero() && v.homogeneous_parity() != Some(g.parity) {
            return Err(Error::Assignment(format!("{} has the wrong parity for {}", v, g.default_name())));
        }
        self.assignment.insert(g, v);
        Ok(())
    }

    pub fn get(&self, g: Generator) -> Option<&SuperPoly> {
        self.assignment.get(&g)
    }

    pub fn assignment(&self) -> &BTreeMap<Generator, SuperPoly> {
        &self.assignment
    }

    /// θ-free part of each even assignment.
    pub fn body(&self, g: Generator) -> Option<Q> {
        self.assignment.get(&g).map(|v| v.body())
    }
}

pub fn evaluate(p: &SuperPoly, pt: &GrassmannPoint) -> Result<SuperPoly> {
    p.substitute(|g| pt.assignment.get(&g).cloned())
}

/// Minimal ring interface shared by Λ_N elements, free-algebra elements and series,
/// used by determinant and Berezinian code.
pub trait Scalar: Clone + PartialEq {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Result<Self>;
}

impl Scalar for SuperPoly {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn zero_like(&self) -> Self {
        SuperPoly::zero()
    }
    fn one_like(&self) -> Self {
        SuperPoly::one()
    }
    fn is_zero(&self) -> bool {
        SuperPoly::is_zero(self)
    }
    fn inverse(&self) -> Result<Self> {
        SuperPoly::inverse(self)
    }
}

impl Scalar for TruncatedSeries {
    fn add(&self, o: &Self) -> Self {
        TruncatedSeries::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        TruncatedSeries::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        series_mul(self, o)
    }
    fn zero_like(&self) -> Self {
        TruncatedSeries::new(Vec::new(), self.order())
    }
    fn one_like(&self) -> Self {
        TruncatedSeries::one(self.order())
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn inverse(&self) -> Result<Self> {
        series_invert(self)
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}
