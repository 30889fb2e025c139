//! Partitions, standard and semistandard super tableaux, Gelfand–Tsetlin type
//! patterns, Kostka numbers and irreducible characters of S_r.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Q;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts into weakly decreasing order and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Fails unless `parts` is already weakly decreasing (zeros allowed at the end).
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition::new(parts.to_vec()))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// λ_i with 1-based i, zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let l = self.part(1);
        Partition((1..=l).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Hook length of the (0-based) box (i, j).
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let c = self.conjugate();
        (self.0[i] - j as u32) + (c.0[j] - i as u32) - 1
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// True when this partition contains the (0-based) box (i, j).
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.0.len() && (j as u32) < self.0[i]
    }

    /// (0-based) rows where a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for i in 0..=self.0.len() {
            if i == 0 || self.part(i) > self.part(i + 1) {
                v.push(i);
            }
        }
        v
    }

    pub fn add_box(&self, row: usize) -> Partition {
        let mut p = self.0.clone();
        if row == p.len() {
            p.push(1);
        } else {
            p[row] += 1;
        }
        Partition(p)
    }

    /// Dominance order λ ⊵ μ.
    pub fn dominates(&self, o: &Partition) -> bool {
        let n = self.len().max(o.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=n {
            a += self.part(i);
            b += o.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of r in reverse lexicographic order: (r), (r−1,1), …, (1^r).
pub fn partitions(r: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

/// λ ⊢ r and λ_{m+1} ≤ n.
pub fn in_hook(lambda: &Partition, m: usize, n: usize, r: u32) -> bool {
    lambda.size() == r && lambda.part(m + 1) as usize <= n
}

pub fn hook_product(lambda: &Partition) -> u64 {
    lambda.boxes().map(|(i, j)| lambda.hook(i, j) as u64).product()
}

pub fn factorial(r: u32) -> u64 {
    (1..=r as u64).product()
}

pub fn dim(lambda: &Partition) -> u64 {
    factorial(lambda.size()) / hook_product(lambda)
}

/// Weak composition (a₁,…,a_{m+n}) of r.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeakComposition(pub Vec<u32>);

impl WeakComposition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The non-decreasing multiset I(μ) = (1^{μ₁}, 2^{μ₂}, …), 1-based entries.
    pub fn multiset(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat_n(i + 1, a as usize)).collect()
    }

    /// Multiplicities of a multiset over [parts].
    pub fn of_multiset(idx: &[usize], parts: usize) -> Self {
        let mut v = vec![0u32; parts];
        for &i in idx {
            v[i - 1] += 1;
        }
        WeakComposition(v)
    }
}

/// All weak compositions of r into `parts` parts, lexicographically decreasing.
pub fn weak_compositions(r: u32, parts: usize) -> Vec<WeakComposition> {
    fn rec(rem: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if left == 1 {
            cur.push(rem);
            out.push(WeakComposition(cur.clone()));
            cur.pop();
            return;
        }
        for a in (0..=rem).rev() {
            cur.push(a);
            rec(rem - a, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if r == 0 {
            out.push(WeakComposition(Vec::new()));
        }
        return out;
    }
    rec(r, parts, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    /// 0-based (row, column) of entry k+1.
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::from_parts(&rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())?;
        let r = shape.size() as usize;
        let mut pos = vec![(usize::MAX, usize::MAX); r];
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e as usize > r || pos[e as usize - 1].0 != usize::MAX {
                    return Err(Error::NotStandard);
                }
                pos[e as usize - 1] = (i, j);
                if j > 0 && row[j - 1] >= e {
                    return Err(Error::NotStandard);
                }
                if i > 0 && rows[i - 1][j] >= e {
                    return Err(Error::NotStandard);
                }
            }
        }
        Ok(StandardTableau { shape, rows, pos })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.pos.len()
    }

    /// 0-based (row, column) of entry k (1-based).
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.pos[k - 1]
    }

    /// c_k = column − row of the box holding k.
    pub fn content(&self, k: usize) -> i64 {
        let (i, j) = self.pos[k - 1];
        j as i64 - i as i64
    }

    /// d_a = c_{a+1} − c_a.
    pub fn axial_distance(&self, a: usize) -> i64 {
        self.content(a + 1) - self.content(a)
    }

    /// The tableau restricted to entries 1..k.
    pub fn restrict(&self, k: usize) -> StandardTableau {
        let rows: Vec<Vec<u32>> =
            self.rows.iter().map(|r| r.iter().copied().filter(|&e| e as usize <= k).collect::<Vec<_>>()).filter(|r: &Vec<u32>| !r.is_empty()).collect();
        StandardTableau::new(rows).expect("restriction of a standard tableau is standard")
    }

    /// (a, a+1)·T: swap the entries a and a+1; `None` if the result is not standard.
    pub fn swap(&self, a: usize) -> Option<StandardTableau> {
        let mut rows = self.rows.clone();
        let (i1, j1) = self.pos[a - 1];
        let (i2, j2) = self.pos[a];
        rows[i1][j1] = a as u32 + 1;
        rows[i2][j2] = a as u32;
        StandardTableau::new(rows).ok()
    }

    /// Row-reading tableau T₀: boxes numbered along rows, top to bottom.
    pub fn row_reading(shape: &Partition) -> StandardTableau {
        let mut k = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                (0..p)
                    .map(|_| {
                        k += 1;
                        k
                    })
                    .collect()
            })
            .collect();
        StandardTableau::new(rows).expect("row reading tableau is standard")
    }

    pub fn column_reading(shape: &Partition) -> StandardTableau {
        let c = shape.conjugate();
        let t = StandardTableau::row_reading(&c);
        t.transpose()
    }

    pub fn transpose(&self) -> StandardTableau {
        let c = self.shape.conjugate();
        let rows = (0..c.len()).map(|j| (0..c.part(j + 1) as usize).map(|i| self.rows[i][j]).collect()).collect();
        StandardTableau::new(rows).expect("transpose of a standard tableau is standard")
    }
}

/// All standard tableaux of shape λ, in a fixed deterministic order.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(target: &Partition, cur: &mut Vec<Vec<u32>>, k: u32, out: &mut Vec<StandardTableau>) {
        if k > target.size() {
            out.push(StandardTableau::new(cur.clone()).unwrap());
            return;
        }
        for i in 0..target.len() {
            let len = cur.get(i).map(|r| r.len()).unwrap_or(0);
            if len as u32 >= target.part(i + 1) {
                continue;
            }
            let above_ok = i == 0 || (i - 1 < cur.len() && cur[i - 1].len() > len);
            if !above_ok {
                continue;
            }
            if i == cur.len() {
                cur.push(Vec::new());
            }
            cur[i].push(k);
            rec(target, cur, k + 1, out);
            cur[i].pop();
            if cur[i].is_empty() {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(lambda, &mut Vec::new(), 1, &mut out);
    out
}

/// Filling of a shape by {1..m+n}; entries ≤ m are even, the rest odd.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SuperTableau {
    pub rows: Vec<Vec<u32>>,
}

impl SuperTableau {
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Conditions (a), (b), (c): weakly increasing rows and columns, entries ≤ m
    /// strictly increasing down columns, entries > m strictly increasing along rows.
    pub fn is_semistandard(&self, m: usize, n: usize) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > m + n {
                    return false;
                }
                if j > 0 {
                    let l = row[j - 1];
                    if v < l || (v == l && v as usize > m) {
                        return false;
                    }
                }
                if i > 0 {
                    let a = self.rows[i - 1][j];
                    if v < a || (v == a && v as usize <= m) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn weight(&self, parts: usize) -> WeakComposition {
        let mut w = vec![0u32; parts];
        for row in &self.rows {
            for &v in row {
                w[v as usize - 1] += 1;
            }
        }
        WeakComposition(w)
    }
}

/// Semistandard supertableaux of shape λ over {1..m+n}.
pub fn enumerate_ssyt(lambda: &Partition, m: usize, n: usize) -> Vec<SuperTableau> {
    enumerate_ssyt_filtered(lambda, m, n, None)
}

pub fn enumerate_ssyt_weight(lambda: &Partition, m: usize, n: usize, mu: &WeakComposition) -> Vec<SuperTableau> {
    enumerate_ssyt_filtered(lambda, m, n, Some(mu))
}

fn enumerate_ssyt_filtered(lambda: &Partition, m: usize, n: usize, mu: Option<&WeakComposition>) -> Vec<SuperTableau> {
    let cells: Vec<(usize, usize)> = lambda.boxes().collect();
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut remaining: Option<Vec<u32>> = mu.map(|w| {
        let mut v = w.0.clone();
        v.resize(m + n, 0);
        v
    });
    if let Some(w) = mu {
        if w.size() != lambda.size() || w.0.len() > m + n && w.0[m + n..].iter().any(|&a| a > 0) {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        m: usize,
        n: usize,
        remaining: &mut Option<Vec<u32>>,
        out: &mut Vec<SuperTableau>,
    ) {
        if k == cells.len() {
            out.push(SuperTableau { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        for v in 1..=(m + n) as u32 {
            if j > 0 {
                let l = rows[i][j - 1];
                if v < l || (v == l && v as usize > m) {
                    continue;
                }
            }
            if i > 0 {
                let a = rows[i - 1][j];
                if v < a || (v == a && v as usize <= m) {
                    continue;
                }
            }
            if let Some(rem) = remaining.as_mut() {
                if rem[v as usize - 1] == 0 {
                    continue;
                }
                rem[v as usize - 1] -= 1;
            }
            rows[i][j] = v;
            rec(k + 1, cells, rows, m, n, remaining, out);
            if let Some(rem) = remaining.as_mut() {
                rem[v as usize - 1] += 1;
            }
        }
        rows[i][j] = 0;
    }
    rec(0, &cells, &mut rows, m, n, &mut remaining, &mut out);
    out
}

/// θ_μ(T): replace entry k of T by the k-th element of I(μ). Also reports
/// whether the result is semistandard for the given (m, n).
pub fn theta_map(t: &StandardTableau, mu: &WeakComposition, m: usize, n: usize) -> Result<(SuperTableau, bool)> {
    if mu.size() as usize != t.size() {
        return Err(Error::Size(format!("|μ| = {} but T has {} boxes", mu.size(), t.size())));
    }
    let idx = mu.multiset();
    let rows = t.rows().iter().map(|r| r.iter().map(|&k| idx[k as usize - 1] as u32).collect()).collect();
    let st = SuperTableau { rows };
    let ok = st.is_semistandard(m, n);
    Ok((st, ok))
}

/// Classical Kostka number K_{λμ}: semistandard tableaux of shape λ and content μ.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> Result<u64> {
    let size: u32 = mu.iter().sum();
    if size != lambda.size() {
        return Err(Error::Size(format!("|{lambda}| ≠ |{mu:?}|")));
    }
    let w = WeakComposition(mu.to_vec());
    Ok(enumerate_ssyt_weight(lambda, mu.len(), 0, &w).len() as u64)
}

/// Kostka matrix over partitions of r (reverse lexicographic order) and its inverse.
#[derive(Clone, Debug)]
pub struct KostkaMatrix {
    pub partitions: Vec<Partition>,
    pub k: Vec<Vec<i64>>,
    pub k_inv: Vec<Vec<i64>>,
}

impl KostkaMatrix {
    pub fn new(r: u32) -> Self {
        let parts = partitions(r);
        let p = parts.len();
        let k: Vec<Vec<i64>> =
            parts.iter().map(|l| parts.iter().map(|mu| kostka(l, mu.parts()).unwrap() as i64).collect()).collect();
        // upper unitriangular: back substitution column by column
        let mut inv = vec![vec![0i64; p]; p];
        for c in 0..p {
            for row in (0..p).rev() {
                let mut s: i64 = if row == c { 1 } else { 0 };
                for j in row + 1..p {
                    s -= k[row][j] * inv[j][c];
                }
                inv[row][c] = s;
            }
        }
        KostkaMatrix { partitions: parts, k, k_inv: inv }
    }

    pub fn index(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    /// (K⁻¹)_{λμ}: row λ, column μ of the inverse matrix.
    pub fn inverse_entry(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        match (self.index(lambda), self.index(mu)) {
            (Some(a), Some(b)) => Ok(self.k_inv[a][b]),
            _ => Err(Error::Size(format!("{lambda} or {mu} is not a partition of the matrix degree"))),
        }
    }
}

pub fn inverse_kostka(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::Size(format!("|{lambda}| ≠ |{mu}|")));
    }
    KostkaMatrix::new(lambda.size()).inverse_entry(lambda, mu)
}

/// Irreducible characters by Murnaghan–Nakayama, memoized on (shape, remaining cycles).
#[derive(Default)]
pub struct CharacterTable {
    memo: BTreeMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        CharacterTable::default()
    }

    pub fn value(&mut self, lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
        if lambda.size() != cycle_type.size() {
            return Err(Error::Size(format!("|{lambda}| ≠ |{cycle_type}|")));
        }
        Ok(self.mn(lambda.parts().to_vec(), cycle_type.parts().to_vec()))
    }

    fn mn(&mut self, shape: Vec<u32>, cycles: Vec<u32>) -> i64 {
        if cycles.is_empty() {
            return 1;
        }
        let key = (shape.clone(), cycles.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let k = cycles[0];
        let rest = cycles[1..].to_vec();
        let l = shape.len();
        let beta: Vec<i64> = shape.iter().enumerate().map(|(i, &p)| p as i64 + (l - 1 - i) as i64).collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            let nb = b - k as i64;
            if nb < 0 || beta.contains(&nb) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > nb && x < b).count();
            let mut newbeta = beta.clone();
            newbeta[idx] = nb;
            newbeta.sort_unstable_by(|a, b| b.cmp(a));
            let nl = newbeta.len();
            let newshape: Vec<u32> =
                newbeta.iter().enumerate().map(|(i, &x)| (x - (nl - 1 - i) as i64) as u32).filter(|&p| p > 0).collect();
            let v = self.mn(newshape, rest.clone());
            total += if height % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    CharacterTable::new().value(lambda, cycle_type)
}

/// Size of the conjugacy class with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> u64 {
    let r = cycle_type.size();
    let mut z: u64 = 1;
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in cycle_type.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (k, c) in counts {
        z *= (k as u64).pow(c as u32) * factorial(c as u32);
    }
    factorial(r) / z
}

/// Covariant highest weight (𝛌₁…𝛌_m | 𝛌_{m+1}…𝛌_{m+n}) of λ ∈ H(m, n).
pub fn partition_to_weight(lambda: &Partition, m: usize, n: usize) -> Result<Vec<i64>> {
    if lambda.part(m + 1) as usize > n {
        return Err(Error::Domain(format!("{lambda} is not in H({m},{n})")));
    }
    let c = lambda.conjugate();
    let mut w: Vec<i64> = (1..=m).map(|i| lambda.part(i) as i64).collect();
    w.extend((1..=n).map(|i| (c.part(i) as i64 - m as i64).max(0)));
    Ok(w)
}

pub fn weight_to_partition(w: &[i64], m: usize, n: usize) -> Result<Partition> {
    if w.len() != m + n || w.iter().any(|&x| x < 0) {
        return Err(Error::Domain(format!("{w:?} is not a covariant weight for ({m}|{n})")));
    }
    let mut parts: Vec<u32> = w[..m].iter().map(|&x| x as u32).collect();
    let maxodd = w[m..].iter().copied().max().unwrap_or(0);
    for i in 1..=maxodd {
        parts.push(w[m..].iter().filter(|&&x| x >= i).count() as u32);
    }
    Partition::from_parts(&parts)
}

/// Triangular array λ_{ij}, 1 ≤ j ≤ i ≤ m+n; `rows[i-1]` holds (λ_{i1},…,λ_{ii}).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GTPattern {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

impl GTPattern {
    /// λ_{ij} (1-based); zero when j > i.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == 0 || j > i {
            0
        } else {
            self.rows[i - 1][j - 1]
        }
    }

    /// θ_{p−1,i} = λ_{pi} − λ_{p−1,i} for i ≤ m < p.
    pub fn theta(&self, p: usize, i: usize) -> i64 {
        self.entry(p, i) - self.entry(p - 1, i)
    }

    /// Conditions (1)–(6) for the given highest weight.
    pub fn satisfies_conditions(&self, weight: &[i64]) -> bool {
        let (m, n) = (self.m, self.n);
        let top = m + n;
        if self.rows.len() != top || self.rows.iter().enumerate().any(|(i, r)| r.len() != i + 1) {
            return false;
        }
        if self.rows.iter().flatten().any(|&x| x < 0) {
            return false;
        }
        // (1)
        if self.rows[top - 1] != weight {
            return false;
        }
        // (2)
        for p in m + 1..=top {
            for i in 1..=m {
                let d = self.entry(p, i) - self.entry(p - 1, i);
                if d != 0 && d != 1 {
                    return false;
                }
            }
        }
        // (3); read literally it needs a column m, so it is vacuous when m = 0
        if m >= 1 {
            for p in m + 1..=top {
                let cnt = (m + 1..=p).filter(|&i| self.entry(p, i) > 0).count() as i64;
                if self.entry(p, m) < cnt {
                    return false;
                }
            }
        }
        // (4)
        if m >= 1 && n >= 1 && self.entry(m + 1, m) == 0 && self.entry(m + 1, m) - self.entry(m, m) != 0 {
            return false;
        }
        // (5), with the upper end of p taken as m+n−1
        for p in m + 1..top {
            for i in 1..m {
                if self.entry(p, i) < self.entry(p, i + 1) {
                    return false;
                }
            }
        }
        // (6)
        for i in 2..=top {
            for j in 1..i {
                let even_block = i <= m;
                let odd_block = j > m;
                if !(even_block || odd_block) {
                    continue;
                }
                if self.entry(i, j) < self.entry(i - 1, j) {
                    return false;
                }
                if self.entry(i - 1, j) < self.entry(i, j + 1) {
                    return false;
                }
            }
        }
        true
    }
}

/// Every pattern satisfying (1)–(6) with top row equal to the covariant weight.
pub fn enumerate_gt_patterns(weight: &[i64], m: usize, n: usize) -> Result<Vec<GTPattern>> {
    let lambda = weight_to_partition(weight, m, n)?;
    if partition_to_weight(&lambda, m, n)? != weight {
        return Err(Error::Domain(format!("{weight:?} is not the weight of a partition in H({m},{n})")));
    }
    let top = m + n;
    if top == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); top];
    rows[top - 1] = weight.to_vec();
    fn rec(i: usize, rows: &mut Vec<Vec<i64>>, m: usize, n: usize, weight: &[i64], out: &mut Vec<GTPattern>) {
        // rows[i-1] fixed; choose rows[i-2]
        if i == 1 {
            let p = GTPattern { m, n, rows: rows.clone() };
            if p.satisfies_conditions(weight) {
                out.push(p);
            }
            return;
        }
        let upper = rows[i - 1].clone();
        let mut ranges: Vec<(i64, i64)> = Vec::with_capacity(i - 1);
        for j in 1..i {
            let hi = upper[j - 1];
            let next = upper.get(j).copied().unwrap_or(0);
            let r = if j <= m {
                if i > m {
                    (hi - 1, hi)
                } else {
                    (next, hi)
                }
            } else {
                (next, hi)
            };
            ranges.push((r.0.max(0), r.1));
        }
        let mut cur = vec![0i64; i - 1];
        fn fill(
            k: usize,
            ranges: &[(i64, i64)],
            cur: &mut Vec<i64>,
            i: usize,
            rows: &mut Vec<Vec<i64>>,
            m: usize,
            n: usize,
            weight: &[i64],
            out: &mut Vec<GTPattern>,
        ) {
            if k == ranges.len() {
                rows[i - 2] = cur.clone();
                rec(i - 1, rows, m, n, weight, out);
                return;
            }
            let (lo, hi) = ranges[k];
            for v in lo..=hi {
                cur[k] = v;
                fill(k + 1, ranges, cur, i, rows, m, n, weight, out);
            }
        }
        fill(0, &ranges, &mut cur, i, rows, m, n, weight, out);
    }
    rec(top, &mut rows, m, n, weight, &mut out);
    Ok(out)
}

/// Supertableau with λ_{ij} = #entries ≤ i in row j (j ≤ m) and
/// λ_{i,m+k} = #entries ≤ i in column k counted from row m+1 down.
pub fn gt_to_ssyt(p: &GTPattern) -> Result<SuperTableau> {
    let (m, n) = (p.m, p.n);
    let top = m + n;
    let w = &p.rows[top - 1];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for j in 1..=m {
        let mut row = Vec::new();
        for v in 1..=top {
            let c = p.entry(v, j) - p.entry(v - 1, j);
            if c < 0 {
                return Err(Error::Domain(format!("negative count in row {j}")));
            }
            row.extend(std::iter::repeat_n(v as u32, c as usize));
        }
        rows.push(row);
    }
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for k in 1..=n {
        let mut col = Vec::new();
        for v in 1..=top {
            let c = p.entry(v, m + k) - p.entry(v - 1, m + k);
            if c < 0 {
                return Err(Error::Domain(format!("negative count in column {k}")));
            }
            col.extend(std::iter::repeat_n(v as u32, c as usize));
        }
        if col.len() as i64 != w[m + k - 1] {
            return Err(Error::Domain(format!("column {k} has the wrong length")));
        }
        cols.push(col);
    }
    let depth = cols.iter().map(|c| c.len()).max().unwrap_or(0);
    for l in 0..depth {
        let row: Vec<u32> = cols.iter().take_while(|c| c.len() > l).map(|c| c[l]).collect();
        if row.len() > rows.last().map(|r| r.len()).unwrap_or(usize::MAX) {
            return Err(Error::Domain(String::from("bottom part sticks out of the shape")));
        }
        rows.push(row);
    }
    rows.retain(|r| !r.is_empty());
    Ok(SuperTableau { rows })
}

/// Inverse of `gt_to_ssyt` on semistandard supertableaux.
pub fn ssyt_to_gt(t: &SuperTableau, m: usize, n: usize) -> GTPattern {
    let top = m + n;
    let mut rows = Vec::with_capacity(top);
    for i in 1..=top {
        let mut row = Vec::with_capacity(i);
        for j in 1..=i.min(m) {
            let c = t.rows.get(j - 1).map(|r| r.iter().filter(|&&v| v as usize <= i).count()).unwrap_or(0);
            row.push(c as i64);
        }
        for k in 1..=(i.saturating_sub(m)) {
            let c = t.rows.iter().skip(m).filter(|r| r.len() >= k && r[k - 1] as usize <= i).count();
            row.push(c as i64);
        }
        rows.push(row);
    }
    GTPattern { m, n, rows }
}

/// ℚ-valued helper kept here because Kostka inversion and JT expansions share it.
pub fn q_of(v: i64) -> Q {
    if v == 0 {
        Q::zero()
    } else if v == 1 {
        Q::one()
    } else {
        Q::from_integer(v.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn hook_membership() {
        assert!(!in_hook(&p(&[2, 2]), 1, 1, 4));
        assert!(in_hook(&p(&[5]), 1, 0, 5));
        assert!(in_hook(&p(&[2, 1]), 1, 1, 3));
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&p(&[1, 1, 1, 1])).len(), 1);
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
        assert_eq!(hook_product(&p(&[2, 1])), 3);
        assert_eq!(dim(&p(&[2, 1])), 2);
        for r in 1..=6 {
            for l in partitions(r) {
                assert_eq!(dim(&l) as usize, enumerate_syt(&l).len());
            }
        }
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(enumerate_ssyt(&p(&[1]), 1, 1).len(), 2);
        // (2,2) lies outside the (1,1) hook
        assert!(enumerate_ssyt(&p(&[2, 2]), 1, 1).is_empty());
        let t = enumerate_ssyt(&p(&[2, 1]), 1, 1);
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|x| x.is_semistandard(1, 1)));
        assert!(t.contains(&SuperTableau { rows: vec![vec![1, 1], vec![2]] }));
        assert!(t.contains(&SuperTableau { rows: vec![vec![1, 2], vec![2]] }));
        assert!(!SuperTableau { rows: vec![vec![2, 2]] }.is_semistandard(1, 1));
        assert!(!SuperTableau { rows: vec![vec![1], vec![1]] }.is_semistandard(1, 1));
    }

    #[test]
    fn theta_examples() {
        let row = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        let (t, ok) = theta_map(&row, &WeakComposition(vec![2, 0]), 1, 1).unwrap();
        assert_eq!(t.rows, vec![vec![1, 1]]);
        assert!(ok);
        let (_, ok_odd) = theta_map(&row, &WeakComposition(vec![0, 2]), 1, 1).unwrap();
        assert!(!ok_odd);
        let col = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        let (_, ok2) = theta_map(&col, &WeakComposition(vec![2, 0]), 1, 1).unwrap();
        assert!(!ok2);
        let (t3, _) = theta_map(&col, &WeakComposition(vec![1, 1]), 2, 0).unwrap();
        assert_eq!(t3.rows, vec![vec![1], vec![2]]);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert!(kostka(&p(&[2, 1]), &[1, 1]).is_err());
        for r in 1..=6 {
            let km = KostkaMatrix::new(r);
            let n = km.partitions.len();
            for a in 0..n {
                assert_eq!(km.k[a][a], 1);
                for b in 0..n {
                    let s: i64 = (0..n).map(|c| km.k[a][c] * km.k_inv[c][b]).sum();
                    assert_eq!(s, (a == b) as i64);
                }
            }
        }
    }

    #[test]
    fn character_examples() {
        let mut ct = CharacterTable::new();
        for r in 1..=6u32 {
            let ps = partitions(r);
            let id = p(&vec![1; r as usize]);
            for l in &ps {
                assert_eq!(ct.value(l, &id).unwrap(), dim(l) as i64);
                let sign_ch = ct.value(&id, l).unwrap();
                let odd_cycles: u32 = l.parts().iter().map(|&c| c - 1).sum();
                assert_eq!(sign_ch, if odd_cycles.is_multiple_of(2) { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn weight_dictionary() {
        assert_eq!(partition_to_weight(&p(&[3]), 1, 1).unwrap(), vec![3, 0]);
        assert_eq!(partition_to_weight(&p(&[2, 1]), 1, 1).unwrap(), vec![2, 1]);
        assert!(partition_to_weight(&p(&[2, 2]), 1, 1).is_err());
    }

    #[test]
    fn gt_single_box() {
        let w = partition_to_weight(&p(&[1]), 1, 1).unwrap();
        let pats = enumerate_gt_patterns(&w, 1, 1).unwrap();
        assert_eq!(pats.len(), 2);
        let mut ts: Vec<SuperTableau> = pats.iter().map(|x| gt_to_ssyt(x).unwrap()).collect();
        ts.sort();
        let mut expected = enumerate_ssyt(&p(&[1]), 1, 1);
        expected.sort();
        assert_eq!(ts, expected);
    }

    #[test]
    fn gt_bijection_small() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (0, 2), (3, 1)] {
            for r in 1..=5 {
                for l in partitions(r).into_iter().filter(|l| in_hook(l, m, n, r)) {
                    let w = partition_to_weight(&l, m, n).unwrap();
                    let pats = enumerate_gt_patterns(&w, m, n).unwrap();
                    let mut ts: Vec<SuperTableau> = pats.iter().map(|x| gt_to_ssyt(x).unwrap()).collect();
                    ts.sort();
                    let mut expected = enumerate_ssyt(&l, m, n);
                    expected.sort();
                    assert_eq!(ts, expected, "{l} ({m}|{n})");
                    for t in &expected {
                        assert_eq!(gt_to_ssyt(&ssyt_to_gt(t, m, n)).unwrap(), *t);
                    }
                }
            }
        }
    }
}
