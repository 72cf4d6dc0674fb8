//! Exact linear algebra over the rationals: sparse echelon forms with
//! combination tracking, a fraction-free integer rank, nullspaces, and a
//! small dense matrix type.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Bound;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

/// Combination `sum c_label * input_label`.
pub type Combination = BTreeMap<usize, Rational>;

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Rational, w: &SparseVec<K>) {
    for (k, x) in w {
        let delta = c * x;
        match v.get_mut(k) {
            Some(y) => {
                *y += delta;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !delta.is_zero() {
                    v.insert(k.clone(), delta);
                }
            }
        }
    }
}

fn axpy_combo(v: &mut Combination, c: &Rational, w: &Combination) {
    for (k, x) in w {
        let e = v.entry(*k).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    combo: Combination,
}

/// Row echelon form keyed by leading (largest) key, each row normalized to
/// a unit pivot and remembering which inputs it came from.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    rows: BTreeMap<K, Row<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Splits `v = remainder + sum c_i input_i`.
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, Combination) {
        let mut v = v.clone();
        let mut combo = Combination::new();
        let mut upper: Bound<K> = Bound::Unbounded;
        while let Some(key) = v.range((Bound::Unbounded, upper.clone())).next_back().map(|(k, _)| k.clone()) {
            if let Some(row) = self.rows.get(&key) {
                let c = v[&key].clone();
                axpy(&mut v, &-c.clone(), &row.vec);
                axpy_combo(&mut combo, &c, &row.combo);
            }
            upper = Bound::Excluded(key);
        }
        (v, combo)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coefficients of `v` in the inserted inputs, if it lies in their span.
    pub fn express(&self, v: &SparseVec<K>) -> Option<Combination> {
        let (rem, combo) = self.reduce(v);
        rem.is_empty().then_some(combo)
    }

    /// Inserts `v` under `label`; returns `false` when it was dependent.
    pub fn insert(&mut self, label: usize, v: &SparseVec<K>) -> bool {
        let (mut rem, combo) = self.reduce(v);
        let Some((pivot, lead)) = rem.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.recip();
        for c in rem.values_mut() {
            *c *= &inv;
        }
        let mut row_combo = Combination::new();
        row_combo.insert(label, inv.clone());
        axpy_combo(&mut row_combo, &-inv, &combo);
        rem.insert(pivot.clone(), Rational::one());
        self.rows.insert(pivot, Row { vec: rem, combo: row_combo });
        true
    }
}

/// Rank of a family of sparse vectors by fraction-free integer elimination.
///
/// Independent of [`Echelon`] so the two can cross-check each other.
pub fn integer_rank<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> usize {
    let mut rows: BTreeMap<K, BTreeMap<K, BigInt>> = BTreeMap::new();
    for v in vectors {
        let mut w = to_integer_vector(v);
        while let Some((key, lead)) = w.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            let Some(row) = rows.get(&key) else {
                make_primitive(&mut w);
                rows.insert(key, w);
                break;
            };
            let row_lead = row[&key].clone();
            let mut next: BTreeMap<K, BigInt> = BTreeMap::new();
            for (k, c) in &w {
                next.insert(k.clone(), c * &row_lead);
            }
            for (k, c) in row {
                let e = next.entry(k.clone()).or_insert_with(BigInt::zero);
                *e -= c * &lead;
            }
            next.retain(|_, c| !c.is_zero());
            make_primitive(&mut next);
            w = next;
        }
    }
    rows.len()
}

fn to_integer_vector<K: Ord + Clone>(v: &SparseVec<K>) -> BTreeMap<K, BigInt> {
    let mut l = BigInt::one();
    for c in v.values() {
        l = l.lcm(c.denom());
    }
    v.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.clone(), c.numer() * (&l / c.denom())))
        .collect()
}

fn make_primitive<K>(w: &mut BTreeMap<K, BigInt>) {
    let mut g = BigInt::zero();
    for c in w.values() {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in w.values_mut() {
        *c /= &g;
    }
}

/// Basis of `{ v : row . v = 0 for every row }` over variables `0..nvars`.
pub fn sparse_nullspace(rows: &[SparseVec<usize>], nvars: usize) -> Vec<SparseVec<usize>> {
    let mut ech = Echelon::new();
    for (i, r) in rows.iter().enumerate() {
        ech.insert(i, r);
    }
    // Back-substitute so each row holds its pivot plus free variables only.
    let mut reduced: BTreeMap<usize, SparseVec<usize>> = BTreeMap::new();
    for (pivot, row) in &ech.rows {
        let mut v = row.vec.clone();
        let others: Vec<usize> = v.keys().copied().filter(|k| k != pivot && reduced.contains_key(k)).collect();
        for k in others {
            let c = v.get(&k).cloned().unwrap_or_default();
            if !c.is_zero() {
                axpy(&mut v, &-c, &reduced[&k]);
            }
        }
        reduced.insert(*pivot, v);
    }
    let mut basis = Vec::new();
    for f in (0..nvars).filter(|k| !reduced.contains_key(k)) {
        let mut v = SparseVec::new();
        v.insert(f, Rational::one());
        for (pivot, row) in &reduced {
            if let Some(c) = row.get(&f) {
                v.insert(*pivot, -c.clone());
            }
        }
        basis.push(v);
    }
    basis
}

/// Dense matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<SparseVec<usize>> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        integer_rank(&rows)
    }

    /// Entries as sparse vector keyed by `(row, col)`.
    pub fn to_sparse(&self) -> SparseVec<(usize, usize)> {
        let mut v = SparseVec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    v.insert((r, c), x.clone());
                }
            }
        }
        v
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                crate::rational::write_rational(f, self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
