//! Scalar differential operators `sum f_ij(x, y) d_x^i d_y^j` in Weyl normal
//! order (coefficients left, derivatives right).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::{print_key, write_monomial, write_term, Exponent2, Poly2};
use crate::rational::{binomial, Rational};

/// Derivative multi-index `d_x^dx d_y^dy`, ordered like [`Exponent2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Deriv {
    pub dx: u32,
    pub dy: u32,
}

impl Deriv {
    pub const NONE: Deriv = Deriv { dx: 0, dy: 0 };

    pub const fn new(dx: u32, dy: u32) -> Self {
        Deriv { dx, dy }
    }

    pub fn order(&self) -> u32 {
        self.dx + self.dy
    }

    pub fn as_exponent(&self) -> Exponent2 {
        Exponent2::new(self.dx, self.dy)
    }
}

impl Ord for Deriv {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_exponent().cmp(&other.as_exponent())
    }
}

impl PartialOrd for Deriv {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shift `(i, j)` with `T(x^a y^b)` in the span of `x^(a+i) y^(b+j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiDegree {
    pub x: i32,
    pub y: i32,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { x: 0, y: 0 };

    pub const fn new(x: i32, y: i32) -> Self {
        BiDegree { x, y }
    }

    /// `i + r j`, the staircase grading.
    pub fn total(&self, r: u32) -> i32 {
        self.x + r as i32 * self.y
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Bidegree of the single term `x^c d_x^a d_y^b`.
pub fn term_bidegree(c: Exponent2, d: Deriv) -> BiDegree {
    BiDegree::new(c.i as i32 - d.dx as i32, c.j as i32 - d.dy as i32)
}

/// Result of [`DiffOp::total_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TotalDegree {
    Zero,
    Degree(i32),
    Inhomogeneous,
}

/// Flat key of one monomial term: coefficient exponent and derivative.
pub type TermKey = (Deriv, Exponent2);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiffOp {
    terms: BTreeMap<Deriv, Poly2>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        DiffOp::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        DiffOp::mult(Poly2::constant(c))
    }

    /// Multiplication operator by `p`.
    pub fn mult(p: Poly2) -> Self {
        DiffOp::term(p, Deriv::NONE)
    }

    /// `p * d_x^dx d_y^dy`.
    pub fn term(p: Poly2, d: Deriv) -> Self {
        let mut op = DiffOp::zero();
        op.add_poly(d, &p);
        op
    }

    /// `c x^i y^j d_x^a d_y^b`.
    pub fn monomial(c: Rational, i: u32, j: u32, a: u32, b: u32) -> Self {
        DiffOp::term(Poly2::monomial(c, i, j), Deriv::new(a, b))
    }

    pub fn dx() -> Self {
        DiffOp::monomial(Rational::one(), 0, 0, 1, 0)
    }

    pub fn dy() -> Self {
        DiffOp::monomial(Rational::one(), 0, 0, 0, 1)
    }

    pub fn x() -> Self {
        DiffOp::mult(Poly2::x())
    }

    pub fn y() -> Self {
        DiffOp::mult(Poly2::y())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: Deriv) -> Poly2 {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    /// Coefficient polynomials in ascending derivative order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Deriv, &Poly2)> {
        self.terms.iter()
    }

    /// Every monomial term `c x^e d^d`.
    pub fn monomial_terms(&self) -> impl Iterator<Item = (Deriv, Exponent2, &Rational)> {
        self.terms
            .iter()
            .flat_map(|(d, p)| p.terms().map(move |(e, c)| (*d, *e, c)))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.values().map(Poly2::len).sum()
    }

    pub fn add_poly(&mut self, d: Deriv, p: &Poly2) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.get(&d) {
            Some(q) => q + p,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
    }

    pub fn add_monomial(&mut self, d: Deriv, e: Exponent2, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_default();
        entry.add_term(e, c);
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    /// Differential order; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Deriv::order).max()
    }

    /// Terms of differential order exactly `k`.
    pub fn order_part(&self, k: u32) -> DiffOp {
        DiffOp {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.order() == k)
                .map(|(d, p)| (*d, p.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero();
        }
        DiffOp {
            terms: self.terms.iter().map(|(d, p)| (*d, p.scale(c))).collect(),
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (d, p) in &other.terms {
            out.add_poly(*d, p);
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (d, p) in &other.terms {
            out.add_poly(*d, &-p);
        }
        out
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, p: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (d, f) in &self.terms {
            let dp = p.diff2(d.dx, d.dy);
            if !dp.is_zero() {
                out = &out + &(f * &dp);
            }
        }
        out
    }

    /// Image of a single monomial, avoiding the generic product.
    pub fn apply_monomial(&self, e: Exponent2) -> Poly2 {
        let mut out = Poly2::zero();
        for (d, f) in &self.terms {
            if d.dx > e.i || d.dy > e.j {
                continue;
            }
            let k = crate::rational::falling(e.i, d.dx) * crate::rational::falling(e.j, d.dy);
            let rest = Exponent2::new(e.i - d.dx, e.j - d.dy);
            for (fe, fc) in f.terms() {
                out.add_term(Exponent2::new(fe.i + rest.i, fe.j + rest.j), fc * &k);
            }
        }
        out
    }

    /// Operator product `self ∘ other`, re-normal-ordered with Leibniz's rule
    /// `d^a g = sum_c binom(a, c) (d^c g) d^(a-c)`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                for cx in 0..=a.dx {
                    for cy in 0..=a.dy {
                        let dg = g.diff2(cx, cy);
                        if dg.is_zero() {
                            continue;
                        }
                        let k = binomial(a.dx, cx) * binomial(a.dy, cy);
                        let coef = (f * &dg).scale(&k);
                        let d = Deriv::new(a.dx - cx + b.dx, a.dy - cy + b.dy);
                        out.add_poly(d, &coef);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> DiffOp {
        let mut out = DiffOp::identity();
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        DiffOp::sub(&self.compose(other), &other.compose(self))
    }

    /// Homogeneous parts keyed by bidegree; they sum back to `self`.
    pub fn bidegree_decompose(&self) -> BTreeMap<BiDegree, DiffOp> {
        let mut parts: BTreeMap<BiDegree, DiffOp> = BTreeMap::new();
        for (d, e, c) in self.monomial_terms() {
            parts
                .entry(term_bidegree(e, d))
                .or_default()
                .add_monomial(d, e, c.clone());
        }
        parts
    }

    /// The bidegree when the operator is homogeneous and nonzero.
    pub fn bidegree(&self) -> Option<BiDegree> {
        let parts = self.bidegree_decompose();
        if parts.len() == 1 {
            parts.keys().next().copied()
        } else {
            None
        }
    }

    /// `i + r j` shared by all homogeneous parts.
    pub fn total_degree(&self, r: u32) -> TotalDegree {
        let mut found: Option<i32> = None;
        for b in self.bidegree_decompose().keys() {
            let t = b.total(r);
            match found {
                None => found = Some(t),
                Some(prev) if prev != t => return TotalDegree::Inhomogeneous,
                _ => {}
            }
        }
        match found {
            None => TotalDegree::Zero,
            Some(t) => TotalDegree::Degree(t),
        }
    }

    /// Keeps the terms whose derivative satisfies `keep`.
    pub fn filter_derivs(&self, mut keep: impl FnMut(Deriv) -> bool) -> DiffOp {
        DiffOp {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| keep(**d))
                .map(|(d, p)| (*d, p.clone()))
                .collect(),
        }
    }

    /// Keeps the monomial terms satisfying `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(Deriv, Exponent2) -> bool) -> DiffOp {
        let mut out = DiffOp::zero();
        for (d, e, c) in self.monomial_terms() {
            if keep(d, e) {
                out.add_monomial(d, e, c.clone());
            }
        }
        out
    }

    /// Sparse coordinate vector over monomial terms.
    pub fn to_vector(&self) -> BTreeMap<TermKey, Rational> {
        self.monomial_terms().map(|(d, e, c)| ((d, e), c.clone())).collect()
    }

    pub fn from_vector<'a>(v: impl IntoIterator<Item = (&'a TermKey, &'a Rational)>) -> DiffOp {
        let mut out = DiffOp::zero();
        for ((d, e), c) in v {
            out.add_monomial(*d, *e, c.clone());
        }
        out
    }

    /// Constant part when the operator is a scalar multiple of the identity.
    pub fn as_scalar(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(p) = self.terms.get(&Deriv::NONE) {
                if p.is_constant() {
                    return Some(p.coeff(Exponent2::ONE));
                }
            }
        }
        None
    }
}

pub fn sum<'a>(ops: impl IntoIterator<Item = &'a DiffOp>) -> DiffOp {
    let mut out = DiffOp::zero();
    for op in ops {
        out = DiffOp::add(&out, op);
    }
    out
}

/// Linear combination `sum c_i op_i`.
pub fn combine<'a>(items: impl IntoIterator<Item = (&'a Rational, &'a DiffOp)>) -> DiffOp {
    let mut out = DiffOp::zero();
    for (c, op) in items {
        out = DiffOp::add(&out, &op.scale(c));
    }
    out
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        DiffOp::add(self, rhs)
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        DiffOp::sub(self, rhs)
    }
}

impl Mul for &DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        self.compose(rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.scale(&-Rational::one())
    }
}

impl Add for DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: DiffOp) -> DiffOp {
        DiffOp::add(&self, &rhs)
    }
}

impl Sub for DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: DiffOp) -> DiffOp {
        DiffOp::sub(&self, &rhs)
    }
}

impl Mul for DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: DiffOp) -> DiffOp {
        self.compose(&rhs)
    }
}

impl Neg for DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        -&self
    }
}

impl From<Poly2> for DiffOp {
    fn from(p: Poly2) -> Self {
        DiffOp::mult(p)
    }
}

fn write_deriv(f: &mut fmt::Formatter<'_>, d: Deriv, mut first: bool) -> fmt::Result {
    for (name, pow) in [("Dx", d.dx), ("Dy", d.dy)] {
        if pow == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if pow > 1 {
            write!(f, "^{}", pow)?;
        }
    }
    Ok(())
}

/// Canonical text: higher derivatives first (`Dx` before `Dy` at equal order),
/// then coefficient monomials in the same order, e.g. `x^2*Dx - 2*x`.
impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut leading = true;
        let mut derivs: Vec<_> = self.terms.iter().collect();
        derivs.sort_by_key(|(d, _)| print_key(&d.as_exponent()));
        for (d, p) in derivs {
            let mut coeffs: Vec<_> = p.terms().collect();
            coeffs.sort_by_key(|(e, _)| print_key(e));
            for (e, c) in coeffs {
                let has = *e != Exponent2::ONE || *d != Deriv::NONE;
                write_term(f, c, leading, has, |f| {
                    write_monomial(f, *e, false)?;
                    write_deriv(f, *d, *e == Exponent2::ONE)
                })?;
                leading = false;
            }
        }
        Ok(())
    }
}

/// Collects the monomial terms into a list, mostly for tests and reports.
pub fn term_list(op: &DiffOp) -> Vec<(Deriv, Exponent2, Rational)> {
    op.monomial_terms().map(|(d, e, c)| (d, e, c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use alloc::string::ToString;

    fn jplus(n: i64) -> DiffOp {
        DiffOp::monomial(int(1), 2, 0, 1, 0) - DiffOp::monomial(int(n), 1, 0, 0, 0)
    }

    fn jzero(n: i64) -> DiffOp {
        DiffOp::monomial(int(1), 1, 0, 1, 0) - DiffOp::scalar(frac(n, 2))
    }

    fn mono(i: u32, j: u32) -> Poly2 {
        Poly2::monomial(int(1), i, j)
    }

    #[test]
    fn apply_examples() {
        assert_eq!(DiffOp::dx().apply(&mono(3, 0)), Poly2::monomial(int(3), 2, 0));
        assert!(jplus(2).apply(&mono(2, 0)).is_zero());
        // x^2 Dx + x y Dy - 3 x on x^2 y: (2 + 1 - 3) x^3 y.
        let j1 = DiffOp::monomial(int(1), 2, 0, 1, 0) + DiffOp::monomial(int(1), 1, 1, 0, 1)
            - DiffOp::monomial(int(3), 1, 0, 0, 0);
        for (i, j) in [(2u32, 1u32), (1, 1), (0, 3), (1, 0)] {
            let expected = Poly2::monomial(int(i as i64 + j as i64 - 3), i + 1, j);
            assert_eq!(j1.apply(&mono(i, j)), expected);
        }
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            DiffOp::dx().compose(&DiffOp::x()),
            DiffOp::monomial(int(1), 1, 0, 1, 0) + DiffOp::identity()
        );
        let expected = DiffOp::monomial(int(1), 2, 0, 2, 0) - DiffOp::monomial(int(2), 1, 0, 1, 0);
        let prod = jplus(2).compose(&DiffOp::dx());
        assert_eq!(prod, expected);
        // Oracle: apply both sides to x^a.
        for a in 0..=5 {
            let lhs = jplus(2).apply(&DiffOp::dx().apply(&mono(a, 0)));
            assert_eq!(prod.apply(&mono(a, 0)), lhs);
        }
        assert_eq!(DiffOp::identity().compose(&jplus(3)), jplus(3));
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(DiffOp::dx().commutator(&DiffOp::x()), DiffOp::identity());
        assert_eq!(jzero(4).commutator(&jplus(4)), jplus(4));
        assert!(DiffOp::dx().commutator(&DiffOp::dy()).is_zero());
    }

    #[test]
    fn bidegree_examples() {
        let op = DiffOp::monomial(int(1), 0, 1, 2, 0);
        let parts = op.bidegree_decompose();
        assert_eq!(parts.len(), 1);
        assert!(parts.contains_key(&BiDegree::new(-2, 1)));
        assert_eq!(DiffOp::monomial(int(1), 1, 0, 1, 0).bidegree(), Some(BiDegree::ZERO));
        let mixed = DiffOp::monomial(int(1), 2, 0, 1, 0) + DiffOp::dy();
        let parts = mixed.bidegree_decompose();
        assert_eq!(
            parts.keys().copied().collect::<Vec<_>>(),
            alloc::vec![BiDegree::new(0, -1), BiDegree::new(1, 0)]
        );
        assert_eq!(sum(parts.values()), mixed);
    }

    #[test]
    fn total_degree_examples() {
        assert_eq!(DiffOp::monomial(int(1), 0, 1, 2, 0).total_degree(2), TotalDegree::Degree(0));
        assert_eq!(DiffOp::monomial(int(1), 2, 0, 0, 1).total_degree(2), TotalDegree::Degree(0));
        let inh = DiffOp::monomial(int(1), 1, 0, 1, 0) + DiffOp::x();
        assert_eq!(inh.total_degree(2), TotalDegree::Inhomogeneous);
        assert_eq!(DiffOp::zero().total_degree(2), TotalDegree::Zero);
    }

    #[test]
    fn casimir_small_n() {
        for n in 0..=10 {
            let lhs = jplus(n).compose(&DiffOp::dx());
            let j0 = jzero(n);
            let rhs = j0.compose(&j0) - j0.clone() - DiffOp::scalar(frac(n * (n + 2), 4));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn display_canonical() {
        assert_eq!(jplus(2).to_string(), "x^2*Dx - 2*x");
        assert_eq!(DiffOp::monomial(int(1), 0, 1, 2, 0).to_string(), "y*Dx^2");
        assert_eq!(jzero(1).to_string(), "x*Dx - 1/2");
        assert_eq!(DiffOp::dx().compose(&DiffOp::dy()).to_string(), "Dx*Dy");
        assert_eq!(DiffOp::monomial(frac(-3, 2), 0, 0, 0, 2).to_string(), "-3/2*Dy^2");
    }
}
