//! Sparse bivariate polynomials over the rationals.

use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{self, falling, Rational};

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
///
/// Ordered graded-lexicographically: by total degree, then by decreasing
/// power of `x`, so degree one reads `x, y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponent2 {
    pub i: u32,
    pub j: u32,
}

impl Exponent2 {
    pub const ONE: Exponent2 = Exponent2 { i: 0, j: 0 };

    pub const fn new(i: u32, j: u32) -> Self {
        Exponent2 { i, j }
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j
    }

    /// Componentwise `self <= other`, i.e. `x^i y^j` divides the other monomial.
    pub fn divides(&self, other: &Exponent2) -> bool {
        self.i <= other.i && self.j <= other.j
    }
}

impl Ord for Exponent2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.i.cmp(&self.i))
    }
}

impl PartialOrd for Exponent2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, *self, true)
    }
}

/// Coordinate axis for partial derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

/// A polynomial `sum c_ij x^i y^j` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Exponent2, Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly2::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Poly2::zero();
        p.add_term(Exponent2::new(i, j), c);
        p
    }

    pub fn x() -> Self {
        Poly2::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Poly2::monomial(Rational::one(), 0, 1)
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

    pub fn coeff(&self, e: Exponent2) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent2, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Exponent2, Rational> {
        self.terms
    }

    /// Adds `c x^e` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: Exponent2, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|e| e.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == Exponent2::ONE)
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: Exponent2) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (Exponent2::new(k.i + e.i, k.j + e.j), v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(Exponent2::new(a.i + b.i, a.j + b.j), ca * cb);
            }
        }
        out
    }

    /// Iterated partial derivative `d^order/d axis^order`.
    pub fn diff(&self, axis: Axis, order: u32) -> Poly2 {
        self.diff2(
            match axis {
                Axis::X => order,
                Axis::Y => 0,
            },
            match axis {
                Axis::X => 0,
                Axis::Y => order,
            },
        )
    }

    /// Mixed partial `d_x^a d_y^b`.
    pub fn diff2(&self, a: u32, b: u32) -> Poly2 {
        if a == 0 && b == 0 {
            return self.clone();
        }
        let mut out = Poly2::zero();
        for (e, c) in &self.terms {
            if e.i < a || e.j < b {
                continue;
            }
            let k = falling(e.i, a) * falling(e.j, b);
            out.add_term(Exponent2::new(e.i - a, e.j - b), c * k);
        }
        out
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        Poly2::add(self, rhs)
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        Poly2::sub(self, rhs)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        Poly2::mul(self, rhs)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(self, rhs: Poly2) -> Poly2 {
        Poly2::add(&self, &rhs)
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: Poly2) -> Poly2 {
        Poly2::sub(&self, &rhs)
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        Poly2::mul(&self, &rhs)
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}

impl From<Rational> for Poly2 {
    fn from(c: Rational) -> Self {
        Poly2::constant(c)
    }
}

/// Printing order: higher total degree first, then higher power of `x`.
pub(crate) fn print_key(e: &Exponent2) -> (core::cmp::Reverse<u32>, core::cmp::Reverse<u32>) {
    (core::cmp::Reverse(e.degree()), core::cmp::Reverse(e.i))
}

/// Writes `x^i*y^j` (nothing for the unit monomial unless `show_one`).
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, e: Exponent2, show_one: bool) -> fmt::Result {
    let mut first = true;
    let mut factor = |f: &mut fmt::Formatter<'_>, name: &str, pow: u32| -> fmt::Result {
        if pow == 0 {
            return Ok(());
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if pow > 1 {
            write!(f, "^{}", pow)?;
        }
        Ok(())
    };
    factor(f, "x", e.i)?;
    factor(f, "y", e.j)?;
    if first && show_one {
        f.write_str("1")?;
    }
    Ok(())
}

/// Writes one signed term `c * <factors>`; `factors` writes the non-scalar part
/// and reports whether it wrote anything.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    leading: bool,
    has_factors: bool,
    factors: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    let neg = c.is_negative();
    match (leading, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mag = rational::abs(c);
    if !has_factors {
        return rational::write_rational(f, &mag);
    }
    if !mag.is_one() {
        rational::write_rational(f, &mag)?;
        f.write_str("*")?;
    }
    factors(f)
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: alloc::vec::Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| print_key(e));
        for (n, (e, c)) in terms.into_iter().enumerate() {
            write_term(f, c, n == 0, *e != Exponent2::ONE, |f| write_monomial(f, *e, false))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use alloc::string::ToString;

    fn p(terms: &[(i64, u32, u32)]) -> Poly2 {
        let mut out = Poly2::zero();
        for &(c, i, j) in terms {
            out.add_term(Exponent2::new(i, j), int(c));
        }
        out
    }

    #[test]
    fn add_examples() {
        let a = p(&[(1, 1, 0), (1, 0, 1)]);
        let b = p(&[(-1, 1, 0)]);
        assert_eq!(&a + &b, Poly2::y());
        let x2y = p(&[(1, 2, 1)]);
        assert_eq!(&Poly2::zero() + &x2y, x2y);
        let x2 = p(&[(1, 2, 0)]);
        assert_eq!(&x2 + &x2, p(&[(2, 2, 0)]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&Poly2::x() * &Poly2::y(), p(&[(1, 1, 1)]));
        let s = p(&[(1, 1, 0), (1, 0, 1)]);
        let d = p(&[(1, 1, 0), (-1, 0, 1)]);
        assert_eq!(&s * &d, p(&[(1, 2, 0), (-1, 0, 2)]));
        let q = p(&[(3, 2, 1), (-2, 0, 0)]);
        assert_eq!(&Poly2::one() * &q, q);
    }

    #[test]
    fn diff_examples() {
        assert_eq!(p(&[(1, 3, 0)]).diff(Axis::X, 1), p(&[(3, 2, 0)]));
        assert_eq!(p(&[(1, 0, 2)]).diff(Axis::Y, 2), p(&[(2, 0, 0)]));
        assert!(p(&[(1, 0, 4)]).diff(Axis::X, 1).is_zero());
    }

    #[test]
    fn graded_lex_order() {
        let mut es = alloc::vec![
            Exponent2::new(0, 2),
            Exponent2::new(1, 0),
            Exponent2::new(0, 0),
            Exponent2::new(2, 0),
            Exponent2::new(0, 1),
            Exponent2::new(1, 1),
        ];
        es.sort();
        assert_eq!(
            es,
            alloc::vec![
                Exponent2::new(0, 0),
                Exponent2::new(1, 0),
                Exponent2::new(0, 1),
                Exponent2::new(2, 0),
                Exponent2::new(1, 1),
                Exponent2::new(0, 2),
            ]
        );
    }

    #[test]
    fn display_canonical() {
        let mut q = p(&[(3, 2, 1)]);
        q.add_term(Exponent2::ONE, frac(-1, 2));
        assert_eq!(q.to_string(), "3*x^2*y - 1/2");
        assert_eq!(Poly2::zero().to_string(), "0");
        assert_eq!(p(&[(-1, 1, 0)]).to_string(), "-x");
        assert_eq!(p(&[(1, 0, 2), (1, 1, 1), (1, 2, 0)]).to_string(), "x^2 + x*y + y^2");
    }
}
