//! The invariant polynomial modules: 1-D, rectangular, triangular and
//! staircase spans of monomials.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::diffop::{Deriv, DiffOp};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Exponent2, Poly2};
use crate::rational::{falling, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleSpec {
    /// `x^i`, `i <= n`.
    Poly1D(u32),
    /// `x^i y^j`, `i <= n`, `j <= m`.
    Rect(u32, u32),
    /// `x^i y^j`, `i + j <= n`.
    Tri(u32),
    /// `x^i y^j`, `i + r j <= p`, `j <= q`.
    Stair { r: u32, p: u32, q: u32 },
}

impl ModuleSpec {
    /// Untruncated staircase `q = floor(p / r)`.
    pub fn stair(r: u32, p: u32) -> Self {
        ModuleSpec::Stair { r, p, q: p / r }
    }

    pub fn contains(&self, e: Exponent2) -> bool {
        let (i, j) = (e.i, e.j);
        match *self {
            ModuleSpec::Poly1D(n) => j == 0 && i <= n,
            ModuleSpec::Rect(n, m) => i <= n && j <= m,
            ModuleSpec::Tri(n) => i + j <= n,
            ModuleSpec::Stair { r, p, q } => j <= q && i + r * j <= p,
        }
    }

    /// Whether `d` is an allowed derivative in the distinguished complement.
    pub fn allows_deriv(&self, d: Deriv) -> bool {
        self.contains(d.as_exponent())
    }

    fn bounding_box(&self) -> (u32, u32) {
        match *self {
            ModuleSpec::Poly1D(n) => (n, 0),
            ModuleSpec::Rect(n, m) => (n, m),
            ModuleSpec::Tri(n) => (n, n),
            ModuleSpec::Stair { r, p, q } => (p, q.min(p / r)),
        }
    }

    /// Lattice points in graded-lex order.
    pub fn basis(&self) -> Vec<Exponent2> {
        let (bi, bj) = self.bounding_box();
        let mut out: Vec<Exponent2> = (0..=bj)
            .flat_map(|j| (0..=bi).map(move |i| Exponent2::new(i, j)))
            .filter(|e| self.contains(*e))
            .collect();
        out.sort();
        out
    }

    /// Closed-form dimension.
    pub fn dim(&self) -> usize {
        match *self {
            ModuleSpec::Poly1D(n) => n as usize + 1,
            ModuleSpec::Rect(n, m) => (n as usize + 1) * (m as usize + 1),
            ModuleSpec::Tri(n) => (n as usize + 1) * (n as usize + 2) / 2,
            ModuleSpec::Stair { r, p, q } => {
                // (q0 + 1)(p + 1 - r q0 / 2) with q0 the effective height.
                let q0 = q.min(p / r) as usize;
                (q0 + 1) * (2 * (p as usize + 1) - r as usize * q0) / 2
            }
        }
    }

    /// Position of each basis monomial.
    pub fn index_of(&self, e: Exponent2) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        self.basis().binary_search(&e).ok()
    }

    /// First basis monomial whose image leaves `target`, with that image.
    pub fn escape_witness(&self, t: &DiffOp, target: &ModuleSpec) -> Option<(Exponent2, Poly2)> {
        self.basis().into_iter().find_map(|b| {
            let img = t.apply_monomial(b);
            let escapes = img.terms().any(|(e, _)| !target.contains(*e));
            escapes.then_some((b, img))
        })
    }

    pub fn preserved_by(&self, t: &DiffOp) -> bool {
        self.escape_witness(t, self).is_none()
    }

    /// `(complement part, kernel part)`; the kernel part annihilates the module.
    pub fn kernel_split(&self, t: &DiffOp) -> (DiffOp, DiffOp) {
        (t.filter_derivs(|d| self.allows_deriv(d)), t.filter_derivs(|d| !self.allows_deriv(d)))
    }

    pub fn in_complement(&self, t: &DiffOp) -> bool {
        t.terms().all(|(d, _)| self.allows_deriv(*d))
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModuleSpec::Poly1D(n) => write!(f, "P({n})"),
            ModuleSpec::Rect(n, m) => write!(f, "R({n},{m})"),
            ModuleSpec::Tri(n) => write!(f, "T({n})"),
            ModuleSpec::Stair { r, p, q } => write!(f, "S({r},{p},{q})"),
        }
    }
}

pub fn preserves(t: &DiffOp, spec: &ModuleSpec) -> bool {
    spec.preserved_by(t)
}

fn not_preserving(source: &ModuleSpec, target: &ModuleSpec, b: Exponent2, img: &Poly2) -> Error {
    let into = if source == target { "itself".to_string() } else { target.to_string() };
    Error::NotPreserving {
        witness: format!("x^{}*y^{} -> {} leaves {} (maps {} into {})", b.i, b.j, img, target, source, into),
    }
}

/// Matrix of `t : source -> target`; column `c` holds the image of
/// `source.basis()[c]` in `target.basis()` coordinates.
pub fn map_matrix(t: &DiffOp, source: &ModuleSpec, target: &ModuleSpec) -> Result<Matrix> {
    let sb = source.basis();
    let tb = target.basis();
    let mut m = Matrix::zeros(tb.len(), sb.len());
    for (c, b) in sb.iter().enumerate() {
        let img = t.apply_monomial(*b);
        for (e, coef) in img.terms() {
            let Ok(r) = tb.binary_search(e) else {
                return Err(not_preserving(source, target, *b, &img));
            };
            m.set(r, c, coef.clone());
        }
    }
    Ok(m)
}

/// Restriction of `t` to `spec` as a matrix.
pub fn action_matrix(t: &DiffOp, spec: &ModuleSpec) -> Result<Matrix> {
    map_matrix(t, spec, spec)
}

/// The unique operator with derivatives allowed by `source` whose action
/// `source -> target` is `m`.
///
/// Coefficients are fixed one basis monomial at a time in graded-lex order:
/// `f_ab = (M(x^a y^b) - sum f_ij a!/(a-i)! b!/(b-j)! x^(a-i) y^(b-j)) / (a! b!)`
/// over earlier `(i, j) <= (a, b)`.
pub fn lift_map(m: &Matrix, source: &ModuleSpec, target: &ModuleSpec) -> Result<DiffOp> {
    let sb = source.basis();
    let tb = target.basis();
    if m.cols() != sb.len() || m.rows() != tb.len() {
        return Err(Error::DimensionMismatch { expected: sb.len() * tb.len(), found: m.rows() * m.cols() });
    }
    let mut coeffs: Vec<(Exponent2, Poly2)> = Vec::with_capacity(sb.len());
    for (c, b) in sb.iter().enumerate() {
        let mut rhs = Poly2::zero();
        for (r, e) in tb.iter().enumerate() {
            rhs.add_term(*e, m.get(r, c).clone());
        }
        for (d, f) in &coeffs {
            if d.i <= b.i && d.j <= b.j {
                let k = falling(b.i, d.i) * falling(b.j, d.j);
                let shifted = f.shift(Exponent2::new(b.i - d.i, b.j - d.j)).scale(&k);
                rhs = &rhs - &shifted;
            }
        }
        let norm = falling(b.i, b.i) * falling(b.j, b.j);
        coeffs.push((*b, rhs.scale(&(Rational::one() / norm))));
    }
    let mut out = DiffOp::zero();
    for (d, f) in &coeffs {
        out.add_poly(Deriv::new(d.i, d.j), f);
    }
    Ok(out)
}

/// Inverse of [`action_matrix`] on the distinguished complement.
pub fn lift_endomorphism(m: &Matrix, spec: &ModuleSpec) -> Result<DiffOp> {
    lift_map(m, spec, spec)
}

/// Dimension of the space of maps `source -> target` changing the `y`
/// exponent by at most zero, counted on monomial pairs.
pub fn nonpositive_y_pairs(source: &ModuleSpec, target: &ModuleSpec) -> usize {
    let tb = target.basis();
    source
        .basis()
        .iter()
        .map(|s| tb.iter().filter(|t| t.j <= s.j).count())
        .sum()
}

/// Whether `m` is the identity matrix.
pub fn is_identity(m: &Matrix) -> bool {
    (0..m.rows()).all(|r| {
        (0..m.cols()).all(|c| {
            let v = m.get(r, c);
            if r == c {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    fn e(i: u32, j: u32) -> Exponent2 {
        Exponent2::new(i, j)
    }

    fn brute_dim(spec: &ModuleSpec) -> usize {
        let mut n = 0;
        for i in 0..=20 {
            for j in 0..=20 {
                if spec.contains(e(i, j)) {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn basis_examples() {
        assert_eq!(ModuleSpec::Tri(2).basis(), vec![e(0, 0), e(1, 0), e(0, 1), e(2, 0), e(1, 1), e(0, 2)]);
        let s = ModuleSpec::Stair { r: 2, p: 2, q: 1 }.basis();
        assert_eq!(s.len(), 4);
        for m in [e(0, 0), e(1, 0), e(2, 0), e(0, 1)] {
            assert!(s.contains(&m));
        }
        assert_eq!(ModuleSpec::Rect(1, 1).basis(), vec![e(0, 0), e(1, 0), e(0, 1), e(1, 1)]);
    }

    #[test]
    fn dims_match_enumeration() {
        assert_eq!(ModuleSpec::Tri(3).dim(), 10);
        assert_eq!(ModuleSpec::Stair { r: 2, p: 4, q: 2 }.dim(), 9);
        assert_eq!(ModuleSpec::Rect(2, 3).dim(), 12);
        for a in 0..=8 {
            assert_eq!(ModuleSpec::Poly1D(a).dim(), brute_dim(&ModuleSpec::Poly1D(a)));
            assert_eq!(ModuleSpec::Tri(a).dim(), brute_dim(&ModuleSpec::Tri(a)));
            for b in 0..=8 {
                let rect = ModuleSpec::Rect(a, b);
                assert_eq!(rect.dim(), brute_dim(&rect));
                assert_eq!(rect.dim(), rect.basis().len());
                for r in 2..=4 {
                    let st = ModuleSpec::Stair { r, p: a, q: b };
                    assert_eq!(st.dim(), brute_dim(&st), "{st}");
                    assert_eq!(st.dim(), st.basis().len());
                }
            }
        }
    }

    #[test]
    fn preservation_examples() {
        let y_dxx = DiffOp::monomial(int(1), 0, 1, 2, 0);
        assert!(preserves(&y_dxx, &ModuleSpec::Stair { r: 2, p: 4, q: 2 }));
        let yy_dx = DiffOp::monomial(int(1), 0, 2, 1, 0);
        assert!(!preserves(&yy_dx, &ModuleSpec::Rect(1, 1)));
        let jp = DiffOp::monomial(int(1), 2, 0, 1, 0) - DiffOp::monomial(int(2), 1, 0, 0, 0);
        assert!(preserves(&jp, &ModuleSpec::Poly1D(2)));
    }

    #[test]
    fn kernel_split_examples() {
        let dxx = DiffOp::monomial(int(1), 0, 0, 2, 0);
        assert_eq!(ModuleSpec::Rect(1, 1).kernel_split(&dxx), (DiffOp::zero(), dxx));
        let xdx = DiffOp::monomial(int(1), 1, 0, 1, 0);
        assert_eq!(ModuleSpec::Tri(3).kernel_split(&xdx), (xdx.clone(), DiffOp::zero()));
        let dxdy = DiffOp::monomial(int(1), 0, 0, 1, 1);
        let dyy = DiffOp::monomial(int(1), 0, 0, 0, 2);
        let st = ModuleSpec::Stair { r: 2, p: 3, q: 1 };
        let (comp, ker) = st.kernel_split(&(&dxdy + &dyy));
        assert_eq!((comp, ker.clone()), (dxdy, dyy));
        for b in st.basis() {
            assert!(ker.apply_monomial(b).is_zero());
        }
    }

    #[test]
    fn lift_examples() {
        let tri = ModuleSpec::Tri(1);
        assert_eq!(lift_endomorphism(&Matrix::identity(3), &tri).unwrap(), DiffOp::identity());
        let p2 = ModuleSpec::Poly1D(2);
        let m = action_matrix(&DiffOp::dx(), &p2).unwrap();
        assert_eq!(lift_endomorphism(&m, &p2).unwrap(), DiffOp::dx());

        // x^2 (x^2 Dx^2 - 2 x Dx - 2 y Dy + 2) on S(2,2,1): 1 -> 2x^2, kills x, x^2, y.
        let st = ModuleSpec::Stair { r: 2, p: 2, q: 1 };
        let inner = DiffOp::monomial(int(1), 2, 0, 2, 0) - DiffOp::monomial(int(2), 1, 0, 1, 0)
            - DiffOp::monomial(int(2), 0, 1, 0, 1)
            + DiffOp::scalar(int(2));
        let op = DiffOp::mult(Poly2::monomial(int(1), 2, 0)).compose(&inner);
        let am = action_matrix(&op, &st).unwrap();
        assert_eq!(am.rank(), 1);
        let mut want = Matrix::zeros(4, 4);
        want.set(st.index_of(e(2, 0)).unwrap(), 0, int(2));
        assert_eq!(am, want);
        let lifted = lift_endomorphism(&want, &st).unwrap();
        assert_eq!(lifted, st.kernel_split(&op).0);
        assert_eq!(action_matrix(&lifted, &st).unwrap(), want);
    }

    #[test]
    fn action_matrix_rejects_escape() {
        let err = action_matrix(&DiffOp::x(), &ModuleSpec::Poly1D(1)).unwrap_err();
        assert!(matches!(err, Error::NotPreserving { .. }));
    }
}
