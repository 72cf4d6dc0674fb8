//! 2x2 matrices of scalar operators with the Z2 grading.

use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::One;

use crate::diffop::{BiDegree, Deriv, DiffOp};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::module::ModuleSpec;
use crate::poly::{Exponent2, Poly2};
use crate::rational::Rational;
use crate::word::Operator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// `[[t11, t12], [t21, t22]]` acting on column vectors `(f1, f2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MatDiffOp {
    pub t11: DiffOp,
    pub t12: DiffOp,
    pub t21: DiffOp,
    pub t22: DiffOp,
}

/// Coordinate key: entry index `0..4` (row-major), derivative, coefficient monomial.
pub type MatKey = (u8, Deriv, Exponent2);

impl MatDiffOp {
    pub fn new(t11: DiffOp, t12: DiffOp, t21: DiffOp, t22: DiffOp) -> Self {
        MatDiffOp { t11, t12, t21, t22 }
    }

    pub fn diag(a: DiffOp, b: DiffOp) -> Self {
        MatDiffOp::new(a, DiffOp::zero(), DiffOp::zero(), b)
    }

    pub fn scalar_diag(a: Rational, b: Rational) -> Self {
        MatDiffOp::diag(DiffOp::scalar(a), DiffOp::scalar(b))
    }

    /// `op * sigma+`: maps the second component into the first.
    pub fn upper(op: DiffOp) -> Self {
        MatDiffOp::new(DiffOp::zero(), op, DiffOp::zero(), DiffOp::zero())
    }

    /// `op * sigma-`: maps the first component into the second.
    pub fn lower(op: DiffOp) -> Self {
        MatDiffOp::new(DiffOp::zero(), DiffOp::zero(), op, DiffOp::zero())
    }

    pub fn sigma_plus() -> Self {
        MatDiffOp::upper(DiffOp::identity())
    }

    pub fn sigma_minus() -> Self {
        MatDiffOp::lower(DiffOp::identity())
    }

    pub fn sigma3() -> Self {
        MatDiffOp::scalar_diag(Rational::one(), -Rational::one())
    }

    pub fn projector(component: usize) -> Self {
        match component {
            1 => MatDiffOp::diag(DiffOp::identity(), DiffOp::zero()),
            _ => MatDiffOp::diag(DiffOp::zero(), DiffOp::identity()),
        }
    }

    pub fn entries(&self) -> [&DiffOp; 4] {
        [&self.t11, &self.t12, &self.t21, &self.t22]
    }

    fn map(&self, f: impl Fn(&DiffOp) -> DiffOp) -> Self {
        MatDiffOp::new(f(&self.t11), f(&self.t12), f(&self.t21), f(&self.t22))
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    /// `None` for operators mixing both parities.
    pub fn parity(&self) -> Option<Parity> {
        let diag = self.t11.is_zero() && self.t22.is_zero();
        let off = self.t12.is_zero() && self.t21.is_zero();
        match (off, diag) {
            (true, _) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn even_part(&self) -> Self {
        MatDiffOp::diag(self.t11.clone(), self.t22.clone())
    }

    pub fn odd_part(&self) -> Self {
        MatDiffOp::new(DiffOp::zero(), self.t12.clone(), self.t21.clone(), DiffOp::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        MatDiffOp::new(&self.t11 + &o.t11, &self.t12 + &o.t12, &self.t21 + &o.t21, &self.t22 + &o.t22)
    }

    pub fn sub(&self, o: &Self) -> Self {
        MatDiffOp::new(&self.t11 - &o.t11, &self.t12 - &o.t12, &self.t21 - &o.t21, &self.t22 - &o.t22)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn compose(&self, o: &Self) -> Self {
        let prod = |a: &DiffOp, b: &DiffOp, c: &DiffOp, d: &DiffOp| &a.compose(b) + &c.compose(d);
        MatDiffOp::new(
            prod(&self.t11, &o.t11, &self.t12, &o.t21),
            prod(&self.t11, &o.t12, &self.t12, &o.t22),
            prod(&self.t21, &o.t11, &self.t22, &o.t21),
            prod(&self.t21, &o.t12, &self.t22, &o.t22),
        )
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.compose(o).sub(&o.compose(self))
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        self.compose(o).add(&o.compose(self))
    }

    /// Anticommutator for two odd operators, commutator otherwise.
    pub fn supercommutator(&self, o: &Self) -> Result<Self> {
        match (self.parity(), o.parity()) {
            (Some(Parity::Odd), Some(Parity::Odd)) => Ok(self.anticommutator(o)),
            (Some(_), Some(_)) => Ok(self.commutator(o)),
            _ => Err(Error::InhomogeneousInput),
        }
    }

    pub fn apply(&self, f: &(Poly2, Poly2)) -> (Poly2, Poly2) {
        (
            &self.t11.apply(&f.0) + &self.t12.apply(&f.1),
            &self.t21.apply(&f.0) + &self.t22.apply(&f.1),
        )
    }

    pub fn order(&self) -> Option<u32> {
        self.entries().iter().filter_map(|e| e.order()).max()
    }

    pub fn bidegree_decompose(&self) -> BTreeMap<BiDegree, MatDiffOp> {
        let mut out: BTreeMap<BiDegree, MatDiffOp> = BTreeMap::new();
        for (slot, e) in self.entries().into_iter().enumerate() {
            for (b, part) in e.bidegree_decompose() {
                let m = out.entry(b).or_default();
                *m = m.add(&MatDiffOp::slot(slot, part));
            }
        }
        out
    }

    pub fn bidegree(&self) -> Option<BiDegree> {
        let parts = self.bidegree_decompose();
        if parts.len() == 1 {
            parts.keys().next().copied()
        } else {
            None
        }
    }

    fn slot(slot: usize, op: DiffOp) -> Self {
        let z = DiffOp::zero;
        match slot {
            0 => MatDiffOp::new(op, z(), z(), z()),
            1 => MatDiffOp::new(z(), op, z(), z()),
            2 => MatDiffOp::new(z(), z(), op, z()),
            _ => MatDiffOp::new(z(), z(), z(), op),
        }
    }

    pub fn to_vector(&self) -> SparseVec<MatKey> {
        let mut v = SparseVec::new();
        for (slot, e) in self.entries().into_iter().enumerate() {
            for ((d, x), c) in e.to_vector() {
                v.insert((slot as u8, d, x), c);
            }
        }
        v
    }

    /// Scalar `c` when the operator is `c` times the identity.
    pub fn as_identity_multiple(&self) -> Option<Rational> {
        if !self.t12.is_zero() || !self.t21.is_zero() {
            return None;
        }
        let a = self.t11.as_scalar()?;
        let b = self.t22.as_scalar()?;
        (a == b).then_some(a)
    }
}

impl Operator for MatDiffOp {
    type Key = MatKey;

    fn identity() -> Self {
        MatDiffOp::diag(DiffOp::identity(), DiffOp::identity())
    }
    fn zero() -> Self {
        MatDiffOp::default()
    }
    fn compose(&self, other: &Self) -> Self {
        MatDiffOp::compose(self, other)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn is_zero(&self) -> bool {
        MatDiffOp::is_zero(self)
    }
    fn coordinates(&self) -> SparseVec<MatKey> {
        self.to_vector()
    }
}

impl fmt::Display for MatDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.t11, self.t12, self.t21, self.t22)
    }
}

/// `M1 (+) M2`; entry `(i, j)` maps component `j` into component `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankTwoModule {
    pub first: ModuleSpec,
    pub second: ModuleSpec,
}

impl RankTwoModule {
    pub fn new(first: ModuleSpec, second: ModuleSpec) -> Self {
        RankTwoModule { first, second }
    }

    /// `(source, target)` of each entry in row-major order.
    pub fn slots(&self) -> [(ModuleSpec, ModuleSpec); 4] {
        [
            (self.first, self.first),
            (self.second, self.first),
            (self.first, self.second),
            (self.second, self.second),
        ]
    }

    pub fn dim(&self) -> usize {
        self.first.dim() + self.second.dim()
    }

    /// First entry that escapes, with a description.
    pub fn escape_witness(&self, t: &MatDiffOp) -> Option<alloc::string::String> {
        for (slot, (e, (src, tgt))) in t.entries().into_iter().zip(self.slots()).enumerate() {
            if let Some((b, img)) = src.escape_witness(e, &tgt) {
                return Some(alloc::format!(
                    "entry {}{}: x^{}*y^{} -> {} leaves {}",
                    slot / 2 + 1,
                    slot % 2 + 1,
                    b.i,
                    b.j,
                    img,
                    tgt
                ));
            }
        }
        None
    }

    pub fn preserved_by(&self, t: &MatDiffOp) -> bool {
        self.escape_witness(t).is_none()
    }

    /// `(complement, kernel)` with derivatives judged by each column's module.
    pub fn kernel_split(&self, t: &MatDiffOp) -> (MatDiffOp, MatDiffOp) {
        let split = |e: &DiffOp, src: &ModuleSpec| src.kernel_split(e);
        let s = self.slots();
        let (a, ak) = split(&t.t11, &s[0].0);
        let (b, bk) = split(&t.t12, &s[1].0);
        let (c, ck) = split(&t.t21, &s[2].0);
        let (d, dk) = split(&t.t22, &s[3].0);
        (MatDiffOp::new(a, b, c, d), MatDiffOp::new(ak, bk, ck, dk))
    }
}
