//! Generator realizations: the 1-D `sl2` family and the three maximal
//! families acting on rectangular, triangular and staircase modules.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::diffop::{BiDegree, DiffOp};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::module::ModuleSpec;
use crate::poly::Axis;
use crate::rational::{frac, int, Rational};
use crate::word::Operator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorFamily {
    Sl2(u32),
    G11(u32, u32),
    G15(u32),
    G24 { r: u32, p: u32 },
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorFamily::Sl2(n) => write!(f, "sl2({n})"),
            GeneratorFamily::G11(n, m) => write!(f, "g11({n},{m})"),
            GeneratorFamily::G15(n) => write!(f, "g15({n})"),
            GeneratorFamily::G24 { r, p } => write!(f, "g24({r},{p})"),
        }
    }
}

/// `(J+, J-, J0)` in one variable with weight `n`:
/// `t^2 Dt - n t`, `Dt`, `t Dt - n/2`.
pub fn sl2_triple(axis: Axis, n: &Rational) -> [DiffOp; 3] {
    let (a, b) = match axis {
        Axis::X => (1, 0),
        Axis::Y => (0, 1),
    };
    let one = Rational::one();
    let plus = DiffOp::monomial(one.clone(), 2 * a, 2 * b, a, b) - DiffOp::monomial(n.clone(), a, b, 0, 0);
    let minus = DiffOp::monomial(one.clone(), 0, 0, a, b);
    let zero = DiffOp::monomial(one, a, b, a, b) - DiffOp::scalar(n / int(2));
    [plus, minus, zero]
}

/// The eight `sl3` generators `J1..J8` with weight `n`.
pub fn g15_ops(n: &Rational) -> Vec<DiffOp> {
    let m = |i, j, a, b| DiffOp::monomial(Rational::one(), i, j, a, b);
    let third = n / int(3);
    vec![
        m(2, 0, 1, 0) + m(1, 1, 0, 1) - DiffOp::monomial(n.clone(), 1, 0, 0, 0),
        m(1, 1, 1, 0) + m(0, 2, 0, 1) - DiffOp::monomial(n.clone(), 0, 1, 0, 0),
        m(0, 1, 1, 0),
        m(0, 0, 1, 0),
        m(0, 0, 0, 1),
        m(1, 0, 0, 1),
        m(1, 0, 1, 0) - DiffOp::scalar(third.clone()),
        m(0, 1, 0, 1) - DiffOp::scalar(third),
    ]
}

/// `J1..J4, J5..J(5+r)` of the staircase family with parameter `p`.
pub fn g24_ops(r: u32, p: &Rational) -> Vec<DiffOp> {
    let m = |i, j, a, b| DiffOp::monomial(Rational::one(), i, j, a, b);
    let mut out = vec![
        m(0, 0, 1, 0),
        m(2, 0, 1, 0) + DiffOp::monomial(int(r as i64), 1, 1, 0, 1) - DiffOp::monomial(p.clone(), 1, 0, 0, 0),
        m(1, 0, 1, 0) - DiffOp::scalar(p / int(2)),
        m(0, 1, 0, 1),
    ];
    for i in 0..=r {
        out.push(m(i, 0, 0, 1));
    }
    out
}

impl GeneratorFamily {
    pub fn names(&self) -> Vec<String> {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        match *self {
            GeneratorFamily::Sl2(_) => s(&["J+", "J-", "J0"]),
            GeneratorFamily::G11(..) => s(&["J+", "J-", "J0", "K+", "K-", "K0"]),
            GeneratorFamily::G15(_) => (1..=8).map(|i| format!("J{i}")).collect(),
            GeneratorFamily::G24 { r, .. } => (1..=5 + r).map(|i| format!("J{i}")).collect(),
        }
    }

    pub fn ops(&self) -> Vec<DiffOp> {
        match *self {
            GeneratorFamily::Sl2(n) => sl2_triple(Axis::X, &int(n as i64)).to_vec(),
            GeneratorFamily::G11(n, m) => {
                let mut v = sl2_triple(Axis::X, &int(n as i64)).to_vec();
                v.extend(sl2_triple(Axis::Y, &int(m as i64)));
                v
            }
            GeneratorFamily::G15(n) => g15_ops(&int(n as i64)),
            GeneratorFamily::G24 { r, p } => g24_ops(r, &int(p as i64)),
        }
    }

    pub fn len(&self) -> usize {
        match *self {
            GeneratorFamily::Sl2(_) => 3,
            GeneratorFamily::G11(..) => 6,
            GeneratorFamily::G15(_) => 8,
            GeneratorFamily::G24 { r, .. } => 5 + r as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| n == name)
    }

    /// The module the family is built to preserve (untruncated for staircases).
    pub fn natural_module(&self) -> ModuleSpec {
        match *self {
            GeneratorFamily::Sl2(n) => ModuleSpec::Poly1D(n),
            GeneratorFamily::G11(n, m) => ModuleSpec::Rect(n, m),
            GeneratorFamily::G15(n) => ModuleSpec::Tri(n),
            GeneratorFamily::G24 { r, p } => ModuleSpec::stair(r, p),
        }
    }

    pub fn acts_on(&self, spec: &ModuleSpec) -> bool {
        match (*self, *spec) {
            (GeneratorFamily::Sl2(n), ModuleSpec::Poly1D(k)) => n == k,
            (GeneratorFamily::G11(n, m), ModuleSpec::Rect(a, b)) => n == a && m == b,
            (GeneratorFamily::G15(n), ModuleSpec::Tri(k)) => n == k,
            (GeneratorFamily::G24 { r, p }, ModuleSpec::Stair { r: r2, p: p2, q }) => {
                r == r2 && p == p2 && q <= p / r
            }
            _ => false,
        }
    }

    pub fn check_module(&self, spec: &ModuleSpec) -> Result<()> {
        if self.acts_on(spec) {
            Ok(())
        } else {
            Err(Error::FamilyModuleMismatch { family: self.to_string(), module: spec.to_string() })
        }
    }

    /// Bidegree of every generator; errors if one is inhomogeneous.
    pub fn bidegrees(&self) -> Result<Vec<BiDegree>> {
        self.ops().iter().map(|op| op.bidegree().ok_or(Error::Inhomogeneous)).collect()
    }

    /// Brackets of all generator pairs expressed in the generators plus the
    /// identity.
    pub fn structure_table(&self) -> Result<StructureTable> {
        structure_table(&self.names(), &self.ops(), |a, b| a.commutator(b))
    }
}

/// `[g_left, g_right] = sum coeffs[k] g_k + identity * 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub left: usize,
    pub right: usize,
    pub coeffs: Vec<Rational>,
    pub identity: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    pub names: Vec<String>,
    pub brackets: Vec<Bracket>,
}

impl StructureTable {
    /// Equal after forgetting the identity components.
    pub fn same_modulo_identity(&self, other: &StructureTable) -> bool {
        self.names == other.names
            && self.brackets.len() == other.brackets.len()
            && self
                .brackets
                .iter()
                .zip(&other.brackets)
                .all(|(a, b)| a.left == b.left && a.right == b.right && a.coeffs == b.coeffs)
    }

    pub fn format_bracket(&self, b: &Bracket) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in b.coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.push(format!("{}*{}", c, self.names[k]));
            }
        }
        if !b.identity.is_zero() {
            terms.push(format!("{}", b.identity));
        }
        let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        format!("[{}, {}] = {}", self.names[b.left], self.names[b.right], rhs)
    }
}

/// Builds a bracket table for any operator type. Generators must be
/// independent modulo the identity.
pub fn structure_table<O: Operator>(
    names: &[String],
    ops: &[O],
    bracket: impl Fn(&O, &O) -> O,
) -> Result<StructureTable> {
    let n = ops.len();
    let mut ech = Echelon::new();
    for (i, op) in ops.iter().enumerate() {
        if !ech.insert(i, &op.coordinates()) {
            return Err(Error::DimensionMismatch { expected: n, found: i });
        }
    }
    ech.insert(n, &O::identity().coordinates());
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in a..n {
            let v = bracket(&ops[a], &ops[b]).coordinates();
            let combo = ech.express(&v).ok_or_else(|| Error::NotClosed {
                pair: format!("[{}, {}]", names[a], names[b]),
            })?;
            let mut coeffs = vec![Rational::zero(); n];
            for (k, c) in &combo {
                if *k < n {
                    coeffs[*k] = c.clone();
                }
            }
            let identity = combo.get(&n).cloned().unwrap_or_default();
            brackets.push(Bracket { left: a, right: b, coeffs, identity });
        }
    }
    Ok(StructureTable { names: names.to_vec(), brackets })
}

/// `J+ J- = J0^2 - J0 - n(n+2)/4`; with `perturbed` the constant is off by one.
pub fn casimir_sl2_holds(n: u32, perturbed: bool) -> bool {
    let [jp, jm, j0] = sl2_triple(Axis::X, &int(n as i64));
    let mut constant = frac((n * (n + 2)) as i64, 4);
    if perturbed {
        constant += int(1);
    }
    let lhs = jp.compose(&jm);
    let rhs = j0.compose(&j0) - j0.clone() - DiffOp::scalar(constant);
    lhs == rhs
}

#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub index: usize,
    pub lhs: DiffOp,
    pub rhs: DiffOp,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The nine quadratic relations among `J1..J8` (indices 0-based in `j`).
pub fn sl3_relations(j: &[DiffOp], n: &Rational) -> Vec<RelationCheck> {
    let c = n / int(3);
    let c1 = &c + int(1);
    let s = |q: &Rational| DiffOp::scalar(q.clone());
    let k = |a: usize, b: usize| j[a].compose(&j[b]);
    let (j7, j8) = (&j[6], &j[7]);
    let cc1 = &c * &c1;
    let pairs = vec![
        (k(0, 2), j[1].compose(&(j7 + &s(&c)))),
        (
            k(0, 3),
            k(6, 6) + k(6, 7) - j7.clone() + j8.scale(&c) - s(&cc1),
        ),
        (k(0, 4), j[5].compose(&(&(j7 + j8) - &s(&c1)))),
        (k(1, 3), j[2].compose(&(&(j7 + j8) - &s(&c1)))),
        (
            k(1, 4),
            k(6, 7) + k(7, 7) + j7.scale(&c) - j8.clone() - s(&cc1),
        ),
        (k(1, 5), j[0].compose(&(j8 + &s(&c)))),
        (k(2, 4), j[3].compose(&(j8 + &s(&c)))),
        (k(2, 5), k(6, 7) + j7.scale(&c) + j8.scale(&c1) + s(&cc1)),
        (k(3, 5), j[4].compose(&(j7 + &s(&c1)))),
    ];
    pairs
        .into_iter()
        .enumerate()
        .map(|(i, (lhs, rhs))| RelationCheck { index: i + 1, lhs, rhs })
        .collect()
}

pub fn verify_relations_sl3(n: u32) -> Vec<RelationCheck> {
    let nn = int(n as i64);
    sl3_relations(&g15_ops(&nn), &nn)
}
