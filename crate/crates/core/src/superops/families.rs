//! The three superalgebra families and their generators.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use super::mat::{MatDiffOp, Parity, RankTwoModule};
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::generators::{g15_ops, g24_ops, sl2_triple};
use crate::module::ModuleSpec;
use crate::poly::Axis;
use crate::rational::{frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuperFamily {
    /// Acts on `R(n-delta, m) (+) R(n, m-gamma)`.
    Rect { n: u32, m: u32, delta: u32, gamma: u32 },
    /// Acts on `T(n-delta) (+) T(n)`.
    Tri { n: u32, delta: u32 },
    /// Acts on `S(r, p-1, q) (+) S(r, p, q)`.
    Stair { r: u32, p: u32, q: u32 },
}

impl fmt::Display for SuperFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SuperFamily::Rect { n, m, delta, gamma } => write!(f, "sR({n},{m},{delta},{gamma})"),
            SuperFamily::Tri { n, delta } => write!(f, "sT({n},{delta})"),
            SuperFamily::Stair { r, p, q } => {
                if q == default_stair_q(r, p) {
                    write!(f, "sS({r},{p})")
                } else {
                    write!(f, "sS({r},{p},{q})")
                }
            }
        }
    }
}

/// Largest `q` for which both staircase components share it.
pub fn default_stair_q(r: u32, p: u32) -> u32 {
    p.saturating_sub(1) / r.max(1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuperGenerator {
    pub name: String,
    pub op: MatDiffOp,
    pub parity: Parity,
}

/// Bookkeeping choices applied before closure and structure tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conventions {
    /// Replace `J`, `K` by `sigma3` and bracket with commutators only.
    pub lie: bool,
    /// Omit generators that are multiples of the identity.
    pub drop_central: bool,
}

impl Conventions {
    pub const RAW: Conventions = Conventions { lie: false, drop_central: false };
}

fn prod_euler(ops: &DiffOp, shift_base: i64, count: u32) -> DiffOp {
    // prod_{k=1}^{count} (ops + shift_base - k)
    let mut out = DiffOp::identity();
    for k in 1..=count as i64 {
        out = out.compose(&(ops + &DiffOp::scalar(int(shift_base - k))));
    }
    out
}

/// `prod_{k=1}^{delta-alpha} (t Dt - n + delta - k) Dt^alpha` in the variable `axis`.
pub fn qbar(axis: Axis, n: u32, delta: u32, alpha: u32) -> DiffOp {
    let (euler, d) = match axis {
        Axis::X => (DiffOp::monomial(Rational::one(), 1, 0, 1, 0), DiffOp::dx()),
        Axis::Y => (DiffOp::monomial(Rational::one(), 0, 1, 0, 1), DiffOp::dy()),
    };
    prod_euler(&euler, delta as i64 - n as i64, delta - alpha).compose(&d.pow(alpha))
}

/// `prod_{k=1}^{delta-a-b} (x Dx + y Dy - n + delta - k) Dx^a Dy^b`.
pub fn qbar2(n: u32, delta: u32, a: u32, b: u32) -> DiffOp {
    let euler = DiffOp::monomial(Rational::one(), 1, 0, 1, 0) + DiffOp::monomial(Rational::one(), 0, 1, 0, 1);
    prod_euler(&euler, delta as i64 - n as i64, delta - a - b).compose(&DiffOp::monomial(Rational::one(), 0, 0, a, b))
}

fn gen(name: String, op: MatDiffOp) -> SuperGenerator {
    let parity = op.parity().expect("generators are homogeneous");
    SuperGenerator { name, op, parity }
}

impl SuperFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SuperFamily::Rect { n, m, delta, gamma } if delta > n || gamma > m => {
                Err(Error::CaseOutsideScope(format!("{self}: gaps exceed the degrees")))
            }
            SuperFamily::Tri { n, delta } if delta > n => {
                Err(Error::CaseOutsideScope(format!("{self}: gap exceeds the degree")))
            }
            SuperFamily::Stair { r, p, q } if r < 2 || p == 0 || q > default_stair_q(r, p) => Err(
                Error::CaseOutsideScope(format!("{self}: needs r >= 2, p >= 1 and q <= (p-1)/r")),
            ),
            _ => Ok(()),
        }
    }

    pub fn module(&self) -> RankTwoModule {
        match *self {
            SuperFamily::Rect { n, m, delta, gamma } => {
                RankTwoModule::new(ModuleSpec::Rect(n - delta, m), ModuleSpec::Rect(n, m - gamma))
            }
            SuperFamily::Tri { n, delta } => RankTwoModule::new(ModuleSpec::Tri(n - delta), ModuleSpec::Tri(n)),
            SuperFamily::Stair { r, p, q } => RankTwoModule::new(
                ModuleSpec::Stair { r, p: p - 1, q },
                ModuleSpec::Stair { r, p, q },
            ),
        }
    }

    /// Conventions under which the abstract structure is usually stated.
    pub fn standard_conventions(&self) -> Conventions {
        let lie = match *self {
            SuperFamily::Rect { delta, gamma, .. } => delta == 0 && gamma == 0,
            SuperFamily::Tri { delta, .. } => delta == 0,
            SuperFamily::Stair { .. } => false,
        };
        Conventions { lie, drop_central: true }
    }

    /// Literal generator list.
    pub fn generators(&self) -> Vec<SuperGenerator> {
        let mut out = Vec::new();
        match *self {
            SuperFamily::Rect { n, m, delta, gamma } => {
                let sx1 = sl2_triple(Axis::X, &int((n - delta) as i64));
                let sx2 = sl2_triple(Axis::X, &int(n as i64));
                let ty1 = sl2_triple(Axis::Y, &int(m as i64));
                let ty2 = sl2_triple(Axis::Y, &int((m - gamma) as i64));
                for (e, suffix) in ["+", "-", "0"].iter().enumerate() {
                    out.push(gen(format!("S{suffix}"), MatDiffOp::diag(sx1[e].clone(), sx2[e].clone())));
                }
                for (e, suffix) in ["+", "-", "0"].iter().enumerate() {
                    out.push(gen(format!("T{suffix}"), MatDiffOp::diag(ty1[e].clone(), ty2[e].clone())));
                }
                out.push(gen("J".into(), MatDiffOp::scalar_diag(frac((n + delta) as i64, 2), frac(n as i64, 2))));
                out.push(gen("K".into(), MatDiffOp::scalar_diag(frac(m as i64, 2), frac((m + gamma) as i64, 2))));
                for a in 0..=delta {
                    for b in 0..=gamma {
                        let op = DiffOp::monomial(Rational::one(), a, 0, 0, 0).compose(&qbar(Axis::Y, m, gamma, b));
                        out.push(gen(format!("Q-{a}{b}"), MatDiffOp::lower(op)));
                    }
                }
                for a in 0..=delta {
                    for b in 0..=gamma {
                        let op = qbar(Axis::X, n, delta, a).compose(&DiffOp::monomial(Rational::one(), 0, b, 0, 0));
                        out.push(gen(format!("Q+{a}{b}"), MatDiffOp::upper(op)));
                    }
                }
            }
            SuperFamily::Tri { n, delta } => {
                let j1 = g15_ops(&int((n - delta) as i64));
                let j2 = g15_ops(&int(n as i64));
                for (i, (a, b)) in j1.into_iter().zip(j2).enumerate() {
                    out.push(gen(format!("T{}", i + 1), MatDiffOp::diag(a, b)));
                }
                out.push(gen("J".into(), MatDiffOp::scalar_diag(frac((n + 2 * delta) as i64, 3), frac(n as i64, 3))));
                for (a, b) in tri_pairs(delta) {
                    let op = DiffOp::monomial(Rational::one(), a, b, 0, 0);
                    out.push(gen(format!("Q-{a}{b}"), MatDiffOp::lower(op)));
                }
                for (a, b) in tri_pairs(delta) {
                    out.push(gen(format!("Q+{a}{b}"), MatDiffOp::upper(qbar2(n, delta, a, b))));
                }
            }
            SuperFamily::Stair { r, p, .. } => {
                let j1 = g24_ops(r, &int(p as i64 - 1));
                let j2 = g24_ops(r, &int(p as i64));
                for (i, (a, b)) in j1.into_iter().zip(j2).enumerate() {
                    out.push(gen(format!("T{}", i + 1), MatDiffOp::diag(a, b)));
                }
                out.push(gen("J".into(), MatDiffOp::scalar_diag(frac(p as i64 + 1, 2), frac(p as i64, 2))));
                out.push(gen("Q-0".into(), MatDiffOp::sigma_minus()));
                out.push(gen("Q-1".into(), MatDiffOp::lower(DiffOp::x())));
                let euler = DiffOp::monomial(Rational::one(), 1, 0, 1, 0)
                    + DiffOp::monomial(int(r as i64), 0, 1, 0, 1)
                    - DiffOp::scalar(int(p as i64));
                out.push(gen("Q+0".into(), MatDiffOp::upper(euler)));
                out.push(gen("Q+1".into(), MatDiffOp::upper(DiffOp::dx())));
                for a in 0..r {
                    out.push(gen(format!("Q+{}", 2 + a), MatDiffOp::upper(DiffOp::monomial(Rational::one(), a, 0, 0, 1))));
                }
            }
        }
        out
    }

    /// Generators after applying `conv`.
    pub fn generators_with(&self, conv: Conventions) -> Vec<SuperGenerator> {
        let mut out: Vec<SuperGenerator> = Vec::new();
        let mut placed_sigma3 = false;
        for g in self.generators() {
            let is_scalar = matches!(g.name.as_str(), "J" | "K");
            if conv.lie && is_scalar {
                if !placed_sigma3 {
                    out.push(SuperGenerator { name: "Jt".into(), op: MatDiffOp::sigma3(), parity: Parity::Even });
                    placed_sigma3 = true;
                }
                continue;
            }
            if conv.drop_central && g.op.as_identity_multiple().is_some() {
                continue;
            }
            out.push(g);
        }
        out
    }

    pub fn expected_generator_count(&self) -> usize {
        match *self {
            SuperFamily::Rect { delta, gamma, .. } => 8 + 2 * ((delta + 1) * (gamma + 1)) as usize,
            SuperFamily::Tri { delta, .. } => 9 + ((delta + 1) * (delta + 2)) as usize,
            SuperFamily::Stair { r, .. } => 10 + 2 * r as usize,
        }
    }

    /// Same gaps, different module parameters.
    pub fn same_shape(&self, other: &SuperFamily) -> bool {
        match (*self, *other) {
            (SuperFamily::Rect { delta: a, gamma: b, .. }, SuperFamily::Rect { delta: c, gamma: d, .. }) => {
                a == c && b == d
            }
            (SuperFamily::Tri { delta: a, .. }, SuperFamily::Tri { delta: b, .. }) => a == b,
            (SuperFamily::Stair { r: a, .. }, SuperFamily::Stair { r: b, .. }) => a == b,
            _ => false,
        }
    }
}

/// `(alpha, beta)` with `alpha + beta <= delta`, in graded-lex order.
pub fn tri_pairs(delta: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for s in 0..=delta {
        for a in (0..=s).rev() {
            v.push((a, s - a));
        }
    }
    v
}
