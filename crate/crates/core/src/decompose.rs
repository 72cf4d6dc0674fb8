//! Brute-force preserver spaces, expression of preservers as polynomials in
//! generators modulo the kernel, and the general second-order staircase
//! operator.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::diffop::{BiDegree, Deriv, DiffOp, TermKey};
use crate::error::{Error, Result};
use crate::generators::GeneratorFamily;
use crate::lattice::{self, bfs_distance, SL2_X};
use crate::linalg::{sparse_nullspace, Echelon, SparseVec};
use crate::module::ModuleSpec;
use crate::poly::{Exponent2, Poly2};
use crate::rational::{falling, int, Rational};
use crate::word::Word;

pub use crate::module::{action_matrix, lift_endomorphism, map_matrix};

/// Default bound on module dimension for brute-force routines.
pub const DEFAULT_CAP: usize = 36;

/// Basis of the operators of order `<= k` whose derivatives are allowed by
/// `source` and which map `source` into `target`. Every element is
/// bidegree-homogeneous.
pub fn enumerate_maps(source: &ModuleSpec, target: &ModuleSpec, k: u32, cap: usize) -> Result<Vec<DiffOp>> {
    for spec in [source, target] {
        if spec.dim() > cap {
            return Err(Error::CapExceeded { what: format!("dim {} = {}", spec, spec.dim()), cap });
        }
    }
    let sb = source.basis();
    let tb = target.basis();
    let derivs: Vec<Exponent2> = sb.iter().copied().filter(|d| d.degree() <= k).collect();
    let mut shifts: Vec<BiDegree> = Vec::new();
    for t in &tb {
        for s in &sb {
            shifts.push(BiDegree::new(t.i as i32 - s.i as i32, t.j as i32 - s.j as i32));
        }
    }
    shifts.sort();
    shifts.dedup();

    let mut out = Vec::new();
    for d in shifts {
        let unknowns: Vec<Exponent2> = derivs
            .iter()
            .copied()
            .filter(|a| a.i as i32 + d.x >= 0 && a.j as i32 + d.y >= 0)
            .collect();
        if unknowns.is_empty() {
            continue;
        }
        let mut rows: Vec<SparseVec<usize>> = Vec::new();
        for s in &sb {
            let (ii, jj) = (s.i as i32 + d.x, s.j as i32 + d.y);
            if ii < 0 || jj < 0 || target.contains(Exponent2::new(ii as u32, jj as u32)) {
                continue;
            }
            let row: SparseVec<usize> = unknowns
                .iter()
                .enumerate()
                .filter(|(_, a)| a.i <= s.i && a.j <= s.j)
                .map(|(u, a)| (u, falling(s.i, a.i) * falling(s.j, a.j)))
                .collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
        for v in sparse_nullspace(&rows, unknowns.len()) {
            let mut op = DiffOp::zero();
            for (u, c) in &v {
                let a = unknowns[*u];
                let e = Exponent2::new((a.i as i32 + d.x) as u32, (a.j as i32 + d.y) as u32);
                op.add_monomial(Deriv::new(a.i, a.j), e, c.clone());
            }
            out.push(op);
        }
    }
    Ok(out)
}

/// Distinguished-complement preservers of `spec` of order `<= k`.
pub fn enumerate_preservers(spec: &ModuleSpec, k: u32, cap: usize) -> Result<Vec<DiffOp>> {
    enumerate_maps(spec, spec, k, cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Expressible,
    NeedsKernel,
    NotLieAlgebraic,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Expressible => "expressible",
            Status::NeedsKernel => "needs_kernel",
            Status::NotLieAlgebraic => "not_lie_algebraic",
        })
    }
}

/// `source = sum c_W W + kernel_remainder + residue`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub source: DiffOp,
    pub words: Vec<(Word, Rational)>,
    pub kernel_remainder: DiffOp,
    pub residue: DiffOp,
    pub min_poly_degree: u32,
}

impl Decomposition {
    pub fn status(&self) -> Status {
        if !self.residue.is_zero() {
            Status::NotLieAlgebraic
        } else if !self.kernel_remainder.is_zero() {
            Status::NeedsKernel
        } else {
            Status::Expressible
        }
    }
}

/// Precomputed word projections for one family and module.
pub struct Decomposer {
    family: GeneratorFamily,
    spec: ModuleSpec,
    gens: Vec<DiffOp>,
    steps: Vec<BiDegree>,
    chosen: Vec<(Word, DiffOp)>,
    blocks: BTreeMap<BiDegree, Echelon<TermKey>>,
}

/// Candidate words for `fam` on `spec`, before independence filtering.
pub fn candidate_words(fam: &GeneratorFamily, spec: &ModuleSpec) -> Vec<Word> {
    match (*fam, *spec) {
        (GeneratorFamily::Sl2(n), _) => lattice::sl2_words(SL2_X, n),
        (GeneratorFamily::G11(n, m), _) => lattice::rect_words(n, m),
        (GeneratorFamily::G15(n), _) => lattice::basis_sl3(n),
        (GeneratorFamily::G24 { r, p }, ModuleSpec::Stair { q, .. }) => lattice::basis_g24_effective(r, p, q),
        (GeneratorFamily::G24 { r, p }, _) => lattice::basis_g24_effective(r, p, p / r),
    }
}

impl Decomposer {
    pub fn new(family: GeneratorFamily, spec: ModuleSpec) -> Result<Self> {
        family.check_module(&spec)?;
        let gens = family.ops();
        let mut words = candidate_words(&family, &spec);
        words.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
        let mut chosen = Vec::new();
        let mut blocks: BTreeMap<BiDegree, Echelon<TermKey>> = BTreeMap::new();
        for w in words {
            let op = w.realize(&gens);
            let proj = spec.kernel_split(&op).0;
            if proj.is_zero() {
                continue;
            }
            let b = proj.bidegree().ok_or(Error::Inhomogeneous)?;
            if blocks.entry(b).or_default().insert(chosen.len(), &proj.to_vector()) {
                chosen.push((w, op));
            }
        }
        Ok(Decomposer { steps: lattice::steps(&family), family, spec, gens, chosen, blocks })
    }

    pub fn family(&self) -> &GeneratorFamily {
        &self.family
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn generators(&self) -> &[DiffOp] {
        &self.gens
    }

    /// Words whose projections form the working basis.
    pub fn basis_words(&self) -> impl Iterator<Item = &Word> {
        self.chosen.iter().map(|(w, _)| w)
    }

    pub fn rank(&self) -> usize {
        self.chosen.len()
    }

    fn reachable(&self, b: BiDegree) -> bool {
        let bound = b.x.unsigned_abs() + b.y.unsigned_abs();
        bfs_distance(&self.steps, &[BiDegree::ZERO], b, bound).is_some()
    }

    pub fn express(&self, t: &DiffOp) -> Result<Decomposition> {
        if let Some((b, img)) = self.spec.escape_witness(t, &self.spec) {
            return Err(Error::NotPreserving {
                witness: format!("x^{}*y^{} -> {} leaves {}", b.i, b.j, img, self.spec),
            });
        }
        let (comp, _) = self.spec.kernel_split(t);
        let mut residue = DiffOp::zero();
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        for (b, part) in comp.bidegree_decompose() {
            if !self.reachable(b) {
                residue = &residue + &part;
                continue;
            }
            let combo = self
                .blocks
                .get(&b)
                .and_then(|e| e.express(&part.to_vector()))
                .ok_or_else(|| Error::Inexpressible(format!("bidegree {} part {}", b, part)))?;
            for (label, c) in combo {
                let e = coeffs.entry(label).or_insert_with(Rational::zero);
                *e += c;
            }
        }
        let mut realized = DiffOp::zero();
        let mut words = Vec::new();
        let mut degree = 0;
        for (label, c) in coeffs {
            if c.is_zero() {
                continue;
            }
            let (w, op) = &self.chosen[label];
            realized = &realized + &op.scale(&c);
            degree = degree.max(w.degree());
            words.push((w.clone(), c));
        }
        let kernel_remainder = &(t - &realized) - &residue;
        Ok(Decomposition { source: t.clone(), words, kernel_remainder, residue, min_poly_degree: degree })
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.format(&self.family.names())
    }
}

/// One-shot [`Decomposer::express`].
pub fn express(t: &DiffOp, fam: &GeneratorFamily, spec: &ModuleSpec) -> Result<Decomposition> {
    Decomposer::new(*fam, *spec)?.express(t)
}

/// The 33 terms of the general order-2 operator preserving `S(2, p)`,
/// indexed `a1..a33`.
#[derive(Clone, Debug)]
pub struct T2Template {
    pub p: u32,
    terms: Vec<DiffOp>,
}

impl T2Template {
    pub const LEN: usize = 33;

    pub fn new(p: u32) -> Result<Self> {
        if p < 4 {
            return Err(Error::CaseOutsideScope(format!("T2 template needs p >= 4, got {p}")));
        }
        let m = |i, j, a, b| DiffOp::monomial(Rational::one(), i, j, a, b);
        let euler = m(1, 0, 1, 0) + m(0, 1, 0, 1).scale(&int(2)) - DiffOp::scalar(int(p as i64));
        let euler1 = &euler + &DiffOp::identity();
        let quad = euler1.compose(&euler);
        let mut terms = alloc::vec![
            m(0, 0, 0, 2),
            m(0, 0, 1, 1),
            m(1, 0, 0, 2),
            m(0, 0, 2, 0),
            m(1, 0, 1, 1),
            m(2, 0, 0, 2),
            m(0, 1, 0, 2),
            m(0, 0, 0, 1),
            m(1, 0, 2, 0),
            m(2, 0, 1, 1),
            m(0, 1, 1, 1),
            m(3, 0, 0, 2),
            m(1, 1, 0, 2),
            m(0, 0, 1, 0),
            m(1, 0, 0, 1),
            m(2, 0, 2, 0),
            m(0, 1, 2, 0),
            m(3, 0, 1, 1),
            m(1, 1, 1, 1),
            m(4, 0, 0, 2),
            m(2, 1, 0, 2),
            m(0, 2, 0, 2),
            m(1, 0, 1, 0),
            m(2, 0, 0, 1),
            m(0, 1, 0, 1),
            DiffOp::identity(),
        ];
        for f in [m(2, 0, 1, 0), m(0, 1, 1, 0), m(3, 0, 0, 1), m(1, 1, 0, 1), m(1, 0, 0, 0)] {
            terms.push(f.compose(&euler));
        }
        for f in [m(2, 0, 0, 0), m(0, 1, 0, 0)] {
            terms.push(f.compose(&quad));
        }
        Ok(T2Template { p, terms })
    }

    /// The term multiplying `a_index` (1-based).
    pub fn term(&self, index: usize) -> &DiffOp {
        &self.terms[index - 1]
    }

    pub fn terms(&self) -> &[DiffOp] {
        &self.terms
    }

    pub fn instantiate(&self, a: &[Rational]) -> Result<DiffOp> {
        if a.len() != Self::LEN {
            return Err(Error::DimensionMismatch { expected: Self::LEN, found: a.len() });
        }
        Ok(crate::diffop::combine(a.iter().zip(&self.terms)))
    }

    /// Indices whose terms have positive `y`-degree.
    pub fn positive_y_indices(&self) -> Vec<usize> {
        (1..=Self::LEN)
            .filter(|&i| self.term(i).bidegree_decompose().keys().any(|b| b.y > 0))
            .collect()
    }
}

/// Human-readable list of a decomposition's words.
pub fn format_words(d: &Decomposition, names: &[String]) -> Vec<(String, String)> {
    d.words.iter().map(|(w, c)| (w.format(names), c.to_string())).collect()
}

/// Coordinates of a polynomial in `spec.basis()`.
pub fn coordinates(p: &Poly2, spec: &ModuleSpec) -> Option<Vec<Rational>> {
    let basis = spec.basis();
    if p.terms().any(|(e, _)| !spec.contains(*e)) {
        return None;
    }
    Some(basis.iter().map(|e| p.coeff(*e)).collect())
}
