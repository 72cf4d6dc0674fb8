//! Closure of a generator set under the graded bracket.

use alloc::string::String;
use alloc::vec::Vec;

use super::families::{Conventions, SuperFamily, SuperGenerator};
use super::mat::{MatDiffOp, MatKey, Parity};
use crate::error::Result;
use crate::generators::{structure_table, StructureTable};
use crate::linalg::Echelon;
use crate::word::Operator;

pub const DEFAULT_DEGREE_CAP: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureStatus {
    Finite,
    /// Still growing at the cap; evidence of infinite dimension, not proof.
    Exceeded,
}

/// Dimension split and derived series, all modulo the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub even: usize,
    pub odd: usize,
    pub derived: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub status: ClosureStatus,
    /// Dimension after each round, round 0 being the generators.
    pub dim_sequence: Vec<usize>,
    pub final_dim: Option<usize>,
    pub basis: Vec<MatDiffOp>,
    pub signature: Option<Signature>,
    pub identification: Option<&'static str>,
}

fn bracket(lie: bool, a: &MatDiffOp, b: &MatDiffOp) -> MatDiffOp {
    if lie {
        a.commutator(b)
    } else {
        a.supercommutator(b).expect("closure elements are homogeneous")
    }
}

/// Span tracker with the identity adjoined first, so ranks are taken modulo it.
struct Span {
    ech: Echelon<MatKey>,
    elems: Vec<MatDiffOp>,
}

impl Span {
    fn new() -> Self {
        let mut ech = Echelon::new();
        ech.insert(0, &<MatDiffOp as Operator>::identity().to_vector());
        Span { ech, elems: Vec::new() }
    }

    fn insert(&mut self, op: MatDiffOp) -> bool {
        if op.is_zero() {
            return false;
        }
        let added = self.ech.insert(self.elems.len() + 1, &op.to_vector());
        if added {
            self.elems.push(op);
        }
        added
    }

    fn dim(&self) -> usize {
        self.ech.rank() - 1
    }
}

/// Bracket-closes the generators, `cap` rounds at most.
pub fn close(gens: &[MatDiffOp], lie: bool, cap: u32) -> (ClosureStatus, Vec<usize>, Vec<MatDiffOp>) {
    let mut span = Span::new();
    let mut frontier = Vec::new();
    for g in gens {
        if span.insert(g.clone()) {
            frontier.push(g.clone());
        }
    }
    let mut dims = alloc::vec![span.dim()];
    let mut rounds = 0;
    while !frontier.is_empty() {
        if rounds == cap {
            return (ClosureStatus::Exceeded, dims, span.elems);
        }
        rounds += 1;
        let mut next = Vec::new();
        for g in gens {
            for f in &frontier {
                let b = bracket(lie, g, f);
                if span.insert(b.clone()) {
                    next.push(b);
                }
            }
        }
        frontier = next;
        if !frontier.is_empty() {
            dims.push(span.dim());
        }
    }
    (ClosureStatus::Finite, dims, span.elems)
}

pub fn signature(basis: &[MatDiffOp], lie: bool) -> Signature {
    let mut even = Span::new();
    let mut odd = Span::new();
    for b in basis {
        match b.parity() {
            Some(Parity::Odd) => odd.insert(b.clone()),
            _ => even.insert(b.clone()),
        };
    }
    let mut current: Vec<MatDiffOp> = basis.to_vec();
    let mut derived = alloc::vec![even.dim() + odd.dim()];
    for _ in 0..DEFAULT_DEGREE_CAP {
        let mut span = Span::new();
        for (i, a) in current.iter().enumerate() {
            for b in &current[i..] {
                span.insert(bracket(lie, a, b));
            }
        }
        let d = span.dim();
        let stable = Some(&d) == derived.last();
        derived.push(d);
        current = span.elems;
        if stable || d == 0 {
            break;
        }
    }
    Signature { even: even.dim(), odd: odd.dim(), derived }
}

/// Known abstract structures, keyed by their signature.
pub fn identify(sig: &Signature) -> Option<&'static str> {
    let (e, o) = (sig.even, sig.odd);
    let perfect = sig.derived.len() >= 2 && sig.derived[1] == sig.derived[0];
    match (e, o, perfect) {
        (7, 2, true) => Some("sl2+sl2+sl2"),
        (7, 4, true) => Some("spl(2,1)+sl2"),
        (9, 6, true) => Some("spl(3,1)"),
        (9, 2, true) => Some("sl3+sl2"),
        _ if e >= 6 && o + 2 == e && sig.derived.get(1) == Some(&(e + o - 1)) => {
            Some("pl(2,1)|xC^{r+1,r}")
        }
        _ => None,
    }
}

pub fn closure_analysis(fam: &SuperFamily, cap: u32) -> Result<ClosureReport> {
    fam.validate()?;
    let conv = fam.standard_conventions();
    let gens: Vec<MatDiffOp> = fam.generators_with(conv).into_iter().map(|g| g.op).collect();
    let (status, dim_sequence, basis) = close(&gens, conv.lie, cap);
    let (final_dim, signature) = match status {
        ClosureStatus::Finite => (dim_sequence.last().copied(), Some(signature(&basis, conv.lie))),
        ClosureStatus::Exceeded => (None, None),
    };
    let identification = signature.as_ref().and_then(identify);
    Ok(ClosureReport { status, dim_sequence, final_dim, basis, signature, identification })
}

/// Bracket table of the generators under `conv`.
pub fn super_structure_table(fam: &SuperFamily, conv: Conventions) -> Result<StructureTable> {
    fam.validate()?;
    let gens: Vec<SuperGenerator> = fam.generators_with(conv);
    let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
    let ops: Vec<MatDiffOp> = gens.into_iter().map(|g| g.op).collect();
    structure_table(&names, &ops, |a, b| bracket(conv.lie, a, b))
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub reference: SuperFamily,
    pub mismatches: Vec<SuperFamily>,
    /// Families whose tables match only after forgetting identity parts.
    pub identity_only: Vec<SuperFamily>,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares bracket tables across a parameter grid of one shape.
pub fn structure_constant_invariance(grid: &[SuperFamily]) -> Result<InvarianceReport> {
    let reference = grid[0];
    let conv = reference.standard_conventions();
    let base = super_structure_table(&reference, conv)?;
    let mut mismatches = Vec::new();
    let mut identity_only = Vec::new();
    for fam in &grid[1..] {
        if !fam.same_shape(&reference) {
            mismatches.push(*fam);
            continue;
        }
        let t = super_structure_table(fam, conv)?;
        if !t.same_modulo_identity(&base) {
            mismatches.push(*fam);
        } else if t != base {
            identity_only.push(*fam);
        }
    }
    Ok(InvarianceReport { reference, mismatches, identity_only })
}
