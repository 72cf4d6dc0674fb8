//! Rank-2 matrix operators, the superalgebra families acting on direct sums
//! of modules, their closure and their monomial bases.

mod closure;
mod families;
mod mat;
mod rank2;

use alloc::vec::Vec;

pub use closure::{
    close, closure_analysis, identify, signature, structure_constant_invariance, super_structure_table,
    ClosureReport, ClosureStatus, InvarianceReport, Signature, DEFAULT_DEGREE_CAP,
};
pub use families::{default_stair_q, qbar, qbar2, tri_pairs, Conventions, SuperFamily, SuperGenerator};
pub use mat::{MatDiffOp, MatKey, Parity, RankTwoModule};
pub use rank2::{
    max_order, rank2_basis, rank2_express, rank2_express_in, stair_minus_words, Alphabet, BasisWord, Block,
    Rank2Basis, Rank2Decomposition,
};

use crate::decompose::enumerate_maps;
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::rational::Rational;

/// All preservers of `module` of order `<= k` in the distinguished
/// complement, entry by entry.
pub fn enumerate_super_preservers(module: &RankTwoModule, k: u32, cap: usize) -> Result<Vec<MatDiffOp>> {
    let mut out = Vec::new();
    for (slot, (src, tgt)) in module.slots().into_iter().enumerate() {
        for op in enumerate_maps(&src, &tgt, k, cap)? {
            let z = DiffOp::zero;
            out.push(match slot {
                0 => MatDiffOp::new(op, z(), z(), z()),
                1 => MatDiffOp::new(z(), op, z(), z()),
                2 => MatDiffOp::new(z(), z(), op, z()),
                _ => MatDiffOp::new(z(), z(), z(), op),
            });
        }
    }
    Ok(out)
}

/// Matrix of `ad_e` on the span of `basis`, if the span is invariant.
pub fn adjoint_matrix(e: &MatDiffOp, basis: &[MatDiffOp]) -> Result<Matrix> {
    let mut ech = Echelon::new();
    for (i, b) in basis.iter().enumerate() {
        if !ech.insert(i, &b.to_vector()) {
            return Err(Error::DimensionMismatch { expected: basis.len(), found: i });
        }
    }
    let d = basis.len();
    let mut m = Matrix::zeros(d, d);
    for (j, b) in basis.iter().enumerate() {
        let img = e.supercommutator(b)?;
        let combo = ech
            .express(&img.to_vector())
            .ok_or_else(|| Error::NotClosed { pair: alloc::format!("[{e}, {b}]") })?;
        for (i, c) in combo {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// Dimension of the unital associative algebra generated by `mats`.
pub fn associative_closure_dim(mats: &[Matrix], d: usize) -> usize {
    let mut ech = Echelon::new();
    let mut elems: Vec<Matrix> = Vec::new();
    let mut frontier = alloc::vec![Matrix::identity(d)];
    ech.insert(0, &frontier[0].to_sparse());
    elems.push(frontier[0].clone());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in mats {
                let p = g.mul(f);
                if ech.insert(elems.len(), &p.to_sparse()) {
                    elems.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    ech.rank()
}

/// Burnside test: the even generators act irreducibly on the span of the
/// odd generators whose name starts with `prefix`.
pub fn odd_module_irreducible(fam: &SuperFamily, prefix: &str) -> Result<bool> {
    let gens = fam.generators();
    let odd: Vec<MatDiffOp> =
        gens.iter().filter(|g| g.name.starts_with(prefix)).map(|g| g.op.clone()).collect();
    let mut mats = Vec::new();
    for g in gens.iter().filter(|g| g.parity == Parity::Even) {
        mats.push(adjoint_matrix(&g.op, &odd)?);
    }
    let d = odd.len();
    Ok(associative_closure_dim(&mats, d) == d * d)
}

/// Whether some even generator acts on the odd span by a non-scalar.
pub fn acts_as_scalar(m: &Matrix) -> Option<Rational> {
    let c = m.get(0, 0).clone();
    let d = m.rows();
    let mut scalar = Matrix::identity(d);
    for i in 0..d {
        scalar.set(i, i, c.clone());
    }
    (scalar == *m).then_some(c)
}
