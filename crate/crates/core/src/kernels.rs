//! Kernel dimensions of the maps from enveloping algebras into operators,
//! computed by rank rather than by formula.

use alloc::vec::Vec;

use crate::counts::binomial;
use crate::diffop::DiffOp;
use crate::linalg::integer_rank;
use crate::word::{Operator, Word};

/// Nondecreasing index sequences of length `k` over `gens` letters.
pub fn multisets(gens: usize, k: u32) -> Vec<Word> {
    fn rec(start: usize, gens: usize, left: u32, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word::from_factors(cur.iter().map(|&g| (g, 1))));
            return;
        }
        for g in start..gens {
            cur.push(g);
            rec(g, gens, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, gens, k, &mut Vec::new(), &mut out);
    out
}

/// Rank of the realized words.
pub fn realized_rank(words: &[Word], ops: &[DiffOp]) -> usize {
    let vecs: Vec<_> = words.iter().map(|w| w.realize(ops).coordinates()).collect();
    integer_rank(&vecs)
}

/// Rank of the order-`k` parts of all degree-`k` products.
pub fn symbol_rank(ops: &[DiffOp], k: u32) -> usize {
    let vecs: Vec<_> = multisets(ops.len(), k)
        .iter()
        .map(|w| w.realize(ops).order_part(k).to_vector())
        .collect();
    integer_rank(&vecs)
}

/// `dim S^k(g) - rank`, the symbol-level kernel in degree `k`.
pub fn symbol_kernel_dim(ops: &[DiffOp], k: u32) -> usize {
    let total = binomial(ops.len() as u64 + k as u64 - 1, k as u64) as usize;
    total - symbol_rank(ops, k)
}

/// Kernel on the filtered piece of degree `<= k`, for the `sl2` triple
/// `(J+, J-, J0)`: PBW monomials `J+^a J0^b J-^c`.
pub fn filtered_kernel_dim_sl2(triple: &[DiffOp], k: u32) -> usize {
    let mut words = Vec::new();
    for a in 0..=k {
        for b in 0..=k - a {
            for c in 0..=k - a - b {
                words.push(Word::one().then(0, a).then(2, b).then(1, c));
            }
        }
    }
    words.len() - realized_rank(&words, triple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts;
    use crate::generators::GeneratorFamily;

    #[test]
    fn one_variable_kernels() {
        for n in 0..=3 {
            let ops = GeneratorFamily::Sl2(n).ops();
            for k in 0..=5u32 {
                assert_eq!(filtered_kernel_dim_sl2(&ops, k) as u64, counts::ker_rho_1d(k as u64), "n={n} k={k}");
                assert_eq!(symbol_kernel_dim(&ops, k) as u64, counts::ker_symbol_1d(k as u64));
            }
        }
    }

    #[test]
    fn sl3_symbol_kernel() {
        let ops = GeneratorFamily::G15(3).ops();
        assert_eq!(symbol_kernel_dim(&ops, 2), 9);
        assert_eq!(symbol_kernel_dim(&ops, 2) as u64, counts::ker_symbol_sl3(2));
    }

    #[test]
    fn multiset_count() {
        assert_eq!(multisets(8, 2).len(), 36);
        assert_eq!(multisets(3, 0), alloc::vec![Word::one()]);
    }
}
