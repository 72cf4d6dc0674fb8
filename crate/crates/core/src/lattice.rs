//! Bidegree lattice of a generator family: shortest word lengths, words of
//! maximal length, and the monomial bases built from them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::diffop::BiDegree;
use crate::generators::GeneratorFamily;
use crate::word::Word;

/// Distinct nonzero generator bidegrees.
pub fn steps(fam: &GeneratorFamily) -> Vec<BiDegree> {
    let set: BTreeSet<BiDegree> = fam
        .bidegrees()
        .expect("generator families are homogeneous")
        .into_iter()
        .filter(|b| *b != BiDegree::ZERO)
        .collect();
    set.into_iter().collect()
}

/// Breadth-first distance from any of `starts` to `target`, searching at
/// most `bound` steps.
pub fn bfs_distance(steps: &[BiDegree], starts: &[BiDegree], target: BiDegree, bound: u32) -> Option<u32> {
    let mut seen: BTreeSet<BiDegree> = starts.iter().copied().collect();
    let mut layer: Vec<BiDegree> = seen.iter().copied().collect();
    for len in 0..=bound {
        if layer.contains(&target) {
            return Some(len);
        }
        let mut next = Vec::new();
        for p in &layer {
            for s in steps {
                let q = *p + *s;
                if seen.insert(q) {
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    None
}

/// Shortest word length reaching `target`; `None` when unreachable.
pub fn min_length(fam: &GeneratorFamily, target: BiDegree) -> Option<u32> {
    let bound = target.x.unsigned_abs() + target.y.unsigned_abs();
    bfs_distance(&steps(fam), &[BiDegree::ZERO], target, bound)
}

/// Hexagonal distance on the `sl3` lattice, used as a closed form for
/// `min_length` with the triangular family.
pub fn hex_distance(b: BiDegree) -> u32 {
    let (a, c) = (b.x, b.y);
    if (a >= 0) == (c >= 0) {
        a.unsigned_abs() + c.unsigned_abs()
    } else {
        a.unsigned_abs().max(c.unsigned_abs())
    }
}

/// Generator indices for the 1-D family inside a larger list.
#[derive(Clone, Copy, Debug)]
pub struct Sl2Indices {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

pub const SL2_X: Sl2Indices = Sl2Indices { plus: 0, minus: 1, zero: 2 };
pub const SL2_Y: Sl2Indices = Sl2Indices { plus: 3, minus: 4, zero: 5 };

/// `(J±)^i (J0)^(t-i)` for every order `t <= k`.
pub fn sl2_words(idx: Sl2Indices, k: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for t in 0..=k {
        out.push(Word::one().then(idx.zero, t));
        for i in 1..=t {
            out.push(Word::one().then(idx.plus, i).then(idx.zero, t - i));
            out.push(Word::one().then(idx.minus, i).then(idx.zero, t - i));
        }
    }
    out
}

/// Products of an `x`-word of order `<= n` and a `y`-word of order `<= m`.
pub fn rect_words(n: u32, m: u32) -> Vec<Word> {
    let xs = sl2_words(SL2_X, n);
    let ys = sl2_words(SL2_Y, m);
    xs.iter().flat_map(|a| ys.iter().map(move |b| a.concat(b))).collect()
}

// Triangular family indices: J1..J8 -> 0..7.
const J7: usize = 6;
const J8: usize = 7;

/// `J^s` with the cyclic convention `J^0 = J^6`.
fn cyc(s: u32) -> usize {
    if s == 0 {
        5
    } else {
        s as usize - 1
    }
}

fn sl3_maximal(l: u32) -> Vec<Word> {
    if l == 0 {
        return vec![Word::one()];
    }
    let mut out = Vec::new();
    for s in 1..=6 {
        for j in 1..=l {
            out.push(Word::one().then(cyc(s - 1), j).then(cyc(s), l - j));
        }
    }
    out
}

// Staircase family indices: J1..J4 -> 0..3, J(5+i) -> 4+i.
const S_J3: usize = 2;
const S_J4: usize = 3;

fn sj(i: u32) -> usize {
    4 + i as usize
}

/// Words of maximal length `l` for the staircase family.
pub fn g24_maximal(r: u32, l: u32) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for eps in 0..=1u32 {
        for j in 0..=l {
            let w = Word::one().then(eps as usize, l - j).then(sj(eps * r), j);
            if !out.contains(&w) {
                out.push(w);
            }
        }
    }
    if l > 0 {
        for s in 0..l {
            let top = if s == 0 { r - 1 } else { r };
            for i in 1..=top {
                out.push(Word::one().then(sj(0), s).then(sj(i), 1).then(sj(r), l - s - 1));
            }
        }
    }
    out
}

/// Words of maximal length `l`.
pub fn maximal_length_monomials(fam: &GeneratorFamily, l: u32) -> Vec<Word> {
    match *fam {
        GeneratorFamily::Sl2(_) => {
            if l == 0 {
                vec![Word::one()]
            } else {
                vec![Word::one().then(0, l), Word::one().then(1, l)]
            }
        }
        GeneratorFamily::G11(..) => {
            if l == 0 {
                return vec![Word::one()];
            }
            let mut out = Vec::new();
            let li = l as i32;
            for u in -li..=li {
                let rest = li - u.abs();
                for v in if rest == 0 { vec![0] } else { vec![rest, -rest] } {
                    let xg = if u >= 0 { 0 } else { 1 };
                    let yg = if v >= 0 { 3 } else { 4 };
                    out.push(Word::one().then(xg, u.unsigned_abs()).then(yg, v.unsigned_abs()));
                }
            }
            out
        }
        GeneratorFamily::G15(_) => sl3_maximal(l),
        GeneratorFamily::G24 { r, .. } => g24_maximal(r, l),
    }
}

/// Triangular-family basis words of every order `<= k`:
/// maximal word of length `l` times `J7^i J8^(t-l-i)`.
pub fn basis_sl3(k: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for t in 0..=k {
        out.extend(basis_sl3_order(t));
    }
    out
}

/// The words of [`basis_sl3`] of order exactly `t`.
pub fn basis_sl3_order(t: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for l in 0..=t {
        for w in sl3_maximal(l) {
            for i in 0..=t - l {
                out.push(w.clone().then(J7, i).then(J8, t - l - i));
            }
        }
    }
    out
}

/// Staircase image basis of order exactly `t`.
pub fn basis_g24_image_order(r: u32, t: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for l in 0..=t {
        for w in g24_maximal(r, l) {
            for n in 0..=t - l {
                out.push(w.clone().then(S_J3, n).then(S_J4, t - l - n));
            }
        }
    }
    out
}

/// Staircase image basis of every order `<= k`.
pub fn basis_g24_image(r: u32, k: u32) -> Vec<Word> {
    (0..=k).flat_map(|t| basis_g24_image_order(r, t)).collect()
}

/// `J3^n J4^m` with `m <= mmax`, `n + r m <= budget`.
fn diagonal_tails(r: u32, budget: u32, mmax: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 0..=mmax {
        if r * m > budget {
            break;
        }
        for n in 0..=budget - r * m {
            out.push((n, m));
        }
    }
    out
}

/// Staircase words whose projections span the nonpositive-`y`-degree
/// part of the distinguished complement of `S(r, p, q)`.
pub fn basis_g24_effective(r: u32, p: u32, q: u32) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut add = |w: Word, out: &mut Vec<Word>| {
        if seen.insert(w.clone()) {
            out.push(w);
        }
    };
    for j in 0..=q {
        if j * r > p {
            break;
        }
        for eps in 0..=1u32 {
            for s in 0..=p - j * r {
                let head = Word::one().then(eps as usize, s).then(sj(eps * r), j);
                for (n, m) in diagonal_tails(r, p - s - j * r, q - j) {
                    add(head.clone().then(S_J3, n).then(S_J4, m), &mut out);
                }
            }
        }
        for t in 0..j {
            let top = if t == 0 { r - 1 } else { r };
            for i in 1..=top {
                let head = Word::one().then(sj(0), t).then(sj(i), 1).then(sj(r), j - t - 1);
                for (n, m) in diagonal_tails(r, p - j * r, q - j) {
                    add(head.clone().then(S_J3, n).then(S_J4, m), &mut out);
                }
            }
        }
    }
    out
}

/// Distinct bidegrees per maximal length for a start set and step set,
/// up to `max_len`; each reachable bidegree appears at its distance.
pub fn shells(steps: &[BiDegree], starts: &[BiDegree], max_len: u32) -> BTreeMap<u32, Vec<BiDegree>> {
    let mut seen: BTreeSet<BiDegree> = starts.iter().copied().collect();
    let mut layer: Vec<BiDegree> = seen.iter().copied().collect();
    let mut out = BTreeMap::new();
    for len in 0..=max_len {
        out.insert(len, layer.clone());
        let mut next = Vec::new();
        for p in &layer {
            for s in steps {
                let q = *p + *s;
                if seen.insert(q) {
                    next.push(q);
                }
            }
        }
        next.sort();
        layer = next;
    }
    out
}
