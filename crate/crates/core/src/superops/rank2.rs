//! Monomial bases of the rank-2 distinguished complements and expression
//! of matrix operators in them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::families::{tri_pairs, SuperFamily};
use super::mat::{MatDiffOp, MatKey, Parity, RankTwoModule};
use crate::decompose::Status;
use crate::diffop::BiDegree;
use crate::error::{Error, Result};
use crate::generators::GeneratorFamily;
use crate::lattice::{basis_g24_effective, basis_sl3, maximal_length_monomials, shells, steps};
use crate::linalg::Echelon;
use crate::rational::Rational;
use crate::word::Word;

/// Named operators that words in a rank-2 basis are built from.
#[derive(Clone, Debug)]
pub struct Alphabet {
    pub names: Vec<String>,
    pub ops: Vec<MatDiffOp>,
}

impl Alphabet {
    pub fn of(fam: &SuperFamily) -> Alphabet {
        let mut names = Vec::new();
        let mut ops = Vec::new();
        for g in fam.generators() {
            names.push(g.name);
            ops.push(g.op);
        }
        for (n, op) in [
            ("Jt", MatDiffOp::sigma3()),
            ("P1", MatDiffOp::projector(1)),
            ("P2", MatDiffOp::projector(2)),
        ] {
            names.push(n.into());
            ops.push(op);
        }
        Alphabet { names, ops }
    }

    pub fn index(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("unknown letter {name}"))
    }

    /// Differential order of the realized word, counted letter by letter.
    pub fn order(&self, w: &Word) -> u32 {
        w.factors().iter().map(|&(g, k)| k * self.ops[g].order().unwrap_or(0)).sum()
    }

    pub fn format(&self, w: &Word) -> String {
        w.format(&self.names)
    }
}

/// Which part of the complement a basis word targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    /// Component 1 to itself.
    First,
    /// Component 2 to itself.
    Second,
    /// Even words acting on both components.
    Even,
    /// Component 2 into component 1.
    Plus,
    /// Component 1 into component 2.
    Minus,
}

#[derive(Clone, Debug)]
pub struct BasisWord {
    pub word: Word,
    pub block: Block,
    pub order: u32,
}

#[derive(Clone, Debug)]
pub struct Rank2Basis {
    pub family: SuperFamily,
    pub alphabet: Alphabet,
    pub words: Vec<BasisWord>,
    /// Candidates rejected for a zero or dependent projection.
    pub dropped: usize,
    ech: Echelon<MatKey>,
}

impl Rank2Basis {
    pub fn count(&self, block: Block) -> usize {
        self.words.iter().filter(|w| w.block == block).count()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn format(&self, w: &Word) -> String {
        self.alphabet.format(w)
    }

    pub fn realize(&self, w: &Word) -> MatDiffOp {
        w.realize(&self.alphabet.ops)
    }
}

struct Selector {
    module: RankTwoModule,
    alphabet: Alphabet,
    ech: Echelon<MatKey>,
    words: Vec<BasisWord>,
    dropped: usize,
}

impl Selector {
    fn new(fam: &SuperFamily) -> Self {
        Selector {
            module: fam.module(),
            alphabet: Alphabet::of(fam),
            ech: Echelon::new(),
            words: Vec::new(),
            dropped: 0,
        }
    }

    fn projection(&self, w: &Word) -> MatDiffOp {
        self.module.kernel_split(&w.realize(&self.alphabet.ops)).0
    }

    fn offer(&mut self, w: Word, block: Block) -> bool {
        let proj = self.projection(&w);
        let label = self.words.len();
        if !proj.is_zero() && self.ech.insert(label, &proj.to_vector()) {
            let order = self.alphabet.order(&w);
            self.words.push(BasisWord { word: w, block, order });
            true
        } else {
            self.dropped += 1;
            false
        }
    }

    /// Accepts the whole group or none of it.
    fn offer_group(&mut self, group: &[Word], block: Block) -> bool {
        let mut trial = self.ech.clone();
        let mut projs = Vec::new();
        for (i, w) in group.iter().enumerate() {
            let p = self.projection(w);
            if p.is_zero() || !trial.insert(self.words.len() + i, &p.to_vector()) {
                return false;
            }
            projs.push(p);
        }
        self.ech = trial;
        for w in group {
            let order = self.alphabet.order(w);
            self.words.push(BasisWord { word: w.clone(), block, order });
        }
        true
    }

    fn finish(self, family: SuperFamily) -> Rank2Basis {
        Rank2Basis { family, alphabet: self.alphabet, words: self.words, dropped: self.dropped, ech: self.ech }
    }
}

fn word_bidegree(w: &Word, degs: &[BiDegree]) -> BiDegree {
    w.factors().iter().fold(BiDegree::ZERO, |acc, &(g, k)| {
        acc + BiDegree::new(degs[g].x * k as i32, degs[g].y * k as i32)
    })
}

fn prefixed(head: usize, w: &Word) -> Word {
    Word::gen(head).concat(w)
}

fn tri_basis(fam: &SuperFamily, n: u32, delta: u32, k: u32) -> Rank2Basis {
    let mut sel = Selector::new(fam);
    let (p1, p2) = (sel.alphabet.index("P1"), sel.alphabet.index("P2"));
    // Each block is capped by the degree of its source component.
    let k1 = k.min(n - delta);
    let k2 = k.min(n);
    for (head, block, kk) in [(p1, Block::First, k1), (p2, Block::Second, k2)] {
        for w in basis_sl3(kk) {
            sel.offer(prefixed(head, &w), block);
        }
    }
    let g15 = GeneratorFamily::G15(n);
    let degs = g15.bidegrees().expect("homogeneous");
    let st = steps(&g15);
    for (sign, block) in [('-', Block::Minus), ('+', Block::Plus)] {
        let (cap, shift) = if sign == '+' { (k2, delta) } else { (k1, 0) };
        if shift > cap {
            continue;
        }
        let top = cap - shift;
        let qs: Vec<(usize, BiDegree)> = tri_pairs(delta)
            .into_iter()
            .map(|(a, b)| {
                let idx = sel.alphabet.index(&format!("Q{sign}{a}{b}"));
                let d = if sign == '-' {
                    BiDegree::new(a as i32, b as i32)
                } else {
                    BiDegree::new(-(a as i32), -(b as i32))
                };
                (idx, d)
            })
            .collect();
        let starts: Vec<BiDegree> = qs.iter().map(|q| q.1).collect();
        for (l, layer) in shells(&st, &starts, top) {
            let maximal = maximal_length_monomials(&g15, l);
            for b in layer {
                for (qi, qd) in &qs {
                    let mut placed = false;
                    for w in &maximal {
                        if *qd + word_bidegree(w, &degs) != b {
                            continue;
                        }
                        let mut group = Vec::new();
                        for s in 0..=top - l {
                            for i in 0..=s {
                                group.push(prefixed(*qi, w).then(6, i).then(7, s - i));
                            }
                        }
                        if sel.offer_group(&group, block) {
                            placed = true;
                            break;
                        }
                    }
                    if placed {
                        break;
                    }
                }
            }
        }
    }
    sel.finish(*fam)
}

fn sort_by_order(alpha: &Alphabet, words: &mut [Word]) {
    words.sort_by_key(|w| (alpha.order(w), w.degree(), w.clone()));
}

fn rect_basis(fam: &SuperFamily, n: u32, m: u32, delta: u32, gamma: u32, k: u32) -> Rank2Basis {
    let mut sel = Selector::new(fam);
    let a = sel.alphabet.clone();
    let s = |e: &str| a.index(&format!("S{e}"));
    let t = |e: &str| a.index(&format!("T{e}"));
    let mut cands: Vec<Word> = Vec::new();
    let xs: Vec<Option<usize>> = alloc::vec![
        Some(a.index("Q-00")),
        Some(a.index("Q+00")),
        None,
        Some(a.index("Jt")),
    ];
    let pm = ["+", "-"];
    for x in &xs {
        for sx in pm {
            for ty in pm {
                for i in 0..=n {
                    for s0 in 0..=n - i {
                        for j in 0..=m {
                            for t0 in 0..=m - j {
                                let mut w = x.map(Word::gen).unwrap_or_default();
                                w.push(s(sx), i);
                                w.push(s("0"), s0);
                                w.push(t(ty), j);
                                w.push(t("0"), t0);
                                cands.push(w);
                            }
                        }
                    }
                }
            }
        }
    }
    for (eps, star) in [("+", "-"), ("-", "+")] {
        for alpha in 1..=delta {
            let q = a.index(&format!("Q{eps}{alpha}0"));
            for ty in pm {
                for i in 0..=n {
                    for j in 0..=m {
                        for t0 in 0..=m - j {
                            cands.push(Word::gen(q).then(s(star), i).then(t(ty), j).then(t("0"), t0));
                        }
                    }
                }
            }
        }
        for beta in 1..=gamma {
            let q = a.index(&format!("Q{eps}0{beta}"));
            for sx in pm {
                for i in 0..=n {
                    for s0 in 0..=n - i {
                        for j in 0..=m {
                            cands.push(Word::gen(q).then(s(sx), i).then(s("0"), s0).then(t(eps), j));
                        }
                    }
                }
            }
        }
        for alpha in 1..=delta {
            for beta in 1..=gamma {
                let q = a.index(&format!("Q{eps}{alpha}{beta}"));
                for i in 0..=n {
                    for j in 0..=m {
                        cands.push(Word::gen(q).then(s(star), i).then(t(eps), j));
                    }
                }
            }
        }
    }
    cands.sort();
    cands.dedup();
    sort_by_order(&a, &mut cands);
    for w in cands {
        if a.order(&w) > k {
            continue;
        }
        let block = match w.realize(&a.ops).parity() {
            Some(Parity::Even) => Block::Even,
            _ if a.names[w.factors()[0].0].starts_with("Q+") => Block::Plus,
            _ => Block::Minus,
        };
        sel.offer(w, block);
    }
    sel.finish(*fam)
}

const S_J3: usize = 2;
const S_J4: usize = 3;

/// Odd words mapping the first staircase component into the second.
pub fn stair_minus_words(r: u32, p: u32, q: u32, q_minus: [usize; 2]) -> Vec<Word> {
    let sj = |i: u32| 4 + i as usize;
    let tails = |budget: i64, mmax: u32| {
        let mut v = Vec::new();
        for m in 0..=mmax as i64 {
            for n in 0..=budget - r as i64 * m {
                v.push((n as u32, m as u32));
            }
        }
        v
    };
    let mut out = Vec::new();
    for j in 0..=q {
        let base = p as i64 - 1 - (j * r) as i64;
        if base < 0 {
            break;
        }
        for eps in 0..=1u32 {
            for s in 0..=base {
                // (T^{1+eps})^s with T^1 -> index 0, T^2 -> index 1
                let head = Word::gen(q_minus[eps as usize]).then(eps as usize, s as u32).then(sj(eps * r), j);
                for (n, m) in tails(base - s, q - j) {
                    out.push(head.clone().then(S_J3, n).then(S_J4, m));
                }
            }
        }
        for t in 0..j {
            for i in 1..=r {
                let head = Word::gen(q_minus[0]).then(sj(0), t).then(sj(i), 1).then(sj(r), j - t - 1);
                for (n, m) in tails(base, q - j) {
                    out.push(head.clone().then(S_J3, n).then(S_J4, m));
                }
            }
        }
    }
    out
}

fn stair_basis(fam: &SuperFamily, r: u32, p: u32, q: u32, k: u32) -> Rank2Basis {
    let mut sel = Selector::new(fam);
    let a = sel.alphabet.clone();
    let within = |w: &Word| a.order(w) <= k;
    for (head, pp, block) in [("P1", p - 1, Block::First), ("P2", p, Block::Second)] {
        let h = a.index(head);
        for w in basis_g24_effective(r, pp, q) {
            let w = prefixed(h, &w);
            if within(&w) {
                sel.offer(w, block);
            }
        }
    }
    let qm = [a.index("Q-0"), a.index("Q-1")];
    for w in stair_minus_words(r, p, q, qm) {
        if within(&w) {
            sel.offer(w, Block::Minus);
        }
    }
    let mut plus: Vec<Word> = Vec::new();
    let eff = basis_g24_effective(r, p, q);
    for name in (0..2 + r).map(|i| format!("Q+{i}")) {
        let h = a.index(&name);
        for w in &eff {
            plus.push(prefixed(h, w));
        }
    }
    sort_by_order(&a, &mut plus);
    for w in plus {
        if within(&w) {
            sel.offer(w, Block::Plus);
        }
    }
    sel.finish(*fam)
}

/// Basis words of order `<= k` with independent projections.
pub fn rank2_basis(fam: &SuperFamily, k: u32) -> Result<Rank2Basis> {
    fam.validate()?;
    Ok(match *fam {
        SuperFamily::Tri { n, delta } => tri_basis(fam, n, delta, k),
        SuperFamily::Rect { n, m, delta, gamma } => rect_basis(fam, n, m, delta, gamma, k),
        SuperFamily::Stair { r, p, q } => stair_basis(fam, r, p, q, k),
    })
}

/// Largest order any operator in the complement can have.
pub fn max_order(fam: &SuperFamily) -> u32 {
    match *fam {
        SuperFamily::Rect { n, m, .. } => n + m,
        SuperFamily::Tri { n, .. } => n,
        SuperFamily::Stair { p, .. } => p,
    }
}

#[derive(Clone, Debug)]
pub struct Rank2Decomposition {
    pub source: MatDiffOp,
    pub words: Vec<(Word, Rational)>,
    pub kernel_remainder: MatDiffOp,
    pub residue: MatDiffOp,
    /// Largest word degree used (projectors count as one factor).
    pub max_degree: u32,
    pub max_order: u32,
}

impl Rank2Decomposition {
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

/// Expresses `t` in the full basis of `fam`.
pub fn rank2_express(t: &MatDiffOp, fam: &SuperFamily) -> Result<Rank2Decomposition> {
    let basis = rank2_basis(fam, max_order(fam))?;
    rank2_express_in(t, &basis)
}

pub fn rank2_express_in(t: &MatDiffOp, basis: &Rank2Basis) -> Result<Rank2Decomposition> {
    let module = basis.family.module();
    if let Some(w) = module.escape_witness(t) {
        return Err(Error::NotPreserving { witness: w });
    }
    let (proj, _) = module.kernel_split(t);
    let mut residue = MatDiffOp::default();
    if matches!(basis.family, SuperFamily::Stair { .. }) {
        for (b, part) in proj.bidegree_decompose() {
            if b.y > 0 {
                residue = residue.add(&part);
            }
        }
    }
    let target = proj.sub(&residue);
    let combo = basis
        .ech
        .express(&target.to_vector())
        .ok_or_else(|| Error::Inexpressible(format!("{target}")))?;
    let mut words: BTreeMap<usize, Rational> = BTreeMap::new();
    for (label, c) in combo {
        if !c.is_zero() {
            words.insert(label, c);
        }
    }
    let mut realized = MatDiffOp::default();
    let mut out = Vec::new();
    let (mut max_degree, mut max_order) = (0, 0);
    for (label, c) in words {
        let bw = &basis.words[label];
        realized = realized.add(&basis.realize(&bw.word).scale(&c));
        max_degree = max_degree.max(bw.word.degree());
        max_order = max_order.max(bw.order);
        out.push((bw.word.clone(), c));
    }
    let kernel_remainder = t.sub(&realized).sub(&residue);
    Ok(Rank2Decomposition { source: t.clone(), words: out, kernel_remainder, residue, max_degree, max_order })
}
