//! Words in a list of generators and their realization as operators.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::diffop::{DiffOp, TermKey};
use crate::linalg::SparseVec;
use crate::rational::Rational;

/// Anything that composes like an associative algebra with unit and has
/// exact coordinates.
pub trait Operator: Clone + PartialEq {
    type Key: Ord + Clone;

    fn identity() -> Self;
    fn zero() -> Self;
    fn compose(&self, other: &Self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn coordinates(&self) -> SparseVec<Self::Key>;
}

impl Operator for DiffOp {
    type Key = TermKey;

    fn identity() -> Self {
        DiffOp::identity()
    }
    fn zero() -> Self {
        DiffOp::zero()
    }
    fn compose(&self, other: &Self) -> Self {
        DiffOp::compose(self, other)
    }
    fn plus(&self, other: &Self) -> Self {
        DiffOp::add(self, other)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn is_zero(&self) -> bool {
        DiffOp::is_zero(self)
    }
    fn coordinates(&self) -> SparseVec<TermKey> {
        self.to_vector()
    }
}

/// Ordered product of generator powers, e.g. `J1^2*J7*J8`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    factors: Vec<(usize, u32)>,
}

impl Word {
    pub fn one() -> Self {
        Word::default()
    }

    /// Builds a word, merging adjacent equal generators and dropping zero powers.
    pub fn from_factors(factors: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut w = Word::one();
        for (g, k) in factors {
            w.push(g, k);
        }
        w
    }

    pub fn gen(g: usize) -> Self {
        Word::from_factors([(g, 1)])
    }

    pub fn push(&mut self, g: usize, k: u32) {
        if k == 0 {
            return;
        }
        match self.factors.last_mut() {
            Some((last, pow)) if *last == g => *pow += k,
            _ => self.factors.push((g, k)),
        }
    }

    pub fn then(mut self, g: usize, k: u32) -> Self {
        self.push(g, k);
        self
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, k) in &other.factors {
            w.push(g, k);
        }
        w
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    /// Number of generator factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, k)| k).sum()
    }

    /// Multiplicity of generator `g`.
    pub fn power_of(&self, g: usize) -> u32 {
        self.factors.iter().filter(|(h, _)| *h == g).map(|(_, k)| k).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn realize<O: Operator>(&self, gens: &[O]) -> O {
        let mut out = O::identity();
        for &(g, k) in &self.factors {
            for _ in 0..k {
                out = out.compose(&gens[g]);
            }
        }
        out
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.factors.is_empty() {
            return String::from("1");
        }
        let mut s = String::new();
        for (idx, &(g, k)) in self.factors.iter().enumerate() {
            if idx > 0 {
                s.push('*');
            }
            s.push_str(&names[g]);
            if k > 1 {
                let _ = write!(s, "^{}", k);
            }
        }
        s
    }
}

/// `sum c_i realize(w_i)`.
pub fn realize_combination<O: Operator>(terms: &[(Word, Rational)], gens: &[O]) -> O {
    let mut out = O::zero();
    for (w, c) in terms {
        out = out.plus(&w.realize(gens).scaled(c));
    }
    out
}
