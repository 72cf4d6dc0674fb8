//! Exact differential operators in two variables that preserve finite
//! polynomial modules, their Lie-algebraic generators, and super extensions.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod counts;
pub mod decompose;
pub mod diffop;
pub mod error;
pub mod generators;
pub mod kernels;
pub mod lattice;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod rational;
pub mod superops;
pub mod word;

pub use diffop::{BiDegree, Deriv, DiffOp, TotalDegree};
pub use error::{Error, Result};
pub use generators::GeneratorFamily;
pub use module::ModuleSpec;
pub use poly::{Exponent2, Poly2};
pub use rational::Rational;
pub use word::{Operator, Word};
