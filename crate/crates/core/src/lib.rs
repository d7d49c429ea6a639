//! Christoffel words and binary balanced words as digital approximations of
//! Euclidean segments.
//!
//! * [`word`]: finite binary words, periods, conjugacy, palindromes, Lyndon words.
//! * [`christoffel`]: lower/upper Christoffel words, central words, their
//!   factorizations and the Christoffel matrix.
//! * [`balance`]: balance, circular balance, special factors, prefix
//!   normality, digital-bar containment, enumeration of balanced words.
//! * [`counting`]: the closed-form count of balanced words with a given
//!   Parikh vector, with enumerative oracles.
//! * [`forbidden`]: minimal forbidden words of the balanced language and
//!   minimal almost balanced words.
//! * [`farey`]: prefixes of lower Christoffel words and the Farey sequence.

pub mod arith;
pub mod balance;
pub mod christoffel;
pub mod counting;
pub mod error;
pub mod farey;
pub mod forbidden;
pub mod word;

pub use error::{Result, WordError};
pub use word::{lex_compare, BinaryWord, ParikhVector};
