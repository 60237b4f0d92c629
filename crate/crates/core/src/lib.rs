//! Exact combinatorial formulas for type A spherical Whittaker functions.
//!
//! Three expansions of the same polynomial are implemented side by side:
//!
//! * [`alcove::ramyip_sum`]: a sum over admissible pairs `(u, K)` of an
//!   alcove-walk root chain,
//! * [`fillings::hhl_sum`]: a sum over HHL-type fillings of the shape `λ+ρ`,
//! * [`tokuyama::tokuyama_sum`]: a sum over strict Gelfand-Tsetlin patterns.
//!
//! The [`fillings`] module groups alcove terms along the fill map, and
//! [`compression`] groups HHL terms along the column-sort map using the
//! generation-tree algorithm. Every value is an exact [`LaurentPoly`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alcove;
pub mod algebra;
pub mod audit;
pub mod compression;
mod error;
pub mod fillings;
pub mod tokuyama;
pub mod weyl;

pub use algebra::{Binomial, ExponentVector, LaurentPoly};
pub use error::{Error, Result};
pub use fillings::Filling;
pub use tokuyama::{GtPattern, Ssyt};
pub use weyl::{Partition, Permutation, Transposition};
