//! Grouping HHL fillings along the column-sort map.
//!
//! For a semistandard tableau `S`, the fillings whose sorted columns give
//! `S` are produced right to left: with the right column `C'` fixed, every
//! admissible left column arises from the root column `Ĉ` by applying value
//! transpositions from a β-sequence, organized as a [`GenerationTree`].
//! [`stats`] holds the pivot statistics and the closed form of the fiber
//! sum; [`crate::audit`] re-derives the intermediate identities on every
//! tree.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fillings::{is_hhl_columns, Filling};
use crate::tokuyama::Ssyt;

pub mod beta;
pub mod preimage;
pub mod root;
pub mod stats;
pub mod tree;

pub use beta::{build_beta, is_legal, BetaSequence, ValueTransposition};
pub use preimage::sort_preimage;
pub use root::{non_overlapping, pivots, root_column, root_filling, Pivot, PivotData};
pub use stats::{
    column_stats, m_stat, stats_equivalence_check, strong_compression_check,
    strong_compression_closed_form, ColumnStats,
};
pub use tree::{generation_tree, node_sum, GenerationTree, TreeEdge, TreeNode};

/// Sorts every column increasingly. The input must be HHL with values in
/// `1..=n`; the result is checked to be semistandard.
pub fn sort_columns(sigma: &Filling, n: usize) -> Result<Ssyt> {
    if !is_hhl_columns(sigma.columns(), n) {
        return Err(Error::NotHhl);
    }
    let cols: Vec<Vec<usize>> = sigma
        .columns()
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    Ssyt::from_columns(&cols)
}
