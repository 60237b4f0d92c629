//! Pivot statistics and the closed form of the sort-fiber sum.

use alloc::format;
use alloc::vec::Vec;

use super::preimage::sort_preimage;
use super::root::{is_disjoint, pivots, root_filling};
use crate::algebra::{Binomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::fillings::{des, des_pair, inv, Filling};
use crate::tokuyama::{place_walls, ssyt_to_gt, Ssyt};
use crate::weyl::{column_extended_length, column_inversions};

/// Number of values in `xs` strictly between `a` and `b` (`None` is
/// infinity).
pub fn count_between(a: usize, b: Option<usize>, xs: impl IntoIterator<Item = usize>) -> usize {
    xs.into_iter()
        .filter(|&x| a < x && b.is_none_or(|b| x < b))
        .count()
}

/// `Σ_{a ∈ C∖C'} N_{a, min(C'(r(a)), q)}[C'_{>r(a)} ∩ C]` for the
/// configuration `left | right`, with `q = None` read as infinity.
pub fn m_stat(left: &[usize], right: &[usize], q: Option<usize>) -> usize {
    left.iter()
        .enumerate()
        .filter(|(_, a)| !right.contains(a))
        .map(|(r, &a)| {
            let bound = match (right.get(r).copied(), q) {
                (Some(d), Some(q)) => Some(d.min(q)),
                (d, q) => d.or(q),
            };
            let below = right
                .iter()
                .skip(r + 1)
                .copied()
                .filter(|x| left.contains(x));
            count_between(a, bound, below)
        })
        .sum()
}

/// Statistics of an adjacent pair `Ĉ | C_i` of a root filling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ColumnStats {
    /// Right-column values in `Ĉ` lying in a pivot interval, counted below
    /// the pivot row.
    pub check_n: usize,
    /// The same count above the pivot row.
    pub hat_n: usize,
    /// Descents between the two columns.
    pub p: usize,
}

pub fn column_stats(root_left: &[usize], right: &[usize]) -> ColumnStats {
    let mut s = ColumnStats {
        p: des_pair(root_left, right),
        ..Default::default()
    };
    for pv in pivots(root_left, right).pivots {
        let row = pv.row - 1;
        let in_left = |x: &usize| root_left.contains(x);
        s.check_n += count_between(
            pv.entry,
            pv.end,
            right.iter().skip(row + 1).copied().filter(in_left),
        );
        s.hat_n += count_between(
            pv.entry,
            pv.end,
            right.iter().take(row).copied().filter(in_left),
        );
    }
    s
}

/// Totals of [`column_stats`] over the adjacent column pairs of `root`.
pub fn root_stats(root: &Filling) -> ColumnStats {
    root.columns()
        .windows(2)
        .map(|w| column_stats(&w[0], &w[1]))
        .fold(ColumnStats::default(), |acc, s| ColumnStats {
            check_n: acc.check_n + s.check_n,
            hat_n: acc.hat_n + s.hat_n,
            p: acc.p + s.p,
        })
}

/// The closed forms need the shape `λ+ρ`: strictly decreasing rows, `n - 1`
/// of them.
fn check_shape(tableau: &Ssyt, n: usize) -> Result<()> {
    if tableau.rows().len() + 1 != n.max(1) || !tableau.is_strict_shape() {
        return Err(Error::Precondition(format!(
            "shape {} is not lambda + rho for n = {n}",
            tableau.shape()
        )));
    }
    Ok(())
}

/// `(-t)^{Σ(Ň + N̂)} (1-t)^{Σ p}` over the root filling of `tableau`, or 0
/// when some adjacent pair of root columns has overlapping pivot intervals.
pub fn strong_compression_closed_form(tableau: &Ssyt, n: usize) -> Result<LaurentPoly> {
    check_shape(tableau, n)?;
    let root = root_filling(tableau)?;
    if !is_disjoint(&root) {
        return Ok(LaurentPoly::zero(0));
    }
    let s = root_stats(&root);
    Ok(
        &LaurentPoly::binomial_power(Binomial::MinusT, (s.check_n + s.hat_n) as u32, 0)
            * &LaurentPoly::binomial_power(Binomial::OneMinusT, s.p as u32, 0),
    )
}

/// Which column length decides the sign of a fiber term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    /// Inversions of the first column.
    Inversions,
    /// Length of the first column completed by its missing values.
    Completed,
}

/// `(-1)^{l(T[1])} t^{inv(T)} (1-t)^{des(T)}` for one filling.
pub fn fiber_term(filling: &Filling, n: usize, sign: SignConvention) -> Result<LaurentPoly> {
    let first: &[usize] = filling.columns().first().map_or(&[], |c| c.as_slice());
    let len = match sign {
        SignConvention::Inversions => column_inversions(first)?,
        SignConvention::Completed => column_extended_length(first, n)?,
    };
    let lead = LaurentPoly::signed_t_power(len % 2 == 1, inv(filling) as i32);
    Ok(&lead * &LaurentPoly::binomial_power(Binomial::OneMinusT, des(filling) as u32, 0))
}

/// Sum of [`fiber_term`] over the fillings that sort to `tableau`.
pub fn sort_fiber_sum(tableau: &Ssyt, n: usize, sign: SignConvention) -> Result<LaurentPoly> {
    let mut total = LaurentPoly::zero(0);
    for f in sort_preimage(tableau, n)? {
        total.try_add_assign(&fiber_term(&f, n, sign)?)?;
    }
    Ok(total)
}

/// Whether the fiber sum (signed by first-column inversions) equals the
/// closed form.
pub fn strong_compression_check(tableau: &Ssyt, n: usize) -> Result<bool> {
    Ok(sort_fiber_sum(tableau, n, SignConvention::Inversions)?
        == strong_compression_closed_form(tableau, n)?)
}

/// `(1-t)^z (-t)^l` read from the separating walls of `tableau`.
pub fn wall_product(tableau: &Ssyt, n: usize) -> Result<LaurentPoly> {
    let w = place_walls(tableau, n)?;
    Ok(
        &LaurentPoly::binomial_power(Binomial::OneMinusT, w.wall_stat_z() as u32, 0)
            * &LaurentPoly::binomial_power(Binomial::MinusT, w.wall_stat_l() as u32, 0),
    )
}

/// `(1-t)^{Σp} (-t)^{Σ(Ň+N̂) + n - a0}` read from the root filling.
pub fn root_product(tableau: &Ssyt, n: usize) -> Result<LaurentPoly> {
    check_shape(tableau, n)?;
    let root = root_filling(tableau)?;
    let a0 = root.missing_from_first_column(n)?;
    let s = root_stats(&root);
    Ok(
        &LaurentPoly::binomial_power(Binomial::OneMinusT, s.p as u32, 0)
            * &LaurentPoly::binomial_power(
                Binomial::MinusT,
                (s.check_n + s.hat_n + n - a0) as u32,
                0,
            ),
    )
}

/// Whether the wall statistics agree with the root-filling statistics on a
/// tableau whose pattern is strict.
pub fn stats_equivalence_check(tableau: &Ssyt, n: usize) -> Result<bool> {
    if !ssyt_to_gt(tableau, n)?.is_strict() {
        return Err(Error::NotStrict);
    }
    Ok(wall_product(tableau, n)? == root_product(tableau, n)?)
}

/// Statistics for every adjacent pair of the root filling, left to right.
pub fn column_stats_of(root: &Filling) -> Vec<ColumnStats> {
    root.columns()
        .windows(2)
        .map(|w| column_stats(&w[0], &w[1]))
        .collect()
}
