//! Root columns, pivots and the Non-overlapping Condition.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fillings::{compatible_columns, distinct, Filling};
use crate::tokuyama::Ssyt;

/// The canonical left column for the value set `set` next to `right`:
/// shared values sit beside their copy in `right`; the remaining values,
/// largest first, go beside the remaining entries of `right`, largest
/// first, except that when the left column is one cell longer its largest
/// unshared value fills the extra bottom cell.
pub fn root_column(set: &[usize], right: &[usize]) -> Result<Vec<usize>> {
    if !distinct(set) || !distinct(right) {
        return Err(Error::Precondition(
            "columns must have distinct entries".into(),
        ));
    }
    let (c, c_right) = (set.len(), right.len());
    if c != c_right && c != c_right + 1 {
        return Err(Error::Precondition(alloc::format!(
            "left size {c} must equal or exceed by one the right size {c_right}"
        )));
    }
    let mut sorted_left = set.to_vec();
    sorted_left.sort_unstable();
    let mut sorted_right = right.to_vec();
    sorted_right.sort_unstable();
    if sorted_left.iter().zip(&sorted_right).any(|(a, b)| a > b) {
        return Err(Error::Precondition(
            "sorted columns must increase along rows".into(),
        ));
    }
    let mut out = alloc::vec![0; c];
    let mut unshared: Vec<usize> = Vec::new();
    for &v in sorted_left.iter().rev() {
        match right.iter().position(|&r| r == v) {
            Some(row) => out[row] = v,
            None => unshared.push(v),
        }
    }
    let mut open: Vec<(usize, usize)> = right
        .iter()
        .enumerate()
        .filter(|(_, r)| !set.contains(r))
        .map(|(row, &r)| (r, row))
        .collect();
    open.sort_unstable_by(|a, b| b.cmp(a));
    let mut unshared = unshared.into_iter();
    if c == c_right + 1 {
        out[c_right] = unshared
            .next()
            .expect("one more unshared value than open rows");
    }
    for (v, (_, row)) in unshared.zip(open) {
        out[row] = v;
    }
    if !compatible_columns(&out, right) {
        return Err(Error::NotHhl);
    }
    Ok(out)
}

/// A row whose left entry is below its right entry in value, or the extra
/// bottom row of a longer left column (`end == None`, read as infinity).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pivot {
    /// 1-based row.
    pub row: usize,
    pub entry: usize,
    pub end: Option<usize>,
}

impl Pivot {
    /// Whether `v` lies in the closed interval `[entry, end]`.
    pub fn contains(&self, v: usize) -> bool {
        self.entry <= v && self.end.is_none_or(|d| v <= d)
    }
}

/// Pivots ordered by decreasing entry.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PivotData {
    pub pivots: Vec<Pivot>,
}

impl PivotData {
    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn entries(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p.entry).collect()
    }

    /// Rows in increasing order.
    pub fn rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.pivots.iter().map(|p| p.row).collect();
        rows.sort_unstable();
        rows
    }

    pub fn is_entry(&self, v: usize) -> bool {
        self.pivots.iter().any(|p| p.entry == v)
    }
}

pub fn pivots(left: &[usize], right: &[usize]) -> PivotData {
    let mut pivots: Vec<Pivot> = left
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| match right.get(i) {
            Some(&d) if b < d => Some(Pivot {
                row: i + 1,
                entry: b,
                end: Some(d),
            }),
            Some(_) => None,
            None => Some(Pivot {
                row: i + 1,
                entry: b,
                end: None,
            }),
        })
        .collect();
    pivots.sort_unstable_by_key(|p| core::cmp::Reverse(p.entry));
    PivotData { pivots }
}

/// Whether the pivot intervals `[b, d]` are pairwise disjoint.
pub fn non_overlapping(left: &[usize], right: &[usize]) -> bool {
    let p = pivots(left, right).pivots;
    p.iter().enumerate().all(|(k, x)| {
        p[k + 1..].iter().all(|y| {
            let lo = x.entry.max(y.entry);
            match (x.end, y.end) {
                (Some(a), Some(b)) => lo > a.min(b),
                (Some(a), None) | (None, Some(a)) => lo > a,
                (None, None) => false,
            }
        })
    })
}

/// Root filling of a tableau: the rightmost column is kept and every other
/// column is the root column of its value set against the column built to
/// its right.
pub fn root_filling(tableau: &Ssyt) -> Result<Filling> {
    let cols = tableau.columns();
    let mut out: Vec<Vec<usize>> = alloc::vec![Vec::new(); cols.len()];
    for j in (0..cols.len()).rev() {
        out[j] = if j + 1 == cols.len() {
            cols[j].clone()
        } else {
            root_column(&cols[j], &out[j + 1])?
        };
    }
    Filling::from_columns(out)
}

/// Whether every pair of adjacent columns satisfies the Non-overlapping
/// Condition.
pub fn is_disjoint(root: &Filling) -> bool {
    root.columns()
        .windows(2)
        .all(|w| non_overlapping(&w[0], &w[1]))
}
