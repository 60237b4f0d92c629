//! Gelfand-Tsetlin patterns, Tokuyama's expansion, the bijection with
//! semistandard tableaux, and separating-wall statistics.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Binomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::weyl::Partition;

/// Triangular array whose row `i` (0-based) has `len(top) - i` entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GtPattern {
    rows: Vec<Vec<usize>>,
}

impl GtPattern {
    /// Checks only the triangular shape; see [`GtPattern::is_gt`].
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.len() != n || rows.iter().enumerate().any(|(i, r)| r.len() != n - i) {
            return Err(Error::NotGtPattern);
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn top(&self) -> &[usize] {
        self.rows.first().map_or(&[], |r| r.as_slice())
    }

    /// Rows weakly decrease and interleave with the row above.
    pub fn is_gt(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]))
            && self.rows.windows(2).all(|w| {
                w[1].iter()
                    .enumerate()
                    .all(|(j, &a)| w[0][j] >= a && a >= w[0][j + 1])
            })
    }

    /// Every row strictly decreasing.
    pub fn is_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] > w[1]))
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// All strict patterns with the given strictly decreasing top row.
pub fn enumerate_sgt(top: &[usize]) -> Result<Vec<GtPattern>> {
    if top.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::NotStrict);
    }
    fn rec(rows: &mut Vec<Vec<usize>>, out: &mut Vec<GtPattern>, cur: &mut Vec<usize>) {
        let prev = rows.last().expect("top row present");
        if prev.len() <= 1 {
            out.push(GtPattern { rows: rows.clone() });
            return;
        }
        let j = cur.len();
        if j + 1 == prev.len() {
            rows.push(core::mem::take(cur));
            rec(rows, out, &mut Vec::new());
            *cur = rows.pop().expect("row pushed above");
            return;
        }
        let hi = match cur.last() {
            Some(&last) => prev[j].min(last.saturating_sub(1)),
            None => prev[j],
        };
        let lo = prev[j + 1];
        if cur.last() == Some(&0) {
            return;
        }
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(rows, out, cur);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if top.is_empty() {
        return Ok(alloc::vec![GtPattern { rows: Vec::new() }]);
    }
    rec(&mut alloc::vec![top.to_vec()], &mut out, &mut Vec::new());
    Ok(out)
}

/// Leaning counts over all rows below the top.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LeaningStats {
    /// Entries equal to their upper-left neighbour. An entry equal to both
    /// upper neighbours is counted here only.
    pub left: usize,
    /// Entries equal to their upper-right neighbour only.
    pub right: usize,
    /// Entries equal to neither.
    pub special: usize,
}

pub fn gt_stats(pattern: &GtPattern) -> LeaningStats {
    let mut s = LeaningStats::default();
    for w in pattern.rows.windows(2) {
        for (j, &a) in w[1].iter().enumerate() {
            if a == w[0][j] {
                s.left += 1;
            } else if a == w[0][j + 1] {
                s.right += 1;
            } else {
                s.special += 1;
            }
        }
    }
    s
}

/// `(|r_1| - |r_2|, ..., |r_{n-1}| - |r_n|, |r_n|)`.
pub fn m_vector(pattern: &GtPattern) -> Vec<i32> {
    let sums: Vec<i64> = pattern
        .rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i64).sum())
        .collect();
    (0..sums.len())
        .map(|i| (sums[i] - sums.get(i + 1).copied().unwrap_or(0)) as i32)
        .collect()
}

/// `λ + (n-1, ..., 1, 0)` with `λ` padded to `n` parts.
pub fn gt_top_row(lambda: &Partition, n: usize) -> Result<Vec<usize>> {
    if lambda.num_parts() > n {
        return Err(Error::TooManyParts {
            parts: lambda.num_parts(),
            max: n,
        });
    }
    Ok((1..=n).map(|i| lambda.part(i) + n - i).collect())
}

/// `Σ (1-t)^z (-t)^l x^m` over strict patterns with top row `λ + ρ`.
pub fn tokuyama_sum(lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    if lambda.num_parts() >= n.max(1) {
        return Err(Error::TooManyParts {
            parts: lambda.num_parts(),
            max: n.saturating_sub(1),
        });
    }
    let mut total = LaurentPoly::zero(n);
    for p in enumerate_sgt(&gt_top_row(lambda, n)?)? {
        let s = gt_stats(&p);
        let c = &LaurentPoly::binomial_power(Binomial::OneMinusT, s.special as u32, 0)
            * &LaurentPoly::binomial_power(Binomial::MinusT, s.left as u32, 0);
        total.try_add_assign(&c.times_x_monomial(&m_vector(&p))?)?;
    }
    Ok(total)
}

/// Semistandard Young tableau stored by rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
}

impl Ssyt {
    /// Rows top to bottom; rows weakly increase, columns strictly increase,
    /// entries are positive.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::NotAPartition);
        }
        let ok = rows.iter().flatten().all(|&v| v > 0)
            && rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && rows
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        if !ok {
            return Err(Error::NotSemistandard);
        }
        Ok(Self { rows })
    }

    pub fn from_columns(columns: &[Vec<usize>]) -> Result<Self> {
        let height = columns.first().map_or(0, Vec::len);
        if columns.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::NotAPartition);
        }
        Self::new(
            (0..height)
                .map(|i| {
                    columns
                        .iter()
                        .take_while(|c| c.len() > i)
                        .map(|c| c[i])
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("row lengths decrease")
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicities of `1..=n`.
    pub fn content(&self, n: usize) -> Vec<i32> {
        let mut ct = alloc::vec![0; n];
        for &v in self.rows.iter().flatten() {
            ct[v - 1] += 1;
        }
        ct
    }

    /// Whether no two rows have the same length.
    pub fn is_strict_shape(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].len() > w[1].len())
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.rows.iter().flatten().all(|&v| v < 10);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 && !compact {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Row `i` of the pattern (0-based) is the shape formed by the entries at
/// most `n - i`, so each strip between consecutive rows holds the entry
/// `n - i`.
pub fn gt_to_ssyt(pattern: &GtPattern) -> Result<Ssyt> {
    if !pattern.is_gt() {
        return Err(Error::NotGtPattern);
    }
    let n = pattern.rows.len();
    let height = pattern.top().iter().filter(|&&v| v > 0).count();
    let mut rows = alloc::vec![Vec::new(); height];
    for (r, row) in rows.iter_mut().enumerate() {
        for v in 1..=n {
            let upto = |k: usize| {
                if k == 0 {
                    0
                } else {
                    pattern.rows[n - k].get(r).copied().unwrap_or(0)
                }
            };
            let count = upto(v) - upto(v - 1);
            row.extend(core::iter::repeat_n(v, count));
        }
    }
    Ssyt::new(rows)
}

/// Inverse of [`gt_to_ssyt`] for tableaux with entries at most `n`.
pub fn ssyt_to_gt(tableau: &Ssyt, n: usize) -> Result<GtPattern> {
    if let Some(&v) = tableau.rows.iter().flatten().find(|&&v| v > n) {
        return Err(Error::EntryOutOfRange { value: v, n });
    }
    if tableau.rows.len() > n {
        return Err(Error::TooManyParts {
            parts: tableau.rows.len(),
            max: n,
        });
    }
    let rows = (1..=n)
        .rev()
        .map(|k| {
            (0..k)
                .map(|r| {
                    tableau
                        .rows
                        .get(r)
                        .map_or(0, |row| row.iter().filter(|&&v| v <= k).count())
                })
                .collect()
        })
        .collect();
    let p = GtPattern { rows };
    debug_assert!(p.is_gt());
    Ok(p)
}

/// A wall of index `index` in row `row` (1-based), after `position` boxes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Wall {
    pub row: usize,
    pub position: usize,
    pub index: usize,
}

/// A tableau decorated with separating walls.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalledSsyt {
    base: Ssyt,
    walls: Vec<Wall>,
}

impl WalledSsyt {
    pub fn base(&self) -> &Ssyt {
        &self.base
    }

    /// Walls ordered by row, then position, then index.
    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    /// Position of the wall with the given index in the given row.
    pub fn position(&self, index: usize, row: usize) -> Option<usize> {
        self.walls
            .iter()
            .find(|w| w.index == index && w.row == row)
            .map(|w| w.position)
    }

    /// Pairs `|_{k-1} |_k` with nothing between them whose two walls sit
    /// directly above `|_k |_{k+1}` in the next row.
    pub fn wall_stat_n(&self) -> usize {
        self.walls
            .iter()
            .filter(|w| {
                let p = Some(w.position);
                w.index > 0
                    && self.position(w.index - 1, w.row) == p
                    && self.position(w.index, w.row + 1) == p
                    && self.position(w.index + 1, w.row + 1) == p
            })
            .count()
    }

    /// Walls `|_k` sitting directly above `|_{k+1}` in the next row.
    pub fn wall_stat_l(&self) -> usize {
        self.walls
            .iter()
            .filter(|w| self.position(w.index + 1, w.row + 1) == Some(w.position))
            .count()
    }

    /// Walls `|_k` with `|_{k+1}` strictly to the right in the same row and
    /// strictly to the left in the next row.
    pub fn wall_stat_z(&self) -> usize {
        self.walls
            .iter()
            .filter(|w| {
                self.position(w.index + 1, w.row)
                    .is_some_and(|p| p > w.position)
                    && self
                        .position(w.index + 1, w.row + 1)
                        .is_some_and(|p| p < w.position)
            })
            .count()
    }
}

/// In row `r`, the wall of index `k` (for `r <= k <= n`) goes after the last
/// box with entry at most `k`; one more wall, of index `rows + 1`, starts
/// the row below the tableau.
pub fn place_walls(tableau: &Ssyt, n: usize) -> Result<WalledSsyt> {
    if let Some(&v) = tableau.rows.iter().flatten().find(|&&v| v > n) {
        return Err(Error::EntryOutOfRange { value: v, n });
    }
    let height = tableau.rows.len();
    let mut walls = Vec::new();
    for (r, row) in tableau.rows.iter().enumerate() {
        for k in r + 1..=n {
            let position = row.iter().filter(|&&v| v <= k).count();
            walls.push(Wall {
                row: r + 1,
                position,
                index: k,
            });
        }
    }
    walls.push(Wall {
        row: height + 1,
        position: 0,
        index: height + 1,
    });
    walls.sort();
    Ok(WalledSsyt {
        base: tableau.clone(),
        walls,
    })
}
