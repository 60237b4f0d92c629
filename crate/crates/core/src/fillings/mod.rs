//! HHL-type fillings of `λ+ρ`, their statistics, and the fill map from
//! admissible pairs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::alcove::{content_of, for_each_admissible_from, ramyip_coefficient, RootChain};
use crate::algebra::{Binomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::weyl::{column_inversions, Partition, Permutation};

pub mod subset_sums;

/// A cell `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

/// Assignment of values to the cells of a Young diagram, stored by column.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Filling {
    columns: Vec<Vec<usize>>,
}

impl Filling {
    /// Columns listed left to right, each top to bottom. Column lengths must
    /// be positive and weakly decreasing.
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self> {
        if columns.iter().any(|c| c.is_empty())
            || columns.windows(2).any(|w| w[0].len() < w[1].len())
        {
            return Err(Error::NotAPartition);
        }
        Ok(Self { columns })
    }

    /// Rows listed top to bottom, left-justified. Row lengths must be
    /// weakly decreasing.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) || rows.iter().any(|r| r.is_empty()) {
            return Err(Error::NotAPartition);
        }
        let width = rows.first().map_or(0, |r| r.len());
        let columns = (0..width)
            .map(|j| {
                rows.iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect();
        Ok(Self { columns })
    }

    pub(crate) fn from_columns_unchecked(columns: Vec<Vec<usize>>) -> Self {
        Self { columns }
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Vec<usize>> {
        self.columns
    }

    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j - 1]
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let height = self.columns.first().map_or(0, |c| c.len());
        (0..height)
            .map(|i| {
                self.columns
                    .iter()
                    .take_while(|c| c.len() > i)
                    .map(|c| c[i])
                    .collect()
            })
            .collect()
    }

    /// Entry at `(row, column)`, if the cell belongs to the shape.
    pub fn get(&self, (row, col): Cell) -> Option<usize> {
        self.columns
            .get(col.checked_sub(1)?)?
            .get(row.checked_sub(1)?)
            .copied()
    }

    /// Row lengths of the underlying diagram.
    pub fn shape(&self) -> Partition {
        let rows = self.columns.first().map_or(0, |c| c.len());
        Partition::new(
            (0..rows)
                .map(|i| self.columns.iter().filter(|c| c.len() > i).count())
                .collect(),
        )
        .expect("column lengths are weakly decreasing")
    }

    pub fn num_cells(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// The single value of `1..=n` absent from a first column of length
    /// `n - 1`.
    pub fn missing_from_first_column(&self, n: usize) -> Result<usize> {
        let first: &[usize] = self.columns.first().map_or(&[], |c| c.as_slice());
        if first.len() + 1 != n {
            return Err(Error::Precondition(alloc::format!(
                "first column has {} entries, expected {}",
                first.len(),
                n.saturating_sub(1)
            )));
        }
        (1..=n)
            .find(|v| !first.contains(v))
            .ok_or(Error::Precondition("first column repeats a value".into()))
    }
}

/// Rows separated by commas, e.g. `15,33,44,22,68`. Entries are written
/// without separators when every value is a single digit, otherwise
/// separated by spaces.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.columns.iter().flatten().all(|&v| v < 10);
        for (i, row) in self.rows().iter().enumerate() {
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

/// Two distinct cells attack when they share a column, or sit in adjacent
/// columns with the left one strictly lower.
pub fn attacks(u: Cell, v: Cell) -> bool {
    if u == v {
        return false;
    }
    u.1 == v.1 || (u.1 + 1 == v.1 && u.0 > v.0) || (v.1 + 1 == u.1 && v.0 > u.0)
}

/// Whether the left column may sit immediately left of the right column in
/// an HHL filling: rows weakly increase and attacking cells differ.
pub(crate) fn compatible_columns(left: &[usize], right: &[usize]) -> bool {
    right
        .iter()
        .enumerate()
        .all(|(k, &r)| left.get(k).is_some_and(|&l| l <= r) && !left[k + 1..].contains(&r))
}

pub(crate) fn distinct(col: &[usize]) -> bool {
    col.iter()
        .enumerate()
        .all(|(a, x)| !col[a + 1..].contains(x))
}

/// Values in `1..=n`, no equal attacking cells, rows weakly increasing.
pub fn is_hhl(sigma: &Filling, n: usize) -> bool {
    is_hhl_columns(&sigma.columns, n)
}

pub(crate) fn is_hhl_columns(columns: &[Vec<usize>], n: usize) -> bool {
    columns
        .iter()
        .all(|c| distinct(c) && c.iter().all(|&v| (1..=n).contains(&v)))
        && columns.windows(2).all(|w| compatible_columns(&w[0], &w[1]))
}

/// Inversions between adjacent columns: `u = (j, k)`, `v = (i, k+1)` with
/// `i < j` and `σ(u) < σ(v)`, where additionally `σ(v) < σ(r(u))` whenever
/// `u` has a right neighbour.
pub fn inv(sigma: &Filling) -> usize {
    inv_columns(&sigma.columns)
}

pub(crate) fn inv_columns(columns: &[Vec<usize>]) -> usize {
    columns.windows(2).map(|w| inv_pair(&w[0], &w[1])).sum()
}

pub(crate) fn inv_pair(left: &[usize], right: &[usize]) -> usize {
    let mut count = 0;
    for (j, &a) in left.iter().enumerate() {
        for &b in &right[..j.min(right.len())] {
            if a < b && right.get(j).is_none_or(|&r| b < r) {
                count += 1;
            }
        }
    }
    count
}

/// Cells strictly smaller than their right neighbour.
pub fn des(sigma: &Filling) -> usize {
    des_columns(&sigma.columns)
}

pub(crate) fn des_columns(columns: &[Vec<usize>]) -> usize {
    columns.windows(2).map(|w| des_pair(&w[0], &w[1])).sum()
}

pub(crate) fn des_pair(left: &[usize], right: &[usize]) -> usize {
    left.iter().zip(right).filter(|(a, b)| a < b).count()
}

/// Multiplicities of the values `1..=n`.
pub fn content(sigma: &Filling, n: usize) -> Vec<i32> {
    content_of(&sigma.columns, n)
}

/// `(-1)^{n-a0+l(C)} t^{n-a0+inv} (1-t)^{des}` as a rank-0 polynomial, where
/// `C` is the first column and `a0` the value it misses.
pub fn hhl_coefficient(sigma: &Filling, n: usize) -> Result<LaurentPoly> {
    if sigma.columns.is_empty() {
        return Ok(LaurentPoly::one(0));
    }
    let a0 = sigma.missing_from_first_column(n)?;
    let shift = n - a0;
    let sign = (shift + column_inversions(&sigma.columns[0])?) % 2 == 1;
    let lead = LaurentPoly::signed_t_power(sign, (shift + inv(sigma)) as i32);
    Ok(&lead * &LaurentPoly::binomial_power(Binomial::OneMinusT, des(sigma) as u32, 0))
}

/// Calls `visit` on every HHL filling with the given column lengths and
/// values in `1..=n`.
pub fn for_each_filling_of_shape(
    column_lengths: &[usize],
    n: usize,
    mut visit: impl FnMut(&[Vec<usize>]),
) {
    fn rec(
        lengths: &[usize],
        n: usize,
        cols: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let j = cols.len() - 1;
        let row = cols[j].len();
        if row == lengths[j] {
            if j + 1 == lengths.len() {
                visit(cols);
                return;
            }
            cols.push(Vec::with_capacity(lengths[j + 1]));
            rec(lengths, n, cols, visit);
            cols.pop();
            return;
        }
        for v in 1..=n {
            if cols[j].contains(&v) {
                continue;
            }
            if j > 0 {
                let prev = &cols[j - 1];
                if prev[row] > v || prev[row + 1..].contains(&v) {
                    continue;
                }
            }
            cols[j].push(v);
            rec(lengths, n, cols, visit);
            cols[j].pop();
        }
    }
    if column_lengths.is_empty() {
        visit(&[]);
        return;
    }
    let mut cols = alloc::vec![Vec::with_capacity(column_lengths[0])];
    rec(column_lengths, n, &mut cols, &mut visit);
}

/// All HHL fillings of `λ+ρ` with values in `1..=n`.
pub fn enumerate_fillings(lambda: &Partition, n: usize) -> Result<Vec<Filling>> {
    let shape = lambda.plus_rho(n)?.conjugate();
    let mut out = Vec::new();
    for_each_filling_of_shape(shape.parts(), n, |cols| {
        out.push(Filling::from_columns_unchecked(cols.to_vec()))
    });
    Ok(out)
}

/// The HHL-filling expansion for `lambda` in rank `n`.
pub fn hhl_sum(lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    let mut grouped: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
    for sigma in enumerate_fillings(lambda, n)? {
        let c = hhl_coefficient(&sigma, n)?;
        let slot = grouped
            .entry(content(&sigma, n))
            .or_insert_with(|| LaurentPoly::zero(0));
        *slot = &*slot + &c;
    }
    let mut total = LaurentPoly::zero(n);
    for (ct, c) in grouped {
        total.try_add_assign(&c.times_x_monomial(&ct)?)?;
    }
    Ok(total)
}

/// Column `j` is the first `mu'_j` entries of `u` times the chosen
/// reflections of blocks `1..=j`.
pub fn fill_map(u: &Permutation, k: &[usize], chain: &RootChain) -> Filling {
    Filling::from_columns_unchecked(chain.columns(u, k))
}

enum Check {
    Column(usize),
    Position { column: usize, position: usize },
}

/// Checks to run before chain index 0 (slot 0) and after each index
/// (slot `idx + 1`). A position of column `j` is final once the last
/// reflection of its row in block `j` has been decided.
fn preimage_checks(chain: &RootChain) -> Vec<Vec<Check>> {
    let mut slots: Vec<Vec<Check>> = (0..=chain.len()).map(|_| Vec::new()).collect();
    for (j, block) in chain.block_bounds().iter().enumerate() {
        for idx in block.clone() {
            let pos = chain.entries()[idx].i();
            let last_of_row = idx + 1 == block.end || chain.entries()[idx + 1].i() != pos;
            if last_of_row {
                slots[idx + 1].push(Check::Position {
                    column: j,
                    position: pos,
                });
            }
        }
        slots[block.end].push(Check::Column(j));
    }
    slots
}

/// All admissible pairs whose filling is `sigma`. The start permutation is
/// forced by the first column, and the search prunes as soon as a settled
/// position disagrees with `sigma`.
pub fn fill_preimage(sigma: &Filling, chain: &RootChain) -> Result<Vec<(Permutation, Vec<usize>)>> {
    let n = chain.n();
    if sigma
        .columns
        .iter()
        .map(Vec::len)
        .ne(chain.column_lengths().iter().copied())
    {
        return Err(Error::Precondition(
            "filling shape differs from the chain shape".into(),
        ));
    }
    let mut out = Vec::new();
    let starts: Vec<Permutation> = if sigma.columns.is_empty() {
        Permutation::all(n)
    } else {
        let first = &sigma.columns[0];
        let a0 = sigma.missing_from_first_column(n)?;
        let mut one_line = first.clone();
        one_line.push(a0);
        match Permutation::new(one_line) {
            Ok(u) => alloc::vec![u],
            Err(_) => return Ok(out),
        }
    };
    let checks = preimage_checks(chain);
    let passes = |w: &Permutation, slot: &[Check]| {
        slot.iter().all(|c| match *c {
            Check::Column(j) => w.as_slice()[..sigma.columns[j].len()] == sigma.columns[j][..],
            Check::Position { column, position } => sigma.columns[column]
                .get(position - 1)
                .is_none_or(|&v| w.at(position) == v),
        })
    };
    for u in starts {
        if !passes(&u, &checks[0]) {
            continue;
        }
        let mut stack = alloc::vec![(0usize, u.clone(), Vec::new())];
        while let Some((idx, w, k)) = stack.pop() {
            if idx == chain.len() {
                out.push((u.clone(), k));
                continue;
            }
            let r = chain.entries()[idx];
            if w.bruhat_increases(r) {
                let w2 = w.apply(r);
                if passes(&w2, &checks[idx + 1]) {
                    let mut k2 = k.clone();
                    k2.push(idx);
                    stack.push((idx + 1, w2, k2));
                }
            }
            if passes(&w, &checks[idx + 1]) {
                stack.push((idx + 1, w, k));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Sum of alcove-walk coefficients over the fill-map fiber of `sigma`.
pub fn fiber_sum(sigma: &Filling, chain: &RootChain) -> Result<LaurentPoly> {
    let mut total = LaurentPoly::zero(0);
    for (u, k) in fill_preimage(sigma, chain)? {
        let end = chain.end_of(&u, &k);
        total.try_add_assign(&ramyip_coefficient(&u, k.len(), &end)?)?;
    }
    Ok(total)
}

/// Whether the fiber sum over `sigma` equals its HHL coefficient.
pub fn weak_compression_check(sigma: &Filling, chain: &RootChain, n: usize) -> Result<bool> {
    Ok(fiber_sum(sigma, chain)? == hhl_coefficient(sigma, n)?)
}

/// Groups all admissible pairs of the chain by their filling, as an oracle
/// for [`fill_preimage`].
pub fn group_by_filling(chain: &RootChain) -> BTreeMap<Filling, Vec<(Permutation, Vec<usize>)>> {
    let mut groups: BTreeMap<Filling, Vec<(Permutation, Vec<usize>)>> = BTreeMap::new();
    for u in Permutation::all(chain.n()) {
        for_each_admissible_from(chain, &u, |u, k, _| {
            groups
                .entry(fill_map(u, k, chain))
                .or_default()
                .push((u.clone(), k.to_vec()));
        });
    }
    for v in groups.values_mut() {
        v.sort();
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cols(c: &[&[usize]]) -> Filling {
        Filling::from_columns(c.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn attack_rule() {
        assert!(attacks((1, 1), (3, 1)));
        assert!(attacks((3, 1), (1, 2)));
        assert!(!attacks((1, 1), (3, 2)));
        assert!(!attacks((2, 1), (2, 2)));
    }

    #[test]
    fn membership() {
        assert!(is_hhl(&cols(&[&[2]]), 2));
        assert!(is_hhl(&cols(&[&[1, 2, 3], &[4, 5, 6]]), 6));
        assert!(!is_hhl(&cols(&[&[1, 1]]), 2));
        assert!(!is_hhl(&cols(&[&[6, 3, 4, 2, 1], &[5, 3, 4, 2, 8]]), 8));
        assert!(!is_hhl(&cols(&[&[3]]), 2));
    }

    #[test]
    fn statistics() {
        let a = cols(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!((inv(&a), des(&a)), (3, 3));
        let b = cols(&[&[1, 3, 4, 2, 6], &[5, 3, 4, 2, 8]]);
        assert_eq!((inv(&b), des(&b)), (0, 2));
        assert_eq!(inv(&cols(&[&[3, 1, 2]])), 0);
        assert_eq!(des(&cols(&[&[2, 1], &[2, 1]])), 0);
        assert_eq!(content(&cols(&[&[1]]), 2), vec![1, 0]);
        assert_eq!(content(&a, 6), vec![1; 6]);
    }

    #[test]
    fn row_and_column_views() {
        let f = Filling::from_rows(&[vec![1, 5], vec![3, 3], vec![2]]).unwrap();
        assert_eq!(f.columns(), &[vec![1, 3, 2], vec![5, 3]]);
        assert_eq!(f.rows(), vec![vec![1, 5], vec![3, 3], vec![2]]);
        assert_eq!(f.shape().parts(), &[2, 2, 1]);
        assert_eq!(f.get((3, 1)), Some(2));
        assert_eq!(f.get((3, 2)), None);
        assert_eq!(alloc::format!("{f}"), "15,33,2");
        assert!(Filling::from_columns(vec![vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn enumeration() {
        let f = enumerate_fillings(&part(&[]), 2).unwrap();
        assert_eq!(f, vec![cols(&[&[1]]), cols(&[&[2]])]);
        // oracle: filter all 3^3 assignments of shape (2,1)
        let mut brute = 0;
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    if is_hhl(&cols(&[&[a, b], &[c]]), 3) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(enumerate_fillings(&part(&[]), 3).unwrap().len(), brute);
        assert_eq!(enumerate_fillings(&part(&[]), 1).unwrap().len(), 1);
    }

    #[test]
    fn two_variable_sum() {
        assert_eq!(
            alloc::format!("{}", hhl_sum(&part(&[]), 2).unwrap()),
            "x1 - t*x2"
        );
        assert_eq!(hhl_sum(&part(&[]), 1).unwrap(), LaurentPoly::one(1));
    }

    #[test]
    fn fill_map_basics() {
        let chain = RootChain::new(&part(&[1]), 3).unwrap();
        let u = Permutation::new(vec![2, 3, 1]).unwrap();
        let f = fill_map(&u, &[], &chain);
        assert_eq!(f.columns(), &[vec![2, 3], vec![2], vec![2]]);
    }

    #[test]
    fn preimage_matches_grouping() {
        for (lam, n) in [(&[][..], 3), (&[1], 3), (&[2, 1], 3), (&[1], 4)] {
            let chain = RootChain::new(&part(lam), n).unwrap();
            let groups = group_by_filling(&chain);
            for sigma in enumerate_fillings(&part(lam), n).unwrap() {
                let pre = fill_preimage(&sigma, &chain).unwrap();
                assert_eq!(Some(&pre), groups.get(&sigma), "{sigma}");
                assert!(pre.iter().all(|(u, _)| *u == pre[0].0));
                assert!(weak_compression_check(&sigma, &chain, n).unwrap());
            }
        }
    }
}
