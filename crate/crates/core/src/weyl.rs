//! Permutations of `{1..n}`, transpositions, partitions and column statistics.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Permutation in one-line notation, values `1..=n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || core::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(Self(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn longest(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = alloc::vec![Self(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Self(cur.clone()));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        inversions(&self.0)
    }

    /// `w * (i j)`: swaps the entries in positions `i` and `j`.
    pub fn apply(&self, t: Transposition) -> Self {
        let mut v = self.0.clone();
        v.swap(t.i - 1, t.j - 1);
        Self(v)
    }

    pub fn apply_in_place(&mut self, t: Transposition) {
        self.0.swap(t.i - 1, t.j - 1);
    }

    /// Whether `w * (i j)` is strictly longer than `w`.
    pub fn bruhat_increases(&self, t: Transposition) -> bool {
        self.0[t.i - 1] < self.0[t.j - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.0.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Self(inv)
    }

    /// 1-based position holding `value`.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.0.iter().position(|&v| v == value).map(|p| p + 1)
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn inversions(v: &[usize]) -> usize {
    let mut count = 0;
    for (a, x) in v.iter().enumerate() {
        count += v[a + 1..].iter().filter(|&y| y < x).count();
    }
    count
}

/// Transposition `(i j)` of positions, `1 <= i < j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::Precondition(alloc::format!(
                "transposition ({i} {j}) needs 1 <= i < j"
            )));
        }
        Ok(Self { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

fn check_distinct(col: &[usize]) -> Result<()> {
    for (a, x) in col.iter().enumerate() {
        if col[a + 1..].contains(x) {
            return Err(Error::RepeatedEntry { value: *x });
        }
    }
    Ok(())
}

/// Inversions of a column read top to bottom.
pub fn column_inversions(col: &[usize]) -> Result<usize> {
    check_distinct(col)?;
    Ok(inversions(col))
}

/// Length of the permutation obtained by appending the values of `{1..n}`
/// missing from `col`, in increasing order, below it.
pub fn column_extended_length(col: &[usize], n: usize) -> Result<usize> {
    check_distinct(col)?;
    if let Some(&v) = col.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::EntryOutOfRange { value: v, n });
    }
    let mut full: Vec<usize> = col.to_vec();
    full.extend((1..=n).filter(|v| !col.contains(v)));
    Ok(inversions(&full))
}

/// Integer partition with positive, weakly decreasing parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Accepts weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `self + (n-1, n-2, ..., 1)`: the strict shape carrying the fillings.
    /// At most `n - 1` parts are allowed.
    pub fn plus_rho(&self, n: usize) -> Result<Self> {
        let max = n.saturating_sub(1);
        if self.0.len() > max {
            return Err(Error::TooManyParts {
                parts: self.0.len(),
                max,
            });
        }
        Self::new((1..n).map(|i| self.part(i) + n - i).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(perm(&[3, 1, 2]).length(), 2);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn transpositions_act_on_positions() {
        let w = perm(&[2, 3, 1]);
        let t = Transposition::new(1, 3).unwrap();
        assert_eq!(w.apply(t), perm(&[1, 3, 2]));
        assert!(!w.bruhat_increases(t));
        assert!(Transposition::new(2, 2).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(Permutation::new(vec![1, 1, 2]), Err(Error::NotAPermutation));
        assert_eq!(Permutation::new(vec![0, 1]), Err(Error::NotAPermutation));
    }

    #[test]
    fn column_statistics() {
        assert_eq!(column_inversions(&[4, 1, 3]).unwrap(), 2);
        assert_eq!(
            column_inversions(&[2, 2]),
            Err(Error::RepeatedEntry { value: 2 })
        );
        // 3 1 | 2 4
        assert_eq!(column_extended_length(&[3, 1], 4).unwrap(), 2);
        assert_eq!(column_extended_length(&[4], 4).unwrap(), 3);
        assert!(column_extended_length(&[5], 4).is_err());
    }

    #[test]
    fn partitions() {
        let l = Partition::new(vec![3, 1, 0]).unwrap();
        assert_eq!(l.parts(), &[3, 1]);
        assert_eq!(l.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(l.plus_rho(3).unwrap().parts(), &[5, 2]);
        assert_eq!(
            Partition::default().plus_rho(4).unwrap().parts(),
            &[3, 2, 1]
        );
        assert_eq!(
            Partition::new(vec![2, 1])
                .unwrap()
                .plus_rho(3)
                .unwrap()
                .parts(),
            &[4, 2]
        );
        assert!(Partition::default().plus_rho(1).unwrap().parts().is_empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(l.plus_rho(1).is_err());
    }
}
