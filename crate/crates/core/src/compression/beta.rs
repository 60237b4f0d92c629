//! β-sequences of value transpositions and their legality.

use alloc::vec::Vec;
use core::fmt;

use super::root::pivots;
use crate::error::{Error, Result};
use crate::fillings::{compatible_columns, distinct};

/// Exchange of the values `low < high` wherever they sit in a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueTransposition {
    pub low: usize,
    pub high: usize,
}

impl fmt::Display for ValueTransposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}<{})", self.low, self.high)
    }
}

/// Swaps the positions of `tau.low` and `tau.high` in `col`.
pub fn swap_values(col: &[usize], tau: ValueTransposition) -> Result<Vec<usize>> {
    for v in [tau.low, tau.high] {
        if !col.contains(&v) {
            return Err(Error::ValueAbsent { value: v });
        }
    }
    Ok(col
        .iter()
        .map(|&v| match v {
            v if v == tau.low => tau.high,
            v if v == tau.high => tau.low,
            v => v,
        })
        .collect())
}

/// Whether swapping the two values in `left` keeps `left | right` HHL.
pub fn is_legal(tau: ValueTransposition, left: &[usize], right: &[usize]) -> Result<bool> {
    let swapped = swap_values(left, tau)?;
    Ok(distinct(&swapped) && compatible_columns(&swapped, right))
}

/// Row `i` pairs the `i`-th largest left value `a` having some pivot entry
/// below it with every such pivot entry, in decreasing order; rows without
/// transpositions are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BetaSequence {
    rows: Vec<Vec<ValueTransposition>>,
}

impl BetaSequence {
    pub fn rows(&self) -> &[Vec<ValueTransposition>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Transpositions in row-major order, tagged with their row.
    pub fn flatten(&self) -> Vec<(usize, ValueTransposition)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&t| (r, t)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Transpositions strictly after `tau` in row-major order.
    pub fn suffix_after(&self, tau: ValueTransposition) -> Vec<(usize, ValueTransposition)> {
        let flat = self.flatten();
        match flat.iter().position(|&(_, t)| t == tau) {
            Some(k) => flat[k + 1..].to_vec(),
            None => Vec::new(),
        }
    }
}

impl fmt::Display for BetaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str(" | ")?;
            }
            for (k, t) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

/// β-sequence of the configuration `left | right`, built from its pivots.
pub fn build_beta(left: &[usize], right: &[usize]) -> BetaSequence {
    let entries = pivots(left, right).entries();
    let mut values = left.to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let rows = values
        .into_iter()
        .map(|a| {
            entries
                .iter()
                .filter(|&&b| b < a)
                .map(|&b| ValueTransposition { low: b, high: a })
                .collect::<Vec<_>>()
        })
        .filter(|row| !row.is_empty())
        .collect();
    BetaSequence { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn sequences() {
        assert_eq!(
            build_beta(&[1, 3, 4, 2, 6], &[5, 3, 4, 2, 8]).to_string(),
            "(1<6) | (1<4) | (1<3) | (1<2)"
        );
        assert_eq!(
            build_beta(&[1, 2, 3], &[4, 5, 6]).to_string(),
            "(2<3) (1<3) | (1<2)"
        );
        assert!(build_beta(&[2, 1], &[2, 1]).is_empty());
        let b = build_beta(&[1, 2, 3], &[4, 5, 6]);
        let tail = b.suffix_after(ValueTransposition { low: 2, high: 3 });
        assert_eq!(tail.len(), 2);
        assert_eq!(tail[0], (0, ValueTransposition { low: 1, high: 3 }));
    }

    #[test]
    fn legality() {
        let root = [1, 3, 4, 2, 6];
        let right = [5, 3, 4, 2, 8];
        assert!(!is_legal(ValueTransposition { low: 1, high: 6 }, &root, &right).unwrap());
        assert!(is_legal(ValueTransposition { low: 1, high: 4 }, &root, &right).unwrap());
        assert!(!is_legal(ValueTransposition { low: 2, high: 3 }, &[2, 3], &[2, 3]).unwrap());
        assert_eq!(
            is_legal(ValueTransposition { low: 1, high: 9 }, &root, &right),
            Err(Error::ValueAbsent { value: 9 })
        );
    }
}
