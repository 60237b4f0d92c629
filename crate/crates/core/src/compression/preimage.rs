//! All fillings with a given column-sorted tableau.

use alloc::vec::Vec;

use super::root::root_column;
use super::tree::{generation_tree, GenerationTree};
use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::tokuyama::Ssyt;
use crate::weyl::Permutation;

/// Fillings whose sorted columns give `tableau`, in increasing order. Each
/// column is generated right to left from the root column against the
/// already chosen column to its right.
pub fn sort_preimage(tableau: &Ssyt, n: usize) -> Result<Vec<Filling>> {
    sort_preimage_with(tableau, n, &mut |_| Ok(()))
}

/// [`sort_preimage`], calling `visit` on every generation tree built.
pub fn sort_preimage_with(
    tableau: &Ssyt,
    n: usize,
    visit: &mut dyn FnMut(&GenerationTree) -> Result<()>,
) -> Result<Vec<Filling>> {
    if tableau.max_entry() > n {
        return Err(Error::EntryOutOfRange {
            value: tableau.max_entry(),
            n,
        });
    }
    let cols = tableau.columns();
    let mut out = Vec::new();
    let Some(last) = cols.last() else {
        return Ok(alloc::vec![Filling::from_columns(Vec::new())?]);
    };
    for order in Permutation::all(last.len()) {
        let start: Vec<usize> = order.as_slice().iter().map(|&i| last[i - 1]).collect();
        let mut suffix = alloc::vec![start];
        extend_left(&cols, cols.len() - 1, &mut suffix, n, visit, &mut out)?;
    }
    out.sort();
    Ok(out)
}

/// `suffix` holds the chosen columns `j..`, leftmost first.
fn extend_left(
    cols: &[Vec<usize>],
    j: usize,
    suffix: &mut Vec<Vec<usize>>,
    n: usize,
    visit: &mut dyn FnMut(&GenerationTree) -> Result<()>,
    out: &mut Vec<Filling>,
) -> Result<()> {
    if j == 0 {
        out.push(Filling::from_columns(suffix.clone())?);
        return Ok(());
    }
    let root = root_column(&cols[j - 1], &suffix[0])?;
    let tree = generation_tree(&root, &suffix[0], &suffix[1..], n)?;
    visit(&tree)?;
    for leaf in tree.leaves() {
        suffix.insert(0, leaf.left.clone());
        extend_left(cols, j - 1, suffix, n, visit, out)?;
        suffix.remove(0);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compression::sort_columns;
    use crate::fillings::enumerate_fillings;
    use crate::weyl::Partition;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    #[test]
    fn two_filling_fiber() {
        let s = Ssyt::new(vec![
            vec![1, 2, 2, 3, 3, 4],
            vec![2, 3, 3, 4],
            vec![3, 5, 5],
            vec![4],
        ])
        .unwrap();
        let pre = sort_preimage(&s, 5).unwrap();
        let shown: Vec<_> = pre.iter().map(|f| alloc::format!("{f}")).collect();
        assert_eq!(shown, vec!["333334,2224,155,4", "333334,2224,455,1"]);
    }

    #[test]
    fn preimages_partition_fillings() {
        for (lam, n) in [(&[][..], 3), (&[1], 3), (&[2, 1], 3), (&[1], 4)] {
            let mut fibers: BTreeMap<Ssyt, Vec<Filling>> = BTreeMap::new();
            for f in enumerate_fillings(&Partition::new(lam.to_vec()).unwrap(), n).unwrap() {
                fibers
                    .entry(sort_columns(&f, n).unwrap())
                    .or_default()
                    .push(f);
            }
            for (s, mut fiber) in fibers {
                fiber.sort();
                assert_eq!(sort_preimage(&s, n).unwrap(), fiber);
            }
        }
    }
}
