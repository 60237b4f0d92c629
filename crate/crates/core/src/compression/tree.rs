//! The generation tree: every left column with a given value set that fits
//! beside a fixed right column, reached from the root column by applying or
//! skipping β-transpositions in order.

use alloc::vec::Vec;

use super::beta::{build_beta, is_legal, swap_values, BetaSequence, ValueTransposition};
use crate::algebra::{Binomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::fillings::{compatible_columns, des_columns, distinct, inv_columns};
use crate::weyl::column_extended_length;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub child: usize,
    pub transposition: ValueTransposition,
    pub applied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    /// Left column at this node.
    pub left: Vec<usize>,
    /// Sum of the leaf terms below this node.
    pub coefficient: LaurentPoly,
    /// Number of β-transpositions already decided.
    pub depth: usize,
    /// Transpositions applied on the path from the root.
    pub applied: Vec<ValueTransposition>,
    /// β rows from which a transposition was applied.
    pub used_rows: Vec<usize>,
    pub parent: Option<usize>,
    pub children: Vec<TreeEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationTree {
    n: usize,
    right: Vec<usize>,
    context: Vec<Vec<usize>>,
    beta: BetaSequence,
    nodes: Vec<TreeNode>,
}

impl GenerationTree {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The fixed right column.
    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// Columns to the right of the fixed column.
    pub fn context(&self) -> &[Vec<usize>] {
        &self.context
    }

    pub fn beta(&self) -> &BetaSequence {
        &self.beta
    }

    /// Nodes in breadth-first order; the root is node 0.
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }

    pub fn num_edges(&self) -> usize {
        self.nodes.len() - 1
    }

    /// The full filling `left | right | context` for a node.
    pub fn columns_at(&self, node: &TreeNode) -> Vec<Vec<usize>> {
        let mut cols = Vec::with_capacity(self.context.len() + 2);
        cols.push(node.left.clone());
        cols.push(self.right.clone());
        cols.extend(self.context.iter().cloned());
        cols
    }
}

/// `(-1)^{l_ext(C)} t^{inv} (1-t)^{des}` for the filling `columns`, whose
/// first column is `C`.
pub fn signed_term(columns: &[Vec<usize>], n: usize) -> Result<LaurentPoly> {
    let sign = column_extended_length(&columns[0], n)? % 2 == 1;
    let lead = LaurentPoly::signed_t_power(sign, inv_columns(columns) as i32);
    Ok(&lead * &LaurentPoly::binomial_power(Binomial::OneMinusT, des_columns(columns) as u32, 0))
}

/// Builds the tree rooted at `root_left | right | context`. For each
/// β-transposition in order, every current leaf gets a skip child, plus an
/// apply child when the transposition is legal there and its β row has not
/// been used on the path.
pub fn generation_tree(
    root_left: &[usize],
    right: &[usize],
    context: &[Vec<usize>],
    n: usize,
) -> Result<GenerationTree> {
    if !distinct(root_left) || !compatible_columns(root_left, right) {
        return Err(Error::NotHhl);
    }
    let beta = build_beta(root_left, right);
    let mut tree = GenerationTree {
        n,
        right: right.to_vec(),
        context: context.to_vec(),
        beta,
        nodes: alloc::vec![TreeNode {
            left: root_left.to_vec(),
            coefficient: LaurentPoly::zero(0),
            depth: 0,
            applied: Vec::new(),
            used_rows: Vec::new(),
            parent: None,
            children: Vec::new(),
        }],
    };
    let mut frontier = alloc::vec![0usize];
    for (depth, (row, tau)) in tree.beta.flatten().into_iter().enumerate() {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for &id in &frontier {
            let node = &tree.nodes[id];
            let branch = !node.used_rows.contains(&row) && is_legal(tau, &node.left, right)?;
            let skip = TreeNode {
                depth: depth + 1,
                parent: Some(id),
                children: Vec::new(),
                ..node.clone()
            };
            let mut kids = alloc::vec![(skip, false)];
            if branch {
                let mut applied = node.applied.clone();
                applied.push(tau);
                let mut used_rows = node.used_rows.clone();
                used_rows.push(row);
                used_rows.sort_unstable();
                kids.push((
                    TreeNode {
                        left: swap_values(&node.left, tau)?,
                        coefficient: LaurentPoly::zero(0),
                        depth: depth + 1,
                        applied,
                        used_rows,
                        parent: Some(id),
                        children: Vec::new(),
                    },
                    true,
                ));
            }
            for (kid, applied) in kids {
                let child = tree.nodes.len();
                tree.nodes.push(kid);
                tree.nodes[id].children.push(TreeEdge {
                    child,
                    transposition: tau,
                    applied,
                });
                next.push(child);
            }
        }
        frontier = next;
    }
    for id in (0..tree.nodes.len()).rev() {
        let coefficient = if tree.nodes[id].children.is_empty() {
            signed_term(&tree.columns_at(&tree.nodes[id]), n)?
        } else {
            let mut sum = LaurentPoly::zero(0);
            for e in &tree.nodes[id].children {
                sum.try_add_assign(&tree.nodes[e.child].coefficient)?;
            }
            sum
        };
        tree.nodes[id].coefficient = coefficient;
    }
    Ok(tree)
}

/// Sum of leaf terms over every way of applying at most one transposition
/// per unused β row among those after the first `depth`, keeping only
/// results that fit beside the right column. Legality of intermediate
/// steps is not required.
pub fn node_sum(tree: &GenerationTree, node: &TreeNode) -> Result<LaurentPoly> {
    let remaining: Vec<(usize, ValueTransposition)> =
        tree.beta.flatten().into_iter().skip(node.depth).collect();
    let mut total = LaurentPoly::zero(0);
    let mut used = node.used_rows.clone();
    fn rec(
        tree: &GenerationTree,
        remaining: &[(usize, ValueTransposition)],
        left: Vec<usize>,
        used: &mut Vec<usize>,
        total: &mut LaurentPoly,
    ) -> Result<()> {
        let Some((&(row, tau), rest)) = remaining.split_first() else {
            if compatible_columns(&left, &tree.right) {
                let mut cols = Vec::with_capacity(tree.context.len() + 2);
                cols.push(left);
                cols.push(tree.right.clone());
                cols.extend(tree.context.iter().cloned());
                total.try_add_assign(&signed_term(&cols, tree.n)?)?;
            }
            return Ok(());
        };
        rec(tree, rest, left.clone(), used, total)?;
        if !used.contains(&row) {
            used.push(row);
            rec(tree, rest, swap_values(&left, tau)?, used, total)?;
            used.pop();
        }
        Ok(())
    }
    rec(tree, &remaining, node.left.clone(), &mut used, &mut total)?;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn omt(k: u32) -> LaurentPoly {
        LaurentPoly::binomial_power(Binomial::OneMinusT, k, 0)
    }

    fn mono(sign: i64, t: i32, k: u32) -> LaurentPoly {
        &LaurentPoly::term(sign, t, &[]) * &omt(k)
    }

    #[test]
    fn five_row_example() {
        let tree = generation_tree(&[1, 3, 4, 2, 6], &[5, 3, 4, 2, 8], &[], 8).unwrap();
        assert_eq!(tree.nodes().len(), 13);
        assert_eq!(tree.num_edges(), 12);
        assert_eq!(tree.root().coefficient, mono(-1, 3, 2));
        let first = &tree.nodes()[1];
        assert_eq!(first.coefficient, mono(-1, 3, 2));
        let applied = tree
            .nodes()
            .iter()
            .find(|n| n.depth == 2 && n.left == vec![4, 3, 1, 2, 6])
            .unwrap();
        assert_eq!(applied.coefficient, mono(1, 2, 3));
        let leaves: Vec<_> = tree
            .leaves()
            .map(|n| (n.left.clone(), n.coefficient.clone()))
            .collect();
        assert_eq!(
            leaves,
            vec![
                (vec![1, 3, 4, 2, 6], mono(-1, 0, 2)),
                (vec![2, 3, 4, 1, 6], mono(1, 0, 3)),
                (vec![3, 1, 4, 2, 6], mono(1, 0, 3)),
                (vec![3, 2, 4, 1, 6], mono(-1, 0, 4)),
                (vec![4, 3, 1, 2, 6], mono(1, 1, 3)),
                (vec![4, 3, 2, 1, 6], mono(-1, 1, 4)),
            ]
        );
        for node in tree.nodes() {
            assert_eq!(node_sum(&tree, node).unwrap(), node.coefficient);
        }
    }

    #[test]
    fn three_row_example_cancels() {
        let tree = generation_tree(&[1, 2, 3], &[4, 5, 6], &[], 6).unwrap();
        assert_eq!(tree.nodes().len(), 12);
        assert!(tree.root().coefficient.is_zero());
        let leaves: Vec<_> = tree.leaves().collect();
        assert_eq!(leaves.len(), 6);
        for leaf in leaves {
            let c = &leaf.coefficient;
            assert!(*c == mono(1, 3, 3) || *c == mono(-1, 3, 3));
        }
    }

    #[test]
    fn empty_beta() {
        let tree = generation_tree(&[3, 1], &[3, 1], &[], 3).unwrap();
        assert_eq!(tree.nodes().len(), 1);
        assert_eq!(
            tree.root().coefficient,
            signed_term(&[vec![3, 1], vec![3, 1]], 3).unwrap()
        );
        assert_eq!(
            generation_tree(&[2, 1], &[1, 2], &[], 3),
            Err(Error::NotHhl)
        );
    }
}
