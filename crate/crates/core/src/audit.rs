//! Re-derivation of the identities behind weak and strong compression.
//!
//! Every check is tallied under a role name; a run over a sweep reports how
//! often each identity held and the first counterexample.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::alcove::RootChain;
use crate::algebra::{Binomial, LaurentPoly};
use crate::compression::beta::{is_legal, swap_values, ValueTransposition};
use crate::compression::preimage::sort_preimage_with;
use crate::compression::root::{is_disjoint, non_overlapping, pivots, root_column, root_filling};
use crate::compression::sort_columns;
use crate::compression::stats::{
    column_stats, count_between, m_stat, sort_fiber_sum, stats_equivalence_check,
    strong_compression_closed_form, SignConvention,
};
use crate::compression::tree::{node_sum, GenerationTree, TreeNode};
use crate::error::Result;
use crate::fillings::subset_sums::{subset_sum, subset_sum_closed_form, SubsetSumInstance};
use crate::fillings::{
    compatible_columns, des_columns, distinct, fill_preimage, inv_columns, is_hhl_columns,
    weak_compression_check, Filling,
};
use crate::tokuyama::{gt_stats, place_walls, ssyt_to_gt, Ssyt};
use crate::weyl::{column_extended_length, column_inversions, Permutation};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

/// Pass/fail counts keyed by check name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Audit {
    checks: BTreeMap<&'static str, CheckTally>,
}

impl Audit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let tally = self.checks.entry(name).or_default();
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            if tally.first_failure.is_none() {
                tally.first_failure = Some(detail());
            }
        }
    }

    pub fn merge(&mut self, other: Audit) {
        for (name, t) in other.checks {
            let mine = self.checks.entry(name).or_default();
            mine.passed += t.passed;
            mine.failed += t.failed;
            if mine.first_failure.is_none() {
                mine.first_failure = t.first_failure;
            }
        }
    }

    pub fn checks(&self) -> &BTreeMap<&'static str, CheckTally> {
        &self.checks
    }

    pub fn get(&self, name: &str) -> Option<&CheckTally> {
        self.checks.get(name)
    }

    /// True when nothing failed.
    pub fn is_clean(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &CheckTally)> {
        self.checks
            .iter()
            .filter(|(_, t)| t.failed > 0)
            .map(|(k, t)| (*k, t))
    }
}

fn row_of(col: &[usize], v: usize) -> usize {
    col.iter().position(|&x| x == v).expect("value present")
}

fn swapped_columns(
    tree: &GenerationTree,
    node: &TreeNode,
    tau: ValueTransposition,
) -> Result<Vec<Vec<usize>>> {
    let mut cols = tree.columns_at(node);
    cols[0] = swap_values(&node.left, tau)?;
    Ok(cols)
}

fn signed(sign: bool, t: usize, one_minus_t: usize) -> LaurentPoly {
    &LaurentPoly::signed_t_power(sign, t as i32)
        * &LaurentPoly::binomial_power(Binomial::OneMinusT, one_minus_t as u32, 0)
}

/// Every left column with the root's value set that fits beside `right`.
fn brute_force_lefts(root_left: &[usize], right: &[usize]) -> BTreeSet<Vec<usize>> {
    Permutation::all(root_left.len())
        .into_iter()
        .map(|p| {
            p.as_slice()
                .iter()
                .map(|&i| root_left[i - 1])
                .collect::<Vec<_>>()
        })
        .filter(|c| distinct(c) && compatible_columns(c, right))
        .collect()
}

/// Runs the per-tree checks on one generation tree.
pub fn audit_tree(tree: &GenerationTree, audit: &mut Audit) -> Result<()> {
    let n = tree.n();
    let right = tree.right();
    let root = tree.root();
    let root_left = &root.left;
    let piv = pivots(root_left, right);
    let is_pivot = |v: usize| piv.is_entry(v);
    let disjoint = non_overlapping(root_left, right);
    let flat = tree.beta().flatten();
    let label = || format!("{:?} | {:?} | {:?}", root_left, right, tree.context());

    let leaves: Vec<&Vec<usize>> = tree.leaves().map(|l| &l.left).collect();
    let leaf_set: BTreeSet<Vec<usize>> = leaves.iter().map(|l| (*l).clone()).collect();
    audit.record("leaves-distinct", leaf_set.len() == leaves.len(), label);
    audit.record(
        "leaves-complete",
        leaf_set == brute_force_lefts(root_left, right),
        label,
    );

    for node in tree.nodes() {
        let cols = tree.columns_at(node);
        let left = &node.left;
        let at = || format!("{} at {:?}", label(), left);

        let pivot_swap = piv.entries().iter().any(|&x| {
            piv.entries().iter().any(|&y| {
                x < y
                    && is_legal(ValueTransposition { low: x, high: y }, left, right)
                        .unwrap_or(false)
            })
        });
        if pivot_swap {
            audit.record("pivot-swap-implies-overlap", !disjoint, at);
        }

        if disjoint {
            for row in tree.beta().rows() {
                let legal: Vec<_> = row
                    .iter()
                    .filter(|&&t| left.contains(&t.low) && left.contains(&t.high))
                    .filter(|&&t| is_legal(t, left, right).unwrap_or(false))
                    .collect();
                audit.record("single-legal-per-row", legal.len() <= 1, at);
            }
        }

        let last_applied = node
            .applied
            .last()
            .and_then(|t| flat.iter().position(|(_, f)| f == t));
        let inv0 = inv_columns(&cols);
        let des0 = des_columns(&cols);
        for (k, &(_, tau)) in flat.iter().enumerate() {
            let weakly_after = last_applied.is_none_or(|l| k >= l);
            let strictly_after = last_applied.is_none_or(|l| k > l);
            if !weakly_after || !is_legal(tau, left, right)? {
                continue;
            }
            let swapped = swapped_columns(tree, node, tau)?;
            let (rp, rq) = (row_of(left, tau.low), row_of(left, tau.high));
            if strictly_after && !is_pivot(tau.high) {
                audit.record("descent-increment", des_columns(&swapped) == des0 + 1, at);
            }
            if rp < rq {
                let between = right.iter().take(rq).skip(rp + 1).copied();
                let expected = inv0 + count_between(tau.low, Some(tau.high), between);
                audit.record("inversion-increment", inv_columns(&swapped) == expected, at);

                let later_pivot_swap = flat[k + 1..].iter().any(|&(_, t)| {
                    is_pivot(t.low) && is_pivot(t.high) && is_legal(t, left, right).unwrap_or(false)
                });
                if !later_pivot_swap {
                    let q = Some(tau.high);
                    let lhs = inv_columns(&swapped) + m_stat(&swapped[0], right, q);
                    audit.record(
                        "inv-plus-m-invariance",
                        lhs == inv0 + m_stat(left, right, q),
                        at,
                    );
                }
            }
        }

        let sum = node_sum(tree, node)?;
        audit.record("node-sum-equals-coefficient", sum == node.coefficient, at);
        if disjoint {
            let q = node.depth.checked_sub(1).map(|d| flat[d].1.high);
            let sign = column_extended_length(left, n)? % 2 == 1;
            let expected = signed(sign, inv0 + m_stat(left, right, q), des0);
            audit.record("node-sum-closed-form", sum == expected, at);
        } else {
            let vanishes = flat[node.depth..].iter().any(|&(_, t)| {
                is_pivot(t.low) && is_pivot(t.high) && is_legal(t, left, right).unwrap_or(false)
            });
            if vanishes {
                audit.record("node-sum-vanishing", sum.is_zero(), at);
            }
        }
    }

    let stats = column_stats(root_left, right);
    let root_cols = tree.columns_at(root);
    let expected = if disjoint {
        let sign = column_extended_length(root_left, n)? % 2 == 1;
        signed(
            sign,
            inv_columns(&root_cols) + stats.check_n,
            des_columns(&root_cols),
        )
    } else {
        LaurentPoly::zero(0)
    };
    audit.record("tree-root-closed-form", root.coefficient == expected, label);

    let tail = &root_cols[1..];
    if disjoint {
        audit.record(
            "root-inversion-shift",
            inv_columns(&root_cols) == inv_columns(tail) + stats.hat_n,
            label,
        );
        for leaf in tree.leaves() {
            let mut moved: BTreeMap<usize, usize> = BTreeMap::new();
            for (a, b) in root_left.iter().zip(&leaf.left) {
                if a != b {
                    moved.insert(*a, *b);
                }
            }
            let mut ok = true;
            while let Some((&start, _)) = moved.iter().next() {
                let mut pivots_in_cycle = 0;
                let mut v = start;
                while let Some(next) = moved.remove(&v) {
                    pivots_in_cycle += usize::from(is_pivot(v));
                    v = next;
                }
                ok &= pivots_in_cycle == 1;
            }
            audit.record("one-pivot-per-cycle", ok, || {
                format!("{} leaf {:?}", label(), leaf.left)
            });
        }
    }
    audit.record(
        "root-descent-shift",
        des_columns(&root_cols) == des_columns(tail) + stats.p,
        label,
    );
    let length_ok =
        column_inversions(root_left)? + stats.check_n == column_inversions(right)? + stats.hat_n;
    audit.record("root-length-shift", length_ok, label);
    Ok(())
}

fn product_term(cols: &[Vec<usize>], n: usize, sign: SignConvention) -> Result<LaurentPoly> {
    let len = match sign {
        SignConvention::Inversions => column_inversions(&cols[0])?,
        SignConvention::Completed => column_extended_length(&cols[0], n)?,
    };
    Ok(signed(len % 2 == 1, inv_columns(cols), des_columns(cols)))
}

/// Partial compression: fixing columns `l+1..`, the signed sum over the
/// columns to their left against a closed form read off the partial root.
fn audit_partial(tableau: &Ssyt, n: usize, fiber: &[Filling], audit: &mut Audit) -> Result<()> {
    let sets = tableau.columns();
    let m = sets.len();
    for fixed in 1..m {
        let mut groups: BTreeMap<Vec<Vec<usize>>, Vec<&Filling>> = BTreeMap::new();
        for f in fiber {
            groups
                .entry(f.columns()[fixed..].to_vec())
                .or_default()
                .push(f);
        }
        for (suffix, fillings) in groups {
            let mut lhs = LaurentPoly::zero(0);
            for f in &fillings {
                lhs.try_add_assign(&product_term(f.columns(), n, SignConvention::Inversions)?)?;
            }
            let mut roots = alloc::vec![suffix[0].clone()];
            for j in (0..fixed).rev() {
                let next = root_column(&sets[j], &roots[0])?;
                roots.insert(0, next);
            }
            let disjoint = roots.windows(2).all(|w| non_overlapping(&w[0], &w[1]));
            let rhs = if disjoint {
                let (mut nn, mut p) = (0, 0);
                for w in roots.windows(2) {
                    let s = column_stats(&w[0], &w[1]);
                    nn += s.check_n + s.hat_n;
                    p += s.p;
                }
                &(&LaurentPoly::binomial_power(Binomial::MinusT, nn as u32, 0)
                    * &LaurentPoly::binomial_power(Binomial::OneMinusT, p as u32, 0))
                    * &product_term(&suffix, n, SignConvention::Inversions)?
            } else {
                LaurentPoly::zero(0)
            };
            audit.record("partial-compression", lhs == rhs, || {
                format!("{tableau} fixed {suffix:?}")
            });
        }
    }
    Ok(())
}

/// Runs the tableau-level checks and the tree checks on every generation
/// tree built while enumerating the sort fiber of `tableau`.
pub fn audit_ssyt(tableau: &Ssyt, n: usize, audit: &mut Audit) -> Result<()> {
    let mut local = Audit::new();
    let fiber = sort_preimage_with(tableau, n, &mut |tree| audit_tree(tree, &mut local))?;
    audit.merge(local);
    let label = || format!("tableau [{tableau}] (n = {n})");

    let closed = strong_compression_closed_form(tableau, n)?;
    audit.record(
        "strong-compression",
        sort_fiber_sum(tableau, n, SignConvention::Inversions)? == closed,
        label,
    );
    let root = root_filling(tableau)?;
    let a0 = root.missing_from_first_column(n)?;
    let shifted = if (n - a0) % 2 == 1 {
        -&closed
    } else {
        closed.clone()
    };
    audit.record(
        "strong-compression-completed-sign",
        sort_fiber_sum(tableau, n, SignConvention::Completed)? == shifted,
        label,
    );
    audit_partial(tableau, n, &fiber, audit)?;

    let strict = ssyt_to_gt(tableau, n)?.is_strict();
    audit.record("nonstrict-iff-overlap", strict == is_disjoint(&root), label);
    if strict {
        audit.record(
            "wall-statistics",
            stats_equivalence_check(tableau, n)?,
            label,
        );
    }
    audit.record("root-is-hhl", is_hhl_columns(root.columns(), n), label);
    audit.record(
        "root-sorts-back",
        sort_columns(&root, n).as_ref() == Ok(tableau),
        label,
    );
    audit.record("root-in-fiber", fiber.binary_search(&root).is_ok(), label);
    Ok(())
}

/// Weak compression on one filling of the chain's shape: the fill
/// preimage sum against its closed form, and the whole-chain subset sum.
pub fn audit_filling(sigma: &Filling, chain: &RootChain, audit: &mut Audit) -> Result<()> {
    let n = chain.n();
    let label = || format!("filling [{sigma}] (n = {n})");
    audit.record(
        "weak-compression",
        weak_compression_check(sigma, chain, n)?,
        label,
    );
    audit.record(
        "fill-preimage-nonempty",
        !fill_preimage(sigma, chain)?.is_empty(),
        label,
    );
    if sigma.num_columns() > 0 {
        let inst = SubsetSumInstance::Full {
            sigma: sigma.clone(),
            n,
        };
        audit.record(
            "full-subset-sum",
            subset_sum(&inst)? == subset_sum_closed_form(&inst)?,
            label,
        );
    }
    Ok(())
}

/// Entry-level and two-column subset sums on every small instance of rank `n`.
pub fn audit_subset_sums(n: usize, audit: &mut Audit) -> Result<()> {
    for inst in SubsetSumInstance::small(n) {
        let name = match inst {
            SubsetSumInstance::Entry { .. } => "entry-subset-sum",
            SubsetSumInstance::TwoColumn { .. } => "two-column-subset-sum",
            SubsetSumInstance::Full { .. } => "full-subset-sum",
        };
        let ok = subset_sum(&inst)? == subset_sum_closed_form(&inst)?;
        audit.record(name, ok, || format!("{inst:?}"));
    }
    Ok(())
}

/// Wall statistics against the pattern statistics on a strict tableau.
pub fn audit_walls(tableau: &Ssyt, n: usize, audit: &mut Audit) -> Result<()> {
    let pattern = ssyt_to_gt(tableau, n)?;
    let walls = place_walls(tableau, n)?;
    let label = || format!("tableau [{tableau}] (n = {n})");
    audit.record(
        "wall-n-detects-nonstrict",
        (walls.wall_stat_n() > 0) != pattern.is_strict(),
        label,
    );
    if pattern.is_strict() {
        let stats = gt_stats(&pattern);
        audit.record(
            "wall-z-equals-special",
            walls.wall_stat_z() == stats.special,
            label,
        );
        audit.record(
            "wall-l-equals-right-leaning",
            walls.wall_stat_l() == stats.right,
            label,
        );
    }
    Ok(())
}
