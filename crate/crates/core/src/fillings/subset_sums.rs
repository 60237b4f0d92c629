//! Entry-level, two-column and full-filling generating sums over subsets of
//! a chain, with their closed forms.

use alloc::vec::Vec;

use super::{des, des_pair, distinct, fill_preimage, inv, inv_pair, is_hhl_columns, Filling};
use crate::alcove::{count_n, gamma_block, gamma_block_truncated, RootChain};
use crate::algebra::{Binomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::weyl::{column_inversions, Permutation, Transposition};

/// Inputs of one generating-sum identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetSumInstance {
    /// Subsets of the first block truncated by `p` that move `b` into the
    /// first position of `w`. Requires `w(1) <= b`, and
    /// `p < w^{-1}(b) - 1` when `w(1) != b`.
    Entry { w: Permutation, b: usize, p: usize },
    /// Subsets of block `k` taking the first `k` entries of `w` to `target`.
    /// Requires `w[1..k] <= target` entrywise with the two columns HHL.
    TwoColumn {
        w: Permutation,
        k: usize,
        target: Vec<usize>,
    },
    /// Subsets of the whole chain of the shape of `sigma` filling `sigma`,
    /// starting from its first column completed by the missing value.
    Full { sigma: Filling, n: usize },
}

impl SubsetSumInstance {
    /// Every entry-level and two-column instance of rank `n` meeting its
    /// preconditions.
    pub fn small(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for w in Permutation::all(n) {
            for b in w.at(1)..=n {
                let pos = w.position_of(b).expect("value of a permutation");
                let top = if b == w.at(1) { n } else { pos - 1 };
                for p in 0..top {
                    out.push(Self::Entry { w: w.clone(), b, p });
                }
            }
            for k in 1..n {
                for target in Permutation::all(n) {
                    let inst = Self::TwoColumn {
                        w: w.clone(),
                        k,
                        target: target.as_slice()[..k].to_vec(),
                    };
                    if subset_sum_closed_form(&inst).is_ok() {
                        out.push(inst);
                    }
                }
            }
        }
        out
    }
}

fn term(t_exp: i64, one_minus_t: usize) -> LaurentPoly {
    let lead = LaurentPoly::signed_t_power(false, t_exp as i32);
    &lead * &LaurentPoly::binomial_power(Binomial::OneMinusT, one_minus_t as u32, 0)
}

/// Visits `(T, wT)` for every length-increasing subsequence `T` of `chain`.
fn for_each_subset(
    w: &Permutation,
    chain: &[Transposition],
    mut visit: impl FnMut(&[Transposition], &Permutation),
) {
    fn rec(
        chain: &[Transposition],
        start: usize,
        w: &mut Permutation,
        t: &mut Vec<Transposition>,
        visit: &mut dyn FnMut(&[Transposition], &Permutation),
    ) {
        visit(t, w);
        for (idx, &r) in chain.iter().enumerate().skip(start) {
            if w.bruhat_increases(r) {
                w.apply_in_place(r);
                t.push(r);
                rec(chain, idx + 1, w, t, visit);
                t.pop();
                w.apply_in_place(r);
            }
        }
    }
    let mut cur = w.clone();
    rec(chain, 0, &mut cur, &mut Vec::new(), &mut visit);
}

fn check_entry(w: &Permutation, b: usize, p: usize) -> Result<usize> {
    let n = w.n();
    let a = w.at(1);
    let pos = w.position_of(b).ok_or(Error::ValueAbsent { value: b })?;
    if b < a {
        return Err(Error::Precondition(alloc::format!(
            "need w(1) = {a} <= b = {b}"
        )));
    }
    if b != a && p + 1 >= pos {
        return Err(Error::Precondition(alloc::format!(
            "need p = {p} < w^-1(b) - 1 = {}",
            pos - 1
        )));
    }
    if p + 1 > n {
        return Err(Error::IndexOutOfRange {
            index: p,
            bound: n - 1,
        });
    }
    Ok(a)
}

fn check_two_column(w: &Permutation, k: usize, target: &[usize]) -> Result<()> {
    let left = &w.as_slice()[..k.min(w.n())];
    if k == 0 || k >= w.n() || target.len() != k {
        return Err(Error::Precondition(
            "target must have k entries with 1 <= k < n".into(),
        ));
    }
    let cols = [left.to_vec(), target.to_vec()];
    if left.iter().zip(target).any(|(a, b)| a > b) || !is_hhl_columns(&cols, w.n()) {
        return Err(Error::Precondition(
            "columns must be entrywise ordered and HHL".into(),
        ));
    }
    Ok(())
}

fn check_full(sigma: &Filling, n: usize) -> Result<Permutation> {
    if sigma.columns().is_empty() || !is_hhl_columns(sigma.columns(), n) {
        return Err(Error::NotHhl);
    }
    let mut one_line = sigma.column(1).to_vec();
    one_line.push(sigma.missing_from_first_column(n)?);
    Permutation::new(one_line)
}

/// Left-hand side: the generating sum `Σ_T t^{N(w,T)} (1-t)^{|T|}` over the
/// subsets selected by the instance.
pub fn subset_sum(instance: &SubsetSumInstance) -> Result<LaurentPoly> {
    let mut total = LaurentPoly::zero(0);
    match instance {
        SubsetSumInstance::Entry { w, b, p } => {
            check_entry(w, *b, *p)?;
            let chain = gamma_block_truncated(1, *p, w.n())?;
            for_each_subset(w, &chain, |t, end| {
                if end.at(1) == *b {
                    total = &total + &term(count_n(w, t) as i64, t.len());
                }
            });
        }
        SubsetSumInstance::TwoColumn { w, k, target } => {
            check_two_column(w, *k, target)?;
            let chain = gamma_block(*k, w.n())?;
            for_each_subset(w, &chain, |t, end| {
                if end.as_slice()[..*k] == target[..] {
                    total = &total + &term(count_n(w, t) as i64, t.len());
                }
            });
        }
        SubsetSumInstance::Full { sigma, n } => {
            check_full(sigma, *n)?;
            let chain = RootChain::for_shape(sigma.shape(), *n)?;
            for (u, k) in fill_preimage(sigma, &chain)? {
                let t: Vec<Transposition> = k.iter().map(|&i| chain.entries()[i]).collect();
                total = &total + &term(count_n(&u, &t) as i64, t.len());
            }
        }
    }
    Ok(total)
}

/// Right-hand side of the identity for the instance.
pub fn subset_sum_closed_form(instance: &SubsetSumInstance) -> Result<LaurentPoly> {
    match instance {
        SubsetSumInstance::Entry { w, b, p } => {
            let a = check_entry(w, *b, *p)?;
            let between = w.as_slice()[1..=*p]
                .iter()
                .filter(|&&x| a < x && x < *b)
                .count();
            Ok(term(between as i64, usize::from(a != *b)))
        }
        SubsetSumInstance::TwoColumn { w, k, target } => {
            check_two_column(w, *k, target)?;
            let left = &w.as_slice()[..*k];
            debug_assert!(distinct(target));
            let exp = column_inversions(target)? as i64 - column_inversions(left)? as i64
                + inv_pair(left, target) as i64;
            Ok(term(exp, des_pair(left, target)))
        }
        SubsetSumInstance::Full { sigma, n } => {
            check_full(sigma, *n)?;
            let exp = inv(sigma) as i64 - column_inversions(sigma.column(1))? as i64;
            Ok(term(exp, des(sigma)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillings::enumerate_fillings;
    use crate::weyl::Partition;
    use alloc::vec;

    #[test]
    fn kronecker_case() {
        let w = Permutation::new(vec![2, 3, 1]).unwrap();
        for p in 0..3 {
            let inst = SubsetSumInstance::Entry {
                w: w.clone(),
                b: 2,
                p,
            };
            assert_eq!(subset_sum(&inst).unwrap(), LaurentPoly::one(0));
            assert_eq!(subset_sum_closed_form(&inst).unwrap(), LaurentPoly::one(0));
        }
    }

    #[test]
    fn base_case_is_single_term() {
        // w = 1 3 2 4, b = 4 at position 4, p = 2: only (1,4) is left
        let w = Permutation::new(vec![1, 3, 2, 4]).unwrap();
        let inst = SubsetSumInstance::Entry { w, b: 4, p: 2 };
        let expected = term(2, 1);
        assert_eq!(subset_sum(&inst).unwrap(), expected);
        assert_eq!(subset_sum_closed_form(&inst).unwrap(), expected);
    }

    #[test]
    fn preconditions() {
        let w = Permutation::new(vec![3, 1, 2]).unwrap();
        assert!(subset_sum(&SubsetSumInstance::Entry {
            w: w.clone(),
            b: 1,
            p: 0
        })
        .is_err());
        let w = Permutation::new(vec![1, 2, 3]).unwrap();
        assert!(subset_sum(&SubsetSumInstance::Entry {
            w: w.clone(),
            b: 2,
            p: 1
        })
        .is_err());
        let bad = SubsetSumInstance::TwoColumn {
            w,
            k: 2,
            target: vec![2, 1],
        };
        assert!(subset_sum_closed_form(&bad).is_err());
    }

    #[test]
    fn all_levels_small_ranks() {
        for n in 2..=4 {
            let instances = SubsetSumInstance::small(n);
            assert!(!instances.is_empty());
            for inst in instances {
                assert_eq!(
                    subset_sum(&inst).unwrap(),
                    subset_sum_closed_form(&inst).unwrap()
                );
            }
        }
        for (lam, n) in [(&[][..], 3), (&[2, 1], 3), (&[1], 4)] {
            for sigma in enumerate_fillings(&Partition::new(lam.to_vec()).unwrap(), n).unwrap() {
                let inst = SubsetSumInstance::Full { sigma, n };
                assert_eq!(
                    subset_sum(&inst).unwrap(),
                    subset_sum_closed_form(&inst).unwrap()
                );
            }
        }
    }
}
