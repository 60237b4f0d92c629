//! The chain of position transpositions attached to a strict shape, its
//! admissible pairs, and the alcove-walk (Ram-Yip type) expansion.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use crate::algebra::{Binomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::weyl::{Partition, Permutation, Transposition};

/// Rows `i = 1..=k`, each `(i,k+1), (i,k+2), ..., (i,n)`.
pub fn gamma_block(k: usize, n: usize) -> Result<Vec<Transposition>> {
    block_rows(k, n, 1)
}

/// [`gamma_block`] with the leading `(i,k+1)` of every row removed.
pub fn gamma_block_primed(k: usize, n: usize) -> Result<Vec<Transposition>> {
    block_rows(k, n, 2)
}

/// [`gamma_block`] with its first `p` entries removed.
pub fn gamma_block_truncated(k: usize, p: usize, n: usize) -> Result<Vec<Transposition>> {
    let block = gamma_block(k, n)?;
    if p > block.len() {
        return Err(Error::IndexOutOfRange {
            index: p,
            bound: block.len(),
        });
    }
    Ok(block[p..].to_vec())
}

fn block_rows(k: usize, n: usize, offset: usize) -> Result<Vec<Transposition>> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange { index: k, bound: n });
    }
    let mut out = Vec::with_capacity(k * (n - k));
    for i in 1..=k {
        for j in k + offset..=n {
            out.push(Transposition::new(i, j)?);
        }
    }
    Ok(out)
}

/// Block-structured chain of position transpositions, one block per column
/// of a strict shape `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootChain {
    n: usize,
    shape: Partition,
    column_lengths: Vec<usize>,
    entries: Vec<Transposition>,
    block_bounds: Vec<Range<usize>>,
}

impl RootChain {
    /// Chain for the shape `lambda + rho`.
    pub fn new(lambda: &Partition, n: usize) -> Result<Self> {
        Self::for_shape(lambda.plus_rho(n)?, n)
    }

    /// Chain for an arbitrary strict shape with fewer than `n` rows. Column
    /// `j` contributes the primed block when it is the first column of its
    /// length and the full block otherwise.
    pub fn for_shape(shape: Partition, n: usize) -> Result<Self> {
        if !shape.is_strict() {
            return Err(Error::NotStrict);
        }
        if n > 0 && shape.num_parts() >= n {
            return Err(Error::TooManyParts {
                parts: shape.num_parts(),
                max: n - 1,
            });
        }
        let column_lengths = shape.conjugate().parts().to_vec();
        let mut entries = Vec::new();
        let mut block_bounds = Vec::with_capacity(column_lengths.len());
        for (j, &k) in column_lengths.iter().enumerate() {
            let first = column_lengths.iter().position(|&c| c == k) == Some(j);
            let start = entries.len();
            if first {
                entries.extend(gamma_block_primed(k, n)?);
            } else {
                entries.extend(gamma_block(k, n)?);
            }
            block_bounds.push(start..entries.len());
        }
        Ok(Self {
            n,
            shape,
            column_lengths,
            entries,
            block_bounds,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Column lengths of the shape (its conjugate partition).
    pub fn column_lengths(&self) -> &[usize] {
        &self.column_lengths
    }

    pub fn entries(&self) -> &[Transposition] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn block_bounds(&self) -> &[Range<usize>] {
        &self.block_bounds
    }

    /// Column prefixes read off the partial products: column `j` is the
    /// first `mu'_j` entries of `u` times the chosen reflections of blocks
    /// `1..=j`. `k` lists chain indices in increasing order.
    pub fn columns(&self, u: &Permutation, k: &[usize]) -> Vec<Vec<usize>> {
        let mut w = u.clone();
        let mut next = k.iter().peekable();
        let mut cols = Vec::with_capacity(self.column_lengths.len());
        for (block, &len) in self.block_bounds.iter().zip(&self.column_lengths) {
            while let Some(&&idx) = next.peek() {
                if idx >= block.end {
                    break;
                }
                w.apply_in_place(self.entries[idx]);
                next.next();
            }
            cols.push(w.as_slice()[..len].to_vec());
        }
        cols
    }

    /// `u` multiplied on the right by the reflections indexed by `k`.
    pub fn end_of(&self, u: &Permutation, k: &[usize]) -> Permutation {
        let mut w = u.clone();
        for &idx in k {
            w.apply_in_place(self.entries[idx]);
        }
        w
    }

    /// Whether every step of `u, u r_{k1}, u r_{k1} r_{k2}, ...` increases
    /// length and `k` is strictly increasing.
    pub fn is_admissible(&self, u: &Permutation, k: &[usize]) -> bool {
        if u.n() != self.n || k.windows(2).any(|p| p[0] >= p[1]) {
            return false;
        }
        let mut w = u.clone();
        for &idx in k {
            let Some(&r) = self.entries.get(idx) else {
                return false;
            };
            if !w.bruhat_increases(r) {
                return false;
            }
            w.apply_in_place(r);
        }
        true
    }
}

/// A start permutation together with increasing chain indices forming a
/// length-increasing chain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissiblePair {
    pub u: Permutation,
    pub k: Vec<usize>,
}

/// Calls `visit(u, K, uK)` for every admissible pair starting at `u`.
pub fn for_each_admissible_from(
    chain: &RootChain,
    u: &Permutation,
    mut visit: impl FnMut(&Permutation, &[usize], &Permutation),
) {
    fn rec(
        chain: &RootChain,
        start: usize,
        u: &Permutation,
        w: &mut Permutation,
        k: &mut Vec<usize>,
        visit: &mut dyn FnMut(&Permutation, &[usize], &Permutation),
    ) {
        visit(u, k, w);
        for idx in start..chain.entries.len() {
            let r = chain.entries[idx];
            if w.bruhat_increases(r) {
                w.apply_in_place(r);
                k.push(idx);
                rec(chain, idx + 1, u, w, k, visit);
                k.pop();
                w.apply_in_place(r);
            }
        }
    }
    let mut w = u.clone();
    rec(chain, 0, u, &mut w, &mut Vec::new(), &mut visit);
}

/// Calls `visit(u, K, uK)` for every admissible pair of the chain.
pub fn for_each_admissible(
    chain: &RootChain,
    mut visit: impl FnMut(&Permutation, &[usize], &Permutation),
) {
    for u in Permutation::all(chain.n) {
        for_each_admissible_from(chain, &u, &mut visit);
    }
}

pub fn enumerate_admissible(chain: &RootChain) -> Vec<AdmissiblePair> {
    let mut out = Vec::new();
    for_each_admissible(chain, |u, k, _| {
        out.push(AdmissiblePair {
            u: u.clone(),
            k: k.to_vec(),
        })
    });
    out
}

/// `N(w, T)`: after each step `w_i = w_{i-1} (a_i b_i)`, count the entries of
/// `w_i` in positions `a_i..=b_i` strictly between the two swapped values.
pub fn count_n(w: &Permutation, t: &[Transposition]) -> usize {
    let mut cur = w.clone();
    let mut total = 0;
    for &r in t {
        cur.apply_in_place(r);
        let (x, y) = (cur.at(r.i()), cur.at(r.j()));
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        total += cur.as_slice()[r.i() - 1..r.j()]
            .iter()
            .filter(|&&v| lo < v && v < hi)
            .count();
    }
    total
}

/// `(-1)^{l(w)} t^{(l(u) + l(w) - steps)/2} (t-1)^{steps}` as a rank-0
/// polynomial, where `w` is the chain end.
pub fn ramyip_coefficient(u: &Permutation, steps: usize, end: &Permutation) -> Result<LaurentPoly> {
    let (lu, lw) = (u.length(), end.length());
    let twice = lu + lw;
    if twice < steps || !(twice - steps).is_multiple_of(2) {
        return Err(Error::Precondition(alloc::format!(
            "chain from {u} to {end} with {steps} steps has a non-integral t-exponent"
        )));
    }
    let sign = LaurentPoly::signed_t_power(lw % 2 == 1, ((twice - steps) / 2) as i32);
    Ok(&sign * &LaurentPoly::binomial_power(Binomial::TMinusOne, steps as u32, 0))
}

/// Content vector of a list of columns over the values `1..=n`.
pub(crate) fn content_of(cols: &[Vec<usize>], n: usize) -> Vec<i32> {
    let mut ct = alloc::vec![0i32; n];
    for col in cols {
        for &v in col {
            ct[v - 1] += 1;
        }
    }
    ct
}

/// Sum over admissible pairs of the alcove-walk coefficient times
/// `x^{content(fill(u, K))}`, restricted to start permutation `u`.
pub fn ramyip_partial(chain: &RootChain, u: &Permutation) -> Result<LaurentPoly> {
    let mut grouped: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
    let mut failure = None;
    for_each_admissible_from(chain, u, |u, k, w| {
        if failure.is_some() {
            return;
        }
        match ramyip_coefficient(u, k.len(), w) {
            Ok(c) => {
                let ct = content_of(&chain.columns(u, k), chain.n);
                let slot = grouped.entry(ct).or_insert_with(|| LaurentPoly::zero(0));
                *slot = &*slot + &c;
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let mut total = LaurentPoly::zero(chain.n);
    for (ct, c) in grouped {
        total.try_add_assign(&c.times_x_monomial(&ct)?)?;
    }
    Ok(total)
}

/// The alcove-walk expansion for `lambda` in rank `n`.
pub fn ramyip_sum(lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    let chain = RootChain::new(lambda, n)?;
    let mut total = LaurentPoly::zero(n);
    for u in Permutation::all(n) {
        total.try_add_assign(&ramyip_partial(&chain, &u)?)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn tr(i: usize, j: usize) -> Transposition {
        Transposition::new(i, j).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn blocks() {
        assert_eq!(gamma_block(1, 3).unwrap(), vec![tr(1, 2), tr(1, 3)]);
        assert_eq!(gamma_block(2, 3).unwrap(), vec![tr(1, 3), tr(2, 3)]);
        assert_eq!(
            gamma_block(2, 4).unwrap(),
            vec![tr(1, 3), tr(1, 4), tr(2, 3), tr(2, 4)]
        );
        assert!(gamma_block_primed(3, 4).unwrap().is_empty());
        assert_eq!(gamma_block_primed(1, 3).unwrap(), vec![tr(1, 3)]);
        assert_eq!(gamma_block_primed(2, 4).unwrap(), vec![tr(1, 4), tr(2, 4)]);
        assert_eq!(gamma_block_truncated(1, 1, 3).unwrap(), vec![tr(1, 3)]);
        assert_eq!(
            gamma_block_truncated(2, 0, 4).unwrap(),
            gamma_block(2, 4).unwrap()
        );
        assert!(gamma_block_truncated(2, 4, 4).unwrap().is_empty());
        assert!(gamma_block_truncated(2, 5, 4).is_err());
        assert!(gamma_block(0, 3).is_err());
        assert!(gamma_block(3, 3).is_err());
    }

    #[test]
    fn chain_layout() {
        let c = RootChain::new(&part(&[]), 3).unwrap();
        assert_eq!(c.column_lengths(), &[2, 1]);
        assert_eq!(c.block_bounds(), &[0..0, 0..1]);
        assert_eq!(c.entries(), &[tr(1, 3)]);

        let c = RootChain::new(&part(&[1]), 2).unwrap();
        assert_eq!(c.column_lengths(), &[1, 1]);
        assert_eq!(c.entries(), &[tr(1, 2)]);
        assert_eq!(c.block_bounds(), &[0..0, 0..1]);

        for lam in [&[][..], &[1], &[2, 1], &[3, 3]] {
            let c = RootChain::new(&part(lam), 4).unwrap();
            assert!(c.block_bounds()[0].is_empty());
        }
        assert_eq!(
            RootChain::for_shape(part(&[2, 2]), 3),
            Err(Error::NotStrict)
        );
    }

    #[test]
    fn admissible_enumeration() {
        let empty = RootChain::new(&part(&[]), 3).unwrap();
        let empty = RootChain {
            entries: vec![],
            block_bounds: vec![0..0, 0..0],
            ..empty
        };
        assert_eq!(enumerate_admissible(&empty).len(), 6);

        let c = RootChain::new(&part(&[1]), 2).unwrap();
        let pairs = enumerate_admissible(&c);
        let id = Permutation::identity(2);
        let sw = Permutation::longest(2);
        assert_eq!(
            pairs,
            vec![
                AdmissiblePair {
                    u: id.clone(),
                    k: vec![]
                },
                AdmissiblePair { u: id, k: vec![0] },
                AdmissiblePair { u: sw, k: vec![] },
            ]
        );
    }

    #[test]
    fn n_statistic() {
        let id = Permutation::identity(3);
        assert_eq!(count_n(&id, &[]), 0);
        assert_eq!(count_n(&id, &[tr(1, 3)]), 1);
    }

    #[test]
    fn small_sums() {
        // rank 1: the empty shape contributes 1
        assert_eq!(ramyip_sum(&part(&[]), 1).unwrap(), LaurentPoly::one(1));
        // rank 2, empty weight: x1 - t x2
        let p = ramyip_sum(&part(&[]), 2).unwrap();
        assert_eq!(alloc::format!("{p}"), "x1 - t*x2");
    }
}
