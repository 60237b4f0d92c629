//! Integer-coefficient Laurent polynomials in `t` and `x_1..x_n`.
//!
//! A [`LaurentPoly`] is a finite map from [`ExponentVector`] to a nonzero
//! [`BigInt`]. Terms are kept in a `BTreeMap`, so iteration (and therefore
//! every serialization) follows the lexicographic order on `(t, x)`.
//! Polynomials with rank 0 carry no x-variables and are used for the
//! t-coefficients attached to individual combinatorial objects.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent of `t` together with the exponents of `x_1..x_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    t_exp: i32,
    x_exps: Vec<i32>,
}

impl ExponentVector {
    pub fn new(t_exp: i32, x_exps: Vec<i32>) -> Self {
        Self { t_exp, x_exps }
    }

    pub fn t_exp(&self) -> i32 {
        self.t_exp
    }

    pub fn x_exps(&self) -> &[i32] {
        &self.x_exps
    }

    pub fn rank(&self) -> usize {
        self.x_exps.len()
    }

    fn combine(&self, other: &Self) -> Self {
        Self {
            t_exp: self.t_exp + other.t_exp,
            x_exps: self
                .x_exps
                .iter()
                .zip(&other.x_exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// The three binomial bases that appear as factors in the formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Binomial {
    /// `t - 1`
    TMinusOne,
    /// `1 - t`
    OneMinusT,
    /// `-t`
    MinusT,
}

/// Exact Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::term(1, 0, &vec![0; rank])
    }

    /// `coef * t^t_exp * x^x_exps`; the rank is `x_exps.len()`.
    pub fn term(coef: impl Into<BigInt>, t_exp: i32, x_exps: &[i32]) -> Self {
        let mut p = Self::zero(x_exps.len());
        p.add_term(ExponentVector::new(t_exp, x_exps.to_vec()), coef.into());
        p
    }

    /// Pure power of `t` with the given sign, rank 0.
    pub fn signed_t_power(negative: bool, t_exp: i32) -> Self {
        Self::term(if negative { -1 } else { 1 }, t_exp, &[])
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(
        rank: usize,
        terms: impl IntoIterator<Item = (ExponentVector, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(rank);
        for (exp, coef) in terms {
            if exp.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: exp.rank(),
                });
            }
            p.add_term(exp, coef);
        }
        Ok(p)
    }

    /// `base^k`, fully expanded, with rank `rank`.
    pub fn binomial_power(base: Binomial, k: u32, rank: usize) -> Self {
        let zeros = vec![0; rank];
        match base {
            Binomial::MinusT => {
                let sign = if k.is_multiple_of(2) { 1 } else { -1 };
                Self::term(sign, k as i32, &zeros)
            }
            Binomial::OneMinusT | Binomial::TMinusOne => {
                // (1 - t)^k = sum_j C(k, j) (-t)^j ; (t - 1)^k = (-1)^k (1 - t)^k
                let flip = base == Binomial::TMinusOne && k % 2 == 1;
                let mut p = Self::zero(rank);
                let mut binom = BigInt::one();
                for j in 0..=k {
                    let mut c = binom.clone();
                    if (j % 2 == 1) != flip {
                        c = -c;
                    }
                    p.add_term(ExponentVector::new(j as i32, zeros.clone()), c);
                    binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
                }
                p
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t_exp: i32, x_exps: &[i32]) -> BigInt {
        self.terms
            .get(&ExponentVector::new(t_exp, x_exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exp: ExponentVector, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.combine(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`.
    pub fn try_add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_rank(other)?;
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
        Ok(())
    }

    /// Multiplies by `x^x_exps`. A rank-0 polynomial is lifted to rank
    /// `x_exps.len()`; otherwise the ranks must agree.
    pub fn times_x_monomial(&self, x_exps: &[i32]) -> Result<Self> {
        if self.rank != 0 && self.rank != x_exps.len() {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: x_exps.len(),
            });
        }
        let mut out = Self::zero(x_exps.len());
        for (e, c) in &self.terms {
            let x = if self.rank == 0 {
                x_exps.to_vec()
            } else {
                e.x_exps.iter().zip(x_exps).map(|(a, b)| a + b).collect()
            };
            out.add_term(ExponentVector::new(e.t_exp, x), c.clone());
        }
        Ok(out)
    }

    /// Renames variables: `x_i` becomes `x_{map[i]}` (0-based indices).
    pub fn permute_variables(&self, map: &[usize]) -> Result<Self> {
        if map.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: map.len(),
            });
        }
        let mut seen = vec![false; map.len()];
        for &m in map {
            if m >= map.len() || core::mem::replace(&mut seen[m], true) {
                return Err(Error::NotAPermutation);
            }
        }
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            let mut x = vec![0; self.rank];
            for (i, &v) in e.x_exps.iter().enumerate() {
                x[map[i]] = v;
            }
            out.add_term(ExponentVector::new(e.t_exp, x), c.clone());
        }
        Ok(out)
    }

    /// Exact evaluation at `t = t0`, `x_i = x0[i]`.
    pub fn eval(&self, t0: &BigRational, x0: &[BigRational]) -> Result<BigRational> {
        if x0.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: x0.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            v *= rational_pow(t0, e.t_exp)?;
            for (base, &k) in x0.iter().zip(&e.x_exps) {
                v *= rational_pow(base, k)?;
            }
            acc += v;
        }
        Ok(acc)
    }
}

fn rational_pow(base: &BigRational, k: i32) -> Result<BigRational> {
    if k == 0 {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        return if k < 0 {
            Err(Error::ZeroToNegativePower)
        } else {
            Ok(BigRational::zero())
        };
    }
    Ok(base.pow(k))
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

// Operator forms panic on a rank mismatch; use the `try_*` methods where the
// ranks are not known to agree.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs)
            .expect("LaurentPoly addition with mismatched ranks")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs)
            .expect("LaurentPoly subtraction with mismatched ranks")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs)
            .expect("LaurentPoly product with mismatched ranks")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.rank, self)
    }
}

/// Human-readable form, e.g. `x1 - t*x2` or `-t^3*x1^2*x2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<alloc::string::String> = Vec::new();
            match e.t_exp {
                0 => {}
                1 => factors.push("t".into()),
                k => factors.push(alloc::format!("t^{k}")),
            }
            for (i, &k) in e.x_exps.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(alloc::format!("x{}", i + 1)),
                    k => factors.push(alloc::format!("x{}^{}", i + 1, k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}
