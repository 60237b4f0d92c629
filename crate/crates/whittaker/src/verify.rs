//! Exhaustive identity sweep over small `(λ, n)`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use whittaker_core::alcove::{count_n, ramyip_sum, RootChain};
use whittaker_core::audit::{audit_filling, audit_ssyt, audit_subset_sums, audit_walls, Audit};
use whittaker_core::compression::{sort_columns, sort_preimage};
use whittaker_core::fillings::{enumerate_fillings, fiber_sum, hhl_coefficient, hhl_sum};
use whittaker_core::tokuyama::tokuyama_sum;
use whittaker_core::{Binomial, Error, LaurentPoly, Partition, Permutation, Ssyt, Transposition};

use crate::convention::VariableMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_lambda1: usize,
    pub seed: u64,
    /// Random admissible pairs drawn per instance for the length formula.
    pub samples: usize,
    /// Multiply the weak-compression closed form by an extra `(1-t)`, so
    /// that the sweep must fail.
    pub negative_control: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_n: 3,
            max_lambda1: 2,
            seed: 0,
            samples: 1000,
            negative_control: false,
        }
    }
}

/// Partitions with at most `n - 1` parts, each at most `max_part`, ordered
/// by size and then lexicographically.
pub fn partitions(n: usize, max_part: usize) -> Vec<Partition> {
    fn rec(parts_left: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if parts_left == 0 {
            return;
        }
        for p in 1..=max_part {
            prefix.push(p);
            rec(parts_left - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n.saturating_sub(1), max_part, &mut Vec::new(), &mut raw);
    raw.sort_by(|a, b| (a.iter().sum::<usize>(), a).cmp(&(b.iter().sum(), b)));
    raw.into_iter()
        .map(|p| Partition::new(p).expect("weakly decreasing"))
        .collect()
}

/// Every `(n, λ)` in the sweep, smallest first.
pub fn instances(max_n: usize, max_lambda1: usize) -> Vec<(usize, Partition)> {
    (1..=max_n)
        .flat_map(|n| {
            partitions(n, max_lambda1)
                .into_iter()
                .map(move |lam| (n, lam))
        })
        .collect()
}

/// A random start permutation and a random length-increasing run along the
/// chain.
pub fn random_admissible(chain: &RootChain, rng: &mut impl Rng) -> (Permutation, Vec<usize>) {
    let mut values: Vec<usize> = (1..=chain.n()).collect();
    for i in (1..values.len()).rev() {
        values.swap(i, rng.gen_range(0..=i));
    }
    let u = Permutation::new(values).expect("shuffled identity");
    let mut w = u.clone();
    let mut k = Vec::new();
    for (idx, &t) in chain.entries().iter().enumerate() {
        if w.bruhat_increases(t) && rng.gen_bool(0.5) {
            w = w.apply(t);
            k.push(idx);
        }
    }
    (u, k)
}

fn audit_instance(
    n: usize,
    lam: &Partition,
    map: VariableMap,
    bounds: &Bounds,
    index: usize,
) -> Result<Audit, Error> {
    let mut audit = Audit::new();
    let label = || format!("lambda = {lam}, n = {n}");

    let ry = ramyip_sum(lam, n)?;
    let hhl = hhl_sum(lam, n)?;
    let tok = map.apply(&tokuyama_sum(lam, n)?);
    audit.record("triple-agreement", ry == hhl && hhl == tok, || {
        format!("{}: alcove {ry}, fillings {hhl}, patterns {tok}", label())
    });

    let chain = RootChain::new(lam, n)?;
    let fillings = enumerate_fillings(lam, n)?;
    for sigma in &fillings {
        if bounds.negative_control {
            let corrupted = &hhl_coefficient(sigma, n)?
                * &LaurentPoly::binomial_power(Binomial::OneMinusT, 1, 0);
            audit.record(
                "weak-compression",
                fiber_sum(sigma, &chain)? == corrupted,
                || format!("filling [{sigma}] (n = {n}): corrupted descent count"),
            );
        } else {
            audit_filling(sigma, &chain, &mut audit)?;
        }
    }

    let images: BTreeSet<Ssyt> = fillings
        .iter()
        .map(|f| sort_columns(f, n))
        .collect::<Result<_, _>>()?;
    let mut covered = Vec::new();
    for s in &images {
        audit_ssyt(s, n, &mut audit)?;
        audit_walls(s, n, &mut audit)?;
        covered.extend(sort_preimage(s, n)?);
    }
    covered.sort();
    audit.record("fiber-partition", covered == fillings, label);

    let mut rng =
        ChaCha8Rng::seed_from_u64(bounds.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for _ in 0..bounds.samples {
        let (u, k) = random_admissible(&chain, &mut rng);
        let steps: Vec<Transposition> = k.iter().map(|&i| chain.entries()[i]).collect();
        let end = chain.end_of(&u, &k);
        audit.record(
            "length-formula",
            end.length() == u.length() + steps.len() + 2 * count_n(&u, &steps),
            || format!("{}: u = {u}, K = {k:?}", label()),
        );
    }
    Ok(audit)
}

#[derive(Clone, Debug)]
pub struct Report {
    pub map: VariableMap,
    pub instances: usize,
    pub audit: Audit,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.audit.is_clean()
    }

    /// Plain-text summary: the variable map, one line per check, then the
    /// first counterexample of each failing check.
    pub fn render(&self) -> String {
        let mut out = format!(
            "variable map: {}\ninstances: {}\n",
            self.map, self.instances
        );
        for (name, t) in self.audit.checks() {
            let status = if t.failed == 0 { "ok" } else { "FAIL" };
            out += &format!(
                "{status:4} {name}: {} passed, {} failed\n",
                t.passed, t.failed
            );
        }
        for (name, t) in self.audit.failures() {
            out += &format!(
                "counterexample [{name}]: {}\n",
                t.first_failure.as_deref().unwrap_or("?")
            );
        }
        out
    }
}

/// Runs every instance in parallel; results are merged in instance order,
/// so the reported counterexamples are the smallest ones.
pub fn run(bounds: &Bounds, map: VariableMap) -> Result<Report, String> {
    let todo = instances(bounds.max_n, bounds.max_lambda1);
    let audits: Vec<Audit> = todo
        .par_iter()
        .enumerate()
        .map(|(i, (n, lam))| {
            audit_instance(*n, lam, map, bounds, i)
                .map_err(|e| format!("lambda = {lam}, n = {n}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    let mut audit = Audit::new();
    for n in 2..=bounds.max_n {
        audit_subset_sums(n, &mut audit).map_err(|e| format!("subset sums, n = {n}: {e}"))?;
    }
    for a in audits {
        audit.merge(a);
    }
    Ok(Report {
        map,
        instances: todo.len(),
        audit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_shape() {
        let all = instances(3, 2);
        assert_eq!(all.len(), 1 + 3 + 6);
        assert_eq!(all[0].0, 1);
        assert_eq!(
            partitions(3, 2)
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            ["()", "(1)", "(1,1)", "(2)", "(2,1)", "(2,2)"]
        );
    }
}
