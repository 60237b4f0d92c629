//! The variable map between the pattern-side monomials `x^{m(T)}` and the
//! filling-side monomials `x^{ct(σ)}`.

use std::fmt;

use whittaker_core::fillings::hhl_sum;
use whittaker_core::tokuyama::tokuyama_sum;
use whittaker_core::{LaurentPoly, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariableMap {
    Identity,
    /// `x_i ↦ x_{n+1-i}`.
    Reversed,
}

impl VariableMap {
    /// Rewrites a pattern-side polynomial in filling-side variables.
    pub fn apply(self, p: &LaurentPoly) -> LaurentPoly {
        match self {
            Self::Identity => p.clone(),
            Self::Reversed => {
                let n = p.rank();
                let map: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
                p.permute_variables(&map).expect("map matches rank")
            }
        }
    }
}

impl fmt::Display for VariableMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Identity => "identity",
            Self::Reversed => "reversal x_i -> x_{n+1-i}",
        })
    }
}

/// Matches the two sides at `λ = ()`, `n = 2`. Returns `None` if neither
/// map reconciles them.
pub fn detect() -> Option<VariableMap> {
    let empty = Partition::new(Vec::new()).expect("empty partition");
    let pattern = tokuyama_sum(&empty, 2).ok()?;
    let filling = hhl_sum(&empty, 2).ok()?;
    [VariableMap::Identity, VariableMap::Reversed]
        .into_iter()
        .find(|m| m.apply(&pattern) == filling)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_reconciles() {
        assert_eq!(detect(), Some(VariableMap::Identity));
        let p = LaurentPoly::term(1, 0, &[2, 0, 1]);
        assert_eq!(
            VariableMap::Reversed.apply(&p),
            LaurentPoly::term(1, 0, &[1, 0, 2])
        );
    }
}
