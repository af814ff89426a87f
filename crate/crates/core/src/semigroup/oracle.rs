//! Brute-force check of maximal ultimate rank by enumerating all products
//! up to a given length.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::semigroup::decision::{decide_max_ultimate_rank, GeneratorSet};
use crate::ultimate::ultimate_rank;

/// Default cap on the number of products the oracle may form.
pub const DEFAULT_PRODUCT_BUDGET: u128 = 2_000_000;

/// Default word length `n + 1`. Bad products, when they exist, have at
/// most `n` factors; the extra factor is margin.
pub fn default_oracle_length(n: usize) -> usize {
    n + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub max_len: usize,
    pub products_checked: u128,
    /// No enumerated product has `urk < n`.
    pub oracle_verdict: bool,
    /// Shortest, then lexicographically smallest, word (0-based generator
    /// indices) whose product has `urk < n`.
    pub witness_word: Option<Vec<usize>>,
    pub witness_ultimate_rank: Option<usize>,
    pub decision_verdict: bool,
    pub agree: bool,
}

fn product_count(generators: usize, max_len: usize) -> u128 {
    let k = generators as u128;
    (1..=max_len as u32)
        .map(|l| k.saturating_pow(l))
        .fold(0u128, u128::saturating_add)
}

/// Enumerates products of lengths `1..=max_len` breadth-first and reports
/// the first one with `urk < n`, then compares with the decision procedure.
pub fn semigroup_oracle(g: &GeneratorSet, max_len: usize, budget: u128) -> Result<OracleReport> {
    let needed = product_count(g.len(), max_len);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let n = g.dimension();
    let mut checked = 0u128;
    let mut witness: Option<(Vec<usize>, usize)> = None;
    let mut level: Vec<(Vec<usize>, TropMatrix)> = vec![(Vec::new(), TropMatrix::identity(n))];
    'lengths: for _ in 1..=max_len {
        let mut next = Vec::with_capacity(level.len() * g.len());
        for (word, product) in &level {
            for (idx, a) in g.generators().iter().enumerate() {
                let p = product.otimes(a)?;
                checked += 1;
                let urk = ultimate_rank(&p)?.value;
                let mut w = word.clone();
                w.push(idx);
                if urk < n {
                    witness = Some((w, urk));
                    break 'lengths;
                }
                next.push((w, p));
            }
        }
        level = next;
    }
    let decision = decide_max_ultimate_rank(g)?;
    let oracle_verdict = witness.is_none();
    let (witness_word, witness_ultimate_rank) = match witness {
        Some((w, u)) => (Some(w), Some(u)),
        None => (None, None),
    };
    Ok(OracleReport {
        max_len,
        products_checked: checked,
        oracle_verdict,
        witness_word,
        witness_ultimate_rank,
        decision_verdict: decision.verdict,
        agree: decision.verdict == oracle_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_products() {
        assert_eq!(product_count(2, 4), 2 + 4 + 8 + 16);
        assert_eq!(product_count(3, 1), 3);
    }

    #[test]
    fn budget_is_enforced() {
        let g = GeneratorSet::new(vec![TropMatrix::identity(2); 3]).unwrap();
        assert_eq!(
            semigroup_oracle(&g, 4, 50),
            Err(Error::BudgetExceeded {
                needed: 120,
                budget: 50
            })
        );
    }

    #[test]
    fn identity_generators_never_fail() {
        let g = GeneratorSet::new(vec![TropMatrix::identity(3); 2]).unwrap();
        let report = semigroup_oracle(&g, 3, DEFAULT_PRODUCT_BUDGET).unwrap();
        assert!(report.oracle_verdict && report.decision_verdict && report.agree);
        assert_eq!(report.products_checked, 14);
    }
}
