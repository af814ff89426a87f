//! Rank notions that can be computed exactly: permanent and singularity,
//! column and row rank in polynomial time, tropical and symmetrized rank by
//! enumeration.

mod brute;
mod column;
mod permanent;

pub use brute::{
    signed_determinants, symmetrized_rank_bruteforce, tropical_rank_bruteforce, CappedRank,
    DEFAULT_BRUTE_CAP,
};
pub use column::{column_rank, row_rank};
pub use permanent::{is_nonsingular, nonsingular_permutation, permanent, PermanentCertificate};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;

/// All computed ranks of one matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub column_rank: usize,
    pub row_rank: usize,
    pub tropical_rank: CappedRank,
    pub symmetrized_rank: CappedRank,
}

/// Computes every rank and checks `tr <= sym <= min(row, col)` on the
/// values that were computed.
pub fn rank_report(a: &TropMatrix, cap: usize) -> Result<RankReport> {
    let report = RankReport {
        column_rank: column_rank(a),
        row_rank: row_rank(a),
        tropical_rank: tropical_rank_bruteforce(a, cap)?,
        symmetrized_rank: symmetrized_rank_bruteforce(a, cap)?,
    };
    let upper = report.column_rank.min(report.row_rank);
    let tr = report.tropical_rank.value();
    let sym = report.symmetrized_rank.value();
    let chain_ok = tr.map_or(true, |t| t <= upper)
        && sym.map_or(true, |s| s <= upper)
        && match (tr, sym) {
            (Some(t), Some(s)) => t <= s,
            _ => true,
        };
    if !chain_ok {
        return Err(Error::Internal(format!("rank chain violated: {report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_matrix_has_rank_zero() {
        let report = rank_report(&TropMatrix::null(3, 4), DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!(
            report,
            RankReport {
                column_rank: 0,
                row_rank: 0,
                tropical_rank: CappedRank::Exact(0),
                symmetrized_rank: CappedRank::Exact(0),
            }
        );
    }
}
