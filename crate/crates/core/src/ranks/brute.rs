//! Tropical and symmetrized rank by enumerating square submatrices.
//!
//! Both are exponential; callers pass a cap on `min(rows, cols)`.

use itertools::Itertools;
use serde::Serialize;

use crate::error::Result;
use crate::matrix::TropMatrix;
use crate::ranks::permanent::is_nonsingular;
use crate::scalar::Trop;

/// Default cap on the submatrix size for the brute-force ranks.
pub const DEFAULT_BRUTE_CAP: usize = 7;

/// A rank that is only computed when the matrix is small enough.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CappedRank {
    Exact(usize),
    /// `min(rows, cols)` exceeded the cap; nothing was computed.
    ExceedsCap { cap: usize },
}

impl CappedRank {
    pub fn value(self) -> Option<usize> {
        match self {
            CappedRank::Exact(r) => Some(r),
            CappedRank::ExceedsCap { .. } => None,
        }
    }
}

impl std::fmt::Display for CappedRank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CappedRank::Exact(r) => write!(f, "{r}"),
            CappedRank::ExceedsCap { cap } => write!(f, "not computed (size exceeds cap {cap})"),
        }
    }
}

/// Largest `r` such that some `r x r` submatrix satisfies `accept`.
fn largest_accepted(
    a: &TropMatrix,
    cap: usize,
    mut accept: impl FnMut(&TropMatrix) -> Result<bool>,
) -> Result<CappedRank> {
    if a.is_null() {
        return Ok(CappedRank::Exact(0));
    }
    let k = a.rows().min(a.cols());
    if k > cap {
        return Ok(CappedRank::ExceedsCap { cap });
    }
    for r in (1..=k).rev() {
        for rows in (0..a.rows()).combinations(r) {
            for cols in (0..a.cols()).combinations(r) {
                if accept(&a.submatrix(&rows, &cols))? {
                    return Ok(CappedRank::Exact(r));
                }
            }
        }
    }
    Ok(CappedRank::Exact(0))
}

/// Maximal size of a non-singular square submatrix.
pub fn tropical_rank_bruteforce(a: &TropMatrix, cap: usize) -> Result<CappedRank> {
    largest_accepted(a, cap, is_nonsingular)
}

/// Permutations of `0..r` with their sign (`true` for even).
fn signed_permutations(r: usize) -> Vec<(Vec<usize>, bool)> {
    (0..r)
        .permutations(r)
        .map(|p| {
            let inversions = (0..r)
                .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            (p, inversions % 2 == 0)
        })
        .collect()
}

/// `(det⁺, det⁻)`: maxima of the permutation weights over even and odd
/// permutations.
pub fn signed_determinants(b: &TropMatrix) -> (Trop, Trop) {
    determinants_with(b, &signed_permutations(b.rows()))
}

fn determinants_with(b: &TropMatrix, perms: &[(Vec<usize>, bool)]) -> (Trop, Trop) {
    let mut even = Trop::NEG_INF;
    let mut odd = Trop::NEG_INF;
    for (p, is_even) in perms {
        let weight = p
            .iter()
            .enumerate()
            .fold(Trop::ZERO, |acc, (i, &j)| acc.otimes(b.get(i, j)));
        if *is_even {
            even = even.oplus(weight);
        } else {
            odd = odd.oplus(weight);
        }
    }
    (even, odd)
}

/// Maximal size of a square submatrix with `det⁺ != det⁻`.
pub fn symmetrized_rank_bruteforce(a: &TropMatrix, cap: usize) -> Result<CappedRank> {
    let k = a.rows().min(a.cols()).min(cap);
    let tables: Vec<Vec<(Vec<usize>, bool)>> = (0..=k).map(signed_permutations).collect();
    largest_accepted(a, cap, |b| {
        let (even, odd) = determinants_with(b, &tables[b.rows()]);
        Ok(even != odd)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(rows: &[&[&str]]) -> TropMatrix {
        TropMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|t| t.parse().unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_ranks() {
        let id = TropMatrix::identity(4);
        assert_eq!(tropical_rank_bruteforce(&id, 7).unwrap(), CappedRank::Exact(4));
        assert_eq!(symmetrized_rank_bruteforce(&id, 7).unwrap(), CappedRank::Exact(4));
    }

    #[test]
    fn cap_is_respected() {
        let big = TropMatrix::identity(9);
        assert_eq!(
            tropical_rank_bruteforce(&big, DEFAULT_BRUTE_CAP).unwrap(),
            CappedRank::ExceedsCap { cap: 7 }
        );
        assert_eq!(
            symmetrized_rank_bruteforce(&TropMatrix::null(9, 9), 7).unwrap(),
            CappedRank::Exact(0)
        );
    }

    #[test]
    fn small_examples() {
        let a = parse(&[&["-1", "0", "0"], &["0", "-1", "0"], &["0", "0", "-1"]]);
        assert_eq!(tropical_rank_bruteforce(&a, 7).unwrap(), CappedRank::Exact(2));
        // both optimal permutations are 3-cycles, hence even
        assert_eq!(symmetrized_rank_bruteforce(&a, 7).unwrap(), CappedRank::Exact(3));
        let row = parse(&[&["1", ".", "3"]]);
        assert_eq!(tropical_rank_bruteforce(&row, 7).unwrap(), CappedRank::Exact(1));
    }

    #[test]
    fn signs_of_small_permutations() {
        let perms = signed_permutations(3);
        assert_eq!(perms.iter().filter(|(_, even)| *even).count(), 3);
        let (even, odd) = signed_determinants(&TropMatrix::identity(2));
        assert_eq!((even, odd), (Trop::ZERO, Trop::NEG_INF));
    }
}
