//! Tropical permanent with an optimality certificate and a uniqueness test
//! for the maximizing permutation.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::{Rational, Trop};

/// Result of the assignment computation behind `per(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermanentCertificate {
    pub permanent: Trop,
    /// More than one permutation attains the maximum (or `A` is the 1x1
    /// null matrix).
    pub singular: bool,
    /// The unique maximizing permutation, `tau[i]` being the column of row
    /// `i`. Present iff the matrix is non-singular.
    pub tau: Option<Vec<usize>>,
    /// Some maximizing permutation, present whenever `per(A)` is finite.
    pub optimal: Option<Vec<usize>>,
    /// Dual potentials with `A_ij <= u_i + v_j` everywhere and equality on
    /// `optimal`; present whenever `per(A)` is finite.
    pub row_potential: Option<TropVector>,
    pub col_potential: Option<TropVector>,
}

impl PermanentCertificate {
    pub fn is_nonsingular(&self) -> bool {
        !self.singular
    }
}

/// Kuhn's augmenting paths on the finite support; returns whether a perfect
/// matching exists.
fn has_perfect_matching(a: &TropMatrix) -> bool {
    let n = a.rows();
    let mut match_col: Vec<Option<usize>> = vec![None; n];
    fn augment(
        a: &TropMatrix,
        row: usize,
        seen: &mut [bool],
        match_col: &mut [Option<usize>],
    ) -> bool {
        for j in 0..a.cols() {
            if a.get(row, j).is_finite() && !seen[j] {
                seen[j] = true;
                let free = match match_col[j] {
                    None => true,
                    Some(other) => augment(a, other, seen, match_col),
                };
                if free {
                    match_col[j] = Some(row);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|row| {
        let mut seen = vec![false; n];
        augment(a, row, &mut seen, &mut match_col)
    })
}

/// Primal-dual assignment (Hungarian method, `O(n³)`), minimizing `-A` with
/// `-inf` cells forbidden. Requires a perfect matching on the finite support.
/// Returns `(assignment, row duals, column duals)` for the maximization.
fn max_assignment(a: &TropMatrix) -> Result<(Vec<usize>, Vec<Rational>, Vec<Rational>)> {
    let n = a.rows();
    let zero = Rational::from_integer(0);
    let cost = |i: usize, j: usize| a.get(i - 1, j - 1).value().map(|x| -x);
    let mut u = vec![zero; n + 1];
    let mut v = vec![zero; n + 1];
    // p[j]: row assigned to column j (1-based, 0 = free)
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = cost(i0, j) {
                    let reduced = c - u[i0] - v[j];
                    if minv[j].map_or(true, |m| reduced < m) {
                        minv[j] = Some(reduced);
                        way[j] = j0;
                    }
                }
                if let Some(m) = minv[j] {
                    if delta.map_or(true, |d| m < d) {
                        delta = Some(m);
                        j1 = j;
                    }
                }
            }
            let delta = delta.ok_or_else(|| {
                Error::Internal("assignment search found no augmenting column".into())
            })?;
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    let rows = u[1..].iter().map(|x| -x).collect();
    let cols = v[1..].iter().map(|x| -x).collect();
    Ok((assignment, rows, cols))
}

/// Decides whether the bipartite graph `edges` (row -> columns) has exactly
/// one perfect matching, given that it has at least one. Repeatedly removes
/// a vertex of degree one together with its forced partner; the matching is
/// unique iff this empties the graph.
pub(crate) fn unique_perfect_matching(n: usize, edges: &[Vec<usize>]) -> bool {
    let mut row_alive = vec![true; n];
    let mut col_alive = vec![true; n];
    let mut col_edges = vec![Vec::new(); n];
    for (i, cols) in edges.iter().enumerate() {
        for &j in cols {
            col_edges[j].push(i);
        }
    }
    let mut row_deg: Vec<usize> = edges.iter().map(Vec::len).collect();
    let mut col_deg: Vec<usize> = col_edges.iter().map(Vec::len).collect();
    // (is_row, index)
    let mut queue: VecDeque<(bool, usize)> = VecDeque::new();
    for i in 0..n {
        if row_deg[i] == 1 {
            queue.push_back((true, i));
        }
        if col_deg[i] == 1 {
            queue.push_back((false, i));
        }
    }
    let mut removed = 0;
    while let Some((is_row, x)) = queue.pop_front() {
        let (alive, deg) = if is_row {
            (row_alive[x], row_deg[x])
        } else {
            (col_alive[x], col_deg[x])
        };
        if !alive {
            continue;
        }
        if deg != 1 {
            if deg == 0 {
                return false;
            }
            continue;
        }
        let (row, col) = if is_row {
            let col = edges[x].iter().copied().find(|&j| col_alive[j]).unwrap();
            (x, col)
        } else {
            let row = col_edges[x].iter().copied().find(|&i| row_alive[i]).unwrap();
            (row, x)
        };
        row_alive[row] = false;
        col_alive[col] = false;
        removed += 1;
        for &j in &edges[row] {
            if col_alive[j] {
                col_deg[j] -= 1;
                if col_deg[j] <= 1 {
                    queue.push_back((false, j));
                }
            }
        }
        for &i in &col_edges[col] {
            if row_alive[i] {
                row_deg[i] -= 1;
                if row_deg[i] <= 1 {
                    queue.push_back((true, i));
                }
            }
        }
    }
    removed == n
}

/// `per(A)` with singularity verdict, maximizing permutation and duals.
pub fn permanent(a: &TropMatrix) -> Result<PermanentCertificate> {
    let n = a.require_square()?;
    if !has_perfect_matching(a) {
        return Ok(PermanentCertificate {
            permanent: Trop::NEG_INF,
            singular: true,
            tau: None,
            optimal: None,
            row_potential: None,
            col_potential: None,
        });
    }
    let (assignment, rows, cols) = max_assignment(a)?;
    let permanent = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| a.get(i, j).value().expect("assignment uses finite cells"))
        .sum::<Rational>();
    let dual_total: Rational = rows.iter().chain(&cols).sum();
    if dual_total != permanent {
        return Err(Error::Internal(format!(
            "dual objective {dual_total} differs from permanent {permanent}"
        )));
    }
    let tight: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| a.get(i, j).value() == Some(rows[i] + cols[j]))
                .collect()
        })
        .collect();
    let unique = unique_perfect_matching(n, &tight);
    let to_vector = |xs: Vec<Rational>| TropVector(xs.into_iter().map(Trop::finite).collect());
    Ok(PermanentCertificate {
        permanent: Trop::finite(permanent),
        singular: !unique,
        tau: unique.then(|| assignment.clone()),
        optimal: Some(assignment),
        row_potential: Some(to_vector(rows)),
        col_potential: Some(to_vector(cols)),
    })
}

/// The unique maximizing permutation, if `A` is non-singular.
pub fn nonsingular_permutation(a: &TropMatrix) -> Result<Option<Vec<usize>>> {
    Ok(permanent(a)?.tau)
}

pub fn is_nonsingular(a: &TropMatrix) -> Result<bool> {
    Ok(!permanent(a)?.singular)
}
