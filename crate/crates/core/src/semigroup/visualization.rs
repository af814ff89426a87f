//! Visualizations and fundamental cells.

use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::ranks::nonsingular_permutation;
use crate::scalar::Rational;
use crate::spectral::{critical_graph, SpectralData};

/// Maximum number of halvings of the strictness margin.
const MAX_HALVINGS: usize = 128;

fn rho_of(data: &SpectralData) -> Result<Rational> {
    data.rho.value().ok_or(Error::Acyclic)
}

fn check_len(a: &TropMatrix, u: &TropVector) -> Result<Vec<Rational>> {
    let values = u.finite_values()?;
    if values.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for a {}x{} matrix",
            values.len(),
            a.rows(),
            a.cols()
        )));
    }
    Ok(values)
}

/// `A ⊙ u <= rho(A) ⊙ u`, i.e. `A_ij + u_j - u_i <= rho` for all `i, j`.
pub fn is_visualization(a: &TropMatrix, u: &TropVector) -> Result<bool> {
    a.require_square()?;
    check_len(a, u)?;
    let data = critical_graph(a)?;
    let rho = rho_of(&data)?;
    Ok(a.apply(u)?.le(&u.scale(rho.into())))
}

/// The conjugate `diag(-u) A diag(u)` equals `rho` on critical arcs and is
/// strictly below `rho` everywhere else.
pub fn is_strict_visualization(a: &TropMatrix, u: &TropVector) -> Result<bool> {
    let data = critical_graph(a)?;
    is_strict_visualization_with(a, &data, u)
}

pub(crate) fn is_strict_visualization_with(
    a: &TropMatrix,
    data: &SpectralData,
    u: &TropVector,
) -> Result<bool> {
    let rho = rho_of(data)?;
    check_len(a, u)?;
    let conjugate = a.conjugate(u)?;
    let n = a.rows();
    for i in 0..n {
        for j in 0..n {
            let entry = conjugate.get(i, j);
            let ok = if data.is_critical_arc(i, j) {
                entry.value() == Some(rho)
            } else {
                entry.value().map_or(true, |x| x < rho)
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solves `u_j - u_i <= bound(i, j)` by Bellman–Ford from a virtual source
/// joined to every node with weight 0. `None` when a negative circuit makes
/// the system infeasible.
fn difference_constraints(n: usize, edges: &[(usize, usize, Rational)]) -> Option<Vec<Rational>> {
    let mut dist = vec![Rational::from_integer(0); n];
    for pass in 0..=n {
        let mut changed = false;
        for &(i, j, w) in edges {
            let cand = dist[i] + w;
            if cand < dist[j] {
                dist[j] = cand;
                changed = true;
            }
        }
        if !changed {
            return Some(dist);
        }
        if pass == n {
            break;
        }
    }
    None
}

/// Finds a strict visualization by solving the difference constraints
/// `u_j - u_i <= rho - A_ij - delta` on non-critical arcs (`delta = 0` on
/// critical ones), halving `delta` from 1 until the system is feasible.
pub fn strict_visualization(a: &TropMatrix) -> Result<TropVector> {
    let data = critical_graph(a)?;
    strict_visualization_with(a, &data)
}

pub(crate) fn strict_visualization_with(a: &TropMatrix, data: &SpectralData) -> Result<TropVector> {
    let rho = rho_of(data)?;
    let n = a.rows();
    let mut delta = Rational::from_integer(1);
    for _ in 0..MAX_HALVINGS {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if let Some(aij) = a.get(i, j).value() {
                    let margin = if data.is_critical_arc(i, j) {
                        Rational::from_integer(0)
                    } else {
                        delta
                    };
                    edges.push((i, j, rho - aij - margin));
                }
            }
        }
        if let Some(solution) = difference_constraints(n, &edges) {
            let u = TropVector(solution.into_iter().map(Into::into).collect());
            if !is_strict_visualization_with(a, data, &u)? {
                return Err(Error::Internal(format!(
                    "difference-constraint solution {u} is not a strict visualization"
                )));
            }
            return Ok(u);
        }
        delta /= Rational::from_integer(2);
    }
    Err(Error::Internal(format!(
        "no strict visualization found after {MAX_HALVINGS} halvings"
    )))
}

/// A membership question for the fundamental cell `F(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCellQuery {
    pub matrix: TropMatrix,
    pub point: TropVector,
}

/// `x ∈ F(A)`: for all `i` and all `j != tau(i)`,
/// `A_ij + x_j < A_{i tau(i)} + x_{tau(i)}`. Empty for singular `A`.
pub fn fundamental_cell_contains(query: &FundamentalCellQuery) -> Result<bool> {
    let a = &query.matrix;
    a.require_square()?;
    let x = check_len(a, &query.point)?;
    let Some(tau) = nonsingular_permutation(a)? else {
        return Ok(false);
    };
    Ok(cell_contains_with(a, &tau, &x))
}

pub(crate) fn cell_contains_with(a: &TropMatrix, tau: &[usize], x: &[Rational]) -> bool {
    let n = a.rows();
    (0..n).all(|i| {
        let t = tau[i];
        let best = a.get(i, t).value().expect("tau uses finite entries") + x[t];
        (0..n)
            .filter(|&j| j != t)
            .all(|j| a.get(i, j).value().map_or(true, |aij| aij + x[j] < best))
    })
}
