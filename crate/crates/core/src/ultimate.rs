//! Ultimate rank of a single matrix: the critical-graph formula and an
//! independent oracle that reads the rank off the periodic part of the
//! projective power orbit.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::ranks::{column_rank, permanent};
use crate::scalar::{Rational, Trop};
use crate::spectral::{critical_graph, projective_power_orbit, OrbitOutcome, SpectralData};

/// `urk(A)` as the sum of cyclicities of the critical components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UltimateRankResult {
    pub value: usize,
    pub critical_scc_count: usize,
    pub per_scc_cyclicities: Vec<usize>,
    /// `G(A)` has no circuit: the powers reach the null matrix and the sum
    /// is empty.
    pub acyclic: bool,
}

pub fn ultimate_rank(a: &TropMatrix) -> Result<UltimateRankResult> {
    a.require_square()?;
    if a.is_null() {
        return Ok(UltimateRankResult {
            value: 0,
            critical_scc_count: 0,
            per_scc_cyclicities: Vec::new(),
            acyclic: true,
        });
    }
    Ok(ultimate_rank_from(&critical_graph(a)?))
}

pub fn ultimate_rank_from(data: &SpectralData) -> UltimateRankResult {
    let per_scc_cyclicities: Vec<usize> =
        data.critical_components.iter().map(|c| c.cyclicity).collect();
    UltimateRankResult {
        value: per_scc_cyclicities.iter().sum(),
        critical_scc_count: per_scc_cyclicities.len(),
        per_scc_cyclicities,
        acyclic: data.rho.is_neg_inf(),
    }
}

/// The three equivalent characterizations of `urk(A) = n`, each evaluated
/// independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxUltimateRank {
    pub holds: bool,
    /// `urk(A) = n` from the formula.
    pub full_ultimate_rank: bool,
    /// The critical graph is a disjoint union of circuits covering all nodes.
    pub critical_graph_is_permutation: bool,
    /// The permanent has a unique maximizing permutation whose graph is the
    /// critical graph.
    pub unique_permutation_is_critical: bool,
}

pub fn has_max_ultimate_rank(a: &TropMatrix) -> Result<MaxUltimateRank> {
    let n = a.require_square()?;
    let data = critical_graph(a)?;
    let urk = ultimate_rank_from(&data).value;

    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    for (i, j) in data.critical_arcs() {
        out_deg[i] += 1;
        in_deg[j] += 1;
    }
    let permutation_graph = out_deg.iter().chain(&in_deg).all(|&d| d == 1);

    let cert = permanent(a)?;
    let unique_critical = match &cert.tau {
        Some(tau) => {
            let mut tau_arcs: Vec<(usize, usize)> = tau.iter().copied().enumerate().collect();
            tau_arcs.sort_unstable();
            tau_arcs == data.critical_arcs()
        }
        None => false,
    };

    let report = MaxUltimateRank {
        holds: urk == n,
        full_ultimate_rank: urk == n,
        critical_graph_is_permutation: permutation_graph,
        unique_permutation_is_critical: unique_critical,
    };
    if report.holds != permutation_graph || report.holds != unique_critical {
        return Err(Error::Internal(format!(
            "characterizations of maximal ultimate rank disagree: {report:?}"
        )));
    }
    if report.holds {
        let rho = data.rho.value().expect("full ultimate rank implies a circuit");
        let expected = Trop::finite(rho * Rational::from_integer(n as i128));
        if cert.permanent != expected {
            return Err(Error::Internal(format!(
                "per(A) = {} but n * rho(A) = {expected}",
                cert.permanent
            )));
        }
    }
    Ok(report)
}

/// Outcome of reading `urk(A)` off the power sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum UltimateOracle {
    /// The projective orbit closed; `value` is the least column rank over
    /// its periodic part.
    Closed {
        value: usize,
        preperiod: usize,
        period: usize,
    },
    /// No closure within the step limit.
    Inconclusive {
        /// Whether every component of `G(A)` holds a critical node. When
        /// false the orbit never closes and the limit of the ranks of the
        /// powers need not equal `urk(A)`.
        torsion_hypothesis: bool,
        steps: usize,
        /// Column rank of the last power formed.
        last_column_rank: usize,
    },
}

impl UltimateOracle {
    pub fn value(&self) -> Option<usize> {
        match self {
            UltimateOracle::Closed { value, .. } => Some(*value),
            UltimateOracle::Inconclusive { .. } => None,
        }
    }
}

pub fn ultimate_rank_oracle(a: &TropMatrix, max_steps: usize) -> Result<UltimateOracle> {
    let orbit = projective_power_orbit(a, max_steps)?;
    match orbit.outcome {
        OrbitOutcome::Closed {
            preperiod, period, ..
        } => {
            let periodic = orbit.periodic_part().expect("closed orbit");
            let value = periodic.iter().map(column_rank).min().unwrap_or(0);
            Ok(UltimateOracle::Closed {
                value,
                preperiod,
                period,
            })
        }
        OrbitOutcome::Exhausted { steps } => {
            let data = critical_graph(a)?;
            Ok(UltimateOracle::Inconclusive {
                torsion_hypothesis: data.every_scc_has_critical_node(),
                steps,
                last_column_rank: orbit.normalized.last().map(column_rank).unwrap_or(0),
            })
        }
    }
}
