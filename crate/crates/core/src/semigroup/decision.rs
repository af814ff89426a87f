//! Polynomial decision of maximal ultimate rank for a finitely generated
//! semigroup, from three conditions on the generators and their normalized
//! envelope `M = ∨ (A - rho(A))`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::Trop;
use crate::semigroup::visualization::{cell_contains_with, strict_visualization_with};
use crate::spectral::{critical_graph, SpectralData};
use crate::ranks::nonsingular_permutation;
use crate::ultimate::ultimate_rank_from;

/// Generators of a semigroup together with their normalizations.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    generators: Vec<TropMatrix>,
    spectra: Vec<SpectralData>,
    /// `A - rho(A)`, or `None` when `A` is acyclic.
    normalized: Vec<Option<TropMatrix>>,
    /// `M`, present when every generator has a finite cycle mean.
    envelope: Option<TropMatrix>,
}

impl GeneratorSet {
    pub fn new(generators: Vec<TropMatrix>) -> Result<Self> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let n = first.rows();
        for (idx, g) in generators.iter().enumerate() {
            g.require_square()?;
            if g.rows() != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator {} is {}x{}, expected {n}x{n}",
                    idx + 1,
                    g.rows(),
                    g.cols()
                )));
            }
        }
        let spectra = generators
            .iter()
            .map(critical_graph)
            .collect::<Result<Vec<_>>>()?;
        let normalized: Vec<Option<TropMatrix>> = generators
            .iter()
            .zip(&spectra)
            .map(|(g, s)| s.rho.value().map(|r| g.shift(-r)))
            .collect();
        let envelope = normalized
            .iter()
            .try_fold(TropMatrix::null(n, n), |acc, g| acc.oplus(g.as_ref()?).ok());
        Ok(GeneratorSet {
            generators,
            spectra,
            normalized,
            envelope,
        })
    }

    pub fn generators(&self) -> &[TropMatrix] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Size `n` of the (square) generators.
    pub fn dimension(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn normalized(&self) -> &[Option<TropMatrix>] {
        &self.normalized
    }

    pub fn envelope(&self) -> Option<&TropMatrix> {
        self.envelope.as_ref()
    }

    pub fn spectrum(&self, index: usize) -> &SpectralData {
        &self.spectra[index]
    }
}

/// An arc `(i, j)` of `G_c(M)` where generator `generator` attains `M_ij`
/// without the arc being critical for it. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct C3Culprit {
    pub generator: usize,
    pub arc: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C1Report {
    pub holds: bool,
    /// Generators with `urk(A) < n`.
    pub failing_generators: Vec<usize>,
    pub ultimate_ranks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C2Report {
    /// `None` when `M` is undefined (some generator is acyclic).
    pub holds: Option<bool>,
    pub rho_envelope: Trop,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C3Report {
    pub holds: Option<bool>,
    /// Ordered by arc (row-major), then generator.
    pub culprits: Vec<C3Culprit>,
}

/// Verdict on `urk(S) = n` with per-condition diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupDecision {
    pub verdict: bool,
    pub c1: C1Report,
    pub c2: C2Report,
    pub c3: C3Report,
    /// Common eigenvector lying in every fundamental cell; present iff the
    /// verdict is true.
    pub witness_eigenvector: Option<TropVector>,
    /// Word (0-based generator indices) whose product has `urk < n`; filled
    /// in by the enumeration oracle.
    pub witness_product: Option<Vec<usize>>,
}

/// Evaluates the three conditions in `O(|Σ| n³)`.
pub fn decide_max_ultimate_rank(g: &GeneratorSet) -> Result<SemigroupDecision> {
    let n = g.dimension();
    let ultimate_ranks: Vec<usize> = g.spectra.iter().map(|s| ultimate_rank_from(s).value).collect();
    let failing_generators: Vec<usize> = ultimate_ranks
        .iter()
        .enumerate()
        .filter(|&(_, &u)| u != n)
        .map(|(i, _)| i)
        .collect();
    let c1 = C1Report {
        holds: failing_generators.is_empty(),
        failing_generators,
        ultimate_ranks,
    };

    let (c2, c3, envelope_data) = match &g.envelope {
        None => (
            C2Report {
                holds: None,
                rho_envelope: Trop::NEG_INF,
            },
            C3Report {
                holds: None,
                culprits: Vec::new(),
            },
            None,
        ),
        Some(m) => {
            let data = critical_graph(m)?;
            let c2 = C2Report {
                holds: Some(data.rho == Trop::ZERO),
                rho_envelope: data.rho,
            };
            let mut culprits = Vec::new();
            for (i, j) in data.critical_arcs() {
                for (idx, normalized) in g.normalized.iter().enumerate() {
                    let normalized = normalized.as_ref().expect("envelope implies finite rho");
                    if normalized.get(i, j) == m.get(i, j)
                        && !g.spectra[idx].is_critical_arc(i, j)
                    {
                        culprits.push(C3Culprit {
                            generator: idx,
                            arc: (i, j),
                        });
                    }
                }
            }
            let c3 = C3Report {
                holds: Some(culprits.is_empty()),
                culprits,
            };
            (c2, c3, Some(data))
        }
    };

    let verdict = c1.holds && c2.holds == Some(true) && c3.holds == Some(true);
    let witness_eigenvector = if verdict {
        let m = g.envelope.as_ref().expect("verdict implies envelope");
        let data = envelope_data.as_ref().expect("verdict implies envelope data");
        let u = strict_visualization_with(m, data)?;
        if !witness_check(g, &u)? {
            return Err(Error::Internal(format!(
                "strict visualization {u} of the envelope is not a common eigenvector in all fundamental cells"
            )));
        }
        Some(u)
    } else {
        None
    };
    Ok(SemigroupDecision {
        verdict,
        c1,
        c2,
        c3,
        witness_eigenvector,
        witness_product: None,
    })
}

/// `u` is an eigenvector of every generator (for its own `rho`) and lies in
/// every generator's fundamental cell.
pub fn witness_check(g: &GeneratorSet, u: &TropVector) -> Result<bool> {
    let x = u.finite_values()?;
    if x.len() != g.dimension() {
        return Err(Error::DimensionMismatch(format!(
            "witness of length {} for {}x{} generators",
            x.len(),
            g.dimension(),
            g.dimension()
        )));
    }
    for (a, spectrum) in g.generators.iter().zip(&g.spectra) {
        let Some(rho) = spectrum.rho.value() else {
            return Ok(false);
        };
        if a.apply(u)? != u.scale(rho.into()) {
            return Ok(false);
        }
        let Some(tau) = nonsingular_permutation(a)? else {
            return Ok(false);
        };
        if !cell_contains_with(a, &tau, &x) {
            return Ok(false);
        }
    }
    Ok(true)
}
