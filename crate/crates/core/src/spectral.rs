//! Max-plus spectral theory: maximum cycle mean, Kleene star, critical graph,
//! eigenvectors and projective power orbits.

use std::collections::HashMap;

use crate::digraph::{cyclicity_scc, graph_of_matrix, scc, Arc, Digraph, SccDecomposition};
use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::{Rational, Trop};

/// A strongly connected component of the critical graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalComponent {
    pub nodes: Vec<usize>,
    pub cyclicity: usize,
}

/// Everything the critical-graph computation produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    /// Maximum cycle mean; `-inf` iff the graph is acyclic.
    pub rho: Trop,
    /// Strongly connected components of `G(A)`.
    pub graph_scc: SccDecomposition,
    /// Maximum cycle mean of each component of `G(A)` (`-inf` if trivial).
    pub component_means: Vec<Trop>,
    /// Critical arcs on all `n` nodes; non-critical nodes are isolated.
    pub critical_graph: Digraph,
    pub critical_scc: SccDecomposition,
    pub critical_components: Vec<CriticalComponent>,
}

impl SpectralData {
    pub fn node_count(&self) -> usize {
        self.critical_graph.node_count()
    }

    pub fn critical_nodes(&self) -> Vec<usize> {
        let mut nodes: Vec<usize> = self
            .critical_components
            .iter()
            .flat_map(|c| c.nodes.iter().copied())
            .collect();
        nodes.sort_unstable();
        nodes
    }

    pub fn is_critical_arc(&self, i: usize, j: usize) -> bool {
        self.critical_graph.has_arc(i, j)
    }

    pub fn critical_arcs(&self) -> Vec<(usize, usize)> {
        self.critical_graph.arc_pairs()
    }

    /// Whether every component of `G(A)`, trivial ones included, contains a
    /// critical node. This is exactly when `(-rho) ⊙ A` is torsion.
    pub fn every_scc_has_critical_node(&self) -> bool {
        let mut covered = vec![false; self.graph_scc.components.len()];
        for v in self.critical_nodes() {
            covered[self.graph_scc.component_of[v]] = true;
        }
        covered.into_iter().all(|c| c)
    }
}

/// Eigenvectors for the maximal eigenvalue, one per critical component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenBasis {
    pub eigenvalue: Trop,
    pub generators: Vec<TropVector>,
}

/// Dense square grid of optional rationals used by the inner loops.
type Grid = Vec<Vec<Option<Rational>>>;

fn max_opt(slot: &mut Option<Rational>, cand: Rational) {
    match slot {
        Some(cur) if *cur >= cand => {}
        _ => *slot = Some(cand),
    }
}

/// Karp's maximum cycle mean on one strongly connected component.
///
/// `D_k(v)` is the heaviest walk of length `k` from the component's first
/// node to `v`; the mean is `max_v min_k (D_s(v) - D_k(v)) / (s - k)` where
/// `s` is the component size.
fn karp_component(g: &Digraph, comp: &[usize], local: &[usize]) -> Rational {
    let s = comp.len();
    let mut prev: Vec<Option<Rational>> = vec![None; s];
    prev[0] = Some(Rational::from_integer(0));
    let mut table: Grid = Vec::with_capacity(s + 1);
    let inside: Vec<Vec<(usize, Rational)>> = comp
        .iter()
        .map(|&u| {
            g.out_arcs(u)
                .filter(|a| local[a.target] != usize::MAX)
                .map(|a| (local[a.target], a.weight))
                .collect()
        })
        .collect();
    for _ in 1..=s {
        let mut next: Vec<Option<Rational>> = vec![None; s];
        for (u, arcs) in inside.iter().enumerate() {
            let Some(du) = prev[u] else { continue };
            for &(v, w) in arcs {
                max_opt(&mut next[v], du + w);
            }
        }
        table.push(std::mem::replace(&mut prev, next));
    }
    table.push(prev);

    let mut best: Option<Rational> = None;
    for v in 0..s {
        let Some(last) = table[s][v] else { continue };
        let mut worst: Option<Rational> = None;
        for (k, row) in table.iter().enumerate().take(s) {
            if let Some(dk) = row[v] {
                let mean = (last - dk) / Rational::from_integer((s - k) as i128);
                if worst.map_or(true, |w| mean < w) {
                    worst = Some(mean);
                }
            }
        }
        if let Some(w) = worst {
            max_opt(&mut best, w);
        }
    }
    best.expect("a non-trivial component has a closed walk of length s")
}

/// Per-component maximum cycle means.
fn component_means(g: &Digraph, decomposition: &SccDecomposition) -> Vec<Trop> {
    let mut local = vec![usize::MAX; g.node_count()];
    decomposition
        .components
        .iter()
        .zip(&decomposition.trivial)
        .map(|(comp, &trivial)| {
            if trivial {
                return Trop::NEG_INF;
            }
            for (idx, &v) in comp.iter().enumerate() {
                local[v] = idx;
            }
            let mean = karp_component(g, comp, &local);
            for &v in comp {
                local[v] = usize::MAX;
            }
            Trop::finite(mean)
        })
        .collect()
}

/// Maximum cycle mean `rho(A)`; `-inf` iff `G(A)` is acyclic.
pub fn max_cycle_mean(a: &TropMatrix) -> Result<Trop> {
    let g = graph_of_matrix(a)?;
    let decomposition = scc(&g);
    Ok(component_means(&g, &decomposition)
        .into_iter()
        .max()
        .unwrap_or(Trop::NEG_INF))
}

/// All-pairs heaviest paths (`B+`) by Floyd–Warshall. Only meaningful when
/// every circuit has non-positive weight.
fn plus_closure(mut s: Grid) -> Grid {
    let n = s.len();
    for k in 0..n {
        let row_k = s[k].clone();
        for i in 0..n {
            let Some(sik) = s[i][k] else { continue };
            let row_i = &mut s[i];
            for (slot, skj) in row_i.iter_mut().zip(&row_k) {
                if let Some(skj) = skj {
                    max_opt(slot, sik + skj);
                }
            }
        }
    }
    s
}

fn grid_of(b: &TropMatrix) -> Grid {
    (0..b.rows())
        .map(|i| b.row(i).iter().map(Trop::value).collect())
        .collect()
}

fn star_of_grid(grid: Grid) -> Grid {
    let mut s = plus_closure(grid);
    let zero = Rational::from_integer(0);
    for (i, row) in s.iter_mut().enumerate() {
        max_opt(&mut row[i], zero);
    }
    s
}

fn matrix_of_grid(grid: &Grid) -> TropMatrix {
    let n = grid.len();
    TropMatrix::from_fn(n, grid[0].len(), |i, j| {
        grid[i][j].map_or(Trop::NEG_INF, Trop::finite)
    })
}

/// Kleene star `B* = I ∨ B ∨ B² ∨ ...` for a matrix with `rho(B) <= 0`.
pub fn kleene_star(b: &TropMatrix) -> Result<TropMatrix> {
    let rho = max_cycle_mean(b)?;
    if let Some(r) = rho.value() {
        if r > Rational::from_integer(0) {
            return Err(Error::PositiveCycleMean(rho.to_string()));
        }
    }
    Ok(matrix_of_grid(&star_of_grid(grid_of(b))))
}

/// Computes `rho(A)`, the critical graph and its components.
///
/// Only components of `G(A)` whose own cycle mean equals `rho` can carry
/// critical arcs. Inside such a component, with `B = (-rho) ⊙ A`, arc
/// `(i, j)` is critical iff `B_ij + B*_ji = 0`.
pub fn critical_graph(a: &TropMatrix) -> Result<SpectralData> {
    let n = a.require_square()?;
    let g = graph_of_matrix(a)?;
    let graph_scc = scc(&g);
    let means = component_means(&g, &graph_scc);
    let rho = means.iter().copied().max().unwrap_or(Trop::NEG_INF);

    let mut critical_arcs = Vec::new();
    if let Some(r) = rho.value() {
        for (comp, mean) in graph_scc.components.iter().zip(&means) {
            if *mean != rho {
                continue;
            }
            let b: Grid = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| a.get(i, j).value().map(|x| x - r)).collect())
                .collect();
            let star = star_of_grid(b.clone());
            for (li, &i) in comp.iter().enumerate() {
                for (lj, &j) in comp.iter().enumerate() {
                    let (Some(bij), Some(back)) = (b[li][lj], star[lj][li]) else {
                        continue;
                    };
                    if (bij + back).numer() == &0 {
                        critical_arcs.push(Arc {
                            source: i,
                            target: j,
                            weight: bij + r,
                        });
                    }
                }
            }
        }
    }
    let critical_graph = Digraph::from_arcs(n, critical_arcs)?;
    let critical_scc = scc(&critical_graph);
    let critical_components = critical_scc
        .non_trivial()
        .map(|comp| {
            Ok(CriticalComponent {
                nodes: comp.clone(),
                cyclicity: cyclicity_scc(&critical_graph, comp)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralData {
        rho,
        graph_scc,
        component_means: means,
        critical_graph,
        critical_scc,
        critical_components,
    })
}

/// One eigenvector for `rho(A)` per critical component: the column of
/// `((-rho) ⊙ A)*` at the component's smallest node.
pub fn eigen_basis(a: &TropMatrix) -> Result<EigenBasis> {
    let data = critical_graph(a)?;
    eigen_basis_from(a, &data)
}

/// Same as [`eigen_basis`] but reuses an existing critical-graph result.
pub fn eigen_basis_from(a: &TropMatrix, data: &SpectralData) -> Result<EigenBasis> {
    let r = data.rho.value().ok_or(Error::Acyclic)?;
    let star = star_of_grid(grid_of(&a.shift(-r)));
    let generators = data
        .critical_components
        .iter()
        .map(|c| {
            let j = c.nodes[0];
            TropVector(
                star.iter()
                    .map(|row| row[j].map_or(Trop::NEG_INF, Trop::finite))
                    .collect(),
            )
        })
        .collect();
    Ok(EigenBasis {
        eigenvalue: data.rho,
        generators,
    })
}

/// Returns `Some(lambda)` when `A ⊙ v = lambda ⊙ v`, otherwise `None`.
pub fn is_eigenvector(a: &TropMatrix, v: &TropVector) -> Result<Option<Trop>> {
    a.require_square()?;
    if v.is_null() {
        return Err(Error::NullVector);
    }
    let image = a.apply(v)?;
    if image.is_null() {
        return Ok(Some(Trop::NEG_INF));
    }
    let mut lambda: Option<Rational> = None;
    for (x, y) in v.0.iter().zip(&image.0) {
        match (x.value(), y.value()) {
            (None, None) => {}
            (Some(x), Some(y)) => {
                let candidate = y - x;
                if lambda.is_some_and(|l| l != candidate) {
                    return Ok(None);
                }
                lambda = Some(candidate);
            }
            _ => return Ok(None),
        }
    }
    Ok(lambda.map(Trop::finite))
}

/// How the projective power sequence ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitOutcome {
    /// `A^(k+c) = growth ⊙ A^k` with `k = preperiod`, `c = period`.
    Closed {
        preperiod: usize,
        period: usize,
        growth: Trop,
    },
    /// No repetition among the first `steps` powers.
    Exhausted { steps: usize },
}

/// The projective classes of `A, A², ...` up to closure or the step limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerOrbit {
    pub outcome: OrbitOutcome,
    /// `normalized[w - 1]` is the projective normal form of `A^w`.
    pub normalized: Vec<TropMatrix>,
    /// `shifts[w - 1]` is the maximum entry of `A^w`.
    pub shifts: Vec<Trop>,
}

impl PowerOrbit {
    pub fn is_closed(&self) -> bool {
        matches!(self.outcome, OrbitOutcome::Closed { .. })
    }

    /// Normal forms of the periodic part, `A^k ... A^(k+c-1)`.
    pub fn periodic_part(&self) -> Option<&[TropMatrix]> {
        match self.outcome {
            OrbitOutcome::Closed {
                preperiod, period, ..
            } => Some(&self.normalized[preperiod - 1..preperiod - 1 + period]),
            OrbitOutcome::Exhausted { .. } => None,
        }
    }

    /// The actual power `A^w` (not normalized), for `w` within the orbit.
    pub fn power(&self, w: usize) -> TropMatrix {
        let shift = self.shifts[w - 1];
        self.normalized[w - 1].scale(if shift.is_finite() { shift } else { Trop::ZERO })
    }
}

/// Default step limit `n⁴ + n²` for [`projective_power_orbit`].
pub fn default_max_steps(n: usize) -> usize {
    n.saturating_pow(4).saturating_add(n * n)
}

/// Iterates projective normal forms of the powers of `a` until one repeats
/// or `max_steps` powers have been formed. Termination is guaranteed when
/// every component of `G(A)` contains a critical node.
pub fn projective_power_orbit(a: &TropMatrix, max_steps: usize) -> Result<PowerOrbit> {
    a.require_square()?;
    if a.is_null() {
        return Err(Error::NullMatrix);
    }
    let mut seen: HashMap<TropMatrix, usize> = HashMap::new();
    let mut normalized = Vec::new();
    let mut shifts: Vec<Trop> = Vec::new();
    let first = a.projective_form();
    let mut current = first.normalized;
    let mut shift = first.shift;
    for w in 1..=max_steps.max(1) {
        if let Some(&k) = seen.get(&current) {
            let growth = match (shift.value(), shifts[k - 1].value()) {
                (Some(now), Some(then)) => Trop::finite(now - then),
                _ => Trop::NEG_INF,
            };
            return Ok(PowerOrbit {
                outcome: OrbitOutcome::Closed {
                    preperiod: k,
                    period: w - k,
                    growth,
                },
                normalized,
                shifts,
            });
        }
        seen.insert(current.clone(), w);
        normalized.push(current.clone());
        shifts.push(shift);
        let next = current.otimes(a)?.projective_form();
        shift = match (shift.value(), next.shift.value()) {
            (Some(s), Some(t)) => Trop::finite(s + t),
            _ => Trop::NEG_INF,
        };
        current = next.normalized;
    }
    Ok(PowerOrbit {
        outcome: OrbitOutcome::Exhausted {
            steps: normalized.len(),
        },
        normalized,
        shifts,
    })
}
