//! Structured reports behind the command-line tool.
//!
//! Every report serializes to JSON with exact scalars (`"p/q"` strings) and
//! renders as a plain-text table through `Display`; both views come from the
//! same value. Node, generator and arc indices are 1-based here.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::matrix::{TropMatrix, TropVector};
use crate::ranks::{permanent, rank_report, CappedRank};
use crate::scalar::{decimal_expansion, Trop};
use crate::semigroup::{decide_max_ultimate_rank, semigroup_oracle, GeneratorSet};
use crate::spectral::{critical_graph, eigen_basis_from, projective_power_orbit, OrbitOutcome};
use crate::ultimate::{has_max_ultimate_rank, ultimate_rank_from, ultimate_rank_oracle, UltimateOracle};

/// An exact scalar with a decimal rendering when one terminates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scalar {
    pub exact: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
}

impl From<Trop> for Scalar {
    fn from(t: Trop) -> Self {
        let decimal = t
            .value()
            .filter(|v| !v.is_integer())
            .and_then(|v| decimal_expansion(&v));
        Scalar {
            exact: t.to_string(),
            decimal,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.decimal {
            Some(d) => write!(f, "{} (= {d})", self.exact),
            None => f.write_str(&self.exact),
        }
    }
}

fn one_based(nodes: &[usize]) -> Vec<usize> {
    nodes.iter().map(|v| v + 1).collect()
}

fn vector_strings(v: &TropVector) -> Vec<String> {
    v.0.iter().map(Trop::to_string).collect()
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn arc_list(arcs: &[[usize; 2]]) -> String {
    if arcs.is_empty() {
        return "none".into();
    }
    arcs.iter()
        .map(|[i, j]| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tri(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "holds",
        Some(false) => "fails",
        None => "undefined",
    }
}

/// One report per subcommand.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum StructuredReport {
    Spectral(SpectralReport),
    Ranks(RanksReport),
    Urank(UrankReport),
    Semigroup(SemigroupReport),
    Powers(PowersReport),
}

impl fmt::Display for StructuredReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuredReport::Spectral(r) => r.fmt(f),
            StructuredReport::Ranks(r) => r.fmt(f),
            StructuredReport::Urank(r) => r.fmt(f),
            StructuredReport::Semigroup(r) => r.fmt(f),
            StructuredReport::Powers(r) => r.fmt(f),
        }
    }
}

// ---------------------------------------------------------------- spectral

#[derive(Clone, Debug, Serialize)]
pub struct ComponentEntry {
    pub nodes: Vec<usize>,
    pub cycle_mean: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalComponentEntry {
    pub nodes: Vec<usize>,
    pub cyclicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub n: usize,
    pub rho: Scalar,
    /// Non-trivial strongly connected components of `G(A)`.
    pub components: Vec<ComponentEntry>,
    pub critical_nodes: Vec<usize>,
    pub critical_arcs: Vec<[usize; 2]>,
    pub critical_components: Vec<CriticalComponentEntry>,
    /// lcm of the critical cyclicities (0 when there are none).
    pub critical_cyclicity: usize,
    pub eigenvectors: Vec<Vec<String>>,
}

pub fn spectral_report(a: &TropMatrix) -> Result<SpectralReport> {
    let data = critical_graph(a)?;
    let components = data
        .graph_scc
        .components
        .iter()
        .enumerate()
        .filter(|&(idx, _)| !data.graph_scc.trivial[idx])
        .map(|(idx, nodes)| ComponentEntry {
            nodes: one_based(nodes),
            cycle_mean: data.component_means[idx].into(),
        })
        .collect();
    let critical_components: Vec<CriticalComponentEntry> = data
        .critical_components
        .iter()
        .map(|c| CriticalComponentEntry {
            nodes: one_based(&c.nodes),
            cyclicity: c.cyclicity,
        })
        .collect();
    let critical_cyclicity = critical_components
        .iter()
        .map(|c| c.cyclicity)
        .reduce(num_integer::lcm)
        .unwrap_or(0);
    let eigenvectors = if data.rho.is_finite() {
        eigen_basis_from(a, &data)?
            .generators
            .iter()
            .map(vector_strings)
            .collect()
    } else {
        Vec::new()
    };
    Ok(SpectralReport {
        n: a.rows(),
        rho: data.rho.into(),
        components,
        critical_nodes: one_based(&data.critical_nodes()),
        critical_arcs: data.critical_arcs().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
        critical_components,
        critical_cyclicity,
        eigenvectors,
    })
}

impl fmt::Display for SpectralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size                 {0}x{0}", self.n)?;
        writeln!(f, "max cycle mean       {}", self.rho)?;
        writeln!(f, "components of G(A)   {}", self.components.len())?;
        for c in &self.components {
            writeln!(f, "  {{{}}}  cycle mean {}", join(&c.nodes, ","), c.cycle_mean)?;
        }
        writeln!(f, "critical nodes       {}", join(&self.critical_nodes, " "))?;
        writeln!(f, "critical arcs        {}", arc_list(&self.critical_arcs))?;
        writeln!(f, "critical components  {}", self.critical_components.len())?;
        for c in &self.critical_components {
            writeln!(f, "  {{{}}}  cyclicity {}", join(&c.nodes, ","), c.cyclicity)?;
        }
        writeln!(f, "critical cyclicity   {}", self.critical_cyclicity)?;
        writeln!(f, "eigenvectors         {}", self.eigenvectors.len())?;
        for v in &self.eigenvectors {
            writeln!(f, "  ({})", v.join(", "))?;
        }
        Ok(())
    }
}

// ------------------------------------------------------------------- ranks

#[derive(Clone, Debug, Serialize)]
pub struct PermanentEntry {
    pub value: Scalar,
    pub nonsingular: bool,
    /// The unique optimal permutation, `tau[i]` is the column of row `i`.
    pub tau: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RanksReport {
    pub rows: usize,
    pub cols: usize,
    pub column_rank: usize,
    pub row_rank: usize,
    pub tropical_rank: CappedRank,
    pub symmetrized_rank: CappedRank,
    pub brute_max: usize,
    /// Present for square matrices.
    pub permanent: Option<PermanentEntry>,
}

pub fn ranks_report(a: &TropMatrix, brute_max: usize) -> Result<RanksReport> {
    let ranks = rank_report(a, brute_max)?;
    let permanent = if a.is_square() {
        let cert = permanent(a)?;
        Some(PermanentEntry {
            value: cert.permanent.into(),
            nonsingular: cert.is_nonsingular(),
            tau: cert.tau.as_deref().map(one_based),
        })
    } else {
        None
    };
    Ok(RanksReport {
        rows: a.rows(),
        cols: a.cols(),
        column_rank: ranks.column_rank,
        row_rank: ranks.row_rank,
        tropical_rank: ranks.tropical_rank,
        symmetrized_rank: ranks.symmetrized_rank,
        brute_max,
        permanent,
    })
}

impl fmt::Display for RanksReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size              {}x{}", self.rows, self.cols)?;
        writeln!(f, "column rank       {}", self.column_rank)?;
        writeln!(f, "row rank          {}", self.row_rank)?;
        writeln!(f, "tropical rank     {}", self.tropical_rank)?;
        writeln!(f, "symmetrized rank  {}", self.symmetrized_rank)?;
        if let Some(p) = &self.permanent {
            writeln!(f, "permanent         {}", p.value)?;
            writeln!(f, "non-singular      {}", yes_no(p.nonsingular))?;
            if let Some(tau) = &p.tau {
                writeln!(f, "tau               {}", join(tau, " "))?;
            }
        }
        Ok(())
    }
}

// ----------------------------------------------------------- ultimate rank

#[derive(Clone, Debug, Serialize)]
pub struct UrankOracleEntry {
    /// `closed`, `inconclusive (non-torsion)` or `inconclusive (step limit)`.
    pub label: String,
    #[serde(flatten)]
    pub outcome: UltimateOracle,
    /// Whether the oracle value matches the formula (absent if inconclusive).
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UrankReport {
    pub n: usize,
    pub ultimate_rank: usize,
    pub critical_scc_count: usize,
    pub per_scc_cyclicities: Vec<usize>,
    pub acyclic: bool,
    pub max_ultimate_rank: bool,
    pub oracle: Option<UrankOracleEntry>,
}

/// `oracle_steps` runs the power-orbit cross-check with that step limit.
pub fn urank_report(a: &TropMatrix, oracle_steps: Option<usize>) -> Result<UrankReport> {
    let data = critical_graph(a)?;
    let urk = ultimate_rank_from(&data);
    let max = has_max_ultimate_rank(a)?;
    let oracle = match oracle_steps {
        Some(steps) if !a.is_null() => {
            let outcome = ultimate_rank_oracle(a, steps)?;
            let label = match &outcome {
                UltimateOracle::Closed { .. } => "closed".to_string(),
                UltimateOracle::Inconclusive {
                    torsion_hypothesis: false,
                    ..
                } => "inconclusive (non-torsion)".to_string(),
                UltimateOracle::Inconclusive { .. } => "inconclusive (step limit)".to_string(),
            };
            let agrees = outcome.value().map(|v| v == urk.value);
            Some(UrankOracleEntry {
                label,
                outcome,
                agrees,
            })
        }
        _ => None,
    };
    Ok(UrankReport {
        n: a.rows(),
        ultimate_rank: urk.value,
        critical_scc_count: urk.critical_scc_count,
        per_scc_cyclicities: urk.per_scc_cyclicities,
        acyclic: urk.acyclic,
        max_ultimate_rank: max.holds,
        oracle,
    })
}

impl fmt::Display for UrankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size                  {0}x{0}", self.n)?;
        writeln!(f, "ultimate rank         {}", self.ultimate_rank)?;
        writeln!(f, "critical components   {}", self.critical_scc_count)?;
        writeln!(f, "cyclicities           {}", join(&self.per_scc_cyclicities, " "))?;
        if self.acyclic {
            writeln!(f, "acyclic               yes (nilpotent)")?;
        }
        writeln!(f, "maximal ultimate rank {}", yes_no(self.max_ultimate_rank))?;
        if let Some(o) = &self.oracle {
            match &o.outcome {
                UltimateOracle::Closed {
                    value,
                    preperiod,
                    period,
                } => writeln!(
                    f,
                    "oracle                {} = {value} (preperiod {preperiod}, period {period}), {}",
                    o.label,
                    if o.agrees == Some(true) { "agrees" } else { "DISAGREES" }
                )?,
                UltimateOracle::Inconclusive {
                    steps,
                    last_column_rank,
                    ..
                } => writeln!(
                    f,
                    "oracle                {} after {steps} powers, last column rank {last_column_rank}",
                    o.label
                )?,
            }
        }
        Ok(())
    }
}

// --------------------------------------------------------------- semigroup

#[derive(Clone, Debug, Serialize)]
pub struct CulpritEntry {
    pub generator: usize,
    pub arc: [usize; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionC1 {
    pub holds: bool,
    pub failing_generators: Vec<usize>,
    pub ultimate_ranks: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionC2 {
    pub holds: Option<bool>,
    pub rho_envelope: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionC3 {
    pub holds: Option<bool>,
    pub culprits: Vec<CulpritEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupOracleEntry {
    pub max_len: usize,
    pub products_checked: u128,
    pub verdict: bool,
    pub witness_word: Option<Vec<usize>>,
    pub witness_ultimate_rank: Option<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupReport {
    pub n: usize,
    pub generators: usize,
    /// Whether every product has ultimate rank `n`.
    pub verdict: bool,
    pub c1: ConditionC1,
    pub c2: ConditionC2,
    pub c3: ConditionC3,
    pub witness_eigenvector: Option<Vec<String>>,
    pub witness_product: Option<Vec<usize>>,
    pub oracle: Option<SemigroupOracleEntry>,
}

/// `oracle` is `(max_len, product budget)` for the enumeration cross-check.
pub fn semigroup_report(
    generators: Vec<TropMatrix>,
    oracle: Option<(usize, u128)>,
) -> Result<SemigroupReport> {
    let g = GeneratorSet::new(generators)?;
    let mut decision = decide_max_ultimate_rank(&g)?;
    let oracle = match oracle {
        Some((max_len, budget)) => {
            let report = semigroup_oracle(&g, max_len, budget)?;
            decision.attach_oracle(&report);
            Some(SemigroupOracleEntry {
                max_len: report.max_len,
                products_checked: report.products_checked,
                verdict: report.oracle_verdict,
                witness_word: report.witness_word.as_deref().map(one_based),
                witness_ultimate_rank: report.witness_ultimate_rank,
                agrees: report.agree,
            })
        }
        None => None,
    };
    Ok(SemigroupReport {
        n: g.dimension(),
        generators: g.len(),
        verdict: decision.verdict,
        c1: ConditionC1 {
            holds: decision.c1.holds,
            failing_generators: one_based(&decision.c1.failing_generators),
            ultimate_ranks: decision.c1.ultimate_ranks,
        },
        c2: ConditionC2 {
            holds: decision.c2.holds,
            rho_envelope: decision.c2.rho_envelope.into(),
        },
        c3: ConditionC3 {
            holds: decision.c3.holds,
            culprits: decision
                .c3
                .culprits
                .iter()
                .map(|c| CulpritEntry {
                    generator: c.generator + 1,
                    arc: [c.arc.0 + 1, c.arc.1 + 1],
                })
                .collect(),
        },
        witness_eigenvector: decision.witness_eigenvector.as_ref().map(vector_strings),
        witness_product: decision.witness_product.as_deref().map(one_based),
        oracle,
    })
}

impl fmt::Display for SemigroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators     {} of size {1}x{1}", self.generators, self.n)?;
        writeln!(
            f,
            "verdict        {}",
            if self.verdict {
                format!("every product has ultimate rank {}", self.n)
            } else {
                format!("some product has ultimate rank below {}", self.n)
            }
        )?;
        write!(f, "C1             {}", tri(Some(self.c1.holds)))?;
        write!(f, "  (ultimate ranks {})", join(&self.c1.ultimate_ranks, " "))?;
        if !self.c1.failing_generators.is_empty() {
            write!(f, ", failing generators {}", join(&self.c1.failing_generators, " "))?;
        }
        writeln!(f)?;
        writeln!(f, "C2             {}  (rho(M) = {})", tri(self.c2.holds), self.c2.rho_envelope)?;
        write!(f, "C3             {}", tri(self.c3.holds))?;
        if !self.c3.culprits.is_empty() {
            let list: Vec<String> = self
                .c3
                .culprits
                .iter()
                .map(|c| format!("generator {} arc ({},{})", c.generator, c.arc[0], c.arc[1]))
                .collect();
            write!(f, "  ({})", list.join("; "))?;
        }
        writeln!(f)?;
        if let Some(u) = &self.witness_eigenvector {
            writeln!(f, "witness        ({})", u.join(", "))?;
        }
        if let Some(w) = &self.witness_product {
            writeln!(f, "bad product    A{}", join(w, " A"))?;
        }
        if let Some(o) = &self.oracle {
            writeln!(
                f,
                "oracle         {} products up to length {}: {}, {}",
                o.products_checked,
                o.max_len,
                if o.verdict { "none bad" } else { "bad product found" },
                if o.agrees { "agrees" } else { "DISAGREES" }
            )?;
        }
        Ok(())
    }
}

// ------------------------------------------------------------------ powers

#[derive(Clone, Debug, Serialize)]
pub struct PowerStep {
    pub power: usize,
    pub column_rank: usize,
    pub row_rank: usize,
    pub tropical_rank: CappedRank,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PowersOutcome {
    /// `A^(preperiod + period) = growth ⊙ A^preperiod`.
    Closed {
        preperiod: usize,
        period: usize,
        growth: Scalar,
    },
    NotClosed { steps: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct PowersReport {
    pub n: usize,
    pub rho: Scalar,
    pub max_steps: usize,
    pub outcome: PowersOutcome,
    /// Ranks of `A, A², ...`, at most `trace_limit` entries.
    pub trace: Vec<PowerStep>,
    pub powers_formed: usize,
}

pub fn powers_report(
    a: &TropMatrix,
    max_steps: usize,
    trace_limit: usize,
    brute_max: usize,
) -> Result<PowersReport> {
    let rho = critical_graph(a)?.rho;
    let orbit = projective_power_orbit(a, max_steps)?;
    let outcome = match orbit.outcome {
        OrbitOutcome::Closed {
            preperiod,
            period,
            growth,
        } => PowersOutcome::Closed {
            preperiod,
            period,
            growth: growth.into(),
        },
        OrbitOutcome::Exhausted { steps } => PowersOutcome::NotClosed { steps },
    };
    let trace = orbit
        .normalized
        .iter()
        .take(trace_limit)
        .enumerate()
        .map(|(idx, p)| {
            let ranks = rank_report(p, brute_max)?;
            Ok(PowerStep {
                power: idx + 1,
                column_rank: ranks.column_rank,
                row_rank: ranks.row_rank,
                tropical_rank: ranks.tropical_rank,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PowersReport {
        n: a.rows(),
        rho: rho.into(),
        max_steps,
        outcome,
        trace,
        powers_formed: orbit.normalized.len(),
    })
}

impl fmt::Display for PowersReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size            {0}x{0}", self.n)?;
        writeln!(f, "max cycle mean  {}", self.rho)?;
        match &self.outcome {
            PowersOutcome::Closed {
                preperiod,
                period,
                growth,
            } => writeln!(
                f,
                "orbit           closed: A^{} = {growth} + A^{preperiod} (preperiod {preperiod}, period {period})",
                preperiod + period
            )?,
            PowersOutcome::NotClosed { steps } => writeln!(
                f,
                "orbit           not closed within {steps} powers (max steps {})",
                self.max_steps
            )?,
        }
        writeln!(f, "{:>6}  {:>6}  {:>6}  {:>6}", "power", "column", "row", "trop")?;
        for s in &self.trace {
            writeln!(
                f,
                "{:>6}  {:>6}  {:>6}  {:>6}",
                s.power,
                s.column_rank,
                s.row_rank,
                s.tropical_rank.value().map_or("-".to_string(), |v| v.to_string())
            )?;
        }
        if self.trace.len() < self.powers_formed {
            writeln!(f, "({} of {} powers shown)", self.trace.len(), self.powers_formed)?;
        }
        Ok(())
    }
}
