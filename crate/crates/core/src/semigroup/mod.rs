//! Ultimate rank of finitely generated semigroups: the decision procedure,
//! its witnesses, and the enumeration oracle used to cross-check it.

mod decision;
mod oracle;
mod visualization;

pub use decision::{
    decide_max_ultimate_rank, witness_check, C1Report, C2Report, C3Culprit, C3Report,
    GeneratorSet, SemigroupDecision,
};
pub use oracle::{default_oracle_length, semigroup_oracle, OracleReport, DEFAULT_PRODUCT_BUDGET};
pub use visualization::{
    fundamental_cell_contains, is_strict_visualization, is_visualization, strict_visualization,
    FundamentalCellQuery,
};

impl SemigroupDecision {
    /// Records the oracle's bad product, if it found one.
    pub fn attach_oracle(&mut self, report: &OracleReport) {
        self.witness_product = report.witness_word.clone();
    }
}
