//! Column and row rank: size of the minimal generating set of the tropical
//! convex hull of the columns (rows).

use std::collections::HashSet;

use crate::matrix::TropMatrix;
use crate::scalar::{Rational, Trop};

/// `Q ∪ {-inf, +inf}`, used only for residuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Extended {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// `c - a` with `(-inf) - (-inf) = +inf`, `x - (-inf) = +inf` and
/// `(-inf) - x = -inf`.
fn residual(c: Trop, a: Trop) -> Extended {
    match (c.value(), a.value()) {
        (_, None) => Extended::PosInf,
        (None, Some(_)) => Extended::NegInf,
        (Some(c), Some(a)) => Extended::Finite(c - a),
    }
}

/// Whether `target` is a tropical combination of `generators`, tested by
/// applying the greatest sub-solution `x_j = min_i (c_i - g_ij)`.
fn in_span(target: &[Trop], generators: &[&Vec<Trop>]) -> bool {
    let coefficients: Vec<Extended> = generators
        .iter()
        .map(|g| {
            target
                .iter()
                .zip(g.iter())
                .map(|(&c, &a)| residual(c, a))
                .min()
                .unwrap_or(Extended::PosInf)
        })
        .collect();
    target.iter().enumerate().all(|(i, &c)| {
        let best = generators
            .iter()
            .zip(&coefficients)
            .filter_map(|(g, x)| match x {
                Extended::Finite(x) => Some(g[i].shift(*x)),
                Extended::NegInf => Some(Trop::NEG_INF),
                Extended::PosInf => None,
            })
            .max()
            .unwrap_or(Trop::NEG_INF);
        best == c
    })
}

/// Normalized non-null columns, without projective duplicates.
fn distinct_columns(a: &TropMatrix) -> Vec<Vec<Trop>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for j in 0..a.cols() {
        let column = a.column(j);
        if column.is_null() {
            continue;
        }
        let normalized = column.normalized().0;
        if seen.insert(normalized.clone()) {
            out.push(normalized);
        }
    }
    out
}

/// Number of columns that are not tropical combinations of the other
/// distinct columns. Independent of column order.
pub fn column_rank(a: &TropMatrix) -> usize {
    let columns = distinct_columns(a);
    (0..columns.len())
        .filter(|&k| {
            let others: Vec<&Vec<Trop>> = columns
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, c)| c)
                .collect();
            !in_span(&columns[k], &others)
        })
        .count()
}

pub fn row_rank(a: &TropMatrix) -> usize {
    column_rank(&a.transpose())
}
