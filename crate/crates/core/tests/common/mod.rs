//! Brute-force oracles and random generators shared by the integration
//! tests. Everything here is deliberately naive: enumeration of circuits,
//! permutations and reachability, independent of the library algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use maxplus::{Rational, Trop, TropMatrix, TropVector};
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n as i128, d as i128)
}

/// Entries drawn uniformly from `lo..=hi`, each replaced by `-inf` with
/// probability `p_inf`.
pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
    p_inf: f64,
) -> TropMatrix {
    TropMatrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(p_inf) {
            Trop::NEG_INF
        } else {
            Trop::int(rng.gen_range(lo..=hi))
        }
    })
}

/// Like [`random_matrix`] but entries are halves, `k/2` with `k` in
/// `2 lo ..= 2 hi`.
pub fn random_half_matrix(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64, p_inf: f64) -> TropMatrix {
    TropMatrix::from_fn(n, n, |_, _| {
        if rng.gen_bool(p_inf) {
            Trop::NEG_INF
        } else {
            Trop::ratio(rng.gen_range(2 * lo..=2 * hi), 2)
        }
    })
}

pub fn random_finite_vector(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> TropVector {
    TropVector((0..n).map(|_| Trop::int(rng.gen_range(lo..=hi))).collect())
}

/// A matrix of maximal ultimate rank: a permutation of zeros, everything
/// else at most `-1` (or `-inf`), then a random conjugation and shift.
pub fn random_max_urk(rng: &mut ChaCha8Rng, n: usize) -> TropMatrix {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let base = TropMatrix::from_fn(n, n, |i, j| {
        if sigma[i] == j {
            Trop::ZERO
        } else if rng.gen_bool(0.25) {
            Trop::NEG_INF
        } else {
            Trop::int(rng.gen_range(-4..=-1))
        }
    });
    let u = random_finite_vector(rng, n, -3, 3);
    let shift = q(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    base.conjugate(&u).unwrap().shift(shift)
}

/// All simple circuits as node sequences, each listed once (starting at its
/// smallest node).
pub fn simple_circuits(a: &TropMatrix) -> Vec<Vec<usize>> {
    let n = a.rows();
    let mut out = Vec::new();
    fn extend(
        a: &TropMatrix,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for next in start..a.rows() {
            if a.get(last, next).is_neg_inf() {
                continue;
            }
            if next == start {
                out.push(path.clone());
            } else if !on_path[next] {
                on_path[next] = true;
                path.push(next);
                extend(a, start, path, on_path, out);
                path.pop();
                on_path[next] = false;
            }
        }
    }
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        extend(a, s, &mut vec![s], &mut on_path, &mut out);
    }
    out
}

pub fn circuit_arcs(c: &[usize]) -> Vec<(usize, usize)> {
    (0..c.len()).map(|k| (c[k], c[(k + 1) % c.len()])).collect()
}

pub fn circuit_mean(a: &TropMatrix, c: &[usize]) -> Rational {
    let total: Rational = circuit_arcs(c)
        .iter()
        .map(|&(i, j)| a.get(i, j).value().unwrap())
        .sum();
    total / Rational::from_integer(c.len() as i128)
}

pub fn brute_rho(a: &TropMatrix) -> Trop {
    simple_circuits(a)
        .iter()
        .map(|c| Trop::finite(circuit_mean(a, c)))
        .fold(Trop::NEG_INF, Trop::oplus)
}

pub fn critical_circuits(a: &TropMatrix) -> Vec<Vec<usize>> {
    let Some(rho) = brute_rho(a).value() else {
        return Vec::new();
    };
    simple_circuits(a)
        .into_iter()
        .filter(|c| circuit_mean(a, c) == rho)
        .collect()
}

pub fn brute_critical_arcs(a: &TropMatrix) -> BTreeSet<(usize, usize)> {
    critical_circuits(a)
        .iter()
        .flat_map(|c| circuit_arcs(c))
        .collect()
}

/// Ultimate rank from critical circuits alone: group circuits sharing a
/// node, take the gcd of circuit lengths in each group, sum.
pub fn brute_ultimate_rank(a: &TropMatrix) -> usize {
    let circuits = critical_circuits(a);
    let mut groups: Vec<(BTreeSet<usize>, usize)> = Vec::new();
    for c in &circuits {
        let nodes: BTreeSet<usize> = c.iter().copied().collect();
        let mut merged = (nodes, c.len());
        let mut rest = Vec::new();
        for g in groups.drain(..) {
            if g.0.is_disjoint(&merged.0) {
                rest.push(g);
            } else {
                merged.0.extend(g.0);
                merged.1 = merged.1.gcd(&g.1);
            }
        }
        rest.push(merged);
        groups = rest;
    }
    groups.iter().map(|g| g.1).sum()
}

/// `(per(A), number of maximizing permutations, one maximizer)`.
pub fn brute_permanent(a: &TropMatrix) -> (Trop, usize, Option<Vec<usize>>) {
    let n = a.rows();
    let mut best = Trop::NEG_INF;
    let mut count = 0;
    let mut arg = None;
    for p in (0..n).permutations(n) {
        let w = p
            .iter()
            .enumerate()
            .fold(Trop::ZERO, |acc, (i, &j)| acc.otimes(a.get(i, j)));
        if w.is_neg_inf() {
            continue;
        }
        if w > best {
            best = w;
            count = 1;
            arg = Some(p);
        } else if w == best {
            count += 1;
        }
    }
    (best, count, arg)
}

pub fn brute_nonsingular(a: &TropMatrix) -> bool {
    let (per, count, _) = brute_permanent(a);
    per.is_finite() && count == 1
}

/// Transitive closure of the support graph (`reach[i][j]`: a non-empty
/// path from `i` to `j`).
pub fn reachability(n: usize, has_arc: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    let mut reach: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| has_arc(i, j)).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

/// Column `c` lies in the span of `others` iff every finite coordinate of
/// `c` is attained by some scaled generator lying below `c`.
pub fn covered(c: &[Trop], others: &[Vec<Trop>]) -> bool {
    c.iter().enumerate().all(|(i, ci)| {
        let Some(ci) = ci.value() else { return true };
        others.iter().any(|s| {
            let Some(si) = s[i].value() else { return false };
            let lambda = ci - si;
            s.iter()
                .zip(c)
                .all(|(sk, ck)| sk.shift(lambda) <= *ck)
        })
    })
}

fn projectively_equal(x: &[Trop], y: &[Trop]) -> bool {
    let mut diff = None;
    for (a, b) in x.iter().zip(y) {
        match (a.value(), b.value()) {
            (None, None) => {}
            (Some(a), Some(b)) => {
                let d = a - b;
                if diff.is_some_and(|e| e != d) {
                    return false;
                }
                diff = Some(d);
            }
            _ => return false,
        }
    }
    true
}

/// Size of the minimal generating set of the columns.
pub fn brute_column_rank(a: &TropMatrix) -> usize {
    let mut cols: Vec<Vec<Trop>> = Vec::new();
    for j in 0..a.cols() {
        let col = a.column(j).0;
        if col.iter().all(Trop::is_neg_inf) {
            continue;
        }
        // keep one representative per projective class
        let equivalent = cols.iter().any(|other| projectively_equal(other, &col));
        if !equivalent {
            cols.push(col);
        }
    }
    (0..cols.len())
        .filter(|&k| {
            let others: Vec<Vec<Trop>> = cols
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != k)
                .map(|(_, c)| c.clone())
                .collect();
            !covered(&cols[k], &others)
        })
        .count()
}

pub fn brute_row_rank(a: &TropMatrix) -> usize {
    brute_column_rank(&a.transpose())
}

/// Largest `r` with a non-singular `r x r` submatrix, by permutation
/// enumeration.
pub fn brute_tropical_rank(a: &TropMatrix) -> usize {
    let k = a.rows().min(a.cols());
    for r in (1..=k).rev() {
        for rows in (0..a.rows()).combinations(r) {
            for cols in (0..a.cols()).combinations(r) {
                if brute_nonsingular(&a.submatrix(&rows, &cols)) {
                    return r;
                }
            }
        }
    }
    0
}

/// Prints one result line and returns whether the criterion passed.
pub fn report(criterion: usize, title: &str, pass: bool, detail: &str) -> bool {
    println!(
        "criterion {criterion:>2} [{}] {title}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}
