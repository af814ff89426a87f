//! Dense max-plus matrices and vectors.

use std::fmt;
use std::ops::Index;


use crate::error::{Error, Result};
use crate::scalar::{Rational, Trop};

/// A dense `rows x cols` matrix over the max-plus semiring, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Trop>,
}

/// A vector over the max-plus semiring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropVector(pub Vec<Trop>);

/// Normal form of a matrix up to tropical scaling.
///
/// `normalized` has maximum finite entry exactly 0 (unless null) and
/// `original = shift ⊙ normalized`. Two matrices are tropically equivalent
/// iff their normalized parts are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveForm {
    pub normalized: TropMatrix,
    /// The maximum finite entry, or `-inf` for the null matrix.
    pub shift: Trop,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Trop>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Trop>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        TropMatrix::new(n, m, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from integer rows, `None` standing for `-inf`.
    pub fn from_int_rows(rows: &[Vec<Option<i64>>]) -> Result<Self> {
        TropMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| x.map_or(Trop::NEG_INF, Trop::int)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Trop) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        TropMatrix { rows, cols, data }
    }

    /// The all-`-inf` matrix.
    pub fn null(rows: usize, cols: usize) -> Self {
        TropMatrix::from_fn(rows, cols, |_, _| Trop::NEG_INF)
    }

    /// Zero diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Self {
        TropMatrix::from_fn(n, n, |i, j| if i == j { Trop::ZERO } else { Trop::NEG_INF })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Trop {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Trop) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Trop] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Trop] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> TropVector {
        TropVector((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn transpose(&self) -> TropMatrix {
        TropMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_null(&self) -> bool {
        self.data.iter().all(Trop::is_neg_inf)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(Trop::is_finite)
    }

    /// Largest entry (`-inf` for the null matrix).
    pub fn max_entry(&self) -> Trop {
        self.data.iter().copied().max().unwrap_or(Trop::NEG_INF)
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &TropMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a <= b)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> TropMatrix {
        TropMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Entrywise maximum `self ∨ other`.
    pub fn oplus(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.oplus(*b))
            .collect();
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Max-plus product `self ⊙ other`.
    pub fn otimes(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, inner, m) = (self.rows, self.cols, other.cols);
        let mut out: Vec<Option<Rational>> = vec![None; n * m];
        for i in 0..n {
            let out_row = &mut out[i * m..(i + 1) * m];
            for k in 0..inner {
                let Some(a) = self.get(i, k).value() else {
                    continue;
                };
                for (slot, b) in out_row.iter_mut().zip(other.row(k)) {
                    if let Some(b) = b.value() {
                        let cand = a + b;
                        match slot {
                            Some(cur) if *cur >= cand => {}
                            _ => *slot = Some(cand),
                        }
                    }
                }
            }
        }
        Ok(TropMatrix {
            rows: n,
            cols: m,
            data: out
                .into_iter()
                .map(|v| v.map_or(Trop::NEG_INF, Trop::finite))
                .collect(),
        })
    }

    /// `self ⊙ v`.
    pub fn apply(&self, v: &TropVector) -> Result<TropVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(TropVector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(&v.0)
                        .map(|(a, x)| a.otimes(*x))
                        .max()
                        .unwrap_or(Trop::NEG_INF)
                })
                .collect(),
        ))
    }

    /// `lambda ⊙ self`.
    pub fn scale(&self, lambda: Trop) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.otimes(lambda)).collect(),
        }
    }

    /// Adds a finite rational to every entry.
    pub fn shift(&self, by: Rational) -> TropMatrix {
        self.scale(Trop::finite(by))
    }

    /// `self^w` for `w >= 1`.
    pub fn power(&self, w: usize) -> Result<TropMatrix> {
        self.require_square()?;
        assert!(w >= 1, "power must be at least 1");
        let mut result = self.clone();
        for _ in 1..w {
            result = result.otimes(self)?;
        }
        Ok(result)
    }

    pub fn projective_form(&self) -> ProjectiveForm {
        let shift = self.max_entry();
        let normalized = match shift.value() {
            Some(s) => self.shift(-s),
            None => self.clone(),
        };
        ProjectiveForm { normalized, shift }
    }

    /// `diag(-u) ⊙ self ⊙ diag(u)`, i.e. entries `A_ij + u_j - u_i`.
    pub fn conjugate(&self, u: &TropVector) -> Result<TropMatrix> {
        let n = self.require_square()?;
        let u = u.finite_values()?;
        if u.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "conjugating {n}x{n} matrix by vector of length {}",
                u.len()
            )));
        }
        Ok(TropMatrix::from_fn(n, n, |i, j| {
            self.get(i, j).shift(u[j] - u[i])
        }))
    }
}

impl Index<(usize, usize)> for TropMatrix {
    type Output = Trop;

    fn index(&self, (i, j): (usize, usize)) -> &Trop {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(Trop::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = cells[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl TropVector {
    pub fn from_ints(values: &[i64]) -> Self {
        TropVector(values.iter().map(|&v| Trop::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(Trop::is_finite)
    }

    pub fn is_null(&self) -> bool {
        self.0.iter().all(Trop::is_neg_inf)
    }

    /// The finite entries, or an error naming the first `-inf`.
    pub fn finite_values(&self) -> Result<Vec<Rational>> {
        self.0
            .iter()
            .enumerate()
            .map(|(index, x)| x.value().ok_or(Error::NonFiniteVector { index }))
            .collect()
    }

    pub fn scale(&self, lambda: Trop) -> TropVector {
        TropVector(self.0.iter().map(|x| x.otimes(lambda)).collect())
    }

    pub fn oplus(&self, other: &TropVector) -> TropVector {
        assert_eq!(self.len(), other.len());
        TropVector(self.0.iter().zip(&other.0).map(|(a, b)| a.oplus(*b)).collect())
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &TropVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Normalizes so that the maximum entry is 0 (null vectors unchanged).
    pub fn normalized(&self) -> TropVector {
        match self.0.iter().copied().max().and_then(|m| m.value()) {
            Some(m) => TropVector(self.0.iter().map(|x| x.shift(-m)).collect()),
            None => self.clone(),
        }
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Trop::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl serde::Serialize for TropMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

impl serde::Serialize for TropVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// `A ∨ B`.
pub fn trop_add(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    a.oplus(b)
}

/// `A ⊙ B`.
pub fn trop_mul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    a.otimes(b)
}

/// `λ ⊙ A`.
pub fn scalar_mul(lambda: Trop, a: &TropMatrix) -> TropMatrix {
    a.scale(lambda)
}

pub fn projective_form(a: &TropMatrix) -> ProjectiveForm {
    a.projective_form()
}

/// Diagonal matrix with `u` on the diagonal; `u` must be finite.
pub fn diag(u: &TropVector) -> Result<TropMatrix> {
    u.finite_values()?;
    if u.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let n = u.len();
    Ok(TropMatrix::from_fn(n, n, |i, j| {
        if i == j {
            u.0[i]
        } else {
            Trop::NEG_INF
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> TropMatrix {
        TropMatrix::from_int_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| Some(x)).collect())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn add_is_entrywise_max() {
        let a = m(&[&[0, -2], &[1, -1]]);
        let b = m(&[&[-1, 0], &[0, 0]]);
        assert_eq!(trop_add(&a, &b).unwrap(), m(&[&[0, 0], &[1, 0]]));
        assert_eq!(trop_add(&a, &TropMatrix::null(2, 2)).unwrap(), a);
        assert!(trop_add(&a, &TropMatrix::null(2, 3)).is_err());
    }

    #[test]
    fn product_with_null_and_identity() {
        let a = m(&[&[0, -2], &[1, -1]]);
        assert!(trop_mul(&a, &TropMatrix::null(2, 2)).unwrap().is_null());
        assert_eq!(trop_mul(&TropMatrix::identity(2), &a).unwrap(), a);
        assert!(trop_mul(&a, &TropMatrix::null(3, 3)).is_err());
    }

    #[test]
    fn scalar_mul_unit_and_bottom() {
        let a = m(&[&[0, -2], &[1, -1]]);
        assert_eq!(scalar_mul(Trop::ZERO, &a), a);
        assert!(scalar_mul(Trop::NEG_INF, &a).is_null());
    }

    #[test]
    fn projective_form_examples() {
        let a = m(&[&[0, -1], &[-1, 0]]);
        let pf = projective_form(&a);
        assert_eq!(pf.normalized, a);
        assert_eq!(pf.shift, Trop::ZERO);

        let pf = projective_form(&m(&[&[3, 2], &[2, 3]]));
        assert_eq!(pf.normalized, a);
        assert_eq!(pf.shift, Trop::int(3));
        assert_eq!(projective_form(&pf.normalized).normalized, pf.normalized);

        let pf = projective_form(&TropMatrix::null(2, 2));
        assert!(pf.normalized.is_null());
        assert_eq!(pf.shift, Trop::NEG_INF);
    }

    #[test]
    fn diag_rejects_infinite_entries() {
        let u = TropVector(vec![Trop::ZERO, Trop::NEG_INF]);
        assert_eq!(diag(&u), Err(Error::NonFiniteVector { index: 1 }));
        let a = m(&[&[0, -2], &[1, -1]]);
        assert_eq!(
            trop_mul(&diag(&TropVector::from_ints(&[0, 0])).unwrap(), &a).unwrap(),
            a
        );
    }

    #[test]
    fn conjugation_matches_diagonal_products() {
        let a1 = m(&[&[0, -2, -2], &[-2, 0, -2], &[-2, -2, 0]]);
        let u = TropVector::from_ints(&[0, -3, 0]);
        let neg_u = TropVector::from_ints(&[0, 3, 0]);
        let via_products = trop_mul(
            &trop_mul(&diag(&neg_u).unwrap(), &a1).unwrap(),
            &diag(&u).unwrap(),
        )
        .unwrap();
        let a2 = m(&[&[0, -5, -2], &[1, 0, 1], &[-2, -5, 0]]);
        assert_eq!(via_products, a2);
        assert_eq!(a1.conjugate(&u).unwrap(), a2);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(TropMatrix::new(0, 2, vec![]), Err(Error::EmptyMatrix));
        assert!(TropMatrix::new(2, 2, vec![Trop::ZERO; 3]).is_err());
        assert!(TropMatrix::from_rows(vec![vec![Trop::ZERO], vec![]]).is_err());
    }
}
