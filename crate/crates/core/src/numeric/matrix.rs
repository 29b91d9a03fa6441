use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use super::scalar::{denominator_lcm, FieldScalar, ScalarKind};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact scalars sharing one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldScalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<FieldScalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(first) = entries.first() {
            let kind = first.kind();
            if entries.iter().any(|e| e.kind() != kind) {
                return Err(Error::KindMismatch("mixed scalar kinds in matrix".into()));
            }
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<FieldScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        ExactMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|row| row.as_ref().iter().map(|&v| FieldScalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize, kind: ScalarKind) -> Self {
        let mut entries = vec![FieldScalar::integer_in(kind, 0); n * n];
        for i in 0..n {
            entries[i * n + i] = FieldScalar::integer_in(kind, 1);
        }
        ExactMatrix {
            rows: n,
            cols: n,
            entries,
        }
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

    /// Scalar kind of the entries, `None` for an empty matrix.
    pub fn kind(&self) -> Option<ScalarKind> {
        self.entries.first().map(FieldScalar::kind)
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[FieldScalar]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn column(&self, j: usize) -> Vec<FieldScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[FieldScalar] {
        &self.entries
    }

    /// Exact product `self * other`.
    pub fn mat_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if let (Some(a), Some(b)) = (self.kind(), other.kind()) {
            if a != b {
                return Err(Error::KindMismatch(format!("{a:?} vs {b:?}")));
            }
        }
        let kind = self.kind().or(other.kind()).unwrap_or(ScalarKind::Rational);
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = FieldScalar::integer_in(kind, 0);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j))?)?;
                }
                out.push(acc);
            }
        }
        ExactMatrix::new(self.rows, other.cols, out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vector(&self, v: &[FieldScalar]) -> Result<Vec<FieldScalar>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        (0..self.cols)
            .map(|j| {
                let mut acc = self.get(0, j).zero_like();
                for (i, x) in v.iter().enumerate() {
                    acc = acc.add(&x.mul(self.get(i, j))?)?;
                }
                Ok(acc)
            })
            .collect()
    }

    /// Exact determinant. Rational input goes through fraction-free
    /// elimination after clearing denominators; residues use plain
    /// Gaussian elimination in the prime field.
    pub fn det_exact(&self) -> Result<FieldScalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        match self.kind() {
            None => Ok(FieldScalar::int(1)),
            Some(ScalarKind::Rational) => {
                let rats: Vec<&BigRational> = self
                    .entries
                    .iter()
                    .filter_map(FieldScalar::as_rational)
                    .collect();
                let lcm = denominator_lcm(rats.iter().copied());
                let ints: Vec<Vec<BigInt>> = rats
                    .chunks(self.cols)
                    .map(|row| {
                        row.iter()
                            .map(|r| (*r * BigRational::from_integer(lcm.clone())).to_integer())
                            .collect()
                    })
                    .collect();
                let det = bareiss_det(ints);
                let scale = num_traits::pow(lcm, self.rows);
                Ok(FieldScalar::Rational(BigRational::new(det, scale)))
            }
            Some(ScalarKind::Modular(_)) => gauss_det(self.clone()),
        }
    }

    /// Canonical serialization: an array of rows of scalar strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(
                        self.row(i)
                            .iter()
                            .map(|x| Value::String(x.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("matrix JSON must be an array of arrays of strings".into());
        let rows = v.as_array().ok_or_else(bad)?;
        let parsed = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_str().ok_or_else(bad)?.parse())
                    .collect::<Result<Vec<FieldScalar>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_rows(parsed)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
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

/// Fraction-free (Bareiss) determinant of a square integer matrix.
/// Every division in the inner loop is exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of a square matrix with machine-integer entries.
pub fn int_det<R: AsRef<[i64]>>(rows: &[R]) -> BigInt {
    bareiss_det(
        rows.iter()
            .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
}

fn gauss_det(mut m: ExactMatrix) -> Result<FieldScalar> {
    let n = m.rows;
    let one = m.entries[0].one_like();
    let mut det = one;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m.get(i, k).is_zero()) else {
            return Ok(det.zero_like());
        };
        if p != k {
            for j in 0..n {
                m.entries.swap(p * n + j, k * n + j);
            }
            det = det.neg();
        }
        let pivot = m.get(k, k).clone();
        det = det.mul(&pivot)?;
        let inv = pivot.inv()?;
        for i in k + 1..n {
            let factor = m.get(i, k).mul(&inv)?;
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let v = m.get(i, j).sub(&factor.mul(m.get(k, j))?)?;
                m.entries[i * n + j] = v;
            }
        }
    }
    Ok(det)
}
