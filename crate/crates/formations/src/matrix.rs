//! Dense exact matrices over a single field.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldTag, Scalar};

/// A rows x cols matrix with all entries in one field.
///
/// The field tag is stored explicitly so that empty matrices (zero rows)
/// still know their field. Entries are row-major. Matrices act on column
/// vectors: `apply(v)[r] = sum_c m[r][c] v[c]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixExact {
    field: FieldTag,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixExact {
    /// Builds a matrix from a row-major entry list, checking that every
    /// entry lies in `field`.
    pub fn new(field: FieldTag, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), e.field().to_string()));
            }
        }
        Ok(MatrixExact {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(field: FieldTag, rows: usize, cols: usize) -> Self {
        MatrixExact {
            field,
            rows,
            cols,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldTag, n: usize) -> Self {
        let mut m = MatrixExact::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: FieldTag, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
        }
        MatrixExact::new(field, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds from integer entries; handy in tests and the built-in catalog.
    pub fn from_integers(field: FieldTag, rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&n| Scalar::from_integer(field, n)))
            .collect();
        MatrixExact::new(field, nrows, ncols, entries).expect("consistent integer rows")
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "entry outside the matrix field");
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn row_slice(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> MatrixExact {
        let mut out = MatrixExact::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> MatrixExact {
        MatrixExact {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn add(&self, other: &MatrixExact) -> Result<MatrixExact> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        MatrixExact::new(self.field, self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &MatrixExact) -> Result<MatrixExact> {
        self.add(&other.neg())
    }

    fn check_same_shape(&self, other: &MatrixExact) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &MatrixExact) -> Result<MatrixExact> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = MatrixExact::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Scalar::zero(self.field);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = Scalar::zero(self.field);
            for (c, entry) in v.iter().enumerate() {
                acc = acc.add(&self.get(r, c).mul(entry));
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatrixExact) -> Result<MatrixExact> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                "vstack needs equal column counts over one field".into(),
            ));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        MatrixExact::new(self.field, self.rows + other.rows, self.cols, entries)
    }

    pub fn scale(&self, c: &Scalar) -> MatrixExact {
        MatrixExact {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }
}

impl fmt::Display for MatrixExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_field_entries_rejected() {
        let entries = vec![Scalar::one(FieldTag::Q), Scalar::one(FieldTag::GF(2))];
        let err = MatrixExact::new(FieldTag::Q, 1, 2, entries).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch(..)));
    }

    #[test]
    fn multiply_and_apply_agree() {
        let a = MatrixExact::from_integers(FieldTag::Q, &[&[1, 2], &[3, 4]]);
        let b = MatrixExact::from_integers(FieldTag::Q, &[&[0, 1], &[1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, MatrixExact::from_integers(FieldTag::Q, &[&[2, 1], &[4, 3]]));
        // (AB)v computed directly matches A(Bv)
        let v = vec![Scalar::rational(1, 2), Scalar::from_integer(FieldTag::Q, -3)];
        let direct = ab.apply(&v).unwrap();
        let nested = a.apply(&b.apply(&v).unwrap()).unwrap();
        assert_eq!(direct, nested);
    }

    #[test]
    fn gf2_wraps_in_products() {
        let a = MatrixExact::from_integers(FieldTag::GF(2), &[&[1, 1], &[0, 1]]);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, MatrixExact::identity(FieldTag::GF(2), 2));
    }
}
