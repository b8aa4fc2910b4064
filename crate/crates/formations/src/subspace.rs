//! Subspaces of F^n in canonical reduced row-echelon form.
//!
//! Storing only the canonical basis makes subspace equality structural:
//! two `SubspaceBasis` values are equal exactly when they span the same
//! subspace. Sums, intersections and membership all reduce to Gaussian
//! elimination in exact arithmetic.

use crate::error::{Error, Result};
use crate::matrix::MatrixExact;
use crate::scalar::{FieldTag, Scalar};

/// Row space of a matrix in reduced row-echelon form.
///
/// Invariants: no zero rows, pivot columns strictly increasing, each pivot
/// entry 1 and the only nonzero entry in its column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    rows: MatrixExact,
    pivots: Vec<usize>,
}

/// Reduces `m` in place to reduced row-echelon form; returns pivot columns.
pub fn rref_in_place(m: &mut MatrixExact) -> Vec<usize> {
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        let Some(src) = (pivot_row..nrows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if src != pivot_row {
            for c in 0..ncols {
                let a = m.get(pivot_row, c).clone();
                let b = m.get(src, c).clone();
                m.set(pivot_row, c, b);
                m.set(src, c, a);
            }
        }
        let inv = m.get(pivot_row, col).inverse().expect("nonzero pivot");
        for c in 0..ncols {
            m.set(pivot_row, c, m.get(pivot_row, c).mul(&inv));
        }
        for r in 0..nrows {
            if r == pivot_row || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in 0..ncols {
                let updated = m.get(r, c).sub(&factor.mul(m.get(pivot_row, c)));
                m.set(r, c, updated);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(m: &MatrixExact) -> Option<MatrixExact> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let field = m.field();
    let mut aug = MatrixExact::zero(field, n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n + r, Scalar::one(field));
    }
    let pivots = rref_in_place(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    let mut inv = MatrixExact::zero(field, n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, aug.get(r, n + c).clone());
        }
    }
    Some(inv)
}

/// Canonical reduced row-echelon basis of the row space of `m`.
pub fn rref(m: &MatrixExact) -> SubspaceBasis {
    let mut work = m.clone();
    let pivots = rref_in_place(&mut work);
    let rank = pivots.len();
    let rows = MatrixExact::from_rows(
        m.field(),
        (0..rank).map(|r| work.row(r)).collect(),
    )
    .expect("echelon rows are consistent");
    // a rank-0 result must still remember the column count
    let rows = if rank == 0 {
        MatrixExact::zero(m.field(), 0, m.cols())
    } else {
        rows
    };
    SubspaceBasis {
        ambient_dim: m.cols(),
        rows,
        pivots,
    }
}

impl SubspaceBasis {
    /// The zero subspace of F^n.
    pub fn zero(field: FieldTag, ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            rows: MatrixExact::zero(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    /// The full space F^n.
    pub fn full(field: FieldTag, ambient_dim: usize) -> Self {
        rref(&MatrixExact::identity(field, ambient_dim))
    }

    /// Span of a list of ambient vectors.
    pub fn span(field: FieldTag, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient_dim}",
                    v.len()
                )));
            }
        }
        if vectors.is_empty() {
            return Ok(SubspaceBasis::zero(field, ambient_dim));
        }
        let m = MatrixExact::from_rows(field, vectors.to_vec())?;
        Ok(rref(&m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> FieldTag {
        self.rows.field()
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis_matrix(&self) -> &MatrixExact {
        &self.rows
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.rows.row(r)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; they index a complement of the subspace.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_compatible(&self, other: &SubspaceBasis) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// Canonical basis of A + B.
    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_compatible(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        Ok(rref(&self.rows.vstack(&other.rows)?))
    }

    /// Canonical basis of A ∩ B, by the kernel-of-stacked-basis method:
    /// a vector lies in both row spaces exactly when it can be written as
    /// `Aᵀx = Bᵀy`, so kernel vectors of `[Aᵀ | -Bᵀ]` enumerate A ∩ B.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SubspaceBasis::zero(self.field(), self.ambient_dim));
        }
        let field = self.field();
        let (a, b) = (self.dim(), other.dim());
        let mut stacked = MatrixExact::zero(field, self.ambient_dim, a + b);
        for c in 0..a {
            for r in 0..self.ambient_dim {
                stacked.set(r, c, self.rows.get(c, r).clone());
            }
        }
        for c in 0..b {
            for r in 0..self.ambient_dim {
                stacked.set(r, a + c, other.rows.get(c, r).neg());
            }
        }
        let ker = kernel(&stacked);
        let mut vectors = Vec::new();
        for k in ker.basis_rows() {
            let mut v = vec![Scalar::zero(field); self.ambient_dim];
            for (c, coeff) in k.iter().take(a).enumerate() {
                for (j, entry) in self.rows.row_slice(c).iter().enumerate() {
                    v[j] = v[j].add(&coeff.mul(entry));
                }
            }
            vectors.push(v);
        }
        SubspaceBasis::span(field, self.ambient_dim, &vectors)
    }

    /// Coordinates of `v` in the echelon basis when `v` lies in the
    /// subspace; `None` otherwise.
    pub fn solve(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        for e in v {
            if e.field() != self.field() {
                return Err(Error::FieldMismatch(
                    self.field().to_string(),
                    e.field().to_string(),
                ));
            }
        }
        // pivot columns read the coordinates straight off
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recombined = vec![Scalar::zero(self.field()); self.ambient_dim];
        for (i, c) in coords.iter().enumerate() {
            for (j, entry) in self.rows.row_slice(i).iter().enumerate() {
                recombined[j] = recombined[j].add(&c.mul(entry));
            }
        }
        if recombined == v { Ok(Some(coords)) } else { Ok(None) }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.solve(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool> {
        self.check_compatible(other)?;
        for row in self.basis_rows() {
            if !other.contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical representative of `v` modulo this subspace: subtracts the
    /// pivot components so the result vanishes on all pivot columns. Two
    /// vectors reduce identically exactly when they are congruent.
    pub fn reduce_mod(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let factor = out[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (j, entry) in self.rows.row_slice(i).iter().enumerate() {
                out[j] = out[j].sub(&factor.mul(entry));
            }
        }
        out
    }

    /// Ambient vector with the given coordinates in the echelon basis.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate count");
        let mut v = vec![Scalar::zero(self.field()); self.ambient_dim];
        for (i, c) in coords.iter().enumerate() {
            for (j, entry) in self.rows.row_slice(i).iter().enumerate() {
                v[j] = v[j].add(&c.mul(entry));
            }
        }
        v
    }

    /// Verifies the canonical-form invariants; exercised by tests.
    pub fn check_canonical(&self) -> bool {
        if self.rows.cols() != self.ambient_dim || self.pivots.len() != self.dim() {
            return false;
        }
        let mut last: Option<usize> = None;
        for (i, &p) in self.pivots.iter().enumerate() {
            if let Some(prev) = last {
                if p <= prev {
                    return false;
                }
            }
            last = Some(p);
            if !self.rows.get(i, p).is_one() {
                return false;
            }
            for c in 0..p {
                if !self.rows.get(i, c).is_zero() {
                    return false;
                }
            }
            for r in 0..self.dim() {
                if r != i && !self.rows.get(r, p).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Canonical basis of the null space {x : Mx = 0}.
pub fn kernel(m: &MatrixExact) -> SubspaceBasis {
    let field = m.field();
    let n = m.cols();
    let mut work = m.clone();
    let pivots = rref_in_place(&mut work);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut vectors = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Scalar::zero(field); n];
        v[f] = Scalar::one(field);
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = work.get(i, f).neg();
        }
        vectors.push(v);
    }
    SubspaceBasis::span(field, n, &vectors).expect("kernel vectors are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> MatrixExact {
        MatrixExact::from_integers(FieldTag::Q, rows)
    }

    #[test]
    fn zero_matrix_has_empty_basis() {
        let s = rref(&MatrixExact::zero(FieldTag::Q, 2, 2));
        assert_eq!(s.dim(), 0);
        assert_eq!(s.ambient_dim(), 2);
        assert!(s.check_canonical());
    }

    #[test]
    fn identity_is_already_canonical() {
        let m = MatrixExact::identity(FieldTag::GF(2), 3);
        let s = rref(&m);
        assert_eq!(s.basis_matrix(), &m);
    }

    #[test]
    fn dependent_rows_collapse() {
        // rows (2,4) and (1,2) span the single line through (1,2)
        let s = rref(&q(&[&[2, 4], &[1, 2]]));
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis_matrix(), &q(&[&[1, 2]]));
    }

    #[test]
    fn sum_examples() {
        let e1 = rref(&q(&[&[1, 0, 0]]));
        let e2 = rref(&q(&[&[0, 1, 0]]));
        let zero = SubspaceBasis::zero(FieldTag::Q, 3);
        assert_eq!(e1.sum(&zero).unwrap(), e1);
        let s = e1.sum(&e2).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(e1.is_subspace_of(&s).unwrap() && e2.is_subspace_of(&s).unwrap());
    }

    #[test]
    fn char_two_lines_coincide() {
        // (1,1) and (1,-1) are the same line mod 2
        let a = rref(&MatrixExact::from_integers(FieldTag::GF(2), &[&[1, 1]]));
        let b = rref(&MatrixExact::from_integers(FieldTag::GF(2), &[&[1, -1]]));
        assert_eq!(a.sum(&b).unwrap(), a);
    }

    #[test]
    fn intersect_examples() {
        let a = rref(&q(&[&[1, 0], &[0, 1]]));
        assert_eq!(a.intersect(&a).unwrap(), a);

        let e1 = rref(&q(&[&[1, 0]]));
        let e2 = rref(&q(&[&[0, 1]]));
        assert!(e1.intersect(&e2).unwrap().is_zero());

        // span{(1,0,1),(0,1,0)} ∩ span{(1,1,1)} over GF(3) is span{(1,1,1)}
        let big = rref(&MatrixExact::from_integers(FieldTag::GF(3), &[&[1, 0, 1], &[0, 1, 0]]));
        let line = rref(&MatrixExact::from_integers(FieldTag::GF(3), &[&[1, 1, 1]]));
        assert_eq!(big.intersect(&line).unwrap(), line);
    }

    #[test]
    fn solve_reads_coordinates() {
        let s = rref(&q(&[&[1, 2]]));
        let zero = vec![Scalar::zero(FieldTag::Q); 2];
        assert_eq!(s.solve(&zero).unwrap(), Some(vec![Scalar::zero(FieldTag::Q)]));
        let v = vec![Scalar::from_integer(FieldTag::Q, 3), Scalar::from_integer(FieldTag::Q, 6)];
        assert_eq!(s.solve(&v).unwrap(), Some(vec![Scalar::from_integer(FieldTag::Q, 3)]));
        let off = vec![Scalar::from_integer(FieldTag::Q, 3), Scalar::from_integer(FieldTag::Q, 5)];
        assert_eq!(s.solve(&off).unwrap(), None);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = kernel(&MatrixExact::identity(FieldTag::Q, 3));
        assert!(k.is_zero());
    }

    #[test]
    fn kernel_annihilates() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for row in k.basis_rows() {
            assert!(m.apply(&row).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn reduce_mod_kills_members() {
        let s = rref(&q(&[&[1, 0, 2], &[0, 1, 1]]));
        for row in s.basis_rows() {
            assert!(s.reduce_mod(&row).iter().all(Scalar::is_zero));
        }
        let v = vec![
            Scalar::from_integer(FieldTag::Q, 1),
            Scalar::from_integer(FieldTag::Q, 1),
            Scalar::from_integer(FieldTag::Q, 0),
        ];
        let reduced = s.reduce_mod(&v);
        // residue lives on the non-pivot column
        assert!(reduced[0].is_zero() && reduced[1].is_zero());
        assert_eq!(reduced[2], Scalar::from_integer(FieldTag::Q, -3));
    }
}
