//! Subspaces in canonical reduced echelon form and quotient coordinates.

use alloc::vec::Vec;

use crate::error::{same_dim, Result};
use crate::matrix::{axpy, is_zero_vector, unit_vector, Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// A subspace of `field^ambient_dim`, stored as the nonzero rows of a reduced
/// row-echelon matrix. Two subspaces are equal iff their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        let basis = (0..ambient_dim).map(|i| unit_vector(field, ambient_dim, i)).collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of arbitrary vectors of length `ambient_dim`.
    pub fn span(field: Field, ambient_dim: usize, vectors: Vec<Vector>) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient_dim);
        }
        let m = Matrix::from_rows(field, ambient_dim, vectors).expect("span vector length");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating the pivot coordinates; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = -&r[p];
            axpy(&mut r, &c, row);
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, vs)
    }

    /// Basis vectors as the rows of a matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, self.basis.clone()).expect("basis shape")
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(self.field, m.rows(), vs)
    }
}

/// Projection onto and section of the quotient `field^ambient_dim / sub`.
///
/// The quotient is identified with the span of the non-pivot coordinates of
/// `sub`, so the section sends the `j`-th quotient basis vector to the `j`-th
/// non-pivot unit vector.
pub fn quotient_basis(ambient_dim: usize, sub: &Subspace) -> Result<(Matrix, Matrix)> {
    same_dim("quotient ambient", sub.ambient_dim, ambient_dim)?;
    let field = sub.field;
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !sub.pivots.contains(c)).collect();
    let mut projection = Matrix::zeros(field, free.len(), ambient_dim);
    let mut section = Matrix::zeros(field, ambient_dim, free.len());
    for (j, &q) in free.iter().enumerate() {
        projection.set(j, q, field.one());
        section.set(q, j, field.one());
        for (row, &p) in sub.basis.iter().zip(&sub.pivots) {
            projection.set(j, p, -&row[q]);
        }
    }
    Ok((projection, section))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn quotient_examples() {
        let q = Field::Rationals;
        let sub = Subspace::span(q, 2, vec![vec![q.int(1), q.int(0)]]);
        let (p, s) = quotient_basis(2, &sub).unwrap();
        assert_eq!(p, Matrix::from_ints(q, &[&[0, 1]]));
        assert_eq!(s, Matrix::from_ints(q, &[&[0], &[1]]));

        let (p, s) = quotient_basis(3, &Subspace::zero(q, 3)).unwrap();
        assert_eq!(p, Matrix::identity(q, 3));
        assert_eq!(s, Matrix::identity(q, 3));

        let (p, s) = quotient_basis(2, &Subspace::full(q, 2)).unwrap();
        assert_eq!((p.rows(), p.cols(), s.rows(), s.cols()), (0, 2, 2, 0));
    }

    #[test]
    fn projection_kills_subspace() {
        let q = Field::Rationals;
        let sub = Subspace::span(q, 3, vec![vec![q.int(1), q.int(2), q.int(3)]]);
        let (p, s) = quotient_basis(3, &sub).unwrap();
        assert!(p.apply(&sub.basis()[0]).iter().all(Scalar::is_zero));
        assert_eq!(p.mul(&s), Matrix::identity(q, 2));
    }
}
