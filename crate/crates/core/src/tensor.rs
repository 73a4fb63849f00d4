//! Structure tensors of bilinear maps between based spaces.

use alloc::vec::Vec;

use crate::error::{same_field, Error, Result};
use crate::matrix::{axpy, unit_vector, zero_vector, Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// Coordinates `c[i][j][k]` of a bilinear map `U × V → W` with
/// `(e_i, f_j) ↦ Σ_k c[i][j][k] g_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    field: Field,
    dims: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl StructureTensor {
    pub fn zeros(field: Field, dims: (usize, usize, usize)) -> StructureTensor {
        StructureTensor {
            field,
            dims,
            data: alloc::vec![field.zero(); dims.0 * dims.1 * dims.2],
        }
    }

    /// Builds a tensor from `(i, j, k, value)` entries; later entries for the
    /// same index overwrite earlier ones.
    pub fn from_sparse(
        field: Field,
        dims: (usize, usize, usize),
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<StructureTensor> {
        let mut t = StructureTensor::zeros(field, dims);
        for (i, j, k, v) in entries {
            if i >= dims.0 || j >= dims.1 || k >= dims.2 {
                return Err(Error::Invalid(alloc::format!(
                    "tensor index ({i}, {j}, {k}) out of range for dims {dims:?}"
                )));
            }
            same_field(field, v.field())?;
            t.set(i, j, k, v);
        }
        Ok(t)
    }

    /// Like [`from_sparse`](Self::from_sparse) with small integer values.
    pub fn from_ints(
        field: Field,
        dims: (usize, usize, usize),
        entries: &[(usize, usize, usize, i64)],
    ) -> StructureTensor {
        StructureTensor::from_sparse(field, dims, entries.iter().map(|&(i, j, k, v)| (i, j, k, field.int(v))))
            .expect("integer tensor entries in range")
    }

    /// The bilinear map `(x, y) ↦ m(x) · y` for a matrix-valued linear map
    /// given as a list of `d3 × d2` matrices, one per basis vector of the
    /// first factor.
    pub fn from_operators(field: Field, d2: usize, d3: usize, ops: &[Matrix]) -> Result<StructureTensor> {
        let mut t = StructureTensor::zeros(field, (ops.len(), d2, d3));
        for (i, m) in ops.iter().enumerate() {
            crate::matrix::check_shape(m, field, d3, d2, "operator")?;
            for j in 0..d2 {
                for k in 0..d3 {
                    t.set(i, j, k, m.get(k, j).clone());
                }
            }
        }
        Ok(t)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dims.1 + j) * self.dims.2
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j) + k;
        self.data[o] = v;
    }

    /// Coordinates of the product of basis vectors `e_i` and `f_j`.
    pub fn slice(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.data[o..o + self.dims.2]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Evaluates the bilinear map on coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.dims.0, "first argument length");
        assert_eq!(y.len(), self.dims.1, "second argument length");
        let mut out = zero_vector(self.field, self.dims.2);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                axpy(&mut out, &ab, self.slice(i, j));
            }
        }
        out
    }

    /// `x` against basis vector `f_j`.
    pub fn apply_right_basis(&self, x: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vector(self.field, self.dims.2);
        for (i, a) in x.iter().enumerate() {
            axpy(&mut out, a, self.slice(i, j));
        }
        out
    }

    /// Basis vector `e_i` against `y`.
    pub fn apply_left_basis(&self, i: usize, y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dims.2);
        for (j, b) in y.iter().enumerate() {
            axpy(&mut out, b, self.slice(i, j));
        }
        out
    }

    /// The matrix of `y ↦ x · y`.
    pub fn left_operator(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dims.2, self.dims.1);
        for j in 0..self.dims.1 {
            let col = self.apply_right_basis(x, j);
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// The matrix of `x ↦ x · y`.
    pub fn right_operator(&self, y: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dims.2, self.dims.0);
        for i in 0..self.dims.0 {
            let col = self.apply_left_basis(i, y);
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, i, v);
            }
        }
        m
    }

    /// Left operator of the basis vector `e_i`.
    pub fn left_basis_operator(&self, i: usize) -> Matrix {
        self.left_operator(&unit_vector(self.field, self.dims.0, i))
    }

    /// Right operator of the basis vector `f_j`.
    pub fn right_basis_operator(&self, j: usize) -> Matrix {
        self.right_operator(&unit_vector(self.field, self.dims.1, j))
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let (_, d2, d3) = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| (o / (d2 * d3), (o / d3) % d2, o % d3, v))
    }

    /// The tensor in new bases. `p1`, `p2` have the new basis vectors of the
    /// two source spaces as columns; `p3_inv` maps old target coordinates to
    /// new ones.
    pub fn change_basis(&self, p1: &Matrix, p2: &Matrix, p3_inv: &Matrix) -> StructureTensor {
        let (d1, d2, d3) = self.dims;
        assert_eq!((p1.rows(), p1.cols()), (d1, d1));
        assert_eq!((p2.rows(), p2.cols()), (d2, d2));
        assert_eq!((p3_inv.rows(), p3_inv.cols()), (d3, d3));
        let mut t = StructureTensor::zeros(self.field, self.dims);
        let cols1: Vec<Vector> = (0..d1).map(|i| p1.column(i)).collect();
        let cols2: Vec<Vector> = (0..d2).map(|j| p2.column(j)).collect();
        for (i, x) in cols1.iter().enumerate() {
            for (j, y) in cols2.iter().enumerate() {
                let v = p3_inv.apply(&self.apply(x, y));
                for (k, s) in v.into_iter().enumerate() {
                    t.set(i, j, k, s);
                }
            }
        }
        t
    }

    /// Swaps the two source factors: `(y, x) ↦ m(x, y)`.
    pub fn swap_arguments(&self) -> StructureTensor {
        let (d1, d2, d3) = self.dims;
        let mut t = StructureTensor::zeros(self.field, (d2, d1, d3));
        for (i, j, k, v) in self.nonzero_entries() {
            t.set(j, i, k, v.clone());
        }
        t
    }

    pub fn neg(&self) -> StructureTensor {
        StructureTensor {
            field: self.field,
            dims: self.dims,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    /// Post-composition with a linear map on the target.
    pub fn map_target(&self, m: &Matrix) -> StructureTensor {
        let (d1, d2, _) = self.dims;
        let mut t = StructureTensor::zeros(self.field, (d1, d2, m.rows()));
        for i in 0..d1 {
            for j in 0..d2 {
                for (k, v) in m.apply(self.slice(i, j)).into_iter().enumerate() {
                    t.set(i, j, k, v);
                }
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operators_match_apply() {
        let q = Field::Rationals;
        let t = StructureTensor::from_ints(q, (2, 2, 2), &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        let x = alloc::vec![q.int(2), q.int(3)];
        let y = alloc::vec![q.int(5), q.int(7)];
        assert_eq!(t.left_operator(&x).apply(&y), t.apply(&x, &y));
        assert_eq!(t.right_operator(&y).apply(&x), t.apply(&x, &y));
    }

    #[test]
    fn sparse_entries_round_trip() {
        let q = Field::Rationals;
        let t = StructureTensor::from_ints(q, (2, 3, 4), &[(1, 2, 3, 5), (0, 1, 2, -1)]);
        let back = StructureTensor::from_sparse(
            q,
            (2, 3, 4),
            t.nonzero_entries().map(|(i, j, k, v)| (i, j, k, v.clone())),
        )
        .unwrap();
        assert_eq!(t, back);
        assert!(StructureTensor::from_ints(q, (1, 1, 1), &[]).is_zero());
    }
}
