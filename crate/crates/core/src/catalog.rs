//! Small named structures used as examples and test corpus.

use alloc::vec::Vec;

use crate::algebra::{AModule, CommAlgebra};
use crate::leibniz::{LeibnizAlgebra, LieAlgebra, LieModule};
use crate::matrix::{unit_vector, Matrix};
use crate::scalar::Field;
use crate::tensor::StructureTensor;

/// `k[x]/(x^n)` with basis `1, x, …, x^{n-1}`.
pub fn truncated_poly(field: Field, n: usize) -> CommAlgebra {
    let mut t = StructureTensor::zeros(field, (n, n, n));
    for i in 0..n {
        for j in 0..n - i {
            t.set(i, j, i + j, field.one());
        }
    }
    CommAlgebra::new(t, unit_vector(field, n, 0)).expect("truncated polynomial algebra")
}

/// `k[x]/(x^n + c_{n-1} x^{n-1} + … + c_0)` with basis `1, x, …, x^{n-1}`,
/// where `coeffs = [c_0, …, c_{n-1}]`.
pub fn monic_quotient(field: Field, coeffs: &[i64]) -> CommAlgebra {
    let n = coeffs.len();
    // powers[p] = coordinates of x^p for p < 2n - 1
    let mut powers: Vec<Vec<crate::Scalar>> = Vec::new();
    for p in 0..(2 * n).saturating_sub(1).max(1) {
        if p < n {
            powers.push(unit_vector(field, n, p));
        } else {
            let prev = &powers[p - 1];
            let mut next = crate::matrix::zero_vector(field, n);
            next[1..n].clone_from_slice(&prev[..n - 1]);
            let top = prev[n - 1].clone();
            for (i, c) in coeffs.iter().enumerate() {
                next[i] = &next[i] - &(&top * &field.int(*c));
            }
            powers.push(next);
        }
    }
    let mut t = StructureTensor::zeros(field, (n, n, n));
    for i in 0..n {
        for j in 0..n {
            for (k, v) in powers[i + j].iter().enumerate() {
                t.set(i, j, k, v.clone());
            }
        }
    }
    CommAlgebra::new(t, unit_vector(field, n, 0)).expect("monic quotient algebra")
}

/// `k × k` with the two idempotents as basis; the unit is `(1, 1)`.
pub fn split_pair(field: Field) -> CommAlgebra {
    let t = StructureTensor::from_ints(field, (2, 2, 2), &[(0, 0, 0, 1), (1, 1, 1, 1)]);
    CommAlgebra::new(t, alloc::vec![field.one(), field.one()]).expect("split algebra")
}

/// The 1-dimensional module of an algebra whose first basis vector is the
/// unit and whose other basis vectors act by zero, such as `k[x]/(x^n)`.
pub fn residue_module(a: &CommAlgebra) -> AModule {
    let field = a.field();
    let mut t = StructureTensor::zeros(field, (a.dim(), 1, 1));
    t.set(0, 0, 0, field.one());
    AModule::new(t).expect("residue module")
}

/// The ideal `(x^k)` of `k[x]/(x^n)` as a module with basis `x^k, …, x^{n-1}`,
/// together with its inclusion.
pub fn power_ideal(a_dim: usize, k: usize, field: Field) -> (AModule, Matrix) {
    let d = a_dim - k;
    let mut t = StructureTensor::zeros(field, (a_dim, d, d));
    for i in 0..a_dim {
        for j in 0..d {
            if i + j < d {
                t.set(i, j, i + j, field.one());
            }
        }
    }
    let mut inc = Matrix::zeros(field, a_dim, d);
    for j in 0..d {
        inc.set(k + j, j, field.one());
    }
    (AModule::new(t).expect("power ideal"), inc)
}

/// Two-dimensional Leibniz algebra whose only nonzero bracket is
/// `[e_1, e_1] = e_0`.
pub fn square_line(field: Field) -> LeibnizAlgebra {
    LeibnizAlgebra::new(StructureTensor::from_ints(field, (2, 2, 2), &[(1, 1, 0, 1)])).expect("square line")
}

/// `[x, y] = y`.
pub fn nonabelian2(field: Field) -> LieAlgebra {
    LieAlgebra::new(StructureTensor::from_ints(
        field,
        (2, 2, 2),
        &[(0, 1, 1, 1), (1, 0, 1, -1)],
    ))
    .expect("affine line algebra")
}

/// `sl_2` with basis `h, e, f`.
pub fn sl2(field: Field) -> LieAlgebra {
    LieAlgebra::new(StructureTensor::from_ints(
        field,
        (3, 3, 3),
        &[
            (0, 1, 1, 2),
            (1, 0, 1, -2),
            (0, 2, 2, -2),
            (2, 0, 2, 2),
            (1, 2, 0, 1),
            (2, 1, 0, -1),
        ],
    ))
    .expect("sl2")
}

/// The natural 2-dimensional `sl_2`-module.
pub fn sl2_natural(field: Field) -> LieModule {
    let h = Matrix::from_ints(field, &[&[1, 0], &[0, -1]]);
    let e = Matrix::from_ints(field, &[&[0, 1], &[0, 0]]);
    let f = Matrix::from_ints(field, &[&[0, 0], &[1, 0]]);
    LieModule::from_matrices(field, 2, &[h, e, f]).expect("natural module")
}

/// Heisenberg algebra `[x, y] = z`.
pub fn heisenberg(field: Field) -> LieAlgebra {
    LieAlgebra::new(StructureTensor::from_ints(
        field,
        (3, 3, 3),
        &[(0, 1, 2, 1), (1, 0, 2, -1)],
    ))
    .expect("heisenberg")
}

/// `so_3`: `[e_0, e_1] = e_2` and cyclic.
pub fn so3(field: Field) -> LieAlgebra {
    LieAlgebra::new(StructureTensor::from_ints(
        field,
        (3, 3, 3),
        &[
            (0, 1, 2, 1),
            (1, 0, 2, -1),
            (1, 2, 0, 1),
            (2, 1, 0, -1),
            (2, 0, 1, 1),
            (0, 2, 1, -1),
        ],
    ))
    .expect("so3")
}

/// Upper triangular `2 × 2` matrices: basis `E_00, E_01, E_11`.
pub fn borel2(field: Field) -> LieAlgebra {
    let e = crate::leibniz::elementary_matrices(field, 2);
    LieAlgebra::from_matrices(field, 2, &[e[0].clone(), e[1].clone(), e[3].clone()]).expect("borel")
}

/// A Leibniz algebroid over `k × k` with zero anchor whose squares ideal is
/// not a submodule. `E` has basis `u1, u2, v1, v2`; the first idempotent acts
/// as the identity on the `u`s and the second on the `v`s. The only brackets
/// are `[u2, v1] = u1` and `[v1, u2] = v2`.
pub fn unstable_squares(field: Field) -> crate::algebroid::LeibnizAlgebroid {
    let a = split_pair(field);
    let bracket = LeibnizAlgebra::new(StructureTensor::from_ints(
        field,
        (4, 4, 4),
        &[(1, 2, 0, 1), (2, 1, 3, 1)],
    ))
    .expect("bracket");
    let action = AModule::new(StructureTensor::from_ints(
        field,
        (2, 4, 4),
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 2, 1), (1, 3, 3, 1)],
    ))
    .expect("action");
    crate::algebroid::LeibnizAlgebroid::new(a, bracket, action, StructureTensor::zeros(field, (4, 2, 2)))
        .expect("unstable squares algebroid")
}
