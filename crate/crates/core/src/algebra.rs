//! Commutative unital algebras, their modules, `⊗_A`, and square-zero
//! extensions.

use alloc::vec::Vec;

use crate::error::{same_dim, same_field, Result};
use crate::matrix::{check_vector, sub_vectors, unit_vector, zero_vector, Matrix, Vector};
use crate::report::{Axiom, CheckReport, Recorder};
use crate::scalar::{Field, Scalar};
use crate::subspace::{quotient_basis, Subspace};
use crate::tensor::StructureTensor;

/// A finite-dimensional commutative unital algebra given by structure
/// constants `a_i · a_j = Σ_k c[i][j][k] a_k` and a unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra {
    mult: StructureTensor,
    unit: Vector,
}

impl CommAlgebra {
    /// Wraps the data after checking shapes; the algebra axioms are left to
    /// [`check_comm_algebra`].
    pub fn new(mult: StructureTensor, unit: Vector) -> Result<CommAlgebra> {
        let (d1, d2, d3) = mult.dims();
        same_dim("multiplication second factor", d1, d2)?;
        same_dim("multiplication target", d1, d3)?;
        check_vector(mult.field(), d1, &unit, "unit vector")?;
        Ok(CommAlgebra { mult, unit })
    }

    /// The base field as a 1-dimensional algebra.
    pub fn ground(field: Field) -> CommAlgebra {
        let mult = StructureTensor::from_ints(field, (1, 1, 1), &[(0, 0, 0, 1)]);
        CommAlgebra::new(mult, alloc::vec![field.one()]).expect("ground algebra")
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.mult.dims().0
    }

    pub fn mult(&self) -> &StructureTensor {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.mult.apply(a, b)
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field(), self.dim(), i)
    }

    /// The algebra acting on itself.
    pub fn regular_module(&self) -> AModule {
        AModule {
            action: self.mult.clone(),
        }
    }

    /// The zero module.
    pub fn zero_module(&self) -> AModule {
        AModule {
            action: StructureTensor::zeros(self.field(), (self.dim(), 0, 0)),
        }
    }

    /// Conjugates by the basis change whose columns are the new basis.
    pub fn change_basis(&self, p: &Matrix) -> Result<CommAlgebra> {
        let p_inv = p
            .inverse()
            .ok_or_else(|| crate::Error::Invalid("singular basis change".into()))?;
        CommAlgebra::new(self.mult.change_basis(p, p, &p_inv), p_inv.apply(&self.unit))
    }
}

/// A left module over a [`CommAlgebra`], read as a symmetric bimodule.
/// `action[i][j][k]` is the coefficient of `m_k` in `a_i · m_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AModule {
    action: StructureTensor,
}

impl AModule {
    pub fn new(action: StructureTensor) -> Result<AModule> {
        let (_, d2, d3) = action.dims();
        same_dim("module action target", d2, d3)?;
        Ok(AModule { action })
    }

    /// Module over `a` on which `a_i` acts by the given `dim × dim` matrices.
    pub fn from_matrices(a: &CommAlgebra, dim: usize, mats: &[Matrix]) -> Result<AModule> {
        same_dim("module action matrices", a.dim(), mats.len())?;
        AModule::new(StructureTensor::from_operators(a.field(), dim, dim, mats)?)
    }

    pub fn field(&self) -> Field {
        self.action.field()
    }

    pub fn dim(&self) -> usize {
        self.action.dims().1
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.dims().0
    }

    pub fn action(&self) -> &StructureTensor {
        &self.action
    }

    pub fn act(&self, a: &[Scalar], m: &[Scalar]) -> Vector {
        self.action.apply(a, m)
    }

    /// The matrix of `m ↦ a · m`.
    pub fn operator(&self, a: &[Scalar]) -> Matrix {
        self.action.left_operator(a)
    }

    pub fn basis_operator(&self, i: usize) -> Matrix {
        self.action.left_basis_operator(i)
    }

    pub fn change_basis(&self, pa: &Matrix, pm: &Matrix) -> Result<AModule> {
        let pm_inv = pm
            .inverse()
            .ok_or_else(|| crate::Error::Invalid("singular basis change".into()))?;
        AModule::new(self.action.change_basis(pa, pm, &pm_inv))
    }

    /// Direct sum `self ⊕ other`, `self` coordinates first.
    pub fn direct_sum(&self, other: &AModule) -> Result<AModule> {
        same_dim("direct sum algebra", self.algebra_dim(), other.algebra_dim())?;
        let mats: Vec<Matrix> = (0..self.algebra_dim())
            .map(|i| self.basis_operator(i).block_diag(&other.basis_operator(i)))
            .collect();
        AModule::new(StructureTensor::from_operators(
            self.field(),
            self.dim() + other.dim(),
            self.dim() + other.dim(),
            &mats,
        )?)
    }
}

pub fn check_comm_algebra(a: &CommAlgebra) -> CheckReport {
    let mut r = Recorder::new("comm-algebra", a.field());
    comm_algebra_laws(&mut r, a, "A");
    r.finish()
}

pub(crate) fn comm_algebra_laws(r: &mut Recorder, a: &CommAlgebra, on: &str) {
    let d = a.dim();
    let m = a.mult();
    for i in 0..d {
        for j in i + 1..d {
            r.expect_zero(Axiom::Comm, on, &[i, j], sub_vectors(m.slice(i, j), m.slice(j, i)));
        }
    }
    for i in 0..d {
        for j in 0..d {
            let ij = m.slice(i, j);
            for k in 0..d {
                let left = m.apply_right_basis(ij, k);
                let right = m.apply_left_basis(i, m.slice(j, k));
                r.expect_zero(Axiom::Assoc, on, &[i, j, k], sub_vectors(&left, &right));
            }
        }
    }
    for i in 0..d {
        let ui = m.apply_right_basis(a.unit(), i);
        r.expect_zero(Axiom::Unit, on, &[i], sub_vectors(&ui, &a.basis(i)));
    }
}

pub fn check_a_module(a: &CommAlgebra, m: &AModule) -> Result<CheckReport> {
    let mut r = Recorder::new("a-module", a.field());
    module_laws(&mut r, a, m, "M")?;
    Ok(r.finish())
}

/// Unit and associativity of an action, recorded against the label `on`.
pub(crate) fn module_laws(r: &mut Recorder, a: &CommAlgebra, m: &AModule, on: &str) -> Result<()> {
    same_field(a.field(), m.field())?;
    same_dim("module algebra dimension", a.dim(), m.algebra_dim())?;
    let field = a.field();
    let dm = m.dim();
    let act = m.action();
    for j in 0..dm {
        let e = unit_vector(field, dm, j);
        r.expect_zero(Axiom::ModuleUnit, on, &[j], sub_vectors(&m.act(a.unit(), &e), &e));
    }
    for i in 0..a.dim() {
        for k in 0..a.dim() {
            let ik = a.mult().slice(i, k);
            for j in 0..dm {
                let left = act.apply_right_basis(ik, j);
                let right = act.apply_left_basis(i, act.slice(k, j));
                r.expect_zero(Axiom::ModuleAssoc, on, &[i, k, j], sub_vectors(&left, &right));
            }
        }
    }
    Ok(())
}

/// Records `g(a_i · m_j) − a_i · g(m_j)` for a map `g: M → N` of modules.
pub(crate) fn module_map_law(
    r: &mut Recorder,
    axiom: Axiom,
    on: &str,
    a_dim: usize,
    source: &AModule,
    target: &AModule,
    g: &Matrix,
) {
    for i in 0..a_dim {
        for j in 0..source.dim() {
            let left = g.apply(source.action().slice(i, j));
            let right = target.action().apply_left_basis(i, &g.column(j));
            r.expect_zero(axiom, on, &[i, j], sub_vectors(&left, &right));
        }
    }
}

/// Coordinates of `x ⊗ y` in the row-major basis of `X ⊗ Y`.
pub fn tensor_vector(x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

/// `M ⊗_A W` as a quotient of `M ⊗ W` (index `m * dim W + w`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOverA {
    pub dim_m: usize,
    pub dim_w: usize,
    /// Span of `(a·m)⊗w − m⊗(a·w)` over basis triples.
    pub relators: Subspace,
    /// `M ⊗ W → M ⊗_A W`.
    pub projection: Matrix,
    /// A linear section `M ⊗_A W → M ⊗ W` of the projection.
    pub section: Matrix,
}

impl TensorOverA {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

/// The relator vector `(a_i·m_j)⊗w_k − m_j⊗(a_i·w_k)`.
pub fn relator(m: &AModule, w: &AModule, i: usize, j: usize, k: usize) -> Vector {
    let field = m.field();
    let ej = unit_vector(field, m.dim(), j);
    let ek = unit_vector(field, w.dim(), k);
    let left = tensor_vector(m.action().slice(i, j), &ek);
    let right = tensor_vector(&ej, w.action().slice(i, k));
    sub_vectors(&left, &right)
}

pub fn tensor_over_a(a: &CommAlgebra, m: &AModule, w: &AModule) -> Result<TensorOverA> {
    same_field(a.field(), m.field())?;
    same_field(a.field(), w.field())?;
    same_dim("left factor algebra dimension", a.dim(), m.algebra_dim())?;
    same_dim("right factor algebra dimension", a.dim(), w.algebra_dim())?;
    let mut rels = Vec::new();
    for i in 0..a.dim() {
        for j in 0..m.dim() {
            for k in 0..w.dim() {
                rels.push(relator(m, w, i, j, k));
            }
        }
    }
    let ambient = m.dim() * w.dim();
    let relators = Subspace::span(a.field(), ambient, rels);
    let (projection, section) = quotient_basis(ambient, &relators)?;
    Ok(TensorOverA {
        dim_m: m.dim(),
        dim_w: w.dim(),
        relators,
        projection,
        section,
    })
}

/// `A ⊕ M` with `(a,m)(a′,m′) = (aa′, a·m′ + a′·m)`, `A` coordinates first.
pub fn square_zero_extension(a: &CommAlgebra, m: &AModule) -> Result<CommAlgebra> {
    same_field(a.field(), m.field())?;
    same_dim("module algebra dimension", a.dim(), m.algebra_dim())?;
    let field = a.field();
    let da = a.dim();
    let n = da + m.dim();
    let mut t = StructureTensor::zeros(field, (n, n, n));
    for (i, j, k, v) in a.mult().nonzero_entries() {
        t.set(i, j, k, v.clone());
    }
    for (i, j, k, v) in m.action().nonzero_entries() {
        t.set(i, da + j, da + k, v.clone());
        t.set(da + j, i, da + k, v.clone());
    }
    let mut unit = zero_vector(field, n);
    unit[..da].clone_from_slice(a.unit());
    CommAlgebra::new(t, unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dual_numbers_valid() {
        let q = Field::Rationals;
        assert!(check_comm_algebra(&CommAlgebra::ground(q)).is_pass());
        assert!(check_comm_algebra(&catalog::truncated_poly(q, 2)).is_pass());
    }

    #[test]
    fn corrupted_unit_reports_index_zero() {
        let q = Field::Rationals;
        let mult = StructureTensor::from_ints(q, (2, 2, 2), &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)]);
        let a = CommAlgebra::new(mult, alloc::vec![q.zero(), q.one()]).unwrap();
        let rep = check_comm_algebra(&a);
        let v = rep.find(Axiom::Unit).unwrap();
        assert_eq!(v.witness, alloc::vec![0]);
        assert_eq!(rep.violations.len(), 1);
    }

    #[test]
    fn module_examples() {
        let q = Field::Rationals;
        let a = catalog::truncated_poly(q, 2);
        assert!(check_a_module(&a, &a.regular_module()).unwrap().is_pass());
        assert!(check_a_module(&a, &catalog::residue_module(&a)).unwrap().is_pass());
        let bad = AModule::from_matrices(&a, 1, &[Matrix::identity(q, 1), Matrix::identity(q, 1)]).unwrap();
        let rep = check_a_module(&a, &bad).unwrap();
        assert_eq!(rep.find(Axiom::ModuleAssoc).unwrap().witness, alloc::vec![1, 1, 0]);
    }

    #[test]
    fn tensor_over_a_dims() {
        let q = Field::Rationals;
        let k = CommAlgebra::ground(q);
        let km = k.regular_module().direct_sum(&k.regular_module()).unwrap();
        let t = tensor_over_a(&k, &km, &km).unwrap();
        assert_eq!((t.relators.dim(), t.dim()), (0, 4));

        let a = catalog::truncated_poly(q, 2);
        let t = tensor_over_a(&a, &a.regular_module(), &a.regular_module()).unwrap();
        assert_eq!((t.relators.dim(), t.dim()), (2, 2));
        let t = tensor_over_a(&a, &a.regular_module(), &catalog::residue_module(&a)).unwrap();
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn square_zero_of_ground_is_dual_numbers() {
        let q = Field::Rationals;
        let k = CommAlgebra::ground(q);
        let e = square_zero_extension(&k, &k.regular_module()).unwrap();
        assert_eq!(e, catalog::truncated_poly(q, 2));
        assert_eq!(square_zero_extension(&k, &k.zero_module()).unwrap(), k);
    }
}
