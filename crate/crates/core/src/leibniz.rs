//! Right Leibniz algebras, Lie algebras and their modules.

use alloc::vec::Vec;

use crate::error::{same_dim, same_field, Error, Result};
use crate::matrix::{add_vectors, concat, sub_vectors, unit_vector, Matrix, Vector};
use crate::report::{Axiom, CheckReport, Recorder};
use crate::scalar::{Field, Scalar};
use crate::subspace::{quotient_basis, Subspace};
use crate::tensor::StructureTensor;

fn square_tensor(bracket: &StructureTensor, what: &str) -> Result<usize> {
    let (d1, d2, d3) = bracket.dims();
    same_dim(what, d1, d2)?;
    same_dim(what, d1, d3)?;
    Ok(d1)
}

/// A space with a bilinear bracket, expected to satisfy the right Leibniz
/// identity `[x,[y,z]] = [[x,y],z] − [[x,z],y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    bracket: StructureTensor,
}

/// A space with a bracket expected to be antisymmetric and satisfy Jacobi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    bracket: StructureTensor,
}

macro_rules! bracket_algebra {
    ($ty:ident) => {
        impl $ty {
            pub fn new(bracket: StructureTensor) -> Result<$ty> {
                square_tensor(&bracket, "bracket")?;
                Ok($ty { bracket })
            }

            pub fn abelian(field: Field, dim: usize) -> $ty {
                $ty {
                    bracket: StructureTensor::zeros(field, (dim, dim, dim)),
                }
            }

            pub fn field(&self) -> Field {
                self.bracket.field()
            }

            pub fn dim(&self) -> usize {
                self.bracket.dims().0
            }

            pub fn bracket(&self) -> &StructureTensor {
                &self.bracket
            }

            pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
                self.bracket.apply(x, y)
            }

            pub fn basis(&self, i: usize) -> Vector {
                unit_vector(self.field(), self.dim(), i)
            }

            pub fn change_basis(&self, p: &Matrix) -> Result<$ty> {
                let p_inv = p
                    .inverse()
                    .ok_or_else(|| Error::Invalid("singular basis change".into()))?;
                $ty::new(self.bracket.change_basis(p, p, &p_inv))
            }
        }
    };
}

bracket_algebra!(LeibnizAlgebra);
bracket_algebra!(LieAlgebra);

impl LieAlgebra {
    /// The same bracket viewed as a Leibniz algebra.
    pub fn to_leibniz(&self) -> LeibnizAlgebra {
        LeibnizAlgebra {
            bracket: self.bracket.clone(),
        }
    }

    /// Structure constants of a space of square matrices closed under the
    /// commutator; the given matrices must be linearly independent.
    pub fn from_matrices(field: Field, n: usize, basis: &[Matrix]) -> Result<LieAlgebra> {
        let coords = Matrix::from_columns(
            field,
            n * n,
            &basis.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>(),
        )?;
        if coords.rank() != basis.len() {
            return Err(Error::Invalid("matrix basis is linearly dependent".into()));
        }
        let d = basis.len();
        let mut t = StructureTensor::zeros(field, (d, d, d));
        for i in 0..d {
            for j in 0..d {
                let c = basis[i].commutator(&basis[j]);
                let x = coords
                    .solve(c.entries())
                    .ok_or_else(|| Error::Invalid("matrix space not closed under commutator".into()))?;
                for (k, v) in x.into_iter().enumerate() {
                    t.set(i, j, k, v);
                }
            }
        }
        LieAlgebra::new(t)
    }

    /// `gl_n` with basis `E_{rs}` in row-major order.
    pub fn gl(field: Field, n: usize) -> LieAlgebra {
        LieAlgebra::from_matrices(field, n, &elementary_matrices(field, n)).expect("gl_n")
    }
}

impl LeibnizAlgebra {
    /// Reinterprets the bracket as a Lie bracket without checking.
    pub fn to_lie_unchecked(&self) -> LieAlgebra {
        LieAlgebra {
            bracket: self.bracket.clone(),
        }
    }
}

/// `E_{rs}`, `r`-major.
pub fn elementary_matrices(field: Field, n: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            let mut m = Matrix::zeros(field, n, n);
            m.set(r, s, field.one());
            out.push(m);
        }
    }
    out
}

/// A left action `ξ ⊗ v ↦ ξ·v`, tensor dims `(dim L, dim V, dim V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    action: StructureTensor,
}

/// A right action `n ⊗ ξ ↦ [n,ξ]`, tensor dims `(dim N, dim L, dim N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightLieModule {
    action: StructureTensor,
}

impl LieModule {
    pub fn new(action: StructureTensor) -> Result<LieModule> {
        let (_, d2, d3) = action.dims();
        same_dim("left action target", d2, d3)?;
        Ok(LieModule { action })
    }

    pub fn adjoint(l: &LieAlgebra) -> LieModule {
        LieModule {
            action: l.bracket.clone(),
        }
    }

    pub fn trivial(field: Field, lie_dim: usize, dim: usize) -> LieModule {
        LieModule {
            action: StructureTensor::zeros(field, (lie_dim, dim, dim)),
        }
    }

    /// Action by the given `dim × dim` matrices, one per basis vector of `L`.
    pub fn from_matrices(field: Field, dim: usize, mats: &[Matrix]) -> Result<LieModule> {
        LieModule::new(StructureTensor::from_operators(field, dim, dim, mats)?)
    }

    pub fn action(&self) -> &StructureTensor {
        &self.action
    }

    pub fn dim(&self) -> usize {
        self.action.dims().1
    }

    pub fn lie_dim(&self) -> usize {
        self.action.dims().0
    }

    pub fn operator(&self, xi: &[Scalar]) -> Matrix {
        self.action.left_operator(xi)
    }

    pub fn change_basis(&self, pl: &Matrix, pv: &Matrix) -> Result<LieModule> {
        let inv = pv
            .inverse()
            .ok_or_else(|| Error::Invalid("singular basis change".into()))?;
        LieModule::new(self.action.change_basis(pl, pv, &inv))
    }
}

impl RightLieModule {
    pub fn new(action: StructureTensor) -> Result<RightLieModule> {
        let (d1, _, d3) = action.dims();
        same_dim("right action target", d1, d3)?;
        Ok(RightLieModule { action })
    }

    pub fn adjoint(l: &LieAlgebra) -> RightLieModule {
        RightLieModule {
            action: l.bracket.clone(),
        }
    }

    pub fn action(&self) -> &StructureTensor {
        &self.action
    }

    pub fn dim(&self) -> usize {
        self.action.dims().0
    }

    pub fn lie_dim(&self) -> usize {
        self.action.dims().1
    }

    pub fn act(&self, n: &[Scalar], xi: &[Scalar]) -> Vector {
        self.action.apply(n, xi)
    }

    pub fn change_basis(&self, pn: &Matrix, pl: &Matrix) -> Result<RightLieModule> {
        let inv = pn
            .inverse()
            .ok_or_else(|| Error::Invalid("singular basis change".into()))?;
        RightLieModule::new(self.action.change_basis(pn, pl, &inv))
    }
}

pub fn check_leibniz(g: &LeibnizAlgebra) -> CheckReport {
    let mut r = Recorder::new("leibniz", g.field());
    leibniz_laws(&mut r, g.bracket(), "g");
    r.finish()
}

pub(crate) fn leibniz_laws(r: &mut Recorder, b: &StructureTensor, on: &str) {
    let d = b.dims().0;
    for i in 0..d {
        for j in 0..d {
            let ij = b.slice(i, j);
            for k in 0..d {
                let x_yz = b.apply_left_basis(i, b.slice(j, k));
                let xy_z = b.apply_right_basis(ij, k);
                let xz_y = b.apply_right_basis(b.slice(i, k), j);
                let res = add_vectors(&sub_vectors(&x_yz, &xy_z), &xz_y);
                r.expect_zero(Axiom::Rlj, on, &[i, j, k], res);
            }
        }
    }
}

pub fn check_lie(l: &LieAlgebra) -> CheckReport {
    let mut r = Recorder::new("lie", l.field());
    lie_laws(&mut r, l.bracket(), "L");
    r.finish()
}

pub(crate) fn lie_laws(r: &mut Recorder, b: &StructureTensor, on: &str) {
    let d = b.dims().0;
    for i in 0..d {
        r.expect_zero(Axiom::Antisym, on, &[i, i], b.slice(i, i).to_vec());
        for j in i + 1..d {
            r.expect_zero(Axiom::Antisym, on, &[i, j], add_vectors(b.slice(i, j), b.slice(j, i)));
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let a = b.apply_left_basis(i, b.slice(j, k));
                let c = b.apply_left_basis(j, b.slice(k, i));
                let e = b.apply_left_basis(k, b.slice(i, j));
                r.expect_zero(Axiom::Jacobi, on, &[i, j, k], add_vectors(&add_vectors(&a, &c), &e));
            }
        }
    }
}

pub fn check_lie_module(l: &LieAlgebra, v: &LieModule) -> Result<CheckReport> {
    let mut r = Recorder::new("lie-module", l.field());
    lie_module_laws(&mut r, l, v, "V")?;
    Ok(r.finish())
}

pub(crate) fn lie_module_laws(r: &mut Recorder, l: &LieAlgebra, v: &LieModule, on: &str) -> Result<()> {
    same_field(l.field(), v.action.field())?;
    same_dim("left module Lie dimension", l.dim(), v.lie_dim())?;
    let act = &v.action;
    let d = l.dim();
    for i in 0..d {
        for j in 0..d {
            let ij = l.bracket.slice(i, j);
            for k in 0..v.dim() {
                let left = act.apply_right_basis(ij, k);
                let a = act.apply_left_basis(i, act.slice(j, k));
                let b = act.apply_left_basis(j, act.slice(i, k));
                r.expect_zero(
                    Axiom::LieModule,
                    on,
                    &[i, j, k],
                    sub_vectors(&left, &sub_vectors(&a, &b)),
                );
            }
        }
    }
    Ok(())
}

pub fn check_right_module(l: &LieAlgebra, n: &RightLieModule) -> Result<CheckReport> {
    let mut r = Recorder::new("right-module", l.field());
    right_module_laws(&mut r, l, n, "N")?;
    Ok(r.finish())
}

pub(crate) fn right_module_laws(r: &mut Recorder, l: &LieAlgebra, n: &RightLieModule, on: &str) -> Result<()> {
    same_field(l.field(), n.action.field())?;
    same_dim("right module Lie dimension", l.dim(), n.lie_dim())?;
    let act = &n.action;
    let d = l.dim();
    for a in 0..n.dim() {
        for i in 0..d {
            let ni = act.slice(a, i);
            for j in 0..d {
                let left = act.apply_left_basis(a, l.bracket.slice(i, j));
                let x = act.apply_right_basis(ni, j);
                let y = act.apply_right_basis(act.slice(a, j), i);
                r.expect_zero(
                    Axiom::RightModule,
                    on,
                    &[a, i, j],
                    sub_vectors(&left, &sub_vectors(&x, &y)),
                );
            }
        }
    }
    Ok(())
}

/// Residuals of `φ[x,y] − [φx,φy]` on basis pairs of the source.
pub fn check_leibniz_morphism(phi: &Matrix, g: &StructureTensor, h: &StructureTensor) -> Result<CheckReport> {
    let mut r = Recorder::new("leibniz-morphism", g.field());
    let dg = square_tensor(g, "source bracket")?;
    let dh = square_tensor(h, "target bracket")?;
    crate::matrix::check_shape(phi, g.field(), dh, dg, "morphism")?;
    bracket_map_law(&mut r, Axiom::LeibnizMorphism, "phi", phi, g, phi, phi, h);
    Ok(r.finish())
}

/// Records `p([x_i,y_j]) − [q(x_i), s(y_j)]` for brackets `g` and `h`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn bracket_map_law(
    r: &mut Recorder,
    axiom: Axiom,
    on: &str,
    p: &Matrix,
    g: &StructureTensor,
    q: &Matrix,
    s: &Matrix,
    h: &StructureTensor,
) {
    let (d1, d2, _) = g.dims();
    let qc: Vec<Vector> = (0..d1).map(|i| q.column(i)).collect();
    let sc: Vec<Vector> = (0..d2).map(|j| s.column(j)).collect();
    for i in 0..d1 {
        for j in 0..d2 {
            let left = p.apply(g.slice(i, j));
            let right = h.apply(&qc[i], &sc[j]);
            r.expect_zero(axiom, on, &[i, j], sub_vectors(&left, &right));
        }
    }
}

/// The two-sided ideal generated by squares, with the number of closure
/// rounds that enlarged the generating span.
pub fn squares_ideal(g: &LeibnizAlgebra) -> (Subspace, usize) {
    let b = g.bracket();
    let d = g.dim();
    let mut gens = Vec::new();
    for i in 0..d {
        gens.push(b.slice(i, i).to_vec());
        for j in i + 1..d {
            gens.push(add_vectors(b.slice(i, j), b.slice(j, i)));
        }
    }
    let mut ideal = Subspace::span(g.field(), d, gens);
    let mut rounds = 0;
    loop {
        let mut vs: Vec<Vector> = ideal.basis().to_vec();
        for s in ideal.basis() {
            for i in 0..d {
                vs.push(b.apply_left_basis(i, s));
                vs.push(b.apply_right_basis(s, i));
            }
        }
        let next = Subspace::span(g.field(), d, vs);
        if next.dim() == ideal.dim() {
            return (ideal, rounds);
        }
        ideal = next;
        rounds += 1;
    }
}

/// `g / squares_ideal(g)` with its projection `π`.
pub fn reduced_lie(g: &LeibnizAlgebra) -> Result<(LieAlgebra, Matrix)> {
    let pre = check_leibniz(g);
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    let (ideal, _) = squares_ideal(g);
    let (pi, section) = quotient_basis(g.dim(), &ideal)?;
    let q = pi.rows();
    let cols: Vec<Vector> = (0..q).map(|a| section.column(a)).collect();
    let mut t = StructureTensor::zeros(g.field(), (q, q, q));
    for a in 0..q {
        for b in 0..q {
            let v = pi.apply(&g.br(&cols[a], &cols[b]));
            for (k, s) in v.into_iter().enumerate() {
                t.set(a, b, k, s);
            }
        }
    }
    let lie = LieAlgebra::new(t)?;
    let rep = check_lie(&lie);
    if !rep.is_pass() {
        return Err(Error::Invalid("reduced bracket is not a Lie bracket".into()));
    }
    Ok((lie, pi))
}

/// `V ⊕ L` with `[a+ξ, b+ζ] = ζ(a) − [ξ,ζ]`, `V` coordinates first.
pub fn hemi_semi_product(l: &LieAlgebra, v: &LieModule) -> Result<LeibnizAlgebra> {
    let mut r = Recorder::new("hemi-semi", l.field());
    lie_laws(&mut r, l.bracket(), "L");
    lie_module_laws(&mut r, l, v, "V")?;
    if !r.is_clean() {
        return Err(Error::precondition(r.finish()));
    }
    let dv = v.dim();
    let n = dv + l.dim();
    let mut t = StructureTensor::zeros(l.field(), (n, n, n));
    for (z, a, k, s) in v.action().nonzero_entries() {
        t.set(a, dv + z, k, s.clone());
    }
    for (x, z, k, s) in l.bracket().nonzero_entries() {
        t.set(dv + x, dv + z, dv + k, -s);
    }
    LeibnizAlgebra::new(t)
}

/// `M ⊕ g` with `[m1+g1, m2+g2] = −π(g2)(m1) + [g1,g2]`, `M` coordinates
/// first, for a module `M` over the reduced Lie algebra of `g`.
pub fn hemi_semi_over_reduced(g: &LeibnizAlgebra, m: &LieModule) -> Result<LeibnizAlgebra> {
    let (lie, pi) = reduced_lie(g)?;
    let rep = check_lie_module(&lie, m)?;
    if !rep.is_pass() {
        return Err(Error::precondition(rep));
    }
    let dm = m.dim();
    let n = dm + g.dim();
    let field = g.field();
    let mut t = StructureTensor::zeros(field, (n, n, n));
    for j in 0..g.dim() {
        let op = m.operator(&pi.column(j));
        for a in 0..dm {
            for k in 0..dm {
                let s = op.get(k, a);
                if !s.is_zero() {
                    t.set(a, dm + j, k, -s);
                }
            }
        }
    }
    for (x, y, k, s) in g.bracket().nonzero_entries() {
        t.set(dm + x, dm + y, dm + k, s.clone());
    }
    LeibnizAlgebra::new(t)
}

/// `L ⊗ L` (index `x * dim L + y`) with
/// `[x1⊗y1, x2⊗y2] = [x1,[x2,y2]]⊗y1 + x1⊗[y1,[x2,y2]]`.
pub fn tensor_square(l: &LieAlgebra) -> Result<LeibnizAlgebra> {
    let pre = check_lie(l);
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    let d = l.dim();
    let b = l.bracket();
    let field = l.field();
    let mut t = StructureTensor::zeros(field, (d * d, d * d, d * d));
    for x1 in 0..d {
        for y1 in 0..d {
            let left = x1 * d + y1;
            for x2 in 0..d {
                for y2 in 0..d {
                    let c = b.slice(x2, y2);
                    let a = b.apply_left_basis(x1, c);
                    let e = b.apply_left_basis(y1, c);
                    let v = add_vectors(
                        &crate::algebra::tensor_vector(&a, &unit_vector(field, d, y1)),
                        &crate::algebra::tensor_vector(&unit_vector(field, d, x1), &e),
                    );
                    for (k, s) in v.into_iter().enumerate() {
                        if !s.is_zero() {
                            t.set(left, x2 * d + y2, k, s);
                        }
                    }
                }
            }
        }
    }
    LeibnizAlgebra::new(t)
}

/// The direct sum of two Lie modules over the same Lie algebra.
pub fn direct_sum_modules(a: &LieModule, b: &LieModule) -> Result<LieModule> {
    same_dim("direct sum Lie dimension", a.lie_dim(), b.lie_dim())?;
    let field = a.action.field();
    let mats: Vec<Matrix> = (0..a.lie_dim())
        .map(|i| {
            let e = unit_vector(field, a.lie_dim(), i);
            a.operator(&e).block_diag(&b.operator(&e))
        })
        .collect();
    LieModule::from_matrices(field, a.dim() + b.dim(), &mats)
}

/// Coordinates of `m + ξ` in `M ⊕ L`.
pub fn direct_vector(m: &[Scalar], xi: &[Scalar]) -> Vector {
    concat(m, xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn square_line_is_leibniz_not_lie() {
        let q = Field::Rationals;
        let g = catalog::square_line(q);
        assert!(check_leibniz(&g).is_pass());
        let rep = check_lie(&g.to_lie_unchecked());
        assert_eq!(rep.find(Axiom::Antisym).unwrap().witness, alloc::vec![1, 1]);
    }

    #[test]
    fn squares_of_square_line() {
        let q = Field::Rationals;
        let g = catalog::square_line(q);
        let (ideal, rounds) = squares_ideal(&g);
        assert_eq!(ideal, Subspace::span(q, 2, alloc::vec![alloc::vec![q.one(), q.zero()]]));
        assert_eq!(rounds, 0);
        let (lie, pi) = reduced_lie(&g).unwrap();
        assert_eq!(lie.dim(), 1);
        assert!(lie.bracket().is_zero());
        assert!(check_leibniz_morphism(&pi, g.bracket(), lie.bracket())
            .unwrap()
            .is_pass());
    }

    #[test]
    fn hemi_semi_line() {
        let q = Field::Rationals;
        let l = LieAlgebra::abelian(q, 1);
        let v = LieModule::from_matrices(q, 1, &[Matrix::identity(q, 1)]).unwrap();
        let h = hemi_semi_product(&l, &v).unwrap();
        let expected = StructureTensor::from_ints(q, (2, 2, 2), &[(0, 1, 0, 1)]);
        assert_eq!(h.bracket(), &expected);
        assert!(check_leibniz(&h).is_pass());
    }

    #[test]
    fn tensor_square_of_affine_line() {
        let q = Field::Rationals;
        let l = catalog::nonabelian2(q);
        let t = tensor_square(&l).unwrap();
        let xy = 1;
        let yy = 3;
        let v = t.br(&t.basis(xy), &t.basis(xy));
        assert_eq!(v, t.basis(yy));
        assert!(check_leibniz(&t).is_pass());
        assert!(squares_ideal(&t).0.contains(&t.basis(yy)));
    }

    #[test]
    fn sl2_is_lie() {
        let q = Field::Rationals;
        assert!(check_lie(&catalog::sl2(q)).is_pass());
        assert!(check_lie(&LieAlgebra::gl(q, 2)).is_pass());
    }
}
