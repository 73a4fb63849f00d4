//! The category of linear maps: objects `u: V → W`, commuting squares,
//! the monoidal structure, and algebra, Lie and module objects.

use alloc::vec::Vec;

use crate::algebra::{comm_algebra_laws, module_laws, module_map_law, AModule, CommAlgebra};
use crate::error::{same_dim, same_field, Error, Result};
use crate::leibniz::{
    bracket_map_law, lie_laws, lie_module_laws, reduced_lie, right_module_laws, LeibnizAlgebra, LieAlgebra, LieModule,
    RightLieModule,
};
use crate::matrix::{add_vectors, check_shape, sub_vectors, Matrix};
use crate::report::{Axiom, CheckReport, Recorder};
use crate::scalar::Field;
use crate::tensor::StructureTensor;

/// An object `u: V → W`; `u` is a `dim W × dim V` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmObject {
    u: Matrix,
}

impl LmObject {
    pub fn new(u: Matrix) -> LmObject {
        LmObject { u }
    }

    /// `0 → k`, the monoidal unit.
    pub fn unit(field: Field) -> LmObject {
        LmObject {
            u: Matrix::zeros(field, 1, 0),
        }
    }

    pub fn identity_on(field: Field, n: usize) -> LmObject {
        LmObject {
            u: Matrix::identity(field, n),
        }
    }

    pub fn field(&self) -> Field {
        self.u.field()
    }

    pub fn u(&self) -> &Matrix {
        &self.u
    }

    pub fn top(&self) -> usize {
        self.u.cols()
    }

    pub fn bottom(&self) -> usize {
        self.u.rows()
    }
}

/// A commuting square `u′ ∘ h1 = h0 ∘ u` from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmMorphism {
    source: LmObject,
    target: LmObject,
    h1: Matrix,
    h0: Matrix,
}

/// Residuals of `u′ h1 − h0 u` on the basis of the source top.
pub fn check_square(source: &LmObject, target: &LmObject, h1: &Matrix, h0: &Matrix) -> Result<CheckReport> {
    let mut r = Recorder::new("lm-morphism", source.field());
    square_law(&mut r, Axiom::HgcompSquare, source, target, h1, h0)?;
    Ok(r.finish())
}

fn square_law(
    r: &mut Recorder,
    axiom: Axiom,
    source: &LmObject,
    target: &LmObject,
    h1: &Matrix,
    h0: &Matrix,
) -> Result<()> {
    same_field(source.field(), target.field())?;
    check_shape(h1, source.field(), target.top(), source.top(), "h1")?;
    check_shape(h0, source.field(), target.bottom(), source.bottom(), "h0")?;
    let left = target.u.mul(h1);
    let right = h0.mul(&source.u);
    for j in 0..source.top() {
        r.expect_zero(axiom, "square", &[j], sub_vectors(&left.column(j), &right.column(j)));
    }
    Ok(())
}

impl LmMorphism {
    /// Builds a morphism, rejecting squares that do not commute.
    pub fn new(source: LmObject, target: LmObject, h1: Matrix, h0: Matrix) -> Result<LmMorphism> {
        let rep = check_square(&source, &target, &h1, &h0)?;
        if !rep.is_pass() {
            return Err(Error::precondition(rep));
        }
        Ok(LmMorphism { source, target, h1, h0 })
    }

    fn with_axiom(axiom: Axiom, source: LmObject, target: LmObject, h1: Matrix, h0: Matrix) -> Result<LmMorphism> {
        let mut r = Recorder::new("lm-morphism", source.field());
        square_law(&mut r, axiom, &source, &target, &h1, &h0)?;
        if !r.is_clean() {
            return Err(Error::precondition(r.finish()));
        }
        Ok(LmMorphism { source, target, h1, h0 })
    }

    pub fn identity(x: &LmObject) -> LmMorphism {
        let f = x.field();
        LmMorphism {
            source: x.clone(),
            target: x.clone(),
            h1: Matrix::identity(f, x.top()),
            h0: Matrix::identity(f, x.bottom()),
        }
    }

    pub fn zero(source: &LmObject, target: &LmObject) -> LmMorphism {
        let f = source.field();
        LmMorphism {
            source: source.clone(),
            target: target.clone(),
            h1: Matrix::zeros(f, target.top(), source.top()),
            h0: Matrix::zeros(f, target.bottom(), source.bottom()),
        }
    }

    pub fn source(&self) -> &LmObject {
        &self.source
    }

    pub fn target(&self) -> &LmObject {
        &self.target
    }

    pub fn h1(&self) -> &Matrix {
        &self.h1
    }

    pub fn h0(&self) -> &Matrix {
        &self.h0
    }
}

/// `h ∘ g = (h1 g1, h0 g0)`.
pub fn compose(h: &LmMorphism, g: &LmMorphism) -> Result<LmMorphism> {
    if g.target != h.source {
        return Err(Error::Invalid("composition: target of g is not the source of h".into()));
    }
    LmMorphism::new(g.source.clone(), h.target.clone(), h.h1.mul(&g.h1), h.h0.mul(&g.h0))
}

/// `a ⊗ b` with top `V⊗W′ ⊕ W⊗V′` (in that order, row-major in each block),
/// bottom `W⊗W′` and vertical map `u⊗1 + 1⊗u′`.
pub fn tensor_objects(a: &LmObject, b: &LmObject) -> Result<LmObject> {
    same_field(a.field(), b.field())?;
    let f = a.field();
    let left = a.u.kron(&Matrix::identity(f, b.bottom()));
    let right = Matrix::identity(f, a.bottom()).kron(&b.u);
    Ok(LmObject { u: left.hstack(&right) })
}

/// `g ⊗ h = (g1⊗h0 + g0⊗h1, g0⊗h0)` between the tensor products.
pub fn tensor_morphisms(g: &LmMorphism, h: &LmMorphism) -> Result<LmMorphism> {
    let source = tensor_objects(&g.source, &h.source)?;
    let target = tensor_objects(&g.target, &h.target)?;
    let h1 = g.h1.kron(&h.h0).block_diag(&g.h0.kron(&h.h1));
    let h0 = g.h0.kron(&h.h0);
    LmMorphism::with_axiom(Axiom::HgtensorSquare, source, target, h1, h0)
}

/// The symmetry `a ⊗ b → b ⊗ a` swapping tensor factors and exchanging the
/// two top summands.
pub fn braiding(a: &LmObject, b: &LmObject) -> Result<LmMorphism> {
    let source = tensor_objects(a, b)?;
    let target = tensor_objects(b, a)?;
    let f = a.field();
    let (va, wa, vb, wb) = (a.top(), a.bottom(), b.top(), b.bottom());
    let mut h1 = Matrix::zeros(f, target.top(), source.top());
    // source blocks: V_a⊗W_b, W_a⊗V_b; target blocks: V_b⊗W_a, W_b⊗V_a
    for v in 0..va {
        for w in 0..wb {
            h1.set(vb * wa + w * va + v, v * wb + w, f.one());
        }
    }
    for w in 0..wa {
        for v in 0..vb {
            h1.set(v * wa + w, va * wb + w * vb + v, f.one());
        }
    }
    let mut h0 = Matrix::zeros(f, wb * wa, wa * wb);
    for x in 0..wa {
        for y in 0..wb {
            h0.set(y * wa + x, x * wb + y, f.one());
        }
    }
    LmMorphism::new(source, target, h1, h0)
}

/// The re-indexing isomorphism `(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)`.
pub fn associator(a: &LmObject, b: &LmObject, c: &LmObject) -> Result<LmMorphism> {
    let source = tensor_objects(&tensor_objects(a, b)?, c)?;
    let target = tensor_objects(a, &tensor_objects(b, c)?)?;
    let f = a.field();
    let (va, wa, vb, wb, vc, wc) = (a.top(), a.bottom(), b.top(), b.bottom(), c.top(), c.bottom());
    let x1 = va * wb + wa * vb;
    let y1 = vb * wc + wb * vc;
    let offset = va * wb * wc;
    let mut h1 = Matrix::zeros(f, target.top(), source.top());
    for i in 0..va {
        for j in 0..wb {
            for k in 0..wc {
                let s = (i * wb + j) * wc + k;
                let t = i * wb * wc + j * wc + k;
                h1.set(t, s, f.one());
            }
        }
    }
    for i in 0..wa {
        for j in 0..vb {
            for k in 0..wc {
                let s = (va * wb + i * vb + j) * wc + k;
                let t = offset + i * y1 + j * wc + k;
                h1.set(t, s, f.one());
            }
        }
    }
    for i in 0..wa {
        for j in 0..wb {
            for k in 0..vc {
                let s = x1 * wc + (i * wb + j) * vc + k;
                let t = offset + i * y1 + vb * wc + j * vc + k;
                h1.set(t, s, f.one());
            }
        }
    }
    let h0 = Matrix::identity(f, wa * wb * wc);
    LmMorphism::new(source, target, h1, h0)
}

/// A commutative algebra object `g: M → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmAlgebraObject {
    pub algebra: CommAlgebra,
    pub module: AModule,
    /// `dim A × dim M`.
    pub g: Matrix,
}

impl LmAlgebraObject {
    pub fn new(algebra: CommAlgebra, module: AModule, g: Matrix) -> Result<LmAlgebraObject> {
        same_field(algebra.field(), module.field())?;
        same_dim("module algebra dimension", algebra.dim(), module.algebra_dim())?;
        check_shape(&g, algebra.field(), algebra.dim(), module.dim(), "g")?;
        Ok(LmAlgebraObject { algebra, module, g })
    }

    /// `id: A → A`.
    pub fn identity(a: &CommAlgebra) -> LmAlgebraObject {
        LmAlgebraObject {
            algebra: a.clone(),
            module: a.regular_module(),
            g: Matrix::identity(a.field(), a.dim()),
        }
    }

    /// `0: M → A` for any module.
    pub fn zero(a: &CommAlgebra, m: &AModule) -> Result<LmAlgebraObject> {
        LmAlgebraObject::new(a.clone(), m.clone(), Matrix::zeros(a.field(), a.dim(), m.dim()))
    }

    pub fn object(&self) -> LmObject {
        LmObject::new(self.g.clone())
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn change_basis(&self, pa: &Matrix, pm: &Matrix) -> Result<LmAlgebraObject> {
        let pa_inv = pa
            .inverse()
            .ok_or_else(|| Error::Invalid("singular basis change".into()))?;
        LmAlgebraObject::new(
            self.algebra.change_basis(pa)?,
            self.module.change_basis(pa, pm)?,
            pa_inv.mul(&self.g).mul(pm),
        )
    }
}

pub fn check_algebra_object(x: &LmAlgebraObject) -> CheckReport {
    let mut r = Recorder::new("algebra-object", x.field());
    algebra_object_laws(&mut r, x);
    r.finish()
}

pub(crate) fn algebra_object_laws(r: &mut Recorder, x: &LmAlgebraObject) {
    comm_algebra_laws(r, &x.algebra, "A");
    module_laws(r, &x.algebra, &x.module, "M").expect("shapes checked on construction");
    module_map_law(
        r,
        Axiom::GLinear,
        "g",
        x.algebra.dim(),
        &x.module,
        &x.algebra.regular_module(),
        &x.g,
    );
}

/// A Lie algebra object `f: N → L` with right action `[n, ξ]` of `L` on `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmLieObject {
    pub lie: LieAlgebra,
    pub module: RightLieModule,
    /// `dim L × dim N`.
    pub f: Matrix,
}

impl LmLieObject {
    pub fn new(lie: LieAlgebra, module: RightLieModule, f: Matrix) -> Result<LmLieObject> {
        same_field(lie.field(), module.action().field())?;
        same_dim("right module Lie dimension", lie.dim(), module.lie_dim())?;
        check_shape(&f, lie.field(), lie.dim(), module.dim(), "f")?;
        Ok(LmLieObject { lie, module, f })
    }

    /// `id: L → L` with the adjoint action.
    pub fn identity(l: &LieAlgebra) -> LmLieObject {
        LmLieObject {
            lie: l.clone(),
            module: RightLieModule::adjoint(l),
            f: Matrix::identity(l.field(), l.dim()),
        }
    }

    /// `π: g → g_Lie`, with `[n, ξ]` computed through any lift of `ξ`.
    pub fn from_leibniz(g: &LeibnizAlgebra) -> Result<LmLieObject> {
        let (lie, pi) = reduced_lie(g)?;
        let (_, section) = crate::subspace::quotient_basis(g.dim(), &crate::leibniz::squares_ideal(g).0)?;
        let action = g.bracket();
        let mut t = StructureTensor::zeros(g.field(), (g.dim(), lie.dim(), g.dim()));
        for n in 0..g.dim() {
            for xi in 0..lie.dim() {
                let v = action.apply_left_basis(n, &section.column(xi));
                for (k, s) in v.into_iter().enumerate() {
                    t.set(n, xi, k, s);
                }
            }
        }
        LmLieObject::new(lie, RightLieModule::new(t)?, pi)
    }

    pub fn object(&self) -> LmObject {
        LmObject::new(self.f.clone())
    }

    pub fn field(&self) -> Field {
        self.lie.field()
    }

    /// The Leibniz bracket `[n1, n2]_N = [n1, f(n2)]` on `N`.
    pub fn n_bracket(&self) -> StructureTensor {
        let d = self.module.dim();
        let mut t = StructureTensor::zeros(self.field(), (d, d, d));
        for j in 0..d {
            let fj = self.f.column(j);
            for i in 0..d {
                let v = self.module.action().apply_left_basis(i, &fj);
                for (k, s) in v.into_iter().enumerate() {
                    t.set(i, j, k, s);
                }
            }
        }
        t
    }

    pub fn change_basis(&self, pn: &Matrix, pl: &Matrix) -> Result<LmLieObject> {
        let pl_inv = pl
            .inverse()
            .ok_or_else(|| Error::Invalid("singular basis change".into()))?;
        LmLieObject::new(
            self.lie.change_basis(pl)?,
            self.module.change_basis(pn, pl)?,
            pl_inv.mul(&self.f).mul(pn),
        )
    }
}

pub fn check_lie_object(x: &LmLieObject) -> CheckReport {
    let mut r = Recorder::new("lie-object", x.field());
    lie_object_laws(&mut r, x);
    r.finish()
}

pub(crate) fn lie_object_laws(r: &mut Recorder, x: &LmLieObject) {
    lie_laws(r, x.lie.bracket(), "L");
    right_module_laws(r, &x.lie, &x.module, "N").expect("shapes checked on construction");
    let id_l = Matrix::identity(x.field(), x.lie.dim());
    bracket_map_law(
        r,
        Axiom::FEquivariant,
        "f",
        &x.f,
        x.module.action(),
        &x.f,
        &id_l,
        x.lie.bracket(),
    );
}

/// Data of a left module over an algebra object: `u: V → W` between
/// `A`-modules and `α_ℓ` given on `M ⊗ W` as a bilinear map with tensor dims
/// `(dim M, dim W, dim V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraObjectModule {
    pub object: LmObject,
    pub act_v: AModule,
    pub act_w: AModule,
    pub alpha: StructureTensor,
}

pub fn check_module_over_algebra_object(x: &LmAlgebraObject, v: &AlgebraObjectModule) -> Result<CheckReport> {
    let field = x.field();
    let a = &x.algebra;
    let (dv, dw) = (v.object.top(), v.object.bottom());
    same_dim("V module dimension", dv, v.act_v.dim())?;
    same_dim("W module dimension", dw, v.act_w.dim())?;
    if v.alpha.dims() != (x.module.dim(), dw, dv) {
        return Err(Error::Invalid("alpha must have dims (dim M, dim W, dim V)".into()));
    }
    same_field(field, v.alpha.field())?;
    let mut r = Recorder::new("algebra-object-module", field);
    module_laws(&mut r, a, &v.act_v, "V")?;
    module_laws(&mut r, a, &v.act_w, "W")?;
    module_map_law(&mut r, Axiom::ULinear, "u", a.dim(), &v.act_v, &v.act_w, v.object.u());
    let m = &x.module;
    for i in 0..a.dim() {
        for j in 0..m.dim() {
            let am = m.action().slice(i, j);
            for k in 0..dw {
                let aw = v.act_w.action().slice(i, k);
                let left = v.alpha.apply_right_basis(am, k);
                let right = v.alpha.apply_left_basis(j, aw);
                r.expect_zero(Axiom::AlphaEllDescent, "alpha", &[i, j, k], sub_vectors(&left, &right));
                let scaled = v.act_v.action().apply_left_basis(i, v.alpha.slice(j, k));
                r.expect_zero(Axiom::AlphaEllLinear, "alpha", &[i, j, k], sub_vectors(&left, &scaled));
            }
        }
    }
    for j in 0..m.dim() {
        let gm = x.g.column(j);
        for k in 0..dw {
            let left = v.object.u().apply(v.alpha.slice(j, k));
            let right = v.act_w.action().apply_right_basis(&gm, k);
            r.expect_zero(Axiom::AlphaEll, "alpha", &[j, k], sub_vectors(&left, &right));
        }
    }
    Ok(r.finish())
}

/// Data of a left module over a Lie object: `u: V → W`, `α0` on `W`, `α2` on
/// `V`, and `α1: N ⊗ W → V` with tensor dims `(dim N, dim W, dim V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieObjectModule {
    pub object: LmObject,
    pub alpha0: LieModule,
    pub alpha1: StructureTensor,
    pub alpha2: LieModule,
}

impl LieObjectModule {
    /// The Lie object acting on itself.
    pub fn regular(x: &LmLieObject) -> LieObjectModule {
        let alpha2 = x.module.action().swap_arguments().neg();
        LieObjectModule {
            object: x.object(),
            alpha0: LieModule::adjoint(&x.lie),
            alpha1: x.module.action().clone(),
            alpha2: LieModule::new(alpha2).expect("transported action"),
        }
    }

    /// All actions zero.
    pub fn trivial(x: &LmLieObject, object: LmObject) -> LieObjectModule {
        let f = x.field();
        let (dv, dw) = (object.top(), object.bottom());
        LieObjectModule {
            alpha0: LieModule::trivial(f, x.lie.dim(), dw),
            alpha1: StructureTensor::zeros(f, (x.module.dim(), dw, dv)),
            alpha2: LieModule::trivial(f, x.lie.dim(), dv),
            object,
        }
    }
}

pub fn check_module_over_lie_object(x: &LmLieObject, v: &LieObjectModule) -> Result<CheckReport> {
    let field = x.field();
    let (dv, dw) = (v.object.top(), v.object.bottom());
    same_dim("alpha0 module dimension", dw, v.alpha0.dim())?;
    same_dim("alpha2 module dimension", dv, v.alpha2.dim())?;
    if v.alpha1.dims() != (x.module.dim(), dw, dv) {
        return Err(Error::Invalid("alpha1 must have dims (dim N, dim W, dim V)".into()));
    }
    same_field(field, v.alpha1.field())?;
    let mut r = Recorder::new("lie-object-module", field);
    lie_module_laws(&mut r, &x.lie, &v.alpha0, "W")?;
    lie_module_laws(&mut r, &x.lie, &v.alpha2, "V")?;
    let a0 = v.alpha0.action();
    let a1 = &v.alpha1;
    let a2 = v.alpha2.action();
    let nact = x.module.action();
    for n in 0..x.module.dim() {
        for xi in 0..x.lie.dim() {
            let nxi = nact.slice(n, xi);
            for w in 0..dw {
                let left = a1.apply_right_basis(nxi, w);
                let first = a1.apply_left_basis(n, a0.slice(xi, w));
                let second = a2.apply_left_basis(xi, a1.slice(n, w));
                r.expect_zero(
                    Axiom::Compat3,
                    "alpha1",
                    &[n, xi, w],
                    sub_vectors(&left, &sub_vectors(&first, &second)),
                );
            }
        }
    }
    for n in 0..x.module.dim() {
        let fn_ = x.f.column(n);
        for w in 0..dw {
            let left = v.object.u().apply(a1.slice(n, w));
            let right = a0.apply_right_basis(&fn_, w);
            r.expect_zero(Axiom::Alpha1F, "alpha1", &[n, w], sub_vectors(&left, &right));
        }
    }
    for xi in 0..x.lie.dim() {
        for j in 0..dv {
            let left = v.object.u().apply(a2.slice(xi, j));
            let right = a0.apply_left_basis(xi, &v.object.u().column(j));
            r.expect_zero(Axiom::Alpha2U, "alpha2", &[xi, j], sub_vectors(&left, &right));
        }
    }
    Ok(r.finish())
}

/// Residuals of `[n1, a·s]_N` for squares `s` of the bracket `[n1,n2]_N =
/// [n1, f(n2)]`. Squares are generated by `[n_j,n_j]_N` and
/// `[n_j,n_k]_N + [n_k,n_j]_N`; the witness is `(n1, a, j, k)` with `j ≤ k`.
pub fn check_squares_annihilation(x: &LmLieObject, a: &CommAlgebra, action_n: &AModule) -> Result<CheckReport> {
    let mut r = Recorder::new("extra", x.field());
    squares_annihilation_law(&mut r, x, a, action_n)?;
    Ok(r.finish())
}

pub(crate) fn squares_annihilation_law(
    r: &mut Recorder,
    x: &LmLieObject,
    a: &CommAlgebra,
    action_n: &AModule,
) -> Result<()> {
    same_dim("N module dimension", x.module.dim(), action_n.dim())?;
    same_dim("N module algebra dimension", a.dim(), action_n.algebra_dim())?;
    let b = x.n_bracket();
    let d = x.module.dim();
    for j in 0..d {
        for k in j..d {
            let s = if j == k {
                b.slice(j, j).to_vec()
            } else {
                add_vectors(b.slice(j, k), b.slice(k, j))
            };
            for i in 0..a.dim() {
                let as_ = action_n.action().apply_left_basis(i, &s);
                for n1 in 0..d {
                    r.expect_zero(Axiom::Extra, "N", &[n1, i, j, k], b.apply_left_basis(n1, &as_));
                }
            }
        }
    }
    Ok(())
}

/// A morphism of algebra objects `(φ1: M → M′, φ0: A → A′)`.
pub fn check_algebra_morphism(
    x: &LmAlgebraObject,
    y: &LmAlgebraObject,
    phi1: &Matrix,
    phi0: &Matrix,
) -> Result<CheckReport> {
    let mut r = Recorder::new("structure-morphism", x.field());
    square_law(&mut r, Axiom::HgcompSquare, &x.object(), &y.object(), phi1, phi0)?;
    let (a, b) = (&x.algebra, &y.algebra);
    for i in 0..a.dim() {
        let pa = phi0.column(i);
        for j in 0..x.module.dim() {
            let left = phi1.apply(x.module.action().slice(i, j));
            let right = y.module.act(&pa, &phi1.column(j));
            r.expect_zero(Axiom::AlgebraMap1, "phi1", &[i, j], sub_vectors(&left, &right));
        }
    }
    bracket_map_law(&mut r, Axiom::AlgebraMap0, "phi0", phi0, a.mult(), phi0, phi0, b.mult());
    Ok(r.finish())
}

/// A morphism of Lie objects `(φ1: N → N′, φ0: L → L′)`.
pub fn check_lie_morphism(x: &LmLieObject, y: &LmLieObject, phi1: &Matrix, phi0: &Matrix) -> Result<CheckReport> {
    let mut r = Recorder::new("structure-morphism", x.field());
    square_law(&mut r, Axiom::HgcompSquare, &x.object(), &y.object(), phi1, phi0)?;
    bracket_map_law(
        &mut r,
        Axiom::LieMap1,
        "phi1",
        phi1,
        x.module.action(),
        phi1,
        phi0,
        y.module.action(),
    );
    bracket_map_law(
        &mut r,
        Axiom::LieMap0,
        "phi0",
        phi0,
        x.lie.bracket(),
        phi0,
        phi0,
        y.lie.bracket(),
    );
    Ok(r.finish())
}

/// A basis of the space of commuting squares `source → target`.
pub fn morphism_space(source: &LmObject, target: &LmObject) -> Vec<(Matrix, Matrix)> {
    let f = source.field();
    let (v, w, v2, w2) = (source.top(), source.bottom(), target.top(), target.bottom());
    let n1 = v2 * v;
    let n0 = w2 * w;
    // unknowns: h1 row-major then h0 row-major; equations: (u′h1 − h0u)[r][c]
    let mut eq = Matrix::zeros(f, w2 * v, n1 + n0);
    for row in 0..w2 {
        for col in 0..v {
            let e = row * v + col;
            for k in 0..v2 {
                eq.set(e, k * v + col, target.u().get(row, k).clone());
            }
            for k in 0..w {
                let idx = n1 + row * w + k;
                let cur = eq.get(e, idx).clone();
                eq.set(e, idx, &cur - source.u().get(k, col));
            }
        }
    }
    eq.nullspace()
        .basis()
        .iter()
        .map(|x| {
            let h1 =
                Matrix::from_rows(f, v, (0..v2).map(|i| x[i * v..(i + 1) * v].to_vec()).collect()).expect("h1 shape");
            let h0 = Matrix::from_rows(
                f,
                w,
                (0..w2).map(|i| x[n1 + i * w..n1 + (i + 1) * w].to_vec()).collect(),
            )
            .expect("h0 shape");
            (h1, h0)
        })
        .collect()
}
