//! Lie–Rinehart pairs, their modules, and Lie–Rinehart algebra objects in
//! the category of linear maps.

use crate::algebra::{comm_algebra_laws, module_laws, AModule, CommAlgebra};
use crate::derivations::{
    check_action_shapes, comp_der1_a_law, comp_der1_laws, comp_der3_laws, derivation_laws, operator_lie_law,
    operator_linear_law, DerivationAction,
};
use crate::error::{same_dim, same_field, Error, Result};
use crate::leibniz::{lie_laws, LieAlgebra, RightLieModule};
use crate::lm::{algebra_object_laws, lie_object_laws, squares_annihilation_law, LmAlgebraObject, LmLieObject};
use crate::matrix::{add_vectors, sub_vectors};
use crate::report::{Axiom, CheckReport, Recorder};
use crate::scalar::Field;
use crate::tensor::StructureTensor;

/// A Lie algebra `L` that is an `A`-module, with anchor `ρ: L → Hom(A, A)`
/// given as a tensor of dims `(dim L, dim A, dim A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRinehartPair {
    pub algebra: CommAlgebra,
    pub lie: LieAlgebra,
    pub action: AModule,
    pub anchor: StructureTensor,
}

impl LieRinehartPair {
    pub fn new(algebra: CommAlgebra, lie: LieAlgebra, action: AModule, anchor: StructureTensor) -> Result<Self> {
        let f = algebra.field();
        same_field(f, lie.field())?;
        same_field(f, action.field())?;
        same_field(f, anchor.field())?;
        same_dim("L module algebra dimension", algebra.dim(), action.algebra_dim())?;
        same_dim("L module dimension", lie.dim(), action.dim())?;
        if anchor.dims() != (lie.dim(), algebra.dim(), algebra.dim()) {
            return Err(Error::Invalid(alloc::format!(
                "anchor must have dims {:?}, found {:?}",
                (lie.dim(), algebra.dim(), algebra.dim()),
                anchor.dims()
            )));
        }
        Ok(LieRinehartPair {
            algebra,
            lie,
            action,
            anchor,
        })
    }

    /// A Lie algebra over the ground field with zero anchor.
    pub fn over_field(lie: &LieAlgebra) -> LieRinehartPair {
        let f = lie.field();
        let k = CommAlgebra::ground(f);
        let mut t = StructureTensor::zeros(f, (1, lie.dim(), lie.dim()));
        for j in 0..lie.dim() {
            t.set(0, j, j, f.one());
        }
        LieRinehartPair {
            algebra: k,
            lie: lie.clone(),
            action: AModule::new(t).expect("scalar action"),
            anchor: StructureTensor::zeros(f, (lie.dim(), 1, 1)),
        }
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }
}

pub fn check_lie_rinehart_pair(p: &LieRinehartPair) -> CheckReport {
    let mut r = Recorder::new("lr-pair", p.field());
    pair_laws(&mut r, p, "anchor");
    r.finish()
}

pub(crate) fn pair_laws(r: &mut Recorder, p: &LieRinehartPair, anchor_on: &str) {
    comm_algebra_laws(r, &p.algebra, "A");
    lie_laws(r, p.lie.bracket(), "L");
    module_laws(r, &p.algebra, &p.action, "L").expect("shapes checked on construction");
    let a_reg = p.algebra.regular_module();
    derivation_laws(r, Axiom::AnchorDer, anchor_on, &p.algebra, &a_reg, &p.anchor);
    operator_linear_law(r, Axiom::AnchorLinear, anchor_on, &p.action, &a_reg, &p.anchor);
    operator_lie_law(r, Axiom::AnchorLie, anchor_on, &p.lie, &p.anchor);
    leibniz_rule_law(r, p);
}

/// `[ξ, a·ζ] = a·[ξ,ζ] + ρ(ξ)(a)·ζ`, witness `(ξ, a, ζ)`.
fn leibniz_rule_law(r: &mut Recorder, p: &LieRinehartPair) {
    let b = p.lie.bracket();
    let act = p.action.action();
    for xi in 0..p.lie.dim() {
        for i in 0..p.algebra.dim() {
            for z in 0..p.lie.dim() {
                let left = b.apply_left_basis(xi, act.slice(i, z));
                let t1 = act.apply_left_basis(i, b.slice(xi, z));
                let t2 = act.apply_right_basis(p.anchor.slice(xi, i), z);
                r.expect_zero(
                    Axiom::LrLeibniz,
                    "L",
                    &[xi, i, z],
                    sub_vectors(&left, &add_vectors(&t1, &t2)),
                );
            }
        }
    }
}

/// Checks that `ρ2: L → Hom(M, M)` (dims `(dim L, dim M, dim M)`) makes `M`
/// a left `(A, L)`-module.
pub fn check_lr_module(p: &LieRinehartPair, m: &AModule, rho2: &StructureTensor) -> Result<CheckReport> {
    same_field(p.field(), m.field())?;
    same_field(p.field(), rho2.field())?;
    if rho2.dims() != (p.lie.dim(), m.dim(), m.dim()) {
        return Err(Error::Invalid(alloc::format!(
            "rho2 must have dims {:?}, found {:?}",
            (p.lie.dim(), m.dim(), m.dim()),
            rho2.dims()
        )));
    }
    let mut r = Recorder::new("lr-module", p.field());
    module_laws(&mut r, &p.algebra, m, "M")?;
    operator_lie_law(&mut r, Axiom::Rho2Lie, "rho2", &p.lie, rho2);
    comp_der1_a_law(&mut r, m, &p.anchor, rho2);
    operator_linear_law(&mut r, Axiom::Rho2Linear, "rho2", &p.action, m, rho2);
    Ok(r.finish())
}

/// A candidate Lie–Rinehart algebra object: `g: M → A`, `f: N → L`, the
/// maps `ρ0, ρ1, ρ2`, `λ` on `M ⊗ L` with dims `(dim M, dim L, dim N)`, and
/// the `A`-actions on `N` and `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremOneData {
    pub alg: LmAlgebraObject,
    pub lie: LmLieObject,
    pub rho0: StructureTensor,
    pub rho1: StructureTensor,
    pub rho2: StructureTensor,
    pub lambda: StructureTensor,
    pub action_n: AModule,
    pub action_l: AModule,
}

impl TheoremOneData {
    pub fn field(&self) -> Field {
        self.alg.field()
    }

    /// `(A, L)` with anchor `ρ0`.
    pub fn pair(&self) -> LieRinehartPair {
        LieRinehartPair {
            algebra: self.alg.algebra.clone(),
            lie: self.lie.lie.clone(),
            action: self.action_l.clone(),
            anchor: self.rho0.clone(),
        }
    }

    pub fn derivation_action(&self) -> DerivationAction {
        DerivationAction {
            rho0: self.rho0.clone(),
            rho1: self.rho1.clone(),
            rho2: self.rho2.clone(),
        }
    }

    fn check_shapes(&self) -> Result<()> {
        check_action_shapes(&self.alg, &self.lie, &self.derivation_action())?;
        let (da, dm) = (self.alg.algebra.dim(), self.alg.module.dim());
        let (dl, dn) = (self.lie.lie.dim(), self.lie.module.dim());
        for (m, d, what) in [(&self.action_n, dn, "N"), (&self.action_l, dl, "L")] {
            same_field(self.field(), m.field())?;
            same_dim(&alloc::format!("{what} module algebra dimension"), da, m.algebra_dim())?;
            same_dim(&alloc::format!("{what} module dimension"), d, m.dim())?;
        }
        same_field(self.field(), self.lambda.field())?;
        if self.lambda.dims() != (dm, dl, dn) {
            return Err(Error::Invalid(alloc::format!(
                "lambda must have dims {:?}, found {:?}",
                (dm, dl, dn),
                self.lambda.dims()
            )));
        }
        Ok(())
    }
}

pub fn check_theorem1_object(d: &TheoremOneData) -> Result<CheckReport> {
    d.check_shapes()?;
    let mut r = Recorder::new("theorem1", d.field());
    let a = &d.alg.algebra;

    r.set_clause("T1-1");
    algebra_object_laws(&mut r, &d.alg);
    lie_object_laws(&mut r, &d.lie);

    r.set_clause("T1-2");
    pair_laws(&mut r, &d.pair(), "rho0");

    r.set_clause("T1-3");
    operator_lie_law(&mut r, Axiom::Rho2Lie, "rho2", &d.lie.lie, &d.rho2);
    comp_der1_a_law(&mut r, &d.alg.module, &d.rho0, &d.rho2);
    operator_linear_law(&mut r, Axiom::Rho2Linear, "rho2", &d.action_l, &d.alg.module, &d.rho2);

    r.set_clause("T1-4");
    module_laws(&mut r, a, &d.action_n, "N")?;
    mixed_law(&mut r, d);

    r.set_clause("T1-5");
    crate::algebra::module_map_law(&mut r, Axiom::FLinear, "f", a.dim(), &d.action_n, &d.action_l, &d.lie.f);
    crate::algebra::module_map_law(
        &mut r,
        Axiom::GLinear,
        "g",
        a.dim(),
        &d.alg.module,
        &a.regular_module(),
        &d.alg.g,
    );
    comp_der1_laws(&mut r, &d.alg, &d.rho0, &d.rho2);

    r.set_clause("T1-6");
    lambda_laws(&mut r, d);

    r.set_clause("T1-7");
    derivation_laws(&mut r, Axiom::Rho1Der, "rho1", a, &d.alg.module, &d.rho1);
    operator_linear_law(&mut r, Axiom::Rho1Linear, "rho1", &d.action_n, &d.alg.module, &d.rho1);
    comp_der3_laws(&mut r, &d.alg, &d.lie, &d.derivation_action());

    r.set_clause("T1-8");
    squares_annihilation_law(&mut r, &d.lie, a, &d.action_n)?;
    Ok(r.finish())
}

/// `[a·n, ξ] = a·[n,ξ] − ρ0(ξ)(a)·n`, witness `(a, n, ξ)`.
fn mixed_law(r: &mut Recorder, d: &TheoremOneData) {
    let act = d.action_n.action();
    let br = d.lie.module.action();
    for i in 0..d.alg.algebra.dim() {
        for n in 0..d.lie.module.dim() {
            for xi in 0..d.lie.lie.dim() {
                let left = br.apply_right_basis(act.slice(i, n), xi);
                let t1 = act.apply_left_basis(i, br.slice(n, xi));
                let t2 = act.apply_right_basis(d.rho0.slice(xi, i), n);
                r.expect_zero(
                    Axiom::Mixed,
                    "N",
                    &[i, n, xi],
                    add_vectors(&sub_vectors(&left, &t1), &t2),
                );
            }
        }
    }
}

/// `λ(a·m ⊗ ξ) = λ(m ⊗ a·ξ)` and `λ(a·m ⊗ ξ) = a·λ(m ⊗ ξ)`, witness `(a, m, ξ)`.
fn lambda_laws(r: &mut Recorder, d: &TheoremOneData) {
    let m = &d.alg.module;
    for i in 0..d.alg.algebra.dim() {
        for j in 0..m.dim() {
            for xi in 0..d.lie.lie.dim() {
                let left = d.lambda.apply_right_basis(m.action().slice(i, j), xi);
                let moved = d.lambda.apply_left_basis(j, d.action_l.action().slice(i, xi));
                r.expect_zero(Axiom::LambdaDescent, "lambda", &[i, j, xi], sub_vectors(&left, &moved));
                let scaled = d.action_n.action().apply_left_basis(i, d.lambda.slice(j, xi));
                r.expect_zero(Axiom::LambdaLinear, "lambda", &[i, j, xi], sub_vectors(&left, &scaled));
            }
        }
    }
}

/// The package over `(A →id A)` and `(L →id L)` with every `ρ` equal to the
/// anchor and `λ` the action of `A` on `L`.
pub fn build_tautological(p: &LieRinehartPair) -> Result<TheoremOneData> {
    let pre = check_lie_rinehart_pair(p);
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    Ok(TheoremOneData {
        alg: LmAlgebraObject::identity(&p.algebra),
        lie: LmLieObject::new(
            p.lie.clone(),
            RightLieModule::adjoint(&p.lie),
            crate::matrix::Matrix::identity(p.field(), p.lie.dim()),
        )?,
        rho0: p.anchor.clone(),
        rho1: p.anchor.clone(),
        rho2: p.anchor.clone(),
        lambda: p.action.action().clone(),
        action_n: p.action.clone(),
        action_l: p.action.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::derivations::{derivation_pair, universal_derivations};

    #[test]
    fn pair_over_field() {
        let q = Field::Rationals;
        assert!(check_lie_rinehart_pair(&LieRinehartPair::over_field(&catalog::sl2(q))).is_pass());
    }

    #[test]
    fn derivation_pair_is_valid() {
        let q = Field::Rationals;
        for n in 2..=4 {
            let p = derivation_pair(&catalog::truncated_poly(q, n)).unwrap();
            assert!(check_lie_rinehart_pair(&p).is_pass(), "n = {n}");
            let m = p.algebra.regular_module();
            assert!(check_lr_module(&p, &m, &p.anchor).unwrap().is_pass());
            let zero = StructureTensor::zeros(q, p.anchor.dims());
            let rep = check_lr_module(&p, &m, &zero).unwrap();
            assert!(rep.has(Axiom::CompDer1a));
        }
    }

    #[test]
    fn non_linear_anchor_is_caught() {
        let q = Field::Rationals;
        let mut p = derivation_pair(&catalog::truncated_poly(q, 3)).unwrap();
        for j in 0..3 {
            for k in 0..3 {
                let v = p.anchor.get(0, j, k) * &q.int(2);
                p.anchor.set(0, j, k, v);
            }
        }
        let rep = check_lie_rinehart_pair(&p);
        assert!(rep.has(Axiom::AnchorLinear));
    }

    #[test]
    fn tautological_and_universal_pass() {
        let q = Field::Rationals;
        for n in 2..=3 {
            let p = derivation_pair(&catalog::truncated_poly(q, n)).unwrap();
            let d = build_tautological(&p).unwrap();
            let rep = check_theorem1_object(&d).unwrap();
            assert!(rep.is_pass(), "{rep:?}");
        }
        let a = catalog::truncated_poly(q, 3);
        let u = universal_derivations(&LmAlgebraObject::identity(&a)).unwrap();
        let rep = check_theorem1_object(&u.theorem1_data().unwrap()).unwrap();
        assert!(rep.is_pass(), "{rep:?}");
    }

    #[test]
    fn trivial_object() {
        let q = Field::Rationals;
        let l = catalog::sl2(q);
        let k = CommAlgebra::ground(q);
        let p = LieRinehartPair::over_field(&l);
        let d = TheoremOneData {
            alg: LmAlgebraObject::zero(&k, &k.zero_module()).unwrap(),
            lie: LmLieObject::identity(&l),
            rho0: StructureTensor::zeros(q, (3, 1, 1)),
            rho1: StructureTensor::zeros(q, (3, 1, 0)),
            rho2: StructureTensor::zeros(q, (3, 0, 0)),
            lambda: StructureTensor::zeros(q, (0, 3, 3)),
            action_n: p.action.clone(),
            action_l: p.action,
        };
        assert!(check_theorem1_object(&d).unwrap().is_pass());
    }
}
