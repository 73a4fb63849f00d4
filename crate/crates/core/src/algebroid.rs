//! Leibniz algebroids, the functor from Lie–Rinehart algebra objects, and
//! reduction to Lie–Rinehart pairs.

use alloc::vec::Vec;

use crate::algebra::{comm_algebra_laws, module_laws, AModule, CommAlgebra};
use crate::derivations::{derivation_laws, operator_linear_law};
use crate::error::{same_dim, same_field, Error, Result};
use crate::leibniz::{leibniz_laws, reduced_lie, squares_ideal, LeibnizAlgebra};
use crate::lie_rinehart::{
    check_lie_rinehart_pair, check_lr_module, check_theorem1_object, LieRinehartPair, TheoremOneData,
};
use crate::matrix::{add_vectors, sub_vectors, Matrix};
use crate::report::{Axiom, CheckReport, Recorder};
use crate::scalar::Field;
use crate::tensor::StructureTensor;

/// A right Leibniz algebra `E` that is an `A`-module, with anchor
/// `ρ: E → Hom(A, A)` of dims `(dim E, dim A, dim A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebroid {
    pub algebra: CommAlgebra,
    pub bracket: LeibnizAlgebra,
    pub action: AModule,
    pub anchor: StructureTensor,
}

impl LeibnizAlgebroid {
    pub fn new(
        algebra: CommAlgebra,
        bracket: LeibnizAlgebra,
        action: AModule,
        anchor: StructureTensor,
    ) -> Result<Self> {
        let f = algebra.field();
        same_field(f, bracket.field())?;
        same_field(f, action.field())?;
        same_field(f, anchor.field())?;
        same_dim("E module algebra dimension", algebra.dim(), action.algebra_dim())?;
        same_dim("E module dimension", bracket.dim(), action.dim())?;
        if anchor.dims() != (bracket.dim(), algebra.dim(), algebra.dim()) {
            return Err(Error::Invalid(alloc::format!(
                "anchor must have dims {:?}, found {:?}",
                (bracket.dim(), algebra.dim(), algebra.dim()),
                anchor.dims()
            )));
        }
        Ok(LeibnizAlgebroid {
            algebra,
            bracket,
            action,
            anchor,
        })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }
}

pub fn check_leibniz_algebroid(x: &LeibnizAlgebroid) -> CheckReport {
    let mut r = Recorder::new("algebroid", x.field());
    comm_algebra_laws(&mut r, &x.algebra, "A");
    leibniz_laws(&mut r, x.bracket.bracket(), "E");
    module_laws(&mut r, &x.algebra, &x.action, "E").expect("shapes checked on construction");
    let a_reg = x.algebra.regular_module();
    derivation_laws(&mut r, Axiom::AnchorDer, "anchor", &x.algebra, &a_reg, &x.anchor);
    operator_linear_law(&mut r, Axiom::AnchorLinear, "anchor", &x.action, &a_reg, &x.anchor);
    let ops: Vec<Matrix> = (0..x.dim()).map(|i| x.anchor.left_basis_operator(i)).collect();
    let b = x.bracket.bracket();
    for i in 0..x.dim() {
        for j in 0..x.dim() {
            let left = x.anchor.left_operator(b.slice(i, j));
            let right = ops[j].commutator(&ops[i]);
            r.expect_zero(
                Axiom::LbAnchorAntihom,
                "anchor",
                &[i, j],
                left.sub(&right).entries().to_vec(),
            );
        }
    }
    let act = x.action.action();
    for a in 0..x.algebra.dim() {
        for e1 in 0..x.dim() {
            for e2 in 0..x.dim() {
                let left = b.apply_right_basis(act.slice(a, e1), e2);
                let t1 = act.apply_left_basis(a, b.slice(e1, e2));
                let t2 = act.apply_right_basis(x.anchor.slice(e2, a), e1);
                r.expect_zero(
                    Axiom::LbRule,
                    "E",
                    &[a, e1, e2],
                    sub_vectors(&left, &add_vectors(&t1, &t2)),
                );
            }
        }
    }
    r.finish()
}

/// The second-slot rule `[e1, a·e2] = a·[e1,e2] − ρ(e1)(a)·e2` on every basis
/// triple `(a, e1, e2)`.
pub fn check_local(x: &LeibnizAlgebroid) -> CheckReport {
    let mut r = Recorder::new("local", x.field());
    let b = x.bracket.bracket();
    let act = x.action.action();
    for a in 0..x.algebra.dim() {
        for e1 in 0..x.dim() {
            for e2 in 0..x.dim() {
                let left = b.apply_left_basis(e1, act.slice(a, e2));
                let t1 = act.apply_left_basis(a, b.slice(e1, e2));
                let t2 = act.apply_right_basis(x.anchor.slice(e1, a), e2);
                r.expect_zero(
                    Axiom::Local,
                    "E",
                    &[a, e1, e2],
                    add_vectors(&sub_vectors(&left, &t1), &t2),
                );
            }
        }
    }
    r.finish()
}

/// The Leibniz algebroid on `M ⊕ N` (coordinates of `M` first) with bracket
/// `[m1+n1, m2+n2] = −ρ2(f(n2))(m1) + [n1, f(n2)]` and anchor `−ρ0∘f` on `N`,
/// zero on `M`.
pub fn theorem2_functor(d: &TheoremOneData) -> Result<LeibnizAlgebroid> {
    let pre = check_theorem1_object(d)?;
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    let field = d.field();
    let (da, dm, dn) = (d.alg.algebra.dim(), d.alg.module.dim(), d.lie.module.dim());
    let de = dm + dn;
    let mut bracket = StructureTensor::zeros(field, (de, de, de));
    let mut anchor = StructureTensor::zeros(field, (de, da, da));
    let nact = d.lie.module.action();
    for j in 0..dn {
        let fj = d.lie.f.column(j);
        let rho2 = d.rho2.left_operator(&fj);
        for i in 0..dm {
            for (k, s) in rho2.column(i).into_iter().enumerate() {
                bracket.set(i, dm + j, k, -s);
            }
        }
        for i in 0..dn {
            for (k, s) in nact.apply_left_basis(i, &fj).into_iter().enumerate() {
                bracket.set(dm + i, dm + j, dm + k, s);
            }
        }
        let rho0 = d.rho0.left_operator(&fj);
        for a in 0..da {
            for b in 0..da {
                anchor.set(dm + j, a, b, -rho0.get(b, a).clone());
            }
        }
    }
    let action = d.alg.module.direct_sum(&d.action_n)?;
    LeibnizAlgebroid::new(d.alg.algebra.clone(), LeibnizAlgebra::new(bracket)?, action, anchor)
}

/// The algebroid on `M ⊕ L` with bracket `[m1+ξ, m2+ζ] = −∇_ζ(m1) + [ξ,ζ]`
/// and anchor `−ρ` on `L`, zero on `M`. `nabla` has dims `(dim L, dim M, dim M)`.
pub fn hemi_semi_algebroid(p: &LieRinehartPair, m: &AModule, nabla: &StructureTensor) -> Result<LeibnizAlgebroid> {
    let pre = check_lie_rinehart_pair(p);
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    let pre = check_lr_module(p, m, nabla)?;
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    let field = p.field();
    let (da, dm, dl) = (p.algebra.dim(), m.dim(), p.lie.dim());
    let de = dm + dl;
    let mut bracket = StructureTensor::zeros(field, (de, de, de));
    let mut anchor = StructureTensor::zeros(field, (de, da, da));
    for z in 0..dl {
        for i in 0..dm {
            for (k, s) in nabla.slice(z, i).iter().enumerate() {
                bracket.set(i, dm + z, k, -s);
            }
        }
        for xi in 0..dl {
            for (k, s) in p.lie.bracket().slice(xi, z).iter().enumerate() {
                bracket.set(dm + xi, dm + z, dm + k, s.clone());
            }
        }
        for a in 0..da {
            for (b, s) in p.anchor.slice(z, a).iter().enumerate() {
                anchor.set(dm + z, a, b, -s);
            }
        }
    }
    let action = m.direct_sum(&p.action)?;
    LeibnizAlgebroid::new(p.algebra.clone(), LeibnizAlgebra::new(bracket)?, action, anchor)
}

/// A Lie–Rinehart pair viewed as a Leibniz algebroid with anchor `−ρ`.
pub fn from_lie_rinehart(p: &LieRinehartPair) -> LeibnizAlgebroid {
    LeibnizAlgebroid {
        algebra: p.algebra.clone(),
        bracket: p.lie.to_leibniz(),
        action: p.action.clone(),
        anchor: p.anchor.neg(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// The quotient by the squares ideal with anchor `−ρ`, and the projection.
    Pair { pair: LieRinehartPair, projection: Matrix },
    /// The squares ideal is not an `A`-submodule; witness `(a, k)` with `k`
    /// indexing the canonical basis of the ideal.
    Obstruction(CheckReport),
}

pub fn reduce_algebroid(x: &LeibnizAlgebroid) -> Result<Reduction> {
    let pre = check_leibniz_algebroid(x);
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    let (ideal, _) = squares_ideal(&x.bracket);
    let mut r = Recorder::new("reduce-algebroid", x.field());
    for a in 0..x.algebra.dim() {
        for (k, v) in ideal.basis().iter().enumerate() {
            let av = x.action.action().apply_left_basis(a, v);
            r.expect_zero(Axiom::AStable, "E", &[a, k], ideal.reduce(&av));
        }
    }
    if !r.is_clean() {
        return Ok(Reduction::Obstruction(r.finish()));
    }
    let (lie, pi) = reduced_lie(&x.bracket)?;
    let (_, section) = crate::subspace::quotient_basis(x.dim(), &ideal)?;
    let field = x.field();
    let dl = lie.dim();
    let mut act = StructureTensor::zeros(field, (x.algebra.dim(), dl, dl));
    for a in 0..x.algebra.dim() {
        for j in 0..dl {
            let v = pi.apply(&x.action.action().apply_left_basis(a, &section.column(j)));
            for (k, s) in v.into_iter().enumerate() {
                act.set(a, j, k, s);
            }
        }
    }
    let lifted: Vec<Matrix> = (0..dl)
        .map(|j| x.anchor.left_operator(&section.column(j)).neg())
        .collect();
    let anchor = StructureTensor::from_operators(field, x.algebra.dim(), x.algebra.dim(), &lifted)?;
    let pair = LieRinehartPair::new(x.algebra.clone(), lie, AModule::new(act)?, anchor)?;
    Ok(Reduction::Pair { pair, projection: pi })
}

/// Tests `A`-linearity of `γ(x⊗y) = ρ([x,y])` on `L ⊗ L`, where `A` acts on
/// the first factor. The residual is the flattened matrix
/// `γ((a·x)⊗y) − a·γ(x⊗y)` at witness `(a, x, y)`.
pub fn attempt_tensor_square_anchor(p: &LieRinehartPair) -> Result<CheckReport> {
    let pre = check_lie_rinehart_pair(p);
    if !pre.is_pass() {
        return Err(Error::precondition(pre));
    }
    let mut r = Recorder::new("tensor-square-anchor", p.field());
    let b = p.lie.bracket();
    let mult = p.algebra.regular_module();
    let gamma = |xv: &[crate::Scalar], y: usize| p.anchor.left_operator(&b.apply_right_basis(xv, y));
    for a in 0..p.algebra.dim() {
        let la = mult.basis_operator(a);
        for x in 0..p.lie.dim() {
            let ax = p.action.action().slice(a, x);
            for y in 0..p.lie.dim() {
                let left = gamma(ax, y);
                let right = la.mul(&p.anchor.left_operator(b.slice(x, y)));
                r.expect_zero(
                    Axiom::GammaLinear,
                    "L⊗L",
                    &[a, x, y],
                    left.sub(&right).entries().to_vec(),
                );
            }
        }
    }
    Ok(r.finish())
}
