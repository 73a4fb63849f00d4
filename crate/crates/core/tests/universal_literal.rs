//! The universal derivation object read literally, with bottom `Der(A) ⊕ Hom(M, M)`
//! and bracket `([α, α′], −[β, β′])`, over `A = M = ℚ[x]/(x²)` and `g = id`.
//! It has the advertised 5-dimensional bottom but is not a Lie algebra object;
//! the library builds the compatible subalgebra instead.

use lmalg_core::catalog;
use lmalg_core::derivations::{coordinates_in, derivation_space, universal_derivations};
use lmalg_core::leibniz::{check_lie, elementary_matrices};
use lmalg_core::lie_rinehart::check_theorem1_object;
use lmalg_core::lm::{check_lie_object, LmAlgebraObject};
use lmalg_core::{Field, LieAlgebra, Matrix, StructureTensor};

const Q: Field = Field::Rationals;

struct Literal {
    /// Basis of `Der(A) ⊕ Hom(M, M)` as `(α, β)`.
    basis: Vec<(Matrix, Matrix)>,
    /// Basis of `Der(A, M)`.
    n: Vec<Matrix>,
}

fn literal() -> Literal {
    let a = catalog::truncated_poly(Q, 2);
    let m = a.regular_module();
    let der_a = derivation_space(&a, None).unwrap();
    let der_am = derivation_space(&a, Some(&m)).unwrap();
    let zero = Matrix::zeros(Q, 2, 2);
    let mut basis: Vec<(Matrix, Matrix)> = der_a.basis.iter().map(|d| (d.clone(), zero.clone())).collect();
    basis.extend(elementary_matrices(Q, 2).into_iter().map(|h| (zero.clone(), h)));
    Literal { basis, n: der_am.basis }
}

fn flatten(x: &(Matrix, Matrix)) -> Vec<lmalg_core::Scalar> {
    x.0.entries().iter().chain(x.1.entries()).cloned().collect()
}

fn bracket(x: &(Matrix, Matrix), y: &(Matrix, Matrix), sign: i64) -> (Matrix, Matrix) {
    (x.0.commutator(&y.0), x.1.commutator(&y.1).scale(&Q.int(sign)))
}

fn act(d: &Matrix, x: &(Matrix, Matrix)) -> Matrix {
    d.mul(&x.0).sub(&x.1.mul(d))
}

#[test]
fn bottom_is_a_five_dimensional_lie_algebra() {
    let lit = literal();
    assert_eq!(lit.n.len(), 1);
    assert_eq!(lit.basis.len(), 5);
    let coords: Vec<Vec<_>> = lit.basis.iter().map(flatten).collect();
    let span = Matrix::from_columns(Q, 8, &coords).unwrap();
    let mut t = StructureTensor::zeros(Q, (5, 5, 5));
    for (i, x) in lit.basis.iter().enumerate() {
        for (j, y) in lit.basis.iter().enumerate() {
            let c = span.solve(&flatten(&bracket(x, y, -1))).unwrap();
            for (k, s) in c.into_iter().enumerate() {
                t.set(i, j, k, s);
            }
        }
    }
    assert!(check_lie(&LieAlgebra::new(t).unwrap()).is_pass());
}

#[test]
fn action_leaves_the_derivations() {
    let lit = literal();
    let escapes = lit
        .basis
        .iter()
        .filter(|x| coordinates_in(&lit.n, &act(&lit.n[0], x)).is_none())
        .count();
    assert!(escapes > 0);
}

/// `[∂,[ξ,ζ]] − [[∂,ξ],ζ] + [[∂,ζ],ξ]` on `Hom(A, M)`, where the action is defined.
fn right_module_defect(lit: &Literal, sign: i64) -> usize {
    let d = &lit.n[0];
    let mut bad = 0;
    for x in &lit.basis {
        for y in &lit.basis {
            let lhs = act(d, &bracket(x, y, sign));
            let rhs = act(&act(d, x), y).sub(&act(&act(d, y), x));
            bad += usize::from(!lhs.sub(&rhs).is_zero());
        }
    }
    bad
}

#[test]
fn negated_hom_bracket_breaks_the_right_module_law() {
    let lit = literal();
    assert!(right_module_defect(&lit, -1) > 0);
    assert_eq!(right_module_defect(&lit, 1), 0);
}

#[test]
fn compatible_subalgebra_is_a_valid_object() {
    let a = catalog::truncated_poly(Q, 2);
    let u = universal_derivations(&LmAlgebraObject::identity(&a)).unwrap();
    assert_eq!(u.n_basis.len(), 1);
    assert_eq!(u.l_basis.len(), 1);
    assert!(check_lie_object(&u.lie).is_pass());
    assert!(check_theorem1_object(&u.theorem1_data().unwrap()).unwrap().is_pass());
}
