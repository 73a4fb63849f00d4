use lmalg_core::algebra::check_comm_algebra;
use lmalg_core::catalog;
use lmalg_core::derivations::{derivation_space, universal_derivations};
use lmalg_core::leibniz::{check_leibniz, check_lie, hemi_semi_product, reduced_lie, tensor_square};
use lmalg_core::lie_rinehart::check_theorem1_object;
use lmalg_core::lm::{check_square, morphism_space, LmAlgebraObject, LmObject};
use lmalg_core::{Field, Matrix, Scalar};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        prop::sample::select(vec![2u64, 3, 5, 7, 31, 2_147_483_647]).prop_map(|p| Field::prime(p).unwrap()),
    ]
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows).prop_map(move |rows| {
        Matrix::from_rows(
            f,
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| f.int(x)).collect())
                .collect(),
        )
        .unwrap()
    })
}

fn field_and_matrix() -> impl Strategy<Value = (Field, Matrix)> {
    (field(), 0usize..5, 0usize..5).prop_flat_map(|(f, r, c)| matrix(f, r, c).prop_map(move |m| (f, m)))
}

fn field_and_square() -> impl Strategy<Value = (Field, Matrix)> {
    (field(), 1usize..5).prop_flat_map(|(f, n)| matrix(f, n, n).prop_map(move |m| (f, m)))
}

/// `x mod y` for polynomials with coefficients low degree first.
fn poly_rem(mut x: Vec<Scalar>, y: &[Scalar]) -> Vec<Scalar> {
    let lead_inv = y.last().unwrap().inv().unwrap();
    while x.len() >= y.len() {
        let c = x.last().unwrap() * &lead_inv;
        let shift = x.len() - y.len();
        for (i, b) in y.iter().enumerate() {
            x[shift + i] = &x[shift + i] - &(&c * b);
        }
        x.pop();
        while x.last().is_some_and(Scalar::is_zero) {
            x.pop();
        }
    }
    x
}

fn poly_gcd_degree(mut x: Vec<Scalar>, mut y: Vec<Scalar>) -> usize {
    while !y.is_empty() {
        let r = poly_rem(x, &y);
        x = y;
        y = r;
    }
    x.len() - 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(f in field(), a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let (a, b, c) = (f.int(a), f.int(b), f.int(c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(f.parse(&a.to_canonical()).unwrap(), a);
    }

    #[test]
    fn rank_nullity((_f, m) in field_and_matrix()) {
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.dim(), m.cols());
        for v in null.basis() {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_and_solve((f, m) in field_and_square(), x in prop::collection::vec(-3i64..=3, 4)) {
        let n = m.rows();
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(f, n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(f, n));
            }
            None => prop_assert!(m.rank() < n),
        }
        let x: Vec<Scalar> = x[..n].iter().map(|&v| f.int(v)).collect();
        let b = m.apply(&x);
        let y = m.solve(&b).unwrap();
        prop_assert_eq!(m.apply(&y), b);
    }

    #[test]
    fn basis_change_round_trips((f, p) in field_and_square().prop_filter("invertible 3x3", |(_, p)| p.rows() == 3 && p.inverse().is_some())) {
        let l = catalog::sl2(f);
        let there = l.change_basis(&p).unwrap();
        prop_assert!(check_lie(&there).is_pass());
        prop_assert_eq!(there.change_basis(&p.inverse().unwrap()).unwrap(), l);
    }

    #[test]
    fn commuting_squares_are_morphisms(
        (u, v) in (field(), 0usize..4, 0usize..4, 0usize..4, 0usize..4)
            .prop_flat_map(|(f, a, b, c, d)| (matrix(f, a, b), matrix(f, c, d)))
    ) {
        let (s, t) = (LmObject::new(u), LmObject::new(v));
        for (h1, h0) in morphism_space(&s, &t) {
            prop_assert!(check_square(&s, &t, &h1, &h0).unwrap().is_pass());
        }
    }

    /// `dim Der(ℚ[x]/(p)) = deg gcd(p, p′)`.
    #[test]
    fn derivations_of_monic_quotients(coeffs in prop::collection::vec(-2i64..=2, 1..5)) {
        let q = Field::Rationals;
        let a = catalog::monic_quotient(q, &coeffs);
        prop_assert!(check_comm_algebra(&a).is_pass());
        let n = coeffs.len();
        let mut p: Vec<Scalar> = coeffs.iter().map(|&c| q.int(c)).collect();
        p.push(q.one());
        let dp: Vec<Scalar> = (1..=n).map(|i| &p[i] * &q.int(i as i64)).collect();
        let der = derivation_space(&a, None).unwrap();
        prop_assert_eq!(der.dim(), poly_gcd_degree(p, dp));
        let u = universal_derivations(&LmAlgebraObject::identity(&a)).unwrap();
        prop_assert!(check_theorem1_object(&u.theorem1_data().unwrap()).unwrap().is_pass());
    }

    #[test]
    fn leibniz_constructions_stay_leibniz(f in field(), pick in 0usize..4) {
        let l = [catalog::nonabelian2(f), catalog::heisenberg(f), catalog::so3(f), catalog::borel2(f)][pick].clone();
        let t = tensor_square(&l).unwrap();
        prop_assert!(check_leibniz(&t).is_pass());
        let (lie, _) = reduced_lie(&t).unwrap();
        prop_assert!(check_lie(&lie).is_pass());
        let h = hemi_semi_product(&catalog::sl2(f), &catalog::sl2_natural(f)).unwrap();
        prop_assert!(check_leibniz(&h).is_pass());
    }
}
