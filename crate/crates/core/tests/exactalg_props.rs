use num_bigint::BigInt;
use proptest::prelude::*;

use hpt_core::exactalg::{binom, lagrange_interpolate, IntMatrix, PolyMatrix, QPoly, XQPoly};
use hpt_core::sums::ReducedForm;
use hpt_core::system::{build_full_matrix, build_reduced_matrix};

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-50i64..50, 0..5).prop_map(|c| QPoly::from_i64s(&c))
}

fn xqpoly() -> impl Strategy<Value = XQPoly> {
    prop::collection::vec(qpoly(), 0..4).prop_map(XQPoly::from_coeffs)
}

fn poly_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..4, 2), n * n).prop_map(move |cells| {
        let rows = cells
            .chunks(n)
            .map(|r| r.iter().map(|c| QPoly::linear(c[0], c[1])).collect())
            .collect();
        PolyMatrix::from_rows(rows).unwrap()
    })
}

proptest! {
    #[test]
    fn qpoly_ring_axioms(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &QPoly::one(), a.clone());
        prop_assert_eq!(-(-&a), a.clone());
    }

    #[test]
    fn qpoly_evaluation_is_a_homomorphism(a in qpoly(), b in qpoly(), at in -20i64..20) {
        prop_assert_eq!((&a * &b).eval_i64(at), a.eval_i64(at) * b.eval_i64(at));
        prop_assert_eq!((&a + &b).eval_i64(at), a.eval_i64(at) + b.eval_i64(at));
    }

    #[test]
    fn xqpoly_ring_axioms(a in xqpoly(), b in xqpoly(), c in xqpoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn qpoly_display_parses_back(a in qpoly()) {
        prop_assert_eq!(a.to_string().parse::<QPoly>().unwrap(), a);
    }

    #[test]
    fn interpolation_recovers_polynomials(a in qpoly()) {
        let bound = a.degree().unwrap_or(0);
        let pts: Vec<_> = (0..=bound as i64 + 1).map(|i| (BigInt::from(i + 5), a.eval_i64(i + 5))).collect();
        prop_assert_eq!(lagrange_interpolate(&pts, bound).unwrap(), a);
    }

    #[test]
    fn charpoly_q_matches_integer_charpoly(m in poly_matrix(4), at in 20i64..60) {
        let cp = m.charpoly().unwrap();
        let q = BigInt::from(at);
        prop_assert_eq!(cp.eval_q(&q), m.eval(&q).charpoly());
    }

    #[test]
    fn charpoly_constant_term_is_signed_det(cells in prop::collection::vec(-6i64..7, 16)) {
        let rows: Vec<&[i64]> = cells.chunks(4).collect();
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        prop_assert_eq!(m.charpoly().coeff(0), m.det());
    }

    #[test]
    fn triangular_charpoly(diag in prop::collection::vec(-9i64..10, 1..6), fill in -9i64..10) {
        let n = diag.len();
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::from(diag[i]));
            for j in i + 1..n {
                m.set(i, j, BigInt::from(fill + (i * j) as i64));
            }
        }
        let mut expected = hpt_core::exactalg::IntPoly::one();
        for d in &diag {
            expected = &expected * &hpt_core::exactalg::IntPoly::from_i64s(&[-d, 1]);
        }
        prop_assert_eq!(m.charpoly(), expected);
    }

    #[test]
    fn binomial_identity(z in 0i64..=30, d_frac in 0.0f64..=1.0, r_frac in 0.0f64..=1.0) {
        let delta = (d_frac * z as f64) as i64;
        let r = (r_frac * z as f64) as i64;
        let lhs: BigInt = (0..=delta)
            .map(|t| {
                let term = binom(delta, t) * binom(z - t, r);
                if t % 2 == 0 { term } else { -term }
            })
            .sum();
        prop_assert_eq!(lhs, binom(z - delta, r - delta));
    }
}

#[test]
fn full_charpoly_held_out_points() {
    for k in [3, 6, 9] {
        let m = build_full_matrix(k).unwrap().matrix;
        let cp = m.charpoly().unwrap();
        for q in [31i64, 97, 1000] {
            let q = BigInt::from(q);
            assert_eq!(cp.eval_q(&q), m.eval(&q).charpoly(), "k={k}");
        }
        assert!(cp.q_degree().unwrap() <= 2);
    }
}

#[test]
fn reduced_charpoly_held_out_points() {
    for k in [4, 7] {
        let m = build_reduced_matrix(k, ReducedForm::Folded).unwrap().matrix;
        let cp = m.charpoly().unwrap();
        let q = BigInt::from(123);
        assert_eq!(cp.eval_q(&q), m.eval(&q).charpoly());
    }
}

#[test]
fn qpoly_examples() {
    assert_eq!(QPoly::linear(4, 4).eval_i64(6), BigInt::from(28));
    assert!((&QPoly::linear(-1, 1) + &QPoly::linear(1, -1)).is_zero());
    assert_eq!(
        &QPoly::linear(2, 1) * &QPoly::linear(-1, 1),
        QPoly::from_i64s(&[-2, 1, 1])
    );
}
