//! Property-based invariants: pairing and parity laws of skew spectra,
//! extension contracts, eigensolver residuals, format round-trips, and
//! exact polynomial algebra.

use proptest::collection::vec;
use proptest::prelude::*;

use num_bigint::BigInt;
use skewq::exactpoly::{coefficient_checks, square_free_decomposition, IntPolynomial};
use skewq::extension::{extend_to_quasi_orthogonal, is_quasi_orthogonal, quasi_orthogonality_index};
use skewq::linalg::{
    gram, matrix_to_text, parse_matrix_text, symmetric_eigen, DenseMatrix, SkewMatrix,
};
use skewq::spectral::{skew_spectrum, DEFAULT_GAP_TOL};
use skewq::tournament::{
    classify_index, parse_tournament_text, tournament_char_poly, tournament_to_text, Tournament,
};

fn skew_strategy(max_order: usize) -> impl Strategy<Value = SkewMatrix> {
    (2..=max_order).prop_flat_map(|n| {
        vec(-1.0..1.0f64, n * (n - 1) / 2).prop_map(move |upper| {
            SkewMatrix::from_fn(n, |i, j| upper[i * n - i * (i + 1) / 2 + (j - i - 1)])
        })
    })
}

fn tournament_strategy(max_order: usize) -> impl Strategy<Value = Tournament> {
    (2..=max_order).prop_flat_map(|n| {
        any::<u64>().prop_map(move |code| {
            let pairs = n * (n - 1) / 2;
            Tournament::from_code(n, code & ((1u64 << pairs) - 1))
        })
    })
}

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    vec(-20i64..=20, 0..6).prop_map(|coeffs| IntPolynomial::from_i64(&coeffs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spectrum_pairs_account_for_the_order(s in skew_strategy(9)) {
        let spec = skew_spectrum(&s, DEFAULT_GAP_TOL).unwrap();
        let paired: usize = spec.clusters.iter().map(|c| 2 * c.multiplicity).sum();
        prop_assert_eq!(paired + spec.zero_multiplicity, s.order());
        for w in spec.clusters.windows(2) {
            prop_assert!(w[0].lambda > w[1].lambda, "clusters must descend");
        }
        for c in &spec.clusters {
            prop_assert!(c.lambda > 0.0);
        }
        prop_assert_eq!(spec.defect() % 2, s.order() % 2);
    }

    #[test]
    fn spectrum_preserves_the_frobenius_norm(s in skew_strategy(9)) {
        let spec = skew_spectrum(&s, DEFAULT_GAP_TOL).unwrap();
        let energy: f64 = spec
            .clusters
            .iter()
            .map(|c| 2.0 * c.multiplicity as f64 * c.lambda * c.lambda)
            .sum();
        let norm2 = s.frobenius_norm().powi(2);
        prop_assert!(
            (energy - norm2).abs() <= 1e-8 * norm2.max(1.0),
            "sum of squared magnitudes {} vs ||S||^2 {}",
            energy,
            norm2
        );
    }

    #[test]
    fn spectrum_is_bit_deterministic(s in skew_strategy(8)) {
        let a = skew_spectrum(&s, DEFAULT_GAP_TOL).unwrap();
        let b = skew_spectrum(&s, DEFAULT_GAP_TOL).unwrap();
        prop_assert_eq!(a.clusters.len(), b.clusters.len());
        for (x, y) in a.clusters.iter().zip(&b.clusters) {
            prop_assert_eq!(x.lambda.to_bits(), y.lambda.to_bits());
            prop_assert_eq!(x.multiplicity, y.multiplicity);
        }
        prop_assert_eq!(a.zero_multiplicity, b.zero_multiplicity);
    }

    #[test]
    fn extension_contract_holds(s in skew_strategy(8)) {
        let n = s.order();
        let ind = quasi_orthogonality_index(&s, DEFAULT_GAP_TOL).unwrap();
        let r = extend_to_quasi_orthogonal(&s, DEFAULT_GAP_TOL).unwrap();
        prop_assert_eq!(r.index, ind);
        prop_assert_eq!(r.q_matrix.order(), n + ind);
        prop_assert_eq!(ind % 2, n % 2);
        prop_assert!(s.is_leading_block_of(&r.q_matrix));
        if s.max_abs() == 0.0 {
            prop_assert_eq!(ind, n);
            prop_assert!(r.steps.is_empty());
            prop_assert_eq!(r.q_value, 1.0);
        } else {
            prop_assert!(ind <= n - 2);
            let added: usize = r.steps.iter().map(|st| st.added_cols).sum();
            prop_assert_eq!(added, ind);
            let mut order = n;
            for step in &r.steps {
                prop_assert!(step.added_cols == 1 || step.added_cols == 2);
                order += step.added_cols;
                prop_assert_eq!(step.order_after, order);
            }
        }
        let measured = is_quasi_orthogonal(&r.q_matrix.to_dense(), 1e-7);
        prop_assert!(measured.is_some(), "extension must be quasi-orthogonal");
        let q = measured.unwrap();
        prop_assert!(
            (q - r.q_value).abs() <= 1e-6 * r.q_value,
            "measured q {} vs recorded {}",
            q,
            r.q_value
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gram_is_positive_semidefinite(
        rows in 1usize..7,
        cols in 1usize..7,
        seed_entries in vec(-3.0..3.0f64, 36),
    ) {
        let a = DenseMatrix::from_fn(rows, cols, |i, j| seed_entries[i * 6 + j]);
        let g = gram(&a);
        let eig = symmetric_eigen(&g, 0.0).unwrap();
        let scale = g.frobenius_norm().max(1.0);
        for &w in &eig.values {
            prop_assert!(w >= -1e-10 * scale, "gram eigenvalue {} below zero", w);
        }
    }

    #[test]
    fn jacobi_residuals_stay_small(s in skew_strategy(8)) {
        // -S^2 is exactly symmetric by construction in gram form.
        let a = gram(&s.to_dense());
        let n = a.rows();
        let eig = symmetric_eigen(&a, 0.0).unwrap();
        let scale = a.frobenius_norm().max(1.0);
        for k in 0..n {
            let v = eig.vectors.column(k);
            let mut resid = 0.0;
            for (i, &vi) in v.iter().enumerate() {
                let mut av = 0.0;
                for (j, &vj) in v.iter().enumerate() {
                    av += a.get(i, j) * vj;
                }
                resid += (av - eig.values[k] * vi).powi(2);
            }
            prop_assert!(
                resid.sqrt() <= 1e-10 * scale,
                "eigenpair {} residual {}",
                k,
                resid.sqrt()
            );
        }
    }

    #[test]
    fn matrix_text_round_trips_bitwise(
        rows in 1usize..5,
        cols in 1usize..5,
        entries in vec(any::<f64>().prop_filter("finite", |x| x.is_finite()), 16),
    ) {
        let a = DenseMatrix::from_fn(rows, cols, |i, j| entries[i * 4 + j]);
        let b = parse_matrix_text(&matrix_to_text(&a)).unwrap();
        prop_assert_eq!(a.rows(), b.rows());
        prop_assert_eq!(a.cols(), b.cols());
        for i in 0..rows {
            for j in 0..cols {
                prop_assert_eq!(a.get(i, j).to_bits(), b.get(i, j).to_bits());
            }
        }
    }

    #[test]
    fn polynomial_product_commutes_with_evaluation(
        p in poly_strategy(),
        q in poly_strategy(),
        at in -7i64..=7,
    ) {
        let point = BigInt::from(at);
        let lhs = p.mul(&q).eval_big(&point);
        let rhs = p.eval_big(&point) * q.eval_big(&point);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_free_parts_reconstruct_the_primitive_polynomial(
        a in poly_strategy(),
        b in poly_strategy(),
    ) {
        // a * b^2 has forced multiplicity structure; the parts must multiply
        // back to the primitive polynomial regardless of shared factors.
        let p = a.mul(&b.pow(2));
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let mut product = IntPolynomial::one();
        for (factor, mult) in square_free_decomposition(&p) {
            prop_assert!(factor.degree().unwrap_or(0) >= 1);
            product = product.mul(&factor.pow(mult));
        }
        prop_assert_eq!(product, p.primitive());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tournament_text_round_trips(t in tournament_strategy(10)) {
        let text = tournament_to_text(&t);
        let back = parse_tournament_text(&text).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn tournament_polynomials_satisfy_the_exact_identities(t in tournament_strategy(9)) {
        let p = tournament_char_poly(&t);
        let violations = coefficient_checks(&p, t.order());
        prop_assert!(violations.is_empty(), "violations: {:?}", violations);
        prop_assert_eq!(p.x_multiplicity(), t.order() % 2);
    }

    #[test]
    fn classification_routes_agree(t in tournament_strategy(9)) {
        // classify_index cross-checks the exact polynomial route against the
        // floating index and errors on any disagreement.
        let c = classify_index(&t, DEFAULT_GAP_TOL).unwrap();
        prop_assert_eq!(c.numeric_index % 2, c.n % 2);
        prop_assert!(c.numeric_index >= c.minimal_index_bound);
        prop_assert_eq!(c.achieved, c.numeric_index == c.minimal_index_bound);
    }

    #[test]
    fn skew_adjacency_matches_the_floating_matrix(t in tournament_strategy(9)) {
        use num_traits::ToPrimitive;
        let exact = t.skew_adjacency();
        let float = t.skew_matrix().to_dense();
        for i in 0..t.order() {
            for j in 0..t.order() {
                let entry = exact.get(i, j).to_f64().unwrap();
                prop_assert_eq!(entry, float.get(i, j));
            }
        }
    }
}
