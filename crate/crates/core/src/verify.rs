//! Independent verification oracles.
//!
//! This module deliberately avoids the main spectral pipeline wherever it
//! checks it: eigenvalues here come from characteristic-polynomial root
//! finding (Durand-Kerner on small systems), exact root multiplicities come
//! from Yun's square-free decomposition so multiple roots never degrade
//! floating accuracy, and multisets are compared by optimal assignment.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Error;
use crate::exactpoly::{square_free_decomposition, IntPolynomial};
use crate::extension::{quasi_orthogonality_index, ExtensionResult, ZERO_MATRIX_TOL};
use crate::linalg::{gram, DenseMatrix, SkewMatrix};
use crate::rng::SplitMix64;
use crate::spectral::{skew_spectrum, SkewSpectrum, DEFAULT_GAP_TOL};
use crate::tournament::{tournament_char_poly, Tournament};

/// Eigenpair precondition for the Brauer oracle:
/// `||A x - lambda x|| <= BRAUER_EIGENPAIR_TOL * ||A||_F * ||x||`.
pub const BRAUER_EIGENPAIR_TOL: f64 = 1e-8;
/// Bound on `rho^2 >= n - 1` slack in tournament audits.
pub const RHO_BOUND_TOL: f64 = 1e-9;
/// Agreement bound between exact polynomial roots and floating clusters.
pub const EXACT_FLOAT_TOL: f64 = 1e-6;

pub type ComplexVector = Vec<Complex64>;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zero(n: usize) -> Self {
        ComplexMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend_from_slice(row);
        }
        ComplexMatrix { n, entries }
    }

    pub fn from_real(a: &DenseMatrix) -> Self {
        assert!(a.is_square(), "matrix must be square");
        let n = a.rows();
        let mut m = ComplexMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, Complex64::new(a.get(i, j), 0.0));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn apply(&self, x: &[Complex64]) -> ComplexVector {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = ComplexMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Rank-one update `self + x v^*`.
    pub fn rank_one_update(&self, x: &[Complex64], v: &[Complex64]) -> ComplexMatrix {
        assert_eq!(x.len(), self.n);
        assert_eq!(v.len(), self.n);
        let mut out = self.clone();
        for (i, &xi) in x.iter().enumerate() {
            for (j, &vj) in v.iter().enumerate() {
                let w = out.get(i, j) + xi * vj.conj();
                out.set(i, j, w);
            }
        }
        out
    }
}

fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Monic characteristic polynomial of a complex matrix (ascending
/// coefficients) by the Faddeev-LeVerrier recurrence in floating complex
/// arithmetic. Intended for small systems (the oracle uses n <= 8).
fn complex_char_poly(a: &ComplexMatrix) -> Vec<Complex64> {
    let n = a.order();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    if n == 0 {
        return coeffs;
    }
    let mut m = a.clone();
    for k in 1..=n {
        let c = -m.trace() / k as f64;
        coeffs[n - k] = c;
        if k < n {
            let mut shifted = m.clone();
            for i in 0..n {
                let v = shifted.get(i, i) + c;
                shifted.set(i, i, v);
            }
            m = a.mul(&shifted);
        }
    }
    coeffs
}

fn poly_eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// All roots of a complex polynomial (ascending coefficients) by
/// Durand-Kerner iteration. Deterministic: fixed initial configuration and
/// iteration order. Accuracy degrades to eps^(1/m) near an m-fold root, so
/// exact pipelines must square-free their polynomials first.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    if c.len() <= 1 {
        return vec![];
    }
    let lead = *c.last().unwrap();
    for z in c.iter_mut() {
        *z /= lead;
    }
    let deg = c.len() - 1;
    let radius = 1.0 + c.iter().take(deg).map(|z| z.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = Vec::with_capacity(deg);
    let mut w = Complex64::new(1.0, 0.0);
    for _ in 0..deg {
        w *= seed;
        roots.push(w * radius);
    }
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for k in 0..deg {
            let num = poly_eval(&c, roots[k]);
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != k {
                    den *= roots[k] - roots[j];
                }
            }
            if den.norm() == 0.0 {
                // Collided iterates: nudge deterministically.
                roots[k] += Complex64::new(1e-8 * radius, 1e-8 * radius);
                continue;
            }
            let step = num / den;
            roots[k] -= step;
            max_step = max_step.max(step.norm());
        }
        let scale = 1.0 + roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if max_step <= 1e-14 * scale {
            break;
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
}

/// Eigenvalues of a complex matrix via its characteristic polynomial.
/// This is the oracle eigensolver: independent of the Jacobi pipeline.
pub fn complex_eigenvalues(a: &ComplexMatrix) -> Vec<Complex64> {
    polynomial_roots(&complex_char_poly(a))
}

/// Solve M y = b by LU with partial pivoting. `None` if a pivot is exactly
/// zero.
fn lu_solve(m: &ComplexMatrix, b: &[Complex64]) -> Option<ComplexVector> {
    let n = m.order();
    let mut a = m.clone();
    let mut x = b.to_vec();
    for k in 0..n {
        let mut piv = k;
        for r in (k + 1)..n {
            if a.get(r, k).norm() > a.get(piv, k).norm() {
                piv = r;
            }
        }
        if a.get(piv, k).norm() == 0.0 {
            return None;
        }
        if piv != k {
            for j in 0..n {
                let tmp = a.get(k, j);
                a.set(k, j, a.get(piv, j));
                a.set(piv, j, tmp);
            }
            x.swap(k, piv);
        }
        let pk = a.get(k, k);
        for r in (k + 1)..n {
            let f = a.get(r, k) / pk;
            if f.norm() == 0.0 {
                continue;
            }
            for j in k..n {
                let v = a.get(r, j) - f * a.get(k, j);
                a.set(r, j, v);
            }
            let delta = f * x[k];
            x[r] -= delta;
        }
    }
    for k in (0..n).rev() {
        let mut s = x[k];
        for (j, &xj) in x.iter().enumerate().skip(k + 1) {
            s -= a.get(k, j) * xj;
        }
        x[k] = s / a.get(k, k);
    }
    Some(x)
}

/// A unit eigenvector of `a` for the (simple, reasonably separated)
/// eigenvalue `lambda`, by shifted inverse iteration. Fails with the
/// residual when iteration cannot reach the eigenpair bound.
pub fn eigenvector_for(a: &ComplexMatrix, lambda: Complex64) -> Result<ComplexVector, Error> {
    let n = a.order();
    assert!(n > 0, "empty matrix has no eigenvectors");
    let scale = a.frobenius_norm().max(1.0);
    // Tiny shift keeps the factorization nonsingular at the exact eigenvalue.
    let shift = lambda + Complex64::new(1e-12 * scale, 1e-12 * scale);
    let mut m = a.clone();
    for i in 0..n {
        let v = m.get(i, i) - shift;
        m.set(i, i, v);
    }
    let mut g = SplitMix64::new(0xE16E7EC70A);
    let mut x: ComplexVector = (0..n)
        .map(|_| Complex64::new(g.next_signed_unit(), g.next_signed_unit()))
        .collect();
    let norm = vec_norm(&x);
    for z in x.iter_mut() {
        *z /= norm;
    }
    let mut best = x.clone();
    let mut best_resid = f64::INFINITY;
    for _ in 0..8 {
        let Some(y) = lu_solve(&m, &x) else { break };
        let ny = vec_norm(&y);
        if !ny.is_finite() || ny == 0.0 {
            break;
        }
        x = y.into_iter().map(|z| z / ny).collect();
        let ax = a.apply(&x);
        let resid = (0..n)
            .map(|i| (ax[i] - lambda * x[i]).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if resid < best_resid {
            best_resid = resid;
            best = x.clone();
        }
        if resid <= 0.5 * BRAUER_EIGENPAIR_TOL * a.frobenius_norm() {
            break;
        }
    }
    if best_resid > BRAUER_EIGENPAIR_TOL * a.frobenius_norm() {
        return Err(Error::EigenpairResidual {
            residual: best_resid,
            allowed: BRAUER_EIGENPAIR_TOL * a.frobenius_norm(),
        });
    }
    Ok(best)
}

/// Minimum-total-cost assignment on a square cost matrix (Kuhn-Munkres with
/// potentials); returns the column assigned to each row.
fn hungarian(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; n];
    for j in 1..=n {
        if p[j] > 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    assign
}

/// Largest pairwise distance under the minimum-total-distance matching of
/// two equal-size multisets; infinity when sizes differ.
pub fn multiset_match_error(expected: &[Complex64], actual: &[Complex64]) -> f64 {
    if expected.len() != actual.len() {
        return f64::INFINITY;
    }
    if expected.is_empty() {
        return 0.0;
    }
    let cost: Vec<Vec<f64>> = expected
        .iter()
        .map(|e| actual.iter().map(|a| (e - a).norm()).collect())
        .collect();
    let assign = hungarian(&cost);
    assign
        .iter()
        .enumerate()
        .map(|(i, &j)| cost[i][j])
        .fold(0.0, f64::max)
}

/// Outcome of the eigenvalue-shift oracle.
#[derive(Debug, Clone)]
pub struct BrauerShift {
    /// `{lambda + v^* x}` together with the remaining eigenvalues of `a`.
    pub expected: Vec<Complex64>,
    /// Eigenvalues of `a + x v^*`.
    pub actual: Vec<Complex64>,
    /// Optimal-assignment matching distance between the two multisets.
    pub max_match_error: f64,
}

/// Eigenvalue-shift oracle: if `a x = lambda x`, then `a + x v^*` has
/// eigenvalues `lambda + v^* x` and the remaining eigenvalues of `a`,
/// for any `v`. Both sides are computed with the characteristic-polynomial
/// eigensolver and matched by optimal assignment.
pub fn brauer_eigen_shift(
    a: &ComplexMatrix,
    x: &[Complex64],
    lambda: Complex64,
    v: &[Complex64],
) -> Result<BrauerShift, Error> {
    let n = a.order();
    if x.len() != n || v.len() != n {
        return Err(Error::DimensionMismatch {
            left: (n, n),
            right: (x.len(), v.len()),
        });
    }
    let nx = vec_norm(x);
    if nx == 0.0 {
        return Err(Error::ZeroVector);
    }
    let ax = a.apply(x);
    let residual = (0..n)
        .map(|i| (ax[i] - lambda * x[i]).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let allowed = BRAUER_EIGENPAIR_TOL * a.frobenius_norm() * nx;
    if residual > allowed {
        return Err(Error::EigenpairResidual { residual, allowed });
    }

    let vsx: Complex64 = v.iter().zip(x).map(|(vi, xi)| vi.conj() * xi).sum();
    let mut expected = complex_eigenvalues(a);
    // Drop the copy of lambda that the shift replaces.
    let closest = expected
        .iter()
        .enumerate()
        .min_by(|(_, p), (_, q)| (*p - lambda).norm().total_cmp(&(*q - lambda).norm()))
        .map(|(i, _)| i)
        .expect("n >= 1 because x is nonzero");
    expected.remove(closest);
    expected.push(lambda + vsx);
    expected.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let actual = complex_eigenvalues(&a.rank_one_update(x, v));
    let max_match_error = multiset_match_error(&expected, &actual);
    Ok(BrauerShift {
        expected,
        actual,
        max_match_error,
    })
}

/// One named check in an audit.
#[derive(Debug, Clone, Serialize)]
pub struct AuditCheck {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
    pub tolerance: f64,
}

/// A list of named pass/fail checks with measured residuals.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Certify a claimed quasi-orthogonal extension of `s`:
///
/// (a) the leading block of the extension equals `s` bit for bit;
/// (b) `||Q^T Q - q I||_F <= tol * q * sqrt(order)`;
/// (c) the order is `n + ind(s)` and the recorded index agrees;
/// (d) the spectral radius is preserved within relative `tol` (for the zero
///     input, `rho(Q)` is compared against `sqrt(q)`);
/// (e) the index has the parity of `n`.
///
/// Spectra involved in (c) and (d) are computed at the default gap
/// tolerance.
pub fn certify_extension(s: &SkewMatrix, r: &ExtensionResult, tol: f64) -> AuditReport {
    let n = s.order();
    let order = r.q_matrix.order();
    let mut checks = Vec::with_capacity(5);

    let mut max_diff = 0.0f64;
    let mut bit_identical = order >= n;
    if order >= n {
        for i in 0..n {
            for j in (i + 1)..n {
                let a = s.get(i, j);
                let b = r.q_matrix.get(i, j);
                max_diff = max_diff.max((a - b).abs());
                if a.to_bits() != b.to_bits() {
                    bit_identical = false;
                }
            }
        }
    }
    checks.push(AuditCheck {
        name: "leading_block_identical".into(),
        pass: bit_identical,
        residual: max_diff,
        tolerance: 0.0,
    });

    let g = gram(&r.q_matrix.to_dense());
    let mut resid = 0.0;
    for i in 0..order {
        for j in 0..order {
            let want = if i == j { r.q_value } else { 0.0 };
            let d = g.get(i, j) - want;
            resid += d * d;
        }
    }
    let gram_resid = resid.sqrt();
    let gram_tol = tol * r.q_value * (order as f64).sqrt();
    checks.push(AuditCheck {
        name: "gram_residual".into(),
        pass: r.q_value > 0.0 && gram_resid <= gram_tol,
        residual: gram_resid,
        tolerance: gram_tol,
    });

    match quasi_orthogonality_index(s, DEFAULT_GAP_TOL) {
        Ok(ind) => {
            let order_ok = order == n + ind && r.index == ind;
            checks.push(AuditCheck {
                name: "order_and_index".into(),
                pass: order_ok,
                residual: (order as f64 - (n + ind) as f64).abs()
                    + (r.index as f64 - ind as f64).abs(),
                tolerance: 0.0,
            });
        }
        Err(_) => checks.push(AuditCheck {
            name: "order_and_index".into(),
            pass: false,
            residual: f64::INFINITY,
            tolerance: 0.0,
        }),
    }

    let rho_q = skew_spectrum(&r.q_matrix, DEFAULT_GAP_TOL)
        .ok()
        .and_then(|sp| sp.rho());
    let rho_ref = if s.max_abs() <= ZERO_MATRIX_TOL {
        Some(r.q_value.max(0.0).sqrt())
    } else {
        skew_spectrum(s, DEFAULT_GAP_TOL).ok().and_then(|sp| sp.rho())
    };
    match (rho_q, rho_ref) {
        (Some(rq), Some(rs)) if rs > 0.0 => {
            let diff = (rq - rs).abs();
            checks.push(AuditCheck {
                name: "spectral_radius_preserved".into(),
                pass: diff <= tol * rs,
                residual: diff,
                tolerance: tol * rs,
            });
        }
        _ => checks.push(AuditCheck {
            name: "spectral_radius_preserved".into(),
            pass: false,
            residual: f64::INFINITY,
            tolerance: tol,
        }),
    }

    checks.push(AuditCheck {
        name: "index_parity".into(),
        pass: r.index % 2 == n % 2,
        residual: (r.index % 2).abs_diff(n % 2) as f64,
        tolerance: 0.0,
    });

    AuditReport { checks }
}

/// Root multiset of an exact integer polynomial, with multiplicities
/// recovered exactly by square-free decomposition so that the floating root
/// finder only ever sees simple roots.
pub fn exact_root_multiset(p: &IntPolynomial) -> Vec<Complex64> {
    let mut roots = Vec::new();
    for (factor, mult) in square_free_decomposition(p) {
        let coeffs: Vec<Complex64> = factor
            .to_f64_coeffs()
            .into_iter()
            .map(|c| Complex64::new(c, 0.0))
            .collect();
        for root in polynomial_roots(&coeffs) {
            for _ in 0..mult {
                roots.push(root);
            }
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
}

/// The eigenvalue multiset `{+-i lambda_j (m_j times), 0 (z times)}` a
/// floating spectrum claims.
pub fn spectrum_multiset(spec: &SkewSpectrum) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(spec.order);
    for c in &spec.clusters {
        for _ in 0..c.multiplicity {
            out.push(Complex64::new(0.0, c.lambda));
            out.push(Complex64::new(0.0, -c.lambda));
        }
    }
    for _ in 0..spec.zero_multiplicity {
        out.push(Complex64::new(0.0, 0.0));
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    out
}

/// Optimal-assignment distance between the exact characteristic-polynomial
/// roots and the floating spectrum of the same matrix.
pub fn exact_float_agreement(p: &IntPolynomial, spec: &SkewSpectrum) -> f64 {
    multiset_match_error(&exact_root_multiset(p), &spectrum_multiset(spec))
}

/// Audit one tournament: exact coefficient identities, the zero-root
/// multiplicity rule, the spectral radius lower bound, and agreement of the
/// exact and floating spectra.
pub fn audit_tournament(t: &Tournament, gap_tol: f64) -> AuditReport {
    let n = t.order();
    let p = tournament_char_poly(t);
    let mut checks = Vec::with_capacity(4);

    let violations = crate::exactpoly::coefficient_checks(&p, n);
    checks.push(AuditCheck {
        name: "coefficient_identities".into(),
        pass: violations.is_empty(),
        residual: violations.len() as f64,
        tolerance: 0.0,
    });

    let x_mult = p.x_multiplicity();
    checks.push(AuditCheck {
        name: "zero_root_multiplicity".into(),
        pass: x_mult == n % 2,
        residual: x_mult.abs_diff(n % 2) as f64,
        tolerance: 0.0,
    });

    match skew_spectrum(&t.skew_matrix(), gap_tol) {
        Ok(spec) => {
            let rho2 = spec.rho().map_or(0.0, |r| r * r);
            let bound = (n as f64) - 1.0;
            let slack = (bound - rho2).max(0.0);
            let tol = RHO_BOUND_TOL * bound.max(1.0);
            checks.push(AuditCheck {
                name: "spectral_radius_bound".into(),
                pass: slack <= tol,
                residual: slack,
                tolerance: tol,
            });

            let agreement = exact_float_agreement(&p, &spec);
            checks.push(AuditCheck {
                name: "exact_float_spectrum_agreement".into(),
                pass: agreement <= EXACT_FLOAT_TOL,
                residual: agreement,
                tolerance: EXACT_FLOAT_TOL,
            });
        }
        Err(_) => {
            for name in ["spectral_radius_bound", "exact_float_spectrum_agreement"] {
                checks.push(AuditCheck {
                    name: name.into(),
                    pass: false,
                    residual: f64::INFINITY,
                    tolerance: 0.0,
                });
            }
        }
    }

    AuditReport { checks }
}
