//! Quasi-orthogonal extension of skew-symmetric matrices by bordering.
//!
//! A matrix `Q` is quasi-orthogonal when `Q^T Q = q*I` for some `q > 0`. A
//! skew-symmetric `S` of order `n` is quasi-orthogonal exactly when every
//! eigenvalue has modulus `rho` (the spectral radius), i.e. when the defect
//! `m = n - 2*mu` is zero. The bordering construction drives `m` to zero:
//!
//! * `m = 1`: append one column `u` from the null space with `||u|| = rho`.
//! * `m >= 2`, second magnitude `alpha = 0`: append two orthogonal null-space
//!   columns of norm `rho` (corner 2x2 block zero).
//! * `m >= 2`, `alpha > 0`: take `x` in the eigenspace of `-S^2` for
//!   `alpha^2` with `||x||^2 = rho^2 - alpha^2`, append columns `x` and
//!   `(1/alpha)*S*x` with corner entry `alpha`.
//!
//! A two-column step raises `mu` by 2 and lowers `m` by 2; the one-column
//! step finishes `m = 1`. The final order is exactly `2n - 2*mu(S)` and the
//! result satisfies `Q^T Q = rho^2 * I`. The zero matrix is the one special
//! case: its minimal extension is the order-`2n` block matrix
//! `[[O, I], [-I, O]]` with `q = 1`.

use serde::Serialize;

use crate::error::Error;
use crate::linalg::{gram, DenseMatrix, SkewMatrix};
use crate::spectral::{eigenspace_for, null_space_basis, skew_spectrum, SkewSpectrum};

/// A matrix whose largest entry magnitude is at most this is treated as the
/// zero matrix.
pub const ZERO_MATRIX_TOL: f64 = 1e-12;

/// Which case of the bordering construction a step used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BorderCase {
    /// Defect 1: single null-space column.
    #[serde(rename = "M1")]
    M1,
    /// Defect >= 2 with no second nonzero magnitude: two null-space columns.
    #[serde(rename = "CASE1_ALPHA_ZERO")]
    Case1AlphaZero,
    /// Defect >= 2 with second magnitude alpha > 0: columns x and S*x/alpha.
    #[serde(rename = "CASE2_ALPHA_POS")]
    Case2AlphaPos,
}

/// One border step of the extension loop.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BorderStep {
    pub case: BorderCase,
    /// Columns (and rows) added: 1 for `M1`, 2 otherwise.
    pub added_cols: usize,
    /// The second magnitude used by `CASE2_ALPHA_POS`; 0 for the other cases.
    pub alpha: f64,
    /// Matrix order after the step.
    pub order_after: usize,
}

/// Result of a completed extension.
#[derive(Debug, Clone)]
pub struct ExtensionResult {
    /// The quasi-orthogonal skew-symmetric extension; its leading principal
    /// block is the input, copied entry for entry.
    pub q_matrix: SkewMatrix,
    /// The value `q` with `Q^T Q = q*I`; equals `rho(S)^2` for nonzero `S`
    /// and 1 for the zero matrix.
    pub q_value: f64,
    /// Number of added rows/columns (the quasi-orthogonality index of `S`).
    pub index: usize,
    /// Log of border steps taken (empty for the zero construction and for
    /// inputs that are already quasi-orthogonal).
    pub steps: Vec<BorderStep>,
}

/// Quasi-orthogonality index: the least `d` such that `S` has a
/// quasi-orthogonal skew-symmetric extension of order `n + d`. This is
/// `n - 2*mu` for nonzero `S` and `n` for the zero matrix; it is always
/// congruent to `n` mod 2, and at most `n - 2` for nonzero `S`.
pub fn quasi_orthogonality_index(s: &SkewMatrix, gap_tol: f64) -> Result<usize, Error> {
    if s.max_abs() <= ZERO_MATRIX_TOL {
        return Ok(s.order());
    }
    Ok(skew_spectrum(s, gap_tol)?.defect())
}

/// Minimal quasi-orthogonal extension of the zero matrix of order `n`: the
/// block matrix `[[O, I], [-I, O]]` of order `2n`, which satisfies
/// `Q^T Q = I` exactly.
pub fn extend_zero(n: usize) -> ExtensionResult {
    assert!(n >= 1, "order must be at least 1");
    let q_matrix = SkewMatrix::from_fn(2 * n, |i, j| if j == i + n { 1.0 } else { 0.0 });
    ExtensionResult {
        q_matrix,
        q_value: 1.0,
        index: n,
        steps: vec![],
    }
}

/// Border `s` once with an already-computed spectrum, returning the larger
/// matrix and the step record. The leading block of the result is `s`
/// bit for bit.
pub fn border_once(
    s: &SkewMatrix,
    spectrum: &SkewSpectrum,
    gap_tol: f64,
) -> Result<(SkewMatrix, BorderStep), Error> {
    let n = s.order();
    assert_eq!(spectrum.order, n, "spectrum belongs to a different order");
    let rho = match spectrum.rho() {
        Some(r) => r,
        None => return Err(Error::NothingToExtend),
    };
    let m = spectrum.defect();
    if m == 0 {
        return Err(Error::NothingToExtend);
    }

    if m == 1 {
        let basis = null_space_basis(s, gap_tol)?;
        let u: Vec<f64> = basis.vectors.column(0).iter().map(|v| v * rho).collect();
        let bordered = SkewMatrix::from_fn(n + 1, |i, j| {
            if j < n {
                s.get(i, j)
            } else {
                u[i]
            }
        });
        let step = BorderStep {
            case: BorderCase::M1,
            added_cols: 1,
            alpha: 0.0,
            order_after: n + 1,
        };
        return Ok((bordered, step));
    }

    match spectrum.alpha() {
        None => {
            // All non-peak eigenvalues are zero, so the null space has
            // dimension m >= 2; border with two of its orthonormal vectors
            // scaled to norm rho.
            let basis = null_space_basis(s, gap_tol)?;
            debug_assert!(basis.vectors.cols() >= 2);
            let x: Vec<f64> = basis.vectors.column(0).iter().map(|v| v * rho).collect();
            let y: Vec<f64> = basis.vectors.column(1).iter().map(|v| v * rho).collect();
            let bordered = SkewMatrix::from_fn(n + 2, |i, j| {
                if j < n {
                    s.get(i, j)
                } else if j == n {
                    x[i]
                } else if i < n {
                    y[i]
                } else {
                    0.0
                }
            });
            let step = BorderStep {
                case: BorderCase::Case1AlphaZero,
                added_cols: 2,
                alpha: 0.0,
                order_after: n + 2,
            };
            Ok((bordered, step))
        }
        Some(alpha) => {
            // x in the eigenspace of -S^2 for alpha^2, scaled so that
            // ||x||^2 = rho^2 - alpha^2; partner column is S*x/alpha and the
            // corner entry is alpha.
            let basis = eigenspace_for(s, alpha, gap_tol)?;
            let scale = (rho * rho - alpha * alpha).sqrt();
            let x: Vec<f64> = basis.vectors.column(0).iter().map(|v| v * scale).collect();
            let sx = s.apply(&x);
            let z: Vec<f64> = sx.iter().map(|v| v / alpha).collect();
            let bordered = SkewMatrix::from_fn(n + 2, |i, j| {
                if j < n {
                    s.get(i, j)
                } else if j == n {
                    x[i]
                } else if i < n {
                    z[i]
                } else {
                    alpha
                }
            });
            let step = BorderStep {
                case: BorderCase::Case2AlphaPos,
                added_cols: 2,
                alpha,
                order_after: n + 2,
            };
            Ok((bordered, step))
        }
    }
}

/// Extend `s` to a quasi-orthogonal skew-symmetric matrix of minimal order.
///
/// Runs two-column border steps while the defect is at least 2, then a
/// single-column step if a defect of 1 remains. After every step the
/// spectrum is recomputed and checked against the construction's guarantee
/// (`mu` up by `added_cols`, defect down by `added_cols`); a step that fails
/// the check aborts with the step log. Inputs that are already
/// quasi-orthogonal come back unchanged with index 0.
pub fn extend_to_quasi_orthogonal(s: &SkewMatrix, gap_tol: f64) -> Result<ExtensionResult, Error> {
    let n = s.order();
    if s.max_abs() <= ZERO_MATRIX_TOL {
        // Zero route: [[S, I], [-I, O]] keeps the input block bit-identical
        // while realizing the [[O, I], [-I, O]] construction.
        let q_matrix = SkewMatrix::from_fn(2 * n, |i, j| {
            if j < n {
                s.get(i, j)
            } else if j == i + n {
                1.0
            } else {
                0.0
            }
        });
        return Ok(ExtensionResult {
            q_matrix,
            q_value: 1.0,
            index: n,
            steps: vec![],
        });
    }

    let first = skew_spectrum(s, gap_tol)?;
    let rho0 = first.rho().expect("nonzero matrix has a spectral radius");
    let target_order = 2 * n - 2 * first.mu();

    let mut current = s.clone();
    let mut spectrum = first;
    let mut steps: Vec<BorderStep> = Vec::new();
    loop {
        let m = spectrum.defect();
        if m == 0 {
            break;
        }
        let (next, step) = border_once(&current, &spectrum, gap_tol)?;
        let next_spectrum = skew_spectrum(&next, gap_tol)?;
        let mu_ok = next_spectrum.mu() == spectrum.mu() + step.added_cols;
        let defect_ok = next_spectrum.defect() == m - step.added_cols;
        if !mu_ok || !defect_ok {
            steps.push(step);
            return Err(Error::ExtensionStalled {
                detail: format!(
                    "order {}: mu {} -> {}, defect {} -> {}; steps: {:?}",
                    next.order(),
                    spectrum.mu(),
                    next_spectrum.mu(),
                    m,
                    next_spectrum.defect(),
                    steps
                ),
            });
        }
        steps.push(step);
        current = next;
        spectrum = next_spectrum;
    }

    debug_assert_eq!(current.order(), target_order);
    Ok(ExtensionResult {
        q_matrix: current,
        q_value: rho0 * rho0,
        index: target_order - n,
        steps,
    })
}

/// If `Q^T Q = q*I` within `tol` for some `q > 0`, return `q` (the mean of
/// the Gram diagonal); otherwise `None`. The residual test is
/// `||Q^T Q - q*I||_F <= tol * q * sqrt(n)`.
pub fn is_quasi_orthogonal(a: &DenseMatrix, tol: f64) -> Option<f64> {
    if !a.is_square() || a.rows() == 0 {
        return None;
    }
    let n = a.rows();
    let g = gram(a);
    let q = (0..n).map(|i| g.get(i, i)).sum::<f64>() / n as f64;
    if q.is_nan() || q <= 0.0 {
        return None;
    }
    let mut resid = 0.0;
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { q } else { 0.0 };
            let d = g.get(i, j) - want;
            resid += d * d;
        }
    }
    if resid.sqrt() <= tol * q * (n as f64).sqrt() {
        Some(q)
    } else {
        None
    }
}
