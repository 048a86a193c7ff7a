//! Spectrum of a real skew-symmetric matrix.
//!
//! The nonzero eigenvalues of skew-symmetric `S` are conjugate-pure-imaginary
//! pairs `+-i*lambda_j` with `lambda_j > 0`. Everything here is computed from
//! the symmetric positive semidefinite matrix `-S^2 = S^T S`, whose
//! eigenvalues are the `lambda_j^2` (each twice) plus a zero per zero
//! eigenvalue of `S`. No complex arithmetic is involved.

use serde::Serialize;

use crate::error::Error;
use crate::linalg::{gram, symmetric_eigen, DenseMatrix, SkewMatrix, SymEigen};

/// Default relative gap used to split eigenvalue clusters of `-S^2`.
pub const DEFAULT_GAP_TOL: f64 = 1e-7;

/// One distinct eigenvalue magnitude: `S` has eigenvalues `+-i*lambda`, each
/// with this multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralCluster {
    pub lambda: f64,
    pub multiplicity: usize,
}

/// Spectrum `{[+-i*lambda_1]^(m_1), ..., [+-i*lambda_r]^(m_r), [0]^z}` of a
/// skew-symmetric matrix of order `n`, with `lambda_1 > ... > lambda_r > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkewSpectrum {
    /// Distinct magnitudes in strictly decreasing order.
    pub clusters: Vec<SpectralCluster>,
    /// Multiplicity of the eigenvalue 0.
    pub zero_multiplicity: usize,
    /// Order of the matrix.
    pub order: usize,
}

impl SkewSpectrum {
    /// Spectral radius; `None` for the zero matrix.
    pub fn rho(&self) -> Option<f64> {
        self.clusters.first().map(|c| c.lambda)
    }

    /// Multiplicity of `+-i*rho` (0 for the zero matrix).
    pub fn mu(&self) -> usize {
        self.clusters.first().map_or(0, |c| c.multiplicity)
    }

    /// Second-largest magnitude, if any.
    pub fn alpha(&self) -> Option<f64> {
        self.clusters.get(1).map(|c| c.lambda)
    }

    /// Quasi-orthogonality defect `n - 2*mu`: the number of eigenvalues
    /// (counted with multiplicity) of modulus below the spectral radius.
    /// Zero exactly when the matrix is quasi-orthogonal.
    pub fn defect(&self) -> usize {
        self.order - 2 * self.mu()
    }
}

/// Orthonormal basis of the invariant subspace of `-S^2` for one eigenvalue
/// `lambda^2` (`0` for the null space). Columns are the basis vectors.
#[derive(Debug, Clone)]
pub struct EigenspaceBasis {
    pub lambda_squared: f64,
    pub vectors: DenseMatrix,
}

/// Shared decomposition behind the public spectrum operations: the full
/// eigensystem of `-S^2` plus the cluster partition of its eigenvalues.
pub(crate) struct SpectralDecomposition {
    pub eig: SymEigen,
    pub spectrum: SkewSpectrum,
    /// Column ranges into `eig` for each cluster, parallel to
    /// `spectrum.clusters` (decreasing lambda).
    pub cluster_ranges: Vec<std::ops::Range<usize>>,
    /// Column range of the zero cluster (always starts at 0).
    pub zero_range: std::ops::Range<usize>,
    /// Absolute threshold on the `lambda^2` scale used for both the zero
    /// cut-off and the gap splitting.
    pub threshold: f64,
}

pub(crate) fn decompose(s: &SkewMatrix, gap_tol: f64) -> Result<SpectralDecomposition, Error> {
    if !gap_tol.is_finite() || gap_tol <= 0.0 {
        return Err(Error::InvalidTolerance { value: gap_tol });
    }
    if !s.is_finite() {
        return Err(Error::Parse {
            line: 0,
            detail: "matrix has non-finite entries".into(),
        });
    }
    let n = s.order();
    // gram(S) = S^T S = -S^2, exactly symmetric by construction.
    let b = gram(&s.to_dense());
    let eig = symmetric_eigen(&b, 1e-12)?;
    let lam_max = eig.values.last().copied().unwrap_or(0.0);
    let threshold = gap_tol * lam_max.max(1.0);

    let mut values = eig.values.clone();
    for v in values.iter_mut() {
        if *v < -threshold {
            return Err(Error::NegativeSquareSpectrum {
                value: *v,
                threshold,
            });
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }

    let zero_multiplicity = values.iter().take_while(|&&v| v <= threshold).count();
    let zero_range = 0..zero_multiplicity;

    // Ascending nonzero values, split where a consecutive gap exceeds the
    // threshold.
    let mut ascending: Vec<(std::ops::Range<usize>, f64)> = Vec::new();
    let mut start = zero_multiplicity;
    for k in (zero_multiplicity + 1)..=n {
        let split = k == n || values[k] - values[k - 1] > threshold;
        if split {
            let range = start..k;
            let mean = values[range.clone()].iter().sum::<f64>() / range.len() as f64;
            ascending.push((range, mean));
            start = k;
        }
    }

    if ascending.iter().any(|(r, _)| r.len() % 2 != 0) {
        return Err(Error::OddCluster {
            sizes: ascending.iter().map(|(r, _)| r.len()).collect(),
            lambdas: ascending.iter().map(|(_, m)| m.sqrt()).collect(),
        });
    }

    let mut clusters = Vec::with_capacity(ascending.len());
    let mut cluster_ranges = Vec::with_capacity(ascending.len());
    for (range, mean) in ascending.into_iter().rev() {
        clusters.push(SpectralCluster {
            lambda: mean.sqrt(),
            multiplicity: range.len() / 2,
        });
        cluster_ranges.push(range);
    }

    debug_assert!(clusters.windows(2).all(|w| w[0].lambda > w[1].lambda));
    debug_assert_eq!(
        2 * clusters.iter().map(|c| c.multiplicity).sum::<usize>() + zero_multiplicity,
        n
    );

    Ok(SpectralDecomposition {
        eig,
        spectrum: SkewSpectrum {
            clusters,
            zero_multiplicity,
            order: n,
        },
        cluster_ranges,
        zero_range,
        threshold,
    })
}

/// Compute the spectrum of a skew-symmetric matrix.
///
/// `gap_tol` controls cluster resolution: eigenvalues of `-S^2` are split
/// into clusters wherever a consecutive (ascending) gap exceeds
/// `gap_tol * max(1, lambda_max^2)`, and values at most that threshold form
/// the zero cluster. Each nonzero cluster must have even size (the pairing
/// `+-i*lambda` forces it); an odd cluster is reported as an error rather
/// than silently re-split.
pub fn skew_spectrum(s: &SkewMatrix, gap_tol: f64) -> Result<SkewSpectrum, Error> {
    Ok(decompose(s, gap_tol)?.spectrum)
}

/// Orthonormal basis of the null space of `S` (equivalently of `-S^2`),
/// in the eigensolver's deterministic column order.
pub fn null_space_basis(s: &SkewMatrix, gap_tol: f64) -> Result<EigenspaceBasis, Error> {
    let d = decompose(s, gap_tol)?;
    if d.zero_range.is_empty() {
        return Err(Error::EmptyNullspace);
    }
    let cols = d.zero_range.clone();
    let n = s.order();
    let vectors = DenseMatrix::from_fn(n, cols.len(), |i, j| d.eig.vectors.get(i, cols.start + j));
    Ok(EigenspaceBasis {
        lambda_squared: 0.0,
        vectors,
    })
}

/// Orthonormal basis of the eigenspace of `-S^2` for the cluster whose
/// magnitude matches `lambda` (nonzero clusters only; use
/// [`null_space_basis`] for 0). The match is on the `lambda^2` scale with the
/// same threshold the clustering used.
pub fn eigenspace_for(s: &SkewMatrix, lambda: f64, gap_tol: f64) -> Result<EigenspaceBasis, Error> {
    let d = decompose(s, gap_tol)?;
    let target = lambda * lambda;
    let best = d
        .spectrum
        .clusters
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            let da = (a.lambda * a.lambda - target).abs();
            let db = (b.lambda * b.lambda - target).abs();
            da.partial_cmp(&db).expect("finite lambda")
        });
    let (idx, cluster) = match best {
        Some((idx, c)) if (c.lambda * c.lambda - target).abs() <= d.threshold => (idx, c),
        _ => return Err(Error::NoMatchingCluster { lambda }),
    };
    let cols = d.cluster_ranges[idx].clone();
    let n = s.order();
    let vectors = DenseMatrix::from_fn(n, cols.len(), |i, j| d.eig.vectors.get(i, cols.start + j));
    Ok(EigenspaceBasis {
        lambda_squared: cluster.lambda * cluster.lambda,
        vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matmul;

    fn three_cycle() -> SkewMatrix {
        // Cyclic orientation 0 -> 1 -> 2 -> 0.
        SkewMatrix::from_fn(3, |i, j| match (i, j) {
            (0, 1) => 1.0,
            (1, 2) => 1.0,
            (0, 2) => -1.0,
            _ => unreachable!(),
        })
    }

    fn golden_four() -> SkewMatrix {
        SkewMatrix::try_from_dense(&DenseMatrix::from_rows(&[
            vec![0.0, 1.0, 1.0, 1.0],
            vec![-1.0, 0.0, 1.0, 1.0],
            vec![-1.0, -1.0, 0.0, -1.0],
            vec![-1.0, -1.0, 1.0, 0.0],
        ]))
        .unwrap()
    }

    #[test]
    fn three_cycle_spectrum() {
        // Characteristic polynomial x^3 + 3x = x(x^2 + 3), so the spectrum is
        // {+-i*sqrt3, 0}.
        let spec = skew_spectrum(&three_cycle(), DEFAULT_GAP_TOL).unwrap();
        assert_eq!(spec.order, 3);
        assert_eq!(spec.zero_multiplicity, 1);
        assert_eq!(spec.clusters.len(), 1);
        assert_eq!(spec.clusters[0].multiplicity, 1);
        assert!((spec.clusters[0].lambda - 3f64.sqrt()).abs() <= 1e-9);
        assert_eq!(spec.mu(), 1);
        assert_eq!(spec.defect(), 1);
        assert!(spec.alpha().is_none());
    }

    #[test]
    fn golden_four_spectrum() {
        // Spectrum {+-i(sqrt2+1), +-i(sqrt2-1)}, simple magnitudes.
        let spec = skew_spectrum(&golden_four(), DEFAULT_GAP_TOL).unwrap();
        assert_eq!(spec.zero_multiplicity, 0);
        let lambdas: Vec<f64> = spec.clusters.iter().map(|c| c.lambda).collect();
        assert_eq!(spec.clusters.len(), 2);
        assert!((lambdas[0] - (2f64.sqrt() + 1.0)).abs() <= 1e-9);
        assert!((lambdas[1] - (2f64.sqrt() - 1.0)).abs() <= 1e-9);
        assert_eq!(spec.mu(), 1);
        assert_eq!(spec.defect(), 2);
    }

    #[test]
    fn zero_matrix_spectrum() {
        let spec = skew_spectrum(&SkewMatrix::zero(4), DEFAULT_GAP_TOL).unwrap();
        assert!(spec.clusters.is_empty());
        assert_eq!(spec.zero_multiplicity, 4);
        assert!(spec.rho().is_none());
        assert_eq!(spec.defect(), 4);
    }

    #[test]
    fn trace_identity() {
        // sum of 2*mult*lambda^2 over clusters equals ||S||_F^2.
        let mut g = crate::rng::SplitMix64::new(0xABCD);
        for _ in 0..10 {
            let n = 2 + g.next_below(15) as usize;
            let s = SkewMatrix::from_fn(n, |_, _| g.next_signed_unit());
            let spec = skew_spectrum(&s, DEFAULT_GAP_TOL).unwrap();
            let total: f64 = spec
                .clusters
                .iter()
                .map(|c| 2.0 * c.multiplicity as f64 * c.lambda * c.lambda)
                .sum();
            let norm2 = s.frobenius_norm().powi(2);
            assert!((total - norm2).abs() <= 1e-8 * norm2.max(1.0));
        }
    }

    #[test]
    fn block_diagonal_repeated_magnitude() {
        // Two copies of the same 2x2 block give one cluster of multiplicity 2.
        let s = SkewMatrix::from_fn(4, |i, j| match (i, j) {
            (0, 1) | (2, 3) => 2.5,
            _ => 0.0,
        });
        let spec = skew_spectrum(&s, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(spec.clusters.len(), 1);
        assert_eq!(spec.clusters[0].multiplicity, 2);
        assert!((spec.clusters[0].lambda - 2.5).abs() <= 1e-12);
        assert_eq!(spec.zero_multiplicity, 0);
    }

    #[test]
    fn null_space_of_three_cycle() {
        // S has null vector (1,1,1)/sqrt3; the sign convention fixes it
        // componentwise positive.
        let basis = null_space_basis(&three_cycle(), DEFAULT_GAP_TOL).unwrap();
        assert_eq!(basis.vectors.cols(), 1);
        let v = basis.vectors.column(0);
        let inv = 1.0 / 3f64.sqrt();
        for x in v {
            assert!((x - inv).abs() <= 1e-10);
        }
    }

    #[test]
    fn null_space_empty_for_invertible() {
        assert!(matches!(
            null_space_basis(&golden_four(), DEFAULT_GAP_TOL),
            Err(Error::EmptyNullspace)
        ));
    }

    #[test]
    fn eigenspace_for_second_cluster() {
        // Basis for lambda = sqrt2 - 1 of the order-4 example; check the
        // invariant-subspace residual ||(-S^2)V - lambda^2 V||.
        let s = golden_four();
        let lambda = 2f64.sqrt() - 1.0;
        let basis = eigenspace_for(&s, lambda, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(basis.vectors.cols(), 2);
        let b = gram(&s.to_dense());
        let bv = matmul(&b, &basis.vectors).unwrap();
        let mut resid: f64 = 0.0;
        for i in 0..4 {
            for k in 0..2 {
                resid = resid.max((bv.get(i, k) - basis.lambda_squared * basis.vectors.get(i, k)).abs());
            }
        }
        let scale = s.frobenius_norm().powi(2);
        assert!(resid <= 1e-8 * scale, "residual {resid}");
        // Columns orthonormal.
        let vtv = gram(&basis.vectors);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((vtv.get(i, j) - want).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn eigenspace_for_unmatched_lambda() {
        assert!(matches!(
            eigenspace_for(&SkewMatrix::zero(3), 1.0, DEFAULT_GAP_TOL),
            Err(Error::NoMatchingCluster { .. })
        ));
        assert!(matches!(
            eigenspace_for(&golden_four(), 10.0, DEFAULT_GAP_TOL),
            Err(Error::NoMatchingCluster { .. })
        ));
    }

    #[test]
    fn rejects_nonpositive_gap_tol() {
        assert!(matches!(
            skew_spectrum(&three_cycle(), 0.0),
            Err(Error::InvalidTolerance { .. })
        ));
        assert!(matches!(
            skew_spectrum(&three_cycle(), -1e-9),
            Err(Error::InvalidTolerance { .. })
        ));
    }

    #[test]
    fn unit_pair_spectrum() {
        let s = SkewMatrix::from_fn(2, |_, _| 1.0);
        let spec = skew_spectrum(&s, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(spec.clusters.len(), 1);
        assert!((spec.clusters[0].lambda - 1.0).abs() <= 1e-14);
        assert_eq!(spec.defect(), 0);
        let basis = eigenspace_for(&s, 1.0, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(basis.vectors.cols(), 2);
    }
}
