//! Dense real matrices, exact skew-symmetric storage, and a cyclic Jacobi
//! eigensolver for symmetric matrices.
//!
//! `SkewMatrix` stores only the strict upper triangle, so `S^T = -S` holds
//! by construction rather than by tolerance. The eigensolver is plain cyclic
//! Jacobi: deterministic rotation order, no pivot search, which makes runs
//! bit-identical for bit-identical inputs.

use crate::error::Error;

/// A sweep is converged when every off-diagonal magnitude is at most
/// `JACOBI_REL_TOL * ||A||_F`.
pub const JACOBI_REL_TOL: f64 = 1e-14;
/// Hard cap on Jacobi sweeps; hitting it is a convergence failure.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must be rows*cols");
        DenseMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        DenseMatrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest absolute entry of `self - other`; matrices must be the same
    /// shape.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// All entries finite (no NaN or infinity).
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

/// Matrix product. Shapes must agree.
pub fn matmul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix, Error> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            left: (a.rows, a.cols),
            right: (b.rows, b.cols),
        });
    }
    let mut out = DenseMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if aik == 0.0 {
                continue;
            }
            for j in 0..b.cols {
                let v = out.get(i, j) + aik * b.get(k, j);
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

/// Gram matrix `A^T A`. The upper triangle is computed once and mirrored, so
/// the result is exactly symmetric.
pub fn gram(a: &DenseMatrix) -> DenseMatrix {
    let n = a.cols;
    let mut g = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut s = 0.0;
            for k in 0..a.rows {
                s += a.get(k, i) * a.get(k, j);
            }
            g.set(i, j, s);
            g.set(j, i, s);
        }
    }
    g
}

/// Skew-symmetric matrix of order `n`, stored as the strict upper triangle
/// in row-major order. The diagonal is identically zero and the lower
/// triangle is the exact negation of the upper, so skew-symmetry can never
/// drift.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix {
    n: usize,
    upper: Vec<f64>,
}

impl SkewMatrix {
    pub fn zero(n: usize) -> Self {
        SkewMatrix {
            n,
            upper: vec![0.0; n * n.saturating_sub(1) / 2],
        }
    }

    /// Build from a callback giving the entry at (i, j) for i < j.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { n, upper }
    }

    /// Validate exact skew-symmetry of a dense matrix and take its strict
    /// upper triangle. Exactness is the contract: `a[i][j] + a[j][i]` must be
    /// exactly zero and the diagonal exactly zero. Negation is exact in
    /// floating point, so any matrix written down as skew passes.
    pub fn try_from_dense(a: &DenseMatrix) -> Result<SkewMatrix, Error> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        for i in 0..n {
            if a.get(i, i) != 0.0 {
                return Err(Error::NotSkewSymmetric { row: i, col: i });
            }
            for j in (i + 1)..n {
                if a.get(i, j) + a.get(j, i) != 0.0 {
                    return Err(Error::NotSkewSymmetric { row: j, col: i });
                }
            }
        }
        Ok(SkewMatrix::from_fn(n, |i, j| a.get(i, j)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn upper_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => 0.0,
            Ordering::Less => self.upper[self.upper_index(i, j)],
            Ordering::Greater => -self.upper[self.upper_index(j, i)],
        }
    }

    /// Strict upper triangle, row-major. Bit-for-bit equality of two skew
    /// matrices is equality of these slices.
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }

    pub fn frobenius_norm(&self) -> f64 {
        (2.0 * self.upper.iter().map(|x| x * x).sum::<f64>()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.upper.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.upper.iter().all(|x| x.is_finite())
    }

    /// Matrix-vector product S*x.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for (i, yi) in y.iter_mut().enumerate() {
            let mut s = 0.0;
            for (j, &xj) in x.iter().enumerate() {
                s += self.get(i, j) * xj;
            }
            *yi = s;
        }
        y
    }

    /// True when `other`'s leading principal block of this order equals this
    /// matrix bit for bit.
    pub fn is_leading_block_of(&self, other: &SkewMatrix) -> bool {
        if other.n < self.n {
            return false;
        }
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j).to_bits() != other.get(i, j).to_bits() {
                    return false;
                }
            }
        }
        true
    }
}

/// Eigendecomposition of a symmetric matrix: `values` ascending,
/// `vectors.column(k)` the unit eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: DenseMatrix,
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// `sym_tol` bounds the accepted asymmetry: `||a - a^T||_F <= sym_tol * ||a||_F`.
/// Rotations run over pairs (p, q), p < q, in row-major order; a sweep is
/// converged when the largest off-diagonal magnitude is at most
/// `JACOBI_REL_TOL * ||a||_F`. Eigenvalues are returned ascending (ties keep
/// diagonal order), and each eigenvector is normalized so its component of
/// largest absolute value (the first, on ties) is positive. Every step is
/// deterministic, so identical inputs give bit-identical output.
pub fn symmetric_eigen(a: &DenseMatrix, sym_tol: f64) -> Result<SymEigen, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let norm = a.frobenius_norm();
    let mut asym: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            asym = asym.max((a.get(i, j) - a.get(j, i)).abs());
        }
    }
    if asym > sym_tol * norm {
        return Err(Error::NotSymmetric {
            deviation: asym,
            tolerance: sym_tol * norm,
        });
    }

    let mut m = a.clone();
    // Enforce exact symmetry so both triangles stay consistent under updates.
    for i in 0..n {
        for j in (i + 1)..n {
            let v = m.get(i, j);
            m.set(j, i, v);
        }
    }
    let mut v = DenseMatrix::identity(n);
    let threshold = JACOBI_REL_TOL * norm;

    let mut converged = norm == 0.0 || n < 2;
    let mut last_off = 0.0;
    if !converged {
        for _sweep in 0..JACOBI_MAX_SWEEPS {
            let mut off: f64 = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    off = off.max(m.get(i, j).abs());
                }
            }
            last_off = off;
            if off <= threshold {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut m, &mut v, p, q);
                }
            }
        }
        if !converged {
            let mut off: f64 = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    off = off.max(m.get(i, j).abs());
                }
            }
            if off <= threshold {
                converged = true;
            }
            last_off = off;
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure {
            sweeps: JACOBI_MAX_SWEEPS,
            off_diag: last_off,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m.get(i, i)
            .partial_cmp(&m.get(j, j))
            .expect("eigenvalues are finite")
            .then(i.cmp(&j))
    });
    let values: Vec<f64> = order.iter().map(|&i| m.get(i, i)).collect();
    let mut vectors = DenseMatrix::zeros(n, n);
    for (k, &src) in order.iter().enumerate() {
        let mut col: Vec<f64> = (0..n).map(|i| v.get(i, src)).collect();
        let mut pivot = 0;
        for (i, c) in col.iter().enumerate() {
            if c.abs() > col[pivot].abs() {
                pivot = i;
            }
        }
        if col[pivot] < 0.0 {
            for c in col.iter_mut() {
                *c = -*c;
            }
        }
        for (i, &c) in col.iter().enumerate() {
            vectors.set(i, k, c);
        }
    }
    Ok(SymEigen { values, vectors })
}

/// One Jacobi rotation annihilating m[p][q], applied symmetrically to `m`
/// and accumulated into `v`.
fn rotate(m: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let apq = m.get(p, q);
    if apq == 0.0 {
        return;
    }
    let theta = (m.get(q, q) - m.get(p, p)) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        // Avoid overflow in theta^2; the rotation angle is ~1/(2*theta).
        1.0 / (2.0 * theta)
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);
    let n = m.rows();

    let app = m.get(p, p);
    let aqq = m.get(q, q);
    m.set(p, p, app - t * apq);
    m.set(q, q, aqq + t * apq);
    m.set(p, q, 0.0);
    m.set(q, p, 0.0);
    for j in 0..n {
        if j == p || j == q {
            continue;
        }
        let g = m.get(j, p);
        let h = m.get(j, q);
        let gp = g - s * (h + g * tau);
        let hq = h + s * (g - h * tau);
        m.set(j, p, gp);
        m.set(p, j, gp);
        m.set(j, q, hq);
        m.set(q, j, hq);
    }
    for j in 0..n {
        let g = v.get(j, p);
        let h = v.get(j, q);
        v.set(j, p, g - s * (h + g * tau));
        v.set(j, q, h + s * (g - h * tau));
    }
}

/// Render a real with 17 significant digits, enough to round-trip any f64
/// exactly, independent of locale.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parse the shared matrix text format: a header line `rows cols`, then
/// `rows` lines of whitespace-separated decimals. Lines whose first
/// non-blank character is `#` are comments and are skipped anywhere.
pub fn parse_matrix_text(text: &str) -> Result<DenseMatrix, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        detail: "empty input".into(),
    })?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(Error::Parse {
            line: hline + 1,
            detail: format!("expected header `rows cols`, got `{}`", header.trim()),
        });
    }
    let rows: usize = dims[0].parse().map_err(|_| Error::Parse {
        line: hline + 1,
        detail: format!("bad row count `{}`", dims[0]),
    })?;
    let cols: usize = dims[1].parse().map_err(|_| Error::Parse {
        line: hline + 1,
        detail: format!("bad column count `{}`", dims[1]),
    })?;
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (lno, line) = lines.next().ok_or(Error::Parse {
            line: text.lines().count(),
            detail: format!("expected {rows} matrix rows"),
        })?;
        let mut count = 0;
        for tok in line.split_whitespace() {
            let v: f64 = tok.parse().map_err(|_| Error::Parse {
                line: lno + 1,
                detail: format!("bad number `{tok}`"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: lno + 1,
                    detail: format!("non-finite entry `{tok}`"),
                });
            }
            data.push(v);
            count += 1;
        }
        if count != cols {
            return Err(Error::Parse {
                line: lno + 1,
                detail: format!("expected {cols} entries, got {count}"),
            });
        }
    }
    if let Some((lno, line)) = lines.next() {
        return Err(Error::Parse {
            line: lno + 1,
            detail: format!("unexpected trailing content `{}`", line.trim()),
        });
    }
    Ok(DenseMatrix::new(rows, cols, data))
}

/// Write a matrix in the shared text format; inverse of [`parse_matrix_text`].
pub fn matrix_to_text(a: &DenseMatrix) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", a.rows(), a.cols()));
    for i in 0..a.rows() {
        let row: Vec<String> = (0..a.cols()).map(|j| format_real(a.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
