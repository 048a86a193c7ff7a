//! Exact integer characteristic polynomials and the classification target
//! polynomials.
//!
//! Everything here is arbitrary-precision integer arithmetic; nothing is
//! rounded. The characteristic polynomial comes from the Faddeev-LeVerrier
//! recurrence, whose only divisions (by the step number `k`) are provably
//! exact and are asserted so. Polynomial gcd and Yun's square-free
//! decomposition support exact root-multiplicity extraction; full
//! factorization over the rationals is out of scope.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Integer polynomial, coefficients ascending by power with no trailing
/// zeros. The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::from(1)],
        }
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::from(0), BigInt::from(1)],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c == &BigInt::from(1))
    }

    /// Multiplicity of the root 0, i.e. the number of trailing zero
    /// coefficients below the lowest nonzero one.
    pub fn x_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - other.coeff(k));
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn pow(&self, mut e: usize) -> IntPolynomial {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPolynomial::from_coeffs(out)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (or the divisor is zero).
    pub fn divide_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let head = rem[k + dd].clone();
            if head.is_zero() {
                continue;
            }
            let (q, r) = head.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::from_coeffs(quot))
    }

    /// Content: gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient; zero stays zero.
    pub fn primitive(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut content = self.content();
        if self.leading().unwrap().is_negative() {
            content = -content;
        }
        let coeffs = self.coeffs.iter().map(|c| c / &content).collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Evaluate at an integer point.
    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients as f64, ascending. Intended for root finding on
    /// moderate-degree polynomials; values outside f64 range become
    /// infinities, which the caller must not feed to a root finder.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    /// Ascending coefficients as decimal strings (exact at any size).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Pseudo-remainder of `a` by `b` (deg b <= deg a, b nonzero): repeatedly
/// scale by the leading coefficient of `b` and cancel the head term, staying
/// in integer arithmetic throughout.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let lc_b = b.leading().expect("divisor nonzero").clone();
    let db = b.degree().unwrap();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lc_r = r.leading().unwrap().clone();
        // r := lc(b)*r - lc(r)*x^(dr-db)*b
        let mut scaled = vec![BigInt::zero(); dr + 1];
        for (j, c) in b.coeffs().iter().enumerate() {
            scaled[dr - db + j] = &lc_r * c;
        }
        let mut next = Vec::with_capacity(dr + 1);
        for (k, sc) in scaled.iter_mut().enumerate().take(dr + 1) {
            let rv = if k < r.coeffs().len() {
                &r.coeffs()[k] * &lc_b
            } else {
                BigInt::zero()
            };
            next.push(rv - std::mem::take(sc));
        }
        r = IntPolynomial::from_coeffs(next);
    }
    r
}

/// Polynomial gcd over the integers (primitive pseudo-remainder sequence),
/// normalized primitive with positive leading coefficient.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut f = a.primitive();
    let mut g = b.primitive();
    if f.is_zero() {
        return g;
    }
    while !g.is_zero() {
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let r = pseudo_rem(&f, &g).primitive();
        f = g;
        g = r;
    }
    f.primitive()
}

/// Yun's square-free decomposition: factors `(p_i, i)` with each `p_i`
/// square-free, pairwise coprime, and `prod p_i^i = p` (up to the sign/content
/// normalization; exact for monic input). Factors with `p_i = 1` are omitted.
pub fn square_free_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let f = p.primitive();
    let Some(deg) = f.degree() else {
        return vec![];
    };
    if deg == 0 {
        return vec![];
    }
    let fp = f.derivative();
    let g = poly_gcd(&f, &fp);
    if g.degree() == Some(0) {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut c = f.divide_exact(&g).expect("gcd divides f");
    let mut d = fp.divide_exact(&g).expect("gcd divides f'").sub(&c.derivative());
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = poly_gcd(&c, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        c = c.divide_exact(&a).expect("square-free factor divides c");
        d = d.divide_exact(&a).expect("square-free factor divides d").sub(&c.derivative());
        i += 1;
    }
    out
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = mag == BigInt::from(1);
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if one {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{mag}x")?;
                    }
                }
                _ => {
                    if one {
                        write!(f, "x^{k}")?;
                    } else {
                        write!(f, "{mag}x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Square matrix with arbitrary-precision integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "orders must match");
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// self + c*I.
    pub fn plus_scaled_identity(&self, c: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = out.get(i, i) + c;
            out.set(i, i, v);
        }
        out
    }

    /// Check the skew-adjacency pattern: zero diagonal and, for every i < j,
    /// entries (i, j) and (j, i) equal to +1 and -1 in some order.
    pub fn validate_skew_adjacency(&self) -> Result<(), Error> {
        let one = BigInt::from(1);
        for i in 0..self.n {
            if !self.get(i, i).is_zero() {
                return Err(Error::NotSkewAdjacency { row: i, col: i });
            }
            for j in (i + 1)..self.n {
                let a = self.get(i, j);
                let b = self.get(j, i);
                if a.abs() != one {
                    return Err(Error::NotSkewAdjacency { row: i, col: j });
                }
                if *b != -a {
                    return Err(Error::NotSkewAdjacency { row: j, col: i });
                }
            }
        }
        Ok(())
    }
}

/// Exact characteristic polynomial `det(xI - A)` by the Faddeev-LeVerrier
/// recurrence: with `M_1 = A` and `c_k = -tr(M_k)/k`,
/// `M_{k+1} = A (M_k + c_k I)`. Every division by `k` is exact for integer
/// input; an inexact one means the implementation is broken, so it panics.
pub fn char_poly_exact(a: &IntMatrix) -> IntPolynomial {
    let n = a.order();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = a.clone();
    for k in 1..=n {
        let tr = m.trace();
        let (c, rem) = (-&tr).div_rem(&BigInt::from(k));
        assert!(
            rem.is_zero(),
            "Faddeev-LeVerrier division by {k} not exact (trace {tr})"
        );
        coeffs[n - k] = c.clone();
        if k < n {
            m = a.mul(&m.plus_scaled_identity(&c));
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// The four minimal-index target polynomials, one per order residue class
/// mod 4. `order = case.order(k)` and the polynomial is monic of that degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TargetCase {
    /// order 4k+4: (x^2 + 4k+3)^(2k+2)
    I,
    /// order 4k+3: x (x^2 + 4k+3)^(2k+1)
    II,
    /// order 4k+2: (x^2 + 4k+3)^(2k) (x^2 + 1)
    III,
    /// order 4k+1, k >= 2: x (x^2 + 4k+3)^(2k-1) (x^2 + 3)
    IV,
}

impl TargetCase {
    pub fn order(self, k: usize) -> usize {
        match self {
            TargetCase::I => 4 * k + 4,
            TargetCase::II => 4 * k + 3,
            TargetCase::III => 4 * k + 2,
            TargetCase::IV => 4 * k + 1,
        }
    }

    /// The case and parameter for a given order n >= 4.
    pub fn for_order(n: usize) -> Option<(TargetCase, usize)> {
        if n < 4 {
            return None;
        }
        Some(match n % 4 {
            0 => (TargetCase::I, n / 4 - 1),
            3 => (TargetCase::II, (n - 3) / 4),
            2 => (TargetCase::III, (n - 2) / 4),
            _ => (TargetCase::IV, (n - 1) / 4),
        })
    }
}

impl fmt::Display for TargetCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TargetCase::I => "I",
            TargetCase::II => "II",
            TargetCase::III => "III",
            TargetCase::IV => "IV",
        };
        write!(f, "{s}")
    }
}

/// Build the target polynomial for a case. Case IV exists only for k >= 2
/// (order at least 9); smaller k is an error.
pub fn target_poly(case: TargetCase, k: usize) -> Result<IntPolynomial, Error> {
    let base = IntPolynomial::from_i64(&[4 * k as i64 + 3, 0, 1]);
    let x = IntPolynomial::x();
    let poly = match case {
        TargetCase::I => base.pow(2 * k + 2),
        TargetCase::II => x.mul(&base.pow(2 * k + 1)),
        TargetCase::III => base.pow(2 * k).mul(&IntPolynomial::from_i64(&[1, 0, 1])),
        TargetCase::IV => {
            if k < 2 {
                return Err(Error::UnsupportedOrder {
                    n: 4 * k + 1,
                    context: "target case IV requires order >= 9",
                });
            }
            x.mul(&base.pow(2 * k - 1))
                .mul(&IntPolynomial::from_i64(&[3, 0, 1]))
        }
    };
    debug_assert_eq!(poly.degree(), Some(case.order(k)));
    Ok(poly)
}

/// Check the coefficient identities every tournament characteristic
/// polynomial `x^n + a_1 x^(n-1) + ... + a_n` satisfies: monic of degree n,
/// odd-indexed `a_k` all zero, `a_2 = n(n-1)/2`, and for even n an odd
/// determinant `a_n`. Returns human-readable violations (empty means all
/// hold).
pub fn coefficient_checks(p: &IntPolynomial, n: usize) -> Vec<String> {
    let mut violations = Vec::new();
    if p.degree() != Some(n) {
        violations.push(format!(
            "degree {:?} does not match order {n}",
            p.degree()
        ));
        return violations;
    }
    if !p.is_monic() {
        violations.push(format!(
            "leading coefficient {} is not 1",
            p.leading().unwrap()
        ));
        return violations;
    }
    let a = |k: usize| p.coeff(n - k);
    for k in (1..=n).step_by(2) {
        if !a(k).is_zero() {
            violations.push(format!("a_{k} = {} but odd coefficients must vanish", a(k)));
        }
    }
    if n >= 2 {
        let want = BigInt::from(n as u64 * (n as u64 - 1) / 2);
        if a(2) != want {
            violations.push(format!("a_2 = {} but must equal C({n},2) = {want}", a(2)));
        }
    }
    if n > 0 && n.is_multiple_of(2) && a(n).is_even() {
        violations.push(format!(
            "determinant a_{n} = {} must be odd for even order",
            a(n)
        ));
    }
    violations
}
