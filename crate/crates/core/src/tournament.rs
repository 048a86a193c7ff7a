//! Tournaments, their skew-adjacency matrices, and the minimal
//! quasi-orthogonality-index classification by order residue mod 4.
//!
//! A tournament on n vertices orients every edge of the complete graph. Its
//! skew-adjacency matrix has zero diagonal and, for i != j, entry +1 when i
//! dominates j and -1 otherwise. The minimal index over all tournaments of
//! order n depends only on n mod 4 (0, 3, 2, 1 map to 0, 1, 2, 3), and a
//! tournament attains the minimum exactly when its characteristic polynomial
//! is the target polynomial of its residue class (with two exceptions:
//! orders 2 and 3 are constant, and every 5-tournament attains 3).

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::exactpoly::{char_poly_exact, target_poly, IntMatrix, IntPolynomial, TargetCase};
use crate::extension::quasi_orthogonality_index;
use crate::linalg::{DenseMatrix, SkewMatrix};
use crate::rng::SplitMix64;

/// Orientation of the complete graph on `n` vertices. For each pair i < j a
/// bit records whether i dominates j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    bits: Vec<bool>,
}

impl Tournament {
    /// Build from the upper-triangle dominance bits in row-major pair order
    /// (0,1), (0,2), ..., (0,n-1), (1,2), ...
    pub fn from_bits(n: usize, bits: Vec<bool>) -> Self {
        assert_eq!(bits.len(), n * n.saturating_sub(1) / 2, "one bit per pair");
        Tournament { n, bits }
    }

    /// Decode the low `n(n-1)/2` bits of `code` as dominance bits; used to
    /// enumerate all tournaments of small order.
    pub fn from_code(n: usize, code: u64) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        assert!(pairs <= 64, "order too large for a u64 code");
        let bits = (0..pairs).map(|k| code >> k & 1 == 1).collect();
        Tournament { n, bits }
    }

    /// The transitive tournament: i dominates j exactly when i < j.
    pub fn transitive(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        Tournament {
            n,
            bits: vec![true; pairs],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// True when u dominates v (u != v).
    pub fn dominates(&self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "no self-edges in a tournament");
        if u < v {
            self.bits[self.pair_index(u, v)]
        } else {
            !self.bits[self.pair_index(v, u)]
        }
    }

    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| v != u && self.dominates(u, v))
            .collect()
    }

    /// Skew-adjacency matrix over the integers.
    pub fn skew_adjacency(&self) -> IntMatrix {
        let mut a = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let v = if self.dominates(i, j) { 1 } else { -1 };
                    a.set(i, j, BigInt::from(v));
                }
            }
        }
        a
    }

    /// Skew-adjacency matrix in floating storage, for the spectral pipeline.
    pub fn skew_matrix(&self) -> SkewMatrix {
        SkewMatrix::from_fn(self.n, |i, j| if self.dominates(i, j) { 1.0 } else { -1.0 })
    }

    /// Interpret a dense matrix as a skew-adjacency matrix: zero diagonal,
    /// off-diagonal entries exactly +-1, antisymmetric. Rejects anything
    /// else, including near-misses.
    pub fn try_from_dense(a: &DenseMatrix) -> Result<Tournament, Error> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        if n < 2 {
            return Err(Error::UnsupportedOrder {
                n,
                context: "tournament matrix",
            });
        }
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            if a.get(i, i) != 0.0 {
                return Err(Error::NotSkewAdjacency { row: i, col: i });
            }
            for j in (i + 1)..n {
                let x = a.get(i, j);
                if x != 1.0 && x != -1.0 {
                    return Err(Error::NotSkewAdjacency { row: i, col: j });
                }
                if a.get(j, i) != -x {
                    return Err(Error::NotSkewAdjacency { row: j, col: i });
                }
                bits.push(x == 1.0);
            }
        }
        Ok(Tournament { n, bits })
    }
}

/// Paley tournament on the prime field GF(q), q prime with q = 3 (mod 4):
/// x dominates y exactly when (y - x) mod q is a nonzero quadratic residue.
/// Primality is by trial division; prime powers are not supported.
pub fn paley_tournament(q: usize) -> Result<Tournament, Error> {
    if q < 2 || !is_prime(q) {
        return Err(Error::InvalidPaleyOrder {
            q,
            reason: "order must be prime (prime powers not supported)",
        });
    }
    if q % 4 != 3 {
        return Err(Error::InvalidPaleyOrder {
            q,
            reason: "prime must be congruent to 3 mod 4",
        });
    }
    let mut residue = vec![false; q];
    for z in 1..q {
        residue[z * z % q] = true;
    }
    let mut bits = Vec::with_capacity(q * (q - 1) / 2);
    for i in 0..q {
        for j in (i + 1)..q {
            bits.push(residue[(j - i) % q]);
        }
    }
    Ok(Tournament { n: q, bits })
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// If every ordered pair of distinct vertices has the same number `d` of
/// common out-neighbors, return `d`. Note `d = 0` is possible (the
/// 3-cycle); callers needing the usual `d >= 1` notion must check.
pub fn is_doubly_regular(t: &Tournament) -> Option<usize> {
    let n = t.order();
    let out: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| v != u && t.dominates(u, v)).collect())
        .collect();
    let mut common: Option<usize> = None;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let c = (0..n).filter(|&w| out[u][w] && out[v][w]).count();
            match common {
                None => common = Some(c),
                Some(d) if d != c => return None,
                _ => {}
            }
        }
    }
    common
}

/// Add one vertex (with the largest index) that dominates every existing
/// vertex.
pub fn add_dominating_vertex(t: &Tournament) -> Tournament {
    let n = t.order();
    let mut bits = Vec::with_capacity((n + 1) * n / 2);
    for i in 0..n {
        for j in (i + 1)..=n {
            if j < n {
                bits.push(t.dominates(i, j));
            } else {
                // Pair (i, n): the new vertex dominates i.
                bits.push(false);
            }
        }
    }
    Tournament { n: n + 1, bits }
}

/// Conference matrix test: zero diagonal, off-diagonal entries +-1, and
/// `C^T C = (n-1) I` exactly.
pub fn is_conference(a: &IntMatrix) -> bool {
    let n = a.order();
    if n == 0 {
        return false;
    }
    let one = BigInt::from(1);
    for i in 0..n {
        if !a.get(i, i).is_zero() {
            return false;
        }
        for j in 0..n {
            if i != j && a.get(i, j).magnitude() != one.magnitude() {
                return false;
            }
        }
    }
    gram_equals_scaled_identity(a, &BigInt::from(n as i64 - 1))
}

/// Hadamard matrix test: all entries +-1 and columns mutually orthogonal
/// (`H^T H = n I` exactly).
pub fn is_hadamard(a: &IntMatrix) -> bool {
    let n = a.order();
    if n == 0 {
        return false;
    }
    let one = BigInt::from(1);
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j).magnitude() != one.magnitude() {
                return false;
            }
        }
    }
    gram_equals_scaled_identity(a, &BigInt::from(n as i64))
}

fn gram_equals_scaled_identity(a: &IntMatrix, scale: &BigInt) -> bool {
    let n = a.order();
    for i in 0..n {
        for j in i..n {
            let mut s = BigInt::zero();
            for k in 0..n {
                s += a.get(k, i) * a.get(k, j);
            }
            let want = if i == j { scale.clone() } else { BigInt::zero() };
            if s != want {
                return false;
            }
        }
    }
    true
}

/// Outcome of classifying one tournament against the minimal-index theorem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexClassification {
    pub n: usize,
    /// n mod 4.
    pub residue: usize,
    /// Least quasi-orthogonality index over all tournaments of order n.
    pub minimal_index_bound: usize,
    /// Whether this tournament attains the bound.
    pub achieved: bool,
    /// The (case, k) whose target polynomial the characteristic polynomial
    /// equals, when that is what certifies attainment. `None` for the
    /// unconditional orders (2, 3, 5) and for non-attaining tournaments.
    pub matched_poly: Option<(TargetCase, usize)>,
    /// Index measured by the floating spectral pipeline, cross-checked
    /// against the bound and the parity invariant.
    pub numeric_index: usize,
}

/// Least index attainable at order n >= 2, by residue class mod 4.
fn minimal_bound(n: usize) -> usize {
    match n {
        2 => 0,
        3 => 1,
        _ => [0, 3, 2, 1][n % 4],
    }
}

/// Classify a tournament: the minimal index bound for its order, whether the
/// exact characteristic polynomial certifies attainment, and the index
/// measured numerically. The two routes are cross-checked; disagreement is
/// an error, never silently resolved.
pub fn classify_index(t: &Tournament, gap_tol: f64) -> Result<IndexClassification, Error> {
    let n = t.order();
    if n < 2 {
        return Err(Error::UnsupportedOrder {
            n,
            context: "tournament classification",
        });
    }
    let bound = minimal_bound(n);
    let numeric_index = quasi_orthogonality_index(&t.skew_matrix(), gap_tol)?;

    let (achieved, matched_poly) = if n == 2 || n == 3 || n == 5 {
        // Constant orders: every tournament of order 2, 3 or 5 attains the
        // bound; no polynomial condition applies.
        (true, None)
    } else {
        let p = char_poly_exact(&t.skew_adjacency());
        let (case, k) = TargetCase::for_order(n).expect("n >= 4");
        let attains = match case {
            TargetCase::IV => k >= 2 && p == target_poly(case, k)?,
            _ => p == target_poly(case, k)?,
        };
        (attains, attains.then_some((case, k)))
    };

    if numeric_index % 2 != n % 2 {
        return Err(Error::ClassificationInconsistency {
            detail: format!(
                "numeric index {numeric_index} has wrong parity for order {n}"
            ),
        });
    }
    if numeric_index < bound {
        return Err(Error::ClassificationInconsistency {
            detail: format!(
                "numeric index {numeric_index} is below the minimal bound {bound} for order {n}"
            ),
        });
    }
    if achieved != (numeric_index == bound) {
        return Err(Error::ClassificationInconsistency {
            detail: format!(
                "exact route says achieved = {achieved} but numeric index is \
                 {numeric_index} against bound {bound} at order {n}"
            ),
        });
    }

    Ok(IndexClassification {
        n,
        residue: n % 4,
        minimal_index_bound: bound,
        achieved,
        matched_poly,
        numeric_index,
    })
}

/// Uniform random tournament: one SplitMix64 output word per pair, in
/// row-major pair order, taking the top bit. Bit-exact across platforms for
/// a given seed.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut g = SplitMix64::new(seed);
    let pairs = n * n.saturating_sub(1) / 2;
    let bits = (0..pairs).map(|_| g.next_bool()).collect();
    Tournament { n, bits }
}

/// Parse the tournament text format: first line the order `n`, then one
/// line per vertex listing the vertices it dominates (0-based, whitespace
/// separated; a vertex that dominates nothing has an empty line, and
/// trailing empty lines may be omitted). Every pair must be covered exactly
/// once.
pub fn parse_tournament_text(text: &str) -> Result<Tournament, Error> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::Parse {
        line: 1,
        detail: "empty input".into(),
    })?;
    let n: usize = header.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        detail: format!("expected vertex count, got `{}`", header.trim()),
    })?;
    if n < 1 {
        return Err(Error::Parse {
            line: 1,
            detail: "vertex count must be at least 1".into(),
        });
    }
    let mut dominates = vec![vec![false; n]; n];
    for (u, dom_row) in dominates.iter_mut().enumerate() {
        let line = lines.next().unwrap_or("");
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: u + 2,
                detail: format!("bad vertex `{tok}`"),
            })?;
            if v >= n {
                return Err(Error::Parse {
                    line: u + 2,
                    detail: format!("vertex {v} out of range for order {n}"),
                });
            }
            if v == u {
                return Err(Error::InvalidTournament {
                    detail: format!("vertex {u} dominates itself"),
                });
            }
            if dom_row[v] {
                return Err(Error::InvalidTournament {
                    detail: format!("edge {u} -> {v} listed twice"),
                });
            }
            dom_row[v] = true;
        }
    }
    for (extra, line) in lines.enumerate() {
        if !line.trim().is_empty() {
            return Err(Error::Parse {
                line: n + 2 + extra,
                detail: format!("unexpected trailing content `{}`", line.trim()),
            });
        }
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    // Both orientations of each pair are read, so plain indices it is.
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in (i + 1)..n {
            match (dominates[i][j], dominates[j][i]) {
                (true, false) => bits.push(true),
                (false, true) => bits.push(false),
                (true, true) => {
                    return Err(Error::InvalidTournament {
                        detail: format!("both {i} -> {j} and {j} -> {i} present"),
                    })
                }
                (false, false) => {
                    return Err(Error::InvalidTournament {
                        detail: format!("pair ({i}, {j}) has no direction"),
                    })
                }
            }
        }
    }
    Ok(Tournament { n, bits })
}

/// Render a tournament in the text format; inverse of
/// [`parse_tournament_text`].
pub fn tournament_to_text(t: &Tournament) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", t.order()));
    for u in 0..t.order() {
        let row: Vec<String> = t.out_neighbors(u).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Exact characteristic polynomial of the skew-adjacency matrix.
pub fn tournament_char_poly(t: &Tournament) -> IntPolynomial {
    char_poly_exact(&t.skew_adjacency())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::coefficient_checks;
    use crate::spectral::DEFAULT_GAP_TOL;

    #[test]
    fn paley_3_is_the_cyclic_orientation() {
        // Residues mod 3: {1}; 0 -> 1 -> 2 -> 0.
        let t = paley_tournament(3).unwrap();
        assert!(t.dominates(0, 1) && t.dominates(1, 2) && t.dominates(2, 0));
        assert_eq!(
            tournament_char_poly(&t),
            IntPolynomial::from_i64(&[0, 3, 0, 1])
        );
    }

    #[test]
    fn paley_7_structure() {
        // Residues mod 7: {1, 2, 4}.
        let t = paley_tournament(7).unwrap();
        for x in 0..7usize {
            for d in [1usize, 2, 4] {
                assert!(t.dominates(x, (x + d) % 7));
            }
            for d in [3usize, 5, 6] {
                assert!(!t.dominates(x, (x + d) % 7));
            }
        }
        // x (x^2+7)^3.
        let want = IntPolynomial::x().mul(&IntPolynomial::from_i64(&[7, 0, 1]).pow(3));
        assert_eq!(tournament_char_poly(&t), want);
    }

    #[test]
    fn paley_rejects_bad_orders() {
        for q in [0usize, 1, 2, 4, 5, 9, 13, 15, 21, 27] {
            assert!(
                matches!(paley_tournament(q), Err(Error::InvalidPaleyOrder { .. })),
                "q = {q} must be rejected"
            );
        }
        for q in [3usize, 7, 11, 19, 23, 31] {
            assert!(paley_tournament(q).is_ok(), "q = {q} must be accepted");
        }
    }

    #[test]
    fn skew_adjacency_of_relabeled_transitive_four() {
        // 1 dominates 2,3,4; 2 dominates 3,4; 4 dominates 3 (1-based).
        let t = Tournament::from_bits(4, vec![true, true, true, true, true, false]);
        let a = t.skew_adjacency();
        let want = IntMatrix::from_rows_i64(&[
            vec![0, 1, 1, 1],
            vec![-1, 0, 1, 1],
            vec![-1, -1, 0, -1],
            vec![-1, -1, 1, 0],
        ]);
        assert_eq!(a, want);
        assert!(a.validate_skew_adjacency().is_ok());
        // Floating route agrees entry for entry.
        let s = t.skew_matrix();
        for i in 0..4 {
            for j in 0..4 {
                let int_v: f64 = if i == j {
                    0.0
                } else if t.dominates(i, j) {
                    1.0
                } else {
                    -1.0
                };
                assert_eq!(s.get(i, j), int_v);
            }
        }
    }

    #[test]
    fn double_regularity() {
        assert_eq!(is_doubly_regular(&paley_tournament(7).unwrap()), Some(1));
        assert_eq!(is_doubly_regular(&paley_tournament(11).unwrap()), Some(2));
        // d = (q-3)/4 for Paley; the 3-cycle has d = 0.
        assert_eq!(is_doubly_regular(&paley_tournament(3).unwrap()), Some(0));
        assert_eq!(is_doubly_regular(&Tournament::transitive(4)), None);
    }

    #[test]
    fn dominating_vertex_and_conference() {
        // One vertex: adding a dominator gives the unique 2-tournament.
        let single = Tournament::from_bits(1, vec![]);
        let pair = add_dominating_vertex(&single);
        assert_eq!(pair.order(), 2);
        assert!(pair.dominates(1, 0));

        // Paley(3)+ has a conference skew-adjacency matrix of order 4, and
        // C + I is Hadamard.
        let plus = add_dominating_vertex(&paley_tournament(3).unwrap());
        let c = plus.skew_adjacency();
        assert!(is_conference(&c));
        let mut h = c.clone();
        for i in 0..4 {
            h.set(i, i, BigInt::from(1));
        }
        assert!(is_hadamard(&h));
        // Its characteristic polynomial is the order-4 target (x^2+3)^2.
        assert_eq!(
            tournament_char_poly(&plus),
            target_poly(TargetCase::I, 0).unwrap()
        );
    }

    #[test]
    fn conference_and_hadamard_negatives() {
        let pair = IntMatrix::from_rows_i64(&[vec![0, 1], vec![-1, 0]]);
        assert!(is_conference(&pair));
        assert!(!is_hadamard(&pair));
        let cycle = paley_tournament(3).unwrap().skew_adjacency();
        assert!(!is_conference(&cycle));
        let h2 = IntMatrix::from_rows_i64(&[vec![1, 1], vec![1, -1]]);
        assert!(is_hadamard(&h2));
        let not_h = IntMatrix::from_rows_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(!is_hadamard(&not_h));
    }

    #[test]
    fn classify_constants_and_small_orders() {
        let two = Tournament::transitive(2);
        let c = classify_index(&two, DEFAULT_GAP_TOL).unwrap();
        assert_eq!((c.minimal_index_bound, c.numeric_index), (0, 0));
        assert!(c.achieved);

        let three = Tournament::transitive(3);
        let c = classify_index(&three, DEFAULT_GAP_TOL).unwrap();
        assert_eq!((c.minimal_index_bound, c.numeric_index), (1, 1));
        assert!(c.achieved && c.matched_poly.is_none());

        // Every 5-tournament attains 3 unconditionally.
        let c = classify_index(&Tournament::transitive(5), DEFAULT_GAP_TOL).unwrap();
        assert_eq!((c.minimal_index_bound, c.numeric_index), (3, 3));
        assert!(c.achieved && c.matched_poly.is_none());
        assert_eq!(c.residue, 1);
    }

    #[test]
    fn classify_paley_7() {
        let c = classify_index(&paley_tournament(7).unwrap(), DEFAULT_GAP_TOL).unwrap();
        assert_eq!(c.n, 7);
        assert_eq!(c.residue, 3);
        assert_eq!(c.minimal_index_bound, 1);
        assert!(c.achieved);
        assert_eq!(c.matched_poly, Some((TargetCase::II, 1)));
        assert_eq!(c.numeric_index, 1);
    }

    #[test]
    fn classify_transitive_four_misses_bound() {
        let c = classify_index(&Tournament::transitive(4), DEFAULT_GAP_TOL).unwrap();
        assert_eq!(c.minimal_index_bound, 0);
        assert!(!c.achieved);
        assert!(c.matched_poly.is_none());
        assert_eq!(c.numeric_index, 2);
    }

    #[test]
    fn classify_paley3_plus_attains_order_four_bound() {
        let plus = add_dominating_vertex(&paley_tournament(3).unwrap());
        let c = classify_index(&plus, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(c.n, 4);
        assert!(c.achieved);
        assert_eq!(c.matched_poly, Some((TargetCase::I, 0)));
        assert_eq!(c.numeric_index, 0);
    }

    #[test]
    fn classify_rejects_tiny_orders() {
        assert!(matches!(
            classify_index(&Tournament::from_bits(1, vec![]), DEFAULT_GAP_TOL),
            Err(Error::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn random_tournament_is_seed_deterministic() {
        let a = random_tournament(10, 42);
        let b = random_tournament(10, 42);
        assert_eq!(a, b);
        let c = random_tournament(10, 43);
        assert_ne!(a, c, "different seeds should differ at order 10");
        // Each orientation bit is the top bit of one output word.
        let mut g = SplitMix64::new(42);
        assert_eq!(a.dominates(0, 1), g.next_bool());
        assert_eq!(a.dominates(0, 2), g.next_bool());
    }

    #[test]
    fn coefficient_identities_on_random_tournaments() {
        for seed in 0..20 {
            let n = 2 + (seed as usize % 9);
            let t = random_tournament(n, 1000 + seed);
            let p = tournament_char_poly(&t);
            assert!(
                coefficient_checks(&p, n).is_empty(),
                "violations for seed {seed} order {n}"
            );
        }
    }

    #[test]
    fn text_format_roundtrip() {
        for t in [
            paley_tournament(7).unwrap(),
            Tournament::transitive(5),
            random_tournament(9, 7),
            Tournament::from_bits(1, vec![]),
        ] {
            let text = tournament_to_text(&t);
            let back = parse_tournament_text(&text).unwrap();
            assert_eq!(t, back);
        }
        // Sink vertex at the end: its empty line may be omitted.
        let t = parse_tournament_text("2\n1\n").unwrap();
        assert!(t.dominates(0, 1));
    }

    #[test]
    fn text_format_rejects_invalid() {
        assert!(matches!(
            parse_tournament_text(""),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_tournament_text("x\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_tournament_text("2\n5\n\n"),
            Err(Error::Parse { .. })
        ));
        // Self-domination.
        assert!(matches!(
            parse_tournament_text("2\n0 1\n\n"),
            Err(Error::InvalidTournament { .. })
        ));
        // Both directions.
        assert!(matches!(
            parse_tournament_text("2\n1\n0\n"),
            Err(Error::InvalidTournament { .. })
        ));
        // Missing direction.
        assert!(matches!(
            parse_tournament_text("3\n1\n2\n\n"),
            Err(Error::InvalidTournament { .. })
        ));
        // Trailing garbage.
        assert!(matches!(
            parse_tournament_text("2\n1\n\n0 junk\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn dense_matrix_to_tournament() {
        let t = paley_tournament(3).unwrap();
        let dense = t.skew_matrix().to_dense();
        assert_eq!(Tournament::try_from_dense(&dense).unwrap(), t);

        let mut zeroed = dense.clone();
        zeroed.set(0, 1, 0.0);
        assert!(matches!(
            Tournament::try_from_dense(&zeroed),
            Err(Error::NotSkewAdjacency { row: 0, col: 1 })
        ));
        let mut diag = dense.clone();
        diag.set(1, 1, 1.0);
        assert!(matches!(
            Tournament::try_from_dense(&diag),
            Err(Error::NotSkewAdjacency { row: 1, col: 1 })
        ));
        let mut asym = dense;
        asym.set(1, 0, 1.0);
        assert!(matches!(
            Tournament::try_from_dense(&asym),
            Err(Error::NotSkewAdjacency { row: 1, col: 0 })
        ));
    }

    #[test]
    fn all_four_tournaments_conference_iff_index_zero() {
        for code in 0u64..64 {
            let t = Tournament::from_code(4, code);
            let c = classify_index(&t, DEFAULT_GAP_TOL).unwrap();
            let conf = is_conference(&t.skew_adjacency());
            assert_eq!(
                c.numeric_index == 0,
                conf,
                "code {code}: index {} vs conference {conf}",
                c.numeric_index
            );
        }
    }
}
