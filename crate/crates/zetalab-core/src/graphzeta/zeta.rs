//! The graph zeta function: Euler product over primitive cycles with all
//! class weights 1, exact rationality against two determinant oracles,
//! divisor extraction, and the log-derivative (geometric-side) check.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use super::cycles::enumerate_primitive_cycles;
use super::graph::{hashimoto, Graph};
use super::intpoly::{
    bareiss_det, bigint_to_f64, interpolate_integer, square_free_decomposition, IntPolynomial,
    TruncatedSeries,
};
use super::GraphError;

/// Coefficients up to degree `max_len` of Π (1 - T^{l_γ}) over primitive
/// cycles of length ≤ max_len. Longer cycles cannot touch these
/// coefficients, so the truncation is exact.
pub fn euler_product_series(g: &Graph, max_len: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::one(max_len);
    for c in enumerate_primitive_cycles(g, max_len) {
        series.mul_one_minus_power(c.length());
    }
    series
}

/// det(I - T·B) for the Hashimoto matrix B: the exact rational-function
/// realization of the Euler product. Degree 2|E|, integer coefficients,
/// computed by exact interpolation through Bareiss determinants.
pub fn zeta_polynomial(g: &Graph) -> IntPolynomial {
    let b = hashimoto(g);
    let n = b.size();
    let degree = n; // = 2|E|
    let xs: Vec<BigInt> = (0..=degree as i64).map(BigInt::from).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|t| {
            let mut m = vec![vec![BigInt::zero(); n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, entry) in row.iter_mut().enumerate() {
                    let mut v = BigInt::zero();
                    if i == j {
                        v += 1;
                    }
                    if b.get(i, j) == 1 {
                        v -= t;
                    }
                    *entry = v;
                }
            }
            bareiss_det(m)
        })
        .collect();
    interpolate_integer(&xs, &ys).expect("det(I - T·B) has integer coefficients")
}

/// The Bass-form oracle: (1-T²)^{|E|-|V|} · det(I - T·A + T²(D - I)) with
/// A the adjacency and D the degree matrix; structurally independent of
/// the Hashimoto route.
pub fn bass_polynomial(g: &Graph) -> IntPolynomial {
    let n = g.n_vertices();
    let mut adj = vec![vec![0i64; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    let degree = 2 * n;
    let xs: Vec<BigInt> = (0..=degree as i64).map(BigInt::from).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|t| {
            let t2 = t * t;
            let mut m = vec![vec![BigInt::zero(); n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, entry) in row.iter_mut().enumerate() {
                    let mut v = BigInt::zero();
                    if i == j {
                        v += 1;
                        v += &t2 * BigInt::from(g.degree(i) as i64 - 1);
                    }
                    if adj[i][j] == 1 {
                        v -= t;
                    }
                    *entry = v;
                }
            }
            bareiss_det(m)
        })
        .collect();
    let det_part = interpolate_integer(&xs, &ys).expect("Bass determinant is integral");
    // multiply by (1 - T²)^{|E| - |V|}
    let one_minus_t2 = IntPolynomial::from_i64(&[1, 0, -1]);
    let mut out = det_part;
    for _ in 0..g.n_edges().saturating_sub(n) {
        out = out.mul(&one_minus_t2);
    }
    out
}

/// Outcome of the exact coefficientwise comparison between the truncated
/// Euler product and the zeta polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityReport {
    pub max_len: usize,
    pub first_mismatch: Option<(usize, BigInt, BigInt)>,
}

impl RationalityReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl std::fmt::Display for RationalityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "PASS (exact agreement to degree {})", self.max_len),
            Some((k, lhs, rhs)) => write!(
                f,
                "FAIL at degree {k}: euler product coefficient {lhs} vs determinant {rhs}"
            ),
        }
    }
}

/// Exact integer comparison of the Euler product against det(I - T·B)
/// truncated at `max_len`.
pub fn rationality_report(g: &Graph, max_len: usize) -> RationalityReport {
    let product = euler_product_series(g, max_len);
    let det = zeta_polynomial(g).truncate(max_len);
    compare_series(&product, &det, max_len)
}

pub(super) fn compare_series(
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    max_len: usize,
) -> RationalityReport {
    for k in 0..=max_len {
        if lhs.coeff(k) != rhs.coeff(k) {
            return RationalityReport {
                max_len,
                first_mismatch: Some((k, lhs.coeff(k), rhs.coeff(k))),
            };
        }
    }
    RationalityReport { max_len, first_mismatch: None }
}

/// (Σ_{d|m} d·P_d, tr(B^m)) — exact integers; the per-power form of the
/// logarithmic-derivative identity.
pub fn cycle_count_identity(g: &Graph, m: usize) -> (BigInt, BigInt) {
    assert!(m >= 1);
    let cycles = enumerate_primitive_cycles(g, m);
    let mut lhs = BigInt::zero();
    for d in 1..=m {
        if m % d == 0 {
            let count = cycles.iter().filter(|c| c.length() == d).count();
            lhs += BigInt::from(d) * BigInt::from(count);
        }
    }
    let b = hashimoto(g);
    let n = b.size();
    let dense: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(b.get(i, j))).collect())
        .collect();
    let mut power = dense.clone();
    for _ in 1..m {
        power = mat_mul(&power, &dense);
    }
    let rhs = (0..n).fold(BigInt::zero(), |acc, i| acc + &power[i][i]);
    (lhs, rhs)
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// The divisor of the zeta polynomial: all complex roots with
/// multiplicities. Multiplicities come from the exact square-free
/// decomposition; floating point enters only in the root finding.
pub fn divisor(g: &Graph, tol: f64) -> Result<Vec<(Complex64, usize)>, GraphError> {
    let z = zeta_polynomial(g);
    divisor_of_polynomial(&z, tol)
}

pub fn divisor_of_polynomial(
    z: &IntPolynomial,
    tol: f64,
) -> Result<Vec<(Complex64, usize)>, GraphError> {
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    for (factor, mult) in square_free_decomposition(z) {
        let roots = roots_of_square_free(&factor, tol)?;
        for r in roots {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).expect("finite roots"));
    let total: usize = out.iter().map(|(_, m)| m).sum();
    if total != z.degree() {
        return Err(GraphError::Internal(format!(
            "divisor multiplicities sum to {total}, expected degree {}",
            z.degree()
        )));
    }
    Ok(out)
}

/// Durand–Kerner iteration with Newton polishing on a square-free factor.
fn roots_of_square_free(p: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>, GraphError> {
    let deg = p.degree();
    if deg == 0 {
        return Ok(vec![]);
    }
    let lead = bigint_to_f64(&p.coeff(deg));
    let monic: Vec<f64> = (0..=deg).map(|k| bigint_to_f64(&p.coeff(k)) / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let radius = 1.0
        + monic[..deg]
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut w: Vec<Complex64> = (0..deg)
        .map(|k| radius * 0.7 * seed.powu(k as u32 + 1) / seed.norm().powi(k as i32))
        .collect();
    let mut converged = false;
    for _ in 0..600 {
        let mut max_move = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= w[i] - w[j];
                }
            }
            let delta = eval(w[i]) / denom;
            w[i] -= delta;
            max_move = max_move.max(delta.norm());
        }
        if max_move < 1e-14 * radius {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(GraphError::RootFinding(format!(
            "Durand–Kerner failed to converge on a degree-{deg} factor"
        )));
    }
    // Newton polish on the square-free factor
    let dmonic: Vec<f64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| k as f64 * c)
        .collect();
    let deval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in dmonic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    for r in w.iter_mut() {
        for _ in 0..4 {
            let d = deval(*r);
            if d.norm() > 1e-12 {
                *r -= eval(*r) / d;
            }
        }
        let residual = eval(*r).norm();
        if residual > tol * (1.0 + r.norm()).powi(deg as i32) {
            return Err(GraphError::RootFinding(format!(
                "root {r} has residual {residual} beyond tolerance"
            )));
        }
    }
    Ok(w)
}

/// Report of the log-derivative comparison: the geometric series
/// -Σ_{γ₀} l_{γ₀} Σ_{k≥1} T^{k·l_{γ₀}-1} against Z'(T)/Z(T) expanded
/// exactly, coefficientwise to degree `max_len - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDerivReport {
    pub degree_checked: usize,
    pub first_mismatch: Option<(usize, BigInt, BigInt)>,
}

impl LogDerivReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl std::fmt::Display for LogDerivReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "PASS (exact agreement to degree {})", self.degree_checked),
            Some((k, lhs, rhs)) => write!(
                f,
                "FAIL at degree {k}: geometric side {lhs} vs Z'/Z coefficient {rhs}"
            ),
        }
    }
}

pub fn log_derivative_check(g: &Graph, max_len: usize) -> Result<LogDerivReport, GraphError> {
    assert!(max_len >= 2);
    let deg = max_len - 1;
    // geometric side: coefficient of T^j is -Σ_{d | j+1} d·P_d
    let cycles = enumerate_primitive_cycles(g, max_len);
    let mut geo = vec![BigInt::zero(); deg + 1];
    for (j, slot) in geo.iter_mut().enumerate() {
        let m = j + 1;
        let mut acc = BigInt::zero();
        for d in 1..=m {
            if m % d == 0 {
                let count = cycles.iter().filter(|c| c.length() == d).count();
                acc += BigInt::from(d) * BigInt::from(count);
            }
        }
        *slot = -acc;
    }
    // spectral side: Z'(T)/Z(T) as an exact integer series
    let z = zeta_polynomial(g);
    let zser = z.truncate(deg);
    let inv = zser.inverse()?;
    let dser = z.derivative().truncate(deg);
    let ratio = dser.mul(&inv);
    let first_mismatch = (0..=deg).find_map(|k| {
        let lhs = geo[k].clone();
        let rhs = ratio.coeff(k);
        (lhs != rhs).then_some((k, lhs, rhs))
    });
    Ok(LogDerivReport { degree_checked: deg, first_mismatch })
}

/// Seeded generator of random simple connected graphs with minimum degree
/// 2 on up to `max_vertices` vertices; part of the oracle-agreement
/// corpus.
pub fn random_min_degree_two_graph(seed: u64, max_vertices: usize) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n = rng.gen_range(4..=max_vertices);
        let extra = rng.gen_range(0..=4usize);
        let target_edges = (n + extra).min(n * (n - 1) / 2);
        let mut edges: std::collections::BTreeSet<(usize, usize)> = BTreeSet::new();
        // random Hamiltonian-ish cycle scaffold guarantees degree ≥ 2
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            order.swap(i, j);
        }
        for i in 0..n {
            let (a, b) = (order[i], order[(i + 1) % n]);
            edges.insert((a.min(b), a.max(b)));
        }
        let mut guard = 0;
        while edges.len() < target_edges && guard < 200 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
            guard += 1;
        }
        if let Ok(g) = Graph::new(n, edges.into_iter().collect()) {
            return g;
        }
    }
}

use std::collections::BTreeSet;

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn euler_series_triangle() {
        let s = euler_product_series(&Graph::cycle(3), 6);
        assert_eq!(s.coeffs(), poly(&[1, 0, 0, -2, 0, 0, 1]).coeffs());
    }

    #[test]
    fn euler_series_trivial_cases() {
        let s = euler_product_series(&Graph::cycle(5), 4);
        assert_eq!(s, TruncatedSeries::one(4));
        let s = euler_product_series(&Graph::complete(4), 1);
        assert_eq!(s, TruncatedSeries::one(1));
    }

    #[test]
    fn zeta_polynomial_of_cycles_is_one_minus_tn_squared() {
        for n in 3..=6 {
            let z = zeta_polynomial(&Graph::cycle(n));
            // block-permutation oracle: (1 - T^n)^2
            let mut expect = vec![0i64; 2 * n + 1];
            expect[0] = 1;
            expect[n] = -2;
            expect[2 * n] = 1;
            assert_eq!(z, poly(&expect), "C_{n}");
        }
    }

    #[test]
    fn zeta_degree_is_twice_edge_count() {
        for g in [
            Graph::cycle(3),
            Graph::complete(4),
            Graph::complete_bipartite(3, 3),
            Graph::petersen(),
        ] {
            assert_eq!(zeta_polynomial(&g).degree(), 2 * g.n_edges());
        }
    }

    #[test]
    fn bass_oracle_agrees_on_small_graphs() {
        for g in [Graph::cycle(3), Graph::complete(4)] {
            assert_eq!(zeta_polynomial(&g), bass_polynomial(&g));
        }
    }

    #[test]
    fn rationality_triangle_and_petersen() {
        assert!(rationality_report(&Graph::cycle(3), 6).pass());
        assert!(rationality_report(&Graph::petersen(), 12).pass());
    }

    #[test]
    fn rationality_detects_corruption() {
        // drop one 3-cycle: multiply the honest product by (1-T^3)^{-1}
        let g = Graph::cycle(3);
        let mut corrupted = TruncatedSeries::one(6);
        corrupted.mul_one_minus_power(3); // only one orientation kept
        let det = zeta_polynomial(&g).truncate(6);
        let report = compare_series(&corrupted, &det, 6);
        assert!(!report.pass());
        assert_eq!(report.first_mismatch.as_ref().unwrap().0, 3);
    }

    #[test]
    fn cycle_count_identity_examples() {
        let (lhs, rhs) = cycle_count_identity(&Graph::cycle(3), 3);
        assert_eq!(lhs, BigInt::from(6));
        assert_eq!(rhs, BigInt::from(6));
        let (lhs, rhs) = cycle_count_identity(&Graph::complete(4), 3);
        assert_eq!(lhs, BigInt::from(24));
        assert_eq!(rhs, BigInt::from(24));
        let (lhs, rhs) = cycle_count_identity(&Graph::petersen(), 1);
        assert_eq!(lhs, BigInt::zero());
        assert_eq!(rhs, BigInt::zero());
    }

    #[test]
    fn divisor_of_triangle() {
        let div = divisor(&Graph::cycle(3), 1e-10).unwrap();
        assert_eq!(div.len(), 3); // cube roots of unity
        for (r, m) in &div {
            assert_eq!(*m, 2);
            assert!((r.norm() - 1.0).abs() < 1e-10);
            assert!((r.powu(3) - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn unit_root_present_for_every_corpus_graph() {
        for g in [Graph::cycle(4), Graph::complete(4), Graph::petersen()] {
            let z = zeta_polynomial(&g);
            assert_eq!(z.eval_bigint(&BigInt::one()), BigInt::zero(), "det(I-B) = 0");
        }
    }

    #[test]
    fn log_derivative_triangle_head() {
        let rep = log_derivative_check(&Graph::cycle(3), 6).unwrap();
        assert!(rep.pass(), "{rep}");
        // coefficient of T² in Z'/Z is -6
        let z = zeta_polynomial(&Graph::cycle(3));
        let ratio = z.derivative().truncate(4).mul(&z.truncate(4).inverse().unwrap());
        assert_eq!(ratio.coeff(2), BigInt::from(-6));
        assert_eq!(ratio.coeff(3), BigInt::zero());
    }

    #[test]
    fn log_derivative_k4() {
        let rep = log_derivative_check(&Graph::complete(4), 8).unwrap();
        assert!(rep.pass(), "{rep}");
    }

    #[test]
    fn random_graphs_satisfy_contracts() {
        for seed in 0..5 {
            let g = random_min_degree_two_graph(seed, 8);
            assert!(g.n_vertices() <= 8);
            assert!((0..g.n_vertices()).all(|v| g.degree(v) >= 2));
            assert_eq!(zeta_polynomial(&g), bass_polynomial(&g), "seed {seed}");
        }
    }
}
