//! The property suites behind `zetalab verify`: each function runs one
//! acceptance-grade check with its tolerances pinned in code and reports
//! pass/fail with a short detail line. `run_all` aggregates every suite.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphzeta::{
    bass_polynomial, cycle_count_identity, divisor, log_derivative_check,
    random_min_degree_two_graph, rationality_report, zeta_polynomial, Graph,
};
use crate::regprod::{det_prime, log_gamma, mellin_m, regularized_det, EigenSequence, ZetaConfig};
use crate::selberg::{
    convergence_abscissa, exterior_det_residual, log_selberg, ruelle_decomposition_residual,
    EvalConfig,
};
use crate::spectra::{spectrum_from_json, spectrum_to_json, synth_spectrum, SynthKind, SynthParams};
use crate::tfverify::{
    verify_trace_formula, FiniteGroupModel, SubgroupEmbedding, TestFunction, UnitaryRepOmega,
};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl SuiteResult {
    fn pass(name: &'static str, detail: String) -> Self {
        SuiteResult { name, pass: true, detail }
    }
    fn fail(name: &'static str, detail: String) -> Self {
        SuiteResult { name, pass: false, detail }
    }
}

fn corpus_named() -> Vec<(&'static str, Graph)> {
    vec![
        ("C3", Graph::cycle(3)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("K33", Graph::complete_bipartite(3, 3)),
        ("Petersen", Graph::petersen()),
    ]
}

fn corpus_full(seed: u64) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = corpus_named()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    for k in 0..20u64 {
        out.push((format!("random{k}"), random_min_degree_two_graph(seed.wrapping_add(k), 8)));
    }
    out
}

/// Criterion 1: det(a_n = n+κ) vs √(2π)/Γ(κ) from the independent
/// Euler–Maclaurin/Stirling oracle, κ ∈ {0.5, 1, 1.5, 2, 3}, within 1e-8.
pub fn criterion_lerch_determinant() -> SuiteResult {
    const NAME: &str = "lerch-determinant";
    let cfg = ZetaConfig::default();
    let sqrt_two_pi = (2.0 * std::f64::consts::PI).sqrt();
    let mut worst = 0.0f64;
    for kappa in [0.5, 1.0, 1.5, 2.0, 3.0] {
        let seq = match EigenSequence::shifted_linear(kappa) {
            Ok(s) => s,
            Err(e) => return SuiteResult::fail(NAME, e.to_string()),
        };
        let det = match regularized_det(&seq, 0.0, &cfg) {
            Ok(d) => d.value,
            Err(e) => return SuiteResult::fail(NAME, e.to_string()),
        };
        let target = sqrt_two_pi / log_gamma(kappa).expect("kappa > 0").exp();
        let err = (det - target).abs();
        worst = worst.max(err);
        if err > 1e-8 {
            return SuiteResult::fail(
                NAME,
                format!("kappa={kappa}: |{det} - {target}| = {err:.3e} > 1e-8"),
            );
        }
    }
    SuiteResult::pass(NAME, format!("5 kappa values, worst error {worst:.3e}"))
}

/// Criterion 2: 50 random finite lists (size ≤ 12, values in [0.1, 10]):
/// the determinant equals the plain product within 1e-12 relative, zeros
/// are flagged at λ = -a_j and carry the right multiplicity.
pub fn criterion_finite_reduction(seed: u64) -> SuiteResult {
    const NAME: &str = "finite-reduction";
    let cfg = ZetaConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xf17e);
    let mut worst = 0.0f64;
    for trial in 0..50 {
        let n = rng.gen_range(1..=12usize);
        let mut vals: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..10.0)).collect();
        if n >= 2 && rng.gen_bool(0.4) {
            vals[1] = vals[0]; // force a multiplicity-2 eigenvalue
        }
        let seq = EigenSequence::finite(vals.clone()).expect("positive values");
        let lambda = rng.gen_range(-0.05..2.0);
        let det = regularized_det(&seq, lambda, &cfg).expect("finite det");
        let product: f64 = {
            let mut sorted = vals.clone();
            sorted.sort_by(f64::total_cmp);
            sorted.iter().map(|a| a + lambda).product()
        };
        let rel = (det.value - product).abs() / product.abs().max(f64::MIN_POSITIVE);
        worst = worst.max(rel);
        if rel > 1e-12 {
            return SuiteResult::fail(NAME, format!("trial {trial}: relative error {rel:.3e}"));
        }
        // zero detection with multiplicity via log-log slope
        let a0 = vals[rng.gen_range(0..vals.len())];
        let mult = vals.iter().filter(|&&v| v == a0).count();
        let at_zero = regularized_det(&seq, -a0, &cfg).expect("finite det");
        if !at_zero.exact_zero || at_zero.value != 0.0 {
            return SuiteResult::fail(NAME, format!("trial {trial}: zero at -{a0} not flagged"));
        }
        let h = 1e-4;
        let f1 = regularized_det(&seq, -a0 + h, &cfg).unwrap().value.abs();
        let f2 = regularized_det(&seq, -a0 + 2.0 * h, &cfg).unwrap().value.abs();
        let slope = (f2 / f1).ln() / 2.0f64.ln();
        if (slope - mult as f64).abs() > 0.05 {
            return SuiteResult::fail(
                NAME,
                format!("trial {trial}: zero order {slope:.3}, expected {mult}"),
            );
        }
        // det' drops exact zeros
        let mut with_zero = vals.clone();
        with_zero.push(0.0);
        let dp = det_prime(&with_zero, &cfg).expect("det prime");
        let nz: f64 = vals.iter().product();
        if (dp.value - nz).abs() / nz > 1e-12 {
            return SuiteResult::fail(NAME, format!("trial {trial}: det' mismatch"));
        }
    }
    SuiteResult::pass(NAME, format!("50 trials, worst relative error {worst:.3e}"))
}

/// Criterion 3: exact rationality of the Euler product against
/// det(I - T·B) to degree 16 on the named corpus.
pub fn criterion_graph_rationality() -> SuiteResult {
    const NAME: &str = "graph-rationality";
    for (name, g) in corpus_named() {
        let report = rationality_report(&g, 16);
        if !report.pass() {
            return SuiteResult::fail(NAME, format!("{name}: {report}"));
        }
    }
    SuiteResult::pass(NAME, "5 graphs, exact to degree 16".into())
}

/// Criterion 4: zeta_polynomial == bass_polynomial exactly on 20 random
/// connected min-degree-2 graphs with ≤ 8 vertices.
pub fn criterion_oracle_agreement(seed: u64) -> SuiteResult {
    const NAME: &str = "oracle-agreement";
    for k in 0..20u64 {
        let g = random_min_degree_two_graph(seed.wrapping_add(k), 8);
        if zeta_polynomial(&g) != bass_polynomial(&g) {
            return SuiteResult::fail(
                NAME,
                format!("graph seed {k}: Hashimoto and Bass polynomials differ"),
            );
        }
    }
    SuiteResult::pass(NAME, "20 random graphs, coefficientwise equal".into())
}

/// Criterion 5: Σ_{d|m} d·P_d = tr(B^m) for m ≤ 12 and the exact
/// log-derivative identity to degree 12, on the full corpus.
pub fn criterion_cycle_counts(seed: u64) -> SuiteResult {
    const NAME: &str = "cycle-count-log-derivative";
    let corpus = corpus_full(seed);
    for (name, g) in &corpus {
        for m in 1..=12 {
            let (lhs, rhs) = cycle_count_identity(g, m);
            if lhs != rhs {
                return SuiteResult::fail(NAME, format!("{name}, m={m}: {lhs} != {rhs}"));
            }
        }
        match log_derivative_check(g, 13) {
            Ok(rep) if rep.pass() => {}
            Ok(rep) => return SuiteResult::fail(NAME, format!("{name}: {rep}")),
            Err(e) => return SuiteResult::fail(NAME, format!("{name}: {e}")),
        }
    }
    SuiteResult::pass(NAME, format!("{} graphs, m ≤ 12 exact", corpus.len()))
}

/// Criterion 6: divisor multiplicities sum to 2|E| and every reported
/// root r has |Z(r)| ≤ 1e-8·(1+|r|)^{2|E|}.
pub fn criterion_divisor(seed: u64) -> SuiteResult {
    const NAME: &str = "divisor";
    let corpus = corpus_full(seed);
    for (name, g) in &corpus {
        let z = zeta_polynomial(g);
        let div = match divisor(g, 1e-8) {
            Ok(d) => d,
            Err(e) => return SuiteResult::fail(NAME, format!("{name}: {e}")),
        };
        let total: usize = div.iter().map(|(_, m)| m).sum();
        if total != 2 * g.n_edges() {
            return SuiteResult::fail(
                NAME,
                format!("{name}: multiplicities sum to {total}, expected {}", 2 * g.n_edges()),
            );
        }
        for (r, _) in &div {
            let val = z.eval_complex(*r).norm();
            let allowed = 1e-8 * (1.0 + r.norm()).powi(2 * g.n_edges() as i32);
            if val > allowed {
                return SuiteResult::fail(
                    NAME,
                    format!("{name}: |Z({r})| = {val:.3e} > {allowed:.3e}"),
                );
            }
        }
    }
    SuiteResult::pass(NAME, format!("{} graphs, divisors complete and accurate", corpus.len()))
}

/// Criterion 7: Ruelle decomposition residual ≤ 1e-9 on 5 synthetic
/// spectra at 10 points each with Re(s) ≥ abscissa + 1.
pub fn criterion_ruelle_decomposition(seed: u64) -> SuiteResult {
    const NAME: &str = "ruelle-decomposition";
    let cfg = EvalConfig { tol: 1e-11, ..Default::default() };
    let mut worst = 0.0f64;
    for k in 0..5u64 {
        let params = SynthParams {
            n_classes: 4 + (k as usize % 3) * 3, // 4, 7, 10
            d1: 1 + (k as usize % 2),
            d2: k as usize % 2,
            dim_omega: 1 + (k as usize % 2),
            length_base: 1.0,
            alpha_norm: 0.8,
        };
        let spec = match synth_spectrum(SynthKind::Random, &params, seed.wrapping_add(k)) {
            Ok(s) => s,
            Err(e) => return SuiteResult::fail(NAME, e.to_string()),
        };
        let base = convergence_abscissa(&spec) + 1.0;
        for j in 0..10 {
            let im = if j % 3 == 0 { 0.0 } else { 0.7 * j as f64 - 2.0 };
            let s = Complex64::new(base + 0.4 * j as f64, im);
            match ruelle_decomposition_residual(&spec, s, &cfg) {
                Ok(r) => {
                    worst = worst.max(r);
                    if r > 1e-9 {
                        return SuiteResult::fail(
                            NAME,
                            format!("spectrum {k}, s = {s}: residual {r:.3e} > 1e-9"),
                        );
                    }
                }
                Err(e) => return SuiteResult::fail(NAME, format!("spectrum {k}, s = {s}: {e}")),
            }
        }
    }
    SuiteResult::pass(NAME, format!("5 spectra x 10 points, worst residual {worst:.3e}"))
}

/// Criterion 8: exterior-power identity residual ≤ 1e-12 on 200 random
/// eigenvalue lists of size ≤ 8 in the closed unit disk.
pub fn criterion_exterior_identity(seed: u64) -> SuiteResult {
    const NAME: &str = "exterior-identity";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe77);
    let mut worst = 0.0f64;
    for trial in 0..200 {
        let n = rng.gen_range(0..=8usize);
        let eigs: Vec<Complex64> = (0..n)
            .map(|_| {
                Complex64::from_polar(rng.gen::<f64>(), rng.gen_range(0.0..std::f64::consts::TAU))
            })
            .collect();
        let r = exterior_det_residual(&eigs);
        worst = worst.max(r);
        if r > 1e-12 {
            return SuiteResult::fail(NAME, format!("trial {trial}: residual {r:.3e}"));
        }
    }
    SuiteResult::pass(NAME, format!("200 lists, worst residual {worst:.3e}"))
}

/// Criterion 9: over 100 random (spectrum, s) trials, doubling the power
/// caps moves log_selberg by less than the tail bound reported at the
/// smaller caps.
pub fn criterion_tail_bound_soundness(seed: u64) -> SuiteResult {
    const NAME: &str = "tail-bound-soundness";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7a11);
    for trial in 0..100 {
        let params = SynthParams {
            n_classes: rng.gen_range(1..=6),
            d1: rng.gen_range(0..=2),
            d2: rng.gen_range(0..=1),
            dim_omega: rng.gen_range(1..=2),
            length_base: rng.gen_range(0.6..2.0),
            alpha_norm: rng.gen_range(0.5..1.5),
        };
        let spec = synth_spectrum(SynthKind::Random, &params, rng.gen()).expect("valid params");
        let q = rng.gen_range(0..=params.d1);
        let p = rng.gen_range(0..=params.d2);
        let s = Complex64::new(
            convergence_abscissa(&spec) + rng.gen_range(0.3..2.5),
            rng.gen_range(-2.0..2.0),
        );
        let m_cap = rng.gen_range(2..=8u32);
        let small = EvalConfig { tol: 1.0, m_cap: Some(m_cap), n_cap: Some(m_cap) };
        let big = EvalConfig { tol: 1.0, m_cap: Some(2 * m_cap), n_cap: Some(2 * m_cap) };
        let a = match log_selberg(&spec, q, p, s, &small) {
            Ok(v) => v,
            Err(e) => return SuiteResult::fail(NAME, format!("trial {trial}: {e}")),
        };
        let b = match log_selberg(&spec, q, p, s, &big) {
            Ok(v) => v,
            Err(e) => return SuiteResult::fail(NAME, format!("trial {trial}: {e}")),
        };
        let moved = (a.value - b.value).norm();
        if moved >= a.tail_bound {
            return SuiteResult::fail(
                NAME,
                format!("trial {trial}: moved {moved:.3e} >= bound {:.3e}", a.tail_bound),
            );
        }
    }
    SuiteResult::pass(NAME, "100 trials, every move inside the reported bound".into())
}

fn tf_corpus() -> Vec<(String, FiniteGroupModel)> {
    let mut out = Vec::new();
    for n in 1..=24 {
        out.push((format!("C{n}"), FiniteGroupModel::cyclic(n)));
    }
    for n in 1..=12 {
        out.push((format!("D{n}"), FiniteGroupModel::dihedral(n)));
    }
    for n in 2..=4 {
        out.push((format!("S{n}"), FiniteGroupModel::symmetric(n)));
    }
    out
}

/// Criterion 10: trace formula residual ≤ 1e-10 for every subgroup of
/// every corpus group (order ≤ 24), over trivial, sign, and one 2-dim ω
/// where available, 50 random test functions each.
pub fn criterion_trace_formula(seed: u64) -> SuiteResult {
    const NAME: &str = "trace-formula";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7f);
    let mut pairs = 0usize;
    let mut evals = 0usize;
    let mut worst = 0.0f64;
    for (gname, g) in tf_corpus() {
        for elements in g.subgroups() {
            let sub = match SubgroupEmbedding::new(&g, elements) {
                Ok(s) => s,
                Err(e) => return SuiteResult::fail(NAME, format!("{gname}: {e}")),
            };
            pairs += 1;
            let mut omegas = vec![UnitaryRepOmega::trivial(&sub)];
            let mut signs = UnitaryRepOmega::sign_characters(&g, &sub);
            if !signs.is_empty() {
                omegas.push(signs.remove(0));
            }
            if let Some(two) = UnitaryRepOmega::two_dimensional(&g, &sub) {
                omegas.push(two);
            }
            for omega in &omegas {
                if let Err(e) = omega.validate(&g, &sub, 1e-12) {
                    return SuiteResult::fail(
                        NAME,
                        format!("{gname}, order {}: {e}", sub.elements.len()),
                    );
                }
                for trial in 0..50 {
                    let f = TestFunction::random(&g, &mut rng);
                    let r = verify_trace_formula(&g, &sub, omega, &f);
                    evals += 1;
                    worst = worst.max(r);
                    if r > 1e-10 {
                        return SuiteResult::fail(
                            NAME,
                            format!(
                                "{gname}, subgroup order {}, omega {}, trial {trial}: residual {r:.3e}",
                                sub.elements.len(),
                                omega.label
                            ),
                        );
                    }
                }
            }
        }
    }
    SuiteResult::pass(
        NAME,
        format!("{pairs} subgroup embeddings, {evals} evaluations, worst residual {worst:.3e}"),
    )
}

/// Spectrum file round-trip and single-field mutation detection.
pub fn suite_spectra_files(seed: u64) -> SuiteResult {
    const NAME: &str = "spectra-files";
    let params = SynthParams { n_classes: 4, d1: 2, d2: 1, dim_omega: 2, ..Default::default() };
    let spec = match synth_spectrum(SynthKind::Random, &params, seed) {
        Ok(s) => s,
        Err(e) => return SuiteResult::fail(NAME, e.to_string()),
    };
    let round = match spectrum_from_json(&spectrum_to_json(&spec)) {
        Ok(s) => s,
        Err(e) => return SuiteResult::fail(NAME, format!("round-trip parse: {e}")),
    };
    if round != spec {
        return SuiteResult::fail(NAME, "round-trip changed the spectrum".into());
    }
    type Mutation = (&'static str, Box<dyn Fn(&mut crate::spectra::LengthSpectrum)>);
    let mutations: Vec<Mutation> = vec![
        ("negative alpha_norm", Box::new(|s| s.alpha_norm = -1.0)),
        ("zero length", Box::new(|s| s.classes[0].length = 0.0)),
        ("duplicate id", Box::new(|s| s.classes[1].id = s.classes[0].id.clone())),
        ("bad modulus", Box::new(|s| s.classes[0].omega_eigs[0] *= 1.0001)),
        (
            "grade-1 count",
            Box::new(|s| {
                s.classes[0].phases_grade1.pop();
            }),
        ),
        (
            "conjugation closure",
            Box::new(|s| {
                s.classes[0].phases_grade1[0] = Complex64::from_polar(1.0, 0.3);
                s.classes[0].phases_grade1[1] = Complex64::from_polar(1.0, 1.1);
            }),
        ),
    ];
    for (what, mutate) in mutations {
        let mut m = spec.clone();
        mutate(&mut m);
        if m.validate().is_ok() {
            return SuiteResult::fail(NAME, format!("mutation not caught: {what}"));
        }
    }
    SuiteResult::pass(NAME, "round-trip exact, 6 mutations caught".into())
}

/// Mellin residue structure: Laurent fit of M(z,λ) at four poles of the
/// shifted-linear sequence against the λ-combined heat coefficients from
/// an independent Bernoulli-polynomial table.
pub fn suite_mellin_residues() -> SuiteResult {
    const NAME: &str = "mellin-residues";
    let kappa = 0.9;
    let lambda: f64 = 0.7;
    let seq = EigenSequence::shifted_linear(kappa).expect("kappa > 0");
    let cfg = ZetaConfig::default();
    // independent route: B_k(x) = sum C(k,i) B_i x^{k-i};
    // heat coefficients c_k = B_k(1-kappa)/k! at exponent k-1
    let bern = [1.0, -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0];
    let binom =
        |n: usize, k: usize| -> f64 { (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64) };
    let x = 1.0 - kappa;
    let c = |k: usize| -> f64 {
        let bk: f64 = (0..=k).map(|i| binom(k, i) * bern[i] * x.powi((k - i) as i32)).sum();
        let kfact: f64 = (1..=k).map(|i| i as f64).product::<f64>().max(1.0);
        bk / kfact
    };
    let fact = |n: usize| -> f64 { (1..=n).map(|i| i as f64).product::<f64>().max(1.0) };
    // expected residue at s = -beta: sum over k-1+n = beta of c_k (-lambda)^n / n!
    let expected = |beta: i64| -> f64 {
        let mut acc = 0.0;
        for k in 0..=6usize {
            let n = beta - (k as i64 - 1);
            if n >= 0 {
                let n = n as usize;
                acc += c(k) * (-lambda).powi(n as i32) / fact(n);
            }
        }
        acc
    };
    let mut worst = 0.0f64;
    for beta in [-1i64, 0, 1, 2] {
        let s0 = -beta as f64;
        // Richardson-extrapolated odd-part fit: a(d) = d(M(s0+d)-M(s0-d))/2
        let fit = |delta: f64| -> f64 {
            let mp = mellin_m(&seq, Complex64::new(s0 + delta, 0.0), lambda, &cfg)
                .expect("off-pole")
                .value;
            let mm = mellin_m(&seq, Complex64::new(s0 - delta, 0.0), lambda, &cfg)
                .expect("off-pole")
                .value;
            (delta * (mp - mm) / 2.0).re
        };
        let a1 = fit(1e-2);
        let a2 = fit(5e-3);
        let residue = (4.0 * a2 - a1) / 3.0;
        let want = expected(beta);
        let err = (residue - want).abs();
        worst = worst.max(err);
        if err > 1e-8 {
            return SuiteResult::fail(
                NAME,
                format!("pole s = {s0}: fitted residue {residue} vs {want}, err {err:.3e}"),
            );
        }
    }
    SuiteResult::pass(NAME, format!("4 poles, worst residue error {worst:.3e}"))
}

/// Every suite, in acceptance order followed by the extra module suites.
pub fn run_all(seed: u64) -> Vec<SuiteResult> {
    vec![
        criterion_lerch_determinant(),
        criterion_finite_reduction(seed),
        criterion_graph_rationality(),
        criterion_oracle_agreement(seed),
        criterion_cycle_counts(seed),
        criterion_divisor(seed),
        criterion_ruelle_decomposition(seed),
        criterion_exterior_identity(seed),
        criterion_tail_bound_soundness(seed),
        criterion_trace_formula(seed),
        suite_spectra_files(seed),
        suite_mellin_residues(),
    ]
}
