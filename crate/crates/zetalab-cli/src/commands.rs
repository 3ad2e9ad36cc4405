//! Subcommand implementations.

use std::process::ExitCode;

use num_complex::Complex64;
use zetalab_core::graphzeta::{
    bass_polynomial, divisor_of_polynomial, rationality_report, zeta_polynomial, Graph,
    IntPolynomial,
};
use zetalab_core::regprod::{det_prime, regularized_det, EigenSequence, ZetaConfig};
use zetalab_core::selberg::{
    convergence_abscissa, log_ruelle, log_selberg, ruelle_decomposition_residual, EvalConfig,
};
use zetalab_core::spectra::{load_spectrum, save_spectrum, synth_spectrum, SynthKind, SynthParams};
use zetalab_core::tfverify::{
    verify_trace_formula, FiniteGroupModel, SubgroupEmbedding, TestFunction, UnitaryRepOmega,
};
use zetalab_core::verify::run_all;

use crate::output::{emit, fail_verification, ok, Cell, Table};
use crate::{
    parse_complex, parse_grid, Cli, DecompArgs, Format, GraphZetaArgs, Oracle, RegdetArgs,
    RuelleArgs, SelbergArgs, SynthArgs, TfVerifyArgs,
};

/// Command failure with the exit-code class it maps to.
#[derive(Debug)]
pub struct CmdError {
    message: String,
    code: u8,
}

impl CmdError {
    /// Input/validation problems: exit code 3.
    pub fn input(message: String) -> Self {
        CmdError { message, code: 3 }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code)
    }
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn input_err(e: impl std::fmt::Display) -> CmdError {
    CmdError::input(e.to_string())
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.render_csv(),
        Format::Json => table.render_json(),
    }
}

fn build_sequence(args: &RegdetArgs) -> Result<EigenSequence, CmdError> {
    if let Some(path) = &args.eigs {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CmdError::input(format!("cannot read {}: {e}", path.display())))?;
        let mut vals = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            vals.push(line.parse::<f64>().map_err(|_| {
                CmdError::input(format!("{}:{}: not a number: '{line}'", path.display(), i + 1))
            })?);
        }
        return EigenSequence::finite(vals).map_err(input_err);
    }
    if let Some(kappa) = args.kappa {
        return EigenSequence::shifted_linear(kappa).map_err(input_err);
    }
    if let Some(poly) = &args.poly {
        let coeffs: Result<Vec<f64>, _> = poly.split(',').map(|t| t.trim().parse::<f64>()).collect();
        let coeffs =
            coeffs.map_err(|_| CmdError::input(format!("cannot parse --poly '{poly}'")))?;
        return EigenSequence::polynomial(coeffs, args.offset.unwrap_or(0)).map_err(input_err);
    }
    Err(CmdError::input(
        "one of --eigs, --kappa, or --poly is required".into(),
    ))
}

pub fn regdet(args: &RegdetArgs, cli: &Cli) -> Result<ExitCode, CmdError> {
    let cfg = ZetaConfig { tol: cli.tol, ..Default::default() };
    let det = if args.prime {
        let path = args
            .eigs
            .as_ref()
            .ok_or_else(|| CmdError::input("--prime needs --eigs (finite list with zeros)".into()))?;
        let text = std::fs::read_to_string(path)
            .map_err(|e| CmdError::input(format!("cannot read {}: {e}", path.display())))?;
        let vals: Result<Vec<f64>, _> =
            text.split_whitespace().map(|t| t.parse::<f64>()).collect();
        let vals = vals.map_err(|_| CmdError::input("non-numeric entry in --eigs file".into()))?;
        det_prime(&vals, &cfg).map_err(input_err)?
    } else {
        let seq = build_sequence(args)?;
        regularized_det(&seq, args.lambda, &cfg).map_err(input_err)?
    };
    let mut table = Table::new(vec!["value", "exact_zero", "empty"]);
    table.push(vec![
        Cell::Float(det.value),
        Cell::Int(det.exact_zero as i64),
        Cell::Int(det.empty as i64),
    ]);
    emit(cli.out.as_deref(), &render(&table, cli.format))?;
    Ok(ok())
}

fn spectrum_points(
    s: &Option<String>,
    grid: &Option<String>,
    im: f64,
) -> Result<Vec<Complex64>, CmdError> {
    match (s, grid) {
        (Some(text), _) => Ok(vec![parse_complex(text)?]),
        (None, Some(g)) => parse_grid(g, im),
        (None, None) => Err(CmdError::input("one of --s or --grid is required".into())),
    }
}

pub fn selberg(args: &SelbergArgs, cli: &Cli) -> Result<ExitCode, CmdError> {
    let spec = load_spectrum(&args.spectrum).map_err(input_err)?;
    let cfg = EvalConfig { tol: cli.tol, ..Default::default() };
    let points = spectrum_points(&args.s, &args.grid, args.im)?;
    let mut table = Table::new(vec!["s_re", "s_im", "logZ_re", "logZ_im", "tail_bound"]);
    for s in points {
        let lz = log_selberg(&spec, args.q, args.p, s, &cfg).map_err(input_err)?;
        table.push(vec![
            Cell::Float(s.re),
            Cell::Float(s.im),
            Cell::Float(lz.value.re),
            Cell::Float(lz.value.im),
            Cell::Float(lz.tail_bound),
        ]);
    }
    emit(cli.out.as_deref(), &render(&table, cli.format))?;
    Ok(ok())
}

pub fn ruelle(args: &RuelleArgs, cli: &Cli) -> Result<ExitCode, CmdError> {
    let spec = load_spectrum(&args.spectrum).map_err(input_err)?;
    let cfg = EvalConfig { tol: cli.tol, ..Default::default() };
    let points = spectrum_points(&args.s, &args.grid, args.im)?;
    let mut table = Table::new(vec!["s_re", "s_im", "logZ_re", "logZ_im", "tail_bound"]);
    for s in points {
        let lz = log_ruelle(&spec, s, &cfg).map_err(input_err)?;
        table.push(vec![
            Cell::Float(s.re),
            Cell::Float(s.im),
            Cell::Float(lz.value.re),
            Cell::Float(lz.value.im),
            Cell::Float(lz.tail_bound),
        ]);
    }
    emit(cli.out.as_deref(), &render(&table, cli.format))?;
    Ok(ok())
}

fn coeff_list_json(p: &IntPolynomial) -> String {
    let inner: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

pub fn graph_zeta(args: &GraphZetaArgs, cli: &Cli) -> Result<ExitCode, CmdError> {
    let text = std::fs::read_to_string(&args.graph)
        .map_err(|e| CmdError::input(format!("cannot read {}: {e}", args.graph.display())))?;
    let g = Graph::parse(&text).map_err(input_err)?;
    let zeta = zeta_polynomial(&g);
    let mut verification_failed = false;
    let mut out = String::new();

    match args.oracle {
        Oracle::Hashimoto => {
            out.push_str(&coeff_list_json(&zeta));
            out.push('\n');
        }
        Oracle::Bass => {
            out.push_str(&coeff_list_json(&bass_polynomial(&g)));
            out.push('\n');
        }
        Oracle::Both => {
            let bass = bass_polynomial(&g);
            out.push_str(&coeff_list_json(&zeta));
            out.push('\n');
            if bass == zeta {
                out.push_str("oracles: AGREE\n");
            } else {
                out.push_str(&format!("oracles: DISAGREE bass={}\n", coeff_list_json(&bass)));
                verification_failed = true;
            }
        }
    }

    if let Some(max_len) = args.max_len {
        let report = rationality_report(&g, max_len);
        out.push_str(&format!("euler-product: {report}\n"));
        if !report.pass() {
            verification_failed = true;
        }
    }

    if args.divisor {
        let div = divisor_of_polynomial(&zeta, cli.tol.max(1e-12)).map_err(input_err)?;
        let mut table = Table::new(vec!["root_re", "root_im", "multiplicity", "abs_residual"]);
        for (r, m) in div {
            table.push(vec![
                Cell::Float(r.re),
                Cell::Float(r.im),
                Cell::Int(m as i64),
                Cell::Float(zeta.eval_complex(r).norm()),
            ]);
        }
        out.push_str(&render(&table, cli.format));
    }

    emit(cli.out.as_deref(), &out)?;
    Ok(if verification_failed { fail_verification() } else { ok() })
}

fn build_group(spec: &str) -> Result<FiniteGroupModel, CmdError> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CmdError::input(format!("cannot read {path}: {e}")))?;
        let rows: Vec<Vec<usize>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(|t| t.parse::<usize>()).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()
            .map_err(|_| CmdError::input("multiplication table must be whitespace-separated integers".into()))?;
        return FiniteGroupModel::from_table(rows).map_err(input_err);
    }
    let lower = spec.to_ascii_lowercase();
    let (kind, n) = lower.split_at(1);
    let n: usize = n
        .parse()
        .map_err(|_| CmdError::input(format!("cannot parse group '{spec}' (want cN, dN, sN, or file:PATH)")))?;
    match kind {
        "c" if n >= 1 => Ok(FiniteGroupModel::cyclic(n)),
        "d" if n >= 1 => Ok(FiniteGroupModel::dihedral(n)),
        "s" if (1..=4).contains(&n) => Ok(FiniteGroupModel::symmetric(n)),
        _ => Err(CmdError::input(format!("unsupported group '{spec}'"))),
    }
}

/// Permutation cycles "(1 2 3)(4 5)" in 1-based notation, for sN groups.
fn parse_perm_cycles(text: &str, n: usize) -> Result<Vec<usize>, CmdError> {
    let mut perm: Vec<usize> = (0..n).collect();
    let body = text.trim();
    let bad = || CmdError::input(format!("cannot parse permutation '{text}'"));
    let mut rest = body;
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(bad)?;
        let close = rest[open..].find(')').ok_or_else(bad)? + open;
        let cycle: Result<Vec<usize>, _> = rest[open + 1..close]
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect();
        let cycle = cycle.map_err(|_| bad())?;
        if cycle.iter().any(|&x| x == 0 || x > n) {
            return Err(CmdError::input(format!(
                "permutation entry out of range 1..={n} in '{text}'"
            )));
        }
        for w in cycle.windows(2) {
            perm[w[0] - 1] = w[1] - 1;
        }
        if cycle.len() > 1 {
            perm[cycle[cycle.len() - 1] - 1] = cycle[0] - 1;
        }
        rest = rest[close + 1..].trim();
    }
    Ok(perm)
}

fn build_subgroup(
    g: &FiniteGroupModel,
    group_spec: &str,
    sub_spec: &str,
) -> Result<SubgroupEmbedding, CmdError> {
    let elements = if sub_spec == "all" {
        (0..g.order()).collect()
    } else if let Some(gens) = sub_spec.strip_prefix("gen:") {
        let idx: Result<Vec<usize>, _> = gens.split(',').map(|t| t.trim().parse()).collect();
        let idx = idx.map_err(|_| CmdError::input(format!("cannot parse generators '{gens}'")))?;
        if let Some(&bad) = idx.iter().find(|&&i| i >= g.order()) {
            return Err(CmdError::input(format!("generator index {bad} out of range")));
        }
        g.generated_subgroup(&idx)
    } else if let Some(perm) = sub_spec.strip_prefix("perm:") {
        let lower = group_spec.to_ascii_lowercase();
        let n: usize = lower
            .strip_prefix('s')
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| CmdError::input("perm: subgroups need a symmetric group (sN)".into()))?;
        let p = parse_perm_cycles(perm, n)?;
        let idx = FiniteGroupModel::symmetric_index(n, &p)
            .ok_or_else(|| CmdError::input("permutation not found in the model".into()))?;
        g.generated_subgroup(&[idx])
    } else {
        return Err(CmdError::input(format!(
            "cannot parse subgroup '{sub_spec}' (want all, gen:i,j, or perm:(..))"
        )));
    };
    SubgroupEmbedding::new(g, elements).map_err(input_err)
}

pub fn tf_verify(args: &TfVerifyArgs, cli: &Cli) -> Result<ExitCode, CmdError> {
    let g = build_group(&args.group)?;
    let sub = build_subgroup(&g, &args.group, &args.subgroup)?;
    let omega = match args.omega.as_str() {
        "trivial" => UnitaryRepOmega::trivial(&sub),
        "sign" => UnitaryRepOmega::sign_characters(&g, &sub)
            .into_iter()
            .next()
            .ok_or_else(|| CmdError::input("subgroup has no index-2 subgroup; no sign character".into()))?,
        "2dim" => UnitaryRepOmega::two_dimensional(&g, &sub)
            .ok_or_else(|| CmdError::input("no built-in 2-dimensional representation for this subgroup".into()))?,
        other => return Err(CmdError::input(format!("unknown omega '{other}'"))),
    };
    omega.validate(&g, &sub, 1e-12).map_err(input_err)?;

    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed);
    let mut table = Table::new(vec!["trial", "residual"]);
    let mut worst = 0.0f64;
    for trial in 0..args.trials {
        let f = TestFunction::random(&g, &mut rng);
        let r = verify_trace_formula(&g, &sub, &omega, &f);
        worst = worst.max(r);
        table.push(vec![Cell::Int(trial as i64), Cell::Float(r)]);
    }
    let pass = worst <= cli.tol.max(1e-10);
    let mut out = render(&table, cli.format);
    out.push_str(&format!(
        "summary: |G|={} |Gamma|={} omega={} trials={} worst={worst:e} {}\n",
        g.order(),
        sub.elements.len(),
        omega.label,
        args.trials,
        if pass { "PASS" } else { "FAIL" }
    ));
    emit(cli.out.as_deref(), &out)?;
    Ok(if pass { ok() } else { fail_verification() })
}

pub fn verify_all(cli: &Cli) -> Result<ExitCode, CmdError> {
    let results = run_all(cli.seed);
    let mut table = Table::new(vec!["suite", "status", "detail"]);
    let mut all_pass = true;
    for r in &results {
        all_pass &= r.pass;
        table.push(vec![
            Cell::Text(r.name.to_string()),
            Cell::Text(if r.pass { "PASS".into() } else { "FAIL".into() }),
            Cell::Text(r.detail.replace(',', ";")),
        ]);
    }
    let mut out = render(&table, cli.format);
    out.push_str(&format!(
        "summary: {}/{} suites passed\n",
        results.iter().filter(|r| r.pass).count(),
        results.len()
    ));
    emit(cli.out.as_deref(), &out)?;
    Ok(if all_pass { ok() } else { fail_verification() })
}

pub fn verify_decomposition(args: &DecompArgs, cli: &Cli) -> Result<ExitCode, CmdError> {
    let spec = load_spectrum(&args.spectrum).map_err(input_err)?;
    let cfg = EvalConfig { tol: (cli.tol * 1e-2).max(1e-13), ..Default::default() };
    let base = convergence_abscissa(&spec) + 1.0;
    let budget =
        3.0 * (spec.d1 as f64 + 1.0) * (spec.d2 as f64 + 1.0) * cfg.tol;
    let mut table = Table::new(vec!["s_re", "s_im", "residual", "budget"]);
    let mut all_pass = true;
    for j in 0..args.samples {
        let s = Complex64::new(
            base + 0.3 * j as f64,
            if j % 2 == 0 { 0.0 } else { 0.5 * j as f64 },
        );
        let r = ruelle_decomposition_residual(&spec, s, &cfg).map_err(input_err)?;
        all_pass &= r <= budget;
        table.push(vec![
            Cell::Float(s.re),
            Cell::Float(s.im),
            Cell::Float(r),
            Cell::Float(budget),
        ]);
    }
    let mut out = render(&table, cli.format);
    out.push_str(&format!("summary: {}\n", if all_pass { "PASS" } else { "FAIL" }));
    emit(cli.out.as_deref(), &out)?;
    Ok(if all_pass { ok() } else { fail_verification() })
}

pub fn synth(args: &SynthArgs, cli: &Cli) -> Result<ExitCode, CmdError> {
    let kind = match args.kind.as_str() {
        "arithmetic" => SynthKind::Arithmetic,
        "random" => SynthKind::Random,
        other => return Err(CmdError::input(format!("unknown kind '{other}'"))),
    };
    let params = SynthParams {
        n_classes: args.classes,
        length_base: args.length_base,
        d1: args.d1,
        d2: args.d2,
        alpha_norm: args.alpha_norm,
        dim_omega: args.dim_omega,
    };
    let spec = synth_spectrum(kind, &params, cli.seed).map_err(input_err)?;
    match &cli.out {
        Some(path) => save_spectrum(path, &spec).map_err(input_err)?,
        None => print!("{}", zetalab_core::spectra::spectrum_to_json(&spec)),
    }
    Ok(ok())
}
