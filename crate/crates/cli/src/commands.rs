//! The suites behind each subcommand.

use std::time::Instant;

use kostant_core::cases::{model, report_groups, Group, GroupModel};
use kostant_core::grassmann::{criticality, grad_fd, probe_frames, value_scale, ExactForm};
use kostant_core::invforms::{sign_violations, sphere_values, summarize, FormSpec, InvariantPolynomial, MAX_EXACT_DEGREE};
use kostant_core::principal::{exponents, CartanType};
use kostant_core::resultants::{proportionality_suite, sign_suite, ResultantCase};
use kostant_core::sampling::SphereSampler;
use rayon::prelude::*;

use crate::report::{SuiteReport, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] kostant_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use kostant_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Core(e) => match e {
                E::UnsupportedParam { .. }
                | E::NotApplicable(_)
                | E::DegreeTooLarge(_)
                | E::DegreeMismatch { .. }
                | E::WrongFamily(_)
                | E::UnsupportedDim(_)
                | E::ArityMismatch { .. } => 2,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Numerical settings shared by the subcommands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub samples: usize,
    pub seed: u64,
    pub h: f64,
    pub tol: f64,
    /// Record wall-clock times; otherwise `runtime_ms` is 0 so that output
    /// is reproducible byte for byte.
    pub timings: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { samples: 100_000, seed: 0, h: 1e-4, tol: 1e-6, timings: false }
    }
}

/// Random frames used to set the scale of a form's values.
pub const SCALE_PROBES: usize = 3;
/// Relative size above which a form value counts as nonvanishing.
pub const NONZERO_TOL: f64 = 1e-6;
/// Relative tolerance for sign violations of the sphere integrand.
pub const SPHERE_SIGN_TOL: f64 = 1e-12;
/// `|mean| / stderr` needed for a nonzero sphere average.
pub const Z_THRESHOLD: f64 = 5.0;
/// Largest form degree whose gradient the report computes.
pub const REPORT_GRADIENT_DEGREE: usize = 7;

pub fn parse_group(family: &str, param: Option<usize>) -> CliResult<Group> {
    Group::parse(family, param).map_err(|e| match e {
        kostant_core::Error::NotApplicable(msg) => CliError::Usage(msg),
        other => CliError::Core(other),
    })
}

/// `cartan`, `euler`, `spin7`, `spin9`, `tr<k>`, `c<k>` or `p<k>`.
pub fn parse_form(label: &str, m: &GroupModel) -> CliResult<FormSpec> {
    let numbered = |prefix: &str| label.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok()).filter(|&k| k > 0);
    let poly = match label {
        "cartan" => InvariantPolynomial::cartan(),
        "euler" => InvariantPolynomial::euler(&m.algebra)?,
        "spin7" => InvariantPolynomial::spin7_class(),
        "spin9" => InvariantPolynomial::spin9_class(),
        _ => {
            if let Some(k) = numbered("tr") {
                InvariantPolynomial::trace_power(k)
            } else if let Some(k) = numbered("c") {
                InvariantPolynomial::char_coeff(k)
            } else if let Some(k) = numbered("p") {
                InvariantPolynomial::pontryagin(k)
            } else {
                return Err(CliError::Usage(format!("unknown form {label}")));
            }
        }
    };
    Ok(FormSpec::new(poly))
}

fn elapsed(start: Instant, s: &Settings) -> u64 {
    if s.timings {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

fn component_check(m: &GroupModel, i: usize) -> CliResult<()> {
    if i >= m.component_count() {
        return Err(CliError::Usage(format!(
            "{} has {} components (0-based), got {i}",
            m.group.label(),
            m.component_count()
        )));
    }
    Ok(())
}

/// Spin multiset of the adjoint representation against the exponents, one
/// row per component; spin groups add rows for the spin-module summands.
pub fn decompose(group: Group, s: &Settings) -> CliResult<Vec<SuiteReport>> {
    let start = Instant::now();
    let m = model(group)?;
    let (family, param) = group.algebra_key();
    let mut want: Vec<usize> = exponents(CartanType::of(family, param)).iter().map(|e| 2 * e).collect();
    let mut got: Vec<usize> = (0..m.component_count()).map(|i| m.spin_of(i)).collect();
    want.sort_unstable();
    got.sort_unstable();
    let matches = want == got;
    let runtime = elapsed(start, s);
    let mut rows = Vec::new();
    for i in 0..m.component_count() {
        let mut r = SuiteReport::new("decompose", group.label(), "adjoint representation is the sum of S^(2e) over the exponents e")
            .metric("exponent_match", f64::from(u8::from(matches)))
            .metric("dim", m.kostant.components[i].dim() as f64);
        if let Some(e) = m.sigma_eigenvalue(i) {
            r = r.metric("orientation_eigenvalue", e);
        }
        r.component_index = Some(i);
        r.spin = Some(m.spin_of(i));
        r.form_label = if Some(i) == m.euler_index() && m.pontryagin_twin_index().is_some() {
            Some("euler".into())
        } else if Some(i) == m.pontryagin_twin_index() {
            Some("pontryagin".into())
        } else {
            m.default_form(i).map(|f| f.label().to_string())
        };
        r.pass = matches;
        r.runtime_ms = runtime;
        rows.push(r);
    }
    if let Some(spin) = &m.spin {
        let expected: &[usize] = if spin.d == 7 { &[0, 6] } else { &[4, 10] };
        for (k, c) in spin.summands.iter().enumerate() {
            let mut r = SuiteReport::new("spin_module", group.label(), "spin module splits into the expected irreducibles")
                .metric("dim", c.dim() as f64);
            r.component_index = Some(k);
            r.spin = Some(c.spin);
            r.pass = expected.contains(&c.spin);
            rows.push(r);
        }
    }
    Ok(rows)
}

fn exact_spec(m: &GroupModel, i: usize, form: Option<&str>) -> CliResult<FormSpec> {
    let dim = m.kostant.components[i].dim();
    let spec = match form {
        Some(label) => parse_form(label, m)?,
        None => match m.default_form(i) {
            Some(f) => f,
            None if dim > MAX_EXACT_DEGREE => return Err(kostant_core::Error::DegreeTooLarge(dim).into()),
            None => return Err(kostant_core::Error::NotApplicable(format!("no default form for component {i}")).into()),
        },
    };
    if spec.form_degree > MAX_EXACT_DEGREE {
        return Err(kostant_core::Error::DegreeTooLarge(spec.form_degree).into());
    }
    if spec.form_degree != dim {
        return Err(kostant_core::Error::DegreeMismatch { expected: dim, got: spec.form_degree }.into());
    }
    Ok(spec)
}

/// Value and finite-difference gradient of the form at `[V_i]`.
pub fn critical(group: Group, component: usize, form: Option<&str>, s: &Settings) -> CliResult<SuiteReport> {
    let start = Instant::now();
    let m = model(group)?;
    component_check(&m, component)?;
    let spec = exact_spec(&m, component, form)?;
    let label = spec.label().to_string();
    let eval = ExactForm::new(m.algebra.clone(), spec);
    let c = criticality(&eval, &m.frame(component)?, s.h, SCALE_PROBES, s.seed, false)?;
    let mut r = SuiteReport::new("critical", group.label(), "V_i is a critical point of the form on the Grassmannian")
        .metric("scale", c.scale)
        .metric("tol", s.tol)
        .metric("h", s.h)
        .metric("grad_limit", s.tol * c.scale);
    r.component_index = Some(component);
    r.spin = Some(m.spin_of(component));
    r.form_label = Some(label);
    r.value = Some(Value::Scalar(c.value));
    r.grad_norm = Some(c.grad_norm);
    r.seed = Some(s.seed);
    r.pass = c.is_critical(s.tol);
    r.runtime_ms = elapsed(start, s);
    Ok(r)
}

fn sphere_report(m: &GroupModel, s: &Settings, suite: &str) -> CliResult<SuiteReport> {
    let mats = m.sphere_matrices()?;
    let values = sphere_values(&mats, &SphereSampler::new(s.seed, s.samples))?;
    let stats = summarize(&values);
    let violations = sign_violations(&values, stats.mean, SPHERE_SIGN_TOL * stats.scale());
    let z = if stats.stderr > 0.0 { stats.mean.abs() / stats.stderr } else { f64::INFINITY };
    let mut r = SuiteReport::new(suite, m.group.label(), "sphere integrand is sign-definite with nonzero mean")
        .metric("min", stats.min_observed)
        .metric("max", stats.max_observed)
        .metric("violations", violations as f64)
        .metric("z", z)
        .metric("z_threshold", Z_THRESHOLD);
    let i = m.sphere_index().expect("sphere matrices exist");
    r.component_index = Some(i);
    r.spin = Some(m.spin_of(i));
    r.form_label = Some("sphere".into());
    r.value = Some(Value::Estimate { mean: stats.mean, stderr: stats.stderr });
    r.samples = Some(s.samples as u64);
    r.seed = Some(s.seed);
    r.pass = z > Z_THRESHOLD;
    Ok(r)
}

/// Monte Carlo average of the sphere integrand of the designated component.
pub fn average(group: Group, s: &Settings) -> CliResult<SuiteReport> {
    let start = Instant::now();
    let m = model(group)?;
    let mut r = sphere_report(&m, s, "average")?;
    r.runtime_ms = elapsed(start, s);
    Ok(r)
}

/// `su3` … `su6`, `su(4)`, or `spin9`.
pub fn parse_case(label: &str) -> CliResult<ResultantCase> {
    let l = label.to_ascii_lowercase().replace(['(', ')'], "");
    if l == "spin9" {
        return Ok(ResultantCase::Spin9);
    }
    match l.strip_prefix("su").and_then(|n| n.parse::<usize>().ok()) {
        Some(n) => Ok(ResultantCase::Su(n)),
        None => Err(CliError::Usage(format!("unknown resultant case {label}"))),
    }
}

/// Largest allowed relative spread of `Q / R`.
pub fn spread_threshold(case: ResultantCase) -> f64 {
    match case {
        ResultantCase::Su(_) => 1e-8,
        ResultantCase::Spin9 => 1e-6,
    }
}

/// Proportionality of the sphere polynomial to the resultant, and the sign
/// of the resultant.
pub fn resultant_check(case: ResultantCase, s: &Settings) -> CliResult<Vec<SuiteReport>> {
    let start = Instant::now();
    let p = proportionality_suite(case, s.samples, s.seed)?;
    let threshold = spread_threshold(case);
    let mut a = SuiteReport::new("resultant_proportionality", case.label(), "sphere polynomial is a constant multiple of the resultant")
        .metric("ratio_rel_spread", p.ratio_rel_spread)
        .metric("spread_threshold", threshold)
        .metric("zeros_consistent", f64::from(u8::from(p.zeros_consistent)))
        .metric("zero_q_max", p.zero_q_max)
        .metric("zero_r_max", p.zero_r_max)
        .metric("used", p.used as f64);
    a.value = Some(Value::Scalar(p.ratio_mean));
    a.samples = Some(s.samples as u64);
    a.seed = Some(s.seed);
    a.pass = p.ratio_rel_spread <= threshold && p.zeros_consistent;
    a.runtime_ms = elapsed(start, s);

    let start = Instant::now();
    let g = sign_suite(case, s.samples, s.seed)?;
    let claim = if g.expected_sign > 0 { "resultant is non-negative" } else { "resultant is non-positive" };
    let mut b = SuiteReport::new("resultant_sign", case.label(), claim)
        .metric("min", g.min)
        .metric("max", g.max)
        .metric("violations", g.violations as f64)
        .metric("expected_sign", f64::from(g.expected_sign))
        .metric("definite", f64::from(u8::from(g.definite)))
        .metric("max_imag", g.max_imag);
    b.samples = Some(s.samples as u64);
    b.seed = Some(s.seed);
    b.pass = g.violations == 0;
    b.runtime_ms = elapsed(start, s);
    Ok(vec![a, b])
}

fn report_row(m: &GroupModel, i: usize, s: &Settings) -> CliResult<SuiteReport> {
    let start = Instant::now();
    let spin = m.spin_of(i);
    let mut r = if let Some(spec) = m.default_form(i) {
        let label = spec.label().to_string();
        let degree = spec.form_degree;
        let eval = ExactForm::new(m.algebra.clone(), spec);
        let fr = m.frame(i)?;
        let probes = probe_frames(&eval, SCALE_PROBES, s.seed);
        let value = kostant_core::grassmann::f_value(&eval, &fr)?;
        let scale = value_scale(&eval, &fr, &probes)?;
        let nonzero = value.abs() >= NONZERO_TOL * scale;
        let mut r = SuiteReport::new("report", m.group.label(), "form is nonvanishing (and critical) on V_i")
            .metric("scale", scale)
            .metric("nonzero_limit", NONZERO_TOL * scale);
        r.form_label = Some(label);
        r.value = Some(Value::Scalar(value));
        r.seed = Some(s.seed);
        r.pass = nonzero;
        if degree <= REPORT_GRADIENT_DEGREE {
            let (_, g) = grad_fd(&eval, &fr, s.h)?;
            r.grad_norm = Some(g);
            r = r.metric("grad_limit", s.tol * scale);
            r.pass &= g <= s.tol * scale;
        }
        r
    } else if m.sphere_index() == Some(i) {
        let mut r = sphere_report(m, s, "report")?;
        r.claim = "sphere integrand is sign-definite with nonzero mean".into();
        r
    } else {
        let mut r = SuiteReport::new("report", m.group.label(), "no form within reach of the exact evaluator");
        r.checked = false;
        r.pass = true;
        r
    };
    r.component_index = Some(i);
    r.spin = Some(spin);
    r.runtime_ms = elapsed(start, s);
    Ok(r)
}

fn group_rows(group: Group, s: &Settings) -> CliResult<Vec<SuiteReport>> {
    let m = model(group)?;
    (0..m.component_count()).map(|i| report_row(&m, i, s)).collect()
}

/// The evidence table: one row per (group, component), groups in the fixed
/// order of [`report_groups`].
pub fn report(s: &Settings, jobs: usize) -> CliResult<Vec<SuiteReport>> {
    report_for(&report_groups(), s, jobs)
}

pub fn report_for(groups: &[Group], s: &Settings, jobs: usize) -> CliResult<Vec<SuiteReport>> {
    let per_group: Vec<CliResult<Vec<SuiteReport>>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
        pool.install(|| groups.par_iter().map(|&g| group_rows(g, s)).collect())
    } else {
        groups.iter().map(|&g| group_rows(g, s)).collect()
    };
    let mut rows = Vec::new();
    for r in per_group {
        rows.extend(r?);
    }
    Ok(rows)
}
