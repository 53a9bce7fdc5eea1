//! Run configuration and command implementations behind the `chenforms`
//! binary. Every command returns its full report as text so that output
//! assembly stays ordered and testable.

use std::fs;
use std::path::Path as FsPath;

use chenforms::chen::{
    compose, evaluate_on_chain, iterated_integral, delta_product_check, shuffle_check,
    ChainPolicy, QuadratureConfig, Word,
};
use chenforms::group_algebra::{delta_product, sample_elements, GroupElement};
use chenforms::higher_order::{
    all_tuples, dual_basis_coefficients, kronecker_identity_residual, order_certificate, period,
    period_matrix, period_product, psi_table, section_construct, spread, HigherOrderForm,
    DEFAULT_CONDITION_BOUND,
};
use chenforms::hodge::{
    census, decompose, enumerate_words, exclusivity_violations, recombine, BigradedWord,
    GradedCombination,
};
use chenforms::modular_letters::{
    builtin_form, eval_form, height_lift, EvalOptions, Letter, Orientation, QExpansion,
    DEFAULT_TRUNCATION,
};
use chenforms::path::{parse_point, parse_points, Path};
use chenforms::report::{fmt_complex, fmt_real, CheckLine};
use chenforms::Error;
use num_complex::Complex64;
use std::sync::Arc;

/// Usage and configuration problems (exit 2) versus everything else.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Runtime(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidArgument(_)
            | Error::Domain(_)
            | Error::MixedWord(_)
            | Error::Grading(_)
            | Error::Determinant { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub level: u64,
    pub truncation: usize,
    pub tol: f64,
    pub panels: usize,
    pub nodes: usize,
    pub basepoint: Complex64,
    pub elements: Vec<GroupElement>,
    pub z_samples: Vec<Complex64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let q = QuadratureConfig::default();
        RunConfig {
            level: 11,
            truncation: DEFAULT_TRUNCATION,
            tol: q.target_tol,
            panels: q.panels_per_segment,
            nodes: q.nodes_per_panel,
            basepoint: Complex64::new(0.0, 2.0),
            elements: sample_elements(),
            z_samples: chenforms::higher_order::default_z_samples(),
        }
    }
}

/// Settings given explicitly, from flags or a config file; `None` keeps
/// the lower-precedence value.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub level: Option<u64>,
    pub truncation: Option<usize>,
    pub tol: Option<f64>,
    pub panels: Option<usize>,
    pub nodes: Option<usize>,
    pub basepoint: Option<String>,
    pub elements_file: Option<String>,
    pub z_samples: Option<String>,
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> CliResult<T> {
    v.trim()
        .parse()
        .map_err(|_| usage(format!("bad value for {key}: {v:?}")))
}

/// "key=value" lines; blank lines and text after '#' are ignored.
pub fn parse_config_text(text: &str) -> CliResult<Overrides> {
    let mut o = Overrides::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key=value", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "level" => o.level = Some(parse_num(key, value)?),
            "terms" | "truncation" => o.truncation = Some(parse_num(key, value)?),
            "tol" => o.tol = Some(parse_num(key, value)?),
            "panels" => o.panels = Some(parse_num(key, value)?),
            "nodes" => o.nodes = Some(parse_num(key, value)?),
            "basepoint" => o.basepoint = Some(value.to_string()),
            "elements" => o.elements_file = Some(value.to_string()),
            "z_samples" | "z-samples" => o.z_samples = Some(value.to_string()),
            _ => return Err(usage(format!("unknown config key {key:?}"))),
        }
    }
    Ok(o)
}

/// One "a,b,c,d" per line; '#' comments allowed.
pub fn parse_elements(text: &str) -> CliResult<Vec<GroupElement>> {
    let els = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<GroupElement>().map_err(CliError::from))
        .collect::<CliResult<Vec<_>>>()?;
    if els.is_empty() {
        return Err(usage("element file lists no elements"));
    }
    Ok(els)
}

fn read_file(path: &str) -> CliResult<String> {
    fs::read_to_string(FsPath::new(path)).map_err(|e| usage(format!("cannot read {path}: {e}")))
}

impl RunConfig {
    /// Defaults, then the config file, then flags.
    pub fn resolve(config_file: Option<&str>, flags: &Overrides) -> CliResult<Self> {
        let mut cfg = RunConfig::default();
        if let Some(path) = config_file {
            cfg.apply(&parse_config_text(&read_file(path)?)?)?;
        }
        cfg.apply(flags)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&mut self, o: &Overrides) -> CliResult<()> {
        if let Some(v) = o.level {
            self.level = v;
        }
        if let Some(v) = o.truncation {
            self.truncation = v;
        }
        if let Some(v) = o.tol {
            self.tol = v;
        }
        if let Some(v) = o.panels {
            self.panels = v;
        }
        if let Some(v) = o.nodes {
            self.nodes = v;
        }
        if let Some(v) = &o.basepoint {
            self.basepoint = parse_point(v)?;
        }
        if let Some(path) = &o.elements_file {
            self.elements = parse_elements(&read_file(path)?)?;
        }
        if let Some(v) = &o.z_samples {
            self.z_samples = parse_points(v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.level != 11 {
            return Err(usage(format!(
                "level {} is not supported; built-in forms exist for level 11 only",
                self.level
            )));
        }
        if self.truncation == 0 || self.panels == 0 || self.nodes < 2 || !(self.tol > 0.0) {
            return Err(usage("terms, panels, tol must be positive and nodes at least 2"));
        }
        if !(self.basepoint.im > 0.0) {
            return Err(usage(format!("basepoint {} is not in the upper half-plane", self.basepoint)));
        }
        if self.z_samples.is_empty() || self.z_samples.iter().any(|z| !(z.im > 0.0)) {
            return Err(usage("z samples must be nonempty and in the upper half-plane"));
        }
        if let Some(g) = self.elements.iter().find(|g| !g.in_gamma0(self.level)) {
            return Err(usage(format!("element ({g}) is not in Γ₀({})", self.level)));
        }
        Ok(())
    }

    pub fn quadrature(&self) -> QuadratureConfig {
        QuadratureConfig {
            panels_per_segment: self.panels,
            nodes_per_panel: self.nodes,
            target_tol: self.tol,
            ..QuadratureConfig::default()
        }
    }

    pub fn form(&self, name: &str) -> CliResult<Arc<QExpansion>> {
        builtin_form(name, self.truncation).map_err(|_| usage(format!("unknown form {name:?}")))
    }

    /// (cusp hol, cusp antihol, eis hol): one letter per dimension of the
    /// weight-2 periods.
    pub fn basis_letters(&self) -> CliResult<Vec<Letter>> {
        let cusp = self.form("cusp11")?;
        let eis = self.form("eis11")?;
        Ok(vec![
            Letter::form(cusp.clone(), Orientation::Hol),
            Letter::form(cusp, Orientation::Antihol),
            Letter::form(eis, Orientation::Hol),
        ])
    }

    fn tuples(&self, s: usize) -> Vec<Vec<GroupElement>> {
        all_tuples(self.elements.len(), s)
            .into_iter()
            .map(|t| t.into_iter().map(|i| self.elements[i].clone()).collect())
            .collect()
    }

    fn unmixed_words(&self, len: usize, both: bool) -> CliResult<Vec<Word>> {
        let cusp = self.form("cusp11")?;
        let eis = self.form("eis11")?;
        let orientations: &[Orientation] = if both {
            &[Orientation::Hol, Orientation::Antihol]
        } else {
            &[Orientation::Hol]
        };
        let mut out = Vec::new();
        for &o in orientations {
            let alphabet = [Letter::form(cusp.clone(), o), Letter::form(eis.clone(), o)];
            out.extend(enumerate_words(&alphabet, len).into_iter().map(Word::new));
        }
        Ok(out)
    }
}

/// Command output and whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub passed: bool,
}

impl Report {
    fn data(text: String) -> Self {
        Report { text, passed: true }
    }

    fn checks(lines: &[CheckLine]) -> Self {
        let mut text = String::new();
        for l in lines {
            text.push_str(&l.to_string());
            text.push('\n');
        }
        Report {
            text,
            passed: lines.iter().all(CheckLine::passed),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub fn cmd_coeffs(cfg: &RunConfig, name: &str, terms: usize) -> CliResult<Report> {
    let f = builtin_form(name, terms.max(cfg.truncation))
        .map_err(|_| usage(format!("unknown form {name:?}")))?;
    let mut text = String::new();
    for n in 0..=terms {
        text.push_str(&format!("{n}\t{}\n", f.coefficients()[n]));
    }
    Ok(Report::data(text))
}

pub fn cmd_period(cfg: &RunConfig, letter: &str, element: &str, z: Option<&str>) -> CliResult<Report> {
    let letter = Letter::parse(letter, cfg.truncation)?;
    let g: GroupElement = element.parse()?;
    let z = match z {
        Some(s) => parse_point(s)?,
        None => cfg.basepoint,
    };
    let e = period(&letter, &g, z, &cfg.quadrature())?;
    Ok(Report::data(format!("{}\t{}\n", fmt_complex(e.value), fmt_real(e.error))))
}

pub fn cmd_itint(cfg: &RunConfig, word: &str, path: &str) -> CliResult<Report> {
    let word = Word::parse(word, cfg.truncation)?;
    let path: Path = path.parse()?;
    let e = iterated_integral(&path, &word, &cfg.quadrature())?;
    Ok(Report::data(format!("{}\t{}\n", fmt_complex(e.value), fmt_real(e.error))))
}

pub fn cmd_order_cert(cfg: &RunConfig, word: &str, count: usize) -> CliResult<Report> {
    let word = Word::parse(word, cfg.truncation)?;
    let form = HigherOrderForm::new(word, cfg.basepoint, cfg.quadrature())?;
    let report = order_certificate(&form, &cfg.elements, &cfg.z_samples, count, 1e-6)?;
    Ok(Report::checks(&report.lines))
}

pub fn cmd_period_matrix(cfg: &RunConfig) -> CliResult<Report> {
    let letters = cfg.basis_letters()?;
    if cfg.elements.len() != letters.len() {
        return Err(usage(format!(
            "the period matrix needs {} elements, got {}",
            letters.len(),
            cfg.elements.len()
        )));
    }
    let p = period_matrix(&letters, &cfg.elements, cfg.basepoint, &cfg.quadrature(), DEFAULT_CONDITION_BOUND)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut text = String::from("letter");
    for g in &cfg.elements {
        text.push_str(&format!("\t{g}"));
    }
    text.push('\n');
    for (r, l) in letters.iter().enumerate() {
        text.push_str(&l.to_string());
        for c in 0..cfg.elements.len() {
            text.push_str(&format!("\t{}", fmt_complex(p.entries[(r, c)])));
        }
        text.push('\n');
    }
    let det_abs = p.row_normalized_det();
    text.push_str(&format!("det_abs={}\n", fmt_real(det_abs)));
    Ok(Report {
        text,
        passed: det_abs > 1e-6,
    })
}

fn tuple_id(tuple: &[GroupElement]) -> String {
    tuple.iter().map(|g| format!("({g})")).collect()
}

fn relative_gap(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / (1.0 + a.norm().max(b.norm()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    ChainVanishing,
    Composition,
    Shuffle,
    Mainlem,
    Invariance,
    Dualbasis,
    Hodge,
    Ordercert,
}

impl std::str::FromStr for Check {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        Ok(match s {
            "lemma33" => Check::ChainVanishing,
            "lemma34" => Check::Composition,
            "shuffle" => Check::Shuffle,
            "mainlem" => Check::Mainlem,
            "invariance" => Check::Invariance,
            "dualbasis" => Check::Dualbasis,
            "hodge" => Check::Hodge,
            "ordercert" => Check::Ordercert,
            _ => return Err(usage(format!("unknown check {s:?}"))),
        })
    }
}

pub fn cmd_verify(cfg: &RunConfig, check: Check) -> CliResult<Report> {
    match check {
        Check::ChainVanishing => verify_chain_laws(cfg),
        Check::Composition => verify_composition(cfg),
        Check::Shuffle => verify_shuffle(cfg),
        Check::Mainlem => verify_mainlem(cfg),
        Check::Invariance => verify_invariance(cfg),
        Check::Dualbasis => verify_dualbasis(cfg),
        Check::Hodge => verify_hodge(cfg),
        Check::Ordercert => verify_ordercert(cfg),
    }
}

fn verify_chain_laws(cfg: &RunConfig) -> CliResult<Report> {
    let q = cfg.quadrature();
    let mut lines = Vec::new();
    for s in 2..=3 {
        for tuple in cfg.tuples(s) {
            let delta = delta_product(&tuple).element;
            for r in 1..s {
                for w in cfg.unmixed_words(r, false)? {
                    let v = evaluate_on_chain(&w, &delta, cfg.basepoint, &q, ChainPolicy::Strict)?;
                    lines.push(CheckLine::new(
                        format!("lemma33/vanish/{w}/{}", tuple_id(&tuple)),
                        v.value.norm(),
                        1e-7,
                    ));
                }
            }
        }
    }
    for s in 1..=2 {
        for w in cfg.unmixed_words(s, false)? {
            for tuple in cfg.tuples(s) {
                let (lhs, rhs) = delta_product_check(&w.letters, &tuple, cfg.basepoint, &q)?;
                lines.push(CheckLine::new(
                    format!("lemma33/product/{w}/{}", tuple_id(&tuple)),
                    (lhs.value - rhs.value).norm(),
                    1e-6,
                ));
            }
        }
    }
    Ok(Report::checks(&lines))
}

fn verify_composition(cfg: &RunConfig) -> CliResult<Report> {
    let q = cfg.quadrature();
    let cases: [(&str, &str, &str); 8] = [
        ("poly(1):hol,poly(1):hol", "0,2;1,3", "1,3;0.5,1"),
        ("poly(1,0):hol,poly(1):antihol", "0,1;0.5,2", "0.5,2;-0.3,1.2"),
        ("poly(1,-2,0.5):antihol,poly(1):hol,poly(2,1):hol", "-0.5,1;0,2", "0,2;0.7,0.8"),
        ("cusp11:hol,eis11:hol", "0,2;0.5,1", "0.5,1;-0.4,1.5"),
        ("cusp11:hol,cusp11:antihol", "0,2;0.3,1.1", "0.3,1.1;0.6,2"),
        ("eis11:hol,cusp11:antihol,eis11:hol", "0,1.5;0.2,0.9", "0.2,0.9;-0.5,1.8"),
        ("cusp11:hol,poly(1,0):hol,eis11:antihol,cusp11:hol", "0,2;0.4,1.3", "0.4,1.3;0,0.8"),
        ("eis11:hol,eis11:hol,eis11:hol,eis11:hol", "0,2;0.5,2", "0.5,2;0.5,1"),
    ];
    let mut lines = Vec::new();
    for (i, (word, a, b)) in cases.iter().enumerate() {
        let w = Word::parse(word, cfg.truncation)?;
        let alpha: Path = a.parse()?;
        let beta: Path = b.parse()?;
        let direct = iterated_integral(&alpha.concat(&beta)?, &w, &q)?;
        let composed = compose(&w, &alpha, &beta, &q)?;
        lines.push(CheckLine::new(
            format!("lemma34/case{}/{w}", i + 1),
            relative_gap(direct.value, composed.value),
            cfg.tol,
        ));
    }
    // Reversal: ∫ over α then α⁻¹ vanishes for nonempty words.
    let w = Word::parse("cusp11:hol,eis11:antihol", cfg.truncation)?;
    let alpha: Path = "0,2;0.4,1".parse()?;
    let v = compose(&w, &alpha, &alpha.reverse(), &q)?;
    lines.push(CheckLine::new("lemma34/reverse", v.value.norm(), cfg.tol));
    Ok(Report::checks(&lines))
}

fn verify_shuffle(cfg: &RunConfig) -> CliResult<Report> {
    let q = cfg.quadrature();
    let cases: [(&str, &str, &str); 5] = [
        ("poly(1):hol", "poly(1):hol", "0,2;1,3"),
        ("poly(1,0):hol", "poly(1):antihol,poly(2):hol", "0,1;0.5,2"),
        ("cusp11:hol", "eis11:hol", "0,2;0.5,1"),
        ("cusp11:hol,eis11:antihol", "cusp11:antihol", "0,1.5;-0.3,0.9"),
        ("eis11:hol,eis11:hol", "cusp11:hol,poly(1,0):hol", "0,2;0.4,1.2"),
    ];
    let mut lines = Vec::new();
    for (i, (u, v, p)) in cases.iter().enumerate() {
        let u = Word::parse(u, cfg.truncation)?;
        let v = Word::parse(v, cfg.truncation)?;
        let path: Path = p.parse()?;
        let (prod, sum) = shuffle_check(&u, &v, &path, &q)?;
        lines.push(CheckLine::new(
            format!("shuffle/case{}/{u}|{v}", i + 1),
            relative_gap(prod.value, sum.value),
            cfg.tol,
        ));
    }
    Ok(Report::checks(&lines))
}

fn verify_mainlem(cfg: &RunConfig) -> CliResult<Report> {
    let q = cfg.quadrature();
    let mut lines = Vec::new();
    for s in 1..=2 {
        for w in cfg.unmixed_words(s, false)? {
            let form = HigherOrderForm::new(w.clone(), cfg.basepoint, q)?;
            for tuple in cfg.tuples(s) {
                let values = cfg
                    .z_samples
                    .iter()
                    .map(|&z| form.psi_image(&tuple, z).map(|e| e.value))
                    .collect::<Result<Vec<_>, _>>()?;
                let pp = period_product(&w.letters, &tuple, cfg.basepoint, &q)?.value;
                let id = format!("{w}/{}", tuple_id(&tuple));
                lines.push(CheckLine::new(format!("mainlem/constancy/{id}"), spread(&values), 1e-6));
                let gap = values.iter().map(|v| (v - pp).norm()).fold(0.0, f64::max);
                lines.push(CheckLine::new(format!("mainlem/product/{id}"), gap, 1e-6));
            }
        }
    }
    Ok(Report::checks(&lines))
}

fn verify_invariance(cfg: &RunConfig) -> CliResult<Report> {
    let opts = EvalOptions::default();
    let mut lines = Vec::new();
    for name in ["cusp11", "eis11"] {
        let f = cfg.form(name)?;
        for g in &cfg.elements {
            for &z in &cfg.z_samples {
                let lhs = eval_form(&f, g.act(z), opts)?;
                let j = g.automorphy_factor(z);
                let rhs = eval_form(&f, z, opts)? * j * j;
                lines.push(CheckLine::new(
                    format!("invariance/{name}/({g})/z={}", fmt_complex(z)),
                    relative_gap(lhs, rhs),
                    1e-9,
                ));
            }
        }
    }
    for g in &cfg.elements {
        for &z in &cfg.z_samples {
            let (_, w1) = height_lift(z, cfg.level)?;
            let (_, w2) = height_lift(g.act(z), cfg.level)?;
            lines.push(CheckLine::new(
                format!("invariance/lift-height/({g})/z={}", fmt_complex(z)),
                (w1.im - w2.im).abs() / w1.im,
                1e-9,
            ));
        }
    }
    Ok(Report::checks(&lines))
}

fn verify_dualbasis(cfg: &RunConfig) -> CliResult<Report> {
    let q = cfg.quadrature();
    let letters = cfg.basis_letters()?;
    let p = period_matrix(&letters, &cfg.elements, cfg.basepoint, &q, DEFAULT_CONDITION_BOUND)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut lines = vec![CheckLine::new(
        "dualbasis/inverse-row-normalized-det",
        1.0 / p.row_normalized_det(),
        1e6,
    )];
    for s in 1..=3 {
        let dual = dual_basis_coefficients(&p, s)?;
        lines.push(CheckLine::new(
            format!("dualbasis/kronecker/s={s}"),
            kronecker_identity_residual(&p, &dual),
            1e-10,
        ));
    }
    let z = cfg.z_samples[0];
    for s in 1..=2 {
        let dual = dual_basis_coefficients(&p, s)?;
        let table = psi_table(&p, s, cfg.basepoint, z, &q)?;
        let n = table.values.nrows();
        let mut worst: f64 = 0.0;
        for l in 0..n {
            let mut targets = vec![Complex64::new(0.0, 0.0); n];
            targets[l] = Complex64::new(1.0, 0.0);
            let psi = section_construct(&targets, &dual)?.psi(&table);
            for j in (0..n).filter(|&j| table.numeric_rows[j]) {
                let want = if j == l { 1.0 } else { 0.0 };
                worst = worst.max((psi[j] - want).norm());
            }
        }
        lines.push(CheckLine::new(format!("dualbasis/end-to-end/s={s}"), worst, 1e-5));
    }
    Ok(Report::checks(&lines))
}

fn verify_hodge(cfg: &RunConfig) -> CliResult<Report> {
    let letters = vec![
        Letter::form(cfg.form("cusp11")?, Orientation::Hol),
        Letter::form(cfg.form("eis11")?, Orientation::Hol),
        Letter::form(cfg.form("cusp11")?, Orientation::Antihol),
    ];
    let orientations: Vec<Orientation> = letters.iter().map(|l| l.orientation).collect();
    let mut text = String::from("m\tp\tcount\ttotal\n");
    for row in census(&orientations, 4) {
        text.push_str(&format!("{}\t{}\t{}\t{}\n", row.m, row.p, row.count, row.total));
    }
    let mut failures = 0usize;
    for m in 1..=4 {
        let terms = enumerate_words(&letters, m)
            .into_iter()
            .enumerate()
            .map(|(k, w)| {
                (
                    Complex64::new(k as f64 + 1.0, 0.5 - k as f64),
                    BigradedWord::new(Word::new(w)),
                )
            })
            .collect();
        let x = GradedCombination::new(terms)?;
        for p in 0..=m + 1 {
            let d = decompose(&x, p, m + 1 - p)?;
            if recombine(&d).coefficient_map() != x.coefficient_map() || !d.lower.is_empty() {
                failures += 1;
            }
        }
    }
    let lines = [
        CheckLine::new(
            "hodge/exclusivity",
            exclusivity_violations(&orientations, 4) as f64,
            0.0,
        ),
        CheckLine::new("hodge/reconstruction", failures as f64, 0.0),
    ];
    let checks = Report::checks(&lines);
    text.push_str(&checks.text);
    Ok(Report {
        text,
        passed: checks.passed,
    })
}

fn verify_ordercert(cfg: &RunConfig) -> CliResult<Report> {
    let mut lines = Vec::new();
    for s in 1..=2 {
        for w in cfg.unmixed_words(s, true)? {
            let form = HigherOrderForm::new(w, cfg.basepoint, cfg.quadrature())?;
            lines.extend(order_certificate(&form, &cfg.elements, &cfg.z_samples, 5, 1e-6)?.lines);
        }
    }
    Ok(Report::checks(&lines))
}
