//! Numerical Chen iterated integrals along piecewise-linear paths.
//!
//! For a word w₁…w_s and a path with pull-backs fₖ(t)dt the integral over
//! the simplex 0 ≤ t₁ ≤ … ≤ t_s ≤ 1 is computed by the recurrence
//!
//! ```text
//! J₀ ≡ 1,    Jₖ(t) = ∫₀ᵗ Jₖ₋₁(u) fₖ(u) du,    result = J_s(1)
//! ```
//!
//! on a composite Gauss–Legendre grid. Inside each panel the running
//! integral is carried to every node with the rule's spectral integration
//! matrix, so the cost is linear in both the node count and the word length.
//! The grid is first refined adaptively until every letter is resolved, then
//! bisected uniformly for a fixed number of rounds; the difference of the
//! last two rounds is the reported error.

mod quadrature;

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group_algebra::{GroupElement, GroupRingElement, SignedProduct};
use crate::modular_letters::{EvalOptions, Letter, Orientation};
use crate::path::Path;

pub use quadrature::PanelRule;

/// An ordered tuple of letters.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// All letters holomorphic, or all anti-holomorphic.
    pub fn is_unmixed(&self) -> bool {
        match self.letters.first() {
            None => true,
            Some(first) => self
                .letters
                .iter()
                .all(|l| l.orientation == first.orientation),
        }
    }

    pub fn hol_count(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| l.orientation == Orientation::Hol)
            .count()
    }

    /// w₁…w_j
    pub fn prefix(&self, j: usize) -> Word {
        Word::new(self.letters[..j].to_vec())
    }

    /// w_{j+1}…w_s
    pub fn suffix(&self, j: usize) -> Word {
        Word::new(self.letters[j..].to_vec())
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::new(letters)
    }

    pub fn conjugate(&self) -> Word {
        Word::new(self.letters.iter().map(Letter::conjugate).collect())
    }

    /// Parses "form:orientation,…"; polynomial letters may contain commas
    /// inside their parentheses.
    pub fn parse(text: &str, truncation: usize) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, ch) in text.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    letters.push(Letter::parse(&text[start..i], truncation)?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        letters.push(Letter::parse(&text[start..], truncation)?);
        Ok(Word::new(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word::new(letters)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub panels_per_segment: usize,
    pub nodes_per_panel: usize,
    pub refinement_rounds: usize,
    pub target_tol: f64,
    /// Adaptive acceptance threshold per panel, as a fraction of `target_tol`.
    pub local_fraction: f64,
    /// Bisection depth limit of the adaptive stage.
    pub max_depth: usize,
    pub eval: EvalOptions,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            panels_per_segment: 8,
            nodes_per_panel: 16,
            refinement_rounds: 3,
            target_tol: 1e-8,
            local_fraction: 1e-3,
            max_depth: 60,
            eval: EvalOptions::default(),
        }
    }
}

impl QuadratureConfig {
    /// Defaults for words built only from polynomial letters.
    pub fn polynomial() -> Self {
        QuadratureConfig {
            target_tol: 1e-10,
            ..Self::default()
        }
    }

    /// Defaults for words with modular letters.
    pub fn modular() -> Self {
        Self::default()
    }

    pub fn with_tol(self, target_tol: f64) -> Self {
        QuadratureConfig { target_tol, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.panels_per_segment < 1
            || self.nodes_per_panel < 2
            || self.refinement_rounds < 1
            || !(self.target_tol > 0.0)
            || !(self.local_fraction > 0.0)
        {
            return Err(Error::InvalidArgument(format!(
                "invalid quadrature configuration {self:?}"
            )));
        }
        Ok(())
    }
}

/// A value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

impl Estimate {
    pub fn exact(value: Complex64) -> Self {
        Estimate { value, error: 0.0 }
    }

    pub fn add(self, other: Estimate) -> Estimate {
        Estimate {
            value: self.value + other.value,
            error: self.error + other.error,
        }
    }

    pub fn scale(self, k: f64) -> Estimate {
        Estimate {
            value: self.value * k,
            error: self.error * k.abs(),
        }
    }

    pub fn mul(self, other: Estimate) -> Estimate {
        Estimate {
            value: self.value * other.value,
            error: self.value.norm() * other.error
                + other.value.norm() * self.error
                + self.error * other.error,
        }
    }
}

/// Distinct holomorphic functions of a word, and for each letter the index
/// of its function plus its orientation.
struct LetterTable<'a> {
    sources: Vec<&'a Letter>,
    map: Vec<(usize, Orientation)>,
}

impl<'a> LetterTable<'a> {
    fn new(word: &'a Word) -> Self {
        let mut sources: Vec<&Letter> = Vec::new();
        let mut map = Vec::with_capacity(word.len());
        for l in &word.letters {
            let idx = match sources.iter().position(|s| s.source == l.source) {
                Some(i) => i,
                None => {
                    sources.push(l);
                    sources.len() - 1
                }
            };
            map.push((idx, l.orientation));
        }
        LetterTable { sources, map }
    }

    /// Pull-backs of every letter at the given segment parameters;
    /// `out[k][j]` is letter k at parameter `ts[j]`.
    fn pullbacks(
        &self,
        z0: Complex64,
        z1: Complex64,
        ts: &[f64],
        opts: EvalOptions,
    ) -> Result<Vec<Vec<Complex64>>> {
        let dz = z1 - z0;
        let mut raw = Vec::with_capacity(self.sources.len());
        for src in &self.sources {
            let vals = ts
                .iter()
                .map(|&t| Ok(src.holomorphic_value(z0 + dz * t, opts)? * dz))
                .collect::<Result<Vec<_>>>()?;
            raw.push(vals);
        }
        Ok(self
            .map
            .iter()
            .map(|&(idx, orient)| match orient {
                Orientation::Hol => raw[idx].clone(),
                Orientation::Antihol => raw[idx].iter().map(|v| v.conj()).collect(),
            })
            .collect())
    }
}

fn panel_params(rule: &PanelRule, a: f64, b: f64) -> Vec<f64> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    rule.nodes.iter().map(|x| mid + half * x).collect()
}

fn panel_sum(rule: &PanelRule, half: f64, vals: &[Complex64]) -> (Complex64, f64) {
    let mut s = Complex64::zero();
    let mut abs = 0.0;
    for (w, v) in rule.weights.iter().zip(vals) {
        s += v * w;
        abs += w * v.norm();
    }
    (s * half, abs * half.abs())
}

/// Adaptive panel boundaries on [0, 1] for one segment.
fn adaptive_panels(
    table: &LetterTable<'_>,
    z0: Complex64,
    z1: Complex64,
    rule: &PanelRule,
    cfg: &QuadratureConfig,
) -> Result<Vec<(f64, f64)>> {
    let local_tol = cfg.local_fraction * cfg.target_tol;
    let n0 = cfg.panels_per_segment;
    let mut out = Vec::new();
    // Depth-first; children pushed in reverse so panels come out in order.
    let mut stack: Vec<(f64, f64, usize, Vec<Vec<Complex64>>)> = Vec::new();
    for k in (0..n0).rev() {
        let a = k as f64 / n0 as f64;
        let b = (k + 1) as f64 / n0 as f64;
        let vals = table.pullbacks(z0, z1, &panel_params(rule, a, b), cfg.eval)?;
        stack.push((a, b, 0, vals));
    }
    while let Some((a, b, depth, vals)) = stack.pop() {
        let m = 0.5 * (a + b);
        let left = table.pullbacks(z0, z1, &panel_params(rule, a, m), cfg.eval)?;
        let right = table.pullbacks(z0, z1, &panel_params(rule, m, b), cfg.eval)?;
        let mut resolved = true;
        for k in 0..vals.len() {
            let (full, _) = panel_sum(rule, 0.5 * (b - a), &vals[k]);
            let (l, la) = panel_sum(rule, 0.5 * (m - a), &left[k]);
            let (r, ra) = panel_sum(rule, 0.5 * (b - m), &right[k]);
            let err = (full - l - r).norm();
            let floor = 1e-13 * (la + ra);
            if err > local_tol.max(floor) {
                resolved = false;
                break;
            }
        }
        if resolved || depth >= cfg.max_depth {
            out.push((a, b));
        } else {
            stack.push((m, b, depth + 1, right));
            stack.push((a, m, depth + 1, left));
        }
    }
    Ok(out)
}

/// Advances the running integrals `j` (J₀…J_s at the panel's left end)
/// across one panel.
fn step_panel(
    rule: &PanelRule,
    half: f64,
    pulls: &[Vec<Complex64>],
    j: &mut [Complex64],
    prev: &mut Vec<Complex64>,
    cur: &mut Vec<Complex64>,
    g: &mut [Complex64],
) {
    let n = rule.len();
    prev.iter_mut().for_each(|v| *v = Complex64::new(1.0, 0.0));
    for k in 1..j.len() {
        let f = &pulls[k - 1];
        for i in 0..n {
            g[i] = prev[i] * f[i];
        }
        for (i, slot) in cur.iter_mut().enumerate() {
            let row = rule.integ_row(i);
            let mut acc = Complex64::zero();
            for (q, gv) in row.iter().zip(g.iter()) {
                acc += gv * q;
            }
            *slot = j[k] + acc * half;
        }
        let mut total = Complex64::zero();
        for (w, gv) in rule.weights.iter().zip(g.iter()) {
            total += gv * w;
        }
        j[k] += total * half;
        std::mem::swap(prev, cur);
    }
}

/// One pass of the recurrence over a fixed grid; returns J₀(1)…J_s(1).
fn recurrence_pass(
    table: &LetterTable<'_>,
    segments: &[(Complex64, Complex64, Vec<(f64, f64)>)],
    rule: &PanelRule,
    split: usize,
    word_len: usize,
    opts: EvalOptions,
) -> Result<Vec<Complex64>> {
    let n = rule.len();
    let mut j = vec![Complex64::zero(); word_len + 1];
    j[0] = Complex64::new(1.0, 0.0);
    let mut prev = vec![Complex64::zero(); n];
    let mut cur = vec![Complex64::zero(); n];
    let mut g = vec![Complex64::zero(); n];
    for (z0, z1, panels) in segments {
        for &(a, b) in panels {
            let width = (b - a) / split as f64;
            for p in 0..split {
                let pa = a + width * p as f64;
                let pb = if p + 1 == split { b } else { pa + width };
                let pulls = table.pullbacks(*z0, *z1, &panel_params(rule, pa, pb), opts)?;
                step_panel(rule, 0.5 * (pb - pa), &pulls, &mut j, &mut prev, &mut cur, &mut g);
            }
        }
    }
    Ok(j)
}

/// ∫_p w₁…w_j for every prefix length j = 0…s, each with an error estimate.
pub fn prefix_integrals(path: &Path, word: &Word, cfg: &QuadratureConfig) -> Result<Vec<Estimate>> {
    cfg.validate()?;
    let s = word.len();
    if s == 0 {
        return Ok(vec![Estimate::exact(Complex64::new(1.0, 0.0))]);
    }
    let rule = PanelRule::cached(cfg.nodes_per_panel);
    let table = LetterTable::new(word);

    let mut segments = Vec::with_capacity(path.segment_count());
    for (z0, z1) in path.segments() {
        if z0 == z1 {
            continue;
        }
        let panels = adaptive_panels(&table, z0, z1, &rule, cfg)?;
        segments.push((z0, z1, panels));
    }

    let mut rounds: Vec<Vec<Complex64>> = Vec::with_capacity(cfg.refinement_rounds + 1);
    let passes = cfg.refinement_rounds.max(2);
    for r in 0..passes {
        rounds.push(recurrence_pass(&table, &segments, &rule, 1 << r, s, cfg.eval)?);
    }
    let last = &rounds[passes - 1];
    let before = &rounds[passes - 2];
    let estimates: Vec<Estimate> = last
        .iter()
        .zip(before)
        .map(|(v, u)| Estimate {
            value: *v,
            error: (v - u).norm(),
        })
        .collect();
    let worst = estimates.iter().map(|e| e.error).fold(0.0, f64::max);
    if worst > cfg.target_tol {
        return Err(Error::Precision(format!(
            "iterated integral of [{word}] along {path}: refinement stalled at error {worst:.3e} > {:.3e}",
            cfg.target_tol
        )));
    }
    Ok(estimates)
}

/// ∫_p w: the simplex integral of the word's pull-backs. The empty word
/// integrates to exactly 1.
pub fn iterated_integral(path: &Path, word: &Word, cfg: &QuadratureConfig) -> Result<Estimate> {
    let all = prefix_integrals(path, word, cfg)?;
    Ok(*all.last().unwrap())
}

/// ∫_β w_{j+1}…w_s for j = 0…s (index j), from one pass over the reversed
/// path: ∫_{β⁻¹} w_s…w_{j+1} = (−1)^{s−j} ∫_β w_{j+1}…w_s.
pub fn suffix_integrals(path: &Path, word: &Word, cfg: &QuadratureConfig) -> Result<Vec<Estimate>> {
    let s = word.len();
    let rev = prefix_integrals(&path.reverse(), &word.reversed(), cfg)?;
    Ok((0..=s)
        .map(|j| {
            let len = s - j;
            let e = rev[len];
            if len % 2 == 0 {
                e
            } else {
                e.scale(-1.0)
            }
        })
        .collect())
}

/// Right-hand side of the path-composition law:
/// ∫_α w + ∫_β w + Σ_{j=1}^{s−1} (∫_α w₁…w_j)(∫_β w_{j+1}…w_s).
pub fn compose(word: &Word, alpha: &Path, beta: &Path, cfg: &QuadratureConfig) -> Result<Estimate> {
    if alpha.end() != beta.start() {
        return Err(Error::EndpointMismatch {
            end: alpha.end(),
            start: beta.start(),
        });
    }
    let s = word.len();
    if s == 0 {
        return Ok(Estimate::exact(Complex64::new(1.0, 0.0)));
    }
    let pre = prefix_integrals(alpha, word, cfg)?;
    let suf = suffix_integrals(beta, word, cfg)?;
    // j = 0 and j = s terms are ∫_β w and ∫_α w (the other factor is 1).
    let mut total = Estimate::exact(Complex64::zero());
    for j in 0..=s {
        total = total.add(pre[j].mul(suf[j]));
    }
    Ok(total)
}

/// How group elements are turned into paths in ℍ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainPolicy {
    /// Only unmixed words (true homotopy functionals) are accepted.
    Strict,
    /// Mixed words are accepted and integrated along the canonical lift;
    /// the result then depends on that choice of path.
    CanonicalPath,
}

fn check_policy(word: &Word, policy: ChainPolicy) -> Result<()> {
    if policy == ChainPolicy::Strict && !word.is_unmixed() {
        return Err(Error::MixedWord(word.to_string()));
    }
    Ok(())
}

fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// ⟨∫w, x⟩ for x ∈ ℤ[Γ], lifting each g to the segment x₀ → g·x₀.
pub fn evaluate_on_chain(
    word: &Word,
    chain: &GroupRingElement,
    x0: Complex64,
    cfg: &QuadratureConfig,
    policy: ChainPolicy,
) -> Result<Estimate> {
    check_policy(word, policy)?;
    let mut total = Estimate::exact(Complex64::zero());
    for (g, coeff) in chain.terms() {
        let path = Path::line(x0, g.act(x0))?;
        let v = iterated_integral(&path, word, cfg)?;
        total = total.add(v.scale(big_to_f64(coeff)));
    }
    Ok(total)
}

/// The lift of g₁g₂…g_k: x₀ → g₁x₀ along a segment, then the Möbius images
/// under g₁…g_{i−1} of the segments x₀ → g_i x₀, each approximated by a
/// polyline with `refinement` pieces.
pub fn factored_lift(factors: &[GroupElement], x0: Complex64, refinement: usize) -> Result<Path> {
    let mut vertices = vec![x0];
    let mut prefix = GroupElement::identity();
    for g in factors {
        let piece = Path::line(x0, g.act(x0))?.mobius_image(&prefix, refinement);
        vertices.extend_from_slice(&piece.vertices()[1..]);
        prefix = &prefix * g;
    }
    if vertices.len() == 1 {
        vertices.push(x0);
    }
    Path::new(vertices)
}

/// Like [`evaluate_on_chain`], for the signed products of a subset
/// expansion, lifting each product through its factorization.
pub fn evaluate_on_factored_chain(
    word: &Word,
    terms: &[SignedProduct],
    x0: Complex64,
    refinement: usize,
    cfg: &QuadratureConfig,
    policy: ChainPolicy,
) -> Result<Estimate> {
    check_policy(word, policy)?;
    let mut total = Estimate::exact(Complex64::zero());
    for term in terms {
        let path = factored_lift(&term.factors, x0, refinement)?;
        let v = iterated_integral(&path, word, cfg)?;
        total = total.add(v.scale(term.sign as f64));
    }
    Ok(total)
}

/// Both sides of ⟨∫w₁…w_s, Π(γᵢ−1)⟩ = Π ⟨∫wᵢ, γᵢ−1⟩ for an unmixed word.
pub fn delta_product_check(
    letters: &[Letter],
    elements: &[GroupElement],
    x0: Complex64,
    cfg: &QuadratureConfig,
) -> Result<(Estimate, Estimate)> {
    if letters.len() != elements.len() || letters.is_empty() {
        return Err(Error::InvalidArgument(
            "need as many group elements as letters".into(),
        ));
    }
    let word = Word::new(letters.to_vec());
    let delta = crate::group_algebra::delta_product(elements);
    let lhs = evaluate_on_chain(&word, &delta.element, x0, cfg, ChainPolicy::Strict)?;
    let mut rhs = Estimate::exact(Complex64::new(1.0, 0.0));
    for (l, g) in letters.iter().zip(elements) {
        let single = Word::new(vec![l.clone()]);
        let p = evaluate_on_chain(
            &single,
            &GroupRingElement::delta(g),
            x0,
            cfg,
            ChainPolicy::Strict,
        )?;
        rhs = rhs.mul(p);
    }
    Ok((lhs, rhs))
}

/// All interleavings of u and v preserving the internal order of each.
pub fn shuffles(u: &Word, v: &Word) -> Vec<Word> {
    fn go(u: &[Letter], v: &[Letter], acc: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if u.is_empty() && v.is_empty() {
            out.push(Word::new(acc.clone()));
            return;
        }
        if let Some((first, rest)) = u.split_first() {
            acc.push(first.clone());
            go(rest, v, acc, out);
            acc.pop();
        }
        if let Some((first, rest)) = v.split_first() {
            acc.push(first.clone());
            go(u, rest, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&u.letters, &v.letters, &mut Vec::new(), &mut out);
    out
}

/// (∫_p u)(∫_p v) and Σ over shuffles σ of ∫_p σ.
pub fn shuffle_check(
    u: &Word,
    v: &Word,
    path: &Path,
    cfg: &QuadratureConfig,
) -> Result<(Estimate, Estimate)> {
    if u.len() + v.len() > 5 {
        return Err(Error::InvalidArgument(
            "shuffle check supports |u| + |v| <= 5".into(),
        ));
    }
    let product = iterated_integral(path, u, cfg)?.mul(iterated_integral(path, v, cfg)?);
    let mut sum = Estimate::exact(Complex64::zero());
    for w in shuffles(u, v) {
        sum = sum.add(iterated_integral(path, &w, cfg)?);
    }
    Ok((product, sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular_letters::{builtin_form, Orientation};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn dz_word(r: usize) -> Word {
        Word::new(vec![Letter::dz(Orientation::Hol); r])
    }

    fn factorial(r: usize) -> f64 {
        (1..=r).map(|k| k as f64).product()
    }

    #[test]
    fn empty_word_is_one() {
        let p = Path::line(c(0.0, 1.0), c(3.0, 2.0)).unwrap();
        let e = iterated_integral(&p, &Word::empty(), &QuadratureConfig::polynomial()).unwrap();
        assert_eq!(e.value, c(1.0, 0.0));
        assert_eq!(e.error, 0.0);
    }

    #[test]
    fn simplex_volumes() {
        let z0 = c(-0.5, 1.0);
        let z1 = c(1.5, 2.25);
        let p = Path::line(z0, z1).unwrap();
        let cfg = QuadratureConfig::polynomial();
        for r in 1..=5 {
            let got = iterated_integral(&p, &dz_word(r), &cfg).unwrap();
            let want = (z1 - z0).powu(r as u32) / factorial(r);
            assert!((got.value - want).norm() < 1e-12, "r={r}");
        }
    }

    #[test]
    fn zero_length_path_gives_zero() {
        let p = Path::line(c(0.0, 1.0), c(0.0, 1.0)).unwrap();
        let e = iterated_integral(&p, &dz_word(2), &QuadratureConfig::polynomial()).unwrap();
        assert_eq!(e.value, Complex64::zero());
    }

    #[test]
    fn polynomial_letter_antiderivative() {
        // ∫ z dz then dz: ∫₀ (t²/2 ... ) check against closed form along a segment
        // from 0+i to 1+i: ∫_{z0}^{z1} (∫_{z0}^{u} v dv) du.
        let z0 = c(0.0, 1.0);
        let z1 = c(1.0, 1.0);
        let w = Word::new(vec![
            Letter::polynomial(vec![c(1.0, 0.0), c(0.0, 0.0)], Orientation::Hol),
            Letter::dz(Orientation::Hol),
        ]);
        let got = iterated_integral(&Path::line(z0, z1).unwrap(), &w, &QuadratureConfig::polynomial())
            .unwrap();
        // ∫ (u²/2 − z0²/2) du from z0 to z1
        let want = (z1.powu(3) - z0.powu(3)) / 6.0 - z0 * z0 / 2.0 * (z1 - z0);
        assert!((got.value - want).norm() < 1e-12);
    }

    #[test]
    fn compose_splits_dz_dz() {
        let z0 = c(0.0, 1.0);
        let z1 = c(2.0, 3.0);
        let mid = (z0 + z1) * 0.5;
        let a = Path::line(z0, mid).unwrap();
        let b = Path::line(mid, z1).unwrap();
        let got = compose(&dz_word(2), &a, &b, &QuadratureConfig::polynomial()).unwrap();
        let l = z1 - z0;
        assert!((got.value - l * l / 2.0).norm() < 1e-12);
        let bad = compose(&dz_word(2), &b, &a, &QuadratureConfig::polynomial());
        assert!(matches!(bad, Err(Error::EndpointMismatch { .. })));
    }

    #[test]
    fn eisenstein_over_unit_translation() {
        let e = builtin_form("eis11", 400).unwrap();
        let w = Word::new(vec![Letter::form(e, Orientation::Hol)]);
        let z = c(0.2, 1.3);
        let got = iterated_integral(&Path::line(z, z + 1.0).unwrap(), &w, &QuadratureConfig::modular())
            .unwrap();
        assert!((got.value - c(-10.0, 0.0)).norm() < 1e-8, "{}", got.value);
    }

    #[test]
    fn mixed_word_rejected_on_strict_chain() {
        let f = builtin_form("cusp11", 100).unwrap();
        let w = Word::new(vec![
            Letter::form(f.clone(), Orientation::Hol),
            Letter::form(f, Orientation::Antihol),
        ]);
        let chain = GroupRingElement::delta(&GroupElement::translation());
        let r = evaluate_on_chain(&w, &chain, c(0.0, 2.0), &QuadratureConfig::modular(), ChainPolicy::Strict);
        assert!(matches!(r, Err(Error::MixedWord(_))));
        assert!(evaluate_on_chain(
            &w,
            &chain,
            c(0.0, 2.0),
            &QuadratureConfig::modular(),
            ChainPolicy::CanonicalPath
        )
        .is_ok());
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(&dz_word(1), &dz_word(1)).len(), 2);
        assert_eq!(shuffles(&dz_word(1), &dz_word(2)).len(), 3);
        assert_eq!(shuffles(&dz_word(2), &dz_word(3)).len(), 10);
        assert_eq!(shuffles(&Word::empty(), &dz_word(2)).len(), 1);
    }

    #[test]
    fn shuffle_dz() {
        let z0 = c(0.0, 1.0);
        let z1 = c(1.0, 2.0);
        let p = Path::line(z0, z1).unwrap();
        let (prod, sum) = shuffle_check(&dz_word(1), &dz_word(2), &p, &QuadratureConfig::polynomial()).unwrap();
        let l = z1 - z0;
        assert!((prod.value - l.powu(3) / 2.0).norm() < 1e-12);
        assert!((prod.value - sum.value).norm() < 1e-12);
        assert!(shuffle_check(&dz_word(3), &dz_word(3), &p, &QuadratureConfig::polynomial()).is_err());
    }

    #[test]
    fn word_text_round_trip() {
        let w = Word::parse("cusp11:hol,poly(1,0):antihol,eis11:antihol", 20).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "cusp11:hol,poly(1,0):antihol,eis11:antihol");
        assert!(!w.is_unmixed());
        assert_eq!(w.hol_count(), 1);
        assert!(Word::parse("", 20).unwrap().is_empty());
    }

    #[test]
    fn invalid_config_rejected() {
        let p = Path::line(c(0.0, 1.0), c(1.0, 1.0)).unwrap();
        let cfg = QuadratureConfig {
            nodes_per_panel: 1,
            ..QuadratureConfig::default()
        };
        assert!(iterated_integral(&p, &dz_word(1), &cfg).is_err());
    }
}
