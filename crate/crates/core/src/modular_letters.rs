//! Weight-2 modular forms on Γ₀(N) as truncated q-expansions, their
//! evaluation anywhere in ℍ, and the 1-form letters built from them.
//!
//! Evaluation first moves the point to the highest member of its Γ₀(N)-orbit
//! (see [`height_lift`]) so the q-series converges quickly, then undoes the
//! move with the weight-2 automorphy factor.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group_algebra::{complete_bottom_row, mobius, GroupElement};

/// Default number of stored coefficients beyond a₀.
pub const DEFAULT_TRUNCATION: usize = 400;
/// Growth constant C in the assumed bound |a_n| ≤ C·n².
pub const DEFAULT_TAIL_CONSTANT: f64 = 300.0;
/// Lowest lifted height at which evaluation is attempted for level 11.
pub const DEFAULT_MIN_HEIGHT: f64 = 0.05;

const REDUCTION_CAP: usize = 10_000;

/// A weight-2 form as Σ_{n ≤ T} a_n qⁿ with integer coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct QExpansion {
    name: String,
    level: u64,
    weight: u32,
    coeffs: Vec<BigInt>,
    float_coeffs: Vec<f64>,
    tail_constant: f64,
}

impl QExpansion {
    pub fn new(
        name: impl Into<String>,
        level: u64,
        coeffs: Vec<BigInt>,
        tail_constant: f64,
    ) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument(
                "a q-expansion needs truncation T >= 1".into(),
            ));
        }
        if !(tail_constant > 0.0) {
            return Err(Error::InvalidArgument(
                "tail constant must be positive".into(),
            ));
        }
        if level < 1 {
            return Err(Error::InvalidArgument("level must be positive".into()));
        }
        let float_coeffs = coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect();
        Ok(QExpansion {
            name: name.into(),
            level,
            weight: 2,
            coeffs,
            float_coeffs,
            tail_constant,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn level(&self) -> u64 {
        self.level
    }
    pub fn weight(&self) -> u32 {
        self.weight
    }
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }
    pub fn tail_constant(&self) -> f64 {
        self.tail_constant
    }
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }
    pub fn coefficient(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    /// Σ_{n ≤ T} a_n qⁿ at q = e^{2πiw}, truncated as soon as the assumed
    /// tail C·Σ_{n>M} n²|q|ⁿ drops below `tol`.
    pub fn eval_series(&self, w: Complex64, tol: f64) -> Result<Complex64> {
        let q = (Complex64::i() * (2.0 * PI) * w).exp();
        let r = q.norm();
        let cutoff = self.series_cutoff(r, tol).ok_or_else(|| {
            Error::Precision(format!(
                "{}: truncation {} cannot reach tolerance {tol:e} at height {}",
                self.name,
                self.truncation(),
                w.im
            ))
        })?;
        let mut acc = Complex64::zero();
        for a in self.float_coeffs[..=cutoff].iter().rev() {
            acc = acc * q + a;
        }
        Ok(acc)
    }

    /// Smallest M ≤ T such that C·Σ_{n>M} n² rⁿ ≤ tol.
    fn series_cutoff(&self, r: f64, tol: f64) -> Option<usize> {
        if r == 0.0 {
            return Some(0);
        }
        let t = self.truncation();
        // term = (M+1)² r^{M+1}; ratio bound ((M+2)/(M+1))² r for later terms.
        let mut pow = r;
        for m in 0..=t {
            let m1 = (m + 1) as f64;
            let ratio = ((m1 + 1.0) / m1).powi(2) * r;
            if ratio < 1.0 {
                let bound = self.tail_constant * m1 * m1 * pow / (1.0 - ratio);
                if bound <= tol {
                    return Some(m);
                }
            }
            pow *= r;
        }
        None
    }
}

/// q·Π_{n≥1}(1−qⁿ)²(1−q^{11n})² to order q^T: the weight-2 cusp form of
/// level 11.
pub fn eta_square_product(truncation: usize) -> QExpansion {
    assert!(truncation >= 1, "truncation must be at least 1");
    // Product part has degrees 0..T-1; the leading q shifts it to 1..T.
    let len = truncation;
    let mut poly = vec![BigInt::zero(); len];
    poly[0] = BigInt::from(1);
    let mut times_one_minus = |step: usize| {
        for k in (step..len).rev() {
            let lower = poly[k - step].clone();
            poly[k] -= lower;
        }
    };
    for n in 1..len {
        times_one_minus(n);
        times_one_minus(n);
        if 11 * n < len {
            times_one_minus(11 * n);
            times_one_minus(11 * n);
        }
    }
    let mut coeffs = Vec::with_capacity(truncation + 1);
    coeffs.push(BigInt::zero());
    coeffs.extend(poly);
    QExpansion::new("cusp11", 11, coeffs, DEFAULT_TAIL_CONSTANT).unwrap()
}

/// Divisor sums σ₁(n) for 0 ≤ n ≤ limit (σ₁(0) = 0), by sieving.
fn divisor_sums(limit: usize) -> Vec<u64> {
    let mut sigma = vec![0u64; limit + 1];
    for d in 1..=limit {
        for m in (d..=limit).step_by(d) {
            sigma[m] += d as u64;
        }
    }
    sigma
}

/// E₂(z) − N·E₂(Nz): b₀ = 1 − N, b_n = −24(σ₁(n) − N·σ₁(n/N)).
pub fn eisenstein_level(level: u64, truncation: usize) -> Result<QExpansion> {
    if level < 2 {
        return Err(Error::InvalidArgument(
            "Eisenstein level must be at least 2".into(),
        ));
    }
    if truncation < 1 {
        return Err(Error::InvalidArgument("truncation must be at least 1".into()));
    }
    let sigma = divisor_sums(truncation);
    let n_level = level as usize;
    let mut coeffs = Vec::with_capacity(truncation + 1);
    coeffs.push(BigInt::from(1i64 - level as i64));
    for n in 1..=truncation {
        let mut s = BigInt::from(sigma[n]);
        if n % n_level == 0 {
            s -= BigInt::from(level) * BigInt::from(sigma[n / n_level]);
        }
        coeffs.push(s * BigInt::from(-24));
    }
    QExpansion::new(
        format!("eis{level}"),
        level,
        coeffs,
        DEFAULT_TAIL_CONSTANT,
    )
}

/// Looks up a built-in form by its CLI name.
pub fn builtin_form(name: &str, truncation: usize) -> Result<Arc<QExpansion>> {
    match name {
        "cusp11" => Ok(Arc::new(eta_square_product(truncation))),
        "eis11" => Ok(Arc::new(eisenstein_level(11, truncation)?)),
        other => Err(Error::Parse(format!(
            "unknown form {other:?} (built-in forms: cusp11, eis11)"
        ))),
    }
}

/// Result of moving a point up its Γ₀(N)-orbit: `w = γ·z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lift {
    pub matrix: [i64; 4],
    pub point: Complex64,
}

impl Lift {
    pub fn element(&self) -> GroupElement {
        let [a, b, c, d] = self.matrix;
        GroupElement::from_i64(a, b, c, d).expect("lift matrices have determinant 1")
    }
}

fn check_upper(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() && z.im > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(z))
    }
}

fn mat_mul(x: [i64; 4], y: [i64; 4]) -> [i64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

fn as_f64(m: [i64; 4]) -> [f64; 4] {
    [m[0] as f64, m[1] as f64, m[2] as f64, m[3] as f64]
}

/// Standard reduction into the SL₂(ℤ) fundamental domain
/// {|Re z| ≤ ½, |z| ≥ 1}; returns σ with σz in the domain.
pub fn reduce_sl2(z: Complex64) -> Result<Lift> {
    check_upper(z)?;
    let mut m = [1i64, 0, 0, 1];
    let mut w = z;
    for _ in 0..REDUCTION_CAP {
        let n = w.re.round();
        if n != 0.0 {
            let k = n as i64;
            m = mat_mul([1, -k, 0, 1], m);
        }
        w = mobius(as_f64(m), z);
        if w.norm_sqr() < 1.0 - 1e-14 {
            m = mat_mul([0, -1, 1, 0], m);
            w = mobius(as_f64(m), z);
        } else {
            return Ok(Lift { matrix: m, point: w });
        }
    }
    Err(Error::Reduction {
        z,
        cap: REDUCTION_CAP,
    })
}

/// Lift through the coset representatives {1} ∪ {S·Tʲ : 0 ≤ j < N} of
/// Γ₀(N) in SL₂(ℤ): reduce with [`reduce_sl2`] and keep the representative
/// that lands in Γ₀(N). Only valid for prime N.
pub fn coset_lift(z: Complex64, level: u64) -> Result<Lift> {
    let sigma = reduce_sl2(z)?;
    let n = level as i64;
    let mut best: Option<Lift> = None;
    let candidates =
        std::iter::once([1i64, 0, 0, 1]).chain((0..n).map(|j| mat_mul([0, -1, 1, 0], [1, j, 0, 1])));
    for rho in candidates {
        let m = mat_mul(rho, sigma.matrix);
        if m[2].rem_euclid(n) != 0 {
            continue;
        }
        let w = mobius(as_f64(m), z);
        if best.map_or(true, |b| w.im > b.point.im) {
            best = Some(Lift { matrix: m, point: w });
        }
    }
    best.ok_or(Error::Reduction {
        z,
        cap: REDUCTION_CAP,
    })
}

/// Moves z to the highest point of its Γ₀(N)-orbit.
///
/// Im(γz) = Im z / |cz+d|², so the best γ has the shortest lower row (c, d)
/// with N | c and gcd(c, d) = 1. Writing c = N·c', the values c'·Nz + d form
/// a lattice in ℂ; a Lagrange-reduced basis of it contains the optimum among
/// its first few combinations. The result is finally translated so that
/// |Re w| ≤ ½.
pub fn height_lift(z: Complex64, level: u64) -> Result<(GroupElement, Complex64)> {
    let lift = lattice_lift(z, level)?;
    Ok((lift.element(), lift.point))
}

pub(crate) fn lattice_lift(z: Complex64, level: u64) -> Result<Lift> {
    check_upper(z)?;
    let n = level as i64;
    let nz = z * n as f64;
    let value = |v: (i64, i64)| nz * v.0 as f64 + v.1 as f64;

    // Basis vectors as (c', d) coefficient pairs.
    let mut u = (0i64, 1i64);
    let mut v = (1i64, 0i64);
    let mut steps = 0;
    loop {
        if value(v).norm_sqr() < value(u).norm_sqr() {
            std::mem::swap(&mut u, &mut v);
        }
        let (vu, vv) = (value(u), value(v));
        let mu = ((vv * vu.conj()).re / vu.norm_sqr()).round();
        if mu == 0.0 || !mu.is_finite() {
            break;
        }
        let k = mu as i64;
        let next = (
            v.0.checked_sub(k.checked_mul(u.0).ok_or(Error::Reduction { z, cap: steps })?),
            v.1.checked_sub(k.checked_mul(u.1).ok_or(Error::Reduction { z, cap: steps })?),
        );
        match next {
            (Some(a), Some(b)) => v = (a, b),
            _ => return Err(Error::Reduction { z, cap: steps }),
        }
        if value(v).norm_sqr() >= value(u).norm_sqr() {
            break;
        }
        steps += 1;
        if steps > REDUCTION_CAP {
            return Err(Error::Reduction {
                z,
                cap: REDUCTION_CAP,
            });
        }
    }

    let mut best: Option<((i64, i64), f64)> = None;
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            if a == 0 && b == 0 {
                continue;
            }
            let cand = (a * u.0 + b * v.0, a * u.1 + b * v.1);
            let c = cand.0 * n;
            if c.gcd(&cand.1) != 1 {
                continue;
            }
            let len = value(cand).norm_sqr();
            if best.map_or(true, |(_, l)| len < l) {
                best = Some((cand, len));
            }
        }
    }
    let ((cp, d), _) = best.ok_or(Error::Reduction {
        z,
        cap: REDUCTION_CAP,
    })?;
    let mut m = complete_bottom_row(cp * n, d).expect("coprime lower row");
    let w = mobius(as_f64(m), z);
    let k = w.re.round() as i64;
    m = [m[0] - k * m[2], m[1] - k * m[3], m[2], m[3]];
    let point = Complex64::new(w.re - k as f64, w.im);
    Ok(Lift { matrix: m, point })
}

/// Options for pointwise evaluation of q-expansions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Bound on the truncated tail of the series at the lifted point.
    pub tol: f64,
    /// Lifted points below this height are rejected.
    pub min_height: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: 1e-13,
            min_height: DEFAULT_MIN_HEIGHT,
        }
    }
}

/// f(z) for a weight-2 form: lift to w = γz and return (cz+d)^{-2}·f(w).
pub fn eval_form(f: &QExpansion, z: Complex64, opts: EvalOptions) -> Result<Complex64> {
    let lift = lattice_lift(z, f.level())?;
    if lift.point.im < opts.min_height {
        return Err(Error::Precision(format!(
            "{}: lifted height {:.3e} of z = {z} is below the minimum {}",
            f.name(),
            lift.point.im,
            opts.min_height
        )));
    }
    let series = f.eval_series(lift.point, opts.tol)?;
    let [_, _, c, d] = lift.matrix;
    let j = z * c as f64 + d as f64;
    Ok(series / (j * j))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// f(z) dz
    Hol,
    /// conj(f(z)) dz̄
    Antihol,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Hol => Orientation::Antihol,
            Orientation::Antihol => Orientation::Hol,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Hol => "hol",
            Orientation::Antihol => "antihol",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LetterSource {
    Form(Arc<QExpansion>),
    /// Coefficients of p(z), highest degree first.
    Polynomial(Vec<Complex64>),
}

/// A 1-form f(z)dz or its conjugate, used as an iterated-integral integrand.
#[derive(Debug, Clone, PartialEq)]
pub struct Letter {
    pub source: LetterSource,
    pub orientation: Orientation,
}

impl Letter {
    pub fn form(f: Arc<QExpansion>, orientation: Orientation) -> Self {
        Letter {
            source: LetterSource::Form(f),
            orientation,
        }
    }

    pub fn polynomial(coeffs: Vec<Complex64>, orientation: Orientation) -> Self {
        Letter {
            source: LetterSource::Polynomial(coeffs),
            orientation,
        }
    }

    /// The constant polynomial letter dz (or dz̄).
    pub fn dz(orientation: Orientation) -> Self {
        Self::polynomial(vec![Complex64::new(1.0, 0.0)], orientation)
    }

    pub fn is_modular(&self) -> bool {
        matches!(self.source, LetterSource::Form(_))
    }

    pub fn conjugate(&self) -> Self {
        Letter {
            source: self.source.clone(),
            orientation: self.orientation.flipped(),
        }
    }

    /// The underlying holomorphic function f at z.
    pub fn holomorphic_value(&self, z: Complex64, opts: EvalOptions) -> Result<Complex64> {
        match &self.source {
            LetterSource::Form(f) => eval_form(f, z, opts),
            LetterSource::Polynomial(p) => Ok(p
                .iter()
                .fold(Complex64::zero(), |acc, a| acc * z + a)),
        }
    }

    /// Pull-back of the letter along t ↦ z₀ + t(z₁ − z₀), as a multiple of dt.
    pub fn pullback(
        &self,
        z0: Complex64,
        z1: Complex64,
        t: f64,
        opts: EvalOptions,
    ) -> Result<Complex64> {
        let dz = z1 - z0;
        let z = z0 + dz * t;
        let v = self.holomorphic_value(z, opts)? * dz;
        Ok(match self.orientation {
            Orientation::Hol => v,
            Orientation::Antihol => v.conj(),
        })
    }

    /// Parses "cusp11:hol", "eis11:antihol" or "poly(1,0):hol".
    pub fn parse(text: &str, truncation: usize) -> Result<Self> {
        let text = text.trim();
        let (source, orient) = text
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("letter {text:?} lacks \":orientation\"")))?;
        let orientation = match orient.trim() {
            "hol" => Orientation::Hol,
            "antihol" => Orientation::Antihol,
            other => return Err(Error::Parse(format!("unknown orientation {other:?}"))),
        };
        let source = source.trim();
        if let Some(inner) = source.strip_prefix("poly(").and_then(|s| s.strip_suffix(')')) {
            let coeffs = inner
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<f64>()
                        .map(|x| Complex64::new(x, 0.0))
                        .map_err(|e| Error::Parse(format!("bad polynomial coefficient {c:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Letter::polynomial(coeffs, orientation));
        }
        Ok(Letter::form(builtin_form(source, truncation)?, orientation))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            LetterSource::Form(q) => write!(f, "{}:{}", q.name(), self.orientation),
            LetterSource::Polynomial(p) => {
                let parts: Vec<String> = p
                    .iter()
                    .map(|c| {
                        if c.im == 0.0 {
                            format!("{}", c.re)
                        } else {
                            format!("{}{:+}i", c.re, c.im)
                        }
                    })
                    .collect();
                write!(f, "poly({}):{}", parts.join(","), self.orientation)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cusp_form_leading_coefficients() {
        let f = eta_square_product(5);
        let got: Vec<i64> = f.coefficients().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(got, vec![0, 1, -2, -1, 2, 1]);
        let f1 = eta_square_product(1);
        assert_eq!(f1.coefficients(), &[BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn eisenstein_coefficients() {
        let e = eisenstein_level(11, 12).unwrap();
        assert_eq!(e.coefficient(0), Some(&BigInt::from(-10)));
        assert_eq!(e.coefficient(2), Some(&BigInt::from(-72)));
        assert_eq!(e.coefficient(11), Some(&BigInt::from(-24)));
        assert!(eisenstein_level(1, 5).is_err());
    }

    #[test]
    fn stored_coefficients_respect_tail_constant() {
        for f in [eta_square_product(400), eisenstein_level(11, 400).unwrap()] {
            for (n, a) in f.float_coeffs.iter().enumerate().skip(1) {
                assert!(a.abs() <= f.tail_constant() * (n * n) as f64, "{} a_{n}", f.name());
            }
        }
    }

    #[test]
    fn height_lift_examples() {
        let (g, w) = height_lift(c(5.0, 1.0), 11).unwrap();
        assert_eq!(g, GroupElement::translation_by(-5));
        assert!((w - c(0.0, 1.0)).norm() < 1e-14);

        let (g, w) = height_lift(c(0.0, 2.0), 11).unwrap();
        assert!(g.is_identity());
        assert_eq!(w, c(0.0, 2.0));

        let b = GroupElement::from_i64(4, 1, 11, 3).unwrap();
        let (g, w) = height_lift(b.act(c(0.0, 1.0)), 11).unwrap();
        assert!(g.in_gamma0(11));
        assert!(w.im >= 1.0 - 1e-12);
    }

    #[test]
    fn lattice_lift_beats_coset_lift() {
        // A point whose coset lift needs S·T¹⁰.
        let z = c(-0.4, 0.9);
        let st10 = GroupElement::from_i64(0, -1, 1, 10).unwrap();
        let p = st10.inverse().act(z);
        let coset = coset_lift(p, 11).unwrap();
        let lattice = lattice_lift(p, 11).unwrap();
        assert!(lattice.point.im >= coset.point.im - 1e-12);
        assert!(lattice.point.im > 0.05);
    }

    #[test]
    fn reduce_sl2_lands_in_fundamental_domain() {
        for z in [c(0.3, 0.01), c(-7.2, 0.4), c(0.49, 0.87), c(2.0 / 3.0, 1e-4)] {
            let l = reduce_sl2(z).unwrap();
            assert!(l.point.re.abs() <= 0.5 + 1e-9);
            assert!(l.point.norm() >= 1.0 - 1e-9);
        }
    }

    #[test]
    fn lower_half_plane_is_rejected() {
        assert!(matches!(height_lift(c(0.0, -1.0), 11), Err(Error::Domain(_))));
        let f = eta_square_product(20);
        assert!(eval_form(&f, c(0.0, 0.0), EvalOptions::default()).is_err());
    }

    #[test]
    fn eval_limits_at_infinity() {
        let opts = EvalOptions::default();
        let e = eisenstein_level(11, 400).unwrap();
        let f = eta_square_product(400);
        let z = c(0.3, 12.0);
        assert!((eval_form(&e, z, opts).unwrap() - c(-10.0, 0.0)).norm() < 1e-12);
        assert!(eval_form(&f, z, opts).unwrap().norm() < 1e-12);
    }

    #[test]
    fn truncation_too_short_is_a_precision_error() {
        let f = eta_square_product(2);
        let r = eval_form(&f, c(0.0, 0.9), EvalOptions::default());
        assert!(matches!(r, Err(Error::Precision(_))));
    }

    #[test]
    fn low_lift_is_a_precision_error() {
        // Near the cusp 0, which is not Γ₀(11)-equivalent to ∞.
        let f = eta_square_product(400);
        let r = eval_form(&f, c(0.0, 0.001), EvalOptions::default());
        assert!(matches!(r, Err(Error::Precision(_))));
    }

    #[test]
    fn polynomial_pullbacks() {
        let opts = EvalOptions::default();
        let z0 = c(0.2, 1.0);
        let z1 = c(-1.0, 2.5);
        let hol = Letter::dz(Orientation::Hol);
        let anti = Letter::dz(Orientation::Antihol);
        for t in [0.0, 0.3, 1.0] {
            assert_eq!(hol.pullback(z0, z1, t, opts).unwrap(), z1 - z0);
            assert_eq!(anti.pullback(z0, z1, t, opts).unwrap(), (z1 - z0).conj());
        }
    }

    #[test]
    fn cusp_pullback_is_periodic() {
        let opts = EvalOptions::default();
        let l = Letter::form(Arc::new(eta_square_product(400)), Orientation::Hol);
        let a = l.pullback(c(0.0, 1.0), c(1.0, 1.0), 0.0, opts).unwrap();
        let b = l.pullback(c(0.0, 1.0), c(1.0, 1.0), 1.0, opts).unwrap();
        assert!((a - b).norm() < 1e-13);
    }

    #[test]
    fn letter_text_round_trip() {
        for s in ["cusp11:hol", "eis11:antihol", "poly(1,0):hol"] {
            assert_eq!(Letter::parse(s, 30).unwrap().to_string(), s);
        }
        assert!(Letter::parse("cusp12:hol", 30).is_err());
        assert!(Letter::parse("cusp11", 30).is_err());
        assert!(Letter::parse("cusp11:sideways", 30).is_err());
    }
}
