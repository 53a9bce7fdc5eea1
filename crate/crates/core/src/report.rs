//! One-line verification records shared by the certificates and the CLI.

use std::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub id: String,
    pub residual: f64,
    pub tol: f64,
}

impl CheckLine {
    pub fn new(id: impl Into<String>, residual: f64, tol: f64) -> Self {
        CheckLine {
            id: id.into(),
            residual,
            tol,
        }
    }

    /// NaN residuals fail.
    pub fn passed(&self) -> bool {
        self.residual <= self.tol
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.id,
            fmt_real(self.residual),
            fmt_real(self.tol),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// `%.15g`-style formatting: 15 significant digits, trailing zeros
/// trimmed, exponent form outside [1e-5, 1e15). Negative zero prints as 0.
pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    const DIGITS: i32 = 15;
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if exp < -5 || exp >= DIGITS {
        let m = trim_zeros(mantissa);
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// "re,im" with [`fmt_real`] on each part.
pub fn fmt_complex(z: Complex64) -> String {
    format!("{},{}", fmt_real(z.re), fmt_real(z.im))
}
