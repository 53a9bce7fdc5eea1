//! Higher-order automorphic forms F_I(z) = ⟨∫w_I, {x₀, z}⟩, the slash
//! action, the map ψ, order certificates, period matrices and the dual
//! sections Λ_L.
//!
//! Only unmixed words give numerically constructible F_I: with all letters
//! of one orientation every wedge product vanishes, so the bare iterated
//! integral is already a homotopy functional on the simply connected ℍ.
//! For mixed index words ψ is taken from the period-product formula.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::chen::{iterated_integral, Estimate, QuadratureConfig, Word};
use crate::error::{Error, Result};
use crate::group_algebra::{delta_product, GroupElement, GroupRingElement};
use crate::modular_letters::Letter;
use crate::path::Path;
use crate::report::CheckLine;

/// Default constancy sample points {2i, ½+2i, 3i}.
pub fn default_z_samples() -> Vec<Complex64> {
    vec![
        Complex64::new(0.0, 2.0),
        Complex64::new(0.5, 2.0),
        Complex64::new(0.0, 3.0),
    ]
}

/// F(z) = ∫ along x₀ → z of an unmixed word; expected to lie in M₀^{s+1}.
#[derive(Debug, Clone)]
pub struct HigherOrderForm {
    word: Word,
    basepoint: Complex64,
    cfg: QuadratureConfig,
}

impl HigherOrderForm {
    pub fn new(word: Word, basepoint: Complex64, cfg: QuadratureConfig) -> Result<Self> {
        if !word.is_unmixed() {
            return Err(Error::MixedWord(word.to_string()));
        }
        if !(basepoint.im > 0.0) {
            return Err(Error::Domain(basepoint));
        }
        cfg.validate()?;
        Ok(HigherOrderForm {
            word,
            basepoint,
            cfg,
        })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn basepoint(&self) -> Complex64 {
        self.basepoint
    }

    pub fn config(&self) -> &QuadratureConfig {
        &self.cfg
    }

    /// s + 1 for a word of length s.
    pub fn order_tag(&self) -> usize {
        self.word.len() + 1
    }

    pub fn eval(&self, z: Complex64) -> Result<Estimate> {
        iterated_integral(&Path::line(self.basepoint, z)?, &self.word, &self.cfg)
    }

    /// (F|₀ x)(z) = Σ n_g F(gz).
    pub fn slash_eval(&self, x: &GroupRingElement, z: Complex64) -> Result<Estimate> {
        let mut total = Estimate::exact(Complex64::zero());
        for (g, coeff) in x.terms() {
            total = total.add(self.eval(g.act(z))?.scale(big_to_f64(coeff)));
        }
        Ok(total)
    }

    /// (F|₀(γ₁−1)…(γ_s−1))(z) for a tuple as long as the word.
    pub fn psi_image(&self, tuple: &[GroupElement], z: Complex64) -> Result<Estimate> {
        if tuple.len() != self.word.len() {
            return Err(Error::InvalidArgument(format!(
                "ψ needs a {}-tuple, got {} elements",
                self.word.len(),
                tuple.len()
            )));
        }
        if tuple.is_empty() {
            return self.eval(z);
        }
        self.slash_eval(&delta_product(tuple).element, z)
    }
}

/// (f|_k x)(z) = Σ n_g (c_g z + d_g)^{−k} f(g z) for a fixed group-ring
/// element, with entries converted to floats once.
#[derive(Debug, Clone)]
pub struct Slash {
    weight: i32,
    terms: Vec<(f64, GroupElement)>,
}

impl Slash {
    pub fn new(weight: i32, x: &GroupRingElement) -> Self {
        Slash {
            weight,
            terms: x
                .terms()
                .map(|(g, c)| (big_to_f64(c), g.clone()))
                .collect(),
        }
    }

    pub fn apply<F: Fn(Complex64) -> Complex64>(&self, f: F, z: Complex64) -> Complex64 {
        self.terms.iter().fold(Complex64::zero(), |acc, (c, g)| {
            acc + g.automorphy_factor(z).powi(-self.weight) * f(g.act(z)) * *c
        })
    }

    pub fn try_apply<F: Fn(Complex64) -> Result<Complex64>>(
        &self,
        f: F,
        z: Complex64,
    ) -> Result<Complex64> {
        let mut acc = Complex64::zero();
        for (c, g) in &self.terms {
            acc += g.automorphy_factor(z).powi(-self.weight) * f(g.act(z))? * *c;
        }
        Ok(acc)
    }
}

/// f|_k x as a new function.
pub fn slash<F>(f: F, weight: i32, x: &GroupRingElement) -> impl Fn(Complex64) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
{
    let action = Slash::new(weight, x);
    move |z| action.apply(&f, z)
}

fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// ∫ of one closed letter along z → gz.
pub fn period(
    letter: &Letter,
    g: &GroupElement,
    z: Complex64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    iterated_integral(
        &Path::line(z, g.act(z))?,
        &Word::new(vec![letter.clone()]),
        cfg,
    )
}

/// Π_k period(w_k, γ_k): the value ψ must take by the product formula.
pub fn period_product(
    letters: &[Letter],
    tuple: &[GroupElement],
    z: Complex64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let mut acc = Estimate::exact(Complex64::new(1.0, 0.0));
    for (l, g) in letters.iter().zip(tuple) {
        acc = acc.mul(period(l, g, z, cfg)?);
    }
    Ok(acc)
}

fn tuple_label(tuple: &[GroupElement]) -> String {
    tuple
        .iter()
        .map(|g| format!("({g})"))
        .collect::<Vec<_>>()
        .join("")
}

/// All `len`-tuples over `n` symbols in lexicographic order.
pub fn all_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let total = n.pow(len as u32);
    (0..total).map(|idx| index_tuple(idx, n, len)).collect()
}

/// Linear index Σ i_k·n^{len−1−k}, first entry most significant (the
/// Kronecker-product ordering).
pub fn tuple_index(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn index_tuple(mut idx: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    out
}

/// `count` tuples spread evenly over the lexicographic list.
pub fn sample_tuples(n: usize, len: usize, count: usize) -> Vec<Vec<usize>> {
    let total = n.pow(len as u32);
    if count >= total {
        return all_tuples(n, len);
    }
    (0..count)
        .map(|k| index_tuple(k * total / count, n, len))
        .collect()
}

/// Numerical evidence that F lies in M̃₀^{s+1}.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub lines: Vec<CheckLine>,
    failure: Option<(String, Complex64)>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(CheckLine::passed)
    }

    /// The first failing check as a [`Error::CertificateFailure`].
    pub fn check(&self) -> Result<()> {
        match (&self.failure, self.lines.iter().find(|l| !l.passed())) {
            (Some((tuple, z)), Some(line)) => Err(Error::CertificateFailure {
                tuple: tuple.clone(),
                z: *z,
                residual: line.residual,
                tol: line.tol,
            }),
            _ => Ok(()),
        }
    }
}

/// Checks |F|₀δ(z)| ≤ tol for δ = Π^{s+1}(γ−1) over `tuple_count` sampled
/// (s+1)-tuples and every z sample, and that the ψ-image on sampled
/// s-tuples does not move across the z samples.
pub fn order_certificate(
    form: &HigherOrderForm,
    elements: &[GroupElement],
    z_samples: &[Complex64],
    tuple_count: usize,
    tol: f64,
) -> Result<CertificateReport> {
    if elements.is_empty() || z_samples.is_empty() {
        return Err(Error::InvalidArgument(
            "certificate needs sample elements and points".into(),
        ));
    }
    let s = form.word().len();
    let mut jobs: Vec<(String, Vec<GroupElement>, Option<Complex64>)> = Vec::new();
    for t in sample_tuples(elements.len(), s + 1, tuple_count) {
        let tuple: Vec<GroupElement> = t.iter().map(|&i| elements[i].clone()).collect();
        for &z in z_samples {
            jobs.push((format!("vanish{}", tuple_label(&tuple)), tuple.clone(), Some(z)));
        }
    }
    if s >= 1 {
        for t in sample_tuples(elements.len(), s, tuple_count) {
            let tuple: Vec<GroupElement> = t.iter().map(|&i| elements[i].clone()).collect();
            jobs.push((format!("constant{}", tuple_label(&tuple)), tuple, None));
        }
    }

    let results: Vec<Result<(CheckLine, Complex64)>> = jobs
        .par_iter()
        .map(|(label, tuple, z)| match z {
            Some(z) => {
                let delta = delta_product(tuple);
                let v = form.slash_eval(&delta.element, *z)?;
                Ok((
                    CheckLine::new(
                        format!("ordercert/{}/{label}/z={},{}", form.word(), z.re, z.im),
                        v.value.norm(),
                        tol,
                    ),
                    *z,
                ))
            }
            None => {
                let values = z_samples
                    .iter()
                    .map(|&z| form.psi_image(tuple, z).map(|e| e.value))
                    .collect::<Result<Vec<_>>>()?;
                let spread = spread(&values);
                Ok((
                    CheckLine::new(format!("ordercert/{}/{label}", form.word()), spread, tol),
                    z_samples[0],
                ))
            }
        })
        .collect();

    let mut lines = Vec::with_capacity(results.len());
    let mut failure = None;
    for (r, (_, tuple, _)) in results.into_iter().zip(&jobs) {
        let (line, z) = r?;
        if failure.is_none() && !line.passed() {
            failure = Some((tuple_label(tuple), z));
        }
        lines.push(line);
    }
    Ok(CertificateReport { lines, failure })
}

/// Largest pairwise distance in a set of values.
pub fn spread(values: &[Complex64]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            worst = worst.max((a - b).norm());
        }
    }
    worst
}

/// Periods P[r][j] = ∫_{z → γ_j z} w_r.
#[derive(Debug, Clone)]
pub struct PeriodMatrix {
    pub letters: Vec<Letter>,
    pub elements: Vec<GroupElement>,
    pub entries: DMatrix<Complex64>,
    pub errors: DMatrix<f64>,
    /// ‖P‖₁‖P⁻¹‖₁ for square matrices (∞ if singular), NaN otherwise.
    pub condition_estimate: f64,
}

pub const DEFAULT_CONDITION_BOUND: f64 = 1e10;

impl PeriodMatrix {
    pub fn is_square(&self) -> bool {
        self.entries.is_square()
    }

    pub fn determinant(&self) -> Complex64 {
        self.entries.determinant()
    }

    /// |det P| / Π_r ‖row_r‖₂; 1 for orthogonal rows, 0 when singular.
    pub fn row_normalized_det(&self) -> f64 {
        let mut norms = 1.0;
        for r in 0..self.entries.nrows() {
            norms *= self.entries.row(r).iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        }
        self.determinant().norm() / norms
    }

    pub fn inverse(&self) -> Result<DMatrix<Complex64>> {
        self.entries
            .clone()
            .try_inverse()
            .ok_or(Error::SingularPeriodMatrix {
                condition: f64::INFINITY,
                bound: DEFAULT_CONDITION_BOUND,
            })
    }
}

fn one_norm(m: &DMatrix<Complex64>) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Fills the period matrix at base point z and rejects it when the
/// condition estimate exceeds `condition_bound`.
pub fn period_matrix(
    letters: &[Letter],
    elements: &[GroupElement],
    z: Complex64,
    cfg: &QuadratureConfig,
    condition_bound: f64,
) -> Result<PeriodMatrix> {
    let (rows, cols) = (letters.len(), elements.len());
    let cells: Vec<Result<Estimate>> = (0..rows * cols)
        .into_par_iter()
        .map(|idx| period(&letters[idx / cols], &elements[idx % cols], z, cfg))
        .collect();
    let mut entries = DMatrix::zeros(rows, cols);
    let mut errors = DMatrix::zeros(rows, cols);
    for (idx, cell) in cells.into_iter().enumerate() {
        let e = cell?;
        entries[(idx / cols, idx % cols)] = e.value;
        errors[(idx / cols, idx % cols)] = e.error;
    }
    let condition_estimate = if rows == cols {
        match entries.clone().try_inverse() {
            Some(inv) => one_norm(&entries) * one_norm(&inv),
            None => f64::INFINITY,
        }
    } else {
        f64::NAN
    };
    if condition_estimate > condition_bound {
        return Err(Error::SingularPeriodMatrix {
            condition: condition_estimate,
            bound: condition_bound,
        });
    }
    Ok(PeriodMatrix {
        letters: letters.to_vec(),
        elements: elements.to_vec(),
        entries,
        errors,
        condition_estimate,
    })
}

/// s-fold Kronecker power.
pub fn kronecker_power(m: &DMatrix<Complex64>, s: usize) -> DMatrix<Complex64> {
    let mut acc = DMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
    for _ in 0..s {
        acc = acc.kronecker(m);
    }
    acc
}

/// Coefficients of the dual sections: Λ_L = Σ_I M[L][I]·F_I with
/// M = (P⁻¹)^{⊗s}, so that ψ(Λ_L) at the tuple J is δ_{LJ}.
#[derive(Debug, Clone)]
pub struct DualBasis {
    pub rank: usize,
    pub s: usize,
    pub coefficients: DMatrix<Complex64>,
}

pub fn dual_basis_coefficients(p: &PeriodMatrix, s: usize) -> Result<DualBasis> {
    if !p.is_square() {
        return Err(Error::InvalidArgument(
            "dual basis needs a square period matrix".into(),
        ));
    }
    let inv = p.inverse()?;
    Ok(DualBasis {
        rank: p.entries.nrows(),
        s,
        coefficients: kronecker_power(&inv, s),
    })
}

/// max |P^{⊗s}·M − I|.
pub fn kronecker_identity_residual(p: &PeriodMatrix, dual: &DualBasis) -> f64 {
    let prod = kronecker_power(&p.entries, dual.s) * &dual.coefficients;
    let n = prod.nrows();
    let mut worst: f64 = 0.0;
    for r in 0..n {
        for c in 0..n {
            let target = if r == c { 1.0 } else { 0.0 };
            worst = worst.max((prod[(r, c)] - target).norm());
        }
    }
    worst
}

/// A formal combination Σ_I a_I F_I over all rank^s index words.
#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub rank: usize,
    pub s: usize,
    pub coefficients: Vec<Complex64>,
}

/// F = Σ_L c_L Λ_L for targets c indexed by all rank^s tuples, expressed in
/// the F_I basis. By construction ψ(F) at tuple I is c_I.
pub fn section_construct(targets: &[Complex64], dual: &DualBasis) -> Result<Section> {
    let n = dual.coefficients.nrows();
    if targets.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} targets, got {}",
            targets.len()
        )));
    }
    let coefficients = (0..n)
        .map(|i| {
            targets
                .iter()
                .enumerate()
                .fold(Complex64::zero(), |acc, (l, c)| acc + c * dual.coefficients[(l, i)])
        })
        .collect();
    Ok(Section {
        rank: dual.rank,
        s: dual.s,
        coefficients,
    })
}

/// ψ(F_I) at every element tuple J, as a rank^s × rank^s matrix.
///
/// Rows of unmixed index words are evaluated through the integrator
/// (F_I slashed by the delta product at `z`); rows of mixed words, which
/// have no constructed F_I, use the period-product formula.
#[derive(Debug, Clone)]
pub struct PsiTable {
    pub s: usize,
    pub rank: usize,
    pub values: DMatrix<Complex64>,
    pub numeric_rows: Vec<bool>,
}

pub fn psi_table(
    periods: &PeriodMatrix,
    s: usize,
    basepoint: Complex64,
    z: Complex64,
    cfg: &QuadratureConfig,
) -> Result<PsiTable> {
    let rank = periods.letters.len();
    if periods.elements.len() != rank {
        return Err(Error::InvalidArgument("ψ table needs a square period matrix".into()));
    }
    let n = rank.pow(s as u32);
    let words: Vec<Word> = (0..n)
        .map(|i| {
            Word::new(
                index_tuple(i, rank, s)
                    .into_iter()
                    .map(|k| periods.letters[k].clone())
                    .collect(),
            )
        })
        .collect();
    let numeric_rows: Vec<bool> = words.iter().map(Word::is_unmixed).collect();
    let cells: Vec<Result<Complex64>> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let jt = index_tuple(j, rank, s);
            if numeric_rows[i] {
                let form = HigherOrderForm::new(words[i].clone(), basepoint, *cfg)?;
                let tuple: Vec<GroupElement> =
                    jt.iter().map(|&k| periods.elements[k].clone()).collect();
                Ok(form.psi_image(&tuple, z)?.value)
            } else {
                let it = index_tuple(i, rank, s);
                Ok(it
                    .iter()
                    .zip(&jt)
                    .fold(Complex64::new(1.0, 0.0), |acc, (&r, &c)| {
                        acc * periods.entries[(r, c)]
                    }))
            }
        })
        .collect();
    let mut values = DMatrix::zeros(n, n);
    for (idx, cell) in cells.into_iter().enumerate() {
        values[(idx / n, idx % n)] = cell?;
    }
    Ok(PsiTable {
        s,
        rank,
        values,
        numeric_rows,
    })
}

impl Section {
    /// ψ(F) at every tuple J, using the given table for ψ(F_I).
    pub fn psi(&self, table: &PsiTable) -> Vec<Complex64> {
        let n = self.coefficients.len();
        (0..n)
            .map(|j| {
                (0..n).fold(Complex64::zero(), |acc, i| {
                    acc + self.coefficients[i] * table.values[(i, j)]
                })
            })
            .collect()
    }
}
