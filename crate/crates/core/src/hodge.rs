//! Word-level model of the weight and Hodge-type filtrations on the graded
//! pieces Gr_m. A word of length m with p holomorphic letters sits in W_m
//! and in F^p; conjugation sends it to F^{m−p}.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::chen::Word;
use crate::error::{Error, Result};
use crate::modular_letters::Orientation;

#[derive(Debug, Clone, PartialEq)]
pub struct BigradedWord {
    word: Word,
    hol: usize,
}

impl BigradedWord {
    pub fn new(word: Word) -> Self {
        let hol = word.hol_count();
        BigradedWord { word, hol }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Weight level: the word length.
    pub fn m(&self) -> usize {
        self.word.len()
    }

    /// Number of holomorphic letters.
    pub fn p(&self) -> usize {
        self.hol
    }

    pub fn antihol(&self) -> usize {
        self.m() - self.hol
    }

    fn key(&self) -> String {
        self.word.to_string()
    }
}

/// Flips every orientation; the (m, p) stratum goes to (m, m − p).
pub fn conj_word(w: &BigradedWord) -> BigradedWord {
    BigradedWord::new(w.word.conjugate())
}

pub fn in_filtration(w: &BigradedWord, p: usize) -> bool {
    w.hol >= p
}

/// Σ c_I F_I over words of a single length m.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GradedCombination {
    terms: Vec<(Complex64, BigradedWord)>,
}

impl GradedCombination {
    pub fn new(terms: Vec<(Complex64, BigradedWord)>) -> Result<Self> {
        if let Some((_, first)) = terms.first() {
            let m = first.m();
            if let Some((_, bad)) = terms.iter().find(|(_, w)| w.m() != m) {
                return Err(Error::Grading(format!(
                    "combination mixes lengths {m} and {}",
                    bad.m()
                )));
            }
        }
        Ok(GradedCombination { terms })
    }

    pub fn terms(&self) -> &[(Complex64, BigradedWord)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Weight level, None for the empty combination.
    pub fn m(&self) -> Option<usize> {
        self.terms.first().map(|(_, w)| w.m())
    }

    /// Coefficients summed per word, keyed by the word's text form.
    pub fn coefficient_map(&self) -> BTreeMap<String, Complex64> {
        let mut map = BTreeMap::new();
        for (c, w) in &self.terms {
            *map.entry(w.key()).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        map
    }

    /// Σ c̄_I F̄_I.
    pub fn conj(&self) -> Self {
        GradedCombination {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.conj(), conj_word(w)))
                .collect(),
        }
    }
}

/// x = fp_part + conj(conj_fq_part) + lower, with fp_part ⊂ F^p, conj_fq_part
/// ⊂ F^q, and lower ⊂ W_{m−1} (always empty on a graded piece).
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub fp_part: GradedCombination,
    pub conj_fq_part: GradedCombination,
    pub lower: GradedCombination,
}

pub fn decompose(x: &GradedCombination, p: usize, q: usize) -> Result<Decomposition> {
    let Some(m) = x.m() else {
        return Ok(Decomposition {
            fp_part: GradedCombination::default(),
            conj_fq_part: GradedCombination::default(),
            lower: GradedCombination::default(),
        });
    };
    if p + q != m + 1 {
        return Err(Error::Grading(format!(
            "need p + q = m + 1, got p = {p}, q = {q}, m = {m}"
        )));
    }
    let mut fp = Vec::new();
    let mut fq = Vec::new();
    for (c, w) in &x.terms {
        if in_filtration(w, p) {
            fp.push((*c, w.clone()));
        } else {
            let cw = conj_word(w);
            debug_assert!(in_filtration(&cw, q));
            fq.push((c.conj(), cw));
        }
    }
    Ok(Decomposition {
        fp_part: GradedCombination { terms: fp },
        conj_fq_part: GradedCombination { terms: fq },
        lower: GradedCombination::default(),
    })
}

pub fn recombine(d: &Decomposition) -> GradedCombination {
    let mut terms = d.fp_part.terms.clone();
    terms.extend(d.conj_fq_part.conj().terms);
    terms.extend(d.lower.terms.iter().cloned());
    GradedCombination { terms }
}

/// All words of length m over an alphabet of orientations, in
/// lexicographic order of alphabet indices.
pub fn enumerate_words<T: Clone>(alphabet: &[T], m: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |a| {
                    let mut v = w.clone();
                    v.push(a.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Census of words of length m with hol count ≥ p, out of the total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub m: usize,
    pub p: usize,
    pub count: usize,
    pub total: usize,
}

/// For each m ≤ max_m and 0 ≤ p ≤ m + 1, how many words over the
/// orientation alphabet lie in F^p.
pub fn census(alphabet: &[Orientation], max_m: usize) -> Vec<CensusRow> {
    let mut rows = Vec::new();
    for m in 1..=max_m {
        let words = enumerate_words(alphabet, m);
        for p in 0..=m + 1 {
            let count = words
                .iter()
                .filter(|w| w.iter().filter(|o| **o == Orientation::Hol).count() >= p)
                .count();
            rows.push(CensusRow {
                m,
                p,
                count,
                total: words.len(),
            });
        }
    }
    rows
}

/// Number of (word, p) pairs with p + q = m + 1 where the word is in
/// neither or both of F^p and conj F^q, over all m ≤ max_m.
pub fn exclusivity_violations(alphabet: &[Orientation], max_m: usize) -> usize {
    let mut bad = 0;
    for m in 1..=max_m {
        for w in enumerate_words(alphabet, m) {
            let hol = w.iter().filter(|o| **o == Orientation::Hol).count();
            for p in 0..=m + 1 {
                let q = m + 1 - p;
                if (hol >= p) == (m - hol >= q) {
                    bad += 1;
                }
            }
        }
    }
    bad
}
