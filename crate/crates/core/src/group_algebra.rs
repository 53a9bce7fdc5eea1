//! Exact arithmetic in PSL₂(ℤ) and in the integral group ring ℤ[Γ].
//!
//! Elements are stored as sign-normalized integer matrices so that equality
//! of group elements is equality of entries. Group-ring elements are finite
//! formal sums with arbitrary-precision coefficients, kept in canonical form
//! (no zero coefficients, keys ordered).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of PSL₂(ℤ), stored as the representative with `c > 0`, or
/// `c = 0` and `a > 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl GroupElement {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::Determinant {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
                d: d.to_string(),
                det: det.to_string(),
            });
        }
        Ok(Self::normalized(a, b, c, d))
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    // Caller guarantees ad - bc = 1.
    fn normalized(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let flip = c.is_negative() || (c.is_zero() && a.is_negative());
        if flip {
            GroupElement {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            GroupElement { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Self::normalized(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// T = [[1,1],[0,1]].
    pub fn translation() -> Self {
        Self::translation_by(1)
    }

    pub fn translation_by(n: i64) -> Self {
        Self::normalized(BigInt::one(), n.into(), BigInt::zero(), BigInt::one())
    }

    /// S = [[0,-1],[1,0]].
    pub fn inversion() -> Self {
        Self::normalized(BigInt::zero(), (-1).into(), BigInt::one(), BigInt::zero())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn inverse(&self) -> Self {
        Self::normalized(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Lower-left entry divisible by `level`.
    pub fn in_gamma0(&self, level: u64) -> bool {
        assert!(level >= 1, "level must be positive");
        (&self.c % BigInt::from(level)).is_zero()
    }

    /// Entries as floats, for numerical evaluation.
    pub fn to_f64(&self) -> [f64; 4] {
        let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
        [f(&self.a), f(&self.b), f(&self.c), f(&self.d)]
    }

    /// z ↦ (az+b)/(cz+d).
    pub fn act(&self, z: Complex64) -> Complex64 {
        let [a, b, c, d] = self.to_f64();
        mobius([a, b, c, d], z)
    }

    /// The automorphy factor cz + d.
    pub fn automorphy_factor(&self, z: Complex64) -> Complex64 {
        let [_, _, c, d] = self.to_f64();
        z * c + d
    }
}

/// Möbius action of a real 2×2 matrix `[a, b, c, d]`.
pub fn mobius(m: [f64; 4], z: Complex64) -> Complex64 {
    let [a, b, c, d] = m;
    let den = z * c + d;
    let num = z * a + b;
    // Imaginary part via y/|cz+d|² avoids cancellation near the real axis.
    let q = num / den;
    Complex64::new(q.re, z.im / den.norm_sqr())
}

impl Mul for &GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: &GroupElement) -> GroupElement {
        GroupElement::normalized(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        &self * &rhs
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected \"a,b,c,d\", got {s:?}")));
        }
        let mut entries = Vec::with_capacity(4);
        for p in parts {
            entries.push(
                p.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad matrix entry {p:?}: {e}")))?,
            );
        }
        let d = entries.pop().unwrap();
        let c = entries.pop().unwrap();
        let b = entries.pop().unwrap();
        let a = entries.pop().unwrap();
        GroupElement::new(a, b, c, d)
    }
}

/// The three sample Γ₀(11) elements used throughout: T, B = (4,1,11,3),
/// C = (3,1,11,4). The cusp-form periods along B and C are complex
/// conjugates, so together with T they give an invertible period matrix.
pub fn sample_elements() -> Vec<GroupElement> {
    vec![
        GroupElement::translation(),
        GroupElement::from_i64(4, 1, 11, 3).unwrap(),
        GroupElement::from_i64(3, 1, 11, 4).unwrap(),
    ]
}

/// (12,1,11,1): in Γ₀(11) but homologically trivial for the cusp form
/// (its period vanishes), so it is kept for algebraic checks only.
pub fn cusp_trivial_element() -> GroupElement {
    GroupElement::from_i64(12, 1, 11, 1).unwrap()
}

/// Topological data of Γ\ℍ used to size the ψ map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupData {
    pub genus: u32,
    pub cusp_count: u32,
    pub elliptic_count: u32,
}

impl GroupData {
    pub fn new(genus: u32, cusp_count: u32, elliptic_count: u32) -> Result<Self> {
        if elliptic_count != 0 {
            return Err(Error::InvalidArgument(
                "groups with elliptic elements are not supported".into(),
            ));
        }
        let data = GroupData {
            genus,
            cusp_count,
            elliptic_count,
        };
        if data.rank() < 1 {
            return Err(Error::InvalidArgument(format!(
                "rank 2g + c - 1 = {} must be at least 1",
                data.rank()
            )));
        }
        Ok(data)
    }

    /// Γ₀(11): genus 1, two cusps, no elliptic points.
    pub fn gamma0_11() -> Self {
        GroupData {
            genus: 1,
            cusp_count: 2,
            elliptic_count: 0,
        }
    }

    /// 2g + c − 1.
    pub fn rank(&self) -> i64 {
        2 * self.genus as i64 + self.cusp_count as i64 - 1
    }
}

/// A finite formal sum Σ n_g·g in ℤ[Γ].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<GroupElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_element(GroupElement::identity())
    }

    pub fn from_element(g: GroupElement) -> Self {
        Self::from_term(BigInt::one(), g)
    }

    pub fn from_term(coeff: BigInt, g: GroupElement) -> Self {
        let mut x = Self::zero();
        x.add_term(coeff, g);
        x
    }

    /// g − 1.
    pub fn delta(g: &GroupElement) -> Self {
        let mut x = Self::from_element(g.clone());
        x.add_term(-BigInt::one(), GroupElement::identity());
        x
    }

    pub fn add_term(&mut self, coeff: BigInt, g: GroupElement) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        GroupRingElement {
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (g.clone(), c * k))
                .collect(),
        }
    }

    /// The degree map ℤ[Γ] → ℤ; its kernel is the augmentation ideal J.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(c.clone(), g.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(-c.clone(), g.clone());
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (g, c) in &self.terms {
            for (h, e) in &rhs.terms {
                out.add_term(c * e, g * h);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GroupRingElement {
            type Output = GroupRingElement;
            fn $m(self, rhs: GroupRingElement) -> GroupRingElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{c} * {g}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupRingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = GroupRingElement::zero();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (coeff, elem) = line
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("expected \"coeff * a,b,c,d\", got {line:?}")))?;
            let coeff: BigInt = coeff
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient {coeff:?}: {e}")))?;
            out.add_term(coeff, elem.trim().parse()?);
        }
        Ok(out)
    }
}

/// A product (γ₁−1)…(γ_s−1), tagged with its J-adic order `s` and the
/// factors it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProduct {
    pub element: GroupRingElement,
    pub order: usize,
    pub factors: Vec<GroupElement>,
}

/// Builds (γ₁−1)(γ₂−1)…(γ_s−1) by repeated convolution. The result lies in
/// J^s by construction.
pub fn delta_product(elements: &[GroupElement]) -> DeltaProduct {
    assert!(!elements.is_empty(), "delta_product needs at least one factor");
    let element = elements
        .iter()
        .map(GroupRingElement::delta)
        .reduce(|acc, x| &acc * &x)
        .unwrap();
    DeltaProduct {
        element,
        order: elements.len(),
        factors: elements.to_vec(),
    }
}

/// One term of the subset expansion: a sign and the ordered factors whose
/// product is the group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedProduct {
    pub sign: i32,
    pub factors: Vec<GroupElement>,
}

impl SignedProduct {
    pub fn product(&self) -> GroupElement {
        self.factors
            .iter()
            .fold(GroupElement::identity(), |acc, g| &acc * g)
    }
}

/// The 2^s signed ordered products Σ_{S ⊆ {1..s}} (−1)^{s−|S|} Π_{i∈S} γ_i,
/// in subset-bitmask order, without merging equal group elements.
pub fn inclusion_exclusion_terms(elements: &[GroupElement]) -> Vec<SignedProduct> {
    let s = elements.len();
    assert!(s >= 1, "expansion needs at least one factor");
    assert!(s < 31, "too many factors");
    (0u32..(1 << s))
        .map(|mask| {
            let factors: Vec<GroupElement> = (0..s)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| elements[i].clone())
                .collect();
            let sign = if (s - factors.len()) % 2 == 0 { 1 } else { -1 };
            SignedProduct { sign, factors }
        })
        .collect()
}

/// Σ_S (−1)^{s−|S|}·(ordered product over S), collected into ℤ[Γ].
pub fn inclusion_exclusion_expand(elements: &[GroupElement]) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for term in inclusion_exclusion_terms(elements) {
        out.add_term(BigInt::from(term.sign), term.product());
    }
    out
}

/// (Σ_{l=0}^{e−1} g^l)·(g − 1), which telescopes to g^e − 1.
pub fn elliptic_telescoping(g: &GroupElement, e: u32) -> GroupRingElement {
    assert!(e >= 2, "telescoping order must be at least 2");
    let mut geometric = GroupRingElement::zero();
    let mut power = GroupElement::identity();
    for _ in 0..e {
        geometric.add_term(BigInt::one(), power.clone());
        power = &power * g;
    }
    &geometric * &GroupRingElement::delta(g)
}

/// A matrix with lower row (c, d), gcd(c, d) = 1, completed to determinant 1.
pub fn complete_bottom_row(c: i64, d: i64) -> Option<[i64; 4]> {
    let ext = c.extended_gcd(&d);
    // ext.x*c + ext.y*d = gcd
    if ext.gcd.abs() != 1 {
        return None;
    }
    // a*d - b*c = 1  with a = y*g, b = -x*g where g = ±1
    let g = ext.gcd;
    Some([ext.y * g, -ext.x * g, c, d])
}
