//! Piecewise-linear paths in the upper half-plane.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group_algebra::GroupElement;

/// Default base point x₀ = 2i.
pub const DEFAULT_BASEPOINT: Complex64 = Complex64::new(0.0, 2.0);

/// A polyline z₀ → z₁ → … → z_k with every vertex in ℍ. Each segment is
/// traversed linearly; segments are taken in order.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    vertices: Vec<Complex64>,
}

fn check_upper(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() && z.im > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(z))
    }
}

impl Path {
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidArgument(
                "a path needs at least two vertices".into(),
            ));
        }
        for &z in &vertices {
            check_upper(z)?;
        }
        Ok(Path { vertices })
    }

    /// The segment z₀ → z₁.
    pub fn line(z0: Complex64, z1: Complex64) -> Result<Self> {
        Self::new(vec![z0, z1])
    }

    /// {a, b} routed through the base point: line(a, x₀) then line(x₀, b).
    pub fn through_basepoint(a: Complex64, b: Complex64, x0: Complex64) -> Result<Self> {
        Self::line(a, x0)?.concat(&Self::line(x0, b)?)
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn start(&self) -> Complex64 {
        self.vertices[0]
    }

    pub fn end(&self) -> Complex64 {
        *self.vertices.last().unwrap()
    }

    pub fn segments(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// α followed by β; requires α(1) = β(0) exactly.
    pub fn concat(&self, other: &Path) -> Result<Self> {
        if self.end() != other.start() {
            return Err(Error::EndpointMismatch {
                end: self.end(),
                start: other.start(),
            });
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(Path { vertices })
    }

    pub fn reverse(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    /// Inserts the midpoint of segment `index` as an extra vertex.
    pub fn subdivide_segment(&self, index: usize) -> Self {
        let mut vertices = self.vertices.clone();
        let mid = (vertices[index] + vertices[index + 1]) * 0.5;
        vertices.insert(index + 1, mid);
        Path { vertices }
    }

    /// Polyline through the images under g of `refinement` equally spaced
    /// points per segment; converges to the curved image g·p as the
    /// refinement grows. Vertex images are exact up to rounding.
    pub fn mobius_image(&self, g: &GroupElement, refinement: usize) -> Self {
        assert!(refinement >= 1, "refinement must be at least 1");
        let mut vertices = Vec::with_capacity(self.segment_count() * refinement + 1);
        vertices.push(g.act(self.start()));
        for (z0, z1) in self.segments() {
            for k in 1..=refinement {
                let t = k as f64 / refinement as f64;
                vertices.push(g.act(z0 + (z1 - z0) * t));
            }
        }
        Path { vertices }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vertices
            .iter()
            .map(|z| format!("{},{}", z.re, z.im))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Parses "re,im".
pub fn parse_point(s: &str) -> Result<Complex64> {
    let (re, im) = s
        .trim()
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected \"re,im\", got {s:?}")))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<f64>()
            .map_err(|e| Error::Parse(format!("bad number {x:?}: {e}")))
    };
    Ok(Complex64::new(parse(re)?, parse(im)?))
}

/// Parses "re,im;re,im;…" into a list of points.
pub fn parse_points(s: &str) -> Result<Vec<Complex64>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(parse_point)
        .collect()
}

impl FromStr for Path {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Path::new(parse_points(s)?)
    }
}
