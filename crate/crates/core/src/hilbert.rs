//! The left quaternionic Hilbert space `ℍⁿ`.
//!
//! Scalars act from the left only. The inner product is
//! `⟨f|g⟩ = Σ_k f_k · conj(g_k)`, which is left-linear in the first slot and
//! satisfies `⟨f|qg⟩ = ⟨f|g⟩ q̄` in the second. Right scalar multiplication is
//! deliberately not offered as a vector operation.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::quaternion::{parse_real, Quaternion};

#[derive(Debug, Clone, PartialEq)]
pub struct QVector {
    components: Vec<Quaternion>,
}

impl QVector {
    pub fn new(components: Vec<Quaternion>) -> Self {
        Self { components }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(vec![Quaternion::ZERO; n])
    }

    /// Standard basis vector `e_i` of `ℍⁿ` (zero based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.components[i] = Quaternion::ONE;
        v
    }

    pub fn from_reals(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&r| Quaternion::real(r)).collect())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.components.len()
    }

    #[inline]
    pub fn components(&self) -> &[Quaternion] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Quaternion> {
        self.components
    }

    pub(crate) fn components_mut(&mut self) -> &mut [Quaternion] {
        &mut self.components
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QVector) -> Result<Quaternion> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.inner_unchecked(other))
    }

    #[inline]
    pub(crate) fn inner_unchecked(&self, other: &QVector) -> Quaternion {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(&f, &g)| f * g.conj())
            .sum()
    }

    /// Squared norm, the real part of `⟨f|f⟩`.
    pub fn norm_sqr(&self) -> f64 {
        self.components.iter().map(|q| q.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `q · f`, componentwise left product.
    pub fn left_scale(&self, q: Quaternion) -> QVector {
        Self::new(self.components.iter().map(|&c| q * c).collect())
    }

    pub fn scale_real(&self, r: f64) -> QVector {
        Self::new(self.components.iter().map(|&c| c.scale(r)).collect())
    }

    /// `self += q · other`.
    pub(crate) fn axpy(&mut self, q: Quaternion, other: &QVector) {
        for (a, &b) in self.components.iter_mut().zip(&other.components) {
            *a += q * b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|q| *q == Quaternion::ZERO)
    }

    /// Largest componentwise deviation.
    pub fn max_abs_diff(&self, other: &QVector) -> f64 {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| (*a - *b).norm())
            .fold(0.0, f64::max)
    }

    pub fn distance(&self, other: &QVector) -> f64 {
        (self - other).norm()
    }

    pub fn approx_eq(&self, other: &QVector, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.approx_eq(*b, tol))
    }

    /// Parses the vector text form: `4n` reals on one line.
    pub fn parse_line(line: &str, line_no: usize) -> Result<QVector> {
        let reals = line
            .split_whitespace()
            .map(|t| parse_real(t, line_no))
            .collect::<Result<Vec<f64>>>()?;
        if reals.is_empty() || reals.len() % 4 != 0 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected a positive multiple of 4 reals, found {}", reals.len()),
            });
        }
        Ok(Self::new(
            reals
                .chunks_exact(4)
                .map(|c| Quaternion::new(c[0], c[1], c[2], c[3]))
                .collect(),
        ))
    }
}

#[inline]
pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `⟨f|g⟩ = Σ f_k conj(g_k)`.
pub fn inner(f: &QVector, g: &QVector) -> Result<Quaternion> {
    f.inner(g)
}

pub fn norm(f: &QVector) -> f64 {
    f.norm()
}

pub fn left_scale(q: Quaternion, f: &QVector) -> QVector {
    f.left_scale(q)
}

impl Index<usize> for QVector {
    type Output = Quaternion;
    fn index(&self, i: usize) -> &Quaternion {
        &self.components[i]
    }
}

impl<'a> Add<&'a QVector> for &'a QVector {
    type Output = QVector;
    fn add(self, o: &QVector) -> QVector {
        assert_eq!(self.dim(), o.dim(), "vector dimension mismatch");
        QVector::new(self.components.iter().zip(&o.components).map(|(&a, &b)| a + b).collect())
    }
}

impl<'a> Sub<&'a QVector> for &'a QVector {
    type Output = QVector;
    fn sub(self, o: &QVector) -> QVector {
        assert_eq!(self.dim(), o.dim(), "vector dimension mismatch");
        QVector::new(self.components.iter().zip(&o.components).map(|(&a, &b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector::new(self.components.iter().map(|&a| -a).collect())
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, q) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}
