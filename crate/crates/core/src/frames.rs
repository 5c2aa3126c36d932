//! Finite frames in `ℍⁿ`.
//!
//! A family `{φ_k}` is a frame when there are `0 < A ≤ B` with
//! `A‖ψ‖² ≤ Σ_k |⟨ψ|φ_k⟩|² ≤ B‖ψ‖²` for all `ψ`. The frame operator
//! `Sψ = Σ_k ⟨ψ|φ_k⟩ φ_k` is computed once at construction together with
//! its extreme eigenvalues, which are the optimal bounds.

use std::fmt::Write as _;

use crate::embed;
use crate::error::{Error, Result};
use crate::hilbert::{check_dim, QVector};
use crate::io::{data_lines, parse_count};
use crate::operator::QOperator;
use crate::quaternion::Quaternion;

/// A family is a frame when `A_opt > FRAME_TOL · max(1, B_opt)`.
pub const FRAME_TOL: f64 = 1e-10;

/// Coefficients `{q_k}` indexed like the frame.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeq(pub Vec<Quaternion>);

impl CoefficientSeq {
    pub fn zeros(m: usize) -> Self {
        Self(vec![Quaternion::ZERO; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ_k |c_k|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|q| q.norm_sqr()).sum()
    }

    /// The `ℓ²` pairing `Σ_k c_k conj(d_k)`.
    pub fn pairing(&self, other: &CoefficientSeq) -> Quaternion {
        self.0.iter().zip(&other.0).map(|(&c, &d)| c * d.conj()).sum()
    }
}

#[derive(Debug, Clone)]
pub struct Frame {
    dim: usize,
    vectors: Vec<QVector>,
    operator: QOperator,
    bounds: (f64, f64),
}

impl Frame {
    /// Builds the family and its frame operator. The family need not span;
    /// see [`Frame::is_frame`].
    pub fn new(vectors: Vec<QVector>) -> Result<Frame> {
        let dim = vectors
            .first()
            .map(QVector::dim)
            .ok_or_else(|| Error::InvalidConfig("a frame needs at least one vector".into()))?;
        Self::with_dim(dim, vectors)
    }

    pub fn with_dim(dim: usize, vectors: Vec<QVector>) -> Result<Frame> {
        if dim == 0 {
            return Err(Error::InvalidConfig("frame dimension must be positive".into()));
        }
        for v in &vectors {
            check_dim(dim, v.dim())?;
        }
        let operator = frame_operator_of(dim, &vectors);
        let spec = embed::spectrum_self_adjoint(&operator)?;
        let bounds = (spec[0], spec[spec.len() - 1]);
        Ok(Frame { dim, vectors, operator, bounds })
    }

    /// The standard orthonormal basis of `ℍⁿ`.
    pub fn standard_basis(n: usize) -> Frame {
        Frame::new((0..n).map(|i| QVector::basis(n, i)).collect()).expect("n > 0")
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors `|I|`.
    #[inline]
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[QVector] {
        &self.vectors
    }

    pub fn frame_operator(&self) -> &QOperator {
        &self.operator
    }

    /// `(A_opt, B_opt)`: extreme eigenvalues of the frame operator.
    pub fn optimal_bounds(&self) -> (f64, f64) {
        self.bounds
    }

    pub fn is_frame(&self) -> bool {
        self.bounds.0 > FRAME_TOL * self.bounds.1.max(1.0)
    }

    /// Every vector has unit norm within `tol`.
    pub fn is_normalized(&self, tol: f64) -> bool {
        self.vectors.iter().all(|v| (v.norm() - 1.0).abs() <= tol)
    }

    /// `Σ_k c_k φ_k`.
    pub fn synthesis(&self, c: &CoefficientSeq) -> Result<QVector> {
        if c.len() != self.len() {
            return Err(Error::CardinalityMismatch { left: c.len(), right: self.len() });
        }
        let mut out = QVector::zeros(self.dim);
        for (&ck, phi) in c.0.iter().zip(&self.vectors) {
            out.axpy(ck, phi);
        }
        Ok(out)
    }

    /// `(⟨ψ|φ_k⟩)_k`.
    pub fn analysis(&self, psi: &QVector) -> Result<CoefficientSeq> {
        check_dim(self.dim, psi.dim())?;
        Ok(CoefficientSeq(self.vectors.iter().map(|phi| psi.inner_unchecked(phi)).collect()))
    }

    /// `Σ_k |⟨ψ|φ_k⟩|²`, the middle term of the frame inequality.
    pub fn frame_sum(&self, psi: &QVector) -> Result<f64> {
        Ok(self.analysis(psi)?.norm_sqr())
    }

    /// The canonical dual `{S⁻¹ φ_k}`.
    pub fn canonical_dual(&self) -> Result<Frame> {
        if !self.is_frame() {
            return Err(Error::NotAFrame { lower: self.bounds.0 });
        }
        let inv = self.operator.inverse()?;
        Frame::with_dim(self.dim, self.vectors.iter().map(|v| inv.apply_unchecked(v)).collect())
    }

    /// `Σ_k ⟨ψ|d_k⟩ φ_k` where `d_k` runs over `other`.
    pub fn reconstruct_with(&self, other: &Frame, psi: &QVector) -> Result<QVector> {
        self.synthesis(&other.analysis(psi)?)
    }

    /// Unit eigenvectors attaining the lower and upper optimal bounds.
    pub fn bound_witnesses(&self) -> Result<(QVector, QVector)> {
        let eig = embed::eigen_self_adjoint(&self.operator)?;
        let last = eig.vectors.len() - 1;
        Ok((eig.vectors[0].clone(), eig.vectors[last].clone()))
    }

    /// The family `{w_k φ_k}` for real weights.
    pub fn scaled(&self, weights: &[f64]) -> Result<Frame> {
        if weights.len() != self.len() {
            return Err(Error::CardinalityMismatch { left: weights.len(), right: self.len() });
        }
        Frame::with_dim(self.dim, self.vectors.iter().zip(weights).map(|(v, &w)| v.scale_real(w)).collect())
    }

    /// Parses the `.qhf` text format.
    pub fn parse(text: &str) -> Result<Frame> {
        let mut lines = data_lines(text);
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing `n m` header".into() })?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line: hline, message: "header must be `n m`".into() });
        }
        let n = parse_count(toks[0], hline)?;
        let m = parse_count(toks[1], hline)?;
        if n == 0 || m == 0 {
            return Err(Error::Parse { line: hline, message: "n and m must be positive".into() });
        }
        let mut vectors = Vec::with_capacity(m);
        for (line_no, line) in lines {
            if vectors.len() == m {
                return Err(Error::Parse { line: line_no, message: format!("more than {m} vectors") });
            }
            let v = QVector::parse_line(line, line_no)?;
            if v.dim() != n {
                return Err(Error::Parse { line: line_no, message: format!("expected {} reals, found {}", 4 * n, 4 * v.dim()) });
            }
            vectors.push(v);
        }
        if vectors.len() != m {
            return Err(Error::Parse { line: 0, message: format!("expected {m} vectors, found {}", vectors.len()) });
        }
        Frame::with_dim(n, vectors)
    }

    /// Writes the `.qhf` text format.
    pub fn to_qhf(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {}", self.dim, self.len()).unwrap();
        for v in &self.vectors {
            writeln!(s, "{v}").unwrap();
        }
        s
    }
}

/// Stored matrix `Σ_k φ_k* φ_k` of `ψ ↦ Σ_k ⟨ψ|φ_k⟩ φ_k`.
pub(crate) fn frame_operator_of(dim: usize, vectors: &[QVector]) -> QOperator {
    weighted_frame_operator_of(dim, vectors, |_| Quaternion::ONE)
}

pub(crate) fn weighted_frame_operator_of(dim: usize, vectors: &[QVector], weight: impl Fn(usize) -> Quaternion) -> QOperator {
    let mut s = QOperator::zeros(dim);
    for (k, v) in vectors.iter().enumerate() {
        s.add_outer(weight(k), v, v);
    }
    s
}

/// Synthesis followed by analysis, accumulated as an operator from its
/// action on the standard basis. Independent of [`frame_operator_of`].
pub fn synthesis_analysis_operator(frame: &Frame) -> QOperator {
    let n = frame.dim();
    let mut entries = Vec::with_capacity(n * n);
    for j in 0..n {
        let img = frame
            .synthesis(&frame.analysis(&QVector::basis(n, j)).expect("dimension"))
            .expect("cardinality");
        entries.extend_from_slice(img.components());
    }
    QOperator::from_entries(n, entries).expect("square")
}

/// The three-vector frame `{e₁, e₂, (e₁+e₂)/√2}` of `ℍ²`.
pub fn mercedes() -> Frame {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Frame::new(vec![QVector::from_reals(&[1.0, 0.0]), QVector::from_reals(&[0.0, 1.0]), QVector::from_reals(&[h, h])])
        .expect("valid family")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{random_quaternion, random_vector, rng};

    fn random_frame(r: &mut crate::testutil::TrialRng, n: usize, m: usize) -> Frame {
        loop {
            let f = Frame::new((0..m).map(|_| random_vector(r, n)).collect()).unwrap();
            if f.optimal_bounds().0 > 1e-6 {
                return f;
            }
        }
    }

    #[test]
    fn synthesis_examples() {
        let mut r = rng(1);
        let f = random_frame(&mut r, 3, 5);
        let mut c = CoefficientSeq::zeros(5);
        c.0[0] = Quaternion::ONE;
        assert_eq!(f.synthesis(&c).unwrap(), f.vectors()[0]);
        assert!(f.synthesis(&CoefficientSeq::zeros(5)).unwrap().is_zero());
        assert!(matches!(f.synthesis(&CoefficientSeq::zeros(4)), Err(Error::CardinalityMismatch { .. })));
        for _ in 0..20 {
            let psi = random_vector(&mut r, 3);
            let via = f.synthesis(&f.analysis(&psi).unwrap()).unwrap();
            assert!(via.approx_eq(&f.frame_operator().apply(&psi).unwrap(), 1e-12));
        }
    }

    #[test]
    fn analysis_examples() {
        let b = Frame::standard_basis(3);
        let a = b.analysis(&QVector::basis(3, 0)).unwrap();
        assert_eq!(a.0, vec![Quaternion::ONE, Quaternion::ZERO, Quaternion::ZERO]);
        assert_eq!(b.analysis(&QVector::zeros(3)).unwrap(), CoefficientSeq::zeros(3));
        assert!(b.analysis(&QVector::zeros(2)).is_err());
    }

    #[test]
    fn analysis_is_adjoint_of_synthesis() {
        let mut r = rng(2);
        let f = random_frame(&mut r, 4, 7);
        for _ in 0..20 {
            let c = CoefficientSeq((0..7).map(|_| random_quaternion(&mut r)).collect());
            let psi = random_vector(&mut r, 4);
            let lhs = f.synthesis(&c).unwrap().inner(&psi).unwrap();
            let rhs = c.pairing(&f.analysis(&psi).unwrap());
            assert!(lhs.approx_eq(rhs, 1e-12));
        }
    }

    #[test]
    fn frame_operator_examples() {
        assert_eq!(*Frame::standard_basis(4).frame_operator(), QOperator::identity(4));
        let s = mercedes().frame_operator().clone();
        assert!(s.max_abs_diff(&QOperator::from_reals(2, &[1.5, 0.5, 0.5, 1.5])) <= 1e-15);
        let mut r = rng(3);
        let f = random_frame(&mut r, 3, 4);
        let mut doubled = f.vectors().to_vec();
        doubled.extend_from_slice(f.vectors());
        let d = Frame::new(doubled).unwrap();
        assert!(d.frame_operator().max_abs_diff(&f.frame_operator().scale_real(2.0)) <= 1e-12);
    }

    #[test]
    fn frame_operator_matches_composition_and_quadratic_form() {
        let mut r = rng(4);
        for n in 1..=5 {
            let f = random_frame(&mut r, n, n + 3);
            assert!(synthesis_analysis_operator(&f).max_abs_diff(f.frame_operator()) <= 1e-12);
            for _ in 0..10 {
                let psi = random_vector(&mut r, n);
                let q = f.frame_operator().quadratic_form(&psi).unwrap();
                let sum = f.frame_sum(&psi).unwrap();
                assert!(q.is_real(1e-10 * sum));
                assert!((q.w - sum).abs() <= 1e-10 * sum);
            }
            assert!(f.frame_operator().is_self_adjoint(1e-12));
            assert!(f.frame_operator().is_positive(1e-10).unwrap());
        }
    }

    #[test]
    fn bounds_examples() {
        let (a, b) = Frame::standard_basis(3).optimal_bounds();
        assert!((a - 1.0).abs() <= 1e-12 && (b - 1.0).abs() <= 1e-12);
        let (a, b) = mercedes().optimal_bounds();
        assert!((a - 1.0).abs() <= 1e-12 && (b - 2.0).abs() <= 1e-12);
        let deficient = Frame::new(vec![QVector::basis(2, 0)]).unwrap();
        assert!(deficient.optimal_bounds().0.abs() <= 1e-15);
        assert!(!deficient.is_frame());
        assert!(matches!(deficient.canonical_dual(), Err(Error::NotAFrame { .. })));
    }

    #[test]
    fn witnesses_attain_bounds() {
        let mut r = rng(5);
        let f = random_frame(&mut r, 4, 9);
        let (a, b) = f.optimal_bounds();
        let (lo, hi) = f.bound_witnesses().unwrap();
        assert!((f.frame_sum(&lo).unwrap() - a).abs() <= 1e-9 * b);
        assert!((f.frame_sum(&hi).unwrap() - b).abs() <= 1e-9 * b);
    }

    #[test]
    fn dual_examples() {
        let b = Frame::standard_basis(3);
        let d = b.canonical_dual().unwrap();
        for (u, v) in b.vectors().iter().zip(d.vectors()) {
            assert!(u.approx_eq(v, 1e-15));
        }
        // S⁻¹ = ½ [[3/2, -1/2], [-1/2, 3/2]]
        let m = mercedes();
        let d = m.canonical_dual().unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expect = [[0.75, -0.25], [-0.25, 0.75], [0.5 * h, 0.5 * h]];
        for (v, e) in d.vectors().iter().zip(expect) {
            assert!(v.approx_eq(&QVector::from_reals(&e), 1e-14), "{v}");
        }
    }

    #[test]
    fn reconstruction() {
        let mut r = rng(6);
        for (n, m) in [(1, 1), (2, 3), (4, 8), (8, 24), (8, 8)] {
            let f = random_frame(&mut r, n, m);
            let d = f.canonical_dual().unwrap();
            let inv = f.frame_operator().inverse().unwrap();
            assert!(d.frame_operator().max_abs_diff(&inv) <= 1e-9 * inv.max_abs().max(1.0));
            for _ in 0..10 {
                let psi = random_vector(&mut r, n);
                let tol = 1e-9 * psi.norm();
                assert!(f.reconstruct_with(&d, &psi).unwrap().distance(&psi) <= tol);
                assert!(d.reconstruct_with(&f, &psi).unwrap().distance(&psi) <= tol);
            }
        }
    }

    #[test]
    fn qhf_round_trip_and_errors() {
        let mut r = rng(7);
        let f = random_frame(&mut r, 3, 5);
        let text = f.to_qhf();
        let back = Frame::parse(&text).unwrap();
        for (u, v) in f.vectors().iter().zip(back.vectors()) {
            for (a, b) in u.components().iter().zip(v.components()) {
                assert_eq!(a.to_array().map(f64::to_bits), b.to_array().map(f64::to_bits));
            }
        }
        let with_comments = "# mercedes\n2 1\n# first\n1 0 0 0 0 0 0 0\n";
        assert_eq!(Frame::parse(with_comments).unwrap().len(), 1);
        assert!(matches!(Frame::parse("2 2\n1 0 0 0 0 0 0 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Frame::parse("2 1\n1 0 0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Frame::parse("x 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Frame::parse("1 1\n1 0 0 0\n1 0 0 0\n"), Err(Error::Parse { line: 3, .. })));
    }
}
