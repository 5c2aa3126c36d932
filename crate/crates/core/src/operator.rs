//! Left-linear operators on `ℍⁿ`.
//!
//! An operator is stored as an `n × n` quaternion matrix `A` acting on row
//! vectors from the right:
//!
//! ```text
//! (Tφ)_i = Σ_j φ_j · A_{ji}
//! ```
//!
//! Vector components multiply matrix entries from the left, which is what
//! makes `T(qφ) = q T(φ)` hold for every quaternion `q`. Multiplying a
//! column vector on the left of `A` would not be left-linear.
//!
//! Under this convention the adjoint is the conjugate transpose, and the
//! composition `S ∘ T` has stored matrix `A_T · A_S`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::embed;
use crate::error::{Error, Result};
use crate::hilbert::{check_dim, QVector};
use crate::quaternion::{parse_real, Quaternion};

/// Relative pivot threshold for Gauss–Jordan elimination.
pub const PIVOT_TOL: f64 = 1e-12;

/// Default tolerance for positivity decisions, relative to `max(1, ‖T‖_max)`.
pub const POSITIVITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct QOperator {
    n: usize,
    /// row-major, `entries[j * n + i] = A_{ji}`
    entries: Vec<Quaternion>,
}

impl QOperator {
    pub fn from_entries(n: usize, entries: Vec<Quaternion>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("operator dimension must be positive".into()));
        }
        check_dim(n * n, entries.len())?;
        Ok(Self { n, entries })
    }

    /// Square matrix from row-major real entries.
    pub fn from_reals(n: usize, values: &[f64]) -> Self {
        assert_eq!(values.len(), n * n);
        Self { n, entries: values.iter().map(|&r| Quaternion::real(r)).collect() }
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![Quaternion::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1.0)
    }

    pub fn scalar(n: usize, r: f64) -> Self {
        Self::diagonal(&vec![Quaternion::real(r); n])
    }

    pub fn diagonal(d: &[Quaternion]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for (i, &q) in d.iter().enumerate() {
            m.entries[i * n + i] = q;
        }
        m
    }

    pub fn diagonal_real(d: &[f64]) -> Self {
        Self::diagonal(&d.iter().map(|&r| Quaternion::real(r)).collect::<Vec<_>>())
    }

    /// The rank-one operator `ψ ↦ ⟨ψ|u⟩ v`, with stored matrix `u* v`.
    pub fn outer(u: &QVector, v: &QVector) -> Result<Self> {
        check_dim(u.dim(), v.dim())?;
        let n = u.dim();
        let mut m = Self::zeros(n);
        m.add_outer(Quaternion::ONE, u, v);
        Ok(m)
    }

    /// `self += ` the operator `ψ ↦ ⟨ψ|u⟩ s v` for a real `s`, or more
    /// generally the stored matrix `u* s v`.
    pub(crate) fn add_outer(&mut self, s: Quaternion, u: &QVector, v: &QVector) {
        let n = self.n;
        for j in 0..n {
            let left = u[j].conj() * s;
            for i in 0..n {
                self.entries[j * n + i] += left * v[i];
            }
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Stored entry `A_{row, col}`: `row` indexes the input component,
    /// `col` the output component.
    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Quaternion {
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.entries
    }

    pub fn apply(&self, f: &QVector) -> Result<QVector> {
        check_dim(self.n, f.dim())?;
        Ok(self.apply_unchecked(f))
    }

    pub(crate) fn apply_unchecked(&self, f: &QVector) -> QVector {
        let n = self.n;
        let mut out = QVector::zeros(n);
        let slots = out.components_mut();
        for (j, &fj) in f.components().iter().enumerate() {
            let row = &self.entries[j * n..(j + 1) * n];
            for (slot, &a) in slots.iter_mut().zip(row) {
                *slot += fj * a;
            }
        }
        out
    }

    /// `T†`, the conjugate transpose.
    pub fn adjoint(&self) -> QOperator {
        let n = self.n;
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.entries[c * n + r] = self.entries[r * n + c].conj();
            }
        }
        m
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &QOperator) -> QOperator {
        assert_eq!(self.n, inner.n, "operator dimension mismatch");
        matmul(&inner.entries, &self.entries, self.n)
    }

    pub fn scale_real(&self, r: f64) -> QOperator {
        Self { n: self.n, entries: self.entries.iter().map(|q| q.scale(r)).collect() }
    }

    /// `⟨Tφ|φ⟩`.
    pub fn quadratic_form(&self, f: &QVector) -> Result<Quaternion> {
        Ok(self.apply(f)?.inner_unchecked(f))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &QOperator) -> f64 {
        assert_eq!(self.n, other.n, "operator dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (*a - *b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖T − T†‖_max`.
    pub fn self_adjoint_deviation(&self) -> f64 {
        let n = self.n;
        let mut dev = 0.0f64;
        for r in 0..n {
            for c in r..n {
                dev = dev.max((self.entries[r * n + c] - self.entries[c * n + r].conj()).norm());
            }
        }
        dev
    }

    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.self_adjoint_deviation() <= tol
    }

    /// Scale used to make tolerances relative: `max(1, ‖T‖_max)`.
    fn tol_scale(&self) -> f64 {
        self.max_abs().max(1.0)
    }

    /// Quaternionic spectrum of a self-adjoint operator, ascending.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        embed::spectrum_self_adjoint(self)
    }

    /// Positive iff self-adjoint and the smallest eigenvalue is `≥ −tol`,
    /// both measured relative to `max(1, ‖T‖_max)`.
    pub fn is_positive(&self, tol: f64) -> Result<bool> {
        let scale = self.tol_scale();
        if !self.is_self_adjoint(tol * scale) {
            return Ok(false);
        }
        let spec = self.spectrum()?;
        Ok(spec[0] >= -tol * scale)
    }

    /// Gauss–Jordan inverse with partial pivoting over `ℍ`.
    ///
    /// Row operations are left multiplications, so the pivot row is divided
    /// by its pivot from the left. A pivot below `PIVOT_TOL · ‖T‖_max`
    /// signals a nontrivial kernel.
    pub fn inverse(&self) -> Result<QOperator> {
        let n = self.n;
        let threshold = PIVOT_TOL * self.max_abs();
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for p in 0..n {
            let (best, pivot_norm) = (p..n)
                .map(|r| (r, a[r * n + p].norm()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .expect("nonempty pivot range");
            if pivot_norm <= threshold || pivot_norm == 0.0 {
                return Err(Error::Singular { pivot: pivot_norm });
            }
            if best != p {
                for c in 0..n {
                    a.swap(best * n + c, p * n + c);
                    inv.swap(best * n + c, p * n + c);
                }
            }
            let pinv = a[p * n + p].inverse()?;
            for c in 0..n {
                a[p * n + c] = pinv * a[p * n + c];
                inv[p * n + c] = pinv * inv[p * n + c];
            }
            for r in 0..n {
                if r == p {
                    continue;
                }
                let f = a[r * n + p];
                if f == Quaternion::ZERO {
                    continue;
                }
                for c in 0..n {
                    let ap = a[p * n + c];
                    let ip = inv[p * n + c];
                    a[r * n + c] -= f * ap;
                    inv[r * n + c] -= f * ip;
                }
            }
        }
        Ok(Self { n, entries: inv })
    }

    /// The unique positive square root.
    pub fn sqrt_psd(&self) -> Result<QOperator> {
        if !self.is_positive(POSITIVITY_TOL)? {
            return Err(Error::NotPositive);
        }
        let (root, _) = embed::spectral_map(self, |l| l.max(0.0).sqrt())?;
        Ok(root)
    }

    /// `‖T‖ = sup_{‖φ‖=1} ‖Tφ‖`, the largest singular value.
    pub fn op_norm(&self) -> f64 {
        embed::singular_values(self)[0]
    }

    pub fn singular_values(&self) -> Vec<f64> {
        embed::singular_values(self)
    }

    /// Bounded with bounded inverse: smallest singular value `> tol`.
    pub fn in_gl(&self, tol: f64) -> bool {
        let s = self.singular_values();
        s[s.len() - 1] > tol
    }

    /// Positive member of `𝒢ℒ`.
    pub fn in_gl_plus(&self, tol: f64) -> bool {
        self.in_gl(tol) && self.is_positive(tol).unwrap_or(false)
    }

    /// Parses the operator text format: a header `n n` followed by `n` rows
    /// of `n` quaternions. Row index is the input component `j`, column the
    /// output component `i`. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<QOperator> {
        let mut lines = crate::io::data_lines(text);
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header".into() })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::Parse { line: hline, message: "header must be `n n`".into() });
        }
        let n = crate::io::parse_count(dims[0], hline)?;
        let n2 = crate::io::parse_count(dims[1], hline)?;
        if n != n2 || n == 0 {
            return Err(Error::Parse { line: hline, message: format!("operator must be square and nonempty, got {n}x{n2}") });
        }
        let mut entries = Vec::with_capacity(n * n);
        let mut rows = 0;
        for (line_no, line) in lines {
            if rows == n {
                return Err(Error::Parse { line: line_no, message: "trailing data after operator rows".into() });
            }
            let reals = line.split_whitespace().map(|t| parse_real(t, line_no)).collect::<Result<Vec<_>>>()?;
            if reals.len() != 4 * n {
                return Err(Error::Parse { line: line_no, message: format!("expected {} reals, found {}", 4 * n, reals.len()) });
            }
            entries.extend(reals.chunks_exact(4).map(|c| Quaternion::new(c[0], c[1], c[2], c[3])));
            rows += 1;
        }
        if rows != n {
            return Err(Error::Parse { line: 0, message: format!("expected {n} operator rows, found {rows}") });
        }
        QOperator::from_entries(n, entries)
    }
}

fn matmul(a: &[Quaternion], b: &[Quaternion], n: usize) -> QOperator {
    let mut out = vec![Quaternion::ZERO; n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark == Quaternion::ZERO {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += ark * b[k * n + c];
            }
        }
    }
    QOperator { n, entries: out }
}

/// Operator composition: `&s * &t` is `s ∘ t`.
impl Mul for &QOperator {
    type Output = QOperator;
    fn mul(self, rhs: &QOperator) -> QOperator {
        self.compose(rhs)
    }
}

impl Add for &QOperator {
    type Output = QOperator;
    fn add(self, rhs: &QOperator) -> QOperator {
        assert_eq!(self.n, rhs.n, "operator dimension mismatch");
        QOperator { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a + b).collect() }
    }
}

impl Sub for &QOperator {
    type Output = QOperator;
    fn sub(self, rhs: &QOperator) -> QOperator {
        assert_eq!(self.n, rhs.n, "operator dimension mismatch");
        QOperator { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a - b).collect() }
    }
}

impl Neg for &QOperator {
    type Output = QOperator;
    fn neg(self) -> QOperator {
        self.scale_real(-1.0)
    }
}

impl fmt::Display for QOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.n)?;
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self.entry(r, c).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of checking the five equivalent characterizations of `𝒢ℒ⁺`
/// on one operator.
#[derive(Debug, Clone, PartialEq)]
pub struct PositivityEquivalence {
    /// `m I ≤ T ≤ M I` with `m > 0`, verified on the samples.
    pub bounded_below: bool,
    /// `T` positive and `m‖f‖² ≤ ‖T^{1/2} f‖² ≤ M‖f‖²` on the samples.
    pub root_bounded: bool,
    /// `T` positive and `T^{1/2} ∈ 𝒢ℒ`.
    pub root_invertible: bool,
    /// A self-adjoint `A ∈ 𝒢ℒ` with `A² = T` exists (the positive root).
    pub self_adjoint_root: bool,
    pub in_gl_plus: bool,
    /// Extreme eigenvalues `(m, M)`, when the spectrum is defined.
    pub bounds: Option<(f64, f64)>,
    /// Largest relative violation among the sampled inequalities and `A² = T`.
    pub max_residual: f64,
}

impl PositivityEquivalence {
    pub fn all(&self) -> [bool; 5] {
        [self.bounded_below, self.root_bounded, self.root_invertible, self.self_adjoint_root, self.in_gl_plus]
    }

    pub fn consistent(&self) -> bool {
        let a = self.all();
        a.iter().all(|&b| b == a[0])
    }
}

/// Evaluates the five `𝒢ℒ⁺` characterizations independently.
///
/// `samples` are the test vectors used for the two inequality forms; `tol`
/// is the relative slack allowed on them and the invertibility threshold.
pub fn positivity_equivalence(t: &QOperator, samples: &[QVector], tol: f64) -> PositivityEquivalence {
    let positive = t.is_positive(tol).unwrap_or(false);
    let spec = if t.is_self_adjoint(tol * t.tol_scale()) { t.spectrum().ok() } else { None };
    let bounds = spec.as_ref().map(|s| (s[0], s[s.len() - 1]));
    let mut max_residual = 0.0f64;

    let scale = t.tol_scale();
    let bounded_below = match bounds {
        Some((m, big_m)) if m > tol * scale => samples.iter().all(|f| {
            let nf = f.norm_sqr();
            let qf = t.quadratic_form(f).expect("sample dimension");
            let slack = tol * big_m.abs().max(1.0) * nf;
            max_residual = max_residual.max(qf.imag_norm() / (big_m * nf).max(f64::MIN_POSITIVE));
            max_residual = max_residual.max(((m * nf - qf.w).max(qf.w - big_m * nf)).max(0.0) / (big_m * nf));
            qf.is_real(slack) && qf.w >= m * nf - slack && qf.w <= big_m * nf + slack
        }),
        _ => false,
    };

    let root = if positive { t.sqrt_psd().ok() } else { None };
    let root_bounded = match (&root, bounds) {
        (Some(r), Some((m, big_m))) if m > tol * scale => samples.iter().all(|f| {
            let nf = f.norm_sqr();
            let v = r.apply(f).expect("sample dimension").norm_sqr();
            let slack = tol * big_m.abs().max(1.0) * nf;
            max_residual = max_residual.max(((m * nf - v).max(v - big_m * nf)).max(0.0) / (big_m * nf));
            v >= m * nf - slack && v <= big_m * nf + slack
        }),
        _ => false,
    };

    let root_invertible = root.as_ref().map(|r| r.in_gl(tol * scale.sqrt())).unwrap_or(false);

    let self_adjoint_root = match &root {
        Some(r) => {
            let sq = r * r;
            let res = sq.max_abs_diff(t) / scale;
            max_residual = max_residual.max(res);
            r.is_self_adjoint(tol * scale) && res <= 1e-8 && r.in_gl(tol * scale.sqrt())
        }
        None => false,
    };

    PositivityEquivalence {
        bounded_below,
        root_bounded,
        root_invertible,
        self_adjoint_root,
        in_gl_plus: t.in_gl_plus(tol),
        bounds,
        max_residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use crate::testutil::{random_gl_plus, random_operator, random_quaternion, random_self_adjoint, random_vector, rng};

    fn one(q: Quaternion) -> QOperator {
        QOperator::from_entries(1, vec![q]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let mut r = rng(1);
        let f = random_vector(&mut r, 3);
        assert_eq!(QOperator::identity(3).apply(&f).unwrap(), f);
        // (j)·i = -k under the row action
        let out = one(Quaternion::I).apply(&QVector::new(vec![Quaternion::J])).unwrap();
        assert_eq!(out, QVector::new(vec![-Quaternion::K]));
        assert!(matches!(QOperator::identity(2).apply(&f), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn left_linearity() {
        let mut r = rng(2);
        for n in 1..=6 {
            let t = random_operator(&mut r, n);
            let f = random_vector(&mut r, n);
            let g = random_vector(&mut r, n);
            let q = random_quaternion(&mut r);
            assert!(t.apply(&f.left_scale(q)).unwrap().approx_eq(&t.apply(&f).unwrap().left_scale(q), 1e-12));
            let sum = t.apply(&(&f + &g)).unwrap();
            assert!(sum.approx_eq(&(&t.apply(&f).unwrap() + &t.apply(&g).unwrap()), 1e-12));
        }
    }

    #[test]
    fn adjoint_identity() {
        let mut r = rng(3);
        assert_eq!(QOperator::identity(3).adjoint(), QOperator::identity(3));
        assert_eq!(one(Quaternion::I).adjoint(), one(-Quaternion::I));
        for _ in 0..1000 {
            let n = r.random_range(1..=8usize);
            let t = random_operator(&mut r, n);
            let psi = random_vector(&mut r, n);
            let phi = random_vector(&mut r, n);
            let lhs = psi.inner(&t.apply(&phi).unwrap()).unwrap();
            let rhs = t.adjoint().apply(&psi).unwrap().inner(&phi).unwrap();
            assert!(lhs.approx_eq(rhs, 1e-12));
        }
    }

    #[test]
    fn adjoint_anti_homomorphism() {
        let mut r = rng(4);
        for n in 1..=6 {
            let s = random_operator(&mut r, n);
            let t = random_operator(&mut r, n);
            let lhs = (&s * &t).adjoint();
            let rhs = &t.adjoint() * &s.adjoint();
            assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
            assert_eq!(s.adjoint().adjoint(), s);
        }
    }

    #[test]
    fn composition_order() {
        let mut r = rng(5);
        let s = random_operator(&mut r, 3);
        let t = random_operator(&mut r, 3);
        let f = random_vector(&mut r, 3);
        let direct = s.apply(&t.apply(&f).unwrap()).unwrap();
        assert!((&s * &t).apply(&f).unwrap().approx_eq(&direct, 1e-12));
    }

    #[test]
    fn self_adjoint_examples() {
        assert!(QOperator::identity(2).is_self_adjoint(1e-12));
        assert!(!one(Quaternion::I).is_self_adjoint(1e-12));
        let mut r = rng(6);
        let t = random_self_adjoint(&mut r, 4);
        assert!(t.is_self_adjoint(1e-12));
        // quadratic form test agrees
        for _ in 0..50 {
            let f = random_vector(&mut r, 4);
            assert!(t.quadratic_form(&f).unwrap().is_real(1e-12));
        }
        let q = one(Quaternion::I).quadratic_form(&QVector::new(vec![Quaternion::ONE])).unwrap();
        assert!(!q.is_real(1e-12));
    }

    #[test]
    fn positivity_examples() {
        assert!(QOperator::identity(3).is_positive(1e-10).unwrap());
        assert!(!QOperator::scalar(3, -1.0).is_positive(1e-10).unwrap());
        assert!(!one(Quaternion::I).is_positive(1e-10).unwrap());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(QOperator::identity(3).inverse().unwrap(), QOperator::identity(3));
        assert_eq!(QOperator::scalar(2, 2.0).inverse().unwrap(), QOperator::scalar(2, 0.5));
        assert!(matches!(QOperator::zeros(2).inverse(), Err(Error::Singular { .. })));
        let rank_one = QOperator::outer(&QVector::basis(2, 0), &QVector::basis(2, 0)).unwrap();
        assert!(matches!(rank_one.inverse(), Err(Error::Singular { .. })));
        let mut r = rng(7);
        for n in 1..=8 {
            let t = random_operator(&mut r, n);
            let inv = t.inverse().unwrap();
            let id = QOperator::identity(n);
            assert!((&t * &inv).max_abs_diff(&id) <= 1e-9 * n as f64);
            assert!((&inv * &t).max_abs_diff(&id) <= 1e-9 * n as f64);
        }
    }

    #[test]
    fn singular_threshold_scales() {
        let big = QOperator::from_reals(2, &[1e20, 0.0, 0.0, 1e6]);
        assert!(big.inverse().is_err());
        let small = QOperator::from_reals(2, &[1e-20, 0.0, 0.0, 1e-6]);
        assert!(small.inverse().is_err());
        let fine = QOperator::from_reals(2, &[1e-20, 0.0, 0.0, 1e-20]);
        assert!(fine.inverse().is_ok());
    }

    #[test]
    fn sqrt_examples() {
        assert!(QOperator::identity(2).sqrt_psd().unwrap().max_abs_diff(&QOperator::identity(2)) <= 1e-14);
        assert!(QOperator::scalar(3, 4.0).sqrt_psd().unwrap().max_abs_diff(&QOperator::scalar(3, 2.0)) <= 1e-14);
        assert_eq!(QOperator::scalar(2, -1.0).sqrt_psd(), Err(Error::NotPositive));
        let mut r = rng(8);
        for n in 1..=6 {
            let t = random_gl_plus(&mut r, n);
            let root = t.sqrt_psd().unwrap();
            assert!(root.is_self_adjoint(1e-10));
            assert!(root.is_positive(1e-10).unwrap());
            assert!((&root * &root).max_abs_diff(&t) <= 1e-8 * t.op_norm());
        }
    }

    #[test]
    fn norm_examples() {
        assert!((QOperator::identity(3).op_norm() - 1.0).abs() < 1e-14);
        assert!((QOperator::scalar(2, 3.0).op_norm() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn op_norm_against_sampled_supremum() {
        // Monte-Carlo lower bound on sup |⟨φ|Tφ⟩|; the best samples are then
        // refined by power iteration on T∘T, which stays in ℍⁿ and never
        // touches the complex embedding.
        let mut r = rng(9);
        for n in 1..=4 {
            for _ in 0..5 {
                let t = random_self_adjoint(&mut r, n);
                let qf = |f: &QVector| t.quadratic_form(f).unwrap().norm();
                let mut samples: Vec<(f64, QVector)> = (0..10_000)
                    .map(|_| {
                        let f = random_vector(&mut r, n);
                        let f = f.scale_real(1.0 / f.norm());
                        (qf(&f), f)
                    })
                    .collect();
                let sampled = samples.iter().map(|s| s.0).fold(0.0, f64::max);
                let norm = t.op_norm();
                assert!(sampled <= norm * (1.0 + 1e-12), "sampled {sampled} > norm {norm}");
                samples.sort_by(|a, b| b.0.total_cmp(&a.0));
                let mut refined = sampled;
                for (_, f) in samples.into_iter().take(8) {
                    let mut v = f;
                    for _ in 0..200 {
                        let w = t.apply(&t.apply(&v).unwrap()).unwrap();
                        v = w.scale_real(1.0 / w.norm());
                    }
                    refined = refined.max(qf(&v));
                }
                assert!(refined <= norm * (1.0 + 1e-12));
                assert!(norm <= refined * 1.1, "norm {norm} vs refined sup {refined}");
                let spec = t.spectrum().unwrap();
                let max_abs = spec[0].abs().max(spec[n - 1].abs());
                assert!((norm - max_abs).abs() <= 1e-12 * norm.max(1.0));
            }
        }
    }

    #[test]
    fn gl_examples() {
        let id = QOperator::identity(2);
        assert!(id.in_gl(1e-10) && id.in_gl_plus(1e-10));
        let i = one(Quaternion::I);
        assert!(i.in_gl(1e-10) && !i.in_gl_plus(1e-10));
        let z = QOperator::zeros(2);
        assert!(!z.in_gl(1e-10) && !z.in_gl_plus(1e-10));
    }

    #[test]
    fn positivity_equivalences_consistent() {
        let mut r = rng(10);
        for n in 1..=6 {
            let t = random_gl_plus(&mut r, n);
            let samples: Vec<_> = (0..100).map(|_| random_vector(&mut r, n)).collect();
            let rep = positivity_equivalence(&t, &samples, 1e-9);
            assert!(rep.consistent() && rep.in_gl_plus, "{rep:?}");
        }
        let samples = vec![QVector::basis(2, 0)];
        for t in [QOperator::zeros(2), QOperator::scalar(2, -1.0), QOperator::diagonal_real(&[1.0, 0.0])] {
            let rep = positivity_equivalence(&t, &samples, 1e-9);
            assert!(rep.consistent() && !rep.in_gl_plus, "{rep:?}");
        }
    }

    #[test]
    fn text_format() {
        let t = QOperator::from_entries(2, vec![Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::new(0.25, 0.0, 0.0, -1e-30)]).unwrap();
        let back = QOperator::parse(&t.to_string()).unwrap();
        assert_eq!(back, t);
        assert!(matches!(QOperator::parse("2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(QOperator::parse("1 1\n1 0 0\n"), Err(Error::Parse { line: 2, .. })));
    }
}
