//! Frames controlled by an invertible operator.
//!
//! For `ℭ ∈ 𝒢ℒ`, the controlled frame operator is
//! `S_ℭ ψ = Σ_k ⟨ψ|φ_k⟩ ℭφ_k = (ℭ∘S) ψ`, and the family is `ℭ`-controlled
//! exactly when `S_ℭ ∈ 𝒢ℒ⁺`. The tight controlled bounds are the extreme
//! eigenvalues of `S_ℭ`.
//!
//! Tolerances passed to this module are relative: they are multiplied by
//! `max(1, ‖·‖)` of the operator under test.

use rand::Rng;

use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::hilbert::QVector;
use crate::operator::QOperator;
use crate::quaternion::Quaternion;
use crate::random::{random_gl_plus, rng_from_seed};

/// `ℭ ∘ S` as a stored matrix.
pub fn controlled_frame_operator(frame: &Frame, controller: &QOperator) -> Result<QOperator> {
    crate::hilbert::check_dim(frame.dim(), controller.dim())?;
    Ok(controller * frame.frame_operator())
}

/// `Σ_k ⟨ψ|φ_k⟩ ℭφ_k` accumulated term by term as `Σ_k φ_k* (ℭφ_k)`.
pub fn controlled_frame_operator_by_sum(frame: &Frame, controller: &QOperator) -> Result<QOperator> {
    crate::hilbert::check_dim(frame.dim(), controller.dim())?;
    let mut s = QOperator::zeros(frame.dim());
    for phi in frame.vectors() {
        s.add_outer(Quaternion::ONE, phi, &controller.apply_unchecked(phi));
    }
    Ok(s)
}

/// `Σ_k ⟨ψ|φ_k⟩⟨ℭφ_k|ψ⟩`, evaluated from the defining sum.
pub fn controlled_quadratic_form(frame: &Frame, controller: &QOperator, psi: &QVector) -> Result<Quaternion> {
    crate::hilbert::check_dim(frame.dim(), psi.dim())?;
    crate::hilbert::check_dim(frame.dim(), controller.dim())?;
    Ok(frame
        .vectors()
        .iter()
        .map(|phi| psi.inner_unchecked(phi) * controller.apply_unchecked(phi).inner_unchecked(psi))
        .sum())
}

fn scale_of(t: &QOperator) -> f64 {
    t.max_abs().max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ControlledCheck {
    pub is_controlled: bool,
    /// Tight controlled bounds; `NaN` unless `S_ℭ` is self-adjoint.
    pub lower: f64,
    pub upper: f64,
    /// `S_ℭ ∈ 𝒢ℒ⁺`.
    pub in_gl_plus: bool,
    /// Largest `|Im Σ_k ⟨ψ|φ_k⟩⟨ℭφ_k|ψ⟩| / ‖ψ‖²` over the samples.
    pub max_imaginary: f64,
    /// Every sampled form is real within tolerance.
    pub form_real: bool,
    /// Every sampled form lies in `[A‖ψ‖², B‖ψ‖²]` (only meaningful when
    /// the bounds are defined).
    pub form_within_bounds: bool,
}

/// Checks the controlled-frame inequality for `ℭ`.
///
/// The realness of the sampled quadratic form is a separate precondition of
/// `is_controlled`, reported in `form_real`.
pub fn check_controlled(frame: &Frame, controller: &QOperator, tol: f64, samples: &[QVector]) -> Result<ControlledCheck> {
    if !controller.in_gl(tol * scale_of(controller)) {
        return Err(Error::ControllerNotInGL);
    }
    let sc = controlled_frame_operator(frame, controller)?;
    let scale = scale_of(&sc);
    let in_gl_plus = sc.in_gl_plus(tol);
    let (lower, upper) = if sc.is_self_adjoint(tol * scale) {
        let spec = sc.spectrum()?;
        (spec[0], spec[spec.len() - 1])
    } else {
        (f64::NAN, f64::NAN)
    };

    let mut max_imaginary = 0.0f64;
    let mut form_real = true;
    let mut form_within_bounds = lower.is_finite();
    for psi in samples {
        let nf = psi.norm_sqr();
        if nf == 0.0 {
            continue;
        }
        let q = controlled_quadratic_form(frame, controller, psi)?;
        let imag = q.imag_norm() / nf;
        max_imaginary = max_imaginary.max(imag);
        if imag > tol * scale {
            form_real = false;
        }
        if lower.is_finite() {
            let slack = tol * scale * nf;
            if q.w < lower * nf - slack || q.w > upper * nf + slack {
                form_within_bounds = false;
            }
        }
    }

    Ok(ControlledCheck {
        is_controlled: in_gl_plus && form_real,
        lower,
        upper,
        in_gl_plus,
        max_imaginary,
        form_real,
        form_within_bounds,
    })
}

/// A frame together with a controller that makes it controlled.
#[derive(Debug, Clone)]
pub struct ControlledFrame {
    base: Frame,
    controller: QOperator,
    operator: QOperator,
    bounds: (f64, f64),
}

impl ControlledFrame {
    pub fn new(base: Frame, controller: QOperator, tol: f64) -> Result<Self> {
        let check = check_controlled(&base, &controller, tol, &[])?;
        if !check.is_controlled {
            return Err(Error::NotPositive);
        }
        let operator = controlled_frame_operator(&base, &controller)?;
        Ok(Self { base, controller, operator, bounds: (check.lower, check.upper) })
    }

    pub fn base(&self) -> &Frame {
        &self.base
    }

    pub fn controller(&self) -> &QOperator {
        &self.controller
    }

    pub fn operator(&self) -> &QOperator {
        &self.operator
    }

    pub fn bounds(&self) -> (f64, f64) {
        self.bounds
    }

    /// `Ŝ = ℭ⁻¹ S_ℭ`, which recovers the frame operator.
    pub fn recovered_frame_operator(&self) -> Result<QOperator> {
        Ok(&self.controller.inverse()? * &self.operator)
    }
}

/// Residuals for the conclusions drawn from a controlled frame: the family
/// is a frame, `ℭS = Sℭ†`, and the two sums agree.
#[derive(Debug, Clone, PartialEq)]
pub struct NcReport {
    pub base_is_frame: bool,
    pub base_lower: f64,
    /// `‖ℭS − Sℭ†‖_F / ‖S‖`.
    pub commutation: f64,
    /// `max_ψ ‖Σ⟨ψ|φ_k⟩ℭφ_k − Σ⟨ψ|ℭφ_k⟩φ_k‖ / (‖S_ℭ‖ ‖ψ‖)`.
    pub two_sums: f64,
    /// `‖ℭ⁻¹S_ℭ − S‖_F / ‖S‖`.
    pub recovered: f64,
    pub passed: bool,
}

impl NcReport {
    pub fn max_residual(&self) -> f64 {
        self.commutation.max(self.two_sums).max(self.recovered)
    }
}

pub fn verify_prop_nc(frame: &Frame, controller: &QOperator, tol: f64, samples: &[QVector]) -> Result<NcReport> {
    let s = frame.frame_operator();
    let s_norm = s.op_norm().max(f64::MIN_POSITIVE);
    let sc = controlled_frame_operator(frame, controller)?;
    let sc_norm = sc.op_norm().max(f64::MIN_POSITIVE);

    // ℭ∘S against S∘ℭ†
    let commutation = (&sc - &(s * &controller.adjoint())).frobenius_norm() / s_norm;

    let mut two_sums = 0.0f64;
    for psi in samples {
        let np = psi.norm();
        if np == 0.0 {
            continue;
        }
        let mut left = QVector::zeros(frame.dim());
        let mut right = QVector::zeros(frame.dim());
        for phi in frame.vectors() {
            let c_phi = controller.apply_unchecked(phi);
            left.axpy(psi.inner_unchecked(phi), &c_phi);
            right.axpy(psi.inner_unchecked(&c_phi), phi);
        }
        two_sums = two_sums.max(left.distance(&right) / (sc_norm * np));
    }

    let recovered = match controller.inverse() {
        Ok(inv) => (&(&inv * &sc) - s).frobenius_norm() / s_norm,
        Err(_) => f64::INFINITY,
    };

    let (base_lower, _) = frame.optimal_bounds();
    let base_is_frame = frame.is_frame();
    let passed = base_is_frame && commutation <= tol && two_sums <= tol && recovered <= tol;
    Ok(NcReport { base_is_frame, base_lower, commutation, two_sums, recovered, passed })
}

/// Both directions of: for self-adjoint `ℭ ∈ 𝒢ℒ`, the family is
/// `ℭ`-controlled iff it is a frame, `ℭ` is positive and `ℭS = Sℭ`.
#[derive(Debug, Clone, PartialEq)]
pub struct CfproReport {
    pub controlled: bool,
    pub is_frame: bool,
    pub controller_positive: bool,
    /// `‖ℭS − Sℭ‖_F / ‖ℭ∘S‖`.
    pub commutator: f64,
    pub commuting: bool,
    pub forward: bool,
    pub backward: bool,
}

pub fn verify_prop_cfpro(frame: &Frame, controller: &QOperator, tol: f64, samples: &[QVector]) -> Result<CfproReport> {
    let dev = controller.self_adjoint_deviation();
    if dev > tol * scale_of(controller) {
        return Err(Error::NotSelfAdjoint { deviation: dev });
    }
    let check = check_controlled(frame, controller, tol, samples)?;
    let s = frame.frame_operator();
    let cs = controller * s;
    let sc = s * controller;
    let commutator = (&cs - &sc).frobenius_norm() / cs.frobenius_norm().max(f64::MIN_POSITIVE);
    let commuting = commutator <= tol;
    let is_frame = frame.is_frame();
    let controller_positive = controller.is_positive(tol)?;
    let hypotheses = is_frame && controller_positive && commuting;
    Ok(CfproReport {
        controlled: check.is_controlled,
        is_frame,
        controller_positive,
        commutator,
        commuting,
        forward: !check.is_controlled || hypotheses,
        backward: !hypotheses || check.is_controlled,
    })
}

/// `c₀ I + c₁ S + c₂ S²`.
pub fn commuting_polynomial(frame: &Frame, coeffs: [f64; 3]) -> QOperator {
    let s = frame.frame_operator();
    let s2 = s * s;
    let n = frame.dim();
    &(&QOperator::scalar(n, coeffs[0]) + &s.scale_real(coeffs[1])) + &s2.scale_real(coeffs[2])
}

/// A positive controller commuting with `S`, coefficients drawn from
/// `[0.1, 2.0]` by a generator seeded with `seed`.
pub fn random_commuting_positive(frame: &Frame, seed: u64) -> QOperator {
    let mut rng = rng_from_seed(seed);
    let coeffs = [rng.random_range(0.1..=2.0), rng.random_range(0.1..=2.0), rng.random_range(0.1..=2.0)];
    commuting_polynomial(frame, coeffs)
}

/// A positive invertible controller whose commutator with `S` exceeds
/// `1e-6` relative; `None` if the draw happened to commute.
pub fn random_noncommuting_positive<R: Rng + ?Sized>(frame: &Frame, rng: &mut R) -> Option<QOperator> {
    let c = random_gl_plus(rng, frame.dim());
    let s = frame.frame_operator();
    let comm = (&(&c * s) - &(s * &c)).frobenius_norm() / (&c * s).frobenius_norm();
    (comm > 1e-6).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::mercedes;
    use crate::testutil::{random_vector, rng};

    const TOL: f64 = 1e-9;

    fn random_frame(r: &mut crate::testutil::TrialRng, n: usize, m: usize) -> Frame {
        loop {
            let f = Frame::new((0..m).map(|_| random_vector(r, n)).collect()).unwrap();
            if f.optimal_bounds().0 > 1e-3 {
                return f;
            }
        }
    }

    fn samples(r: &mut crate::testutil::TrialRng, n: usize) -> Vec<QVector> {
        (0..64).map(|_| random_vector(r, n)).collect()
    }

    #[test]
    fn operator_examples() {
        let mut r = rng(1);
        let f = random_frame(&mut r, 3, 6);
        let s = f.frame_operator();
        let n = 3;
        assert!(controlled_frame_operator(&f, &QOperator::identity(n)).unwrap().max_abs_diff(s) <= 1e-15);
        let inv = s.inverse().unwrap();
        assert!(controlled_frame_operator(&f, &inv).unwrap().max_abs_diff(&QOperator::identity(n)) <= 1e-12);
        let two = controlled_frame_operator(&f, &QOperator::scalar(n, 2.0)).unwrap();
        assert!(two.max_abs_diff(&s.scale_real(2.0)) <= 1e-14);
        assert!(controlled_frame_operator(&f, &QOperator::identity(2)).is_err());
    }

    #[test]
    fn matrix_matches_defining_sum() {
        let mut r = rng(2);
        for n in 1..=5 {
            let f = random_frame(&mut r, n, 2 * n);
            let c = crate::testutil::random_operator(&mut r, n);
            let a = controlled_frame_operator(&f, &c).unwrap();
            let b = controlled_frame_operator_by_sum(&f, &c).unwrap();
            assert!(a.max_abs_diff(&b) <= 1e-12);
            let psi = random_vector(&mut r, n);
            let form = controlled_quadratic_form(&f, &c, &psi).unwrap();
            assert!(form.approx_eq(a.quadratic_form(&psi).unwrap(), 1e-11));
        }
    }

    #[test]
    fn check_examples() {
        let mut r = rng(3);
        let b = Frame::standard_basis(3);
        let rep = check_controlled(&b, &QOperator::identity(3), TOL, &samples(&mut r, 3)).unwrap();
        assert!(rep.is_controlled && (rep.lower - 1.0).abs() < 1e-12 && (rep.upper - 1.0).abs() < 1e-12);

        let f = random_frame(&mut r, 4, 9);
        let inv = f.frame_operator().inverse().unwrap();
        let rep = check_controlled(&f, &inv, TOL, &samples(&mut r, 4)).unwrap();
        assert!(rep.is_controlled && (rep.lower - 1.0).abs() < 1e-9 && (rep.upper - 1.0).abs() < 1e-9);

        let m = mercedes();
        let rep = check_controlled(&m, &QOperator::scalar(2, -1.0), TOL, &samples(&mut r, 2)).unwrap();
        assert!(!rep.is_controlled);

        assert_eq!(check_controlled(&m, &QOperator::zeros(2), TOL, &[]), Err(Error::ControllerNotInGL));
    }

    #[test]
    fn nc_examples() {
        let mut r = rng(4);
        let f = random_frame(&mut r, 4, 8);
        let smp = samples(&mut r, 4);
        let rep = verify_prop_nc(&f, &QOperator::identity(4), TOL, &smp).unwrap();
        assert!(rep.passed && rep.commutation == 0.0 && rep.two_sums <= 1e-15, "{rep:?}");

        let c = commuting_polynomial(&f, [0.5, 1.0, 0.25]);
        let rep = verify_prop_nc(&f, &c, TOL, &smp).unwrap();
        assert!(rep.passed, "{rep:?}");

        let inv = f.frame_operator().inverse().unwrap();
        let rep = verify_prop_nc(&f, &inv, TOL, &smp).unwrap();
        assert!(rep.passed && rep.commutation <= 1e-12, "{rep:?}");
    }

    #[test]
    fn controlled_frame_type() {
        let mut r = rng(5);
        let f = random_frame(&mut r, 3, 5);
        let c = random_commuting_positive(&f, 17);
        let cf = ControlledFrame::new(f.clone(), c.clone(), TOL).unwrap();
        let (a, b) = cf.bounds();
        assert!(0.0 < a && a <= b);
        let rec = cf.recovered_frame_operator().unwrap();
        assert!(rec.max_abs_diff(f.frame_operator()) <= 1e-10 * f.frame_operator().max_abs());
        assert!(cf.operator().is_self_adjoint(1e-10 * cf.operator().max_abs()));
        assert!(ControlledFrame::new(f, QOperator::scalar(3, -1.0), TOL).is_err());
    }

    #[test]
    fn cfpro_examples() {
        let mut r = rng(6);
        let f = random_frame(&mut r, 3, 7);
        let smp = samples(&mut r, 3);
        let rep = verify_prop_cfpro(&f, &QOperator::identity(3), TOL, &smp).unwrap();
        assert!(rep.forward && rep.backward && rep.controlled);

        let rep = verify_prop_cfpro(&f, &commuting_polynomial(&f, [1.0, 0.5, 0.0]), TOL, &smp).unwrap();
        assert!(rep.forward && rep.backward && rep.controlled && rep.commuting);

        // positive, not commuting with the Mercedes frame operator
        let m = mercedes();
        let c = QOperator::diagonal_real(&[1.0, 3.0]);
        let smp2 = samples(&mut r, 2);
        let rep = verify_prop_cfpro(&m, &c, TOL, &smp2).unwrap();
        assert!(rep.commutator > 1e-6 && !rep.commuting && rep.controller_positive);
        assert!(!rep.controlled && rep.forward && rep.backward);
        let check = check_controlled(&m, &c, TOL, &smp2).unwrap();
        assert!(!check.form_real && check.max_imaginary > 1e-6 || !check.in_gl_plus);

        let not_sa = QOperator::from_entries(2, vec![Quaternion::ONE, Quaternion::I, Quaternion::ZERO, Quaternion::ONE]).unwrap();
        assert!(matches!(verify_prop_cfpro(&m, &not_sa, TOL, &smp2), Err(Error::NotSelfAdjoint { .. })));
    }

    #[test]
    fn commuting_generator() {
        let mut r = rng(7);
        let f = random_frame(&mut r, 3, 6);
        assert!(commuting_polynomial(&f, [1.0, 0.0, 0.0]).max_abs_diff(&QOperator::identity(3)) == 0.0);
        assert!(commuting_polynomial(&f, [0.0, 1.0, 0.0]).max_abs_diff(f.frame_operator()) == 0.0);
        let s = f.frame_operator();
        for seed in 0..100 {
            let c = random_commuting_positive(&f, seed);
            let comm = (&(&c * s) - &(s * &c)).max_abs();
            assert!(comm <= 1e-10 * (&c * s).max_abs().max(1.0));
            assert!(c.is_self_adjoint(1e-10 * c.max_abs()));
            assert!(c.in_gl_plus(1e-10));
        }
        assert_eq!(random_commuting_positive(&f, 3), random_commuting_positive(&f, 3));
    }
}
