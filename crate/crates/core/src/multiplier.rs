//! Weighted frames and frame multipliers.
//!
//! The multiplier with symbol `m` for frames `Φ ⊂ V` and `Ψ ⊂ U` is
//! `M_{m,Φ,Ψ} h = Σ_k m_k ⟨h|ψ_k⟩ φ_k`, a map `U → V`. The symbol multiplies
//! from the left. For real symbols this is left-linear and has a matrix
//! realization; quaternion symbols are accepted by [`Multiplier::apply`]
//! only.

use rand::Rng;

use crate::error::{Error, Result};
use crate::frames::{self, Frame, FRAME_TOL};
use crate::hilbert::{check_dim, QVector};
use crate::operator::QOperator;
use crate::quaternion::Quaternion;
use crate::random::{random_orthonormal_basis, random_unit_quaternion, rng_from_seed};

#[derive(Debug, Clone, PartialEq)]
pub enum Symbol {
    Real(Vec<f64>),
    Quaternion(Vec<Quaternion>),
}

impl Symbol {
    pub fn constant(value: f64, len: usize) -> Self {
        Symbol::Real(vec![value; len])
    }

    pub fn len(&self) -> usize {
        match self {
            Symbol::Real(v) => v.len(),
            Symbol::Quaternion(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_real(&self) -> Option<&[f64]> {
        match self {
            Symbol::Real(v) => Some(v),
            Symbol::Quaternion(_) => None,
        }
    }

    fn magnitudes(&self) -> Vec<f64> {
        match self {
            Symbol::Real(v) => v.iter().map(|x| x.abs()).collect(),
            Symbol::Quaternion(v) => v.iter().map(|q| q.norm()).collect(),
        }
    }

    fn entry(&self, k: usize) -> Quaternion {
        match self {
            Symbol::Real(v) => Quaternion::real(v[k]),
            Symbol::Quaternion(v) => v[k],
        }
    }

    /// Tight `(min |m_k|, max |m_k|)` when the minimum is positive.
    pub fn semi_normalized_bounds(&self) -> Option<(f64, f64)> {
        let mags = self.magnitudes();
        if mags.is_empty() {
            return None;
        }
        let a = mags.iter().copied().fold(f64::INFINITY, f64::min);
        let b = mags.iter().copied().fold(0.0, f64::max);
        (a > 0.0 && b.is_finite()).then_some((a, b))
    }

    pub fn is_positive(&self) -> bool {
        self.as_real().is_some_and(|v| !v.is_empty() && v.iter().all(|&x| x > 0.0))
    }

    pub fn is_negative(&self) -> bool {
        self.as_real().is_some_and(|v| !v.is_empty() && v.iter().all(|&x| x < 0.0))
    }

    /// Reads the symbol file format: one real per line, `#` comments.
    pub fn parse(text: &str) -> Result<Symbol> {
        Ok(Symbol::Real(crate::io::parse_reals(text)?))
    }
}

pub fn is_semi_normalized(s: &Symbol) -> Option<(f64, f64)> {
    s.semi_normalized_bounds()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedBounds {
    pub lower: f64,
    pub upper: f64,
    pub is_w_frame: bool,
}

fn positive_weights<'a>(frame: &Frame, w: &'a Symbol) -> Result<&'a [f64]> {
    let weights = w.as_real().ok_or(Error::NonPositiveWeights)?;
    if weights.len() != frame.len() {
        return Err(Error::CardinalityMismatch { left: weights.len(), right: frame.len() });
    }
    if !w.is_positive() {
        return Err(Error::NonPositiveWeights);
    }
    Ok(weights)
}

/// Tight bounds in `A‖ψ‖² ≤ Σ ω_k |⟨ψ|φ_k⟩|² ≤ B‖ψ‖²`: the extreme
/// eigenvalues of `Σ_k ω_k φ_k* φ_k`.
pub fn weighted_frame_bounds(frame: &Frame, w: &Symbol) -> Result<WeightedBounds> {
    let weights = positive_weights(frame, w)?;
    let op = frames::weighted_frame_operator_of(frame.dim(), frame.vectors(), |k| Quaternion::real(weights[k]));
    let spec = op.spectrum()?;
    let (lower, upper) = (spec[0], spec[spec.len() - 1]);
    Ok(WeightedBounds { lower, upper, is_w_frame: lower > FRAME_TOL * upper.max(1.0) })
}

/// `M_{m,Φ,Ψ}`.
#[derive(Debug, Clone)]
pub struct Multiplier<'a> {
    symbol: &'a Symbol,
    synthesis: &'a Frame,
    analysis: &'a Frame,
}

impl<'a> Multiplier<'a> {
    /// `phi` synthesizes in `V`, `psi` analyzes in `U`.
    pub fn new(symbol: &'a Symbol, phi: &'a Frame, psi: &'a Frame) -> Result<Self> {
        if phi.len() != psi.len() {
            return Err(Error::CardinalityMismatch { left: phi.len(), right: psi.len() });
        }
        if symbol.len() != phi.len() {
            return Err(Error::CardinalityMismatch { left: symbol.len(), right: phi.len() });
        }
        Ok(Self { symbol, synthesis: phi, analysis: psi })
    }

    pub fn input_dim(&self) -> usize {
        self.analysis.dim()
    }

    pub fn output_dim(&self) -> usize {
        self.synthesis.dim()
    }

    /// `Σ_k m_k ⟨h|ψ_k⟩ φ_k`.
    pub fn apply(&self, h: &QVector) -> Result<QVector> {
        check_dim(self.input_dim(), h.dim())?;
        let mut out = QVector::zeros(self.output_dim());
        for (k, (phi, psi)) in self.synthesis.vectors().iter().zip(self.analysis.vectors()).enumerate() {
            out.axpy(self.symbol.entry(k) * h.inner_unchecked(psi), phi);
        }
        Ok(out)
    }

    /// Matrix realization `Σ_k ψ_k* m_k φ_k` for real symbols.
    pub fn matrix(&self) -> Result<MultiplierMatrix> {
        let weights = self
            .symbol
            .as_real()
            .ok_or_else(|| Error::InvalidConfig("quaternion symbols are not left-linear; no matrix realization".into()))?;
        let (rows, cols) = (self.input_dim(), self.output_dim());
        let mut entries = vec![Quaternion::ZERO; rows * cols];
        for ((phi, psi), &m) in self.synthesis.vectors().iter().zip(self.analysis.vectors()).zip(weights) {
            for j in 0..rows {
                let left = psi[j].conj().scale(m);
                for i in 0..cols {
                    entries[j * cols + i] += left * phi[i];
                }
            }
        }
        Ok(MultiplierMatrix { rows, cols, entries })
    }

    /// Square matrix realization as an operator.
    pub fn operator(&self) -> Result<QOperator> {
        self.matrix()?.into_operator()
    }
}

/// Rectangular matrix in the row action convention: `rows` is the input
/// dimension, `cols` the output dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Quaternion>,
}

impl MultiplierMatrix {
    pub fn apply(&self, h: &QVector) -> Result<QVector> {
        check_dim(self.rows, h.dim())?;
        let mut out = vec![Quaternion::ZERO; self.cols];
        for (j, &hj) in h.components().iter().enumerate() {
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += hj * self.entries[j * self.cols + i];
            }
        }
        Ok(QVector::new(out))
    }

    pub fn into_operator(self) -> Result<QOperator> {
        check_dim(self.rows, self.cols)?;
        QOperator::from_entries(self.rows, self.entries)
    }
}

pub fn multiplier_apply(m: &Symbol, phi: &Frame, psi: &Frame, h: &QVector) -> Result<QVector> {
    Multiplier::new(m, phi, psi)?.apply(h)
}

pub fn multiplier_operator(m: &Symbol, phi: &Frame, psi: &Frame) -> Result<MultiplierMatrix> {
    Multiplier::new(m, phi, psi)?.matrix()
}

/// Relative-threshold membership in `𝒢ℒ⁺` through the spectrum.
fn gl_plus_spectral(t: &QOperator, tol: f64) -> bool {
    if !t.is_self_adjoint(tol * t.max_abs().max(1.0)) {
        return false;
    }
    match t.spectrum() {
        Ok(s) => s[0] > tol * s[s.len() - 1].abs().max(1.0),
        Err(_) => false,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Wl1Report {
    pub symbol_bounds: (f64, f64),
    pub frame_bounds: (f64, f64),
    /// Optimal bounds of `{ω_k φ_k}`.
    pub scaled_bounds: (f64, f64),
    /// Largest relative amount by which the scaled bounds leave
    /// `[a²A, b²B]`; zero when contained.
    pub violation: f64,
    pub passed: bool,
}

/// Optimal bounds of `{ω_k φ_k}` against `[a²A, b²B]`.
pub fn verify_wl1(frame: &Frame, w: &Symbol, tol: f64) -> Result<Wl1Report> {
    let (a, b) = w.semi_normalized_bounds().ok_or(Error::NotSemiNormalized)?;
    let weights = w.as_real().ok_or(Error::NotSemiNormalized)?;
    if !frame.is_frame() {
        return Err(Error::NotAFrame { lower: frame.optimal_bounds().0 });
    }
    let (big_a, big_b) = frame.optimal_bounds();
    let scaled = frame.scaled(weights)?;
    let (lo, hi) = scaled.optimal_bounds();
    let lower_slack = (a * a * big_a - lo).max(0.0) / (a * a * big_a);
    let upper_slack = (hi - b * b * big_b).max(0.0) / (b * b * big_b);
    let violation = lower_slack.max(upper_slack);
    Ok(Wl1Report {
        symbol_bounds: (a, b),
        frame_bounds: (big_a, big_b),
        scaled_bounds: (lo, hi),
        violation,
        passed: violation <= tol,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Wl2Report {
    pub sign: Sign,
    /// `‖M − ±S_{√|m| φ}‖_F / ‖S‖`.
    pub residual: f64,
    pub self_adjoint: bool,
    /// Positive for a positive symbol, negative for a negative one.
    pub definite: bool,
    pub invertible: bool,
    pub passed: bool,
}

/// The multiplier of a single-signed semi-normalized symbol is `±` the frame
/// operator of `{√|m_k| φ_k}`.
pub fn verify_wl2(frame: &Frame, m: &Symbol, tol: f64) -> Result<Wl2Report> {
    let values = m.as_real().ok_or(Error::MixedSignSymbol)?;
    if values.len() != frame.len() {
        return Err(Error::CardinalityMismatch { left: values.len(), right: frame.len() });
    }
    let sign = if m.is_positive() {
        Sign::Positive
    } else if m.is_negative() {
        Sign::Negative
    } else {
        return Err(Error::MixedSignSymbol);
    };
    let mult = Multiplier::new(m, frame, frame)?.operator()?;
    let roots: Vec<f64> = values.iter().map(|v| v.abs().sqrt()).collect();
    let rescaled = frame.scaled(&roots)?;
    let reference = match sign {
        Sign::Positive => rescaled.frame_operator().clone(),
        Sign::Negative => -rescaled.frame_operator(),
    };
    let s_norm = frame.frame_operator().op_norm().max(f64::MIN_POSITIVE);
    let residual = (&mult - &reference).frobenius_norm() / s_norm;
    let scale = mult.max_abs().max(1.0);
    let self_adjoint = mult.is_self_adjoint(1e-10 * scale);
    let oriented = match sign {
        Sign::Positive => mult.clone(),
        Sign::Negative => -&mult,
    };
    let definite = oriented.is_positive(1e-10)?;
    let invertible = gl_plus_spectral(&oriented, FRAME_TOL);
    Ok(Wl2Report {
        sign,
        residual,
        self_adjoint,
        definite,
        invertible,
        passed: residual <= tol && self_adjoint && definite && invertible,
    })
}

/// The five equivalent conditions for a positive semi-normalized weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremReport {
    /// `{φ_k}` is a frame.
    pub frame: bool,
    /// `M_{ω,Φ}` is positive and invertible.
    pub multiplier_gl_plus: bool,
    /// The weighted inequality has bounds `A > 0`.
    pub weighted_bounds: bool,
    /// `{√ω_k φ_k}` is a frame.
    pub root_scaled_frame: bool,
    /// `{ω_k φ_k}` is a frame.
    pub scaled_frame: bool,
}

impl TheoremReport {
    pub fn all(&self) -> [bool; 5] {
        [self.frame, self.multiplier_gl_plus, self.weighted_bounds, self.root_scaled_frame, self.scaled_frame]
    }

    pub fn agree(&self) -> bool {
        let a = self.all();
        a.iter().all(|&x| x == a[0])
    }
}

/// Evaluates each condition by its own computation. `tol` is the relative
/// spectral threshold separating frames from non-frames.
pub fn verify_theorem_equiv(family: &Frame, w: &Symbol, tol: f64) -> Result<TheoremReport> {
    let weights = positive_weights(family, w)?;
    w.semi_normalized_bounds().ok_or(Error::NotSemiNormalized)?;
    let decide = |(lo, hi): (f64, f64)| lo > tol * hi.max(1.0);

    let frame = decide(family.optimal_bounds());

    // multiplier assembled column by column from its defining sum
    let mult = Multiplier::new(w, family, family)?;
    let n = family.dim();
    let mut entries = Vec::with_capacity(n * n);
    for j in 0..n {
        entries.extend_from_slice(mult.apply(&QVector::basis(n, j))?.components());
    }
    let multiplier_gl_plus = gl_plus_spectral(&QOperator::from_entries(n, entries)?, tol);

    let wb = weighted_frame_bounds(family, w)?;
    let weighted_bounds = decide((wb.lower, wb.upper));

    let roots: Vec<f64> = weights.iter().map(|v| v.sqrt()).collect();
    let root_scaled_frame = decide(family.scaled(&roots)?.optimal_bounds());
    let scaled_frame = decide(family.scaled(weights)?.optimal_bounds());

    Ok(TheoremReport { frame, multiplier_gl_plus, weighted_bounds, root_scaled_frame, scaled_frame })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prop44Report {
    pub dim: usize,
    pub eigenvalues: Vec<f64>,
    /// `ω_k`, read off the relation `ℭφ_k = ω_k φ_k`.
    pub omega: Vec<f64>,
    /// `max_k ‖ℭφ_k − ω_k φ_k‖`.
    pub eigen_residual: f64,
    pub omega_in_range: bool,
    pub semi_normalized: bool,
    pub positive: bool,
    /// `‖ℭ − M_{ω,Φ̃,Φ}‖_F / ‖ℭ‖`.
    pub reconstruction: f64,
    pub passed: bool,
}

/// Runs the diagonal-controller construction on explicit data: `basis` is
/// orthonormal, `ℭ = Σ_i d_i e_i* e_i`, and `Φ = {u_k e_{assign[k]}}` for
/// unit quaternions `u_k`.
pub fn verify_prop44_instance(basis: &[QVector], d: &[f64], assign: &[usize], units: &[Quaternion], tol: f64) -> Result<Prop44Report> {
    let n = basis.len();
    if d.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d.len() });
    }
    if assign.len() != units.len() {
        return Err(Error::CardinalityMismatch { left: assign.len(), right: units.len() });
    }
    let mut controller = QOperator::zeros(n);
    for (e, &di) in basis.iter().zip(d) {
        controller.add_outer(Quaternion::real(di), e, e);
    }
    let vectors: Vec<QVector> = assign.iter().zip(units).map(|(&i, &u)| basis[i].left_scale(u)).collect();
    let phi = Frame::with_dim(n, vectors)?;
    if !phi.is_frame() {
        return Err(Error::NotAFrame { lower: phi.optimal_bounds().0 });
    }

    let mut omega = Vec::with_capacity(phi.len());
    let mut eigen_residual = 0.0f64;
    for v in phi.vectors() {
        let cv = controller.apply(v)?;
        let wk = cv.inner(v)?.w / v.norm_sqr();
        eigen_residual = eigen_residual.max(cv.distance(&v.scale_real(wk)));
        omega.push(wk);
    }
    let dmin = d.iter().copied().fold(f64::INFINITY, f64::min);
    let dmax = d.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let slack = tol * dmax.abs().max(1.0);
    let omega_in_range = omega.iter().all(|&w| w >= dmin - slack && w <= dmax + slack);
    let symbol = Symbol::Real(omega.clone());
    let semi_normalized = symbol.semi_normalized_bounds().is_some();
    let positive = symbol.is_positive();

    let dual = phi.canonical_dual()?;
    let m = Multiplier::new(&symbol, &dual, &phi)?.operator()?;
    let reconstruction = (&controller - &m).frobenius_norm() / controller.op_norm().max(f64::MIN_POSITIVE);

    let passed = eigen_residual <= tol * dmax.max(1.0) && omega_in_range && semi_normalized && positive && reconstruction <= tol;
    Ok(Prop44Report { dim: n, eigenvalues: d.to_vec(), omega, eigen_residual, omega_in_range, semi_normalized, positive, reconstruction, passed })
}

/// Random instance of the diagonal-controller construction: `n ∈ [1, 8]`,
/// `d_i ∈ [0.1, 4]`, every basis vector used once plus up to `n` repeats.
pub fn verify_prop44(seed: u64, tol: f64) -> Result<Prop44Report> {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(1..=8usize);
    let basis = random_orthonormal_basis(&mut rng, n);
    let d: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..=4.0)).collect();
    let mut assign: Vec<usize> = (0..n).collect();
    let extra = rng.random_range(0..=n);
    assign.extend((0..extra).map(|_| rng.random_range(0..n)));
    let units: Vec<Quaternion> = assign.iter().map(|_| random_unit_quaternion(&mut rng)).collect();
    verify_prop44_instance(&basis, &d, &assign, &units, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::mercedes;
    use crate::testutil::{random_vector, rng, TrialRng};

    fn random_frame(r: &mut TrialRng, n: usize, m: usize) -> Frame {
        loop {
            let f = Frame::new((0..m).map(|_| random_vector(r, n)).collect()).unwrap();
            if f.optimal_bounds().0 > 1e-3 {
                return f;
            }
        }
    }

    fn random_weights(r: &mut TrialRng, m: usize) -> Vec<f64> {
        (0..m).map(|_| r.random_range(0.1..=2.0)).collect()
    }

    #[test]
    fn semi_normalized_examples() {
        assert_eq!(is_semi_normalized(&Symbol::Real(vec![1.0, 1.0, 1.0])), Some((1.0, 1.0)));
        assert_eq!(is_semi_normalized(&Symbol::Real(vec![2.0, -3.0])), Some((2.0, 3.0)));
        assert_eq!(is_semi_normalized(&Symbol::Real(vec![1.0, 0.0, 1.0])), None);
        assert_eq!(is_semi_normalized(&Symbol::Quaternion(vec![Quaternion::I, Quaternion::real(2.0)])), Some((1.0, 2.0)));
        assert!(Symbol::Real(vec![1.0, 2.0]).is_positive());
        assert!(Symbol::Real(vec![-1.0, -2.0]).is_negative());
        assert!(!Symbol::Real(vec![-1.0, 2.0]).is_positive());
    }

    #[test]
    fn weighted_bounds_examples() {
        let mut r = rng(1);
        let f = random_frame(&mut r, 3, 6);
        let wb = weighted_frame_bounds(&f, &Symbol::constant(1.0, 6)).unwrap();
        let (a, b) = f.optimal_bounds();
        assert!((wb.lower - a).abs() <= 1e-12 * b && (wb.upper - b).abs() <= 1e-12 * b);

        let basis = Frame::standard_basis(4);
        let wb = weighted_frame_bounds(&basis, &Symbol::constant(4.0, 4)).unwrap();
        assert!((wb.lower - 4.0).abs() < 1e-12 && (wb.upper - 4.0).abs() < 1e-12);

        // Σ ω_k φ_k*φ_k = [[2,1],[1,2]] with eigenvalues 1 and 3
        let wb = weighted_frame_bounds(&mercedes(), &Symbol::Real(vec![1.0, 1.0, 2.0])).unwrap();
        assert!((wb.lower - 1.0).abs() < 1e-12 && (wb.upper - 3.0).abs() < 1e-12 && wb.is_w_frame);

        assert_eq!(weighted_frame_bounds(&mercedes(), &Symbol::Real(vec![1.0, 0.0, 2.0])), Err(Error::NonPositiveWeights));
    }

    #[test]
    fn weighted_bounds_match_root_scaled_frame() {
        let mut r = rng(2);
        for n in 1..=6 {
            let f = random_frame(&mut r, n, 2 * n + 1);
            let w = random_weights(&mut r, f.len());
            let wb = weighted_frame_bounds(&f, &Symbol::Real(w.clone())).unwrap();
            let roots: Vec<f64> = w.iter().map(|x| x.sqrt()).collect();
            let (a, b) = f.scaled(&roots).unwrap().optimal_bounds();
            assert!((wb.lower - a).abs() <= 1e-12 * b && (wb.upper - b).abs() <= 1e-12 * b);
        }
    }

    #[test]
    fn apply_examples() {
        let mut r = rng(3);
        let f = random_frame(&mut r, 3, 5);
        let h = random_vector(&mut r, 3);
        let ones = Symbol::constant(1.0, 5);
        let out = multiplier_apply(&ones, &f, &f, &h).unwrap();
        assert!(out.approx_eq(&f.frame_operator().apply(&h).unwrap(), 1e-12));
        assert!(multiplier_apply(&Symbol::constant(0.0, 5), &f, &f, &h).unwrap().is_zero());

        let w = random_weights(&mut r, 5);
        let out = multiplier_apply(&Symbol::Real(w.clone()), &f, &f, &h).unwrap();
        let roots: Vec<f64> = w.iter().map(|x| x.sqrt()).collect();
        let expect = f.scaled(&roots).unwrap().frame_operator().apply(&h).unwrap();
        assert!(out.approx_eq(&expect, 1e-12));

        let g = random_frame(&mut r, 3, 4);
        assert!(matches!(multiplier_apply(&ones, &f, &g, &h), Err(Error::CardinalityMismatch { .. })));
        assert!(matches!(multiplier_apply(&ones, &f, &f, &QVector::zeros(2)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn mercedes_hand_sum() {
        // m = (1, 1, 2), h = e₁: ⟨e₁|φ_k⟩ = (1, 0, 1/√2), so
        // M h = e₁ + 2·(1/√2)·(1/√2, 1/√2) = (2, 1)
        let m = mercedes();
        let out = multiplier_apply(&Symbol::Real(vec![1.0, 1.0, 2.0]), &m, &m, &QVector::basis(2, 0)).unwrap();
        assert!(out.approx_eq(&QVector::from_reals(&[2.0, 1.0]), 1e-15));
    }

    #[test]
    fn linearity_and_matrix_consistency() {
        let mut r = rng(4);
        // different dimensions: Ψ ⊂ ℍ³, Φ ⊂ ℍ²
        let psi = random_frame(&mut r, 3, 6);
        let phi = random_frame(&mut r, 2, 6);
        let sym = Symbol::Real(random_weights(&mut r, 6));
        let mult = Multiplier::new(&sym, &phi, &psi).unwrap();
        let mat = mult.matrix().unwrap();
        assert_eq!((mat.rows, mat.cols), (3, 2));
        assert!(mat.clone().into_operator().is_err());
        for _ in 0..10 {
            let h = random_vector(&mut r, 3);
            let g = random_vector(&mut r, 3);
            let q = crate::testutil::random_quaternion(&mut r);
            assert!(mat.apply(&h).unwrap().approx_eq(&mult.apply(&h).unwrap(), 1e-12));
            let lhs = mult.apply(&(&h.left_scale(q) + &g)).unwrap();
            let rhs = &mult.apply(&h).unwrap().left_scale(q) + &mult.apply(&g).unwrap();
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn quaternion_symbol_apply_only() {
        let f = Frame::standard_basis(2);
        let sym = Symbol::Quaternion(vec![Quaternion::I, Quaternion::J]);
        let h = QVector::new(vec![Quaternion::K, Quaternion::ONE]);
        // m_k ⟨h|e_k⟩ e_k: i·k = -j, j·1 = j
        let out = multiplier_apply(&sym, &f, &f, &h).unwrap();
        assert_eq!(out, QVector::new(vec![-Quaternion::J, Quaternion::J]));
        assert!(multiplier_operator(&sym, &f, &f).is_err());
    }

    #[test]
    fn operator_examples() {
        let b = Frame::standard_basis(3);
        let m = multiplier_operator(&Symbol::constant(1.0, 3), &b, &b).unwrap().into_operator().unwrap();
        assert_eq!(m, QOperator::identity(3));
        let mut r = rng(5);
        let f = random_frame(&mut r, 3, 5);
        let m = multiplier_operator(&Symbol::constant(2.0, 5), &f, &f).unwrap().into_operator().unwrap();
        assert!(m.max_abs_diff(&f.frame_operator().scale_real(2.0)) <= 1e-12);
        let sym = Symbol::Real(random_weights(&mut r, 5));
        let m = Multiplier::new(&sym, &f, &f).unwrap().operator().unwrap();
        assert!(m.is_self_adjoint(1e-10));
    }

    #[test]
    fn wl1_examples() {
        let mut r = rng(6);
        let f = random_frame(&mut r, 3, 7);
        let rep = verify_wl1(&f, &Symbol::constant(1.0, 7), 1e-9).unwrap();
        assert!(rep.passed && rep.scaled_bounds == rep.frame_bounds);
        let rep = verify_wl1(&f, &Symbol::constant(2.0, 7), 1e-9).unwrap();
        let (a, b) = f.optimal_bounds();
        assert!((rep.scaled_bounds.0 - 4.0 * a).abs() <= 1e-9 * a);
        assert!((rep.scaled_bounds.1 - 4.0 * b).abs() <= 1e-9 * b);
        for _ in 0..200 {
            let n = r.random_range(1..=6usize);
            let m = r.random_range(n..=3 * n);
            let f = random_frame(&mut r, n, m);
            let w: Vec<f64> = (0..f.len()).map(|_| r.random_range(0.1..=2.0) * if r.random_bool(0.5) { 1.0 } else { -1.0 }).collect();
            assert!(verify_wl1(&f, &Symbol::Real(w), 1e-9).unwrap().passed);
        }
        assert_eq!(verify_wl1(&f, &Symbol::Real(vec![0.0; 7]), 1e-9), Err(Error::NotSemiNormalized));
    }

    #[test]
    fn wl2_examples() {
        let mut r = rng(7);
        let f = random_frame(&mut r, 4, 9);
        let rep = verify_wl2(&f, &Symbol::constant(1.0, 9), 1e-10).unwrap();
        assert!(rep.passed && rep.sign == Sign::Positive);
        let rep = verify_wl2(&f, &Symbol::constant(-1.0, 9), 1e-10).unwrap();
        assert!(rep.passed && rep.sign == Sign::Negative);
        for _ in 0..200 {
            let w = random_weights(&mut r, 9);
            assert!(verify_wl2(&f, &Symbol::Real(w), 1e-10).unwrap().passed);
        }
        let mut mixed = vec![1.0; 9];
        mixed[3] = -1.0;
        assert_eq!(verify_wl2(&f, &Symbol::Real(mixed), 1e-10), Err(Error::MixedSignSymbol));
    }

    #[test]
    fn theorem_examples() {
        let b = Frame::standard_basis(3);
        let rep = verify_theorem_equiv(&b, &Symbol::constant(1.0, 3), FRAME_TOL).unwrap();
        assert!(rep.agree() && rep.frame);
        let deficient = Frame::with_dim(2, vec![QVector::basis(2, 0)]).unwrap();
        let rep = verify_theorem_equiv(&deficient, &Symbol::constant(0.7, 1), FRAME_TOL).unwrap();
        assert!(rep.agree() && !rep.frame, "{rep:?}");
        let mut r = rng(8);
        for _ in 0..200 {
            let n = r.random_range(1..=6usize);
            let m = r.random_range(n..=3 * n);
            let f = random_frame(&mut r, n, m);
            let w = random_weights(&mut r, f.len());
            let rep = verify_theorem_equiv(&f, &Symbol::Real(w), FRAME_TOL).unwrap();
            assert!(rep.agree() && rep.frame);
        }
    }

    #[test]
    fn prop44_examples() {
        // d ≡ 1 yields ℭ = I
        let basis: Vec<QVector> = (0..3).map(|i| QVector::basis(3, i)).collect();
        let rep = verify_prop44_instance(&basis, &[1.0; 3], &[0, 1, 2], &[Quaternion::ONE; 3], 1e-9).unwrap();
        assert!(rep.passed && rep.omega == vec![1.0; 3]);

        let basis: Vec<QVector> = (0..2).map(|i| QVector::basis(2, i)).collect();
        let rep = verify_prop44_instance(&basis, &[1.0, 4.0], &[0, 1, 1], &[Quaternion::ONE; 3], 1e-9).unwrap();
        assert!(rep.passed, "{rep:?}");
        for (w, e) in rep.omega.iter().zip([1.0, 4.0, 4.0]) {
            assert!((w - e).abs() < 1e-12);
        }

        for seed in 0..100 {
            let rep = verify_prop44(seed, 1e-9).unwrap();
            assert!(rep.passed, "seed {seed}: {rep:?}");
        }
    }

    #[test]
    fn symbol_file() {
        let s = Symbol::parse("# m\n1\n1\n2\n").unwrap();
        assert_eq!(s, Symbol::Real(vec![1.0, 1.0, 2.0]));
    }
}
