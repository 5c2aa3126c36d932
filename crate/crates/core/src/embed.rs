//! Complex adjoint representation of quaternion matrices.
//!
//! Writing `q = a + b j` with `a = w + x i` and `b = y + z i`, the map
//!
//! ```text
//! χ(q) = [  a   b ]
//!        [ -b̄   ā ]
//! ```
//!
//! is an injective ring homomorphism `ℍ → ℂ^{2×2}` that sends `q̄` to the
//! conjugate transpose. Extended blockwise it carries quaternion matrix
//! products and adjoints to their complex counterparts, so the spectrum of
//! a self-adjoint quaternionic operator is read off a `2n × 2n` Hermitian
//! matrix where every eigenvalue appears twice.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::QVector;
use crate::operator::QOperator;
use crate::quaternion::Quaternion;

pub type ComplexMatrix = DMatrix<Complex64>;

/// Two eigenvalues of the embedding are considered the same quaternionic
/// eigenvalue when closer than this times `1 + |λ|`.
pub const PAIRING_TOL: f64 = 1e-8;

/// `χ(T)` for the stored matrix of `T`.
pub fn to_complex(t: &QOperator) -> ComplexMatrix {
    let n = t.dim();
    let mut m = ComplexMatrix::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let (a, b) = t.entry(r, c).to_complex_pair();
            m[(2 * r, 2 * c)] = a;
            m[(2 * r, 2 * c + 1)] = b;
            m[(2 * r + 1, 2 * c)] = -b.conj();
            m[(2 * r + 1, 2 * c + 1)] = a.conj();
        }
    }
    m
}

/// Pulls a `2n × 2n` complex matrix back to `ℍ^{n×n}`.
///
/// Returns the operator together with the largest deviation from the block
/// symmetry `[[a, b], [-b̄, ā]]`; each block is projected onto that form.
pub fn from_complex(m: &ComplexMatrix) -> Result<(QOperator, f64)> {
    if m.nrows() != m.ncols() || !m.nrows().is_multiple_of(2) {
        return Err(Error::DimensionMismatch { expected: m.nrows() + m.nrows() % 2, found: m.ncols() });
    }
    let n = m.nrows() / 2;
    let mut entries = Vec::with_capacity(n * n);
    let mut asym = 0.0f64;
    for r in 0..n {
        for c in 0..n {
            let p = m[(2 * r, 2 * c)];
            let q = m[(2 * r, 2 * c + 1)];
            let rr = m[(2 * r + 1, 2 * c)];
            let s = m[(2 * r + 1, 2 * c + 1)];
            asym = asym.max((p - s.conj()).norm()).max((q + rr.conj()).norm());
            let a = (p + s.conj()) * 0.5;
            let b = (q - rr.conj()) * 0.5;
            entries.push(Quaternion::from_complex_pair(a, b));
        }
    }
    Ok((QOperator::from_entries(n, entries)?, asym))
}

/// Converts an eigenvector of `χ(A)` into the row vector `φ` with
/// `φ A = λ φ` under the row action convention.
fn pull_back_eigenvector(v: &[Complex64]) -> QVector {
    // column u with χ(u) first column (c_i, d_i): u_i = c_i - conj(d_i) j;
    // the row eigenvector is φ_i = conj(u_i)
    let comps = v
        .chunks_exact(2)
        .map(|cd| Quaternion::from_complex_pair(cd[0], -cd[1].conj()).conj())
        .collect();
    let phi = QVector::new(comps);
    let nrm = phi.norm();
    if nrm > 0.0 {
        phi.scale_real(1.0 / nrm)
    } else {
        phi
    }
}

/// Spectral data of a self-adjoint quaternionic operator.
#[derive(Debug, Clone)]
pub struct SelfAdjointEigen {
    /// Quaternionic eigenvalues, ascending, each listed once per pair.
    pub values: Vec<f64>,
    /// Unit row eigenvectors, `vectors[k]` belongs to `values[k]`.
    ///
    /// For repeated eigenvalues the vectors are valid eigenvectors but need
    /// not be mutually orthogonal.
    pub vectors: Vec<QVector>,
    /// Largest relative residual `‖χv − λv‖ / ‖χ‖` over all complex pairs.
    pub residual: f64,
}

fn hermitian_part(t: &QOperator) -> ComplexMatrix {
    let c = to_complex(t);
    (&c + c.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Sorted complex eigenpairs of the Hermitian part of `χ(T)`.
fn complex_eigen(t: &QOperator) -> (Vec<f64>, ComplexMatrix, f64) {
    let c = hermitian_part(t);
    let scale = c.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let eig = SymmetricEigen::new(c.clone());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = ComplexMatrix::from_fn(c.nrows(), c.ncols(), |r, k| eig.eigenvectors[(r, order[k])]);
    let mut residual = 0.0f64;
    for (k, &lambda) in values.iter().enumerate() {
        let v = vectors.column(k);
        let r = &c * v - v * Complex64::new(lambda, 0.0);
        residual = residual.max(r.norm());
    }
    let residual = if scale > 0.0 { residual / scale } else { residual };
    (values, vectors, residual)
}

fn pair_up(values: &[f64]) -> Result<Vec<usize>> {
    let mut firsts = Vec::with_capacity(values.len() / 2);
    for (idx, pair) in values.chunks_exact(2).enumerate() {
        let gap = (pair[1] - pair[0]).abs();
        let tol = PAIRING_TOL * (1.0 + pair[0].abs().max(pair[1].abs()));
        if gap > tol {
            return Err(Error::PairingFailure { index: 2 * idx, gap });
        }
        firsts.push(2 * idx);
    }
    Ok(firsts)
}

/// Full spectral decomposition of a self-adjoint operator.
///
/// Only the Hermitian part of `χ(T)` is used; callers are expected to have
/// checked self-adjointness.
pub fn eigen_self_adjoint(t: &QOperator) -> Result<SelfAdjointEigen> {
    let (values, vectors, residual) = complex_eigen(t);
    let firsts = pair_up(&values)?;
    let mut out_values = Vec::with_capacity(firsts.len());
    let mut out_vectors = Vec::with_capacity(firsts.len());
    for k in firsts {
        out_values.push(0.5 * (values[k] + values[k + 1]));
        let col: Vec<Complex64> = vectors.column(k).iter().copied().collect();
        out_vectors.push(pull_back_eigenvector(&col));
    }
    Ok(SelfAdjointEigen { values: out_values, vectors: out_vectors, residual })
}

/// The `n` quaternionic eigenvalues of a self-adjoint operator, ascending.
pub fn spectrum_self_adjoint(t: &QOperator) -> Result<Vec<f64>> {
    let (values, _, _) = complex_eigen(t);
    let firsts = pair_up(&values)?;
    Ok(firsts.into_iter().map(|k| 0.5 * (values[k] + values[k + 1])).collect())
}

/// Applies a real function to the spectrum: `V f(Λ) V^H`, pulled back to `ℍ`.
///
/// Returns the operator and the block-symmetry deviation of the complex
/// result before projection.
pub fn spectral_map(t: &QOperator, f: impl Fn(f64) -> f64) -> Result<(QOperator, f64)> {
    let (values, vectors, _) = complex_eigen(t);
    pair_up(&values)?;
    let dim = vectors.nrows();
    let mut scaled = vectors.clone();
    for (k, &lambda) in values.iter().enumerate() {
        let fl = Complex64::new(f(lambda), 0.0);
        for r in 0..dim {
            scaled[(r, k)] *= fl;
        }
    }
    let result = scaled * vectors.adjoint();
    from_complex(&result)
}

/// The `n` singular values of `T`, descending.
pub fn singular_values(t: &QOperator) -> Vec<f64> {
    let c = to_complex(t);
    let mut s: Vec<f64> = c.singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s.chunks_exact(2).map(|p| 0.5 * (p[0] + p[1])).collect()
}
