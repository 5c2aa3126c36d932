//! Seeded random instance generators.
//!
//! Every generator takes the RNG explicitly; nothing here touches global
//! state. Components are drawn uniformly from `[-1, 1]`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hilbert::QVector;
use crate::operator::QOperator;
use crate::quaternion::Quaternion;

pub type TrialRng = ChaCha8Rng;

/// SplitMix64 finalizer, used to derive independent per-trial seeds.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sub-seed for trial `trial` of a statement stream under `master`.
pub fn trial_seed(master: u64, stream: u64, trial: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(stream)).wrapping_add(trial))
}

pub fn rng_from_seed(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.random_range(-1.0..=1.0),
        rng.random_range(-1.0..=1.0),
        rng.random_range(-1.0..=1.0),
        rng.random_range(-1.0..=1.0),
    )
}

pub fn random_unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    loop {
        let q = random_quaternion(rng);
        let n = q.norm();
        if n > 1e-3 {
            return q.scale(1.0 / n);
        }
    }
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QVector {
    QVector::new((0..n).map(|_| random_quaternion(rng)).collect())
}

pub fn random_operator<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QOperator {
    QOperator::from_entries(n, (0..n * n).map(|_| random_quaternion(rng)).collect())
        .expect("n > 0")
}

/// `(B + B†) / 2` for a random `B`.
pub fn random_self_adjoint<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QOperator {
    let b = random_operator(rng, n);
    (&b + &b.adjoint()).scale_real(0.5)
}

/// `B† B + c I` with `c ∈ [0.1, 1]`, a well-conditioned member of `𝒢ℒ⁺`.
pub fn random_gl_plus<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QOperator {
    let b = random_operator(rng, n);
    let c = rng.random_range(0.1..=1.0);
    &(&b * &b.adjoint()) + &QOperator::scalar(n, c)
}

/// Orthonormal basis of `ℍⁿ` from Gram–Schmidt on random vectors.
pub fn random_orthonormal_basis<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<QVector> {
    let mut basis: Vec<QVector> = Vec::with_capacity(n);
    while basis.len() < n {
        let mut v = random_vector(rng, n);
        for e in &basis {
            // remove the component ⟨v|e⟩ e
            let c = v.inner(e).expect("same dimension");
            v.axpy(-c, e);
        }
        let nv = v.norm();
        if nv > 1e-3 {
            basis.push(v.scale_real(1.0 / nv));
        }
    }
    basis
}
