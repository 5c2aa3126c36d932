pub use crate::random::{
    random_gl_plus, random_operator, random_quaternion, random_self_adjoint, random_vector, TrialRng,
};

pub fn rng(seed: u64) -> TrialRng {
    crate::random::rng_from_seed(seed)
}
