use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::{Mat, Vector};

/// Independent stream for the `index`-th task of a run seeded with `seed`.
pub(crate) fn derived(seed: u64, index: u64) -> ChaCha8Rng {
    // splitmix64 finalizer
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

pub(crate) fn gaussian_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    Vector::from_fn(n, |_, _| rng.sample(StandardNormal))
}

pub(crate) fn unit_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    loop {
        let v = gaussian_vector(rng, n);
        let norm = v.norm();
        if norm > 1e-6 {
            return v / norm;
        }
    }
}

/// Unit vector in the column span of `basis` (orthonormal columns).
pub(crate) fn unit_in_span<R: Rng>(rng: &mut R, basis: &Mat) -> Vector {
    let c = unit_vector(rng, basis.ncols());
    basis * c
}
