//! Seeded random scalars for probes and property checks.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::scalars::{GaussianRational, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound.max(1));
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn real<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    GaussianRational::real(rational(rng, bound))
}

pub fn complex<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    GaussianRational::new(rational(rng, bound), rational(rng, bound))
}

pub fn nonzero_complex<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    loop {
        let z = complex(rng, bound);
        if !num_traits::Zero::is_zero(&z) {
            return z;
        }
    }
}

pub fn integer<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    GaussianRational::int(rng.gen_range(-bound..=bound))
}

/// Vector of `n` complex entries, not all zero.
pub fn complex_vec<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<GaussianRational> {
    loop {
        let v: Vec<_> = (0..n).map(|_| complex(rng, bound)).collect();
        if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return v;
        }
    }
}
