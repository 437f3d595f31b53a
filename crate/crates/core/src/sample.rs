//! Seeded sampling of small exact values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_numbers::{rat, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p/q with |p| ≤ h and 1 ≤ q ≤ h.
pub fn small_rational(rng: &mut SampleRng, h: i64) -> Rational {
    rat(rng.gen_range(-h..=h), rng.gen_range(1..=h.max(1)))
}

pub fn small_nonzero(rng: &mut SampleRng, h: i64) -> Rational {
    loop {
        let q = small_rational(rng, h);
        if q != rat(0, 1) {
            return q;
        }
    }
}

pub fn small_int(rng: &mut SampleRng, h: i64) -> Rational {
    rat(rng.gen_range(-h..=h), 1)
}

pub fn small_vec(rng: &mut SampleRng, n: usize, h: i64) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng, h)).collect()
}

pub fn pick<'a, T>(rng: &mut SampleRng, xs: &'a [T]) -> &'a T {
    &xs[rng.gen_range(0..xs.len())]
}
