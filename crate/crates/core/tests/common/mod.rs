#![allow(dead_code)]

use power_forge_core::{decompose_rational_power, enumerate_rationals, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2417;

/// Seeded RNG; `POWER_FORGE_SEED` overrides the fixed default.
pub fn rng() -> ChaCha8Rng {
    let seed = std::env::var("POWER_FORGE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every rational perfect power of height at most `bound`.
pub fn powers_up_to_height(bound: u64) -> Vec<Rational> {
    enumerate_rationals(bound)
        .filter(|q| decompose_rational_power(q).is_some())
        .collect()
}

pub fn random_rational(rng: &mut impl rand::Rng, bound: i64) -> Rational {
    loop {
        let u = rng.gen_range(-bound..=bound);
        let v = rng.gen_range(1..=bound);
        let q = Rational::new(u.into(), v.into());
        if num_traits::Signed::abs(q.numer()) <= bound.into() && q.denom() <= &bound.into() {
            return q;
        }
    }
}
