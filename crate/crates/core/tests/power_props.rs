mod common;

use power_forge_core::{decompose_integer_power, decompose_rational_power, Integer, Rational};
use proptest::prelude::*;

proptest! {
    #[test]
    fn witnesses_reproduce_input(u in -100_000i64..100_000, v in 1i64..100_000) {
        let q = Rational::new(u.into(), v.into());
        if let Some(d) = decompose_rational_power(&q) {
            prop_assert!(d.exponent >= 2);
            prop_assert_eq!(d.value(), q);
        }
    }

    #[test]
    fn integer_and_rational_paths_agree(n in proptest::num::i64::ANY) {
        let n = Integer::from(n);
        prop_assert_eq!(
            decompose_integer_power(&n),
            decompose_rational_power(&Rational::from_integer(n.clone()))
        );
    }

    #[test]
    fn exponent_is_maximal(u in -40i64..=40, v in 1i64..=40, e in 2u32..=12) {
        let b = Rational::new(u.into(), v.into());
        let value = num_traits::pow(b, e as usize);
        if let Some(d) = decompose_rational_power(&value) {
            // n is a valid exponent exactly when n divides the maximal one
            if !(value.numer().magnitude() <= &1u32.into() && value.denom() == &1.into()) {
                prop_assert_eq!(d.exponent % e, 0, "{} from ({})^{}", d, value, e);
            }
        } else {
            prop_assert!(false, "lost ({})^{}", value, e);
        }
    }
}

#[test]
fn complete_on_small_heights() {
    for b in power_forge_core::enumerate_rationals(20) {
        for e in 2..=6u32 {
            let value = num_traits::pow(b.clone(), e as usize);
            let d = decompose_rational_power(&value)
                .unwrap_or_else(|| panic!("({b})^{e} not recognised"));
            assert_eq!(d.value(), value);
        }
    }
}
