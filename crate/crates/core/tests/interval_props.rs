use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rigid_quiver::correspondence::discretize_pair_ext;
use rigid_quiver::interval::{compatible, random_interval, Interval, Point, Rational};

fn pair() -> impl Strategy<Value = (Interval, Interval)> {
    (1usize..=3, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_interval(&mut rng, n), random_interval(&mut rng, n))
    })
}

/// Strictly increasing self-map of `(0,1)`.
fn warp(t: Rational, bend: i64) -> Rational {
    let b = Ratio::from_integer(bend);
    // t -> t(1 + b t) / (1 + b), increasing for b >= 0
    t * (Rational::from_integer(1) + b * t) / (Rational::from_integer(1) + b)
}

fn relabel(iv: &Interval, bend: i64) -> Interval {
    let p = |x: Point| match x {
        Point::Generic(j, t) => Point::Generic(j, warp(t, bend + j as i64)),
        b => b,
    };
    Interval { lo: p(iv.lo), hi: p(iv.hi), ..*iv }
}

proptest! {
    #[test]
    fn symmetric((i, j) in pair()) {
        prop_assert_eq!(compatible(&i, &j), compatible(&j, &i));
    }

    #[test]
    fn reflexive((i, _j) in pair()) {
        prop_assert!(compatible(&i, &i));
    }

    #[test]
    fn depends_only_on_order_pattern((i, j) in pair(), bend in 0i64..5) {
        let (i2, j2) = (relabel(&i, bend), relabel(&j, bend));
        prop_assert!(rigid_quiver::interval::validate_interval(&i2).is_ok());
        prop_assert_eq!(compatible(&i, &j), compatible(&i2, &j2));
    }

    #[test]
    fn agrees_with_discretized_ext((i, j) in pair()) {
        prop_assert_eq!(compatible(&i, &j), discretize_pair_ext(&i, &j));
    }
}
