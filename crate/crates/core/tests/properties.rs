use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sandwich_rm::analysis::bounds::distance_bounds;
use sandwich_rm::analysis::distance::{min_distance, DistanceOptions, Strategy as Search};
use sandwich_rm::analysis::ms::{ms_coefficients, newton_check};
use sandwich_rm::{CodeSpec, ExponentSpace, Kind};

/// Valid C_q(r, I, n) of length at most 25, with I drawn from M_r.
fn small_code() -> impl Strategy<Value = CodeSpec> {
    let fields = vec![(2u32, 2u32), (2, 4), (3, 2), (4, 2), (5, 2)];
    (
        prop::sample::select(fields),
        0i64..9,
        any::<u32>(),
        any::<bool>(),
    )
        .prop_filter_map("r out of range", |((q, n), r, mask, punct)| {
            let space = ExponentSpace::new(q, n).ok()?;
            if r >= space.max_weight() as i64 {
                return None;
            }
            let m = space.parity_class(r);
            let i: Vec<u32> = m
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &k)| k)
                .collect();
            let spec = CodeSpec::sandwich(q, n, r, &i);
            Some(if punct { spec.punctured() } else { spec })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strategies_agree_with_exhaustive(spec in small_code()) {
        let code = spec.build().unwrap();
        let k = code.dimension() as u32;
        prop_assume!(k > 0 && (code.q() as f64).powi(k as i32) <= 1e6);
        let exact = |s| {
            let opts = DistanceOptions { strategy: s, ..DistanceOptions::default() };
            min_distance(&code, &opts).unwrap().exact
        };
        let d = exact(Search::Exhaustive);
        prop_assert!(d.is_some());
        prop_assert_eq!(exact(Search::Bz), d);
        prop_assert_eq!(exact(Search::Support), d);
        prop_assert!(distance_bounds(&code).bch <= d.unwrap());
    }

    #[test]
    fn newton_and_frobenius_hold(spec in small_code(), seed in any::<u64>()) {
        let code = spec.build().unwrap();
        prop_assume!(code.dimension() > 0 && code.kind() == Kind::Punctured);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = code.random_codeword(&mut rng);
        prop_assume!(!x.is_zero());
        let ms = ms_coefficients(code.ctx(), &x).unwrap();
        prop_assert!(ms.frobenius_holds(code.ctx()));
        prop_assert!(newton_check(code.ctx(), &x).unwrap().holds());
    }
}
