use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use tropgr::building::{lattice_distance, CoweightDistance, LatticeMode, LatticeRep};
use tropgr::cluster::{mutate_a, mutate_matrix, mutate_x, opaque_labels, random_seed, LabeledSeed, PointInChart};
use tropgr::hive::{act_lineality, boundary_from_frozen, distinguished_lift, frozen_from_boundary};
use tropgr::points::{fan_chart, pushforward_pi, random_trop_point};
use tropgr::semifield::{q, qi, GenSeries, PosSeries, Rational, Semifield, TropNumber};

fn rationals(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-40i64..=40, 1i64..=6).prop_map(|(a, b)| q(a, b)), n)
}

fn positive_monomial() -> impl Strategy<Value = PosSeries> {
    (1i64..=9, 1i64..=4, -12i64..=12, 1i64..=3)
        .prop_map(|(c, d, e, r)| PosSeries::monomial(q(c, d), &q(e, r)).unwrap())
}

/// A lattice with random monomial generators, kept only when they are
/// independent.
fn random_lattice(rng: &mut ChaCha8Rng, k: usize) -> LatticeRep {
    loop {
        let gens = (0..k)
            .map(|_| {
                (0..k)
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            GenSeries::zero()
                        } else {
                            GenSeries::monomial(qi(rng.gen_range(-3..=3)), &qi(rng.gen_range(-3..=3)))
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(l) = LatticeRep::new(gens, LatticeMode::PGL) {
            return l;
        }
    }
}

fn plus(a: &CoweightDistance, b: &CoweightDistance) -> CoweightDistance {
    CoweightDistance { mu: a.mu.iter().zip(&b.mu).map(|(x, y)| x + y).collect() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mutation_is_an_involution(seed in any::<u64>(), rank in 2usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_seed(&mut rng, rank, 1, 3);
        let chart = Arc::new(LabeledSeed::new("random", 0, s.clone(), opaque_labels(rank)).unwrap());
        let coords: Vec<TropNumber> = (0..rank).map(|_| TropNumber::from(q(rng.gen_range(-20..=20), 3))).collect();
        let p = PointInChart::new(chart, coords).unwrap();
        for k in s.mutable_indices() {
            let once = mutate_matrix(s.matrix(), s.frozen(), k).unwrap();
            prop_assert_eq!(mutate_matrix(&once, s.frozen(), k).unwrap(), s.matrix().to_vec());
            prop_assert_eq!(&mutate_a(&mutate_a(&p, k).unwrap(), k).unwrap().coords, &p.coords);
            prop_assert_eq!(&mutate_x(&mutate_x(&p, k).unwrap(), k).unwrap().coords, &p.coords);
        }
    }

    #[test]
    fn negated_valuation_is_a_homomorphism(a in positive_monomial(), b in positive_monomial()) {
        let (va, vb) = (a.neg_val(), b.neg_val());
        prop_assert_eq!(a.plus(&b).unwrap().neg_val(), va.clone().max(vb.clone()));
        prop_assert_eq!(a.times(&b).unwrap().neg_val(), &va + &vb);
        prop_assert_eq!(a.div(&b).unwrap().neg_val(), &va - &vb);
    }

    #[test]
    fn frozen_values_round_trip(n in 3usize..=12, k_off in 0usize..10, a in rationals(12)) {
        let k = 2 + k_off % (n - 2);
        let a = a[..n].to_vec();
        prop_assert_eq!(boundary_from_frozen(k, &frozen_from_boundary(k, &a)).unwrap(), a);
    }

    #[test]
    fn lift_is_linear_along_lineality(seed in any::<u64>(), c in rationals(6), d in rationals(6)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = pushforward_pi(&random_trop_point(fan_chart(3, 6).unwrap(), &mut rng, 4, 3)).unwrap();
        let sum: Vec<Rational> = c.iter().zip(&d).map(|(x, z)| x + z).collect();
        prop_assert_eq!(act_lineality(&act_lineality(&y, &c), &d), act_lineality(&y, &sum));
        let base = distinguished_lift(&y).unwrap();
        let both = distinguished_lift(&act_lineality(&y, &sum)).unwrap();
        let one = distinguished_lift(&act_lineality(&y, &c)).unwrap();
        let other = distinguished_lift(&act_lineality(&y, &d)).unwrap();
        for i in 0..base.coords.len() {
            prop_assert_eq!(&both.coords[i] + &base.coords[i], &one.coords[i] + &other.coords[i]);
        }
    }

    #[test]
    fn lattice_distance_is_antisymmetric_and_subadditive(seed in any::<u64>(), k in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_lattice(&mut rng, k), random_lattice(&mut rng, k), random_lattice(&mut rng, k));
        let ab = lattice_distance(&a, &b).unwrap();
        prop_assert_eq!(lattice_distance(&b, &a).unwrap().normalized(), ab.dual().normalized());
        prop_assert!(lattice_distance(&a, &a).unwrap().normalized().is_zero());
        let ac = lattice_distance(&a, &c).unwrap().normalized();
        let via = plus(&ab, &lattice_distance(&b, &c).unwrap()).normalized();
        prop_assert!(ac.dominated_by(&via), "{:?} vs {:?}", ac, via);
    }

    #[test]
    fn coweight_lattices_sit_at_their_coweight(mu in prop::collection::vec(-6i64..=6, 2..=4)) {
        let mu: Vec<Rational> = mu.into_iter().map(qi).collect();
        let k = mu.len();
        let l = LatticeRep::from_coweight(&mu, LatticeMode::PGL).unwrap();
        let d = lattice_distance(&LatticeRep::standard(k, LatticeMode::PGL), &l).unwrap();
        let mut sorted = mu.clone();
        sorted.sort_by(|x, y| y.cmp(x));
        prop_assert_eq!(d.normalized(), CoweightDistance { mu: sorted }.normalized());
    }
}
