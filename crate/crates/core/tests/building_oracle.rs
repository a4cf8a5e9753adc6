use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropgr::building::*;
use tropgr::catalog::{random_flag_config, FlagConfig};
use tropgr::hive::random_hive_point;
use tropgr::linalg::det_columns;
use tropgr::semifield::{qi, GenSeries, Rational};

fn constant(x: &Rational) -> GenSeries {
    GenSeries::monomial(x.clone(), &qi(0))
}

fn random_lattice(k: usize, rng: &mut ChaCha8Rng, mode: LatticeMode) -> LatticeRep {
    loop {
        let gens: Vec<Vec<GenSeries>> = (0..k)
            .map(|_| {
                (0..k)
                    .map(|_| {
                        let c = rng.gen_range(-2i64..=2);
                        if c == 0 {
                            GenSeries::zero()
                        } else {
                            GenSeries::monomial(qi(c), &qi(rng.gen_range(-3i64..=3)))
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(l) = LatticeRep::new(gens, mode) {
            return l;
        }
    }
}

#[test]
fn frames_span_the_flag_intersections() {
    let mut rng = ChaCha8Rng::seed_from_u64(70);
    for k in 2..=4 {
        let c = random_flag_config(&mut rng, k, 3);
        let flags = FlagConfig::new(
            k,
            c.frames().iter().map(|f| f.iter().map(|v| v.iter().map(constant).collect()).collect()).collect(),
        )
        .unwrap();
        let w = frame_against(&flags, 1, 2).unwrap();
        let (v, u) = (flags.frame(1), flags.frame(2));
        for m in 1..=k {
            // w_m lies in the span of v_1..v_m and of u_1..u_{k-m+1}
            let extra: Vec<Vec<GenSeries>> =
                (0..k).map(|_| (0..k).map(|_| constant(&qi(rng.gen_range(-5..=5)))).collect()).collect();
            let mut a: Vec<&[GenSeries]> = v[..m].iter().map(|x| x.as_slice()).collect();
            a.push(&w[m - 1]);
            a.extend(extra[..k.saturating_sub(m + 1)].iter().map(|x| x.as_slice()));
            if a.len() == k {
                assert!(det_columns(&a).is_zero(), "k={k} m={m} in F_1");
            }
            let mut b: Vec<&[GenSeries]> = u[..k - m + 1].iter().map(|x| x.as_slice()).collect();
            b.push(&w[m - 1]);
            b.extend(extra[..m.saturating_sub(2)].iter().map(|x| x.as_slice()));
            if b.len() == k {
                assert!(det_columns(&b).is_zero(), "k={k} m={m} in F_2");
            }
        }
        // partial wedges agree with those of the first flag
        for m in 1..=k {
            let mut a: Vec<&[GenSeries]> = w[..m].iter().map(|x| x.as_slice()).collect();
            let mut b: Vec<&[GenSeries]> = v[..m].iter().map(|x| x.as_slice()).collect();
            a.extend(u[..k - m].iter().map(|x| x.as_slice()));
            b.extend(u[..k - m].iter().map(|x| x.as_slice()));
            assert_eq!(det_columns(&a), det_columns(&b), "k={k} m={m}");
        }
    }
}

#[test]
fn edge_functions_equal_weighted_distances() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for k in 2..=3 {
        for _ in 0..15 {
            let a = random_lattice(k, &mut rng, LatticeMode::PGL);
            let b = random_lattice(k, &mut rng, LatticeMode::PGL);
            let d = lattice_distance(&a, &b).unwrap();
            for i in 1..k as u32 {
                let (v, _) = f_trop_certified(&[&a, &b], &[i, k as u32 - i], 3).unwrap();
                assert_eq!(v, d.omega(k - i as usize), "k={k} i={i}");
            }
        }
    }
}

#[test]
fn metric_minimum_trivial_cases() {
    let s = LatticeRep::standard(2, LatticeMode::PGL);
    assert_eq!(metric_f_min(&[&s], &[2], 1).unwrap().value, qi(0));
    assert_eq!(metric_f_min(&[&s, &s], &[1, 1], 1).unwrap().value, qi(0));
    assert_eq!(f_trop_bruteforce(&[&s], &[2], 1).unwrap().value, qi(0));
}

#[test]
fn metric_minimum_matches_search_on_rank_two_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(72);
    for _ in 0..10 {
        let l: Vec<LatticeRep> = (0..3).map(|_| random_lattice(2, &mut rng, LatticeMode::PGL)).collect();
        for e in [[1u32, 1, 0], [1, 0, 1], [0, 1, 1]] {
            let (lats, exps): (Vec<&LatticeRep>, Vec<u32>) =
                l.iter().zip(e).filter(|(_, e)| *e > 0).unzip();
            let (direct, _) = f_trop_certified(&lats, &exps, 3).unwrap();
            let metric = metric_f_min(&lats, &exps, 4).unwrap();
            assert!(metric.stable);
            assert_eq!(metric.value, direct);
        }
    }
}

#[test]
fn lattices_of_hive_points_reproduce_the_chart() {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    for (k, n) in [(2, 4), (2, 5), (3, 4), (3, 5)] {
        for _ in 0..3 {
            let x = random_hive_point(k, n, &mut rng, 3).unwrap();
            let r = building_oracle(&x, 3).unwrap();
            assert!(r.passed(), "({k},{n}) {}", r.to_json());
        }
    }
}

#[test]
fn negated_generator_breaks_positivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(74);
    let x = random_hive_point(2, 4, &mut rng, 3).unwrap();
    let cfg = config_from_flags(&tropgr::points::lift_to_series(&x), 2).unwrap();
    let mut lats = cfg.lattices.clone();
    let mut g = lats[0].gens().to_vec();
    g[0] = g[0].iter().map(|s| s.neg()).collect();
    lats[0] = LatticeRep::new(g, LatticeMode::SL).unwrap();
    let r = valuation_minimizing_check(&lats, &[[1, 2, 3], [1, 3, 4]], 3).unwrap();
    assert!(r.not_minimizing.is_empty());
    assert!(!r.not_positive.is_empty());
}
