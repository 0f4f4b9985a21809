mod common;

use cover_pebbling::constructive::{
    solve_multipartite, solve_pigeonhole_traced, solve_rst, solve_wheel, solve_wheel_traced,
    RstAction, WheelCase,
};
use cover_pebbling::formulas::{
    diameter_bound, gamma_wheel, nonincreasing_lists, phi_multipartite, weighted_bound,
};
use cover_pebbling::solver::{enumerate_configs, random_config, solve};
use cover_pebbling::{
    generate, validate_certificate, BinaryWeighting, Configuration, FamilySpec, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::nonempty_weightings;

#[test]
fn wheel_three_threshold_exhaustive() {
    let g = generate(&FamilySpec::Wheel(3)).unwrap();
    let mut count = 0;
    for c in enumerate_configs(4, 7) {
        let cert = solve_wheel(&g, &c).unwrap_or_else(|e| panic!("{c}: {e}"));
        validate_certificate(&g, &cert, None).unwrap();
        assert!(solve(&g, &c, None).unwrap().is_solvable());
        count += 1;
    }
    assert_eq!(count, 120);
}

#[test]
fn wheel_thresholds_exhaustive_up_to_six() {
    for n in 3..=6 {
        let g = generate(&FamilySpec::Wheel(n)).unwrap();
        let k = gamma_wheel(n).unwrap() as u32;
        let mut cases = [0usize; 3];
        for c in enumerate_configs(n + 1, k) {
            let (cert, trace) =
                solve_wheel_traced(&g, &c).unwrap_or_else(|e| panic!("W_{n} {c}: {e}"));
            validate_certificate(&g, &cert, None).unwrap();
            cases[match trace.case {
                WheelCase::AllOnHub => 0,
                WheelCase::FewCovered => 1,
                WheelCase::ManyCovered => 2,
            }] += 1;
        }
        assert_eq!(cases[0], 1, "exactly one all-on-hub configuration");
        assert!(cases[1] > 0 && cases[2] > 0);
    }
}

#[test]
fn wheel_above_threshold() {
    let g = generate(&FamilySpec::Wheel(5)).unwrap();
    for k in 16..=18 {
        for c in enumerate_configs(6, k) {
            solve_wheel(&g, &c).unwrap_or_else(|e| panic!("{c}: {e}"));
        }
    }
}

#[test]
fn c4_threshold_exhaustive() {
    let g = generate(&FamilySpec::Multipartite(vec![2, 2])).unwrap();
    let mut count = 0;
    for c in enumerate_configs(4, 9) {
        let cert = solve_multipartite(&g, &c).unwrap_or_else(|e| panic!("{c}: {e}"));
        validate_certificate(&g, &cert, None).unwrap();
        assert!(solve(&g, &c, None).unwrap().is_solvable());
        count += 1;
    }
    assert_eq!(count, 220);
}

#[test]
fn multipartite_thresholds_exhaustive() {
    for total in 1..=6 {
        for sizes in nonincreasing_lists(total) {
            if sizes.len() == 1 && sizes[0] > 1 {
                continue;
            }
            let g = generate(&FamilySpec::Multipartite(sizes.clone())).unwrap();
            let k = phi_multipartite(&sizes).unwrap() as u32;
            for extra in 0..=1 {
                for c in enumerate_configs(total, k + extra) {
                    let cert =
                        solve_multipartite(&g, &c).unwrap_or_else(|e| panic!("{sizes:?} {c}: {e}"));
                    validate_certificate(&g, &cert, None).unwrap();
                }
            }
        }
    }
}

fn rst_checked(g: &Graph, c: &Configuration) {
    let (cert, trace) = solve_rst(g, c).unwrap_or_else(|e| panic!("{c}: {e}"));
    validate_certificate(g, &cert, None).unwrap();
    let n = g.order();
    for step in &trace.steps {
        assert_eq!(step.t_set.len(), step.m);
        assert_eq!(step.r_set.len() + step.s_set.len() + step.t_set.len(), n);
        // the partition conditions are asserted inside the solver; here only
        // the chosen pair is rechecked
        let (RstAction::Retired { r, s } | RstAction::Moved { r, s, .. }) = step.action;
        assert!(g.dist(r, s) as usize <= step.m + 1);
        assert!(step.r_set.contains(&r) && step.s_set.contains(&s));
    }
    if let Some((b, residual)) = &trace.handoff {
        assert_eq!(b.order(), n - (g.diameter() as usize - 1));
        assert!(residual.is_permissible(b));
        assert!(
            residual.size() as i128
                >= i128::from(weighted_bound(b.order() as u64, g.diameter()).unwrap())
        );
    }
}

#[test]
fn rst_exhaustive_on_small_graphs() {
    for n in 1..=4 {
        for g in cover_pebbling::graph::connected_graphs(n) {
            let k = diameter_bound(n as u64, g.diameter()).unwrap() as u32;
            for c in enumerate_configs(n, k) {
                rst_checked(&g, &c);
            }
        }
    }
    for (n, d) in [(5, 2), (5, 3), (5, 4), (6, 3)] {
        let g = generate(&FamilySpec::Fuse { n, d }).unwrap();
        let k = diameter_bound(n as u64, d as u32).unwrap() as u32;
        for c in enumerate_configs(n, k) {
            rst_checked(&g, &c);
        }
    }
}

#[test]
fn sampled_threshold_configurations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let wheel = generate(&FamilySpec::Wheel(6)).unwrap();
    let fuse = generate(&FamilySpec::Fuse { n: 6, d: 3 }).unwrap();
    let k32 = generate(&FamilySpec::Multipartite(vec![3, 2])).unwrap();
    for _ in 0..1000 {
        let c = random_config(&mut rng, 7, 19);
        validate_certificate(&wheel, &solve_wheel(&wheel, &c).unwrap(), None).unwrap();
        let c = random_config(&mut rng, 7, 23);
        rst_checked(&wheel, &c);
        let c = random_config(&mut rng, 6, 31);
        rst_checked(&fuse, &c);
        let c = random_config(&mut rng, 5, 13);
        validate_certificate(&k32, &solve_multipartite(&k32, &c).unwrap(), None).unwrap();
    }
}

fn random_permissible(rng: &mut ChaCha8Rng, g: &Graph) -> (BinaryWeighting, Configuration) {
    let n = g.order();
    let b = loop {
        let b = BinaryWeighting::new((0..n).map(|_| rng.gen_bool(0.6)).collect());
        if b.order() > 0 {
            break b;
        }
    };
    let k = weighted_bound(b.order() as u64, g.diameter()).unwrap() as u32 + rng.gen_range(0..3);
    let marked: Vec<usize> = b.marked().collect();
    let inner = random_config(rng, marked.len(), k);
    let mut counts = vec![0; n];
    for (slot, &v) in marked.iter().enumerate() {
        counts[v] = inner.get(slot);
    }
    (b, Configuration::new(counts))
}

fn pigeonhole_checked(g: &Graph, b: &BinaryWeighting, c: &Configuration) {
    let (cert, steps) =
        solve_pigeonhole_traced(g, b, c).unwrap_or_else(|e| panic!("{b} / {c}: {e}"));
    validate_certificate(g, &cert, Some(b)).unwrap();
    // replay and check each frozen target never drops below what its round left
    let mut current = c.clone();
    let mut floor: Vec<Option<u32>> = vec![None; g.order()];
    let mut step_iter = steps.iter().peekable();
    for (i, mv) in cert.moves.iter().enumerate() {
        current.apply(g, *mv).unwrap();
        for (v, f) in floor.iter().enumerate() {
            if let Some(f) = f {
                assert!(current.get(v) >= *f, "frozen vertex {v} dropped");
            }
        }
        while let Some(step) = step_iter.peek() {
            if step.moves.end == i + 1 {
                floor[step.target] = Some(current.get(step.target));
                step_iter.next();
            } else {
                break;
            }
        }
    }
}

#[test]
fn pigeonhole_sampled_and_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for spec in [FamilySpec::Wheel(6), FamilySpec::Fuse { n: 6, d: 3 }] {
        let g = generate(&spec).unwrap();
        for _ in 0..1000 {
            let (b, c) = random_permissible(&mut rng, &g);
            pigeonhole_checked(&g, &b, &c);
        }
    }
    for n in 1..=4 {
        for g in cover_pebbling::graph::connected_graphs(n) {
            for b in nonempty_weightings(n) {
                let k = weighted_bound(b.order() as u64, g.diameter()).unwrap() as u32;
                for c in common::permissible_configs(&b, k) {
                    pigeonhole_checked(&g, &b, &c);
                }
            }
        }
    }
}
