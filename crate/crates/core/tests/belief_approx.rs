mod common;

use common::{assert_close, mass_strategy, set, ternary};
use csbf::belief_approx::{
    focused_transform, gamma_to_mass, global_l1_belief, global_l2_belief, global_linf_belief,
    l1_belief_diverges_from_plausibility, max_plausibility_elements, orthogonality_residual,
    partial_linf_belief, verify_orthogonality,
};
use csbf::cli::read_input;
use csbf::geometry::{embed, lp_distance};
use csbf::{belief_from_mass, EmbeddingSpace, MassAssignment, MassFunction, Norm, SpaceKind};
use proptest::prelude::*;

fn belief_distance(m: &MassFunction, other: &impl MassAssignment, norm: Norm) -> f64 {
    let space = EmbeddingSpace::new(SpaceKind::Belief, m.frame().clone());
    lp_distance(
        &embed(m, &space).unwrap(),
        &embed(other, &space).unwrap(),
        norm,
    )
    .unwrap()
}

#[test]
fn ternary_focused_transforms() {
    let m = ternary();
    let cases = [
        ("x", ["x", "x,y", "x,z", "x,y,z"], [0.2, 0.5, 0.0, 0.3]),
        ("y", ["y", "x,y", "y,z", "x,y,z"], [0.1, 0.6, 0.3, 0.0]),
        ("z", ["z", "x,z", "y,z", "x,y,z"], [0.0, 0.2, 0.4, 0.4]),
    ];
    for (x, keys, want) in cases {
        let ft = focused_transform(&m, m.frame().element(x).unwrap()).unwrap();
        for (k, w) in keys.iter().zip(want) {
            assert_close(ft.result.mass(set(m.frame(), k)), w, 1e-12, k);
        }
    }
    let l1 = global_l1_belief(&m).unwrap();
    let l2 = global_l2_belief(&m).unwrap();
    for (got, want) in l1.criterion_values.iter().zip([0.5, 0.4, 1.0]) {
        assert_close(*got, want, 1e-12, "L1 criterion");
    }
    for (got, want) in l2.criterion_values.iter().zip([0.17, 0.08, 0.54]) {
        assert_close(*got, want, 1e-12, "L2 criterion");
    }
    assert_eq!(l1.optima, vec![1]);
    assert_eq!(l2.optima, vec![1]);
    assert_eq!(global_linf_belief(&m).unwrap().optima, vec![1]);
}

#[test]
fn perturbed_transform_fails_orthogonality() {
    let m = ternary();
    let mut ft = focused_transform(&m, 0).unwrap();
    assert!(verify_orthogonality(&m, &ft));
    let f = m.frame().clone();
    let shifted: Vec<_> = ft
        .result
        .entries()
        .iter()
        .map(|(a, v)| {
            let delta = if *a == set(&f, "x") {
                0.01
            } else if *a == set(&f, "x,y") {
                -0.01
            } else {
                0.0
            };
            (*a, v + delta)
        })
        .collect();
    ft.result = MassFunction::new(f, shifted).unwrap();
    assert!(!verify_orthogonality(&m, &ft));
}

/// Vertices of the ternary box for focus x, written out algebraically in
/// terms of the source belief values, ordered (x, xy, xz, Θ).
fn ternary_gamma_vertices(m: &MassFunction) -> Vec<[f64; 4]> {
    let f = m.frame();
    let b = belief_from_mass(m);
    let bx = b.belief(set(f, "x"));
    let bxy = b.belief(set(f, "x,y"));
    let bxz = b.belief(set(f, "x,z"));
    let d = b.belief(set(f, "y,z"));
    let rest = 1.0 + bx - bxy - bxz;
    vec![
        [bx - d, bxy - bx, bxz - bx, rest + d],
        [bx - d, bxy - bx, bxz - bx + 2.0 * d, rest - d],
        [bx - d, bxy - bx + 2.0 * d, bxz - bx, rest - d],
        [
            bx - d,
            bxy - bx + 2.0 * d,
            bxz - bx + 2.0 * d,
            rest - 3.0 * d,
        ],
        [
            bx + d,
            bxy - bx - 2.0 * d,
            bxz - bx - 2.0 * d,
            rest + 3.0 * d,
        ],
        [bx + d, bxy - bx - 2.0 * d, bxz - bx, rest + d],
        [bx + d, bxy - bx, bxz - bx - 2.0 * d, rest + d],
        [bx + d, bxy - bx, bxz - bx, rest - d],
    ]
}

fn gamma_vertices_match(m: &MassFunction) {
    let f = m.frame();
    let keys = ["x", "x,y", "x,z", "x,y,z"].map(|k| set(f, k));
    let mut got: Vec<[f64; 4]> = partial_linf_belief(m, 0)
        .unwrap()
        .vertices()
        .unwrap()
        .iter()
        .map(|v| keys.map(|k| v.mass(k)))
        .collect();
    let mut want = ternary_gamma_vertices(m);
    let key = |v: &[f64; 4]| v.map(|c| (c * 1e9).round() as i64);
    got.sort_by_key(key);
    want.sort_by_key(key);
    for (g, w) in got.iter().zip(&want) {
        for (a, b) in g.iter().zip(w) {
            assert_close(*a, *b, 1e-12, "gamma vertex");
        }
    }
}

#[test]
fn ternary_gamma_box_vertices() {
    gamma_vertices_match(&ternary());
    let m = read_input("tests/fixtures/l1_belief_counterexample.json".as_ref())
        .unwrap()
        .mass;
    gamma_vertices_match(&m);
}

#[test]
fn counterexample_fixture_separates_l1_from_plausibility() {
    let m = read_input("tests/fixtures/l1_belief_counterexample.json".as_ref())
        .unwrap()
        .mass;
    assert!(l1_belief_diverges_from_plausibility(&m));
    assert_eq!(max_plausibility_elements(&m), vec![0]);
    assert_eq!(global_l1_belief(&m).unwrap().optima, vec![1]);
    assert_eq!(global_l2_belief(&m).unwrap().optima, vec![0]);
}

proptest! {
    #[test]
    fn focused_distances_match_embedding(m in mass_strategy(2..=4)) {
        for x in 0..m.frame().len() {
            let ft = focused_transform(&m, x).unwrap();
            prop_assert!((belief_distance(&m, &ft.result, Norm::L1) - ft.distance_l1).abs() < 1e-12);
            prop_assert!((belief_distance(&m, &ft.result, Norm::L2) - ft.distance_l2).abs() < 1e-12);
            prop_assert!(orthogonality_residual(&m, &ft).unwrap() < 1e-9);
        }
    }

    #[test]
    fn gamma_box_geometry(m in mass_strategy(2..=4)) {
        for x in 0..m.frame().len() {
            let gb = partial_linf_belief(&m, x).unwrap();
            let centre = gamma_to_mass(&gb, &gb.barycenter()).unwrap();
            let ft = focused_transform(&m, x).unwrap();
            for a in m.frame().subsets() {
                prop_assert!((centre.mass(a) - ft.result.mass(a)).abs() < 1e-12);
            }
            prop_assert!((belief_distance(&m, &centre, Norm::LInf) - gb.distance).abs() < 1e-12);
            if gb.dimension() <= 7 {
                for v in gb.vertices().unwrap() {
                    prop_assert!((belief_distance(&m, &v, Norm::LInf) - gb.distance).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn linf_belief_optimum_is_max_plausibility(m in mass_strategy(2..=4)) {
        prop_assert_eq!(global_linf_belief(&m).unwrap().optima, max_plausibility_elements(&m));
    }
}
