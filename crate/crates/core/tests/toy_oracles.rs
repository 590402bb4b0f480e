mod common;

use common::*;
use dcboost::toy::*;
use dcboost::DcModel;

#[test]
fn scad_subproblem_matches_golden_section() {
    let mut r = rng(11);
    for _ in 0..10_000 {
        let w = uniform(&mut r, -10.0, 10.0);
        let obj = |s: f64| scad_g(s) - w * s;
        // Coarse grid to bracket, then golden section inside the bracket.
        let coarse = grid_argmin(obj, -20.0, 20.0, 0.01);
        let oracle = golden_section(obj, coarse - 0.02, coarse + 0.02, 1e-10);
        let got = scad_subproblem_1d(w);
        assert!((got - oracle).abs() <= 1e-5, "w = {w}: {got} vs {oracle}");
    }
}

#[test]
fn scad_subproblem_dense_grid_at_reference_slope() {
    let w = scad_h_prime(2.2);
    let oracle = grid_argmin(|s| scad_g(s) - w * s, -4.0, 4.0, 1e-6);
    assert!((scad_subproblem_1d(w) - oracle).abs() <= 1e-5);
}

#[test]
fn scad_pieces_reassemble_the_objective() {
    let mut r = rng(12);
    for _ in 0..1000 {
        let t = uniform(&mut r, -5.0, 5.0);
        assert!((scad_phi_tilde(t) - scad_f(t)).abs() < 1e-12, "t = {t}");
    }
    let x = [uniform(&mut r, -3.0, 3.0), uniform(&mut r, -3.0, 3.0)];
    assert!((ScadSeparableProblem.phi(&x) - scad_phi(&x)).abs() < 1e-12);
}

#[test]
fn scad_h_one_sided_derivatives_agree_at_breakpoints() {
    let eps = 1e-7;
    for b in [-2.0, -1.0, 1.0, 2.0] {
        let left = (scad_h(b) - scad_h(b - eps)) / eps;
        let right = (scad_h(b + eps) - scad_h(b)) / eps;
        assert!((left - right).abs() < 1e-6, "breakpoint {b}");
        assert!((left - scad_h_prime(b)).abs() < 1e-6);
    }
}

#[test]
fn scad_joint_solve_is_coordinatewise() {
    let mut r = rng(13);
    for _ in 0..200 {
        let x = [uniform(&mut r, -4.0, 4.0), uniform(&mut r, -4.0, 4.0)];
        let joint = ScadSeparableProblem.solve_subproblem(&x).unwrap().point;
        let w = ScadSeparableProblem.grad_h(&x);
        assert_eq!(
            joint,
            vec![scad_subproblem_1d(w[0]), scad_subproblem_1d(w[1])]
        );
    }
}

#[test]
fn scad_minimum_is_zero_at_origin_only() {
    assert_eq!(scad_phi_tilde(0.0), 0.0);
    let mut r = rng(14);
    for _ in 0..1000 {
        let t = uniform(&mut r, -6.0, 6.0);
        if t != 0.0 {
            assert!(scad_phi_tilde(t) > 0.0);
        }
    }
}

#[test]
fn quadl1_subproblem_matches_grid_refinement() {
    let mut r = rng(21);
    for _ in 0..1000 {
        let x = [uniform(&mut r, -5.0, 5.0), uniform(&mut r, -5.0, 5.0)];
        let got = quadl1_subproblem(x);
        let oracle = quadl1_subproblem_oracle(QuadL1Problem.grad_h(&x).try_into().unwrap());
        for (a, b) in got.iter().zip(&oracle) {
            assert!((a - b).abs() <= 1e-6, "x = {x:?}: {got:?} vs {oracle:?}");
        }
    }
}

#[test]
fn quadl1_objective_matches_reference() {
    let mut r = rng(22);
    for _ in 0..100 {
        let x = [uniform(&mut r, -3.0, 3.0), uniform(&mut r, -3.0, 3.0)];
        assert!((QuadL1Problem.phi(&x) - quadl1_phi(x)).abs() < 1e-12);
    }
    assert!((quadl1_phi([1.5, 0.0]) + 9.0 / 8.0).abs() < 1e-15);
}
