//! Two analytic 2-D DC problems with closed-form subproblems.

pub mod basin;
mod quadl1;
mod scad;

pub use basin::{
    basin_config, basin_experiment, basin_from_starts, classify, Attractor, BasinReport, Execution,
};
pub use quadl1::{quadl1_subproblem, soft_threshold_half, QuadL1Problem};
pub use scad::{
    scad_g, scad_h, scad_h_prime, scad_phi_tilde, scad_subproblem_1d, ScadSeparableProblem,
};
