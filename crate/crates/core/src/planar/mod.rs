//! The planar construction: a reduced quasiconformal map whose restriction
//! to the real line has unbounded variation.
//!
//! Conclusions that depend only on the real trace (`h`, `V_N`, the Rademacher
//! identity, the φ-variation dichotomy) hold for any Lipschitz extension of
//! the diamond formulas. The constants `L`, `k` and the derivative margins
//! are specific to the twelve-triangle extension used here.

pub mod beltrami;
pub mod lacunary;
pub mod parallel;
pub mod profile;
pub mod rademacher;

pub use beltrami::{beltrami_report, derivative_at, BeltramiReport, CellDerivative};
pub use lacunary::{
    dyadic_grid, f_eval, f_eval_detailed, h_eval, h_eval_detailed, h_partial, tilt_planar, vn, vn_table,
    LacunaryParams, PlanarTilt, SeriesMode, SeriesValue, Truncation, VnMethod,
};
pub use parallel::{build_parallel_map, CoefficientMargins, RemainderLipschitz, SumConstruction};
pub use profile::{g_eval, g_lipschitz, in_b, scale_hits, tent_eval, Cell, GEval, Gradient};
pub use rademacher::rademacher_eval;
