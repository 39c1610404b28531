//! Quantities shared by all digraphs with the same hike monoid, and the
//! exact integer machinery to compute them.

mod matrix;
mod poly;
mod series;
mod traces;
mod walks;

pub use matrix::{closed_walk_counts, det_i_minus_a, det_i_minus_za, determinant, perm_i_plus_a, permanent, PERMANENT_CAP};
pub use poly::IntPolynomial;
pub use series::TruncatedSeries;
pub use traces::{
    count_traces_by_omega, count_traces_by_omega_with, enumerate_normal_forms, hike_gf_by_omega, sa_hike_polynomial,
    walk_gf_by_omega, walk_gf_by_omega_with, walk_gf_closed_form, NormalFormTrace, TwinQuotient, DEFAULT_TRACE_BUDGET,
    SA_HIKE_CAP, TRACE_QUOTIENT_CAP,
};
pub use walks::{
    loop_erased_omega_gf, loop_erased_omega_gf_with, walk_resolvent_gf, LoopErasedSeries, WalkResolvent,
    DEFAULT_WALK_BUDGET, RESOLVENT_CAP,
};
