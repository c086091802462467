//! Lattice point sets: Schubert matroid bases and spanning sets, Minkowski
//! sumsets, interval unions, and M-convexity.

mod checks;
mod lattice;
mod matroid;
mod mconvex;

pub use checks::{
    check_groth_lower_bounded, check_layered_domination, check_m_convex, check_main_support,
    check_psp_formula, check_psp_inclusion, check_schub_support, check_strict_column_inclusion,
    closure_weight, column_base_sumset, column_spanning_sumset, supports_by_enumeration,
    MainSupportCheck, Report, Supports,
};
pub use lattice::LatticePointSet;
pub use matroid::{
    fundamental_weight, interval_union, minkowski_sumset, schubert_matroid_bases,
    schubert_spanning_sets,
};
pub use mconvex::{is_m_convex, m_convex_violation, ExchangeWitness};
