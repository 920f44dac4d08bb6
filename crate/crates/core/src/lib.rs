//! Exact computation of Kauffman-bracket state sums through edge-weighted
//! graph polynomials, transfer-matrix closed forms for twist families, and
//! Mahler-measure analysis of the resulting bracket sequences.

pub mod error;
pub mod family;
pub mod graph;
pub mod laurent;
pub mod mahler;
pub mod twist;
pub mod wpoly;

pub use error::{Error, Result};
pub use family::{
    builtin_family, family_bracket, family_closed_form, glue_n, matrix_power_check, state_sums,
    tangle_coeffs, BuiltinFamily, FamilyForm, UnitRule, BUILTIN_NAMES,
};
pub use graph::{Activity, Color, ColoredGraph, Edge, EdgeSubset};
pub use laurent::{DRingElem, LaurentPoly};
pub use mahler::{
    default_t_grid, divergence_certificate, equimodular_points, euclidean_mahler, mahler,
    mahler_trend, normalized_lambda_pair, roots, v_poly, v_poly_symbolic, DivergenceVerdict,
    EquimodularPoint, Root, RootSet, Tolerances, DIVERGENCE_MARGIN,
};
pub use twist::{norm_bound_scan, p_statistic, specialize_twist, twist_polynomial, MultiPoly};
pub use wpoly::{
    bracket_oracle, bracket_weights, jones, kauffman_bracket, w_delcon, w_spantree, w_subset,
    EdgeWeights,
};
