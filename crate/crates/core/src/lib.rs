//! Exact computation of modules of logarithmic vector fields over the
//! rationals, their Fitting ideals, and the criteria that decide when a
//! module of vector fields generates them.

pub mod corpus;
pub mod criteria;
pub mod derlog;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;

pub use corpus::{example_modules, examples, run_example, ExampleInfo};
pub use criteria::{
    bound_table, check_bound_and_sharpness, check_smooth_fitting, component_condition,
    generalized_saito_check, linear_free_divisor_check, refinement_indices, saito_criterion, saito_second_criterion,
    smooth_criterion, smooth_fitting_formula, smooth_germ_generators, thm_bound, BoundRow,
    ComponentSpec, SymbolicPowers,
};
pub use derlog::{
    apply_field, derlog_hypersurface, derlog_ideal, euler_field, field_value, fitting_ideal,
    is_logarithmic, lie_bracket, linearize, minimal_generator_count, module_equal,
    module_membership, saito_matrix, span_dim, trivial_generators, FieldModule, VectorField,
};
pub use error::{Error, Result};
pub use groebner::{groebner_basis, syzygies, FreeVec, GroebnerBasis, ModuleGroebnerBasis};
pub use ideal::{
    eliminate, gcd_poly, is_reduced, jacobian, minors_ideal, singular_locus_ideal, squarefree_part,
    symbolic_power, Ideal, SymbolicPower,
};
pub use linalg::QMat;
pub use matrix::PolyMat;
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{rat, rat_frac, Poly, Rational};
pub use report::{CheckReport, Evidence, Verdict, Witness};
pub use ring::{MonomialOrder, Point, Ring, MAX_VARS};

/// Version reported by the command-line front end.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
