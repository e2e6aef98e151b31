//! Exact computations with cocycle twists of group-graded algebras.

pub mod catalog;
pub mod cocycle;
pub mod error;
pub mod fourier;
pub mod group;
pub mod io;
pub mod linalg;
pub mod ncpoly;
pub mod parse;
pub mod points;
pub mod presentation;
pub mod rep;
pub mod rewrite;
pub mod scalar;
pub mod suite;

pub use catalog::{catalog, CatalogEntry, CatalogName, CatalogParams};
pub use cocycle::{Bicharacter, CoboundaryForm, CocycleCheck, CocycleKind, TwoCocycle};
pub use error::{Error, Result};
pub use fourier::{cocycle_to_twist, GroupAlgebraElement, GroupAlgebraTensor};
pub use group::{GradingGroup, GroupElement};
pub use ncpoly::{GenSet, NcPoly, Word};
pub use parse::{parse_expression, parse_scalar};
pub use points::{compose_points, generic_point, group_law_points, point_symbols, Curve, Point};
pub use presentation::{
    braided_tensor, twist_coproduct, twist_presentation, verify_homomorphism, AlgebraMap, CoproductSpec,
    GradedPresentation, HomomorphismCheck,
};
pub use linalg::Matrix;
pub use rep::{
    build_a, build_b, build_e, check_omnibus, classify_dim1, is_simple, ladder, verify_relations, z_spectra_distinct,
    LadderData, MatrixModule, Sign, TwistedGroupAlgebra,
};
pub use rewrite::{RewriteSystem, Rule};
pub use scalar::{Cyclotomic, CyclotomicField, Scalar};
pub use suite::{case_names, run_case, run_suite, suite_to_json, CaseReport, Status};
