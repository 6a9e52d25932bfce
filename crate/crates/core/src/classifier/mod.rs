//! Category types and their thick subcategories.

mod algebra;
mod category;
mod criterion;
mod table;

pub use algebra::{algebra_type_to_category_type, is_standard_algebra_type};
pub use category::{CategoryType, Order};
pub use criterion::{
    catalan_d, count_thick_formula, enumerate_thick, enumerate_thick_indices, gcd, is_invariant_nc, parameter_p,
    reduce_criterion, InvarianceCriterion,
};
pub use table::{classification_report, evaluate_grid, overview_markdown, overview_table, ClassificationReport, TableRow};
