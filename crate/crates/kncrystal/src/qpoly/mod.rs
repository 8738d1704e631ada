//! Exact arithmetic in the variable q and the counting formulas built on
//! it: the pwr statistic, the hook content product, its q-analogue and
//! the determinant route to the same polynomial.

pub mod formulas;
pub mod intpoly;

pub use formulas::{
    closed_form_denominator, closed_form_det, determinant_poly, determinant_raw, f_sp,
    hook_content_count, pwr_tab, pwr_wt, x_poly, StaircaseParts,
};
pub use intpoly::{CyclotomicContext, IntPoly};
