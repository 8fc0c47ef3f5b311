//! Truncated Laurent series in one and two variables, plus the
//! generating-function checks built on them.

mod biseries;
mod bipoly;
pub mod kernels;
mod laurent;

pub use biseries::BiSeries;
pub use bipoly::BiPoly;
pub use kernels::{
    classical_gf_check, f_closed_form, f_coefficients_check, f_paths_agree, g_oracle, g_r_check,
    g_r_series, middle_gf_check, pde_check, remark_check, remark_series, revert, revert_u,
    reversion_holds, routine_identity_check, Kernel,
};
pub use laurent::LaurentSeries;
