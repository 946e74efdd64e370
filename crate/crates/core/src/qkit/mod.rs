//! q-analysis toolkit: exact finite Pochhammer calculus, terminating basic
//! hypergeometric and Lauricella sums, truncated power series, and the
//! floating-point infinite products, Γ_q, B_q, q-integrals and dilogarithm.

mod multiset;
pub mod num;
mod poch;
mod series;

pub use multiset::PochMultiset;
pub use poch::{bhs_coeffs, bhs_terminating, qbinom, qfact, qlauricella_terminating, qpoch, qpoch_rf};
pub use series::{
    andrews_residual, bhs_series, euler_inverse, euler_product, hg_diffeq_residual, lemma_pq_residual, TruncSeries,
};
