//! Polynomial families, Stirling numbers, moments by four routes, the
//! moment functional, and the linearization coefficient formulas.

pub mod asc;
pub mod jacobi;
pub mod laguerre;
pub mod linearize;
pub mod moments;
pub mod stirling;

pub use asc::{asc_hypergeometric, asc_linearize_c, asc_q_poly, CMethod, HyperForm};
pub use jacobi::{jacobi_for, moments_motzkin, AscParams, JacobiCoefficients};
pub use laguerre::{laguerre_poly, LaguerreMethod};
pub use linearize::{linearize, linearize_closed3, linearize_functional, LinMethod};
pub use moments::{
    asc_moment_explicit, asc_moment_stirling, functional_apply, moment_closed_charlier,
    moment_closed_laguerre, moment_gf_truncated, GfFamily, MomentTable,
};
pub use stirling::{
    partial_fraction_gamma, partial_fraction_identity_holds, stirling_s1, stirling_s2,
    stirling_s2_closed_at,
};
