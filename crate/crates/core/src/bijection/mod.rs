//! The two statistic-preserving bijections and the crossing-decomposition
//! counters used in their proofs.

pub mod gamma;
pub mod phi;

pub use gamma::{crossing_decomposition_g, g5_closed, gamma, in_gamma_domain};
pub use phi::{
    a_set_count, crossing_decomposition_l, in_phi_codomain, in_phi_domain, phi, phi_inverse,
};
