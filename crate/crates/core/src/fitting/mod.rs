//! The generic map `Φ` and the representation-theoretic ideals attached to it.

pub mod ideals;
pub mod lie;
pub mod setup;
pub mod tableau;
pub mod verify;

pub use ideals::{corollary2_z, filtration_dim, ideal_i_lambda, lambda_span, lambda_span_pi, specialize_ideal};
pub use lie::{lie_apply, lie_closure, LieGenerator, Side};
pub use setup::{GenericSetup, SetupSpec};
pub use tableau::{admissibility, highest_weight_tableau, highest_weight_vector, pi, pi_prime, rho, rho_tableau, DoubleTableau};
pub use verify::{
    sample_annihilator_sets, verify_cauchy, verify_conj41, verify_cor2, verify_lie, verify_thm1a, verify_thm1b,
    verify_thm1b_generic, Report, Status,
};
