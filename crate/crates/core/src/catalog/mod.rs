//! Concrete seeds: the Grassmannian grid seed and the triangulation seeds
//! for configurations of flags, together with the functions they carry.

mod flags;
mod flip;
pub mod labels;
mod seeds;
mod triangulation;

pub use flags::{
    f_eval, pluecker_eval, random_flag_config, random_matrix, rho_matrix, tau_flags, twist_sign, vectors_to_flags,
    FlagConfig,
};
pub use flip::{chart_change, flip_sequence, flip_steps, ChartChange};
pub use labels::{wrap, wrap_signed, FlagMonomialLabel, Label, PluckerLabel};
pub use seeds::{confa_label_count, confa_seed, grassmannian_seed};
pub use triangulation::Triangulation;

/// The flag function pulled back along "first vector of each flag".
pub fn pi_pullback(j: &PluckerLabel) -> FlagMonomialLabel {
    FlagMonomialLabel::from_plucker(j)
}
