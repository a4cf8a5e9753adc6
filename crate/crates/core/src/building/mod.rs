//! The affine building of `PGL_k`: lattices over power series, their
//! coweight distances, tropical flag functions by search, and the lattices
//! of a positive flag configuration.

mod config;
mod ftrop;
mod lattice;
mod oracle;

pub use config::{config_from_flag_config, config_from_flags, frame_against, BuildingConfig};
pub use ftrop::{
    f_trop_bruteforce, f_trop_certified, metric_f_min, pgl_correction, splits, valuation_minimizing_check,
    PosConfigReport, SearchResult,
};
pub use oracle::{building_oracle, OracleReport};
pub use lattice::{lattice_distance, same_lattice, CoweightDistance, LatticeMode, LatticeRep};
