//! Exact computations with positive tropical points of Grassmannian cones
//! and flag configuration spaces.
//!
//! Modules, bottom up:
//! - [`semifield`]: rationals, the tropical semifield, Laurent/Puiseux series.
//! - [`cluster`]: seeds, mutation in any semifield, the p-map.
//! - [`catalog`]: Grassmannian and flag-configuration seeds, evaluation of
//!   Plücker coordinates and flag functions, triangulation flips.
//! - [`points`]: tropical points, chart changes, series lifts, pushforward
//!   to the Grassmannian, torus actions.
//! - [`hive`]: hive inequalities, boundary distances, the distinguished lift
//!   and the cone inequalities on tropical Plücker vectors.
//! - [`building`]: lattices over power series, coweight distances and the
//!   brute-force evaluation of tropical functions.
//! - [`diagram`]: SVG puzzles showing which hive inequalities are strict.

pub mod building;
pub mod catalog;
pub mod diagram;
pub mod cluster;
pub mod error;
pub mod hive;
pub mod linalg;
pub mod points;
pub mod semifield;

pub use error::{Error, Result};
