//! Hive coordinates on flag-configuration charts, their inequalities, and
//! the distinguished lift from tropical Plücker vectors.

mod boundary;
mod cone;
mod keyeqn;
mod lamination;
mod lift;
mod reduce;

pub use boundary::{boundary_from_frozen, frozen_from_boundary, BoundaryDistances};
pub use cone::{
    cone_check, frozen_plus, frozen_values, hive_check, random_hive_point, rhombi, rhombus_id, ConeReport, HiveCoordinates, Inequality,
    Rhombus,
};
pub use keyeqn::{KeyEqnChecker, KeyInstance};
pub use lamination::{
    act_lineality, cone_representative, integrality_check, l_lamination, lamination_torus_element, rw_normalize,
    weight_report, IntegralityReport, WeightReport,
};
pub use lift::{boundary_of, distinguished_lift, distinguished_lift_on, dual_lift, hive_value};
pub use reduce::{reduce_to_plucker, reduce_with, SplitOrder};
