//! Algebras, coalgebras, (co)modules, balanced tensor products and
//! structured check reports.

mod algebra;
mod coalgebra;
mod module;
mod report;

pub use algebra::{check_algebra_map, AlgebraData};
pub use coalgebra::{check_sweedler_measuring, first_diff_col, measuring_at, CoalgebraData};
pub use module::{balanced_tensor, iterated_balanced_tensor, BalancedTensor, ComoduleData, ModuleActionData, Side, TowerSlot};
pub use report::{find_witness, AxiomResult, CheckReport, Status};
