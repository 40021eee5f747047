//! Higher Futaki invariants, the Chow weight, and independent checks of the
//! intersection-number formulas on the compactified product configuration.

mod compactified;
mod futaki;
mod report;
mod verify;

pub use compactified::{compactified_intersection, CompactifiedIntersection};
pub use futaki::{all_futaki, chow_weight, donaldson_futaki, futaki, lift_shift_check};
pub use report::{default_shifts, obstruction_report, report_from, InvariantReport};
pub use verify::{
    theorem_main_ratio, verify_bl1, verify_ehrhart, verify_lift_shift, verify_theorem_main,
    Quantity, Verification, Witness,
};
