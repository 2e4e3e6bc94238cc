//! Object generators, parabolic Catalan counts and the verification sweeps.

mod counts;
mod generate;
mod sweep;
mod verify;

pub use counts::{
    class_interval, in_class, parabolic_catalan, parabolic_catalan_by_gapless, shape_tuple_count,
    total_parabolic_catalan,
};
pub use generate::{
    critical_lists, filled, flag_critical_lists, generate, r312_avoiding, r_permutations, ui_tuples, upper_flags,
    upper_tuples, Family, Object,
};
pub use sweep::{ShapeSweep, TableauSet};
pub use verify::{verify, verify_shapes, Limits, TheoremId, VerificationReport};
