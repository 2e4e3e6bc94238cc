//! R-sets, R-tuples, their classification, and critical lists.

mod critical;
mod rset;
mod tuple;

pub use critical::{critical_list, tuple_from_critical, CriticalList, CriticalPair, FillKind};
pub(crate) use critical::fill;
pub use rset::RSet;
pub use tuple::{Label, RTuple};
