//! Partitions, semistandard tableaux, their enumeration, keys and the
//! row-end and row-bound maximum tableaux.

mod enumerate;
mod keys;
mod partition;
mod tableau;

pub use enumerate::{all_tableaux, enumerate_tableaux, principal_ideal, TableauIter};
pub use keys::{is_gapless_key, key_of, perm_of_key, row_bound_max, row_end_max};
pub use partition::Partition;
pub use tableau::Tableau;
