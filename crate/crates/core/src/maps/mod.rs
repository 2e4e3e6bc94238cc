//! Maps between R-tuples and R-permutations: cores, floors, ceilings and
//! platforms, rank tuples and their inverse, R-312 avoidance, chains,
//! projections and lifts.

mod cores;
mod perms;

pub use cores::{ceiling_of, core, floor_of, platform};
pub use perms::{
    chain_of, contains_r_pattern, coxeter_length, is_r312_avoiding, is_r312_avoiding_by_intervals, is_rightmost_clump_deleting,
    min_lift, perm_of_chain, pi_of, r_projection, rank_tuple, Chain, RPermutation,
};
