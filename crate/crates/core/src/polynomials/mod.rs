//! Exact sparse polynomials, content generating functions of tableau sets,
//! key polynomials by divided differences, and the flagged Jacobi-Trudi
//! determinant.

mod coeff;
mod gv;
mod key_poly;
mod sparse;

pub use coeff::Coeff;
pub use gv::{determinant, flagged_h, gv_determinant, gv_matrix, is_nonpermutable};
pub use key_poly::{isobaric_divided_difference, key_poly_dd, key_poly_dd_with, AscentChoice, Composition};
pub use sparse::SparsePoly;

use std::collections::BTreeSet;

use crate::error::Result;
use crate::maps::RPermutation;
use crate::rtuples::RTuple;
use crate::scanning::demazure_set;
use crate::tableaux::{enumerate_tableaux, Partition, Tableau};

/// `x^Θ(T)`.
pub fn content_monomial(t: &Tableau) -> Vec<u32> {
    t.content().into_iter().map(|c| c as u32).collect()
}

/// `Σ x^Θ(T)` over the given tableaux, in `n` variables.
pub fn tableau_sum<'a>(n: usize, ts: impl IntoIterator<Item = &'a Tableau>) -> SparsePoly {
    let mut p = SparsePoly::zero(n);
    for t in ts {
        p.add_term(content_monomial(t), &Coeff::ONE);
    }
    p
}

/// `s_λ(β; x)`, summed over tableaux with row `i` bounded by `β_i`.
pub fn row_bound_sum(shape: &Partition, beta: &RTuple) -> Result<SparsePoly> {
    let set: Vec<Tableau> = enumerate_tableaux(shape, Some(beta))?.collect();
    Ok(tableau_sum(shape.n(), &set))
}

/// `d_λ(π; x)`, summed over the Demazure set.
pub fn demazure_poly(shape: &Partition, p: &RPermutation) -> Result<SparsePoly> {
    Ok(tableau_sum(shape.n(), &demazure_set(shape, p)?))
}

/// Two sums are identical as generating functions when they run over the same
/// set of tableaux, which is stronger than equality of the polynomials.
pub fn identical_as_generating_functions(a: &[Tableau], b: &[Tableau]) -> bool {
    let a: BTreeSet<&Tableau> = a.iter().collect();
    let b: BTreeSet<&Tableau> = b.iter().collect();
    a == b
}
