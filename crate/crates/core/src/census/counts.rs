use crate::error::Result;
use crate::maps::core;
use crate::rtuples::{critical_list, fill, FillKind, RSet, RTuple};

use super::generate::{filled, r312_avoiding};

/// `C_n^R`, by filtering R-permutations for R-312-avoidance.
pub fn parabolic_catalan(rset: &RSet) -> u128 {
    r312_avoiding(rset).len() as u128
}

/// `C_n^R` again, as the number of gapless R-tuples.
pub fn parabolic_catalan_by_gapless(rset: &RSet) -> u128 {
    filled(rset, FillKind::Gapless).len() as u128
}

/// `C_n^Σ`: the sum of `C_n^R` over all `R ⊆ [n-1]`.
pub fn total_parabolic_catalan(n: usize) -> u128 {
    RSet::all(n).map(|r| parabolic_catalan(&r)).sum()
}

/// The least and greatest members of the class of `beta`: its core and the
/// shell with the same critical list.
pub fn class_interval(beta: &RTuple) -> Result<(RTuple, RTuple)> {
    let c = critical_list(beta)?;
    Ok((core(beta)?, fill(&c, FillKind::Shell)))
}

/// Whether `other` lies in the class of `beta`.
pub fn in_class(beta: &RTuple, other: &RTuple) -> Result<bool> {
    Ok(core(beta)? == core(other)?)
}

/// The number of `r`-tuples of shapes `μ^(1), ..., μ^(r)` with `μ^(h)` inside a
/// `p_h × (n - q_h)` rectangle, where the first row of `μ^(h)` is at most the
/// last row of `μ^(h+1)` plus the number of rows of `μ^(h+1)` of that length.
pub fn shape_tuple_count(rset: &RSet) -> u128 {
    let n = rset.n();
    let r = rset.r();
    if r == 0 {
        return 1;
    }
    let boxes: Vec<Vec<Vec<usize>>> = (1..=r)
        .map(|h| {
            let rows = rset.bound(h) - rset.bound(h - 1);
            partitions_in_box(rows, n - rset.bound(h))
        })
        .collect();
    // ways[k]: number of valid tails μ^(h..r) with μ^(h) = boxes[h][k]
    let mut ways: Vec<u128> = vec![1; boxes[r - 1].len()];
    for h in (0..r - 1).rev() {
        let next = &boxes[h + 1];
        ways = boxes[h]
            .iter()
            .map(|mu| {
                next.iter()
                    .zip(&ways)
                    .filter(|(nu, _)| {
                        let last = *nu.last().expect("p_h >= 1");
                        mu[0] <= last + nu.iter().filter(|&&x| x == last).count()
                    })
                    .map(|(_, w)| w)
                    .sum()
            })
            .collect();
    }
    ways.iter().sum()
}

/// Weakly decreasing sequences of exactly `rows` parts in `[0, cols]`.
fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rows {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let top = p.last().copied().unwrap_or(cols);
                (0..=top).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c: Vec<u128> = (1..=6).map(|n| parabolic_catalan(&RSet::full(n))).collect();
        assert_eq!(c, [1, 2, 5, 14, 42, 132]);
        assert_eq!(parabolic_catalan(&RSet::empty(5)), 1);
    }

    #[test]
    fn totals() {
        assert_eq!(total_parabolic_catalan(1), 1);
        assert_eq!(total_parabolic_catalan(3), 12);
    }

    #[test]
    fn interval_of_table_example() {
        let b = RTuple::parse("7,9,6;5,5,9,8,9;9").unwrap();
        let (lo, hi) = class_interval(&b).unwrap();
        assert_eq!(lo.to_string(), "4,5,6;4,5,7,8,9;9");
        assert!(lo.leq(&b) && b.leq(&hi));
        assert!(in_class(&b, &lo).unwrap() && in_class(&b, &hi).unwrap());
        let ui = RTuple::parse("2,3;3").unwrap();
        assert_eq!(class_interval(&ui).unwrap().0, ui);
    }
}
