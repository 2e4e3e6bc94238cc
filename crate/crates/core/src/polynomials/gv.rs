use std::collections::HashMap;

use super::coeff::Coeff;
use super::sparse::SparsePoly;
use crate::error::Result;
use crate::maps::platform;
use crate::rtuples::RTuple;
use crate::tableaux::Partition;

/// Complete homogeneous polynomial of degree `k` in `x_a, ..., x_b`
/// (1-based, inclusive), inside a ring of `n` variables.
pub fn flagged_h(n: usize, k: i64, a: usize, b: usize) -> SparsePoly {
    if k < 0 {
        return SparsePoly::zero(n);
    }
    if k == 0 {
        return SparsePoly::one(n);
    }
    let mut out = SparsePoly::zero(n);
    if a > b || a == 0 {
        return out;
    }
    let b = b.min(n);
    fn go(var: usize, b: usize, left: u32, exp: &mut Vec<u32>, out: &mut SparsePoly) {
        if var == b {
            exp[var - 1] = left;
            out.add_term(exp.clone(), &Coeff::ONE);
            exp[var - 1] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exp[var - 1] = e;
            go(var + 1, b, left - e, exp, out);
        }
        exp[var - 1] = 0;
    }
    go(a, b, k as u32, &mut vec![0; n], &mut out);
    out
}

/// Determinant by cofactor expansion along rows, memoized over the set of
/// columns already used.
pub fn determinant(m: &[Vec<SparsePoly>], n_vars: usize) -> SparsePoly {
    let size = m.len();
    assert!(size < 64, "matrix too large");
    fn go(m: &[Vec<SparsePoly>], used: u64, n_vars: usize, memo: &mut HashMap<u64, SparsePoly>) -> SparsePoly {
        let row = used.count_ones() as usize;
        if row == m.len() {
            return SparsePoly::one(n_vars);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = SparsePoly::zero(n_vars);
        let mut position = 0;
        for c in 0..m.len() {
            if used >> c & 1 == 1 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = go(m, used | 1 << c, n_vars, memo);
                let term = &m[row][c] * &minor;
                total = if position % 2 == 0 { &total + &term } else { &total - &term };
            }
            position += 1;
        }
        memo.insert(used, total.clone());
        total
    }
    go(m, 0, n_vars, &mut HashMap::new())
}

/// Entry `(i, j)` is `h_{λ_j - j + i}(x_i, ..., x_{β_j})`.
pub fn gv_matrix(shape: &Partition, beta: &RTuple) -> Result<Vec<Vec<SparsePoly>>> {
    shape.rset().check_same(beta.rset())?;
    beta.require_upper()?;
    let n = shape.n();
    Ok((1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| flagged_h(n, shape.part(j) as i64 - j as i64 + i as i64, i, beta.entries()[j - 1]))
                .collect()
        })
        .collect())
}

pub fn gv_determinant(shape: &Partition, beta: &RTuple) -> Result<SparsePoly> {
    Ok(determinant(&gv_matrix(shape, beta)?, shape.n()))
}

/// `β` has a gapless core and lies below its platform.
pub fn is_nonpermutable(shape: &Partition, beta: &RTuple) -> Result<bool> {
    shape.rset().check_same(beta.rset())?;
    beta.require_upper()?;
    Ok(beta.is_gapless_core() && beta.leq(&platform(beta)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_homogeneous() {
        assert_eq!(flagged_h(3, 0, 2, 1).to_string(), "1");
        assert_eq!(flagged_h(3, 2, 1, 2).to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(flagged_h(4, 1, 2, 4).to_string(), "x2 + x3 + x4");
        assert!(flagged_h(3, -1, 1, 3).is_zero());
        assert!(flagged_h(3, 1, 3, 2).is_zero());
    }

    #[test]
    fn two_by_two() {
        let n = 2;
        let a = flagged_h(n, 1, 1, 2);
        let b = flagged_h(n, 2, 1, 2);
        let c = flagged_h(n, 0, 1, 2);
        let d = flagged_h(n, 1, 2, 2);
        let det = determinant(&[vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]], n);
        assert_eq!(det, &(&a * &d) - &(&b * &c));
    }

    #[test]
    fn known_example() {
        let l = Partition::parse("1,1,0").unwrap();
        let beta = RTuple::parse("2,3;3").unwrap();
        assert_eq!(gv_determinant(&l, &beta).unwrap().to_string(), "x1*x2 + x1*x3 + x2*x3");
        let zero = Partition::parse("0,0,0").unwrap();
        assert_eq!(gv_determinant(&zero, &RTuple::parse("2,3,3").unwrap()).unwrap(), SparsePoly::one(3));
    }

    #[test]
    fn nonpermutable_examples() {
        let l = Partition::parse("1,1,0").unwrap();
        assert!(is_nonpermutable(&l, &RTuple::parse("2,3;3").unwrap()).unwrap());
        assert!(is_nonpermutable(&l, &RTuple::parse("3,3;3").unwrap()).unwrap());
    }
}
