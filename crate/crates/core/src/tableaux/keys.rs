use super::partition::Partition;
use super::tableau::Tableau;
use crate::error::{Error, Result};
use crate::maps::{core, RPermutation};
use crate::rtuples::RTuple;

fn check_rset(shape: &Partition, t: &RTuple) -> Result<()> {
    shape.rset().check_same(t.rset())
}

/// `Y_λ(π)`: `λ_n` inert columns, then for `h = r, ..., 1` exactly
/// `λ_{q_h} - λ_{q_{h+1}}` copies of the sorted column `B_h`.
pub fn key_of(shape: &Partition, p: &RPermutation) -> Result<Tableau> {
    check_rset(shape, p.as_tuple())?;
    let rset = p.rset();
    let n = shape.n();
    let mut cols = vec![(1..=n).collect::<Vec<_>>(); shape.part(n)];
    for h in (1..=rset.r()).rev() {
        let mut b = p.entries()[..rset.bound(h)].to_vec();
        b.sort_unstable();
        let copies = shape.part(rset.bound(h)) - shape.part(rset.bound(h + 1));
        cols.extend(std::iter::repeat(b).take(copies));
    }
    Tableau::new(shape.clone(), cols).map_err(|e| Error::Internal(format!("key construction: {e}")))
}

/// Reads `B_h` off a column of length `q_h` for each `h`.
pub fn perm_of_key(y: &Tableau) -> Result<RPermutation> {
    if !y.is_key() {
        return Err(Error::NotAKey(y.to_json()));
    }
    let rset = y.shape().rset();
    let lens = y.shape().column_lengths();
    let mut entries = Vec::with_capacity(rset.n());
    let mut prev: Vec<usize> = Vec::new();
    for h in 1..=rset.r() + 1 {
        let q = rset.bound(h);
        let b: Vec<usize> = if q == rset.n() {
            (1..=q).collect()
        } else {
            let j = lens.iter().position(|&z| z == q).expect("every element of R_λ is a column length");
            y.column(j).to_vec()
        };
        entries.extend(b.iter().filter(|v| prev.binary_search(v).is_err()));
        prev = b;
    }
    RPermutation::new(rset, entries)
}

/// The gapless condition on a key: between consecutive column lengths
/// `q_h < q_{h+1}`, if the least new value `b` of the longer column is at most
/// the largest value `m` of the shorter one, the longer column runs through
/// `b, b+1, ..., m` without gaps.
pub fn is_gapless_key(y: &Tableau) -> Result<bool> {
    if !y.is_key() {
        return Err(Error::NotAKey(y.to_json()));
    }
    let rset = y.shape().rset();
    let lens = y.shape().column_lengths();
    let column = |q: usize| y.column(lens.iter().position(|&z| z == q).expect("length present"));
    for h in 1..rset.r() {
        let short = column(rset.bound(h));
        let long = column(rset.bound(h + 1));
        let b = *long.iter().find(|v| short.binary_search(v).is_err()).expect("longer column has new values");
        let m = *short.last().expect("nonempty");
        if b <= m {
            let i = long.binary_search(&b).unwrap();
            let k = long.binary_search(&m).unwrap();
            if long[k] - long[i] != k - i {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `M_λ(α)`, the largest tableau whose row ends are `α`.
///
/// Columns of length `q_h` copy `α` on carrel `h`; above that, boxes are filled
/// east to west and south to north with `min(M_j(i+1) - 1, M_{j+1}(i))`.
pub fn row_end_max(shape: &Partition, alpha: &RTuple) -> Result<Tableau> {
    check_rset(shape, alpha)?;
    alpha.require_upper()?;
    alpha.require_r_increasing()?;
    let rset = alpha.rset();
    let n = shape.n();
    let lens = shape.column_lengths();
    let mut cols: Vec<Vec<usize>> = lens.iter().map(|&z| vec![0; z]).collect();
    for h in 1..=rset.r() {
        let (lo, hi) = (rset.bound(h - 1), rset.bound(h));
        for j in (shape.part(rset.bound(h + 1))..shape.part(hi)).rev() {
            cols[j][lo..hi].copy_from_slice(&alpha.entries()[lo..hi]);
            for i in (0..lo).rev() {
                cols[j][i] = (cols[j][i + 1] - 1).min(cols[j + 1][i]);
            }
        }
    }
    for col in cols.iter_mut().take(shape.part(n)) {
        *col = (1..=n).collect();
    }
    Tableau::new(shape.clone(), cols).map_err(|e| Error::Internal(format!("row end max: {e}")))
}

/// `Q_λ(β)`, the largest tableau with every entry of row `i` at most `β_i`.
pub fn row_bound_max(shape: &Partition, beta: &RTuple) -> Result<Tableau> {
    check_rset(shape, beta)?;
    row_end_max(shape, &core(beta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{is_r312_avoiding, rank_tuple};

    fn shape(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn p(s: &str) -> RPermutation {
        RPermutation::parse(s).unwrap()
    }

    fn t(s: &str) -> RTuple {
        RTuple::parse(s).unwrap()
    }

    #[test]
    fn known_keys() {
        let y = key_of(&shape("1,1,0"), &p("1,3;2")).unwrap();
        assert_eq!(y.columns(), &[vec![1, 3]]);
        let l = shape("2,1,1,0");
        let pi = p("4;1,2;3");
        let y = key_of(&l, &pi).unwrap();
        assert_eq!(y.columns(), &[vec![1, 2, 4], vec![4]]);
        assert_eq!(perm_of_key(&y).unwrap(), pi);
        assert!(!is_gapless_key(&y).unwrap());
        assert!(!is_r312_avoiding(&pi));
        assert_eq!(row_bound_max(&l, &rank_tuple(&pi)).unwrap(), y);
    }

    #[test]
    fn inert_shape_has_one_key() {
        let l = shape("1,1,1");
        let y = key_of(&l, &RPermutation::identity(l.rset())).unwrap();
        assert_eq!(y.columns(), &[vec![1, 2, 3]]);
        assert!(y.is_key() && is_gapless_key(&y).unwrap());
    }

    #[test]
    fn rset_mismatch() {
        assert!(matches!(key_of(&shape("1,1,0"), &p("1;3;2")), Err(Error::RSetMismatch { .. })));
        assert!(row_end_max(&shape("1,1,0"), &t("2,3,3")).is_err());
    }

    #[test]
    fn row_end_max_examples() {
        assert_eq!(row_end_max(&shape("1,1,0"), &t("2,3;3")).unwrap().columns(), &[vec![2, 3]]);
        assert_eq!(row_bound_max(&shape("1,1,0"), &t("3,3;3")).unwrap().columns(), &[vec![2, 3]]);
        let m = row_end_max(&shape("3,2,2,0"), &t("4;3,4;4")).unwrap();
        assert_eq!(m.columns(), &[vec![2, 3, 4], vec![2, 3, 4], vec![4]]);
    }

    #[test]
    fn perm_of_key_rejects_non_keys() {
        let y = Tableau::parse_columns(&shape("2,1,1,0"), "1,2,3/4").unwrap();
        assert!(matches!(perm_of_key(&y), Err(Error::NotAKey(_))));
    }
}
