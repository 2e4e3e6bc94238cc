//! The scanning tableau `S(T)` (right key), remainder maxima, and Demazure
//! tableau sets `D_λ(π) = {T : S(T) <= Y_λ(π)}`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::maps::RPermutation;
use crate::tableaux::{all_tableaux, key_of, Partition, Tableau};

/// Earliest weakly increasing subsequence: 0-based positions, starting at 0,
/// each next one the first later position whose value is at least the last
/// selected value.
pub fn ewis(seq: &[usize]) -> Result<Vec<usize>> {
    let Some(&first) = seq.first() else {
        return Err(Error::InvalidTuple("EWIS of an empty sequence".into()));
    };
    let mut out = vec![0];
    let mut last = first;
    for (i, &v) in seq.iter().enumerate().skip(1) {
        if v >= last {
            out.push(i);
            last = v;
        }
    }
    Ok(out)
}

/// Marks on the columns of `T` from a start column onward, as used by the
/// literal scanning procedure.
struct ScanState<'a> {
    tableau: &'a Tableau,
    start: usize,
    marks: Vec<Vec<bool>>,
}

impl<'a> ScanState<'a> {
    fn new(tableau: &'a Tableau, start: usize) -> Self {
        let marks = tableau.columns()[start..].iter().map(|c| vec![false; c.len()]).collect();
        ScanState { tableau, start, marks }
    }

    /// Number of unmarked boxes per column, after checking that they form a
    /// top segment of each column and a partition shape overall.
    fn unmarked_heights(&self) -> Result<Vec<usize>> {
        let mut heights = Vec::with_capacity(self.marks.len());
        for (c, col) in self.marks.iter().enumerate() {
            let h = col.iter().take_while(|m| !**m).count();
            if col[h..].iter().any(|m| !*m) {
                return Err(Error::Internal(format!(
                    "unmarked boxes of column {} are not a top segment in {}",
                    self.start + c + 1,
                    self.tableau.to_json()
                )));
            }
            if heights.last().is_some_and(|&prev| prev < h) {
                return Err(Error::Internal(format!(
                    "unmarked boxes do not form a partition shape in {}",
                    self.tableau.to_json()
                )));
            }
            heights.push(h);
        }
        Ok(heights)
    }

    /// Marks the next scanning path and returns its final value.
    fn next_path(&mut self) -> Result<usize> {
        let heights = self.unmarked_heights()?;
        let bottoms: Vec<(usize, usize)> = heights
            .iter()
            .take_while(|&&h| h > 0)
            .enumerate()
            .map(|(c, &h)| (c, h - 1))
            .collect();
        let values: Vec<usize> = bottoms.iter().map(|&(c, i)| self.tableau.get(self.start + c, i)).collect();
        let path = ewis(&values)?;
        for &k in &path {
            let (c, i) = bottoms[k];
            self.marks[c][i] = true;
        }
        Ok(values[*path.last().unwrap()])
    }
}

/// `S(T)` by the marking procedure: for each start column `j`, repeatedly take
/// the EWIS of the bottom unmarked values of columns `j, j+1, ...`, mark its
/// boxes, and write its final value into the lowest free box of column `j`.
pub fn scan(t: &Tableau) -> Result<Tableau> {
    let mut out: Vec<Vec<usize>> = t.columns().iter().map(|c| vec![0; c.len()]).collect();
    for j in 0..out.len() {
        let mut state = ScanState::new(t, j);
        for k in (0..out[j].len()).rev() {
            out[j][k] = state.next_path()?;
        }
    }
    Tableau::new(t.shape().clone(), out).map_err(|e| Error::Internal(format!("scan of {}: {e}", t.to_json())))
}

/// Removes the scanning path starting at `(l, heights[l] - 1)`, updating the
/// unmarked column heights.
fn remove_path(t: &Tableau, heights: &mut [usize], l: usize) {
    heights[l] -= 1;
    let mut cur = t.get(l, heights[l]);
    for c in l + 1..heights.len() {
        if heights[c] == 0 {
            break;
        }
        let v = t.get(c, heights[c] - 1);
        if v >= cur {
            cur = v;
            heights[c] -= 1;
        }
    }
}

fn max_right_of(t: &Tableau, heights: &[usize], l: usize) -> usize {
    (l + 1..heights.len()).filter(|&c| heights[c] > 0).map(|c| t.get(c, heights[c] - 1)).max().unwrap_or(1)
}

/// `m(U^{(l,k)})` for the 0-based box `(l, k)`: the largest value right of
/// column `l` once the scanning paths from the boxes of column `l` below row
/// `k` are removed, or 1 if nothing remains.
pub fn remainder_max(t: &Tableau, l: usize, k: usize) -> Result<usize> {
    if l >= t.columns().len() || k >= t.column(l).len() {
        return Err(Error::InvalidTableau(format!("box (column {}, row {}) is outside the shape", l + 1, k + 1)));
    }
    let mut heights: Vec<usize> = t.columns().iter().map(Vec::len).collect();
    while heights[l] > k + 1 {
        remove_path(t, &mut heights, l);
    }
    Ok(max_right_of(t, &heights, l))
}

/// `S(T)` computed box by box as `S_l(k) = max(T_l(k), m(U^{(l,k)}))`; an
/// independent check on [`scan`].
pub fn scan_by_remainders(t: &Tableau) -> Tableau {
    let mut out: Vec<Vec<usize>> = t.columns().iter().map(|c| vec![0; c.len()]).collect();
    for l in 0..out.len() {
        let mut heights: Vec<usize> = t.columns().iter().map(Vec::len).collect();
        for k in (0..out[l].len()).rev() {
            out[l][k] = t.get(l, k).max(max_right_of(t, &heights, l));
            remove_path(t, &mut heights, l);
        }
    }
    Tableau::from_parts_unchecked(t.shape().clone(), out)
}

/// Whether `S(T) <= Y_λ(π)`.
pub fn demazure_contains(shape: &Partition, p: &RPermutation, t: &Tableau) -> Result<bool> {
    if t.shape() != shape {
        return Err(Error::ShapeMismatch(format!("{} vs {}", t.shape(), shape)));
    }
    let key = key_of(shape, p)?;
    Ok(scan(t)?.leq(&key))
}

/// `D_λ(π)` in enumeration order.
pub fn demazure_set(shape: &Partition, p: &RPermutation) -> Result<Vec<Tableau>> {
    let key = key_of(shape, p)?;
    let all = all_tableaux(shape);
    let keep: Vec<bool> = all.par_iter().map(|t| scan(t).map(|s| s.leq(&key))).collect::<Result<_>>()?;
    Ok(all.into_iter().zip(keep).filter_map(|(t, k)| k.then_some(t)).collect())
}
