use super::partition::Partition;
use super::tableau::Tableau;
use crate::error::Result;
use crate::rtuples::RTuple;

#[derive(Clone, Copy, Debug)]
struct Cell {
    row: usize,
    above: Option<usize>,
    left: Option<usize>,
}

/// Backtracking stream of tableaux below per-cell caps, in lexicographic
/// order of the column-major value vector.
///
/// The stream is sequential. Parallel consumers should collect it first and
/// split the resulting vector, which keeps the order.
#[derive(Clone, Debug)]
pub struct TableauIter {
    shape: Partition,
    cells: Vec<Cell>,
    caps: Vec<usize>,
    vals: Vec<usize>,
    started: bool,
    done: bool,
}

impl TableauIter {
    /// `caps` are column-major upper bounds, one per box.
    fn new(shape: &Partition, caps: Vec<usize>) -> Self {
        let lens = shape.column_lengths();
        let mut cells = Vec::with_capacity(caps.len());
        let mut col_start = Vec::with_capacity(lens.len());
        for (j, &z) in lens.iter().enumerate() {
            col_start.push(cells.len());
            for i in 0..z {
                cells.push(Cell {
                    row: i,
                    above: (i > 0).then(|| cells.len() - 1),
                    left: (j > 0).then(|| col_start[j - 1] + i),
                });
            }
        }
        let mut caps = caps;
        // a box must leave room for the strictly larger boxes below it
        for k in (0..cells.len()).rev() {
            if k + 1 < cells.len() && cells[k + 1].above == Some(k) {
                caps[k] = caps[k].min(caps[k + 1].saturating_sub(1));
            }
        }
        let vals = vec![0; cells.len()];
        TableauIter { shape: shape.clone(), cells, caps, vals, started: false, done: false }
    }

    fn empty(shape: &Partition) -> Self {
        let mut it = TableauIter::new(shape, vec![0; shape.size()]);
        it.done = true;
        it
    }

    fn lower(&self, k: usize) -> usize {
        let c = self.cells[k];
        let a = c.above.map_or(c.row + 1, |a| self.vals[a] + 1);
        let l = c.left.map_or(1, |l| self.vals[l]);
        a.max(l)
    }

    /// Fills positions `k..` with their least values; returns the first
    /// position that cannot be filled.
    fn fill_from(&mut self, k: usize) -> Option<usize> {
        for p in k..self.cells.len() {
            let lo = self.lower(p);
            if lo > self.caps[p] {
                return Some(p);
            }
            self.vals[p] = lo;
        }
        None
    }

    /// Bumps the last position before `p` that can grow and refills after it.
    fn backtrack(&mut self, mut p: usize) -> bool {
        loop {
            if p == 0 {
                return false;
            }
            p -= 1;
            if self.vals[p] < self.caps[p] {
                self.vals[p] += 1;
                match self.fill_from(p + 1) {
                    None => return true,
                    Some(q) => p = q,
                }
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut cols = Vec::with_capacity(self.shape.num_columns());
        let mut k = 0;
        for z in self.shape.column_lengths() {
            cols.push(self.vals[k..k + z].to_vec());
            k += z;
        }
        Tableau::from_parts_unchecked(self.shape.clone(), cols)
    }
}

impl Iterator for TableauIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.backtrack(self.cells.len())
        } else {
            self.started = true;
            match self.fill_from(0) {
                None => true,
                Some(q) => self.backtrack(q),
            }
        };
        if ok {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All tableaux of shape `λ`, or only those with every entry of row `i` at
/// most `β_i`. The stream is empty when `β` is not upper.
pub fn enumerate_tableaux(shape: &Partition, bounds: Option<&RTuple>) -> Result<TableauIter> {
    let n = shape.n();
    let Some(beta) = bounds else {
        let caps = vec![n; shape.size()];
        return Ok(TableauIter::new(shape, caps));
    };
    shape.rset().check_same(beta.rset())?;
    if !beta.is_upper() {
        return Ok(TableauIter::empty(shape));
    }
    let caps = shape.column_lengths().into_iter().flat_map(|z| beta.entries()[..z].to_vec()).collect();
    Ok(TableauIter::new(shape, caps))
}

/// All tableaux of shape `λ` in enumeration order.
pub fn all_tableaux(shape: &Partition) -> Vec<Tableau> {
    enumerate_tableaux(shape, None).expect("no bounds").collect()
}

/// The principal ideal `[t] = {u : u <= t}`.
pub fn principal_ideal(t: &Tableau) -> TableauIter {
    TableauIter::new(t.shape(), t.values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn t(s: &str) -> RTuple {
        RTuple::parse(s).unwrap()
    }

    #[test]
    fn two_row_column() {
        let l = shape("1,1,0");
        let all: Vec<String> = enumerate_tableaux(&l, Some(&t("3,3;3"))).unwrap().map(|x| x.to_json()).collect();
        assert_eq!(all.len(), 3);
        assert!(all[0].contains("[[1,2]]") && all[1].contains("[[1,3]]") && all[2].contains("[[2,3]]"));
        assert_eq!(enumerate_tableaux(&l, Some(&t("2,3;3"))).unwrap().count(), 3);
        assert_eq!(enumerate_tableaux(&l, Some(&t("1,1;3"))).unwrap().count(), 0);
        assert_eq!(enumerate_tableaux(&l, Some(&t("1,2;3"))).unwrap().count(), 1);
        assert!(enumerate_tableaux(&l, Some(&t("3,3,3"))).is_err());
    }

    #[test]
    fn counts_match_hook_content() {
        for n in 1..=4 {
            for l in Partition::in_box(n, n, 3) {
                assert_eq!(all_tableaux(&l).len() as u128, l.count_tableaux(), "{l}");
            }
        }
    }

    #[test]
    fn order_is_lexicographic_and_valid() {
        let l = shape("2,2,1,0");
        let all = all_tableaux(&l);
        for w in all.windows(2) {
            assert!(w[0].values().lt(w[1].values()));
        }
        for x in &all {
            Tableau::new(x.shape().clone(), x.columns().to_vec()).unwrap();
        }
    }

    #[test]
    fn empty_and_inert_shapes() {
        assert_eq!(all_tableaux(&shape("0,0,0")).len(), 1);
        assert_eq!(all_tableaux(&shape("2,2,2")).len(), 1);
        assert_eq!(enumerate_tableaux(&shape("0,0"), Some(&t("2,2"))).unwrap().count(), 1);
        assert_eq!(enumerate_tableaux(&shape("0,0"), Some(&t("1,1"))).unwrap().count(), 0);
    }

    #[test]
    fn ideals_match_filter() {
        let l = shape("2,1,1,0");
        let all = all_tableaux(&l);
        for top in all.iter().step_by(7) {
            let ideal: Vec<Tableau> = principal_ideal(top).collect();
            let filtered: Vec<Tableau> = all.iter().filter(|u| u.leq(top)).cloned().collect();
            assert_eq!(ideal, filtered);
        }
    }

    #[test]
    fn bounded_matches_filter() {
        let l = shape("2,1,1,0");
        let all = all_tableaux(&l);
        for beta in [t("2;3,3;4"), t("4;2,4;4"), t("1;4,4;4")] {
            let got: Vec<Tableau> = enumerate_tableaux(&l, Some(&beta)).unwrap().collect();
            let want: Vec<Tableau> = all.iter().filter(|u| u.row_end_list().leq(&beta)).cloned().collect();
            assert_eq!(got, want, "{beta}");
        }
    }
}
