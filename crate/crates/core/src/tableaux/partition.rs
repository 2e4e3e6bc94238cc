use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rtuples::RSet;

/// A partition with exactly `n` parts, some possibly zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("need at least one part".into()));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must weakly decrease, but part {} is {} and part {} is {}",
                i + 1,
                parts[i],
                i + 2,
                parts[i + 1]
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_columns(&self) -> usize {
        self.parts[0]
    }

    /// `ζ_1 >= ... >= ζ_{λ_1}`.
    pub fn column_lengths(&self) -> Vec<usize> {
        (1..=self.num_columns()).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect()
    }

    /// `R_λ`: the distinct column lengths below `n`.
    pub fn rset(&self) -> RSet {
        let n = self.n();
        let mut q: Vec<usize> = self.column_lengths().into_iter().filter(|&z| z < n).collect();
        q.sort_unstable();
        q.dedup();
        RSet::new(n, q).expect("column lengths lie in 1..n")
    }

    /// Smallest partition with `R_λ = rset`: one column of each length in `R`.
    pub fn minimal_for(rset: &RSet) -> Partition {
        let parts = (1..=rset.n()).map(|i| rset.elements().iter().filter(|&&q| q >= i).count()).collect();
        Partition { parts }
    }

    /// All partitions with `n` parts, at most `rows` of them nonzero and each
    /// at most `cols`, in reverse lexicographic order.
    pub fn in_box(n: usize, rows: usize, cols: usize) -> Vec<Partition> {
        fn go(n: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let top = if cur.len() < rows { max } else { 0 };
            for v in (0..=top).rev() {
                cur.push(v);
                go(n, rows, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, rows, cols, &mut Vec::new(), &mut out);
        out
    }

    /// Number of semistandard tableaux of this shape with entries in `[n]`,
    /// by the hook-content formula.
    pub fn count_tableaux(&self) -> u128 {
        let n = self.n() as i64;
        let cols = self.column_lengths();
        let (mut num, mut den) = (1u128, 1u128);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                num *= (n + j as i64 - i as i64) as u128;
                den *= (row - j + cols[j] - i - 1) as u128;
            }
        }
        num / den
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        f.write_str(&items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(Partition::parse("1,1,0").unwrap().rset(), RSet::new(3, [2]).unwrap());
        let l = Partition::parse("2,1,1,0").unwrap();
        assert_eq!(l.column_lengths(), vec![3, 1]);
        assert_eq!(l.rset(), RSet::new(4, [1, 3]).unwrap());
        assert_eq!(Partition::parse("3,2,1").unwrap().rset(), RSet::full(3));
        assert_eq!(Partition::parse("2,2,2").unwrap().rset(), RSet::empty(3));
        assert_eq!(Partition::parse("0,0").unwrap().column_lengths(), Vec::<usize>::new());
        assert!(Partition::parse("1,2").is_err());
    }

    #[test]
    fn minimal_shapes() {
        let r = RSet::new(4, [1, 3]).unwrap();
        assert_eq!(Partition::minimal_for(&r).parts(), &[2, 1, 1, 0]);
        for r in RSet::all(5) {
            assert_eq!(Partition::minimal_for(&r).rset(), r);
        }
    }

    #[test]
    fn boxes_and_counts() {
        assert_eq!(Partition::in_box(4, 4, 4).len(), 70);
        assert_eq!(Partition::in_box(3, 3, 3).len(), 20);
        assert_eq!(Partition::in_box(4, 3, 3).len(), 20);
        assert_eq!(Partition::parse("1,1,0").unwrap().count_tableaux(), 3);
        assert_eq!(Partition::parse("2,1,0").unwrap().count_tableaux(), 8);
        assert_eq!(Partition::parse("4,3,2,1,0").unwrap().count_tableaux(), 1024);
    }
}
