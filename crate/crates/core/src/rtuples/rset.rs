use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset `R = {q_1 < ... < q_r}` of `[n-1]` splitting positions `1..=n`
/// into carrels `(q_{h-1}, q_h]`, with `q_0 = 0` and `q_{r+1} = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RSet {
    n: usize,
    q: Vec<usize>,
}

impl RSet {
    pub fn new(n: usize, q: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRSet("n must be at least 1".into()));
        }
        let q: Vec<usize> = q.into_iter().collect();
        for (k, &x) in q.iter().enumerate() {
            if x == 0 || x >= n {
                return Err(Error::InvalidRSet(format!("element {x} is outside 1..={}", n - 1)));
            }
            if k > 0 && q[k - 1] >= x {
                return Err(Error::InvalidRSet(format!(
                    "elements must be strictly increasing, got {} then {x}",
                    q[k - 1]
                )));
            }
        }
        Ok(RSet { n, q })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "n must be at least 1");
        RSet { n, q: Vec::new() }
    }

    /// `R = [n-1]`: every carrel is a singleton.
    pub fn full(n: usize) -> Self {
        assert!(n > 0, "n must be at least 1");
        RSet { n, q: (1..n).collect() }
    }

    /// Builds the R-set whose carrels have the given sizes.
    pub fn from_block_sizes(sizes: &[usize]) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidRSet("carrels must be nonempty".into()));
        }
        let n: usize = sizes.iter().sum();
        let mut acc = 0;
        let q = sizes[..sizes.len().saturating_sub(1)].iter().map(|p| {
            acc += p;
            acc
        });
        RSet::new(n, q.collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.q.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.q
    }

    pub fn contains(&self, q: usize) -> bool {
        self.q.binary_search(&q).is_ok()
    }

    /// `q_h` for `h` in `0..=r+1`.
    pub fn bound(&self, h: usize) -> usize {
        if h == 0 {
            0
        } else if h <= self.q.len() {
            self.q[h - 1]
        } else {
            assert_eq!(h, self.q.len() + 1, "carrel bound out of range");
            self.n
        }
    }

    pub fn num_carrels(&self) -> usize {
        self.q.len() + 1
    }

    /// 0-based index range of carrel `h`, for `h` in `0..=r`.
    pub fn carrel(&self, h: usize) -> Range<usize> {
        self.bound(h)..self.bound(h + 1)
    }

    pub fn carrels(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        (0..self.num_carrels()).map(|h| self.carrel(h))
    }

    /// Carrel number (0-based) holding 0-based position `i`.
    pub fn carrel_of(&self, i: usize) -> usize {
        self.q.partition_point(|&q| q <= i)
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.carrels().map(|c| c.len()).collect()
    }

    /// `n! / (p_1! ... p_{r+1}!)`, the number of R-permutations.
    pub fn multinomial(&self) -> u128 {
        let mut total = 1u128;
        let mut seen = 0u128;
        for p in self.block_sizes() {
            for k in 1..=p as u128 {
                seen += 1;
                total = total * seen / k;
            }
        }
        total
    }

    /// All `2^(n-1)` R-sets for a given `n`, in order of the bitmask of `R`.
    pub fn all(n: usize) -> impl Iterator<Item = RSet> {
        assert!(n > 0, "n must be at least 1");
        (0u64..1 << (n - 1)).map(move |mask| RSet {
            n,
            q: (1..n).filter(|q| mask >> (q - 1) & 1 == 1).collect(),
        })
    }

    pub(crate) fn check_same(&self, other: &RSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RSetMismatch { expected: self.describe(), found: other.describe() })
        }
    }

    pub(crate) fn describe(&self) -> String {
        format!("n={} R={}", self.n, self)
    }

    /// Parses a comma separated list such as `3,8`; empty text gives `R = {}`.
    pub fn parse_list(n: usize, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let q = if s.trim().is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad R element {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        RSet::new(n, q)
    }
}

impl fmt::Display for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, q) in self.q.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrels_and_bounds() {
        let r = RSet::new(9, [3, 8]).unwrap();
        assert_eq!(r.block_sizes(), vec![3, 5, 1]);
        assert_eq!(r.carrel(1), 3..8);
        assert_eq!(r.carrel_of(2), 0);
        assert_eq!(r.carrel_of(3), 1);
        assert_eq!(r.carrel_of(8), 2);
        assert_eq!(r.bound(3), 9);
        assert_eq!(r.to_string(), "{3,8}");
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(RSet::new(4, [4]).is_err());
        assert!(RSet::new(4, [0]).is_err());
        assert!(RSet::new(4, [2, 2]).is_err());
        assert!(RSet::new(0, []).is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(RSet::new(9, [3, 8]).unwrap().multinomial(), 504);
        assert_eq!(RSet::full(5).multinomial(), 120);
        assert_eq!(RSet::empty(5).multinomial(), 1);
        assert_eq!(RSet::all(4).count(), 8);
        assert_eq!(RSet::from_block_sizes(&[3, 5, 1]).unwrap(), RSet::new(9, [3, 8]).unwrap());
    }
}
