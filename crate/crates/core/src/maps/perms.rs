use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::rtuples::{RSet, RTuple};

/// A permutation of `[n]` that increases within each carrel.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPermutation {
    tuple: RTuple,
}

impl RPermutation {
    pub fn new(rset: RSet, entries: Vec<usize>) -> Result<Self> {
        let tuple = RTuple::new(rset, entries).map_err(|e| Error::NotPermutation(e.to_string()))?;
        RPermutation::from_tuple(tuple)
    }

    pub fn from_tuple(tuple: RTuple) -> Result<Self> {
        let mut seen = vec![false; tuple.n() + 1];
        for (i, &v) in tuple.entries().iter().enumerate() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPermutation(format!("value {v} repeated at position {}", i + 1)));
            }
        }
        tuple.require_r_increasing()?;
        Ok(RPermutation { tuple })
    }

    /// A plain permutation, i.e. an R-permutation for `R = [n-1]`.
    pub fn classical(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotPermutation("empty permutation".into()));
        }
        RPermutation::new(RSet::full(entries.len()), entries)
    }

    pub fn identity(rset: RSet) -> Self {
        let n = rset.n();
        RPermutation { tuple: RTuple::new(rset, (1..=n).collect()).expect("identity") }
    }

    pub fn parse(s: &str) -> Result<Self> {
        RPermutation::from_tuple(RTuple::parse(s)?)
    }

    pub fn rset(&self) -> &RSet {
        self.tuple.rset()
    }

    pub fn n(&self) -> usize {
        self.tuple.n()
    }

    pub fn entries(&self) -> &[usize] {
        self.tuple.entries()
    }

    pub fn as_tuple(&self) -> &RTuple {
        &self.tuple
    }

    /// Entries at the first `k` positions, sorted.
    fn prefix_set(&self, k: usize) -> Vec<usize> {
        let mut b = self.entries()[..k].to_vec();
        b.sort_unstable();
        b
    }
}

impl fmt::Display for RPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tuple.fmt(f)
    }
}

/// `B_0 ⊂ B_1 ⊂ ... ⊂ B_{r+1}` with `|B_h| = q_h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    rset: RSet,
    sets: Vec<BTreeSet<usize>>,
}

impl Chain {
    pub fn new(rset: RSet, sets: Vec<BTreeSet<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidChain(m));
        if sets.len() != rset.r() + 2 {
            return bad(format!("expected {} sets, found {}", rset.r() + 2, sets.len()));
        }
        for (h, b) in sets.iter().enumerate() {
            if b.len() != rset.bound(h) {
                return bad(format!("B_{h} has {} elements, expected {}", b.len(), rset.bound(h)));
            }
            if b.iter().any(|&v| v == 0 || v > rset.n()) {
                return bad(format!("B_{h} has values outside 1..={}", rset.n()));
            }
            if h > 0 && !sets[h - 1].is_subset(b) {
                return bad(format!("B_{} is not contained in B_{h}", h - 1));
            }
        }
        Ok(Chain { rset, sets })
    }

    pub fn rset(&self) -> &RSet {
        &self.rset
    }

    /// `B_h` for `h` in `0..=r+1`.
    pub fn set(&self, h: usize) -> &BTreeSet<usize> {
        &self.sets[h]
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, b) in self.sets.iter().enumerate() {
            if h > 0 {
                f.write_str(" < ")?;
            }
            let items: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// For `i` in carrel `h`, the `(q_h - i + 1)`-th largest element of `B_h`:
/// each carrel holds the largest `p_h` elements of its prefix union, ascending.
pub fn rank_tuple(p: &RPermutation) -> RTuple {
    let rset = p.rset();
    let mut out = Vec::with_capacity(p.n());
    for range in rset.carrels() {
        let b = p.prefix_set(range.end);
        out.extend_from_slice(&b[b.len() - range.len()..]);
    }
    RTuple::new(rset.clone(), out).expect("rank tuple entries lie in [n]")
}

/// Inverse of [`rank_tuple`] on gapless tuples.
///
/// The staircase length at a divider is `g_{q_h} - g_{q_h+1} + 1` whenever
/// `g_{q_h} >= g_{q_h+1}`, and zero otherwise.
pub fn pi_of(g: &RTuple) -> Result<RPermutation> {
    g.require_gapless()?;
    let rset = g.rset();
    let e = g.entries();
    let mut pi = vec![0usize; g.n()];
    let mut used = vec![false; g.n() + 1];
    for h in 0..rset.num_carrels() {
        let range = rset.carrel(h);
        let q = range.start;
        let s = if h > 0 && e[q - 1] >= e[q] { e[q - 1] - e[q] + 1 } else { 0 };
        if s > 0 {
            let avail: Vec<usize> = (1..=e[q - 1]).rev().filter(|&v| !used[v]).collect();
            if avail.len() < s {
                return Err(Error::Internal(format!("no room for the staircase after position {q}")));
            }
            for i in q..q + s {
                pi[i] = avail[q + s - i - 1];
            }
        }
        pi[q + s..range.end].copy_from_slice(&e[q + s..range.end]);
        for &v in &pi[range] {
            used[v] = true;
        }
    }
    RPermutation::new(rset.clone(), pi).map_err(|err| Error::Internal(format!("inverse rank map failed: {err}")))
}

/// No `a, b, c` in strictly increasing carrels with `π_b < π_c < π_a`.
pub fn is_r312_avoiding(p: &RPermutation) -> bool {
    let e = p.entries();
    let rset = p.rset();
    let n = e.len();
    for b in 0..n {
        let hb = rset.carrel_of(b);
        if hb == 0 || hb == rset.r() {
            continue;
        }
        let before = rset.bound(hb);
        let after = rset.bound(hb + 1);
        for a in 0..before {
            if e[a] < e[b] {
                continue;
            }
            if (after..n).any(|c| e[b] < e[c] && e[c] < e[a]) {
                return false;
            }
        }
    }
    true
}

/// Whether some `a, b, c` in strictly increasing carrels have values in the
/// relative order of `pattern`, a permutation of `{1, 2, 3}`.
pub fn contains_r_pattern(p: &RPermutation, pattern: [usize; 3]) -> bool {
    let e = p.entries();
    let rset = p.rset();
    let n = e.len();
    let same_order = |x: usize, y: usize, px: usize, py: usize| (e[x] < e[y]) == (pattern[px] < pattern[py]);
    (0..n).any(|a| {
        (a..n).filter(|&b| rset.carrel_of(b) > rset.carrel_of(a) && same_order(a, b, 0, 1)).any(|b| {
            (b..n).any(|c| rset.carrel_of(c) > rset.carrel_of(b) && same_order(a, c, 0, 2) && same_order(b, c, 1, 2))
        })
    })
}

/// Avoidance via intervals: for each divider, every value strictly between
/// the minimum of the next cohort and the maximum of the prefix must already
/// appear by the end of the next carrel.
pub fn is_r312_avoiding_by_intervals(p: &RPermutation) -> bool {
    let e = p.entries();
    let rset = p.rset();
    (1..=rset.r()).all(|h| {
        let q = rset.bound(h);
        let next = rset.carrel(h);
        let lo = *e[next.clone()].iter().min().unwrap();
        let hi = *e[..q].iter().max().unwrap();
        let seen = &e[..next.end];
        (lo + 1..hi).all(|v| seen.contains(&v))
    })
}

pub fn chain_of(p: &RPermutation) -> Chain {
    let rset = p.rset();
    let sets = (0..=rset.r() + 1).map(|h| p.entries()[..rset.bound(h)].iter().copied().collect()).collect();
    Chain { rset: rset.clone(), sets }
}

pub fn perm_of_chain(b: &Chain) -> RPermutation {
    let entries = b.sets.windows(2).flat_map(|w| w[1].difference(&w[0]).copied().collect::<Vec<_>>()).collect();
    RPermutation::new(b.rset.clone(), entries).expect("chains give R-permutations")
}

/// For each divider, `[min(B_{h+1} \ B_h), max(B_h)]` lies inside `B_{h+1}`.
pub fn is_rightmost_clump_deleting(b: &Chain) -> bool {
    (1..=b.rset.r()).all(|h| {
        let (cur, next) = (&b.sets[h], &b.sets[h + 1]);
        let lo = *next.difference(cur).next().expect("strict nesting");
        let hi = *cur.iter().next_back().expect("nonempty");
        (lo..=hi).all(|v| next.contains(&v))
    })
}

/// Sorts each cohort of a permutation into increasing order.
pub fn r_projection(s: &RPermutation, rset: &RSet) -> Result<RPermutation> {
    if s.n() != rset.n() {
        return Err(Error::RSetMismatch { expected: rset.describe(), found: s.rset().describe() });
    }
    let mut e = s.entries().to_vec();
    for c in rset.carrels() {
        e[c].sort_unstable();
    }
    RPermutation::new(rset.clone(), e)
}

/// The minimum length 312-avoiding permutation projecting onto `p`: in each
/// later carrel, the new values below the prefix maximum come first in
/// decreasing order, followed by the rest in increasing order.
pub fn min_lift(p: &RPermutation) -> Result<RPermutation> {
    if !is_r312_avoiding(p) {
        return Err(Error::R312Containing(p.to_string()));
    }
    let rset = p.rset();
    let e = p.entries();
    let mut out = Vec::with_capacity(e.len());
    for (h, range) in rset.carrels().enumerate() {
        let cohort = &e[range.clone()];
        if h == 0 {
            out.extend_from_slice(cohort);
            continue;
        }
        let m = *e[..range.start].iter().max().unwrap();
        out.extend(cohort.iter().rev().filter(|&&v| v < m));
        out.extend(cohort.iter().filter(|&&v| v > m));
    }
    RPermutation::classical(out)
}

/// Number of inversions.
pub fn coxeter_length(s: &RPermutation) -> usize {
    let e = s.entries();
    (0..e.len()).map(|i| e[i + 1..].iter().filter(|&&v| v < e[i]).count()).sum()
}
