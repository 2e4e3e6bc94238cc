use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::maps::{chain_of, is_r312_avoiding, is_rightmost_clump_deleting, Chain, RPermutation};
use crate::rtuples::{fill, CriticalList, CriticalPair, FillKind, RSet, RTuple};

/// The object families that [`generate`] can list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    RPermutations,
    R312Avoiding,
    UI,
    UG,
    UGC,
    UF,
    UFlr,
    UCeil,
    Shells,
    Canopies,
    CriticalLists,
    FlagCriticalLists,
    Chains,
    RightmostClumpDeletingChains,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::RPermutations,
        Family::R312Avoiding,
        Family::UI,
        Family::UG,
        Family::UGC,
        Family::UF,
        Family::UFlr,
        Family::UCeil,
        Family::Shells,
        Family::Canopies,
        Family::CriticalLists,
        Family::FlagCriticalLists,
        Family::Chains,
        Family::RightmostClumpDeletingChains,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::RPermutations => "r_permutations",
            Family::R312Avoiding => "r312_avoiding",
            Family::UI => "UI",
            Family::UG => "UG",
            Family::UGC => "UGC",
            Family::UF => "UF",
            Family::UFlr => "UFlr",
            Family::UCeil => "UCeil",
            Family::Shells => "shells",
            Family::Canopies => "canopies",
            Family::CriticalLists => "critical_lists",
            Family::FlagCriticalLists => "flag_critical_lists",
            Family::Chains => "chains",
            Family::RightmostClumpDeletingChains => "rightmost_clump_deleting_chains",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown(format!("family {s:?}")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One generated object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Object {
    Tuple(RTuple),
    Permutation(RPermutation),
    CriticalList(CriticalList),
    Chain(Chain),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Tuple(t) => t.fmt(f),
            Object::Permutation(p) => p.fmt(f),
            Object::CriticalList(c) => c.fmt(f),
            Object::Chain(c) => c.fmt(f),
        }
    }
}

/// Every object of a family, each once, in a fixed order.
pub fn generate(kind: Family, rset: &RSet) -> Vec<Object> {
    let tuples = |v: Vec<RTuple>| v.into_iter().map(Object::Tuple).collect();
    let perms = |v: Vec<RPermutation>| v.into_iter().map(Object::Permutation).collect();
    let lists = |v: Vec<CriticalList>| v.into_iter().map(Object::CriticalList).collect();
    let chains = |v: Vec<Chain>| v.into_iter().map(Object::Chain).collect();
    match kind {
        Family::RPermutations => perms(r_permutations(rset)),
        Family::R312Avoiding => perms(r312_avoiding(rset)),
        Family::UI => tuples(ui_tuples(rset)),
        Family::UG => tuples(filled(rset, FillKind::Gapless)),
        Family::UGC => tuples(upper_tuples(rset).into_iter().filter(RTuple::is_gapless_core).collect()),
        Family::UF => tuples(upper_flags(rset)),
        Family::UFlr => tuples(filled(rset, FillKind::Floor)),
        Family::UCeil => tuples(filled(rset, FillKind::Ceiling)),
        Family::Shells => tuples(filled(rset, FillKind::Shell)),
        Family::Canopies => tuples(filled(rset, FillKind::Canopy)),
        Family::CriticalLists => lists(critical_lists(rset)),
        Family::FlagCriticalLists => lists(flag_critical_lists(rset)),
        Family::Chains => chains(r_permutations(rset).iter().map(chain_of).collect()),
        Family::RightmostClumpDeletingChains => chains(
            r_permutations(rset).iter().map(chain_of).filter(is_rightmost_clump_deleting).collect(),
        ),
    }
}

/// Depth-first listing of tuples whose entry at position `i` ranges over
/// `lo(prefix, i)..=n`, in lexicographic order.
fn backtrack(rset: &RSet, lo: impl Fn(&[usize], usize) -> usize) -> Vec<RTuple> {
    fn go(rset: &RSet, lo: &dyn Fn(&[usize], usize) -> usize, cur: &mut Vec<usize>, out: &mut Vec<RTuple>) {
        let n = rset.n();
        let i = cur.len();
        if i == n {
            out.push(RTuple::new(rset.clone(), cur.clone()).expect("entries in range"));
            return;
        }
        for v in lo(cur, i)..=n {
            cur.push(v);
            go(rset, lo, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rset, &lo, &mut Vec::with_capacity(rset.n()), &mut out);
    out
}

/// All upper tuples: `υ_i >= i`.
pub fn upper_tuples(rset: &RSet) -> Vec<RTuple> {
    backtrack(rset, |_, i| i + 1)
}

/// R-increasing upper tuples.
pub fn ui_tuples(rset: &RSet) -> Vec<RTuple> {
    backtrack(rset, |cur, i| {
        let same_carrel = i > 0 && !rset.contains(i);
        if same_carrel {
            (i + 1).max(cur[i - 1] + 1)
        } else {
            i + 1
        }
    })
}

/// Weakly increasing upper tuples.
pub fn upper_flags(rset: &RSet) -> Vec<RTuple> {
    backtrack(rset, |cur, i| (i + 1).max(cur.last().copied().unwrap_or(1)))
}

/// R-permutations in lexicographic order.
pub fn r_permutations(rset: &RSet) -> Vec<RPermutation> {
    fn go(rset: &RSet, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<RPermutation>) {
        let n = rset.n();
        let i = cur.len();
        if i == n {
            out.push(RPermutation::new(rset.clone(), cur.clone()).expect("valid by construction"));
            return;
        }
        let start = if i > 0 && !rset.contains(i) { cur[i - 1] + 1 } else { 1 };
        for v in start..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(rset, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(rset, &mut vec![false; rset.n() + 1], &mut Vec::new(), &mut out);
    out
}

pub fn r312_avoiding(rset: &RSet) -> Vec<RPermutation> {
    r_permutations(rset).into_iter().filter(is_r312_avoiding).collect()
}

/// Every valid critical list, carrel sets chosen independently.
pub fn critical_lists(rset: &RSet) -> Vec<CriticalList> {
    let n = rset.n();
    fn carrel_sets(lo: usize, n: usize, cur: &mut Vec<CriticalPair>, out: &mut Vec<Vec<CriticalPair>>) {
        out.push(cur.clone());
        let last = *cur.last().expect("right end placed first");
        for x in (lo..last.index).rev() {
            // y_last - y > last - x, with y >= x + 1
            let top = (last.entry + x).checked_sub(last.index + 1);
            let Some(top) = top else { continue };
            for y in x + 1..=top.min(n) {
                cur.push(CriticalPair { index: x, entry: y });
                carrel_sets(lo, n, cur, out);
                cur.pop();
            }
        }
    }
    let per_carrel: Vec<Vec<Vec<CriticalPair>>> = rset
        .carrels()
        .map(|c| {
            let mut out = Vec::new();
            for y in c.end..=n {
                carrel_sets(c.start, n, &mut vec![CriticalPair { index: c.end - 1, entry: y }], &mut out);
            }
            out
        })
        .collect();
    let mut lists = vec![Vec::new()];
    for options in &per_carrel {
        lists = lists
            .into_iter()
            .flat_map(|prefix: Vec<Vec<CriticalPair>>| {
                options.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    lists.into_iter().map(|c| CriticalList::new(rset.clone(), c).expect("valid by construction")).collect()
}

pub fn flag_critical_lists(rset: &RSet) -> Vec<CriticalList> {
    critical_lists(rset).into_iter().filter(CriticalList::is_flag).collect()
}

/// Canonical tuples of one kind, built from the critical lists the kind allows.
pub fn filled(rset: &RSet, kind: FillKind) -> Vec<RTuple> {
    let lists = if kind.needs_flag() { flag_critical_lists(rset) } else { critical_lists(rset) };
    lists.iter().map(|c| fill(c, kind)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for n in 1..=5 {
            for r in RSet::all(n) {
                let m = r.multinomial() as usize;
                assert_eq!(r_permutations(&r).len(), m);
                assert_eq!(ui_tuples(&r).len(), m);
                assert_eq!(critical_lists(&r).len(), m, "{r}");
                assert_eq!(upper_tuples(&r).len(), (1..=n).product::<usize>());
            }
        }
        assert_eq!(r312_avoiding(&RSet::full(3)).len(), 5);
        assert_eq!(r_permutations(&RSet::empty(4)).len(), 1);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn filtered_generators_match_predicates() {
        let r = RSet::new(4, [1, 3]).unwrap();
        let upper = upper_tuples(&r);
        let pick = |f: fn(&RTuple) -> bool| -> Vec<RTuple> { upper.iter().filter(|t| f(t)).cloned().collect() };
        assert_eq!(ui_tuples(&r), pick(|t| t.is_r_increasing()));
        assert_eq!(upper_flags(&r), pick(|t| t.is_flag()));
    }
}
