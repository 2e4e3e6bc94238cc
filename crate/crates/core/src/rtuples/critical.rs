use std::fmt;
use std::str::FromStr;

use super::rset::RSet;
use super::tuple::RTuple;
use crate::error::{Error, Result};

/// A critical pair: 0-based `index` and its `entry` (a value in `[n]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CriticalPair {
    pub index: usize,
    pub entry: usize,
}

/// One set of critical pairs per carrel, each stored index-descending so the
/// carrel's right end comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CriticalList {
    rset: RSet,
    carrels: Vec<Vec<CriticalPair>>,
}

/// The canonical tuples determined by a critical list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FillKind {
    Increasing,
    Shell,
    Gapless,
    Canopy,
    Floor,
    Ceiling,
}

impl FillKind {
    pub const ALL: [FillKind; 6] = [
        FillKind::Increasing,
        FillKind::Shell,
        FillKind::Gapless,
        FillKind::Canopy,
        FillKind::Floor,
        FillKind::Ceiling,
    ];

    pub fn needs_flag(self) -> bool {
        !matches!(self, FillKind::Increasing | FillKind::Shell)
    }
}

impl FromStr for FillKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "increasing" => FillKind::Increasing,
            "shell" => FillKind::Shell,
            "gapless" => FillKind::Gapless,
            "canopy" => FillKind::Canopy,
            "floor" => FillKind::Floor,
            "ceiling" => FillKind::Ceiling,
            _ => return Err(Error::Unknown(format!("fill kind {s:?}"))),
        })
    }
}

impl CriticalList {
    /// Validates and normalizes (index-descending) the given pairs.
    pub fn new(rset: RSet, carrels: Vec<Vec<CriticalPair>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidCriticalList(m));
        if carrels.len() != rset.num_carrels() {
            return bad(format!("expected {} carrels, found {}", rset.num_carrels(), carrels.len()));
        }
        let n = rset.n();
        let mut out = Vec::with_capacity(carrels.len());
        for (h, mut pairs) in carrels.into_iter().enumerate() {
            let range = rset.carrel(h);
            pairs.sort_by_key(|p| std::cmp::Reverse(p.index));
            if pairs.first().map(|p| p.index) != Some(range.end - 1) {
                return bad(format!("carrel {} must contain its right end {}", h + 1, range.end));
            }
            for (u, p) in pairs.iter().enumerate() {
                if !range.contains(&p.index) {
                    return bad(format!("index {} lies outside carrel {}", p.index + 1, h + 1));
                }
                if p.entry <= p.index || p.entry > n {
                    return bad(format!("entry {} at index {} is not in {}..={n}", p.entry, p.index + 1, p.index + 1));
                }
                if u > 0 {
                    let q = pairs[u - 1];
                    if q.index == p.index {
                        return bad(format!("index {} repeated", p.index + 1));
                    }
                    if (q.entry as isize - p.entry as isize) <= (q.index - p.index) as isize {
                        return bad(format!(
                            "pairs {}:{} and {}:{} violate the critical gap",
                            p.index + 1,
                            p.entry,
                            q.index + 1,
                            q.entry
                        ));
                    }
                }
            }
            out.push(pairs);
        }
        Ok(CriticalList { rset, carrels: out })
    }

    pub fn rset(&self) -> &RSet {
        &self.rset
    }

    /// Pairs of carrel `h` (0-based), index-descending.
    pub fn carrel(&self, h: usize) -> &[CriticalPair] {
        &self.carrels[h]
    }

    pub fn carrels(&self) -> &[Vec<CriticalPair>] {
        &self.carrels
    }

    pub fn pairs(&self) -> impl Iterator<Item = CriticalPair> + '_ {
        self.carrels.iter().flat_map(|c| c.iter().rev().copied())
    }

    pub fn is_critical(&self, i: usize) -> bool {
        let h = self.rset.carrel_of(i);
        self.carrels[h].iter().any(|p| p.index == i)
    }

    /// Entries at the right end of each carrel never exceed the leftmost
    /// critical entry of the next carrel.
    pub fn is_flag(&self) -> bool {
        self.flag_violation().is_none()
    }

    fn flag_violation(&self) -> Option<usize> {
        (1..self.carrels.len()).find_map(|h| {
            let right = self.carrels[h - 1][0];
            let left = *self.carrels[h].last().expect("nonempty carrel");
            (right.entry > left.entry).then_some(right.index + 1)
        })
    }

    /// Parses `x:y` pairs separated by commas, carrels separated by `;`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').unwrap_or(body);
        let body = body.strip_suffix(')').unwrap_or(body);
        let mut carrels = Vec::new();
        for block in body.split(';') {
            let mut pairs = Vec::new();
            for tok in block.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let tok = tok.trim_start_matches('{').trim_end_matches('}');
                let (x, y) = tok.split_once(':').ok_or_else(|| Error::Parse(format!("bad pair {tok:?}")))?;
                let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad pair {tok:?}")));
                let x = num(x)?;
                if x == 0 {
                    return Err(Error::Parse(format!("index 0 in pair {tok:?}")));
                }
                pairs.push(CriticalPair { index: x - 1, entry: num(y)? });
            }
            if pairs.is_empty() {
                return Err(Error::Parse(format!("empty carrel in {s:?}")));
            }
            carrels.push(pairs);
        }
        let ends: Vec<usize> = carrels.iter().map(|c| c.iter().map(|p| p.index + 1).max().unwrap()).collect();
        let n = *ends.last().unwrap();
        let rset = RSet::new(n, ends[..ends.len() - 1].to_vec())?;
        CriticalList::new(rset, carrels)
    }
}

impl fmt::Display for CriticalList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, c) in self.carrels.iter().enumerate() {
            if h > 0 {
                f.write_str(";")?;
            }
            for (k, p) in c.iter().rev().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}:{}", p.index + 1, p.entry)?;
            }
        }
        Ok(())
    }
}

/// The critical pairs of an upper tuple, found right to left in each carrel.
pub fn critical_list(t: &RTuple) -> Result<CriticalList> {
    t.require_upper()?;
    let e = t.entries();
    let rset = t.rset().clone();
    let carrels = rset
        .carrels()
        .map(|c| {
            let mut pairs = vec![CriticalPair { index: c.end - 1, entry: e[c.end - 1] }];
            let mut last = c.end - 1;
            for x in (c.start..c.end - 1).rev() {
                if e[last] as isize - e[x] as isize > (last - x) as isize {
                    pairs.push(CriticalPair { index: x, entry: e[x] });
                    last = x;
                }
            }
            pairs
        })
        .collect();
    Ok(CriticalList { rset, carrels })
}

/// Builds the canonical tuple of the given kind whose critical list is `c`.
pub fn tuple_from_critical(c: &CriticalList, kind: FillKind) -> Result<RTuple> {
    if kind.needs_flag() {
        if let Some(q) = c.flag_violation() {
            return Err(Error::NotFlagCritical(q));
        }
    }
    Ok(fill(c, kind))
}

pub(crate) fn fill(c: &CriticalList, kind: FillKind) -> RTuple {
    let rset = c.rset();
    let n = rset.n();
    let mut e = vec![0usize; n];
    for (h, range) in rset.carrels().enumerate() {
        let mut start = range.start;
        for (k, p) in c.carrel(h).iter().rev().enumerate() {
            let (x, y) = (p.index, p.entry);
            let leading = k == 0 && h > 0;
            for i in start..x {
                e[i] = match kind {
                    FillKind::Increasing | FillKind::Gapless => y - (x - i),
                    FillKind::Shell | FillKind::Canopy => n,
                    FillKind::Floor if leading => e[range.start - 1].max(y - (x - i)),
                    FillKind::Floor => y - (x - i),
                    FillKind::Ceiling => y,
                };
            }
            e[x] = y;
            start = x + 1;
        }
    }
    RTuple::new(rset.clone(), e).expect("fill stays within [n]")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RTuple {
        RTuple::parse(s).unwrap()
    }

    #[test]
    fn known_lists() {
        let c = critical_list(&t("2,4,6;4,5,6,7,9;9")).unwrap();
        assert_eq!(c.to_string(), "1:2,2:4,3:6;7:7,8:9;9:9");
        assert!(c.is_flag());
        let c = critical_list(&t("7,9,6;5,5,9,8,9;9")).unwrap();
        assert_eq!(c.to_string(), "3:6;5:5,8:9;9:9");
        assert_eq!(c.carrel(1)[0].index, 7);
    }

    #[test]
    fn staircase_has_only_right_ends() {
        let c = critical_list(&t("1,2,3,4")).unwrap();
        assert_eq!(c.to_string(), "4:4");
        let c = critical_list(&t("1;2;3;4")).unwrap();
        assert_eq!(c.to_string(), "1:1;2:2;3:3;4:4");
    }

    #[test]
    fn rejects_non_upper() {
        assert_eq!(critical_list(&t("1,1;3")), Err(Error::NotUpper { position: 2, value: 1 }));
    }

    #[test]
    fn fills() {
        let c = critical_list(&t("3,4,6;4,5,6,8,9;9")).unwrap();
        assert_eq!(tuple_from_critical(&c, FillKind::Floor).unwrap(), t("3,4,6;6,6,6,8,9;9"));
        let c = critical_list(&t("3,4,5;4,5,6,8,9;9")).unwrap();
        assert_eq!(tuple_from_critical(&c, FillKind::Ceiling).unwrap(), t("5,5,5;6,6,6,9,9;9"));
        let c = CriticalList::parse("3:6;5:5,8:9;9:9").unwrap();
        assert_eq!(tuple_from_critical(&c, FillKind::Increasing).unwrap(), t("4,5,6;4,5,7,8,9;9"));
        assert_eq!(tuple_from_critical(&c, FillKind::Shell).unwrap(), t("9,9,6;9,5,9,9,9;9"));
        assert_eq!(tuple_from_critical(&c, FillKind::Gapless), Err(Error::NotFlagCritical(3)));
    }

    #[test]
    fn single_carrel_is_flag() {
        assert!(CriticalList::parse("4:4").unwrap().is_flag());
    }

    #[test]
    fn parse_validates() {
        assert!(CriticalList::parse("1:1,2:2").is_err());
        assert!(CriticalList::parse("1:4;3:3").is_err());
        assert!(CriticalList::parse("2:1;3:3").is_err());
        assert_eq!(CriticalList::parse("2:2;3:3").unwrap().rset(), &RSet::new(3, [2]).unwrap());
    }
}
