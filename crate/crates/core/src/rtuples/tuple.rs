use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::critical::critical_list;
use super::rset::RSet;
use crate::error::{Error, Result};

/// An n-tuple with entries in `[n]`, carrying the dividers of an [`RSet`].
///
/// Equality compares the dividers too.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RTuple {
    rset: RSet,
    entries: Vec<usize>,
}

/// Derived classification of an [`RTuple`]; see [`RTuple::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Upper,
    Flag,
    RIncreasing,
    Gapless,
    GaplessCore,
    Shell,
    Canopy,
    FloorFlag,
    CeilingFlag,
    RFlag,
}

impl Label {
    pub const ALL: [Label; 10] = [
        Label::Upper,
        Label::Flag,
        Label::RIncreasing,
        Label::Gapless,
        Label::GaplessCore,
        Label::Shell,
        Label::Canopy,
        Label::FloorFlag,
        Label::CeilingFlag,
        Label::RFlag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::Upper => "upper",
            Label::Flag => "flag",
            Label::RIncreasing => "r_increasing",
            Label::Gapless => "gapless",
            Label::GaplessCore => "gapless_core",
            Label::Shell => "shell",
            Label::Canopy => "canopy",
            Label::FloorFlag => "floor_flag",
            Label::CeilingFlag => "ceiling_flag",
            Label::RFlag => "r_flag",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl RTuple {
    pub fn new(rset: RSet, entries: Vec<usize>) -> Result<Self> {
        let n = rset.n();
        if entries.len() != n {
            return Err(Error::InvalidTuple(format!(
                "expected {n} entries, found {}",
                entries.len()
            )));
        }
        if let Some(i) = entries.iter().position(|&v| v == 0 || v > n) {
            return Err(Error::InvalidTuple(format!(
                "entry {} at position {} is outside 1..={n}",
                entries[i],
                i + 1
            )));
        }
        Ok(RTuple { rset, entries })
    }

    /// Parses the semicolon text form, e.g. `2,4,6;1,5,7,8,9;3`. The dividers
    /// come from the semicolons; surrounding parentheses and whitespace are ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').unwrap_or(body);
        let body = body.strip_suffix(')').unwrap_or(body);
        let mut sizes = Vec::new();
        let mut entries = Vec::new();
        for block in body.split(';') {
            let before = entries.len();
            for tok in block.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let v = tok.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
                entries.push(v);
            }
            if entries.len() == before {
                return Err(Error::Parse(format!("empty carrel in {s:?}")));
            }
            sizes.push(entries.len() - before);
        }
        RTuple::new(RSet::from_block_sizes(&sizes)?, entries)
    }

    pub fn rset(&self) -> &RSet {
        &self.rset
    }

    pub fn n(&self) -> usize {
        self.rset.n()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// Entry at 0-based position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i]
    }

    /// Same entries under different dividers.
    pub fn with_rset(&self, rset: RSet) -> Result<Self> {
        RTuple::new(rset, self.entries.clone())
    }

    /// Entrywise comparison; tuples with different R-sets are incomparable.
    pub fn leq(&self, other: &RTuple) -> bool {
        self.rset == other.rset && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn is_upper(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v > i)
    }

    pub(crate) fn require_upper(&self) -> Result<()> {
        match self.entries.iter().enumerate().find(|&(i, &v)| v <= i) {
            Some((i, &v)) => Err(Error::NotUpper { position: i + 1, value: v }),
            None => Ok(()),
        }
    }

    pub fn is_flag(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_r_increasing(&self) -> bool {
        self.rset.carrels().all(|c| self.entries[c].windows(2).all(|w| w[0] < w[1]))
    }

    pub(crate) fn require_r_increasing(&self) -> Result<()> {
        for c in self.rset.carrels() {
            for i in c.start + 1..c.end {
                if self.entries[i - 1] >= self.entries[i] {
                    return Err(Error::NotRIncreasing(i + 1));
                }
            }
        }
        Ok(())
    }

    /// Position (1-based) of the first divider where the gapless condition fails.
    fn gapless_violation(&self) -> Option<usize> {
        for h in 1..=self.rset.r() {
            let q = self.rset.bound(h);
            let (last, first) = (self.entries[q - 1], self.entries[q]);
            if last > first {
                let s = last - first + 1;
                let next = self.rset.carrel(h);
                if s > next.len() || (0..s).any(|k| self.entries[q + k] != last + 1 - s + k) {
                    return Some(q);
                }
            }
        }
        None
    }

    pub fn is_gapless(&self) -> bool {
        self.is_upper() && self.is_r_increasing() && self.gapless_violation().is_none()
    }

    pub(crate) fn require_gapless(&self) -> Result<()> {
        self.require_upper()?;
        self.require_r_increasing()?;
        match self.gapless_violation() {
            Some(q) => Err(Error::NotGapless(q)),
            None => Ok(()),
        }
    }

    /// Upper, and the R-core is gapless.
    pub fn is_gapless_core(&self) -> bool {
        self.is_upper() && crate::maps::core(self).map(|c| c.is_gapless()).unwrap_or(false)
    }

    /// Upper, and every non-critical entry is `n`.
    pub fn is_shell(&self) -> bool {
        if !self.is_upper() {
            return false;
        }
        let crit = critical_list(self).expect("upper");
        let n = self.n();
        (0..n).all(|i| crit.is_critical(i) || self.entries[i] == n)
    }

    pub fn is_canopy(&self) -> bool {
        self.is_shell() && critical_list(self).expect("upper").is_flag()
    }

    /// Upper flag whose nontrivial plateaus all start at some `q_h`.
    pub fn is_floor_flag(&self) -> bool {
        if !(self.is_upper() && self.is_flag()) {
            return false;
        }
        let e = &self.entries;
        (0..e.len()).all(|i| {
            let starts_plateau = (i == 0 || e[i - 1] != e[i]) && i + 1 < e.len() && e[i + 1] == e[i];
            !starts_plateau || self.rset.contains(i + 1)
        })
    }

    /// Upper flag in which every plateau ends at a critical index.
    pub fn is_ceiling_flag(&self) -> bool {
        if !(self.is_upper() && self.is_flag()) {
            return false;
        }
        let crit = critical_list(self).expect("upper");
        let e = &self.entries;
        (0..e.len()).all(|i| crit.is_critical(i) || e[i] == e[i + 1])
    }

    /// R-increasing upper tuple whose carrels dominate their predecessors when
    /// both are read right-aligned.
    pub fn is_r_flag(&self) -> bool {
        if !(self.is_upper() && self.is_r_increasing()) {
            return false;
        }
        (1..=self.rset.r()).all(|h| {
            let (prev, next) = (self.rset.carrel(h - 1), self.rset.carrel(h));
            (1..=prev.len().min(next.len()))
                .all(|u| self.entries[next.end - u] >= self.entries[prev.end - u])
        })
    }

    pub fn has(&self, label: Label) -> bool {
        match label {
            Label::Upper => self.is_upper(),
            Label::Flag => self.is_flag(),
            Label::RIncreasing => self.is_r_increasing(),
            Label::Gapless => self.is_gapless(),
            Label::GaplessCore => self.is_gapless_core(),
            Label::Shell => self.is_shell(),
            Label::Canopy => self.is_canopy(),
            Label::FloorFlag => self.is_floor_flag(),
            Label::CeilingFlag => self.is_ceiling_flag(),
            Label::RFlag => self.is_r_flag(),
        }
    }

    /// Every label the tuple satisfies.
    pub fn classify(&self) -> BTreeSet<Label> {
        Label::ALL.into_iter().filter(|&l| self.has(l)).collect()
    }

    /// Entrywise maximum; dividers must agree.
    pub fn join(&self, other: &RTuple) -> Result<RTuple> {
        self.rset.check_same(&other.rset)?;
        let e = self.entries.iter().zip(&other.entries).map(|(a, b)| *a.max(b)).collect();
        Ok(RTuple { rset: self.rset.clone(), entries: e })
    }

    pub fn meet(&self, other: &RTuple) -> Result<RTuple> {
        self.rset.check_same(&other.rset)?;
        let e = self.entries.iter().zip(&other.entries).map(|(a, b)| *a.min(b)).collect();
        Ok(RTuple { rset: self.rset.clone(), entries: e })
    }
}

impl FromStr for RTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RTuple::parse(s)
    }
}

impl fmt::Display for RTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, c) in self.rset.carrels().enumerate() {
            if h > 0 {
                f.write_str(";")?;
            }
            for (k, v) in self.entries[c].iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
