use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::maps::{
    chain_of, contains_r_pattern, core, floor_of, is_r312_avoiding, is_r312_avoiding_by_intervals,
    is_rightmost_clump_deleting, pi_of, rank_tuple,
};
use crate::polynomials::{gv_determinant, gv_matrix, is_nonpermutable, key_poly_dd, Composition, SparsePoly};
use crate::rtuples::{FillKind, RSet, RTuple};
use crate::tableaux::{is_gapless_key, row_bound_max, row_end_max, Partition};

use super::counts::{parabolic_catalan, parabolic_catalan_by_gapless, shape_tuple_count};
use super::generate::{
    critical_lists, filled, flag_critical_lists, r_permutations, ui_tuples, upper_flags, upper_tuples,
};
use super::sweep::{ShapeSweep, TableauSet};

/// Stored counterexamples per report; later ones are only counted.
const MAX_FAILURES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T340,
    T420,
    T520,
    T721,
    T737_1,
    T737_2,
    T18_1,
    Table16_1,
    GV17,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::T340,
        TheoremId::T420,
        TheoremId::T520,
        TheoremId::T721,
        TheoremId::T737_1,
        TheoremId::T737_2,
        TheoremId::T18_1,
        TheoremId::Table16_1,
        TheoremId::GV17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T340 => "T340",
            TheoremId::T420 => "T420",
            TheoremId::T520 => "T520",
            TheoremId::T721 => "T721",
            TheoremId::T737_1 => "T737_1",
            TheoremId::T737_2 => "T737_2",
            TheoremId::T18_1 => "T18_1",
            TheoremId::Table16_1 => "TABLE16_1",
            TheoremId::GV17 => "GV17",
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown(format!("theorem {s:?}")))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How far a sweep goes: every `n` up to `max_n`, and for tableau checks every
/// shape with at most `box_rows` nonzero parts of size at most `box_cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub box_rows: usize,
    pub box_cols: usize,
}

impl Limits {
    pub fn new(max_n: usize, box_rows: usize, box_cols: usize) -> Self {
        Limits { max_n, box_rows, box_cols }
    }

    pub fn shapes(&self) -> Vec<Partition> {
        (1..=self.max_n).flat_map(|n| Partition::in_box(n, self.box_rows.min(n), self.box_cols)).collect()
    }

    fn params(&self) -> Value {
        json!({ "max_n": self.max_n, "box": format!("{}x{}", self.box_rows, self.box_cols) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Value,
    pub checked: u64,
    pub failures: Vec<String>,
    /// Named tallies of interest beyond pass/fail, e.g. witness counts.
    pub stats: BTreeMap<String, u64>,
    pub ms: u64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn stat(&self, name: &str) -> u64 {
        self.stats.get(name).copied().unwrap_or(0)
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    failures: Vec<String>,
    stats: BTreeMap<String, u64>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(msg);
        }
    }

    fn count(&mut self, expected: u128, found: u128, what: impl FnOnce() -> String) {
        self.check(expected == found, || format!("{}: expected {expected}, found {found}", what()));
    }

    fn bump(&mut self, stat: &str, by: u64) {
        *self.stats.entry(stat.to_string()).or_default() += by;
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = MAX_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        for (k, v) in other.stats {
            *self.stats.entry(k).or_default() += v;
        }
    }

    fn report(mut self, id: TheoremId, params: Value, start: Instant) -> VerificationReport {
        let hidden = self.failed - self.failures.len() as u64;
        if hidden > 0 {
            self.failures.push(format!("... and {hidden} more"));
        }
        VerificationReport {
            theorem: id.name().to_string(),
            params,
            checked: self.checked,
            pass: self.failures.is_empty(),
            failures: self.failures,
            stats: self.stats,
            ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Runs every check of `id` within `limits`.
pub fn verify(id: TheoremId, limits: &Limits) -> Result<VerificationReport> {
    let start = Instant::now();
    let tally = match id {
        TheoremId::T18_1 => {
            let rsets: Vec<RSet> = (1..=limits.max_n).flat_map(RSet::all).collect();
            sweep_rsets(&rsets)?
        }
        _ => sweep_shapes(id, &limits.shapes())?,
    };
    Ok(tally.report(id, limits.params(), start))
}

/// Runs the checks of `id` on the given shapes. Cross-shape checks compare
/// shapes with the same `n`; the counting checks use the sets `R_λ`.
pub fn verify_shapes(id: TheoremId, shapes: &[Partition]) -> Result<VerificationReport> {
    let start = Instant::now();
    let tally = match id {
        TheoremId::T18_1 => {
            let rsets: BTreeSet<RSet> = shapes.iter().map(Partition::rset).collect();
            sweep_rsets(&rsets.into_iter().collect::<Vec<_>>())?
        }
        _ => sweep_shapes(id, shapes)?,
    };
    let names: Vec<String> = shapes.iter().map(ToString::to_string).collect();
    Ok(tally.report(id, json!({ "shapes": names }), start))
}

fn sweep_rsets(rsets: &[RSet]) -> Result<Tally> {
    let parts: Vec<Tally> = rsets.par_iter().map(check_counts).collect::<Result<_>>()?;
    let mut tally = Tally::default();
    parts.into_iter().for_each(|t| tally.merge(t));
    Ok(tally)
}

fn sweep_shapes(id: TheoremId, shapes: &[Partition]) -> Result<Tally> {
    let mut tally = Tally::default();
    match id {
        TheoremId::T737_2 | TheoremId::Table16_1 => {
            let mut by_n: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
            for s in shapes {
                by_n.entry(s.n()).or_default().push(s.clone());
            }
            for group in by_n.values() {
                let data: Vec<ShapeData> = group.par_iter().map(ShapeData::new).collect::<Result<_>>()?;
                for d in &data {
                    tally.merge(scan_checks(&d.sweep));
                }
                tally.merge(if id == TheoremId::T737_2 { check_t737_2(&data)? } else { check_table16_1(&data)? });
            }
        }
        _ => {
            let parts: Vec<Tally> = shapes
                .par_iter()
                .map(|s| {
                    let sw = ShapeSweep::new(s)?;
                    let mut t = scan_checks(&sw);
                    t.merge(match id {
                        TheoremId::T340 => check_t340(&sw)?,
                        TheoremId::T420 => check_t420(&sw),
                        TheoremId::T520 => check_t520(&sw),
                        TheoremId::T721 => check_t721(&sw)?,
                        TheoremId::T737_1 => check_t737_1(&sw)?,
                        TheoremId::GV17 => check_gv17(&sw)?,
                        _ => unreachable!("handled above"),
                    });
                    Ok(t)
                })
                .collect::<Result<_>>()?;
            parts.into_iter().for_each(|t| tally.merge(t));
        }
    }
    Ok(tally)
}

fn scan_checks(sw: &ShapeSweep) -> Tally {
    let mut t = Tally::default();
    t.checked += sw.len() as u64;
    t.bump("tableaux_scanned", sw.len() as u64);
    for f in &sw.scan_failures {
        t.fail(format!("scan on {}: {f}", sw.shape));
    }
    t
}

fn perm_index(sw: &ShapeSweep, p: &crate::maps::RPermutation) -> Result<usize> {
    sw.perm_index(p).ok_or_else(|| Error::Internal(format!("{p} missing from the sweep of {}", sw.shape)))
}

fn check_t340(sw: &ShapeSweep) -> Result<Tally> {
    let shape = &sw.shape;
    let mut t = Tally::default();
    let strict = sw.rset.r() + 1 == shape.n();
    let mut avoiding_keys = BTreeSet::new();
    for (i, p) in sw.perms.iter().enumerate() {
        let y = &sw.tableaux[sw.keys[i]];
        let avoid = is_r312_avoiding(p);
        t.check(avoid == is_r312_avoiding_by_intervals(p), || format!("{shape} {p}: interval test disagrees"));
        t.check(avoid == is_rightmost_clump_deleting(&chain_of(p)), || {
            format!("{shape} {p}: avoidance and clump deletion disagree")
        });
        t.check(avoid == is_gapless_key(y)?, || format!("{shape} {p}: avoidance and gapless key disagree"));
        let psi = rank_tuple(p);
        t.check(y.row_end_list() == psi, || format!("{shape} {p}: row end list of the key is not {psi}"));
        let m = row_end_max(shape, &psi)?;
        if avoid {
            avoiding_keys.insert(sw.keys[i]);
            t.check(&m == y, || format!("{shape} {p}: M(rank) = {} differs from the key", m.to_json()));
            t.check(psi.is_gapless(), || format!("{shape} {p}: rank tuple {psi} is not gapless"));
        } else if strict {
            t.check(&m != y, || format!("{shape} {p}: M(rank) is the key of a containing permutation"));
        }
    }
    let mut gapless_images = BTreeSet::new();
    for alpha in ui_tuples(&sw.rset) {
        let m = row_end_max(shape, &alpha)?;
        let lub = sw.join_of(&sw.row_end_fiber(&alpha));
        t.check(lub.as_ref() == Some(&m), || format!("{shape} {alpha}: M = {} is not the join of its fiber", m.to_json()));
        if alpha.is_gapless() {
            t.check(m.is_key(), || format!("{shape} {alpha}: M of a gapless tuple is not a key"));
            gapless_images.insert(sw.index[&m]);
        }
    }
    t.check(gapless_images == avoiding_keys, || format!("{shape}: row end max tableaux of gapless tuples are not the avoiding keys"));
    Ok(t)
}

fn check_t420(sw: &ShapeSweep) -> Tally {
    let mut t = Tally::default();
    for (i, p) in sw.perms.iter().enumerate() {
        let d = sw.demazure(i);
        let ideal = sw.ideal(sw.keys[i]);
        t.check(d[sw.keys[i]], || format!("{} {p}: key outside its Demazure set", sw.shape));
        t.check((d.clone() & !ideal.clone()).not_any(), || format!("{} {p}: Demazure set leaves the ideal", sw.shape));
        if is_r312_avoiding(p) {
            t.check(d == ideal, || format!("{} {p}: Demazure set {} is not the ideal", sw.shape, sw.describe(&d)));
        }
    }
    t
}

fn flat(sw: &ShapeSweep, i: usize) -> Vec<i64> {
    sw.tableaux[i].values().map(|v| v as i64).collect()
}

/// `b` lies strictly inside the segment from `a` to `c`.
fn strictly_between(a: &[i64], b: &[i64], c: &[i64]) -> bool {
    let d1: Vec<i64> = c.iter().zip(a).map(|(x, y)| x - y).collect();
    let d2: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
    let Some(k) = d1.iter().position(|&x| x != 0) else { return false };
    if d2[k] * d1[k].signum() <= 0 || d2[k].abs() >= d1[k].abs() {
        return false;
    }
    d1.iter().zip(&d2).all(|(x, y)| y * d1[k] == d2[k] * x)
}

fn check_t520(sw: &ShapeSweep) -> Tally {
    let mut t = Tally::default();
    for (i, p) in sw.perms.iter().enumerate() {
        let d = sw.demazure(i);
        let ideal = sw.ideal(sw.keys[i]);
        let avoid = is_r312_avoiding(p);
        t.check((d == ideal) == avoid, || {
            format!("{} {p}: ideal identity {} but avoidance {avoid}", sw.shape, d == ideal)
        });
        if avoid {
            continue;
        }
        // Not convex: two keys of D with a tableau of [Y] \ D between them.
        let keys: Vec<usize> = d.iter_ones().filter(|&k| sw.scans[k] == k).collect();
        let witness = (ideal.clone() & !d.clone()).iter_ones().find_map(|m| {
            let mid = flat(sw, m);
            let below: Vec<usize> = keys.iter().copied().filter(|&w| sw.tableaux[w].leq(&sw.tableaux[m])).collect();
            let above: Vec<usize> = keys.iter().copied().filter(|&x| sw.tableaux[m].leq(&sw.tableaux[x])).collect();
            below.iter().find_map(|&w| {
                let lo = flat(sw, w);
                above.iter().find(|&&x| strictly_between(&lo, &mid, &flat(sw, x))).map(|&x| (w, m, x))
            })
        });
        t.check(witness.is_some(), || format!("{} {p}: no nonconvexity witness found", sw.shape));
        if witness.is_some() {
            t.bump("nonconvexity_witnesses", 1);
        }
    }
    t
}

fn check_t721(sw: &ShapeSweep) -> Result<Tally> {
    let shape = &sw.shape;
    let mut t = Tally::default();
    let d_sets: Vec<TableauSet> = (0..sw.perms.len()).into_par_iter().map(|i| sw.demazure(i)).collect();
    let avoid: Vec<bool> = sw.perms.iter().map(is_r312_avoiding).collect();
    let mut lookup: HashMap<&TableauSet, Vec<usize>> = HashMap::new();
    for (i, d) in d_sets.iter().enumerate() {
        lookup.entry(d).or_default().push(i);
    }
    let mut distinct_s = HashSet::new();
    for beta in upper_tuples(&sw.rset) {
        let s = sw.row_bound_set(&beta);
        let c = core(&beta)?;
        let ugc = c.is_gapless();
        let matches = lookup.get(&s);
        t.check(matches.is_some() == ugc, || {
            format!("{shape} {beta}: arises as a Demazure set is {} but gapless core is {ugc}", matches.is_some())
        });
        let q = row_bound_max(shape, &beta)?;
        t.check(sw.join_of(&s).as_ref() == Some(&q), || format!("{shape} {beta}: Q = {} is not the join of S", q.to_json()));
        if ugc {
            let p = perm_index(sw, &pi_of(&c)?)?;
            t.check(avoid[p], || format!("{shape} {beta}: Π(core) = {} is not avoiding", sw.perms[p]));
            t.check(matches.map(Vec::as_slice) == Some(&[p][..]), || {
                format!("{shape} {beta}: S is not D({}) alone", sw.perms[p])
            });
        }
        for &p in matches.into_iter().flatten() {
            let pi = &sw.perms[p];
            t.check(q == sw.tableaux[sw.keys[p]], || format!("{shape} {beta} {pi}: Q differs from the key"));
            t.check(c == rank_tuple(pi), || format!("{shape} {beta} {pi}: core differs from the rank tuple"));
            t.check(avoid[p] && ugc, || format!("{shape} {beta} {pi}: coincidence outside the avoiding case"));
        }
        distinct_s.insert(s);
    }
    t.count(sw.rset.multinomial(), distinct_s.len() as u128, || format!("{shape}: distinct row bound sets"));
    for (i, p) in sw.perms.iter().enumerate().filter(|(i, _)| avoid[*i]) {
        let gamma = rank_tuple(p);
        t.check(gamma.is_gapless(), || format!("{shape} {p}: rank tuple not gapless"));
        t.check(sw.row_bound_set(&gamma) == d_sets[i], || format!("{shape} {p}: D differs from S(rank)"));
    }
    let flag_sets: HashSet<TableauSet> = upper_flags(&sw.rset).iter().map(|f| sw.row_bound_set(f)).collect();
    let avoiding_sets: HashSet<TableauSet> =
        d_sets.iter().zip(&avoid).filter(|(_, &a)| a).map(|(d, _)| d.clone()).collect();
    t.check(flag_sets == avoiding_sets, || format!("{shape}: flag bound sets and avoiding Demazure sets differ"));
    for gamma in filled(&sw.rset, FillKind::Gapless) {
        let s = sw.row_bound_set(&gamma);
        let p = perm_index(sw, &pi_of(&gamma)?)?;
        t.check(sw.row_bound_set(&floor_of(&gamma)?) == s, || format!("{shape} {gamma}: S(floor) differs from S"));
        t.check(d_sets[p] == s, || format!("{shape} {gamma}: D(Π) differs from S"));
        t.bump("gapless_coincidences", 1);
    }
    Ok(t)
}

fn check_t737_1(sw: &ShapeSweep) -> Result<Tally> {
    let shape = &sw.shape;
    let mut t = Tally::default();
    let d_sets: Vec<TableauSet> = (0..sw.perms.len()).into_par_iter().map(|i| sw.demazure(i)).collect();
    let d_polys: Vec<SparsePoly> = d_sets.iter().map(|d| sw.poly(d)).collect();
    let oracle: Vec<SparsePoly> = sw
        .perms
        .par_iter()
        .map(|p| key_poly_dd(&Composition::permuted(shape, p)?))
        .collect::<Result<_>>()?;
    for (i, p) in sw.perms.iter().enumerate() {
        t.check(d_polys[i] == oracle[i], || {
            format!("{shape} {p}: tableau sum {} but divided differences give {}", d_polys[i], oracle[i])
        });
        if is_r312_avoiding(p) {
            let gamma = rank_tuple(p);
            let s = sw.row_bound_set(&gamma);
            t.check(gamma.is_gapless() && s == d_sets[i] && sw.poly(&s) == d_polys[i], || {
                format!("{shape} {p}: d is not identical to s(rank)")
            });
        }
    }
    let mut by_poly: HashMap<&SparsePoly, Vec<usize>> = HashMap::new();
    for (i, d) in d_polys.iter().enumerate() {
        by_poly.entry(d).or_default().push(i);
    }
    for eta in upper_tuples(&sw.rset).into_iter().filter(RTuple::is_gapless_core) {
        let p = perm_index(sw, &pi_of(&core(&eta)?)?)?;
        let s = sw.row_bound_set(&eta);
        let poly = sw.poly(&s);
        t.check(is_r312_avoiding(&sw.perms[p]) && s == d_sets[p], || format!("{shape} {eta}: s is not identical to d(Π(core))"));
        if eta.is_flag() {
            t.check(by_poly.get(&poly).map(Vec::as_slice) == Some(&[p][..]), || {
                format!("{shape} {eta}: flag Schur polynomial does not match exactly one Demazure polynomial")
            });
        }
    }
    Ok(t)
}

fn check_gv17(sw: &ShapeSweep) -> Result<Tally> {
    let shape = &sw.shape;
    let mut t = Tally::default();
    let rows: Vec<(RTuple, bool, bool)> = upper_tuples(&sw.rset)
        .into_par_iter()
        .map(|beta| {
            let det = gv_determinant(shape, &beta)?;
            let sum = sw.poly(&sw.row_bound_set(&beta));
            let np = is_nonpermutable(shape, &beta)?;
            Ok((beta, det == sum, np))
        })
        .collect::<Result<_>>()?;
    for (beta, equal, np) in rows {
        t.check(equal == np, || format!("{shape} {beta}: determinant matches is {equal}, nonpermutable is {np}"));
        t.bump(if np { "nonpermutable" } else { "permutable" }, 1);
        if !np && !equal {
            t.bump("failing_witnesses", 1);
        }
    }
    Ok(t)
}

/// Per-shape polynomial data shared by the cross-shape checks.
struct ShapeData {
    sweep: ShapeSweep,
    avoid: Vec<bool>,
    d_sets: Vec<TableauSet>,
    d_polys: Vec<SparsePoly>,
    rows: Vec<RowBound>,
}

struct RowBound {
    beta: RTuple,
    core: RTuple,
    ugc: bool,
    floor: bool,
    set: TableauSet,
    poly: SparsePoly,
}

impl ShapeData {
    fn new(shape: &Partition) -> Result<Self> {
        let sweep = ShapeSweep::new(shape)?;
        let avoid = sweep.perms.iter().map(is_r312_avoiding).collect();
        let d_sets: Vec<TableauSet> = (0..sweep.perms.len()).map(|i| sweep.demazure(i)).collect();
        let d_polys = d_sets.iter().map(|d| sweep.poly(d)).collect();
        let rows = upper_tuples(&sweep.rset)
            .into_iter()
            .map(|beta| {
                let set = sweep.row_bound_set(&beta);
                let poly = sweep.poly(&set);
                let core = core(&beta)?;
                Ok(RowBound { ugc: core.is_gapless(), floor: beta.is_floor_flag(), core, set, poly, beta })
            })
            .collect::<Result<_>>()?;
        Ok(ShapeData { sweep, avoid, d_sets, d_polys, rows })
    }
}

fn check_t737_2(data: &[ShapeData]) -> Result<Tally> {
    let mut t = Tally::default();
    let mut d_lookup: HashMap<&SparsePoly, Vec<(usize, usize)>> = HashMap::new();
    for (j, d) in data.iter().enumerate() {
        for (p, poly) in d.d_polys.iter().enumerate() {
            d_lookup.entry(poly).or_default().push((j, p));
        }
    }
    for (poly, v) in &d_lookup {
        t.check(v.len() == 1, || format!("Demazure polynomial {poly} arises {} times", v.len()));
    }
    let mut s_shapes: HashMap<&SparsePoly, BTreeSet<usize>> = HashMap::new();
    for (i, d) in data.iter().enumerate() {
        let shape = &d.sweep.shape;
        for row in &d.rows {
            s_shapes.entry(&row.poly).or_default().insert(i);
            let Some(v) = d_lookup.get(&row.poly) else {
                t.check(!row.ugc, || format!("{shape} {}: gapless core sum is no Demazure polynomial", row.beta));
                continue;
            };
            for &(j, p) in v {
                t.bump("equalities", 1);
                let other = &data[j];
                let pi = &other.sweep.perms[p];
                let ctx = || format!("{shape} {} = d({}, {pi})", row.beta, other.sweep.shape);
                t.check(i == j, || format!("{}: shapes differ", ctx()));
                if i != j {
                    continue;
                }
                let q = row_bound_max(shape, &row.beta)?;
                t.check(q == d.sweep.tableaux[d.sweep.keys[p]], || format!("{}: Q is not the key", ctx()));
                t.check(row.core == rank_tuple(pi), || format!("{}: core is not the rank tuple", ctx()));
                t.check(d.avoid[p] && row.ugc, || format!("{}: coincidence outside the avoiding case", ctx()));
                t.check(row.set == d.d_sets[p], || format!("{}: equal but not identical", ctx()));
                if row.ugc {
                    let flag = floor_of(&row.core)?;
                    t.check(d.sweep.row_bound_set(&flag) == row.set, || format!("{}: not identical to s(floor)", ctx()));
                }
            }
        }
    }
    for (poly, shapes) in s_shapes {
        t.check(shapes.len() == 1, || format!("row bound sum {poly} arises on {} shapes", shapes.len()));
    }
    Ok(t)
}

fn check_table16_1(data: &[ShapeData]) -> Result<Tally> {
    let mut t = Tally::default();
    // (1) and (3): a gapless core sum equals only sums of its own class.
    let mut s_lookup: HashMap<&SparsePoly, Vec<(usize, &RowBound)>> = HashMap::new();
    for (i, d) in data.iter().enumerate() {
        for row in &d.rows {
            s_lookup.entry(&row.poly).or_default().push((i, row));
        }
    }
    for (poly, v) in &s_lookup {
        if let Some((i, eta)) = v.iter().find(|(_, r)| r.ugc) {
            for (j, row) in v {
                t.check(i == j && row.ugc && row.core == eta.core, || {
                    format!("{poly}: s({}, {}) = s({}, {})", data[*i].sweep.shape, eta.beta, data[*j].sweep.shape, row.beta)
                });
            }
        }
    }
    let mut all_d: HashSet<&SparsePoly> = HashSet::new();
    let mut total_d = 0;
    for d in data {
        let shape = &d.sweep.shape;
        let rset = &d.sweep.rset;
        let c = parabolic_catalan(rset);
        let m = rset.multinomial();
        // (2) identical sums ⇔ same class; one set per class
        let mut classes: HashMap<&TableauSet, BTreeSet<&RTuple>> = HashMap::new();
        let mut same_class: HashMap<&RTuple, BTreeSet<&TableauSet>> = HashMap::new();
        for row in &d.rows {
            classes.entry(&row.set).or_default().insert(&row.core);
            same_class.entry(&row.core).or_default().insert(&row.set);
        }
        t.count(m, classes.len() as u128, || format!("{shape}: distinct row bound sets"));
        t.check(classes.values().all(|c| c.len() == 1) && same_class.values().all(|s| s.len() == 1), || {
            format!("{shape}: identical row bound sets do not match classes")
        });
        // (3) and (4) counts, as sets and as polynomials
        let count_distinct = |pick: &dyn Fn(&RowBound) -> bool| -> (usize, usize) {
            let sets: HashSet<&TableauSet> = d.rows.iter().filter(|r| pick(r)).map(|r| &r.set).collect();
            let polys: HashSet<&SparsePoly> = d.rows.iter().filter(|r| pick(r)).map(|r| &r.poly).collect();
            (sets.len(), polys.len())
        };
        let (sets, polys) = count_distinct(&|r| r.ugc);
        t.count(c, sets as u128, || format!("{shape}: distinct gapless core sets"));
        t.count(c, polys as u128, || format!("{shape}: distinct gapless core polynomials"));
        let floors = d.rows.iter().filter(|r| r.floor).count();
        let (sets, polys) = count_distinct(&|r| r.floor);
        t.count(c, floors as u128, || format!("{shape}: floor flags"));
        t.count(c, sets as u128, || format!("{shape}: distinct floor flag sets"));
        t.count(c, polys as u128, || format!("{shape}: distinct floor flag polynomials"));
        // (5) coincidences between sums and Demazure polynomials
        let d_polys: HashMap<&SparsePoly, usize> = d.d_polys.iter().enumerate().map(|(p, q)| (q, p)).collect();
        let mut coincident_polys = HashSet::new();
        let mut coincident_sets = HashSet::new();
        for row in &d.rows {
            if let Some(&p) = d_polys.get(&row.poly) {
                let pi = &d.sweep.perms[p];
                t.check(row.ugc && d.avoid[p] && row.core == rank_tuple(pi), || {
                    format!("{shape}: s({}) = d({pi}) outside the avoiding case", row.beta)
                });
                coincident_polys.insert(&row.poly);
                if row.set == d.d_sets[p] {
                    coincident_sets.insert(&row.set);
                }
            }
            if row.ugc {
                let p = perm_index(&d.sweep, &pi_of(&row.core)?)?;
                t.check(d.d_polys[p] == row.poly && d.d_sets[p] == row.set, || {
                    format!("{shape}: s({}) differs from d(Π(core))", row.beta)
                });
            }
        }
        t.count(c, coincident_polys.len() as u128, || format!("{shape}: coincident polynomials"));
        t.count(c, coincident_sets.len() as u128, || format!("{shape}: coincident sets"));
        // (6) and (7)
        let avoiding: HashSet<&SparsePoly> = d.d_polys.iter().zip(&d.avoid).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        t.count(c, avoiding.len() as u128, || format!("{shape}: distinct avoiding Demazure polynomials"));
        let sets: HashSet<&TableauSet> = d.d_sets.iter().collect();
        t.count(m, sets.len() as u128, || format!("{shape}: distinct Demazure sets"));
        all_d.extend(&d.d_polys);
        total_d += d.d_polys.len();
    }
    t.count(total_d as u128, all_d.len() as u128, || "distinct Demazure polynomials over all shapes".to_string());
    Ok(t)
}

/// Every count that should equal `C_n^R`, with tableau counts on the minimal
/// shape for `R`.
fn check_counts(rset: &RSet) -> Result<Tally> {
    let mut t = Tally::default();
    let c = parabolic_catalan(rset);
    let what = |s: &str| format!("R = {rset}, n = {}: {s}", rset.n());
    t.bump("rsets", 1);
    t.count(c, parabolic_catalan_by_gapless(rset), || what("gapless generator"));

    let perms = r_permutations(rset);
    for p in &perms {
        t.check(contains_r_pattern(p, [3, 1, 2]) != is_r312_avoiding(p), || what(&format!("{p}: pattern test disagrees")));
    }
    for pattern in [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
        let avoiding = perms.iter().filter(|p| !contains_r_pattern(p, pattern)).count();
        t.count(c, avoiding as u128, || what(&format!("avoiding {pattern:?}")));
    }

    let upper = upper_tuples(rset);
    for (kind, pred) in [
        (FillKind::Gapless, RTuple::is_gapless as fn(&RTuple) -> bool),
        (FillKind::Canopy, RTuple::is_canopy),
        (FillKind::Floor, RTuple::is_floor_flag),
        (FillKind::Ceiling, RTuple::is_ceiling_flag),
    ] {
        let built = filled(rset, kind);
        let distinct: HashSet<&RTuple> = built.iter().collect();
        t.count(c, distinct.len() as u128, || what(&format!("{kind:?} generator")));
        t.check(built.iter().all(pred), || what(&format!("{kind:?} generator output fails its predicate")));
        t.count(c, upper.iter().filter(|u| pred(u)).count() as u128, || what(&format!("{kind:?} by filter")));
    }

    t.count(c, flag_critical_lists(rset).len() as u128, || what("flag critical lists"));
    t.count(rset.multinomial(), critical_lists(rset).len() as u128, || what("critical lists"));
    t.count(c, shape_tuple_count(rset), || what("shape tuples"));

    let ugc: Vec<&RTuple> = upper.iter().filter(|u| u.is_gapless_core()).collect();
    let flags = upper_flags(rset);
    let cores = |ts: &mut dyn Iterator<Item = &RTuple>| -> Result<usize> {
        Ok(ts.map(core).collect::<Result<HashSet<_>>>()?.len())
    };
    t.count(c, cores(&mut ugc.iter().copied())? as u128, || what("classes in UGC"));
    t.count(c, cores(&mut flags.iter())? as u128, || what("classes in UF"));
    let rcd = perms.iter().filter(|p| is_rightmost_clump_deleting(&chain_of(p))).count();
    t.count(c, rcd as u128, || what("rightmost clump deleting chains"));

    let shape = Partition::minimal_for(rset);
    let sw = ShapeSweep::new(&shape)?;
    t.merge(scan_checks(&sw));
    let gapless_keys = sw.keys.iter().map(|&k| is_gapless_key(&sw.tableaux[k])).collect::<Result<Vec<_>>>()?;
    t.count(c, gapless_keys.iter().filter(|&&g| g).count() as u128, || what("gapless keys"));

    let d_sets: Vec<TableauSet> = (0..sw.perms.len()).map(|i| sw.demazure(i)).collect();
    let convex = (0..sw.perms.len()).filter(|&i| d_sets[i] == sw.ideal(sw.keys[i])).count();
    t.count(c, convex as u128, || what("Demazure sets equal to their ideal"));
    let avoid: Vec<bool> = perms.iter().map(is_r312_avoiding).collect();
    let avoiding_sets: HashSet<&TableauSet> = d_sets.iter().zip(&avoid).filter(|(_, &a)| a).map(|(d, _)| d).collect();
    t.count(c, avoiding_sets.len() as u128, || what("distinct avoiding Demazure sets"));
    let s_of = |ts: &mut dyn Iterator<Item = &RTuple>| -> HashSet<TableauSet> { ts.map(|b| sw.row_bound_set(b)).collect() };
    let ugc_sets = s_of(&mut ugc.iter().copied());
    t.count(c, ugc_sets.len() as u128, || what("distinct gapless core sets"));
    t.count(c, s_of(&mut flags.iter()).len() as u128, || what("distinct flag bound sets"));
    let all_s = s_of(&mut upper.iter());
    let d_all: HashSet<&TableauSet> = d_sets.iter().collect();
    t.count(c, all_s.iter().filter(|s| d_all.contains(s)).count() as u128, || what("coincident set pairs"));

    let d_polys: HashSet<SparsePoly> = d_sets.iter().zip(&avoid).filter(|(_, &a)| a).map(|(d, _)| sw.poly(d)).collect();
    t.count(c, d_polys.len() as u128, || what("distinct avoiding Demazure polynomials"));
    let ugc_polys: HashSet<SparsePoly> = ugc_sets.iter().map(|s| sw.poly(s)).collect();
    t.count(c, ugc_polys.len() as u128, || what("distinct gapless core polynomials"));
    let flag_polys: HashSet<SparsePoly> = s_of(&mut flags.iter()).iter().map(|s| sw.poly(s)).collect();
    t.count(c, flag_polys.len() as u128, || what("distinct flag Schur polynomials"));
    let all_d_polys: HashSet<SparsePoly> = d_sets.iter().map(|d| sw.poly(d)).collect();
    let coincident = all_s.iter().map(|s| sw.poly(s)).collect::<HashSet<_>>().intersection(&all_d_polys).count();
    t.count(c, coincident as u128, || what("coincident polynomial pairs"));

    // Most efficient determinant inputs: within each class, the nonpermutable
    // tuples whose matrix has strictly fewest monomials.
    let mut by_class: HashMap<RTuple, Vec<(usize, &RTuple)>> = HashMap::new();
    for beta in &upper {
        if is_nonpermutable(&shape, beta)? {
            let size = gv_matrix(&shape, beta)?.iter().flatten().map(SparsePoly::num_terms).sum();
            by_class.entry(core(beta)?).or_default().push((size, beta));
        }
    }
    let mut efficient = 0;
    for (class, members) in &by_class {
        let best = members.iter().map(|m| m.0).min().expect("non-empty");
        let winners: Vec<&RTuple> = members.iter().filter(|m| m.0 == best).map(|m| m.1).collect();
        if winners.len() == 1 {
            efficient += 1;
            t.check(winners[0] == class, || what(&format!("most efficient input {} is not the core", winners[0])));
        }
    }
    t.count(c, efficient as u128, || what("most efficient determinant inputs"));
    Ok(t)
}
