//! Acceptance criteria, each reported as one PASS/FAIL line.

use std::io::Write;
use std::time::Instant;

use parcat::census::{
    parabolic_catalan, parabolic_catalan_by_gapless, r_permutations, total_parabolic_catalan, ui_tuples,
    verify, verify_shapes,
};
use parcat::maps::{core, floor_of, ceiling_of, is_r312_avoiding, pi_of, rank_tuple};
use parcat::polynomials::{demazure_poly, key_poly_dd, row_bound_sum};
use parcat::scanning::{scan, scan_by_remainders};
use parcat::tableaux::{all_tableaux, key_of, row_bound_max};
use parcat::{Composition, Limits, Partition, RPermutation, RSet, RTuple, TheoremId, VerificationReport};

fn t(s: &str) -> RTuple {
    RTuple::parse(s).unwrap()
}

fn shape(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

/// Shapes with `n = 5` checked on top of the full `n <= 4` sweeps: every
/// shape in the 5×5 box with at most 10^5 tableaux.
fn spot_shapes() -> Vec<Partition> {
    Partition::in_box(5, 5, 5).into_iter().filter(|s| s.count_tableaux() <= 100_000).collect()
}

struct Outcome {
    lines: Vec<String>,
    all_pass: bool,
}

impl Outcome {
    fn record(&mut self, n: usize, name: &str, failures: Vec<String>, start: Instant) {
        let ms = start.elapsed().as_millis();
        let from = self.lines.len();
        if failures.is_empty() {
            self.lines.push(format!("PASS criterion {n}: {name} ({ms} ms)"));
        } else {
            self.all_pass = false;
            self.lines.push(format!("FAIL criterion {n}: {name} ({ms} ms)"));
            for f in failures.iter().take(20) {
                self.lines.push(format!("    {f}"));
            }
        }
        // Straight to stderr so the lines survive the test harness's capture.
        let mut err = std::io::stderr().lock();
        for line in &self.lines[from..] {
            let _ = writeln!(err, "{line}");
        }
    }
}

fn report_failures(r: &VerificationReport) -> Vec<String> {
    r.failures.iter().map(|f| format!("{}: {f}", r.theorem)).collect()
}

fn criterion_1() -> Vec<String> {
    let mut f = Vec::new();
    let mut eq = |what: &str, got: String, want: &str| {
        if got != want {
            f.push(format!("{what}: got {got}, want {want}"));
        }
    };
    let p = RPermutation::parse("2,4,6;1,5,7,8,9;3").unwrap();
    eq("rank", rank_tuple(&p).to_string(), "2,4,6;5,6,7,8,9;9");
    eq("pi", pi_of(&t("2,4,6;4,5,6,7,9;9")).unwrap().to_string(), "2,4,6;1,3,5,7,9;8");
    eq("core", core(&t("7,9,6;5,5,9,8,9;9")).unwrap().to_string(), "4,5,6;4,5,7,8,9;9");
    eq("floor", floor_of(&t("3,4,6;4,5,6,8,9;9")).unwrap().to_string(), "3,4,6;6,6,6,8,9;9");
    eq("ceiling", ceiling_of(&t("3,4,5;4,5,6,8,9;9")).unwrap().to_string(), "5,5,5;6,6,6,9,9;9");

    let ui = |x: &RTuple| x.is_upper() && x.is_r_increasing();
    let avoiding = |x: &RTuple| RPermutation::from_tuple(x.clone()).map(|p| is_r312_avoiding(&p)).unwrap_or(false);
    type Test<'a> = &'a dyn Fn(&RTuple) -> bool;
    let rows: [(&str, Test, &str, &str); 6] = [
        ("upper R-increasing", &ui, "2,6,7;4,5,7,8,9;9", "3,5,5;6,4,7,8,9;9"),
        ("R-312-avoiding", &avoiding, "2,3,6;1,4,5,8,9;7", "2,4,6;1,3,7,8,9;5"),
        ("gapless", &RTuple::is_gapless, "2,4,6;4,5,6,7,9;9", "2,4,6;4,6,7,8,9;9"),
        ("floor flag", &RTuple::is_floor_flag, "2,4,5;5,5,6,8,9;9", "2,4,5;5,5,8,8,9;9"),
        ("ceiling flag", &RTuple::is_ceiling_flag, "1,4,4;5,5,9,9,9;9", "1,4,4;5,5,7,8,9;9"),
        ("gapless core", &RTuple::is_gapless_core, "4,5,5;4,8,7,8,8;9", "4,5,5;4,8,7,8,9;9"),
    ];
    for (name, pred, yes, no) in rows {
        if !pred(&t(yes)) {
            f.push(format!("{name}: example {yes} rejected"));
        }
        if pred(&t(no)) {
            f.push(format!("{name}: counterexample {no} accepted"));
        }
    }
    f
}

fn criterion_2() -> Vec<String> {
    let mut f = Vec::new();
    let full: Vec<u128> = (1..=5).map(|n| parabolic_catalan(&RSet::full(n))).collect();
    // C_n = binom(2n, n) / (n + 1)
    let formula: Vec<u128> = (1..=5u128)
        .map(|n| (1..=n).fold(1u128, |acc, k| acc * (n + k) / k) / (n + 1))
        .collect();
    if full != formula || full != [1, 2, 5, 14, 42] {
        f.push(format!("full case counts {full:?}, formula {formula:?}"));
    }
    if total_parabolic_catalan(3) != 12 {
        f.push(format!("C_3^Σ = {}", total_parabolic_catalan(3)));
    }
    for n in 1..=6 {
        for r in RSet::all(n) {
            let m = r.multinomial();
            let perms = r_permutations(&r).len() as u128;
            let ui = ui_tuples(&r).len() as u128;
            if perms != m || ui != m {
                f.push(format!("n = {n}, R = {r}: |S| = {perms}, |UI| = {ui}, multinomial {m}"));
            }
            let (a, b) = (parabolic_catalan(&r), parabolic_catalan_by_gapless(&r));
            if a != b {
                f.push(format!("n = {n}, R = {r}: filter count {a}, gapless count {b}"));
            }
        }
    }
    f
}

fn criterion_7() -> Vec<String> {
    let mut f = Vec::new();
    for n in 1..=4 {
        for lam in Partition::in_box(n, n, 3) {
            for p in r_permutations(&lam.rset()) {
                let d = demazure_poly(&lam, &p).unwrap();
                let k = key_poly_dd(&Composition::permuted(&lam, &p).unwrap()).unwrap();
                if d != k {
                    f.push(format!("{lam} {p}: tableau sum {d}, divided differences {k}"));
                }
            }
        }
    }
    f
}

fn criterion_8() -> Vec<String> {
    let lam = shape("1,1,0");
    let want = "x1*x2 + x1*x3 + x2*x3";
    ["3,3;3", "2,3;3"]
        .iter()
        .filter_map(|b| {
            let got = row_bound_sum(&lam, &t(b)).unwrap().to_string();
            (got != want).then(|| format!("s({b}) = {got}"))
        })
        .collect()
}

fn criterion_10(shapes: &[Partition]) -> (Vec<String>, usize) {
    let mut f = Vec::new();
    let mut seen = 0;
    for lam in shapes {
        let all = all_tableaux(lam);
        let keys: Vec<_> = r_permutations(&lam.rset()).iter().map(|p| key_of(lam, p).unwrap()).collect();
        let mut fiber_sizes = vec![0usize; keys.len()];
        for x in &all {
            seen += 1;
            let s = scan(x).unwrap();
            if scan_by_remainders(x) != s {
                f.push(format!("{lam}: implementations disagree on {}", x.to_json()));
            }
            if !s.is_key() || !x.leq(&s) {
                f.push(format!("{lam}: S({}) = {} is not a key above it", x.to_json(), s.to_json()));
            }
            match keys.iter().position(|y| *y == s) {
                Some(i) => fiber_sizes[i] += 1,
                None => f.push(format!("{lam}: S({}) is not a λ-key", x.to_json())),
            }
        }
        for (y, size) in keys.iter().zip(&fiber_sizes) {
            if scan(y).unwrap() != *y {
                f.push(format!("{lam}: S(Y) != Y for {}", y.to_json()));
            }
            if *size == 0 {
                f.push(format!("{lam}: empty fiber over {}", y.to_json()));
            }
        }
        if fiber_sizes.iter().sum::<usize>() != all.len() {
            f.push(format!("{lam}: fibers do not cover the tableaux"));
        }
    }
    (f, seen)
}

fn criterion_11() -> Vec<String> {
    let lam = shape("2,1,1,0");
    let p = RPermutation::parse("4;1,2;3").unwrap();
    let mut f = Vec::new();
    let y = key_of(&lam, &p).unwrap();
    let q = row_bound_max(&lam, &rank_tuple(&p)).unwrap();
    if y != q {
        f.push(format!("Y = {} but Q(rank) = {}", y.to_json(), q.to_json()));
    }
    if is_r312_avoiding(&p) {
        f.push("permutation reported avoiding".to_string());
    }
    f
}

#[test]
fn acceptance() {
    let mut out = Outcome { lines: Vec::new(), all_pass: true };
    let box4 = Limits::new(4, 4, 4);
    let spots = spot_shapes();

    let s = Instant::now();
    out.record(1, "map images and tuple classifications", criterion_1(), s);

    let s = Instant::now();
    out.record(2, "parabolic Catalan and multinomial counts", criterion_2(), s);

    let s = Instant::now();
    let r = verify(TheoremId::T18_1, &Limits::new(5, 5, 5)).unwrap();
    out.record(3, &format!("counting harness, n <= 5 ({} checks)", r.checked), report_failures(&r), s);

    let s = Instant::now();
    let mut f = Vec::new();
    let mut checked = 0;
    for r in [
        verify(TheoremId::T420, &box4).unwrap(),
        verify(TheoremId::T520, &box4).unwrap(),
        verify_shapes(TheoremId::T420, &spots).unwrap(),
        verify_shapes(TheoremId::T520, &spots).unwrap(),
    ] {
        checked += r.checked;
        f.extend(report_failures(&r));
    }
    out.record(4, &format!("Demazure set is the ideal exactly when avoiding ({checked} checks)"), f, s);

    let s = Instant::now();
    let mut f = Vec::new();
    let mut checked = 0;
    for r in [verify(TheoremId::T721, &box4).unwrap(), verify_shapes(TheoremId::T721, &spots).unwrap()] {
        checked += r.checked;
        f.extend(report_failures(&r));
    }
    out.record(5, &format!("row bound and Demazure set coincidences ({checked} checks)"), f, s);

    let s = Instant::now();
    let mut f = Vec::new();
    let mut equalities = 0;
    for r in [verify(TheoremId::T737_2, &box4).unwrap(), verify(TheoremId::Table16_1, &box4).unwrap()] {
        equalities += r.stat("equalities");
        f.extend(report_failures(&r));
    }
    if equalities == 0 {
        f.push("no polynomial equalities found".to_string());
    }
    out.record(6, &format!("polynomial coincidences are explained ({equalities} equalities)"), f, s);

    let s = Instant::now();
    out.record(7, "tableau sums match divided differences", criterion_7(), s);

    let s = Instant::now();
    out.record(8, "introductory row bound sums", criterion_8(), s);

    let s = Instant::now();
    let r = verify(TheoremId::GV17, &Limits::new(4, 3, 3)).unwrap();
    let mut f = report_failures(&r);
    let witnesses = r.stat("failing_witnesses");
    if witnesses == 0 {
        f.push("no permutable pair where the determinant fails".to_string());
    }
    out.record(9, &format!("determinant formula exactly on nonpermutable pairs ({witnesses} failing witnesses)"), f, s);

    let s = Instant::now();
    let mut shapes = box4.shapes();
    shapes.extend(spots.iter().cloned());
    let (f, seen) = criterion_10(&shapes);
    out.record(10, &format!("scanning self-checks on {seen} tableaux"), f, s);

    let s = Instant::now();
    out.record(11, "key equals row bound max for a containing permutation", criterion_11(), s);

    assert!(out.all_pass, "\n{}", out.lines.join("\n"));
}
