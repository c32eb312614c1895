//! Acceptance criteria for the d = 4 classification, one test per
//! criterion. Each prints a single PASS/FAIL line (straight to stderr, so it
//! shows without `--nocapture`) and then asserts.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use distset::exec::Rayon;
use distset::fixtures;
use distset::verify::verify_row;
use distset_core::atlas::{full_atlas, mydim_census, AtlasEntry, AtlasSummary};
use distset_core::dissolve::{realize, solve_general, solve_spherical, verify_alg_point, Orientation};
use distset_core::exact::literal::parse;
use distset_core::exact::realalg::alg_is_zero;
use distset_core::exact::ring::{det_bareiss, det_cofactor, rank_rat, subsets, submatrix, QuotRing, UniRing};
use distset_core::exact::{rat, AlgPoint, Mode, Rat, RealAlg, Sign, SolutionPoint, UniPoly};
use distset_core::gram::{candidate_gram, menger_matrix, spectrum_rat};
use distset_core::graph::{class_key, decode, decode_auto, encode, pairs};
use distset_core::Graph;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const D: usize = 4;

fn line(criterion: u8, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "{status} criterion {criterion}: {detail}");
}

fn exec() -> Rayon {
    Rayon::new(std::thread::available_parallelism().map_or(1, |n| n.get())).unwrap()
}

struct Atlas {
    summary: AtlasSummary,
    entries: Vec<AtlasEntry>,
    elapsed: Duration,
}

fn atlas() -> &'static Atlas {
    static ATLAS: OnceLock<Atlas> = OnceLock::new();
    ATLAS.get_or_init(|| {
        let t = Instant::now();
        let (summary, entries) = full_atlas(D, 6, 11, &[Mode::General, Mode::Spherical], &exec()).unwrap();
        Atlas { summary, entries, elapsed: t.elapsed() }
    })
}

fn survivors(mode: Mode, n: usize) -> Vec<&'static AtlasEntry> {
    atlas().entries.iter().filter(|e| e.mode == mode && e.n == n && e.survived).collect()
}

fn lit(s: &str) -> RealAlg {
    parse(s).unwrap()
}

fn point_of(a: &str, b: &str) -> AlgPoint {
    AlgPoint::from_pair(&lit(a), &lit(b))
}

#[test]
fn criterion_1_level_counts() {
    let a = atlas();
    let expected: [(&str, [usize; 6]); 4] = [
        ("surviving general", [77, 22, 13, 4, 1, 0]),
        ("surviving spherical", [30, 17, 6, 2, 1, 0]),
        ("spherical sets", [42, 23, 7, 2, 1, 0]),
        ("nonspherical sets", [103, 10, 13, 3, 0, 0]),
    ];
    let mut mismatches = Vec::new();
    for (i, n) in (6..=11).enumerate() {
        let c = &a.summary.levels[&n];
        let got = [c.surviving_general, c.surviving_spherical, c.spherical_sets, c.nonspherical_sets];
        for ((name, row), g) in expected.iter().zip(got) {
            if row[i] != g {
                mismatches.push(format!("{name} n={n}: {g} != {}", row[i]));
            }
        }
    }
    let low_rank = a.summary.levels[&6].low_rank_spherical_sets;
    if low_rank != 6 {
        mismatches.push(format!("low-rank spherical sets at n=6: {low_rank} != 6"));
    }
    let in_budget = a.elapsed <= Duration::from_secs(60 * 60);
    let ok = mismatches.is_empty() && in_budget;
    line(1, ok, &format!("level counts for n=6..11, {} mismatches, {:.1?}", mismatches.len(), a.elapsed));
    assert!(ok, "{mismatches:?}");
}

#[test]
fn criterion_2_set_totals() {
    let s = &atlas().summary;
    let got: Vec<usize> = (7..=9).map(|n| s.total_sets(n)).collect();
    let ok = got == [33, 20, 5];
    line(2, ok, &format!("sets at n=7,8,9: {got:?} (expected [33, 20, 5])"));
    assert!(ok);
}

#[test]
fn criterion_3_mydim_census() {
    let t = Instant::now();
    let general: Vec<AtlasEntry> = atlas().entries.iter().filter(|e| e.mode == Mode::General).cloned().collect();
    let census = mydim_census(D, 6, &general, &exec()).unwrap();
    let exactly = census.exactly(D);
    let expected: BTreeMap<usize, usize> = [(5, 7), (6, 145), (7, 33), (8, 20), (9, 5), (10, 1)].into();
    let total: usize = exactly.values().sum();
    let ok = exactly == expected && total == 211 && t.elapsed() <= Duration::from_secs(30 * 60);
    line(
        3,
        ok,
        &format!(
            "mydim = 4 census {exactly:?} total {total} (expected {expected:?} total 211); representable in R^4: {:?}; {:.1?}",
            census.at_most(D),
            t.elapsed()
        ),
    );
    assert!(ok);
}

/// Johnson graph J(5,2): 2-subsets of {0..4}, adjacent when they meet.
fn johnson_5_2() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let mut edges = Vec::new();
    for (x, p) in pairs.iter().enumerate() {
        for (y, q) in pairs.iter().enumerate().take(x) {
            if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(10, &edges)
}

#[test]
fn criterion_4_unique_maximum() {
    let t5 = class_key(&johnson_5_2()).unwrap();
    let mut ok = true;
    for mode in [Mode::General, Mode::Spherical] {
        let ten = survivors(mode, 10);
        ok &= ten.len() == 1 && ten[0].class_key == t5;
        ok &= survivors(mode, 11).is_empty();
    }
    line(4, ok, "single surviving class at n=10 in both pipelines, equal to J(5,2); none at n=11");
    assert!(ok);
}

fn admissible_points(g: &Graph, mode: Mode) -> Vec<(RealAlg, RealAlg, usize, bool)> {
    match mode {
        Mode::Spherical => solve_spherical(g, D)
            .unwrap()
            .solutions
            .into_iter()
            .map(|s| (s.point.a, s.point.b, s.rank, s.jspherical))
            .collect(),
        Mode::General => {
            solve_general(g, D).unwrap().solutions.into_iter().map(|s| (s.point.a, s.point.b, s.rank, false)).collect()
        }
    }
}

#[test]
fn criterion_5_spot_values() {
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };
    let g10a = decode_auto("aaaaaaaabbababaabbaaabaabaabbabaabaabbaabaaaa").unwrap();
    let s = admissible_points(&g10a, Mode::Spherical);
    check("10A", s.len() == 1 && s[0].0.equals(&lit("1/6")) && s[0].1.equals(&lit("-2/3")));

    let g8a = decode_auto("aaaaaaaaabaabaaabaaaabaaaaaa").unwrap();
    let s = admissible_points(&g8a, Mode::Spherical);
    check("8A", s.iter().any(|p| p.0.equals(&lit("0")) && p.1.equals(&lit("-1")) && p.2 == 4 && p.3));

    let g9b = decode_auto("aaaabbabbabababbabbaabbaababbbababaa").unwrap();
    let s = admissible_points(&g9b, Mode::Spherical);
    check("9B", s.iter().any(|p| p.0.equals(&lit("1/4")) && p.1.equals(&lit("-1/2"))));

    let g8b = decode_auto("aaaaaaaaabaabababaabbbaaabbb").unwrap();
    let s = admissible_points(&g8b, Mode::Spherical);
    let half = lit("1/2");
    for a in ["(1 + 1*sqrt(5))/4", "(1 + -1*sqrt(5))/4"] {
        check("8B", s.iter().any(|p| p.0.equals(&lit(a)) && p.1.equals(&half)));
    }

    let g9d = decode_auto("aaaaaaaaabaababaabbaaabbbbbbbabbbbbb").unwrap();
    let s = admissible_points(&g9d, Mode::General);
    let golden = UniPoly::from_ints(&[1, -3, 1]);
    let big: Vec<_> = s.iter().filter(|p| p.1.cmp_rat(&rat(1, 1)).is_gt()).collect();
    check("9D", !big.is_empty() && big.iter().all(|p| alg_is_zero(&golden, &p.1) && p.0.equals(&lit("1"))));

    let g7o = decode_auto("aaaaabababbabaabbaaaa").unwrap();
    let s = admissible_points(&g7o, Mode::Spherical);
    let cubic = UniPoly::from_ints(&[-1, 10, 32, 8]);
    let in_range: Vec<RealAlg> =
        RealAlg::roots_of(&cubic).unwrap().into_iter().filter(|x| x.cmp_rat(&rat(1, 1)).is_le() && x.cmp_rat(&rat(-1, 1)).is_ge()).collect();
    check("7O", s.iter().all(|p| alg_is_zero(&cubic, &p.0)) && in_range.iter().all(|x| s.iter().any(|p| p.0.equals(x))));

    let ok = failures.is_empty();
    line(5, ok, &format!("spot values for 10A, 8A, 9B, 8B, 9D, 7O; failing: {failures:?}"));
    assert!(ok);
}

#[test]
fn criterion_6_fixture_verification() {
    let t = Instant::now();
    let rows = fixtures::builtin();
    let mut failed = Vec::new();
    for row in &rows {
        let r = verify_row(row, D, true).unwrap();
        if !r.pass() {
            failed.push(r.label.clone());
        }
    }
    let ok = failed.is_empty() && t.elapsed() <= Duration::from_secs(10 * 60);
    line(6, ok, &format!("{} of {} table rows certified, {:.1?}; failing: {failed:?}", rows.len() - failed.len(), rows.len(), t.elapsed()));
    assert!(ok);
}

fn sym_rat_matrix() -> impl Strategy<Value = Vec<Vec<Rat>>> {
    let entry = (-4i64..=4, 1i64..=3).prop_map(|(p, q)| rat(p, q));
    let symmetric = (1usize..=6).prop_flat_map(move |n| {
        proptest::collection::vec(entry.clone(), n * (n + 1) / 2).prop_map(move |v| {
            let mut m = vec![vec![Rat::from_integer(0.into()); n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in 0..=i {
                    m[i][j] = v[k].clone();
                    m[j][i] = v[k].clone();
                    k += 1;
                }
            }
            m
        })
    });
    // B^T B with B of k rows: PSD of rank at most k
    let gram = (1usize..=6, 1usize..=6).prop_flat_map(|(n, k)| {
        proptest::collection::vec(-3i64..=3, n * k).prop_map(move |v| {
            (0..n)
                .map(|i| (0..n).map(|j| rat((0..k).map(|r| v[r * n + i] * v[r * n + j]).sum(), 1)).collect())
                .collect()
        })
    });
    prop_oneof![symmetric, gram]
}

/// Independent spectrum oracle: real roots of `det(tI - M)` (expanded by
/// fraction-free elimination over `Q[t]`) isolated by Sturm sequences.
fn sturm_oracle(m: &[Vec<Rat>]) -> (bool, usize) {
    let n = m.len();
    let tm: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(-m[i][j].clone());
                    if i == j {
                        &c + &UniPoly::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let p = det_bareiss(&UniRing, &tm);
    let zero_mult = p.coeffs().iter().position(|c| c != &Rat::from_integer(0.into())).unwrap();
    let negative = RealAlg::roots_of(&p).unwrap().iter().any(|r| r.sign() == Sign::Neg);
    (!negative, n - zero_mult)
}

fn run_cases<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() }).run(&s, f).map_err(|e| e.to_string())
}

fn nonprincipal_minors_vanish(e: &AtlasEntry) -> Result<usize, String> {
    let g = e.graph();
    let m = match e.mode {
        Mode::Spherical => candidate_gram(&g),
        Mode::General => menger_matrix(&g).unwrap(),
    };
    let mut checked = 0;
    for s in &e.solutions {
        let p = point_of(&s.a, &s.b);
        let at = m.eval_at(&p);
        let ring = QuotRing { modulus: p.t.poly().clone() };
        let idx = subsets(at.len(), D + 1);
        for r in &idx {
            for c in idx.iter().filter(|c| *c != r) {
                let v = det_cofactor(&ring, &submatrix(&at, r, c));
                if !(v.is_zero() || alg_is_zero(&v, &p.t)) {
                    return Err(format!("{} {:?}x{:?} at ({}, {})", e.class_key, r, c, s.a, s.b));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

#[test]
fn criterion_7_property_suites() {
    let t = Instant::now();
    let mut results: Vec<(&str, Result<String, String>)> = Vec::new();

    results.push((
        "psd rule",
        run_cases(500, sym_rat_matrix(), |m| {
            let s = spectrum_rat(&m);
            let (psd, rank) = sturm_oracle(&m);
            prop_assert_eq!(s.is_psd(), psd);
            prop_assert_eq!(s.rank(), rank);
            Ok(())
        })
        .map(|_| "500 cases".into()),
    ));

    results.push((
        "rank",
        run_cases(500, sym_rat_matrix(), |m| {
            prop_assert_eq!(spectrum_rat(&m).rank(), rank_rat(&m));
            Ok(())
        })
        .map(|_| "500 cases".into()),
    ));

    let codec = (|| {
        let mut count = 0;
        for n in 1..=6usize {
            for bits in 0u128..1 << pairs(n) {
                let code: String = (0..pairs(n)).map(|k| if bits >> k & 1 == 1 { 'a' } else { 'b' }).collect();
                let g = decode(&code, n).map_err(|e| e.to_string())?;
                if encode(&g).as_str() != code {
                    return Err(format!("round trip failed for {code}"));
                }
                count += 1;
            }
        }
        run_cases(1000, (2usize..=16).prop_flat_map(|n| proptest::collection::vec(prop_oneof![Just('a'), Just('b')], pairs(n))), |v| {
            let code: String = v.into_iter().collect();
            let g = decode_auto(&code).unwrap();
            let back = encode(&g);
            prop_assert_eq!(back.as_str(), code.as_str());
            Ok(())
        })?;
        Ok(format!("{count} exhaustive + 1000 random"))
    })();
    results.push(("codec", codec));

    let mirror = (|| {
        let sv = survivors(Mode::Spherical, 7);
        for e in &sv {
            let g = e.graph();
            let v = solve_spherical(&g, D).map_err(|x| x.to_string())?;
            let w = solve_spherical(&g.complement(), D).map_err(|x| x.to_string())?;
            let mut left: Vec<_> = v.solutions.iter().chain(&v.rejected).map(|s| (&s.point.a, &s.point.b)).collect();
            let right: Vec<_> = w.solutions.iter().chain(&w.rejected).map(|s| (&s.point.b, &s.point.a)).collect();
            if left.len() != right.len() || v.lines.len() != w.lines.len() {
                return Err(format!("{}: solution counts differ", e.class_key));
            }
            for (a, b) in right {
                let i = left.iter().position(|(x, y)| x.equals(a) && y.equals(b)).ok_or(format!("{}: unmatched", e.class_key))?;
                left.swap_remove(i);
            }
        }
        Ok(format!("{} classes", sv.len()))
    })();
    results.push(("complement mirror", mirror));

    let hereditary = (|| {
        let alive: BTreeSet<_> = atlas().entries.iter().filter(|e| e.survived).map(|e| (e.mode, e.n, e.class_key.clone())).collect();
        let mut checked = 0;
        for (mode, n, key) in &alive {
            if *n < 7 {
                continue;
            }
            let g = decode(key.as_str(), *n).unwrap();
            for v in 0..*n {
                let sub = class_key(&g.delete_vertex(v)).unwrap();
                if !alive.contains(&(*mode, n - 1, sub.clone())) {
                    return Err(format!("{} minus vertex {v} = {sub} is not a survivor", key));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} vertex deletions"))
    })();
    results.push(("hereditary closure", hereditary));

    let cross = (|| {
        let two = UniPoly::constant(rat(2, 1));
        let mut checked = 0;
        for e in atlas().entries.iter().filter(|e| e.mode == Mode::Spherical && e.survived) {
            let g = e.graph();
            for s in e.solutions.iter().filter(|s| s.psd) {
                let p = point_of(&s.a, &s.b);
                let q = AlgPoint::new(p.t.clone(), &two - &p.a.scale(&rat(2, 1)), &two - &p.b.scale(&rat(2, 1)));
                let r = verify_alg_point(&g, &q, D, Mode::General);
                if !(r.valid(D) && r.rank == s.rank && r.spherical == Some(true) && r.orientation == Some(s.orientation)) {
                    return Err(format!("{} ({}, {}): {r:?}", e.class_key, s.a, s.b));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} spherical solutions"))
    })();
    results.push(("cross-pipeline", cross));

    let audit = (|| {
        let mut checked = 0;
        for e in atlas().entries.iter().filter(|e| e.survived && e.n <= 8) {
            checked += nonprincipal_minors_vanish(e)?;
        }
        Ok(format!("{checked} non-principal minors"))
    })();
    results.push(("minor audit", audit));

    let ok = results.iter().all(|(_, r)| r.is_ok()) && t.elapsed() <= Duration::from_secs(10 * 60);
    let detail: Vec<String> = results
        .iter()
        .map(|(name, r)| match r {
            Ok(m) => format!("{name} ok ({m})"),
            Err(m) => format!("{name} FAILED ({m})"),
        })
        .collect();
    line(7, ok, &format!("{}; {:.1?}", detail.join(", "), t.elapsed()));
    assert!(ok);
}

#[test]
fn criterion_8_realization_residual() {
    let mut worst = 0.0f64;
    let mut count = 0;
    let mut failures = Vec::new();
    for e in atlas().entries.iter().filter(|e| e.survived && e.n >= 6) {
        let g = e.graph();
        for s in e.solutions.iter().filter(|s| s.psd) {
            let p = SolutionPoint::certify(point_of(&s.a, &s.b), &[], e.mode).unwrap();
            match realize(&g, &p, D) {
                Ok(r) if r.max_residual <= 1e-9 => worst = worst.max(r.max_residual),
                Ok(r) => failures.push(format!("{} residual {:e}", e.class_key, r.max_residual)),
                Err(err) => failures.push(format!("{}: {err}", e.class_key)),
            }
            count += 1;
        }
    }
    let ok = failures.is_empty() && count > 0;
    line(8, ok, &format!("{count} realizations, max relative residual {worst:e}; failing: {failures:?}"));
    assert!(ok);
}

#[test]
fn orientation_of_table_rows_is_recorded() {
    // the Paley graph is self-complementary: both orientations appear
    let g = decode_auto("aaaabbabbabababbabbaabbaababbbababaa").unwrap();
    let v = solve_spherical(&g, D).unwrap();
    assert!(v.self_complementary);
    let kinds: BTreeSet<_> = v.solutions.iter().map(|s| s.orientation).collect();
    assert_eq!(kinds, [Orientation::Graph, Orientation::Complement].into());
}
