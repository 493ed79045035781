//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so every line is printed even when an earlier criterion fails.

use flagcurv::campaign::{self, Campaign, Config};
use flagcurv::chevalley::ChevalleyTable;
use flagcurv::curvature::Hermitian;
use flagcurv::flagspace::{parse_flag, AlmostComplexStructure, FlagManifold, InvariantMetric};
use flagcurv::positivity::*;
use flagcurv::rational::{q, qi, Q};
use flagcurv::rootsys::{LieType, RootSystem, Series};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn sp_flag(n: usize) -> FlagManifold {
    let k: Vec<String> = (2..=n).map(|i| i.to_string()).collect();
    parse_flag(&format!("C{n} k={}", k.join(","))).unwrap()
}

fn all_flags(rs: &Arc<RootSystem>) -> Vec<FlagManifold> {
    let r = rs.rank();
    (0..(1u32 << r) - 1)
        .map(|m| {
            let painted: Vec<usize> = (1..=r).filter(|i| m >> (i - 1) & 1 == 1).collect();
            FlagManifold::build(Arc::clone(rs), &painted).unwrap()
        })
        .collect()
}

/// Root index from `λ`-coordinates in type C.
fn lam(rs: &RootSystem, e: &[i32]) -> usize {
    (0..rs.len()).find(|&i| rs.c_series_lambda_coords(i).unwrap() == e).unwrap_or_else(|| panic!("no root {e:?}"))
}

/// `a·λ_i + b·λ_j` in `n` coordinates (1-based indices).
fn lv(n: usize, terms: &[(usize, i32)]) -> Vec<i32> {
    let mut e = vec![0; n];
    for &(i, c) in terms {
        e[i - 1] += c;
    }
    e
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn criterion_1() -> Outcome {
    let (res, dt) = timed(|| {
        let mut pairs = 0usize;
        for t in LieType::all_up_to(4) {
            let rs = Arc::new(RootSystem::build(t));
            let ct = ChevalleyTable::build(Arc::clone(&rs));
            if let Err(e) = ct.verify_identities() {
                return Err(format!("{t}: {e}"));
            }
            pairs += rs.len() * rs.len();
        }
        let mut small = Vec::new();
        for r in 1..=6 {
            small.push(LieType::new(Series::A, r).unwrap());
        }
        for r in 2..=5 {
            small.push(LieType::new(Series::B, r).unwrap());
            small.push(LieType::new(Series::C, r).unwrap());
        }
        for r in 4..=5 {
            small.push(LieType::new(Series::D, r).unwrap());
        }
        small.push(LieType::new(Series::G, 2).unwrap());
        small.push(LieType::new(Series::F, 4).unwrap());
        let mut exhaustive = 0;
        for t in small {
            let rs = Arc::new(RootSystem::build(t));
            if rs.len() > 50 {
                continue;
            }
            let ct = ChevalleyTable::build(rs);
            if !ct.verify_jacobi(0, 0) {
                return Err(format!("Jacobi fails for {t}"));
            }
            exhaustive += 1;
        }
        Ok((pairs, exhaustive))
    });
    match res {
        Ok((pairs, ex)) => (
            dt.as_secs_f64() < 10.0,
            format!("{pairs} root pairs over rank <= 4, exhaustive Jacobi on {ex} systems, {:.2}s", dt.as_secs_f64()),
        ),
        Err(e) => (false, e),
    }
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        let rs = Arc::new(RootSystem::build(LieType::new(Series::C, n).unwrap()));
        let ct = ChevalleyTable::build(Arc::clone(&rs));
        let big = qi(n as i128 + 1);
        let two_l1 = lam(&rs, &lv(n, &[(1, 2)]));
        if rs.killing(two_l1, two_l1) != qi(1) / big {
            return (false, format!("n={n}: (2λ1,2λ1) = {}", rs.killing(two_l1, two_l1)));
        }
        for j in 2..=n {
            let a = lam(&rs, &lv(n, &[(1, 1), (j, -1)]));
            if rs.killing(a, a) != qi(1) / (qi(2) * big) {
                return (false, format!("n={n}: (λ1-λ{j},λ1-λ{j}) = {}", rs.killing(a, a)));
            }
            let b = lam(&rs, &lv(n, &[(1, -1), (j, 1)]));
            if ct.m_squared(two_l1, b) != qi(1) / (qi(2) * big) {
                return (false, format!("n={n}: m²(2λ1,-λ1+λ{j}) = {}", ct.m_squared(two_l1, b)));
            }
            checked += 2;
            for k in (2..=n).filter(|&k| k != j) {
                for s in [1, -1] {
                    let c = lam(&rs, &lv(n, &[(1, -1), (k, s)]));
                    let v = ct.m_squared(a, c);
                    if v != qi(1) / (qi(4) * big) {
                        return (false, format!("n={n}: m²(λ1-λ{j},-λ1{}λ{k}) = {v}", if s > 0 { "+" } else { "-" }));
                    }
                    checked += 1;
                }
            }
        }
        checked += 1;
    }
    (true, format!("{checked} values for n = 2..6"))
}

fn criterion_3() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    let mut expect = |name: String, fm: &FlagManifold, summands: usize, acs: Option<u64>| {
        let got_acs = fm.num_acs();
        let good = fm.num_summands() == summands && acs.is_none_or(|a| a == got_acs);
        ok &= good;
        lines.push(format!("{name}: {} summands, {} ACS", fm.num_summands(), got_acs));
    };
    for n in 2..=6 {
        expect(format!("C{n} Sp flag"), &sp_flag(n), 2, Some(2));
    }
    expect("G2 k=1".into(), &parse_flag("G2 k=1").unwrap(), 2, None);
    expect("G2 k=2".into(), &parse_flag("G2 k=2").unwrap(), 3, Some(4));
    expect("F4 k=2,3,4".into(), &parse_flag("F4 k=2,3,4").unwrap(), 2, None);
    expect("F4 k=1,2,4".into(), &parse_flag("F4 k=1,2,4").unwrap(), 4, Some(8));
    (ok, lines.join("; "))
}

fn criterion_4() -> Outcome {
    for n in 2..=6 {
        let fm = sp_flag(n);
        let k = fm.kahler_metrics(&"++".parse().unwrap());
        if k.ray() != Some(vec![qi(1), qi(2)]) {
            return (false, format!("n={n}: Kähler cone {}", k.describe()));
        }
        let qk = fm.quasi_kahler_metrics(&"+-".parse().unwrap());
        let all = qk.nonempty && qk.basis.len() == 2 && qk.constraints.iter().all(|r| r.iter().all(|x| *x == qi(0)));
        let samples = [q(1, 100), q(1, 2), qi(1), qi(2), qi(100)];
        if !all || !samples.iter().all(|t| qk.contains(&[qi(1), *t])) {
            return (false, format!("n={n}: quasi-Kähler cone {}", qk.describe()));
        }
    }
    (true, "n = 2..6: Kähler ray (1,2) for (+,+), quasi-Kähler cone of (+,-) is the open quadrant".into())
}

fn criterion_5() -> Outcome {
    let cfg = Config::default();
    let (rep, dt) = timed(|| campaign::run(Campaign::Oracle, Some(4), &cfg));
    match rep {
        Ok(rep) => {
            let cases: u64 = rep.checks.iter().map(|c| c.cases).sum();
            (rep.passed && dt.as_secs_f64() < 120.0, format!("{cases} comparisons, {:.1}s", dt.as_secs_f64()))
        }
        Err(e) => (false, e.to_string()),
    }
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=4 {
        let fm = sp_flag(n);
        let rs = fm.root_system_arc();
        let ct = ChevalleyTable::build(Arc::clone(&rs));
        let big = qi(n as i128 + 1);
        let two_l1 = lam(&rs, &lv(n, &[(1, 2)]));
        let minus = |j: usize| lam(&rs, &lv(n, &[(1, 1), (j, -1)]));
        let plus = |j: usize| lam(&rs, &lv(n, &[(1, 1), (j, 1)]));
        for t in [q(1, 2), qi(1), q(3, 2), qi(2)] {
            let metric = InvariantMetric::new(vec![qi(1), t]).unwrap();
            let h = Hermitian::new(&ct, &fm, &AlmostComplexStructure::all_plus(2), &metric).unwrap();
            let half = qi(1) / (qi(2) * big);
            let quarter = qi(1) / (qi(4) * big);
            // (α, γ, R(α,ᾱ,γ,γ̄), R(γ,ᾱ,α,γ̄))
            let mut rows: Vec<(usize, usize, Q, Option<Q>)> = vec![(two_l1, two_l1, t / big, None)];
            for j in 2..=n {
                for pm in [minus(j), plus(j)] {
                    rows.push((two_l1, pm, half, Some(half)));
                    rows.push((pm, two_l1, half * (t - qi(1)), Some(half)));
                    rows.push((pm, pm, half, None));
                }
                let mixed = half + half * (qi(1) / t - qi(1));
                let second = half * (qi(1) - qi(1) / t);
                rows.push((minus(j), plus(j), mixed, Some(second)));
                rows.push((plus(j), minus(j), mixed, Some(second)));
                for k in (2..=n).filter(|&k| k != j) {
                    for a in [minus(j), plus(j)] {
                        for g in [minus(k), plus(k)] {
                            rows.push((a, g, quarter, Some(quarter)));
                        }
                    }
                }
            }
            for (a, g, first, second) in rows {
                let got = h.griffiths_entry(a, a, g, g).as_rational();
                if got != Some(first) {
                    bad.push(format!("n={n} t={t} R({},{}) first = {got:?}, table {first}", rs.label(a), rs.label(g)));
                }
                checked += 1;
                if let Some(s) = second {
                    let got = h.griffiths_entry(g, a, a, g).as_rational();
                    if got != Some(s) {
                        bad.push(format!("n={n} t={t} R({},{}) second = {got:?}, table {s}", rs.label(a), rs.label(g)));
                    }
                    checked += 1;
                }
            }
        }
    }
    if bad.is_empty() {
        (true, format!("{checked} table entries, n = 2..4, t in {{1/2, 1, 3/2, 2}}"))
    } else {
        let shown: Vec<_> = bad.iter().take(5).cloned().collect();
        (false, format!("{} of {checked} entries differ: {}", bad.len(), shown.join("; ")))
    }
}

fn criterion_7() -> Outcome {
    let mut worst_zero: f64 = 0.0;
    for n in 2..=6 {
        let fm = sp_flag(n);
        let ct = ChevalleyTable::build(fm.root_system_arc());
        let acs = AlmostComplexStructure::all_plus(2);
        for (t, pd) in [(qi(1), false), (q(3, 2), true), (qi(2), true), (qi(5), true)] {
            let metric = InvariantMetric::new(vec![qi(1), t]).unwrap();
            let h = Hermitian::new(&ct, &fm, &acs, &metric).unwrap();
            let m = dual_nakano_matrix(&h).unwrap();
            let rep = check_psd(&m, PsdMode::ExactIfRational);
            if !rep.exact || !rep.is_psd || rep.is_pd != pd {
                return (false, format!("n={n} t={t}: psd={} pd={} exact={} min_eig={:e}", rep.is_psd, rep.is_pd, rep.exact, rep.min_eig));
            }
            if !pd {
                if rep.min_eig.abs() > 1e-12 {
                    return (false, format!("n={n} t=1: min eigenvalue {:e}", rep.min_eig));
                }
                worst_zero = worst_zero.max(rep.min_eig.abs());
            }
        }
        for t in [q(1, 2), q(3, 4)] {
            let metric = InvariantMetric::new(vec![qi(1), t]).unwrap();
            let h = Hermitian::new(&ct, &fm, &acs, &metric).unwrap();
            if griffiths_falsify(&h, 0, 0).is_none() {
                return (false, format!("n={n} t={t}: no Griffiths witness"));
            }
        }
    }
    (true, format!("n = 2..6 exact; |min eig| at t=1 <= {worst_zero:e}; witnesses at t = 1/2, 3/4"))
}

fn criterion_8() -> Outcome {
    let mut cases = 0;
    let mut worst = f64::INFINITY;
    let mut types = LieType::all_up_to(3);
    let g2 = LieType::new(Series::G, 2).unwrap();
    if !types.contains(&g2) {
        types.push(g2);
    }
    for t in types {
        let rs = Arc::new(RootSystem::build(t));
        let ct = ChevalleyTable::build(Arc::clone(&rs));
        for fm in all_flags(&rs) {
            let metric = InvariantMetric::ones(fm.num_summands());
            for acs in fm.enumerate_acs().into_iter().filter(|a| fm.is_integrable(a)) {
                let h = Hermitian::new(&ct, &fm, &acs, &metric).unwrap();
                let m = dual_nakano_matrix(&h).unwrap();
                let fl = m.to_f64();
                let (min, _) = min_eigen(&fl);
                let scale = psd_tolerance(&fl) / 1e-9;
                if min < -1e-9 * scale {
                    return (false, format!("{fm} {acs}: min eigenvalue {min:e}"));
                }
                worst = worst.min(min / scale);
                cases += 1;
            }
        }
    }
    (true, format!("{cases} integrable structures, smallest scaled eigenvalue {worst:e}"))
}

fn campaign_line(c: Campaign, rank: Option<usize>) -> (bool, String) {
    match campaign::run(c, rank, &Config::default()) {
        Ok(rep) => {
            let failed: Vec<String> = rep
                .checks
                .iter()
                .filter(|ch| !ch.passed)
                .map(|ch| {
                    let first = ch.counterexamples.first().map(|x| format!(": {} ({})", x.case, x.reason)).unwrap_or_default();
                    format!("{} failed {}/{}{first}", ch.claim, ch.failures, ch.cases)
                })
                .collect();
            let cases: u64 = rep.checks.iter().map(|ch| ch.cases).sum();
            let mut text = format!("{} {} over {cases} cases", c, if rep.passed { "PASS" } else { "FAIL" });
            if !failed.is_empty() {
                text += &format!(" [{}]", failed.join("; "));
            }
            for note in rep.notes.iter().filter(|_| !rep.passed) {
                text += &format!(" note: {note}");
            }
            (rep.passed, text)
        }
        Err(e) => (false, format!("{c}: {e}")),
    }
}

fn criterion_9() -> Outcome {
    campaign_line(Campaign::Table1, Some(6))
}

fn criterion_10() -> Outcome {
    let runs = [
        campaign_line(Campaign::Height3, Some(4)),
        campaign_line(Campaign::Maximal, Some(4)),
        campaign_line(Campaign::G2, None),
        campaign_line(Campaign::F4, None),
    ];
    let ok = runs.iter().all(|r| r.0);
    (ok, runs.into_iter().map(|r| r.1).collect::<Vec<_>>().join(" | "))
}

fn criterion_11() -> Outcome {
    let mut flags = Vec::new();
    for t in [LieType::new(Series::G, 2).unwrap(), LieType::new(Series::C, 3).unwrap()] {
        let rs = Arc::new(RootSystem::build(t));
        flags.extend(all_flags(&rs));
    }
    let opts = ClassifyOptions { samples: 100, psd_mode: PsdMode::Float, ..Default::default() };
    let mut compared = 0;
    for fm in &flags {
        let base = ChevalleyTable::build(fm.root_system_arc());
        let k = fm.num_summands();
        let metrics = [InvariantMetric::ones(k), InvariantMetric::new((0..k).map(|i| q(i as i128 + 2, 2)).collect()).unwrap()];
        let cases: Vec<_> = fm.enumerate_acs().into_iter().flat_map(|a| metrics.iter().map(move |m| (a.clone(), m))).collect();
        let reference: Vec<_> = cases.iter().map(|(a, m)| classify(&base, fm, a, m, &opts).unwrap()).collect();
        for seed in 1..=20 {
            let ct = base.random_regauge(seed);
            for ((a, m), r) in cases.iter().zip(&reference) {
                let v = classify(&ct, fm, a, m, &opts).unwrap();
                if v.verdict != r.verdict || v.diagonal != r.diagonal {
                    return (false, format!("{fm} {a} {m} seed {seed}: {} vs {}", v.verdict.as_str(), r.verdict.as_str()));
                }
                compared += 1;
            }
        }
    }
    (true, format!("{} flags, {compared} regauged classifications", flags.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("structure-constant identities and Jacobi", criterion_1),
        ("C_n structure constants and Killing norms", criterion_2),
        ("summand and ACS counts", criterion_3),
        ("Kähler and quasi-Kähler cones of the Sp flag", criterion_4),
        ("curvature engine agrees with closed formulas", criterion_5),
        ("Sp(n) curvature tables", criterion_6),
        ("CP^(2n-1) dual-Nakano threshold", criterion_7),
        ("λ≡1 dual-Nakano semipositivity", criterion_8),
        ("table1 campaign", criterion_9),
        ("height3, maximal, g2 and f4 campaigns", criterion_10),
        ("regauging invariance", criterion_11),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let ((ok, detail), dt) = timed(f);
        all &= ok;
        println!("{} criterion {}: {name} ({detail}) [{:.1}s]", if ok { "PASS" } else { "FAIL" }, i + 1, dt.as_secs_f64());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
