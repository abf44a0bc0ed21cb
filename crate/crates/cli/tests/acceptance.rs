//! Acceptance criteria AC1-AC9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use duadiq::distance::{Budget, DistanceResult, ResultKind};
use duadiq::duadic::Construction;
use duadiq::stabilizer::{Agreement, Degenerate, StabilizerParams};
use duadiq_cli::report::{BuildReport, Status, VerifyReport};
use duadiq_cli::{build_report, EXIT_OK, EXIT_PARTIAL};
use serde_json::Value;
use std::process::Command;
use std::time::{Duration, Instant};

const FAST: Duration = Duration::from_secs(1);
const AC4_LIMIT: Duration = Duration::from_secs(5);
const AC5_LIMIT: Duration = Duration::from_secs(600);
const AC5_WORKERS: usize = 4;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ord(n: u64, q: u64) -> u64 {
    let mut x = q % n;
    let mut t = 1;
    while x != 1 {
        x = x * q % n;
        t += 1;
    }
    t
}

fn exact(r: &DistanceResult) -> Result<u64, String> {
    match (r.kind, r.exact()) {
        (ResultKind::Exact, Some(v)) => Ok(v),
        _ => Err(format!("expected an exact value, got {r}")),
    }
}

fn timed_build(c: Construction, n: u32, q: u64, workers: usize) -> Result<(BuildReport, Duration), String> {
    let budget = Budget::default().with_workers(workers);
    let start = Instant::now();
    let r = build_report(c, n, q, None, &budget).map_err(|e| e.to_string())?;
    Ok((r, start.elapsed()))
}

fn check_exact_css(
    n: u32,
    expect_d: u64,
    expect_mu_minus_one: bool,
    limit: Duration,
) -> Result<(BuildReport, Duration), String> {
    let (r, t) = timed_build(Construction::Css, n, 2, 1)?;
    let p: &StabilizerParams = &r.params;
    ensure(p.k == 1, || format!("k = {}", p.k))?;
    let d = exact(&p.d)?;
    ensure(d == expect_d, || format!("d = {d}, expected {expect_d}"))?;
    ensure(exact(&p.d_cross_check)? == d, || "D1 odd-like weight differs".into())?;
    if let Some(direct) = &p.d_direct {
        ensure(exact(direct)? == d, || format!("direct CSS distance {direct} differs"))?;
    }
    ensure(r.status == Status::Exact, || "status not exact".into())?;
    ensure(r.splitting.given_by_mu_minus_one == expect_mu_minus_one, || {
        format!("mu_-1 splitting flag {}", r.splitting.given_by_mu_minus_one)
    })?;
    ensure((ord(n as u64, 2) % 2 == 1) == expect_mu_minus_one, || "order parity".into())?;
    ensure(d * d >= n as u64, || "d^2 < n".into())?;
    if expect_mu_minus_one {
        ensure(d * d - d + 1 >= n as u64, || "d^2 - d + 1 < n".into())?;
    }
    ensure(!r.params.bounds.is_violated(), || "bound report flags a violation".into())?;
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok((r, t))
}

fn ac1() -> Outcome {
    let (r, t) = check_exact_css(7, 3, true, FAST)?;
    let purity = exact(&r.params.purity)?;
    ensure(purity == 4, || format!("purity {purity}"))?;
    ensure(r.params.degenerate == Degenerate::No, || format!("{:?}", r.params.degenerate))?;
    ensure(r.params.label() == "[[7,1,3]]_2", || r.params.label())?;
    Ok(format!("{} purity 4 nondegenerate, 9-3+1 = 7 >= 7, {t:?}", r.params.label()))
}

fn ac2() -> Outcome {
    let (r, t) = check_exact_css(17, 5, false, FAST)?;
    ensure(ord(17, 2) == 8, || "ord_17(2)".into())?;
    Ok(format!("{} exact, 25 >= 17, mu_-1 does not split (ord 8), {t:?}", r.params.label()))
}

fn ac3() -> Outcome {
    let (r, t) = check_exact_css(23, 7, true, FAST)?;
    ensure(ord(23, 2) == 11, || "ord_23(2)".into())?;
    Ok(format!("{} exact, mu_-1 splitting (ord 11), 43 >= 23, {t:?}", r.params.label()))
}

fn ac4() -> Outcome {
    let (r, t) = check_exact_css(31, 7, true, AC4_LIMIT)?;
    ensure(ord(31, 2) == 5, || "ord_31(2)".into())?;
    Ok(format!("{} exact, ord 5, 43 >= 31, {t:?}", r.params.label()))
}

fn ac5() -> Outcome {
    let (r, t) = timed_build(Construction::Css, 49, 2, AC5_WORKERS)?;
    let p = &r.params;
    let purity = exact(&p.purity)?;
    ensure(purity == 4, || format!("purity {purity}"))?;
    let d = exact(&p.d)?;
    ensure(exact(&p.d_cross_check)? == d, || "D1 odd-like weight differs".into())?;
    ensure(d >= 8 && d * d - d + 1 >= 49, || format!("d = {d}"))?;
    ensure(p.degenerate == Degenerate::Yes, || format!("{:?}", p.degenerate))?;
    ensure(r.verdict.agreement == Agreement::Agrees, || format!("verdict {:?}", r.verdict.agreement))?;
    ensure(t <= AC5_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{} purity 4 degenerate, {t:?} with {AC5_WORKERS} workers", p.label()))
}

fn ac6() -> Outcome {
    let (r, t) = timed_build(Construction::Hermitian, 7, 2, 1)?;
    let p = &r.params;
    ensure(r.quartet.field_order == 4, || format!("field {}", r.quartet.field_order))?;
    ensure(p.k == 1 && exact(&p.d)? == 3, || p.label())?;
    ensure(p.hermitian_dual_matrix_checked == Some(true), || "matrix dual not checked".into())?;
    ensure(t < FAST, || format!("took {t:?}"))?;
    Ok(format!("{} over GF(4), dual equality by defining sets and matrices, {t:?}", p.label()))
}

fn ac7() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_duadiq"))
        .args(["verify", "--q", "2", "--max-n", "61"])
        .output()
        .map_err(|e| e.to_string())?;
    let r: VerifyReport = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(EXIT_OK), || format!("exit {:?}", out.status.code()))?;
    ensure(r.total_failed == 0, || format!("{} violations", r.total_failed))?;
    let required = [
        "existence",
        "odd_like_equality",
        "square_root_bounds",
        "dual_formula",
        "mu_equivalence",
        "mu_minus_one_vs_mu_minus_q",
    ];
    for name in required {
        let s = r
            .suites
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| format!("suite {name} missing"))?;
        ensure(s.passed > 0 && s.failed == 0 && s.skipped == 0, || {
            format!("{name}: {} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped)
        })?;
    }
    let odd_lengths = (3..=61u64).step_by(2).count() as u64;
    let existence = r.suites.iter().find(|s| s.name == "existence").unwrap();
    ensure(existence.passed == odd_lengths, || format!("existence covered {}", existence.passed))?;
    let odd_order = (3..=61u64).step_by(2).filter(|&n| ord(n, 2) % 2 == 1).count() as u64;
    let lemma = r.suites.iter().find(|s| s.name == "mu_minus_one_vs_mu_minus_q").unwrap();
    ensure(lemma.passed == odd_order, || format!("odd-order lengths covered {}", lemma.passed))?;
    let total: u64 = r.suites.iter().map(|s| s.passed).sum();
    Ok(format!("{total} assertions, 0 violations"))
}

fn ac8() -> Outcome {
    let (r, t) = timed_build(Construction::Hermitian, 343, 2, 1)?;
    let c = &r.certificate;
    ensure(c.order == ord(343, 2), || format!("order {}", c.order))?;
    ensure(c.conditions.order_odd == Some(true), || "order parity".into())?;
    let p7 = c.primes.iter().find(|d| d.p == 7).ok_or("prime 7 missing")?;
    ensure(c.primes.len() == 1 && p7.p_is_minus_one_mod_4, || "7 = -1 mod 4".into())?;
    ensure(p7.m == 3 && p7.z == 1 && p7.multiplicity_exceeds, || format!("m = {}, z = {}", p7.m, p7.z))?;
    ensure(c.conditions.predicts, || "hypotheses not all met".into())?;
    ensure(!r.params.d.is_exact() && r.params.d.lo < r.params.d.hi, || format!("d = {}", r.params.d))?;
    ensure(r.params.degenerate == Degenerate::Undecided, || format!("{:?}", r.params.degenerate))?;
    ensure(r.verdict.agreement == Agreement::Undecided, || format!("{:?}", r.verdict.agreement))?;
    ensure(r.status == Status::Partial, || "status".into())?;
    let code = Command::new(env!("CARGO_BIN_EXE_duadiq"))
        .args(["exists", "343", "4"])
        .output()
        .map_err(|e| e.to_string())?
        .status
        .code();
    ensure(code == Some(EXIT_OK), || format!("exists 343 4 exit {code:?}"))?;
    Ok(format!(
        "ord 147, m = 3 > 2z = 2, d in {}, purity in {}, undecided, {t:?}",
        r.params.d, r.params.purity
    ))
}

/// Pretty JSON with the `timing` object removed, compared byte for byte.
fn strip_timing(text: &str) -> String {
    let mut out = String::new();
    let mut skipping = false;
    for line in text.lines() {
        if line.trim_start().starts_with("\"timing\": {") {
            skipping = true;
        }
        if !skipping {
            out.push_str(line);
            out.push('\n');
        }
        if skipping && line.trim_start().starts_with('}') {
            skipping = false;
        }
    }
    out
}

fn run_json(args: &[&str], workers: usize) -> Result<(String, Option<i32>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_duadiq"))
        .args(args)
        .args(["--workers", &workers.to_string()])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((text, out.status.code()))
}

fn ac9() -> Outcome {
    let cases: [(&[&str], i32); 4] = [
        (&["build", "css", "31", "2"], EXIT_OK),
        (&["build", "css", "49", "2"], EXIT_OK),
        (&["build", "hermitian", "23", "2", "--budget", "2^12"], EXIT_PARTIAL),
        (&["survey", "--q", "2", "--max-n", "31"], EXIT_OK),
    ];
    let mut compared = 0;
    for (args, code) in cases {
        let (base, c0) = run_json(args, 1)?;
        ensure(c0 == Some(code), || format!("{args:?} exit {c0:?}"))?;
        let base_stripped = strip_timing(&base);
        ensure(base_stripped.len() < base.len(), || "timing block not found".into())?;
        let v: Value = serde_json::from_str(&base).map_err(|e| e.to_string())?;
        ensure(v.get("timing").is_some(), || "timing missing".into())?;
        for workers in [1, 2, 4] {
            let (other, c) = run_json(args, workers)?;
            ensure(c == c0, || format!("{args:?} exit code varies"))?;
            ensure(strip_timing(&other) == base_stripped, || {
                format!("{args:?} differs with --workers {workers}")
            })?;
            compared += 1;
        }
    }
    Ok(format!("{compared} reruns byte-identical outside timing"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
