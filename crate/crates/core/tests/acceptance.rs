//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use intertwine::arithmetic::{gamma_ratio, gamma_ratio_numeric, rat, to_f64};
use intertwine::torus::{bl_identity, p_identity, residual_sweep, BasisConvention, TorusBasis};
use intertwine::verify::{self, CheckReport, GridSpec, Status};
use intertwine::{Execution, ExtendedScalar, Rational};

const GAMMA_REL_TOL: f64 = 1e-10;
const GAMMA_POINTS: usize = 1000;
const GAMMA_BUDGET: Duration = Duration::from_secs(5);
const DIAMOND_BUDGET: Duration = Duration::from_secs(60);
const DIAMOND_MIN_POINTS: usize = 10_000;
const LEADING_MIN_PARAMS: usize = 20;
const TORUS_M: i64 = 24;
const TORUS_TOL: f64 = 1e-9;
const TORUS_BUDGET: Duration = Duration::from_secs(120);

struct Gate {
    failed: usize,
}

impl Gate {
    fn line(&mut self, n: u32, name: &str, ok: bool, detail: String) {
        if !ok {
            self.failed += 1;
        }
        println!("{} criterion {n} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn counts(report: &CheckReport) -> String {
    let s = report.summary();
    format!("pass={} fail={} skipped={} identities={}", s.pass, s.fail, s.skipped_degenerate, s.identities)
}

fn first_failure(report: &CheckReport) -> String {
    report
        .failures()
        .next()
        .map(|f| format!(" first failure: {:?} at p={} q={} k={} a={} jp={:?} j={:?} r={}", f.identity, f.p, f.q, f.k, f.a, f.jp, f.j, f.r))
        .unwrap_or_default()
}

/// Γ((x+r)/2)/Γ((x-r)/2) against its functional equation and the floating engine.
fn gamma_engine() -> (bool, String) {
    let mut points = 0;
    let mut worst: f64 = 0.0;
    let mut functional_ok = true;
    'outer: for n in -160..=160i64 {
        for r in -2..=3i64 {
            if points == GAMMA_POINTS {
                break 'outer;
            }
            // x on a quarter-integer lattice, shifted off the integers
            let x: Rational = rat(4 * n + 1, 8);
            let Ok(exact) = gamma_ratio(&x, r) else { continue };
            points += 1;
            let shifted = gamma_ratio(&(&x + rat(2, 1)), r).expect("off-lattice");
            let factor = ExtendedScalar::quotient(&x + rat(r, 1), &x - rat(r, 1)).expect("x ≠ ±r");
            functional_ok &= exact.mul(&factor).ok() == Some(shifted);
            let float = gamma_ratio_numeric(to_f64(&x), r as f64).expect("off-pole").to_f64();
            let e = to_f64(exact.exact().expect("finite"));
            worst = worst.max(((e - float) / e.abs().max(f64::MIN_POSITIVE)).abs());
        }
    }
    let ok = functional_ok && points == GAMMA_POINTS && worst < GAMMA_REL_TOL;
    (ok, format!("{points} points, functional equation {functional_ok}, max rel err {worst:.2e} (tol {GAMMA_REL_TOL:e})"))
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };
    let grid = GridSpec::default();
    let exec = Execution::default();

    let t = Instant::now();
    let (ok, detail) = gamma_engine();
    let el = t.elapsed();
    gate.line(1, "gamma engine", ok && el < GAMMA_BUDGET, format!("{detail}, {el:.2?} (budget {GAMMA_BUDGET:?})"));

    let t = Instant::now();
    let diamond = verify::run_diamond_checks_with(&verify::Standard, &grid, exec);
    let el = t.elapsed();
    let valid = diamond.records.iter().filter(|r| r.status != Status::SkippedDegenerate).count();
    gate.line(
        2,
        "diamond consistency",
        diamond.all_pass() && valid >= DIAMOND_MIN_POINTS && el < DIAMOND_BUDGET,
        format!("{}, valid points {valid} (min {DIAMOND_MIN_POINTS}), {el:.2?} (budget {DIAMOND_BUDGET:?}){}", counts(&diamond), first_failure(&diamond)),
    );

    let interface = verify::run_interface_checks_with(&verify::Standard, &grid, exec);
    gate.line(3, "interface equations", interface.all_pass(), format!("{}{}", counts(&interface), first_failure(&interface)));

    let det = verify::run_det_checks_with(&verify::Standard, &grid, exec);
    gate.line(4, "determinant factorization", det.all_pass(), format!("{}{}", counts(&det), first_failure(&det)));

    let d2rk = verify::run_d2rk_checks_with(&verify::Standard, &grid, exec);
    let (points, symbols): (Vec<_>, Vec<_>) = d2rk.records.iter().cloned().partition(|r| r.jp.is_some());
    let points = CheckReport { suite: "d2rk", records: points };
    gate.line(5, "D_2,k consistency", points.all_pass(), format!("{}{}", counts(&points), first_failure(&points)));

    let symbols = CheckReport { suite: "d2rk", records: symbols };
    let per_r: Vec<usize> = (1..=4)
        .map(|r| symbols.records.iter().filter(|x| x.r == r && x.status == Status::Pass).count())
        .collect();
    gate.line(
        6,
        "leading symbol",
        symbols.all_pass() && per_r.iter().all(|&n| n >= LEADING_MIN_PARAMS),
        format!("{}, parameter sets passing for r=1..4: {per_r:?} (min {LEADING_MIN_PARAMS}){}", counts(&symbols), first_failure(&symbols)),
    );

    let t = Instant::now();
    let residuals = residual_sweep(TORUS_M, &[0, 1, 2], &[1, 2, 3], BasisConvention::Standard, TORUS_TOL, exec);
    let identities: Vec<_> = (0..=2u8)
        .flat_map(|k| {
            let b = TorusBasis::new(TORUS_M, k).expect("valid basis");
            [bl_identity(&b), p_identity(&b)]
        })
        .collect();
    let el = t.elapsed();
    let (ok, detail) = match residuals {
        Ok(reps) => {
            let worst = reps.iter().map(|r| r.float).fold(0.0, f64::max);
            let exact_zero = reps.iter().all(|r| r.exact == Rational::from_integer(0.into()));
            let ids = identities.iter().all(|i| matches!(i, Ok(rep) if rep.holds));
            (
                reps.iter().all(|r| r.status == Status::Pass) && ids && el < TORUS_BUDGET,
                format!("{} residuals, max float {worst:.2e} (tol {TORUS_TOL:e}), exact all zero {exact_zero}, identities hold {ids}, {el:.2?} (budget {TORUS_BUDGET:?})", reps.len()),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    gate.line(7, "torus realization", ok, detail);

    let small = common::small_grid();
    let controls = common::control_reports(&small, exec);
    let flagged: Vec<String> = controls.iter().map(|c| format!("{}={}", c.suite, c.summary().fail)).collect();
    let torus_control = residual_sweep(6, &[1], &[1], BasisConvention::Reflected, TORUS_TOL, exec)
        .map(|r| r[0].status == Status::Fail)
        .unwrap_or(false);
    gate.line(
        8,
        "negative controls",
        controls.iter().all(|c| c.summary().fail > 0) && torus_control,
        format!("failures flagged: {}, torus reflected frame flagged {torus_control}", flagged.join(" ")),
    );

    if gate.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
