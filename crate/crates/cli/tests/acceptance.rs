//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p skewgini-cli --test acceptance`.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewgini::oracle::{
    parse_decimal, rational_report, rational_report_from_lorenz, rationals_from_integers,
};
use skewgini::{
    apply_transfer, build_dataset, generate, metrics_from_lorenz, pairwise_gini, report,
    sensitivity_sweep, ExperimentConfig, Family, InequalityReport, SkewDirection, TransferSpec,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const FIGURE: [i64; 10] = [2, 3, 4, 6, 8, 12, 14, 16, 17, 18];
const RED_Q: [&str; 10] = [
    "0.06", "0.12", "0.18", "0.24", "0.30", "0.36", "0.43", "0.50", "0.66", "1",
];
const BLUE_Q: [&str; 10] = [
    "0.01", "0.03", "0.06", "0.11", "0.24", "0.38", "0.53", "0.67", "0.83", "1",
];

const CORPUS_SIZE: usize = 1000;
const CORPUS_SEED: u64 = 20_240_601;

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    let diff = (a - b).abs();
    diff <= tol * a.abs().max(b.abs()) || diff <= 1e-15
}

fn fields(r: &InequalityReport) -> [f64; 4] {
    [r.gini, r.g_right, r.g_left, r.sag]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random integer datasets, n in [2, 200], values in [-10, 10^6], positive totals.
fn corpus() -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::with_capacity(CORPUS_SIZE);
    while out.len() < CORPUS_SIZE {
        let n = rng.random_range(2..=200usize);
        let v: Vec<i64> = match out.len() % 4 {
            0 => (0..n).map(|_| rng.random_range(-10..=1_000_000)).collect(),
            1 => (0..n).map(|_| rng.random_range(-10..=40)).collect(),
            2 => (0..n)
                .map(|_| {
                    if rng.random_bool(0.6) {
                        0
                    } else {
                        rng.random_range(1..=10)
                    }
                })
                .collect(),
            _ => (0..n)
                .map(|_| {
                    let u: f64 = rng.random_range(0.0..1.0);
                    ((u.powi(4) * 1e6).round() as i64).max(-10)
                })
                .collect(),
        };
        if v.iter().sum::<i64>() > 0 {
            out.push(v);
        }
    }
    out
}

fn to_f64(v: &[i64]) -> Vec<f64> {
    v.iter().map(|&x| x as f64).collect()
}

fn lorenz_points(q: &[&str]) -> Vec<(f64, f64)> {
    q.iter()
        .enumerate()
        .map(|(i, s)| ((i + 1) as f64 / q.len() as f64, s.parse().unwrap()))
        .collect()
}

fn ac1() -> Outcome {
    let r = report(&build_dataset(&to_f64(&FIGURE)).unwrap());
    for (name, v) in ["gini", "g_right", "g_left", "sag"].iter().zip(fields(&r)) {
        ensure((v - 0.33).abs() <= 1e-12, || format!("{name} = {v}"))?;
    }
    ensure(r.skew_direction == SkewDirection::Symmetric, || {
        format!("skew {}", r.skew_direction)
    })?;
    Ok(format!("G = G_R = G_L = SAG = {:.15}", r.gini))
}

fn lorenz_fixture(
    q: &[&str],
    golden: [f64; 4],
    golden_exact: [BigRational; 4],
    skew: SkewDirection,
) -> Outcome {
    let exact: Vec<BigRational> = q.iter().map(|s| parse_decimal(s).unwrap()).collect();
    let oracle = rational_report_from_lorenz(&exact).map_err(|e| e.to_string())?;
    let oracle = [oracle.gini, oracle.g_right, oracle.g_left, oracle.sag];
    ensure(oracle == golden_exact, || {
        format!("rational oracle gave {oracle:?}")
    })?;
    let r = metrics_from_lorenz(&lorenz_points(q)).map_err(|e| e.to_string())?;
    for ((name, v), want) in ["gini", "g_right", "g_left", "sag"]
        .iter()
        .zip(fields(&r))
        .zip(golden)
    {
        ensure((v - want).abs() <= 1e-12, || {
            format!("{name} = {v}, want {want}")
        })?;
    }
    ensure(r.skew_direction == skew, || {
        format!("skew {}", r.skew_direction)
    })?;
    Ok(format!(
        "G {:.4} G_R {:.4} G_L {:.4} SAG {:.4} skew {} convex {}",
        r.gini, r.g_right, r.g_left, r.sag, r.skew_direction, r.convex
    ))
}

fn ac2() -> Outcome {
    lorenz_fixture(
        &RED_Q,
        [0.33, 0.4036, 0.2564, 0.4036],
        [
            frac(33, 100),
            frac(1009, 2500),
            frac(641, 2500),
            frac(1009, 2500),
        ],
        SkewDirection::Right,
    )
}

fn ac3() -> Outcome {
    lorenz_fixture(
        &BLUE_Q,
        [0.328, 0.3116, 0.3444, 0.3444],
        [
            frac(41, 125),
            frac(779, 2500),
            frac(861, 2500),
            frac(861, 2500),
        ],
        SkewDirection::Left,
    )
}

fn ac4() -> Outcome {
    let mut detail = Vec::new();
    for n in [10usize, 1_000, 1_000_000] {
        let start = Instant::now();
        let cfg = ExperimentConfig::new(Family::OneHolder, n, 1, 0).map_err(|e| e.to_string())?;
        let r = report(&generate(&cfg, 0).map_err(|e| e.to_string())?);
        let elapsed = start.elapsed();
        let nb = BigInt::from(n);
        let squares = (&nb - 1) * &nb * (BigInt::from(2) * &nb - 1) / 6;
        let closed = BigRational::new(BigInt::from(4) * squares, &nb * &nb * &nb);
        let closed = skewgini::oracle::rational_to_f64(&closed);
        let nf = n as f64;
        ensure(rel_close(r.g_right, closed, 1e-12), || {
            format!("n={n}: G_R {} vs closed form {closed}", r.g_right)
        })?;
        ensure((r.g_right - 4.0 / 3.0).abs() < 3.0 / nf, || {
            format!("n={n}: |G_R - 4/3| too large")
        })?;
        ensure((r.g_left - 2.0 / 3.0).abs() < 3.0 / nf, || {
            format!("n={n}: |G_L - 2/3| too large")
        })?;
        ensure(elapsed < Duration::from_secs(5), || {
            format!("n={n} took {elapsed:?}")
        })?;
        detail.push(format!("n={n}: G_R={:.9} G_L={:.9}", r.g_right, r.g_left));
    }
    Ok(detail.join("; "))
}

/// Room for a rank-preserving transfer between sorted positions `r < d`.
fn transfer_room(sorted: &[f64], r: usize, d: usize) -> f64 {
    let (poor, rich) = (sorted[r], sorted[d]);
    if poor >= rich {
        return 0.0;
    }
    let above = sorted
        .iter()
        .copied()
        .filter(|&v| v > poor)
        .fold(f64::INFINITY, f64::min);
    let below = sorted
        .iter()
        .copied()
        .filter(|&v| v < rich)
        .fold(f64::NEG_INFINITY, f64::max);
    if above >= rich {
        (rich - poor) / 2.0
    } else {
        (above - poor).min(rich - below)
    }
}

fn ac5(corpus: &[Vec<i64>]) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED + 5);
    let mut transfers = 0usize;
    for (idx, v) in corpus.iter().enumerate() {
        let x = to_f64(v);
        let d = build_dataset(&x).unwrap();
        let base = report(&d);

        let c: f64 = 10f64.powf(rng.random_range(-3.0..3.0));
        let scaled: Vec<f64> = x.iter().map(|v| v * c).collect();
        let s = report(&build_dataset(&scaled).unwrap());
        for (a, b) in fields(&base).iter().zip(fields(&s)) {
            ensure(rel_close(*a, b, 1e-12), || {
                format!("dataset {idx}: scale by {c}: {a} vs {b}")
            })?;
        }

        for k in [2usize, 3, 5] {
            let rep: Vec<f64> = (0..k).flat_map(|_| x.iter().copied()).collect();
            let p = report(&build_dataset(&rep).unwrap());
            for (a, b) in fields(&base).iter().zip(fields(&p)) {
                ensure(rel_close(*a, b, 1e-10), || {
                    format!("dataset {idx}: replicate x{k}: {a} vs {b}")
                })?;
            }
        }

        let n = d.len();
        for _ in 0..64 {
            let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
            if a == b {
                continue;
            }
            let (r, dn) = (a.min(b), a.max(b));
            let room = transfer_room(d.sorted(), r, dn) - 2e-9 * d.mean();
            let amount = rng.random_range(0.05..0.95) * room;
            if amount <= 0.0 || 4.0 * amount / (d.total() * (n * n) as f64) <= 1e-12 {
                continue;
            }
            let t = TransferSpec {
                donor_rank: dn + 1,
                recipient_rank: r + 1,
                amount,
            };
            let after = apply_transfer(&d, &t).map_err(|e| format!("dataset {idx}: {e}"))?;
            ensure(rel_close(after.total(), d.total(), 1e-12), || {
                format!("dataset {idx}: total changed")
            })?;
            let moved = report(&after);
            for (b, a) in fields(&base).iter().zip(fields(&moved)) {
                ensure(a < *b, || {
                    format!("dataset {idx}: transfer {t:?} did not lower index ({b} -> {a})")
                })?;
            }
            transfers += 1;
            break;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    ensure(transfers >= CORPUS_SIZE * 9 / 10, || {
        format!("only {transfers} transfers exercised")
    })?;
    Ok(format!(
        "{} datasets, {transfers} transfers, {elapsed:.1?}",
        corpus.len()
    ))
}

fn ac6(corpus: &[Vec<i64>]) -> Outcome {
    let start = Instant::now();
    for (idx, v) in corpus.iter().enumerate() {
        let x = to_f64(v);
        let r = report(&build_dataset(&x).unwrap());
        let pg = pairwise_gini(&x).unwrap();
        ensure(rel_close(r.gini, pg, 1e-10), || {
            format!("dataset {idx}: gini {} vs pairwise {pg}", r.gini)
        })?;
        let exact = rational_report(&rationals_from_integers(v))
            .unwrap()
            .to_f64();
        for (a, b) in fields(&r).iter().zip(exact) {
            ensure(rel_close(*a, b, 1e-12), || {
                format!("dataset {idx}: {a} vs rational {b}")
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} datasets, {elapsed:.1?}", corpus.len()))
}

fn palindromic_datasets() -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED + 7);
    let mut out = vec![FIGURE.to_vec()];
    for _ in 0..200 {
        let centre = rng.random_range(0..=500_000i64);
        let pairs = rng.random_range(1..=99usize);
        let mut v = Vec::new();
        for _ in 0..pairs {
            let dev = rng.random_range(0..=centre + 10);
            v.push(centre - dev);
            v.push(centre + dev);
        }
        if rng.random_bool(0.5) {
            v.push(centre);
        }
        if v.iter().sum::<i64>() > 0 {
            out.push(v);
        }
    }
    out
}

fn ac7(corpus: &[Vec<i64>]) -> Outcome {
    for (idx, v) in corpus.iter().enumerate() {
        let r = report(&build_dataset(&to_f64(v)).unwrap());
        ensure(
            rel_close((r.g_right + r.g_left) / 2.0, r.gini, 1e-12),
            || format!("dataset {idx}: mean identity"),
        )?;
        ensure(rel_close(r.sag, r.g_right.max(r.g_left), 1e-12), || {
            format!("dataset {idx}: max form")
        })?;
        ensure(r.sag >= r.gini, || format!("dataset {idx}: sag < gini"))?;
    }
    let pal = palindromic_datasets();
    for (idx, v) in pal.iter().enumerate() {
        let d = build_dataset(&to_f64(v)).unwrap();
        ensure(
            skewgini::lorenz_curve(&d).gaps().is_palindrome(1e-12),
            || format!("symmetric dataset {idx} gaps not palindromic"),
        )?;
        let r = report(&d);
        ensure((r.g_right - r.g_left).abs() < 1e-12, || {
            format!(
                "symmetric dataset {idx}: |G_R - G_L| = {}",
                (r.g_right - r.g_left).abs()
            )
        })?;
    }
    Ok(format!(
        "{} corpus datasets, {} palindromic datasets",
        corpus.len(),
        pal.len()
    ))
}

fn ac8() -> Outcome {
    let start = Instant::now();
    let logn = ExperimentConfig::new(Family::Lognormal { sigma: 1.0 }, 5000, 200, 7).unwrap();
    let table = sensitivity_sweep(&logn).map_err(|e| e.to_string())?;
    let again = sensitivity_sweep(&logn).map_err(|e| e.to_string())?;
    ensure(table == again, || {
        "lognormal sweep not deterministic".into()
    })?;
    let med_r = table.summary_for("g_right").unwrap().median;
    let med_l = table.summary_for("g_left").unwrap().median;
    ensure(med_r > med_l, || {
        format!("lognormal median G_R {med_r} <= median G_L {med_l}")
    })?;

    let tri = ExperimentConfig::new(
        Family::SymmetricTriangular {
            low: 0.0,
            high: 2.0,
        },
        5000,
        200,
        7,
    )
    .unwrap();
    let t = sensitivity_sweep(&tri).map_err(|e| e.to_string())?;
    ensure(t == sensitivity_sweep(&tri).unwrap(), || {
        "triangular sweep not deterministic".into()
    })?;
    let mut diffs: Vec<f64> = t
        .rows
        .iter()
        .map(|r| (r.g_right - r.g_left).abs())
        .collect();
    diffs.sort_by(f64::total_cmp);
    let med_abs = skewgini::sweep::quantile_sorted(&diffs, 0.5);
    ensure(med_abs < 0.01, || {
        format!("triangular median |G_R - G_L| = {med_abs}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "lognormal median G_R {med_r:.4} > G_L {med_l:.4}; triangular median |G_R - G_L| {med_abs:.2e}; {elapsed:.1?}"
    ))
}

fn ac9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_skewgini");
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let cases: [(&str, &[&str]); 3] = [
        ("figure_symmetric.csv", &["--header"]),
        ("figure_right_skewed.csv", &["--header", "--from-lorenz"]),
        ("figure_left_skewed.csv", &["--header", "--from-lorenz"]),
    ];
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let o = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.success(), || {
            format!("{args:?}: {}", String::from_utf8_lossy(&o.stderr))
        })?;
        Ok(o.stdout)
    };
    for (file, extra) in cases {
        let path = fixtures.join(file);
        let path = path.to_str().unwrap();
        let mut json = vec!["compute", "--input", path, "--no-provenance"];
        json.extend(extra);
        let mut svg = vec!["lorenz", "--input", path];
        svg.extend(extra);
        for args in [json, svg] {
            let (a, b) = (run(&args)?, run(&args)?);
            ensure(!a.is_empty() && a == b, || {
                format!("{file}: outputs differ for {:?}", args[0])
            })?;
        }
    }
    Ok("JSON and SVG identical across runs for 3 fixtures".into())
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("AC1 symmetric figure fixture", Box::new(ac1)),
        ("AC2 right-skewed figure fixture", Box::new(ac2)),
        ("AC3 left-skewed figure fixture", Box::new(ac3)),
        ("AC4 one-holder bound convergence", Box::new(ac4)),
        ("AC5 axiom suite", Box::new(|| ac5(&corpus))),
        ("AC6 oracle equivalence", Box::new(|| ac6(&corpus))),
        ("AC7 structural identities", Box::new(|| ac7(&corpus))),
        ("AC8 Monte-Carlo direction check", Box::new(ac8)),
        ("AC9 CLI determinism", Box::new(ac9)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
