//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::time::{Duration, Instant};

use modcohom::cohom::{compute_label, CohomError};
use modcohom::linalg::{rank_and_kernel_with, Strategy};
use modcohom::repr::{verma_quotient, weyl_module};
use modcohom::suite::{self, Row, SuiteName, SuiteOutcome};
use modcohom::{AlgebraKind, CohomologyReport, ModuleFamily, ModuleLabel, PrimeField, SparseMat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    criterion: usize,
    title: String,
    failures: Vec<String>,
    notes: Vec<String>,
    elapsed: Duration,
}

impl Verdict {
    fn print(&self) {
        let tag = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{tag} [{}] {} ({:.1}s)",
            self.criterion,
            self.title,
            self.elapsed.as_secs_f64()
        );
        for f in &self.failures {
            println!("       {f}");
        }
        for n in &self.notes {
            println!("       note: {n}");
        }
    }
}

fn source(p: u32) -> impl Fn(AlgebraKind, &ModuleLabel) -> Result<CohomologyReport, CohomError> + Sync {
    move |kind, m| compute_label(p, kind, m)
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(f)
}

fn row_failures<'a>(rows: impl IntoIterator<Item = &'a Row>) -> Vec<String> {
    rows.into_iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: expected {}, got {}", r.id, r.expected, r.actual))
        .collect()
}

fn run_suite(name: SuiteName, p: u32) -> Result<SuiteOutcome, String> {
    suite::run(name, p, &source(p)).map_err(|e| format!("{name} at p={p}: {e}"))
}

fn criterion(
    criterion: usize,
    title: &str,
    limit: Option<Duration>,
    body: impl FnOnce() -> Result<(Vec<String>, Vec<String>), String>,
) -> Verdict {
    let start = Instant::now();
    let (mut failures, notes) = body().unwrap_or_else(|e| (vec![format!("error: {e}")], vec![]));
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            failures.push(format!(
                "took {:.1}s, limit {:.0}s",
                elapsed.as_secs_f64(),
                limit.as_secs_f64()
            ));
        }
    }
    Verdict {
        criterion,
        title: title.to_string(),
        failures,
        notes,
        elapsed,
    }
}

fn theorem_rows(p: u32) -> Result<Vec<String>, String> {
    let out = run_suite(SuiteName::Theorem1, p)?;
    Ok(row_failures(
        out.rows.iter().filter(|r| !r.id.starts_with("simple modules with")),
    ))
}

fn oracle_rank(p: u64, m: &[Vec<u64>]) -> usize {
    let mut a = m.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(i) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, i);
        let inv = (1..p).find(|x| a[rank][c] * x % p == 1).unwrap();
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * inv % p;
                for j in 0..cols {
                    a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_rank_trials(p: u64, trials: usize) -> Vec<String> {
    let field = PrimeField::new(p as i64).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024 + p);
    let mut failures = Vec::new();
    for t in 0..trials {
        let (rows, cols) = (rng.gen_range(1..=50), rng.gen_range(1..=50));
        let density: f64 = rng.gen_range(0.02..0.8);
        let m: Vec<Vec<u64>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| if rng.gen_bool(density) { rng.gen_range(1..p) } else { 0 })
                    .collect()
            })
            .collect();
        let dense: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let s = SparseMat::from_dense(&field, &dense);
        let expected = oracle_rank(p, &m);
        for strategy in [Strategy::Sparse, Strategy::default()] {
            let (rank, kernel) = rank_and_kernel_with(&field, &s, strategy);
            let kernel_ok = kernel.dim() + rank == cols
                && kernel.vectors().iter().all(|v| s.mul_vec(&field, v).is_empty());
            if rank != expected || !kernel_ok {
                failures.push(format!("F_{p} trial {t} {strategy:?}: rank {rank}, oracle {expected}"));
            }
        }
    }
    failures
}

fn main() {
    let mut verdicts = Vec::new();

    verdicts.push(criterion(
        1,
        "six peculiar simple modules at p=5 reproduce the theorem table",
        Some(Duration::from_secs(120)),
        || Ok((single_threaded(|| theorem_rows(5))?, vec![])),
    ));

    verdicts.push(criterion(
        2,
        "full scan of the 25 restricted simple modules at p=5",
        Some(Duration::from_secs(15 * 60)),
        || {
            let found = single_threaded(|| suite::peculiar_scan(5, ModuleFamily::Simple, &source(5)))
                .map_err(|e| e.to_string())?;
            let expected = vec![(0, 0), (0, 2), (1, 3), (2, 0), (3, 1), (3, 3)];
            let failures = if found == expected {
                vec![]
            } else {
                vec![format!("nonzero at {found:?}, expected {expected:?}")]
            };
            Ok((failures, vec![format!("nonzero cohomology at {found:?}")]))
        },
    ));

    verdicts.push(criterion(
        3,
        "six peculiar simple modules at p=7 reproduce the theorem table",
        Some(Duration::from_secs(30 * 60)),
        || {
            let mut failures = theorem_rows(7)?;
            let found = suite::peculiar_scan(7, ModuleFamily::Simple, &source(7)).map_err(|e| e.to_string())?;
            let expected = vec![(0, 0), (0, 4), (1, 5), (4, 0), (5, 1), (5, 5)];
            if found != expected {
                failures.push(format!("nonzero at {found:?}, expected {expected:?}"));
            }
            Ok((failures, vec![]))
        },
    ));

    verdicts.push(criterion(
        4,
        "weight-5ω1 block dimensions for L(3,1) and L(2,0) at p=5",
        None,
        || {
            let out = run_suite(SuiteName::LemmaBlocks, 5)?;
            Ok((
                row_failures(out.rows.iter().filter(|r| r.id.contains(" block "))),
                vec![],
            ))
        },
    ));

    verdicts.push(criterion(
        5,
        "gl3 tables at p=5, split formula and direct 9-dimensional complex",
        None,
        || Ok((row_failures(&run_suite(SuiteName::Corollary1, 5)?.rows), vec![])),
    ));

    verdicts.push(criterion(
        6,
        "induced- and Weyl-module tables at p=5",
        None,
        || {
            let mut failures = row_failures(&run_suite(SuiteName::Corollary2, 5)?.rows);
            failures.extend(row_failures(&run_suite(SuiteName::Corollary3, 5)?.rows));
            let h = compute_label(5, AlgebraKind::Sl3, &"induced:3,3".parse().unwrap()).map_err(|e| e.to_string())?;
            let v = compute_label(5, AlgebraKind::Sl3, &"weyl:3,3".parse().unwrap()).map_err(|e| e.to_string())?;
            let notes = vec![
                format!("H(induced:3,3) dims {:?}", h.dims()),
                format!("H(weyl:3,3) dims {:?}", v.dims()),
            ];
            Ok((failures, notes))
        },
    ));

    verdicts.push(criterion(
        7,
        "H^0..H^4 of H^0(3,3) at p=5 by direct computation",
        None,
        || {
            let out = run_suite(SuiteName::LemmaBlocks, 5)?;
            Ok((
                row_failures(out.rows.iter().filter(|r| r.id.contains("low degrees"))),
                vec![],
            ))
        },
    ));

    verdicts.push(criterion(8, "property suite at p=5 and p=7", None, || {
        let mut failures = Vec::new();
        let mut notes = Vec::new();
        for p in [5, 7] {
            let out = run_suite(SuiteName::Properties, p)?;
            failures.extend(row_failures(&out.rows).into_iter().map(|f| format!("p={p}: {f}")));
            notes.extend(out.notes.iter().map(|n| format!("p={p}: {n}")));
        }
        Ok((failures, notes))
    }));

    verdicts.push(criterion(
        9,
        "sparse elimination vs dense oracle; Weyl dimensions vs closed form",
        None,
        || {
            let mut failures = Vec::new();
            let mut notes = Vec::new();
            for p in [5u64, 7] {
                failures.extend(random_rank_trials(p, 200));
            }
            for p in [5u32, 7] {
                for r in 0..=p - 2 {
                    for s in 0..=p - 2 {
                        let expected = ((r + 1) * (s + 1) * (r + s + 2) / 2) as usize;
                        let dim = weyl_module(p, r, s).map_err(|e| e.to_string())?.dim();
                        if dim != expected {
                            failures.push(format!("V({r},{s}) at p={p}: dim {dim}, closed form {expected}"));
                        }
                        let quotient = verma_quotient(p, r, s).map_err(|e| e.to_string())?.dim();
                        if quotient != expected {
                            notes.push(format!(
                                "p={p}: W({r},{s}) modulo the two generators has dim {quotient}, closed form {expected}"
                            ));
                        }
                    }
                }
            }
            Ok((failures, notes))
        },
    ));

    for v in &verdicts {
        v.print();
    }
    let failed = verdicts.iter().filter(|v| !v.failures.is_empty()).count();
    println!("acceptance: {} passed, {} failed", verdicts.len() - failed, failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
