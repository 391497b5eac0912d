//! Brute-force verification runs: every structural law is checked on a
//! built-in corpus of five pinned rings plus `--count` seeded random
//! instances. Exit `1` if any law fails, `3` if instances were skipped for
//! budget, `0` otherwise.

use std::io::Write;

use clap::Args;

use ozone_core::{
    random_params, seeded_rng, verify_equivalences, Error, SkewParams, DEFAULT_ORACLE_BUDGET,
};

use crate::{matrix_inline, Failure, EXIT_BUDGET_EXCEEDED, EXIT_LAW_FAILURE};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Seed for the random-instance generator
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of random instances on top of the built-in corpus
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Step budget per instance for brute-force enumeration
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET as u64)]
    pub budget: u64,
}

/// The five pinned rings every verification run starts with.
pub fn corpus() -> Vec<(&'static str, SkewParams)> {
    let entries: [(&str, i64, Vec<Vec<i64>>); 5] = [
        (
            "rank4-order6",
            6,
            vec![
                vec![0, 1, 1, 3],
                vec![-1, 0, 1, 3],
                vec![-1, -1, 0, 3],
                vec![-3, -3, -3, 0],
            ],
        ),
        (
            "calabi-yau-order3",
            3,
            vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
        ),
        (
            "hypersurface-order5",
            5,
            vec![vec![0, 0, 1], vec![0, 0, -1], vec![-1, 1, 0]],
        ),
        (
            "rank3-order24-k3",
            24,
            vec![vec![0, 4, 6], vec![-4, 0, 3], vec![-6, -3, 0]],
        ),
        (
            "rank3-order24-k9",
            24,
            vec![vec![0, 4, 6], vec![-4, 0, 9], vec![-6, -9, 0]],
        ),
    ];
    entries
        .into_iter()
        .map(|(label, ell, rows)| {
            (
                label,
                SkewParams::new(ell, rows).expect("corpus entries are valid"),
            )
        })
        .collect()
}

/// Tallies from one verification run.
#[derive(Debug, Default, Clone, Copy)]
pub struct VerifyOutcome {
    pub instances_checked: usize,
    pub law_checks: usize,
    pub failures: usize,
    pub skipped: usize,
}

impl VerifyOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.failures > 0 {
            EXIT_LAW_FAILURE
        } else if self.skipped > 0 {
            EXIT_BUDGET_EXCEEDED
        } else {
            0
        }
    }
}

fn check_instance(
    label: &str,
    p: &SkewParams,
    budget: u128,
    outcome: &mut VerifyOutcome,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match verify_equivalences(p, budget) {
        Ok(laws) => {
            outcome.instances_checked += 1;
            outcome.law_checks += laws.len();
            for law in laws.iter().filter(|l| !l.holds) {
                outcome.failures += 1;
                writeln!(
                    out,
                    "FAIL {label} ell={} b={}: law {} ({})",
                    p.ell(),
                    matrix_inline(p),
                    law.law,
                    law.detail.as_deref().unwrap_or("no detail")
                )?;
            }
        }
        Err(Error::BudgetExceeded { .. }) => {
            outcome.skipped += 1;
            writeln!(
                out,
                "SKIP {label} ell={} b={}: brute-force budget {budget} exceeded",
                p.ell(),
                matrix_inline(p)
            )?;
        }
        Err(e) => {
            outcome.instances_checked += 1;
            outcome.failures += 1;
            writeln!(
                out,
                "FAIL {label} ell={} b={}: {e}",
                p.ell(),
                matrix_inline(p)
            )?;
        }
    }
    Ok(())
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<VerifyOutcome, Failure> {
    let mut outcome = VerifyOutcome::default();
    let budget = u128::from(args.budget);

    let corpus = corpus();
    let corpus_len = corpus.len();
    for (label, p) in &corpus {
        check_instance(label, p, budget, &mut outcome, out)?;
    }
    writeln!(out, "corpus: {corpus_len} instances checked")?;

    if args.count > 0 {
        let mut rng = seeded_rng(args.seed);
        for _ in 0..args.count {
            let p = random_params(&mut rng);
            check_instance("random", &p, budget, &mut outcome, out)?;
        }
        writeln!(
            out,
            "random: {} instances requested (seed {})",
            args.count, args.seed
        )?;
    }

    writeln!(
        out,
        "laws: {} checks across {} instances, {} failed, {} instances skipped",
        outcome.law_checks, outcome.instances_checked, outcome.failures, outcome.skipped
    )?;
    Ok(outcome)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<i32, Failure> {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let outcome = run_verify(args, &mut lock)?;
    Ok(outcome.exit_code())
}
