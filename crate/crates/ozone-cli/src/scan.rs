//! Grid scan: classify every ring on a parameter grid and emit a TSV table.
//!
//! The grid for `--n N --ell LO..HI` is every upper-triangle tuple with
//! entries in `[0, ell)` for every `ell` in the range. Rows appear in
//! lexicographic `(ell, tuple)` order, and the output is a pure function of
//! the flags: worker count never changes a byte.

use std::io::Write;

use clap::Args;
use rayon::prelude::*;

use ozone_core::{classification_report, Error, SkewParams};

use crate::{Failure, EXIT_BUDGET_EXCEEDED, EXIT_INVALID_INPUT};

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Number of variables (2, 3, or 4)
    #[arg(long)]
    pub n: usize,
    /// Root-of-unity order, or an inclusive range "LO..HI"
    #[arg(long)]
    pub ell: String,
    /// Keep only the lexicographically least tuple of each orbit under
    /// simultaneous row/column permutation
    #[arg(long)]
    pub canonical: bool,
    /// Restrict to one upper-triangle tuple "b12,b13,...", reduced mod ell
    #[arg(long, allow_hyphen_values = true)]
    pub only: Option<String>,
    /// Refuse (exit 3) grids with more matrices than this
    #[arg(long, default_value_t = 1_000_000)]
    pub max_rows: u64,
    /// Worker threads (default: all cores); never affects the output bytes
    #[arg(long)]
    pub threads: Option<usize>,
}

/// One emitted table row.
struct Row {
    ell: i64,
    tuple: Vec<i64>,
    f: Vec<i64>,
    order: u128,
    auslander: bool,
    regular: bool,
    gorenstein: bool,
    calabi_yau: bool,
}

fn parse_failure(message: String) -> Failure {
    Failure { code: EXIT_INVALID_INPUT, message }
}

/// Parses "LO..HI" or a single value; both bounds must be at least 2.
pub fn parse_ell_spec(spec: &str) -> Result<(i64, i64), Failure> {
    let spec = spec.trim();
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse::<i64>().map_err(|e| {
                parse_failure(format!("Parse: bad --ell range start {a:?}: {e}"))
            })?;
            let hi = b.trim().parse::<i64>().map_err(|e| {
                parse_failure(format!("Parse: bad --ell range end {b:?}: {e}"))
            })?;
            (lo, hi)
        }
        None => {
            let v = spec
                .parse::<i64>()
                .map_err(|e| parse_failure(format!("Parse: bad --ell value {spec:?}: {e}")))?;
            (v, v)
        }
    };
    if lo < 2 || hi < lo {
        return Err(parse_failure(format!(
            "Parse: --ell range must satisfy 2 <= LO <= HI, got {lo}..{hi}"
        )));
    }
    Ok((lo, hi))
}

fn parse_only(spec: &str, m: usize, n: usize) -> Result<Vec<i64>, Failure> {
    let entries: Result<Vec<i64>, _> = spec
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect();
    let entries =
        entries.map_err(|e| parse_failure(format!("Parse: bad --only entry: {e}")))?;
    if entries.len() != m {
        return Err(parse_failure(format!(
            "Parse: --only needs {m} comma-separated entries for n={n}, got {}",
            entries.len()
        )));
    }
    Ok(entries)
}

/// All permutations of `0..n` in a deterministic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut items, 0, &mut out);
    out
}

/// Rebuilds the full matrix (entries in `[0, ell)`) from an upper tuple.
fn full_matrix(ell: i64, n: usize, tuple: &[i64]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            m[i][j] = tuple[k];
            m[j][i] = (ell - tuple[k]).rem_euclid(ell);
            k += 1;
        }
    }
    m
}

fn upper_tuple(m: &[Vec<i64>], perm: &[usize]) -> Vec<i64> {
    let n = m.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(m[perm[i]][perm[j]]);
        }
    }
    out
}

/// Whether `tuple` is the lexicographically least member of its orbit under
/// simultaneous row/column permutation.
fn is_lex_least(ell: i64, n: usize, tuple: &[i64], perms: &[Vec<usize>]) -> bool {
    let m = full_matrix(ell, n, tuple);
    perms
        .iter()
        .all(|perm| upper_tuple(&m, perm).as_slice() >= tuple)
}

/// Advances `digits` as a most-significant-first odometer in base `radix`;
/// returns false after the last tuple.
fn advance(digits: &mut [i64], radix: i64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn compute_row(ell: i64, n: usize, tuple: &[i64]) -> Result<Option<Row>, Error> {
    let p = match SkewParams::from_upper(ell, n, tuple) {
        Ok(p) => p,
        // Degenerate grid cells (the commutative all-zero tuple) are
        // skipped, not fatal.
        Err(_) => return Ok(None),
    };
    let report = classification_report(&p)?;
    Ok(Some(Row {
        ell,
        tuple: tuple.to_vec(),
        f: report.invariants.f,
        order: report.invariants.order_o,
        auslander: report.classification.auslander,
        regular: report.classification.regular,
        gorenstein: report.classification.gorenstein,
        calabi_yau: report.classification.calabi_yau,
    }))
}

fn joined(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub fn run_scan(args: &ScanArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let n = args.n;
    if !(2..=4).contains(&n) {
        return Err(parse_failure(format!(
            "Parse: scan supports n = 2, 3, or 4, got {n}"
        )));
    }
    let (lo, hi) = parse_ell_spec(&args.ell)?;
    let m = n * (n - 1) / 2;
    let only = match &args.only {
        Some(spec) => Some(parse_only(spec, m, n)?),
        None => None,
    };

    if only.is_none() {
        let mut total: u128 = 0;
        for ell in lo..=hi {
            let cell = (ell as u128).checked_pow(m as u32);
            total = cell
                .and_then(|c| total.checked_add(c))
                .unwrap_or(u128::MAX);
        }
        if total > u128::from(args.max_rows) {
            return Err(Failure {
                code: EXIT_BUDGET_EXCEEDED,
                message: format!(
                    "BudgetExceeded: the scan grid holds {total} matrices, \
                     more than --max-rows {}",
                    args.max_rows
                ),
            });
        }
    }

    let perms = permutations(n);
    let mut items: Vec<(i64, Vec<i64>)> = Vec::new();
    match &only {
        Some(tuple) => {
            for ell in lo..=hi {
                let reduced: Vec<i64> = tuple.iter().map(|&v| v.rem_euclid(ell)).collect();
                items.push((ell, reduced));
            }
        }
        None => {
            for ell in lo..=hi {
                let mut digits = vec![0i64; m];
                loop {
                    if !args.canonical || is_lex_least(ell, n, &digits, &perms) {
                        items.push((ell, digits.clone()));
                    }
                    if !advance(&mut digits, ell) {
                        break;
                    }
                }
            }
        }
    }

    let compute_all = || -> Result<Vec<Option<Row>>, Error> {
        items
            .par_iter()
            .map(|(ell, tuple)| compute_row(*ell, n, tuple))
            .collect()
    };
    let rows = match args.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| parse_failure(format!("Parse: cannot build thread pool: {e}")))?
            .install(compute_all),
        None => compute_all(),
    }?;

    let mut header = format!(
        "# scan n={n} ell={lo}..{hi} canonical={}",
        args.canonical
    );
    if let Some(tuple) = &only {
        header.push_str(&format!(" only={}", joined(tuple)));
    }
    writeln!(out, "{header}")?;
    writeln!(
        out,
        "# columns: ell\tb\tf\torder\tauslander\tregular\tgorenstein\tcalabi_yau"
    )?;

    let mut emitted = 0u64;
    let mut skipped = 0u64;
    let mut counts = [0u64; 4];
    for row in rows.into_iter() {
        let Some(row) = row else {
            skipped += 1;
            continue;
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.ell,
            joined(&row.tuple),
            joined(&row.f),
            row.order,
            row.auslander,
            row.regular,
            row.gorenstein,
            row.calabi_yau
        )?;
        emitted += 1;
        for (slot, flag) in counts.iter_mut().zip([
            row.auslander,
            row.regular,
            row.gorenstein,
            row.calabi_yau,
        ]) {
            *slot += u64::from(flag);
        }
    }
    writeln!(
        out,
        "# rows={emitted} skipped={skipped} auslander={} regular={} gorenstein={} calabi_yau={}",
        counts[0], counts[1], counts[2], counts[3]
    )?;
    Ok(())
}

pub fn cmd_scan(args: &ScanArgs) -> Result<i32, Failure> {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_scan(args, &mut lock)?;
    Ok(0)
}
