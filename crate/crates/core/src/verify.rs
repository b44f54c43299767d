//! Formula-versus-enumeration sweep behind `runcount verify`.

use std::fmt;

use crate::counts::{count_exact_runs, count_success_runs, BigCount, CountTriple};
use crate::error::Error;
use crate::oracle::{gamma, gamma_inv, run_profile, BinaryWord, Oracle};

/// The counting functions under test. The sweep only ever sees them
/// through this trait, so a deliberately broken implementation can be
/// swapped in to check that the harness notices.
pub trait RunCounter {
    fn exact(&self, q: CountTriple) -> BigCount;
    fn success(&self, q: CountTriple) -> BigCount;
}

/// The generating-function counters from [`crate::counts`].
#[derive(Clone, Copy, Debug, Default)]
pub struct FormulaCounter;

impl RunCounter for FormulaCounter {
    fn exact(&self, q: CountTriple) -> BigCount {
        count_exact_runs(q)
    }

    fn success(&self, q: CountTriple) -> BigCount {
        count_success_runs(q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Exact,
    Success,
    AllWords,
    Normalization,
    GammaRoundTrip,
    GammaCoding,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Exact => "exact-runs",
            Check::Success => "success-runs",
            Check::AllWords => "all-words",
            Check::Normalization => "normalization",
            Check::GammaRoundTrip => "gamma-roundtrip",
            Check::GammaCoding => "gamma-coding",
        })
    }
}

/// One failed comparison. `k` is absent for checks that are not per-`k`;
/// `r` is absent for the round-trip check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: Check,
    pub n: usize,
    pub r: Option<usize>,
    pub k: Option<usize>,
    pub formula: String,
    pub oracle: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.check, self.n)?;
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, ": formula {} vs oracle {}", self.formula, self.oracle)
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare(
        &mut self,
        check: Check,
        n: usize,
        r: Option<usize>,
        k: Option<usize>,
        formula: impl ToString,
        oracle: impl ToString,
    ) {
        self.comparisons += 1;
        let (formula, oracle) = (formula.to_string(), oracle.to_string());
        if formula != oracle {
            self.mismatches.push(Mismatch {
                check,
                n,
                r,
                k,
                formula,
                oracle,
            });
        }
    }
}

/// Checks `counter` against exhaustive enumeration for every `n <= n_max`,
/// `1 <= r <= min(n, r_max)` and `0 <= k <= n / r`, plus the gamma
/// bijection on every word of B₀(n). Fails before sweeping if `n_max` is
/// past the oracle's guard.
pub fn verify_sweep(
    oracle: &Oracle,
    n_max: usize,
    r_max: Option<usize>,
    counter: &dyn RunCounter,
) -> Result<VerifyReport, Error> {
    oracle.check_guard(n_max)?;
    if r_max == Some(0) {
        return Err(Error::ZeroRunLength);
    }
    let mut report = VerifyReport::default();
    for n in 0..=n_max {
        sweep_counts(oracle, n, r_max, counter, &mut report)?;
        sweep_gamma(oracle, n, &mut report)?;
    }
    Ok(report)
}

fn sweep_counts(
    oracle: &Oracle,
    n: usize,
    r_max: Option<usize>,
    counter: &dyn RunCounter,
    report: &mut VerifyReport,
) -> Result<(), Error> {
    let exact = oracle.exact_table(n)?;
    let success = oracle.success_table(n)?;
    let all = all_words_table(n);
    let total = if n == 0 {
        BigCount::from(1u64)
    } else {
        BigCount::pow2(n as u64 - 1)
    };
    let r_top = r_max.map_or(n, |m| n.min(m));
    for r in 1..=r_top {
        let mut sum = BigCount::zero();
        for k in 0..=n / r {
            let q = CountTriple::new(n, r, k)?;
            let f = counter.exact(q);
            report.compare(Check::Exact, n, Some(r), Some(k), &f, exact[r][k]);
            report.compare(
                Check::Success,
                n,
                Some(r),
                Some(k),
                counter.success(q),
                success[r][k],
            );
            report.compare(
                Check::AllWords,
                n,
                Some(r),
                Some(k),
                f.value() << 1u8,
                all[r][k],
            );
            sum = sum + f;
        }
        report.compare(Check::Normalization, n, Some(r), None, sum, &total);
    }
    if n == 0 {
        // only the empty word: one word, no runs of any length
        for r in 1..=r_max.unwrap_or(1) {
            let q = CountTriple::new(0, r, 0)?;
            report.compare(Check::Exact, 0, Some(r), Some(0), counter.exact(q), 1);
            report.compare(Check::Success, 0, Some(r), Some(0), counter.success(q), 1);
        }
    }
    Ok(())
}

/// Tally over all `2^n` words (either leading symbol), indexed `[r][k]`.
fn all_words_table(n: usize) -> Vec<Vec<u64>> {
    let mut table = vec![vec![0u64; n + 1]; n + 1];
    if n == 0 {
        return table;
    }
    for bits in 0..(1u64 << n) {
        let w = BinaryWord::from_bits(n, bits).expect("n within word limit");
        let profile = run_profile(&w);
        for (r, row) in table.iter_mut().enumerate().skip(1) {
            row[profile.count_len(r)] += 1;
        }
    }
    table
}

fn sweep_gamma(oracle: &Oracle, n: usize, report: &mut VerifyReport) -> Result<(), Error> {
    let mut round_trip_failures = 0usize;
    let mut images = Vec::new();
    for w in oracle.enumerate_b0(n)? {
        let g = gamma(&w)?;
        if gamma_inv(&g)? != w || gamma(&gamma_inv(&w)?)? != w {
            round_trip_failures += 1;
        }
        images.push(g);
        let before = run_profile(&w);
        let after = run_profile(&g);
        for r in 1..n {
            let runs = before.count_len(r + 1);
            let success = after.count_success(r);
            if runs != success {
                report.compare(Check::GammaCoding, n, Some(r), Some(runs), success, runs);
            }
        }
    }
    let domain = images.len();
    images.sort_unstable();
    images.dedup();
    report.compare(Check::GammaRoundTrip, n, None, None, round_trip_failures, 0);
    report.compare(Check::GammaRoundTrip, n, None, None, images.len(), domain);
    // coding property as image counting: |γ(B₀(n, r+1, k))| = M(n, r, k)
    for r in 1..n {
        let mut runs_tally = vec![0u64; n + 1];
        let mut image_tally = vec![0u64; n + 1];
        for w in oracle.enumerate_b0(n)? {
            runs_tally[run_profile(&w).count_len(r + 1)] += 1;
            image_tally[run_profile(&gamma(&w)?).count_success(r)] += 1;
        }
        for k in 0..=n {
            report.compare(
                Check::GammaCoding,
                n,
                Some(r),
                Some(k),
                image_tally[k],
                runs_tally[k],
            );
        }
    }
    Ok(())
}
