//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Criteria run sequentially so timings are not skewed by
//! other tests.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use runcount::counts::pmf;
use runcount::oracle::{gamma, gamma_inv, run_profile, Oracle};
use runcount::{count_exact_runs, count_success_runs, w_count, w_series, BigCount, CountTriple};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: usize, r: usize, k: usize) -> CountTriple {
    CountTriple::new(n, r, k).unwrap()
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed < budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn golden_word_lists() -> Outcome {
    let start = Instant::now();
    let o = Oracle::default();
    let cases: [(usize, usize, usize, &[&str]); 2] = [
        (6, 1, 0, &["000000", "000011", "000111", "001100", "001111"]),
        (
            6,
            2,
            2,
            &["001101", "001001", "001011", "011001", "011011", "010011"],
        ),
    ];
    for (n, r, k, expected) in cases {
        let got: BTreeSet<String> = o
            .words_exact(n, r, k)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        let want: BTreeSet<String> = expected.iter().map(|s| s.to_string()).collect();
        if got != want {
            return Err(format!("B0({n},{r},{k}) = {got:?}, expected {want:?}"));
        }
        let formula = count_exact_runs(q(n, r, k));
        if formula != BigCount::from(expected.len() as u64) {
            return Err(format!(
                "N({n},{r},{k}) = {formula}, expected {}",
                expected.len()
            ));
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{:?}", start.elapsed()))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let o = Oracle::default();
    let mut checked = 0;
    for n in 0..=14usize {
        let exact = o.exact_table(n).unwrap();
        let success = o.success_table(n).unwrap();
        for r in 1..=n {
            for k in 0..=n / r {
                let (e, s) = (count_exact_runs(q(n, r, k)), count_success_runs(q(n, r, k)));
                if e != BigCount::from(exact[r][k]) || s != BigCount::from(success[r][k]) {
                    return Err(format!(
                        "({n},{r},{k}): N={e} vs {}, M={s} vs {}",
                        exact[r][k], success[r][k]
                    ));
                }
                checked += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{checked} triples in {:?}", start.elapsed()))
}

fn normalization_at_scale() -> Outcome {
    let start = Instant::now();
    for (n, r) in [(240, 1), (240, 2), (240, 3), (1000, 1)] {
        let p = pmf(n, r).map_err(|e| e.to_string())?;
        if p.numerator_sum() != BigCount::pow2(n as u64 - 1) || !p.is_normalized() {
            return Err(format!("sum over k of N({n},{r},k) != 2^{}", n - 1));
        }
    }
    Ok(format!("{:?}", start.elapsed()))
}

fn case_anchors() -> Outcome {
    for r in 2..=12usize {
        let a = count_exact_runs(q(r, r, 0));
        let b = count_exact_runs(q(r + 1, r, 0));
        let want_a = BigCount::from((1u64 << (r - 1)) - 1);
        let want_b = BigCount::from((1u64 << r) - 2);
        if a != want_a || b != want_b {
            return Err(format!("r={r}: N(r,r,0)={a}, N(r+1,r,0)={b}"));
        }
    }
    // 1, then the Fibonacci numbers 0, 1, 1, 2, ...
    let mut expected = vec![1u64, 0, 1];
    while expected.len() <= 30 {
        let l = expected.len();
        expected.push(expected[l - 1] + expected[l - 2]);
    }
    for (n, &f) in expected.iter().enumerate() {
        let w = w_count(n as i64, 1).unwrap();
        if w != BigCount::from(f) {
            return Err(format!("W({n},1) = {w}, expected {f}"));
        }
    }
    Ok("r = 2..12, W(n,1) for n <= 30".into())
}

fn figure_slices() -> Outcome {
    let start = Instant::now();
    let slices = [(1, 30..=100), (2, 10..=50), (3, 10..=50)];
    let mut points = 0;
    for (r, ks) in slices {
        let p = pmf(240, r).map_err(|e| e.to_string())?;
        if !p.is_normalized() {
            return Err(format!("PMF of K_240^{r} does not sum to 1"));
        }
        for k in ks {
            let e = &p.entries[k];
            if e.denominator_exponent != 239 {
                return Err(format!(
                    "r={r} k={k}: denominator 2^{}",
                    e.denominator_exponent
                ));
            }
            points += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{points} points in {:?}", start.elapsed()))
}

fn full_distribution_n1000() -> Outcome {
    let start = Instant::now();
    let p = pmf(1000, 1).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if p.entries.len() != 1001 {
        return Err(format!("{} entries", p.entries.len()));
    }
    if p.numerator_sum().into_inner() != BigUint::from(1u8) << 999u32 {
        return Err("numerators do not sum to 2^999".into());
    }
    // spot values against the pointwise coefficient extraction
    for k in [0, 1, 2, 333, 500, 999, 1000] {
        if p.entries[k].numerator != count_exact_runs(q(1000, 1, k)) {
            return Err(format!("k={k} disagrees with pointwise extraction"));
        }
    }
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("{elapsed:?}"))
}

fn bijection_suite() -> Outcome {
    let start = Instant::now();
    let o = Oracle::default();
    for n in 0..=14usize {
        let mut images = BTreeSet::new();
        for w in o.enumerate_b0(n).unwrap() {
            let g = gamma(&w).unwrap();
            if gamma_inv(&g).unwrap() != w || gamma(&gamma_inv(&w).unwrap()).unwrap() != w {
                return Err(format!("round trip fails at {w}"));
            }
            images.insert(g);
        }
        let size = if n == 0 { 1 } else { 1usize << (n - 1) };
        if images.len() != size {
            return Err(format!("gamma is not onto B0({n})"));
        }
        for r in 1..n {
            let mut runs = vec![0u64; n + 1];
            let mut coded = vec![0u64; n + 1];
            for w in o.enumerate_b0(n).unwrap() {
                runs[run_profile(&w).count_len(r + 1)] += 1;
                coded[run_profile(&gamma(&w).unwrap()).count_success(r)] += 1;
            }
            if runs != coded {
                return Err(format!("image counts differ at n={n} r={r}"));
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{:?}", start.elapsed()))
}

fn dual_path() -> Outcome {
    for r in 1..=8 {
        let s = w_series(r, 64).unwrap();
        for n in 0..=64 {
            let rec = w_count(n as i64, r).unwrap().into_inner();
            if s.coeff(n).to_biguint().as_ref() != Some(&rec) {
                return Err(format!(
                    "W({n},{r}): series {} vs recursion {rec}",
                    s.coeff(n)
                ));
            }
        }
    }
    Ok("n <= 64, r <= 8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 golden word lists", golden_word_lists),
        ("2 oracle equivalence n<=14", oracle_equivalence),
        ("3 normalization at scale", normalization_at_scale),
        ("4 case anchors", case_anchors),
        ("5 figure slices under 1 s", figure_slices),
        ("6 full PMF n=1000 under 120 s", full_distribution_n1000),
        ("7 bijection suite", bijection_suite),
        ("8 series vs recursion", dual_path),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({detail})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
