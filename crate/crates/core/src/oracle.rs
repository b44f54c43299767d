//! Brute-force ground truth over the words of B₀(n).
//!
//! Everything here works by exhaustive enumeration and shares no code with
//! the generating-function path in [`crate::counts`].

use std::fmt;
use std::str::FromStr;

use crate::counts::BigCount;
use crate::error::Error;

/// Longest word a [`BinaryWord`] can hold.
pub const MAX_WORD_LEN: usize = 64;

/// Default largest `n` the enumerators accept.
pub const DEFAULT_ENUMERATION_GUARD: usize = 30;

/// A finite binary word, packed MSB-first: the first symbol is the highest
/// of the `len` low bits of `bits`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    len: usize,
    bits: u64,
}

impl BinaryWord {
    pub const EMPTY: BinaryWord = BinaryWord { len: 0, bits: 0 };

    /// Builds a word from its packed value. Bits above `len` must be clear.
    pub fn from_bits(len: usize, bits: u64) -> Result<Self, Error> {
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong {
                len,
                max: MAX_WORD_LEN,
            });
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::InvalidWord(format!(
                "value {bits:#b} does not fit in {len} symbols"
            )));
        }
        Ok(BinaryWord { len, bits })
    }

    pub fn from_symbols<I: IntoIterator<Item = u8>>(symbols: I) -> Result<Self, Error> {
        let mut len = 0;
        let mut bits = 0u64;
        for s in symbols {
            if s > 1 {
                return Err(Error::InvalidWord(format!("symbol {s} is not 0 or 1")));
            }
            if len == MAX_WORD_LEN {
                return Err(Error::WordTooLong {
                    len: len + 1,
                    max: MAX_WORD_LEN,
                });
            }
            bits = (bits << 1) | u64::from(s);
            len += 1;
        }
        Ok(BinaryWord { len, bits })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Symbol at position `i`, counting from the left.
    pub fn get(&self, i: usize) -> u8 {
        assert!(
            i < self.len,
            "index {i} out of range for word of length {}",
            self.len
        );
        ((self.bits >> (self.len - 1 - i)) & 1) as u8
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Whether the word lies in B₀(len): empty, or starting with 0.
    pub fn in_b0(&self) -> bool {
        self.len == 0 || self.get(0) == 0
    }

    /// The complement `op(w)`: every 0 becomes 1 and vice versa.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord {
            len: self.len,
            bits: !self.bits & mask(self.len),
        }
    }

    pub fn concat(&self, other: &BinaryWord) -> Result<BinaryWord, Error> {
        let len = self.len + other.len;
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong {
                len,
                max: MAX_WORD_LEN,
            });
        }
        let bits = if other.len == 64 {
            other.bits
        } else {
            (self.bits << other.len) | other.bits
        };
        Ok(BinaryWord { len, bits })
    }

    fn require_b0(&self) -> Result<(), Error> {
        if self.in_b0() {
            Ok(())
        } else {
            Err(Error::NotInB0(self.to_string()))
        }
    }
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            f.write_str(if s == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidWord(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        BinaryWord::from_symbols(symbols)
    }
}

/// One maximal run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub symbol: u8,
    pub len: usize,
}

/// The maximal-run decomposition of a word, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunProfile {
    pub runs: Vec<Run>,
}

impl RunProfile {
    pub fn word_len(&self) -> usize {
        self.runs.iter().map(|r| r.len).sum()
    }

    /// Number of runs of length exactly `r`.
    pub fn count_len(&self, r: usize) -> usize {
        self.runs.iter().filter(|run| run.len == r).count()
    }

    /// Number of runs of 1s of length exactly `r`.
    pub fn count_success(&self, r: usize) -> usize {
        self.runs
            .iter()
            .filter(|run| run.symbol == 1 && run.len == r)
            .count()
    }

    /// Concatenates the runs back into a word.
    pub fn to_word(&self) -> Result<BinaryWord, Error> {
        BinaryWord::from_symbols(
            self.runs
                .iter()
                .flat_map(|run| std::iter::repeat_n(run.symbol, run.len)),
        )
    }
}

pub fn run_profile(w: &BinaryWord) -> RunProfile {
    let mut runs: Vec<Run> = Vec::new();
    for s in w.symbols() {
        match runs.last_mut() {
            Some(last) if last.symbol == s => last.len += 1,
            _ => runs.push(Run { symbol: s, len: 1 }),
        }
    }
    RunProfile { runs }
}

/// Exhaustive enumerator of B₀(n) with a configurable size guard.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    guard: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            guard: DEFAULT_ENUMERATION_GUARD,
        }
    }
}

impl Oracle {
    /// An oracle accepting `n <= guard`. The guard is capped at
    /// [`MAX_WORD_LEN`].
    pub fn with_guard(guard: usize) -> Self {
        Oracle {
            guard: guard.min(MAX_WORD_LEN),
        }
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn check_guard(&self, n: usize) -> Result<(), Error> {
        if n > self.guard {
            Err(Error::EnumerationGuard {
                n,
                guard: self.guard,
            })
        } else {
            Ok(())
        }
    }

    /// All words of B₀(n) in lexicographic order.
    pub fn enumerate_b0(&self, n: usize) -> Result<impl Iterator<Item = BinaryWord>, Error> {
        self.check_guard(n)?;
        let total: u64 = if n == 0 { 1 } else { 1u64 << (n - 1) };
        Ok((0..total).map(move |bits| BinaryWord { len: n, bits }))
    }

    /// Words of B₀(n) with exactly `k` maximal runs of length `r`.
    pub fn words_exact(&self, n: usize, r: usize, k: usize) -> Result<Vec<BinaryWord>, Error> {
        require_positive_r(r)?;
        Ok(self
            .enumerate_b0(n)?
            .filter(|w| run_profile(w).count_len(r) == k)
            .collect())
    }

    pub fn brute_count_exact(&self, n: usize, r: usize, k: usize) -> Result<BigCount, Error> {
        require_positive_r(r)?;
        let count = self
            .enumerate_b0(n)?
            .filter(|w| run_profile(w).count_len(r) == k)
            .count();
        Ok(BigCount::from(count as u64))
    }

    /// Words of B₀(n) with exactly `k` maximal runs of 1s of length `r`.
    pub fn brute_count_success(&self, n: usize, r: usize, k: usize) -> Result<BigCount, Error> {
        require_positive_r(r)?;
        let count = self
            .enumerate_b0(n)?
            .filter(|w| run_profile(w).count_success(r) == k)
            .count();
        Ok(BigCount::from(count as u64))
    }

    /// Tally of B₀(n) by run count: entry `[r][k]` is the number of words
    /// with exactly `k` runs of length `r` (for `1 <= r <= n`). One pass
    /// over the words serves every `(r, k)`.
    pub fn exact_table(&self, n: usize) -> Result<Vec<Vec<u64>>, Error> {
        self.tally(n, |profile, r| profile.count_len(r))
    }

    /// Same as [`Oracle::exact_table`] for success runs.
    pub fn success_table(&self, n: usize) -> Result<Vec<Vec<u64>>, Error> {
        self.tally(n, |profile, r| profile.count_success(r))
    }

    fn tally(
        &self,
        n: usize,
        stat: impl Fn(&RunProfile, usize) -> usize,
    ) -> Result<Vec<Vec<u64>>, Error> {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for w in self.enumerate_b0(n)? {
            let profile = run_profile(&w);
            for (r, row) in table.iter_mut().enumerate().skip(1) {
                row[stat(&profile, r)] += 1;
            }
        }
        Ok(table)
    }
}

fn require_positive_r(r: usize) -> Result<(), Error> {
    if r == 0 {
        Err(Error::ZeroRunLength)
    } else {
        Ok(())
    }
}

/// Replaces every maximal run by a block `01…1` of the same length.
pub fn gamma(w: &BinaryWord) -> Result<BinaryWord, Error> {
    w.require_b0()?;
    let mut bits = 0u64;
    for run in run_profile(w).runs {
        // shift in one 0, then len-1 ones
        bits <<= run.len;
        bits |= mask(run.len - 1);
    }
    Ok(BinaryWord { len: w.len, bits })
}

/// Inverse of [`gamma`]: splits into blocks `01…1` and writes them back as
/// alternating constant runs, 0s first.
pub fn gamma_inv(w: &BinaryWord) -> Result<BinaryWord, Error> {
    w.require_b0()?;
    let mut out = Vec::with_capacity(w.len());
    let mut block = 0usize;
    for (i, s) in w.symbols().enumerate() {
        if s == 0 && i > 0 {
            block += 1;
        }
        out.push((block % 2) as u8);
    }
    BinaryWord::from_symbols(out)
}

/// The split `w = w₀ r₁ w₁ … r_k w_k` of a word around its runs of length
/// `r`: each `rᵢ` is one such run and each `wᵢ` (possibly empty) is the
/// stretch between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSplit {
    pub gaps: Vec<BinaryWord>,
    pub runs: Vec<BinaryWord>,
}

impl RunSplit {
    pub fn reassemble(&self) -> Result<BinaryWord, Error> {
        let mut word = self.gaps[0];
        for (run, gap) in self.runs.iter().zip(&self.gaps[1..]) {
            word = word.concat(run)?.concat(gap)?;
        }
        Ok(word)
    }

    /// Lengths of the gaps `w₀ … w_k`.
    pub fn gap_lengths(&self) -> Vec<usize> {
        self.gaps.iter().map(BinaryWord::len).collect()
    }
}

pub fn split_at_runs(w: &BinaryWord, r: usize) -> Result<RunSplit, Error> {
    require_positive_r(r)?;
    let mut gaps = Vec::new();
    let mut runs = Vec::new();
    let mut gap: Vec<u8> = Vec::new();
    for run in run_profile(w).runs {
        let symbols = std::iter::repeat_n(run.symbol, run.len);
        if run.len == r {
            gaps.push(BinaryWord::from_symbols(gap.drain(..))?);
            runs.push(BinaryWord::from_symbols(symbols)?);
        } else {
            gap.extend(symbols);
        }
    }
    gaps.push(BinaryWord::from_symbols(gap)?);
    Ok(RunSplit { gaps, runs })
}
