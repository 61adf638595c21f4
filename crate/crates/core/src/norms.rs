//! Aperiodic autocorrelation, `||f||_4^4`, merit factor, and a quadrature
//! cross-check on the unit circle.
//!
//! For a length-`n` sequence, `C_u = sum_{j<u} a_j a_{j+n-u}` for
//! `1 <= u < n`, and `||f||_4^4 = n^2 + 2 sum_u C_u^2`.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::seqcore::{sample_uniform, BinarySequence, ClassKind, ClassSpec, RngStream};
use crate::{Error, ExactRational, Result};

/// Largest `n` accepted by the quadrature routines.
pub const MAX_QUADRATURE_LEN: usize = 1 << 14;

/// Relative error bound for the quadrature cross-check.
pub const CROSSCHECK_TOLERANCE: f64 = 1e-9;

/// `(C_1, ..., C_{n-1})`; `c[u - 1]` holds `C_u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutocorrelationProfile {
    pub n: usize,
    pub c: Vec<i64>,
}

impl AutocorrelationProfile {
    /// `C_u` for `1 <= u < n`.
    pub fn at(&self, u: usize) -> i64 {
        self.c[u - 1]
    }

    pub fn sum_sq(&self) -> u64 {
        self.c.iter().map(|&c| (c * c) as u64).sum()
    }
}

/// 64 bits of `words` starting at bit `start`; bits past the end read as 0.
#[inline]
fn window(words: &[u64], start: usize) -> u64 {
    let q = start / 64;
    let r = start % 64;
    let lo = words.get(q).copied().unwrap_or(0);
    if r == 0 {
        lo
    } else {
        let hi = words.get(q + 1).copied().unwrap_or(0);
        (lo >> r) | (hi << (64 - r))
    }
}

/// `C_u` by XOR and popcount: `u` minus twice the number of positions
/// `j < u` where `a_j != a_{j+n-u}`.
#[inline]
pub fn correlation_at(seq: &BinarySequence, u: usize) -> i64 {
    let n = seq.len();
    debug_assert!(u >= 1 && u < n);
    let shift = n - u;
    let words = seq.words();
    let mismatches = if n <= 64 {
        let x = words[0];
        ((x ^ (x >> shift)) & ((1u64 << u) - 1)).count_ones()
    } else {
        let full = u / 64;
        let mut total = 0u32;
        for (w, &word) in words.iter().enumerate().take(full) {
            total += (word ^ window(words, 64 * w + shift)).count_ones();
        }
        let rest = u % 64;
        if rest != 0 {
            let diff = words[full] ^ window(words, 64 * full + shift);
            total += (diff & ((1u64 << rest) - 1)).count_ones();
        }
        total
    };
    u as i64 - 2 * mismatches as i64
}

/// Bit-parallel autocorrelation profile.
pub fn autocorrelation(seq: &BinarySequence) -> AutocorrelationProfile {
    let n = seq.len();
    AutocorrelationProfile {
        n,
        c: (1..n).map(|u| correlation_at(seq, u)).collect(),
    }
}

/// Reference double loop, kept as the oracle for [`autocorrelation`].
pub fn autocorrelation_naive(seq: &BinarySequence) -> AutocorrelationProfile {
    let n = seq.len();
    let a = seq.coeffs();
    let c = (1..n)
        .map(|u| (0..u).map(|j| (a[j] * a[j + n - u]) as i64).sum())
        .collect();
    AutocorrelationProfile { n, c }
}

/// `sum_{u>=1} C_u^2` without allocating a profile.
#[inline]
pub fn sum_c_sq(seq: &BinarySequence) -> u64 {
    (1..seq.len())
        .map(|u| {
            let c = correlation_at(seq, u);
            (c * c) as u64
        })
        .sum()
}

/// `||f||_4^4 = n^2 + 2 sum C_u^2`.
#[inline]
pub fn norm4_fourth(seq: &BinarySequence) -> u64 {
    let n = seq.len() as u64;
    n * n + 2 * sum_c_sq(seq)
}

/// Merit factor `n^2 / (2 sum C_u^2)`; `None` when every `C_u` vanishes.
pub fn merit_factor(n: usize, sum_c_sq: u64) -> Option<ExactRational> {
    if sum_c_sq == 0 {
        return None;
    }
    let n = n as i128;
    ExactRational::new(n * n, 2 * sum_c_sq as i128).ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L4Report {
    pub n: usize,
    pub sum_c_sq: u64,
    pub norm4_fourth: u64,
    /// `None` marks an undefined merit factor (all `C_u = 0`).
    pub merit_factor: Option<ExactRational>,
}

pub fn l4_report(seq: &BinarySequence) -> L4Report {
    let n = seq.len();
    let s = sum_c_sq(seq);
    L4Report {
        n,
        sum_c_sq: s,
        norm4_fourth: (n * n) as u64 + 2 * s,
        merit_factor: merit_factor(n, s),
    }
}

/// Per-sequence JSON record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub n: usize,
    pub seq: String,
    pub c: Vec<i64>,
    pub sum_c_sq: u64,
    pub norm4_fourth: u64,
    pub merit_factor: Option<String>,
}

impl SequenceRecord {
    pub fn new(seq: &BinarySequence) -> Self {
        let profile = autocorrelation(seq);
        let report = l4_report(seq);
        SequenceRecord {
            n: seq.len(),
            seq: seq.to_string(),
            c: profile.c,
            sum_c_sq: report.sum_c_sq,
            norm4_fourth: report.norm4_fourth,
            merit_factor: report.merit_factor.map(|f| f.to_fraction_string()),
        }
    }
}

/// `|f(w)|^2` at the `4n` points `w = exp(2 pi i k / 4n)`.
fn circle_power(seq: &BinarySequence) -> Result<Vec<f64>> {
    let n = seq.len();
    if n > MAX_QUADRATURE_LEN {
        return Err(Error::Guardrail {
            what: "quadrature length",
            got: n as u64,
            limit: MAX_QUADRATURE_LEN as u64,
        });
    }
    let m = 4 * n;
    let mut buf = vec![Complex::new(0.0, 0.0); m];
    for (j, slot) in buf.iter_mut().enumerate().take(n) {
        *slot = Complex::new(seq.coeff(j) as f64, 0.0);
    }
    // the sign convention of the transform does not matter for |f|
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    Ok(buf.iter().map(|z| z.norm_sqr()).collect())
}

/// `(1/M) sum_k |f(exp(2 pi i k / M))|^4` with `M = 4n`. The integrand is a
/// trigonometric polynomial of degree `2(n-1)`, so this equals `||f||_4^4`
/// up to rounding.
pub fn l4_by_quadrature(seq: &BinarySequence) -> Result<f64> {
    let p = circle_power(seq)?;
    Ok(p.iter().map(|x| x * x).sum::<f64>() / p.len() as f64)
}

/// Same nodes, `|f|^2`; equals `n` for every sequence.
pub fn l2_by_quadrature(seq: &BinarySequence) -> Result<f64> {
    let p = circle_power(seq)?;
    Ok(p.iter().sum::<f64>() / p.len() as f64)
}

/// Outcome of a quadrature cross-check batch.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrosscheckSummary {
    pub class: ClassKind,
    pub n: usize,
    pub count: u64,
    pub max_rel_err_l4: f64,
    pub max_rel_err_l2: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Draws `count` members of `spec` from stream 0 of `seed` and compares
/// quadrature against the exact `||f||_4^4` and `||f||_2^2 = n`.
pub fn quadrature_crosscheck(spec: ClassSpec, count: u64, seed: u64) -> Result<CrosscheckSummary> {
    let mut rng = RngStream::new(seed, 0);
    let n = spec.n();
    let mut max_l4 = 0.0f64;
    let mut max_l2 = 0.0f64;
    for _ in 0..count {
        let seq = sample_uniform(spec, &mut rng);
        let exact = l4_report(&seq).norm4_fourth as f64;
        let l4 = l4_by_quadrature(&seq)?;
        let l2 = l2_by_quadrature(&seq)?;
        max_l4 = max_l4.max(((l4 - exact) / exact).abs());
        max_l2 = max_l2.max(((l2 - n as f64) / n as f64).abs());
    }
    Ok(CrosscheckSummary {
        class: spec.kind(),
        n,
        count,
        max_rel_err_l4: max_l4,
        max_rel_err_l2: max_l2,
        tolerance: CROSSCHECK_TOLERANCE,
        pass: max_l4 <= CROSSCHECK_TOLERANCE && max_l2 <= CROSSCHECK_TOLERANCE,
    })
}
