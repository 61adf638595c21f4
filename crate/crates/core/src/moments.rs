//! Mean and variance of `||f||_4^4` over a class: exact by exhaustive
//! enumeration, through the `E`/`V` decomposition, from the closed forms,
//! and estimated by Monte Carlo sampling.
//!
//! Exact routes accumulate raw power sums `S1 = sum x`, `S2 = sum x^2` so
//! that partial results merge associatively and independently of how the
//! class is partitioned.

use std::io::Write;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::closedform::{mean_formula, variance_formula};
use crate::norms::{correlation_at, norm4_fourth};
use crate::parallel::{fold_ranges, map_indices};
use crate::seqcore::{sample_uniform, ClassKind, ClassSpec, EnumerationRange, RngStream};
use crate::{Error, ExactRational, Result};

/// Free-coefficient limit for [`exact_moments`].
pub const MAX_EXACT_FREE: usize = 30;
/// Free-coefficient limit for [`prop1_quantities`].
pub const MAX_PROP1_FREE: usize = 24;
/// Minimum Monte Carlo sample count.
pub const MIN_SAMPLES: u64 = 1_000;
/// Samples drawn from one RNG stream; stream `i` serves samples
/// `[i * SAMPLE_CHUNK, (i + 1) * SAMPLE_CHUNK)`.
pub const SAMPLE_CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Enumeration,
    Formula,
    MonteCarlo,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Enumeration => "enumeration",
            Method::Formula => "formula",
            Method::MonteCarlo => "monte-carlo",
        }
    }
}

/// An exact moment, or a sample statistic with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Estimate {
    Exact(ExactRational),
    /// `value` is the sample statistic, computed exactly from the integer
    /// power sums of the sample.
    Sampled { value: ExactRational, std_err: f64 },
}

impl Estimate {
    pub fn value(&self) -> ExactRational {
        match *self {
            Estimate::Exact(v) | Estimate::Sampled { value: v, .. } => v,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value().to_f64()
    }

    pub fn std_err(&self) -> Option<f64> {
        match *self {
            Estimate::Exact(_) => None,
            Estimate::Sampled { std_err, .. } => Some(std_err),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MomentReport {
    pub spec: ClassSpec,
    pub method: Method,
    pub mean: Estimate,
    pub variance: Estimate,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub wall_time: Duration,
}

/// Flat record behind the CSV and JSON outputs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentRecord {
    pub class: ClassKind,
    pub n: usize,
    pub method: Method,
    pub mean_num: String,
    pub mean_den: String,
    pub var_num: String,
    pub var_den: String,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_std_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub var_std_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl MomentReport {
    /// `include_timing = false` drops the wall-clock field so that repeated
    /// runs produce identical output.
    pub fn record(&self, include_timing: bool) -> MomentRecord {
        let mean = self.mean.value();
        let var = self.variance.value();
        MomentRecord {
            class: self.spec.kind(),
            n: self.spec.n(),
            method: self.method,
            mean_num: mean.numer().to_string(),
            mean_den: mean.denom().to_string(),
            var_num: var.numer().to_string(),
            var_den: var.denom().to_string(),
            samples: self.samples,
            seed: self.seed,
            mean_std_err: self.mean.std_err(),
            var_std_err: self.variance.std_err(),
            wall_time_ms: include_timing.then_some(self.wall_time.as_secs_f64() * 1e3),
        }
    }
}

/// Writes `class,n,method,mean_num,mean_den,var_num,var_den,samples,seed`.
pub fn write_moments_csv<W: Write>(out: W, reports: &[MomentReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "class", "n", "method", "mean_num", "mean_den", "var_num", "var_den", "samples", "seed",
    ])?;
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in reports {
        let rec = r.record(false);
        w.write_record([
            rec.class.name().to_string(),
            rec.n.to_string(),
            rec.method.name().to_string(),
            rec.mean_num,
            rec.mean_den,
            rec.var_num,
            rec.var_den,
            opt(rec.samples),
            opt(rec.seed),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `(count, S1, S2)` over a set of sequences.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PowerSums {
    pub count: u64,
    pub s1: u64,
    pub s2: u128,
}

impl PowerSums {
    #[inline]
    pub fn push(&mut self, x: u64) {
        self.count += 1;
        self.s1 += x;
        self.s2 += (x as u128) * (x as u128);
    }

    pub fn merge(self, other: PowerSums) -> PowerSums {
        PowerSums {
            count: self.count + other.count,
            s1: self.s1 + other.s1,
            s2: self.s2 + other.s2,
        }
    }

    /// Population mean and variance, exactly.
    pub fn population_moments(&self) -> Result<(ExactRational, ExactRational)> {
        let count = self.count as i128;
        let mean = ExactRational::new(self.s1 as i128, count)?;
        let s2 = i128::try_from(self.s2).map_err(|_| Error::Overflow("power sum"))?;
        let second = ExactRational::new(s2, count)?;
        let var = second.checked_sub(mean.checked_mul(mean)?)?;
        Ok((mean, var))
    }
}

fn check_free(spec: ClassSpec, limit: usize) -> Result<()> {
    if spec.free_count() > limit {
        return Err(Error::Guardrail {
            what: "free coefficient count",
            got: spec.free_count() as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

/// Power sums of `||f||_4^4` over the given ranges.
pub fn power_sums(ranges: &[EnumerationRange]) -> PowerSums {
    fold_ranges(
        ranges,
        PowerSums::default,
        |acc, seq| acc.push(norm4_fourth(seq)),
        PowerSums::merge,
    )
}

/// Exact mean and population variance by enumerating the whole class.
pub fn exact_moments(spec: ClassSpec) -> Result<MomentReport> {
    exact_moments_partitioned(spec, 1)
}

/// [`exact_moments`] with the class first split into `parts` ranges. The
/// result does not depend on `parts`.
pub fn exact_moments_partitioned(spec: ClassSpec, parts: u64) -> Result<MomentReport> {
    check_free(spec, MAX_EXACT_FREE)?;
    let start = Instant::now();
    let ranges = EnumerationRange::full(spec)?.split(parts);
    let sums = power_sums(&ranges);
    let (mean, var) = sums.population_moments()?;
    Ok(MomentReport {
        spec,
        method: Method::Enumeration,
        mean: Estimate::Exact(mean),
        variance: Estimate::Exact(var),
        samples: None,
        seed: None,
        wall_time: start.elapsed(),
    })
}

/// The closed-form mean and variance, as a report.
pub fn formula_moments(spec: ClassSpec) -> MomentReport {
    let start = Instant::now();
    let mean = mean_formula(spec);
    let variance = variance_formula(spec);
    MomentReport {
        spec,
        method: Method::Formula,
        mean: Estimate::Exact(mean),
        variance: Estimate::Exact(variance),
        samples: None,
        seed: None,
        wall_time: start.elapsed(),
    }
}

/// `E = sum_u E(C_u^2)` and `V = sum_{u,v} E(C_u^2 C_v^2)` over a class,
/// with the mean `n^2 + 2E` and variance `4(V - E^2)` they imply.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropOneReport {
    pub class: ClassKind,
    pub n: usize,
    /// `E(C_u^2)` for `u = 1 .. n-1`.
    pub expected_c_sq: Vec<ExactRational>,
    pub e: ExactRational,
    pub v: ExactRational,
    pub mean: ExactRational,
    pub variance: ExactRational,
}

#[derive(Clone, Debug, Default)]
struct PropOneAcc {
    /// per-u sums of C_u^2
    c_sq: Vec<u64>,
    /// sum over sequences of sum_{u,v} C_u^2 C_v^2
    v: u128,
    direct: PowerSums,
}

impl PropOneAcc {
    fn merge(mut self, other: PropOneAcc) -> PropOneAcc {
        if self.c_sq.is_empty() {
            return other;
        }
        for (a, b) in self.c_sq.iter_mut().zip(&other.c_sq) {
            *a += b;
        }
        self.v += other.v;
        self.direct = self.direct.merge(other.direct);
        self
    }
}

/// Computes `E` and `V` by direct expectation over the class, derives the
/// mean and variance from them, and checks both against the directly
/// accumulated moments of `||f||_4^4`.
pub fn prop1_quantities(spec: ClassSpec) -> Result<PropOneReport> {
    check_free(spec, MAX_PROP1_FREE)?;
    let n = spec.n();
    let ranges = [EnumerationRange::full(spec)?];
    let acc = fold_ranges(
        &ranges,
        PropOneAcc::default,
        |acc, seq| {
            if acc.c_sq.is_empty() {
                acc.c_sq = vec![0; n - 1];
            }
            let mut c_sq = [0u64; 64];
            let mut total = 0u64;
            let mut cs = Vec::new();
            let squares: &mut [u64] = if n <= 64 {
                &mut c_sq[..n - 1]
            } else {
                cs.resize(n - 1, 0);
                &mut cs
            };
            for u in 1..n {
                let c = correlation_at(seq, u);
                squares[u - 1] = (c * c) as u64;
                total += squares[u - 1];
            }
            // sum_{u,v} C_u^2 C_v^2 factors as (sum_u C_u^2)^2
            let pairs = (total as u128) * (total as u128);
            for (slot, &cu) in acc.c_sq.iter_mut().zip(squares.iter()) {
                *slot += cu;
            }
            acc.v += pairs;
            acc.direct.push((n * n) as u64 + 2 * total);
        },
        PropOneAcc::merge,
    );

    let count = acc.direct.count as i128;
    let expected_c_sq = acc
        .c_sq
        .iter()
        .map(|&s| ExactRational::new(s as i128, count))
        .collect::<Result<Vec<_>>>()?;
    let e = expected_c_sq
        .iter()
        .try_fold(ExactRational::ZERO, |a, &b| a.checked_add(b))?;
    let v_sum = i128::try_from(acc.v).map_err(|_| Error::Overflow("V"))?;
    let v = ExactRational::new(v_sum, count)?;
    let n_sq = ExactRational::from_int((n * n) as i128);
    let two = ExactRational::from_int(2);
    let four = ExactRational::from_int(4);
    let mean = n_sq.checked_add(two.checked_mul(e)?)?;
    let variance = four.checked_mul(v.checked_sub(e.checked_mul(e)?)?)?;

    let (direct_mean, direct_var) = acc.direct.population_moments()?;
    if (mean, variance) != (direct_mean, direct_var) {
        return Err(Error::Inconsistent(format!(
            "{spec}: n^2 + 2E = {mean}, 4(V - E^2) = {variance}, \
             direct mean {direct_mean}, direct variance {direct_var}"
        )));
    }
    Ok(PropOneReport {
        class: spec.kind(),
        n,
        expected_c_sq,
        e,
        v,
        mean,
        variance,
    })
}

/// `||f||_4^4` for `samples` uniform draws from `spec`, in draw order.
/// Draw `i` comes from stream `i / SAMPLE_CHUNK` of `seed`, so the output
/// does not depend on the thread count.
pub fn sample_norms(spec: ClassSpec, samples: u64, seed: u64) -> Vec<u64> {
    let chunks = samples.div_ceil(SAMPLE_CHUNK);
    map_indices(chunks, |chunk| {
        let mut rng = RngStream::new(seed, chunk);
        let len = SAMPLE_CHUNK.min(samples - chunk * SAMPLE_CHUNK);
        (0..len)
            .map(|_| norm4_fourth(&sample_uniform(spec, &mut rng)))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Sample mean and Bessel-corrected sample variance of `||f||_4^4`.
pub fn monte_carlo_moments(spec: ClassSpec, samples: u64, seed: u64) -> Result<MomentReport> {
    if samples < MIN_SAMPLES {
        return Err(Error::Guardrail {
            what: "sample count (minimum)",
            got: samples,
            limit: MIN_SAMPLES,
        });
    }
    let start = Instant::now();
    let values = sample_norms(spec, samples, seed);
    let mut sums = PowerSums::default();
    for &x in &values {
        sums.push(x);
    }
    let (mean, variance, var_se) = sample_statistics(&sums, &values)?;
    let mean_se = (variance.to_f64() / samples as f64).sqrt();
    Ok(MomentReport {
        spec,
        method: Method::MonteCarlo,
        mean: Estimate::Sampled {
            value: mean,
            std_err: mean_se,
        },
        variance: Estimate::Sampled {
            value: variance,
            std_err: var_se,
        },
        samples: Some(samples),
        seed: Some(seed),
        wall_time: start.elapsed(),
    })
}

/// Mean, unbiased variance (both exact), and the standard error of the
/// variance estimate `sqrt((m4 - s^4) / N)`.
fn sample_statistics(
    sums: &PowerSums,
    values: &[u64],
) -> Result<(ExactRational, ExactRational, f64)> {
    let count = sums.count as i128;
    let mean = ExactRational::new(sums.s1 as i128, count)?;
    let s1 = sums.s1 as i128;
    let s2 = i128::try_from(sums.s2).map_err(|_| Error::Overflow("S2"))?;
    let centered = count
        .checked_mul(s2)
        .and_then(|a| s1.checked_mul(s1).and_then(|b| a.checked_sub(b)))
        .ok_or(Error::Overflow("sample variance"))?;
    let variance = ExactRational::new(centered, count * (count - 1))?;

    let m = mean.to_f64();
    let m4 = values
        .iter()
        .map(|&x| (x as f64 - m).powi(4))
        .sum::<f64>()
        / values.len() as f64;
    let s = variance.to_f64();
    let var_se = ((m4 - s * s).max(0.0) / values.len() as f64).sqrt();
    Ok((mean, variance, var_se))
}

/// Quantile with linear interpolation between order statistics
/// (`h = (N - 1) p`). `sorted` must be ascending and non-empty.
pub fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    let (a, b) = (sorted[lo], sorted[hi]);
    if lo == hi || a == b {
        a
    } else {
        a + (h - lo as f64) * (b - a)
    }
}

/// One row of a convergence scan.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub class: ClassKind,
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    /// Median merit factor; `inf` if the middle draws have all `C_u = 0`.
    pub median_merit: f64,
    pub iqr_merit: f64,
    /// Median of `(||f||_4 / sqrt(n))^4 = ||f||_4^4 / n^2`.
    pub median_norm: f64,
    pub iqr_norm: f64,
    /// Sample mean of `||f||_4^4 / n^2` and its standard error.
    pub mean_norm: f64,
    pub se_norm: f64,
    /// Closed-form mean of `||f||_4^4 / n^2`.
    pub formula_norm: f64,
}

/// Per `n`: median and interquartile range of the merit factor and of the
/// normalized fourth power, from `samples` draws at `seed`.
pub fn convergence_scan(
    kind: ClassKind,
    n_list: &[usize],
    samples: u64,
    seed: u64,
) -> Result<Vec<ScanRow>> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse("n list must be strictly ascending".into()));
    }
    if samples < 2 {
        return Err(Error::Guardrail {
            what: "sample count (minimum)",
            got: samples,
            limit: 2,
        });
    }
    n_list
        .iter()
        .map(|&n| {
            let spec = ClassSpec::new(kind, n)?;
            let values = sample_norms(spec, samples, seed);
            let n_sq = (n * n) as f64;
            let mut sums = PowerSums::default();
            let mut norm = Vec::with_capacity(values.len());
            let mut merit = Vec::with_capacity(values.len());
            for &x in &values {
                sums.push(x);
                norm.push(x as f64 / n_sq);
                let excess = (x - (n * n) as u64) as f64;
                merit.push(if excess == 0.0 { f64::INFINITY } else { n_sq / excess });
            }
            norm.sort_by(f64::total_cmp);
            merit.sort_by(f64::total_cmp);
            let (mean, var, _) = sample_statistics(&sums, &values)?;
            Ok(ScanRow {
                class: kind,
                n,
                samples,
                seed,
                median_merit: quantile(&merit, 0.5),
                iqr_merit: quantile(&merit, 0.75) - quantile(&merit, 0.25),
                median_norm: quantile(&norm, 0.5),
                iqr_norm: quantile(&norm, 0.75) - quantile(&norm, 0.25),
                mean_norm: mean.to_f64() / n_sq,
                se_norm: (var.to_f64() / samples as f64).sqrt() / n_sq,
                formula_norm: mean_formula(spec).to_f64() / n_sq,
            })
        })
        .collect()
}

/// Plot-ready CSV of a scan.
pub fn write_scan_csv<W: Write>(out: W, rows: &[ScanRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "class",
        "n",
        "samples",
        "seed",
        "median_merit",
        "iqr_merit",
        "median_norm",
        "iqr_norm",
        "mean_norm",
        "se_norm",
        "formula_norm",
    ])?;
    for r in rows {
        w.write_record([
            r.class.name().to_string(),
            r.n.to_string(),
            r.samples.to_string(),
            r.seed.to_string(),
            format!("{:.12}", r.median_merit),
            format!("{:.12}", r.iqr_merit),
            format!("{:.12}", r.median_norm),
            format!("{:.12}", r.iqr_norm),
            format!("{:.12}", r.mean_norm),
            format!("{:.12}", r.se_norm),
            format!("{:.12}", r.formula_norm),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::l4_report;
    use crate::seqcore::enumerate;

    fn spec(kind: ClassKind, n: usize) -> ClassSpec {
        ClassSpec::new(kind, n).unwrap()
    }

    fn q(v: i128) -> ExactRational {
        ExactRational::from_int(v)
    }

    /// Mean and population variance from a plain list of values.
    fn brute_moments(spec: ClassSpec) -> (ExactRational, ExactRational) {
        let mut values = Vec::new();
        enumerate(&EnumerationRange::full(spec).unwrap(), |s| {
            values.push(l4_report(s).norm4_fourth as i128)
        });
        let k = values.len() as i128;
        let mean = ExactRational::new(values.iter().sum(), k).unwrap();
        let var = values
            .iter()
            .map(|&x| (q(x) - mean) * (q(x) - mean))
            .fold(ExactRational::ZERO, |a, b| a + b)
            / q(k);
        (mean, var)
    }

    #[test]
    fn exact_examples() {
        for (sp, mean, var) in [
            (spec(ClassKind::All, 3), 15, 16),
            (spec(ClassKind::SkewSymmetric, 5), 37, 64),
            (spec(ClassKind::Reciprocal, 2), 6, 0),
        ] {
            let r = exact_moments(sp).unwrap();
            assert_eq!((r.mean.value(), r.variance.value()), (q(mean), q(var)), "{sp}");
            assert_eq!(brute_moments(sp), (q(mean), q(var)));
        }
    }

    #[test]
    fn all3_values_split_evenly() {
        let mut values = Vec::new();
        enumerate(&EnumerationRange::full(spec(ClassKind::All, 3)).unwrap(), |s| {
            values.push(norm4_fourth(s))
        });
        values.sort();
        assert_eq!(values, [11, 11, 11, 11, 19, 19, 19, 19]);
    }

    #[test]
    fn partitions_do_not_change_power_sums() {
        let sp = spec(ClassKind::All, 14);
        let full = exact_moments(sp).unwrap();
        for parts in [2, 3, 17, 1000] {
            assert_eq!(exact_moments_partitioned(sp, parts).unwrap().mean, full.mean);
            assert_eq!(exact_moments_partitioned(sp, parts).unwrap().variance, full.variance);
        }
        let range = EnumerationRange::full(sp).unwrap();
        assert_eq!(power_sums(&range.split(5)), power_sums(&[range]));
    }

    #[test]
    fn guardrails() {
        assert!(matches!(
            exact_moments(spec(ClassKind::All, 31)),
            Err(Error::Guardrail { .. })
        ));
        assert!(matches!(
            prop1_quantities(spec(ClassKind::All, 25)),
            Err(Error::Guardrail { .. })
        ));
        assert!(monte_carlo_moments(spec(ClassKind::All, 10), 999, 1).is_err());
    }

    #[test]
    fn prop1_examples() {
        assert_eq!(prop1_quantities(spec(ClassKind::All, 4)).unwrap().e, q(6));
        assert_eq!(prop1_quantities(spec(ClassKind::Reciprocal, 5)).unwrap().e, q(18));
        let s5 = prop1_quantities(spec(ClassKind::SkewSymmetric, 5)).unwrap();
        assert_eq!((s5.e, s5.mean, s5.variance), (q(6), q(37), q(64)));
        // all of L_n: E(C_u^2) = u
        let l6 = prop1_quantities(spec(ClassKind::All, 6)).unwrap();
        assert_eq!(l6.expected_c_sq, (1..6).map(q).collect::<Vec<_>>());
    }

    #[test]
    fn monte_carlo_on_degenerate_class() {
        let r = monte_carlo_moments(spec(ClassKind::All, 2), 1_000, 9).unwrap();
        assert_eq!(r.mean.value(), q(6));
        assert_eq!(r.variance.value(), q(0));
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let sp = spec(ClassKind::Reciprocal, 40);
        let a = monte_carlo_moments(sp, 5_000, 77).unwrap();
        let b = monte_carlo_moments(sp, 5_000, 77).unwrap();
        assert_eq!(a.record(false), b.record(false));
        let c = monte_carlo_moments(sp, 5_000, 78).unwrap();
        assert_ne!(a.record(false), c.record(false));
    }

    #[test]
    fn sample_statistics_match_direct_formulas() {
        let values = [3u64, 7, 7, 11, 20];
        let mut sums = PowerSums::default();
        values.iter().for_each(|&x| sums.push(x));
        let (mean, var, _) = sample_statistics(&sums, &values).unwrap();
        assert_eq!(mean, ExactRational::new(48, 5).unwrap());
        // sum (x - 9.6)^2 = 167.2, / 4
        assert_eq!(var, ExactRational::new(209, 5).unwrap());
    }

    #[test]
    fn quantiles() {
        let v = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile(&v, 0.5), 2.5);
        assert_eq!(quantile(&v, 0.25), 1.75);
        assert_eq!(quantile(&[5.0], 0.75), 5.0);
        assert_eq!(quantile(&[1.0, f64::INFINITY, f64::INFINITY], 0.5), f64::INFINITY);
    }

    #[test]
    fn scan_single_row_and_ordering() {
        let rows = convergence_scan(ClassKind::All, &[30], 2_000, 1).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(convergence_scan(ClassKind::All, &[30, 20], 2_000, 1).is_err());
        assert!(convergence_scan(ClassKind::SkewSymmetric, &[30], 2_000, 1).is_err());
    }

    #[test]
    fn moments_csv() {
        let reports = [exact_moments(spec(ClassKind::All, 3)).unwrap()];
        let mut buf = Vec::new();
        write_moments_csv(&mut buf, &reports).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "class,n,method,mean_num,mean_den,var_num,var_den,samples,seed\n\
             all,3,enumeration,15,1,16,1,,\n"
        );
    }
}
