//! Closed-form mean and variance of `||f||_4^4` per class, the floor/parity
//! summation identities the derivations rely on, and the limits of the
//! normalized moments.
//!
//! Formulas are written with their literal fractional coefficients over
//! [`ExactRational`] so each line can be read against the theorem
//! statements; integrality of the results is checked by the tests rather
//! than assumed.

use std::io::Write;

use serde::Serialize;

use crate::seqcore::{ClassKind, ClassSpec};
use crate::{Error, ExactRational, Result};

fn q(v: i128) -> ExactRational {
    ExactRational::from_int(v)
}

fn frac(p: i128, d: i128) -> ExactRational {
    ExactRational::new(p, d).expect("nonzero literal denominator")
}

/// `floor(a / b)` for `b > 0`.
pub fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

/// `ceil(a / b)` for `b > 0`.
pub fn ceil_div(a: i128, b: i128) -> i128 {
    -(-a).div_euclid(b)
}

/// `I_u = I[u odd]`
pub fn odd(u: i128) -> i128 {
    u.rem_euclid(2)
}

/// The parity indicators, floor terms and signs that appear in the
/// variance formulas, each computed directly from `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaTerms {
    pub n: i128,
    /// `I[n odd]`
    pub n_odd: i128,
    /// `(-1)^n`
    pub sign_n: i128,
    /// `floor((n-1)/8)`
    pub floor_n1_8: i128,
    /// `floor((n-1)/12)`
    pub floor_n1_12: i128,
    /// `floor(n/6)`
    pub floor_n_6: i128,
    /// `floor((n-1)/4)`
    pub floor_n1_4: i128,
    /// `floor((n-1)/6)`
    pub floor_n1_6: i128,
    /// `I[n mod 6 = 4]`
    pub n_mod6_is_4: i128,
    /// `(-1)^{(n-1)/2}`, odd `n` only.
    pub sign_half: Option<i128>,
}

impl FormulaTerms {
    pub fn new(n: u64) -> Self {
        let n = n as i128;
        let n_odd = odd(n);
        FormulaTerms {
            n,
            n_odd,
            sign_n: if n_odd == 1 { -1 } else { 1 },
            floor_n1_8: floor_div(n - 1, 8),
            floor_n1_12: floor_div(n - 1, 12),
            floor_n_6: floor_div(n, 6),
            floor_n1_4: floor_div(n - 1, 4),
            floor_n1_6: floor_div(n - 1, 6),
            n_mod6_is_4: i128::from(n.rem_euclid(6) == 4),
            sign_half: (n_odd == 1).then(|| if ((n - 1) / 2) % 2 == 0 { 1 } else { -1 }),
        }
    }
}

/// `E(||f||_4^4)` for `f` uniform on the class.
pub fn mean_formula(spec: ClassSpec) -> ExactRational {
    let t = FormulaTerms::new(spec.n() as u64);
    let n = q(t.n);
    match spec.kind() {
        ClassKind::All => q(2) * n * n - n,
        ClassKind::SkewSymmetric => q(2) * n * n - q(3) * n + q(2),
        ClassKind::Reciprocal | ClassKind::NegativeReciprocal => {
            q(3) * n * n - q(3) * n + frac(1 - t.sign_n, 2)
        }
    }
}

/// `Var(||f||_4^4)` (population variance over the class).
pub fn variance_formula(spec: ClassSpec) -> ExactRational {
    let t = FormulaTerms::new(spec.n() as u64);
    let n = q(t.n);
    let n2 = n * n;
    let n3 = n2 * n;
    match spec.kind() {
        ClassKind::All => {
            frac(16, 3) * n3 - q(20) * n2 + frac(56, 3) * n - q(2) + q(2 * t.sign_n)
        }
        ClassKind::SkewSymmetric => {
            let sign_half = t.sign_half.expect("skew-symmetric classes have odd n");
            frac(32, 3) * n3 - q(88) * n2 + frac(592, 3) * n
                - q(512 * t.floor_n1_8)
                - q(512 * t.floor_n1_12)
                - q(88)
                + q(16 * sign_half) * (n - q(3))
        }
        ClassKind::Reciprocal | ClassKind::NegativeReciprocal => {
            if t.n_odd == 0 {
                q(32) * n3 - q(216) * n2 + q(304) * n
                    + q(256 * t.floor_n_6)
                    + q(256 * t.n_mod6_is_4)
            } else {
                q(32) * n3 - q(144) * n2 + q(160) * n
                    - q(576 * t.floor_n1_4)
                    - q(512 * t.floor_n1_6)
                    - q(48)
            }
        }
    }
}

/// Closed form of `E = sum_u E(C_u^2)` for the class.
pub fn intermediate_e(spec: ClassSpec) -> ExactRational {
    let t = FormulaTerms::new(spec.n() as u64);
    let n = q(t.n);
    let half = frac(1, 2);
    match spec.kind() {
        ClassKind::All => n * (n - q(1)) * half,
        ClassKind::Reciprocal | ClassKind::NegativeReciprocal => {
            half * (q(2) * n * n - q(3) * n + q(t.n_odd))
        }
        ClassKind::SkewSymmetric => half * (n * n - q(3) * n + q(2)),
    }
}

/// Limits of `E(||f||_4^4) / n^2` and of the merit factor as `n` grows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LimitConstants {
    /// `c`, so that `||f||_4 / sqrt(n) -> c^{1/4}` in probability.
    pub c: ExactRational,
    /// `1 / (c - 1)`
    pub merit_limit: ExactRational,
}

pub fn formula_limit_constants(kind: ClassKind) -> LimitConstants {
    let c = match kind {
        ClassKind::All | ClassKind::SkewSymmetric => q(2),
        ClassKind::Reciprocal | ClassKind::NegativeReciprocal => q(3),
    };
    LimitConstants {
        c,
        merit_limit: q(1) / (c - q(1)),
    }
}

/// Number of summation identities.
pub const IDENTITY_COUNT: u8 = 10;

/// Whether identity `id` is stated for odd `n` only.
pub fn identity_needs_odd(id: u8) -> bool {
    (7..=9).contains(&id)
}

fn check_identity_args(id: u8, n: u64) -> Result<()> {
    if !(1..=IDENTITY_COUNT).contains(&id) {
        return Err(Error::UnknownIdentity(id));
    }
    if n < 2 {
        return Err(Error::InvalidLength {
            n: n as usize,
            max: usize::MAX,
        });
    }
    if identity_needs_odd(id) && n.is_multiple_of(2) {
        return Err(Error::Parity {
            kind: ClassKind::SkewSymmetric,
            n: n as usize,
            needs: "odd",
        });
    }
    Ok(())
}

/// Right-hand side of identity `id`, in closed form.
fn identity_rhs(id: u8, n: i128) -> i128 {
    let f2 = |a: i128| floor_div(a, 2);
    match id {
        1 => f2(n) * f2(n - 1),
        // 2 floor(n/2) ((n-2)/2) ceil((n-4)/2)
        2 => f2(n) * (n - 2) * ceil_div(n - 4, 2),
        3 => f2(n),
        4 => f2(n) * f2(n - 2),
        5 => f2(n) * f2(n - 2) * f2(n - 4),
        6 => f2(n) * f2(n - 2),
        7 | 8 => floor_div(n - 1, 4) * floor_div(n - 3, 4),
        9 => floor_div(n - 1, 8),
        10 => floor_div(n, 6) + i128::from(n.rem_euclid(6) == 4),
        _ => unreachable!("id validated"),
    }
}

/// Left-hand side of a single-sum identity, summed term by term over `u`.
fn single_sum_lhs(id: u8, n: i128) -> i128 {
    let f2 = |a: i128| floor_div(a, 2);
    match id {
        1 => (1..n).map(&f2).sum(),
        2 => 3 * (1..n).map(|u| f2(u) * f2(u - 2)).sum::<i128>(),
        3 => (1..n).map(odd).sum(),
        // 2 sum I_u (u-1)/2
        4 => (1..n).map(|u| odd(u) * (u - 1)).sum(),
        // 3 sum I_u ((u-1)/2)((u-3)/2); both halves are integers for odd u
        5 => 3 * (1..n)
            .filter(|&u| odd(u) == 1)
            .map(|u| ((u - 1) / 2) * ((u - 3) / 2))
            .sum::<i128>(),
        // (2u-n-1)/2 is an integer for odd u and odd n
        7 => ((n + 1) / 2..n)
            .map(|u| odd(u) * ((2 * u - n - 1) / 2))
            .sum(),
        9 => (ceil_div(3 * n + 1, 4)..n).map(odd).sum(),
        10 => (ceil_div(2 * n + 1, 3)..n).map(odd).sum(),
        _ => unreachable!("double-sum identity"),
    }
}

/// Left-hand side of identity `id` by literal summation over `u` and `v`.
fn identity_lhs_literal(id: u8, n: i128) -> i128 {
    match id {
        6 => {
            let mut s = 0;
            for u in 1..n {
                for v in 1..n {
                    s += odd(u) * i128::from(u + 2 * v > 2 * n);
                }
            }
            2 * s
        }
        8 => {
            let mut s = 0;
            for u in 1..n {
                for v in 1..n {
                    s += odd(u) * odd(v) * i128::from(2 * u + v > 2 * n);
                }
            }
            s
        }
        _ => single_sum_lhs(id, n),
    }
}

/// Number of odd integers in `[lo, hi]`.
fn odd_count(lo: i128, hi: i128) -> i128 {
    if hi < lo {
        return 0;
    }
    let upto = |x: i128| floor_div(x + 1, 2);
    upto(hi) - upto(lo - 1)
}

/// Left-hand side with the inner `v` sum of the double-sum identities
/// replaced by a count of the admissible `v`; the outer `u` sum stays term
/// by term.
fn identity_lhs_counted(id: u8, n: i128) -> i128 {
    match id {
        6 => {
            // u + 2v > 2n  <=>  v >= floor((2n - u)/2) + 1
            2 * (1..n)
                .filter(|&u| odd(u) == 1)
                .map(|u| {
                    let lo = (floor_div(2 * n - u, 2) + 1).max(1);
                    (n - 1 - lo + 1).max(0)
                })
                .sum::<i128>()
        }
        8 => (1..n)
            .filter(|&u| odd(u) == 1)
            .map(|u| odd_count((2 * n - 2 * u + 1).max(1), n - 1))
            .sum(),
        _ => single_sum_lhs(id, n),
    }
}

/// Both sides of identity `id` at `n`, left side summed literally.
pub fn identity_sides(id: u8, n: u64) -> Result<(i128, i128)> {
    check_identity_args(id, n)?;
    let n = n as i128;
    Ok((identity_lhs_literal(id, n), identity_rhs(id, n)))
}

/// Checks identity `id` at `n` by literal summation of the left side.
pub fn check_identity(id: u8, n: u64) -> Result<bool> {
    let (lhs, rhs) = identity_sides(id, n)?;
    Ok(lhs == rhs)
}

/// As [`check_identity`], but counts the inner `v` range of identities 6
/// and 8 instead of looping over it, so sweeps to large `n` stay linear.
pub fn check_identity_counted(id: u8, n: u64) -> Result<bool> {
    check_identity_args(id, n)?;
    let n = n as i128;
    Ok(identity_lhs_counted(id, n) == identity_rhs(id, n))
}

/// `floor(u/2) floor((u-1)/2) = floor(u/2) floor((u-2)/2) + I_u (u-1)/2`
pub fn check_floor_product_identity(u: u64) -> bool {
    let u = u as i128;
    let f2 = |a: i128| floor_div(a, 2);
    // I_u (u-1)/2 is an integer: zero for even u
    let tail = if odd(u) == 1 { (u - 1) / 2 } else { 0 };
    f2(u) * f2(u - 1) == f2(u) * f2(u - 2) + tail
}

/// One row of the formula table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaRow {
    pub class: ClassKind,
    pub n: usize,
    pub mean: ExactRational,
    pub variance: ExactRational,
}

impl FormulaRow {
    pub fn new(spec: ClassSpec) -> Self {
        FormulaRow {
            class: spec.kind(),
            n: spec.n(),
            mean: mean_formula(spec),
            variance: variance_formula(spec),
        }
    }
}

/// Writes `class,n,mean,variance` rows with exact integer values.
pub fn write_formula_csv<W: Write>(out: W, specs: &[ClassSpec]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["class", "n", "mean", "variance"])?;
    for &spec in specs {
        let row = FormulaRow::new(spec);
        w.write_record([
            row.class.name().to_string(),
            row.n.to_string(),
            row.mean.to_string(),
            row.variance.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
