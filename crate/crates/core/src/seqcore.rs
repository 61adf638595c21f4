//! Sequences, polynomial classes, completion from free coefficients,
//! exhaustive enumeration and uniform sampling.
//!
//! Bit `j` of a [`BinarySequence`] encodes coefficient `a_j`: a clear bit is
//! `+1`, a set bit is `-1`. The all-zero bit pattern is therefore the
//! all-ones polynomial.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::{Error, Result};

/// Longest sequence the crate will store.
pub const MAX_LEN: usize = 1 << 20;

/// Largest free-coefficient count accepted for exhaustive enumeration.
pub const MAX_ENUM_FREE: usize = 40;

type Words = SmallVec<[u64; 2]>;

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

fn check_len(n: usize) -> Result<()> {
    if !(2..=MAX_LEN).contains(&n) {
        return Err(Error::InvalidLength { n, max: MAX_LEN });
    }
    Ok(())
}

/// A length-`n` sequence of `±1` coefficients, bit-packed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    n: usize,
    words: Words,
}

impl BinarySequence {
    /// The all-ones sequence `(+1, ..., +1)`.
    pub fn all_ones(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(BinarySequence {
            n,
            words: smallvec::smallvec![0; word_count(n)],
        })
    }

    /// Builds a sequence from packed words. Bits at or above `n` must be clear.
    pub fn from_words(n: usize, words: &[u64]) -> Result<Self> {
        check_len(n)?;
        if words.len() != word_count(n) {
            return Err(Error::LengthMismatch {
                expected: word_count(n),
                found: words.len(),
            });
        }
        let tail = n % 64;
        if tail != 0 && words[words.len() - 1] >> tail != 0 {
            return Err(Error::Parse(format!(
                "bits above position {n} must be zero"
            )));
        }
        Ok(BinarySequence {
            n,
            words: words.iter().copied().collect(),
        })
    }

    pub fn from_coeffs(coeffs: &[i8]) -> Result<Self> {
        let mut seq = Self::all_ones(coeffs.len())?;
        for (j, &c) in coeffs.iter().enumerate() {
            match c {
                1 => {}
                -1 => seq.set_bit(j, true),
                other => {
                    return Err(Error::Parse(format!(
                        "coefficient {j} is {other}, expected +1 or -1"
                    )))
                }
            }
        }
        Ok(seq)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; sequences have at least two coefficients.
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// True when `a_j = -1`.
    #[inline]
    pub fn bit(&self, j: usize) -> bool {
        debug_assert!(j < self.n);
        self.words[j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, j: usize, value: bool) {
        let mask = 1u64 << (j % 64);
        if value {
            self.words[j / 64] |= mask;
        } else {
            self.words[j / 64] &= !mask;
        }
    }

    /// Coefficient `a_j` as `+1` or `-1`.
    #[inline]
    pub fn coeff(&self, j: usize) -> i8 {
        if self.bit(j) {
            -1
        } else {
            1
        }
    }

    pub fn coeffs(&self) -> Vec<i8> {
        (0..self.n).map(|j| self.coeff(j)).collect()
    }

    /// `a_j -> -a_j`
    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.clear_tail();
        out
    }

    /// `a_j -> a_{n-1-j}`
    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        for j in 0..self.n {
            out.set_bit(j, self.bit(self.n - 1 - j));
        }
        out
    }

    /// `a_j -> (-1)^j a_j`, i.e. `f(z) -> f(-z)`.
    pub fn alternated(&self) -> Self {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w ^= ODD;
        }
        out.clear_tail();
        out
    }

    fn clear_tail(&mut self) {
        let tail = self.n % 64;
        if tail != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << tail) - 1;
        }
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.n)
            .map(|j| if self.bit(j) { '-' } else { '+' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    /// Parses the `{+,-}` text form, `a_0` first.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut seq = Self::all_ones(s.chars().count())?;
        for (j, ch) in s.chars().enumerate() {
            match ch {
                '+' => {}
                '-' => seq.set_bit(j, true),
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} at position {j}; use '+' and '-'"
                    )))
                }
            }
        }
        Ok(seq)
    }
}

impl Serialize for BinarySequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinarySequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The four polynomial classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// Every `±1` sequence of length `n`.
    All,
    /// Odd `n`, `a_j = (-1)^{j + (n-1)/2} a_{n-1-j}`.
    #[serde(rename = "skew")]
    SkewSymmetric,
    /// Palindromic: `a_j = a_{n-1-j}`.
    Reciprocal,
    /// Even `n`, `a_j = -a_{n-1-j}`.
    NegativeReciprocal,
}

impl ClassKind {
    pub const EVERY: [ClassKind; 4] = [
        ClassKind::All,
        ClassKind::SkewSymmetric,
        ClassKind::Reciprocal,
        ClassKind::NegativeReciprocal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::All => "all",
            ClassKind::SkewSymmetric => "skew",
            ClassKind::Reciprocal => "reciprocal",
            ClassKind::NegativeReciprocal => "negative-reciprocal",
        }
    }

    /// Whether the class is defined at length `n` (parity only).
    pub fn admits(self, n: usize) -> bool {
        match self {
            ClassKind::SkewSymmetric => n % 2 == 1,
            ClassKind::NegativeReciprocal => n.is_multiple_of(2),
            ClassKind::All | ClassKind::Reciprocal => true,
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" | "l" | "littlewood" => Ok(ClassKind::All),
            "skew" | "s" | "skew-symmetric" => Ok(ClassKind::SkewSymmetric),
            "reciprocal" | "r" | "symmetric" => Ok(ClassKind::Reciprocal),
            "negative-reciprocal" | "negrecip" | "n" | "anti-symmetric" => {
                Ok(ClassKind::NegativeReciprocal)
            }
            _ => Err(Error::Parse(format!(
                "unknown class {s:?}; expected all, skew, reciprocal or negative-reciprocal"
            ))),
        }
    }
}

/// A class together with a length; construction enforces the parity rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSpec {
    kind: ClassKind,
    n: usize,
}

impl ClassSpec {
    pub fn new(kind: ClassKind, n: usize) -> Result<Self> {
        check_len(n)?;
        if !kind.admits(n) {
            let needs = if kind == ClassKind::SkewSymmetric {
                "odd"
            } else {
                "even"
            };
            return Err(Error::Parity { kind, n, needs });
        }
        Ok(ClassSpec { kind, n })
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of independent coefficients `a_0 .. a_{k-1}`.
    pub fn free_count(&self) -> usize {
        match self.kind {
            ClassKind::All => self.n,
            ClassKind::SkewSymmetric => self.n.div_ceil(2),
            ClassKind::Reciprocal => self.n.div_ceil(2),
            ClassKind::NegativeReciprocal => self.n / 2,
        }
    }

    /// `2^free_count`, when it fits in a `u64`.
    pub fn class_size(&self) -> Option<u64> {
        1u64.checked_shl(self.free_count() as u32)
            .filter(|_| self.free_count() < 64)
    }

    /// Whether `a_{n-1-j} = -a_j` for a dependent index `n-1-j`, `j` free.
    #[inline]
    fn mirror_flips(&self, j: usize) -> bool {
        match self.kind {
            ClassKind::All | ClassKind::Reciprocal => false,
            ClassKind::NegativeReciprocal => true,
            ClassKind::SkewSymmetric => (j + (self.n - 1) / 2) % 2 == 1,
        }
    }

    /// Fills the dependent coefficients of `seq` from its free ones.
    fn complete_in_place(&self, seq: &mut BinarySequence) {
        if self.kind == ClassKind::All {
            return;
        }
        let k = self.free_count();
        for target in k..self.n {
            let j = self.n - 1 - target;
            seq.set_bit(target, seq.bit(j) ^ self.mirror_flips(j));
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.n)
    }
}

/// The unique member of `spec` whose free coefficients are encoded by
/// `free_bits` (bit `k` is `a_k`).
pub fn complete_from_free(spec: ClassSpec, free_bits: u64) -> Result<BinarySequence> {
    let k = spec.free_count();
    if k > 64 || (k < 64 && free_bits >> k != 0) {
        return Err(Error::IndexOutOfRange {
            index: free_bits,
            free_count: k,
        });
    }
    let mut words: Words = smallvec::smallvec![0; word_count(spec.n)];
    words[0] = free_bits;
    Ok(complete_words(spec, words))
}

/// Like [`complete_from_free`] but with the free bits as packed words, for
/// classes with more than 64 free coefficients. Bits at or above
/// `free_count` are ignored.
pub fn complete_from_free_words(spec: ClassSpec, free: &[u64]) -> Result<BinarySequence> {
    let k = spec.free_count();
    if free.len() < k.div_ceil(64) {
        return Err(Error::LengthMismatch {
            expected: k.div_ceil(64),
            found: free.len(),
        });
    }
    let mut words: Words = smallvec::smallvec![0; word_count(spec.n)];
    for (i, w) in words.iter_mut().enumerate().take(k.div_ceil(64)) {
        *w = free[i];
    }
    if !k.is_multiple_of(64) {
        words[k / 64] &= (1u64 << (k % 64)) - 1;
    }
    for w in words.iter_mut().skip(k.div_ceil(64)) {
        *w = 0;
    }
    Ok(complete_words(spec, words))
}

fn complete_words(spec: ClassSpec, words: Words) -> BinarySequence {
    let mut seq = BinarySequence { n: spec.n, words };
    spec.complete_in_place(&mut seq);
    seq
}

/// Whether `seq` satisfies the defining coefficient relation of `spec`.
pub fn is_member(seq: &BinarySequence, spec: ClassSpec) -> Result<bool> {
    if seq.len() != spec.n {
        return Err(Error::LengthMismatch {
            expected: spec.n,
            found: seq.len(),
        });
    }
    let n = spec.n;
    Ok(match spec.kind {
        ClassKind::All => true,
        _ => (0..n).all(|j| {
            let mirror = n - 1 - j;
            // the relation is symmetric in (j, mirror), so checking the free
            // side's flip rule covers both halves
            let flips = spec.mirror_flips(j.min(mirror));
            (seq.bit(j) ^ seq.bit(mirror)) == flips
        }),
    })
}

/// A half-open interval `[lo, hi)` of free-coefficient indices of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationRange {
    spec: ClassSpec,
    lo: u64,
    hi: u64,
}

fn enumerable_size(spec: ClassSpec) -> Result<u64> {
    let k = spec.free_count();
    if k > MAX_ENUM_FREE {
        return Err(Error::Guardrail {
            what: "free coefficient count",
            got: k as u64,
            limit: MAX_ENUM_FREE as u64,
        });
    }
    Ok(1u64 << k)
}

impl EnumerationRange {
    pub fn new(spec: ClassSpec, lo: u64, hi: u64) -> Result<Self> {
        let size = enumerable_size(spec)?;
        if lo > hi || hi > size {
            return Err(Error::InvalidRange { lo, hi, size });
        }
        Ok(EnumerationRange { spec, lo, hi })
    }

    /// The whole class.
    pub fn full(spec: ClassSpec) -> Result<Self> {
        let size = enumerable_size(spec)?;
        Ok(EnumerationRange { spec, lo: 0, hi: size })
    }

    pub fn spec(&self) -> ClassSpec {
        self.spec
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn len(&self) -> u64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.lo == self.hi
    }

    /// Splits into consecutive sub-ranges of at most `chunk` indices.
    pub fn chunks(&self, chunk: u64) -> Vec<EnumerationRange> {
        let chunk = chunk.max(1);
        let mut out = Vec::with_capacity(self.len().div_ceil(chunk) as usize);
        let mut lo = self.lo;
        while lo < self.hi {
            let hi = (lo + chunk).min(self.hi);
            out.push(EnumerationRange { spec: self.spec, lo, hi });
            lo = hi;
        }
        out
    }

    /// Splits into `parts` consecutive sub-ranges of near-equal length.
    pub fn split(&self, parts: u64) -> Vec<EnumerationRange> {
        let parts = parts.max(1);
        let len = self.len();
        (0..parts)
            .map(|p| EnumerationRange {
                spec: self.spec,
                lo: self.lo + len * p / parts,
                hi: self.lo + len * (p + 1) / parts,
            })
            .collect()
    }
}

/// Visits `complete_from_free(spec, i)` for each `i` in the range, ascending.
/// Returns the number of sequences visited.
pub fn enumerate<F>(range: &EnumerationRange, mut visitor: F) -> u64
where
    F: FnMut(&BinarySequence),
{
    let spec = range.spec;
    let mut seq = BinarySequence {
        n: spec.n,
        words: smallvec::smallvec![0; word_count(spec.n)],
    };
    for i in range.lo..range.hi {
        seq.words[0] = i;
        for w in seq.words.iter_mut().skip(1) {
            *w = 0;
        }
        spec.complete_in_place(&mut seq);
        visitor(&seq);
    }
    range.len()
}

/// A seeded ChaCha12 stream. Distinct `stream` ids under one seed give
/// independent, reproducible sequences of draws.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    stream: u64,
    rng: ChaCha12Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RngStream { seed, stream, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
}

/// A uniformly random member of `spec`.
pub fn sample_uniform(spec: ClassSpec, rng: &mut RngStream) -> BinarySequence {
    let k = spec.free_count();
    let mut free: Words = (0..k.div_ceil(64)).map(|_| rng.next_u64()).collect();
    if !k.is_multiple_of(64) {
        let last = free.len() - 1;
        free[last] &= (1u64 << (k % 64)) - 1;
    }
    let mut words: Words = smallvec::smallvec![0; word_count(spec.n)];
    words[..free.len()].copy_from_slice(&free);
    complete_words(spec, words)
}
