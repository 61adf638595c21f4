//! Exhaustive minimum-`||f||_4^4` search over a class.
//!
//! Witnesses are reported once per symmetry orbit. The symmetry group is
//! generated by negation, reversal and alternation (8 elements), all of
//! which preserve `||f||_4^4`. Some of these maps leave the class (for even
//! `n`, alternation swaps reciprocal and negative reciprocal), so a
//! witness is canonicalized to the lexicographically smallest text form
//! among the orbit elements that still belong to the class.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::norms::{merit_factor, norm4_fourth};
use crate::parallel::fold_ranges;
use crate::seqcore::{is_member, BinarySequence, ClassKind, ClassSpec, EnumerationRange};
use crate::{Error, ExactRational, Result};

/// Free-coefficient limit for [`min_search`].
pub const MAX_SEARCH_FREE: usize = 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub spec: ClassSpec,
    pub min_norm4_fourth: u64,
    /// `None` when the minimum has every `C_u = 0`.
    pub max_merit_factor: Option<ExactRational>,
    /// One canonical representative per orbit, sorted.
    pub witnesses: Vec<BinarySequence>,
    /// Number of minimizers before canonicalization.
    pub witness_count: u64,
}

/// JSON form of an [`ExtremalResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub class: ClassKind,
    pub n: usize,
    pub min: u64,
    pub best_merit_factor: Option<String>,
    pub witnesses: Vec<String>,
    pub witness_count: u64,
}

impl ExtremalResult {
    pub fn record(&self) -> ExtremalRecord {
        ExtremalRecord {
            class: self.spec.kind(),
            n: self.spec.n(),
            min: self.min_norm4_fourth,
            best_merit_factor: self.max_merit_factor.map(|f| f.to_fraction_string()),
            witnesses: self.witnesses.iter().map(|w| w.to_string()).collect(),
            witness_count: self.witness_count,
        }
    }
}

/// The 8 images of `seq` under negation, reversal and alternation.
pub fn symmetry_orbit(seq: &BinarySequence) -> [BinarySequence; 8] {
    let r = seq.reversed();
    let a = seq.alternated();
    let ra = r.alternated();
    [
        seq.negated(),
        r.negated(),
        a.negated(),
        ra.negated(),
        a,
        ra,
        r,
        seq.clone(),
    ]
}

/// Smallest text form over the orbit members that lie in `spec`.
pub fn canonical_form(seq: &BinarySequence, spec: ClassSpec) -> Result<BinarySequence> {
    symmetry_orbit(seq)
        .into_iter()
        .filter(|s| matches!(is_member(s, spec), Ok(true)))
        .min_by_key(|s| s.to_string())
        .ok_or_else(|| Error::Inconsistent(format!("{seq} is not a member of {spec}")))
}

#[derive(Debug, Default)]
struct Best {
    min: Option<u64>,
    minimizers: Vec<BinarySequence>,
}

impl Best {
    fn offer(&mut self, value: u64, seq: &BinarySequence) {
        match self.min {
            Some(m) if value > m => {}
            Some(m) if value == m => self.minimizers.push(seq.clone()),
            _ => {
                self.min = Some(value);
                self.minimizers.clear();
                self.minimizers.push(seq.clone());
            }
        }
    }

    fn merge(mut self, other: Best) -> Best {
        match (self.min, other.min) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if b < a => other,
            (Some(a), Some(b)) if a == b => {
                self.minimizers.extend(other.minimizers);
                self
            }
            _ => self,
        }
    }
}

/// Global minimum of `||f||_4^4` over `spec`, by exhaustive scan.
pub fn min_search(spec: ClassSpec) -> Result<ExtremalResult> {
    min_search_partitioned(spec, 1)
}

/// [`min_search`] over the class split into `parts` ranges. The result does
/// not depend on `parts`.
pub fn min_search_partitioned(spec: ClassSpec, parts: u64) -> Result<ExtremalResult> {
    if spec.free_count() > MAX_SEARCH_FREE {
        return Err(Error::Guardrail {
            what: "free coefficient count",
            got: spec.free_count() as u64,
            limit: MAX_SEARCH_FREE as u64,
        });
    }
    let ranges = EnumerationRange::full(spec)?.split(parts);
    let best = fold_ranges(
        &ranges,
        Best::default,
        |acc, seq| acc.offer(norm4_fourth(seq), seq),
        Best::merge,
    );
    let min = best
        .min
        .ok_or_else(|| Error::Inconsistent(format!("{spec} enumerated no sequences")))?;
    let canonical = best
        .minimizers
        .iter()
        .map(|s| canonical_form(s, spec).map(|c| c.to_string()))
        .collect::<Result<BTreeSet<String>>>()?;
    let n = spec.n();
    Ok(ExtremalResult {
        spec,
        min_norm4_fourth: min,
        max_merit_factor: merit_factor(n, (min - (n * n) as u64) / 2),
        witnesses: canonical
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<_>>>()?,
        witness_count: best.minimizers.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::l4_report;
    use crate::seqcore::enumerate;

    fn spec(kind: ClassKind, n: usize) -> ClassSpec {
        ClassSpec::new(kind, n).unwrap()
    }

    #[test]
    fn all2_every_member_is_minimal() {
        let r = min_search(spec(ClassKind::All, 2)).unwrap();
        assert_eq!(r.min_norm4_fourth, 6);
        assert_eq!(r.witness_count, 4);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].to_string(), "++");
    }

    #[test]
    fn all4_minimum() {
        let r = min_search(spec(ClassKind::All, 4)).unwrap();
        assert_eq!(r.min_norm4_fourth, 20);
        let expected = canonical_form(&"+++-".parse().unwrap(), spec(ClassKind::All, 4)).unwrap();
        assert!(r.witnesses.contains(&expected));
        assert_eq!(r.max_merit_factor.unwrap().to_string(), "4");
        for w in &r.witnesses {
            assert_eq!(l4_report(w).norm4_fourth, 20);
        }
    }

    #[test]
    fn barker13_is_the_unique_orbit() {
        let r = min_search(spec(ClassKind::All, 13)).unwrap();
        assert_eq!(r.min_norm4_fourth, 181);
        assert_eq!(r.witnesses.len(), 1);
        let b13: BinarySequence = "+++++--++-+-+".parse().unwrap();
        assert_eq!(r.witnesses[0], canonical_form(&b13, spec(ClassKind::All, 13)).unwrap());
    }

    #[test]
    fn orbit_canonicalization_is_consistent() {
        let sp = spec(ClassKind::All, 9);
        let s: BinarySequence = "++-+---+-".parse().unwrap();
        let c = canonical_form(&s, sp).unwrap();
        for image in symmetry_orbit(&s) {
            assert_eq!(canonical_form(&image, sp).unwrap(), c);
            assert_eq!(norm4_fourth(&image), norm4_fourth(&s));
        }
    }

    #[test]
    fn canonical_form_stays_in_class() {
        let sp = spec(ClassKind::Reciprocal, 8);
        enumerate(&EnumerationRange::full(sp).unwrap(), |s| {
            let c = canonical_form(s, sp).unwrap();
            assert!(is_member(&c, sp).unwrap());
        });
    }

    #[test]
    fn partitioning_does_not_change_result() {
        let sp = spec(ClassKind::All, 12);
        let whole = min_search(sp).unwrap();
        for parts in [2, 5, 64] {
            assert_eq!(min_search_partitioned(sp, parts).unwrap(), whole);
        }
    }

    #[test]
    fn guardrail() {
        assert!(matches!(
            min_search(spec(ClassKind::All, 29)),
            Err(Error::Guardrail { .. })
        ));
    }

    #[test]
    fn record_json() {
        let r = min_search(spec(ClassKind::All, 4)).unwrap();
        let json = serde_json::to_value(r.record()).unwrap();
        assert_eq!(json["class"], "all");
        assert_eq!(json["min"], 20);
        assert_eq!(json["best_merit_factor"], "4/1");
    }
}
