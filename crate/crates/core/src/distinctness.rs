//! Deciding whether two primitive/Seifert positions of the same surgery are
//! distinct.
//!
//! Two sufficient conditions are implemented, in order:
//!
//! 1. The index sets differ. An orientation-preserving homeomorphism of
//!    `S³` carrying one position to the other would carry Seifert half to
//!    Seifert half, so the exceptional indices would have to agree.
//! 2. The index sets agree but both Seifert halves are known and are not
//!    orientation-preservingly homeomorphic, i.e. their invariants differ
//!    mod 1 as multisets.
//!
//! Neither condition can certify that two positions are the *same*, so the
//! engine is three-valued: distinct, inconclusive, or the surgery does not
//! have two genuine positions to compare.

use std::fmt;

use num::rational::BigRational;

use crate::families::{
    EmKnotParams, FamilyParams, PsPosition, SurgeryRecord, TwistedTorusKnotParams,
};
use crate::seifert::{sfs_homeomorphic_op, sfs_normalize, IndexSet, SeifertError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistinctnessError {
    #[error("not the same surgery: slopes {0} and {1} differ")]
    SlopeMismatch(String, String),
    #[error("a surgery record needs exactly 2 positions, found {0}")]
    PositionCount(usize),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictKind {
    DistinctByIndexSet,
    DistinctByInvariantsMod1,
    Inconclusive(String),
    HypothesisViolated(String),
}

impl VerdictKind {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictKind::DistinctByIndexSet => "DistinctByIndexSet",
            VerdictKind::DistinctByInvariantsMod1 => "DistinctByInvariantsMod1",
            VerdictKind::Inconclusive(_) => "Inconclusive",
            VerdictKind::HypothesisViolated(_) => "HypothesisViolated",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            VerdictKind::Inconclusive(r) | VerdictKind::HypothesisViolated(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_distinct(&self) -> bool {
        matches!(
            self,
            VerdictKind::DistinctByIndexSet | VerdictKind::DistinctByInvariantsMod1
        )
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason() {
            Some(r) => write!(f, "{} ({r})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// What the verdict was based on.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Evidence {
    pub index_sets: Option<(IndexSet, IndexSet)>,
    /// Seifert-half invariants reduced mod 1 and sorted.
    pub normalized_invariants: Option<(Vec<BigRational>, Vec<BigRational>)>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub evidence: Evidence,
}

pub fn decide_distinct(pos1: &PsPosition, pos2: &PsPosition) -> Result<Verdict, DistinctnessError> {
    if pos1.slope() != pos2.slope() {
        return Err(DistinctnessError::SlopeMismatch(
            pos1.slope().to_string(),
            pos2.slope().to_string(),
        ));
    }
    let mut evidence = Evidence {
        index_sets: Some((pos1.index_set().clone(), pos2.index_set().clone())),
        ..Evidence::default()
    };
    if pos1.index_set() != pos2.index_set() {
        return Ok(Verdict {
            kind: VerdictKind::DistinctByIndexSet,
            evidence,
        });
    }
    let (Some(h1), Some(h2)) = (pos1.seifert_half(), pos2.seifert_half()) else {
        return Ok(Verdict {
            kind: VerdictKind::Inconclusive("index sets equal, invariant data unavailable".into()),
            evidence,
        });
    };
    evidence.normalized_invariants = Some((
        sfs_normalize(h1).invariants().to_vec(),
        sfs_normalize(h2).invariants().to_vec(),
    ));
    let kind = if sfs_homeomorphic_op(h1, h2)? {
        VerdictKind::Inconclusive(
            "Seifert halves homeomorphic; positions may coincide".into(),
        )
    } else {
        VerdictKind::DistinctByInvariantsMod1
    };
    Ok(Verdict { kind, evidence })
}

/// Compares the record's two positions and attaches the verdict.
pub fn decide_surgery(mut record: SurgeryRecord) -> Result<SurgeryRecord, DistinctnessError> {
    if record.positions.len() != 2 {
        return Err(DistinctnessError::PositionCount(record.positions.len()));
    }
    let mut verdict = decide_distinct(&record.positions[0], &record.positions[1])?;
    if record.hypothesis_holds == Some(false)
        && verdict.kind == VerdictKind::DistinctByInvariantsMod1
    {
        verdict.evidence.notes.push(
            "A-fiber and B-fiber indices coincide, so the index sets cannot separate the \
             positions; the Seifert halves still differ mod 1"
                .into(),
        );
    }
    record.verdict = Some(verdict);
    Ok(record)
}

/// Builds the record and decides it; surgeries without two genuine
/// positions get [`VerdictKind::HypothesisViolated`].
pub fn analyze(record: SurgeryRecord) -> SurgeryRecord {
    if let Some(err) = &record.position_error {
        let reason = err.to_string();
        let mut record = record;
        record.verdict = Some(Verdict {
            kind: VerdictKind::HypothesisViolated(reason),
            evidence: Evidence::default(),
        });
        return record;
    }
    decide_surgery(record).expect("record built with two positions on a common slope")
}

pub fn analyze_ttk(params: TwistedTorusKnotParams) -> SurgeryRecord {
    analyze(SurgeryRecord::for_ttk(params))
}

pub fn analyze_em(params: EmKnotParams) -> SurgeryRecord {
    analyze(SurgeryRecord::for_em(params))
}

pub fn analyze_params(params: FamilyParams) -> SurgeryRecord {
    match params {
        FamilyParams::Ttk(p) => analyze_ttk(p),
        FamilyParams::Em(p) => analyze_em(p),
    }
}
