//! Serializable views of surgery records.
//!
//! Rationals are always strings `p/q` (reduced, `q >= 1`). Integers are
//! JSON numbers when they fit in 64 bits and decimal strings otherwise.
//! Index sets are ascending arrays.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::bigint::{BigInt, BigUint};
use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::distinctness::Verdict;
use crate::exact_arith::format_ratio;
use crate::families::{
    BergeType, FamilyParams, PsPosition, ResultClass, SurgeryRecord,
};
use crate::seifert::IndexSet;
use crate::tangle::{FamilyCase, RationalTangle, TangleTriple};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntValue {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for IntValue {
    fn from(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(s) => IntValue::Small(s),
            None => IntValue::Big(v.to_string()),
        }
    }
}

impl From<&BigUint> for IntValue {
    fn from(v: &BigUint) -> Self {
        match v.to_i64() {
            Some(s) => IntValue::Small(s),
            None => IntValue::Big(v.to_string()),
        }
    }
}

impl std::fmt::Display for IntValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntValue::Small(v) => write!(f, "{v}"),
            IntValue::Big(v) => f.write_str(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamsReport {
    Ttk {
        p: i64,
        q: i64,
        n: i64,
    },
    Em {
        case: String,
        l: i64,
        m: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<i64>,
        slope: u8,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassificationReport {
    SeifertOverS2 { indices: Vec<IntValue> },
    LensSpace { berge_type: Option<String> },
    ConnectedSumOfTwoLensSpaces,
    Degenerate { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionReport {
    pub surface_label: String,
    pub index_set: Vec<IntValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EvidenceReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_sets: Option<[Vec<IntValue>; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalized_invariants: Option<[Vec<String>; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleReport {
    pub presentation: Vec<IntValue>,
    pub fraction: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub a: TangleReport,
    pub b: TangleReport,
    pub c: TangleReport,
}

/// One line of JSONL output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordReport {
    pub family: String,
    pub params: ParamsReport,
    pub slope: String,
    pub classification: ClassificationReport,
    pub positions: Vec<PositionReport>,
    pub verdict: VerdictReport,
    pub evidence: EvidenceReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperbolic_certified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangle_triple: Option<TripleReport>,
    /// `[A, B, C]`, by branch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exceptional_indices: Option<[IntValue; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis_holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid_index: Option<IntValue>,
}

fn index_list(set: &IndexSet) -> Vec<IntValue> {
    set.iter().map(IntValue::from).collect()
}

fn tangle_report(t: &RationalTangle) -> TangleReport {
    TangleReport {
        presentation: t
            .presentation()
            .map(|cf| cf.entries().iter().map(IntValue::from).collect())
            .unwrap_or_default(),
        fraction: t.fraction().to_canonical_string(),
    }
}

fn triple_report(t: &TangleTriple) -> TripleReport {
    TripleReport {
        a: tangle_report(t.a()),
        b: tangle_report(t.b()),
        c: tangle_report(t.c()),
    }
}

fn position_report(p: &PsPosition) -> PositionReport {
    PositionReport {
        surface_label: p.surface_label().to_string(),
        index_set: index_list(p.index_set()),
        invariants: p
            .seifert_half()
            .map(|h| h.invariants().iter().map(format_ratio).collect()),
    }
}

fn classification_report(c: &ResultClass) -> ClassificationReport {
    match c {
        ResultClass::SeifertOverS2(idx) => ClassificationReport::SeifertOverS2 {
            indices: idx.iter().map(IntValue::from).collect(),
        },
        ResultClass::LensSpace(t) => ClassificationReport::LensSpace {
            berge_type: match t {
                BergeType::VII => Some("VII".into()),
                BergeType::VIII => Some("VIII".into()),
                BergeType::Unspecified => None,
            },
        },
        ResultClass::ConnectedSumOfTwoLensSpaces => {
            ClassificationReport::ConnectedSumOfTwoLensSpaces
        }
        ResultClass::Degenerate(r) => ClassificationReport::Degenerate { reason: r.clone() },
    }
}

fn verdict_parts(v: Option<&Verdict>) -> (VerdictReport, EvidenceReport) {
    let Some(v) = v else {
        return (
            VerdictReport {
                kind: "Undecided".into(),
                reason: None,
            },
            EvidenceReport::default(),
        );
    };
    let evidence = EvidenceReport {
        index_sets: v
            .evidence
            .index_sets
            .as_ref()
            .map(|(a, b)| [index_list(a), index_list(b)]),
        normalized_invariants: v.evidence.normalized_invariants.as_ref().map(|(a, b)| {
            [
                a.iter().map(format_ratio).collect(),
                b.iter().map(format_ratio).collect(),
            ]
        }),
        notes: v.evidence.notes.clone(),
    };
    (
        VerdictReport {
            kind: v.kind.name().to_string(),
            reason: v.kind.reason().map(str::to_string),
        },
        evidence,
    )
}

impl From<&SurgeryRecord> for RecordReport {
    fn from(r: &SurgeryRecord) -> Self {
        let params = match r.params {
            FamilyParams::Ttk(t) => ParamsReport::Ttk {
                p: t.p(),
                q: t.q(),
                n: t.n(),
            },
            FamilyParams::Em(e) => ParamsReport::Em {
                case: e.case.to_string(),
                l: e.l,
                m: e.m,
                n: (e.case == FamilyCase::Case1).then_some(e.n_or_p),
                p: (e.case == FamilyCase::Case2).then_some(e.n_or_p),
                slope: e.slope.s(),
            },
        };
        let (verdict, evidence) = verdict_parts(r.verdict.as_ref());
        RecordReport {
            family: r.family().to_string(),
            params,
            slope: r.slope.to_string(),
            classification: classification_report(&r.classification),
            positions: r.positions.iter().map(position_report).collect(),
            verdict,
            evidence,
            hyperbolic_certified: r.hyperbolic_certified,
            tangle_triple: r.tangle_triple.as_ref().map(triple_report),
            exceptional_indices: r
                .exceptional_indices
                .as_ref()
                .map(|i| [(&i.a).into(), (&i.b).into(), (&i.c).into()]),
            hypothesis_holds: r.hypothesis_holds,
            braid_index: r.braid_index.as_ref().map(IntValue::from),
        }
    }
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

impl RecordReport {
    pub fn title(&self) -> String {
        match &self.params {
            ParamsReport::Ttk { p, q, n } => format!("K({p}, {q}, {}, {n})", *p as i128 + *q as i128),
            ParamsReport::Em {
                l, m, n, p, slope, ..
            } => match (n, p) {
                (Some(n), _) => format!("k({l}, {m}, {n}, 0) at gamma{slope}"),
                (_, Some(p)) => format!("k({l}, {m}, 0, {p}) at gamma{slope}"),
                _ => format!("k({l}, {m}, ?, ?) at gamma{slope}"),
            },
        }
    }

    pub fn params_compact(&self) -> String {
        match &self.params {
            ParamsReport::Ttk { p, q, n } => format!("p={p};q={q};n={n}"),
            ParamsReport::Em {
                case, l, m, n, p, slope,
            } => {
                let third = match (n, p) {
                    (Some(n), _) => format!("n={n}"),
                    (_, Some(p)) => format!("p={p}"),
                    _ => String::new(),
                };
                format!("{case};l={l};m={m};{third};s={slope}")
            }
        }
    }

    pub fn classification_compact(&self) -> String {
        match &self.classification {
            ClassificationReport::SeifertOverS2 { indices } => {
                format!("SeifertOverS2({})", join(indices, ","))
            }
            ClassificationReport::LensSpace { berge_type } => match berge_type {
                Some(t) => format!("LensSpace({t})"),
                None => "LensSpace".into(),
            },
            ClassificationReport::ConnectedSumOfTwoLensSpaces => {
                "ConnectedSumOfTwoLensSpaces".into()
            }
            ClassificationReport::Degenerate { reason } => format!("Degenerate({reason})"),
        }
    }

    fn position_compact(p: &PositionReport) -> String {
        let mut s = format!("{}:{{{}}}", p.surface_label, join(&p.index_set, ","));
        if let Some(inv) = &p.invariants {
            let _ = write!(s, "[{}]", inv.join(","));
        }
        s
    }

    pub fn csv_header() -> [&'static str; 11] {
        [
            "family",
            "params",
            "slope",
            "classification",
            "position_1",
            "position_2",
            "verdict",
            "reason",
            "hypothesis_holds",
            "braid_index",
            "hyperbolic_certified",
        ]
    }

    pub fn csv_row(&self) -> [String; 11] {
        let pos = |i: usize| {
            self.positions
                .get(i)
                .map(Self::position_compact)
                .unwrap_or_default()
        };
        let opt_bool = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
        [
            self.family.clone(),
            self.params_compact(),
            self.slope.clone(),
            self.classification_compact(),
            pos(0),
            pos(1),
            self.verdict.kind.clone(),
            self.verdict.reason.clone().unwrap_or_default(),
            opt_bool(self.hypothesis_holds),
            self.braid_index.as_ref().map(|b| b.to_string()).unwrap_or_default(),
            opt_bool(self.hyperbolic_certified),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}  slope {}", self.title(), self.slope);
        let _ = writeln!(s, "  result: {}", self.classification_compact());
        if let Some(h) = self.hyperbolic_certified {
            let _ = writeln!(
                s,
                "  hyperbolic: {}",
                if h { "certified (|n| > 3)" } else { "not certified" }
            );
        }
        if let Some(t) = &self.tangle_triple {
            let show = |name: &str, t: &TangleReport| {
                format!("{name} = R({}) = R({})", join(&t.presentation, ", "), t.fraction)
            };
            let _ = writeln!(
                s,
                "  tangles: {}; {}; {}",
                show("A", &t.a),
                show("B", &t.b),
                show("C", &t.c)
            );
        }
        if let Some([a, b, c]) = &self.exceptional_indices {
            let _ = writeln!(s, "  exceptional indices (A, B, C): ({a}, {b}, {c})");
        }
        if let Some(h) = self.hypothesis_holds {
            let _ = writeln!(s, "  A/B indices differ: {h}");
        }
        if let Some(b) = &self.braid_index {
            let _ = writeln!(s, "  braid index: {b}");
        }
        for p in &self.positions {
            let _ = write!(
                s,
                "  position {}: index set {{{}}}",
                p.surface_label,
                join(&p.index_set, ", ")
            );
            if let Some(inv) = &p.invariants {
                let _ = write!(s, ", Seifert half D²({})", inv.join(", "));
            }
            s.push('\n');
        }
        let _ = write!(s, "  verdict: {}", self.verdict.kind);
        if let Some(r) = &self.verdict.reason {
            let _ = write!(s, " ({r})");
        }
        s.push('\n');
        if let Some([a, b]) = &self.evidence.normalized_invariants {
            let _ = writeln!(s, "  mod 1: {{{}}} vs {{{}}}", a.join(", "), b.join(", "));
        }
        for note in &self.evidence.notes {
            let _ = writeln!(s, "  note: {note}");
        }
        s
    }
}

/// Footer of an enumeration run.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub records: usize,
    pub verdicts: BTreeMap<String, usize>,
    /// Number of pairwise-distinct braid indices among the records.
    pub distinct_braid_indices: usize,
}

impl EnumerationSummary {
    pub fn of(reports: &[RecordReport]) -> Self {
        let mut verdicts = BTreeMap::new();
        let mut braid = std::collections::BTreeSet::new();
        for r in reports {
            *verdicts.entry(r.verdict.kind.clone()).or_insert(0) += 1;
            if let Some(b) = &r.braid_index {
                braid.insert(b.to_string());
            }
        }
        EnumerationSummary {
            records: reports.len(),
            verdicts,
            distinct_braid_indices: braid.len(),
        }
    }
}
