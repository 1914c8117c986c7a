//! JSON records. Every record deserialises back to itself, and
//! re-serialising gives the same bytes.

use serde::{Deserialize, Serialize};

use zerotwist::contact::StructureCandidate;
use zerotwist::fullpath::WalkStatus;
use zerotwist::invariants::{CPlusStatus, InvariantReport};
use zerotwist::plumbing::{PlumbingGraph, SeifertData};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphRecord {
    pub seifert: SeifertData,
    pub graph: PlumbingGraph,
    pub matrix: Vec<Vec<i64>>,
    pub determinant: String,
    pub negative_definite: bool,
    pub bad_vertices: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DualRecord {
    pub seifert: SeifertData,
    pub dual: SeifertData,
    pub graph: PlumbingGraph,
}

/// Vertices are numbered from 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StepRecord {
    pub vertex: usize,
    pub vector: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WalkRecord {
    pub start: Vec<i64>,
    pub status: WalkStatus,
    pub terminal: Vec<i64>,
    pub steps: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<StepRecord>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FullPathRecord {
    pub seifert: SeifertData,
    pub forward: WalkRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negated: Option<WalkRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ends_correctly: Option<bool>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MagicCRecord {
    pub candidate: StructureCandidate,
    pub k_vector: Vec<i64>,
    pub magic_c: Vec<i64>,
    pub ends_correctly: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassRecord {
    pub representative: StructureCandidate,
    pub magic_c: Vec<i64>,
    pub count: usize,
    pub spinc_id: usize,
    pub conjugate_of: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub seifert: SeifertData,
    pub classes: Vec<ClassRecord>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportRecord {
    pub candidate: StructureCandidate,
    pub report: InvariantReport,
}

/// One displayed vector of the replayed walk.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BlockCheck {
    pub label: String,
    pub expected: Vec<i64>,
    pub found: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BranchRecord {
    pub start: Vec<i64>,
    pub status: WalkStatus,
    pub steps: usize,
    pub blocks: Vec<BlockCheck>,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Lemma6Record {
    pub k: i64,
    pub minus_c: BranchRecord,
    pub c: BranchRecord,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Theorem2Row {
    pub k: i64,
    pub m_c: String,
    pub closed_form: String,
    pub matches_closed_form: bool,
    pub below_gap: bool,
    pub chain_term: String,
    pub gap_below_chain_term: bool,
    pub v_k_ends_correctly: bool,
    pub status: CPlusStatus,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConjugateRow {
    pub k: i64,
    pub distinct: bool,
}
