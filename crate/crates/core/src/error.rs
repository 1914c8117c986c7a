use crate::embedding::BlowupConfiguration;
use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("ratio {0} is not in the open interval (0,1)")]
    RatioOutOfRange(Rational),
    #[error("Seifert data needs at least one ratio")]
    NoRatios,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vector has {got} coordinates but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vector is not characteristic: coordinate {value} at vertex {vertex} has the wrong parity")]
    NotCharacteristic { vertex: usize, value: i64 },
    #[error("cannot step at vertex {vertex}: coordinate is {value}, a step needs {required}")]
    IllegalStep { vertex: usize, value: i64, required: i64 },
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("intersection form is degenerate")]
    DegenerateForm,
    #[error("walk exceeded the cap of {cap} steps")]
    CapExceeded { cap: usize },
    #[error("unknown curve {0}")]
    UnknownCurve(String),
    #[error("curves {0} and {1} are disjoint")]
    DisjointCurves(String, String),
    #[error("blow-up schedule failed: {reason}")]
    Schedule {
        reason: String,
        partial: Box<BlowupConfiguration>,
    },
    #[error("no ±1 extension of the vector exists in this presentation")]
    Unsatisfiable,
    #[error("operation requires e0 = {expected}, got {got}")]
    WrongEuler { expected: i64, got: i64 },
    #[error("operation requires {expected} legs, got {got}")]
    WrongLegCount { expected: usize, got: usize },
    #[error("expected {expected} rotation numbers, got {got}")]
    RotationCount { expected: usize, got: usize },
    #[error("rotation {value} is not realisable on component {component} (tb = {tb})")]
    RotationOutOfRange { component: usize, value: i64, tb: i64 },
    #[error("{name} = {value} is outside {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("classification needs an L-space attestation for this input")]
    MissingAttestation,
    #[error("not implemented: {0}")]
    Unimplemented(&'static str),
}
