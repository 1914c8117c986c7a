//! The full-path lattice walk on characteristic vectors.
//!
//! From `V` a step at vertex `i` is allowed when `v_i = -m(i)` and produces
//! `V + 2 Q e_i`. A walk steps until no vertex qualifies; it ends well when
//! every coordinate then lies in `[m(i), -m(i) - 2]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::plumbing::{check_characteristic, CharVector, PlumbingGraph};

pub const DEFAULT_CAP: usize = 1_000_000;

/// Which candidate a walk steps at when several qualify.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum TieBreak {
    /// Smallest leg vertex first; the centre only when no leg vertex
    /// qualifies. Reproduces the published step orders.
    #[default]
    CentreLast,
    /// Smallest vertex index.
    Smallest,
}

impl TieBreak {
    fn pick(self, v: &[i64], framings: &[i64]) -> Option<usize> {
        let is_candidate = |i: usize| v[i] == -framings[i];
        match self {
            TieBreak::Smallest => (0..v.len()).find(|&i| is_candidate(i)),
            TieBreak::CentreLast => (1..v.len())
                .find(|&i| is_candidate(i))
                .or_else(|| is_candidate(0).then_some(0)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WalkOptions {
    pub cap: usize,
    pub tie_break: TieBreak,
    pub record_trace: bool,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions {
            cap: DEFAULT_CAP,
            tie_break: TieBreak::default(),
            record_trace: true,
        }
    }
}

impl WalkOptions {
    pub fn quiet() -> Self {
        WalkOptions {
            record_trace: false,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum WalkStatus {
    EndsWell,
    Breaks,
    CapExceeded,
}

impl fmt::Display for WalkStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkStatus::EndsWell => "EndsWell",
            WalkStatus::Breaks => "Breaks",
            WalkStatus::CapExceeded => "CapExceeded",
        })
    }
}

/// One step of a walk: the (0-based) vertex stepped at and the vector after it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub vertex: usize,
    pub vector: CharVector,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalkResult {
    pub status: WalkStatus,
    pub terminal: CharVector,
    pub trace: Vec<Step>,
    pub steps: usize,
}

impl WalkResult {
    pub fn step_vertices(&self) -> Vec<usize> {
        self.trace.iter().map(|s| s.vertex).collect()
    }
}

fn in_terminal_range(v: &[i64], framings: &[i64]) -> bool {
    v.iter()
        .zip(framings)
        .all(|(&a, &m)| m <= a && a <= -m - 2)
}

/// All vertices with `v_i = -m(i)`, ascending.
pub fn step_candidates(v: &CharVector, g: &PlumbingGraph) -> Result<Vec<usize>> {
    check_characteristic(v.coords(), g)?;
    Ok(g
        .framings_iter()
        .enumerate()
        .filter(|&(i, m)| v[i] == -m)
        .map(|(i, _)| i)
        .collect())
}

fn apply_step(v: &mut [i64], i: usize, sign: i64, g: &PlumbingGraph, framing: i64) {
    v[i] += sign * 2 * framing;
    for w in g.neighbours(i) {
        v[w] += sign * 2;
    }
}

fn check_vertex(i: usize, g: &PlumbingGraph) -> Result<()> {
    let count = g.vertex_count();
    if i >= count {
        return Err(Error::VertexOutOfRange { vertex: i, count });
    }
    Ok(())
}

/// `V + 2 Q e_i`, legal when `v_i = -m(i)`.
pub fn step(v: &CharVector, i: usize, g: &PlumbingGraph) -> Result<CharVector> {
    check_characteristic(v.coords(), g)?;
    check_vertex(i, g)?;
    let m = g.framing(i);
    if v[i] != -m {
        return Err(Error::IllegalStep {
            vertex: i,
            value: v[i],
            required: -m,
        });
    }
    let mut out = v.clone();
    apply_step(out.coords_mut(), i, 1, g, m);
    Ok(out)
}

/// `V - 2 Q e_i`, legal when `v_i = m(i)`.
pub fn reverse_step(v: &CharVector, i: usize, g: &PlumbingGraph) -> Result<CharVector> {
    check_characteristic(v.coords(), g)?;
    check_vertex(i, g)?;
    let m = g.framing(i);
    if v[i] != m {
        return Err(Error::IllegalStep {
            vertex: i,
            value: v[i],
            required: m,
        });
    }
    let mut out = v.clone();
    apply_step(out.coords_mut(), i, -1, g, m);
    Ok(out)
}

pub fn walk(v: &CharVector, g: &PlumbingGraph, opts: WalkOptions) -> Result<WalkResult> {
    check_characteristic(v.coords(), g)?;
    let framings = g.framings();
    // adjacency once, not per step
    let neighbours: Vec<Vec<usize>> = (0..framings.len()).map(|i| g.neighbours(i)).collect();
    let mut cur = v.clone();
    let mut trace = Vec::new();
    let mut steps = 0;
    loop {
        let Some(i) = opts.tie_break.pick(cur.coords(), &framings) else {
            let status = if in_terminal_range(cur.coords(), &framings) {
                WalkStatus::EndsWell
            } else {
                WalkStatus::Breaks
            };
            return Ok(WalkResult {
                status,
                terminal: cur,
                trace,
                steps,
            });
        };
        if steps == opts.cap {
            return Ok(WalkResult {
                status: WalkStatus::CapExceeded,
                terminal: cur,
                trace,
                steps,
            });
        }
        let c = cur.coords_mut();
        c[i] += 2 * framings[i];
        for &w in &neighbours[i] {
            c[w] += 2;
        }
        steps += 1;
        if opts.record_trace {
            trace.push(Step {
                vertex: i,
                vector: cur.clone(),
            });
        }
    }
}

/// Both `walk(c)` and `walk(-c)` end well. A capped walk is an error rather
/// than a verdict.
pub fn ends_correctly(c: &CharVector, g: &PlumbingGraph) -> Result<bool> {
    ends_correctly_with(c, g, WalkOptions::quiet())
}

pub fn ends_correctly_with(c: &CharVector, g: &PlumbingGraph, opts: WalkOptions) -> Result<bool> {
    let opts = WalkOptions {
        record_trace: false,
        ..opts
    };
    for v in [c.clone(), -c] {
        match walk(&v, g, opts)?.status {
            WalkStatus::EndsWell => {}
            WalkStatus::Breaks => return Ok(false),
            WalkStatus::CapExceeded => return Err(Error::CapExceeded { cap: opts.cap }),
        }
    }
    Ok(true)
}

/// The initial end of the full path through `c`: `-terminal(walk(-c))`.
pub fn initial_end(c: &CharVector, g: &PlumbingGraph, opts: WalkOptions) -> Result<CharVector> {
    let opts = WalkOptions {
        record_trace: false,
        ..opts
    };
    let back = walk(&-c, g, opts)?;
    if back.status == WalkStatus::CapExceeded {
        return Err(Error::CapExceeded { cap: opts.cap });
    }
    Ok(-back.terminal)
}

/// Same full path, decided by comparing initial ends.
pub fn full_path_equiv(c1: &CharVector, c2: &CharVector, g: &PlumbingGraph) -> Result<bool> {
    let opts = WalkOptions::quiet();
    Ok(initial_end(c1, g, opts)? == initial_end(c2, g, opts)?)
}

/// Exact rational grading value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GradingValue(pub BigRational);

impl GradingValue {
    pub fn from_ratio(n: i64, d: i64) -> Self {
        GradingValue(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for GradingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for GradingValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        let (n, d) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(GradingValue(BigRational::new(n, d)))
    }
}

impl Serialize for GradingValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GradingValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(vᵀ Q⁻¹ v + |Γ|) / 4 + shift`.
pub fn grading(v: &CharVector, g: &PlumbingGraph, shift: &BigRational) -> Result<GradingValue> {
    check_characteristic(v.coords(), g)?;
    let q = g.intersection_matrix();
    let square = q
        .inverse_quadratic_form(v.coords())
        .ok_or(Error::DegenerateForm)?;
    let n = BigRational::from_integer(BigInt::from(g.vertex_count()));
    Ok(GradingValue(
        (square + n) / BigRational::from_integer(BigInt::from(4)) + shift,
    ))
}

/// A calibration sample whose shift disagrees with the first one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CalibrationMismatch {
    pub index: usize,
    pub expected_shift: BigRational,
    pub found_shift: BigRational,
}

/// The single shift `s` with `raw_i + s = target_i` for every sample.
pub fn calibrate_shift(
    samples: &[(GradingValue, GradingValue)],
) -> std::result::Result<BigRational, CalibrationMismatch> {
    let mut shift: Option<BigRational> = None;
    for (index, (raw, target)) in samples.iter().enumerate() {
        let s = &target.0 - &raw.0;
        match &shift {
            None => shift = Some(s),
            Some(expected) if *expected != s => {
                return Err(CalibrationMismatch {
                    index,
                    expected_shift: expected.clone(),
                    found_shift: s,
                })
            }
            Some(_) => {}
        }
    }
    Ok(shift.unwrap_or_else(BigRational::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_two() -> PlumbingGraph {
        PlumbingGraph::new(-2, vec![])
    }

    fn cv(coords: &[i64], g: &PlumbingGraph) -> CharVector {
        CharVector::new(coords.to_vec(), g).unwrap()
    }

    #[test]
    fn single_vertex_walks() {
        let g = minus_two();
        assert!(step_candidates(&cv(&[0], &g), &g).unwrap().is_empty());
        assert_eq!(step(&cv(&[2], &g), 0, &g).unwrap().coords(), &[-2]);
        assert!(matches!(
            step(&cv(&[0], &g), 0, &g),
            Err(Error::IllegalStep { vertex: 0, value: 0, required: 2 })
        ));
        let r = walk(&cv(&[4], &g), &g, WalkOptions::default()).unwrap();
        assert_eq!(r.status, WalkStatus::Breaks);
        assert!(r.trace.is_empty());
        assert!(!ends_correctly(&cv(&[4], &g), &g).unwrap());
        assert!(ends_correctly(&cv(&[0], &g), &g).unwrap());
        let r = walk(&cv(&[2], &g), &g, WalkOptions::default()).unwrap();
        assert_eq!(r.status, WalkStatus::EndsWell);
        assert_eq!(r.step_vertices(), vec![0]);
    }

    #[test]
    fn rejects_bad_input() {
        let g = minus_two();
        let odd = CharVector::from_coords_unchecked(vec![1]);
        assert!(matches!(walk(&odd, &g, WalkOptions::default()), Err(Error::NotCharacteristic { .. })));
        assert!(step_candidates(&odd, &g).is_err());
        assert!(matches!(step(&cv(&[2], &g), 3, &g), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn cap_is_a_distinct_status() {
        // [[-1, 1], [1, -1]] cycles (1,-1) -> (-1,1) -> (1,-1)
        let g = PlumbingGraph::new(-1, vec![vec![-1]]);
        let v = cv(&[1, -1], &g);
        let r = walk(&v, &g, WalkOptions { cap: 50, ..WalkOptions::default() }).unwrap();
        assert_eq!(r.status, WalkStatus::CapExceeded);
        assert_eq!(r.steps, 50);
        assert!(matches!(
            ends_correctly_with(&v, &g, WalkOptions { cap: 50, ..WalkOptions::default() }),
            Err(Error::CapExceeded { cap: 50 })
        ));
    }

    #[test]
    fn tie_break_orders() {
        // centre -2 with two -2 legs; v = (2, 2, 0) has candidates {0, 1}
        let g = PlumbingGraph::new(-2, vec![vec![-2], vec![-2]]);
        let v = cv(&[2, 2, 0], &g);
        let smallest = walk(&v, &g, WalkOptions { tie_break: TieBreak::Smallest, ..Default::default() }).unwrap();
        let centre_last = walk(&v, &g, WalkOptions::default()).unwrap();
        assert_eq!(smallest.step_vertices()[0], 0);
        assert_eq!(centre_last.step_vertices()[0], 1);
    }

    #[test]
    fn reverse_step_undoes_step() {
        let g = PlumbingGraph::new(-2, vec![vec![-3, -2], vec![-2]]);
        let v = cv(&[2, 1, 0, -2], &g);
        let w = step(&v, 0, &g).unwrap();
        assert_eq!(reverse_step(&w, 0, &g).unwrap(), v);
        assert!(full_path_equiv(&v, &w, &g).unwrap());
        assert!(full_path_equiv(&v, &v, &g).unwrap());
    }

    #[test]
    fn grading_on_a_point() {
        // (2^2 / -2 + 1) / 4 = -1/4
        let g = minus_two();
        let value = grading(&cv(&[2], &g), &g, &BigRational::zero()).unwrap();
        assert_eq!(value, GradingValue::from_ratio(-1, 4));
        assert_eq!(value.to_string(), "-1/4");
        let degenerate = PlumbingGraph::new(-1, vec![vec![-1]]);
        assert_eq!(
            grading(&cv(&[1, 1], &degenerate), &degenerate, &BigRational::zero()),
            Err(Error::DegenerateForm)
        );
    }

    #[test]
    fn calibration() {
        let raw = [GradingValue::from_ratio(1, 2), GradingValue::from_ratio(3, 4)];
        let ok: Vec<_> = raw
            .iter()
            .map(|r| (r.clone(), GradingValue(r.0.clone() + BigRational::from_integer(2.into()))))
            .collect();
        assert_eq!(calibrate_shift(&ok).unwrap(), BigRational::from_integer(2.into()));
        let bad = vec![ok[0].clone(), (raw[1].clone(), raw[1].clone())];
        assert_eq!(calibrate_shift(&bad).unwrap_err().index, 1);
    }

    #[test]
    fn grading_value_serde() {
        let g = GradingValue::from_ratio(-527, 70);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, "\"-527/70\"");
        assert_eq!(serde_json::from_str::<GradingValue>(&json).unwrap(), g);
    }
}
