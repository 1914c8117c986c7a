use std::ops::Range;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::Matrix;
use crate::plumbing::seifert::{leg_framings, SeifertData};

/// Star-shaped plumbing graph.
///
/// Vertices are numbered from 0: the centre first, then each leg in the
/// declared order, walking outward from the centre.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PlumbingGraph {
    center: i64,
    legs: Vec<Vec<i64>>,
}

impl PlumbingGraph {
    pub fn new(center: i64, legs: Vec<Vec<i64>>) -> Self {
        let legs = legs.into_iter().filter(|l| !l.is_empty()).collect();
        PlumbingGraph { center, legs }
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    pub fn legs(&self) -> &[Vec<i64>] {
        &self.legs
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.legs.iter().map(Vec::len).sum::<usize>()
    }

    /// Framings in vertex order.
    pub fn framings(&self) -> Vec<i64> {
        self.framings_iter().collect()
    }

    pub fn framings_iter(&self) -> impl Iterator<Item = i64> + '_ {
        std::iter::once(self.center).chain(self.legs.iter().flatten().copied())
    }

    pub fn framing(&self, v: usize) -> i64 {
        if v == 0 {
            return self.center;
        }
        let (leg, pos) = self.locate(v);
        self.legs[leg][pos]
    }

    /// Vertex indices occupied by leg `leg`.
    pub fn leg_range(&self, leg: usize) -> Range<usize> {
        let start = 1 + self.legs[..leg].iter().map(Vec::len).sum::<usize>();
        start..start + self.legs[leg].len()
    }

    /// (leg, position along the leg) of a non-central vertex.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        assert!(v > 0 && v < self.vertex_count(), "vertex {v} is not on a leg");
        let mut offset = 1;
        for (i, leg) in self.legs.iter().enumerate() {
            if v < offset + leg.len() {
                return (i, v - offset);
            }
            offset += leg.len();
        }
        unreachable!()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        if v == 0 {
            return (0..self.legs.len()).map(|l| self.leg_range(l).start).collect();
        }
        let (leg, pos) = self.locate(v);
        let mut out = Vec::with_capacity(2);
        out.push(if pos == 0 { 0 } else { v - 1 });
        if pos + 1 < self.legs[leg].len() {
            out.push(v + 1);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        if v == 0 {
            self.legs.len()
        } else {
            self.neighbours(v).len()
        }
    }

    pub fn intersection_matrix(&self) -> Matrix {
        let n = self.vertex_count();
        let mut q = Matrix::zeros(n, n);
        for (v, f) in self.framings().into_iter().enumerate() {
            q[(v, v)] = f;
            for w in self.neighbours(v) {
                q[(v, w)] = 1;
            }
        }
        q
    }

    pub fn determinant(&self) -> BigInt {
        self.intersection_matrix().determinant()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.intersection_matrix().is_negative_definite()
    }

    /// Vertices with `-framing < degree`.
    pub fn count_bad_vertices(&self) -> usize {
        (0..self.vertex_count())
            .filter(|&v| -self.framing(v) < self.degree(v) as i64)
            .count()
    }
}

/// Standard graph: centre `e0`, leg `i` given by the expansion of `-1/ri`.
pub fn standard_graph(data: &SeifertData) -> Result<PlumbingGraph> {
    let legs = data
        .ratios()
        .iter()
        .map(|&r| leg_framings(r).map(|cf| cf.entries().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok(PlumbingGraph::new(data.e0(), legs))
}
