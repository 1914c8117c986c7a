use std::ops::{Index, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SmithForm;
use crate::plumbing::graph::PlumbingGraph;

/// Integer vector indexed by the vertices of a plumbing graph.
///
/// The characteristic condition `v_i ≡ framing(i) (mod 2)` is checked by
/// [`CharVector::new`]; the type does not carry its graph, so operations
/// that take both re-validate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharVector(Vec<i64>);

impl CharVector {
    pub fn new(coords: Vec<i64>, g: &PlumbingGraph) -> Result<Self> {
        check_characteristic(&coords, g)?;
        Ok(CharVector(coords))
    }

    /// Wraps coordinates without checking parity.
    pub fn from_coords_unchecked(coords: Vec<i64>) -> Self {
        CharVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    /// Half the difference `(self - other) / 2`. Both must have equal parity.
    pub fn half_difference(&self, other: &CharVector) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                debug_assert_eq!((a - b).rem_euclid(2), 0);
                (a - b) / 2
            })
            .collect()
    }
}

impl Neg for &CharVector {
    type Output = CharVector;
    fn neg(self) -> CharVector {
        CharVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for CharVector {
    type Output = CharVector;
    fn neg(self) -> CharVector {
        -&self
    }
}

impl Index<usize> for CharVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

pub(crate) fn check_characteristic(coords: &[i64], g: &PlumbingGraph) -> Result<()> {
    let count = g.vertex_count();
    if coords.len() != count {
        return Err(Error::LengthMismatch {
            expected: count,
            got: coords.len(),
        });
    }
    match coords
        .iter()
        .zip(g.framings_iter())
        .position(|(v, m)| (v - m).rem_euclid(2) != 0)
    {
        Some(vertex) => Err(Error::NotCharacteristic {
            vertex,
            value: coords[vertex],
        }),
        None => Ok(()),
    }
}

/// `v_i ≡ m(i) (mod 2)` for every vertex. Errors only on a length mismatch.
pub fn is_characteristic(coords: &[i64], g: &PlumbingGraph) -> Result<bool> {
    match check_characteristic(coords, g) {
        Ok(()) => Ok(true),
        Err(Error::NotCharacteristic { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// A Spin^c class of the plumbing: characteristic vectors modulo `2 Q Z^n`.
///
/// Holds the Smith form of `Q`, so repeated membership tests are cheap.
/// Works for degenerate `Q`.
#[derive(Clone, Debug)]
pub struct SpinCClass {
    representative: CharVector,
    graph: PlumbingGraph,
    smith: SmithForm,
}

impl SpinCClass {
    pub fn new(representative: CharVector, graph: &PlumbingGraph) -> Result<Self> {
        check_characteristic(representative.coords(), graph)?;
        Ok(SpinCClass {
            representative,
            graph: graph.clone(),
            smith: graph.intersection_matrix().smith_form(),
        })
    }

    pub fn representative(&self) -> &CharVector {
        &self.representative
    }

    pub fn graph(&self) -> &PlumbingGraph {
        &self.graph
    }

    pub fn contains(&self, v: &CharVector) -> Result<bool> {
        check_characteristic(v.coords(), &self.graph)?;
        Ok(self
            .smith
            .in_column_span(&v.half_difference(&self.representative)))
    }
}

/// True iff `(v - w) / 2` lies in the integer column span of `Q`.
pub fn same_spinc(v: &CharVector, w: &CharVector, g: &PlumbingGraph) -> Result<bool> {
    check_characteristic(w.coords(), g)?;
    SpinCClass::new(v.clone(), g)?.contains(w)
}
