//! Seifert invariants, negative continued fractions, star-shaped plumbing
//! graphs and their characteristic vectors.

mod charvec;
mod graph;
mod seifert;

pub use charvec::{is_characteristic, same_spinc, CharVector, SpinCClass};
pub(crate) use charvec::check_characteristic;
pub use graph::{standard_graph, PlumbingGraph};
pub(crate) use seifert::check_permutation;
pub use seifert::{leg_framings, NegCF, SeifertData};

/// Orientation reversal of Seifert data.
pub fn dual_seifert(data: &SeifertData) -> SeifertData {
    data.dual()
}

/// Intersection matrix of a plumbing graph.
pub fn intersection_matrix(g: &PlumbingGraph) -> crate::linalg::Matrix {
    g.intersection_matrix()
}

pub fn count_bad_vertices(g: &PlumbingGraph) -> usize {
    g.count_bad_vertices()
}

pub fn is_negative_definite(g: &PlumbingGraph) -> bool {
    g.is_negative_definite()
}
