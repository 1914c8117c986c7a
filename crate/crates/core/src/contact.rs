//! Contact surgery presentations of zero-twisting structures on
//! `M(-1; r1, r2, r3)`: a Legendrian `T(5,-5)` with contact (+1)-surgery on
//! two components and (-1)-surgery on the other three, plus a chain of
//! Legendrian unknots on each leg.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plumbing::{
    check_permutation, standard_graph, CharVector, PlumbingGraph, SeifertData, SpinCClass,
};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SurgeryPresentation {
    /// tb of the five `T(5,-5)` components; the first two carry (+1)-surgery.
    pub torus_link_tb: [i64; 5],
    /// tb of the unknots on each leg, from the torus link outward.
    pub leg_tb: Vec<Vec<i64>>,
    pub plus_one_count: usize,
}

impl SurgeryPresentation {
    /// tb of every (-1)-surgered component, grouped by leg: the torus link
    /// component first, then its chain.
    pub fn surgered_tb(&self) -> Vec<Vec<i64>> {
        self.leg_tb
            .iter()
            .enumerate()
            .map(|(i, chain)| {
                std::iter::once(self.torus_link_tb[2 + i])
                    .chain(chain.iter().copied())
                    .collect()
            })
            .collect()
    }
}

fn require_three_legs_minus_one(data: &SeifertData) -> Result<()> {
    if data.e0() != -1 {
        return Err(Error::WrongEuler {
            expected: -1,
            got: data.e0(),
        });
    }
    if data.leg_count() != 3 {
        return Err(Error::WrongLegCount {
            expected: 3,
            got: data.leg_count(),
        });
    }
    Ok(())
}

pub fn ls_presentation(data: &SeifertData) -> Result<SurgeryPresentation> {
    require_three_legs_minus_one(data)?;
    let g = standard_graph(data)?;
    let legs = g.legs();
    Ok(SurgeryPresentation {
        torus_link_tb: [-1, -1, legs[0][0], legs[1][0], legs[2][0]],
        leg_tb: legs
            .iter()
            .map(|leg| leg[1..].iter().map(|m| m + 1).collect())
            .collect(),
        plus_one_count: 2,
    })
}

/// Rotation numbers of a Legendrian unknot with `tb = t`: `t+1, t+3, ..., -t-1`.
pub fn rotation_range(tb: i64) -> Vec<i64> {
    (tb + 1..=-tb - 1).step_by(2).collect()
}

/// Ranges for every (-1)-surgered component, grouped like [`SurgeryPresentation::surgered_tb`].
pub fn rotation_ranges(p: &SurgeryPresentation) -> Vec<Vec<Vec<i64>>> {
    p.surgered_tb()
        .into_iter()
        .map(|leg| leg.into_iter().map(rotation_range).collect())
        .collect()
}

/// Rotation numbers of the (-1)-surgered components, flattened leg by leg.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationAssignment(pub Vec<i64>);

impl RotationAssignment {
    pub fn rotations(&self) -> &[i64] {
        &self.0
    }

    pub fn negated(&self) -> RotationAssignment {
        RotationAssignment(self.0.iter().map(|r| -r).collect())
    }
}

/// A rotation assignment on a fixed Seifert space, with its vector on `G`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureCandidate {
    data: SeifertData,
    assignment: RotationAssignment,
    k_vector: CharVector,
}

#[derive(Serialize, Deserialize)]
struct CandidateRecord {
    seifert: SeifertData,
    rotations: RotationAssignment,
}

impl Serialize for StructureCandidate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CandidateRecord {
            seifert: self.data.clone(),
            rotations: self.assignment.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StructureCandidate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = CandidateRecord::deserialize(d)?;
        StructureCandidate::new(rec.seifert, rec.rotations).map_err(serde::de::Error::custom)
    }
}

impl StructureCandidate {
    pub fn new(data: SeifertData, assignment: RotationAssignment) -> Result<Self> {
        let p = ls_presentation(&data)?;
        let g = standard_graph(&data)?;
        let k_vector = k_vector_for(&p, &g, &assignment)?;
        Ok(StructureCandidate {
            data,
            assignment,
            k_vector,
        })
    }

    /// Inverse of [`k_vector`]: reads rotations off a vector on `G` whose
    /// centre coordinate is 1.
    pub fn from_k_vector(data: SeifertData, k: &[i64]) -> Result<Self> {
        let g = standard_graph(&data)?;
        if k.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                got: k.len(),
            });
        }
        if k[0] != 1 {
            return Err(Error::Parse(format!(
                "centre coordinate of a rotation vector must be 1, got {}",
                k[0]
            )));
        }
        let mut rotations = Vec::with_capacity(k.len() - 1);
        for leg in 0..g.legs().len() {
            for (pos, v) in g.leg_range(leg).enumerate() {
                rotations.push(if pos == 0 { k[v] + 1 } else { k[v] });
            }
        }
        StructureCandidate::new(data, RotationAssignment(rotations))
    }

    pub fn data(&self) -> &SeifertData {
        &self.data
    }

    pub fn assignment(&self) -> &RotationAssignment {
        &self.assignment
    }

    pub fn k_vector(&self) -> &CharVector {
        &self.k_vector
    }

    /// Same structure with the legs relisted as `perm[0], perm[1], ...`.
    pub fn reorder_legs(&self, perm: &[usize]) -> Result<StructureCandidate> {
        check_permutation(perm, self.data.leg_count())?;
        let g = standard_graph(&self.data)?;
        let per_leg: Vec<&[i64]> = (0..g.legs().len())
            .map(|l| {
                let r = g.leg_range(l);
                &self.assignment.0[r.start - 1..r.end - 1]
            })
            .collect();
        let rotations = perm.iter().flat_map(|&i| per_leg[i].iter().copied()).collect();
        StructureCandidate::new(self.data.reorder_legs(perm)?, RotationAssignment(rotations))
    }
}

fn k_vector_for(
    p: &SurgeryPresentation,
    g: &PlumbingGraph,
    assignment: &RotationAssignment,
) -> Result<CharVector> {
    let tbs: Vec<i64> = p.surgered_tb().into_iter().flatten().collect();
    if assignment.0.len() != tbs.len() {
        return Err(Error::RotationCount {
            expected: tbs.len(),
            got: assignment.0.len(),
        });
    }
    for (component, (&rot, &tb)) in assignment.0.iter().zip(&tbs).enumerate() {
        if (rot - tb - 1).rem_euclid(2) != 0 || rot.abs() > -tb - 1 {
            return Err(Error::RotationOutOfRange {
                component,
                value: rot,
                tb,
            });
        }
    }
    let mut coords = vec![1];
    let mut idx = 0;
    for leg in 0..g.legs().len() {
        for pos in 0..g.legs()[leg].len() {
            let rot = assignment.0[idx];
            coords.push(if pos == 0 { rot - 1 } else { rot });
            idx += 1;
        }
    }
    // parity holds whenever the ranges do
    let k = CharVector::new(coords, g).expect("rotation ranges imply parity");
    Ok(k)
}

/// Vector on `G`: centre 1, first vertex of each leg one less than the
/// rotation of its torus link component, chain vertices their rotation.
pub fn k_vector(c: &StructureCandidate) -> &CharVector {
    c.k_vector()
}

/// All rotations negated.
pub fn conjugate(c: &StructureCandidate) -> StructureCandidate {
    StructureCandidate::new(c.data.clone(), c.assignment.negated())
        .expect("ranges are symmetric under negation")
}

/// Odometer over all rotation assignments, last component fastest.
pub struct CandidateIter {
    data: SeifertData,
    presentation: SurgeryPresentation,
    graph: PlumbingGraph,
    ranges: Vec<Vec<i64>>,
    cursor: Option<Vec<usize>>,
    filter: Option<SpinCClass>,
}

impl CandidateIter {
    /// Number of assignments before filtering.
    pub fn total(&self) -> usize {
        self.ranges.iter().map(Vec::len).product()
    }

    fn advance(&mut self) {
        let Some(cur) = self.cursor.as_mut() else {
            return;
        };
        for i in (0..cur.len()).rev() {
            cur[i] += 1;
            if cur[i] < self.ranges[i].len() {
                return;
            }
            cur[i] = 0;
        }
        self.cursor = None;
    }
}

impl Iterator for CandidateIter {
    type Item = StructureCandidate;

    fn next(&mut self) -> Option<StructureCandidate> {
        loop {
            let cur = self.cursor.clone()?;
            self.advance();
            let assignment =
                RotationAssignment(cur.iter().zip(&self.ranges).map(|(&i, r)| r[i]).collect());
            let k = k_vector_for(&self.presentation, &self.graph, &assignment)
                .expect("assignments come from the ranges");
            if let Some(class) = &self.filter {
                if !class.contains(&k).expect("same graph") {
                    continue;
                }
            }
            return Some(StructureCandidate {
                data: self.data.clone(),
                assignment,
                k_vector: k,
            });
        }
    }
}

/// Every rotation assignment within range, optionally restricted to one
/// Spin^c class of the resulting vector on `G`.
pub fn enumerate_candidates(
    data: &SeifertData,
    spinc_filter: Option<&SpinCClass>,
) -> Result<CandidateIter> {
    let presentation = ls_presentation(data)?;
    let graph = standard_graph(data)?;
    if let Some(class) = spinc_filter {
        if class.graph() != &graph {
            return Err(Error::LengthMismatch {
                expected: graph.vertex_count(),
                got: class.graph().vertex_count(),
            });
        }
    }
    let ranges: Vec<Vec<i64>> = rotation_ranges(&presentation).into_iter().flatten().collect();
    let cursor = if ranges.iter().all(|r| !r.is_empty()) {
        Some(vec![0; ranges.len()])
    } else {
        None
    };
    Ok(CandidateIter {
        data: data.clone(),
        presentation,
        graph,
        ranges,
        cursor,
        filter: spinc_filter.cloned(),
    })
}

/// Two legs with `ri + rj = 1`.
///
/// Only whole legs are compared; truncated legs are not considered.
pub fn complementary_legs(data: &SeifertData) -> bool {
    let r = data.ratios();
    let one = Rational::from_integer(1);
    (0..r.len()).any(|i| (i + 1..r.len()).any(|j| r[i] + r[j] == one))
}

const TORUS_FAMILY_BOUND: i64 = 104;

/// `S³_k(T(8,13)) = M(-1; 3/8, 8/13, 1/(104-k))`, for `k < 103`.
pub fn torus_surgery_seifert(k: i64) -> Result<SeifertData> {
    if k >= TORUS_FAMILY_BOUND - 1 {
        return Err(Error::ParameterOutOfRange {
            name: "k",
            value: k,
            range: "k < 103",
        });
    }
    SeifertData::new(
        -1,
        vec![
            Rational::new(3, 8)?,
            Rational::new(8, 13)?,
            Rational::new(1, TORUS_FAMILY_BOUND - k)?,
        ],
    )
}

/// Leg order used by the vectors `K_k`, `C_k` and `V_k`: 8/13, 3/8, then
/// the third leg.
pub const XI_LEG_ORDER: [usize; 3] = [1, 0, 2];

/// [`torus_surgery_seifert`] with legs in [`XI_LEG_ORDER`].
pub fn xi_k_seifert(k: i64) -> Result<SeifertData> {
    torus_surgery_seifert(k)?.reorder_legs(&XI_LEG_ORDER)
}

/// `K_k = (1 | -2 -1 -1 | 1 -1 | 102-k)` on the graph of [`xi_k_seifert`].
pub fn xi_k_rotation_vector(k: i64) -> Vec<i64> {
    vec![1, -2, -1, -1, 1, -1, 102 - k]
}

/// The structure `ξ_k`.
pub fn xi_k_candidate(k: i64) -> Result<StructureCandidate> {
    StructureCandidate::from_k_vector(xi_k_seifert(k)?, &xi_k_rotation_vector(k))
}

/// `C_k = (-2 | -1 -1 0 | 2 1 -2 | 2 0 ... 0)` with `102-k` trailing zeros,
/// on the dual graph of [`xi_k_seifert`].
pub fn xi_k_magic_c(k: i64) -> Vec<i64> {
    let mut v = vec![-2, -1, -1, 0, 2, 1, -2, 2];
    v.extend(std::iter::repeat(0).take((102 - k).max(0) as usize));
    v
}

/// Recognises `S³_k(T(8,13))` in any leg order; returns `k`.
pub fn torus_family_parameter(data: &SeifertData) -> Option<i64> {
    if data.e0() != -1 || data.leg_count() != 3 {
        return None;
    }
    let mut r = data.ratios().to_vec();
    let a = Rational::new(3, 8).ok()?;
    let b = Rational::new(8, 13).ok()?;
    for target in [a, b] {
        let pos = r.iter().position(|&x| x == target)?;
        r.remove(pos);
    }
    let last = r[0];
    (last.numer() == 1).then(|| TORUS_FAMILY_BOUND - last.denom())
}

/// `S³_k(T(8,13))` is an L-space iff `k >= 83`.
pub fn is_lspace_family(k: i64) -> bool {
    k >= 83
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::is_characteristic;

    fn data(s: &str) -> SeifertData {
        s.parse().unwrap()
    }

    #[test]
    fn presentation_of_paper_space() {
        let p = ls_presentation(&xi_k_seifert(35).unwrap()).unwrap();
        assert_eq!(p.torus_link_tb, [-1, -1, -2, -3, -69]);
        assert_eq!(p.leg_tb, vec![vec![-2, -2], vec![-2], vec![]]);
        assert_eq!(p.plus_one_count, 2);

        let p = ls_presentation(&data("-1;1/2,1/2,1/2")).unwrap();
        assert!(p.leg_tb.iter().all(Vec::is_empty));

        assert!(matches!(
            ls_presentation(&data("-2;1/2,1/2,1/2")),
            Err(Error::WrongEuler { .. })
        ));
        assert!(matches!(
            ls_presentation(&data("-1;1/2,1/2")),
            Err(Error::WrongLegCount { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn ranges() {
        assert_eq!(rotation_range(-1), vec![0]);
        assert_eq!(rotation_range(-3), vec![-2, 0, 2]);
        let r = rotation_range(-69);
        assert_eq!(r.len(), 69);
        assert_eq!((r[0], r[68]), (-68, 68));
    }

    #[test]
    fn xi_k_vector() {
        let c = xi_k_candidate(35).unwrap();
        assert_eq!(c.k_vector().coords(), &[1, -2, -1, -1, 1, -1, 67]);
        assert_eq!(c.assignment().rotations(), &[-1, -1, -1, 2, -1, 68]);
    }

    #[test]
    fn extremal_negative_small_space() {
        let d = data("-1;1/2,1/2,1/2");
        let c = StructureCandidate::new(d, RotationAssignment(vec![-1, -1, -1])).unwrap();
        assert_eq!(c.k_vector().coords(), &[1, -2, -2, -2]);
    }

    #[test]
    fn out_of_range_rotations() {
        let d = xi_k_seifert(35).unwrap();
        assert!(matches!(
            StructureCandidate::new(d.clone(), RotationAssignment(vec![-3, -1, -1, 2, -1, 68])),
            Err(Error::RotationOutOfRange { component: 0, .. })
        ));
        assert!(matches!(
            StructureCandidate::new(d.clone(), RotationAssignment(vec![0, -1, -1, 2, -1, 68])),
            Err(Error::RotationOutOfRange { component: 0, .. })
        ));
        assert!(matches!(
            StructureCandidate::new(d, RotationAssignment(vec![-1])),
            Err(Error::RotationCount { expected: 6, got: 1 })
        ));
    }

    #[test]
    fn conjugation() {
        let c = xi_k_candidate(35).unwrap();
        let cc = conjugate(&c);
        assert_eq!(cc.assignment().rotations(), &[1, 1, 1, -2, 1, -68]);
        assert_eq!(cc.k_vector().coords(), &[1, 0, 1, 1, -3, 1, -69]);
        assert_eq!(conjugate(&cc), c);

        // tb = -3 torus component and tb = -1 style zero rotations
        let d = data("-1;1/3,1/3,1/3");
        let zero = StructureCandidate::new(d, RotationAssignment(vec![0, 0, 0])).unwrap();
        assert_eq!(conjugate(&zero), zero);
    }

    #[test]
    fn enumeration_counts() {
        let d = data("-1;1/2,1/2,1/2");
        let all: Vec<_> = enumerate_candidates(&d, None).unwrap().collect();
        assert_eq!(all.len(), 8);

        let d = xi_k_seifert(90).unwrap();
        let it = enumerate_candidates(&d, None).unwrap();
        let total = it.total();
        let all: Vec<_> = it.collect();
        assert_eq!(all.len(), total);
        assert_eq!(total, 2 * 2 * 2 * 3 * 2 * 14);
        let mut rots: Vec<_> = all.iter().map(|c| c.assignment().clone()).collect();
        rots.sort();
        rots.dedup();
        assert_eq!(rots.len(), total);
        let g = standard_graph(&d).unwrap();
        assert!(all.iter().all(|c| is_characteristic(c.k_vector().coords(), &g).unwrap()));
    }

    #[test]
    fn enumeration_filtered() {
        let d = xi_k_seifert(35).unwrap();
        let xi = xi_k_candidate(35).unwrap();
        let g = standard_graph(&d).unwrap();
        let class = SpinCClass::new(xi.k_vector().clone(), &g).unwrap();
        let total = enumerate_candidates(&d, None).unwrap().total();
        let filtered: Vec<_> = enumerate_candidates(&d, Some(&class)).unwrap().collect();
        assert!(filtered.len() < total);
        assert!(filtered.contains(&xi));
    }

    #[test]
    fn complementary() {
        for k in [-1, 0, 35] {
            assert!(!complementary_legs(&torus_surgery_seifert(k).unwrap()));
        }
        assert!(complementary_legs(&data("-1;3/8,5/8,1/2")));
        assert!(complementary_legs(&data("-1;1/2,1/2,2/7")));
        assert!(complementary_legs(&data("-1;2/7,1/2,1/2")));
    }

    #[test]
    fn torus_family() {
        assert_eq!(torus_surgery_seifert(35).unwrap().to_string(), "-1;3/8,8/13,1/69");
        assert_eq!(torus_surgery_seifert(-1).unwrap().to_string(), "-1;3/8,8/13,1/105");
        assert!(torus_surgery_seifert(103).is_err());
        assert!(torus_surgery_seifert(102).is_ok());
        assert_eq!(torus_family_parameter(&xi_k_seifert(35).unwrap()), Some(35));
        assert_eq!(torus_family_parameter(&torus_surgery_seifert(-7).unwrap()), Some(-7));
        assert_eq!(torus_family_parameter(&data("-1;1/2,1/2,1/2")), None);
        assert!(is_lspace_family(83));
        assert!(!is_lspace_family(35));
        assert!(is_lspace_family(1000));
    }

    #[test]
    fn reorder_round_trip() {
        let xi = xi_k_candidate(35).unwrap();
        let caption = xi.reorder_legs(&XI_LEG_ORDER).unwrap();
        assert_eq!(caption.data(), &torus_surgery_seifert(35).unwrap());
        assert_eq!(caption.reorder_legs(&XI_LEG_ORDER).unwrap(), xi);
    }

    #[test]
    fn candidate_serde() {
        let xi = xi_k_candidate(35).unwrap();
        let json = serde_json::to_string(&xi).unwrap();
        assert_eq!(json, r#"{"seifert":"-1;8/13,3/8,1/69","rotations":[-1,-1,-1,2,-1,68]}"#);
        assert_eq!(serde_json::from_str::<StructureCandidate>(&json).unwrap(), xi);
    }
}
