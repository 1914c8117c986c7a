//! Tightness and vanishing verdicts built from the full-path machinery.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contact::{
    complementary_legs, enumerate_candidates, torus_family_parameter, xi_k_candidate,
    xi_k_magic_c, xi_k_seifert, StructureCandidate,
};
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::fullpath::{
    ends_correctly, full_path_equiv, grading, initial_end, walk, GradingValue, WalkOptions,
    WalkStatus,
};
use crate::plumbing::{standard_graph, CharVector, PlumbingGraph, SeifertData, SpinCClass};

/// Shift that aligns [`grading`] with [`closed_form_grading`]; calibrated
/// over `k = 1..=35`.
pub const GRADING_SHIFT: i64 = 0;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `(-k² + 153k - 5184) / (4k)`.
pub fn closed_form_grading(k: i64) -> Result<GradingValue> {
    if k == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "k",
            value: k,
            range: "k != 0",
        });
    }
    Ok(GradingValue(BigRational::new(
        BigInt::from(-k * k + 153 * k - 5184),
        BigInt::from(4 * k),
    )))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum CPlusStatus {
    ZeroByDefiniteness,
    ZeroByGradingGap,
    /// `k = 0`: the vector is non-torsion on the boundary; taken on external
    /// authority, not computed.
    ZeroByNonTorsion,
    Undetermined,
}

impl fmt::Display for CPlusStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CPlusStatus::ZeroByDefiniteness => "ZeroByDefiniteness",
            CPlusStatus::ZeroByGradingGap => "ZeroByGradingGap",
            CPlusStatus::ZeroByNonTorsion => "ZeroByNonTorsion",
            CPlusStatus::Undetermined => "Undetermined",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundEntry {
    pub label: String,
    pub value: GradingValue,
}

impl BoundEntry {
    fn new(label: &str, value: BigRational) -> Self {
        BoundEntry {
            label: label.to_string(),
            value: GradingValue(value),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InvariantReport {
    pub c_hat_nonzero: bool,
    pub c_plus_status: CPlusStatus,
    pub grading_of_c: Option<GradingValue>,
    pub bound_chain: Vec<BoundEntry>,
    pub fillability_obstructed: bool,
    pub conjugate_distinct: bool,
    pub notes: Vec<String>,
}

/// ĉ ≠ 0 surrogate: the full path of the magic C ends correctly on `G*`.
pub fn c_hat_nonzero(c: &StructureCandidate) -> Result<bool> {
    let emb = Embedding::new(c.data())?;
    c_hat_nonzero_with(&emb, c)
}

fn c_hat_nonzero_with(emb: &Embedding, c: &StructureCandidate) -> Result<bool> {
    let mc = emb.magic_c(c.k_vector())?;
    ends_correctly(&mc, emb.dual_graph())
}

/// `V_k = (1 | 0 -1 -1 | -1 -1 | 52 - k(1 + 2⌊36/k⌋))` on `G`, `1 <= k <= 35`.
pub fn build_vk(k: i64) -> Result<CharVector> {
    if !(1..=35).contains(&k) {
        return Err(Error::ParameterOutOfRange {
            name: "k",
            value: k,
            range: "1..=35",
        });
    }
    let g = standard_graph(&xi_k_seifert(k)?)?;
    CharVector::new(vec![1, 0, -1, -1, -1, -1, 52 - k * (1 + 2 * (36 / k))], &g)
}

/// The `c⁺` part of a report for `ξ_k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CPlusVerdict {
    pub k: i64,
    pub status: CPlusStatus,
    pub bound_chain: Vec<BoundEntry>,
    pub notes: Vec<String>,
}

/// Verdict on `c⁺(ξ_k)` for `k <= 35`.
///
/// For `1 <= k <= 35` the computable links
/// `M(C_k) < -15/2 < -(V_kᵀ Q_G⁻¹ V_k + 1)/4` are checked exactly, together
/// with `ends_correctly(V_k)`; the remaining links are listed as assumptions.
pub fn c_plus_verdict(k: i64) -> Result<CPlusVerdict> {
    if k > 35 {
        return Err(Error::ParameterOutOfRange {
            name: "k",
            value: k,
            range: "k <= 35",
        });
    }
    let data = xi_k_seifert(k)?;
    let g = standard_graph(&data)?;
    let mut verdict = CPlusVerdict {
        k,
        status: CPlusStatus::Undetermined,
        bound_chain: Vec::new(),
        notes: Vec::new(),
    };
    if k <= -1 {
        if g.is_negative_definite() {
            verdict.status = CPlusStatus::ZeroByDefiniteness;
            verdict.notes.push("G is negative definite".into());
        } else {
            verdict.notes.push("G is not negative definite".into());
        }
        return Ok(verdict);
    }
    if k == 0 {
        verdict.status = CPlusStatus::ZeroByNonTorsion;
        verdict
            .notes
            .push("C_0 is non-torsion on the boundary; not computed".into());
        return Ok(verdict);
    }

    let gstar = standard_graph(&data.dual())?;
    let ck = CharVector::new(xi_k_magic_c(k), &gstar)?;
    let m_ck = grading(&ck, &gstar, &rat(GRADING_SHIFT))?.0;
    let gap = BigRational::new(BigInt::from(-15), BigInt::from(2));
    let vk = build_vk(k)?;
    let vq = g
        .intersection_matrix()
        .inverse_quadratic_form(vk.coords())
        .ok_or(Error::DegenerateForm)?;
    let chain_term = -(vq + rat(1)) / rat(4);

    verdict.bound_chain = vec![
        BoundEntry::new("M(C_k)", m_ck.clone()),
        BoundEntry::new("-15/2", gap.clone()),
        BoundEntry::new("-(V_k^T Q_G^-1 V_k + 1)/4", chain_term.clone()),
    ];
    let mut ok = true;
    if m_ck >= gap {
        ok = false;
        verdict
            .notes
            .push(format!("M(C_k) = {} is not below -15/2", GradingValue(m_ck)));
    }
    if gap >= chain_term {
        ok = false;
        verdict.notes.push(format!(
            "-15/2 is not below {}",
            GradingValue(chain_term.clone())
        ));
    }
    if !ends_correctly(&vk, &g)? {
        ok = false;
        verdict.notes.push("full path of V_k does not end correctly".into());
    }
    if ok {
        verdict.status = CPlusStatus::ZeroByGradingGap;
        verdict.notes.push(
            "assumed, not computed: -(V_k^T Q_G^-1 V_k + 1)/4 <= -min over S of M(V) < d".into(),
        );
    }
    Ok(verdict)
}

/// `(Vᵀ Q⁻¹ V + |G| - 6) / 4` on the graph of `ξ_k`.
pub fn vk_grading(v: &CharVector, g: &PlumbingGraph) -> Result<BigRational> {
    let vq = g
        .intersection_matrix()
        .inverse_quadratic_form(v.coords())
        .ok_or(Error::DegenerateForm)?;
    Ok((vq + rat(g.vertex_count() as i64 - 6)) / rat(4))
}

/// Bounded estimate of `min M(V)` over vectors in the Spin^c class of `V_k`
/// whose full path ends correctly, searching terminal vectors only.
/// Returns `None` when the search finds nothing.
pub fn min_over_s_estimate(k: i64) -> Result<Option<BigRational>> {
    let vk = build_vk(k)?;
    let g = standard_graph(&xi_k_seifert(k)?)?;
    let class = SpinCClass::new(vk, &g)?;
    let ranges: Vec<Vec<i64>> = g
        .framings()
        .iter()
        .map(|&m| (m..=-m - 2).step_by(2).collect())
        .collect();
    if ranges.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let opts = WalkOptions::quiet();
    let mut best: Option<BigRational> = None;
    let mut idx = vec![0usize; ranges.len()];
    loop {
        let v = CharVector::from_coords_unchecked(
            idx.iter().zip(&ranges).map(|(&i, r)| r[i]).collect(),
        );
        if class.contains(&v)? {
            let back = walk(&-&v, &g, opts)?;
            if back.status == WalkStatus::EndsWell {
                let m = vk_grading(&v, &g)?;
                if best.as_ref().map_or(true, |b| m < *b) {
                    best = Some(m);
                }
            }
        }
        let Some(pos) = (0..idx.len()).rev().find(|&i| idx[i] + 1 < ranges[i].len()) else {
            break;
        };
        idx[pos] += 1;
        for j in pos + 1..idx.len() {
            idx[j] = 0;
        }
    }
    Ok(best)
}

/// Caller's statement that the input is an L-space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LSpaceAttestation {
    Attested,
    Absent,
}

impl LSpaceAttestation {
    /// Derived for the torus-surgery family; absent otherwise.
    pub fn for_data(data: &SeifertData) -> Self {
        match torus_family_parameter(data) {
            Some(k) if crate::contact::is_lspace_family(k) => LSpaceAttestation::Attested,
            _ => LSpaceAttestation::Absent,
        }
    }
}

/// One full-path class of tight candidates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TightClass {
    pub representative: StructureCandidate,
    pub magic_c: CharVector,
    pub initial_end: CharVector,
    pub count: usize,
    pub spinc_id: usize,
    pub conjugate_of: Option<usize>,
}

/// Tight candidates on an L-space, partitioned by the full path of their
/// magic C. Classes appear in enumeration order of their first member;
/// Spin^c ids are numbered in order of first appearance.
pub fn classify_tight(
    data: &SeifertData,
    attestation: LSpaceAttestation,
) -> Result<Vec<TightClass>> {
    if attestation != LSpaceAttestation::Attested {
        return Err(Error::MissingAttestation);
    }
    match data.e0() {
        -1 => {}
        0 => return Err(Error::Unimplemented("classification for e0 = 0")),
        got => return Err(Error::WrongEuler { expected: -1, got }),
    }
    let emb = Embedding::new(data)?;
    let gstar = emb.dual_graph();
    let candidates: Vec<StructureCandidate> = enumerate_candidates(data, None)?.collect();
    let opts = WalkOptions::quiet();
    let evaluated: Vec<Option<(StructureCandidate, CharVector, CharVector)>> = candidates
        .into_par_iter()
        .map(|c| -> Result<_> {
            let mc = emb.magic_c(c.k_vector())?;
            if !ends_correctly(&mc, gstar)? {
                return Ok(None);
            }
            let end = initial_end(&mc, gstar, opts)?;
            Ok(Some((c, mc, end)))
        })
        .collect::<Result<_>>()?;

    let mut classes: Vec<TightClass> = Vec::new();
    let mut spinc_classes: Vec<SpinCClass> = Vec::new();
    for (c, mc, end) in evaluated.into_iter().flatten() {
        if let Some(existing) = classes.iter_mut().find(|t| t.initial_end == end) {
            existing.count += 1;
            continue;
        }
        let spinc_id = match spinc_classes
            .iter()
            .map(|s| s.contains(&mc))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .position(|&b| b)
        {
            Some(i) => i,
            None => {
                spinc_classes.push(SpinCClass::new(mc.clone(), gstar)?);
                spinc_classes.len() - 1
            }
        };
        classes.push(TightClass {
            representative: c,
            magic_c: mc,
            initial_end: end,
            count: 1,
            spinc_id,
            conjugate_of: None,
        });
    }
    for i in 0..classes.len() {
        let conj_end = initial_end(&-&classes[i].magic_c, gstar, opts)?;
        classes[i].conjugate_of = classes.iter().position(|t| t.initial_end == conj_end);
    }
    Ok(classes)
}

/// `Some(k)` when `c` is `ξ_k` in some leg order.
fn as_xi_k(c: &StructureCandidate) -> Option<i64> {
    let k = torus_family_parameter(c.data())?;
    let xi = xi_k_candidate(k).ok()?;
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    PERMS
        .iter()
        .any(|p| c.reorder_legs(p).map_or(false, |r| r == xi))
        .then_some(k)
}

pub fn full_report(c: &StructureCandidate) -> Result<InvariantReport> {
    let emb = Embedding::new(c.data())?;
    let gstar = emb.dual_graph();
    let mc = emb.magic_c(c.k_vector())?;
    let c_hat = ends_correctly(&mc, gstar)?;
    let grading_of_c = match grading(&mc, gstar, &rat(GRADING_SHIFT)) {
        Ok(v) => Some(v),
        Err(Error::DegenerateForm) => None,
        Err(e) => return Err(e),
    };
    let conjugate_distinct = !full_path_equiv(&mc, &-&mc, gstar)?;
    let mut notes = Vec::new();
    let (c_plus_status, bound_chain) = match as_xi_k(c) {
        Some(k) if k <= 35 => {
            let v = c_plus_verdict(k)?;
            notes.extend(v.notes);
            (v.status, v.bound_chain)
        }
        Some(_) => {
            notes.push("no c+ argument for k > 35".into());
            (CPlusStatus::Undetermined, Vec::new())
        }
        None => {
            notes.push("c+ is only decided for the torus-surgery structures".into());
            (CPlusStatus::Undetermined, Vec::new())
        }
    };
    if !c_hat {
        notes.push("full path of the magic C does not end correctly".into());
    }
    Ok(InvariantReport {
        c_hat_nonzero: c_hat,
        c_plus_status,
        grading_of_c,
        bound_chain,
        fillability_obstructed: !complementary_legs(c.data()),
        conjugate_distinct,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vk_examples() {
        assert_eq!(build_vk(35).unwrap().coords(), &[1, 0, -1, -1, -1, -1, -53]);
        assert_eq!(build_vk(1).unwrap().coords(), &[1, 0, -1, -1, -1, -1, -21]);
        assert!(build_vk(36).is_err());
        assert!(build_vk(0).is_err());
    }

    #[test]
    fn closed_form() {
        assert_eq!(closed_form_grading(35).unwrap(), GradingValue::from_ratio(-527, 70));
        assert_eq!(closed_form_grading(1).unwrap(), GradingValue::from_ratio(-1258, 1));
        assert!(closed_form_grading(0).is_err());
    }

    #[test]
    fn verdicts() {
        let v = c_plus_verdict(35).unwrap();
        assert_eq!(v.status, CPlusStatus::ZeroByGradingGap);
        assert_eq!(v.bound_chain[0].value, GradingValue::from_ratio(-527, 70));
        assert_eq!(v.bound_chain[2].value, GradingValue::from_ratio(-457, 70));
        assert_eq!(c_plus_verdict(1).unwrap().bound_chain[0].value, GradingValue::from_ratio(-1258, 1));
        assert_eq!(c_plus_verdict(-1).unwrap().status, CPlusStatus::ZeroByDefiniteness);
        assert_eq!(c_plus_verdict(0).unwrap().status, CPlusStatus::ZeroByNonTorsion);
        assert!(c_plus_verdict(36).is_err());
    }

    #[test]
    fn min_over_s_matches_vk() {
        for k in [1, 35] {
            let g = standard_graph(&xi_k_seifert(k).unwrap()).unwrap();
            let m = vk_grading(&build_vk(k).unwrap(), &g).unwrap();
            assert_eq!(min_over_s_estimate(k).unwrap(), Some(m), "k = {k}");
        }
    }

    #[test]
    fn reports() {
        let r = full_report(&xi_k_candidate(35).unwrap()).unwrap();
        assert!(r.c_hat_nonzero);
        assert_eq!(r.c_plus_status, CPlusStatus::ZeroByGradingGap);
        assert!(r.fillability_obstructed);
        assert!(r.conjugate_distinct);
        assert_eq!(r.grading_of_c, Some(GradingValue::from_ratio(-527, 70)));

        let caption = xi_k_candidate(-1).unwrap().reorder_legs(&[1, 0, 2]).unwrap();
        let r = full_report(&caption).unwrap();
        assert!(r.c_hat_nonzero);
        assert_eq!(r.c_plus_status, CPlusStatus::ZeroByDefiniteness);
        assert!(r.fillability_obstructed);

        let json = serde_json::to_string(&r).unwrap();
        let back: InvariantReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn classification_guards() {
        let d: SeifertData = "-1;1/2,1/2,1/2".parse().unwrap();
        assert!(matches!(
            classify_tight(&d, LSpaceAttestation::Absent),
            Err(Error::MissingAttestation)
        ));
        let d0: SeifertData = "0;1/2,1/2,1/2".parse().unwrap();
        assert!(matches!(
            classify_tight(&d0, LSpaceAttestation::Attested),
            Err(Error::Unimplemented(_))
        ));
        assert_eq!(
            LSpaceAttestation::for_data(&xi_k_seifert(90).unwrap()),
            LSpaceAttestation::Attested
        );
        assert_eq!(
            LSpaceAttestation::for_data(&xi_k_seifert(35).unwrap()),
            LSpaceAttestation::Absent
        );
        let small = classify_tight(&d, LSpaceAttestation::Attested).unwrap();
        let total: usize = small.iter().map(|t| t.count).sum();
        assert!(total <= 8);
    }
}
