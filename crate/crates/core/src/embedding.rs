//! Embedding of the two plumbings `P_G` and `P_{G*}` in a blown-up
//! projective plane, and the extension of a characteristic vector on `G`
//! to a class with ±1 coefficients.
//!
//! Classes are written over the basis `(h, e_1, ..., e_N)` with pairing
//! `a·a' - Σ b_i b'_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::plumbing::{check_characteristic, standard_graph, CharVector, PlumbingGraph, SeifertData};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HomologyClass {
    pub h: i64,
    pub e: Vec<i64>,
}

impl HomologyClass {
    pub fn h() -> Self {
        HomologyClass { h: 1, e: vec![] }
    }

    pub fn exceptional(index: usize) -> Self {
        let mut e = vec![0; index];
        e[index - 1] = 1;
        HomologyClass { h: 0, e }
    }

    /// Coefficient of `e_i` (1-based); zero beyond the stored length.
    pub fn e_coeff(&self, i: usize) -> i64 {
        self.e.get(i - 1).copied().unwrap_or(0)
    }

    pub fn pairing(&self, other: &HomologyClass) -> i64 {
        self.h * other.h
            - self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| a * b)
                .sum::<i64>()
    }

    pub fn square(&self) -> i64 {
        self.pairing(self)
    }

    fn subtract_exceptional(&mut self, index: usize) {
        if self.e.len() < index {
            self.e.resize(index, 0);
        }
        self.e[index - 1] -= 1;
    }

    fn pad(&mut self, n: usize) {
        if self.e.len() < n {
            self.e.resize(n, 0);
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CurveRole {
    /// Vertex of `G` (index in the vertex ordering of `standard_graph(data)`).
    G(usize),
    /// Vertex of `G*`.
    GStar(usize),
    /// Not part of either plumbing.
    Consumed,
}

impl fmt::Display for CurveRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveRole::G(i) => write!(f, "G:{i}"),
            CurveRole::GStar(i) => write!(f, "G*:{i}"),
            CurveRole::Consumed => f.write_str("consumed"),
        }
    }
}

impl FromStr for CurveRole {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad curve role {s:?}"));
        if s == "consumed" {
            return Ok(CurveRole::Consumed);
        }
        let (tag, pos) = s.split_once(':').ok_or_else(bad)?;
        let pos = pos.parse().map_err(|_| bad())?;
        match tag {
            "G" => Ok(CurveRole::G(pos)),
            "G*" => Ok(CurveRole::GStar(pos)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for CurveRole {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurveRole {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Curve {
    pub name: String,
    pub role: CurveRole,
    #[serde(flatten)]
    pub class: HomologyClass,
}

/// Named curves in `CP² # N (-CP²)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BlowupConfiguration {
    #[serde(rename = "N")]
    n: usize,
    curves: Vec<Curve>,
}

impl BlowupConfiguration {
    /// Lines `l_1..l_n` through `p` and a line `l` missing `p`, after
    /// blowing up `p`: `l_i = h - e_1`, exceptional `E1 = e_1`, `l = h`.
    pub fn init(n_legs: usize) -> Self {
        let mut curves: Vec<Curve> = (1..=n_legs)
            .map(|i| Curve {
                name: format!("l{i}"),
                role: CurveRole::Consumed,
                class: HomologyClass { h: 1, e: vec![-1] },
            })
            .collect();
        curves.push(Curve {
            name: "E1".into(),
            role: CurveRole::G(0),
            class: HomologyClass::exceptional(1),
        });
        curves.push(Curve {
            name: "l".into(),
            role: CurveRole::GStar(0),
            class: HomologyClass { h: 1, e: vec![0] },
        });
        BlowupConfiguration { n: 1, curves }
    }

    /// Number of blow-ups `N`.
    pub fn blowup_count(&self) -> usize {
        self.n
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.curves
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn curve(&self, name: &str) -> Result<&Curve> {
        Ok(&self.curves[self.index_of(name)?])
    }

    pub fn pairing(&self, a: &str, b: &str) -> Result<i64> {
        Ok(self.curve(a)?.class.pairing(&self.curve(b)?.class))
    }

    fn push_exceptional(&mut self) -> usize {
        self.n += 1;
        for c in &mut self.curves {
            c.class.pad(self.n);
        }
        let mut class = HomologyClass::exceptional(self.n);
        class.pad(self.n);
        self.curves.push(Curve {
            name: format!("E{}", self.n),
            role: CurveRole::Consumed,
            class,
        });
        self.curves.len() - 1
    }

    /// Blow up a transverse intersection point of two curves. Returns the
    /// index of the new exceptional curve.
    pub fn blow_up_intersection(&mut self, a: &str, b: &str) -> Result<usize> {
        let (ia, ib) = (self.index_of(a)?, self.index_of(b)?);
        if ia == ib || self.curves[ia].class.pairing(&self.curves[ib].class) < 1 {
            return Err(Error::DisjointCurves(a.to_string(), b.to_string()));
        }
        let new = self.push_exceptional();
        let n = self.n;
        self.curves[ia].class.subtract_exceptional(n);
        self.curves[ib].class.subtract_exceptional(n);
        Ok(new)
    }

    /// Blow up a generic point of one curve.
    pub fn blow_up_point_on(&mut self, a: &str) -> Result<usize> {
        let ia = self.index_of(a)?;
        let new = self.push_exceptional();
        let n = self.n;
        self.curves[ia].class.subtract_exceptional(n);
        Ok(new)
    }

    fn with_role(&self, pick: impl Fn(CurveRole) -> Option<usize>) -> Vec<&Curve> {
        let mut tagged: Vec<(usize, &Curve)> = self
            .curves
            .iter()
            .filter_map(|c| pick(c.role).map(|i| (i, c)))
            .collect();
        tagged.sort_by_key(|&(i, _)| i);
        tagged.into_iter().map(|(_, c)| c).collect()
    }

    /// Curves realising `G`, in vertex order.
    pub fn g_curves(&self) -> Vec<&Curve> {
        self.with_role(|r| match r {
            CurveRole::G(i) => Some(i),
            _ => None,
        })
    }

    /// Curves realising `G*`, in vertex order.
    pub fn gstar_curves(&self) -> Vec<&Curve> {
        self.with_role(|r| match r {
            CurveRole::GStar(i) => Some(i),
            _ => None,
        })
    }

    pub fn gram(curves: &[&Curve]) -> Matrix {
        let n = curves.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = curves[i].class.pairing(&curves[j].class);
            }
        }
        m
    }

    fn set_role(&mut self, idx: usize, role: CurveRole) {
        self.curves[idx].role = role;
    }
}

/// Blow-up sides for one leg, in forward order, after the first blow-up
/// inside the chain. `Left` blows up between the last `G`-side curve and the
/// middle (-1)-curve, `Right` between the middle curve and the last
/// `G*`-side curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Left,
    Right,
}

/// Recovers the schedule by blowing down `[a.., -1, ..rev(b)]` to `[-1, -1]`.
fn leg_schedule(a: &[i64], b: &[i64]) -> std::result::Result<Vec<Side>, String> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut rev = Vec::new();
    while !(a == [-2] && b == [-2]) {
        let (Some(x), Some(y)) = (a.last_mut(), b.last_mut()) else {
            return Err("empty leg".into());
        };
        *x += 1;
        *y += 1;
        if *x == -1 && a.len() > 1 {
            a.pop();
            rev.push(Side::Right);
        } else if *y == -1 && b.len() > 1 {
            b.pop();
            rev.push(Side::Left);
        } else {
            return Err(format!("legs {a:?} and {b:?} are not Riemenschneider dual"));
        }
    }
    rev.reverse();
    Ok(rev)
}

/// Builds the configuration realising `standard_graph(data)` (roles `G`)
/// and `standard_graph(data.dual())` (roles `G*`). Requires `e0 = -1`.
///
/// Per leg: blow up `l_i ∩ l`, then grow the chain between the two by
/// blowing up next to the middle (-1)-curve, following the dual expansions.
pub fn build_embedding(data: &SeifertData) -> Result<BlowupConfiguration> {
    if data.e0() != -1 {
        return Err(Error::WrongEuler {
            expected: -1,
            got: data.e0(),
        });
    }
    let g = standard_graph(data)?;
    let gstar = standard_graph(&data.dual())?;
    let mut cfg = BlowupConfiguration::init(data.leg_count());

    let fail = |cfg: &BlowupConfiguration, reason: String| Error::Schedule {
        reason,
        partial: Box::new(cfg.clone()),
    };

    let name = |cfg: &BlowupConfiguration, i: usize| cfg.curves[i].name.clone();
    let mut g_pos = 1;
    let mut gstar_pos = 1;
    for leg in 0..data.leg_count() {
        let (a, b) = (&g.legs()[leg], &gstar.legs()[leg]);
        let schedule = leg_schedule(a, b).map_err(|r| fail(&cfg, r))?;

        let line = cfg.index_of(&format!("l{}", leg + 1))?;
        let f = cfg.blow_up_intersection(&name(&cfg, line), "l")?;
        let mut left = vec![line];
        let mut right = vec![f];
        let mut mid = cfg.blow_up_intersection(&name(&cfg, line), &name(&cfg, f))?;
        for side in schedule {
            let next = match side {
                Side::Left => {
                    let last = *left.last().unwrap();
                    let n = cfg.blow_up_intersection(&name(&cfg, last), &name(&cfg, mid))?;
                    right.push(mid);
                    n
                }
                Side::Right => {
                    let last = *right.last().unwrap();
                    let n = cfg.blow_up_intersection(&name(&cfg, mid), &name(&cfg, last))?;
                    left.push(mid);
                    n
                }
            };
            mid = next;
        }
        for idx in left {
            cfg.set_role(idx, CurveRole::G(g_pos));
            g_pos += 1;
        }
        for idx in right {
            cfg.set_role(idx, CurveRole::GStar(gstar_pos));
            gstar_pos += 1;
        }
    }

    verify_embedding(&cfg, &g, &gstar).map_err(|r| fail(&cfg, r))?;
    Ok(cfg)
}

fn verify_embedding(
    cfg: &BlowupConfiguration,
    g: &PlumbingGraph,
    gstar: &PlumbingGraph,
) -> std::result::Result<(), String> {
    let gc = cfg.g_curves();
    let sc = cfg.gstar_curves();
    if BlowupConfiguration::gram(&gc) != g.intersection_matrix() {
        return Err("G curves do not realise the standard graph".into());
    }
    if BlowupConfiguration::gram(&sc) != gstar.intersection_matrix() {
        return Err("G* curves do not realise the dual standard graph".into());
    }
    if gc.iter().any(|x| sc.iter().any(|y| x.class.pairing(&y.class) != 0)) {
        return Err("G and G* curves intersect".into());
    }
    if 1 + cfg.n != gc.len() + sc.len() {
        return Err(format!(
            "rank mismatch: 1 + N = {} but |G| + |G*| = {}",
            1 + cfg.n,
            gc.len() + sc.len()
        ));
    }
    Ok(())
}

/// `PD(c) = alpha h + Σ alphas[i] e_{i+1}` with every coefficient ±1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SignAssignment {
    pub alpha: i64,
    pub alphas: Vec<i64>,
}

impl SignAssignment {
    /// `⟨c, [x]⟩ = alpha·h(x) - Σ alpha_i e_i(x)`.
    pub fn evaluate(&self, class: &HomologyClass) -> i64 {
        self.alpha * class.h
            - self
                .alphas
                .iter()
                .enumerate()
                .map(|(i, a)| a * class.e_coeff(i + 1))
                .sum::<i64>()
    }

    pub fn negated(&self) -> SignAssignment {
        SignAssignment {
            alpha: -self.alpha,
            alphas: self.alphas.iter().map(|a| -a).collect(),
        }
    }

    fn from_vars(vars: &[i64]) -> Self {
        SignAssignment {
            alpha: vars[0],
            alphas: vars[1..].to_vec(),
        }
    }
}

/// A linear constraint `Σ coeff_j x_j = target` over ±1 variables.
struct Constraint {
    terms: Vec<(usize, i64)>,
    target: i64,
}

struct SignSolver<'a> {
    constraints: &'a [Constraint],
    occurs: Vec<Vec<usize>>,
    value: Vec<i64>,
    trail: Vec<usize>,
}

impl SignSolver<'_> {
    /// Remaining target and total free |coefficient| of a constraint.
    fn slack(&self, c: &Constraint) -> (i64, i64) {
        let mut rem = c.target;
        let mut free = 0;
        for &(v, k) in &c.terms {
            match self.value[v] {
                0 => free += k.abs(),
                s => rem -= s * k,
            }
        }
        (rem, free)
    }

    fn assign(&mut self, var: usize, val: i64) -> bool {
        let mut queue = vec![(var, val)];
        while let Some((v, s)) = queue.pop() {
            match self.value[v] {
                0 => {
                    self.value[v] = s;
                    self.trail.push(v);
                }
                x if x == s => continue,
                _ => return false,
            }
            for &ci in &self.occurs[v] {
                let c = &self.constraints[ci];
                let (rem, free) = self.slack(c);
                if rem.abs() > free || (free - rem).rem_euclid(2) != 0 {
                    return false;
                }
                if rem.abs() == free && free > 0 {
                    // every free term is forced to push toward rem
                    for &(w, k) in &c.terms {
                        if self.value[w] == 0 {
                            queue.push((w, rem.signum() * k.signum()));
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.value[v] = 0;
        }
    }

    /// Depth-first in variable order, -1 before +1: the first solution found
    /// is the lexicographically smallest.
    fn search(&mut self, var: usize) -> bool {
        if var == self.value.len() {
            return true;
        }
        if self.value[var] != 0 {
            return self.search(var + 1);
        }
        for s in [-1, 1] {
            let mark = self.trail.len();
            if self.assign(var, s) && self.search(var + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Finds `alpha, alpha_i ∈ {±1}` reproducing `k` on every `G` curve.
/// Returns the lexicographically smallest solution (`-1 < +1`).
pub fn solve_signs(cfg: &BlowupConfiguration, k: &CharVector) -> Result<SignAssignment> {
    let curves = cfg.g_curves();
    if k.len() != curves.len() {
        return Err(Error::LengthMismatch {
            expected: curves.len(),
            got: k.len(),
        });
    }
    let nvars = cfg.n + 1;
    let constraints: Vec<Constraint> = curves
        .iter()
        .zip(k.coords())
        .map(|(c, &target)| {
            let mut terms = Vec::new();
            if c.class.h != 0 {
                terms.push((0, c.class.h));
            }
            for (i, &b) in c.class.e.iter().enumerate() {
                if b != 0 {
                    terms.push((i + 1, -b));
                }
            }
            Constraint { terms, target }
        })
        .collect();
    let mut occurs = vec![Vec::new(); nvars];
    for (ci, c) in constraints.iter().enumerate() {
        for &(v, _) in &c.terms {
            occurs[v].push(ci);
        }
    }
    // constraints with no terms must already hold
    if constraints.iter().any(|c| c.terms.is_empty() && c.target != 0) {
        return Err(Error::Unsatisfiable);
    }
    let mut solver = SignSolver {
        constraints: &constraints,
        occurs,
        value: vec![0; nvars],
        trail: Vec::new(),
    };
    // a sweep with nothing assigned catches constraints that are forced or
    // infeasible from the start
    for c in &constraints {
        let (rem, free) = solver.slack(c);
        if rem.abs() > free || (free - rem).rem_euclid(2) != 0 {
            return Err(Error::Unsatisfiable);
        }
    }
    if solver.search(0) {
        Ok(SignAssignment::from_vars(&solver.value))
    } else {
        Err(Error::Unsatisfiable)
    }
}

/// The restriction of a sign class to the `G*` curves.
pub fn restrict_to_gstar(cfg: &BlowupConfiguration, signs: &SignAssignment) -> CharVector {
    CharVector::from_coords_unchecked(
        cfg.gstar_curves()
            .iter()
            .map(|c| signs.evaluate(&c.class))
            .collect(),
    )
}

/// Embedding of one Seifert space together with both graphs, reusable
/// across many rotation vectors.
#[derive(Clone, Debug)]
pub struct Embedding {
    data: SeifertData,
    g: PlumbingGraph,
    gstar: PlumbingGraph,
    cfg: BlowupConfiguration,
}

impl Embedding {
    pub fn new(data: &SeifertData) -> Result<Self> {
        Ok(Embedding {
            data: data.clone(),
            g: standard_graph(data)?,
            gstar: standard_graph(&data.dual())?,
            cfg: build_embedding(data)?,
        })
    }

    pub fn data(&self) -> &SeifertData {
        &self.data
    }

    pub fn graph(&self) -> &PlumbingGraph {
        &self.g
    }

    pub fn dual_graph(&self) -> &PlumbingGraph {
        &self.gstar
    }

    pub fn configuration(&self) -> &BlowupConfiguration {
        &self.cfg
    }

    pub fn solve_signs(&self, k: &CharVector) -> Result<SignAssignment> {
        check_characteristic(k.coords(), &self.g)?;
        solve_signs(&self.cfg, k)
    }

    pub fn magic_c(&self, k: &CharVector) -> Result<CharVector> {
        let signs = self.solve_signs(k)?;
        let c = restrict_to_gstar(&self.cfg, &signs);
        debug_assert!(check_characteristic(c.coords(), &self.gstar).is_ok());
        Ok(c)
    }
}

/// Magic C of the rotation vector `k` on `G`: a characteristic vector on `G*`.
pub fn magic_c(data: &SeifertData, k: &CharVector) -> Result<CharVector> {
    Embedding::new(data)?.magic_c(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(s: &str) -> SeifertData {
        s.parse().unwrap()
    }

    #[test]
    fn initial_configuration() {
        let cfg = BlowupConfiguration::init(3);
        let squares: Vec<i64> = cfg.curves().iter().map(|c| c.class.square()).collect();
        assert_eq!(squares, vec![0, 0, 0, -1, 1]);
        assert_eq!(cfg.pairing("l1", "E1").unwrap(), 1);
        assert_eq!(cfg.pairing("l2", "l").unwrap(), 1);
        assert_eq!(cfg.pairing("l1", "l3").unwrap(), 0);
        assert_eq!(cfg.pairing("E1", "l").unwrap(), 0);
    }

    #[test]
    fn blow_up_moves() {
        let mut cfg = BlowupConfiguration::init(1);
        let new = cfg.blow_up_intersection("l1", "l").unwrap();
        assert_eq!(cfg.blowup_count(), 2);
        assert_eq!(cfg.curve("l1").unwrap().class, HomologyClass { h: 1, e: vec![-1, -1] });
        assert_eq!(cfg.curve("l").unwrap().class, HomologyClass { h: 1, e: vec![0, -1] });
        assert_eq!(cfg.curves()[new].class, HomologyClass { h: 0, e: vec![0, 1] });
        assert_eq!(cfg.curve("l1").unwrap().class.square(), -1);
        assert_eq!(cfg.curve("l").unwrap().class.square(), 0);
        assert_eq!(cfg.pairing("l1", "l").unwrap(), 0);
        assert!(matches!(cfg.blow_up_intersection("l1", "l"), Err(Error::DisjointCurves(..))));
        assert!(matches!(cfg.blow_up_intersection("nope", "l"), Err(Error::UnknownCurve(_))));

        let mut cfg = BlowupConfiguration::init(1);
        cfg.blow_up_point_on("E1").unwrap();
        assert_eq!(cfg.curve("E1").unwrap().class, HomologyClass { h: 0, e: vec![1, -1] });
        assert_eq!(cfg.curve("E1").unwrap().class.square(), -2);
        let before = cfg.pairing("l1", "E1").unwrap();
        cfg.blow_up_point_on("E1").unwrap();
        assert_eq!(cfg.curve("E1").unwrap().class.square(), -3);
        assert_eq!(cfg.pairing("l1", "E1").unwrap(), before);
        let minus_ones = cfg.curves().iter().filter(|c| c.name.starts_with('E') && c.name != "E1").count();
        assert_eq!(minus_ones, 2);
    }

    #[test]
    fn schedules() {
        assert_eq!(leg_schedule(&[-2], &[-2]).unwrap(), vec![]);
        assert_eq!(leg_schedule(&[-3], &[-2, -2]).unwrap(), vec![Side::Left]);
        assert!(leg_schedule(&[-3], &[-3]).is_err());
    }

    #[test]
    fn embedding_of_paper_space() {
        let d = data("-1;3/8,8/13,1/69");
        let cfg = build_embedding(&d).unwrap();
        assert_eq!(cfg.g_curves().len(), 7);
        assert_eq!(cfg.gstar_curves().len(), 75);
        assert_eq!(cfg.blowup_count(), 81);
    }

    #[test]
    fn embedding_of_small_space() {
        let d = data("-1;1/2,1/2,1/2");
        let cfg = build_embedding(&d).unwrap();
        let g = standard_graph(&d).unwrap();
        let gs = standard_graph(&d.dual()).unwrap();
        assert_eq!(BlowupConfiguration::gram(&cfg.g_curves()), g.intersection_matrix());
        assert_eq!(BlowupConfiguration::gram(&cfg.gstar_curves()), gs.intersection_matrix());
    }

    #[test]
    fn embedding_requires_minus_one() {
        assert!(matches!(
            build_embedding(&data("-2;1/2,1/2,1/2")),
            Err(Error::WrongEuler { expected: -1, got: -2 })
        ));
    }

    #[test]
    fn sign_solver_basic() {
        let d = data("-1;8/13,3/8,1/69");
        let emb = Embedding::new(&d).unwrap();
        let k = CharVector::new(vec![1, -2, -1, -1, 1, -1, 67], emb.graph()).unwrap();
        let s = emb.solve_signs(&k).unwrap();
        for (curve, &target) in emb.configuration().g_curves().iter().zip(k.coords()) {
            assert_eq!(s.evaluate(&curve.class), target);
        }
        let neg = s.negated();
        for (curve, &target) in emb.configuration().g_curves().iter().zip(k.coords()) {
            assert_eq!(neg.evaluate(&curve.class), -target);
        }
        assert!(emb.solve_signs(&-&k).is_ok());
    }

    #[test]
    fn sign_solver_unsatisfiable() {
        let d = data("-1;8/13,3/8,1/69");
        let emb = Embedding::new(&d).unwrap();
        // centre curve is e_1 alone: |coordinate| can be at most 1
        let k = CharVector::new(vec![3, -2, -1, -1, 1, -1, 67], emb.graph()).unwrap();
        assert_eq!(emb.solve_signs(&k), Err(Error::Unsatisfiable));
    }

    #[test]
    fn configuration_serde() {
        let cfg = build_embedding(&data("-1;1/2,1/2,1/2")).unwrap();
        let json = serde_json::to_string(&cfg).unwrap();
        assert!(json.starts_with("{\"N\":7,\"curves\":[{\"name\":\"l1\",\"role\":\"G:1\",\"h\":1,\"e\":["));
        let back: BlowupConfiguration = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cfg);
        let s = SignAssignment { alpha: 1, alphas: vec![-1, 1] };
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"alpha":1,"alphas":[-1,1]}"#);
    }
}
