#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use zerotwist::plumbing::PlumbingGraph;

/// Every star graph with at most `max_vertices` vertices whose framings come
/// from `framings`. Legs are listed in non-increasing length, so some graphs
/// appear more than once up to relabelling.
pub fn star_graphs(max_vertices: usize, framings: &[i64]) -> Vec<PlumbingGraph> {
    fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in (1..=n.min(max)).rev() {
            prefix.push(x);
            partitions(n - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut shapes: Vec<Vec<usize>> = vec![vec![]];
    for rest in 1..max_vertices {
        partitions(rest, rest, &mut Vec::new(), &mut shapes);
    }
    let mut out = Vec::new();
    for shape in shapes {
        let n = 1 + shape.iter().sum::<usize>();
        let mut idx = vec![0usize; n];
        loop {
            let f: Vec<i64> = idx.iter().map(|&i| framings[i]).collect();
            let mut legs = Vec::new();
            let mut at = 1;
            for &len in &shape {
                legs.push(f[at..at + len].to_vec());
                at += len;
            }
            out.push(PlumbingGraph::new(f[0], legs));
            let Some(pos) = idx.iter().rposition(|&i| i + 1 < framings.len()) else {
                break;
            };
            idx[pos] += 1;
            for j in pos + 1..n {
                idx[j] = 0;
            }
        }
    }
    out
}

/// All characteristic vectors on `g` with coordinates in `[lo, hi]`.
pub fn char_box(g: &PlumbingGraph, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let ranges: Vec<Vec<i64>> = g
        .framings()
        .iter()
        .map(|&m| (lo..=hi).filter(|x| (x - m).rem_euclid(2) == 0).collect())
        .collect();
    let mut out = vec![vec![]];
    for r in &ranges {
        out = out
            .into_iter()
            .flat_map(|p| {
                r.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Intersection matrix rebuilt from framings and the star shape.
pub fn matrix_of(g: &PlumbingGraph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut q = vec![vec![0i64; n]; n];
    q[0][0] = g.center();
    let mut at = 1;
    for leg in g.legs() {
        for (j, &m) in leg.iter().enumerate() {
            q[at + j][at + j] = m;
            let prev = if j == 0 { 0 } else { at + j - 1 };
            q[prev][at + j] = 1;
            q[at + j][prev] = 1;
        }
        at += leg.len();
    }
    q
}

/// Determinant by cofactor expansion.
pub fn det_cofactor(q: &[Vec<i64>]) -> BigInt {
    let n = q.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if q[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = q[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let term = BigInt::from(q[0][j]) * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `vᵀ Q⁻¹ v` by Gauss-Jordan elimination over `i128` fractions.
pub fn quad_form_oracle(q: &[Vec<i64>], v: &[i64]) -> Option<BigRational> {
    let n = q.len();
    let r = |x: i64| Ratio::from_integer(i128::from(x));
    let mut a: Vec<Vec<Ratio<i128>>> = q
        .iter()
        .zip(v)
        .map(|(row, &b)| row.iter().map(|&x| r(x)).chain(std::iter::once(r(b))).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        let pivot = a[col][col];
        for x in a[col].iter_mut() {
            *x /= pivot;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col];
                for j in 0..=n {
                    let d = f * a[col][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    let total = (0..n).fold(Ratio::<i128>::zero(), |acc, i| acc + r(v[i]) * a[i][n]);
    Some(BigRational::new(
        BigInt::from(*total.numer()),
        BigInt::from(*total.denom()),
    ))
}

/// Value of `m1 - 1/(m2 - 1/(...))`.
pub fn eval_negcf(entries: &[i64]) -> Ratio<i128> {
    let mut acc = Ratio::from_integer(i128::from(*entries.last().unwrap()));
    for &m in entries.iter().rev().skip(1) {
        acc = Ratio::from_integer(i128::from(m)) - acc.recip();
    }
    acc
}

/// Third leg of length `len`: `prefix`, zeros, then `suffix`.
pub fn padded(prefix: &[i64], suffix: &[i64], len: usize) -> Vec<i64> {
    let mut v = prefix.to_vec();
    v.resize(len - suffix.len(), 0);
    v.extend_from_slice(suffix);
    v
}
