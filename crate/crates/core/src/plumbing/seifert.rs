use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Normalised Seifert invariants `(e0; r1, ..., rn)` with every `ri` in (0,1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeifertData {
    e0: i64,
    ratios: Vec<Rational>,
}

impl SeifertData {
    pub fn new(e0: i64, ratios: Vec<Rational>) -> Result<Self> {
        if ratios.is_empty() {
            return Err(Error::NoRatios);
        }
        if let Some(&r) = ratios.iter().find(|r| !r.is_proper_fraction()) {
            return Err(Error::RatioOutOfRange(r));
        }
        Ok(SeifertData { e0, ratios })
    }

    pub fn e0(&self) -> i64 {
        self.e0
    }

    pub fn ratios(&self) -> &[Rational] {
        &self.ratios
    }

    pub fn leg_count(&self) -> usize {
        self.ratios.len()
    }

    /// Seifert data of the orientation reversal: `(-e0 - n; 1 - r1, ..., 1 - rn)`.
    pub fn dual(&self) -> SeifertData {
        SeifertData {
            e0: -self.e0 - self.ratios.len() as i64,
            ratios: self.ratios.iter().map(Rational::complement).collect(),
        }
    }

    /// Same manifold with the legs listed in the order `perm[0], perm[1], ...`.
    pub fn reorder_legs(&self, perm: &[usize]) -> Result<SeifertData> {
        check_permutation(perm, self.ratios.len())?;
        Ok(SeifertData {
            e0: self.e0,
            ratios: perm.iter().map(|&i| self.ratios[i]).collect(),
        })
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Parse(format!("{perm:?} is not a permutation of {n} legs")));
    }
    for &i in perm {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::Parse(format!("{perm:?} is not a permutation of {n} legs")));
        }
    }
    Ok(())
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ratios: Vec<String> = self.ratios.iter().map(Rational::to_string).collect();
        write!(f, "{};{}", self.e0, ratios.join(","))
    }
}

impl FromStr for SeifertData {
    type Err = Error;

    /// Parses `"e0;p1/q1,p2/q2,..."`.
    fn from_str(s: &str) -> Result<Self> {
        let (e0, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"e0;p/q,...\", got {s:?}")))?;
        let e0 = e0
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad e0 {e0:?}")))?;
        let ratios = rest
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Rational>>>()?;
        SeifertData::new(e0, ratios)
    }
}

impl Serialize for SeifertData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SeifertData {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A negative continued fraction `[m1, ..., mk] = m1 - 1/(m2 - 1/(... - 1/mk))`
/// with every entry at most -2.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NegCF(Vec<i64>);

impl NegCF {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(|&m| m > -2) {
            return Err(Error::Parse(format!(
                "negative continued fraction entries must be <= -2: {entries:?}"
            )));
        }
        Ok(NegCF(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self) -> Rational {
        let mut it = self.0.iter().rev();
        let mut acc = Rational::from_integer(*it.next().expect("non-empty"));
        for &m in it {
            // entries <= -2 keep the tail value <= -1, never zero
            acc = Rational::from_integer(m) - acc.recip().expect("nonzero tail");
        }
        acc
    }
}

/// Framings of the leg for `r`: the expansion of `-1/r` with entries <= -2.
pub fn leg_framings(r: Rational) -> Result<NegCF> {
    if !r.is_proper_fraction() {
        return Err(Error::RatioOutOfRange(r));
    }
    // x = 1/r > 1; peel off a = ceil(x) and continue with 1/(a - x)
    let mut x = r.recip()?;
    let mut entries = Vec::new();
    loop {
        let a = x.ceil();
        entries.push(-a);
        let rest = Rational::from_integer(a) - x;
        if rest == Rational::from_integer(0) {
            break;
        }
        x = rest.recip()?;
    }
    Ok(NegCF(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn paper_leg_expansions() {
        assert_eq!(leg_framings(q(3, 8)).unwrap().entries(), &[-3, -3]);
        assert_eq!(leg_framings(q(8, 13)).unwrap().entries(), &[-2, -3, -3]);
        assert_eq!(leg_framings(q(1, 69)).unwrap().entries(), &[-69]);
        assert_eq!(leg_framings(q(5, 8)).unwrap().entries(), &[-2, -3, -2]);
        assert_eq!(leg_framings(q(5, 13)).unwrap().entries(), &[-3, -3, -2]);
        assert_eq!(leg_framings(q(68, 69)).unwrap().entries(), vec![-2; 68].as_slice());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(leg_framings(q(1, 1)).is_err());
        assert!(leg_framings(q(0, 1)).is_err());
        assert!(leg_framings(q(-1, 2)).is_err());
        assert!(leg_framings(q(3, 2)).is_err());
    }

    #[test]
    fn parse_and_display() {
        let d: SeifertData = "-1;3/8,8/13,1/69".parse().unwrap();
        assert_eq!(d.e0(), -1);
        assert_eq!(d.ratios(), &[q(3, 8), q(8, 13), q(1, 69)]);
        assert_eq!(d.to_string(), "-1;3/8,8/13,1/69");
        assert!("-1;3/8,1/1".parse::<SeifertData>().is_err());
        assert!("-1".parse::<SeifertData>().is_err());
        assert!("-1;".parse::<SeifertData>().is_err());
    }

    #[test]
    fn dual_examples() {
        let d: SeifertData = "-1;3/8,8/13,1/69".parse().unwrap();
        assert_eq!(d.dual().to_string(), "-2;5/8,5/13,68/69");
        let h: SeifertData = "-1;1/2,1/2,1/2".parse().unwrap();
        assert_eq!(h.dual().to_string(), "-2;1/2,1/2,1/2");
    }

    #[test]
    fn reorder() {
        let d: SeifertData = "-1;3/8,8/13,1/69".parse().unwrap();
        assert_eq!(d.reorder_legs(&[1, 0, 2]).unwrap().to_string(), "-1;8/13,3/8,1/69");
        assert!(d.reorder_legs(&[0, 0, 2]).is_err());
        assert!(d.reorder_legs(&[0, 1]).is_err());
    }

    /// Sum over the leg of (-m - 2).
    fn excess(cf: &NegCF) -> i64 {
        cf.entries().iter().map(|m| -m - 2).sum()
    }

    #[test]
    fn riemenschneider_point_rule_brute_force() {
        for den in 2..=200i64 {
            for num in 1..den {
                if num_integer::gcd(num, den) != 1 {
                    continue;
                }
                let a = leg_framings(q(num, den)).unwrap();
                let b = leg_framings(q(den - num, den)).unwrap();
                assert_eq!(excess(&a), b.len() as i64 - 1, "{num}/{den}");
                assert_eq!(excess(&b), a.len() as i64 - 1, "{num}/{den}");
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip(den in 2i64..=10_000, num_seed in 1i64..10_000) {
            let num = 1 + num_seed % (den - 1);
            let r = q(num, den);
            let cf = leg_framings(r).unwrap();
            prop_assert!(cf.entries().iter().all(|&m| m <= -2));
            prop_assert_eq!(cf.evaluate(), -r.recip().unwrap());
        }

        #[test]
        fn dual_is_involution(e0 in -5i64..5, nums in proptest::collection::vec((1i64..50, 2i64..60), 1..5)) {
            let ratios: Vec<Rational> = nums
                .into_iter()
                .map(|(p, d)| q(1 + p % (d - 1), d))
                .collect();
            let data = SeifertData::new(e0, ratios).unwrap();
            prop_assert_eq!(data.dual().dual(), data);
        }
    }
}
