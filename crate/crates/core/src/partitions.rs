//! Integer partitions, their statistics and diagram surgery.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::rational::{factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("no such partition")]
    NoSuchPartition,
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// `Π i^{m_i} m_i!`
    pub z: BigInt,
    /// `l! / Π m_i!`
    pub u: BigInt,
    /// `Π (i−1)^{m_i}`
    pub v: BigInt,
    /// `v · Σ_{i≥2} i·m_i/(i−1)`
    pub w: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surgery {
    Union(u32),
    Remove(u32),
    Down(u32),
    Up(u32),
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary positive parts into a partition; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only an already weakly decreasing list of positive parts.
    pub fn from_sorted(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NoSuchPartition);
        }
        Ok(Partition(parts))
    }

    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based indexing; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Map part → multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn contains_part(&self, r: u32) -> bool {
        self.0.contains(&r)
    }

    pub fn conjugate(&self) -> Partition {
        let l1 = self.part(1) as usize;
        let mut out = Vec::with_capacity(if self.is_empty() { 0 } else { l1 });
        if self.is_empty() {
            return Partition(out);
        }
        for j in 1..=l1 as u32 {
            out.push(self.0.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition(out)
    }

    pub fn stats(&self) -> PartitionStats {
        let mult = self.multiplicities();
        let mut z = BigInt::one();
        let mut v = BigInt::one();
        let mut denom = BigInt::one();
        let mut s = Rational::zero();
        for (&i, &m) in &mult {
            let mf = factorial(m as u64);
            z *= num_traits::pow(BigInt::from(i), m) * &mf;
            v *= num_traits::pow(BigInt::from(i) - 1, m);
            denom *= mf;
            if i >= 2 {
                s += Rational::new(BigInt::from(i as u64 * m as u64), BigInt::from(i - 1));
            }
        }
        let u = factorial(self.len() as u64) / denom;
        let w = Rational::from_integer(v.clone()) * s;
        PartitionStats { z, u, v, w }
    }

    /// `λ^{(i)}`: add a node at the end of row `i` (1-based).
    pub fn add_node(&self, i: usize) -> Result<Partition, PartitionError> {
        if i == 0 || i > self.len() + 1 || (i > 1 && self.part(i) == self.part(i - 1)) {
            return Err(PartitionError::NoSuchPartition);
        }
        let mut parts = self.0.clone();
        if i == self.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Ok(Partition(parts))
    }

    /// `λ_{(i)}`: remove the last node of row `i` (1-based).
    pub fn remove_node(&self, i: usize) -> Result<Partition, PartitionError> {
        if i == 0 || i > self.len() || self.part(i) == self.part(i + 1) {
            return Err(PartitionError::NoSuchPartition);
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn surgery(&self, kind: Surgery) -> Result<Partition, PartitionError> {
        let mut parts = self.0.clone();
        let remove = |parts: &mut Vec<u32>, r: u32| -> Result<(), PartitionError> {
            let pos = parts.iter().position(|&p| p == r).ok_or(PartitionError::NoSuchPartition)?;
            parts.remove(pos);
            Ok(())
        };
        match kind {
            Surgery::Union(r) => parts.push(r),
            Surgery::Remove(r) => remove(&mut parts, r)?,
            Surgery::Down(r) => {
                remove(&mut parts, r)?;
                parts.push(r - 1);
            }
            Surgery::Up(r) => {
                remove(&mut parts, r)?;
                parts.push(r + 1);
            }
        }
        Ok(Partition::new(parts))
    }

    pub fn union(&self, r: u32) -> Partition {
        self.surgery(Surgery::Union(r)).expect("union always defined")
    }

    pub fn union_partition(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Appends `k` parts equal to one.
    pub fn pad_ones(&self, k: u32) -> Partition {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, k as usize));
        Partition(parts)
    }

    /// Removes all parts equal to one.
    pub fn strip_ones(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    /// Dominance order `self ≥ other` for partitions of the same weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u32;
        let mut b = 0u32;
        let n = self.len().max(other.len());
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Cells `(i, j)`, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }
}

/// All partitions of `n` with parts at least `min_part`, in reverse lexicographic order.
pub fn enumerate(n: u32, min_part: u32) -> Vec<Partition> {
    let min_part = min_part.max(1);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, min_part, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    let mut p = max.min(rest);
    while p >= min {
        cur.push(p);
        fill(rest - p, p, min, cur, out);
        cur.pop();
        p -= 1;
    }
}

/// All partitions with weight in `lo..=hi`, by weight then reverse lexicographic.
pub fn enumerate_range(lo: u32, hi: u32, min_part: u32) -> Vec<Partition> {
    (lo..=hi).flat_map(|n| enumerate(n, min_part)).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[3,2]`, `3,2`, `(3,2)` or `3 2`; parts are sorted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        let mut parts = Vec::new();
        for piece in t.split([',', ' ']).filter(|x| !x.trim().is_empty()) {
            let p: u32 = piece.trim().parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn enumeration_order() {
        let all = enumerate(4, 1);
        let expected = [p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(all, expected);
        assert_eq!(enumerate(0, 1), vec![Partition::empty()]);
        assert_eq!(enumerate(6, 2), vec![p(&[6]), p(&[4, 2]), p(&[3, 3]), p(&[2, 2, 2])]);
    }

    #[test]
    fn conjugate_example() {
        assert_eq!(p(&[4, 3, 3, 3, 1]).conjugate(), p(&[5, 4, 4, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn stats_examples() {
        let s = p(&[2, 2]).stats();
        assert_eq!((s.z, s.u, s.v), (8.into(), 1.into(), 1.into()));
        assert_eq!(s.w, Rational::from_integer(4.into()));
        let s = p(&[3, 2]).stats();
        assert_eq!(s.v, 2.into());
        assert_eq!(s.w, Rational::from_integer(7.into()));
        assert_eq!(p(&[2, 1, 1]).stats().u, 3.into());
    }

    #[test]
    fn node_and_surgery() {
        let l = p(&[2, 2]);
        assert_eq!(l.add_node(1).unwrap(), p(&[3, 2]));
        assert_eq!(l.add_node(3).unwrap(), p(&[2, 2, 1]));
        assert!(l.add_node(2).is_err());
        let m = p(&[3, 2]);
        assert_eq!(m.surgery(Surgery::Down(3)).unwrap(), p(&[2, 2]));
        assert_eq!(m.surgery(Surgery::Up(2)).unwrap(), p(&[3, 3]));
        assert!(m.surgery(Surgery::Remove(5)).is_err());
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(p(&[3, 2]).to_string(), "[3,2]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[2,3]".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[a]".parse::<Partition>().is_err());
    }
}
