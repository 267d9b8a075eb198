//! Pebble distributions, their lattice order, and exact dyadic weights.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DistanceTable, Graph, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistributionError {
    #[error("distributions have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("root {root} out of range for {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {vertex} holds {count} pebbles, a step needs 2")]
    InsufficientPebbles { vertex: usize, count: u32 },
    #[error("malformed distribution {0:?}")]
    Parse(String),
}

/// Non-negative pebble counts indexed by vertex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Distribution {
    counts: Vec<u32>,
    size: u64,
}

impl Distribution {
    pub fn new(counts: Vec<u32>) -> Self {
        let size = counts.iter().map(|&c| c as u64).sum();
        Distribution { counts, size }
    }

    pub fn zeros(n: usize) -> Self {
        Distribution { counts: vec![0; n], size: 0 }
    }

    /// `count` pebbles on `vertex`, nothing elsewhere.
    pub fn single(n: usize, vertex: usize, count: u32) -> Self {
        let mut d = Self::zeros(n);
        d.counts[vertex] = count;
        d.size = count as u64;
        d
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Vertices holding at least one pebble.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(v, _)| v)
    }

    pub fn with_added(&self, v: usize) -> Self {
        let mut d = self.clone();
        d.counts[v] += 1;
        d.size += 1;
        d
    }

    /// One pebble removed from `v`, or `None` if `v` is empty.
    pub fn with_removed(&self, v: usize) -> Option<Self> {
        if self.counts[v] == 0 {
            return None;
        }
        let mut d = self.clone();
        d.counts[v] -= 1;
        d.size -= 1;
        Some(d)
    }

    /// Image under a vertex permutation: the pebbles on `v` move to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut counts = vec![0; self.counts.len()];
        for (v, &c) in self.counts.iter().enumerate() {
            counts[perm[v]] = c;
        }
        Distribution { counts, size: self.size }
    }

    /// Lexicographically least image under `group`.
    pub fn canonical_under(&self, group: &[Permutation]) -> Self {
        group
            .iter()
            .map(|p| self.permuted(p))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    pub fn rooted(self, root: usize) -> Result<RootedDistribution, DistributionError> {
        RootedDistribution::new(self, root)
    }
}

// Lexicographic on the count vectors.
impl Ord for Distribution {
    fn cmp(&self, other: &Self) -> Ordering {
        self.counts.cmp(&other.counts)
    }
}

impl PartialOrd for Distribution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D[{self}]")
    }
}

impl FromStr for Distribution {
    type Err = DistributionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let counts = s
            .trim()
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| DistributionError::Parse(s.to_string()))?;
        Ok(Distribution::new(counts))
    }
}

impl TryFrom<String> for Distribution {
    type Error = DistributionError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Distribution> for String {
    fn from(d: Distribution) -> String {
        d.to_string()
    }
}

impl Add for &Distribution {
    type Output = Distribution;
    fn add(self, rhs: &Distribution) -> Distribution {
        assert_eq!(self.len(), rhs.len(), "adding distributions of different lengths");
        Distribution::new(self.counts.iter().zip(&rhs.counts).map(|(a, b)| a + b).collect())
    }
}

/// Componentwise order on distributions.
pub fn lattice_leq(a: &Distribution, b: &Distribution) -> Result<bool, DistributionError> {
    if a.len() != b.len() {
        return Err(DistributionError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.counts.iter().zip(&b.counts).all(|(x, y)| x <= y))
}

/// A distribution with a designated root vertex. Text form `counts@root`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RootedDistribution {
    dist: Distribution,
    root: usize,
}

impl RootedDistribution {
    pub fn new(dist: Distribution, root: usize) -> Result<Self, DistributionError> {
        if root >= dist.len() {
            return Err(DistributionError::RootOutOfRange { root, n: dist.len() });
        }
        Ok(RootedDistribution { dist, root })
    }

    pub fn dist(&self) -> &Distribution {
        &self.dist
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn size(&self) -> u64 {
        self.dist.size()
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        RootedDistribution { dist: self.dist.permuted(perm), root: perm[self.root] }
    }

    /// Least image under `group`, comparing counts first, then root.
    pub fn canonical_under(&self, group: &[Permutation]) -> Self {
        group
            .iter()
            .map(|p| self.permuted(p))
            .min_by(|a, b| (&a.dist, a.root).cmp(&(&b.dist, b.root)))
            .unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for RootedDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.dist, self.root)
    }
}

impl fmt::Debug for RootedDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D[{self}]")
    }
}

impl FromStr for RootedDistribution {
    type Err = DistributionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (d, r) = s.split_once('@').ok_or_else(|| DistributionError::Parse(s.to_string()))?;
        let root = r.trim().parse().map_err(|_| DistributionError::Parse(s.to_string()))?;
        RootedDistribution::new(d.parse()?, root)
    }
}

impl TryFrom<String> for RootedDistribution {
    type Error = DistributionError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<RootedDistribution> for String {
    fn from(d: RootedDistribution) -> String {
        d.to_string()
    }
}

/// An exact non-negative dyadic rational `numerator / 2^log2_denominator`,
/// kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyadicWeight {
    numerator: u128,
    log2_denominator: u32,
}

impl DyadicWeight {
    pub fn new(numerator: u128, log2_denominator: u32) -> Self {
        let mut w = DyadicWeight { numerator, log2_denominator };
        if w.numerator == 0 {
            w.log2_denominator = 0;
        }
        while w.log2_denominator > 0 && w.numerator.is_multiple_of(2) {
            w.numerator /= 2;
            w.log2_denominator -= 1;
        }
        w
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn integer(k: u128) -> Self {
        Self::new(k, 0)
    }

    pub fn numerator(&self) -> u128 {
        self.numerator
    }

    pub fn log2_denominator(&self) -> u32 {
        self.log2_denominator
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / 2f64.powi(self.log2_denominator as i32)
    }

    /// Numerator over the common denominator `2^shift`.
    fn scaled(&self, shift: u32) -> u128 {
        self.numerator << (shift - self.log2_denominator)
    }
}

impl Ord for DyadicWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        let k = self.log2_denominator.max(other.log2_denominator);
        self.scaled(k).cmp(&other.scaled(k))
    }
}

impl PartialOrd for DyadicWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for DyadicWeight {
    type Output = DyadicWeight;
    fn add(self, rhs: DyadicWeight) -> DyadicWeight {
        let k = self.log2_denominator.max(rhs.log2_denominator);
        DyadicWeight::new(self.scaled(k) + rhs.scaled(k), k)
    }
}

impl fmt::Display for DyadicWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_denominator == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u128 << self.log2_denominator)
        }
    }
}

impl fmt::Debug for DyadicWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for DyadicWeight {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("malformed dyadic weight {s:?}");
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s, "1"),
        };
        let num: u128 = num.trim().parse().map_err(|_| bad())?;
        let den: u128 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 || !den.is_power_of_two() {
            return Err(bad());
        }
        Ok(DyadicWeight::new(num, den.trailing_zeros()))
    }
}

impl TryFrom<String> for DyadicWeight {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<DyadicWeight> for String {
    fn from(w: DyadicWeight) -> String {
        w.to_string()
    }
}

/// `sum_v D(v) / 2^d(v, root)`.
pub fn weight(rd: &RootedDistribution, dt: &DistanceTable) -> DyadicWeight {
    let k = dt.diameter();
    let row = dt.row(rd.root());
    let num: u128 = rd
        .dist()
        .counts()
        .iter()
        .zip(row)
        .map(|(&c, &d)| (c as u128) << (k - d))
        .sum();
    DyadicWeight::new(num, k)
}

/// The pebbling step `from -> to`: two pebbles leave `from`, one arrives at
/// `to`.
pub fn apply_step(
    g: &Graph,
    rd: &RootedDistribution,
    from: usize,
    to: usize,
) -> Result<RootedDistribution, DistributionError> {
    let n = rd.dist().len();
    for v in [from, to] {
        if v >= n || v >= g.n() {
            return Err(DistributionError::VertexOutOfRange { vertex: v, n });
        }
    }
    if !g.has_edge(from, to) {
        return Err(DistributionError::NotAdjacent(from, to));
    }
    let count = rd.dist().get(from);
    if count < 2 {
        return Err(DistributionError::InsufficientPebbles { vertex: from, count });
    }
    let mut counts = rd.dist().counts().to_vec();
    counts[from] -= 2;
    counts[to] += 1;
    Ok(RootedDistribution { dist: Distribution::new(counts), root: rd.root() })
}

/// Weak compositions of `size` into `n` parts, first coordinate descending:
/// `(size,0,..,0)` first, `(0,..,0,size)` last.
#[derive(Clone, Debug)]
pub struct Compositions {
    cur: Option<Vec<u32>>,
}

impl Compositions {
    pub fn new(n: usize, size: u32) -> Self {
        if n == 0 {
            return Compositions { cur: None };
        }
        let mut c = vec![0; n];
        c[0] = size;
        Compositions { cur: Some(c) }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;
    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.cur.clone()?;
        let c = self.cur.as_mut().expect("checked above");
        let n = c.len();
        // rightmost non-zero entry among the first n-1
        match (0..n.saturating_sub(1)).rev().find(|&i| c[i] > 0) {
            None => self.cur = None,
            Some(i) => {
                let tail: u32 = c[i + 1..].iter().sum();
                c[i] -= 1;
                for x in &mut c[i + 1..] {
                    *x = 0;
                }
                c[i + 1] = tail + 1;
            }
        }
        Some(out)
    }
}

/// Every distribution of exactly `size` pebbles on `n` vertices. With a
/// symmetry group, only orbit representatives are produced (the
/// lexicographically least member of each orbit).
pub fn enumerate_distributions<'a>(
    n: usize,
    size: u32,
    symmetry: Option<&'a [Permutation]>,
) -> impl Iterator<Item = Distribution> + 'a {
    Compositions::new(n, size)
        .map(Distribution::new)
        .filter(move |d| match symmetry {
            None => true,
            Some(group) => group.iter().all(|p| d.permuted(p) >= *d),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphisms, make_family, Family};
    use std::collections::BTreeSet;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn weights() {
        let p3 = make_family(Family::Path(3)).unwrap();
        let dt = p3.distances();
        let on_root = "0,0,1@2".parse::<RootedDistribution>().unwrap();
        assert_eq!(weight(&on_root, &dt), DyadicWeight::one());
        let two_adjacent = "0,2,0@2".parse().unwrap();
        assert_eq!(weight(&two_adjacent, &dt), DyadicWeight::one());

        let f8 = make_family(Family::Fan(8)).unwrap();
        // root at a path end; k - 1 = 7 pebbles at distance 2 and 1 at distance 1
        let rd = "0,1,0,0,0,0,7,0,0@0".parse().unwrap();
        assert_eq!(weight(&rd, &f8.distances()), "9/4".parse().unwrap());
    }

    #[test]
    fn greedy_step_keeps_weight() {
        let p3 = make_family(Family::Path(3)).unwrap();
        let dt = p3.distances();
        let rd: RootedDistribution = "2,0,0@2".parse().unwrap();
        let next = apply_step(&p3, &rd, 0, 1).unwrap();
        assert_eq!(next.dist().counts(), &[0, 1, 0]);
        assert_eq!(weight(&rd, &dt), "1/2".parse().unwrap());
        assert_eq!(weight(&next, &dt), weight(&rd, &dt));
        assert_eq!(next.size(), rd.size() - 1);
    }

    #[test]
    fn step_errors() {
        let p3 = make_family(Family::Path(3)).unwrap();
        let rd: RootedDistribution = "2,1,0@2".parse().unwrap();
        assert_eq!(apply_step(&p3, &rd, 0, 2), Err(DistributionError::NotAdjacent(0, 2)));
        assert!(matches!(
            apply_step(&p3, &rd, 1, 2),
            Err(DistributionError::InsufficientPebbles { vertex: 1, count: 1 })
        ));
        let p2 = make_family(Family::Path(2)).unwrap();
        let rd: RootedDistribution = "2,0@1".parse().unwrap();
        assert_eq!(apply_step(&p2, &rd, 0, 1).unwrap().dist().counts(), &[0, 1]);
    }

    #[test]
    fn lattice_order() {
        let a: Distribution = "1,0".parse().unwrap();
        let b: Distribution = "0,1".parse().unwrap();
        assert!(lattice_leq(&a, &a).unwrap());
        assert!(!lattice_leq(&a, &b).unwrap());
        assert!(!lattice_leq(&b, &a).unwrap());
        let c: Distribution = "1,0,0".parse().unwrap();
        assert_eq!(lattice_leq(&a, &c), Err(DistributionError::LengthMismatch(2, 3)));
    }

    #[test]
    fn composition_counts() {
        let all: Vec<_> = enumerate_distributions(2, 2, None).map(|d| d.to_string()).collect();
        assert_eq!(all, vec!["2,0", "1,1", "0,2"]);
        assert_eq!(enumerate_distributions(7, 10, None).count(), 8008);
        for n in 1..6 {
            for s in 0..7 {
                let n64 = n as u64;
                assert_eq!(
                    enumerate_distributions(n, s, None).count() as u64,
                    binom(s as u64 + n64 - 1, n64 - 1)
                );
            }
        }
        assert_eq!(enumerate_distributions(1, 0, None).count(), 1);
    }

    #[test]
    fn orbit_representatives_on_c7() {
        let c7 = make_family(Family::Cycle(7)).unwrap();
        let group = automorphisms(&c7);
        let reps: Vec<_> = enumerate_distributions(7, 10, Some(&group)).collect();
        // Independent recount: canonicalize every distribution.
        let orbits: BTreeSet<Distribution> = enumerate_distributions(7, 10, None)
            .map(|d| d.canonical_under(&group))
            .collect();
        assert_eq!(reps.len(), orbits.len());
        // Burnside: average number of fixed points over the group.
        let fixed: usize = group
            .iter()
            .map(|p| enumerate_distributions(7, 10, None).filter(|d| d.permuted(p) == *d).count())
            .sum();
        assert_eq!(fixed % group.len(), 0);
        assert_eq!(reps.len(), fixed / group.len());
        let orbit_sizes: usize = reps
            .iter()
            .map(|d| group.iter().map(|p| d.permuted(p)).collect::<BTreeSet<_>>().len())
            .sum();
        assert_eq!(orbit_sizes, 8008);
    }

    #[test]
    fn text_forms() {
        let rd: RootedDistribution = "4,0,0,6,0,0,0@0".parse().unwrap();
        assert_eq!(rd.to_string(), "4,0,0,6,0,0,0@0");
        assert_eq!(rd.size(), 10);
        assert!("1,2@5".parse::<RootedDistribution>().is_err());
        assert!("1,x".parse::<Distribution>().is_err());
        let w: DyadicWeight = "12/8".parse().unwrap();
        assert_eq!(w.to_string(), "3/2");
        assert!("1/3".parse::<DyadicWeight>().is_err());
    }

    #[test]
    fn dyadic_arithmetic() {
        let half: DyadicWeight = "1/2".parse().unwrap();
        let quarter: DyadicWeight = "1/4".parse().unwrap();
        assert_eq!(half + quarter, "3/4".parse().unwrap());
        assert!(half > quarter);
        assert_eq!(half + half, DyadicWeight::one());
        assert_eq!(DyadicWeight::new(0, 5), DyadicWeight::zero());
    }
}
