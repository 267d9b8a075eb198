//! Rooted and global solvability, certificates and classification of
//! distributions.

mod search;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DistanceTable, Graph};
use crate::pebble::{weight, Distribution, DyadicWeight, RootedDistribution};

pub use search::{walk_box, Goal, RootedSolver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("root {root} out of range for {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
    #[error("distribution has {got} entries, graph has {n} vertices")]
    LengthMismatch { got: usize, n: usize },
    #[error("target pebble count must be at least 1")]
    ZeroTarget,
    #[error("state space too large to index")]
    StateSpaceTooLarge,
    #[error("unsupported search: {0}")]
    Unsupported(&'static str),
    #[error("distribution {0} is not solvable")]
    Unsolvable(String),
}

/// A replayable witness of solvability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveCertificate {
    pub steps: Vec<(usize, usize)>,
    pub target: u32,
    pub final_dist: Distribution,
}

impl SolveCertificate {
    /// Replays the steps from `rd`; true iff every step is legal and the
    /// root ends with at least `target` pebbles.
    pub fn replays(&self, g: &Graph, rd: &RootedDistribution) -> bool {
        let mut c = rd.dist().counts().to_vec();
        for &(u, v) in &self.steps {
            if u >= c.len() || v >= c.len() || !g.has_edge(u, v) || c[u] < 2 {
                return false;
            }
            c[u] -= 2;
            c[v] += 1;
        }
        c[rd.root()] >= self.target && c == self.final_dist.counts()
    }
}

impl fmt::Display for SolveCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|(u, v)| format!("({u}→{v})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The three classes partitioning rooted distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Insufficient,
    Critical,
    Excessive,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Insufficient => "insufficient",
            Classification::Critical => "critical",
            Classification::Excessive => "excessive",
        })
    }
}

/// Solvability engine for one graph. Holds one memo table per
/// `(root, goal, greedy_only)` so repeated queries share work.
pub struct Solver {
    graph: Graph,
    dt: DistanceTable,
    searches: HashMap<(usize, Goal, bool), RootedSolver>,
}

impl Solver {
    pub fn new(g: &Graph) -> Self {
        Solver { graph: g.clone(), dt: g.distances(), searches: HashMap::new() }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.dt
    }

    fn check(&self, d: &Distribution) -> Result<(), SolverError> {
        if d.len() != self.graph.n() {
            return Err(SolverError::LengthMismatch { got: d.len(), n: self.graph.n() });
        }
        Ok(())
    }

    fn rooted(&mut self, root: usize, goal: Goal, greedy_only: bool) -> Result<&mut RootedSolver, SolverError> {
        let key = (root, goal, greedy_only);
        if !self.searches.contains_key(&key) {
            let s = RootedSolver::new(&self.graph, &self.dt, root, goal, greedy_only)?;
            self.searches.insert(key, s);
        }
        Ok(self.searches.get_mut(&key).expect("inserted above"))
    }

    /// True iff some legal step sequence puts at least `t` pebbles on the root
    /// (using only greedy steps when `greedy_only`).
    pub fn is_solvable(&mut self, rd: &RootedDistribution, t: u32, greedy_only: bool) -> Result<bool, SolverError> {
        self.check(rd.dist())?;
        Ok(self.rooted(rd.root(), Goal::Reach(t), greedy_only)?.solvable(rd.dist().counts()))
    }

    /// Like [`Solver::is_solvable`], returning a certificate on success.
    pub fn solve(
        &mut self,
        rd: &RootedDistribution,
        t: u32,
        greedy_only: bool,
    ) -> Result<Option<SolveCertificate>, SolverError> {
        self.check(rd.dist())?;
        let steps = self.rooted(rd.root(), Goal::Reach(t), greedy_only)?.certificate(rd.dist().counts());
        Ok(steps.map(|steps| {
            let mut c = rd.dist().counts().to_vec();
            for &(u, v) in &steps {
                c[u] -= 2;
                c[v] += 1;
            }
            SolveCertificate { steps, target: t, final_dist: Distribution::new(c) }
        }))
    }

    /// `Ok(None)` if `d` is solvable to every root, else the first root it
    /// fails for.
    pub fn failing_root(&mut self, d: &Distribution) -> Result<Option<usize>, SolverError> {
        self.check(d)?;
        for r in 0..self.graph.n() {
            if !self.rooted(r, Goal::Reach(1), false)?.solvable(d.counts()) {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }

    pub fn is_globally_solvable(&mut self, d: &Distribution) -> Result<bool, SolverError> {
        Ok(self.failing_root(d)?.is_none())
    }

    pub fn weight(&self, rd: &RootedDistribution) -> DyadicWeight {
        weight(rd, &self.dt)
    }

    /// Weight of `rd` restricted to the breadth-first-tree path from the root
    /// to `v`, taking the largest over all `v`. Along a shortest path the
    /// path distances equal graph distances.
    fn max_tree_path_weight(&self, rd: &RootedDistribution) -> DyadicWeight {
        let r = rd.root();
        let row = self.dt.row(r);
        let k = self.dt.diameter();
        let n = self.graph.n();
        // parent: smallest-index neighbor one step closer to the root
        let parent: Vec<usize> = (0..n)
            .map(|v| if v == r { r } else { self.graph.neighbors(v).find(|&u| row[u] + 1 == row[v]).expect("connected") })
            .collect();
        let mut path_weight = vec![0u128; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| row[v]);
        let mut best = 0u128;
        for v in order {
            let own = (rd.dist().get(v) as u128) << (k - row[v]);
            path_weight[v] = own + if v == r { 0 } else { path_weight[parent[v]] };
            best = best.max(path_weight[v]);
        }
        DyadicWeight::new(best, k)
    }

    /// Insufficient, critical (minimally solvable) or excessive.
    pub fn classify(&mut self, rd: &RootedDistribution) -> Result<Classification, SolverError> {
        self.check(rd.dist())?;
        let w = self.weight(rd);
        if w < DyadicWeight::one() {
            return Ok(Classification::Insufficient);
        }
        if self.max_tree_path_weight(rd) > DyadicWeight::one() {
            return Ok(Classification::Excessive);
        }
        self.classify_by_search(rd)
    }

    /// Classification from solvability queries alone, without the weight
    /// shortcuts.
    pub fn classify_by_search(&mut self, rd: &RootedDistribution) -> Result<Classification, SolverError> {
        self.check(rd.dist())?;
        let s = self.rooted(rd.root(), Goal::Reach(1), false)?;
        if !s.solvable(rd.dist().counts()) {
            return Ok(Classification::Insufficient);
        }
        let mut c = rd.dist().counts().to_vec();
        for v in 0..c.len() {
            if c[v] == 0 {
                continue;
            }
            c[v] -= 1;
            let still = s.solvable(&c);
            c[v] += 1;
            if still {
                return Ok(Classification::Excessive);
            }
        }
        Ok(Classification::Critical)
    }

    /// For a solvable `rd`: true iff every solution ends with exactly one
    /// pebble, on the root. Searches for a surplus solution.
    pub fn all_solutions_critical(&mut self, rd: &RootedDistribution) -> Result<bool, SolverError> {
        if !self.is_solvable(rd, 1, false)? {
            return Err(SolverError::Unsolvable(rd.to_string()));
        }
        Ok(!self.rooted(rd.root(), Goal::Surplus, false)?.solvable(rd.dist().counts()))
    }

    /// Globally solvable, and losing any single pebble breaks that.
    pub fn is_minimally_solvable(&mut self, d: &Distribution) -> Result<bool, SolverError> {
        if !self.is_globally_solvable(d)? {
            return Ok(false);
        }
        for v in 0..d.len() {
            if let Some(e) = d.with_removed(v) {
                if self.is_globally_solvable(&e)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Not globally solvable, and adding any single pebble makes it so.
    pub fn is_maximally_unsolvable(&mut self, d: &Distribution) -> Result<bool, SolverError> {
        if self.is_globally_solvable(d)? {
            return Ok(false);
        }
        for v in 0..d.len() {
            if !self.is_globally_solvable(&d.with_added(v))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Not solvable to its root, and adding any single pebble makes it so.
    pub fn is_maximally_r_unsolvable(&mut self, rd: &RootedDistribution) -> Result<bool, SolverError> {
        self.check(rd.dist())?;
        let s = self.rooted(rd.root(), Goal::Reach(1), false)?;
        if s.solvable(rd.dist().counts()) {
            return Ok(false);
        }
        let mut c = rd.dist().counts().to_vec();
        for v in 0..c.len() {
            c[v] += 1;
            let ok = s.solvable(&c);
            c[v] -= 1;
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One-shot [`Solver::solve`] on a fresh solver.
pub fn is_solvable(
    g: &Graph,
    rd: &RootedDistribution,
    t: u32,
    greedy_only: bool,
) -> Result<Option<SolveCertificate>, SolverError> {
    Solver::new(g).solve(rd, t, greedy_only)
}

pub fn is_globally_solvable(g: &Graph, d: &Distribution) -> Result<Option<usize>, SolverError> {
    Solver::new(g).failing_root(d)
}

pub fn classify(g: &Graph, rd: &RootedDistribution) -> Result<Classification, SolverError> {
    Solver::new(g).classify(rd)
}

pub fn all_solutions_critical(g: &Graph, rd: &RootedDistribution) -> Result<bool, SolverError> {
    Solver::new(g).all_solutions_critical(rd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn rd(s: &str) -> RootedDistribution {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_examples() {
        let c7 = make_family(Family::Cycle(7)).unwrap();
        let mut s = Solver::new(&c7);
        // the two vertices farthest from root 0 are 3 and 4
        let cert = s.solve(&rd("0,0,0,4,6,0,0@0"), 1, false).unwrap().unwrap();
        assert!(cert.replays(&c7, &rd("0,0,0,4,6,0,0@0")));
        assert!(!s.is_solvable(&rd("0,0,0,7,0,0,0@0"), 1, false).unwrap());
        assert!(s.is_solvable(&rd("1,0,0,0,0,0,0@0"), 1, false).unwrap());
        assert_eq!(s.classify(&rd("0,0,0,4,6,0,0@0")).unwrap(), Classification::Critical);
        // 5 and 6 on the far pair is solvable but not greedily
        assert!(s.is_solvable(&rd("0,0,0,5,6,0,0@0"), 1, false).unwrap());
        assert!(!s.is_solvable(&rd("0,0,0,5,6,0,0@0"), 1, true).unwrap());
    }

    #[test]
    fn path_classification() {
        let p4 = make_family(Family::Path(4)).unwrap();
        let mut s = Solver::new(&p4);
        assert_eq!(s.classify(&rd("0,0,0,8@0")).unwrap(), Classification::Critical);
        assert_eq!(s.classify(&rd("0,0,0,9@0")).unwrap(), Classification::Excessive);
        assert_eq!(s.classify(&rd("0,0,0,7@0")).unwrap(), Classification::Insufficient);
        for d in ["0,0,0,8@0", "0,0,0,9@0", "0,0,0,7@0", "0,2,1,2@0", "0,1,1,2@0"] {
            assert_eq!(s.classify(&rd(d)).unwrap(), s.classify_by_search(&rd(d)).unwrap(), "{d}");
        }
    }

    #[test]
    fn global_solvability() {
        let c7 = make_family(Family::Cycle(7)).unwrap();
        let mut s = Solver::new(&c7);
        assert!(s.is_globally_solvable(&"1,1,1,1,1,1,1".parse().unwrap()).unwrap());
        assert_eq!(s.failing_root(&Distribution::zeros(7)).unwrap(), Some(0));
        assert!(s.is_minimally_solvable(&"1,1,1,1,1,1,1".parse().unwrap()).unwrap());
        assert!(s.is_maximally_unsolvable(&"0,1,1,1,1,1,1".parse().unwrap()).unwrap());
    }

    #[test]
    fn surplus_search() {
        let p2 = make_family(Family::Path(2)).unwrap();
        let mut s = Solver::new(&p2);
        assert!(s.all_solutions_critical(&rd("0,1@1")).unwrap());
        assert!(!s.all_solutions_critical(&rd("1,1@1")).unwrap());
        assert!(s.all_solutions_critical(&rd("2,0@1")).unwrap());
        assert!(!s.all_solutions_critical(&rd("3,0@1")).unwrap());
        assert!(matches!(s.all_solutions_critical(&rd("1,0@1")), Err(SolverError::Unsolvable(_))));
    }

    #[test]
    fn k23_figure_properties() {
        let k23 = make_family(Family::CompleteBipartite(2, 3)).unwrap();
        let mut s = Solver::new(&k23);
        // one pebble per vertex: minimally solvable, never minimally r-solvable
        let ones: Distribution = "1,1,1,1,1".parse().unwrap();
        assert!(s.is_minimally_solvable(&ones).unwrap());
        for r in 0..5 {
            let x = ones.clone().rooted(r).unwrap();
            assert_eq!(s.classify(&x).unwrap(), Classification::Excessive);
        }
        // four pebbles on one vertex of the larger part
        let four: Distribution = "0,0,4,0,0".parse().unwrap();
        assert!(s.is_minimally_solvable(&four).unwrap());
        let x = four.rooted(3).unwrap();
        assert_eq!(s.classify(&x).unwrap(), Classification::Critical);
        assert!(s.all_solutions_critical(&x).unwrap());
    }

    #[test]
    fn errors() {
        let p3 = make_family(Family::Path(3)).unwrap();
        let mut s = Solver::new(&p3);
        assert!(matches!(
            s.is_solvable(&rd("1,1@0"), 1, false),
            Err(SolverError::LengthMismatch { got: 2, n: 3 })
        ));
        assert_eq!(s.is_solvable(&rd("1,1,1@0"), 0, false), Err(SolverError::ZeroTarget));
    }

    #[test]
    fn single_vertex_graph() {
        let k1 = make_family(Family::Complete(1)).unwrap();
        let mut s = Solver::new(&k1);
        assert!(s.is_solvable(&rd("1@0"), 1, false).unwrap());
        assert!(!s.is_solvable(&rd("0@0"), 1, false).unwrap());
        assert_eq!(s.classify(&rd("0@0")).unwrap(), Classification::Insufficient);
        assert_eq!(s.classify(&rd("1@0")).unwrap(), Classification::Critical);
    }
}
