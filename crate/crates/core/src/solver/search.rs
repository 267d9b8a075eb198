//! Memoized depth-first search over pebble states for one fixed root.
//!
//! States live in a bounded box: a non-root vertex at distance `d` from the
//! root holding enough pebbles to finish alone along a shortest path (`t * 2^d`
//! for the reach goal) is an immediate success, so only smaller counts are
//! ever stored. The box is indexed in mixed radix and memoized densely when it
//! is small enough, in a hash map otherwise.

use std::collections::HashMap;

use crate::graph::{DistanceTable, Graph, MAX_VERTICES};

use super::SolverError;

/// What counts as success for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Goal {
    /// At least `t` pebbles on the root.
    Reach(u32),
    /// A pebble on the root with at least one other pebble left anywhere,
    /// i.e. a solution that is not critical.
    Surplus,
}

pub(crate) type Counts = [u32; MAX_VERTICES];

const DENSE_LIMIT: u128 = 1 << 26;

const UNKNOWN: u8 = 0;
const NO: u8 = 1;
const YES: u8 = 2;

enum Memo {
    Dense(Vec<u8>),
    Sparse(HashMap<u128, bool>),
}

impl Memo {
    fn get(&self, idx: u128) -> Option<bool> {
        match self {
            Memo::Dense(v) => match v[idx as usize] {
                UNKNOWN => None,
                x => Some(x == YES),
            },
            Memo::Sparse(m) => m.get(&idx).copied(),
        }
    }

    fn set(&mut self, idx: u128, value: bool) {
        match self {
            Memo::Dense(v) => v[idx as usize] = if value { YES } else { NO },
            Memo::Sparse(m) => {
                m.insert(idx, value);
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            Memo::Dense(v) => v.iter().filter(|&&x| x != UNKNOWN).count(),
            Memo::Sparse(m) => m.len(),
        }
    }
}

/// Solvability oracle for one root, one goal and one move rule.
pub struct RootedSolver {
    n: usize,
    root: usize,
    goal: Goal,
    greedy_only: bool,
    dist: Vec<u32>,
    /// Counts at or above `limit[v]` on a non-root vertex succeed at once.
    /// For the root, counts range over `0..limit[root]`.
    limit: Vec<u32>,
    stride: Vec<u128>,
    /// `2^(ecc - d(v))`: weight numerator of one pebble on `v`.
    unit: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
    ecc: u32,
    memo: Memo,
}

impl RootedSolver {
    pub fn new(g: &Graph, dt: &DistanceTable, root: usize, goal: Goal, greedy_only: bool) -> Result<Self, SolverError> {
        let n = g.n();
        if root >= n {
            return Err(SolverError::RootOutOfRange { root, n });
        }
        if let Goal::Reach(0) = goal {
            return Err(SolverError::ZeroTarget);
        }
        if greedy_only && goal == Goal::Surplus {
            return Err(SolverError::Unsupported("greedy surplus search"));
        }
        let dist: Vec<u32> = dt.row(root).to_vec();
        let ecc = dt.eccentricity(root);
        let mut limit = vec![0u32; n];
        for v in 0..n {
            limit[v] = match (goal, v == root) {
                (Goal::Reach(t), true) => t,
                (Goal::Surplus, true) => 1,
                (Goal::Reach(t), false) => t
                    .checked_mul(1u32.checked_shl(dist[v]).ok_or(SolverError::StateSpaceTooLarge)?)
                    .ok_or(SolverError::StateSpaceTooLarge)?,
                (Goal::Surplus, false) => (1u32 << dist[v]) + 1,
            };
        }
        let mut stride = vec![0u128; n];
        let mut total: u128 = 1;
        for v in 0..n {
            stride[v] = total;
            total = total.checked_mul(limit[v] as u128).ok_or(SolverError::StateSpaceTooLarge)?;
        }
        let memo = if total <= DENSE_LIMIT {
            Memo::Dense(vec![UNKNOWN; total as usize])
        } else {
            Memo::Sparse(HashMap::new())
        };
        let unit = dist.iter().map(|&d| 1u64 << (ecc - d)).collect();
        let nbrs = (0..n)
            .map(|u| {
                // greedy moves first
                let mut v: Vec<usize> = g.neighbors(u).collect();
                v.sort_by_key(|&w| (dist[w] >= dist[u], dist[w], w));
                v
            })
            .collect();
        Ok(RootedSolver { n, root, goal, greedy_only, dist, limit, stride, unit, nbrs, ecc, memo })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn goal(&self) -> Goal {
        self.goal
    }

    pub fn greedy_only(&self) -> bool {
        self.greedy_only
    }

    /// Exclusive upper bounds of the stored box, per vertex. Non-root counts
    /// at or above the bound succeed immediately.
    pub fn limits(&self) -> &[u32] {
        &self.limit
    }

    /// Number of memoized states.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Weight numerator threshold: a state at or below this cannot succeed.
    fn hopeless(&self, w: u64) -> bool {
        match self.goal {
            Goal::Reach(t) => w < (t as u64) << self.ecc,
            Goal::Surplus => w <= 1u64 << self.ecc,
        }
    }

    /// Success decided without search, if any.
    fn immediate(&self, c: &[u32], size: u64) -> Option<bool> {
        let r = self.root;
        match self.goal {
            Goal::Reach(t) if c[r] >= t => return Some(true),
            Goal::Surplus if c[r] >= 1 => return Some(size >= 2),
            _ => {}
        }
        if (0..self.n).any(|v| v != r && c[v] >= self.limit[v]) {
            return Some(true);
        }
        None
    }

    fn index(&self, c: &[u32]) -> u128 {
        (0..self.n).map(|v| c[v] as u128 * self.stride[v]).sum()
    }

    fn weight_num(&self, c: &[u32]) -> u64 {
        (0..self.n).map(|v| c[v] as u64 * self.unit[v]).sum()
    }

    /// Decides the goal from distribution `counts` (length `n`).
    pub fn solvable(&mut self, counts: &[u32]) -> bool {
        assert_eq!(counts.len(), self.n, "distribution length does not match graph");
        let mut c: Counts = [0; MAX_VERTICES];
        c[..self.n].copy_from_slice(counts);
        let size: u64 = counts.iter().map(|&x| x as u64).sum();
        if let Some(ans) = self.immediate(&c, size) {
            return ans;
        }
        let idx = self.index(&c);
        let w = self.weight_num(&c);
        self.search(&mut c, idx, w, size)
    }

    fn search(&mut self, c: &mut Counts, idx: u128, w: u64, size: u64) -> bool {
        if self.hopeless(w) {
            return false;
        }
        if let Some(ans) = self.memo.get(idx) {
            return ans;
        }
        let ans = self.expand(c, idx, w, size);
        self.memo.set(idx, ans);
        ans
    }

    /// Sources (non-root vertices with at least two pebbles), fullest first.
    fn sources(&self, c: &Counts) -> ([u8; MAX_VERTICES], usize) {
        let mut src = [0u8; MAX_VERTICES];
        let mut k = 0;
        for (v, &cv) in c.iter().enumerate().take(self.n) {
            if v != self.root && cv >= 2 {
                src[k] = v as u8;
                k += 1;
            }
        }
        src[..k].sort_by_key(|&v| (std::cmp::Reverse(c[v as usize]), v));
        (src, k)
    }

    fn expand(&mut self, c: &mut Counts, idx: u128, w: u64, size: u64) -> bool {
        let (src, k) = self.sources(c);
        for greedy_pass in [true, false] {
            if !greedy_pass && self.greedy_only {
                break;
            }
            for &u in &src[..k] {
                let u = u as usize;
                for i in 0..self.nbrs[u].len() {
                    let v = self.nbrs[u][i];
                    if (self.dist[v] < self.dist[u]) != greedy_pass {
                        continue;
                    }
                    if self.try_move(c, idx, w, size, u, v) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Applies `u -> v`, evaluates the child, restores `c`.
    fn try_move(&mut self, c: &mut Counts, idx: u128, w: u64, size: u64, u: usize, v: usize) -> bool {
        c[u] -= 2;
        c[v] += 1;
        let child_size = size - 1;
        // Only `v` gained a pebble, so only `v` can make the child immediate.
        let immediate = if v == self.root {
            match self.goal {
                Goal::Reach(t) => (c[v] >= t).then_some(true),
                Goal::Surplus => Some(child_size >= 2),
            }
        } else {
            (c[v] >= self.limit[v]).then_some(true)
        };
        let ans = match immediate {
            Some(a) => a,
            None => {
                let child_idx = idx - 2 * self.stride[u] + self.stride[v];
                let child_w = w - 2 * self.unit[u] + self.unit[v];
                self.search(c, child_idx, child_w, child_size)
            }
        };
        c[u] += 2;
        c[v] -= 1;
        ans
    }

    /// A legal step sequence reaching the goal, for `Reach` goals.
    pub fn certificate(&mut self, counts: &[u32]) -> Option<Vec<(usize, usize)>> {
        let Goal::Reach(t) = self.goal else { return None };
        if !self.solvable(counts) {
            return None;
        }
        let mut c: Counts = [0; MAX_VERTICES];
        c[..self.n].copy_from_slice(counts);
        let mut size: u64 = counts.iter().map(|&x| x as u64).sum();
        let mut steps = Vec::new();
        loop {
            if c[self.root] >= t {
                return Some(steps);
            }
            if let Some(v) = (0..self.n).find(|&v| v != self.root && c[v] >= self.limit[v]) {
                let need = t - c[self.root];
                self.push_along_path(&mut c, v, need, &mut steps);
                return Some(steps);
            }
            let idx = self.index(&c);
            let w = self.weight_num(&c);
            let (src, k) = self.sources(&c);
            let mut chosen = None;
            'outer: for greedy_pass in [true, false] {
                if !greedy_pass && self.greedy_only {
                    break;
                }
                for &u in &src[..k] {
                    let u = u as usize;
                    for i in 0..self.nbrs[u].len() {
                        let v = self.nbrs[u][i];
                        if (self.dist[v] < self.dist[u]) != greedy_pass {
                            continue;
                        }
                        if self.try_move(&mut c, idx, w, size, u, v) {
                            chosen = Some((u, v));
                            break 'outer;
                        }
                    }
                }
            }
            let (u, v) = chosen.expect("solvable state has a solvable successor");
            c[u] -= 2;
            c[v] += 1;
            size -= 1;
            steps.push((u, v));
        }
    }

    /// Moves `need` pebbles from `v` to the root along a shortest path.
    fn push_along_path(&self, c: &mut Counts, v: usize, need: u32, steps: &mut Vec<(usize, usize)>) {
        let mut path = vec![v];
        let mut cur = v;
        while cur != self.root {
            cur = *self.nbrs[cur]
                .iter()
                .find(|&&x| self.dist[x] + 1 == self.dist[cur])
                .expect("shortest path continues");
            path.push(cur);
        }
        let hops = path.len() - 1;
        for i in 0..hops {
            let moves = need << (hops - i - 1);
            for _ in 0..moves {
                c[path[i]] -= 2;
                c[path[i + 1]] += 1;
                steps.push((path[i], path[i + 1]));
            }
        }
    }

    /// Calls `f(counts, size)` for every state of the box with no pebble on
    /// the root, in index order. Returning false from `f` stops the walk.
    pub fn for_each_box_state(&self, f: impl FnMut(&[u32], u64) -> bool) {
        walk_box(&self.limit, self.root, f)
    }
}

/// Odometer over count vectors with `c[root] = 0` and `c[v] < limits[v]`
/// elsewhere, in mixed-radix index order.
pub fn walk_box(limits: &[u32], root: usize, mut f: impl FnMut(&[u32], u64) -> bool) {
    let others: Vec<usize> = (0..limits.len()).filter(|&v| v != root).collect();
    let mut c = vec![0u32; limits.len()];
    let mut size = 0u64;
    loop {
        if !f(&c, size) {
            return;
        }
        let mut i = 0;
        loop {
            if i == others.len() {
                return;
            }
            let v = others[i];
            if c[v] + 1 < limits[v] {
                c[v] += 1;
                size += 1;
                break;
            }
            size -= c[v] as u64;
            c[v] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn solver(g: &Graph, root: usize, goal: Goal, greedy: bool) -> RootedSolver {
        RootedSolver::new(g, &g.distances(), root, goal, greedy).unwrap()
    }

    #[test]
    fn limits_follow_distances() {
        let p4 = make_family(Family::Path(4)).unwrap();
        let s = solver(&p4, 0, Goal::Reach(1), false);
        assert_eq!(s.limits(), &[1, 2, 4, 8]);
        let s = solver(&p4, 0, Goal::Reach(2), false);
        assert_eq!(s.limits(), &[2, 4, 8, 16]);
        let s = solver(&p4, 0, Goal::Surplus, false);
        assert_eq!(s.limits(), &[1, 3, 5, 9]);
    }

    #[test]
    fn path_thresholds() {
        let p4 = make_family(Family::Path(4)).unwrap();
        let mut s = solver(&p4, 0, Goal::Reach(1), false);
        assert!(!s.solvable(&[0, 0, 0, 7]));
        assert!(s.solvable(&[0, 0, 0, 8]));
        assert!(s.solvable(&[0, 1, 1, 2]));
        assert!(!s.solvable(&[0, 1, 1, 1]));
        let mut sur = solver(&p4, 0, Goal::Surplus, false);
        assert!(!sur.solvable(&[0, 0, 0, 8]));
        assert!(sur.solvable(&[0, 0, 0, 9]));
        assert!(!sur.solvable(&[1, 0, 0, 0]));
        assert!(sur.solvable(&[1, 0, 0, 1]));
    }

    #[test]
    fn certificates_replay() {
        let c7 = make_family(Family::Cycle(7)).unwrap();
        let mut s = solver(&c7, 0, Goal::Reach(1), false);
        let counts = [0, 0, 0, 4, 6, 0, 0];
        let steps = s.certificate(&counts).unwrap();
        let mut c = counts.to_vec();
        for (u, v) in steps {
            assert!(c7.has_edge(u, v) && c[u] >= 2);
            c[u] -= 2;
            c[v] += 1;
        }
        assert!(c[0] >= 1);
        // a pile large enough to walk straight in
        let mut s2 = solver(&c7, 0, Goal::Reach(2), false);
        let steps = s2.certificate(&[0, 0, 0, 16, 0, 0, 0]).unwrap();
        assert_eq!(steps.len(), 14);
    }

    #[test]
    fn box_walk_visits_every_state() {
        let p3 = make_family(Family::Path(3)).unwrap();
        let s = solver(&p3, 1, Goal::Reach(1), false);
        let mut seen = Vec::new();
        s.for_each_box_state(|c, size| {
            assert_eq!(size, c.iter().map(|&x| x as u64).sum::<u64>());
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 1], vec![1, 0, 1]]);
    }
}
