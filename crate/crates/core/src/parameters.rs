//! The pebbling parameters of a graph.
//!
//! Every rooted question reduces to the root's search box: a distribution with
//! no pebble on the root that is not an immediate success has `D(v) <
//! 2^d(v, r)` everywhere, so unsolvable and critical distributions (other than
//! `e_r` and the single piles `2^d(v, r) e_v`) all live inside it. Roots are
//! scanned one per automorphism orbit.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{automorphisms, DistanceTable, Graph, Permutation};
use crate::pebble::{enumerate_distributions, weight, Distribution, DyadicWeight, RootedDistribution};
use crate::solver::{walk_box, Goal, RootedSolver, Solver, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParameterError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("time budget exceeded")]
    BudgetExceeded,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

/// Worker count and optional time limit for a computation.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub workers: usize,
    pub deadline: Option<Instant>,
}

impl Default for Options {
    fn default() -> Self {
        Options { workers: 1, deadline: None }
    }
}

impl Options {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    fn check(&self) -> Result<(), ParameterError> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(ParameterError::BudgetExceeded),
            _ => Ok(()),
        }
    }
}

/// An extremal distribution backing one reported value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Rooted(RootedDistribution),
    Global(Distribution),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub n: usize,
    pub diameter: u32,
    pub two_pow_d: u64,
    pub p: u64,
    pub o: u64,
    pub c_r: u64,
    pub c_g: u64,
    pub c_u: u64,
    /// Rooted variant of `c_u`; always equal to it.
    pub c_ru: u64,
    pub is_greedy: bool,
    pub is_thrifty: bool,
    pub graph_weight: DyadicWeight,
    /// Largest weight of any critical distribution, ceiling or not.
    pub max_critical_weight: DyadicWeight,
    /// All r-ceiling distributions up to automorphism.
    pub ceilings: Vec<RootedDistribution>,
    pub witnesses: BTreeMap<String, Witness>,
}

impl ParameterReport {
    /// `(p, c_g, c_r, 2^d, n, c_u, o)` in table order.
    pub fn table_row(&self) -> [u64; 7] {
        [self.p, self.c_g, self.c_r, self.two_pow_d, self.n as u64, self.c_u, self.o]
    }

    /// Every invariant the report must satisfy, as human-readable failures.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.n as u64;
        let d2 = self.two_pow_d;
        let chain = [
            ("o <= 2^d", self.o <= d2),
            ("2^d <= c_r", d2 <= self.c_r),
            ("c_r <= c_g", self.c_r <= self.c_g),
            ("o <= c_u", self.o <= self.c_u),
            ("c_u <= n", self.c_u <= n),
            ("n <= c_g", n <= self.c_g),
            ("c_g <= p", self.c_g <= self.p),
            ("c_ru = c_u", self.c_ru == self.c_u),
            ("w(G) >= 1", self.graph_weight >= DyadicWeight::one()),
            ("thrifty iff w(G) = 1", self.is_thrifty == self.graph_weight.is_one()),
            ("thrifty implies c_r = 2^d", !self.is_thrifty || self.c_r == d2),
        ];
        for (name, ok) in chain {
            if !ok {
                out.push(format!("{name} fails for {:?}", self.table_row()));
            }
        }
        out
    }
}

/// Everything learned from scanning one root's box.
struct RootScan {
    root: usize,
    solver: RootedSolver,
    max_unsolvable: u64,
    max_unsolvable_states: Vec<Distribution>,
    min_max_unsolvable: u64,
    min_max_unsolvable_states: Vec<Distribution>,
    criticals: Vec<Distribution>,
}

struct Scratch {
    max_unsolvable: u64,
    max_unsolvable_states: Vec<Distribution>,
    min_max_unsolvable: u64,
    min_max_unsolvable_states: Vec<Distribution>,
    criticals: Vec<Distribution>,
}

fn scan_root(g: &Graph, dt: &DistanceTable, root: usize, opts: Options) -> Result<RootScan, ParameterError> {
    let mut solver = RootedSolver::new(g, dt, root, Goal::Reach(1), false)?;
    let limits = solver.limits().to_vec();
    let n = g.n();
    let mut scan = Scratch {
        max_unsolvable: 0,
        max_unsolvable_states: Vec::new(),
        min_max_unsolvable: u64::MAX,
        min_max_unsolvable_states: Vec::new(),
        criticals: Vec::new(),
    };
    scan.criticals.push(Distribution::single(n, root, 1));
    for v in (0..n).filter(|&v| v != root) {
        scan.criticals.push(Distribution::single(n, v, limits[v]));
    }
    let mut ticks = 0u32;
    let mut timed_out = false;
    walk_box(&limits, root, |c, size| {
        ticks = ticks.wrapping_add(1);
        if ticks.is_multiple_of(4096) && opts.check().is_err() {
            timed_out = true;
            return false;
        }
        let mut c = c.to_vec();
        if solver.solvable(&c) {
            let critical = (0..n).all(|v| {
                if c[v] == 0 {
                    return true;
                }
                c[v] -= 1;
                let ok = solver.solvable(&c);
                c[v] += 1;
                !ok
            });
            if critical {
                scan.criticals.push(Distribution::new(c));
            }
            return true;
        }
        if size > scan.max_unsolvable {
            scan.max_unsolvable = size;
            scan.max_unsolvable_states.clear();
        }
        if size == scan.max_unsolvable {
            scan.max_unsolvable_states.push(Distribution::new(c.clone()));
        }
        if size <= scan.min_max_unsolvable {
            let maximal = (0..n).filter(|&v| v != root).all(|v| {
                c[v] += 1;
                let ok = solver.solvable(&c);
                c[v] -= 1;
                ok
            });
            if maximal {
                if size < scan.min_max_unsolvable {
                    scan.min_max_unsolvable = size;
                    scan.min_max_unsolvable_states.clear();
                }
                scan.min_max_unsolvable_states.push(Distribution::new(c));
            }
        }
        true
    });
    if timed_out {
        return Err(ParameterError::BudgetExceeded);
    }
    Ok(RootScan {
        root,
        solver,
        max_unsolvable: scan.max_unsolvable,
        max_unsolvable_states: scan.max_unsolvable_states,
        min_max_unsolvable: scan.min_max_unsolvable,
        min_max_unsolvable_states: scan.min_max_unsolvable_states,
        criticals: scan.criticals,
    })
}

/// Cached parameter computations for one graph.
pub struct Analysis {
    graph: Graph,
    dt: DistanceTable,
    aut: Vec<Permutation>,
    root_reps: Vec<usize>,
    opts: Options,
    pool: Option<rayon::ThreadPool>,
    solver: Solver,
    scans: Option<Vec<RootScan>>,
    p: Option<(u64, RootedDistribution)>,
    c_r: Option<(u64, Vec<RootedDistribution>)>,
    o: Option<(u64, Distribution)>,
    c_u: Option<(u64, Distribution)>,
    c_g: Option<(u64, Distribution)>,
    greedy: Option<(bool, Option<RootedDistribution>)>,
}

impl Analysis {
    pub fn new(g: &Graph) -> Self {
        Self::with_options(g, Options::default())
    }

    pub fn with_options(g: &Graph, opts: Options) -> Self {
        let aut = automorphisms(g);
        let mut root_reps: Vec<usize> = (0..g.n())
            .map(|v| aut.iter().map(|p| p[v]).min().expect("identity present"))
            .collect();
        root_reps.sort_unstable();
        root_reps.dedup();
        let pool = (opts.workers > 1).then(|| {
            rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build().expect("thread pool")
        });
        Analysis {
            graph: g.clone(),
            dt: g.distances(),
            aut,
            root_reps,
            opts,
            pool,
            solver: Solver::new(g),
            scans: None,
            p: None,
            c_r: None,
            o: None,
            c_u: None,
            c_g: None,
            greedy: None,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn automorphisms(&self) -> &[Permutation] {
        &self.aut
    }

    /// One root per automorphism orbit (the least vertex of each).
    pub fn root_representatives(&self) -> &[usize] {
        &self.root_reps
    }

    pub fn two_pow_d(&self) -> u64 {
        1u64 << self.dt.diameter()
    }

    fn par_map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Send + Sync,
    {
        match &self.pool {
            Some(pool) => pool.install(|| items.into_par_iter().map(&f).collect()),
            None => items.into_iter().map(f).collect(),
        }
    }

    fn canonical_rooted(&self, d: &Distribution, root: usize) -> RootedDistribution {
        RootedDistribution::new(d.clone(), root).expect("root in range").canonical_under(&self.aut)
    }

    fn scans(&mut self) -> Result<&mut Vec<RootScan>, ParameterError> {
        if self.scans.is_none() {
            let (g, dt, opts) = (&self.graph, &self.dt, self.opts);
            let results = self.par_map(self.root_reps.clone(), |r| scan_root(g, dt, r, opts));
            self.scans = Some(results.into_iter().collect::<Result<_, _>>()?);
        }
        Ok(self.scans.as_mut().expect("filled above"))
    }

    /// `p(G)` and a largest unsolvable rooted distribution.
    pub fn pebbling_number(&mut self) -> Result<(u64, RootedDistribution), ParameterError> {
        if let Some(x) = &self.p {
            return Ok(x.clone());
        }
        let scans = self.scans()?;
        let best = scans.iter().map(|s| s.max_unsolvable).max().expect("at least one root");
        let cands: Vec<(Distribution, usize)> = scans
            .iter()
            .filter(|s| s.max_unsolvable == best)
            .flat_map(|s| s.max_unsolvable_states.iter().map(move |d| (d.clone(), s.root)))
            .collect();
        let witness = cands.iter().map(|(d, r)| self.canonical_rooted(d, *r)).min().expect("non-empty");
        self.p = Some((best + 1, witness));
        Ok(self.p.clone().expect("set above"))
    }

    /// All r-critical distributions for `root`.
    pub fn critical_distributions(&mut self, root: usize) -> Result<Vec<Distribution>, ParameterError> {
        let n = self.graph.n();
        if root >= n {
            return Err(SolverError::RootOutOfRange { root, n }.into());
        }
        if let Some(s) = self.scans()?.iter().find(|s| s.root == root) {
            return Ok(s.criticals.clone());
        }
        // map through an automorphism onto the representative
        let perm = self
            .aut
            .iter()
            .find(|p| self.root_reps.contains(&p[root]))
            .expect("every vertex lies in some orbit")
            .clone();
        let rep = perm[root];
        let mut inv = vec![0; n];
        for (v, &w) in perm.iter().enumerate() {
            inv[w] = v;
        }
        let scans = self.scans()?;
        let s = scans.iter().find(|s| s.root == rep).expect("representative scanned");
        Ok(s.criticals.iter().map(|d| d.permuted(&inv)).collect())
    }

    /// `c_r(G)` and every r-ceiling distribution up to automorphism, sorted.
    pub fn r_critical_number(&mut self) -> Result<(u64, Vec<RootedDistribution>), ParameterError> {
        if let Some(x) = &self.c_r {
            return Ok(x.clone());
        }
        let scans = self.scans()?;
        let best = scans.iter().flat_map(|s| s.criticals.iter().map(|d| d.size())).max().expect("e_r");
        let cands: Vec<(Distribution, usize)> = scans
            .iter()
            .flat_map(|s| s.criticals.iter().filter(|d| d.size() == best).map(move |d| (d.clone(), s.root)))
            .collect();
        let ceilings: BTreeSet<RootedDistribution> =
            cands.iter().map(|(d, r)| self.canonical_rooted(d, *r)).collect();
        self.c_r = Some((best, ceilings.into_iter().collect()));
        Ok(self.c_r.clone().expect("set above"))
    }

    /// Largest weight over every critical distribution of every size.
    pub fn max_critical_weight(&mut self) -> Result<DyadicWeight, ParameterError> {
        let dt = self.dt.clone();
        let scans = self.scans()?;
        Ok(scans
            .iter()
            .flat_map(|s| {
                let dt = &dt;
                s.criticals.iter().map(move |d| weight(&RootedDistribution::new(d.clone(), s.root).expect("root"), dt))
            })
            .max()
            .expect("e_r"))
    }

    /// `1 +` the least size of a maximally r-unsolvable distribution.
    pub fn rooted_u_critical_number(&mut self) -> Result<(u64, RootedDistribution), ParameterError> {
        let scans = self.scans()?;
        let best = scans.iter().map(|s| s.min_max_unsolvable).min().expect("at least one root");
        let cands: Vec<(Distribution, usize)> = scans
            .iter()
            .filter(|s| s.min_max_unsolvable == best)
            .flat_map(|s| s.min_max_unsolvable_states.iter().map(move |d| (d.clone(), s.root)))
            .collect();
        let witness = cands.iter().map(|(d, r)| self.canonical_rooted(d, *r)).min().expect("non-empty");
        Ok((best + 1, witness))
    }

    /// `o(G)`: the least size of a solvable distribution.
    pub fn optimal_pebbling_number(&mut self) -> Result<(u64, Distribution), ParameterError> {
        if let Some(x) = &self.o {
            return Ok(x.clone());
        }
        let n = self.graph.n();
        for size in 1u32.. {
            self.opts.check()?;
            let mut found = None;
            for d in enumerate_distributions(n, size, Some(&self.aut)) {
                if self.solver.is_globally_solvable(&d)? && found.as_ref().is_none_or(|f| d < *f) {
                    found = Some(d);
                }
            }
            if let Some(d) = found {
                self.o = Some((size as u64, d));
                break;
            }
        }
        Ok(self.o.clone().expect("o(G) <= 2^d"))
    }

    /// `c_u(G)`: one more than the least size of a maximally unsolvable
    /// distribution.
    pub fn u_critical_number(&mut self) -> Result<(u64, Distribution), ParameterError> {
        if let Some(x) = &self.c_u {
            return Ok(x.clone());
        }
        let n = self.graph.n();
        for size in 0u32.. {
            self.opts.check()?;
            let mut found = None;
            for d in enumerate_distributions(n, size, Some(&self.aut)) {
                if self.solver.is_maximally_unsolvable(&d)? && found.as_ref().is_none_or(|f| d < *f) {
                    found = Some(d);
                }
            }
            if let Some(d) = found {
                self.c_u = Some((size as u64 + 1, d));
                break;
            }
        }
        Ok(self.c_u.clone().expect("c_u(G) <= n"))
    }

    /// `c_g(G)`: the largest size of a minimally solvable distribution.
    ///
    /// Deleting a pebble from a minimally solvable `D` leaves a distribution
    /// that fails some root `r`, so `D = U + e_v` with `U` unsolvable in the
    /// box of `r`, and `r` may be taken to be an orbit representative.
    /// Candidate sizes descend from `p(G)`.
    pub fn g_critical_number(&mut self) -> Result<(u64, Distribution), ParameterError> {
        if let Some(x) = &self.c_g {
            return Ok(x.clone());
        }
        let (p, _) = self.pebbling_number()?;
        let n = self.graph.n();
        for size in (1..=p).rev() {
            self.opts.check()?;
            let mut cands = BTreeSet::new();
            let aut = self.aut.clone();
            for s in self.scans()?.iter_mut() {
                let limits = s.solver.limits().to_vec();
                let solver = &mut s.solver;
                walk_box(&limits, s.root, |c, sz| {
                    if sz + 1 == size && !solver.solvable(c) {
                        let u = Distribution::new(c.to_vec());
                        for v in 0..n {
                            cands.insert(u.with_added(v).canonical_under(&aut));
                        }
                    }
                    true
                });
            }
            for d in cands {
                if self.solver.is_minimally_solvable(&d)? {
                    // candidates are visited in increasing order
                    self.c_g = Some((size, d));
                    return Ok(self.c_g.clone().expect("set above"));
                }
            }
        }
        unreachable!("one pebble on every vertex is minimally solvable")
    }

    /// True iff every distribution of size `p(G)` is greedy, with a
    /// counterexample otherwise. Larger distributions dominate one of size
    /// `p(G)`, and a greedy solution survives added pebbles.
    pub fn is_greedy_graph(&mut self) -> Result<(bool, Option<RootedDistribution>), ParameterError> {
        if let Some(x) = &self.greedy {
            return Ok(x.clone());
        }
        let (p, _) = self.pebbling_number()?;
        let (g, dt, opts) = (&self.graph, &self.dt, self.opts);
        let per_root = self.par_map(self.root_reps.clone(), |r| -> Result<Vec<Distribution>, ParameterError> {
            let mut greedy = RootedSolver::new(g, dt, r, Goal::Reach(1), true)?;
            let limits = greedy.limits().to_vec();
            let mut bad = Vec::new();
            let mut ticks = 0u32;
            let mut timed_out = false;
            walk_box(&limits, r, |c, size| {
                ticks = ticks.wrapping_add(1);
                if ticks.is_multiple_of(4096) && opts.check().is_err() {
                    timed_out = true;
                    return false;
                }
                if size == p && !greedy.solvable(c) {
                    bad.push(Distribution::new(c.to_vec()));
                }
                true
            });
            if timed_out {
                return Err(ParameterError::BudgetExceeded);
            }
            Ok(bad)
        });
        let mut worst: Option<RootedDistribution> = None;
        for (r, bad) in self.root_reps.iter().zip(per_root) {
            for d in bad? {
                let rd = self.canonical_rooted(&d, *r);
                if worst.as_ref().is_none_or(|w| rd < *w) {
                    worst = Some(rd);
                }
            }
        }
        self.greedy = Some((worst.is_none(), worst));
        Ok(self.greedy.clone().expect("set above"))
    }

    /// True iff every r-ceiling distribution is greedy, with the least
    /// non-greedy ceiling otherwise.
    pub fn is_thrifty_graph(&mut self) -> Result<(bool, Option<RootedDistribution>), ParameterError> {
        let (_, ceilings) = self.r_critical_number()?;
        for rd in ceilings {
            if !self.solver.is_solvable(&rd, 1, true)? {
                return Ok((false, Some(rd)));
            }
        }
        Ok((true, None))
    }

    /// `w(G)`: the largest weight of an r-ceiling distribution, and one
    /// attaining it.
    pub fn graph_weight(&mut self) -> Result<(DyadicWeight, RootedDistribution), ParameterError> {
        let (_, ceilings) = self.r_critical_number()?;
        let best = ceilings.iter().map(|rd| weight(rd, &self.dt)).max().expect("at least one ceiling");
        let witness = ceilings.into_iter().find(|rd| weight(rd, &self.dt) == best).expect("attained");
        Ok((best, witness))
    }

    /// Whenever `q` vertices are occupied by at least `2p(G) - q + 1` pebbles,
    /// two pebbles can be moved to any vertex. Checking sizes exactly `2p - q
    /// + 1` with support exactly `q` suffices by monotonicity.
    pub fn has_two_pebbling_property(&mut self) -> Result<bool, ParameterError> {
        let (p, _) = self.pebbling_number()?;
        let n = self.graph.n();
        for q in 1..=n {
            let size = 2 * p + 1 - q as u64;
            for d in enumerate_distributions(n, size as u32, Some(&self.aut)) {
                self.opts.check()?;
                if d.support().count() != q {
                    continue;
                }
                for r in 0..n {
                    let rd = RootedDistribution::new(d.clone(), r).expect("root in range");
                    if !self.solver.is_solvable(&rd, 2, false)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every parameter, with all invariants checked.
    pub fn full_report(&mut self) -> Result<ParameterReport, ParameterError> {
        let (p, p_w) = self.pebbling_number()?;
        let (o, o_w) = self.optimal_pebbling_number()?;
        let (c_u, c_u_w) = self.u_critical_number()?;
        let (c_ru, c_ru_w) = self.rooted_u_critical_number()?;
        let (c_g, c_g_w) = self.g_critical_number()?;
        let (c_r, ceilings) = self.r_critical_number()?;
        let (w, w_w) = self.graph_weight()?;
        let max_critical_weight = self.max_critical_weight()?;
        let (is_greedy, greedy_cx) = self.is_greedy_graph()?;
        let (is_thrifty, thrifty_cx) = self.is_thrifty_graph()?;
        let mut witnesses = BTreeMap::new();
        witnesses.insert("p".to_string(), Witness::Rooted(p_w));
        witnesses.insert("o".to_string(), Witness::Global(o_w));
        witnesses.insert("c_u".to_string(), Witness::Global(c_u_w));
        witnesses.insert("c_ru".to_string(), Witness::Rooted(c_ru_w));
        witnesses.insert("c_g".to_string(), Witness::Global(c_g_w));
        witnesses.insert("c_r".to_string(), Witness::Rooted(ceilings[0].clone()));
        witnesses.insert("graph_weight".to_string(), Witness::Rooted(w_w));
        if let Some(x) = greedy_cx {
            witnesses.insert("greedy_counterexample".to_string(), Witness::Rooted(x));
        }
        if let Some(x) = thrifty_cx {
            witnesses.insert("thrifty_counterexample".to_string(), Witness::Rooted(x));
        }
        let report = ParameterReport {
            n: self.graph.n(),
            diameter: self.dt.diameter(),
            two_pow_d: self.two_pow_d(),
            p,
            o,
            c_r,
            c_g,
            c_u,
            c_ru,
            is_greedy,
            is_thrifty,
            graph_weight: w,
            max_critical_weight,
            ceilings,
            witnesses,
        };
        let bad = report.violations();
        if !bad.is_empty() {
            return Err(ParameterError::InvariantViolation(bad.join("; ")));
        }
        Ok(report)
    }

    /// Values computed so far, by name, for reporting after an interruption.
    pub fn computed_so_far(&self) -> BTreeMap<&'static str, String> {
        let mut m = BTreeMap::new();
        m.insert("n", self.graph.n().to_string());
        m.insert("two_pow_d", self.two_pow_d().to_string());
        if let Some((p, _)) = &self.p {
            m.insert("p", p.to_string());
        }
        if let Some((c, _)) = &self.c_r {
            m.insert("c_r", c.to_string());
        }
        if let Some((o, _)) = &self.o {
            m.insert("o", o.to_string());
        }
        if let Some((c, _)) = &self.c_u {
            m.insert("c_u", c.to_string());
        }
        if let Some((c, _)) = &self.c_g {
            m.insert("c_g", c.to_string());
        }
        if let Some((gr, _)) = &self.greedy {
            m.insert("is_greedy", gr.to_string());
        }
        m
    }
}

pub fn pebbling_number(g: &Graph) -> Result<(u64, RootedDistribution), ParameterError> {
    Analysis::new(g).pebbling_number()
}

pub fn optimal_pebbling_number(g: &Graph) -> Result<(u64, Distribution), ParameterError> {
    Analysis::new(g).optimal_pebbling_number()
}

pub fn r_critical_number(g: &Graph) -> Result<(u64, Vec<RootedDistribution>), ParameterError> {
    Analysis::new(g).r_critical_number()
}

pub fn g_critical_number(g: &Graph) -> Result<(u64, Distribution), ParameterError> {
    Analysis::new(g).g_critical_number()
}

pub fn u_critical_number(g: &Graph) -> Result<(u64, Distribution), ParameterError> {
    Analysis::new(g).u_critical_number()
}

pub fn graph_weight(g: &Graph) -> Result<DyadicWeight, ParameterError> {
    Ok(Analysis::new(g).graph_weight()?.0)
}

pub fn is_greedy_graph(g: &Graph) -> Result<(bool, Option<RootedDistribution>), ParameterError> {
    Analysis::new(g).is_greedy_graph()
}

pub fn is_thrifty_graph(g: &Graph) -> Result<(bool, Option<RootedDistribution>), ParameterError> {
    Analysis::new(g).is_thrifty_graph()
}

pub fn has_two_pebbling_property(g: &Graph) -> Result<bool, ParameterError> {
    Analysis::new(g).has_two_pebbling_property()
}

pub fn full_report(g: &Graph) -> Result<ParameterReport, ParameterError> {
    Analysis::new(g).full_report()
}

/// All r-critical distributions for one root.
pub fn critical_distributions(g: &Graph, root: usize) -> Result<Vec<Distribution>, ParameterError> {
    Analysis::new(g).critical_distributions(root)
}
