//! Checks of the published claims and of the structural lemmas, as data.
//!
//! Each function returns one [`Claim`] per checked statement, with expected
//! and computed values side by side. Corpus checks run over every connected
//! graph up to a given order.

use serde::{Deserialize, Serialize};

use crate::graph::{enumerate_graphs, make_family, Family, Graph};
use crate::parameters::{Analysis, Options, ParameterError};
use crate::pebble::{apply_step, enumerate_distributions, weight, Distribution, DyadicWeight, RootedDistribution};
use crate::reconstruct::{check_constraints, reconstruct, PaperGraph};
use crate::reference;
use crate::solver::{Classification, Solver};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Claim {
    pub fn eq(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Claim { name: name.into(), pass: expected == actual, expected, actual }
    }

    /// A claim that some count of violations is zero.
    fn none(name: impl Into<String>, violations: &[String]) -> Self {
        let actual = match violations.first() {
            None => "0 violations".to_string(),
            Some(first) => format!("{} violations, first: {first}", violations.len()),
        };
        Claim { name: name.into(), expected: "0 violations".into(), pass: violations.is_empty(), actual }
    }
}

fn family(f: Family) -> Graph {
    make_family(f).expect("valid family")
}

fn row(r: [u64; 7]) -> String {
    format!("{r:?}")
}

/// Table rows `(p, c_g, c_r, 2^d, n, c_u, o)` for K5, K2,3 and C7.
pub fn table_one(opts: Options) -> Result<Vec<Claim>, ParameterError> {
    let cases = [
        ("K5", Family::Complete(5), [5, 5, 2, 2, 5, 5, 2]),
        ("K2,3", Family::CompleteBipartite(2, 3), [5, 5, 4, 4, 5, 4, 3]),
        ("C7", Family::Cycle(7), [11, 10, 10, 8, 7, 7, 5]),
    ];
    let mut out = Vec::new();
    for (name, f, want) in cases {
        let r = Analysis::with_options(&family(f), opts).full_report()?;
        out.push(Claim::eq(format!("table row {name}"), row(want), row(r.table_row())));
    }
    Ok(out)
}

/// `p(K_1,n) = n + 2` and `c_r(K_1,n) = 4` for `n = 4..7`.
pub fn stars(opts: Options) -> Result<Vec<Claim>, ParameterError> {
    let mut out = Vec::new();
    for n in 4..=7 {
        let mut a = Analysis::with_options(&family(Family::Star(n)), opts);
        out.push(Claim::eq(format!("p(K1,{n})"), n + 2, a.pebbling_number()?.0));
        out.push(Claim::eq(format!("c_r(K1,{n})"), 4, a.r_critical_number()?.0));
    }
    Ok(out)
}

/// Pebbling number, critical number, weight and thriftiness of `F_k`.
pub fn fans(opts: Options) -> Result<Vec<Claim>, ParameterError> {
    let mut out = Vec::new();
    for k in 4..=8usize {
        let mut a = Analysis::with_options(&family(Family::Fan(k)), opts);
        out.push(Claim::eq(format!("p(F{k})"), k + 1, a.pebbling_number()?.0));
        out.push(Claim::eq(format!("c_r(F{k})"), k, a.r_critical_number()?.0));
        out.push(Claim::eq(format!("w(F{k})"), DyadicWeight::new(k as u128 + 1, 2), a.graph_weight()?.0));
        out.push(Claim::eq(format!("thrifty(F{k})"), false, a.is_thrifty_graph()?.0));
    }
    Ok(out)
}

/// C7 is neither greedy nor thrifty, `c_r = 10 > 8`, and no critical
/// distribution has 11 or more pebbles.
pub fn cycle_seven(opts: Options) -> Result<Vec<Claim>, ParameterError> {
    let c7 = family(Family::Cycle(7));
    let mut a = Analysis::with_options(&c7, opts);
    let mut out = vec![
        Claim::eq("greedy(C7)", false, a.is_greedy_graph()?.0),
        Claim::eq("thrifty(C7)", false, a.is_thrifty_graph()?.0),
        Claim::eq("c_r(C7)", 10, a.r_critical_number()?.0),
        Claim::eq("2^d(C7)", 8, a.two_pow_d()),
    ];

    // both path-weight inequalities on every critical distribution
    let crit = a.critical_distributions(0)?;
    let mut bad = Vec::new();
    for d in &crit {
        let c = &d.counts()[1..];
        let cw: u64 = (0..6).map(|i| (c[i] as u64) << (5 - i)).sum();
        let ccw: u64 = (0..6).map(|i| (c[5 - i] as u64) << (5 - i)).sum();
        let combined: u64 = [33, 18, 12, 12, 18, 33].iter().zip(c).map(|(k, &x)| k * x as u64).sum();
        if cw > 64 || ccw > 64 || combined > 128 {
            bad.push(format!("{d}@0"));
        }
    }
    out.push(Claim::none("C7 critical distributions satisfy the path inequalities", &bad));
    let largest = crit.iter().map(Distribution::size).max().unwrap_or(0);
    out.push(Claim::eq("largest C7 critical size", 10, largest));

    // independently: classify every distribution of 11..=20 pebbles off the root
    let mut solver = Solver::new(&c7);
    let mut found = Vec::new();
    for size in 11..=20u32 {
        for rest in enumerate_distributions(6, size, None) {
            let mut counts = vec![0];
            counts.extend_from_slice(rest.counts());
            let rd = RootedDistribution::new(Distribution::new(counts), 0).expect("root 0");
            if solver.classify_by_search(&rd)? == Classification::Critical {
                found.push(rd.to_string());
            }
        }
    }
    out.push(Claim::none("C7 critical distributions with 11 to 20 pebbles", &found));
    Ok(out)
}

/// Every reconstruction is non-empty and every result passes its full
/// constraint list.
pub fn reconstructions(opts: Options) -> Result<Vec<Claim>, ParameterError> {
    let mut out = Vec::new();
    for which in PaperGraph::ALL {
        let graphs = reconstruct(which, opts)?;
        out.push(Claim { pass: !graphs.is_empty(), ..Claim::eq(format!("{which} results"), ">= 1", graphs.len()) });
        for (i, g) in graphs.iter().enumerate() {
            for c in check_constraints(which, g)? {
                out.push(Claim {
                    name: format!("{which}[{i}] {}", c.name),
                    expected: c.expected,
                    actual: c.actual,
                    pass: c.pass,
                });
            }
        }
    }
    Ok(out)
}

/// Connected graphs on `1..=max_n` vertices.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_graphs(n, |_| true)).collect()
}

fn dominating_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) + 1 == g.n()).collect()
}

/// True iff the r-critical `d` has one of the five shapes allowed when `a`
/// is adjacent to every other vertex.
pub fn matches_dominating_form(d: &Distribution, root: usize, a: usize) -> bool {
    let c = d.counts();
    let support: Vec<usize> = d.support().collect();
    let only = |vs: &[usize]| support.iter().all(|v| vs.contains(v));
    let free = |b: usize| b != a && b != root;
    // (i) one pebble on the root
    if support == [root] && c[root] == 1 {
        return true;
    }
    // (ii) two pebbles on a
    if a != root && support == [a] && c[a] == 2 {
        return true;
    }
    // (iii) four pebbles on some b
    if support.len() == 1 && free(support[0]) && c[support[0]] == 4 {
        return true;
    }
    // (iv) two pebbles on each of b and c
    if support.len() == 2 && support.iter().all(|&b| free(b) && c[b] == 2) && only(&support) {
        return true;
    }
    // (v) two pebbles on one b, fewer than two elsewhere, none on the root
    let twos: Vec<usize> = (0..c.len()).filter(|&v| c[v] >= 2).collect();
    twos.len() == 1 && free(twos[0]) && c[twos[0]] == 2 && c[root] == 0
}

/// The parameter inequality chain, rooted/global `c_u`, weight and thrift statements, and the parity,
/// weight and step lemmas over the corpus.
pub fn lemma_suite(max_n: usize, max_size: u32, opts: Options) -> Result<Vec<Claim>, ParameterError> {
    let mut report_bad = Vec::new();
    let mut cr3 = Vec::new();
    let mut equiv_bad = Vec::new();
    let mut even_bad = Vec::new();
    let mut min_weight_bad = Vec::new();
    let mut greedy_weight_bad = Vec::new();
    let mut step_bad = Vec::new();
    let mut count = 0usize;
    for g in corpus(max_n) {
        count += 1;
        let name = crate::graph::to_graph_text(&g).replace('\n', ";");
        let mut a = Analysis::with_options(&g, opts);
        match a.full_report() {
            Ok(r) => {
                if r.c_r == 3 {
                    cr3.push(name.clone());
                }
            }
            Err(ParameterError::InvariantViolation(v)) => report_bad.push(format!("{name}: {v}")),
            Err(e) => return Err(e),
        }
        let dt = g.distances();
        let mut solver = Solver::new(&g);
        let n = g.n();
        for root in 0..n {
            for d in a.critical_distributions(root)? {
                let rd = RootedDistribution::new(d.clone(), root).expect("root");
                for v in (0..n).filter(|&v| v != root && g.degree(v) == 1) {
                    if d.get(v) % 2 == 1 {
                        even_bad.push(format!("{name} {rd}"));
                    }
                }
                if solver.is_solvable(&rd, 1, true)? && !weight(&rd, &dt).is_one() {
                    greedy_weight_bad.push(format!("{name} {rd}"));
                }
            }
            for size in 0..=max_size {
                for d in enumerate_distributions(n, size, None) {
                    let rd = RootedDistribution::new(d, root).expect("root");
                    let class = solver.classify_by_search(&rd)?;
                    let w = weight(&rd, &dt);
                    if w < DyadicWeight::one() && class != Classification::Insufficient {
                        min_weight_bad.push(format!("{name} {rd}"));
                    }
                    if class != Classification::Insufficient
                        && (class == Classification::Critical) != solver.all_solutions_critical(&rd)?
                    {
                        equiv_bad.push(format!("{name} {rd}"));
                    }
                    for u in rd.dist().support().collect::<Vec<_>>() {
                        if rd.dist().get(u) < 2 {
                            continue;
                        }
                        for v in g.neighbors(u) {
                            let next = apply_step(&g, &rd, u, v).expect("legal step");
                            let w2 = weight(&next, &dt);
                            let greedy = dt.get(v, root) < dt.get(u, root);
                            if (greedy && w2 != w) || (!greedy && w2 >= w) {
                                step_bad.push(format!("{name} {rd} ({u}→{v})"));
                            }
                        }
                    }
                }
            }
        }
    }
    let tag = |s: &str| format!("{s} (n <= {max_n}, {count} graphs)");
    Ok(vec![
        Claim::none(tag("parameter inequalities, c_ru = c_u, weight and thrift invariants"), &report_bad),
        Claim::none(tag("no graph with c_r = 3"), &cr3),
        Claim::none(tag("critical iff every solution is critical"), &equiv_bad),
        Claim::none(tag("critical pebbles on degree-1 vertices are even"), &even_bad),
        Claim::none(tag("weight below 1 is insufficient"), &min_weight_bad),
        Claim::none(tag("greedy critical distributions weigh exactly 1"), &greedy_weight_bad),
        Claim::none(tag("greedy steps keep weight, other steps lose weight"), &step_bad),
    ])
}

/// The memoized solver against the pruning-free oracle on every rooted
/// distribution with at most `max_size` pebbles.
pub fn oracle_equivalence(max_n: usize, max_size: u32) -> Result<Vec<Claim>, ParameterError> {
    let mut bad = Vec::new();
    let mut checked = 0u64;
    for g in corpus(max_n) {
        let mut solver = Solver::new(&g);
        let n = g.n();
        for root in 0..n {
            for size in 0..=max_size {
                for d in enumerate_distributions(n, size, None) {
                    let rd = RootedDistribution::new(d, root).expect("root");
                    let c = rd.dist().counts();
                    checked += 1;
                    let fast = solver.is_solvable(&rd, 1, false)?;
                    if fast != reference::solvable(&g, c, root, 1, false) {
                        bad.push(format!("solvable {rd}"));
                    }
                    if solver.is_solvable(&rd, 1, true)? != reference::solvable(&g, c, root, 1, true) {
                        bad.push(format!("greedy {rd}"));
                    }
                    if solver.is_solvable(&rd, 2, false)? != reference::solvable(&g, c, root, 2, false) {
                        bad.push(format!("two pebbles {rd}"));
                    }
                    let critical = solver.classify(&rd)? == Classification::Critical;
                    if critical != reference::critical(&g, c, root) {
                        bad.push(format!("critical {rd}"));
                    }
                    if fast && solver.all_solutions_critical(&rd)? == reference::has_surplus_solution(&g, c, root) {
                        bad.push(format!("surplus {rd}"));
                    }
                }
            }
        }
    }
    Ok(vec![Claim::none(
        format!("solver agrees with the exhaustive oracle ({checked} rooted distributions, n <= {max_n}, size <= {max_size})"),
        &bad,
    )])
}

/// With a dominating vertex, every critical distribution has one of the five
/// listed shapes.
pub fn cases_lemma(max_n: usize) -> Result<Vec<Claim>, ParameterError> {
    let mut bad = Vec::new();
    let mut graphs = 0;
    let mut checked = 0usize;
    for g in corpus(max_n) {
        let dom = dominating_vertices(&g);
        if dom.is_empty() {
            continue;
        }
        graphs += 1;
        let mut a = Analysis::new(&g);
        for root in 0..g.n() {
            for d in a.critical_distributions(root)? {
                for &v in &dom {
                    checked += 1;
                    if !matches_dominating_form(&d, root, v) {
                        bad.push(format!("{} {d}@{root} a={v}", crate::graph::to_graph_text(&g).replace('\n', ";")));
                    }
                }
            }
        }
    }
    Ok(vec![Claim::none(
        format!("critical distributions with a dominating vertex ({graphs} graphs, {checked} checks)"),
        &bad,
    )])
}

/// Reports agree across worker counts.
pub fn determinism(graphs: &[Graph]) -> Result<Vec<Claim>, ParameterError> {
    let mut out = Vec::new();
    for g in graphs {
        let one = Analysis::with_options(g, Options::default().with_workers(1)).full_report()?;
        let four = Analysis::with_options(g, Options::default().with_workers(4)).full_report()?;
        out.push(Claim {
            name: format!("report on {} vertices identical for 1 and 4 workers", g.n()),
            expected: "identical".into(),
            actual: if one == four { "identical".into() } else { "different".into() },
            pass: one == four,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominating_forms() {
        // K4 with a = 0, root 3
        let f = |s: &str| s.parse::<Distribution>().unwrap();
        assert!(matches_dominating_form(&f("0,0,0,1"), 3, 0));
        assert!(matches_dominating_form(&f("2,0,0,0"), 3, 0));
        assert!(matches_dominating_form(&f("0,4,0,0"), 3, 0));
        assert!(matches_dominating_form(&f("0,2,2,0"), 3, 0));
        assert!(matches_dominating_form(&f("1,2,1,0"), 3, 0));
        assert!(!matches_dominating_form(&f("0,3,0,0"), 3, 0));
        assert!(!matches_dominating_form(&f("0,2,2,1"), 3, 0));
        assert!(!matches_dominating_form(&f("2,2,0,0"), 3, 0));
    }

    #[test]
    fn small_corpus_is_clean() {
        let claims = lemma_suite(3, 4, Options::default()).unwrap();
        assert!(claims.iter().all(|c| c.pass), "{claims:?}");
        let claims = oracle_equivalence(3, 4).unwrap();
        assert!(claims.iter().all(|c| c.pass), "{claims:?}");
        let claims = cases_lemma(4).unwrap();
        assert!(claims.iter().all(|c| c.pass), "{claims:?}");
    }
}
