//! Naive exhaustive oracles, used to cross-check the memoized solver.
//!
//! Nothing here prunes or memoizes: every legal step, including steps off the
//! root, is tried from every state. Only usable on tiny inputs.

use crate::graph::Graph;

/// True iff some step sequence from `counts` reaches a state accepted by
/// `done`. `greedy_only` restricts steps to those moving closer to `root`.
pub fn reaches(g: &Graph, counts: &[u32], root: usize, greedy_only: bool, done: &dyn Fn(&[u32]) -> bool) -> bool {
    let dist = g.distances();
    let row = dist.row(root);
    let mut c = counts.to_vec();
    walk(g, row, &mut c, greedy_only, done)
}

fn walk(g: &Graph, row: &[u32], c: &mut Vec<u32>, greedy_only: bool, done: &dyn Fn(&[u32]) -> bool) -> bool {
    if done(c) {
        return true;
    }
    for u in 0..c.len() {
        if c[u] < 2 {
            continue;
        }
        for v in g.neighbors(u) {
            if greedy_only && row[v] >= row[u] {
                continue;
            }
            c[u] -= 2;
            c[v] += 1;
            let ok = walk(g, row, c, greedy_only, done);
            c[u] += 2;
            c[v] -= 1;
            if ok {
                return true;
            }
        }
    }
    false
}

/// At least `t` pebbles can be moved to `root`.
pub fn solvable(g: &Graph, counts: &[u32], root: usize, t: u32, greedy_only: bool) -> bool {
    reaches(g, counts, root, greedy_only, &|c| c[root] >= t)
}

/// Some solution leaves a pebble on `root` and at least one more pebble.
pub fn has_surplus_solution(g: &Graph, counts: &[u32], root: usize) -> bool {
    reaches(g, counts, root, false, &|c| c[root] >= 1 && c.iter().sum::<u32>() >= 2)
}

/// Solvable, and no single deletion keeps it solvable.
pub fn critical(g: &Graph, counts: &[u32], root: usize) -> bool {
    if !solvable(g, counts, root, 1, false) {
        return false;
    }
    let mut c = counts.to_vec();
    (0..c.len()).all(|v| {
        if c[v] == 0 {
            return true;
        }
        c[v] -= 1;
        let ok = solvable(g, &c, root, 1, false);
        c[v] += 1;
        !ok
    })
}

pub fn globally_solvable(g: &Graph, counts: &[u32]) -> bool {
    (0..g.n()).all(|r| solvable(g, counts, r, 1, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    #[test]
    fn small_paths() {
        let p3 = make_family(Family::Path(3)).unwrap();
        assert!(solvable(&p3, &[4, 0, 0], 2, 1, true));
        assert!(!solvable(&p3, &[3, 0, 0], 2, 1, false));
        assert!(solvable(&p3, &[2, 1, 0], 2, 1, false));
        assert!(critical(&p3, &[4, 0, 0], 2));
        assert!(!critical(&p3, &[4, 0, 1], 2));
        assert!(has_surplus_solution(&p3, &[5, 0, 0], 2));
        assert!(!has_surplus_solution(&p3, &[4, 0, 0], 2));
        assert!(globally_solvable(&p3, &[1, 1, 1]));
    }
}
