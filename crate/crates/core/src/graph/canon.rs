//! Canonical forms, isomorphism and automorphism groups by refined
//! exhaustive search. Fine for the small graphs this crate deals with.

use super::{bits, Adjacency, Permutation};

/// Minimum upper-triangle adjacency encoding over all vertex orders that
/// respect the degree refinement. Equal forms mean isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u128,
}

impl CanonicalForm {
    /// Hex rendering, stable across runs; used for cache keys and reports.
    pub fn to_hex(&self) -> String {
        format!("{}-{:x}", self.n, self.code)
    }
}

/// Per-vertex isomorphism invariant: degree, then sorted neighbor degrees.
fn invariants(g: &Adjacency) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

fn pair_bit(i: usize, j: usize) -> usize {
    debug_assert!(j < i);
    i * (i - 1) / 2 + j
}

struct CanonSearch<'a> {
    g: &'a Adjacency,
    len: usize,
    // cell_of_position[i]: the vertices allowed at position i
    cell_of_position: Vec<u16>,
    placed: Vec<usize>,
    best: Option<(u128, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn bit_of(&self, k: usize) -> u128 {
        1u128 << (self.len - 1 - k)
    }

    fn prefix_mask(&self, rows: usize) -> u128 {
        // bits for pairs (i, j) with i < rows
        let used = rows * rows.saturating_sub(1) / 2;
        if used == 0 {
            0
        } else {
            let ones = if used >= 128 { u128::MAX } else { (1u128 << used) - 1 };
            ones << (self.len - used)
        }
    }

    fn search(&mut self, pos: usize, used: u16, code: u128) {
        let n = self.g.n();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => code < *b,
            };
            if better {
                self.best = Some((code, self.placed.clone()));
            }
            return;
        }
        let mask = self.prefix_mask(pos + 1);
        for v in bits(self.cell_of_position[pos] & !used) {
            let mut c = code;
            for j in 0..pos {
                if self.g.has_edge(v, self.placed[j]) {
                    c |= self.bit_of(pair_bit(pos, j));
                }
            }
            if let Some((b, _)) = &self.best {
                if c & mask > b & mask {
                    continue;
                }
            }
            self.placed.push(v);
            self.search(pos + 1, used | 1 << v, c);
            self.placed.pop();
        }
    }
}

/// Canonical form plus the labeling that achieves it: `order[i]` is the
/// original vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Adjacency) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let inv = invariants(g);
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut cell_of_position = vec![0u16; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        let mut cell = 0u16;
        while j < n && inv[sorted[j]] == inv[sorted[i]] {
            cell |= 1 << sorted[j];
            j += 1;
        }
        for slot in &mut cell_of_position[i..j] {
            *slot = cell;
        }
        i = j;
    }
    let mut s = CanonSearch {
        g,
        len: (n * n.saturating_sub(1) / 2).max(1),
        cell_of_position,
        placed: Vec::with_capacity(n),
        best: None,
    };
    s.search(0, 0, 0);
    let (code, order) = s.best.expect("at least one labeling");
    (CanonicalForm { n, code }, order)
}

pub fn canonical_form(g: &Adjacency) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Isomorphism test by canonical-form comparison, after a degree-sequence
/// check.
pub fn is_isomorphic(g: &Adjacency, h: &Adjacency) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let degs = |x: &Adjacency| {
        let mut d: Vec<usize> = (0..x.n()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degs(g) != degs(h) {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

/// The full automorphism group as explicit permutations, identity first,
/// then in lexicographic order of the image vectors.
pub fn automorphisms(g: &Adjacency) -> Vec<Permutation> {
    let n = g.n();
    let inv = invariants(g);
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    extend_automorphism(g, &inv, 0, 0, &mut image, &mut out);
    out
}

fn extend_automorphism(
    g: &Adjacency,
    inv: &[(usize, Vec<usize>)],
    v: usize,
    used: u16,
    image: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    let n = g.n();
    if v == n {
        out.push(image.clone());
        return;
    }
    for w in 0..n {
        if used >> w & 1 == 1 || inv[w] != inv[v] {
            continue;
        }
        if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
            image[v] = w;
            extend_automorphism(g, inv, v + 1, used | 1 << w, image, out);
        }
    }
    image[v] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        // (a . b)(v) = a(b(v))
        b.iter().map(|&x| a[x]).collect()
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&make_family(Family::Complete(5)).unwrap()).len(), 120);
        assert_eq!(automorphisms(&make_family(Family::Cycle(7)).unwrap()).len(), 14);
        assert_eq!(automorphisms(&make_family(Family::Path(3)).unwrap()).len(), 2);
        assert_eq!(automorphisms(&make_family(Family::Star(4)).unwrap()).len(), 24);
        assert_eq!(automorphisms(&make_family(Family::Fan(5)).unwrap()).len(), 2);
    }

    #[test]
    fn automorphisms_form_a_group() {
        for fam in [
            Family::Cycle(6),
            Family::Fan(4),
            Family::CompleteBipartite(2, 3),
            Family::Star(3),
            Family::Path(5),
        ] {
            let g = make_family(fam).unwrap();
            let group = automorphisms(&g);
            let id: Vec<usize> = (0..g.n()).collect();
            assert_eq!(group[0], id);
            for a in &group {
                assert_eq!(g.relabel(a), g.clone());
                for b in &group {
                    assert!(group.contains(&compose(a, b)), "{fam:?} not closed");
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = make_family(Family::Cycle(4)).unwrap();
        let k22 = make_family(Family::CompleteBipartite(2, 2)).unwrap();
        assert!(is_isomorphic(&c4, &k22));
        let p4 = make_family(Family::Path(4)).unwrap();
        let s3 = make_family(Family::Star(3)).unwrap();
        assert!(!is_isomorphic(&p4, &s3));
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = make_family(Family::Fan(5)).unwrap();
        let c = canonical_form(&g);
        let perm = vec![3, 5, 0, 1, 4, 2];
        assert_eq!(canonical_form(&g.relabel(&perm)), c);
        let (form, order) = canonical_labeling(&g);
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        assert_eq!(canonical_form(&g.relabel(&pos)), form);
    }
}
