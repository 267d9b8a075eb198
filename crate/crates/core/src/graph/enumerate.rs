//! Connected graphs on `n` vertices up to isomorphism.

use std::collections::BTreeMap;

use super::{canonical_labeling, Adjacency, CanonicalForm, Graph};

/// Every simple graph (connected or not) on `n` vertices, one per isomorphism
/// class, canonically labeled, in increasing canonical-form order.
///
/// Built one vertex at a time: each graph on `k + 1` vertices arises from one
/// on `k` vertices by adding a vertex with some neighborhood, so extending all
/// classes on `k` vertices in every way and deduplicating canonically covers
/// everything.
pub fn enumerate_all_graphs(n: usize) -> Vec<Adjacency> {
    assert!((1..=super::MAX_VERTICES).contains(&n));
    let mut level: BTreeMap<CanonicalForm, Adjacency> = BTreeMap::new();
    let one = Adjacency::empty(1).expect("one vertex");
    level.insert(canonical_labeling(&one).0, one);
    for k in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in 0u32..(1 << k) {
                let mut masks: Vec<u16> = (0..k)
                    .map(|v| g.neighbor_mask(v) | (((nbrs >> v) & 1) as u16) << k)
                    .collect();
                masks.push(nbrs as u16);
                let h = Adjacency::from_masks(masks);
                let (form, order) = canonical_labeling(&h);
                next.entry(form).or_insert_with(|| canonical_relabel(&h, &order));
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn canonical_relabel(g: &Adjacency, order: &[usize]) -> Adjacency {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    g.relabel(&pos)
}

/// Connected graphs on `n` vertices up to isomorphism that pass `filter`,
/// in deterministic (canonical-form) order.
pub fn enumerate_graphs<F>(n: usize, filter: F) -> impl Iterator<Item = Graph>
where
    F: Fn(&Graph) -> bool,
{
    enumerate_all_graphs(n)
        .into_iter()
        .filter_map(|a| Graph::new(a).ok())
        .filter(move |g| filter(g))
}
