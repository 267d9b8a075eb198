use super::{Graph, GraphError};

/// Standard graph families with fixed vertex labelings:
///
/// * `Path(k)`: vertices `0..k` in path order.
/// * `Cycle(k)`: vertices `0..k` around the cycle, `k >= 3`.
/// * `Star(k)`: `K_{1,k}` with hub `0` and leaves `1..=k`.
/// * `Complete(k)`: `K_k`.
/// * `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// * `Fan(k)`: path vertices `0..k` in path order, hub `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Fan(usize),
}

impl Family {
    /// Parses `kind:params`, e.g. `cycle:7` or `complete_bipartite:2,3`.
    pub fn parse(spec: &str) -> Result<Family, GraphError> {
        let bad = || GraphError::InvalidFamily(spec.to_string());
        let (kind, params) = spec.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let one = || if nums.len() == 1 { Ok(nums[0]) } else { Err(bad()) };
        Ok(match kind.trim() {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "star" => Family::Star(one()?),
            "complete" => Family::Complete(one()?),
            "fan" => Family::Fan(one()?),
            "complete_bipartite" => match nums.as_slice() {
                &[a, b] => Family::CompleteBipartite(a, b),
                _ => return Err(bad()),
            },
            _ => return Err(bad()),
        })
    }
}

pub fn make_family(kind: Family) -> Result<Graph, GraphError> {
    let invalid = |why: &str| Err(GraphError::InvalidFamily(format!("{kind:?}: {why}")));
    let (n, edges): (usize, Vec<(usize, usize)>) = match kind {
        Family::Path(k) => {
            if k == 0 {
                return invalid("needs at least one vertex");
            }
            (k, (1..k).map(|i| (i - 1, i)).collect())
        }
        Family::Cycle(k) => {
            if k < 3 {
                return invalid("a simple cycle needs at least 3 vertices");
            }
            (k, (0..k).map(|i| (i, (i + 1) % k)).collect())
        }
        Family::Star(k) => {
            if k == 0 {
                return invalid("needs at least one leaf");
            }
            (k + 1, (1..=k).map(|i| (0, i)).collect())
        }
        Family::Complete(k) => {
            if k == 0 {
                return invalid("needs at least one vertex");
            }
            (k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect())
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return invalid("both parts must be non-empty");
            }
            (a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
        }
        Family::Fan(k) => {
            if k == 0 {
                return invalid("needs at least one path vertex");
            }
            let mut e: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
            e.extend((0..k).map(|i| (i, k)));
            (k + 1, e)
        }
    };
    Graph::from_edges(n, &edges)
}
