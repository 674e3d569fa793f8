//! Exact maximum clique search.
//!
//! Branch and bound over candidate bitsets with a greedy-coloring upper
//! bound (Tomita-style). Proof pipelines rely on exact clique numbers as
//! chromatic lower bounds, so there is deliberately no heuristic mode.

/// Returns one maximum clique as a sorted vertex list.
pub(crate) fn max_clique(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let all: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(adj, &mut current, all, &mut best);
    best.sort_unstable();
    best
}

fn expand(adj: &[u128], current: &mut Vec<usize>, candidates: u128, best: &mut Vec<usize>) {
    if candidates == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring of the candidate set; a vertex in color class c can
    // extend the clique by at most c more vertices.
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut rest = candidates;
    let mut color = 0usize;
    while rest != 0 {
        color += 1;
        let mut class = rest;
        while class != 0 {
            let v = class.trailing_zeros() as usize;
            let bit = 1u128 << v;
            class &= !bit;
            class &= !adj[v];
            rest &= !bit;
            order.push((v, color));
        }
    }
    let mut remaining = candidates;
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        expand(adj, current, remaining & adj[v], best);
        current.pop();
        remaining &= !(1u128 << v);
    }
}
