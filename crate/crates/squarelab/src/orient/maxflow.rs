//! Unit-capacity max flow (BFS augmenting paths), used to pull
//! edge-disjoint paths out of the odd-vertex refinement.

pub(crate) struct MaxFlow {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    initial: Vec<i32>,
}

impl MaxFlow {
    pub fn new(n: usize) -> Self {
        MaxFlow {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
        }
    }

    /// Adds a directed arc u -> v; returns its arc id.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i32) -> usize {
        let id = self.to.len();
        self.adj[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.initial.push(cap);
        self.adj[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.initial.push(0);
        id
    }

    /// Units of flow pushed through arc `id`.
    pub fn flow(&self, id: usize) -> i32 {
        self.initial[id] - self.cap[id]
    }

    pub fn run(&mut self, s: usize, t: usize) -> i32 {
        let mut total = 0;
        loop {
            let mut prev_arc = vec![usize::MAX; self.adj.len()];
            let mut queue = std::collections::VecDeque::from([s]);
            let mut reached = vec![false; self.adj.len()];
            reached[s] = true;
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for &a in &self.adj[v] {
                    let w = self.to[a];
                    if self.cap[a] > 0 && !reached[w] {
                        reached[w] = true;
                        prev_arc[w] = a;
                        queue.push_back(w);
                    }
                }
            }
            if !reached[t] {
                return total;
            }
            // unit capacities: each augmenting path carries exactly 1
            let mut v = t;
            while v != s {
                let a = prev_arc[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            total += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_paths() {
        // s -> {1,2,3} -> t gives flow 3
        let mut f = MaxFlow::new(5);
        for v in 1..=3 {
            f.add_arc(0, v, 1);
            f.add_arc(v, 4, 1);
        }
        assert_eq!(f.run(0, 4), 3);
    }

    #[test]
    fn bottleneck() {
        // s -> a -> t with a single middle arc
        let mut f = MaxFlow::new(4);
        f.add_arc(0, 1, 2);
        f.add_arc(1, 2, 1);
        f.add_arc(2, 3, 2);
        assert_eq!(f.run(0, 3), 1);
    }
}
