//! Dinic maximum flow on integer capacities.

use std::collections::VecDeque;

pub(crate) struct FlowNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i64>,
    next: Vec<usize>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![NIL; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    /// Adds arc `u -> v` with capacity `c` and reverse capacity `rc`.
    pub fn add_edge(&mut self, u: usize, v: usize, c: i64, rc: i64) {
        self.push(u, v, c);
        self.push(v, u, rc);
    }

    fn push(&mut self, u: usize, v: usize, c: i64) {
        self.to.push(v);
        self.cap.push(c);
        self.next.push(self.head[u]);
        self.head[u] = self.to.len() - 1;
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    q.push_back(v);
                }
                e = self.next[e];
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.iter[u] != NIL {
            let e = self.iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] = self.next[e];
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.copy_from_slice(&self.head);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network. After `max_flow`
    /// this is the source side of the inclusion-minimal minimum cut.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_network() {
        let mut f = FlowNetwork::new(4);
        f.add_edge(0, 1, 3, 0);
        f.add_edge(0, 2, 2, 0);
        f.add_edge(1, 2, 1, 0);
        f.add_edge(1, 3, 2, 0);
        f.add_edge(2, 3, 3, 0);
        assert_eq!(f.max_flow(0, 3), 5);
        let side = f.residual_reachable(0);
        assert!(side[0] && !side[3]);
    }

    #[test]
    fn undirected_unit_edges() {
        // Two disjoint paths between 0 and 3.
        let mut f = FlowNetwork::new(4);
        for (u, v) in [(0, 1), (1, 3), (0, 2), (2, 3)] {
            f.add_edge(u, v, 1, 1);
        }
        assert_eq!(f.max_flow(0, 3), 2);
    }
}
