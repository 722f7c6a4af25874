//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Graphs are immutable values. Every operation that changes a graph returns
//! a new one. Graphs with at most 64 vertices also carry a bitset adjacency,
//! which the brute-force routines use.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::rational::{ratio, Rational};

/// An unordered vertex pair stored with `u < v`.
pub type Edge = (usize, usize);

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    nbrs: Vec<Vec<usize>>,
    bits: Option<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Graph> {
        Graph::new(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> GraphRepr {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated pairs and out-of-range ends.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut es = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at vertex {u}")));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!(
                "repeated edge ({},{})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph::build(n, es))
    }

    /// Like [`Graph::new`] but silently drops duplicates. Panics on loops or
    /// out-of-range ends, so only use it on internally generated edges.
    pub(crate) fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = Edge>) -> Graph {
        let mut es: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u != v && u < n && v < n, "bad edge ({u},{v}) for n={n}");
                (u.min(v), u.max(v))
            })
            .collect();
        es.sort_unstable();
        es.dedup();
        Graph::build(n, es)
    }

    fn build(n: usize, edges: Vec<Edge>) -> Graph {
        let mut nbrs = vec![Vec::new(); n];
        for &(u, v) in &edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        for l in nbrs.iter_mut() {
            l.sort_unstable();
        }
        let bits = (n <= 64).then(|| {
            let mut b = vec![0u64; n];
            for &(u, v) in &edges {
                b[u] |= 1 << v;
                b[v] |= 1 << u;
            }
            b
        });
        Graph {
            n,
            edges,
            nbrs,
            bits,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::build(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        Graph::complete_on(n, &(0..n).collect::<Vec<_>>())
    }

    /// Clique on `set`, padded with isolated vertices up to order `n`.
    pub fn complete_on(n: usize, set: &[usize]) -> Graph {
        let mut es = Vec::new();
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                es.push((u, v));
            }
        }
        Graph::from_edges_dedup(n, es)
    }

    /// Complete multipartite graph with the given classes, on order `n`.
    pub fn complete_multipartite_on(n: usize, classes: &[Vec<usize>]) -> Graph {
        let mut es = Vec::new();
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                for &u in a {
                    for &v in b {
                        es.push((u, v));
                    }
                }
            }
        }
        Graph::from_edges_dedup(n, es)
    }

    /// Complete multipartite graph with classes of the given sizes, numbered
    /// consecutively.
    pub fn complete_multipartite(sizes: &[usize]) -> Graph {
        let mut classes = Vec::new();
        let mut next = 0;
        for &s in sizes {
            classes.push((next..next + s).collect::<Vec<_>>());
            next += s;
        }
        Graph::complete_multipartite_on(next, &classes)
    }

    /// `K_p` minus the edges inside the vertex set `{0..q-1}`.
    pub fn complete_split(p: usize, q: usize) -> Result<Graph> {
        if !(p > q && q > 1) {
            return domain(format!("complete_split needs p > q > 1, got p={p}, q={q}"));
        }
        let mut es = Vec::new();
        for u in 0..p {
            for v in (u + 1).max(q)..p {
                es.push((u, v));
            }
        }
        Ok(Graph::from_edges_dedup(p, es))
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `K_p` plus one vertex joined to the `r` lowest clique vertices.
    ///
    /// Has order `p` when `r == 0` and `p + 1` otherwise.
    pub fn representative(p: usize, r: usize) -> Graph {
        assert!(r <= p, "representative needs r <= p");
        if r == 0 {
            return Graph::complete(p);
        }
        let mut es = Vec::new();
        for u in 0..p {
            for v in u + 1..p {
                es.push((u, v));
            }
        }
        es.extend((0..r).map(|u| (u, p)));
        Graph::from_edges_dedup(p + 1, es)
    }

    /// Random graph with exactly `m` edges on `n` vertices.
    pub fn random_gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
        let mut all = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                all.push((u, v));
            }
        }
        assert!(m <= all.len(), "too many edges requested");
        all.shuffle(rng);
        all.truncate(m);
        Graph::from_edges_dedup(n, all)
    }

    /// Random graph where each pair is an edge with probability `p`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut es = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    es.push((u, v));
                }
            }
        }
        Graph::build(n, es)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Bitset adjacency of `v`, present when the order is at most 64.
    pub fn adj_mask(&self, v: usize) -> Option<u64> {
        self.bits.as_ref().map(|b| b[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        match &self.bits {
            Some(b) => b[u] >> v & 1 == 1,
            None => self.nbrs[u].binary_search(&v).is_ok(),
        }
    }

    /// `2e/n`; fails on the null graph.
    pub fn average_degree(&self) -> Result<Rational> {
        if self.n == 0 {
            return domain("average degree of the null graph");
        }
        Ok(ratio(2 * self.size() as u64, self.n as u64))
    }

    /// Average degree of the support; 0 for edgeless graphs.
    pub fn essential_average_degree(&self) -> Rational {
        let s = self.support_vertices().len();
        if s == 0 {
            Rational::zero()
        } else {
            ratio(2 * self.size() as u64, s as u64)
        }
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        self.edges
            .iter()
            .filter(|&&(u, v)| inside[u] && inside[v])
            .count()
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        let s = set.len();
        self.edges_within(set) == s * s.saturating_sub(1) / 2
    }

    /// Induced subgraph on `set`, relabelled in increasing vertex order.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        if let Some(&v) = set.as_slice().iter().find(|&&v| v >= self.n) {
            return domain(format!("vertex {v} out of range for order {}", self.n));
        }
        Ok(self.sub(set.as_slice()))
    }

    /// Induced subgraph on `set`, relabelled in the order given.
    pub(crate) fn sub(&self, set: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in set.iter().enumerate() {
            pos[v] = i;
        }
        let es = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::from_edges_dedup(set.len(), es)
    }

    /// Non-isolated vertices in increasing order.
    pub fn support_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.nbrs[v].is_empty()).collect()
    }

    /// The graph with isolated vertices removed, together with the original
    /// label of each remaining vertex. An edgeless graph maps to `K_1` on
    /// vertex 0 (or to the null graph when `n == 0`).
    pub fn support(&self) -> (Graph, Vec<usize>) {
        let sv = self.support_vertices();
        if sv.is_empty() {
            let keep: Vec<usize> = (0..self.n.min(1)).collect();
            return (Graph::empty(keep.len()), keep);
        }
        (self.sub(&sv), sv)
    }

    pub fn complement(&self) -> Graph {
        let mut es = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    es.push((u, v));
                }
            }
        }
        Graph::build(self.n, es)
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let e = (e.0.min(e.1), e.0.max(e.1));
        Graph::build(
            self.n,
            self.edges.iter().copied().filter(|&x| x != e).collect(),
        )
    }

    /// Adds edges, ignoring pairs already present.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = Edge>) -> Graph {
        Graph::from_edges_dedup(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Same edges on a larger vertex set.
    pub fn padded(&self, n: usize) -> Graph {
        assert!(n >= self.n);
        Graph::build(n, self.edges.clone())
    }

    /// Relabels vertex `v` to `map[v]` on a graph of order `n`.
    pub fn relabeled(&self, n: usize, map: &[usize]) -> Graph {
        Graph::from_edges_dedup(n, self.edges.iter().map(|&(u, v)| (map[u], map[v])))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let s = self.n;
        let es = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + s, v + s)))
            .collect();
        Graph::build(s + other.n, es)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let s = self.n;
        let mut es: Vec<Edge> = self.disjoint_union(other).edges;
        for u in 0..s {
            for v in 0..other.n {
                es.push((u, s + v));
            }
        }
        Graph::from_edges_dedup(s + other.n, es)
    }

    /// Replaces every vertex `x` by the class `{x*t, .., x*t+t-1}` and every
    /// edge by the complete bipartite graph between the two classes. With
    /// `fill_parts` each class also becomes a clique.
    pub fn blow_up(&self, t: usize, fill_parts: bool) -> Graph {
        assert!(t >= 1, "blow-up factor must be positive");
        let mut es = Vec::with_capacity(self.edges.len() * t * t);
        if fill_parts {
            for x in 0..self.n {
                for i in 0..t {
                    for j in i + 1..t {
                        es.push((x * t + i, x * t + j));
                    }
                }
            }
        }
        for &(u, v) in &self.edges {
            for i in 0..t {
                for j in 0..t {
                    es.push((u * t + i, v * t + j));
                }
            }
        }
        Graph::from_edges_dedup(self.n * t, es)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.nbrs[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Size of a largest clique (branch and bound on candidate sets).
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, size: usize, cand: Vec<usize>, best: &mut usize) {
            if cand.is_empty() {
                *best = (*best).max(size);
                return;
            }
            for (i, &v) in cand.iter().enumerate() {
                if size + cand.len() - i <= *best {
                    return;
                }
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                grow(g, size + 1, next, best);
            }
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut best = 0;
        grow(self, 0, order, &mut best);
        best
    }

    /// Colour-refinement invariant: equal for isomorphic graphs.
    pub fn invariant(&self) -> u64 {
        let colors = refine(self, None);
        let mut sorted = colors;
        sorted.sort_unstable();
        let mut h = DefaultHasher::new();
        (self.n, self.edges.len()).hash(&mut h);
        sorted.hash(&mut h);
        h.finish()
    }
}

/// Stable colour refinement. Colours are hashes of the refinement history, so
/// they are comparable between graphs.
fn refine(g: &Graph, init: Option<&[u64]>) -> Vec<u64> {
    let mut col: Vec<u64> = match init {
        Some(c) => c.to_vec(),
        None => (0..g.n).map(|v| g.degree(v) as u64).collect(),
    };
    let classes = |c: &[u64]| {
        let mut s = c.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len()
    };
    let mut k = classes(&col);
    loop {
        let next: Vec<u64> = (0..g.n)
            .map(|v| {
                let mut nc: Vec<u64> = g.nbrs[v].iter().map(|&w| col[w]).collect();
                nc.sort_unstable();
                let mut h = DefaultHasher::new();
                col[v].hash(&mut h);
                nc.hash(&mut h);
                h.finish()
            })
            .collect();
        let k2 = classes(&next);
        col = next;
        if k2 == k {
            return col;
        }
        k = k2;
    }
}

/// Exact isomorphism test by colour refinement plus backtracking.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// A bijection `map` with `a.has_edge(u, v) == b.has_edge(map[u], map[v])`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n != b.n || a.edges.len() != b.edges.len() {
        return None;
    }
    let ca = refine(a, None);
    let cb = refine(b, None);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut count: HashMap<u64, usize> = HashMap::new();
    for &c in &ca {
        *count.entry(c).or_default() += 1;
    }
    // Map rare colours first, then follow adjacency to prune early.
    let mut order: Vec<usize> = Vec::with_capacity(a.n);
    let mut placed = vec![false; a.n];
    while order.len() < a.n {
        let start = (0..a.n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (count[&ca[v]], v))
            .unwrap();
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            i += 1;
            let mut next: Vec<usize> = a.nbrs[u].iter().copied().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (count[&ca[w]], w));
            for w in next {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    if extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[u64],
    cb: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for x in 0..b.n {
        if used[x] || cb[x] != ca[u] {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .all(|&w| a.has_edge(u, w) == b.has_edge(x, map[w]));
        if !ok {
            continue;
        }
        map[u] = x;
        used[x] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
        map[u] = usize::MAX;
    }
    false
}

/// A sorted set of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut v: Vec<usize>) -> VertexSet {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// A finite multiset of graphs, kept in insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct GraphList {
    pub graphs: Vec<Graph>,
}

impl GraphList {
    pub fn new(graphs: Vec<Graph>) -> GraphList {
        GraphList { graphs }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn total_edges(&self) -> usize {
        self.graphs.iter().map(Graph::size).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_numbers() {
        assert_eq!(Graph::empty(0).clique_number(), 0);
        assert_eq!(Graph::empty(3).clique_number(), 1);
        assert_eq!(Graph::complete(5).clique_number(), 5);
        assert_eq!(Graph::cycle(5).clique_number(), 2);
        assert_eq!(Graph::complete_multipartite(&[2, 2, 2]).clique_number(), 3);
        assert_eq!(Graph::representative(4, 2).clique_number(), 4);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        let g = Graph::new(3, [(2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn representative_shapes() {
        let g = Graph::representative(3, 1);
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(1, 3));
        assert_eq!(Graph::representative(4, 0), Graph::complete(4));
        assert!(is_isomorphic(
            &Graph::representative(3, 3),
            &Graph::complete(4)
        ));
    }

    #[test]
    fn complement_and_blow_up() {
        let g = Graph::path(3);
        assert_eq!(g.complement().size(), 1);
        let b = Graph::complete(2).blow_up(3, false);
        assert_eq!(b.size(), 9);
        assert!(!b.has_edge(0, 1));
        assert!(b.has_edge(0, 3));
        let oct = Graph::complete(3).blow_up(2, false);
        assert!(is_isomorphic(
            &oct,
            &Graph::complete_multipartite(&[2, 2, 2])
        ));
        assert_eq!(Graph::empty(1).blow_up(4, true), Graph::complete(4));
        let c = Graph::complete(3).padded(4).complement();
        assert_eq!(c.size(), 3);
        assert_eq!(c.complement(), Graph::complete(3).padded(4));
    }

    #[test]
    fn builders_and_degrees() {
        assert_eq!(Graph::complete_split(5, 3).unwrap().size(), 7);
        assert!(Graph::complete_split(3, 3).is_err());
        assert_eq!(Graph::complete_multipartite(&[2, 2, 2]).size(), 12);
        let k4_4k1 = Graph::complete(4).padded(8);
        assert_eq!(k4_4k1.average_degree().unwrap(), Rational::new(3, 2));
        assert_eq!(k4_4k1.essential_average_degree(), Rational::from_int(3));
        assert!(Graph::empty(0).average_degree().is_err());
        assert_eq!(
            Graph::path(4).average_degree().unwrap(),
            Rational::new(3, 2)
        );
        let wheel = Graph::empty(1).join(&Graph::cycle(4));
        assert_eq!(wheel.size(), 8);
        let k5 = Graph::complete(5);
        assert_eq!(
            k5.induced(&VertexSet::new(vec![0, 1, 2])).unwrap(),
            Graph::complete(3)
        );
        assert!(k5.induced(&VertexSet::new(vec![7])).is_err());
    }

    #[test]
    fn support_of_edgeless() {
        let (s, map) = Graph::empty(4).support();
        assert_eq!(s.order(), 1);
        assert_eq!(map, vec![0]);
        let g = Graph::new(5, [(1, 3)]).unwrap();
        let (s, map) = g.support();
        assert_eq!(map, vec![1, 3]);
        assert_eq!(s.size(), 1);
    }

    #[test]
    fn isomorphism_basic() {
        let c4 = Graph::cycle(4);
        let k22 = Graph::complete_multipartite_on(4, &[vec![0, 1], vec![2, 3]]);
        assert!(is_isomorphic(&c4, &k22));
        let p4 = Graph::path(4);
        assert!(!is_isomorphic(&c4, &p4));
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let tri = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_isomorphic(&star, &tri));
        // 2K3 vs C6: same degree sequence, refinement cannot split them.
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!is_isomorphic(&two_k3, &Graph::cycle(6)));
        assert_eq!(two_k3.invariant(), Graph::cycle(6).invariant());
    }

    #[test]
    fn isomorphism_map_is_valid() {
        let a = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let b = a.relabeled(5, &perm);
        let m = find_isomorphism(&a, &b).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(a.has_edge(u, v), b.has_edge(m[u], m[v]));
            }
        }
    }

    #[test]
    fn serde_shape() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let j = serde_json::to_string(&g).unwrap();
        assert_eq!(j, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&j).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
