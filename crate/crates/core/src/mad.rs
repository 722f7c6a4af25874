//! Exact maximum average degree.
//!
//! `Mad(G) = max 2e(S)/|S|` over non-empty vertex sets `S`. For a candidate
//! density `λ = a/b` the quantity `max_S 2b·e(S) − a|S|` is a minimum cut in
//! an integer network (Goldberg's densest-subgraph construction), so every
//! test is exact. The search is a Dinkelbach iteration: test the current
//! density, and if some set beats it, jump to that set's density. Densities
//! strictly increase and are drawn from a finite set, so the loop ends at the
//! exact maximum.
//!
//! The reported witness is canonical. Maximizers at `λ = Mad` are closed
//! under union and intersection, so the inclusion-minimal non-empty ones are
//! pairwise disjoint. For each vertex `v` the smallest maximizer `M_v`
//! containing `v` is the source side of a minimum cut with `v` forced to the
//! source; the witness is the smallest `M_v`, ties going to the one with the
//! least vertex.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Edge, Graph, VertexSet};
use crate::rational::{ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MadCertificate {
    pub value: Rational,
    pub witness: VertexSet,
}

impl MadCertificate {
    /// Checks the witness density and connectivity against `g`.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        let w = self.witness.as_slice();
        if w.is_empty() {
            return g.order() == 0 && self.value.is_zero();
        }
        if w.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let h = g.sub(w);
        ratio(2 * h.size() as u64, w.len() as u64) == self.value && h.is_connected()
    }
}

/// Maximum average degree with a canonical witness.
pub fn mad(g: &Graph) -> MadCertificate {
    if g.order() == 0 {
        return MadCertificate {
            value: Rational::zero(),
            witness: VertexSet::default(),
        };
    }
    if g.is_edgeless() {
        return MadCertificate {
            value: Rational::zero(),
            witness: VertexSet::new(vec![0]),
        };
    }
    let (s, map) = g.support();
    let dens = Densest::new(&s);
    let (a, b) = dens.maximum();
    let w = dens.canonical_witness(a, b);
    MadCertificate {
        value: ratio(a as u64, b as u64),
        witness: VertexSet::new(w.into_iter().map(|v| map[v]).collect()),
    }
}

/// Value of `Mad(g)` without the witness canonicalisation.
pub fn mad_value(g: &Graph) -> Rational {
    if g.is_edgeless() {
        return Rational::zero();
    }
    let (s, _) = g.support();
    let (a, b) = Densest::new(&s).maximum();
    ratio(a as u64, b as u64)
}

/// Whether deleting `e` leaves `Mad` unchanged.
pub fn is_free_edge(g: &Graph, e: Edge) -> Result<bool> {
    if !g.has_edge(e.0, e.1) {
        return domain(format!("({},{}) is not an edge", e.0, e.1));
    }
    Ok(mad_value(&g.without_edge(e)) == mad_value(g))
}

struct Densest<'a> {
    g: &'a Graph,
    n: usize,
    m: i64,
}

const FORCED: i64 = i64::MAX / 4;

impl<'a> Densest<'a> {
    fn new(g: &'a Graph) -> Self {
        Densest {
            g,
            n: g.order(),
            m: g.size() as i64,
        }
    }

    /// Builds the network for `λ = a/b` and returns it with the baseline
    /// `b·m·n`; `max_S 2b·e(S) − a|S| = baseline − mincut`.
    fn network(&self, a: i64, b: i64, forced: Option<usize>) -> (FlowNetwork, i64) {
        let n = self.n;
        let (src, sink) = (n, n + 1);
        let mut net = FlowNetwork::new(n + 2);
        let bm = b * self.m;
        for v in 0..n {
            let cap = if forced == Some(v) { FORCED } else { bm };
            net.add_edge(src, v, cap, 0);
            net.add_edge(v, sink, bm + a - b * self.g.degree(v) as i64, 0);
        }
        for &(u, v) in self.g.edges() {
            net.add_edge(u, v, b, b);
        }
        (net, bm * n as i64)
    }

    /// Maximum of `2b·e(S) − a|S|` and the minimal set attaining it.
    fn best(&self, a: i64, b: i64, forced: Option<usize>) -> (i64, Vec<usize>) {
        let (mut net, base) = self.network(a, b, forced);
        let cut = net.max_flow(self.n, self.n + 1);
        let side = net.residual_reachable(self.n);
        let set = (0..self.n).filter(|&v| side[v]).collect();
        (base - cut, set)
    }

    /// `Mad` as a reduced fraction `a/b`.
    fn maximum(&self) -> (i64, i64) {
        let (mut a, mut b) = reduce(2 * self.m, self.n as i64);
        loop {
            let (gain, set) = self.best(a, b, None);
            if gain <= 0 {
                return (a, b);
            }
            let e = self.g.sub(&set).size() as i64;
            (a, b) = reduce(2 * e, set.len() as i64);
        }
    }

    fn canonical_witness(&self, a: i64, b: i64) -> Vec<usize> {
        // A smallest M_v cannot strictly contain another maximizer, so it is
        // inclusion-minimal; no separate minimality filter is needed.
        let mut best: Option<Vec<usize>> = None;
        for v in 0..self.n {
            let (gain, set) = self.best(a, b, Some(v));
            if gain < 0 {
                continue;
            }
            debug_assert_eq!(gain, 0);
            let better = match &best {
                None => true,
                Some(cur) => (set.len(), &set) < (cur.len(), cur),
            };
            if better {
                best = Some(set);
            }
        }
        best.expect("some vertex lies in a densest set")
    }
}

fn reduce(a: i64, b: i64) -> (i64, i64) {
    let g = gcd(a, b);
    (a / g, b / g)
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec())
    }

    #[test]
    fn clique_with_isolated_vertices() {
        let c = mad(&Graph::complete(4).padded(8));
        assert_eq!(c.value, Rational::from_int(3));
        assert_eq!(c.witness, vs(&[0, 1, 2, 3]));
    }

    #[test]
    fn trees() {
        for s in 2..12 {
            let c = mad(&Graph::path(s));
            assert_eq!(c.value, Rational::from_int(2) - ratio(2, s as u64));
            assert_eq!(c.witness.len(), s);
        }
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(mad(&star).value, Rational::new(8, 5));
    }

    #[test]
    fn complete_split_value() {
        let g = Graph::complete_split(5, 3).unwrap();
        assert_eq!(mad(&g).value, Rational::new(14, 5));
    }

    #[test]
    fn regular_graphs() {
        assert_eq!(mad(&Graph::cycle(5)).value, Rational::from_int(2));
        let petersen = Graph::new(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(mad(&petersen).value, Rational::from_int(3));
    }

    #[test]
    fn edgeless_and_null() {
        let c = mad(&Graph::empty(5));
        assert_eq!(c.value, Rational::zero());
        assert_eq!(c.witness, vs(&[0]));
        let c = mad(&Graph::empty(0));
        assert!(c.witness.is_empty());
    }

    #[test]
    fn witness_tie_break() {
        // K_3 on {4,5,6} and K_3 on {0,1,2}: equal size, least vertex wins.
        let g = Graph::complete_on(7, &[4, 5, 6]).with_edges([(0, 1), (1, 2), (0, 2)]);
        assert_eq!(mad(&g).witness, vs(&[0, 1, 2]));
        // A K_4 - e has density 5/2 > 2 = K_3; a K_4 beats everything.
        let g = Graph::complete_on(9, &[5, 6, 7, 8]).with_edges([(0, 1), (1, 2), (0, 2)]);
        assert_eq!(mad(&g).witness, vs(&[5, 6, 7, 8]));
        // Path P_2 (density 1) vs nothing larger: smallest maximizer is one edge.
        let m = Graph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(mad(&m).witness, vs(&[0, 1]));
    }

    #[test]
    fn witness_is_minimal_among_equal_density() {
        // Two triangles joined by an edge: density 14/6 > 2, whole graph wins.
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let c = mad(&g);
        assert_eq!(c.value, Rational::new(7, 3));
        assert_eq!(c.witness.len(), 6);
        // Two disjoint K_4 bridged by a path: K_4 is the minimal maximizer.
        let g = Graph::complete_on(10, &[0, 1, 2, 3]).with_edges([
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
        ]);
        assert_eq!(mad(&g).witness, vs(&[0, 1, 2, 3]));
    }

    #[test]
    fn free_edges() {
        let paw = Graph::representative(3, 1);
        assert!(is_free_edge(&paw, (0, 3)).unwrap());
        assert!(!is_free_edge(&paw, (0, 1)).unwrap());
        assert!(!is_free_edge(&Graph::complete(3), (0, 1)).unwrap());
        let k4 = Graph::complete(4);
        assert!(!is_free_edge(&k4, (2, 3)).unwrap());
        assert_eq!(mad(&k4.without_edge((2, 3))).value, Rational::new(5, 2));
        assert!(is_free_edge(&k4, (0, 3)).is_ok());
        assert!(is_free_edge(&paw, (1, 3)).is_err());
    }

    #[test]
    fn certificates_are_consistent() {
        let gs = [
            Graph::representative(5, 2),
            Graph::complete_split(6, 3).unwrap(),
            Graph::cycle(7),
            Graph::complete(3).disjoint_union(&Graph::path(5)),
        ];
        for g in &gs {
            assert!(mad(g).is_consistent_with(g), "{g:?}");
        }
    }
}
