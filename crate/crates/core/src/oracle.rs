//! Brute-force ground truth: subset-enumeration Mad, a dynamic program for
//! `M^L`, an exhaustive search for `M(k,n)`, small-order invariants, and the
//! graph corpora the checks run on.
//!
//! Nothing here calls into the flow-based Mad or the closed forms, so the
//! two sides can be compared.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{is_isomorphic, Graph, VertexSet};
use crate::mad::MadCertificate;
use crate::rational::{ratio, Rational};

/// Limits beyond which an oracle refuses instead of running.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_k: usize,
    pub max_edges: usize,
    #[serde(skip)]
    pub time_limit: Option<Duration>,
}

impl OracleBudget {
    pub fn for_mad() -> Self {
        OracleBudget {
            max_vertices: 20,
            max_k: 0,
            max_edges: usize::MAX,
            time_limit: None,
        }
    }

    pub fn for_mlist() -> Self {
        OracleBudget {
            max_vertices: 0,
            max_k: 10,
            max_edges: 200,
            time_limit: None,
        }
    }

    pub fn for_search() -> Self {
        OracleBudget {
            max_vertices: 7,
            max_k: 4,
            max_edges: usize::MAX,
            time_limit: None,
        }
    }

    pub fn for_invariants() -> Self {
        OracleBudget {
            max_vertices: 12,
            max_k: 0,
            max_edges: 100_000,
            time_limit: None,
        }
    }

    fn refuse<T>(what: &str, got: usize, limit: usize) -> Result<T> {
        Err(Error::Budget(format!(
            "{what} = {got} exceeds the budget of {limit}"
        )))
    }
}

/// Mad by enumerating every non-empty vertex subset. Among maximizers the
/// witness is the smallest, then lexicographically least.
pub fn mad_bruteforce(g: &Graph, budget: &OracleBudget) -> Result<MadCertificate> {
    let n = g.order();
    if n > budget.max_vertices.min(20) {
        return OracleBudget::refuse("vertex count", n, budget.max_vertices.min(20));
    }
    if n == 0 {
        return Ok(MadCertificate {
            value: Rational::zero(),
            witness: VertexSet::default(),
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    // best = (2e, |S|, S); compare 2e/|S| by cross-multiplication.
    let mut best: (u64, u64, u32) = (0, 1, 1);
    for s in 1u32..(1u32 << n) {
        let mut twice_e = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            twice_e += (adj[v as usize] & s).count_ones() as u64;
            rest &= rest - 1;
        }
        let size = s.count_ones() as u64;
        let lhs = twice_e * best.1;
        let rhs = best.0 * size;
        let better =
            lhs > rhs || (lhs == rhs && (size < best.1 || (size == best.1 && lex_less(s, best.2))));
        if better {
            best = (twice_e, size, s);
        }
    }
    let witness = (0..n).filter(|&v| best.2 >> v & 1 == 1).collect();
    Ok(MadCertificate {
        value: ratio(best.0, best.1),
        witness: VertexSet::new(witness),
    })
}

/// Lexicographic order of the sorted element lists of two equal-size sets.
fn lex_less(a: u32, b: u32) -> bool {
    let d = a ^ b;
    d != 0 && a & (d & d.wrapping_neg()) != 0
}

/// `g(m)` computed as `max_x 2·min(C(x,2), m)/x`.
pub fn g_oracle(m: u64) -> Rational {
    (2..=m + 1)
        .map(|x| ratio(2 * (x * (x - 1) / 2).min(m), x))
        .max()
        .unwrap_or_else(Rational::zero)
}

/// `max Σ g(m_i)` over compositions `m_1 + … + m_k = N` with `m_i ≥ 1`.
pub fn m_list_dp(k: usize, n_edges: usize, budget: &OracleBudget) -> Result<Rational> {
    if k > budget.max_k {
        return OracleBudget::refuse("k", k, budget.max_k);
    }
    if n_edges > budget.max_edges {
        return OracleBudget::refuse("N", n_edges, budget.max_edges);
    }
    if k == 0 || n_edges < k {
        return Err(Error::Domain(format!(
            "need N >= k >= 1, got k={k}, N={n_edges}"
        )));
    }
    let g: Vec<Rational> = (0..=n_edges as u64)
        .map(|m| {
            if m == 0 {
                Rational::zero()
            } else {
                g_oracle(m)
            }
        })
        .collect();
    // dp[e] after j parts: best sum with exactly e edges, None if unreachable.
    let mut dp: Vec<Option<Rational>> = vec![None; n_edges + 1];
    dp[0] = Some(Rational::zero());
    for _ in 0..k {
        let mut next: Vec<Option<Rational>> = vec![None; n_edges + 1];
        for (e, cur) in dp.iter().enumerate() {
            let Some(cur) = cur else { continue };
            for m in 1..=n_edges - e {
                let v = cur + &g[m];
                let slot = &mut next[e + m];
                if slot.as_ref().is_none_or(|s| &v > s) {
                    *slot = Some(v);
                }
            }
        }
        dp = next;
    }
    Ok(dp[n_edges].clone().expect("N >= k is reachable"))
}

fn lcm_upto(n: usize) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n as u64).fold(1, |l, x| l / gcd(l, x) * x)
}

/// Bit index of pair `(u,v)` in `K_n`.
fn pair_bits(n: usize) -> Vec<Vec<u32>> {
    let mut idx = vec![vec![0u32; n]; n];
    let mut c = 0;
    for u in 0..n {
        for v in u + 1..n {
            idx[u][v] = c;
            idx[v][u] = c;
            c += 1;
        }
    }
    idx
}

fn subset_pairs(s: u32, n: usize, idx: &[Vec<u32>]) -> u64 {
    let mut m = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if s >> u & 1 == 1 && s >> v & 1 == 1 {
                m |= 1 << idx[u][v];
            }
        }
    }
    m
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub value: Rational,
    /// Maximizing sets in First-Fit order.
    pub sets: Vec<VertexSet>,
}

/// Exact `M(k,n)` by exhaustive search over size-sorted tuples of vertex
/// sets. With First-Fit, each pair inside some `X_j` counts `2/|X_j|` for the
/// smallest such set, so the objective is `Σ_pairs 2/min|X_j|`; the first set
/// is fixed to `{0..s−1}` by symmetry.
pub fn m_kn_search(k: usize, n: usize, budget: &OracleBudget) -> Result<SearchResult> {
    if n > budget.max_vertices.min(11) {
        return OracleBudget::refuse("n", n, budget.max_vertices.min(11));
    }
    if k > budget.max_k {
        return OracleBudget::refuse("k", k, budget.max_k);
    }
    if n < 2 || k == 0 {
        return Err(Error::Domain(format!(
            "search needs n >= 2 and k >= 1, got k={k}, n={n}"
        )));
    }
    let start = Instant::now();
    let l = lcm_upto(n);
    let idx = pair_bits(n);
    let mut sets: Vec<u32> = (1u32..1 << n).filter(|s| s.count_ones() >= 2).collect();
    sets.sort_by_key(|&s| (s.count_ones(), s));
    let pairs: Vec<u64> = sets.iter().map(|&s| subset_pairs(s, n, &idx)).collect();
    let weight: Vec<u64> = sets
        .iter()
        .map(|&s| 2 * l / s.count_ones() as u64)
        .collect();
    let ctx = Ctx {
        pairs: &pairs,
        weight: &weight,
        k,
        max_part: l * (n as u64 - 1),
        deadline: budget.time_limit.map(|t| start + t),
    };

    let mut tasks: Vec<Vec<usize>> = Vec::new();
    for s in 2..=n {
        let first = sets.iter().position(|&m| m == (1u32 << s) - 1).unwrap();
        if k == 1 {
            tasks.push(vec![first]);
        } else {
            tasks.extend((first..sets.len()).map(|j| vec![first, j]));
        }
    }
    let results: Vec<Option<(u64, Vec<usize>)>> = tasks
        .par_iter()
        .map(|prefix| {
            let mut covered = 0u64;
            let mut value = 0u64;
            for &i in prefix {
                value += (pairs[i] & !covered).count_ones() as u64 * weight[i];
                covered |= pairs[i];
            }
            let mut best = None;
            let mut path = prefix.clone();
            ctx.dfs(&mut path, covered, value, &mut best);
            best
        })
        .collect();
    if let Some(deadline) = ctx.deadline {
        if Instant::now() > deadline {
            return Err(Error::Budget("search exceeded its time limit".into()));
        }
    }
    let (v, tuple) = results
        .into_iter()
        .flatten()
        .fold(None::<(u64, Vec<usize>)>, |acc, (v, t)| match acc {
            Some((bv, bt)) if bv > v || (bv == v && bt <= t) => Some((bv, bt)),
            _ => Some((v, t)),
        })
        .expect("at least one tuple");
    let sets = tuple
        .iter()
        .map(|&i| VertexSet::new((0..n).filter(|&v| sets[i] >> v & 1 == 1).collect()))
        .collect();
    Ok(SearchResult {
        value: ratio(v, l),
        sets,
    })
}

struct Ctx<'a> {
    pairs: &'a [u64],
    weight: &'a [u64],
    k: usize,
    max_part: u64,
    deadline: Option<Instant>,
}

impl Ctx<'_> {
    fn dfs(
        &self,
        path: &mut Vec<usize>,
        covered: u64,
        value: u64,
        best: &mut Option<(u64, Vec<usize>)>,
    ) {
        if path.len() == self.k {
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                *best = Some((value, path.clone()));
            }
            return;
        }
        let from = *path.last().unwrap();
        let left = (self.k - path.len()) as u64;
        let uncovered = (!covered & self.pairs[self.pairs.len() - 1]).count_ones() as u64;
        let bound = value + (left * self.max_part).min(uncovered * self.weight[from]);
        if best.as_ref().is_some_and(|(b, _)| bound <= *b) {
            return;
        }
        if self.deadline.is_some_and(|d| Instant::now() > d) {
            return;
        }
        for i in from..self.pairs.len() {
            let add = (self.pairs[i] & !covered).count_ones() as u64 * self.weight[i];
            path.push(i);
            self.dfs(path, covered | self.pairs[i], value + add, best);
            path.pop();
        }
    }
}

/// `M(k,n)` by trying every assignment of the edges of `K_n` to `k` parts
/// (first edge fixed to part 0). Intended for `k^(C(n,2)−1) ≤ 2^22`.
pub fn m_kn_colorings(k: usize, n: usize) -> Result<Rational> {
    let e = n * n.saturating_sub(1) / 2;
    if n < 2 || k == 0 {
        return Err(Error::Domain("need n >= 2 and k >= 1".into()));
    }
    let count = (k as f64).powi(e as i32 - 1);
    if count > (1u64 << 22) as f64 {
        return Err(Error::Budget(format!(
            "{k}^{} colorings is too many",
            e - 1
        )));
    }
    let l = lcm_upto(n);
    let idx = pair_bits(n);
    let subsets: Vec<(u64, u64)> = (1u32..1 << n)
        .filter(|s| s.count_ones() >= 2)
        .map(|s| (subset_pairs(s, n, &idx), 2 * l / s.count_ones() as u64))
        .collect();
    let total = count as u64;
    let best = (0..total)
        .into_par_iter()
        .map(|code| {
            let mut masks = vec![0u64; k];
            masks[0] |= 1;
            let mut c = code;
            for bit in 1..e {
                masks[(c % k as u64) as usize] |= 1 << bit;
                c /= k as u64;
            }
            masks
                .iter()
                .map(|&m| {
                    subsets
                        .iter()
                        .map(|&(p, w)| (p & m).count_ones() as u64 * w)
                        .max()
                        .unwrap_or(0)
                })
                .sum::<u64>()
        })
        .max()
        .unwrap_or(0);
    Ok(ratio(best, l))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub omega: usize,
    pub chi: usize,
    pub degeneracy: usize,
    pub col: usize,
    pub kappa_plus: usize,
    pub lambda_plus: usize,
}

/// Clique number, chromatic number, degeneracy, colouring number and the
/// largest vertex and edge connectivity of an induced subgraph, computed on
/// the support of `g`.
pub fn invariants_small(g: &Graph, budget: &OracleBudget) -> Result<Invariants> {
    if g.size() > budget.max_edges {
        return OracleBudget::refuse("edge count", g.size(), budget.max_edges);
    }
    let (s, _) = g.support();
    let n = s.order();
    if n > budget.max_vertices.min(20) {
        return OracleBudget::refuse("support order", n, budget.max_vertices.min(20));
    }
    let degeneracy = degeneracy(&s);
    let (kappa_plus, lambda_plus) = connectivity_plus(&s);
    Ok(Invariants {
        omega: s.clique_number(),
        chi: chromatic_number(&s),
        degeneracy,
        col: degeneracy + 1,
        kappa_plus,
        lambda_plus,
    })
}

/// `(ω, χ, δ⁺, col)` without the connectivity maxima.
pub fn coloring_invariants(g: &Graph) -> (usize, usize, usize, usize) {
    let (s, _) = g.support();
    let d = degeneracy(&s);
    (s.clique_number(), chromatic_number(&s), d, d + 1)
}

/// Largest minimum degree met while peeling minimum-degree vertices.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !gone[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        best = best.max(deg[v]);
        gone[v] = true;
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Exact chromatic number by DSATUR-ordered backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let lo = g.clique_number().max(1);
    (lo..=n).find(|&c| colorable(g, c)).unwrap()
}

fn colorable(g: &Graph, c: usize) -> bool {
    fn go(g: &Graph, c: usize, color: &mut Vec<usize>, done: usize) -> bool {
        let n = g.order();
        if done == n {
            return true;
        }
        // Uncoloured vertex with most distinct neighbour colours, then degree.
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| color[w])
                    .filter(|&x| x != usize::MAX)
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        let used = color
            .iter()
            .filter(|&&x| x != usize::MAX)
            .max()
            .map_or(0, |&m| m + 1);
        for x in 0..c.min(used + 1) {
            if g.neighbors(v).iter().all(|&w| color[w] != x) {
                color[v] = x;
                if go(g, c, color, done + 1) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    go(g, c, &mut vec![usize::MAX; g.order()], 0)
}

fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            // Split every vertex x into x_in = x, x_out = n + x.
            let mut net = FlowNetwork::new(2 * n);
            for x in 0..n {
                let cap = if x == u || x == v { n as i64 } else { 1 };
                net.add_edge(x, n + x, cap, 0);
            }
            for &(a, b) in g.edges() {
                net.add_edge(n + a, b, n as i64, 0);
                net.add_edge(n + b, a, n as i64, 0);
            }
            best = best.min(net.max_flow(n + u, v) as usize);
        }
    }
    best
}

fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    (1..n)
        .map(|v| {
            let mut net = FlowNetwork::new(n);
            for &(a, b) in g.edges() {
                net.add_edge(a, b, 1, 1);
            }
            net.max_flow(0, v) as usize
        })
        .min()
        .unwrap()
}

/// `(κ⁺, λ⁺)`: maxima over induced subgraphs. Subsets whose minimum degree
/// cannot beat the current best are skipped (`κ ≤ λ ≤ δ`).
fn connectivity_plus(g: &Graph) -> (usize, usize) {
    let n = g.order();
    let (mut kb, mut lb) = (0, 0);
    for s in 1u32..(1u32 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        if vs.len() < 2 {
            continue;
        }
        let h = g.sub(&vs);
        let min_deg = (0..h.order()).map(|v| h.degree(v)).min().unwrap();
        if min_deg <= kb && min_deg <= lb {
            continue;
        }
        if min_deg > lb {
            lb = lb.max(edge_connectivity(&h));
        }
        if min_deg > kb {
            kb = kb.max(vertex_connectivity(&h));
        }
    }
    (kb, lb)
}

#[derive(Clone, Debug, Serialize)]
pub struct PpCheck {
    pub holds: bool,
    pub k: usize,
    pub floor_total: i64,
    pub sum_omega: usize,
    pub sum_chi: usize,
    pub sum_col: usize,
    pub sum_degeneracy: usize,
    pub sum_kappa_plus: usize,
    pub sum_lambda_plus: usize,
}

/// For a packing of `K_p`, `K_{p+1}` and at most one other part with clique
/// number `p`, checks `Σω = Σχ = Σcol = ⌊ΣMad⌋ + k` and
/// `Σδ⁺ = Σκ⁺ = Σλ⁺ = ⌊ΣMad⌋`.
pub fn check_pp_theorem(d: &Decomposition) -> Result<PpCheck> {
    let budget = OracleBudget::for_invariants();
    let invs: Vec<Invariants> = d
        .parts
        .par_iter()
        .map(|g| invariants_small(g, &budget))
        .collect::<Result<_>>()?;
    let mut clique_orders = Vec::new();
    let mut others = Vec::new();
    for (g, inv) in d.parts.iter().zip(&invs) {
        let (s, _) = g.support();
        if s.size() > 0 && s.is_clique(&(0..s.order()).collect::<Vec<_>>()) {
            clique_orders.push(s.order());
        } else {
            others.push(inv.omega);
        }
    }
    let refuse = |why: &str| {
        Err(Error::Domain(format!(
            "parts do not have the clique shape: {why}"
        )))
    };
    if others.len() > 1 {
        return refuse("more than one non-clique part");
    }
    let p = match (others.first(), clique_orders.iter().min()) {
        (Some(&w), _) => w,
        (None, Some(&m)) => m,
        (None, None) => return refuse("no parts"),
    };
    if clique_orders.iter().any(|&c| c != p && c != p + 1) {
        return refuse("clique orders spread too far");
    }
    let total: Rational = d.parts.iter().map(mad_bruteforce_or_flow).sum();
    let floor_total = total.floor_i64();
    let k = d.k();
    let sum = |f: fn(&Invariants) -> usize| invs.iter().map(f).sum::<usize>();
    let r = PpCheck {
        holds: false,
        k,
        floor_total,
        sum_omega: sum(|i| i.omega),
        sum_chi: sum(|i| i.chi),
        sum_col: sum(|i| i.col),
        sum_degeneracy: sum(|i| i.degeneracy),
        sum_kappa_plus: sum(|i| i.kappa_plus),
        sum_lambda_plus: sum(|i| i.lambda_plus),
    };
    let top = floor_total as usize + k;
    let base = floor_total as usize;
    let holds = [r.sum_omega, r.sum_chi, r.sum_col]
        .iter()
        .all(|&x| x == top)
        && [r.sum_degeneracy, r.sum_kappa_plus, r.sum_lambda_plus]
            .iter()
            .all(|&x| x == base);
    Ok(PpCheck { holds, ..r })
}

fn mad_bruteforce_or_flow(g: &Graph) -> Rational {
    let (s, _) = g.support();
    mad_bruteforce(&s, &OracleBudget::for_mad())
        .map(|c| c.value)
        .unwrap_or_else(|_| crate::mad::mad_value(g))
}

/// Isomorphism classes of connected graphs on exactly `n` vertices, from all
/// labelled graphs. Intended for `n ≤ 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "labelled enumeration is only feasible for n <= 7");
    if n == 0 {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes = Classes::default();
    for mask in 0u64..(1u64 << pairs.len()) {
        let es = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges_dedup(n, es);
        if g.is_connected() {
            classes.insert(g);
        }
    }
    classes.into_vec()
}

/// Connected graphs on `1..=n` vertices up to isomorphism.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

/// Connected graphs with `1..=max_edges` edges (and no isolated vertices) up
/// to isomorphism, grown one edge at a time.
pub fn connected_graphs_by_edges(max_edges: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::complete(2)]];
    while levels.len() < max_edges {
        let mut next = Classes::default();
        for g in levels.last().unwrap() {
            let n = g.order();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        next.insert(g.with_edges([(u, v)]));
                    }
                }
                next.insert(g.padded(n + 1).with_edges([(u, n)]));
            }
        }
        levels.push(next.into_vec());
    }
    levels.truncate(max_edges);
    levels
}

#[derive(Default)]
struct Classes {
    buckets: HashMap<u64, Vec<Graph>>,
    order: Vec<(u64, usize)>,
}

impl Classes {
    fn insert(&mut self, g: Graph) {
        let key = g.invariant();
        let b = self.buckets.entry(key).or_default();
        if b.iter().any(|h| is_isomorphic(h, &g)) {
            return;
        }
        self.order.push((key, b.len()));
        b.push(g);
    }

    fn into_vec(mut self) -> Vec<Graph> {
        let order = std::mem::take(&mut self.order);
        order
            .into_iter()
            .map(|(key, i)| self.buckets[&key][i].clone())
            .collect()
    }
}

/// `count` random graphs with orders in `lo..=hi` and edge density drawn
/// uniformly from `[0.15, 0.85]`.
pub fn random_graphs(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.15..0.85);
            Graph::random_gnp(n, p, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::construct_from_design;
    use crate::designs::{projective_plane, steiner_triple_system};

    fn bf(g: &Graph) -> MadCertificate {
        mad_bruteforce(g, &OracleBudget::for_mad()).unwrap()
    }

    #[test]
    fn brute_force_mad() {
        assert_eq!(
            bf(&Graph::complete(4).without_edge((2, 3))).value,
            Rational::new(5, 2)
        );
        assert_eq!(
            bf(&Graph::representative(5, 2)).value,
            Rational::from_int(4)
        );
        let e = bf(&Graph::empty(3));
        assert_eq!(
            (e.value, e.witness),
            (Rational::zero(), VertexSet::new(vec![0]))
        );
        let big = Graph::empty(21);
        assert!(matches!(
            mad_bruteforce(&big, &OracleBudget::for_mad()),
            Err(Error::Budget(_))
        ));
        assert!(lex_less(0b011, 0b101));
        assert!(!lex_less(0b110, 0b101));
    }

    #[test]
    fn list_dp() {
        let b = OracleBudget::for_mlist();
        assert_eq!(m_list_dp(2, 9, &b).unwrap(), Rational::from_int(5));
        assert_eq!(m_list_dp(7, 28, &b).unwrap(), Rational::from_int(16));
        assert_eq!(m_list_dp(5, 5, &b).unwrap(), Rational::from_int(5));
        assert!(m_list_dp(11, 20, &b).is_err());
        assert_eq!(g_oracle(5), Rational::new(5, 2));
    }

    #[test]
    fn search_small() {
        let b = OracleBudget::for_search();
        assert_eq!(m_kn_search(2, 4, &b).unwrap().value, Rational::new(7, 2));
        assert_eq!(m_kn_search(2, 5, &b).unwrap().value, Rational::new(24, 5));
        assert_eq!(m_kn_search(1, 5, &b).unwrap().value, Rational::from_int(4));
        assert!(m_kn_search(5, 5, &b).is_err());
        assert!(m_kn_search(2, 8, &b).is_err());
        for n in 3..=5 {
            assert_eq!(
                m_kn_colorings(2, n).unwrap(),
                m_kn_search(2, n, &b).unwrap().value
            );
        }
    }

    #[test]
    fn invariants() {
        let b = OracleBudget::for_invariants();
        let k5 = invariants_small(&Graph::complete(5), &b).unwrap();
        assert_eq!(
            k5,
            Invariants {
                omega: 5,
                chi: 5,
                degeneracy: 4,
                col: 5,
                kappa_plus: 4,
                lambda_plus: 4
            }
        );
        let paw = invariants_small(&Graph::representative(3, 1), &b).unwrap();
        assert_eq!((paw.omega, paw.degeneracy, paw.lambda_plus), (3, 2, 2));
        let c5 = invariants_small(&Graph::cycle(5), &b).unwrap();
        assert_eq!((c5.omega, c5.chi, c5.kappa_plus), (2, 3, 2));
    }

    #[test]
    fn pp_theorem() {
        let fano = construct_from_design(&steiner_triple_system(7).unwrap(), 7).unwrap();
        let c = check_pp_theorem(&fano).unwrap();
        assert!(c.holds);
        assert_eq!(c.sum_degeneracy, 14);
        let pg = construct_from_design(&projective_plane(3).unwrap(), 13).unwrap();
        let c = check_pp_theorem(&pg).unwrap();
        assert!(c.holds);
        assert_eq!(c.sum_omega, 52);
    }

    #[test]
    fn corpora() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let by_edges: Vec<usize> = connected_graphs_by_edges(5).iter().map(Vec::len).collect();
        assert_eq!(by_edges, vec![1, 1, 3, 5, 12]);
    }
}
