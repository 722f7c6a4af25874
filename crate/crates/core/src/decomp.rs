//! Decompositions and packings of `K_n`: the data model, the validator and
//! the explicit constructions.
//!
//! Parts are spanning subgraphs of `K_n` (isolated vertices are kept).

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::designs::{self, BlockDesign};
use crate::error::{domain, Error, Result};
use crate::formulas::{binom2, m_list};
use crate::graph::{Edge, Graph, VertexSet};
use crate::mad::{mad, mad_value, MadCertificate};
use crate::rational::Rational;
use crate::surd::Surd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Packing,
    Decomposition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub n: usize,
    pub mode: Mode,
    pub parts: Vec<Graph>,
    /// Name of the construction that produced it.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub source: String,
}

impl Decomposition {
    pub fn new(n: usize, mode: Mode, parts: Vec<Graph>, source: impl Into<String>) -> Self {
        Decomposition {
            n,
            mode,
            parts,
            source: source.into(),
        }
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn total_edges(&self) -> usize {
        self.parts.iter().map(Graph::size).sum()
    }
}

/// Small-k construction variants: `A` starts from three near-equal sets,
/// `B` from two halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    A,
    B,
}

#[derive(Clone, Debug, Serialize)]
pub struct MadSumReport {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub source: String,
    pub certificates: Vec<MadCertificate>,
    pub total: Rational,
    /// `M^L(k, e)` for the number of covered edges `e` (`M^L(k, C(n,2))` for
    /// decompositions); absent when `e < k`.
    pub list_bound: Option<Rational>,
    pub within_list_bound: Option<bool>,
    /// `√k·n`.
    pub sqrt_cap: Surd,
    pub below_sqrt_cap: bool,
}

/// Checks edge-disjointness (and coverage for decompositions) and computes
/// every part's Mad.
pub fn validate(d: &Decomposition) -> Result<MadSumReport> {
    let n = d.n;
    if let Some((i, g)) = d.parts.iter().enumerate().find(|(_, g)| g.order() != n) {
        return Err(Error::Validation(format!(
            "part {i} has order {}, expected {n}",
            g.order()
        )));
    }
    let mut owner: HashMap<Edge, usize> = HashMap::new();
    let mut overlaps = Vec::new();
    for (i, g) in d.parts.iter().enumerate() {
        for &e in g.edges() {
            if let Some(j) = owner.insert(e, i) {
                overlaps.push((e, j, i));
            }
        }
    }
    if !overlaps.is_empty() {
        overlaps.truncate(10);
        let msg: Vec<String> = overlaps
            .iter()
            .map(|((u, v), a, b)| format!("({u},{v}) in parts {a} and {b}"))
            .collect();
        return Err(Error::Validation(format!(
            "overlapping edges: {}",
            msg.join(", ")
        )));
    }
    if d.mode == Mode::Decomposition && owner.len() != n * n.saturating_sub(1) / 2 {
        let mut missing = Vec::new();
        'outer: for u in 0..n {
            for v in u + 1..n {
                if !owner.contains_key(&(u, v)) {
                    missing.push((u, v));
                    if missing.len() == 10 {
                        break 'outer;
                    }
                }
            }
        }
        return Err(Error::Validation(format!("edges in no part: {missing:?}")));
    }
    let certificates: Vec<MadCertificate> = d.parts.par_iter().map(mad).collect();
    let total: Rational = certificates.iter().map(|c| &c.value).sum();
    let k = d.k() as u64;
    let e = owner.len() as u64;
    let list_bound = (k >= 1 && e >= k).then(|| m_list(k, e).expect("valid list parameters"));
    let sqrt_cap = Surd::sqrt_times(Rational::from(n), Rational::from(k));
    Ok(MadSumReport {
        n,
        k: d.k(),
        mode: d.mode,
        source: d.source.clone(),
        within_list_bound: list_bound.as_ref().map(|b| &total <= b),
        below_sqrt_cap: sqrt_cap.gt(&total),
        certificates,
        total,
        list_bound,
        sqrt_cap,
    })
}

/// Sum of part Mads without the validity checks.
pub fn mad_sum(d: &Decomposition) -> Rational {
    d.parts
        .par_iter()
        .map(mad_value)
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

/// `H_j` = pairs inside `X_j` not used by an earlier `H_i`.
fn first_fit(n: usize, sets: &[Vec<usize>]) -> Vec<Graph> {
    let mut used = vec![vec![false; n]; n];
    sets.iter()
        .map(|x| {
            let mut es = Vec::new();
            for (i, &u) in x.iter().enumerate() {
                for &v in &x[i + 1..] {
                    let (a, b) = (u.min(v), u.max(v));
                    if !used[a][b] {
                        used[a][b] = true;
                        es.push((a, b));
                    }
                }
            }
            Graph::from_edges_dedup(n, es)
        })
        .collect()
}

/// Splits `range` into consecutive runs of the given sizes.
fn runs(start: usize, sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut at = start;
    sizes
        .iter()
        .map(|&s| {
            let r = (at..at + s).collect();
            at += s;
            r
        })
        .collect()
}

fn cat(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// `K_n` into two parts: a clique on `⌊(n+1)/2⌋` vertices and its complement.
pub fn construct_k2(n: usize) -> Result<Decomposition> {
    if n < 3 {
        return domain("construct_k2 needs n >= 3");
    }
    let x: Vec<usize> = (0..n.div_ceil(2)).collect();
    let g1 = Graph::complete_on(n, &x);
    let g2 = g1.complement();
    Ok(Decomposition::new(
        n,
        Mode::Decomposition,
        vec![g1, g2],
        "k=2 clique and complement",
    ))
}

/// The two small-k constructions for `k ∈ {3,4,5,6}`, by First-Fit over the
/// listed subset sequences.
pub fn construct_small_k(k: usize, n: usize, variant: Variant) -> Result<Decomposition> {
    if !(3..=6).contains(&k) {
        return domain(format!("small-k construction needs 3 <= k <= 6, got {k}"));
    }
    let sets: Vec<Vec<usize>> = match variant {
        Variant::A => {
            if n < 3 {
                return domain("variant A needs n >= 3");
            }
            let a1 = n / 3;
            let a2 = (n - a1) / 2;
            let a = runs(0, &[a1, a2, n - a1 - a2]);
            let (a1, a2, a3) = (&a[0], &a[1], &a[2]);
            let all: Vec<usize> = (0..n).collect();
            match k {
                3 => vec![cat(a1, a2), cat(a1, a3), cat(a2, a3)],
                4 => vec![a1.clone(), a2.clone(), a3.clone(), all],
                5 => vec![
                    a1.clone(),
                    a2.clone(),
                    cat(a1, a2),
                    cat(a1, a3),
                    cat(a2, a3),
                ],
                _ => vec![
                    a1.clone(),
                    a2.clone(),
                    a3.clone(),
                    cat(a1, a2),
                    cat(a1, a3),
                    cat(a2, a3),
                ],
            }
        }
        Variant::B => {
            let b1 = n / 2;
            let b2 = n - b1;
            let halves_needed = k >= 5;
            if b1 < 1 || b2 < 2 || (halves_needed && b1 < 2) {
                return domain(format!("variant B with k={k} needs a larger n than {n}"));
            }
            let bs = runs(0, &[b1, b2]);
            let (x1, x2) = (&bs[0], &bs[1]);
            let h1 = runs(0, &[b1 / 2, b1 - b1 / 2]);
            let h2 = runs(b1, &[b2 / 2, b2 - b2 / 2]);
            match k {
                3 => vec![x1.clone(), x2.clone(), (0..n).collect()],
                4 => vec![x1.clone(), x2.clone(), cat(x1, &h2[0]), cat(x1, &h2[1])],
                5 => vec![
                    x1.clone(),
                    x2.clone(),
                    cat(&h1[0], &h2[0]),
                    cat(&h1[1], &h2[0]),
                    cat(x1, &h2[1]),
                ],
                _ => vec![
                    x1.clone(),
                    x2.clone(),
                    cat(&h1[0], &h2[0]),
                    cat(&h1[1], &h2[0]),
                    cat(&h1[0], &h2[1]),
                    cat(&h1[1], &h2[1]),
                ],
            }
        }
    };
    let parts = first_fit(n, &sets);
    Ok(Decomposition::new(
        n,
        Mode::Decomposition,
        parts,
        format!("small-k construction k={k} variant {variant:?}"),
    ))
}

/// `K_8` into `{4*K_3, 2*(K_4−e), 1*K_4}` from the Fano plane on
/// `v_1..v_7` (vertices 0..6), the blocks through `v_1` extended by `v_8`.
pub fn construct_k7_k8() -> Decomposition {
    const FANO: [[usize; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let w = 7;
    let parts = FANO
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let tri = Graph::complete_on(8, b);
            match i {
                0 => tri.with_edges(b.iter().map(|&x| (x, w))),
                1 | 2 => tri.with_edges([(b[1], w), (b[2], w)]),
                _ => tri,
            }
        })
        .collect();
    Decomposition::new(
        8,
        Mode::Decomposition,
        parts,
        "K_8 into 7 parts from the Fano plane",
    )
}

/// Each block of `d` becomes a clique part on `K_n`.
pub fn construct_from_design(d: &BlockDesign, n: usize) -> Result<Decomposition> {
    designs::validate_pairwise(d)?;
    if n < d.point_count {
        return domain(format!(
            "design has {} points, more than n={n}",
            d.point_count
        ));
    }
    let parts = d
        .blocks
        .iter()
        .map(|b| Graph::complete_on(n, b.as_slice()))
        .collect();
    let mode = if d.complete && n == d.point_count {
        Mode::Decomposition
    } else {
        Mode::Packing
    };
    Ok(Decomposition::new(
        n,
        mode,
        parts,
        format!("{:?} design cliques", d.source),
    ))
}

/// `C(n,2) − t` parts: triangles from a maximum partial triple system, one
/// `P_3` when `t` is odd, single edges for the rest.
pub fn construct_psts_decomposition(n: usize, t: usize) -> Result<Decomposition> {
    if n < 3 || 3 * t > (n - 1) * (n - 1) {
        return domain(format!(
            "need n >= 3 and 0 <= t <= (n-1)^2/3, got n={n}, t={t}"
        ));
    }
    let (design, leave) = designs::max_partial_triple_system(n)?;
    let need = t.div_ceil(2);
    if need > design.blocks.len() {
        return domain(format!(
            "t={t} needs {need} edge-disjoint triangles but the maximum packing of K_{n} has {} (leave has {} edges)",
            design.blocks.len(),
            leave.size()
        ));
    }
    let mut parts = Vec::new();
    let mut used = vec![vec![false; n]; n];
    let mut take = |es: &[Edge], parts: &mut Vec<Graph>| {
        for &(u, v) in es {
            used[u.min(v)][u.max(v)] = true;
        }
        parts.push(Graph::from_edges_dedup(n, es.iter().copied()));
    };
    for b in design.blocks.iter().take(t / 2) {
        let s = b.as_slice();
        take(&[(s[0], s[1]), (s[0], s[2]), (s[1], s[2])], &mut parts);
    }
    if t % 2 == 1 {
        let s = design.blocks[t / 2].as_slice();
        take(&[(s[0], s[1]), (s[0], s[2])], &mut parts);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !used[u][v] {
                parts.push(Graph::from_edges_dedup(n, [(u, v)]));
            }
        }
    }
    debug_assert_eq!(parts.len(), n * (n - 1) / 2 - t);
    Ok(Decomposition::new(
        n,
        Mode::Decomposition,
        parts,
        format!("partial triple system, t={t}"),
    ))
}

/// Vertex classes `V_x = {x·t, .., x·t + t − 1}`.
fn classes(v: usize, t: usize) -> Vec<Vec<usize>> {
    (0..v).map(|x| (x * t..x * t + t).collect()).collect()
}

/// Blow-up of a complete Steiner system on `v` points to `K_n`, `v | n`.
/// Block `B_i` becomes the complete multipartite graph on its classes; the
/// edges inside a class `V_x` go round-robin to the parts whose block
/// contains `x`, so every part stays on its own vertex set.
pub fn blow_up_design_decomposition(d: &BlockDesign, n: usize) -> Result<Decomposition> {
    designs::validate_pairwise(d)?;
    let v = d.point_count;
    if !d.complete || v == 0 {
        return domain("blow-up needs a complete Steiner system");
    }
    if !n.is_multiple_of(v) || n == 0 {
        return domain(format!("{v} does not divide n={n}"));
    }
    let t = n / v;
    let cls = classes(v, t);
    let mut extra: Vec<Vec<Edge>> = vec![Vec::new(); d.blocks.len()];
    for (x, class) in cls.iter().enumerate() {
        let through: Vec<usize> = (0..d.blocks.len())
            .filter(|&i| d.blocks[i].contains(x))
            .collect();
        let mut j = 0;
        for (a, &u) in class.iter().enumerate() {
            for &w in &class[a + 1..] {
                extra[through[j % through.len()]].push((u, w));
                j += 1;
            }
        }
    }
    let parts = d
        .blocks
        .iter()
        .zip(extra)
        .map(|(b, es)| {
            let cs: Vec<Vec<usize>> = b.as_slice().iter().map(|&x| cls[x].clone()).collect();
            Graph::complete_multipartite_on(n, &cs).with_edges(es)
        })
        .collect();
    Ok(Decomposition::new(
        n,
        Mode::Decomposition,
        parts,
        format!("blown-up {:?} design, factor {t}", d.source),
    ))
}

/// Cyclic plane of order `q` blown up to `K_n`, with `r` extra parts: lines
/// `ℓ_i` with `i ≥ r` also get the clique on the class of `x_i`, lines with
/// `i < r` stay bare, and the last `r` parts are the cliques on the classes
/// of `x_0..x_{r−1}`.
pub fn plane_plus_r_decomposition(q: u64, r: usize, n: usize) -> Result<Decomposition> {
    let (plane, _) = designs::cyclic_plane_difference_set(q)?;
    let v = plane.point_count;
    if r < 1 || r > v {
        return domain(format!("need 1 <= r <= {v}, got {r}"));
    }
    if n == 0 || !n.is_multiple_of(v) {
        return domain(format!("{v} does not divide n={n}"));
    }
    let t = n / v;
    let cls = classes(v, t);
    let mut parts: Vec<Graph> = plane
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let cs: Vec<Vec<usize>> = b.as_slice().iter().map(|&x| cls[x].clone()).collect();
            let h = Graph::complete_multipartite_on(n, &cs);
            if i >= r {
                h.with_edges(Graph::complete_on(n, &cls[i]).edges().iter().copied())
            } else {
                h
            }
        })
        .collect();
    parts.extend((0..r).map(|i| Graph::complete_on(n, &cls[i])));
    Ok(Decomposition::new(
        n,
        Mode::Decomposition,
        parts,
        format!("projective plane q={q} plus r={r}"),
    ))
}

/// `k = C(t+1,2)` parts: cliques on `t` equal classes and the complete
/// bipartite graphs between every two classes.
pub fn construct_triangular(t: usize, n: usize) -> Result<Decomposition> {
    if t < 2 || n == 0 || !n.is_multiple_of(t) {
        return domain(format!(
            "triangular construction needs t >= 2 and t | n, got t={t}, n={n}"
        ));
    }
    let cls = classes(t, n / t);
    let mut parts: Vec<Graph> = cls.iter().map(|c| Graph::complete_on(n, c)).collect();
    for i in 0..t {
        for j in i + 1..t {
            parts.push(Graph::complete_multipartite_on(
                n,
                &[cls[i].clone(), cls[j].clone()],
            ));
        }
    }
    Ok(Decomposition::new(
        n,
        Mode::Decomposition,
        parts,
        format!("triangular k, t={t}"),
    ))
}

/// Adds a vertex `n` joined to every vertex in the last part.
pub fn apex_extend(d: &Decomposition) -> Result<Decomposition> {
    let Some(last) = d.parts.len().checked_sub(1) else {
        return domain("apex extension needs at least one part");
    };
    let n = d.n;
    let parts = d
        .parts
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let g = g.padded(n + 1);
            if i == last {
                g.with_edges((0..n).map(|u| (u, n)))
            } else {
                g
            }
        })
        .collect();
    Ok(Decomposition::new(
        n + 1,
        d.mode,
        parts,
        format!("apex extension of {}", d.source),
    ))
}

/// Moves one edge into a new `K_2` part: a free edge when some part has one,
/// otherwise the edge of a largest part whose removal costs least.
pub fn split_edge(d: &Decomposition) -> Result<Decomposition> {
    if d.k() as u64 >= binom2(d.n as u64) {
        return domain("split needs k < C(n,2)");
    }
    let Some(big) = d.parts.iter().map(Graph::size).max().filter(|&s| s > 1) else {
        return domain("split needs a part with more than one edge");
    };
    let values: Vec<Rational> = d.parts.par_iter().map(mad_value).collect();
    let mut choice: Option<(usize, Edge)> = None;
    'find: for (i, g) in d.parts.iter().enumerate() {
        if g.size() < 2 {
            continue;
        }
        for &e in g.edges() {
            if mad_value(&g.without_edge(e)) == values[i] {
                choice = Some((i, e));
                break 'find;
            }
        }
    }
    if choice.is_none() {
        let i = d.parts.iter().position(|g| g.size() == big).unwrap();
        let g = &d.parts[i];
        let e = g
            .edges()
            .iter()
            .copied()
            .max_by(|&a, &b| {
                let (va, vb) = (mad_value(&g.without_edge(a)), mad_value(&g.without_edge(b)));
                va.cmp(&vb).then(b.cmp(&a))
            })
            .unwrap();
        choice = Some((i, e));
    }
    let (i, e) = choice.unwrap();
    let mut parts = d.parts.clone();
    parts[i] = parts[i].without_edge(e);
    parts.push(Graph::from_edges_dedup(d.n, [e]));
    Ok(Decomposition::new(
        d.n,
        d.mode,
        parts,
        format!("edge split of {}", d.source),
    ))
}

/// From `a` parts on `K_b` to `a + b` parts on `K_{tb}`: every part blown up
/// by `t`, plus the `b` class cliques.
pub fn recursive_blowup(d: &Decomposition, t: usize) -> Result<Decomposition> {
    if t < 1 {
        return domain("blow-up factor must be at least 1");
    }
    let b = d.n;
    let mut parts: Vec<Graph> = d.parts.iter().map(|g| g.blow_up(t, false)).collect();
    parts.extend(classes(b, t).iter().map(|c| Graph::complete_on(b * t, c)));
    Ok(Decomposition::new(
        b * t,
        d.mode,
        parts,
        format!("recursive blow-up by {t} of {}", d.source),
    ))
}

/// First-Fit packing from vertex sets sorted by size (stable): `H_j` takes
/// the pairs inside `X_j` not used earlier.
pub fn canonicalize_packing(n: usize, sets: &[VertexSet]) -> Result<Decomposition> {
    if let Some(v) = sets.iter().flat_map(|s| s.as_slice()).find(|&&v| v >= n) {
        return domain(format!("vertex {v} out of range for K_{n}"));
    }
    let mut sorted: Vec<Vec<usize>> = sets.iter().map(|s| s.as_slice().to_vec()).collect();
    sorted.sort_by_key(Vec::len);
    Ok(Decomposition::new(
        n,
        Mode::Packing,
        first_fit(n, &sorted),
        "first-fit packing",
    ))
}

/// Incidence graph between parts (vertices `0..k`) and points (`k..k+n`) of
/// each part's Mad witness. Witnesses must be cliques.
pub fn packing_to_c4free_bipartite(d: &Decomposition) -> Result<Graph> {
    let k = d.k();
    let mut es = Vec::new();
    let mut sets = Vec::new();
    for (i, g) in d.parts.iter().enumerate() {
        let w = mad(g).witness;
        if !g.is_clique(w.as_slice()) {
            return domain(format!("the densest set of part {i} is not a clique"));
        }
        es.extend(w.as_slice().iter().map(|&v| (i, k + v)));
        sets.push(w);
    }
    for i in 0..k {
        for j in i + 1..k {
            let common = sets[j]
                .as_slice()
                .iter()
                .filter(|&&v| sets[i].contains(v))
                .count();
            assert!(
                common <= 1,
                "parts {i} and {j} share {common} clique vertices; the cliques overlap in an edge"
            );
        }
    }
    Ok(Graph::from_edges_dedup(k + d.n, es))
}
