//! Closed forms: `g(m)`, the parameter triple of a list, `M^L(k,N)`, the
//! upper bound on `M(k,n)`, the exact values for `k = 2` and for `k` near
//! `C(n,2)`, square-root caps, and the catalogue of lower bounds.

use serde::Serialize;

use crate::decomp::{self, Variant};
use crate::designs;
use crate::error::{domain, Result};
use crate::graph::{Graph, GraphList};
use crate::rational::{ratio, Rational};
use crate::surd::Surd;

/// `C(p, 2)`.
pub fn binom2(p: u64) -> u64 {
    p * p.saturating_sub(1) / 2
}

/// `(p, r)` with `C(p,2) ≤ m < C(p+1,2)` and `r = m − C(p,2)`; `m = 0`
/// gives `(1, 0)`.
pub fn rep_params(m: u64) -> (u64, u64) {
    let mut p = ((2.0 * m as f64).sqrt() as u64).max(1);
    while binom2(p) > m {
        p -= 1;
    }
    while binom2(p + 1) <= m {
        p += 1;
    }
    (p, m - binom2(p))
}

/// Mad of `G_{p,r}`: `max(p − 1, 2(C(p,2)+r)/(p+1))`, valid for `0 ≤ r ≤ p`.
pub fn rep_mad(p: u64, r: u64) -> Rational {
    if p <= 1 && r == 0 {
        return Rational::zero();
    }
    let m = binom2(p) + r;
    Rational::from(p - 1).max(ratio(2 * m, p + 1))
}

/// Largest `Mad` of a graph with `m` edges.
pub fn g_max_mad(m: u64) -> Result<Rational> {
    if m == 0 {
        return domain("g(m) needs m >= 1");
    }
    let (p, r) = rep_params(m);
    Ok(rep_mad(p, r))
}

/// `G_{p,r}`: `K_p` plus a vertex joined to the `r` lowest clique vertices.
pub fn representative(p: u64, r: u64) -> Result<Graph> {
    if p < 2 || r > p {
        return domain(format!(
            "representative needs p >= 2 and 0 <= r <= p, got ({p},{r})"
        ));
    }
    Ok(Graph::representative(p as usize, r as usize))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    /// `r = 0`: only `K_p`.
    Complete,
    /// `0 < r < (p−1)/2`: every graph with the right size containing `K_p`.
    SupsetOfKp,
    /// `r = (p−1)/2`: containing `K_p` or of order `p + 1`.
    Both,
    /// `(p−1)/2 < r < p`: order `p + 1`.
    OrderPPlus1,
    /// `r = p`: only `K_{p+1}`.
    KPPlus1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalFamily {
    pub p: u64,
    pub r: u64,
    pub regime: Regime,
}

pub fn classify_family(p: u64, r: u64) -> Result<ExtremalFamily> {
    if p < 2 || r > p {
        return domain(format!(
            "family needs p >= 2 and 0 <= r <= p, got ({p},{r})"
        ));
    }
    let regime = if r == 0 {
        Regime::Complete
    } else if r == p {
        Regime::KPPlus1
    } else if 2 * r < p - 1 {
        Regime::SupsetOfKp
    } else if 2 * r == p - 1 {
        Regime::Both
    } else {
        Regime::OrderPPlus1
    };
    Ok(ExtremalFamily { p, r, regime })
}

/// Membership in the family of graphs with `C(p,2) + r` edges attaining
/// `g`. Orders refer to the support, since isolated vertices are irrelevant.
pub fn is_extremal_member(g: &Graph, p: u64, r: u64) -> bool {
    let Ok(family) = classify_family(p, r) else {
        return false;
    };
    if g.size() as u64 != binom2(p) + r {
        return false;
    }
    let (s, _) = g.support();
    let order = s.order() as u64;
    let has_kp = || s.clique_number() as u64 >= p;
    match family.regime {
        Regime::Complete => order == p,
        Regime::KPPlus1 => order == p + 1,
        Regime::SupsetOfKp => has_kp(),
        Regime::Both => has_kp() || order == p + 1,
        Regime::OrderPPlus1 => order == p + 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamTriple {
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

/// The unique `(p, q, r)` with `N = k·C(p,2) + q·p + r`, `0 ≤ q < k`,
/// `0 ≤ r < p`.
pub fn param_triple(k: u64, n_edges: u64) -> Result<ParamTriple> {
    if k == 0 || n_edges < k {
        return domain(format!(
            "parameter triple needs N >= k >= 1, got k={k}, N={n_edges}"
        ));
    }
    let mut p = 2;
    while k * binom2(p + 1) <= n_edges {
        p += 1;
    }
    let rest = n_edges - k * binom2(p);
    Ok(ParamTriple {
        p,
        q: rest / p,
        r: rest % p,
    })
}

/// `M^L(k,N)`, the largest Mad-sum of `k` graphs with `N` edges in total.
/// For `k = 1` this is `g(N)`.
pub fn m_list(k: u64, n_edges: u64) -> Result<Rational> {
    let ParamTriple { p, q, r } = param_triple(k, n_edges)?;
    let base = Rational::from(k * p - k + q);
    let high = || base.clone() + 1 - ratio(2 * (p - r), p + 1);
    if 2 * r < p - 1 {
        Ok(base)
    } else if 2 * r == p - 1 {
        assert_eq!(base, high(), "branches disagree at the boundary");
        Ok(base)
    } else {
        Ok(high())
    }
}

/// A list of `k` graphs with `N` edges whose Mad-sum is `M^L(k,N)`.
pub fn m_list_extremal_multiset(k: u64, n_edges: u64) -> Result<GraphList> {
    let ParamTriple { p, q, r } = param_triple(k, n_edges)?;
    let (p_, q_) = (p as usize, q as usize);
    let mut gs = vec![Graph::complete(p_ + 1); q_];
    if r == 0 {
        gs.extend(std::iter::repeat_n(Graph::complete(p_), (k - q) as usize));
    } else {
        gs.extend(std::iter::repeat_n(
            Graph::complete(p_),
            (k - q - 1) as usize,
        ));
        gs.push(Graph::representative(p_, r as usize));
    }
    Ok(GraphList::new(gs))
}

/// `M^L(k, C(n,2))`, an upper bound on `M(k,n)`.
pub fn m_upper_bound(k: u64, n: u64) -> Result<Rational> {
    if n < 3 || k < 2 || k > binom2(n) {
        return domain(format!(
            "upper bound needs n >= 3 and 2 <= k <= C(n,2), got k={k}, n={n}"
        ));
    }
    m_list(k, binom2(n))
}

/// Exact `M(2,n)`.
pub fn m_two(n: u64) -> Result<Rational> {
    if n < 3 {
        return domain("M(2,n) needs n >= 3");
    }
    let num = 5 * n * n - 6 * n + u64::from(n % 2 == 1);
    Ok(ratio(num, 4 * n))
}

/// Exact `M(C(n,2) − t, n)` for `0 ≤ t ≤ (n−1)²/3`, with the extremal
/// multiset of triangles, single edges and at most one `P_3`.
pub fn m_upper_range(n: u64, t: u64) -> Result<(Rational, GraphList)> {
    if n < 3 || 3 * t > (n - 1) * (n - 1) {
        return domain(format!(
            "upper range needs n >= 3 and 0 <= t <= (n-1)^2/3, got n={n}, t={t}"
        ));
    }
    let big_n = binom2(n);
    let mut gs = Vec::new();
    let value;
    if t.is_multiple_of(2) {
        value = Rational::from(big_n) - ratio(t, 2);
        gs.extend(std::iter::repeat_n(Graph::complete(3), (t / 2) as usize));
        gs.extend(std::iter::repeat_n(
            Graph::complete(2),
            (big_n - 3 * t / 2) as usize,
        ));
    } else {
        value = Rational::from(big_n) - ratio(t + 1, 2) + ratio(1, 3);
        let tri = (t - 1) / 2;
        gs.extend(std::iter::repeat_n(Graph::complete(3), tri as usize));
        gs.extend(std::iter::repeat_n(
            Graph::complete(2),
            (big_n - 2 - 3 * tri) as usize,
        ));
        gs.push(Graph::path(3));
    }
    Ok((value, GraphList::new(gs)))
}

#[derive(Clone, Debug, Serialize)]
pub struct SqrtBounds {
    /// `(√(k² + 4kn² − 4kn) − k)/2`, present when `n` is known.
    pub lemma: Option<Surd>,
    /// `√(2kN)`.
    pub sqrt_2kn: Surd,
    /// `√k·n`, present when `n` is known.
    pub sqrt_k_times_n: Option<Surd>,
}

/// Square-root caps for `k` parts of `K_n`.
pub fn sqrt_upper_bounds(k: u64, n: u64) -> SqrtBounds {
    let kr = Rational::from(k);
    let nr = Rational::from(n);
    let inner = &kr * &kr + Rational::from(4 * k * n * n) - Rational::from(4 * k * n);
    SqrtBounds {
        lemma: Some(Surd::new(-(kr.clone() / 2), ratio(1, 2), inner)),
        sqrt_2kn: Surd::sqrt_times(Rational::one(), Rational::from(2 * k * binom2(n))),
        sqrt_k_times_n: Some(Surd::sqrt_times(nr, kr)),
    }
}

/// Square-root cap for `k` graphs with `N` edges in total.
pub fn sqrt_upper_bounds_list(k: u64, n_edges: u64) -> SqrtBounds {
    SqrtBounds {
        lemma: None,
        sqrt_2kn: Surd::sqrt_times(Rational::one(), Rational::from(2 * k * n_edges)),
        sqrt_k_times_n: None,
    }
}

/// `y − 1` where `y(y−1)/2 = m`, an upper bound on `g(m)`.
pub fn gm_relaxation_bound(m: u64) -> Result<Surd> {
    if m == 0 {
        return domain("relaxation bound needs m >= 1");
    }
    Ok(Surd::new(
        -ratio(1, 2),
        ratio(1, 2),
        Rational::from(8 * m + 1),
    ))
}

/// The five plane-based exact values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PlaneCase {
    /// `n = k = q²+q+1`: projective plane.
    Projective,
    /// `n = q²`, `k = q²+q`: affine plane.
    Affine,
    /// `n = q²+q`, `k = q²+q+1`: projective plane minus a point.
    ProjectiveMinusPoint,
    /// `n = q²−1`, `k = q²+q`: affine plane minus a point.
    AffineMinusPoint,
    /// `n = q²−q`, `k = q²+q−1`: affine plane minus a line.
    AffineMinusLine,
}

impl PlaneCase {
    pub const ALL: [PlaneCase; 5] = [
        PlaneCase::Projective,
        PlaneCase::Affine,
        PlaneCase::ProjectiveMinusPoint,
        PlaneCase::AffineMinusPoint,
        PlaneCase::AffineMinusLine,
    ];

    /// `(k, n, M(k,n))` for plane order `q`.
    pub fn instance(self, q: u64) -> (u64, u64, Rational) {
        let (k, n, v) = match self {
            PlaneCase::Projective => (q * q + q + 1, q * q + q + 1, (q * q + q + 1) * q),
            PlaneCase::Affine => (q * q + q, q * q, (q + 1) * q * (q - 1)),
            PlaneCase::ProjectiveMinusPoint => (q * q + q + 1, q * q + q, q * q * q + q * q - 1),
            PlaneCase::AffineMinusPoint => (q * q + q, q * q - 1, q * q * q - 2 * q - 1),
            PlaneCase::AffineMinusLine => (q * q + q - 1, q * q - q, q * q * q - q * q - 2 * q + 1),
        };
        (k, n, Rational::from(v))
    }
}

/// Mad-sum of a `{p, p+1}`-design decomposition: `(p−1)·k + b''` where
/// `b''` counts the blocks of size `p + 1`.
pub fn pbd_mad_sum(block_sizes: &[usize]) -> Result<Rational> {
    let Some(&p) = block_sizes.iter().min() else {
        return domain("no blocks");
    };
    if p < 2 || block_sizes.iter().any(|&s| s > p + 1) {
        return domain("block sizes must lie in {p, p+1} with p >= 2");
    }
    let big = block_sizes.iter().filter(|&&s| s == p + 1).count();
    Ok(Rational::from(((p - 1) * block_sizes.len() + big) as u64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProportionalPlan {
    pub p: u64,
    /// Fraction of parts that are `K_p`; the rest are `K_{p+1}`.
    pub x: Rational,
    pub counts: Option<PlanCounts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PlanCounts {
    Feasible { n: u64, k: u64, kp: u64, kp1: u64 },
    Infeasible { n: u64, reason: String },
}

/// Mixing ratio of `K_p` and `K_{p+1}` parts with average `r` edges per
/// part, and the resulting counts for `K_n` when `n` is given.
pub fn proportional_plan(r: &Rational, n: Option<u64>) -> Result<ProportionalPlan> {
    if *r < Rational::from_int(3) {
        return domain("proportional plan needs r >= 3");
    }
    let mut p: u64 = 3;
    while Rational::from(binom2(p + 1)) <= *r {
        p += 1;
    }
    let x = ratio(p + 1, 2) - r.clone() / Rational::from(p);
    let counts = n.map(|n| {
        let k = Rational::from(binom2(n)) / r.clone();
        let kp = &x * &k;
        if !k.is_integer() || !kp.is_integer() {
            return PlanCounts::Infeasible {
                n,
                reason: format!("k = C(n,2)/r = {k} and x*k = {kp} must be integers"),
            };
        }
        let k = k.floor_i64() as u64;
        let kp = kp.floor_i64() as u64;
        PlanCounts::Feasible {
            n,
            k,
            kp,
            kp1: k - kp,
        }
    });
    Ok(ProportionalPlan { p, x, counts })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: Rational,
    pub source: String,
}

/// Every catalogue bound applicable to `(k, n)`.
pub fn lower_bound_catalog(k: u64, n: u64) -> Vec<LowerBound> {
    lower_bound_catalog_depth(k, n, 3)
}

/// The largest catalogue bound for `(k, n)`, or `None` when no entry applies.
pub fn lower_bound_table(k: u64, n: u64) -> Option<LowerBound> {
    best(lower_bound_catalog(k, n))
}

fn best(v: Vec<LowerBound>) -> Option<LowerBound> {
    v.into_iter().fold(None, |acc, b| match acc {
        Some(a) if a.value >= b.value => Some(a),
        _ => Some(b),
    })
}

fn lower_bound_catalog_depth(k: u64, n: u64, depth: u32) -> Vec<LowerBound> {
    let mut out = Vec::new();
    if n < 2 || k == 0 || k > binom2(n) {
        return out;
    }
    let mut push = |value: Rational, source: String| out.push(LowerBound { value, source });
    if k == 1 {
        push(Rational::from(n - 1), "single part K_n".into());
    }
    if k == 2 && n >= 3 {
        push(m_two(n).unwrap(), "M(2,n) closed form".into());
    }
    if (3..=6).contains(&k) {
        for v in [Variant::A, Variant::B] {
            if let Ok(d) = decomp::construct_small_k(k as usize, n as usize, v) {
                if let Ok(rep) = decomp::validate(&d) {
                    push(
                        rep.total,
                        format!("small-k construction, k={k}, variant {v:?}"),
                    );
                }
            }
        }
    }
    if k == 7 && n == 8 {
        push(
            Rational::from_int(16),
            "K_8 into 7 parts from the Fano plane".into(),
        );
    }
    if n >= 3 && k <= binom2(n) && 3 * (binom2(n) - k) <= (n - 1) * (n - 1) {
        let t = binom2(n) - k;
        push(
            m_upper_range(n, t).unwrap().0,
            format!("partial triple system range, t={t}"),
        );
    }
    for q in designs::PLANE_ORDERS {
        for case in PlaneCase::ALL {
            let (kk, nn, v) = case.instance(q);
            if kk == k && nn == n && nn >= 2 {
                push(v, format!("plane formula {case:?}, q={q}"));
            }
        }
    }
    // Blown-up Steiner systems S(2,r,v) with v | n.
    for (v, r, name) in steiner_systems_with_blocks(k) {
        if n.is_multiple_of(v) {
            let val = ratio(v, r) * Rational::from(n - 1);
            let tag = if n == v {
                format!("{name} decomposition")
            } else {
                format!("blown-up {name}, factor {}", n / v)
            };
            push(val, tag);
        }
    }
    // Plane plus r extra parts.
    for q in designs::CYCLIC_ORDERS {
        let v = q * q + q + 1;
        if k > v && k - v <= v && n.is_multiple_of(v) {
            let r = k - v;
            let nr = Rational::from(n);
            let val = (Rational::from(q) + ratio(1, q + 1)) * nr.clone()
                + ratio(r * q, (q + 1) * v) * nr
                - Rational::from(q + r);
            push(val, format!("projective plane plus r, q={q}, r={r}"));
        }
    }
    // Triangular k = C(t+1, 2) with t | n.
    let mut t = 2;
    while binom2(t + 1) <= k {
        if binom2(t + 1) == k && n.is_multiple_of(t) && n / t >= 1 {
            push(
                ratio((t + 1) * n, 2) - Rational::from(t),
                format!("triangular k, t={t}"),
            );
        }
        t += 1;
    }
    // Recursive blow-up: M(a+b, tb) >= t(M(a,b) + b) - b.
    if depth > 0 {
        for b in 3..n {
            if !n.is_multiple_of(b) || k <= b {
                continue;
            }
            let (t, a) = (n / b, k - b);
            if t < 2 || a > binom2(b) {
                continue;
            }
            if let Some(inner) = best(lower_bound_catalog_depth(a, b, depth - 1)) {
                let val = Rational::from(t) * (inner.value + Rational::from(b)) - Rational::from(b);
                push(val, format!("recursive blow-up of M({a},{b}) by {t}"));
            }
        }
    }
    out
}

/// Steiner systems we can build whose block count is `k`: `(v, r, name)`.
fn steiner_systems_with_blocks(k: u64) -> Vec<(u64, u64, String)> {
    let mut out = Vec::new();
    for q in designs::PLANE_ORDERS {
        if q * q + q + 1 == k {
            out.push((k, q + 1, format!("PG(2,{q})")));
        }
        if q * q + q == k {
            out.push((q * q, q, format!("AG(2,{q})")));
        }
    }
    // STS(v): k = v(v-1)/6.
    let mut v = 7;
    while v * (v - 1) / 6 <= k {
        let known = out.iter().any(|&(w, r, _)| (w, r) == (v, 3));
        if v * (v - 1) / 6 == k && (v % 6 == 1 || v % 6 == 3) && !known {
            out.push((v, 3, format!("STS({v})")));
        }
        v += 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::mad::mad;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn g_values() {
        assert_eq!(g_max_mad(3).unwrap(), r(2, 1));
        assert_eq!(g_max_mad(5).unwrap(), r(5, 2));
        assert_eq!(g_max_mad(4).unwrap(), r(2, 1));
        assert_eq!(g_max_mad(1).unwrap(), r(1, 1));
        assert!(g_max_mad(0).is_err());
    }

    #[test]
    fn representatives() {
        let paw = representative(3, 1).unwrap();
        assert_eq!(paw.size(), 4);
        assert_eq!(mad(&paw).value, r(2, 1));
        assert!(is_isomorphic(
            &representative(3, 3).unwrap(),
            &Graph::complete(4)
        ));
        assert_eq!(representative(2, 0).unwrap(), Graph::complete(2));
        assert!(representative(3, 4).is_err());
        assert!(representative(1, 0).is_err());
    }

    #[test]
    fn family_membership() {
        let k5_pendant = Graph::complete(5).padded(6).with_edges([(0, 5)]);
        assert!(is_extremal_member(&k5_pendant, 5, 1));
        // K_{2,2,2} plus... a 6-vertex, 11-edge graph without K_5: K_6 minus a
        // 4-cycle has 11 edges and clique number 4.
        let no_k5 = Graph::complete(6)
            .without_edge((0, 1))
            .without_edge((1, 2))
            .without_edge((2, 3))
            .without_edge((0, 3));
        assert_eq!(no_k5.size(), 11);
        assert!(!is_extremal_member(&no_k5, 5, 1));
        let k3_k2 = Graph::complete(3).disjoint_union(&Graph::complete(2));
        assert!(is_extremal_member(&k3_k2, 3, 1));
        assert!(is_extremal_member(&representative(3, 1).unwrap(), 3, 1));
        assert!(is_extremal_member(&Graph::complete(3), 2, 2));
        assert!(!is_extremal_member(&Graph::path(4), 2, 2));
        assert_eq!(classify_family(3, 1).unwrap().regime, Regime::Both);
        assert_eq!(classify_family(5, 1).unwrap().regime, Regime::SupsetOfKp);
        assert_eq!(classify_family(5, 3).unwrap().regime, Regime::OrderPPlus1);
    }

    #[test]
    fn triples() {
        let t = |k, n| {
            let x = param_triple(k, n).unwrap();
            (x.p, x.q, x.r)
        };
        assert_eq!(t(2, 12), (4, 0, 0));
        assert_eq!(t(3, 10), (3, 0, 1));
        assert_eq!(t(7, 28), (3, 2, 1));
        assert_eq!(t(1, 5), (3, 0, 2));
        assert!(param_triple(3, 2).is_err());
    }

    #[test]
    fn list_values() {
        assert_eq!(m_list(2, 12).unwrap(), r(6, 1));
        assert_eq!(m_list(7, 28).unwrap(), r(16, 1));
        assert_eq!(m_list(3, 10).unwrap(), r(6, 1));
        assert_eq!(m_list(2, 9).unwrap(), r(5, 1));
        for m in 1..60 {
            assert_eq!(m_list(1, m).unwrap(), g_max_mad(m).unwrap());
        }
    }

    #[test]
    fn extremal_multisets() {
        for (k, n) in [(2, 9), (7, 28), (3, 9), (4, 23), (5, 47)] {
            let l = m_list_extremal_multiset(k, n).unwrap();
            assert_eq!(l.len() as u64, k);
            assert_eq!(l.total_edges() as u64, n);
            let s: Rational = l.graphs.iter().map(|g| mad(g).value).sum();
            assert_eq!(s, m_list(k, n).unwrap());
        }
        let l = m_list_extremal_multiset(2, 9).unwrap();
        assert_eq!(l.graphs, vec![Graph::complete(4), Graph::complete(3)]);
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(m_upper_bound(7, 8).unwrap(), r(16, 1));
        assert_eq!(m_upper_bound(13, 13).unwrap(), r(39, 1));
        assert_eq!(m_upper_bound(3, 6).unwrap(), r(8, 1));
        assert_eq!(m_upper_bound(13, 12).unwrap(), r(35, 1));
        assert!(m_upper_bound(1, 5).is_err());
        assert!(m_upper_bound(11, 5).is_err());
    }

    #[test]
    fn k_two() {
        assert_eq!(m_two(5).unwrap(), r(24, 5));
        assert_eq!(m_two(4).unwrap(), r(7, 2));
        assert_eq!(m_two(3).unwrap(), r(7, 3));
        for n in 3..60u64 {
            // n - 2 + floor((n+1)^2/4)/n
            let alt = Rational::from(n) - 2 + ratio((n + 1) * (n + 1) / 4, n);
            assert_eq!(m_two(n).unwrap(), alt);
            assert!(m_two(n).unwrap() <= m_upper_bound(2, n).unwrap());
        }
    }

    #[test]
    fn upper_range() {
        let (v, l) = m_upper_range(9, 12).unwrap();
        assert_eq!(v, r(30, 1));
        assert_eq!(l.len(), 24);
        let (v, l) = m_upper_range(7, 5).unwrap();
        assert_eq!(v, r(55, 3));
        assert_eq!(l.total_edges(), 21);
        assert_eq!(l.len(), 16);
        let (v, _) = m_upper_range(6, 0).unwrap();
        assert_eq!(v, r(15, 1));
        assert!(m_upper_range(7, 13).is_err());
        // Agrees with the general upper bound across the range.
        for n in 3..15u64 {
            let mut t = 0;
            while 3 * t <= (n - 1) * (n - 1) {
                let (v, l) = m_upper_range(n, t).unwrap();
                assert_eq!(v, m_upper_bound(binom2(n) - t, n).unwrap());
                assert_eq!(l.total_edges() as u64, binom2(n));
                assert_eq!(l.len() as u64, binom2(n) - t);
                t += 1;
            }
        }
    }

    #[test]
    fn sqrt_caps() {
        let b = sqrt_upper_bounds(4, 10);
        let cap = b.sqrt_k_times_n.unwrap();
        assert_eq!(cap.cmp_rational(&r(20, 1)), std::cmp::Ordering::Equal);
        assert!(cap.gt(&m_upper_bound(4, 10).unwrap()));
        assert_eq!(m_upper_bound(4, 10).unwrap(), r(17, 1));
        let b = sqrt_upper_bounds(13, 13);
        assert!(b.sqrt_k_times_n.unwrap().gt(&r(39, 1)));
        assert_eq!(
            b.lemma.unwrap().cmp_rational(&r(39, 1)),
            std::cmp::Ordering::Equal
        );
        let b1 = sqrt_upper_bounds(1, 9);
        assert!(b1.sqrt_k_times_n.unwrap().gt(&r(8, 1)));
    }

    #[test]
    fn relaxation() {
        assert_eq!(
            gm_relaxation_bound(3).unwrap().cmp_rational(&r(2, 1)),
            std::cmp::Ordering::Equal
        );
        assert_eq!(
            gm_relaxation_bound(1).unwrap().cmp_rational(&r(1, 1)),
            std::cmp::Ordering::Equal
        );
        let b = gm_relaxation_bound(5).unwrap();
        assert!(b.gt(&r(5, 2)));
        assert!((b.approx() - 2.7015621187).abs() < 1e-9);
    }

    #[test]
    fn plane_instances() {
        assert_eq!(PlaneCase::Projective.instance(3), (13, 13, r(39, 1)));
        assert_eq!(PlaneCase::Affine.instance(3), (12, 9, r(24, 1)));
        assert_eq!(
            PlaneCase::ProjectiveMinusPoint.instance(3),
            (13, 12, r(35, 1))
        );
        assert_eq!(PlaneCase::AffineMinusPoint.instance(3), (12, 8, r(20, 1)));
        assert_eq!(PlaneCase::AffineMinusLine.instance(3), (11, 6, r(13, 1)));
        assert_eq!(PlaneCase::Projective.instance(2).2, r(14, 1));
        assert_eq!(PlaneCase::Projective.instance(5).2, r(155, 1));
        // Projective-minus-point is a {q, q+1} design: (q-1)k + q^2.
        let sizes: Vec<usize> = [3; 4].into_iter().chain([4; 9]).collect();
        assert_eq!(pbd_mad_sum(&sizes).unwrap(), r(35, 1));
    }

    #[test]
    fn proportional() {
        let p = proportional_plan(&r(3, 1), None).unwrap();
        assert_eq!((p.p, p.x), (3, r(1, 1)));
        let p = proportional_plan(&r(5, 1), None).unwrap();
        assert_eq!((p.p, p.x), (3, r(1, 3)));
        let p = proportional_plan(&r(6, 1), None).unwrap();
        assert_eq!((p.p, p.x), (4, r(1, 1)));
        let p = proportional_plan(&r(3, 1), Some(7)).unwrap();
        assert_eq!(
            p.counts,
            Some(PlanCounts::Feasible {
                n: 7,
                k: 7,
                kp: 7,
                kp1: 0
            })
        );
        let p = proportional_plan(&r(5, 1), Some(8)).unwrap();
        assert!(matches!(p.counts, Some(PlanCounts::Infeasible { .. })));
        assert!(proportional_plan(&r(5, 2), None).is_err());
    }

    #[test]
    fn lower_bounds() {
        let lb = lower_bound_table(7, 14).unwrap();
        assert_eq!(lb.value, r(91, 3));
        let lb = lower_bound_table(13, 13).unwrap();
        assert_eq!(lb.value, r(39, 1));
        let cat = lower_bound_catalog(3, 6);
        assert!(cat
            .iter()
            .any(|b| b.value == r(7, 1) && b.source.starts_with("triangular")));
        // The small-k variant A construction beats the triangular bound here.
        assert_eq!(lower_bound_table(3, 6).unwrap().value, r(15, 2));
        assert!(lower_bound_table(40, 9).is_none());
    }
}
