//! The end-to-end acceptance checks, shared by the `acceptance` test target
//! and `madgad selftest`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::{self, Decomposition, Mode};
use crate::designs::{self, TruncateMode};
use crate::formulas::{self, binom2, PlaneCase};
use crate::graph::{is_isomorphic, Graph, GraphList};
use crate::mad::mad;
use crate::normalize;
use crate::oracle::{self, OracleBudget};
use crate::rational::Rational;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Decompositions produced by the other checks, for the global caps.
#[derive(Default)]
struct Produced(Vec<Decomposition>);

impl Produced {
    fn keep(&mut self, d: &Decomposition) -> Rational {
        self.0.push(d.clone());
        decomp::validate(d).expect("constructions validate").total
    }
}

const TITLES: [&str; 12] = [
    "flow Mad equals subset enumeration",
    "g(m) closed form and maximality",
    "M^L closed form equals DP, free-edge plateau",
    "normalization trajectories",
    "M(2,n) construction and search",
    "plane decompositions",
    "upper range and leave graphs",
    "K_8 into 7 parts",
    "blow-up constructions",
    "global caps on every decomposition",
    "clique, colouring and degeneracy sums",
    "apex and split deltas",
];

const LIMITS_S: [u64; 12] = [60, 120, 10, 300, 600, 30, 60, 10, 60, 60, 120, 60];

/// Runs all twelve checks in order.
pub fn run_all() -> Vec<CriterionResult> {
    let mut produced = Produced::default();
    let mut out = Vec::new();
    for id in 1..=12u8 {
        if id == 10 {
            continue;
        }
        out.push(timed(id, || match id {
            1 => mad_equivalence(),
            2 => g_formula(),
            3 => list_formula(),
            4 => normalization(),
            5 => two_parts(&mut produced),
            6 => planes(&mut produced),
            7 => upper_range(&mut produced),
            8 => k8(&mut produced),
            9 => blowups(&mut produced),
            11 => pp_sums(&mut produced),
            _ => transforms(&mut produced),
        }));
    }
    out.insert(9, timed(10, || global_caps(&produced)));
    out
}

fn timed(id: u8, f: impl FnOnce() -> Check) -> CriterionResult {
    let t = Instant::now();
    let r = f();
    let elapsed = t.elapsed();
    let limit = Duration::from_secs(LIMITS_S[id as usize - 1]);
    let (mut passed, mut detail) = match r {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    if elapsed > limit {
        passed = false;
        detail = format!("{detail}; took {elapsed:?}, limit {limit:?}");
    }
    CriterionResult {
        id,
        title: TITLES[id as usize - 1],
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
    }
}

fn mad_equivalence() -> Check {
    let mut corpus = oracle::connected_graphs_up_to(6);
    let small = corpus.len();
    corpus.extend(oracle::random_graphs(500, 7, 8, 1));
    let budget = OracleBudget::for_mad();
    let bad: Vec<String> = corpus
        .par_iter()
        .filter_map(|g| {
            let a = mad(g);
            let b = oracle::mad_bruteforce(g, &budget).ok()?;
            (a != b).then(|| format!("{g:?}: flow {:?} vs enumeration {:?}", a, b))
        })
        .collect();
    ensure(bad.is_empty(), || {
        format!("{} mismatches, first: {}", bad.len(), bad[0])
    })?;
    Ok(format!(
        "{small} connected graphs on <= 6 vertices and 500 random graphs agree (value and witness)"
    ))
}

fn g_formula() -> Check {
    for m in 1..=500u64 {
        let (p, r) = formulas::rep_params(m);
        let g = formulas::g_max_mad(m).map_err(err)?;
        let rep = formulas::representative(p, r).map_err(err)?;
        ensure(mad(&rep).value == g, || {
            format!("m={m}: g={g} but Mad(G_{{{p},{r}}}) differs")
        })?;
        ensure(oracle::g_oracle(m) == g, || {
            format!("m={m}: independent maximum differs")
        })?;
    }
    let levels = oracle::connected_graphs_by_edges(9);
    let mut count = 0;
    for (i, level) in levels.iter().enumerate() {
        let m = i as u64 + 1;
        let g = formulas::g_max_mad(m).map_err(err)?;
        let worst = level.par_iter().map(|h| mad(h).value).max().unwrap();
        ensure(worst <= g, || {
            format!("a graph with {m} edges has Mad {worst} > g = {g}")
        })?;
        count += level.len();
    }
    Ok(format!(
        "m <= 500 representatives agree; {count} connected graphs with <= 9 edges stay below g(m)"
    ))
}

fn list_formula() -> Check {
    let budget = OracleBudget::for_mlist();
    let mut cells = 0;
    let mut plateau = 0;
    for k in 2..=8u64 {
        for n in k..=60u64 {
            let f = formulas::m_list(k, n).map_err(err)?;
            let dp = oracle::m_list_dp(k as usize, n as usize, &budget).map_err(err)?;
            ensure(f == dp, || format!("M^L({k},{n}): formula {f}, DP {dp}"))?;
            cells += 1;
            let t = formulas::param_triple(k, n).map_err(err)?;
            if t.r > 0 && 2 * t.r < t.p {
                for j in 1..=t.r {
                    let lower = formulas::m_list(k, n - j).map_err(err)?;
                    ensure(lower == f, || format!("plateau fails at ({k},{n}) - {j}"))?;
                }
                plateau += 1;
            }
        }
    }
    Ok(format!(
        "{cells} cells agree with the DP; plateau holds on {plateau} cells"
    ))
}

fn random_list(rng: &mut ChaCha8Rng) -> (u64, u64, Vec<u64>) {
    let k = rng.gen_range(2..=8u64);
    let n = rng.gen_range(k..=60);
    // Cut points with repetition: some members may be empty.
    let mut cuts: Vec<u64> = (0..k - 1).map(|_| rng.gen_range(0..=n)).collect();
    cuts.sort_unstable();
    let mut sizes = Vec::new();
    let mut prev = 0;
    for c in cuts.into_iter().chain([n]) {
        sizes.push(c - prev);
        prev = c;
    }
    (k, n, sizes)
}

fn random_decomposition(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Decomposition {
    let mut parts = vec![Vec::new(); k];
    for u in 0..n {
        for v in u + 1..n {
            parts[rng.gen_range(0..k)].push((u, v));
        }
    }
    Decomposition::new(
        n,
        Mode::Decomposition,
        parts
            .into_iter()
            .map(|es| Graph::new(n, es).unwrap())
            .collect(),
        "random decomposition",
    )
}

fn normalization() -> Check {
    let results: Vec<std::result::Result<usize, String>> = (0..10_000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + i);
            let (k, n_edges, st) = if i % 10 == 0 {
                let n = rng.gen_range(3..=11usize);
                let k = rng.gen_range(2..=8usize.min(binom2(n as u64) as usize));
                let d = random_decomposition(&mut rng, n, k);
                let l = GraphList::new(d.parts);
                let e = binom2(n as u64);
                let reps = normalize::to_representative_list(&l);
                ensure(reps.mad_sum() >= normalize::list_mad_sum(&l), || {
                    format!("representatives lowered the Mad-sum for input {i}")
                })?;
                (
                    k as u64,
                    e,
                    normalize::normalize(&l, k as u64, e).map_err(err)?,
                )
            } else {
                let (k, n, sizes) = random_list(&mut rng);
                let items: Vec<(u64, u64)> =
                    sizes.iter().map(|&m| formulas::rep_params(m)).collect();
                (k, n, normalize::normalize_descriptors(&items).map_err(err)?)
            };
            st.check_trajectory()
                .map_err(|e| format!("input {i}: {e}"))?;
            ensure(st.spare == 0, || format!("input {i}: spare edges left"))?;
            let want = normalize::expected_terminal(k, n_edges).map_err(err)?;
            ensure(st.multiset() == want, || {
                format!(
                    "input {i}: terminal {:?}, expected {:?}",
                    st.multiset(),
                    want
                )
            })?;
            let ml = formulas::m_list(k, n_edges).map_err(err)?;
            ensure(st.mad_sum() == ml, || {
                format!("input {i}: terminal sum {} != {ml}", st.mad_sum())
            })?;
            Ok(st.log.len())
        })
        .collect();
    let mut steps = 0;
    for r in results {
        steps += r?;
    }
    Ok(format!("10000 inputs reach the representative list; {steps} logged steps all conserve and never decrease"))
}

fn two_parts(produced: &mut Produced) -> Check {
    for n in 3..=40usize {
        let d = decomp::construct_k2(n).map_err(err)?;
        let total = produced.keep(&d);
        let want = formulas::m_two(n as u64).map_err(err)?;
        ensure(total == want, || {
            format!("n={n}: construction {total}, closed form {want}")
        })?;
    }
    let budget = OracleBudget::for_search();
    for n in 3..=7usize {
        let s = oracle::m_kn_search(2, n, &budget).map_err(err)?;
        let want = formulas::m_two(n as u64).map_err(err)?;
        ensure(s.value == want, || {
            format!("n={n}: search {}, closed form {want}", s.value)
        })?;
    }
    Ok("construction matches for 3 <= n <= 40, search matches for 3 <= n <= 7".into())
}

fn planes(produced: &mut Produced) -> Check {
    let mut lines = Vec::new();
    let mut check = |q: u64,
                     case: PlaneCase,
                     design: designs::BlockDesign,
                     want: i64|
     -> std::result::Result<(), String> {
        let (k, n, formula) = case.instance(q);
        let d = decomp::construct_from_design(&design, n as usize).map_err(err)?;
        ensure(d.k() as u64 == k, || {
            format!("{case:?} q={q}: {} parts, expected {k}", d.k())
        })?;
        ensure(
            d.mode == Mode::Decomposition || design.point_count as u64 == n,
            || "not spanning".into(),
        )?;
        let total = produced.keep(&d);
        ensure(
            total == formula && total == Rational::from_int(want),
            || format!("{case:?} q={q}: total {total}, formula {formula}, expected {want}"),
        )?;
        lines.push(format!("{case:?}(q={q})={total} on K_{n}"));
        Ok(())
    };
    let pg = |q| designs::projective_plane(q).map_err(err);
    let ag = |q| designs::affine_plane(q).map_err(err);
    check(2, PlaneCase::Projective, pg(2)?, 14)?;
    check(3, PlaneCase::Projective, pg(3)?, 39)?;
    check(3, PlaneCase::Affine, ag(3)?, 24)?;
    let t = designs::truncate_plane(&pg(3)?, TruncateMode::DeletePoint).map_err(err)?;
    check(3, PlaneCase::ProjectiveMinusPoint, t, 35)?;
    let t = designs::truncate_plane(&ag(3)?, TruncateMode::DeletePoint).map_err(err)?;
    check(3, PlaneCase::AffineMinusPoint, t, 20)?;
    let t = designs::truncate_plane(&ag(3)?, TruncateMode::DeleteLine).map_err(err)?;
    check(3, PlaneCase::AffineMinusLine, t, 13)?;
    check(5, PlaneCase::Projective, pg(5)?, 155)?;
    let ub = formulas::m_upper_bound(13, 12).map_err(err)?;
    ensure(ub == Rational::from_int(35), || {
        format!("upper bound for (13,12) is {ub}, not 35")
    })?;
    Ok(format!("{}; upper bound (13,12) = 35", lines.join(", ")))
}

/// Leave graph from the classification, built independently of the
/// design module.
fn leave_table(n: usize) -> Graph {
    let matching = |from: usize| {
        (from / 2..n / 2)
            .map(|i| (2 * i, 2 * i + 1))
            .collect::<Vec<_>>()
    };
    match n % 6 {
        1 | 3 => Graph::empty(n),
        0 | 2 => Graph::new(n, matching(0)).unwrap(),
        4 => {
            let mut es = vec![(0, 1), (0, 2), (0, 3)];
            es.extend(matching(4));
            Graph::new(n, es).unwrap()
        }
        _ => Graph::cycle(4).padded(n),
    }
}

fn upper_range(produced: &mut Produced) -> Check {
    let mut done = Vec::new();
    for n in [7usize, 9, 13] {
        let tmax = (n - 1) * (n - 1) / 3;
        let mut ts = vec![0, 1, 2, tmax];
        ts.dedup();
        for t in ts {
            let d = decomp::construct_psts_decomposition(n, t).map_err(err)?;
            let total = produced.keep(&d);
            let (want, _) = formulas::m_upper_range(n as u64, t as u64).map_err(err)?;
            ensure(total == want, || {
                format!("n={n}, t={t}: total {total}, formula {want}")
            })?;
            done.push(format!("({n},{t})"));
        }
    }
    for n in 6..=20 {
        let (_, leave) = designs::max_partial_triple_system(n).map_err(err)?;
        ensure(is_isomorphic(&leave, &leave_table(n)), || {
            format!("leave for n={n} has the wrong shape")
        })?;
    }
    Ok(format!(
        "totals match for {}; leaves match for 6 <= n <= 20",
        done.join(" ")
    ))
}

fn k8(produced: &mut Produced) -> Check {
    let total = produced.keep(&decomp::construct_k7_k8());
    let ml = formulas::m_list(7, 28).map_err(err)?;
    ensure(total == Rational::from_int(16) && total == ml, || {
        format!("total {total}, M^L(7,28) = {ml}")
    })?;
    Ok("total 16 = M^L(7,28)".into())
}

fn blowups(produced: &mut Produced) -> Check {
    let fano = designs::steiner_triple_system(7).map_err(err)?;
    let b = decomp::blow_up_design_decomposition(&fano, 14).map_err(err)?;
    let tb = produced.keep(&b);
    ensure(tb >= Rational::new(91, 3), || {
        format!("Fano blow-up on K_14 gives {tb} < 91/3")
    })?;
    let tri = decomp::construct_triangular(2, 6).map_err(err)?;
    let tt = produced.keep(&tri);
    ensure(tt == Rational::from_int(7), || {
        format!("triangular k=3 on K_6 gives {tt}")
    })?;
    let k2 = Decomposition::new(2, Mode::Decomposition, vec![Graph::complete(2)], "K_2");
    let fano_d = decomp::construct_from_design(&fano, 7).map_err(err)?;
    let mut lines = Vec::new();
    for (d, t) in [(&k2, 3usize), (&fano_d, 2), (&fano_d, 1)] {
        let m = produced.keep(d);
        let r = decomp::recursive_blowup(d, t).map_err(err)?;
        let got = produced.keep(&r);
        let b = Rational::from(d.n);
        let bound = Rational::from(t) * (&m + &b) - &b;
        ensure(got >= bound, || {
            format!("recursive blow-up of {} by {t}: {got} < {bound}", d.source)
        })?;
        lines.push(format!("{got} >= {bound}"));
    }
    Ok(format!(
        "Fano on K_14: {tb} >= 91/3; triangular: 7; recursive: {}",
        lines.join(", ")
    ))
}

fn global_caps(produced: &Produced) -> Check {
    let bad: Vec<String> = produced
        .0
        .par_iter()
        .filter_map(|d| {
            let rep = decomp::validate(d).ok()?;
            let list_ok = match d.mode {
                Mode::Decomposition => {
                    let ub = formulas::m_list(d.k() as u64, binom2(d.n as u64)).ok()?;
                    rep.total <= ub
                }
                Mode::Packing => rep.within_list_bound != Some(false),
            };
            (!list_ok || !rep.below_sqrt_cap)
                .then(|| format!("{} (n={}, k={}): total {}", d.source, d.n, d.k(), rep.total))
        })
        .collect();
    ensure(bad.is_empty(), || {
        format!("{} violations, first: {}", bad.len(), bad[0])
    })?;
    Ok(format!(
        "{} decompositions satisfy total <= M^L(k, C(n,2)) and total < sqrt(k)*n",
        produced.0.len()
    ))
}

fn pp_sums(produced: &mut Produced) -> Check {
    let mut lines = Vec::new();
    for (name, design, n) in [
        ("Fano", designs::steiner_triple_system(7).map_err(err)?, 7),
        ("STS(9)", designs::steiner_triple_system(9).map_err(err)?, 9),
        ("PG(2,3)", designs::projective_plane(3).map_err(err)?, 13),
    ] {
        let d = decomp::construct_from_design(&design, n).map_err(err)?;
        produced.keep(&d);
        let c = oracle::check_pp_theorem(&d).map_err(err)?;
        ensure(c.holds, || format!("{name}: {c:?}"))?;
        lines.push(format!(
            "{name}: sum omega {} = {} + {}",
            c.sum_omega, c.floor_total, c.k
        ));
    }
    let gs = oracle::random_graphs(1000, 1, 10, 11);
    let bad = gs.par_iter().find_any(|g| {
        let (omega, chi, _, col) = oracle::coloring_invariants(g);
        let m = mad(g).value + Rational::one();
        !(m >= Rational::from(col) && col >= chi && chi >= omega)
    });
    ensure(bad.is_none(), || {
        format!("chain fails on {:?}", bad.unwrap())
    })?;
    Ok(format!(
        "{}; Mad+1 >= col >= chi >= omega on 1000 random graphs",
        lines.join("; ")
    ))
}

fn transforms(produced: &mut Produced) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let third = Rational::new(1, 3);
    let (mut min_apex, mut min_split): (Option<Rational>, Option<Rational>) = (None, None);
    for i in 0..200 {
        let n = rng.gen_range(3..=8usize);
        let e = binom2(n as u64) as usize;
        let k = rng.gen_range(1..e);
        let mut d = random_decomposition(&mut rng, n, k);
        d.parts.shuffle(&mut rng);
        let base = produced.keep(&d);
        let a = decomp::apex_extend(&d).map_err(err)?;
        let da = produced.keep(&a) - &base;
        ensure(da >= Rational::one(), || {
            format!("input {i}: apex delta {da} < 1")
        })?;
        let s = decomp::split_edge(&d).map_err(err)?;
        let ds = produced.keep(&s) - &base;
        ensure(ds >= third, || format!("input {i}: split delta {ds} < 1/3"))?;
        min_apex = Some(min_apex.map_or(da.clone(), |m| m.min(da)));
        min_split = Some(min_split.map_or(ds.clone(), |m| m.min(ds)));
    }
    Ok(format!(
        "200 decompositions: smallest apex delta {}, smallest split delta {}",
        min_apex.unwrap(),
        min_split.unwrap()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leave_table_shapes() {
        assert_eq!(leave_table(6).size(), 3);
        assert_eq!(leave_table(10).size(), 6);
        assert_eq!(leave_table(11).size(), 4);
        assert_eq!(leave_table(13).size(), 0);
    }
}
