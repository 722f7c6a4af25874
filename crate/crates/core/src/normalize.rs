//! Normalization of a list of graphs into the representative list.
//!
//! Every graph is first replaced by the representative `G_{p,r}` with the
//! same number of edges. Items are then rewritten one step at a time, each
//! step logged, while `spare + Σ e(H_i)` stays constant and the Mad-sum never
//! decreases:
//!
//! * `strip-free-edges`: a type C item `G_{p,r}` becomes `K_p`, `s += r`.
//! * `transfer`: `min(r_i, p_j − r_j)` edges move from `G_{p_i,r_i}` to
//!   `G_{p_j,r_j}` (both type B, `p_i > p_j`, or `p_i = p_j` and
//!   `r_i ≤ r_j`), or from a clique `K_{P}` with `P − 1 > p_j` to the only
//!   type B item.
//! * `balance`: while the `p`-values (`P − 1` for `K_P`, `p` for a type B
//!   item) differ by more than one, move edges from the largest to the
//!   smallest.
//! * `fill`, `grow`: spare edges complete the type B item, then enlarge the
//!   smallest cliques.
//! * `residual`: leftover spare edges turn one smallest clique `K_{p'}` into
//!   `G_{p',s}`.
//!
//! Choices are deterministic: the earliest applicable rule wins, and within
//! a rule the lexicographically smallest `(p, r, index)` key.
//!
//! Termination: every step except `strip-free-edges` and `A–A` balancing
//! either raises the Mad-sum or lowers the number of non-clique items;
//! stripping lowers the number of type C items and A–A balancing raises `s`
//! while keeping the Mad-sum. The state space is finite, so the potential
//! `(Mad-sum, s, −#non-clique items)` cannot increase forever; a hard cap of
//! `64(k+N)²` steps turns any bug into an error instead of a hang.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::formulas::{binom2, param_triple, rep_mad, rep_params};
use crate::graph::GraphList;
use crate::mad::mad_value;
use crate::rational::Rational;

/// `G_{p,r}` with `0 ≤ r < p`; `(1, 0)` is `K_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Item {
    pub p: u64,
    pub r: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ItemType {
    A,
    B,
    C,
}

impl Item {
    /// Normalizes `r = p` to `K_{p+1}`.
    pub fn new(p: u64, r: u64) -> Item {
        assert!(p >= 1 && r <= p, "bad descriptor ({p},{r})");
        if r == p {
            Item { p: p + 1, r: 0 }
        } else {
            Item { p, r }
        }
    }

    pub fn from_edges(m: u64) -> Item {
        let (p, r) = rep_params(m);
        Item { p, r }
    }

    pub fn edges(self) -> u64 {
        binom2(self.p) + self.r
    }

    pub fn mad(self) -> Rational {
        rep_mad(self.p, self.r)
    }

    pub fn kind(self) -> ItemType {
        if self.r == 0 {
            ItemType::A
        } else if 2 * self.r + 1 >= self.p {
            ItemType::B
        } else {
            ItemType::C
        }
    }

    /// `P − 1` for a clique `K_P`, `p` otherwise.
    fn level(self) -> u64 {
        if self.r == 0 {
            self.p - 1
        } else {
            self.p
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub rule: &'static str,
    /// `(index, before, after)` for each touched item.
    pub changes: Vec<(usize, Item, Item)>,
    pub spare_before: u64,
    pub spare_after: u64,
    pub mad_sum_before: Rational,
    pub mad_sum_after: Rational,
    /// `spare + Σ e(H_i)` after the step.
    pub conserved: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizationState {
    pub items: Vec<Item>,
    pub spare: u64,
    pub log: Vec<Step>,
    /// `spare + Σ e(H_i)` when the state was created.
    pub initial_edges: u64,
}

impl NormalizationState {
    pub fn from_items(items: Vec<Item>) -> Self {
        let initial_edges = items.iter().map(|it| it.edges()).sum();
        NormalizationState {
            items,
            spare: 0,
            log: Vec::new(),
            initial_edges,
        }
    }

    pub fn mad_sum(&self) -> Rational {
        self.items.iter().map(|it| it.mad()).sum()
    }

    pub fn total_edges(&self) -> u64 {
        self.items.iter().map(|it| it.edges()).sum()
    }

    pub fn count(&self, t: ItemType) -> usize {
        self.items.iter().filter(|it| it.kind() == t).count()
    }

    /// Sorted multiset of descriptors.
    pub fn multiset(&self) -> Vec<Item> {
        let mut v = self.items.clone();
        v.sort();
        v
    }

    /// Checks conservation and monotonicity of every logged step.
    pub fn check_trajectory(&self) -> Result<()> {
        for (i, s) in self.log.iter().enumerate() {
            if s.conserved != self.initial_edges {
                return Err(Error::Validation(format!(
                    "step {i} ({}) changed spare + edges to {}",
                    s.rule, s.conserved
                )));
            }
            if s.mad_sum_after < s.mad_sum_before {
                return Err(Error::Validation(format!(
                    "step {i} ({}) lowered the Mad-sum from {} to {}",
                    s.rule, s.mad_sum_before, s.mad_sum_after
                )));
            }
        }
        Ok(())
    }

    fn apply(&mut self, rule: &'static str, updates: &[(usize, Item)], spare: u64) {
        let before = self.mad_sum();
        let spare_before = self.spare;
        let changes = updates
            .iter()
            .map(|&(i, it)| {
                let old = self.items[i];
                self.items[i] = it;
                (i, old, it)
            })
            .collect();
        self.spare = spare;
        let conserved = self.spare + self.total_edges();
        self.log.push(Step {
            rule,
            changes,
            spare_before,
            spare_after: spare,
            mad_sum_before: before,
            mad_sum_after: self.mad_sum(),
            conserved,
        });
    }
}

/// Each graph replaced by the representative with the same edge count.
pub fn to_representative_list(l: &GraphList) -> NormalizationState {
    NormalizationState::from_items(
        l.graphs
            .iter()
            .map(|g| Item::from_edges(g.size() as u64))
            .collect(),
    )
}

/// Mad-sum of the original graphs (for comparison with the representatives).
pub fn list_mad_sum(l: &GraphList) -> Rational {
    l.graphs.iter().map(mad_value).sum()
}

/// Runs the full procedure on a list of `k` graphs with `N` edges.
pub fn normalize(l: &GraphList, k: u64, n_edges: u64) -> Result<NormalizationState> {
    if l.len() as u64 != k {
        return domain(format!("list has {} graphs, expected k={k}", l.len()));
    }
    let e = l.total_edges() as u64;
    if e != n_edges {
        return domain(format!("list has {e} edges, expected N={n_edges}"));
    }
    run(to_representative_list(l), k, n_edges)
}

/// Runs the procedure on descriptors `(p, r)` with `0 ≤ r ≤ p`.
pub fn normalize_descriptors(items: &[(u64, u64)]) -> Result<NormalizationState> {
    if let Some(&(p, r)) = items.iter().find(|&&(p, r)| p < 1 || r > p) {
        return domain(format!("bad descriptor ({p},{r})"));
    }
    let st = NormalizationState::from_items(items.iter().map(|&(p, r)| Item::new(p, r)).collect());
    let (k, n) = (st.items.len() as u64, st.initial_edges);
    run(st, k, n)
}

fn run(mut st: NormalizationState, k: u64, n_edges: u64) -> Result<NormalizationState> {
    if k == 0 || n_edges < k {
        return domain(format!(
            "normalization needs N >= k >= 1, got k={k}, N={n_edges}"
        ));
    }
    let cap = 64 * (k + n_edges) * (k + n_edges);
    let mut steps = 0u64;
    loop {
        steps += 1;
        if steps > cap {
            return Err(Error::Budget(format!("normalization exceeded {cap} steps")));
        }
        if strip(&mut st) || transfer(&mut st) || balance(&mut st) {
            continue;
        }
        break;
    }
    spend(&mut st);
    Ok(st)
}

fn strip(st: &mut NormalizationState) -> bool {
    let Some(i) = st.items.iter().position(|it| it.kind() == ItemType::C) else {
        return false;
    };
    let it = st.items[i];
    st.apply(
        "strip-free-edges",
        &[(i, Item::new(it.p, 0))],
        st.spare + it.r,
    );
    true
}

/// Moves `r'` edges from donor `i` (viewed as `G_{p_i,r_i}`) to receiver `j`.
fn move_edges(
    st: &mut NormalizationState,
    rule: &'static str,
    i: usize,
    di: Item,
    j: usize,
    dj: Item,
) {
    let rr = di.r.min(dj.p - dj.r);
    let donor = Item::new(di.p, di.r - rr);
    let receiver = Item::new(dj.p, dj.r + rr);
    st.apply(rule, &[(i, donor), (j, receiver)], st.spare);
}

fn transfer(st: &mut NormalizationState) -> bool {
    let bs: Vec<usize> = (0..st.items.len())
        .filter(|&i| st.items[i].kind() == ItemType::B)
        .collect();
    let mut best: Option<((u64, u64, usize, u64, u64, usize), usize, usize)> = None;
    for &i in &bs {
        for &j in &bs {
            let (a, b) = (st.items[i], st.items[j]);
            if i != j && (a.p > b.p || (a.p == b.p && a.r <= b.r)) {
                let key = (a.p, a.r, i, b.p, b.r, j);
                if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                    best = Some((key, i, j));
                }
            }
        }
    }
    if let Some((_, i, j)) = best {
        let (di, dj) = (st.items[i], st.items[j]);
        move_edges(st, "transfer", i, di, j, dj);
        return true;
    }
    if let [j] = bs[..] {
        let b = st.items[j];
        let donor = (0..st.items.len())
            .filter(|&i| st.items[i].r == 0 && st.items[i].p - 1 > b.p)
            .min_by_key(|&i| (st.items[i].p, i));
        if let Some(i) = donor {
            let pp = st.items[i].p - 1;
            move_edges(st, "transfer", i, Item { p: pp, r: pp }, j, b);
            return true;
        }
    }
    false
}

fn balance(st: &mut NormalizationState) -> bool {
    let n = st.items.len();
    let hi = (0..n)
        .max_by_key(|&i| (st.items[i].level(), std::cmp::Reverse(i)))
        .unwrap();
    let lo = (0..n).min_by_key(|&i| (st.items[i].level(), i)).unwrap();
    let (a, b) = (st.items[hi], st.items[lo]);
    if a.level() <= b.level() + 1 {
        return false;
    }
    match (a.r == 0, b.r == 0) {
        (true, true) => {
            // K_a -> K_{a-1} frees a-1 edges, K_b -> K_{b+1} takes b.
            let spare = st.spare + (a.p - 1) - b.p;
            st.apply(
                "balance",
                &[(hi, Item::new(a.p - 1, 0)), (lo, Item::new(b.p + 1, 0))],
                spare,
            );
        }
        (true, false) => move_edges(
            st,
            "balance",
            hi,
            Item {
                p: a.p - 1,
                r: a.p - 1,
            },
            lo,
            b,
        ),
        (false, _) => move_edges(st, "balance", hi, a, lo, b),
    }
    true
}

fn spend(st: &mut NormalizationState) {
    if let Some(j) = st.items.iter().position(|it| it.kind() == ItemType::B) {
        let b = st.items[j];
        let add = st.spare.min(b.p - b.r);
        if add > 0 {
            st.apply("fill", &[(j, Item::new(b.p, b.r + add))], st.spare - add);
        }
        if st.spare == 0 {
            return;
        }
    }
    while st.spare > 0 {
        let i = (0..st.items.len())
            .min_by_key(|&i| (st.items[i].p, i))
            .unwrap();
        let p = st.items[i].p;
        if st.spare < p {
            st.apply("residual", &[(i, Item::new(p, st.spare))], 0);
            break;
        }
        st.apply("grow", &[(i, Item::new(p + 1, 0))], st.spare - p);
    }
}

/// Sorted terminal multiset for `(k, N)`: `q` copies of `K_{p+1}`, the rest
/// `K_p`, one of them replaced by `G_{p,r}` when `r > 0`.
pub fn expected_terminal(k: u64, n_edges: u64) -> Result<Vec<Item>> {
    let t = param_triple(k, n_edges)?;
    let mut v = vec![Item::new(t.p + 1, 0); t.q as usize];
    if t.r == 0 {
        v.extend(vec![Item::new(t.p, 0); (k - t.q) as usize]);
    } else {
        v.extend(vec![Item::new(t.p, 0); (k - t.q - 1) as usize]);
        v.push(Item::new(t.p, t.r));
    }
    v.sort();
    Ok(v)
}
