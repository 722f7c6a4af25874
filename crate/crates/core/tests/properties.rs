use madgad::decomp::{self, Decomposition, Mode};
use madgad::designs;
use madgad::formulas::{self, binom2};
use madgad::graph::{Graph, GraphList};
use madgad::mad::mad;
use madgad::normalize::{self, Item};
use madgad::oracle::{self, OracleBudget};
use madgad::rational::Rational;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |es| Graph::new(n, es).unwrap())
    })
}

/// A graph together with a random assignment of its edges to `k` parts.
fn decomposition(max_n: usize) -> impl Strategy<Value = Decomposition> {
    (2..=max_n, 1..=6usize).prop_flat_map(|(n, k)| {
        let e = binom2(n as u64) as usize;
        proptest::collection::vec(0..k, e).prop_map(move |labels| {
            let mut parts = vec![Vec::new(); k];
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for (l, p) in labels.iter().zip(pairs) {
                parts[*l].push(p);
            }
            Decomposition::new(
                n,
                Mode::Decomposition,
                parts
                    .into_iter()
                    .map(|es| Graph::new(n, es).unwrap())
                    .collect(),
                "random",
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_text_round_trip(a in -10_000i64..10_000, b in 1i64..10_000) {
        let r = Rational::new(a, b);
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(&back, &r);
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
    }

    #[test]
    fn complement_is_an_involution(g in graph(9)) {
        let c = g.complement();
        prop_assert_eq!(c.size() + g.size(), binom2(g.order() as u64) as usize);
        let cc = c.complement();
        prop_assert_eq!(cc.edges(), g.edges());
    }

    #[test]
    fn blow_up_counts(g in graph(6), t in 1usize..4, fill in any::<bool>()) {
        let b = g.blow_up(t, fill);
        prop_assert_eq!(b.order(), g.order() * t);
        let extra = if fill { g.order() * t * (t - 1) / 2 } else { 0 };
        prop_assert_eq!(b.size(), g.size() * t * t + extra);
    }

    #[test]
    fn graph_json_round_trip(g in graph(8)) {
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.order(), g.order());
    }

    #[test]
    fn mad_dominates_average_degrees(g in graph(10)) {
        let c = mad(&g);
        prop_assert!(c.is_consistent_with(&g));
        prop_assert!(c.value >= g.essential_average_degree());
        prop_assert!(g.essential_average_degree() >= g.average_degree().unwrap());
        prop_assert!(c.value <= Rational::from(g.max_degree()));
    }

    #[test]
    fn mad_is_monotone_under_edge_addition(g in graph(9), u in 0usize..9, v in 0usize..9) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let bigger = g.with_edges([(u.min(v), u.max(v))]);
        prop_assert!(mad(&bigger).value >= mad(&g).value);
    }

    #[test]
    fn mad_matches_enumeration(g in graph(9)) {
        let brute = oracle::mad_bruteforce(&g, &OracleBudget::for_mad()).unwrap();
        prop_assert_eq!(mad(&g), brute);
    }

    #[test]
    fn g_bounds_every_graph(g in graph(9)) {
        prop_assume!(g.size() > 0);
        prop_assert!(mad(&g).value <= formulas::g_max_mad(g.size() as u64).unwrap());
    }

    #[test]
    fn list_bound_is_monotone(k in 1u64..12, n in 1u64..300) {
        prop_assume!(n >= k);
        prop_assert!(formulas::m_list(k, n + 1).unwrap() >= formulas::m_list(k, n).unwrap());
        prop_assert!(formulas::m_list(k + 1, n + 1).unwrap() >= formulas::m_list(k, n).unwrap());
    }

    #[test]
    fn random_decompositions_respect_caps(d in decomposition(8)) {
        let rep = decomp::validate(&d).unwrap();
        prop_assert_eq!(rep.total.clone(), decomp::mad_sum(&d));
        let ub = formulas::m_list(d.k() as u64, binom2(d.n as u64));
        if let Ok(ub) = ub {
            prop_assert!(rep.total <= ub);
        }
        prop_assert!(rep.below_sqrt_cap);
    }

    #[test]
    fn normalization_conserves_and_climbs(sizes in proptest::collection::vec(0u64..40, 1..9)) {
        prop_assume!(sizes.iter().sum::<u64>() >= sizes.len() as u64);
        let items: Vec<(u64, u64)> = sizes.iter().map(|&m| formulas::rep_params(m)).collect();
        let st = normalize::normalize_descriptors(&items).unwrap();
        st.check_trajectory().unwrap();
        let before: Rational = items.iter().map(|&(p, r)| Item::new(p, r).mad()).sum();
        prop_assert!(st.mad_sum() >= before);
        prop_assert_eq!(st.total_edges() + st.spare, sizes.iter().sum::<u64>());
        let k = items.len() as u64;
        prop_assert_eq!(st.mad_sum(), formulas::m_list(k, st.initial_edges).unwrap());
    }

    #[test]
    fn representatives_never_lower_the_sum(d in decomposition(7)) {
        let l = GraphList::new(d.parts.clone());
        let reps = normalize::to_representative_list(&l);
        prop_assert!(reps.mad_sum() >= normalize::list_mad_sum(&l));
    }

    #[test]
    fn transforms_raise_the_total(d in decomposition(7)) {
        prop_assume!((d.k() as u64) < binom2(d.n as u64));
        let base = decomp::mad_sum(&d);
        let apex = decomp::apex_extend(&d).unwrap();
        prop_assert!(decomp::mad_sum(&apex) >= &base + &Rational::one());
        let split = decomp::split_edge(&d).unwrap();
        prop_assert!(decomp::mad_sum(&split) >= &base + &Rational::new(1, 3));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn triple_systems_are_valid(n in 3usize..40) {
        if n % 6 == 1 || n % 6 == 3 {
            let d = designs::steiner_triple_system(n).unwrap();
            designs::validate_pairwise(&d).unwrap();
            prop_assert!(d.uncovered_pairs().size() == 0);
        }
        if n >= 3 {
            let (d, leave) = designs::max_partial_triple_system(n).unwrap();
            designs::validate_pairwise(&d).unwrap();
            prop_assert_eq!(d.blocks.len() * 3 + leave.size(), binom2(n as u64) as usize);
        }
    }
}
