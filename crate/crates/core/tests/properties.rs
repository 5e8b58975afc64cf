mod common;

use common::*;
use coxeter_weyl::catalog::Classifier;
use coxeter_weyl::cosetgraph::{self, TreeVerdict};
use coxeter_weyl::decompose::{self, Ends, GraphOfSpecialSubgroups};
use coxeter_weyl::invariants;
use coxeter_weyl::words::{self, NormalForm};
use coxeter_weyl::{davis, named, CoxeterSystem, Limits, SpecialSubset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lim() -> Limits {
    Limits::default()
}

fn arb_system(max_rank: usize) -> impl Strategy<Value = CoxeterSystem> {
    any::<u64>().prop_map(move |seed| random_system(&mut ChaCha8Rng::seed_from_u64(seed), 2, max_rank))
}

fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..8, 0..max_len)
}

fn clip(sys: &CoxeterSystem, w: &[u8]) -> Vec<u8> {
    w.iter().map(|&s| s % sys.rank() as u8).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduce_is_idempotent_and_lexmin(sys in arb_system(4), w in arb_word(9)) {
        let w = clip(&sys, &w);
        let nf = words::reduce(&sys, &w, &lim()).unwrap();
        prop_assert!(nf.len() <= w.len());
        prop_assert_eq!(nf.len() % 2, w.len() % 2);
        prop_assert_eq!(words::reduce(&sys, nf.word(), &lim()).unwrap(), nf.clone());
        let all = words::reduced_expressions(&sys, &nf, &lim()).unwrap();
        prop_assert!(all.iter().all(|x| x.as_slice() >= nf.word()));
    }

    #[test]
    fn product_matches_concatenation(sys in arb_system(4), u in arb_word(6), v in arb_word(6)) {
        let (u, v) = (clip(&sys, &u), clip(&sys, &v));
        let nu = words::reduce(&sys, &u, &lim()).unwrap();
        let nv = words::reduce(&sys, &v, &lim()).unwrap();
        let mut uv = u.clone();
        uv.extend(&v);
        prop_assert_eq!(words::product(&sys, &nu, &nv, &lim()).unwrap(), words::reduce(&sys, &uv, &lim()).unwrap());
        let inv = words::inverse(&sys, &nu, &lim()).unwrap();
        prop_assert!(words::product(&sys, &nu, &inv, &lim()).unwrap().is_identity());
    }

    #[test]
    fn decompositions_are_valid(sys in arb_system(6)) {
        if let Some(d) = decompose::find_spherical_infinity_decomposition(&sys, &lim()).unwrap() {
            prop_assert!(d.is_valid(&sys));
            prop_assert!(d.is_nontrivial());
            prop_assert!(coxeter_weyl::is_spherical(&sys, d.meet).unwrap());
        }
    }

    #[test]
    fn chain_inequality(sys in arb_system(5)) {
        let alg = invariants::algebraic_rank(&sys, &lim()).unwrap();
        let cd = davis::rational_cd(&sys, &lim()).unwrap();
        let vcd = invariants::vcd_bounds(&sys, &lim()).unwrap();
        prop_assert!(alg <= cd, "alg {} > cd {}", alg, cd);
        prop_assert!(cd <= vcd.lo, "cd {} > vcd {:?}", cd, vcd);
        prop_assert!(vcd.lo <= vcd.hi);
        if coxeter_weyl::is_spherical(&sys, sys.generators()).unwrap() {
            prop_assert_eq!((alg, cd, vcd.hi), (0, 0, 0));
        } else {
            prop_assert!(vcd.hi < sys.rank());
            let top = coxeter_weyl::maximal_spherical_subsets(&sys)[0].len();
            prop_assert!(vcd.lo <= top);
        }
    }

    #[test]
    fn accessibility_tree_properties(sys in arb_system(5)) {
        let t = decompose::accessibility_tree(&sys, &lim()).unwrap();
        prop_assert!(t.is_tree() && t.is_well_formed() && t.covers(&sys));
        for &(_, _, e) in &t.edges {
            prop_assert!(coxeter_weyl::is_spherical(&sys, e).unwrap());
        }
        for &v in &t.vertex_sets {
            let e = decompose::ends(&sys.restrict(v).unwrap(), &lim()).unwrap().value;
            prop_assert!(e <= Ends::One);
        }
    }

    #[test]
    fn coset_keys_are_canonical(sys in arb_system(4), j in any::<u64>()) {
        let census = words::ball(&sys, 4, &lim()).unwrap();
        let j = SpecialSubset(j & sys.generators().bits());
        for w in 0..census.len() {
            let rep = census.coset_min(w, j);
            prop_assert!(census.descents[rep].intersection(j).is_empty());
            for s in j.iter() {
                if let Some(ws) = census.neighbours[w][s] {
                    prop_assert_eq!(census.coset_min(ws, j), rep);
                }
            }
        }
    }
}

#[test]
fn algebraic_rank_detects_affine() {
    let alphabet = [f(2), f(3), f(4), f(5), f(6), INF];
    for n in 2..=4 {
        for sys in all_systems(n, &alphabet) {
            let alg = invariants::algebraic_rank(&sys, &lim()).unwrap();
            let affine = sys.is_irreducible()
                && Classifier::new(&sys).classify_connected(sys.generators()).is_affine();
            assert_eq!(alg == n - 1, affine, "{}", sys.to_json());
        }
    }
}

#[test]
fn rank3_cases_match_independent_values() {
    for (_, sys) in rank3_corpus(&[f(2), f(3), f(4), f(5), f(6), INF]) {
        let case = invariants::rank3_case(&sys).unwrap();
        let e = decompose::ends(&sys, &lim()).unwrap().value;
        assert_eq!(case.alg_rank, invariants::algebraic_rank(&sys, &lim()).unwrap());
        assert_eq!(case.cd_q, davis::rational_cd(&sys, &lim()).unwrap());
        assert_eq!(case.vcd == 0, e == Ends::Zero);
    }
}

#[test]
fn ends_agree_with_ball_complement() {
    let cases = [
        (named::d_infinity(), 2),
        (named::d_infinity_x_a1(), 2),
        (named::affine_a2(), 1),
        (named::a2(), 0),
    ];
    for (sys, want) in cases {
        let g = cosetgraph::chamber_graph(&sys, 8, &lim()).unwrap();
        assert_eq!(cosetgraph::ends_estimate(&g, 2, 8).unwrap(), want, "{}", sys.to_json());
    }
    let g = cosetgraph::chamber_graph(&named::free3(), 6, &lim()).unwrap();
    assert!(cosetgraph::ends_estimate(&g, 1, 6).unwrap() >= 3);
    assert_eq!(decompose::ends(&named::free3(), &lim()).unwrap().value, Ends::Infinite);
}

#[test]
fn finite_coset_counts_match_index() {
    let b3 = named::b3();
    let order = 48;
    for bits in 0..8u64 {
        let j = SpecialSubset(bits);
        let sub = words::ball(&b3.restrict(j).unwrap(), 20, &lim()).unwrap().len();
        let gog = GraphOfSpecialSubgroups { vertex_sets: vec![j], edges: vec![], visual: false };
        let g = cosetgraph::coset_graph(&b3, &gog, 10, &lim()).unwrap();
        assert_eq!(g.vertices.len(), order / sub, "J = {}", b3.format_subset(j));
    }
}

#[test]
fn non_infinity_covers_produce_cycles() {
    let mut corpus: Vec<CoxeterSystem> = rank3_corpus(&[f(2), f(3), f(4), INF]).into_iter().map(|(_, s)| s).collect();
    corpus.push(named::affine_a2());
    corpus.push(named::compact_hyperbolic_square());
    for sys in corpus {
        let census = words::ball(&sys, 8, &lim()).unwrap();
        let full = sys.generators();
        for down in full.subsets() {
            for up in full.subsets() {
                if down.union(up) != full || down.bits() >= up.bits() {
                    continue;
                }
                let meet = down.intersection(up);
                let (a, b) = (down.difference(meet), up.difference(meet));
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                let infinite = a.iter().all(|s| b.iter().all(|t| !sys.label(s, t).is_finite()));
                if infinite {
                    continue;
                }
                let gog = GraphOfSpecialSubgroups { vertex_sets: vec![down, up], edges: vec![(0, 1, meet)], visual: false };
                let g = cosetgraph::coset_graph_from_ball(&census, &gog, 8).unwrap();
                assert!(
                    matches!(cosetgraph::is_tree_within_ball(&g), TreeVerdict::CycleFound(_)),
                    "{} split {} / {}",
                    sys.to_json(),
                    sys.format_subset(down),
                    sys.format_subset(up)
                );
            }
        }
    }
}

#[test]
fn normal_form_display() {
    let b3 = named::b3();
    let nf = words::reduce(&b3, &words::parse_word(&b3, "c b c b").unwrap(), &lim()).unwrap();
    assert_eq!(nf.display(&b3).to_string(), "b c b c");
    assert_eq!(NormalForm::identity().display(&b3).to_string(), "e");
}
