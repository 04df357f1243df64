mod common;

use weakclose::biclique::{
    solve_induced_biclique, solve_induced_biclique_2closed, solve_induced_biclique_cclosed,
    solve_induced_kk_biclique, solve_max_edge_non_induced_biclique, solve_non_induced_biclique,
};
use weakclose::dense::{solve_defective_clique, solve_defective_clique_via_cover, solve_splex};
use weakclose::domination::{solve_dominating_clique, solve_ids};
use weakclose::kernel::{solve_independent_set, solve_monotone_subgraph, solve_sparsest_k_subgraph, MonotoneClass};
use weakclose::oracle::{oracle_decide, Problem};
use weakclose::predicates::{check_defective_clique, check_splex, is_clique, is_dominating, is_independent};
use weakclose::{c_closure, Graph, ProblemAnswer};

use common::{atlas, describe, random_graphs};

fn agree(g: &Graph, problem: Problem, got: &ProblemAnswer) {
    let want = oracle_decide(problem, g).unwrap();
    assert_eq!(got.decision, want.decision, "{problem:?} on {}", describe(g));
    assert_eq!(got.witness.is_some(), got.decision, "{problem:?} on {}", describe(g));
}

fn classes() -> Vec<MonotoneClass> {
    vec![
        MonotoneClass::Edgeless,
        MonotoneClass::Acyclic,
        MonotoneClass::Bipartite,
        MonotoneClass::MaxDegree(1),
        MonotoneClass::MaxEdges(2),
    ]
}

#[test]
fn kernel_solvers_match_oracle() {
    for g in atlas().iter().chain(&random_graphs(150, 12, 5)) {
        for k in 0..=4 {
            let ans = solve_independent_set(g, k).unwrap();
            agree(g, Problem::IndependentSet { k }, &ans);
            if let Some(w) = ans.witness_set() {
                assert!(is_independent(g, w) && w.len() >= k);
            }
            for class in classes() {
                let ans = solve_monotone_subgraph(g, k, class).unwrap();
                agree(g, Problem::MonotoneSubgraph { class, k }, &ans);
                if let Some(w) = ans.witness_set() {
                    assert!(class.contains(g, w) && w.len() >= k, "{class:?} {w}");
                }
            }
            for t in 0..=3 {
                let ans = solve_sparsest_k_subgraph(g, k, t).unwrap();
                agree(g, Problem::SparsestK { k, t }, &ans);
                if let Some(w) = ans.witness_set() {
                    assert!(w.len() == k && g.edges_within(w) <= t);
                }
            }
        }
    }
}

#[test]
fn dense_solvers_match_oracle() {
    for g in atlas().iter().chain(&random_graphs(150, 12, 6)) {
        for k in 0..=5 {
            for s in 1..=3 {
                let ans = solve_splex(g, s, k).unwrap();
                agree(g, Problem::SPlex { s, k }, &ans);
                if let Some(w) = ans.witness_set() {
                    assert!(check_splex(g, w, s) && w.len() >= k);
                }
            }
            for s in 0..=3 {
                let ans = solve_defective_clique(g, s, k).unwrap();
                agree(g, Problem::DefectiveClique { s, k }, &ans);
                if let Some(w) = ans.witness_set() {
                    assert!(check_defective_clique(g, w, s) && w.len() >= k);
                }
                if s >= 1 && k >= 1 {
                    let cover = solve_defective_clique_via_cover(g, s, k).unwrap();
                    assert_eq!(cover.decision, ans.decision, "s={s} k={k} {}", describe(g));
                    if let Some(w) = cover.witness_set() {
                        assert!(check_defective_clique(g, w, s) && w.len() >= k);
                    }
                }
            }
        }
    }
}

#[test]
fn biclique_solvers_match_oracle() {
    for g in atlas().iter().chain(&random_graphs(150, 12, 11)) {
        let c = c_closure(g);
        for k1 in 0..=3 {
            for k2 in 0..=3 {
                if k1 >= 1 && k2 >= 1 {
                    let ans = solve_non_induced_biclique(g, k1, k2).unwrap();
                    agree(g, Problem::NonInducedBiclique { k1, k2 }, &ans);
                    if let Some(w) = ans.witness_biclique() {
                        assert!(w.verify(g) && w.side_s.len() >= k1 && w.side_t.len() >= k2);
                    }
                }
                if k1 >= 2 && k2 >= 2 {
                    let ans = solve_induced_biclique_cclosed(g, k1, k2).unwrap();
                    agree(g, Problem::InducedBiclique { k1, k2 }, &ans);
                    if let Some(w) = ans.witness_biclique() {
                        assert!(w.verify(g) && w.induced);
                        assert_eq!((w.side_s.len(), w.side_t.len()), (k1, k2));
                    }
                    let reduced = ans.stats.get("max_reduced_size").copied().unwrap_or(0);
                    assert!(reduced as usize + 2 <= 2 * c);
                }
                let ans = solve_induced_biclique(g, k1, k2).unwrap();
                agree(g, Problem::InducedBiclique { k1, k2 }, &ans);
                if let Some(w) = ans.witness_biclique() {
                    assert!(w.verify(g) && w.induced);
                    assert_eq!((w.side_s.len(), w.side_t.len()), (k1, k2));
                }
                if c <= 2 {
                    let ans = solve_induced_biclique_2closed(g, k1, k2).unwrap();
                    agree(g, Problem::InducedBiclique { k1, k2 }, &ans);
                    if let Some(w) = ans.witness_biclique() {
                        assert!(w.verify(g) && w.induced);
                        assert_eq!((w.side_s.len(), w.side_t.len()), (k1, k2));
                    }
                }
            }
        }
        for k in 0..=3 {
            let ans = solve_induced_kk_biclique(g, k).unwrap();
            agree(g, Problem::InducedBiclique { k1: k, k2: k }, &ans);
            if let Some(w) = ans.witness_biclique() {
                assert!(w.verify(g) && w.induced && w.side_s.len() == k && w.side_t.len() == k);
            }
        }
        for k in 1..=9 {
            let ans = solve_max_edge_non_induced_biclique(g, k).unwrap();
            agree(g, Problem::NonInducedMaxEdge { k }, &ans);
            if let Some(w) = ans.witness_biclique() {
                assert!(w.verify(g) && w.side_s.len() * w.side_t.len() >= k);
            }
        }
    }
}

#[test]
fn domination_solvers_match_oracle() {
    for g in atlas().iter().chain(&random_graphs(300, 12, 12)) {
        for k in 0..=4 {
            let ans = solve_ids(g, k);
            agree(g, Problem::IndependentDominatingSet { k }, &ans);
            if let Some(w) = ans.witness_set() {
                assert!(is_independent(g, w) && is_dominating(g, w) && w.len() <= k);
            }
            let ans = solve_dominating_clique(g, k);
            agree(g, Problem::DominatingClique { k }, &ans);
            if let Some(w) = ans.witness_set() {
                assert!(is_clique(g, w) && is_dominating(g, w) && w.len() <= k);
            }
        }
    }
}
