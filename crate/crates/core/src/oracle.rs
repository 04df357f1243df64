//! Exhaustive reference implementations.
//!
//! Everything here works by scanning all vertex subsets as bitmasks and
//! testing the definitional predicate, so it only scales to a handful of
//! vertices. None of it shares search logic with the solvers it checks; the
//! only shared code is the set predicates in [`crate::predicates`] and the
//! class membership tests in [`crate::kernel::MonotoneClass`].

use crate::answer::{BicliqueWitness, ProblemAnswer, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::MonotoneClass;
use crate::predicates::{
    check_defective_clique, check_splex, is_clique, is_dominating, is_independent,
    is_non_induced_biclique,
};
use crate::vertex_set::VertexSet;

/// Largest graph the subset-scanning oracles accept.
pub const SCALE_CAP: usize = 16;
/// Largest graph [`oracle_weak_closure`] accepts.
pub const WEAK_CLOSURE_CAP: usize = 12;

fn check_scale(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        Err(Error::Scale { n: g.n(), cap })
    } else {
        Ok(())
    }
}

fn mask_to_set(mask: u32) -> VertexSet {
    let mut members = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        members.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    VertexSet::from_sorted(members)
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect()
}

/// `1 + max` over non-empty vertex subsets `W` of `min_{v ∈ W} cl_{G[W]}(v)`.
pub fn oracle_weak_closure(g: &Graph) -> Result<usize> {
    check_scale(g, WEAK_CLOSURE_CAP)?;
    let adj = adjacency_masks(g);
    let n = g.n();
    let mut best = 0;
    for w in 1u32..(1u32 << n) {
        let mut min_cl = usize::MAX;
        for v in 0..n {
            if w & (1 << v) == 0 {
                continue;
            }
            let others = w & !adj[v] & !(1 << v);
            let mut cl = 0;
            for u in 0..n {
                if others & (1 << u) != 0 {
                    cl = cl.max((adj[v] & adj[u] & w).count_ones() as usize);
                }
            }
            min_cl = min_cl.min(cl);
        }
        best = best.max(min_cl);
    }
    Ok(1 + best)
}

/// Definitional degeneracy: the largest minimum degree over induced subgraphs.
pub fn oracle_degeneracy(g: &Graph) -> Result<usize> {
    check_scale(g, WEAK_CLOSURE_CAP)?;
    let adj = adjacency_masks(g);
    let n = g.n();
    let mut best = 0;
    for w in 1u32..(1u32 << n) {
        let min_deg = (0..n)
            .filter(|&v| w & (1 << v) != 0)
            .map(|v| (adj[v] & w).count_ones() as usize)
            .min()
            .unwrap_or(0);
        best = best.max(min_deg);
    }
    Ok(best)
}

/// Properties the maximal-family oracle understands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Clique,
    SPlex(usize),
    Defective(usize),
    NonInducedBiclique,
    Independent,
}

impl Property {
    pub fn holds(&self, g: &Graph, set: &VertexSet) -> bool {
        match *self {
            Property::Clique => is_clique(g, set),
            Property::SPlex(s) => check_splex(g, set, s),
            Property::Defective(s) => check_defective_clique(g, set, s),
            Property::NonInducedBiclique => is_non_induced_biclique(g, set),
            Property::Independent => is_independent(g, set),
        }
    }
}

/// All inclusion-maximal sets with `property`, sorted.
pub fn oracle_enumerate_maximal(g: &Graph, property: Property) -> Result<Vec<VertexSet>> {
    check_scale(g, SCALE_CAP)?;
    let n = g.n();
    let total = 1usize << n;
    let holds: Vec<bool> = (0..total)
        .map(|mask| property.holds(g, &mask_to_set(mask as u32)))
        .collect();
    let mut out: Vec<VertexSet> = (0..total)
        .filter(|&mask| {
            holds[mask] && (0..n).all(|v| mask & (1 << v) != 0 || !holds[mask | (1 << v)])
        })
        .map(|mask| mask_to_set(mask as u32))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Decision problems the oracle can answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    IndependentSet { k: usize },
    MonotoneSubgraph { class: MonotoneClass, k: usize },
    SparsestK { k: usize, t: usize },
    SPlex { s: usize, k: usize },
    DefectiveClique { s: usize, k: usize },
    NonInducedBiclique { k1: usize, k2: usize },
    NonInducedMaxEdge { k: usize },
    /// Sides of exactly `k1` and `k2` vertices, both independent.
    InducedBiclique { k1: usize, k2: usize },
    IndependentDominatingSet { k: usize },
    DominatingClique { k: usize },
}

/// Numeric parameters supplied alongside a problem id.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub k1: Option<usize>,
    pub k2: Option<usize>,
    pub class: Option<String>,
}

impl Problem {
    pub const IDS: [&'static str; 11] = [
        "is",
        "monotone",
        "sparsest",
        "splex",
        "defective",
        "ni-biclique",
        "ni-maxedge",
        "ind-kk",
        "ind-k1k2",
        "ids",
        "dc",
    ];

    /// Resolves a problem id and its parameters.
    pub fn from_id(id: &str, params: &Params) -> Result<Self> {
        let need = |value: Option<usize>, flag: &str| {
            value.ok_or_else(|| Error::Config(format!("problem '{id}' requires {flag}")))
        };
        Ok(match id {
            "is" => Problem::IndependentSet { k: need(params.k, "-k")? },
            "monotone" => {
                let class = params
                    .class
                    .as_deref()
                    .ok_or_else(|| Error::Config("problem 'monotone' requires --class".into()))?;
                Problem::MonotoneSubgraph {
                    class: MonotoneClass::parse(class)?,
                    k: need(params.k, "-k")?,
                }
            }
            "sparsest" => Problem::SparsestK {
                k: need(params.k, "-k")?,
                t: need(params.t, "--t")?,
            },
            "splex" => Problem::SPlex {
                s: need(params.s, "--s")?,
                k: need(params.k, "-k")?,
            },
            "defective" | "defective-cover" => Problem::DefectiveClique {
                s: need(params.s, "--s")?,
                k: need(params.k, "-k")?,
            },
            "ni-biclique" => Problem::NonInducedBiclique {
                k1: need(params.k1, "--k1")?,
                k2: need(params.k2, "--k2")?,
            },
            "ni-maxedge" => Problem::NonInducedMaxEdge { k: need(params.k, "-k")? },
            "ind-kk" => {
                let k = need(params.k, "-k")?;
                Problem::InducedBiclique { k1: k, k2: k }
            }
            "ind-k1k2" | "ind-cclosed" | "ind-2closed" => Problem::InducedBiclique {
                k1: need(params.k1, "--k1")?,
                k2: need(params.k2, "--k2")?,
            },
            "ids" => Problem::IndependentDominatingSet { k: need(params.k, "-k")? },
            "dc" => Problem::DominatingClique { k: need(params.k, "-k")? },
            other => {
                return Err(Error::Config(format!(
                    "unknown problem '{other}'; expected one of {}",
                    Self::IDS.join(", ")
                )))
            }
        })
    }
}

/// Answers `problem` by exhaustive search, returning the lexicographically
/// smallest witness.
pub fn oracle_decide(problem: Problem, g: &Graph) -> Result<ProblemAnswer> {
    check_scale(g, SCALE_CAP)?;
    let n = g.n();
    let all = (1u32 << n) - 1;
    let adj = adjacency_masks(g);
    let common = |mask: u32| {
        let mut acc = all;
        let mut rest = mask;
        while rest != 0 {
            acc &= adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        acc & !mask
    };

    let smallest_set = |accept: &dyn Fn(u32, &VertexSet) -> bool| -> Option<VertexSet> {
        (0..=all)
            .filter_map(|mask| {
                let set = mask_to_set(mask);
                accept(mask, &set).then_some(set)
            })
            .min()
    };

    let answer_set = |found: Option<VertexSet>| match found {
        Some(set) => ProblemAnswer::yes_set(set),
        None => ProblemAnswer::no(),
    };

    let answer = match problem {
        Problem::IndependentSet { k } => answer_set(smallest_set(&|mask, set| {
            mask.count_ones() as usize >= k && is_independent(g, set)
        })),
        Problem::MonotoneSubgraph { class, k } => answer_set(smallest_set(&|mask, set| {
            mask.count_ones() as usize >= k && class.contains(g, set)
        })),
        Problem::SparsestK { k, t } => answer_set(smallest_set(&|mask, set| {
            mask.count_ones() as usize == k && g.edges_within(set) <= t
        })),
        Problem::SPlex { s, k } => answer_set(smallest_set(&|mask, set| {
            mask.count_ones() as usize >= k && check_splex(g, set, s)
        })),
        Problem::DefectiveClique { s, k } => answer_set(smallest_set(&|mask, set| {
            mask.count_ones() as usize >= k && check_defective_clique(g, set, s)
        })),
        Problem::IndependentDominatingSet { k } => answer_set(smallest_set(&|mask, set| {
            mask.count_ones() as usize <= k && is_independent(g, set) && is_dominating(g, set)
        })),
        Problem::DominatingClique { k } => answer_set(smallest_set(&|mask, set| {
            mask.count_ones() as usize <= k && is_clique(g, set) && is_dominating(g, set)
        })),
        Problem::NonInducedBiclique { k1, k2 } => {
            let mut best: Option<BicliqueWitness> = None;
            for s in 0..=all {
                if (s.count_ones() as usize) < k1 {
                    continue;
                }
                let t = common(s);
                if (t.count_ones() as usize) < k2 {
                    continue;
                }
                let w = BicliqueWitness {
                    side_s: mask_to_set(s),
                    side_t: mask_to_set(t),
                    induced: false,
                };
                if best.as_ref().is_none_or(|b| key(&w) < key(b)) {
                    best = Some(w);
                }
            }
            biclique_answer(best)
        }
        Problem::NonInducedMaxEdge { k } => {
            let mut best: Option<BicliqueWitness> = None;
            for s in 1..=all {
                let t = common(s);
                if (s.count_ones() * t.count_ones()) as usize >= k && t != 0 {
                    let w = BicliqueWitness {
                        side_s: mask_to_set(s),
                        side_t: mask_to_set(t),
                        induced: false,
                    };
                    if best.as_ref().is_none_or(|b| key(&w) < key(b)) {
                        best = Some(w);
                    }
                }
            }
            biclique_answer(best)
        }
        Problem::InducedBiclique { k1, k2 } => {
            let mut best: Option<BicliqueWitness> = None;
            for s in 0..=all {
                if s.count_ones() as usize != k1 || !is_independent(g, &mask_to_set(s)) {
                    continue;
                }
                let pool = common(s);
                // Every subset of the common neighbourhood with exactly k2 members.
                let mut t = pool;
                loop {
                    if t.count_ones() as usize == k2 {
                        let side_t = mask_to_set(t);
                        if is_independent(g, &side_t) {
                            let w = BicliqueWitness {
                                side_s: mask_to_set(s),
                                side_t,
                                induced: true,
                            };
                            if best.as_ref().is_none_or(|b| key(&w) < key(b)) {
                                best = Some(w);
                            }
                        }
                    }
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & pool;
                }
            }
            biclique_answer(best)
        }
    };
    Ok(answer)
}

fn key(w: &BicliqueWitness) -> (VertexSet, VertexSet) {
    (w.side_s.clone(), w.side_t.clone())
}

fn biclique_answer(best: Option<BicliqueWitness>) -> ProblemAnswer {
    match best {
        Some(w) => ProblemAnswer::yes(Witness::Biclique(w)),
        None => ProblemAnswer::no(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn weak_closure_examples() {
        assert_eq!(oracle_weak_closure(&cycle(4)).unwrap(), 3);
        assert_eq!(oracle_weak_closure(&path(4)).unwrap(), 2);
        assert_eq!(oracle_weak_closure(&complete(5)).unwrap(), 1);
        assert_eq!(
            oracle_weak_closure(&Graph::empty(13)).unwrap_err(),
            Error::Scale { n: 13, cap: 12 }
        );
    }

    #[test]
    fn enumeration_examples() {
        let two = disjoint_cliques(&[3, 3]);
        assert_eq!(oracle_enumerate_maximal(&two, Property::SPlex(2)).unwrap().len(), 11);
        let c4 = cycle(4);
        assert_eq!(
            oracle_enumerate_maximal(&c4, Property::NonInducedBiclique).unwrap(),
            vec![c4.all_vertices()]
        );
        let k3 = complete(3);
        assert_eq!(
            oracle_enumerate_maximal(&k3, Property::Clique).unwrap(),
            vec![k3.all_vertices()]
        );
        assert!(matches!(
            oracle_enumerate_maximal(&Graph::empty(17), Property::Clique),
            Err(Error::Scale { .. })
        ));
    }

    #[test]
    fn decision_examples() {
        let c5 = cycle(5);
        assert!(!oracle_decide(Problem::IndependentSet { k: 3 }, &c5).unwrap().decision);
        assert!(!oracle_decide(Problem::DominatingClique { k: 2 }, &c5).unwrap().decision);
        let ans = oracle_decide(Problem::InducedBiclique { k1: 2, k2: 2 }, &cycle(4)).unwrap();
        assert!(ans.decision);
        let w = ans.witness_biclique().unwrap();
        assert!(w.verify(&cycle(4)));
        assert_eq!(w.side_s, VertexSet::from([0, 2]));
    }

    #[test]
    fn smallest_witness_is_deterministic() {
        let ans = oracle_decide(Problem::IndependentSet { k: 2 }, &cycle(4)).unwrap();
        assert_eq!(ans.witness_set().unwrap(), &VertexSet::from([0, 2]));
    }

    #[test]
    fn unknown_problem_id() {
        assert!(matches!(
            Problem::from_id("densest", &Params::default()),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            Problem::from_id("is", &Params::default()),
            Err(Error::Config(_))
        ));
    }
}
