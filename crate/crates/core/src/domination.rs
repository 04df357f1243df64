//! Branching solvers for Independent Dominating Set and Dominating Clique.

use rayon::prelude::*;

use crate::answer::{ProblemAnswer, Stats};
use crate::closure::{closure_ordering, weak_closure};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::view::{ClosureScratch, View};

fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An independent dominating set of at most `k` vertices.
///
/// Greedily builds an independent set, each time taking a vertex of smallest
/// closure number in what is left. If `k + 1` picks are possible, every
/// solution contains a vertex adjacent to two of the first `k + 1` picks, and
/// there are at most `(γ - 1)·C(k + 1, 2)` of those.
pub fn solve_ids(g: &Graph, k: usize) -> ProblemAnswer {
    let gamma = weak_closure(g);
    let mut stats = Stats::default();
    let mut view = View::full(g);
    let found = ids(&mut view, k, gamma, &mut stats);
    match found {
        Some(set) => ProblemAnswer::yes_set(VertexSet::from_unsorted(set)),
        None => ProblemAnswer::no(),
    }
    .with_stats(&stats)
}

fn ids(view: &mut View<'_>, k: usize, gamma: usize, stats: &mut Stats) -> Option<Vec<usize>> {
    stats.bump("search_nodes");
    if view.is_empty() {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let g = view.graph();
    let mut rest = view.clone();
    let mut scratch = ClosureScratch::new(g.n());
    let mut picks = Vec::with_capacity(k + 1);
    while !rest.is_empty() && picks.len() <= k {
        let v = rest
            .vertices()
            .min_by_key(|&v| (scratch.closure(&rest, v), v))
            .expect("rest is non-empty");
        picks.push(v);
        let closed: Vec<usize> = rest.neighbors(v).chain([v]).collect();
        for w in closed {
            rest.remove(w);
        }
    }
    if picks.len() <= k {
        return Some(picks);
    }

    let branch: Vec<usize> = view
        .vertices()
        .filter(|&u| picks.iter().filter(|&&p| g.has_edge(u, p)).count() >= 2)
        .collect();
    let limit = (gamma - 1) * binomial2(k + 1);
    assert!(
        branch.len() <= limit,
        "branch set of {} exceeds (γ - 1)·C(k + 1, 2) = {limit}",
        branch.len()
    );
    stats.max("max_branch_width", branch.len() as u64);

    for u in branch {
        let mut next = view.clone();
        let closed: Vec<usize> = view.neighbors(u).chain([u]).collect();
        for w in closed {
            next.remove(w);
        }
        if let Some(mut set) = ids(&mut next, k - 1, gamma, stats) {
            set.push(u);
            return Some(set);
        }
    }
    None
}

/// A clique of at most `k` vertices dominating the graph.
///
/// For each `v_i` of a closure ordering, searches for a solution whose first
/// vertex in the ordering is `v_i`. Some solution vertex must dominate a
/// non-neighbour `w` of `v_i`; it is a common neighbour of `v_i` and `w` in
/// `G_i`, so each node has at most `γ - 1` children.
pub fn solve_dominating_clique(g: &Graph, k: usize) -> ProblemAnswer {
    if g.is_empty() {
        return ProblemAnswer::yes_set(VertexSet::new());
    }
    if k == 0 {
        return ProblemAnswer::no();
    }
    let ordering = closure_ordering(g);
    let gamma = ordering.gamma();
    let runs: Vec<(Option<Vec<usize>>, Stats)> = (0..g.n())
        .into_par_iter()
        .map(|i| {
            let mut stats = Stats::default();
            let search = DcSearch {
                g,
                first: ordering.order()[i],
                rank: i,
                position: (0..g.n()).map(|v| ordering.position(v)).collect(),
                gamma,
            };
            let mut alive = vec![true; g.n()];
            let found = search.run(&mut alive, &mut vec![search.first], k - 1, &mut stats);
            (found, stats)
        })
        .collect();

    let mut stats = Stats::default();
    let mut best: Option<VertexSet> = None;
    for (found, run) in runs {
        stats.add("search_nodes", run.get("search_nodes"));
        stats.max("max_branch_width", run.get("max_branch_width"));
        if let Some(set) = found {
            let set = VertexSet::from_unsorted(set);
            if best.as_ref().is_none_or(|b| set < *b) {
                best = Some(set);
            }
        }
    }
    match best {
        Some(set) => ProblemAnswer::yes_set(set),
        None => ProblemAnswer::no(),
    }
    .with_stats(&stats)
}

struct DcSearch<'a> {
    g: &'a Graph,
    first: usize,
    rank: usize,
    position: Vec<usize>,
    gamma: usize,
}

impl DcSearch<'_> {
    /// The alive vertices are `N[v_i]` plus those not yet dominated by `T`.
    fn run(&self, alive: &mut [bool], t: &mut Vec<usize>, budget: usize, stats: &mut Stats) -> Option<Vec<usize>> {
        stats.bump("search_nodes");
        let g = self.g;
        let v = self.first;
        let dominated = |x: usize| t.iter().any(|&y| x == y || g.has_edge(x, y));
        if g.vertices().all(|x| !alive[x] || dominated(x)) {
            return Some(t.clone());
        }
        if budget == 0 {
            return None;
        }
        let w = g
            .vertices()
            .find(|&x| alive[x] && x != v && !g.has_edge(v, x))
            .expect("an undominated vertex is a non-neighbour of v_i");
        let branch: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&u| alive[u] && self.position[u] >= self.rank && t.iter().all(|&x| g.has_edge(x, u)))
            .collect();
        if self.gamma >= 2 {
            assert!(
                branch.len() < self.gamma,
                "dominating clique fan-out {} exceeds γ - 1 = {}",
                branch.len(),
                self.gamma - 1
            );
        }
        stats.max("max_branch_width", branch.len() as u64);

        for u in branch {
            let dropped: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&x| alive[x] && x != v && !g.has_edge(v, x))
                .collect();
            for &x in &dropped {
                alive[x] = false;
            }
            t.push(u);
            let found = self.run(alive, t, budget - 1, stats);
            t.pop();
            for &x in &dropped {
                alive[x] = true;
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::predicates::{is_clique, is_dominating, is_independent};

    #[test]
    fn ids_examples() {
        let c4 = cycle(4);
        let ans = solve_ids(&c4, 2);
        let w = ans.witness_set().unwrap();
        assert!(is_independent(&c4, w) && is_dominating(&c4, w) && w.len() == 2);
        assert!(!solve_ids(&c4, 1).decision);
        assert_eq!(solve_ids(&star(4), 1).witness_set(), Some(&VertexSet::from([0])));
        let two = disjoint_cliques(&[3, 3]);
        assert!(solve_ids(&two, 2).decision);
        assert!(!solve_ids(&two, 1).decision);
        assert!(solve_ids(&Graph::empty(0), 0).decision);
        assert!(!solve_ids(&Graph::empty(1), 0).decision);
    }

    #[test]
    fn dc_examples() {
        let p3 = path(3);
        assert_eq!(solve_dominating_clique(&p3, 1).witness_set(), Some(&VertexSet::from([1])));
        assert!(!solve_dominating_clique(&cycle(5), 2).decision);
        let c4 = cycle(4);
        let ans = solve_dominating_clique(&c4, 2);
        let w = ans.witness_set().unwrap();
        assert!(is_clique(&c4, w) && is_dominating(&c4, w));
        assert!(solve_dominating_clique(&Graph::empty(0), 0).decision);
        assert!(!solve_dominating_clique(&Graph::empty(2), 3).decision);
    }
}
