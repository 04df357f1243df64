//! Maximal clique enumeration rooted along a closure ordering.
//!
//! Each maximal clique is reported from the branch of its earliest vertex `v_i`
//! in the closure ordering: the candidate set is `N(v_i) ∩ V(G_i)` and the
//! exclusion set holds the earlier neighbours. The inner recursion is
//! Bron–Kerbosch with a pivot drawn from the candidate set.

use rayon::prelude::*;

use crate::closure::closure_ordering;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All maximal cliques, lexicographically sorted. The graph with no vertices
/// has exactly one maximal clique, the empty set.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    if g.is_empty() {
        return vec![VertexSet::new()];
    }
    let mut out: Vec<VertexSet> = rooted_branches(g)
        .into_par_iter()
        .flat_map_iter(|(v, p, x)| {
            let mut found = Vec::new();
            let mut r = vec![v];
            expand(g, &mut r, p, x, &mut |clique| {
                found.push(VertexSet::from_unsorted(clique.to_vec()))
            });
            found
        })
        .collect();
    out.sort_unstable();
    out
}

/// Number of maximal cliques, without materialising them.
pub fn count_maximal_cliques(g: &Graph) -> usize {
    if g.is_empty() {
        return 1;
    }
    rooted_branches(g)
        .into_par_iter()
        .map(|(v, p, x)| {
            let mut count = 0usize;
            let mut r = vec![v];
            expand(g, &mut r, p, x, &mut |_| count += 1);
            count
        })
        .sum()
}

type Branch = (usize, Vec<usize>, Vec<usize>);

fn rooted_branches(g: &Graph) -> Vec<Branch> {
    let ordering = closure_ordering(g);
    ordering
        .order()
        .iter()
        .map(|&v| {
            let pos = ordering.position(v);
            let (mut later, mut earlier) = (Vec::new(), Vec::new());
            for &w in g.neighbors(v) {
                if ordering.position(w) > pos {
                    later.push(w);
                } else {
                    earlier.push(w);
                }
            }
            (v, later, earlier)
        })
        .collect()
}

fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if p.is_empty() {
        if x.is_empty() {
            visit(r);
        }
        return;
    }
    let pivot = choose_pivot(g, &p);
    let branch: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&w| w != pivot && !g.has_edge(pivot, w))
        .chain(std::iter::once(pivot))
        .collect();
    for w in branch {
        let p_next: Vec<usize> = p.iter().copied().filter(|&y| g.has_edge(w, y)).collect();
        let x_next: Vec<usize> = x.iter().copied().filter(|&y| g.has_edge(w, y)).collect();
        r.push(w);
        expand(g, r, p_next, x_next, visit);
        r.pop();
        p.retain(|&y| y != w);
        let at = x.partition_point(|&y| y < w);
        x.insert(at, w);
    }
}

/// Candidate with the most neighbours inside the candidate set, lowest id on ties.
fn choose_pivot(g: &Graph, p: &[usize]) -> usize {
    let mut best = (0usize, usize::MAX);
    for &u in p {
        let inside = p.iter().filter(|&&w| g.has_edge(u, w)).count();
        if inside > best.0 || (inside == best.0 && u < best.1) {
            best = (inside, u);
        }
    }
    best.1
}
