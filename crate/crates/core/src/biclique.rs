//! Non-induced and induced bicliques.
//!
//! A vertex set `U` is a non-induced biclique when the complement of `G[U]`
//! is disconnected: any grouping of its complement components into two
//! non-empty sides gives a complete bipartite spanning subgraph.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::answer::{BicliqueWitness, ProblemAnswer, Stats, Witness};
use crate::closure::{c_closure, closure_ordering, weak_closure};
use crate::dense::{for_subsets_up_to, DEFAULT_COMMON_CAP};
use crate::error::{Error, Result};
use crate::graph::{complement_components_unchecked, Graph};
use crate::kernel::solve_independent_set;
use crate::predicates::{is_independent, is_non_induced_biclique};
use crate::subset_sum::{solve_subset_sum_range, SubsetSumInstance};
use crate::vertex_set::VertexSet;

fn common_error(observed: usize, limit: usize, partial: String) -> Error {
    Error::Resource {
        what: "common neighbourhood size",
        observed,
        limit,
        partial,
    }
}

/// `⋂_{b ∈ B} N(b)` restricted to `alive`; `B` must be non-empty.
fn common_neighbourhood(g: &Graph, side: &[usize], alive: &[bool]) -> Vec<usize> {
    let mut out: Vec<usize> = g.neighbors(side[0]).iter().copied().filter(|&w| alive[w]).collect();
    for &b in &side[1..] {
        out.retain(|&w| g.has_edge(b, w));
    }
    out
}

/// All maximal non-induced bicliques, sorted.
///
/// Walks the closure ordering backwards. A maximal biclique `S` of `G_i`
/// through `v = v_i` either equals `N_{G_i}[v]` or has a non-neighbour `u` of
/// `v` in the complement component of `v`; then the opposite side `B` lies in
/// `N(v) ∩ N(u)` and maximality forces `S = B ∪ ⋂_{b ∈ B} N_{G_i}(b)`.
pub fn enumerate_maximal_non_induced_bicliques(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_maximal_non_induced_bicliques_with(g, DEFAULT_COMMON_CAP)
}

pub fn enumerate_maximal_non_induced_bicliques_with(g: &Graph, common_cap: usize) -> Result<Vec<VertexSet>> {
    let ordering = closure_ordering(g);
    let n = g.n();
    let mut alive = vec![false; n];
    let mut family: Vec<VertexSet> = Vec::new();

    for i in (0..n).rev() {
        let v = ordering.order()[i];
        alive[v] = true;
        let live: Vec<usize> = (0..n).filter(|&w| alive[w]).collect();
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();

        let mut candidates: HashSet<VertexSet> = HashSet::new();
        for old in &family {
            candidates.insert(old.clone());
            candidates.insert(old.with(v));
        }
        candidates.insert(VertexSet::from_unsorted(nbrs.iter().copied().chain([v]).collect()));

        for &u in &live {
            if u == v || g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = nbrs.iter().copied().filter(|&w| g.has_edge(u, w)).collect();
            if common.len() > common_cap {
                return Err(common_error(
                    common.len(),
                    common_cap,
                    format!("{} maximal bicliques collected before the abort", family.len()),
                ));
            }
            for_subsets_up_to(&common, common.len(), &mut |side| {
                if side.is_empty() {
                    return;
                }
                let other = common_neighbourhood(g, side, &alive);
                candidates.insert(VertexSet::from_unsorted(side.iter().copied().chain(other).collect()));
            });
        }

        let mut next: Vec<VertexSet> = candidates
            .into_par_iter()
            .filter(|cand| {
                is_non_induced_biclique(g, cand)
                    && live
                        .iter()
                        .all(|&w| cand.contains(w) || !is_non_induced_biclique(g, &cand.with(w)))
            })
            .collect();
        next.sort_unstable();
        family = next;
    }
    Ok(family)
}

fn biclique_yes(side_s: VertexSet, side_t: VertexSet, induced: bool) -> ProblemAnswer {
    ProblemAnswer::yes(Witness::Biclique(BicliqueWitness {
        side_s,
        side_t,
        induced,
    }))
}

/// Sides `S, T` with `|S| ≥ k1`, `|T| ≥ k2` and every cross pair adjacent.
///
/// Tries a subset-sum split of the complement components of every maximal
/// biclique first. Bicliques that cut through a component of the maximal set
/// containing them are not visible to that split, so a negative result is
/// confirmed by an exact search along the closure ordering.
pub fn solve_non_induced_biclique(g: &Graph, k1: usize, k2: usize) -> Result<ProblemAnswer> {
    if k1 == 0 || k2 == 0 {
        return Err(Error::Parameter("non-induced biclique needs k1, k2 >= 1".into()));
    }
    let family = enumerate_maximal_non_induced_bicliques(g)?;
    let mut stats = Stats::default();
    stats.add("maximal_bicliques", family.len() as u64);

    let hit = family.par_iter().find_map_first(|u| {
        if u.len() < k1 + k2 {
            return None;
        }
        let comps = complement_components_unchecked(g, u.as_slice());
        let inst = SubsetSumInstance::new(comps.iter().map(VertexSet::len).collect(), k1, u.len() - k2).ok()?;
        let picked = solve_subset_sum_range(&inst)?;
        let side_s = picked
            .iter()
            .fold(VertexSet::new(), |acc, &i| acc.union(&comps[i]));
        let side_t: VertexSet = u.iter().filter(|&w| !side_s.contains(w)).collect();
        Some((side_s, side_t))
    });
    if let Some((side_s, side_t)) = hit {
        stats.bump("subset_sum_hit");
        return Ok(biclique_yes(side_s, side_t, false).with_stats(&stats));
    }

    stats.bump("exact_fallback");
    let found = exact_biclique(g, k1, k2, DEFAULT_COMMON_CAP)?;
    Ok(match found {
        Some((s, t)) => biclique_yes(VertexSet::from_unsorted(s), VertexSet::from_unsorted(t), false),
        None => ProblemAnswer::no(),
    }
    .with_stats(&stats))
}

/// Exact search. Let `v` be the first vertex of a solution in the closure
/// ordering. Either the side of `v` holds a non-neighbour `u` of `v`, so the
/// other side lies in `N(v) ∩ N(u)`; or the whole solution lies in `N[v]`, and
/// dropping `v` leaves a smaller solution inside `G_i[N(v)]`.
fn exact_biclique(g: &Graph, k1: usize, k2: usize, cap: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if k1 == 0 || k2 == 0 {
        let need = k1.max(k2);
        if g.n() < need {
            return Ok(None);
        }
        let side: Vec<usize> = (0..need).collect();
        return Ok(Some(if k1 == 0 { (vec![], side) } else { (side, vec![]) }));
    }
    let ordering = closure_ordering(g);
    let n = g.n();
    let mut alive = vec![true; n];
    for &v in ordering.order() {
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        for u in (0..n).filter(|&u| alive[u] && u != v && !g.has_edge(u, v)) {
            let common: Vec<usize> = nbrs.iter().copied().filter(|&w| g.has_edge(u, w)).collect();
            if common.len() > cap {
                return Err(common_error(common.len(), cap, "exact biclique search".into()));
            }
            let mut found = None;
            for_subsets_up_to(&common, common.len(), &mut |side| {
                if side.is_empty() || found.is_some() {
                    return;
                }
                let other = common_neighbourhood(g, side, &alive);
                if other.len() >= k1 && side.len() >= k2 {
                    found = Some((other, side.to_vec()));
                } else if side.len() >= k1 && other.len() >= k2 {
                    found = Some((side.to_vec(), other));
                }
            });
            if found.is_some() {
                return Ok(found);
            }
        }

        let (sub, map) = g.induced_subgraph(&VertexSet::from_sorted(nbrs))?;
        let lift = |side: Vec<usize>| -> Vec<usize> { side.into_iter().map(|w| map[w]).collect() };
        if let Some((s, t)) = exact_biclique(&sub, k1 - 1, k2, cap)? {
            let mut s = lift(s);
            s.push(v);
            return Ok(Some((s, lift(t))));
        }
        if let Some((s, t)) = exact_biclique(&sub, k1, k2 - 1, cap)? {
            let mut t = lift(t);
            t.push(v);
            return Ok(Some((lift(s), t)));
        }
        alive[v] = false;
    }
    Ok(None)
}

fn ceil_sqrt(k: usize) -> usize {
    let mut r = (k as f64).sqrt() as usize;
    while r * r < k {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= k {
        r -= 1;
    }
    r
}

/// A non-induced biclique with `|S|·|T| ≥ k`.
///
/// If `a ≤ b` and `ab ≥ k` then `min(a, ⌈√k⌉)` and `⌈k / min(a, ⌈√k⌉)⌉ ≤ b`
/// are met by a sub-biclique, so the `(k1, ⌈k/k1⌉)` grid with
/// `k1 ≤ ⌈√k⌉` covers every solution.
pub fn solve_max_edge_non_induced_biclique(g: &Graph, k: usize) -> Result<ProblemAnswer> {
    if k == 0 {
        return Err(Error::Parameter("max-edge biclique needs k >= 1".into()));
    }
    for k1 in 1..=ceil_sqrt(k) {
        let k2 = k.div_ceil(k1);
        let answer = solve_non_induced_biclique(g, k1, k2)?;
        if answer.decision {
            return Ok(answer.with_stat("k1", k1 as u64).with_stat("k2", k2 as u64));
        }
    }
    Ok(ProblemAnswer::no())
}

/// Independent sides of exactly `k` vertices each, all cross pairs adjacent.
///
/// An induced `K_{k,k}` has weak closure `k + 1`, so `k ≥ γ` is a no. Below
/// that, the first solution vertex `v` has a same-side partner `v'` and the
/// other side sits in `N(v) ∩ N(v')`, which has fewer than `γ` vertices.
pub fn solve_induced_kk_biclique(g: &Graph, k: usize) -> Result<ProblemAnswer> {
    if k == 0 {
        return Ok(biclique_yes(VertexSet::new(), VertexSet::new(), true));
    }
    if k == 1 {
        return Ok(match g.edges().next() {
            Some((u, v)) => biclique_yes(VertexSet::singleton(u), VertexSet::singleton(v), true),
            None => ProblemAnswer::no(),
        });
    }
    let gamma = weak_closure(g);
    if k >= gamma {
        return Ok(ProblemAnswer::no().with_stat("gamma", gamma as u64));
    }
    let ordering = closure_ordering(g);
    let n = g.n();
    let order = ordering.order();

    let result = (0..n).into_par_iter().map(|i| -> Result<Option<BicliqueWitness>> {
        let v = order[i];
        let in_suffix = |w: usize| ordering.position(w) >= i;
        for &v2 in &order[i + 1..] {
            if g.has_edge(v, v2) {
                continue;
            }
            let common: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| in_suffix(w) && g.has_edge(v2, w))
                .collect();
            if common.len() < k {
                continue;
            }
            let mut found: Result<Option<BicliqueWitness>> = Ok(None);
            for_subsets_up_to(&common, k, &mut |t| {
                if t.len() != k || !matches!(found, Ok(None)) {
                    return;
                }
                let side_t = VertexSet::from_sorted(t.to_vec());
                if !is_independent(g, &side_t) {
                    return;
                }
                let pool: Vec<usize> = g
                    .neighbors(t[0])
                    .iter()
                    .copied()
                    .filter(|&w| {
                        in_suffix(w)
                            && w != v
                            && w != v2
                            && !g.has_edge(v, w)
                            && !g.has_edge(v2, w)
                            && t[1..].iter().all(|&x| g.has_edge(x, w))
                    })
                    .collect();
                if pool.len() < k - 2 {
                    return;
                }
                found = (|| {
                    let (sub, map) = g.induced_subgraph(&VertexSet::from_sorted(pool))?;
                    let answer = solve_independent_set(&sub, k - 2)?;
                    Ok(answer.witness_set().map(|rest| BicliqueWitness {
                        side_s: rest.map_through(&map).with(v).with(v2),
                        side_t: side_t.clone(),
                        induced: true,
                    }))
                })();
            });
            if !matches!(found, Ok(None)) {
                return found;
            }
        }
        Ok(None)
    });
    let hit = result.find_map_first(|r| r.transpose());
    Ok(match hit.transpose()? {
        Some(w) => ProblemAnswer::yes(Witness::Biclique(w)),
        None => ProblemAnswer::no(),
    }
    .with_stat("gamma", gamma as u64))
}

/// An independent set with exactly `k1` vertices in `V1` and `k2` in `V2`.
pub fn solve_bicolored_independent_set(
    g: &Graph,
    v1: &VertexSet,
    v2: &VertexSet,
    k1: usize,
    k2: usize,
) -> Result<ProblemAnswer> {
    g.check_set(v1)?;
    g.check_set(v2)?;
    if !v1.is_disjoint(v2) || v1.len() + v2.len() != g.n() {
        return Err(Error::Contract("V1 and V2 must partition the vertex set".into()));
    }
    let part: Vec<usize> = g.vertices().map(|v| usize::from(v2.contains(v))).collect();
    let mut nodes = 0u64;
    let found = bicolored(g, &part, g.vertices().collect(), [k1, k2], &mut nodes);
    Ok(match found {
        Some(set) => ProblemAnswer::yes_set(VertexSet::from_unsorted(set)),
        None => ProblemAnswer::no(),
    }
    .with_stat("search_nodes", nodes))
}

/// Branches on a vertex of maximum degree among `alive`: drop it, or take it
/// and delete its closed neighbourhood.
fn bicolored(g: &Graph, part: &[usize], alive: Vec<usize>, need: [usize; 2], nodes: &mut u64) -> Option<Vec<usize>> {
    *nodes += 1;
    if need == [0, 0] {
        return Some(Vec::new());
    }
    let have = |p: usize| alive.iter().filter(|&&v| part[v] == p).count();
    if have(0) < need[0] || have(1) < need[1] {
        return None;
    }
    let (x, deg) = alive
        .iter()
        .map(|&v| (v, alive.iter().filter(|&&w| g.has_edge(v, w)).count()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .expect("alive is non-empty when something is still needed");
    if deg == 0 {
        // Everything left is isolated: take the lowest ids per part.
        let mut out = Vec::new();
        for (p, &count) in need.iter().enumerate() {
            out.extend(alive.iter().copied().filter(|&v| part[v] == p).take(count));
        }
        return Some(out);
    }
    if need[part[x]] > 0 {
        let rest: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&w| w != x && !g.has_edge(x, w))
            .collect();
        let mut need_in = need;
        need_in[part[x]] -= 1;
        if let Some(mut set) = bicolored(g, part, rest, need_in, nodes) {
            set.push(x);
            return Some(set);
        }
    }
    let rest: Vec<usize> = alive.into_iter().filter(|&w| w != x).collect();
    bicolored(g, part, rest, need, nodes)
}

/// Induced `(k1, k2)`-biclique with both sides of size at least 2.
///
/// Every solution contains an induced 4-cycle `(a, c, b, d)` with `a, b` in
/// `S` and `c, d` in `T`. The remaining `T` vertices lie in `N(a) ∩ N(b)` and
/// the remaining `S` vertices in `N(c) ∩ N(d)`, so each cycle leaves a
/// bicoloured independent set problem on at most `2c - 2` vertices, where
/// cross pairs conflict when they are non-adjacent in `G`.
pub fn solve_induced_biclique_cclosed(g: &Graph, k1: usize, k2: usize) -> Result<ProblemAnswer> {
    if k1 < 2 || k2 < 2 {
        return Err(Error::Parameter(
            "the 4-cycle reduction needs both sides >= 2; use the diamond-free or general routine".into(),
        ));
    }
    let c = c_closure(g);
    let n = g.n();
    let common = |a: usize, b: usize| -> Vec<usize> {
        g.neighbors(a).iter().copied().filter(|&w| g.has_edge(b, w)).collect()
    };
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();

    let outcome = pairs.par_iter().map(|&(a, b)| -> Result<(Option<BicliqueWitness>, u64, usize)> {
        let x = common(a, b);
        let mut cycles = 0u64;
        let mut largest = 0usize;
        for (ci, &cv) in x.iter().enumerate() {
            for &dv in &x[ci + 1..] {
                if g.has_edge(cv, dv) {
                    continue;
                }
                cycles += 1;
                let t_cands: Vec<usize> = x
                    .iter()
                    .copied()
                    .filter(|&w| w != cv && w != dv && !g.has_edge(cv, w) && !g.has_edge(dv, w))
                    .collect();
                let s_cands: Vec<usize> = common(cv, dv)
                    .into_iter()
                    .filter(|&w| w != a && w != b && !g.has_edge(a, w) && !g.has_edge(b, w))
                    .collect();
                let size = t_cands.len() + s_cands.len();
                largest = largest.max(size);
                assert!(size + 2 <= 2 * c, "reduced instance of {size} vertices exceeds 2c - 2");
                if s_cands.len() < k1 - 2 || t_cands.len() < k2 - 2 {
                    continue;
                }
                let (h, map) = reduced_instance(g, &s_cands, &t_cands)?;
                let part: Vec<usize> = map.iter().map(|&w| usize::from(t_cands.contains(&w))).collect();
                let mut nodes = 0;
                if let Some(chosen) = bicolored(&h, &part, h.vertices().collect(), [k1 - 2, k2 - 2], &mut nodes) {
                    let (mut s, mut t) = (vec![a, b], vec![cv, dv]);
                    for i in chosen {
                        if part[i] == 0 {
                            s.push(map[i]);
                        } else {
                            t.push(map[i]);
                        }
                    }
                    let w = BicliqueWitness {
                        side_s: VertexSet::from_unsorted(s),
                        side_t: VertexSet::from_unsorted(t),
                        induced: true,
                    };
                    return Ok((Some(w), cycles, largest));
                }
            }
        }
        Ok((None, cycles, largest))
    });
    let results: Vec<Result<(Option<BicliqueWitness>, u64, usize)>> = outcome.collect();
    let mut stats = Stats::default();
    stats.add("c", c as u64);
    let mut hit = None;
    for r in results {
        let (w, cycles, largest) = r?;
        stats.add("four_cycles", cycles);
        stats.max("max_reduced_size", largest as u64);
        if hit.is_none() {
            hit = w;
        }
    }
    Ok(match hit {
        Some(w) => ProblemAnswer::yes(Witness::Biclique(w)),
        None => ProblemAnswer::no(),
    }
    .with_stats(&stats))
}

/// Graph on `s_cands ∪ t_cands` keeping edges inside each part and
/// complementing the pairs across parts.
fn reduced_instance(g: &Graph, s_cands: &[usize], t_cands: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let map: Vec<usize> = s_cands.iter().chain(t_cands).copied().collect();
    let ns = s_cands.len();
    let mut edges = Vec::new();
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            let same_part = (i < ns) == (j < ns);
            if g.has_edge(map[i], map[j]) == same_part {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::from_edges(map.len(), &edges)?, map))
}

/// Four vertices inducing `K_4` minus an edge, if any.
pub fn find_diamond(g: &Graph) -> Option<[usize; 4]> {
    for (u, v) in g.edges() {
        let common: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        for (i, &x) in common.iter().enumerate() {
            if let Some(&y) = common[i + 1..].iter().find(|&&y| !g.has_edge(x, y)) {
                return Some([u, v, x, y]);
            }
        }
    }
    None
}

/// Components of `G[N(v)]` in order of their smallest vertex.
fn neighbourhood_components(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let nbrs = g.neighbors(v);
    let mut seen: HashSet<usize> = HashSet::new();
    let mut comps = Vec::new();
    for &start in nbrs {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut at = 0;
        while at < comp.len() {
            let x = comp[at];
            at += 1;
            for &y in g.neighbors(x) {
                if nbrs.binary_search(&y).is_ok() && seen.insert(y) {
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Induced `(1, k2)`-biclique on a diamond-free graph, where every
/// neighbourhood is a disjoint union of cliques.
pub fn solve_induced_1k_diamond_free(g: &Graph, k2: usize) -> Result<ProblemAnswer> {
    if let Some(d) = find_diamond(g) {
        let labels: Vec<&str> = d.iter().map(|&v| g.label(v)).collect();
        return Err(Error::Contract(format!(
            "graph is not diamond-free: {{{}}} induces K4 minus an edge",
            labels.join(", ")
        )));
    }
    for v in g.vertices() {
        let comps = neighbourhood_components(g, v);
        if comps.len() >= k2 {
            let side_t: VertexSet = comps.iter().take(k2).map(|c| c[0]).collect();
            return Ok(biclique_yes(VertexSet::singleton(v), side_t, true));
        }
    }
    Ok(ProblemAnswer::no())
}

fn swap_sides(mut answer: ProblemAnswer) -> ProblemAnswer {
    if let Some(Witness::Biclique(w)) = answer.witness.as_mut() {
        std::mem::swap(&mut w.side_s, &mut w.side_t);
    }
    answer
}

fn independent_side(g: &Graph, k: usize) -> Result<ProblemAnswer> {
    let answer = solve_independent_set(g, k)?;
    Ok(match answer.witness_set() {
        Some(set) => biclique_yes(VertexSet::new(), set.clone(), true),
        None => ProblemAnswer::no(),
    })
}

/// Induced `(k1, k2)`-biclique on a 2-closed graph, in polynomial time.
pub fn solve_induced_biclique_2closed(g: &Graph, k1: usize, k2: usize) -> Result<ProblemAnswer> {
    let c = c_closure(g);
    if c > 2 {
        return Err(Error::Parameter(format!("graph is {c}-closed, not 2-closed")));
    }
    if k1 > k2 {
        return solve_induced_biclique_2closed(g, k2, k1).map(swap_sides);
    }
    match k1 {
        0 => independent_side(g, k2),
        1 => {
            assert!(find_diamond(g).is_none(), "2-closed graphs are diamond-free");
            solve_induced_1k_diamond_free(g, k2)
        }
        _ => solve_induced_biclique_cclosed(g, k1, k2),
    }
}

/// Induced `(k1, k2)`-biclique on any graph: an independent set when a side
/// is empty, a vertex with an independent set in its neighbourhood when a side
/// is a single vertex, and the 4-cycle reduction otherwise.
pub fn solve_induced_biclique(g: &Graph, k1: usize, k2: usize) -> Result<ProblemAnswer> {
    if k1 > k2 {
        return solve_induced_biclique(g, k2, k1).map(swap_sides);
    }
    match k1 {
        0 => independent_side(g, k2),
        1 => {
            for v in g.vertices() {
                if g.degree(v) < k2 {
                    continue;
                }
                let (sub, map) = g.induced_subgraph(&VertexSet::from_sorted(g.neighbors(v).to_vec()))?;
                if let Some(set) = solve_independent_set(&sub, k2)?.witness_set() {
                    return Ok(biclique_yes(VertexSet::singleton(v), set.map_through(&map), true));
                }
            }
            Ok(ProblemAnswer::no())
        }
        _ => solve_induced_biclique_cclosed(g, k1, k2),
    }
}
