//! Maximal s-plexes and s-defective cliques.
//!
//! Both enumerators walk the closure ordering backwards, turning the family of
//! maximal sets of `G_{i+1}` into that of `G_i`. Every maximal set `S` of
//! `G_i` falls in one of four cases relative to `v = v_i`:
//!
//! 1. `v ∉ S`: `S` was already maximal in `G_{i+1}`.
//! 2. `S - v` is maximal in `G_{i+1}`.
//! 3. `S` holds a non-neighbour `u` of `v`: `S` splits into `v`, the few
//!    non-neighbours of `v`, the few neighbours of `v` missing `u`, and a part
//!    of `N(v) ∩ N(u)`, which has fewer than `γ` vertices.
//! 4. `S ⊆ N[v]` and `S - v` is not maximal in `G_{i+1}`. The vertex that
//!    extends `S - v` must be a non-neighbour `u` of `v` (otherwise it would
//!    extend `S` too), so `S - v` again splits along `N(u)`.
//!
//! Candidates over-approximate these cases and are filtered by the predicate
//! and a maximality test inside `G_i`.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;

use crate::answer::{ProblemAnswer, Stats};
use crate::cliques::enumerate_maximal_cliques;
use crate::closure::{c_closure, closure_ordering};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::predicates::{check_defective_clique, check_splex, is_clique};
use crate::vertex_set::VertexSet;

/// Default cap on `|N(v) ∩ N(u)|`, whose subsets are enumerated outright.
pub const DEFAULT_COMMON_CAP: usize = 25;
/// Default number of clique collections the cover solver may examine.
pub const DEFAULT_COLLECTION_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    SPlex,
    Defective,
}

impl FamilyKind {
    pub fn holds(self, g: &Graph, set: &VertexSet, s: usize) -> bool {
        match self {
            FamilyKind::SPlex => check_splex(g, set, s),
            FamilyKind::Defective => check_defective_clique(g, set, s),
        }
    }

    /// Upper bound on the number of maximal sets in a weakly `γ`-closed graph
    /// on `n` vertices, saturating.
    pub fn family_size_bound(self, s: usize, gamma: usize, n: usize) -> u128 {
        let exp = match self {
            FamilyKind::SPlex => 2 * s - 1,
            FamilyKind::Defective => s + 1,
        };
        let pow2 = if gamma >= 127 { u128::MAX } else { 1u128 << gamma };
        let npow = (n as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
        pow2.saturating_mul(npow).saturating_add(1)
    }
}

/// The maximal sets of one kind, sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumFamily {
    pub sets: Vec<VertexSet>,
    pub fingerprint: u64,
    pub s: usize,
    pub kind: FamilyKind,
}

impl EnumFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Hash of the vertex count and sorted edge list.
pub fn graph_fingerprint(g: &Graph) -> u64 {
    let mut h = DefaultHasher::new();
    g.n().hash(&mut h);
    for e in g.edges() {
        e.hash(&mut h);
    }
    h.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub common_cap: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            common_cap: DEFAULT_COMMON_CAP,
        }
    }
}

pub fn enumerate_maximal_splexes(g: &Graph, s: usize) -> Result<EnumFamily> {
    enumerate_maximal_splexes_with(g, s, EnumOptions::default())
}

pub fn enumerate_maximal_splexes_with(g: &Graph, s: usize, options: EnumOptions) -> Result<EnumFamily> {
    if s < 2 {
        return Err(Error::Parameter(
            "s-plex enumeration needs s >= 2; 1-plexes are cliques, use clique enumeration".into(),
        ));
    }
    enumerate(g, FamilyKind::SPlex, s, options)
}

pub fn enumerate_maximal_defective_cliques(g: &Graph, s: usize) -> Result<EnumFamily> {
    enumerate_maximal_defective_cliques_with(g, s, EnumOptions::default())
}

pub fn enumerate_maximal_defective_cliques_with(
    g: &Graph,
    s: usize,
    options: EnumOptions,
) -> Result<EnumFamily> {
    if s == 0 {
        return Err(Error::Parameter(
            "defective clique enumeration needs s >= 1; 0-defective cliques are cliques, use clique enumeration"
                .into(),
        ));
    }
    enumerate(g, FamilyKind::Defective, s, options)
}

/// Calls `f` on every subset of `items` with at most `max` members, in
/// lexicographic order of index tuples, starting with the empty subset.
pub(crate) fn for_subsets_up_to(items: &[usize], max: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], start: usize, max: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        f(cur);
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i + 1, max, cur, f);
            cur.pop();
        }
    }
    go(items, 0, max, &mut Vec::new(), f);
}

fn enumerate(g: &Graph, kind: FamilyKind, s: usize, options: EnumOptions) -> Result<EnumFamily> {
    let ordering = closure_ordering(g);
    let n = g.n();
    let mut alive = vec![false; n];
    let mut family: Vec<VertexSet> = vec![VertexSet::new()];

    for i in (0..n).rev() {
        let v = ordering.order()[i];
        alive[v] = true;
        let live: Vec<usize> = (0..n).filter(|&w| alive[w]).collect();
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        let non_nbrs: Vec<usize> = live
            .iter()
            .copied()
            .filter(|&w| w != v && !g.has_edge(v, w))
            .collect();

        let mut candidates: HashSet<VertexSet> = HashSet::new();
        for old in &family {
            candidates.insert(old.clone());
            candidates.insert(old.with(v));
        }
        let closed = VertexSet::from_unsorted(nbrs.iter().copied().chain([v]).collect());
        candidates.insert(closed);

        // Split of N(v) along N(u), with the cap on the part we take all subsets of.
        let split = |u: usize| -> Result<(Vec<usize>, Vec<usize>)> {
            let (common, missing): (Vec<usize>, Vec<usize>) =
                nbrs.iter().copied().partition(|&w| g.has_edge(u, w));
            if common.len() > options.common_cap {
                return Err(Error::Resource {
                    what: "common neighbourhood size",
                    observed: common.len(),
                    limit: options.common_cap,
                    partial: format!(
                        "{} maximal sets collected for the {} smallest vertices of the ordering",
                        family.len(),
                        n - i - 1
                    ),
                });
            }
            Ok((common, missing))
        };

        // Case 3: A holds the non-neighbours of v, u = first of A.
        let (a_cap, b_cap) = match kind {
            FamilyKind::SPlex => (s - 1, s - 1),
            FamilyKind::Defective => (s, s),
        };
        let mut failure = None;
        for_subsets_up_to(&non_nbrs, a_cap, &mut |a| {
            if a.is_empty() || failure.is_some() {
                return;
            }
            let u = a[0];
            let (common, missing) = match split(u) {
                Ok(parts) => parts,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            };
            let b_max = match kind {
                FamilyKind::SPlex => b_cap,
                FamilyKind::Defective => b_cap - a.len(),
            };
            let base = VertexSet::from_unsorted(a.iter().copied().chain([v]).collect());
            if !kind.holds(g, &base, s) {
                return;
            }
            for_subsets_up_to(&missing, b_max, &mut |b| {
                let with_b = VertexSet::from_unsorted(base.iter().chain(b.iter().copied()).collect());
                if !kind.holds(g, &with_b, s) {
                    return;
                }
                for_subsets_up_to(&common, common.len(), &mut |c| {
                    let cand = VertexSet::from_unsorted(with_b.iter().chain(c.iter().copied()).collect());
                    if kind.holds(g, &cand, s) {
                        candidates.insert(cand);
                    }
                });
            });
        });
        if let Some(e) = failure {
            return Err(e);
        }

        // Case 4: S - v extends by a non-neighbour u of v.
        let d_cap = match kind {
            FamilyKind::SPlex => s - 1,
            FamilyKind::Defective => s,
        };
        for &u in &non_nbrs {
            let (common, missing) = split(u)?;
            for_subsets_up_to(&missing, d_cap, &mut |d| {
                let with_d = VertexSet::from_unsorted(d.iter().copied().chain([v]).collect());
                if !kind.holds(g, &with_d, s) {
                    return;
                }
                for_subsets_up_to(&common, common.len(), &mut |e| {
                    let cand = VertexSet::from_unsorted(with_d.iter().chain(e.iter().copied()).collect());
                    if kind.holds(g, &cand, s) {
                        candidates.insert(cand);
                    }
                });
            });
        }

        let mut next: Vec<VertexSet> = candidates
            .into_par_iter()
            .filter(|cand| {
                kind.holds(g, cand, s)
                    && live
                        .iter()
                        .all(|&w| cand.contains(w) || !kind.holds(g, &cand.with(w), s))
            })
            .collect();
        next.sort_unstable();
        family = next;
    }

    if n == 0 {
        family = vec![VertexSet::new()];
    }
    debug_assert!(family.len() as u128 <= kind.family_size_bound(s, ordering.gamma(), n));
    Ok(EnumFamily {
        sets: family,
        fingerprint: graph_fingerprint(g),
        s,
        kind,
    })
}

fn best_of(sets: &[VertexSet], k: usize) -> ProblemAnswer {
    // Largest set, lexicographically smallest among equals.
    let best = sets
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    match best {
        Some(set) if set.len() >= k => ProblemAnswer::yes_set(set.clone()),
        _ => ProblemAnswer::no(),
    }
}

/// Is there an s-plex with at least `k` vertices?
pub fn solve_splex(g: &Graph, s: usize, k: usize) -> Result<ProblemAnswer> {
    if s == 0 {
        return Err(Error::Parameter("s-plex needs s >= 1".into()));
    }
    if k == 0 {
        return Ok(ProblemAnswer::yes_set(VertexSet::new()));
    }
    let sets = if s == 1 {
        enumerate_maximal_cliques(g)
    } else {
        enumerate_maximal_splexes(g, s)?.sets
    };
    Ok(best_of(&sets, k).with_stat("family_size", sets.len() as u64))
}

/// Is there an s-defective clique with at least `k` vertices?
pub fn solve_defective_clique(g: &Graph, s: usize, k: usize) -> Result<ProblemAnswer> {
    if k == 0 {
        return Ok(ProblemAnswer::yes_set(VertexSet::new()));
    }
    let sets = if s == 0 {
        enumerate_maximal_cliques(g)
    } else {
        enumerate_maximal_defective_cliques(g, s)?.sets
    };
    Ok(best_of(&sets, k).with_stat("family_size", sets.len() as u64))
}

/// Largest `b` with `b(b-1)/2 ≤ s`, which is `⌊√(2s + 1/4) + 1/2⌋`.
pub fn cover_bound(s: usize) -> usize {
    let mut b = 1;
    while (b + 1) * b / 2 <= s {
        b += 1;
    }
    b
}

/// Partitions an s-defective clique into at most [`cover_bound`] cliques by
/// colouring the complement of `G[S]`.
pub fn clique_cover_of_defective(g: &Graph, set: &VertexSet, s: usize) -> Result<Vec<VertexSet>> {
    if s == 0 {
        return Err(Error::Parameter("clique cover needs s >= 1".into()));
    }
    g.check_set(set)?;
    if !check_defective_clique(g, set, s) {
        return Err(Error::Contract(format!("{set} is not a {s}-defective clique")));
    }
    let members = set.as_slice();
    let missing: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| members.iter().copied().filter(|&w| w != v && !g.has_edge(v, w)).collect())
        .collect();
    let index_of = |v: usize| members.binary_search(&v).expect("member of set");
    let bound = cover_bound(s);

    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(missing[i].len()), members[i]));
    let mut color = vec![usize::MAX; members.len()];
    for &i in &order {
        let used: HashSet<usize> = missing[i].iter().map(|&w| color[index_of(w)]).collect();
        color[i] = (0..).find(|c| !used.contains(c)).expect("some colour is free");
    }
    let mut classes = color.iter().copied().max().map_or(0, |c| c + 1);

    if classes > bound {
        color.iter_mut().for_each(|c| *c = usize::MAX);
        if !exact_colouring(&order, &missing, &index_of, bound, 0, &mut color) {
            return Err(Error::Contract(format!(
                "complement of a {s}-defective clique is not {bound}-colourable"
            )));
        }
        classes = color.iter().copied().max().map_or(0, |c| c + 1);
    }

    let mut cover = vec![Vec::new(); classes];
    for (i, &c) in color.iter().enumerate() {
        cover[c].push(members[i]);
    }
    let mut cover: Vec<VertexSet> = cover.into_iter().map(VertexSet::from_sorted).collect();
    cover.sort_unstable();
    debug_assert!(cover.iter().all(|c| is_clique(g, c)));
    Ok(cover)
}

fn exact_colouring(
    order: &[usize],
    missing: &[Vec<usize>],
    index_of: &dyn Fn(usize) -> usize,
    bound: usize,
    at: usize,
    color: &mut [usize],
) -> bool {
    let Some(&i) = order.get(at) else {
        return true;
    };
    for c in 0..bound {
        if missing[i].iter().all(|&w| color[index_of(w)] != c) {
            color[i] = c;
            if exact_colouring(order, missing, index_of, bound, at + 1, color) {
                return true;
            }
        }
    }
    color[i] = usize::MAX;
    false
}

/// `|S| ≤ c + s` for an s-defective clique `S` with a non-adjacent pair.
pub fn defective_clique_size_bound(g: &Graph, set: &VertexSet, s: usize) -> bool {
    set.len() <= c_closure(g) + s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverOptions {
    pub collection_budget: u64,
}

impl Default for CoverOptions {
    fn default() -> Self {
        Self {
            collection_budget: DEFAULT_COLLECTION_BUDGET,
        }
    }
}

/// Decides s-defective clique by searching unions of few maximal cliques.
pub fn solve_defective_clique_via_cover(g: &Graph, s: usize, k: usize) -> Result<ProblemAnswer> {
    solve_defective_clique_via_cover_with(g, s, k, CoverOptions::default())
}

pub fn solve_defective_clique_via_cover_with(
    g: &Graph,
    s: usize,
    k: usize,
    options: CoverOptions,
) -> Result<ProblemAnswer> {
    if s == 0 || k == 0 {
        return Err(Error::Parameter("the cover solver needs s >= 1 and k >= 1".into()));
    }
    let cliques = enumerate_maximal_cliques(g);
    let mut stats = Stats::default();
    stats.add("maximal_cliques", cliques.len() as u64);
    if let ProblemAnswer { decision: true, witness, .. } = best_of(&cliques, k) {
        stats.bump("clique_phase");
        let mut answer = ProblemAnswer::no();
        answer.decision = true;
        answer.witness = witness;
        return Ok(answer.with_stats(&stats));
    }
    // Anything bigger than a clique has a non-adjacent pair.
    let c = c_closure(g);
    if k > c + s {
        stats.bump("size_bound_pruned");
        return Ok(ProblemAnswer::no().with_stats(&stats));
    }

    let bound = cover_bound(s);
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut examined = 0u64;
    let mut picks: Vec<usize> = Vec::new();
    let mut result: Option<VertexSet> = None;
    search_collections(
        &cliques,
        bound,
        0,
        &mut picks,
        &VertexSet::new(),
        &mut |union| {
            examined += 1;
            if examined > options.collection_budget {
                return Err(Error::Resource {
                    what: "clique collections",
                    observed: examined as usize,
                    limit: options.collection_budget as usize,
                    partial: format!("{} distinct unions solved without a hit", seen.len()),
                });
            }
            if union.len() < k || !seen.insert(union.clone()) {
                return Ok(false);
            }
            let (sub, map) = g.induced_subgraph(union)?;
            let answer = solve_defective_clique(&sub, s, k)?;
            if let Some(set) = answer.witness_set() {
                result = Some(set.map_through(&map));
                return Ok(true);
            }
            Ok(false)
        },
    )?;
    stats.add("collections", examined);
    stats.add("unions_solved", seen.len() as u64);
    Ok(match result {
        Some(set) => {
            debug_assert!(set.len() <= c + s);
            ProblemAnswer::yes_set(set)
        }
        None => ProblemAnswer::no(),
    }
    .with_stats(&stats))
}

/// Visits unions of 2..=`bound` distinct cliques; stops when `visit` says so.
fn search_collections(
    cliques: &[VertexSet],
    bound: usize,
    start: usize,
    picks: &mut Vec<usize>,
    union: &VertexSet,
    visit: &mut dyn FnMut(&VertexSet) -> Result<bool>,
) -> Result<bool> {
    for i in start..cliques.len() {
        let next = union.union(&cliques[i]);
        picks.push(i);
        let stop = (picks.len() >= 2 && visit(&next)?)
            || (picks.len() < bound && search_collections(cliques, bound, i + 1, picks, &next, visit)?);
        picks.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}
