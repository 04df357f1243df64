//! Degree-based kernel for monotone induced-subgraph problems.
//!
//! Along a closure ordering, a vertex `v_i` with at least `γk` neighbours in
//! its suffix graph can be deleted: any solution using `v_i` can swap it for
//! one of those neighbours, because `v_i` shares fewer than `γ` neighbours with
//! each non-adjacent vertex. Once the rule no longer applies the graph is
//! `(γk - 1)`-degenerate, so a graph with at least `γk²` vertices still holds an
//! independent set of size `k`, which lies in every monotone class.

use crate::answer::{ProblemAnswer, Stats};
use crate::closure::{closure_ordering, degeneracy_ordering};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::view::View;

/// Graph classes closed under vertex and edge deletion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonotoneClass {
    Edgeless,
    /// Forests.
    Acyclic,
    Bipartite,
    /// Maximum degree at most the given bound.
    MaxDegree(usize),
    /// At most the given number of edges.
    MaxEdges(usize),
}

impl MonotoneClass {
    pub const REGISTERED: [&'static str; 5] =
        ["edgeless", "acyclic", "bipartite", "max-degree:<D>", "max-edges:<T>"];

    /// Parses `edgeless`, `acyclic`, `bipartite`, `max-degree:D` or `max-edges:T`.
    pub fn parse(text: &str) -> Result<Self> {
        let bound = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::Config(format!("bad bound in monotone class '{text}'")))
        };
        match text {
            "edgeless" | "independent" => Ok(Self::Edgeless),
            "acyclic" | "forest" => Ok(Self::Acyclic),
            "bipartite" => Ok(Self::Bipartite),
            _ => {
                if let Some(rest) = text.strip_prefix("max-degree:") {
                    Ok(Self::MaxDegree(bound(rest)?))
                } else if let Some(rest) = text.strip_prefix("max-edges:") {
                    Ok(Self::MaxEdges(bound(rest)?))
                } else {
                    Err(Error::Config(format!(
                        "unknown monotone class '{text}'; expected one of {}",
                        Self::REGISTERED.join(", ")
                    )))
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Edgeless => "edgeless".into(),
            Self::Acyclic => "acyclic".into(),
            Self::Bipartite => "bipartite".into(),
            Self::MaxDegree(d) => format!("max-degree:{d}"),
            Self::MaxEdges(t) => format!("max-edges:{t}"),
        }
    }

    /// Whether `G[S]` belongs to the class.
    pub fn contains(&self, g: &Graph, set: &VertexSet) -> bool {
        let s = set.as_slice();
        match *self {
            Self::Edgeless => crate::predicates::is_independent(g, set),
            Self::MaxEdges(t) => g.edges_within(set) <= t,
            Self::MaxDegree(d) => s
                .iter()
                .all(|&v| s.iter().filter(|&&w| g.has_edge(v, w)).count() <= d),
            Self::Acyclic => {
                let mut parent: Vec<usize> = (0..s.len()).collect();
                fn find(parent: &mut [usize], mut x: usize) -> usize {
                    while parent[x] != x {
                        parent[x] = parent[parent[x]];
                        x = parent[x];
                    }
                    x
                }
                for i in 0..s.len() {
                    for j in i + 1..s.len() {
                        if g.has_edge(s[i], s[j]) {
                            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                            if a == b {
                                return false;
                            }
                            parent[a] = b;
                        }
                    }
                }
                true
            }
            Self::Bipartite => {
                let mut color = vec![u8::MAX; s.len()];
                let mut stack = Vec::new();
                for start in 0..s.len() {
                    if color[start] != u8::MAX {
                        continue;
                    }
                    color[start] = 0;
                    stack.push(start);
                    while let Some(i) = stack.pop() {
                        for j in 0..s.len() {
                            if i != j && g.has_edge(s[i], s[j]) {
                                if color[j] == u8::MAX {
                                    color[j] = 1 - color[i];
                                    stack.push(j);
                                } else if color[j] == color[i] {
                                    return false;
                                }
                            }
                        }
                    }
                }
                true
            }
        }
    }
}

/// Output of exhaustive rule application.
#[derive(Clone, Debug)]
pub struct KernelInstance {
    /// The reduced graph, an induced subgraph of the input.
    pub graph: Graph,
    /// Kernel id to input id.
    pub map: Vec<usize>,
    pub k: usize,
    /// `γ` of the ordering the final pass ran against.
    pub gamma_used: usize,
    /// Closure ordering of the kernel, in kernel ids, under which no vertex
    /// triggers the rule.
    pub order: Vec<usize>,
    /// Input ids in removal order.
    pub removed: Vec<usize>,
    /// Set when the kernel is large enough that the answer is yes outright.
    pub shortcut: bool,
}

impl KernelInstance {
    /// Checks that no kernel vertex still has `≥ γk` later neighbours.
    pub fn is_fixpoint(&self) -> bool {
        let mut pos = vec![0; self.graph.n()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        self.order.iter().enumerate().all(|(i, &v)| {
            let later = self.graph.neighbors(v).iter().filter(|&&w| pos[w] > i).count();
            later < self.gamma_used * self.k
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KernelOptions {
    /// Apply the rule once against the closure ordering of the input instead of
    /// recomputing the ordering and `γ` after every pass.
    pub fixed_ordering: bool,
    /// Node budget for the exact search on the kernel.
    pub node_budget: Option<u64>,
}

/// Exhaustively deletes `v_i` whenever `deg_{G_i}(v_i) ≥ γk`.
pub fn apply_rule1(g: &Graph, k: usize) -> Result<KernelInstance> {
    apply_rule1_with(g, k, KernelOptions::default())
}

pub fn apply_rule1_with(g: &Graph, k: usize, options: KernelOptions) -> Result<KernelInstance> {
    if k == 0 {
        return Err(Error::Parameter("kernelization needs k >= 1".into()));
    }
    let mut current = g.clone();
    let mut map: Vec<usize> = g.vertices().collect();
    let mut removed = Vec::new();
    loop {
        let ordering = closure_ordering(&current);
        let threshold = ordering.gamma() * k;
        let mut dropped = Vec::new();
        for (i, &v) in ordering.order().iter().enumerate() {
            let later = current
                .neighbors(v)
                .iter()
                .filter(|&&w| ordering.position(w) > i)
                .count();
            if later >= threshold {
                dropped.push(v);
            }
        }
        if dropped.is_empty() || options.fixed_ordering {
            removed.extend(dropped.iter().map(|&v| map[v]));
            let gamma_used = ordering.gamma();
            let dropped = VertexSet::from_unsorted(dropped);
            let order: Vec<usize>;
            if dropped.is_empty() {
                order = ordering.order().to_vec();
            } else {
                // Restrict the fixed ordering to the survivors, renumbered.
                let (next, sub_map) = current.remove_vertices(&dropped)?;
                let mut new_id = vec![usize::MAX; current.n()];
                for (new, &old) in sub_map.iter().enumerate() {
                    new_id[old] = new;
                }
                order = ordering
                    .order()
                    .iter()
                    .filter(|&&v| !dropped.contains(v))
                    .map(|&v| new_id[v])
                    .collect();
                map = sub_map.iter().map(|&v| map[v]).collect();
                current = next;
            }
            let shortcut = current.n() >= gamma_used * k * k;
            return Ok(KernelInstance {
                graph: current,
                map,
                k,
                gamma_used,
                order,
                removed,
                shortcut,
            });
        }
        removed.extend(dropped.iter().map(|&v| map[v]));
        let (next, sub_map) = current.remove_vertices(&VertexSet::from_unsorted(dropped))?;
        map = sub_map.iter().map(|&v| map[v]).collect();
        current = next;
    }
}

/// Is there `S` with `|S| ≥ k` and `G[S]` in `class`?
pub fn solve_monotone_subgraph(g: &Graph, k: usize, class: MonotoneClass) -> Result<ProblemAnswer> {
    solve_monotone_subgraph_with(g, k, class, KernelOptions::default())
}

pub fn solve_monotone_subgraph_with(
    g: &Graph,
    k: usize,
    class: MonotoneClass,
    options: KernelOptions,
) -> Result<ProblemAnswer> {
    if k == 0 {
        return Ok(ProblemAnswer::yes_set(VertexSet::new()));
    }
    if k > g.n() {
        return Ok(ProblemAnswer::no());
    }
    let kernel = apply_rule1_with(g, k, options)?;
    let mut stats = Stats::default();
    stats.add("kernel_vertices", kernel.graph.n() as u64);
    stats.add("removed_vertices", kernel.removed.len() as u64);
    stats.add("gamma", kernel.gamma_used as u64);

    let found = if kernel.shortcut {
        stats.bump("shortcut");
        let is = greedy_independent_set(&kernel.graph, k);
        debug_assert_eq!(is.len(), k);
        Some(is)
    } else {
        let mut search = Search {
            g: &kernel.graph,
            class,
            k,
            nodes: 0,
            budget: options.node_budget,
        };
        let cands: Vec<usize> = kernel.graph.vertices().collect();
        let result = search.run(&mut Vec::new(), cands)?;
        stats.add("search_nodes", search.nodes);
        result
    };
    Ok(match found {
        Some(set) => ProblemAnswer::yes_set(set.map_through(&kernel.map)),
        None => ProblemAnswer::no(),
    }
    .with_stats(&stats))
}

/// Independent set of size at least `k`.
pub fn solve_independent_set(g: &Graph, k: usize) -> Result<ProblemAnswer> {
    solve_monotone_subgraph(g, k, MonotoneClass::Edgeless)
}

/// Exactly `k` vertices inducing at most `t` edges.
pub fn solve_sparsest_k_subgraph(g: &Graph, k: usize, t: usize) -> Result<ProblemAnswer> {
    let mut answer = solve_monotone_subgraph(g, k, MonotoneClass::MaxEdges(t))?;
    if let Some(crate::answer::Witness::Set(set)) = answer.witness.take() {
        // Subsets of a sparse set stay sparse.
        let trimmed: Vec<usize> = set.iter().take(k).collect();
        answer.witness = Some(crate::answer::Witness::Set(VertexSet::from_sorted(trimmed)));
    }
    Ok(answer)
}

/// Repeatedly takes a minimum-degree vertex and deletes its closed
/// neighbourhood; stops after `k` picks. A `d`-degenerate graph on at least
/// `(d + 1)k` vertices always yields `k` picks.
fn greedy_independent_set(g: &Graph, k: usize) -> VertexSet {
    let mut view = View::full(g);
    let mut picked = Vec::new();
    while picked.len() < k && !view.is_empty() {
        let v = view
            .vertices()
            .min_by_key(|&v| (view.degree(v), v))
            .expect("view is non-empty");
        picked.push(v);
        let closed: Vec<usize> = view.neighbors(v).chain(std::iter::once(v)).collect();
        for w in closed {
            view.remove(w);
        }
    }
    VertexSet::from_unsorted(picked)
}

struct Search<'a> {
    g: &'a Graph,
    class: MonotoneClass,
    k: usize,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    /// Branches on a candidate of maximum degree: take it (keeping only the
    /// candidates still compatible with the class) or drop it.
    fn run(&mut self, chosen: &mut Vec<usize>, cands: Vec<usize>) -> Result<Option<VertexSet>> {
        if chosen.len() >= self.k {
            return Ok(Some(VertexSet::from_unsorted(chosen.clone())));
        }
        if chosen.len() + cands.len() < self.k {
            return Ok(None);
        }
        self.nodes += 1;
        if let Some(limit) = self.budget {
            if self.nodes > limit {
                return Err(Error::Budget(limit));
            }
        }
        let x = *cands
            .iter()
            .max_by_key(|&&v| {
                let deg = cands.iter().filter(|&&w| self.g.has_edge(v, w)).count();
                (deg, std::cmp::Reverse(v))
            })
            .expect("candidate list is non-empty here");
        let rest: Vec<usize> = cands.iter().copied().filter(|&v| v != x).collect();

        chosen.push(x);
        let base = VertexSet::from_unsorted(chosen.clone());
        if self.class.contains(self.g, &base) {
            let compatible: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|&y| self.class.contains(self.g, &base.with(y)))
                .collect();
            if let Some(found) = self.run(chosen, compatible)? {
                chosen.pop();
                return Ok(Some(found));
            }
        }
        chosen.pop();
        self.run(chosen, rest)
    }
}

/// Degeneracy of the kernel graph; exposed for the kernel-size checks.
pub fn kernel_degeneracy(kernel: &KernelInstance) -> usize {
    degeneracy_ordering(&kernel.graph).degeneracy()
}
