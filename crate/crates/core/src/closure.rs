//! Closure numbers, closure orderings and degeneracy orderings.
//!
//! The closure number of `v` is the largest number of common neighbours `v`
//! shares with any non-neighbour (0 when `v` is universal). A graph is weakly
//! `γ`-closed when every induced subgraph has a vertex of closure number below
//! `γ`; equivalently, there is an ordering `v_1..v_n` in which every `v_i` has
//! closure number below `γ` inside the suffix graph `G_i = G[{v_i..v_n}]`.
//!
//! [`closure_ordering`] peels a vertex of minimum closure number at every step.
//! Closure numbers never increase when vertices are deleted, so the same
//! exchange argument that makes greedy min-degree peeling optimal for
//! degeneracy applies: if `W` is the induced subgraph maximising the minimum
//! closure number, the first peeled vertex of `W` is peeled from a supergraph
//! of `W` where its closure number is at least its closure number in `G[W]`.
//! The largest peeled value is therefore exactly `γ - 1`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::view::{ClosureScratch, View};

/// `cl_G(v)`.
pub fn closure_of_vertex(g: &Graph, v: usize) -> usize {
    let view = View::full(g);
    ClosureScratch::new(g.n()).closure(&view, v)
}

/// Closure numbers of every vertex, computed in parallel.
pub fn closure_numbers(g: &Graph) -> Vec<usize> {
    let view = View::full(g);
    (0..g.n())
        .into_par_iter()
        .map_init(|| ClosureScratch::new(g.n()), |scratch, v| scratch.closure(&view, v))
        .collect()
}

/// Smallest `c` such that `G` is `c`-closed; at least 1.
pub fn c_closure(g: &Graph) -> usize {
    1 + closure_numbers(g).into_iter().max().unwrap_or(0)
}

/// A peeling order where each vertex has closure number `< gamma` in its suffix graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    step_closure: Vec<usize>,
    gamma: usize,
}

impl ClosureOrdering {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `cl_{G_i}(v_i)` for each position `i`.
    pub fn step_closure(&self) -> &[usize] {
        &self.step_closure
    }

    /// Weak closure: `1 + max step_closure`, at least 1.
    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// Position of `v` in the ordering.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// One line per position: `rank label step_closure`, ranks starting at 1.
    pub fn export(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (i, (&v, &cl)) in self.order.iter().zip(&self.step_closure).enumerate() {
            let _ = writeln!(out, "{} {} {}", i + 1, g.label(v), cl);
        }
        out
    }

    /// Recomputes every suffix closure number from scratch and checks it
    /// against the stored values and the `gamma` bound.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.order {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let mut view = View::full(g);
        let mut scratch = ClosureScratch::new(g.n());
        for (&v, &cl) in self.order.iter().zip(&self.step_closure) {
            if scratch.closure(&view, v) != cl || cl >= self.gamma {
                return false;
            }
            view.remove(v);
        }
        self.gamma == 1 + self.step_closure.iter().copied().max().unwrap_or(0)
    }
}

/// Greedy minimum-closure peeling, lowest id on ties.
///
/// After each removal only vertices within distance two of the removed vertex
/// are recomputed, since a closure number depends only on the 2-neighbourhood.
pub fn closure_ordering(g: &Graph) -> ClosureOrdering {
    let n = g.n();
    let mut current = closure_numbers(g);
    let mut queue: BTreeSet<(usize, usize)> = current.iter().enumerate().map(|(v, &c)| (c, v)).collect();
    let mut view = View::full(g);
    let mut scratch = ClosureScratch::new(n);
    let mut order = Vec::with_capacity(n);
    let mut step_closure = Vec::with_capacity(n);
    let mut stamp = vec![usize::MAX; n];
    let mut affected = Vec::new();

    while let Some((cl, v)) = queue.pop_first() {
        order.push(v);
        step_closure.push(cl);

        affected.clear();
        stamp[v] = v;
        for w in view.neighbors(v) {
            if stamp[w] != v {
                stamp[w] = v;
                affected.push(w);
            }
            for x in view.neighbors(w) {
                if stamp[x] != v {
                    stamp[x] = v;
                    affected.push(x);
                }
            }
        }
        view.remove(v);
        for &x in &affected {
            let updated = scratch.closure(&view, x);
            if updated != current[x] {
                queue.remove(&(current[x], x));
                current[x] = updated;
                queue.insert((updated, x));
            }
        }
    }

    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let gamma = 1 + step_closure.iter().copied().max().unwrap_or(0);
    ClosureOrdering {
        order,
        position,
        step_closure,
        gamma,
    }
}

/// Weak closure number `γ(G)`.
pub fn weak_closure(g: &Graph) -> usize {
    closure_ordering(g).gamma()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    order: Vec<usize>,
    step_degree: Vec<usize>,
    degeneracy: usize,
}

impl DegeneracyOrdering {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn step_degree(&self) -> &[usize] {
        &self.step_degree
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }
}

/// Greedy minimum-degree peeling, lowest id on ties.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = degree.iter().enumerate().map(|(v, &d)| (d, v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut step_degree = Vec::with_capacity(n);
    while let Some((d, v)) = queue.pop_first() {
        removed[v] = true;
        order.push(v);
        step_degree.push(d);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    let degeneracy = step_degree.iter().copied().max().unwrap_or(0);
    DegeneracyOrdering {
        order,
        step_degree,
        degeneracy,
    }
}

/// The six columns of the parameter table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub c: usize,
    pub d: usize,
    pub gamma: usize,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    GraphStats {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        c: c_closure(g),
        d: degeneracy_ordering(g).degeneracy(),
        gamma: weak_closure(g),
    }
}
