//! Simple undirected graphs with dense ids and original labels.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Immutable simple undirected graph.
///
/// Vertex ids are `0..n`. Each id carries the label it had in the input, and
/// adjacency lists are kept sorted so membership tests are a binary search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
    m: usize,
}

/// Counters collected while reading an edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub self_loops_dropped: usize,
    pub duplicate_edges: usize,
    pub lines_read: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `"0".."n-1"`.
    ///
    /// Self-loops are ignored and duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_labeled_edges(labels, edges.iter().copied())
    }

    pub fn from_labeled_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::Domain { vertex: x, n });
                }
            }
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self {
            adj,
            labels,
            m: m / 2,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            labels: (0..n).map(|i| i.to_string()).collect(),
            m: 0,
        }
    }

    /// Reads a whitespace-separated edge list.
    ///
    /// Lines starting with `#` or `%` and blank lines are skipped. Labels are
    /// mapped to ids in order of first appearance.
    pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<(Self, ParseReport)> {
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        let mut report = ParseReport::default();

        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
            report.lines_read += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two vertex tokens, found {}", tokens.len()),
                });
            }
            let mut id_of = |tok: &str| {
                *ids.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    labels.len() - 1
                })
            };
            let u = id_of(tokens[0]);
            let v = id_of(tokens[1]);
            if u == v {
                report.self_loops_dropped += 1;
                continue;
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                report.duplicate_edges += 1;
                continue;
            }
            edges.push(key);
        }
        let graph = Self::from_labeled_edges(labels, edges)?;
        Ok((graph, report))
    }

    pub fn parse_str(text: &str) -> Result<(Self, ParseReport)> {
        Self::parse_edge_list(text.as_bytes())
    }

    /// One `u v` line per edge using original labels, sorted by id pair.
    ///
    /// Isolated vertices have no representation in this format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::Domain {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Every vertex as a canonical set.
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::from_sorted(self.vertices().collect())
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_sorted(self.neighbors(v).to_vec()).with(v)
    }

    /// `G[X]` together with the map from new ids to ids of `self`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(set)?;
        let map: Vec<usize> = set.iter().collect();
        let mut index = HashMap::with_capacity(map.len());
        for (new, &old) in map.iter().enumerate() {
            index.insert(old, new);
        }
        let adj = map
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|w| index.get(w).copied())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let labels = map.iter().map(|&old| self.labels[old].clone()).collect();
        Ok((Graph { adj, labels, m }, map))
    }

    /// Graph with the given vertices deleted; returns the id map like [`Graph::induced_subgraph`].
    pub fn remove_vertices(&self, removed: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(removed)?;
        let keep = self.vertices().filter(|&v| !removed.contains(v)).collect();
        self.induced_subgraph(&VertexSet::from_sorted(keep))
    }

    /// Connected components of the complement of `G[U]`, in original ids,
    /// ordered by smallest member.
    pub fn complement_components(&self, set: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(set)?;
        Ok(complement_components_unchecked(self, set.as_slice()))
    }

    /// Edges inside `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        let members = set.as_slice();
        let mut count = 0;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Labels of a set, in id order.
    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }
}

pub(crate) fn complement_components_unchecked(g: &Graph, members: &[usize]) -> Vec<VertexSet> {
    let k = members.len();
    let mut comp = vec![usize::MAX; k];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        stack.push(start);
        let mut current = Vec::new();
        while let Some(i) = stack.pop() {
            current.push(members[i]);
            for j in 0..k {
                if comp[j] == usize::MAX && !g.has_edge(members[i], members[j]) {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        out.push(VertexSet::from_unsorted(current));
    }
    // Components were discovered in order of their smallest member.
    out
}
