use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;
use crate::predicates::{is_independent, is_non_induced_biclique};
use crate::vertex_set::VertexSet;

/// Two disjoint sides with every cross pair adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicliqueWitness {
    pub side_s: VertexSet,
    pub side_t: VertexSet,
    /// Both sides are independent sets.
    pub induced: bool,
}

impl BicliqueWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        if !self.side_s.is_disjoint(&self.side_t) {
            return false;
        }
        let complete = self
            .side_s
            .iter()
            .all(|s| self.side_t.iter().all(|t| g.has_edge(s, t)));
        complete
            && (!self.induced || (is_independent(g, &self.side_s) && is_independent(g, &self.side_t)))
    }

    /// Orders the sides so that `side_s` is the lexicographically smaller one.
    pub fn normalized(mut self) -> Self {
        if self.side_t < self.side_s {
            std::mem::swap(&mut self.side_s, &mut self.side_t);
        }
        self
    }

    pub fn vertices(&self) -> VertexSet {
        self.side_s.union(&self.side_t)
    }

    pub fn is_non_induced_biclique_set(&self, g: &Graph) -> bool {
        is_non_induced_biclique(g, &self.vertices())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(VertexSet),
    Biclique(BicliqueWitness),
}

impl Witness {
    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Witness::Set(s) => Some(s),
            Witness::Biclique(_) => None,
        }
    }

    pub fn as_biclique(&self) -> Option<&BicliqueWitness> {
        match self {
            Witness::Biclique(b) => Some(b),
            Witness::Set(_) => None,
        }
    }
}

/// Decision, witness on yes, and search counters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProblemAnswer {
    pub decision: bool,
    pub witness: Option<Witness>,
    pub stats: BTreeMap<String, u64>,
}

impl ProblemAnswer {
    pub fn yes(witness: Witness) -> Self {
        Self {
            decision: true,
            witness: Some(witness),
            stats: BTreeMap::new(),
        }
    }

    pub fn yes_set(set: VertexSet) -> Self {
        Self::yes(Witness::Set(set))
    }

    pub fn no() -> Self {
        Self {
            decision: false,
            witness: None,
            stats: BTreeMap::new(),
        }
    }

    pub fn with_stat(mut self, key: &str, value: u64) -> Self {
        self.stats.insert(key.to_string(), value);
        self
    }

    pub fn with_stats(mut self, stats: &Stats) -> Self {
        self.stats
            .extend(stats.0.iter().map(|(k, v)| (k.to_string(), *v)));
        self
    }

    pub fn witness_set(&self) -> Option<&VertexSet> {
        self.witness.as_ref().and_then(Witness::as_set)
    }

    pub fn witness_biclique(&self) -> Option<&BicliqueWitness> {
        self.witness.as_ref().and_then(Witness::as_biclique)
    }
}

/// Named counters threaded through a search.
#[derive(Clone, Debug, Default)]
pub struct Stats(BTreeMap<&'static str, u64>);

impl Stats {
    pub fn bump(&mut self, key: &'static str) {
        *self.0.entry(key).or_default() += 1;
    }

    pub fn add(&mut self, key: &'static str, amount: u64) {
        *self.0.entry(key).or_default() += amount;
    }

    pub fn max(&mut self, key: &'static str, value: u64) {
        let slot = self.0.entry(key).or_default();
        *slot = (*slot).max(value);
    }

    pub fn get(&self, key: &str) -> u64 {
        self.0.get(key).copied().unwrap_or(0)
    }
}
