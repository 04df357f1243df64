//! Vertex-deletion views of a host graph, used by the peeling and branching code.

use crate::graph::Graph;

/// `G - D` for a deletion set `D`, represented as a liveness mask over the host ids.
#[derive(Clone, Debug)]
pub(crate) struct View<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    len: usize,
}

impl<'g> View<'g> {
    pub fn full(g: &'g Graph) -> Self {
        Self {
            g,
            alive: vec![true; g.n()],
            len: g.n(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn remove(&mut self, v: usize) {
        if std::mem::replace(&mut self.alive[v], false) {
            self.len -= 1;
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(move |&v| self.alive[v])
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&w| self.alive[w])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }
}

/// Reusable buffers for closure-number computation.
#[derive(Clone, Debug)]
pub(crate) struct ClosureScratch {
    count: Vec<u32>,
    mark: Vec<u32>,
    stamp: u32,
    touched: Vec<usize>,
}

impl ClosureScratch {
    pub fn new(n: usize) -> Self {
        Self {
            count: vec![0; n],
            mark: vec![0; n],
            stamp: 0,
            touched: Vec::new(),
        }
    }

    /// `cl(v)` in the view: the largest common neighbourhood `v` shares with a
    /// live non-neighbour, 0 when there is none.
    pub fn closure(&mut self, view: &View<'_>, v: usize) -> usize {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        self.mark[v] = stamp;
        for w in view.neighbors(v) {
            self.mark[w] = stamp;
        }
        for w in view.neighbors(v) {
            for x in view.neighbors(w) {
                if x != v {
                    if self.count[x] == 0 {
                        self.touched.push(x);
                    }
                    self.count[x] += 1;
                }
            }
        }
        let mut best = 0;
        for &x in &self.touched {
            if self.mark[x] != stamp {
                best = best.max(self.count[x] as usize);
            }
            self.count[x] = 0;
        }
        self.touched.clear();
        best
    }
}
