//! Shared fixtures: the graph atlas and seeded random graphs.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weakclose::Graph;

/// Every graph on at most 7 vertices, one per isomorphism class.
pub fn atlas() -> Vec<Graph> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../testdata/graph_atlas.txt");
    let text = std::fs::read_to_string(path).expect("graph atlas fixture");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let mut tokens = line.split_whitespace();
            let n: usize = tokens.next().unwrap().parse().unwrap();
            let edges: Vec<(usize, usize)> = tokens
                .map(|t| {
                    let (u, v) = t.split_once('-').unwrap();
                    (u.parse().unwrap(), v.parse().unwrap())
                })
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

pub fn atlas_up_to(max_n: usize) -> Vec<Graph> {
    atlas().into_iter().filter(|g| g.n() <= max_n).collect()
}

/// `count` graphs with 1..=`max_n` vertices and edge density drawn per graph.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen_range(0.15..0.85);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Compact description for assertion messages.
pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}
