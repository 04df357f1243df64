//! Named graph families used in examples, tests and benchmarks.

use crate::graph::Graph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, &edges).expect("generator produced an out-of-range vertex")
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, edges)
}

/// `C_n` on `0-1-..-(n-1)-0`; requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// `P_n`: a path on `n` vertices.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, edges)
}

/// Disjoint union of cliques of the given sizes, numbered consecutively.
pub fn disjoint_cliques(sizes: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for &size in sizes {
        for u in offset..offset + size {
            for v in u + 1..offset + size {
                edges.push((u, v));
            }
        }
        offset += size;
    }
    build(offset, edges)
}

/// Vertex 0 adjacent to everything, plus `t` disjoint triangles on `1..=3t`.
pub fn universal_with_triangles(t: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=3 * t).map(|v| (0, v)).collect();
    for i in 0..t {
        let b = 1 + 3 * i;
        edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
    }
    build(3 * t + 1, edges)
}

/// `K_n` with the edge `{0, 1}` removed.
pub fn complete_minus_edge(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (u, v) != (0, 1) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}
