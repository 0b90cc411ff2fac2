#![allow(dead_code)]

use std::collections::BTreeSet;

use nzflow_core::{Edge, EdgeSubset, Sign, SignedGraph};
use rand::Rng;

pub use Sign::{Negative as N, Positive as P};

pub fn graph(n: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
    SignedGraph::from_edges(n, edges.iter().map(|&(u, v, s)| Edge::new(u, v, s))).unwrap()
}

pub struct CorpusGraph {
    pub name: String,
    pub graph: SignedGraph,
}

type EdgeKey = (usize, usize, Sign);

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabellings of the vertices.
fn canonical(edges: &[EdgeKey], perms: &[Vec<usize>]) -> Vec<EdgeKey> {
    perms
        .iter()
        .map(|p| {
            let mut mapped: Vec<_> = edges
                .iter()
                .map(|&(u, v, s)| (p[u].min(p[v]), p[u].max(p[v]), s))
                .collect();
            mapped.sort();
            mapped
        })
        .min()
        .unwrap_or_default()
}

/// Multisets of size `0..=max` drawn from `slots`, as index lists.
fn multisets(slots: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, slots: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if left == 0 {
            return;
        }
        for s in start..slots {
            prefix.push(s);
            go(s, slots, left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(0, slots, max, &mut Vec::new(), &mut out);
    out
}

/// Every signed multigraph on exactly `k` vertices with at most `max_edges`
/// edges, one per vertex-relabelling class.
pub fn small_signed_graphs(k: usize, max_edges: usize) -> Vec<SignedGraph> {
    let mut slots: Vec<EdgeKey> = Vec::new();
    for u in 0..k {
        for v in u..k {
            slots.push((u, v, P));
            slots.push((u, v, N));
        }
    }
    let perms = permutations(k);
    let mut seen = BTreeSet::new();
    for choice in multisets(slots.len(), max_edges) {
        let edges: Vec<_> = choice.iter().map(|&i| slots[i]).collect();
        seen.insert(canonical(&edges, &perms));
    }
    seen.into_iter().map(|edges| graph(k, &edges)).collect()
}

pub fn k4(negative: &[usize]) -> SignedGraph {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (u, v, if negative.contains(&i) { N } else { P }))
        .collect();
    graph(4, &edges)
}

/// K4 in each of its three switching classes up to isomorphism: balanced,
/// two negative triangles, and all four triangles negative.
pub fn k4_classes() -> Vec<CorpusGraph> {
    vec![
        CorpusGraph { name: "K4 balanced".into(), graph: k4(&[]) },
        CorpusGraph { name: "K4 one negative edge".into(), graph: k4(&[0]) },
        CorpusGraph { name: "K4 all negative".into(), graph: k4(&[0, 1, 2, 3, 4, 5]) },
    ]
}

fn describe(g: &SignedGraph) -> String {
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| format!("{}{}{}", e.u, e.sign, e.v))
        .collect();
    format!("V{}[{}]", g.num_vertices(), edges.join(" "))
}

/// The fixed test corpus: all signed graphs on at most 3 vertices with at
/// most 4 edges, plus the three K4 classes.
pub fn corpus() -> Vec<CorpusGraph> {
    let mut out: Vec<CorpusGraph> = (0..=3)
        .flat_map(|k| small_signed_graphs(k, 4))
        .map(|graph| CorpusGraph { name: describe(&graph), graph })
        .collect();
    out.extend(k4_classes());
    out
}

/// Edge sets of all cycles of `g`: loops, and connected edge sets in which
/// every touched vertex has degree exactly 2.
pub fn cycles(g: &SignedGraph) -> Vec<EdgeSubset> {
    let m = g.num_edges();
    assert!(m <= 16);
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let ids: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let mut degree = vec![0usize; g.num_vertices()];
        for &id in &ids {
            let e = g.edges()[id];
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let sub = graph(
            g.num_vertices(),
            &ids.iter().map(|&id| {
                let e = g.edges()[id];
                (e.u, e.v, e.sign)
            }).collect::<Vec<_>>(),
        );
        if sub.edge_components().len() == 1 {
            out.push(ids.into_iter().collect());
        }
    }
    out
}

pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> SignedGraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let mut g = SignedGraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let sign = if rng.gen_bool(0.5) { P } else { N };
        g.add_edge(u, v, sign).unwrap();
    }
    g
}

/// All subsets of the vertex set, as index lists.
pub fn vertex_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect())
        .collect()
}
