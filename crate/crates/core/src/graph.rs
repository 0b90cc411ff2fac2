//! Signed multigraphs, half-edge orientations and the rewrites used by the
//! deletion–contraction recursion.
//!
//! Loops and parallel edges are allowed. Edge ids are the positions in the
//! edge list and are kept dense by every rewrite.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// A sign in `{+1, -1}`, used for edge signatures and half-edge arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// Vertex carrying the half-edge in `slot` (0 is at `u`, 1 is at `v`).
    pub fn endpoint(&self, slot: u8) -> usize {
        if slot == 0 {
            self.u
        } else {
            self.v
        }
    }
}

/// Handle for one of the two half-edges of an edge. A loop still has two
/// distinct handles, both attached to the same vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: usize,
    pub slot: u8,
}

impl HalfEdge {
    pub fn new(edge: usize, slot: u8) -> Self {
        debug_assert!(slot < 2);
        HalfEdge { edge, slot }
    }
}

/// A set of edge ids. Validity against a particular graph is checked by the
/// operations that consume it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    ids: BTreeSet<usize>,
}

impl EdgeSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, id: usize) -> bool {
        self.ids.insert(id)
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ids.contains(&id)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids.iter().copied()
    }

    pub fn symmetric_difference(&self, other: &EdgeSubset) -> EdgeSubset {
        self.ids.symmetric_difference(&other.ids).copied().collect()
    }

    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        match self.ids.iter().next_back() {
            Some(&id) if id >= g.num_edges() => Err(Error::InvalidEdge {
                edge: id,
                num_edges: g.num_edges(),
            }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSubset {
            ids: iter.into_iter().collect(),
        }
    }
}

/// Arrow on every half-edge: `Positive` points toward the endpoint,
/// `Negative` away from it. Each edge satisfies `tau(e,0)·tau(e,1) = -sign(e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    tau: Vec<[Sign; 2]>,
}

impl Orientation {
    pub fn get(&self, h: HalfEdge) -> Sign {
        self.tau[h.edge][h.slot as usize]
    }

    pub fn num_edges(&self) -> usize {
        self.tau.len()
    }

    pub fn pairs(&self) -> &[[Sign; 2]] {
        &self.tau
    }

    /// Flips both arrows of edge `e`; the result is still an orientation of
    /// the same signed graph.
    pub fn reverse_edge(&mut self, e: usize) -> Result<()> {
        let num_edges = self.tau.len();
        let pair = self
            .tau
            .get_mut(e)
            .ok_or(Error::InvalidEdge { edge: e, num_edges })?;
        pair[0] = -pair[0];
        pair[1] = -pair[1];
        Ok(())
    }

    pub fn is_valid_for(&self, g: &SignedGraph) -> bool {
        self.tau.len() == g.num_edges()
            && self
                .tau
                .iter()
                .zip(g.edges())
                .all(|(pair, edge)| pair[0] * pair[1] == -edge.sign)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    num_vertices: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    pub fn new(num_vertices: usize) -> Self {
        SignedGraph {
            num_vertices,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(num_vertices: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = SignedGraph::new(num_vertices);
        for e in edges {
            g.add_edge(e.u, e.v, e.sign)?;
        }
        Ok(g)
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.edges.push(Edge { u, v, sign });
        Ok(self.edges.len() - 1)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<&Edge> {
        self.edges.get(id).ok_or(Error::InvalidEdge {
            edge: id,
            num_edges: self.edges.len(),
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.num_vertices {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                num_vertices: self.num_vertices,
            })
        }
    }

    pub fn negative_edges(&self) -> EdgeSubset {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.sign.is_negative())
            .map(|(id, _)| id)
            .collect()
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign.is_positive())
    }

    /// True when both graphs have the same vertex count and the same
    /// endpoint pair for every edge id; signs are ignored.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.num_vertices == other.num_vertices
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.u == b.u && a.v == b.v)
    }

    /// Half-edges attached to each vertex, in edge-id then slot order.
    pub fn half_edges_by_vertex(&self) -> Vec<Vec<HalfEdge>> {
        let mut at = vec![Vec::new(); self.num_vertices];
        for (id, e) in self.edges.iter().enumerate() {
            at[e.u].push(HalfEdge::new(id, 0));
            at[e.v].push(HalfEdge::new(id, 1));
        }
        at
    }

    /// Component index of every vertex, numbered in order of first vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut adjacency = vec![Vec::new(); self.num_vertices];
        for e in &self.edges {
            if !e.is_loop() {
                adjacency[e.u].push(e.v);
                adjacency[e.v].push(e.u);
            }
        }
        let mut label = vec![usize::MAX; self.num_vertices];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.num_vertices {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &y in &adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// `|E| - |V| + c`, the dimension of the cycle space.
    pub fn cyclomatic_number(&self) -> usize {
        let (_, components) = self.component_labels();
        self.edges.len() + components - self.num_vertices
    }

    /// Splits off every connected component that carries at least one edge,
    /// relabelling its vertices densely in increasing order. Edges keep their
    /// relative order.
    pub fn edge_components(&self) -> Vec<SignedGraph> {
        let (label, count) = self.component_labels();
        let mut local = vec![0usize; self.num_vertices];
        let mut sizes = vec![0usize; count];
        for v in 0..self.num_vertices {
            local[v] = sizes[label[v]];
            sizes[label[v]] += 1;
        }
        let mut parts: Vec<Option<SignedGraph>> = vec![None; count];
        for e in &self.edges {
            let c = label[e.u];
            parts[c]
                .get_or_insert_with(|| SignedGraph::new(sizes[c]))
                .edges
                .push(Edge::new(local[e.u], local[e.v], e.sign));
        }
        parts.into_iter().flatten().collect()
    }

    /// Same graph with the edge list in reverse order.
    pub fn with_reversed_edge_order(&self) -> SignedGraph {
        SignedGraph {
            num_vertices: self.num_vertices,
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    /// The orientation `tau(e,0) = -1`, `tau(e,1) = sign(e)`. On a positive
    /// edge this is the ordinary arc `u → v`.
    pub fn default_orientation(&self) -> Orientation {
        Orientation {
            tau: self
                .edges
                .iter()
                .map(|e| [Sign::Negative, e.sign])
                .collect(),
        }
    }

    /// Negates the sign of every edge with exactly one end in `x`.
    pub fn switch(&self, x: &[usize]) -> Result<SignedGraph> {
        let mut inside = vec![false; self.num_vertices];
        for &v in x {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if inside[e.u] != inside[e.v] {
                    Edge::new(e.u, e.v, -e.sign)
                } else {
                    *e
                }
            })
            .collect();
        Ok(SignedGraph {
            num_vertices: self.num_vertices,
            edges,
        })
    }

    /// Whether `d = δ(X)` for some vertex set `X`.
    pub fn is_edge_cut(&self, d: &EdgeSubset) -> bool {
        if d.validate(self).is_err() {
            return false;
        }
        if d.iter().any(|id| self.edges[id].is_loop()) {
            return false;
        }
        // Two-colour each component: edges in `d` join different colours,
        // all other edges join equal colours.
        let mut adjacency = vec![Vec::new(); self.num_vertices];
        for (id, e) in self.edges.iter().enumerate() {
            if e.is_loop() {
                continue;
            }
            let differ = d.contains(id);
            adjacency[e.u].push((e.v, differ));
            adjacency[e.v].push((e.u, differ));
        }
        let mut colour: Vec<Option<bool>> = vec![None; self.num_vertices];
        let mut queue = VecDeque::new();
        for start in 0..self.num_vertices {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                let cx = colour[x].unwrap_or(false);
                for &(y, differ) in &adjacency[x] {
                    let want = cx ^ differ;
                    match colour[y] {
                        None => {
                            colour[y] = Some(want);
                            queue.push_back(y);
                        }
                        Some(cy) if cy != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Product of the signs of the edges in `cycle`.
    pub fn cycle_sign(&self, cycle: &EdgeSubset) -> Result<Sign> {
        cycle.validate(self)?;
        Ok(cycle
            .iter()
            .fold(Sign::Positive, |acc, id| acc * self.edges[id].sign))
    }

    /// Removes edge `e`; later edge ids shift down by one.
    pub fn delete_edge(&self, e: usize) -> Result<SignedGraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(SignedGraph {
            num_vertices: self.num_vertices,
            edges,
        })
    }

    /// Contracts the positive non-loop edge `e`. The merged vertex keeps the
    /// smaller endpoint index and higher vertices shift down by one. Other
    /// edges between the two endpoints become loops with their sign intact.
    pub fn contract_edge(&self, e: usize) -> Result<SignedGraph> {
        let edge = *self.edge(e)?;
        if edge.is_loop() {
            return Err(Error::Precondition(format!("edge {e} is a loop")));
        }
        if edge.sign.is_negative() {
            return Err(Error::Precondition(format!(
                "edge {e} is negative; switch it positive before contracting"
            )));
        }
        let keep = edge.u.min(edge.v);
        let gone = edge.u.max(edge.v);
        let relabel = |x: usize| match x {
            x if x == gone => keep,
            x if x > gone => x - 1,
            x => x,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, other)| Edge::new(relabel(other.u), relabel(other.v), other.sign))
            .collect();
        Ok(SignedGraph {
            num_vertices: self.num_vertices - 1,
            edges,
        })
    }

    /// Returns an equivalent signature in which the non-loop edge `e` is
    /// positive, switching at its lower-indexed endpoint when needed.
    pub fn make_edge_positive(&self, e: usize) -> Result<SignedGraph> {
        let edge = *self.edge(e)?;
        if edge.is_loop() {
            return Err(Error::Precondition(format!(
                "edge {e} is a loop and lies in no edge-cut"
            )));
        }
        if edge.sign.is_positive() {
            Ok(self.clone())
        } else {
            self.switch(&[edge.u.min(edge.v)])
        }
    }
}

/// Whether two signatures on the same multigraph are switching equivalent:
/// the symmetric difference of their negative edge sets must be an edge-cut.
pub fn signatures_equivalent(a: &SignedGraph, b: &SignedGraph) -> Result<bool> {
    if !a.same_underlying(b) {
        return Err(Error::UnderlyingMismatch);
    }
    let difference = a.negative_edges().symmetric_difference(&b.negative_edges());
    Ok(a.is_edge_cut(&difference))
}
