//! The flow polynomials `f_d`, computed by deletion–contraction.
//!
//! For a fixed 2-rank `d` write `|Γ| = 2^d·n`. The recursion is:
//!
//! 1. a graph whose edges span several components is the product of its
//!    components;
//! 2. a positive loop `e` contributes a factor `2^d·n - 1` and is deleted;
//! 3. otherwise a non-loop edge `e` is switched positive if needed and
//!    `f(G) = f(G/e) - f(G∖e)`;
//! 4. what is left is one vertex carrying `t` negative loops. Orienting every
//!    half-edge toward the vertex turns Kirchhoff's law into
//!    `2x_1 + … + 2x_t = 0`, counted by [`double_sum_solutions`].
//!
//! Rules 2 and 3 pick the lowest eligible edge id. The result does not depend
//! on that choice.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::abelian::FiniteAbelianGroup;
use crate::graph::{Sign, SignedGraph};
use crate::lemma::double_sum_solutions;
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Reuse results for subgraphs with an identical sorted edge list.
    pub memoize: bool,
}

type CacheKey = (usize, Vec<(usize, usize, Sign)>);

fn cache_key(g: &SignedGraph) -> CacheKey {
    let mut edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| (e.u.min(e.v), e.u.max(e.v), e.sign))
        .collect();
    edges.sort_unstable();
    (g.num_vertices(), edges)
}

struct Recursion {
    d: u32,
    positive_loop_factor: IntPolynomial,
    cache: Option<BTreeMap<CacheKey, IntPolynomial>>,
}

impl Recursion {
    fn new(d: u32, options: EngineOptions) -> Self {
        let group_order = BigInt::one() << d;
        Recursion {
            d,
            positive_loop_factor: IntPolynomial::linear(group_order, -1),
            cache: options.memoize.then(BTreeMap::new),
        }
    }

    fn solve(&mut self, g: &SignedGraph) -> IntPolynomial {
        let mut parts = g.edge_components();
        match parts.len() {
            0 => IntPolynomial::one(),
            1 => self.solve_connected(&parts.swap_remove(0)),
            _ => parts
                .iter()
                .fold(IntPolynomial::one(), |acc, part| &acc * &self.solve_connected(part)),
        }
    }

    fn solve_connected(&mut self, g: &SignedGraph) -> IntPolynomial {
        let key = self.cache.as_ref().map(|_| cache_key(g));
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(hit) = cache.get(key) {
                return hit.clone();
            }
        }
        let result = self.reduce(g);
        if let (Some(cache), Some(key)) = (&mut self.cache, key) {
            cache.insert(key, result.clone());
        }
        result
    }

    fn reduce(&mut self, g: &SignedGraph) -> IntPolynomial {
        let edges = g.edges();
        if let Some(e) = edges.iter().position(|e| e.is_loop() && e.sign.is_positive()) {
            let rest = g.delete_edge(e).expect("edge id from enumeration");
            let rest = self.solve(&rest);
            return &self.positive_loop_factor * &rest;
        }
        if let Some(e) = edges.iter().position(|e| !e.is_loop()) {
            let positive = g.make_edge_positive(e).expect("non-loop edge");
            let contracted = positive.contract_edge(e).expect("positive non-loop edge");
            let deleted = positive.delete_edge(e).expect("edge id from enumeration");
            return &self.solve(&contracted) - &self.solve(&deleted);
        }
        let mut loops_at = alloc::vec![0usize; g.num_vertices()];
        for e in edges {
            loops_at[e.u] += 1;
        }
        loops_at
            .into_iter()
            .fold(IntPolynomial::one(), |acc, t| &acc * &double_sum_solutions(t, self.d))
    }
}

/// `f_d` for `g`: the number of nowhere-zero `Γ`-flows for any abelian `Γ`
/// with `ε₂(Γ) = d` is `f_d(|Γ| / 2^d)`.
pub fn flow_polynomial(g: &SignedGraph, d: u32) -> IntPolynomial {
    flow_polynomial_with(g, d, EngineOptions::default())
}

pub fn flow_polynomial_with(g: &SignedGraph, d: u32, options: EngineOptions) -> IntPolynomial {
    Recursion::new(d, options).solve(g)
}

/// Number of nowhere-zero `gamma`-flows, read off the matching `f_d`.
pub fn count_via_polynomial(g: &SignedGraph, gamma: &FiniteAbelianGroup) -> BigInt {
    flow_polynomial(g, gamma.epsilon2()).eval(&BigInt::from(gamma.reduced_order()))
}

/// `f_0, …, f_{d_max}` for one graph, tagged with a fingerprint of the graph
/// they were computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowPolynomialFamily {
    pub entries: BTreeMap<u32, IntPolynomial>,
    pub graph_fingerprint: u64,
}

impl FlowPolynomialFamily {
    pub fn get(&self, d: u32) -> Option<&IntPolynomial> {
        self.entries.get(&d)
    }

    /// Count for `gamma`, if its 2-rank is covered by the family.
    pub fn count_for(&self, gamma: &FiniteAbelianGroup) -> Option<BigInt> {
        self.get(gamma.epsilon2())
            .map(|f| f.eval(&BigInt::from(gamma.reduced_order())))
    }
}

pub fn flow_polynomial_family(g: &SignedGraph, d_max: u32) -> FlowPolynomialFamily {
    FlowPolynomialFamily {
        entries: (0..=d_max).map(|d| (d, flow_polynomial(g, d))).collect(),
        graph_fingerprint: fingerprint(g),
    }
}

/// 64-bit FNV-1a over the vertex count and the edge list in id order.
pub fn fingerprint(g: &SignedGraph) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut hash = OFFSET;
    let mut feed = |word: u64| {
        for byte in word.to_le_bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(PRIME);
        }
    };
    feed(g.num_vertices() as u64);
    feed(g.num_edges() as u64);
    for e in g.edges() {
        feed(e.u as u64);
        feed(e.v as u64);
        feed(u64::from(e.sign.is_negative()));
    }
    hash
}
