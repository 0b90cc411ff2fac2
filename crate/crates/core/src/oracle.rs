//! Brute-force counting of nowhere-zero flows.
//!
//! Edges are assigned in id order. As soon as every half-edge at a vertex has
//! a value the Kirchhoff sum at that vertex is checked and the branch is
//! pruned if it is nonzero. Nothing cleverer is attempted: these counters are
//! the reference the polynomial engine is tested against.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::abelian::{FiniteAbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::graph::{HalfEdge, Orientation, SignedGraph};

/// Upper bound on the number of leaves an enumeration may visit, checked
/// against a worst-case estimate before any work is done.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_leaves: u64,
}

impl Budget {
    pub const DEFAULT_LEAVES: u64 = 100_000_000;

    pub fn new(max_leaves: u64) -> Self {
        Budget { max_leaves }
    }

    fn admit(&self, estimate: BigUint) -> Result<()> {
        if estimate > BigUint::from(self.max_leaves) {
            Err(Error::BudgetExceeded {
                estimate,
                budget: self.max_leaves,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LEAVES)
    }
}

/// A group value for every edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowAssignment {
    pub values: Vec<GroupElement>,
}

/// Whether `phi` satisfies `Σ_{h at v} tau(h)·phi(e_h) = 0` at every vertex.
/// A loop contributes both of its half-edges. Zero values are allowed; see
/// [`is_nowhere_zero`].
pub fn verify_flow(
    g: &SignedGraph,
    tau: &Orientation,
    gamma: &FiniteAbelianGroup,
    phi: &FlowAssignment,
) -> bool {
    if phi.values.len() != g.num_edges()
        || !tau.is_valid_for(g)
        || !phi.values.iter().all(|x| gamma.contains(x))
    {
        return false;
    }
    let mut sums = vec![gamma.zero(); g.num_vertices()];
    for (id, edge) in g.edges().iter().enumerate() {
        let value = &phi.values[id];
        let negated = gamma.negate(value).expect("checked membership");
        for slot in 0..2 {
            let v = edge.endpoint(slot);
            let term = if tau.get(HalfEdge::new(id, slot)).is_positive() {
                value
            } else {
                &negated
            };
            sums[v] = gamma.add(&sums[v], term).expect("checked membership");
        }
    }
    sums.iter().all(|s| gamma.is_zero(s))
}

pub fn is_nowhere_zero(gamma: &FiniteAbelianGroup, phi: &FlowAssignment) -> bool {
    phi.values.iter().all(|x| !gamma.is_zero(x))
}

/// Integer assignment check: Kirchhoff over `Z` under orientation `tau`.
pub fn verify_integer_flow(g: &SignedGraph, tau: &Orientation, values: &[i64]) -> bool {
    if values.len() != g.num_edges() || !tau.is_valid_for(g) {
        return false;
    }
    let mut sums = vec![0i128; g.num_vertices()];
    for (id, edge) in g.edges().iter().enumerate() {
        for slot in 0..2 {
            let arrow = i128::from(tau.get(HalfEdge::new(id, slot)).value());
            sums[edge.endpoint(slot)] += arrow * i128::from(values[id]);
        }
    }
    sums.iter().all(|&s| s == 0)
}

/// Per-edge bookkeeping shared by both enumerators: the signed coefficient of
/// the edge value at each endpoint, and which vertices close once the edge
/// is assigned.
struct Plan {
    /// `(vertex, coefficient)` for each half-edge; a loop appears twice.
    incidences: Vec<[(usize, i64); 2]>,
    /// Vertices whose last incident edge is this one.
    closes: Vec<Vec<usize>>,
}

impl Plan {
    fn new(g: &SignedGraph, tau: &Orientation) -> Self {
        let incidences = g
            .edges()
            .iter()
            .enumerate()
            .map(|(id, e)| {
                [
                    (e.u, i64::from(tau.get(HalfEdge::new(id, 0)).value())),
                    (e.v, i64::from(tau.get(HalfEdge::new(id, 1)).value())),
                ]
            })
            .collect();
        let mut last = vec![None; g.num_vertices()];
        for (id, e) in g.edges().iter().enumerate() {
            last[e.u] = Some(id);
            last[e.v] = Some(id);
        }
        let mut closes = vec![Vec::new(); g.num_edges()];
        for (v, id) in last.iter().enumerate() {
            if let Some(id) = id {
                closes[*id].push(v);
            }
        }
        Plan { incidences, closes }
    }
}

/// Residue-vector sums for every vertex, stored flat.
struct GroupSums<'a> {
    moduli: &'a [u64],
    sums: Vec<u64>,
}

impl GroupSums<'_> {
    fn apply(&mut self, v: usize, value: &[u64], coefficient: i64) {
        let k = self.moduli.len();
        for (i, (&x, &m)) in value.iter().zip(self.moduli).enumerate() {
            let slot = &mut self.sums[v * k + i];
            *slot = if coefficient > 0 {
                (*slot + x) % m
            } else {
                (*slot + m - x) % m
            };
        }
    }

    fn is_zero(&self, v: usize) -> bool {
        let k = self.moduli.len();
        self.sums[v * k..(v + 1) * k].iter().all(|&x| x == 0)
    }
}

/// Number of nowhere-zero `gamma`-flows on `g` under its default orientation.
pub fn count_group_flows(
    g: &SignedGraph,
    gamma: &FiniteAbelianGroup,
    budget: Budget,
) -> Result<BigUint> {
    count_group_flows_oriented(g, &g.default_orientation(), gamma, budget)
}

/// Same count under an explicit orientation of `g`.
pub fn count_group_flows_oriented(
    g: &SignedGraph,
    tau: &Orientation,
    gamma: &FiniteAbelianGroup,
    budget: Budget,
) -> Result<BigUint> {
    if !tau.is_valid_for(g) {
        return Err(Error::Precondition(alloc::string::String::from(
            "orientation does not match the signed graph",
        )));
    }
    budget.admit(BigUint::from(gamma.order() - 1).pow(g.num_edges()))?;

    let values: Vec<Vec<u64>> = gamma
        .nonzero_elements()
        .map(|x| x.residues().to_vec())
        .collect();
    let plan = Plan::new(g, tau);
    let mut sums = GroupSums {
        moduli: gamma.moduli(),
        sums: vec![0; g.num_vertices() * gamma.moduli().len()],
    };

    fn descend(e: usize, plan: &Plan, values: &[Vec<u64>], sums: &mut GroupSums<'_>) -> u64 {
        if e == plan.incidences.len() {
            return 1;
        }
        let mut total = 0;
        for value in values {
            for &(v, c) in &plan.incidences[e] {
                sums.apply(v, value, c);
            }
            if plan.closes[e].iter().all(|&v| sums.is_zero(v)) {
                total += descend(e + 1, plan, values, sums);
            }
            for &(v, c) in &plan.incidences[e] {
                sums.apply(v, value, -c);
            }
        }
        total
    }

    Ok(BigUint::from(descend(0, &plan, &values, &mut sums)))
}

/// Number of integer flows on `g` (default orientation) with every value in
/// `{±1, …, ±(n-1)}`.
pub fn count_integer_nflows(g: &SignedGraph, n: u64, budget: Budget) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Precondition(alloc::string::String::from("n must be at least 1")));
    }
    let span = 2 * (n - 1);
    budget.admit(BigUint::from(span).pow(g.num_edges()))?;

    let top = i64::try_from(n - 1)
        .map_err(|_| Error::Precondition(alloc::string::String::from("n too large")))?;
    let values: Vec<i64> = (-top..=top).filter(|&k| k != 0).collect();
    let plan = Plan::new(g, &g.default_orientation());
    let mut sums = vec![0i64; g.num_vertices()];

    fn descend(e: usize, plan: &Plan, values: &[i64], sums: &mut [i64]) -> u64 {
        if e == plan.incidences.len() {
            return 1;
        }
        let mut total = 0;
        for &value in values {
            for &(v, c) in &plan.incidences[e] {
                sums[v] += c * value;
            }
            if plan.closes[e].iter().all(|&v| sums[v] == 0) {
                total += descend(e + 1, plan, values, sums);
            }
            for &(v, c) in &plan.incidences[e] {
                sums[v] -= c * value;
            }
        }
        total
    }

    Ok(BigUint::from(descend(0, &plan, &values, &mut sums)))
}

/// Number of `(x_1, …, x_t)` with every `x_i ≠ 0` and `2x_1 + … + 2x_t = 0`,
/// by plain enumeration.
pub fn count_double_sum_solutions_oracle(
    t: usize,
    gamma: &FiniteAbelianGroup,
    budget: Budget,
) -> Result<BigUint> {
    budget.admit(BigUint::from(gamma.order() - 1).pow(t))?;
    let doubles: Vec<GroupElement> = gamma
        .nonzero_elements()
        .map(|x| gamma.double(&x).expect("enumerated element"))
        .collect();

    fn descend(
        left: usize,
        acc: &GroupElement,
        gamma: &FiniteAbelianGroup,
        doubles: &[GroupElement],
    ) -> u64 {
        if left == 0 {
            return u64::from(gamma.is_zero(acc));
        }
        doubles
            .iter()
            .map(|d| descend(left - 1, &gamma.add(acc, d).expect("same group"), gamma, doubles))
            .sum()
    }

    Ok(BigUint::from(descend(t, &gamma.zero(), gamma, &doubles)))
}
