//! Finite abelian groups written as products `Z_{m_1} × … × Z_{m_k}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
    order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl FiniteAbelianGroup {
    /// Moduli equal to 1 are kept as given. An empty list is the trivial group.
    pub fn new(moduli: impl Into<Vec<u64>>) -> Result<Self> {
        let moduli = moduli.into();
        let mut order: u64 = 1;
        for &m in &moduli {
            if m == 0 {
                return Err(Error::InvalidGroup(format!("modulus must be at least 1, got {m}")));
            }
            order = order
                .checked_mul(m)
                .ok_or_else(|| Error::InvalidGroup(format!("order of {moduli:?} overflows u64")))?;
        }
        Ok(FiniteAbelianGroup { moduli, order })
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// 2-rank: the largest `d` with `Z_2^d` a subgroup. `Z_m` contributes one
    /// exactly when `m` is even and the 2-rank is additive over products.
    pub fn epsilon2(&self) -> u32 {
        self.moduli.iter().filter(|&&m| m % 2 == 0).count() as u32
    }

    /// `|Γ| / 2^{ε₂(Γ)}`, the argument at which `f_{ε₂}` is evaluated.
    pub fn reduced_order(&self) -> u64 {
        self.order >> self.epsilon2()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.moduli.len()],
        }
    }

    pub fn element(&self, residues: impl Into<Vec<u64>>) -> Result<GroupElement> {
        let el = GroupElement {
            residues: residues.into(),
        };
        self.check(&el)?;
        Ok(el)
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        self.check(a).is_ok()
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.residues.len() != self.moduli.len() {
            return Err(Error::ElementMismatch(format!(
                "{a} has {} components, group has {}",
                a.residues.len(),
                self.moduli.len()
            )));
        }
        if let Some((r, m)) = a.residues.iter().zip(&self.moduli).find(|(r, m)| r >= m) {
            return Err(Error::ElementMismatch(format!("residue {r} not below modulus {m}")));
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        Ok(GroupElement { residues })
    }

    pub fn negate(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let residues = a
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(x, m)| (m - x) % m)
            .collect();
        Ok(GroupElement { residues })
    }

    pub fn double(&self, a: &GroupElement) -> Result<GroupElement> {
        self.add(a, a)
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.residues.iter().all(|&r| r == 0)
    }

    /// All elements, lexicographic in the residue tuple.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            moduli: &self.moduli,
            next: Some(vec![0; self.moduli.len()]),
        }
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.elements().skip(1)
    }

    /// Moduli as a comma-separated list, e.g. `4,2`.
    pub fn spec_string(&self) -> alloc::string::String {
        let parts: Vec<_> = self.moduli.iter().map(|m| format!("{m}")).collect();
        parts.join(",")
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "Z1");
        }
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

pub struct Elements<'a> {
    moduli: &'a [u64],
    next: Option<Vec<u64>>,
}

impl Iterator for Elements<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        let mut i = successor.len();
        let mut carried_out = true;
        while i > 0 {
            i -= 1;
            successor[i] += 1;
            if successor[i] < self.moduli[i] {
                carried_out = false;
                break;
            }
            successor[i] = 0;
        }
        if !carried_out {
            self.next = Some(successor);
        }
        Some(GroupElement { residues: current })
    }
}

fn factorize(mut k: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= k {
        let mut e = 0;
        while k.is_multiple_of(p) {
            k /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += 1;
    }
    if k > 1 {
        factors.push((k, 1));
    }
    factors
}

/// Partitions of `n` into non-increasing parts, largest part first.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(cap)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One representative per isomorphism class of abelian groups of order `k`,
/// in invariant-factor form with the largest factor first (`Z8 x Z2`, not
/// `Z2 x Z8`). Order 1 gives the trivial group with no moduli.
pub fn groups_of_order(k: u64) -> Vec<FiniteAbelianGroup> {
    if k == 0 {
        return Vec::new();
    }
    let mut choices: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factorize(k) {
        let mut next = Vec::new();
        for factors in &choices {
            for lambda in partitions(e) {
                let width = factors.len().max(lambda.len());
                let combined = (0..width)
                    .map(|i| {
                        let base = factors.get(i).copied().unwrap_or(1);
                        base * lambda.get(i).map_or(1, |&a| p.pow(a))
                    })
                    .collect();
                next.push(combined);
            }
        }
        choices = next;
    }
    choices
        .into_iter()
        .map(|moduli| FiniteAbelianGroup::new(moduli).expect("factors of a u64 order"))
        .collect()
}

/// Every isomorphism type of order `1..=max_order`, grouped by order.
pub fn groups_up_to(max_order: u64) -> Vec<FiniteAbelianGroup> {
    (1..=max_order).flat_map(groups_of_order).collect()
}

/// All pairs of non-isomorphic groups sharing both order and 2-rank, over
/// orders `1..=max_order`.
pub fn group_pairs_same_invariants(
    max_order: u64,
) -> Vec<(FiniteAbelianGroup, FiniteAbelianGroup)> {
    let mut pairs = Vec::new();
    for k in 1..=max_order {
        let groups = groups_of_order(k);
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[i + 1..] {
                if a.epsilon2() == b.epsilon2() {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
    }
    pairs
}
