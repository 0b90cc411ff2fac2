//! Closed forms for sums of nonzero group elements.
//!
//! `N(s)` counts `(x_1, …, x_s)` with every `x_i ≠ 0` and `x_1 + … + x_s = 0`
//! in any abelian group of order `m`; it depends on `m` only. Doubling maps
//! `Γ` onto a subgroup of order `n = |Γ| / 2^d` with kernel `Z_2^d`, so each
//! image tuple with `s` nonzero entries lifts to `(2^d)^s (2^d - 1)^(t-s)`
//! nonzero tuples in `Γ`. Summing over `s` gives the number of nonzero
//! solutions of `2x_1 + … + 2x_t = 0`, the count for a single vertex carrying
//! `t` negative loops.
//!
//! The all-zero image tuple (`s = 0`) is one solution, so `N(0) = 1`. With
//! `N(0) = 0` the count for `t = 1` in `Z_2` would come out 0 instead of 1.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;

/// `C(t, s)` for every `s` in `0..=t`.
fn binomial_row(t: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(t + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for s in 1..=t {
        c = c * BigInt::from(t + 1 - s) / BigInt::from(s);
        row.push(c.clone());
    }
    row
}

/// `N(s)` as a polynomial in the group order `m`:
/// `Σ_{i=1}^{s-1} (-1)^{i-1} (m-1)^{s-i}` for `s ≥ 1`, and `1` for `s = 0`.
pub fn nonzero_sum_count(s: usize) -> IntPolynomial {
    if s == 0 {
        return IntPolynomial::one();
    }
    let m_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
    let mut total = IntPolynomial::zero();
    for i in 1..s {
        let term = m_minus_1.pow((s - i) as u32);
        total = if i % 2 == 1 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

/// `N(s)` for a concrete group order `m`.
pub fn nonzero_sum_count_at(s: usize, m: u64) -> BigInt {
    nonzero_sum_count(s).eval(&BigInt::from(m))
}

/// Polynomial `Q_{d,t}(n)` counting nonzero solutions of
/// `2x_1 + … + 2x_t = 0` in any abelian group of 2-rank `d` and order `2^d·n`.
pub fn double_sum_solutions(t: usize, d: u32) -> IntPolynomial {
    let kernel = BigInt::one() << d;
    let kernel_nonzero = &kernel - BigInt::one();
    let binomials = binomial_row(t);
    let mut total = IntPolynomial::zero();
    for (s, binomial) in binomials.iter().enumerate() {
        let lifts = num_traits::pow(kernel.clone(), s) * num_traits::pow(kernel_nonzero.clone(), t - s);
        let weight = lifts * binomial;
        if weight.is_zero() {
            continue;
        }
        total = &total + &nonzero_sum_count(s).scale(&weight);
    }
    total
}
