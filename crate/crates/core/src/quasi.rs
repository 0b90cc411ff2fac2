//! Fitting a period-2 quasipolynomial to integer flow counts.
//!
//! Counts are split by the parity of `n`. Each class is interpolated exactly
//! through all of its points except the largest, and the held-out point
//! decides whether the fit is accepted.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{write_terms, IntPolynomial};

/// Polynomial with exact rational coefficients, ascending powers, no
/// trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut coeffs: Vec<_> = coeffs.into_iter().collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// The same polynomial over the integers, if every coefficient is one.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Least-degree polynomial through the given points (distinct `x`),
    /// via Newton divided differences.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let xs: Vec<_> = points.iter().map(|(x, _)| x.clone()).collect();
        let mut table: Vec<_> = points.iter().map(|(_, y)| y.clone()).collect();
        for j in 1..table.len() {
            for i in (j..table.len()).rev() {
                table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        // Horner on the Newton form: p = c0 + (x - x0)(c1 + (x - x1)(c2 + …)).
        let mut acc: Vec<BigRational> = Vec::new();
        for i in (0..table.len()).rev() {
            // acc ← acc·(x - x_i) + c_i
            let mut next = alloc::vec![BigRational::zero(); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * &xs[i];
            }
            next[0] += &table[i];
            acc = next;
        }
        RatPolynomial::new(acc)
    }
}

impl From<&IntPolynomial> for RatPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        RatPolynomial::new(p.coeffs().iter().cloned().map(BigRational::from_integer))
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, Zero::is_zero, Signed::is_negative, |c| {
            format!("{}", c.abs())
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomialFit {
    pub p_even: RatPolynomial,
    pub p_odd: RatPolynomial,
    /// Whether both held-out points were reproduced exactly.
    pub validated: bool,
    pub sample_range: (u64, u64),
}

impl QuasiPolynomialFit {
    /// True when one polynomial describes both parity classes.
    pub fn has_period_one(&self) -> bool {
        self.p_even == self.p_odd
    }
}

fn fit_class(points: &[(u64, BigInt)]) -> (RatPolynomial, bool) {
    let rational: Vec<_> = points
        .iter()
        .map(|(n, c)| (BigRational::from_integer(BigInt::from(*n)), BigRational::from_integer(c.clone())))
        .collect();
    let (held_out, training) = rational.split_last().expect("class has at least 3 points");
    let p = RatPolynomial::interpolate(training);
    let ok = p.eval(&held_out.0) == held_out.1;
    (p, ok)
}

/// Fits `p_even` and `p_odd` to `(n, count)` samples at consecutive `n`.
pub fn fit_quasipolynomial(samples: &[(u64, BigInt)]) -> Result<QuasiPolynomialFit> {
    let mut sorted = samples.to_vec();
    sorted.sort_by_key(|(n, _)| *n);
    if sorted.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::Precondition(
            "samples must be taken at consecutive values of n".into(),
        ));
    }
    let (even, odd): (Vec<_>, Vec<_>) = sorted.into_iter().partition(|(n, _)| n % 2 == 0);
    for (name, class) in [("even", &even), ("odd", &odd)] {
        if class.len() < 3 {
            return Err(Error::Underdetermined(format!(
                "{} {name} sample(s); at least 3 are needed",
                class.len()
            )));
        }
    }
    let n_min = even[0].0.min(odd[0].0);
    let n_max = even[even.len() - 1].0.max(odd[odd.len() - 1].0);
    let (p_even, even_ok) = fit_class(&even);
    let (p_odd, odd_ok) = fit_class(&odd);
    Ok(QuasiPolynomialFit {
        p_even,
        p_odd,
        validated: even_ok && odd_ok,
        sample_range: (n_min, n_max),
    })
}
