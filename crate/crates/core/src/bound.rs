//! Exact evaluation of the lower bound on the number of nonequivalent
//! switched codes.
//!
//! There are `q^(q^T)` switch vectors with `T = [m]_q - m`, all giving
//! different codes, and an equivalence class holds at most
//! `(q-1)^n n! q^n` codes. Dividing gives more than
//! `q^(q^T - n(m+2))` classes.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Largest n for which the class cap `(q-1)^n n! q^n` is expanded.
pub const MAX_BOUND_LENGTH: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingBound {
    pub q: u64,
    pub m: u32,
    pub n: BigUint,
    /// `[m]_q = (q^m - 1)/(q - 1)`.
    pub q_analog: BigUint,
    /// `[m]_q - m`: the base-q logarithm of the number of cosets.
    pub t_exponent: BigUint,
    /// `q^([m]_q - m)`: number of cosets, and the base-q logarithm of the
    /// number of distinct codes.
    pub codes_total_exponent: BigUint,
    /// `q^([m]_q - m) - n(m + 2)`.
    pub bound_exponent: BigInt,
    /// `(q-1)^n n! q^n`.
    pub class_cap: BigUint,
}

pub fn counting_bound(q: u64, m: u32) -> Result<CountingBound> {
    if q < 3 {
        return Err(Error::invalid("the bound needs q >= 3"));
    }
    if m < 2 {
        return Err(Error::invalid("the bound needs m >= 2"));
    }
    let qb = BigUint::from(q);
    let n = qb.pow(m);
    let q_analog = (&n - BigUint::one()) / (&qb - BigUint::one());
    let t_exponent = &q_analog - BigUint::from(m);
    let t_small = t_exponent
        .to_u32()
        .ok_or_else(|| Error::invalid("[m]_q - m does not fit in 32 bits"))?;
    let codes_total_exponent = qb.pow(t_small);
    let bound_exponent =
        BigInt::from(codes_total_exponent.clone()) - BigInt::from(&n * BigUint::from(m + 2));
    let n_small = n
        .to_u64()
        .filter(|&n| n <= MAX_BOUND_LENGTH)
        .ok_or_else(|| Error::invalid(format!("n = {n} too large to expand n!")))?;
    let factorial = (1..=n_small).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
    let class_cap = BigUint::from(q - 1).pow(n_small as u32) * factorial * qb.pow(n_small as u32);
    Ok(CountingBound {
        q,
        m,
        n,
        q_analog,
        t_exponent,
        codes_total_exponent,
        bound_exponent,
        class_cap,
    })
}

impl CountingBound {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q={}", self.q);
        let _ = writeln!(s, "m={}", self.m);
        let _ = writeln!(s, "n={}", self.n);
        let _ = writeln!(s, "q_analog={}", self.q_analog);
        let _ = writeln!(s, "coset_exponent={}", self.t_exponent);
        let _ = writeln!(s, "distinct_codes=q^{}", self.codes_total_exponent);
        let _ = writeln!(s, "class_cap={}", self.class_cap);
        let _ = writeln!(s, "nonequivalent_lower_bound=q^{}", self.bound_exponent);
        s
    }
}

/// Smallest m in `2..=max_m` with `q^T - n(m+2) > q^(c n)`, `c = 1/q - eps`,
/// compared through base-q logarithms in floating point. This only
/// evaluates the exponents; it proves nothing about the asymptotic claim.
pub fn exponent_threshold(q: u64, eps: f64, max_m: u32) -> Result<Option<u32>> {
    if !(eps > 0.0 && eps < 1.0 / q as f64) {
        return Err(Error::invalid(format!("epsilon must lie in (0, 1/{q})")));
    }
    let c = 1.0 / q as f64 - eps;
    for m in 2..=max_m {
        let qb = BigUint::from(q);
        let n = qb.pow(m);
        let t = ((&n - BigUint::one()) / (&qb - BigUint::one()) - BigUint::from(m))
            .to_u32()
            .ok_or_else(|| Error::invalid("exponent overflow"))?;
        let b = BigInt::from(qb.pow(t)) - BigInt::from(&n * BigUint::from(m + 2));
        if b <= BigInt::from(0) {
            continue;
        }
        let log_b = big_log(&b.to_biguint().expect("positive"), q as f64);
        let n_f = n.to_f64().unwrap_or(f64::INFINITY);
        if log_b > c * n_f {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn big_log(x: &BigUint, base: f64) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("fits");
    (top.ln() + shift as f64 * std::f64::consts::LN_2) / base.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_at_three_two() {
        let b = counting_bound(3, 2).unwrap();
        assert_eq!(b.q_analog, BigUint::from(4u32));
        assert_eq!(b.codes_total_exponent, BigUint::from(9u32));
        assert_eq!(b.bound_exponent, BigInt::from(-27));
    }

    #[test]
    fn rejects_small_parameters() {
        assert!(counting_bound(2, 3).is_err());
        assert!(counting_bound(3, 1).is_err());
    }

    #[test]
    fn threshold_exists_for_moderate_eps() {
        let m = exponent_threshold(3, 0.1, 8).unwrap();
        assert!(m.is_some());
        assert!(exponent_threshold(3, 0.5, 8).is_err());
    }
}
