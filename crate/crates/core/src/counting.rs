//! Exact counts. Every division asserts a zero remainder.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // running product stays integral: C(n-k+i, i) after step i
    (1..=k).fold(BigUint::one(), |acc, i| exact_div(acc * (n - k + i), &BigUint::from(i)))
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division {num} / {den}");
    q
}

/// `C(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> BigUint {
    exact_div(binomial(2 * m, m), &BigUint::from(m + 1))
}

/// Number of maximal rigid sets on the `2n+1`-vertex hat quiver:
/// `C(4n+2, 2n+1) / (2n+2)`.
pub fn hat_count(n: u64) -> BigUint {
    assert!(n >= 1);
    exact_div(binomial(4 * n + 2, 2 * n + 1), &BigUint::from(2 * n + 2))
}

/// `2^{n-1} / (n+1) · C(4n+2, 2n+1)`.
pub fn theorem_count(n: u64) -> BigUint {
    assert!(n >= 1);
    let numerator = (BigUint::one() << (n - 1) as usize) * binomial(4 * n + 2, 2 * n + 1);
    exact_div(numerator, &BigUint::from(n + 1))
}

/// Formula and (optionally) enumerated counts for one segment count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: u64,
    #[serde(serialize_with = "as_decimal")]
    pub formula_count: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub hat_formula_count: BigUint,
    #[serde(serialize_with = "as_decimal_opt")]
    pub enumerated_count: Option<BigUint>,
    #[serde(serialize_with = "as_decimal_opt")]
    pub enumerated_hat_count: Option<BigUint>,
    pub count_match: Option<bool>,
    pub hat_match: Option<bool>,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

fn as_decimal_opt<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => as_decimal(v, s),
        None => s.serialize_none(),
    }
}

impl CountReport {
    pub fn formula(n: u64) -> CountReport {
        let formula_count = theorem_count(n);
        let hat_formula_count = hat_count(n);
        assert_eq!(formula_count, (BigUint::one() << n as usize) * &hat_formula_count);
        CountReport {
            n,
            formula_count,
            hat_formula_count,
            enumerated_count: None,
            enumerated_hat_count: None,
            count_match: None,
            hat_match: None,
        }
    }

    pub fn with_enumeration(mut self, reps: u64, hats: u64) -> CountReport {
        let reps = BigUint::from(reps);
        let hats = BigUint::from(hats);
        self.count_match = Some(reps == self.formula_count);
        self.hat_match = Some(hats == self.hat_formula_count);
        self.enumerated_count = Some(reps);
        self.enumerated_hat_count = Some(hats);
        self
    }

    /// False only when an enumerated value disagrees with its formula.
    pub fn all_match(&self) -> bool {
        self.count_match.unwrap_or(true) && self.hat_match.unwrap_or(true)
    }
}
