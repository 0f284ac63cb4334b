use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LinError;

/// Ground ring of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    Rationals,
    /// The prime field with `p` elements; `p` is checked to be prime on construction.
    PrimeField(u64),
}

impl Ring {
    /// Builds `F_p`, rejecting composite or degenerate moduli.
    pub fn prime_field(p: u64) -> Result<Ring, LinError> {
        if is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(LinError::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// The characteristic: 0 for Z and Q, `p` for F_p.
    pub fn characteristic(self) -> u64 {
        match self {
            Ring::PrimeField(p) => p,
            _ => 0,
        }
    }

    /// Reduces a machine integer into the canonical representative used by
    /// the combinatorial layers (which only ever need Z or F_p coefficients).
    pub fn reduce_i64(self, v: i64) -> i64 {
        match self {
            Ring::PrimeField(p) => v.rem_euclid(p as i64),
            _ => v,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "z"),
            Ring::Rationals => write!(f, "q"),
            Ring::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = LinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "z" | "zz" | "integers" => Ok(Ring::Integers),
            "q" | "qq" | "rationals" => Ok(Ring::Rationals),
            _ => {
                let rest = t
                    .strip_prefix("fp:")
                    .or_else(|| t.strip_prefix("f"))
                    .ok_or_else(|| LinError::BadRingSpec(s.to_string()))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| LinError::BadRingSpec(s.to_string()))?;
                Ring::prime_field(p)
            }
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
