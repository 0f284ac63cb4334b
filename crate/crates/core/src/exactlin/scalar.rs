use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Ring;

/// An exact ring element tagged with its ring.
///
/// Integers are arbitrary precision, rationals are kept reduced by
/// `num-rational`, and residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    ring: Ring,
    value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    pub fn zero(ring: Ring) -> Scalar {
        Scalar::from_i64(ring, 0)
    }

    pub fn one(ring: Ring) -> Scalar {
        Scalar::from_i64(ring, 1)
    }

    pub fn from_i64(ring: Ring, v: i64) -> Scalar {
        Scalar::from_bigint(ring, BigInt::from(v))
    }

    pub fn from_bigint(ring: Ring, v: BigInt) -> Scalar {
        let value = match ring {
            Ring::Integers => Value::Int(v),
            Ring::Rationals => Value::Rat(BigRational::from_integer(v)),
            Ring::PrimeField(p) => {
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                Value::Mod(r.to_u64().expect("residue fits in u64"))
            }
        };
        Scalar { ring, value }
    }

    /// A rational number; only valid when `ring` is Q.
    pub fn from_ratio(numer: BigInt, denom: BigInt) -> Scalar {
        Scalar {
            ring: Ring::Rationals,
            value: Value::Rat(BigRational::new(numer, denom)),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.is_zero(),
            Value::Rat(v) => v.is_zero(),
            Value::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.is_one(),
            Value::Rat(v) => v.is_one(),
            Value::Mod(v) => *v == 1,
        }
    }

    /// Whether the element is invertible in its ring.
    pub fn is_unit(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.abs().is_one(),
            _ => !self.is_zero(),
        }
    }

    /// The integer value over Z, the residue over F_p; `None` for
    /// non-integral rationals.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match &self.value {
            Value::Int(v) => Some(v.clone()),
            Value::Rat(v) => v.is_integer().then(|| v.to_integer()),
            Value::Mod(v) => Some(BigInt::from(*v)),
        }
    }

    pub(crate) fn as_residue(&self) -> u64 {
        match &self.value {
            Value::Mod(v) => *v,
            _ => panic!("residue requested for a non-modular scalar"),
        }
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(self.ring, other.ring, "scalars from different rings");
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other);
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.ring.characteristic();
                Value::Mod(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => unreachable!(),
        };
        Scalar { ring: self.ring, value }
    }

    pub fn neg(&self) -> Scalar {
        let value = match &self.value {
            Value::Int(a) => Value::Int(-a),
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a) => {
                let p = self.ring.characteristic();
                Value::Mod((p - a) % p)
            }
        };
        Scalar { ring: self.ring, value }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other);
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.ring.characteristic();
                Value::Mod(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            _ => unreachable!(),
        };
        Scalar { ring: self.ring, value }
    }

    /// Multiplicative inverse of a unit.
    pub fn inv(&self) -> Option<Scalar> {
        if !self.is_unit() {
            return None;
        }
        let value = match &self.value {
            Value::Int(a) => Value::Int(a.clone()),
            Value::Rat(a) => Value::Rat(a.recip()),
            Value::Mod(a) => Value::Mod(inv_mod(*a, self.ring.characteristic())),
        };
        Some(Scalar { ring: self.ring, value })
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u128;
    let m = p as u128;
    let mut b = a as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    a = r as u64;
    a
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) => write!(f, "{v}"),
            Value::Mod(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_canonical() {
        let r = Ring::PrimeField(5);
        assert_eq!(Scalar::from_i64(r, -1), Scalar::from_i64(r, 4));
        assert_eq!(Scalar::from_i64(r, 12).to_bigint(), Some(BigInt::from(2)));
        assert!(Scalar::from_i64(r, 10).is_zero());
    }

    #[test]
    fn rationals_are_reduced() {
        let a = Scalar::from_ratio(BigInt::from(2), BigInt::from(4));
        let b = Scalar::from_ratio(BigInt::from(1), BigInt::from(2));
        assert_eq!(a, b);
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn field_inverses() {
        let r = Ring::PrimeField(7);
        for v in 1..7 {
            let s = Scalar::from_i64(r, v);
            assert!(s.mul(&s.inv().unwrap()).is_one());
        }
        assert!(Scalar::from_i64(Ring::Integers, 2).inv().is_none());
        let m = Scalar::from_i64(Ring::Integers, -1);
        assert_eq!(m.inv().unwrap(), m);
    }
}
