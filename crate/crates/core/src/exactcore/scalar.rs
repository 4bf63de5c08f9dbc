use std::fmt;

use super::poly::{Poly, Rational};
use crate::error::{Error, Result};

/// Which ring a value lives in. Rational values are degree ≤ 0 polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Rational,
    Poly,
}

impl Ring {
    /// The smallest ring containing both.
    pub fn join(self, other: Ring) -> Ring {
        if self == Ring::Poly || other == Ring::Poly {
            Ring::Poly
        } else {
            Ring::Rational
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ring::Rational => "Q",
            Ring::Poly => "Q[q]",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact element of `Q` or `Q[q]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    ring: Ring,
    value: Poly,
}

impl Scalar {
    pub fn rational(r: Rational) -> Self {
        Scalar { ring: Ring::Rational, value: Poly::constant(r) }
    }

    /// Fails if a nonconstant polynomial is tagged rational.
    pub fn new(ring: Ring, value: Poly) -> Result<Self> {
        if ring == Ring::Rational && !value.is_constant() {
            return Err(Error::RingMismatch(format!("{value} is not a rational")));
        }
        Ok(Scalar { ring, value })
    }

    pub fn poly(value: Poly) -> Self {
        Scalar { ring: Ring::Poly, value }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn into_poly(self) -> Poly {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_ring(&self, other: &Scalar) -> Result<Ring> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        Ok(self.ring)
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        let ring = self.same_ring(other)?;
        Ok(Scalar { ring, value: &self.value + &other.value })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        let ring = self.same_ring(other)?;
        Ok(Scalar { ring, value: &self.value - &other.value })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        let ring = self.same_ring(other)?;
        Ok(Scalar { ring, value: &self.value * &other.value })
    }

    pub fn neg(&self) -> Scalar {
        Scalar { ring: self.ring, value: -&self.value }
    }

    /// Specializes `q := q0`; the identity on rationals.
    pub fn eval_q(&self, q0: &Rational) -> Scalar {
        Scalar::rational(self.value.eval(q0))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::poly::{int, rat};

    #[test]
    fn fraction_arithmetic() {
        let a = Scalar::rational(rat(1, 2));
        let b = Scalar::rational(rat(1, 3));
        assert_eq!(a.try_add(&b).unwrap(), Scalar::rational(rat(5, 6)));
    }

    #[test]
    fn ring_mismatch_is_typed() {
        let a = Scalar::rational(int(1));
        let b = Scalar::poly(Poly::q());
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_))));
        assert!(Scalar::new(Ring::Rational, Poly::q()).is_err());
    }

    #[test]
    fn eval_specializes() {
        let p = Scalar::poly(Poly::from_ints(&[2, 6]));
        assert_eq!(p.eval_q(&rat(-1, 2)), Scalar::rational(int(-1)));
        let c = Scalar::rational(int(7));
        assert_eq!(c.eval_q(&int(5)), c);
        let two = Scalar::poly(Poly::from_int(2));
        let lin = Scalar::poly(Poly::from_ints(&[1, 3]));
        assert_eq!(two.try_mul(&lin).unwrap().value(), &Poly::from_ints(&[2, 6]));
    }
}
