//! Univariate polynomials over the rationals in the deformation parameter `q`.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial is the empty coefficient list and equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the rational `n/d`. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Poly::constant(rat(n, d))
    }

    /// Builds from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients in ascending degree, e.g. `[1, 2]` is `1 + 2q`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `c0 + c1*q`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Poly::from_coeffs(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Substitutes `q := inner`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] / &lc;
            let shift = top - dd;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let sub = c * &factor;
                rem[shift + i] -= sub;
            }
            quot[shift] = factor;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer primitive form: denominators cleared, content removed, positive leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        for c in ints.iter_mut() {
            *c = &*c / &content * &sign;
        }
        ints
    }

    /// Rational roots (without multiplicity) by the rational root theorem.
    pub fn rational_roots(&self) -> Result<RationalRoots> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rest = self.clone();
        let mut points = Vec::new();
        if rest.coeff(0).is_zero() {
            points.push(Rational::zero());
            while rest.coeff(0).is_zero() {
                rest = Poly::from_coeffs(rest.coeffs[1..].to_vec());
            }
        }
        let mut found = true;
        while found && rest.degree().unwrap_or(0) >= 1 {
            found = false;
            let ints = rest.primitive_integer_coeffs();
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            'search: for p in divisors(&a0) {
                for s in divisors(&an) {
                    for sign in [1i64, -1] {
                        let cand = Rational::new(&p * BigInt::from(sign), s.clone());
                        if rest.eval(&cand).is_zero() {
                            if !points.contains(&cand) {
                                points.push(cand.clone());
                            }
                            let lin = Poly::linear(-cand, Rational::one());
                            loop {
                                let (qt, r) = rest.div_rem(&lin)?;
                                if !r.is_zero() {
                                    break;
                                }
                                rest = qt;
                            }
                            found = true;
                            break 'search;
                        }
                    }
                }
            }
        }
        sort_points(&mut points);
        Ok(RationalRoots { points, has_nonrational_factor: rest.degree().unwrap_or(0) >= 1 })
    }
}

/// Canonical display order for root sets: by absolute value, negatives first on ties.
pub fn sort_points(points: &mut [Rational]) {
    points.sort_by(|a, b| match a.abs().cmp(&b.abs()) {
        Ordering::Equal => a.cmp(b),
        o => o,
    });
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.abs();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for base in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(base * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    pub points: Vec<Rational>,
    /// True iff a factor of degree ≥ 1 without rational roots remains.
    pub has_nonrational_factor: bool,
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match deg {
                0 => String::new(),
                1 => "q".to_string(),
                d => format!("q^{d}"),
            };
            if deg == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `-a`, or `a/b` with integer `a`, `b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Lossy conversion for progress output only.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(if negate_b { x - y } else { x + y });
    }
    out
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        Poly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<'a> Sub<&'a Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        if rhs.is_zero() {
            return self.clone();
        }
        Poly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &'a Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self += &(-rhs);
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(Poly::zero().coeffs().len(), 0);
    }

    #[test]
    fn expansion() {
        // (1+q)(1-q) = 1 - q^2
        assert_eq!(p(&[1, 1]) * p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(Poly::from_int(2) * p(&[1, 3]), p(&[2, 6]));
    }

    #[test]
    fn evaluation() {
        let half = rat(-1, 2);
        assert_eq!(p(&[2, 6]).eval(&half), int(-1));
        assert!(p(&[1, 2]).eval(&half).is_zero());
        assert_eq!(p(&[7]).eval(&int(5)), int(7));
    }

    #[test]
    fn roots_of_linear_and_quadratic() {
        let r = p(&[1, 2]).rational_roots().unwrap();
        assert_eq!(r.points, vec![rat(-1, 2)]);
        assert!(!r.has_nonrational_factor);

        let r = (p(&[1, 2]) * p(&[1, 1])).rational_roots().unwrap();
        assert_eq!(r.points, vec![rat(-1, 2), int(-1)]);
        assert!(!r.has_nonrational_factor);

        let r = p(&[-2, 0, 1]).rational_roots().unwrap();
        assert!(r.points.is_empty());
        assert!(r.has_nonrational_factor);
    }

    #[test]
    fn roots_with_multiplicity_zero_and_fractions() {
        // q^2 (3q - 2)^2 (q^2 + 1)
        let f = p(&[0, 0, 1]) * p(&[-2, 3]) * p(&[-2, 3]) * p(&[1, 0, 1]);
        let r = f.scale(&rat(5, 7)).rational_roots().unwrap();
        assert_eq!(r.points, vec![int(0), rat(2, 3)]);
        assert!(r.has_nonrational_factor);
    }

    #[test]
    fn zero_polynomial_has_no_root_set() {
        assert!(matches!(Poly::zero().rational_roots(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[1, 2]) * p(&[1, 1]);
        let b = p(&[1, 2]) * p(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 2]).monic());
        let (qt, r) = a.div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(qt, p(&[1, 2]));
        assert!(r.is_zero());
    }

    #[test]
    fn display_is_parseable_shape() {
        assert_eq!(p(&[1, 0, -1]).to_string(), "1 - q^2");
        assert_eq!(Poly::linear(rat(-1, 2), int(3)).to_string(), "-1/2 + 3*q");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn compose_substitutes() {
        // (1 + q)∘(2q) = 1 + 2q
        assert_eq!(p(&[1, 1]).compose(&p(&[0, 2])), p(&[1, 2]));
    }
}
