use std::fmt;

use super::poly::{fmt_rational, sort_points, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocusKind {
    AllQ,
    FiniteSet,
    Empty,
}

/// Where a family of residual polynomials vanishes, restricted to rational `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QLocus {
    pub kind: LocusKind,
    pub points: Vec<Rational>,
    /// Set when the common factor has roots outside `Q`.
    pub nonrational_flag: bool,
}

impl QLocus {
    pub fn all() -> Self {
        QLocus { kind: LocusKind::AllQ, points: Vec::new(), nonrational_flag: false }
    }

    pub fn empty() -> Self {
        QLocus { kind: LocusKind::Empty, points: Vec::new(), nonrational_flag: false }
    }

    pub fn finite(mut points: Vec<Rational>, nonrational_flag: bool) -> Self {
        points.dedup();
        sort_points(&mut points);
        points.dedup();
        let kind = if points.is_empty() { LocusKind::Empty } else { LocusKind::FiniteSet };
        QLocus { kind, points, nonrational_flag }
    }

    /// Common vanishing set of `polys`: the rational roots of their gcd.
    pub fn of_polys<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        Self::from_gcd(&common_gcd(polys))
    }

    pub fn from_gcd(g: &Poly) -> Self {
        if g.is_zero() {
            return QLocus::all();
        }
        let roots = g.rational_roots().expect("nonzero gcd");
        QLocus::finite(roots.points, roots.has_nonrational_factor)
    }

    pub fn is_all(&self) -> bool {
        self.kind == LocusKind::AllQ
    }

    pub fn is_empty(&self) -> bool {
        self.kind == LocusKind::Empty
    }

    pub fn contains(&self, q0: &Rational) -> bool {
        self.is_all() || self.points.contains(q0)
    }

    pub fn intersect(&self, other: &QLocus) -> QLocus {
        match (self.kind, other.kind) {
            (LocusKind::AllQ, _) => other.clone(),
            (_, LocusKind::AllQ) => self.clone(),
            _ => QLocus::finite(
                self.points.iter().filter(|p| other.points.contains(p)).cloned().collect(),
                self.nonrational_flag && other.nonrational_flag,
            ),
        }
    }
}

/// Monic gcd of a family; zero when every member is zero.
pub fn common_gcd<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut g = Poly::zero();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        g = g.gcd(p);
        if g.is_one() {
            break;
        }
    }
    g
}

impl fmt::Display for QLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_all() {
            return write!(f, "all q");
        }
        let pts: Vec<String> = self.points.iter().map(fmt_rational).collect();
        write!(f, "{{{}}}", pts.join(", "))?;
        if self.nonrational_flag {
            write!(f, " (plus non-rational roots)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::poly::{int, rat};

    #[test]
    fn gcd_locus_of_two_families() {
        let a = Poly::from_ints(&[1, 3, 2]); // (1+2q)(1+q)
        let b = Poly::from_ints(&[0, 1, 3, 2]); // q(1+2q)(1+q)
        let l = QLocus::of_polys([&a, &b]);
        assert_eq!(l.points, vec![rat(-1, 2), int(-1)]);
        assert_eq!(l.to_string(), "{-1/2, -1}");
        assert!(!l.nonrational_flag);
    }

    #[test]
    fn degenerate_cases() {
        assert!(QLocus::of_polys([&Poly::zero()]).is_all());
        assert!(QLocus::of_polys([&Poly::from_int(3)]).is_empty());
        let irr = QLocus::of_polys([&Poly::from_ints(&[-2, 0, 1])]);
        assert!(irr.is_empty() && irr.nonrational_flag);
        assert_eq!(QLocus::all().to_string(), "all q");
        assert_eq!(QLocus::empty().to_string(), "{}");
    }
}
