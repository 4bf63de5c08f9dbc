//! Worked examples as presentations. Indices are zero-based: `e1` is index 0.

use crate::exactcore::{BinOp, CoOp, LinMap, Poly, Ring};
use crate::structures::{Presentation, Space};

fn p(n: i64) -> Poly {
    Poly::from_int(n)
}

/// Two-dimensional differential ASI bialgebra: `e1·e1 = e1`, `e1·e2 = e2·e1 = e2`,
/// `D(e2) = e2`, `Q(e1) = e1`, `δ(e2) = e2⊗e2`.
pub fn exnov1() -> Presentation {
    let dot = BinOp::from_entries(2, &[(0, 0, 0, p(1)), (0, 1, 1, p(1)), (1, 0, 1, p(1))]);
    let d = LinMap::from_images(2, &[(1, 1, p(1))]);
    let q = LinMap::from_images(2, &[(0, 0, p(1))]);
    let delta = CoOp::from_entries(2, &[(1, 1, 1, p(1))]);
    Presentation::new(Space::numbered(2), Ring::Rational)
        .with_product("dot", dot)
        .with_coproduct("delta", delta)
        .with_map("D", d)
        .with_map("Q", q)
}

/// The three-dimensional Zinbiel product `e1⋄e1 = e2`, `e1⋄e2 = 2e3`, `e2⋄e1 = e3`.
pub fn zinbiel3() -> BinOp {
    BinOp::from_entries(3, &[(0, 0, 1, p(1)), (0, 1, 2, p(2)), (1, 0, 2, p(1))])
}

/// `D = diag(1, 2, 3)`, a derivation of [`zinbiel3`].
pub fn zinbiel3_d() -> LinMap {
    LinMap::from_images(3, &[(0, 0, p(1)), (1, 1, p(2)), (2, 2, p(3))])
}

/// Admissible data where `Q` is itself a derivation:
/// `Q(e1) = -e1 + e3`, `Q(e2) = -2e2`, `Q(e3) = -3e3`.
pub fn zinb_deriv() -> Presentation {
    let q = LinMap::from_images(3, &[(0, 0, p(-1)), (0, 2, p(1)), (1, 1, p(-2)), (2, 2, p(-3))]);
    zinb_with(q)
}

/// Admissible data where `Q` is not a derivation:
/// `Q(e1) = 3e1 + e3`, `Q(e2) = 2e2`, `Q(e3) = e3`.
pub fn zinb_nonderiv() -> Presentation {
    let q = LinMap::from_images(3, &[(0, 0, p(3)), (0, 2, p(1)), (1, 1, p(2)), (2, 2, p(1))]);
    zinb_with(q)
}

fn zinb_with(q: LinMap) -> Presentation {
    Presentation::new(Space::numbered(3), Ring::Rational)
        .with_product("diamond", zinbiel3())
        .with_map("D", zinbiel3_d())
        .with_map("Q", q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        for f in [exnov1(), zinb_deriv(), zinb_nonderiv()] {
            f.validate().unwrap();
        }
    }
}
