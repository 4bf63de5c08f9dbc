//! Induced structures: deformation products and coproducts, descendents,
//! semidirect products, dual and induced representations, and products
//! coming from O-operators.
//!
//! Nothing here verifies its own preconditions. Use the `check_*` helpers
//! (or the catalog directly) when the input is not known to be valid.

use crate::error::{Error, Result};
use crate::exactcore::{BinOp, CoOp, LinMap, Poly, Rational, Ring, Tensor};
use crate::structures::{check_all, Bundle, Env};

/// A representation `(V, l, r)` of a Novikov algebra. Both actions have shape A×V→V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepNov {
    pub l: BinOp,
    pub r: BinOp,
}

/// A representation `(V, l, α, β)` of an admissible commutative differential algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepAdmDiff {
    pub l: BinOp,
    pub alpha: LinMap,
    pub beta: LinMap,
}

fn action_shape(l: &BinOp) -> (usize, usize) {
    let [a, v, _] = l.shape();
    (a, v)
}

impl RepNov {
    pub fn dim_a(&self) -> usize {
        action_shape(&self.l).0
    }

    pub fn dim_v(&self) -> usize {
        action_shape(&self.l).1
    }

    pub fn zero(dim_a: usize, dim_v: usize) -> Self {
        RepNov { l: BinOp::zero_shaped(dim_a, dim_v, dim_v), r: BinOp::zero_shaped(dim_a, dim_v, dim_v) }
    }

    /// `(A, L_∘, R_∘)`.
    pub fn adjoint(circ: &BinOp) -> Self {
        RepNov { l: circ.clone(), r: circ.opposite() }
    }
}

impl RepAdmDiff {
    pub fn dim_v(&self) -> usize {
        action_shape(&self.l).1
    }

    /// `(A, L_·, D, Q)`.
    pub fn regular(dot: &BinOp, d: &LinMap, q: &LinMap) -> Self {
        RepAdmDiff { l: dot.clone(), alpha: d.clone(), beta: q.clone() }
    }
}

fn square(op: &BinOp, what: &str) -> Result<usize> {
    op.dim().ok_or_else(|| Error::DimensionMismatch(format!("{what} must be square, got {:?}", op.shape())))
}

/// `p·D + q·Q`.
pub fn combo(p: &Poly, d: &LinMap, q: &Poly, qm: &LinMap) -> Result<LinMap> {
    d.combine(p, qm, q)
}

/// `a ∘ b = a · (pD + qQ)(b)`.
pub fn induce_novikov(dot: &BinOp, d: &LinMap, q_map: &LinMap, p: &Rational, q: &Poly) -> Result<BinOp> {
    square(dot, "the product")?;
    let m = combo(&Poly::constant(p.clone()), d, q, q_map)?;
    BinOp::from_tensor(dot.tensor().apply_map(&m.transpose(), 1)?)
}

/// Gelfand's `a ∘ b = a · D(b)`.
pub fn gelfand(dot: &BinOp, d: &LinMap) -> Result<BinOp> {
    let n = square(dot, "the product")?;
    induce_novikov(dot, d, &LinMap::zero(n, n), &Rational::from_integer(1.into()), &Poly::zero())
}

/// `Δ_q = (id ⊗ (Q + qD)) δ`.
pub fn induce_nov_coalg(delta: &CoOp, q_map: &LinMap, d: &LinMap, q: &Poly) -> Result<CoOp> {
    let m = combo(&Poly::one(), q_map, q, d)?;
    CoOp::from_tensor(delta.tensor().apply_map(&m, 2)?)
}

/// `a ⋆ b = a∘b + b∘a`; also the descendent `a·b = a⋄b + b⋄a`.
pub fn star(op: &BinOp) -> BinOp {
    op.try_add(&op.opposite()).expect("same shape")
}

pub fn descendent_commdiff(diamond: &BinOp) -> BinOp {
    star(diamond)
}

/// `a ∘ b = a◁b + a▷b`.
pub fn descendent_novikov(lhd: &BinOp, rhd: &BinOp) -> Result<BinOp> {
    lhd.try_add(rhd)
}

/// `a◁b = (D+qQ)(b)⋄a` and `a▷b = a⋄(D+qQ)(b)`; returns `(◁, ▷)`.
pub fn pre_novikov_from_zinbiel(diamond: &BinOp, d: &LinMap, q_map: &LinMap, q: &Poly) -> Result<(BinOp, BinOp)> {
    square(diamond, "the Zinbiel product")?;
    let mt = combo(&Poly::one(), d, q, q_map)?.transpose();
    let lhd = diamond.tensor().apply_map(&mt, 0)?.permute(&[1, 0, 2])?;
    let rhd = diamond.tensor().apply_map(&mt, 1)?;
    Ok((BinOp::from_tensor(lhd)?, BinOp::from_tensor(rhd)?))
}

fn check_action(l: &BinOp, dim_a: usize, dim_v: usize) -> Result<()> {
    if l.shape() != [dim_a, dim_v, dim_v] {
        return Err(Error::DimensionMismatch(format!(
            "an action of a {dim_a}-dim algebra on a {dim_v}-dim module has shape {:?}",
            l.shape()
        )));
    }
    Ok(())
}

/// `(a+u)∘(b+v) = a∘b + l(a)v + r(b)u` on `A ⊕ V`, A block first.
pub fn semidirect_novikov(circ: &BinOp, rep: &RepNov) -> Result<BinOp> {
    let n = square(circ, "the product")?;
    let m = rep.dim_v();
    check_action(&rep.l, n, m)?;
    check_action(&rep.r, n, m)?;
    let t = n + m;
    let mut out = BinOp::from_tensor(circ.tensor().embed(&[t, t, t], &[0, 0, 0])?)?;
    for (ix, v) in rep.l.tensor().nonzeros() {
        out.add_at(ix[0], n + ix[1], n + ix[2], v);
    }
    for (ix, v) in rep.r.tensor().nonzeros() {
        out.add_at(n + ix[1], ix[0], n + ix[2], v);
    }
    Ok(out)
}

/// `(a+u)·(b+v) = a·b + l(a)v + l(b)u` with maps `D ⊕ α` and `Q ⊕ β`.
pub fn semidirect_admdiff(
    dot: &BinOp,
    d: &LinMap,
    q_map: &LinMap,
    rep: &RepAdmDiff,
) -> Result<(BinOp, LinMap, LinMap)> {
    let n = square(dot, "the product")?;
    let m = rep.dim_v();
    check_action(&rep.l, n, m)?;
    let t = n + m;
    let mut out = BinOp::from_tensor(dot.tensor().embed(&[t, t, t], &[0, 0, 0])?)?;
    for (ix, v) in rep.l.tensor().nonzeros() {
        out.add_at(ix[0], n + ix[1], n + ix[2], v);
        out.add_at(n + ix[1], ix[0], n + ix[2], v);
    }
    Ok((out, d.direct_sum(&rep.alpha), q_map.direct_sum(&rep.beta)))
}

/// Swaps the module legs: the matrix of `φ(a)` becomes its transpose.
fn transpose_action(l: &BinOp) -> BinOp {
    BinOp::from_tensor(l.tensor().permute(&[0, 2, 1]).expect("order 3")).expect("order 3")
}

/// `(V*, l* + r*, -r*)` with `⟨φ*(a)f, v⟩ = -⟨f, φ(a)v⟩`.
pub fn dual_rep_novikov(rep: &RepNov) -> Result<RepNov> {
    let lr = rep.l.try_add(&rep.r)?;
    Ok(RepNov { l: transpose_action(&lr).scale(&Poly::from_int(-1)), r: transpose_action(&rep.r) })
}

/// `(V*, -l*, β*, α*)`.
pub fn dual_rep_admdiff(rep: &RepAdmDiff) -> RepAdmDiff {
    RepAdmDiff { l: transpose_action(&rep.l), alpha: rep.beta.transpose(), beta: rep.alpha.transpose() }
}

/// `l(a) = l_A(a)(α + qβ)`, `r(a) = l_A((D + qQ)a)`.
pub fn induced_rep_q(rep: &RepAdmDiff, d: &LinMap, q_map: &LinMap, q: &Poly) -> Result<RepNov> {
    let n = combo(&Poly::one(), &rep.alpha, q, &rep.beta)?;
    let m = combo(&Poly::one(), d, q, q_map)?;
    let l = rep.l.tensor().apply_map(&n.transpose(), 1)?;
    let r = rep.l.tensor().apply_map(&m.transpose(), 0)?;
    Ok(RepNov { l: BinOp::from_tensor(l)?, r: BinOp::from_tensor(r)? })
}

/// `u ⋄ v = l(T(u))v` on `V`.
pub fn zinbiel_from_oop(t: &LinMap, l: &BinOp) -> Result<BinOp> {
    BinOp::from_tensor(l.tensor().apply_map(&t.transpose(), 0)?)
}

/// `u ▷ v = l(T(u))v`, `u ◁ v = r(T(v))u`; returns `(◁, ▷)`.
pub fn pre_novikov_from_oop(t: &LinMap, rep: &RepNov) -> Result<(BinOp, BinOp)> {
    let rhd = zinbiel_from_oop(t, &rep.l)?;
    let lhd = rep.r.tensor().apply_map(&t.transpose(), 0)?.permute(&[1, 0, 2])?;
    Ok((BinOp::from_tensor(lhd)?, rhd))
}

/// DEFORM_1..4 for `a ∘_q b = a∘b + q f(a,b)`.
pub fn deformation_family_check(circ: &BinOp, f: &BinOp) -> Result<Bundle> {
    let n = square(circ, "the product")?;
    let env = Env::new(n).op("circ", circ).op("f", f);
    check_all("infinitesimal deformation", &["DEFORM_1", "DEFORM_2", "DEFORM_3", "DEFORM_4"], &env)
}

/// REP_NOV_1..4 of `rep` over `(A, ∘)`.
pub fn check_rep_novikov(circ: &BinOp, rep: &RepNov, ring: Ring) -> Result<Bundle> {
    let n = square(circ, "the product")?;
    let env = Env::new(n).space('V', rep.dim_v()).op("circ", circ).op("lrep", &rep.l).op("rrep", &rep.r).ring(ring);
    check_all("Novikov representation", &["REP_NOV_1", "REP_NOV_2", "REP_NOV_3", "REP_NOV_4"], &env)
}

/// REP_ASSOC, REP_DIFF and REP_ADM of `rep` over `(A, ·, D, Q)`.
pub fn check_rep_admdiff(dot: &BinOp, d: &LinMap, q_map: &LinMap, rep: &RepAdmDiff) -> Result<Bundle> {
    let n = square(dot, "the product")?;
    let env = Env::new(n)
        .space('V', rep.dim_v())
        .op("dot", dot)
        .map("D", d)
        .map("Q", q_map)
        .op("lrep", &rep.l)
        .map("alpha", &rep.alpha)
        .map("beta", &rep.beta);
    check_all("admissible differential representation", &["REP_ASSOC", "REP_DIFF", "REP_ADM"], &env)
}

/// Entries of an order-3 tensor as a sorted sparse list, for golden comparisons.
pub fn sparse(t: &Tensor) -> Vec<(Vec<usize>, Poly)> {
    t.nonzeros().map(|(i, v)| (i, v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};
    use crate::fixtures;

    fn p(n: i64) -> Poly {
        Poly::from_int(n)
    }

    #[test]
    fn exnov1_at_minus_half() {
        let f = fixtures::exnov1();
        let (dot, d, q) = (f.product("dot").unwrap(), f.map("D").unwrap(), f.map("Q").unwrap());
        let circ = induce_novikov(dot, d, q, &int(1), &Poly::constant(rat(-1, 2))).unwrap();
        let half = Poly::constant(rat(-1, 2));
        let expect = BinOp::from_entries(2, &[(0, 0, 0, half.clone()), (0, 1, 1, p(1)), (1, 0, 1, half.clone())]);
        assert_eq!(circ, expect);
        let big = induce_nov_coalg(f.coproduct("delta").unwrap(), q, d, &half).unwrap();
        assert_eq!(big, CoOp::from_entries(2, &[(1, 1, 1, half)]));
        let sym = induce_nov_coalg(f.coproduct("delta").unwrap(), q, d, &Poly::q()).unwrap();
        assert_eq!(sym, CoOp::from_entries(2, &[(1, 1, 1, Poly::q())]));
    }

    #[test]
    fn zinbiel_descendent_and_symbolic_family() {
        let z = fixtures::zinb_nonderiv();
        let (dm, d, q) = (z.product("diamond").unwrap(), z.map("D").unwrap(), z.map("Q").unwrap());
        let dot = descendent_commdiff(dm);
        assert_eq!(dot.get(0, 0, 1), &p(2));
        assert_eq!(dot.get(0, 1, 2), &p(3));
        let circ = induce_novikov(&dot, d, q, &int(1), &Poly::q()).unwrap();
        assert_eq!(circ.get(0, 0, 1), &Poly::from_ints(&[2, 6]));
        assert_eq!(circ.get(0, 1, 2), &Poly::from_ints(&[6, 6]));
        assert_eq!(circ.get(1, 0, 2), &Poly::from_ints(&[3, 9]));
        assert_eq!(circ.tensor().nonzeros().count(), 3);
        let (lhd, rhd) = pre_novikov_from_zinbiel(dm, d, q, &Poly::q()).unwrap();
        assert_eq!(lhd.get(0, 0, 1), &Poly::from_ints(&[1, 3]));
        assert_eq!(lhd.get(0, 1, 2), &Poly::from_ints(&[2, 2]));
        assert_eq!(lhd.get(1, 0, 2), &Poly::from_ints(&[2, 6]));
        assert_eq!(rhd.get(0, 0, 1), &Poly::from_ints(&[1, 3]));
        assert_eq!(rhd.get(0, 1, 2), &Poly::from_ints(&[4, 4]));
        assert_eq!(rhd.get(1, 0, 2), &Poly::from_ints(&[1, 3]));
        assert_eq!(descendent_novikov(&lhd, &rhd).unwrap(), circ);
    }

    #[test]
    fn pre_novikov_at_zero_on_derivation_fixture() {
        let z = fixtures::zinb_deriv();
        let (_, rhd) =
            pre_novikov_from_zinbiel(z.product("diamond").unwrap(), z.map("D").unwrap(), z.map("Q").unwrap(), &p(0))
                .unwrap();
        assert_eq!(rhd.get(0, 0, 1), &p(1));
    }

    #[test]
    fn zero_inputs_give_zero_outputs() {
        let z = LinMap::zero(2, 2);
        let dot = fixtures::exnov1().product("dot").unwrap().clone();
        assert!(induce_novikov(&dot, &z, &z, &int(1), &Poly::q()).unwrap().is_zero());
        assert!(induce_nov_coalg(&CoOp::zero(2), &z, &z, &Poly::q()).unwrap().is_zero());
        assert!(star(&BinOp::zero(2)).is_zero());
        let dual = dual_rep_novikov(&RepNov::zero(2, 3)).unwrap();
        assert_eq!(dual, RepNov::zero(2, 3));
    }

    #[test]
    fn semidirect_by_zero_rep_is_an_ideal() {
        let circ = BinOp::from_entries(1, &[(0, 0, 0, p(1))]);
        let s = semidirect_novikov(&circ, &RepNov::zero(1, 2)).unwrap();
        assert_eq!(s.shape(), [3, 3, 3]);
        assert_eq!(s.tensor().nonzeros().count(), 1);
    }

    #[test]
    fn adjoint_rep_dual_matches_star_formula() {
        let circ = BinOp::from_entries(2, &[(0, 1, 0, p(1)), (1, 1, 1, p(2))]);
        let dual = dual_rep_novikov(&RepNov::adjoint(&circ)).unwrap();
        let st = star(&circ);
        for a in 0..2 {
            for w in 0..2 {
                for v in 0..2 {
                    // ⟨l'(a) e_w*, e_v⟩ = -⟨e_w*, a⋆e_v⟩
                    assert_eq!(dual.l.get(a, w, v), &-st.get(a, v, w));
                    assert_eq!(dual.r.get(a, w, v), circ.get(v, a, w));
                }
            }
        }
    }

    #[test]
    fn regular_rep_dual_swaps_maps() {
        let f = fixtures::exnov1();
        let rep = RepAdmDiff::regular(f.product("dot").unwrap(), f.map("D").unwrap(), f.map("Q").unwrap());
        let dual = dual_rep_admdiff(&rep);
        // Q*(e1*) = e1*, Q*(e2*) = 0 as the new alpha's partner
        assert_eq!(dual.alpha, f.map("Q").unwrap().transpose());
        assert_eq!(dual.beta.get(1, 1), &p(1));
        assert_eq!(dual_rep_admdiff(&dual), rep);
    }

    #[test]
    fn induced_rep_of_regular() {
        let f = fixtures::exnov1();
        let rep = RepAdmDiff::regular(f.product("dot").unwrap(), f.map("D").unwrap(), f.map("Q").unwrap());
        let half = Poly::constant(rat(-1, 2));
        let ind = induced_rep_q(&rep, f.map("D").unwrap(), f.map("Q").unwrap(), &half).unwrap();
        // l(e1)e1 = e1·(D - Q/2)(e1) = -1/2 e1
        assert_eq!(ind.l.get(0, 0, 0), &half);
    }

    #[test]
    fn identity_oop_recovers_zinbiel() {
        let z = fixtures::zinbiel3();
        assert_eq!(zinbiel_from_oop(&LinMap::identity(3), &z).unwrap(), z);
        assert!(zinbiel_from_oop(&LinMap::zero(3, 3), &z).unwrap().is_zero());
    }

    #[test]
    fn filipov_deformation() {
        let f = fixtures::exnov1();
        let dot = f.product("dot").unwrap();
        let circ = gelfand(dot, f.map("D").unwrap()).unwrap();
        let fdef = induce_novikov(dot, &LinMap::zero(2, 2), &LinMap::identity(2), &int(0), &p(1)).unwrap();
        assert!(deformation_family_check(&circ, &fdef).unwrap().holds());
        assert!(deformation_family_check(&circ, &BinOp::zero(2)).unwrap().holds());
    }
}
