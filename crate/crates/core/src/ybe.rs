//! Yang-Baxter residuals, coboundary coproducts, O-operators and the
//! correspondences between r-matrices and O-operators.

use crate::constructions::{RepAdmDiff, RepNov};
use crate::error::{Error, Result};
use crate::exactcore::{BinOp, CoOp, LinMap, Ring, Tensor};
use crate::structures::expr::eval;
use crate::structures::{axiom, check_all, check_axiom, AxiomReport, Bundle, Env};

fn dim_of(r: &Tensor) -> Result<usize> {
    match r.dims() {
        [a, b] if a == b => Ok(*a),
        d => Err(Error::DimensionMismatch(format!("an r-matrix must be square, got {d:?}"))),
    }
}

fn closed_residual(id: &str, env: &Env<'_>) -> Result<Tensor> {
    let ax = axiom(id)?;
    eval(&ax.components[0], env, &[], &[])
}

/// `r13·r12 + r13·r23 - r12·r23`.
pub fn aybe_residual(r: &Tensor, dot: &BinOp) -> Result<Tensor> {
    closed_residual("AYBE", &Env::new(dim_of(r)?).elem("r", r).op("dot", dot))
}

/// `r13∘r23 + r12⋆r23 + r13∘r12`.
pub fn nybe_residual(r: &Tensor, circ: &BinOp) -> Result<Tensor> {
    closed_residual("NYBE", &Env::new(dim_of(r)?).elem("r", r).op("circ", circ))
}

pub fn check_aybe(r: &Tensor, dot: &BinOp, ring: Ring) -> Result<AxiomReport> {
    check_axiom("AYBE", &Env::new(dim_of(r)?).elem("r", r).op("dot", dot).ring(ring))
}

pub fn check_nybe(r: &Tensor, circ: &BinOp, ring: Ring) -> Result<AxiomReport> {
    check_axiom("NYBE", &Env::new(dim_of(r)?).elem("r", r).op("circ", circ).ring(ring))
}

/// `(D⊗id - id⊗Q)r = 0` and `(id⊗D - Q⊗id)r = 0`.
pub fn r_admissibility(r: &Tensor, d: &LinMap, q: &LinMap) -> Result<AxiomReport> {
    check_axiom("R_ADMISS", &Env::new(dim_of(r)?).elem("r", r).map("D", d).map("Q", q))
}

pub fn is_antisymmetric(r: &Tensor) -> bool {
    r.flip().map(|f| f.try_add(r).map(|s| s.is_zero()).unwrap_or(false)).unwrap_or(false)
}

fn coproduct_from(n: usize, mut image: impl FnMut(usize) -> Result<Tensor>) -> Result<CoOp> {
    let mut d = CoOp::zero(n);
    for a in 0..n {
        for (ix, v) in image(a)?.nonzeros() {
            d.set(a, ix[0], ix[1], v.clone());
        }
    }
    Ok(d)
}

/// `δ_r(a) = (id⊗L(a) - L(a)⊗id) r`.
pub fn delta_r(r: &Tensor, dot: &BinOp) -> Result<CoOp> {
    let n = dim_of(r)?;
    coproduct_from(n, |a| {
        let t = Tensor::outer(&Tensor::basis(n, a), r);
        t.mul_legs(dot, 0, 2, 1)?.try_sub(&t.mul_legs(dot, 0, 1, 0)?)
    })
}

/// `Δ_r(a) = (L_∘(a)⊗id + id⊗L_⋆(a)) r`.
pub fn delta_qr(r: &Tensor, circ: &BinOp) -> Result<CoOp> {
    let n = dim_of(r)?;
    coproduct_from(n, |a| {
        let left = Tensor::outer(&Tensor::basis(n, a), r);
        let right = Tensor::outer(r, &Tensor::basis(n, a));
        left.mul_legs(circ, 0, 1, 0)?.try_add(&left.mul_legs(circ, 0, 2, 1)?)?.try_add(&right.mul_legs(circ, 1, 2, 1)?)
    })
}

/// `T^r: A* → A` with `⟨g, T^r(f)⟩ = ⟨g⊗f, r⟩`; its matrix is `r` itself.
pub fn t_from_r(r: &Tensor) -> Result<LinMap> {
    dim_of(r)?;
    LinMap::from_tensor(r.clone())
}

/// `r_T - τ r_T` on `A ⊕ V*` for `T: V → A`, where `r_T = Σ T(v_j)⊗v_j*`.
pub fn r_from_t(t: &LinMap) -> Tensor {
    let (n, m) = (t.cod(), t.dom());
    let mut r = Tensor::zeros(&[n + m, n + m]);
    for (ix, v) in t.tensor().nonzeros() {
        r.set(&[ix[0], n + ix[1]], v.clone());
        r.set(&[n + ix[1], ix[0]], -v);
    }
    r
}

/// `Σ (e_i⊗e_i* - e_i*⊗e_i)` on `A ⊕ A*`.
pub fn canonical_r(n: usize) -> Tensor {
    r_from_t(&LinMap::identity(n))
}

fn oop_env<'a>(t: &'a LinMap, l: &'a BinOp) -> Result<Env<'a>> {
    let [a, v, w] = l.shape();
    if t.cod() != a || t.dom() != v || v != w {
        return Err(Error::DimensionMismatch(format!(
            "T: {} → {} against an action of shape {:?}",
            t.dom(),
            t.cod(),
            l.shape()
        )));
    }
    Ok(Env::new(a).space('V', v).map("T", t).op("lrep", l))
}

/// `T(u)∘T(v) = T(l(T(u))v) + T(r(T(v))u)`.
pub fn oop_check_novikov(t: &LinMap, circ: &BinOp, rep: &RepNov) -> Result<Bundle> {
    let env = oop_env(t, &rep.l)?.op("circ", circ).op("rrep", &rep.r);
    check_all("Novikov O-operator", &["OOP_NOV"], &env)
}

/// Product identity plus `DT = Tα` and `QT = Tβ`.
pub fn oop_check_admdiff(t: &LinMap, dot: &BinOp, d: &LinMap, q: &LinMap, rep: &RepAdmDiff) -> Result<Bundle> {
    let env =
        oop_env(t, &rep.l)?.op("dot", dot).map("D", d).map("Q", q).map("alpha", &rep.alpha).map("beta", &rep.beta);
    check_all("admissible differential O-operator", &["OOP_ASSOC", "OOP_DT", "OOP_QT"], &env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::Poly;
    use crate::fixtures;

    fn p(n: i64) -> Poly {
        Poly::from_int(n)
    }

    fn e(n: usize, i: usize) -> Tensor {
        Tensor::basis(n, i)
    }

    #[test]
    fn leg_conventions_on_one_summand() {
        // r = x⊗y with x = e1, y = e2 and a product with no symmetry at all
        let n = 2;
        let op = BinOp::from_fn([n, n, n], |i, j, k| p(1 + 4 * i as i64 + 2 * j as i64 + k as i64));
        let r = Tensor::outer(&e(n, 0), &e(n, 1));
        let env = Env::new(n).elem("r", &r).op("dot", &op);
        let rr = crate::structures::expr::outer(crate::structures::expr::elem("r"), crate::structures::expr::elem("r"));
        let ev = |x| eval(&x, &env, &[], &[]).unwrap();
        use crate::structures::expr::{mul, permute};
        let xy = |a: usize, b: usize| op.product(a, b);
        // r13·r23 = x⊗x⊗(y·y)
        let r13r23 = Tensor::outer(&Tensor::outer(&e(n, 0), &e(n, 0)), &xy(1, 1));
        assert_eq!(ev(mul("dot", 1, 3, 2, rr.clone())), r13r23);
        // r12·r23 = x⊗(y·x)⊗y
        let r12r23 = Tensor::outer(&Tensor::outer(&e(n, 0), &xy(1, 0)), &e(n, 1));
        assert_eq!(ev(mul("dot", 1, 2, 1, rr.clone())), r12r23);
        // r13·r12 = (x·x)⊗y⊗y
        let r13r12 = Tensor::outer(&Tensor::outer(&xy(0, 0), &e(n, 1)), &e(n, 1));
        assert_eq!(ev(permute(&[0, 2, 1], mul("dot", 0, 2, 0, rr))), r13r12);
    }

    #[test]
    fn zero_r_is_trivial() {
        let dot = fixtures::exnov1().product("dot").unwrap().clone();
        let z = Tensor::zeros(&[2, 2]);
        assert!(aybe_residual(&z, &dot).unwrap().is_zero());
        assert!(nybe_residual(&z, &dot).unwrap().is_zero());
        assert!(delta_r(&z, &dot).unwrap().is_zero());
        assert!(delta_qr(&z, &dot).unwrap().is_zero());
        let f = fixtures::exnov1();
        assert!(r_admissibility(&z, f.map("D").unwrap(), f.map("Q").unwrap()).unwrap().holds());
        assert!(r_from_t(&LinMap::zero(2, 2)).is_zero());
    }

    #[test]
    fn e11_fails_aybe_on_exnov1() {
        let dot = fixtures::exnov1().product("dot").unwrap().clone();
        let r = Tensor::outer(&e(2, 0), &e(2, 0));
        // every term is e1⊗e1⊗e1: 1 + 1 - 1
        let res = aybe_residual(&r, &dot).unwrap();
        assert_eq!(res, Tensor::outer(&r, &e(2, 0)));
    }

    #[test]
    fn admissibility_on_exnov1() {
        let f = fixtures::exnov1();
        let (d, q) = (f.map("D").unwrap(), f.map("Q").unwrap());
        // (D⊗id)r = -e2⊗e1 = (id⊗Q)r and (id⊗D)r = e1⊗e2 = (Q⊗id)r
        let r = Tensor::outer(&e(2, 0), &e(2, 1)).try_sub(&Tensor::outer(&e(2, 1), &e(2, 0))).unwrap();
        assert!(r_admissibility(&r, d, q).unwrap().holds());
        assert!(is_antisymmetric(&r));
        // e1⊗e1: (D⊗id) gives 0 but (id⊗Q) gives e1⊗e1
        let s = Tensor::outer(&e(2, 0), &e(2, 0));
        let rep = r_admissibility(&s, d, q).unwrap();
        let w = rep.witness.clone().unwrap();
        assert_eq!((w.tuple, w.residual), (vec![0, 0, 0], vec![p(-1)]));
        assert!(!is_antisymmetric(&s));
    }

    #[test]
    fn canonical_r_shape() {
        let r = canonical_r(1);
        assert_eq!(r.get(&[0, 1]), &p(1));
        assert_eq!(r.get(&[1, 0]), &p(-1));
        assert!(is_antisymmetric(&canonical_r(3)));
        // antisymmetric r gives an antisymmetric T^r
        let t = t_from_r(&canonical_r(2)).unwrap();
        assert_eq!(t.transpose(), t.scale(&p(-1)));
    }

    #[test]
    fn identity_oop_on_zinbiel_and_not_on_exnov1() {
        let z = fixtures::zinb_deriv();
        let dm = z.product("diamond").unwrap();
        let dot = crate::constructions::descendent_commdiff(dm);
        let (d, q) = (z.map("D").unwrap(), z.map("Q").unwrap());
        let rep = RepAdmDiff { l: dm.clone(), alpha: d.clone(), beta: q.clone() };
        assert!(oop_check_admdiff(&LinMap::identity(3), &dot, d, q, &rep).unwrap().holds());
        assert!(oop_check_admdiff(&LinMap::zero(3, 3), &dot, d, q, &rep).unwrap().holds());

        let f = fixtures::exnov1();
        let (dot, d, q) = (f.product("dot").unwrap(), f.map("D").unwrap(), f.map("Q").unwrap());
        let rep = RepAdmDiff::regular(dot, d, q);
        let b = oop_check_admdiff(&LinMap::identity(2), dot, d, q, &rep).unwrap();
        let w = b.get("OOP_ASSOC").unwrap().witness.clone().unwrap();
        assert_eq!(w.tuple, vec![0, 0]);
        assert_eq!(w.residual, vec![p(-1), p(0)]);
    }
}
