//! The two routes from an admissible differential Zinbiel algebra to a
//! family of Novikov bialgebras on `A ⊕ A*`, and locus annotation.
//!
//! Route 1 goes through the induced pre-Novikov algebra, the semidirect
//! product `A ⋉_{L*▷+R*◁, -R*◁} A*` and the coboundary of the canonical r.
//! Route 2 first builds the differential ASI bialgebra
//! `(A ⋉_{-L*⋄} A*, ·, δ, D+Q*, Q+D*)` and then induces `(∘_q, Δ_q)`.

use crate::bialgebra::{
    check_diff_asi_bialgebra, double_construction, induce, novikov_bialgebra_locus, novikov_double,
};
use crate::constructions::{
    descendent_commdiff, descendent_novikov, dual_rep_admdiff, dual_rep_novikov, pre_novikov_from_zinbiel,
    semidirect_admdiff, semidirect_novikov, RepAdmDiff, RepNov,
};
use crate::error::{Error, Result};
use crate::exactcore::locus::common_gcd;
use crate::exactcore::{BinOp, CoOp, Poly, QLocus, Rational, Ring};
use crate::structures::{check_all, Bundle, Env, Presentation};
use crate::ybe::{canonical_r, delta_qr, delta_r};

/// ZINBIEL, DERIV of `D` and ZINB_ADMISS on roles `diamond`, `D`, `Q`.
pub fn check_adm_diff_zinbiel(z: &Presentation) -> Result<Bundle> {
    let dm = z.product("diamond")?;
    let env = Env::new(z.dim()).op("diamond", dm).op("dot", dm).map("D", z.map("D")?).map("Q", z.map("Q")?);
    check_all("admissible differential Zinbiel algebra", &["ZINBIEL", "DERIV", "ZINB_ADMISS"], &env)
}

pub struct ZinbielPipeline {
    source: Presentation,
    asi: Presentation,
}

impl ZinbielPipeline {
    /// Fails unless the source is an admissible differential Zinbiel algebra.
    pub fn new(z: &Presentation) -> Result<Self> {
        if !check_adm_diff_zinbiel(z)?.holds() {
            return Err(Error::PreconditionFailed("not an admissible differential Zinbiel algebra".into()));
        }
        let n = z.dim();
        let dm = z.product("diamond")?;
        let (d, q) = (z.map("D")?, z.map("Q")?);
        let dot = descendent_commdiff(dm);
        let rep = dual_rep_admdiff(&RepAdmDiff { l: dm.clone(), alpha: d.clone(), beta: q.clone() });
        let (big, bd, bq) = semidirect_admdiff(&dot, d, q, &rep)?;
        let delta = delta_r(&canonical_r(n), &big)?.scale(&Poly::from_int(-1));
        let asi = Presentation::new(z.space.doubled(), Ring::Rational)
            .with_product("dot", big)
            .with_coproduct("delta", delta)
            .with_map("D", bd)
            .with_map("Q", bq);
        Ok(ZinbielPipeline { source: z.clone(), asi })
    }

    /// The differential ASI bialgebra on `A ⊕ A*` of route 2.
    pub fn asi_bialgebra(&self) -> &Presentation {
        &self.asi
    }

    /// Route 1 at `q`: the semidirect Novikov product and `Δ` from the canonical r.
    pub fn semidirect_path(&self, q: &Poly) -> Result<(BinOp, CoOp)> {
        let z = &self.source;
        let (lhd, rhd) = pre_novikov_from_zinbiel(z.product("diamond")?, z.map("D")?, z.map("Q")?, q)?;
        let circ = descendent_novikov(&lhd, &rhd)?;
        let dual = dual_rep_novikov(&RepNov { l: rhd, r: lhd.opposite() })?;
        let big = semidirect_novikov(&circ, &dual)?;
        let delta = delta_qr(&canonical_r(z.dim()), &big)?;
        Ok((big, delta))
    }

    /// Route 2 at `q`: `(∘_q, Δ_q)` induced from the differential ASI bialgebra.
    pub fn double_induced_path(&self, q: &Poly) -> Result<(BinOp, CoOp)> {
        induce(&self.asi, q)
    }

    /// Values of `q` where both routes give the same product and coproduct.
    pub fn coincidence_locus(&self) -> Result<QLocus> {
        let q = Poly::q();
        Ok(QLocus::from_gcd(&difference_gcd(self.semidirect_path(&q)?, self.double_induced_path(&q)?)?))
    }

    pub fn coincides_at(&self, q0: &Rational) -> Result<bool> {
        let q = Poly::constant(q0.clone());
        Ok(self.semidirect_path(&q)? == self.double_induced_path(&q)?)
    }
}

fn difference_gcd(a: (BinOp, CoOp), b: (BinOp, CoOp)) -> Result<Poly> {
    let dp = a.0.try_sub(&b.0)?;
    let dc = a.1.try_sub(&b.1)?;
    Ok(common_gcd(dp.tensor().data().iter().chain(dc.tensor().data())))
}

/// A locus point with its annotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusPoint {
    pub q: Rational,
    pub double_induced: bool,
}

impl LocusPoint {
    pub fn annotation(&self) -> &'static str {
        if self.double_induced {
            "double-induced"
        } else {
            "not double-induced"
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocusReport {
    pub locus: QLocus,
    /// Where the Novikov double of `(∘_q, Δ_q)` is induced from the Frobenius double.
    pub induced_locus: QLocus,
    pub points: Vec<LocusPoint>,
    pub bundle: Bundle,
}

/// Where `A ⊕ A*` of the Novikov double of `(∘_q, Δ_q)` carries the product
/// induced from the Frobenius double `(A ⊕ A*, ·, D+Q*, Q+D*)`.
pub fn double_induced_locus(p: &Presentation) -> Result<QLocus> {
    let q = Poly::q();
    let sp = double_construction(p)?;
    let no_co = Presentation { coproducts: [("delta".to_string(), CoOp::zero(sp.total.dim()))].into(), ..sp.total };
    let (from_double, _) = induce(&no_co, &q)?;
    let (circ, delta) = induce(p, &q)?;
    let nd = novikov_double(&circ, &delta)?;
    Ok(QLocus::from_gcd(&common_gcd(nd.try_sub(&from_double)?.tensor().data())))
}

/// Symbolic locus of a differential ASI bialgebra with each point annotated.
pub fn annotated_locus(p: &Presentation) -> Result<LocusReport> {
    if !check_diff_asi_bialgebra(p)?.holds() {
        return Err(Error::PreconditionFailed("not a differential ASI bialgebra".into()));
    }
    let (locus, bundle) = novikov_bialgebra_locus(p)?;
    let induced_locus = double_induced_locus(p)?;
    let points =
        locus.points.iter().map(|q| LocusPoint { q: q.clone(), double_induced: induced_locus.contains(q) }).collect();
    Ok(LocusReport { locus, induced_locus, points, bundle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{rat, Tensor};
    use crate::fixtures;
    use crate::ybe::nybe_residual;

    fn qp(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    // e1..e3 are 0..2, e1*..e3* are 3..5
    fn pair(n: usize, i: usize, j: usize) -> Tensor {
        Tensor::outer(&Tensor::basis(n, i), &Tensor::basis(n, j))
    }

    #[test]
    fn route2_asi_bialgebra_matches_worked_tables() {
        let pl = ZinbielPipeline::new(&fixtures::zinb_nonderiv()).unwrap();
        let b = pl.asi_bialgebra();
        let dot = b.product("dot").unwrap();
        let e = |i| Tensor::basis(6, i);
        assert_eq!(dot.product(0, 4), e(3));
        assert_eq!(dot.product(0, 5), e(4).scale(&Poly::from_int(2)));
        assert_eq!(dot.product(1, 5), e(3));
        assert_eq!(dot.product(5, 1), e(3));
        let delta = b.coproduct("delta").unwrap();
        let want = pair(6, 1, 3)
            .try_add(&pair(6, 2, 4))
            .unwrap()
            .try_add(&pair(6, 3, 1))
            .unwrap()
            .try_add(&pair(6, 4, 2))
            .unwrap();
        assert_eq!(delta.image(0), want);
        let want = pair(6, 3, 4).try_add(&pair(6, 4, 3)).unwrap().scale(&Poly::from_int(3));
        assert_eq!(delta.image(5), want);
        assert!(check_diff_asi_bialgebra(b).unwrap().holds());
    }

    #[test]
    fn route1_matches_worked_tables() {
        let pl = ZinbielPipeline::new(&fixtures::zinb_nonderiv()).unwrap();
        let (circ, delta) = pl.semidirect_path(&Poly::q()).unwrap();
        let e = |i| Tensor::basis(6, i);
        assert_eq!(circ.product(0, 4), e(3).scale(&qp(&[-2, -6])));
        assert_eq!(circ.product(4, 0), e(3).scale(&qp(&[1, 3])));
        assert_eq!(circ.product(0, 5), e(4).scale(&qp(&[-6, -10])));
        assert_eq!(circ.product(5, 1), e(3).scale(&qp(&[2, 2])));
        let want = pair(6, 1, 3)
            .scale(&qp(&[1, 3]))
            .try_add(&pair(6, 2, 4).scale(&qp(&[2, 2])))
            .unwrap()
            .try_add(&pair(6, 3, 1).scale(&qp(&[-2, -6])))
            .unwrap()
            .try_add(&pair(6, 4, 2).scale(&qp(&[-3, -5])))
            .unwrap();
        assert_eq!(delta.image(0), want);
    }

    #[test]
    fn route2_induced_matches_worked_tables() {
        let pl = ZinbielPipeline::new(&fixtures::zinb_nonderiv()).unwrap();
        let (circ, delta) = pl.double_induced_path(&Poly::q()).unwrap();
        let e = |i| Tensor::basis(6, i);
        assert_eq!(circ.product(0, 4), e(3).scale(&qp(&[2, 2])));
        assert_eq!(circ.product(0, 5), e(4).scale(&qp(&[2, 6])));
        assert_eq!(circ.product(1, 5), e(3).scale(&qp(&[1, 3])));
        let want = pair(6, 1, 3)
            .scale(&qp(&[1, 3]))
            .try_add(&pair(6, 2, 4).scale(&qp(&[2, 2])))
            .unwrap()
            .try_add(&pair(6, 3, 1).scale(&qp(&[2, 2])))
            .unwrap()
            .try_add(&pair(6, 4, 2).scale(&qp(&[1, 3])))
            .unwrap();
        assert_eq!(delta.image(0), want);
    }

    #[test]
    fn nonderivation_locus_and_coincidence() {
        let pl = ZinbielPipeline::new(&fixtures::zinb_nonderiv()).unwrap();
        let rep = annotated_locus(pl.asi_bialgebra()).unwrap();
        assert_eq!(rep.locus.to_string(), "{-1/2, -1}");
        assert!(!rep.locus.nonrational_flag);
        assert_eq!(pl.coincidence_locus().unwrap().to_string(), "{-1/2}");
        assert!(pl.coincides_at(&rat(-1, 2)).unwrap());
        assert!(!pl.coincides_at(&rat(-1, 1)).unwrap());
        // the commuting-square annotation agrees with the route comparison
        let ann: Vec<_> = rep.points.iter().map(|p| (p.q.clone(), p.double_induced)).collect();
        assert_eq!(ann, vec![(rat(-1, 2), true), (rat(-1, 1), false)]);
    }

    #[test]
    fn derivation_case_agrees_everywhere() {
        let pl = ZinbielPipeline::new(&fixtures::zinb_deriv()).unwrap();
        let rep = annotated_locus(pl.asi_bialgebra()).unwrap();
        assert!(rep.locus.is_all());
        assert!(pl.coincidence_locus().unwrap().is_all());
        let q = Poly::q();
        assert_eq!(pl.semidirect_path(&q).unwrap(), pl.double_induced_path(&q).unwrap());
    }

    #[test]
    fn canonical_r_solves_nybe() {
        let q = Poly::q();
        for z in [fixtures::zinb_deriv(), fixtures::zinb_nonderiv()] {
            let pl = ZinbielPipeline::new(&z).unwrap();
            let (circ, _) = pl.semidirect_path(&q).unwrap();
            assert!(nybe_residual(&canonical_r(z.dim()), &circ).unwrap().is_zero());
        }
        let pl = ZinbielPipeline::new(&fixtures::zinb_deriv()).unwrap();
        let (circ, _) = pl.double_induced_path(&q).unwrap();
        assert!(nybe_residual(&canonical_r(3), &circ).unwrap().is_zero());
        let pl = ZinbielPipeline::new(&fixtures::zinb_nonderiv()).unwrap();
        let (circ, _) = pl.double_induced_path(&Poly::constant(rat(-1, 2))).unwrap();
        assert!(nybe_residual(&canonical_r(3), &circ).unwrap().is_zero());
        let (circ, _) = pl.double_induced_path(&q).unwrap();
        assert!(!nybe_residual(&canonical_r(3), &circ).unwrap().is_zero());
    }

    #[test]
    fn invalid_zinbiel_rejected() {
        let mut z = fixtures::zinb_deriv();
        z.maps.insert("D".into(), crate::exactcore::LinMap::identity(3));
        assert!(ZinbielPipeline::new(&z).is_err());
    }
}
