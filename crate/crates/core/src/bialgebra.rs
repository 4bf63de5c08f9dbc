//! Bialgebra-level checks and assembly: differential ASI and Novikov
//! bialgebras, the compatibility residuals of the induced pair, loci,
//! bilinear forms, adjoints, doubles and Manin triples.

use crate::constructions::{induce_nov_coalg, induce_novikov};
use crate::error::{Error, Result};
use crate::exactcore::{linalg, BinOp, CoOp, LinMap, Poly, QLocus, Rational, Ring, Tensor};
use crate::structures::{check_all, check_form_nondeg, AxiomReport, Bundle, Env, Presentation};

const DIFF_ASI_IDS: &[&str] =
    &["COMM", "ASSOC", "DERIV", "ADMISS", "COASSOC", "COCOMM", "CODERIV", "CO_ADMISS", "ASI_1", "ASI_2"];
const NOV_BIALG_IDS: &[&str] =
    &["NOV_LSYM", "NOV_RCOMM", "NOV_COALG_1", "NOV_COALG_2", "NOV_BIALG_1", "NOV_BIALG_2", "NOV_BIALG_3"];

fn ring_of(q: &Poly) -> Ring {
    if q.is_constant() {
        Ring::Rational
    } else {
        Ring::Poly
    }
}

/// The four roles `dot`, `delta`, `D`, `Q` of a differential ASI bialgebra.
pub struct DiffAsi<'a> {
    pub dot: &'a BinOp,
    pub delta: &'a CoOp,
    pub d: &'a LinMap,
    pub q: &'a LinMap,
}

impl<'a> DiffAsi<'a> {
    pub fn of(p: &'a Presentation) -> Result<Self> {
        Ok(DiffAsi { dot: p.product("dot")?, delta: p.coproduct("delta")?, d: p.map("D")?, q: p.map("Q")? })
    }

    fn env(&self, ring: Ring) -> Result<Env<'a>> {
        let n = self
            .dot
            .dim()
            .ok_or_else(|| Error::DimensionMismatch(format!("product of shape {:?}", self.dot.shape())))?;
        Ok(Env::new(n).op("dot", self.dot).coop("delta", self.delta).map("D", self.d).map("Q", self.q).ring(ring))
    }
}

/// Commutative cocommutative differential ASI bialgebra axioms on `dot`, `delta`, `D`, `Q`.
pub fn check_diff_asi_bialgebra(p: &Presentation) -> Result<Bundle> {
    check_all("differential ASI bialgebra", DIFF_ASI_IDS, &DiffAsi::of(p)?.env(p.ring)?)
}

/// Novikov algebra, Novikov coalgebra and the three compatibilities.
pub fn check_novikov_bialgebra(circ: &BinOp, delta: &CoOp, ring: Ring) -> Result<Bundle> {
    let n = circ.dim().ok_or_else(|| Error::DimensionMismatch("product must be square".into()))?;
    let env = Env::new(n).op("circ", circ).coop("Delta", delta).ring(ring);
    check_all("Novikov bialgebra", NOV_BIALG_IDS, &env)
}

/// The induced pair `(∘_q, Δ_q)`.
pub fn induce(p: &Presentation, q: &Poly) -> Result<(BinOp, CoOp)> {
    let b = DiffAsi::of(p)?;
    let one = Rational::from_integer(1.into());
    Ok((induce_novikov(b.dot, b.d, b.q, &one, q)?, induce_nov_coalg(b.delta, b.q, b.d, q)?))
}

/// `∘_q` and `Δ_q` as a presentation with components `circ` and `Delta`.
pub fn induced_presentation(p: &Presentation, q: &Poly) -> Result<Presentation> {
    let (circ, delta) = induce(p, q)?;
    let ring = if p.ring == Ring::Poly { Ring::Poly } else { ring_of(q) };
    Ok(Presentation::new(p.space.clone(), ring).with_product("circ", circ).with_coproduct("Delta", delta))
}

/// The three compatibility residuals of `(∘_q, Δ_q)`, evaluated at `q`.
pub fn bialg_q_residuals(p: &Presentation, q: &Poly) -> Result<Bundle> {
    let ring = if p.ring == Ring::Poly { Ring::Poly } else { ring_of(q) };
    let env = DiffAsi::of(p)?.env(ring)?.at_param(q.clone());
    check_all("compatibility residuals", &["BIALG_Q_1", "BIALG_Q_2", "BIALG_Q_3"], &env)
}

/// `a·Q(b) = -a·D(b)` and `(id⊗Q)δ = -(id⊗D)δ`, which make the residuals vanish for every `q`.
pub fn check_conditions_ab(p: &Presentation) -> Result<Bundle> {
    check_all("Q = -D conditions", &["COND_A", "COND_B"], &DiffAsi::of(p)?.env(p.ring)?)
}

/// Builds `(∘_q, Δ_q)` with `q` symbolic and returns where it is a Novikov bialgebra.
pub fn novikov_bialgebra_locus(p: &Presentation) -> Result<(QLocus, Bundle)> {
    let (circ, delta) = induce(p, &Poly::q())?;
    let bundle = check_novikov_bialgebra(&circ, &delta, Ring::Poly)?;
    Ok((bundle.locus(), bundle))
}

/// `B(a+f, b+g) = ⟨f, b⟩ + ⟨g, a⟩` on `A ⊕ A*`.
pub fn standard_form(dim_a: usize) -> Tensor {
    let n = dim_a;
    Tensor::from_fn(&[2 * n, 2 * n], |ix| Poly::from_int((ix[0] + n == ix[1] || ix[1] + n == ix[0]) as i64))
}

/// `D̂` with `B(D(a), b) = B(a, D̂(b))`, i.e. `G⁻¹ Dᵀ G` for the Gram matrix `G`.
pub fn adjoint_map(d: &LinMap, b: &Tensor) -> Result<LinMap> {
    let g = LinMap::from_tensor(b.clone())?;
    if g.cod() != d.cod() || d.cod() != d.dom() {
        return Err(Error::DimensionMismatch(format!(
            "form on a {}-dim space against a {}×{} map",
            g.cod(),
            d.cod(),
            d.dom()
        )));
    }
    let gi = linalg::inverse(&g)?;
    gi.compose(&d.transpose())?.compose(&g)
}

/// A presentation on `A ⊕ A*`; the first `dim_a` basis vectors span `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPresentation {
    pub total: Presentation,
    pub dim_a: usize,
}

/// Commutative Frobenius double of a differential ASI bialgebra.
///
/// `f·g` is dual to `δ` and the mixed products are forced by invariance of
/// [`standard_form`]: `⟨a·f, b⟩ = ⟨f, a·b⟩` and the `A` part of `a·f` is
/// `Σ ⟨f, a₍₁₎⟩ a₍₂₎`. Maps are `D + Q*` and `Q + D*`.
pub fn double_construction(p: &Presentation) -> Result<SplitPresentation> {
    let pre = check_diff_asi_bialgebra(p)?;
    if !pre.holds() {
        let ids: Vec<_> = pre.failures().map(|r| r.axiom_id.clone()).collect();
        return Err(Error::PreconditionFailed(format!("not a differential ASI bialgebra: {}", ids.join(", "))));
    }
    let b = DiffAsi::of(p)?;
    let n = p.dim();
    let mut c = BinOp::zero(2 * n);
    for (ix, v) in b.dot.tensor().nonzeros() {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        c.set(i, j, k, v.clone());
        // ⟨e_i·e_k*, e_j⟩ = ⟨e_k*, e_i·e_j⟩, and symmetrically
        c.add_at(i, n + k, n + j, v);
        c.add_at(n + k, i, n + j, v);
    }
    for (ix, v) in b.delta.tensor().nonzeros() {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        c.add_at(n + i, n + j, n + k, v);
        // e_k·e_i* picks up ⟨e_i*, e_k(1)⟩ e_k(2)
        c.add_at(k, n + i, j, v);
        c.add_at(n + i, k, j, v);
    }
    let total = Presentation::new(p.space.doubled(), p.ring)
        .with_product("dot", c)
        .with_map("D", b.d.direct_sum(&b.q.transpose()))
        .with_map("Q", b.q.direct_sum(&b.d.transpose()))
        .with_form("B", standard_form(n));
    Ok(SplitPresentation { total, dim_a: n })
}

/// Manin-triple product on `A ⊕ A*` of a Novikov bialgebra `(A, ∘, Δ)`,
/// making [`standard_form`] invariant: `B(x∘y, z) = -B(y, x⋆z)`.
pub fn novikov_double(circ: &BinOp, delta: &CoOp) -> Result<BinOp> {
    let n = circ.dim().ok_or_else(|| Error::DimensionMismatch("product must be square".into()))?;
    if delta.dim() != Some(n) {
        return Err(Error::DimensionMismatch("product and coproduct on different spaces".into()));
    }
    let mut c = BinOp::zero(2 * n);
    for (ix, v) in circ.tensor().nonzeros() {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        c.set(i, j, k, v.clone());
        // ⟨e_i∘e_k*, e_j⟩ = -⟨e_k*, e_i∘e_j + e_j∘e_i⟩
        c.add_at(i, n + k, n + j, &-v);
        c.add_at(j, n + k, n + i, &-v);
        // ⟨e_k*∘e_j, e_i⟩ = ⟨e_k*, e_i∘e_j⟩
        c.add_at(n + k, j, n + i, v);
    }
    for (ix, v) in delta.tensor().nonzeros() {
        let (a, i, j) = (ix[0], ix[1], ix[2]);
        // ⟨e_i*∘e_j*, e_a⟩ = ⟨Δ(e_a), e_i*⊗e_j*⟩
        c.add_at(n + i, n + j, n + a, v);
        // A part of e_a∘e_j*: ⟨e_i*, ·⟩ = ⟨Δ(e_a), e_i*⊗e_j*⟩
        c.add_at(a, n + j, i, v);
        // A part of e_i*∘e_a: ⟨e_h*, ·⟩ = -⟨Δ(e_a), e_i*⊗e_h* + e_h*⊗e_i*⟩
        c.add_at(n + i, a, j, &-v);
        c.add_at(n + j, a, i, &-v);
    }
    Ok(c)
}

/// Block closure of `A` (`SUBALG_A`) or of `A*` (`SUBALG_DUAL`) under `op`.
pub fn check_subalgebra(op: &BinOp, dim_a: usize, dual: bool, ring: Ring) -> Result<AxiomReport> {
    let total = op.dim().ok_or_else(|| Error::DimensionMismatch("product must be square".into()))?;
    if dim_a > total {
        return Err(Error::DimensionMismatch(format!("block of size {dim_a} in a {total}-dim space")));
    }
    let (inside, id) = if dual { (dim_a..total, "SUBALG_DUAL") } else { (0..dim_a, "SUBALG_A") };
    let outside: Vec<usize> = (0..total).filter(|k| !inside.contains(k)).collect();
    let rows = inside
        .clone()
        .flat_map(|i| inside.clone().map(move |j| (i, j)))
        .map(|(i, j)| (vec![i, j], outside.iter().map(|&k| op.get(i, j, k).clone()).collect()));
    Ok(AxiomReport::from_residuals(id, ring, rows.collect::<Vec<_>>()))
}

/// Subalgebra closure of both blocks, Novikov axioms and invariance of the standard form.
pub fn check_manin_triple(sp: &SplitPresentation, circ: &BinOp) -> Result<Bundle> {
    let ring = if circ.tensor().max_degree().unwrap_or(0) > 0 { Ring::Poly } else { sp.total.ring };
    let b = standard_form(sp.dim_a);
    let mut out = Bundle::new("Manin triple");
    out.push(check_subalgebra(circ, sp.dim_a, false, ring)?);
    out.push(check_subalgebra(circ, sp.dim_a, true, ring)?);
    let env = Env::new(2 * sp.dim_a).op("circ", circ).form("B", &b).ring(ring);
    out.extend(check_all("", &["NOV_LSYM", "NOV_RCOMM", "BILIN_INV_NOV"], &env)?);
    Ok(out)
}

/// Symmetric, nondegenerate and invariant: `B(a∘b, c) = -B(b, a⋆c)`.
pub fn quadratic_novikov_check(circ: &BinOp, b: &Tensor, ring: Ring) -> Result<Bundle> {
    let n = circ.dim().ok_or_else(|| Error::DimensionMismatch("product must be square".into()))?;
    let env = Env::new(n).op("circ", circ).form("B", b).ring(ring);
    let mut out = check_all("quadratic Novikov algebra", &["FORM_SYM"], &env)?;
    out.push(check_form_nondeg(b, ring)?);
    out.extend(check_all("", &["BILIN_INV_NOV"], &env)?);
    Ok(out)
}

/// Frobenius invariance check `B(a·b, c) = B(a, b·c)` plus symmetry and nondegeneracy.
pub fn frobenius_check(dot: &BinOp, b: &Tensor, ring: Ring) -> Result<Bundle> {
    let n = dot.dim().ok_or_else(|| Error::DimensionMismatch("product must be square".into()))?;
    let env = Env::new(n).op("dot", dot).form("B", b).ring(ring);
    let mut out = check_all("Frobenius algebra", &["FORM_SYM"], &env)?;
    out.push(check_form_nondeg(b, ring)?);
    out.extend(check_all("", &["BILIN_INV_ASSOC"], &env)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;
    use crate::fixtures;
    use crate::structures::Space;

    fn p(n: i64) -> Poly {
        Poly::from_int(n)
    }

    #[test]
    fn exnov1_is_a_diff_asi_bialgebra() {
        assert!(check_diff_asi_bialgebra(&fixtures::exnov1()).unwrap().holds());
    }

    #[test]
    fn broken_cocommutativity_has_witness_e1() {
        let mut f = fixtures::exnov1();
        let mut delta = f.coproduct("delta").unwrap().clone();
        delta.set(0, 0, 1, p(1));
        f.coproducts.insert("delta".into(), delta);
        let b = check_diff_asi_bialgebra(&f).unwrap();
        let w = b.get("COCOMM").unwrap().witness.clone().unwrap();
        assert_eq!(w.tuple, vec![0]);
    }

    #[test]
    fn exnov1_induced_at_minus_half() {
        let f = fixtures::exnov1();
        let q = Poly::constant(rat(-1, 2));
        let (circ, delta) = induce(&f, &q).unwrap();
        assert!(check_novikov_bialgebra(&circ, &delta, Ring::Rational).unwrap().holds());
        assert!(bialg_q_residuals(&f, &q).unwrap().holds());
        let (locus, _) = novikov_bialgebra_locus(&f).unwrap();
        assert!(locus.contains(&rat(-1, 2)));
    }

    #[test]
    fn zero_coproduct_is_vacuous() {
        let f = fixtures::exnov1();
        let (circ, _) = induce(&f, &Poly::q()).unwrap();
        assert!(check_novikov_bialgebra(&circ, &CoOp::zero(2), Ring::Poly).unwrap().holds());
    }

    #[test]
    fn standard_form_shape() {
        let b = standard_form(1);
        assert_eq!(b.data(), &[p(0), p(1), p(1), p(0)]);
        let b = standard_form(2);
        assert_eq!(b.get(&[0, 2]), &p(1));
        assert_eq!(b.get(&[0, 0]), &p(0));
        assert_eq!(b.flip().unwrap(), b);
    }

    #[test]
    fn adjoint_of_block_maps() {
        let f = fixtures::zinb_nonderiv();
        let (d, q) = (f.map("D").unwrap(), f.map("Q").unwrap());
        let b = standard_form(3);
        let hat = adjoint_map(&d.direct_sum(&q.transpose()), &b).unwrap();
        assert_eq!(hat, q.direct_sum(&d.transpose()));
        assert_eq!(adjoint_map(&LinMap::identity(6), &b).unwrap(), LinMap::identity(6));
        assert!(adjoint_map(&LinMap::zero(6, 6), &b).unwrap().is_zero());
        assert!(adjoint_map(&LinMap::identity(6), &Tensor::zeros(&[6, 6])).is_err());
    }

    #[test]
    fn double_of_exnov1_is_frobenius_and_admissible() {
        let sp = double_construction(&fixtures::exnov1()).unwrap();
        assert_eq!(sp.total.dim(), 4);
        let dot = sp.total.product("dot").unwrap();
        assert!(frobenius_check(dot, sp.total.form("B").unwrap(), Ring::Rational).unwrap().holds());
        let env = sp.total.env(&[]).unwrap();
        assert!(crate::structures::is_admissible_quadruple(&env).unwrap().holds());
    }

    #[test]
    fn double_with_zero_coproduct_is_the_semidirect_product() {
        let f = fixtures::zinb_nonderiv();
        let dot = crate::constructions::descendent_commdiff(f.product("diamond").unwrap());
        let pres = Presentation::new(Space::numbered(3), Ring::Rational)
            .with_product("dot", dot)
            .with_coproduct("delta", CoOp::zero(3))
            .with_map("D", f.map("D").unwrap().clone())
            .with_map("Q", f.map("Q").unwrap().clone());
        let sp = double_construction(&pres).unwrap();
        let c = sp.total.product("dot").unwrap();
        // ⟨e1·e3*, e2⟩ = ⟨e3*, e1·e2⟩ = 3
        assert_eq!(c.product(0, 5), Tensor::basis(6, 4).scale(&p(3)));
        assert_eq!(c.product(1, 5), Tensor::basis(6, 3).scale(&p(3)));
        assert!(c.product(4, 5).is_zero());
    }

    #[test]
    fn double_construction_rejects_invalid_input() {
        let mut f = fixtures::exnov1();
        f.maps.insert("D".into(), LinMap::identity(2).scale(&p(2)));
        assert!(matches!(double_construction(&f), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn manin_square_at_minus_half() {
        // inducing on the Frobenius double agrees with the Novikov double of the induced bialgebra
        let f = fixtures::exnov1();
        let q = Poly::constant(rat(-1, 2));
        let sp = double_construction(&f).unwrap();
        let (big, _) =
            induce(&Presentation { coproducts: [("delta".into(), CoOp::zero(4))].into(), ..sp.total.clone() }, &q)
                .unwrap();
        let (circ, delta) = induce(&f, &q).unwrap();
        let nd = novikov_double(&circ, &delta).unwrap();
        assert_eq!(big, nd);
        assert!(check_manin_triple(&sp, &nd).unwrap().holds());
        let b = quadratic_novikov_check(&nd, &standard_form(2), Ring::Rational).unwrap();
        assert!(b.holds());
    }

    #[test]
    fn symbolic_manin_invariance_is_proportional_to_one_plus_2q() {
        let f = fixtures::exnov1();
        let sp = double_construction(&f).unwrap();
        let (big, _) = induce(
            &Presentation { coproducts: [("delta".into(), CoOp::zero(4))].into(), ..sp.total.clone() },
            &Poly::q(),
        )
        .unwrap();
        let b = check_manin_triple(&sp, &big).unwrap();
        let inv = b.get("BILIN_INV_NOV").unwrap();
        let g = crate::exactcore::locus::common_gcd(inv.entries());
        assert_eq!(g, Poly::from_ints(&[1, 2]).monic());
        assert!(b.get("NOV_LSYM").unwrap().holds());
    }

    #[test]
    fn quadratic_trivial_cases() {
        let one = BinOp::from_entries(1, &[(0, 0, 0, p(1))]);
        let d = LinMap::zero(1, 1);
        let circ = crate::constructions::gelfand(&one, &d).unwrap();
        let b = Tensor::from_fn(&[1, 1], |_| p(1));
        assert!(quadratic_novikov_check(&circ, &b, Ring::Rational).unwrap().holds());
        let z = quadratic_novikov_check(&circ, &Tensor::zeros(&[1, 1]), Ring::Rational).unwrap();
        assert!(!z.get("FORM_NONDEG").unwrap().holds());
    }
}
