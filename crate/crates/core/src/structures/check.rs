use std::fmt;

use crate::error::Result;
use crate::exactcore::linalg;
use crate::exactcore::locus::common_gcd;
use crate::exactcore::{LinMap, Poly, QLocus, Ring, Tensor};

use super::catalog::{axiom, Axiom};
use super::expr::{eval, Env};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    HoldsOnLocus,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HoldsOnLocus => "holds_on_locus",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First nonzero residual in tuple order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom_id: String,
    pub verdict: Verdict,
    pub residual_degree: Option<usize>,
    pub witness: Option<Witness>,
    pub locus: Option<QLocus>,
    /// Nonzero residuals only; absent tuples vanish.
    pub residuals: Vec<Witness>,
    pub tuples_checked: usize,
    pub tuples_skipped: usize,
    pub note: Option<String>,
}

impl AxiomReport {
    /// Builds a report from per-tuple residuals given in tuple order.
    pub fn from_residuals(
        id: &str,
        ring: Ring,
        rows: impl IntoIterator<Item = (Vec<usize>, Vec<Poly>)>,
    ) -> AxiomReport {
        let mut residuals = Vec::new();
        let mut checked = 0;
        for (tuple, residual) in rows {
            checked += 1;
            if residual.iter().any(|p| !p.is_zero()) {
                residuals.push(Witness { tuple, residual });
            }
        }
        let entries = residuals.iter().flat_map(|w| w.residual.iter());
        let degree = entries.clone().filter_map(Poly::degree).max();
        let symbolic = ring == Ring::Poly || degree.is_some_and(|d| d > 0);
        let g = common_gcd(entries);
        let verdict = if residuals.is_empty() {
            Verdict::Holds
        } else if g.degree().is_some_and(|d| d >= 1) {
            Verdict::HoldsOnLocus
        } else {
            Verdict::Fails
        };
        AxiomReport {
            axiom_id: id.to_string(),
            verdict,
            residual_degree: degree,
            witness: residuals.first().cloned(),
            locus: symbolic.then(|| QLocus::from_gcd(&g)),
            residuals,
            tuples_checked: checked,
            tuples_skipped: 0,
            note: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Every nonzero residual entry.
    pub fn entries(&self) -> impl Iterator<Item = &Poly> {
        self.residuals.iter().flat_map(|w| w.residual.iter())
    }
}

/// Row-major enumeration of all index tuples for the given dimensions.
pub fn tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = dims.iter().product();
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0; dims.len()];
    for _ in 0..total {
        out.push(idx.clone());
        for k in (0..dims.len()).rev() {
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
    out
}

/// Residual of `ax` at one tuple, components concatenated.
pub fn residual_at(ax: &Axiom, env: &Env<'_>, tuple: &[usize]) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for c in &ax.components {
        out.extend(eval(c, env, &ax.spaces, tuple)?.into_data());
    }
    Ok(out)
}

pub fn check_axiom(id: &str, env: &Env<'_>) -> Result<AxiomReport> {
    check(&axiom(id)?, env, None)
}

/// Like [`check_axiom`] but only on tuples accepted by `keep`; the rest are counted as skipped.
pub fn check_axiom_filtered(id: &str, env: &Env<'_>, keep: TupleFilter<'_>) -> Result<AxiomReport> {
    check(&axiom(id)?, env, Some(keep))
}

/// Decides which input tuples a filtered check visits.
pub type TupleFilter<'a> = &'a dyn Fn(&[usize]) -> bool;

pub fn check(ax: &Axiom, env: &Env<'_>, keep: Option<TupleFilter<'_>>) -> Result<AxiomReport> {
    if ax.spaces.is_empty() {
        // A closed expression: every output entry is its own tuple, prefixed
        // by the component index when there are several components.
        let several = ax.components.len() > 1;
        let mut rows = Vec::new();
        for (ci, c) in ax.components.iter().enumerate() {
            let t = eval(c, env, &[], &[])?;
            for f in 0..t.len() {
                let mut idx = t.unravel(f);
                if several {
                    idx.insert(0, ci);
                }
                rows.push((idx, vec![t.data()[f].clone()]));
            }
        }
        return Ok(AxiomReport::from_residuals(ax.id, env.ring, rows));
    }
    let dims: Vec<usize> = ax.spaces.iter().map(|&s| env.dim(s)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut skipped = 0;
    for t in tuples(&dims) {
        if keep.is_some_and(|k| !k(&t)) {
            skipped += 1;
            continue;
        }
        let r = residual_at(ax, env, &t)?;
        rows.push((t, r));
    }
    let mut rep = AxiomReport::from_residuals(ax.id, env.ring, rows);
    rep.tuples_skipped = skipped;
    Ok(rep)
}

/// Nondegeneracy of a bilinear form: its Gram determinant is not the zero polynomial.
pub fn check_form_nondeg(form: &Tensor, ring: Ring) -> Result<AxiomReport> {
    let m = LinMap::from_tensor(form.clone())?;
    let det = linalg::det(&m)?;
    let mut rep = AxiomReport::from_residuals("FORM_NONDEG", ring, std::iter::empty());
    if det.is_zero() {
        rep.verdict = Verdict::Fails;
        rep.witness = Some(Witness { tuple: Vec::new(), residual: vec![det] });
        rep.residuals = rep.witness.iter().cloned().collect();
        rep.note = Some("Gram determinant vanishes identically".into());
    } else {
        rep.note = Some(format!("Gram determinant {det}"));
    }
    Ok(rep)
}

/// Aggregated reports; the verdict is the conjunction, the locus the common one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub title: String,
    pub reports: Vec<AxiomReport>,
    pub notes: Vec<String>,
}

impl Bundle {
    pub fn new(title: impl Into<String>) -> Self {
        Bundle { title: title.into(), reports: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, r: AxiomReport) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, other: Bundle) {
        self.reports.extend(other.reports);
        self.notes.extend(other.notes);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    fn gcd(&self) -> Poly {
        common_gcd(self.reports.iter().flat_map(|r| r.entries()))
    }

    pub fn verdict(&self) -> Verdict {
        if self.reports.iter().all(AxiomReport::holds) {
            return Verdict::Holds;
        }
        // a check that fails for a reason other than its residual (nondegeneracy) fails the bundle
        if self.reports.iter().any(|r| r.verdict == Verdict::Fails && r.axiom_id == "FORM_NONDEG") {
            return Verdict::Fails;
        }
        if self.gcd().degree().is_some_and(|d| d >= 1) {
            Verdict::HoldsOnLocus
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict() == Verdict::Holds
    }

    /// Where every residual of every report vanishes.
    pub fn locus(&self) -> QLocus {
        QLocus::from_gcd(&self.gcd())
    }

    pub fn get(&self, id: &str) -> Option<&AxiomReport> {
        self.reports.iter().find(|r| r.axiom_id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomReport> {
        self.reports.iter().filter(|r| !r.holds())
    }
}

/// Runs several catalog axioms into one bundle.
pub fn check_all(title: &str, ids: &[&str], env: &Env<'_>) -> Result<Bundle> {
    let mut b = Bundle::new(title);
    for id in ids {
        b.push(check_axiom(id, env)?);
    }
    Ok(b)
}

/// COMM, ASSOC, DERIV for `D` and ADMISS for `Q`, on roles `dot`, `D`, `Q`.
pub fn is_admissible_quadruple(env: &Env<'_>) -> Result<Bundle> {
    check_all("admissible commutative differential algebra", &["COMM", "ASSOC", "DERIV", "ADMISS"], env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::BinOp;

    #[test]
    fn lsym_failure_has_first_witness() {
        // e1∘e2 = e1 only
        let op = BinOp::from_entries(2, &[(0, 1, 0, Poly::one())]);
        let env = Env::new(2).op("circ", &op);
        let rep = check_axiom("NOV_LSYM", &env).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        let w = rep.witness.unwrap();
        assert_eq!(w.tuple, vec![0, 1, 1]);
        assert_eq!(w.residual, vec![Poly::one(), Poly::zero()]);
    }

    #[test]
    fn zero_product_is_associative() {
        let op = BinOp::zero(3);
        let env = Env::new(3).op("dot", &op);
        assert!(check_axiom("ASSOC", &env).unwrap().holds());
    }

    #[test]
    fn symbolic_residual_gives_locus() {
        // e1·e2 = (1+2q)e1 while e2·e1 = 0
        let op = BinOp::from_entries(2, &[(0, 1, 0, Poly::from_ints(&[1, 2]))]);
        let env = Env::new(2).op("dot", &op).ring(Ring::Poly);
        let rep = check_axiom("COMM", &env).unwrap();
        assert_eq!(rep.verdict, Verdict::HoldsOnLocus);
        assert_eq!(rep.locus.unwrap().to_string(), "{-1/2}");
    }

    #[test]
    fn tuple_order_is_row_major() {
        assert_eq!(tuples(&[2, 2]), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
