//! Presentations by structure constants, the axiom catalog and its checker.

pub mod catalog;
pub mod check;
pub mod expr;

use std::collections::{BTreeMap, BTreeSet};

pub use catalog::{axiom, Axiom, IDS};
pub use check::{
    check_all, check_axiom, check_axiom_filtered, check_form_nondeg, is_admissible_quadruple, AxiomReport, Bundle,
    Verdict, Witness,
};
pub use expr::Env;

use crate::error::{Error, Result};
use crate::exactcore::{BinOp, CoOp, LinMap, Rational, Ring, Tensor};

/// A finite-dimensional space with named basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    names: Vec<String>,
}

impl Space {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidPresentation("a space needs at least one basis vector".into()));
        }
        let mut seen = BTreeSet::new();
        for n in &names {
            if n == "q" {
                return Err(Error::InvalidPresentation("`q` is reserved for the parameter".into()));
            }
            if !seen.insert(n) {
                return Err(Error::InvalidPresentation(format!("basis name `{n}` repeated")));
            }
        }
        Ok(Space { names })
    }

    /// `e1, …, en`.
    pub fn numbered(n: usize) -> Self {
        Space { names: (1..=n).map(|i| format!("e{i}")).collect() }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Dual basis names: `e1 ↔ e1*`.
    pub fn dual(&self) -> Space {
        Space { names: self.names.iter().map(|n| dual_name(n)).collect() }
    }

    /// `self ⊕ self*` with dual names that do not clash: [`Space::dual`] when
    /// possible, otherwise extra `*`s until every name is fresh.
    pub fn doubled(&self) -> Space {
        if let Ok(s) = self.direct_sum(&self.dual()) {
            return s;
        }
        let mut stars = String::from("*");
        loop {
            let d = Space { names: self.names.iter().map(|n| format!("{n}{stars}")).collect() };
            if let Ok(s) = self.direct_sum(&d) {
                return s;
            }
            stars.push('*');
        }
    }

    /// `self ⊕ other`, first block first.
    pub fn direct_sum(&self, other: &Space) -> Result<Space> {
        Space::new(self.names.iter().chain(&other.names).cloned().collect())
    }
}

fn dual_name(n: &str) -> String {
    match n.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{n}*"),
    }
}

/// Structure constants of every named component, over one carrier and one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub space: Space,
    pub ring: Ring,
    pub products: BTreeMap<String, BinOp>,
    pub coproducts: BTreeMap<String, CoOp>,
    pub maps: BTreeMap<String, LinMap>,
    pub forms: BTreeMap<String, Tensor>,
    pub relements: BTreeMap<String, Tensor>,
}

impl Presentation {
    pub fn new(space: Space, ring: Ring) -> Self {
        Presentation {
            space,
            ring,
            products: BTreeMap::new(),
            coproducts: BTreeMap::new(),
            maps: BTreeMap::new(),
            forms: BTreeMap::new(),
            relements: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn with_product(mut self, name: &str, op: BinOp) -> Self {
        self.products.insert(name.into(), op);
        self
    }

    pub fn with_coproduct(mut self, name: &str, co: CoOp) -> Self {
        self.coproducts.insert(name.into(), co);
        self
    }

    pub fn with_map(mut self, name: &str, m: LinMap) -> Self {
        self.maps.insert(name.into(), m);
        self
    }

    pub fn with_form(mut self, name: &str, f: Tensor) -> Self {
        self.forms.insert(name.into(), f);
        self
    }

    pub fn with_relement(mut self, name: &str, r: Tensor) -> Self {
        self.relements.insert(name.into(), r);
        self
    }

    pub fn product(&self, name: &str) -> Result<&BinOp> {
        self.products.get(name).ok_or_else(|| missing("product", name))
    }

    pub fn coproduct(&self, name: &str) -> Result<&CoOp> {
        self.coproducts.get(name).ok_or_else(|| missing("coproduct", name))
    }

    pub fn map(&self, name: &str) -> Result<&LinMap> {
        self.maps.get(name).ok_or_else(|| missing("map", name))
    }

    pub fn form(&self, name: &str) -> Result<&Tensor> {
        self.forms.get(name).ok_or_else(|| missing("form", name))
    }

    pub fn relement(&self, name: &str) -> Result<&Tensor> {
        self.relements.get(name).ok_or_else(|| missing("element", name))
    }

    fn tensors(&self) -> Vec<(&str, &Tensor)> {
        let mut v: Vec<(&str, &Tensor)> = Vec::new();
        v.extend(self.products.iter().map(|(n, o)| (n.as_str(), o.tensor())));
        v.extend(self.coproducts.iter().map(|(n, o)| (n.as_str(), o.tensor())));
        v.extend(self.maps.iter().map(|(n, o)| (n.as_str(), o.tensor())));
        v.extend(self.forms.iter().map(|(n, o)| (n.as_str(), o)));
        v.extend(self.relements.iter().map(|(n, o)| (n.as_str(), o)));
        v
    }

    /// Every component is square over the carrier and lives in the declared ring.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for (name, t) in self.tensors() {
            if t.dims().iter().any(|&d| d != n) {
                return Err(Error::DimensionMismatch(format!("`{name}` has shape {:?} on a {n}-dim space", t.dims())));
            }
            if self.ring == Ring::Rational && t.max_degree().unwrap_or(0) > 0 {
                return Err(Error::RingMismatch(format!("`{name}` depends on q in a Q presentation")));
            }
        }
        Ok(())
    }

    /// Largest q-degree of any entry; decides whether a presentation really is symbolic.
    pub fn max_degree(&self) -> Option<usize> {
        self.tensors().iter().filter_map(|(_, t)| t.max_degree()).max()
    }

    /// Everything bound under its own name, then `role = name` aliases.
    pub fn env(&self, bindings: &[(&str, &str)]) -> Result<Env<'_>> {
        let mut env = Env::new(self.dim()).ring(self.ring);
        for (n, o) in &self.products {
            env = env.op(n, o);
        }
        for (n, o) in &self.coproducts {
            env = env.coop(n, o);
        }
        for (n, o) in &self.maps {
            env = env.map(n, o);
        }
        for (n, o) in &self.forms {
            env = env.form(n, o);
        }
        for (n, o) in &self.relements {
            env = env.elem(n, o);
        }
        for &(role, name) in bindings {
            let mut found = false;
            if let Some(o) = self.products.get(name) {
                env = env.op(role, o);
                found = true;
            }
            if let Some(o) = self.coproducts.get(name) {
                env = env.coop(role, o);
                found = true;
            }
            if let Some(o) = self.maps.get(name) {
                env = env.map(role, o);
                found = true;
            }
            if let Some(o) = self.forms.get(name) {
                env = env.form(role, o);
                found = true;
            }
            if let Some(o) = self.relements.get(name) {
                env = env.elem(role, o);
                found = true;
            }
            if !found {
                return Err(Error::MissingBinding { kind: "component", role: format!("{role}={name}") });
            }
        }
        Ok(env)
    }

    /// Specializes every entry at `q = q0`.
    pub fn eval_q(&self, q0: &Rational) -> Presentation {
        Presentation {
            space: self.space.clone(),
            ring: Ring::Rational,
            products: self.products.iter().map(|(n, o)| (n.clone(), o.eval_q(q0))).collect(),
            coproducts: self.coproducts.iter().map(|(n, o)| (n.clone(), o.eval_q(q0))).collect(),
            maps: self.maps.iter().map(|(n, o)| (n.clone(), o.eval_q(q0))).collect(),
            forms: self.forms.iter().map(|(n, o)| (n.clone(), o.eval_q(q0))).collect(),
            relements: self.relements.iter().map(|(n, o)| (n.clone(), o.eval_q(q0))).collect(),
        }
    }

    /// The transpose presentation on the dual space: products and coproducts
    /// trade places, maps are transposed, forms and elements trade places.
    pub fn dualize(&self) -> Presentation {
        let mut out = Presentation::new(self.space.dual(), self.ring);
        for (n, op) in &self.products {
            // δ(e_k*) = Σ c_ij^k e_i*⊗e_j*
            let t = op.tensor().permute(&[2, 0, 1]).expect("order 3");
            out.coproducts.insert(n.clone(), CoOp::from_tensor(t).expect("order 3"));
        }
        for (n, co) in &self.coproducts {
            let t = co.tensor().permute(&[1, 2, 0]).expect("order 3");
            out.products.insert(n.clone(), BinOp::from_tensor(t).expect("order 3"));
        }
        for (n, m) in &self.maps {
            out.maps.insert(n.clone(), m.transpose());
        }
        for (n, f) in &self.forms {
            out.relements.insert(n.clone(), f.clone());
        }
        for (n, r) in &self.relements {
            out.forms.insert(n.clone(), r.clone());
        }
        out
    }
}

fn missing(kind: &'static str, name: &str) -> Error {
    Error::MissingBinding { kind, role: name.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::Poly;

    #[test]
    fn dual_of_coproduct_is_transposed_product() {
        let co = CoOp::from_entries(2, &[(1, 1, 1, Poly::one())]);
        let p = Presentation::new(Space::numbered(2), Ring::Rational).with_coproduct("delta", co);
        let d = p.dualize();
        let prod = d.product("delta").unwrap();
        assert_eq!(prod.get(1, 1, 1), &Poly::one());
        assert!(prod.tensor().nonzeros().count() == 1);
        assert_eq!(d.space.names(), &["e1*", "e2*"]);
        assert_eq!(d.dualize(), p);
    }

    #[test]
    fn doubling_a_doubled_space_keeps_names_distinct() {
        let s = Space::numbered(1).doubled();
        assert_eq!(s.names(), &["e1", "e1*"]);
        assert_eq!(s.doubled().names(), &["e1", "e1*", "e1**", "e1***"]);
    }

    #[test]
    fn reserved_and_repeated_names_rejected() {
        assert!(Space::new(vec!["q".into()]).is_err());
        assert!(Space::new(vec!["a".into(), "a".into()]).is_err());
        assert!(Space::new(vec![]).is_err());
    }

    #[test]
    fn bindings_alias_components() {
        let p = Presentation::new(Space::numbered(1), Ring::Rational).with_map("D0", LinMap::identity(1));
        let env = p.env(&[("D", "D0")]).unwrap();
        assert!(env.get_map("D").is_ok());
        assert!(p.env(&[("D", "nope")]).is_err());
    }
}
