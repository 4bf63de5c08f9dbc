//! Multilinear expression trees and their evaluator.
//!
//! An expression is evaluated on a tuple of basis vectors. Every node yields a
//! tensor whose legs are the free tensor factors at that point, so coproducts
//! add legs, products remove one, and pairings remove two.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactcore::{BinOp, CoOp, LinMap, Poly, Ring, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// The basis vector bound to input slot `i`.
    Var(usize),
    /// A fixed tensor such as an r-matrix.
    Elem(&'static str),
    Outer(Box<Expr>, Box<Expr>),
    Map {
        role: &'static str,
        leg: usize,
        x: Box<Expr>,
    },
    /// Multiplies legs `left` and `right`; the product leg lands at `at` among the remaining legs.
    Mul {
        role: &'static str,
        left: usize,
        right: usize,
        at: usize,
        x: Box<Expr>,
    },
    /// Splits leg `leg` into two adjacent legs.
    Co {
        role: &'static str,
        leg: usize,
        x: Box<Expr>,
    },
    Pair {
        form: &'static str,
        left: usize,
        right: usize,
        x: Box<Expr>,
    },
    Permute {
        perm: Vec<usize>,
        x: Box<Expr>,
    },
    /// Linear combination with coefficients in `Q[q]`.
    Sum(Vec<(Poly, Expr)>),
}

pub fn var(i: usize) -> Expr {
    Expr::Var(i)
}

pub fn elem(role: &'static str) -> Expr {
    Expr::Elem(role)
}

pub fn outer(a: Expr, b: Expr) -> Expr {
    Expr::Outer(Box::new(a), Box::new(b))
}

pub fn map_leg(role: &'static str, leg: usize, x: Expr) -> Expr {
    Expr::Map { role, leg, x: Box::new(x) }
}

/// A map applied to a vector.
pub fn ap(role: &'static str, x: Expr) -> Expr {
    map_leg(role, 0, x)
}

pub fn mul(role: &'static str, left: usize, right: usize, at: usize, x: Expr) -> Expr {
    Expr::Mul { role, left, right, at, x: Box::new(x) }
}

/// `x * y` for two vectors.
pub fn bin(role: &'static str, x: Expr, y: Expr) -> Expr {
    mul(role, 0, 1, 0, outer(x, y))
}

pub fn co(role: &'static str, leg: usize, x: Expr) -> Expr {
    Expr::Co { role, leg, x: Box::new(x) }
}

pub fn pair(form: &'static str, x: Expr, y: Expr) -> Expr {
    Expr::Pair { form, left: 0, right: 1, x: Box::new(outer(x, y)) }
}

pub fn permute(perm: &[usize], x: Expr) -> Expr {
    Expr::Permute { perm: perm.to_vec(), x: Box::new(x) }
}

/// τ on a two-leg tensor.
pub fn flip(x: Expr) -> Expr {
    permute(&[1, 0], x)
}

pub fn sum(terms: Vec<(Poly, Expr)>) -> Expr {
    Expr::Sum(terms)
}

/// Integer linear combination.
pub fn lin(terms: Vec<(i64, Expr)>) -> Expr {
    Expr::Sum(terms.into_iter().map(|(c, e)| (Poly::from_int(c), e)).collect())
}

/// `L(x)` acting on leg `k` of `t`: `x * t_k`.
pub fn lmul_leg(role: &'static str, x: Expr, t: Expr, k: usize) -> Expr {
    mul(role, 0, k + 1, k, outer(x, t))
}

/// `R(y)` acting on leg `k` of the `n`-leg tensor `t`: `t_k * y`.
pub fn rmul_leg(role: &'static str, t: Expr, n: usize, k: usize, y: Expr) -> Expr {
    mul(role, k, n, k, outer(t, y))
}

/// `L_⋆(x)` on leg `k`: `x * t_k + t_k * x`.
pub fn lstar_leg(role: &'static str, x: Expr, t: Expr, n: usize, k: usize) -> Expr {
    lin(vec![(1, lmul_leg(role, x.clone(), t.clone(), k)), (1, rmul_leg(role, t, n, k, x))])
}

/// A sum of maps applied to one leg, `(Σ c_i M_i)` on leg `leg`.
pub fn maps_leg(terms: &[(Poly, &'static str)], leg: usize, x: Expr) -> Expr {
    sum(terms.iter().map(|(c, r)| (c.clone(), map_leg(r, leg, x.clone()))).collect())
}

impl std::ops::Neg for Expr {
    type Output = Expr;

    fn neg(self) -> Expr {
        lin(vec![(-1, self)])
    }
}

impl Expr {
    /// Role names mentioned anywhere in the tree, by kind.
    pub fn roles(&self, out: &mut BTreeMap<&'static str, Vec<&'static str>>) {
        let mut push = |kind: &'static str, role: &'static str| {
            let v = out.entry(kind).or_default();
            if !v.contains(&role) {
                v.push(role);
            }
        };
        match self {
            Expr::Var(_) => {}
            Expr::Elem(r) => push("element", r),
            Expr::Outer(a, b) => {
                a.roles(out);
                b.roles(out);
            }
            Expr::Map { role, x, .. } => {
                push("map", role);
                x.roles(out);
            }
            Expr::Mul { role, x, .. } => {
                push("product", role);
                x.roles(out);
            }
            Expr::Co { role, x, .. } => {
                push("coproduct", role);
                x.roles(out);
            }
            Expr::Pair { form, x, .. } => {
                push("form", form);
                x.roles(out);
            }
            Expr::Permute { x, .. } => x.roles(out),
            Expr::Sum(ts) => ts.iter().for_each(|(_, e)| e.roles(out)),
        }
    }
}

/// Operations bound to roles, plus the dimensions of the spaces in play.
///
/// The carrier is `'A'`; modules and O-operator domains use `'V'`.
#[derive(Clone, Debug)]
pub struct Env<'a> {
    dims: BTreeMap<char, usize>,
    ops: HashMap<String, &'a BinOp>,
    maps: HashMap<String, &'a LinMap>,
    coops: HashMap<String, &'a CoOp>,
    forms: HashMap<String, &'a Tensor>,
    elems: HashMap<String, &'a Tensor>,
    /// Substituted for `q` in expression coefficients.
    pub param: Poly,
    pub ring: Ring,
}

impl<'a> Env<'a> {
    pub fn new(dim_a: usize) -> Self {
        Env {
            dims: BTreeMap::from([('A', dim_a)]),
            ops: HashMap::new(),
            maps: HashMap::new(),
            coops: HashMap::new(),
            forms: HashMap::new(),
            elems: HashMap::new(),
            param: Poly::q(),
            ring: Ring::Rational,
        }
    }

    pub fn space(mut self, sym: char, dim: usize) -> Self {
        self.dims.insert(sym, dim);
        self
    }

    pub fn op(mut self, role: &str, op: &'a BinOp) -> Self {
        self.ops.insert(role.to_string(), op);
        self
    }

    pub fn map(mut self, role: &str, m: &'a LinMap) -> Self {
        self.maps.insert(role.to_string(), m);
        self
    }

    pub fn coop(mut self, role: &str, c: &'a CoOp) -> Self {
        self.coops.insert(role.to_string(), c);
        self
    }

    pub fn form(mut self, role: &str, f: &'a Tensor) -> Self {
        self.forms.insert(role.to_string(), f);
        self
    }

    pub fn elem(mut self, role: &str, r: &'a Tensor) -> Self {
        self.elems.insert(role.to_string(), r);
        self
    }

    pub fn ring(mut self, ring: Ring) -> Self {
        self.ring = ring;
        self
    }

    /// Evaluates expression coefficients at `q = q0` instead of keeping `q`.
    pub fn at_param(mut self, param: Poly) -> Self {
        self.param = param;
        self
    }

    pub fn dim(&self, sym: char) -> Result<usize> {
        self.dims.get(&sym).copied().ok_or_else(|| Error::DimensionMismatch(format!("space `{sym}` has no dimension")))
    }

    pub fn get_op(&self, role: &str) -> Result<&'a BinOp> {
        self.ops.get(role).copied().ok_or_else(|| missing("product", role))
    }

    pub fn get_map(&self, role: &str) -> Result<&'a LinMap> {
        self.maps.get(role).copied().ok_or_else(|| missing("map", role))
    }

    pub fn get_coop(&self, role: &str) -> Result<&'a CoOp> {
        self.coops.get(role).copied().ok_or_else(|| missing("coproduct", role))
    }

    pub fn get_form(&self, role: &str) -> Result<&'a Tensor> {
        self.forms.get(role).copied().ok_or_else(|| missing("form", role))
    }

    pub fn get_elem(&self, role: &str) -> Result<&'a Tensor> {
        self.elems.get(role).copied().ok_or_else(|| missing("element", role))
    }

    pub fn has(&self, kind: &str, role: &str) -> bool {
        match kind {
            "product" => self.ops.contains_key(role),
            "map" => self.maps.contains_key(role),
            "coproduct" => self.coops.contains_key(role),
            "form" => self.forms.contains_key(role),
            "element" => self.elems.contains_key(role),
            _ => false,
        }
    }
}

fn missing(kind: &'static str, role: &str) -> Error {
    Error::MissingBinding { kind, role: role.to_string() }
}

/// Evaluates `e` with `Var(i)` bound to basis vector `tuple[i]` of space `spaces[i]`.
pub fn eval(e: &Expr, env: &Env<'_>, spaces: &[char], tuple: &[usize]) -> Result<Tensor> {
    Ok(match e {
        Expr::Var(i) => {
            let sym = *spaces.get(*i).ok_or_else(|| Error::DimensionMismatch(format!("no input slot {i}")))?;
            Tensor::basis(env.dim(sym)?, tuple[*i])
        }
        Expr::Elem(role) => env.get_elem(role)?.clone(),
        Expr::Outer(a, b) => Tensor::outer(&eval(a, env, spaces, tuple)?, &eval(b, env, spaces, tuple)?),
        Expr::Map { role, leg, x } => eval(x, env, spaces, tuple)?.apply_map(env.get_map(role)?, *leg)?,
        Expr::Mul { role, left, right, at, x } => {
            eval(x, env, spaces, tuple)?.mul_legs(env.get_op(role)?, *left, *right, *at)?
        }
        Expr::Co { role, leg, x } => eval(x, env, spaces, tuple)?.split_leg(env.get_coop(role)?, *leg)?,
        Expr::Pair { form, left, right, x } => {
            eval(x, env, spaces, tuple)?.pair_legs(env.get_form(form)?, *left, *right)?
        }
        Expr::Permute { perm, x } => eval(x, env, spaces, tuple)?.permute(perm)?,
        Expr::Sum(terms) => {
            let mut acc: Option<Tensor> = None;
            for (c, t) in terms {
                let c = c.compose(&env.param);
                let v = eval(t, env, spaces, tuple)?;
                if c.is_zero() && acc.is_some() {
                    continue;
                }
                let v = v.scale(&c);
                acc = Some(match acc {
                    None => v,
                    Some(a) => a.try_add(&v)?,
                });
            }
            acc.ok_or_else(|| Error::DimensionMismatch("empty sum".into()))?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_product_of_basis_vectors() {
        let op = BinOp::from_entries(2, &[(0, 1, 0, Poly::from_int(3))]);
        let env = Env::new(2).op("circ", &op);
        let t = eval(&bin("circ", var(0), var(1)), &env, &['A', 'A'], &[0, 1]).unwrap();
        assert_eq!(t, Tensor::basis(2, 0).scale(&Poly::from_int(3)));
    }

    #[test]
    fn missing_role_is_reported() {
        let env = Env::new(2);
        let err = eval(&ap("D", var(0)), &env, &['A'], &[0]).unwrap_err();
        assert_eq!(err, Error::MissingBinding { kind: "map", role: "D".into() });
    }

    #[test]
    fn sum_coefficients_follow_the_parameter() {
        let id = LinMap::identity(1);
        let e = sum(vec![(Poly::q(), ap("D", var(0)))]);
        let env = Env::new(1).map("D", &id).at_param(Poly::from_int(5));
        let t = eval(&e, &env, &['A'], &[0]).unwrap();
        assert_eq!(t, Tensor::basis(1, 0).scale(&Poly::from_int(5)));
    }
}
