//! Element-by-element expansion of every catalog identity.
//!
//! Nothing here touches the expression evaluator or the dense contraction
//! routines: elements are sparse maps from index tuples to coefficients, and
//! each identity is written out the way one would expand it by hand.

use std::collections::BTreeMap;

use novikov_core::{BinOp, CoOp, LinMap, Poly, Tensor};

use crate::world::World;

pub type Sp = BTreeMap<Vec<usize>, Poly>;

fn add_into(t: &mut Sp, k: Vec<usize>, c: &Poly) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k.clone()).or_insert_with(Poly::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

pub fn basis(i: usize) -> Sp {
    Sp::from([(vec![i], Poly::one())])
}

/// Integer combination of tensors with the same number of legs.
pub fn lc(terms: &[(i64, &Sp)]) -> Sp {
    let mut out = Sp::new();
    for (c, t) in terms {
        let c = Poly::from_int(*c);
        for (k, v) in t.iter() {
            add_into(&mut out, k.clone(), &(&c * v));
        }
    }
    out
}

pub fn scale(c: &Poly, t: &Sp) -> Sp {
    let mut out = Sp::new();
    for (k, v) in t {
        add_into(&mut out, k.clone(), &(c * v));
    }
    out
}

pub fn sum(terms: &[Sp]) -> Sp {
    let mut out = Sp::new();
    for t in terms {
        for (k, v) in t {
            add_into(&mut out, k.clone(), v);
        }
    }
    out
}

/// `x * y` for vectors.
pub fn prod(op: &BinOp, x: &Sp, y: &Sp) -> Sp {
    let out_dim = op.shape()[2];
    let mut out = Sp::new();
    for (i, a) in x {
        for (j, b) in y {
            let ab = a * b;
            for k in 0..out_dim {
                let c = op.get(i[0], j[0], k);
                if !c.is_zero() {
                    add_into(&mut out, vec![k], &(&ab * c));
                }
            }
        }
    }
    out
}

pub fn apply(m: &LinMap, x: &Sp) -> Sp {
    let mut out = Sp::new();
    for (j, a) in x {
        for i in 0..m.cod() {
            add_into(&mut out, vec![i], &(a * m.get(i, j[0])));
        }
    }
    out
}

/// `c(x)` as a two-leg tensor.
pub fn cop(c: &CoOp, x: &Sp) -> Sp {
    splice(x, 0, |i| image(c, i))
}

fn image(c: &CoOp, i: usize) -> Sp {
    let [_, d1, d2] = c.shape();
    let mut out = Sp::new();
    for j in 0..d1 {
        for k in 0..d2 {
            add_into(&mut out, vec![j, k], c.get(i, j, k));
        }
    }
    out
}

/// Replaces leg `k` of every summand by the tensor `f(index)`, whose legs are
/// spliced in at position `k`.
pub fn splice(t: &Sp, k: usize, f: impl Fn(usize) -> Sp) -> Sp {
    let mut out = Sp::new();
    for (idx, c) in t {
        for (sub, d) in f(idx[k]) {
            let mut key = idx[..k].to_vec();
            key.extend(sub);
            key.extend_from_slice(&idx[k + 1..]);
            add_into(&mut out, key, &(c * &d));
        }
    }
    out
}

pub fn on_leg(t: &Sp, k: usize, m: &LinMap) -> Sp {
    splice(t, k, |i| apply(m, &basis(i)))
}

/// `x * (leg k)`.
pub fn lmul(op: &BinOp, x: &Sp, t: &Sp, k: usize) -> Sp {
    splice(t, k, |i| prod(op, x, &basis(i)))
}

/// `(leg k) * y`.
pub fn rmul(op: &BinOp, t: &Sp, k: usize, y: &Sp) -> Sp {
    splice(t, k, |i| prod(op, &basis(i), y))
}

/// `x ⋆ (leg k) = x * t_k + t_k * x`.
pub fn lstar(op: &BinOp, x: &Sp, t: &Sp, k: usize) -> Sp {
    sum(&[lmul(op, x, t, k), rmul(op, t, k, x)])
}

pub fn co_leg(c: &CoOp, t: &Sp, k: usize) -> Sp {
    splice(t, k, |i| image(c, i))
}

pub fn outer(x: &Sp, y: &Sp) -> Sp {
    let mut out = Sp::new();
    for (i, a) in x {
        for (j, b) in y {
            let mut k = i.clone();
            k.extend_from_slice(j);
            add_into(&mut out, k, &(a * b));
        }
    }
    out
}

/// Output leg `p` is input leg `perm[p]`.
pub fn permute(t: &Sp, perm: &[usize]) -> Sp {
    t.iter().map(|(k, v)| (perm.iter().map(|&p| k[p]).collect(), v.clone())).collect()
}

pub fn tau(t: &Sp) -> Sp {
    permute(t, &[1, 0])
}

pub fn tau12(t: &Sp) -> Sp {
    permute(t, &[1, 0, 2])
}

pub fn pair(b: &Tensor, x: &Sp, y: &Sp) -> Sp {
    let mut out = Sp::new();
    for (i, a) in x {
        for (j, c) in y {
            add_into(&mut out, vec![], &(&(a * c) * b.get(&[i[0], j[0]])));
        }
    }
    out
}

pub fn from_tensor(t: &Tensor) -> Sp {
    t.nonzeros().map(|(k, v)| (k, v.clone())).collect()
}

/// Dense row-major layout of `t` with the given leg sizes.
pub fn flatten(t: &Sp, dims: &[usize]) -> Vec<Poly> {
    let total: usize = dims.iter().product();
    let mut out = vec![Poly::zero(); total];
    for (k, v) in t {
        let mut f = 0;
        for (i, d) in k.iter().zip(dims) {
            f = f * d + i;
        }
        out[f] = v.clone();
    }
    out
}

fn poly(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// The residual of identity `id` at `tuple`, as in `residual_at`: components
/// laid out densely and concatenated. Closed identities take an empty tuple.
pub fn residual(id: &str, w: &World, tuple: &[usize]) -> Vec<Poly> {
    let (comps, dims) = expand(id, w, tuple);
    comps.iter().flat_map(|c| flatten(c, &dims)).collect()
}

fn expand(id: &str, w: &World, tuple: &[usize]) -> (Vec<Sp>, Vec<usize>) {
    let (n, m) = (w.n, w.m);
    let e = |k: usize| basis(tuple[k]);
    let a1 = vec![n];
    let a2 = vec![n, n];
    let a3 = vec![n, n, n];
    let o = |x: &Sp, y: &Sp| prod(&w.circ, x, y);
    let dt = |x: &Sp, y: &Sp| prod(&w.dot, x, y);
    let dm = |x: &Sp, y: &Sp| prod(&w.diamond, x, y);
    let lh = |x: &Sp, y: &Sp| prod(&w.lhd, x, y);
    let rh = |x: &Sp, y: &Sp| prod(&w.rhd, x, y);
    let f = |x: &Sp, y: &Sp| prod(&w.f, x, y);
    let l = |x: &Sp, v: &Sp| prod(&w.lrep, x, v);
    let r = |x: &Sp, v: &Sp| prod(&w.rrep, x, v);
    let d = |x: &Sp| apply(&w.d, x);
    let q = |x: &Sp| apply(&w.q, x);
    let t = |x: &Sp| apply(&w.t, x);
    let del = |x: &Sp| cop(&w.delta, x);
    let cdel = |x: &Sp| cop(&w.cdelta, x);
    let one = |x: Sp, dims: &Vec<usize>| (vec![x], dims.clone());
    match id {
        "NOV_LSYM" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(
                lc(&[
                    (1, &o(&o(&a, &b), &c)),
                    (-1, &o(&a, &o(&b, &c))),
                    (-1, &o(&o(&b, &a), &c)),
                    (1, &o(&b, &o(&a, &c))),
                ]),
                &a1,
            )
        }
        "NOV_RCOMM" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(lc(&[(1, &o(&o(&a, &b), &c)), (-1, &o(&o(&a, &c), &b))]), &a1)
        }
        "COMM" => {
            let (a, b) = (e(0), e(1));
            one(lc(&[(1, &dt(&a, &b)), (-1, &dt(&b, &a))]), &a1)
        }
        "ASSOC" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(lc(&[(1, &dt(&dt(&a, &b), &c)), (-1, &dt(&a, &dt(&b, &c)))]), &a1)
        }
        "DERIV" => {
            let (a, b) = (e(0), e(1));
            one(lc(&[(1, &d(&dt(&a, &b))), (-1, &dt(&d(&a), &b)), (-1, &dt(&a, &d(&b)))]), &a1)
        }
        "ADMISS" => {
            let (a, b) = (e(0), e(1));
            one(lc(&[(1, &q(&dt(&a, &b))), (-1, &dt(&q(&a), &b)), (1, &dt(&a, &d(&b)))]), &a1)
        }
        "ZINBIEL" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(lc(&[(1, &dm(&a, &dm(&b, &c))), (-1, &dm(&dm(&b, &a), &c)), (-1, &dm(&dm(&a, &b), &c))]), &a1)
        }
        "ZINB_ADMISS" => {
            let (a, b) = (e(0), e(1));
            let qab = q(&dm(&a, &b));
            (
                vec![
                    lc(&[(1, &qab), (-1, &dm(&q(&a), &b)), (1, &dm(&a, &d(&b)))]),
                    lc(&[(1, &qab), (-1, &dm(&a, &q(&b))), (1, &dm(&d(&a), &b))]),
                ],
                a1,
            )
        }
        "PRE_NOV_1" => {
            let (a, b, c) = (e(0), e(1), e(2));
            let ab = sum(&[rh(&a, &b), lh(&a, &b)]);
            let ba = sum(&[rh(&b, &a), lh(&b, &a)]);
            one(
                lc(&[(1, &rh(&a, &rh(&b, &c))), (-1, &rh(&ab, &c)), (-1, &rh(&b, &rh(&a, &c))), (1, &rh(&ba, &c))]),
                &a1,
            )
        }
        "PRE_NOV_2" => {
            let (a, b, c) = (e(0), e(1), e(2));
            let ac = sum(&[lh(&a, &c), rh(&a, &c)]);
            one(
                lc(&[
                    (1, &rh(&a, &lh(&b, &c))),
                    (-1, &lh(&rh(&a, &b), &c)),
                    (-1, &lh(&b, &ac)),
                    (1, &lh(&lh(&b, &a), &c)),
                ]),
                &a1,
            )
        }
        "PRE_NOV_3" => {
            let (a, b, c) = (e(0), e(1), e(2));
            let ab = sum(&[lh(&a, &b), rh(&a, &b)]);
            one(lc(&[(1, &rh(&ab, &c)), (-1, &lh(&rh(&a, &c), &b))]), &a1)
        }
        "PRE_NOV_4" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(lc(&[(1, &lh(&lh(&a, &b), &c)), (-1, &lh(&lh(&a, &c), &b))]), &a1)
        }
        "COASSOC" => {
            let x = del(&e(0));
            one(lc(&[(1, &co_leg(&w.delta, &x, 0)), (-1, &co_leg(&w.delta, &x, 1))]), &a3)
        }
        "COCOMM" => {
            let x = del(&e(0));
            one(lc(&[(1, &x), (-1, &tau(&x))]), &a2)
        }
        "CODERIV" => {
            let a = e(0);
            let x = del(&a);
            one(lc(&[(1, &del(&q(&a))), (-1, &on_leg(&x, 1, &w.q)), (-1, &on_leg(&x, 0, &w.q))]), &a2)
        }
        "CO_ADMISS" => {
            let a = e(0);
            let x = del(&a);
            one(lc(&[(1, &on_leg(&x, 0, &w.d)), (-1, &on_leg(&x, 1, &w.q)), (-1, &del(&d(&a)))]), &a2)
        }
        "NOV_COALG_1" => {
            let x = cdel(&e(0));
            let right = co_leg(&w.cdelta, &x, 1);
            let left = co_leg(&w.cdelta, &x, 0);
            one(lc(&[(1, &right), (-1, &tau12(&right)), (-1, &left), (1, &tau12(&left))]), &a3)
        }
        "NOV_COALG_2" => {
            let x = cdel(&e(0));
            let lhs = tau12(&co_leg(&w.cdelta, &tau(&x), 1));
            one(lc(&[(1, &lhs), (-1, &co_leg(&w.cdelta, &x, 0))]), &a3)
        }
        "ASI_1" => {
            let (a, b) = (e(0), e(1));
            one(
                lc(&[
                    (1, &del(&dt(&a, &b))),
                    (-1, &lmul(&w.dot, &a, &del(&b), 1)),
                    (-1, &rmul(&w.dot, &del(&a), 0, &b)),
                ]),
                &a2,
            )
        }
        "ASI_2" => {
            let (a, b) = (e(0), e(1));
            let part = |x: &Sp, y: &Sp| {
                let dx = del(x);
                lc(&[(1, &lmul(&w.dot, y, &dx, 0)), (-1, &rmul(&w.dot, &dx, 1, y))])
            };
            one(sum(&[part(&a, &b), tau(&part(&b, &a))]), &a2)
        }
        "NOV_BIALG_1" => {
            let (a, b) = (e(0), e(1));
            let db = cdel(&b);
            let sym = sum(&[db.clone(), tau(&db)]);
            one(
                lc(&[
                    (1, &cdel(&o(&a, &b))),
                    (-1, &rmul(&w.circ, &cdel(&a), 0, &b)),
                    (-1, &lstar(&w.circ, &a, &sym, 1)),
                ]),
                &a2,
            )
        }
        "NOV_BIALG_2" => {
            let (a, b) = (e(0), e(1));
            let side = |x: &Sp, y: &Sp| {
                let dy = cdel(y);
                lc(&[(1, &lstar(&w.circ, x, &dy, 0)), (-1, &lstar(&w.circ, x, &tau(&dy), 1))])
            };
            one(lc(&[(1, &side(&a, &b)), (-1, &side(&b, &a))]), &a2)
        }
        "NOV_BIALG_3" => {
            let (a, b) = (e(0), e(1));
            let side = |x: &Sp, y: &Sp| {
                let dy = cdel(y);
                let s = sum(&[dy.clone(), tau(&dy)]);
                lc(&[(1, &rmul(&w.circ, &s, 1, x)), (-1, &rmul(&w.circ, &s, 0, x))])
            };
            one(lc(&[(1, &side(&a, &b)), (-1, &side(&b, &a))]), &a2)
        }
        "REP_NOV_1" => {
            let (a, b, v) = (e(0), e(1), e(2));
            let comm = lc(&[(1, &o(&a, &b)), (-1, &o(&b, &a))]);
            one(lc(&[(1, &l(&comm, &v)), (-1, &l(&a, &l(&b, &v))), (1, &l(&b, &l(&a, &v)))]), &vec![m])
        }
        "REP_NOV_2" => {
            let (a, b, v) = (e(0), e(1), e(2));
            one(
                lc(&[
                    (1, &l(&a, &r(&b, &v))),
                    (-1, &r(&b, &l(&a, &v))),
                    (-1, &r(&o(&a, &b), &v)),
                    (1, &r(&b, &r(&a, &v))),
                ]),
                &vec![m],
            )
        }
        "REP_NOV_3" => {
            let (a, b, v) = (e(0), e(1), e(2));
            one(lc(&[(1, &l(&o(&a, &b), &v)), (-1, &r(&b, &l(&a, &v)))]), &vec![m])
        }
        "REP_NOV_4" => {
            let (a, b, v) = (e(0), e(1), e(2));
            one(lc(&[(1, &r(&a, &r(&b, &v))), (-1, &r(&b, &r(&a, &v)))]), &vec![m])
        }
        "REP_ASSOC" => {
            let (a, b, v) = (e(0), e(1), e(2));
            one(lc(&[(1, &l(&dt(&a, &b), &v)), (-1, &l(&a, &l(&b, &v)))]), &vec![m])
        }
        "REP_DIFF" => {
            let (a, v) = (e(0), e(1));
            let al = |x: &Sp| apply(&w.alpha, x);
            one(lc(&[(1, &al(&l(&a, &v))), (-1, &l(&d(&a), &v)), (-1, &l(&a, &al(&v)))]), &vec![m])
        }
        "REP_ADM" => {
            let (a, v) = (e(0), e(1));
            let be = |x: &Sp| apply(&w.beta, x);
            let blv = be(&l(&a, &v));
            (
                vec![
                    lc(&[(1, &blv), (-1, &l(&a, &be(&v))), (1, &l(&d(&a), &v))]),
                    lc(&[(1, &blv), (-1, &l(&q(&a), &v)), (1, &l(&a, &apply(&w.alpha, &v)))]),
                ],
                vec![m],
            )
        }
        "DEFORM_1" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(
                lc(&[
                    (1, &f(&f(&a, &b), &c)),
                    (-1, &f(&a, &f(&b, &c))),
                    (-1, &f(&f(&b, &a), &c)),
                    (1, &f(&b, &f(&a, &c))),
                ]),
                &a1,
            )
        }
        "DEFORM_2" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(
                lc(&[
                    (1, &f(&a, &o(&b, &c))),
                    (-1, &f(&o(&a, &b), &c)),
                    (1, &f(&o(&b, &a), &c)),
                    (-1, &f(&b, &o(&a, &c))),
                    (1, &o(&a, &f(&b, &c))),
                    (-1, &o(&f(&a, &b), &c)),
                    (1, &o(&f(&b, &a), &c)),
                    (-1, &o(&b, &f(&a, &c))),
                ]),
                &a1,
            )
        }
        "DEFORM_3" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(lc(&[(1, &f(&f(&a, &b), &c)), (-1, &f(&f(&a, &c), &b))]), &a1)
        }
        "DEFORM_4" => {
            let (a, b, c) = (e(0), e(1), e(2));
            one(
                lc(&[
                    (1, &o(&f(&a, &b), &c)),
                    (-1, &o(&f(&a, &c), &b)),
                    (1, &f(&o(&a, &b), &c)),
                    (-1, &f(&o(&a, &c), &b)),
                ]),
                &a1,
            )
        }
        "SPEC_DEF_5" | "SPEC_DEF_6" => {
            let (a, b, c) = (e(0), e(1), e(2));
            let last = if id == "SPEC_DEF_5" { q(&c) } else { d(&c) };
            let side = |x: &Sp, y: &Sp| lc(&[(1, &dt(&dt(x, &q(y)), &last)), (-1, &dt(x, &q(&dt(y, &last))))]);
            one(lc(&[(1, &side(&a, &b)), (-1, &side(&b, &a))]), &a1)
        }
        "BIALG_Q_1" => one(bialg_q_1(w, &e(0), &e(1)), &a2),
        "BIALG_Q_2" => {
            let (a, b) = (e(0), e(1));
            let qqd = |t: &Sp, leg: usize| sum(&[on_leg(t, leg, &w.q), scale(&Poly::q(), &on_leg(t, leg, &w.d))]);
            let side = |x: &Sp, y: &Sp| {
                let s = sum(&[d(x), q(x)]);
                let dy = del(y);
                lc(&[(1, &lmul(&w.dot, &s, &qqd(&dy, 1), 0)), (-1, &lmul(&w.dot, &s, &qqd(&dy, 0), 1))])
            };
            let k = poly(&[1, 2]);
            one(scale(&k, &lc(&[(1, &side(&a, &b)), (-1, &side(&b, &a))])), &a2)
        }
        "BIALG_Q_3" => {
            let (a, b) = (e(0), e(1));
            let side = |x: &Sp, y: &Sp| {
                let s = sum(&[d(x), scale(&Poly::q(), &q(x))]);
                let dy = del(y);
                let tt = sum(&[on_leg(&dy, 1, &w.d), on_leg(&dy, 1, &w.q)]);
                lc(&[(1, &lmul(&w.dot, &s, &tt, 1)), (-1, &lmul(&w.dot, &s, &tt, 0))])
            };
            let k = poly(&[1, 2]);
            one(scale(&k, &lc(&[(1, &side(&a, &b)), (-1, &side(&b, &a))])), &a2)
        }
        "COND_A" => {
            let (a, b) = (e(0), e(1));
            one(lc(&[(1, &dt(&a, &q(&b))), (1, &dt(&a, &d(&b)))]), &a1)
        }
        "COND_B" => {
            let x = del(&e(0));
            one(lc(&[(1, &on_leg(&x, 1, &w.q)), (1, &on_leg(&x, 1, &w.d))]), &a2)
        }
        "BILIN_INV_NOV" => {
            let (a, b, c) = (e(0), e(1), e(2));
            let p = |x: &Sp, y: &Sp| pair(&w.b, x, y);
            one(lc(&[(1, &p(&o(&a, &b), &c)), (1, &p(&b, &o(&a, &c))), (1, &p(&b, &o(&c, &a)))]), &vec![])
        }
        "BILIN_INV_ASSOC" => {
            let (a, b, c) = (e(0), e(1), e(2));
            let p = |x: &Sp, y: &Sp| pair(&w.b, x, y);
            one(lc(&[(1, &p(&dt(&a, &b), &c)), (-1, &p(&a, &dt(&b, &c)))]), &vec![])
        }
        "FORM_SYM" => {
            let (a, b) = (e(0), e(1));
            one(lc(&[(1, &pair(&w.b, &a, &b)), (-1, &pair(&w.b, &b, &a))]), &vec![])
        }
        "AYBE" => one(aybe(&w.dot, &w.r), &a3),
        "NYBE" => one(nybe(&w.circ, &w.r), &a3),
        "R_ADMISS" => {
            let r = from_tensor(&w.r);
            (
                vec![
                    lc(&[(1, &on_leg(&r, 0, &w.d)), (-1, &on_leg(&r, 1, &w.q))]),
                    lc(&[(1, &on_leg(&r, 1, &w.d)), (-1, &on_leg(&r, 0, &w.q))]),
                ],
                a2,
            )
        }
        "OOP_NOV" => {
            let (u, v) = (e(0), e(1));
            one(lc(&[(1, &o(&t(&u), &t(&v))), (-1, &t(&l(&t(&u), &v))), (-1, &t(&r(&t(&v), &u)))]), &a1)
        }
        "OOP_ASSOC" => {
            let (u, v) = (e(0), e(1));
            let inner = sum(&[l(&t(&u), &v), l(&t(&v), &u)]);
            one(lc(&[(1, &dt(&t(&u), &t(&v))), (-1, &t(&inner))]), &a1)
        }
        "OOP_DT" => {
            let u = e(0);
            one(lc(&[(1, &d(&t(&u))), (-1, &t(&apply(&w.alpha, &u)))]), &a1)
        }
        "OOP_QT" => {
            let u = e(0);
            one(lc(&[(1, &q(&t(&u))), (-1, &t(&apply(&w.beta, &u)))]), &a1)
        }
        other => panic!("no naive expansion for {other}"),
    }
}

/// Summands `x_i ⊗ y_i` of an order-2 tensor.
fn summands(r: &Tensor) -> Vec<(Sp, Sp, Poly)> {
    r.nonzeros().map(|(k, v)| (basis(k[0]), basis(k[1]), v.clone())).collect()
}

fn triple(x: &Sp, y: &Sp, z: &Sp) -> Sp {
    outer(&outer(x, y), z)
}

/// `r13·r12 + r13·r23 - r12·r23` with `r = Σ x_i⊗y_i`.
pub fn aybe(dot: &BinOp, r: &Tensor) -> Sp {
    let s = summands(r);
    let mut terms = Vec::new();
    for (xi, yi, ci) in &s {
        for (xj, yj, cj) in &s {
            let c = ci * cj;
            let r13r12 = triple(&prod(dot, xi, xj), yj, yi);
            let r13r23 = triple(xi, xj, &prod(dot, yi, yj));
            let r12r23 = triple(xi, &prod(dot, yi, xj), yj);
            terms.push(scale(&c, &lc(&[(1, &r13r12), (1, &r13r23), (-1, &r12r23)])));
        }
    }
    sum(&terms)
}

/// `r13∘r23 + r12⋆r23 + r13∘r12`.
pub fn nybe(circ: &BinOp, r: &Tensor) -> Sp {
    let s = summands(r);
    let mut terms = Vec::new();
    for (xi, yi, ci) in &s {
        for (xj, yj, cj) in &s {
            let c = ci * cj;
            let r13r23 = triple(xi, xj, &prod(circ, yi, yj));
            let star = sum(&[prod(circ, yi, xj), prod(circ, xj, yi)]);
            let r12r23 = triple(xi, &star, yj);
            let r13r12 = triple(&prod(circ, xi, xj), yj, yi);
            terms.push(scale(&c, &sum(&[r13r23, r12r23, r13r12])));
        }
    }
    sum(&terms)
}

/// The first compatibility residual of the induced pair, term by term.
fn bialg_q_1(w: &World, a: &Sp, b: &Sp) -> Sp {
    let dq = |x: &Sp| sum(&[apply(&w.q, x), apply(&w.d, x)]);
    let (d, q) = (|x: &Sp| apply(&w.d, x), |x: &Sp| apply(&w.q, x));
    let dot = |x: &Sp, y: &Sp| prod(&w.dot, x, y);
    let db = d(b);
    let dqb = dq(b);
    let qb = q(b);
    // second-leg terms, per summand a1⊗a2 of δ(a)
    let second = |a2: &Sp| -> Sp {
        sum(&[
            scale(&poly(&[-1, -1, 1]), &dot(&db, &dq(a2))),
            scale(&poly(&[-1]), &dot(&dqb, &q(a2))),
            scale(&poly(&[0, 0, 1]), &lc(&[(1, &dot(&db, &q(a2))), (-1, &dot(&d(a2), &qb))])),
            scale(&poly(&[-1, -2, 1]), &dot(b, &d(&dq(a2)))),
            scale(&poly(&[0, -1, 1]), &lc(&[(1, &dot(b, &d(&q(a2)))), (-1, &dot(b, &q(&d(a2))))])),
            scale(&poly(&[0, -2]), &dot(b, &q(&dq(a2)))),
        ])
    };
    let x = cop(&w.delta, a);
    let mut terms = Vec::new();
    for (k, c) in &x {
        let (a1, a2) = (basis(k[0]), basis(k[1]));
        terms.push(scale(c, &outer(&a1, &second(&a2))));
        terms.push(scale(&(c * &poly(&[1, 1, -2])), &outer(&d(&a1), &dot(b, &dq(&a2)))));
    }
    sum(&terms)
}
