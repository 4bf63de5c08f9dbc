//! Random inputs. Structured families are valid by construction: every
//! admissible quadruple comes from a small seed algebra, a random derivation
//! and multiplier, and a random change of basis.

use novikov_core::exactcore::linalg::inverse;
use novikov_core::exactcore::{int, rat};
use novikov_core::structures::{Presentation, Space};
use novikov_core::{fixtures, BinOp, CoOp, LinMap, Poly, Rational, Ring, Tensor};
use proptest::collection::vec;
use proptest::prelude::*;

use crate::world::World;

fn p(n: i64) -> Poly {
    Poly::from_int(n)
}

/// Mostly zero, otherwise a small integer or, when `symbolic`, `a + b·q`.
pub fn entry(symbolic: bool) -> BoxedStrategy<Poly> {
    let constant = (-2i64..=2).prop_map(p);
    if symbolic {
        prop_oneof![
            4 => Just(Poly::zero()),
            3 => constant,
            2 => (-2i64..=2, -2i64..=2).prop_map(|(a, b)| Poly::from_ints(&[a, b])),
        ]
        .boxed()
    } else {
        prop_oneof![5 => Just(Poly::zero()), 4 => constant].boxed()
    }
}

/// A world with every role bound at random, `dim A ≤ max_n`, `dim V ≤ max_m`.
pub fn world(max_n: usize, max_m: usize, symbolic: bool) -> BoxedStrategy<World> {
    (1..=max_n, 1..=max_m)
        .prop_flat_map(move |(n, m)| {
            let ring = if symbolic { Ring::Poly } else { Ring::Rational };
            vec(entry(symbolic), World::entry_count(n, m)).prop_map(move |v| {
                let mut it = v.into_iter();
                World::from_entries(n, m, ring, || it.next().expect("entry count"))
            })
        })
        .boxed()
}

/// A small nonzero rational.
pub fn small_rational() -> BoxedStrategy<Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| rat(a, b)).boxed()
}

/// A change of basis `P` and its inverse.
#[derive(Clone, Debug)]
pub struct Basis {
    pub p: LinMap,
    pub inv: LinMap,
}

impl Basis {
    /// `P = L·U` with unit lower `L` and an upper `U` whose diagonal avoids zero.
    pub fn from_seed(n: usize, seed: &[i64]) -> Basis {
        let mut it = seed.iter().copied().cycle();
        let mut l = LinMap::identity(n);
        let mut u = LinMap::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = it.next().unwrap_or(0);
                if j < i {
                    l.set(i, j, p(v.clamp(-1, 1)));
                } else if j > i {
                    u.set(i, j, p(v.clamp(-1, 1)));
                } else {
                    u.set(i, j, p([1, -1, 2, 1, -2][v.rem_euclid(5) as usize]));
                }
            }
        }
        let p = l.compose(&u).expect("square");
        let inv = inverse(&p).expect("triangular factors are invertible");
        Basis { p, inv }
    }

    pub fn dim(&self) -> usize {
        self.p.cod()
    }

    pub fn op(&self, op: &BinOp) -> BinOp {
        let t = op.tensor();
        let t = t.apply_map(&self.p.transpose(), 0).unwrap();
        let t = t.apply_map(&self.p.transpose(), 1).unwrap();
        BinOp::from_tensor(t.apply_map(&self.inv, 2).unwrap()).unwrap()
    }

    pub fn map(&self, m: &LinMap) -> LinMap {
        self.inv.compose(m).unwrap().compose(&self.p).unwrap()
    }

    pub fn coop(&self, c: &CoOp) -> CoOp {
        let t = c.tensor().apply_map(&self.p.transpose(), 0).unwrap();
        let t = t.apply_map(&self.inv, 1).unwrap();
        CoOp::from_tensor(t.apply_map(&self.inv, 2).unwrap()).unwrap()
    }

    pub fn element(&self, r: &Tensor) -> Tensor {
        r.apply_map(&self.inv, 0).unwrap().apply_map(&self.inv, 1).unwrap()
    }
}

/// An admissible commutative differential algebra `(A, ·, D, Q)`.
#[derive(Clone, Debug)]
pub struct Quad {
    pub dot: BinOp,
    pub d: LinMap,
    pub q: LinMap,
}

impl Quad {
    pub fn dim(&self) -> usize {
        self.dot.dim().expect("square")
    }
}

struct Seed {
    dot: BinOp,
    derivations: Vec<LinMap>,
    /// Every map is admissible (zero product).
    free_q: bool,
}

fn op(n: usize, entries: &[(usize, usize, usize, i64)]) -> BinOp {
    BinOp::from_entries(n, &entries.iter().map(|&(i, j, k, c)| (i, j, k, p(c))).collect::<Vec<_>>())
}

fn lm(n: usize, images: &[(usize, usize, i64)]) -> LinMap {
    LinMap::from_images(n, &images.iter().map(|&(i, j, c)| (i, j, p(c))).collect::<Vec<_>>())
}

fn elementary(n: usize, rows: std::ops::Range<usize>) -> Vec<LinMap> {
    let mut out = Vec::new();
    for i in rows.clone() {
        for j in rows.clone() {
            out.push(lm(n, &[(j, i, 1)]));
        }
    }
    out
}

/// Unital algebra with unit `e1` and the given products of the other basis vectors.
fn unital(n: usize, rest: &[(usize, usize, usize, i64)]) -> BinOp {
    let mut entries = vec![(0, 0, 0, 1)];
    for i in 1..n {
        entries.push((0, i, i, 1));
        entries.push((i, 0, i, 1));
    }
    entries.extend_from_slice(rest);
    op(n, &entries)
}

fn seeds() -> Vec<Seed> {
    let s = |dot, derivations| Seed { dot, derivations, free_q: false };
    vec![
        // k[x]/(x²)
        s(unital(2, &[]), vec![lm(2, &[(1, 1, 1)])]),
        // k[x]/(x³)
        s(unital(3, &[(1, 1, 2, 1)]), vec![lm(3, &[(1, 1, 1), (2, 2, 2)]), lm(3, &[(1, 2, 1)])]),
        // k[x,y]/(x,y)²
        s(unital(3, &[]), elementary(3, 1..3)),
        // x k[x]/(x⁴), the descendent of the Zinbiel fixture
        s(
            op(3, &[(0, 0, 1, 2), (0, 1, 2, 3), (1, 0, 2, 3)]),
            vec![lm(3, &[(0, 0, 1), (1, 1, 2), (2, 2, 3)]), lm(3, &[(0, 1, 1), (1, 2, 3)]), lm(3, &[(0, 2, 1)])],
        ),
        // x k[x]/(x³)
        s(op(2, &[(0, 0, 1, 1)]), vec![lm(2, &[(0, 0, 1), (1, 1, 2)]), lm(2, &[(0, 1, 1)])]),
        // k × k and k
        s(op(2, &[(0, 0, 0, 1), (1, 1, 1, 1)]), vec![]),
        s(op(1, &[(0, 0, 0, 1)]), vec![]),
        Seed { dot: BinOp::zero(1), derivations: elementary(1, 0..1), free_q: true },
        Seed { dot: BinOp::zero(2), derivations: elementary(2, 0..2), free_q: true },
        Seed { dot: BinOp::zero(3), derivations: elementary(3, 0..3), free_q: true },
    ]
}

/// `Q = -D + L(z) + c·id` is admissible for every derivation `D`, element `z` and scalar `c`.
pub fn quad() -> BoxedStrategy<Quad> {
    let n_seeds = seeds().len();
    (0..n_seeds, vec(-2i64..=2, 9), vec(-1i64..=1, 3), -2i64..=2, vec(-2i64..=2, 9), vec(-2i64..=2, 9))
        .prop_map(|(si, dc, z, c, extra, basis)| {
            let seed = &seeds()[si];
            let n = seed.dot.dim().unwrap();
            let mut d = LinMap::zero(n, n);
            for (m, k) in seed.derivations.iter().zip(&dc) {
                d = d.try_add(&m.scale(&p(*k))).unwrap();
            }
            let zv = Tensor::from_fn(&[n], |i| p(z[i[0]]));
            let lz = LinMap::from_fn(n, n, |i, j| seed.dot.apply(&zv, &Tensor::basis(n, j)).unwrap().get(&[i]).clone());
            let mut q = d.scale(&p(-1)).try_add(&lz).unwrap().try_add(&LinMap::identity(n).scale(&p(c))).unwrap();
            if seed.free_q {
                q = q.try_add(&LinMap::from_fn(n, n, |i, j| p(extra[i * n + j]))).unwrap();
            }
            let b = Basis::from_seed(n, &basis);
            Quad { dot: b.op(&seed.dot), d: b.map(&d), q: b.map(&q) }
        })
        .boxed()
}

/// An admissible differential Zinbiel algebra as a presentation with
/// components `diamond`, `D`, `Q`: a fixture, rescaled and rebased.
pub fn zinbiel() -> BoxedStrategy<Presentation> {
    (any::<bool>(), prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)], vec(-2i64..=2, 9))
        .prop_map(|(deriv, scale, basis)| {
            let z = if deriv { fixtures::zinb_deriv() } else { fixtures::zinb_nonderiv() };
            let b = Basis::from_seed(3, &basis);
            let dm = b.op(&z.product("diamond").unwrap().scale(&p(scale)));
            Presentation::new(Space::numbered(3), Ring::Rational)
                .with_product("diamond", dm)
                .with_map("D", b.map(z.map("D").unwrap()))
                .with_map("Q", b.map(z.map("Q").unwrap()))
        })
        .boxed()
}

/// Antisymmetric `r` on an `n`-dimensional space from upper-triangle entries.
pub fn antisymmetric(n: usize, upper: &[i64]) -> Tensor {
    let mut r = Tensor::zeros(&[n, n]);
    let mut it = upper.iter().copied().cycle();
    for i in 0..n {
        for j in i + 1..n {
            let v = p(it.next().unwrap_or(0));
            r.set(&[i, j], v.clone());
            r.set(&[j, i], -v);
        }
    }
    r
}

/// `1/2`-spaced rationals in `[-3, 3]` plus the special values, for specialization.
pub fn rationals() -> BoxedStrategy<Vec<Rational>> {
    vec((-12i64..=12, 1i64..=5).prop_map(|(a, b)| rat(a, b)), 20)
        .prop_map(|mut v| {
            v[0] = rat(-1, 2);
            v[1] = int(0);
            v
        })
        .boxed()
}
