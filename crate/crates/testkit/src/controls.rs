//! Negative controls: for every catalog identity a small fixture on which it
//! fails, with the witness (first nonzero tuple, row-major) and its residual
//! worked out by hand.

use novikov_core::bialgebra::check_subalgebra;
use novikov_core::fixtures;
use novikov_core::structures::catalog::SPECIAL_IDS;
use novikov_core::structures::check::check_form_nondeg;
use novikov_core::structures::{check_axiom, AxiomReport, IDS};
use novikov_core::{BinOp, CoOp, LinMap, Poly, Result, Ring, Tensor};

use crate::world::World;

pub struct Control {
    pub id: &'static str,
    pub fixture: &'static str,
    pub world: World,
    /// Value substituted for the coefficient parameter `q`.
    pub param: Option<i64>,
    pub tuple: Vec<usize>,
    pub residual: Vec<i64>,
}

impl Control {
    /// Runs the check this control targets.
    pub fn report(&self) -> Result<AxiomReport> {
        let w = &self.world;
        match self.id {
            "FORM_NONDEG" => check_form_nondeg(&w.b, w.ring),
            "SUBALG_A" => check_subalgebra(&w.circ, w.n / 2, false, w.ring),
            "SUBALG_DUAL" => check_subalgebra(&w.circ, w.n / 2, true, w.ring),
            id => {
                let env = w.env();
                let env = match self.param {
                    Some(q0) => env.at_param(Poly::from_int(q0)),
                    None => env,
                };
                check_axiom(id, &env)
            }
        }
    }

    /// `None` when the report fails with exactly the expected witness.
    pub fn mismatch(&self) -> Option<String> {
        let rep = match self.report() {
            Ok(r) => r,
            Err(e) => return Some(format!("{}: {e}", self.id)),
        };
        let want: Vec<Poly> = self.residual.iter().map(|&c| Poly::from_int(c)).collect();
        let ok = rep.verdict.as_str() == "fails"
            && rep.witness.as_ref().is_some_and(|w| w.tuple == self.tuple && w.residual == want);
        (!ok).then(|| {
            format!(
                "{} on {}: verdict {}, witness {:?}, expected {:?} with {:?}",
                self.id,
                self.fixture,
                rep.verdict.as_str(),
                rep.witness.as_ref().map(|w| (&w.tuple, w.residual.iter().map(|p| p.to_string()).collect::<Vec<_>>())),
                self.tuple,
                self.residual
            )
        })
    }
}

fn p(c: i64) -> Poly {
    Poly::from_int(c)
}

fn blank(n: usize, m: usize) -> World {
    World::from_entries(n, m, Ring::Rational, Poly::zero)
}

fn op(n: usize, entries: &[(usize, usize, usize, i64)]) -> BinOp {
    BinOp::from_entries(n, &entries.iter().map(|&(i, j, k, c)| (i, j, k, p(c))).collect::<Vec<_>>())
}

/// An action `A × V → V` with `dim A = n`, `dim V = m`.
fn action(n: usize, m: usize, entries: &[(usize, usize, usize, i64)]) -> BinOp {
    let mut a = BinOp::zero_shaped(n, m, m);
    for &(i, j, k, c) in entries {
        a.set(i, j, k, p(c));
    }
    a
}

fn co(n: usize, entries: &[(usize, usize, usize, i64)]) -> CoOp {
    CoOp::from_entries(n, &entries.iter().map(|&(i, j, k, c)| (i, j, k, p(c))).collect::<Vec<_>>())
}

fn form(n: usize, entries: &[(usize, usize, i64)]) -> Tensor {
    let mut t = Tensor::zeros(&[n, n]);
    for &(i, j, c) in entries {
        t.set(&[i, j], p(c));
    }
    t
}

/// The two-dimensional differential ASI example.
fn exnov1() -> World {
    let e = fixtures::exnov1();
    let mut w = blank(2, 2);
    w.dot = e.product("dot").unwrap().clone();
    w.d = e.map("D").unwrap().clone();
    w.q = e.map("Q").unwrap().clone();
    w.delta = e.coproduct("delta").unwrap().clone();
    w
}

/// `x∘y` with `e1∘e1 = e2`, `e2∘e2 = e1`: every right-commutativity type identity fails at `(e1, e1, e2)`.
fn swap_square() -> BinOp {
    op(2, &[(0, 0, 1, 1), (1, 1, 0, 1)])
}

fn idem() -> BinOp {
    op(2, &[(0, 0, 0, 1)])
}

pub fn controls() -> Vec<Control> {
    let mut out = Vec::new();
    let mut add = |id, fixture, world: World, param, tuple: &[usize], residual: &[i64]| {
        out.push(Control { id, fixture, world, param, tuple: tuple.to_vec(), residual: residual.to_vec() })
    };
    let with = |f: &dyn Fn(&mut World)| {
        let mut w = blank(2, 2);
        f(&mut w);
        w
    };

    add("NOV_LSYM", "e1∘e2 = e1", with(&|w| w.circ = op(2, &[(0, 1, 0, 1)])), None, &[0, 1, 1], &[1, 0]);
    add("NOV_RCOMM", "e1∘e1 = e2, e2∘e2 = e1", with(&|w| w.circ = swap_square()), None, &[0, 0, 1], &[1, 0]);
    add("COMM", "e1·e2 = e1", with(&|w| w.dot = op(2, &[(0, 1, 0, 1)])), None, &[0, 1], &[1, 0]);
    add(
        "ASSOC",
        "e1·e1 = e2, e1·e2 = e1",
        with(&|w| w.dot = op(2, &[(0, 0, 1, 1), (0, 1, 0, 1)])),
        None,
        &[0, 0, 0],
        &[-1, 0],
    );
    add(
        "DERIV",
        "e1·e1 = e1, D = id",
        with(&|w| {
            w.dot = idem();
            w.d = LinMap::identity(2);
        }),
        None,
        &[0, 0],
        &[-1, 0],
    );
    add(
        "ADMISS",
        "two-dimensional ASI example with Q = id",
        {
            let mut w = exnov1();
            w.q = LinMap::identity(2);
            w
        },
        None,
        &[0, 1],
        &[0, 1],
    );
    add("ZINBIEL", "e1⋄e1 = e1", with(&|w| w.diamond = idem()), None, &[0, 0, 0], &[-1, 0]);
    add(
        "ZINB_ADMISS",
        "e1⋄e1 = e1, D = id, Q = 0",
        with(&|w| {
            w.diamond = idem();
            w.d = LinMap::identity(2);
        }),
        None,
        &[0, 0],
        &[1, 0, 1, 0],
    );
    add(
        "PRE_NOV_1",
        "e1◁e2 = e1, e1▷e1 = e1",
        with(&|w| {
            w.lhd = op(2, &[(0, 1, 0, 1)]);
            w.rhd = idem();
        }),
        None,
        &[0, 1, 0],
        &[-1, 0],
    );
    add(
        "PRE_NOV_2",
        "e1◁e1 = e1, e1▷e1 = e1",
        with(&|w| {
            w.lhd = idem();
            w.rhd = idem();
        }),
        None,
        &[0, 0, 0],
        &[-1, 0],
    );
    add("PRE_NOV_3", "e1▷e1 = e1", with(&|w| w.rhd = idem()), None, &[0, 0, 0], &[1, 0]);
    add("PRE_NOV_4", "e1◁e1 = e2, e2◁e2 = e1", with(&|w| w.lhd = swap_square()), None, &[0, 0, 1], &[1, 0]);
    // A⊗A⊗A residuals are listed densely: index 4i + 2j + k.
    add("COASSOC", "δ(e1) = e1⊗e2", with(&|w| w.delta = co(2, &[(0, 0, 1, 1)])), None, &[0], &[0, 0, 0, 1, 0, 0, 0, 0]);
    add(
        "COCOMM",
        "two-dimensional ASI example with δ(e1) = e1⊗e2",
        {
            let mut w = exnov1();
            w.delta = co(2, &[(0, 0, 1, 1), (1, 1, 1, 1)]);
            w
        },
        None,
        &[0],
        &[0, 1, -1, 0],
    );
    add(
        "CODERIV",
        "δ(e1) = e1⊗e1, Q = id",
        with(&|w| {
            w.delta = co(2, &[(0, 0, 0, 1)]);
            w.q = LinMap::identity(2);
        }),
        None,
        &[0],
        &[-1, 0, 0, 0],
    );
    add(
        "CO_ADMISS",
        "δ(e1) = e1⊗e1, Q = id",
        with(&|w| {
            w.delta = co(2, &[(0, 0, 0, 1)]);
            w.q = LinMap::identity(2);
        }),
        None,
        &[0],
        &[-1, 0, 0, 0],
    );
    add(
        "NOV_COALG_1",
        "Δ(e1) = e1⊗e2",
        with(&|w| w.cdelta = co(2, &[(0, 0, 1, 1)])),
        None,
        &[0],
        &[0, 0, 0, -1, 0, 1, 0, 0],
    );
    add(
        "NOV_COALG_2",
        "Δ(e1) = e2⊗e1, Δ(e2) = e2⊗e2",
        with(&|w| w.cdelta = co(2, &[(0, 1, 0, 1), (1, 1, 1, 1)])),
        None,
        &[0],
        &[0, 0, 0, 0, 0, 1, -1, 0],
    );
    add(
        "ASI_1",
        "e1·e1 = e1, δ(e1) = e1⊗e1",
        with(&|w| {
            w.dot = idem();
            w.delta = co(2, &[(0, 0, 0, 1)]);
        }),
        None,
        &[0, 0],
        &[-1, 0, 0, 0],
    );
    add(
        "ASI_2",
        "e1·e1 = e1, δ(e1) = e1⊗e2",
        with(&|w| {
            w.dot = idem();
            w.delta = co(2, &[(0, 0, 1, 1)]);
        }),
        None,
        &[0, 0],
        &[0, 1, 1, 0],
    );
    add(
        "NOV_BIALG_1",
        "e1∘e1 = e1, Δ(e1) = e1⊗e1",
        with(&|w| {
            w.circ = idem();
            w.cdelta = co(2, &[(0, 0, 0, 1)]);
        }),
        None,
        &[0, 0],
        &[-4, 0, 0, 0],
    );
    add(
        "NOV_BIALG_2",
        "e1∘e1 = e1, Δ(e2) = e1⊗e2",
        with(&|w| {
            w.circ = idem();
            w.cdelta = co(2, &[(1, 0, 1, 1)]);
        }),
        None,
        &[0, 1],
        &[0, 2, -2, 0],
    );
    add(
        "NOV_BIALG_3",
        "e2∘e1 = e2, Δ(e2) = e1⊗e2",
        with(&|w| {
            w.circ = op(2, &[(1, 0, 1, 1)]);
            w.cdelta = co(2, &[(1, 0, 1, 1)]);
        }),
        None,
        &[0, 1],
        &[0, 1, -1, 0],
    );
    add(
        "REP_NOV_1",
        "e1∘e2 = e1, l(e1)v1 = v1",
        with(&|w| {
            w.circ = op(2, &[(0, 1, 0, 1)]);
            w.lrep = action(2, 2, &[(0, 0, 0, 1)]);
        }),
        None,
        &[0, 1, 0],
        &[1, 0],
    );
    add("REP_NOV_2", "r(e1)v1 = v1", with(&|w| w.rrep = action(2, 2, &[(0, 0, 0, 1)])), None, &[0, 0, 0], &[1, 0]);
    add(
        "REP_NOV_3",
        "e1∘e1 = e1, l(e1)v1 = v1",
        with(&|w| {
            w.circ = idem();
            w.lrep = action(2, 2, &[(0, 0, 0, 1)]);
        }),
        None,
        &[0, 0, 0],
        &[1, 0],
    );
    add(
        "REP_NOV_4",
        "r(e1)v1 = v2, r(e2)v2 = v1",
        with(&|w| w.rrep = action(2, 2, &[(0, 0, 1, 1), (1, 1, 0, 1)])),
        None,
        &[0, 1, 0],
        &[-1, 0],
    );
    add(
        "REP_ASSOC",
        "zero product, l(e1)v1 = v1",
        with(&|w| w.lrep = action(2, 2, &[(0, 0, 0, 1)])),
        None,
        &[0, 0, 0],
        &[-1, 0],
    );
    add(
        "REP_DIFF",
        "l(e1)v1 = v1, D = id, α = 0",
        with(&|w| {
            w.lrep = action(2, 2, &[(0, 0, 0, 1)]);
            w.d = LinMap::identity(2);
        }),
        None,
        &[0, 0],
        &[-1, 0],
    );
    add(
        "REP_ADM",
        "l(e1)v1 = v1, β = id",
        with(&|w| {
            w.lrep = action(2, 2, &[(0, 0, 0, 1)]);
            w.beta = LinMap::identity(2);
        }),
        None,
        &[0, 0],
        &[0, 0, 1, 0],
    );
    add("DEFORM_1", "f(e1, e2) = e1", with(&|w| w.f = op(2, &[(0, 1, 0, 1)])), None, &[0, 1, 1], &[1, 0]);
    add(
        "DEFORM_2",
        "f(e1, e2) = e1, e1∘e1 = e1",
        with(&|w| {
            w.f = op(2, &[(0, 1, 0, 1)]);
            w.circ = idem();
        }),
        None,
        &[0, 1, 0],
        &[-1, 0],
    );
    add("DEFORM_3", "f(e1, e1) = e2, f(e2, e2) = e1", with(&|w| w.f = swap_square()), None, &[0, 0, 1], &[1, 0]);
    add(
        "DEFORM_4",
        "f(e1, e1) = e1, e1∘e2 = e2",
        with(&|w| {
            w.f = idem();
            w.circ = op(2, &[(0, 1, 1, 1)]);
        }),
        None,
        &[0, 0, 1],
        &[0, 1],
    );
    add(
        "SPEC_DEF_5",
        "e1·e2 = e1, Q = id",
        with(&|w| {
            w.dot = op(2, &[(0, 1, 0, 1)]);
            w.q = LinMap::identity(2);
        }),
        None,
        &[0, 1, 1],
        &[1, 0],
    );
    add(
        "SPEC_DEF_6",
        "e1·e2 = e1, Q = D = id",
        with(&|w| {
            w.dot = op(2, &[(0, 1, 0, 1)]);
            w.q = LinMap::identity(2);
            w.d = LinMap::identity(2);
        }),
        None,
        &[0, 1, 1],
        &[1, 0],
    );
    add(
        "BIALG_Q_1",
        "e1·e1 = e1, δ(e1) = e1⊗e1, Q = id, at q = 1",
        with(&|w| {
            w.dot = idem();
            w.delta = co(2, &[(0, 0, 0, 1)]);
            w.q = LinMap::identity(2);
        }),
        Some(1),
        &[0, 0],
        &[-3, 0, 0, 0],
    );
    add(
        "BIALG_Q_2",
        "e2·e1 = e2, δ(e1) = e1⊗e1, Q = id, at q = 1",
        with(&|w| {
            w.dot = op(2, &[(1, 0, 1, 1)]);
            w.delta = co(2, &[(0, 0, 0, 1)]);
            w.q = LinMap::identity(2);
        }),
        Some(1),
        &[0, 1],
        &[0, 3, -3, 0],
    );
    add(
        "BIALG_Q_3",
        "e2·e1 = e2, δ(e1) = e1⊗e1, Q = id, at q = 1",
        with(&|w| {
            w.dot = op(2, &[(1, 0, 1, 1)]);
            w.delta = co(2, &[(0, 0, 0, 1)]);
            w.q = LinMap::identity(2);
        }),
        Some(1),
        &[0, 1],
        &[0, -3, 3, 0],
    );
    add("COND_A", "two-dimensional ASI example", exnov1(), None, &[0, 0], &[1, 0]);
    add("COND_B", "two-dimensional ASI example", exnov1(), None, &[1], &[0, 0, 0, 1]);
    add(
        "BILIN_INV_NOV",
        "e1∘e1 = e1, B = identity",
        with(&|w| {
            w.circ = idem();
            w.b = form(2, &[(0, 0, 1), (1, 1, 1)]);
        }),
        None,
        &[0, 0, 0],
        &[3],
    );
    add(
        "BILIN_INV_ASSOC",
        "e1·e2 = e1, B = identity",
        with(&|w| {
            w.dot = op(2, &[(0, 1, 0, 1)]);
            w.b = form(2, &[(0, 0, 1), (1, 1, 1)]);
        }),
        None,
        &[0, 0, 1],
        &[-1],
    );
    add("FORM_SYM", "B(e1, e2) = 1", with(&|w| w.b = form(2, &[(0, 1, 1)])), None, &[0, 1], &[1]);
    add(
        "AYBE",
        "two-dimensional ASI example, r = e1⊗e1",
        {
            let mut w = exnov1();
            w.r = form(2, &[(0, 0, 1)]);
            w
        },
        None,
        &[0, 0, 0],
        &[1],
    );
    add(
        "NYBE",
        "e1∘e1 = e1, r = e1⊗e1",
        with(&|w| {
            w.circ = idem();
            w.r = form(2, &[(0, 0, 1)]);
        }),
        None,
        &[0, 0, 0],
        &[4],
    );
    add(
        "R_ADMISS",
        "two-dimensional ASI example, r = e1⊗e1",
        {
            let mut w = exnov1();
            w.r = form(2, &[(0, 0, 1)]);
            w
        },
        None,
        &[0, 0, 0],
        &[-1],
    );
    add(
        "OOP_NOV",
        "T = id, e1∘e1 = e1, zero actions",
        with(&|w| {
            w.circ = idem();
            w.t = LinMap::identity(2);
        }),
        None,
        &[0, 0],
        &[1, 0],
    );
    add(
        "OOP_ASSOC",
        "two-dimensional ASI example, T = id on the regular module",
        {
            let mut w = exnov1();
            w.lrep = w.dot.clone();
            w.rrep = op(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
            w.t = LinMap::identity(2);
            w
        },
        None,
        &[0, 0],
        &[-1, 0],
    );
    add(
        "OOP_DT",
        "T = id, D = id, α = 0",
        with(&|w| {
            w.t = LinMap::identity(2);
            w.d = LinMap::identity(2);
        }),
        None,
        &[0],
        &[1, 0],
    );
    add(
        "OOP_QT",
        "T = id, Q = id, β = 0",
        with(&|w| {
            w.t = LinMap::identity(2);
            w.q = LinMap::identity(2);
        }),
        None,
        &[0],
        &[1, 0],
    );
    add("FORM_NONDEG", "B = e1*⊗e1*", with(&|w| w.b = form(2, &[(0, 0, 1)])), None, &[], &[0]);
    add("SUBALG_A", "A ⊕ A* with e1∘e1 = e1*", with(&|w| w.circ = op(2, &[(0, 0, 1, 1)])), None, &[0, 0], &[1]);
    add("SUBALG_DUAL", "A ⊕ A* with e1*∘e1* = e1", with(&|w| w.circ = op(2, &[(1, 1, 0, 1)])), None, &[1, 1], &[1]);
    out
}

/// Every catalog and special identifier, in catalog order.
pub fn all_ids() -> Vec<&'static str> {
    IDS.iter().chain(SPECIAL_IDS).copied().collect()
}
