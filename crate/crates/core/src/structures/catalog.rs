//! The axiom catalog. Each entry is a residual `LHS - RHS` that must vanish on
//! every tuple of basis vectors.
//!
//! Roles: products `dot`, `circ`, `diamond`, `lhd` (◁), `rhd` (▷), `f`, and the
//! module actions `lrep`, `rrep` of shape A×V→V; maps `D`, `Q`, `T` (V→A),
//! `alpha`, `beta`; coproducts `delta`, `Delta`; form `B`; element `r`.

use crate::error::{Error, Result};
use crate::exactcore::Poly;

use super::expr::*;

#[derive(Clone, Debug)]
pub struct Axiom {
    pub id: &'static str,
    /// Space of each input slot.
    pub spaces: Vec<char>,
    /// Residual components, concatenated per tuple.
    pub components: Vec<Expr>,
    pub summary: &'static str,
}

/// Every identifier accepted by [`axiom`], in catalog order.
pub const IDS: &[&str] = &[
    "NOV_LSYM",
    "NOV_RCOMM",
    "COMM",
    "ASSOC",
    "DERIV",
    "ADMISS",
    "ZINBIEL",
    "ZINB_ADMISS",
    "PRE_NOV_1",
    "PRE_NOV_2",
    "PRE_NOV_3",
    "PRE_NOV_4",
    "COASSOC",
    "COCOMM",
    "CODERIV",
    "CO_ADMISS",
    "NOV_COALG_1",
    "NOV_COALG_2",
    "ASI_1",
    "ASI_2",
    "NOV_BIALG_1",
    "NOV_BIALG_2",
    "NOV_BIALG_3",
    "REP_NOV_1",
    "REP_NOV_2",
    "REP_NOV_3",
    "REP_NOV_4",
    "REP_ASSOC",
    "REP_DIFF",
    "REP_ADM",
    "DEFORM_1",
    "DEFORM_2",
    "DEFORM_3",
    "DEFORM_4",
    "SPEC_DEF_5",
    "SPEC_DEF_6",
    "BIALG_Q_1",
    "BIALG_Q_2",
    "BIALG_Q_3",
    "COND_A",
    "COND_B",
    "BILIN_INV_NOV",
    "BILIN_INV_ASSOC",
    "FORM_SYM",
    "AYBE",
    "NYBE",
    "R_ADMISS",
    "OOP_NOV",
    "OOP_ASSOC",
    "OOP_DT",
    "OOP_QT",
];

/// Checks computed outside the expression evaluator (see `check`).
pub const SPECIAL_IDS: &[&str] = &["FORM_NONDEG", "SUBALG_A", "SUBALG_DUAL"];

fn ax(id: &'static str, spaces: &str, components: Vec<Expr>, summary: &'static str) -> Axiom {
    Axiom { id, spaces: spaces.chars().collect(), components, summary }
}

fn qp(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs)
}

/// Left symmetry of `op` as a residual.
fn lsym(op: &'static str) -> Expr {
    let (a, b, c) = (var(0), var(1), var(2));
    lin(vec![
        (1, bin(op, bin(op, a.clone(), b.clone()), c.clone())),
        (-1, bin(op, a.clone(), bin(op, b.clone(), c.clone()))),
        (-1, bin(op, bin(op, b.clone(), a.clone()), c.clone())),
        (1, bin(op, b, bin(op, a, c))),
    ])
}

fn rcomm(op: &'static str) -> Expr {
    let (a, b, c) = (var(0), var(1), var(2));
    lin(vec![(1, bin(op, bin(op, a.clone(), b.clone()), c.clone())), (-1, bin(op, bin(op, a, c), b))])
}

pub fn axiom(id: &str) -> Result<Axiom> {
    let (a, b, c) = (var(0), var(1), var(2));
    let ab = || (a.clone(), b.clone());
    Ok(match id {
        "NOV_LSYM" => ax("NOV_LSYM", "AAA", vec![lsym("circ")], "(a∘b)∘c - a∘(b∘c) = (b∘a)∘c - b∘(a∘c)"),
        "NOV_RCOMM" => ax("NOV_RCOMM", "AAA", vec![rcomm("circ")], "(a∘b)∘c = (a∘c)∘b"),
        "COMM" => ax(
            "COMM",
            "AA",
            vec![lin(vec![(1, bin("dot", a.clone(), b.clone())), (-1, bin("dot", b, a))])],
            "a·b = b·a",
        ),
        "ASSOC" => ax(
            "ASSOC",
            "AAA",
            vec![lin(vec![
                (1, bin("dot", bin("dot", a.clone(), b.clone()), c.clone())),
                (-1, bin("dot", a, bin("dot", b, c))),
            ])],
            "(a·b)·c = a·(b·c)",
        ),
        "DERIV" => ax(
            "DERIV",
            "AA",
            vec![lin(vec![
                (1, ap("D", bin("dot", a.clone(), b.clone()))),
                (-1, bin("dot", ap("D", a.clone()), b.clone())),
                (-1, bin("dot", a, ap("D", b))),
            ])],
            "D(a·b) = D(a)·b + a·D(b)",
        ),
        "ADMISS" => ax(
            "ADMISS",
            "AA",
            vec![lin(vec![
                (1, ap("Q", bin("dot", a.clone(), b.clone()))),
                (-1, bin("dot", ap("Q", a.clone()), b.clone())),
                (1, bin("dot", a, ap("D", b))),
            ])],
            "Q(a·b) = Q(a)·b - a·D(b)",
        ),
        "ZINBIEL" => ax(
            "ZINBIEL",
            "AAA",
            vec![lin(vec![
                (1, bin("diamond", a.clone(), bin("diamond", b.clone(), c.clone()))),
                (-1, bin("diamond", bin("diamond", b.clone(), a.clone()), c.clone())),
                (-1, bin("diamond", bin("diamond", a, b), c)),
            ])],
            "a⋄(b⋄c) = (b⋄a)⋄c + (a⋄b)⋄c",
        ),
        "ZINB_ADMISS" => {
            let (a, b) = ab();
            ax(
                "ZINB_ADMISS",
                "AA",
                vec![
                    lin(vec![
                        (1, ap("Q", bin("diamond", a.clone(), b.clone()))),
                        (-1, bin("diamond", ap("Q", a.clone()), b.clone())),
                        (1, bin("diamond", a.clone(), ap("D", b.clone()))),
                    ]),
                    lin(vec![
                        (1, ap("Q", bin("diamond", a.clone(), b.clone()))),
                        (-1, bin("diamond", a.clone(), ap("Q", b.clone()))),
                        (1, bin("diamond", ap("D", a), b)),
                    ]),
                ],
                "Q(a⋄b) = Q(a)⋄b - a⋄D(b) = a⋄Q(b) - D(a)⋄b",
            )
        }
        "PRE_NOV_1" => {
            let s = |x: &Expr, y: &Expr| {
                lin(vec![(1, bin("rhd", x.clone(), y.clone())), (1, bin("lhd", x.clone(), y.clone()))])
            };
            ax(
                "PRE_NOV_1",
                "AAA",
                vec![lin(vec![
                    (1, bin("rhd", a.clone(), bin("rhd", b.clone(), c.clone()))),
                    (-1, bin("rhd", s(&a, &b), c.clone())),
                    (-1, bin("rhd", b.clone(), bin("rhd", a.clone(), c.clone()))),
                    (1, bin("rhd", s(&b, &a), c.clone())),
                ])],
                "a▷(b▷c) = (a▷b + a◁b)▷c + b▷(a▷c) - (b▷a + b◁a)▷c",
            )
        }
        "PRE_NOV_2" => ax(
            "PRE_NOV_2",
            "AAA",
            vec![lin(vec![
                (1, bin("rhd", a.clone(), bin("lhd", b.clone(), c.clone()))),
                (-1, bin("lhd", bin("rhd", a.clone(), b.clone()), c.clone())),
                (-1, bin("lhd", b.clone(), bin("lhd", a.clone(), c.clone()))),
                (-1, bin("lhd", b.clone(), bin("rhd", a.clone(), c.clone()))),
                (1, bin("lhd", bin("lhd", b, a), c)),
            ])],
            "a▷(b◁c) = (a▷b)◁c + b◁(a◁c + a▷c) - (b◁a)◁c",
        ),
        "PRE_NOV_3" => ax(
            "PRE_NOV_3",
            "AAA",
            vec![lin(vec![
                (1, bin("rhd", bin("lhd", a.clone(), b.clone()), c.clone())),
                (1, bin("rhd", bin("rhd", a.clone(), b.clone()), c.clone())),
                (-1, bin("lhd", bin("rhd", a, c), b)),
            ])],
            "(a◁b + a▷b)▷c = (a▷c)◁b",
        ),
        "PRE_NOV_4" => ax("PRE_NOV_4", "AAA", vec![rcomm("lhd")], "(a◁b)◁c = (a◁c)◁b"),
        "COASSOC" => {
            let d = co("delta", 0, a.clone());
            ax(
                "COASSOC",
                "A",
                vec![lin(vec![(1, co("delta", 0, d.clone())), (-1, co("delta", 1, d))])],
                "(δ⊗id)δ = (id⊗δ)δ",
            )
        }
        "COCOMM" => {
            let d = co("delta", 0, a.clone());
            ax("COCOMM", "A", vec![lin(vec![(1, d.clone()), (-1, flip(d))])], "δ = τδ")
        }
        "CODERIV" => {
            let d = co("delta", 0, a.clone());
            ax(
                "CODERIV",
                "A",
                vec![lin(vec![
                    (1, co("delta", 0, ap("Q", a.clone()))),
                    (-1, map_leg("Q", 1, d.clone())),
                    (-1, map_leg("Q", 0, d)),
                ])],
                "δQ = (id⊗Q + Q⊗id)δ",
            )
        }
        "CO_ADMISS" => {
            let d = co("delta", 0, a.clone());
            ax(
                "CO_ADMISS",
                "A",
                vec![lin(vec![
                    (1, map_leg("D", 0, d.clone())),
                    (-1, map_leg("Q", 1, d)),
                    (-1, co("delta", 0, ap("D", a.clone()))),
                ])],
                "(D⊗id - id⊗Q)δ = δD",
            )
        }
        "NOV_COALG_1" => {
            let d = co("Delta", 0, a.clone());
            let right = co("Delta", 1, d.clone());
            let left = co("Delta", 0, d);
            let t12 = |x: Expr| permute(&[1, 0, 2], x);
            ax(
                "NOV_COALG_1",
                "A",
                vec![lin(vec![(1, right.clone()), (-1, t12(right)), (-1, left.clone()), (1, t12(left))])],
                "(id⊗Δ)Δ - (τ⊗id)(id⊗Δ)Δ = (Δ⊗id)Δ - (τ⊗id)(Δ⊗id)Δ",
            )
        }
        "NOV_COALG_2" => {
            let d = co("Delta", 0, a.clone());
            ax(
                "NOV_COALG_2",
                "A",
                vec![lin(vec![(1, permute(&[1, 0, 2], co("Delta", 1, flip(d.clone())))), (-1, co("Delta", 0, d))])],
                "(τ⊗id)(id⊗Δ)τΔ = (Δ⊗id)Δ",
            )
        }
        "ASI_1" => {
            let (da, db) = (co("delta", 0, a.clone()), co("delta", 0, b.clone()));
            ax(
                "ASI_1",
                "AA",
                vec![lin(vec![
                    (1, co("delta", 0, bin("dot", a.clone(), b.clone()))),
                    (-1, lmul_leg("dot", a, db, 1)),
                    (-1, rmul_leg("dot", da, 2, 0, b)),
                ])],
                "δ(a·b) = (id⊗L(a))δ(b) + (R(b)⊗id)δ(a)",
            )
        }
        "ASI_2" => {
            let part = |x: &Expr, y: &Expr| {
                let dx = co("delta", 0, x.clone());
                lin(vec![(1, lmul_leg("dot", y.clone(), dx.clone(), 0)), (-1, rmul_leg("dot", dx, 2, 1, y.clone()))])
            };
            ax(
                "ASI_2",
                "AA",
                vec![lin(vec![(1, part(&a, &b)), (1, flip(part(&b, &a)))])],
                "(L(b)⊗id - id⊗R(b))δ(a) + τ(L(a)⊗id - id⊗R(a))δ(b) = 0",
            )
        }
        "NOV_BIALG_1" => {
            let (da, db) = (co("Delta", 0, a.clone()), co("Delta", 0, b.clone()));
            let sym_b = lin(vec![(1, db.clone()), (1, flip(db))]);
            ax(
                "NOV_BIALG_1",
                "AA",
                vec![lin(vec![
                    (1, co("Delta", 0, bin("circ", a.clone(), b.clone()))),
                    (-1, rmul_leg("circ", da, 2, 0, b)),
                    (-1, lstar_leg("circ", a, sym_b, 2, 1)),
                ])],
                "Δ(a∘b) = (R(b)⊗id)Δ(a) + (id⊗L⋆(a))(Δ(b) + τΔ(b))",
            )
        }
        "NOV_BIALG_2" => {
            let side = |x: &Expr, y: &Expr| {
                let dy = co("Delta", 0, y.clone());
                lin(vec![
                    (1, lstar_leg("circ", x.clone(), dy.clone(), 2, 0)),
                    (-1, lstar_leg("circ", x.clone(), flip(dy), 2, 1)),
                ])
            };
            ax(
                "NOV_BIALG_2",
                "AA",
                vec![lin(vec![(1, side(&a, &b)), (-1, side(&b, &a))])],
                "(L⋆(a)⊗id)Δ(b) - (id⊗L⋆(a))τΔ(b) = (L⋆(b)⊗id)Δ(a) - (id⊗L⋆(b))τΔ(a)",
            )
        }
        "NOV_BIALG_3" => {
            let side = |x: &Expr, y: &Expr| {
                let dy = co("Delta", 0, y.clone());
                let s = lin(vec![(1, dy.clone()), (1, flip(dy))]);
                lin(vec![(1, rmul_leg("circ", s.clone(), 2, 1, x.clone())), (-1, rmul_leg("circ", s, 2, 0, x.clone()))])
            };
            ax(
                "NOV_BIALG_3",
                "AA",
                vec![lin(vec![(1, side(&a, &b)), (-1, side(&b, &a))])],
                "(id⊗R(a) - R(a)⊗id)(Δ(b)+τΔ(b)) = (id⊗R(b) - R(b)⊗id)(Δ(a)+τΔ(a))",
            )
        }
        "REP_NOV_1" => {
            let v = var(2);
            let comm = lin(vec![(1, bin("circ", a.clone(), b.clone())), (-1, bin("circ", b.clone(), a.clone()))]);
            ax(
                "REP_NOV_1",
                "AAV",
                vec![lin(vec![
                    (1, bin("lrep", comm, v.clone())),
                    (-1, bin("lrep", a.clone(), bin("lrep", b.clone(), v.clone()))),
                    (1, bin("lrep", b, bin("lrep", a, v))),
                ])],
                "l(a∘b - b∘a)v = l(a)l(b)v - l(b)l(a)v",
            )
        }
        "REP_NOV_2" => {
            let v = var(2);
            ax(
                "REP_NOV_2",
                "AAV",
                vec![lin(vec![
                    (1, bin("lrep", a.clone(), bin("rrep", b.clone(), v.clone()))),
                    (-1, bin("rrep", b.clone(), bin("lrep", a.clone(), v.clone()))),
                    (-1, bin("rrep", bin("circ", a.clone(), b.clone()), v.clone())),
                    (1, bin("rrep", b, bin("rrep", a, v))),
                ])],
                "l(a)r(b)v - r(b)l(a)v = r(a∘b)v - r(b)r(a)v",
            )
        }
        "REP_NOV_3" => {
            let v = var(2);
            ax(
                "REP_NOV_3",
                "AAV",
                vec![lin(vec![
                    (1, bin("lrep", bin("circ", a.clone(), b.clone()), v.clone())),
                    (-1, bin("rrep", b, bin("lrep", a, v))),
                ])],
                "l(a∘b)v = r(b)l(a)v",
            )
        }
        "REP_NOV_4" => {
            let v = var(2);
            ax(
                "REP_NOV_4",
                "AAV",
                vec![lin(vec![
                    (1, bin("rrep", a.clone(), bin("rrep", b.clone(), v.clone()))),
                    (-1, bin("rrep", b, bin("rrep", a, v))),
                ])],
                "r(a)r(b)v = r(b)r(a)v",
            )
        }
        "REP_ASSOC" => {
            let v = var(2);
            ax(
                "REP_ASSOC",
                "AAV",
                vec![lin(vec![
                    (1, bin("lrep", bin("dot", a.clone(), b.clone()), v.clone())),
                    (-1, bin("lrep", a, bin("lrep", b, v))),
                ])],
                "l(a·b)v = l(a)l(b)v",
            )
        }
        "REP_DIFF" => {
            let v = var(1);
            ax(
                "REP_DIFF",
                "AV",
                vec![lin(vec![
                    (1, ap("alpha", bin("lrep", a.clone(), v.clone()))),
                    (-1, bin("lrep", ap("D", a.clone()), v.clone())),
                    (-1, bin("lrep", a, ap("alpha", v))),
                ])],
                "α(l(a)v) = l(D(a))v + l(a)α(v)",
            )
        }
        "REP_ADM" => {
            let v = var(1);
            let blv = ap("beta", bin("lrep", a.clone(), v.clone()));
            ax(
                "REP_ADM",
                "AV",
                vec![
                    lin(vec![
                        (1, blv.clone()),
                        (-1, bin("lrep", a.clone(), ap("beta", v.clone()))),
                        (1, bin("lrep", ap("D", a.clone()), v.clone())),
                    ]),
                    lin(vec![
                        (1, blv),
                        (-1, bin("lrep", ap("Q", a.clone()), v.clone())),
                        (1, bin("lrep", a, ap("alpha", v))),
                    ]),
                ],
                "β(l(a)v) = l(a)β(v) - l(D(a))v = l(Q(a))v - l(a)α(v)",
            )
        }
        "DEFORM_1" => ax("DEFORM_1", "AAA", vec![lsym("f")], "f(f(a,b),c) - f(a,f(b,c)) = f(f(b,a),c) - f(b,f(a,c))"),
        "DEFORM_2" => {
            let f = |x: Expr, y: Expr| bin("f", x, y);
            let o = |x: Expr, y: Expr| bin("circ", x, y);
            ax(
                "DEFORM_2",
                "AAA",
                vec![lin(vec![
                    (1, f(a.clone(), o(b.clone(), c.clone()))),
                    (-1, f(o(a.clone(), b.clone()), c.clone())),
                    (1, f(o(b.clone(), a.clone()), c.clone())),
                    (-1, f(b.clone(), o(a.clone(), c.clone()))),
                    (1, o(a.clone(), f(b.clone(), c.clone()))),
                    (-1, o(f(a.clone(), b.clone()), c.clone())),
                    (1, o(f(b.clone(), a.clone()), c.clone())),
                    (-1, o(b, f(a, c))),
                ])],
                "mixed deformation identity between f and ∘",
            )
        }
        "DEFORM_3" => ax("DEFORM_3", "AAA", vec![rcomm("f")], "f(f(a,b),c) = f(f(a,c),b)"),
        "DEFORM_4" => {
            let f = |x: Expr, y: Expr| bin("f", x, y);
            let o = |x: Expr, y: Expr| bin("circ", x, y);
            ax(
                "DEFORM_4",
                "AAA",
                vec![lin(vec![
                    (1, o(f(a.clone(), b.clone()), c.clone())),
                    (-1, o(f(a.clone(), c.clone()), b.clone())),
                    (1, f(o(a.clone(), b.clone()), c.clone())),
                    (-1, f(o(a, c), b)),
                ])],
                "f(a,b)∘c - f(a,c)∘b + f(a∘b,c) - f(a∘c,b) = 0",
            )
        }
        "SPEC_DEF_5" | "SPEC_DEF_6" => {
            let last: &'static str = if id == "SPEC_DEF_5" { "Q" } else { "D" };
            let d = |x: Expr, y: Expr| bin("dot", x, y);
            let side = |x: &Expr, y: &Expr| {
                lin(vec![
                    (1, d(d(x.clone(), ap("Q", y.clone())), ap(last, c.clone()))),
                    (-1, d(x.clone(), ap("Q", d(y.clone(), ap(last, c.clone()))))),
                ])
            };
            let id: &'static str = if last == "Q" { "SPEC_DEF_5" } else { "SPEC_DEF_6" };
            ax(
                id,
                "AAA",
                vec![lin(vec![(1, side(&a, &b)), (-1, side(&b, &a))])],
                if last == "Q" {
                    "(a·Q(b))·Q(c) - a·Q(b·Q(c)) is symmetric in a, b"
                } else {
                    "(a·Q(b))·D(c) - a·Q(b·D(c)) is symmetric in a, b"
                },
            )
        }
        "BIALG_Q_1" => bialg_q_1(),
        "BIALG_Q_2" => {
            let dpq = |x: &Expr| lin(vec![(1, ap("D", x.clone())), (1, ap("Q", x.clone()))]);
            let qqd = |leg: usize, t: Expr| maps_leg(&[(Poly::one(), "Q"), (Poly::q(), "D")], leg, t);
            let side = |x: &Expr, y: &Expr| {
                let dy = co("delta", 0, y.clone());
                lin(vec![
                    (1, lmul_leg("dot", dpq(x), qqd(1, dy.clone()), 0)),
                    (-1, lmul_leg("dot", dpq(x), qqd(0, dy), 1)),
                ])
            };
            ax(
                "BIALG_Q_2",
                "AA",
                vec![sum(vec![(qp(&[1, 2]), side(&a, &b)), (qp(&[-1, -2]), side(&b, &a))])],
                "second compatibility residual of the induced pair",
            )
        }
        "BIALG_Q_3" => {
            let dqq = |x: &Expr| sum(vec![(Poly::one(), ap("D", x.clone())), (Poly::q(), ap("Q", x.clone()))]);
            let side = |x: &Expr, y: &Expr| {
                let t = maps_leg(&[(Poly::one(), "D"), (Poly::one(), "Q")], 1, co("delta", 0, y.clone()));
                lin(vec![(1, lmul_leg("dot", dqq(x), t.clone(), 1)), (-1, lmul_leg("dot", dqq(x), t, 0))])
            };
            ax(
                "BIALG_Q_3",
                "AA",
                vec![sum(vec![(qp(&[1, 2]), side(&a, &b)), (qp(&[-1, -2]), side(&b, &a))])],
                "third compatibility residual of the induced pair",
            )
        }
        "COND_A" => ax(
            "COND_A",
            "AA",
            vec![lin(vec![(1, bin("dot", a.clone(), ap("Q", b.clone()))), (1, bin("dot", a, ap("D", b)))])],
            "a·Q(b) = -a·D(b)",
        ),
        "COND_B" => {
            let d = co("delta", 0, a.clone());
            ax(
                "COND_B",
                "A",
                vec![lin(vec![(1, map_leg("Q", 1, d.clone())), (1, map_leg("D", 1, d))])],
                "(id⊗Q)δ = -(id⊗D)δ",
            )
        }
        "BILIN_INV_NOV" => ax(
            "BILIN_INV_NOV",
            "AAA",
            vec![lin(vec![
                (1, pair("B", bin("circ", a.clone(), b.clone()), c.clone())),
                (1, pair("B", b.clone(), bin("circ", a.clone(), c.clone()))),
                (1, pair("B", b, bin("circ", c, a))),
            ])],
            "B(a∘b, c) = -B(b, a⋆c)",
        ),
        "BILIN_INV_ASSOC" => ax(
            "BILIN_INV_ASSOC",
            "AAA",
            vec![lin(vec![
                (1, pair("B", bin("dot", a.clone(), b.clone()), c.clone())),
                (-1, pair("B", a, bin("dot", b, c))),
            ])],
            "B(a·b, c) = B(a, b·c)",
        ),
        "FORM_SYM" => ax(
            "FORM_SYM",
            "AA",
            vec![lin(vec![(1, pair("B", a.clone(), b.clone())), (-1, pair("B", b, a))])],
            "B(a, b) = B(b, a)",
        ),
        "AYBE" => {
            let rr = outer(elem("r"), elem("r"));
            ax(
                "AYBE",
                "",
                vec![lin(vec![
                    (1, permute(&[0, 2, 1], mul("dot", 0, 2, 0, rr.clone()))),
                    (1, mul("dot", 1, 3, 2, rr.clone())),
                    (-1, mul("dot", 1, 2, 1, rr)),
                ])],
                "r13·r12 + r13·r23 - r12·r23 = 0",
            )
        }
        "NYBE" => {
            let rr = outer(elem("r"), elem("r"));
            ax(
                "NYBE",
                "",
                vec![lin(vec![
                    (1, mul("circ", 1, 3, 2, rr.clone())),
                    (1, mul("circ", 1, 2, 1, rr.clone())),
                    (1, mul("circ", 2, 1, 1, rr.clone())),
                    (1, permute(&[0, 2, 1], mul("circ", 0, 2, 0, rr))),
                ])],
                "r13∘r23 + r12⋆r23 + r13∘r12 = 0",
            )
        }
        "R_ADMISS" => {
            let r = elem("r");
            ax(
                "R_ADMISS",
                "",
                vec![
                    lin(vec![(1, map_leg("D", 0, r.clone())), (-1, map_leg("Q", 1, r.clone()))]),
                    lin(vec![(1, map_leg("D", 1, r.clone())), (-1, map_leg("Q", 0, r))]),
                ],
                "(D⊗id - id⊗Q)r = 0 and (id⊗D - Q⊗id)r = 0",
            )
        }
        "OOP_NOV" => {
            let (u, v) = (var(0), var(1));
            let t = |x: Expr| ap("T", x);
            ax(
                "OOP_NOV",
                "VV",
                vec![lin(vec![
                    (1, bin("circ", t(u.clone()), t(v.clone()))),
                    (-1, t(bin("lrep", t(u.clone()), v.clone()))),
                    (-1, t(bin("rrep", t(v), u))),
                ])],
                "T(u)∘T(v) = T(l(T(u))v) + T(r(T(v))u)",
            )
        }
        "OOP_ASSOC" => {
            let (u, v) = (var(0), var(1));
            let t = |x: Expr| ap("T", x);
            ax(
                "OOP_ASSOC",
                "VV",
                vec![lin(vec![
                    (1, bin("dot", t(u.clone()), t(v.clone()))),
                    (-1, t(bin("lrep", t(u.clone()), v.clone()))),
                    (-1, t(bin("lrep", t(v), u))),
                ])],
                "T(u)·T(v) = T(l(T(u))v + l(T(v))u)",
            )
        }
        "OOP_DT" | "OOP_QT" => {
            let (m, w, id): (&'static str, &'static str, &'static str) =
                if id == "OOP_DT" { ("D", "alpha", "OOP_DT") } else { ("Q", "beta", "OOP_QT") };
            let u = var(0);
            ax(
                id,
                "V",
                vec![lin(vec![(1, ap(m, ap("T", u.clone()))), (-1, ap("T", ap(w, u)))])],
                if m == "D" { "D T = T α" } else { "Q T = T β" },
            )
        }
        _ => return Err(Error::UnknownAxiom(id.to_string())),
    })
}

fn bialg_q_1() -> Axiom {
    let (a, b) = (var(0), var(1));
    let p = co("delta", 0, a);
    let one = Poly::one();
    // (Q+D) on the second leg of δ(a), then further maps
    let qd = |t: Expr| maps_leg(&[(one.clone(), "Q"), (one.clone(), "D")], 1, t);
    let on2 = |role: &'static str, t: Expr| map_leg(role, 1, t);
    let db = ap("D", b.clone());
    let dqb = lin(vec![(1, ap("D", b.clone())), (1, ap("Q", b.clone()))]);
    let terms = vec![
        (qp(&[-1, -1, 1]), lmul_leg("dot", db.clone(), qd(p.clone()), 1)),
        (qp(&[-1]), lmul_leg("dot", dqb, on2("Q", p.clone()), 1)),
        (qp(&[0, 0, 1]), lmul_leg("dot", db, on2("Q", p.clone()), 1)),
        (qp(&[0, 0, -1]), rmul_leg("dot", on2("D", p.clone()), 2, 1, ap("Q", b.clone()))),
        (qp(&[-1, -2, 1]), lmul_leg("dot", b.clone(), on2("D", qd(p.clone())), 1)),
        (qp(&[0, -1, 1]), lmul_leg("dot", b.clone(), on2("D", on2("Q", p.clone())), 1)),
        (qp(&[0, 1, -1]), lmul_leg("dot", b.clone(), on2("Q", on2("D", p.clone())), 1)),
        (qp(&[0, -2]), lmul_leg("dot", b.clone(), on2("Q", qd(p.clone())), 1)),
        (qp(&[1, 1, -2]), lmul_leg("dot", b, qd(map_leg("D", 0, p)), 1)),
    ];
    ax("BIALG_Q_1", "AA", vec![sum(terms)], "first compatibility residual of the induced pair")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_resolves_and_unknown_is_typed() {
        for id in IDS {
            let a = axiom(id).unwrap();
            assert_eq!(&a.id, id);
            assert!(!a.components.is_empty());
        }
        assert!(matches!(axiom("NOPE"), Err(Error::UnknownAxiom(_))));
    }
}
