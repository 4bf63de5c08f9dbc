use novikov_core::structures::Env;
use novikov_core::{BinOp, CoOp, LinMap, Poly, Rational, Ring, Tensor};

/// One binding for every catalog role, on a carrier `A` of dimension `n`
/// and a module or operator domain `V` of dimension `m`.
#[derive(Clone, Debug)]
pub struct World {
    pub n: usize,
    pub m: usize,
    pub dot: BinOp,
    pub circ: BinOp,
    pub diamond: BinOp,
    pub lhd: BinOp,
    pub rhd: BinOp,
    pub f: BinOp,
    pub lrep: BinOp,
    pub rrep: BinOp,
    pub d: LinMap,
    pub q: LinMap,
    pub t: LinMap,
    pub alpha: LinMap,
    pub beta: LinMap,
    pub delta: CoOp,
    pub cdelta: CoOp,
    pub b: Tensor,
    pub r: Tensor,
    pub ring: Ring,
}

impl World {
    pub fn env(&self) -> Env<'_> {
        Env::new(self.n)
            .space('V', self.m)
            .op("dot", &self.dot)
            .op("circ", &self.circ)
            .op("diamond", &self.diamond)
            .op("lhd", &self.lhd)
            .op("rhd", &self.rhd)
            .op("f", &self.f)
            .op("lrep", &self.lrep)
            .op("rrep", &self.rrep)
            .map("D", &self.d)
            .map("Q", &self.q)
            .map("T", &self.t)
            .map("alpha", &self.alpha)
            .map("beta", &self.beta)
            .coop("delta", &self.delta)
            .coop("Delta", &self.cdelta)
            .form("B", &self.b)
            .elem("r", &self.r)
            .ring(self.ring)
    }

    pub fn eval_q(&self, q0: &Rational) -> World {
        World {
            n: self.n,
            m: self.m,
            dot: self.dot.eval_q(q0),
            circ: self.circ.eval_q(q0),
            diamond: self.diamond.eval_q(q0),
            lhd: self.lhd.eval_q(q0),
            rhd: self.rhd.eval_q(q0),
            f: self.f.eval_q(q0),
            lrep: self.lrep.eval_q(q0),
            rrep: self.rrep.eval_q(q0),
            d: self.d.eval_q(q0),
            q: self.q.eval_q(q0),
            t: self.t.eval_q(q0),
            alpha: self.alpha.eval_q(q0),
            beta: self.beta.eval_q(q0),
            delta: self.delta.eval_q(q0),
            cdelta: self.cdelta.eval_q(q0),
            b: self.b.eval_q(q0),
            r: self.r.eval_q(q0),
            ring: Ring::Rational,
        }
    }

    /// Entries drawn in order from `next`, shapes fixed by `n` and `m`.
    pub fn from_entries(n: usize, m: usize, ring: Ring, mut next: impl FnMut() -> Poly) -> World {
        let mut op = |s: [usize; 3]| BinOp::from_fn(s, |_, _, _| next());
        let (dot, circ, diamond, lhd, rhd, f) =
            (op([n, n, n]), op([n, n, n]), op([n, n, n]), op([n, n, n]), op([n, n, n]), op([n, n, n]));
        let (lrep, rrep) = (op([n, m, m]), op([n, m, m]));
        let mut map = |c: usize, d: usize| LinMap::from_fn(c, d, |_, _| next());
        let (d, q, t, alpha, beta) = (map(n, n), map(n, n), map(n, m), map(m, m), map(m, m));
        let mut cop = || CoOp::from_fn([n, n, n], |_, _, _| next());
        let (delta, cdelta) = (cop(), cop());
        let mut t2 = || Tensor::from_fn(&[n, n], |_| next());
        let (b, r) = (t2(), t2());
        World { n, m, dot, circ, diamond, lhd, rhd, f, lrep, rrep, d, q, t, alpha, beta, delta, cdelta, b, r, ring }
    }

    /// How many entries [`World::from_entries`] draws.
    pub fn entry_count(n: usize, m: usize) -> usize {
        8 * n.pow(3) + 2 * n * m * m + 4 * n * n + n * m + 2 * m * m
    }
}
