//! Dense tensors with polynomial entries and the structure-constant wrappers.
//!
//! Storage is row-major over `dims`. Every operation scatters from the nonzero
//! entries of its input, so the dense layout costs little on sparse data.

use std::fmt;

use super::poly::{Poly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    dims: Vec<usize>,
    data: Vec<Poly>,
}

fn mismatch(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}

impl Tensor {
    pub fn zeros(dims: &[usize]) -> Self {
        let len = dims.iter().product();
        Tensor { dims: dims.to_vec(), data: vec![Poly::zero(); len] }
    }

    /// An order-0 tensor holding one value.
    pub fn scalar(p: Poly) -> Self {
        Tensor { dims: Vec::new(), data: vec![p] }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut t = Tensor::zeros(&[n]);
        t.data[i] = Poly::one();
        t
    }

    pub fn from_data(dims: &[usize], data: Vec<Poly>) -> Result<Self> {
        if dims.iter().product::<usize>() != data.len() {
            return Err(mismatch(format!("{} entries for dims {dims:?}", data.len())));
        }
        Ok(Tensor { dims: dims.to_vec(), data })
    }

    pub fn from_fn(dims: &[usize], mut f: impl FnMut(&[usize]) -> Poly) -> Self {
        let mut t = Tensor::zeros(dims);
        for flat in 0..t.data.len() {
            let idx = t.unravel(flat);
            t.data[flat] = f(&idx);
        }
        t
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Poly] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Poly> {
        self.data
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut flat = 0;
        for (i, d) in idx.iter().zip(&self.dims) {
            debug_assert!(i < d);
            flat = flat * d + i;
        }
        flat
    }

    pub fn unravel(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            idx[k] = flat % self.dims[k];
            flat /= self.dims[k];
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &Poly {
        &self.data[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Poly) {
        let f = self.flat_index(idx);
        self.data[f] = value;
    }

    pub fn add_at(&mut self, idx: &[usize], value: &Poly) {
        let f = self.flat_index(idx);
        self.data[f] += value;
    }

    /// Nonzero entries with their multi-indices, in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &Poly)> + '_ {
        self.data.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(f, p)| (self.unravel(f), p))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    /// Largest q-degree among the entries; `None` when all vanish.
    pub fn max_degree(&self) -> Option<usize> {
        self.data.iter().filter_map(Poly::degree).max()
    }

    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly) -> Tensor {
        Tensor { dims: self.dims.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn eval_q(&self, q0: &Rational) -> Tensor {
        self.map_entries(|p| Poly::constant(p.eval(q0)))
    }

    /// Substitutes `q := param` in every entry.
    pub fn compose(&self, param: &Poly) -> Tensor {
        if *param == Poly::q() {
            return self.clone();
        }
        self.map_entries(|p| p.compose(param))
    }

    pub fn scale(&self, c: &Poly) -> Tensor {
        if c.is_one() {
            return self.clone();
        }
        self.map_entries(|p| p * c)
    }

    fn zip_with(&self, other: &Tensor, neg: bool) -> Result<Tensor> {
        if self.dims != other.dims {
            return Err(mismatch(format!("{:?} vs {:?}", self.dims, other.dims)));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| if neg { a - b } else { a + b }).collect();
        Ok(Tensor { dims: self.dims.clone(), data })
    }

    pub fn try_add(&self, other: &Tensor) -> Result<Tensor> {
        self.zip_with(other, false)
    }

    pub fn try_sub(&self, other: &Tensor) -> Result<Tensor> {
        self.zip_with(other, true)
    }

    pub fn neg(&self) -> Tensor {
        self.map_entries(|p| -p)
    }

    pub fn outer(a: &Tensor, b: &Tensor) -> Tensor {
        let mut dims = a.dims.clone();
        dims.extend_from_slice(&b.dims);
        let mut out = Tensor::zeros(&dims);
        let blen = b.data.len();
        for (i, x) in a.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.data.iter().enumerate() {
                if !y.is_zero() {
                    out.data[i * blen + j] = x * y;
                }
            }
        }
        out
    }

    /// Leg `i` of the result is leg `perm[i]` of the input.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(mismatch(format!("{perm:?} is not a permutation of {n} legs")));
        }
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zeros(&dims);
        let mut oidx = vec![0; n];
        for (idx, v) in self.nonzeros() {
            for i in 0..n {
                oidx[i] = idx[perm[i]];
            }
            out.set(&oidx, v.clone());
        }
        Ok(out)
    }

    /// The flip τ on an order-2 tensor.
    pub fn flip(&self) -> Result<Tensor> {
        if self.order() != 2 {
            return Err(mismatch("flip needs an order-2 tensor"));
        }
        self.permute(&[1, 0])
    }

    fn check_leg(&self, leg: usize) -> Result<()> {
        if leg >= self.order() {
            return Err(mismatch(format!("leg {leg} of an order-{} tensor", self.order())));
        }
        Ok(())
    }

    /// Applies `m` to one leg.
    pub fn apply_map(&self, m: &LinMap, leg: usize) -> Result<Tensor> {
        self.check_leg(leg)?;
        if m.dom() != self.dims[leg] {
            return Err(mismatch(format!("map with domain {} on a leg of size {}", m.dom(), self.dims[leg])));
        }
        let mut dims = self.dims.clone();
        dims[leg] = m.cod();
        let mut out = Tensor::zeros(&dims);
        for (mut idx, v) in self.nonzeros() {
            let j = idx[leg];
            for i in 0..m.cod() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    idx[leg] = i;
                    out.add_at(&idx, &(v * c));
                }
            }
        }
        Ok(out)
    }

    /// Multiplies leg `left` into leg `right` with `op`; both legs are removed
    /// and the product leg is inserted at position `at` among the rest.
    pub fn mul_legs(&self, op: &BinOp, left: usize, right: usize, at: usize) -> Result<Tensor> {
        self.check_leg(left)?;
        self.check_leg(right)?;
        if left == right {
            return Err(mismatch("a product needs two distinct legs"));
        }
        let [dl, dr, dout] = op.shape();
        if self.dims[left] != dl || self.dims[right] != dr {
            return Err(mismatch(format!(
                "product of shape {dl}x{dr} on legs of size {}x{}",
                self.dims[left], self.dims[right]
            )));
        }
        let rest: Vec<usize> = (0..self.order()).filter(|&k| k != left && k != right).collect();
        if at > rest.len() {
            return Err(mismatch(format!("insertion point {at} past {} legs", rest.len())));
        }
        let mut dims: Vec<usize> = rest.iter().map(|&k| self.dims[k]).collect();
        dims.insert(at, dout);
        let mut out = Tensor::zeros(&dims);
        let mut oidx = vec![0; dims.len()];
        for (idx, v) in self.nonzeros() {
            let (i, j) = (idx[left], idx[right]);
            for (pos, &k) in rest.iter().enumerate() {
                oidx[if pos < at { pos } else { pos + 1 }] = idx[k];
            }
            for k in 0..dout {
                let c = op.get(i, j, k);
                if !c.is_zero() {
                    oidx[at] = k;
                    out.add_at(&oidx, &(v * c));
                }
            }
        }
        Ok(out)
    }

    /// Replaces leg `leg` by the two output legs of `co`, in place.
    pub fn split_leg(&self, co: &CoOp, leg: usize) -> Result<Tensor> {
        self.check_leg(leg)?;
        let [din, d1, d2] = co.shape();
        if self.dims[leg] != din {
            return Err(mismatch(format!("coproduct on {din} applied to a leg of size {}", self.dims[leg])));
        }
        let mut dims = self.dims.clone();
        dims.splice(leg..=leg, [d1, d2]);
        let mut out = Tensor::zeros(&dims);
        let mut oidx = vec![0; dims.len()];
        for (idx, v) in self.nonzeros() {
            let i = idx[leg];
            oidx[..leg].copy_from_slice(&idx[..leg]);
            oidx[leg + 2..].copy_from_slice(&idx[leg + 1..]);
            for j in 0..d1 {
                for k in 0..d2 {
                    let c = co.get(i, j, k);
                    if !c.is_zero() {
                        oidx[leg] = j;
                        oidx[leg + 1] = k;
                        out.add_at(&oidx, &(v * c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Contracts legs `left` and `right` with a bilinear form.
    pub fn pair_legs(&self, form: &Tensor, left: usize, right: usize) -> Result<Tensor> {
        self.check_leg(left)?;
        self.check_leg(right)?;
        if left == right || form.order() != 2 {
            return Err(mismatch("pairing needs two legs and an order-2 form"));
        }
        if form.dims != [self.dims[left], self.dims[right]] {
            return Err(mismatch(format!("form {:?} on legs {}x{}", form.dims, self.dims[left], self.dims[right])));
        }
        let rest: Vec<usize> = (0..self.order()).filter(|&k| k != left && k != right).collect();
        let dims: Vec<usize> = rest.iter().map(|&k| self.dims[k]).collect();
        let mut out = Tensor::zeros(&dims);
        let mut oidx = vec![0; dims.len()];
        for (idx, v) in self.nonzeros() {
            let c = form.get(&[idx[left], idx[right]]);
            if c.is_zero() {
                continue;
            }
            for (pos, &k) in rest.iter().enumerate() {
                oidx[pos] = idx[k];
            }
            out.add_at(&oidx, &(v * c));
        }
        Ok(out)
    }

    /// Embeds into a larger tensor, shifting each leg by `offsets`.
    pub fn embed(&self, dims: &[usize], offsets: &[usize]) -> Result<Tensor> {
        if dims.len() != self.order() || offsets.len() != self.order() {
            return Err(mismatch("embedding order"));
        }
        for k in 0..self.order() {
            if offsets[k] + self.dims[k] > dims[k] {
                return Err(mismatch(format!("leg {k} does not fit")));
            }
        }
        let mut out = Tensor::zeros(dims);
        for (idx, v) in self.nonzeros() {
            let oidx: Vec<usize> = idx.iter().zip(offsets).map(|(i, o)| i + o).collect();
            out.set(&oidx, v.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, v) in self.nonzeros() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{idx:?}: {v}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A linear map as a `cod × dom` matrix; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    m: Tensor,
}

impl LinMap {
    pub fn zero(cod: usize, dom: usize) -> Self {
        LinMap { m: Tensor::zeros(&[cod, dom]) }
    }

    pub fn identity(n: usize) -> Self {
        LinMap::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn from_fn(cod: usize, dom: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        LinMap { m: Tensor::from_fn(&[cod, dom], |ix| f(ix[0], ix[1])) }
    }

    pub fn from_tensor(m: Tensor) -> Result<Self> {
        if m.order() != 2 {
            return Err(mismatch("a linear map needs an order-2 tensor"));
        }
        Ok(LinMap { m })
    }

    /// Images of basis vectors given as sparse `(j, i, coef)`: `e_j ↦ coef·e_i + …`.
    pub fn from_images(n: usize, images: &[(usize, usize, Poly)]) -> Self {
        let mut m = LinMap::zero(n, n);
        for (j, i, c) in images {
            m.m.add_at(&[*i, *j], c);
        }
        m
    }

    pub fn tensor(&self) -> &Tensor {
        &self.m
    }

    pub fn cod(&self) -> usize {
        self.m.dims()[0]
    }

    pub fn dom(&self) -> usize {
        self.m.dims()[1]
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        self.m.get(&[row, col])
    }

    pub fn set(&mut self, row: usize, col: usize, v: Poly) {
        self.m.set(&[row, col], v);
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap> {
        if self.dom() != other.cod() {
            return Err(mismatch(format!(
                "compose {}x{} after {}x{}",
                self.cod(),
                self.dom(),
                other.cod(),
                other.dom()
            )));
        }
        let mut out = LinMap::zero(self.cod(), other.dom());
        for (ix, v) in other.m.nonzeros() {
            let (k, j) = (ix[0], ix[1]);
            for i in 0..self.cod() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    out.m.add_at(&[i, j], &(a * v));
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &LinMap) -> Result<LinMap> {
        Ok(LinMap { m: self.m.try_add(&other.m)? })
    }

    pub fn try_sub(&self, other: &LinMap) -> Result<LinMap> {
        Ok(LinMap { m: self.m.try_sub(&other.m)? })
    }

    pub fn scale(&self, c: &Poly) -> LinMap {
        LinMap { m: self.m.scale(c) }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &Poly, other: &LinMap, b: &Poly) -> Result<LinMap> {
        self.scale(a).try_add(&other.scale(b))
    }

    pub fn transpose(&self) -> LinMap {
        LinMap { m: self.m.flip().expect("order 2") }
    }

    pub fn apply(&self, v: &Tensor) -> Result<Tensor> {
        v.apply_map(self, 0)
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &LinMap) -> LinMap {
        let (c1, d1) = (self.cod(), self.dom());
        let mut out = LinMap::zero(c1 + other.cod(), d1 + other.dom());
        for (ix, v) in self.m.nonzeros() {
            out.set(ix[0], ix[1], v.clone());
        }
        for (ix, v) in other.m.nonzeros() {
            out.set(c1 + ix[0], d1 + ix[1], v.clone());
        }
        out
    }

    pub fn eval_q(&self, q0: &Rational) -> LinMap {
        LinMap { m: self.m.eval_q(q0) }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }
}

/// Structure constants `c[i][j][k]`: coefficient of `e_k` in `e_i * e_j`.
/// Left and right factors may live in different spaces (module actions).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinOp {
    c: Tensor,
}

impl BinOp {
    pub fn zero(n: usize) -> Self {
        BinOp { c: Tensor::zeros(&[n, n, n]) }
    }

    pub fn zero_shaped(left: usize, right: usize, out: usize) -> Self {
        BinOp { c: Tensor::zeros(&[left, right, out]) }
    }

    pub fn from_tensor(c: Tensor) -> Result<Self> {
        if c.order() != 3 {
            return Err(mismatch("structure constants need an order-3 tensor"));
        }
        Ok(BinOp { c })
    }

    pub fn from_fn(shape: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Poly) -> Self {
        BinOp { c: Tensor::from_fn(&shape, |ix| f(ix[0], ix[1], ix[2])) }
    }

    /// Sparse table entries `(i, j, k, coef)`: `e_i * e_j ∋ coef·e_k`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, Poly)]) -> Self {
        let mut op = BinOp::zero(n);
        for (i, j, k, c) in entries {
            op.c.add_at(&[*i, *j, *k], c);
        }
        op
    }

    pub fn tensor(&self) -> &Tensor {
        &self.c
    }

    pub fn shape(&self) -> [usize; 3] {
        let d = self.c.dims();
        [d[0], d[1], d[2]]
    }

    /// Dimension of the carrier when all three legs agree.
    pub fn dim(&self) -> Option<usize> {
        let [a, b, c] = self.shape();
        (a == b && b == c).then_some(a)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Poly {
        self.c.get(&[i, j, k])
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Poly) {
        self.c.set(&[i, j, k], v);
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Poly) {
        self.c.add_at(&[i, j, k], v);
    }

    /// `e_i * e_j` as a vector.
    pub fn product(&self, i: usize, j: usize) -> Tensor {
        let n = self.shape()[2];
        Tensor::from_fn(&[n], |ix| self.get(i, j, ix[0]).clone())
    }

    /// `x * y` for arbitrary vectors.
    pub fn apply(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        Tensor::outer(x, y).mul_legs(self, 0, 1, 0)
    }

    /// Left multiplication `L(e_i)` as a map on the right factor's space.
    pub fn left_mult(&self, i: usize) -> LinMap {
        let [_, r, o] = self.shape();
        LinMap::from_fn(o, r, |k, j| self.get(i, j, k).clone())
    }

    /// Right multiplication `R(e_j)`: `x ↦ x * e_j`.
    pub fn right_mult(&self, j: usize) -> LinMap {
        let [l, _, o] = self.shape();
        LinMap::from_fn(o, l, |k, i| self.get(i, j, k).clone())
    }

    pub fn try_add(&self, other: &BinOp) -> Result<BinOp> {
        Ok(BinOp { c: self.c.try_add(&other.c)? })
    }

    pub fn try_sub(&self, other: &BinOp) -> Result<BinOp> {
        Ok(BinOp { c: self.c.try_sub(&other.c)? })
    }

    pub fn scale(&self, s: &Poly) -> BinOp {
        BinOp { c: self.c.scale(s) }
    }

    /// The opposite product `x *' y = y * x`.
    pub fn opposite(&self) -> BinOp {
        BinOp { c: self.c.permute(&[1, 0, 2]).expect("order 3") }
    }

    pub fn eval_q(&self, q0: &Rational) -> BinOp {
        BinOp { c: self.c.eval_q(q0) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }
}

/// Structure constants `d[i][j][k]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoOp {
    d: Tensor,
}

impl CoOp {
    pub fn zero(n: usize) -> Self {
        CoOp { d: Tensor::zeros(&[n, n, n]) }
    }

    pub fn from_tensor(d: Tensor) -> Result<Self> {
        if d.order() != 3 {
            return Err(mismatch("coproduct constants need an order-3 tensor"));
        }
        Ok(CoOp { d })
    }

    pub fn from_fn(shape: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Poly) -> Self {
        CoOp { d: Tensor::from_fn(&shape, |ix| f(ix[0], ix[1], ix[2])) }
    }

    /// Sparse entries `(i, j, k, coef)`: `Δ(e_i) ∋ coef·e_j⊗e_k`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, Poly)]) -> Self {
        let mut co = CoOp::zero(n);
        for (i, j, k, c) in entries {
            co.d.add_at(&[*i, *j, *k], c);
        }
        co
    }

    pub fn tensor(&self) -> &Tensor {
        &self.d
    }

    pub fn shape(&self) -> [usize; 3] {
        let d = self.d.dims();
        [d[0], d[1], d[2]]
    }

    pub fn dim(&self) -> Option<usize> {
        let [a, b, c] = self.shape();
        (a == b && b == c).then_some(a)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Poly {
        self.d.get(&[i, j, k])
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Poly) {
        self.d.set(&[i, j, k], v);
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Poly) {
        self.d.add_at(&[i, j, k], v);
    }

    /// `Δ(e_i)` as an order-2 tensor.
    pub fn image(&self, i: usize) -> Tensor {
        let [_, a, b] = self.shape();
        Tensor::from_fn(&[a, b], |ix| self.get(i, ix[0], ix[1]).clone())
    }

    pub fn apply(&self, x: &Tensor) -> Result<Tensor> {
        x.split_leg(self, 0)
    }

    pub fn try_add(&self, other: &CoOp) -> Result<CoOp> {
        Ok(CoOp { d: self.d.try_add(&other.d)? })
    }

    pub fn try_sub(&self, other: &CoOp) -> Result<CoOp> {
        Ok(CoOp { d: self.d.try_sub(&other.d)? })
    }

    pub fn scale(&self, s: &Poly) -> CoOp {
        CoOp { d: self.d.scale(s) }
    }

    pub fn eval_q(&self, q0: &Rational) -> CoOp {
        CoOp { d: self.d.eval_q(q0) }
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::poly::rat;

    fn p(n: i64) -> Poly {
        Poly::from_int(n)
    }

    fn e(n: usize, i: usize) -> Tensor {
        Tensor::basis(n, i)
    }

    #[test]
    fn map_on_leg_kills_kernel() {
        // Q(e2) = 0 in the two-dimensional example
        let q = LinMap::from_images(2, &[(0, 0, p(1))]);
        let t = Tensor::outer(&e(2, 1), &e(2, 1));
        assert!(t.apply_map(&q, 1).unwrap().is_zero());
    }

    #[test]
    fn flip_swaps_factors_and_is_involutive() {
        let t = Tensor::outer(&e(3, 0), &e(3, 2));
        let f = t.flip().unwrap();
        assert_eq!(f, Tensor::outer(&e(3, 2), &e(3, 0)));
        assert_eq!(f.flip().unwrap(), t);
    }

    #[test]
    fn symbolic_map_on_leg() {
        // (id ⊗ (Q + qD))(e2⊗e2) with D(e2)=e2, Q(e2)=0 is q e2⊗e2
        let d = LinMap::from_images(2, &[(1, 1, p(1))]);
        let q = LinMap::from_images(2, &[(0, 0, p(1))]);
        let m = q.combine(&Poly::one(), &d, &Poly::q()).unwrap();
        let t = Tensor::outer(&e(2, 1), &e(2, 1)).apply_map(&m, 1).unwrap();
        assert_eq!(t, Tensor::outer(&e(2, 1), &e(2, 1)).scale(&Poly::q()));
    }

    #[test]
    fn mul_legs_inserts_at_position() {
        // e_i * e_j = e_{(i+j) mod 2} on legs 0 and 2 of e0⊗e1⊗e1
        let op = BinOp::from_fn([2, 2, 2], |i, j, k| if (i + j) % 2 == k { p(1) } else { p(0) });
        let t = Tensor::outer(&Tensor::outer(&e(2, 0), &e(2, 1)), &e(2, 1));
        let at0 = t.mul_legs(&op, 0, 2, 0).unwrap();
        assert_eq!(at0, Tensor::outer(&e(2, 1), &e(2, 1)));
        let at1 = t.mul_legs(&op, 1, 2, 1).unwrap();
        assert_eq!(at1, Tensor::outer(&e(2, 0), &e(2, 0)));
    }

    #[test]
    fn split_and_pair() {
        let co = CoOp::from_entries(2, &[(1, 0, 1, p(3))]);
        let t = e(2, 1).split_leg(&co, 0).unwrap();
        assert_eq!(t, Tensor::outer(&e(2, 0), &e(2, 1)).scale(&p(3)));
        let form = Tensor::from_fn(&[2, 2], |ix| if ix[0] != ix[1] { p(1) } else { p(0) });
        let s = t.pair_legs(&form, 0, 1).unwrap();
        assert_eq!(s, Tensor::scalar(p(3)));
    }

    #[test]
    fn s3_multiplication_table() {
        let t = Tensor::from_fn(&[2, 3, 4], |ix| p((ix[0] * 100 + ix[1] * 10 + ix[2]) as i64 + 1));
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for a in &perms {
            for b in &perms {
                let ab = t.permute(a).unwrap().permute(b).unwrap();
                let composed: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                assert_eq!(ab, t.permute(&composed).unwrap());
            }
        }
    }

    #[test]
    fn dimension_errors_are_typed() {
        let m = LinMap::identity(3);
        assert!(matches!(e(2, 0).apply_map(&m, 0), Err(Error::DimensionMismatch(_))));
        assert!(e(2, 0).try_add(&e(3, 0)).is_err());
    }

    #[test]
    fn compose_and_direct_sum() {
        let a = LinMap::from_images(2, &[(0, 1, p(2))]);
        let b = LinMap::from_images(2, &[(1, 0, rat(1, 2).into())]);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.get(1, 1), &p(1));
        let s = a.direct_sum(&LinMap::identity(1));
        assert_eq!(s.cod(), 3);
        assert_eq!(s.get(2, 2), &p(1));
        assert_eq!(s.get(1, 0), &p(2));
    }
}
