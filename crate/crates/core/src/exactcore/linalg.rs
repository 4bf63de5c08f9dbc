//! Gaussian elimination over `Q` and a fraction-free determinant over `Q[q]`.

use num_traits::{One, Zero};

use super::poly::{Poly, Rational};
use super::tensor::LinMap;
use crate::error::{Error, Result};

fn constant_grid(m: &LinMap) -> Result<Vec<Vec<Rational>>> {
    (0..m.cod())
        .map(|i| {
            (0..m.dom())
                .map(|j| {
                    m.get(i, j)
                        .as_constant()
                        .ok_or_else(|| Error::RingMismatch("elimination needs rational entries".into()))
                })
                .collect()
        })
        .collect()
}

/// Inverse of a square matrix with rational entries.
pub fn inverse(m: &LinMap) -> Result<LinMap> {
    let n = m.cod();
    if n != m.dom() {
        return Err(Error::DimensionMismatch(format!("inverse of a {}x{} matrix", n, m.dom())));
    }
    let mut a = constant_grid(m)?;
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                a[r][j] -= x;
                inv[r][j] -= y;
            }
        }
    }
    Ok(LinMap::from_fn(n, n, |i, j| Poly::constant(inv[i][j].clone())))
}

/// Determinant by Bareiss elimination; every division is exact in `Q[q]`.
pub fn det(m: &LinMap) -> Result<Poly> {
    let n = m.cod();
    if n != m.dom() {
        return Err(Error::DimensionMismatch(format!("determinant of a {}x{} matrix", n, m.dom())));
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut a: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut sign = Poly::one();
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -&sign;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                let (quot, rem) = num.div_rem(&prev)?;
                debug_assert!(rem.is_zero());
                a[i][j] = quot;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(&sign * &a[n - 1][n - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: i64) -> Poly {
        Poly::from_int(n)
    }

    #[test]
    fn inverse_round_trip() {
        let m = LinMap::from_fn(3, 3, |i, j| p([[2, 1, 0], [0, 1, 3], [1, 0, 1]][i][j]));
        let inv = inverse(&m).unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinMap::identity(3));
    }

    #[test]
    fn singular_is_typed() {
        let m = LinMap::from_fn(2, 2, |_, _| p(1));
        assert!(matches!(inverse(&m), Err(Error::Singular(_))));
    }

    #[test]
    fn symbolic_determinant() {
        // [[1, q], [q, 1]] has determinant 1 - q^2
        let m = LinMap::from_fn(2, 2, |i, j| if i == j { p(1) } else { Poly::q() });
        assert_eq!(det(&m).unwrap(), Poly::from_ints(&[1, 0, -1]));
        let swap = LinMap::from_fn(3, 3, |i, j| p(((i + j) == 2) as i64));
        assert_eq!(det(&swap).unwrap(), p(-1));
    }
}
