//! Sylvester resultants of bivariate polynomials.

use alloc::vec;

use super::ring::{det_bareiss, Matrix, UniRing};
use super::{BiPoly, UniPoly, Var};

/// Resultant of `f` and `g` with respect to `eliminate`, as a polynomial in
/// the remaining variable.
pub fn resultant(f: &BiPoly, g: &BiPoly, eliminate: Var) -> UniPoly {
    if f.is_zero() || g.is_zero() {
        return UniPoly::zero();
    }
    let fc = f.coeffs_in(eliminate);
    let gc = g.coeffs_in(eliminate);
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    if m == 0 && n == 0 {
        return UniPoly::one();
    }
    if m == 0 {
        return fc[0].pow(n as u32);
    }
    if n == 0 {
        return gc[0].pow(m as u32);
    }
    let size = m + n;
    let mut s: Matrix<UniPoly> = vec![vec![UniPoly::zero(); size]; size];
    for r in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            s[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            s[n + r][r + k] = c.clone();
        }
    }
    det_bareiss(&UniRing, &s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn linear_system() {
        let a = BiPoly::a();
        let b = BiPoly::b();
        let r = resultant(&(&a - &b), &(&(&a + &b) - &BiPoly::one()), Var::A);
        assert_eq!(r.primitive(), UniPoly::from_ints(&[-1, 2]));
    }

    #[test]
    fn circle_and_diagonal() {
        let a = BiPoly::a();
        let b = BiPoly::b();
        let circle = &(&(&a * &a) + &(&b * &b)) - &BiPoly::one();
        let r = resultant(&circle, &(&a - &b), Var::A);
        assert_eq!(r.primitive(), UniPoly::from_ints(&[-1, 0, 2]));
    }

    #[test]
    fn specialization_by_linear_factor() {
        let a = BiPoly::a();
        let b = BiPoly::b();
        let m = &(&(&a * &b) + &b.scale(&rat(3, 1))) - &BiPoly::constant(rat(2, 1));
        let r = resultant(&(&a - &BiPoly::one()), &m, Var::A);
        assert_eq!(r, m.specialize(Var::A, &rat(1, 1)));
    }
}
