//! Commutative rings used as matrix entry domains, with fraction-free
//! determinants and characteristic-polynomial coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{int, BiPoly, Rat, UniPoly};

/// A commutative ring with exact division where it is defined. The ring
/// object carries any context (e.g. a modulus) the elements need.
pub trait Ring {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Structural zero test.
    fn is_zero(&self, a: &Self::E) -> bool;
    /// `a / b` when `b` divides `a` exactly (integral domains only).
    fn div_exact(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a / k` for a nonzero integer `k`.
    fn div_int(&self, a: &Self::E, k: i64) -> Self::E;
}

pub struct Rationals;

impl Ring for Rationals {
    type E = Rat;
    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn div_exact(&self, a: &Rat, b: &Rat) -> Rat {
        a / b
    }
    fn div_int(&self, a: &Rat, k: i64) -> Rat {
        a / int(k)
    }
}

/// `Q[x]`
pub struct UniRing;

impl Ring for UniRing {
    type E = UniPoly;
    fn zero(&self) -> UniPoly {
        UniPoly::zero()
    }
    fn one(&self) -> UniPoly {
        UniPoly::one()
    }
    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a + b
    }
    fn sub(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a - b
    }
    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a * b
    }
    fn neg(&self, a: &UniPoly) -> UniPoly {
        -a
    }
    fn is_zero(&self, a: &UniPoly) -> bool {
        a.is_zero()
    }
    fn div_exact(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.exact_div(b)
    }
    fn div_int(&self, a: &UniPoly, k: i64) -> UniPoly {
        a.scale(&int(k).recip())
    }
}

/// `Q[a, b]`
pub struct BiRing;

impl Ring for BiRing {
    type E = BiPoly;
    fn zero(&self) -> BiPoly {
        BiPoly::zero()
    }
    fn one(&self) -> BiPoly {
        BiPoly::one()
    }
    fn add(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a + b
    }
    fn sub(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a - b
    }
    fn mul(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a * b
    }
    fn neg(&self, a: &BiPoly) -> BiPoly {
        -a
    }
    fn is_zero(&self, a: &BiPoly) -> bool {
        a.is_zero()
    }
    fn div_exact(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a.exact_div(b).expect("inexact bivariate division")
    }
    fn div_int(&self, a: &BiPoly, k: i64) -> BiPoly {
        a.scale(&int(k).recip())
    }
}

/// `Q[t]/(m)`; `m` need not be irreducible, so only `div_int` is offered.
pub struct QuotRing {
    pub modulus: UniPoly,
}

impl Ring for QuotRing {
    type E = UniPoly;
    fn zero(&self) -> UniPoly {
        UniPoly::zero()
    }
    fn one(&self) -> UniPoly {
        UniPoly::one().rem(&self.modulus)
    }
    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a + b
    }
    fn sub(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a - b
    }
    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        (a * b).rem(&self.modulus)
    }
    fn neg(&self, a: &UniPoly) -> UniPoly {
        -a
    }
    fn is_zero(&self, a: &UniPoly) -> bool {
        a.is_zero()
    }
    fn div_exact(&self, _a: &UniPoly, _b: &UniPoly) -> UniPoly {
        panic!("division is not defined in a general quotient ring")
    }
    fn div_int(&self, a: &UniPoly, k: i64) -> UniPoly {
        a.scale(&int(k).recip())
    }
}

/// Square matrix over a ring, row-major.
pub type Matrix<E> = Vec<Vec<E>>;

/// Determinant by fraction-free (Bareiss) elimination. Requires an integral
/// domain so that the pivot divisions are exact.
pub fn det_bareiss<R: Ring>(ring: &R, m: &Matrix<R::E>) -> R::E {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut a = m.clone();
    let mut prev = ring.one();
    let mut negate = false;
    for k in 0..n - 1 {
        if ring.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&a[i][j], &a[k][k]), &ring.mul(&a[i][k], &a[k][j]));
                a[i][j] = ring.div_exact(&t, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        ring.neg(&d)
    } else {
        d
    }
}

/// Determinant by cofactor expansion along the first row; any commutative ring.
pub fn det_cofactor<R: Ring>(ring: &R, m: &Matrix<R::E>) -> R::E {
    let n = m.len();
    match n {
        0 => ring.one(),
        1 => m[0][0].clone(),
        2 => ring.sub(&ring.mul(&m[0][0], &m[1][1]), &ring.mul(&m[0][1], &m[1][0])),
        _ => {
            let mut acc = ring.zero();
            for j in 0..n {
                if ring.is_zero(&m[0][j]) {
                    continue;
                }
                let minor: Matrix<R::E> =
                    (1..n).map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect()).collect();
                let term = ring.mul(&m[0][j], &det_cofactor(ring, &minor));
                acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
            }
            acc
        }
    }
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::E>, b: &Matrix<R::E>) -> Matrix<R::E> {
    let n = a.len();
    let mut out = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if ring.is_zero(&a[i][k]) {
                continue;
            }
            for j in 0..n {
                if ring.is_zero(&b[k][j]) {
                    continue;
                }
                out[i][j] = ring.add(&out[i][j], &ring.mul(&a[i][k], &b[k][j]));
            }
        }
    }
    out
}

/// `e[k]` = sum of the principal `k`-minors, for `k = 0..=n`, by the
/// Faddeev-LeVerrier recursion (divisions by small integers only, so any
/// `Q`-algebra works, including quotient rings with zero divisors).
pub fn char_coeffs_fl<R: Ring>(ring: &R, a: &Matrix<R::E>) -> Vec<R::E> {
    let n = a.len();
    // det(tI - A) = sum_i c_i t^i with c_n = 1; e_k = (-1)^k c_{n-k}.
    let mut e = vec![ring.one()];
    let mut mk: Matrix<R::E> = vec![vec![ring.zero(); n]; n];
    let mut c_prev = ring.one();
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = if k == 1 { vec![vec![ring.zero(); n]; n] } else { mat_mul(ring, a, &mk) };
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = ring.add(&row[i], &c_prev);
        }
        mk = next;
        let amk = mat_mul(ring, a, &mk);
        let mut tr = ring.zero();
        for (i, row) in amk.iter().enumerate() {
            tr = ring.add(&tr, &row[i]);
        }
        let c = ring.neg(&ring.div_int(&tr, k as i64));
        e.push(if k % 2 == 0 { c.clone() } else { ring.neg(&c) });
        c_prev = c;
    }
    e
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    'outer: loop {
        out.push(idx.clone());
        for i in (0..k).rev() {
            if idx[i] < i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'outer;
            }
        }
        return out;
    }
}

pub fn submatrix<E: Clone>(m: &Matrix<E>, rows: &[usize], cols: &[usize]) -> Matrix<E> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank_rat(m: &Matrix<Rat>) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
