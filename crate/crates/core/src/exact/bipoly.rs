//! Sparse bivariate polynomials in `(a, b)` with rational coefficients.
//!
//! Monomials are keyed by `(deg_a, deg_b)`; the derived tuple order on keys is
//! exactly the lexicographic order with `a > b`, so the leading term is the
//! last map entry.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rat, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    B,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::A => Var::B,
            Var::B => Var::A,
        }
    }
}

pub type Monomial = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term((0, 0), c)
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::A => Self::term((1, 0), Rat::one()),
            Var::B => Self::term((0, 1), Rat::one()),
        }
    }

    pub fn a() -> Self {
        Self::var(Var::A)
    }

    pub fn b() -> Self {
        Self::var(Var::B)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    /// Embed a univariate polynomial as a polynomial in `v`.
    pub fn from_uni(p: &UniPoly, v: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            (if v == Var::A { (k, 0) } else { (0, k) }, c.clone())
        }))
    }

    fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&m| m == (0, 0))
    }

    pub fn coeff(&self, m: Monomial) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading monomial and coefficient under lex `a > b`.
    pub fn leading(&self) -> Option<(Monomial, &Rat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|&(i, j)| if v == Var::A { i } else { j }).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    /// True when only `v` occurs (constants included).
    pub fn is_univariate_in(&self, v: Var) -> bool {
        self.degree_in(v.other()) == 0
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_term(&self, m: Monomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(&(i, j), x)| ((i + m.0, j + m.1), x * c)).collect() }
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &BiPoly) -> Option<BiPoly> {
        let (dm, dc) = d.leading()?;
        let dc_inv = dc.recip();
        let mut r = self.clone();
        let mut q = BiPoly::zero();
        while let Some((rm, rc)) = r.leading() {
            if rm.0 < dm.0 || rm.1 < dm.1 {
                return None;
            }
            let m = (rm.0 - dm.0, rm.1 - dm.1);
            let c = rc * &dc_inv;
            r = &r - &d.mul_term(m, &c);
            q.add_term(m, &c);
        }
        Some(q)
    }

    pub fn eval(&self, a: &Rat, b: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * pow_rat(a, i) * pow_rat(b, j);
        }
        acc
    }

    /// Fix `v = value`, leaving a polynomial in the other variable.
    pub fn specialize(&self, v: Var, value: &Rat) -> UniPoly {
        let n = self.degree_in(v.other()) as usize;
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (&(i, j), c) in &self.terms {
            let (fixed, free) = if v == Var::A { (i, j) } else { (j, i) };
            coeffs[free as usize] += c * pow_rat(value, fixed);
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Coefficients with respect to `v`, each a polynomial in the other variable.
    pub fn coeffs_in(&self, v: Var) -> Vec<UniPoly> {
        let n = self.degree_in(v) as usize;
        let mut out: Vec<Vec<Rat>> = vec![Vec::new(); n + 1];
        for (&(i, j), c) in &self.terms {
            let (k, o) = if v == Var::A { (i, j) } else { (j, i) };
            let row = &mut out[k as usize];
            if row.len() <= o as usize {
                row.resize(o as usize + 1, Rat::zero());
            }
            row[o as usize] = c.clone();
        }
        out.into_iter().map(UniPoly::from_coeffs).collect()
    }

    /// Interpret a univariate polynomial (variable `a`) whose coefficients are
    /// polynomials in `b` as a bivariate polynomial; `v` names the outer variable.
    pub fn from_coeffs_in(coeffs: &[UniPoly], v: Var) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (o, x) in c.coeffs().iter().enumerate() {
                let m = if v == Var::A { (k as u32, o as u32) } else { (o as u32, k as u32) };
                p.add_term(m, x);
            }
        }
        p
    }

    /// Exchange the roles of `a` and `b`.
    pub fn swap_vars(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    /// Substitute `a -> pa(t)`, `b -> pb(t)`, reducing modulo `m` when given.
    pub fn substitute(&self, pa: &UniPoly, pb: &UniPoly, m: Option<&UniPoly>) -> UniPoly {
        let red = |p: UniPoly| match m {
            Some(m) => p.rem(m),
            None => p,
        };
        let da = self.degree_in(Var::A) as usize;
        let db = self.degree_in(Var::B) as usize;
        let mut apow = vec![UniPoly::one()];
        for k in 1..=da {
            apow.push(red(&apow[k - 1] * pa));
        }
        let mut bpow = vec![UniPoly::one()];
        for k in 1..=db {
            bpow.push(red(&bpow[k - 1] * pb));
        }
        let mut acc = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            let t = red(&apow[i as usize] * &bpow[j as usize]).scale(c);
            acc = &acc + &t;
        }
        acc
    }
}

fn pow_rat(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", c)?;
            match i {
                0 => {}
                1 => write!(f, "*a")?,
                _ => write!(f, "*a^{}", i)?,
            }
            match j {
                0 => {}
                1 => write!(f, "*b")?,
                _ => write!(f, "*b^{}", j)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &rhs.terms {
                out.add_term((i + k, j + l), &(c * d));
            }
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn lex_leading_term() {
        // a*b^5 + a^2 + b^7: lex a > b picks a^2
        let p = BiPoly::from_terms([((1, 5), rat(1, 1)), ((2, 0), rat(3, 1)), ((0, 7), rat(1, 1))]);
        assert_eq!(p.leading().unwrap(), ((2, 0), &rat(3, 1)));
    }

    #[test]
    fn division_roundtrip() {
        let a = BiPoly::a();
        let b = BiPoly::b();
        let f = &(&a - &b) * &(&(&a * &a) + &b);
        assert_eq!(f.exact_div(&(&a - &b)).unwrap(), &(&a * &a) + &b);
        assert!(f.exact_div(&(&a + &BiPoly::one())).is_none());
    }

    #[test]
    fn specialization_and_substitution() {
        let p = &BiPoly::a().pow(2) + &BiPoly::b().scale(&rat(3, 1));
        assert_eq!(p.specialize(Var::A, &rat(2, 1)), UniPoly::from_ints(&[4, 3]));
        assert_eq!(p.specialize(Var::B, &rat(1, 1)), UniPoly::from_ints(&[3, 0, 1]));
        let t = UniPoly::x();
        assert_eq!(p.substitute(&t, &t, None), UniPoly::from_ints(&[0, 3, 1]));
        let back = BiPoly::from_coeffs_in(&p.coeffs_in(Var::A), Var::A);
        assert_eq!(back, p);
        assert_eq!(p.swap_vars().swap_vars(), p);
    }
}
