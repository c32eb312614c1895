//! Arithmetic in `Q(t)` for a real algebraic `t`, and points `(a, b)` whose
//! coordinates are polynomials in a common primitive element.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::realalg::{alg_is_zero, eval_interval};
use super::ring::{char_coeffs_fl, Rationals};
use super::{alg_sign, rat, resultant, BiPoly, Rat, RealAlg, Sign, UniPoly, Var};

/// Inverse of `e` modulo `m`, if `gcd(e, m) = 1`.
pub fn inverse_mod(e: &UniPoly, m: &UniPoly) -> Option<UniPoly> {
    // Extended Euclid tracking the cofactor of `e`.
    let mut r0 = m.clone();
    let mut r1 = e.rem(m);
    let mut s0 = UniPoly::zero();
    let mut s1 = UniPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.is_constant() && !r0.is_zero() {
        Some(s0.scale(&r0.coeff(0).recip()).rem(m))
    } else {
        None
    }
}

/// Inverse of `e` at the root `t`, shrinking the defining polynomial of `t`
/// when `e` shares a factor with it. `None` when `e(t) = 0`.
pub fn invert_at(t: &mut RealAlg, e: &UniPoly) -> Option<UniPoly> {
    loop {
        if t.is_rational() {
            let q = t.as_rational().unwrap();
            let v = e.eval(&q);
            return if v.is_zero() { None } else { Some(UniPoly::constant(v.recip())) };
        }
        let m = t.poly().clone();
        let e = e.rem(&m);
        if let Some(inv) = inverse_mod(&e, &m) {
            return Some(inv);
        }
        let g = e.gcd(&m);
        if alg_is_zero(&g, t) {
            return None;
        }
        let (lo, hi) = t.interval();
        *t = RealAlg::from_parts(m.exact_div(&g), lo.clone(), hi.clone());
    }
}

/// Multiplication matrix of `e` on the basis `1, t, ..., t^(k-1)` of `Q[t]/(m)`.
fn mult_matrix(e: &UniPoly, m: &UniPoly) -> Vec<Vec<Rat>> {
    let k = m.degree().unwrap_or(0);
    let mut cols = Vec::with_capacity(k);
    let mut cur = e.rem(m);
    for _ in 0..k {
        cols.push(cur.clone());
        cur = (&cur * &UniPoly::x()).rem(m);
    }
    (0..k).map(|i| (0..k).map(|j| cols[j].coeff(i)).collect()).collect()
}

/// Characteristic polynomial of multiplication by `e` in `Q[t]/(m)`; its roots
/// are the values of `e` at all roots of `m`.
pub fn char_poly_of(e: &UniPoly, m: &UniPoly) -> UniPoly {
    let mat = mult_matrix(e, m);
    let k = mat.len();
    let ek = char_coeffs_fl(&Rationals, &mat);
    let mut coeffs = vec![Rat::zero(); k + 1];
    for (j, c) in ek.iter().enumerate() {
        coeffs[k - j] = if j % 2 == 0 { c.clone() } else { -c };
    }
    UniPoly::from_coeffs(coeffs)
}

/// The real number `e(t)` as a standalone `RealAlg`.
pub fn elem_to_real(e: &UniPoly, t: &RealAlg) -> RealAlg {
    if let Some(q) = t.as_rational() {
        return RealAlg::from_rat(e.eval(&q));
    }
    let e = e.rem(t.poly());
    if e.is_constant() {
        return RealAlg::from_rat(e.coeff(0));
    }
    let r = char_poly_of(&e, t.poly()).squarefree();
    let roots = RealAlg::roots_of(&r).expect("characteristic polynomial is nonzero");
    select_root(roots, t, |tl, th| eval_interval(&e, tl, th))
}

/// Pick the root whose isolating interval is the only one met by the
/// enclosure produced by `enclose` on shrinking intervals of `t`.
fn select_root<F>(roots: Vec<RealAlg>, t: &RealAlg, mut enclose: F) -> RealAlg
where
    F: FnMut(&Rat, &Rat) -> (Rat, Rat),
{
    if roots.len() == 1 {
        return roots.into_iter().next().unwrap();
    }
    let mut t = t.clone();
    loop {
        let (tl, th) = t.bounds();
        let (jl, jh) = enclose(&tl, &th);
        let hits: Vec<&RealAlg> = roots
            .iter()
            .filter(|r| {
                let (l, h) = r.bounds();
                if r.is_rational() {
                    jl <= l && l <= jh
                } else {
                    jl < h && jh > l
                }
            })
            .collect();
        if hits.len() == 1 {
            return hits[0].clone();
        }
        t.bisect();
    }
}

/// A real point `(a, b)` with `a = pa(t)`, `b = pb(t)` for a real algebraic `t`.
#[derive(Clone, Debug)]
pub struct AlgPoint {
    pub t: RealAlg,
    pub a: UniPoly,
    pub b: UniPoly,
}

impl AlgPoint {
    pub fn new(t: RealAlg, a: UniPoly, b: UniPoly) -> Self {
        let (a, b) = match t.as_rational() {
            Some(q) => (UniPoly::constant(a.eval(&q)), UniPoly::constant(b.eval(&q))),
            None => (a.rem(t.poly()), b.rem(t.poly())),
        };
        AlgPoint { t, a, b }
    }

    pub fn rational(a: Rat, b: Rat) -> Self {
        AlgPoint { t: RealAlg::from_int(0), a: UniPoly::constant(a), b: UniPoly::constant(b) }
    }

    pub fn modulus(&self) -> &UniPoly {
        self.t.poly()
    }

    /// Reduce an element of `Q[t]` to its canonical representative.
    pub fn reduce(&self, e: &UniPoly) -> UniPoly {
        match self.t.as_rational() {
            Some(q) => UniPoly::constant(e.eval(&q)),
            None => e.rem(self.t.poly()),
        }
    }

    pub fn mul(&self, x: &UniPoly, y: &UniPoly) -> UniPoly {
        self.reduce(&(x * y))
    }

    /// `f(a, b)` as an element of `Q[t]/(m)`.
    pub fn eval(&self, f: &BiPoly) -> UniPoly {
        self.reduce(&f.substitute(&self.a, &self.b, Some(self.t.poly())))
    }

    pub fn sign(&self, e: &UniPoly) -> Sign {
        alg_sign(e, &self.t)
    }

    pub fn vanishes(&self, f: &BiPoly) -> bool {
        let e = self.eval(f);
        e.is_zero() || alg_is_zero(&e, &self.t)
    }

    pub fn a_real(&self) -> RealAlg {
        elem_to_real(&self.a, &self.t)
    }

    pub fn b_real(&self) -> RealAlg {
        elem_to_real(&self.b, &self.t)
    }

    pub fn a_f64(&self) -> f64 {
        self.a_real().to_f64()
    }

    pub fn b_f64(&self) -> f64 {
        self.b_real().to_f64()
    }

    /// Inverse of an element, shrinking the modulus if needed.
    pub fn invert(&mut self, e: &UniPoly) -> Option<UniPoly> {
        let inv = invert_at(&mut self.t, e)?;
        self.a = self.reduce(&self.a);
        self.b = self.reduce(&self.b);
        Some(self.reduce(&inv))
    }

    /// The mirrored point `(b, a)`.
    pub fn swapped(&self) -> AlgPoint {
        AlgPoint { t: self.t.clone(), a: self.b.clone(), b: self.a.clone() }
    }

    /// Combine two independently given real algebraic numbers into one
    /// point over a primitive element `t = a + c*b`.
    pub fn from_pair(a: &RealAlg, b: &RealAlg) -> AlgPoint {
        if let Some(q) = a.as_rational() {
            return AlgPoint::new(b.clone(), UniPoly::constant(q), UniPoly::x());
        }
        if let Some(q) = b.as_rational() {
            return AlgPoint::new(a.clone(), UniPoly::x(), UniPoly::constant(q));
        }
        for c in 1i64.. {
            if let Some(p) = try_primitive(a, b, &rat(c, 1)) {
                return p;
            }
        }
        unreachable!()
    }
}

/// `ma(x - c*y)` as a bivariate polynomial in `(x, y) = (a, b)`.
fn shifted(ma: &UniPoly, c: &Rat) -> BiPoly {
    let lin = &BiPoly::a() - &BiPoly::b().scale(c);
    let mut acc = BiPoly::zero();
    let mut pw = BiPoly::one();
    for k in ma.coeffs() {
        acc = &acc + &pw.scale(k);
        pw = &pw * &lin;
    }
    acc
}

fn try_primitive(a: &RealAlg, b: &RealAlg, c: &Rat) -> Option<AlgPoint> {
    let sh = shifted(a.poly(), c);
    let mb = BiPoly::from_uni(b.poly(), Var::B);
    let r = resultant(&sh, &mb, Var::B).squarefree();
    let roots = RealAlg::roots_of(&r).ok()?;
    let (mut aa, mut bb) = (a.clone(), b.clone());
    let t = {
        let mut pick = None;
        for _ in 0..400 {
            let (al, ah) = aa.bounds();
            let (bl, bh) = bb.bounds();
            let (jl, jh) = (&al + c * &bl, &ah + c * &bh);
            let hits: Vec<&RealAlg> = roots
                .iter()
                .filter(|r| {
                    let (l, h) = r.bounds();
                    if r.is_rational() {
                        jl <= l && l <= jh
                    } else {
                        jl < h && jh > l
                    }
                })
                .collect();
            if hits.len() == 1 {
                pick = Some(hits[0].clone());
                break;
            }
            aa.bisect();
            bb.bisect();
        }
        pick?
    };
    // gcd over Q(t) of mb(y) and ma(t - c y): linear when c separates.
    let f: Vec<UniPoly> = sh.coeffs_in(Var::B);
    let g: Vec<UniPoly> = b.poly().coeffs().iter().map(|q| UniPoly::constant(q.clone())).collect();
    let mut t = t;
    let h = kpoly_gcd(&mut t, f, g);
    if h.len() != 2 {
        return None;
    }
    let m = t.poly().clone();
    let bexpr = (-&h[0]).rem(&m);
    let aexpr = (&UniPoly::x() - &bexpr.scale(c)).rem(&m);
    let p = AlgPoint::new(t, aexpr, bexpr);
    // Sanity: the coordinates must be the requested numbers.
    if p.a_real().equals(a) && p.b_real().equals(b) {
        Some(p)
    } else {
        None
    }
}

/// Strip leading coefficients that vanish at `t`.
fn kstrip(t: &RealAlg, mut f: Vec<UniPoly>) -> Vec<UniPoly> {
    while let Some(c) = f.last() {
        let c = if t.is_rational() { UniPoly::constant(c.eval(&t.as_rational().unwrap())) } else { c.rem(t.poly()) };
        if c.is_zero() || alg_is_zero(&c, t) {
            f.pop();
        } else {
            break;
        }
    }
    f
}

/// Monic gcd in `Q(t)[y]`, coefficient lists ascending.
pub fn kpoly_gcd(t: &mut RealAlg, f: Vec<UniPoly>, g: Vec<UniPoly>) -> Vec<UniPoly> {
    let mut f = kstrip(t, f);
    let mut g = kstrip(t, g);
    while !g.is_empty() {
        let lc = g.last().unwrap().clone();
        let inv = invert_at(t, &lc).expect("leading coefficient is nonzero");
        let m = t.poly().clone();
        let red = |p: &UniPoly| if t.is_rational() { UniPoly::constant(p.eval(&t.as_rational().unwrap())) } else { p.rem(&m) };
        while f.len() >= g.len() && !f.is_empty() {
            let shift = f.len() - g.len();
            let q = red(&(f.last().unwrap() * &inv));
            for (k, gc) in g.iter().enumerate() {
                f[k + shift] = red(&(&f[k + shift] - &(&q * gc)));
            }
            f.pop();
            f = kstrip(t, f);
        }
        core::mem::swap(&mut f, &mut g);
    }
    if f.is_empty() {
        return f;
    }
    let lc = f.last().unwrap().clone();
    let inv = invert_at(t, &lc).expect("leading coefficient is nonzero");
    let m = t.poly().clone();
    f.iter()
        .map(|c| if t.is_rational() { UniPoly::constant((c * &inv).eval(&t.as_rational().unwrap())) } else { (c * &inv).rem(&m) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(c: &[i64], lo: i64, hi: i64) -> RealAlg {
        RealAlg::new(&UniPoly::from_ints(c), rat(lo, 1), rat(hi, 1)).unwrap()
    }

    #[test]
    fn element_coordinates() {
        // t = sqrt5, e = (1 + t)/4 -> (1+sqrt5)/4, a root of 4x^2 - 2x - 1
        let t = quad(&[-5, 0, 1], 2, 3);
        let e = UniPoly::from_coeffs(vec![rat(1, 4), rat(1, 4)]);
        let x = elem_to_real(&e, &t);
        assert_eq!(x.poly(), &UniPoly::from_ints(&[-1, -2, 4]));
        assert!(x.to_f64() > 0.8 && x.to_f64() < 0.82);
        // t^2 reduces to the rational 5
        assert_eq!(elem_to_real(&UniPoly::from_ints(&[0, 0, 1]), &t).as_rational(), Some(rat(5, 1)));
    }

    #[test]
    fn inversion_splits_reducible_modulus() {
        // t = sqrt2 as a root of (x^2-2)(x-3); invert (x-3)(x+1)
        let m = &UniPoly::from_ints(&[-2, 0, 1]) * &UniPoly::from_ints(&[-3, 1]);
        let mut t = RealAlg::new(&m, rat(1, 1), rat(2, 1)).unwrap();
        let e = &UniPoly::from_ints(&[-3, 1]) * &UniPoly::from_ints(&[1, 1]);
        let inv = invert_at(&mut t, &e).unwrap();
        assert_eq!(t.poly(), &UniPoly::from_ints(&[-2, 0, 1]));
        let prod = (&e * &inv).rem(t.poly());
        assert_eq!(prod, UniPoly::one());
        assert!(invert_at(&mut t, &UniPoly::from_ints(&[-2, 0, 1])).is_none());
    }

    #[test]
    fn primitive_element_of_two_surds() {
        let a = quad(&[-2, 0, 1], 1, 2);
        let b = quad(&[-3, 0, 1], 1, 2);
        let p = AlgPoint::from_pair(&a, &b);
        assert!(p.a_real().equals(&a));
        assert!(p.b_real().equals(&b));
        // a^2 + b^2 - 5 vanishes, a*b - 2 does not
        let f = &(&BiPoly::a().pow(2) + &BiPoly::b().pow(2)) - &BiPoly::constant(rat(5, 1));
        assert!(p.vanishes(&f));
        let g = &(&BiPoly::a() * &BiPoly::b()) - &BiPoly::constant(rat(2, 1));
        assert!(!p.vanishes(&g));
        assert_eq!(p.sign(&p.eval(&g)), Sign::Pos);
    }
}
