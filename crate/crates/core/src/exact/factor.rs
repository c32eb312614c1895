//! Shrinking the defining polynomial of a real algebraic number towards its
//! minimal polynomial.
//!
//! Rational roots are found exactly. Other factors are guessed from
//! floating-point complex roots and then confirmed by exact division, so a
//! failed guess only leaves a larger (still correct) defining polynomial.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use super::realalg::alg_is_zero;
use super::{simplest_between, Rat, RealAlg, UniPoly};

/// Largest degree for which subset factoring is attempted.
const MAX_SUBSET_DEGREE: usize = 24;

/// `x` with the smallest defining polynomial that could be certified.
pub fn minimize(x: &RealAlg) -> RealAlg {
    if x.is_rational() {
        return x.clone();
    }
    if let Some(q) = rational_value(x) {
        return RealAlg::from_rat(q);
    }
    let p = x.poly().primitive();
    if p.degree() == Some(2) {
        return x.clone();
    }
    // Strip rational roots first; they are cheap and exact.
    let mut p = strip_rational_roots(&p);
    while let Some(f) = find_factor(&p, x) {
        if f.degree() == p.degree() {
            break;
        }
        p = f;
    }
    let (lo, hi) = x.interval();
    RealAlg::from_parts(p, lo.clone(), hi.clone())
}

/// The value of `x` if it is rational.
pub fn rational_value(x: &RealAlg) -> Option<Rat> {
    if let Some(q) = x.as_rational() {
        return Some(q);
    }
    // A rational root has denominator dividing the leading coefficient, and
    // two such rationals are at least 1/lc^2 apart.
    let lc = Rat::from_integer(x.poly().primitive().lc().numer().abs());
    let eps = (&lc * &lc).recip();
    let mut y = x.clone();
    y.refine(&eps);
    if let Some(q) = y.as_rational() {
        return Some(q);
    }
    let (lo, hi) = y.bounds();
    let q = simplest_between(&lo, &hi);
    (q > lo && q < hi && x.poly().eval(&q).is_zero()).then_some(q)
}

fn strip_rational_roots(p: &UniPoly) -> UniPoly {
    let mut p = p.clone();
    for r in RealAlg::roots_of(&p).unwrap_or_default() {
        if let Some(q) = rational_value(&r) {
            p = p.exact_div(&UniPoly::linear_root(&q)).primitive();
        }
    }
    p
}

/// A proper factor of `p` vanishing at `x`, smallest degree first.
fn find_factor(p: &UniPoly, x: &RealAlg) -> Option<UniPoly> {
    let deg = p.degree()?;
    if deg <= 2 || deg > MAX_SUBSET_DEGREE {
        return None;
    }
    let roots = complex_roots(p)?;
    let xv = x.to_f64();
    let anchor = (0..roots.len())
        .min_by(|&i, &j| (roots[i] - xv).norm().total_cmp(&(roots[j] - xv).norm()))?;
    let others: Vec<usize> = (0..roots.len()).filter(|&i| i != anchor).collect();
    let lc = p.lc();
    for k in 1..deg - 1 {
        let mut found = None;
        for_each_subset(others.len(), k, &mut |idx| {
            if found.is_some() {
                return;
            }
            let mut chosen = vec![roots[anchor]];
            chosen.extend(idx.iter().map(|&i| roots[others[i]]));
            if let Some(f) = candidate(&chosen, &lc) {
                if p.rem(&f).is_zero() && alg_is_zero(&f, x) {
                    found = Some(f);
                }
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// `lc * prod (x - z)` rounded to integers, if the imaginary parts cancel.
fn candidate(zs: &[Complex64], lc: &Rat) -> Option<UniPoly> {
    let mut c = vec![Complex64::new(super::rat_to_f64(lc), 0.0)];
    for z in zs {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= ci * z;
        }
        c = next;
    }
    let mut ints = Vec::with_capacity(c.len());
    for ci in c {
        let scale = ci.re.abs().max(1.0);
        if ci.im.abs() > 1e-6 * scale {
            return None;
        }
        let r = libm::round(ci.re);
        if (ci.re - r).abs() > 1e-4 || r.abs() > 1e15 {
            return None;
        }
        ints.push(BigInt::from(r.to_i64()?));
    }
    let f = UniPoly::from_bigints(&ints);
    (f.degree()? >= 1).then(|| f.primitive())
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// All complex roots by the Aberth iteration, or `None` if it stalls.
pub fn complex_roots(p: &UniPoly) -> Option<Vec<Complex64>> {
    let deg = p.degree()?;
    let lc = super::rat_to_f64(&p.lc());
    let c: Vec<f64> = p.coeffs().iter().map(|q| super::rat_to_f64(q) / lc).collect();
    if c.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let bound = 1.0 + c[..deg].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(0.5 * bound, 0.4 + core::f64::consts::TAU * k as f64 / deg as f64))
        .collect();
    let eval = |x: Complex64| {
        let mut v = Complex64::new(1.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for ck in c[..deg].iter().rev() {
            dv = dv * x + v;
            v = v * x + ck;
        }
        (v, dv)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[i] -= w;
            moved = moved.max(w.norm() / z[i].norm().max(1.0));
        }
        if moved < 1e-15 {
            return Some(z);
        }
    }
    Some(z)
}
