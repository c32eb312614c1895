//! Sturm sequences, root counting and real-root isolation.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{rat, Rat, Sign, UniPoly};
use crate::Error;

/// Signed remainder sequence `a, b, -rem(a,b), ...`, each term rescaled by a
/// positive constant to keep integer coefficients small.
pub fn signed_remainder_seq(a: &UniPoly, b: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![positive_primitive(a)];
    if b.is_zero() {
        return seq;
    }
    seq.push(positive_primitive(b));
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(positive_primitive(&-&r));
    }
    seq
}

/// Rescale by a positive rational so coefficients are coprime integers,
/// keeping the sign of every value.
fn positive_primitive(p: &UniPoly) -> UniPoly {
    let (s, q) = p.primitive_parts();
    if s > Rat::zero() {
        q
    } else {
        -&q
    }
}

/// Sturm sequence of a polynomial, ready for root counting.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<UniPoly>,
}

fn variations<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl Sturm {
    pub fn new(p: &UniPoly) -> Self {
        Sturm { seq: signed_remainder_seq(p, &p.derivative()) }
    }

    /// Tarski query sequence for `p` and `q`; counts roots of `p` weighted by
    /// the sign of `q` at them.
    pub fn tarski(p: &UniPoly, q: &UniPoly) -> Self {
        Sturm { seq: signed_remainder_seq(p, &(&p.derivative() * q)) }
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.seq.iter().map(|p| p.sign_at_neg_inf()))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.seq.iter().map(|p| p.sign_at_pos_inf()))
    }

    /// Number of distinct roots in the half-open interval `(lo, hi]`
    /// (for a Tarski sequence: the weighted count).
    pub fn count(&self, lo: &Rat, hi: &Rat) -> i64 {
        self.variations_at(lo) as i64 - self.variations_at(hi) as i64
    }

    pub fn count_all(&self) -> i64 {
        self.variations_at_neg_inf() as i64 - self.variations_at_pos_inf() as i64
    }
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &UniPoly) -> usize {
    if p.is_constant() {
        return 0;
    }
    Sturm::new(p).count_all() as usize
}

/// A point inside `(lo, hi)` that is not a root of `p`: the midpoint when
/// possible, otherwise the first of `j/k` (k = 3, 4, ...) that works.
fn split_point(p: &UniPoly, lo: &Rat, hi: &Rat) -> Rat {
    let w = hi - lo;
    let mut k = 2i64;
    loop {
        for j in 1..k {
            let m = lo + &w * rat(j, k);
            if !p.eval(&m).is_zero() {
                return m;
            }
        }
        k += 1;
    }
}

/// Isolating open intervals for the distinct real roots of `p`, in
/// increasing order. Endpoints are never roots.
pub fn sturm_isolate(p: &UniPoly) -> Result<Vec<(Rat, Rat)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.squarefree();
    if sf.is_constant() {
        return Ok(Vec::new());
    }
    let sturm = Sturm::new(&sf);
    let b = sf.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = sturm.count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push((lo, hi));
            continue;
        }
        let m = split_point(&sf, &lo, &hi);
        stack.push((m.clone(), hi));
        stack.push((lo, m));
    }
    out.sort();
    Ok(out)
}

/// Bisect an isolating interval of a square-free `p` down to width `< eps`.
/// Returns `Err(q)` if a rational root `q` is hit exactly.
pub fn refine_interval(p: &UniPoly, lo: &Rat, hi: &Rat, eps: &Rat) -> Result<(Rat, Rat), Rat> {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let s_lo = p.sign_at(&lo);
    let two = rat(2, 1);
    while &(&hi - &lo) >= eps {
        let m = (&lo + &hi) / &two;
        let s = p.sign_at(&m);
        if s == Sign::Zero {
            return Err(m);
        }
        if s == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    Ok((lo, hi))
}

/// One bisection step of an isolating interval.
pub fn bisect(p: &UniPoly, lo: &Rat, hi: &Rat) -> Result<(Rat, Rat), Rat> {
    let s_lo = p.sign_at(lo);
    let m = (lo + hi) / rat(2, 1);
    let s = p.sign_at(&m);
    if s == Sign::Zero {
        Err(m)
    } else if s == s_lo {
        Ok((m, hi.clone()))
    } else {
        Ok((lo.clone(), m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolates_sqrt5() {
        let p = UniPoly::from_ints(&[-5, 0, 1]);
        let iv = sturm_isolate(&p).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv[0].1 <= iv[1].0);
        assert!(iv[0].0 < rat(-2, 1) && iv[1].1 > rat(2, 1));
    }

    #[test]
    fn cubic_from_table_has_two_small_roots() {
        let p = UniPoly::from_ints(&[-1, 10, 32, 8]);
        let iv = sturm_isolate(&p).unwrap();
        assert_eq!(iv.len(), 3);
        let s = Sturm::new(&p);
        assert_eq!(s.count(&rat(-1, 1), &rat(1, 1)), 2);
    }

    #[test]
    fn rational_roots_never_on_endpoints() {
        // (x)(x-1)(x+1)(2x-1)
        let p = &(&UniPoly::from_ints(&[0, 1]) * &UniPoly::from_ints(&[-1, 0, 1])) * &UniPoly::from_ints(&[-1, 2]);
        let iv = sturm_isolate(&p).unwrap();
        assert_eq!(iv.len(), 4);
        for (lo, hi) in &iv {
            assert!(!p.eval(lo).is_zero() && !p.eval(hi).is_zero());
        }
    }

    #[test]
    fn tarski_query_sign() {
        // roots of x^2-2, weighted by sign of x: one positive, one negative
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let q = UniPoly::from_ints(&[0, 1]);
        let t = Sturm::tarski(&p, &q);
        assert_eq!(t.count(&rat(0, 1), &rat(2, 1)), 1);
        assert_eq!(t.count(&rat(-2, 1), &rat(0, 1)), -1);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(sturm_isolate(&UniPoly::zero()), Err(Error::ZeroPolynomial)));
    }
}
