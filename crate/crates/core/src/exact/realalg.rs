//! Real algebraic numbers as (square-free integer polynomial, isolating interval).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::sturm::{bisect, Sturm};
use super::{rat, rat_to_f64, sturm_isolate, Rat, Sign, UniPoly};
use crate::Error;

/// Bisections spent on interval evaluation before the exact fallback.
pub const SIGN_FUEL: usize = 256;

/// Bisections before the exact zero test is run.
const ZERO_TEST_AFTER: usize = 6;

/// A real root of `poly`, the unique one inside the open interval `(lo, hi)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealAlg {
    poly: UniPoly,
    lo: Rat,
    hi: Rat,
}

impl RealAlg {
    /// Exact rational, represented as the root of `x - q` in `(q-1, q+1)`.
    pub fn from_rat(q: Rat) -> Self {
        RealAlg { poly: UniPoly::linear_root(&q).primitive(), lo: &q - Rat::one(), hi: q + Rat::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n, 1))
    }

    /// Validates that `(lo, hi)` isolates exactly one root of `poly`.
    pub fn new(poly: &UniPoly, lo: Rat, hi: Rat) -> Result<Self, Error> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if lo >= hi {
            return Err(Error::InvalidInterval);
        }
        let p = poly.squarefree();
        if p.is_constant() || p.eval(&lo).is_zero() || p.eval(&hi).is_zero() {
            return Err(Error::InvalidInterval);
        }
        if Sturm::new(&p).count(&lo, &hi) != 1 {
            return Err(Error::InvalidInterval);
        }
        Ok(Self::normalized(p, lo, hi))
    }

    /// Trusted constructor: `poly` square-free with a single root in `(lo, hi)`.
    pub(crate) fn from_parts(poly: UniPoly, lo: Rat, hi: Rat) -> Self {
        Self::normalized(poly.primitive(), lo, hi)
    }

    fn normalized(poly: UniPoly, lo: Rat, hi: Rat) -> Self {
        if poly.degree() == Some(1) {
            let q = -poly.coeff(0) / poly.coeff(1);
            return Self::from_rat(q);
        }
        RealAlg { poly, lo, hi }
    }

    /// All real roots of `p`, ascending.
    pub fn roots_of(p: &UniPoly) -> Result<Vec<RealAlg>, Error> {
        let sf = p.squarefree();
        Ok(sturm_isolate(p)?.into_iter().map(|(lo, hi)| Self::normalized(sf.clone(), lo, hi)).collect())
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.poly.degree() == Some(1) {
            Some(-self.poly.coeff(0) / self.poly.coeff(1))
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.poly.degree() == Some(1)
    }

    /// Halve the isolating interval once. Collapses to an exact rational if
    /// the midpoint is the root.
    pub fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        match bisect(&self.poly, &self.lo, &self.hi) {
            Ok((lo, hi)) => {
                self.lo = lo;
                self.hi = hi;
            }
            Err(q) => *self = Self::from_rat(q),
        }
    }

    /// Shrink the interval below `eps` (rationals are left as they are).
    pub fn refine(&mut self, eps: &Rat) {
        while !self.is_rational() && &(&self.hi - &self.lo) >= eps {
            self.bisect();
        }
    }

    /// Bounds `[lo, hi]` valid for the number, exact for rationals.
    pub fn bounds(&self) -> (Rat, Rat) {
        match self.as_rational() {
            Some(q) => (q.clone(), q),
            None => (self.lo.clone(), self.hi.clone()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.as_rational() {
            return rat_to_f64(&q);
        }
        let mut x = self.clone();
        let eps = Rat::new(1.into(), num_bigint::BigInt::one() << 60usize);
        x.refine(&eps);
        let (lo, hi) = x.bounds();
        rat_to_f64(&((lo + hi) / rat(2, 1)))
    }

    /// Exact sign of the number itself.
    pub fn sign(&self) -> Sign {
        alg_sign(&UniPoly::x(), self)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        match alg_sign(&UniPoly::linear_root(q), self) {
            Sign::Neg => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Pos => Ordering::Greater,
        }
    }

    /// Exact equality test via a common factor with a root in both intervals.
    pub fn equals(&self, other: &RealAlg) -> bool {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a == b;
        }
        let g = self.poly.gcd(&other.poly);
        if g.is_constant() {
            return false;
        }
        let (alo, ahi) = self.bounds();
        let (blo, bhi) = other.bounds();
        let lo = if alo > blo { alo } else { blo };
        let hi = if ahi < bhi { ahi } else { bhi };
        if lo > hi {
            return false;
        }
        if lo == hi {
            return g.eval(&lo).is_zero();
        }
        // Endpoints may be roots when one side is rational; check them first.
        if g.eval(&lo).is_zero() || g.eval(&hi).is_zero() {
            return self.cmp_rat_eq(&lo) && other.cmp_rat_eq(&lo) || self.cmp_rat_eq(&hi) && other.cmp_rat_eq(&hi);
        }
        Sturm::new(&g.squarefree()).count(&lo, &hi) > 0
    }

    fn cmp_rat_eq(&self, q: &Rat) -> bool {
        self.cmp_rat(q) == Ordering::Equal
    }

    /// Exact total order.
    pub fn cmp_exact(&self, other: &RealAlg) -> Ordering {
        if self.equals(other) {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let (alo, ahi) = a.bounds();
            let (blo, bhi) = b.bounds();
            if ahi <= blo {
                return Ordering::Less;
            }
            if bhi <= alo {
                return Ordering::Greater;
            }
            a.bisect();
            b.bisect();
        }
    }

    pub fn neg(&self) -> RealAlg {
        if let Some(q) = self.as_rational() {
            return Self::from_rat(-q);
        }
        RealAlg { poly: self.poly.reflect().primitive(), lo: -&self.hi, hi: -&self.lo }
    }
}

impl fmt::Debug for RealAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{}", q),
            None => write!(f, "root({}; {}, {}) ~ {}", self.poly, self.lo, self.hi, self.to_f64()),
        }
    }
}

/// Interval extension of `f` over `[lo, hi]`.
pub fn eval_interval(f: &UniPoly, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut acc_lo = Rat::zero();
    let mut acc_hi = Rat::zero();
    for c in f.coeffs().iter().rev() {
        let cands = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mut mn = cands[0].clone();
        let mut mx = cands[0].clone();
        for v in &cands[1..] {
            if *v < mn {
                mn = v.clone();
            }
            if *v > mx {
                mx = v.clone();
            }
        }
        acc_lo = mn + c;
        acc_hi = mx + c;
    }
    (acc_lo, acc_hi)
}

fn interval_sign(lo: &Rat, hi: &Rat) -> Option<Sign> {
    if lo.is_positive() {
        Some(Sign::Pos)
    } else if hi.is_negative() {
        Some(Sign::Neg)
    } else {
        None
    }
}

/// Whether `f` vanishes at `x`, decided exactly by a common factor of `f`
/// and the defining polynomial having a root in the isolating interval.
pub fn alg_is_zero(f: &UniPoly, x: &RealAlg) -> bool {
    if let Some(q) = x.as_rational() {
        return f.eval(&q).is_zero();
    }
    if f.is_zero() {
        return true;
    }
    let g = f.gcd(&x.poly);
    if g.is_constant() {
        return false;
    }
    Sturm::new(&g).count(&x.lo, &x.hi) > 0
}

/// Exact sign of `f(x)`.
pub fn alg_sign(f: &UniPoly, x: &RealAlg) -> Sign {
    alg_sign_with_fuel(f, x, SIGN_FUEL)
}

/// `alg_sign` with an explicit bisection budget; once it is spent the sign is
/// read off a Sturm-Tarski query, which is exact.
pub fn alg_sign_with_fuel(f: &UniPoly, x: &RealAlg, fuel: usize) -> Sign {
    if let Some(q) = x.as_rational() {
        return Sign::of(&f.eval(&q));
    }
    if f.is_zero() {
        return Sign::Zero;
    }
    let f = f.rem(&x.poly);
    if f.is_constant() {
        return Sign::of(&f.coeff(0));
    }
    let mut y = x.clone();
    let mut zero_checked = false;
    for step in 0..fuel {
        if let Some(q) = y.as_rational() {
            return Sign::of(&f.eval(&q));
        }
        let (lo, hi) = eval_interval(&f, &y.lo, &y.hi);
        if let Some(s) = interval_sign(&lo, &hi) {
            return s;
        }
        if step == ZERO_TEST_AFTER {
            if alg_is_zero(&f, x) {
                return Sign::Zero;
            }
            zero_checked = true;
        }
        y.bisect();
    }
    if let Some(q) = y.as_rational() {
        return Sign::of(&f.eval(&q));
    }
    if !zero_checked && alg_is_zero(&f, x) {
        return Sign::Zero;
    }
    let t = Sturm::tarski(&x.poly, &f);
    match t.count(&x.lo, &x.hi) {
        1 => Sign::Pos,
        -1 => Sign::Neg,
        _ => Sign::Zero,
    }
}
