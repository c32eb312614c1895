//! Exact arithmetic: rationals, polynomials, real algebraic numbers,
//! elimination and real solving of bivariate systems.

pub mod bipoly;
pub mod factor;
pub mod field;
pub mod groebner;
pub mod literal;
pub mod realalg;
pub mod resultant;
pub mod ring;
pub mod solve;
pub mod sturm;
pub mod upoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub use bipoly::{BiPoly, Var};
pub use field::AlgPoint;
pub use groebner::{groebner_lex, reduce_mod};
pub use realalg::{alg_sign, RealAlg};
pub use resultant::resultant;
pub use solve::{in_ideal, solve_bivariate_real, BivariateSolution, Mode, SolutionPoint};
pub use sturm::sturm_isolate;
pub use upoly::UniPoly;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rat = BigRational;

/// `n/d` as a rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => n / d,
        _ => {
            // Shift both parts down so the quotient fits.
            let nb = q.numer().bits() as i64;
            let db = q.denom().bits() as i64;
            let shift_n = (nb - 900).max(0) as usize;
            let shift_d = (db - 900).max(0) as usize;
            let n = (q.numer() >> shift_n).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift_d).to_f64().unwrap_or(1.0);
            n / d * libm::exp2((shift_n as f64) - (shift_d as f64))
        }
    }
}

/// Sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(q: &Rat) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn of_int(q: &BigInt) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn neg(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }
}

/// Simplest rational (smallest denominator, then smallest magnitude
/// numerator) in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    use num_traits::One;
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    // 0 < lo <= hi: continued fraction descent.
    let fl = lo.floor();
    if fl < *lo {
        if fl.clone() + Rat::one() <= *hi {
            return fl + Rat::one();
        }
    } else {
        return fl;
    }
    // lo and hi share the integer part fl; recurse on the reciprocals of the
    // fractional parts (order flips).
    let lo_f = lo - &fl;
    let hi_f = hi - &fl;
    let inner = simplest_between(&hi_f.recip(), &lo_f.recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_between(&rat(3, 10), &rat(34, 100)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-7, 10), &rat(-6, 10)), rat(-2, 3));
        assert_eq!(simplest_between(&rat(-1, 10), &rat(1, 10)), rat(0, 1));
        assert_eq!(simplest_between(&rat(5, 2), &rat(5, 2)), rat(5, 2));
    }

    #[test]
    fn f64_conversion_of_huge_values() {
        let big = Rat::new(BigInt::from(1) << 2000usize, BigInt::from(3) << 1999usize);
        assert!((rat_to_f64(&big) - 2.0 / 3.0).abs() < 1e-12);
    }
}
