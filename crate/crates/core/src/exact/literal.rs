//! Text form of real algebraic numbers.
//!
//! ```text
//! RATIONAL := <int>/<posint> | <int>
//! QUAD     := (<int> + <int>*sqrt(<posint>))/<posint>
//! ROOT     := root([c0,c1,...,ck]; <lo>, <hi>)
//! ```

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::minimize;
use super::{Rat, RealAlg, UniPoly};
use crate::Error;

pub fn render_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Render `x` using the smallest defining polynomial that can be certified.
pub fn render(x: &RealAlg) -> String {
    let m = minimize(x);
    if let Some(q) = m.as_rational() {
        return render_rat(&q);
    }
    if m.poly().degree() == Some(2) {
        return render_quad(&m);
    }
    let coeffs: Vec<String> = m.poly().int_coeffs().iter().map(|c| c.to_string()).collect();
    let (lo, hi) = m.interval();
    format!("root([{}]; {}, {})", coeffs.join(","), render_rat(lo), render_rat(hi))
}

/// `n = k^2 * D` with `D` square-free; returns `(k, D)`.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut d = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= d && p < BigInt::from(1_000_000) {
        let sq = &p * &p;
        while (&d % &sq).is_zero() {
            d /= &sq;
            k *= &p;
        }
        p += 1;
    }
    let r = d.sqrt();
    if &r * &r == d {
        k *= &r;
        d = BigInt::one();
    }
    (k, d)
}

fn render_quad(x: &RealAlg) -> String {
    let c = x.poly().int_coeffs();
    let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
    let disc: BigInt = c1 * c1 - BigInt::from(4) * c2 * c0;
    let (k, d) = split_square(&disc);
    // Roots (-c1 ± k sqrt(d)) / (2 c2); pick the sign by comparing with the midpoint.
    let mid = Rat::new(-c1.clone(), BigInt::from(2) * c2);
    let sign = if x.cmp_rat(&mid) == Ordering::Greater { 1 } else { -1 };
    let mut p = -c1.clone();
    let mut q: BigInt = k * BigInt::from(sign);
    let mut s = BigInt::from(2) * c2;
    if s.is_negative() {
        p = -p;
        q = -q;
        s = -s;
    }
    let g = p.gcd(&q).gcd(&s);
    format!("({} + {}*sqrt({}))/{}", p / &g, q / &g, d, s / &g)
}

fn bad(s: &str) -> Error {
    Error::Parse(format!("not an algebraic literal: {s:?}"))
}

pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad(s));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if !d.is_positive() {
                return Err(bad(s));
            }
            Ok(Rat::new(int(n)?, d))
        }
        None => Ok(Rat::from_integer(int(s)?)),
    }
}

/// Parse any of the three literal forms.
pub fn parse(s: &str) -> Result<RealAlg, Error> {
    let t = s.trim();
    if let Some(body) = t.strip_prefix("root(").and_then(|r| r.strip_suffix(')')) {
        let (list, rest) = body.split_once(';').ok_or_else(|| bad(s))?;
        let list = list.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| bad(s))?;
        let coeffs = list
            .split(',')
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| bad(s)))
            .collect::<Result<Vec<_>, _>>()?;
        let (lo, hi) = rest.split_once(',').ok_or_else(|| bad(s))?;
        return RealAlg::new(&UniPoly::from_bigints(&coeffs), parse_rat(lo)?, parse_rat(hi)?);
    }
    if let Some(body) = t.strip_prefix('(') {
        let (num, s_den) = body.rsplit_once(")/").ok_or_else(|| bad(s))?;
        let (p, rest) = num.split_once(" + ").ok_or_else(|| bad(s))?;
        let (q, rad) = rest.split_once("*sqrt(").ok_or_else(|| bad(s))?;
        let rad = rad.strip_suffix(')').ok_or_else(|| bad(s))?;
        let int = |v: &str| v.trim().parse::<BigInt>().map_err(|_| bad(s));
        let (p, q, d, den) = (int(p)?, int(q)?, int(rad)?, int(s_den)?);
        if !d.is_positive() || !den.is_positive() {
            return Err(bad(s));
        }
        return Ok(quad_value(&p, &q, &d, &den));
    }
    Ok(RealAlg::from_rat(parse_rat(t)?))
}

/// The real number `(p + q sqrt(d)) / s`.
pub fn quad_value(p: &BigInt, q: &BigInt, d: &BigInt, s: &BigInt) -> RealAlg {
    let (k, d) = split_square(d);
    let q = q * k;
    if q.is_zero() || d.is_one() {
        return RealAlg::from_rat(Rat::new(p + q * d.sqrt(), s.clone()));
    }
    // (s x - p)^2 = q^2 d
    let poly = UniPoly::from_bigints(&[p * p - &q * &q * &d, BigInt::from(-2) * p * s, s * s]);
    let roots = RealAlg::roots_of(&poly).expect("nonzero");
    let idx = if q.is_positive() { 1 } else { 0 };
    roots[idx].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rationals() {
        assert_eq!(render(&RealAlg::from_rat(rat(1, 6))), "1/6");
        assert_eq!(render(&RealAlg::from_rat(rat(-2, 3))), "-2/3");
        assert_eq!(render(&RealAlg::from_int(0)), "0");
        assert_eq!(parse("-2/3").unwrap().as_rational(), Some(rat(-2, 3)));
    }

    #[test]
    fn quadratics() {
        let roots = RealAlg::roots_of(&UniPoly::from_ints(&[1, -3, 1])).unwrap();
        assert_eq!(render(&roots[1]), "(3 + 1*sqrt(5))/2");
        assert_eq!(render(&roots[0]), "(3 + -1*sqrt(5))/2");
        let back = parse("(3 + 1*sqrt(5))/2").unwrap();
        assert!(back.equals(&roots[1]));
        // (1 + sqrt 5)/4 is a root of 4x^2 - 2x - 1
        let r = RealAlg::roots_of(&UniPoly::from_ints(&[-1, -2, 4])).unwrap();
        assert_eq!(render(&r[1]), "(1 + 1*sqrt(5))/4");
        // sqrt(8)/2 = sqrt(2)
        assert!(parse("(0 + 1*sqrt(8))/2").unwrap().equals(&RealAlg::roots_of(&UniPoly::from_ints(&[-2, 0, 1])).unwrap()[1]));
    }

    #[test]
    fn root_literal_round_trip() {
        let p = UniPoly::from_ints(&[-1, 10, 32, 8]);
        for r in RealAlg::roots_of(&p).unwrap() {
            let s = render(&r);
            assert!(s.starts_with("root([-1,10,32,8]; "), "{s}");
            assert!(parse(&s).unwrap().equals(&r));
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("root([1,0,-2]; 1, 2)").is_err());
        assert!(parse("sqrt(2)").is_err());
    }
}
