//! Real solutions of zero-dimensional bivariate systems.

use alloc::vec::Vec;

use super::groebner::{groebner_lex, reduce_mod};
use super::{rat, AlgPoint, BiPoly, Rat, RealAlg, UniPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Spherical,
    General,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Spherical => "spherical",
            Mode::General => "general",
        }
    }
}

impl core::str::FromStr for Mode {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, crate::Error> {
        match s {
            "spherical" => Ok(Mode::Spherical),
            "general" => Ok(Mode::General),
            _ => Err(crate::Error::Parse(alloc::format!("unknown mode {s:?}"))),
        }
    }
}

/// A certified real common zero of a polynomial system.
#[derive(Clone, Debug)]
pub struct SolutionPoint {
    pub point: AlgPoint,
    pub a: RealAlg,
    pub b: RealAlg,
    /// Polynomials verified to vanish exactly at `(a, b)`.
    pub certificate: Vec<BiPoly>,
    pub mode: Mode,
}

impl SolutionPoint {
    /// Certify `point` against `gens`; `None` if some generator does not vanish.
    pub fn certify(point: AlgPoint, gens: &[BiPoly], mode: Mode) -> Option<Self> {
        if !gens.iter().all(|g| point.vanishes(g)) {
            return None;
        }
        Some(Self::trusted(point, gens.to_vec(), mode))
    }

    pub(crate) fn trusted(point: AlgPoint, certificate: Vec<BiPoly>, mode: Mode) -> Self {
        let a = point.a_real();
        let b = point.b_real();
        SolutionPoint { point, a, b, certificate, mode }
    }
}

#[derive(Clone, Debug)]
pub enum BivariateSolution {
    Points(Vec<SolutionPoint>),
    PositiveDimensional,
    Inconsistent,
}

fn is_unit(gb: &[BiPoly]) -> bool {
    gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero()
}

/// The univariate-in-`b` element of a reduced lex basis, if any.
fn eliminant(gb: &[BiPoly]) -> Option<UniPoly> {
    gb.iter()
        .find(|g| g.is_univariate_in(Var::B) && !g.is_constant())
        .map(|g| g.coeffs_in(Var::B).iter().map(|c| c.coeff(0)).collect::<Vec<Rat>>())
        .map(UniPoly::from_coeffs)
}

/// Substitute `a -> pa`, `b -> pb` with bivariate images.
fn substitute_bi(f: &BiPoly, pa: &BiPoly, pb: &BiPoly) -> BiPoly {
    let mut apow = alloc::vec![BiPoly::one()];
    let mut bpow = alloc::vec![BiPoly::one()];
    for k in 1..=f.degree_in(Var::A) as usize {
        apow.push(&apow[k - 1] * pa);
    }
    for k in 1..=f.degree_in(Var::B) as usize {
        bpow.push(&bpow[k - 1] * pb);
    }
    let mut acc = BiPoly::zero();
    for (&(i, j), c) in f.terms() {
        acc = &acc + &(&apow[i as usize] * &bpow[j as usize]).scale(c);
    }
    acc
}

/// `{g(b), a - h(b)}`: returns `(g, h)`.
fn shape(gb: &[BiPoly]) -> Option<(UniPoly, UniPoly)> {
    if gb.len() != 2 {
        return None;
    }
    let g = eliminant(gb)?;
    let other = gb.iter().find(|p| !p.is_univariate_in(Var::B))?;
    let (lm, _) = other.leading()?;
    if lm != (1, 0) {
        return None;
    }
    let coeffs = other.coeffs_in(Var::A);
    if coeffs.len() != 2 || !coeffs[1].is_constant() {
        return None;
    }
    let h = (-&coeffs[0]).scale(&coeffs[1].coeff(0).recip());
    Some((g, h))
}

/// All real common zeros of `gens`.
///
/// The ideal is made radical by adjoining the square-free parts of both
/// eliminants, then brought into shape position by a linear change
/// `a = t - c*b` so that each point is `(t - c*h(t), h(t))` for a real root
/// `t` of a single univariate polynomial. Every returned point is checked
/// exactly against every generator.
pub fn solve_bivariate_real(gens: &[BiPoly], mode: Mode) -> BivariateSolution {
    let gb = groebner_lex(gens);
    if is_unit(&gb) {
        return BivariateSolution::Inconsistent;
    }
    let Some(eb) = eliminant(&gb) else {
        return BivariateSolution::PositiveDimensional;
    };
    let Some(rad) = radical_of_basis(&gb, &eb) else {
        return BivariateSolution::PositiveDimensional;
    };

    for c in 0i64.. {
        // New variables: A := b, B := t with a = t - c*b.
        let (g, pa, pb) = if c == 0 {
            let Some((g, h)) = shape(&rad) else { continue };
            (g, h, UniPoly::x())
        } else {
            let c = rat(c, 1);
            let pa = &BiPoly::b() - &BiPoly::a().scale(&c);
            let changed: Vec<BiPoly> = rad.iter().map(|f| substitute_bi(f, &pa, &BiPoly::a())).collect();
            let Some((g, h)) = shape(&groebner_lex(&changed)) else { continue };
            let a_of_t = &UniPoly::x() - &h.scale(&c);
            (g, a_of_t, h)
        };
        let mut out = Vec::new();
        for t in RealAlg::roots_of(&g).unwrap_or_default() {
            let p = AlgPoint::new(t, pa.clone(), pb.clone());
            if let Some(s) = SolutionPoint::certify(p, gens, mode) {
                out.push(s);
            }
        }
        return BivariateSolution::Points(out);
    }
    unreachable!()
}

fn radical_of_basis(gb: &[BiPoly], eb: &UniPoly) -> Option<Vec<BiPoly>> {
    let swapped: Vec<BiPoly> = gb.iter().map(|g| g.swap_vars()).collect();
    let ea = eliminant(&groebner_lex(&swapped))?;
    let mut rad = gb.to_vec();
    rad.push(BiPoly::from_uni(&eb.squarefree(), Var::B));
    rad.push(BiPoly::from_uni(&ea.squarefree(), Var::A));
    Some(groebner_lex(&rad))
}

/// Whether `f` lies in the ideal generated by `gens`.
pub fn in_ideal(f: &BiPoly, gens: &[BiPoly]) -> bool {
    reduce_mod(f, &groebner_lex(gens)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_point() {
        let gens = [&BiPoly::a() - &BiPoly::b(), &(&BiPoly::a() + &BiPoly::b()) - &BiPoly::one()];
        let BivariateSolution::Points(pts) = solve_bivariate_real(&gens, Mode::Spherical) else { panic!() };
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].a.as_rational(), Some(rat(1, 2)));
        assert_eq!(pts[0].b.as_rational(), Some(rat(1, 2)));
    }

    #[test]
    fn no_real_points() {
        let f = &(&BiPoly::a().pow(2) + &BiPoly::b().pow(2)) + &BiPoly::one();
        let g = &BiPoly::a() - &BiPoly::b();
        match solve_bivariate_real(&[f.clone(), g], Mode::Spherical) {
            BivariateSolution::Points(p) => assert!(p.is_empty()),
            other => panic!("{:?}", other),
        }
        assert!(matches!(solve_bivariate_real(&[f], Mode::Spherical), BivariateSolution::PositiveDimensional));
    }

    #[test]
    fn points_sharing_a_coordinate() {
        // b = 1/2 and 4a^2 - 2a - 1 = 0: two points with equal b
        let half = BiPoly::constant(rat(1, 2));
        let gens = [
            &BiPoly::b() - &half,
            &(&BiPoly::a().pow(2).scale(&rat(4, 1)) - &BiPoly::a().scale(&rat(2, 1))) - &BiPoly::one(),
        ];
        let BivariateSolution::Points(pts) = solve_bivariate_real(&gens, Mode::Spherical) else { panic!() };
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(p.b.as_rational(), Some(rat(1, 2)));
            assert!(!p.a.is_rational());
        }
    }
}
