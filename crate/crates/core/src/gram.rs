//! Symbolic Gram and Menger matrices, principal minors, characteristic
//! coefficients, and exact PSD/rank decisions at algebraic points.

use alloc::vec;
use alloc::vec::Vec;

use crate::exact::ring::{char_coeffs_fl, det_bareiss, subsets, submatrix, BiRing, Matrix, QuotRing, UniRing};
use crate::exact::{alg_sign, rat, AlgPoint, BiPoly, Rat, RealAlg, Sign, SolutionPoint, UniPoly};
use crate::graph::Graph;
use crate::Error;

/// Square symmetric matrix of bivariate polynomials in `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Matrix<BiPoly>,
}

impl PolyMatrix {
    pub fn new(entries: Matrix<BiPoly>) -> Self {
        let n = entries.len();
        assert!(n >= 1 && entries.iter().all(|r| r.len() == n), "matrix must be square");
        for i in 0..n {
            for j in 0..i {
                assert_eq!(entries[i][j], entries[j][i], "matrix must be symmetric");
            }
        }
        PolyMatrix { entries }
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &Matrix<BiPoly> {
        &self.entries
    }

    pub fn swap_vars(&self) -> PolyMatrix {
        PolyMatrix { entries: self.entries.iter().map(|r| r.iter().map(BiPoly::swap_vars).collect()).collect() }
    }

    pub fn eval_rat(&self, a: &Rat, b: &Rat) -> Matrix<Rat> {
        self.entries.iter().map(|r| r.iter().map(|e| e.eval(a, b)).collect()).collect()
    }

    /// Entries as elements of `Q(t)` at the point.
    pub fn eval_at(&self, p: &AlgPoint) -> Matrix<UniPoly> {
        self.entries.iter().map(|r| r.iter().map(|e| p.eval(e)).collect()).collect()
    }
}

/// `G(a, b) = a A + b (J - I - A) + I`.
pub fn candidate_gram(g: &Graph) -> PolyMatrix {
    let n = g.order();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, g.has_edge(i, j)) {
                    (true, _) => BiPoly::one(),
                    (false, true) => BiPoly::a(),
                    (false, false) => BiPoly::b(),
                })
                .collect()
        })
        .collect();
    PolyMatrix { entries }
}

/// Gram matrix of `v_i - v_n` for squared distances `a` on edges and `b` on
/// non-edges: `(D_in + D_jn - D_ij) / 2`.
pub fn menger_matrix(g: &Graph) -> Result<PolyMatrix, Error> {
    let n = g.order();
    if n < 2 {
        return Err(Error::BadSize { order: n, k: 1 });
    }
    let d = |i: usize, j: usize| {
        if i == j {
            BiPoly::zero()
        } else if g.has_edge(i, j) {
            BiPoly::a()
        } else {
            BiPoly::b()
        }
    };
    let half = rat(1, 2);
    let base = n - 1;
    let entries = (0..base)
        .map(|i| (0..base).map(|j| (&(&d(i, base) + &d(j, base)) - &d(i, j)).scale(&half)).collect())
        .collect();
    Ok(PolyMatrix { entries })
}

/// All principal `k x k` minors, in lexicographic order of the index sets.
pub fn principal_minors(m: &PolyMatrix, k: usize) -> Result<Vec<BiPoly>, Error> {
    if k == 0 || k > m.order() {
        return Err(Error::BadSize { order: m.order(), k });
    }
    Ok(subsets(m.order(), k).iter().map(|s| det_bareiss(&BiRing, &submatrix(&m.entries, s, s))).collect())
}

/// `e[k]` = sum of the principal `k`-minors; `det(tI - M) = sum (-1)^k e[k] t^(n-k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCoeffs {
    pub e: Vec<BiPoly>,
}

pub fn char_coeffs(m: &PolyMatrix) -> CharCoeffs {
    CharCoeffs { e: char_coeffs_fl(&BiRing, &m.entries) }
}

/// The same coefficients by summing principal minors directly.
pub fn char_coeffs_by_minors(m: &PolyMatrix) -> CharCoeffs {
    let mut e = vec![BiPoly::one()];
    for k in 1..=m.order() {
        let minors = principal_minors(m, k).expect("k in range");
        e.push(minors.iter().fold(BiPoly::zero(), |acc, p| &acc + p));
    }
    CharCoeffs { e }
}

/// Exact signs of the characteristic coefficients of a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// `signs[k]` is the sign of `e[k]`.
    pub signs: Vec<Sign>,
}

impl Spectrum {
    pub fn is_psd(&self) -> bool {
        self.signs.iter().all(|&s| s != Sign::Neg)
    }

    /// Largest `k` with `e[k] != 0`; for a real symmetric matrix this is its rank.
    pub fn rank(&self) -> usize {
        self.signs.iter().rposition(|&s| s != Sign::Zero).unwrap_or(0)
    }
}

/// Spectrum of a symmetric matrix with entries in `Q(t)`.
pub fn spectrum_in(m: &Matrix<UniPoly>, t: &RealAlg) -> Spectrum {
    let e = char_coeffs_fl(&QuotRing { modulus: t.poly().clone() }, m);
    Spectrum { signs: e.iter().map(|x| if x.is_zero() { Sign::Zero } else { alg_sign(x, t) }).collect() }
}

pub fn spectrum_rat(m: &Matrix<Rat>) -> Spectrum {
    let e = char_coeffs_fl(&crate::exact::ring::Rationals, m);
    Spectrum { signs: e.iter().map(Sign::of).collect() }
}

/// Spectrum of `M` at an algebraic point.
pub fn spectrum_at(m: &PolyMatrix, p: &AlgPoint) -> Spectrum {
    spectrum_in(&m.eval_at(p), &p.t)
}

/// `(is_psd, rank)` at a solution point; the rank is reported only for PSD
/// matrices.
pub fn psd_rank_at(m: &PolyMatrix, p: &SolutionPoint) -> (bool, Option<usize>) {
    let s = spectrum_at(m, &p.point);
    let psd = s.is_psd();
    (psd, psd.then(|| s.rank()))
}

// ---------------------------------------------------------------------------
// Univariate forms after fixing the scale.

/// `D(r)`: zero diagonal, `1` on edges and `r` on non-edges.
pub fn ratio_distance_matrix(g: &Graph) -> Matrix<UniPoly> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, g.has_edge(i, j)) {
                    (true, _) => UniPoly::zero(),
                    (false, true) => UniPoly::one(),
                    (false, false) => UniPoly::x(),
                })
                .collect()
        })
        .collect()
}

/// Menger matrix with `a = 1` and `b = r`.
pub fn ratio_menger_matrix(g: &Graph) -> Matrix<UniPoly> {
    let d = ratio_distance_matrix(g);
    let n = g.order();
    let base = n - 1;
    let half = rat(1, 2);
    (0..base)
        .map(|i| (0..base).map(|j| (&(&d[i][base] + &d[j][base]) - &d[i][j]).scale(&half)).collect())
        .collect()
}

/// For the principal block `D_S`: `(det D_S, sum of the entries of adj D_S)`.
///
/// With these, `det(J - l D_S) = (-l)^(k-1) (c_S - l d_S)`.
pub fn det_and_adjugate_sum(d: &Matrix<UniPoly>, s: &[usize]) -> (UniPoly, UniPoly) {
    let ds = submatrix(d, s, s);
    let det = det_bareiss(&UniRing, &ds);
    let k = s.len();
    let mut bordered = vec![vec![UniPoly::one(); k + 1]; k + 1];
    bordered[0][0] = UniPoly::zero();
    for i in 0..k {
        for j in 0..k {
            bordered[i + 1][j + 1] = ds[i][j].clone();
        }
    }
    (det, -&det_bareiss(&UniRing, &bordered))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{det_cofactor, rank_rat, Rationals};
    use num_traits::Zero;
    use crate::graph::decode;

    fn a() -> BiPoly {
        BiPoly::a()
    }

    #[test]
    fn small_gram_matrices() {
        let k2 = Graph::complete(2);
        assert_eq!(candidate_gram(&k2).entry(0, 1), &a());
        assert_eq!(candidate_gram(&Graph::empty(2)).entry(0, 1), &BiPoly::b());
        let g = decode("abaabbabab", 5).unwrap();
        assert_eq!(candidate_gram(&g.complement()), candidate_gram(&g).swap_vars());
    }

    #[test]
    fn menger_examples() {
        let m = menger_matrix(&Graph::complete(3)).unwrap();
        assert_eq!(m.entry(0, 0), &a());
        assert_eq!(m.entry(0, 1), &a().scale(&rat(1, 2)));
        assert_eq!(menger_matrix(&Graph::complete(2)).unwrap().entries(), &vec![vec![a()]]);
    }

    #[test]
    fn k3_determinant() {
        let m = candidate_gram(&Graph::complete(3));
        let one = BiPoly::one();
        let expected = &(&(&one - &a()) * &(&one - &a())) * &(&one + &a().scale(&rat(2, 1)));
        assert_eq!(principal_minors(&m, 3).unwrap(), vec![expected]);
        assert_eq!(principal_minors(&m, 1).unwrap(), vec![one.clone(), one.clone(), one]);
        assert_eq!(principal_minors(&m, 4), Err(Error::BadSize { order: 3, k: 4 }));
    }

    #[test]
    fn char_coeffs_two_ways() {
        let g = decode("abaabbabab", 5).unwrap();
        let m = candidate_gram(&g);
        assert_eq!(char_coeffs(&m), char_coeffs_by_minors(&m));
        let k2 = char_coeffs(&candidate_gram(&Graph::complete(2)));
        assert_eq!(k2.e[2], &BiPoly::one() - &(&a() * &a()));
        let m = menger_matrix(&g).unwrap();
        assert_eq!(char_coeffs(&m), char_coeffs_by_minors(&m));
    }

    #[test]
    fn adjugate_identity() {
        let g = decode("abaabbabab", 5).unwrap();
        let d = ratio_distance_matrix(&g);
        let s = [0, 2, 3, 4];
        let (det, c) = det_and_adjugate_sum(&d, &s);
        // det(J - l D_S) at r = 3, l = 2
        let r = rat(3, 1);
        let l = rat(2, 1);
        let m: Matrix<Rat> = s
            .iter()
            .map(|&i| s.iter().map(|&j| Rat::from_integer(1.into()) - &l * d[i][j].eval(&r)).collect())
            .collect();
        let lhs = det_cofactor(&Rationals, &m);
        let rhs = (-&l) * (-&l) * (-&l) * (c.eval(&r) - &l * det.eval(&r));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn spectrum_of_rational_points() {
        // K2 at a = 2 is indefinite
        let s = spectrum_rat(&candidate_gram(&Graph::complete(2)).eval_rat(&rat(2, 1), &Rat::zero()));
        assert!(!s.is_psd());
        // octahedron at (0, -1): rank 3
        let oct = decode("aaaaababaabaaaa", 6).unwrap();
        let m = candidate_gram(&oct).eval_rat(&Rat::zero(), &rat(-1, 1));
        let s = spectrum_rat(&m);
        assert!(s.is_psd());
        assert_eq!(s.rank(), 3);
        assert_eq!(rank_rat(&m), 3);
        let p = SolutionPoint::certify(AlgPoint::rational(Rat::zero(), rat(-1, 1)), &[], crate::exact::Mode::Spherical)
            .unwrap();
        assert_eq!(psd_rank_at(&candidate_gram(&oct), &p), (true, Some(3)));
    }
}
