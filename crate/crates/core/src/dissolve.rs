//! Per-graph decision procedures for spherical and general two-distance
//! representations.
//!
//! Both solvers fix the scale and work with the single ratio `r` of the two
//! squared distances. In the spherical case `G(a, b) = J - l D(r)` with
//! `a = 1 - l`, `b = 1 - l r`, and every principal minor factors as
//! `(-l)^(k-1) (c_S(r) - l d_S(r))`; eliminating `l` leaves univariate
//! conditions on `r`. In the general case `a = 1` and `b = r` directly.
//! Candidate ratios are roots of a gcd of necessary conditions and are then
//! decided exactly in `Q(r)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::One;

use crate::exact::factor::minimize;
use crate::exact::field::invert_at;
use crate::exact::realalg::alg_is_zero;
use crate::exact::ring::{char_coeffs_fl, det_bareiss, det_cofactor, subsets, submatrix, Matrix, QuotRing, UniRing};
use crate::exact::{alg_sign, int, AlgPoint, Mode, Rat, RealAlg, Sign, SolutionPoint, UniPoly};
use crate::gram::{
    candidate_gram, det_and_adjugate_sum, menger_matrix, principal_minors, ratio_distance_matrix,
    ratio_menger_matrix, spectrum_at, spectrum_in, PolyMatrix, Spectrum,
};
use crate::graph::{is_self_complementary, Graph};
use crate::Error;

/// Which of `G` and its complement a solution represents: the one whose
/// edges carry the shorter distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Graph,
    Complement,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Graph => "graph",
            Orientation::Complement => "complement",
        }
    }
}

impl core::str::FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "graph" => Ok(Orientation::Graph),
            "complement" => Ok(Orientation::Complement),
            _ => Err(Error::Parse(alloc::format!("unknown orientation {s:?}"))),
        }
    }
}

/// A spherical solution `(a, b)` of the rank system.
#[derive(Clone, Debug)]
pub struct SphericalSolution {
    pub point: SolutionPoint,
    /// `r = (1 - b) / (1 - a)`, the squared-distance ratio of non-edges to edges.
    pub ratio: RealAlg,
    pub psd: bool,
    pub rank: usize,
    pub orientation: Orientation,
    pub jspherical: bool,
    /// Taken as the lowest-rank point of a line of solutions.
    pub from_line: bool,
}

#[derive(Clone, Debug)]
pub struct SphericalVerdict {
    pub graph: Graph,
    pub d: usize,
    /// Admissible solutions: PSD with rank at most `d`.
    pub solutions: Vec<SphericalSolution>,
    /// Real solutions with rank at most `d` that are not PSD.
    pub rejected: Vec<SphericalSolution>,
    /// Ratios at which every `l` gives rank at most `d`.
    pub lines: Vec<RealAlg>,
    pub survived: bool,
    pub indefinite_only: bool,
    pub self_complementary: bool,
}

/// A general solution with the edge distance normalised to `a = 1`.
#[derive(Clone, Debug)]
pub struct GeneralSolution {
    pub point: SolutionPoint,
    pub b: RealAlg,
    pub psd: bool,
    pub rank: usize,
    pub orientation: Orientation,
    pub spherical: bool,
}

#[derive(Clone, Debug)]
pub struct GeneralVerdict {
    pub graph: Graph,
    pub d: usize,
    pub solutions: Vec<GeneralSolution>,
    pub rejected: Vec<GeneralSolution>,
    pub survived: bool,
    /// The rank condition holds for every `b`.
    pub continuum: bool,
    pub self_complementary: bool,
}

fn two_distance(g: &Graph) -> Result<(), Error> {
    if g.order() < 2 || g.is_complete() || g.is_empty() {
        Err(Error::NotTwoDistanceGraph)
    } else {
        Ok(())
    }
}

/// `Q(t)` for a real algebraic `t`.
struct Field {
    t: RealAlg,
}

impl Field {
    fn reduce(&self, e: &UniPoly) -> UniPoly {
        e.rem(self.t.poly())
    }

    fn mul(&self, x: &UniPoly, y: &UniPoly) -> UniPoly {
        self.reduce(&(x * y))
    }

    fn is_zero(&self, e: &UniPoly) -> bool {
        let e = self.reduce(e);
        e.is_zero() || alg_is_zero(&e, &self.t)
    }

    fn sign(&self, e: &UniPoly) -> Sign {
        let e = self.reduce(e);
        if e.is_zero() {
            Sign::Zero
        } else {
            alg_sign(&e, &self.t)
        }
    }

    fn quotient(&mut self, num: &UniPoly, den: &UniPoly) -> Option<UniPoly> {
        let inv = invert_at(&mut self.t, den)?;
        Some(self.mul(num, &inv))
    }

    /// Spectrum of `J - l D(t)`.
    fn gram_spectrum(&self, dist: &Matrix<UniPoly>, lambda: &UniPoly) -> Spectrum {
        let m: Matrix<UniPoly> = dist
            .iter()
            .map(|row| row.iter().map(|e| self.reduce(&(&UniPoly::one() - &(lambda * e)))).collect())
            .collect();
        spectrum_in(&m, &self.t)
    }
}

/// `(d_S, c_S)` for every principal block of one order, computed on demand.
struct RatioSystem {
    dist: Matrix<UniPoly>,
    orders: BTreeMap<usize, Vec<(UniPoly, UniPoly)>>,
}

impl RatioSystem {
    fn new(g: &Graph) -> Self {
        RatioSystem { dist: ratio_distance_matrix(g), orders: BTreeMap::new() }
    }

    fn order(&mut self, k: usize) -> &[(UniPoly, UniPoly)] {
        let dist = &self.dist;
        self.orders
            .entry(k)
            .or_insert_with(|| subsets(dist.len(), k).iter().map(|s| det_and_adjugate_sum(dist, s)).collect())
    }
}

/// Folds polynomials into a gcd, stopping early at a nonzero constant.
struct GcdAcc {
    g: UniPoly,
}

impl GcdAcc {
    fn new() -> Self {
        GcdAcc { g: UniPoly::zero() }
    }

    fn add(&mut self, p: &UniPoly) {
        if p.is_zero() || self.done() {
            return;
        }
        self.g = if self.g.is_zero() { p.primitive() } else { self.g.gcd(p).primitive() };
    }

    fn done(&self) -> bool {
        !self.g.is_zero() && self.g.is_constant()
    }
}

/// Real roots `r > 0`, `r != 1` of `e`.
fn ratio_roots(e: &UniPoly) -> Vec<RealAlg> {
    RealAlg::roots_of(e)
        .unwrap_or_default()
        .into_iter()
        .filter(|r| r.sign() == Sign::Pos && r.cmp_rat(&Rat::one()) != Ordering::Equal)
        .map(|r| minimize(&r))
        .collect()
}

/// Univariate polynomial whose roots contain every ratio admitting a point
/// of rank at most `d`.
fn spherical_eliminant(sys: &mut RatioSystem, d: usize) -> Result<UniPoly, Error> {
    let n = sys.dist.len();
    let mut acc = GcdAcc::new();
    // Up to three blocks with d_S != 0 serve as references for l; the pair
    // conditions also run across orders since l is shared by all of them.
    let mut bases: Vec<(UniPoly, UniPoly)> = Vec::new();
    let mut seen: Vec<(UniPoly, UniPoly)> = Vec::new();
    for k in d + 1..=n {
        for (ds, cs) in sys.order(k).to_vec() {
            if ds.is_zero() {
                acc.add(&cs);
            }
            for (dt, ct) in &bases {
                acc.add(&(&(dt * &cs) - &(&ds * ct)));
            }
            if !ds.is_zero() && bases.len() < 3 {
                for (du, cu) in &seen {
                    acc.add(&(&(&ds * cu) - &(du * &cs)));
                }
                bases.push((ds.clone(), cs.clone()));
            }
            seen.push((ds, cs));
            if acc.done() {
                return Ok(acc.g);
            }
        }
        if !acc.g.is_zero() {
            return Ok(acc.g);
        }
    }
    Err(Error::PositiveDimensionalUnexpected)
}

/// `l = c_S / d_S` from the first block of order `k` with `d_S(t) != 0`.
/// `Err(true)` when some `c_S(t) != 0` while all `d_S(t)` vanish.
fn lambda_at_order(sys: &mut RatioSystem, f: &mut Field, k: usize) -> Result<UniPoly, bool> {
    let data = sys.order(k).to_vec();
    let mut blocked = false;
    for (ds, cs) in &data {
        if !f.is_zero(ds) {
            if let Some(l) = f.quotient(cs, ds) {
                return Ok(l);
            }
        } else if !f.is_zero(cs) {
            blocked = true;
        }
    }
    Err(blocked)
}

fn jspherical_of(a: &RealAlg, b: &RealAlg) -> bool {
    let short = if a.cmp_exact(b) == Ordering::Greater { a } else { b };
    short.sign() == Sign::Zero
}

fn spherical_solution(f: &Field, lambda: &UniPoly, spectrum: &Spectrum, from_line: bool) -> SphericalSolution {
    let a = f.reduce(&(&UniPoly::one() - lambda));
    let b = f.reduce(&(&UniPoly::one() - &(lambda * &UniPoly::x())));
    let point = AlgPoint::new(f.t.clone(), a, b);
    let sp = SolutionPoint::trusted(point, Vec::new(), Mode::Spherical);
    let orientation =
        if f.t.cmp_rat(&Rat::one()) == Ordering::Greater { Orientation::Graph } else { Orientation::Complement };
    let jspherical = jspherical_of(&sp.a, &sp.b);
    SphericalSolution {
        point: sp,
        ratio: f.t.clone(),
        psd: spectrum.is_psd(),
        rank: spectrum.rank(),
        orientation,
        jspherical,
        from_line,
    }
}

/// Attach the principal-minor certificate and check it.
fn certify(point: SolutionPoint, minors: &[crate::exact::BiPoly]) -> SolutionPoint {
    SolutionPoint::certify(point.point, minors, point.mode)
        .expect("a point of rank at most d annihilates every (d+1)-minor")
}

/// Spherical representations of `g` and its complement in `R^d`.
pub fn solve_spherical(g: &Graph, d: usize) -> Result<SphericalVerdict, Error> {
    two_distance(g)?;
    let n = g.order();
    if n < d + 2 {
        return Err(Error::PositiveDimensionalUnexpected);
    }
    let mut sys = RatioSystem::new(g);
    let e = spherical_eliminant(&mut sys, d)?;
    let mut found: Vec<SphericalSolution> = Vec::new();
    let mut lines: Vec<RealAlg> = Vec::new();
    let mut survived = false;

    for r0 in ratio_roots(&e) {
        let mut f = Field { t: r0 };
        let lambda = match lambda_at_order(&mut sys, &mut f, d + 1) {
            Ok(l) => Some(l),
            Err(true) => None,
            Err(false) => {
                let two = UniPoly::constant(int(2));
                if f.gram_spectrum(&sys.dist, &UniPoly::one()).rank() <= d
                    && f.gram_spectrum(&sys.dist, &two).rank() <= d
                {
                    survived = true;
                    lines.push(f.t.clone());
                    if let Some(s) = line_representative(&mut sys, &mut f, d) {
                        found.push(s);
                    }
                    continue;
                }
                (d + 2..=n).find_map(|k| lambda_at_order(&mut sys, &mut f, k).ok())
            }
        };
        let Some(lambda) = lambda else { continue };
        if f.sign(&lambda) != Sign::Pos {
            continue;
        }
        let spectrum = f.gram_spectrum(&sys.dist, &lambda);
        if spectrum.rank() > d {
            continue;
        }
        survived = true;
        found.push(spherical_solution(&f, &lambda, &spectrum, false));
    }

    if !found.is_empty() {
        let minors = principal_minors(&candidate_gram(g), d + 1)?;
        for s in &mut found {
            s.point = certify(s.point.clone(), &minors);
        }
    }
    let (solutions, rejected): (Vec<_>, Vec<_>) = found.into_iter().partition(|s| s.psd && s.rank <= d);
    Ok(SphericalVerdict {
        graph: *g,
        d,
        indefinite_only: survived && solutions.is_empty(),
        solutions,
        rejected,
        lines,
        survived,
        self_complementary: is_self_complementary(g)?,
    })
}

/// On a line of solutions, the point where the rank drops lowest.
fn line_representative(sys: &mut RatioSystem, f: &mut Field, d: usize) -> Option<SphericalSolution> {
    for k in (1..=d).rev() {
        match lambda_at_order(sys, f, k) {
            Ok(lambda) => {
                if f.sign(&lambda) != Sign::Pos {
                    return None;
                }
                let spectrum = f.gram_spectrum(&sys.dist, &lambda);
                return Some(spherical_solution(f, &lambda, &spectrum, true));
            }
            Err(true) => return None,
            Err(false) => {}
        }
    }
    None
}

/// Rank of the bordered matrix `[[M, v], [v^T, 0]]` with `v = diag(M)`.
fn bordered_rank(m: &Matrix<UniPoly>, t: &RealAlg) -> usize {
    let k = m.len();
    let mut b = vec![vec![UniPoly::zero(); k + 1]; k + 1];
    for i in 0..k {
        for j in 0..k {
            b[i][j] = m[i][j].clone();
        }
        b[i][k] = m[i][i].clone();
        b[k][i] = m[i][i].clone();
    }
    spectrum_in(&b, t).rank()
}

fn menger_at(g: &Graph, t: &RealAlg) -> Matrix<UniPoly> {
    let f = Field { t: t.clone() };
    ratio_menger_matrix(g).iter().map(|row| row.iter().map(|e| f.reduce(e)).collect()).collect()
}

/// General (not necessarily spherical) representations of `g` and its
/// complement in `R^d`.
pub fn solve_general(g: &Graph, d: usize) -> Result<GeneralVerdict, Error> {
    two_distance(g)?;
    let n = g.order();
    let sc = is_self_complementary(g)?;
    let mut verdict = GeneralVerdict {
        graph: *g,
        d,
        solutions: Vec::new(),
        rejected: Vec::new(),
        survived: false,
        continuum: false,
        self_complementary: sc,
    };
    if n - 1 <= d {
        verdict.continuum = true;
        verdict.survived = true;
        return Ok(verdict);
    }
    let m = ratio_menger_matrix(g);
    let mut acc = GcdAcc::new();
    for s in subsets(n - 1, d + 1) {
        acc.add(&det_bareiss(&UniRing, &submatrix(&m, &s, &s)));
        if acc.done() {
            break;
        }
    }
    if acc.g.is_zero() {
        // Principal (d+1)-minors vanish identically; fall back on the exact
        // rank condition e_k = 0 for k > d.
        let e = char_coeffs_fl(&UniRing, &m);
        for ek in &e[d + 1..] {
            acc.add(ek);
        }
        if acc.g.is_zero() {
            verdict.continuum = true;
            verdict.survived = true;
            return Ok(verdict);
        }
    }
    let mut found = Vec::new();
    for r0 in ratio_roots(&acc.g) {
        let mt = menger_at(g, &r0);
        let spectrum = spectrum_in(&mt, &r0);
        if spectrum.rank() > d {
            continue;
        }
        let rank = spectrum.rank();
        let spherical = bordered_rank(&mt, &r0) == rank + 1;
        let point = AlgPoint::new(r0.clone(), UniPoly::one(), UniPoly::x());
        let orientation =
            if r0.cmp_rat(&Rat::one()) == Ordering::Greater { Orientation::Graph } else { Orientation::Complement };
        found.push(GeneralSolution {
            point: SolutionPoint::trusted(point, Vec::new(), Mode::General),
            b: r0,
            psd: spectrum.is_psd(),
            rank,
            orientation,
            spherical,
        });
    }
    verdict.survived = !found.is_empty();
    if !found.is_empty() {
        let minors = principal_minors(&menger_matrix(g)?, d + 1)?;
        for s in &mut found {
            s.point = certify(s.point.clone(), &minors);
        }
    }
    let (solutions, rejected) = found.into_iter().partition(|s| s.psd);
    verdict.solutions = solutions;
    verdict.rejected = rejected;
    Ok(verdict)
}

/// Whether an admissible general solution lies on a sphere.
pub fn is_spherical_config(g: &Graph, sol: &GeneralSolution) -> bool {
    let mt = menger_at(g, &sol.b);
    bordered_rank(&mt, &sol.b) == spectrum_in(&mt, &sol.b).rank() + 1
}

/// A verdict of either pipeline, for counting.
pub enum VerdictRef<'a> {
    Spherical(&'a SphericalVerdict),
    General(&'a GeneralVerdict),
}

/// Distinct two-distance sets contributed by the class. For a
/// self-complementary graph a solution and its mirror give the same set, so
/// only solutions oriented to the graph itself are counted.
pub fn count_sets(v: VerdictRef<'_>) -> usize {
    match v {
        VerdictRef::Spherical(s) => s
            .solutions
            .iter()
            .filter(|x| !s.self_complementary || x.orientation == Orientation::Graph)
            .count(),
        VerdictRef::General(s) => s
            .solutions
            .iter()
            .filter(|x| !s.self_complementary || x.orientation == Orientation::Graph)
            .count(),
    }
}

/// Admissible general solutions that are not spherical, counted as sets.
pub fn count_nonspherical_sets(v: &GeneralVerdict) -> usize {
    v.solutions
        .iter()
        .filter(|x| !x.spherical && (!v.self_complementary || x.orientation == Orientation::Graph))
        .count()
}

/// Independent check of a claimed solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub minors_vanish: bool,
    pub psd: bool,
    pub rank: usize,
    /// `None` when `a = b`.
    pub orientation: Option<Orientation>,
    /// Spherical mode only.
    pub jspherical: Option<bool>,
    /// General mode only.
    pub spherical: Option<bool>,
    /// The parameters lie in the mode's open box (`a, b < 1` or `a, b > 0`).
    pub in_range: bool,
}

impl ValidityReport {
    pub fn valid(&self, d: usize) -> bool {
        self.minors_vanish && self.psd && self.rank <= d && self.in_range
    }
}

/// Re-certify `(a, b)` for `g` without solving anything.
pub fn verify_point(g: &Graph, a: &RealAlg, b: &RealAlg, d: usize, mode: Mode) -> ValidityReport {
    verify_alg_point(g, &AlgPoint::from_pair(a, b), d, mode)
}

pub fn verify_alg_point(g: &Graph, p: &AlgPoint, d: usize, mode: Mode) -> ValidityReport {
    let m: PolyMatrix = match mode {
        Mode::Spherical => candidate_gram(g),
        Mode::General => match menger_matrix(g) {
            Ok(m) => m,
            Err(_) => candidate_gram(g),
        },
    };
    let at = m.eval_at(p);
    let ring = QuotRing { modulus: p.t.poly().clone() };
    let k = d + 1;
    let minors_vanish = k > at.len()
        || subsets(at.len(), k).iter().all(|s| {
            let e = det_cofactor(&ring, &submatrix(&at, s, s));
            e.is_zero() || alg_is_zero(&e, &p.t)
        });
    let spectrum = spectrum_at(&m, p);
    let (a, b) = (p.a_real(), p.b_real());
    let used_a = g.edge_count() > 0;
    let used_b = !g.is_complete();
    let orientation = match (a.cmp_exact(&b), mode) {
        _ if !(used_a && used_b) => None,
        (Ordering::Equal, _) => None,
        (Ordering::Greater, Mode::Spherical) | (Ordering::Less, Mode::General) => Some(Orientation::Graph),
        _ => Some(Orientation::Complement),
    };
    let one = Rat::one();
    let in_range = match mode {
        Mode::Spherical => {
            (!used_a || a.cmp_rat(&one) == Ordering::Less) && (!used_b || b.cmp_rat(&one) == Ordering::Less)
        }
        Mode::General => (!used_a || a.sign() == Sign::Pos) && (!used_b || b.sign() == Sign::Pos),
    };
    let (jspherical, spherical) = match mode {
        Mode::Spherical => {
            let short = match orientation {
                Some(Orientation::Graph) => Some(&a),
                Some(Orientation::Complement) => Some(&b),
                None => None,
            };
            (Some(short.is_some_and(|x| x.sign() == Sign::Zero)), None)
        }
        Mode::General => (None, Some(bordered_rank(&at, &p.t) == spectrum.rank() + 1)),
    };
    ValidityReport { minors_vanish, psd: spectrum.is_psd(), rank: spectrum.rank(), orientation, jspherical, spherical, in_range }
}

/// Floating coordinates of a certified solution, one row per vertex.
#[derive(Clone, Debug)]
pub struct Realization {
    pub coords: Vec<Vec<f64>>,
    /// Largest relative error of a pairwise squared distance.
    pub max_residual: f64,
}

/// Realize a certified solution numerically (for inspection only).
pub fn realize(g: &Graph, p: &SolutionPoint, d: usize) -> Result<Realization, Error> {
    let (a, b) = (p.a.to_f64(), p.b.to_f64());
    let n = g.order();
    let (m, certified) = match p.mode {
        Mode::Spherical => (candidate_gram(g), spectrum_at(&candidate_gram(g), &p.point).rank()),
        Mode::General => {
            let m = menger_matrix(g)?;
            let r = spectrum_at(&m, &p.point).rank();
            (m, r)
        }
    };
    let fm: Vec<Vec<f64>> = m
        .entries()
        .iter()
        .map(|row| row.iter().map(|e| e.terms().map(|(&(i, j), c)| crate::exact::rat_to_f64(c) * libm::pow(a, i as f64) * libm::pow(b, j as f64)).sum()).collect())
        .collect();
    let (vals, vecs) = jacobi_eigen(&fm);
    let scale = vals.iter().fold(0.0f64, |s, v| s.max(v.abs())).max(1.0);
    let numeric = vals.iter().filter(|v| **v > 1e-9 * scale).count();
    if numeric != certified || certified > d {
        return Err(Error::RankMismatch { certified, numeric });
    }
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&i, &j| vals[j].total_cmp(&vals[i]));
    let rows = fm.len();
    let mut coords: Vec<Vec<f64>> = (0..rows)
        .map(|i| {
            (0..d)
                .map(|c| match order.get(c) {
                    Some(&k) if c < certified => vecs[i][k] * libm::sqrt(vals[k].max(0.0)),
                    _ => 0.0,
                })
                .collect()
        })
        .collect();
    if p.mode == Mode::General {
        coords.push(vec![0.0; d]);
    }
    let (ta, tb) = match p.mode {
        Mode::Spherical => (2.0 - 2.0 * a, 2.0 - 2.0 * b),
        Mode::General => (a, b),
    };
    let mut max_residual = 0.0f64;
    for i in 0..n {
        for j in 0..i {
            let dist: f64 = coords[i].iter().zip(&coords[j]).map(|(x, y)| (x - y) * (x - y)).sum();
            let target = if g.has_edge(i, j) { ta } else { tb };
            max_residual = max_residual.max((dist - target).abs() / target.abs());
        }
    }
    Ok(Realization { coords, max_residual })
}

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues and the matrix whose columns are eigenvectors.
pub fn jacobi_eigen(m: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i][i]).collect(), v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::decode;

    #[test]
    fn pentagon_general_roots() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let v = solve_general(&c5, 2).unwrap();
        assert_eq!(v.solutions.len(), 2);
        assert!(v.solutions.iter().all(|s| s.spherical && s.rank == 2));
        assert_eq!(count_sets(VerdictRef::General(&v)), 1);
        assert!(solve_general(&c5, 4).unwrap().continuum);
    }

    #[test]
    fn octahedron_is_rank_three() {
        let oct = decode("aaaaababaabaaaa", 6).unwrap();
        let v = solve_spherical(&oct, 4).unwrap();
        let ranks: Vec<usize> = v.solutions.iter().map(|s| s.rank).collect();
        assert!(ranks.contains(&3), "{ranks:?}");
        let rep = verify_point(&oct, &RealAlg::from_int(0), &RealAlg::from_int(-1), 4, Mode::Spherical);
        assert!(rep.valid(4));
        assert_eq!(rep.rank, 3);
        // (1/6, -2/3) has ratio (1 - b)/(1 - a) = 2 and lies on the line of
        // rank-4 solutions, so it is valid too
        let on_line = verify_point(&oct, &RealAlg::from_rat(rat(1, 6)), &RealAlg::from_rat(rat(-2, 3)), 4, Mode::Spherical);
        assert!(on_line.valid(4));
        assert_eq!(on_line.rank, 4);
        assert!(v.lines.iter().any(|r| r.as_rational() == Some(rat(2, 1))));
        let bad = verify_point(&oct, &RealAlg::from_int(0), &RealAlg::from_rat(rat(1, 2)), 4, Mode::Spherical);
        assert!(!bad.minors_vanish);
        assert_eq!(bad.rank, 6);
    }

    #[test]
    fn complete_graphs_are_rejected() {
        assert!(matches!(solve_general(&Graph::complete(6), 4), Err(Error::NotTwoDistanceGraph)));
        assert!(matches!(solve_spherical(&Graph::empty(6), 4), Err(Error::NotTwoDistanceGraph)));
    }

    #[test]
    fn simplex_verification_and_realization() {
        let k5 = Graph::complete(5);
        let a = RealAlg::from_rat(rat(-1, 4));
        let rep = verify_point(&k5, &a, &a, 4, Mode::Spherical);
        assert!(rep.valid(4));
        assert_eq!(rep.rank, 4);
        let p = SolutionPoint::trusted(AlgPoint::rational(rat(-1, 4), rat(-1, 4)), Vec::new(), Mode::Spherical);
        let r = realize(&k5, &p, 4).unwrap();
        assert!(r.max_residual < 1e-9);
        for row in &r.coords {
            let norm: f64 = row.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn jacobi_diagonalises() {
        let m = vec![vec![2.0, 1.0, 0.0], vec![1.0, 2.0, 1.0], vec![0.0, 1.0, 2.0]];
        let (mut vals, _) = jacobi_eigen(&m);
        vals.sort_by(f64::total_cmp);
        let s = libm::sqrt(2.0);
        for (x, y) in vals.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
