//! Buchberger's algorithm for lex (`a > b`) Gröbner bases of bivariate ideals.

use alloc::vec::Vec;

use super::{BiPoly, Rat};
use super::bipoly::Monomial;

fn divides(m: Monomial, n: Monomial) -> bool {
    m.0 <= n.0 && m.1 <= n.1
}

fn lcm(m: Monomial, n: Monomial) -> Monomial {
    (m.0.max(n.0), m.1.max(n.1))
}

fn lm(p: &BiPoly) -> Monomial {
    p.leading().expect("nonzero polynomial").0
}

/// Fully reduced normal form of `f` modulo `basis` (lex `a > b`).
/// Zero iff `f` lies in the ideal when `basis` is a Gröbner basis.
pub fn reduce_mod(f: &BiPoly, basis: &[BiPoly]) -> BiPoly {
    let basis: Vec<&BiPoly> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem = BiPoly::zero();
    while let Some((m, c)) = p.leading() {
        let c = c.clone();
        match basis.iter().find(|g| divides(lm(g), m)) {
            Some(g) => {
                let (gm, gc) = g.leading().unwrap();
                let q = (m.0 - gm.0, m.1 - gm.1);
                p = &p - &g.mul_term(q, &(&c / gc));
            }
            None => {
                let t = BiPoly::term(m, c);
                p = &p - &t;
                rem = &rem + &t;
            }
        }
    }
    rem
}

/// Incrementally maintained Gröbner basis.
#[derive(Clone, Debug, Default)]
pub struct GroebnerBasis {
    polys: Vec<Option<BiPoly>>,
    pairs: Vec<(usize, usize)>,
    unit: bool,
}

impl GroebnerBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    fn live(&self) -> Vec<BiPoly> {
        self.polys.iter().flatten().cloned().collect()
    }

    /// Add a generator and complete the basis again. Returns false when the
    /// generator already reduced to zero (nothing changed).
    pub fn add(&mut self, f: &BiPoly) -> bool {
        if self.unit {
            return false;
        }
        let r = reduce_mod(f, &self.live());
        if r.is_zero() {
            return false;
        }
        self.insert(r.monic());
        self.complete();
        true
    }

    fn insert(&mut self, f: BiPoly) {
        if f.is_constant() {
            self.unit = true;
            self.polys.clear();
            self.polys.push(Some(BiPoly::one()));
            self.pairs.clear();
            return;
        }
        let idx = self.polys.len();
        for (i, g) in self.polys.iter().enumerate() {
            if g.is_some() {
                self.pairs.push((i, idx));
            }
        }
        self.polys.push(Some(f));
    }

    fn complete(&mut self) {
        while !self.unit {
            let Some(k) = self.select_pair() else { break };
            let (i, j) = self.pairs.swap_remove(k);
            let (Some(f), Some(g)) = (self.polys[i].clone(), self.polys[j].clone()) else { continue };
            let (fm, gm) = (lm(&f), lm(&g));
            let l = lcm(fm, gm);
            // First criterion: coprime leading monomials.
            if l == (fm.0 + gm.0, fm.1 + gm.1) {
                continue;
            }
            // Second criterion: some h with lm(h) | lcm whose pairs with f
            // and g are already processed.
            if self.chain_criterion(i, j, l) {
                continue;
            }
            let s = spoly(&f, &g);
            let r = reduce_mod(&s, &self.live());
            if !r.is_zero() {
                self.insert(r.monic());
            }
        }
    }

    fn pending(&self, i: usize, j: usize) -> bool {
        let (p, q) = if i < j { (i, j) } else { (j, i) };
        self.pairs.iter().any(|&(a, b)| a == p && b == q)
    }

    fn chain_criterion(&self, i: usize, j: usize, l: Monomial) -> bool {
        self.polys.iter().enumerate().any(|(k, h)| {
            k != i
                && k != j
                && h.as_ref().is_some_and(|h| divides(lm(h), l))
                && !self.pending(i, k)
                && !self.pending(j, k)
        })
    }

    /// Normal strategy: the pair with the smallest lcm.
    fn select_pair(&self) -> Option<usize> {
        let mut best: Option<(Monomial, usize)> = None;
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            let (Some(f), Some(g)) = (&self.polys[i], &self.polys[j]) else {
                return Some(k);
            };
            let l = lcm(lm(f), lm(g));
            if best.map_or(true, |(bl, _)| l < bl) {
                best = Some((l, k));
            }
        }
        best.map(|(_, k)| k)
    }

    /// The reduced Gröbner basis, monic, sorted by increasing leading monomial.
    pub fn reduced(&self) -> Vec<BiPoly> {
        if self.unit {
            return alloc::vec![BiPoly::one()];
        }
        let mut g: Vec<BiPoly> = self.live();
        g.sort_by_key(lm);
        let mut minimal: Vec<BiPoly> = Vec::new();
        for p in g {
            if !minimal.iter().any(|q| divides(lm(q), lm(&p))) {
                minimal.push(p);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for (k, p) in minimal.iter().enumerate() {
            let others: Vec<BiPoly> =
                minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, q)| q.clone()).collect();
            let lead = BiPoly::term(lm(p), Rat::from_integer(1.into()));
            let tail = &p.monic() - &lead;
            out.push(&lead + &reduce_mod(&tail, &others));
        }
        out.sort_by_key(lm);
        out
    }
}

fn spoly(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = lcm(fm, gm);
    let a = f.mul_term((l.0 - fm.0, l.1 - fm.1), &fc.recip());
    let b = g.mul_term((l.0 - gm.0, l.1 - gm.1), &gc.recip());
    &a - &b
}

/// Reduced lex Gröbner basis of the ideal generated by `gens`.
pub fn groebner_lex(gens: &[BiPoly]) -> Vec<BiPoly> {
    let mut gb = GroebnerBasis::new();
    for f in gens {
        gb.add(f);
        if gb.is_unit() {
            break;
        }
    }
    gb.reduced()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn a() -> BiPoly {
        BiPoly::a()
    }
    fn b() -> BiPoly {
        BiPoly::b()
    }

    #[test]
    fn linear_system_basis() {
        let gb = groebner_lex(&[&a() - &b(), &(&a() + &b()) - &BiPoly::one()]);
        let half = BiPoly::constant(rat(1, 2));
        assert_eq!(gb, alloc::vec![&b() - &half, &a() - &half]);
    }

    #[test]
    fn inconsistent_system() {
        let gb = groebner_lex(&[&a() * &a(), &a() + &BiPoly::one()]);
        assert_eq!(gb, alloc::vec![BiPoly::one()]);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_mod(&(&a() * &a()), &[&a() - &b()]), &b() * &b());
        let gens = [&(&a() * &a()) - &b(), &(&a() * &b()) - &BiPoly::one()];
        let gb = groebner_lex(&gens);
        for g in &gens {
            assert!(reduce_mod(g, &gb).is_zero());
        }
        // the eliminant b^3 - 1 is present
        assert!(gb.iter().any(|g| g.is_univariate_in(crate::exact::Var::B) && !g.is_constant()));
    }
}
