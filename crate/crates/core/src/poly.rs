//! Multivariate polynomials over `Q`, Buchberger's algorithm under graded
//! lexicographic order, and per-degree linear algebra for quotient rings.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Signed, Zero};

use crate::linalg::Q;

/// Exponent vector, ordered by total degree then lexicographically
/// (`x_1 > x_2 > ...`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    pub fn quotient(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of degree `d` in `nvars` variables, in decreasing order.
    pub fn of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(nvars, i + 1, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(nvars, 0, d, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse polynomial; terms are kept in increasing monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let nvars = m.0.len();
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Q::one())
    }

    /// `sum_i coeffs[i] * x_i`
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (m, c) in &o.terms {
            for (k, v) in &self.terms {
                r.add_term(k.mul(m), v * c);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::constant(self.nvars, Q::one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Q::one() / c)),
        }
    }

    /// Substitutes `x_i -> images[i]`; the images may live in a different ring.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let target = images.first().map_or(0, |p| p.nvars);
        let mut r = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Partial derivative in `x_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut k = m.clone();
                k.0[i] -= 1;
                r.add_term(k, c * Q::from_integer(e.into()));
            }
        }
        r
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// One division step: cancel the leading term of `self` against `g` if
    /// `LM(g)` divides it.
    pub fn reduce_step(&self, g: &Poly) -> Option<Poly> {
        let (lm, lc) = self.leading()?;
        let (gm, gc) = g.leading()?;
        if !gm.divides(lm) {
            return None;
        }
        let f = lc / gc;
        Some(self.sub(&g.mul_term(&gm.quotient(lm), &f)))
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mon: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{e}", names[i])
                    }
                })
                .collect();
            let body = mon.join("*");
            let neg = c.is_negative();
            let a = c.abs();
            let term = match (body.is_empty(), a.is_one()) {
                (true, _) => a.to_string(),
                (false, true) => body,
                (false, false) => format!("{a}*{body}"),
            };
            out.push_str(match (k == 0, neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            });
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

/// Full reduction of `p` modulo `basis` (every term, not just the leading one).
pub fn normal_form(p: &Poly, basis: &[Poly]) -> Poly {
    let mut rem = Poly::zero(p.nvars);
    let mut cur = p.clone();
    while let Some((m, c)) = cur.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = basis
            .iter()
            .find(|g| g.leading().is_some_and(|(gm, _)| gm.divides(&m)));
        match hit {
            Some(g) => {
                let (gm, gc) = g.leading().expect("nonzero");
                cur = cur.sub(&g.mul_term(&gm.quotient(&m), &(&c / gc)));
            }
            None => {
                cur.terms.remove(&m);
                rem.terms.insert(m, c);
            }
        }
    }
    rem
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    f.mul_term(&fm.quotient(&l), &(Q::one() / fc))
        .sub(&g.mul_term(&gm.quotient(&l), &(Q::one() / gc)))
}

/// Reduced Gröbner basis by Buchberger's algorithm with the coprime-leading-term
/// criterion.
pub fn groebner_basis(gens: &[Poly]) -> Vec<Poly> {
    let mut g: Vec<Poly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(Poly::monic)
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, mj) = (g[i].leading().unwrap().0, g[j].leading().unwrap().0);
        if mi.coprime(mj) {
            continue;
        }
        let r = normal_form(&s_poly(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    reduce_basis(g)
}

fn reduce_basis(mut g: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    g.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    let mut min: Vec<Poly> = Vec::new();
    for p in g {
        let lm = p.leading().unwrap().0.clone();
        if !min.iter().any(|q| q.leading().unwrap().0.divides(&lm)) {
            min.push(p);
        }
    }
    let mut out = Vec::with_capacity(min.len());
    for k in 0..min.len() {
        let others: Vec<Poly> = min
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let (lm, _) = min[k].leading().unwrap();
        let mut tail = min[k].clone();
        tail.terms.remove(lm);
        let mut p = normal_form(&tail, &others);
        p.terms.insert(lm.clone(), Q::one());
        out.push(p);
    }
    out.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    out
}

/// Number of degree-`d` monomials not divisible by any leading monomial.
pub fn standard_monomials(nvars: usize, basis: &[Poly], d: u32) -> usize {
    let lms: Vec<&Monomial> = basis.iter().filter_map(|g| g.leading().map(|x| x.0)).collect();
    Monomial::of_degree(nvars, d)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .count()
}

/// `dim_Q (Q[x]/I)_d` computed directly: monomials of degree `d` minus the
/// rank of all products `m * r` with `r` a homogeneous generator of `I`.
pub fn macaulay_dimension(nvars: usize, relations: &[Poly], d: u32) -> usize {
    let cols = Monomial::of_degree(nvars, d);
    let index: HashMap<Monomial, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut echelon: HashMap<usize, BTreeMap<usize, Q>> = HashMap::new();
    for r in relations {
        let Some(e) = r.degree() else { continue };
        if e > d {
            continue;
        }
        for m in Monomial::of_degree(nvars, d - e) {
            let mut row: BTreeMap<usize, Q> = r
                .terms
                .iter()
                .map(|(k, c)| (index[&k.mul(&m)], c.clone()))
                .collect();
            // eliminate against existing pivots, always on the smallest column
            while let Some((&col, val)) = row.iter().next() {
                let Some(piv) = echelon.get(&col) else { break };
                let f = val / &piv[&col];
                for (c, v) in piv {
                    let entry = row.entry(*c).or_insert_with(Q::zero);
                    *entry -= &f * v;
                    if entry.is_zero() {
                        row.remove(c);
                    }
                }
            }
            if let Some((&col, _)) = row.iter().next() {
                echelon.insert(col, row);
            }
        }
    }
    cols.len() - echelon.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, q_frac};
    use proptest::prelude::*;

    fn x(i: usize) -> Poly {
        Poly::var(2, i)
    }

    #[test]
    fn derivative_and_eval() {
        // p = 3 x^2 y - y^3
        let p = x(0).pow(2).mul(&x(1)).scale(&q(3)).sub(&x(1).pow(3));
        assert_eq!(p.derivative(0), x(0).mul(&x(1)).scale(&q(6)));
        assert_eq!(p.derivative(1).eval(&[q(1), q(2)]), q(3 - 12));
        assert_eq!(p.eval(&[q_frac(1, 2), q(2)]), q_frac(3, 2) - q(8));
        assert_eq!(p.display(&["x".into(), "y".into()]), "3*x^2*y - y^3");
    }

    fn a2_relations() -> Vec<Poly> {
        vec![
            x(0).mul(&x(0).scale(&q(2)).sub(&x(1))),
            x(1).mul(&x(1).scale(&q(2)).sub(&x(0))),
        ]
    }

    #[test]
    fn ordering_is_graded_lex() {
        let m = |v: &[u32]| Monomial(v.to_vec());
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[0, 3]) > m(&[2, 0]));
        assert_eq!(Monomial::of_degree(3, 2).len(), 6);
    }

    #[test]
    fn a2_single_step() {
        let r = a2_relations();
        let sq = x(0).mul(&x(0));
        let step = sq.reduce_step(&r[0]).unwrap();
        assert_eq!(step, x(0).mul(&x(1)).scale(&q_frac(1, 2)));
    }

    #[test]
    fn a2_degree_three_vanishes() {
        let gb = groebner_basis(&a2_relations());
        let p = x(0).mul(&x(1)).mul(&x(0));
        assert!(normal_form(&p, &gb).is_zero());
        assert_eq!(standard_monomials(2, &gb, 2), 1);
        assert_eq!(macaulay_dimension(2, &a2_relations(), 2), 1);
        assert_eq!(macaulay_dimension(2, &a2_relations(), 3), 0);
    }

    #[test]
    fn substitution() {
        // y -> 2x
        let xy = Poly::var(2, 0).mul(&Poly::var(2, 1));
        let img = xy.substitute(&[Poly::var(1, 0), Poly::var(1, 0).scale(&q(2))]);
        assert_eq!(img, Poly::var(1, 0).pow(2).scale(&q(2)));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..6), 0..6).prop_map(|ts| {
            let mut p = Poly::zero(2);
            for ((a, b), c) in ts {
                p = p.add(&Poly::term(Monomial(vec![a, b]), q(c)));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn normal_form_is_a_linear_projection(p in small_poly(), r in small_poly(), s in -4i64..5) {
            let gb = groebner_basis(&a2_relations());
            let np = normal_form(&p, &gb);
            prop_assert_eq!(normal_form(&np, &gb), np.clone());
            let lhs = normal_form(&p.add(&r.scale(&q(s))), &gb);
            let rhs = np.add(&normal_form(&r, &gb).scale(&q(s)));
            prop_assert_eq!(lhs, rhs);
            let prod = normal_form(&p.mul(&r), &gb);
            let prod2 = normal_form(&np.mul(&normal_form(&r, &gb)), &gb);
            prop_assert_eq!(prod, prod2);
        }
    }
}
