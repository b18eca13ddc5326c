//! Presentations of `H^*(X(Σ); Q)`, the degree-two dictionary with the
//! Peterson side, and the localization constants `m_i`, `n_i`.
//!
//! Degrees are counted in variables (every generator has degree one);
//! cohomological degree is twice that.

use num::{One, Zero};
use serde::Serialize;

use crate::cartan::{Basis, CartanMatrix, LatticeVector};
use crate::error::{Error, Result};
use crate::fan::{FanSigma, Ray};
use crate::index_set::IndexSet;
use crate::linalg::{q, RatMatrix, Q};
use crate::poly::{groebner_basis, macaulay_dimension, normal_form, standard_monomials, Poly};
use crate::weyl::{height_of_image, longest_element};

/// `Q[generators] / (relations)` with a cached reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct GradedQuotientRing {
    pub names: Vec<String>,
    pub relations: Vec<Poly>,
    pub gb: Vec<Poly>,
}

impl GradedQuotientRing {
    pub fn new(names: Vec<String>, relations: Vec<Poly>) -> Result<Self> {
        if let Some(r) = relations.iter().find(|r| !r.is_homogeneous()) {
            return Err(Error::Inconsistent(format!(
                "relation {} is not homogeneous",
                r.display(&names)
            )));
        }
        let gb = groebner_basis(&relations);
        Ok(GradedQuotientRing {
            names,
            relations,
            gb,
        })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.nvars(), i)
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        normal_form(p, &self.gb)
    }

    /// Graded dimensions from standard monomials, in degrees `0..` until the
    /// first vanishing degree (exclusive), capped at `max_deg`.
    pub fn dims_groebner(&self, max_deg: u32) -> Vec<usize> {
        trim((0..=max_deg).map(|d| standard_monomials(self.nvars(), &self.gb, d)))
    }

    /// Graded dimensions from per-degree row reduction of the relation
    /// multiples; independent of the Gröbner basis.
    pub fn dims_linear(&self, max_deg: u32) -> Vec<usize> {
        trim((0..=max_deg).map(|d| macaulay_dimension(self.nvars(), &self.relations, d)))
    }

    pub fn show(&self, p: &Poly) -> String {
        p.display(&self.names)
    }
}

fn trim(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Variable index of `X_i` in [`presentation_xy`].
pub fn xy_x(n: usize, i: usize) -> usize {
    n + i
}

/// Variable index of `Y_i` in [`presentation_xy`].
pub fn xy_y(_n: usize, i: usize) -> usize {
    i
}

/// `Q[X_i, Y_i] / (X_i Y_i, Y_i - Σ_j c_ij X_j)`.
///
/// The `Y` variables come first so that graded-lex reduction rewrites each
/// `Y_i` in terms of the `X` variables.
pub fn presentation_xy(c: &CartanMatrix) -> GradedQuotientRing {
    let n = c.rank();
    let names = (1..=n)
        .map(|i| format!("Y{i}"))
        .chain((1..=n).map(|i| format!("X{i}")))
        .collect();
    let x = |i: usize| Poly::var(2 * n, xy_x(n, i));
    let y = |i: usize| Poly::var(2 * n, xy_y(n, i));
    let mut rels = Vec::new();
    for i in 0..n {
        rels.push(x(i).mul(&y(i)));
    }
    for i in 0..n {
        let mut lin = y(i);
        for j in 0..n {
            lin = lin.sub(&x(j).scale(&q(c.entry(i, j))));
        }
        rels.push(lin);
    }
    GradedQuotientRing::new(names, rels).expect("relations are homogeneous")
}

/// `α_i = Σ_j c_ij X_j` as a linear form in the `X` ring.
pub fn alpha_form(c: &CartanMatrix, i: usize) -> Poly {
    Poly::linear(&(0..c.rank()).map(|j| q(c.entry(i, j))).collect::<Vec<_>>())
}

/// `Q[X_i] / (X_i Σ_j c_ij X_j)`; `X_i` stands for `ϖ_i`.
pub fn presentation_x(c: &CartanMatrix) -> GradedQuotientRing {
    let n = c.rank();
    let names = (1..=n).map(|i| format!("X{i}")).collect();
    let rels = (0..n)
        .map(|i| Poly::var(n, i).mul(&alpha_form(c, i)))
        .collect();
    GradedQuotientRing::new(names, rels).expect("relations are homogeneous")
}

#[derive(Debug, Clone, Serialize)]
pub struct EliminationReport {
    pub pass: bool,
    pub dims_xy: Vec<usize>,
    pub dims_x: Vec<usize>,
    /// every `X_i Y_i` maps to zero in the `X` ring
    pub ideal_maps_to_zero: bool,
}

/// The substitution `X_i -> X_i`, `Y_i -> Σ_j c_ij X_j`, indexed like
/// the variables of [`presentation_xy`].
pub fn elimination_map(c: &CartanMatrix) -> Vec<Poly> {
    let n = c.rank();
    (0..n)
        .map(|i| alpha_form(c, i))
        .chain((0..n).map(|i| Poly::var(n, i)))
        .collect()
}

pub fn eliminate_y(c: &CartanMatrix, rxy: &GradedQuotientRing, rx: &GradedQuotientRing) -> EliminationReport {
    let n = c.rank();
    let map = elimination_map(c);
    let ideal_maps_to_zero = rxy
        .relations
        .iter()
        .all(|r| rx.normal_form(&r.substitute(&map)).is_zero());
    let top = n as u32 + 1;
    let dims_xy = rxy.dims_linear(top);
    let dims_x = rx.dims_linear(top);
    EliminationReport {
        pass: ideal_maps_to_zero && dims_xy == dims_x,
        dims_xy,
        dims_x,
        ideal_maps_to_zero,
    }
}

/// Graded dimensions by both routes, degrees `0..=n+1` before trimming.
#[derive(Debug, Clone, Serialize)]
pub struct PoincareReport {
    pub groebner: Vec<usize>,
    pub linear: Vec<usize>,
    pub routes_agree: bool,
    pub total: usize,
}

pub fn poincare_polynomial(r: &GradedQuotientRing, n: usize) -> PoincareReport {
    let top = n as u32 + 1;
    let groebner = r.dims_groebner(top);
    let linear = r.dims_linear(top);
    PoincareReport {
        routes_agree: groebner == linear,
        total: linear.iter().sum(),
        groebner,
        linear,
    }
}

/// `ϖ_i α_i` reduces to zero.
pub fn vanishing_check(c: &CartanMatrix, rx: &GradedQuotientRing, i: usize) -> bool {
    rx.normal_form(&product_class(c, rx, i, i)).is_zero()
}

/// `ϖ_i α_k` as a polynomial in the `X` ring.
pub fn product_class(c: &CartanMatrix, rx: &GradedQuotientRing, i: usize, k: usize) -> Poly {
    rx.var(i).mul(&alpha_form(c, k))
}

/// A degree-two equivariant class restricted to a fixed point: a vector in
/// `Λ_r ⊗ Q` (simple-root coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantWeight(pub LatticeVector);

impl EquivariantWeight {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Coefficient of `α_S` after restricting to `S`, where every `α_i`
    /// becomes `α_S`.
    pub fn to_alpha_s(&self) -> Q {
        self.0.coords.iter().sum()
    }
}

/// `i_J^*(τ(D_r))`: zero when `r` is not a ray of `σ_J`, otherwise the dual
/// covector of `r` with respect to the generators of `σ_J`.
///
/// The dual covectors are the rows of `G_J^{-1}`; since the fan lives in
/// fundamental-coweight coordinates, those rows are already simple-root
/// coordinates.
pub fn equivariant_restriction(f: &FanSigma, j: IndexSet, r: Ray) -> Result<EquivariantWeight> {
    let n = f.rank();
    let idx = match r {
        Ray::NegCoroot(i) | Ray::Coweight(i) => i,
    };
    if idx >= n {
        return Err(Error::NotARay);
    }
    let cone = f.maximal_cone(j);
    let rays = cone.rays();
    let Some(pos) = rays.iter().position(|&x| x == r) else {
        return Ok(EquivariantWeight(LatticeVector::zero(n, Basis::SimpleRoot)));
    };
    let inv = cone.gens.inverse()?;
    Ok(EquivariantWeight(LatticeVector::new(
        inv.row(pos),
        Basis::SimpleRoot,
    )))
}

/// `j_J^*(c_1^S(L_{α_i})) = -ht(w_J α_i) α_S`, as the coefficient of `α_S`.
pub fn peterson_restriction(c: &CartanMatrix, j: IndexSet, i: usize) -> Q {
    -height_of_image(&longest_element(c, j), i)
}

/// One equation `a_m m + a_n n = b` per fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnEquation {
    pub j: IndexSet,
    pub coef_m: Q,
    pub coef_n: Q,
    pub rhs: Q,
}

/// `m ψ^*(i_J^* τ(D_{ϖ_i^∨})) = j_J^* c_1(L_{α_i}) + n α_S` for every `J`,
/// with `ψ^*(α_k) = -2 α_S`.
pub fn mn_system(f: &FanSigma, i: usize) -> Result<Vec<MnEquation>> {
    let n = f.rank();
    IndexSet::all_subsets(n)
        .map(|j| {
            let w = equivariant_restriction(f, j, Ray::Coweight(i))?;
            Ok(MnEquation {
                j,
                coef_m: q(-2) * w.to_alpha_s(),
                coef_n: -Q::one(),
                rhs: peterson_restriction(&f.cartan, j, i),
            })
        })
        .collect()
}

/// Least-squares-free solve of an over-determined system: `Err` unless it
/// has exactly one solution.
pub fn solve_mn(eqs: &[MnEquation]) -> Result<(Q, Q)> {
    let a = RatMatrix::from_rows(
        eqs.iter()
            .map(|e| vec![e.coef_m.clone(), e.coef_n.clone()])
            .collect(),
    );
    let b: Vec<Q> = eqs.iter().map(|e| e.rhs.clone()).collect();
    if a.rank() < 2 {
        return Err(Error::Inconsistent("system does not determine (m, n)".into()));
    }
    let sol = a
        .solve(&b)
        .ok_or_else(|| Error::Inconsistent("localization equations disagree".into()))?;
    Ok((sol[0].clone(), sol[1].clone()))
}

pub fn solve_mn_constants(f: &FanSigma, i: usize) -> Result<(Q, Q)> {
    solve_mn(&mn_system(f, i)?)
}

/// One row of the degree-two dictionary.
#[derive(Debug, Clone, Serialize)]
pub struct DictionaryEntry {
    pub i: usize,
    pub x_aliases: [String; 3],
    pub y_aliases: [String; 3],
    /// `Y_i = Σ_j c_ij X_j` on the toric side
    pub toric: Vec<String>,
    /// `α_i = Σ_j c_ij ϖ_j` on the Peterson side
    pub peterson: Vec<String>,
    pub agree: bool,
}

/// `X_i ≡ τ(D_{-α_i^∨}) ≡ c_1(L_{ϖ_i})`, `Y_i ≡ τ(D_{ϖ_i^∨}) ≡ c_1(L_{α_i})`,
/// with both linear relation webs computed independently and compared.
pub fn degree2_dictionary(c: &CartanMatrix, rxy: &GradedQuotientRing) -> Result<Vec<DictionaryEntry>> {
    let n = c.rank();
    let mut out = Vec::new();
    for i in 0..n {
        // toric side: the normal form of Y_i in R_xy, read as a linear form in X
        let nf = rxy.normal_form(&rxy.var(xy_y(n, i)));
        let mut toric = vec![Q::zero(); n];
        let mut only_x = true;
        for (m, coef) in &nf.terms {
            match m.0.iter().position(|&e| e == 1) {
                Some(p) if p >= n && m.degree() == 1 => toric[p - n] = coef.clone(),
                _ => only_x = false,
            }
        }
        // Peterson side: alpha_i converted to fundamental-weight coordinates
        let alpha = LatticeVector::unit(n, i, Basis::SimpleRoot);
        let peterson = c.convert(&alpha, Basis::FundamentalWeight)?.coords;
        let show = |v: &[Q]| v.iter().map(ToString::to_string).collect();
        out.push(DictionaryEntry {
            i: i + 1,
            x_aliases: [
                format!("X{}", i + 1),
                format!("tau(D_-alpha{}^vee)", i + 1),
                format!("c1(L_varpi{})", i + 1),
            ],
            y_aliases: [
                format!("Y{}", i + 1),
                format!("tau(D_varpi{}^vee)", i + 1),
                format!("c1(L_alpha{})", i + 1),
            ],
            agree: only_x && toric == peterson,
            toric: show(&toric),
            peterson: show(&peterson),
        });
    }
    Ok(out)
}
