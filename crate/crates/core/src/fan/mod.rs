//! The fan `Σ = { σ_{J,K} }` in the fundamental-coweight lattice.

mod oracle;
mod render;

pub use oracle::{
    double_description, h_representation, intersect_oracle, oracle_check, OracleMismatch, OracleReport,
    ORACLE_GUARD,
};
pub use render::{fan_json, fan_svg, FanJson};

use std::collections::HashSet;

use num::{BigInt, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::{Basis, CartanMatrix, LatticeVector};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::linalg::{is_nonneg, primitive_integer, q, RatMatrix, Q};

/// One of the `2n` rays of `Σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ray {
    /// `-alpha_i^vee`
    NegCoroot(usize),
    /// `varpi_i^vee`
    Coweight(usize),
}

impl Ray {
    /// Rays are numbered `0..n` for `-alpha^vee` and `n..2n` for `varpi^vee`.
    pub fn index(self, n: usize) -> usize {
        match self {
            Ray::NegCoroot(i) => i,
            Ray::Coweight(i) => n + i,
        }
    }

    pub fn from_index(r: usize, n: usize) -> Ray {
        if r < n {
            Ray::NegCoroot(r)
        } else {
            Ray::Coweight(r - n)
        }
    }

    pub fn vector(self, c: &CartanMatrix) -> Vec<Q> {
        let n = c.rank();
        match self {
            Ray::NegCoroot(i) => (0..n).map(|j| q(-c.entry(j, i))).collect(),
            Ray::Coweight(i) => (0..n).map(|j| q(i64::from(i == j))).collect(),
        }
    }

    pub fn name(self) -> String {
        match self {
            Ray::NegCoroot(i) => format!("-alpha{}^vee", i + 1),
            Ray::Coweight(i) => format!("varpi{}^vee", i + 1),
        }
    }
}

/// The cone `σ_{J,K}` spanned by `-alpha_j^vee` (`j ∈ J`) and `varpi_k^vee` (`k ∈ K`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeJK {
    pub j: IndexSet,
    pub k: IndexSet,
    /// `n x (|J|+|K|)`, columns in the order of [`ConeJK::rays`].
    pub gens: RatMatrix,
    /// Rank of `gens`.
    pub dim: usize,
}

impl ConeJK {
    pub fn rays(&self) -> Vec<Ray> {
        self.j
            .iter()
            .map(Ray::NegCoroot)
            .chain(self.k.iter().map(Ray::Coweight))
            .collect()
    }

    pub fn ambient(&self) -> usize {
        self.gens.rows()
    }

    pub fn is_maximal(&self) -> bool {
        self.j.len() + self.k.len() == self.ambient()
    }

    /// Generators as primitive integer vectors, sorted.
    pub fn primitive_rays(&self) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = (0..self.gens.cols())
            .map(|c| primitive_integer(&self.gens.column(c)))
            .collect();
        out.sort();
        out
    }

    /// `σ_{J,K} ⊆ σ_{P,Q}` read off the index sets.
    pub fn is_face_of(&self, other: &ConeJK) -> bool {
        self.j.is_subset(other.j) && self.k.is_subset(other.k)
    }
}

pub fn cone(c: &CartanMatrix, j: IndexSet, k: IndexSet) -> Result<ConeJK> {
    if !j.is_disjoint(k) {
        return Err(Error::OverlappingIndexSets(format!(
            "J = {j}, K = {k} share {}",
            j.intersection(k)
        )));
    }
    let n = c.rank();
    if j.bound() > n || k.bound() > n {
        return Err(Error::IndexOutOfRange {
            index: j.bound().max(k.bound()) - 1,
            rank: n,
        });
    }
    let cols: Vec<Vec<Q>> = j
        .iter()
        .map(Ray::NegCoroot)
        .chain(k.iter().map(Ray::Coweight))
        .map(|r| r.vector(c))
        .collect();
    let gens = RatMatrix::from_columns(n, &cols);
    let dim = gens.rank();
    Ok(ConeJK { j, k, gens, dim })
}

/// The nonnegative coefficients expressing `v` in the generators of `cone`,
/// if `v` lies in it.
pub fn membership(cone: &ConeJK, v: &LatticeVector) -> Option<Vec<Q>> {
    if v.basis != Basis::FundamentalCoweight || v.coords.len() != cone.ambient() {
        return None;
    }
    if cone.gens.cols() == 0 {
        return v.is_zero().then(Vec::new);
    }
    let t = cone.gens.solve(&v.coords)?;
    // `solve` zeroes free variables; generators are independent so t is unique
    (cone.gens.mul_vec(&t) == v.coords && is_nonneg(&t)).then_some(t)
}

/// `σ_{J,K} ∩ σ_{P,Q} = σ_{J∩P, K∩Q}`.
pub fn intersect(c: &CartanMatrix, a: &ConeJK, b: &ConeJK) -> ConeJK {
    cone(c, a.j.intersection(b.j), a.k.intersection(b.k))
        .expect("intersection of disjoint pairs stays disjoint")
}

/// Multiplicity `|det|` of a maximal cone's generator matrix.
pub fn multiplicity(cone: &ConeJK) -> Result<BigInt> {
    if !cone.is_maximal() {
        return Err(Error::NotMaximal {
            dim: cone.j.len() + cone.k.len(),
            rank: cone.ambient(),
        });
    }
    Ok(cone.gens.det().abs().to_integer())
}

/// A rational representative `[x; y]` of a point of `X(Σ) = (C^{2n} - E)/T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientPoint {
    pub x: Vec<Q>,
    pub y: Vec<Q>,
}

impl QuotientPoint {
    pub fn new(x: Vec<Q>, y: Vec<Q>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::Dimension("x and y lengths differ".into()));
        }
        if let Some(i) = (0..x.len()).find(|&i| x[i].is_zero() && y[i].is_zero()) {
            return Err(Error::SimultaneousZero(i));
        }
        Ok(QuotientPoint { x, y })
    }

    /// `({i : x_i = 0}, {i : y_i = 0})`
    pub fn zero_pattern(&self) -> (IndexSet, IndexSet) {
        let zeros = |v: &[Q]| (0..v.len()).filter(|&i| v[i].is_zero()).collect();
        (zeros(&self.x), zeros(&self.y))
    }
}

/// The representative of `p_J`: `x_i = 0` for `i ∈ J`, `y_i = 0` for `i ∉ J`,
/// all other coordinates `1`.
pub fn zero_pattern_fixed_point(n: usize, j: IndexSet) -> QuotientPoint {
    let x = (0..n).map(|i| q(i64::from(!j.contains(i)))).collect();
    let y = (0..n).map(|i| q(i64::from(j.contains(i)))).collect();
    QuotientPoint { x, y }
}

/// The fan attached to a Cartan matrix.
#[derive(Debug, Clone)]
pub struct FanSigma {
    pub cartan: CartanMatrix,
    /// All `3^n` cones in the order of `(J, K)` with `J` the outer loop.
    pub cones: Vec<ConeJK>,
    /// `J` of each maximal cone `σ_J = σ_{J, I-J}`.
    pub maximal: Vec<IndexSet>,
}

impl FanSigma {
    pub fn new(c: &CartanMatrix) -> FanSigma {
        let n = c.rank();
        let mut cones = Vec::new();
        for j in IndexSet::all_subsets(n) {
            for k in IndexSet::all_subsets(n) {
                if j.is_disjoint(k) {
                    cones.push(cone(c, j, k).expect("disjoint by construction"));
                }
            }
        }
        FanSigma {
            cartan: c.clone(),
            cones,
            maximal: IndexSet::all_subsets(n).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn rays(&self) -> Vec<Ray> {
        (0..2 * self.rank())
            .map(|r| Ray::from_index(r, self.rank()))
            .collect()
    }

    pub fn maximal_cone(&self, j: IndexSet) -> ConeJK {
        cone(&self.cartan, j, j.complement(self.rank())).expect("complementary sets")
    }

    /// Copy of the fan with the maximal cone `σ_J` removed.
    pub fn without_maximal(&self, j: IndexSet) -> FanSigma {
        let mut f = self.clone();
        f.maximal.retain(|&m| m != j);
        let n = self.rank();
        f.cones.retain(|c| !(c.j == j && c.k == j.complement(n)));
        f
    }

    /// `f_d`, the number of `d`-dimensional cones, for `d = 0..=n`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.rank() + 1];
        for c in &self.cones {
            f[c.dim] += 1;
        }
        f
    }

    /// Cone dimensions against `|J| + |K|` and the generator rank, and the
    /// f-vector against `C(n, d) 2^d`.
    pub fn structure_check(&self) -> StructureReport {
        let n = self.rank();
        let dims_ok = self
            .cones
            .iter()
            .all(|c| c.dim == c.j.len() + c.k.len() && c.gens.rank() == c.dim);
        let mut expected = Vec::with_capacity(n + 1);
        let mut binom = 1u64;
        for d in 0..=n {
            expected.push(binom << d);
            binom = binom * (n - d) as u64 / (d + 1) as u64;
        }
        let f_vector = self.f_vector();
        StructureReport {
            pass: dims_ok && f_vector == expected,
            cones: self.cones.len(),
            dims_ok,
            f_vector,
            expected_f_vector: expected,
        }
    }

    /// `h_k` defined by `sum_k h_k t^{n-k} = sum_d f_d (t-1)^{n-d}`.
    pub fn h_vector(&self) -> Vec<i64> {
        h_from_f(&self.f_vector())
    }

    /// Codimension-one cones, each with the two maximal cones
    /// `σ_{J⊔ℓ, K}` and `σ_{J, K⊔ℓ}` on either side.
    pub fn walls(&self) -> Vec<Wall> {
        let n = self.rank();
        let mut out = Vec::new();
        for ell in 0..n {
            let rest = IndexSet::full(n).without(ell);
            for j in IndexSet::all_subsets(n).filter(|s| s.is_subset(rest)) {
                let k = rest.difference(j);
                out.push(Wall {
                    j,
                    k,
                    ell,
                    left: j.with(ell),
                    right: j,
                });
            }
        }
        out
    }

    /// Minimal ray subsets not spanning a cone of the fan, found by brute
    /// force over all `2^{2n}` subsets.
    pub fn primitive_collections(&self) -> Result<Vec<Vec<Ray>>> {
        let n = self.rank();
        if n > ORACLE_GUARD {
            return Err(Error::Guard {
                op: "primitive_collections",
                limit: ORACLE_GUARD,
                got: n,
                hint: "the answer for every rank is {-alpha_i^vee, varpi_i^vee}",
            });
        }
        let faces: HashSet<u32> = self
            .cones
            .iter()
            .map(|c| c.j.bits() | (c.k.bits() << n))
            .collect();
        let mut out = Vec::new();
        for s in 0u32..(1 << (2 * n)) {
            if faces.contains(&s) {
                continue;
            }
            let minimal = IndexSet::from_bits(s)
                .iter()
                .all(|r| faces.contains(&(s & !(1 << r))));
            if minimal {
                out.push(
                    IndexSet::from_bits(s)
                        .iter()
                        .map(|r| Ray::from_index(r, n))
                        .collect(),
                );
            }
        }
        Ok(out)
    }

    /// Combinatorial wall check plus random covering check.
    pub fn is_complete(&self, samples: usize, seed: u64) -> CompletenessReport {
        let n = self.rank();
        let mut bad_walls = Vec::new();
        let walls = self.walls();
        for w in &walls {
            let containing: Vec<IndexSet> = self
                .maximal
                .iter()
                .copied()
                .filter(|&m| w.j.is_subset(m) && w.k.is_disjoint(m))
                .collect();
            let expected = {
                let mut e = vec![w.right, w.left];
                e.sort();
                e
            };
            let mut got = containing.clone();
            got.sort();
            if got != expected {
                bad_walls.push(WallWitness {
                    j: w.j.one_based(),
                    k: w.k.one_based(),
                    ell: w.ell + 1,
                    maximal_cones: containing.iter().map(|m| m.one_based()).collect(),
                });
            }
        }

        // rows of each G_m^{-1}, scaled to primitive integers; positive
        // scaling keeps the sign test `G_m^{-1} v >= 0` intact
        let inverses: Vec<Vec<Vec<BigInt>>> = self
            .maximal
            .iter()
            .map(|&m| {
                let inv = self
                    .maximal_cone(m)
                    .gens
                    .inverse()
                    .expect("maximal cones are full-dimensional");
                (0..n).map(|r| primitive_integer(&inv.row(r))).collect()
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut uncovered = None;
        let mut covered = 0usize;
        for _ in 0..samples {
            let v: Vec<Q> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let w = primitive_integer(&v);
            let inside = |rows: &Vec<Vec<BigInt>>| {
                rows.iter().all(|row| {
                    let d: BigInt = row.iter().zip(&w).map(|(a, b)| a * b).sum();
                    !d.is_negative()
                })
            };
            if inverses.iter().any(inside) {
                covered += 1;
            } else if uncovered.is_none() {
                uncovered = Some(v.iter().map(ToString::to_string).collect());
            }
        }
        CompletenessReport {
            pass: bad_walls.is_empty() && uncovered.is_none(),
            walls: walls.len(),
            bad_walls,
            samples,
            covered,
            uncovered_witness: uncovered,
        }
    }
}

/// Numerator uniform in `[-10^6, 10^6]`, denominator uniform in `[1, 10^3]`.
pub fn random_rational(rng: &mut impl Rng) -> Q {
    let num: i64 = rng.random_range(-1_000_000..=1_000_000);
    let den: i64 = rng.random_range(1..=1_000);
    Q::new(num.into(), den.into())
}

pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let n = f.len() - 1;
    // coefficients of t^0..t^n
    let mut poly = vec![0i64; n + 1];
    for (d, &fd) in f.iter().enumerate() {
        let e = n - d;
        let mut binom = 1i64;
        for (m, p) in poly.iter_mut().enumerate().take(e + 1) {
            // (t-1)^e = sum_m C(e,m) t^m (-1)^{e-m}
            let sign = if (e - m).is_multiple_of(2) { 1 } else { -1 };
            *p += fd as i64 * binom * sign;
            binom = binom * (e - m) as i64 / (m + 1) as i64;
        }
    }
    (0..=n).map(|k| poly[n - k]).collect()
}

/// The codimension-one cone `σ_{J,K}` with `ℓ` the missing index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wall {
    pub j: IndexSet,
    pub k: IndexSet,
    pub ell: usize,
    /// `J'` of `σ_{J⊔ℓ, K}`
    pub left: IndexSet,
    /// `J` of `σ_{J, K⊔ℓ}`
    pub right: IndexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallWitness {
    pub j: Vec<usize>,
    pub k: Vec<usize>,
    pub ell: usize,
    pub maximal_cones: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub pass: bool,
    pub cones: usize,
    pub dims_ok: bool,
    pub f_vector: Vec<u64>,
    pub expected_f_vector: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub pass: bool,
    pub walls: usize,
    pub bad_walls: Vec<WallWitness>,
    pub samples: usize,
    pub covered: usize,
    pub uncovered_witness: Option<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(s: &str) -> CartanMatrix {
        CartanMatrix::parse(s).unwrap()
    }

    fn s(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied())
    }

    #[test]
    fn cone_columns() {
        let a2 = cm("A2");
        let c = cone(&a2, s(&[0]), s(&[1])).unwrap();
        assert_eq!(c.gens.column(0), vec![q(-2), q(1)]);
        assert_eq!(c.gens.column(1), vec![q(0), q(1)]);
        assert_eq!(c.dim, 2);
        assert_eq!(cone(&a2, IndexSet::EMPTY, IndexSet::EMPTY).unwrap().dim, 0);
        assert_eq!(cone(&cm("G2"), s(&[0, 1]), IndexSet::EMPTY).unwrap().dim, 2);
        assert!(matches!(
            cone(&a2, s(&[0]), s(&[0, 1])),
            Err(Error::OverlappingIndexSets(_))
        ));
    }

    #[test]
    fn membership_cases() {
        let a2 = cm("A2");
        let c = cone(&a2, s(&[0]), IndexSet::EMPTY).unwrap();
        let neg = LatticeVector::new(Ray::NegCoroot(0).vector(&a2), Basis::FundamentalCoweight);
        assert_eq!(membership(&c, &neg), Some(vec![q(1)]));
        let w1 = LatticeVector::unit(2, 0, Basis::FundamentalCoweight);
        assert_eq!(membership(&c, &w1), None);
        let zero = LatticeVector::zero(2, Basis::FundamentalCoweight);
        assert_eq!(membership(&c, &zero), Some(vec![q(0)]));
        let apex = cone(&a2, IndexSet::EMPTY, IndexSet::EMPTY).unwrap();
        assert_eq!(membership(&apex, &zero), Some(vec![]));
    }

    #[test]
    fn intersections_by_formula() {
        let a2 = cm("A2");
        let c = |j: &[usize], k: &[usize]| cone(&a2, s(j), s(k)).unwrap();
        assert_eq!(intersect(&a2, &c(&[0], &[]), &c(&[], &[0])).dim, 0);
        assert_eq!(intersect(&a2, &c(&[0], &[1]), &c(&[0], &[1])), c(&[0], &[1]));
        assert_eq!(intersect(&a2, &c(&[0, 1], &[]), &c(&[1], &[])), c(&[1], &[]));
    }

    #[test]
    fn counts() {
        let f = FanSigma::new(&cm("A2"));
        assert_eq!(f.f_vector(), vec![1, 4, 4]);
        assert_eq!(f.h_vector(), vec![1, 2, 1]);
        let f1 = FanSigma::new(&cm("A1"));
        assert_eq!(f1.f_vector(), vec![1, 2]);
        assert_eq!(f1.h_vector(), vec![1, 1]);
        let f3 = FanSigma::new(&cm("A3"));
        assert_eq!(f3.f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(f3.walls().len(), 12);
    }

    #[test]
    fn multiplicities() {
        let a2 = cm("A2");
        let f = FanSigma::new(&a2);
        assert_eq!(multiplicity(&f.maximal_cone(IndexSet::full(2))).unwrap(), BigInt::from(3));
        assert_eq!(multiplicity(&f.maximal_cone(IndexSet::EMPTY)).unwrap(), BigInt::from(1));
        let f1 = FanSigma::new(&cm("A1"));
        assert_eq!(multiplicity(&f1.maximal_cone(IndexSet::full(1))).unwrap(), BigInt::from(2));
        assert!(multiplicity(&cone(&a2, s(&[0]), IndexSet::EMPTY).unwrap()).is_err());
    }

    #[test]
    fn a2_wall_neighbours() {
        let f = FanSigma::new(&cm("A2"));
        let w = f
            .walls()
            .into_iter()
            .find(|w| w.j == s(&[0]) && w.k.is_empty())
            .unwrap();
        assert_eq!(w.ell, 1);
        assert_eq!(w.left, s(&[0, 1]));
        assert_eq!(w.right, s(&[0]));
    }

    #[test]
    fn completeness_and_negative_control() {
        let f = FanSigma::new(&cm("A2"));
        let r = f.is_complete(1000, 1);
        assert!(r.pass, "{r:?}");
        let broken = f.without_maximal(s(&[0]));
        let r = broken.is_complete(1000, 1);
        assert!(!r.pass);
        assert!(!r.bad_walls.is_empty());
        assert!(r.uncovered_witness.is_some());
    }

    #[test]
    fn primitive_pairs() {
        for (t, n) in [("A1", 1), ("A2", 2), ("B2", 2)] {
            let f = FanSigma::new(&cm(t));
            let got = f.primitive_collections().unwrap();
            let want: Vec<Vec<Ray>> = (0..n)
                .map(|i| vec![Ray::NegCoroot(i), Ray::Coweight(i)])
                .collect();
            let mut got_sorted = got.clone();
            got_sorted.sort();
            assert_eq!(got_sorted, want, "{t}");
        }
    }

    #[test]
    fn fixed_point_patterns() {
        let p = zero_pattern_fixed_point(2, IndexSet::EMPTY);
        assert_eq!((p.x.clone(), p.y.clone()), (vec![q(1), q(1)], vec![q(0), q(0)]));
        let p = zero_pattern_fixed_point(2, IndexSet::full(2));
        assert_eq!((p.x.clone(), p.y.clone()), (vec![q(0), q(0)], vec![q(1), q(1)]));
        let p = zero_pattern_fixed_point(2, s(&[0]));
        assert_eq!((p.x.clone(), p.y.clone()), (vec![q(0), q(1)], vec![q(1), q(0)]));
        assert!(QuotientPoint::new(vec![q(0)], vec![q(0)]).is_err());
    }
}
