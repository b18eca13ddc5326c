//! Finite Weyl groups as integer matrices on simple-root coordinates.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::cartan::{Basis, CartanMatrix, LatticeVector};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::linalg::q;

/// Largest group `generate_weyl_group` will enumerate (the order of `E6`).
pub const GROUP_GUARD: usize = 51_840;

/// Positive roots in simple-root coordinates, sorted by height then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(c: &CartanMatrix) -> RootSystem {
        let n = c.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let r = reflect_root(c, i, &b);
                if r.iter().all(|&x| x >= 0) && seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen.into_iter().collect();
        positive.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
        RootSystem { positive }
    }

    /// `D = |Φ⁺|`
    pub fn count(&self) -> usize {
        self.positive.len()
    }

    pub fn heights(&self) -> Vec<i64> {
        self.positive.iter().map(|r| height(r)).collect()
    }

    /// Positive roots supported on `J`.
    pub fn in_span(&self, j: IndexSet) -> usize {
        self.positive
            .iter()
            .filter(|r| r.iter().enumerate().all(|(k, &x)| x == 0 || j.contains(k)))
            .count()
    }
}

pub fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

fn is_positive(r: &[i64]) -> bool {
    r.iter().any(|&x| x != 0) && r.iter().all(|&x| x >= 0)
}

fn is_negative(r: &[i64]) -> bool {
    r.iter().any(|&x| x != 0) && r.iter().all(|&x| x <= 0)
}

/// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i` in root coordinates.
fn reflect_root(c: &CartanMatrix, i: usize, beta: &[i64]) -> Vec<i64> {
    let p: i64 = beta.iter().enumerate().map(|(j, &b)| b * c.entry(j, i)).sum();
    let mut out = beta.to_vec();
    out[i] -= p;
    out
}

/// A Weyl group element: column `j` of `mat` is `w(alpha_j)` in root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub mat: Vec<Vec<i64>>,
    /// Reduced word `w = s_{word[0]} ... s_{word[k-1]}`, 0-based indices.
    pub word: Vec<usize>,
    pub length: usize,
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        let mat = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylElement {
            mat,
            word: vec![],
            length: 0,
        }
    }

    pub fn simple(c: &CartanMatrix, i: usize) -> WeylElement {
        let n = c.rank();
        let mut mat = vec![vec![0; n]; n];
        for (j, row) in mat.iter_mut().enumerate() {
            row[j] = 1;
        }
        for (j, x) in mat[i].iter_mut().enumerate() {
            *x -= c.entry(j, i);
        }
        WeylElement {
            mat,
            word: vec![i],
            length: 1,
        }
    }

    /// Builds the element from its matrix, recovering a reduced word by
    /// greedy right descent.
    pub fn from_matrix(c: &CartanMatrix, mat: Vec<Vec<i64>>) -> WeylElement {
        let n = c.rank();
        let mut word = Vec::new();
        let mut cur = mat.clone();
        while let Some(i) = (0..n).find(|&i| is_negative(&column(&cur, i))) {
            word.push(i);
            cur = mat_mul(&cur, &WeylElement::simple(c, i).mat);
        }
        word.reverse();
        let length = word.len();
        WeylElement { mat, word, length }
    }

    pub fn is_identity(&self) -> bool {
        self.mat
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    /// `w(beta)` for `beta` in root coordinates.
    pub fn apply(&self, beta: &[i64]) -> Vec<i64> {
        self.mat
            .iter()
            .map(|r| r.iter().zip(beta).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn compose(&self, c: &CartanMatrix, other: &WeylElement) -> WeylElement {
        WeylElement::from_matrix(c, mat_mul(&self.mat, &other.mat))
    }

    pub fn inverse(&self, c: &CartanMatrix) -> WeylElement {
        let mut w = WeylElement::identity(c.rank());
        for &i in self.word.iter().rev() {
            w.mat = mat_mul(&w.mat, &WeylElement::simple(c, i).mat);
        }
        WeylElement::from_matrix(c, w.mat)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, roots: &RootSystem) -> usize {
        roots
            .positive
            .iter()
            .filter(|b| is_negative(&self.apply(b)))
            .count()
    }

    /// `w(lambda)` for `lambda` in fundamental-weight coordinates, computed
    /// letter by letter with `s_k(lambda) = lambda - lambda_k alpha_k`.
    pub fn apply_weight(&self, c: &CartanMatrix, lambda: &[i64]) -> Vec<i64> {
        let mut v = lambda.to_vec();
        for &k in self.word.iter().rev() {
            let lk = v[k];
            for (j, x) in v.iter_mut().enumerate() {
                *x -= lk * c.entry(k, j);
            }
        }
        v
    }

    /// 1-based reduced word, for reports.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }
}

fn column(m: &[Vec<i64>], j: usize) -> Vec<i64> {
    m.iter().map(|r| r[j]).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// All elements of `W`, each with a reduced word, in breadth-first order.
pub fn generate_weyl_group(c: &CartanMatrix) -> Result<Vec<WeylElement>> {
    if let Some(t) = c.label() {
        let order = t.weyl_order();
        if order > GROUP_GUARD as u128 {
            return Err(Error::Guard {
                op: "generate_weyl_group",
                limit: GROUP_GUARD,
                got: usize::try_from(order).unwrap_or(usize::MAX),
                hint: "use longest_element for parabolic data instead",
            });
        }
    }
    let n = c.rank();
    let gens: Vec<WeylElement> = (0..n).map(|i| WeylElement::simple(c, i)).collect();
    let id = WeylElement::identity(n);
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([id.mat.clone()]);
    let mut queue = VecDeque::from([id.mat.clone()]);
    let mut out = vec![id];
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let next = mat_mul(&m, &g.mat);
            if seen.insert(next.clone()) {
                if seen.len() > GROUP_GUARD {
                    return Err(Error::Guard {
                        op: "generate_weyl_group",
                        limit: GROUP_GUARD,
                        got: seen.len(),
                        hint: "use longest_element for parabolic data instead",
                    });
                }
                out.push(WeylElement::from_matrix(c, next.clone()));
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// `w_J`, the longest element of the parabolic subgroup `W_J`.
pub fn longest_element(c: &CartanMatrix, j: IndexSet) -> WeylElement {
    let n = c.rank();
    let mut mat = WeylElement::identity(n).mat;
    while let Some(k) = j.iter().find(|&k| is_positive(&column(&mat, k))) {
        mat = mat_mul(&mat, &WeylElement::simple(c, k).mat);
    }
    WeylElement::from_matrix(c, mat)
}

/// Checks `w_J(Δ_J) = -Δ_J` and `w_J^{-1}(Δ - Δ_J) ⊆ Φ⁺`.
pub fn check_longest_property(c: &CartanMatrix, j: IndexSet, w: &WeylElement) -> bool {
    let n = c.rank();
    let winv = w.inverse(c);
    let unit = |k: usize| {
        let mut e = vec![0; n];
        e[k] = 1;
        e
    };
    let on_j = j.iter().all(|k| {
        let img = w.apply(&unit(k));
        let neg: Vec<i64> = img.iter().map(|x| -x).collect();
        neg.iter().filter(|&&x| x != 0).count() == 1
            && j.iter().any(|m| neg == unit(m))
    });
    let off_j = j
        .complement(n)
        .iter()
        .all(|k| is_positive(&winv.apply(&unit(k))));
    on_j && off_j
}

/// `Y^S = { w_J : J ⊆ I }` as `(J, w_J)` pairs in bit order of `J`.
pub fn fixed_point_set(c: &CartanMatrix) -> Vec<(IndexSet, WeylElement)> {
    IndexSet::all_subsets(c.rank())
        .map(|j| (j, longest_element(c, j)))
        .collect()
}

/// `w >= s_i` in Bruhat order, tested as `w(varpi_i) != varpi_i`.
pub fn bruhat_geq_simple(c: &CartanMatrix, w: &WeylElement, i: usize) -> bool {
    let mut pi = vec![0; c.rank()];
    pi[i] = 1;
    w.apply_weight(c, &pi) != pi
}

/// `s_k(varpi_i) = varpi_i - <varpi_i, alpha_k^vee> alpha_k` in weight coordinates.
pub fn reflect_weight(c: &CartanMatrix, k: usize, i: usize) -> Result<LatticeVector> {
    let n = c.rank();
    for idx in [k, i] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, rank: n });
        }
    }
    let mut v = LatticeVector::unit(n, i, Basis::FundamentalWeight);
    if k == i {
        v = v.add(&c.root_in_weight_coords(k)?.neg());
    }
    Ok(v)
}

/// The two fixed-point sets attached to index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroLocusPartition {
    #[serde(rename = "type")]
    pub type_name: String,
    /// 1-based
    pub i: usize,
    #[serde(rename = "setA")]
    pub set_a: Vec<Vec<usize>>,
    #[serde(rename = "setB")]
    pub set_b: Vec<Vec<usize>>,
    pub disjoint: bool,
    pub covers: bool,
    /// `set_a` is exactly `{J : i in J}`.
    pub matches_index_rule: bool,
}

/// `setA` from the Bruhat test, `setB` from the criterion
/// `w_J^{-1} alpha_k != -alpha_i` for all `k`.
pub fn zero_locus_partition(c: &CartanMatrix, i: usize) -> Result<ZeroLocusPartition> {
    let n = c.rank();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let fixed = fixed_point_set(c);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (j, w) in &fixed {
        if bruhat_geq_simple(c, w, i) {
            a.push(*j);
        }
        let winv = w.inverse(c);
        let hits = (0..n).any(|k| {
            let mut e = vec![0; n];
            e[k] = 1;
            let img = winv.apply(&e);
            img.iter()
                .enumerate()
                .all(|(m, &x)| x == if m == i { -1 } else { 0 })
        });
        if !hits {
            b.push(*j);
        }
    }
    let disjoint = a.iter().all(|x| !b.contains(x));
    let covers = a.len() + b.len() == fixed.len() && disjoint;
    let matches_index_rule = a.iter().all(|j| j.contains(i)) && b.iter().all(|j| !j.contains(i));
    Ok(ZeroLocusPartition {
        type_name: c.name(),
        i: i + 1,
        set_a: a.iter().map(|j| j.one_based()).collect(),
        set_b: b.iter().map(|j| j.one_based()).collect(),
        disjoint,
        covers,
        matches_index_rule,
    })
}

/// `i -> i*` with `-w_0 alpha_i = alpha_{i*}`.
pub fn star_involution(c: &CartanMatrix) -> Vec<usize> {
    let n = c.rank();
    let w0 = longest_element(c, IndexSet::full(n));
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            let img = w0.apply(&e);
            img.iter()
                .position(|&x| x == -1)
                .expect("w_0 sends simple roots to negative simple roots")
        })
        .collect()
}

/// `ht(w(alpha_i))` as an exact rational, used by the localization maps.
pub fn height_of_image(w: &WeylElement, i: usize) -> crate::linalg::Q {
    let mut e = vec![0; w.mat.len()];
    e[i] = 1;
    q(height(&w.apply(&e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(s: &str) -> CartanMatrix {
        CartanMatrix::parse(s).unwrap()
    }

    #[test]
    fn root_counts() {
        for (s, d) in [("A2", 3), ("A3", 6), ("B2", 4), ("G2", 6), ("F4", 24), ("E6", 36), ("E8", 120)] {
            let r = RootSystem::new(&cm(s));
            assert_eq!(r.count(), d, "{s}");
            assert_eq!(r.heights().iter().filter(|&&h| h == 1).count(), cm(s).rank());
        }
    }

    #[test]
    fn a2_longest() {
        let c = cm("A2");
        let w0 = longest_element(&c, IndexSet::full(2));
        assert_eq!(w0.apply(&[1, 0]), vec![0, -1]);
        assert_eq!(w0.length, 3);
        assert!(longest_element(&c, IndexSet::EMPTY).is_identity());
        assert_eq!(longest_element(&c, IndexSet::singleton(0)), WeylElement::simple(&c, 0));
    }

    #[test]
    fn small_bruhat_cases() {
        let c = cm("A2");
        let s1 = WeylElement::simple(&c, 0);
        let s2 = WeylElement::simple(&c, 1);
        assert!(bruhat_geq_simple(&c, &s1, 0));
        assert!(!bruhat_geq_simple(&c, &s2, 0));
        let w = longest_element(&c, IndexSet::full(2));
        assert!(bruhat_geq_simple(&c, &w, 0) && bruhat_geq_simple(&c, &w, 1));
        let a3 = cm("A3");
        let w13 = longest_element(&a3, IndexSet::from_indices([0, 2]));
        assert!(!bruhat_geq_simple(&a3, &w13, 1));
    }

    #[test]
    fn reflect_weight_cases() {
        let c = cm("A2");
        assert_eq!(reflect_weight(&c, 0, 0).unwrap().coords, vec![q(-1), q(1)]);
        assert_eq!(reflect_weight(&c, 1, 0).unwrap().coords, vec![q(1), q(0)]);
        let g = cm("G2");
        let want = LatticeVector::unit(2, 0, Basis::FundamentalWeight)
            .add(&g.root_in_weight_coords(0).unwrap().neg());
        assert_eq!(reflect_weight(&g, 0, 0).unwrap(), want);
    }

    #[test]
    fn a2_partition() {
        let p = zero_locus_partition(&cm("A2"), 0).unwrap();
        assert_eq!(p.set_a, vec![vec![1], vec![1, 2]]);
        assert_eq!(p.set_b, vec![vec![], vec![2]]);
        assert!(p.disjoint && p.covers);
    }

    #[test]
    fn star_maps() {
        assert_eq!(star_involution(&cm("A3")), vec![2, 1, 0]);
        assert_eq!(star_involution(&cm("B3")), vec![0, 1, 2]);
        assert_eq!(star_involution(&cm("E6")), vec![5, 1, 4, 3, 2, 0]);
    }

    #[test]
    fn e7_is_guarded() {
        assert!(matches!(generate_weyl_group(&cm("E7")), Err(Error::Guard { .. })));
    }
}
