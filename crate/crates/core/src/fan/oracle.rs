//! Brute-force cone intersection by double description.
//!
//! Each simplicial cone is turned into inequalities, the two systems are
//! concatenated, and the extreme rays of the result are recomputed from
//! scratch. Nothing here uses the index-set formula for intersections.

use num::{BigInt, Signed, Zero};
use serde::Serialize;

use super::{intersect, ConeJK, FanSigma};
use crate::error::{Error, Result};
use crate::linalg::{dot, primitive_integer, RatMatrix, Q};

/// Largest rank accepted by the brute-force routines.
pub const ORACLE_GUARD: usize = 4;

/// Inequalities `a . x >= 0` cutting out the cone spanned by the columns of
/// `gens` (assumed independent). Equalities of the span appear as `±` pairs.
pub fn h_representation(gens: &RatMatrix) -> Vec<Vec<Q>> {
    let n = gens.rows();
    let k = gens.cols();
    // extend the generators to a basis with unit vectors
    let mut cols: Vec<Vec<Q>> = (0..k).map(|c| gens.column(c)).collect();
    for e in 0..n {
        if cols.len() == n {
            break;
        }
        let mut unit = vec![Q::zero(); n];
        unit[e] = Q::from_integer(1.into());
        let mut trial = cols.clone();
        trial.push(unit);
        if RatMatrix::from_columns(n, &trial).rank() == trial.len() {
            cols = trial;
        }
    }
    let inv = RatMatrix::from_columns(n, &cols)
        .inverse()
        .expect("extended basis is invertible");
    let mut rows = Vec::new();
    for r in 0..n {
        let row = inv.row(r);
        if r < k {
            rows.push(row);
        } else {
            rows.push(row.iter().map(|x| -x).collect());
            rows.push(row);
        }
    }
    rows
}

/// Extreme rays of `{x : a . x >= 0 for all rows a}`, plus a basis of its
/// lineality space.
pub fn double_description(n: usize, rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let mut lineality: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut e = vec![Q::zero(); n];
            e[i] = Q::from_integer(1.into());
            e
        })
        .collect();
    let mut rays: Vec<Vec<Q>> = Vec::new();

    for (step, a) in rows.iter().enumerate() {
        if let Some(p) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(p);
            if dot(a, &l0).is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
            }
            let al0 = dot(a, &l0);
            let project = |v: &Vec<Q>| -> Vec<Q> {
                let f = dot(a, v) / &al0;
                v.iter().zip(&l0).map(|(x, y)| x - &f * y).collect()
            };
            lineality = lineality.iter().map(project).collect();
            rays = rays.iter().map(project).collect();
            rays.push(l0);
            continue;
        }
        let vals: Vec<Q> = rays.iter().map(|r| dot(a, r)).collect();
        let mut next: Vec<Vec<Q>> = rays
            .iter()
            .zip(&vals)
            .filter(|(_, v)| !v.is_negative())
            .map(|(r, _)| r.clone())
            .collect();
        for (p, vp) in rays.iter().zip(&vals) {
            if !vp.is_positive() {
                continue;
            }
            for (m, vm) in rays.iter().zip(&vals) {
                if !vm.is_negative() {
                    continue;
                }
                let comb: Vec<Q> = m
                    .iter()
                    .zip(p)
                    .map(|(x, y)| vp * x - vm * y)
                    .collect();
                next.push(comb);
            }
        }
        let processed = &rows[..=step];
        rays = prune(next, processed);
    }
    (rays, lineality)
}

/// Keeps only extreme rays of the cone cut out by `processed`, one per direction.
fn prune(cands: Vec<Vec<Q>>, processed: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let full_rank = RatMatrix::from_rows(processed.to_vec()).rank();
    let mut seen: Vec<Vec<BigInt>> = Vec::new();
    let mut out = Vec::new();
    for r in cands {
        if r.iter().all(Zero::is_zero) {
            continue;
        }
        let tight: Vec<Vec<Q>> = processed
            .iter()
            .filter(|a| dot(a, &r).is_zero())
            .cloned()
            .collect();
        let tight_rank = if tight.is_empty() {
            0
        } else {
            RatMatrix::from_rows(tight).rank()
        };
        // modulo lineality, extreme rays are where all but one direction is tight
        if tight_rank + 1 != full_rank {
            continue;
        }
        let key = primitive_integer(&r);
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        out.push(r);
    }
    out
}

/// Extreme rays of `a ∩ b` as sorted primitive integer vectors.
pub fn intersect_oracle(a: &ConeJK, b: &ConeJK) -> Result<Vec<Vec<BigInt>>> {
    let n = a.ambient();
    if n > ORACLE_GUARD {
        return Err(Error::Guard {
            op: "intersect_oracle",
            limit: ORACLE_GUARD,
            got: n,
            hint: "use fan::intersect, which applies the index-set formula",
        });
    }
    let mut rows = h_representation(&a.gens);
    rows.extend(h_representation(&b.gens));
    let (rays, lineality) = double_description(n, &rows);
    debug_assert!(lineality.is_empty(), "intersection of pointed cones is pointed");
    let mut out: Vec<Vec<BigInt>> = rays.iter().map(|r| primitive_integer(r)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub a: [Vec<usize>; 2],
    pub b: [Vec<usize>; 2],
    pub oracle: Vec<Vec<String>>,
    pub formula: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub pass: bool,
    pub pairs: usize,
    pub mismatches: Vec<OracleMismatch>,
}

/// Runs [`intersect_oracle`] on every unordered pair of cones (including
/// each cone with itself) and compares with `σ_{J∩P, K∩Q}`.
pub fn oracle_check(f: &FanSigma) -> Result<OracleReport> {
    let show = |v: &[Vec<BigInt>]| -> Vec<Vec<String>> {
        v.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
    };
    let mut pairs = 0;
    let mut mismatches = Vec::new();
    for (ia, a) in f.cones.iter().enumerate() {
        for b in &f.cones[ia..] {
            pairs += 1;
            let got = intersect_oracle(a, b)?;
            let mut want = intersect(&f.cartan, a, b).primitive_rays();
            want.sort();
            if got != want {
                mismatches.push(OracleMismatch {
                    a: [a.j.one_based(), a.k.one_based()],
                    b: [b.j.one_based(), b.k.one_based()],
                    oracle: show(&got),
                    formula: show(&want),
                });
            }
        }
    }
    Ok(OracleReport {
        pass: mismatches.is_empty(),
        pairs,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanMatrix;
    use crate::fan::{cone, intersect, FanSigma};
    use crate::index_set::IndexSet;
    use crate::linalg::q;

    fn s(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied())
    }

    #[test]
    fn square_quadrant() {
        // x >= 0, y >= 0
        let rows = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let (rays, lin) = double_description(2, &rows);
        assert!(lin.is_empty());
        let mut p: Vec<_> = rays.iter().map(|r| primitive_integer(r)).collect();
        p.sort();
        assert_eq!(p, vec![vec![0.into(), 1.into()], vec![1.into(), 0.into()]]);
    }

    #[test]
    fn half_plane_keeps_a_line() {
        let rows = vec![vec![q(1), q(0)]];
        let (rays, lin) = double_description(2, &rows);
        assert_eq!(rays.len(), 1);
        assert_eq!(lin.len(), 1);
    }

    #[test]
    fn orientation_is_kept() {
        // the ray -e1 alone must not collapse onto +e1
        let c = CartanMatrix::parse("A1").unwrap();
        let neg = cone(&c, s(&[0]), IndexSet::EMPTY).unwrap();
        let got = intersect_oracle(&neg, &neg).unwrap();
        assert_eq!(got, vec![vec![BigInt::from(-1)]]);
    }

    #[test]
    fn worked_cases_in_a2() {
        let c = CartanMatrix::parse("A2").unwrap();
        let k = |j: &[usize], kk: &[usize]| cone(&c, s(j), s(kk)).unwrap();
        let cases = [
            (k(&[0], &[]), k(&[], &[0])),
            (k(&[0], &[1]), k(&[0], &[1])),
            (k(&[0, 1], &[]), k(&[1], &[])),
            (k(&[], &[0]), k(&[], &[1])),
        ];
        for (a, b) in cases {
            assert_eq!(
                intersect_oracle(&a, &b).unwrap(),
                intersect(&c, &a, &b).primitive_rays()
            );
        }
        let f = FanSigma::new(&c);
        let m = f.maximal_cone(s(&[0]));
        assert_eq!(intersect_oracle(&m, &m).unwrap().len(), 2);
        assert!(intersect_oracle(&k(&[], &[0]), &k(&[], &[1])).unwrap().is_empty());
    }

    #[test]
    fn guard() {
        let c = CartanMatrix::parse("A5").unwrap();
        let a = cone(&c, IndexSet::EMPTY, IndexSet::EMPTY).unwrap();
        assert!(matches!(intersect_oracle(&a, &a), Err(Error::Guard { .. })));
    }
}
