use cartan_toric::fan::{
    cone, intersect, intersect_oracle, membership, multiplicity, oracle_check, zero_pattern_fixed_point,
    FanSigma, QuotientPoint, Ray,
};
use cartan_toric::linalg::q;
use cartan_toric::{Basis, CartanMatrix, Error, IndexSet, LatticeVector};

fn cm(s: &str) -> CartanMatrix {
    CartanMatrix::parse(s).unwrap()
}

fn s(v: &[usize]) -> IndexSet {
    IndexSet::from_indices(v.iter().copied())
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn face_numbers_are_binomial_times_power_of_two() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"] {
        let f = FanSigma::new(&cm(t));
        let n = f.rank() as u64;
        let want: Vec<u64> = (0..=n).map(|d| binom(n, d) << d).collect();
        assert_eq!(f.f_vector(), want, "{t}");
        let h: Vec<i64> = (0..=n).map(|d| binom(n, d) as i64).collect();
        assert_eq!(f.h_vector(), h, "{t}");
        assert!(f.structure_check().pass);
        assert_eq!(f.maximal.len(), 1 << n);
    }
}

#[test]
fn cone_examples() {
    let c = cm("A2");
    let k = cone(&c, s(&[0]), s(&[1])).unwrap();
    assert_eq!(k.dim, 2);
    assert_eq!(k.gens.column(0), vec![q(-2), q(1)]);
    assert_eq!(k.gens.column(1), vec![q(0), q(1)]);
    assert_eq!(cone(&c, IndexSet::EMPTY, IndexSet::EMPTY).unwrap().dim, 0);
    assert_eq!(cone(&cm("G2"), s(&[0, 1]), IndexSet::EMPTY).unwrap().dim, 2);
    assert!(matches!(cone(&c, s(&[0]), s(&[0])), Err(Error::OverlappingIndexSets(_))));
}

#[test]
fn membership_examples() {
    let c = cm("A2");
    let k = cone(&c, s(&[0]), IndexSet::EMPTY).unwrap();
    let neg = c.coroot_in_coweight_coords(0).unwrap().neg();
    assert_eq!(membership(&k, &neg), Some(vec![q(1)]));
    let w1 = LatticeVector::unit(2, 0, Basis::FundamentalCoweight);
    assert_eq!(membership(&k, &w1), None);
    assert_eq!(membership(&k, &LatticeVector::zero(2, Basis::FundamentalCoweight)), Some(vec![q(0)]));
}

#[test]
fn intersection_examples() {
    let c = cm("A2");
    let a = cone(&c, s(&[0]), IndexSet::EMPTY).unwrap();
    let b = cone(&c, IndexSet::EMPTY, s(&[0])).unwrap();
    assert_eq!(intersect(&c, &a, &b).dim, 0);
    assert!(intersect_oracle(&a, &b).unwrap().is_empty());
    let m = cone(&c, s(&[0]), s(&[1])).unwrap();
    assert_eq!(intersect(&c, &m, &m), m);
    let big = cone(&c, s(&[0, 1]), IndexSet::EMPTY).unwrap();
    let small = cone(&c, s(&[1]), IndexSet::EMPTY).unwrap();
    assert_eq!(intersect(&c, &big, &small), small);
    assert_eq!(intersect_oracle(&big, &big).unwrap().len(), 2);
    let x = cone(&c, IndexSet::EMPTY, s(&[0])).unwrap();
    let y = cone(&c, IndexSet::EMPTY, s(&[1])).unwrap();
    assert!(intersect_oracle(&x, &y).unwrap().is_empty());
}

#[test]
fn oracle_agrees_on_every_pair_in_rank_two() {
    for t in ["A2", "B2", "G2", "A1,A1"] {
        let r = oracle_check(&FanSigma::new(&cm(t))).unwrap();
        assert!(r.pass, "{t}: {:?}", r.mismatches);
        assert_eq!(r.pairs, 9 * 10 / 2);
    }
}

#[test]
fn completeness_and_negative_control() {
    let f = FanSigma::new(&cm("A2"));
    let r = f.is_complete(1000, 1);
    assert!(r.pass && r.covered == 1000);
    let broken = f.without_maximal(s(&[0]));
    let r = broken.is_complete(1000, 1);
    assert!(!r.pass);
    assert!(r.uncovered_witness.is_some());
    assert!(!r.bad_walls.is_empty());
}

#[test]
fn wall_adjacency_example() {
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
fn primitive_collections_are_the_pairs() {
    for (t, n) in [("A1", 1), ("A2", 2), ("B2", 2), ("A3", 3)] {
        let f = FanSigma::new(&cm(t));
        let mut pc = f.primitive_collections().unwrap();
        pc.sort_by_key(|p| p.iter().map(|r| r.index(n)).collect::<Vec<_>>());
        assert_eq!(pc.len(), n);
        for (i, p) in pc.iter().enumerate() {
            assert_eq!(p, &vec![Ray::NegCoroot(i), Ray::Coweight(i)]);
        }
    }
}

#[test]
fn multiplicities() {
    for (t, want) in [("A1", 2), ("A2", 3), ("B2", 2), ("G2", 1), ("A3", 4)] {
        let f = FanSigma::new(&cm(t));
        let n = f.rank();
        assert_eq!(multiplicity(&f.maximal_cone(IndexSet::full(n))).unwrap(), want.into(), "{t}");
        assert_eq!(multiplicity(&f.maximal_cone(IndexSet::EMPTY)).unwrap(), 1.into());
    }
    let c = cm("A2");
    assert!(multiplicity(&cone(&c, s(&[0]), IndexSet::EMPTY).unwrap()).is_err());
}

#[test]
fn fixed_point_patterns() {
    let p = zero_pattern_fixed_point(2, IndexSet::EMPTY);
    assert_eq!((p.x.clone(), p.y.clone()), (vec![q(1), q(1)], vec![q(0), q(0)]));
    let p = zero_pattern_fixed_point(2, s(&[0, 1]));
    assert_eq!((p.x.clone(), p.y.clone()), (vec![q(0), q(0)], vec![q(1), q(1)]));
    let p = zero_pattern_fixed_point(2, s(&[0]));
    assert_eq!((p.x.clone(), p.y.clone()), (vec![q(0), q(1)], vec![q(1), q(0)]));
    assert_eq!(
        QuotientPoint::new(vec![q(0), q(1)], vec![q(0), q(2)]),
        Err(Error::SimultaneousZero(0))
    );
}
