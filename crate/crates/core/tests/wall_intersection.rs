use cartan_toric::fan::FanSigma;
use cartan_toric::linalg::{q_frac, Q};
use cartan_toric::wall::{closed_form_x, intersection_sign, kleiman_ample_check, wall_for, wall_relation, Sign};
use cartan_toric::{CartanMatrix, IndexSet};

fn fan(s: &str) -> FanSigma {
    FanSigma::new(&CartanMatrix::parse(s).unwrap())
}

fn s(v: &[usize]) -> IndexSet {
    IndexSet::from_indices(v.iter().copied())
}

#[test]
fn wall_counts() {
    // codimension-one cones: choose l, then split the other n - 1 indices
    for (t, n) in [("A1", 1usize), ("A2", 2), ("A3", 3), ("B3", 3), ("F4", 4)] {
        assert_eq!(fan(t).walls().len(), n << (n - 1), "{t}");
    }
}

#[test]
fn a1_relation() {
    let f = fan("A1");
    let w = f.walls()[0];
    assert_eq!((w.left, w.right), (s(&[0]), IndexSet::EMPTY));
    let r = wall_relation(&f, &w).unwrap();
    // -2 x + 1 = 0
    assert_eq!(r.x_ell, q_frac(1, 2));
}

#[test]
fn a2_relations_by_cramer() {
    // x (-2, 1) + y2 (0, 1) + (1, 0) = 0
    let f = fan("A2");
    let r = wall_relation(&f, &wall_for(&f, IndexSet::EMPTY, s(&[1])).unwrap()).unwrap();
    let x = q_frac(1, 2);
    let y2 = -x.clone();
    assert_eq!(r.x_ell, x);
    assert_eq!(r.y[&1], y2);
    assert_eq!(intersection_sign(&r, 0), Sign::Positive);
    assert_eq!(intersection_sign(&r, 1), Sign::Zero);

    // x1 (-2, 1) + x2 (1, -2) + (1, 0) = 0  =>  x1 = 2/3, x2 = 1/3
    let w = wall_for(&f, s(&[1]), IndexSet::EMPTY).unwrap();
    let r = wall_relation(&f, &w).unwrap();
    assert_eq!(r.x_ell, q_frac(2, 3));
    assert_eq!(r.x[&1], q_frac(1, 3));
    assert_eq!(intersection_sign(&r, 1), Sign::Positive);
    assert_eq!(closed_form_x(&f, &w).unwrap()[&1], q_frac(1, 3));
}

#[test]
fn relations_hold_and_are_positive_everywhere() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"] {
        let f = fan(t);
        for w in f.walls() {
            let r = wall_relation(&f, &w).unwrap();
            assert!(r.residual(&f).iter().all(|x| *x == Q::from_integer(0.into())));
            assert!(r.is_positive(), "{t}");
        }
        let k = kleiman_ample_check(&f).unwrap();
        assert!(k.pass && k.positivity && k.closed_form_agrees && k.relations_hold, "{t}");
    }
}
