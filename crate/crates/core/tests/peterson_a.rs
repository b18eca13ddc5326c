use cartan_toric::linalg::{q, q_frac, RatMatrix, Q};
use cartan_toric::peterson::{
    closed_form_q, delta, equivariance_check, fiber_count, fixed_point_image_check, gamma, jacobian_at,
    jacobian_rank_check, kostant_check, nonvanishing, psi, sample_peterson_cell, sl3_cell_point, w0_dot,
    w_dot, PetersonPoint,
};
use cartan_toric::{Error, IndexSet};
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn nonzero(rng: &mut impl Rng) -> Q {
    loop {
        let v = Q::new(rng.random_range(-9i64..=9).into(), rng.random_range(1i64..=5).into());
        if !v.is_zero() {
            return v;
        }
    }
}

/// Upper triangular with determinant one and random entries.
fn borel(size: usize, rng: &mut impl Rng) -> (RatMatrix, Vec<Q>) {
    let mut t: Vec<Q> = (0..size - 1).map(|_| nonzero(rng)).collect();
    let prod: Q = t.iter().fold(Q::one(), |a, b| a * b);
    t.push(Q::one() / prod);
    let mut b = RatMatrix::zeros(size, size);
    for r in 0..size {
        b[(r, r)] = t[r].clone();
        for s in r + 1..size {
            b[(r, s)] = q(rng.random_range(-5..=5));
        }
    }
    (b, t)
}

#[test]
fn sl2_cell() {
    let t = q(3);
    let g = RatMatrix::from_rows(vec![vec![q(1), q(0)], vec![t.clone(), q(1)]]);
    let p = PetersonPoint::new(g).unwrap();
    assert!(p.in_peterson());
    assert_eq!(p.q_alpha(0), q(9));
    assert_eq!(p.delta(0), q(1));
    let k = kostant_check(&p);
    assert!(k.pass && !k.skipped);
    assert_eq!(k.delta_prime, vec!["1/3"]);
}

#[test]
fn sl3_cell_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let a = nonzero(&mut rng);
        let c = nonzero(&mut rng);
        let Some(g) = sl3_cell_point(&a, &c) else { continue };
        let p = PetersonPoint::new(g).unwrap();
        assert!(p.in_peterson());
        let s = &a + &c;
        assert_eq!(p.q_alpha(0) * &s, &a * &a * &a);
        assert_eq!(p.q_alpha(1) * &s, &c * &c * &c);
        assert_eq!(closed_form_q(2, &[a, c]).unwrap(), vec![p.q_alpha(0), p.q_alpha(1)]);
    }
    assert!(sl3_cell_point(&q(2), &q(-2)).is_none());
}

#[test]
fn hessenberg_entries_for_sl3() {
    // M = g^{-1} e g on the cell, written out by hand at a = 1, c = 2
    let g = sl3_cell_point(&q(1), &q(2)).unwrap();
    assert_eq!(g[(2, 0)], q_frac(2, 3));
    let p = PetersonPoint::new(g).unwrap();
    assert_eq!(p.m[(2, 0)], q(0));
    assert_eq!(p.q_alpha(0), q_frac(1, 3));
    assert_eq!(p.q_alpha(1), q_frac(8, 3));
}

#[test]
fn right_borel_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [1, 2] {
        for s in sample_peterson_cell(n, 100, 4).unwrap() {
            let (b, t) = borel(n + 1, &mut rng);
            let moved = PetersonPoint::new(&s.point.g * &b).unwrap();
            assert!(moved.in_peterson());
            for i in 0..n {
                let varpi: Q = t[..=i].iter().fold(Q::one(), |a, x| a * x);
                assert_eq!(moved.delta(i), varpi * s.point.delta(i));
                let alpha = &t[i] / &t[i + 1];
                assert_eq!(moved.q_alpha(i), alpha * s.point.q_alpha(i));
            }
        }
    }
}

#[test]
fn principal_torus_equivariance() {
    for n in [1, 2] {
        for (k, s) in sample_peterson_cell(n, 50, 7).unwrap().iter().enumerate() {
            let z = q(k as i64 % 5 + 2);
            let r = equivariance_check(&z, &s.point).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
    // alpha_i(gamma(z)) = z^2 on every simple root
    let g = gamma(4, &q(3));
    for i in 0..3 {
        assert_eq!(&g[(i, i)] / &g[(i + 1, i + 1)], q(9));
    }
}

#[test]
fn kostant_identity_on_samples() {
    for n in [1, 2] {
        let samples = sample_peterson_cell(n, 100, 0).unwrap();
        let checked: Vec<_> = samples.iter().map(|s| kostant_check(&s.point)).filter(|r| !r.skipped).collect();
        assert!(checked.len() >= 95);
        assert!(checked.iter().all(|r| r.pass));
    }
}

#[test]
fn representatives_have_determinant_one() {
    for size in 2..=6 {
        assert_eq!(w0_dot(size).det(), q(1));
    }
    for n in 1..=3 {
        for j in IndexSet::all_subsets(n) {
            let w = w_dot(n, j);
            assert_eq!(w.det(), q(1));
            let p = PetersonPoint::new(w).unwrap();
            assert!(p.in_peterson(), "{j}");
            let r = fixed_point_image_check(n, j).unwrap();
            assert!(r.pattern_ok && r.equal_mod_t, "{n} {j}");
            // Delta_i vanishes exactly on J
            for i in 0..n {
                assert_eq!(delta(&p.g, i).is_zero(), j.contains(i));
            }
        }
    }
}

#[test]
fn nonvanishing_on_samples_and_fixed_points() {
    for n in [1, 2] {
        let pts: Vec<_> = sample_peterson_cell(n, 100, 3).unwrap().into_iter().map(|s| s.point).collect();
        assert!(nonvanishing(&pts));
        assert!(pts.iter().all(|p| psi(p).is_ok()));
        let fixed: Vec<_> = IndexSet::all_subsets(n).map(|j| PetersonPoint::new(w_dot(n, j)).unwrap()).collect();
        assert!(nonvanishing(&fixed));
    }
}

#[test]
fn jacobian_full_rank() {
    // SL2: d(t^2)/dt = 2t
    assert_eq!(jacobian_at(1, &[q(5)]).unwrap().unwrap()[(0, 0)], q(10));
    // SL3 at (1, 1): det = 3/2 by hand from the quotient rule
    assert_eq!(jacobian_at(2, &[q(1), q(1)]).unwrap().unwrap().det(), q_frac(3, 2));
    assert!(jacobian_at(2, &[q(1), q(-1)]).unwrap().is_none());
    for n in [1, 2] {
        let r = jacobian_rank_check(n, 20, 1).unwrap();
        assert_eq!(r.rank, n);
        assert!(!r.inconclusive);
    }
}

#[test]
fn fiber_degrees() {
    assert_eq!(fiber_count(1, &[q(4)]).unwrap(), 2);
    assert!(fiber_count(2, &[q(1), q(2)]).unwrap() > 0);
}

#[test]
fn rejects_what_it_cannot_handle() {
    assert!(matches!(sample_peterson_cell(3, 1, 0), Err(Error::UnsupportedRank(3))));
    let bad = RatMatrix::from_i64_rows(&[vec![2, 0], vec![0, 1]]);
    assert!(matches!(PetersonPoint::new(bad), Err(Error::NotSpecialLinear)));
    let g = RatMatrix::from_i64_rows(&[vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1]]);
    let p = PetersonPoint::new(g).unwrap();
    assert!(!p.in_peterson());
    assert!(matches!(psi(&p), Err(Error::NotInPeterson)));
}
