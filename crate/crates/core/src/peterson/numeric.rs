//! Floating-point sampler for the `SL_4` Peterson cell.
//!
//! The three subdiagonal entries of a lower unitriangular `u` are drawn at
//! random and the remaining three are solved for by Newton's method so that
//! `u^{-1} e u` vanishes strictly below the subdiagonal.

use nalgebra::{Matrix3, Matrix4, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub const RESIDUAL_TOL: f64 = 1e-10;
pub const VERIFY_TOL: f64 = 1e-8;

const MAX_ITER: usize = 60;
const RESTARTS: usize = 20;
const POLISH_STEPS: usize = 3;
const REJECTION_BOUND: usize = 1000;

/// `c_ij` of `A_3`.
const CARTAN_A3: [[i32; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];

fn e4() -> Matrix4<f64> {
    Matrix4::from_fn(|r, s| if s == r + 1 { 1.0 } else { 0.0 })
}

/// `sub = (u_21, u_32, u_43)`, `x = (u_31, u_42, u_41)` in 1-based entries.
pub fn unipotent(sub: [f64; 3], x: [f64; 3]) -> Matrix4<f64> {
    let mut u = Matrix4::identity();
    u[(1, 0)] = sub[0];
    u[(2, 1)] = sub[1];
    u[(3, 2)] = sub[2];
    u[(2, 0)] = x[0];
    u[(3, 1)] = x[1];
    u[(3, 0)] = x[2];
    u
}

fn conjugate(u: &Matrix4<f64>) -> Matrix4<f64> {
    let inv = u.try_inverse().expect("unitriangular");
    inv * e4() * u
}

fn residual(sub: [f64; 3], x: [f64; 3]) -> Vector3<f64> {
    let m = conjugate(&unipotent(sub, x));
    Vector3::new(m[(2, 0)], m[(3, 1)], m[(3, 0)])
}

/// Newton iteration with a central-difference Jacobian.
pub fn newton(sub: [f64; 3], start: [f64; 3]) -> Option<[f64; 3]> {
    let mut x = Vector3::from(start);
    let mut polish = 0;
    for _ in 0..MAX_ITER {
        let f = residual(sub, x.into());
        if f.amax() < RESIDUAL_TOL {
            // a few extra steps push the residual to rounding level
            polish += 1;
            if polish > POLISH_STEPS {
                return Some(x.into());
            }
        }
        let h = 1e-6;
        let jac = Matrix3::from_fn(|r, k| {
            let mut plus = x;
            let mut minus = x;
            plus[k] += h;
            minus[k] -= h;
            (residual(sub, plus.into())[r] - residual(sub, minus.into())[r]) / (2.0 * h)
        });
        let step = jac.lu().solve(&f)?;
        x -= step;
        if !x.iter().all(|v| v.is_finite()) {
            return None;
        }
    }
    let f = residual(sub, x.into());
    (f.amax() < RESIDUAL_TOL).then(|| x.into())
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericSample {
    pub sub: [f64; 3],
    pub x: [f64; 3],
    pub residual: f64,
}

impl NumericSample {
    pub fn matrix(&self) -> Matrix4<f64> {
        unipotent(self.sub, self.x)
    }
}

pub fn sample_sl4_cell(count: usize, seed: u64) -> Result<Vec<NumericSample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let sub = [0; 3].map(|_| rng.random_range(-3.0..3.0));
        let found = (0..RESTARTS).find_map(|k| {
            let start = if k == 0 {
                [0.0; 3]
            } else {
                [0; 3].map(|_| rng.random_range(-5.0..5.0))
            };
            newton(sub, start)
        });
        match found {
            Some(x) => out.push(NumericSample {
                sub,
                x,
                residual: residual(sub, x).amax(),
            }),
            None => {
                rejected += 1;
                if rejected >= REJECTION_BOUND {
                    return Err(Error::SamplingExhausted(rejected));
                }
            }
        }
    }
    Ok(out)
}

fn leading_minor(m: &Matrix4<f64>, k: usize) -> f64 {
    m.view((0, 0), (k, k)).determinant()
}

fn w0() -> Matrix4<f64> {
    // signs alternate upwards from +1 in the last row
    Matrix4::from_fn(|r, s| if r + s == 3 { if r % 2 == 1 { 1.0 } else { -1.0 } } else { 0.0 })
}

/// Relative error of `q_i = Π_j Δ'_j^{-c_ij}` at one sample; `None` when the
/// Bruhat factorization breaks down.
pub fn kostant_error(u: &Matrix4<f64>) -> Option<f64> {
    let w = w0();
    let a = w.try_inverse()? * u;
    // Doolittle without pivoting
    let mut l = Matrix4::<f64>::identity();
    let mut r = a;
    for k in 0..4 {
        if r[(k, k)].abs() < 1e-12 {
            return None;
        }
        for i in k + 1..4 {
            let f = r[(i, k)] / r[(k, k)];
            for s in k..4 {
                r[(i, s)] -= f * r[(k, s)];
            }
            l[(i, k)] = f;
        }
    }
    let tw = w * l;
    let dp: Vec<f64> = (1..=3).map(|k| leading_minor(&tw, k)).collect();
    let m = conjugate(u);
    let mut worst: f64 = 0.0;
    for (i, row) in CARTAN_A3.iter().enumerate() {
        let q = -m[(i + 1, i)];
        let p: f64 = row.iter().zip(&dp).map(|(&c, d)| d.powi(-c)).product();
        worst = worst.max((p - q).abs() / q.abs().max(1.0));
    }
    Some(worst)
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericReport {
    pub rank: usize,
    pub samples: usize,
    pub max_residual: f64,
    pub kostant_checked: usize,
    pub kostant_max_error: f64,
    pub kostant_pass: bool,
    pub nonvanishing_pass: bool,
    pub pass: bool,
}

pub fn numeric_check(count: usize, seed: u64) -> Result<NumericReport> {
    let samples = sample_sl4_cell(count, seed)?;
    let max_residual = samples.iter().map(|s| s.residual).fold(0.0, f64::max);
    let errors: Vec<f64> = samples.iter().filter_map(|s| kostant_error(&s.matrix())).collect();
    let kostant_max_error = errors.iter().copied().fold(0.0, f64::max);
    let kostant_pass = !errors.is_empty() && kostant_max_error < VERIFY_TOL;
    let nonvanishing_pass = samples.iter().all(|s| {
        let u = s.matrix();
        let m = conjugate(&u);
        (1..=3).all(|k| leading_minor(&u, k).abs() > VERIFY_TOL || m[(k, k - 1)].abs() > VERIFY_TOL)
    });
    Ok(NumericReport {
        rank: 3,
        samples: samples.len(),
        max_residual,
        kostant_checked: errors.len(),
        kostant_max_error,
        kostant_pass,
        nonvanishing_pass,
        pass: kostant_pass && nonvanishing_pass && max_residual < RESIDUAL_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_lands_in_the_cell() {
        let samples = sample_sl4_cell(20, 3).unwrap();
        for s in &samples {
            assert!(residual(s.sub, s.x).amax() < RESIDUAL_TOL);
        }
    }

    #[test]
    fn kostant_holds_numerically() {
        let r = numeric_check(50, 5).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn representative_has_unit_q() {
        let m = conjugate(&w0());
        assert!((w0().determinant() - 1.0).abs() < 1e-12);
        for i in 0..3 {
            assert!((-m[(i + 1, i)] - 1.0).abs() < 1e-12);
        }
    }
}
