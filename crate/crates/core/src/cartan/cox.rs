use num::{BigInt, One};
use serde::Serialize;

use super::CartanMatrix;
use crate::linalg::{smith_normal_form, IntMatrix};

/// Outcome of the Smith normal form check of `0 -> Λ_r -> Z^{2n} -> Λ -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxReport {
    pub pass: bool,
    pub rank_first: usize,
    pub rank_second: usize,
    pub divisors_first: Vec<String>,
    pub divisors_second: Vec<String>,
    pub composite_zero: bool,
    pub injective: bool,
    pub surjective: bool,
    /// The image of the first map is saturated, so it equals the kernel of the second.
    pub exact_middle: bool,
}

impl CartanMatrix {
    /// `alpha_i -> sum_j <alpha_i, -alpha_j^vee> e_j + sum_j <alpha_i, varpi_j^vee> e_{n+j}`,
    /// as a `2n x n` matrix `[-C^T; I]`.
    pub fn cox_first_map(&self) -> IntMatrix {
        let n = self.rank();
        IntMatrix::from_fn(2 * n, n, |r, i| {
            if r < n {
                BigInt::from(-self.entry(i, r))
            } else if r - n == i {
                BigInt::one()
            } else {
                BigInt::from(0)
            }
        })
    }

    /// `e_i -> varpi_i`, `e_{n+i} -> alpha_i = sum_j c_ij varpi_j`, as the
    /// `n x 2n` matrix `[I | C^T]` in fundamental-weight coordinates.
    pub fn cox_second_map(&self) -> IntMatrix {
        let n = self.rank();
        IntMatrix::from_fn(n, 2 * n, |j, r| {
            if r < n {
                BigInt::from(i64::from(r == j))
            } else {
                BigInt::from(self.entry(r - n, j))
            }
        })
    }
}

pub fn verify_cox_sequence(c: &CartanMatrix) -> CoxReport {
    let n = c.rank();
    let a1 = c.cox_first_map();
    let a2 = c.cox_second_map();
    let s1 = smith_normal_form(&a1);
    let s2 = smith_normal_form(&a2);
    let composite_zero = (&a2 * &a1).is_zero();
    let injective = s1.rank() == n;
    let surjective = s2.rank() == n && s2.divisors.iter().all(One::is_one);
    // im(A1) ⊆ ker(A2), both of rank n; equal iff im(A1) is saturated
    let exact_middle = composite_zero
        && injective
        && s2.rank() + n == 2 * n
        && s1.divisors.iter().all(One::is_one);
    let show = |d: &[BigInt]| d.iter().map(ToString::to_string).collect();
    CoxReport {
        pass: composite_zero && injective && surjective && exact_middle,
        rank_first: s1.rank(),
        rank_second: s2.rank(),
        divisors_first: show(&s1.divisors),
        divisors_second: show(&s2.divisors),
        composite_zero,
        injective,
        surjective,
        exact_middle,
    }
}
