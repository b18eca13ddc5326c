//! Cartan matrix tables for the finite Dynkin families.
//!
//! All tables live here so that orientation questions can be answered in one
//! place. Conventions:
//!
//! * entry `(i, j)` is `<alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`;
//! * nodes follow Bourbaki's numbering (0-based here, 1-based in all output);
//! * `B_n`: `alpha_n` is short, so row `n-1` has the `-2`: `c[n-2][n-1] = -2`.
//! * `C_n`: `alpha_n` is long, so `c[n-1][n-2] = -2`.
//! * `F_4`: `alpha_1, alpha_2` long, `alpha_3, alpha_4` short, `c[1][2] = -2`.
//! * `G_2`: `alpha_1` short, `alpha_2` long, giving `[[2, -1], [-3, 2]]`.
//! * `D_n`: chain `1 - ... - (n-2)` with `n-1` and `n` both attached to `n-2`.
//! * `E_n`: chain `1 - 3 - 4 - ... - n` with `2` attached to `4`.
//!
//! With this orientation `B_2 = [[2, -2], [-1, 2]]` and `C_2 = [[2, -1], [-2, 2]]`.

use super::Family;

/// Entries of the rank-`n` Cartan matrix for one family. Ranks must already
/// have been validated.
pub(crate) fn table(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                edge(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                edge(i, i + 1, -1, -1);
            }
            edge(n - 2, n - 1, -2, -1);
        }
        Family::C => {
            for i in 0..n - 2 {
                edge(i, i + 1, -1, -1);
            }
            edge(n - 2, n - 1, -1, -2);
        }
        Family::D => {
            for i in 0..n - 2 {
                edge(i, i + 1, -1, -1);
            }
            edge(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            edge(0, 2, -1, -1);
            edge(1, 3, -1, -1);
            for i in 2..n - 1 {
                edge(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            edge(0, 1, -1, -1);
            edge(1, 2, -2, -1);
            edge(2, 3, -1, -1);
        }
        Family::G => {
            edge(0, 1, -1, -3);
        }
    }
    c
}

/// Valid ranks per family, as `(min, max)`.
pub(crate) fn rank_bounds(family: Family) -> (usize, usize) {
    match family {
        Family::A => (1, usize::MAX),
        Family::B | Family::C => (2, usize::MAX),
        Family::D => (3, usize::MAX),
        Family::E => (6, 8),
        Family::F => (4, 4),
        Family::G => (2, 2),
    }
}

/// Order of the Weyl group of one simple component.
pub(crate) fn weyl_order(family: Family, n: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}
