//! The Peterson variety of `SL_{n+1}` as matrices.
//!
//! `Δ_{ϖ_i}` is the leading `i × i` minor, `q_{α_i}(g) = -(g^{-1} e g)_{i+1,i}`
//! with `e = Σ E_{i,i+1}`, and `Ψ(gB) = [Δ(g); q(g)]` lands in the quotient
//! model of the toric orbifold. Indices are 0-based: `delta(g, 0)` is
//! `Δ_{ϖ_1}`.

#[cfg(feature = "numeric")]
pub mod numeric;

use num::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::fan::{zero_pattern_fixed_point, QuotientPoint};
use crate::index_set::IndexSet;
use crate::linalg::{q, smith_normal_form, IntMatrix, RatMatrix, Q};
use crate::poly::{groebner_basis, standard_monomials, Poly};

/// Largest rank with an exact cell parametrization.
pub const MAX_EXACT_RANK: usize = 2;

const REJECTION_BOUND: usize = 1000;

/// The principal nilpotent `Σ_i E_{i,i+1}`.
pub fn e_matrix(size: usize) -> RatMatrix {
    RatMatrix::from_fn(size, size, |r, s| q(i64::from(s == r + 1)))
}

pub fn leading_minor(g: &RatMatrix, k: usize) -> Q {
    let idx: Vec<usize> = (0..k).collect();
    g.submatrix(&idx, &idx).det()
}

/// `Δ_{ϖ_{i+1}}(g)`.
pub fn delta(g: &RatMatrix, i: usize) -> Q {
    leading_minor(g, i + 1)
}

/// A coset representative `g ∈ SL_{n+1}` together with `M = g^{-1} e g`.
#[derive(Debug, Clone, PartialEq)]
pub struct PetersonPoint {
    pub g: RatMatrix,
    pub m: RatMatrix,
    /// every leading minor is nonzero, i.e. `g ∈ U^- B`
    pub in_big_cell: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionValues {
    pub delta: Vec<Q>,
    pub q: Vec<Q>,
}

impl PetersonPoint {
    pub fn new(g: RatMatrix) -> Result<PetersonPoint> {
        if !g.is_square() || g.rows() < 2 {
            return Err(Error::Dimension(format!("{}x{} matrix", g.rows(), g.cols())));
        }
        if !g.det().is_one() {
            return Err(Error::NotSpecialLinear);
        }
        let m = &(&g.inverse()? * &e_matrix(g.rows())) * &g;
        let in_big_cell = (1..=g.rows()).all(|k| !leading_minor(&g, k).is_zero());
        Ok(PetersonPoint { g, m, in_big_cell })
    }

    pub fn rank(&self) -> usize {
        self.g.rows() - 1
    }

    pub fn delta(&self, i: usize) -> Q {
        delta(&self.g, i)
    }

    /// `q_{α_{i+1}}(g) = -M_{i+1,i}`.
    pub fn q_alpha(&self, i: usize) -> Q {
        -self.m[(i + 1, i)].clone()
    }

    /// `M_{r,s} = 0` whenever `r > s + 1`.
    pub fn in_peterson(&self) -> bool {
        let size = self.g.rows();
        (0..size).all(|s| (s + 2..size).all(|r| self.m[(r, s)].is_zero()))
    }

    pub fn section_values(&self) -> SectionValues {
        let n = self.rank();
        SectionValues {
            delta: (0..n).map(|i| self.delta(i)).collect(),
            q: (0..n).map(|i| self.q_alpha(i)).collect(),
        }
    }
}

/// Antidiagonal matrix with signs alternating upwards from `+1` in the last row.
fn signed_reversal(size: usize) -> RatMatrix {
    RatMatrix::from_fn(size, size, |r, s| {
        if r + s + 1 == size {
            q(if (size - 1 - r).is_multiple_of(2) { 1 } else { -1 })
        } else {
            Q::zero()
        }
    })
}

/// Representative of `w_0` in `SL_{n+1}` with `f_i = -Ad_{ẇ_0^{-1}} e_{i*}`.
pub fn w0_dot(size: usize) -> RatMatrix {
    signed_reversal(size)
}

/// Block-diagonal representative of `w_J`: one signed reversal per connected
/// component of `J` in the `A_n` diagram.
pub fn w_dot(n: usize, j: IndexSet) -> RatMatrix {
    let size = n + 1;
    let mut g = RatMatrix::identity(size);
    let mut i = 0;
    while i < n {
        if !j.contains(i) {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && j.contains(i) {
            i += 1;
        }
        // nodes start..i act on matrix indices start..=i
        let block = signed_reversal(i - start + 1);
        for r in 0..block.rows() {
            for s in 0..block.cols() {
                g[(start + r, start + s)] = block[(r, s)].clone();
            }
        }
    }
    g
}

pub fn type_a(n: usize) -> CartanMatrix {
    CartanMatrix::parse(&format!("A{n}")).expect("A_n is valid for n >= 1")
}

/// Lower unitriangular matrix from its strictly lower entries, row by row.
pub fn lower_unipotent(size: usize, below: &[Q]) -> RatMatrix {
    let mut g = RatMatrix::identity(size);
    let mut it = below.iter();
    for r in 1..size {
        for s in 0..r {
            g[(r, s)] = it.next().expect("size (size-1)/2 entries").clone();
        }
    }
    g
}

/// The SL3 cell point for `(a, c)`; `None` on the pole `a + c = 0`.
pub fn sl3_cell_point(a: &Q, c: &Q) -> Option<RatMatrix> {
    let s = a + c;
    if s.is_zero() {
        return None;
    }
    let b = a * a * c / s;
    Some(lower_unipotent(3, &[a.clone(), b, c.clone()]))
}

/// `q'` on the cell in terms of its free parameters.
pub fn closed_form_q(n: usize, params: &[Q]) -> Result<Vec<Q>> {
    match n {
        1 => Ok(vec![&params[0] * &params[0]]),
        2 => {
            let (a, c) = (&params[0], &params[1]);
            let s = a + c;
            if s.is_zero() {
                return Err(Error::Singular);
            }
            Ok(vec![a * a * a / &s, c * c * c / &s])
        }
        _ => Err(Error::UnsupportedRank(n)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellSample {
    /// `t` for SL2, `(a, c)` for SL3
    pub params: Vec<Q>,
    pub point: PetersonPoint,
}

fn cell_parameter(rng: &mut impl Rng) -> Q {
    Q::new(rng.random_range(-99i64..=99).into(), rng.random_range(1i64..=9).into())
}

/// Exact points of `Y ∩ U^- B/B` for `n ∈ {1, 2}`.
pub fn sample_peterson_cell(n: usize, count: usize, seed: u64) -> Result<Vec<CellSample>> {
    if !(1..=MAX_EXACT_RANK).contains(&n) {
        return Err(Error::UnsupportedRank(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let (params, g) = if n == 1 {
            let t = cell_parameter(&mut rng);
            let g = lower_unipotent(2, std::slice::from_ref(&t));
            (vec![t], g)
        } else {
            let a = cell_parameter(&mut rng);
            let c = cell_parameter(&mut rng);
            match sl3_cell_point(&a, &c) {
                Some(g) => (vec![a, c], g),
                None => {
                    rejected += 1;
                    if rejected >= REJECTION_BOUND {
                        return Err(Error::SamplingExhausted(rejected));
                    }
                    continue;
                }
            }
        };
        let point = PetersonPoint::new(g)?;
        debug_assert!(point.in_peterson());
        out.push(CellSample { params, point });
    }
    Ok(out)
}

/// `Ψ(gB)`.
pub fn psi(p: &PetersonPoint) -> Result<QuotientPoint> {
    if !p.in_peterson() {
        return Err(Error::NotInPeterson);
    }
    let v = p.section_values();
    QuotientPoint::new(v.delta, v.q)
}

fn qpow(x: &Q, e: i64) -> Q {
    let p = num::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        Q::one() / p
    } else {
        p
    }
}

/// Whether `p' = t · p` for some `t` in the torus acting by
/// `(ϖ_i(t) x_i; α_i(t) y_i)`, over an algebraically closed field.
pub fn point_equal_mod_t(c: &CartanMatrix, p: &QuotientPoint, p2: &QuotientPoint) -> bool {
    let n = c.rank();
    if p.x.len() != n || p2.x.len() != n || p.zero_pattern() != p2.zero_pattern() {
        return false;
    }
    // ϖ_j(t) is forced wherever x_j is nonzero
    let forced: Vec<Option<Q>> = (0..n)
        .map(|j| (!p.x[j].is_zero()).then(|| &p2.x[j] / &p.x[j]))
        .collect();
    let free: Vec<usize> = (0..n).filter(|&j| forced[j].is_none()).collect();
    let rows: Vec<usize> = (0..n).filter(|&i| !p.y[i].is_zero()).collect();
    // α_i(t) = Π_j ϖ_j(t)^{c_ij}; move the forced part to the right-hand side
    let rhs: Vec<Q> = rows
        .iter()
        .map(|&i| {
            let mut r = &p2.y[i] / &p.y[i];
            for (j, s) in forced.iter().enumerate() {
                if let Some(s) = s {
                    r /= qpow(s, c.entry(i, j));
                }
            }
            r
        })
        .collect();
    let a = IntMatrix::from_fn(rows.len(), free.len(), |r, k| c.entry(rows[r], free[k]).into());
    let snf = smith_normal_form(&a);
    snf.left_kernel().iter().all(|z| {
        let mut acc = Q::one();
        for (r, zi) in rhs.iter().zip(z) {
            acc *= qpow(r, zi.to_i64().expect("small kernel entries"));
        }
        acc.is_one()
    })
}

/// LU factorization without pivoting: `a = l u` with `l` lower unitriangular.
fn lu(a: &RatMatrix) -> Option<(RatMatrix, RatMatrix)> {
    let size = a.rows();
    let mut u = a.clone();
    let mut l = RatMatrix::identity(size);
    for k in 0..size {
        if u[(k, k)].is_zero() {
            return None;
        }
        for i in k + 1..size {
            if u[(i, k)].is_zero() {
                continue;
            }
            let f = &u[(i, k)] / &u[(k, k)];
            for s in k..size {
                let d = &f * &u[(k, s)];
                u[(i, s)] -= d;
            }
            l[(i, k)] = f;
        }
    }
    Some((l, u))
}

fn is_upper_unitriangular(m: &RatMatrix) -> bool {
    (0..m.rows()).all(|r| {
        (0..=r).all(|s| if r == s { m[(r, s)].is_one() } else { m[(r, s)].is_zero() })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KostantReport {
    /// `g` is not in `U ẇ_0 B`
    pub skipped: bool,
    pub pass: bool,
    /// `Δ'_j = Δ_{ϖ_j}(ũ ẇ_0)`
    pub delta_prime: Vec<String>,
    pub q: Vec<String>,
    /// `Π_j Δ'_j^{-c_ij}`
    pub product: Vec<String>,
}

/// `ũ ẇ_0` with `ũ ∈ U` and `g B = ũ ẇ_0 B`, for a given representative of `w_0`.
pub fn bruhat_factor(g: &RatMatrix, w0: &RatMatrix) -> Option<RatMatrix> {
    let (ubar, _b) = lu(&(&w0.inverse().ok()? * g))?;
    let tw = w0 * &ubar;
    let tilde_u = &tw * &w0.inverse().ok()?;
    is_upper_unitriangular(&tilde_u).then_some(tw)
}

/// Checks `q_i = Π_j Δ'_j^{-c_ij}` exactly.
pub fn kostant_check(p: &PetersonPoint) -> KostantReport {
    kostant_check_with(p, &w0_dot(p.g.rows()))
}

pub fn kostant_check_with(p: &PetersonPoint, w0: &RatMatrix) -> KostantReport {
    let n = p.rank();
    let c = type_a(n);
    let qv: Vec<Q> = (0..n).map(|i| p.q_alpha(i)).collect();
    let show = |v: &[Q]| v.iter().map(ToString::to_string).collect();
    let skip = || KostantReport {
        skipped: true,
        pass: false,
        delta_prime: Vec::new(),
        q: show(&qv),
        product: Vec::new(),
    };
    let Some(tw) = bruhat_factor(&p.g, w0) else {
        return skip();
    };
    let dp: Vec<Q> = (0..n).map(|j| delta(&tw, j)).collect();
    if dp.iter().any(Zero::is_zero) {
        return skip();
    }
    let product: Vec<Q> = (0..n)
        .map(|i| {
            let mut acc = Q::one();
            for (j, d) in dp.iter().enumerate() {
                acc *= qpow(d, -c.entry(i, j));
            }
            acc
        })
        .collect();
    KostantReport {
        skipped: false,
        pass: product == qv,
        delta_prime: show(&dp),
        q: show(&qv),
        product: show(&product),
    }
}

/// Numerators of `q'` over the common denominator, as polynomials in the
/// free cell parameters.
pub fn q_prime_rational(n: usize) -> Result<(Vec<Poly>, Poly)> {
    match n {
        1 => Ok((vec![Poly::var(1, 0).pow(2)], Poly::constant(1, Q::one()))),
        2 => {
            let a = Poly::var(2, 0);
            let c = Poly::var(2, 1);
            Ok((vec![a.pow(3), c.pow(3)], a.add(&c)))
        }
        _ => Err(Error::UnsupportedRank(n)),
    }
}

/// `∂ q'_i / ∂ p_k` at a point; `None` on a pole.
pub fn jacobian_at(n: usize, point: &[Q]) -> Result<Option<RatMatrix>> {
    let (nums, den) = q_prime_rational(n)?;
    let d = den.eval(point);
    if d.is_zero() {
        return Ok(None);
    }
    let d2 = &d * &d;
    Ok(Some(RatMatrix::from_fn(n, n, |i, k| {
        // quotient rule
        let top = nums[i].derivative(k).eval(point) * &d - nums[i].eval(point) * den.derivative(k).eval(point);
        top / &d2
    })))
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobianReport {
    pub n: usize,
    pub samples: usize,
    /// largest rank seen
    pub rank: usize,
    pub witness: Option<Vec<String>>,
    pub poles: usize,
    /// no sample reached full rank
    pub inconclusive: bool,
}

/// Generic-rank witness for the algebraic independence of `q'_1, ..., q'_n`.
pub fn jacobian_rank_check(n: usize, count: usize, seed: u64) -> Result<JacobianReport> {
    q_prime_rational(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    let mut witness = None;
    let mut poles = 0;
    for _ in 0..count {
        let pt: Vec<Q> = (0..n).map(|_| cell_parameter(&mut rng)).collect();
        match jacobian_at(n, &pt)? {
            None => poles += 1,
            Some(j) => {
                let r = j.rank();
                if r > best {
                    best = r;
                }
                if r == n && witness.is_none() {
                    witness = Some(pt.iter().map(ToString::to_string).collect());
                }
            }
        }
    }
    Ok(JacobianReport {
        n,
        samples: count,
        rank: best,
        inconclusive: witness.is_none(),
        witness,
        poles,
    })
}

/// `γ(z) = diag(z^n, z^{n-2}, ..., z^{-n})`, so that `α_i(γ(z)) = z^2`.
pub fn gamma(size: usize, z: &Q) -> RatMatrix {
    let n = size as i64 - 1;
    RatMatrix::from_fn(size, size, |r, s| {
        if r == s {
            qpow(z, n - 2 * r as i64)
        } else {
            Q::zero()
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivarianceReport {
    pub pass: bool,
    /// `Δ_i(γ g) = ϖ_i(γ) Δ_i(g)`
    pub delta_law: bool,
    /// `q_i(γ g) = z^{-2} q_i(g)`
    pub q_law: bool,
    /// `Ψ(γ g) ≡ [x; α_S(γ)^{-2} y]` modulo the torus
    pub psi_mod_t: bool,
}

pub fn equivariance_check(z: &Q, p: &PetersonPoint) -> Result<EquivarianceReport> {
    if z.is_zero() {
        return Err(Error::Singular);
    }
    let n = p.rank();
    let gm = gamma(n + 1, z);
    let moved = PetersonPoint::new(&gm * &p.g)?;
    let delta_law = (0..n).all(|i| moved.delta(i) == delta(&gm, i) * p.delta(i));
    let z2 = z * z;
    let q_law = (0..n).all(|i| moved.q_alpha(i) == p.q_alpha(i) / &z2);
    let before = psi(p)?;
    let after = psi(&moved)?;
    let s = Q::one() / (&z2 * &z2);
    let expected = QuotientPoint::new(before.x.clone(), before.y.iter().map(|y| y * &s).collect())?;
    let psi_mod_t = point_equal_mod_t(&type_a(n), &after, &expected);
    Ok(EquivarianceReport {
        pass: delta_law && q_law && psi_mod_t,
        delta_law,
        q_law,
        psi_mod_t,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPointReport {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub pattern_ok: bool,
    pub equal_mod_t: bool,
}

/// `Ψ(ẇ_J B)` against `p_J`.
pub fn fixed_point_image_check(n: usize, j: IndexSet) -> Result<FixedPointReport> {
    let p = PetersonPoint::new(w_dot(n, j))?;
    let image = psi(&p)?;
    let target = zero_pattern_fixed_point(n, j);
    Ok(FixedPointReport {
        j: j.one_based(),
        pattern_ok: image.zero_pattern() == target.zero_pattern(),
        equal_mod_t: point_equal_mod_t(&type_a(n), &image, &target),
    })
}

/// Number of cell points (with multiplicity, over `C`) with `q' = target`.
///
/// Exploratory: counts standard monomials of the zero-dimensional ideal
/// `(numerators - target · denominator, s · denominator - 1)`.
pub fn fiber_count(n: usize, target: &[Q]) -> Result<usize> {
    let (nums, den) = q_prime_rational(n)?;
    if target.len() != n || target.iter().any(Zero::is_zero) {
        return Err(Error::Dimension("target needs n nonzero values".into()));
    }
    let nv = n + 1;
    let lift = |p: &Poly| -> Poly {
        let images: Vec<Poly> = (0..n).map(|i| Poly::var(nv, i)).collect();
        p.substitute(&images)
    };
    let den = lift(&den);
    let mut gens: Vec<Poly> = nums
        .iter()
        .zip(target)
        .map(|(f, t)| lift(f).sub(&den.scale(t)))
        .collect();
    gens.push(Poly::var(nv, n).mul(&den).sub(&Poly::constant(nv, Q::one())));
    let gb = groebner_basis(&gens);
    let mut total = 0;
    for d in 0.. {
        let k = standard_monomials(nv, &gb, d);
        if k == 0 {
            break;
        }
        total += k;
    }
    Ok(total)
}

/// Nonvanishing over a batch: no index with `Δ_i = q_i = 0`.
pub fn nonvanishing(points: &[PetersonPoint]) -> bool {
    points.iter().all(|p| {
        let v = p.section_values();
        v.delta.iter().zip(&v.q).all(|(d, q)| !(d.is_zero() && q.is_zero()))
    })
}
