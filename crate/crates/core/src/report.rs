//! Batch verification runs with deterministic, serializable reports.
//!
//! Every report carries `schema: 1`. Rationals are printed as strings and all
//! maps are ordered, so equal seeds give byte-identical JSON.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::{verify_cox_sequence, CartanMatrix, CoxReport};
use crate::cohomology::{
    degree2_dictionary, eliminate_y, poincare_polynomial, presentation_x, presentation_xy,
    solve_mn_constants, vanishing_check, DictionaryEntry, EliminationReport, PoincareReport,
};
use crate::error::{Error, Result};
use crate::fan::{oracle_check, CompletenessReport, FanSigma, OracleReport, StructureReport, ORACLE_GUARD};
use crate::index_set::IndexSet;
use crate::linalg::Q;
use crate::peterson::{
    closed_form_q, equivariance_check, fiber_count, fixed_point_image_check, jacobian_rank_check,
    kostant_check, psi, sample_peterson_cell, FixedPointReport, JacobianReport, PetersonPoint,
    MAX_EXACT_RANK,
};
use crate::wall::{kleiman_ample_check, KleimanReport};
use crate::weyl::{generate_weyl_group, zero_locus_partition, ZeroLocusPartition};

pub const SCHEMA: u32 = 1;

/// Largest rank for the `fan` run (`3^n` cones are enumerated).
pub const FAN_GUARD: usize = 10;
/// Largest rank for the `coh` run (Gröbner bases in `2n` variables).
pub const COH_GUARD: usize = 6;
/// Largest rank for the Weyl group enumeration inside the `coh` run.
pub const WEYL_RANK_GUARD: usize = 4;

/// A check that either ran or was skipped by a guard.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Step<T> {
    Ran(T),
    Skipped { skipped: String },
}

impl<T> Step<T> {
    pub fn skipped(reason: impl Into<String>) -> Self {
        Step::Skipped {
            skipped: reason.into(),
        }
    }

    pub fn ran(&self) -> Option<&T> {
        match self {
            Step::Ran(t) => Some(t),
            Step::Skipped { .. } => None,
        }
    }

    /// A skipped step never fails a run.
    pub fn passes(&self, f: impl Fn(&T) -> bool) -> bool {
        self.ran().is_none_or(f)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InverseReport {
    pub pass: bool,
    pub subdiagrams: usize,
    /// 1-based index sets whose inverse has a negative entry
    pub negative: Vec<Vec<usize>>,
}

/// `C_J^{-1} >= 0` for every sub-diagram `J` (the empty one included).
pub fn inverse_check(c: &CartanMatrix) -> Result<InverseReport> {
    let mut negative = Vec::new();
    let mut count = 0;
    for j in IndexSet::all_subsets(c.rank()) {
        count += 1;
        if j.is_empty() {
            continue;
        }
        let (_, ok) = c.subdiagram(j).inverse_nonneg()?;
        if !ok {
            negative.push(j.one_based());
        }
    }
    Ok(InverseReport {
        pass: negative.is_empty(),
        subdiagrams: count,
        negative,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FanRun {
    pub schema: u32,
    pub command: &'static str,
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub seed: u64,
    pub h_vector: Vec<i64>,
    pub structure: StructureReport,
    pub oracle: Step<OracleReport>,
    pub completeness: CompletenessReport,
    pub kleiman: KleimanReport,
    pub inverse_nonneg: InverseReport,
    pub cox: CoxReport,
    pub pass: bool,
}

pub fn fan_run(c: &CartanMatrix, seed: u64, samples: usize) -> Result<FanRun> {
    let n = c.rank();
    if n > FAN_GUARD {
        return Err(Error::Guard {
            op: "fan",
            limit: FAN_GUARD,
            got: n,
            hint: "the run enumerates all 3^n cones",
        });
    }
    let f = FanSigma::new(c);
    let structure = f.structure_check();
    let oracle = if n <= ORACLE_GUARD {
        Step::Ran(oracle_check(&f)?)
    } else {
        Step::skipped(format!(
            "brute-force intersection limited to rank {ORACLE_GUARD}; the index-set formula is used"
        ))
    };
    let completeness = f.is_complete(samples, seed);
    let kleiman = kleiman_ample_check(&f)?;
    let inverse_nonneg = inverse_check(c)?;
    let cox = verify_cox_sequence(c);
    let pass = structure.pass
        && oracle.passes(|o| o.pass)
        && completeness.pass
        && kleiman.pass
        && inverse_nonneg.pass
        && cox.pass;
    Ok(FanRun {
        schema: SCHEMA,
        command: "fan",
        type_name: c.name(),
        rank: n,
        seed,
        h_vector: f.h_vector(),
        structure,
        oracle,
        completeness,
        kleiman,
        inverse_nonneg,
        cox,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MnRow {
    pub i: usize,
    pub m: String,
    pub n: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeylSummary {
    pub order: usize,
    pub expected_order: Option<String>,
    pub partitions: Vec<ZeroLocusPartition>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohRun {
    pub schema: u32,
    pub command: &'static str,
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    /// graded dimensions of the quotient ring, degrees `0..=n`
    pub dims: Vec<usize>,
    pub h_vector: Vec<i64>,
    pub poincare_xy: PoincareReport,
    pub poincare_x: PoincareReport,
    pub elimination: EliminationReport,
    /// `ϖ_i α_i = 0` for every `i`
    pub vanishing: bool,
    pub mn: Vec<MnRow>,
    pub mn_pass: bool,
    pub dictionary: Vec<DictionaryEntry>,
    pub weyl: Step<WeylSummary>,
    pub pass: bool,
}

fn binomials(n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n + 1);
    let mut b = 1usize;
    for d in 0..=n {
        out.push(b);
        b = b * (n - d) / (d + 1);
    }
    out
}

pub fn coh_run(c: &CartanMatrix) -> Result<CohRun> {
    let n = c.rank();
    if n > COH_GUARD {
        return Err(Error::Guard {
            op: "coh",
            limit: COH_GUARD,
            got: n,
            hint: "Gröbner bases grow quickly in 2n variables",
        });
    }
    let f = FanSigma::new(c);
    let rxy = presentation_xy(c);
    let rx = presentation_x(c);
    let poincare_xy = poincare_polynomial(&rxy, n);
    let poincare_x = poincare_polynomial(&rx, n);
    let elimination = eliminate_y(c, &rxy, &rx);
    let vanishing = (0..n).all(|i| vanishing_check(c, &rx, i));
    let mut mn = Vec::new();
    let mut mn_pass = true;
    for i in 0..n {
        match solve_mn_constants(&f, i) {
            Ok((m, k)) => {
                mn_pass &= m == Q::from_integer(1.into()) && k == Q::from_integer((-1).into());
                mn.push(MnRow {
                    i: i + 1,
                    m: m.to_string(),
                    n: k.to_string(),
                });
            }
            Err(e) => {
                mn_pass = false;
                mn.push(MnRow {
                    i: i + 1,
                    m: format!("inconsistent: {e}"),
                    n: String::new(),
                });
            }
        }
    }
    let dictionary = degree2_dictionary(c, &rxy)?;
    let weyl = if n <= WEYL_RANK_GUARD {
        let group = generate_weyl_group(c)?;
        let partitions = (0..n).map(|i| zero_locus_partition(c, i)).collect::<Result<Vec<_>>>()?;
        let expected = c.label().map(|t| t.weyl_order());
        let pass = expected.is_none_or(|o| o == group.len() as u128)
            && partitions.iter().all(|p| p.disjoint && p.covers && p.matches_index_rule);
        Step::Ran(WeylSummary {
            order: group.len(),
            expected_order: expected.map(|o| o.to_string()),
            partitions,
            pass,
        })
    } else {
        Step::skipped(format!("Weyl group enumeration limited to rank {WEYL_RANK_GUARD}"))
    };

    let target = binomials(n);
    let h: Vec<usize> = f.h_vector().iter().map(|&x| x.max(0) as usize).collect();
    let dims: Vec<usize> = poincare_x.linear[..=n].to_vec();
    let graded_ok = |p: &PoincareReport| {
        p.routes_agree && p.linear[..=n] == target[..] && p.linear[n + 1..].iter().all(|&d| d == 0)
    };
    let pass = graded_ok(&poincare_xy)
        && graded_ok(&poincare_x)
        && h == target
        && poincare_x.total == 1 << n
        && elimination.pass
        && vanishing
        && mn_pass
        && dictionary.iter().all(|d| d.agree)
        && weyl.passes(|w| w.pass);
    Ok(CohRun {
        schema: SCHEMA,
        command: "coh",
        type_name: c.name(),
        rank: n,
        dims,
        h_vector: f.h_vector(),
        poincare_xy,
        poincare_x,
        elimination,
        vanishing,
        mn,
        mn_pass,
        dictionary,
        weyl,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WorkedExample {
    pub t: String,
    pub q: String,
    pub delta_prime: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KostantSummary {
    pub checked: usize,
    pub skipped: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberExperiment {
    pub target: Vec<String>,
    pub count: usize,
    pub note: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct PetersonRun {
    pub schema: u32,
    pub command: &'static str,
    pub rank: usize,
    pub seed: u64,
    pub samples: usize,
    pub worked_example: Option<WorkedExample>,
    pub closed_forms_pass: bool,
    pub kostant: KostantSummary,
    pub kostant_pass: bool,
    pub nonvanishing_pass: bool,
    pub jacobian_rank: usize,
    pub jacobian: JacobianReport,
    pub equivariance_pass: bool,
    pub fixed_points: Vec<FixedPointReport>,
    pub fiber_experiment: FiberExperiment,
    pub pass: bool,
}

/// Minimum share of cell samples on which the Bruhat factorization must
/// succeed.
pub const KOSTANT_COVERAGE: f64 = 0.95;

fn nonzero_rational(rng: &mut impl Rng) -> Q {
    let mut num: i64 = 0;
    while num == 0 {
        num = rng.random_range(-9..=9);
    }
    Q::new(num.into(), rng.random_range(1i64..=5).into())
}

pub fn peterson_run(n: usize, samples: usize, seed: u64) -> Result<PetersonRun> {
    if !(1..=MAX_EXACT_RANK).contains(&n) {
        return Err(Error::UnsupportedRank(n));
    }
    let cell = sample_peterson_cell(n, samples, seed)?;
    let mut closed_forms_pass = true;
    let mut kostant = KostantSummary {
        checked: 0,
        skipped: 0,
        failed: 0,
    };
    let mut equivariance_pass = true;
    let mut points: Vec<PetersonPoint> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for s in &cell {
        let v = s.point.section_values();
        closed_forms_pass &= s.point.in_peterson() && v.q == closed_form_q(n, &s.params)?;
        let k = kostant_check(&s.point);
        if k.skipped {
            kostant.skipped += 1;
        } else {
            kostant.checked += 1;
            if !k.pass {
                kostant.failed += 1;
            }
        }
        let z = nonzero_rational(&mut rng);
        equivariance_pass &= equivariance_check(&z, &s.point)?.pass;
        points.push(s.point.clone());
    }
    let fixed_points = IndexSet::all_subsets(n)
        .map(|j| fixed_point_image_check(n, j))
        .collect::<Result<Vec<_>>>()?;
    for j in IndexSet::all_subsets(n) {
        let w = PetersonPoint::new(crate::peterson::w_dot(n, j))?;
        let z = nonzero_rational(&mut rng);
        equivariance_pass &= equivariance_check(&z, &w)?.pass;
        points.push(w);
    }
    // psi enforces (Δ_i, q_i) != (0, 0)
    let nonvanishing_pass = points.iter().all(|p| psi(p).is_ok());
    let kostant_pass = kostant.failed == 0
        && kostant.checked as f64 >= KOSTANT_COVERAGE * cell.len() as f64;
    let jacobian = jacobian_rank_check(n, samples.max(1), seed)?;

    let worked_example = if n == 1 {
        let t = Q::from_integer(3.into());
        let p = PetersonPoint::new(crate::peterson::lower_unipotent(2, std::slice::from_ref(&t)))?;
        let k = kostant_check(&p);
        Some(WorkedExample {
            t: t.to_string(),
            q: p.q_alpha(0).to_string(),
            delta_prime: k.delta_prime,
        })
    } else {
        None
    };
    let target: Vec<Q> = (0..n).map(|_| nonzero_rational(&mut rng)).collect();
    let fiber_experiment = FiberExperiment {
        target: target.iter().map(ToString::to_string).collect(),
        count: fiber_count(n, &target)?,
        note: "exploratory: cell points over C with q' = target, counted with multiplicity",
    };
    let pass = closed_forms_pass
        && kostant_pass
        && nonvanishing_pass
        && jacobian.rank == n
        && equivariance_pass
        && fixed_points.iter().all(|f| f.pattern_ok && f.equal_mod_t);
    Ok(PetersonRun {
        schema: SCHEMA,
        command: "peterson",
        rank: n,
        seed,
        samples: cell.len(),
        worked_example,
        closed_forms_pass,
        kostant,
        kostant_pass,
        nonvanishing_pass,
        jacobian_rank: jacobian.rank,
        jacobian,
        equivariance_pass,
        fixed_points,
        fiber_experiment,
        pass,
    })
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn fan_text(r: &FanRun) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "fan {} (rank {}, seed {})", r.type_name, r.rank, r.seed);
    let _ = writeln!(s, "  f-vector      {:?}  {}", r.structure.f_vector, mark(r.structure.pass));
    let _ = writeln!(s, "  h-vector      {:?}", r.h_vector);
    match &r.oracle {
        Step::Ran(o) => {
            let _ = writeln!(s, "  oracle        {} pairs  {}", o.pairs, mark(o.pass));
        }
        Step::Skipped { skipped } => {
            let _ = writeln!(s, "  oracle        skipped: {skipped}");
        }
    }
    let _ = writeln!(
        s,
        "  complete      {} walls, {}/{} samples covered  {}",
        r.completeness.walls,
        r.completeness.covered,
        r.completeness.samples,
        mark(r.completeness.pass)
    );
    let _ = writeln!(s, "  kleiman       {} walls  {}", r.kleiman.walls, mark(r.kleiman.pass));
    let _ = writeln!(
        s,
        "  C_J^-1 >= 0   {} sub-diagrams  {}",
        r.inverse_nonneg.subdiagrams,
        mark(r.inverse_nonneg.pass)
    );
    let _ = writeln!(s, "  cox sequence  {}", mark(r.cox.pass));
    let _ = writeln!(s, "{}", if r.pass { "PASS" } else { "FAIL" });
    s
}

pub fn coh_text(r: &CohRun) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "coh {} (rank {})", r.type_name, r.rank);
    let _ = writeln!(s, "  dims          {:?}", r.dims);
    let _ = writeln!(s, "  h-vector      {:?}", r.h_vector);
    let _ = writeln!(
        s,
        "  routes agree  {}",
        mark(r.poincare_xy.routes_agree && r.poincare_x.routes_agree)
    );
    let _ = writeln!(s, "  elimination   {}", mark(r.elimination.pass));
    let _ = writeln!(s, "  varpi_i alpha_i = 0  {}", mark(r.vanishing));
    for m in &r.mn {
        let _ = writeln!(s, "  (m, n)_{}      ({}, {})", m.i, m.m, m.n);
    }
    for d in &r.dictionary {
        let _ = writeln!(
            s,
            "  {} = {} = {}   {} = [{}]  {}",
            d.y_aliases[0],
            d.y_aliases[1],
            d.y_aliases[2],
            d.y_aliases[0],
            d.toric.join(", "),
            mark(d.agree)
        );
    }
    match &r.weyl {
        Step::Ran(w) => {
            let _ = writeln!(s, "  |W|           {}  {}", w.order, mark(w.pass));
        }
        Step::Skipped { skipped } => {
            let _ = writeln!(s, "  weyl          skipped: {skipped}");
        }
    }
    let _ = writeln!(s, "{}", if r.pass { "PASS" } else { "FAIL" });
    s
}

pub fn peterson_text(r: &PetersonRun) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "peterson SL{} ({} samples, seed {})", r.rank + 1, r.samples, r.seed);
    if let Some(w) = &r.worked_example {
        let _ = writeln!(s, "  t = {}: q = {}, Delta' = {:?}", w.t, w.q, w.delta_prime);
    }
    let _ = writeln!(s, "  closed forms  {}", mark(r.closed_forms_pass));
    let _ = writeln!(
        s,
        "  kostant       {} checked, {} skipped  {}",
        r.kostant.checked,
        r.kostant.skipped,
        mark(r.kostant_pass)
    );
    let _ = writeln!(s, "  nonvanishing  {}", mark(r.nonvanishing_pass));
    let _ = writeln!(s, "  jacobian rank {}  {}", r.jacobian_rank, mark(r.jacobian_rank == r.rank));
    let _ = writeln!(s, "  equivariance  {}", mark(r.equivariance_pass));
    for f in &r.fixed_points {
        let _ = writeln!(s, "  Psi(w_J) J={:?}  {}", f.j, mark(f.pattern_ok && f.equal_mod_t));
    }
    let _ = writeln!(
        s,
        "  fiber count over {:?}: {} (exploratory)",
        r.fiber_experiment.target, r.fiber_experiment.count
    );
    let _ = writeln!(s, "{}", if r.pass { "PASS" } else { "FAIL" });
    s
}

#[cfg(feature = "numeric")]
#[derive(Debug, Clone, Serialize)]
pub struct NumericPetersonRun {
    pub schema: u32,
    pub command: &'static str,
    pub rank: usize,
    pub seed: u64,
    pub numeric: crate::peterson::numeric::NumericReport,
    /// exact: the fixed points do not need the cell parametrization
    pub fixed_points: Vec<FixedPointReport>,
    pub pass: bool,
}

/// The `SL_4` run: floating-point cell samples plus exact fixed points.
#[cfg(feature = "numeric")]
pub fn peterson_numeric_run(samples: usize, seed: u64) -> Result<NumericPetersonRun> {
    let numeric = crate::peterson::numeric::numeric_check(samples, seed)?;
    let fixed_points = IndexSet::all_subsets(3)
        .map(|j| fixed_point_image_check(3, j))
        .collect::<Result<Vec<_>>>()?;
    let pass = numeric.pass && fixed_points.iter().all(|f| f.pattern_ok && f.equal_mod_t);
    Ok(NumericPetersonRun {
        schema: SCHEMA,
        command: "peterson",
        rank: 3,
        seed,
        numeric,
        fixed_points,
        pass,
    })
}
