//! Brute-force checks of the closed forms: exact characteristic polynomial
//! comparison, numeric spectra, invariants and parameter sweeps.

mod numeric;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::{
    charpoly_closed, spectrum_closed, uniform_blocks_misstated_total, FactoredCharPoly,
};
use crate::error::Result;
use crate::exact::{charpoly_oracle, UniPoly};
use crate::family::{seidel_matrix, FamilyParams};

pub use numeric::{cubic_roots, eig_numeric, eig_numeric_int};

/// Default cap on `n` for sweeps.
pub const DEFAULT_N_CAP: usize = 40;

/// A coefficient where the closed form and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientDiff {
    pub degree: usize,
    #[serde(serialize_with = "ser_bigint_str")]
    pub closed_form: BigInt,
    #[serde(serialize_with = "ser_bigint_str")]
    pub oracle: BigInt,
}

fn ser_bigint_str<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Checks the eigenvalue labels attached to the factored polynomial against
/// the exact characteristic polynomial.
///
/// The linear factor `(1 − 2p − λ)` vanishes at `1 − 2p`, while the claim it
/// comes with names `2p − 1` as the eigenvalue of multiplicity at least
/// `k − 2`. Likewise eigenvalue `1` is claimed with multiplicity at least
/// `(k − 1)(p − 1)` although the exponent of `(1 − λ)` is `n − k − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatementAudit {
    /// `2p − 1`, the eigenvalue named in the claim.
    pub stated_eigenvalue: i64,
    /// `1 − 2p`, the root of the linear factor.
    pub factor_eigenvalue: i64,
    /// `k − 2`.
    pub stated_min_multiplicity: usize,
    pub stated_eigenvalue_multiplicity: usize,
    pub factor_eigenvalue_multiplicity: usize,
    /// `false` whenever the claimed label differs from the factor's root.
    pub label_consistent: bool,
    /// Whether `2p − 1` really has multiplicity at least `k − 2`.
    pub stated_claim_holds: bool,
    /// `n − h − (n − h)/p`.
    pub one_stated_min_multiplicity: usize,
    /// `n − 2 − (n − h)/p`.
    pub one_factor_exponent: usize,
    pub one_multiplicity: usize,
}

impl StatementAudit {
    pub fn from_charpoly(params: &FamilyParams, charpoly: &UniPoly) -> Self {
        let p = params.p() as i64;
        let stated = 2 * p - 1;
        let factor = 1 - 2 * p;
        let stated_min = params.k().saturating_sub(2);
        let stated_mult = charpoly.root_multiplicity(&BigInt::from(stated));
        let blocks = params.k() - 1;
        Self {
            stated_eigenvalue: stated,
            factor_eigenvalue: factor,
            stated_min_multiplicity: stated_min,
            stated_eigenvalue_multiplicity: stated_mult,
            factor_eigenvalue_multiplicity: charpoly.root_multiplicity(&BigInt::from(factor)),
            label_consistent: stated == factor,
            stated_claim_holds: stated_mult >= stated_min,
            one_stated_min_multiplicity: params.private_block_len() - blocks,
            one_factor_exponent: (params.n() - 2).saturating_sub(blocks),
            one_multiplicity: charpoly.root_multiplicity(&BigInt::from(1)),
        }
    }

    /// Human-readable findings, empty when nothing is off.
    pub fn findings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.label_consistent {
            out.push(format!(
                "eigenvalue label 2p−1 = {} is inconsistent with the factor (1−2p−λ), whose root is 1−2p = {} (multiplicity {})",
                self.stated_eigenvalue, self.factor_eigenvalue, self.factor_eigenvalue_multiplicity
            ));
        }
        if !self.stated_claim_holds {
            out.push(format!(
                "claimed eigenvalue {} with multiplicity at least {} actually has multiplicity {}",
                self.stated_eigenvalue,
                self.stated_min_multiplicity,
                self.stated_eigenvalue_multiplicity
            ));
        }
        if self.one_stated_min_multiplicity != self.one_factor_exponent {
            out.push(format!(
                "eigenvalue 1 is claimed with multiplicity at least {}, the factor exponent is {} and the true multiplicity is {}",
                self.one_stated_min_multiplicity, self.one_factor_exponent, self.one_multiplicity
            ));
        }
        out
    }
}

/// Outcome of comparing the closed forms with brute force at one point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub params: FamilyParams,
    pub n: usize,
    pub charpoly_exact_match: bool,
    pub coefficient_diffs: Vec<CoefficientDiff>,
    pub spectrum_max_deviation: f64,
    pub invariant_results: BTreeMap<String, bool>,
    pub factored: FactoredCharPoly,
    #[serde(serialize_with = "ser_coeffs")]
    pub oracle_charpoly: UniPoly,
    pub statement_audit: StatementAudit,
    #[serde(rename = "elapsed_ms", serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_coeffs<S: serde::Serializer>(v: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.coeffs().iter().map(|c| c.to_string()))
}

fn ser_millis<S: serde::Serializer>(v: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(v.as_secs_f64() * 1e3)
}

impl VerificationReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.charpoly_exact_match && self.spectrum_max_deviation <= tol
    }
}

fn coefficient_diffs(closed: &UniPoly, oracle: &UniPoly) -> Vec<CoefficientDiff> {
    let len = closed.coeffs().len().max(oracle.coeffs().len());
    (0..len)
        .filter_map(|d| {
            let (c, o) = (closed.coeff(d), oracle.coeff(d));
            (c != o).then_some(CoefficientDiff {
                degree: d,
                closed_form: c,
                oracle: o,
            })
        })
        .collect()
}

/// `Σλ²` of the matrix whose `det(M − λI)` is `charpoly`, from the two
/// leading subdominant coefficients.
pub fn sum_of_squares_from_charpoly(charpoly: &UniPoly) -> Option<BigInt> {
    let n = charpoly.degree()?;
    if n < 2 {
        return None;
    }
    let sign = if n % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    };
    // det(M − λI) = (−1)^n (λ^n − e1 λ^{n−1} + e2 λ^{n−2} − …)
    let e1 = -(charpoly.coeff(n - 1) * &sign);
    let e2 = charpoly.coeff(n - 2) * &sign;
    Some(&e1 * &e1 - BigInt::from(2) * e2)
}

fn max_deviation(closed: &[f64], numeric: &[f64]) -> f64 {
    if closed.len() != numeric.len() {
        return f64::INFINITY;
    }
    closed
        .iter()
        .zip(numeric)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Compares the closed-form characteristic polynomial and spectrum with the
/// brute-force oracle for one parameter point. Mismatches are reported, not
/// raised.
pub fn verify_instance(params: &FamilyParams, tol: f64) -> Result<VerificationReport> {
    let start = Instant::now();
    let factored = charpoly_closed(params)?;
    let n = params.n();
    let s = seidel_matrix(params);

    let oracle = charpoly_oracle(&s);
    let closed = factored.expand();
    let diffs = coefficient_diffs(&closed, &oracle);

    let numeric = eig_numeric_int(&s, tol)?;
    let closed_spectrum = spectrum_closed(params, tol)?;
    let deviation = max_deviation(&closed_spectrum.to_f64_multiset(), &numeric);

    let nn = BigInt::from(n * (n - 1));
    let c = &factored.cubic;
    let cubic_sum = -&c[2] / &c[3];
    let cubic_pair = &c[1] / &c[3];
    let e1 = BigInt::from(factored.e1);
    let e2 = BigInt::from(factored.e2);
    let vieta_trace = &factored.root1 * &e1 + &e2 + &cubic_sum;
    let closed_squares = &factored.root1 * &factored.root1 * &e1 + &e2 + &cubic_sum * &cubic_sum
        - BigInt::from(2) * &cubic_pair;
    let numeric_sum: f64 = numeric.iter().sum();
    let numeric_squares: f64 = numeric.iter().map(|x| x * x).sum();
    let nf = n as f64;

    let mut invariants = BTreeMap::new();
    invariants.insert("trace_zero".to_string(), s.trace().is_zero());
    invariants.insert(
        "sum_squares".to_string(),
        sum_of_squares_from_charpoly(&oracle).as_ref() == Some(&nn),
    );
    invariants.insert("sum_squares_closed".to_string(), closed_squares == nn);
    invariants.insert(
        "degree".to_string(),
        factored.degree() == n && oracle.degree() == Some(n),
    );
    invariants.insert("vieta_trace".to_string(), vieta_trace.is_zero());
    invariants.insert("numeric_trace".to_string(), numeric_sum.abs() <= tol * nf);
    invariants.insert(
        "numeric_sum_squares".to_string(),
        (numeric_squares - nf * (nf - 1.0)).abs() <= tol * nf * nf,
    );

    Ok(VerificationReport {
        params: *params,
        n,
        charpoly_exact_match: diffs.is_empty(),
        coefficient_diffs: diffs,
        spectrum_max_deviation: deviation,
        invariant_results: invariants,
        statement_audit: StatementAudit::from_charpoly(params, &oracle),
        factored,
        oracle_charpoly: oracle,
        elapsed: start.elapsed(),
    })
}

/// Dimension bookkeeping for the uniform block spectrum: the dimension `m·t`
/// against the totals obtained with multiplicity `t(m−1)` and `m(t−1)` for
/// the secondary eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockMultiplicityCheck {
    pub m: usize,
    pub t: usize,
    pub dimension: usize,
    pub corrected_total: usize,
    pub misstated_total: usize,
}

impl BlockMultiplicityCheck {
    pub fn new(m: usize, t: usize) -> Self {
        Self {
            m,
            t,
            dimension: m * t,
            corrected_total: 1 + t.saturating_sub(1) + t * m.saturating_sub(1),
            misstated_total: uniform_blocks_misstated_total(m, t),
        }
    }

    pub fn misstated_is_inconsistent(&self) -> bool {
        self.misstated_total != self.dimension
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepConfig {
    pub h_max: usize,
    pub k_max: usize,
    pub n_cap: usize,
    pub tol: f64,
}

impl SweepConfig {
    pub fn new(h_max: usize, k_max: usize) -> Self {
        Self {
            h_max,
            k_max,
            n_cap: DEFAULT_N_CAP,
            tol: crate::closed_form::DEFAULT_TOL,
        }
    }

    /// Every `(h, p, k)` with `h ∈ [2, h_max]`, `p ∈ [1, h]`, `k ∈ [2, k_max]`
    /// in ascending order, regardless of the cap.
    pub fn grid(&self) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for h in 2..=self.h_max {
            for p in 1..=h {
                for k in 2..=self.k_max {
                    out.push(FamilyParams::new(h, p, k).expect("grid parameters are valid"));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SweepOutcome {
    Verified(Box<VerificationReport>),
    /// `n` exceeds the cap.
    Skipped,
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub params: FamilyParams,
    pub n: usize,
    pub outcome: SweepOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub points: Vec<SweepPoint>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<FamilyParams>,
}

impl SweepSummary {
    pub fn reports(&self) -> impl Iterator<Item = &VerificationReport> {
        self.points.iter().filter_map(|p| match &p.outcome {
            SweepOutcome::Verified(r) => Some(r.as_ref()),
            _ => None,
        })
    }
}

/// Runs [`verify_instance`] over the whole grid in parallel; points come back
/// in `(h, p, k)` order. A point passes when its characteristic polynomial
/// matches exactly.
pub fn sweep(config: &SweepConfig) -> SweepSummary {
    let points: Vec<SweepPoint> = config
        .grid()
        .into_par_iter()
        .map(|params| {
            let n = params.n();
            let outcome = if n > config.n_cap {
                SweepOutcome::Skipped
            } else {
                match verify_instance(&params, config.tol) {
                    Ok(report) => SweepOutcome::Verified(Box::new(report)),
                    Err(e) => SweepOutcome::Error {
                        message: e.to_string(),
                    },
                }
            };
            SweepPoint { params, n, outcome }
        })
        .collect();

    let mut passed = 0;
    let mut failed = 0;
    let mut skipped = 0;
    let mut first_failure = None;
    for point in &points {
        match &point.outcome {
            SweepOutcome::Verified(r) if r.charpoly_exact_match => passed += 1,
            SweepOutcome::Skipped => skipped += 1,
            _ => {
                failed += 1;
                first_failure.get_or_insert(point.params);
            }
        }
    }
    SweepSummary {
        config: *config,
        points,
        passed,
        failed,
        skipped,
        first_failure,
    }
}

/// `f64` view of an integer coefficient vector, used by the CLI.
pub fn coeffs_to_f64(c: &[BigInt]) -> Vec<f64> {
    c.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::cubic_s;

    fn params(h: usize, p: usize, k: usize) -> FamilyParams {
        FamilyParams::new(h, p, k).unwrap()
    }

    #[test]
    fn hand_checked_instances() {
        for fp in [params(3, 1, 2), params(2, 1, 3)] {
            let r = verify_instance(&fp, 1e-9).unwrap();
            assert!(r.charpoly_exact_match, "{r:?}");
            assert!(r.coefficient_diffs.is_empty());
            assert!(
                r.spectrum_max_deviation <= 1e-9,
                "{}",
                r.spectrum_max_deviation
            );
            assert!(
                r.invariant_results.values().all(|&ok| ok),
                "{:?}",
                r.invariant_results
            );
        }
    }

    #[test]
    fn larger_instance_is_a_discovery_output() {
        let r = verify_instance(&params(4, 2, 3), 1e-9).unwrap();
        assert_eq!(r.n, 8);
        assert!(r.charpoly_exact_match, "{:?}", r.coefficient_diffs);
    }

    #[test]
    fn degenerate_family_propagates() {
        assert!(verify_instance(&params(2, 1, 1), 1e-9).is_err());
    }

    #[test]
    fn mismatches_are_reported_coefficientwise() {
        let a = UniPoly::from_i64s(&[1, 2, 3]);
        let b = UniPoly::from_i64s(&[1, 5, 3, 4]);
        let diffs = coefficient_diffs(&a, &b);
        assert_eq!(diffs.len(), 2);
        assert_eq!(diffs[0].degree, 1);
        assert_eq!(diffs[1].closed_form, BigInt::zero());
        assert_eq!(diffs[1].oracle, BigInt::from(4));
    }

    #[test]
    fn statement_audit_flags_the_sign_of_the_label() {
        let r = verify_instance(&params(2, 1, 3), 1e-9).unwrap();
        let audit = &r.statement_audit;
        assert_eq!(audit.factor_eigenvalue, -1);
        assert_eq!(audit.factor_eigenvalue_multiplicity, 3);
        assert_eq!(audit.stated_eigenvalue, 1);
        assert_eq!(audit.stated_eigenvalue_multiplicity, 0);
        assert!(!audit.label_consistent);
        assert!(!audit.stated_claim_holds);
        assert!(audit.findings().iter().any(|f| f.contains("inconsistent")));
    }

    #[test]
    fn sum_of_squares_identity() {
        let s = seidel_matrix(&params(4, 2, 3));
        let cp = charpoly_oracle(&s);
        assert_eq!(sum_of_squares_from_charpoly(&cp), Some(BigInt::from(56)));
    }

    #[test]
    fn cubic_roots_of_grid_cubics() {
        for fp in SweepConfig::new(7, 5).grid() {
            let c = cubic_s(&fp).unwrap();
            let cf = coeffs_to_f64(&c);
            let roots = cubic_roots([cf[0], cf[1], cf[2], cf[3]], 1e-9).unwrap();
            for x in roots {
                let res = UniPoly::new(c.to_vec()).eval_f64(x);
                assert!(res.abs() <= 1e-9, "{fp:?}: s({x}) = {res}");
            }
        }
    }

    #[test]
    fn block_multiplicity_bookkeeping() {
        let check = BlockMultiplicityCheck::new(2, 3);
        assert_eq!(check.dimension, 6);
        assert_eq!(check.corrected_total, 6);
        assert_eq!(check.misstated_total, 7);
        assert!(check.misstated_is_inconsistent());
        for m in 1..=6 {
            for t in 1..=6 {
                let c = BlockMultiplicityCheck::new(m, t);
                assert_eq!(c.corrected_total, c.dimension);
            }
        }
    }

    #[test]
    fn sweep_grid_and_cap() {
        let config = SweepConfig::new(3, 3);
        let summary = sweep(&config);
        assert_eq!(summary.points.len(), 10);
        assert_eq!(summary.passed, 10);
        assert_eq!(
            summary.reports().filter(|r| r.charpoly_exact_match).count(),
            summary.passed
        );

        let capped = sweep(&SweepConfig { n_cap: 5, ..config });
        let expected_skips = config.grid().iter().filter(|p| p.n() > 5).count();
        assert_eq!(capped.skipped, expected_skips);
        assert!(capped
            .points
            .iter()
            .filter(|p| p.n > 5)
            .all(|p| p.outcome == SweepOutcome::Skipped));
        let order: Vec<_> = capped.points.iter().map(|p| p.params).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }
}
