//! Closed-form spectral results for `aI + bJ`, uniform block matrices,
//! `−K_n − λI` and the Seidel matrix of the clique family.

mod spectrum;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{RatMatrix, UniPoly};
use crate::family::FamilyParams;
use crate::verify::cubic_roots;

pub use spectrum::{EigenValue, Spectrum, SpectrumEntry};

/// Default tolerance for numeric roots and spectrum merging.
pub const DEFAULT_TOL: f64 = 1e-9;

fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The matrix `aI_n + bJ_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarMatrixSpec {
    pub a: BigRational,
    pub b: BigRational,
    pub n: usize,
}

impl ScalarMatrixSpec {
    pub fn new(a: BigRational, b: BigRational, n: usize) -> Self {
        Self { a, b, n }
    }

    pub fn realize(&self) -> RatMatrix {
        RatMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                &self.a + &self.b
            } else {
                self.b.clone()
            }
        })
    }
}

/// Spectrum of `aI_n + bJ_n`: `a + bn` once (the all-ones direction) and `a`
/// with multiplicity `n − 1`.
pub fn spectrum_ai_bj(spec: &ScalarMatrixSpec) -> Spectrum {
    let top = &spec.a + &spec.b * rat(spec.n);
    Spectrum::from_entries(
        vec![
            SpectrumEntry {
                value: EigenValue::Exact(top),
                multiplicity: 1,
            },
            SpectrumEntry {
                value: EigenValue::Exact(spec.a.clone()),
                multiplicity: spec.n.saturating_sub(1),
            },
        ],
        0.0,
    )
}

/// Spectrum of the `t × t` block matrix with diagonal blocks `A` (order `m`,
/// constant row sum `r`, eigenvalue `d` off the all-ones direction) and
/// off-diagonal blocks `bJ_m`.
///
/// Returns `r + bm(t−1)` once, `r − bm` with multiplicity `t − 1`, and `d`
/// with multiplicity `t(m − 1)`.
pub fn spectrum_uniform_blocks(
    r: &BigRational,
    d: &BigRational,
    b: &BigRational,
    m: usize,
    t: usize,
) -> Spectrum {
    let bm = b * rat(m);
    let entries = vec![
        SpectrumEntry {
            value: EigenValue::Exact(r + &bm * rat(t.saturating_sub(1))),
            multiplicity: 1,
        },
        SpectrumEntry {
            value: EigenValue::Exact(r - &bm),
            multiplicity: t.saturating_sub(1),
        },
        SpectrumEntry {
            value: EigenValue::Exact(d.clone()),
            multiplicity: t * m.saturating_sub(1),
        },
    ];
    Spectrum::from_entries(entries, 0.0)
}

/// Total multiplicity if the secondary eigenvalue is counted `m·(t − 1)`
/// times instead of `t·(m − 1)`. Differs from the dimension `m·t` unless
/// `m = 1` or `t = m`.
pub fn uniform_blocks_misstated_total(m: usize, t: usize) -> usize {
    1 + t.saturating_sub(1) + m * t.saturating_sub(1)
}

/// `C_p(n) = (1 − λ)^{n−1}·(1 − n − λ)`, the characteristic polynomial
/// `det(−K_n − λI)`.
pub fn cp_poly(n: usize) -> UniPoly {
    assert!(n >= 1, "C_p(n) needs n >= 1");
    let one_minus = UniPoly::linear(1, -1);
    one_minus.pow(n - 1) * UniPoly::linear(1 - n as i64, -1)
}

/// Adjugate of `−K_n − λI` as `(diagonal entry, off-diagonal entry)`:
/// `C_p(n − 1)` on the diagonal and `(1 − λ)^{n−2}` elsewhere.
pub fn adjugate_neg_k_closed(n: usize) -> Result<(UniPoly, UniPoly)> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "adjugate form needs n >= 2 (got {n})"
        )));
    }
    Ok((cp_poly(n - 1), UniPoly::linear(1, -1).pow(n - 2)))
}

/// Scalar `c(λ)` with `X'·adj(−K_h − λI)·X'ᵀ = c(λ)·J`:
/// `(C_p(h−1) − (1−λ)^{h−2})·h + (2p − h)²·(1−λ)^{h−2}`.
pub fn sandwich_closed(params: &FamilyParams) -> Result<UniPoly> {
    params.require_two_cliques()?;
    let h = params.h();
    let (diag, off) = adjugate_neg_k_closed(h)?;
    let skew = BigInt::from(2 * params.p() as i64 - h as i64);
    Ok((&diag - &off).scale(&BigInt::from(h)) + off.scale(&(&skew * &skew)))
}

/// Coefficients `[c0, c1, c2, c3]` of the cubic factor `s` of the Seidel
/// characteristic polynomial, ascending in degree.
pub fn cubic_s(params: &FamilyParams) -> Result<[BigInt; 4]> {
    params.require_two_cliques()?;
    let (h, n, p) = (params.h() as i64, params.n() as i64, params.p() as i64);
    let c3 = -1;
    let c2 = -(2 * h - n + 2 * p - 3);
    let c1 = -(2 * h * h - 2 * (h - 1) * n + 2 * (h - 2) * p - 4 * h + 3);
    let c0 = 2 * h * h - (2 * h - 1) * n - 2 * (2 * h * h - 2 * h * n - h + 1) * p - 2 * h
        + 4 * (h - n) * p * p
        + 1;
    Ok([c0, c1, c2, c3].map(BigInt::from))
}

/// `F(λ) = (1 − 2p − λ)^{e1} · (1 − λ)^{e2} · s(λ)` with `e1 = k − 2` and
/// `e2 = n − k − 1`, in the `det(S − λI)` convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredCharPoly {
    #[serde(serialize_with = "ser_bigint")]
    pub root1: BigInt,
    pub e1: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub root2: BigInt,
    pub e2: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub cubic: [BigInt; 4],
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

fn ser_bigints<S: serde::Serializer>(
    v: &[BigInt; 4],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(4))?;
    for c in v {
        match c.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&c.to_string())?,
        }
    }
    seq.end()
}

impl FactoredCharPoly {
    pub fn cubic_poly(&self) -> UniPoly {
        UniPoly::new(self.cubic.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.e1 + self.e2 + 3
    }

    pub fn expand(&self) -> UniPoly {
        let f1 = UniPoly::linear(self.root1.clone(), -1).pow(self.e1);
        let f2 = UniPoly::linear(self.root2.clone(), -1).pow(self.e2);
        &(&f1 * &f2) * &self.cubic_poly()
    }
}

fn signed(v: &BigInt) -> String {
    if v.is_negative() {
        format!("−{}", v.abs())
    } else {
        v.to_string()
    }
}

impl fmt::Display for FactoredCharPoly {
    /// `(−1−λ)^1 · (−λ³+λ²+5λ+3)`; factors with exponent zero are left out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (root, e) in [(&self.root1, self.e1), (&self.root2, self.e2)] {
            if e > 0 {
                parts.push(format!("({}−λ)^{e}", signed(root)));
            }
        }
        parts.push(format!("({})", self.cubic_poly()));
        f.write_str(&parts.join(" · "))
    }
}

/// Factored characteristic polynomial `det(S − λI)` of the Seidel matrix.
pub fn charpoly_closed(params: &FamilyParams) -> Result<FactoredCharPoly> {
    params.require_two_cliques()?;
    let n = params.n() as i64;
    let k = params.k() as i64;
    let e2 = n - k - 1;
    if e2 < 0 {
        return Err(Error::UnsupportedShape(format!(
            "exponent of (1 − λ) is negative ({e2}) for {params:?}"
        )));
    }
    Ok(FactoredCharPoly {
        root1: BigInt::from(1 - 2 * params.p() as i64),
        e1: (k - 2) as usize,
        root2: BigInt::one(),
        e2: e2 as usize,
        cubic: cubic_s(params)?,
    })
}

/// Seidel spectrum from the factored form. Integer roots of the cubic are
/// detected exactly and reported as exact values; the others stay symbolic.
pub fn spectrum_closed(params: &FamilyParams, tol: f64) -> Result<Spectrum> {
    let f = charpoly_closed(params)?;
    let mut entries = vec![
        SpectrumEntry {
            value: EigenValue::Exact(rat(f.root1.clone())),
            multiplicity: f.e1,
        },
        SpectrumEntry {
            value: EigenValue::Exact(rat(f.root2.clone())),
            multiplicity: f.e2,
        },
    ];
    let cubic = f.cubic_poly();
    let numeric = cubic_roots(
        f.cubic.each_ref().map(|c| c.to_f64().unwrap_or(f64::NAN)),
        tol,
    )?;
    for (index, root) in numeric.iter().enumerate() {
        let nearest = BigInt::from(root.round() as i64);
        let value = if cubic.eval(&nearest).is_zero() {
            EigenValue::Exact(rat(nearest))
        } else {
            EigenValue::CubicRoot {
                cubic: f.cubic.clone(),
                index,
            }
        };
        entries.push(SpectrumEntry {
            value,
            multiplicity: 1,
        });
    }
    Ok(Spectrum::from_entries(entries, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{adjugate_exact, charpoly_oracle, IntMatrix, PolyMatrix};
    use crate::family::{seidel_matrix, x_prime_matrix};

    fn params(h: usize, p: usize, k: usize) -> FamilyParams {
        FamilyParams::new(h, p, k).unwrap()
    }

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<f64> {
        v.iter().map(|&x| x as f64).collect()
    }

    #[test]
    fn scalar_matrix_spectrum() {
        let s = spectrum_ai_bj(&ScalarMatrixSpec::new(rat(0), rat(1), 3));
        assert_eq!(s.to_f64_multiset(), ints(&[3, 0, 0]));
        let s = spectrum_ai_bj(&ScalarMatrixSpec::new(rat(2), rat(0), 4));
        assert_eq!(s.entries().len(), 1);
        assert_eq!(s.to_f64_multiset(), ints(&[2, 2, 2, 2]));
        let s = spectrum_ai_bj(&ScalarMatrixSpec::new(rat(1), rat(-1), 2));
        assert_eq!(s.to_f64_multiset(), ints(&[1, -1]));
        let s = spectrum_ai_bj(&ScalarMatrixSpec::new(rat(5), rat(2), 1));
        assert_eq!(s.to_f64_multiset(), ints(&[7]));
    }

    #[test]
    fn scalar_matrix_eigenvectors() {
        for a in -3..=3 {
            for b in -3..=3 {
                for n in 1..=6usize {
                    let spec = ScalarMatrixSpec::new(rat(a), rat(b), n);
                    let m = spec.realize();
                    let ones = RatMatrix::ones(n, 1);
                    let top = rat(a + b * n as i64);
                    assert_eq!(m.matmul(&ones), ones.scale(&top));
                    for i in 1..n {
                        let v = RatMatrix::from_fn(n, 1, |r, _| {
                            if r == 0 {
                                rat(1)
                            } else if r == i {
                                rat(-1)
                            } else {
                                rat(0)
                            }
                        });
                        assert_eq!(m.matmul(&v), v.scale(&rat(a)));
                    }
                    assert_eq!(spectrum_ai_bj(&spec).dimension(), n);
                }
            }
        }
    }

    #[test]
    fn uniform_block_examples() {
        let s = spectrum_uniform_blocks(&rat(-1), &rat(1), &rat(1), 2, 2);
        assert_eq!(s.to_f64_multiset(), ints(&[1, 1, 1, -3]));
        let s = spectrum_uniform_blocks(&rat(4), &rat(-2), &rat(0), 3, 2);
        assert_eq!(s.to_f64_multiset(), ints(&[4, 4, -2, -2, -2, -2]));
        // A = 2I, b = 1, m = 2, t = 3
        let s = spectrum_uniform_blocks(&rat(2), &rat(2), &rat(1), 2, 3);
        assert_eq!(s.to_f64_multiset(), ints(&[6, 2, 2, 2, 0, 0]));
        let m = IntMatrix::from_fn(6, 6, |i, j| match (i / 2 == j / 2, i == j) {
            (true, true) => BigInt::from(2),
            (true, false) => BigInt::zero(),
            (false, _) => BigInt::one(),
        });
        let numeric = crate::verify::eig_numeric_int(&m, 1e-12).unwrap();
        for (x, y) in numeric.iter().zip(s.to_f64_multiset()) {
            assert!((x - y).abs() <= 1e-9, "{numeric:?}");
        }
        assert_eq!(uniform_blocks_misstated_total(2, 3), 7);
        assert_eq!(uniform_blocks_misstated_total(3, 3), 9);
    }

    #[test]
    fn cp_poly_examples() {
        assert_eq!(cp_poly(1), p(&[0, -1]));
        assert_eq!(cp_poly(2), p(&[-1, 0, 1]));
        assert_eq!(cp_poly(3), p(&[-2, 3, 0, -1]));
        for n in 1..=10 {
            let neg_k = IntMatrix::complete_graph(n).scale(&BigInt::from(-1));
            assert_eq!(cp_poly(n), charpoly_oracle(&neg_k), "n = {n}");
        }
    }

    #[test]
    fn adjugate_closed_examples() {
        assert_eq!(adjugate_neg_k_closed(2).unwrap(), (p(&[0, -1]), p(&[1])));
        assert_eq!(
            adjugate_neg_k_closed(3).unwrap(),
            (p(&[-1, 0, 1]), p(&[1, -1]))
        );
        assert!(adjugate_neg_k_closed(1).is_err());
        for n in 3..=8 {
            let (diag, off) = adjugate_neg_k_closed(n).unwrap();
            assert!(diag.eval(&BigInt::one()).is_zero());
            assert!(off.eval(&BigInt::one()).is_zero());
        }
    }

    #[test]
    fn adjugate_closed_matches_cofactors() {
        for n in 2..=6 {
            let m = IntMatrix::complete_graph(n)
                .scale(&BigInt::from(-1))
                .minus_lambda_identity();
            let (diag, off) = adjugate_neg_k_closed(n).unwrap();
            assert_eq!(
                adjugate_exact(&m),
                PolyMatrix::two_valued(n, &diag, &off),
                "n = {n}"
            );
        }
    }

    #[test]
    fn sandwich_examples() {
        assert_eq!(sandwich_closed(&params(3, 1, 2)).unwrap(), p(&[-5, 2, 3]));
        assert_eq!(sandwich_closed(&params(2, 2, 2)).unwrap(), p(&[2, -2]));
        assert_eq!(sandwich_closed(&params(2, 1, 3)).unwrap(), p(&[-2, -2]));
        assert!(sandwich_closed(&params(2, 1, 1)).is_err());
    }

    #[test]
    fn sandwich_matches_explicit_product() {
        for (h, pp, k) in [(3, 1, 2), (2, 2, 2), (2, 1, 3), (4, 3, 3)] {
            let fp = params(h, pp, k);
            let x = x_prime_matrix(&fp).unwrap().to_poly();
            let adj = adjugate_exact(
                &IntMatrix::complete_graph(h)
                    .scale(&BigInt::from(-1))
                    .minus_lambda_identity(),
            );
            let product = x.matmul(&adj).matmul(&x.transpose());
            let c = sandwich_closed(&fp).unwrap();
            let m = fp.private_block_len();
            assert_eq!(
                product,
                PolyMatrix::from_fn(m, m, |_, _| c.clone()),
                "{fp:?}"
            );
        }
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(
            cubic_s(&params(3, 1, 2)).unwrap(),
            [5, 5, -1, -1].map(BigInt::from)
        );
        assert_eq!(
            cubic_s(&params(2, 1, 3)).unwrap(),
            [3, 5, 1, -1].map(BigInt::from)
        );
        for h in 2..=7 {
            for pp in 1..=h {
                for k in 2..=5 {
                    let fp = params(h, pp, k);
                    let c = cubic_s(&fp).unwrap();
                    let trace = fp.n() as i64 + 3 - 2 * h as i64 - 2 * pp as i64;
                    assert_eq!(-&c[2] / &c[3], BigInt::from(trace));
                }
            }
        }
    }

    #[test]
    fn charpoly_closed_examples() {
        let f = charpoly_closed(&params(3, 1, 2)).unwrap();
        assert_eq!((f.e1, f.e2), (0, 1));
        assert_eq!(f.expand(), p(&[5, 0, -6, 0, 1]));
        assert_eq!(f.to_string(), "(1−λ)^1 · (−λ³−λ²+5λ+5)");

        let f = charpoly_closed(&params(2, 1, 3)).unwrap();
        assert_eq!((f.e1, f.e2), (1, 0));
        assert_eq!(f.to_string(), "(−1−λ)^1 · (−λ³+λ²+5λ+3)");
        assert_eq!(
            f.expand(),
            charpoly_oracle(&seidel_matrix(&params(2, 1, 3)))
        );
        assert_eq!(f.expand().degree(), Some(4));

        assert!(matches!(
            charpoly_closed(&params(3, 1, 1)),
            Err(Error::DegenerateFamily(_))
        ));
    }

    #[test]
    fn closed_spectrum_examples() {
        let s = spectrum_closed(&params(3, 1, 2), DEFAULT_TOL).unwrap();
        let r5 = 5f64.sqrt();
        let expected = [r5, 1.0, -1.0, -r5];
        let got = s.to_f64_multiset();
        assert_eq!(got.len(), 4);
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() <= 1e-12, "{got:?}");
        }

        let s = spectrum_closed(&params(2, 1, 3), DEFAULT_TOL).unwrap();
        assert_eq!(s.to_f64_multiset(), ints(&[3, -1, -1, -1]));
        assert!(s.entries().iter().all(|e| e.value.is_exact()));

        let s = spectrum_closed(&params(2, 2, 2), DEFAULT_TOL).unwrap();
        assert_eq!(s.to_f64_multiset(), ints(&[1, 1, 1, -3]));
    }

    #[test]
    fn degree_and_trace_bookkeeping() {
        for h in 2..=7 {
            for pp in 1..=h {
                for k in 2..=5 {
                    let fp = params(h, pp, k);
                    let f = charpoly_closed(&fp).unwrap();
                    assert_eq!(f.degree(), fp.n());
                    let c = &f.cubic;
                    let trace = &f.root1 * BigInt::from(f.e1) + BigInt::from(f.e2) - &c[2] / &c[3];
                    assert!(trace.is_zero(), "{fp:?}");
                    // Vieta: Σr² = σ1² − 2σ2 with σ1 = −c2/c3, σ2 = c1/c3
                    let s1 = -&c[2] / &c[3];
                    let s2 = &c[1] / &c[3];
                    let squares =
                        &f.root1 * &f.root1 * BigInt::from(f.e1) + BigInt::from(f.e2) + &s1 * &s1
                            - BigInt::from(2) * s2;
                    assert_eq!(squares, BigInt::from(fp.n() * (fp.n() - 1)), "{fp:?}");
                }
            }
        }
    }
}
