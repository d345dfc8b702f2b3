use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::det::{adjugate_exact, det_exact};
use super::matrix::{IntMatrix, RatMatrix};
use super::ring::ExactDiv;
use crate::error::{Error, Result};

/// Inverse of `aI_n + bJ_n`, returned as the pair `(a', b')` with
/// `(aI + bJ)^{-1} = a'I + b'J`.
///
/// Follows from the rank-one update of `aI` by `b·1·1ᵀ`:
/// `a' = 1/a`, `b' = −b / (a(a + bn))`.
pub fn sherman_morrison_inverse(
    a: &BigRational,
    b: &BigRational,
    n: usize,
) -> Result<(BigRational, BigRational)> {
    if a.is_zero() {
        return Err(Error::SingularInput("a = 0".into()));
    }
    let shifted = a + b * BigRational::from_integer(BigInt::from(n));
    if shifted.is_zero() {
        return Err(Error::SingularInput(format!("a + b·n = 0 for n = {n}")));
    }
    let a_inv = a.recip();
    let b_inv = -(b / (a * &shifted));
    Ok((a_inv, b_inv))
}

fn check_blocks(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> Result<()> {
    let ok = a.is_square()
        && d.is_square()
        && b.rows() == a.rows()
        && b.cols() == d.cols()
        && c.rows() == d.rows()
        && c.cols() == a.cols();
    if ok {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "blocks A {}x{}, B {}x{}, C {}x{}, D {}x{} do not form a square block matrix",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
            c.rows(),
            c.cols(),
            d.rows(),
            d.cols()
        )))
    }
}

/// Gauss–Jordan inverse over the rationals, `None` when singular.
pub(crate) fn inverse_rational(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.dim();
    let mut a = m.clone();
    let mut inv = RatMatrix::identity(n);
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[(r, col)].is_zero())?;
        a.swap_rows(col, pivot_row);
        inv.swap_rows(col, pivot_row);
        let pivot = a[(col, col)].clone();
        for j in 0..n {
            a[(col, j)] = &a[(col, j)] / &pivot;
            inv[(col, j)] = &inv[(col, j)] / &pivot;
        }
        for r in 0..n {
            if r == col || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for j in 0..n {
                let da = &factor * &a[(col, j)];
                let di = &factor * &inv[(col, j)];
                a[(r, j)] -= da;
                inv[(r, j)] -= di;
            }
        }
    }
    Some(inv)
}

fn to_integer(x: BigRational, what: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::InternalError(format!(
            "{what} produced non-integer {x}"
        )))
    }
}

/// Determinant of `[[A, B], [C, D]]` as `det(D)·det(A − B·D⁻¹·C)`, evaluated
/// over exact rationals.
pub fn schur_block_det(
    a: &IntMatrix,
    b: &IntMatrix,
    c: &IntMatrix,
    d: &IntMatrix,
) -> Result<BigInt> {
    check_blocks(a, b, c, d)?;
    let det_d = det_exact(d);
    if det_d.is_zero() {
        return Err(Error::SingularBlock);
    }
    let d_inv = inverse_rational(&d.to_rational()).ok_or(Error::SingularBlock)?;
    let schur = a
        .to_rational()
        .sub(&b.to_rational().matmul(&d_inv).matmul(&c.to_rational()));
    let value = BigRational::from_integer(det_d) * det_exact(&schur);
    to_integer(value, "Schur complement determinant")
}

/// Same determinant through the adjugate form
/// `det(det(D)·A − B·adj(D)·C) / det(D)^{n−1}` with `n = dim A`, staying in
/// the integers until the final exact division.
pub fn schur_block_det_adjugate(
    a: &IntMatrix,
    b: &IntMatrix,
    c: &IntMatrix,
    d: &IntMatrix,
) -> Result<BigInt> {
    check_blocks(a, b, c, d)?;
    let det_d = det_exact(d);
    if det_d.is_zero() {
        return Err(Error::SingularBlock);
    }
    let n = a.rows();
    if n == 0 {
        return Ok(det_d);
    }
    let inner = a.scale(&det_d).sub(&b.matmul(&adjugate_exact(d)).matmul(c));
    let numerator = det_exact(&inner);
    let denominator = num_traits::pow(det_d, n - 1);
    if denominator.is_one() {
        return Ok(numerator);
    }
    numerator.div_exact(&denominator).ok_or_else(|| {
        Error::InternalError(format!(
            "adjugate-form numerator {numerator} is not divisible by det(D)^{}",
            n - 1
        ))
    })
}
