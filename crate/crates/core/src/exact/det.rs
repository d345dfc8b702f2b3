use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::{IntMatrix, Matrix};
use super::poly::UniPoly;
use super::ring::ExactDiv;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Works over any exact integral domain: integers, rationals, `Z[λ]`.
///
/// # Panics
/// If `m` is not square.
pub fn det_exact<T: ExactDiv>(m: &Matrix<T>) -> T {
    let n = m.dim();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let num = a[(i, j)].clone() * pivot.clone() - lead.clone() * a[(k, j)].clone();
                a[(i, j)] = num
                    .div_exact(&prev)
                    .expect("Bareiss step is always an exact division");
            }
            a[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Adjugate (transposed cofactor matrix). Satisfies `m · adj(m) = det(m)·I`
/// even for singular `m`.
pub fn adjugate_exact<T: ExactDiv>(m: &Matrix<T>) -> Matrix<T> {
    let n = m.dim();
    if n == 1 {
        return Matrix::identity(1);
    }
    Matrix::from_fn(n, n, |i, j| {
        let cofactor = det_exact(&m.minor(j, i));
        if (i + j) % 2 == 0 {
            cofactor
        } else {
            -cofactor
        }
    })
}

/// `det(m − λI)` with exact integer coefficients, by Faddeev–LeVerrier.
/// The result has degree `n` and leading coefficient `(−1)^n`.
pub fn charpoly_oracle(m: &IntMatrix) -> UniPoly {
    let n = m.dim();
    // monic[i] = coefficient of λ^i in det(λI − m)
    let mut monic = vec![BigInt::zero(); n + 1];
    monic[n] = BigInt::one();
    let mut acc = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // acc ← m·acc + c_{n−k+1}·I
        acc = m.matmul(&acc);
        for i in 0..n {
            acc[(i, i)] += &monic[n - k + 1];
        }
        let tr = m.matmul(&acc).trace();
        monic[n - k] = -(tr / BigInt::from(k));
    }
    let monic = UniPoly::new(monic);
    if n % 2 == 1 {
        -monic
    } else {
        monic
    }
}

/// Converts between `det(M − λI)` and `det(λI − M)` for an `n × n` matrix;
/// the map is its own inverse.
pub fn monic_charpoly(charpoly: &UniPoly, n: usize) -> UniPoly {
    if n % 2 == 1 {
        -charpoly
    } else {
        charpoly.clone()
    }
}
