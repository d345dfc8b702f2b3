use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, Matrix};

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending.
///
/// Iterates until the off-diagonal Frobenius norm drops below `tol / 1000`
/// (or stops shrinking), so by Weyl's inequality every returned value lies
/// within `tol` of an exact eigenvalue.
pub fn eig_numeric(m: &Matrix<f64>, tol: f64) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..i {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let mut a: Vec<f64> = m.iter().copied().collect();
    let idx = |i: usize, j: usize| i * n + j;
    let target = tol * 1e-3;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[idx(i, j)] * a[idx(i, j)];
                }
            }
        }
        s.sqrt()
    };

    let mut last_off = f64::INFINITY;
    for _ in 0..MAX_SWEEPS {
        let off = off_norm(&a);
        if off <= target || off >= last_off {
            break;
        }
        last_off = off;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

/// [`eig_numeric`] for an integer matrix.
pub fn eig_numeric_int(m: &IntMatrix, tol: f64) -> Result<Vec<f64>> {
    eig_numeric(&m.to_f64(), tol)
}

/// Real roots of `c0 + c1·x + c2·x² + c3·x³`, sorted descending and counted
/// with multiplicity.
///
/// Trigonometric solution of the depressed cubic followed by Newton
/// polishing. A discriminant that is negative beyond `tol` (relative to the
/// size of its two terms) means a complex pair and yields
/// [`Error::ComplexRoots`].
pub fn cubic_roots(c: [f64; 4], tol: f64) -> Result<[f64; 3]> {
    let [c0, c1, c2, c3] = c;
    if c3 == 0.0 {
        return Err(Error::DegenerateLeading);
    }
    let (a, b, d) = (c2 / c3, c1 / c3, c0 / c3);
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
    let cube = 4.0 * p * p * p;
    let square = 27.0 * q * q;
    let disc = -(cube + square);
    let magnitude = cube.abs() + square;
    if disc < -tol * magnitude.max(1.0) {
        return Err(Error::ComplexRoots(disc));
    }

    let mut roots = if p < 0.0 {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        [0.0, 1.0, 2.0].map(|k| m * (phi - 2.0 * PI * k / 3.0).cos() - shift)
    } else {
        // p ≈ 0 and q ≈ 0: a (near-)triple root
        [(-q).cbrt() - shift; 3]
    };

    let f = |x: f64| ((x + a) * x + b) * x + d;
    let df = |x: f64| (3.0 * x + 2.0 * a) * x + b;
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let fx = f(*r);
            let dfx = df(*r);
            if fx == 0.0 || dfx == 0.0 {
                break;
            }
            let next = *r - fx / dfx;
            if f(next).abs() < fx.abs() {
                *r = next;
            } else {
                break;
            }
        }
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{seidel_matrix, FamilyParams};

    fn assert_close(got: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(got.len(), expected.len());
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() <= tol, "got {got:?}, expected {expected:?}");
        }
    }

    #[test]
    fn eig_examples() {
        let i3 = IntMatrix::identity(3);
        assert_close(
            &eig_numeric_int(&i3, 1e-9).unwrap(),
            &[1.0, 1.0, 1.0],
            1e-12,
        );
        let j4 = IntMatrix::ones(4, 4);
        assert_close(
            &eig_numeric_int(&j4, 1e-9).unwrap(),
            &[4.0, 0.0, 0.0, 0.0],
            1e-12,
        );
        let s = seidel_matrix(&FamilyParams::new(3, 1, 2).unwrap());
        let r5 = 5f64.sqrt();
        assert_close(
            &eig_numeric_int(&s, 1e-9).unwrap(),
            &[r5, 1.0, -1.0, -r5],
            1e-9,
        );
    }

    #[test]
    fn eig_rejects_asymmetric() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[2, 0]]);
        assert_eq!(eig_numeric_int(&m, 1e-9), Err(Error::NotSymmetric));
        let m = IntMatrix::ones(2, 3);
        assert_eq!(eig_numeric_int(&m, 1e-9), Err(Error::NotSymmetric));
    }

    #[test]
    fn eig_trace_and_frobenius() {
        for (h, p, k) in [(4, 2, 3), (5, 1, 4), (6, 6, 2), (7, 3, 5)] {
            let s = seidel_matrix(&FamilyParams::new(h, p, k).unwrap());
            let n = s.rows() as f64;
            let eig = eig_numeric_int(&s, 1e-9).unwrap();
            let sum: f64 = eig.iter().sum();
            let sq: f64 = eig.iter().map(|x| x * x).sum();
            assert!(sum.abs() <= 1e-9 * n);
            assert!((sq - n * (n - 1.0)).abs() <= 1e-9 * n * n);
        }
    }

    #[test]
    fn cubic_examples() {
        let r5 = 5f64.sqrt();
        assert_close(
            &cubic_roots([5.0, 5.0, -1.0, -1.0], 1e-9).unwrap(),
            &[r5, -1.0, -r5],
            1e-12,
        );
        assert_close(
            &cubic_roots([3.0, 5.0, 1.0, -1.0], 1e-9).unwrap(),
            &[3.0, -1.0, -1.0],
            1e-7,
        );
        assert_close(
            &cubic_roots([0.0, 0.0, 0.0, -1.0], 1e-9).unwrap(),
            &[0.0, 0.0, 0.0],
            0.0,
        );
    }

    #[test]
    fn cubic_errors() {
        assert_eq!(
            cubic_roots([1.0, 1.0, 1.0, 0.0], 1e-9),
            Err(Error::DegenerateLeading)
        );
        // x³ + x has roots 0, ±i
        assert!(matches!(
            cubic_roots([0.0, 1.0, 0.0, 1.0], 1e-9),
            Err(Error::ComplexRoots(_))
        ));
    }

    #[test]
    fn cubic_residuals() {
        for roots in [[2.0, 1.0, -3.0], [10.0, -0.5, -0.25], [7.0, 7.0, -2.0]] {
            let [r1, r2, r3] = roots;
            let c = [
                -r1 * r2 * r3,
                r1 * r2 + r1 * r3 + r2 * r3,
                -(r1 + r2 + r3),
                1.0,
            ];
            let got = cubic_roots(c, 1e-9).unwrap();
            for x in got {
                let res = ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
                assert!(res.abs() <= 1e-9, "{roots:?}: residual {res}");
            }
        }
    }
}
