use std::fmt;
use std::ops::{Index, IndexMut, Range};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::poly::UniPoly;
use super::ring::Ring;

/// Dense row-major matrix. Square matrices are the common case; the
/// rectangular form carries coupling blocks such as `X'`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;
pub type PolyMatrix = Matrix<UniPoly>;

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// # Panics
    /// If the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Self {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Dimension of a square matrix.
    ///
    /// # Panics
    /// If the matrix is not square.
    pub fn dim(&self) -> usize {
        assert!(
            self.is_square(),
            "matrix is {}x{}, not square",
            self.rows,
            self.cols
        );
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        (i < self.rows && j < self.cols).then(|| &self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        assert!(
            rows.end <= self.rows && cols.end <= self.cols,
            "block out of range"
        );
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows.start + i, cols.start + j)].clone()
        })
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Assembles `[[a, b], [c, d]]`.
    ///
    /// # Panics
    /// If the blocks are not conformable.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert!(
            a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols,
            "blocks are not conformable"
        );
        let top = a.rows;
        let left = a.cols;
        Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < top, j < left) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - left)].clone(),
                (false, true) => c[(i - top, j)].clone(),
                (false, false) => d[(i - top, j - left)].clone(),
            }
        })
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// All-ones matrix `J`, possibly rectangular.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::one())
    }

    /// Adjacency matrix of the complete graph `K_n`.
    pub fn complete_graph(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::zero() } else { T::one() })
    }

    /// Constant-diagonal, constant-off-diagonal matrix `diag·I + off·(J − I)`.
    pub fn two_valued(n: usize, diag: &T, off: &T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { diag.clone() } else { off.clone() })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn trace(&self) -> T {
        (0..self.dim()).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// # Panics
    /// On incompatible shapes.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes for product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * rhs[(k, j)].clone();
                    let slot = &mut out[(i, j)];
                    *slot = std::mem::replace(slot, T::zero()) + prod;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn to_poly(&self) -> PolyMatrix {
        self.map(|x| UniPoly::constant(x.clone()))
    }

    /// `self − λI` as a polynomial matrix.
    pub fn minus_lambda_identity(&self) -> PolyMatrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                UniPoly::linear(self[(i, j)].clone(), -1)
            } else {
                UniPoly::constant(self[(i, j)].clone())
            }
        })
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|x| x.to_f64().unwrap_or(f64::NAN))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn constructors() {
        let k3 = IntMatrix::complete_graph(3);
        assert_eq!(
            k3,
            IntMatrix::from_i64_rows(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
        );
        let j = IntMatrix::ones(2, 3);
        assert_eq!((j.rows(), j.cols()), (2, 3));
        assert!(j.iter().all(One::is_one));
        let i = IntMatrix::identity(3);
        assert_eq!(i.trace(), BigInt::from(3));
        assert_eq!(k3.add(&i), IntMatrix::ones(3, 3));
    }

    #[test]
    fn index_bounds() {
        let m = IntMatrix::identity(2);
        assert!(m.get(2, 0).is_none());
        assert!(m.get(1, 1).is_some());
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn index_out_of_range_panics() {
        let m = IntMatrix::identity(2);
        let _ = &m[(0, 2)];
    }

    #[test]
    fn blocks_round_trip() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let a = m.block(0..1, 0..1);
        let b = m.block(0..1, 1..3);
        let c = m.block(1..3, 0..1);
        let d = m.block(1..3, 1..3);
        assert_eq!(Matrix::from_blocks(&a, &b, &c, &d), m);
        assert_eq!(m.minor(1, 1), IntMatrix::from_i64_rows(&[&[1, 3], &[7, 9]]));
        assert_eq!(m.transpose()[(0, 2)], BigInt::from(7));
    }

    #[test]
    fn product() {
        let j = IntMatrix::ones(2, 3);
        let jt = j.transpose();
        assert_eq!(j.matmul(&jt), IntMatrix::ones(2, 2).scale(&BigInt::from(3)));
    }
}
