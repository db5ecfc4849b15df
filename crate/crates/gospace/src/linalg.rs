//! Dense exact linear algebra over the rationals and Gaussian rationals:
//! reduced row echelon form, rank, kernel bases, linear solving, and
//! symmetric congruence reduction for metric signatures.

use num_traits::Signed as _;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() {
                        acc += &(self.at(r, c) * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                acc += &(self.at(r, k) * rhs.at(k, c));
            }
            acc
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form. Pivots are the first nonzero entry found
    /// scanning each column top-down, so the result is deterministic.
    /// Returns the echelon matrix and the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.at(pivot_row, col).inv();
            for c in col..m.cols {
                let v = m.at(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - &(&factor * m.at(pivot_row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, echelon-normalized: one vector per free
    /// column, with entry 1 at that column and zeros at the other free
    /// columns. Empty iff rank = cols.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (ech, pivots) = self.rref();
        let is_pivot = {
            let mut mask = vec![false; self.cols];
            for &p in &pivots {
                mask[p] = true;
            }
            mask
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -ech.at(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Exact solution of A·x = b, or None iff rank([A|b]) > rank(A).
    /// Underdetermined systems get free variables set to 0.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c == self.cols { b[r].clone() } else { self.at(r, c).clone() }
        });
        let (ech, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = ech.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Sylvester signature (positives, negatives) of a symmetric matrix with
    /// real entries, by simultaneous row and column elimination. When the
    /// working diagonal is all zero, a nonzero off-diagonal pair (l, m) is
    /// made diagonal by adding row and column m to row and column l.
    pub fn signature(&self) -> (usize, usize) {
        assert!(self.is_symmetric(), "signature of a non-symmetric matrix");
        assert!(
            self.data.iter().all(Scalar::is_real),
            "signature needs real entries"
        );
        let n = self.rows;
        let mut m = self.clone();
        let mut pos = 0;
        let mut neg = 0;
        for k in 0..n {
            if m.at(k, k).is_zero() {
                if let Some(d) = (k + 1..n).find(|&d| !m.at(d, d).is_zero()) {
                    m.swap_rows(k, d);
                    for r in 0..n {
                        m.data.swap(r * n + k, r * n + d);
                    }
                } else if let Some((l, t)) = (k..n)
                    .flat_map(|l| (l + 1..n).map(move |t| (l, t)))
                    .find(|&(l, t)| !m.at(l, t).is_zero())
                {
                    for c in 0..n {
                        let v = m.at(l, c) + m.at(t, c);
                        m.set(l, c, v);
                    }
                    for r in 0..n {
                        let v = m.at(r, l) + m.at(r, t);
                        m.set(r, l, v);
                    }
                    m.swap_rows(k, l);
                    for r in 0..n {
                        m.data.swap(r * n + k, r * n + l);
                    }
                } else {
                    break;
                }
            }
            let pivot = m.at(k, k).clone();
            if pivot.re.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for r in k + 1..n {
                if m.at(r, k).is_zero() {
                    continue;
                }
                let factor = m.at(r, k) / &pivot;
                for c in 0..n {
                    let v = m.at(r, c) - &(&factor * m.at(k, c));
                    m.set(r, c, v);
                }
                for c in 0..n {
                    let v = m.at(c, r) - &(&factor * m.at(c, k));
                    m.set(c, r, v);
                }
            }
        }
        (pos, neg)
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], f: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * f).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}
