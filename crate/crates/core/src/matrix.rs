//! Dense matrices over an exact field and Gaussian elimination.

use crate::error::{ensure, Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub reduced: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Matrix<E> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, x: E) -> Matrix<E> {
        Matrix { rows, cols, data: vec![x; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Result<Matrix<E>> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            ensure!(r.len() == cols, Error::input("ragged matrix rows"));
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: E) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<E> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Rows `r0..r0+nr`, columns `c0..c0+nc`.
    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Matrix<E> {
        Matrix::from_fn(nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix<E> {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn from_columns(rows: usize, columns: &[Vec<E>], fill: E) -> Matrix<E> {
        let mut m = Matrix::filled(rows, columns.len(), fill);
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Places `blocks` side by side; all must share a row count `rows`.
    pub fn hstack(rows: usize, blocks: &[&Matrix<E>], fill: E) -> Matrix<E> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::filled(rows, cols, fill);
        let mut c0 = 0;
        for b in blocks {
            m.paste(0, c0, b);
            c0 += b.cols;
        }
        m
    }

    /// Stacks `blocks` vertically; all must share a column count `cols`.
    pub fn vstack(cols: usize, blocks: &[&Matrix<E>], fill: E) -> Matrix<E> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::filled(rows, cols, fill);
        let mut r0 = 0;
        for b in blocks {
            m.paste(r0, 0, b);
            r0 += b.rows;
        }
        m
    }

    pub fn paste(&mut self, r0: usize, c0: usize, b: &Matrix<E>) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Matrix<E> {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Matrix<E> {
        Matrix::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let a = a.clone();
                for j in 0..rhs.cols {
                    let prod = f.mul(&a, rhs.get(k, j));
                    let cur = f.add(out.get(i, j), &prod);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.shape(), rhs.shape());
        Matrix::from_fn(self.rows, self.cols, |i, j| f.add(self.get(i, j), rhs.get(i, j)))
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.shape(), rhs.shape());
        Matrix::from_fn(self.rows, self.cols, |i, j| f.sub(self.get(i, j), rhs.get(i, j)))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Matrix<E> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f.mul(c, self.get(i, j)))
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Matrix<E> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f.neg(self.get(i, j)))
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
            .collect()
    }

    pub fn rref<F: Field<Elem = E>>(&self, f: &F) -> Echelon<E> {
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(&rows[i][c])) else {
                continue;
            };
            rows.swap(r, p);
            let inv = f.inv(&rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = f.mul(&inv, x);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !f.is_zero(&row[c]) {
                    let factor = row[c].clone();
                    f.sub_scaled_row(row, &pivot_row, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let reduced = Matrix { rows: self.rows, cols: self.cols, data: rows.into_iter().flatten().collect() };
        Echelon { reduced, pivots }
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.rref(f).pivots.len()
    }

    /// Basis of `{x : A x = 0}` as the columns of the result.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Matrix<E> {
        let ech = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, f.one());
            for (r, &pc) in ech.pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(ech.reduced.get(r, fc)));
            }
        }
        basis
    }

    /// Basis of `{y : y A = 0}` as the rows of the result.
    pub fn left_kernel<F: Field<Elem = E>>(&self, f: &F) -> Matrix<E> {
        self.transpose().kernel(f).transpose()
    }

    /// Some `X` with `A X = B`, or `None` if the system is inconsistent.
    pub fn solve<F: Field<Elem = E>>(&self, f: &F, b: &Matrix<E>) -> Option<Matrix<E>> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let aug = Matrix::hstack(self.rows, &[self, b], f.zero());
        let ech = aug.rref(f);
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (r, &pc) in ech.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, ech.reduced.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Matrix<E>> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(f, &Matrix::identity(f, self.rows))?;
        (self.rank(f) == self.rows).then_some(x)
    }

    /// `X` with `A X = I` for `A` of full row rank.
    pub fn right_inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Matrix<E>> {
        self.solve(f, &Matrix::identity(f, self.rows))
    }

    /// `X` with `X A = I` for `A` of full column rank.
    pub fn left_inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Matrix<E>> {
        Some(self.transpose().right_inverse(f)?.transpose())
    }
}
