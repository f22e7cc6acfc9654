//! Dense matrices over GF(q) with symbols stored as bytes.

use crate::error::{Error, Result};
use crate::field::FqTables;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Matrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from row vectors; all rows must share `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u8] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn push_row(&mut self, row: &[u8]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: row.len(),
            });
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out.set(i, k, self.get(i, j));
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * c);
        head[lo * c..(lo + 1) * c].swap_with_slice(&mut tail[..c]);
    }

    fn scale_row(&mut self, i: usize, s: u8, fq: &FqTables) {
        for v in self.row_mut(i) {
            *v = fq.mul(*v, s);
        }
    }

    /// row[dst] += s · row[src]
    fn axpy_row(&mut self, dst: usize, src: usize, s: u8, fq: &FqTables) {
        let c = self.cols;
        let (d, sr) = if dst < src {
            let (head, tail) = self.data.split_at_mut(src * c);
            (&mut head[dst * c..(dst + 1) * c], &tail[..c])
        } else {
            let (head, tail) = self.data.split_at_mut(dst * c);
            (&mut tail[..c], &head[src * c..(src + 1) * c])
        };
        if fq.q() == 2 {
            for (x, y) in d.iter_mut().zip(sr) {
                *x ^= *y;
            }
        } else {
            for (x, &y) in d.iter_mut().zip(sr) {
                if y != 0 {
                    *x = fq.add(*x, fq.mul(s, y));
                }
            }
        }
    }

    /// Reduced row-echelon form in place, scanning columns in `order`.
    /// Zero rows are dropped; returns the pivot column of each remaining row.
    pub fn rref_with_order(&mut self, fq: &FqTables, order: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for &col in order {
            if next == self.rows {
                break;
            }
            let Some(pr) = (next..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            self.swap_rows(next, pr);
            let lead = self.get(next, col);
            if lead != 1 {
                self.scale_row(next, fq.inv(lead), fq);
            }
            for i in 0..self.rows {
                if i != next {
                    let v = self.get(i, col);
                    if v != 0 {
                        self.axpy_row(i, next, fq.neg(v), fq);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        self.rows = next;
        self.data.truncate(next * self.cols);
        pivots
    }

    /// Reduced row-echelon form with the natural column order.
    pub fn rref(&mut self, fq: &FqTables) -> Vec<usize> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(fq, &order)
    }

    pub fn rank(&self, fq: &FqTables) -> usize {
        self.clone().rref(fq).len()
    }

    /// Basis of {x : M·x = 0}, in reduced row-echelon form.
    pub fn kernel(&self, fq: &FqTables) -> Matrix {
        let mut red = self.clone();
        let pivots = red.rref(fq);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                out.set(k, p, fq.neg(red.get(i, f)));
            }
        }
        out.rref(fq);
        out
    }

    /// M·x.
    pub fn mul_vec(&self, x: &[u8], fq: &FqTables) -> Result<Vec<u8>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(self.row_iter().map(|r| dot(r, x, fq)).collect())
    }

    /// A·Bᵀ.
    pub fn mul_transpose(&self, other: &Matrix, fq: &FqTables) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, dot(self.row(i), other.row(j), fq));
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Coefficients c with cᵀ·M = x, if x lies in the row space.
    pub fn solve_row_combination(&self, x: &[u8], fq: &FqTables) -> Option<Vec<u8>> {
        // augment Mᵀ | x and reduce
        let mut aug = Matrix::zeros(self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(j, i, self.get(i, j));
            }
        }
        for (j, &v) in x.iter().enumerate() {
            aug.set(j, self.rows, v);
        }
        let pivots = aug.rref(fq);
        if pivots.last() == Some(&self.rows) {
            return None;
        }
        let mut c = vec![0u8; self.rows];
        for (i, &p) in pivots.iter().enumerate() {
            c[p] = aug.get(i, self.rows);
        }
        Some(c)
    }
}

pub(crate) fn dot(a: &[u8], b: &[u8], fq: &FqTables) -> u8 {
    let mut acc = 0u8;
    for (&x, &y) in a.iter().zip(b) {
        if x != 0 && y != 0 {
            acc = fq.add(acc, fq.mul(x, y));
        }
    }
    acc
}
