//! Exact dense matrices over a field context.
//!
//! Elimination uses first-nonzero pivoting scanning rows top to bottom, so
//! every run over the same input is bit-identical. Row and column indices
//! here are 0-based; callers translating matroid elements subtract one.

use super::{FieldCtx, FieldElement};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FieldMatrix {
    pub fn zeros(ctx: FieldCtx, rows: usize, cols: usize) -> Self {
        let data = vec![ctx.zero(); rows * cols];
        FieldMatrix {
            ctx,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(ctx: FieldCtx, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged row lengths".into()));
        }
        Ok(FieldMatrix {
            ctx,
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(ctx: FieldCtx, n: usize) -> Self {
        let mut m = FieldMatrix::zeros(ctx, n, n);
        for i in 0..n {
            let one = m.ctx.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// New matrix keeping the listed columns (0-based), in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        if let Some(&j) = cols.iter().find(|&&j| j >= self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "column {j} out of range for {} columns",
                self.cols
            )));
        }
        let mut out = FieldMatrix::zeros(self.ctx.clone(), self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) =
                (pivot_row..self.rows).find(|&i| !self.ctx.is_zero(&work[i * self.cols + col]))
            else {
                continue;
            };
            if found != pivot_row {
                for j in 0..self.cols {
                    work.swap(found * self.cols + j, pivot_row * self.cols + j);
                }
            }
            self.eliminate_below(&mut work, pivot_row, col);
            pivot_row += 1;
        }
        pivot_row
    }

    /// Determinant of a square matrix, tracking row swaps.
    pub fn determinant(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.data.clone();
        let mut det = self.ctx.one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&i| !self.ctx.is_zero(&work[i * self.cols + col]))
            else {
                return Ok(self.ctx.zero());
            };
            if found != col {
                for j in 0..n {
                    work.swap(found * self.cols + j, col * self.cols + j);
                }
                det = self.ctx.neg(&det);
            }
            det = self.ctx.mul(&det, &work[col * self.cols + col]);
            self.eliminate_below(&mut work, col, col);
        }
        Ok(det)
    }

    fn eliminate_below(&self, work: &mut [FieldElement], pivot_row: usize, col: usize) {
        let pivot = work[pivot_row * self.cols + col].clone();
        let pivot_inv = self.ctx.inv(&pivot).expect("pivot is nonzero");
        for i in pivot_row + 1..self.rows {
            let lead = work[i * self.cols + col].clone();
            if self.ctx.is_zero(&lead) {
                continue;
            }
            let factor = self.ctx.mul(&lead, &pivot_inv);
            for j in col..self.cols {
                let t = self.ctx.mul(&factor, &work[pivot_row * self.cols + j]);
                let cur = &work[i * self.cols + j];
                work[i * self.cols + j] = self.ctx.sub(cur, &t);
            }
        }
    }

    /// Any solution of `self * x = rhs`, or `None` if the system is
    /// inconsistent. Free variables are fixed to zero, so the answer is a
    /// deterministic function of the input.
    pub fn solve(&self, rhs: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let cols = self.cols + 1;
        let mut work: Vec<FieldElement> = Vec::with_capacity(self.rows * cols);
        for (i, r) in rhs.iter().enumerate() {
            for j in 0..self.cols {
                work.push(self.get(i, j).clone());
            }
            work.push(r.clone());
        }
        // Forward elimination on the augmented system.
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) =
                (pivot_row..self.rows).find(|&i| !self.ctx.is_zero(&work[i * cols + col]))
            else {
                continue;
            };
            if found != pivot_row {
                for j in 0..cols {
                    work.swap(found * cols + j, pivot_row * cols + j);
                }
            }
            let pivot = work[pivot_row * cols + col].clone();
            let pivot_inv = self.ctx.inv(&pivot).expect("pivot is nonzero");
            for i in pivot_row + 1..self.rows {
                let lead = work[i * cols + col].clone();
                if self.ctx.is_zero(&lead) {
                    continue;
                }
                let factor = self.ctx.mul(&lead, &pivot_inv);
                for j in col..cols {
                    let t = self.ctx.mul(&factor, &work[pivot_row * cols + j]);
                    let cur = &work[i * cols + j];
                    work[i * cols + j] = self.ctx.sub(cur, &t);
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        // Inconsistent if a zero row has nonzero rhs.
        for i in pivot_row..self.rows {
            if !self.ctx.is_zero(&work[i * cols + self.cols]) {
                return Ok(None);
            }
        }
        // Back-substitution with free variables pinned to zero.
        let mut x = vec![self.ctx.zero(); self.cols];
        for &(pr, pc) in pivots.iter().rev() {
            let mut acc = work[pr * cols + self.cols].clone();
            for j in pc + 1..self.cols {
                let t = self.ctx.mul(&work[pr * cols + j], &x[j]);
                acc = self.ctx.sub(&acc, &t);
            }
            let pivot_inv = self.ctx.inv(&work[pr * cols + pc]).expect("pivot nonzero");
            x[pc] = self.ctx.mul(&acc, &pivot_inv);
        }
        Ok(Some(x))
    }

    /// Row vector times matrix: `u * self` for `u` of length `rows`.
    pub fn left_mul_vector(&self, u: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if u.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} for {} rows",
                u.len(),
                self.rows
            )));
        }
        let mut out = vec![self.ctx.zero(); self.cols];
        for (i, ui) in u.iter().enumerate() {
            if self.ctx.is_zero(ui) {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let t = self.ctx.mul(ui, self.get(i, j));
                *slot = self.ctx.add(slot, &t);
            }
        }
        Ok(out)
    }
}
