//! Dense symmetric matrix of arbitrary-precision reals.
//!
//! Matrices here are small (dimension a few hundred at most) and dense, so
//! no sparse machinery: a flat row-major vector is all that is needed.

use crate::error::{Result, VismError};
use crate::numeric::{HPReal, PrecisionContext};

#[derive(Clone, Debug)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<HPReal>,
}

impl DenseMatrix {
    pub fn zeros(n: usize, ctx: &PrecisionContext) -> Self {
        DenseMatrix {
            n,
            data: vec![ctx.zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> HPReal) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        DenseMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &HPReal {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: HPReal) {
        self.data[i * self.n + j] = v;
    }

    /// Largest |entry|.
    pub fn max_abs(&self) -> HPReal {
        let mut best = self.data[0].abs();
        for v in &self.data[1..] {
            best = best.max(&v.abs());
        }
        best
    }

    pub fn trace(&self) -> HPReal {
        let mut acc = self.data[0].clone();
        for i in 1..self.n {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Largest |a_ij − a_ji| together with its position.
    pub fn symmetry_deviation(&self) -> (usize, usize, HPReal) {
        let mut where_ = (0, 0);
        let mut best = self.data[0].clone() - self.data[0].clone();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let dev = (self.get(i, j) - self.get(j, i)).abs();
                if dev > best {
                    best = dev;
                    where_ = (i, j);
                }
            }
        }
        (where_.0, where_.1, best)
    }

    /// Error unless max |a_ij − a_ji| ≤ tol·max|a|.
    pub fn require_symmetric(&self, tol: &HPReal) -> Result<()> {
        let (i, j, dev) = self.symmetry_deviation();
        let scale = self.max_abs().max(&HPReal::raw(rug::Float::with_val(dev.prec(), 1)));
        if dev > tol * &scale {
            return Err(VismError::NotSymmetric {
                row: i,
                col: j,
                deviation: dev.to_decimal_string(3),
            });
        }
        Ok(())
    }
}
