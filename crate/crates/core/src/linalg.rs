//! Small dense matrix arithmetic used throughout the crate.
//!
//! `Mat4` is the workhorse for everything living on space-time; `DMat` is a
//! runtime-sized matrix used for block embeddings of group elements (whose
//! size depends on the number of charge dimensions) and for the linear solves
//! behind the duality oracle.

use crate::error::{Error, Result};

/// A 4x4 matrix of `f64`, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4(pub [[f64; 4]; 4]);

impl Mat4 {
    pub const ZERO: Mat4 = Mat4([[0.0; 4]; 4]);

    pub const IDENTITY: Mat4 = Mat4([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    pub fn from_fn(f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = f(i, j);
            }
        }
        Mat4(m)
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i] } else { 0.0 })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn mul(&self, rhs: &Mat4) -> Self {
        Self::from_fn(|i, j| (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }

    pub fn mul_vec(&self, v: [f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    pub fn add(&self, rhs: &Mat4) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }

    pub fn sub(&self, rhs: &Mat4) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| s * self.0[i][j])
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    /// Max-absolute-entry norm.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }

    /// `max |self - rhs|` over entries.
    pub fn max_abs_diff(&self, rhs: &Mat4) -> f64 {
        self.sub(rhs).max_abs()
    }

    /// Deviation from antisymmetry, `max |M + tM|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        self.add(&self.transpose()).max_abs()
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        // Cofactor expansion with precomputed 2x2 minors of the lower rows.
        let s0 = m[2][0] * m[3][1] - m[2][1] * m[3][0];
        let s1 = m[2][0] * m[3][2] - m[2][2] * m[3][0];
        let s2 = m[2][0] * m[3][3] - m[2][3] * m[3][0];
        let s3 = m[2][1] * m[3][2] - m[2][2] * m[3][1];
        let s4 = m[2][1] * m[3][3] - m[2][3] * m[3][1];
        let s5 = m[2][2] * m[3][3] - m[2][3] * m[3][2];
        m[0][0] * (m[1][1] * s5 - m[1][2] * s4 + m[1][3] * s3)
            - m[0][1] * (m[1][0] * s5 - m[1][2] * s2 + m[1][3] * s1)
            + m[0][2] * (m[1][0] * s4 - m[1][1] * s2 + m[1][3] * s0)
            - m[0][3] * (m[1][0] * s3 - m[1][1] * s1 + m[1][2] * s0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }

    /// Row-major flattening, the wire format for 4x4 matrices.
    pub fn to_row_major(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        for i in 0..4 {
            for j in 0..4 {
                out[4 * i + j] = self.0[i][j];
            }
        }
        out
    }

    pub fn from_row_major(v: &[f64; 16]) -> Self {
        Self::from_fn(|i, j| v[4 * i + j])
    }
}

/// Outer product `a tb` of two 4-vectors.
pub fn outer(a: [f64; 4], b: [f64; 4]) -> Mat4 {
    Mat4::from_fn(|i, j| a[i] * b[j])
}

/// A heap-allocated dense matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DMat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, rhs: &DMat) -> DMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in DMat::mul");
        DMat::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self[(i, k)] * rhs[(k, j)]).sum()
        })
    }

    pub fn transpose(&self) -> DMat {
        DMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn max_abs_diff(&self, rhs: &DMat) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(rhs.data.iter())
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// Max row sum, the matrix infinity norm.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].abs()).sum::<f64>())
            .fold(0.0_f64, f64::max)
    }

    /// LU factorization with partial pivoting. Pivots below `pivot_tol`
    /// report the system as singular.
    pub fn lu(&self, pivot_tol: f64) -> Result<LuFactors> {
        assert_eq!(self.rows, self.cols, "LU requires a square matrix");
        let n = self.rows;
        let mut lu = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let (pivot_row, pivot_abs) = (col..n)
                .map(|r| (r, lu[(r, col)].abs()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .expect("non-empty pivot range");
            if pivot_abs < pivot_tol {
                return Err(Error::SingularSystem { pivot: pivot_abs });
            }
            if pivot_row != col {
                perm.swap(col, pivot_row);
                for j in 0..n {
                    let tmp = lu[(col, j)];
                    lu[(col, j)] = lu[(pivot_row, j)];
                    lu[(pivot_row, j)] = tmp;
                }
            }
            for r in (col + 1)..n {
                let factor = lu[(r, col)] / lu[(col, col)];
                lu[(r, col)] = factor;
                for j in (col + 1)..n {
                    lu[(r, j)] -= factor * lu[(col, j)];
                }
            }
        }
        Ok(LuFactors { lu, perm })
    }

    /// Solve `self * x = rhs` in one shot.
    pub fn solve(&self, rhs: &[f64], pivot_tol: f64) -> Result<Vec<f64>> {
        Ok(self.lu(pivot_tol)?.solve(rhs))
    }

    /// General inverse via LU; used as an independent numeric oracle in tests.
    pub fn inverse(&self, pivot_tol: f64) -> Result<DMat> {
        let n = self.rows;
        let factors = self.lu(pivot_tol)?;
        let mut out = DMat::zeros(n, n);
        let mut unit = vec![0.0; n];
        for col in 0..n {
            unit[col] = 1.0;
            let x = factors.solve(&unit);
            unit[col] = 0.0;
            for row in 0..n {
                out[(row, col)] = x[row];
            }
        }
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for DMat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Packed LU factorization, reusable across right-hand sides.
#[derive(Clone, Debug)]
pub struct LuFactors {
    lu: DMat,
    perm: Vec<usize>,
}

impl LuFactors {
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = self.lu.rows;
        assert_eq!(rhs.len(), n, "rhs length mismatch");
        let mut x: Vec<f64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 1..n {
            for k in 0..i {
                x[i] -= self.lu[(i, k)] * x[k];
            }
        }
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                x[i] -= self.lu[(i, k)] * x[k];
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }
}

/// 3-vector helpers for spin/passage bookkeeping.
pub fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

pub fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_known_matrices() {
        assert_eq!(Mat4::IDENTITY.det(), 1.0);
        assert_eq!(Mat4::diagonal([-1.0, -1.0, -1.0, 1.0]).det(), -1.0);
        assert_eq!(Mat4::diagonal([2.0, 3.0, 4.0, 5.0]).det(), 120.0);
    }

    #[test]
    fn lu_solves_a_known_system() {
        let a = DMat::from_fn(3, 3, |i, j| [[2.0, 1.0, 1.0], [1.0, 3.0, 2.0], [1.0, 0.0, 0.0]][i][j]);
        let x = a.solve(&[4.0, 5.0, 6.0], 1e-12).unwrap();
        assert!((x[0] - 6.0).abs() < 1e-12);
        assert!((x[1] - 15.0).abs() < 1e-12);
        assert!((x[2] + 23.0).abs() < 1e-12);
    }

    #[test]
    fn lu_reports_singular_systems() {
        let a = DMat::from_fn(2, 2, |i, _| if i == 0 { 1.0 } else { 2.0 });
        assert!(matches!(
            a.solve(&[1.0, 2.0], 1e-12),
            Err(Error::SingularSystem { .. })
        ));
    }

    #[test]
    fn inverse_round_trips() {
        let a = DMat::from_fn(4, 4, |i, j| ((i * 7 + j * 3 + 1) % 5) as f64 + if i == j { 4.0 } else { 0.0 });
        let inv = a.inverse(1e-12).unwrap();
        let prod = a.mul(&inv);
        assert!(prod.max_abs_diff(&DMat::identity(4)) < 1e-12);
    }
}
