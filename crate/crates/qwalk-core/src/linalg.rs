//! Small dense complex linear algebra: 3-vectors and 3x3 / 2x2 matrices.
//!
//! The coin space is three dimensional, so everything here is fixed-size,
//! `Copy`, and unrolled. Inverses go through the adjugate; conditioning is
//! never an issue for the resolvents handled by this crate (singular values
//! of I - zU are bounded below by 1 - |z|).

use std::ops::{Add, Mul, Neg, Sub};

pub type C64 = num_complex::Complex64;

/// Shorthand complex constructor.
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub const ZERO: C64 = c64(0.0, 0.0);
pub const ONE: C64 = c64(1.0, 0.0);

/// Complex 3-vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3(pub [C64; 3]);

impl Vec3 {
    pub const fn zero() -> Self {
        Vec3([ZERO; 3])
    }

    pub fn from_real(r: [f64; 3]) -> Self {
        Vec3([c64(r[0], 0.0), c64(r[1], 0.0), c64(r[2], 0.0)])
    }

    /// Hermitian inner product, conjugating `self`.
    pub fn inner(&self, other: &Vec3) -> C64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: C64) -> Vec3 {
        Vec3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }

    pub fn conj(&self) -> Vec3 {
        Vec3([self.0[0].conj(), self.0[1].conj(), self.0[2].conj()])
    }

    /// Outer product |self><other| (conjugating `other`).
    pub fn outer(&self, other: &Vec3) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i] * other.0[j].conj();
            }
        }
        m
    }

    pub fn max_abs_diff(&self, other: &Vec3) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
        ])
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        self.scale(c64(-1.0, 0.0))
    }
}

/// Dense complex 3x3 matrix, row major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3(pub [[C64; 3]; 3]);

impl Mat3 {
    pub const fn zero() -> Self {
        Mat3([[ZERO; 3]; 3])
    }

    pub const fn identity() -> Self {
        let mut m = [[ZERO; 3]; 3];
        m[0][0] = ONE;
        m[1][1] = ONE;
        m[2][2] = ONE;
        Mat3(m)
    }

    pub fn from_rows(r0: Vec3, r1: Vec3, r2: Vec3) -> Self {
        Mat3([r0.0, r1.0, r2.0])
    }

    pub fn from_cols(c0: Vec3, c1: Vec3, c2: Vec3) -> Self {
        Mat3::from_rows(c0, c1, c2).transpose()
    }

    pub fn from_real(r: [[f64; 3]; 3]) -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = c64(r[i][j], 0.0);
            }
        }
        m
    }

    pub fn diag(d0: C64, d1: C64, d2: C64) -> Self {
        let mut m = Mat3::zero();
        m.0[0][0] = d0;
        m.0[1][1] = d1;
        m.0[2][2] = d2;
        m
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3(self.0[i])
    }

    pub fn col(&self, j: usize) -> Vec3 {
        Vec3([self.0[0][j], self.0[1][j], self.0[2][j]])
    }

    pub fn transpose(&self) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn conj(&self) -> Mat3 {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for e in row.iter_mut() {
                *e = e.conj();
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat3 {
        self.transpose().conj()
    }

    pub fn scale(&self, s: C64) -> Mat3 {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        m
    }

    pub fn det(&self) -> C64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Adjugate inverse; `None` when the determinant vanishes relative to the
    /// entry scale (machine-singular).
    pub fn inverse(&self) -> Option<Mat3> {
        let m = &self.0;
        let det = self.det();
        let scale = self.max_abs();
        if det.norm() <= 1e-14 * scale * scale * scale {
            return None;
        }
        let inv_det = ONE / det;
        let mut adj = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                // Cofactor of entry (j, i), placed transposed.
                let r0 = (j + 1) % 3;
                let r1 = (j + 2) % 3;
                let c0 = (i + 1) % 3;
                let c1 = (i + 2) % 3;
                adj.0[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * inv_det;
            }
        }
        Some(adj)
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|e| e.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Mat3) -> f64 {
        (*self - *other).max_abs()
    }

    /// max |(M^dagger M - I)_{ij}|; zero for unitary matrices.
    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Mat3::identity())
    }

    pub fn max_off_diagonal(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    worst = worst.max(self.0[i][j].norm());
                }
            }
        }
        worst
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(self, rhs: Mat3) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][j] + rhs.0[i][j];
            }
        }
        m
    }
}

impl Sub for Mat3 {
    type Output = Mat3;
    fn sub(self, rhs: Mat3) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][j] - rhs.0[i][j];
            }
        }
        m
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = ZERO;
                for k in 0..3 {
                    acc += self.0[i][k] * rhs.0[k][j];
                }
                m.0[i][j] = acc;
            }
        }
        m
    }
}

impl Mul<Vec3> for Mat3 {
    type Output = Vec3;
    fn mul(self, rhs: Vec3) -> Vec3 {
        let mut v = Vec3::zero();
        for i in 0..3 {
            let mut acc = ZERO;
            for k in 0..3 {
                acc += self.0[i][k] * rhs.0[k];
            }
            v.0[i] = acc;
        }
        v
    }
}

/// Dense complex 2x2 matrix, used only for the two-state coin of the
/// recurrence module.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub const fn identity() -> Self {
        let mut m = [[ZERO; 2]; 2];
        m[0][0] = ONE;
        m[1][1] = ONE;
        Mat2(m)
    }

    pub fn adjoint(&self) -> Mat2 {
        let m = &self.0;
        Mat2([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn unitarity_defect(&self) -> f64 {
        let p = *self * self.adjoint();
        p.max_abs_diff(&Mat2::identity())
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut m = [[ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = ZERO;
                for k in 0..2 {
                    acc += self.0[i][k] * rhs.0[k][j];
                }
                m[i][j] = acc;
            }
        }
        Mat2(m)
    }
}
