//! Dense 2×2 and 4×4 complex matrices.
//!
//! Everything in this crate lives in the fixed two-qubit product basis
//! |1⟩ = |++⟩, |2⟩ = |+−⟩, |3⟩ = |−+⟩, |4⟩ = |−−⟩, where |±⟩ are the
//! σ_z eigenstates of each qubit. There is no runtime basis option; file
//! I/O and all public matrices use this ordering.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

/// A 2×2 complex matrix in row-major order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    e: [[C64; 2]; 2],
}

/// A 4×4 complex matrix in row-major order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4 {
    e: [[C64; 4]; 4],
}

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

impl Mat2 {
    pub fn new(rows: [[C64; 2]; 2]) -> Self {
        Self { e: rows }
    }

    pub fn zeros() -> Self {
        Self { e: [[ZERO; 2]; 2] }
    }

    pub fn identity() -> Self {
        Self::from_diag([ONE, ONE])
    }

    pub fn from_diag(d: [C64; 2]) -> Self {
        Self {
            e: [[d[0], ZERO], [ZERO, d[1]]],
        }
    }

    /// Diagonal matrix with real entries, `diag(d0, d1)`.
    pub fn from_real_diag(d0: f64, d1: f64) -> Self {
        Self::from_diag([C64::new(d0, 0.0), C64::new(d1, 0.0)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = self.e[j][i].conj();
            }
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.e
            .iter()
            .flatten()
            .all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

impl Mat4 {
    pub fn new(rows: [[C64; 4]; 4]) -> Self {
        Self { e: rows }
    }

    pub fn zeros() -> Self {
        Self { e: [[ZERO; 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::from_diag([ONE, ONE, ONE, ONE])
    }

    pub fn from_diag(d: [C64; 4]) -> Self {
        let mut out = Self::zeros();
        for (i, v) in d.into_iter().enumerate() {
            out.e[i][i] = v;
        }
        out
    }

    /// Diagonal matrix with real entries.
    pub fn from_real_diag(d: [f64; 4]) -> Self {
        Self::from_diag(d.map(|v| C64::new(v, 0.0)))
    }

    pub fn entries(&self) -> &[[C64; 4]; 4] {
        &self.e
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = self.e[j][i].conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut out = *self;
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v = v.conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        self.e[0][0] + self.e[1][1] + self.e[2][2] + self.e[3][3]
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        out
    }

    /// `(M + M†)/2`, scrubbing sub-ulp asymmetry from accumulated products.
    pub fn hermitize(&self) -> Self {
        let mut out = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = (self.e[i][j] + self.e[j][i].conj()) * 0.5;
            }
        }
        out
    }

    /// Largest elementwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.e[i][j] - other.e[i][j]).norm());
            }
        }
        m
    }

    /// Largest elementwise modulus.
    pub fn max_abs(&self) -> f64 {
        self.max_abs_diff(&Self::zeros())
    }

    /// Largest elementwise deviation from the adjoint, `max |M − M†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_finite(&self) -> bool {
        self.e
            .iter()
            .flatten()
            .all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.e[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.e[i][j]
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.e[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.e[i][j]
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] += rhs.e[i][j];
            }
        }
        out
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] -= rhs.e[i][j];
            }
        }
        out
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        self.scale(-1.0)
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = Mat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = ZERO;
                for k in 0..4 {
                    acc += self.e[i][k] * rhs.e[k][j];
                }
                out.e[i][j] = acc;
            }
        }
        out
    }
}

impl Mul<C64> for Mat4 {
    type Output = Mat4;
    fn mul(self, s: C64) -> Mat4 {
        let mut out = self;
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        out
    }
}

impl Mul<C64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: C64) -> Mat2 {
        let mut out = self;
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        out
    }
}

/// Kronecker product `p ⊗ q`, with the first factor acting on qubit A.
///
/// Block (i, j) of the result is `p[i][j] · q`, which realizes operators such
/// as `σ_y ⊗ σ_y` and the identity padding of single-qubit Kraus factors in
/// the fixed basis ordering.
pub fn tensor_product(p: &Mat2, q: &Mat2) -> Mat4 {
    let mut out = Mat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.e[2 * i + k][2 * j + l] = p.e[i][j] * q.e[k][l];
                }
            }
        }
    }
    out
}

/// Pauli σ_y in the σ_z eigenbasis.
pub fn sigma_y() -> Mat2 {
    Mat2::new([[ZERO, C64::new(0.0, -1.0)], [C64::new(0.0, 1.0), ZERO]])
}

/// Pauli σ_z in its own eigenbasis, `diag(1, −1)`.
pub fn sigma_z() -> Mat2 {
    Mat2::from_real_diag(1.0, -1.0)
}
