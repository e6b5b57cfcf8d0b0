//! Scalar and small-matrix helpers shared by every module.

use nalgebra::{DMatrix, Matrix2, RowVector2, Vector2};
use num_complex::Complex64;
use std::f64::consts::PI;

pub type C64 = Complex64;
pub type Mat2 = Matrix2<C64>;
/// Column vector (region shadow colors).
pub type Col2 = Vector2<C64>;
/// Row vector (eigenline representatives).
pub type Row2 = RowVector2<C64>;

pub const I: C64 = C64 { re: 0.0, im: 1.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };
pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// 2πi
pub fn two_pi_i() -> C64 {
    c(0.0, 2.0 * PI)
}

/// e^{2πi x}
pub fn e2pi(x: C64) -> C64 {
    (two_pi_i() * x).exp()
}

/// ω^x = e^{2πi x / N}
pub fn omega(x: C64, n: usize) -> C64 {
    (two_pi_i() * x / n as f64).exp()
}

pub fn omega_r(x: f64, n: usize) -> C64 {
    omega(c(x, 0.0), n)
}

/// lg(x) = log(x)/(2πi), principal branch.
pub fn lg(x: C64) -> C64 {
    x.ln() / two_pi_i()
}

/// Relative distance, symmetric in the arguments.
pub fn rel(x: C64, y: C64) -> f64 {
    let s = x.norm().max(y.norm());
    if s == 0.0 {
        0.0
    } else {
        (x - y).norm() / s
    }
}

pub fn mat2(a: C64, b: C64, cc: C64, d: C64) -> Mat2 {
    Matrix2::new(a, b, cc, d)
}

pub fn det2(g: &Mat2) -> C64 {
    g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)]
}

pub fn inv2(g: &Mat2) -> Mat2 {
    let d = det2(g);
    mat2(g[(1, 1)] / d, -g[(0, 1)] / d, -g[(1, 0)] / d, g[(0, 0)] / d)
}

/// Rescale to determinant one.
pub fn to_sl2(g: &Mat2) -> Mat2 {
    g / det2(g).sqrt()
}

pub fn max_abs2(g: &Mat2) -> f64 {
    g.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    a.kronecker(b)
}

pub fn max_abs(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn inverse(m: &DMatrix<C64>) -> Option<DMatrix<C64>> {
    m.clone().lu().try_inverse()
}

pub fn determinant(m: &DMatrix<C64>) -> C64 {
    m.clone().lu().determinant()
}

/// Non-negative residue of `k` modulo `n`.
pub fn md(k: i64, n: usize) -> usize {
    k.rem_euclid(n as i64) as usize
}
