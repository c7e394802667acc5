//! Dense complex matrices and small helpers.

use nalgebra::DMatrix;
pub use num_complex::Complex64 as C64;

pub type Mat = DMatrix<C64>;

pub const I_UNIT: C64 = C64 { re: 0.0, im: 1.0 };

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn eye(n: usize) -> Mat {
    Mat::identity(n, n)
}

pub fn zeros(n: usize) -> Mat {
    Mat::zeros(n, n)
}

/// Matrix from row-major complex entries.
pub fn from_rows(n: usize, entries: &[C64]) -> Mat {
    assert_eq!(entries.len(), n * n);
    Mat::from_row_slice(n, n, entries)
}

pub fn from_real_rows(n: usize, entries: &[f64]) -> Mat {
    let v: Vec<C64> = entries.iter().map(|&x| c(x, 0.0)).collect();
    from_rows(n, &v)
}

pub fn scale(m: &Mat, s: f64) -> Mat {
    m * c(s, 0.0)
}

/// Frobenius norm.
pub fn norm(m: &Mat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn dist(a: &Mat, b: &Mat) -> f64 {
    norm(&(a - b))
}

pub fn is_finite(m: &Mat) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    a.kronecker(b)
}

pub fn commutator(a: &Mat, b: &Mat) -> Mat {
    a * b - b * a
}

pub fn anticommutator(a: &Mat, b: &Mat) -> Mat {
    a * b + b * a
}

/// Real part of the normalized trace.
pub fn mean_diag(m: &Mat) -> f64 {
    m.trace().re / m.nrows() as f64
}
