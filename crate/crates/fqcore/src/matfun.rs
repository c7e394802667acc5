//! Matrix-function kernels: inverse, principal square root, `pol`, `|.|`
//! and the operator geometric mean.

use crate::error::{FqError, Result};
use crate::mat::{c, eye, is_finite, norm, Mat, C64};
use crate::tol::Tolerances;

/// Domains checked explicitly before a kernel runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralDomain {
    AvoidsNonpositiveReals,
    Invertible,
    SegmentInStar,
}

pub fn sigma_min(m: &Mat) -> f64 {
    m.singular_values().min()
}

pub fn check_finite(m: &Mat, context: &'static str) -> Result<()> {
    if is_finite(m) {
        Ok(())
    } else {
        Err(FqError::NonFinite(context))
    }
}

pub fn inv(m: &Mat) -> Result<Mat> {
    inv_tol(m, &Tolerances::default())
}

pub fn inv_tol(m: &Mat, tol: &Tolerances) -> Result<Mat> {
    check_finite(m, "inv")?;
    let s = sigma_min(m);
    if !(s > tol.sing(m.nrows())) {
        return Err(FqError::SingularMatrix { sigma_min: s });
    }
    m.clone()
        .lu()
        .try_inverse()
        .ok_or(FqError::SingularMatrix { sigma_min: s })
}

/// Distance from `z` to the closed half-line `(-inf, 0]`.
fn cut_distance(z: C64) -> f64 {
    if z.re <= 0.0 {
        z.im.abs()
    } else {
        z.norm()
    }
}

const EPS: f64 = f64::EPSILON;

/// Largest number of QR sweeps per matrix dimension before giving up.
const SCHUR_SWEEPS_PER_DIM: usize = 60;

/// Complex Givens rotation `[[c, s], [-conj(s), c]]` mapping `(a, b)` to `(r, 0)`.
fn givens(a: C64, b: C64) -> (f64, C64) {
    let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
    if r == 0.0 {
        return (1.0, c(0.0, 0.0));
    }
    if a.norm() == 0.0 {
        return (0.0, c(1.0, 0.0));
    }
    let cs = a.norm() / r;
    let s = (a / a.norm()) * b.conj() / r;
    (cs, s)
}

fn rot_rows(h: &mut Mat, k: usize, cs: f64, s: C64, cols: std::ops::Range<usize>) {
    for j in cols {
        let (x, y) = (h[(k, j)], h[(k + 1, j)]);
        h[(k, j)] = x * cs + s * y;
        h[(k + 1, j)] = -s.conj() * x + y * cs;
    }
}

fn rot_cols(h: &mut Mat, k: usize, cs: f64, s: C64, rows: std::ops::Range<usize>) {
    for i in rows {
        let (x, y) = (h[(i, k)], h[(i, k + 1)]);
        h[(i, k)] = x * cs + y * s.conj();
        h[(i, k + 1)] = -x * s + y * cs;
    }
}

/// Householder reduction to upper Hessenberg form, `M = Q H Q*`.
fn hessenberg(m: &Mat) -> (Mat, Mat) {
    let n = m.nrows();
    let mut h = m.clone();
    let mut q = eye(n);
    for k in 0..n.saturating_sub(2) {
        let xn = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if xn == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let ph = if x0.norm() == 0.0 { c(1.0, 0.0) } else { x0 / x0.norm() };
        let mut v: Vec<C64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] += ph * xn;
        let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in v.iter_mut() {
            *z /= vn;
        }
        // H <- (I - 2 v v*) H (I - 2 v v*), Q <- Q (I - 2 v v*).
        for j in 0..n {
            let d: C64 = v.iter().enumerate().map(|(a, z)| z.conj() * h[(k + 1 + a, j)]).sum();
            for (a, z) in v.iter().enumerate() {
                h[(k + 1 + a, j)] -= z * d * 2.0;
            }
        }
        for mat in [&mut h, &mut q] {
            for i in 0..n {
                let d: C64 = v.iter().enumerate().map(|(a, z)| mat[(i, k + 1 + a)] * z).sum();
                for (a, z) in v.iter().enumerate() {
                    mat[(i, k + 1 + a)] -= d * z.conj() * 2.0;
                }
            }
        }
        for i in k + 2..n {
            h[(i, k)] = c(0.0, 0.0);
        }
    }
    (q, h)
}

/// Complex Schur form `M = Q T Q*` with `T` upper triangular, by shifted QR
/// sweeps on the Hessenberg form.
pub fn schur(m: &Mat) -> Result<(Mat, Mat)> {
    let n = m.nrows();
    let (mut q, mut h) = hessenberg(m);
    if n < 2 {
        return Ok((q, h));
    }
    let scale = norm(m).max(f64::MIN_POSITIVE);
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut total = 0usize;
    while hi > 0 {
        // Deflation search.
        let mut l = hi;
        while l > 0 {
            let sub = h[(l, l - 1)].norm();
            let mut diag = h[(l, l)].norm() + h[(l - 1, l - 1)].norm();
            if diag == 0.0 {
                diag = scale;
            }
            if sub <= EPS * diag {
                h[(l, l - 1)] = c(0.0, 0.0);
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            iter = 0;
            continue;
        }
        total += 1;
        if total > SCHUR_SWEEPS_PER_DIM * n {
            return Err(FqError::NonConvergence { nodes: total, change: h[(hi, hi - 1)].norm() });
        }
        iter += 1;
        let mu = if iter % 10 == 0 {
            h[(hi, hi)] + h[(hi, hi - 1)].norm() * 0.75
        } else {
            let (a, b, cc, d) = (h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)]);
            let half = (a - d) * 0.5;
            let disc = (half * half + b * cc).sqrt();
            let m1 = (a + d) * 0.5 + disc;
            let m2 = (a + d) * 0.5 - disc;
            if (m1 - d).norm() < (m2 - d).norm() {
                m1
            } else {
                m2
            }
        };
        for i in l..=hi {
            h[(i, i)] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - l);
        for k in l..hi {
            let (cs, s) = givens(h[(k, k)], h[(k + 1, k)]);
            rot_rows(&mut h, k, cs, s, k..n);
            h[(k + 1, k)] = c(0.0, 0.0);
            rots.push((k, cs, s));
        }
        for &(k, cs, s) in &rots {
            rot_cols(&mut h, k, cs, s, 0..(k + 2).min(n));
            rot_cols(&mut q, k, cs, s, 0..n);
        }
        for i in l..=hi {
            h[(i, i)] += mu;
        }
    }
    for j in 0..n {
        for i in (j + 1)..n {
            h[(i, j)] = c(0.0, 0.0);
        }
    }
    Ok((q, h))
}

pub fn in_domain(m: &Mat, dom: SpectralDomain, tol: &Tolerances) -> bool {
    match dom {
        SpectralDomain::Invertible => sigma_min(m) > tol.sing(m.nrows()),
        SpectralDomain::AvoidsNonpositiveReals => {
            match schur(m) {
                Ok((_, t)) => (0..t.nrows()).all(|i| cut_distance(t[(i, i)]) > tol.branch_cut),
                Err(_) => false,
            }
        }
        SpectralDomain::SegmentInStar => false,
    }
}

/// Principal square root by the Schur method.
pub fn sqrt_principal(m: &Mat) -> Result<Mat> {
    sqrt_tol(m, &Tolerances::default(), "sqrt")
}

pub fn sqrt_tol(m: &Mat, tol: &Tolerances, context: &'static str) -> Result<Mat> {
    check_finite(m, context)?;
    let n = m.nrows();
    let (q, t) = schur(m)?;
    let mut u = Mat::zeros(n, n);
    for i in 0..n {
        let z = t[(i, i)];
        if cut_distance(z) <= tol.branch_cut {
            return Err(FqError::DomainViolation { context, re: z.re, im: z.im, tol: tol.branch_cut });
        }
        u[(i, i)] = z.sqrt();
    }
    for d in 1..n {
        for i in 0..(n - d) {
            let j = i + d;
            let mut s = t[(i, j)];
            for k in (i + 1)..j {
                s -= u[(i, k)] * u[(k, j)];
            }
            u[(i, j)] = s / (u[(i, i)] + u[(j, j)]);
        }
    }
    Ok(&q * u * q.adjoint())
}

/// `X (-X^2)^{-1/2}`.
pub fn pol(x: &Mat) -> Result<Mat> {
    let r = sqrt_tol(&-(x * x), &Tolerances::default(), "pol")?;
    Ok(x * inv(&r)?)
}

/// `(-A^2)^{1/2}`.
pub fn abs_op(a: &Mat) -> Result<Mat> {
    sqrt_tol(&-(a * a), &Tolerances::default(), "abs")
}

/// `A (A^{-1} B)^{1/2}`.
pub fn geo_mean(a: &Mat, b: &Mat) -> Result<Mat> {
    let ai = inv(a)?;
    Ok(a * sqrt_tol(&(ai * b), &Tolerances::default(), "geo_mean")?)
}

/// The four closed-form expressions of the geometric mean, in the order
/// `A(A^-1 B)^1/2`, `B(B^-1 A)^1/2`, `(A B^-1)^1/2 B`, `(B A^-1)^1/2 A`.
pub fn geo_mean_forms(a: &Mat, b: &Mat) -> Result<[Mat; 4]> {
    let tol = Tolerances::default();
    let ai = inv(a)?;
    let bi = inv(b)?;
    Ok([
        a * sqrt_tol(&(&ai * b), &tol, "geo_mean")?,
        b * sqrt_tol(&(&bi * a), &tol, "geo_mean")?,
        sqrt_tol(&(a * &bi), &tol, "geo_mean")? * b,
        sqrt_tol(&(b * &ai), &tol, "geo_mean")? * a,
    ])
}

/// Samples of the segment `(1-t)A + tB` that must stay invertible.
pub const SEGMENT_SAMPLES: usize = 33;

pub fn segment_invertible(a: &Mat, b: &Mat, tol: &Tolerances) -> std::result::Result<(), f64> {
    let n = a.nrows();
    for k in 0..SEGMENT_SAMPLES {
        let t = k as f64 / (SEGMENT_SAMPLES - 1) as f64;
        let m = a * c(1.0 - t, 0.0) + b * c(t, 0.0);
        let s = sigma_min(&m);
        if s <= tol.sing(n) {
            return Err(s);
        }
    }
    Ok(())
}

fn trapezoid(ai: &Mat, bi: &Mat, nodes: usize) -> Result<Mat> {
    let n = ai.nrows();
    let mut acc = Mat::zeros(n, n);
    for k in 0..nodes {
        let t = 2.0 * std::f64::consts::PI * k as f64 / nodes as f64;
        let (s, co) = t.sin_cos();
        let m = ai * c(co * co, 0.0) + bi * c(s * s, 0.0);
        acc += inv(&m)?;
    }
    Ok(acc / c(nodes as f64, 0.0))
}

/// Geometric mean as the average of `(A^-1 cos^2 t + B^-1 sin^2 t)^-1` over a
/// period, by the equispaced trapezoid rule.
pub fn geo_mean_quad(a: &Mat, b: &Mat, nodes: usize) -> Result<Mat> {
    geo_mean_quad_tol(a, b, nodes, &Tolerances::default())
}

pub fn geo_mean_quad_tol(a: &Mat, b: &Mat, nodes: usize, tol: &Tolerances) -> Result<Mat> {
    if nodes == 0 {
        return Err(FqError::ConfigInvalid("quadrature needs at least one node".into()));
    }
    let ai = inv_tol(a, tol)?;
    let bi = inv_tol(b, tol)?;
    segment_invertible(a, b, tol).map_err(|s| FqError::SingularMatrix { sigma_min: s })?;
    let g = trapezoid(&ai, &bi, nodes)?;
    let g2 = trapezoid(&ai, &bi, 2 * nodes)?;
    let change = norm(&(&g2 - &g));
    if change > tol.quad * norm(&g2).max(1.0) {
        return Err(FqError::NonConvergence { nodes, change });
    }
    Ok(g2)
}

/// Iterated principal square root: `M^{1/2^k}`.
pub fn root_2k(m: &Mat, k: u32) -> Result<Mat> {
    let mut r = m.clone();
    for _ in 0..k {
        r = sqrt_principal(&r)?;
    }
    Ok(r)
}

/// `|| M^2 + I ||`.
pub fn skew_residual(m: &Mat) -> f64 {
    norm(&(m * m + eye(m.nrows())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{dist, from_rows, I_UNIT};

    fn q1() -> Mat {
        from_rows(2, &[c(0.0, 0.0), I_UNIT, I_UNIT, c(0.0, 0.0)])
    }

    #[test]
    fn sqrt_of_scaled_identity() {
        let s = sqrt_principal(&(eye(3) * c(4.0, 0.0))).unwrap();
        assert!(dist(&s, &(eye(3) * c(2.0, 0.0))) < 1e-14);
    }

    #[test]
    fn schur_reconstructs() {
        let m = Mat::from_fn(5, 5, |i, j| c((i * 7 + j * 3) as f64 % 5.0 - 2.0, (i as f64 - j as f64) * 0.3));
        let (q, t) = schur(&m).unwrap();
        assert!(dist(&(&q * &t * q.adjoint()), &m) < 1e-12);
        assert!(dist(&(q.adjoint() * &q), &eye(5)) < 1e-13);
        for j in 0..5 {
            for i in j + 1..5 {
                assert_eq!(t[(i, j)], c(0.0, 0.0));
            }
        }
    }

    #[test]
    fn sqrt_near_scalar() {
        let mut m = eye(4);
        m[(0, 3)] = c(1e-15, -2e-16);
        m[(2, 1)] = c(-3e-16, 0.0);
        let s = sqrt_principal(&m).unwrap();
        assert!(dist(&(&s * &s), &m) < 1e-15);
    }

    #[test]
    fn sqrt_rejects_negative_axis() {
        let m = eye(2) * c(-1.0, 0.0);
        assert!(matches!(sqrt_principal(&m), Err(FqError::DomainViolation { .. })));
    }

    #[test]
    fn pol_and_abs_of_skew_involution() {
        let q = q1();
        assert!(dist(&pol(&q).unwrap(), &q) < 1e-14);
        assert!(dist(&pol(&(&q * c(3.0, 0.0))).unwrap(), &q) < 1e-14);
        assert!(dist(&abs_op(&(&q * c(3.0, 0.0))).unwrap(), &(eye(2) * c(3.0, 0.0))) < 1e-14);
    }

    #[test]
    fn inverse_of_skew_involution() {
        let q = q1();
        assert!(dist(&inv(&q).unwrap(), &-q) < 1e-15);
        assert!(matches!(inv(&Mat::zeros(2, 2)), Err(FqError::SingularMatrix { .. })));
    }

    #[test]
    fn geo_mean_commuting() {
        let g = geo_mean(&(eye(2) * c(4.0, 0.0)), &(eye(2) * c(9.0, 0.0))).unwrap();
        assert!(dist(&g, &(eye(2) * c(6.0, 0.0))) < 1e-14);
        let q = geo_mean_quad(&(eye(2) * c(4.0, 0.0)), &(eye(2) * c(9.0, 0.0)), 64).unwrap();
        assert!(dist(&q, &(eye(2) * c(6.0, 0.0))) < 1e-10);
    }
}
