//! Clifford systems `(Q1, Q2)`, pairs, and perturbations around them.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{FqError, Result};
use crate::mat::{c, commutator, dist, eye, from_real_rows, from_rows, kron, norm, Mat, C64, I_UNIT};
use crate::mixedbase::SectorAssignment;
use crate::tol::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    Pauli2,
    Quaternion4,
    Tensor(usize),
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::Pauli2 => write!(f, "pauli2"),
            BaseKind::Quaternion4 => write!(f, "quaternion4"),
            BaseKind::Tensor(k) => write!(f, "tensor{k}"),
        }
    }
}

impl FromStr for BaseKind {
    type Err = FqError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "pauli2" => return Ok(BaseKind::Pauli2),
            "quaternion4" => return Ok(BaseKind::Quaternion4),
            _ => {}
        }
        let digits = t
            .strip_prefix("tensor")
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'));
        match digits.and_then(|d| d.parse::<usize>().ok()) {
            Some(k) if k >= 1 => Ok(BaseKind::Tensor(k)),
            _ => Err(FqError::ConfigInvalid(format!("unknown base kind `{s}`"))),
        }
    }
}

/// The four Clifford elements `1, Q1, Q2, Q1Q2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    I,
    Q1,
    Q2,
    K,
}

impl Elem {
    pub const ALL: [Elem; 4] = [Elem::I, Elem::Q1, Elem::Q2, Elem::K];

    /// Bits `(b1, b2)` with `E = Q1^b1 Q2^b2` up to sign.
    pub fn bits(self) -> u8 {
        match self {
            Elem::I => 0,
            Elem::Q1 => 2,
            Elem::Q2 => 1,
            Elem::K => 3,
        }
    }

    pub fn from_bits(b: u8) -> Elem {
        match b & 3 {
            0 => Elem::I,
            2 => Elem::Q1,
            1 => Elem::Q2,
            _ => Elem::K,
        }
    }

    /// Product up to sign.
    pub fn mul(self, other: Elem) -> Elem {
        Elem::from_bits(self.bits() ^ other.bits())
    }

    /// Commutation signs `(s1, s2)` with `Q_i E Q_i^-1 = s_i E`.
    pub fn signs(self) -> (f64, f64) {
        match self {
            Elem::I => (1.0, 1.0),
            Elem::Q1 => (1.0, -1.0),
            Elem::Q2 => (-1.0, 1.0),
            Elem::K => (-1.0, -1.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pair {
    pub a1: Mat,
    pub a2: Mat,
}

impl Pair {
    pub fn new(a1: Mat, a2: Mat) -> Self {
        assert_eq!(a1.shape(), a2.shape(), "pair components differ in shape");
        Pair { a1, a2 }
    }

    pub fn dim(&self) -> usize {
        self.a1.nrows()
    }

    pub fn get(&self, i: usize) -> &Mat {
        if i == 0 {
            &self.a1
        } else {
            &self.a2
        }
    }

    /// `M (A1, A2)`.
    pub fn lmul(&self, m: &Mat) -> Pair {
        Pair::new(m * &self.a1, m * &self.a2)
    }

    /// `(A1, A2) M`.
    pub fn rmul(&self, m: &Mat) -> Pair {
        Pair::new(&self.a1 * m, &self.a2 * m)
    }

    /// `L (A1, A2) R`.
    pub fn sandwich(&self, l: &Mat, r: &Mat) -> Pair {
        Pair::new(l * &self.a1 * r, l * &self.a2 * r)
    }

    pub fn map(&self, mut f: impl FnMut(&Mat) -> Mat) -> Pair {
        Pair::new(f(&self.a1), f(&self.a2))
    }

    pub fn try_map(&self, mut f: impl FnMut(&Mat) -> Result<Mat>) -> Result<Pair> {
        Ok(Pair::new(f(&self.a1)?, f(&self.a2)?))
    }

    pub fn add(&self, o: &Pair) -> Pair {
        Pair::new(&self.a1 + &o.a1, &self.a2 + &o.a2)
    }

    pub fn scale(&self, s: f64) -> Pair {
        self.map(|m| m * c(s, 0.0))
    }

    /// Swapped components `(A2, A1)`.
    pub fn swap(&self) -> Pair {
        Pair::new(self.a2.clone(), self.a1.clone())
    }

    /// Max of the componentwise Frobenius distances.
    pub fn dist(&self, o: &Pair) -> f64 {
        dist(&self.a1, &o.a1).max(dist(&self.a2, &o.a2))
    }

    pub fn norm(&self) -> f64 {
        norm(&self.a1).max(norm(&self.a2))
    }
}

#[derive(Debug, Clone)]
pub struct CliffordBase {
    pub kind: BaseKind,
    pub q1: Mat,
    pub q2: Mat,
    /// `Q1 Q2`.
    pub axis: Mat,
    pub dim: usize,
    /// Basis of the commutant of `{Q1, Q2}`, orthonormal for `tr(X* Y) / dim`.
    pub commutant: Vec<Mat>,
}

fn pauli_q() -> (Mat, Mat) {
    let z = c(0.0, 0.0);
    let q1 = from_rows(2, &[z, I_UNIT, I_UNIT, z]);
    let q2 = from_real_rows(2, &[0.0, 1.0, -1.0, 0.0]);
    (q1, q2)
}

fn quaternion_q() -> (Mat, Mat) {
    // Left multiplication by i and j on the basis (1, i, j, k); column m is the image of basis vector m.
    let li = from_real_rows(
        4,
        &[
            0.0, -1.0, 0.0, 0.0, //
            1.0, 0.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, -1.0, //
            0.0, 0.0, 1.0, 0.0,
        ],
    );
    let lj = from_real_rows(
        4,
        &[
            0.0, 0.0, -1.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            1.0, 0.0, 0.0, 0.0, //
            0.0, -1.0, 0.0, 0.0,
        ],
    );
    (li, lj)
}

/// Null space of `X -> ([Q1, X], [Q2, X])`, orthonormalized.
fn commutant_basis(q1: &Mat, q2: &Mat) -> Vec<Mat> {
    let n = q1.nrows();
    let nn = n * n;
    let mut sys = DMatrix::<C64>::zeros(2 * nn, nn);
    for col in 0..nn {
        let mut e = Mat::zeros(n, n);
        e[(col % n, col / n)] = c(1.0, 0.0);
        let c1 = commutator(q1, &e);
        let c2 = commutator(q2, &e);
        for r in 0..nn {
            sys[(r, col)] = c1[(r % n, r / n)];
            sys[(nn + r, col)] = c2[(r % n, r / n)];
        }
    }
    // Null vectors are eigenvectors of sys* sys with zero eigenvalue.
    let gram = sys.adjoint() * &sys;
    let eig = gram.symmetric_eigen();
    let mut out: Vec<Mat> = Vec::new();
    for (k, lam) in eig.eigenvalues.iter().enumerate() {
        if lam.abs() < 1e-9 {
            let v = eig.eigenvectors.column(k);
            let m = Mat::from_fn(n, n, |i, j| v[i + j * n]);
            out.push(m);
        }
    }
    // Rotate the basis so that the identity comes first, then Gram-Schmidt.
    let mut seeds = vec![eye(n)];
    seeds.extend(out);
    let mut basis: Vec<Mat> = Vec::new();
    for mut m in seeds {
        for b in &basis {
            let ip = (b.adjoint() * &m).trace() / c(n as f64, 0.0);
            m -= b * ip;
        }
        let nm = norm(&m) / (n as f64).sqrt();
        if nm > 1e-8 {
            basis.push(m / c(nm, 0.0));
        }
    }
    basis
}

pub fn make_base(kind: BaseKind) -> CliffordBase {
    let (q1, q2) = match kind {
        BaseKind::Pauli2 => pauli_q(),
        BaseKind::Quaternion4 => quaternion_q(),
        BaseKind::Tensor(k) => {
            let (a, b) = pauli_q();
            (kron(&a, &eye(k)), kron(&b, &eye(k)))
        }
    };
    let axis = &q1 * &q2;
    let dim = q1.nrows();
    let commutant = commutant_basis(&q1, &q2);
    CliffordBase { kind, q1, q2, axis, dim, commutant }
}

impl CliffordBase {
    pub fn elem(&self, e: Elem) -> Mat {
        match e {
            Elem::I => eye(self.dim),
            Elem::Q1 => self.q1.clone(),
            Elem::Q2 => self.q2.clone(),
            Elem::K => self.axis.clone(),
        }
    }

    pub fn q(&self, i: usize) -> &Mat {
        if i == 0 {
            &self.q1
        } else {
            &self.q2
        }
    }

    pub fn pair(&self) -> Pair {
        Pair::new(self.q1.clone(), self.q2.clone())
    }

    pub fn in_commutant(&self, m: &Mat, tol: f64) -> bool {
        norm(&commutator(&self.q1, m)) <= tol && norm(&commutator(&self.q2, m)) <= tol
    }

    /// True when the commutant is not commutative.
    pub fn nonabelian_commutant(&self) -> bool {
        self.commutant.len() > 1
    }
}

pub fn is_clifford_pair(p: &Pair, tol: f64) -> bool {
    clifford_residual(p) <= tol
}

/// Max of `|A1^2 + 1|`, `|A2^2 + 1|`, `|A1 A2 + A2 A1|`.
pub fn clifford_residual(p: &Pair) -> f64 {
    let id = eye(p.dim());
    let r1 = norm(&(&p.a1 * &p.a1 + &id));
    let r2 = norm(&(&p.a2 * &p.a2 + &id));
    let r3 = norm(&(&p.a1 * &p.a2 + &p.a2 * &p.a1));
    r1.max(r2).max(r3)
}

/// Perturbation coefficients for the eight mixed-base indices.
#[derive(Debug, Clone)]
pub enum Coeffs {
    Scalar([f64; 8]),
    /// Commutant-valued coefficients, index order 1..8.
    Operator(Vec<Mat>),
}

/// `A1 = (1 + sum x_h E1(h)) Q1`, `A2 = (1 + sum chi_h x_h E2(h)) Q2`.
pub fn perturb(base: &CliffordBase, asg: &SectorAssignment, coeffs: &Coeffs) -> Result<Pair> {
    let n = base.dim;
    let mut r1 = eye(n);
    let mut r2 = eye(n);
    for h in 0..8 {
        let cell = asg.cell(h + 1);
        let (e1, e2) = (base.elem(cell.sector.e1), base.elem(cell.sector.e2));
        let x = match coeffs {
            Coeffs::Scalar(v) => eye(n) * c(v[h], 0.0),
            Coeffs::Operator(v) => {
                let m = &v[h];
                if !base.in_commutant(m, 1e-10 * norm(m).max(1.0)) {
                    return Err(FqError::CoefficientOutOfSector { index: h + 1 });
                }
                m.clone()
            }
        };
        r1 += &e1 * &x;
        r2 += &e2 * &x * c(cell.chi, 0.0);
    }
    Ok(Pair::new(r1 * &base.q1, r2 * &base.q2))
}

/// A pair in the monoaxial regime: only indices 3, 4, 5, 6 are perturbed.
pub fn make_monoaxial(base: &CliffordBase, asg: &SectorAssignment, r: [f64; 4]) -> Result<Pair> {
    let mut v = [0.0; 8];
    v[2..6].copy_from_slice(&r);
    let p = perturb(base, asg, &Coeffs::Scalar(v))?;
    let tol = Tolerances::default();
    for m in [&p.a1, &p.a2] {
        let s = crate::matfun::sigma_min(m);
        if s <= tol.sing(base.dim) {
            return Err(FqError::SingularMatrix { sigma_min: s });
        }
    }
    Ok(p)
}

pub const MAX_RETRIES: usize = 100;

/// Coefficients drawn from the seeded generator.  On `pauli2` they are real
/// scalars uniform in `[-radius, radius]`; with a larger commutant they are
/// commutant-valued with normalized Frobenius norm at most `radius`.
pub fn random_coeffs(base: &CliffordBase, radius: f64, rng: &mut ChaCha8Rng) -> Coeffs {
    if base.commutant.len() == 1 {
        let mut v = [0.0; 8];
        for x in v.iter_mut() {
            *x = rng.random_range(-radius..=radius);
        }
        return Coeffs::Scalar(v);
    }
    let m = base.commutant.len();
    let scale = radius / ((2 * m) as f64).sqrt();
    let v = (0..8)
        .map(|_| {
            let mut acc = Mat::zeros(base.dim, base.dim);
            for b in &base.commutant {
                let z = c(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)) * scale;
                acc += b * z;
            }
            acc
        })
        .collect();
    Coeffs::Operator(v)
}

/// Seeded random pair near the base that passes the domain checks of all
/// operations, resampling up to [`MAX_RETRIES`] times.
pub fn random_pair_near(base: &CliffordBase, asg: &SectorAssignment, radius: f64, seed: u64) -> Result<Pair> {
    if !(0.0..0.5).contains(&radius) {
        return Err(FqError::ConfigInvalid(format!("radius {radius} outside [0, 0.5)")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let co = random_coeffs(base, radius, &mut rng);
        let p = perturb(base, asg, &co)?;
        if crate::fqops::domain_ok(&p) {
            return Ok(p);
        }
    }
    Err(FqError::SamplingExhausted(MAX_RETRIES))
}

/// Seeded random monoaxial pair with the four restricted coefficients uniform in `[-radius, radius]`.
pub fn random_monoaxial(base: &CliffordBase, asg: &SectorAssignment, radius: f64, seed: u64) -> Result<Pair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let mut r = [0.0; 4];
        for x in r.iter_mut() {
            *x = rng.random_range(-radius..=radius);
        }
        let p = make_monoaxial(base, asg, r)?;
        if crate::fqops::domain_ok(&p) {
            return Ok(p);
        }
    }
    Err(FqError::SamplingExhausted(MAX_RETRIES))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_are_clifford() {
        for k in [BaseKind::Pauli2, BaseKind::Quaternion4, BaseKind::Tensor(2), BaseKind::Tensor(3)] {
            let b = make_base(k);
            assert!(is_clifford_pair(&b.pair(), 1e-12), "{k}");
            assert!(norm(&(&b.axis * &b.axis + eye(b.dim))) < 1e-12);
        }
    }

    #[test]
    fn commutant_dimensions() {
        assert_eq!(make_base(BaseKind::Pauli2).commutant.len(), 1);
        assert_eq!(make_base(BaseKind::Tensor(2)).commutant.len(), 4);
        assert_eq!(make_base(BaseKind::Quaternion4).commutant.len(), 4);
        assert_eq!(make_base(BaseKind::Tensor(3)).commutant.len(), 9);
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("tensor(2)".parse::<BaseKind>().unwrap(), BaseKind::Tensor(2));
        assert_eq!("tensor3".parse::<BaseKind>().unwrap(), BaseKind::Tensor(3));
        assert!("tensor0".parse::<BaseKind>().is_err());
        assert!("octonion".parse::<BaseKind>().is_err());
    }

    #[test]
    fn q1_q1_is_not_clifford() {
        let b = make_base(BaseKind::Pauli2);
        assert!(!is_clifford_pair(&Pair::new(b.q1.clone(), b.q1.clone()), 1e-6));
    }
}
