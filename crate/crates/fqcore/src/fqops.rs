//! FQ operations on pairs, their registry, and the axial extensions.

use std::fmt;
use std::sync::Arc;

use crate::clifford::Pair;
use crate::error::{FqError, Result};
use crate::mat::{c, eye, is_finite, norm, Mat};
use crate::matfun::{abs_op, geo_mean, inv, pol, root_2k, sqrt_principal};

pub mod identities;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Scalar,
    Vectorial,
    Pseudoscalar,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Scalar => "scalar",
            Kind::Vectorial => "vectorial",
            Kind::Pseudoscalar => "pseudoscalar",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Mat(Mat),
    Pair(Pair),
}

impl Value {
    pub fn mat(&self) -> &Mat {
        match self {
            Value::Mat(m) => m,
            Value::Pair(_) => panic!("expected a matrix value"),
        }
    }

    pub fn pair(&self) -> &Pair {
        match self {
            Value::Pair(p) => p,
            Value::Mat(_) => panic!("expected a pair value"),
        }
    }

    pub fn dist(&self, o: &Value) -> f64 {
        match (self, o) {
            (Value::Mat(a), Value::Mat(b)) => norm(&(a - b)),
            (Value::Pair(a), Value::Pair(b)) => a.dist(b),
            _ => f64::INFINITY,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Value::Mat(m) => is_finite(m),
            Value::Pair(p) => is_finite(&p.a1) && is_finite(&p.a2),
        }
    }
}

type EvalFn = dyn Fn(&Pair) -> Result<Value> + Send + Sync;

#[derive(Clone)]
pub struct FqOp {
    pub name: String,
    pub kind: Kind,
    f: Arc<EvalFn>,
}

impl fmt::Debug for FqOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqOp({}, {})", self.name, self.kind)
    }
}

impl FqOp {
    pub fn new(name: impl Into<String>, kind: Kind, f: impl Fn(&Pair) -> Result<Value> + Send + Sync + 'static) -> Self {
        FqOp { name: name.into(), kind, f: Arc::new(f) }
    }

    pub fn scalar(name: &str, f: impl Fn(&Pair) -> Result<Mat> + Send + Sync + 'static) -> Self {
        FqOp::new(name, Kind::Scalar, move |p| f(p).map(Value::Mat))
    }

    pub fn pseudo(name: &str, f: impl Fn(&Pair) -> Result<Mat> + Send + Sync + 'static) -> Self {
        FqOp::new(name, Kind::Pseudoscalar, move |p| f(p).map(Value::Mat))
    }

    pub fn vector(name: &str, f: impl Fn(&Pair) -> Result<Pair> + Send + Sync + 'static) -> Self {
        FqOp::new(name, Kind::Vectorial, move |p| f(p).map(Value::Pair))
    }

    pub fn eval(&self, p: &Pair) -> Result<Value> {
        let v = (self.f)(p)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(FqError::NonFinite("operation output"))
        }
    }

    pub fn eval_mat(&self, p: &Pair) -> Result<Mat> {
        match self.eval(p)? {
            Value::Mat(m) => Ok(m),
            Value::Pair(_) => Err(FqError::ExtractionFailure(format!("{} is vectorial", self.name))),
        }
    }

    pub fn eval_pair(&self, p: &Pair) -> Result<Pair> {
        match self.eval(p)? {
            Value::Pair(q) => Ok(q),
            Value::Mat(_) => Err(FqError::ExtractionFailure(format!("{} is not vectorial", self.name))),
        }
    }

    /// `self ∘ inner`; `inner` must be vectorial.
    pub fn after(&self, inner: &FqOp) -> FqOp {
        assert_eq!(inner.kind, Kind::Vectorial, "inner operation of a composition must be vectorial");
        let (a, b) = (self.clone(), inner.clone());
        FqOp::new(format!("{}∘{}", a.name, b.name), a.kind, move |p| a.eval(&b.eval_pair(p)?))
    }
}

// ---------------------------------------------------------------------------
// Axes and biaxiality

/// `pol(A2 A1^-1)`.
pub fn axis_left(p: &Pair) -> Result<Mat> {
    pol(&(&p.a2 * inv(&p.a1)?))
}

/// `pol(-A1 A2^-1)`.
pub fn axis_left_alt(p: &Pair) -> Result<Mat> {
    pol(&-(&p.a1 * inv(&p.a2)?))
}

/// `pol(A2^-1 A1)`.
pub fn axis_right(p: &Pair) -> Result<Mat> {
    pol(&(inv(&p.a2)? * &p.a1))
}

/// `pol(-A1^-1 A2)`.
pub fn axis_right_alt(p: &Pair) -> Result<Mat> {
    pol(&-(inv(&p.a1)? * &p.a2))
}

pub fn axis_central(p: &Pair) -> Result<Mat> {
    geo_mean(&axis_left(p)?, &axis_right(p)?)
}

/// `(-A_L A_R)^{1/2}`.
pub fn biaxiality(p: &Pair) -> Result<Mat> {
    sqrt_principal(&-(axis_left(p)? * axis_right(p)?))
}

/// `(-A_R A_L)^{1/2}`.
pub fn biaxiality_inv(p: &Pair) -> Result<Mat> {
    sqrt_principal(&-(axis_right(p)? * axis_left(p)?))
}

fn biax_half(p: &Pair) -> Result<(Mat, Mat)> {
    let bh = sqrt_principal(&biaxiality(p)?)?;
    let bmh = inv(&bh)?;
    Ok((bh, bmh))
}

/// `(-A2, A1)`.
pub fn rot_minus(p: &Pair) -> Pair {
    Pair::new(-p.a2.clone(), p.a1.clone())
}

/// `(A2, -A1)`.
pub fn rot_plus(p: &Pair) -> Pair {
    Pair::new(p.a2.clone(), -p.a1.clone())
}

// ---------------------------------------------------------------------------
// Turn and orthogonalizations

/// `A_L (-A2, A1)`.
pub fn turn(p: &Pair) -> Result<Pair> {
    Ok(rot_minus(p).lmul(&axis_left(p)?))
}

/// `(A2, -A1) A_R`.
pub fn turn_alt(p: &Pair) -> Result<Pair> {
    Ok(rot_plus(p).rmul(&axis_right(p)?))
}

pub fn orth_conform(p: &Pair) -> Result<Pair> {
    Ok(p.add(&turn(p)?).scale(0.5))
}

pub fn orth_anticonform(p: &Pair) -> Result<Pair> {
    orth_conform(p)?.try_map(|m| Ok(-inv(m)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Central,
    Right,
}

impl Side {
    /// The convention `-L = R`, `-C = C`, `-R = L`.
    pub fn neg(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Central => Side::Central,
            Side::Right => Side::Left,
        }
    }

    pub fn axis(self, p: &Pair) -> Result<Mat> {
        match self {
            Side::Left => axis_left(p),
            Side::Central => axis_central(p),
            Side::Right => axis_right(p),
        }
    }

    pub const ALL: [Side; 3] = [Side::Left, Side::Central, Side::Right];
}

pub fn monoaxialize(p: &Pair, side: Side) -> Result<Pair> {
    match side {
        Side::Left => Ok(p.rmul(&biaxiality_inv(p)?)),
        Side::Right => Ok(p.lmul(&biaxiality_inv(p)?)),
        Side::Central => {
            let (_, bmh) = biax_half(p)?;
            Ok(p.sandwich(&bmh, &bmh))
        }
    }
}

/// `A_C (A1, A2) A_C`.
pub fn axial_conjugation(p: &Pair) -> Result<Pair> {
    let ac = axis_central(p)?;
    Ok(p.sandwich(&ac, &ac))
}

/// `B^-1 (A1, A2) B^-1`.
pub fn axial_conjugation_alt(p: &Pair) -> Result<Pair> {
    let bi = biaxiality_inv(p)?;
    Ok(p.sandwich(&bi, &bi))
}

/// Largest admissible `|B - 1|` for the monoaxial construction.
pub const MONOAXIAL_TOL: f64 = 1e-6;

pub fn monoaxial_defect(p: &Pair) -> Result<f64> {
    Ok(norm(&(biaxiality(p)? - eye(p.dim()))))
}

/// `(pol O^fSy_1, pol O^fSy_2)` on a monoaxial pair.
pub fn orth_mono_on_monoaxial(p: &Pair) -> Result<Pair> {
    let d = monoaxial_defect(p)?;
    if d > MONOAXIAL_TOL {
        return Err(FqError::NotMonoaxial(d));
    }
    orth_conform(p)?.try_map(pol)
}

pub fn orth_mono(p: &Pair) -> Result<Pair> {
    let m = monoaxialize(p, Side::Central)?;
    orth_conform(&m)?.try_map(pol)
}

/// Circular decomposition of a monoaxial pair with respect to the Clifford
/// system it determines.
#[derive(Debug, Clone)]
pub struct Circular {
    pub q: Pair,
    /// `1 + r3`.
    pub one_r3: Mat,
    pub r3: Mat,
    pub r4: Mat,
}

pub fn circular_decomposition(p: &Pair) -> Result<Circular> {
    let q = orth_mono_on_monoaxial(p)?;
    let ac = axis_central(p)?;
    let (a1, a2) = (&p.a1, &p.a2);
    let s = a1 * a1 + a2 * a2 - a1 * &ac * a2 + a2 * &ac * a1;
    let one_r3 = sqrt_principal(&(s * c(-0.25, 0.0)))?;
    let r3 = &one_r3 - eye(p.dim());
    let r4 = (-(a1 * &q.a1) + a2 * &q.a2) * c(0.5, 0.0);
    Ok(Circular { q, one_r3, r3, r4 })
}

impl Circular {
    /// `((1 + r3 + r4) Q1, (1 + r3 - r4) Q2)`.
    pub fn reconstruct(&self) -> Pair {
        Pair::new((&self.one_r3 + &self.r4) * &self.q.a1, (&self.one_r3 - &self.r4) * &self.q.a2)
    }
}

// ---------------------------------------------------------------------------
// Lengths, pseudodeterminants, volumes

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Fx,
    X,
    Cx,
    Plain,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Fx, Variant::X, Variant::Cx, Variant::Plain];

    pub fn suffix(self) -> &'static str {
        match self {
            Variant::Fx => "^fx",
            Variant::X => "^x",
            Variant::Cx => "^cx",
            Variant::Plain => "",
        }
    }
}

pub fn axial_length(p: &Pair, v: Variant) -> Result<Mat> {
    let (a1, a2) = (&p.a1, &p.a2);
    let x = |bi: &Mat| -(a1 * bi * a1) - a2 * bi * a2;
    let cx = |ac: &Mat| a1 * ac * a2 - a2 * ac * a1;
    Ok(match v {
        Variant::Fx => (x(&biaxiality_inv(p)?) + cx(&axis_central(p)?)) * c(0.25, 0.0),
        Variant::X => x(&biaxiality_inv(p)?) * c(0.5, 0.0),
        Variant::Cx => cx(&axis_central(p)?) * c(0.5, 0.0),
        Variant::Plain => (a1 * a1 + a2 * a2) * c(-0.5, 0.0),
    })
}

pub fn pseudodet(p: &Pair, v: Variant) -> Result<Mat> {
    let (a1, a2) = (&p.a1, &p.a2);
    let x = |bi: &Mat| a1 * bi * a2 - a2 * bi * a1;
    let cx = |ac: &Mat| a1 * ac * a1 + a2 * ac * a2;
    Ok(match v {
        Variant::Fx => (cx(&axis_central(p)?) + x(&biaxiality_inv(p)?)) * c(0.25, 0.0),
        Variant::X => x(&biaxiality_inv(p)?) * c(0.5, 0.0),
        Variant::Cx => cx(&axis_central(p)?) * c(0.5, 0.0),
        Variant::Plain => (a1 * a2 - a2 * a1) * c(0.5, 0.0),
    })
}

/// `B^{-1/2} L^fx B^{-1/2}`.
pub fn axial_volume(p: &Pair) -> Result<Mat> {
    let (_, bmh) = biax_half(p)?;
    Ok(&bmh * axial_length(p, Variant::Fx)? * &bmh)
}

/// `|D^v|`; the plain variant is the volume `V`.
pub fn volume_of(p: &Pair, v: Variant) -> Result<Mat> {
    abs_op(&pseudodet(p, v)?)
}

/// `pol D^v`; the plain variant is `A_D`.
pub fn polarized_det(p: &Pair, v: Variant) -> Result<Mat> {
    pol(&pseudodet(p, v)?)
}

fn axial_rescale(p: &Pair, vroot: Mat) -> Result<Pair> {
    let (bh, bmh) = biax_half(p)?;
    let l = &bh * &vroot * &bmh;
    let r = &bmh * &vroot * &bh;
    Ok(p.sandwich(&l, &r))
}

pub fn unitalization(p: &Pair) -> Result<Pair> {
    let vq = inv(&root_2k(&axial_volume(p)?, 2)?)?;
    axial_rescale(p, vq)
}

pub fn amplitude_inversion(p: &Pair) -> Result<Pair> {
    let vh = inv(&root_2k(&axial_volume(p)?, 1)?)?;
    axial_rescale(p, vh)
}

// ---------------------------------------------------------------------------
// Inversions

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inversion {
    CFy,
    LFy,
    RFy,
    LY,
    RY,
    LCy,
    RCy,
}

impl Inversion {
    pub const ALL: [Inversion; 7] =
        [Inversion::CFy, Inversion::LFy, Inversion::RFy, Inversion::LY, Inversion::RY, Inversion::LCy, Inversion::RCy];

    pub fn name(self) -> &'static str {
        match self {
            Inversion::CFy => "I_C^fy",
            Inversion::LFy => "I_L^fy",
            Inversion::RFy => "I_R^fy",
            Inversion::LY => "I_L^y",
            Inversion::RY => "I_R^y",
            Inversion::LCy => "I_L^cy",
            Inversion::RCy => "I_R^cy",
        }
    }
}

pub fn inversion(p: &Pair, which: Inversion) -> Result<Pair> {
    let side = |v: Variant, left: bool| -> Result<Pair> {
        let t = turn(p)?;
        let bi = biaxiality_inv(p)?;
        let li = inv(&axial_length(p, v)?)?;
        Ok(if left { t.sandwich(&bi, &li) } else { t.sandwich(&li, &bi) })
    };
    match which {
        Inversion::CFy => axial_conjugation(&amplitude_inversion(&turn(p)?)?),
        Inversion::LFy => side(Variant::Fx, true),
        Inversion::RFy => side(Variant::Fx, false),
        Inversion::LY => side(Variant::Cx, true),
        Inversion::RY => side(Variant::Cx, false),
        Inversion::LCy => side(Variant::X, true),
        Inversion::RCy => side(Variant::X, false),
    }
}

/// `(B ⋆ L^fx)^{-1/2} T (B ⋆ L^fx)^{-1/2}`.
pub fn inversion_c_closed(p: &Pair) -> Result<Pair> {
    let g = inv(&geo_mean(&biaxiality(p)?, &axial_length(p, Variant::Fx)?)?)?;
    Ok(turn(p)?.sandwich(&g, &g))
}

// ---------------------------------------------------------------------------
// Named variants

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    TRR,
    TLL,
    TR,
    TL,
    FL,
    FR,
}

pub fn named_variant(p: &Pair, which: Named) -> Result<Pair> {
    Ok(match which {
        Named::TRR => rot_minus(p).lmul(&axis_right(p)?),
        Named::TLL => rot_plus(p).rmul(&axis_left(p)?),
        Named::TR => rot_minus(p).lmul(&axis_central(p)?),
        Named::TL => rot_plus(p).rmul(&axis_central(p)?),
        Named::FR => p.lmul(&inv(&volume_of(p, Variant::Plain)?)?),
        Named::FL => p.rmul(&inv(&volume_of(p, Variant::Plain)?)?),
    })
}

// ---------------------------------------------------------------------------
// Axial extensions

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtMode {
    X,
    Cx,
    Y,
    M,
}

impl ExtMode {
    pub fn tag(self) -> &'static str {
        match self {
            ExtMode::X => "x",
            ExtMode::Cx => "cx",
            ExtMode::Y => "y",
            ExtMode::M => "m",
        }
    }
}

fn apply_right(v: Value, m: &Mat) -> Value {
    match v {
        Value::Mat(x) => Value::Mat(x * m),
        Value::Pair(q) => Value::Pair(q.rmul(m)),
    }
}

fn apply_left(m: &Mat, v: Value) -> Value {
    match v {
        Value::Mat(x) => Value::Mat(m * x),
        Value::Pair(q) => Value::Pair(q.lmul(m)),
    }
}

/// Promote `xi` to general pairs through the biaxiality or the central axis.
pub fn extend(xi: &FqOp, mode: ExtMode) -> FqOp {
    let x = xi.clone();
    let name = format!("({})^{}", xi.name, mode.tag());
    match mode {
        ExtMode::X => FqOp::new(name, xi.kind, move |p| {
            let b = biaxiality(p)?;
            let bi = biaxiality_inv(p)?;
            Ok(apply_right(x.eval(&p.rmul(&bi))?, &b))
        }),
        ExtMode::Y => FqOp::new(name, xi.kind, move |p| {
            let bi = biaxiality_inv(p)?;
            Ok(apply_left(&bi, x.eval(&p.rmul(&bi))?))
        }),
        ExtMode::M => FqOp::new(name, xi.kind, move |p| x.eval(&monoaxialize(p, Side::Central)?)),
        ExtMode::Cx => {
            let sign = if xi.kind == Kind::Pseudoscalar { -1.0 } else { 1.0 };
            let kind = match xi.kind {
                Kind::Scalar => Kind::Pseudoscalar,
                Kind::Pseudoscalar => Kind::Scalar,
                Kind::Vectorial => Kind::Vectorial,
            };
            FqOp::new(name, kind, move |p| {
                let ac = axis_central(p)?;
                let aci = inv(&ac)?;
                let v = apply_right(x.eval(&p.rmul(&ac))?, &(aci * c(sign, 0.0)));
                Ok(v)
            })
        }
    }
}

/// The other presentations of `Ξ^x`: `B Ξ(B^-1 A)` and `B^{1/2} Ξ(B^{-1/2} A B^{-1/2}) B^{1/2}`.
pub fn extend_x_forms(xi: &FqOp, p: &Pair) -> Result<[Value; 2]> {
    let b = biaxiality(p)?;
    let bi = biaxiality_inv(p)?;
    let (bh, bmh) = biax_half(p)?;
    let v1 = apply_left(&b, xi.eval(&p.lmul(&bi))?);
    let v2 = apply_right(apply_left(&bh, xi.eval(&p.sandwich(&bmh, &bmh))?), &bh);
    Ok([v1, v2])
}

// ---------------------------------------------------------------------------
// Registry

fn sc(name: &str, f: fn(&Pair) -> Result<Mat>) -> FqOp {
    FqOp::scalar(name, f)
}

fn ps(name: &str, f: fn(&Pair) -> Result<Mat>) -> FqOp {
    FqOp::pseudo(name, f)
}

fn ve(name: &str, f: fn(&Pair) -> Result<Pair>) -> FqOp {
    FqOp::vector(name, f)
}

fn ops_core() -> Vec<FqOp> {
    let mut v = vec![
        ps("A_L", axis_left),
        ps("A_R", axis_right),
        ps("A_C", axis_central),
        sc("B", biaxiality),
        sc("B^-1", biaxiality_inv),
        ve("T", turn),
        ve("O^fSy", orth_conform),
        ve("O^afSy", orth_anticonform),
        ve("M_L", |p| monoaxialize(p, Side::Left)),
        ve("M_R", |p| monoaxialize(p, Side::Right)),
        ve("M_C", |p| monoaxialize(p, Side::Central)),
        ve("C", axial_conjugation),
        ve("O^mSy", orth_mono),
        sc("L^fx", |p| axial_length(p, Variant::Fx)),
        sc("V^fm", axial_volume),
        ps("D^fx", |p| pseudodet(p, Variant::Fx)),
        ve("U^fx", unitalization),
        ve("K^fx", amplitude_inversion),
        ve("I_C^fy", |p| inversion(p, Inversion::CFy)),
    ];
    v.push(ve("Id", |p| Ok(p.clone())));
    v
}

/// The operations whose first-order rows are printed in the tables, in table order.
pub const TABLE_OPS: [&str; 19] = [
    "A_L", "A_R", "A_C", "B", "B^-1", "T", "O^fSy", "O^afSy", "M_L", "M_R", "M_C", "C", "O^mSy", "L^fx", "V^fm", "D^fx",
    "U^fx", "K^fx", "I_C^fy",
];

fn ops_variants() -> Vec<FqOp> {
    let mut v = Vec::new();
    for var in [Variant::X, Variant::Cx, Variant::Plain] {
        v.push(FqOp::scalar(&format!("L{}", var.suffix()), move |p| axial_length(p, var)));
        v.push(FqOp::pseudo(&format!("D{}", var.suffix()), move |p| pseudodet(p, var)));
    }
    for var in Variant::ALL {
        let vname = if var == Variant::Plain { "V".to_string() } else { format!("|D{}|", var.suffix()) };
        v.push(FqOp::scalar(&vname, move |p| volume_of(p, var)));
        let pname = if var == Variant::Plain { "A_D".to_string() } else { format!("pol D{}", var.suffix()) };
        v.push(FqOp::pseudo(&pname, move |p| polarized_det(p, var)));
        v.push(FqOp::scalar(&format!("(L{})^-1", var.suffix()), move |p| inv(&axial_length(p, var)?)));
        v.push(FqOp::pseudo(&format!("-(D{})^-1", var.suffix()), move |p| Ok(-inv(&pseudodet(p, var)?)?)));
        v.push(FqOp::vector(&format!("A (L{})^-1", var.suffix()), move |p| {
            Ok(p.rmul(&inv(&axial_length(p, var)?)?))
        }));
        v.push(FqOp::vector(&format!("(L{})^-1 A", var.suffix()), move |p| {
            Ok(p.lmul(&inv(&axial_length(p, var)?)?))
        }));
        v.push(FqOp::vector(&format!("(-A2,A1) (D{})^-1", var.suffix()), move |p| {
            Ok(rot_minus(p).rmul(&inv(&pseudodet(p, var)?)?))
        }));
        v.push(FqOp::vector(&format!("(D{})^-1 (A2,-A1)", var.suffix()), move |p| {
            Ok(rot_plus(p).lmul(&inv(&pseudodet(p, var)?)?))
        }));
    }
    v.push(sc("|D|^-1", |p| inv(&volume_of(p, Variant::Plain)?)));
    for w in Inversion::ALL.iter().skip(1).copied() {
        v.push(FqOp::vector(w.name(), move |p| inversion(p, w)));
    }
    for (n, w) in [
        ("T_RR", Named::TRR),
        ("T_LL", Named::TLL),
        ("T_R", Named::TR),
        ("T_L", Named::TL),
        ("F_R", Named::FR),
        ("F_L", Named::FL),
    ] {
        v.push(FqOp::vector(n, move |p| named_variant(p, w)));
    }
    v.push(mix_op(0.3));
    v
}

fn pd(p: &Pair, v: Variant) -> Result<Mat> {
    pseudodet(p, v)
}

fn ln(p: &Pair, v: Variant) -> Result<Mat> {
    axial_length(p, v)
}

fn ops_pseudo_examples() -> Vec<FqOp> {
    vec![
        ps("D L^-1", |p| Ok(pd(p, Variant::Plain)? * inv(&ln(p, Variant::Plain)?)?)),
        ps("pol D L^-1", |p| pol(&(pd(p, Variant::Plain)? * inv(&ln(p, Variant::Plain)?)?))),
        ps("-L D^-1", |p| Ok(-(ln(p, Variant::Plain)? * inv(&pd(p, Variant::Plain)?)?))),
        ps("D^x (L^x)^-1", |p| Ok(pd(p, Variant::X)? * inv(&ln(p, Variant::X)?)?)),
        ps("-L^cx (D^cx)^-1", |p| Ok(-(ln(p, Variant::Cx)? * inv(&pd(p, Variant::Cx)?)?))),
        ps("D^cx (L^cx)^-1", |p| Ok(pd(p, Variant::Cx)? * inv(&ln(p, Variant::Cx)?)?)),
        ps("-L^x (D^x)^-1", |p| Ok(-(ln(p, Variant::X)? * inv(&pd(p, Variant::X)?)?))),
        ps("L^-1 D", |p| Ok(inv(&ln(p, Variant::Plain)?)? * pd(p, Variant::Plain)?)),
        ps("pol L^-1 D", |p| pol(&(inv(&ln(p, Variant::Plain)?)? * pd(p, Variant::Plain)?))),
        ps("-D^-1 L", |p| Ok(-(inv(&pd(p, Variant::Plain)?)? * ln(p, Variant::Plain)?))),
        ps("(L^x)^-1 D^x", |p| Ok(inv(&ln(p, Variant::X)?)? * pd(p, Variant::X)?)),
        ps("-(D^cx)^-1 L^cx", |p| Ok(-(inv(&pd(p, Variant::Cx)?)? * ln(p, Variant::Cx)?))),
        ps("(L^cx)^-1 D^cx", |p| Ok(inv(&ln(p, Variant::Cx)?)? * pd(p, Variant::Cx)?)),
        ps("-(D^x)^-1 L^x", |p| Ok(-(inv(&pd(p, Variant::X)?)? * ln(p, Variant::X)?))),
    ]
}

fn ops_extremal() -> Vec<FqOp> {
    vec![
        sc("-A1^2", |p| Ok(-(&p.a1 * &p.a1))),
        sc("-A2^2", |p| Ok(-(&p.a2 * &p.a2))),
        sc("-A2^-2", |p| Ok(-inv(&(&p.a2 * &p.a2))?)),
        sc("-A1^-2", |p| Ok(-inv(&(&p.a1 * &p.a1))?)),
        sc("1", |p| Ok(eye(p.dim()))),
        ps("A1 A2", |p| Ok(&p.a1 * &p.a2)),
        ps("-A2^-1 A1^-1", |p| Ok(-(inv(&p.a2)? * inv(&p.a1)?))),
        ps("-A2 A1", |p| Ok(-(&p.a2 * &p.a1))),
        ps("A1^-1 A2^-1", |p| Ok(inv(&p.a1)? * inv(&p.a2)?)),
        ps("-A1 A2^-1", |p| Ok(-(&p.a1 * inv(&p.a2)?))),
        ps("A2^-1 A1", |p| Ok(inv(&p.a2)? * &p.a1)),
        ps("A2 A1^-1", |p| Ok(&p.a2 * inv(&p.a1)?)),
        ps("-A1^-1 A2", |p| Ok(-(inv(&p.a1)? * &p.a2))),
        ve("-inv", |p| p.try_map(|m| Ok(-inv(m)?))),
    ]
}

/// `q5 Id + (1 - q5) O^fSy`.
pub fn mix_op(q5: f64) -> FqOp {
    FqOp::vector(&format!("mix({q5})"), move |p| Ok(p.scale(q5).add(&orth_conform(p)?.scale(1.0 - q5))))
}

/// Every implemented operation, in a fixed order.
pub fn registry() -> Vec<FqOp> {
    let mut v = ops_core();
    v.extend(ops_variants());
    v.extend(ops_pseudo_examples());
    v.extend(ops_extremal());
    v
}

pub fn get(name: &str) -> Option<FqOp> {
    registry().into_iter().find(|o| o.name == name)
}

pub fn op(name: &str) -> FqOp {
    get(name).unwrap_or_else(|| panic!("unknown operation `{name}`"))
}

/// True when every registered operation evaluates to finite values at `p`.
pub fn domain_ok(p: &Pair) -> bool {
    if !is_finite(&p.a1) || !is_finite(&p.a2) {
        return false;
    }
    registry().iter().all(|o| o.eval(p).is_ok()) && inversion_c_closed(p).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{make_base, BaseKind};
    use std::collections::HashSet;

    #[test]
    fn registry_names_unique() {
        let r = registry();
        let names: HashSet<_> = r.iter().map(|o| o.name.clone()).collect();
        assert_eq!(names.len(), r.len());
        for n in TABLE_OPS {
            assert!(get(n).is_some(), "{n}");
        }
    }

    #[test]
    fn clifford_conservative_at_base() {
        for k in [BaseKind::Pauli2, BaseKind::Tensor(2)] {
            let b = make_base(k);
            let q = b.pair();
            for o in registry() {
                let v = o.eval(&q).unwrap();
                let expect = match o.kind {
                    Kind::Scalar => Value::Mat(eye(b.dim)),
                    Kind::Pseudoscalar => Value::Mat(b.axis.clone()),
                    Kind::Vectorial => Value::Pair(q.clone()),
                };
                assert!(v.dist(&expect) < 1e-12, "{} at {k}", o.name);
            }
        }
    }
}
