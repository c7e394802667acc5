//! Sectors, the index↔cell assignment, and numerical extraction of first- and
//! second-order expansion coefficients.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{CliffordBase, Elem, Pair};
use crate::error::{FqError, Result};
use crate::fqops::{FqOp, Kind, Value};
use crate::mat::{c, eye, mean_diag, Mat};

/// Commutation sector of a perturbation: `r1` carries `e1`, `r2` carries `e2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sector {
    pub e1: Elem,
    pub e2: Elem,
}

impl Sector {
    pub const I: Sector = Sector { e1: Elem::I, e2: Elem::I };
    pub const K: Sector = Sector { e1: Elem::K, e2: Elem::K };
    /// Each generator perturbed by itself.
    pub const OWN: Sector = Sector { e1: Elem::Q1, e2: Elem::Q2 };
    pub const OTHER: Sector = Sector { e1: Elem::Q2, e2: Elem::Q1 };
    pub const PURE_Q1: Sector = Sector { e1: Elem::Q1, e2: Elem::Q1 };
    pub const PURE_Q2: Sector = Sector { e1: Elem::Q2, e2: Elem::Q2 };

    pub fn mul(self, o: Sector) -> Sector {
        Sector { e1: self.e1.mul(o.e1), e2: self.e2.mul(o.e2) }
    }

    /// Commutes with both generators.
    pub fn axial(self) -> bool {
        matches!(self.e1, Elem::I | Elem::K)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub sector: Sector,
    pub chi: f64,
}

impl Cell {
    pub fn mul(self, o: Cell) -> Cell {
        Cell { sector: self.sector.mul(o.sector), chi: self.chi * o.chi }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.chi > 0.0 { '+' } else { '-' };
        write!(f, "({:?},{:?}){s}", self.sector.e1, self.sector.e2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// Generator `i` is perturbed along `E` in both components.
    Pure,
    /// Vectorial sectors pair `Q1` with `Q2`.
    Mixed,
}

impl Model {
    pub fn q_sectors(self) -> [Sector; 2] {
        match self {
            Model::Pure => [Sector::PURE_Q1, Sector::PURE_Q2],
            Model::Mixed => [Sector::OWN, Sector::OTHER],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityRule {
    /// Parities fixed to `+ - + - - + + -`.
    Printed,
    Free,
}

pub const PRINTED_PARITY: [f64; 8] = [1.0, -1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0];

const AXIAL_INDICES: [usize; 4] = [3, 4, 5, 6];
const Q_INDICES: [usize; 4] = [1, 2, 7, 8];

#[derive(Debug, Clone, PartialEq)]
pub struct SectorAssignment {
    pub model: Model,
    cells: [Cell; 8],
}

impl SectorAssignment {
    pub fn new(model: Model, cells: [Cell; 8]) -> Result<Self> {
        for i in 0..8 {
            for j in 0..i {
                if cells[i] == cells[j] {
                    return Err(FqError::ConfigInvalid(format!("indices {} and {} share a cell", j + 1, i + 1)));
                }
            }
        }
        for h in AXIAL_INDICES {
            if !cells[h - 1].sector.axial() {
                return Err(FqError::ConfigInvalid(format!("index {h} must sit in an axial sector")));
            }
        }
        Ok(SectorAssignment { model, cells })
    }

    /// The assignment found by [`calibrate`] on the printed tables.
    pub fn reference() -> Self {
        let cell = |sector, chi| Cell { sector, chi };
        SectorAssignment {
            model: Model::Mixed,
            cells: [
                cell(Sector::OWN, -1.0),
                cell(Sector::OWN, 1.0),
                cell(Sector::I, 1.0),
                cell(Sector::I, -1.0),
                cell(Sector::K, -1.0),
                cell(Sector::K, 1.0),
                cell(Sector::OTHER, 1.0),
                cell(Sector::OTHER, -1.0),
            ],
        }
    }

    /// Cell of index `h` in `1..=8`.
    pub fn cell(&self, h: usize) -> Cell {
        self.cells[h - 1]
    }

    pub fn cells(&self) -> &[Cell; 8] {
        &self.cells
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.cells.iter().position(|&x| x == c).map(|i| i + 1)
    }

    pub fn chi(&self) -> [f64; 8] {
        self.cells.map(|c| c.chi)
    }

    pub fn table(&self) -> Result<IndexTable> {
        let mut prod = [[0usize; 8]; 8];
        for i in 1..=8 {
            for j in 1..=8 {
                let c = self.cell(i).mul(self.cell(j));
                prod[i - 1][j - 1] = self
                    .index_of(c)
                    .ok_or_else(|| FqError::ConfigInvalid(format!("cells of {i} and {j} multiply outside the assignment")))?;
            }
        }
        let identity = self
            .index_of(Cell { sector: Sector::I, chi: 1.0 })
            .ok_or_else(|| FqError::ConfigInvalid("no index on the (I, +) cell".into()))?;
        Ok(IndexTable { prod, identity })
    }

    /// Every assignment respecting the axial/vectorial split.
    pub fn enumerate(model: Model, parity: ParityRule) -> Vec<SectorAssignment> {
        let axial: Vec<Cell> = [Sector::I, Sector::K]
            .iter()
            .flat_map(|&s| [1.0, -1.0].map(|chi| Cell { sector: s, chi }))
            .collect();
        let vect: Vec<Cell> = model
            .q_sectors()
            .iter()
            .flat_map(|&s| [1.0, -1.0].map(|chi| Cell { sector: s, chi }))
            .collect();
        let pa = permutations(4);
        let mut out = Vec::new();
        for pa_ax in &pa {
            for pa_q in &pa {
                let mut cells = [axial[0]; 8];
                for (k, &h) in AXIAL_INDICES.iter().enumerate() {
                    cells[h - 1] = axial[pa_ax[k]];
                }
                for (k, &h) in Q_INDICES.iter().enumerate() {
                    cells[h - 1] = vect[pa_q[k]];
                }
                if parity == ParityRule::Printed && (0..8).any(|i| cells[i].chi != PRINTED_PARITY[i]) {
                    continue;
                }
                out.push(SectorAssignment { model, cells });
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Product table `i * j` on the indices `1..=8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTable {
    prod: [[usize; 8]; 8],
    pub identity: usize,
}

impl IndexTable {
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.prod[i - 1][j - 1]
    }

    pub fn mul3(&self, i: usize, j: usize, k: usize) -> usize {
        self.mul(self.mul(i, j), k)
    }
}

// ---------------------------------------------------------------------------
// Projections and directions

/// `P_E(X) = ¼(X + s1 Q1 X Q1^-1 + s2 Q2 X Q2^-1 + s1 s2 K X K^-1)` with the
/// signs of the sector of `E`.
pub fn project(x: &Mat, base: &CliffordBase, e: Elem) -> Mat {
    let (s1, s2) = e.signs();
    let c1 = &base.q1 * x * -&base.q1;
    let c2 = &base.q2 * x * -&base.q2;
    let ck = &base.axis * x * -&base.axis;
    (x + c1 * c(s1, 0.0) + c2 * c(s2, 0.0) + ck * c(s1 * s2, 0.0)) * c(0.25, 0.0)
}

/// The four sector projections in the order `I, Q1, Q2, K`.
pub fn sector_project(x: &Mat, base: &CliffordBase) -> [Mat; 4] {
    Elem::ALL.map(|e| project(x, base, e))
}

/// `((1 + t r1) Q1, (1 + t r2) Q2)`.
pub fn displaced(base: &CliffordBase, r1: &Mat, r2: &Mat, t: f64) -> Pair {
    let id = eye(base.dim);
    Pair::new((&id + r1 * c(t, 0.0)) * &base.q1, (&id + r2 * c(t, 0.0)) * &base.q2)
}

/// The perturbation `(r1, r2)` realising `r̂_h = x` and every other variable zero.
pub fn direction(base: &CliffordBase, asg: &SectorAssignment, h: usize, x: &Mat) -> (Mat, Mat) {
    let cell = asg.cell(h);
    (base.elem(cell.sector.e1) * x, base.elem(cell.sector.e2) * x * c(cell.chi, 0.0))
}

/// Direction `i` as a curve `t -> pair`.
pub fn canonical_directions(base: &CliffordBase, asg: &SectorAssignment) -> Vec<(Mat, Mat)> {
    (1..=8).map(|h| direction(base, asg, h, &eye(base.dim))).collect()
}

/// `r̂_h = ½(P_{E1(h)}(r1) + χ_h P_{E2(h)}(r2))`.
pub fn rhat(base: &CliffordBase, asg: &SectorAssignment, r1: &Mat, r2: &Mat) -> [Mat; 8] {
    std::array::from_fn(|i| {
        let cell = asg.cell(i + 1);
        (project(r1, base, cell.sector.e1) + project(r2, base, cell.sector.e2) * c(cell.chi, 0.0)) * c(0.5, 0.0)
    })
}

// ---------------------------------------------------------------------------
// Rows

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    S0,
    S1,
    S2,
    S12,
}

impl Component {
    pub fn for_kind(kind: Kind) -> &'static [Component] {
        match kind {
            Kind::Scalar => &[Component::S0],
            Kind::Pseudoscalar => &[Component::S12],
            Kind::Vectorial => &[Component::S1, Component::S2],
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Component::S0 => Kind::Scalar,
            Component::S12 => Kind::Pseudoscalar,
            _ => Kind::Vectorial,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::S0 => "[0]",
            Component::S1 => "[1]",
            Component::S2 => "[2]",
            Component::S12 => "[12]",
        })
    }
}

impl std::str::FromStr for Component {
    type Err = FqError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim_matches(|c| c == '[' || c == ']') {
            "0" => Ok(Component::S0),
            "1" => Ok(Component::S1),
            "2" => Ok(Component::S2),
            "12" => Ok(Component::S12),
            _ => Err(FqError::ConfigInvalid(format!("unknown component `{s}`"))),
        }
    }
}

/// The output normalized against the base: scalars as is, pseudoscalars
/// divided by `K`, component `i` of a pair divided by `Q_i`.
pub fn readout(v: &Value, comp: Component, base: &CliffordBase) -> Result<Mat> {
    match (comp, v) {
        (Component::S0, Value::Mat(m)) => Ok(m.clone()),
        (Component::S12, Value::Mat(m)) => Ok(m * -&base.axis),
        (Component::S1, Value::Pair(p)) => Ok(&p.a1 * -&base.q1),
        (Component::S2, Value::Pair(p)) => Ok(&p.a2 * -&base.q2),
        _ => Err(FqError::ExtractionFailure(format!("component {comp} does not match the output"))),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionRow {
    pub component: Component,
    pub p0: f64,
    pub p1: [f64; 8],
    /// Largest absolute misfit of the least-squares model.
    pub residual: f64,
}

/// Central-difference derivatives along the eight raw directions `r_c = t E`
/// (component `c`, element `E`), for every output component.
#[derive(Debug, Clone)]
pub struct Jacobian {
    pub component: Component,
    pub p0: f64,
    /// Index `4 c + e`.
    pub cols: Vec<Mat>,
}

/// First and second Taylor terms of `t -> readout(xi(pair(t)))` at 0.
fn taylor(xi: &FqOp, base: &CliffordBase, r1: &Mat, r2: &Mat, comps: &[Component], step: f64) -> Result<Vec<(Mat, Mat)>> {
    let eval = |t: f64| -> Result<Vec<Mat>> {
        let v = xi.eval(&displaced(base, r1, r2, t))?;
        comps.iter().map(|&cp| readout(&v, cp, base)).collect()
    };
    let f0 = eval(0.0)?;
    let diff = |h: f64| -> Result<Vec<(Mat, Mat)>> {
        let (fp, fm) = (eval(h)?, eval(-h)?);
        Ok((0..comps.len())
            .map(|k| {
                let d1 = (&fp[k] - &fm[k]) * c(0.5 / h, 0.0);
                let d2 = (&fp[k] - &f0[k] * c(2.0, 0.0) + &fm[k]) * c(0.5 / (h * h), 0.0);
                (d1, d2)
            })
            .collect())
    };
    let a = diff(step)?;
    let b = diff(step / 2.0)?;
    let k = c(1.0 / 3.0, 0.0);
    Ok(a
        .into_iter()
        .zip(b)
        .map(|((a1, a2), (b1, b2))| ((b1 * c(4.0, 0.0) - a1) * k, (b2 * c(4.0, 0.0) - a2) * k))
        .collect())
}

fn base_value(xi: &FqOp, base: &CliffordBase) -> Result<Value> {
    xi.eval(&base.pair())
}

pub fn jacobian(xi: &FqOp, base: &CliffordBase, step: f64) -> Result<Vec<Jacobian>> {
    let comps = Component::for_kind(xi.kind);
    let v0 = base_value(xi, base)?;
    let mut out: Vec<Jacobian> = comps
        .iter()
        .map(|&cp| Ok(Jacobian { component: cp, p0: mean_diag(&readout(&v0, cp, base)?), cols: Vec::new() }))
        .collect::<Result<_>>()?;
    let z = Mat::zeros(base.dim, base.dim);
    for which in 0..2 {
        for e in Elem::ALL {
            let em = base.elem(e);
            let (r1, r2) = if which == 0 { (&em, &z) } else { (&z, &em) };
            let t = taylor(xi, base, r1, r2, comps, step)?;
            for (j, (d1, _)) in out.iter_mut().zip(t) {
                j.cols.push(d1);
            }
        }
    }
    Ok(out)
}

/// Real least squares on stacked real and imaginary parts.
struct Lsq {
    rows: Vec<f64>,
    rhs: Vec<f64>,
    ncols: usize,
}

impl Lsq {
    fn new(ncols: usize) -> Self {
        Lsq { rows: Vec::new(), rhs: Vec::new(), ncols }
    }

    /// One matrix equation `Σ_k x_k cols[k] = target`.
    fn push(&mut self, cols: &[Mat], target: &Mat) {
        for (idx, t) in target.iter().enumerate() {
            for part in 0..2 {
                for col in cols {
                    let z = col.as_slice()[idx];
                    self.rows.push(if part == 0 { z.re } else { z.im });
                }
                self.rhs.push(if part == 0 { t.re } else { t.im });
            }
        }
    }

    fn matrix(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.rhs.len(), self.ncols, &self.rows)
    }

    fn rank(&self) -> usize {
        let sv = self.matrix().singular_values();
        let top = sv.max();
        sv.iter().filter(|&&s| s > 1e-9 * top.max(1e-300)).count()
    }

    fn solve(&self) -> Result<(Vec<f64>, f64)> {
        let a = self.matrix();
        let b = DVector::from_vec(self.rhs.clone());
        let svd = a.clone().svd(true, true);
        let x = svd.solve(&b, 1e-12).map_err(|e| FqError::ExtractionFailure(e.to_string()))?;
        let res = (&a * &x - &b).amax();
        Ok((x.iter().copied().collect(), res))
    }
}

/// Fit `Σ_h p_h r̂_h` to the Jacobian under an assignment.
pub fn fit_row(jac: &Jacobian, base: &CliffordBase, asg: &SectorAssignment) -> Result<ExpansionRow> {
    let mut ls = Lsq::new(8);
    let z = Mat::zeros(base.dim, base.dim);
    for which in 0..2 {
        for (k, e) in Elem::ALL.iter().enumerate() {
            let em = base.elem(*e);
            let (r1, r2) = if which == 0 { (&em, &z) } else { (&z, &em) };
            ls.push(&rhat(base, asg, r1, r2), &jac.cols[4 * which + k]);
        }
    }
    let (x, residual) = ls.solve()?;
    let mut p1 = [0.0; 8];
    p1.copy_from_slice(&x);
    Ok(ExpansionRow { component: jac.component, p0: jac.p0, p1, residual })
}

pub fn extract_row(xi: &FqOp, base: &CliffordBase, asg: &SectorAssignment, step: f64) -> Result<Vec<ExpansionRow>> {
    jacobian(xi, base, step)?.iter().map(|j| fit_row(j, base, asg)).collect()
}

// ---------------------------------------------------------------------------
// Calibration

/// An operation with its printed row in one component; entries beyond the
/// printed ones are not compared.
#[derive(Debug, Clone)]
pub struct Anchor {
    pub op: FqOp,
    pub component: Component,
    pub row: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct Calibration {
    pub assignment: SectorAssignment,
    /// Assignments examined.
    pub searched: usize,
    /// Worst entry-wise misfit of the winner over the anchors.
    pub misfit: f64,
}

pub const CALIBRATION_TOL: f64 = 1e-5;

pub fn calibrate(
    base: &CliffordBase,
    anchors: &[Anchor],
    models: &[Model],
    parity: ParityRule,
    step: f64,
) -> Result<Calibration> {
    let jacs: Vec<(Jacobian, &Anchor)> = anchors
        .iter()
        .map(|a| {
            let j = jacobian(&a.op, base, step)?
                .into_iter()
                .find(|j| j.component == a.component)
                .ok_or_else(|| FqError::ExtractionFailure(format!("{} has no component {}", a.op.name, a.component)))?;
            Ok((j, a))
        })
        .collect::<Result<_>>()?;
    let mut searched = 0;
    let mut hits: Vec<(SectorAssignment, f64)> = Vec::new();
    for &m in models {
        for asg in SectorAssignment::enumerate(m, parity) {
            searched += 1;
            let mut worst: f64 = 0.0;
            for (j, a) in &jacs {
                let row = fit_row(j, base, &asg)?;
                for (k, &want) in a.row.iter().enumerate() {
                    worst = worst.max((row.p1[k] - want).abs());
                }
                if worst > CALIBRATION_TOL {
                    break;
                }
            }
            if worst <= CALIBRATION_TOL {
                hits.push((asg, worst));
            }
        }
    }
    match hits.len() {
        0 => Err(FqError::CalibrationFailed),
        1 => {
            let (assignment, misfit) = hits.pop().unwrap();
            Ok(Calibration { assignment, searched, misfit })
        }
        n => Err(FqError::CalibrationAmbiguous(n)),
    }
}

// ---------------------------------------------------------------------------
// Second order

#[derive(Debug, Clone, PartialEq)]
pub struct SecondOrder {
    pub component: Component,
    pub p0: f64,
    pub p1: [f64; 8],
    /// `p2[h-1][j-1]` multiplies the word `r̂_h r̂_j`.
    pub p2: [[f64; 8]; 8],
    pub residual1: f64,
    pub residual2: f64,
}

impl SecondOrder {
    pub fn p(&self, h: usize) -> f64 {
        self.p1[h - 1]
    }

    pub fn pp(&self, h: usize, j: usize) -> f64 {
        self.p2[h - 1][j - 1]
    }

    pub fn cell(&self, h: usize, j: usize) -> SecondOrderCell {
        SecondOrderCell { h, j, component: self.component, value_hj: self.pp(h, j), value_jh: self.pp(j, h) }
    }

    pub fn row(&self) -> ExpansionRow {
        ExpansionRow { component: self.component, p0: self.p0, p1: self.p1, residual: self.residual1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondOrderCell {
    pub h: usize,
    pub j: usize,
    pub component: Component,
    pub value_hj: f64,
    pub value_jh: f64,
}

impl SecondOrderCell {
    pub fn symmetrized(&self) -> f64 {
        self.value_hj + self.value_jh
    }
}

pub const SECOND_ORDER_SAMPLES: usize = 8;

/// Commutant-valued coefficients for the eight raw directions.
fn probe(base: &CliffordBase, rng: &mut ChaCha8Rng) -> (Mat, Mat) {
    let mut r = [Mat::zeros(base.dim, base.dim), Mat::zeros(base.dim, base.dim)];
    for ri in r.iter_mut() {
        for e in Elem::ALL {
            let mut beta = Mat::zeros(base.dim, base.dim);
            for b in &base.commutant {
                beta += b * c(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
            }
            *ri += base.elem(e) * beta;
        }
    }
    let [r1, r2] = r;
    (r1, r2)
}

/// Word-resolved expansion to second order from random commutant-valued
/// probes.  Needs a nonabelian commutant.
pub fn extract_second(
    xi: &FqOp,
    base: &CliffordBase,
    asg: &SectorAssignment,
    step: f64,
    seed: u64,
) -> Result<Vec<SecondOrder>> {
    let comps = Component::for_kind(xi.kind);
    let v0 = base_value(xi, base)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ls1: Vec<Lsq> = comps.iter().map(|_| Lsq::new(8)).collect();
    let mut ls2: Vec<Lsq> = comps.iter().map(|_| Lsq::new(64)).collect();
    for _ in 0..SECOND_ORDER_SAMPLES {
        let (r1, r2) = probe(base, &mut rng);
        let rh = rhat(base, asg, &r1, &r2);
        let words: Vec<Mat> = (0..64).map(|k| &rh[k / 8] * &rh[k % 8]).collect();
        let t = taylor(xi, base, &r1, &r2, comps, step)?;
        for (k, (d1, d2)) in t.iter().enumerate() {
            ls1[k].push(&rh, d1);
            ls2[k].push(&words, d2);
        }
    }
    if let Some(l) = ls2.first() {
        let r = l.rank();
        if r < 64 {
            return Err(FqError::ProbeDegenerate(format!("word system has rank {r} of 64 on {}", base.kind)));
        }
    }
    let mut out = Vec::new();
    for (k, &cp) in comps.iter().enumerate() {
        let (x1, residual1) = ls1[k].solve()?;
        let (x2, residual2) = ls2[k].solve()?;
        let mut p1 = [0.0; 8];
        p1.copy_from_slice(&x1);
        let p2 = std::array::from_fn(|h| std::array::from_fn(|j| x2[8 * h + j]));
        out.push(SecondOrder { component: cp, p0: mean_diag(&readout(&v0, cp, base)?), p1, p2, residual1, residual2 });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{make_base, BaseKind};
    use crate::mat::dist;

    #[test]
    fn reference_table_is_klein_cubed() {
        let t = SectorAssignment::reference().table().unwrap();
        assert_eq!(t.identity, 3);
        for i in 1..=8 {
            assert_eq!(t.mul(i, i), 3);
            assert_eq!(t.mul3(6, 6, i), i);
            for j in 1..=8 {
                assert_eq!(t.mul(i, j), t.mul(j, i));
            }
        }
        // Bit codes 3=000 4=001 1=100 2=101 7=010 8=011 5=110 6=111.
        assert_eq!(t.mul(1, 7), 5);
        assert_eq!(t.mul(2, 4), 1);
        assert_eq!(t.mul(6, 1), 8);
    }

    #[test]
    fn projections_partition() {
        let b = make_base(BaseKind::Pauli2);
        let x = Mat::from_fn(2, 2, |i, j| c(i as f64 + 0.3, j as f64 - 0.7));
        let s = sector_project(&x, &b);
        let sum = s.iter().fold(Mat::zeros(2, 2), |a, m| a + m);
        assert!(dist(&sum, &x) < 1e-14);
        assert!(dist(&sector_project(&eye(2), &b)[0], &eye(2)) < 1e-15);
        assert!(dist(&sector_project(&b.axis, &b)[3], &b.axis) < 1e-15);
    }

    #[test]
    fn axial_directions_isolate_rhat() {
        let b = make_base(BaseKind::Tensor(2));
        let asg = SectorAssignment::reference();
        let dirs = canonical_directions(&b, &asg);
        for h in [3, 4, 5, 6] {
            let (r1, r2) = &dirs[h - 1];
            let rh = rhat(&b, &asg, r1, r2);
            for (k, m) in rh.iter().enumerate() {
                let want = if k + 1 == h { r1.clone() } else { Mat::zeros(4, 4) };
                assert!(dist(m, &want) < 1e-14);
            }
        }
        // r1 = Σ r̂, r2 = Σ χ r̂ for every direction.
        let chi = asg.chi();
        for (r1, r2) in &dirs {
            let rh = rhat(&b, &asg, r1, r2);
            let s1 = rh.iter().fold(Mat::zeros(4, 4), |a, m| a + m);
            let s2 = rh.iter().zip(chi).fold(Mat::zeros(4, 4), |a, (m, x)| a + m * c(x, 0.0));
            assert!(dist(&s1, r1) < 1e-14 && dist(&s2, r2) < 1e-14);
        }
    }

    #[test]
    fn directions_independent() {
        let b = make_base(BaseKind::Pauli2);
        let dirs = canonical_directions(&b, &SectorAssignment::reference());
        let g = DMatrix::<f64>::from_fn(8, 8, |i, j| {
            let (a, b2) = (&dirs[i], &dirs[j]);
            ((a.0.adjoint() * &b2.0).trace() + (a.1.adjoint() * &b2.1).trace()).re
        });
        assert_eq!(g.rank(1e-10), 8);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(SectorAssignment::enumerate(Model::Mixed, ParityRule::Free).len(), 576);
        assert_eq!(SectorAssignment::enumerate(Model::Mixed, ParityRule::Printed).len(), 16);
    }
}
