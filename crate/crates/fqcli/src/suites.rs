//! The five check suites.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use fqcore::clifford::{clifford_residual, make_base, random_monoaxial, random_pair_near, BaseKind, CliffordBase, Pair};
use fqcore::error::{FqError, Result as FqResult};
use fqcore::fqops::identities::catalog;
use fqcore::fqops::{
    axis_central, axis_left, axis_right, biaxiality, biaxiality_inv, circular_decomposition, extend, extend_x_forms, op,
    orth_mono_on_monoaxial, registry, ExtMode, FqOp, Kind,
};
use fqcore::hyperscaling::Coefficients;
use fqcore::mat::{anticommutator, c, commutator, dist, eye, norm, Mat};
use fqcore::matfun::{geo_mean, geo_mean_forms, geo_mean_quad, inv, pol};
use fqcore::mixedbase::{
    calibrate, extract_row, extract_second, Anchor, Calibration, Component, Model, ParityRule, SecondOrder, SectorAssignment,
    CALIBRATION_TOL,
};
use fqcore::statements::{self, evaluate, row_residual, RowEntry, Statement};
use fqcore::Exec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{sample_seed, RunConfig, Suite};
use crate::report::{Check, Report};
use crate::CliError;

/// Operations whose tables pin the index assignment.
pub const CALIBRATION_OPS: [&str; 10] = ["A_L", "A_R", "B", "T", "O^fSy", "M_L", "M_R", "L^fx", "D^fx", "U^fx"];
/// Extra anchor that separates the two assignments the tables alone allow.
pub const CALIBRATION_EXTRA: &str = "-A1^2";

pub const GEO_NODES: usize = 128;
pub const GEO_PAIRS: usize = 20;
pub const GEO_PD_TOL: f64 = 1e-8;
pub const GEO_SKEW_TOL: f64 = 1e-9;
pub const MONO_SAMPLES: usize = 50;
pub const MONO_TOL: f64 = 1e-9;
pub const CLOSURE_TOL: f64 = 1e-8;
pub const EXT_SAMPLES: usize = 20;

/// Inputs for the extension suite.
pub const EXT_INPUTS: [&str; 15] =
    ["1", "L", "-A1^2", "B", "V", "Id", "T", "O^fSy", "M_C", "C", "T_RR", "A_C", "A_L", "D", "A1 A2"];

// sample streams, so suites never share random pairs by accident
const GEO_STREAM: u64 = 0x6e0 << 32;
const MONO_STREAM: u64 = 0x3a0 << 32;
const SECOND_STREAM: u64 = 0x2d0 << 32;

pub struct Ctx {
    pub cfg: RunConfig,
    pub exec: Exec,
    pub kinds: Vec<BaseKind>,
    calibration: OnceLock<Result<Calibration, String>>,
}

impl Ctx {
    pub fn new(cfg: RunConfig, exec: Exec) -> Result<Ctx, CliError> {
        let cfg = cfg.validate()?;
        let kinds = cfg.base_kinds()?;
        Ok(Ctx { cfg, exec, kinds, calibration: OnceLock::new() })
    }

    pub fn calibration(&self) -> &Result<Calibration, String> {
        self.calibration.get_or_init(|| {
            let base = make_base(BaseKind::Pauli2);
            let anchors = calibration_anchors().map_err(|e| e.to_string())?;
            calibrate(&base, &anchors, &[Model::Pure, Model::Mixed], ParityRule::Free, self.cfg.step).map_err(|e| e.to_string())
        })
    }

    fn assignment(&self) -> Result<SectorAssignment, FqError> {
        self.calibration()
            .as_ref()
            .map(|c| c.assignment.clone())
            .map_err(|e| FqError::ExtractionFailure(format!("calibration unavailable: {e}")))
    }

    fn seeded<T: Send>(&self, n: usize, stream: u64, f: impl Fn(u64) -> FqResult<T> + Sync + Send) -> (Vec<T>, Vec<FqError>) {
        let jobs: Vec<u64> = self.cfg.seeds.iter().flat_map(|&s| (0..n as u64).map(move |k| sample_seed(s, stream | k))).collect();
        let mut ok = Vec::new();
        let mut bad = Vec::new();
        for r in self.exec.map(&jobs, |&s| f(s)) {
            match r {
                Ok(x) => ok.push(x),
                Err(e) => bad.push(e),
            }
        }
        (ok, bad)
    }

    fn random_pairs(&self, base: &CliffordBase, n: usize) -> (Vec<Pair>, Vec<FqError>) {
        let asg = SectorAssignment::reference();
        let r = self.cfg.radius_for(base.kind);
        self.seeded(n, 0, |s| random_pair_near(base, &asg, r, s))
    }

    fn monoaxial_pairs(&self, base: &CliffordBase, n: usize) -> (Vec<Pair>, Vec<FqError>) {
        let asg = SectorAssignment::reference();
        let r = self.cfg.radius_for(base.kind);
        self.seeded(n, MONO_STREAM, |s| random_monoaxial(base, &asg, r, s))
    }

    fn second_seed(&self) -> u64 {
        sample_seed(self.cfg.seeds[0], SECOND_STREAM)
    }
}

/// Largest residual over `items`; the first error or non-finite value wins.
pub fn max_over<T>(items: &[T], f: impl Fn(&T) -> FqResult<f64>) -> FqResult<f64> {
    let mut m: f64 = 0.0;
    for x in items {
        let r = f(x)?;
        if !r.is_finite() {
            return Ok(r);
        }
        m = m.max(r);
    }
    Ok(m)
}

fn sampling_check(suite: Suite, id: String, n: usize, bad: &[FqError]) -> Option<Check> {
    let e = bad.first()?;
    Some(Check::le(suite, id, "seeded samples drawn", 0.0, Err(e.clone())).with_detail(format!("{} of {n} samples rejected", bad.len())))
}

pub fn calibration_anchors() -> FqResult<Vec<Anchor>> {
    let mut v: Vec<Anchor> = statements::tables()?
        .into_iter()
        .filter(|t| CALIBRATION_OPS.contains(&t.op.as_str()))
        .map(|t| Anchor { op: op(&t.op), component: t.component, row: t.row.to_vec() })
        .collect();
    let s = statements::all()?
        .into_iter()
        .find(|s| s.ops.iter().any(|o| o == CALIBRATION_EXTRA))
        .ok_or_else(|| FqError::ExtractionFailure(format!("no statement row for {CALIBRATION_EXTRA}")))?;
    let row = s
        .row
        .as_deref()
        .unwrap_or_default()
        .iter()
        .map(|e| match e {
            RowEntry::Num(x) => Ok(*x),
            _ => Err(FqError::ExtractionFailure(format!("row of {CALIBRATION_EXTRA} is not numeric"))),
        })
        .collect::<FqResult<Vec<f64>>>()?;
    let component = s.formula.component().unwrap_or(Component::S0);
    v.push(Anchor { op: op(CALIBRATION_EXTRA), component, row });
    Ok(v)
}

pub fn run(cfg: RunConfig, exec: Exec) -> Result<Report, CliError> {
    let ctx = Ctx::new(cfg, exec)?;
    let t0 = Instant::now();
    let mut checks = Vec::new();
    let mut times = Vec::new();
    for &s in &ctx.cfg.suites {
        let t = Instant::now();
        checks.extend(run_suite(&ctx, s));
        times.push((s, t.elapsed()));
    }
    Report::new(ctx.cfg.echo(), checks, t0.elapsed(), times)
}

pub fn run_suite(ctx: &Ctx, suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Identities => identities(ctx),
        Suite::Expansion => expansion(ctx),
        Suite::Hyperscaling => hyperscaling(ctx),
        Suite::Monoaxial => monoaxial(ctx),
        Suite::Extensions => extensions(ctx),
    }
}

// ---------------------------------------------------------------------------
// identities

fn identities(ctx: &Ctx) -> Vec<Check> {
    const S: Suite = Suite::Identities;
    let cat = catalog();
    let mut out = Vec::new();
    for &kind in &ctx.kinds {
        let base = make_base(kind);
        let n = ctx.cfg.samples_for(kind);
        let (pairs, bad) = ctx.random_pairs(&base, n);
        out.extend(sampling_check(S, format!("identities.{kind}.sampling"), n * ctx.cfg.seeds.len(), &bad));
        let res = ctx.exec.map(&cat, |id| max_over(&pairs, |p| id.residual(p)));
        for (id, r) in cat.iter().zip(res) {
            out.push(Check::le(S, format!("identities.{kind}.{}", id.id), id.anchor.clone(), ctx.cfg.tol_identity, r));
        }
    }
    out.extend(geomean(ctx));
    out
}

fn rand_mat(n: usize, rng: &mut ChaCha8Rng) -> Mat {
    Mat::from_fn(n, n, |_, _| c(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
}

/// `X X* + I/2`.
pub fn random_pd(n: usize, rng: &mut ChaCha8Rng) -> Mat {
    let x = rand_mat(n, rng);
    &x * x.adjoint() + eye(n) * c(0.5, 0.0)
}

/// `S Q S^-1` with `S` near the identity.
pub fn random_skew_involution(q: &Mat, rng: &mut ChaCha8Rng) -> FqResult<Mat> {
    let n = q.nrows();
    let s = eye(n) + rand_mat(n, rng) * c(0.3, 0.0);
    Ok(&s * q * inv(&s)?)
}

fn geomean(ctx: &Ctx) -> Vec<Check> {
    const S: Suite = Suite::Identities;
    let q = make_base(BaseKind::Tensor(2)).q1;
    let mut pd = Vec::new();
    let mut sk = Vec::new();
    for &seed in &ctx.cfg.seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, GEO_STREAM));
        for _ in 0..GEO_PAIRS {
            pd.push((random_pd(3, &mut rng), random_pd(3, &mut rng)));
            sk.push(random_skew_involution(&q, &mut rng).and_then(|a| Ok((a, random_skew_involution(&q, &mut rng)?))));
        }
    }
    let sk: FqResult<Vec<(Mat, Mat)>> = sk.into_iter().collect();
    let half = |a: &Mat, b: &Mat| pol(&((a + b) * c(0.5, 0.0)));
    vec![
        Check::le(
            S,
            "identities.geomean.pd.quad",
            "mean over t of (A^-1 cos^2 t + B^-1 sin^2 t)^-1 = A(A^-1 B)^1/2",
            GEO_PD_TOL,
            max_over(&pd, |(a, b)| Ok(dist(&geo_mean_quad(a, b, GEO_NODES)?, &geo_mean(a, b)?))),
        ),
        Check::le(
            S,
            "identities.geomean.pd.forms",
            "A(A^-1 B)^1/2 = B(B^-1 A)^1/2 = (A B^-1)^1/2 B = (B A^-1)^1/2 A",
            GEO_PD_TOL,
            max_over(&pd, |(a, b)| {
                let f = geo_mean_forms(a, b)?;
                Ok(f[1..].iter().map(|x| dist(x, &f[0])).fold(0.0, f64::max))
            }),
        ),
        Check::le(
            S,
            "identities.geomean.skew.quad",
            "mean over t of (A^-1 cos^2 t + B^-1 sin^2 t)^-1 = pol((A + B)/2)",
            GEO_SKEW_TOL,
            sk.as_ref().map_err(Clone::clone).and_then(|v| max_over(v, |(a, b)| Ok(dist(&geo_mean_quad(a, b, GEO_NODES)?, &half(a, b)?)))),
        ),
        Check::le(
            S,
            "identities.geomean.skew.closed",
            "A(A^-1 B)^1/2 = pol((A + B)/2)",
            GEO_SKEW_TOL,
            sk.as_ref().map_err(Clone::clone).and_then(|v| max_over(v, |(a, b)| Ok(dist(&geo_mean(a, b)?, &half(a, b)?)))),
        ),
    ]
}

// ---------------------------------------------------------------------------
// expansion

fn fmt_row(r: &[f64]) -> String {
    r.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join("&")
}

fn row_of(xi: &FqOp, comp: Component, base: &CliffordBase, asg: &SectorAssignment, step: f64) -> FqResult<fqcore::ExpansionRow> {
    extract_row(xi, base, asg, step)?
        .into_iter()
        .find(|r| r.component == comp)
        .ok_or_else(|| FqError::ExtractionFailure(format!("{} has no component {comp}", xi.name)))
}

fn expansion(ctx: &Ctx) -> Vec<Check> {
    const S: Suite = Suite::Expansion;
    let base = make_base(BaseKind::Pauli2);
    let mut out = Vec::new();
    let cal = ctx.calibration();
    let mut cal_check = Check::le(
        S,
        "expansion.calibration",
        "unique index assignment reproducing the anchor tables",
        CALIBRATION_TOL,
        cal.as_ref().map(|c| c.misfit).map_err(|e| FqError::ExtractionFailure(e.clone())),
    );
    if let Ok(c) = cal {
        let same = c.assignment == SectorAssignment::reference();
        cal_check = cal_check.with_detail(format!("{} assignments searched; equals reference: {same}", c.searched));
    }
    out.push(cal_check);
    let asg = ctx.assignment();
    let step = ctx.cfg.step;

    match statements::tables() {
        Ok(rows) => {
            let res = ctx.exec.map(&rows, |t| {
                let asg = asg.clone()?;
                let r = row_of(&op(&t.op), t.component, &base, &asg, step)?;
                Ok(r.p1.iter().zip(&t.row).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            });
            for (t, r) in rows.iter().zip(res) {
                let anchor = format!("{} {}: {}", t.op, t.component, fmt_row(&t.row));
                out.push(Check::le(S, format!("expansion.table.{}{}", t.op, t.component), anchor, ctx.cfg.tol_row, r));
            }
        }
        Err(e) => out.push(Check::le(S, "expansion.table.data", "table data parses", 0.0, Err(e))),
    }

    match statements::all() {
        Ok(all) => {
            let jobs: Vec<(&Statement, &String)> =
                all.iter().filter(|s| s.row.is_some()).flat_map(|s| s.ops.iter().map(move |o| (s, o))).collect();
            let res = ctx.exec.map(&jobs, |(s, o)| {
                let asg = asg.clone()?;
                let comp = s.formula.component().ok_or_else(|| FqError::ExtractionFailure("statement without component".into()))?;
                let r = row_of(&op(o), comp, &base, &asg, step)?;
                Ok(row_residual(s.row.as_deref().unwrap_or_default(), r.p0, &r.p1))
            });
            for ((s, o), r) in jobs.iter().zip(res) {
                let row: Vec<String> = s.row.iter().flatten().map(|e| e.to_string()).collect();
                let anchor = format!("{o}: {} → {}", s.text, row.join(" "));
                out.push(Check::le(S, format!("expansion.row.{}.{o}", s.source()), anchor, ctx.cfg.tol_row, r));
            }
        }
        Err(e) => out.push(Check::le(S, "expansion.row.data", "statement data parses", 0.0, Err(e))),
    }
    out
}

// ---------------------------------------------------------------------------
// hyperscaling

const PRIMARY_LISTS: [&str; 3] = ["scalar", "vectorial", "pseudoscalar"];

fn coefficients(all: &BTreeMap<String, FqResult<Vec<SecondOrder>>>, name: &str, comp: Component) -> FqResult<Coefficients> {
    let so = all.get(name).ok_or_else(|| FqError::ExtractionFailure(format!("unknown operation `{name}`")))?;
    let so = so.as_ref().map_err(Clone::clone)?;
    so.iter()
        .find(|s| s.component == comp)
        .map(Coefficients::from)
        .ok_or_else(|| FqError::ExtractionFailure(format!("{name} has no component {comp}")))
}

fn hyperscaling(ctx: &Ctx) -> Vec<Check> {
    const S: Suite = Suite::Hyperscaling;
    let tol = ctx.cfg.tol_decay;
    let fail = |id: &str, e: FqError| vec![Check::le(S, format!("hyperscaling.{id}"), "prerequisite", 0.0, Err(e))];
    let asg = match ctx.assignment() {
        Ok(a) => a,
        Err(e) => return fail("calibration", e),
    };
    let table = match asg.table() {
        Ok(t) => t,
        Err(e) => return fail("calibration", e),
    };
    let stmts = match statements::all() {
        Ok(s) => s,
        Err(e) => return fail("data", e),
    };
    let base = make_base(BaseKind::Tensor(2));
    let reg = registry();
    let seed = ctx.second_seed();
    let res = ctx.exec.map(&reg, |o| extract_second(o, &base, &asg, ctx.cfg.step, seed));
    let coeffs: BTreeMap<String, FqResult<Vec<SecondOrder>>> = reg.iter().map(|o| o.name.clone()).zip(res).collect();
    let eval = |s: &Statement, name: &str| -> FqResult<statements::Evaluation> {
        let comp = s.formula.component().ok_or_else(|| FqError::ExtractionFailure("statement without component".into()))?;
        evaluate(s, &coefficients(&coeffs, name, comp)?, &table)
    };

    // closed-form cases, by component
    let mut extremal: BTreeMap<Component, Vec<String>> = BTreeMap::new();
    for s in stmts.iter().filter(|s| PRIMARY_LISTS.contains(&s.list.as_str())) {
        if let Some(comp) = s.formula.component() {
            extremal.entry(comp).or_default().extend(s.ops.iter().cloned());
        }
    }

    let mut out = Vec::new();
    for s in &stmts {
        let comp = s.formula.component();
        let on_comp: Vec<&str> =
            reg.iter().filter(|o| comp.is_some_and(|c| Component::for_kind(o.kind).contains(&c))).map(|o| o.name.as_str()).collect();
        let src = s.source();
        match s.list.as_str() {
            _ if !s.ops.is_empty() => {
                let primary = PRIMARY_LISTS.contains(&s.list.as_str());
                let kind = if primary { "constellation" } else { "example" };
                for o in &s.ops {
                    let r = eval(s, o).map(|e| e.lhs.max(e.rhs.unwrap_or(0.0)));
                    let ch = Check::le(S, format!("hyperscaling.{kind}.{src}.{o}"), format!("{} @ {o}", s.text), tol, r);
                    out.push(if primary { ch } else { ch.informational() });
                }
            }
            "inconsistent" => {
                for o in comp.and_then(|c| extremal.get(&c)).into_iter().flatten() {
                    let r = eval(s, o).map(|e| e.lhs);
                    out.push(Check::gt(S, format!("hyperscaling.inconsistent.{}.{o}", s.text), format!("not {} @ {o}", s.text), tol, r));
                }
            }
            "trivial" => {
                let r = max_over(&on_comp, |o| eval(s, o).map(|e| e.lhs));
                out.push(Check::le(S, format!("hyperscaling.trivial.{}", s.text), s.text.clone(), tol, r).with_detail(format!("{} operations", on_comp.len())));
            }
            list => {
                // generic statements: tally over every operation of the component
                let conj = list == "conjugation";
                let mut good = 0;
                let mut not = Vec::new();
                let mut errs = 0;
                for o in &on_comp {
                    match eval(s, o) {
                        Ok(e) if (conj && e.lhs_holds(tol)) || (!conj && e.consistent(tol, ctx.cfg.tol_row)) => good += 1,
                        Ok(_) => not.push(*o),
                        Err(_) => errs += 1,
                    }
                }
                let mut detail = format!("{good} of {} operations {}", on_comp.len(), if conj { "satisfy it" } else { "consistent" });
                if !not.is_empty() {
                    detail.push_str(&format!("; not: {}", not.join(", ")));
                }
                if errs > 0 {
                    detail.push_str(&format!("; {errs} extraction errors"));
                }
                out.push(Check::tally(S, format!("hyperscaling.statement.{src}"), s.text.clone(), tol, not.is_empty() && errs == 0, detail).informational());
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// monoaxial

fn monoaxial(ctx: &Ctx) -> Vec<Check> {
    const S: Suite = Suite::Monoaxial;
    let mut out = Vec::new();
    let mut vops: Vec<FqOp> = registry().into_iter().filter(|o| o.kind == Kind::Vectorial).collect();
    for n in EXT_INPUTS {
        let x = op(n);
        if x.kind == Kind::Vectorial {
            vops.extend([ExtMode::X, ExtMode::Cx, ExtMode::Y, ExtMode::M].map(|m| extend(&x, m)));
        }
    }
    for &kind in &ctx.kinds {
        let base = make_base(kind);
        let (pairs, bad) = ctx.monoaxial_pairs(&base, MONO_SAMPLES);
        out.extend(sampling_check(S, format!("monoaxial.{kind}.sampling"), MONO_SAMPLES * ctx.cfg.seeds.len(), &bad));
        let id = |s: &str| format!("monoaxial.{kind}.{s}");
        out.push(Check::le(S, id("clifford"), "O^mSy A is a Clifford system", MONO_TOL, max_over(&pairs, |p| Ok(clifford_residual(&orth_mono_on_monoaxial(p)?)))));
        out.push(Check::le(
            S,
            id("reconstruct"),
            "A1 = (1 + r3 + r4)Q1, A2 = (1 + r3 - r4)Q2",
            MONO_TOL,
            max_over(&pairs, |p| Ok(circular_decomposition(p)?.reconstruct().dist(p))),
        ));
        out.push(Check::le(
            S,
            id("r3_commutes"),
            "r3 Q1 = Q1 r3, r3 Q2 = Q2 r3",
            MONO_TOL,
            max_over(&pairs, |p| {
                let cd = circular_decomposition(p)?;
                Ok(norm(&commutator(&cd.r3, &cd.q.a1)).max(norm(&commutator(&cd.r3, &cd.q.a2))))
            }),
        ));
        out.push(Check::le(
            S,
            id("r4_anticommutes"),
            "r4 Q1 = -Q1 r4, r4 Q2 = -Q2 r4",
            MONO_TOL,
            max_over(&pairs, |p| {
                let cd = circular_decomposition(p)?;
                Ok(norm(&anticommutator(&cd.r4, &cd.q.a1)).max(norm(&anticommutator(&cd.r4, &cd.q.a2))))
            }),
        ));
        let res = ctx.exec.map(&vops, |o| max_over(&pairs, |p| Ok(dist(&biaxiality(&o.eval_pair(p)?)?, &eye(p.dim())))));
        for (o, r) in vops.iter().zip(res) {
            out.push(Check::le(S, id(&format!("closure.{}", o.name)), format!("B∘{} = 1 on monoaxial pairs", o.name), CLOSURE_TOL, r));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// extensions

/// `(q̂1, q̂2)` of the extension in `mode` for an input of `kind`.
pub fn expected_qhat(kind: Kind, mode: ExtMode) -> Option<(f64, f64)> {
    let base = match kind {
        Kind::Scalar => (0.0, 2.0),
        Kind::Vectorial => (1.0, 1.0),
        Kind::Pseudoscalar => (0.0, 0.0),
    };
    match mode {
        ExtMode::X => Some(base),
        ExtMode::Y => Some((-base.0, -base.1)),
        ExtMode::M => Some((0.0, 0.0)),
        ExtMode::Cx => None,
    }
}

pub fn first_component(kind: Kind) -> Component {
    Component::for_kind(kind)[0]
}

/// Largest coefficient gap over the listed first and second order entries.
fn coeff_gap(a: &SecondOrder, b: &SecondOrder, first: &[usize], second: &[(usize, usize)]) -> f64 {
    let mut g = (a.p0 - b.p0).abs();
    for &h in first {
        g = g.max((a.p(h) - b.p(h)).abs());
    }
    for &(h, j) in second {
        g = g.max((a.pp(h, j) - b.pp(h, j)).abs());
    }
    g
}

fn second(xi: &FqOp, base: &CliffordBase, asg: &SectorAssignment, ctx: &Ctx) -> FqResult<SecondOrder> {
    let comp = first_component(xi.kind);
    extract_second(xi, base, asg, ctx.cfg.step, ctx.second_seed())?
        .into_iter()
        .find(|s| s.component == comp)
        .ok_or_else(|| FqError::ExtractionFailure(format!("{} has no component {comp}", xi.name)))
}

fn ext_checks(ctx: &Ctx, name: &str, gen: &[Pair], mono: &[Pair], asg: &FqResult<SectorAssignment>) -> Vec<Check> {
    const S: Suite = Suite::Extensions;
    let tol = ctx.cfg.tol_identity;
    let xi = op(name);
    let [ex, ecx, ey, em] = [ExtMode::X, ExtMode::Cx, ExtMode::Y, ExtMode::M].map(|m| extend(&xi, m));
    let id = |s: &str| format!("extensions.{name}.{s}");
    let mut out = vec![
        Check::le(
            S,
            id("x.forms"),
            "Ξ(A B^-1) B = B Ξ(B^-1 A) = B^1/2 Ξ(B^-1/2 A B^-1/2) B^1/2",
            tol,
            max_over(gen, |p| {
                let v = ex.eval(p)?;
                Ok(extend_x_forms(&xi, p)?.iter().map(|f| f.dist(&v)).fold(0.0, f64::max))
            }),
        ),
        Check::le(S, id("x.conservative"), "B = 1 ⇒ Ξ^x A = Ξ A", MONO_TOL, max_over(mono, |p| Ok(ex.eval(p)?.dist(&xi.eval(p)?)))),
    ];
    let cx = match xi.kind {
        Kind::Scalar => Check::le(
            S,
            id("cx"),
            "Ξ^cx = -A_L Ξ^x = -Ξ^x A_R",
            tol,
            max_over(gen, |p| {
                let v = ecx.eval_mat(p)?;
                let x = ex.eval_mat(p)?;
                Ok(dist(&v, &-(axis_left(p)? * &x)).max(dist(&v, &-(x * axis_right(p)?))))
            }),
        ),
        Kind::Pseudoscalar => {
            Check::le(S, id("cx"), "Ξ^cx = A_L Ξ^x", tol, max_over(gen, |p| Ok(dist(&ecx.eval_mat(p)?, &(axis_left(p)? * ex.eval_mat(p)?)))))
        }
        Kind::Vectorial => Check::le(S, id("cx"), "Ξ^cx = Ξ^x", tol, max_over(gen, |p| Ok(ecx.eval(p)?.dist(&ex.eval(p)?)))),
    };
    out.push(cx);

    let base = make_base(BaseKind::Pauli2);
    let comp = first_component(xi.kind);
    for (m, e) in [(ExtMode::X, &ex), (ExtMode::Y, &ey), (ExtMode::M, &em)] {
        let Some((q1, q2)) = expected_qhat(xi.kind, m) else { continue };
        let r = asg
            .clone()
            .and_then(|a| row_of(e, comp, &base, &a, ctx.cfg.step))
            .map(|r| (r.p1[0] - q1).abs().max((r.p1[1] - q2).abs()));
        out.push(Check::le(S, id(&format!("{}.qhat", m.tag())), format!("Ξ^{} {comp}: q̂1 = {q1}, q̂2 = {q2}", m.tag()), ctx.cfg.tol_row, r));
    }

    if xi.kind == Kind::Vectorial {
        type Ax = fn(&Pair) -> FqResult<Mat>;
        let axes: [(&str, Ax); 3] = [("L", axis_left), ("C", axis_central), ("R", axis_right)];
        let mut rel = |tag: String, anchor: String, e: &FqOp, lhs: Ax, rhs: Ax| {
            out.push(Check::le(S, id(&tag), anchor, tol, max_over(gen, |p| Ok(dist(&lhs(&e.eval_pair(p)?)?, &rhs(p)?)))));
        };
        for (t, a) in axes {
            rel(format!("axes.x.{t}"), format!("A_{t}∘Ξ^x = A_{t}"), &ex, a, a);
            rel(format!("axes.m.{t}"), format!("A_{t}∘Ξ^m = A_C"), &em, a, axis_central);
        }
        rel("axes.y.L".into(), "A_L∘Ξ^y = A_R".into(), &ey, axis_left, axis_right);
        rel("axes.y.R".into(), "A_R∘Ξ^y = A_L".into(), &ey, axis_right, axis_left);
        rel("axes.y.C".into(), "A_C∘Ξ^y = A_C".into(), &ey, axis_central, axis_central);
        rel("axes.y.B".into(), "B∘Ξ^y = B^-1".into(), &ey, biaxiality, biaxiality_inv);
    }

    // second order on the nonabelian base
    let tb = make_base(BaseKind::Tensor(2));
    let restricted: Vec<usize> = (3..=6).collect();
    let rr: Vec<(usize, usize)> = restricted.iter().flat_map(|&h| restricted.iter().map(move |&j| (h, j))).collect();
    let own = asg.clone().and_then(|a| second(&xi, &tb, &a, ctx));
    for (m, e) in [(ExtMode::X, &ex), (ExtMode::Y, &ey), (ExtMode::M, &em)] {
        let r = asg.clone().and_then(|a| {
            let o = own.clone()?;
            Ok(coeff_gap(&second(e, &tb, &a, ctx)?, &o, &restricted, &rr))
        });
        out.push(Check::le(S, id(&format!("{}.restricted", m.tag())), format!("p_i, p_ij of Ξ^{} = those of Ξ, i, j in 3..6", m.tag()), ctx.cfg.tol_decay, r));
    }
    let lower = [1, 2, 7, 8];
    let hj: Vec<(usize, usize)> = lower.iter().flat_map(|&h| [3, 4, 5].into_iter().flat_map(move |j| [(h, j), (j, h)])).collect();
    let via = extend(&xi.after(&op("M_C")), ExtMode::X);
    let r = asg.clone().and_then(|a| Ok(coeff_gap(&second(&ex, &tb, &a, ctx)?, &second(&via, &tb, &a, ctx)?, &lower, &hj)));
    out.push(Check::le(S, id("x.eliminable"), "p_hj, p_jh of Ξ^x = those of (Ξ∘M_C)^x, h in {1,2,7,8}, j in {3,4,5}", ctx.cfg.tol_decay, r));
    out
}

fn extensions(ctx: &Ctx) -> Vec<Check> {
    const S: Suite = Suite::Extensions;
    let base = make_base(BaseKind::Pauli2);
    let (gen, bad_g) = ctx.random_pairs(&base, EXT_SAMPLES);
    let (mono, bad_m) = ctx.monoaxial_pairs(&base, MONO_SAMPLES);
    let mut out = Vec::new();
    out.extend(sampling_check(S, "extensions.sampling.general".into(), EXT_SAMPLES * ctx.cfg.seeds.len(), &bad_g));
    out.extend(sampling_check(S, "extensions.sampling.monoaxial".into(), MONO_SAMPLES * ctx.cfg.seeds.len(), &bad_m));
    let asg = ctx.assignment();
    for v in ctx.exec.map(&EXT_INPUTS, |n| ext_checks(ctx, n, &gen, &mono, &asg)) {
        out.extend(v);
    }
    out
}
