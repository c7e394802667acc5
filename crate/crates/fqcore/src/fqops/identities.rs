//! Named algebraic identities between operations, each with a residual.

use std::sync::Arc;

use super::*;
use crate::clifford::clifford_residual;

type ResidualFn = dyn Fn(&Pair) -> Result<f64> + Send + Sync;

#[derive(Clone)]
pub struct Identity {
    pub id: String,
    pub group: &'static str,
    /// The formula being checked.
    pub anchor: String,
    residual: Arc<ResidualFn>,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Identity({}: {})", self.id, self.anchor)
    }
}

impl Identity {
    pub fn residual(&self, p: &Pair) -> Result<f64> {
        (self.residual)(p)
    }
}

fn md(a: &Mat, b: &Mat) -> f64 {
    norm(&(a - b))
}

fn one(p: &Pair) -> Mat {
    eye(p.dim())
}

type V = fn(&Pair) -> Result<Pair>;

fn side_tag(s: Side) -> &'static str {
    match s {
        Side::Left => "L",
        Side::Central => "C",
        Side::Right => "R",
    }
}

struct Cat(Vec<Identity>);

impl Cat {
    fn add(&mut self, group: &'static str, id: String, anchor: String, f: impl Fn(&Pair) -> Result<f64> + Send + Sync + 'static) {
        self.0.push(Identity { id: format!("{group}.{id}"), group, anchor, residual: Arc::new(f) });
    }

    fn m(&mut self, group: &'static str, id: &str, anchor: &str, f: impl Fn(&Pair) -> Result<(Mat, Mat)> + Send + Sync + 'static) {
        self.add(group, id.into(), anchor.into(), move |p| {
            let (a, b) = f(p)?;
            Ok(md(&a, &b))
        });
    }

    fn v(&mut self, group: &'static str, id: &str, anchor: &str, f: impl Fn(&Pair) -> Result<(Pair, Pair)> + Send + Sync + 'static) {
        self.add(group, id.into(), anchor.into(), move |p| {
            let (a, b) = f(p)?;
            Ok(a.dist(&b))
        });
    }
}

const NAMED_V: [(&str, V); 7] = [
    ("M_L", |p| monoaxialize(p, Side::Left)),
    ("M_C", |p| monoaxialize(p, Side::Central)),
    ("M_R", |p| monoaxialize(p, Side::Right)),
    ("C", axial_conjugation),
    ("O^fSy", orth_conform),
    ("O^afSy", orth_anticonform),
    ("T", turn),
];

fn axes(c: &mut Cat) {
    let g = "axes";
    c.m(g, "skew.L", "A_L^2 = -1", |p| Ok((axis_left(p)?.pow(2), -one(p))));
    c.m(g, "skew.R", "A_R^2 = -1", |p| Ok((axis_right(p)?.pow(2), -one(p))));
    c.m(g, "skew.C", "A_C^2 = -1", |p| Ok((axis_central(p)?.pow(2), -one(p))));
    c.m(g, "alt.L", "A_L = pol(-A1 A2^-1)", |p| Ok((axis_left(p)?, axis_left_alt(p)?)));
    c.m(g, "alt.R", "A_R = pol(-A1^-1 A2)", |p| Ok((axis_right(p)?, axis_right_alt(p)?)));
    c.m(g, "swap.1", "A_L A1 = -A1 A_R", |p| Ok((axis_left(p)? * &p.a1, -(&p.a1 * axis_right(p)?))));
    c.m(g, "swap.2", "A_L A2 = -A2 A_R", |p| Ok((axis_left(p)? * &p.a2, -(&p.a2 * axis_right(p)?))));
    c.m(g, "binv", "B B^-1 = 1", |p| Ok((biaxiality(p)? * biaxiality_inv(p)?, one(p))));
    c.add(g, "gm.forms".into(), "A_C = A_L(A_L^-1 A_R)^1/2 = A_R(A_R^-1 A_L)^1/2 = (A_L A_R^-1)^1/2 A_R = (A_R A_L^-1)^1/2 A_L".into(), |p| {
        let f = crate::matfun::geo_mean_forms(&axis_left(p)?, &axis_right(p)?)?;
        Ok(f.iter().skip(1).map(|m| md(m, &f[0])).fold(0.0, f64::max))
    });
    c.m(g, "gm.quad", "A_C = mean over t of (A_L^-1 cos^2 t + A_R^-1 sin^2 t)^-1", |p| {
        Ok((axis_central(p)?, crate::matfun::geo_mean_quad(&axis_left(p)?, &axis_right(p)?, 64)?))
    });

    type Row = (&'static str, &'static str, fn(&Mat, &Mat, &Mat, &Mat, &Mat) -> Mat);
    // (al, ar, ac, b, bi)
    let l: [Row; 8] = [
        ("L.1", "A_L = B A_L B", |l, _, _, b, _| b * l * b),
        ("L.2", "A_L = B^-1 A_L B^-1", |l, _, _, _, bi| bi * l * bi),
        ("L.3", "A_L = B A_C", |_, _, c, b, _| b * c),
        ("L.4", "A_L = A_C B^-1", |_, _, c, _, bi| c * bi),
        ("L.5", "A_L = B^2 A_R", |_, r, _, b, _| b * b * r),
        ("L.6", "A_L = B A_R B^-1", |_, r, _, b, bi| b * r * bi),
        ("L.7", "A_L = A_R B^-2", |_, r, _, _, bi| r * bi * bi),
        ("L.8", "A_L = -A_C A_R A_C", |_, r, c, _, _| -(c * r * c)),
    ];
    let r: [Row; 8] = [
        ("R.1", "A_R = B A_R B", |_, r, _, b, _| b * r * b),
        ("R.2", "A_R = B^-1 A_R B^-1", |_, r, _, _, bi| bi * r * bi),
        ("R.3", "A_R = B^-1 A_C", |_, _, c, _, bi| bi * c),
        ("R.4", "A_R = A_C B", |_, _, c, b, _| c * b),
        ("R.5", "A_R = B^-2 A_L", |l, _, _, _, bi| bi * bi * l),
        ("R.6", "A_R = B^-1 A_L B", |l, _, _, b, bi| bi * l * b),
        ("R.7", "A_R = A_L B^2", |l, _, _, b, _| l * b * b),
        ("R.8", "A_R = -A_C A_L A_C", |l, _, c, _, _| -(c * l * c)),
    ];
    let cc: [Row; 6] = [
        ("C.1", "A_C = B A_C B", |_, _, c, b, _| b * c * b),
        ("C.2", "A_C = B^-1 A_C B^-1", |_, _, c, _, bi| bi * c * bi),
        ("C.3", "A_C = B A_R", |_, r, _, b, _| b * r),
        ("C.4", "A_C = A_R B^-1", |_, r, _, _, bi| r * bi),
        ("C.5", "A_C = B^-1 A_L", |l, _, _, _, bi| bi * l),
        ("C.6", "A_C = A_L B", |l, _, _, b, _| l * b),
    ];
    let bb: [Row; 5] = [
        ("B.1", "B = -A_L B^-1 A_L", |l, _, _, _, bi| -(l * bi * l)),
        ("B.2", "B = -A_C B^-1 A_C", |_, _, c, _, bi| -(c * bi * c)),
        ("B.3", "B = -A_R B^-1 A_R", |_, r, _, _, bi| -(r * bi * r)),
        ("B.4", "B = -A_C A_R", |_, r, c, _, _| -(c * r)),
        ("B.5", "B = -A_L A_C", |l, _, c, _, _| -(l * c)),
    ];
    let bi: [Row; 5] = [
        ("Bi.1", "B^-1 = -A_L B A_L", |l, _, _, b, _| -(l * b * l)),
        ("Bi.2", "B^-1 = -A_C B A_C", |_, _, c, b, _| -(c * b * c)),
        ("Bi.3", "B^-1 = -A_R B A_R", |_, r, _, b, _| -(r * b * r)),
        ("Bi.4", "B^-1 = -A_R A_C", |_, r, c, _, _| -(r * c)),
        ("Bi.5", "B^-1 = -A_C A_L", |l, _, c, _, _| -(c * l)),
    ];
    let lhs: [(fn(&Pair) -> Result<Mat>, &[Row]); 5] = [
        (axis_left, &l),
        (axis_right, &r),
        (axis_central, &cc),
        (biaxiality, &bb),
        (biaxiality_inv, &bi),
    ];
    for (lf, rows) in lhs {
        for &(id, anchor, f) in rows {
            c.m(g, id, anchor, move |p| {
                let (l, r, ac, b, bi) = (axis_left(p)?, axis_right(p)?, axis_central(p)?, biaxiality(p)?, biaxiality_inv(p)?);
                Ok((lf(p)?, f(&l, &r, &ac, &b, &bi)))
            });
        }
    }
}

fn invariant_axes(c: &mut Cat, g: &'static str, name: &'static str, op: V, images: [(Side, Side); 3], b_image: i32) {
    for (x, y) in images {
        c.m(g, &format!("{name}.A_{}", side_tag(x)), &format!("A_{}∘{name} = A_{}", side_tag(x), side_tag(y)), move |p| {
            Ok((x.axis(&op(p)?)?, y.axis(p)?))
        });
    }
    let anchor = match b_image {
        1 => format!("B∘{name} = B"),
        -1 => format!("B∘{name} = B^-1"),
        _ => format!("B∘{name} = 1"),
    };
    c.m(g, &format!("{name}.B"), &anchor, move |p| {
        let lhs = biaxiality(&op(p)?)?;
        let rhs = match b_image {
            1 => biaxiality(p)?,
            -1 => biaxiality_inv(p)?,
            _ => one(p),
        };
        Ok((lhs, rhs))
    });
}

const SAME: [(Side, Side); 3] = [(Side::Left, Side::Left), (Side::Central, Side::Central), (Side::Right, Side::Right)];
const SWAP: [(Side, Side); 3] = [(Side::Left, Side::Right), (Side::Central, Side::Central), (Side::Right, Side::Left)];
const CENTRAL: [(Side, Side); 3] = [(Side::Left, Side::Central), (Side::Central, Side::Central), (Side::Right, Side::Central)];

fn turn_group(c: &mut Cat) {
    let g = "turn";
    c.v(g, "alt", "A_L(-A2, A1) = (A2, -A1)A_R", |p| Ok((turn(p)?, turn_alt(p)?)));
    c.v(g, "invol", "T∘T = Id", |p| Ok((turn(&turn(p)?)?, p.clone())));
    invariant_axes(c, g, "T", turn, SAME, 1);
    invariant_axes(c, g, "O^fSy", orth_conform, SAME, 1);
    invariant_axes(c, g, "O^afSy", orth_anticonform, SWAP, -1);
}

fn mono_group(c: &mut Cat) {
    let g = "mono";
    for x in Side::ALL {
        let t = side_tag(x);
        for y in Side::ALL {
            let ty = side_tag(y);
            c.m(g, &format!("A_{ty}∘M_{t}"), &format!("A_{ty}∘M_{t} = A_{t}"), move |p| {
                Ok((y.axis(&monoaxialize(p, x)?)?, x.axis(p)?))
            });
            c.v(g, &format!("M_{ty}∘M_{t}"), &format!("M_{ty}∘M_{t} = M_{t}"), move |p| {
                Ok((monoaxialize(&monoaxialize(p, x)?, y)?, monoaxialize(p, x)?))
            });
        }
        let tn = side_tag(x.neg());
        c.m(g, &format!("A_{tn}∘C"), &format!("A_{tn}∘C = A_{t}"), move |p| {
            Ok((x.neg().axis(&axial_conjugation(p)?)?, x.axis(p)?))
        });
        c.m(g, &format!("B∘M_{t}"), &format!("B∘M_{t} = 1"), move |p| Ok((biaxiality(&monoaxialize(p, x)?)?, one(p))));
        c.v(g, &format!("T∘M_{t}"), &format!("T∘M_{t} = M_{t}∘T"), move |p| {
            Ok((turn(&monoaxialize(p, x)?)?, monoaxialize(&turn(p)?, x)?))
        });
        c.v(g, &format!("O^fSy∘M_{t}"), &format!("O^fSy∘M_{t} = M_{t}∘O^fSy"), move |p| {
            Ok((orth_conform(&monoaxialize(p, x)?)?, monoaxialize(&orth_conform(p)?, x)?))
        });
        c.v(g, &format!("O^afSy∘M_{t}"), &format!("O^afSy∘M_{t} = M_{tn}∘O^afSy"), move |p| {
            Ok((orth_anticonform(&monoaxialize(p, x)?)?, monoaxialize(&orth_anticonform(p)?, x.neg())?))
        });
        c.v(g, &format!("M_{tn}∘C"), &format!("M_{tn}∘C = M_{t}"), move |p| {
            Ok((monoaxialize(&axial_conjugation(p)?, x.neg())?, monoaxialize(p, x)?))
        });
        c.v(g, &format!("C∘M_{t}"), &format!("C∘M_{t} = M_{t}"), move |p| {
            Ok((axial_conjugation(&monoaxialize(p, x)?)?, monoaxialize(p, x)?))
        });
        c.v(g, &format!("fix.{t}"), &format!("B = 1 ⇒ M_{t} A = A"), move |p| {
            let m = monoaxialize(p, Side::Central)?;
            Ok((monoaxialize(&m, x)?, m))
        });
    }
    c.m(g, "B∘C", "B∘C = B^-1", |p| Ok((biaxiality(&axial_conjugation(p)?)?, biaxiality_inv(p)?)));
    c.v(g, "C.alt", "A_C A A_C = B^-1 A B^-1", |p| Ok((axial_conjugation(p)?, axial_conjugation_alt(p)?)));
    c.v(g, "T∘C", "T∘C = C∘T", |p| Ok((turn(&axial_conjugation(p)?)?, axial_conjugation(&turn(p)?)?)));
    c.v(g, "O^fSy∘C", "O^fSy∘C = C∘O^fSy", |p| {
        Ok((orth_conform(&axial_conjugation(p)?)?, axial_conjugation(&orth_conform(p)?)?))
    });
    c.v(g, "O^afSy∘C", "O^afSy∘C = C∘O^afSy", |p| {
        Ok((orth_anticonform(&axial_conjugation(p)?)?, axial_conjugation(&orth_anticonform(p)?)?))
    });
    c.v(g, "C∘C", "C∘C = Id", |p| Ok((axial_conjugation(&axial_conjugation(p)?)?, p.clone())));
}

fn omsy_group(c: &mut Cat) {
    let g = "omsy";
    invariant_axes(c, g, "O^mSy", orth_mono, CENTRAL, 0);
    c.add(g, "clifford".into(), "O^mSy A is a Clifford system".into(), |p| Ok(clifford_residual(&orth_mono(p)?)));
    for (n, f) in [
        ("O^fSy", orth_conform as V),
        ("O^afSy", orth_anticonform),
        ("T", turn),
        ("M_C", |p: &Pair| monoaxialize(p, Side::Central)),
        ("C", axial_conjugation),
    ] {
        c.v(g, &format!("after.{n}"), &format!("O^mSy = O^mSy∘{n}"), move |p| Ok((orth_mono(p)?, orth_mono(&f(p)?)?)));
    }
}

fn length_group(c: &mut Cat) {
    let g = "length";
    let lfx = |p: &Pair| axial_length(p, Variant::Fx);
    let dfx = |p: &Pair| pseudodet(p, Variant::Fx);
    c.m(g, "D.L", "D^fx = A_L L^fx", move |p| Ok((dfx(p)?, axis_left(p)? * lfx(p)?)));
    c.m(g, "D.R", "D^fx = L^fx A_R", move |p| Ok((dfx(p)?, lfx(p)? * axis_right(p)?)));
    c.m(g, "LBi", "L^fx B^-1 = -D^fx A_C", move |p| Ok((lfx(p)? * biaxiality_inv(p)?, -(dfx(p)? * axis_central(p)?))));
    c.m(g, "BiL", "B^-1 L^fx = -A_C D^fx", move |p| Ok((biaxiality_inv(p)? * lfx(p)?, -(axis_central(p)? * dfx(p)?))));
    for (n, f) in [("L^fx", lfx as fn(&Pair) -> Result<Mat>), ("V^fm", axial_volume)] {
        c.m(g, &format!("{n}∘O^fSy"), &format!("{n}∘O^fSy = {n}"), move |p| Ok((f(&orth_conform(p)?)?, f(p)?)));
        c.m(g, &format!("{n}∘O^mSy"), &format!("{n}∘O^mSy = 1"), move |p| Ok((f(&orth_mono(p)?)?, one(p))));
        c.m(g, &format!("{n}∘O^afSy"), &format!("{n}∘O^afSy = {n}^-1"), move |p| {
            Ok((f(&orth_anticonform(p)?)?, inv(&f(p)?)?))
        });
    }
    c.m(g, "D^fx∘O^fSy", "D^fx∘O^fSy = D^fx", move |p| Ok((dfx(&orth_conform(p)?)?, dfx(p)?)));
    c.m(g, "D^fx∘O^mSy", "D^fx∘O^mSy = A_C", move |p| Ok((dfx(&orth_mono(p)?)?, axis_central(p)?)));
    c.m(g, "D^fx∘O^afSy", "D^fx∘O^afSy = -(D^fx)^-1", move |p| Ok((dfx(&orth_anticonform(p)?)?, -inv(&dfx(p)?)?)));

    // O^mSy closed forms.
    type Form = fn(&Pair, &Mat, &Mat, &Mat, &Mat) -> Result<(Mat, Mat)>;
    let forms: [(&str, &str, Form); 4] = [
        ("omsy.1", "O^mSy = (V^fm)^-1/2 B^-1/2 O^fSy B^-1/2", |p, bmh, _, _, _| {
            Ok((inv(&sqrt_principal(&axial_volume(p)?)?)? * bmh, bmh.clone()))
        }),
        ("omsy.2", "O^mSy = B^-1/2 O^fSy B^-1/2 (V^fm)^-1/2", |p, bmh, _, _, _| {
            Ok((bmh.clone(), bmh * inv(&sqrt_principal(&axial_volume(p)?)?)?))
        }),
        ("omsy.3", "O^mSy = B^-1/2 (L^fx B^-1)^-1/2 O^fSy B^-1/2", |_, bmh, l, bi, _| {
            Ok((bmh * inv(&sqrt_principal(&(l * bi))?)?, bmh.clone()))
        }),
        ("omsy.4", "O^mSy = B^-1/2 O^fSy (B^-1 L^fx)^-1/2 B^-1/2", |_, bmh, l, bi, _| {
            Ok((bmh.clone(), inv(&sqrt_principal(&(bi * l))?)? * bmh))
        }),
    ];
    for (id, anchor, f) in forms {
        c.v(g, id, anchor, move |p| {
            let bmh = inv(&sqrt_principal(&biaxiality(p)?)?)?;
            let (l, r) = f(p, &bmh, &axial_length(p, Variant::Fx)?, &biaxiality_inv(p)?, &biaxiality(p)?)?;
            Ok((orth_mono(p)?, orth_conform(p)?.sandwich(&l, &r)))
        });
    }

    c.m(g, "Dx.L", "D^x = A_L L^cx", |p| Ok((pseudodet(p, Variant::X)?, axis_left(p)? * axial_length(p, Variant::Cx)?)));
    c.m(g, "Dx.R", "D^x = L^cx A_R", |p| Ok((pseudodet(p, Variant::X)?, axial_length(p, Variant::Cx)? * axis_right(p)?)));
    c.m(g, "Dcx.L", "D^cx = A_L L^x", |p| Ok((pseudodet(p, Variant::Cx)?, axis_left(p)? * axial_length(p, Variant::X)?)));
    c.m(g, "Dcx.R", "D^cx = L^x A_R", |p| Ok((pseudodet(p, Variant::Cx)?, axial_length(p, Variant::X)? * axis_right(p)?)));
    c.m(g, "Vfm.A_C", "V^fm A_C = A_C V^fm", |p| {
        let (v, a) = (axial_volume(p)?, axis_central(p)?);
        Ok((&v * &a, a * v))
    });
}

fn unital_group(c: &mut Cat) {
    let g = "unital";
    let u: V = unitalization;
    let k: V = amplitude_inversion;
    c.v(g, "K∘K", "K^fx∘K^fx = Id", move |p| Ok((k(&k(p)?)?, p.clone())));
    c.v(g, "U∘U", "U^fx∘U^fx = U^fx", move |p| Ok((u(&u(p)?)?, u(p)?)));
    c.v(g, "U∘K", "U^fx∘K^fx = U^fx", move |p| Ok((u(&k(p)?)?, u(p)?)));
    c.v(g, "K∘U", "K^fx∘U^fx = U^fx", move |p| Ok((k(&u(p)?)?, u(p)?)));
    invariant_axes(c, g, "U^fx", u, SAME, 1);
    invariant_axes(c, g, "K^fx", k, SAME, 1);
    for (wn, w) in [("U^fx", u), ("K^fx", k)] {
        for (n, f) in NAMED_V {
            c.v(g, &format!("{wn}∘{n}"), &format!("{wn}∘{n} = {n}∘{wn}"), move |p| Ok((w(&f(p)?)?, f(&w(p)?)?)));
        }
    }
    c.v(g, "omsy.fy", "O^mSy = U^fx∘O^fSy∘M_C", move |p| {
        Ok((orth_mono(p)?, u(&orth_conform(&monoaxialize(p, Side::Central)?)?)?))
    });
    c.v(g, "omsy.afy", "O^mSy = U^fx∘O^afSy∘M_C", move |p| {
        Ok((orth_mono(p)?, u(&orth_anticonform(&monoaxialize(p, Side::Central)?)?)?))
    });
    c.v(g, "K.afy", "K^fx∘O^fSy∘M_C = O^afSy∘M_C", move |p| {
        let m = monoaxialize(p, Side::Central)?;
        Ok((k(&orth_conform(&m)?)?, orth_anticonform(&m)?))
    });
    c.m(g, "L∘U", "L^fx∘U^fx = B", move |p| Ok((axial_length(&u(p)?, Variant::Fx)?, biaxiality(p)?)));
    c.m(g, "D∘U", "D^fx∘U^fx = A_C", move |p| Ok((pseudodet(&u(p)?, Variant::Fx)?, axis_central(p)?)));
    c.m(g, "V∘K", "V^fm∘K^fx = (V^fm)^-1", move |p| Ok((axial_volume(&k(p)?)?, inv(&axial_volume(p)?)?)));
    c.m(g, "V∘U", "V^fm∘U^fx = 1", move |p| Ok((axial_volume(&u(p)?)?, one(p))));
}

fn inversion_group(c: &mut Cat) {
    let g = "inversion";
    for w in [Inversion::CFy, Inversion::LFy, Inversion::RFy] {
        let n = w.name();
        c.m(g, &format!("L∘{n}"), &format!("L^fx∘{n} = (L^fx)^-1"), move |p| {
            Ok((axial_length(&inversion(p, w)?, Variant::Fx)?, inv(&axial_length(p, Variant::Fx)?)?))
        });
        c.m(g, &format!("D∘{n}"), &format!("D^fx∘{n} = -(D^fx)^-1"), move |p| {
            Ok((pseudodet(&inversion(p, w)?, Variant::Fx)?, -inv(&pseudodet(p, Variant::Fx)?)?))
        });
        c.v(g, &format!("{n}∘{n}"), &format!("{n}∘{n} = Id"), move |p| Ok((inversion(&inversion(p, w)?, w)?, p.clone())));
    }
    for w in Inversion::ALL {
        let n = w.name();
        c.v(g, &format!("{n}∘T"), &format!("{n}∘T = T∘{n}"), move |p| Ok((inversion(&turn(p)?, w)?, turn(&inversion(p, w)?)?)));
        c.v(g, &format!("{n}∘C"), &format!("{n}∘C = C∘{n}"), move |p| {
            Ok((inversion(&axial_conjugation(p)?, w)?, axial_conjugation(&inversion(p, w)?)?))
        });
    }
    c.v(g, "I_C.closed", "I_C^fy = (B ⋆ L^fx)^-1/2 T (B ⋆ L^fx)^-1/2", |p| {
        Ok((inversion(p, Inversion::CFy)?, inversion_c_closed(p)?))
    });
}

fn circular_group(c: &mut Cat) {
    let g = "circular";
    let mono = |p: &Pair| monoaxialize(p, Side::Central);
    c.v(g, "reconstruct", "A1 = (1 + r3 + r4)Q1, A2 = (1 + r3 - r4)Q2", move |p| {
        let m = mono(p)?;
        Ok((circular_decomposition(&m)?.reconstruct(), m))
    });
    c.v(g, "ofsy", "O^fSy A = ((1 + r3)Q1, (1 + r3)Q2)", move |p| {
        let m = mono(p)?;
        let cd = circular_decomposition(&m)?;
        Ok((orth_conform(&m)?, cd.q.lmul(&cd.one_r3)))
    });
    c.m(g, "axis", "A_C = Q1 Q2", move |p| {
        let m = mono(p)?;
        let cd = circular_decomposition(&m)?;
        Ok((axis_central(&m)?, &cd.q.a1 * &cd.q.a2))
    });
    c.add(g, "clifford".into(), "Q = O^mSy A is a Clifford system".into(), move |p| {
        Ok(clifford_residual(&circular_decomposition(&mono(p)?)?.q))
    });
}

/// The full catalog, in a fixed order.
pub fn catalog() -> Vec<Identity> {
    let mut c = Cat(Vec::new());
    axes(&mut c);
    turn_group(&mut c);
    mono_group(&mut c);
    omsy_group(&mut c);
    length_group(&mut c);
    unital_group(&mut c);
    inversion_group(&mut c);
    circular_group(&mut c);
    c.0
}
