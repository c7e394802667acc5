//! Hyperscaling decay identities, character degeneracies and the combined
//! `r̃4`/`r̃5` conditions, evaluated on extracted coefficients.

use std::fmt;
use std::str::FromStr;

use crate::error::{FqError, Result};
use crate::fqops::Kind;
use crate::mixedbase::{Component, ExpansionRow, IndexTable, SecondOrder};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperType {
    pub j: f64,
    pub l: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// The named types `1..=9`.
pub const NAMED: [HyperType; 9] = [
    HyperType { j: 1.0, l: 0.0, alpha: 1.0, beta: 1.0 },
    HyperType { j: 1.0, l: 0.0, alpha: 1.0, beta: -1.0 },
    HyperType { j: 1.0, l: 0.0, alpha: -1.0, beta: 1.0 },
    HyperType { j: 1.0, l: 0.0, alpha: -1.0, beta: -1.0 },
    HyperType { j: -1.0, l: 0.0, alpha: 0.0, beta: 0.0 },
    HyperType { j: -1.0, l: 0.0, alpha: 0.0, beta: 1.0 },
    HyperType { j: -1.0, l: 0.0, alpha: 0.0, beta: -1.0 },
    HyperType { j: 1.0, l: 0.0, alpha: 1.0, beta: 0.0 },
    HyperType { j: 1.0, l: 0.0, alpha: -1.0, beta: 0.0 },
];

pub fn named(k: u8) -> Result<HyperType> {
    NAMED
        .get((k as usize).wrapping_sub(1))
        .copied()
        .ok_or_else(|| FqError::ConfigInvalid(format!("no named type {k}")))
}

/// Named types that are principal for a kind.
pub fn principal_types(kind: Kind) -> &'static [u8] {
    match kind {
        Kind::Scalar | Kind::Pseudoscalar => &[1, 2, 3, 4, 5],
        Kind::Vectorial => &[6, 7, 8, 9],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Index(usize),
    /// `r̃4` (`+`) or `r̃5` (`-`).
    Tilde(u8),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Index(h) => write!(f, "{h}"),
            Var::Tilde(k) => write!(f, "~{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cond {
    Decay { var: Var, comp: Component, ty: HyperType, name: Option<u8> },
    Degen { h: usize, comp: Component, sign: f64 },
}

impl Cond {
    pub fn decay(h: usize, comp: Component, k: u8) -> Cond {
        Cond::Decay { var: Var::Index(h), comp, ty: NAMED[k as usize - 1], name: Some(k) }
    }

    pub fn combined(which: u8, comp: Component, k: u8) -> Cond {
        Cond::Decay { var: Var::Tilde(which), comp, ty: NAMED[k as usize - 1], name: Some(k) }
    }

    pub fn degen(h: usize, comp: Component, sign: f64) -> Cond {
        Cond::Degen { h, comp, sign }
    }

    pub fn component(&self) -> Component {
        match self {
            Cond::Decay { comp, .. } | Cond::Degen { comp, .. } => *comp,
        }
    }
}

impl fmt::Display for Cond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cond::Decay { var, comp, ty, name } => match name {
                Some(k) => write!(f, "{var}{comp}{k}"),
                None => write!(f, "{var}{comp}({},{},{},{})", ty.j, ty.l, ty.alpha, ty.beta),
            },
            Cond::Degen { h, comp, sign } => write!(f, "{h}{comp}<{}1>", if *sign > 0.0 { '+' } else { '-' }),
        }
    }
}

/// Parses one clause, possibly listing several variables and types:
/// `1,4[0]2`, `~4,~5[0]2,3,5`, `6[12]<+1>`, `5[1](1,0,1,1)`.
pub fn parse_clause(s: &str) -> Result<Vec<Cond>> {
    let bad = || FqError::ConfigInvalid(format!("malformed condition `{s}`"));
    let s = s.trim();
    let open = s.find('[').ok_or_else(bad)?;
    let close = s.find(']').ok_or_else(bad)?;
    let comp = Component::from_str(&s[open..=close])?;
    let vars: Vec<Var> = s[..open]
        .split(',')
        .map(|v| {
            let v = v.trim();
            if let Some(t) = v.strip_prefix('~') {
                match t {
                    "4" => Ok(Var::Tilde(4)),
                    "5" => Ok(Var::Tilde(5)),
                    _ => Err(bad()),
                }
            } else {
                match v.parse::<usize>() {
                    Ok(h) if (1..=8).contains(&h) => Ok(Var::Index(h)),
                    _ => Err(bad()),
                }
            }
        })
        .collect::<Result<_>>()?;
    let rest = s[close + 1..].trim();
    let mut out = Vec::new();
    if let Some(sg) = rest.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
        let sign = match sg {
            "+1" => 1.0,
            "-1" => -1.0,
            _ => return Err(bad()),
        };
        for v in vars {
            match v {
                Var::Index(h) => out.push(Cond::Degen { h, comp, sign }),
                Var::Tilde(_) => return Err(bad()),
            }
        }
        return Ok(out);
    }
    let types: Vec<(HyperType, Option<u8>)> = if let Some(t) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let v: Vec<f64> = t.split(',').map(|x| x.trim().parse::<f64>().map_err(|_| bad())).collect::<Result<_>>()?;
        if v.len() != 4 || v[0].abs() != 1.0 {
            return Err(bad());
        }
        vec![(HyperType { j: v[0], l: v[1], alpha: v[2], beta: v[3] }, None)]
    } else {
        rest.split(',')
            .map(|k| {
                let k: u8 = k.trim().parse().map_err(|_| bad())?;
                Ok((named(k)?, Some(k)))
            })
            .collect::<Result<_>>()?
    };
    for var in vars {
        for &(ty, name) in &types {
            out.push(Cond::Decay { var, comp, ty, name });
        }
    }
    Ok(out)
}

impl FromStr for Cond {
    type Err = FqError;
    fn from_str(s: &str) -> Result<Self> {
        let mut v = parse_clause(s)?;
        if v.len() != 1 {
            return Err(FqError::ConfigInvalid(format!("`{s}` lists several conditions")));
        }
        Ok(v.pop().unwrap())
    }
}

/// Extracted coefficients of one output component, to first or second order.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficients {
    pub component: Component,
    pub p0: f64,
    pub p1: [f64; 8],
    pub p2: Option<[[f64; 8]; 8]>,
}

impl Coefficients {
    pub fn order(&self) -> u8 {
        if self.p2.is_some() {
            2
        } else {
            1
        }
    }

    fn p(&self, h: usize) -> f64 {
        self.p1[h - 1]
    }

    fn pp(&self, h: usize, j: usize) -> f64 {
        self.p2.as_ref().map_or(0.0, |m| m[h - 1][j - 1])
    }

    /// The same data truncated to first order.
    pub fn first_order(&self) -> Coefficients {
        Coefficients { p2: None, ..self.clone() }
    }
}

impl From<&ExpansionRow> for Coefficients {
    fn from(r: &ExpansionRow) -> Self {
        Coefficients { component: r.component, p0: r.p0, p1: r.p1, p2: None }
    }
}

impl From<&SecondOrder> for Coefficients {
    fn from(s: &SecondOrder) -> Self {
        Coefficients { component: s.component, p0: s.p0, p1: s.p1, p2: Some(s.p2) }
    }
}

/// `p_h = (α+β) p0`; at order 2 also
/// `p_{h,j} = α p_j - ½J p_{6*h*j} + (-½-L) p_{h*j}` and
/// `p_{j,h} = ½J p_{j*h*6} + (-½+L) p_{j*h} + β p_j` for every `j`.
pub fn decay_residual(c: &Coefficients, h: usize, ty: &HyperType, t: &IndexTable) -> f64 {
    let mut r = (c.p(h) - (ty.alpha + ty.beta) * c.p0).abs();
    if c.p2.is_some() {
        for j in 1..=8 {
            let a = ty.alpha * c.p(j) - 0.5 * ty.j * c.p(t.mul3(6, h, j)) + (-0.5 - ty.l) * c.p(t.mul(h, j));
            let b = 0.5 * ty.j * c.p(t.mul3(j, h, 6)) + (-0.5 + ty.l) * c.p(t.mul(j, h)) + ty.beta * c.p(j);
            r = r.max((c.pp(h, j) - a).abs()).max((c.pp(j, h) - b).abs());
        }
    }
    r
}

/// `p_i = ± p_{i*h}` in every index slot.
pub fn degen_residual(c: &Coefficients, h: usize, sign: f64, t: &IndexTable) -> f64 {
    let mut r: f64 = 0.0;
    for i in 1..=8 {
        r = r.max((c.p(i) - sign * c.p(t.mul(i, h))).abs());
        if c.p2.is_some() {
            for j in 1..=8 {
                r = r.max((c.pp(i, j) - sign * c.pp(t.mul(i, h), j)).abs());
                r = r.max((c.pp(i, j) - sign * c.pp(i, t.mul(j, h))).abs());
            }
        }
    }
    r
}

/// Combined conditions in `r̃4` (`pm = +1`) or `r̃5` (`pm = -1`).
pub fn combined_residual(c: &Coefficients, pm: f64, ty: &HyperType, t: &IndexTable) -> f64 {
    let mut r = (0.5 * c.p(4) + pm * 0.5 * c.p(5) - (ty.alpha + ty.beta) * c.p0).abs();
    if c.p2.is_some() {
        let kp = 0.25 * (ty.j + pm);
        let km = 0.25 * (ty.j - pm);
        for j in 1..=8 {
            let lhs = 0.5 * c.pp(4, j) + pm * 0.5 * c.pp(5, j);
            let rhs = ty.alpha * c.p(j) - kp * c.p(t.mul(5, j)) - pm * kp * c.p(t.mul(4, j));
            r = r.max((lhs - rhs).abs());
            let lhs = 0.5 * c.pp(j, 4) + pm * 0.5 * c.pp(j, 5);
            let rhs = km * c.p(t.mul(j, 5)) + pm * km * c.p(t.mul(j, 4)) + ty.beta * c.p(j);
            r = r.max((lhs - rhs).abs());
        }
    }
    r
}

pub fn residual(cond: &Cond, c: &Coefficients, t: &IndexTable) -> Result<f64> {
    if cond.component() != c.component {
        return Err(FqError::ExtractionFailure(format!("{cond} needs component {}, got {}", cond.component(), c.component)));
    }
    Ok(match cond {
        Cond::Decay { var: Var::Index(h), ty, .. } => decay_residual(c, *h, ty, t),
        Cond::Decay { var: Var::Tilde(k), ty, .. } => combined_residual(c, if *k == 4 { 1.0 } else { -1.0 }, ty, t),
        Cond::Degen { h, sign, .. } => degen_residual(c, *h, *sign, t),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub condition: String,
    pub order: u8,
    pub residual: f64,
    pub pass: bool,
}

pub fn verdict(cond: &Cond, c: &Coefficients, t: &IndexTable, tol: f64) -> Result<Verdict> {
    let r = residual(cond, c, t)?;
    Ok(Verdict { condition: cond.to_string(), order: c.order(), residual: r, pass: r <= tol })
}

/// Every principal decay condition `h[s]X` (`h` in 1..=5) and every
/// degeneracy `h[s]<±1>` (`h` in 1..=8) on the given component.
pub fn principal_conditions(kind: Kind, comp: Component) -> Vec<Cond> {
    let mut v = Vec::new();
    for &k in principal_types(kind) {
        for h in 1..=5 {
            v.push(Cond::decay(h, comp, k));
        }
    }
    for h in 1..=8 {
        for s in [1.0, -1.0] {
            v.push(Cond::degen(h, comp, s));
        }
    }
    v
}

pub fn classify(kind: Kind, c: &Coefficients, t: &IndexTable, tol: f64) -> Result<Vec<Verdict>> {
    principal_conditions(kind, c.component).iter().map(|cond| verdict(cond, c, t, tol)).collect()
}

/// Conjugation invariance of a component: `(6X or 6Y) & 7Z & 8W`.
pub fn conjugation_conditions(comp: Component) -> (Vec<Cond>, Vec<Cond>) {
    let (a, b, z, w) = match comp {
        Component::S0 => (2, 5, 2, 5),
        Component::S1 => (6, 8, 8, 6),
        Component::S2 => (6, 8, 8, 7),
        Component::S12 => (2, 5, 1, 5),
    };
    (vec![Cond::decay(6, comp, a), Cond::decay(6, comp, b)], vec![Cond::decay(7, comp, z), Cond::decay(8, comp, w)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixedbase::SectorAssignment;

    #[test]
    fn named_table() {
        assert_eq!(named(1).unwrap(), HyperType { j: 1.0, l: 0.0, alpha: 1.0, beta: 1.0 });
        assert_eq!(named(9).unwrap(), HyperType { j: 1.0, l: 0.0, alpha: -1.0, beta: 0.0 });
        assert!(named(0).is_err() && named(10).is_err());
    }

    #[test]
    fn parse_and_print() {
        let v = parse_clause("1,4[0]2").unwrap();
        assert_eq!(v.iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["1[0]2", "4[0]2"]);
        let v = parse_clause("~4,~5[0]2,3,5").unwrap();
        assert_eq!(v.len(), 6);
        assert_eq!(v[0].to_string(), "~4[0]2");
        assert_eq!("6[12]<+1>".parse::<Cond>().unwrap(), Cond::degen(6, Component::S12, 1.0));
        assert!("9[0]1".parse::<Cond>().is_err());
        assert!("1[3]1".parse::<Cond>().is_err());
        assert!("~4[0]<+1>".parse::<Cond>().is_err());
    }

    #[test]
    fn order_one_rows() {
        let t = SectorAssignment::reference().table().unwrap();
        // B: [0,2,0,0,0,0,0,0]
        let mut p1 = [0.0; 8];
        p1[1] = 2.0;
        let c = Coefficients { component: Component::S0, p0: 1.0, p1, p2: None };
        assert!(residual(&"1[0]5".parse().unwrap(), &c, &t).unwrap() < 1e-15);
        assert!(residual(&"3[0]5".parse().unwrap(), &c, &t).unwrap() < 1e-15);
        assert!(residual(&"2[0]5".parse().unwrap(), &c, &t).unwrap() > 1.0);
    }
}
