use fqcore::clifford::{make_base, random_pair_near, BaseKind};
use fqcore::error::FqError;
use fqcore::fqops::*;
use fqcore::mat::{dist, Mat};
use fqcore::mixedbase::*;
use fqcore::statements;

fn row(name: &str, comp: Component) -> ExpansionRow {
    let base = make_base(BaseKind::Pauli2);
    extract_row(&op(name), &base, &SectorAssignment::reference(), 1e-3)
        .unwrap()
        .into_iter()
        .find(|r| r.component == comp)
        .unwrap()
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn printed_tables() {
    // copied from the printed tables
    let want: [(&str, Component, [f64; 8]); 6] = [
        ("A_L", Component::S12, [0., 2., 0., 0., 0., 0., 2., 0.]),
        ("A_R", Component::S12, [0., -2., 0., 0., 0., 0., 2., 0.]),
        ("A_C", Component::S12, [0., 0., 0., 0., 0., 0., 2., 0.]),
        ("B", Component::S0, [0., 2., 0., 0., 0., 0., 0., 0.]),
        ("O^fSy", Component::S1, [1., 1., 1., 0., 0., 1., 1., 1.]),
        ("D^fx", Component::S12, [0., 0., 2., 0., 0., 0., 2., 0.]),
    ];
    for (n, comp, r) in want {
        let got = row(n, comp);
        assert!((got.p0 - 1.0).abs() < 1e-9, "{n} p0");
        assert!(close(&got.p1, &r, 1e-6), "{n}: {:?}", got.p1);
    }
}

#[test]
fn table_file_agrees_with_extraction() {
    let rows = statements::tables().unwrap();
    assert_eq!(rows.iter().map(|t| t.op.as_str()).collect::<Vec<_>>(), TABLE_OPS);
    for t in rows {
        assert!(close(&row(&t.op, t.component).p1, &t.row, 1e-6), "{}", t.op);
    }
}

fn anchors(extra: bool) -> Vec<Anchor> {
    let mut v: Vec<Anchor> = statements::tables()
        .unwrap()
        .into_iter()
        .filter(|t| ["A_L", "A_R", "B", "T", "O^fSy", "M_L", "M_R", "L^fx", "D^fx", "U^fx"].contains(&t.op.as_str()))
        .map(|t| Anchor { op: op(&t.op), component: t.component, row: t.row.to_vec() })
        .collect();
    if extra {
        v.push(Anchor { op: op("-A1^2"), component: Component::S0, row: vec![2., 2., 2., 2., 0.] });
    }
    v
}

#[test]
fn calibration_is_unique_with_the_closed_form_anchor() {
    let base = make_base(BaseKind::Pauli2);
    let models = [Model::Pure, Model::Mixed];
    let c = calibrate(&base, &anchors(true), &models, ParityRule::Free, 1e-3).unwrap();
    assert_eq!(c.assignment, SectorAssignment::reference());
    assert!(c.misfit < 1e-9);
    assert_eq!(calibrate(&base, &anchors(false), &models, ParityRule::Free, 1e-3).unwrap_err(), FqError::CalibrationAmbiguous(2));
    assert_eq!(calibrate(&base, &anchors(true), &models, ParityRule::Printed, 1e-3).unwrap_err(), FqError::CalibrationFailed);
}

#[test]
fn extension_qhat() {
    // printed values: scalar 0/2, vectorial 1/1, pseudoscalar 0/0, negated for y, zero for m
    let base = make_base(BaseKind::Pauli2);
    let asg = SectorAssignment::reference();
    for (n, comp, q) in [("L^fx", Component::S0, (0.0, 2.0)), ("T", Component::S1, (1.0, 1.0)), ("D^fx", Component::S12, (0.0, 0.0))] {
        for (m, s) in [(ExtMode::X, 1.0), (ExtMode::Y, -1.0), (ExtMode::M, 0.0)] {
            let r = extract_row(&extend(&op(n), m), &base, &asg, 1e-3).unwrap().into_iter().find(|r| r.component == comp).unwrap();
            assert!((r.p1[0] - s * q.0).abs() < 1e-6 && (r.p1[1] - s * q.1).abs() < 1e-6, "{n} {}: {:?}", m.tag(), r.p1);
        }
    }
}

#[test]
fn cx_relations() {
    let base = make_base(BaseKind::Pauli2);
    let asg = SectorAssignment::reference();
    for seed in 0..5 {
        let p = random_pair_near(&base, &asg, 0.1, seed).unwrap();
        let al = axis_left(&p).unwrap();
        let ar = axis_right(&p).unwrap();
        for n in ["L^fx", "B", "-A1^2"] {
            let x: Mat = extend(&op(n), ExtMode::X).eval_mat(&p).unwrap();
            let cx = extend(&op(n), ExtMode::Cx).eval_mat(&p).unwrap();
            assert!(dist(&cx, &-(&al * &x)) < 1e-9);
            assert!(dist(&cx, &-(&x * &ar)) < 1e-9);
        }
        for n in ["D^fx", "A_C"] {
            let x = extend(&op(n), ExtMode::X).eval_mat(&p).unwrap();
            let cx = extend(&op(n), ExtMode::Cx).eval_mat(&p).unwrap();
            assert!(dist(&cx, &(&al * &x)) < 1e-9);
        }
        let t = op("T");
        assert!(extend(&t, ExtMode::Cx).eval(&p).unwrap().dist(&extend(&t, ExtMode::X).eval(&p).unwrap()) < 1e-9);
    }
}

#[test]
fn statement_rows_of_named_examples() {
    // a few printed example rows, first five entries
    for (n, r) in [("M_R", [1., -1., 1., 1., 1.]), ("T_LL", [-3., 1., 1., -1., -1.]), ("T_R", [1., -1., 1., -1., -1.]), ("F_R", [1., 1., -1., 1., 1.])] {
        let got = row(n, Component::S1);
        assert!(close(&got.p1[..5], &r, 1e-6), "{n}: {:?}", got.p1);
    }
}
