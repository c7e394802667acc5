use fqcore::fqops::get;
use fqcore::hyperscaling::Cond;
use fqcore::mixedbase::Component;
use fqcore::statements::*;

#[test]
fn every_named_operation_exists() {
    for s in all().unwrap() {
        for o in &s.ops {
            assert!(get(o).is_some(), "{} names unknown `{o}`", s.source());
        }
    }
    for t in tables().unwrap() {
        assert!(get(&t.op).is_some(), "{}", t.op);
    }
}

#[test]
fn printed_items_read_back() {
    // copied from the printed lists
    let all = all().unwrap();
    let find = |src: &str| all.iter().find(|s| s.source() == src && s.ops.is_empty()).unwrap();
    let s = find("pseudoscalar.11");
    assert_eq!(s.text, "5[12]1 <=> 1[12]<+1>");
    assert_eq!(s.row.as_ref().unwrap().iter().map(|e| e.to_string()).collect::<Vec<_>>(), ["q3", "q4", "q3", "q4", "0"]);
    assert_eq!(s.reduction.as_ref().unwrap().to_string(), "e{3,4}");
    let s = find("pseudoscalar.16");
    assert_eq!(s.formula.lhs.len(), 4);
    assert_eq!(s.formula.rhs.as_ref().unwrap().len(), 1);
    assert_eq!(s.formula.component(), Some(Component::S12));
}

#[test]
fn line_format() {
    let s = parse_line("1,4[0]1 & 5[0]2 | 2 q2 -q2 0 0 | ne{2} | scalar.99 @ B; -A1^2").unwrap();
    assert_eq!(s.source(), "scalar.99");
    assert_eq!(s.ops, ["B", "-A1^2"]);
    assert_eq!(s.formula.lhs.len(), 2);
    assert_eq!(s.formula.conds().count(), 3);
    assert!(s.reduction.unwrap().negated);
    for bad in ["1[0]2 | - | -", "1[0]2 | - | - | noitem", "1[0]2 <=> 3[0]2 <=> 4[0]2 | - | - | a.1", "1[7]2 | - | - | a.1", "1[0]2 | x | - | a.1"] {
        assert!(parse_line(bad).is_err(), "{bad}");
    }
}

#[test]
fn conditions_print_as_parsed() {
    for t in ["1[0]2", "~4[1]6", "6[12]<+1>", "3[2]<-1>"] {
        let c: Cond = t.parse().unwrap();
        assert_eq!(c.to_string(), t);
    }
}

#[test]
fn row_residual_binds_free_symbols() {
    let pat: Vec<RowEntry> = "1 q2 1 q5 q5".split(' ').map(|x| x.parse().unwrap()).collect();
    let mut p = [1.0, -3.0, 1.0, 0.5, 0.5, 0.0, 0.0, 0.0];
    assert!(row_residual(&pat, 1.0, &p) < 1e-15);
    p[4] = -0.5;
    assert!(row_residual(&pat, 1.0, &p) > 0.5);
    // rows scale with p0
    let q = [2.0, -6.0, 2.0, 1.0, 1.0, 0.0, 0.0, 0.0];
    assert!(row_residual(&pat, 2.0, &q) < 1e-15);
}
