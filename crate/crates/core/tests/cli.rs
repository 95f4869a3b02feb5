use std::io::Write;
use std::process::{Command, Output, Stdio};

use num_bigint::BigInt;
use polargroup::cli::expr::{parse, Expr};
use proptest::prelude::*;

fn polarctl(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polarctl"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn circle_boundary_point_has_order_two() {
    let o = polarctl(&["class", "--ring", "circle", "t - i"], "");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("class: [t-1]"), "{}", s);
    assert!(s.contains("order: 2"), "{}", s);
}

#[test]
fn fixed_ring_of_the_circle() {
    let o = polarctl(&["fixedring", "--ring", "circle"], "");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("relation: X^2+Y^2 = 1"), "{}", s);
    assert!(s.contains("verified: true"), "{}", s);
}

#[test]
fn oracle_rejects_a_non_norm() {
    let o = polarctl(&["oracle", "--ring", "line", "((x-i))/((x+i))"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("trivial: false"));
}

#[test]
fn json_output_carries_the_schema() {
    let o = polarctl(&["--json", "oracle", "--ring", "line", "(x-i)*(x+i)"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["trivial"], true);
}

#[test]
fn dash_reads_from_stdin() {
    let o = polarctl(&["eq", "--ring", "line", "-", "-"], "x^2+1\n(x-i)*(x+i)\n");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let direct = polarctl(&["eq", "--ring", "line", "x^2+1", "(x-i)*(x+i)"], "");
    assert_eq!(direct.stdout, o.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(polarctl(&["--help"], "").status.code(), Some(0));
    assert_eq!(polarctl(&["class", "--ring", "nope", "x"], "").status.code(), Some(2));
    assert_eq!(polarctl(&["class", "--ring", "line", "x +"], "").status.code(), Some(2));
    assert_eq!(polarctl(&["frobnicate"], "").status.code(), Some(2));
    let o = polarctl(&["split", "--ring", "line", "x^2-2"], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x^2-2"));
    assert_eq!(polarctl(&["report", "all"], "").status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["report", "all"][..],
        &["--json", "factor", "--ring", "icircle", "(t-2)^2*(t+3*i)"][..],
        &["orbit", "--ring", "conic", "t^2-5"][..],
    ] {
        let (a, b) = (polarctl(args, ""), polarctl(args, ""));
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "{:?}", args);
    }
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..50).prop_map(|n| Expr::Int(BigInt::from(n))),
        Just(Expr::I),
        prop_oneof![Just("x"), Just("t")].prop_map(|v| Expr::Var(v.to_string())),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner, -4i64..6).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]
    #[test]
    fn parse_inverts_print(e in arb_expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e, "{}", printed);
    }
}
