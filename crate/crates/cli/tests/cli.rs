use std::path::PathBuf;
use std::process::{Command, Output as ProcOutput};

use homocyl::field::RationalFunction;
use homocyl::format::parse_cylinder;
use homocyl::laurent::{LaurentPoly, Variables};
use homocyl_cli::{Output, Report};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn homocyl(args: &[&str]) -> ProcOutput {
    Command::new(env!("CARGO_BIN_EXE_homocyl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &ProcOutput) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &ProcOutput) -> i32 {
    o.status.code().expect("exited normally")
}

/// Runs with `--json` and returns the exit code, stdout and the parsed report.
/// The JSON must survive a deserialize/serialize round trip unchanged.
fn with_json(args: &[&str]) -> (i32, String, Report) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut full = vec!["--json", path.to_str().unwrap()];
    full.extend_from_slice(args);
    let o = homocyl(&full);
    let raw = std::fs::read_to_string(&path).unwrap();
    let report: Report = serde_json::from_str(&raw).unwrap();
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(raw, again, "JSON does not round-trip");
    assert_eq!(report.text.join("\n") + "\n", stdout(&o));
    assert_eq!(report.exit_code, code(&o));
    (code(&o), stdout(&o), report)
}

fn vars(names: &[String]) -> Variables {
    Variables::new(names.iter().map(String::as_str))
}

#[test]
fn alexander_of_seifert_exterior_and_cylinder() {
    for file in ["trefoil.seifert", "trefoil.ext", "p359.cyl", "p359.seifert"] {
        let (c, out, report) = with_json(&["alexander", &data(file)]);
        assert_eq!(c, 0);
        assert_eq!(out, "t^2 - t + 1 (degree 2)\n", "{file}");
        let Output::Alexander { variables, polynomial, degree, .. } = report.result else {
            panic!("wrong report kind")
        };
        let v = vars(&variables);
        let got: LaurentPoly = LaurentPoly::parse(&polynomial, &v).unwrap();
        let want: LaurentPoly = LaurentPoly::parse("1 - t + t^2", &v).unwrap();
        assert_eq!(got, want);
        assert_eq!(degree, Some(2));
    }
    let (_, out, _) = with_json(&["alexander", &data("figure8.seifert")]);
    assert_eq!(out, "t^2 - 3*t + 1 (degree 2)\n");
}

#[test]
fn classify_and_strict_exit() {
    let (c, out, _) = with_json(&["classify", &data("trefoil.seifert")]);
    assert_eq!(c, 0);
    assert!(out.starts_with("verdict: HomologicallyFibered\n"));
    let (c, out, report) = with_json(&["--strict", "classify", &data("946.seifert")]);
    assert_eq!(c, 1);
    assert!(out.starts_with("verdict: RationallyHomologicallyFibered\n"));
    let Output::Classification { det_s, .. } = report.result else { panic!() };
    assert_eq!(det_s, "-2");
    assert_eq!(code(&homocyl(&["classify", &data("946.seifert")])), 0);
}

#[test]
fn sigma_from_both_sides_agrees() {
    let (_, a, ra) = with_json(&["sigma", &data("p359.seifert")]);
    let (_, b, rb) = with_json(&["sigma", &data("p359.cyl")]);
    assert_eq!(a, b);
    assert!(a.contains("[3, 7]\n  [-1, -2]"));
    let (Output::Sigma { matrix: ma, .. }, Output::Sigma { matrix: mb, .. }) = (ra.result, rb.result) else {
        panic!()
    };
    assert_eq!(ma, mb);
}

#[test]
fn three_strand_census() {
    let (c, out, report) = with_json(&["pretzel-census", "--strands", "3", "--p-min", "-99", "--p-max", "-3", "--qr-max", "99"]);
    assert_eq!(c, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 23);
    assert_eq!(lines[0], "{-3,5,9}");
    let summary: serde_json::Value = serde_json::from_str(lines[22]).unwrap();
    assert_eq!(summary["count"], 22);
    assert_eq!(summary["leading_plus_one"], 12);
    let Output::Census { count, types, .. } = report.result else { panic!() };
    assert_eq!(count, 22);
    assert!(types.contains(&vec![-3, 5, 9]));

    // Thread count and ordering flags change scheduling and order only.
    let seq = Command::new(env!("CARGO_BIN_EXE_homocyl"))
        .args(["pretzel-census", "--strands", "3"])
        .env("HOMOCYL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(stdout(&seq), out);
    let lex = stdout(&homocyl(&["pretzel-census", "--order", "lex"]));
    let mut a: Vec<&str> = out.lines().take(22).collect();
    let b: Vec<&str> = lex.lines().take(22).collect();
    assert_ne!(a, b);
    a.sort();
    let mut b2 = b.clone();
    b2.sort();
    assert_eq!(a, b2);
}

#[test]
fn small_five_strand_census() {
    let (c, out, report) = with_json(&["pretzel-census", "--strands", "5", "--p-min", "-9", "--qr-max", "9"]);
    assert_eq!(c, 0);
    let Output::Census { strands, negatives, count, .. } = report.result else { panic!() };
    assert_eq!((strands, negatives), (5, Some(1)));
    assert_eq!(out.lines().count(), count + 1);
}

#[test]
fn fiber_check_verdicts_and_exit_codes() {
    let (c, out, report) = with_json(&["fiber-check", &data("p359.cyl")]);
    assert_eq!(c, 0);
    assert!(out.starts_with("OBSTRUCTED: torsion nontrivial; not fibered\n"));
    let Output::FiberCheck { torsion_trivial, magnus_integral, non_laurent_entries, variables, torsion, .. } =
        report.result
    else {
        panic!()
    };
    assert!(!torsion_trivial && !magnus_integral);
    assert_eq!(non_laurent_entries.len(), 4);
    let v = vars(&variables);
    let printed = RationalFunction::parse("-t1^-1*t2^-6 - t1 + t2^-4 + t2^-3 + t2^-2", &v).unwrap();
    assert!(RationalFunction::parse(&torsion, &v).unwrap().eq_up_to_unit(&printed));
    assert_eq!(code(&homocyl(&["--strict", "fiber-check", &data("p359.cyl")])), 1);

    for file in ["identity.cyl", "trefoil_monodromy.cyl"] {
        let o = homocyl(&["--strict", "fiber-check", &data(file)]);
        assert_eq!(code(&o), 0, "{file}");
        assert!(stdout(&o).starts_with("UNOBSTRUCTED"));
    }
}

#[test]
fn cylinder_report_reparses() {
    let (c, _, report) = with_json(&["cylinder", &data("p359.cyl")]);
    assert_eq!(c, 0);
    let Output::Cylinder { variables, magnus, a, c: cblock, .. } = report.result else { panic!() };
    let v = vars(&variables);
    assert_eq!(a, vec![vec!["1", "0", "0", "0"], vec!["0", "1", "0", "0"]]);
    assert_eq!(cblock, vec![vec!["0", "0", "1", "0"], vec!["0", "0", "0", "1"]]);
    let (p, rho) = parse_cylinder(&std::fs::read_to_string(data("p359.cyl")).unwrap()).unwrap();
    let m = homocyl::cylinder::magnus(&p, &rho).unwrap();
    for (i, row) in magnus.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            assert!(RationalFunction::parse(s, &v).unwrap().rf_eq(m.get(i, j)));
        }
    }
}

#[test]
fn torsion_and_factor_check() {
    let (_, out, _) = with_json(&["torsion", &data("trefoil.ext")]);
    assert!(out.starts_with("torsion: (t^2 - t + 1)/"));
    let (_, out, _) = with_json(&["torsion", "--drop", "b", &data("trefoil.ext")]);
    assert!(out.contains("dropped generator: b"));
    for file in ["p359.cyl", "identity.cyl", "trefoil_monodromy.cyl"] {
        let (c, out, report) = with_json(&["--strict", "factor-check", &data(file), "--mu-var", "s"]);
        assert_eq!(c, 0, "{file}");
        assert!(out.contains("FACTORIZATION HOLDS"), "{file}");
        let Output::Factorization { variables, exterior, predicted, holds, .. } = report.result else { panic!() };
        assert!(holds);
        let v = vars(&variables);
        let (e, p) = (RationalFunction::parse(&exterior, &v).unwrap(), RationalFunction::parse(&predicted, &v).unwrap());
        assert!(e.eq_up_to_unit(&p));
    }
}

#[test]
fn bound_on_946_and_trefoil() {
    for file in ["946.seifert", "946.matrix"] {
        let (_, out, report) = with_json(&["bound", &data(file)]);
        assert!(out.starts_with("lower bound: 2 (certified)"), "{file}");
        let Output::Bound { bound, certified, .. } = report.result else { panic!() };
        assert_eq!((bound, certified), (2, true));
    }
    let (_, out, _) = with_json(&["bound", &data("trefoil.seifert")]);
    assert!(out.starts_with("lower bound: 1 (certified)"));
}

#[test]
fn output_is_deterministic() {
    for args in [vec!["cylinder", "p359.cyl"], vec!["factor-check", "p359.cyl"], vec!["bound", "946.seifert"]] {
        let file = data(args[1]);
        let a = homocyl(&[args[0], &file]);
        let b = homocyl(&[args[0], &file]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn input_errors_exit_with_two() {
    let cases = [
        (vec!["cylinder", "invalid/bad_rho.cyl"], "relator 3"),
        (vec!["cylinder", "invalid/missing_rho.cyl"], "`c2_p`"),
        (vec!["cylinder", "invalid/deficiency.cyl"], "deficiency"),
        (vec!["fiber-check", "invalid/bad_word.cyl"], "5:10"),
        (vec!["alexander", "invalid/syntax.seifert"], "3:3"),
        (vec!["alexander", "no-such-file.seifert"], "cannot read"),
        (vec!["classify", "p359.cyl"], "needs a Seifert matrix"),
        (vec!["fiber-check", "trefoil.seifert"], "needs a [cylinder] file"),
        (vec!["bound", "trefoil.ext"], "bound takes"),
        (vec!["torsion", "--drop", "zz", "trefoil.ext"], "not a generator"),
    ];
    for (args, needle) in cases {
        let mut full: Vec<String> = args[..args.len() - 1].iter().map(|s| s.to_string()).collect();
        full.push(data(args[args.len() - 1]));
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let o = homocyl(&refs);
        let err = String::from_utf8_lossy(&o.stderr);
        assert_eq!(code(&o), 2, "{args:?}: {err}");
        assert!(err.contains(needle), "{args:?}: {err}");
        assert!(err.contains("hint:"), "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(code(&homocyl(&["pretzel-census", "--strands", "4"])), 2);
    assert_eq!(code(&homocyl(&["pretzel-census", "--p-max", "5"])), 2);
    assert_eq!(code(&homocyl(&["no-such-command"])), 2);
    assert_eq!(code(&homocyl(&["alexander"])), 2);
}
