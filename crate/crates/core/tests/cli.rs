use iet3::cli::{run, EXIT_DOMAIN, EXIT_FALSE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

const EPS: &str = "3/2-1/2*sqrt(5)";
const L: &str = "1/2+1/10*sqrt(5)";

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("iet3").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn ternarize_words_prints_the_ternary_word() {
    assert_eq!(call(&["ternarize-words", "0100101", "0101001"]), (EXIT_OK, "ACABAC\n".into(), String::new()));
}

#[test]
fn decompose_prints_the_pair() {
    let (code, out, _) = call(&["decompose", "--eta", "A:B,B:BCB,C:CAC"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "power: 1\nphi: 0:01,1:101\npsi: 0:10,1:101\nlambda_conjugate_sign: +\n");
}

#[test]
fn gen3iet_from_zero_prints_a_bare_word() {
    let (code, out, _) = call(&["gen3iet", "--eps", EPS, "--l", L, "--c", "-1/3", "--from", "0", "--to", "8"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "BCBCACBCB\n"));
    let (_, out, _) = call(&["gen3iet", "--eps", EPS, "--l", L, "--c", "-1/3", "--from", "-1", "--to", "2"]);
    assert_eq!(out, "C|BCB\n");
}

#[test]
fn default_window_is_symmetric() {
    let (_, out, _) = call(&["gensturm", "--alpha", EPS, "--beta", "1/3"]);
    let (left, right) = out.trim_end().split_once('|').unwrap();
    assert_eq!((left.len(), right.len()), (2000, 2001));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["amicable", "10", "01"]).0, EXIT_FALSE);
    assert_eq!(call(&["amicable", "01", "10"]).0, EXIT_OK);
    assert_eq!(call(&["ternarize-words", "10", "01"]).0, EXIT_DOMAIN);
    assert_eq!(call(&["infer-eps", "--eta", "A:AAB,B:BC,C:CA"]).0, EXIT_DOMAIN);
    assert_eq!(call(&["gen3iet", "--eps", "1/2+", "--l", L, "--c", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen3iet", "--eps", EPS, "--l", L, "--c", "0", "--from", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["decompose", "--eta", "A:B,B:BCB"]).0, EXIT_USAGE);
    assert_eq!(call(&["certify-sturm", "--alpha", "1/2+1/10*sqrt(5)", "--beta", "1/3"]).0, EXIT_FALSE);
    assert_eq!(call(&["certify-sturm", "--alpha", "0+1/2*sqrt(2)", "--beta", "3/2"]).0, EXIT_DOMAIN);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn certificates_print_witness_tables() {
    let (code, out, _) = call(&["certify-3iet", "--eps", EPS, "--l", L, "--c", "-1/3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("verdict: true\ncross_check: true\n"));
    assert!(out.contains("c'+l'\t1/6-1/10*sqrt(5)\t-0.0569401310833123\n"));
    let (code, out, _) = call(&["matrix-check", "--eta", "A:B,B:BCB,C:CAC", "--eps", "1/3+1/10*sqrt(5)"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("failed_clause: eigen_equation\n"));
    let (code, out, _) =
        call(&["certify-3iet", "--eps", EPS, "--l", L, "--c", "-1/3", "--eta", "A:B,B:BCB,C:CAC"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("spectral failed_clause: origin_lattice\n"));
}

#[test]
fn fixedpoint_and_selfsim() {
    let (_, out, _) = call(&["fixedpoint", "--phi", "0:01,1:101", "--psi", "0:10,1:101", "--len", "7"]);
    assert_eq!(out, "eta: A:B,B:BCB,C:CAC\nseed: C (common letter 1)\nCACBCAC\n");
    let (_, out, _) = call(&["fixedpoint", "--eta", "0:01,1:0", "--len", "8"]);
    assert_eq!(out, "01001010\n");
    let (code, out, _) = call(&["selfsim", "--eta", "A:ACA,B:BAB,C:B", "--plot"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("recovered: A:ACA,B:BAB,C:B\n"));
    assert!(out.contains("# index\texact\tapprox (display only)\n0\t0\t0\n1\t1\t1\n"));
}

#[test]
fn words_can_come_from_files() {
    let dir = std::env::temp_dir().join(format!("iet3-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.txt");
    let (_, word, _) = call(&["gen3iet", "--eps", EPS, "--l", L, "--c", "-1/3", "--from", "0", "--to", "3000"]);
    std::fs::write(&path, &word).unwrap();
    let arg = format!("@{}", path.display());
    let (code, out, _) = call(&["complexity", &arg, "--n-max", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1\t3\n2\t5\n3\t7\n4\t9\n5\t11\nclass: threeiet_consistent\n");
    assert_eq!(call(&["complexity", "@/nonexistent/w.txt"]).0, EXIT_USAGE);
    std::fs::remove_dir_all(dir).unwrap();
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (_, out, _) = call(&full);
    serde_json::from_str(&out).unwrap()
}

/// Rebuilds an argument list from the `inputs` object of a JSON report.
fn argv_from_inputs(doc: &Value, positional: &[&str]) -> Vec<String> {
    let inputs = doc["inputs"].as_object().unwrap();
    let mut argv = vec!["--format".to_string(), "json".to_string(), doc["command"].as_str().unwrap().to_string()];
    for key in positional {
        argv.push(inputs[*key].as_str().unwrap().to_string());
    }
    for (key, value) in inputs {
        if positional.contains(&key.as_str()) {
            continue;
        }
        let value = value.as_str().unwrap();
        argv.push(format!("--{key}"));
        if value != "true" {
            argv.push(value.to_string());
        }
    }
    argv
}

#[test]
fn json_reports_round_trip() {
    let cases: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (vec!["ternarize-words", "0100101", "0101001"], vec!["u", "v"]),
        (vec!["amicable", "10", "01"], vec!["u", "v"]),
        (vec!["complexity", "ABCAB", "--n-max", "3"], vec!["word"]),
        (vec!["ternarize-morph", "--phi", "0:01,1:0", "--psi", "0:10,1:0"], vec![]),
        (vec!["decompose", "--eta", "A:ACA,B:BAB,C:B"], vec![]),
        (vec!["infer-eps", "--eta", "A:B,B:BCB,C:CAC"], vec![]),
        (vec!["gen3iet", "--eps", EPS, "--l", L, "--c", "-1/3", "--from", "-20", "--to", "20"], vec![]),
        (vec!["gensturm", "--alpha", EPS, "--beta", "1/3", "--from", "-5", "--to", "5"], vec![]),
        (vec!["certify-sturm", "--alpha", "0+1/2*sqrt(2)", "--beta", "0"], vec![]),
        (vec!["certify-3iet", "--eps", EPS, "--l", L, "--c", "-1/3"], vec![]),
        (vec!["matrix-check", "--eta", "A:B,B:BCB,C:CAC", "--eps", EPS], vec![]),
        (vec!["fixedpoint", "--phi", "0:010,1:01", "--psi", "0:010,1:10", "--len", "10"], vec![]),
        (vec!["selfsim", "--eta", "A:B,B:BCB,C:CAC", "--len", "60", "--plot"], vec![]),
    ];
    for (args, positional) in cases {
        let doc = json(&args);
        assert_eq!(doc["command"], args[0]);
        assert!(doc["witnesses"].is_object());
        let again: Vec<String> = argv_from_inputs(&doc, &positional);
        let again: Vec<&str> = again.iter().map(String::as_str).collect();
        let (_, out, _) = call(&again);
        let redo: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(redo["result"], doc["result"], "{args:?}");
        assert_eq!(redo, doc);
    }
    let doc = json(&["fixedpoint", "--phi", "0:010,1:01", "--psi", "0:010,1:10", "--len", "10"]);
    assert_eq!(doc["result"]["word"], "ACABACABAB");
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "certify-3iet", "--eps", EPS, "--l", L, "--c", "-1/3", "--eta", "A:B,B:BCB,C:CAC"];
    let first = call(&args);
    for _ in 0..3 {
        assert_eq!(call(&args), first);
    }
}
