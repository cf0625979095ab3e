use std::process::{Command, Stdio};
use std::io::Write;

use cyclic5::cli::run;
use cyclic5::families::{biladder, petersen};
use cyclic5::graph::{from_graph6, to_adjacency_text, to_graph6};

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cyclic5").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_reads_standard_input() {
    let p = format!("{}\n", to_graph6(&petersen()));
    assert_eq!(call(&["check", "--pred", "c5c", "--in", "-"], &p), (0, "true\n".into(), String::new()));
    assert_eq!(call(&["check", "--pred", "planar", "--in", "-"], &p).0, 1);
    assert_eq!(call(&["check", "--pred", "biladder"], &p).0, 0);
    let two = format!("{p}{}\n", to_graph6(&biladder(10).unwrap()));
    assert_eq!(call(&["check", "--pred", "planar"], &two), (1, "false\ntrue\n".into(), String::new()));
}

#[test]
fn adjacency_format() {
    let text = to_adjacency_text(&biladder(7).unwrap());
    assert_eq!(call(&["--format", "adj", "check", "--pred", "quad"], &text).0, 0);
    let (code, out, _) = call(&["expand", "--format", "adj", "--kind", "one", "--args", "0", "1", "9", "11"], &text);
    assert_eq!(code, 0);
    assert!(out.starts_with("n=16\n"));
}

#[test]
fn malformed_input_is_a_one_line_usage_error() {
    for bad in ["not a graph\n", "", "n=3\n0: 1\n"] {
        let (code, out, err) = call(&["check", "--pred", "c5c"], bad);
        assert_eq!(code, 2, "{bad:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{err}");
    }
    let (code, _, err) = call(&["check", "--pred", "bogus"], "");
    assert_eq!(code, 2);
    assert_eq!(err.lines().count(), 1);
    assert_eq!(call(&["frobnicate"], "").0, 2);
    assert_eq!(call(&["--help"], "").0, 0);
}

#[test]
fn embed_writes_the_embedding() {
    let dir = tempfile::tempdir().unwrap();
    let guest = dir.path().join("petersen.g6");
    let host = dir.path().join("biladder14.g6");
    let file = dir.path().join("eta.txt");
    std::fs::write(&guest, to_graph6(&petersen())).unwrap();
    std::fs::write(&host, to_graph6(&biladder(7).unwrap())).unwrap();
    let args = ["embed", "--guest", guest.to_str().unwrap(), "--host", host.to_str().unwrap(), "--out", file.to_str().unwrap()];
    let (code, out, _) = call(&args, "");
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), out);
    assert!(out.starts_with("v 0 -> "));

    // the Petersen graph is not in the Dodecahedron
    std::fs::write(&host, to_graph6(&biladder(10).unwrap())).unwrap();
    let args = ["embed", "--guest", guest.to_str().unwrap(), "--host", host.to_str().unwrap()];
    assert_eq!(call(&args, "").0, 1);
    std::fs::write(&host, to_graph6(&biladder(9).unwrap())).unwrap();
    let args = ["embed", "--guest", guest.to_str().unwrap(), "--host", host.to_str().unwrap(), "--budget", "1"];
    assert_eq!(call(&args, "").0, 3);
}

#[test]
fn expand_kinds() {
    let p = format!("{}\n", to_graph6(&petersen()));
    let order = |args: &[&str]| {
        let (code, out, err) = call(args, &p);
        assert_eq!(code, 0, "{err}");
        from_graph6(out.trim()).unwrap().order()
    };
    assert_eq!(order(&["expand", "--kind", "one", "--args", "0,1,2,7"]), 12);
    assert_eq!(order(&["expand", "--kind", "handle", "--args", "0,1,3,8"]), 12);
    assert_eq!(order(&["expand", "--kind", "amp", "--args", "0,1,2,3,4,9"]), 14);
    assert_eq!(order(&["expand", "--kind", "circuit", "--args", "0,1,2,3,4"]), 20);
    // vertex out of range, and a non-circuit
    assert_eq!(call(&["expand", "--kind", "one", "--args", "0,1,2,70"], &p).0, 2);
    assert_eq!(call(&["expand", "--kind", "circuit", "--args", "0,1,2,3,5"], &p).0, 2);
}

#[test]
fn typed_expansion_from_the_command_line() {
    // short extension of Petersen; its quadrangle is 1 2 11 10
    let (_, g, _) = call(&["expand", "--kind", "one", "--args", "0,1,2,7"], &format!("{}\n", to_graph6(&petersen())));
    let gr = from_graph6(g.trim()).unwrap();
    let v1 = gr.neighbors(1).iter().copied().find(|&w| ![2, 10].contains(&w)).unwrap();
    let far = (0..gr.order()).find(|&x| ![1, 2, 10, 11, v1].contains(&x) && !gr.has_edge(x, v1)).unwrap();
    let y = gr.neighbors(far)[0];
    let args = format!("1,2,11,10,{far},{y}");
    let (code, out, err) = call(&["expand", "--kind", "typeA", "--args", &args], &g);
    assert_eq!(code, 0, "{err}");
    assert_eq!(from_graph6(out.trim()).unwrap().order(), 14);
}

#[test]
fn verify_closure_reports_equal_slices() {
    let (code, out, _) = call(&["verify", "--theorem", "1.7", "--max-n", "12"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "n=10\tcatalog=1\tbrute=1\tsymmetric-difference=0\nn=12\tcatalog=2\tbrute=2\tsymmetric-difference=0\nclosure\tequal\n");
}

#[test]
fn verify_theorems_at_twelve() {
    for t in ["1.6", "3.6", "4.6", "6.1", "6.2", "7.6", "handle-or-circuit"] {
        let (code, out, err) = call(&["verify", "--theorem", t, "--max-n", "12", "--threads", "2"], "");
        assert_eq!(code, 0, "{t}: {err}");
        let summary = out.lines().last().unwrap();
        assert!(summary.starts_with("summary\t") && summary.contains("exhausted=0"), "{t}: {summary}");
    }
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = call(&["verify", "--theorem", "7.6", "--max-n", "12", "--out", dir.path().to_str().unwrap()], "");
    assert_eq!(code, 0);
    let summary = std::fs::read_to_string(dir.path().join("summary.tsv")).unwrap();
    let rec = summary.lines().nth(1).unwrap();
    let wit = rec.rsplit('\t').next().unwrap();
    assert!(std::fs::read_to_string(dir.path().join(wit)).unwrap().starts_with("label handle\n"));
}

#[test]
fn gen_is_deterministic_and_honours_the_environment() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let r1 = call(&["gen", "--max-n", "14", "--out", a.path().to_str().unwrap()], "");
    let r2 = call(&["gen", "--max-n", "14", "--out", b.path().to_str().unwrap()], "");
    assert_eq!(r1, r2);
    assert_eq!(r1.0, 0);
    for f in ["index.txt", "14/graphs.g6", "14/provenance.txt"] {
        assert_eq!(std::fs::read(a.path().join(f)).unwrap(), std::fs::read(b.path().join(f)).unwrap());
    }

    // through the real binary, with the catalog location taken from the
    // environment
    let c = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic5"))
        .args(["gen", "--max-n", "12", "--ops", "handle"])
        .env("CYCLIC5_CATALOG_DIR", c.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(c.path().join("index.txt").exists());
}

#[test]
fn binary_exit_codes() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclic5"))
        .args(["check", "--pred", "dodec", "--in", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(to_graph6(&petersen()).as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "true\n");

    let out = Command::new(env!("CARGO_BIN_EXE_cyclic5")).args(["brute", "--n", "7", "--out", "/dev/null"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
}
