use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_dynchrome"));
    c.env_remove("DYNCHROME_BUDGET_VERTICES");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str, content: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    stdout(&run(&full))
}

#[test]
fn chi2_of_c5_is_five() {
    let c5 = gen(&["cycle", "5"]);
    let out = stdout(&run_stdin(&["chi2", "-"], &c5));
    assert_eq!(out.lines().next(), Some("5"));
    assert_eq!(out.lines().filter(|l| l.starts_with('v')).count(), 5);
}

#[test]
fn report_on_k33_has_conjecture_line() {
    let k33 = gen(&["kmm", "3"]);
    let out = stdout(&run_stdin(&["report", "-"], &k33));
    assert!(out.lines().any(|l| l == "conjecture1 2 2 holds"), "{out}");
    assert!(out.lines().any(|l| l.starts_with("chi_alpha - - n/a")));
}

#[test]
fn unknown_subcommand_exits_1_with_one_line() {
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("Usage"));
}

#[test]
fn exit_codes_by_error_kind() {
    let c5 = gen(&["cycle", "5"]);
    let o = run_stdin(&["chi", "--budget-vertices", "3", "-"], &c5);
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .env("DYNCHROME_BUDGET_VERTICES", "3")
        .args(["chi", "-"])
        .stdin(Stdio::null())
        .output()
        .unwrap();
    // empty stdin is a parse error before any budget check
    assert_eq!(o.status.code(), Some(1));
    let o = run_stdin(&["chi", "-"], "p 3 1\ne 1 9\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
    let o = run_stdin(
        &["thm4", "-"],
        &gen(&["kmm", "3"]).replace("p 6 9", "p 7 9"),
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn env_budget_is_honored() {
    let c5 = tmp("env_c5.graph", &gen(&["cycle", "5"]));
    let o = bin()
        .env("DYNCHROME_BUDGET_VERTICES", "4")
        .arg("chi")
        .arg(&c5)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn same_seed_same_bytes() {
    for args in [
        vec!["gen", "regular", "40", "6", "--seed", "11"],
        vec!["gen", "prop5", "2"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
    let g = gen(&["regular", "40", "6", "--seed", "11"]);
    let a = run_stdin(&["thm4", "--seed", "5", "-"], &g);
    let b = run_stdin(&["thm4", "--seed", "5", "-"], &g);
    assert_eq!(stdout(&a), stdout(&b));
    let a = run_stdin(&["thm3", "--seed", "5", "-"], &g);
    let b = run_stdin(&["thm3", "--seed", "5", "-"], &g);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn witnesses_reverify() {
    let graphs = [
        ("w_c5", gen(&["cycle", "5"])),
        ("w_pet", gen(&["petersen"])),
        ("w_r1", gen(&["regular", "24", "5", "--seed", "2"])),
        ("w_r2", gen(&["regular", "30", "4", "--seed", "9"])),
        ("w_k5", gen(&["complete", "5"])),
        ("w_r3", gen(&["regular", "20", "8", "--seed", "1"])),
    ];
    for (name, g) in &graphs {
        let gp = tmp(&format!("{name}.graph"), g);
        let chi: usize = stdout(&run(&["chi", gp.to_str().unwrap()]))
            .lines()
            .next()
            .unwrap()
            .parse()
            .unwrap();
        let mut cmds: Vec<Vec<&str>> = vec![vec!["chi2"], vec!["thm4"]];
        if chi >= 4 {
            cmds.push(vec!["thm3", "--strategy", "independent"]);
            cmds.push(vec!["thm3", "--strategy", "components"]);
        }
        for cmd in cmds {
            let mut args = cmd.clone();
            let gs = gp.to_str().unwrap();
            args.push(gs);
            let out = stdout(&run(&args));
            let wp = tmp(&format!("{name}.{}.out", cmd.join("_")), &out);
            let v = run(&["verify", "--dynamic", gs, wp.to_str().unwrap()]);
            assert_eq!(
                stdout(&v).lines().next(),
                Some("dynamic yes"),
                "{name} {cmd:?}"
            );
        }
        let chi = stdout(&run(&["chi", gp.to_str().unwrap()]));
        let wp = tmp(&format!("{name}.chi.out"), &chi);
        let v = run(&[
            "verify",
            "--proper",
            gp.to_str().unwrap(),
            wp.to_str().unwrap(),
        ]);
        assert_eq!(stdout(&v).lines().next(), Some("proper yes"));
    }
}

#[test]
fn verify_rejects_non_dynamic() {
    let c4 = tmp("v_c4.graph", &gen(&["cycle", "4"]));
    let col = tmp("v_c4.col", "v1 1\nv2 2\nv3 1\nv4 2\n");
    let o = run(&[
        "verify",
        "--dynamic",
        c4.to_str().unwrap(),
        col.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stdout)
        .unwrap()
        .starts_with("dynamic no"));
    let o = run(&[
        "verify",
        "--proper",
        c4.to_str().unwrap(),
        col.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn two_color_outputs() {
    let fano = "h 7 7\ns 1 2 3\ns 1 4 5\ns 1 6 7\ns 2 4 6\ns 2 5 7\ns 3 4 7\ns 3 5 6\n";
    assert_eq!(stdout(&run_stdin(&["two-color", "-"], fano)), "UNSAT\n");
    let out = stdout(&run_stdin(&["two-color", "-"], "h 4 2\ns 1 2 3\ns 2 3 4\n"));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with('A') && lines[1].starts_with('B'));
}

#[test]
fn gen_metadata_and_sizes() {
    let p = gen(&["prop5", "2"]);
    assert!(p.starts_with("p 36 90\n"));
    assert!(p.contains("c prop5 n=2 d=2 m=3"));
    let d = gen(&["deltadelta"]);
    assert!(d.starts_with("p 91 "));
    assert!(d.contains("max_degree=14 min_degree=2"));
    assert!(gen(&["petersen"]).starts_with("p 10 15\n"));
}

#[test]
fn square_and_products() {
    let c5 = gen(&["cycle", "5"]);
    assert!(stdout(&run_stdin(&["square", "-"], &c5)).starts_with("p 5 10\n"));
    let k2 = tmp("p_k2.graph", &gen(&["complete", "2"]));
    let k2 = k2.to_str().unwrap();
    let cart = stdout(&run(&["product", "--kind", "cartesian", k2, k2]));
    assert!(cart.starts_with("p 4 4\nc factors 2 2\n"));
    let cat = stdout(&run(&["product", "--kind", "categorical", k2, k2]));
    assert!(cat.starts_with("p 4 2\n"));
}

#[test]
fn thm3_and_thm4_print_certificates() {
    let g = gen(&["regular", "30", "5", "--seed", "4"]);
    let out = stdout(&run_stdin(&["thm3", "--strategy", "components", "-"], &g));
    assert!(
        out.lines()
            .any(|l| l.starts_with("inequality ") && l.ends_with(" holds")),
        "{out}"
    );
    let out = stdout(&run_stdin(&["thm4", "-"], &g));
    assert!(out
        .lines()
        .any(|l| l.starts_with("chi2_bound = chi_base + 2l = ")));
    assert!(out.lines().any(|l| l == "l 6"));
}

#[test]
fn json_mirrors_plain_output() {
    let c5 = gen(&["cycle", "5"]);
    let out = stdout(&run_stdin(&["chi2", "--json", "-"], &c5));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["chi2"], 5);
    assert_eq!(v["coloring"].as_array().unwrap().len(), 5);
}
