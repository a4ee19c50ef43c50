use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn formchase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formchase")).args(args).output().expect("formchase runs")
}

fn examples() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/examples");
    let mut scripts: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "fc"))
        .collect();
    scripts.sort();
    scripts
}

struct Line {
    name: String,
    passed: bool,
    detail: String,
}

fn report(lines: &mut Vec<Line>, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
    let line = Line { name: name.into(), passed, detail: detail.into() };
    println!("{}: {} [{}]", line.name, if line.passed { "PASS" } else { "FAIL" }, line.detail);
    lines.push(line);
}

fn main() {
    let mut lines = Vec::new();

    let args = ["selftest", "--seed", "7", "--quick", "--format", "json"];
    let a = formchase(&args);
    let b = formchase(&args);
    let parsed: Result<serde_json::Value, _> = serde_json::from_slice(&a.stdout);
    report(
        &mut lines,
        "criterion 12 selftest json is byte-identical",
        a.status.success() && a.stdout == b.stdout && parsed.is_ok(),
        format!("{} bytes, exit {:?}", a.stdout.len(), a.status.code()),
    );
    let all_passed = parsed.ok().and_then(|v| v["passed"].as_bool()) == Some(true);
    report(&mut lines, "criterion 12 selftest verdict", all_passed, "seed 7, orbit representatives");

    let scripts = examples();
    report(
        &mut lines,
        "criterion 12 worked examples present",
        scripts.len() >= 5,
        format!("{} scripts", scripts.len()),
    );
    for script in scripts {
        let expected = std::fs::read_to_string(script.with_extension("out")).unwrap_or_default();
        let out = formchase(&["run", script.to_str().unwrap()]);
        let text = String::from_utf8_lossy(&out.stdout);
        let failing = expected.lines().any(|l| l.trim_start().starts_with("FAIL"));
        let code_ok = out.status.code() == Some(if failing { 1 } else { 0 });
        let name = script.file_name().unwrap().to_string_lossy().into_owned();
        report(
            &mut lines,
            format!("criterion 12 {name} reproduces its expected output"),
            !expected.is_empty() && text == expected && code_ok,
            format!("{} lines, exit {:?}", expected.lines().count(), out.status.code()),
        );
    }

    let empty = std::env::temp_dir().join(format!("formchase-empty-{}.fc", std::process::id()));
    std::fs::write(&empty, "").unwrap();
    let out = formchase(&["run", empty.to_str().unwrap()]);
    std::fs::remove_file(&empty).ok();
    report(
        &mut lines,
        "empty script exits 0 with an empty report",
        out.status.success() && out.stdout.is_empty(),
        format!("exit {:?}", out.status.code()),
    );

    let failed: Vec<&str> = lines.iter().filter(|l| !l.passed).map(|l| l.name.as_str()).collect();
    if failed.is_empty() {
        println!("cli acceptance: PASS ({} checks)", lines.len());
    } else {
        println!("cli acceptance: FAIL ({failed:?})");
        std::process::exit(1);
    }
}
