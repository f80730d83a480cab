//! Byte comparison of CLI output against `tests/golden/*.txt`.
//!
//! Each golden file starts with a `$ perfcone ...` line giving the arguments,
//! double-quoted where they contain spaces or braces; the rest is the
//! expected standard output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn perfcone(args: &[String]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfcone")).args(args).output().expect("binary runs")
}

fn split_args(line: &str) -> Vec<String> {
    let mut args = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => quoted = !quoted,
            c if c.is_whitespace() && !quoted => {
                if !cur.is_empty() {
                    args.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    assert!(!quoted, "unbalanced quote in {line:?}");
    if !cur.is_empty() {
        args.push(cur);
    }
    args
}

fn golden_files() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .expect("golden dir")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    files
}

#[test]
fn outputs_match_goldens() {
    let files = golden_files();
    assert!(files.len() >= 20);
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let (cmd, expected) = text.split_once('\n').unwrap();
        let cmd = cmd.strip_prefix("$ perfcone ").unwrap_or_else(|| panic!("{}: bad header", path.display()));
        let out = perfcone(&split_args(cmd));
        assert!(out.status.success(), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{}", path.display());
    }
}

#[test]
fn quoted_arguments_split() {
    assert_eq!(split_args(r#"brackets oracle -g 4 "{1} * {12}""#), ["brackets", "oracle", "-g", "4", "{1} * {12}"]);
}

fn failure(args: &[&str]) -> String {
    let out = perfcone(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    assert!(!out.status.success(), "{args:?} should fail");
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn errors_exit_nonzero_with_message() {
    assert!(
        failure(&["betti", "--space", "perf", "--max-degree", "14"]).contains("catalog incomplete beyond degree 12")
    );
    assert!(failure(&["betti", "--space", "hodge", "--max-degree", "2"]).contains("hodge"));
    assert!(failure(&["stabilizer", "K7"]).contains("unknown name: K7"));
    assert!(failure(&["brackets", "multiply", "{1"]).contains("parse error"));
    assert!(failure(&["voronoi", "enumerate", "-g", "5"]).contains("desk-scale"));
    assert!(failure(&["molien", "N5", "--max-degree", "2"]).contains("no generators"));
}

#[test]
fn odd_degrees_show_in_breakdown_only_when_nonzero() {
    let out = perfcone(&["betti", "--space", "perf", "--max-degree", "5", "--breakdown"].map(String::from));
    let head = String::from_utf8(out.stdout).unwrap();
    assert!(head.starts_with("degree"));
    assert_eq!(head.lines().next().unwrap().split_whitespace().collect::<Vec<_>>(), ["degree", "0", "2", "4"]);
}

#[test]
fn face_catalog_matches_shipped_entries() {
    let out = perfcone(&["voronoi", "faces", "-g", "3", "--max-dim", "5", "--catalog"].map(String::from));
    assert!(out.status.success());
    let faces = perfcone::catalog_text::parse_catalog(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let names: Vec<&str> = faces.iter().map(|e| e.name.as_str()).collect();
    assert_eq!(names, ["1", "1+1", "K3", "1+1+1", "K3+1", "C4", "K4-1"]);
    for f in &faces {
        let shipped = perfcone_core::cones::catalog_entry(&f.name).unwrap();
        assert_eq!((f.rank, f.dim, f.matroidal), (shipped.rank, shipped.dim, shipped.matroidal));
    }
}

/// `$ perfcone ...` examples in the README, each with the output lines that
/// follow it up to a blank line or the end of the code block.
fn readme_examples() -> Vec<(String, String)> {
    let readme = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md")).unwrap();
    let mut examples = Vec::new();
    let mut lines = readme.lines().peekable();
    while let Some(line) = lines.next() {
        let Some(cmd) = line.strip_prefix("$ perfcone ") else { continue };
        let mut body = String::new();
        while let Some(l) = lines.next_if(|l| !l.is_empty() && !l.starts_with("```")) {
            body.push_str(l);
            body.push('\n');
        }
        examples.push((cmd.to_string(), body));
    }
    examples
}

#[test]
fn readme_examples_match_output() {
    let examples = readme_examples();
    assert!(examples.len() >= 10);
    for (cmd, expected) in examples {
        let out = perfcone(&split_args(&cmd));
        let shown = if out.status.success() { out.stdout } else { out.stderr };
        assert_eq!(String::from_utf8(shown).unwrap(), expected, "README example: {cmd}");
    }
}
