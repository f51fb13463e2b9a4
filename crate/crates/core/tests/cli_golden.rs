//! Replays the recorded session in `golden/session.txt` against the
//! binary. Set `FGA_BLESS=1` to rewrite the recording.

use std::path::PathBuf;
use std::process::Command;

fn split_args(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut any = false;
    for c in line.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            ' ' if !quoted => {
                if any {
                    out.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            _ => {
                cur.push(c);
                any = true;
            }
        }
    }
    if any {
        out.push(cur);
    }
    out
}

fn run(args: &[String]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_fga"))
        .args(args)
        .output()
        .unwrap();
    let mut s = String::from_utf8(out.stdout).unwrap();
    for line in String::from_utf8(out.stderr).unwrap().lines() {
        s.push_str(&format!("! {line}\n"));
    }
    s.push_str(&format!("[exit {}]\n", out.status.code().unwrap()));
    s
}

#[test]
fn recorded_session() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/session.txt");
    let recorded = std::fs::read_to_string(&path).unwrap();
    let mut replay = String::new();
    for line in recorded.lines() {
        if let Some(cmd) = line.strip_prefix("$ fga ") {
            replay.push_str(line);
            replay.push('\n');
            replay.push_str(&run(&split_args(cmd)));
        } else if line.starts_with('#') || line.is_empty() {
            replay.push_str(line);
            replay.push('\n');
        }
    }
    if std::env::var_os("FGA_BLESS").is_some() {
        std::fs::write(&path, &replay).unwrap();
        return;
    }
    for (i, (want, got)) in recorded.lines().zip(replay.lines()).enumerate() {
        assert_eq!(want, got, "session diverges at line {}", i + 1);
    }
    assert_eq!(recorded, replay);
}

#[test]
fn argument_splitting() {
    assert_eq!(
        split_args(r#"phi -I "[x,y]-1" -J "x-1; y-1""#),
        ["phi", "-I", "[x,y]-1", "-J", "x-1; y-1"]
    );
    assert_eq!(split_args(r#"a "" b"#), ["a", "", "b"]);
}
