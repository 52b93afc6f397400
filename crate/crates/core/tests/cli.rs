use std::io::Cursor;

use crosscut::cli::{run, EXIT_CAP, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("crosscut").chain(args.iter().copied());
    let code = run(argv, &mut Cursor::new(stdin.as_bytes()), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn fixture(args: &[&str]) -> String {
    let mut full = vec!["fixture"];
    full.extend_from_slice(args);
    let (code, out, _) = invoke(&full, "");
    assert_eq!(code, EXIT_OK);
    out
}

#[test]
fn fpp_on_fixtures() {
    let (code, out, _) = invoke(&["fpp"], &fixture(&["P3323"]));
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("FPP: true (method=search)"));

    let (code, out, _) = invoke(&["fpp"], &fixture(&["ex_2"]));
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.starts_with("FPP: false (method=search)\nwitness:\n"));
    assert_eq!(out.lines().filter(|l| l.contains(" -> ")).count(), 6);

    let (code, out, _) = invoke(&["fpp", "--pipeline"], &fixture(&["Pnk", "4", "2"]));
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn witness_feeds_back_into_check() {
    let ex2 = fixture(&["ex_2"]);
    let (_, out, _) = invoke(&["fpp"], &ex2);
    let witness: String = out.lines().skip(2).map(|l| format!("{l}\n")).collect();
    let dir = std::env::temp_dir().join(format!("crosscut-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let map = dir.join("witness.map");
    std::fs::write(&map, witness).unwrap();
    let map = map.to_str().unwrap();

    let (code, out, _) = invoke(&["check", "--map", map], &ex2);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("fixed points: \n"), "{out}");

    let (code, out, _) = invoke(&["induced", "--map", map, "--which", "d"], &ex2);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("fixed nodes:"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn crosscut_commands() {
    let easy = fixture(&["ex_easy"]);
    let (code, out, _) = invoke(&["dpose"], &easy);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("elements: {0} {0 1 3} {0 1 4} {0 2} {1}\nside: D D D D D\n"));

    let (_, out, _) = invoke(&["upose"], &easy);
    assert!(out.starts_with("elements: {0 2 3 4} {1 3 4} {3} {4}\n"));

    let (_, out, _) = invoke(&["cpose"], &easy);
    assert!(out.contains("side: D D D D D U U U U\n"));

    let (code, out, _) = invoke(&["gamma", "--cutset", "2,3,4"], &easy);
    assert_eq!(code, EXIT_OK);
    let (_, dpose, _) = invoke(&["dpose"], &easy);
    assert_eq!(out, dpose);

    let (code, out, _) = invoke(&["dot", "--which", "c"], &easy);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("digraph \"C\" {"));
    assert_eq!(out.matches("color=red").count(), 4);

    let (code, out, _) = invoke(&["cpose"], "elements: a b\na < b\n");
    assert_eq!(code, EXIT_USAGE, "{out}");
}

#[test]
fn show_and_dismantle() {
    let (code, out, _) = invoke(&["show"], &fixture(&["crown", "3"]));
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("elements: 6\n") && out.contains("crown: 6\n"));

    let (code, out, _) = invoke(&["dismantle"], "elements: a b c\na < b\nb < c\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("dismantlable: true\n"));
    let (code, _, _) = invoke(&["dismantle"], &fixture(&["crown", "2"]));
    assert_eq!(code, EXIT_NEGATIVE);
}

#[test]
fn random_and_theorems() {
    let (code, a, _) = invoke(&["random", "--n", "8", "--density", "0.4", "--seed", "3"], "");
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = invoke(&["random", "--n", "8", "--density", "0.4", "--seed", "3"], "");
    assert_eq!(a, b);

    let (code, out, _) = invoke(&["check-theorems", "--seeds", "50", "--max-size", "8"], "");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.ends_with("all suites pass\n"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn errors_and_exit_codes() {
    assert_eq!(invoke(&[], "").0, EXIT_USAGE);
    assert_eq!(invoke(&["nonsense"], "").0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"], "").0, EXIT_OK);
    assert_eq!(invoke(&["fixture", "nope"], "").0, EXIT_USAGE);
    assert_eq!(invoke(&["fixture", "Pnk", "3", "2"], "").0, EXIT_USAGE);
    assert_eq!(invoke(&["random", "--n", "0"], "").0, EXIT_USAGE);

    let (code, _, err) = invoke(&["show"], "elements: a\na < b\n");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2"), "{err}");

    let (code, _, err) = invoke(&["fpp", "/no/such/file"], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("/no/such/file"));
}

#[test]
fn cap_exceeded_exits_3() {
    // 20 elements: not dismantlable and above the default cap of 15.
    let (code, _, err) = invoke(&["fpp"], &fixture(&["crown", "10"]));
    assert_eq!(code, EXIT_CAP, "{err}");
    assert!(err.contains("cap"));
}
