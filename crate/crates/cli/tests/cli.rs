//! End-to-end behavior of the `franklin-forge` command line.

use std::io::Write;
use std::process::{Command, Stdio};

use franklin_cli::{run, Io, SquareDocument};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn forge(args: &[&str], stdin: &str) -> Outcome {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("franklin-forge").chain(args.iter().copied()),
        Io {
            stdin: &mut input,
            stdout: &mut out,
            stderr: &mut err,
        },
    );
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn export(name: &str) -> String {
    let out = forge(&["fixtures", "--export", name], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    out.stdout
}

#[test]
fn fixture_exports_match_golden() {
    let goldens = [
        (
            "figure1_franklin8",
            include_str!("golden/figure1_franklin8.json"),
        ),
        ("figure2_mp8", include_str!("golden/figure2_mp8.json")),
        ("figure2_mp9", include_str!("golden/figure2_mp9.json")),
        (
            "sec14_franklin27",
            include_str!("golden/sec14_franklin27.json"),
        ),
    ];
    for (name, golden) in goldens {
        assert_eq!(export(name), golden, "{name}");
        assert_eq!(
            SquareDocument::parse_auto(golden).unwrap().to_json(),
            golden
        );
    }
    let list = forge(&["fixtures", "--list"], "");
    assert_eq!(list.stdout, include_str!("golden/fixtures_list.txt"));
}

#[test]
fn documented_examples() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| {
        let file = dir.path().join(format!("{name}.json"));
        std::fs::write(&file, export(name)).unwrap();
        file.to_str().unwrap().to_string()
    };

    let sec14 = path("sec14_franklin27");
    let out = forge(&["verify", "--p", "3", "--in", &sec14, "--json"], "");
    assert_eq!(out.code, 0);
    assert!(out
        .stdout
        .contains("\"classification\": \"pandiagonal_franklin_type_p\""));

    let figure1 = path("figure1_franklin8");
    let out = forge(
        &[
            "pattern",
            "--p",
            "2",
            "--k",
            "1",
            "--direction",
            "up",
            "--alpha",
            "1",
            "--offset",
            "1",
            "--sum",
            "--in",
            &figure1,
        ],
        "",
    );
    assert_eq!((out.code, out.stdout.as_str()), (0, "252\n"));

    let left = path("figure2_mp8");
    let image = forge(&["theta", "--p", "2", "--in", &left], "");
    assert_eq!(image.code, 0);
    assert_eq!(forge(&["verify", "--p", "2"], &image.stdout).code, 0);
}

#[test]
fn verify_json_matches_golden_and_is_stable() {
    let square = export("sec14_franklin27");
    let args = ["verify", "--p", "3", "--json"];
    let first = forge(&args, &square);
    assert_eq!(first.code, 0, "{}", first.stderr);
    assert_eq!(first.stdout, include_str!("golden/verify_franklin27.json"));
    assert_eq!(forge(&args, &square).stdout, first.stdout);
    let value: serde_json::Value = serde_json::from_str(&first.stdout).unwrap();
    assert_eq!(value["classification"], "pandiagonal_franklin_type_p");
}

#[test]
fn pattern_cells_and_sum() {
    let cells = forge(
        &[
            "pattern",
            "--p",
            "2",
            "--k",
            "1",
            "--direction",
            "up",
            "--alpha",
            "1",
            "--offset",
            "1",
        ],
        "",
    );
    assert_eq!(cells.code, 0);
    assert_eq!(
        cells.stdout,
        "[[1,0],[1,7],[2,1],[2,6],[3,2],[3,5],[4,3],[4,4]]\n"
    );

    let csv = forge(
        &[
            "fixtures",
            "--export",
            "figure1_franklin8",
            "--format",
            "csv",
        ],
        "",
    )
    .stdout;
    for direction in ["up", "right", "down", "left"] {
        let sum = forge(
            &[
                "pattern",
                "--p",
                "2",
                "--k",
                "1",
                "--direction",
                direction,
                "--alpha",
                "1",
                "--sum",
            ],
            &csv,
        );
        assert_eq!((sum.code, sum.stdout.as_str()), (0, "252\n"), "{direction}");
    }
}

#[test]
fn construct_then_theta_yields_franklin_square() {
    let mp = forge(&["construct", "--p", "3", "--r", "3", "--seed", "4"], "");
    assert_eq!(mp.code, 0, "{}", mp.stderr);
    let checked = forge(
        &["verify", "--p", "3", "--expect", "most_perfect_type_p"],
        &mp.stdout,
    );
    assert_eq!(checked.code, 0, "{}", checked.stdout);

    let image = forge(&["theta", "--p", "3"], &mp.stdout);
    assert_eq!(image.code, 0, "{}", image.stderr);
    let doc = SquareDocument::parse_auto(&image.stdout).unwrap();
    assert_eq!(doc.metadata["transform"], "theta(p=3)");
    assert_eq!(doc.k, Some(1));
    let verdict = forge(
        &[
            "verify",
            "--p",
            "3",
            "--expect",
            "pandiagonal_franklin_type_p",
        ],
        &image.stdout,
    );
    assert_eq!(verdict.code, 0, "{}", verdict.stdout);
    assert!(verdict
        .stdout
        .ends_with("classification: pandiagonal_franklin_type_p\n"));
}

#[test]
fn theta_is_an_involution_through_the_cli() {
    let square = export("figure2_mp8");
    let once = forge(&["theta", "--p", "2", "--format", "csv"], &square);
    let twice = forge(&["theta", "--p", "2", "--format", "csv"], &once.stdout);
    assert_eq!(
        SquareDocument::parse_auto(&twice.stdout).unwrap().grid,
        SquareDocument::parse_auto(&square).unwrap().grid
    );
}

#[test]
fn verify_exit_codes() {
    let franklin = export("figure1_franklin8");
    assert_eq!(forge(&["verify", "--p", "2"], &franklin).code, 0);
    assert_eq!(
        forge(
            &["verify", "--p", "2", "--expect", "franklin_type_p"],
            &franklin
        )
        .code,
        0
    );
    let fail = forge(
        &["verify", "--p", "2", "--expect", "pandiagonal_magic"],
        &franklin,
    );
    assert_eq!(fail.code, 1);
    assert!(fail
        .stdout
        .contains("pandiagonal        FAIL  diagonal offset 0: expected 252, found 220"));
    assert!(fail.stderr.contains("does not meet pandiagonal_magic"));

    let weak = forge(
        &["verify", "--p", "2", "--weakened", "1", "--json"],
        &franklin,
    );
    assert_eq!(weak.code, 0);
    assert!(weak.stdout.contains("\"one\": 1"));
}

#[test]
fn input_errors_exit_with_two() {
    let ragged = "1,2,3,4,5,6,7\n".repeat(8);
    let out = forge(&["verify", "--p", "2"], &ragged);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.starts_with("error: expected a square"),
        "{}",
        out.stderr
    );

    assert_eq!(forge(&["verify", "--p", "2"], "0,1\nx,3\n").code, 2);
    assert_eq!(
        forge(&["verify", "--p", "4"], &export("figure1_franklin8")).code,
        2
    );
    assert_eq!(
        forge(&["theta", "--p", "2"], "0,1,2\n3,4,5\n6,7,8\n").code,
        2
    );
    assert_eq!(forge(&["fixtures", "--export", "nope"], "").code, 2);
    assert_eq!(forge(&["construct", "--p", "2", "--r", "1"], "").code, 2);
    assert_eq!(
        forge(
            &[
                "pattern",
                "--p",
                "2",
                "--k",
                "1",
                "--direction",
                "sideways",
                "--alpha",
                "1"
            ],
            ""
        )
        .code,
        2
    );
    assert_eq!(forge(&["bogus"], "").code, 2);
    assert_eq!(
        forge(
            &["verify", "--p", "2", "--in", "/nonexistent/square.json"],
            ""
        )
        .code,
        2
    );
}

#[test]
fn checks_needing_divisibility_are_skipped() {
    let out = forge(&["verify", "--p", "3"], &export("figure1_franklin8"));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("pxp                skipped"));
    assert!(out.stdout.ends_with("classification: semi_magic\n"));
}

#[test]
fn duplicate_symbols_warn_but_still_report() {
    let out = forge(&["verify", "--p", "2"], "0,1\n1,3\n");
    assert!(out.stderr.contains("warning: entries are not 0..4"));
    assert!(out.stdout.contains("natural            FAIL"));
    assert_eq!(out.code, 1);
}

#[test]
fn exhaustion_exits_with_three() {
    let out = forge(
        &[
            "construct",
            "--p",
            "5",
            "--r",
            "2",
            "--family",
            "fixtures-only",
        ],
        "",
    );
    assert_eq!(out.code, 3, "{}", out.stderr);
    let out = forge(
        &[
            "construct",
            "--p",
            "2",
            "--r",
            "3",
            "--family",
            "fixtures-only",
        ],
        "",
    );
    assert_eq!(out.code, 0);
}

#[test]
fn report_lists_band_sums() {
    let out = forge(&["report", "--p", "3"], &export("sec14_franklin27"));
    assert_eq!(out.code, 0);
    assert!(out
        .stdout
        .contains("s_1  target 6552  min 6552  max 6552  ok"));
    assert!(out
        .stdout
        .contains("s_2  target 3276  min 3276  max 3276  ok"));
    let out = forge(&["report", "--p", "3"], &export("figure2_mp9"));
    assert!(out.stdout.contains("band sums not applicable"));
}

#[test]
fn out_file_and_in_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mp8.json");
    let path = path.to_str().unwrap();
    let out = forge(&["fixtures", "--export", "figure2_mp8", "--out", path], "");
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
    let verdict = forge(
        &[
            "verify",
            "--p",
            "2",
            "--in",
            path,
            "--expect",
            "most_perfect_type_p",
        ],
        "",
    );
    assert_eq!(verdict.code, 0, "{}", verdict.stdout);
}

#[test]
fn binary_pipeline() {
    let bin = env!("CARGO_BIN_EXE_franklin-forge");
    let construct = Command::new(bin)
        .args(["construct", "--p", "2", "--r", "3"])
        .output()
        .unwrap();
    assert!(construct.status.success());
    let pipe = |args: &[&str], input: &[u8]| {
        let mut child = Command::new(bin)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(input).unwrap();
        child.wait_with_output().unwrap()
    };
    let image = pipe(&["theta", "--p", "2"], &construct.stdout);
    assert!(image.status.success());
    let verdict = pipe(&["verify", "--p", "2"], &image.stdout);
    assert_eq!(verdict.status.code(), Some(0));
    let bad = pipe(&["verify", "--p", "2"], b"1,2\n3\n");
    assert_eq!(bad.status.code(), Some(2));
}
