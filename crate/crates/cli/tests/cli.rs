use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_localchrom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("localchrom-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    /// Writes the family's adjacency list to a file and returns its path.
    fn family(&self, id: &str) -> String {
        let o = run(&["families", "emit", id]);
        assert!(o.status.success(), "{id}");
        let path = self.0.join(format!("{}.txt", id.replace(['(', ')'], "")));
        std::fs::write(&path, &o.stdout).unwrap();
        path.to_str().unwrap().to_string()
    }

    fn file(&self, name: &str, text: &str) -> String {
        let path = self.0.join(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn families_list_and_emit() {
    let o = run(&["families", "list"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for id in ["H0", "H2PLUS", "C7BAR", "DELTA(3)", "COUNTEREXAMPLE8"] {
        assert!(out.lines().any(|l| l.starts_with(&format!("{id}\t"))), "{id} not listed");
    }
    assert_eq!(stdout(&run(&["families", "emit", "H2"])).lines().next(), Some("7 13"));
    assert!(stdout(&run(&["families", "emit", "C7BAR", "--dot"])).starts_with("graph G {"));
    assert!(stdout(&run(&["families", "emit", "delta2", "--compact"])).starts_with("n=7 edges="));
    assert_eq!(run(&["families", "emit", "K9"]).status.code(), Some(2));
}

#[test]
fn check_reports_witness() {
    let s = Scratch::new("check");
    let w5 = s.family("WHEEL(5)");
    let out = stdout(&run(&["check", &w5]));
    assert!(out.contains("locally-bipartite: no"));
    assert!(out.contains("odd-wheel: centre: 5 rim: 0,1,2,3,4"), "{out}");
    let c7 = s.family("C7BAR");
    assert_eq!(stdout(&run(&["check", &c7])), "locally-bipartite: yes\ntwin-free: yes\nedge-maximal: yes\n");
}

#[test]
fn hom_exit_codes() {
    let s = Scratch::new("hom");
    let (h2, c7, h2p) = (s.family("H2"), s.family("C7BAR"), s.family("H2PLUS"));
    let yes = run(&["hom", &h2, &c7]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("YES map: "));
    let no = run(&["hom", &h2p, &c7]);
    assert_eq!((no.status.code(), stdout(&no)), (Some(1), "NO\n".to_string()));
    assert_eq!(run(&["hom", &h2, &h2p, "--induced"]).status.code(), Some(0));
    assert_eq!(run(&["hom", &h2, &c7, "--iso"]).status.code(), Some(1));
    let d2 = s.family("DELTA(2)");
    assert_eq!(run(&["hom", &d2, &c7, "--iso"]).status.code(), Some(0));
}

#[test]
fn colouring_commands() {
    let s = Scratch::new("chi");
    let c7 = s.family("C7BAR");
    let out = stdout(&run(&["chi", &c7]));
    assert!(out.starts_with("chi=4 colouring: "), "{out}");
    let no = run(&["colour", &c7, "-k", "3"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&run(&["colour", &c7, "-k", "4"])).starts_with("k=4 colouring: "));
}

#[test]
fn weight_and_beats() {
    let s = Scratch::new("weight");
    let h2 = s.family("H2");
    let out = stdout(&run(&["weight", &h2, "--beats", "1/2"]));
    assert_eq!(out, "t*=6/11 omega: 3/11,1/11,2/11,1/11,1/11,2/11,1/11\nBEATS\n");
    let out = stdout(&run(&["weight", &h2, "--beats", "6/11"]));
    assert!(out.ends_with("DOES-NOT-BEAT\n"));
    let json: serde_json::Value = serde_json::from_slice(&run(&["weight", &h2, "--format", "json"]).stdout).unwrap();
    assert_eq!(json["optimum"], "6/11");
    let weighted = s.file("w.txt", "3 3\n0 1\n0 2\n1 2\n0 1\n1 1\n2 1\n");
    assert_eq!(stdout(&run(&["weight", &weighted, "--beats", "1/2"])), "BEATS\n");
    assert_eq!(stdout(&run(&["weight", &weighted, "--beats", "2/3"])), "DOES-NOT-BEAT\n");
}

#[test]
fn decompose_and_profile() {
    let s = Scratch::new("decompose");
    let c7 = s.family("C7BAR");
    let o = run(&["decompose", &c7]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("kind: C7BAR\n"));
    assert!(out.contains("outcome: HOM_C7BAR\n"));
    assert!(!String::from_utf8(o.stderr).unwrap().is_empty());
    let json: serde_json::Value = serde_json::from_slice(&run(&["decompose", &c7, "--format", "json"]).stdout).unwrap();
    assert_eq!(json["outcome"]["kind"], "HOM_C7BAR");

    let h2p = s.family("H2PLUS");
    let low = run(&["decompose", &h2p]);
    assert_eq!(low.status.code(), Some(1));
    assert!(stdout(&low).contains("degree too low"));

    let p = stdout(&run(&["verify-profile", &c7]));
    assert!(p.contains("regime: above 6/11") && p.ends_with("verdict: CERTIFIED\n"), "{p}");
    let w5 = s.family("WHEEL(5)");
    assert_eq!(run(&["verify-profile", &w5]).status.code(), Some(2));
}

#[test]
fn search_writes_results() {
    let s = Scratch::new("search");
    let out = s.0.join("out.txt");
    let ck = s.0.join("ck.json");
    let o = run(&[
        "search",
        "--n",
        "7",
        "--beats",
        "1/2",
        "--out",
        out.to_str().unwrap(),
        "--checkpoint",
        ck.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let lines = std::fs::read_to_string(&out).unwrap();
    assert_eq!(lines, include_str!("../../core/golden/search_n7_half.txt"));
    let resumed = run(&["search", "--n", "7", "--beats", "1/2", "--resume", ck.to_str().unwrap()]);
    assert_eq!(stdout(&resumed), lines);
}

#[test]
fn verify_paper_filters_and_formats() {
    let o = bin()
        .args(["verify-paper", "--only", "chi", "--format", "json"])
        .env("LOCALCHROM_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let results = json["results"].as_array().unwrap();
    assert!(!results.is_empty());
    assert!(results.iter().all(|r| r["status"] == "PASS"));
    assert_eq!(results[0]["id"], "family-chi-4");

    let text = stdout(&run(&["verify-paper", "--only", "H0-five-subsets"]));
    assert!(text.starts_with("PASS H0-five-subsets"));
    assert!(text.ends_with("summary: 1 passed, 0 failed, 0 skipped\n"));
    assert_eq!(run(&["verify-paper", "--only", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(run(&["verify-paper", "--timeout", "0"]).status.code(), Some(2));
}

#[test]
fn parse_errors_go_to_stderr() {
    let s = Scratch::new("errors");
    let bad = s.file("bad.txt", "2 1\n1 1\n");
    let o = run(&["chi", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8(o.stderr).unwrap().contains("self-loop"));
}
