use localchrom::canon::{canonical_form, is_isomorphic};
use localchrom::families::{generate, FamilyId};
use localchrom::graph::Graph;
use localchrom::rat;
use localchrom::search::{
    check_membership, enumerate_extremal, enumerate_extremal_with, parse_result_lines, SearchOptions,
};

const N7: &str = include_str!("../golden/search_n7_half.txt");
const N9: &str = include_str!("../golden/search_n9_half.txt");

fn contains_iso(found: &[Graph], g: &Graph) -> bool {
    found.iter().any(|f| is_isomorphic(f, g))
}

#[test]
fn n7_matches_golden() {
    let r = enumerate_extremal(7, &rat(1, 2)).unwrap();
    assert!(r.exhausted);
    assert_eq!(r.to_lines(), N7);
    let graphs: Vec<Graph> = r.found.iter().map(|f| f.graph.clone()).collect();
    assert!(contains_iso(&graphs, &Graph::complete(3)));
    assert!(contains_iso(&graphs, &generate(FamilyId::C7Bar).unwrap()));
}

#[test]
fn n9_matches_golden() {
    let r = enumerate_extremal(9, &rat(1, 2)).unwrap();
    assert_eq!(r.to_lines(), N9);
    let graphs: Vec<Graph> = r.found.iter().map(|f| f.graph.clone()).collect();
    for id in [FamilyId::C7Bar, FamilyId::H2Plus, FamilyId::Counterexample8] {
        assert!(contains_iso(&graphs, &generate(id).unwrap()), "{id} missing");
    }
    let mut forms: Vec<_> = graphs.iter().map(canonical_form).collect();
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), graphs.len());
    for f in &r.found {
        assert!(check_membership(&f.graph, &rat(1, 2)).all_pass());
    }
}

#[test]
fn golden_lines_parse_back() {
    let found = parse_result_lines(N9).unwrap();
    assert_eq!(found.len(), 9);
    for f in &found {
        let m = check_membership(&f.graph, &rat(1, 2));
        assert!(m.all_pass(), "{m:?}");
        assert_eq!(m.t_star.as_ref(), Some(&f.t_star));
    }
}

#[test]
fn stricter_ratio_is_a_subset() {
    let half = enumerate_extremal(7, &rat(1, 2)).unwrap();
    let strict = enumerate_extremal(7, &rat(4, 7)).unwrap();
    assert_eq!(strict.found.len(), 1);
    assert!(is_isomorphic(&strict.found[0].graph, &half.found[0].graph));
}

#[test]
fn checkpoint_resume_reproduces_result() {
    let dir = std::env::temp_dir().join(format!("localchrom-search-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ckpt = dir.join("n7.json");
    let opts = SearchOptions { checkpoint: Some(ckpt.clone()), resume: None };
    let first = enumerate_extremal_with(7, &rat(1, 2), &opts).unwrap();
    assert!(ckpt.exists());
    let resumed =
        enumerate_extremal_with(7, &rat(1, 2), &SearchOptions { checkpoint: None, resume: Some(ckpt.clone()) })
            .unwrap();
    assert_eq!(resumed.to_lines(), first.to_lines());
    let mismatch = enumerate_extremal_with(6, &rat(1, 2), &SearchOptions { checkpoint: None, resume: Some(ckpt) });
    assert!(mismatch.is_err());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn rejects_bad_sizes() {
    assert!(enumerate_extremal(0, &rat(1, 2)).is_err());
    assert!(enumerate_extremal(40, &rat(1, 2)).is_err());
}
