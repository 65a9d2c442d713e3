use std::time::Duration;

use localchrom::families::{generate, FamilyId};
use localchrom::verify::{claims, h2_weighted, verify_paper, Status, VerifyOptions};

#[test]
fn h2_without_chord_fails_by_vertex() {
    let g = generate(FamilyId::H2).unwrap().without_edge(4, 6);
    let detail = h2_weighted(&g).unwrap_err();
    assert!(detail.starts_with("vertex a4 has weighted degree 5/11"), "{detail}");
    assert!(h2_weighted(&generate(FamilyId::H2).unwrap()).is_ok());
}

#[test]
fn only_chi_runs_colouring_claims() {
    let r = verify_paper(&VerifyOptions { only: vec!["chi".into()], timeout: None });
    let expected: Vec<&str> = claims().into_iter().filter(|c| c.tags.contains(&"chi")).map(|c| c.id).collect();
    let got: Vec<&str> = r.results.iter().map(|x| x.id.as_str()).collect();
    assert_eq!(got, expected);
    assert!(got.contains(&"family-chi-4") && got.contains(&"H2PLUS_AUG-colouring"));
    assert!(!got.contains(&"search-n7"));
    assert!(r.ok());
}

#[test]
fn report_order_is_stable() {
    let only = vec!["hom".to_string(), "moser".to_string()];
    let a = verify_paper(&VerifyOptions { only: only.clone(), timeout: None });
    let b = verify_paper(&VerifyOptions { only, timeout: Some(Duration::from_secs(600)) });
    let ids = |r: &localchrom::verify::Report| r.results.iter().map(|x| (x.id.clone(), x.status)).collect::<Vec<_>>();
    assert_eq!(ids(&a), ids(&b));
    assert!(a.results.iter().all(|x| x.status == Status::Pass));
    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(json["results"][0]["id"], "H0-five-subsets");
    assert_eq!(json["results"][0]["status"], "PASS");
}
