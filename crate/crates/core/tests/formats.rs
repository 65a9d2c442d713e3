use localchrom::error::Error;
use localchrom::families::{generate, FamilyId};
use localchrom::graph::Graph;
use localchrom::io::{emit_graph, parse_graph, parse_weighted_graph, to_dot};

#[test]
fn triangle_text() {
    let g = parse_graph("3 3\n0 1\n0 2\n1 2").unwrap();
    assert_eq!(g, Graph::complete(3));
    assert_eq!(emit_graph(&g), "3 3\n0 1\n0 2\n1 2\n");
}

#[test]
fn strict_errors() {
    for bad in ["2 1\n1 1", "2 1\n0 2", "3 2\n0 1\n0 1", "3 1\n1 0", "3\n", "", "3 1\n0 1\n\n", "3 1\n0 x"] {
        assert!(matches!(parse_graph(bad), Err(Error::Parse { .. })), "accepted {bad:?}");
    }
    let e = parse_graph("2 1\n1 1").unwrap_err().to_string();
    assert!(e.contains("self-loop"), "{e}");
}

#[test]
fn every_family_round_trips() {
    let mut ids = FamilyId::catalogue();
    ids.extend([FamilyId::Delta(2), FamilyId::Delta(4), FamilyId::Wheel(5), FamilyId::Andrasfai(4)]);
    for id in ids {
        let g = generate(id).unwrap();
        let text = emit_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g, "{id}");
        assert_eq!(emit_graph(&back), text, "{id}");
        let dot = to_dot(&g, None);
        assert_eq!(dot.matches(" -- ").count(), g.edge_count());
    }
}

#[test]
fn weighted_text() {
    let wg = parse_weighted_graph("2 1\n0 1\n0 1/2\n1 3/4\n").unwrap();
    assert_eq!(wg.total_weight(), localchrom::rat(5, 4));
    assert!(parse_weighted_graph("2 1\n0 1\n").is_err());
    assert!(parse_weighted_graph("2 1\n0 1\n0 -1\n1 1\n").is_err());
}
