use std::path::PathBuf;

use quiverkit::algebra::preprojective_relations;
use quiverkit::io::parse_quiver_file;
use quiverkit::quiver::{
    build_doubled_affine_dynkin, build_doubled_dynkin, delta, delta_k, frame, DynkinType, Quiver,
};

fn fixture(name: &str) -> String {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "fixtures",
        &format!("{name}.quiver"),
    ]
    .iter()
    .collect();
    std::fs::read_to_string(path).unwrap()
}

fn without_comments(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

fn expected() -> Vec<(&'static str, Quiver, Vec<usize>)> {
    let mut out = Vec::new();
    for (name, n) in [("a1", 1), ("a2", 2), ("a3", 3)] {
        out.push((
            name,
            build_doubled_dynkin(DynkinType::A, n).unwrap(),
            vec![1; n],
        ));
    }
    out.push((
        "d4",
        build_doubled_dynkin(DynkinType::D, 4).unwrap(),
        delta_k(DynkinType::D, 4).unwrap().0,
    ));
    for (ty, n, plain, framed) in [
        (DynkinType::A, 1, "affine_a1", "framed_affine_a1"),
        (DynkinType::D, 4, "affine_d4", "framed_affine_d4"),
    ] {
        let q = build_doubled_affine_dynkin(ty, n).unwrap();
        let d = delta(ty, n).unwrap().0;
        let fq = frame(&q, q.vertex_by_name("0").unwrap()).unwrap();
        let mut fd = d.clone();
        fd.push(1);
        out.push((plain, q, d));
        out.push((framed, fq, fd));
    }
    out
}

#[test]
fn fixtures_match_builders() {
    for (name, q, dims) in expected() {
        let text = fixture(name);
        let f = parse_quiver_file(&text).unwrap();
        assert_eq!(f.quiver, q, "{name}");
        let rels = preprojective_relations(&q).unwrap();
        assert_eq!(f.relations.relations(), rels.relations(), "{name}");
        assert_eq!(f.dimension().unwrap().0, dims, "{name}");
    }
}

#[test]
fn fixtures_are_canonical() {
    for (name, _, _) in expected() {
        let text = fixture(name);
        let f = parse_quiver_file(&text).unwrap();
        assert_eq!(f.to_string(), without_comments(&text), "{name}");
    }
}
