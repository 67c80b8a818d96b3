use proptest::prelude::*;
use quiverkit::algebra::{AlgebraElement, RelationSet};
use quiverkit::io::{parse_quiver_file, QuiverFile};
use quiverkit::linalg::ratio;
use quiverkit::quiver::{
    Arrow, DimensionVector, Path, Quiver, StabilityVector, Vertex, VertexId, VertexTag,
};

const TAGS: [VertexTag; 3] = [VertexTag::F, VertexTag::J, VertexTag::K];

fn build(
    tags: Vec<usize>,
    arrows: Vec<(usize, usize, usize)>,
    walks: Vec<(usize, Vec<usize>, i64, i64)>,
    dims: Vec<usize>,
    zeta: Vec<i64>,
) -> QuiverFile {
    let n = tags.len();
    let vertices = tags
        .iter()
        .enumerate()
        .map(|(i, &t)| Vertex {
            name: format!("v{i}"),
            tag: TAGS[t],
        })
        .collect();
    let arrows: Vec<Arrow> = arrows
        .iter()
        .enumerate()
        .map(|(k, &(s, t, w))| Arrow {
            name: if k % 2 == 0 {
                format!("x{k}")
            } else {
                format!("y{k}*")
            },
            source: VertexId(s % n),
            target: VertexId(t % n),
            weight: w,
        })
        .collect();
    let q = Quiver::new(vertices, arrows).unwrap();
    let mut rels = RelationSet::empty();
    for (start, choices, num, den) in walks {
        // follow outgoing arrows from `start` to get a composable path
        let mut v = VertexId(start % n);
        let mut path = Vec::new();
        for c in choices {
            let out: Vec<_> = q.arrow_ids().filter(|&a| q.arrow(a).source == v).collect();
            if out.is_empty() {
                break;
            }
            let a = out[c % out.len()];
            path.push(a);
            v = q.arrow(a).target;
        }
        if path.is_empty() || num == 0 {
            continue;
        }
        let p = Path::from_traversal(&q, VertexId(start % n), &path).unwrap();
        let _ = rels.push(&q, AlgebraElement::term(ratio(num, den), p));
    }
    let mut f = QuiverFile::new(q, rels);
    f.dimensions.push(DimensionVector(
        dims.iter().cycle().take(n).copied().collect(),
    ));
    f.stability = Some(StabilityVector(
        zeta.iter().cycle().take(n).copied().collect(),
    ));
    f
}

proptest! {
    #[test]
    fn print_parse_print_is_stable(
        tags in proptest::collection::vec(0usize..3, 1..5),
        arrows in proptest::collection::vec((0usize..5, 0usize..5, 1usize..3), 0..6),
        walks in proptest::collection::vec((0usize..5, proptest::collection::vec(0usize..4, 1..4), -5i64..5, 1i64..4), 0..4),
        dims in proptest::collection::vec(0usize..4, 1..5),
        zeta in proptest::collection::vec(-3i64..4, 1..5),
    ) {
        let f = build(tags, arrows, walks, dims, zeta);
        let text = f.to_string();
        let back = parse_quiver_file(&text).unwrap();
        prop_assert_eq!(&back.quiver, &f.quiver);
        prop_assert_eq!(back.relations.relations(), f.relations.relations());
        prop_assert_eq!(&back.dimensions, &f.dimensions);
        prop_assert_eq!(back.to_string(), text);
    }
}
