//! Quivers, vertex partitions, paths, and the ADE / affine ADE builders.
//!
//! Paths compose like functions: `p·q` is the path that starts with `q`.
//! Internally a [`Path`] stores its arrows in the order they are traversed;
//! it is printed in function order (`a.b` means "first `b`, then `a`").

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{primitive_integer_vector, rat, Matrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub usize);

/// Partition tag of a vertex: framing (`F`), or one of the two unframed blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexTag {
    F,
    J,
    K,
}

impl VertexTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexTag::F => "F",
            VertexTag::J => "J",
            VertexTag::K => "K",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "F" => Some(VertexTag::F),
            "J" => Some(VertexTag::J),
            "K" => Some(VertexTag::K),
            _ => None,
        }
    }

    /// Member of `I = J ∪ K` (vertices with a change-of-basis group).
    pub fn is_unframed(self) -> bool {
        self != VertexTag::F
    }

    /// Member of `H = F ∪ J`.
    pub fn is_corner(self) -> bool {
        self != VertexTag::K
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub tag: VertexTag,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
    /// Grading weight; 1 for ordinary arrows, the path length for corner generators.
    pub weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

/// Name of the framing vertex added by [`frame`].
pub const FRAMING_VERTEX: &str = "inf";
/// Name of the framing arrow added by [`frame`].
pub const FRAMING_ARROW: &str = "iota";

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '*' | '\''))
}

impl Quiver {
    pub fn new(vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if !valid_name(&v.name) {
                return Err(Error::InvalidQuiver(format!(
                    "bad vertex name `{}`",
                    v.name
                )));
            }
            if vertex_index.insert(v.name.clone(), VertexId(i)).is_some() {
                return Err(Error::NameCollision(v.name.clone()));
            }
        }
        let mut arrow_index = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if !valid_name(&a.name) || a.name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(Error::InvalidQuiver(format!("bad arrow name `{}`", a.name)));
            }
            if a.source.0 >= vertices.len() || a.target.0 >= vertices.len() {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{}` references a missing vertex",
                    a.name
                )));
            }
            if a.weight == 0 {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{}` has weight 0",
                    a.name
                )));
            }
            if arrow_index.insert(a.name.clone(), ArrowId(i)).is_some() {
                return Err(Error::NameCollision(a.name.clone()));
            }
        }
        Ok(Quiver {
            vertices,
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_by_name(&self, name: &str) -> Result<ArrowId> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn tag(&self, v: VertexId) -> VertexTag {
        self.vertices[v.0].tag
    }

    pub fn vertices_tagged(&self, tags: &[VertexTag]) -> Vec<VertexId> {
        self.vertex_ids()
            .filter(|&v| tags.contains(&self.tag(v)))
            .collect()
    }

    /// `I = J ∪ K`.
    pub fn unframed_vertices(&self) -> Vec<VertexId> {
        self.vertices_tagged(&[VertexTag::J, VertexTag::K])
    }

    /// `H = F ∪ J`.
    pub fn corner_vertices(&self) -> Vec<VertexId> {
        self.vertices_tagged(&[VertexTag::F, VertexTag::J])
    }

    pub fn max_weight(&self) -> usize {
        self.arrows.iter().map(|a| a.weight).max().unwrap_or(1)
    }

    /// Returns a copy with the given vertex retagged.
    pub fn with_tag(&self, v: VertexId, tag: VertexTag) -> Quiver {
        let mut q = self.clone();
        q.vertices[v.0].tag = tag;
        q
    }

    /// The reverse partner of a doubled arrow (`a` ↔ `a*`), if present.
    pub fn partner(&self, a: ArrowId) -> Option<ArrowId> {
        let arrow = self.arrow(a);
        let other = match arrow.name.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{}*", arrow.name),
        };
        let b = *self.arrow_index.get(&other)?;
        let partner = self.arrow(b);
        (partner.source == arrow.target && partner.target == arrow.source).then_some(b)
    }

    /// The full subquiver on `keep`, together with the old→new vertex and arrow maps.
    pub fn induced_subquiver(
        &self,
        keep: &[VertexId],
    ) -> (Quiver, Vec<Option<VertexId>>, Vec<Option<ArrowId>>) {
        let mut vmap = vec![None; self.num_vertices()];
        let mut vertices = Vec::new();
        for v in self.vertex_ids() {
            if keep.contains(&v) {
                vmap[v.0] = Some(VertexId(vertices.len()));
                vertices.push(self.vertex(v).clone());
            }
        }
        let mut amap = vec![None; self.num_arrows()];
        let mut arrows = Vec::new();
        for a in self.arrow_ids() {
            let arrow = self.arrow(a);
            if let (Some(s), Some(t)) = (vmap[arrow.source.0], vmap[arrow.target.0]) {
                amap[a.0] = Some(ArrowId(arrows.len()));
                arrows.push(Arrow {
                    name: arrow.name.clone(),
                    source: s,
                    target: t,
                    weight: arrow.weight,
                });
            }
        }
        let q = Quiver::new(vertices, arrows).expect("subquiver of a valid quiver");
        (q, vmap, amap)
    }
}

/// A path: possibly empty sequence of composable arrows, stored in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    /// The length-zero path `e_v`.
    pub fn idempotent(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        let arrow = q.arrow(a);
        Path {
            source: arrow.source,
            target: arrow.target,
            arrows: vec![a],
        }
    }

    /// Build from arrows listed in traversal order (first arrow applied first).
    pub fn from_traversal(q: &Quiver, start: VertexId, arrows: &[ArrowId]) -> Result<Self> {
        let mut at = start;
        for &a in arrows {
            let arrow = q.arrow(a);
            if arrow.source != at {
                return Err(Error::NotComposable(format!(
                    "arrow `{}` starts at `{}`, not `{}`",
                    arrow.name,
                    q.vertex(arrow.source).name,
                    q.vertex(at).name
                )));
            }
            at = arrow.target;
        }
        Ok(Path {
            source: start,
            target: at,
            arrows: arrows.to_vec(),
        })
    }

    /// Build from arrows listed in function order (`[a, b]` is `a·b`, `b` first).
    pub fn from_function_order(q: &Quiver, arrows: &[ArrowId]) -> Result<Self> {
        let Some(&first) = arrows.last() else {
            return Err(Error::NotComposable("empty arrow list".into()));
        };
        let travel: Vec<ArrowId> = arrows.iter().rev().copied().collect();
        Path::from_traversal(q, q.arrow(first).source, &travel)
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        !self.arrows.is_empty() && self.source == self.target
    }

    /// Arrows in traversal order.
    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// Grading degree: the sum of arrow weights (the length for unweighted quivers).
    pub fn weight(&self, q: &Quiver) -> usize {
        self.arrows.iter().map(|&a| q.arrow(a).weight).sum()
    }

    /// Vertices visited, in traversal order, including both endpoints.
    pub fn vertices(&self, q: &Quiver) -> Vec<VertexId> {
        let mut out = vec![self.source];
        out.extend(self.arrows.iter().map(|&a| q.arrow(a).target));
        out
    }

    /// `self · inner`: first `inner`, then `self`. `None` when they do not compose.
    pub fn compose(&self, inner: &Path) -> Option<Path> {
        if inner.target != self.source {
            return None;
        }
        let mut arrows = inner.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            source: inner.source,
            target: self.target,
            arrows,
        })
    }

    /// Rotate a cycle so its traversal starts `k` arrows later.
    pub fn rotate(&self, q: &Quiver, k: usize) -> Path {
        assert!(self.is_cycle(), "only cycles rotate");
        let n = self.arrows.len();
        let arrows: Vec<ArrowId> = (0..n).map(|i| self.arrows[(i + k) % n]).collect();
        let start = q.arrow(arrows[0]).source;
        Path {
            source: start,
            target: start,
            arrows,
        }
    }

    /// Canonical representative of a cycle up to rotation: the rotation whose
    /// traversal sequence is lexicographically smallest.
    pub fn canonical_rotation(&self, q: &Quiver) -> Path {
        (0..self.arrows.len())
            .map(|k| self.rotate(q, k))
            .min_by(|a, b| a.arrows.cmp(&b.arrows))
            .expect("cycle has at least one arrow")
    }

    /// Ordering used to pick standard monomials: compare the function-order
    /// arrow sequences lexicographically, then fall back to the endpoints.
    pub fn function_order_cmp(&self, other: &Path) -> Ordering {
        self.arrows
            .iter()
            .rev()
            .cmp(other.arrows.iter().rev())
            .then(self.source.cmp(&other.source))
            .then(self.target.cmp(&other.target))
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay {
            path: self,
            quiver: q,
        }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return write!(f, "e({})", self.quiver.vertex(self.path.source).name);
        }
        let names: Vec<&str> = self
            .path
            .arrows
            .iter()
            .rev()
            .map(|&a| self.quiver.arrow(a).name.as_str())
            .collect();
        write!(f, "{}", names.join("."))
    }
}

/// Per-vertex natural numbers with the componentwise partial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DimensionVector(pub Vec<usize>);

impl DimensionVector {
    pub fn zeros(n: usize) -> Self {
        DimensionVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: VertexId) -> usize {
        self.0[v.0]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &DimensionVector) -> DimensionVector {
        assert_eq!(self.len(), other.len(), "dimension vector length");
        DimensionVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn restrict(&self, vertices: &[VertexId]) -> DimensionVector {
        DimensionVector(vertices.iter().map(|&v| self.get(v)).collect())
    }
}

impl PartialOrd for DimensionVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.len() != other.len() {
            return None;
        }
        let le = self.0.iter().zip(&other.0).all(|(a, b)| a <= b);
        let ge = self.0.iter().zip(&other.0).all(|(a, b)| a >= b);
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

/// Integer weights on the unframed vertices `I`, listed in quiver vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVector(pub Vec<i64>);

/// `∏ det_i^{ζ_i}` for the character attached to a stability vector.
pub fn evaluate_character(zeta: &StabilityVector, dets: &[Rational]) -> Result<Rational> {
    if zeta.0.len() != dets.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} weights but {} determinants",
            zeta.0.len(),
            dets.len()
        )));
    }
    let mut acc = Rational::one();
    for (i, (&z, d)) in zeta.0.iter().zip(dets).enumerate() {
        if d.is_zero() {
            return Err(Error::ZeroDeterminant(i));
        }
        let p = num_traits::pow(d.clone(), z.unsigned_abs() as usize);
        acc *= if z < 0 { p.recip() } else { p };
    }
    Ok(acc)
}

/// Simply-laced Dynkin families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

impl DynkinType {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" | "a" => Some(DynkinType::A),
            "D" | "d" => Some(DynkinType::D),
            "E" | "e" => Some(DynkinType::E),
            _ => None,
        }
    }

    fn letter(self) -> &'static str {
        match self {
            DynkinType::A => "A",
            DynkinType::D => "D",
            DynkinType::E => "E",
        }
    }
}

/// An undirected simply-laced diagram. Multiple edges are listed repeatedly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

fn check_rank(ty: DynkinType, rank: usize) -> Result<()> {
    let ok = match ty {
        DynkinType::A => rank >= 1,
        DynkinType::D => rank >= 4,
        DynkinType::E => (6..=8).contains(&rank),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidDynkin {
            kind: ty.letter().to_string(),
            rank,
        })
    }
}

/// Edges of the finite diagram on vertices `1..=rank`, Bourbaki labeling.
fn finite_edges(ty: DynkinType, rank: usize) -> Vec<(usize, usize)> {
    match ty {
        DynkinType::A => (1..rank).map(|i| (i, i + 1)).collect(),
        DynkinType::D => {
            let mut e: Vec<(usize, usize)> = (1..rank - 1).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank));
            e
        }
        DynkinType::E => {
            let mut e = vec![(1, 3), (2, 4)];
            e.extend((3..rank).map(|i| (i, i + 1)));
            e
        }
    }
}

impl Diagram {
    pub fn finite(ty: DynkinType, rank: usize) -> Result<Diagram> {
        check_rank(ty, rank)?;
        Ok(Diagram {
            vertices: (1..=rank).map(|i| i.to_string()).collect(),
            // vertex `i` sits at index i-1
            edges: finite_edges(ty, rank)
                .into_iter()
                .map(|(a, b)| (a - 1, b - 1))
                .collect(),
        })
    }

    /// The extended diagram; vertex `0` comes first and its edges are listed last.
    pub fn affine(ty: DynkinType, rank: usize) -> Result<Diagram> {
        check_rank(ty, rank)?;
        let mut edges = finite_edges(ty, rank);
        let extra: Vec<(usize, usize)> = match (ty, rank) {
            (DynkinType::A, 1) => vec![(0, 1), (0, 1)],
            (DynkinType::A, n) => vec![(0, 1), (0, n)],
            (DynkinType::D, _) => vec![(0, 2)],
            (DynkinType::E, 6) => vec![(0, 2)],
            (DynkinType::E, 7) => vec![(0, 1)],
            (DynkinType::E, _) => vec![(0, 8)],
        };
        edges.extend(extra);
        Ok(Diagram {
            vertices: (0..=rank).map(|i| i.to_string()).collect(),
            edges,
        })
    }

    /// `2·I − adjacency`, counting multiple edges.
    pub fn cartan_matrix(&self) -> Matrix {
        let n = self.vertices.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat(2));
        }
        for &(a, b) in &self.edges {
            let ab = m.get(a, b) - rat(1);
            m.set(a, b, ab.clone());
            m.set(b, a, ab);
        }
        m
    }

    /// Double the diagram: per edge `(i, j)` with `i < j`, arrows `x: i → j` and `x*: j → i`.
    pub fn doubled_quiver(&self, default_tag: impl Fn(&str) -> VertexTag) -> Quiver {
        let vertices = self
            .vertices
            .iter()
            .map(|name| Vertex {
                name: name.clone(),
                tag: default_tag(name),
            })
            .collect();
        let mut arrows = Vec::new();
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let name = edge_name(k);
            arrows.push(Arrow {
                name: name.clone(),
                source: VertexId(lo),
                target: VertexId(hi),
                weight: 1,
            });
            arrows.push(Arrow {
                name: format!("{name}*"),
                source: VertexId(hi),
                target: VertexId(lo),
                weight: 1,
            });
        }
        Quiver::new(vertices, arrows).expect("diagram builders produce valid quivers")
    }
}

fn edge_name(k: usize) -> String {
    if k < 26 {
        ((b'a' + k as u8) as char).to_string()
    } else {
        format!("e{k}")
    }
}

/// Doubled quiver of a finite ADE diagram; every vertex tagged `K`.
pub fn build_doubled_dynkin(ty: DynkinType, rank: usize) -> Result<Quiver> {
    Ok(Diagram::finite(ty, rank)?.doubled_quiver(|_| VertexTag::K))
}

/// Doubled quiver of an affine ADE diagram; vertex `0` tagged `J`, the rest `K`.
pub fn build_doubled_affine_dynkin(ty: DynkinType, rank: usize) -> Result<Quiver> {
    Ok(Diagram::affine(ty, rank)?.doubled_quiver(|name| {
        if name == "0" {
            VertexTag::J
        } else {
            VertexTag::K
        }
    }))
}

/// Adjoin a framing vertex `inf` (tag `F`) and one arrow `iota: inf → target`.
pub fn frame(q: &Quiver, target: VertexId) -> Result<Quiver> {
    if target.0 >= q.num_vertices() {
        return Err(Error::UnknownVertex(format!("#{}", target.0)));
    }
    if q.vertex_by_name(FRAMING_VERTEX).is_ok() {
        return Err(Error::NameCollision(FRAMING_VERTEX.into()));
    }
    if q.arrow_by_name(FRAMING_ARROW).is_ok() {
        return Err(Error::NameCollision(FRAMING_ARROW.into()));
    }
    let mut vertices = q.vertices().to_vec();
    let inf = VertexId(vertices.len());
    vertices.push(Vertex {
        name: FRAMING_VERTEX.into(),
        tag: VertexTag::F,
    });
    let mut arrows = q.arrows().to_vec();
    arrows.push(Arrow {
        name: FRAMING_ARROW.into(),
        source: inf,
        target,
        weight: 1,
    });
    Quiver::new(vertices, arrows)
}

/// The minimal positive imaginary root of an affine diagram, in diagram vertex order.
pub fn delta(ty: DynkinType, rank: usize) -> Result<DimensionVector> {
    let diagram = Diagram::affine(ty, rank)?;
    let kernel = diagram.cartan_matrix().nullspace();
    if kernel.len() != 1 {
        return Err(Error::VerificationFailed(format!(
            "affine Cartan matrix has {}-dimensional kernel",
            kernel.len()
        )));
    }
    let v = primitive_integer_vector(&kernel[0]);
    if v.iter().any(|x| x.is_negative() || x.is_zero()) {
        return Err(Error::VerificationFailed(
            "kernel vector is not positive".into(),
        ));
    }
    Ok(DimensionVector(
        v.iter()
            .map(|x| x.to_usize().expect("small root coordinate"))
            .collect(),
    ))
}

/// `δ` with the affine vertex `0` dropped.
pub fn delta_k(ty: DynkinType, rank: usize) -> Result<DimensionVector> {
    let d = delta(ty, rank)?;
    Ok(DimensionVector(d.0[1..].to_vec()))
}
