//! Coordinates and ideals of representation schemes, trace and entry
//! invariants, pullbacks along `V ↦ V ⊕ V_K`, and the fiber constructions
//! `A*` and `A⊛`.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{delete, AlgebraElement, RelationSet};
use crate::corner::CornerPresentation;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::modrep::{check_relations, ModuleRep};
use crate::poly::{buchberger, GroebnerBasis, MonomialOrder, Polynomial, Ring};
use crate::quiver::{ArrowId, DimensionVector, Path, Quiver, VertexId, VertexTag};

/// A matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: Arc::clone(ring),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = Self::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        out
    }

    pub fn add_scaled(&self, other: &PolyMatrix, c: &Rational) -> PolyMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shapes"
        );
        PolyMatrix {
            ring: Arc::clone(&self.ring),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(&b.scale(c)))
                .collect(),
        }
    }

    pub fn trace(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "trace of a square matrix");
        (0..self.rows).fold(Polynomial::zero(&self.ring), |acc, i| {
            acc.add(self.get(i, i))
        })
    }
}

/// Matrix-entry coordinates on `Rep(Q, v)`: variable `x_{arrow}_{row}_{col}`
/// (1-based) for every entry, ordered by arrow, then row, then column.
#[derive(Clone, Debug)]
pub struct RepCoordinates {
    quiver: Arc<Quiver>,
    dims: DimensionVector,
    ring: Arc<Ring>,
    offsets: Vec<usize>,
}

pub fn variable_name(arrow: &str, row: usize, col: usize) -> String {
    format!("x_{arrow}_{}_{}", row + 1, col + 1)
}

impl RepCoordinates {
    pub fn new(q: &Quiver, v: &DimensionVector) -> Result<Self> {
        Self::with_order(q, v, MonomialOrder::DegRevLex)
    }

    pub fn with_order(q: &Quiver, v: &DimensionVector, order: MonomialOrder) -> Result<Self> {
        if v.len() != q.num_vertices() {
            return Err(Error::ShapeMismatch(format!(
                "dimension vector has {} entries for {} vertices",
                v.len(),
                q.num_vertices()
            )));
        }
        let mut names = Vec::new();
        let mut offsets = Vec::with_capacity(q.num_arrows());
        for a in q.arrows() {
            offsets.push(names.len());
            for r in 0..v.get(a.target) {
                for c in 0..v.get(a.source) {
                    names.push(variable_name(&a.name, r, c));
                }
            }
        }
        Ok(RepCoordinates {
            quiver: Arc::new(q.clone()),
            dims: v.clone(),
            ring: Ring::new(names, order)?,
            offsets,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Index of the variable for entry `(row, col)` of arrow `a` (0-based).
    pub fn variable(&self, a: ArrowId, row: usize, col: usize) -> usize {
        let arrow = self.quiver.arrow(a);
        assert!(row < self.dims.get(arrow.target) && col < self.dims.get(arrow.source));
        self.offsets[a.0] + row * self.dims.get(arrow.source) + col
    }

    /// Variables of every entry of arrow `a`.
    pub fn arrow_variables(&self, a: ArrowId) -> Vec<usize> {
        let arrow = self.quiver.arrow(a);
        let n = self.dims.get(arrow.target) * self.dims.get(arrow.source);
        (self.offsets[a.0]..self.offsets[a.0] + n).collect()
    }

    pub fn arrow_matrix(&self, a: ArrowId) -> PolyMatrix {
        let arrow = self.quiver.arrow(a);
        let (rows, cols) = (self.dims.get(arrow.target), self.dims.get(arrow.source));
        PolyMatrix {
            ring: Arc::clone(&self.ring),
            rows,
            cols,
            entries: (0..rows * cols)
                .map(|k| Polynomial::var(&self.ring, self.offsets[a.0] + k))
                .collect(),
        }
    }

    /// Matrix of a path: product of arrow matrices, identity for an idempotent.
    pub fn path_matrix(&self, p: &Path) -> PolyMatrix {
        let mut m = PolyMatrix::identity(&self.ring, self.dims.get(p.source()));
        for &a in p.arrows() {
            m = self.arrow_matrix(a).mul(&m);
        }
        m
    }

    pub fn element_matrix(&self, x: &AlgebraElement) -> Result<PolyMatrix> {
        let (s, t) = x
            .endpoints()
            .ok_or_else(|| Error::Inhomogeneous("element terms have different endpoints".into()))?;
        let mut m = PolyMatrix::zeros(&self.ring, self.dims.get(t), self.dims.get(s));
        for (p, c) in x.terms() {
            m = m.add_scaled(&self.path_matrix(p), c);
        }
        Ok(m)
    }

    /// The point of `Rep(Q, v)` given by a module, in variable order.
    pub fn point(&self, m: &ModuleRep) -> Result<Vec<Rational>> {
        if m.dims() != &self.dims || m.quiver() != &*self.quiver {
            return Err(Error::ShapeMismatch(
                "module does not live on these coordinates".into(),
            ));
        }
        let mut out = Vec::with_capacity(self.nvars());
        for a in self.quiver.arrow_ids() {
            let mat = m.matrix(a);
            for r in 0..mat.rows() {
                out.extend_from_slice(mat.row(r));
            }
        }
        Ok(out)
    }
}

/// Generators of the ideal of `Rep(A, v)` inside `Rep(Q, v)`.
#[derive(Clone, Debug)]
pub struct RepIdeal {
    pub ring: Arc<Ring>,
    /// Every entry of every relation matrix, zero entries included.
    pub generators: Vec<Polynomial>,
}

impl RepIdeal {
    pub fn nonzero_generators(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect()
    }

    pub fn groebner(&self, budget: usize) -> Result<GroebnerBasis> {
        buchberger(&self.ring, &self.nonzero_generators(), budget)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RepIdeal> {
        let ring = self.ring.with_order(order);
        let generators = self
            .generators
            .iter()
            .map(|g| g.to_ring(&ring))
            .collect::<Result<_>>()?;
        Ok(RepIdeal { ring, generators })
    }
}

pub fn rep_ideal(
    q: &Quiver,
    rels: &RelationSet,
    v: &DimensionVector,
) -> Result<(RepCoordinates, RepIdeal)> {
    let coords = RepCoordinates::new(q, v)?;
    let mut generators = Vec::new();
    for r in rels.relations() {
        generators.extend(coords.element_matrix(r)?.entries);
    }
    let ideal = RepIdeal {
        ring: Arc::clone(coords.ring()),
        generators,
    };
    Ok((coords, ideal))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    /// Trace of a cycle through vertices of `I` only. Length 0 is allowed
    /// here (the dimension) but never enumerated.
    Trace(Path),
    /// Matrix entry `(row, col)` (0-based) of a path between framing vertices.
    Entry { path: Path, row: usize, col: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantGenerator {
    pub kind: InvariantKind,
    pub polynomial: Polynomial,
}

impl InvariantGenerator {
    pub fn trace(coords: &RepCoordinates, cycle: Path) -> Result<Self> {
        let q = coords.quiver();
        if cycle.source() != cycle.target()
            || cycle.vertices(q).iter().any(|&v| q.tag(v) == VertexTag::F)
        {
            return Err(Error::InvalidQuiver(format!(
                "`{}` is not a cycle through unframed vertices",
                cycle.display(q)
            )));
        }
        let polynomial = coords.path_matrix(&cycle).trace();
        Ok(InvariantGenerator {
            kind: InvariantKind::Trace(cycle),
            polynomial,
        })
    }

    pub fn entry(coords: &RepCoordinates, path: Path, row: usize, col: usize) -> Result<Self> {
        let q = coords.quiver();
        if q.tag(path.source()) != VertexTag::F || q.tag(path.target()) != VertexTag::F {
            return Err(Error::InvalidQuiver(format!(
                "`{}` does not run between framing vertices",
                path.display(q)
            )));
        }
        let m = coords.path_matrix(&path);
        if row >= m.rows() || col >= m.cols() {
            return Err(Error::ShapeMismatch(format!(
                "entry ({row}, {col}) out of range"
            )));
        }
        Ok(InvariantGenerator {
            polynomial: m.get(row, col).clone(),
            kind: InvariantKind::Entry { path, row, col },
        })
    }

    pub fn describe(&self, q: &Quiver) -> String {
        match &self.kind {
            InvariantKind::Trace(c) => format!("tr({})", c.display(q)),
            InvariantKind::Entry { path, row, col } => {
                format!("({})[{},{}]", path.display(q), row + 1, col + 1)
            }
        }
    }
}

/// All paths of length `1..=max_len` starting at `start` using arrows accepted by `allow`.
fn paths_from(
    q: &Quiver,
    start: VertexId,
    max_len: usize,
    allow: &dyn Fn(ArrowId) -> bool,
) -> Vec<Path> {
    let mut out = Vec::new();
    let mut frontier = vec![Path::idempotent(start)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for a in q
                .arrow_ids()
                .filter(|&a| allow(a) && q.arrow(a).source == p.target())
            {
                next.push(Path::arrow(q, a).compose(p).expect("composable"));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Cycles through `I` up to rotation, then paths between framing vertices.
pub fn lbp_kinds(
    q: &Quiver,
    v: &DimensionVector,
    cycle_bound: usize,
    path_bound: usize,
) -> Vec<InvariantKind> {
    let mut kinds = Vec::new();
    let inner = |a: ArrowId| {
        let arrow = q.arrow(a);
        q.tag(arrow.source) != VertexTag::F && q.tag(arrow.target) != VertexTag::F
    };
    for i in q.unframed_vertices() {
        for p in paths_from(q, i, cycle_bound, &inner) {
            if p.is_cycle() && p.canonical_rotation(q) == p {
                kinds.push(InvariantKind::Trace(p));
            }
        }
    }
    let framing = q.vertices_tagged(&[VertexTag::F]);
    for &f in &framing {
        let mut paths = vec![Path::idempotent(f)];
        paths.extend(paths_from(q, f, path_bound, &|_| true));
        for p in paths.into_iter().filter(|p| framing.contains(&p.target())) {
            for row in 0..v.get(p.target()) {
                for col in 0..v.get(p.source()) {
                    kinds.push(InvariantKind::Entry {
                        path: p.clone(),
                        row,
                        col,
                    });
                }
            }
        }
    }
    kinds
}

/// Trace and entry generators of the invariant ring up to the given lengths,
/// with duplicate polynomials removed (first occurrence kept).
pub fn lbp_generators(
    coords: &RepCoordinates,
    cycle_bound: usize,
    path_bound: usize,
) -> Result<Vec<InvariantGenerator>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for kind in lbp_kinds(coords.quiver(), coords.dims(), cycle_bound, path_bound) {
        let g = match kind {
            InvariantKind::Trace(c) => InvariantGenerator::trace(coords, c)?,
            InvariantKind::Entry { path, row, col } => {
                InvariantGenerator::entry(coords, path, row, col)?
            }
        };
        if seen.insert(g.polynomial.clone()) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Default cycle bound: `λ` for finite-dimensional algebras, else `(Σ_I v_i)²`.
pub fn default_cycle_bound(q: &Quiver, v: &DimensionVector, lambda: Option<usize>) -> usize {
    lambda.unwrap_or_else(|| {
        let n: usize = q.unframed_vertices().iter().map(|&i| v.get(i)).sum();
        n * n
    })
}

fn check_add_inputs(
    vk: &ModuleRep,
    rels: &RelationSet,
    small: &RepCoordinates,
    big: &RepCoordinates,
) -> Result<()> {
    let q = small.quiver();
    if vk.quiver() != q || big.quiver() != q {
        return Err(Error::ShapeMismatch("quivers differ".into()));
    }
    for h in q.corner_vertices() {
        if vk.dims().get(h) != 0 {
            return Err(Error::Module(format!(
                "V_K is not supported on K: dimension {} at `{}`",
                vk.dims().get(h),
                q.vertex(h).name
            )));
        }
    }
    if big.dims() != &small.dims().add(vk.dims()) {
        return Err(Error::ShapeMismatch("v̂ must equal v + dim V_K".into()));
    }
    if !check_relations(vk, rels)?.is_valid() {
        return Err(Error::Module("V_K does not satisfy the relations".into()));
    }
    Ok(())
}

/// Pull a polynomial on `Rep(v̂)` back along `V ↦ V ⊕ V_K` to `Rep(v)`.
///
/// Each `v̂`-entry becomes the matching `v`-variable inside the `V` block, the
/// `V_K` entry inside its block, and zero off the diagonal blocks.
pub fn pullback_polynomial(
    f: &Polynomial,
    vk: &ModuleRep,
    rels: &RelationSet,
    small: &RepCoordinates,
    big: &RepCoordinates,
) -> Result<Polynomial> {
    check_add_inputs(vk, rels, small, big)?;
    if **f.ring() != **big.ring() {
        return Err(Error::RingMismatch("polynomial is not on Rep(v̂)".into()));
    }
    let q = small.quiver();
    let ring = small.ring();
    let mut images = vec![Polynomial::zero(ring); big.nvars()];
    for a in q.arrow_ids() {
        let arrow = q.arrow(a);
        let (vt, vs) = (
            small.dims().get(arrow.target),
            small.dims().get(arrow.source),
        );
        let (bt, bs) = (big.dims().get(arrow.target), big.dims().get(arrow.source));
        let block = vk.matrix(a);
        for r in 0..bt {
            for c in 0..bs {
                let image = if r < vt && c < vs {
                    Polynomial::var(ring, small.variable(a, r, c))
                } else if r >= vt && c >= vs {
                    Polynomial::constant(ring, block.get(r - vt, c - vs).clone())
                } else {
                    Polynomial::zero(ring)
                };
                images[big.variable(a, r, c)] = image;
            }
        }
    }
    Ok(f.substitute(ring, &images))
}

/// Pullback of a generator on `Rep(v̂)` along `V ↦ V ⊕ V_K`.
pub fn add_pullback(
    g: &InvariantGenerator,
    vk: &ModuleRep,
    rels: &RelationSet,
    small: &RepCoordinates,
    big: &RepCoordinates,
) -> Result<Polynomial> {
    pullback_polynomial(&g.polynomial, vk, rels, small, big)
}

/// The same pullback by its closed form: traces gain the constant trace of
/// the cycle on `V_K`; entries are unchanged.
pub fn add_pullback_closed_form(
    g: &InvariantGenerator,
    vk: &ModuleRep,
    rels: &RelationSet,
    small: &RepCoordinates,
    big: &RepCoordinates,
) -> Result<Polynomial> {
    check_add_inputs(vk, rels, small, big)?;
    Ok(match &g.kind {
        InvariantKind::Trace(c) => {
            let on_v = small.path_matrix(c).trace();
            on_v.add(&Polynomial::constant(
                small.ring(),
                vk.path_matrix(c).trace(),
            ))
        }
        InvariantKind::Entry { path, row, col } => small.path_matrix(path).get(*row, *col).clone(),
    })
}

/// The map `Rep(A, v) → Rep(Q_H, v|_H)`, `V ↦ e_H V`, as polynomials.
#[derive(Clone, Debug)]
pub struct CornerComparison {
    /// Coordinates on `Rep(Q_H, v|_H)`.
    pub corner: RepCoordinates,
    /// For each corner variable, its pullback to `Rep(A, v)`.
    pub images: Vec<Polynomial>,
}

impl CornerComparison {
    pub fn pull_back(&self, f: &Polynomial, coords: &RepCoordinates) -> Polynomial {
        f.substitute(coords.ring(), &self.images)
    }
}

pub fn corner_comparison_map(
    pres: &CornerPresentation,
    coords: &RepCoordinates,
) -> Result<CornerComparison> {
    let vh = DimensionVector(
        pres.vertex_map
            .iter()
            .map(|&v| coords.dims().get(v))
            .collect(),
    );
    let corner = RepCoordinates::new(&pres.quiver, &vh)?;
    let mut images = vec![Polynomial::zero(coords.ring()); corner.nvars()];
    for x in pres.quiver.arrow_ids() {
        let m = coords.path_matrix(&pres.arrow_images[x.0]);
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                images[corner.variable(x, r, c)] = m.get(r, c).clone();
            }
        }
    }
    Ok(CornerComparison { corner, images })
}

fn single_j(q: &Quiver) -> Result<VertexId> {
    match q.vertices_tagged(&[VertexTag::J]).as_slice() {
        [j] => Ok(*j),
        other => Err(Error::Partition(format!(
            "expected exactly one J vertex, found {}",
            other.len()
        ))),
    }
}

/// `A*`: the relations plus every arrow from `K` to the `J` vertex.
pub fn build_astar(q: &Quiver, rels: &RelationSet) -> Result<RelationSet> {
    let j = single_j(q)?;
    let mut out = rels.clone();
    for a in q.arrow_ids() {
        let arrow = q.arrow(a);
        if arrow.target == j && q.tag(arrow.source) == VertexTag::K {
            out.push(q, AlgebraElement::from_path(Path::arrow(q, a)))?;
        }
    }
    Ok(out)
}

/// `A⊛ = A*/(e_F)`: framing vertices and killed arrows deleted, relations
/// restricted, and the `J` vertex retagged as framing.
pub fn build_acircledast(q: &Quiver, astar: &RelationSet) -> Result<(Quiver, RelationSet)> {
    if q.num_vertices() == 0 {
        return Err(Error::InvalidQuiver("empty quiver".into()));
    }
    single_j(q)?;
    let killed: Vec<ArrowId> = astar
        .relations()
        .iter()
        .filter(|r| r.len() == 1)
        .filter_map(|r| {
            let (p, _) = r.terms().next().expect("one term");
            (p.len() == 1).then(|| p.arrows()[0])
        })
        .collect();
    let framing = q.vertices_tagged(&[VertexTag::F]);
    let (nq, nrels) = delete(q, astar, &framing, &killed)?;
    let j = single_j(&nq)?;
    Ok((nq.with_tag(j, VertexTag::F), nrels))
}

/// Whether no generator involves any of `vars`, so the scheme splits off an
/// affine space on those coordinates.
pub fn product_split_check(ideal: &RepIdeal, vars: &[usize]) -> bool {
    ideal
        .generators
        .iter()
        .all(|g| g.variables().iter().all(|v| !vars.contains(v)))
}

pub fn constant_term(p: &Polynomial) -> Rational {
    p.terms()
        .iter()
        .find(|(m, _)| m.iter().all(|&e| e == 0))
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rational::zero)
}
