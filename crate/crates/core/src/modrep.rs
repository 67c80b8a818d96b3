//! Finite-dimensional modules given by one exact matrix per arrow.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::{AlgebraElement, Class, GradedBasis, RelationSet};
use crate::corner::{sufficient_dimension_bound, BimoduleGenerators, CornerPresentation};
use crate::error::{Error, Result};
use crate::linalg::{rat, Echelon, Matrix, Rational};
use crate::quiver::{ArrowId, DimensionVector, Path, Quiver, VertexId, VertexTag};
use crate::repscheme::{lbp_kinds, InvariantGenerator, InvariantKind, RepCoordinates};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    quiver: Arc<Quiver>,
    dims: DimensionVector,
    matrices: Vec<Matrix>,
}

impl ModuleRep {
    /// Checks every matrix is `v_{t(a)} × v_{s(a)}`.
    pub fn new(quiver: Arc<Quiver>, dims: DimensionVector, matrices: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() {
            return Err(Error::ShapeMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        if matrices.len() != quiver.num_arrows() {
            return Err(Error::ShapeMismatch(format!(
                "{} matrices for {} arrows",
                matrices.len(),
                quiver.num_arrows()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&matrices) {
            let want = (dims.get(a.target), dims.get(a.source));
            if m.shape() != want {
                return Err(Error::ShapeMismatch(format!(
                    "arrow `{}` needs a {}×{} matrix, got {}×{}",
                    a.name,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(ModuleRep {
            quiver,
            dims,
            matrices,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, dims: DimensionVector) -> Result<Self> {
        let matrices = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims.get(a.target), dims.get(a.source)))
            .collect();
        Self::new(quiver, dims, matrices)
    }

    /// The simple module `S_i`.
    pub fn simple(quiver: Arc<Quiver>, i: VertexId) -> Result<Self> {
        let mut dims = DimensionVector::zeros(quiver.num_vertices());
        dims.0[i.0] = 1;
        Self::zero(quiver, dims)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> Arc<Quiver> {
        Arc::clone(&self.quiver)
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn matrix(&self, a: ArrowId) -> &Matrix {
        &self.matrices[a.0]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn set_matrix(&mut self, a: ArrowId, m: Matrix) -> Result<()> {
        let arrow = self.quiver.arrow(a);
        if m.shape() != (self.dims.get(arrow.target), self.dims.get(arrow.source)) {
            return Err(Error::ShapeMismatch(format!("matrix for `{}`", arrow.name)));
        }
        self.matrices[a.0] = m;
        Ok(())
    }

    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims.get(p.source()));
        for &a in p.arrows() {
            m = self.matrices[a.0]
                .mul(&m)
                .expect("shapes follow the dimension vector");
        }
        m
    }

    pub fn element_matrix(&self, x: &AlgebraElement) -> Result<Matrix> {
        let (s, t) = x
            .endpoints()
            .ok_or_else(|| Error::Inhomogeneous("element terms have different endpoints".into()))?;
        let mut m = Matrix::zeros(self.dims.get(t), self.dims.get(s));
        for (p, c) in x.terms() {
            m.add_assign_scaled(&self.path_matrix(p), c)?;
        }
        Ok(m)
    }
}

/// Residual matrix of each relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub residuals: Vec<Matrix>,
}

impl RelationCheck {
    pub fn is_valid(&self) -> bool {
        self.residuals.iter().all(Matrix::is_zero)
    }
}

pub fn check_relations(m: &ModuleRep, rels: &RelationSet) -> Result<RelationCheck> {
    let residuals = rels
        .relations()
        .iter()
        .map(|r| m.element_matrix(r))
        .collect::<Result<_>>()?;
    Ok(RelationCheck { residuals })
}

/// Block-diagonal sum, `m1` first at every vertex.
pub fn direct_sum(m1: &ModuleRep, m2: &ModuleRep) -> Result<ModuleRep> {
    if m1.quiver != m2.quiver {
        return Err(Error::Module(
            "direct sum of modules over different quivers".into(),
        ));
    }
    let matrices = m1
        .matrices
        .iter()
        .zip(&m2.matrices)
        .map(|(a, b)| a.block_diag(b))
        .collect();
    ModuleRep::new(m1.quiver_arc(), m1.dims.add(&m2.dims), matrices)
}

pub fn is_nilvadent(m: &ModuleRep) -> bool {
    m.matrices.iter().all(Matrix::is_zero)
}

/// `e_H V` as a module over the presentation quiver.
pub fn restrict_corner(m: &ModuleRep, pres: &CornerPresentation) -> Result<ModuleRep> {
    let dims = DimensionVector(pres.vertex_map.iter().map(|&v| m.dims.get(v)).collect());
    let matrices = pres.arrow_images.iter().map(|p| m.path_matrix(p)).collect();
    ModuleRep::new(Arc::new(pres.quiver.clone()), dims, matrices)
}

/// `M_a ↦ g_{t(a)} M_a g_{s(a)}^{-1}` for invertible `g` per vertex.
pub fn conjugate(m: &ModuleRep, g: &[Matrix]) -> Result<ModuleRep> {
    if g.len() != m.quiver.num_vertices() {
        return Err(Error::ShapeMismatch("one matrix per vertex".into()));
    }
    let mut inverses = Vec::with_capacity(g.len());
    for (i, gi) in g.iter().enumerate() {
        if gi.shape() != (m.dims.0[i], m.dims.0[i]) {
            return Err(Error::ShapeMismatch(format!(
                "change of basis at vertex {i}"
            )));
        }
        inverses.push(gi.inverse().ok_or(Error::ZeroDeterminant(i))?);
    }
    let matrices = m
        .quiver
        .arrows()
        .iter()
        .zip(&m.matrices)
        .map(|(a, ma)| g[a.target.0].mul(ma)?.mul(&inverses[a.source.0]))
        .collect::<Result<_>>()?;
    ModuleRep::new(m.quiver_arc(), m.dims.clone(), matrices)
}

/// A random invertible matrix with small integer entries: unit lower times unit upper triangular.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, rat(rng.gen_range(-2..=2)));
            upper.set(j, i, rat(rng.gen_range(-2..=2)));
        }
    }
    lower.mul(&upper).expect("square")
}

/// Random change of basis at the unframed vertices.
pub fn random_basis_change(m: &ModuleRep, rng: &mut impl Rng) -> Result<ModuleRep> {
    let g: Vec<Matrix> = m
        .quiver
        .vertex_ids()
        .map(|v| {
            let n = m.dims.get(v);
            if m.quiver.tag(v) == VertexTag::F {
                Matrix::identity(n)
            } else {
                random_invertible(rng, n)
            }
        })
        .collect();
    conjugate(m, &g)
}

/// A random module on `dims` with entries in `[-2, 2]`, not checked against any relations.
pub fn random_matrices(
    quiver: Arc<Quiver>,
    dims: DimensionVector,
    rng: &mut impl Rng,
) -> Result<ModuleRep> {
    let matrices = quiver
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims.get(a.target), dims.get(a.source));
            let mut m = Matrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, rat(rng.gen_range(-2..=2)));
                }
            }
            m
        })
        .collect();
    ModuleRep::new(quiver, dims, matrices)
}

/// Upper-right block of `E(ρ)` for `E = [[V, X], [0, W]]`; linear in `X`.
fn extension_block(
    v: &ModuleRep,
    w: &ModuleRep,
    x: &[Matrix],
    rel: &AlgebraElement,
) -> Result<Matrix> {
    let (s, t) = rel.endpoints().expect("validated relation");
    let mut out = Matrix::zeros(v.dims.get(t), w.dims.get(s));
    for (p, c) in rel.terms() {
        let arrows = p.arrows();
        for k in 0..arrows.len() {
            let before = Path::from_traversal(&w.quiver, p.source(), &arrows[..k])?;
            let mid = w.quiver.arrow(arrows[k]).target;
            let after = Path::from_traversal(&v.quiver, mid, &arrows[k + 1..])?;
            let term = v
                .path_matrix(&after)
                .mul(&x[arrows[k].0])?
                .mul(&w.path_matrix(&before))?;
            out.add_assign_scaled(&term, c)?;
        }
    }
    Ok(out)
}

/// A random block upper-triangular extension `[[V, X], [0, W]]` satisfying
/// the relations: `X` is a random combination of a basis of the solutions
/// of the linear system the relations impose on it.
pub fn random_extension(
    v: &ModuleRep,
    w: &ModuleRep,
    rels: &RelationSet,
    rng: &mut impl Rng,
) -> Result<ModuleRep> {
    if v.quiver != w.quiver {
        return Err(Error::Module(
            "extension of modules over different quivers".into(),
        ));
    }
    for m in [v, w] {
        if !check_relations(m, rels)?.is_valid() {
            return Err(Error::Module(
                "extension summand does not satisfy the relations".into(),
            ));
        }
    }
    let q = &v.quiver;
    let shapes: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .map(|a| (v.dims.get(a.target), w.dims.get(a.source)))
        .collect();
    let mut unknowns = Vec::new();
    for (a, &(r, c)) in shapes.iter().enumerate() {
        for i in 0..r {
            for j in 0..c {
                unknowns.push((a, i, j));
            }
        }
    }
    let zero_x: Vec<Matrix> = shapes.iter().map(|&(r, c)| Matrix::zeros(r, c)).collect();
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(unknowns.len());
    for &(a, i, j) in &unknowns {
        let mut x = zero_x.clone();
        x[a].set(i, j, Rational::one());
        let mut col = Vec::new();
        for r in rels.relations() {
            let block = extension_block(v, w, &x, r)?;
            for row in 0..block.rows() {
                col.extend_from_slice(block.row(row));
            }
        }
        columns.push(col);
    }
    let equations = columns.first().map_or(0, Vec::len);
    let mut system = Matrix::zeros(equations, unknowns.len());
    for (u, col) in columns.iter().enumerate() {
        for (e, value) in col.iter().enumerate() {
            system.set(e, u, value.clone());
        }
    }
    let mut solution = vec![Rational::zero(); unknowns.len()];
    for k in system.nullspace() {
        let c = rat(rng.gen_range(-2..=2));
        for (s, x) in solution.iter_mut().zip(&k) {
            *s += &c * x;
        }
    }
    let mut x = zero_x;
    for (&(a, i, j), value) in unknowns.iter().zip(solution) {
        x[a].set(i, j, value);
    }
    let mut e = direct_sum(v, w)?;
    for (a, xa) in x.iter().enumerate() {
        let arrow = q.arrow(ArrowId(a));
        let mut m = e.matrices[a].clone();
        m.set_block(0, v.dims.get(arrow.source), xa);
        e.matrices[a] = m;
    }
    if !check_relations(&e, rels)?.is_valid() {
        return Err(Error::VerificationFailed(
            "extension violates the relations".into(),
        ));
    }
    Ok(e)
}

/// A module over a framed quiver with dimension 1 at every framing vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedModule(ModuleRep);

impl FramedModule {
    pub fn new(m: ModuleRep) -> Result<Self> {
        for f in m.quiver.vertices_tagged(&[VertexTag::F]) {
            if m.dims.get(f) != 1 {
                return Err(Error::Module(format!(
                    "framing vertex `{}` must have dimension 1",
                    m.quiver.vertex(f).name
                )));
            }
        }
        Ok(FramedModule(m))
    }

    pub fn module(&self) -> &ModuleRep {
        &self.0
    }
}

/// Whether the framing components generate the whole module. The closure is
/// iterated to a fixpoint; more than `length_budget` rounds is a budget error.
pub fn generated_by_framing(m: &FramedModule, length_budget: usize) -> Result<bool> {
    let m = &m.0;
    let q = &m.quiver;
    let mut spans: Vec<Echelon> = q
        .vertex_ids()
        .map(|v| Echelon::new(m.dims.get(v)))
        .collect();
    for f in q.vertices_tagged(&[VertexTag::F]) {
        for k in 0..m.dims.get(f) {
            let mut e = vec![Rational::zero(); m.dims.get(f)];
            e[k] = Rational::one();
            spans[f.0].insert(e);
        }
    }
    let mut rounds = 0;
    loop {
        let mut changed = false;
        for (a, arrow) in q.arrows().iter().enumerate() {
            let images: Vec<Vec<Rational>> = spans[arrow.source.0]
                .rows()
                .iter()
                .map(|r| m.matrices[a].apply(r))
                .collect();
            for img in images {
                changed |= spans[arrow.target.0].insert(img);
            }
        }
        if !changed {
            break;
        }
        rounds += 1;
        if rounds > length_budget {
            return Err(Error::BudgetExhausted(format!(
                "framing closure not stable after {length_budget} rounds"
            )));
        }
    }
    Ok(q.vertex_ids().all(|v| spans[v.0].rank() == m.dims.get(v)))
}

/// Values of the generator polynomials at the point of `Rep` given by `m`.
pub fn invariant_fingerprint(m: &ModuleRep, gens: &[InvariantGenerator]) -> Result<Vec<Rational>> {
    let coords = RepCoordinates::new(&m.quiver, &m.dims)?;
    let point = coords.point(m)?;
    gens.iter()
        .map(|g| {
            if **g.polynomial.ring() != **coords.ring() {
                return Err(Error::RingMismatch(
                    "generator is not on this module's coordinates".into(),
                ));
            }
            Ok(g.polynomial.evaluate(&point))
        })
        .collect()
}

/// The same values computed directly from the module matrices.
pub fn kind_fingerprint(m: &ModuleRep, kinds: &[InvariantKind]) -> Vec<Rational> {
    kinds
        .iter()
        .map(|k| match k {
            InvariantKind::Trace(c) => m.path_matrix(c).trace(),
            InvariantKind::Entry { path, row, col } => m.path_matrix(path).get(*row, *col).clone(),
        })
        .collect()
}

/// Lengths used for the fingerprint comparison after induction.
const INDUCE_CHECK_CYCLES: usize = 4;
const INDUCE_CHECK_PATHS: usize = 4;

/// `Ae_H ⊗_{A_H} V_H`, computed in truncations.
///
/// Spanning symbols are `x ⊗ w` for standard monomials `x` of degree `≤ D`
/// starting in `H` and basis vectors `w` of `V_H` at the start of `x`,
/// subject to `(x·l) ⊗ w = x ⊗ (l·w)` for the presentation arrows `l`. `D`
/// grows until the dimensions are stable for `λ + 2` consecutive values and
/// every surviving symbol has degree `≤ D − max weight`, or until `budget`.
/// The result is checked to satisfy the relations of `A`, to restrict to a
/// module isomorphic to `V_H` (fingerprint and explicit isomorphism), and to
/// respect the dimension bound.
pub fn induce_module(
    vh: &ModuleRep,
    pres: &CornerPresentation,
    gens: &BimoduleGenerators,
    b: &GradedBasis,
    budget: usize,
) -> Result<ModuleRep> {
    if vh.quiver() != &pres.quiver {
        return Err(Error::Module(
            "V_H is not a module over the presentation quiver".into(),
        ));
    }
    if !check_relations(vh, &pres.relations)?.is_valid() {
        return Err(Error::Module(
            "V_H violates the presentation relations".into(),
        ));
    }
    let q = b.quiver();
    let mut local = vec![None; q.num_vertices()];
    for (i, &v) in pres.vertex_map.iter().enumerate() {
        local[v.0] = Some(i);
    }
    let window = gens.lambda + 2;
    let w_max = q.max_weight();
    let mut history: Vec<Vec<usize>> = Vec::new();
    for d_top in 0..=budget {
        if !b.is_finite() && d_top > b.cutoff() {
            return Err(Error::BeyondCutoff {
                degree: d_top,
                cutoff: b.cutoff(),
            });
        }
        let t = Truncation::build(vh, pres, b, &local, d_top)?;
        let dims = t.dims(q.num_vertices());
        history.push(dims.clone());
        let stable = history.len() > window
            && history[history.len() - 1 - window..]
                .iter()
                .all(|h| *h == dims);
        if stable && t.max_basis_degree().is_none_or(|d| d + w_max <= d_top) {
            let v = t.module(b, DimensionVector(dims))?;
            verify_induced(&v, vh, pres, gens, b, &t)?;
            return Ok(v);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "induced module not stable by degree {budget}"
    )))
}

struct Truncation {
    /// (degree, basis index, V_H basis index) per column, degree descending.
    symbols: Vec<(usize, usize, usize)>,
    column: HashMap<(usize, usize, usize), usize>,
    relations: Echelon,
    /// Target vertex of each symbol.
    targets: Vec<VertexId>,
}

impl Truncation {
    fn build(
        vh: &ModuleRep,
        pres: &CornerPresentation,
        b: &GradedBasis,
        local: &[Option<usize>],
        d_top: usize,
    ) -> Result<Truncation> {
        let mut symbols = Vec::new();
        let mut targets = Vec::new();
        for d in (0..=d_top).rev() {
            for (j, x) in b.basis(d)?.iter().enumerate() {
                if let Some(h) = local[x.source().0] {
                    for k in 0..vh.dims().0[h] {
                        symbols.push((d, j, k));
                        targets.push(x.target());
                    }
                }
            }
        }
        let column: HashMap<_, _> = symbols.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let n = symbols.len();
        let mut relations = Echelon::new(n);
        for g in pres.quiver.arrow_ids() {
            let path = &pres.arrow_images[g.0];
            let wg = path.weight(b.quiver());
            let lg = vh.matrix(g);
            let image = b.class_of_path(path)?;
            for d in 0..=d_top.saturating_sub(wg) {
                if d + wg > d_top {
                    continue;
                }
                for (j, x) in b.basis(d)?.iter().enumerate() {
                    if x.source() != path.target() {
                        continue;
                    }
                    let xl = b.apply_path(x, &image)?;
                    for k in 0..lg.cols() {
                        let mut v = vec![Rational::zero(); n];
                        for (j2, c) in xl.nonzero() {
                            v[column[&(d + wg, j2, k)]] += c;
                        }
                        for l in 0..lg.rows() {
                            let c = lg.get(l, k);
                            if !c.is_zero() {
                                v[column[&(d, j, l)]] -= c;
                            }
                        }
                        relations.insert(v);
                    }
                }
            }
        }
        Ok(Truncation {
            symbols,
            column,
            relations,
            targets,
        })
    }

    fn basis_columns(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.symbols.len()).filter(|&c| !self.relations.is_pivot(c))
    }

    fn dims(&self, nv: usize) -> Vec<usize> {
        let mut dims = vec![0; nv];
        for c in self.basis_columns() {
            dims[self.targets[c].0] += 1;
        }
        dims
    }

    fn max_basis_degree(&self) -> Option<usize> {
        self.basis_columns().map(|c| self.symbols[c].0).max()
    }

    /// Position of each basis column within its vertex.
    fn local_index(&self) -> HashMap<usize, usize> {
        let mut count: HashMap<VertexId, usize> = HashMap::new();
        let mut out = HashMap::new();
        for c in self.basis_columns() {
            let slot = count.entry(self.targets[c]).or_insert(0);
            out.insert(c, *slot);
            *slot += 1;
        }
        out
    }

    /// Coordinates (per vertex basis) of a vector over symbols.
    fn coordinates(&self, v: &[Rational], index: &HashMap<usize, usize>) -> Vec<(usize, Rational)> {
        self.relations
            .reduce(v)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(col, c)| (index[&col], c))
            .collect()
    }

    fn module(&self, b: &GradedBasis, dims: DimensionVector) -> Result<ModuleRep> {
        let q = b.quiver();
        let index = self.local_index();
        let mut matrices = Vec::with_capacity(q.num_arrows());
        for a in q.arrow_ids() {
            let arrow = q.arrow(a);
            let mut m = Matrix::zeros(dims.get(arrow.target), dims.get(arrow.source));
            for c in self
                .basis_columns()
                .filter(|&c| self.targets[c] == arrow.source)
            {
                let (d, j, k) = self.symbols[c];
                let ax = b.apply_arrow(a, &Class::unit(d, b.dim(d)?, j))?;
                let mut v = vec![Rational::zero(); self.symbols.len()];
                for (j2, x) in ax.nonzero() {
                    v[self.column[&(ax.degree, j2, k)]] += x;
                }
                for (row, x) in self.coordinates(&v, &index) {
                    m.set(row, index[&c], x);
                }
            }
            matrices.push(m);
        }
        ModuleRep::new(b.quiver_arc(), dims, matrices)
    }
}

fn verify_induced(
    v: &ModuleRep,
    vh: &ModuleRep,
    pres: &CornerPresentation,
    gens: &BimoduleGenerators,
    b: &GradedBasis,
    t: &Truncation,
) -> Result<()> {
    if !check_relations(v, b.relations())?.is_valid() {
        return Err(Error::VerificationFailed(
            "induced module violates the relations".into(),
        ));
    }
    let restricted = restrict_corner(v, pres)?;
    if restricted.dims() != vh.dims() {
        return Err(Error::VerificationFailed(format!(
            "e_H V has dimensions {:?}, V_H has {:?}",
            restricted.dims().0,
            vh.dims().0
        )));
    }
    let kinds = lbp_kinds(
        &pres.quiver,
        vh.dims(),
        INDUCE_CHECK_CYCLES,
        INDUCE_CHECK_PATHS,
    );
    if kind_fingerprint(&restricted, &kinds) != kind_fingerprint(vh, &kinds) {
        return Err(Error::VerificationFailed(
            "e_H V and V_H have different fingerprints".into(),
        ));
    }
    // w ↦ e_h ⊗ w must intertwine V_H with e_H V
    let index = t.local_index();
    let mut iso = Vec::with_capacity(pres.vertex_map.len());
    for (h, &vx) in pres.vertex_map.iter().enumerate() {
        let n = vh.dims().0[h];
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            let mut sym = vec![Rational::zero(); t.symbols.len()];
            sym[t.column[&(0, vx.0, k)]] = Rational::one();
            for (row, x) in t.coordinates(&sym, &index) {
                m.set(row, k, x);
            }
        }
        if m.inverse().is_none() {
            return Err(Error::VerificationFailed(
                "V_H → e_H V is not bijective".into(),
            ));
        }
        iso.push(m);
    }
    for g in pres.quiver.arrow_ids() {
        let arrow = pres.quiver.arrow(g);
        let lhs = restricted.matrix(g).mul(&iso[arrow.source.0])?;
        let rhs = iso[arrow.target.0].mul(vh.matrix(g))?;
        if lhs != rhs {
            return Err(Error::VerificationFailed(format!(
                "V_H → e_H V does not commute with `{}`",
                arrow.name
            )));
        }
    }
    let h_dims = DimensionVector(vh.dims().0.clone());
    let bound = sufficient_dimension_bound(gens, &h_dims)?;
    if !(v.dims() <= &bound) {
        return Err(Error::VerificationFailed(format!(
            "induced dimensions {:?} exceed the bound {:?}",
            v.dims().0,
            bound.0
        )));
    }
    Ok(())
}
