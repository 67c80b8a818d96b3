//! Degreewise linear algebra for graded quotients `A = ℂQ/𝔞` of path algebras.
//!
//! The basis of `A_d` is computed from the basis of lower degrees: every
//! degree-`d` class is `a·b` for an arrow `a` and a standard monomial `b` of
//! degree `d - weight(a)`, and the only new relations in degree `d` are
//! `r·q` with `r` a relation and `q` a standard monomial. Each piece stores
//! the normal form of every such `a·b`, which is exactly the left action of
//! the arrows on `A`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Rational};
use crate::quiver::{Arrow, ArrowId, Path, Quiver, VertexId, VertexTag};

/// A finite formal rational combination of paths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::term(Rational::one(), p)
    }

    pub fn term(c: Rational, p: Path) -> Self {
        let mut e = Self::zero();
        e.add_term(p, c);
        e
    }

    pub fn add_term(&mut self, p: Path, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Path) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, v) in &other.terms {
            out.add_term(p.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Common grading degree of all terms, if homogeneous.
    pub fn degree(&self, q: &Quiver) -> Option<usize> {
        let mut it = self.terms.keys().map(|p| p.weight(q));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Common (source, target) of all terms, if any.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        let mut it = self.terms.keys().map(|p| (p.source(), p.target()));
        let first = it.next()?;
        it.all(|e| e == first).then_some(first)
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> ElementDisplay<'a> {
        ElementDisplay {
            element: self,
            quiver: q,
        }
    }
}

pub struct ElementDisplay<'a> {
    element: &'a AlgebraElement,
    quiver: &'a Quiver,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.element.terms().enumerate() {
            let negative = *c < Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}", p.display(self.quiver))?;
        }
        Ok(())
    }
}

/// Product in the free path algebra `ℂQ`: bilinear extension of composition.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (p, c) in x.terms() {
        for (r, d) in y.terms() {
            if let Some(pr) = p.compose(r) {
                out.add_term(pr, c * d);
            }
        }
    }
    out
}

/// Generators of a homogeneous two-sided ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    relations: Vec<AlgebraElement>,
}

impl RelationSet {
    /// Validates that every relation is nonzero, of positive degree, and
    /// homogeneous in degree, source and target.
    pub fn new(q: &Quiver, relations: Vec<AlgebraElement>) -> Result<Self> {
        for r in &relations {
            check_relation(q, r)?;
        }
        Ok(RelationSet { relations })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn relations(&self) -> &[AlgebraElement] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn push(&mut self, q: &Quiver, r: AlgebraElement) -> Result<()> {
        check_relation(q, &r)?;
        self.relations.push(r);
        Ok(())
    }
}

pub fn check_relation(q: &Quiver, r: &AlgebraElement) -> Result<()> {
    if r.is_zero() {
        return Err(Error::Inhomogeneous("zero relation".into()));
    }
    if r.endpoints().is_none() {
        return Err(Error::Inhomogeneous(format!(
            "terms of `{}` have different sources or targets",
            r.display(q)
        )));
    }
    match r.degree(q) {
        None => Err(Error::Inhomogeneous(format!(
            "terms of `{}` have different degrees",
            r.display(q)
        ))),
        Some(0) => Err(Error::Inhomogeneous(format!(
            "`{}` has degree 0",
            r.display(q)
        ))),
        Some(_) => Ok(()),
    }
}

/// Per-vertex preprojective relations `Σ_{t(a)=i} a·a* − Σ_{s(a)=i} a*·a`,
/// summed over unstarred arrows. Framing vertices and the arrows touching
/// them carry no relation; every other arrow must have a reverse partner.
pub fn preprojective_relations(q: &Quiver) -> Result<RelationSet> {
    let framed = |v: VertexId| q.tag(v) == VertexTag::F;
    let mut oriented = Vec::new();
    for a in q.arrow_ids() {
        let arrow = q.arrow(a);
        if framed(arrow.source) || framed(arrow.target) {
            continue;
        }
        let partner = q
            .partner(a)
            .ok_or_else(|| Error::UnpairedArrow(arrow.name.clone()))?;
        if !arrow.name.ends_with('*') {
            oriented.push((a, partner));
        }
    }
    let mut relations = Vec::new();
    for i in q.vertex_ids().filter(|&v| !framed(v)) {
        let mut rel = AlgebraElement::zero();
        for &(a, astar) in &oriented {
            let pa = Path::arrow(q, a);
            let pstar = Path::arrow(q, astar);
            if q.arrow(a).target == i {
                rel.add_term(pa.compose(&pstar).expect("a·a* composes"), Rational::one());
            }
            if q.arrow(a).source == i {
                rel.add_term(pstar.compose(&pa).expect("a*·a composes"), -Rational::one());
            }
        }
        if !rel.is_zero() {
            relations.push(rel);
        }
    }
    RelationSet::new(q, relations)
}

/// Delete vertices and arrows, restricting the relations: terms whose path
/// uses a deleted vertex or arrow vanish, and relations that become zero are
/// dropped. This realizes `ℂQ/(𝔞 + (e_X) + (arrows))` for the deleted data.
pub fn delete(
    q: &Quiver,
    rels: &RelationSet,
    vertices: &[VertexId],
    arrows: &[ArrowId],
) -> Result<(Quiver, RelationSet)> {
    let keep: Vec<VertexId> = q.vertex_ids().filter(|v| !vertices.contains(v)).collect();
    let mut vmap = vec![None; q.num_vertices()];
    let mut new_vertices = Vec::new();
    for &v in &keep {
        vmap[v.0] = Some(VertexId(new_vertices.len()));
        new_vertices.push(q.vertex(v).clone());
    }
    let mut amap = vec![None; q.num_arrows()];
    let mut new_arrows = Vec::new();
    for a in q.arrow_ids() {
        let arrow = q.arrow(a);
        if arrows.contains(&a) {
            continue;
        }
        if let (Some(s), Some(t)) = (vmap[arrow.source.0], vmap[arrow.target.0]) {
            amap[a.0] = Some(ArrowId(new_arrows.len()));
            new_arrows.push(Arrow {
                name: arrow.name.clone(),
                source: s,
                target: t,
                weight: arrow.weight,
            });
        }
    }
    let nq = Quiver::new(new_vertices, new_arrows)?;
    let mut out = Vec::new();
    for r in rels.relations() {
        let mut nr = AlgebraElement::zero();
        'terms: for (p, c) in r.terms() {
            let Some(start) = vmap[p.source().0] else {
                continue;
            };
            let mut mapped = Vec::with_capacity(p.len());
            for &a in p.arrows() {
                match amap[a.0] {
                    Some(b) => mapped.push(b),
                    None => continue 'terms,
                }
            }
            nr.add_term(Path::from_traversal(&nq, start, &mapped)?, c.clone());
        }
        if !nr.is_zero() {
            out.push(nr);
        }
    }
    Ok((nq.clone(), RelationSet::new(&nq, out)?))
}

/// A homogeneous class in `A_d`, as coordinates over the standard monomials of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl Class {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Class {
            degree,
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn unit(degree: usize, dim: usize, index: usize) -> Self {
        let mut c = Class::zero(degree, dim);
        c.coords[index] = Rational::one();
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add_scaled(&mut self, other: &Class, c: &Rational) {
        assert_eq!(self.degree, other.degree, "class degrees");
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            if !y.is_zero() {
                *x += y * c;
            }
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// Normal-form coordinates of a possibly inhomogeneous element, by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coordinates {
    pub by_degree: BTreeMap<usize, Vec<Rational>>,
}

impl Coordinates {
    pub fn is_zero(&self) -> bool {
        self.by_degree.values().all(|v| v.iter().all(Zero::is_zero))
    }

    pub fn degree(&self, d: usize) -> Option<&[Rational]> {
        self.by_degree.get(&d).map(Vec::as_slice)
    }
}

#[derive(Clone, Debug)]
struct Piece {
    basis: Vec<Path>,
    /// Normal form of `a·b` for arrow `a` and basis index `b` of degree `d - weight(a)`.
    action: HashMap<(ArrowId, usize), Vec<(usize, Rational)>>,
}

/// Degreewise bases of `A = ℂQ/𝔞` up to a cutoff, with normal forms.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    quiver: Arc<Quiver>,
    relations: RelationSet,
    cutoff: usize,
    pieces: Vec<Piece>,
    lambda: Option<usize>,
}

/// Build the graded basis of `ℂQ/(rels)` in degrees `0..=max_degree`.
///
/// Construction stops early once the algebra is detected finite-dimensional:
/// with maximal arrow weight `w`, `w` consecutive empty degrees force every
/// later degree to vanish.
pub fn graded_basis(q: &Quiver, rels: &RelationSet, max_degree: usize) -> Result<GradedBasis> {
    for r in rels.relations() {
        check_relation(q, r)?;
    }
    let quiver = Arc::new(q.clone());
    let degree0 = Piece {
        basis: q.vertex_ids().map(Path::idempotent).collect(),
        action: HashMap::new(),
    };
    let mut gb = GradedBasis {
        quiver,
        relations: rels.clone(),
        cutoff: max_degree,
        pieces: vec![degree0],
        lambda: None,
    };
    let w_max = q.max_weight();
    let mut empty_run = 0;
    for d in 1..=max_degree {
        let piece = gb.build_piece(d)?;
        let empty = piece.basis.is_empty();
        gb.pieces.push(piece);
        if empty {
            empty_run += 1;
            if empty_run >= w_max {
                gb.lambda = Some(d - empty_run);
                gb.pieces.truncate(d - empty_run + 1);
                break;
            }
        } else {
            empty_run = 0;
        }
    }
    if gb.lambda.is_none() && q.num_vertices() == 0 {
        gb.lambda = Some(0);
    }
    Ok(gb)
}

impl GradedBasis {
    fn build_piece(&self, d: usize) -> Result<Piece> {
        let q = &*self.quiver;
        let mut candidates: Vec<(ArrowId, usize, Path)> = Vec::new();
        for a in q.arrow_ids() {
            let w = q.arrow(a).weight;
            if w > d {
                continue;
            }
            let pa = Path::arrow(q, a);
            for (j, b) in self.pieces[d - w].basis.iter().enumerate() {
                if let Some(p) = pa.compose(b) {
                    candidates.push((a, j, p));
                }
            }
        }
        // Largest paths first so they become pivots; the survivors are the
        // lexicographically smallest standard monomials.
        candidates.sort_by(|x, y| y.2.function_order_cmp(&x.2));
        let column: HashMap<(ArrowId, usize), usize> = candidates
            .iter()
            .enumerate()
            .map(|(i, (a, j, _))| ((*a, *j), i))
            .collect();
        let width = candidates.len();
        let mut ech = Echelon::new(width);
        for r in self.relations.relations() {
            let k = r.degree(q).expect("validated relation");
            if k > d {
                continue;
            }
            let (src, _) = r.endpoints().expect("validated relation");
            for (jq, qpath) in self.pieces[d - k].basis.iter().enumerate() {
                if qpath.target() != src {
                    continue;
                }
                let mut v = vec![Rational::zero(); width];
                for (p, c) in r.terms() {
                    let (&last, rest) = p.arrows().split_last().expect("positive degree");
                    let dim = self.pieces[d - k].basis.len();
                    let mut class = Class::unit(d - k, dim, jq);
                    for &a in rest {
                        class = self.apply_arrow(a, &class)?;
                    }
                    for (j, coef) in class.nonzero() {
                        let col = column[&(last, j)];
                        v[col] += c * coef;
                    }
                }
                ech.insert(v);
            }
        }
        let mut basis_index = vec![None; width];
        let mut basis = Vec::new();
        for col in (0..width).rev() {
            if !ech.is_pivot(col) {
                basis_index[col] = Some(basis.len());
                basis.push(candidates[col].2.clone());
            }
        }
        let mut action = HashMap::with_capacity(width);
        for (col, (a, j, _)) in candidates.iter().enumerate() {
            let nf: Vec<(usize, Rational)> = match basis_index[col] {
                Some(b) => vec![(b, Rational::one())],
                None => {
                    let row = ech.pivot_row(col).expect("pivot column");
                    row.iter()
                        .enumerate()
                        .filter(|(c, x)| *c != col && !x.is_zero())
                        .map(|(c, x)| (basis_index[c].expect("non-pivot column"), -x.clone()))
                        .collect()
                }
            };
            action.insert((*a, *j), nf);
        }
        Ok(Piece { basis, action })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> Arc<Quiver> {
        Arc::clone(&self.quiver)
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Top nonzero degree, when the algebra was detected finite-dimensional.
    pub fn lambda(&self) -> Option<usize> {
        self.lambda
    }

    pub fn is_finite(&self) -> bool {
        self.lambda.is_some()
    }

    /// Highest degree with known data: `λ` for finite algebras, else the cutoff.
    pub fn top_degree(&self) -> usize {
        self.lambda.unwrap_or(self.cutoff)
    }

    fn known(&self, d: usize) -> Result<Option<&Piece>> {
        if d < self.pieces.len() {
            Ok(Some(&self.pieces[d]))
        } else if self.lambda.is_some() {
            Ok(None)
        } else {
            Err(Error::BeyondCutoff {
                degree: d,
                cutoff: self.cutoff,
            })
        }
    }

    pub fn dim(&self, d: usize) -> Result<usize> {
        Ok(self.known(d)?.map_or(0, |p| p.basis.len()))
    }

    /// Dimensions of degrees `0..=λ` (finite) or `0..=cutoff` (truncated).
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    /// Standard monomials of degree `d` (empty beyond `λ`).
    pub fn basis(&self, d: usize) -> Result<&[Path]> {
        Ok(self.known(d)?.map_or(&[][..], |p| p.basis.as_slice()))
    }

    pub fn basis_index(&self, p: &Path) -> Result<Option<usize>> {
        let d = p.weight(&self.quiver);
        Ok(self.basis(d)?.iter().position(|b| b == p))
    }

    pub fn zero_class(&self, d: usize) -> Result<Class> {
        Ok(Class::zero(d, self.dim(d)?))
    }

    /// Left multiplication by an arrow: `A_d → A_{d + weight}`.
    pub fn apply_arrow(&self, a: ArrowId, c: &Class) -> Result<Class> {
        let d = c.degree + self.quiver.arrow(a).weight;
        let Some(piece) = self.known(d)? else {
            return Ok(Class::zero(d, 0));
        };
        let mut out = Class::zero(d, piece.basis.len());
        for (j, x) in c.nonzero() {
            if let Some(nf) = piece.action.get(&(a, j)) {
                for (b, y) in nf {
                    out.coords[*b] += x * y;
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication by a path.
    pub fn apply_path(&self, p: &Path, c: &Class) -> Result<Class> {
        let mut out = c.clone();
        for &a in p.arrows() {
            out = self.apply_arrow(a, &out)?;
        }
        if p.is_empty() {
            // e_v · c keeps the components ending at v
            let basis = self.basis(c.degree)?;
            for (j, b) in basis.iter().enumerate() {
                if b.target() != p.source() {
                    out.coords[j] = Rational::zero();
                }
            }
        }
        Ok(out)
    }

    pub fn idempotent_class(&self, v: VertexId) -> Class {
        Class::unit(0, self.quiver.num_vertices(), v.0)
    }

    pub fn class_of_path(&self, p: &Path) -> Result<Class> {
        self.apply_path(p, &self.idempotent_class(p.source()))
    }

    /// Class of the standard monomial with index `j` in degree `d`.
    pub fn basis_class(&self, d: usize, j: usize) -> Result<Class> {
        Ok(Class::unit(d, self.dim(d)?, j))
    }

    /// Product of two classes in `A`.
    pub fn multiply_classes(&self, x: &Class, y: &Class) -> Result<Class> {
        let basis = self.basis(x.degree)?;
        let mut out: Option<Class> = None;
        for (j, c) in x.nonzero() {
            let prod = self.apply_path(&basis[j], y)?;
            match out.as_mut() {
                Some(o) => o.add_scaled(&prod, c),
                None => {
                    let mut z = Class::zero(prod.degree, prod.coords.len());
                    z.add_scaled(&prod, c);
                    out = Some(z);
                }
            }
        }
        match out {
            Some(o) => Ok(o),
            None => self
                .zero_class(x.degree + y.degree)
                .or_else(|_| Ok(Class::zero(x.degree + y.degree, 0))),
        }
    }

    /// Coordinates of `x` modulo `𝔞` in the degreewise bases.
    pub fn normal_form(&self, x: &AlgebraElement) -> Result<Coordinates> {
        let mut out = Coordinates::default();
        for (p, c) in x.terms() {
            let d = p.weight(&self.quiver);
            if d > self.cutoff && self.lambda.is_none() {
                return Err(Error::BeyondCutoff {
                    degree: d,
                    cutoff: self.cutoff,
                });
            }
            let class = self.class_of_path(p)?;
            let slot = out
                .by_degree
                .entry(d)
                .or_insert_with(|| vec![Rational::zero(); class.coords.len()]);
            for (j, y) in class.nonzero() {
                slot[j] += c * y;
            }
        }
        Ok(out)
    }

    /// The element of `ℂQ` spanned by standard monomials that represents a class.
    pub fn class_to_element(&self, c: &Class) -> Result<AlgebraElement> {
        let basis = self.basis(c.degree)?;
        let mut e = AlgebraElement::zero();
        for (j, x) in c.nonzero() {
            e.add_term(basis[j].clone(), x.clone());
        }
        Ok(e)
    }
}

/// The cocenter `A/[A,A]`, degreewise.
#[derive(Clone, Debug)]
pub struct Cocenter {
    pub degree_dims: Vec<usize>,
    /// Standard monomials whose classes form a basis of the quotient, per degree.
    pub representatives: Vec<Vec<Path>>,
    /// Set when the algebra was not detected finite-dimensional: degrees
    /// beyond the cutoff were not examined.
    pub truncated: bool,
    commutators: Vec<Echelon>,
}

impl Cocenter {
    pub fn total_dim(&self) -> usize {
        self.degree_dims.iter().sum()
    }

    /// Whether a class lies in the commutator subspace `[A,A]`.
    pub fn in_commutator(&self, c: &Class) -> bool {
        match self.commutators.get(c.degree) {
            Some(e) => e.contains(&c.coords),
            None => c.is_zero(),
        }
    }
}

/// `A/[A,A]` in degrees `0..=cutoff`, with `[A,A]_d` spanned by `xy − yx`
/// over standard monomials of complementary degrees.
pub fn cocenter(b: &GradedBasis) -> Result<Cocenter> {
    let mut degree_dims = Vec::new();
    let mut representatives = Vec::new();
    let mut commutators = Vec::new();
    for d in 0..=b.cutoff() {
        let dim = b.dim(d)?;
        let mut ech = Echelon::new(dim);
        if dim > 0 {
            for i in 0..=d / 2 {
                let j = d - i;
                for x in 0..b.dim(i)? {
                    let cx = b.basis_class(i, x)?;
                    for y in 0..b.dim(j)? {
                        let cy = b.basis_class(j, y)?;
                        let xy = b.multiply_classes(&cx, &cy)?;
                        let yx = b.multiply_classes(&cy, &cx)?;
                        let mut comm = xy;
                        comm.add_scaled(&yx, &-Rational::one());
                        if !comm.is_zero() {
                            ech.insert(comm.coords);
                        }
                    }
                }
            }
        }
        let mut reps = Vec::new();
        let mut span = ech.clone();
        for (k, p) in b.basis(d)?.iter().enumerate() {
            if span.insert(Class::unit(d, dim, k).coords) {
                reps.push(p.clone());
            }
        }
        degree_dims.push(dim - ech.rank());
        representatives.push(reps);
        commutators.push(ech);
    }
    Ok(Cocenter {
        degree_dims,
        representatives,
        truncated: !b.is_finite(),
        commutators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::quiver::{build_doubled_affine_dynkin, build_doubled_dynkin, DynkinType};

    fn path(q: &Quiver, names: &[&str]) -> Path {
        let ids: Vec<ArrowId> = names.iter().map(|n| q.arrow_by_name(n).unwrap()).collect();
        Path::from_function_order(q, &ids).unwrap()
    }

    fn pi(ty: DynkinType, n: usize) -> (Quiver, RelationSet) {
        let q = build_doubled_dynkin(ty, n).unwrap();
        let r = preprojective_relations(&q).unwrap();
        (q, r)
    }

    #[test]
    fn preprojective_relations_a2() {
        let (q, rels) = pi(DynkinType::A, 2);
        assert_eq!(rels.len(), 2);
        let mut at1 = AlgebraElement::zero();
        at1.add_term(path(&q, &["a*", "a"]), rat(-1));
        let at2 = AlgebraElement::from_path(path(&q, &["a", "a*"]));
        assert_eq!(rels.relations()[0], at1);
        assert_eq!(rels.relations()[1], at2);
    }

    #[test]
    fn preprojective_relations_a1_and_affine_a1() {
        let (_, rels) = pi(DynkinType::A, 1);
        assert!(rels.is_empty());

        let q = build_doubled_affine_dynkin(DynkinType::A, 1).unwrap();
        let rels = preprojective_relations(&q).unwrap();
        let mut at0 = AlgebraElement::zero();
        at0.add_term(path(&q, &["a*", "a"]), rat(-1));
        at0.add_term(path(&q, &["b*", "b"]), rat(-1));
        let mut at1 = AlgebraElement::zero();
        at1.add_term(path(&q, &["a", "a*"]), rat(1));
        at1.add_term(path(&q, &["b", "b*"]), rat(1));
        assert_eq!(rels.relations(), &[at0, at1]);
    }

    #[test]
    fn unpaired_arrow_rejected() {
        let q = Quiver::new(
            vec![
                crate::quiver::Vertex {
                    name: "1".into(),
                    tag: VertexTag::K,
                },
                crate::quiver::Vertex {
                    name: "2".into(),
                    tag: VertexTag::K,
                },
            ],
            vec![Arrow {
                name: "x".into(),
                source: VertexId(0),
                target: VertexId(1),
                weight: 1,
            }],
        )
        .unwrap();
        assert!(matches!(
            preprojective_relations(&q),
            Err(Error::UnpairedArrow(_))
        ));
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let q = build_doubled_dynkin(DynkinType::A, 2).unwrap();
        let mut r = AlgebraElement::from_path(path(&q, &["a"]));
        r.add_term(path(&q, &["a*"]), rat(1));
        assert!(matches!(
            RelationSet::new(&q, vec![r]),
            Err(Error::Inhomogeneous(_))
        ));
        let mut r = AlgebraElement::from_path(path(&q, &["a"]));
        r.add_term(path(&q, &["a", "a*", "a"]), rat(1));
        assert!(RelationSet::new(&q, vec![r]).is_err());
    }

    #[test]
    fn basis_of_small_preprojective_algebras() {
        let (q, r) = pi(DynkinType::A, 1);
        let b = graded_basis(&q, &r, 5).unwrap();
        assert_eq!((b.dims(), b.lambda(), b.total_dim()), (vec![1], Some(0), 1));

        let (q, r) = pi(DynkinType::A, 2);
        let b = graded_basis(&q, &r, 5).unwrap();
        assert_eq!(
            (b.dims(), b.lambda(), b.total_dim()),
            (vec![2, 2], Some(1), 4)
        );
        assert_eq!(b.dim(2).unwrap(), 0);
        assert_eq!(b.dim(40).unwrap(), 0);
        assert_eq!(b.basis(0).unwrap().len(), 2);
        assert!(b.basis(0).unwrap().iter().all(Path::is_empty));
    }

    #[test]
    fn free_path_algebra_of_doubled_a2() {
        let q = build_doubled_dynkin(DynkinType::A, 2).unwrap();
        let b = graded_basis(&q, &RelationSet::empty(), 6).unwrap();
        assert_eq!(b.dims(), vec![2; 7]);
        assert!(!b.is_finite());
        assert!(b.dim(7).is_err());
    }

    #[test]
    fn normal_forms() {
        let (q, r) = pi(DynkinType::A, 2);
        let b = graded_basis(&q, &r, 4).unwrap();
        let nf = b
            .normal_form(&AlgebraElement::from_path(path(&q, &["a*", "a"])))
            .unwrap();
        assert!(nf.is_zero());

        let e1 = Path::idempotent(q.vertex_by_name("1").unwrap());
        let nf = b.normal_form(&AlgebraElement::from_path(e1)).unwrap();
        assert_eq!(nf.degree(0).unwrap(), &[rat(1), rat(0)]);

        let a = path(&q, &["a"]);
        let three_a =
            AlgebraElement::from_path(a.clone()).add(&AlgebraElement::term(rat(2), a.clone()));
        let nf3 = b.normal_form(&three_a).unwrap();
        let nf1 = b.normal_form(&AlgebraElement::from_path(a)).unwrap();
        let scaled: Vec<Rational> = nf1.degree(1).unwrap().iter().map(|x| x * rat(3)).collect();
        assert_eq!(nf3.degree(1).unwrap(), scaled.as_slice());
    }

    #[test]
    fn normal_form_is_idempotent_on_basis() {
        let (q, r) = pi(DynkinType::D, 4);
        let b = graded_basis(&q, &r, 10).unwrap();
        for d in 0..=b.top_degree() {
            for (j, p) in b.basis(d).unwrap().iter().enumerate() {
                let c = b.class_of_path(p).unwrap();
                assert_eq!(c, Class::unit(d, b.dim(d).unwrap(), j));
            }
        }
    }

    #[test]
    fn normal_form_beyond_cutoff_errors() {
        let q = build_doubled_affine_dynkin(DynkinType::A, 1).unwrap();
        let r = preprojective_relations(&q).unwrap();
        let b = graded_basis(&q, &r, 2).unwrap();
        let long = AlgebraElement::from_path(path(&q, &["a", "a*", "a"]));
        assert!(matches!(
            b.normal_form(&long),
            Err(Error::BeyondCutoff { .. })
        ));
    }

    #[test]
    fn free_multiplication() {
        let q = build_doubled_dynkin(DynkinType::A, 2).unwrap();
        let a = AlgebraElement::from_path(path(&q, &["a"]));
        let astar = AlgebraElement::from_path(path(&q, &["a*"]));
        let e1 = AlgebraElement::from_path(Path::idempotent(q.vertex_by_name("1").unwrap()));
        let e2 = AlgebraElement::from_path(Path::idempotent(q.vertex_by_name("2").unwrap()));
        assert_eq!(multiply(&e2, &a), a);
        assert!(multiply(&e1, &a).is_zero());
        assert_eq!(
            multiply(&astar, &a),
            AlgebraElement::from_path(path(&q, &["a*", "a"]))
        );
    }

    #[test]
    fn cocenter_finite_types() {
        for (ty, n) in [(DynkinType::A, 1), (DynkinType::A, 2), (DynkinType::D, 4)] {
            let (q, r) = pi(ty, n);
            let b = graded_basis(&q, &r, 12).unwrap();
            let c = cocenter(&b).unwrap();
            assert_eq!(c.degree_dims[0], n);
            assert!(
                c.degree_dims[1..].iter().all(|&x| x == 0),
                "{ty:?}{n}: {:?}",
                c.degree_dims
            );
            assert!(!c.truncated);
        }
    }

    #[test]
    fn off_diagonal_paths_are_commutators() {
        let q = build_doubled_affine_dynkin(DynkinType::A, 2).unwrap();
        let r = preprojective_relations(&q).unwrap();
        let b = graded_basis(&q, &r, 4).unwrap();
        let c = cocenter(&b).unwrap();
        assert!(c.truncated);
        for d in 0..=4 {
            for p in b.basis(d).unwrap() {
                if p.source() != p.target() {
                    assert!(c.in_commutator(&b.class_of_path(p).unwrap()));
                }
            }
        }
    }

    #[test]
    fn deleting_vertices_restricts_relations() {
        let q = build_doubled_affine_dynkin(DynkinType::D, 4).unwrap();
        let r = preprojective_relations(&q).unwrap();
        let zero = q.vertex_by_name("0").unwrap();
        let (qk, rk) = delete(&q, &r, &[zero], &[]).unwrap();
        let (qd, rd) = pi(DynkinType::D, 4);
        assert_eq!(qk.num_arrows(), qd.num_arrows());
        let bk = graded_basis(&qk, &rk, 12).unwrap();
        let bd = graded_basis(&qd, &rd, 12).unwrap();
        assert_eq!(bk.dims(), bd.dims());
    }
}
