//! The cornered algebra `A_H = e_H A e_H` for `H = F ∪ J`.
//!
//! Generators are found degree by degree: a standard monomial of `e_H A_d e_H`
//! becomes a generator when it is not in the span of products of generators
//! already retained. The search stops at degree `λ + 2`, where `λ` is the top
//! degree of `A/(e_H)`; beyond that the products are checked to span.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{
    delete, graded_basis, AlgebraElement, Class, Coordinates, GradedBasis, RelationSet,
};
use crate::error::{Error, Result};
use crate::linalg::{primitive_integer_vector, Echelon, Matrix, Rational};
use crate::quiver::{Arrow, DimensionVector, Path, Quiver, Vertex, VertexId, VertexTag};

/// Degree bound used when looking for the top degree of `A/(e_H)`.
pub const QUOTIENT_SAFETY_BOUND: usize = 64;

fn partition(q: &Quiver) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let h = q.corner_vertices();
    let k = q.vertices_tagged(&[VertexTag::K]);
    if h.is_empty() {
        return Err(Error::Partition("no F or J vertices, so H is empty".into()));
    }
    if k.is_empty() {
        return Err(Error::Partition("K is empty".into()));
    }
    Ok((h, k))
}

/// Top degree `λ` of `A/(e_H)`.
pub fn quotient_lambda(q: &Quiver, rels: &RelationSet) -> Result<usize> {
    let (h, _) = partition(q)?;
    let (qk, rk) = delete(q, rels, &h, &[])?;
    graded_basis(&qk, &rk, QUOTIENT_SAFETY_BOUND)?
        .lambda()
        .ok_or(Error::NotFiniteDimensional(QUOTIENT_SAFETY_BOUND))
}

fn require_degree(b: &GradedBasis, d: usize) -> Result<()> {
    if !b.is_finite() && b.cutoff() < d {
        return Err(Error::BeyondCutoff {
            degree: d,
            cutoff: b.cutoff(),
        });
    }
    Ok(())
}

/// Standard monomials of degree `d` whose endpoints satisfy the filter.
fn monomials(
    b: &GradedBasis,
    d: usize,
    keep: impl Fn(&Path) -> bool,
) -> Result<Vec<(usize, Path)>> {
    Ok(b.basis(d)?
        .iter()
        .enumerate()
        .filter(|(_, p)| keep(p))
        .map(|(j, p)| (j, p.clone()))
        .collect())
}

#[derive(Clone, Debug)]
pub struct CornerGenerators {
    /// Standard monomials of `A` whose classes generate `A_H`, ordered by degree.
    pub generators: Vec<Path>,
    pub lambda: usize,
    pub minimized: bool,
    /// Products of generators were checked to span `e_H A_d e_H` for `d` up to here.
    pub verified_through: usize,
    quiver: Arc<Quiver>,
}

impl CornerGenerators {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| g.weight(&self.quiver))
            .collect()
    }
}

/// Minimal generators of `A_H`, verified to span through `verify_cutoff`.
pub fn corner_generators(b: &GradedBasis, verify_cutoff: usize) -> Result<CornerGenerators> {
    let q = b.quiver();
    let (h, _) = partition(q)?;
    let lambda = quotient_lambda(q, b.relations())?;
    let search = lambda + 2;
    let top = search.max(verify_cutoff);
    require_degree(b, top)?;
    let in_h = |p: &Path| h.contains(&p.source()) && h.contains(&p.target());

    let mut generators: Vec<Path> = Vec::new();
    // span_rows[d]: classes of products of retained generators in degree d
    let mut span_rows: Vec<Vec<Class>> = Vec::new();
    for d in 0..=top {
        let dim = b.dim(d)?;
        let mut ech = Echelon::new(dim);
        let mut rows = Vec::new();
        if d == 0 {
            for &v in &h {
                let c = b.idempotent_class(v);
                ech.insert(c.coords.clone());
                rows.push(c);
            }
        } else {
            for g in &generators {
                let k = g.weight(q);
                if k > d {
                    continue;
                }
                for w in &span_rows[d - k] {
                    let c = b.apply_path(g, w)?;
                    if ech.insert(c.coords.clone()) {
                        rows.push(c);
                    }
                }
            }
            if d <= search {
                for (j, p) in monomials(b, d, in_h)? {
                    let c = Class::unit(d, dim, j);
                    if ech.insert(c.coords.clone()) {
                        rows.push(c);
                        generators.push(p);
                    }
                }
            }
        }
        if d <= verify_cutoff {
            let expected = monomials(b, d, in_h)?.len();
            if ech.rank() != expected {
                return Err(Error::VerificationFailed(format!(
                    "corner generators span {} of {expected} dimensions in degree {d}",
                    ech.rank()
                )));
            }
        }
        span_rows.push(rows);
    }
    Ok(CornerGenerators {
        generators,
        lambda,
        minimized: true,
        verified_through: verify_cutoff,
        quiver: b.quiver_arc(),
    })
}

/// A quiver with relations presenting `A_H`, with relations complete only
/// through the stated weighted degree.
#[derive(Clone, Debug)]
pub struct CornerPresentation {
    /// Vertex set `H`; one arrow per generator, weighted by its degree.
    pub quiver: Quiver,
    pub relations: RelationSet,
    pub cutoff: usize,
    /// The vertex of `A` underlying each vertex of `quiver`.
    pub vertex_map: Vec<VertexId>,
    /// The generator (a path of `A`) underlying each arrow of `quiver`.
    pub arrow_images: Vec<Path>,
}

impl CornerPresentation {
    pub fn completeness(&self) -> String {
        format!("truncated-at-{}", self.cutoff)
    }

    /// Image in `ℂQ` of an element of `ℂQ_H` under `arrow ↦ generator`.
    pub fn substitute(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (p, c) in x.terms() {
            let mut image = Path::idempotent(self.vertex_map[p.source().0]);
            for &a in p.arrows() {
                image = self.arrow_images[a.0]
                    .compose(&image)
                    .expect("generators compose along a path of Q_H");
            }
            out.add_term(image, c.clone());
        }
        out
    }

    /// Normal form in `A` of the image of `x`.
    pub fn evaluate(&self, b: &GradedBasis, x: &AlgebraElement) -> Result<Coordinates> {
        b.normal_form(&self.substitute(x))
    }
}

fn generator_name(q: &Quiver, g: &Path, taken: &HashSet<String>, n: usize) -> String {
    let names: Vec<&str> = g
        .arrows()
        .iter()
        .rev()
        .map(|&a| q.arrow(a).name.as_str())
        .collect();
    let joined = names.join("_");
    if !joined.is_empty() && !taken.contains(&joined) {
        joined
    } else {
        format!("g{n}")
    }
}

/// Words of `Q_H` in one weighted degree, indexed for concatenation.
struct Words {
    words: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl Words {
    fn new(words: Vec<Path>) -> Self {
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Words { words, index }
    }
}

/// Presentation of `A_H` from its generators, with relations through weighted degree `cutoff`.
///
/// In each degree the kernel of `words ↦ A` is compared with the part of the
/// ideal generated by lower-degree relations; kernel vectors outside it are
/// new relations.
pub fn corner_presentation(
    b: &GradedBasis,
    gens: &CornerGenerators,
    cutoff: usize,
) -> Result<CornerPresentation> {
    if !gens.minimized {
        return Err(Error::Partition(
            "corner generators must be minimized".into(),
        ));
    }
    let q = b.quiver();
    require_degree(b, cutoff)?;
    let h = q.corner_vertices();
    let mut vmap = vec![None; q.num_vertices()];
    let vertices: Vec<Vertex> = h
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            vmap[v.0] = Some(VertexId(i));
            q.vertex(v).clone()
        })
        .collect();
    let mut taken: HashSet<String> = HashSet::new();
    let mut arrows = Vec::new();
    for (n, g) in gens.generators.iter().enumerate() {
        let name = generator_name(q, g, &taken, n);
        taken.insert(name.clone());
        arrows.push(Arrow {
            name,
            source: vmap[g.source().0].expect("generator starts in H"),
            target: vmap[g.target().0].expect("generator ends in H"),
            weight: g.weight(q),
        });
    }
    let qh = Quiver::new(vertices, arrows)?;
    let mut pres = CornerPresentation {
        quiver: qh.clone(),
        relations: RelationSet::empty(),
        cutoff,
        vertex_map: h.clone(),
        arrow_images: gens.generators.clone(),
    };

    let mut words: Vec<Words> = vec![Words::new(qh.vertex_ids().map(Path::idempotent).collect())];
    let mut values: Vec<Vec<Class>> = vec![h.iter().map(|&v| b.idempotent_class(v)).collect()];
    let mut ideal: Vec<Echelon> = vec![Echelon::new(words[0].words.len())];
    let mut relation_list: Vec<(usize, Vec<Rational>)> = Vec::new();
    for d in 1..=cutoff {
        let mut ws = Vec::new();
        let mut vals = Vec::new();
        for x in qh.arrow_ids() {
            let w = qh.arrow(x).weight;
            if w > d {
                continue;
            }
            let px = Path::arrow(&qh, x);
            for (inner, val) in words[d - w].words.iter().zip(&values[d - w]) {
                if let Some(word) = px.compose(inner) {
                    ws.push(word);
                    vals.push(b.apply_path(&gens.generators[x.0], val)?);
                }
            }
        }
        let layer = Words::new(ws);
        let n = layer.words.len();
        let mut ech = Echelon::new(n);
        for x in qh.arrow_ids() {
            let w = qh.arrow(x).weight;
            if w > d {
                continue;
            }
            let px = Path::arrow(&qh, x);
            for row in ideal[d - w].rows() {
                let mut v = vec![Rational::zero(); n];
                for (j, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    if let Some(word) = px.compose(&words[d - w].words[j]) {
                        v[layer.index[&word]] += c;
                    }
                }
                ech.insert(v);
            }
        }
        for (k, r) in &relation_list {
            for v in &words[d - k].words {
                let mut out = vec![Rational::zero(); n];
                for (j, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    if let Some(word) = words[*k].words[j].compose(v) {
                        out[layer.index[&word]] += c;
                    }
                }
                ech.insert(out);
            }
        }
        let dim = b.dim(d)?;
        let mut eval = Matrix::zeros(dim, n);
        for (j, val) in vals.iter().enumerate() {
            for (i, c) in val.nonzero() {
                eval.set(i, j, c.clone());
            }
        }
        for kernel_vector in eval.nullspace() {
            if ech.contains(&kernel_vector) {
                continue;
            }
            let ints: Vec<Rational> = primitive_integer_vector(&kernel_vector)
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            ech.insert(ints.clone());
            let mut rel = AlgebraElement::zero();
            for (j, c) in ints.iter().enumerate() {
                rel.add_term(layer.words[j].clone(), c.clone());
            }
            pres.relations.push(&qh, rel)?;
            relation_list.push((d, ints));
        }
        if n - ech.rank() != eval.rank() {
            return Err(Error::VerificationFailed(format!(
                "presentation dimension mismatch in weighted degree {d}"
            )));
        }
        words.push(layer);
        values.push(vals);
        ideal.push(ech);
    }
    Ok(pres)
}

#[derive(Clone, Debug)]
pub struct BimoduleGenerators {
    /// Idempotents `e_h` followed by paths from `H` into `K`.
    pub generators: Vec<Path>,
    pub lambda: usize,
    pub verified_through: usize,
    corner: Vec<VertexId>,
    num_vertices: usize,
}

impl BimoduleGenerators {
    pub fn r(&self) -> usize {
        self.generators.len()
    }

    pub fn corner(&self) -> &[VertexId] {
        &self.corner
    }
}

/// Generators of `Ae_H` as a right `A_H`-module.
pub fn bimodule_generators(b: &GradedBasis, verify_cutoff: usize) -> Result<BimoduleGenerators> {
    let q = b.quiver();
    let (h, k) = partition(q)?;
    let lambda = quotient_lambda(q, b.relations())?;
    let search = lambda + 1;
    let top = search.max(verify_cutoff);
    require_degree(b, top)?;
    let in_h = |p: &Path| h.contains(&p.source()) && h.contains(&p.target());

    // corner[d]: classes of the standard monomials of e_H A_d e_H
    let mut corner: Vec<Vec<Class>> = Vec::new();
    let mut generators: Vec<Path> = h.iter().map(|&v| Path::idempotent(v)).collect();
    for d in 0..=top {
        let dim = b.dim(d)?;
        corner.push(
            monomials(b, d, in_h)?
                .into_iter()
                .map(|(j, _)| Class::unit(d, dim, j))
                .collect(),
        );
        let mut ech = Echelon::new(dim);
        for m in &generators {
            let km = m.weight(q);
            if km > d {
                continue;
            }
            for c in &corner[d - km] {
                ech.insert(b.apply_path(m, c)?.coords);
            }
        }
        if (1..=search).contains(&d) {
            let from_h_to_k = |p: &Path| h.contains(&p.source()) && k.contains(&p.target());
            for (j, p) in monomials(b, d, from_h_to_k)? {
                if ech.insert(Class::unit(d, dim, j).coords) {
                    generators.push(p);
                }
            }
        }
        if d <= verify_cutoff {
            let expected = monomials(b, d, |p| h.contains(&p.source()))?.len();
            if ech.rank() != expected {
                return Err(Error::VerificationFailed(format!(
                    "bimodule generators span {} of {expected} dimensions in degree {d}",
                    ech.rank()
                )));
            }
        }
    }
    Ok(BimoduleGenerators {
        generators,
        lambda,
        verified_through: verify_cutoff,
        corner: h,
        num_vertices: q.num_vertices(),
    })
}

/// Componentwise bound `v` with `v|_H = v_H` and `v_k = r·Σ v_H` on `K`.
/// `v_H` is indexed like `gens.corner()`.
pub fn sufficient_dimension_bound(
    gens: &BimoduleGenerators,
    v_h: &DimensionVector,
) -> Result<DimensionVector> {
    if v_h.len() != gens.corner.len() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} corner dimensions, got {}",
            gens.corner.len(),
            v_h.len()
        )));
    }
    let bound = gens.r() * v_h.total();
    let mut out = vec![bound; gens.num_vertices];
    for (i, v) in gens.corner.iter().enumerate() {
        out[v.0] = v_h.0[i];
    }
    Ok(DimensionVector(out))
}
