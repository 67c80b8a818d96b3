//! Multivariate polynomials over ℚ with exact coefficients.

mod groebner;
mod text;
mod witness;

pub use groebner::{buchberger, ideal_member, GroebnerBasis, DEFAULT_STEP_BUDGET};
pub use text::{parse_polynomial, parse_polynomial_list};
pub use witness::{is_witness, nilpotent_witness_search, Witness, WitnessSearch, DEFAULT_SEED};

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "degrevlex" | "grevlex" => Some(MonomialOrder::DegRevLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    /// Compare exponent vectors; variable 0 is the largest.
    pub fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// Named variables with a monomial order.
#[derive(Clone, Debug)]
pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(names: Vec<String>, order: MonomialOrder) -> Result<Arc<Ring>> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::NameCollision(n.clone()));
            }
        }
        Ok(Arc::new(Ring {
            names,
            index,
            order,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring {
            names: self.names.clone(),
            index: self.index.clone(),
            order,
        })
    }
}

pub type Monomial = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn monomial_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn monomial_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn monomial_div(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn monomial_degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// A polynomial: terms with nonzero coefficients, strictly decreasing in the ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        let n = ring.nvars();
        Self::from_terms(ring, vec![(vec![0; n], c)])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        let mut m = vec![0; ring.nvars()];
        m[i] = 1;
        Self::monomial(ring, m, Rational::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Collects like terms and sorts; zero coefficients disappear.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "exponent vector length");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.iter().all(|&e| e == 0))
    }

    /// The constant term, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.iter().all(|&e| e == 0) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| monomial_degree(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| monomial_degree(m));
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    /// Indices of variables occurring in some term.
    pub fn variables(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (m, _) in &self.terms {
            out.extend(m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i));
        }
        out
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring,
            "polynomials from different rings"
        );
    }

    fn merge(&self, other: &Polynomial, scale: &Rational, shift: Option<&[u32]>) -> Polynomial {
        self.check_ring(other);
        let order = self.ring.order();
        let shifted: Vec<(Monomial, Rational)> = other
            .terms
            .iter()
            .map(|(m, c)| {
                let m = match shift {
                    Some(s) => monomial_mul(m, s),
                    None => m.clone(),
                };
                (m, c * scale)
            })
            .collect();
        let mut out = Vec::with_capacity(self.terms.len() + shifted.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < shifted.len() {
            match order.cmp(&self.terms[i].0, &shifted[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(shifted[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &shifted[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(shifted.into_iter().skip(j));
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, &Rational::one(), None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, &-Rational::one(), None)
    }

    /// `self + c · m · other`.
    pub fn add_scaled_shifted(&self, other: &Polynomial, c: &Rational, m: &[u32]) -> Polynomial {
        if c.is_zero() {
            return self.clone();
        }
        self.merge(other, c, Some(m))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &[u32], c: &Rational) -> Polynomial {
        Polynomial::zero(&self.ring).add_scaled_shifted(self, c, m)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(monomial_mul(m1, m2))
                    .or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Polynomial::from_terms(&self.ring, acc.into_iter().collect())
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) => self.scale(&(Rational::one() / c)),
            None => self.clone(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        total
    }

    /// Substitute `images[i]` (polynomials in `target`) for variable `i`.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut total = Polynomial::zero(target);
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate().filter(|(_, &e)| e > 0) {
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                t = t.mul(&p);
            }
            total = total.add(&t);
        }
        total
    }

    /// The same polynomial in another ring, mapping variables by name.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for n in self.ring.names() {
            map.push(
                target
                    .var_index(n)
                    .ok_or_else(|| Error::RingMismatch(format!("variable `{n}` missing")))?,
            );
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = vec![0; target.nvars()];
                for (i, &e) in m.iter().enumerate() {
                    out[map[i]] += e;
                }
                (out, c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_polynomial(self, f)
    }
}
