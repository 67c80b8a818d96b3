//! Bounded search for nilpotent elements of `ℚ[x]/I`.
//!
//! Candidates come in three rounds: standard monomials, then small binomials
//! within a grading class, then seeded random combinations within a class.
//! The grading classes are cosets of the span of `e(t) - e(t')` over pairs of
//! terms of one basis element; a nilpotent element's homogeneous components
//! for this grading are nilpotent, so searching inside classes loses nothing.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroebnerBasis, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::{rat, Echelon, Rational};

/// Seed for the random round, so runs are reproducible.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Debug)]
pub struct WitnessSearch {
    pub max_deg: u32,
    pub max_pow: u32,
    pub seed: u64,
    /// Random combinations tried per grading class.
    pub random_trials: usize,
    /// Total normal-form computations allowed.
    pub budget: usize,
}

impl WitnessSearch {
    pub fn new(max_deg: u32, max_pow: u32) -> Self {
        WitnessSearch {
            max_deg,
            max_pow,
            seed: DEFAULT_SEED,
            random_trials: 16,
            budget: 2_000_000,
        }
    }
}

/// `f ∉ I` with `f^k ∈ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub f: Polynomial,
    pub k: u32,
}

struct Search<'a> {
    gb: &'a GroebnerBasis,
    max_pow: u32,
    used: usize,
    budget: usize,
}

impl Search<'_> {
    fn nf(&mut self, f: &Polynomial) -> Result<Polynomial> {
        self.used += 1;
        if self.used > self.budget {
            return Err(Error::BudgetExhausted(format!(
                "witness search used {} normal forms",
                self.budget
            )));
        }
        Ok(self.gb.normal_form(f))
    }

    /// Smallest `k ≤ max_pow` with `f^k ∈ I`, when `f ∉ I`.
    fn test(&mut self, f: &Polynomial) -> Result<Option<u32>> {
        let base = self.nf(f)?;
        if base.is_zero() {
            return Ok(None);
        }
        let mut p = base.clone();
        for k in 2..=self.max_pow {
            p = self.nf(&p.mul(&base))?;
            if p.is_zero() {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    fn found(&self, f: Polynomial, k: u32) -> Result<Option<Witness>> {
        let gb = self.gb;
        if gb.normal_form(&f).is_zero() || !gb.normal_form(&f.pow(k)).is_zero() {
            return Err(Error::VerificationFailed(format!(
                "candidate witness ({f}, {k}) does not re-verify"
            )));
        }
        Ok(Some(Witness { f, k }))
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in lex-descending order.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Standard monomials of degree `d`, grouped by grading class in first-seen order.
fn classes(gb: &GroebnerBasis, d: u32) -> Vec<Vec<Monomial>> {
    let n = gb.ring().nvars();
    let mut lattice = Echelon::new(n);
    for g in gb.basis() {
        let (lead, _) = &g.terms()[0];
        for (m, _) in &g.terms()[1..] {
            let diff = m
                .iter()
                .zip(lead)
                .map(|(a, b)| rat(*a as i64 - *b as i64))
                .collect();
            lattice.insert(diff);
        }
    }
    let mut index: HashMap<Vec<Rational>, usize> = HashMap::new();
    let mut out: Vec<Vec<Monomial>> = Vec::new();
    for m in monomials_of_degree(n, d) {
        if !gb.is_standard(&m) {
            continue;
        }
        let key = lattice.reduce(&m.iter().map(|&e| rat(e as i64)).collect::<Vec<_>>());
        let slot = *index.entry(key).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[slot].push(m);
    }
    out
}

const PAIR_COEFFICIENTS: [(i64, i64); 6] = [(1, 1), (1, -1), (1, 2), (1, -2), (2, 1), (2, -1)];

/// Look for `f` with `NF(f) ≠ 0` and `NF(f^k) = 0`, `deg f ≤ max_deg`, `k ≤ max_pow`.
///
/// `Ok(None)` means nothing was found within the bounds; running out of the
/// normal-form budget is `BudgetExhausted`. A returned witness has been
/// re-checked by computing `f^k` directly.
pub fn nilpotent_witness_search(
    gb: &GroebnerBasis,
    opts: &WitnessSearch,
) -> Result<Option<Witness>> {
    let ring = gb.ring();
    let mut s = Search {
        gb,
        max_pow: opts.max_pow,
        used: 0,
        budget: opts.budget,
    };
    if gb.is_unit_ideal() || opts.max_pow < 2 {
        return Ok(None);
    }
    let by_degree: Vec<Vec<Vec<Monomial>>> = (1..=opts.max_deg).map(|d| classes(gb, d)).collect();
    let mono = |m: &Monomial, c: i64| Polynomial::monomial(ring, m.clone(), rat(c));

    for cls in &by_degree {
        for m in cls.iter().flatten() {
            let f = mono(m, 1);
            if let Some(k) = s.test(&f)? {
                return s.found(f, k);
            }
        }
    }
    for cls in &by_degree {
        for class in cls {
            for i in 0..class.len() {
                for j in i + 1..class.len() {
                    for &(a, b) in &PAIR_COEFFICIENTS {
                        let f = mono(&class[i], a).add(&mono(&class[j], b));
                        if let Some(k) = s.test(&f)? {
                            return s.found(f, k);
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for cls in &by_degree {
        for class in cls.iter().filter(|c| c.len() > 2) {
            for _ in 0..opts.random_trials {
                let terms: Vec<(Monomial, Rational)> = class
                    .iter()
                    .map(|m| (m.clone(), rat(rng.gen_range(-2..=2))))
                    .collect();
                let f = Polynomial::from_terms(ring, terms);
                if f.is_zero() {
                    continue;
                }
                if let Some(k) = s.test(&f)? {
                    return s.found(f, k);
                }
            }
        }
    }
    Ok(None)
}

/// `f^k` reduces to zero while `f` does not.
pub fn is_witness(gb: &GroebnerBasis, f: &Polynomial, k: u32) -> bool {
    !gb.normal_form(f).is_zero() && gb.normal_form(&f.pow(k)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{buchberger, parse_polynomial, MonomialOrder, Ring, DEFAULT_STEP_BUDGET};
    use std::sync::Arc;

    fn gb(vars: &[&str], gens: &[&str]) -> GroebnerBasis {
        let r: Arc<Ring> = Ring::new(
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let ps: Vec<Polynomial> = gens
            .iter()
            .map(|g| parse_polynomial(&r, g).unwrap())
            .collect();
        buchberger(&r, &ps, DEFAULT_STEP_BUDGET).unwrap()
    }

    #[test]
    fn square_of_variable() {
        let g = gb(&["x"], &["x^2"]);
        let w = nilpotent_witness_search(&g, &WitnessSearch::new(3, 4))
            .unwrap()
            .unwrap();
        assert_eq!((w.f.to_string().as_str(), w.k), ("x", 2));
    }

    #[test]
    fn squarefree_monomial_ideal_is_radical() {
        let g = gb(&["x", "y"], &["x*y"]);
        assert_eq!(
            nilpotent_witness_search(&g, &WitnessSearch::new(4, 5)).unwrap(),
            None
        );
    }

    #[test]
    fn binomial_witness_needs_class_search() {
        // (x - y)^2 ∈ I but no monomial is nilpotent
        let g = gb(&["x", "y"], &["x^2 - 2*x*y + y^2", "x^3 - y^3"]);
        let w = nilpotent_witness_search(&g, &WitnessSearch::new(2, 3))
            .unwrap()
            .unwrap();
        assert!(is_witness(&g, &w.f, w.k));
        assert!(w.f.num_terms() >= 2);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = gb(&["x", "y"], &["x*y"]);
        let opts = WitnessSearch {
            budget: 3,
            ..WitnessSearch::new(4, 5)
        };
        assert!(nilpotent_witness_search(&g, &opts).unwrap_err().is_budget());
    }

    #[test]
    fn deterministic() {
        let g = gb(&["x", "y", "z"], &["x*y - z^2", "x^2*z"]);
        let a = nilpotent_witness_search(&g, &WitnessSearch::new(3, 3)).unwrap();
        let b = nilpotent_witness_search(&g, &WitnessSearch::new(3, 3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(2, 0), vec![vec![0, 0]]);
        assert_eq!(monomials_of_degree(1, 3), vec![vec![3]]);
    }
}
