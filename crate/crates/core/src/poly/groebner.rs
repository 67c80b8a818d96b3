use std::collections::HashSet;
use std::sync::Arc;

use num_traits::One;

use super::{
    divides, monomial_degree, monomial_div, monomial_lcm, monomial_mul, Monomial, Polynomial, Ring,
};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// S-pair reductions allowed before giving up.
pub const DEFAULT_STEP_BUDGET: usize = 200_000;

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero basis element"))
    }

    /// Whether `m` is a standard monomial (divisible by no leading monomial).
    pub fn is_standard(&self, m: &[u32]) -> bool {
        !self.leading_monomials().any(|l| divides(l, m))
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert!(**f.ring() == *self.ring, "polynomial from a different ring");
        reduce(f, &self.basis)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Full reduction of `f` by `divisors` (each with a leading monomial).
fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = p.terms.first().cloned() {
        match divisors
            .iter()
            .find(|g| divides(g.leading_monomial().expect("nonzero"), &m))
        {
            Some(g) => {
                let shift = monomial_div(&m, g.leading_monomial().expect("nonzero"));
                let coef = -(c / g.leading_coefficient().expect("nonzero"));
                p = p.add_scaled_shifted(g, &coef, &shift);
            }
            None => remainder.push(p.terms.remove(0)),
        }
    }
    Polynomial {
        ring: Arc::clone(f.ring()),
        terms: remainder,
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let l = monomial_lcm(lf, lg);
    let a = f.mul_monomial(
        &monomial_div(&l, lf),
        &(Rational::one() / f.leading_coefficient().expect("nonzero")),
    );
    let b = g.mul_monomial(
        &monomial_div(&l, lg),
        &(Rational::one() / g.leading_coefficient().expect("nonzero")),
    );
    a.sub(&b)
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`'s order.
///
/// Pairs are processed smallest lcm first; pairs with coprime leading
/// monomials and pairs covered by the chain criterion are skipped. More than
/// `budget` S-pair reductions gives `BudgetExhausted`.
pub fn buchberger(ring: &Arc<Ring>, gens: &[Polynomial], budget: usize) -> Result<GroebnerBasis> {
    for g in gens {
        if **g.ring() != **ring {
            return Err(Error::RingMismatch(format!(
                "generator `{g}` is not over the given ring"
            )));
        }
    }
    let order = ring.order();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut queued: HashSet<(usize, usize)> = HashSet::new();
    fn add(
        basis: &mut Vec<Polynomial>,
        pairs: &mut Vec<(usize, usize)>,
        queued: &mut HashSet<(usize, usize)>,
        p: Polynomial,
    ) {
        let n = basis.len();
        basis.push(p.monic());
        for i in 0..n {
            pairs.push((i, n));
            queued.insert((i, n));
        }
    }
    for g in gens {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, &mut queued, r);
        }
    }
    let lcm_of = |basis: &[Polynomial], (i, j): (usize, usize)| {
        monomial_lcm(
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        )
    };
    let mut steps = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = lcm_of(&basis, pairs[a]);
                let lb = lcm_of(&basis, pairs[b]);
                monomial_degree(&la)
                    .cmp(&monomial_degree(&lb))
                    .then_with(|| order.cmp(&la, &lb))
                    .then_with(|| pairs[a].cmp(&pairs[b]))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);
        queued.remove(&(i, j));
        let li = basis[i].leading_monomial().expect("nonzero").clone();
        let lj = basis[j].leading_monomial().expect("nonzero").clone();
        let l = monomial_lcm(&li, &lj);
        if monomial_mul(&li, &lj) == l {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].leading_monomial().expect("nonzero"), &l)
                && !queued.contains(&key(i, k))
                && !queued.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExhausted(format!(
                "Gröbner basis not finished after {budget} S-pair reductions"
            )));
        }
        let s = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !s.is_zero() {
            add(&mut basis, &mut pairs, &mut queued, s);
        }
    }
    Ok(GroebnerBasis {
        ring: Arc::clone(ring),
        basis: interreduce(basis),
    })
}

fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().expect("nonzero");
            k != i && divides(lh, lg) && (lh != lg || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, h)| h.clone())
                .collect();
            reduce(&minimal[i], &others).monic()
        })
        .collect();
    if let Some(first) = out.first() {
        let order = first.ring().order();
        out.sort_by(|a, b| {
            order.cmp(
                a.leading_monomial().expect("nonzero"),
                b.leading_monomial().expect("nonzero"),
            )
        });
    }
    out
}

/// Membership test with the normal form as certificate.
pub fn ideal_member(f: &Polynomial, gb: &GroebnerBasis) -> (bool, Polynomial) {
    let nf = gb.normal_form(f);
    (nf.is_zero(), nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::poly::{parse_polynomial, MonomialOrder};
    use proptest::prelude::*;

    fn setup(vars: &[&str], order: MonomialOrder, gens: &[&str]) -> (Arc<Ring>, GroebnerBasis) {
        let r = Ring::new(vars.iter().map(|s| s.to_string()).collect(), order).unwrap();
        let ps: Vec<Polynomial> = gens
            .iter()
            .map(|g| parse_polynomial(&r, g).unwrap())
            .collect();
        let gb = buchberger(&r, &ps, DEFAULT_STEP_BUDGET).unwrap();
        (r, gb)
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    /// Oracle for S-pair closure: every S-polynomial reduces to zero.
    fn is_groebner(gb: &GroebnerBasis) -> bool {
        let b = gb.basis();
        (0..b.len())
            .all(|i| (i + 1..b.len()).all(|j| reduce(&s_polynomial(&b[i], &b[j]), b).is_zero()))
    }

    #[test]
    fn single_monomial_and_zero_ideal() {
        let (r, gb) = setup(&["x", "y"], MonomialOrder::DegRevLex, &["x*y"]);
        assert_eq!(gb.basis(), &[p(&r, "x*y")]);
        let (_, gb) = setup(&["x", "y"], MonomialOrder::DegRevLex, &[]);
        assert!(gb.is_empty());
        let (r, gb) = setup(&["x"], MonomialOrder::DegRevLex, &["0", "2*x"]);
        assert_eq!(gb.basis(), &[p(&r, "x")]);
    }

    #[test]
    fn membership() {
        let (r, gb) = setup(
            &["x", "y"],
            MonomialOrder::DegRevLex,
            &["x^2 - y", "y^2 - x"],
        );
        assert!(is_groebner(&gb));
        assert!(ideal_member(&p(&r, "x^4 - x"), &gb).0);
        assert!(!ideal_member(&p(&r, "x"), &gb).0);

        let (r, gb) = setup(&["x", "y"], MonomialOrder::DegRevLex, &["x*y"]);
        let (member, nf) = ideal_member(&Polynomial::one(&r), &gb);
        assert!(!member);
        assert_eq!(nf, Polynomial::one(&r));
        assert!(ideal_member(&p(&r, "x^2*y^2"), &gb).0);
        assert!(ideal_member(&p(&r, "x*y"), &gb).0);
    }

    #[test]
    fn unit_ideal() {
        let (r, gb) = setup(&["x", "y"], MonomialOrder::Lex, &["x*y - 1", "x"]);
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.basis(), &[Polynomial::one(&r)]);
    }

    #[test]
    fn twisted_cubic_lex() {
        let (r, gb) = setup(
            &["x", "y", "z"],
            MonomialOrder::Lex,
            &["x^2 - y", "x^3 - z"],
        );
        assert!(is_groebner(&gb));
        assert!(gb.contains(&p(&r, "y^3 - z^2")));
        for g in gb.basis() {
            assert_eq!(g.leading_coefficient(), Some(&rat(1)));
        }
    }

    #[test]
    fn budget_is_reported() {
        let r = Ring::new(vec!["x".into(), "y".into(), "z".into()], MonomialOrder::Lex).unwrap();
        let gens = vec![p(&r, "x^3 - y*z"), p(&r, "y^3 - x*z"), p(&r, "z^3 - x*y")];
        assert!(buchberger(&r, &gens, 0).unwrap_err().is_budget());
    }

    #[test]
    fn ring_mismatch() {
        let r = Ring::new(vec!["x".into()], MonomialOrder::Lex).unwrap();
        let s = Ring::new(vec!["y".into()], MonomialOrder::Lex).unwrap();
        let g = Polynomial::var(&s, 0);
        assert!(matches!(
            buchberger(&r, &[g], 10),
            Err(Error::RingMismatch(_))
        ));
    }

    fn small_poly(r: &Arc<Ring>) -> impl Strategy<Value = Polynomial> {
        let r = Arc::clone(r);
        proptest::collection::vec((-3i64..4, proptest::collection::vec(0u32..3, 3)), 0..4).prop_map(
            move |ts| {
                Polynomial::from_terms(&r, ts.into_iter().map(|(c, m)| (m, rat(c))).collect())
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn normal_form_is_linear_and_multiplicative(
            (f, g, a, b) in {
                let r = Ring::new(vec!["x".into(), "y".into(), "z".into()], MonomialOrder::DegRevLex).unwrap();
                (small_poly(&r), small_poly(&r), -3i64..4, -3i64..4)
            }
        ) {
            let r = Arc::clone(f.ring());
            let gens = vec![p(&r, "x^2 - y*z"), p(&r, "x*y - z^2"), p(&r, "y^2 - x*z")];
            let gb = buchberger(&r, &gens, DEFAULT_STEP_BUDGET).unwrap();
            prop_assert!(is_groebner(&gb));
            let lhs = gb.normal_form(&f.scale(&rat(a)).add(&g.scale(&rat(b))));
            let rhs = gb.normal_form(&f).scale(&rat(a)).add(&gb.normal_form(&g).scale(&rat(b)));
            prop_assert_eq!(lhs, rhs);
            let prod = gb.normal_form(&f.mul(&g));
            let via_nf = gb.normal_form(&gb.normal_form(&f).mul(&gb.normal_form(&g)));
            prop_assert_eq!(prod, via_nf);
        }

        #[test]
        fn basis_is_independent_of_generator_order(seed in 0usize..6) {
            let r = Ring::new(vec!["x".into(), "y".into(), "z".into()], MonomialOrder::DegRevLex).unwrap();
            let mut gens = vec![p(&r, "x^2 - y*z"), p(&r, "x*y - z^2"), p(&r, "y^2 - x*z"), p(&r, "x*z + y")];
            let n = gens.len();
            gens.rotate_left(seed % n);
            if seed >= 3 { gens.reverse(); }
            let gb = buchberger(&r, &gens, DEFAULT_STEP_BUDGET).unwrap();
            let reference = buchberger(&r, &[p(&r, "x^2 - y*z"), p(&r, "x*y - z^2"), p(&r, "y^2 - x*z"), p(&r, "x*z + y")], DEFAULT_STEP_BUDGET).unwrap();
            prop_assert_eq!(gb, reference);
        }
    }
}
