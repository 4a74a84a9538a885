//! Buchberger's algorithm, reduced Gröbner bases and ideal membership.
//!
//! Pairs are processed with the normal strategy (smallest lcm first) and
//! pairs with coprime leading monomials are skipped. Output bases are
//! always interreduced, monic, and sorted by descending leading monomial,
//! so identical inputs give identical bases.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarSet};

/// Default cap on reduction steps used by the CLI.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// True iff the basis is exactly `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.elements)
    }

    /// Checks Buchberger's criterion directly: every S-polynomial of two
    /// elements reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let g = &self.elements;
        (0..g.len())
            .all(|i| (i + 1..g.len()).all(|j| reduce(&s_polynomial(&g[i], &g[j]), g).is_zero()))
    }

    /// Reducedness: monic elements, and no term of any element is divisible
    /// by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        let g = &self.elements;
        g.iter().enumerate().all(|(i, p)| {
            p.leading_coeff().is_some_and(|c| c.is_one())
                && g.iter().enumerate().all(|(j, q)| {
                    i == j
                        || p.terms()
                            .iter()
                            .all(|t| !q.leading_monomial().unwrap().divides(&t.monomial))
                })
        })
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for GroebnerBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroebnerBasis{self}")
    }
}

struct StepCounter {
    budget: u64,
    used: u64,
}

impl StepCounter {
    fn unlimited() -> Self {
        StepCounter {
            budget: u64::MAX,
            used: 0,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::BudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}

fn reduce_counted(
    f: &Polynomial,
    basis: &[Polynomial],
    mut cofactors: Option<&mut Vec<Polynomial>>,
    steps: &mut StepCounter,
) -> Result<Polynomial> {
    let order = f.order();
    let basis: Vec<Polynomial> = basis.iter().map(|g| g.with_order(order)).collect();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        let divisor = basis.iter().enumerate().find(|(_, g)| {
            g.leading_monomial()
                .is_some_and(|m| m.divides(&lt.monomial))
        });
        match divisor {
            Some((k, g)) => {
                steps.tick()?;
                let glt = g.leading_term().unwrap();
                let m = lt.monomial.div(&glt.monomial);
                let c = &lt.coeff / &glt.coeff;
                p = p.sub_mul_term(g, &m, &c);
                if let Some(cf) = cofactors.as_deref_mut() {
                    let q = Polynomial::from_terms_ordered(f.vars(), order, [(m, c)]);
                    cf[k] = &cf[k] + &q;
                }
            }
            None => {
                rem.push((lt.monomial, lt.coeff));
                p = p.tail();
            }
        }
    }
    Ok(Polynomial::from_terms_ordered(f.vars(), order, rem))
}

/// Fully reduces `f` modulo `basis`: the remainder has no term divisible by
/// any leading monomial of `basis`. Zero basis elements are ignored.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    reduce_counted(f, basis, None, &mut StepCounter::unlimited()).expect("unbounded")
}

/// Division with quotients: `f = Σ q_i·basis_i + r`.
pub fn reduce_with_cofactors(
    f: &Polynomial,
    basis: &[Polynomial],
) -> (Vec<Polynomial>, Polynomial) {
    let mut cf = vec![Polynomial::zero(f.vars()).with_order(f.order()); basis.len()];
    let r =
        reduce_counted(f, basis, Some(&mut cf), &mut StepCounter::unlimited()).expect("unbounded");
    (cf, r)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let g = g.with_order(f.order());
    let (Some(ft), Some(gt)) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(f.vars()).with_order(f.order());
    };
    let l = ft.monomial.lcm(&gt.monomial);
    let a = f.mul_term(&l.div(&ft.monomial), &ft.coeff.recip());
    a.sub_mul_term(&g, &l.div(&gt.monomial), &gt.coeff.recip())
}

fn common_vars(gens: &[Polynomial]) -> Result<Option<VarSet>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    if gens.iter().any(|g| g.vars() != first.vars()) {
        return Err(Error::VarSetMismatch);
    }
    Ok(Some(first.vars().clone()))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Panics if the generators live over different VarSets.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
    buchberger_with_budget(gens, order, u64::MAX).expect("unbounded Buchberger run")
}

/// Like [`buchberger`], but fails with `BudgetExceeded` after `budget`
/// reduction steps.
pub fn buchberger_with_budget(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: u64,
) -> Result<GroebnerBasis> {
    common_vars(gens)?;
    let mut steps = StepCounter { budget, used: 0 };
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let g = g.with_order(order).normalize();
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    if basis.iter().any(|g| g.is_constant()) {
        return Ok(unit_basis(&basis[0], order));
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let lcm_of = |basis: &[Polynomial], (i, j): (usize, usize)| -> Monomial {
        basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap())
    };

    while !pairs.is_empty() {
        // normal strategy: smallest lcm under the order, ties by index
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&lcm_of(&basis, pairs[a]), &lcm_of(&basis, pairs[b]))
                    .then_with(|| pairs[a].cmp(&pairs[b]))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (li, lj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if li.is_coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce_counted(&s, &basis, None, &mut steps)?;
        if r.is_zero() {
            continue;
        }
        let r = r.normalize();
        if r.is_constant() {
            return Ok(unit_basis(&r, order));
        }
        let k = basis.len();
        basis.push(r);
        for i in 0..k {
            pairs.push((i, k));
        }
    }

    interreduce(basis, order, &mut steps)
}

fn unit_basis(like: &Polynomial, order: MonomialOrder) -> GroebnerBasis {
    GroebnerBasis {
        elements: vec![Polynomial::one(like.vars()).with_order(order)],
        order,
    }
}

fn interreduce(
    basis: Vec<Polynomial>,
    order: MonomialOrder,
    steps: &mut StepCounter,
) -> Result<GroebnerBasis> {
    // drop elements whose leading monomial is divisible by an earlier-kept or
    // any other element's leading monomial
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lm = p.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            let lq = q.leading_monomial().unwrap();
            j != i && lq.divides(lm) && (lq != lm || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let r = reduce_counted(&minimal[i], &others, None, steps)?;
        reduced.push(r.normalize());
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(GroebnerBasis {
        elements: reduced,
        order,
    })
}

/// Unit-ideal decision with the reduced basis as certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitIdealCertificate {
    pub unit: bool,
    pub basis: GroebnerBasis,
}

pub fn is_unit_ideal(gens: &[Polynomial]) -> UnitIdealCertificate {
    let basis = buchberger(gens, MonomialOrder::default());
    UnitIdealCertificate {
        unit: basis.is_unit(),
        basis,
    }
}

pub fn is_unit_ideal_with_budget(gens: &[Polynomial], budget: u64) -> Result<UnitIdealCertificate> {
    let basis = buchberger_with_budget(gens, MonomialOrder::default(), budget)?;
    Ok(UnitIdealCertificate {
        unit: basis.is_unit(),
        basis,
    })
}

#[derive(Clone, Debug)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    cached_basis: Option<GroebnerBasis>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput(
                "an ideal needs at least one generator".into(),
            ));
        }
        common_vars(&generators)?;
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_order(order))
            .collect();
        Ok(Ideal {
            generators,
            order,
            cached_basis: None,
        })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Computes and stores the reduced basis.
    pub fn with_cached_basis(mut self) -> Self {
        if self.cached_basis.is_none() {
            self.cached_basis = Some(buchberger(&self.generators, self.order));
        }
        self
    }

    pub fn basis(&self) -> GroebnerBasis {
        match &self.cached_basis {
            Some(b) => b.clone(),
            None => buchberger(&self.generators, self.order),
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let f = f.with_order(self.order);
        match &self.cached_basis {
            Some(b) => b.reduce(&f).is_zero(),
            None => self.basis().reduce(&f).is_zero(),
        }
    }
}

/// Exact combination check used by tests: `Σ q_i·g_i`.
pub fn combine(cofactors: &[Polynomial], gens: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(gens[0].vars()).with_order(gens[0].order());
    for (q, g) in cofactors.iter().zip(gens) {
        acc = &acc + &(q * g);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn xy() -> (Polynomial, Polynomial, Polynomial) {
        let v = VarSet::new(["x", "y"]).unwrap();
        (
            Polynomial::var_at(&v, 0),
            Polynomial::var_at(&v, 1),
            Polynomial::one(&v),
        )
    }

    #[test]
    fn reduce_examples() {
        let (x, y, one) = xy();
        assert!(reduce(&(x.pow(2) + &x * &y), std::slice::from_ref(&x)).is_zero());
        assert_eq!(reduce(&(&x + &one), std::slice::from_ref(&x)), one);
        let xy = &x * &y;
        assert_eq!(reduce(&xy, &[x.pow(2), y.pow(2)]), xy);
    }

    #[test]
    fn buchberger_examples() {
        let (x, y, one) = xy();
        let b = buchberger(&[x.clone(), y.clone()], MonomialOrder::Grevlex);
        assert_eq!(b.elements(), &[x.clone(), y.clone()]);
        let u = &x * &y + &one;
        assert!(buchberger(&[x.clone(), u.clone()], MonomialOrder::Grevlex).is_unit());
        let gens = [x.pow(2), &x * &u, u.pow(2)];
        assert!(buchberger(&gens, MonomialOrder::Grevlex).is_unit());
    }

    #[test]
    fn unit_ideal_examples() {
        let (x, y, one) = xy();
        assert!(is_unit_ideal(&[x.clone(), &x * &y + &one]).unit);
        let c = is_unit_ideal(&[x.clone(), y.clone()]);
        assert!(!c.unit);
        assert_eq!(c.basis.elements().len(), 2);
        assert!(is_unit_ideal(&[one]).unit);
    }

    #[test]
    fn membership_examples() {
        let (x, y, one) = xy();
        let i = Ideal::new(vec![x.clone()], MonomialOrder::Grevlex).unwrap();
        assert!(i.contains(&(x.pow(2) + &x * &y)));
        assert!(!i.contains(&(&x + &one)));
        let j = Ideal::new(vec![x.pow(2), y.pow(2)], MonomialOrder::Grevlex)
            .unwrap()
            .with_cached_basis();
        assert!(!j.contains(&(&x * &y)));
    }

    #[test]
    fn budget_is_enforced() {
        let v = VarSet::new(["x", "y", "z"]).unwrap();
        let (x, y, z) = (
            Polynomial::var_at(&v, 0),
            Polynomial::var_at(&v, 1),
            Polynomial::var_at(&v, 2),
        );
        let gens = [
            x.pow(3) - &y * &z,
            y.pow(3) - &x * &z.pow(2),
            z.pow(3) - x.pow(2) * &y + Polynomial::constant(&v, rat(1)),
        ];
        assert!(matches!(
            buchberger_with_budget(&gens, MonomialOrder::Grevlex, 3),
            Err(Error::BudgetExceeded { budget: 3 })
        ));
        let b = buchberger(&gens, MonomialOrder::Grevlex);
        assert!(b.s_pairs_reduce_to_zero());
        assert!(b.is_reduced());
    }

    #[test]
    fn lex_basis_of_twisted_cubic() {
        let v = VarSet::new(["x", "y", "z"]).unwrap();
        let (x, y, z) = (
            Polynomial::var_at(&v, 0),
            Polynomial::var_at(&v, 1),
            Polynomial::var_at(&v, 2),
        );
        let gens = [y.clone() - x.pow(2), z.clone() - x.pow(3)];
        let b = buchberger(&gens, MonomialOrder::Lex);
        assert!(b.s_pairs_reduce_to_zero());
        assert!(b.is_reduced());
        assert_eq!(b.elements().len(), 4);
        assert_eq!(b.to_string(), "{x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}");
    }

    #[test]
    fn cofactors_recombine() {
        let (x, y, one) = xy();
        let f = x.pow(3) * &y + x.pow(2) + &one;
        let basis = [&x * &y - &one, y.pow(2) - &x];
        let (q, r) = reduce_with_cofactors(&f, &basis);
        assert_eq!(&combine(&q, &basis) + &r, f);
    }
}
