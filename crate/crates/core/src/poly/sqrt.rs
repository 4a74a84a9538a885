use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{rat, Coeff, Monomial, Polynomial, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqrtOutcome {
    /// `root² = p`, with positive leading coefficient.
    Root(Polynomial),
    /// Variable `var` occurs in `p` with odd degree `degree`, so `p` is not
    /// a square.
    OddDegree { var: usize, degree: u32 },
    /// Coefficient matching failed.
    NotSquare,
}

pub fn square_root(p: &Polynomial) -> Option<Polynomial> {
    match square_root_detailed(p) {
        SqrtOutcome::Root(q) => Some(q),
        _ => None,
    }
}

fn rational_sqrt(c: &Coeff) -> Option<Coeff> {
    if c.is_negative() {
        return None;
    }
    let int_sqrt = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(BigRational::new(int_sqrt(c.numer())?, int_sqrt(c.denom())?))
}

pub fn square_root_detailed(p: &Polynomial) -> SqrtOutcome {
    if p.is_zero() {
        return SqrtOutcome::Root(p.clone());
    }
    let n = p.vars().len();
    let var_bounds: Vec<u32> = (0..n).map(|i| p.degree_in(i)).collect();
    if let Some((var, &degree)) = var_bounds.iter().enumerate().find(|(_, d)| *d % 2 == 1) {
        return SqrtOutcome::OddDegree { var, degree };
    }
    let half_bounds: Vec<u32> = var_bounds.iter().map(|d| d / 2).collect();
    let half_total = p.total_degree().unwrap_or(0) / 2;
    let within_bounds = |m: &Monomial| {
        m.degree() <= half_total && m.0.iter().zip(&half_bounds).all(|(e, b)| e <= b)
    };

    let lt = p.leading_term().unwrap();
    if lt.monomial.0.iter().any(|e| e % 2 == 1) {
        return SqrtOutcome::NotSquare;
    }
    let Some(c) = rational_sqrt(&lt.coeff) else {
        return SqrtOutcome::NotSquare;
    };
    let lead = Term {
        monomial: Monomial(lt.monomial.0.iter().map(|e| e / 2).collect()),
        coeff: c,
    };
    let two_lead = &lead.coeff * rat(2);
    let mut root_terms = vec![(lead.monomial.clone(), lead.coeff.clone())];
    let mut q = Polynomial::from_terms_ordered(p.vars(), p.order(), root_terms.clone());
    let mut r = p - &(&q * &q);
    // Each step cancels the leading term of r, so the leading monomials
    // of the new root terms strictly decrease; the bounds make it finite.
    while let Some(t) = r.leading_term() {
        if !lead.monomial.divides(&t.monomial) {
            return SqrtOutcome::NotSquare;
        }
        let m = t.monomial.div(&lead.monomial);
        if !within_bounds(&m) || p.order().cmp(&m, &lead.monomial).is_ge() {
            return SqrtOutcome::NotSquare;
        }
        let c = &t.coeff / &two_lead;
        if c.is_zero() {
            return SqrtOutcome::NotSquare;
        }
        root_terms.push((m, c));
        q = Polynomial::from_terms_ordered(p.vars(), p.order(), root_terms.clone());
        r = p - &(&q * &q);
    }
    SqrtOutcome::Root(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn vars3() -> Vec<Polynomial> {
        let v = VarSet::indexed("x", 3).unwrap();
        (0..3).map(|i| Polynomial::var_at(&v, i)).collect()
    }

    #[test]
    fn perfect_square() {
        let x = vars3();
        let p = x[0].pow(2) + (&x[0] * &x[1]).scale(&rat(2)) + x[1].pow(2);
        assert_eq!(square_root(&p), Some(&x[0] + &x[1]));
        assert_eq!(
            square_root(&x[0].pow(2).scale(&rat(4))),
            Some(x[0].scale(&rat(2)))
        );
    }

    #[test]
    fn odd_degree_is_rejected_fast() {
        let x = vars3();
        let p = &x[0].pow(2) * &x[2];
        assert_eq!(
            square_root_detailed(&p),
            SqrtOutcome::OddDegree { var: 2, degree: 1 }
        );
    }

    #[test]
    fn even_degrees_but_not_a_square() {
        let x = vars3();
        let one = Polynomial::one(x[0].vars());
        assert_eq!(
            square_root_detailed(&(x[0].pow(2) + &one)),
            SqrtOutcome::NotSquare
        );
        assert_eq!(
            square_root_detailed(&x[0].pow(2).scale(&rat(2))),
            SqrtOutcome::NotSquare
        );
        assert_eq!(
            square_root_detailed(&x[0].pow(2).scale(&rat(-1))),
            SqrtOutcome::NotSquare
        );
    }

    #[test]
    fn negative_root_comes_back_with_positive_lead() {
        let x = vars3();
        let q = &x[1] - &x[0].scale(&rat(3));
        let r = square_root(&q.pow(2)).unwrap();
        assert_eq!(r, -&q);
    }

    #[test]
    fn zero_is_a_square() {
        let x = vars3();
        let z = Polynomial::zero(x[0].vars());
        assert_eq!(square_root(&z), Some(z));
    }
}
