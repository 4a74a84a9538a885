//! Multivariate gcd over Q by recursion on the main variable.
//!
//! The highest-index variable present is taken as main variable. Contents
//! (gcds of the coefficients, which only involve lower variables) are
//! computed recursively, and the primitive parts go through a primitive
//! polynomial remainder sequence.

use num_traits::One;

use super::{Coeff, Monomial, Polynomial};

/// Monic gcd. `gcd(p, 0)` is `p` normalized; `gcd(0, 0)` is 0.
///
/// Panics if `p` and `q` live over different VarSets.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert!(p.vars() == q.vars(), "gcd: VarSet mismatch");
    let order = p.order();
    if p.is_zero() {
        return q.with_order(order).normalize();
    }
    if q.is_zero() {
        return p.normalize();
    }
    gcd_rec(p, &q.with_order(order)).normalize()
}

/// Monic gcd of every entry; zero entries are ignored.
pub fn gcd_all<'a, I>(polys: I) -> Option<Polynomial>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut acc: Option<Polynomial> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.normalize(),
            Some(g) if g.is_one() => return Some(g),
            Some(g) => gcd(&g, p),
        });
    }
    acc
}

/// Monic least common multiple; zero if either argument is zero.
pub fn lcm(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero(p.vars()).with_order(p.order());
    }
    let g = gcd(p, q);
    (p * q)
        .exact_div(&g)
        .expect("gcd divides the product")
        .normalize()
}

// Both arguments nonzero; the result is a gcd up to a rational scalar.
fn gcd_rec(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(p.vars()).with_order(p.order());
    }
    let v = p
        .main_variable()
        .max(q.main_variable())
        .expect("nonconstant");
    if p.degree_in(v) == 0 {
        return gcd_rec(p, &content(q, v));
    }
    if q.degree_in(v) == 0 {
        return gcd_rec(&content(p, v), q);
    }
    let cp = content(p, v);
    let cq = content(q, v);
    let c = gcd_rec(&cp, &cq);
    let pp = p.exact_div(&cp).expect("content divides");
    let qp = q.exact_div(&cq).expect("content divides");
    &c * &primitive_prs(pp, qp, v)
}

/// Gcd of the coefficients of `p` as a polynomial in variable `v`.
fn content(p: &Polynomial, v: usize) -> Polynomial {
    let mut acc: Option<Polynomial> = None;
    for c in p.coefficients_in(v).into_iter().filter(|c| !c.is_zero()) {
        let next = match acc {
            None => c.normalize(),
            Some(g) => gcd_rec(&g, &c).normalize(),
        };
        if next.is_constant() {
            return next;
        }
        acc = Some(next);
    }
    acc.expect("nonzero polynomial has a coefficient")
}

fn primitive_part(p: &Polynomial, v: usize) -> Polynomial {
    p.exact_div(&content(p, v))
        .expect("content divides")
        .normalize()
}

fn leading_coeff_in(p: &Polynomial, v: usize) -> Polynomial {
    p.coefficients_in(v).pop().expect("nonzero")
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let n = b.degree_in(v);
    let lcb = leading_coeff_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= n {
        let dr = r.degree_in(v);
        let lcr = leading_coeff_in(&r, v);
        let mut shift = Monomial::one(r.vars().len());
        shift.0[v] = dr - n;
        let shifted = &lcr * &b.mul_term(&shift, &Coeff::one());
        r = &(&lcb * &r) - &shifted;
    }
    r
}

// Both inputs primitive with respect to `v` and of positive degree in it.
fn primitive_prs(a: Polynomial, b: Polynomial, v: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return b.normalize();
        }
        if r.degree_in(v) == 0 {
            return Polynomial::one(a.vars()).with_order(a.order());
        }
        a = b;
        b = primitive_part(&r, v);
    }
}
