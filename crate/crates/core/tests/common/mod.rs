#![allow(dead_code)]

use conelift::poly::{frac, rat};
use conelift::{Coeff, Monomial, Polynomial, VarSet};
use proptest::prelude::*;

pub fn vars(n: usize) -> VarSet {
    VarSet::indexed("x", n).unwrap()
}

pub fn coeff() -> impl Strategy<Value = Coeff> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

pub fn nonzero_coeff() -> impl Strategy<Value = Coeff> {
    (prop_oneof![-6i64..=-1, 1i64..=6], 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<Coeff>> {
    prop::collection::vec(coeff(), n)
}

/// Up to `max_terms` terms with each exponent at most `max_exp`.
pub fn poly(v: VarSet, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let n = v.len();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), coeff()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(&v, terms.into_iter().map(|(e, c)| (Monomial(e), c)))
    })
}

pub fn nonzero_poly(
    v: VarSet,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = Polynomial> {
    poly(v, max_terms, max_exp).prop_filter("nonzero", |p| !p.is_zero())
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Nonzero homogeneous polynomial of degree `d`.
pub fn homogeneous(v: VarSet, d: u32) -> impl Strategy<Value = Polynomial> {
    let mons = monomials_of_degree(v.len(), d);
    let k = mons.len();
    prop::collection::vec(coeff(), k)
        .prop_map(move |cs| Polynomial::from_terms(&v, mons.iter().cloned().map(Monomial).zip(cs)))
        .prop_filter("nonzero", |p| !p.is_zero())
}

pub fn p(text: &str, v: &VarSet) -> Polynomial {
    conelift::cli::parse_polynomial(text, v).unwrap()
}

pub fn ints(xs: &[i64]) -> Vec<Coeff> {
    xs.iter().map(|&x| rat(x)).collect()
}
