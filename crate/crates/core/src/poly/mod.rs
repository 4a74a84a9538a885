//! Sparse multivariate polynomials over Q in canonical form.
//!
//! A [`Polynomial`] stores its nonzero terms sorted in descending order
//! under its [`MonomialOrder`], so two equal polynomials over the same
//! [`VarSet`] and order always have identical representations.

mod gcd;
mod ratfun;
mod sqrt;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::{gcd, gcd_all, lcm};
pub use ratfun::RationalFunction;
pub use sqrt::{square_root, square_root_detailed, SqrtOutcome};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Shorthand for an integer-valued coefficient.
pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the coefficient `n / d`. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidVarSet("no variables".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidVarSet("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidVarSet(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VarSet(names.into()))
    }

    /// `prefix1, …, prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A new VarSet with one extra variable appended. If `name` is taken,
    /// underscores are appended until it is fresh.
    pub fn with_fresh(&self, name: &str) -> VarSet {
        let mut candidate = name.to_string();
        while self.index_of(&candidate).is_some() {
            candidate.push('_');
        }
        let mut names = self.0.to_vec();
        names.push(candidate);
        VarSet(names.into())
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                // smaller exponent in the last differing variable wins
                for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Exponent vector, one entry per variable of the owning VarSet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees `other.divides(self)`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: Coeff,
}

/// Result of a successful homogeneity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Homogeneous {
    pub degree: u32,
    /// Set for the zero polynomial, which is homogeneous of every degree.
    pub zero: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: VarSet,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            order: MonomialOrder::default(),
            terms: Vec::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Coeff::one())
    }

    pub fn constant(vars: &VarSet, c: Coeff) -> Self {
        Self::from_terms(vars, [(Monomial::one(vars.len()), c)])
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(vars, i))
    }

    pub fn var_at(vars: &VarSet, i: usize) -> Self {
        Self::from_terms(vars, [(Monomial::var(vars.len(), i), Coeff::one())])
    }

    pub fn monomial(vars: &VarSet, exponents: Vec<u32>, c: Coeff) -> Result<Self> {
        if exponents.len() != vars.len() {
            return Err(Error::ArityError {
                expected: vars.len(),
                got: exponents.len(),
            });
        }
        Ok(Self::from_terms(vars, [(Monomial(exponents), c)]))
    }

    /// Builds the canonical form of an arbitrary term list: duplicates are
    /// merged, zero coefficients dropped and terms sorted under grevlex.
    ///
    /// Panics if a monomial has the wrong length.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        Self::from_terms_ordered(vars, MonomialOrder::default(), terms)
    }

    pub fn from_terms_ordered<I>(vars: &VarSet, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "monomial length differs from VarSet");
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { monomial, coeff })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial {
            vars: vars.clone(),
            order,
            terms,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same polynomial with its terms re-sorted under `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial {
            vars: self.vars.clone(),
            order,
            terms,
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [t] if t.monomial.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Highest exponent of variable `i` (0 for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.monomial.0[i])
            .max()
            .unwrap_or(0)
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarSetMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let order = self.order;
        let other_terms;
        let rhs: &[Term] = if other.order == order {
            &other.terms
        } else {
            other_terms = other.with_order(order).terms;
            &other_terms
        };
        let mut out = Vec::with_capacity(self.terms.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.len() {
            let a = &self.terms[i];
            let b = &rhs[j];
            match order.cmp(&a.monomial, &b.monomial) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if negate_other {
                        -&b.coeff
                    } else {
                        b.coeff.clone()
                    };
                    out.push(Term {
                        monomial: b.monomial.clone(),
                        coeff,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            monomial: a.monomial.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(rhs[j..].iter().map(|b| Term {
            monomial: b.monomial.clone(),
            coeff: if negate_other {
                -&b.coeff
            } else {
                b.coeff.clone()
            },
        }));
        Polynomial {
            vars: self.vars.clone(),
            order,
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.vars).with_order(self.order));
        }
        // integer numerators over a common denominator, so the inner loop
        // never normalizes a fraction
        let (na, da) = self.integer_numerators();
        let (nb, db) = other.integer_numerators();
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in self.terms.iter().zip(&na) {
            for (b, y) in other.terms.iter().zip(&nb) {
                *acc.entry(a.monomial.mul(&b.monomial))
                    .or_insert_with(BigInt::zero) += x * y;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .map(|(m, n)| (m, Coeff::new(n, den.clone())));
        Ok(Polynomial::from_terms_ordered(
            &self.vars, self.order, terms,
        ))
    }

    fn integer_numerators(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.terms.iter().fold(BigInt::one(), |l, t| {
            num_integer::Integer::lcm(&l, t.coeff.denom())
        });
        let nums = self
            .terms
            .iter()
            .map(|t| t.coeff.numer() * (&den / t.coeff.denom()))
            .collect();
        (nums, den)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars).with_order(self.order);
        }
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// `c · m · self`. Monomial orders are multiplicative, so no re-sort.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars).with_order(self.order);
        }
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.mul(m),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.vars).with_order(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Monic associate (leading coefficient 1); zero stays zero.
    pub fn normalize(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.vars.len() {
            return Err(Error::ArityError {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut total = Coeff::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(&t.monomial.0) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Composition: replaces variable `i` by `images[i]`. The result lives
    /// over the images' common VarSet.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.vars.len() {
            return Err(Error::ArityError {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target = images[0].vars.clone();
        if images.iter().any(|p| p.vars != target) {
            return Err(Error::VarSetMismatch);
        }
        let order = images[0].order;
        // powers[i][e] = images[i]^e, filled lazily
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| {
                vec![
                    Polynomial::one(&target).with_order(order),
                    p.with_order(order),
                ]
            })
            .collect();
        let mut result = Polynomial::zero(&target).with_order(order);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone()).with_order(order);
            for (i, &e) in t.monomial.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e];
            }
            result = &result + &prod;
        }
        Ok(result)
    }

    /// Reinterprets the polynomial over a VarSet that contains every
    /// variable of `self` (by name), e.g. after appending a variable.
    pub fn embed(&self, target: &VarSet) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::UnknownVariable(n.clone()))
            })
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|t| {
            let mut e = vec![0; target.len()];
            for (i, &x) in t.monomial.0.iter().enumerate() {
                e[map[i]] = x;
            }
            (Monomial(e), t.coeff.clone())
        });
        Ok(Polynomial::from_terms_ordered(target, self.order, terms))
    }

    pub fn is_homogeneous(&self) -> Option<Homogeneous> {
        let mut degrees = self.terms.iter().map(|t| t.monomial.degree());
        match degrees.next() {
            None => Some(Homogeneous {
                degree: 0,
                zero: true,
            }),
            Some(d) => degrees.all(|e| e == d).then_some(Homogeneous {
                degree: d,
                zero: false,
            }),
        }
    }

    pub fn derivative(&self, var: &str) -> Result<Polynomial> {
        let i = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.derivative_at(i))
    }

    pub fn derivative_at(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|t| t.monomial.0[i] > 0).map(|t| {
            let e = t.monomial.0[i];
            let mut m = t.monomial.clone();
            m.0[i] -= 1;
            (m, &t.coeff * rat(e as i64))
        });
        Polynomial::from_terms_ordered(&self.vars, self.order, terms)
    }

    /// Division by a single polynomial: `self = q·d + r` with no term of
    /// `r` divisible by the leading monomial of `d`. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let d = d.with_order(self.order);
        let lt = d.leading_term().unwrap().clone();
        let mut p = self.clone();
        let mut q_terms = Vec::new();
        let mut r_terms = Vec::new();
        while let Some(t) = p.terms.first().cloned() {
            if lt.monomial.divides(&t.monomial) {
                let m = t.monomial.div(&lt.monomial);
                let c = &t.coeff / &lt.coeff;
                p = p.sub_mul_term(&d, &m, &c);
                q_terms.push((m, c));
            } else {
                r_terms.push(t);
                p.terms.remove(0);
            }
        }
        let q = Polynomial::from_terms_ordered(&self.vars, self.order, q_terms);
        let r = Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: r_terms,
        };
        (q, r)
    }

    /// `self / d` when the division is exact, `None` otherwise.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// `self − c·m·g`, computed by a single merge.
    pub fn sub_mul_term(&self, g: &Polynomial, m: &Monomial, c: &Coeff) -> Polynomial {
        self.merge(&g.with_order(self.order).mul_term(m, c), true)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in variable
    /// `i`: entry `k` holds the coefficient of `x_i^k`, as a polynomial over
    /// the same VarSet with no occurrence of `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(i) as usize;
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); deg + 1];
        for t in &self.terms {
            let mut m = t.monomial.clone();
            let k = m.0[i] as usize;
            m.0[i] = 0;
            buckets[k].push((m, t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms_ordered(&self.vars, self.order, b))
            .collect()
    }

    /// Highest-index variable that actually occurs.
    pub fn main_variable(&self) -> Option<usize> {
        (0..self.vars.len()).rev().find(|&i| self.degree_in(i) > 0)
    }

    /// Sum of `x_i · ∂p/∂x_i`.
    pub fn euler_operator(&self) -> Polynomial {
        let mut acc = Polynomial::zero(&self.vars).with_order(self.order);
        for i in 0..self.vars.len() {
            let xi = Polynomial::var_at(&self.vars, i);
            acc = &acc + &(&xi * &self.derivative_at(i));
        }
        acc
    }
}

fn write_coeff_abs(f: &mut fmt::Formatter<'_>, c: &Coeff) -> fmt::Result {
    let c = c.abs();
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form, e.g. `3/2*x1^2*x2 - x3 + 1`. Re-parses to the
/// same polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = t.coeff.abs().is_one();
            let mut first = true;
            if !unit || t.monomial.is_one() {
                write_coeff_abs(f, &t.coeff)?;
                first = false;
            }
            for (i, &e) in t.monomial.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live over different VarSets.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial VarSet mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, try_add);
impl_binop!(Sub, sub, try_sub);
impl_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (VarSet, Polynomial, Polynomial) {
        let v = VarSet::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&v, "x").unwrap();
        let y = Polynomial::var(&v, "y").unwrap();
        (v, x, y)
    }

    #[test]
    fn cancellation() {
        let (v, x, _) = xy();
        let one = Polynomial::one(&v);
        assert_eq!(&(&x + &one) + &(&x - &one), x.scale(&rat(2)));
    }

    #[test]
    fn difference_of_squares() {
        let (_, x, y) = xy();
        assert_eq!((&x + &y) * (&x - &y), x.pow(2) - y.pow(2));
    }

    #[test]
    fn scalar_arithmetic() {
        let (_, x, y) = xy();
        let p = &x.pow(2) * &y + x.scale(&frac(1, 2));
        assert_eq!(
            p.scale(&rat(2)),
            x.pow(2) * &y * Polynomial::constant(x.vars(), rat(2)) + &x
        );
        assert_eq!(p.scale(&rat(2)).to_string(), "2*x^2*y + x");
    }

    #[test]
    fn mismatched_varsets_are_rejected() {
        let (_, x, _) = xy();
        let w = VarSet::new(["x", "z"]).unwrap();
        let x2 = Polynomial::var(&w, "x").unwrap();
        assert!(matches!(x.try_add(&x2), Err(Error::VarSetMismatch)));
        assert!(matches!(x.try_mul(&x2), Err(Error::VarSetMismatch)));
    }

    #[test]
    fn varset_validation() {
        assert!(VarSet::new(Vec::<String>::new()).is_err());
        assert!(VarSet::new(["a", "a"]).is_err());
        let v = VarSet::new(["z"]).unwrap();
        assert_eq!(
            v.with_fresh("z").names(),
            &["z".to_string(), "z_".to_string()]
        );
    }

    #[test]
    fn grevlex_ordering() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2 > x > y > 1 for x > y
        let ms = [[2, 0], [1, 1], [0, 2], [1, 0], [0, 1], [0, 0]];
        for w in ms.windows(2) {
            assert_eq!(
                o.cmp(&Monomial(w[0].to_vec()), &Monomial(w[1].to_vec())),
                Ordering::Greater
            );
        }
        // grevlex vs lex differ on x*z^? : x y^2... use three vars: x z vs y^2
        let a = Monomial(vec![1, 0, 1]);
        let b = Monomial(vec![0, 2, 0]);
        assert_eq!(o.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn evaluate_examples() {
        let v = VarSet::indexed("x", 2).unwrap();
        let p = Polynomial::var_at(&v, 0).pow(2) + Polynomial::var_at(&v, 1);
        assert_eq!(p.evaluate(&[rat(2), rat(3)]).unwrap(), rat(7));
        assert_eq!(
            Polynomial::zero(&v)
                .evaluate(&[rat(5), frac(1, 3)])
                .unwrap(),
            rat(0)
        );
        assert!(matches!(
            p.evaluate(&[rat(1)]),
            Err(Error::ArityError {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn im_quartic_vanishes_at_sample_point() {
        let v = VarSet::indexed("x", 5).unwrap();
        let x: Vec<_> = (0..5).map(|i| Polynomial::var_at(&v, i)).collect();
        let p = x[0].pow(4)
            + x[1].pow(4)
            + x[2].pow(4)
            + x[3].pow(4)
            + &x[0] * &x[4].pow(3)
            + &x[3].pow(3) * &x[4]
            - (&x[1].pow(2) * &x[2].pow(2)).scale(&rat(6));
        assert_eq!(p.num_terms(), 7);
        let pt = [rat(1), rat(0), rat(0), rat(0), rat(-1)];
        assert_eq!(p.evaluate(&pt).unwrap(), rat(0));
        assert_eq!(
            p.is_homogeneous(),
            Some(Homogeneous {
                degree: 4,
                zero: false
            })
        );
    }

    #[test]
    fn substitute_example_one_reduction() {
        // x^3 + x*y with y -> y - x^2 gives x*y
        let (_, x, y) = xy();
        let p = x.pow(3) + &x * &y;
        let images = [x.clone(), &y - &x.pow(2)];
        assert_eq!(p.substitute(&images).unwrap(), &x * &y);
        assert_eq!(p.substitute(&[x.clone(), y.clone()]).unwrap(), p);
    }

    #[test]
    fn substitute_conic_onto_veronese() {
        let zs = VarSet::new(["z1", "z2", "z3"]).unwrap();
        let f = Polynomial::var_at(&zs, 0) * Polynomial::var_at(&zs, 2)
            - Polynomial::var_at(&zs, 1).pow(2);
        let v = VarSet::new(["x", "y", "z"]).unwrap();
        let (x, y, z) = (
            Polynomial::var_at(&v, 0),
            Polynomial::var_at(&v, 1),
            Polynomial::var_at(&v, 2),
        );
        let u = &x * &y + Polynomial::one(&v);
        let images = [&x.pow(2) * &z, &x * &u * &z, &u.pow(2) * &z];
        assert!(f.substitute(&images).unwrap().is_zero());
        assert!(matches!(
            f.substitute(&images[..2]),
            Err(Error::ArityError { .. })
        ));
    }

    #[test]
    fn homogeneity() {
        let (v, x, y) = xy();
        assert_eq!(
            Polynomial::zero(&v).is_homogeneous(),
            Some(Homogeneous {
                degree: 0,
                zero: true
            })
        );
        assert_eq!((x.pow(2) + &y).is_homogeneous(), None);
        let w = VarSet::indexed("x", 4).unwrap();
        let t = Polynomial::var_at(&w, 0) * Polynomial::var_at(&w, 1)
            + Polynomial::var_at(&w, 2).pow(2)
            + Polynomial::var_at(&w, 3).pow(2);
        assert_eq!(t.is_homogeneous().map(|h| h.degree), Some(2));
    }

    #[test]
    fn derivatives() {
        let (v, x, y) = xy();
        let p = &x.pow(2) * &y;
        assert_eq!(p.derivative("x").unwrap(), (&x * &y).scale(&rat(2)));
        assert!(Polynomial::constant(&v, rat(7))
            .derivative("x")
            .unwrap()
            .is_zero());
        assert!(matches!(p.derivative("w"), Err(Error::UnknownVariable(_))));
        // Euler on x^2 y + y^3, degree 3
        let q = &p + &y.pow(3);
        assert_eq!(q.euler_operator(), q.scale(&rat(3)));
    }

    #[test]
    fn division() {
        let (v, x, y) = xy();
        let p = x.pow(2) - y.pow(2);
        let (q, r) = p.div_rem(&(&x + &y));
        assert!(r.is_zero());
        assert_eq!(q, &x - &y);
        assert!(p.exact_div(&(&x + Polynomial::one(&v))).is_none());
    }

    #[test]
    fn display_is_canonical() {
        let (v, x, y) = xy();
        let p = x.pow(2).scale(&frac(3, 2)) - &y + Polynomial::constant(&v, rat(-1));
        assert_eq!(p.to_string(), "3/2*x^2 - y - 1");
        assert_eq!((-&x).to_string(), "-x");
        assert_eq!(Polynomial::zero(&v).to_string(), "0");
    }

    #[test]
    fn lex_order_sorts_differently() {
        let v = VarSet::new(["x", "y", "z"]).unwrap();
        let p = Polynomial::var_at(&v, 0) * Polynomial::var_at(&v, 2)
            + Polynomial::var_at(&v, 1).pow(2);
        assert_eq!(p.to_string(), "y^2 + x*z");
        assert_eq!(p.with_order(MonomialOrder::Lex).to_string(), "x*z + y^2");
        assert_eq!(
            p.with_order(MonomialOrder::Lex)
                .with_order(MonomialOrder::Grevlex),
            p
        );
    }
}
