//! Polynomial maps through prescribed values on a finite set.
//!
//! A linear form separating the points turns the problem into univariate
//! Lagrange interpolation, one coordinate at a time. Composing the result with
//! a surjection `π: A^m → Y` gives a map into `Y` with prescribed values.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, Polynomial, VarSet};

/// Pairwise-distinct rational points of `A^n`, with coordinate names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    vars: VarSet,
    points: Vec<Vec<Coeff>>,
}

impl PointSet {
    pub fn new(vars: VarSet, points: Vec<Vec<Coeff>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("empty point set".into()));
        }
        for p in &points {
            if p.len() != vars.len() {
                return Err(Error::ArityError {
                    expected: vars.len(),
                    got: p.len(),
                });
            }
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::DuplicatePoints);
            }
        }
        Ok(PointSet { vars, points })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn points(&self) -> &[Vec<Coeff>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Chosen preimages `a_i ∈ A^m`, one per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetAssignment {
    preimages: Vec<Vec<Coeff>>,
}

impl TargetAssignment {
    pub fn new(preimages: Vec<Vec<Coeff>>) -> Result<Self> {
        let m = preimages
            .first()
            .ok_or_else(|| Error::InvalidInput("no preimages".into()))?
            .len();
        if let Some(bad) = preimages.iter().find(|a| a.len() != m) {
            return Err(Error::ArityError {
                expected: m,
                got: bad.len(),
            });
        }
        Ok(TargetAssignment { preimages })
    }

    pub fn preimages(&self) -> &[Vec<Coeff>] {
        &self.preimages
    }

    pub fn arity(&self) -> usize {
        self.preimages[0].len()
    }
}

/// A polynomial map out of `A^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyMap {
    #[serde(skip)]
    pub domain: VarSet,
    pub coords: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(domain: VarSet, coords: Vec<Polynomial>) -> Result<Self> {
        if coords.iter().any(|c| c.vars() != &domain) {
            return Err(Error::VarSetMismatch);
        }
        Ok(PolyMap { domain, coords })
    }

    pub fn identity(domain: VarSet) -> Self {
        let coords = (0..domain.len())
            .map(|i| Polynomial::var_at(&domain, i))
            .collect();
        PolyMap { domain, coords }
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Result<Vec<Coeff>> {
        self.coords.iter().map(|c| c.evaluate(point)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingFunctional {
    pub coefficients: Vec<u64>,
    pub form: Polynomial,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Nonnegative coefficient vectors with max-norm exactly `norm`, ordered by
/// support size, then support (lex), then values (lex).
fn vectors_of_norm(n: usize, norm: u64) -> impl Iterator<Item = Vec<u64>> {
    (1..=n).flat_map(move |size| {
        combinations(n, size).into_iter().flat_map(move |support| {
            let total = (norm as usize).pow(size as u32);
            (0..total).filter_map(move |mut idx| {
                let mut vals = vec![0u64; size];
                for slot in vals.iter_mut().rev() {
                    *slot = (idx % norm as usize) as u64 + 1;
                    idx /= norm as usize;
                }
                if !vals.contains(&norm) {
                    return None;
                }
                let mut v = vec![0u64; n];
                for (&i, &x) in support.iter().zip(&vals) {
                    v[i] = x;
                }
                Some(v)
            })
        })
    })
}

fn linear_value(coeffs: &[u64], point: &[Coeff]) -> Coeff {
    coeffs
        .iter()
        .zip(point)
        .map(|(&c, x)| x * Coeff::from_integer(c.into()))
        .fold(Coeff::zero(), |a, b| a + b)
}

/// First linear form in the enumeration taking distinct values on `z`.
pub fn separating_functional(z: &PointSet) -> SeparatingFunctional {
    let n = z.vars.len();
    for norm in 1.. {
        for coeffs in vectors_of_norm(n, norm) {
            let mut values: Vec<Coeff> =
                z.points.iter().map(|p| linear_value(&coeffs, p)).collect();
            values.sort();
            if values.windows(2).all(|w| w[0] != w[1]) {
                let form = Polynomial::from_terms(
                    &z.vars,
                    coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| (Monomial::var(n, i), Coeff::from_integer(c.into()))),
                );
                return SeparatingFunctional {
                    coefficients: coeffs,
                    form,
                };
            }
        }
    }
    unreachable!("finitely many directions fail to separate distinct points")
}

/// `φ̃` with `φ̃(z_i) = a_i`, by Lagrange interpolation in the separating
/// form. Each coordinate has degree at most `|Z| − 1` in that form.
pub fn interpolate_map(z: &PointSet, a: &TargetAssignment) -> Result<PolyMap> {
    if z.len() != a.preimages.len() {
        return Err(Error::ArityError {
            expected: z.len(),
            got: a.preimages.len(),
        });
    }
    let sep = separating_functional(z);
    let ell = &sep.form;
    let values: Vec<Coeff> = z
        .points
        .iter()
        .map(|p| linear_value(&sep.coefficients, p))
        .collect();
    let basis: Vec<Polynomial> = (0..values.len())
        .map(|i| {
            let mut li = Polynomial::one(&z.vars);
            let mut denom = Coeff::one();
            for (k, tk) in values.iter().enumerate() {
                if k != i {
                    li = &li * &(ell - &Polynomial::constant(&z.vars, tk.clone()));
                    denom *= &values[i] - tk;
                }
            }
            li.scale(&denom.recip())
        })
        .collect();
    let coords = (0..a.arity())
        .map(|j| {
            basis
                .iter()
                .zip(&a.preimages)
                .fold(Polynomial::zero(&z.vars), |acc, (li, ai)| {
                    &acc + &li.scale(&ai[j])
                })
        })
        .collect();
    Ok(PolyMap {
        domain: z.vars.clone(),
        coords,
    })
}

/// `π ∘ φ̃`, coordinatewise substitution.
pub fn compose_with_surjection(pi: &PolyMap, phi_tilde: &PolyMap) -> Result<PolyMap> {
    if pi.domain.len() != phi_tilde.coords.len() {
        return Err(Error::ArityError {
            expected: pi.domain.len(),
            got: phi_tilde.coords.len(),
        });
    }
    let coords = pi
        .coords
        .iter()
        .map(|p| p.substitute(&phi_tilde.coords))
        .collect::<Result<_>>()?;
    Ok(PolyMap {
        domain: phi_tilde.domain.clone(),
        coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn pts(rows: &[&[i64]]) -> PointSet {
        let n = rows[0].len();
        PointSet::new(
            VarSet::indexed("x", n).unwrap(),
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn targets(rows: &[&[i64]]) -> TargetAssignment {
        TargetAssignment::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn functional_examples() {
        assert_eq!(
            separating_functional(&pts(&[&[3, 4]])).form.to_string(),
            "x1"
        );
        assert_eq!(
            separating_functional(&pts(&[&[0, 0], &[1, 0], &[0, 1]]))
                .form
                .to_string(),
            "x1 + 2*x2"
        );
        assert_eq!(
            separating_functional(&pts(&[&[0], &[1]])).form.to_string(),
            "x1"
        );
        assert_eq!(
            separating_functional(&pts(&[&[0, 0], &[0, 1]]))
                .form
                .to_string(),
            "x2"
        );
    }

    #[test]
    fn enumeration_order() {
        let norm1: Vec<Vec<u64>> = vectors_of_norm(2, 1).collect();
        assert_eq!(norm1, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        let norm2: Vec<Vec<u64>> = vectors_of_norm(2, 2).collect();
        assert_eq!(
            norm2,
            vec![vec![2, 0], vec![0, 2], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
    }

    #[test]
    fn duplicates_are_rejected() {
        let v = VarSet::indexed("x", 1).unwrap();
        assert!(matches!(
            PointSet::new(v, vec![vec![rat(1)], vec![rat(1)]]),
            Err(Error::DuplicatePoints)
        ));
    }

    #[test]
    fn constant_map_through_one_point() {
        let phi = interpolate_map(&pts(&[&[0, 0]]), &targets(&[&[5]])).unwrap();
        assert_eq!(phi.coords[0].to_string(), "5");
    }

    #[test]
    fn linear_map_through_two_points() {
        let phi = interpolate_map(&pts(&[&[0], &[1]]), &targets(&[&[2], &[3]])).unwrap();
        assert_eq!(phi.coords[0].to_string(), "x1 + 2");
    }

    #[test]
    fn three_points_in_the_plane() {
        let z = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        let phi = interpolate_map(&z, &targets(&[&[4], &[5], &[6]])).unwrap();
        // values of x1 + 2*x2 are 0, 1, 2 and the targets are linear in them
        assert_eq!(phi.coords[0].to_string(), "x1 + 2*x2 + 4");
        for (p, want) in z.points().iter().zip([4, 5, 6]) {
            assert_eq!(phi.evaluate(p).unwrap(), vec![rat(want)]);
        }
    }

    #[test]
    fn mismatched_counts() {
        assert!(matches!(
            interpolate_map(&pts(&[&[0], &[1]]), &targets(&[&[2]])),
            Err(Error::ArityError { .. })
        ));
    }

    #[test]
    fn compose_with_identity() {
        let z = pts(&[&[0], &[1], &[2]]);
        let phi = interpolate_map(&z, &targets(&[&[1, 0], &[0, 1], &[4, 4]])).unwrap();
        let id = PolyMap::identity(VarSet::indexed("a", 2).unwrap());
        assert_eq!(
            compose_with_surjection(&id, &phi).unwrap().coords,
            phi.coords
        );
        let bad = PolyMap::identity(VarSet::indexed("a", 3).unwrap());
        assert!(compose_with_surjection(&bad, &phi).is_err());
    }
}
