//! The surjection `γ(x, z) = (h_1(x)·z, …, h_k(x)·z)` onto an affine cone.
//!
//! Surjectivity itself is inherited from the caller's map. What is checked
//! here: the tuple has no common zero, it lands in the cone, the scaling
//! identity holds, and sampled points of γ satisfy every generator.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::is_unit_ideal_with_budget;
use crate::poly::{Coeff, Polynomial, VarSet};

/// Name of the scaling coordinate appended to the domain of γ.
pub const SCALING_VAR: &str = "z";

/// Affine cone `Y ⊆ A^k` cut out by homogeneous generators. No generators
/// means all of `A^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeVariety {
    ambient: VarSet,
    generators: Vec<Polynomial>,
    dim_y: Option<usize>,
}

impl ConeVariety {
    pub fn new(ambient: VarSet, generators: Vec<Polynomial>, dim_y: Option<usize>) -> Result<Self> {
        for g in &generators {
            if g.vars() != &ambient {
                return Err(Error::VarSetMismatch);
            }
            if g.is_homogeneous().is_none() {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(ConeVariety {
            ambient,
            generators,
            dim_y,
        })
    }

    pub fn full_space(ambient: VarSet) -> Self {
        ConeVariety {
            ambient,
            generators: Vec::new(),
            dim_y: None,
        }
    }

    pub fn ambient(&self) -> &VarSet {
        &self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn dim_y(&self) -> Option<usize> {
        self.dim_y
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeSurjection {
    pub h: Vec<Polynomial>,
    pub gamma: Vec<Polynomial>,
    /// Dimension of the domain of γ, always `d + 1`.
    pub m: usize,
    /// `dim Y + 1`, when the caller supplied `dim Y`.
    pub expected_m: Option<usize>,
    #[serde(skip)]
    pub domain: VarSet,
}

impl ConeSurjection {
    /// γ at `point` (length `d + 1`, last entry is the scaling coordinate).
    pub fn image(&self, point: &[Coeff]) -> Result<Vec<Coeff>> {
        self.gamma.iter().map(|g| g.evaluate(point)).collect()
    }
}

fn check_arity(h: &[Polynomial], cone: &ConeVariety) -> Result<()> {
    if h.len() != cone.ambient_dim() {
        return Err(Error::ArityError {
            expected: cone.ambient_dim(),
            got: h.len(),
        });
    }
    Ok(())
}

/// Index of the first generator that does not vanish identically on `h`.
pub fn first_failing_generator(h: &[Polynomial], cone: &ConeVariety) -> Result<Option<usize>> {
    check_arity(h, cone)?;
    for (i, f) in cone.generators.iter().enumerate() {
        if !f.substitute(h)?.is_zero() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn verify_maps_into_cone(h: &[Polynomial], cone: &ConeVariety) -> Result<bool> {
    Ok(first_failing_generator(h, cone)?.is_none())
}

pub fn build_gamma(h: &[Polynomial], cone: &ConeVariety) -> Result<ConeSurjection> {
    build_gamma_with_budget(h, cone, u64::MAX)
}

pub fn build_gamma_with_budget(
    h: &[Polynomial],
    cone: &ConeVariety,
    budget: u64,
) -> Result<ConeSurjection> {
    check_arity(h, cone)?;
    let cert = is_unit_ideal_with_budget(h, budget)?;
    if !cert.unit {
        return Err(Error::BasePointDetected { basis: cert.basis });
    }
    if let Some(index) = first_failing_generator(h, cone)? {
        return Err(Error::NotIntoCone { index });
    }
    let domain = h[0].vars().with_fresh(SCALING_VAR);
    let z = Polynomial::var_at(&domain, domain.len() - 1);
    let gamma = h
        .iter()
        .map(|p| Ok(&p.embed(&domain)? * &z))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConeSurjection {
        h: h.to_vec(),
        gamma,
        m: domain.len(),
        expected_m: cone.dim_y.map(|d| d + 1),
        domain,
    })
}

/// Checks `F(z·h) = z^{deg F}·F(h)` symbolically.
pub fn verify_gamma_scaling(f: &Polynomial, h: &[Polynomial]) -> Result<bool> {
    let hom = f.is_homogeneous().ok_or(Error::NotHomogeneous)?;
    if hom.zero {
        return Ok(true);
    }
    if h.len() != f.vars().len() {
        return Err(Error::ArityError {
            expected: f.vars().len(),
            got: h.len(),
        });
    }
    let domain = h[0].vars().with_fresh(SCALING_VAR);
    let z = Polynomial::var_at(&domain, domain.len() - 1);
    let lifted: Vec<Polynomial> = h.iter().map(|p| p.embed(&domain)).collect::<Result<_>>()?;
    let scaled: Vec<Polynomial> = lifted.iter().map(|p| p * &z).collect();
    let lhs = f.substitute(&scaled)?;
    let rhs = &z.pow(hom.degree) * &f.substitute(&lifted)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub sample: usize,
    pub point: Vec<String>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorTally {
    pub generator: Polynomial,
    pub passed: usize,
    pub failed: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub n_samples: usize,
    pub seed: u64,
    pub bound: u64,
    pub generators: Vec<GeneratorTally>,
}

impl SampleReport {
    pub fn all_passed(&self) -> bool {
        self.generators.iter().all(|g| g.failed == 0)
    }
}

const MAX_WITNESSES: usize = 5;

/// Uniform rational with numerator and denominator in `[-bound, bound]`,
/// denominator nonzero. A bound of 0 is treated as 1.
pub fn random_rational<R: Rng>(rng: &mut R, bound: u64) -> Coeff {
    let b = bound.max(1) as i64;
    let num = rng.gen_range(-b..=b);
    let den = loop {
        let d = rng.gen_range(-b..=b);
        if d != 0 {
            break d;
        }
    };
    Coeff::new(BigInt::from(num), BigInt::from(den))
}

fn show(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Evaluates every generator at `γ(a, z)` for `n_samples` seeded random
/// points. Deterministic for a fixed seed.
pub fn sample_membership(
    surj: &ConeSurjection,
    cone: &ConeVariety,
    n_samples: usize,
    seed: u64,
    bound: u64,
) -> Result<SampleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tallies: Vec<GeneratorTally> = cone
        .generators
        .iter()
        .map(|g| GeneratorTally {
            generator: g.clone(),
            passed: 0,
            failed: 0,
            witnesses: Vec::new(),
        })
        .collect();
    for sample in 0..n_samples {
        let point: Vec<Coeff> = (0..surj.m)
            .map(|_| random_rational(&mut rng, bound))
            .collect();
        let image = surj.image(&point)?;
        for (g, tally) in cone.generators.iter().zip(&mut tallies) {
            let value = g.evaluate(&image)?;
            if value.is_zero() {
                tally.passed += 1;
            } else {
                tally.failed += 1;
                if tally.witnesses.len() < MAX_WITNESSES {
                    tally.witnesses.push(Witness {
                        sample,
                        point: point.iter().map(show).collect(),
                        value: show(&value),
                    });
                }
            }
        }
    }
    Ok(SampleReport {
        n_samples,
        seed,
        bound,
        generators: tallies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    struct Conic {
        h: Vec<Polynomial>,
        cone: ConeVariety,
    }

    fn conic() -> Conic {
        let v = VarSet::new(["x", "y"]).unwrap();
        let (x, y) = (Polynomial::var_at(&v, 0), Polynomial::var_at(&v, 1));
        let u = &x * &y + Polynomial::one(&v);
        let zs = VarSet::indexed("z", 3).unwrap();
        let f = Polynomial::var_at(&zs, 0) * Polynomial::var_at(&zs, 2)
            - Polynomial::var_at(&zs, 1).pow(2);
        Conic {
            h: vec![x.pow(2), &x * &u, u.pow(2)],
            cone: ConeVariety::new(zs, vec![f], Some(2)).unwrap(),
        }
    }

    #[test]
    fn conic_gamma() {
        let c = conic();
        let s = build_gamma(&c.h, &c.cone).unwrap();
        assert_eq!(s.m, 3);
        assert_eq!(s.expected_m, Some(3));
        let names: Vec<String> = s.gamma.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["x^2*z", "x^2*y*z + x*z", "x^2*y^2*z + 2*x*y*z + z"]);
        let report = sample_membership(&s, &c.cone, 100, 7, 10).unwrap();
        assert_eq!(report.generators[0].passed, 100);
        assert!(report.all_passed());
    }

    #[test]
    fn gamma_over_full_plane() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let (x, y) = (Polynomial::var_at(&v, 0), Polynomial::var_at(&v, 1));
        let u = &x * &y + Polynomial::one(&v);
        let plane = ConeVariety::full_space(VarSet::indexed("z", 2).unwrap());
        let s = build_gamma(&[x.clone(), u], &plane).unwrap();
        assert_eq!(s.gamma[0].to_string(), "x*z");
        assert_eq!(s.gamma[1].to_string(), "x*y*z + z");
    }

    #[test]
    fn cone_over_a_point() {
        let v = VarSet::new(["x"]).unwrap();
        let line = ConeVariety::full_space(VarSet::indexed("z", 1).unwrap());
        let s = build_gamma(&[Polynomial::one(&v)], &line).unwrap();
        assert_eq!(s.gamma[0].to_string(), "z");
        assert_eq!(s.m, 2);
    }

    #[test]
    fn build_gamma_errors() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let (x, y) = (Polynomial::var_at(&v, 0), Polynomial::var_at(&v, 1));
        let zs = VarSet::indexed("z", 2).unwrap();
        let plane = ConeVariety::full_space(zs.clone());
        assert!(matches!(
            build_gamma(&[x.clone(), y.clone()], &plane),
            Err(Error::BasePointDetected { .. })
        ));
        let product = Polynomial::var_at(&zs, 0) * Polynomial::var_at(&zs, 1);
        let cone = ConeVariety::new(zs, vec![product], None).unwrap();
        let u = &x * &y + Polynomial::one(&v);
        assert!(matches!(
            build_gamma(&[x.clone(), u], &cone),
            Err(Error::NotIntoCone { index: 0 })
        ));
        assert!(!verify_maps_into_cone(&[x, y], &cone).unwrap());
    }

    #[test]
    fn maps_into_cone_examples() {
        let c = conic();
        assert!(verify_maps_into_cone(&c.h, &c.cone).unwrap());
        let empty = ConeVariety::full_space(VarSet::indexed("z", 3).unwrap());
        assert!(verify_maps_into_cone(&c.h, &empty).unwrap());
    }

    #[test]
    fn non_homogeneous_generators_are_rejected() {
        let zs = VarSet::indexed("z", 2).unwrap();
        let f = Polynomial::var_at(&zs, 0) + Polynomial::var_at(&zs, 1).pow(2);
        assert!(matches!(
            ConeVariety::new(zs, vec![f.clone()], None),
            Err(Error::NotHomogeneous)
        ));
        let v = VarSet::new(["x"]).unwrap();
        let h = [Polynomial::var_at(&v, 0), Polynomial::one(&v)];
        assert!(matches!(
            verify_gamma_scaling(&f, &h),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn scaling_identity_examples() {
        let c = conic();
        let f = &c.cone.generators()[0];
        assert!(verify_gamma_scaling(f, &c.h).unwrap());
        let zero = Polynomial::zero(f.vars());
        assert!(verify_gamma_scaling(&zero, &c.h).unwrap());
    }

    #[test]
    fn tampered_gamma_reports_witnesses() {
        let c = conic();
        let mut s = build_gamma(&c.h, &c.cone).unwrap();
        s.gamma.swap(0, 1);
        let report = sample_membership(&s, &c.cone, 50, 42, 10).unwrap();
        let tally = &report.generators[0];
        assert!(tally.failed > 0);
        assert!(!tally.witnesses.is_empty());
        assert_eq!(tally.passed + tally.failed, 50);
    }

    #[test]
    fn vertex_is_hit() {
        let c = conic();
        let s = build_gamma(&c.h, &c.cone).unwrap();
        let image = s.image(&[rat(3), rat(-2), rat(0)]).unwrap();
        assert!(image.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn zero_samples_give_empty_tallies() {
        let c = conic();
        let s = build_gamma(&c.h, &c.cone).unwrap();
        let report = sample_membership(&s, &c.cone, 0, 1, 10).unwrap();
        assert_eq!(report.generators[0].passed + report.generators[0].failed, 0);
    }
}
