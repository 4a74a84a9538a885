//! Lifting a morphism `A^d → P^{k-1}` to a morphism `A^d → A^k \ {0}`.
//!
//! The map is given by rational coordinates up to a common factor. We
//! dehomogenize on the first nonzero coordinate, clear denominators with
//! their lcm, strip the common gcd, and certify with a Gröbner basis that the
//! resulting polynomials have no common zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{is_unit_ideal_with_budget, GroebnerBasis};
use crate::poly::{
    gcd_all, lcm, square_root_detailed, Polynomial, RationalFunction, SqrtOutcome, VarSet,
};

/// `x ↦ [c_1(x) : … : c_k(x)]`, defined up to a common nonzero factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveMapRep {
    coords: Vec<RationalFunction>,
}

impl ProjectiveMapRep {
    pub fn new(coords: Vec<RationalFunction>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "a map into projective space needs at least 2 coordinates, got {}",
                coords.len()
            )));
        }
        let vars = coords[0].numer().vars();
        if coords.iter().any(|c| c.numer().vars() != vars) {
            return Err(Error::VarSetMismatch);
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidInput(
                "all coordinates are identically zero".into(),
            ));
        }
        Ok(ProjectiveMapRep { coords })
    }

    pub fn from_polynomials(coords: Vec<Polynomial>) -> Result<Self> {
        Self::new(coords.into_iter().map(RationalFunction::from).collect())
    }

    pub fn coords(&self) -> &[RationalFunction] {
        &self.coords
    }

    pub fn vars(&self) -> &VarSet {
        self.coords[0].numer().vars()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftResult {
    /// Coprime polynomials with no common zero.
    pub h: Vec<Polynomial>,
    /// Reduced Gröbner basis of `(h_1, …, h_k)`, always `{1}`.
    pub certificate: GroebnerBasis,
    /// Index of the coordinate used for dehomogenization.
    pub base_chart: usize,
}

/// Multiplies the tuple by the lcm of its denominators.
pub fn clear_denominators(coords: &[RationalFunction]) -> Result<Vec<Polynomial>> {
    let first = coords
        .first()
        .ok_or_else(|| Error::InvalidInput("empty coordinate tuple".into()))?;
    let vars = first.numer().vars();
    if coords.iter().any(|c| c.numer().vars() != vars) {
        return Err(Error::VarSetMismatch);
    }
    let mut common = Polynomial::one(vars);
    for c in coords {
        if c.denom().is_zero() {
            return Err(Error::InvalidFraction);
        }
        common = lcm(&common, c.denom());
    }
    Ok(coords
        .iter()
        .map(|c| {
            let cofactor = common.exact_div(c.denom()).expect("lcm is a multiple");
            c.numer() * &cofactor
        })
        .collect())
}

/// Divides out the gcd of all entries, then scales so the first nonzero
/// entry is monic. Idempotent.
pub fn coprime_reduce(h: &[Polynomial]) -> Vec<Polynomial> {
    let Some(g) = gcd_all(h.iter().filter(|p| !p.is_zero())) else {
        return h.to_vec();
    };
    let divided: Vec<Polynomial> = h
        .iter()
        .map(|p| p.exact_div(&g).expect("gcd divides every entry"))
        .collect();
    let lead = divided
        .iter()
        .find(|p| !p.is_zero())
        .and_then(|p| p.leading_coeff())
        .expect("some entry is nonzero")
        .recip();
    divided.iter().map(|p| p.scale(&lead)).collect()
}

pub fn lift_morphism(map: &ProjectiveMapRep) -> Result<LiftResult> {
    lift_morphism_with_budget(map, u64::MAX)
}

pub fn lift_morphism_with_budget(map: &ProjectiveMapRep, budget: u64) -> Result<LiftResult> {
    let base_chart = map
        .coords
        .iter()
        .position(|c| !c.is_zero())
        .expect("validated: some coordinate is nonzero");
    let base = &map.coords[base_chart];
    let affine: Vec<RationalFunction> = map
        .coords
        .iter()
        .map(|c| c.try_div(base))
        .collect::<Result<_>>()?;
    let h = coprime_reduce(&clear_denominators(&affine)?);
    let cert = is_unit_ideal_with_budget(&h, budget)?;
    if !cert.unit {
        return Err(Error::BasePointDetected { basis: cert.basis });
    }
    Ok(LiftResult {
        h,
        certificate: cert.basis,
        base_chart,
    })
}

/// All 2×2 minors `h_i·g_j − h_j·g_i` vanish, after clearing the
/// denominators of `g`. Tuples of different length are never equal.
pub fn verify_projective_equality(h: &[Polynomial], g: &[RationalFunction]) -> Result<bool> {
    if h.len() != g.len() || h.len() < 2 {
        return Ok(false);
    }
    let g = clear_denominators(g)?;
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            let minor = h[i].try_mul(&g[j])?.try_sub(&h[j].try_mul(&g[i])?)?;
            if !minor.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Mechanical replay of the obstruction to lifting into the weighted
/// projective plane `P(1,1,2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WpsReport {
    pub fixture: Vec<Polynomial>,
    pub target: Polynomial,
    pub contradiction: bool,
    pub reason: String,
    pub odd_variable: Option<String>,
    pub odd_degree: Option<u32>,
    pub root: Option<Polynomial>,
    pub steps: Vec<String>,
}

pub fn wps_fixture() -> Vec<Polynomial> {
    let v = VarSet::indexed("x", 3).expect("static varset");
    let x: Vec<Polynomial> = (0..3).map(|i| Polynomial::var_at(&v, i)).collect();
    vec![
        &x[0].pow(2) * &x[2],
        &(&x[0] * &x[1]) * &x[2],
        &x[1].pow(2) * &x[2],
    ]
}

/// Runs the argument on the default fixture, whose first coordinate is
/// `x1^2*x3`.
pub fn wps_obstruction_demo() -> WpsReport {
    let fixture = wps_fixture();
    let target = fixture[0].clone();
    wps_obstruction(fixture, &target)
}

/// The lift would send `z3` to an invertible, hence constant, function λ,
/// and force `h1² = λ·target`. Scaling by λ never changes the degree in a
/// variable, so an odd degree rules out every λ at once.
pub fn wps_obstruction(fixture: Vec<Polynomial>, target: &Polynomial) -> WpsReport {
    let vars = target.vars().clone();
    let mut steps = vec![
        "the lift lands in the locus z3 != 0, where z3 is invertible".to_string(),
        "an invertible regular function on affine space is a nonzero constant lambda".to_string(),
        format!("first coordinate of the lifted equality: h1^2 = lambda*({target})"),
    ];
    let outcome = square_root_detailed(target);
    let (contradiction, reason, odd_variable, odd_degree, root) = match outcome {
        SqrtOutcome::OddDegree { var, degree } => {
            let name = vars.name(var).to_string();
            steps.push(format!(
                "{name} has odd degree {degree} in the right-hand side for every lambda, so it is not a square"
            ));
            steps.push("no polynomial h1 exists: contradiction".into());
            (
                true,
                format!("odd degree {degree} in {name}"),
                Some(name),
                Some(degree),
                None,
            )
        }
        SqrtOutcome::Root(q) => {
            steps.push(format!("h1 = {q} solves the equation for lambda = 1"));
            (
                false,
                format!("square root {q} exists"),
                None,
                None,
                Some(q),
            )
        }
        SqrtOutcome::NotSquare => {
            steps.push("all degrees are even; no parity obstruction applies".into());
            (
                false,
                "no parity obstruction (not a square over Q)".into(),
                None,
                None,
                None,
            )
        }
    };
    WpsReport {
        fixture,
        target: target.clone(),
        contradiction,
        reason,
        odd_variable,
        odd_degree,
        root,
        steps,
    }
}
