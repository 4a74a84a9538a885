//! Trinomial hypersurfaces `x_0^{l_0} + x_1^{l_1} + x_2^{l_2} = 0`.
//!
//! Rationality depends only on the block gcds `𝔩_i = gcd(l_i1, …, l_in_i)`.
//! It holds iff either
//!
//! 1. after choosing which block is distinguished, `𝔩 = (s·c_0, s·c_1, c_2)`
//!    with `c` pairwise coprime and `gcd(c_2, s) = 1`, or
//! 2. `𝔩 = (2c_0, 2c_1, 2c_2)` with `c` pairwise coprime.
//!
//! For these varieties unirational and rational coincide, so on cones the
//! verdict also settles whether a surjection from affine space exists.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarSet};
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrinomialHypersurface {
    blocks: [Vec<u64>; 3],
}

impl TrinomialHypersurface {
    pub fn new(l0: Vec<u64>, l1: Vec<u64>, l2: Vec<u64>) -> Result<Self> {
        let blocks = [l0, l1, l2];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidInput(format!("block l{i} is empty")));
            }
            if b.contains(&0) {
                return Err(Error::InvalidInput(format!(
                    "block l{i} has a zero exponent"
                )));
            }
        }
        Ok(TrinomialHypersurface { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u64>; 3] {
        &self.blocks
    }

    /// Ambient dimension `k = n_0 + n_1 + n_2`.
    pub fn k(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Variable names `x{i}{j}`, block index then 1-based position.
    pub fn varset(&self) -> VarSet {
        let names = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| (1..=b.len()).map(move |j| format!("x{i}{j}")));
        VarSet::new(names).expect("names are distinct")
    }
}

pub fn l_gcds(t: &TrinomialHypersurface) -> [u64; 3] {
    let g = |b: &Vec<u64>| b.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    [g(&t.blocks[0]), g(&t.blocks[1]), g(&t.blocks[2])]
}

/// Renumberings, as maps from new index to original block, in search order.
/// The block in the last slot is the one not paired with `s`.
pub const RENUMBERINGS: [[usize; 3]; 3] = [[0, 1, 2], [0, 2, 1], [1, 2, 0]];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum Witness {
    Case1 {
        s: u64,
        c: [u64; 3],
        renumbering: [usize; 3],
    },
    Case2 {
        c: [u64; 3],
    },
    NotRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityVerdict {
    pub rational: bool,
    pub witness: Witness,
    pub l_gcds: [u64; 3],
}

fn pairwise_coprime(c: &[u64; 3]) -> bool {
    c[0].gcd(&c[1]) == 1 && c[0].gcd(&c[2]) == 1 && c[1].gcd(&c[2]) == 1
}

impl Witness {
    /// Re-checks the defining equalities and coprimality against `l`.
    pub fn verify(&self, l: &[u64; 3]) -> bool {
        match self {
            Witness::Case1 { s, c, renumbering } => {
                let lr = renumbering.map(|i| l[i]);
                *s >= 1
                    && c.iter().all(|&x| x >= 1)
                    && pairwise_coprime(c)
                    && c[2].gcd(s) == 1
                    && lr == [s * c[0], s * c[1], c[2]]
            }
            Witness::Case2 { c } => {
                c.iter().all(|&x| x >= 1) && pairwise_coprime(c) && *l == c.map(|x| 2 * x)
            }
            Witness::NotRational => false,
        }
    }
}

/// Rationality verdict from the block gcds alone.
pub fn classify_gcds(l: [u64; 3]) -> RationalityVerdict {
    for renumbering in RENUMBERINGS {
        let [a, b, c2] = renumbering.map(|i| l[i]);
        let g = a.gcd(&b);
        for s in (1..=g).filter(|s| g % s == 0) {
            let c = [a / s, b / s, c2];
            if pairwise_coprime(&c) && c2.gcd(&s) == 1 {
                return RationalityVerdict {
                    rational: true,
                    witness: Witness::Case1 { s, c, renumbering },
                    l_gcds: l,
                };
            }
        }
    }
    if l.iter().all(|x| x % 2 == 0) {
        let c = l.map(|x| x / 2);
        if pairwise_coprime(&c) {
            return RationalityVerdict {
                rational: true,
                witness: Witness::Case2 { c },
                l_gcds: l,
            };
        }
    }
    RationalityVerdict {
        rational: false,
        witness: Witness::NotRational,
        l_gcds: l,
    }
}

pub fn classify(t: &TrinomialHypersurface) -> RationalityVerdict {
    classify_gcds(l_gcds(t))
}

/// The three block exponent sums agree.
pub fn is_affine_cone(t: &TrinomialHypersurface) -> bool {
    let sums = t.blocks.each_ref().map(|b| b.iter().sum::<u64>());
    sums[0] == sums[1] && sums[1] == sums[2]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SurjectionVerdict {
    /// A surjection `A^m → Y` exists, with `m = dim Y + 1`.
    Exists { m: usize },
    /// The cone is not unirational, so no surjection exists.
    None,
    /// Not a cone; the cone criterion does not apply.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurjectionReport {
    pub cone: bool,
    pub rational: bool,
    pub classification: RationalityVerdict,
    pub surjection: SurjectionVerdict,
    pub explanation: String,
}

pub fn admits_surjection_from_affine_space(t: &TrinomialHypersurface) -> SurjectionReport {
    let cone = is_affine_cone(t);
    let classification = classify(t);
    let rational = classification.rational;
    let dim_y = t.k() - 1;
    let (surjection, explanation) = match (cone, rational) {
        (true, true) => (
            SurjectionVerdict::Exists { m: dim_y + 1 },
            format!(
                "affine cone and rational (hence unirational): surjection from A^{} exists",
                dim_y + 1
            ),
        ),
        (true, false) => (
            SurjectionVerdict::None,
            "affine cone but not unirational: no surjection from affine space".to_string(),
        ),
        (false, _) => (
            SurjectionVerdict::Undecided,
            "block exponent sums differ: not an affine cone, the cone criterion does not apply"
                .to_string(),
        ),
    };
    SurjectionReport {
        cone,
        rational,
        classification,
        surjection,
        explanation,
    }
}

pub fn to_polynomial(t: &TrinomialHypersurface) -> Polynomial {
    let vars = t.varset();
    let mut offset = 0;
    let mut terms = Vec::with_capacity(3);
    for b in &t.blocks {
        let mut e = vec![0u32; vars.len()];
        for (j, &l) in b.iter().enumerate() {
            e[offset + j] = u32::try_from(l).expect("exponent fits in u32");
        }
        offset += b.len();
        terms.push((Monomial(e), crate::poly::Coeff::one()));
    }
    Polynomial::from_terms(&vars, terms)
}
