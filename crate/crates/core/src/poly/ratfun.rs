use std::fmt;

use super::{gcd, Polynomial};
use crate::error::{Error, Result};

/// Reduced fraction `num / den` with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidFraction);
        }
        if num.vars() != den.vars() {
            return Err(Error::VarSetMismatch);
        }
        let den = den.with_order(num.order());
        if num.is_zero() {
            let one = Polynomial::one(num.vars()).with_order(num.order());
            return Ok(RationalFunction { num, den: one });
        }
        let g = gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading_coeff().expect("nonzero").clone();
        if !num_traits::One::is_one(&lc) {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn try_div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::InvalidFraction);
        }
        RationalFunction::new(self.num.try_mul(&other.den)?, self.den.try_mul(&other.num)?)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        let den = Polynomial::one(p.vars()).with_order(p.order());
        RationalFunction { num: p, den }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, VarSet};

    #[test]
    fn reduces_and_normalizes() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let x = Polynomial::var_at(&v, 0);
        let y = Polynomial::var_at(&v, 1);
        let f = RationalFunction::new(&x * &y, (&x * &x).scale(&rat(2))).unwrap();
        assert_eq!(f.numer(), &y.scale(&crate::poly::frac(1, 2)));
        assert_eq!(f.denom(), &x);
        let zero = RationalFunction::new(Polynomial::zero(&v), x.clone()).unwrap();
        assert!(zero.denom().is_one());
        assert!(matches!(
            RationalFunction::new(x.clone(), Polynomial::zero(&v)),
            Err(Error::InvalidFraction)
        ));
    }
}
