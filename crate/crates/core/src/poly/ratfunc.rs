use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::error::PolyError;
use super::gcd::gcd;
use super::multipoly::MultiPoly;
use super::rat::Rat;

/// Quotient of polynomials kept in lowest terms. The denominator has coprime
/// integer coefficients and a positive leading coefficient; a constant
/// denominator is always `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let vars = p.vars().clone();
        RatFunc {
            num: p,
            den: MultiPoly::one(vars),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(MultiPoly::from_rat(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        let (num, den) = MultiPoly::aligned(&num, &den);
        if num.is_zero() {
            return RatFunc {
                den: MultiPoly::one(num.vars().clone()),
                num,
            };
        }
        if let Some(c) = den.constant_value() {
            let vars = num.vars().clone();
            return RatFunc {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(vars),
            };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if let Some(c) = den.constant_value() {
            let vars = num.vars().clone();
            return RatFunc {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(vars),
            };
        }
        let mut k = den.rat_content();
        if den.leading_coeff().is_negative() {
            k = -k;
        }
        if !k.is_one() {
            let inv = k.recip();
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<MultiPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn used_vars(&self) -> Vec<String> {
        let (n, _) = MultiPoly::aligned(&self.num, &self.den);
        let mut out: Vec<String> = n
            .vars()
            .iter()
            .filter(|v| self.num.contains_var(v) || self.den.contains_var(v))
            .cloned()
            .collect();
        out.dedup();
        out
    }

    /// Degree of the rational function in `v`: max of numerator and denominator degrees.
    pub fn degree_in(&self, v: &str) -> i64 {
        self.num.degree_in(v).max(self.den.degree_in(v))
    }

    pub fn recip(&self) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn derivative(&self, v: &str) -> RatFunc {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        Self::normalize(n, self.den.pow(2))
    }

    pub fn eval(&self, values: &[(&str, Rat)]) -> Result<Option<Rat>, PolyError> {
        let Some(d) = self.den.eval(values) else {
            return Ok(None);
        };
        if d.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(self.num.eval(values).map(|n| n / d))
    }

    pub fn rename(&self, from: &str, to: &str) -> RatFunc {
        RatFunc {
            num: self.num.rename(from, to),
            den: self.den.rename(from, to),
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, PolyError> {
        if rhs.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::{int, rat};

    fn v(n: &str) -> RatFunc {
        RatFunc::var(n)
    }
    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let num = (&v("t") - &c(1)).pow(2);
        let den = &v("t").pow(2) - &c(1);
        let q = &num / &den;
        assert_eq!(q.numer(), &(&MultiPoly::var("t") - &MultiPoly::from_int(1)));
        assert_eq!(q.denom(), &(&MultiPoly::var("t") + &MultiPoly::from_int(1)));
    }

    #[test]
    fn denominator_is_primitive_positive() {
        let q = &c(3) / &(&v("t").scale(&int(-4)) + &c(2));
        assert_eq!(q.denom().to_string(), "2*t - 1");
        assert_eq!(q.numer().to_string(), "-3/2");
    }

    #[test]
    fn constant_denominator_folds() {
        let q = &v("x") / &c(4);
        assert!(q.is_polynomial());
        assert_eq!(q.numer(), &MultiPoly::var("x").scale(&rat(1, 4)));
    }

    #[test]
    fn derivative_quotient_rule() {
        let q = &c(1) / &v("t");
        let d = q.derivative("t");
        assert_eq!(d, &c(-1) / &v("t").pow(2));
    }

    #[test]
    fn eval_at_pole_is_error() {
        let q = &c(1) / &(&v("t") - &c(1));
        assert!(q.eval(&[("t", int(1))]).is_err());
        assert_eq!(q.eval(&[("t", int(3))]).unwrap(), Some(rat(1, 2)));
    }
}
