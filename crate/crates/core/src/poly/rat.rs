use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `a + b`, skipping normalization when both are integers.
pub(crate) fn add_rat(a: &Rat, b: &Rat) -> Rat {
    if a.denom().is_one() && b.denom().is_one() {
        Rat::new_raw(a.numer() + b.numer(), BigInt::one())
    } else {
        a + b
    }
}

/// `a * b`, skipping normalization when both are integers.
pub(crate) fn mul_rat(a: &Rat, b: &Rat) -> Rat {
    if a.denom().is_one() && b.denom().is_one() {
        Rat::new_raw(a.numer() * b.numer(), BigInt::one())
    } else {
        a * b
    }
}

/// Positive rational `g` such that every value in `values` is an integer
/// multiple of `g` and the multiples are coprime. Zero if all values are zero.
pub fn rat_content<'a, I: IntoIterator<Item = &'a Rat>>(values: I) -> Rat {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        if !num.is_one() {
            num = num.gcd(v.numer());
        }
        if !v.denom().is_one() {
            den = den.lcm(v.denom());
        }
    }
    if num.is_zero() {
        Rat::zero()
    } else {
        Rat::new(num, den)
    }
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_perfect_square(q: &Rat) -> bool {
    rat_sqrt(q).is_some()
}

/// Exact nonnegative square root of a rational, if it exists.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rat::new(n, d))
}

/// Scale a nonzero rational vector to coprime integers with the first
/// nonzero entry positive.
pub fn primitive_int_vector(v: &[Rat]) -> Vec<BigInt> {
    let c = rat_content(v.iter());
    if c.is_zero() {
        return vec![BigInt::zero(); v.len()];
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| (x / &c).to_integer()).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in out.iter_mut() {
                *x = -&*x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_of_mixed_rationals() {
        let v = [rat(3, 4), rat(-9, 2), int(0)];
        assert_eq!(rat_content(v.iter()), rat(3, 4));
    }

    #[test]
    fn sqrt_rational() {
        assert_eq!(rat_sqrt(&rat(9, 49)), Some(rat(3, 7)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-4, 1)), None);
    }

    #[test]
    fn primitive_vector_sign() {
        let v = primitive_int_vector(&[rat(-1, 2), rat(1, 2), rat(1, 2)]);
        assert_eq!(v, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(-1)]);
    }
}
