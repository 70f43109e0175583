//! Dense univariate polynomials over Q.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::error::PolyError;
use super::multipoly::MultiPoly;
use super::rat::Rat;

/// Coefficients stored from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: &Rat) -> Self {
        UniPoly::new(vec![-r, Rat::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&k| Rat::from_integer(k.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `-1` for zero.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn from_multi(p: &MultiPoly, var: &str) -> Result<Self, PolyError> {
        if let Some(other) = p.used_vars().into_iter().find(|v| v != var) {
            let _ = other;
            return Err(PolyError::NotUnivariate(var.to_string()));
        }
        let d = p.degree_in(var).max(0) as usize;
        let mut c = vec![Rat::zero(); d + 1];
        let idx = p.var_index(var);
        for (m, k) in p.terms() {
            let e = idx.map(|i| m.exponents()[i] as usize).unwrap_or(0);
            c[e] = k.clone();
        }
        Ok(UniPoly::new(c))
    }

    pub fn to_multi(&self, var: &str) -> MultiPoly {
        let x = MultiPoly::var(var);
        let mut acc = MultiPoly::zero(x.vars().clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + &MultiPoly::constant(c.clone(), x.vars().clone());
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        let lc = d.lc();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    /// Scaled to coprime integer coefficients.
    fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&super::rat::rat_content(&self.coeffs).recip())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                return UniPoly::constant(Rat::one());
            }
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*a + t*b = g` and `g` monic.
    pub fn xgcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::constant(Rat::one()), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::constant(Rat::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = r0.lc().recip();
        (r0.scale(&k), s0.scale(&k), t0.scale(&k))
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inverse_mod(&self, m: &UniPoly) -> Option<UniPoly> {
        let (g, s, _) = self.rem(m).xgcd(m);
        (g.degree() == 0).then(|| s.rem(m))
    }

    pub fn squarefree(&self) -> UniPoly {
        if self.degree() <= 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Integer coefficients, coprime, obtained by scaling.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Distinct rational roots, ascending. Returns `None` if the constant or
    /// leading coefficient is too large to enumerate divisors within the cap.
    pub fn rational_roots(&self) -> Option<Vec<Rat>> {
        if self.degree() <= 0 {
            return Some(vec![]);
        }
        let mut roots = Vec::new();
        let mut p = self.squarefree();
        if p.coeff(0).is_zero() {
            roots.push(Rat::zero());
            p = p.divrem(&UniPoly::linear_root(&Rat::zero())).0;
        }
        if p.degree() >= 1 {
            let ints = p.integer_coeffs();
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let num_divs = divisors(&a0)?;
            let den_divs = divisors(&an)?;
            for q in &den_divs {
                for n in &num_divs {
                    if n.gcd(q) != BigInt::one() {
                        continue;
                    }
                    for sign in [1i32, -1] {
                        let r = Rat::new(n * BigInt::from(sign), q.clone());
                        if p.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }
}

const DIVISOR_CAP: u64 = 2_000_000;

/// Positive divisors of `n > 0` by trial division; `None` past the cap.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p: u64 = 2;
    while BigInt::from(p) * BigInt::from(p) <= m {
        if p > DIVISOR_CAP {
            return None;
        }
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (f, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &f;
            }
        }
        divs = next;
        if divs.len() > 100_000 {
            return None;
        }
    }
    divs.sort();
    Some(divs)
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Small integer value of a rational, if it is one.
pub fn small_int(r: &Rat) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::{int, rat};

    #[test]
    fn roots_of_product() {
        // (2x - 1)(x + 3)(x^2 + 1) x
        let p = &(&(&UniPoly::from_ints(&[-1, 2]) * &UniPoly::from_ints(&[3, 1]))
            * &UniPoly::from_ints(&[1, 0, 1]))
            * &UniPoly::from_ints(&[0, 1]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![int(-3), int(0), rat(1, 2)]
        );
    }

    #[test]
    fn xgcd_bezout() {
        let a = UniPoly::from_ints(&[1, 0, 1]);
        let b = UniPoly::from_ints(&[-1, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, UniPoly::from_ints(&[1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        let inv = b.inverse_mod(&a).unwrap();
        assert_eq!((&inv * &b).rem(&a), UniPoly::from_ints(&[1]));
    }

    #[test]
    fn multi_roundtrip() {
        let p = UniPoly::new(vec![rat(1, 2), int(0), int(-3)]);
        let m = p.to_multi("t");
        assert_eq!(UniPoly::from_multi(&m, "t").unwrap(), p);
        assert!(UniPoly::from_multi(&(&m * &MultiPoly::var("x")), "t").is_err());
    }

    #[test]
    fn squarefree_drops_repeats() {
        let p = &UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[-1, 1]);
        assert_eq!(p.squarefree(), UniPoly::from_ints(&[-1, 1]));
    }
}
