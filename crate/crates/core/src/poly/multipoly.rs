use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rat::{add_rat, mul_rat, rat_content, Rat};
use super::vars::{merge_vars, sort_vars, Vars};

/// Sparse multivariate polynomial over Q.
///
/// Terms are stored in a map keyed by grlex-ordered monomials, so the last
/// entry is the leading term. Two polynomials over different variable lists
/// are compared and combined over the union of their lists.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat, vars: Vars) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars.len()), c);
        }
        MultiPoly { vars, terms }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(Rat::one(), vars)
    }

    /// Constant with no variables.
    pub fn from_rat(c: Rat) -> Self {
        Self::constant(c, Arc::from(Vec::<String>::new()))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        let vars = sort_vars(&[name]);
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(1, 0, 1), Rat::one());
        MultiPoly { vars, terms }
    }

    /// Build from `(exponents, coefficient)` pairs over `vars`; zero
    /// coefficients are dropped and repeated monomials summed.
    pub fn from_terms<I>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub(crate) fn from_map(vars: Vars, terms: BTreeMap<Monomial, Rat>) -> Self {
        MultiPoly { vars, terms }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = add_rat(e.get(), &c);
                *e.get_mut() = v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Total degree; `-1` encodes the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Degree in one variable (0 if absent, `-1` for zero).
    pub fn degree_in(&self, name: &str) -> i64 {
        if self.is_zero() {
            return -1;
        }
        match self.var_index(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i] as i64).max().unwrap_or(0),
        }
    }

    /// Lowest exponent of `name` among the terms.
    pub fn min_degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0),
        }
    }

    /// Variables that actually occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn contains_var(&self, name: &str) -> bool {
        self.degree_in(name) > 0
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Re-express over `vars`, which must contain every used variable.
    pub fn with_vars(&self, vars: &Vars) -> MultiPoly {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return MultiPoly {
                vars: vars.clone(),
                terms: self.terms.clone(),
            };
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let n = vars.len();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].unwrap_or_else(|| {
                    panic!("variable `{}` missing from target list", self.vars[i])
                });
                e[j] = k;
            }
            terms.insert(Monomial(e), c.clone());
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// Drop variables that do not occur.
    pub fn trimmed(&self) -> MultiPoly {
        let used = self.used_vars();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        self.with_vars(&sort_vars(&used))
    }

    /// Extend the variable list with `extra` names.
    pub fn extend_vars<S: AsRef<str>>(&self, extra: &[S]) -> MultiPoly {
        let ext = sort_vars(extra);
        self.with_vars(&merge_vars(&self.vars, &ext))
    }

    pub(crate) fn aligned(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let vars = merge_vars(&a.vars, &b.vars);
        (a.with_vars(&vars), b.with_vars(&vars))
    }

    fn same_vars(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars[..] == other.vars[..]
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), mul_rat(k, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), mul_rat(v, c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, name: &str) -> MultiPoly {
        let Some(i) = self.var_index(name) else {
            return MultiPoly::zero(self.vars.clone());
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            terms.insert(Monomial(e), c * Rat::from_integer(k.into()));
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Coefficients of `name^0, name^1, ...` as polynomials over the same variables.
    pub fn coeffs_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(name) else {
            return vec![self.clone()];
        };
        let d = self.degree_in(name).max(0) as usize;
        let mut out: Vec<MultiPoly> = (0..=d)
            .map(|_| MultiPoly::zero(self.vars.clone()))
            .collect();
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut e = m.0.clone();
            e[i] = 0;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in): `sum coeffs[k] * name^k`.
    pub fn from_coeffs_in(name: &str, coeffs: &[MultiPoly]) -> MultiPoly {
        let v = MultiPoly::var(name);
        let mut acc = MultiPoly::zero(v.vars.clone());
        for c in coeffs.iter().rev() {
            acc = &(&acc * &v) + c;
        }
        acc
    }

    /// Leading coefficient with respect to one variable.
    pub fn lc_in(&self, name: &str) -> MultiPoly {
        self.coeffs_in(name)
            .pop()
            .unwrap_or_else(|| MultiPoly::zero(self.vars.clone()))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute rational values for some variables.
    pub fn eval_partial(&self, values: &[(&str, Rat)]) -> MultiPoly {
        let idx: Vec<(usize, &Rat)> = values
            .iter()
            .filter_map(|(n, v)| self.var_index(n).map(|i| (i, v)))
            .collect();
        if idx.is_empty() {
            return self.clone();
        }
        let mut out = MultiPoly::zero(self.vars.clone());
        let mut pow_cache: Vec<Vec<Rat>> = idx
            .iter()
            .map(|(_, v)| vec![Rat::one(), (*v).clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let mut coeff = c.clone();
            for (j, (i, v)) in idx.iter().enumerate() {
                let k = e[*i] as usize;
                while pow_cache[j].len() <= k {
                    let next = mul_rat(pow_cache[j].last().unwrap(), v);
                    pow_cache[j].push(next);
                }
                coeff = mul_rat(&coeff, &pow_cache[j][k]);
                e[*i] = 0;
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Evaluate at a full assignment; unassigned variables are an error.
    pub fn eval(&self, values: &[(&str, Rat)]) -> Option<Rat> {
        self.eval_partial(values).constant_value()
    }

    /// Rename a variable (the target must not already occur).
    pub fn rename(&self, from: &str, to: &str) -> MultiPoly {
        let Some(i) = self.var_index(from) else {
            return self.clone();
        };
        let mut names: Vec<String> = self.vars.to_vec();
        names[i] = to.to_string();
        let raw: Vars = names.into();
        let p = MultiPoly {
            vars: raw,
            terms: self.terms.clone(),
        };
        let sorted = sort_vars(&p.vars);
        p.reorder(&sorted)
    }

    fn reorder(&self, target: &Vars) -> MultiPoly {
        let perm: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|w| w == v).expect("permutation"))
            .collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] += k;
            }
            terms.insert(Monomial(e), c.clone());
        }
        MultiPoly {
            vars: target.clone(),
            terms,
        }
    }

    /// Rational content: the positive rational with `self / content` having
    /// coprime integer coefficients.
    pub fn rat_content(&self) -> Rat {
        rat_content(self.terms.values())
    }

    /// Scale to coprime integer coefficients with positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.rat_content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Division by `g` with remainder, reducing by the grlex leading term only.
    pub fn divrem(&self, g: &MultiPoly) -> (MultiPoly, MultiPoly) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let (f, g) = MultiPoly::aligned(self, g);
        let (lm, lc) = g
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut p = f.terms;
        let mut q = BTreeMap::new();
        let mut r = BTreeMap::new();
        while let Some((m, c)) = p.pop_last() {
            match m.checked_div(&lm) {
                Some(qm) => {
                    let qc = &c / &lc;
                    for (gm, gc) in g.terms.iter().rev().skip(1) {
                        let mm = gm.mul(&qm);
                        let v = p.entry(mm.clone()).or_insert_with(Rat::zero);
                        *v -= gc * &qc;
                        if v.is_zero() {
                            p.remove(&mm);
                        }
                    }
                    q.insert(qm, qc);
                }
                None => {
                    r.insert(m, c);
                }
            }
        }
        (
            MultiPoly::from_map(g.vars.clone(), q),
            MultiPoly::from_map(g.vars.clone(), r),
        )
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &MultiPoly) -> Option<MultiPoly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero(merge_vars(&self.vars, &g.vars)));
        }
        if let Some(c) = g.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (f, g) = MultiPoly::aligned(self, g);
        for (i, _) in g.vars.iter().enumerate() {
            let dg = g.terms.keys().map(|m| m.0[i]).max().unwrap_or(0);
            let df = f.terms.keys().map(|m| m.0[i]).max().unwrap_or(0);
            if dg > df {
                return None;
            }
        }
        let (lm, lc) = g
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut p = f.terms;
        let mut q = BTreeMap::new();
        while let Some((m, c)) = p.pop_last() {
            let qm = m.checked_div(&lm)?;
            let qc = &c / &lc;
            for (gm, gc) in g.terms.iter().rev().skip(1) {
                let mm = gm.mul(&qm);
                let v = p.entry(mm.clone()).or_insert_with(Rat::zero);
                *v -= gc * &qc;
                if v.is_zero() {
                    p.remove(&mm);
                }
            }
            q.insert(qm, qc);
        }
        Some(MultiPoly::from_map(g.vars.clone(), q))
    }

    pub fn divides(&self, f: &MultiPoly) -> bool {
        f.div_exact(self).is_some()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.same_vars(other) {
            return self.terms == other.terms;
        }
        let (a, b) = MultiPoly::aligned(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        if !self.same_vars(rhs) {
            let (a, b) = MultiPoly::aligned(self, rhs);
            return &a + &b;
        }
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        if !self.same_vars(rhs) {
            let (a, b) = MultiPoly::aligned(self, rhs);
            return &a - &b;
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if !self.same_vars(rhs) {
            let (a, b) = MultiPoly::aligned(self, rhs);
            return &a * &b;
        }
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        // Multiply integer parts so the inner loop avoids rational normalization.
        let int_terms = |p: &MultiPoly| -> (Vec<(Monomial, BigInt)>, BigInt) {
            let mut den = BigInt::one();
            for c in p.terms.values().filter(|c| !c.denom().is_one()) {
                den = num_integer::Integer::lcm(&den, c.denom());
            }
            let terms = p
                .terms
                .iter()
                .map(|(m, c)| {
                    let n = if c.denom() == &den {
                        c.numer().clone()
                    } else {
                        c.numer() * (&den / c.denom())
                    };
                    (m.clone(), n)
                })
                .collect();
            (terms, den)
        };
        let ((ta, da), (tb, db)) = (int_terms(self), int_terms(rhs));
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(ta.len() * tb.len());
        for (m1, c1) in &ta {
            for (m2, c2) in &tb {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                (
                    m,
                    if den.is_one() {
                        Rat::from_integer(c)
                    } else {
                        Rat::new(c, den.clone())
                    },
                )
            })
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

fn fmt_rat_abs(c: &Rat) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending grlex order, e.g. `4*x^2 + 9*y^2 - z^2 - 4*x + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in m.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], k)),
                }
            }
            let coeff_is_one = c.abs().is_one();
            if factors.is_empty() {
                write!(f, "{}", fmt_rat_abs(c))?;
            } else if coeff_is_one {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat_abs(c), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::{int, rat};

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }
    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::from_int(n)
    }

    #[test]
    fn arithmetic_across_var_lists() {
        let p = &x() + &y();
        let q = &x() - &y();
        let prod = &p * &q;
        assert_eq!(prod, &x().pow(2) - &y().pow(2));
        assert_eq!(prod.to_string(), "x^2 - y^2");
    }

    #[test]
    fn display_matches_grlex_descending() {
        let z = MultiPoly::var("z");
        let p = &(&(&(&c(4) * &x().pow(2)) + &(&c(9) * &y().pow(2))) - &z.pow(2))
            + &(&(&c(-4) * &x()) + &(&(&c(-6) * &y()) + &c(2)));
        assert_eq!(p.to_string(), "4*x^2 + 9*y^2 - z^2 - 4*x - 6*y + 2");
        let q = x().scale(&rat(3, 4)) - c(1);
        assert_eq!(q.to_string(), "3/4*x - 1");
        assert_eq!((-x()).to_string(), "-x");
    }

    #[test]
    fn exact_division() {
        let a = &x().pow(3) - &y().pow(3);
        let b = &x() - &y();
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, &(&x().pow(2) + &(&x() * &y())) + &y().pow(2));
        assert!(a.div_exact(&(&x() + &c(1))).is_none());
    }

    #[test]
    fn divrem_reconstructs() {
        let a = &x().pow(3) + &(&y() * &x()) + c(5);
        let b = &x().pow(2) - y();
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn derivative_and_coeffs() {
        let p = &(&x().pow(2) * &y()) + &(&c(3) * &y());
        assert_eq!(p.derivative("x"), &c(2) * &(&x() * &y()));
        let cs = p.coeffs_in("x");
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], &c(3) * &y());
        assert!(cs[1].is_zero());
        assert_eq!(MultiPoly::from_coeffs_in("x", &cs), p);
    }

    #[test]
    fn eval_and_rename() {
        let p = &x().pow(2) + &y();
        assert_eq!(p.eval(&[("x", int(3)), ("y", int(-1))]), Some(int(8)));
        let r = p.rename("x", "t");
        assert_eq!(r, &MultiPoly::var("t").pow(2) + &y());
    }

    #[test]
    fn primitive_normalization() {
        let p = &x().scale(&rat(-2, 3)) + &MultiPoly::from_rat(rat(4, 9));
        assert_eq!(p.primitive(), &c(3) * &x() - c(2));
    }
}
