use std::collections::BTreeMap;

use super::error::PolyError;
use super::multipoly::MultiPoly;
use super::ratfunc::RatFunc;

/// Variable-to-rational-function assignments for [`substitute`].
pub type Bindings = [(String, RatFunc)];

struct PowCache {
    base: MultiPoly,
    powers: Vec<MultiPoly>,
}

impl PowCache {
    fn new(base: MultiPoly) -> Self {
        let one = MultiPoly::one(base.vars().clone());
        PowCache {
            base,
            powers: vec![one],
        }
    }

    fn get(&mut self, k: usize) -> &MultiPoly {
        while self.powers.len() <= k {
            let next = self.powers.last().unwrap() * &self.base;
            self.powers.push(next);
        }
        &self.powers[k]
    }
}

/// Numerator `N` and denominator `D` (not reduced) with `p(bindings) = N / D`.
fn substitute_parts(p: &MultiPoly, bindings: &Bindings) -> (MultiPoly, MultiPoly) {
    let bound: Vec<(usize, &RatFunc)> = bindings
        .iter()
        .filter_map(|(n, r)| p.var_index(n).map(|i| (i, r)))
        .collect();
    if bound.is_empty() || p.is_zero() {
        return (p.clone(), MultiPoly::one(p.vars().clone()));
    }

    // Group terms by the exponent tuple of the bound variables.
    let mut groups: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key: Vec<u32> = bound.iter().map(|(i, _)| m.exponents()[*i]).collect();
        let mut rest: Vec<u32> = m.exponents().to_vec();
        for (i, _) in &bound {
            rest[*i] = 0;
        }
        let entry = groups
            .entry(key)
            .or_insert_with(|| MultiPoly::zero(p.vars().clone()));
        entry.add_term(super::monomial::Monomial(rest), c.clone());
    }
    let shared_den = bound.windows(2).all(|w| w[0].1.denom() == w[1].1.denom());
    if shared_den {
        let den = bound[0].1.denom().clone();
        let total = groups
            .keys()
            .map(|k| k.iter().sum::<u32>())
            .max()
            .unwrap_or(0) as usize;
        let mut nums: Vec<PowCache> = bound
            .iter()
            .map(|(_, r)| PowCache::new(r.numer().clone()))
            .collect();
        let mut dens = PowCache::new(den);
        let mut acc: Option<MultiPoly> = None;
        for (key, coeff) in &groups {
            let mut term = coeff.clone();
            for (j, &e) in key.iter().enumerate() {
                if e > 0 {
                    term = &term * nums[j].get(e as usize);
                }
            }
            let used: u32 = key.iter().sum();
            let pad = total - used as usize;
            if pad > 0 {
                term = &term * dens.get(pad);
            }
            acc = Some(match acc {
                None => term,
                Some(a) => &a + &term,
            });
        }
        let num = acc.unwrap();
        let d = dens.get(total).clone();
        return (num, d);
    }

    let degs: Vec<usize> = (0..bound.len())
        .map(|j| groups.keys().map(|k| k[j]).max().unwrap_or(0) as usize)
        .collect();
    let mut nums: Vec<PowCache> = bound
        .iter()
        .map(|(_, r)| PowCache::new(r.numer().clone()))
        .collect();
    let mut dens: Vec<PowCache> = bound
        .iter()
        .map(|(_, r)| PowCache::new(r.denom().clone()))
        .collect();
    let mut acc: Option<MultiPoly> = None;
    for (key, coeff) in &groups {
        let mut term = coeff.clone();
        for (j, &e) in key.iter().enumerate() {
            let e = e as usize;
            if e > 0 {
                term = &term * nums[j].get(e);
            }
            if degs[j] > e {
                term = &term * dens[j].get(degs[j] - e);
            }
        }
        acc = Some(match acc {
            None => term,
            Some(a) => &a + &term,
        });
    }
    let mut d: Option<MultiPoly> = None;
    for (j, k) in degs.iter().enumerate() {
        let f = dens[j].get(*k).clone();
        d = Some(match d {
            None => f,
            Some(x) => &x * &f,
        });
    }
    (acc.unwrap(), d.unwrap())
}

/// Replace variables of `p` by rational functions.
pub fn substitute(p: &MultiPoly, bindings: &Bindings) -> Result<RatFunc, PolyError> {
    let (n, d) = substitute_parts(p, bindings);
    RatFunc::new(n, d)
}

/// Numerator of `p(bindings)` before reduction; zero exactly when the
/// substitution vanishes identically.
pub fn substitute_numerator(p: &MultiPoly, bindings: &Bindings) -> MultiPoly {
    substitute_parts(p, bindings).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> RatFunc {
        RatFunc::var(n)
    }

    #[test]
    fn substitute_rational_curve_into_circle() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let circle = &(&x.pow(2) + &y.pow(2)) - &MultiPoly::from_int(1);
        let t = v("t");
        let one = RatFunc::from_int(1);
        let two = RatFunc::from_int(2);
        let den = &t.pow(2) + &one;
        let bx = &(&one - &t.pow(2)) / &den;
        let by = &(&two * &t) / &den;
        let b = vec![("x".to_string(), bx), ("y".to_string(), by)];
        assert!(substitute(&circle, &b).unwrap().is_zero());
        assert!(substitute_numerator(&circle, &b).is_zero());
    }

    #[test]
    fn substitute_distinct_denominators() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let z = MultiPoly::var("z");
        let p = &(&x * &y) + &z;
        let b = vec![
            ("x".to_string(), &RatFunc::from_int(1) / &v("t")),
            (
                "y".to_string(),
                &v("t").pow(2) / &(&v("t") + &RatFunc::from_int(1)),
            ),
        ];
        let r = substitute(&p, &b).unwrap();
        let expected = &(&v("t") / &(&v("t") + &RatFunc::from_int(1))) + &v("z");
        assert_eq!(r, expected);
    }
}
