//! Multivariate gcd over Q: dense evaluation / interpolation in one variable
//! with recursive image gcds, falling back to recursive content splitting and
//! a primitive pseudo-remainder sequence.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::rat::Rat;
use super::univariate::UniPoly;

fn one_like(p: &MultiPoly) -> MultiPoly {
    MultiPoly::one(p.vars().clone())
}

/// Pseudo-remainder of `a` by `b` in `v`, with `deg_v b >= 1`.
fn prem(a: &MultiPoly, b: &MultiPoly, v: &str) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    let x = MultiPoly::var(v);
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.lc_in(v);
        let shift = x.pow((dr - db) as u32);
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
        r = r.primitive();
    }
    r
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`,
/// normalized to integer coefficients with positive leading coefficient.
pub fn content_in(p: &MultiPoly, v: &str) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut coeffs: Vec<MultiPoly> = p
        .coeffs_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| (c.total_degree(), c.nterms()));
    let mut g = coeffs[0].primitive();
    for c in &coeffs[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, c);
    }
    if g.is_constant() {
        one_like(p)
    } else {
        g
    }
}

/// `p / content_in(p, v)`.
pub fn primitive_part_in(p: &MultiPoly, v: &str) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").primitive()
}

/// Gcd of two polynomials over Q, primitive with positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        let (a, _) = MultiPoly::aligned(a, b);
        return one_like(&a);
    }
    let (a, b) = MultiPoly::aligned(a, b);
    let (small, big) = if (a.total_degree(), a.nterms()) <= (b.total_degree(), b.nterms()) {
        (&a, &b)
    } else {
        (&b, &a)
    };
    if big.div_exact(small).is_some() {
        return small.primitive();
    }
    let ua = a.used_vars();
    let ub = b.used_vars();
    let common: Vec<&String> = ua.iter().filter(|v| ub.contains(v)).collect();
    if common.is_empty() {
        return one_like(&a);
    }
    if let Some(v) = ua.iter().find(|v| !ub.contains(v)) {
        return gcd(&content_in(&a, v), &b);
    }
    if let Some(v) = ub.iter().find(|v| !ua.contains(v)) {
        return gcd(&a, &content_in(&b, v));
    }
    let v = common
        .iter()
        .min_by_key(|v| a.degree_in(v).max(b.degree_in(v)))
        .unwrap()
        .to_string();
    if common.len() >= 2 {
        let y = common
            .iter()
            .min_by_key(|v| a.degree_in(v).min(b.degree_in(v)))
            .unwrap()
            .to_string();
        if let Some(g) = gcd_dense(&a, &b, &y) {
            return g;
        }
    }
    let ca = content_in(&a, &v);
    let cb = content_in(&b, &v);
    let cg = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).unwrap();
    let mut q = b.div_exact(&cb).unwrap();
    if p.degree_in(&v) < q.degree_in(&v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        if q.degree_in(&v) == 0 {
            p = one_like(&a);
            break;
        }
        let r = prem(&p, &q, &v);
        p = q;
        q = if r.is_zero() {
            r
        } else {
            primitive_part_in(&r, &v)
        };
    }
    let pp = if p.degree_in(&v) == 0 {
        one_like(&a)
    } else {
        primitive_part_in(&p, &v)
    };
    (&cg * &pp).primitive()
}

/// Coefficients of `p` in `y`, keyed by the exponents of the other variables.
fn split_in(p: &MultiPoly, iy: usize) -> BTreeMap<Vec<u32>, UniPoly> {
    let mut dense: BTreeMap<Vec<u32>, Vec<Rat>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut e = m.exponents().to_vec();
        let k = e[iy] as usize;
        e[iy] = 0;
        let v = dense.entry(e).or_default();
        if v.len() <= k {
            v.resize(k + 1, Rat::zero());
        }
        v[k] = c.clone();
    }
    dense
        .into_iter()
        .map(|(k, v)| (k, UniPoly::new(v)))
        .collect()
}

fn join_in(vars: &super::vars::Vars, iy: usize, parts: &BTreeMap<Vec<u32>, UniPoly>) -> MultiPoly {
    let terms = parts.iter().flat_map(|(e, u)| {
        u.coeffs().iter().enumerate().map(move |(k, c)| {
            let mut e = e.clone();
            e[iy] = k as u32;
            (e, c.clone())
        })
    });
    MultiPoly::from_terms(vars.clone(), terms)
}

fn uni_content(parts: &BTreeMap<Vec<u32>, UniPoly>) -> UniPoly {
    parts.values().fold(UniPoly::zero(), |g, c| g.gcd(c))
}

fn divide_parts(parts: &BTreeMap<Vec<u32>, UniPoly>, d: &UniPoly) -> BTreeMap<Vec<u32>, UniPoly> {
    parts
        .iter()
        .map(|(k, c)| (k.clone(), c.divrem(d).0))
        .collect()
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rat], ys: &[Rat]) -> UniPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = UniPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let shift = UniPoly::new(vec![-xs[i].clone(), Rat::one()]);
        acc = &(&acc * &shift) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

/// Gcd by evaluating `y` at integer points, taking gcds of the images and
/// interpolating. `None` when the images never settle.
fn gcd_dense(a: &MultiPoly, b: &MultiPoly, y: &str) -> Option<MultiPoly> {
    let vars = a.vars().clone();
    let iy = a.var_index(y)?;
    let (sa, sb) = (split_in(a, iy), split_in(b, iy));
    let (ca, cb) = (uni_content(&sa), uni_content(&sb));
    let cg = ca.gcd(&cb);
    let (sa, sb) = (divide_parts(&sa, &ca), divide_parts(&sb, &cb));
    let (pa, pb) = (join_in(&vars, iy, &sa), join_in(&vars, iy, &sb));
    let la = sa.last_key_value()?.1.clone();
    let lb = sb.last_key_value()?.1.clone();
    let gamma = la.gcd(&lb);
    let need = (gamma.degree() + pa.degree_in(y).min(pb.degree_in(y)) + 1) as usize;
    let cg = cg.to_multi(y).with_vars(&vars);

    let mut lm: Option<Vec<u32>> = None;
    let mut xs: Vec<Rat> = Vec::new();
    let mut images: Vec<BTreeMap<Vec<u32>, UniPoly>> = Vec::new();
    for k in 1..(need as i64 + 60) {
        let y0 = Rat::from_integer(
            (if k % 2 == 1 {
                k.div_euclid(2) + 1
            } else {
                -k / 2
            })
            .into(),
        );
        if la.eval(&y0).is_zero() || lb.eval(&y0).is_zero() {
            continue;
        }
        let gi = gcd(
            &pa.eval_partial(&[(y, y0.clone())]),
            &pb.eval_partial(&[(y, y0.clone())]),
        );
        if gi.is_constant() {
            return Some(cg.primitive());
        }
        let parts = split_in(&gi.with_vars(&vars), iy);
        let (key, lc) = parts.last_key_value()?;
        match lm.as_ref().map(|m| key.cmp(m)) {
            Some(std::cmp::Ordering::Greater) => continue,
            Some(std::cmp::Ordering::Less) | None => {
                lm = Some(key.clone());
                xs.clear();
                images.clear();
            }
            Some(std::cmp::Ordering::Equal) => {}
        }
        let scale = gamma.eval(&y0) / lc.coeff(0);
        images.push(
            parts
                .iter()
                .map(|(k, c)| (k.clone(), c.scale(&scale)))
                .collect(),
        );
        xs.push(y0);
        if images.len() < need {
            continue;
        }
        let keys: std::collections::BTreeSet<&Vec<u32>> =
            images.iter().flat_map(|m| m.keys()).collect();
        let mut g: BTreeMap<Vec<u32>, UniPoly> = BTreeMap::new();
        for key in keys {
            let ys: Vec<Rat> = images
                .iter()
                .map(|m| m.get(key).map(|c| c.coeff(0)).unwrap_or_else(Rat::zero))
                .collect();
            g.insert(key.clone(), interpolate(&xs, &ys));
        }
        let g = divide_parts(&g, &uni_content(&g));
        let g = join_in(&vars, iy, &g);
        if pa.div_exact(&g).is_some() && pb.div_exact(&g).is_some() {
            return Some((&cg * &g).primitive());
        }
        if images.len() > need + 3 {
            return None;
        }
    }
    None
}

pub fn gcd_many<'a, I: IntoIterator<Item = &'a MultiPoly>>(polys: I) -> Option<MultiPoly> {
    let mut it = polys.into_iter();
    let mut g = it.next()?.primitive();
    for p in it {
        if g.is_one() {
            break;
        }
        g = gcd(&g, p);
    }
    Some(g)
}

pub fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        let (a, _) = MultiPoly::aligned(a, b);
        return MultiPoly::zero(a.vars().clone());
    }
    let g = gcd(a, b);
    (a.div_exact(&g).unwrap() * b).primitive()
}

/// Product of the distinct irreducible factors of `p`, up to a rational scalar
/// (returned primitive). Constants map to `1`.
pub fn squarefree_part(p: &MultiPoly) -> MultiPoly {
    if p.is_constant() {
        return MultiPoly::constant(Rat::one(), p.vars().clone());
    }
    let used = p.used_vars();
    let v = used.iter().min_by_key(|v| p.degree_in(v)).unwrap().clone();
    let c = content_in(p, &v);
    let pp = p.div_exact(&c).unwrap();
    let g = gcd(&pp, &pp.derivative(&v));
    let part = pp.div_exact(&g).unwrap();
    (&squarefree_part(&c) * &part).primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::int;

    fn v(n: &str) -> MultiPoly {
        MultiPoly::var(n)
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::from_int(n)
    }

    #[test]
    fn gcd_shares_factor() {
        let f = &v("x") + &v("y");
        let g1 = &f * &(&v("x") - c(1));
        let g2 = &f * &(&v("y") + &v("z"));
        assert_eq!(gcd(&g1, &g2), f);
    }

    #[test]
    fn gcd_with_content() {
        let a = &(&v("y") * &v("x")) + &v("y");
        let b = &(&v("y") * &v("y")) + &v("y");
        assert_eq!(gcd(&a, &b), v("y"));
    }

    #[test]
    fn gcd_is_primitive_positive() {
        let a = (&v("x") - c(1)).scale(&int(-6));
        let b = (&v("x") - c(1)).scale(&int(4));
        assert_eq!(gcd(&a, &b), &v("x") - c(1));
    }

    #[test]
    fn coprime() {
        let a = &v("x").pow(2) + c(1);
        let b = &v("x") + &v("y");
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn squarefree_keeps_factors_free_of_main_variable() {
        let a = &v("x") - &v("y");
        let b = &v("y") + c(2);
        let c3 = &v("z") - c(1);
        let p = &(&a.pow(2) * &b.pow(3)) * &c3;
        let expected = (&(&a * &b) * &c3).primitive();
        assert_eq!(squarefree_part(&p), expected);
    }

    #[test]
    fn squarefree_constant_is_one() {
        assert!(squarefree_part(&c(12)).is_one());
    }
}
