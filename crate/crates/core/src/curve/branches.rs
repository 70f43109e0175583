//! Rational branches `y = r(x)` of a plane curve `f(x, y) = 0`, found by
//! Newton lifting at a rational point followed by Pade reconstruction.

use num_traits::{One, Zero};

use crate::poly::linalg::nullspace;
use crate::poly::{substitute_numerator, MultiPoly, Rat, RatFunc, UniPoly};

use super::points::small_rationals;

/// Truncated power series in `tau`, coefficients low to high.
type Series = Vec<Rat>;

fn mul_trunc(a: &[Rat], b: &[Rat], n: usize) -> Series {
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn inv_trunc(a: &[Rat], n: usize) -> Series {
    let mut out = vec![Rat::zero(); n];
    let a0 = a[0].recip();
    out[0] = a0.clone();
    for k in 1..n {
        let mut acc = Rat::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc += &a[j] * &out[k - j];
        }
        out[k] = -acc * &a0;
    }
    out
}

/// `sum_k c_k(tau) * y^k` evaluated at the series `y`.
fn eval_series(coeffs: &[Series], y: &[Rat], n: usize) -> Series {
    let mut acc = vec![Rat::zero(); n];
    for c in coeffs.iter().rev() {
        acc = mul_trunc(&acc, y, n);
        for (a, b) in acc.iter_mut().zip(c) {
            *a += b;
        }
    }
    acc
}

/// Coefficients of `f(x0 + tau, y)` in `y`, each a polynomial in `tau`.
fn shifted_coeffs(f: &MultiPoly, x: &str, y: &str, x0: &Rat) -> Option<Vec<Series>> {
    let shift = RatFunc::from_poly(&MultiPoly::var(x) + &MultiPoly::from_rat(x0.clone()));
    let g = substitute_numerator(f, &[(x.to_string(), shift)]);
    g.coeffs_in(y)
        .iter()
        .map(|c| UniPoly::from_multi(c, x).ok().map(|u| u.coeffs().to_vec()))
        .collect()
}

/// Power series of the branch through `(x0, y0)`, to `n` terms.
fn newton_series(coeffs: &[Series], dcoeffs: &[Series], y0: &Rat, n: usize) -> Series {
    let mut y = vec![Rat::zero(); n];
    y[0] = y0.clone();
    let mut prec = 1;
    while prec < n {
        prec = (2 * prec).min(n);
        let fv = eval_series(coeffs, &y, prec);
        let dv = eval_series(dcoeffs, &y, prec);
        let step = mul_trunc(&fv, &inv_trunc(&dv, prec), prec);
        for (a, b) in y.iter_mut().zip(step) {
            *a -= b;
        }
    }
    y
}

/// Rational function `p/q` with `deg p, deg q <= m` matching `s` to order `2m + 1`.
fn pade(s: &[Rat], m: usize) -> Option<(UniPoly, UniPoly)> {
    let rows: Vec<Vec<Rat>> = (m + 1..=2 * m)
        .map(|k| {
            (0..=m)
                .map(|j| {
                    if j <= k {
                        s[k - j].clone()
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    let q = if m == 0 {
        vec![Rat::one()]
    } else {
        nullspace(&rows, m + 1)
            .into_iter()
            .find(|v| !v[0].is_zero())?
    };
    let p: Vec<Rat> = (0..=m)
        .map(|k| (0..=k).map(|j| &q[j] * &s[k - j]).sum())
        .collect();
    Some((UniPoly::new(p), UniPoly::new(q)))
}

/// Rational branches `y = r(x)` of `f`, i.e. factors of `f` linear in `y`.
pub fn rational_branches(f: &MultiPoly, x: &str, y: &str) -> Vec<RatFunc> {
    let mut f = f.clone();
    let mut out: Vec<RatFunc> = Vec::new();
    let max_deg = f.degree_in(x).max(0) as usize;
    for x0 in small_rationals(20, 80) {
        if f.degree_in(y) < 1 {
            break;
        }
        if f.degree_in(y) == 1 {
            let c = f.coeffs_in(y);
            if let Ok(r) = RatFunc::new(-c[0].clone(), c[1].clone()) {
                out.push(r);
            }
            break;
        }
        let Some(coeffs) = shifted_coeffs(&f, x, y, &x0) else {
            break;
        };
        if coeffs
            .last()
            .is_none_or(|c| c.first().is_none_or(Zero::is_zero))
        {
            continue;
        }
        let at: Vec<Rat> = coeffs
            .iter()
            .map(|c| c.first().cloned().unwrap_or_else(Rat::zero))
            .collect();
        let at = UniPoly::new(at);
        let dat = at.derivative();
        let Some(roots) = at.rational_roots() else {
            continue;
        };
        let dcoeffs: Vec<Series> = (1..coeffs.len())
            .map(|k| {
                coeffs[k]
                    .iter()
                    .map(|c| c * Rat::from_integer(k.into()))
                    .collect()
            })
            .collect();
        for y0 in roots {
            if dat.eval(&y0).is_zero() {
                continue;
            }
            let n = 2 * max_deg + 2;
            let series = newton_series(&coeffs, &dcoeffs, &y0, n);
            for m in 0..=max_deg {
                let Some((p, q)) = pade(&series, m) else {
                    continue;
                };
                let back = |u: &UniPoly| {
                    let shift =
                        RatFunc::from_poly(&MultiPoly::var(x) - &MultiPoly::from_rat(x0.clone()));
                    crate::poly::substitute(&u.to_multi(x), &[(x.to_string(), shift)])
                        .expect("polynomial substitution")
                };
                let Ok(r) = back(&p).checked_div(&back(&q)) else {
                    continue;
                };
                let lin = &(&MultiPoly::var(y) * r.denom()) - r.numer();
                if let Some(rest) = f.div_exact(&lin) {
                    out.push(r);
                    f = rest;
                    break;
                }
            }
        }
    }
    out
}
