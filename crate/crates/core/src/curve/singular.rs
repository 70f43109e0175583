//! Curves of degree `d` with a rational point of multiplicity `d - 1`,
//! parametrized by the pencil of lines through that point.

use num_traits::{One, Zero};

use crate::poly::{fresh_var, gcd_many, resultant, substitute, MultiPoly, Rat, RatFunc, UniPoly};

use super::{
    finish_plane, pair_degree, pair_satisfies, CurveError, CurveParam, PlaneCurve, PlanePair,
};

/// All partial derivatives of `f` of order at most `k`, without zeros or repeats.
fn partials_up_to(f: &MultiPoly, u: &str, v: &str, k: u32) -> Vec<MultiPoly> {
    let mut out: Vec<MultiPoly> = Vec::new();
    let mut layer = vec![f.clone()];
    for _ in 0..=k {
        let mut next = Vec::new();
        for p in &layer {
            if p.is_zero() || out.contains(p) {
                continue;
            }
            out.push(p.clone());
            next.push(p.derivative(u));
            next.push(p.derivative(v));
        }
        layer = next;
    }
    out
}

/// Rational common zeros of a set of bivariate polynomials.
pub(crate) fn common_rational_zeros(polys: &[MultiPoly], u: &str, v: &str) -> Vec<(Rat, Rat)> {
    let mut eliminants: Vec<MultiPoly> = Vec::new();
    let with_v: Vec<&MultiPoly> = polys.iter().filter(|p| p.contains_var(v)).collect();
    for p in polys.iter().filter(|p| !p.contains_var(v)) {
        eliminants.push(p.clone());
    }
    if let Some(base) = with_v.iter().min_by_key(|p| (p.total_degree(), p.nterms())) {
        for q in &with_v {
            if std::ptr::eq(*q, *base) {
                continue;
            }
            if let Ok(r) = resultant(base, q, v) {
                if !r.is_zero() {
                    eliminants.push(r);
                }
            }
            if eliminants.len() >= 4 {
                break;
            }
        }
    }
    let Some(h) = gcd_many(eliminants.iter()) else {
        return vec![];
    };
    if h.is_zero() || h.is_constant() {
        return vec![];
    }
    let Ok(hu) = UniPoly::from_multi(&h, u) else {
        return vec![];
    };
    let Some(us) = hu.rational_roots() else {
        return vec![];
    };
    let mut out = Vec::new();
    for a in us {
        let mut g: Option<UniPoly> = None;
        for p in polys {
            let q = p.eval_partial(&[(u, a.clone())]);
            let Ok(uq) = UniPoly::from_multi(&q, v) else {
                continue;
            };
            g = Some(match g {
                None => uq,
                Some(acc) => acc.gcd(&uq),
            });
        }
        let Some(g) = g else { continue };
        if g.is_zero() {
            continue;
        }
        for b in g.rational_roots().unwrap_or_default() {
            let at = [(u, a.clone()), (v, b.clone())];
            if polys
                .iter()
                .all(|p| p.eval(&at).is_some_and(|r| r.is_zero()))
            {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// Substitute `(u, v) = base + l * dir` (each entry a rational function of
/// `param`) and solve for `l` when, after removing `l^m`, the result is linear.
fn solve_pencil(
    f: &MultiPoly,
    u: &str,
    v: &str,
    base: (RatFunc, RatFunc),
    dir: (RatFunc, RatFunc),
    param: &str,
) -> Option<PlanePair> {
    let taken: Vec<String> = f
        .vars()
        .iter()
        .cloned()
        .chain([param.to_string()])
        .collect();
    let l = fresh_var("lambda", &taken);
    let lv = RatFunc::var(&l);
    let bu = &base.0 + &(&dir.0 * &lv);
    let bv = &base.1 + &(&dir.1 * &lv);
    let g = substitute(f, &[(u.to_string(), bu), (v.to_string(), bv)]).ok()?;
    let g = g.numer().clone();
    let low = g.min_degree_in(&l) as usize;
    let cs = g.coeffs_in(&l);
    if cs.len() != low + 2 {
        return None;
    }
    let lam = RatFunc::new(-cs[low].clone(), cs[low + 1].clone()).ok()?;
    let pu = &base.0 + &(&dir.0 * &lam);
    let pv = &base.1 + &(&dir.1 * &lam);
    let pair = (pu, pv);
    (pair_satisfies(f, u, v, &pair) && pair_degree(&pair, param) > 0).then_some(pair)
}

fn pencils_at_point(
    f: &MultiPoly,
    u: &str,
    v: &str,
    p: &(Rat, Rat),
    param: &str,
) -> Vec<PlanePair> {
    let t = RatFunc::var(param);
    let one = RatFunc::from_int(1);
    let base = (
        RatFunc::from_rat(p.0.clone()),
        RatFunc::from_rat(p.1.clone()),
    );
    [(one.clone(), t.clone()), (t, one)]
        .into_iter()
        .filter_map(|dir| solve_pencil(f, u, v, base.clone(), dir, param))
        .collect()
}

/// Rational directions `(a, b)` along which the top-degree form vanishes.
fn rational_directions(top: &MultiPoly, u: &str, v: &str) -> Vec<(Rat, Rat)> {
    let mut out = Vec::new();
    let at_m = top.eval_partial(&[(v, Rat::one())]);
    if let Ok(uni) = UniPoly::from_multi(&at_m, u) {
        for m in uni.rational_roots().unwrap_or_default() {
            out.push((m, Rat::one()));
        }
    }
    if top
        .eval(&[(u, Rat::one()), (v, Rat::zero())])
        .is_some_and(|r| r.is_zero())
    {
        out.push((Rat::one(), Rat::zero()));
    }
    out
}

fn pencils_at_infinity(f: &MultiPoly, u: &str, v: &str, param: &str) -> Vec<PlanePair> {
    let d = f.total_degree() as u32;
    let top = f.homogeneous_part(d);
    let t = RatFunc::var(param);
    let zero = RatFunc::from_int(0);
    rational_directions(&top, u, v)
        .into_iter()
        .filter_map(|(a, b)| {
            let base = if b.is_zero() {
                (zero.clone(), t.clone())
            } else {
                (t.clone(), zero.clone())
            };
            let dir = (RatFunc::from_rat(a), RatFunc::from_rat(b));
            solve_pencil(f, u, v, base, dir, param)
        })
        .collect()
}

/// Parametrize a degree-`d` curve with a rational `(d-1)`-fold point, affine
/// or at infinity, choosing the lowest-degree result.
pub fn parametrize_monomial_like(c: &PlaneCurve, param: &str) -> Result<CurveParam, CurveError> {
    let f = &c.poly;
    let d = f.total_degree();
    if d < 2 {
        return Err(CurveError::Unsupported("degree below 2".into()));
    }
    let (u, v) = (c.u.as_str(), c.v.as_str());
    let mut candidates: Vec<PlanePair> = Vec::new();
    let conds = partials_up_to(f, u, v, (d - 2) as u32);
    for p in common_rational_zeros(&conds, u, v) {
        candidates.extend(pencils_at_point(f, u, v, &p, param));
    }
    candidates.extend(pencils_at_infinity(f, u, v, param));
    let best = candidates
        .into_iter()
        .min_by_key(|p| {
            let rational = !p.0.is_polynomial() as u8 + !p.1.is_polynomial() as u8;
            (
                pair_degree(p, param),
                rational,
                p.0.numer().nterms() + p.1.numer().nterms(),
            )
        })
        .ok_or_else(|| CurveError::Unsupported(format!("no rational {}-fold point", d - 1)))?;
    finish_plane(c, best, param)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn curve(s: &str, u: &str, v: &str) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s, &[u, v]).unwrap(), u, v)
    }

    #[test]
    fn cuspidal_cubic_gets_monomial_map() {
        let c = curve("y^2 - z^3", "y", "z");
        let p = parametrize_monomial_like(&c, "t").unwrap();
        assert!(p.proper);
        assert_eq!(p.comps[0], RatFunc::var("t").pow(3));
        assert_eq!(p.comps[1], RatFunc::var("t").pow(2));
    }

    #[test]
    fn edge_projection_cubic() {
        let c = curve("4*y^3 - 2*z + 6*y*z + z^2", "y", "z");
        let p = parametrize_monomial_like(&c, "t").unwrap();
        assert!(p.proper);
        assert!(p.satisfies(&c.poly));
    }

    #[test]
    fn triple_point_at_infinity() {
        let c = curve("y - x^3 + x", "x", "y");
        let p = parametrize_monomial_like(&c, "t").unwrap();
        assert_eq!(p.degree(), 3);
        assert!(p.satisfies(&c.poly));
    }

    #[test]
    fn smooth_cubic_is_unsupported() {
        let c = curve("y^2 - x^3 - x - 1", "x", "y");
        assert!(matches!(
            parametrize_monomial_like(&c, "t"),
            Err(CurveError::Unsupported(_))
        ));
    }

    #[test]
    fn quartic_with_triple_point() {
        let c = curve("x^4 + y^4 - x*y^2 + x^3", "x", "y");
        let p = parametrize_monomial_like(&c, "t").unwrap();
        assert!(p.proper);
        assert!(p.satisfies(&c.poly));
    }
}
