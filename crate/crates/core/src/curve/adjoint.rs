//! Rational curves of degree `d` whose singularities are `(d-1)(d-2)/2`
//! double points, possibly conjugate over a number field.
//!
//! The double points are kept as a squarefree `U(u)` together with
//! `v = V(u) mod U`. Adjoints of degree `d - 2` through them and through
//! `d - 3` rational smooth points form a pencil `A0 + t*A1`; each member
//! meets the curve in exactly one further point, which is rational in `t`.

use crate::poly::linalg::nullspace;
use crate::poly::{
    content_in, resultant, subresultant_linear, substitute, substitute_numerator, MultiPoly, Rat,
    RatFunc, UniPoly,
};

use super::points::find_rational_points;
use super::{
    finish_plane, pair_satisfies, CurveConfig, CurveError, CurveParam, PlaneCurve, PlanePair,
};

const SHEARS: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];

fn to_uni(p: &MultiPoly, u: &str) -> Result<UniPoly, CurveError> {
    UniPoly::from_multi(p, u).map_err(CurveError::from)
}

/// `h(u, V(u)) mod U`.
fn reduce_on_points(
    h: &MultiPoly,
    u: &str,
    v: &str,
    vpoly: &UniPoly,
    umod: &UniPoly,
) -> Result<UniPoly, CurveError> {
    let b = vec![(v.to_string(), RatFunc::from_poly(vpoly.to_multi(u)))];
    let val = substitute_numerator(h, &b);
    Ok(to_uni(&val, u)?.rem(umod))
}

/// Double points as `(U, V)`, or an error if they cannot be separated by `u`.
fn double_points(g: &MultiPoly, u: &str, v: &str) -> Result<(UniPoly, UniPoly), CurveError> {
    let gu = g.derivative(u);
    let gv = g.derivative(v);
    let r1 = to_uni(&resultant(g, &gu, v)?, u)?;
    let r2 = to_uni(&resultant(g, &gv, v)?, u)?;
    let mut umod = r1.gcd(&r2).squarefree();
    if umod.degree() < 1 {
        return Err(CurveError::Unsupported("no affine singular points".into()));
    }
    let (p, q) = subresultant_linear(g, &gv, v)?;
    let (p, q) = (to_uni(&p, u)?, to_uni(&q, u)?);
    let pinv = p
        .inverse_mod(&umod)
        .ok_or_else(|| CurveError::Unsupported("singular points share an abscissa".into()))?;
    let vpoly = (&(-&q) * &pinv).rem(&umod);
    for h in [g, &gu, &gv] {
        let r = reduce_on_points(h, u, v, &vpoly, &umod)?;
        if !r.is_zero() {
            umod = umod.gcd(&r);
        }
    }
    let vpoly = vpoly.rem(&umod);
    Ok((umod, vpoly))
}

fn monomials(u: &str, v: &str, deg: u32) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for total in 0..=deg {
        for i in (0..=total).rev() {
            out.push(&MultiPoly::var(u).pow(i) * &MultiPoly::var(v).pow(total - i));
        }
    }
    out
}

fn attempt(
    g: &MultiPoly,
    u: &str,
    v: &str,
    hints: &CurveConfig,
    param: &str,
) -> Result<PlanePair, CurveError> {
    let d = g.total_degree() as usize;
    let delta = (d - 1) * (d - 2) / 2;
    let (umod, vpoly) = double_points(g, u, v)?;
    if umod.degree() as usize != delta {
        return Err(CurveError::Unsupported(format!(
            "expected {delta} double points, found {}",
            umod.degree()
        )));
    }
    let simple = find_rational_points(g, u, v, hints, d - 3, true);
    if simple.len() < d - 3 {
        return Err(CurveError::Unsupported(
            "not enough rational smooth points".into(),
        ));
    }
    let basis = monomials(u, v, (d - 2) as u32);
    let mut rows: Vec<Vec<Rat>> = vec![Vec::with_capacity(basis.len()); delta];
    for m in &basis {
        let r = reduce_on_points(m, u, v, &vpoly, &umod)?;
        for (k, row) in rows.iter_mut().enumerate() {
            row.push(r.coeff(k));
        }
    }
    for (a, b) in &simple {
        rows.push(
            basis
                .iter()
                .map(|m| {
                    m.eval(&[(u, a.clone()), (v, b.clone())])
                        .unwrap_or_default()
                })
                .collect(),
        );
    }
    let kernel = nullspace(&rows, basis.len());
    if kernel.len() != 2 {
        return Err(CurveError::Unsupported(format!(
            "adjoint pencil has dimension {}",
            kernel.len()
        )));
    }
    let combine = |coeffs: &[Rat]| -> MultiPoly {
        let mut acc = MultiPoly::zero(g.vars().clone());
        for (m, c) in basis.iter().zip(coeffs) {
            acc = &acc + &m.scale(c);
        }
        acc
    };
    let a0 = combine(&kernel[0]);
    let a1 = combine(&kernel[1]);
    let at = &a0 + &(&MultiPoly::var(param) * &a1);

    let res = resultant(g, &at, v)?;
    let cont = content_in(&res, param);
    let moving = res.div_exact(&cont).expect("content divides");
    if moving.degree_in(u) != 1 {
        return Err(CurveError::Unsupported(
            "adjoint pencil does not isolate a moving point".into(),
        ));
    }
    let cs = moving.coeffs_in(u);
    let uu = RatFunc::new(-cs[0].clone(), cs[1].clone())?;

    let bu = vec![(u.to_string(), uu.clone())];
    let gg = substitute(g, &bu)?.numer().clone();
    let bb = substitute(&at, &bu)?.numer().clone();
    let vv = match bb.degree_in(v) {
        1 => {
            let c = bb.coeffs_in(v);
            RatFunc::new(-c[0].clone(), c[1].clone())?
        }
        k if k >= 2 => {
            let (p, q) = subresultant_linear(&gg, &bb, v)?;
            if p.is_zero() {
                return Err(CurveError::Unsupported(
                    "moving point not determined".into(),
                ));
            }
            RatFunc::new(-q, p)?
        }
        _ => return Err(CurveError::Unsupported("degenerate adjoint".into())),
    };
    let pair = (uu, vv);
    if !pair_satisfies(g, u, v, &pair) {
        return Err(CurveError::Unsupported(
            "adjoint parametrization failed verification".into(),
        ));
    }
    Ok(pair)
}

/// Parametrize via adjoints, shearing `u -> u + k*v` when needed so that the
/// curve has no vertical asymptotes and its double points have distinct abscissae.
pub fn parametrize_adjoint(
    c: &PlaneCurve,
    cfg: &CurveConfig,
    param: &str,
) -> Result<CurveParam, CurveError> {
    let f = &c.poly;
    let d = f.total_degree();
    if d < 3 {
        return Err(CurveError::Unsupported(
            "adjoints need degree at least 3".into(),
        ));
    }
    let (u, v) = (c.u.as_str(), c.v.as_str());
    let mut last = CurveError::Unsupported("no admissible shear".into());
    for k in SHEARS {
        let kr = Rat::from_integer(k.into());
        let shifted = &MultiPoly::var(u) + &MultiPoly::var(v).scale(&kr);
        let g = substitute(f, &[(u.to_string(), RatFunc::from_poly(shifted))])?
            .numer()
            .clone();
        if !g.lc_in(v).is_constant() {
            continue;
        }
        let hints = CurveConfig {
            hints: cfg
                .hints
                .iter()
                .map(|(a, b)| (a - &kr * b, b.clone()))
                .collect(),
            ..cfg.clone()
        };
        match attempt(&g, u, v, &hints, param) {
            Ok((pu, pv)) => {
                let back = (&pu + &pv.scale(&kr), pv);
                return finish_plane(c, back, param);
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn quartic_with_conjugate_nodes() {
        // section z = 0 of a cylinder whose three double points are conjugate
        let f = parse_poly(
            "x^4 + 4*x^3*y + 6*x^2*y^2 + 4*x*y^3 + y^4 - 10*x^3 - 27*x^2*y - 18*x*y^2 - 2*y^3 \
             + 16*x^2 + 8*x*y + 16*y^2 + 64*x - 32*y",
            &["x", "y"],
        )
        .unwrap();
        let c = PlaneCurve::new(f.clone(), "x", "y");
        let p = parametrize_adjoint(&c, &CurveConfig::default(), "t").unwrap();
        assert!(p.satisfies(&f));
        assert!(p.proper);
    }

    #[test]
    fn nodal_cubic() {
        let f = parse_poly("y^2 - x^2*(x + 1)", &["x", "y"]).unwrap();
        let c = PlaneCurve::new(f.clone(), "x", "y");
        let p = parametrize_adjoint(&c, &CurveConfig::default(), "t").unwrap();
        assert!(p.satisfies(&f));
        assert!(p.proper);
    }

    #[test]
    fn smooth_cubic_rejected() {
        let f = parse_poly("y^2 - x^3 - x - 1", &["x", "y"]).unwrap();
        let c = PlaneCurve::new(f, "x", "y");
        assert!(parametrize_adjoint(&c, &CurveConfig::default(), "t").is_err());
    }
}
