use num_traits::Zero;

use crate::poly::{fresh_var, substitute, MultiPoly, Rat, RatFunc};

use super::points::find_rational_points;
use super::{finish_plane, CurveConfig, CurveError, CurveParam, PlaneCurve};

/// Parametrize a conic by the pencil of lines through a rational point.
pub fn parametrize_conic(
    c: &PlaneCurve,
    cfg: &CurveConfig,
    param: &str,
) -> Result<CurveParam, CurveError> {
    let f = &c.poly;
    if f.total_degree() != 2 {
        return Err(CurveError::Unsupported("not a conic".into()));
    }
    if conic_discriminant(f, &c.u, &c.v).is_zero() {
        return Err(CurveError::Reducible);
    }
    let pts = find_rational_points(f, &c.u, &c.v, cfg, 1, true);
    let Some(p) = pts.into_iter().next() else {
        let any = find_rational_points(f, &c.u, &c.v, cfg, 1, false);
        return Err(if any.is_empty() {
            CurveError::NoRationalPoint
        } else {
            CurveError::Reducible
        });
    };
    let pair = pencil_through(f, &c.u, &c.v, &p, param)?;
    finish_plane(c, pair, param)
}

/// Determinant of the symmetric 3x3 matrix of the homogenized conic; zero
/// exactly for line pairs and double lines.
pub(crate) fn conic_discriminant(f: &MultiPoly, u: &str, v: &str) -> Rat {
    let half = Rat::new(1.into(), 2.into());
    let zero = [(u, Rat::zero()), (v, Rat::zero())];
    let d2 = |a: &str, b: &str| {
        f.derivative(a)
            .derivative(b)
            .eval(&zero)
            .unwrap_or_default()
            * &half
    };
    let d1 = |a: &str| f.derivative(a).eval(&zero).unwrap_or_default() * &half;
    let m = [
        [d2(u, u), d2(u, v), d1(u)],
        [d2(u, v), d2(v, v), d1(v)],
        [d1(u), d1(v), f.constant_term()],
    ];
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Lines `u = u0 + l, v = v0 + t*l` through a smooth point of a conic.
pub(crate) fn pencil_through(
    f: &MultiPoly,
    u: &str,
    v: &str,
    p: &(Rat, Rat),
    param: &str,
) -> Result<(RatFunc, RatFunc), CurveError> {
    let taken: Vec<String> = f
        .vars()
        .iter()
        .cloned()
        .chain([param.to_string()])
        .collect();
    let l = fresh_var("lambda", &taken);
    let lv = RatFunc::var(&l);
    let t = RatFunc::var(param);
    let bu = &RatFunc::from_rat(p.0.clone()) + &lv;
    let bv = &RatFunc::from_rat(p.1.clone()) + &(&t * &lv);
    let g = substitute(f, &[(u.to_string(), bu), (v.to_string(), bv)])?;
    let g = g.numer().clone();
    let cs = g.coeffs_in(&l);
    if cs.len() != 3 || !cs[0].is_zero() || cs[1].is_zero() {
        return Err(CurveError::Reducible);
    }
    let lam = RatFunc::new(-cs[1].clone(), cs[2].clone())?;
    let uu = &RatFunc::from_rat(p.0.clone()) + &lam;
    let vv = &RatFunc::from_rat(p.1.clone()) + &(&RatFunc::var(param) * &lam);
    Ok((uu, vv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tracing_index;
    use crate::parse::parse_poly;

    fn conic(s: &str) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s, &["x", "y"]).unwrap(), "x", "y")
    }

    #[test]
    fn unit_circle() {
        let p = parametrize_conic(&conic("x^2 + y^2 - 1"), &CurveConfig::default(), "t").unwrap();
        assert!(p.proper);
        assert!(p.satisfies(&conic("x^2 + y^2 - 1").poly));
        assert_eq!(tracing_index(&p.comps, "t"), 1);
    }

    #[test]
    fn example_section_conic() {
        let c = conic("3*x^2 + 9*y^2 - 4*x - 6*y + 2");
        let p = parametrize_conic(&c, &CurveConfig::default(), "t").unwrap();
        assert!(p.proper);
        assert!(p.satisfies(&c.poly));
    }

    #[test]
    fn empty_conic_reports_missing_point() {
        let cfg = CurveConfig {
            point_height: 10,
            point_budget: 40,
            hints: vec![],
        };
        let e = parametrize_conic(&conic("x^2 + y^2 + 1"), &cfg, "t").unwrap_err();
        assert_eq!(e, CurveError::NoRationalPoint);
    }

    #[test]
    fn line_pair_is_reducible() {
        let cfg = CurveConfig {
            point_height: 5,
            point_budget: 20,
            hints: vec![],
        };
        let e = parametrize_conic(&conic("x^2 - y^2"), &cfg, "t").unwrap_err();
        assert_eq!(e, CurveError::Reducible);
    }
}
