use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::poly::{MultiPoly, Rat, UniPoly};

use super::CurveConfig;

/// Rationals ordered by height `max(|p|, q)`: `0, 1, -1, 2, -2, 1/2, -1/2, ...`,
/// at most `count` of them and none above `height`.
pub fn small_rationals(height: i64, count: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero()];
    'outer: for h in 1..=height.max(0) {
        let mut level: Vec<Rat> = Vec::new();
        for q in 1..=h {
            if h.gcd(&q) != 1 {
                continue;
            }
            level.push(Rat::new(BigInt::from(h), BigInt::from(q)));
        }
        for p in 1..h {
            if p.gcd(&h) != 1 {
                continue;
            }
            level.push(Rat::new(BigInt::from(p), BigInt::from(h)));
        }
        for r in level {
            for s in [r.clone(), -r] {
                if out.len() >= count {
                    break 'outer;
                }
                out.push(s);
            }
        }
    }
    out.truncate(count);
    out
}

fn is_smooth(f: &MultiPoly, u: &str, v: &str, p: &(Rat, Rat)) -> bool {
    let at = [(u, p.0.clone()), (v, p.1.clone())];
    let fu = f.derivative(u).eval(&at).unwrap_or_default();
    let fv = f.derivative(v).eval(&at).unwrap_or_default();
    !(fu.is_zero() && fv.is_zero())
}

/// Up to `want` distinct rational points of `f(u, v) = 0`, hints first, then
/// by fixing one coordinate at small-height values and solving for the other.
/// With `smooth_only`, singular points are skipped.
pub fn find_rational_points(
    f: &MultiPoly,
    u: &str,
    v: &str,
    cfg: &CurveConfig,
    want: usize,
    smooth_only: bool,
) -> Vec<(Rat, Rat)> {
    let mut found: Vec<(Rat, Rat)> = Vec::new();
    let push = |p: (Rat, Rat), found: &mut Vec<(Rat, Rat)>| {
        if found.contains(&p) {
            return;
        }
        if smooth_only && !is_smooth(f, u, v, &p) {
            return;
        }
        found.push(p);
    };
    for h in &cfg.hints {
        let at = [(u, h.0.clone()), (v, h.1.clone())];
        if f.eval(&at).is_some_and(|r| r.is_zero()) {
            push(h.clone(), &mut found);
        }
        if found.len() >= want {
            return found;
        }
    }
    let abscissae = small_rationals(cfg.point_height, cfg.point_budget);
    for a in &abscissae {
        for (fixed, free) in [(u, v), (v, u)] {
            let g = f.eval_partial(&[(fixed, a.clone())]);
            let Ok(uni) = UniPoly::from_multi(&g, free) else {
                continue;
            };
            if uni.degree() < 1 {
                continue;
            }
            let Some(roots) = uni.rational_roots() else {
                continue;
            };
            for r in roots {
                let p = if fixed == u {
                    (a.clone(), r)
                } else {
                    (r, a.clone())
                };
                push(p, &mut found);
                if found.len() >= want {
                    return found;
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::{int, rat};

    #[test]
    fn height_order() {
        let r = small_rationals(3, 12);
        assert_eq!(
            &r[..7],
            &[
                int(0),
                int(1),
                int(-1),
                int(2),
                int(-2),
                rat(1, 2),
                rat(-1, 2)
            ]
        );
        assert_eq!(r.len(), 12);
    }

    #[test]
    fn finds_points_on_conic() {
        let f = parse_poly("3*x^2 + 9*y^2 - 4*x - 6*y + 2", &["x", "y"]).unwrap();
        let pts = find_rational_points(&f, "x", "y", &CurveConfig::default(), 2, true);
        assert!(!pts.is_empty());
        for p in pts {
            assert!(f.eval(&[("x", p.0), ("y", p.1)]).unwrap().is_zero());
        }
    }

    #[test]
    fn no_points_on_empty_conic() {
        let f = parse_poly("x^2 + y^2 + 1", &["x", "y"]).unwrap();
        let cfg = CurveConfig {
            point_height: 10,
            point_budget: 50,
            hints: vec![],
        };
        assert!(find_rational_points(&f, "x", "y", &cfg, 1, true).is_empty());
    }
}
