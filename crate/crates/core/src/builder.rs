//! Assembly of ruled parametrizations `P0(t) + s * P1(t)` for the three
//! developable families and for planes, plus implicitization and
//! verification of the results.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::curve::{small_rationals, Frame, COORDS};
use crate::poly::linalg::{coefficient_matrix, nullspace};
use crate::poly::{
    content_in, gcd, resultant, squarefree_part, MultiPoly, PolyError, Rat, RatFunc, RationalMap3,
};

pub const S: &str = "s";
pub const T: &str = "t";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuledKind {
    Plane,
    Conical,
    Cylindrical,
    Tangential,
}

impl fmt::Display for RuledKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuledKind::Plane => "Plane",
            RuledKind::Conical => "Conical",
            RuledKind::Cylindrical => "Cylindrical",
            RuledKind::Tangential => "Tangential",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("curve passes through the apex")]
    ThroughApex,
    #[error("section curve is parallel to the ruling direction")]
    ParallelDirection,
    #[error("ruling direction is zero")]
    ZeroDirection,
    #[error("cuspidal edge is planar")]
    PlanarEdge,
    #[error("cuspidal edge is constant")]
    ConstantEdge,
    #[error("implicitization degenerated")]
    Implicitization,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A ruled parametrization `P(s, t) = p0(t) + s * p1(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamResult {
    pub p0: RationalMap3,
    pub p1: RationalMap3,
    pub kind: RuledKind,
    /// Set once `p0` has been shifted along the rulings; a refined tangential
    /// form no longer has `p1 = p0'`.
    pub refined: bool,
    pub verified: bool,
    pub certificate: String,
}

impl ParamResult {
    fn new(p0: RationalMap3, p1: RationalMap3, kind: RuledKind) -> Self {
        ParamResult {
            p0: p0.with_params(vec![T.into()]),
            p1: p1.with_params(vec![T.into()]),
            kind,
            refined: false,
            verified: false,
            certificate: String::new(),
        }
    }

    /// The surface map in `(s, t)`.
    pub fn surface(&self) -> RationalMap3 {
        self.p0
            .add(&self.p1.scale(&RatFunc::var(S)))
            .with_params(vec![S.into(), T.into()])
    }
}

fn point_map(p: &[Rat; 3]) -> RationalMap3 {
    RationalMap3::constant(p.clone(), vec![T.into()])
}

/// Affine relations `a*x + b*y + c*z + d = 0` satisfied identically by a
/// curve, as a basis of `[a, b, c, d]` vectors.
pub fn affine_relations(curve: &RationalMap3) -> Vec<[Rat; 4]> {
    let (d, n) = curve.common_denominator();
    let rows = coefficient_matrix(&[n[0].clone(), n[1].clone(), n[2].clone(), d]);
    nullspace(&rows, 4)
        .into_iter()
        .map(|v| [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
        .collect()
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `(1 - s) * apex + s * curve(t)`.
pub fn build_conical(apex: &[Rat; 3], curve: &RationalMap3) -> Result<ParamResult, BuildError> {
    let param = curve.params().first().map(String::as_str).unwrap_or(T);
    let mut g: Option<MultiPoly> = None;
    for (c, a) in curve.comps().iter().zip(apex) {
        let diff = c - &RatFunc::from_rat(a.clone());
        let n = diff.numer().clone();
        g = Some(match g {
            None => n,
            Some(acc) => gcd(&acc, &n),
        });
    }
    if g.is_some_and(|g| g.is_zero() || g.contains_var(param)) {
        return Err(BuildError::ThroughApex);
    }
    let curve = curve.rename_param(param, T);
    let p0 = point_map(apex);
    let p1 = curve.sub(&p0);
    Ok(ParamResult::new(p0, p1, RuledKind::Conical))
}

/// `curve(t) + s * direction`.
pub fn build_cylindrical(
    direction: &[Rat; 3],
    curve: &RationalMap3,
) -> Result<ParamResult, BuildError> {
    if direction.iter().all(Zero::is_zero) {
        return Err(BuildError::ZeroDirection);
    }
    let param = curve.params().first().map(String::as_str).unwrap_or(T);
    if affine_relations(curve)
        .iter()
        .any(|r| dot(&r[..3], direction).is_zero())
    {
        return Err(BuildError::ParallelDirection);
    }
    let curve = curve.rename_param(param, T);
    Ok(ParamResult::new(
        curve,
        point_map(direction),
        RuledKind::Cylindrical,
    ))
}

/// `edge(t) + s * edge'(t)`.
pub fn build_tangential(edge: &RationalMap3) -> Result<ParamResult, BuildError> {
    let param = edge.params().first().map(String::as_str).unwrap_or(T);
    if edge.is_constant() {
        return Err(BuildError::ConstantEdge);
    }
    if !affine_relations(edge).is_empty() {
        return Err(BuildError::PlanarEdge);
    }
    let edge = edge.rename_param(param, T);
    let d = edge.derivative(T);
    Ok(ParamResult::new(edge, d, RuledKind::Tangential))
}

/// The plane `frame.plane`, parametrized by its two surviving coordinates:
/// the first is `s`, the second `t`.
pub fn build_plane(frame: &Frame) -> ParamResult {
    let expr = frame.solved_expr();
    let (u, v) = frame.survivors();
    let mut p0: [RatFunc; 3] = std::array::from_fn(|_| RatFunc::from_int(0));
    let mut p1: [RatFunc; 3] = std::array::from_fn(|_| RatFunc::from_int(0));
    for (i, name) in COORDS.iter().enumerate() {
        if i == frame.solved {
            let at_v = expr.eval_partial(&[(u, Rat::zero())]).rename(v, T);
            p0[i] = RatFunc::from_poly(at_v);
            p1[i] = RatFunc::from_rat(
                expr.derivative(u)
                    .constant_value()
                    .unwrap_or_else(Rat::zero),
            );
        } else if *name == u {
            p0[i] = RatFunc::from_int(0);
            p1[i] = RatFunc::from_int(1);
        } else {
            p0[i] = RatFunc::var(T);
            p1[i] = RatFunc::from_int(0);
        }
    }
    ParamResult::new(
        RationalMap3::new(p0, vec![T.into()]),
        RationalMap3::new(p1, vec![T.into()]),
        RuledKind::Plane,
    )
}

/// True when `F` vanishes identically on the surface.
pub fn verify_on_surface(p: &ParamResult, f: &MultiPoly) -> bool {
    p.surface().lies_on(f)
}

/// `F(P(s, t))` at a rational parameter pair, `None` at a pole.
fn eval_on(p: &RationalMap3, f: &MultiPoly, s: &Rat, t: &Rat) -> Option<Rat> {
    let pt = p.eval(&[(S, s.clone()), (T, t.clone())]).ok().flatten()?;
    f.eval(&[
        ("x", pt[0].clone()),
        ("y", pt[1].clone()),
        ("z", pt[2].clone()),
    ])
}

/// Up to `n` rational parameter pairs avoiding poles of `p`.
fn sample_params(p: &RationalMap3, n: usize) -> Vec<(Rat, Rat)> {
    let vals = small_rationals(20, 40);
    let mut out = Vec::new();
    'outer: for (i, t) in vals.iter().enumerate() {
        for s in vals.iter().skip(i % 7).take(3) {
            if p.eval(&[(S, s.clone()), (T, t.clone())])
                .ok()
                .flatten()
                .is_some()
            {
                out.push((s.clone(), t.clone()));
                if out.len() >= n {
                    break 'outer;
                }
            }
        }
    }
    out
}

/// Implicit equation of a ruled surface: solve `s` from one coordinate,
/// eliminate `t` from the other two by a resultant, and intersect the
/// results of all admissible choices.
pub fn implicitize_ruled(p: &ParamResult) -> Result<MultiPoly, BuildError> {
    let xs: Vec<RatFunc> = COORDS.iter().map(|c| RatFunc::var(c)).collect();
    let mut acc: Option<MultiPoly> = None;
    for i in 0..3 {
        let p1i = p.p1.comp(i);
        if p1i.is_zero() {
            continue;
        }
        let sv = &(&xs[i] - p.p0.comp(i)) / p1i;
        let nums: Vec<MultiPoly> = (0..3)
            .filter(|&j| j != i)
            .map(|j| {
                let e = &(&xs[j] - p.p0.comp(j)) - &(&sv * p.p1.comp(j));
                e.numer().clone()
            })
            .collect();
        let r = if nums.iter().any(|n| n.contains_var(T)) {
            resultant(&nums[0], &nums[1], T)?
        } else {
            gcd(&nums[0], &nums[1])
        };
        if r.is_zero() {
            continue;
        }
        let r = squarefree_part(&r);
        acc = Some(match acc {
            None => r,
            Some(a) => gcd(&a, &r),
        });
    }
    let mut h = acc.ok_or(BuildError::Implicitization)?;
    if h.is_constant() {
        return Err(BuildError::Implicitization);
    }
    let surf = p.surface();
    let samples = sample_params(&surf, 20);
    for (k, v) in COORDS.iter().enumerate() {
        let others: Vec<&str> = COORDS
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, c)| *c)
            .collect();
        let only_v = content_in(&content_in(&h, others[0]), others[1]);
        if !only_v.contains_var(v) {
            continue;
        }
        let vanishes = samples
            .iter()
            .all(|(s, t)| eval_on(&surf, &only_v, s, t).is_some_and(|r| r.is_zero()));
        if !vanishes {
            h = h.div_exact(&only_v).expect("content divides");
        }
    }
    if h.is_constant() {
        return Err(BuildError::Implicitization);
    }
    Ok(h.trimmed().primitive())
}

/// Largest numerator or denominator degree in `t` among the components.
fn map_degree(m: &RationalMap3) -> i64 {
    m.degree_in(T)
}

/// Scale `p1` to a primitive polynomial vector in `t`.
fn normalize_direction(p1: &RationalMap3) -> RationalMap3 {
    let (_, n) = p1.common_denominator();
    let g = n
        .iter()
        .filter(|c| !c.is_zero())
        .fold(None::<MultiPoly>, |acc, c| {
            Some(match acc {
                None => c.primitive(),
                Some(a) => gcd(&a, c),
            })
        });
    let Some(g) = g else { return p1.clone() };
    let comps = n.map(|c| RatFunc::from_poly(c.div_exact(&g).expect("gcd divides")));
    RationalMap3::new(comps, p1.params().to_vec())
}

/// Lower the degree of `p0` by sliding it along the rulings:
/// `p0 <- p0 - q(t) * p1` with `q` a polynomial quotient, repeated while it
/// helps. Returns `p` unchanged when no degree is gained.
pub fn reduce_directrix(p: &ParamResult) -> ParamResult {
    let p1 = if p.kind == RuledKind::Tangential || p.kind == RuledKind::Conical {
        normalize_direction(&p.p1)
    } else {
        p.p1.clone()
    };
    let mut p0 = p.p0.clone();
    let mut best = map_degree(&p0);
    loop {
        let mut improved: Option<(i64, RationalMap3)> = None;
        for i in 0..3 {
            let d = p1.comp(i);
            if d.is_zero() || p0.comp(i).is_zero() {
                continue;
            }
            let ratio = p0.comp(i) / d;
            if !ratio.numer().contains_var(T) && !ratio.denom().contains_var(T) {
                continue;
            }
            let (q, _) = crate::poly::UniPoly::from_multi(ratio.numer(), T)
                .ok()
                .zip(crate::poly::UniPoly::from_multi(ratio.denom(), T).ok())
                .map(|(n, dd)| n.divrem(&dd))
                .unwrap_or_else(|| (crate::poly::UniPoly::zero(), crate::poly::UniPoly::zero()));
            if q.is_zero() {
                continue;
            }
            let cand = p0.sub(&p1.scale(&RatFunc::from_poly(q.to_multi(T))));
            let deg = map_degree(&cand);
            if deg < improved.as_ref().map_or(best, |(d, _)| *d) {
                improved = Some((deg, cand));
            }
        }
        match improved {
            Some((deg, cand)) => {
                best = deg;
                p0 = cand;
            }
            None => break,
        }
    }
    if best >= map_degree(&p.p0) {
        return p.clone();
    }
    ParamResult {
        p0,
        p1,
        kind: p.kind,
        refined: true,
        verified: p.verified,
        certificate: p.certificate.clone(),
    }
}

/// True when the triple product `det(P0', P1, P1')` vanishes identically, the
/// developability condition for a ruled surface in standard form.
pub fn ruled_triple_product(p0: &RationalMap3, p1: &RationalMap3) -> RatFunc {
    let a = p0.derivative(T);
    let b = p1;
    let c = p1.derivative(T);
    let m = |r: &RationalMap3, i: usize| r.comp(i).clone();
    let det = &(&m(&a, 0) * &(&(&m(b, 1) * &m(&c, 2)) - &(&m(b, 2) * &m(&c, 1))))
        - &(&m(&a, 1) * &(&(&m(b, 0) * &m(&c, 2)) - &(&m(b, 2) * &m(&c, 0))));
    &det + &(&m(&a, 2) * &(&(&m(b, 0) * &m(&c, 1)) - &(&m(b, 1) * &m(&c, 0))))
}

/// Mark `p` verified when `F(P(s, t))` is identically zero.
pub fn certify_against(mut p: ParamResult, f: &MultiPoly, what: &str) -> ParamResult {
    p.verified = verify_on_surface(&p, f);
    p.certificate = if p.verified {
        format!("{what} vanishes identically on P(s,t)")
    } else {
        format!("{what} does not vanish on P(s,t)")
    };
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_map, parse_poly};
    use crate::poly::{int, rat};

    fn xyz(s: &str) -> MultiPoly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    fn circle_z1() -> RationalMap3 {
        parse_map("((1-t^2)/(1+t^2), 2*t/(1+t^2), 1)").unwrap()
    }

    #[test]
    fn cone_over_circle() {
        let p = build_conical(&[int(0), int(0), int(0)], &circle_z1()).unwrap();
        let h = implicitize_ruled(&p).unwrap();
        assert_eq!(h, xyz("x^2 + y^2 - z^2"));
        assert!(verify_on_surface(&p, &h));
        assert!(!verify_on_surface(&p, &xyz("x^2 + y^2 + z^2 - 1")));
    }

    #[test]
    fn apex_on_curve_rejected() {
        let e = build_conical(&[int(1), int(0), int(1)], &circle_z1()).unwrap_err();
        assert_eq!(e, BuildError::ThroughApex);
    }

    #[test]
    fn cylinder_over_circle() {
        let c = parse_map("((1-t^2)/(1+t^2), 2*t/(1+t^2), 0)").unwrap();
        let p = build_cylindrical(&[int(0), int(0), int(1)], &c).unwrap();
        assert_eq!(implicitize_ruled(&p).unwrap(), xyz("x^2 + y^2 - 1"));
        let flat = build_cylindrical(&[int(1), int(0), int(0)], &c).unwrap_err();
        assert_eq!(flat, BuildError::ParallelDirection);
    }

    #[test]
    fn tangent_surface_of_twisted_cubic() {
        let p = build_tangential(&parse_map("(t, t^2, t^3)").unwrap()).unwrap();
        let surf = p.surface();
        assert_eq!(
            surf.comp(0).numer(),
            &parse_poly("t + s", &["s", "t"]).unwrap()
        );
        assert_eq!(
            surf.comp(1).numer(),
            &parse_poly("t^2 + 2*s*t", &["s", "t"]).unwrap()
        );
        assert_eq!(
            surf.comp(2).numer(),
            &parse_poly("t^3 + 3*s*t^2", &["s", "t"]).unwrap()
        );
        let h = implicitize_ruled(&p).unwrap();
        assert!(verify_on_surface(&p, &h));
        assert_eq!(h.total_degree(), 4);
    }

    #[test]
    fn planar_edge_rejected() {
        let e = build_tangential(&parse_map("(t, t^2, 0)").unwrap()).unwrap_err();
        assert_eq!(e, BuildError::PlanarEdge);
    }

    #[test]
    fn plane_from_frame() {
        let fr = Frame::new([int(0), int(0), int(1), int(0)]).unwrap();
        let p = build_plane(&fr);
        assert_eq!(p.surface().to_string(), "(s, t, 0)");
        let fr = Frame::new([int(1), int(2), int(-1), int(3)]).unwrap();
        let p = build_plane(&fr);
        assert!(verify_on_surface(&p, &fr.plane_poly()));
    }

    #[test]
    fn directrix_reduction_undoes_shift() {
        let c = parse_map("(t, t^2, t^3)").unwrap();
        let base = build_tangential(&c).unwrap();
        let q = RatFunc::from_poly(parse_poly("t^4 - 2*t + 1/2", &["t"]).unwrap());
        let shifted = ParamResult {
            p0: base.p0.add(&base.p1.scale(&q)),
            ..base.clone()
        };
        assert!(map_degree(&shifted.p0) > 3);
        let r = reduce_directrix(&shifted);
        assert!(map_degree(&r.p0) <= 3);
        assert_eq!(
            implicitize_ruled(&r).unwrap(),
            implicitize_ruled(&base).unwrap()
        );
    }

    #[test]
    fn triple_product_vanishes_for_cone() {
        let p = build_conical(&[rat(1, 2), rat(1, 3), int(0)], &circle_z1()).unwrap();
        assert!(ruled_triple_product(&p.p0, &p.p1).is_zero());
        let saddle = ParamResult::new(
            parse_map("(t, 0, 0)").unwrap(),
            parse_map("(0, 1, t)").unwrap(),
            RuledKind::Conical,
        );
        assert!(!ruled_triple_product(&saddle.p0, &saddle.p1).is_zero());
    }
}
