//! Developability test, classification and rebuild for implicit surfaces
//! `F(x, y, z) = 0`.

use num_traits::Zero;

use crate::analysis::{
    admissible_frames, Analysis, AnalysisConfig, AnalysisError, SectionInfo, SurfaceClass, Timer,
};
use crate::builder::{
    build_conical, build_cylindrical, build_plane, build_tangential, certify_against,
    reduce_directrix, ParamResult,
};
use crate::curve::{
    is_proper_curve, lift_edge, lift_to_space, parametrize_plane_curve, polynomial_reparametrize,
    proper_reparametrize, section_curve, small_rationals, CurveConfig, CurveParam, Frame,
    PlaneCurve, COORDS,
};
use crate::poly::linalg::{coefficient_matrix, nullspace, solve, Solution};
use crate::poly::{
    det4, primitive_int_vector, primitive_part_in, resultant, squarefree_part, subresultant_linear,
    MultiPoly, Rat, RatFunc, RationalMap3,
};

/// Bordered Hessian determinant of `F`: the 3x3 Hessian bordered by the gradient.
pub fn gaussian_form_implicit(f: &MultiPoly) -> MultiPoly {
    let g: Vec<MultiPoly> = COORDS.iter().map(|v| f.derivative(v)).collect();
    let h = |i: usize, j: usize| g[i].derivative(COORDS[j]);
    let zero = MultiPoly::zero(f.vars().clone());
    det4(&[
        [h(0, 0), h(0, 1), h(0, 2), g[0].clone()],
        [h(1, 0), h(1, 1), h(1, 2), g[1].clone()],
        [h(2, 0), h(2, 1), h(2, 2), g[2].clone()],
        [g[0].clone(), g[1].clone(), g[2].clone(), zero],
    ])
}

/// True when `K` vanishes on `F = 0`, decided by divisibility by the squarefree part of `F`.
pub fn vanishes_on_surface(k: &MultiPoly, f: &MultiPoly) -> bool {
    k.is_zero() || squarefree_part(f).divides(k)
}

/// The linear system has a whole line or plane of solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Underdetermined;

/// Apex `p` with `F(p + X)` homogeneous, from the Euler identity
/// `x0*Fx + y0*Fy + z0*Fz = x*Fx + y*Fy + z*Fz - d*F`.
pub fn detect_apex(f: &MultiPoly) -> Result<Option<[Rat; 3]>, Underdetermined> {
    let d = f.total_degree();
    let grads: Vec<MultiPoly> = COORDS.iter().map(|v| f.derivative(v)).collect();
    let mut rhs = f.scale(&Rat::from_integer((-d).into()));
    for (v, g) in COORDS.iter().zip(&grads) {
        rhs = &rhs + &(&MultiPoly::var(v) * g);
    }
    let mut cols = grads.clone();
    cols.push(rhs);
    let m = coefficient_matrix(&cols);
    let a: Vec<Vec<Rat>> = m.iter().map(|r| r[..3].to_vec()).collect();
    let b: Vec<Rat> = m.iter().map(|r| r[3].clone()).collect();
    match solve(&a, &b) {
        Solution::Unique(x) => {
            let p = [x[0].clone(), x[1].clone(), x[2].clone()];
            Ok(euler_holds(f, &p).then_some(p))
        }
        Solution::Underdetermined { .. } => Err(Underdetermined),
        Solution::Inconsistent => Ok(None),
    }
}

/// `(x - x0)*Fx + (y - y0)*Fy + (z - z0)*Fz = d*F` as polynomials.
pub fn euler_holds(f: &MultiPoly, p: &[Rat; 3]) -> bool {
    let mut lhs = f.scale(&Rat::from_integer((-f.total_degree()).into()));
    for (i, v) in COORDS.iter().enumerate() {
        let shifted = &MultiPoly::var(v) - &MultiPoly::from_rat(p[i].clone());
        lhs = &lhs + &(&shifted * &f.derivative(v));
    }
    lhs.is_zero()
}

fn kernel_direction(cols: &[MultiPoly]) -> Result<Option<[Rat; 3]>, Underdetermined> {
    let k = nullspace(&coefficient_matrix(cols), 3);
    match k.len() {
        0 => Ok(None),
        1 => {
            let v = primitive_int_vector(&k[0]);
            Ok(Some([
                Rat::from_integer(v[0].clone()),
                Rat::from_integer(v[1].clone()),
                Rat::from_integer(v[2].clone()),
            ]))
        }
        _ => Err(Underdetermined),
    }
}

/// Direction `v` with `v1*Fx + v2*Fy + v3*Fz = 0`, as a primitive integer vector.
pub fn detect_ruling_direction(f: &MultiPoly) -> Result<Option<[Rat; 3]>, Underdetermined> {
    let grads: Vec<MultiPoly> = COORDS.iter().map(|v| f.derivative(v)).collect();
    kernel_direction(&grads)
}

/// A space curve cut out by a plane curve `g` in two coordinates and a
/// polynomial `lifting` linear in the third coordinate along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSystem {
    pub lifting: MultiPoly,
    pub plane_curve: MultiPoly,
    /// The coordinate eliminated from `plane_curve` and recovered from `lifting`.
    pub eliminated: &'static str,
}

impl EdgeSystem {
    pub fn polys(&self) -> Vec<MultiPoly> {
        vec![self.lifting.clone(), self.plane_curve.clone()]
    }

    /// The coordinates of `plane_curve`, in `x, y, z` order.
    pub fn survivors(&self) -> (&'static str, &'static str) {
        let s: Vec<&'static str> = COORDS
            .iter()
            .copied()
            .filter(|c| *c != self.eliminated)
            .collect();
        (s[0], s[1])
    }
}

/// Remove factors of `p` that involve only one of `a`, `b`.
fn strip_univariate_factors(p: &MultiPoly, a: &str, b: &str) -> MultiPoly {
    primitive_part_in(&primitive_part_in(p, a), b)
}

fn edge_systems_eliminating(polys: &[MultiPoly], e: &'static str) -> Vec<EdgeSystem> {
    let with_e: Vec<&MultiPoly> = polys.iter().filter(|p| p.contains_var(e)).collect();
    let Some(base) = with_e
        .iter()
        .copied()
        .min_by_key(|p| (p.degree_in(e), p.nterms()))
    else {
        return vec![];
    };
    let mut elims: Vec<MultiPoly> = polys
        .iter()
        .filter(|p| !p.contains_var(e))
        .cloned()
        .collect();
    for q in with_e.iter().copied() {
        if std::ptr::eq(q, base) {
            continue;
        }
        if let Ok(r) = resultant(base, q, e) {
            if !r.is_zero() {
                elims.push(r);
            }
        }
    }
    let Some(g) = crate::poly::gcd_many(elims.iter()) else {
        return vec![];
    };
    if g.is_constant() {
        return vec![];
    }
    let survivors: Vec<&'static str> = COORDS.iter().copied().filter(|c| *c != e).collect();
    let g = strip_univariate_factors(&squarefree_part(&g), survivors[0], survivors[1])
        .trimmed()
        .primitive();
    if g.total_degree() < 1 || !g.contains_var(survivors[0]) || !g.contains_var(survivors[1]) {
        return vec![];
    }
    let mut liftings: Vec<MultiPoly> = Vec::new();
    for p in polys {
        if p.degree_in(e) == 1 && !g.divides(&p.lc_in(e)) {
            liftings.push(p.clone());
        }
    }
    for (i, a) in with_e.iter().enumerate() {
        for b in &with_e[i + 1..] {
            if a.degree_in(e) < 2 || b.degree_in(e) < 2 {
                continue;
            }
            let Ok((p, q)) = subresultant_linear(a, b, e) else {
                continue;
            };
            if p.is_zero() || g.divides(&p) {
                continue;
            }
            let h = (&(&MultiPoly::var(e) * &p) + &q).primitive();
            liftings.push(h);
        }
    }
    liftings.sort_by_key(|h| (h.total_degree(), h.nterms()));
    liftings
        .into_iter()
        .map(|lifting| EdgeSystem {
            lifting,
            plane_curve: g.clone(),
            eliminated: e,
        })
        .collect()
}

/// Candidate one-dimensional components of `{F = Fx = Fy = Fz = 0}`,
/// eliminating `x` first and falling back to `y` and `z`.
pub fn singular_locus_curve(f: &MultiPoly) -> Result<Vec<EdgeSystem>, AnalysisError> {
    let mut polys: Vec<MultiPoly> = vec![f.clone()];
    for v in COORDS {
        let d = f.derivative(v);
        if !d.is_zero() {
            polys.push(d);
        }
    }
    let mut out = Vec::new();
    for e in COORDS {
        out.extend(edge_systems_eliminating(&polys, e));
        if !out.is_empty() {
            return Ok(out);
        }
    }
    Err(AnalysisError::Degenerate(
        "singular locus has no one-dimensional component".into(),
    ))
}

fn monomials_upto(u: &str, v: &str, deg: i64) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for total in 0..=deg.max(-1) {
        for i in (0..=total).rev() {
            out.push(&MultiPoly::var(u).pow(i as u32) * &MultiPoly::var(v).pow((total - i) as u32));
        }
    }
    out
}

/// Lowest-degree polynomial `e * a(u, v) + b(u, v)` vanishing on `edge`, with
/// `a` not a multiple of `g`; coefficients come from exact sampling and the
/// result is checked symbolically.
fn minimal_lifting(edge: &CurveParam, sys: &EdgeSystem) -> Option<MultiPoly> {
    let e = sys.eliminated;
    let (u, v) = sys.survivors();
    let map = edge.to_map3()?;
    let d = map.degree_in(&edge.param).max(1);
    for k in 1..sys.lifting.total_degree() {
        let a_part = monomials_upto(u, v, k - 1);
        let basis: Vec<MultiPoly> = a_part
            .iter()
            .map(|m| m * &MultiPoly::var(e))
            .chain(monomials_upto(u, v, k))
            .collect();
        let want = (k * d + 1) as usize + basis.len();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for t in small_rationals(1000, 4 * want) {
            let Ok(Some(pt)) = map.eval(&[(edge.param.as_str(), t)]) else {
                continue;
            };
            let at = [
                ("x", pt[0].clone()),
                ("y", pt[1].clone()),
                ("z", pt[2].clone()),
            ];
            rows.push(
                basis
                    .iter()
                    .map(|m| m.eval(&at).unwrap_or_else(Rat::zero))
                    .collect(),
            );
            if rows.len() >= want {
                break;
            }
        }
        for sol in nullspace(&rows, basis.len()) {
            let a = a_part.iter().zip(&sol).fold(
                MultiPoly::zero(sys.lifting.vars().clone()),
                |acc, (m, c)| &acc + &m.scale(c),
            );
            if a.is_zero() || sys.plane_curve.divides(&a) {
                continue;
            }
            let h = basis.iter().zip(&sol).fold(
                MultiPoly::zero(sys.lifting.vars().clone()),
                |acc, (m, c)| &acc + &m.scale(c),
            );
            if edge.satisfies(&h) {
                return Some(h.trimmed().primitive());
            }
        }
    }
    None
}

fn finish(mut p: ParamResult, f: &MultiPoly, cfg: &AnalysisConfig) -> ParamResult {
    p = certify_against(p, f, "F");
    if cfg.refine && p.kind != crate::builder::RuledKind::Plane {
        let r = certify_against(reduce_directrix(&p), f, "F");
        if r.verified {
            return r;
        }
    }
    p
}

fn curve_map(cp: &CurveParam) -> Result<RationalMap3, String> {
    let m = cp.to_map3().ok_or("lifted curve is not in space")?;
    let m = if cp.proper {
        m
    } else {
        proper_reparametrize(&m).map_err(|e| e.to_string())?
    };
    Ok(polynomial_reparametrize(&m))
}

/// Parametrized plane section of `f`, trying admissible frames by increasing section degree.
fn directrix_from_sections(
    f: &MultiPoly,
    frames: Vec<Frame>,
    cfg: &CurveConfig,
) -> Result<(SectionInfo, CurveParam, RationalMap3), String> {
    let mut sections: Vec<(usize, PlaneCurve)> = frames
        .into_iter()
        .map(|fr| {
            let c = section_curve(f, &fr);
            let c = PlaneCurve {
                poly: squarefree_part(&c.poly).trimmed(),
                ..c
            };
            (c.poly.total_degree().max(0) as usize, c)
        })
        .filter(|(d, _)| *d >= 1)
        .collect();
    sections.sort_by_key(|(d, _)| *d);
    let mut first_err: Option<String> = None;
    for (_, c) in sections {
        let frame = c.frame.clone().expect("section has a frame");
        let attempt = parametrize_plane_curve(&c, cfg, "t")
            .map_err(|e| e.to_string())
            .and_then(|cp| lift_to_space(&cp, &frame).map_err(|e| e.to_string()))
            .and_then(|cp| curve_map(&cp).map(|m| (cp, m)));
        match attempt {
            Ok((cp, m)) => {
                return Ok((
                    SectionInfo {
                        frame,
                        curve: c.poly.clone(),
                    },
                    cp,
                    m,
                ))
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.unwrap_or_else(|| "no admissible section plane".into()))
}

fn edge_from_system(
    sys: &EdgeSystem,
    f: &MultiPoly,
    cfg: &CurveConfig,
) -> Result<(CurveParam, RationalMap3), String> {
    let (u, v) = sys.survivors();
    let pc = PlaneCurve::new(sys.plane_curve.clone(), u, v);
    let cp = parametrize_plane_curve(&pc, cfg, "t").map_err(|e| e.to_string())?;
    let lifted = lift_edge(&cp, &sys.lifting).map_err(|e| e.to_string())?;
    let mut checks = vec![f.clone()];
    checks.extend(COORDS.iter().map(|c| f.derivative(c)));
    if !checks.iter().all(|p| lifted.satisfies(p)) {
        return Err("lifted curve is not singular on the surface".into());
    }
    let m = curve_map(&lifted)?;
    Ok((lifted, m))
}

/// Run the full implicit pipeline on `F`.
pub fn analyze_implicit(f: &MultiPoly, cfg: &AnalysisConfig) -> Analysis {
    let mut timer = Timer::start();
    let reduced = squarefree_part(f);
    let f_used = if reduced.divides(f) && f.divides(&reduced) {
        f.clone()
    } else {
        reduced.clone()
    };
    if f_used.total_degree() == 1 {
        let plane = [
            f_used
                .derivative("x")
                .constant_value()
                .unwrap_or_else(Rat::zero),
            f_used
                .derivative("y")
                .constant_value()
                .unwrap_or_else(Rat::zero),
            f_used
                .derivative("z")
                .constant_value()
                .unwrap_or_else(Rat::zero),
            f_used.constant_term(),
        ];
        let k = gaussian_form_implicit(&f_used);
        timer.lap("curvature");
        let frame = Frame::new(plane.clone()).expect("nonconstant linear form");
        let mut a = Analysis::new(SurfaceClass::Plane { plane }, RatFunc::from_poly(k));
        a.param = Some(certify_against(build_plane(&frame), &f_used, "F"));
        a.implicit = Some(f_used);
        timer.lap("rebuild");
        a.stages = timer.finish();
        return a;
    }
    let k = gaussian_form_implicit(&f_used);
    timer.lap("curvature");
    if !vanishes_on_surface(&k, &f_used) {
        let mut a = Analysis::new(SurfaceClass::NotDevelopable, RatFunc::from_poly(k));
        timer.lap("classify");
        a.stages = timer.finish();
        return a;
    }
    let kf = RatFunc::from_poly(k);
    let apex = detect_apex(&reduced);
    let (class, seed) = match apex {
        Err(Underdetermined) => (
            SurfaceClass::DevelopableUnresolved {
                reason: "apex system is underdetermined".into(),
            },
            None,
        ),
        Ok(Some(p)) => (
            SurfaceClass::Conical { apex: p.clone() },
            Some(Seed::Apex(p)),
        ),
        Ok(None) => match detect_ruling_direction(&reduced) {
            Err(Underdetermined) => (
                SurfaceClass::DevelopableUnresolved {
                    reason: "ruling direction is not unique".into(),
                },
                None,
            ),
            Ok(Some(d)) => (
                SurfaceClass::Cylindrical {
                    direction: d.clone(),
                },
                Some(Seed::Direction(d)),
            ),
            Ok(None) => {
                let systems = singular_locus_curve(&reduced).unwrap_or_default();
                match systems.first() {
                    None => (
                        SurfaceClass::DevelopableUnresolved {
                            reason: "no one-dimensional singular component".into(),
                        },
                        None,
                    ),
                    Some(s) => (
                        SurfaceClass::Tangential {
                            edge_system: s.polys(),
                        },
                        Some(Seed::Edge(systems)),
                    ),
                }
            }
        },
    };
    timer.lap("classify");
    let mut a = Analysis::new(class, kf);
    match seed {
        None => {}
        Some(Seed::Apex(p)) => {
            let frames = admissible_frames(cfg.plane_budget, Some(&p), None);
            match directrix_from_sections(&reduced, frames, &cfg.curve) {
                Ok((sec, cp, m)) => {
                    a.section = Some(sec);
                    a.curve = Some(cp);
                    match build_conical(&p, &m) {
                        Ok(r) => a.param = Some(finish(r, f, cfg)),
                        Err(e) => a.failure = Some(e.to_string()),
                    }
                }
                Err(e) => a.failure = Some(e),
            }
        }
        Some(Seed::Direction(d)) => {
            let frames = admissible_frames(cfg.plane_budget, None, Some(&d));
            match directrix_from_sections(&reduced, frames, &cfg.curve) {
                Ok((sec, cp, m)) => {
                    a.section = Some(sec);
                    a.curve = Some(cp);
                    match build_cylindrical(&d, &m) {
                        Ok(r) => a.param = Some(finish(r, f, cfg)),
                        Err(e) => a.failure = Some(e.to_string()),
                    }
                }
                Err(e) => a.failure = Some(e),
            }
        }
        Some(Seed::Edge(systems)) => {
            let mut first_err: Option<String> = None;
            for sys in &systems {
                let built = edge_from_system(sys, &reduced, &cfg.curve).and_then(|(cp, m)| {
                    build_tangential(&m)
                        .map(|r| (cp, r))
                        .map_err(|e| e.to_string())
                });
                match built {
                    Ok((cp, r)) => {
                        let mut sys = sys.clone();
                        if let Some(h) = minimal_lifting(&cp, &sys) {
                            sys.lifting = h;
                        }
                        a.class = SurfaceClass::Tangential {
                            edge_system: sys.polys(),
                        };
                        a.curve = Some(cp);
                        a.param = Some(finish(r, f, cfg));
                        break;
                    }
                    Err(e) => {
                        first_err.get_or_insert(e);
                    }
                }
            }
            if a.param.is_none() {
                a.failure = first_err;
            }
        }
    }
    if let Some(p) = &a.param {
        if !p.verified {
            a.failure = Some("rebuilt parametrization failed verification".into());
        }
    }
    a.implicit = Some(f.clone());
    timer.lap("rebuild");
    a.stages = timer.finish();
    a
}

enum Seed {
    Apex([Rat; 3]),
    Direction([Rat; 3]),
    Edge(Vec<EdgeSystem>),
}

/// Proper-curve audit of a rebuilt directrix, `(proper, tracing index)`.
pub fn directrix_audit(p: &ParamResult) -> (bool, usize) {
    match p.kind {
        crate::builder::RuledKind::Conical => is_proper_curve(&p.p1),
        _ => is_proper_curve(&p.p0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::{det, int, rat};

    const EX1: &str = "4*x^2 + 9*y^2 - 4*x - 6*y - z^2 + 2";

    fn xyz(s: &str) -> MultiPoly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    fn bordered_hessian_bareiss(f: &MultiPoly) -> MultiPoly {
        let g: Vec<MultiPoly> = COORDS.iter().map(|v| f.derivative(v)).collect();
        let mut rows: Vec<Vec<MultiPoly>> = (0..3)
            .map(|i| {
                let mut r: Vec<MultiPoly> = (0..3).map(|j| g[i].derivative(COORDS[j])).collect();
                r.push(g[i].clone());
                r
            })
            .collect();
        let mut last = g.clone();
        last.push(MultiPoly::from_int(0));
        rows.push(last);
        det(&rows)
    }

    #[test]
    fn cone_curvature_is_multiple_of_f() {
        let f = xyz(EX1);
        assert_eq!(gaussian_form_implicit(&f), f.scale(&int(576)));
        assert!(vanishes_on_surface(&gaussian_form_implicit(&f), &f));
    }

    #[test]
    fn plane_curvature_is_zero() {
        assert!(gaussian_form_implicit(&xyz("z")).is_zero());
        assert!(vanishes_on_surface(&MultiPoly::from_int(0), &xyz("z")));
    }

    #[test]
    fn sphere_curvature_matches_expansion() {
        let f = xyz("x^2 + y^2 + z^2 - 1");
        let k = gaussian_form_implicit(&f);
        assert_eq!(k, xyz("-16*(x^2 + y^2 + z^2)"));
        assert_eq!(k, bordered_hessian_bareiss(&f));
        assert!(!vanishes_on_surface(&k, &f));
    }

    #[test]
    fn hyperboloid_is_not_developable() {
        let f = xyz("x^2 + y^2 - z^2 - 1");
        assert!(!vanishes_on_surface(&gaussian_form_implicit(&f), &f));
    }

    #[test]
    fn apex_of_cones() {
        assert_eq!(
            detect_apex(&xyz(EX1)),
            Ok(Some([rat(1, 2), rat(1, 3), int(0)]))
        );
        assert_eq!(
            detect_apex(&xyz("x^2 + y^2 - z^2")),
            Ok(Some([int(0), int(0), int(0)]))
        );
        assert_eq!(
            detect_apex(&xyz("(x - 1)^2 + (y - 2)^2 - z^2")),
            Ok(Some([int(1), int(2), int(0)]))
        );
        assert_eq!(detect_apex(&xyz("x^2 + y^2 - 1")), Ok(None));
    }

    #[test]
    fn ruling_directions() {
        assert_eq!(
            detect_ruling_direction(&xyz("x^2 + y^2 - 1")),
            Ok(Some([int(0), int(0), int(1)]))
        );
        assert_eq!(
            detect_ruling_direction(&xyz("x^2 + y^2 + z^2 - 1")),
            Ok(None)
        );
    }

    #[test]
    fn twisted_cubic_edge_system() {
        let f = xyz("4*(x^2 - y)*(y^2 - x*z) - (x*y - z)^2");
        let cubic = crate::parse::parse_map("(t, t^2, t^3)").unwrap();
        let systems = singular_locus_curve(&f).unwrap();
        assert!(!systems.is_empty());
        for p in systems[0].polys() {
            assert!(cubic.lies_on(&p), "{p}");
        }
    }

    #[test]
    fn cone_has_no_singular_curve() {
        assert!(singular_locus_curve(&xyz("x^2 + y^2 - z^2")).is_err());
    }

    #[test]
    fn cone_pipeline_rebuilds_verified() {
        let a = analyze_implicit(&xyz("x^2 + y^2 - z^2"), &AnalysisConfig::default());
        assert_eq!(
            a.class,
            SurfaceClass::Conical {
                apex: [int(0), int(0), int(0)]
            }
        );
        let p = a.param.unwrap();
        assert!(p.verified);
        assert!(directrix_audit(&p).0);
    }

    #[test]
    fn tangent_developable_pipeline() {
        let f = xyz("4*(x^2 - y)*(y^2 - x*z) - (x*y - z)^2");
        let a = analyze_implicit(&f, &AnalysisConfig::default());
        assert_eq!(a.class.tag(), "Tangential");
        assert!(a.param.unwrap().verified);
    }
}
