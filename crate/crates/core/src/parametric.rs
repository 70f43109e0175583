//! Developability test, classification and rebuild for rational surface maps
//! `P(s, t)`.

use crate::analysis::{
    admissible_frames, Analysis, AnalysisConfig, AnalysisError, SectionInfo, SurfaceClass, Timer,
};
use crate::builder::{
    build_conical, build_cylindrical, build_plane, build_tangential, implicitize_ruled,
    reduce_directrix, ParamResult, RuledKind, S, T,
};
use crate::curve::{
    lift_to_space, parametrize_plane_curve, polynomial_reparametrize, proper_reparametrize,
    rational_branches, tracing_index, CurveConfig, CurveParam, CurveSource, Frame, PlaneCurve,
    COORDS,
};
use crate::implicit::Underdetermined;
use crate::poly::linalg::{coefficient_matrix, nullspace, solve, Solution};
use crate::poly::{
    content_in, det3, gcd, gcd_many, primitive_int_vector, primitive_part_in, resultant,
    squarefree_part, substitute, substitute_numerator, MultiPoly, Rat, RatFunc, RationalMap3,
    UniPoly,
};

/// Normal field `N = P_s x P_t` of a surface map.
#[derive(Clone, Debug)]
pub struct NormalData {
    /// `N` with its polynomial content removed: `N = common * reduced / w^3`.
    reduced: [MultiPoly; 3],
    common: MultiPoly,
    w: MultiPoly,
    xyz: [MultiPoly; 3],
}

impl NormalData {
    pub fn new(p: &RationalMap3) -> Result<Self, AnalysisError> {
        let (w, xyz) = p.common_denominator();
        let rows = |f: &dyn Fn(&MultiPoly) -> MultiPoly| -> [MultiPoly; 4] {
            [f(&w), f(&xyz[0]), f(&xyz[1]), f(&xyz[2])]
        };
        let r0 = rows(&|m| m.clone());
        let rs = rows(&|m| m.derivative(S));
        let rt = rows(&|m| m.derivative(T));
        let minor = |a: usize, b: usize| {
            det3(&[
                [r0[0].clone(), r0[a].clone(), r0[b].clone()],
                [rs[0].clone(), rs[a].clone(), rs[b].clone()],
                [rt[0].clone(), rt[a].clone(), rt[b].clone()],
            ])
        };
        let raw = [minor(2, 3), minor(3, 1), minor(1, 2)];
        if raw.iter().all(MultiPoly::is_zero) {
            return Err(AnalysisError::Degenerate(
                "normal vector vanishes identically; the image is a curve".into(),
            ));
        }
        let common = gcd_many(raw.iter()).expect("three components");
        let reduced = raw.map(|c| c.div_exact(&common).expect("gcd divides"));
        Ok(NormalData {
            reduced,
            common,
            w,
            xyz,
        })
    }

    /// Components `l, m, n` of the cross product.
    pub fn n(&self) -> [RatFunc; 3] {
        let den = self.w.pow(3);
        self.reduced
            .clone()
            .map(|c| RatFunc::new(&c * &self.common, den.clone()).expect("nonzero denominator"))
    }

    /// `N . P`, the right-hand side of the tangent plane `N . X = N . P`.
    pub fn tangent_rhs(&self) -> RatFunc {
        let r = &self.reduced;
        let num = &(&(&self.xyz[0] * &r[0]) + &(&self.xyz[1] * &r[1])) + &(&self.xyz[2] * &r[2]);
        RatFunc::new(&num * &self.common, self.w.pow(4)).expect("nonzero denominator")
    }

    /// Curvature numerator over the common denominator `w^9`.
    pub fn gaussian_form(&self) -> RatFunc {
        let r = &self.reduced;
        let d = det3(&[
            [r[0].derivative(S), r[1].derivative(S), r[2].derivative(S)],
            [r[0].derivative(T), r[1].derivative(T), r[2].derivative(T)],
            [r[0].clone(), r[1].clone(), r[2].clone()],
        ]);
        if d.is_zero() {
            return RatFunc::from_poly(d);
        }
        RatFunc::new(&d * &self.common.pow(3), self.w.pow(9)).expect("nonzero denominator")
    }

    /// Parameter-plane curve where the normal vanishes, pole factors removed.
    pub fn vanishing_factor(&self) -> MultiPoly {
        let mut g = self.common.clone();
        loop {
            let h = gcd(&g, &self.w);
            if h.is_constant() {
                break;
            }
            g = g.div_exact(&h).expect("gcd divides");
        }
        squarefree_part(&g).trimmed()
    }
}

/// Curvature numerator `det(N_s, N_t, N)`, zero exactly when the surface is developable.
pub fn gaussian_form_parametric(p: &RationalMap3) -> Result<RatFunc, AnalysisError> {
    Ok(NormalData::new(p)?.gaussian_form())
}

/// Point `p` on every tangent plane: `p . N = P . N` identically in `(s, t)`.
pub fn detect_apex_parametric(nd: &NormalData) -> Result<Option<[Rat; 3]>, Underdetermined> {
    let r = &nd.reduced;
    let mut cols: Vec<MultiPoly> = r.iter().map(|c| c * &nd.w).collect();
    let rhs = &(&(&nd.xyz[0] * &r[0]) + &(&nd.xyz[1] * &r[1])) + &(&nd.xyz[2] * &r[2]);
    cols.push(rhs);
    let m = coefficient_matrix(&cols);
    let a: Vec<Vec<Rat>> = m.iter().map(|row| row[..3].to_vec()).collect();
    let b: Vec<Rat> = m.iter().map(|row| row[3].clone()).collect();
    match solve(&a, &b) {
        Solution::Unique(x) => Ok(Some([x[0].clone(), x[1].clone(), x[2].clone()])),
        Solution::Underdetermined { .. } => Err(Underdetermined),
        Solution::Inconsistent => Ok(None),
    }
}

fn normal_kernel(nd: &NormalData) -> Vec<Vec<Rat>> {
    nullspace(&coefficient_matrix(&nd.reduced), 3)
}

fn int_vector(v: &[Rat]) -> [Rat; 3] {
    let p = primitive_int_vector(v);
    [
        Rat::from_integer(p[0].clone()),
        Rat::from_integer(p[1].clone()),
        Rat::from_integer(p[2].clone()),
    ]
}

/// Direction `v` orthogonal to every normal, as a primitive integer vector.
pub fn detect_direction_parametric(nd: &NormalData) -> Result<Option<[Rat; 3]>, Underdetermined> {
    let k = normal_kernel(nd);
    match k.len() {
        0 => Ok(None),
        1 => Ok(Some(int_vector(&k[0]))),
        _ => Err(Underdetermined),
    }
}

/// `[a, b, c, d]` when the image lies in the plane `a*x + b*y + c*z + d = 0`.
pub fn detect_plane_parametric(p: &RationalMap3, nd: &NormalData) -> Option<[Rat; 4]> {
    let k = normal_kernel(nd);
    if k.len() != 2 {
        return None;
    }
    let (u, v) = (&k[0], &k[1]);
    let c = int_vector(&[
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]);
    let comps = p.comps();
    let value = &(&comps[0].scale(&c[0]) + &comps[1].scale(&c[1])) + &comps[2].scale(&c[2]);
    let d = value.constant_value()?;
    Some([c[0].clone(), c[1].clone(), c[2].clone(), -d])
}

/// A curve `(s(t), t(t))` in the parameter plane on which the normal vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamLocus {
    /// Squarefree equation in `s, t`.
    pub equation: MultiPoly,
    /// Parametrization of the locus in the parameter `t`.
    pub s: RatFunc,
    pub t: RatFunc,
}

fn roots_in(p: &MultiPoly, v: &str) -> Vec<Rat> {
    UniPoly::from_multi(&p.trimmed(), v)
        .ok()
        .and_then(|u| u.rational_roots())
        .unwrap_or_default()
}

/// Rational curves in the `(s, t)` plane along which `P_s x P_t` vanishes.
pub fn singular_parameter_locus(
    p: &RationalMap3,
    cfg: &CurveConfig,
) -> Result<Vec<ParamLocus>, AnalysisError> {
    Ok(loci_of(&NormalData::new(p)?, cfg))
}

fn loci_of(nd: &NormalData, cfg: &CurveConfig) -> Vec<ParamLocus> {
    let g = nd.vanishing_factor();
    let mut out = Vec::new();
    let only_s = content_in(&g, T);
    let only_t = content_in(&g, S);
    for c in roots_in(&only_s, S) {
        out.push(ParamLocus {
            equation: (&MultiPoly::var(S) - &MultiPoly::from_rat(c.clone())).primitive(),
            s: RatFunc::from_rat(c),
            t: RatFunc::var(T),
        });
    }
    for c in roots_in(&only_t, T) {
        out.push(ParamLocus {
            equation: (&MultiPoly::var(T) - &MultiPoly::from_rat(c.clone())).primitive(),
            s: RatFunc::var(T),
            t: RatFunc::from_rat(c),
        });
    }
    let mut rest = primitive_part_in(&primitive_part_in(&g, S), T);
    if rest.contains_var(S) {
        for r in rational_branches(&rest, T, S) {
            let lin = &(&MultiPoly::var(S) * r.denom()) - r.numer();
            rest = rest.div_exact(&lin).unwrap_or(rest);
            out.push(ParamLocus {
                equation: lin.primitive(),
                s: r,
                t: RatFunc::var(T),
            });
        }
    }
    if rest.contains_var(T) && rest.contains_var(S) {
        // Branches t = r(s), renamed so the locus parameter is `t`.
        for r in rational_branches(&rest, S, T) {
            let lin = &(&MultiPoly::var(T) * r.denom()) - r.numer();
            rest = rest.div_exact(&lin).unwrap_or(rest);
            out.push(ParamLocus {
                equation: lin.primitive(),
                s: RatFunc::var(T),
                t: r.rename(S, T),
            });
        }
    }
    if rest.total_degree() >= 2 {
        let pc = PlaneCurve::new(rest.clone(), S, T);
        if let Ok(cp) = parametrize_plane_curve(&pc, cfg, "u") {
            out.push(ParamLocus {
                equation: rest,
                s: cp.comps[0].rename("u", T),
                t: cp.comps[1].rename("u", T),
            });
        }
    }
    out
}

/// `P(s(t), t(t))` as a curve in `t`.
pub fn compose_locus(p: &RationalMap3, locus: &ParamLocus) -> Result<RationalMap3, AnalysisError> {
    let b = vec![
        (S.to_string(), locus.s.clone()),
        (T.to_string(), locus.t.clone()),
    ];
    let mut comps: [RatFunc; 3] = std::array::from_fn(|_| RatFunc::from_int(0));
    for (i, c) in p.comps().iter().enumerate() {
        let n = substitute(c.numer(), &b)?;
        let d = substitute(c.denom(), &b)?;
        comps[i] = n.checked_div(&d)?;
    }
    Ok(RationalMap3::new(comps, vec![T.into()]))
}

/// Implicit equation, in the frame's two surviving coordinates, of the
/// section of the image of `p` by the frame's plane. Elimination runs over
/// both parameter orders and keeps the common part.
pub fn section_projection(p: &RationalMap3, frame: &Frame) -> Result<MultiPoly, AnalysisError> {
    let (w, xyz) = p.common_denominator();
    let pl = &frame.plane;
    let cut = &(&(&xyz[0].scale(&pl[0]) + &xyz[1].scale(&pl[1])) + &xyz[2].scale(&pl[2]))
        + &w.scale(&pl[3]);
    if cut.is_zero() {
        return Err(AnalysisError::Degenerate(
            "surface lies in the section plane".into(),
        ));
    }
    let (u, v) = frame.survivors();
    let idx = |c: &str| COORDS.iter().position(|k| *k == c).expect("coordinate");
    let a = &(&MultiPoly::var(u) * &w) - &xyz[idx(u)];
    let b = &(&MultiPoly::var(v) * &w) - &xyz[idx(v)];
    let mut acc: Option<MultiPoly> = None;
    for (first, second) in [(T, S), (S, T)] {
        let Some(r) = double_resultant(&a, &b, &cut, first, second)? else {
            continue;
        };
        let r = squarefree_part(&r);
        acc = Some(match acc {
            None => r,
            Some(prev) => gcd(&prev, &r),
        });
    }
    let h =
        acc.ok_or_else(|| AnalysisError::Degenerate("section elimination degenerated".into()))?;
    let h = strip_spurious(&h, &[u, v], p, frame);
    if h.total_degree() < 1 {
        return Err(AnalysisError::Degenerate("empty plane section".into()));
    }
    Ok(h.trimmed().primitive())
}

fn double_resultant(
    a: &MultiPoly,
    b: &MultiPoly,
    cut: &MultiPoly,
    first: &str,
    second: &str,
) -> Result<Option<MultiPoly>, AnalysisError> {
    if !cut.contains_var(first) {
        return Ok(None);
    }
    let r1 = resultant(a, cut, first)?;
    let r2 = resultant(b, cut, first)?;
    if r1.is_zero() || r2.is_zero() {
        return Ok(None);
    }
    let g = gcd(&r1, &r2);
    let (r1, r2) = (
        r1.div_exact(&g).expect("gcd divides"),
        r2.div_exact(&g).expect("gcd divides"),
    );
    if !r1.contains_var(second) || !r2.contains_var(second) {
        return Ok(None);
    }
    let r = resultant(&r1, &r2, second)?;
    Ok((!r.is_zero() && !r.is_constant()).then_some(r))
}

/// Drop single-coordinate factors of `h` that do not meet the section.
fn strip_spurious(h: &MultiPoly, uv: &[&str; 2], p: &RationalMap3, frame: &Frame) -> MultiPoly {
    let (w, xyz) = p.common_denominator();
    let pl = &frame.plane;
    let cut = &(&(&xyz[0].scale(&pl[0]) + &xyz[1].scale(&pl[1])) + &xyz[2].scale(&pl[2]))
        + &w.scale(&pl[3]);
    let cut = squarefree_part(&cut);
    let mut h = h.clone();
    for (k, var) in uv.iter().enumerate() {
        let other = uv[1 - k];
        let only = content_in(&h, other);
        if !only.contains_var(var) {
            continue;
        }
        let idx = COORDS.iter().position(|c| c == var).expect("coordinate");
        let b = vec![(
            var.to_string(),
            RatFunc::new(xyz[idx].clone(), w.clone()).expect("nonzero"),
        )];
        let pulled = substitute_numerator(&only, &b);
        if gcd(&pulled, &cut).is_constant() {
            h = h.div_exact(&only).expect("content divides");
        }
    }
    h
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

/// Implicitize the rebuilt surface and check the original map lies on it.
/// On success returns the (optionally refined) result and the implicit equation.
pub fn rebuild_and_verify(
    original: &RationalMap3,
    built: ParamResult,
    refine: bool,
) -> Result<(ParamResult, MultiPoly), String> {
    let h = implicitize_ruled(&built).map_err(|e| e.to_string())?;
    if !original.lies_on(&h) {
        return Err("original map does not satisfy the rebuilt implicit equation".into());
    }
    let cert = format!(
        "original P(s,t) vanishes identically on the rebuilt implicit equation of degree {}",
        h.total_degree()
    );
    let mut out = ParamResult {
        verified: true,
        certificate: cert.clone(),
        ..built
    };
    if refine && out.kind != RuledKind::Plane {
        let r = reduce_directrix(&out);
        if r.surface().lies_on(&h) {
            out = ParamResult {
                verified: true,
                certificate: cert,
                ..r
            };
        }
    }
    Ok((out, h))
}

fn section_directrix(
    p: &RationalMap3,
    frames: Vec<Frame>,
    cfg: &CurveConfig,
) -> Result<(SectionInfo, CurveParam, RationalMap3), String> {
    let mut first_err: Option<String> = None;
    for frame in frames {
        let attempt = section_projection(p, &frame)
            .map_err(|e| e.to_string())
            .and_then(|h| {
                let (u, v) = frame.survivors();
                let pc = PlaneCurve::new(h.clone(), u, v).with_frame(frame.clone());
                let cp = parametrize_plane_curve(&pc, cfg, T).map_err(|e| e.to_string())?;
                let cp = lift_to_space(&cp, &frame).map_err(|e| e.to_string())?;
                let m = curve_map(&cp)?;
                Ok((
                    SectionInfo {
                        frame: frame.clone(),
                        curve: h,
                    },
                    cp,
                    m,
                ))
            });
        match attempt {
            Ok(r) => return Ok(r),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.unwrap_or_else(|| "no admissible section plane".into()))
}

enum Seed {
    Apex([Rat; 3]),
    Direction([Rat; 3]),
    Edge(Vec<ParamLocus>),
}

/// Run the full parametric pipeline on `P(s, t)`.
pub fn analyze_parametric(
    p: &RationalMap3,
    cfg: &AnalysisConfig,
) -> Result<Analysis, AnalysisError> {
    let mut timer = Timer::start();
    let p = &p.clone().with_params(vec![S.into(), T.into()]);
    let nd = NormalData::new(p)?;
    let k = nd.gaussian_form();
    timer.lap("curvature");
    if !k.is_zero() {
        let mut a = Analysis::new(SurfaceClass::NotDevelopable, k);
        timer.lap("classify");
        a.stages = timer.finish();
        return Ok(a);
    }
    if let Some(plane) = detect_plane_parametric(p, &nd) {
        timer.lap("classify");
        let frame = Frame::new(plane.clone()).expect("nonzero normal");
        let mut a = Analysis::new(SurfaceClass::Plane { plane }, k);
        let built = build_plane(&frame);
        let poly = frame.plane_poly();
        if p.lies_on(&poly) && built.surface().lies_on(&poly) {
            a.param = Some(ParamResult {
                verified: true,
                certificate: "original P(s,t) lies on the plane".into(),
                ..built
            });
        } else {
            a.failure = Some("plane rebuild failed verification".into());
        }
        a.implicit = Some(poly);
        timer.lap("rebuild");
        a.stages = timer.finish();
        return Ok(a);
    }
    let (class, seed) = match detect_apex_parametric(&nd) {
        Err(Underdetermined) => (
            SurfaceClass::DevelopableUnresolved {
                reason: "apex system is underdetermined".into(),
            },
            None,
        ),
        Ok(Some(apex)) => (
            SurfaceClass::Conical { apex: apex.clone() },
            Some(Seed::Apex(apex)),
        ),
        Ok(None) => match detect_direction_parametric(&nd) {
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
                let loci = loci_of(&nd, &cfg.curve);
                let g = nd.vanishing_factor();
                if g.total_degree() < 1 {
                    (
                        SurfaceClass::DevelopableUnresolved {
                            reason: "no one-dimensional singular locus".into(),
                        },
                        None,
                    )
                } else {
                    (
                        SurfaceClass::Tangential {
                            edge_system: vec![g],
                        },
                        Some(Seed::Edge(loci)),
                    )
                }
            }
        },
    };
    timer.lap("classify");
    let mut a = Analysis::new(class, k);
    let attempt = |a: &mut Analysis, built: Result<ParamResult, String>| match built
        .and_then(|r| rebuild_and_verify(p, r, cfg.refine))
    {
        Ok((r, h)) => {
            a.param = Some(r);
            a.implicit = Some(h);
            true
        }
        Err(e) => {
            a.failure.get_or_insert(e);
            false
        }
    };
    match seed {
        None => {}
        Some(Seed::Apex(apex)) => {
            let frames = admissible_frames(cfg.plane_budget, Some(&apex), None);
            match section_directrix(p, frames, &cfg.curve) {
                Ok((sec, cp, m)) => {
                    a.section = Some(sec);
                    a.curve = Some(cp);
                    attempt(&mut a, build_conical(&apex, &m).map_err(|e| e.to_string()));
                }
                Err(e) => a.failure = Some(e),
            }
        }
        Some(Seed::Direction(d)) => {
            let frames = admissible_frames(cfg.plane_budget, None, Some(&d));
            match section_directrix(p, frames, &cfg.curve) {
                Ok((sec, cp, m)) => {
                    a.section = Some(sec);
                    a.curve = Some(cp);
                    attempt(&mut a, build_cylindrical(&d, &m).map_err(|e| e.to_string()));
                }
                Err(e) => a.failure = Some(e),
            }
        }
        Some(Seed::Edge(loci)) => {
            if loci.is_empty() {
                a.failure =
                    Some("singular locus has no rational component in a supported family".into());
            }
            for locus in &loci {
                let edge = match compose_locus(p, locus) {
                    Ok(e) if !e.is_constant() => e,
                    Ok(_) => {
                        a.failure
                            .get_or_insert("singular locus maps to a point".into());
                        continue;
                    }
                    Err(e) => {
                        a.failure.get_or_insert(e.to_string());
                        continue;
                    }
                };
                let proper = tracing_index(edge.comps(), T) == 1;
                let edge = if proper {
                    edge
                } else {
                    match proper_reparametrize(&edge) {
                        Ok(e) => e,
                        Err(e) => {
                            a.failure.get_or_insert(e.to_string());
                            continue;
                        }
                    }
                };
                let edge = polynomial_reparametrize(&edge);
                let cp = CurveParam {
                    coords: COORDS.iter().map(|c| c.to_string()).collect(),
                    comps: edge.comps().to_vec(),
                    param: T.into(),
                    proper: tracing_index(edge.comps(), T) == 1,
                    source: CurveSource::CuspidalEdge,
                };
                if attempt(&mut a, build_tangential(&edge).map_err(|e| e.to_string())) {
                    a.class = SurfaceClass::Tangential {
                        edge_system: vec![locus.equation.clone()],
                    };
                    a.curve = Some(cp);
                    a.failure = None;
                    break;
                }
            }
        }
    }
    if a.param.is_some() {
        a.failure = None;
    }
    timer.lap("rebuild");
    a.stages = timer.finish();
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::ruled_triple_product;
    use crate::parse::parse_map;
    use crate::poly::int;

    fn map(s: &str) -> RationalMap3 {
        parse_map(s).unwrap()
    }

    /// `det(N_s, N_t, N)` from the unreduced cross product of the partials.
    fn curvature_oracle(p: &RationalMap3) -> RatFunc {
        let ps = p.derivative(S);
        let pt = p.derivative(T);
        let c = |i: usize, j: usize| &(ps.comp(i) * pt.comp(j)) - &(ps.comp(j) * pt.comp(i));
        let n = [c(1, 2), c(2, 0), c(0, 1)];
        let ns: Vec<RatFunc> = n.iter().map(|v| v.derivative(S)).collect();
        let nt: Vec<RatFunc> = n.iter().map(|v| v.derivative(T)).collect();
        let minor = |a: usize, b: usize| &(&nt[a] * &n[b]) - &(&nt[b] * &n[a]);
        &(&(&ns[0] * &minor(1, 2)) - &(&ns[1] * &minor(0, 2))) + &(&ns[2] * &minor(0, 1))
    }

    #[test]
    fn plane_and_paraboloid_curvature() {
        assert!(gaussian_form_parametric(&map("(s, t, 0)"))
            .unwrap()
            .is_zero());
        let p = map("(s, t, s^2 + t^2)");
        let k = gaussian_form_parametric(&p).unwrap();
        assert!(!k.is_zero());
        assert_eq!(k, curvature_oracle(&p));
    }

    #[test]
    fn curvature_matches_oracle_on_rational_map() {
        let p = map("((s + t)/(1 + t^2), s*t/(1 + s^2), (s - t^2)/(1 + t^2))");
        assert_eq!(gaussian_form_parametric(&p).unwrap(), curvature_oracle(&p));
    }

    #[test]
    fn curve_input_is_degenerate() {
        assert!(matches!(
            NormalData::new(&map("(t, t^2, t^3)")),
            Err(AnalysisError::Degenerate(_))
        ));
    }

    #[test]
    fn apex_of_cone_map() {
        let p = map("(s*(1 - t^2)/(1 + t^2) + 1, s*2*t/(1 + t^2) + 2, s)");
        let nd = NormalData::new(&p).unwrap();
        assert_eq!(
            detect_apex_parametric(&nd),
            Ok(Some([int(1), int(2), int(0)]))
        );
        assert_eq!(detect_direction_parametric(&nd), Ok(None));
    }

    #[test]
    fn plane_apex_is_underdetermined() {
        let nd = NormalData::new(&map("(s, t, 0)")).unwrap();
        assert_eq!(detect_apex_parametric(&nd), Err(Underdetermined));
        assert_eq!(
            detect_plane_parametric(&map("(s, t, 0)"), &nd),
            Some([int(0), int(0), int(1), int(0)])
        );
    }

    #[test]
    fn cylinder_direction() {
        let p = map("((1 - t^2)/(1 + t^2), 2*t/(1 + t^2), s)");
        let nd = NormalData::new(&p).unwrap();
        assert_eq!(detect_apex_parametric(&nd), Ok(None));
        assert_eq!(
            detect_direction_parametric(&nd),
            Ok(Some([int(0), int(0), int(1)]))
        );
    }

    #[test]
    fn tangent_surface_locus_is_s_zero() {
        let p = map("(t + s, t^2 + 2*s*t, t^3 + 3*s*t^2)");
        let loci = singular_parameter_locus(&p, &CurveConfig::default()).unwrap();
        assert_eq!(loci[0].equation, MultiPoly::var(S));
        let edge = compose_locus(&p, &loci[0]).unwrap();
        assert_eq!(edge, map("(t, t^2, t^3)"));
    }

    #[test]
    fn plane_pipeline() {
        let a = analyze_parametric(&map("(s, t, 0)"), &AnalysisConfig::default()).unwrap();
        assert_eq!(
            a.class,
            SurfaceClass::Plane {
                plane: [int(0), int(0), int(1), int(0)]
            }
        );
        let r = a.param.unwrap();
        assert!(r.verified);
        assert_eq!(r.surface(), map("(s, t, 0)"));
    }

    #[test]
    fn saddle_is_not_developable() {
        let a = analyze_parametric(&map("(s, t, s*t)"), &AnalysisConfig::default()).unwrap();
        assert_eq!(a.class, SurfaceClass::NotDevelopable);
    }

    #[test]
    fn triple_product_agrees_with_curvature() {
        for (p0, p1) in [
            ("(t, t^2, t^3)", "(1, 2*t, 3*t^2)"),
            ("(t, t^2, t^3)", "(1, t, 1)"),
            ("(0, 0, 0)", "(1 - t^2, 2*t, 1 + t^2)"),
        ] {
            let (p0, p1) = (map(p0), map(p1));
            let surf = p0
                .add(&p1.scale(&RatFunc::var(S)))
                .with_params(vec![S.into(), T.into()]);
            let k = gaussian_form_parametric(&surf).unwrap();
            assert_eq!(k.is_zero(), ruled_triple_product(&p0, &p1).is_zero());
        }
    }
}
