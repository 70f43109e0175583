use crate::poly::{substitute, substitute_numerator, MultiPoly, RatFunc};

use super::{tracing_index, CurveError, CurveParam, CurveSource, Frame, PlaneCurve, COORDS};

/// Intersection of `f(x, y, z) = 0` with the frame's plane, written in the two
/// surviving coordinates.
pub fn section_curve(f: &MultiPoly, frame: &Frame) -> PlaneCurve {
    let solved = COORDS[frame.solved];
    let g = substitute_numerator(
        f,
        &[(solved.to_string(), RatFunc::from_poly(frame.solved_expr()))],
    );
    let (u, v) = frame.survivors();
    let g = g.trimmed().primitive();
    PlaneCurve::new(g, u, v).with_frame(frame.clone())
}

fn into_space(cp: &CurveParam, missing: &str, value: RatFunc, source: CurveSource) -> CurveParam {
    let mut comps = Vec::with_capacity(3);
    for name in COORDS {
        if name == missing {
            comps.push(value.clone());
        } else {
            let i = cp
                .coords
                .iter()
                .position(|c| c == name)
                .expect("coordinate present");
            comps.push(cp.comps[i].clone());
        }
    }
    let proper = tracing_index(&comps, &cp.param) == 1;
    CurveParam {
        coords: COORDS.iter().map(|s| s.to_string()).collect(),
        comps,
        param: cp.param.clone(),
        proper,
        source,
    }
}

/// Embed a parametrized plane section back into space through its frame.
pub fn lift_to_space(cp: &CurveParam, frame: &Frame) -> Result<CurveParam, CurveError> {
    let solved = COORDS[frame.solved];
    let value = substitute(&frame.solved_expr(), &cp.bindings())?;
    Ok(into_space(cp, solved, value, CurveSource::PlaneSection))
}

/// Lift a parametrized projection of a space curve using a polynomial `h`
/// that is linear in the missing coordinate along the curve.
pub fn lift_edge(cp: &CurveParam, h: &MultiPoly) -> Result<CurveParam, CurveError> {
    let missing = COORDS
        .iter()
        .copied()
        .find(|c| !cp.coords.iter().any(|k| k == c))
        .ok_or_else(|| CurveError::Lift("projection already has three coordinates".into()))?;
    if h.degree_in(missing) != 1 {
        return Err(CurveError::Lift(format!(
            "lifting polynomial is not linear in {missing}"
        )));
    }
    let cs = h.coeffs_in(missing);
    let a = substitute(&cs[1], &cp.bindings())?;
    let b = substitute(&cs[0], &cp.bindings())?;
    if a.is_zero() {
        return Err(CurveError::Lift(format!(
            "{missing} is not determined along the curve"
        )));
    }
    let value = &(-b) / &a;
    Ok(into_space(cp, missing, value, CurveSource::CuspidalEdge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{parametrize_plane_curve, CurveConfig};
    use crate::parse::parse_poly;
    use crate::poly::int;

    #[test]
    fn cone_section_lifts_onto_surface() {
        let f = parse_poly("x^2 + y^2 - z^2", &["x", "y", "z"]).unwrap();
        let fr = Frame::new([int(0), int(0), int(1), int(-1)]).unwrap();
        let c = section_curve(&f, &fr);
        assert_eq!(c.poly.total_degree(), 2);
        let p = parametrize_plane_curve(&c, &CurveConfig::default(), "t").unwrap();
        let s = lift_to_space(&p, &fr).unwrap();
        assert!(s.satisfies(&f));
        assert!(s.satisfies(&fr.plane_poly()));
        assert!(s.proper);
    }

    #[test]
    fn edge_lift_solves_linear_coordinate() {
        let g = parse_poly("y^2 - z^3", &["y", "z"]).unwrap();
        let p =
            parametrize_plane_curve(&PlaneCurve::new(g, "y", "z"), &CurveConfig::default(), "t")
                .unwrap();
        let h = parse_poly("2*x - y*z", &["x", "y", "z"]).unwrap();
        let s = lift_edge(&p, &h).unwrap();
        assert_eq!(s.source, CurveSource::CuspidalEdge);
        assert!(s.satisfies(&h));
        assert_eq!(
            s.comps[0],
            RatFunc::var("t").pow(5).scale(&crate::poly::rat(1, 2))
        );
    }
}
