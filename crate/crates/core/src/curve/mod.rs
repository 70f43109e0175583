//! Rational parametrization of plane curves and lifting to space curves.
//!
//! Supported families: lines, conics with a rational point, degree-`d`
//! curves with a rational `(d-1)`-fold point (affine or at infinity), and
//! curves whose singularities are exactly `(d-1)(d-2)/2` ordinary double
//! points, handled with the pencil of adjoint curves of degree `d-2`.

mod adjoint;
mod branches;
mod conic;
mod lift;
mod points;
mod proper;
mod singular;

use thiserror::Error;

use crate::poly::{MultiPoly, PolyError, Rat, RatFunc, RationalMap3};

pub use adjoint::parametrize_adjoint;
pub use branches::rational_branches;
pub use conic::parametrize_conic;
pub use lift::{lift_edge, lift_to_space, section_curve};
pub use points::{find_rational_points, small_rationals};
pub use proper::{is_proper_curve, polynomial_reparametrize, proper_reparametrize, tracing_index};
pub use singular::parametrize_monomial_like;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("conic parametrization over the rationals not found within the point-search budget")]
    NoRationalPoint,
    #[error("curve is reducible")]
    Reducible,
    #[error("unsupported curve: {0}")]
    Unsupported(String),
    #[error("curve is not rational: {0}")]
    NotRational(String),
    #[error("lifting failed: {0}")]
    Lift(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Search and budget knobs for curve parametrization.
#[derive(Clone, Debug)]
pub struct CurveConfig {
    /// Largest numerator / denominator tried for abscissae in point search.
    pub point_height: i64,
    /// Number of abscissae tried per coordinate.
    pub point_budget: usize,
    /// Known points on the curve, tried before any search.
    pub hints: Vec<(Rat, Rat)>,
}

impl Default for CurveConfig {
    fn default() -> Self {
        CurveConfig {
            point_height: 50,
            point_budget: 200,
            hints: Vec::new(),
        }
    }
}

/// Plane `a*x + b*y + c*z + d = 0` together with the coordinate that is
/// solved for when restricting to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub plane: [Rat; 4],
    /// Index (0, 1, 2 for x, y, z) of the eliminated coordinate.
    pub solved: usize,
}

pub const COORDS: [&str; 3] = ["x", "y", "z"];

impl Frame {
    /// Frame for `plane`, solving for the last coordinate with a nonzero coefficient.
    pub fn new(plane: [Rat; 4]) -> Option<Frame> {
        let solved = (0..3)
            .rev()
            .find(|&i| !num_traits::Zero::is_zero(&plane[i]))?;
        Some(Frame { plane, solved })
    }

    /// The two surviving coordinate names, in `x, y, z` order.
    pub fn survivors(&self) -> (&'static str, &'static str) {
        let s: Vec<&str> = (0..3)
            .filter(|&i| i != self.solved)
            .map(|i| COORDS[i])
            .collect();
        (s[0], s[1])
    }

    /// The solved coordinate as a polynomial in the survivors.
    pub fn solved_expr(&self) -> MultiPoly {
        let k = &self.plane[self.solved];
        let mut acc = MultiPoly::from_rat(-&self.plane[3] / k);
        for (i, c) in COORDS.iter().enumerate() {
            if i != self.solved {
                acc = &acc - &MultiPoly::var(c).scale(&(&self.plane[i] / k));
            }
        }
        acc
    }

    pub fn plane_poly(&self) -> MultiPoly {
        let mut acc = MultiPoly::from_rat(self.plane[3].clone());
        for (c, a) in COORDS.iter().zip(&self.plane) {
            acc = &acc + &MultiPoly::var(c).scale(a);
        }
        acc
    }

    pub fn normal(&self) -> [Rat; 3] {
        [
            self.plane[0].clone(),
            self.plane[1].clone(),
            self.plane[2].clone(),
        ]
    }
}

/// A plane curve `poly(u, v) = 0`, optionally embedded in space via a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    pub poly: MultiPoly,
    pub u: String,
    pub v: String,
    pub frame: Option<Frame>,
}

impl PlaneCurve {
    pub fn new(poly: MultiPoly, u: &str, v: &str) -> Self {
        PlaneCurve {
            poly,
            u: u.to_string(),
            v: v.to_string(),
            frame: None,
        }
    }

    pub fn with_frame(mut self, frame: Frame) -> Self {
        self.frame = Some(frame);
        self
    }

    pub fn degree(&self) -> i64 {
        self.poly.total_degree()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveSource {
    PlaneSection,
    CuspidalEdge,
}

/// Rational parametrization of a curve: `coords[i] = comps[i](param)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParam {
    pub coords: Vec<String>,
    pub comps: Vec<RatFunc>,
    pub param: String,
    pub proper: bool,
    pub source: CurveSource,
}

impl CurveParam {
    pub fn bindings(&self) -> Vec<(String, RatFunc)> {
        self.coords
            .iter()
            .cloned()
            .zip(self.comps.iter().cloned())
            .collect()
    }

    /// True when `p` vanishes identically along the parametrization.
    pub fn satisfies(&self, p: &MultiPoly) -> bool {
        crate::poly::substitute_numerator(p, &self.bindings()).is_zero()
    }

    /// Space curve, if the coordinates are `x, y, z`.
    pub fn to_map3(&self) -> Option<RationalMap3> {
        if self.coords.len() != 3 {
            return None;
        }
        let get = |n: &str| {
            self.coords
                .iter()
                .position(|c| c == n)
                .map(|i| self.comps[i].clone())
        };
        Some(RationalMap3::new(
            [get("x")?, get("y")?, get("z")?],
            vec![self.param.clone()],
        ))
    }

    /// Largest numerator or denominator degree in the parameter.
    pub fn degree(&self) -> i64 {
        self.comps
            .iter()
            .map(|c| c.degree_in(&self.param))
            .max()
            .unwrap_or(0)
    }
}

/// Plane parametrization `(u(t), v(t))` produced by the family routines.
pub(crate) type PlanePair = (RatFunc, RatFunc);

pub(crate) fn pair_degree(p: &PlanePair, param: &str) -> i64 {
    p.0.degree_in(param).max(p.1.degree_in(param))
}

pub(crate) fn pair_satisfies(f: &MultiPoly, u: &str, v: &str, p: &PlanePair) -> bool {
    let b = vec![(u.to_string(), p.0.clone()), (v.to_string(), p.1.clone())];
    crate::poly::substitute_numerator(f, &b).is_zero()
}

pub(crate) fn finish_plane(
    c: &PlaneCurve,
    pair: PlanePair,
    param: &str,
) -> Result<CurveParam, CurveError> {
    if !pair_satisfies(&c.poly, &c.u, &c.v, &pair) {
        return Err(CurveError::Unsupported(
            "parametrization failed verification".into(),
        ));
    }
    let trim = |r: RatFunc| {
        let (n, d) = r.into_parts();
        RatFunc::new(n.trimmed(), d.trimmed()).expect("nonzero denominator")
    };
    let pair = (trim(pair.0), trim(pair.1));
    let proper = tracing_index(&[pair.0.clone(), pair.1.clone()], param) == 1;
    Ok(CurveParam {
        coords: vec![c.u.clone(), c.v.clone()],
        comps: vec![pair.0, pair.1],
        param: param.to_string(),
        proper,
        source: CurveSource::PlaneSection,
    })
}

/// Parametrize a line `a*u + b*v + c = 0`.
pub fn parametrize_line(c: &PlaneCurve, param: &str) -> Result<CurveParam, CurveError> {
    let f = &c.poly;
    if f.total_degree() != 1 {
        return Err(CurveError::Unsupported("not a line".into()));
    }
    let coef = |n: &str| f.derivative(n).constant_value().unwrap_or_default();
    let (a, b) = (coef(&c.u), coef(&c.v));
    let c0 = f.constant_term();
    let t = RatFunc::var(param);
    let pair = if !num_traits::Zero::is_zero(&b) {
        let v = &(&t.scale(&-&a) - &RatFunc::from_rat(c0)) * &RatFunc::from_rat(b.recip());
        (t, v)
    } else {
        (RatFunc::from_rat(-c0 / a), t)
    };
    finish_plane(c, pair, param)
}

/// Dispatch over the supported families, lowest-cost first.
pub fn parametrize_plane_curve(
    c: &PlaneCurve,
    cfg: &CurveConfig,
    param: &str,
) -> Result<CurveParam, CurveError> {
    let d = c.degree();
    match d {
        d if d < 1 => Err(CurveError::Unsupported("constant polynomial".into())),
        1 => parametrize_line(c, param),
        2 => parametrize_conic(c, cfg, param),
        _ => match parametrize_monomial_like(c, param) {
            Ok(p) => Ok(p),
            Err(first) => parametrize_adjoint(c, cfg, param).map_err(|e| match e {
                CurveError::Unsupported(_) => first,
                other => other,
            }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::int;

    #[test]
    fn line_in_plane() {
        let f = parse_poly("y", &["x", "y"]).unwrap();
        let p = parametrize_line(&PlaneCurve::new(f, "x", "y"), "t").unwrap();
        assert_eq!(p.comps[0], RatFunc::var("t"));
        assert!(p.comps[1].is_zero());
        let g = parse_poly("x - 3", &["x", "y"]).unwrap();
        let q = parametrize_line(&PlaneCurve::new(g, "x", "y"), "t").unwrap();
        assert_eq!(q.comps[0], RatFunc::from_int(3));
    }

    #[test]
    fn frame_solves_last_coordinate() {
        let fr = Frame::new([int(1), int(0), int(-1), int(0)]).unwrap();
        assert_eq!(fr.solved, 2);
        assert_eq!(fr.survivors(), ("x", "y"));
        assert_eq!(fr.solved_expr(), MultiPoly::var("x"));
    }
}
