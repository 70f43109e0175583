//! Types shared by the implicit and parametric pipelines.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;
use thiserror::Error;

use crate::builder::ParamResult;
use crate::curve::{CurveConfig, CurveParam, Frame};
use crate::poly::{int, MultiPoly, PolyError, Rat, RatFunc};

/// Classification verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceClass {
    NotDevelopable,
    /// `a*x + b*y + c*z + d = 0`.
    Plane {
        plane: [Rat; 4],
    },
    Conical {
        apex: [Rat; 3],
    },
    /// Primitive integer direction, first nonzero entry positive.
    Cylindrical {
        direction: [Rat; 3],
    },
    /// Equations of the cuspidal-edge candidate: for implicit input, a
    /// lifting polynomial and a plane curve; for parametric input, the curve
    /// in the `(s, t)` plane.
    Tangential {
        edge_system: Vec<MultiPoly>,
    },
    /// Curvature vanishes on the surface but no seed data could be extracted.
    DevelopableUnresolved {
        reason: String,
    },
}

impl SurfaceClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SurfaceClass::NotDevelopable => "NotDevelopable",
            SurfaceClass::Plane { .. } => "Plane",
            SurfaceClass::Conical { .. } => "Conical",
            SurfaceClass::Cylindrical { .. } => "Cylindrical",
            SurfaceClass::Tangential { .. } => "Tangential",
            SurfaceClass::DevelopableUnresolved { .. } => "DevelopableUnresolved",
        }
    }

    pub fn is_developable(&self) -> bool {
        !matches!(self, SurfaceClass::NotDevelopable)
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Pipeline knobs.
#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub curve: CurveConfig,
    /// Number of candidate section planes considered.
    pub plane_budget: usize,
    /// Lower the directrix degree of the final parametrization.
    pub refine: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            curve: CurveConfig::default(),
            plane_budget: PLANE_OFFSETS.len() * PLANE_FORMS.len(),
            refine: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub name: &'static str,
    pub elapsed: Duration,
}

#[derive(Debug)]
pub(crate) struct Timer {
    stages: Vec<Stage>,
    last: Instant,
}

impl Timer {
    pub(crate) fn start() -> Self {
        Timer {
            stages: Vec::new(),
            last: Instant::now(),
        }
    }

    pub(crate) fn lap(&mut self, name: &'static str) {
        let now = Instant::now();
        self.stages.push(Stage {
            name,
            elapsed: now - self.last,
        });
        self.last = now;
    }

    pub(crate) fn finish(self) -> Vec<Stage> {
        self.stages
    }
}

/// The plane section used to recover a directrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionInfo {
    pub frame: Frame,
    /// Implicit equation of the section in the frame's surviving coordinates.
    pub curve: MultiPoly,
}

/// Everything a pipeline run produces.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub class: SurfaceClass,
    /// Curvature numerator: `K(x, y, z)` for implicit input, `K(s, t)` for parametric input.
    pub k: RatFunc,
    pub section: Option<SectionInfo>,
    /// Directrix or cuspidal edge used for the rebuild.
    pub curve: Option<CurveParam>,
    pub param: Option<ParamResult>,
    /// Implicit equation the parametrization was verified against.
    pub implicit: Option<MultiPoly>,
    /// Why no parametrization was produced, when the surface is developable.
    pub failure: Option<String>,
    pub stages: Vec<Stage>,
}

impl Analysis {
    pub(crate) fn new(class: SurfaceClass, k: RatFunc) -> Self {
        Analysis {
            class,
            k,
            section: None,
            curve: None,
            param: None,
            implicit: None,
            failure: None,
            stages: Vec::new(),
        }
    }
}

const PLANE_OFFSETS: [i64; 7] = [1, 0, -1, 2, -2, 3, -3];
const PLANE_FORMS: [[i64; 3]; 5] = [[0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 0, -1], [1, 1, 1]];

/// Candidate section planes `form = c`, in trial order.
pub fn candidate_planes(budget: usize) -> Vec<Frame> {
    let mut out = Vec::new();
    for c in PLANE_OFFSETS {
        for f in PLANE_FORMS {
            if out.len() >= budget {
                return out;
            }
            let plane = [int(f[0]), int(f[1]), int(f[2]), int(-c)];
            out.extend(Frame::new(plane));
        }
    }
    out
}

pub(crate) fn plane_value(plane: &[Rat; 4], p: &[Rat; 3]) -> Rat {
    &plane[0] * &p[0] + &plane[1] * &p[1] + &plane[2] * &p[2] + &plane[3]
}

pub(crate) fn normal_dot(plane: &[Rat; 4], v: &[Rat; 3]) -> Rat {
    &plane[0] * &v[0] + &plane[1] * &v[1] + &plane[2] * &v[2]
}

/// Candidate frames admissible for a cone with `apex` or a cylinder along `dir`.
pub(crate) fn admissible_frames(
    budget: usize,
    apex: Option<&[Rat; 3]>,
    dir: Option<&[Rat; 3]>,
) -> Vec<Frame> {
    candidate_planes(budget)
        .into_iter()
        .filter(|f| apex.is_none_or(|a| !plane_value(&f.plane, a).is_zero()))
        .filter(|f| dir.is_none_or(|d| !normal_dot(&f.plane, d).is_zero()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_candidate_is_z_equals_one() {
        let p = candidate_planes(35);
        assert_eq!(p.len(), 35);
        assert_eq!(p[0].plane, [int(0), int(0), int(1), int(-1)]);
        assert_eq!(candidate_planes(3).len(), 3);
    }

    #[test]
    fn frames_avoid_apex_and_direction() {
        let apex = [int(0), int(0), int(1)];
        assert!(admissible_frames(35, Some(&apex), None)
            .iter()
            .all(|f| !plane_value(&f.plane, &apex).is_zero()));
        let d = [int(0), int(0), int(1)];
        let fr = admissible_frames(35, None, Some(&d));
        assert!(fr.iter().all(|f| !normal_dot(&f.plane, &d).is_zero()));
    }
}
