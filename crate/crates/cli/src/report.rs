//! JSON and text rendering of pipeline results.

use std::fmt::Write as _;

use devsurf_core::analysis::{Analysis, SurfaceClass};
use devsurf_core::curve::{CurveParam, CurveSource};
use devsurf_core::parse::ParseError;
use devsurf_core::{MultiPoly, Rat};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_NOT_DEVELOPABLE: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Implicit,
    Parametric,
}

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub kind: InputKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub text: String,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Parametrized,
    DevelopableUnsupported,
    NotDevelopable,
    InputError,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind")]
pub enum Classification {
    NotDevelopable,
    Plane {
        plane: [String; 4],
        equation: String,
    },
    Conical {
        apex: [String; 3],
    },
    Cylindrical {
        direction: [String; 3],
    },
    Tangential {
        edge_system: Vec<String>,
    },
    DevelopableUnresolved {
        reason: String,
    },
}

#[derive(Debug, Serialize)]
pub struct Section {
    pub plane: String,
    pub coords: [String; 2],
    pub curve: String,
}

#[derive(Debug, Serialize)]
pub struct Curve {
    pub param: String,
    pub coords: Vec<String>,
    pub comps: Vec<String>,
    pub proper: bool,
    pub source: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Parametrization {
    pub kind: String,
    pub p0: String,
    pub p1: String,
    pub surface: String,
    pub refined: bool,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub verified: bool,
    pub certificate: String,
}

#[derive(Debug, Serialize)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub stage: &'static str,
    pub ms: f64,
}

/// One analysis run, as printed by `implicit` and `parametric`.
#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub status: Status,
    pub exit_code: i32,
    pub classification: Option<Classification>,
    pub k_poly: Option<String>,
    pub section: Option<Section>,
    pub curve: Option<Curve>,
    pub parametrization: Option<Parametrization>,
    pub implicit: Option<String>,
    pub verification: Option<Verification>,
    pub message: Option<String>,
    pub error: Option<InputError>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<Timing>>,
}

fn strs<const N: usize>(v: &[Rat; N]) -> [String; N] {
    std::array::from_fn(|i| v[i].to_string())
}

fn plane_equation(p: &[Rat; 4]) -> String {
    let mut acc = MultiPoly::from_rat(p[3].clone());
    for (i, c) in ["x", "y", "z"].iter().enumerate() {
        acc = &acc + &MultiPoly::var(c).scale(&p[i]);
    }
    acc.to_string()
}

fn classification(c: &SurfaceClass) -> Classification {
    match c {
        SurfaceClass::NotDevelopable => Classification::NotDevelopable,
        SurfaceClass::Plane { plane } => Classification::Plane {
            plane: strs(plane),
            equation: plane_equation(plane),
        },
        SurfaceClass::Conical { apex } => Classification::Conical { apex: strs(apex) },
        SurfaceClass::Cylindrical { direction } => Classification::Cylindrical {
            direction: strs(direction),
        },
        SurfaceClass::Tangential { edge_system } => Classification::Tangential {
            edge_system: edge_system.iter().map(ToString::to_string).collect(),
        },
        SurfaceClass::DevelopableUnresolved { reason } => Classification::DevelopableUnresolved {
            reason: reason.clone(),
        },
    }
}

fn curve(c: &CurveParam) -> Curve {
    Curve {
        param: c.param.clone(),
        coords: c.coords.clone(),
        comps: c.comps.iter().map(ToString::to_string).collect(),
        proper: c.proper,
        source: match c.source {
            CurveSource::PlaneSection => "plane_section",
            CurveSource::CuspidalEdge => "cuspidal_edge",
        },
    }
}

impl AnalysisReport {
    fn blank(input: InputEcho, status: Status, exit_code: i32) -> Self {
        AnalysisReport {
            input,
            status,
            exit_code,
            classification: None,
            k_poly: None,
            section: None,
            curve: None,
            parametrization: None,
            implicit: None,
            verification: None,
            message: None,
            error: None,
            timings_ms: None,
        }
    }

    pub fn parse_failure(input: InputEcho, e: &ParseError) -> Self {
        let mut r = Self::blank(input, Status::InputError, EXIT_INPUT);
        r.error = Some(input_error(e));
        r
    }

    /// Developable input the pipeline cannot handle, e.g. a curve image.
    pub fn degenerate(input: InputEcho, message: String) -> Self {
        let mut r = Self::blank(input, Status::DevelopableUnsupported, EXIT_UNSUPPORTED);
        r.message = Some(message);
        r
    }

    pub fn from_analysis(input: InputEcho, a: &Analysis, timings: bool) -> Self {
        // A parametrization is only reported once it has been checked.
        let param = a.param.as_ref().filter(|p| p.verified);
        let (status, code) = if !a.class.is_developable() {
            (Status::NotDevelopable, EXIT_NOT_DEVELOPABLE)
        } else if param.is_some() {
            (Status::Parametrized, EXIT_OK)
        } else {
            (Status::DevelopableUnsupported, EXIT_UNSUPPORTED)
        };
        let mut r = Self::blank(input, status, code);
        r.classification = Some(classification(&a.class));
        r.k_poly = Some(a.k.to_string());
        r.section = a.section.as_ref().map(|s| {
            let (u, v) = s.frame.survivors();
            Section {
                plane: s.frame.plane_poly().to_string(),
                coords: [u.to_string(), v.to_string()],
                curve: s.curve.to_string(),
            }
        });
        r.curve = a.curve.as_ref().map(curve);
        if let Some(p) = param {
            r.parametrization = Some(Parametrization {
                kind: p.kind.to_string(),
                p0: p.p0.to_string(),
                p1: p.p1.to_string(),
                surface: p.surface().to_string(),
                refined: p.refined,
            });
            r.implicit = a.implicit.as_ref().map(ToString::to_string);
            r.verification = Some(Verification {
                verified: true,
                certificate: p.certificate.clone(),
            });
        }
        r.message = match (&a.failure, &a.class) {
            (Some(f), _) => Some(f.clone()),
            (None, SurfaceClass::NotDevelopable) => Some("not a developable surface".into()),
            (None, _) if param.is_none() => Some("no verified parametrization".into()),
            _ => None,
        };
        if timings {
            r.timings_ms = Some(
                a.stages
                    .iter()
                    .map(|s| Timing {
                        stage: s.name,
                        ms: (s.elapsed.as_secs_f64() * 1e6).round() / 1e3,
                    })
                    .collect(),
            );
        }
        r
    }

    /// Multi-line summary for `--pretty`.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let kind = match self.input.kind {
            InputKind::Implicit => "implicit",
            InputKind::Parametric => "parametric",
        };
        let _ = writeln!(out, "input:          {kind} {}", self.input.text);
        if let Some(e) = &self.error {
            let _ = writeln!(
                out,
                "error:          line {}, column {}: {}",
                e.line, e.column, e.message
            );
        }
        if let Some(c) = &self.classification {
            let line = match c {
                Classification::NotDevelopable => "not developable".to_string(),
                Classification::Plane { equation, .. } => format!("plane {equation} = 0"),
                Classification::Conical { apex } => format!("cone, apex ({})", apex.join(", ")),
                Classification::Cylindrical { direction } => {
                    format!("cylinder, direction ({})", direction.join(", "))
                }
                Classification::Tangential { edge_system } => {
                    format!("tangent developable, edge {{{}}}", edge_system.join(", "))
                }
                Classification::DevelopableUnresolved { reason } => {
                    format!("developable, unresolved: {reason}")
                }
            };
            let _ = writeln!(out, "classification: {line}");
        }
        if let Some(k) = &self.k_poly {
            let _ = writeln!(out, "curvature:      {k}");
        }
        if let Some(s) = &self.section {
            let _ = writeln!(out, "section:        {} = 0: {}", s.plane, s.curve);
        }
        if let Some(c) = &self.curve {
            let _ = writeln!(out, "curve:          ({})", c.comps.join(", "));
        }
        if let Some(p) = &self.parametrization {
            let _ = writeln!(out, "P0(t):          {}", p.p0);
            let _ = writeln!(out, "P1(t):          {}", p.p1);
            let _ = writeln!(out, "P(s,t):         {}", p.surface);
        }
        if let Some(h) = &self.implicit {
            let _ = writeln!(out, "implicit:       {h}");
        }
        if let Some(v) = &self.verification {
            let _ = writeln!(out, "verified:       {}", v.certificate);
        }
        if let Some(m) = &self.message {
            let _ = writeln!(out, "note:           {m}");
        }
        if let Some(t) = &self.timings_ms {
            let parts: Vec<String> = t
                .iter()
                .map(|t| format!("{} {} ms", t.stage, t.ms))
                .collect();
            let _ = writeln!(out, "timings:        {}", parts.join(", "));
        }
        let _ = writeln!(out, "exit code:      {}", self.exit_code);
        out
    }
}

/// Result of `verify`.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub surface: String,
    pub map: String,
    pub verified: bool,
    pub exit_code: i32,
    pub certificate: Option<String>,
    pub error: Option<InputError>,
}

impl VerifyReport {
    pub fn human(&self) -> String {
        match (&self.error, &self.certificate) {
            (Some(e), _) => format!(
                "error: line {}, column {}: {}\n",
                e.line, e.column, e.message
            ),
            (None, Some(c)) => format!("{}\n", c),
            (None, None) => String::new(),
        }
    }
}

pub fn input_error(e: &ParseError) -> InputError {
    InputError {
        line: e.line,
        column: e.col,
        message: e.kind.to_string(),
    }
}
