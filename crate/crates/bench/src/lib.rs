//! Benchmark fixtures shared by the criterion targets.

use devsurf_core::parse::{parse_map, parse_poly};
use devsurf_core::{MultiPoly, RationalMap3};

pub const CONE: &str = "4*x^2 + 9*y^2 - 4*x - 6*y - z^2 + 2";

pub const CYLINDER: &str = "x^4+4*x^3*y+6*x^2*y^2+4*x*y^3+y^4-10*x^3-27*x^2*y-3*x^2*z-18*x*y^2-18*x*y*z+6*x*z^2-2*y^3-12*y^2*z+3*y*z^2+z^3+16*x^2+8*x*y+24*x*z+16*y^2-24*y*z+24*z^2+64*x-32*y+96*z";

pub const TANGENT: &str = "11+16*z-12*y-36*x-4*z^2-48*y*z+12*y^2-36*x*z+36*x*y+42*x^2+48*y^2*z+72*x*y*z-24*x*y^2+24*x^2*z-36*x^2*y-20*x^3-32*z*y^3-48*y^2*z*x-24*z*y*x^2+12*x^2*y^2-4*z*x^3+12*x^3*y+3*x^4";

pub const CONE_MAP: &str = "((4*s^2+t+1-2*s+t^2+2*t*s)/(1-2*t-2*s+t^2+2*t*s+s^2), (6*t*s^2+7*t^2+6*s^3+8*t*s-s^2-4*t+1-2*s)/(1-2*t-2*s+t^2+2*t*s+s^2), (t^2*s^2+2*t*s^3+6*t*s^2+t^3+2*t^2*s+5*t^2+s^4+5*s^3+5*t*s)/(1-2*t-2*s+t^2+2*t*s+s^2))";

pub const TANGENT_MAP: &str = "((-1+2*t+2*s+3*t^2*s^2-2*t*s-t*s^2+2*t*s^3+4*s^5-t^6+4*s^4*t^2-3*t^4*s^2-2*t^2*s^3-2*t^4*s+4*s^4*t-2*t^3*s^2-2*t^3*s-s^3-s^4-2*t^5-s^2)/(t^2+s+t-1)^2, (-3*t^4*s-2*t^2*s^2+3*t^2*s+4*t*s^3-5*t^5-t*s^2-t^2+3*t^3+2*s^4-s^3-3*s^4*t-6*t^3*s+2*t^4*s^2-6*t^3*s^3+6*t^3*s^2+2*t^2*s^3+6*t^5*s-s^5-2*s^6-3*t^4*s^4+3*t^2*s^6+3*s^7+3*t^6*s-3*t^5*s^2-t^6*s^2+3*s^6*t-3*s^4*t^3+t^8-3*t^4*s^3+3*t^7-3*t^2*s^5)/(t^2+s+t-1)^3, 2*s^4*(3*t^2*s^2+3*s^3+3*t*s^2-2*s^2-3*t^4-3*t^2*s-3*t^3+3*t^2)/(t^2+s+t-1)^3)";

pub fn implicit(text: &str) -> MultiPoly {
    parse_poly(text, &["x", "y", "z"]).expect("fixture parses")
}

pub fn map(text: &str) -> RationalMap3 {
    parse_map(text).expect("fixture parses")
}
