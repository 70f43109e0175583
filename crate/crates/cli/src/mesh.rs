//! Wavefront-style sampling of a rational map on a uniform `(s, t)` grid.

use std::fmt::Write as _;

use devsurf_core::{Rat, RationalMap3};
use num_traits::ToPrimitive;

#[derive(Debug)]
pub struct Mesh {
    pub text: String,
    pub vertices: usize,
    pub faces: usize,
    pub poles: usize,
}

#[derive(Debug, PartialEq, Eq)]
pub enum MeshError {
    ZeroResolution,
    AllPoles,
}

impl std::fmt::Display for MeshError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MeshError::ZeroResolution => f.write_str("resolution must be at least 1"),
            MeshError::AllPoles => f.write_str("every grid point is a pole of the map"),
        }
    }
}

fn grid(range: &(Rat, Rat), res: usize) -> Vec<Rat> {
    if res == 1 {
        return vec![range.0.clone()];
    }
    let step = (&range.1 - &range.0) / Rat::from_integer((res as i64 - 1).into());
    (0..res)
        .map(|i| &range.0 + &step * Rat::from_integer((i as i64).into()))
        .collect()
}

/// Samples `map` at `res x res` points; faces are quads over fully defined cells.
pub fn sample(
    map: &RationalMap3,
    s: &(Rat, Rat),
    t: &(Rat, Rat),
    res: usize,
) -> Result<Mesh, MeshError> {
    if res == 0 {
        return Err(MeshError::ZeroResolution);
    }
    let (ss, ts) = (grid(s, res), grid(t, res));
    let mut text = String::new();
    let mut index = vec![vec![None; res]; res];
    let mut vertices = 0;
    let mut poles = 0;
    let mut body = String::new();
    for (i, sv) in ss.iter().enumerate() {
        for (j, tv) in ts.iter().enumerate() {
            match map.eval(&[("s", sv.clone()), ("t", tv.clone())]) {
                Ok(Some(p)) => {
                    let f = |r: &Rat| r.to_f64().unwrap_or(f64::NAN);
                    let _ = writeln!(body, "v {} {} {}", f(&p[0]), f(&p[1]), f(&p[2]));
                    vertices += 1;
                    index[i][j] = Some(vertices);
                }
                _ => poles += 1,
            }
        }
    }
    if vertices == 0 {
        return Err(MeshError::AllPoles);
    }
    let mut faces = 0;
    for i in 0..res.saturating_sub(1) {
        for j in 0..res - 1 {
            if let (Some(a), Some(b), Some(c), Some(d)) = (
                index[i][j],
                index[i + 1][j],
                index[i + 1][j + 1],
                index[i][j + 1],
            ) {
                let _ = writeln!(body, "f {a} {b} {c} {d}");
                faces += 1;
            }
        }
    }
    let _ = writeln!(text, "# devsurf mesh {map}");
    let _ = writeln!(
        text,
        "# s in [{}, {}], t in [{}, {}], {res}x{res} samples",
        s.0, s.1, t.0, t.1
    );
    let _ = writeln!(
        text,
        "# vertices {vertices}, faces {faces}, poles skipped {poles}"
    );
    text.push_str(&body);
    Ok(Mesh {
        text,
        vertices,
        faces,
        poles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use devsurf_core::parse::parse_map;

    fn range(a: i64, b: i64) -> (Rat, Rat) {
        (Rat::from_integer(a.into()), Rat::from_integer(b.into()))
    }

    #[test]
    fn cone_grid_has_no_poles() {
        let m = parse_map("((1 - s)/2 + s*t, (1 - s)/3 + s*t^2, s)").unwrap();
        let mesh = sample(&m, &range(0, 1), &range(-3, 3), 20).unwrap();
        assert_eq!((mesh.vertices, mesh.poles, mesh.faces), (400, 0, 361));
    }

    #[test]
    fn poles_are_skipped() {
        let m = parse_map("(s, t, 1/(t - 1)^2)").unwrap();
        let mesh = sample(&m, &range(0, 1), &range(0, 2), 3).unwrap();
        assert_eq!(mesh.poles, 3);
        assert_eq!(mesh.vertices, 6);
        assert_eq!(mesh.faces, 0);
    }

    #[test]
    fn zero_resolution_and_all_poles() {
        let m = parse_map("(s, t, 1/t)").unwrap();
        assert_eq!(
            sample(&m, &range(0, 1), &range(0, 1), 0).unwrap_err(),
            MeshError::ZeroResolution
        );
        assert_eq!(
            sample(&m, &range(0, 1), &range(0, 0), 4).unwrap_err(),
            MeshError::AllPoles
        );
    }
}
