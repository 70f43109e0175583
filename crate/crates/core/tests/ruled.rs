use devsurf_core::analysis::{AnalysisConfig, SurfaceClass};
use devsurf_core::builder::{
    build_conical, build_cylindrical, build_tangential, implicitize_ruled, reduce_directrix,
    verify_on_surface, ParamResult,
};
use devsurf_core::implicit::{
    analyze_implicit, detect_apex, detect_ruling_direction, directrix_audit, euler_holds,
};
use devsurf_core::parametric::{gaussian_form_parametric, NormalData};
use devsurf_core::parse::{parse_map_in, parse_poly};
use devsurf_core::poly::{int, primitive_int_vector};
use devsurf_core::{MultiPoly, Rat, RationalMap3};
use num_traits::Zero;
use proptest::prelude::*;

fn upoly(c: &[i64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .map(|(k, c)| format!("({c})*t^{k}"))
        .collect();
    terms.join(" + ")
}

/// Polynomial space curve with the given coefficient rows, low degree first.
fn curve(rows: &[Vec<i64>; 3], den: Option<&[i64]>) -> RationalMap3 {
    let d = den.map_or("1".to_string(), upoly);
    let comps: Vec<String> = rows
        .iter()
        .map(|r| format!("({})/({d})", upoly(r)))
        .collect();
    parse_map_in(&format!("({})", comps.join(", ")), &["t"]).unwrap()
}

fn rows(deg: usize) -> impl Strategy<Value = [Vec<i64>; 3]> {
    let row = || prop::collection::vec(-3i64..=3, deg + 1);
    [row(), row(), row()]
}

fn pt() -> impl Strategy<Value = [Rat; 3]> {
    [-2i64..=2, -2i64..=2, -2i64..=2].prop_map(|v| v.map(int))
}

fn common_checks(p: &ParamResult) -> Result<MultiPoly, TestCaseError> {
    let f = implicitize_ruled(p).unwrap();
    prop_assert!(verify_on_surface(p, &f));
    prop_assert!(gaussian_form_parametric(&p.surface())
        .map(|k| k.is_zero())
        .unwrap_or(true));
    let r = reduce_directrix(p);
    let g = implicitize_ruled(&r).unwrap();
    prop_assert_eq!(g.scale(&(f.leading_coeff() / g.leading_coeff())), f.clone());
    Ok(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cones(apex in pt(), rows in rows(2), den in prop::collection::vec(-2i64..=2, 2)) {
        let den = [den[0], den[1], 1];
        let Ok(p) = build_conical(&apex, &curve(&rows, Some(&den))) else {
            return Ok(());
        };
        let f = common_checks(&p)?;
        prop_assume!(f.total_degree() > 1);
        prop_assert_eq!(detect_apex(&f).ok().flatten(), Some(apex.clone()));
        prop_assert!(euler_holds(&f, &apex));
        let a = analyze_implicit(&f, &AnalysisConfig::default());
        prop_assert_eq!(a.class, SurfaceClass::Conical { apex });
        let built = a.param.unwrap();
        prop_assert!(built.verified);
        prop_assert!(directrix_audit(&built).0);
    }

    #[test]
    fn cylinders(dir in pt(), rows in rows(3)) {
        prop_assume!(!dir.iter().all(Zero::is_zero));
        let Ok(p) = build_cylindrical(&dir, &curve(&rows, None)) else {
            return Ok(());
        };
        let f = common_checks(&p)?;
        prop_assume!(f.total_degree() > 1);
        let v = detect_ruling_direction(&f).ok().flatten().unwrap();
        let along: MultiPoly = ["x", "y", "z"]
            .iter()
            .zip(&v)
            .fold(MultiPoly::from_int(0), |acc, (x, c)| &acc + &f.derivative(x).scale(c));
        prop_assert!(along.is_zero());
        let prim: Vec<Rat> = primitive_int_vector(&dir).into_iter().map(Rat::from_integer).collect();
        prop_assert_eq!(v.to_vec(), prim);
        let a = analyze_implicit(&f, &AnalysisConfig::default());
        let is_cylinder = matches!(a.class, SurfaceClass::Cylindrical { .. });
        prop_assert!(is_cylinder, "classified as {:?}", a.class);
        prop_assert!(a.param.unwrap().verified);
    }

    #[test]
    fn tangent_surfaces_are_singular_along_the_edge(rows in rows(3)) {
        let Ok(p) = build_tangential(&curve(&rows, None)) else {
            return Ok(());
        };
        common_checks(&p)?;
        let nd = NormalData::new(&p.surface()).unwrap();
        for n in nd.n() {
            prop_assert!(n.numer().eval_partial(&[("s", int(0))]).is_zero());
        }
    }
}

#[test]
fn corrected_cuspidal_edge_satisfies_the_edge_system() {
    let f = parse_poly(
        "11+16*z-12*y-36*x-4*z^2-48*y*z+12*y^2-36*x*z+36*x*y+42*x^2+48*y^2*z+72*x*y*z-24*x*y^2\
         +24*x^2*z-36*x^2*y-20*x^3-32*z*y^3-48*y^2*z*x-24*z*y*x^2+12*x^2*y^2-4*z*x^3+12*x^3*y+3*x^4",
        &["x", "y", "z"],
    )
    .unwrap();
    let a = analyze_implicit(&f, &AnalysisConfig::default());
    let SurfaceClass::Tangential { edge_system } = a.class else {
        panic!("expected a tangent developable");
    };
    let edge = parse_map_in(
        "(3*(t^2 + 2)/(2*(t - 1)^2), (t + 2)*(t - 4)/(4*(t - 1)^2), (t + 2)^3/(4*(t - 1)^3))",
        &["t"],
    )
    .unwrap();
    for g in &edge_system {
        assert!(edge.lies_on(g), "{g}");
    }
    let p = build_tangential(&edge).unwrap();
    assert!(verify_on_surface(&p, &f));
}
