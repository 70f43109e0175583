use devsurf_core::parse::{parse_map, parse_poly, print_poly};
use devsurf_core::poly::{gcd, int, rat, resultant};
use devsurf_core::{MultiPoly, Rat, RatFunc};
use proptest::prelude::*;

const XYZ: &[&str] = &["x", "y", "z"];

fn build(terms: &[(i64, [u32; 3])]) -> MultiPoly {
    let mut acc = MultiPoly::from_int(0);
    for (c, e) in terms {
        let mut m = MultiPoly::from_int(*c);
        for (v, k) in XYZ.iter().zip(e) {
            m = &m * &MultiPoly::var(v).pow(*k);
        }
        acc = &acc + &m;
    }
    acc
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..=9, [0u32..3, 0u32..3, 0u32..3]), 0..5).prop_map(|t| build(&t))
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=17).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = Vec<(&'static str, Rat)>> {
    [small_rat(), small_rat(), small_rat()]
        .prop_map(|v| XYZ.iter().copied().zip(v).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_is_linear_and_leibniz(p in small_poly(), q in small_poly(), c in small_rat()) {
        for v in XYZ {
            let lin = (&p.scale(&c) + &q).derivative(v);
            prop_assert_eq!(lin, &p.derivative(v).scale(&c) + &q.derivative(v));
            let prod = (&p * &q).derivative(v);
            prop_assert_eq!(prod, &(&p.derivative(v) * &q) + &(&p * &q.derivative(v)));
        }
    }

    #[test]
    fn print_parse_round_trip(p in small_poly(), c in small_rat()) {
        let p = p.scale(&c);
        prop_assert_eq!(parse_poly(&print_poly(&p), XYZ).unwrap(), p);
    }

    #[test]
    fn exact_division_agrees_pointwise(p in nonzero_poly(), h in small_poly(), pts in prop::collection::vec(point(), 50)) {
        let q = &p * &h;
        let quotient = q.div_exact(&p);
        prop_assert!(quotient.is_some());
        let quotient = quotient.unwrap();
        prop_assert!(p.divides(&q));
        for at in &pts {
            let lhs = q.eval(at).unwrap();
            let rhs = p.eval(at).unwrap() * quotient.eval(at).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn ratfunc_reduction_is_idempotent(n in small_poly(), d in nonzero_poly(), g in nonzero_poly()) {
        let r = RatFunc::new(&n * &g, &d * &g).unwrap();
        let again = RatFunc::new(r.numer().clone(), r.denom().clone()).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert!(gcd(r.numer(), r.denom()).is_constant());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in nonzero_poly(), b in nonzero_poly(), shared in any::<bool>(), k in -3i64..=3,
    ) {
        // Factors of degree one in x keep the resultant well defined.
        let xa = &MultiPoly::var("x") + &a.eval_partial(&[("x", int(0))]);
        let xb = &MultiPoly::var("x") + &b.eval_partial(&[("x", int(0))]);
        let common = &MultiPoly::var("x") - &MultiPoly::from_int(k);
        let (p, q) = if shared {
            (&xa * &common, &xb * &common)
        } else {
            (xa.clone(), xb.clone())
        };
        let r = resultant(&p, &q, "x").unwrap();
        let g = gcd(&p, &q);
        prop_assert_eq!(r.is_zero(), g.degree_in("x") > 0);
    }
}

const INPUTS: &[(&str, bool)] = &[
    ("4*x^2 + 9*y^2 - 4*x - 6*y - z^2 + 2", false),
    ("(x - 1)*(y + 2)^2 - (z/3 - 1)", false),
    ("((4*s^2+t+1-2*s+t^2+2*t*s)/(1-2*t-2*s+t^2+2*t*s+s^2), (6*t*s^2+7*t^2+6*s^3+8*t*s-s^2-4*t+1-2*s)/(1-2*t-2*s+t^2+2*t*s+s^2), (t^2*s^2+2*t*s^3+6*t*s^2+t^3+2*t^2*s+5*t^2+s^4+5*s^3+5*t*s)/(1-2*t-2*s+t^2+2*t*s+s^2))", true),
    ("((1 - t^2)/(1 + t^2), 2*t/(1 + t^2), s*(t + 1))", true),
    ("(s*t + 1/6*t^2 + 2*s, -(1/2)*s*t - 1/12*t^2, -3/4*s*t^2 - 3*(s*t) - 3*s)", true),
];

#[test]
fn deleting_a_parenthesis_is_rejected() {
    for (text, is_map) in INPUTS {
        let parse = |s: &str| {
            if *is_map {
                parse_map(s).is_ok()
            } else {
                parse_poly(s, XYZ).is_ok()
            }
        };
        assert!(parse(text), "{text}");
        for (i, c) in text.char_indices() {
            if c == '(' || c == ')' {
                let mut cut = text.to_string();
                cut.remove(i);
                assert!(!parse(&cut), "accepted {cut}");
            }
        }
    }
}
