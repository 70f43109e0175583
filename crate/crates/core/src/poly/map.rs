use std::fmt;

use super::error::PolyError;
use super::gcd::lcm;
use super::multipoly::MultiPoly;
use super::rat::Rat;
use super::ratfunc::RatFunc;
use super::subst::{substitute, substitute_numerator};

/// A rational map `params -> Q^3`, e.g. a space curve (one parameter) or a
/// surface patch (two parameters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap3 {
    comps: [RatFunc; 3],
    params: Vec<String>,
}

pub const XYZ: [&str; 3] = ["x", "y", "z"];

impl RationalMap3 {
    pub fn new(comps: [RatFunc; 3], params: Vec<String>) -> Self {
        RationalMap3 { comps, params }
    }

    pub fn from_polys(p: [MultiPoly; 3], params: Vec<String>) -> Self {
        let [a, b, c] = p;
        RationalMap3::new([a.into(), b.into(), c.into()], params)
    }

    pub fn constant(v: [Rat; 3], params: Vec<String>) -> Self {
        let [a, b, c] = v;
        RationalMap3::new(
            [
                RatFunc::from_rat(a),
                RatFunc::from_rat(b),
                RatFunc::from_rat(c),
            ],
            params,
        )
    }

    pub fn comps(&self) -> &[RatFunc; 3] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &RatFunc {
        &self.comps[i]
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn with_params(mut self, params: Vec<String>) -> Self {
        self.params = params;
        self
    }

    /// `(D, [N1, N2, N3])` with `comp_i = N_i / D` and `D` the lcm of the denominators.
    pub fn common_denominator(&self) -> (MultiPoly, [MultiPoly; 3]) {
        let d = lcm(
            &lcm(self.comps[0].denom(), self.comps[1].denom()),
            self.comps[2].denom(),
        );
        let n = |i: usize| -> MultiPoly {
            let c = &self.comps[i];
            &c.numer().clone() * &d.div_exact(c.denom()).expect("lcm is a multiple")
        };
        (d.clone(), [n(0), n(1), n(2)])
    }

    /// True when no component depends on any parameter.
    pub fn is_constant(&self) -> bool {
        self.comps.iter().all(|c| c.constant_value().is_some())
    }

    pub fn constant_value(&self) -> Option<[Rat; 3]> {
        Some([
            self.comps[0].constant_value()?,
            self.comps[1].constant_value()?,
            self.comps[2].constant_value()?,
        ])
    }

    pub fn derivative(&self, param: &str) -> RationalMap3 {
        RationalMap3::new(
            [
                self.comps[0].derivative(param),
                self.comps[1].derivative(param),
                self.comps[2].derivative(param),
            ],
            self.params.clone(),
        )
    }

    fn bindings(&self) -> Vec<(String, RatFunc)> {
        XYZ.iter()
            .zip(&self.comps)
            .map(|(n, c)| (n.to_string(), c.clone()))
            .collect()
    }

    /// `F(map)` as a reduced rational function in the parameters.
    pub fn pull_back(&self, f: &MultiPoly) -> Result<RatFunc, PolyError> {
        substitute(f, &self.bindings())
    }

    /// True when `F` vanishes identically on the image.
    ///
    /// For surface maps the numerator of `F(P)` has degree at most `D` in the
    /// first parameter, so it is zero exactly when it vanishes on `D + 1`
    /// specializations of that parameter; each check is then univariate.
    pub fn lies_on(&self, f: &MultiPoly) -> bool {
        if self.params.len() != 2 || f.is_constant() {
            return substitute_numerator(f, &self.bindings()).is_zero();
        }
        let p = self.params[0].as_str();
        let bound: i64 = XYZ
            .iter()
            .zip(&self.comps)
            .map(|(v, c)| {
                f.degree_in(v).max(0) * c.numer().degree_in(p).max(c.denom().degree_in(p)).max(0)
            })
            .sum();
        let mut checked = 0;
        let mut k: i64 = 0;
        while checked <= bound {
            let v = Rat::from_integer((if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }).into());
            k += 1;
            let at = [(p, v)];
            let dens: Vec<MultiPoly> = self
                .comps
                .iter()
                .map(|c| c.denom().eval_partial(&at))
                .collect();
            if dens.iter().any(MultiPoly::is_zero) {
                continue;
            }
            let b: Vec<(String, RatFunc)> = XYZ
                .iter()
                .zip(self.comps.iter().zip(dens))
                .map(|(v, (c, d))| {
                    let n = c.numer().eval_partial(&at);
                    (
                        v.to_string(),
                        RatFunc::new(n, d).expect("nonzero denominator"),
                    )
                })
                .collect();
            if !substitute_numerator(f, &b).is_zero() {
                return false;
            }
            checked += 1;
        }
        true
    }

    /// Point value at rational parameters; `Ok(None)` if a parameter is unbound.
    pub fn eval(&self, values: &[(&str, Rat)]) -> Result<Option<[Rat; 3]>, PolyError> {
        let a = self.comps[0].eval(values)?;
        let b = self.comps[1].eval(values)?;
        let c = self.comps[2].eval(values)?;
        Ok(match (a, b, c) {
            (Some(a), Some(b), Some(c)) => Some([a, b, c]),
            _ => None,
        })
    }

    /// Replace a parameter by a rational function of new parameters.
    pub fn reparametrize(
        &self,
        param: &str,
        by: &RatFunc,
        params: Vec<String>,
    ) -> Result<RationalMap3, PolyError> {
        let b = vec![(param.to_string(), by.clone())];
        let sub = |c: &RatFunc| -> Result<RatFunc, PolyError> {
            let n = substitute(c.numer(), &b)?;
            let d = substitute(c.denom(), &b)?;
            n.checked_div(&d)
        };
        Ok(RationalMap3::new(
            [
                sub(&self.comps[0])?,
                sub(&self.comps[1])?,
                sub(&self.comps[2])?,
            ],
            params,
        ))
    }

    pub fn rename_param(&self, from: &str, to: &str) -> RationalMap3 {
        RationalMap3::new(
            [
                self.comps[0].rename(from, to),
                self.comps[1].rename(from, to),
                self.comps[2].rename(from, to),
            ],
            self.params
                .iter()
                .map(|p| if p == from { to.to_string() } else { p.clone() })
                .collect(),
        )
    }

    pub fn add(&self, other: &RationalMap3) -> RationalMap3 {
        RationalMap3::new(
            [
                &self.comps[0] + &other.comps[0],
                &self.comps[1] + &other.comps[1],
                &self.comps[2] + &other.comps[2],
            ],
            self.params.clone(),
        )
    }

    pub fn sub(&self, other: &RationalMap3) -> RationalMap3 {
        RationalMap3::new(
            [
                &self.comps[0] - &other.comps[0],
                &self.comps[1] - &other.comps[1],
                &self.comps[2] - &other.comps[2],
            ],
            self.params.clone(),
        )
    }

    pub fn scale(&self, k: &RatFunc) -> RationalMap3 {
        RationalMap3::new(
            [&self.comps[0] * k, &self.comps[1] * k, &self.comps[2] * k],
            self.params.clone(),
        )
    }

    /// Maximum numerator or denominator degree over the components, in `param`.
    pub fn degree_in(&self, param: &str) -> i64 {
        self.comps
            .iter()
            .map(|c| c.degree_in(param))
            .max()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> i64 {
        self.params
            .iter()
            .map(|p| self.degree_in(p))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for RationalMap3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.comps[0], self.comps[1], self.comps[2]
        )
    }
}
