//! Tracing index and proper reparametrization of rational curves.

use crate::poly::{
    fresh_var, gcd, resultant, squarefree_part, MultiPoly, PolyError, Rat, RatFunc, RationalMap3,
};

/// `gcd_i num(c_i(t) - c_i(w))` with `w` a fresh symbol; `None` if every
/// component is constant.
fn tracing_gcd(comps: &[RatFunc], param: &str) -> Option<(MultiPoly, String)> {
    let mut taken: Vec<String> = comps.iter().flat_map(|c| c.used_vars()).collect();
    taken.push(param.to_string());
    let w = fresh_var("w", &taken);
    let mut g: Option<MultiPoly> = None;
    for c in comps {
        if !c.numer().contains_var(param) && !c.denom().contains_var(param) {
            continue;
        }
        let (n, d) = (c.numer(), c.denom());
        let diff = &(n * &d.rename(param, &w)) - &(&n.rename(param, &w) * d);
        g = Some(match g {
            None => diff.primitive(),
            Some(acc) => gcd(&acc, &diff),
        });
    }
    g.map(|g| (g, w))
}

/// Number of parameter values over a generic point of the image; `0` for a
/// constant map.
pub fn tracing_index(comps: &[RatFunc], param: &str) -> usize {
    tracing_gcd(comps, param)
        .map(|(g, _)| g.degree_in(param).max(0) as usize)
        .unwrap_or(0)
}

/// `(proper, tracing index)` of a space curve.
pub fn is_proper_curve(map: &RationalMap3) -> (bool, usize) {
    let param = map
        .params()
        .first()
        .cloned()
        .unwrap_or_else(|| "t".to_string());
    let k = tracing_index(map.comps(), &param);
    (k == 1, k)
}

/// Rewrite an improper curve `c(t)` as `c~(R(t))` with `c~` proper, returning
/// `c~` in the same parameter name. Proper inputs are returned unchanged.
pub fn proper_reparametrize(map: &RationalMap3) -> Result<RationalMap3, PolyError> {
    let param = map
        .params()
        .first()
        .cloned()
        .unwrap_or_else(|| "t".to_string());
    let Some((g, w)) = tracing_gcd(map.comps(), &param) else {
        return Ok(map.clone());
    };
    let k = g.degree_in(&param);
    if k <= 1 {
        return Ok(map.clone());
    }
    // Coefficients of g in `param` lie in Q(w) after making it monic; any
    // non-constant one generates the subfield Q(c(w)).
    let coeffs = g.coeffs_in(&param);
    let lead = coeffs.last().expect("nonzero").clone();
    let generator = coeffs[..coeffs.len() - 1]
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| RatFunc::new(c.clone(), lead.clone()).expect("nonzero lead"))
        .find(|r| r.numer().contains_var(&w) || r.denom().contains_var(&w))
        .ok_or(PolyError::ZeroPolynomial)?;
    let r = generator.rename(&w, &param);

    let u = fresh_var("u", &[param.clone(), w.clone()]);
    let xv = fresh_var("xi", &[param.clone(), w.clone(), u.clone()]);
    let a = &(&MultiPoly::var(&u) * r.denom()) - r.numer();
    let mut out: Vec<RatFunc> = Vec::with_capacity(3);
    for c in map.comps() {
        if c.constant_value().is_some() {
            out.push(c.clone());
            continue;
        }
        let b = &(&MultiPoly::var(&xv) * c.denom()) - c.numer();
        let res = resultant(&a, &b, &param)?;
        let kk = res.degree_in(&xv);
        let cs = res.coeffs_in(&xv);
        let top = cs[kk as usize].clone();
        let next = cs[kk as usize - 1].clone();
        let val = RatFunc::new(-next, top.scale(&Rat::from_integer(kk.into())))?;
        out.push(val.rename(&u, &param));
    }
    let [a0, a1, a2]: [RatFunc; 3] = out.try_into().expect("three components");
    Ok(RationalMap3::new([a0, a1, a2], vec![param.clone()]))
}

/// Move the single pole of a curve to infinity when its common denominator is
/// a power of one linear factor, giving a polynomial parametrization. Other
/// curves are returned unchanged.
pub fn polynomial_reparametrize(map: &RationalMap3) -> RationalMap3 {
    let Some(param) = map.params().first().cloned() else {
        return map.clone();
    };
    let (d, _) = map.common_denominator();
    if d.degree_in(&param) < 1 {
        return map.clone();
    }
    let root = squarefree_part(&d);
    if root.total_degree() != 1 || root.used_vars() != [param.clone()] {
        return map.clone();
    }
    let c = root.coeffs_in(&param);
    let r = -(c[0].constant_term() / c[1].constant_term());
    let by = &RatFunc::from_rat(r) + &RatFunc::var(&param).recip().expect("nonzero variable");
    match map.reparametrize(&param, &by, vec![param.clone()]) {
        Ok(m) if m.comps().iter().all(RatFunc::is_polynomial) => m,
        _ => map.clone(),
    }
}
