//! Determinants of polynomial matrices, Sylvester resultants and the first
//! subresultant.

use super::error::PolyError;
use super::multipoly::MultiPoly;
use super::vars::merge_vars;

fn common_vars(m: &[Vec<MultiPoly>]) -> super::vars::Vars {
    let mut vars = super::vars::sort_vars::<&str>(&[]);
    for row in m {
        for e in row {
            vars = merge_vars(&vars, e.vars());
        }
    }
    vars
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    let vars = common_vars(m);
    if n == 0 {
        return MultiPoly::one(vars);
    }
    let mut a: Vec<Vec<MultiPoly>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "matrix must be square");
            row.iter().map(|e| e.with_vars(&vars)).collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = MultiPoly::one(vars.clone());
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return MultiPoly::zero(vars);
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero(vars.clone());
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    let vars = common_vars(m);
    match n {
        0 => MultiPoly::one(vars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = MultiPoly::zero(vars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det_cofactor(&minor);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

pub fn det3(m: &[[MultiPoly; 3]; 3]) -> MultiPoly {
    let rows: Vec<Vec<MultiPoly>> = m.iter().map(|r| r.to_vec()).collect();
    det_cofactor(&rows)
}

pub fn det4(m: &[[MultiPoly; 4]; 4]) -> MultiPoly {
    let rows: Vec<Vec<MultiPoly>> = m.iter().map(|r| r.to_vec()).collect();
    det_cofactor(&rows)
}

/// Rows `x^k * p` for `k = count-1 ..= 0`, laid out as coefficient vectors
/// over degrees `width-1 ..= 0`.
fn shifted_rows(
    coeffs: &[MultiPoly],
    count: usize,
    width: usize,
    zero: &MultiPoly,
) -> Vec<Vec<MultiPoly>> {
    let deg = coeffs.len() - 1;
    (0..count)
        .rev()
        .map(|k| {
            (0..width)
                .rev()
                .map(|d| {
                    if d >= k && d - k <= deg {
                        coeffs[d - k].clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// Sylvester resultant of `a` and `b` with respect to `v`.
///
/// With this convention `Res_x(x - t, x^2 - y) = t^2 - y`.
pub fn resultant(a: &MultiPoly, b: &MultiPoly, v: &str) -> Result<MultiPoly, PolyError> {
    let (a, b) = MultiPoly::aligned(a, b);
    if a.is_zero() || b.is_zero() {
        return Ok(MultiPoly::zero(a.vars().clone()));
    }
    let m = a.degree_in(v) as usize;
    let n = b.degree_in(v) as usize;
    if m == 0 && n == 0 {
        return Err(PolyError::ConstantInVariable(v.to_string()));
    }
    if m == 0 {
        return Ok(a.pow(n as u32));
    }
    if n == 0 {
        return Ok(b.pow(m as u32));
    }
    let zero = MultiPoly::zero(a.vars().clone());
    let ca = a.coeffs_in(v);
    let cb = b.coeffs_in(v);
    let mut rows = shifted_rows(&ca, n, m + n, &zero);
    rows.extend(shifted_rows(&cb, m, m + n, &zero));
    Ok(det(&rows))
}

/// First subresultant of `a` and `b` in `v`, returned as `(p, q)` with
/// `S1 = p * v + q`. Requires `deg_v a >= deg_v b >= 2`.
pub fn subresultant_linear(
    a: &MultiPoly,
    b: &MultiPoly,
    v: &str,
) -> Result<(MultiPoly, MultiPoly), PolyError> {
    let (a, b) = MultiPoly::aligned(a, b);
    let (a, b) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    let m = a.degree_in(v);
    let n = b.degree_in(v);
    if n < 2 {
        return Err(PolyError::ConstantInVariable(v.to_string()));
    }
    let (m, n) = (m as usize, n as usize);
    let j = 1usize;
    let zero = MultiPoly::zero(a.vars().clone());
    let width = m + n - j;
    let ca = a.coeffs_in(v);
    let cb = b.coeffs_in(v);
    let mut full = shifted_rows(&ca, n - j, width, &zero);
    full.extend(shifted_rows(&cb, m - j, width, &zero));
    let size = m + n - 2 * j;
    let lead_cols = size - 1;
    let coeff_for = |i: usize| -> MultiPoly {
        let col = width - 1 - i;
        let mat: Vec<Vec<MultiPoly>> = full
            .iter()
            .map(|row| {
                let mut r: Vec<MultiPoly> = row[..lead_cols].to_vec();
                r.push(row[col].clone());
                r
            })
            .collect();
        det(&mat)
    };
    Ok((coeff_for(1), coeff_for(0)))
}
