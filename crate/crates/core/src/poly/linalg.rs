//! Dense linear algebra over Q.

use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::rat::Rat;
use super::vars::merge_vars;

pub type Matrix = Vec<Vec<Rat>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rat>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rat>),
    /// A particular solution plus a kernel basis of positive dimension.
    Underdetermined {
        particular: Vec<Rat>,
        kernel: Vec<Vec<Rat>>,
    },
    Inconsistent,
}

/// Solve `a x = b`.
pub fn solve(a: &Matrix, b: &[Rat]) -> Solution {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug[row][cols].clone();
    }
    if pivots.len() == cols {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined {
            particular: x,
            kernel: nullspace(a, cols),
        }
    }
}

/// Matrix whose column `j` holds the coefficients of `polys[j]`, one row
/// per monomial occurring in any of them.
pub fn coefficient_matrix(polys: &[MultiPoly]) -> Matrix {
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let vars = polys
        .iter()
        .fold(first.vars().clone(), |acc, p| merge_vars(&acc, p.vars()));
    let aligned: Vec<MultiPoly> = polys.iter().map(|p| p.with_vars(&vars)).collect();
    let mut monos: Vec<_> = aligned
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    monos
        .iter()
        .map(|m| aligned.iter().map(|p| p.coeff(m)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&k| int(k)).collect())
            .collect()
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, -1]]);
        assert_eq!(
            solve(&a, &[int(3), int(0)]),
            Solution::Unique(vec![int(1), int(1)])
        );
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[int(1), int(3)]), Solution::Inconsistent);
        match solve(&a, &[int(1), int(2)]) {
            Solution::Underdetermined { particular, kernel } => {
                assert_eq!(particular, vec![int(1), int(0)]);
                assert_eq!(kernel, vec![vec![int(-1), int(1)]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn nullspace_dimension() {
        let a = m(&[&[1, -1, -1]]);
        let k = nullspace(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: Rat = v[0].clone() - &v[1] - &v[2];
            assert!(s.is_zero());
        }
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        let _ = rat(1, 2);
    }
}
