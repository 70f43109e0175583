use std::cmp::Ordering;
use std::sync::Arc;

/// Shared, ordered variable list of a polynomial.
pub type Vars = Arc<[String]>;

const GLOBAL_ORDER: [&str; 8] = ["x", "y", "z", "s", "t", "u", "v", "w"];

/// Rank of a variable in the fixed global order `x, y, z, s, t, u, v, w`;
/// names outside that list sort after it, alphabetically.
pub fn var_rank(name: &str) -> (usize, &str) {
    match GLOBAL_ORDER.iter().position(|v| *v == name) {
        Some(i) => (i, ""),
        None => (GLOBAL_ORDER.len(), name),
    }
}

fn cmp_vars(a: &str, b: &str) -> Ordering {
    var_rank(a).cmp(&var_rank(b))
}

/// Deduplicate and sort names into canonical order.
pub fn sort_vars<S: AsRef<str>>(names: &[S]) -> Vars {
    let mut v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    v.sort_by(|a, b| cmp_vars(a, b));
    v.dedup();
    v.into()
}

/// Union of two canonical variable lists.
pub fn merge_vars(a: &Vars, b: &Vars) -> Vars {
    if Arc::ptr_eq(a, b) || a[..] == b[..] {
        return a.clone();
    }
    let mut out: Vec<String> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() {
            out.push(b[j].clone());
            j += 1;
        } else {
            match cmp_vars(&a[i], &b[j]) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out.into()
}

/// A variable name not present in `taken`, preferring `base`.
pub fn fresh_var(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|v| v == base) {
        return base.to_string();
    }
    (0..)
        .map(|i| format!("{base}{i}"))
        .find(|c| !taken.iter().any(|v| v == c))
        .expect("unbounded search")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_order_then_alphabetical() {
        let v = sort_vars(&["t", "alpha", "x", "z", "s", "t"]);
        assert_eq!(&v[..], &["x", "z", "s", "t", "alpha"]);
    }

    #[test]
    fn merge_keeps_order() {
        let a = sort_vars(&["x", "t"]);
        let b = sort_vars(&["y", "t", "s"]);
        assert_eq!(&merge_vars(&a, &b)[..], &["x", "y", "s", "t"]);
    }

    #[test]
    fn fresh_avoids_collisions() {
        let taken = vec!["w".to_string(), "w0".to_string()];
        assert_eq!(fresh_var("w", &taken), "w1");
        assert_eq!(fresh_var("q", &taken), "q");
    }
}
