use std::cmp::Ordering;

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic on exponents with the first variable most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every exponent of `other` is at most the matching one here.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x2 = Monomial(vec![2, 0, 0]);
        let y2 = Monomial(vec![0, 2, 0]);
        let xyz = Monomial(vec![1, 1, 1]);
        let x = Monomial(vec![1, 0, 0]);
        assert!(xyz > x2);
        assert!(x2 > y2);
        assert!(y2 > x);
    }

    #[test]
    fn division() {
        let a = Monomial(vec![2, 1]);
        assert_eq!(
            a.checked_div(&Monomial(vec![1, 1])),
            Some(Monomial(vec![1, 0]))
        );
        assert_eq!(a.checked_div(&Monomial(vec![0, 2])), None);
    }
}
