//! Exponent vectors of monomials.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial in `n` variables. Ordered graded-lex with
/// `x1` greatest, which is the canonical term order everywhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// The unit index with a 1 in axis `j` (0-based).
    pub fn unit(dim: usize, j: usize) -> Self {
        let mut e = vec![0; dim];
        e[j] = 1;
        MultiIndex(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.0[j]
    }

    /// Total degree |α|.
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Entrywise exponent parity; two indices are in the same parity class
    /// iff their signatures agree.
    pub fn parity_signature(&self) -> Vec<u8> {
        self.0.iter().map(|&e| (e % 2) as u8).collect()
    }

    pub fn same_parity(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| a % 2 == b % 2)
    }

    /// Index with exponent `j` raised by `k`.
    pub fn raised(&self, j: usize, k: u32) -> MultiIndex {
        let mut e = self.0.clone();
        e[j] += k;
        MultiIndex(e)
    }

    /// Index with exponent `j` lowered by `k`; `None` if it would go negative.
    pub fn lowered(&self, j: usize, k: u32) -> Option<MultiIndex> {
        if self.0[j] < k {
            return None;
        }
        let mut e = self.0.clone();
        e[j] -= k;
        Some(MultiIndex(e))
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = MultiIndex::new(vec![2, 0]);
        let b = MultiIndex::new(vec![1, 1]);
        let c = MultiIndex::new(vec![0, 3]);
        assert!(a > b); // same degree, x1 greatest
        assert!(c > a); // higher degree wins
    }

    #[test]
    fn parity() {
        let a = MultiIndex::new(vec![4, 2, 0]);
        let b = MultiIndex::new(vec![0, 0, 2]);
        let c = MultiIndex::new(vec![1, 0, 0]);
        assert!(a.same_parity(&b));
        assert!(!a.same_parity(&c));
        assert_eq!(c.parity_signature(), vec![1, 0, 0]);
    }
}
