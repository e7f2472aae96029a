use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;
use crate::error::{Result, ZetaError};

/// The product `∏_j (1 + d_j t)` over a multiset of positive integers.
///
/// Factors are kept sorted so that equal multisets compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearFactorProduct {
    factors: Vec<u64>,
}

impl LinearFactorProduct {
    pub fn new(mut factors: Vec<u64>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(ZetaError::InvalidDegree(0));
        }
        factors.sort_unstable();
        Ok(Self { factors })
    }

    /// The empty product, i.e. the constant `1`.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn single(d: u64) -> Result<Self> {
        Self::new(vec![d])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .map(|&d| IntPoly::linear(BigInt::from(d)))
            .product()
    }

    /// `∏ d_j`.
    pub fn degree_product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
    }

    /// Multiset sum.
    pub fn union(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        factors.sort_unstable();
        Self { factors }
    }

    /// Multiset least common multiple: each `d` with its larger multiplicity.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut counts = self.multiplicities();
        for (d, m) in other.multiplicities() {
            let e = counts.entry(d).or_insert(0);
            *e = (*e).max(m);
        }
        let factors = counts
            .into_iter()
            .flat_map(|(d, m)| std::iter::repeat_n(d, m))
            .collect();
        Self { factors }
    }

    /// `self / other` as a multiset, or `None` when `other` is not contained in `self`.
    pub fn difference(&self, other: &Self) -> Option<Self> {
        let mut rest = self.factors.clone();
        for d in &other.factors {
            let pos = rest.iter().position(|x| x == d)?;
            rest.remove(pos);
        }
        Some(Self { factors: rest })
    }

    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        other.difference(self).is_some()
    }

    /// Removes one occurrence of `d`; returns whether it was present.
    pub fn remove_one(&mut self, d: u64) -> bool {
        match self.factors.iter().position(|&x| x == d) {
            Some(pos) => {
                self.factors.remove(pos);
                true
            }
            None => false,
        }
    }

    /// Distinct factors with their multiplicities, ascending.
    pub fn multiplicities(&self) -> BTreeMap<u64, usize> {
        let mut map = BTreeMap::new();
        for &d in &self.factors {
            *map.entry(d).or_insert(0) += 1;
        }
        map
    }
}

impl fmt::Display for LinearFactorProduct {
    /// `(1+2t)^3(1+5t)`; the empty product renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (d, m) in self.multiplicities() {
            if d == 1 {
                f.write_str("(1+t)")?;
            } else {
                write!(f, "(1+{d}t)")?;
            }
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lfp(f: &[u64]) -> LinearFactorProduct {
        LinearFactorProduct::new(f.to_vec()).unwrap()
    }

    #[test]
    fn rejects_zero_factor() {
        assert_eq!(
            LinearFactorProduct::new(vec![2, 0]),
            Err(ZetaError::InvalidDegree(0))
        );
    }

    #[test]
    fn expansion_has_unit_constant_and_nonnegative_coeffs() {
        let e = lfp(&[4, 2, 3]).expand();
        assert_eq!(e, IntPoly::from_i64s(&[1, 9, 26, 24]));
        assert_eq!(lfp(&[]).expand(), IntPoly::one());
    }

    #[test]
    fn multiset_operations() {
        let a = lfp(&[6, 6, 7, 8]);
        let b = lfp(&[6, 6, 7, 7, 8]);
        assert!(a.is_submultiset_of(&b));
        assert!(!b.is_submultiset_of(&a));
        assert_eq!(b.difference(&a), Some(lfp(&[7])));
        assert_eq!(a.lcm(&lfp(&[7, 7, 9])), lfp(&[6, 6, 7, 7, 8, 9]));
        assert_eq!(a.union(&lfp(&[1])), lfp(&[1, 6, 6, 7, 8]));
        assert_eq!(b.degree_product(), BigInt::from(14112));
    }

    #[test]
    fn display_groups_repeats() {
        assert_eq!(lfp(&[8, 6, 7, 6]).to_string(), "(1+6t)^2(1+7t)(1+8t)");
        assert_eq!(lfp(&[1]).to_string(), "(1+t)");
    }
}
