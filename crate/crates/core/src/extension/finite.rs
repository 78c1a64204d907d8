use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::ExtError;
use crate::linalg::{smith_normal_form, IntMatrix};

/// Finite abelian group `Z/d_1 ⊕ ... ⊕ Z/d_r` with `d_1 | d_2 | ... | d_r`
/// and every `d_i >= 2`. The empty list is the trivial group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Result<Self, ExtError> {
        Self::from_orders(&[n])
    }

    /// Accepts only a list already in invariant-factor form.
    pub fn from_invariant_factors(factors: Vec<u64>) -> Result<Self, ExtError> {
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(ExtError::InvalidFiniteGroup(format!("invariant factor {d} is not >= 2")));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(ExtError::InvalidFiniteGroup(format!("{factors:?} is not a divisibility chain")));
        }
        Ok(FiniteAbelianGroup { invariant_factors: factors })
    }

    /// `⊕ Z/n_i` for arbitrary positive orders, normalized through the Smith
    /// normal form of `diag(n_i)`.
    pub fn from_orders(orders: &[u64]) -> Result<Self, ExtError> {
        if orders.contains(&0) {
            return Err(ExtError::InvalidFiniteGroup("a cyclic factor of order 0 is infinite".into()));
        }
        let diag: Vec<BigInt> = orders.iter().map(|&n| BigInt::from(n)).collect();
        let snf = smith_normal_form(&IntMatrix::diagonal(&diag));
        let factors = snf
            .factors
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_u64().expect("factor divides a product of u64 orders"))
            .collect();
        Self::from_invariant_factors(factors)
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigUint {
        self.invariant_factors.iter().fold(BigUint::one(), |acc, &d| acc * d)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// `G^k`, renormalized.
    pub fn power(&self, k: usize) -> Self {
        let orders: Vec<u64> = (0..k).flat_map(|_| self.invariant_factors.iter().copied()).collect();
        Self::from_orders(&orders).expect("positive orders")
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
