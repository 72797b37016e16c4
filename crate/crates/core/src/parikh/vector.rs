use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::Letter;

/// Occurrence counts per letter, `ψ(w) = (|w|_{a_1}, ..., |w|_{a_m})`.
///
/// The derived order is lexicographic on components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParikhVector(Vec<u64>);

impl ParikhVector {
    pub fn zero(m: usize) -> Self {
        ParikhVector(vec![0; m])
    }

    pub fn unit(m: usize, letter: Letter) -> Self {
        let mut v = Self::zero(m);
        v.0[letter] = 1;
        v
    }

    pub fn from_slice(components: &[u64]) -> Self {
        ParikhVector(components.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, letter: Letter) -> u64 {
        self.0[letter]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// At most one nonzero component (the null vector is unary).
    pub fn is_unary(&self) -> bool {
        self.0.iter().filter(|&&c| c > 0).count() <= 1
    }

    /// Infinite norm: the largest component.
    pub fn norm(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Sum of components, i.e. the length of any word with this image.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Componentwise order `self ⪯ other`.
    pub fn le(&self, other: &ParikhVector) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &ParikhVector) -> Option<ParikhVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ParikhVector)
    }

    pub fn add(&self, other: &ParikhVector) -> ParikhVector {
        self.add_scaled(other, 1)
    }

    /// `self + k·other`, panicking on overflow.
    pub fn add_scaled(&self, other: &ParikhVector, k: u64) -> ParikhVector {
        ParikhVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| {
                    b.checked_mul(k)
                        .and_then(|x| x.checked_add(*a))
                        .expect("Parikh vector overflow")
                })
                .collect(),
        )
    }

    pub fn increment(&mut self, letter: Letter) {
        self.0[letter] += 1;
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.0.clone()
    }
}

impl From<Vec<u64>> for ParikhVector {
    fn from(v: Vec<u64>) -> Self {
        ParikhVector(v)
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parikh image of a single word over an `m`-letter alphabet.
pub fn parikh_vector(m: usize, word: &[Letter]) -> ParikhVector {
    let mut v = ParikhVector::zero(m);
    for &a in word {
        v.0[a] += 1;
    }
    v
}
