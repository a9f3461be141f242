use std::fmt;

use super::subset::{Subset, MAX_AMBIENT};
use crate::error::{Error, Result};

/// An ordered sequence of positive integers. The empty composition is the
/// unique composition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `β*`, the parts in reverse order.
    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self(parts)
    }

    /// `β(S) = (i_1, i_2 - i_1, …, n+1 - i_k)`, a composition of `n + 1`.
    pub fn of_subset(s: &Subset) -> Self {
        let mut parts = Vec::with_capacity(s.len() as usize + 1);
        let mut prev = 0;
        for i in s.iter() {
            parts.push(i - prev);
            prev = i;
        }
        parts.push(s.ambient() + 1 - prev);
        Self(parts)
    }

    /// Partial sums excluding the last, as a subset of `[degree - 1]`.
    pub fn to_subset(&self) -> Result<Subset> {
        let d = self.degree();
        if d == 0 {
            return Err(Error::InvalidComposition(
                "the composition of 0 has no subset".into(),
            ));
        }
        if d - 1 > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge(d - 1));
        }
        let mut acc = 0;
        let mut bits = 0u64;
        for &p in &self.0[..self.0.len() - 1] {
            acc += p;
            bits |= 1 << (acc - 1);
        }
        Ok(Subset::from_bits_unchecked(d - 1, bits))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
