use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] can live in.
pub const MAX_AMBIENT: u32 = 62;

/// A subset `S ⊆ [n]`, stored as a bitmask together with its ground set `[n]`.
///
/// Element `i` occupies bit `i - 1`. Binary operations require equal ambients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    ambient: u32,
    bits: u64,
}

fn mask(n: u32) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

impl Subset {
    pub fn new(ambient: u32, elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_ambient(ambient)?;
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > ambient {
                return Err(Error::OutOfRange {
                    element: e,
                    ambient,
                });
            }
            bits |= 1 << (e - 1);
        }
        Ok(Self { ambient, bits })
    }

    pub fn from_bits(ambient: u32, bits: u64) -> Result<Self> {
        check_ambient(ambient)?;
        if bits & !mask(ambient) != 0 {
            let element = 64 - bits.leading_zeros();
            return Err(Error::OutOfRange { element, ambient });
        }
        Ok(Self { ambient, bits })
    }

    /// Unchecked constructor for internal use where `bits` is known to fit.
    pub(crate) fn from_bits_unchecked(ambient: u32, bits: u64) -> Self {
        debug_assert!(ambient <= MAX_AMBIENT && bits & !mask(ambient) == 0);
        Self { ambient, bits }
    }

    pub fn empty(ambient: u32) -> Result<Self> {
        Self::from_bits(ambient, 0)
    }

    pub fn full(ambient: u32) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(Self {
            ambient,
            bits: mask(ambient),
        })
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: u32) -> bool {
        i >= 1 && i <= self.ambient && self.bits >> (i - 1) & 1 == 1
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let bits = self.bits;
        (1..=self.ambient).filter(move |i| bits >> (i - 1) & 1 == 1)
    }

    pub fn elements(&self) -> Vec<u32> {
        self.iter().collect()
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(Self {
            ambient: self.ambient,
            bits: self.bits | other.bits,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(Self {
            ambient: self.ambient,
            bits: self.bits & other.bits,
        })
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// `[n] \ S`.
    pub fn complement(&self) -> Self {
        Self {
            ambient: self.ambient,
            bits: !self.bits & mask(self.ambient),
        }
    }

    /// `S∨ = { n+1-i : i ∈ S }`.
    pub fn reflect(&self) -> Self {
        let n = self.ambient;
        let bits = if n == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (64 - n)
        };
        Self { ambient: n, bits }
    }

    /// `1 ∉ S` and no two consecutive members.
    pub fn is_left_sparse(&self) -> bool {
        self.bits & 1 == 0 && self.bits & (self.bits << 1) == 0
    }

    /// `n ∉ S` and no two consecutive members.
    pub fn is_right_sparse(&self) -> bool {
        !self.contains(self.ambient) && self.bits & (self.bits << 1) == 0
    }

    /// The peak set `Λ(S) = { i ∈ S : i ≠ 1, i-1 ∉ S }`.
    pub fn peaks(&self) -> Self {
        Self {
            ambient: self.ambient,
            bits: self.bits & !(self.bits << 1) & !1,
        }
    }

    /// Same members viewed inside a larger ground set.
    pub fn widen(&self, ambient: u32) -> Result<Self> {
        Self::from_bits(ambient, self.bits)
    }

    /// All `2^n` subsets of `[n]`, ordered by bitmask.
    pub fn all(ambient: u32) -> Result<impl Iterator<Item = Subset>> {
        check_ambient(ambient)?;
        if ambient > 32 {
            return Err(Error::InvalidParameter(format!(
                "refusing to enumerate all subsets of [{ambient}]"
            )));
        }
        Ok((0..1u64 << ambient).map(move |bits| Subset { ambient, bits }))
    }
}

fn check_ambient(n: u32) -> Result<()> {
    if n > MAX_AMBIENT {
        Err(Error::AmbientTooLarge(n))
    } else {
        Ok(())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}⊆[{}]", self.ambient)
    }
}
