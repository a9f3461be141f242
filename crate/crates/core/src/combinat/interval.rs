use std::fmt;

use super::subset::Subset;
use super::word::CdWord;
use crate::error::{Error, Result};

/// A family of integer intervals `[a, b] ⊆ [n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntervalFamily {
    ambient: u32,
    intervals: Vec<(u32, u32)>,
    masks: Vec<u64>,
}

impl IntervalFamily {
    pub fn new(ambient: u32, intervals: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut ivs: Vec<(u32, u32)> = intervals.into_iter().collect();
        ivs.sort_unstable();
        ivs.dedup();
        let mut masks = Vec::with_capacity(ivs.len());
        for &(a, b) in &ivs {
            if a == 0 || a > b || b > ambient {
                return Err(Error::InvalidParameter(format!(
                    "interval [{a},{b}] does not lie in [{ambient}]"
                )));
            }
            masks.push(Subset::new(ambient, a..=b)?.bits());
        }
        Ok(Self {
            ambient,
            intervals: ivs,
            masks,
        })
    }

    pub fn empty(ambient: u32) -> Self {
        Self {
            ambient,
            intervals: Vec::new(),
            masks: Vec::new(),
        }
    }

    /// `I^w = { {i-1, i} : i ∈ S_w }`.
    pub fn of_word(w: &CdWord) -> Self {
        let s = w.peak_set();
        Self::new(s.ambient(), s.iter().map(|i| (i - 1, i))).expect("S_w is left sparse")
    }

    /// `I_S = { {i, i+1} : i ∈ S }` for right-sparse `S`.
    pub fn of_right_sparse(s: &Subset) -> Result<Self> {
        if !s.is_right_sparse() {
            return Err(Error::NotRightSparse(s.to_string()));
        }
        Self::new(s.ambient(), s.iter().map(|i| (i, i + 1)))
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Membership of `s` in the blocking family `b[I]`: `s` meets every
    /// interval.
    pub fn blocks(&self, s: &Subset) -> Result<bool> {
        if s.ambient() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: s.ambient(),
            });
        }
        Ok(self.blocks_bits(s.bits()))
    }

    pub(crate) fn blocks_bits(&self, bits: u64) -> bool {
        self.masks.iter().all(|m| m & bits != 0)
    }

    /// All members of `b[I]` in bitmask order.
    pub fn blocking_family(&self) -> Result<Vec<Subset>> {
        Ok(Subset::all(self.ambient)?
            .filter(|s| self.blocks_bits(s.bits()))
            .collect())
    }

    /// `I∨ = { I∨ : I ∈ I }`.
    pub fn reflect(&self) -> Self {
        let n = self.ambient;
        Self::new(
            n,
            self.intervals.iter().map(|&(a, b)| (n + 1 - b, n + 1 - a)),
        )
        .expect("reflection stays inside [n]")
    }
}

impl fmt::Debug for IntervalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.intervals.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{a},{b}]")?;
        }
        write!(f, "}}⊆[{}]", self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::cd_words;

    fn w(s: &str) -> CdWord {
        s.parse().unwrap()
    }

    #[test]
    fn word_families() {
        assert_eq!(IntervalFamily::of_word(&w("cd")).intervals(), &[(2, 3)]);
        assert_eq!(IntervalFamily::of_word(&w("dc")).intervals(), &[(1, 2)]);
        assert!(IntervalFamily::of_word(&w("cccc")).is_empty());
    }

    #[test]
    fn right_sparse_families() {
        let s = Subset::new(4, [1, 3]).unwrap();
        assert_eq!(
            IntervalFamily::of_right_sparse(&s).unwrap().intervals(),
            &[(1, 2), (3, 4)]
        );
        let bad = Subset::new(3, [3]).unwrap();
        assert!(matches!(
            IntervalFamily::of_right_sparse(&bad),
            Err(Error::NotRightSparse(_))
        ));
    }

    #[test]
    fn blocking() {
        let fam = IntervalFamily::new(3, [(2, 3)]).unwrap();
        assert!(fam.blocks(&Subset::new(3, [2]).unwrap()).unwrap());
        assert!(!fam.blocks(&Subset::new(3, [1]).unwrap()).unwrap());
        assert!(IntervalFamily::empty(0)
            .blocks(&Subset::empty(0).unwrap())
            .unwrap());
        assert!(fam.blocks(&Subset::new(4, [2]).unwrap()).is_err());
        assert_eq!(fam.blocking_family().unwrap().len(), 6);
    }

    #[test]
    fn reflection_matches_reversed_word() {
        for n in 0..=10 {
            for x in cd_words(n) {
                assert_eq!(
                    IntervalFamily::of_word(&x).reflect(),
                    IntervalFamily::of_word(&x.reverse())
                );
            }
        }
    }
}
