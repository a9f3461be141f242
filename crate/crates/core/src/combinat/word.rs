use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::subset::Subset;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    C,
    D,
}

impl Letter {
    pub fn degree(self) -> u32 {
        match self {
            Letter::C => 1,
            Letter::D => 2,
        }
    }
}

/// A word in the noncommuting letters `c` (degree 1) and `d` (degree 2).
///
/// Words are ordered by degree first, then lexicographically with `c < d`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CdWord(Vec<Letter>);

impl CdWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    /// The empty word `1`.
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// `c^k`.
    pub fn c_power(k: u32) -> Self {
        Self(vec![Letter::C; k as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|l| l.degree()).sum()
    }

    pub fn d_count(&self) -> u32 {
        self.0.iter().filter(|&&l| l == Letter::D).count() as u32
    }

    pub fn c_count(&self) -> u32 {
        self.0.iter().filter(|&&l| l == Letter::C).count() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w*`.
    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &CdWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// `S_w ⊆ [deg w]`: the degrees of the prefixes ending in each `d`.
    pub fn peak_set(&self) -> Subset {
        let n = self.degree();
        let mut deg = 0;
        let mut bits = 0u64;
        for &l in &self.0 {
            deg += l.degree();
            if l == Letter::D {
                bits |= 1 << (deg - 1);
            }
        }
        Subset::from_bits(n, bits).expect("word degree exceeds subset capacity")
    }

    /// Inverse of [`CdWord::peak_set`] on left-sparse subsets.
    pub fn from_left_sparse(s: &Subset) -> Result<Self> {
        if !s.is_left_sparse() {
            return Err(Error::NotLeftSparse(s.to_string()));
        }
        let mut letters = Vec::new();
        let mut prev = 0;
        for i in s.iter() {
            letters.extend(std::iter::repeat_n(Letter::C, (i - prev - 2) as usize));
            letters.push(Letter::D);
            prev = i;
        }
        letters.extend(std::iter::repeat_n(
            Letter::C,
            (s.ambient() - prev) as usize,
        ));
        Ok(Self(letters))
    }

    /// Writing `w = c^{n_1} d c^{n_2} d ⋯ c^{n_k} d c^m`, returns
    /// `([n_1, …, n_k], m)`.
    pub fn runs(&self) -> (Vec<u32>, u32) {
        let mut before_d = Vec::new();
        let mut run = 0;
        for &l in &self.0 {
            match l {
                Letter::C => run += 1,
                Letter::D => {
                    before_d.push(run);
                    run = 0;
                }
            }
        }
        (before_d, run)
    }

    /// Inverse of [`CdWord::runs`].
    pub fn from_runs(before_d: &[u32], trailing: u32) -> Self {
        let mut letters = Vec::new();
        for &r in before_d {
            letters.extend(std::iter::repeat_n(Letter::C, r as usize));
            letters.push(Letter::D);
        }
        letters.extend(std::iter::repeat_n(Letter::C, trailing as usize));
        Self(letters)
    }

    /// Every element of `S_w` is even, i.e. every `n_j` is even.
    pub fn is_even(&self) -> bool {
        self.runs().0.iter().all(|r| r % 2 == 0)
    }

    /// Letters as a string over `{c, d}`; the empty word is `""`.
    pub fn to_key(&self) -> String {
        self.0
            .iter()
            .map(|l| match l {
                Letter::C => 'c',
                Letter::D => 'd',
            })
            .collect()
    }
}

impl Ord for CdWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CdWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for CdWord {
    type Err = Error;

    /// Accepts letter strings such as `"ccd"`, with `""` or `"1"` for the
    /// empty word.
    fn from_str(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(Self::one());
        }
        let letters = s
            .chars()
            .map(|ch| match ch {
                'c' => Ok(Letter::C),
                'd' => Ok(Letter::D),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        let w = Self(letters);
        if w.degree() > super::subset::MAX_AMBIENT {
            return Err(Error::InvalidWord(format!("{s}: degree too large")));
        }
        Ok(w)
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.to_key())
        }
    }
}

impl fmt::Debug for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All cd-words of degree `n` in canonical order. There are `a_{n+1}` of
/// them, `a` being the Fibonacci numbers with `a_1 = a_2 = 1`.
pub fn cd_words(n: u32) -> Vec<CdWord> {
    let mut table: Vec<Vec<CdWord>> = vec![vec![CdWord::one()]];
    for k in 1..=n as usize {
        let mut words = Vec::new();
        for w in &table[k - 1] {
            let mut v = vec![Letter::C];
            v.extend_from_slice(&w.0);
            words.push(CdWord(v));
        }
        if k >= 2 {
            for w in &table[k - 2] {
                let mut v = vec![Letter::D];
                v.extend_from_slice(&w.0);
                words.push(CdWord(v));
            }
        }
        table.push(words);
    }
    table.swap_remove(n as usize)
}

/// Fibonacci numbers indexed so that `a_1 = a_2 = 1` (and `a_0 = 0`).
pub fn fibonacci(k: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CdWord {
        s.parse().unwrap()
    }

    #[test]
    fn peak_sets_of_words() {
        assert_eq!(w("cd").peak_set(), Subset::new(3, [3]).unwrap());
        assert_eq!(w("dc").peak_set(), Subset::new(3, [2]).unwrap());
        assert_eq!(w("cccc").peak_set(), Subset::empty(4).unwrap());
        assert_eq!(w("").peak_set(), Subset::empty(0).unwrap());
    }

    #[test]
    fn words_from_sparse_sets() {
        assert_eq!(
            CdWord::from_left_sparse(&Subset::new(3, [3]).unwrap()).unwrap(),
            w("cd")
        );
        assert_eq!(
            CdWord::from_left_sparse(&Subset::new(3, [2]).unwrap()).unwrap(),
            w("dc")
        );
        assert!(matches!(
            CdWord::from_left_sparse(&Subset::new(3, [1]).unwrap()),
            Err(Error::NotLeftSparse(_))
        ));
        assert!(CdWord::from_left_sparse(&Subset::new(4, [2, 3]).unwrap()).is_err());
    }

    #[test]
    fn reversal() {
        assert_eq!(w("ccd").reverse(), w("dcc"));
        assert_eq!(w("d").reverse(), w("d"));
        assert_eq!(w("cdc").reverse(), w("cdc"));
    }

    #[test]
    fn enumeration_and_order() {
        assert_eq!(cd_words(0), vec![CdWord::one()]);
        assert_eq!(cd_words(3), vec![w("ccc"), w("cd"), w("dc")]);
        assert_eq!(cd_words(5).len(), 8);
        for n in 0..=20 {
            let words = cd_words(n);
            assert_eq!(words.len() as u64, fibonacci(n + 1), "degree {n}");
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            assert!(words.iter().all(|x| x.degree() == n));
        }
    }

    #[test]
    fn even_words() {
        assert!(w("d").is_even());
        assert!(!w("cd").is_even());
        assert!(w("ccddc").is_even());
        for m in 0..6 {
            assert!(CdWord::c_power(m).is_even());
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(w("1"), CdWord::one());
        assert_eq!(w(""), CdWord::one());
        assert!("cx".parse::<CdWord>().is_err());
        assert_eq!(w("cdc").to_string(), "cdc");
        assert_eq!(CdWord::one().to_string(), "1");
        assert_eq!(w("ccdcd").runs(), (vec![2, 1], 0));
        assert_eq!(CdWord::from_runs(&[2, 1], 0), w("ccdcd"));
    }

    #[test]
    fn sparse_bijection_exhaustive() {
        for n in 0..=14 {
            let words = cd_words(n);
            for x in &words {
                let s = x.peak_set();
                assert!(s.is_left_sparse());
                assert_eq!(s.len(), x.d_count());
                assert_eq!(&CdWord::from_left_sparse(&s).unwrap(), x);
            }
            let sparse = Subset::all(n)
                .unwrap()
                .filter(Subset::is_left_sparse)
                .count();
            assert_eq!(sparse, words.len());
        }
    }
}
