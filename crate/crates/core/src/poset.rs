//! Finite graded posets: validation, standard families, flag enumeration,
//! the Möbius function and the quasisymmetric function `F(P)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::combinat::Subset;
use crate::error::{Error, Result};
use crate::qsym::{FlagVector, QSym};
use crate::Rational;

#[derive(Clone, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(len: usize) -> Self {
        Self(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

/// A finite poset with `0̂` and `1̂` in which every cover raises rank by one.
#[derive(Clone)]
pub struct GradedPoset {
    labels: Vec<String>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    rank: Vec<u32>,
    bottom: usize,
    top: usize,
    strata: Vec<Vec<usize>>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
}

/// Built-in poset families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// Chain `0 < 1 < ⋯ < k`, rank `k`.
    Chain(u32),
    /// Subsets of `[k]`, rank `k`.
    Boolean(u32),
    /// Face lattice of an `m`-gon, rank 3.
    Polygon(u32),
    /// Face lattice of the `d`-simplex, rank `d + 1`.
    Simplex(u32),
    /// Face lattice of the `d`-cube, rank `d + 1`.
    Cube(u32),
}

impl Family {
    pub fn build(self) -> Result<GradedPoset> {
        match self {
            Family::Chain(k) => GradedPoset::chain(k),
            Family::Boolean(k) => GradedPoset::boolean(k),
            Family::Polygon(m) => GradedPoset::polygon(m),
            Family::Simplex(d) => GradedPoset::simplex_faces(d),
            Family::Cube(d) => GradedPoset::cube_faces(d),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Chain(k) => write!(f, "chain:{k}"),
            Family::Boolean(k) => write!(f, "boolean:{k}"),
            Family::Polygon(m) => write!(f, "polygon:{m}"),
            Family::Simplex(d) => write!(f, "simplex:{d}"),
            Family::Cube(d) => write!(f, "cube:{d}"),
        }
    }
}

const MAX_FAMILY_ELEMENTS: usize = 1 << 16;

impl GradedPoset {
    /// Validate a Hasse diagram given as `(lower, upper)` index pairs.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidPoset("poset has no elements".into()));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!(
                    "cover ({a}, {b}) refers to a missing element"
                )));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!(
                    "cover ({}, {}) is a loop",
                    labels[a], labels[b]
                )));
            }
            if !up[a].contains(&b) {
                up[a].push(b);
                down[b].push(a);
            }
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| down[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();
        if minimal.len() != 1 {
            return Err(Error::InvalidPoset(format!(
                "expected a unique minimal element, found {}",
                names(&labels, &minimal)
            )));
        }
        if maximal.len() != 1 {
            return Err(Error::InvalidPoset(format!(
                "expected a unique maximal element, found {}",
                names(&labels, &maximal)
            )));
        }
        let (bottom, top) = (minimal[0], maximal[0]);

        let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue = VecDeque::from([bottom]);
        let mut order = Vec::with_capacity(n);
        let mut rank = vec![u32::MAX; n];
        rank[bottom] = 0;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &up[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidPoset(
                "cover relation contains a cycle".into(),
            ));
        }
        for &x in &order[1..] {
            let r = rank[down[x][0]] + 1;
            for &lower in &down[x] {
                if rank[lower] + 1 != r {
                    return Err(Error::InvalidPoset(format!(
                        "cover ({}, {}) jumps from rank {} to rank {}",
                        labels[lower], labels[x], rank[lower], r
                    )));
                }
            }
            rank[x] = r;
        }
        let top_rank = rank[top];
        let mut strata = vec![Vec::new(); top_rank as usize + 1];
        for &x in &order {
            strata[rank[x] as usize].push(x);
        }

        let mut above = vec![BitSet::new(n); n];
        for &x in order.iter().rev() {
            let mut set = BitSet::new(n);
            set.insert(x);
            for &y in &up[x] {
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        let mut below = vec![BitSet::new(n); n];
        for &x in &order {
            let mut set = BitSet::new(n);
            set.insert(x);
            for &y in &down[x] {
                set.union_with(&below[y]);
            }
            below[x] = set;
        }

        Ok(Self {
            labels,
            up,
            down,
            rank,
            bottom,
            top,
            strata,
            above,
            below,
        })
    }

    /// Same as [`GradedPoset::from_covers`] with covers given by label.
    pub fn from_labeled_covers(labels: Vec<String>, covers: &[(String, String)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate label {l:?}")));
            }
        }
        let lookup = |l: &String| {
            index
                .get(l.as_str())
                .copied()
                .ok_or_else(|| Error::InvalidPoset(format!("cover mentions unknown label {l:?}")))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_covers(labels, &pairs)
    }

    pub fn chain(k: u32) -> Result<Self> {
        let labels = (0..=k).map(|i| i.to_string()).collect();
        let covers: Vec<_> = (0..k as usize).map(|i| (i, i + 1)).collect();
        Self::from_covers(labels, &covers)
    }

    pub fn boolean(k: u32) -> Result<Self> {
        if k > 16 {
            return Err(Error::InvalidParameter(format!("boolean:{k} is too large")));
        }
        let size = 1usize << k;
        let labels = (0..size)
            .map(|bits| Subset::from_bits(k, bits as u64).map(|s| s.to_string()))
            .collect::<Result<Vec<_>>>()?;
        let mut covers = Vec::new();
        for bits in 0..size {
            for i in 0..k {
                if bits >> i & 1 == 0 {
                    covers.push((bits, bits | 1 << i));
                }
            }
        }
        Self::from_covers(labels, &covers)
    }

    pub fn polygon(m: u32) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidParameter(format!(
                "polygon needs m >= 3, got {m}"
            )));
        }
        if m as usize > MAX_FAMILY_ELEMENTS {
            return Err(Error::InvalidParameter(format!("polygon:{m} is too large")));
        }
        let m = m as usize;
        let mut labels = vec!["empty".to_string()];
        labels.extend((0..m).map(|i| format!("v{i}")));
        labels.extend((0..m).map(|i| format!("e{i}")));
        labels.push("full".into());
        let top = 2 * m + 1;
        let mut covers = Vec::new();
        for i in 0..m {
            let v = 1 + i;
            let e = 1 + m + i;
            covers.push((0, v));
            covers.push((v, e));
            covers.push((1 + (i + 1) % m, e));
            covers.push((e, top));
        }
        Self::from_covers(labels, &covers)
    }

    /// Faces of the `d`-simplex: all subsets of its `d + 1` vertices.
    pub fn simplex_faces(d: u32) -> Result<Self> {
        Self::boolean(d + 1)
    }

    /// Faces of the `d`-cube, with `∅` below the vertices. Nonempty faces are
    /// words over `{0, 1, *}`.
    pub fn cube_faces(d: u32) -> Result<Self> {
        if d > 8 {
            return Err(Error::InvalidParameter(format!("cube:{d} is too large")));
        }
        let count = 3usize.pow(d);
        let digits = |mut code: usize| {
            let mut v = Vec::with_capacity(d as usize);
            for _ in 0..d {
                v.push(code % 3);
                code /= 3;
            }
            v
        };
        let mut labels = vec!["empty".to_string()];
        for code in 0..count {
            labels.push(digits(code).iter().map(|&t| ['0', '1', '*'][t]).collect());
        }
        if d == 0 {
            labels[1] = "point".into();
        }
        let mut covers = Vec::new();
        for code in 0..count {
            let ds = digits(code);
            if ds.iter().all(|&t| t < 2) {
                covers.push((0, 1 + code));
            }
            let mut place = 1;
            for &t in &ds {
                if t < 2 {
                    // replace this coordinate by '*'
                    covers.push((1 + code, 1 + code + (2 - t) * place));
                }
                place *= 3;
            }
        }
        Self::from_covers(labels, &covers)
    }

    /// Cartesian product with the componentwise order.
    pub fn product(&self, other: &GradedPoset) -> Result<Self> {
        let (p, q) = (self.len(), other.len());
        if p * q > MAX_FAMILY_ELEMENTS {
            return Err(Error::InvalidParameter("product is too large".into()));
        }
        let mut labels = Vec::with_capacity(p * q);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("({a},{b})"));
            }
        }
        let mut covers = Vec::new();
        for x in 0..p {
            for y in 0..q {
                for &x2 in &self.up[x] {
                    covers.push((x * q + y, x2 * q + y));
                }
                for &y2 in &other.up[y] {
                    covers.push((x * q + y, x * q + y2));
                }
            }
        }
        Self::from_covers(labels, &covers)
    }

    /// The opposite order.
    pub fn dual(&self) -> Self {
        let covers: Vec<_> = (0..self.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| (y, x)))
            .collect();
        Self::from_covers(self.labels.clone(), &covers).expect("dual of a graded poset is graded")
    }

    /// Add a new minimum below `0̂`.
    pub fn adjoin_hat_below(&self) -> Self {
        let mut labels = self.labels.clone();
        let mut fresh = "hat0".to_string();
        while labels.contains(&fresh) {
            fresh.push('\'');
        }
        labels.push(fresh);
        let new = self.len();
        let mut covers: Vec<_> = (0..self.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| (x, y)))
            .collect();
        covers.push((new, self.bottom));
        Self::from_covers(labels, &covers).expect("adjoining a minimum keeps a graded poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank_of(&self, x: usize) -> u32 {
        self.rank[x]
    }

    /// `r(1̂)`, written `n + 1`.
    pub fn rank(&self) -> u32 {
        self.rank[self.top]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Elements of the given rank.
    pub fn stratum(&self, r: u32) -> &[usize] {
        &self.strata[r as usize]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Elements `z < y`.
    pub fn strictly_below(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[y].iter().filter(move |&z| z != y)
    }

    /// Number of chains of `P` whose elements have exactly the ranks in `S`.
    pub fn flag_f(&self, s: &Subset) -> Result<u128> {
        let r = self.rank();
        if r == 0 || s.ambient() != r - 1 {
            return Err(Error::AmbientMismatch {
                left: r.saturating_sub(1),
                right: s.ambient(),
            });
        }
        Ok(self.count_chains(s))
    }

    fn count_chains(&self, s: &Subset) -> u128 {
        let mut level = vec![self.bottom];
        let mut counts = vec![1u128];
        for r in s.iter().chain([self.rank()]) {
            let next = &self.strata[r as usize];
            let next_counts = next
                .iter()
                .map(|&y| {
                    level
                        .iter()
                        .zip(&counts)
                        .filter(|(&x, _)| self.above[x].contains(y))
                        .map(|(_, c)| *c)
                        .sum()
                })
                .collect();
            level = next.clone();
            counts = next_counts;
        }
        counts[0]
    }

    /// The full flag f-vector over `S ⊆ [n]`.
    pub fn flag_vector(&self) -> Result<FlagVector> {
        let r = self.rank();
        if r == 0 {
            return Err(Error::DegreeZero);
        }
        let values = Subset::all(r - 1)?
            .map(|s| Rational::from_integer(self.count_chains(&s).into()))
            .collect();
        FlagVector::new(r - 1, values)
    }

    /// `F(P) = Σ_S f_S(P) M_S`; `1` for a rank-0 poset.
    pub fn qsym(&self) -> QSym {
        match self.flag_vector() {
            Ok(f) => QSym::from_flag_vector(&f),
            Err(_) => QSym::one(),
        }
    }

    /// Möbius values `μ(x, y)` for every `y ≥ x`.
    fn mobius_from(&self, x: usize) -> HashMap<usize, i64> {
        let mut mu = HashMap::new();
        let mut ups: Vec<usize> = self.above[x].iter().collect();
        ups.sort_by_key(|&y| self.rank[y]);
        for y in ups {
            if y == x {
                mu.insert(y, 1);
                continue;
            }
            let s: i64 = self
                .strictly_below(y)
                .filter(|&z| self.above[x].contains(z))
                .map(|z| mu[&z])
                .sum();
            mu.insert(y, -s);
        }
        mu
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if x >= self.len() || y >= self.len() {
            return Err(Error::InvalidParameter("element index out of range".into()));
        }
        if !self.leq(x, y) {
            return Err(Error::Incomparable(
                self.labels[x].clone(),
                self.labels[y].clone(),
            ));
        }
        Ok(self.mobius_from(x)[&y])
    }

    /// Check `μ(x, y) = (-1)^{r(y) - r(x)}` on every pair, reporting the
    /// first failure.
    pub fn check_eulerian(&self) -> Result<()> {
        for x in 0..self.len() {
            let mu = self.mobius_from(x);
            let mut pairs: Vec<_> = mu.into_iter().collect();
            pairs.sort_by_key(|&(y, _)| (self.rank[y], y));
            for (y, m) in pairs {
                let expected = if (self.rank[y] - self.rank[x]).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                if m != expected {
                    return Err(Error::NotEulerian {
                        x: self.labels[x].clone(),
                        y: self.labels[y].clone(),
                        mu: m,
                        expected,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_eulerian(&self) -> bool {
        self.check_eulerian().is_ok()
    }
}

fn names(labels: &[String], idx: &[usize]) -> String {
    if idx.is_empty() {
        return "none".into();
    }
    idx.iter()
        .map(|&i| labels[i].as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Debug for GradedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedPoset(rank {}, {} elements)",
            self.rank(),
            self.len()
        )
    }
}

/// Flag vectors of two posets agree (isomorphism at the level of `F(P)`).
pub fn same_flags(p: &GradedPoset, q: &GradedPoset) -> bool {
    p.rank() == q.rank() && p.qsym() == q.qsym()
}
