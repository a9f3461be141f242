//! Quasisymmetric functions with exact rational coefficients.
//!
//! Elements are stored in the monomial basis `M`; the fundamental basis `F`
//! and the basis `K` exist as conversion views. Within a homogeneous
//! component of degree `n + 1`, basis elements are indexed by subsets of
//! `[n]` (the composition `β(S)` of [`Composition::of_subset`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::combinat::{Composition, IntervalFamily, Subset};
use crate::error::{Error, Result};
use crate::linalg::{int, pow2};
use crate::Rational;

/// The monomial quasisymmetric function `M_S^{(degree)}`, `S ⊆ [degree - 1]`.
///
/// Degree 0 has the single key `M_0 = 1` (with `bits == 0`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    bits: u64,
}

impl Monomial {
    pub fn one() -> Self {
        Self { degree: 0, bits: 0 }
    }

    /// `M_S` in degree `ambient(S) + 1`.
    pub fn of_subset(s: &Subset) -> Self {
        Self {
            degree: s.ambient() + 1,
            bits: s.bits(),
        }
    }

    pub fn of_composition(beta: &Composition) -> Result<Self> {
        if beta.is_empty() {
            return Ok(Self::one());
        }
        Ok(Self::of_subset(&beta.to_subset()?))
    }

    pub(crate) fn from_raw(degree: u32, bits: u64) -> Self {
        Self { degree, bits }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub(crate) fn bits(&self) -> u64 {
        self.bits
    }

    /// The indexing subset, or `None` in degree 0.
    pub fn subset(&self) -> Option<Subset> {
        (self.degree > 0).then(|| Subset::from_bits_unchecked(self.degree - 1, self.bits))
    }

    pub fn composition(&self) -> Composition {
        match self.subset() {
            Some(s) => Composition::of_subset(&s),
            None => Composition::empty(),
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", self.composition())
    }
}

/// One of the three bases of each homogeneous component.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    /// Monomial basis `M_S`.
    M,
    /// Fundamental basis `F_S = Σ_{T ⊇ S} M_T`.
    F,
    /// `K_S = Σ_{T ⊇ S} F_T`.
    K,
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(Basis::M),
            "F" | "f" => Ok(Basis::F),
            "K" | "k" => Ok(Basis::K),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::K => "K",
        };
        f.write_str(s)
    }
}

/// `v[T] ← Σ_{S ⊆ T} v[S]` over a dense vector indexed by bitmask.
fn subset_sum(v: &mut [Rational]) {
    let n = v.len().trailing_zeros();
    for i in 0..n {
        let bit = 1usize << i;
        for mask in 0..v.len() {
            if mask & bit != 0 && !v[mask ^ bit].is_zero() {
                let lower = v[mask ^ bit].clone();
                v[mask] += lower;
            }
        }
    }
}

/// Inverse of [`subset_sum`].
fn subset_difference(v: &mut [Rational]) {
    let n = v.len().trailing_zeros();
    for i in 0..n {
        let bit = 1usize << i;
        for mask in 0..v.len() {
            if mask & bit != 0 && !v[mask ^ bit].is_zero() {
                let lower = v[mask ^ bit].clone();
                v[mask] -= lower;
            }
        }
    }
}

/// Change coordinates of one homogeneous component. `v` is dense, indexed by
/// subset bitmask.
pub fn change_basis(mut v: Vec<Rational>, from: Basis, to: Basis) -> Vec<Rational> {
    assert!(
        v.len().is_power_of_two(),
        "dense component must have 2^n entries"
    );
    fn rank(b: Basis) -> u8 {
        match b {
            Basis::M => 0,
            Basis::F => 1,
            Basis::K => 2,
        }
    }
    let (a, b) = (rank(from), rank(to));
    // K -> F -> M each apply one subset sum; the reverse direction inverts it.
    if a > b {
        for _ in 0..a - b {
            subset_sum(&mut v);
        }
    } else {
        for _ in 0..b - a {
            subset_difference(&mut v);
        }
    }
    v
}

/// A vector of flag numbers `(x_S)_{S ⊆ [n]}`, dense by bitmask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagVector {
    ambient: u32,
    values: Vec<Rational>,
}

impl FlagVector {
    pub fn new(ambient: u32, values: Vec<Rational>) -> Result<Self> {
        if ambient > 24 {
            return Err(Error::AmbientTooLarge(ambient));
        }
        if values.len() != 1 << ambient {
            return Err(Error::DimensionMismatch {
                expected: 1 << ambient,
                got: values.len(),
            });
        }
        Ok(Self { ambient, values })
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, s: &Subset) -> &Rational {
        &self.values[s.bits() as usize]
    }

    /// `f_S = Σ_{T ⊆ S} h_T`, solved for `h`.
    pub fn f_to_h(&self) -> Self {
        let mut values = self.values.clone();
        subset_difference(&mut values);
        Self {
            ambient: self.ambient,
            values,
        }
    }

    pub fn h_to_f(&self) -> Self {
        let mut values = self.values.clone();
        subset_sum(&mut values);
        Self {
            ambient: self.ambient,
            values,
        }
    }

    /// `h_S = Σ_{T ⊆ S} k_T`, solved for `k`.
    pub fn h_to_k(&self) -> Self {
        self.f_to_h()
    }

    pub fn k_to_h(&self) -> Self {
        self.h_to_f()
    }
}

/// A quasisymmetric function, stored in the `M` basis with no zero entries.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QSym {
    terms: BTreeMap<Monomial, Rational>,
}

fn add_term(terms: &mut BTreeMap<Monomial, Rational>, key: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl QSym {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        let mut q = Self::zero();
        add_term(&mut q.terms, Monomial::one(), c);
        q
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut q = Self::zero();
        for (m, c) in terms {
            add_term(&mut q.terms, m, c);
        }
        q
    }

    /// `M_S`.
    pub fn monomial(s: &Subset) -> Self {
        Self::from_terms([(Monomial::of_subset(s), Rational::one())])
    }

    /// `M_β`.
    pub fn monomial_composition(beta: &Composition) -> Result<Self> {
        Ok(Self::from_terms([(
            Monomial::of_composition(beta)?,
            Rational::one(),
        )]))
    }

    /// `F_S`.
    pub fn fundamental(s: &Subset) -> Self {
        Self::basis_element(s, Basis::F)
    }

    /// `K_S`.
    pub fn k_element(s: &Subset) -> Self {
        Self::basis_element(s, Basis::K)
    }

    pub fn basis_element(s: &Subset, basis: Basis) -> Self {
        Self::from_basis(s.ambient(), basis, [(*s, Rational::one())])
            .expect("a single subset fits its own ambient")
    }

    /// Build a homogeneous element of degree `ambient + 1` from coefficients in
    /// any basis.
    pub fn from_basis(
        ambient: u32,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Subset, Rational)>,
    ) -> Result<Self> {
        if ambient > 24 {
            return Err(Error::AmbientTooLarge(ambient));
        }
        let mut dense = vec![Rational::zero(); 1 << ambient];
        for (s, c) in coeffs {
            if s.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: s.ambient(),
                });
            }
            dense[s.bits() as usize] += c;
        }
        Ok(Self::from_dense(ambient + 1, basis, dense))
    }

    /// Homogeneous element from a dense coefficient vector of length
    /// `2^(degree-1)`. For degree 0 the vector holds the single scalar.
    pub fn from_dense(degree: u32, basis: Basis, dense: Vec<Rational>) -> Self {
        let dense = if degree == 0 {
            dense
        } else {
            change_basis(dense, basis, Basis::M)
        };
        let mut q = Self::zero();
        for (bits, c) in dense.into_iter().enumerate() {
            add_term(&mut q.terms, Monomial::from_raw(degree, bits as u64), c);
        }
        q
    }

    /// `F(P) = Σ f_S M_S` for a flag f-vector.
    pub fn from_flag_vector(f: &FlagVector) -> Self {
        Self::from_dense(f.ambient() + 1, Basis::M, f.values().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `M_S`.
    pub fn coefficient(&self, s: &Subset) -> Rational {
        self.terms
            .get(&Monomial::of_subset(s))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn monomial_coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The counit: the degree-0 coefficient.
    pub fn counit(&self) -> Rational {
        self.monomial_coefficient(&Monomial::one())
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|m| m.degree).collect();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// The homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        let lo = Monomial::from_raw(degree, 0);
        let hi = Monomial::from_raw(degree, u64::MAX);
        Self {
            terms: self
                .terms
                .range(lo..=hi)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Dense coefficients of the degree-`degree` component in `basis`.
    pub fn dense(&self, degree: u32, basis: Basis) -> Vec<Rational> {
        if degree == 0 {
            return vec![self.counit()];
        }
        let n = degree - 1;
        assert!(n <= 24, "component too large for dense storage");
        let mut v = vec![Rational::zero(); 1 << n];
        for (m, c) in self.component(degree).terms {
            v[m.bits as usize] = c;
        }
        change_basis(v, Basis::M, basis)
    }

    /// Sparse coefficients in `basis`, keyed by monomial index.
    pub fn to_basis(&self, basis: Basis) -> BTreeMap<Monomial, Rational> {
        let mut out = BTreeMap::new();
        for d in self.degrees() {
            for (bits, c) in self.dense(d, basis).into_iter().enumerate() {
                add_term(&mut out, Monomial::from_raw(d, bits as u64), c);
            }
        }
        out
    }

    /// The flag vector (M-coefficients) of the degree-`degree` component.
    pub fn flag_vector(&self, degree: u32) -> Result<FlagVector> {
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        FlagVector::new(degree - 1, self.dense(degree, Basis::M))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Apply a linear map given on homogeneous components.
    fn map_components(&self, f: impl Fn(u32, &QSym) -> QSym) -> QSym {
        let mut out = QSym::zero();
        for d in self.degrees() {
            out += &f(d, &self.component(d));
        }
        out
    }

    /// Quasi-shuffle product.
    pub fn multiply(&self, other: &QSym) -> QSym {
        let mut cache = ShuffleCache::default();
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let coeff = ca * cb;
                let degree = a.degree + b.degree;
                for (bits, mult) in cache.product(*a, *b) {
                    add_term(
                        &mut terms,
                        Monomial::from_raw(degree, *bits),
                        &coeff * Rational::from_integer((*mult).into()),
                    );
                }
            }
        }
        QSym { terms }
    }

    pub fn pow(&self, k: u32) -> QSym {
        let mut acc = QSym::one();
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Deconcatenation coproduct.
    pub fn coproduct(&self) -> Tensor {
        let mut t = Tensor::zero();
        for (m, c) in &self.terms {
            for (l, r) in deconcatenate(*m) {
                t.add_term(l, r, c.clone());
            }
        }
        t
    }

    /// Antipode, through `s(F_T) = (-1)^{n+1} F_{(T̄)∨}` on each component.
    pub fn antipode(&self) -> QSym {
        self.map_components(|d, comp| {
            if d == 0 {
                return comp.clone();
            }
            let n = d - 1;
            let h = comp.dense(d, Basis::F);
            let mut out = vec![Rational::zero(); h.len()];
            let sign = if d % 2 == 0 { int(1) } else { int(-1) };
            for (bits, c) in h.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = Subset::from_bits_unchecked(n, bits as u64);
                let image = t.complement().reflect();
                out[image.bits() as usize] += &sign * c;
            }
            QSym::from_dense(d, Basis::F, out)
        })
    }

    /// `L(M_S^{(n)}) = M_S^{(n+1)}`; kills degree 0.
    pub fn raise(&self) -> QSym {
        QSym::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.degree > 0)
                .map(|(m, c)| (Monomial::from_raw(m.degree + 1, m.bits), c.clone())),
        )
    }

    /// Keep `M_S` for right-sparse `S`, drop the rest.
    pub fn bar(&self) -> QSym {
        QSym::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.subset().is_none_or(|s| s.is_right_sparse()))
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// `D(M_S) = 2^{|S|+1} M_S`.
    pub fn dilate(&self) -> QSym {
        QSym::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (*m, c * pow2(m.bits.count_ones() + 1))),
        )
    }

    /// `F_I = Σ_{S ∈ b[I]} M_S`.
    pub fn interval(family: &IntervalFamily) -> Result<QSym> {
        Ok(QSym::from_terms(
            family
                .blocking_family()?
                .into_iter()
                .map(|s| (Monomial::of_subset(&s), Rational::one())),
        ))
    }
}

#[derive(Default)]
struct ShuffleCache {
    products: HashMap<(Monomial, Monomial), Vec<(u64, u64)>>,
}

impl ShuffleCache {
    fn product(&mut self, a: Monomial, b: Monomial) -> &[(u64, u64)] {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.products.entry(key).or_insert_with(|| {
            let shuffles = quasi_shuffle(a.composition().parts(), b.composition().parts());
            let mut out: Vec<(u64, u64)> = shuffles
                .into_iter()
                .map(|(parts, mult)| (composition_bits(&parts), mult))
                .collect();
            out.sort_unstable();
            out
        })
    }
}

fn composition_bits(parts: &[u32]) -> u64 {
    let mut acc = 0;
    let mut bits = 0u64;
    for &p in &parts[..parts.len().saturating_sub(1)] {
        acc += p;
        bits |= 1 << (acc - 1);
    }
    bits
}

/// All overlapping shuffles of two compositions with multiplicity.
pub fn quasi_shuffle(a: &[u32], b: &[u32]) -> HashMap<Vec<u32>, u64> {
    let (la, lb) = (a.len(), b.len());
    // table[i][j]: quasi-shuffles of the suffixes a[i..] and b[j..]
    let mut table: Vec<Vec<HashMap<Vec<u32>, u64>>> = vec![vec![HashMap::new(); lb + 1]; la + 1];
    for i in (0..=la).rev() {
        for j in (0..=lb).rev() {
            let mut cell = HashMap::new();
            if i == la || j == lb {
                let tail: Vec<u32> = a[i..].iter().chain(&b[j..]).copied().collect();
                cell.insert(tail, 1);
            } else {
                let mut extend = |head: u32, from: &HashMap<Vec<u32>, u64>| {
                    for (w, m) in from {
                        let mut v = Vec::with_capacity(w.len() + 1);
                        v.push(head);
                        v.extend_from_slice(w);
                        *cell.entry(v).or_insert(0) += m;
                    }
                };
                extend(a[i], &table[i + 1][j]);
                extend(b[j], &table[i][j + 1]);
                extend(a[i] + b[j], &table[i + 1][j + 1]);
            }
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

/// All splittings `α = α₁·α₂` of a monomial's composition.
fn deconcatenate(m: Monomial) -> Vec<(Monomial, Monomial)> {
    if m.degree == 0 {
        return vec![(m, m)];
    }
    let mut out = vec![(Monomial::one(), m)];
    let n = m.degree - 1;
    for i in 1..=n {
        if m.bits >> (i - 1) & 1 == 1 {
            let left = Monomial::from_raw(i, m.bits & ((1u64 << (i - 1)) - 1));
            let right = Monomial::from_raw(m.degree - i, m.bits >> i);
            out.push((left, right));
        }
    }
    out.push((m, Monomial::one()));
    out
}

/// An element of `QSym ⊗ QSym`, in the basis `M_α ⊗ M_β`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Tensor {
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry((left, right))
            .or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(left, right));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product in the tensor square: `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let left = QSym::from_terms([(*a, Rational::one())])
                    .multiply(&QSym::from_terms([(*c, Rational::one())]));
                let right = QSym::from_terms([(*b, Rational::one())])
                    .multiply(&QSym::from_terms([(*d, Rational::one())]));
                let xy = x * y;
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term(*l, *r, &xy * cl * cr);
                    }
                }
            }
        }
        out
    }

    /// `m ∘ (f ⊗ g)`.
    pub fn contract(&self, f: impl Fn(&QSym) -> QSym, g: impl Fn(&QSym) -> QSym) -> QSym {
        let mut out = QSym::zero();
        for ((a, b), c) in &self.terms {
            let left = f(&QSym::from_terms([(*a, c.clone())]));
            let right = g(&QSym::from_terms([(*b, Rational::one())]));
            out += &left.multiply(&right);
        }
        out
    }

    /// `(Δ ⊗ id)` applied, as a map on triples.
    pub fn coproduct_left(&self) -> BTreeMap<[Monomial; 3], Rational> {
        let mut out = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for (x, y) in deconcatenate(*a) {
                *out.entry([x, y, *b]).or_insert_with(Rational::zero) += c;
            }
        }
        out.retain(|_, v: &mut Rational| !v.is_zero());
        out
    }

    /// `(id ⊗ Δ)` applied, as a map on triples.
    pub fn coproduct_right(&self) -> BTreeMap<[Monomial; 3], Rational> {
        let mut out = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for (x, y) in deconcatenate(*b) {
                *out.entry([*a, x, y]).or_insert_with(Rational::zero) += c;
            }
        }
        out.retain(|_, v: &mut Rational| !v.is_zero());
        out
    }
}

impl AddAssign<&QSym> for QSym {
    fn add_assign(&mut self, rhs: &QSym) {
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, *m, c.clone());
        }
    }
}

impl Add for &QSym {
    type Output = QSym;

    fn add(self, rhs: &QSym) -> QSym {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QSym {
    type Output = QSym;

    fn sub(self, rhs: &QSym) -> QSym {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Neg for &QSym {
    type Output = QSym;

    fn neg(self) -> QSym {
        QSym {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &QSym {
    type Output = QSym;

    fn mul(self, rhs: &QSym) -> QSym {
        self.multiply(rhs)
    }
}

impl fmt::Display for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if m.degree == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "M{}", m.composition())?;
            } else {
                write!(f, "{a}·M{}", m.composition())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
