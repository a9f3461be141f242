//! The map `ϑ(F_S) = Θ_{Λ(S)}`: its matrix on the `Θ` basis, the peak-set
//! random walk, the eigenbasis `Ω_w`, and the cones it defines.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use crate::combinat::{cd_words, CdWord, Letter, Subset};
use crate::error::{Error, Result};
use crate::linalg::{int, pow2, solve, SolveError};
use crate::peak::{balanced_subsets, theta, theta_combination, theta_expansion, CdPolynomial};
use crate::poset::GradedPoset;
use crate::qsym::{Basis, QSym};
use crate::Rational;

/// `ϑ`, applied degree by degree. Scalars are fixed.
pub fn vartheta(f: &QSym) -> QSym {
    let mut out = QSym::zero();
    for d in f.degrees() {
        if d == 0 {
            out += &QSym::scalar(f.counit());
            continue;
        }
        let mut by_peaks: BTreeMap<u64, Rational> = BTreeMap::new();
        for (bits, c) in f.dense(d, Basis::F).into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = Subset::from_bits_unchecked(d - 1, bits as u64);
            *by_peaks
                .entry(s.peaks().bits())
                .or_insert_with(Rational::zero) += c;
        }
        for (bits, c) in by_peaks {
            let s = Subset::from_bits_unchecked(d - 1, bits);
            let w = CdWord::from_left_sparse(&s).expect("peak sets are left sparse");
            out += &theta(&w).scale(&c);
        }
    }
    out
}

/// `ϑ(Θ_w)` in the `Θ` basis: column `w` of the scaled `η` matrix.
pub fn vartheta_theta(w: &CdWord) -> CdPolynomial {
    let scale = pow2(w.d_count() + 1);
    let mut out = CdPolynomial::zero();
    for t in balanced_subsets(w) {
        let u = CdWord::from_left_sparse(&t.peaks()).expect("peak sets are left sparse");
        out.add_term(u, scale.clone());
    }
    out
}

/// `η_{u,w} = #{T ⊆ [n] : T, T̄ ∈ b[I^w], Λ(T) = S_u}`, rows `u` and columns
/// `w` both in canonical word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaMatrix {
    n: u32,
    words: Vec<CdWord>,
    entries: Vec<Vec<u64>>,
}

impl EtaMatrix {
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn words(&self) -> &[CdWord] {
        &self.words
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn entry(&self, u: usize, w: usize) -> u64 {
        self.entries[u][w]
    }

    /// Entries `2^{|w|_d+1} η_{u,w}`: the matrix of `ϑ` on the `Θ` basis.
    pub fn scaled(&self) -> Vec<Vec<Rational>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.words)
                    .map(|(&e, w)| int(e as i64) * pow2(w.d_count() + 1))
                    .collect()
            })
            .collect()
    }

    pub fn scaled_column_sums(&self) -> Vec<Rational> {
        let s = self.scaled();
        (0..self.words.len())
            .map(|j| s.iter().map(|row| row[j].clone()).sum())
            .collect()
    }

    /// Row `u` as the linear form `Σ_w η_{u,w}[w]`.
    pub fn row_form(&self, u: usize) -> CdPolynomial {
        CdPolynomial::from_terms(
            self.words
                .iter()
                .zip(&self.entries[u])
                .map(|(w, &e)| (w.clone(), int(e as i64))),
        )
    }
}

fn word_index(words: &[CdWord]) -> HashMap<u64, usize> {
    words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.peak_set().bits(), i))
        .collect()
}

pub fn eta_bruteforce(n: u32) -> EtaMatrix {
    let words = cd_words(n);
    let index = word_index(&words);
    let mut entries = vec![vec![0u64; words.len()]; words.len()];
    for (j, w) in words.iter().enumerate() {
        for t in balanced_subsets(w) {
            entries[index[&t.peaks().bits()]][j] += 1;
        }
    }
    EtaMatrix { n, words, entries }
}

/// With `S_u = {u_1 < ⋯ < u_m}`, `u_0 = 0`, `u_{m+1} = n+2`: zero if some
/// gap `(u_i, u_{i+1})` holds two or more elements of `S_w`, otherwise the
/// product of `u_{i+1} - u_i - 1` over the gaps missing `S_w`.
pub fn eta_closedform(n: u32) -> EtaMatrix {
    let words = cd_words(n);
    let entries = words
        .iter()
        .map(|u| {
            let mut cuts = vec![0];
            cuts.extend(u.peak_set().iter());
            cuts.push(n + 2);
            words
                .iter()
                .map(|w| {
                    let sw = w.peak_set();
                    let mut prod = 1u64;
                    for pair in cuts.windows(2) {
                        let (lo, hi) = (pair[0], pair[1]);
                        match sw.iter().filter(|&i| lo < i && i < hi).count() {
                            0 => prod *= (hi - lo - 1) as u64,
                            1 => {}
                            _ => return 0,
                        }
                    }
                    prod
                })
                .collect()
        })
        .collect();
    EtaMatrix { n, words, entries }
}

/// The column-stochastic matrix `ϑ / 2^{n+1}` on `Θ`-coordinates.
pub fn walk_matrix(n: u32) -> Vec<Vec<Rational>> {
    let scale = pow2(n + 1);
    eta_closedform(n)
        .scaled()
        .into_iter()
        .map(|row| row.into_iter().map(|e| e / &scale).collect())
        .collect()
}

pub fn walk_step(matrix: &[Vec<Rational>], dist: &[Rational]) -> Result<Vec<Rational>> {
    if matrix.iter().any(|row| row.len() != dist.len()) {
        return Err(Error::DimensionMismatch {
            expected: matrix.first().map_or(0, Vec::len),
            got: dist.len(),
        });
    }
    Ok(matrix
        .iter()
        .map(|row| row.iter().zip(dist).map(|(a, b)| a * b).sum())
        .collect())
}

/// Number of permutations of `[n+1]` with each peak set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakDistribution {
    size: u32,
    counts: BTreeMap<Subset, u64>,
}

impl PeakDistribution {
    /// `n + 1`.
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn counts(&self) -> &BTreeMap<Subset, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ_S p_S Θ_S` as `Θ`-coordinates.
    pub fn theta_coordinates(&self) -> CdPolynomial {
        CdPolynomial::from_terms(self.counts.iter().map(|(s, &c)| {
            (
                CdWord::from_left_sparse(s).expect("peak sets are left sparse"),
                int(c as i64),
            )
        }))
    }

    /// The stationary distribution of the walk, in canonical word order.
    pub fn normalized(&self) -> Vec<Rational> {
        let total = int(self.total() as i64);
        self.theta_coordinates()
            .dense(self.size.saturating_sub(1))
            .into_iter()
            .map(|c| c / &total)
            .collect()
    }
}

/// Largest `n + 1` accepted by [`peak_distribution_enumerate`].
pub const MAX_ENUMERATION_SIZE: u32 = 10;

/// Walk through all of `S_{n+1}` and record peak sets.
pub fn peak_distribution_enumerate(size: u32) -> Result<PeakDistribution> {
    if size == 0 || size > MAX_ENUMERATION_SIZE {
        return Err(Error::InvalidParameter(format!(
            "permutation size {size} outside 1..={MAX_ENUMERATION_SIZE}"
        )));
    }
    let n = size - 1;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut perm: Vec<u32> = (1..=size).collect();
    loop {
        let mut bits = 0u64;
        for i in 1..n as usize {
            if perm[i - 1] < perm[i] && perm[i] > perm[i + 1] {
                // position i+1 in one-based indexing
                bits |= 1 << i;
            }
        }
        *counts.entry(bits).or_insert(0) += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(PeakDistribution {
        size,
        counts: counts
            .into_iter()
            .map(|(b, c)| (Subset::from_bits_unchecked(n, b), c))
            .collect(),
    })
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Read the peak distribution off `Θ_1^{n+1}`.
pub fn peak_distribution_theta(size: u32) -> Result<PeakDistribution> {
    if size == 0 {
        return Err(Error::DegreeZero);
    }
    let p = theta(&CdWord::one()).pow(size);
    let coords = theta_expansion(&p)?;
    let mut counts = BTreeMap::new();
    for (w, c) in coords.terms() {
        if !c.is_integer() || c < &Rational::zero() {
            return Err(Error::Internal(format!("peak count {c} for {w}")));
        }
        let v: u64 = c
            .to_integer()
            .try_into()
            .map_err(|_| Error::Internal(format!("peak count {c} overflows")))?;
        counts.insert(w.peak_set(), v);
    }
    Ok(PeakDistribution { size, counts })
}

/// `Θ_1 · Θ_w` in the `Θ` basis.
pub fn theta1_multiply(w: &CdWord) -> CdPolynomial {
    let letters = w.letters();
    let mut out = CdPolynomial::zero();
    let one = Rational::one();
    let mut cw = vec![Letter::C];
    cw.extend_from_slice(letters);
    out.add_term(CdWord::new(cw), one.clone());
    let mut wc = letters.to_vec();
    wc.push(Letter::C);
    out.add_term(CdWord::new(wc), one.clone());
    for (i, &l) in letters.iter().enumerate() {
        let (head, tail) = (&letters[..i], &letters[i + 1..]);
        let splice = |mid: &[Letter]| {
            let mut v = head.to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(tail);
            CdWord::new(v)
        };
        match l {
            Letter::C => out.add_term(splice(&[Letter::D]), one.clone()),
            Letter::D => {
                out.add_term(splice(&[Letter::C, Letter::D]), one.clone());
                out.add_term(splice(&[Letter::D, Letter::C]), one.clone());
            }
        }
    }
    out
}

/// `L²(Θ_w) = Θ_{wc²} - Θ_{wd}`.
pub fn l2_theta(w: &CdWord) -> CdPolynomial {
    let mut wcc = w.letters().to_vec();
    wcc.extend([Letter::C, Letter::C]);
    let mut wd = w.letters().to_vec();
    wd.push(Letter::D);
    CdPolynomial::from_terms([(CdWord::new(wcc), int(1)), (CdWord::new(wd), int(-1))])
}

fn apply_linear(p: &CdPolynomial, op: impl Fn(&CdWord) -> CdPolynomial) -> CdPolynomial {
    let mut out = CdPolynomial::zero();
    for (w, c) in p.terms() {
        out.add(&op(w).scale(c));
    }
    out
}

/// `Ω_w = ŵ(Θ_1)` in `Θ`-coordinates. The rightmost letter acts first;
/// `c` multiplies by `Θ_1` and `d` applies `L²`.
pub fn omega_theta(w: &CdWord) -> CdPolynomial {
    let mut p = CdPolynomial::word(CdWord::one());
    for &l in w.letters().iter().rev() {
        p = match l {
            Letter::C => apply_linear(&p, theta1_multiply),
            Letter::D => apply_linear(&p, l2_theta),
        };
    }
    p
}

pub fn omega(w: &CdWord) -> QSym {
    theta_combination(&omega_theta(w))
}

/// `Ω_w` computed with quasi-shuffle products and `L` on quasisymmetric
/// functions directly.
pub fn omega_direct(w: &CdWord) -> QSym {
    let theta1 = theta(&CdWord::one());
    let mut f = theta1.clone();
    for &l in w.letters().iter().rev() {
        f = match l {
            Letter::C => theta1.multiply(&f),
            Letter::D => f.raise().raise(),
        };
    }
    f
}

/// `2^{|w|_c + 1}`.
pub fn omega_eigenvalue(w: &CdWord) -> Rational {
    pow2(w.c_count() + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenpair {
    pub word: CdWord,
    pub eigenvalue: Rational,
    pub vector: CdPolynomial,
}

/// Eigenvalues and `Θ`-coordinate eigenvectors of `ϑ` on `Π_{n+1}`.
pub fn spectrum(n: u32) -> Vec<Eigenpair> {
    cd_words(n)
        .into_iter()
        .map(|w| Eigenpair {
            eigenvalue: omega_eigenvalue(&w),
            vector: omega_theta(&w),
            word: w,
        })
        .collect()
}

fn omega_matrix(n: u32) -> Vec<Vec<Rational>> {
    let words = cd_words(n);
    let cols: Vec<Vec<Rational>> = words.iter().map(|w| omega_theta(w).dense(n)).collect();
    (0..words.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// Coordinates of a `Θ`-coordinate vector in the `Ω` basis.
pub fn omega_coordinates(n: u32, theta_coords: &CdPolynomial) -> Result<CdPolynomial> {
    let a = omega_matrix(n);
    let x = solve(&a, &theta_coords.dense(n)).map_err(|e| match e {
        SolveError::Singular => Error::Internal(format!("Ω basis degenerate in degree {n}")),
        SolveError::Inconsistent { .. } => {
            Error::Internal(format!("vector outside the span of Ω in degree {n}"))
        }
    })?;
    Ok(CdPolynomial::from_dense(n, &x))
}

/// The `Ω`-index of `F ∈ Π`.
pub fn omega_expansion(f: &QSym) -> Result<CdPolynomial> {
    let coords = theta_expansion(f)?;
    let mut out = CdPolynomial::zero();
    for d in f.degrees() {
        let n = d - 1;
        let part = CdPolynomial::from_terms(
            coords
                .terms()
                .filter(|(w, _)| w.degree() == n)
                .map(|(w, c)| (w.clone(), c.clone())),
        );
        out.add(&omega_coordinates(n, &part)?);
    }
    Ok(out)
}

/// `W^t x` computed two ways: by repeated multiplication and through the
/// eigen-decomposition `x = Σ α_w Ω_w`. Returns both.
pub fn walk_power(n: u32, start: &[Rational], t: u32) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let m = walk_matrix(n);
    let mut direct = start.to_vec();
    for _ in 0..t {
        direct = walk_step(&m, &direct)?;
    }
    let words = cd_words(n);
    let alpha = omega_coordinates(n, &CdPolynomial::from_dense(n, start))?;
    let top = pow2(n + 1);
    let mut spectral = vec![Rational::zero(); words.len()];
    for w in &words {
        let a = alpha.coefficient(w);
        if a.is_zero() {
            continue;
        }
        let lambda = omega_eigenvalue(w) / &top;
        let weight = a * num::pow(lambda, t as usize);
        for (s, v) in spectral.iter_mut().zip(omega_theta(w).dense(n)) {
            *s += &weight * v;
        }
    }
    Ok((direct, spectral))
}

/// Inequalities on cd-indices of rank `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub degree: u32,
    /// `Σ_w η_{u,w}[w] ≥ 0`, one per `u`.
    pub eta_rows: Vec<(CdWord, CdPolynomial)>,
    /// `h_T = Σ_{T, T̄ ∈ b[I^w]} [w] ≥ 0`, one per `T ⊆ [n]`.
    pub h_rows: Vec<(Subset, CdPolynomial)>,
}

pub fn gorenstein_cone(n: u32) -> Cone {
    let eta = eta_closedform(n);
    let eta_rows = (0..eta.words.len())
        .map(|i| (eta.words[i].clone(), eta.row_form(i)))
        .collect();
    let mut h: BTreeMap<Subset, CdPolynomial> = Subset::all(n)
        .expect("small degree")
        .map(|t| (t, CdPolynomial::zero()))
        .collect();
    for w in cd_words(n) {
        for t in balanced_subsets(&w) {
            h.get_mut(&t)
                .expect("every subset present")
                .add_term(w.clone(), Rational::one());
        }
    }
    Cone {
        degree: n,
        eta_rows,
        h_rows: h.into_iter().collect(),
    }
}

/// Rows of a [`Cone`] violated by a cd-index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeReport {
    pub eta_failures: Vec<CdWord>,
    pub h_failures: Vec<Subset>,
}

impl ConeReport {
    pub fn passes(&self) -> bool {
        self.eta_failures.is_empty() && self.h_failures.is_empty()
    }
}

fn evaluate(form: &CdPolynomial, psi: &CdPolynomial) -> Rational {
    form.terms().map(|(w, c)| c * psi.coefficient(w)).sum()
}

impl Cone {
    pub fn check(&self, psi: &CdPolynomial) -> ConeReport {
        ConeReport {
            eta_failures: self
                .eta_rows
                .iter()
                .filter(|(_, f)| evaluate(f, psi) < Rational::zero())
                .map(|(u, _)| u.clone())
                .collect(),
            h_failures: self
                .h_rows
                .iter()
                .filter(|(_, f)| evaluate(f, psi) < Rational::zero())
                .map(|(t, _)| *t)
                .collect(),
        }
    }

    /// Each `η` row is the sum of the `h` rows with `Λ(T) = S_u`, so the
    /// `h` inequalities imply the `η` ones.
    pub fn eta_rows_are_h_sums(&self) -> bool {
        self.eta_rows.iter().all(|(u, form)| {
            let target = u.peak_set().bits();
            let mut sum = CdPolynomial::zero();
            for (t, h) in &self.h_rows {
                if t.peaks().bits() == target {
                    sum.add(h);
                }
            }
            &sum == form
        })
    }
}

/// `ϑ(F(L_0̂)) = 2 F(Z)` for the coordinate arrangement in `R^k`: `L` the
/// boolean lattice and `Z` the `k`-cube.
pub fn zonotope_map_check(k: u32) -> Result<bool> {
    if !(1..=4).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "zonotope dimension {k} outside 1..=4"
        )));
    }
    let lattice = GradedPoset::boolean(k)?.adjoin_hat_below();
    let cube = GradedPoset::cube_faces(k)?;
    Ok(vartheta(&lattice.qsym()) == cube.qsym().scale(&int(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::fibonacci;
    use crate::linalg::rank;
    use crate::peak::cd_index;

    fn s(n: u32, e: &[u32]) -> Subset {
        Subset::new(n, e.iter().copied()).unwrap()
    }

    fn w(text: &str) -> CdWord {
        text.parse().unwrap()
    }

    fn poly(terms: &[(&str, i64)]) -> CdPolynomial {
        CdPolynomial::from_terms(terms.iter().map(|&(x, c)| (w(x), int(c))))
    }

    fn frac(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn vartheta_examples() {
        let t1 = theta(&CdWord::one());
        assert_eq!(vartheta(&t1), t1.scale(&int(2)));
        assert_eq!(
            vartheta(&QSym::fundamental(&s(2, &[1, 2]))),
            theta(&w("cc"))
        );
        assert_eq!(vartheta(&QSym::fundamental(&s(2, &[2]))), theta(&w("d")));
        assert_eq!(vartheta(&QSym::scalar(int(5))), QSym::scalar(int(5)));
    }

    #[test]
    fn vartheta_routes_agree() {
        for n in 0..=7 {
            for x in cd_words(n) {
                let direct = theta_expansion(&vartheta(&theta(&x))).unwrap();
                assert_eq!(direct, vartheta_theta(&x), "{x}");
            }
        }
    }

    #[test]
    fn eta_examples() {
        let e3 = eta_bruteforce(3);
        assert_eq!(e3.entries(), &[vec![4, 1, 1], vec![2, 2, 1], vec![2, 1, 2]]);
        for n in 0..=9 {
            let e = eta_closedform(n);
            assert_eq!(e, eta_bruteforce(n), "n = {n}");
            assert_eq!(e.entry(0, 0), n as u64 + 1);
            assert!(e.scaled_column_sums().iter().all(|c| *c == pow2(n + 1)));
            assert!((0..e.words().len()).all(|u| e.entry(u, 0) >= 1));
        }
    }

    #[test]
    fn walk() {
        assert_eq!(walk_matrix(1), vec![vec![int(1)]]);
        let m3 = walk_matrix(3);
        assert_eq!(
            m3.iter().map(|row| row[0].clone()).collect::<Vec<_>>(),
            vec![frac(1, 2), frac(1, 4), frac(1, 4)]
        );
        assert!(walk_step(&m3, &[int(1)]).is_err());
        let next = walk_step(&m3, &[int(1), int(0), int(0)]).unwrap();
        assert_eq!(next, vec![frac(1, 2), frac(1, 4), frac(1, 4)]);
    }

    #[test]
    fn walk_converges_to_peak_distribution() {
        for n in 1..=6 {
            let stationary = peak_distribution_enumerate(n + 1).unwrap().normalized();
            let m = walk_matrix(n);
            assert_eq!(walk_step(&m, &stationary).unwrap(), stationary);
            let dim = cd_words(n).len();
            for start in 0..dim {
                let mut x = vec![int(0); dim];
                x[start] = int(1);
                for t in [0, 1, 5] {
                    let (direct, spectral) = walk_power(n, &x, t).unwrap();
                    assert_eq!(direct, spectral, "n = {n}, t = {t}");
                }
                // only the Perron component survives in the limit
                let alpha = omega_coordinates(n, &CdPolynomial::from_dense(n, &x)).unwrap();
                let perron = omega_theta(&CdWord::c_power(n))
                    .scale(&alpha.coefficient(&CdWord::c_power(n)))
                    .dense(n);
                assert_eq!(perron, stationary);
            }
        }
    }

    #[test]
    fn peak_distributions() {
        let p3 = peak_distribution_enumerate(3).unwrap();
        assert_eq!(p3.theta_coordinates(), poly(&[("cc", 4), ("d", 2)]));
        let p4 = peak_distribution_enumerate(4).unwrap();
        assert_eq!(
            p4.theta_coordinates(),
            poly(&[("ccc", 8), ("cd", 8), ("dc", 8)])
        );
        for size in 1..=7 {
            let a = peak_distribution_enumerate(size).unwrap();
            assert_eq!(a, peak_distribution_theta(size).unwrap());
            assert_eq!(a.total(), (1..=size as u64).product::<u64>());
            assert!(a.counts().keys().all(Subset::is_left_sparse));
        }
        assert!(peak_distribution_enumerate(0).is_err());
        assert!(peak_distribution_enumerate(MAX_ENUMERATION_SIZE + 1).is_err());
    }

    #[test]
    fn theta1_products() {
        assert_eq!(
            theta1_multiply(&w("cd")),
            poly(&[("ccd", 2), ("cdc", 2), ("dd", 1)])
        );
        assert_eq!(theta1_multiply(&CdWord::one()), poly(&[("c", 2)]));
        assert_eq!(theta1_multiply(&w("c")), poly(&[("cc", 2), ("d", 1)]));
        let t1 = theta(&CdWord::one());
        for n in 0..=6 {
            for x in cd_words(n) {
                let direct = theta_expansion(&t1.multiply(&theta(&x))).unwrap();
                assert_eq!(direct, theta1_multiply(&x), "{x}");
            }
        }
    }

    #[test]
    fn l2_on_theta() {
        assert_eq!(l2_theta(&CdWord::one()), poly(&[("cc", 1), ("d", -1)]));
        assert_eq!(l2_theta(&w("c")), poly(&[("ccc", 1), ("cd", -1)]));
        for n in 0..=6 {
            for x in cd_words(n) {
                let l2 = theta(&x).raise().raise();
                assert_eq!(theta_expansion(&l2).unwrap(), l2_theta(&x), "{x}");
            }
        }
    }

    #[test]
    fn vartheta_commutes_with_l2_only() {
        for d in 1..=7 {
            for t in Subset::all(d - 1).unwrap() {
                let f = QSym::fundamental(&t);
                assert_eq!(vartheta(&f.raise().raise()), vartheta(&f).raise().raise());
            }
        }
        let m0 = QSym::monomial(&s(0, &[]));
        assert_eq!(
            vartheta(&m0).raise(),
            QSym::monomial(&s(1, &[])).scale(&int(2))
        );
        assert!(vartheta(&m0.raise()).is_zero());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_theta(&w("c")), poly(&[("c", 2)]));
        assert_eq!(omega_theta(&w("d")), poly(&[("cc", 1), ("d", -1)]));
        assert_eq!(
            omega_theta(&w("cd")),
            poly(&[("ccc", 2), ("cd", -1), ("dc", -1)])
        );
        assert_eq!(omega_theta(&w("dc")), poly(&[("ccc", 2), ("cd", -2)]));
        for x in ["cd", "dc"] {
            assert_eq!(omega_eigenvalue(&w(x)), int(4));
        }
        for n in 0..=6 {
            for x in cd_words(n) {
                let om = omega(&x);
                assert_eq!(om, omega_direct(&x));
                assert_eq!(vartheta(&om), om.scale(&omega_eigenvalue(&x)));
            }
        }
    }

    #[test]
    fn spectra() {
        let eig = |n| {
            spectrum(n)
                .into_iter()
                .map(|e| e.eigenvalue)
                .collect::<Vec<_>>()
        };
        assert_eq!(eig(0), vec![int(2)]);
        assert_eq!(eig(3), vec![int(16), int(4), int(4)]);
        for n in 0..=8 {
            let vectors: Vec<_> = spectrum(n).iter().map(|e| e.vector.dense(n)).collect();
            assert_eq!(rank(&vectors) as u64, fibonacci(n + 1));
        }
    }

    #[test]
    fn omega_index() {
        for x in cd_words(4) {
            assert_eq!(omega_expansion(&omega(&x)).unwrap(), CdPolynomial::word(x));
        }
        let t1 = theta(&CdWord::one());
        assert_eq!(omega_expansion(&t1.pow(2)).unwrap(), poly(&[("c", 1)]));
        let square = GradedPoset::polygon(4).unwrap().qsym();
        let expected = CdPolynomial::from_terms([(w("cc"), frac(1, 6)), (w("d"), frac(-1, 6))]);
        assert_eq!(omega_expansion(&square).unwrap(), expected);
        assert!(omega_expansion(&QSym::monomial(&s(1, &[1]))).is_err());
    }

    #[test]
    fn cones() {
        let cone = gorenstein_cone(3);
        let rows: Vec<_> = cone.eta_rows.iter().map(|(_, f)| f.clone()).collect();
        assert_eq!(
            rows,
            vec![
                poly(&[("ccc", 4), ("cd", 1), ("dc", 1)]),
                poly(&[("ccc", 2), ("cd", 2), ("dc", 1)]),
                poly(&[("ccc", 2), ("cd", 1), ("dc", 2)]),
            ]
        );
        let h = |e: &[u32]| {
            cone.h_rows
                .iter()
                .find(|(t, _)| *t == s(3, e))
                .unwrap()
                .1
                .clone()
        };
        assert_eq!(h(&[]), poly(&[("ccc", 1)]));
        assert_eq!(h(&[1, 2, 3]), poly(&[("ccc", 1)]));
        assert!(cone
            .h_rows
            .iter()
            .any(|(_, f)| *f == poly(&[("ccc", 1), ("cd", 1), ("dc", 1)])));
        let b4 = poly(&[("ccc", 1), ("cd", 2), ("dc", 2)]);
        assert!(cone.check(&b4).passes());
        let report = cone.check(&poly(&[("ccc", 1), ("cd", -3)]));
        assert!(!report.passes());
        assert!(!report.eta_failures.is_empty());
        for n in 0..=7 {
            assert!(gorenstein_cone(n).eta_rows_are_h_sums());
        }
    }

    #[test]
    fn cone_rows_match_vartheta_and_h_vector() {
        for k in 1..=5 {
            for p in [
                GradedPoset::boolean(k).unwrap(),
                GradedPoset::cube_faces(k - 1).unwrap(),
            ] {
                let f = p.qsym();
                let n = p.rank() - 1;
                let psi = cd_index(&f).unwrap();
                let cone = gorenstein_cone(n);
                let image = theta_expansion(&vartheta(&f)).unwrap();
                for (u, form) in &cone.eta_rows {
                    let v: Rational = form.terms().map(|(x, c)| c * psi.coefficient(x)).sum();
                    assert_eq!(v, image.coefficient(u));
                }
                let h = f.dense(n + 1, Basis::F);
                for (t, form) in &cone.h_rows {
                    let v: Rational = form.terms().map(|(x, c)| c * psi.coefficient(x)).sum();
                    assert_eq!(v, h[t.bits() as usize]);
                }
                assert!(cone.check(&psi).passes());
                assert!(image.all_nonnegative());
            }
        }
    }

    #[test]
    fn zonotopes() {
        for k in 1..=4 {
            assert!(zonotope_map_check(k).unwrap(), "k = {k}");
        }
        assert!(zonotope_map_check(0).is_err());
        assert!(zonotope_map_check(5).is_err());
    }
}
