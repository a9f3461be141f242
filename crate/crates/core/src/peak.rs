//! The peak algebra: the bases `Θ_w` and `Ψ_w`, generalized Dehn–Sommerville
//! relations, the Eulerian projection, and the cd-index of a quasisymmetric
//! function.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::combinat::{cd_words, CdWord, Composition, IntervalFamily, Letter, Subset};
use crate::error::{Error, Result};
use crate::linalg::{int, pow2, solve, SolveError};
use crate::poset::GradedPoset;
use crate::qsym::{Basis, Monomial, QSym};
use crate::Rational;

/// A noncommutative polynomial in `c` and `d` with rational coefficients.
///
/// Carries cd-indices, c-2d-indices, and coordinates in the `Θ` and `Ω`
/// bases (word `w` standing for `Θ_w` or `Ω_w`).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CdPolynomial {
    terms: BTreeMap<CdWord, Rational>,
}

impl CdPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CdWord, Rational)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn word(w: CdWord) -> Self {
        Self::from_terms([(w, Rational::one())])
    }

    pub fn add_term(&mut self, w: CdWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&mut self, other: &CdPolynomial) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn coefficient(&self, w: &CdWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CdWord, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    /// Replace every word by its reverse.
    pub fn reverse_words(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.reverse(), c.clone())))
    }

    /// `[[w]] = [w] / 2^{|w|_d}`.
    pub fn c2d(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), c / pow2(w.d_count()))),
        )
    }

    /// Dense coefficient vector over `cd_words(n)`.
    pub fn dense(&self, n: u32) -> Vec<Rational> {
        cd_words(n).iter().map(|w| self.coefficient(w)).collect()
    }

    pub fn from_dense(n: u32, v: &[Rational]) -> Self {
        Self::from_terms(cd_words(n).into_iter().zip(v.iter().cloned()))
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for CdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}·{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Θ_w = Σ_{S ∈ b[I^w]} 2^{|S|+1} M_S`, homogeneous of degree `deg w + 1`.
pub fn theta(w: &CdWord) -> QSym {
    let fam = IntervalFamily::of_word(w);
    QSym::from_terms(
        fam.blocking_family()
            .expect("cd-word degree is small enough to enumerate")
            .into_iter()
            .map(|s| (Monomial::of_subset(&s), pow2(s.len() + 1))),
    )
}

/// `Θ_S = Σ_{T : S ⊆ T ∪ (T+1)} 2^{|T|+1} M_T` for left-sparse `S ⊆ [n]`.
pub fn theta_of_left_sparse(s: &Subset) -> Result<QSym> {
    if !s.is_left_sparse() {
        return Err(Error::NotLeftSparse(s.to_string()));
    }
    let n = s.ambient();
    let mut terms = Vec::new();
    for t in Subset::all(n)? {
        let shifted = (t.bits() << 1) & ((1u64 << n) - 1);
        let cover = t.bits() | shifted;
        if s.bits() & !cover == 0 {
            terms.push((Monomial::of_subset(&t), pow2(t.len() + 1)));
        }
    }
    Ok(QSym::from_terms(terms))
}

/// Subsets `T ⊆ [n]` with both `T` and its complement in `b[I^w]`.
pub fn balanced_subsets(w: &CdWord) -> Vec<Subset> {
    let fam = IntervalFamily::of_word(w);
    Subset::all(w.degree())
        .expect("cd-word degree is small enough to enumerate")
        .filter(|t| fam.blocks_bits(t.bits()) && fam.blocks_bits(t.complement().bits()))
        .collect()
}

/// F-basis coefficients of `Θ_w`: `2^{|w|_d+1}` on each balanced subset.
pub fn theta_f_basis(w: &CdWord) -> BTreeMap<Subset, Rational> {
    let c = pow2(w.d_count() + 1);
    balanced_subsets(w)
        .into_iter()
        .map(|t| (t, c.clone()))
        .collect()
}

/// `Ψ_w = Σ K_S` over right-sparse `S ∈ b[I^w]` with `|S| = |w|_d`.
pub fn psi(w: &CdWord) -> QSym {
    let fam = IntervalFamily::of_word(w);
    let n = w.degree();
    let coeffs = Subset::all(n)
        .expect("cd-word degree is small enough to enumerate")
        .filter(|s| s.is_right_sparse() && s.len() == w.d_count() && fam.blocks_bits(s.bits()))
        .map(|s| (s, Rational::one()));
    QSym::from_basis(n, Basis::K, coeffs).expect("subsets share the word's ambient")
}

/// `Σ_w c_w Θ_w`.
pub fn theta_combination(coords: &CdPolynomial) -> QSym {
    let mut out = QSym::zero();
    for (w, c) in coords.terms() {
        out += &theta(w).scale(c);
    }
    out
}

/// A linear functional `Σ a_S f_S` on flag vectors of rank `n + 1` that
/// vanishes on the peak algebra. It is the image of `y_α χ_k y_β`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DsRelation {
    pub ambient: u32,
    pub coeffs: BTreeMap<Subset, i64>,
    pub left: Composition,
    pub k: u32,
    pub right: Composition,
}

impl DsRelation {
    /// `Σ a_S f_S`.
    pub fn evaluate(&self, f: impl Fn(&Subset) -> Rational) -> Rational {
        self.coeffs.iter().map(|(s, a)| f(s) * int(*a)).sum()
    }
}

impl fmt::Display for DsRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, a)) in self.coeffs.iter().enumerate() {
            let sign = if *a < 0 { '-' } else { '+' };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if *a < 0 {
                write!(f, "-")?;
            }
            let key: Vec<String> = s.iter().map(|i| i.to_string()).collect();
            if a.abs() == 1 {
                write!(f, "f_{{{}}}", key.join(","))?;
            } else {
                write!(f, "{}·f_{{{}}}", a.abs(), key.join(","))?;
            }
        }
        write!(f, " = 0  [y{}·χ_{}·y{}]", self.left, self.k, self.right)
    }
}

fn compositions(m: u32) -> Vec<Composition> {
    if m == 0 {
        return vec![Composition::empty()];
    }
    Subset::all(m - 1)
        .expect("small degree")
        .map(|s| Composition::of_subset(&s))
        .collect()
}

/// Spanning set for the degree-`degree` part of the Eulerian ideal, as
/// functionals on flag vectors. Zero functionals are dropped; redundant ones
/// are kept.
pub fn ds_relations(degree: u32) -> Vec<DsRelation> {
    let mut out = Vec::new();
    if degree < 2 {
        return out;
    }
    let n = degree - 1;
    for k in 2..=degree {
        for a in 0..=degree - k {
            let b = degree - k - a;
            for alpha in compositions(a) {
                for beta in compositions(b) {
                    let mut coeffs: BTreeMap<Subset, i64> = BTreeMap::new();
                    for i in 0..=k {
                        let mut parts = alpha.parts().to_vec();
                        parts.extend([i, k - i].into_iter().filter(|&p| p > 0));
                        parts.extend_from_slice(beta.parts());
                        let s = Composition::new(parts)
                            .and_then(|c| c.to_subset())
                            .expect("parts are positive");
                        debug_assert_eq!(s.ambient(), n);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        *coeffs.entry(s).or_insert(0) += sign;
                    }
                    coeffs.retain(|_, v| *v != 0);
                    if !coeffs.is_empty() {
                        out.push(DsRelation {
                            ambient: n,
                            coeffs,
                            left: alpha.clone(),
                            k,
                            right: beta.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Check every component against the Dehn–Sommerville functionals.
pub fn peak_membership(f: &QSym) -> Result<()> {
    for d in f.degrees() {
        let comp = f.component(d);
        for rel in ds_relations(d) {
            let v = rel.evaluate(|s| comp.coefficient(s));
            if !v.is_zero() {
                return Err(Error::NotInPeakAlgebra(rel));
            }
        }
    }
    Ok(())
}

pub fn is_in_peak_algebra(f: &QSym) -> bool {
    peak_membership(f).is_ok()
}

/// Right-sparse subsets of `[n]`.
pub fn right_sparse_subsets(n: u32) -> Vec<Subset> {
    Subset::all(n)
        .expect("small ambient")
        .filter(Subset::is_right_sparse)
        .collect()
}

/// The cd-index `ψ_F`, read off the sparse k-vector of each positive-degree
/// component. Defined for every quasisymmetric function; the degree-0
/// component is ignored.
pub fn cd_index(f: &QSym) -> Result<CdPolynomial> {
    let mut out = CdPolynomial::zero();
    for d in f.degrees().into_iter().filter(|&d| d > 0) {
        let n = d - 1;
        let k = f.dense(d, Basis::K);
        let sparse = right_sparse_subsets(n);
        let words = cd_words(n);
        for j in 0..=n / 2 {
            let rows: Vec<&Subset> = sparse.iter().filter(|s| s.len() == j).collect();
            let cols: Vec<&CdWord> = words.iter().filter(|w| w.d_count() == j).collect();
            if rows.len() != cols.len() {
                return Err(Error::Internal(format!(
                    "cd-index system in degree {d} block {j} is {}x{}",
                    rows.len(),
                    cols.len()
                )));
            }
            if rows.is_empty() {
                continue;
            }
            let peak_sets: Vec<Subset> = cols.iter().map(|w| w.peak_set()).collect();
            let mut a = Vec::with_capacity(rows.len());
            let mut b = Vec::with_capacity(rows.len());
            for s in &rows {
                let fam = IntervalFamily::of_right_sparse(s)?;
                a.push(
                    peak_sets
                        .iter()
                        .map(|sw| {
                            if fam.blocks_bits(sw.bits()) {
                                int(1)
                            } else {
                                int(0)
                            }
                        })
                        .collect(),
                );
                b.push(k[s.bits() as usize].clone());
            }
            let x = solve(&a, &b).map_err(|e| {
                Error::Internal(format!("cd-index system in degree {d} block {j}: {e:?}"))
            })?;
            for (w, c) in cols.into_iter().zip(x) {
                out.add_term(w.clone(), c);
            }
        }
    }
    Ok(out)
}

/// The c-2d-index `[[w]] = [w] / 2^{|w|_d}`.
pub fn c2d_index(f: &QSym) -> Result<CdPolynomial> {
    Ok(cd_index(f)?.c2d())
}

/// Coordinates of `F ∈ Π` in the `Θ` basis: `½[[w]]`.
pub fn theta_expansion(f: &QSym) -> Result<CdPolynomial> {
    if !f.counit().is_zero() {
        return Err(Error::DegreeZero);
    }
    peak_membership(f)?;
    Ok(c2d_index(f)?.scale(&Rational::new(1.into(), 2.into())))
}

/// The unique `π(F) ∈ Π` agreeing with `F` on right-sparse coefficients.
pub fn eulerian_projection(f: &QSym) -> Result<QSym> {
    let coords = c2d_index(f)?.scale(&Rational::new(1.into(), 2.into()));
    let mut out = theta_combination(&coords);
    out += &QSym::scalar(f.counit());
    Ok(out)
}

/// `s(Θ_w) = (-1)^{deg w + 1} Θ_{w*}`, as a one-term polynomial in the `Θ`
/// basis.
pub fn antipode_theta(w: &CdWord) -> CdPolynomial {
    let sign = if w.degree().is_multiple_of(2) { -1 } else { 1 };
    CdPolynomial::from_terms([(w.reverse(), int(sign))])
}

/// Expansion of a cd-word into ab-monomials of length `deg w`; monomials are
/// subsets, `i ∈ S` marking a `b` in position `i`.
fn ab_expansion(w: &CdWord) -> Vec<u64> {
    let mut out = vec![0u64];
    let mut pos = 0;
    for &l in w.letters() {
        match l {
            Letter::C => {
                let bit = 1u64 << pos;
                out = out.iter().flat_map(|&m| [m, m | bit]).collect();
                pos += 1;
            }
            Letter::D => {
                // ab puts the b second, ba puts it first
                let first = 1u64 << pos;
                let second = 1u64 << (pos + 1);
                out = out.iter().flat_map(|&m| [m | second, m | first]).collect();
                pos += 2;
            }
        }
    }
    out
}

/// Independent cd-index route: form the ab-index `Σ h_S u_S` and rewrite it
/// in `c = a + b`, `d = ab + ba` by an exact overdetermined solve.
pub fn ab_index_oracle(f: &QSym) -> Result<CdPolynomial> {
    let mut out = CdPolynomial::zero();
    for d in f.degrees().into_iter().filter(|&d| d > 0) {
        let n = d - 1;
        let h = f.dense(d, Basis::F);
        let words = cd_words(n);
        let mut a = vec![vec![Rational::zero(); words.len()]; h.len()];
        for (j, w) in words.iter().enumerate() {
            for m in ab_expansion(w) {
                a[m as usize][j] += int(1);
            }
        }
        match solve(&a, &h) {
            Ok(x) => {
                for (w, c) in words.into_iter().zip(x) {
                    out.add_term(w, c);
                }
            }
            Err(SolveError::Inconsistent { .. }) => {
                return Err(Error::NotCdExpressible(format!(
                    "degree-{d} ab-index has a nonzero residual"
                )))
            }
            Err(SolveError::Singular) => {
                return Err(Error::Internal(
                    "cd-words expand to dependent ab-polynomials".into(),
                ))
            }
        }
    }
    Ok(out)
}

/// The cd-index of an Eulerian poset.
pub fn poset_cd_index(p: &GradedPoset) -> Result<CdPolynomial> {
    p.check_eulerian()?;
    cd_index(&p.qsym())
}

/// `[w]_{P*} = [w*]_P`.
pub fn dual_cd_check(p: &GradedPoset) -> Result<bool> {
    let psi = poset_cd_index(p)?;
    let dual = poset_cd_index(&p.dual())?;
    Ok(dual == psi.reverse_words())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::fibonacci;
    use crate::linalg::rank;
    use proptest::prelude::*;

    fn s(n: u32, e: &[u32]) -> Subset {
        Subset::new(n, e.iter().copied()).unwrap()
    }

    fn w(text: &str) -> CdWord {
        text.parse().unwrap()
    }

    fn mono(n: u32, e: &[u32], c: i64) -> QSym {
        QSym::monomial(&s(n, e)).scale(&int(c))
    }

    fn poly(terms: &[(&str, i64)]) -> CdPolynomial {
        CdPolynomial::from_terms(terms.iter().map(|&(x, c)| (w(x), int(c))))
    }

    fn half() -> Rational {
        Rational::new(1.into(), 2.into())
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&CdWord::one()), mono(0, &[], 2));
        assert_eq!(theta(&w("c")), &mono(1, &[], 2) + &mono(1, &[1], 4));
        let f = &QSym::fundamental(&s(1, &[])) + &QSym::fundamental(&s(1, &[1]));
        assert_eq!(theta(&w("c")), f.scale(&int(2)));
        let d = &(&mono(2, &[1], 4) + &mono(2, &[2], 4)) + &mono(2, &[1, 2], 8);
        assert_eq!(theta(&w("d")), d);
    }

    #[test]
    fn theta_routes_agree() {
        for n in 0..=10 {
            for word in cd_words(n) {
                let via_f = QSym::from_basis(n, Basis::F, theta_f_basis(&word)).unwrap();
                assert_eq!(theta(&word), via_f, "{word}");
                let via_cover = theta_of_left_sparse(&word.peak_set()).unwrap();
                assert_eq!(theta(&word), via_cover, "{word}");
                assert_eq!(balanced_subsets(&word).len(), 1 << (n - word.d_count()));
            }
        }
        assert!(theta_of_left_sparse(&s(3, &[1])).is_err());
    }

    #[test]
    fn theta_f_examples() {
        let d = theta_f_basis(&w("d"));
        assert_eq!(
            d.keys().cloned().collect::<Vec<_>>(),
            vec![s(2, &[1]), s(2, &[2])]
        );
        assert!(d.values().all(|c| *c == int(4)));
    }

    #[test]
    fn theta_is_a_basis() {
        for n in 0..=8 {
            let rows: Vec<_> = cd_words(n)
                .iter()
                .map(|x| theta(x).dense(n + 1, Basis::M))
                .collect();
            assert_eq!(rank(&rows) as u64, fibonacci(n + 1));
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&w("ccc")), QSym::k_element(&s(3, &[])));
        assert_eq!(psi(&w("d")), QSym::k_element(&s(2, &[1])));
        for n in 0..=8 {
            for x in cd_words(n) {
                let lhs = psi(&x).bar().scale(&pow2(x.d_count() + 1));
                assert_eq!(lhs, theta(&x).bar(), "{x}");
            }
        }
    }

    #[test]
    fn relations_small_degrees() {
        let r2 = ds_relations(2);
        assert_eq!(r2.len(), 1);
        let expected: BTreeMap<Subset, i64> = [(s(1, &[]), 2), (s(1, &[1]), -1)].into();
        assert_eq!(r2[0].coeffs, expected);
        assert!(ds_relations(1).is_empty());
        assert!(ds_relations(0).is_empty());
    }

    #[test]
    fn relation_ranks() {
        for d in 1..=10u32 {
            let n = d - 1;
            let rows: Vec<Vec<Rational>> = ds_relations(d)
                .iter()
                .map(|r| {
                    let mut v = vec![int(0); 1 << n];
                    for (t, a) in &r.coeffs {
                        v[t.bits() as usize] = int(*a);
                    }
                    v
                })
                .collect();
            assert_eq!(rank(&rows) as u64, (1u64 << n) - fibonacci(d), "degree {d}");
        }
    }

    #[test]
    fn degree_three_relations() {
        // every relation is a combination of f_2 - f_1 and f_12 - 2 f_1
        for r in ds_relations(3) {
            let f = |t: &Subset| match t.bits() {
                0 => int(7),
                1 | 2 => int(5),
                _ => int(10),
            };
            assert!(r.evaluate(f).is_zero(), "{r}");
        }
    }

    #[test]
    fn membership() {
        assert!(is_in_peak_algebra(&GradedPoset::boolean(3).unwrap().qsym()));
        let witness = QSym::from_dense(3, Basis::M, [1, 3, 3, 6].map(int).to_vec());
        assert!(is_in_peak_algebra(&witness));
        match peak_membership(&mono(1, &[1], 1)) {
            Err(Error::NotInPeakAlgebra(rel)) => {
                assert!(!rel
                    .evaluate(|t| if t.bits() == 1 { int(1) } else { int(0) })
                    .is_zero());
                assert!(rel.to_string().contains("f_{1}"), "{rel}");
            }
            other => panic!("{other:?}"),
        }
        for x in cd_words(5) {
            assert!(is_in_peak_algebra(&theta(&x)));
        }
    }

    #[test]
    fn cd_index_low_degrees() {
        // degree 3: ψ = k_∅ c² + k_1 d; degree 4: k_∅ c³ + (k_2 - k_1) cd + k_1 dc
        for bits in 0..4u64 {
            let k = QSym::k_element(&Subset::from_bits(2, bits).unwrap());
            let psi = cd_index(&k).unwrap();
            let expected = match bits {
                0 => poly(&[("cc", 1)]),
                1 => poly(&[("d", 1)]),
                _ => CdPolynomial::zero(),
            };
            assert_eq!(psi, expected, "K_{bits}");
        }
        let cases = [
            (0, poly(&[("ccc", 1)])),
            (1, poly(&[("cd", -1), ("dc", 1)])),
            (2, poly(&[("cd", 1)])),
        ];
        for (bits, expected) in cases {
            let k = QSym::k_element(&Subset::from_bits(3, bits).unwrap());
            assert_eq!(cd_index(&k).unwrap(), expected);
        }
        let b4 = GradedPoset::boolean(4).unwrap().qsym();
        assert_eq!(
            cd_index(&b4).unwrap(),
            poly(&[("ccc", 1), ("cd", 2), ("dc", 2)])
        );
        assert_eq!(cd_index(&b4).unwrap().to_string(), "ccc + 2·cd + 2·dc");
    }

    #[test]
    fn cd_index_blocks_nonsingular() {
        // the solve touches every block regardless of the right-hand side
        for n in 0..=12 {
            let k = QSym::k_element(&Subset::empty(n).unwrap());
            assert_eq!(
                cd_index(&k).unwrap(),
                CdPolynomial::word(CdWord::c_power(n)),
                "degree {}",
                n + 1
            );
        }
    }

    #[test]
    fn c2d_examples() {
        let p = poly(&[("cc", 1), ("d", 2)]).c2d();
        assert_eq!(p, poly(&[("cc", 1), ("d", 1)]));
        let b4 = c2d_index(&GradedPoset::boolean(4).unwrap().qsym()).unwrap();
        assert_eq!(b4.coefficient(&w("cd")), int(1));
        assert_eq!(b4.coefficient(&w("dc")), int(1));
    }

    #[test]
    fn theta_expansion_examples() {
        let rank1 = GradedPoset::boolean(1).unwrap().qsym();
        assert_eq!(
            theta_expansion(&rank1).unwrap(),
            CdPolynomial::word(CdWord::one()).scale(&half())
        );
        for m in 3..=12 {
            let f = GradedPoset::polygon(m).unwrap().qsym();
            let expected = CdPolynomial::from_terms([
                (w("cc"), half()),
                (w("d"), Rational::new((m as i64 - 2).into(), 4.into())),
            ]);
            assert_eq!(theta_expansion(&f).unwrap(), expected);
        }
        let square = GradedPoset::polygon(4).unwrap().qsym().scale(&int(2));
        assert_eq!(
            theta_expansion(&square).unwrap(),
            poly(&[("cc", 1), ("d", 1)])
        );
        assert!(matches!(
            theta_expansion(&mono(1, &[1], 1)),
            Err(Error::NotInPeakAlgebra(_))
        ));
        assert!(matches!(
            theta_expansion(&QSym::one()),
            Err(Error::DegreeZero)
        ));
    }

    #[test]
    fn projection_examples() {
        let f = QSym::from_dense(3, Basis::M, [2, 3, 5, 7].map(int).to_vec());
        let expected = QSym::from_dense(3, Basis::M, [2, 3, 3, 6].map(int).to_vec());
        assert_eq!(eulerian_projection(&f).unwrap(), expected);
        assert!(eulerian_projection(&mono(1, &[1], 1)).unwrap().is_zero());
        let m1 = mono(0, &[], 1);
        assert!(!eulerian_projection(&m1.multiply(&m1)).unwrap().is_zero());
    }

    #[test]
    fn antipode_on_theta() {
        assert_eq!(
            antipode_theta(&CdWord::one()),
            CdPolynomial::word(CdWord::one()).scale(&int(-1))
        );
        assert_eq!(antipode_theta(&w("ccd")), poly(&[("dcc", -1)]));
        assert_eq!(antipode_theta(&w("d")), poly(&[("d", -1)]));
        for n in 0..=7 {
            for x in cd_words(n) {
                assert_eq!(
                    theta(&x).antipode(),
                    theta_combination(&antipode_theta(&x)),
                    "{x}"
                );
            }
        }
    }

    #[test]
    fn ab_oracle() {
        let b3 = GradedPoset::boolean(3).unwrap().qsym();
        assert_eq!(ab_index_oracle(&b3).unwrap(), poly(&[("cc", 1), ("d", 1)]));
        assert!(matches!(
            ab_index_oracle(&mono(1, &[1], 1)),
            Err(Error::NotCdExpressible(_))
        ));
        assert_eq!(ab_expansion(&w("d")), vec![0b10, 0b01]);
    }

    #[test]
    fn duality() {
        for k in 0..=5 {
            let p = GradedPoset::boolean(k).unwrap();
            assert!(dual_cd_check(&p).unwrap());
            let psi = poset_cd_index(&p).unwrap();
            assert_eq!(psi.reverse_words(), psi);
        }
        for d in 0..=4 {
            assert!(dual_cd_check(&GradedPoset::simplex_faces(d).unwrap()).unwrap());
            assert!(dual_cd_check(&GradedPoset::cube_faces(d).unwrap()).unwrap());
        }
        assert!(dual_cd_check(&GradedPoset::polygon(7).unwrap()).unwrap());
        assert!(dual_cd_check(&GradedPoset::chain(2).unwrap()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(CdPolynomial::zero().to_string(), "0");
        assert_eq!(poly(&[("cd", -1), ("dc", 1)]).to_string(), "-cd + dc");
        assert_eq!(
            CdPolynomial::word(CdWord::one()).scale(&half()).to_string(),
            "1/2"
        );
    }

    fn arb_qsym(degree: u32) -> impl Strategy<Value = QSym> {
        prop::collection::vec(-6i64..=6, 1usize << (degree - 1))
            .prop_map(move |v| QSym::from_dense(degree, Basis::M, v.into_iter().map(int).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn projection_is_idempotent(f in (1u32..=6).prop_flat_map(arb_qsym)) {
            let p = eulerian_projection(&f).unwrap();
            prop_assert!(is_in_peak_algebra(&p));
            prop_assert_eq!(eulerian_projection(&p).unwrap(), p.clone());
            prop_assert_eq!(p.bar(), f.bar());
            prop_assert_eq!(cd_index(&p).unwrap(), cd_index(&f).unwrap());
        }

        #[test]
        fn bar_representation(f in (1u32..=7).prop_flat_map(arb_qsym)) {
            let index = cd_index(&f).unwrap();
            let mut sum = QSym::zero();
            for (x, c) in index.terms() {
                sum += &psi(x).bar().scale(c);
            }
            prop_assert_eq!(sum, f.bar());
        }
    }
}
