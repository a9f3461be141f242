//! Toric `f`- and `g`-polynomials of graded posets, and `g` as a linear map
//! on quasisymmetric functions.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{One, Signed, Zero};

use crate::combinat::CdWord;
use crate::error::{Error, Result};
use crate::linalg::{int, pow2};
use crate::poset::GradedPoset;
use crate::qsym::{Monomial, QSym};
use crate::Rational;

/// A polynomial in `x` with rational coefficients, lowest power first.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolynomialX {
    coeffs: Vec<Rational>,
}

impl PolynomialX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `(x - 1)^k`.
    pub fn x_minus_one_pow(k: u32) -> Self {
        Self::from_ints(&[-1, 1]).pow(k)
    }

    /// Truncation turning `f = Σ κ_i x^i` of formal degree `n` into
    /// `κ_0 + Σ_{1 ≤ i ≤ ⌊n/2⌋} (κ_i - κ_{i-1}) x^i`.
    pub fn g_truncation(&self, n: u32) -> Self {
        let mut v = vec![self.coefficient(0)];
        for i in 1..=(n / 2) as usize {
            v.push(self.coefficient(i) - self.coefficient(i - 1));
        }
        Self::new(v)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &PolynomialX {
    type Output = PolynomialX;

    fn add(self, rhs: &PolynomialX) -> PolynomialX {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialX::new(
            (0..len)
                .map(|i| self.coefficient(i) + rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Sub for &PolynomialX {
    type Output = PolynomialX;

    fn sub(self, rhs: &PolynomialX) -> PolynomialX {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialX::new(
            (0..len)
                .map(|i| self.coefficient(i) - rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Mul for &PolynomialX {
    type Output = PolynomialX;

    fn mul(self, rhs: &PolynomialX) -> PolynomialX {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialX::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        PolynomialX::new(v)
    }
}

impl fmt::Display for PolynomialX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolynomialX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn binomial(n: u32, k: i64) -> i64 {
    if k < 0 || k > n as i64 {
        return 0;
    }
    let k = k.min(n as i64 - k) as u64;
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n as u128 - i as u128) / (i as u128 + 1);
    }
    r as i64
}

/// `p(n, k) = C(n, k) - C(n, k-1)`.
pub fn p_nk(n: u32, k: u32) -> i64 {
    binomial(n, k as i64) - binomial(n, k as i64 - 1)
}

/// `Q_{n+1} = Σ_{k ≤ ⌊n/2⌋} (-1)^k p(n, k) x^k`.
pub fn q_poly(size: u32) -> Result<PolynomialX> {
    if size == 0 {
        return Err(Error::DegreeZero);
    }
    let n = size - 1;
    Ok(PolynomialX::new(
        (0..=n / 2)
            .map(|k| int(if k % 2 == 0 { 1 } else { -1 } * p_nk(n, k)))
            .collect(),
    ))
}

/// `T_{n+1} = (-1)^{n/2} p(n, n/2) x^{n/2}` for even `n`.
pub fn t_poly(size: u32) -> Result<PolynomialX> {
    if size == 0 {
        return Err(Error::DegreeZero);
    }
    let n = size - 1;
    if n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "T_{size} needs an odd index"
        )));
    }
    let h = n / 2;
    let sign = if h.is_multiple_of(2) { 1 } else { -1 };
    Ok(PolynomialX::monomial(int(sign * p_nk(n, h)), h as usize))
}

/// Toric `f` and `g` of a graded poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricPolynomials {
    pub f: PolynomialX,
    pub g: PolynomialX,
}

/// `f(P) = Σ_{y < 1̂} g([0̂, y]) (x-1)^{n - r(y)}`, with `g` obtained from `f`
/// by [`PolynomialX::g_truncation`]. Lower intervals are memoized per call.
pub fn fg_poly_poset(p: &GradedPoset) -> ToricPolynomials {
    let mut g: Vec<Option<PolynomialX>> = vec![None; p.len()];
    let mut top = None;
    for r in 0..=p.rank() {
        for &y in p.stratum(r) {
            let (fy, gy) = if r == 0 {
                (PolynomialX::one(), PolynomialX::one())
            } else {
                let mut f = PolynomialX::zero();
                for z in p.strictly_below(y) {
                    let gz = g[z].as_ref().expect("lower ranks done first");
                    f = &f + &(gz * &PolynomialX::x_minus_one_pow(r - 1 - p.rank_of(z)));
                }
                let gy = f.g_truncation(r - 1);
                (f, gy)
            };
            if y == p.top() {
                top = Some(ToricPolynomials {
                    f: fy,
                    g: gy.clone(),
                });
            }
            g[y] = Some(gy);
        }
    }
    top.expect("poset has a top element")
}

/// `(h_0, …, h_n) = (κ_n, …, κ_0)` for `f(P) = Σ κ_i x^i`, rank `n + 1`.
/// A rank-0 poset gives `[1]`.
pub fn toric_h(p: &GradedPoset) -> Vec<Rational> {
    let f = fg_poly_poset(p).f;
    if p.rank() == 0 {
        return vec![Rational::one()];
    }
    let n = (p.rank() - 1) as usize;
    (0..=n).rev().map(|i| f.coefficient(i)).collect()
}

/// `f'_S = f_{S ∪ {k}}` for `S ⊆ [k-1]`: the degree-`k` element collecting
/// chains whose top proper rank is `k`.
pub fn truncate_rank(f: &QSym, k: u32) -> Result<QSym> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = f.degrees().first().copied().unwrap_or(0);
    if k == 0 || k + 1 > d {
        return Err(Error::InvalidParameter(format!(
            "rank {k} outside 1..={} for degree {d}",
            d.saturating_sub(1)
        )));
    }
    let top = 1u64 << (k - 1);
    let below = top - 1;
    Ok(QSym::from_terms(f.terms().filter_map(|(m, c)| {
        let bits = m.bits();
        (bits & !below == top).then(|| (Monomial::from_raw(k, bits & below), c.clone()))
    })))
}

/// `g` extended linearly to all quasisymmetric functions.
pub fn g_on_qsym(f: &QSym) -> PolynomialX {
    let mut out = PolynomialX::zero();
    for d in f.degrees() {
        if d == 0 {
            out = &out + &PolynomialX::constant(f.counit());
            continue;
        }
        let comp = f.component(d);
        let n = d - 1;
        let f_empty = comp.monomial_coefficient(&Monomial::from_raw(d, 0));
        let mut fx = PolynomialX::x_minus_one_pow(n).scale(&f_empty);
        for k in 1..=n {
            let t = truncate_rank(&comp, k).expect("k within range");
            if t.is_zero() {
                continue;
            }
            fx = &fx + &(&g_on_qsym(&t) * &PolynomialX::x_minus_one_pow(n - k));
        }
        out = &out + &fx.g_truncation(n);
    }
    out
}

/// For `w = c^{n_1} d ⋯ c^{n_k} d c^m`: zero unless every `n_j` is even, and
/// otherwise `2^{k+1} x^k Q_{m+1} ∏ T_{n_j+1}`.
pub fn g_theta(w: &CdWord) -> PolynomialX {
    if !w.is_even() {
        return PolynomialX::zero();
    }
    let (runs, m) = w.runs();
    let k = runs.len();
    let mut out = PolynomialX::monomial(pow2(k as u32 + 1), k);
    out = &out * &q_poly(m + 1).expect("positive size");
    for r in runs {
        out = &out * &t_poly(r + 1).expect("even run");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{cd_words, Subset};
    use crate::peak::{theta, theta_expansion};

    fn p(c: &[i64]) -> PolynomialX {
        PolynomialX::from_ints(c)
    }

    fn w(text: &str) -> CdWord {
        text.parse().unwrap()
    }

    #[test]
    fn q_and_t() {
        assert_eq!(q_poly(1).unwrap(), p(&[1]));
        assert_eq!(t_poly(1).unwrap(), p(&[1]));
        assert_eq!(q_poly(3).unwrap(), p(&[1, -1]));
        assert_eq!(t_poly(3).unwrap(), p(&[0, -1]));
        assert_eq!(t_poly(5).unwrap(), p(&[0, 0, 2]));
        assert!(t_poly(2).is_err());
        assert!(q_poly(0).is_err());
        assert_eq!(p_nk(2, 0), 1);
        assert_eq!(p_nk(2, 1), 1);
        assert_eq!(p_nk(4, 2), 2);
    }

    #[test]
    fn polynomial_arithmetic() {
        assert_eq!(PolynomialX::x_minus_one_pow(2), p(&[1, -2, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), PolynomialX::zero());
        assert_eq!(PolynomialX::zero().degree(), None);
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "1 - 2x + x^3");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(PolynomialX::zero().to_string(), "0");
        assert_eq!(p(&[1, 3, 3, 1]).g_truncation(3), p(&[1, 2]));
    }

    #[test]
    fn poset_route() {
        let point = GradedPoset::boolean(0).unwrap();
        let fg = fg_poly_poset(&point);
        assert_eq!((fg.f, fg.g), (p(&[1]), p(&[1])));
        for m in 3..=12 {
            let fg = fg_poly_poset(&GradedPoset::polygon(m).unwrap());
            assert_eq!(fg.f, p(&[1, m as i64 - 2, 1]));
            assert_eq!(fg.g, p(&[1, m as i64 - 3]));
        }
        for k in 1..=5 {
            assert_eq!(fg_poly_poset(&GradedPoset::boolean(k).unwrap()).g, p(&[1]));
        }
        let cube = GradedPoset::cube_faces(3).unwrap();
        // the 3-cube has toric h = (1, 5, 5, 1)
        assert_eq!(toric_h(&cube), [1, 5, 5, 1].map(int).to_vec());
        assert_eq!(toric_h(&point), vec![int(1)]);
    }

    #[test]
    fn truncation() {
        let b3 = GradedPoset::boolean(3).unwrap().qsym();
        let t = truncate_rank(&b3, 1).unwrap();
        assert_eq!(t, QSym::monomial(&Subset::empty(0).unwrap()).scale(&int(3)));
        let poly5 = GradedPoset::polygon(5).unwrap().qsym();
        let t = truncate_rank(&poly5, 2).unwrap();
        assert_eq!(t.coefficient(&Subset::empty(1).unwrap()), int(5));
        assert_eq!(t.coefficient(&Subset::new(1, [1]).unwrap()), int(10));
        let m = QSym::monomial(&Subset::empty(4).unwrap());
        for k in 1..=4 {
            assert!(truncate_rank(&m, k).unwrap().is_zero());
        }
        assert!(truncate_rank(&m, 0).is_err());
        assert!(truncate_rank(&m, 5).is_err());
        assert!(truncate_rank(&(&m + &QSym::one()), 1).is_err());
    }

    #[test]
    fn linear_extension_matches_posets() {
        let mut posets = vec![
            GradedPoset::chain(1).unwrap(),
            GradedPoset::chain(3).unwrap(),
        ];
        for k in 0..=5 {
            posets.push(GradedPoset::boolean(k).unwrap());
        }
        for d in 0..=4 {
            posets.push(GradedPoset::cube_faces(d).unwrap());
            posets.push(GradedPoset::cube_faces(d).unwrap().dual());
        }
        for m in 3..=8 {
            posets.push(GradedPoset::polygon(m).unwrap());
        }
        posets.push(
            GradedPoset::polygon(4)
                .unwrap()
                .product(&GradedPoset::chain(2).unwrap())
                .unwrap(),
        );
        for q in &posets {
            let by_poset = fg_poly_poset(q).g;
            assert_eq!(g_on_qsym(&q.qsym()), by_poset, "{q:?}");
            if q.is_eulerian() && q.rank() > 0 {
                assert!(by_poset.all_nonnegative(), "{q:?}");
                let mut by_theta = PolynomialX::zero();
                for (x, c) in theta_expansion(&q.qsym()).unwrap().terms() {
                    by_theta = &by_theta + &g_theta(x).scale(c);
                }
                assert_eq!(by_theta, by_poset);
            }
        }
    }

    #[test]
    fn g_on_theta() {
        assert_eq!(g_theta(&w("cc")), p(&[2, -2]));
        assert_eq!(g_theta(&w("d")), p(&[0, 4]));
        assert_eq!(g_theta(&w("dc")), p(&[0, 4]));
        assert_eq!(g_theta(&w("cd")), PolynomialX::zero());
        assert_eq!(g_theta(&CdWord::one()), p(&[2]));
        assert_eq!(
            g_on_qsym(&QSym::monomial(&Subset::empty(0).unwrap())),
            p(&[1])
        );
        assert_eq!(g_on_qsym(&theta(&CdWord::one())), p(&[2]));
        assert_eq!(g_on_qsym(&QSym::scalar(int(3))), p(&[3]));
        assert!(g_on_qsym(&QSym::zero()).is_zero());
        for m in 1..=8 {
            assert_eq!(
                g_theta(&CdWord::c_power(m)),
                q_poly(m + 1).unwrap().scale(&int(2))
            );
        }
        for n in 0..=7 {
            for x in cd_words(n) {
                assert_eq!(g_on_qsym(&theta(&x)), g_theta(&x), "{x}");
            }
        }
    }

    #[test]
    fn multiplicative() {
        let pool = [
            GradedPoset::chain(1).unwrap(),
            GradedPoset::polygon(3).unwrap(),
            GradedPoset::polygon(4).unwrap(),
            GradedPoset::polygon(5).unwrap(),
            GradedPoset::boolean(2).unwrap(),
            GradedPoset::boolean(3).unwrap(),
        ];
        for a in &pool {
            for b in &pool {
                let ga = g_on_qsym(&a.qsym());
                let gb = g_on_qsym(&b.qsym());
                assert_eq!(fg_poly_poset(&a.product(b).unwrap()).g, &ga * &gb);
                assert_eq!(g_on_qsym(&a.qsym().multiply(&b.qsym())), &ga * &gb);
            }
        }
    }
}
