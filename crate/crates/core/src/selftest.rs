//! The acceptance checks as a library, so the command line and the test
//! suite run the same code.
//!
//! Each criterion returns `Err` with a human-readable counterexample on the
//! first failure.

use std::time::{Duration, Instant};

use num::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::combinat::{cd_words, fibonacci, CdWord, Composition, Subset};
use crate::linalg::{int, pow2, rank};
use crate::peak::{
    ab_index_oracle, antipode_theta, c2d_index, cd_index, eulerian_projection, is_in_peak_algebra,
    peak_membership, theta, theta_combination, theta_expansion, CdPolynomial,
};
use crate::poset::GradedPoset;
use crate::qsym::{Basis, FlagVector, QSym};
use crate::stembridge::{
    eta_bruteforce, eta_closedform, omega, omega_direct, omega_eigenvalue, omega_theta,
    peak_distribution_enumerate, peak_distribution_theta, spectrum, vartheta, vartheta_theta,
    zonotope_map_check,
};
use crate::toricg::{fg_poly_poset, g_on_qsym, g_theta, PolynomialX};
use crate::{oracle, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    Quick,
    Full,
}

impl Depth {
    /// Cap a bound at 6 in quick mode.
    fn cap(self, full: u32) -> u32 {
        match self {
            Depth::Quick => full.min(6),
            Depth::Full => full,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    run: fn(Depth) -> Result<(), String>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    pub elapsed: Duration,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.elapsed <= self.limit
    }
}

impl Criterion {
    pub fn run(&self, depth: Depth) -> Outcome {
        let start = Instant::now();
        let result = (self.run)(depth);
        Outcome {
            id: self.id,
            name: self.name,
            limit: self.limit,
            elapsed: start.elapsed(),
            failure: result.err(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "dimension counts",
            limit: Duration::from_secs(10),
            run: dimensions,
        },
        Criterion {
            id: 2,
            name: "eta consistency",
            limit: Duration::from_secs(30),
            run: eta,
        },
        Criterion {
            id: 3,
            name: "cd-index and theta expansion",
            limit: Duration::from_secs(60),
            run: cd_theta,
        },
        Criterion {
            id: 4,
            name: "spectral suite",
            limit: Duration::from_secs(120),
            run: spectral,
        },
        Criterion {
            id: 5,
            name: "Hopf suite",
            limit: Duration::from_secs(60),
            run: hopf,
        },
        Criterion {
            id: 6,
            name: "toric g suite",
            limit: Duration::from_secs(60),
            run: toric_g,
        },
        Criterion {
            id: 7,
            name: "zonotope identity",
            limit: Duration::from_secs(30),
            run: zonotope,
        },
        Criterion {
            id: 8,
            name: "membership and projection",
            limit: Duration::from_secs(10),
            run: membership,
        },
    ]
}

pub fn run_all(depth: Depth) -> Vec<Outcome> {
    criteria().iter().map(|c| c.run(depth)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(s: &str) -> CdWord {
    s.parse().expect("literal word")
}

fn poly(terms: &[(&str, i64)]) -> CdPolynomial {
    CdPolynomial::from_terms(terms.iter().map(|&(w, c)| (word(w), int(c))))
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn dimensions(depth: Depth) -> Result<(), String> {
    for n in 0..=20 {
        let count = cd_words(n).len() as u64;
        ensure(count == fibonacci(n + 1), || {
            format!(
                "{count} cd-words of degree {n}, expected {}",
                fibonacci(n + 1)
            )
        })?;
    }
    for n in 0..=depth.cap(10) {
        let rows: Vec<Vec<Rational>> = cd_words(n)
            .iter()
            .map(|w| theta(w).dense(n + 1, Basis::M))
            .collect();
        let r = rank(&rows);
        ensure(r == rows.len(), || {
            format!("Θ_w of degree {n} span only {r} of {}", rows.len())
        })?;
    }
    Ok(())
}

fn eta(depth: Depth) -> Result<(), String> {
    for n in 0..=depth.cap(9) {
        let brute = eta_bruteforce(n);
        let closed = eta_closedform(n);
        ensure(brute == closed, || {
            format!("η brute force and closed form differ at n = {n}")
        })?;
        let top = pow2(n + 1);
        for (w, s) in closed.words().iter().zip(closed.scaled_column_sums()) {
            ensure(s == top, || {
                format!("scaled column {w} of η_{n} sums to {s}")
            })?;
        }
        let last = closed.words().len();
        for u in 0..last {
            ensure(closed.entry(u, 0) >= 1, || {
                format!("η_{n} has a zero in the c^n column")
            })?;
        }
    }
    let e3 = eta_closedform(3);
    let expected = vec![vec![4, 1, 1], vec![2, 2, 1], vec![2, 1, 2]];
    ensure(e3.entries() == expected.as_slice(), || {
        format!("η_3 = {:?}", e3.entries())
    })?;
    let forms = [
        poly(&[("ccc", 4), ("cd", 1), ("dc", 1)]),
        poly(&[("ccc", 2), ("cd", 2), ("dc", 1)]),
        poly(&[("ccc", 2), ("cd", 1), ("dc", 2)]),
    ];
    for (i, f) in forms.iter().enumerate() {
        ensure(&e3.row_form(i) == f, || {
            format!("rank-4 cone row {i} is {}", e3.row_form(i))
        })?;
    }
    Ok(())
}

/// The Eulerian posets exercised by the cd-index checks.
pub fn eulerian_instances(depth: Depth) -> Vec<(String, GradedPoset)> {
    let mut out = Vec::new();
    let mut push = |name: String, p: GradedPoset| out.push((name, p));
    for k in 0..=depth.cap(6) {
        push(format!("boolean:{k}"), GradedPoset::boolean(k).unwrap());
    }
    let max_m = if depth == Depth::Quick { 8 } else { 12 };
    for m in 3..=max_m {
        push(format!("polygon:{m}"), GradedPoset::polygon(m).unwrap());
    }
    for d in 0..=4 {
        push(
            format!("simplex:{d}"),
            GradedPoset::simplex_faces(d).unwrap(),
        );
        push(format!("cube:{d}"), GradedPoset::cube_faces(d).unwrap());
    }
    let small: Vec<(String, GradedPoset)> = vec![
        ("boolean:1".into(), GradedPoset::boolean(1).unwrap()),
        ("boolean:2".into(), GradedPoset::boolean(2).unwrap()),
        ("polygon:3".into(), GradedPoset::polygon(3).unwrap()),
        ("polygon:5".into(), GradedPoset::polygon(5).unwrap()),
        ("cube:2".into(), GradedPoset::cube_faces(2).unwrap()),
        ("cube:3".into(), GradedPoset::cube_faces(3).unwrap()),
    ];
    for (i, (a, p)) in small.iter().enumerate() {
        for (b, q) in &small[i..] {
            if p.rank() + q.rank() <= 6 {
                push(format!("{a} x {b}"), p.product(q).unwrap());
            }
        }
    }
    push(
        "dual cube:3".into(),
        GradedPoset::cube_faces(3).unwrap().dual(),
    );
    out
}

fn cd_theta(depth: Depth) -> Result<(), String> {
    for (name, p) in eulerian_instances(depth) {
        if !p.is_eulerian() {
            return Err(format!("{name} is not Eulerian"));
        }
        let f = p.qsym();
        let psi = cd_index(&f).map_err(|e| format!("{name}: {e}"))?;
        let ab = ab_index_oracle(&f).map_err(|e| format!("{name}: {e}"))?;
        ensure(psi == ab, || {
            format!("{name}: ksw route {psi} vs ab route {ab}")
        })?;
        if p.rank() == 0 {
            continue;
        }
        let coords = c2d_index(&f)
            .map_err(|e| format!("{name}: {e}"))?
            .scale(&half());
        let rebuilt = theta_combination(&coords);
        ensure(rebuilt == f, || {
            format!("{name}: Σ ½[[w]]Θ_w = {rebuilt}, F = {f}")
        })?;
        let direct = theta_expansion(&f).map_err(|e| format!("{name}: {e}"))?;
        ensure(direct == coords, || {
            format!("{name}: theta_expansion disagrees")
        })?;
    }
    let b4 = cd_index(&GradedPoset::boolean(4).unwrap().qsym()).unwrap();
    ensure(b4 == poly(&[("ccc", 1), ("cd", 2), ("dc", 2)]), || {
        format!("ψ(B_4) = {b4}")
    })?;
    for m in 3..=12 {
        let psi = cd_index(&GradedPoset::polygon(m).unwrap().qsym()).unwrap();
        let expected = poly(&[("cc", 1), ("d", m as i64 - 2)]);
        ensure(psi == expected, || format!("ψ(polygon {m}) = {psi}"))?;
    }
    Ok(())
}

fn spectral(depth: Depth) -> Result<(), String> {
    for n in 0..=depth.cap(8) {
        let words = cd_words(n);
        let mut vectors = Vec::new();
        for w in &words {
            let om = omega(w);
            ensure(om == omega_direct(w), || {
                format!("Ω_{w}: Θ-coordinate and direct routes differ")
            })?;
            let lambda = omega_eigenvalue(w);
            let image = vartheta(&om);
            ensure(image == om.scale(&lambda), || {
                format!("ϑ(Ω_{w}) ≠ {lambda}·Ω_{w}")
            })?;
            let coords = omega_theta(w);
            let mut via_eta = CdPolynomial::zero();
            for (v, c) in coords.terms() {
                via_eta.add(&vartheta_theta(v).scale(c));
            }
            ensure(via_eta == coords.scale(&lambda), || {
                format!("η route fails for Ω_{w}")
            })?;
            if *w != CdWord::c_power(n) {
                let s = coords.coefficient_sum();
                ensure(s.is_zero(), || format!("Θ-coordinates of Ω_{w} sum to {s}"))?;
            }
            vectors.push(coords.dense(n));
        }
        let r = rank(&vectors);
        ensure(r == words.len(), || {
            format!("Ω basis of degree {n} has rank {r}")
        })?;
        let mut eigen: Vec<Rational> = spectrum(n).into_iter().map(|e| e.eigenvalue).collect();
        eigen.sort();
        let mut expected = Vec::new();
        for k in 0..=n / 2 {
            let mult = words.iter().filter(|w| w.d_count() == k).count();
            expected.extend(std::iter::repeat_n(pow2(n + 1 - 2 * k), mult));
        }
        expected.sort();
        ensure(eigen == expected, || {
            format!("spectrum in degree {n}: {eigen:?}")
        })?;
    }
    for size in 1..=depth.cap(8) {
        let by_perm = peak_distribution_enumerate(size).map_err(|e| e.to_string())?;
        let by_theta = peak_distribution_theta(size).map_err(|e| e.to_string())?;
        ensure(by_perm == by_theta, || {
            format!("peak distributions of S_{size} differ")
        })?;
        let factorial: u64 = (1..=size as u64).product();
        ensure(by_perm.total() == factorial, || {
            format!("S_{size} total {}", by_perm.total())
        })?;
        let p = theta_combination(&by_perm.theta_coordinates());
        ensure(vartheta(&p) == p.scale(&pow2(size)), || {
            format!("ϑ(p_{size}) ≠ 2^{size} p_{size}")
        })?;
    }
    Ok(())
}

fn hopf(depth: Depth) -> Result<(), String> {
    let max = depth.cap(5);
    let thetas: Vec<(CdWord, QSym)> = (0..=max)
        .flat_map(cd_words)
        .map(|w| {
            let t = theta(&w);
            (w, t)
        })
        .collect();
    for (w, t) in &thetas {
        let delta = t.coproduct();
        ensure(delta.coproduct_left() == delta.coproduct_right(), || {
            format!("coassociativity fails on Θ_{w}")
        })?;
        let axiom = delta.contract(QSym::antipode, Clone::clone);
        ensure(axiom.is_zero(), || format!("m(s⊗id)Δ(Θ_{w}) = {axiom}"))?;
        let s = t.antipode();
        let closed = theta_combination(&antipode_theta(w));
        ensure(s == closed, || {
            format!("s(Θ_{w}) disagrees with the reversal rule")
        })?;
        ensure(s == oracle::recursive_antipode(t), || {
            format!("s(Θ_{w}) disagrees with the recursive antipode")
        })?;
    }
    for (u, a) in &thetas {
        for (w, b) in &thetas {
            if u.degree() + w.degree() + 2 > max + 1 {
                continue;
            }
            let lhs = a.multiply(b).coproduct();
            let rhs = a.coproduct().multiply(&b.coproduct());
            ensure(lhs == rhs, || format!("Δ(Θ_{u}Θ_{w}) ≠ Δ(Θ_{u})Δ(Θ_{w})"))?;
        }
    }
    let all_compositions = |d: u32| -> Vec<Composition> {
        if d == 0 {
            return vec![Composition::empty()];
        }
        Subset::all(d - 1)
            .unwrap()
            .map(|s| Composition::of_subset(&s))
            .collect()
    };
    let total = depth.cap(6);
    for da in 0..=total {
        for db in 0..=total - da {
            for alpha in all_compositions(da) {
                for beta in all_compositions(db) {
                    let a = QSym::monomial_composition(&alpha).unwrap();
                    let b = QSym::monomial_composition(&beta).unwrap();
                    let fast = a.multiply(&b);
                    let slow = oracle::power_series_product(&a, &b);
                    ensure(fast == slow, || {
                        format!("M{alpha}·M{beta}: {fast} vs {slow}")
                    })?;
                }
            }
        }
    }
    let fund: Vec<QSym> = (1..=depth.cap(5))
        .flat_map(|d| {
            Subset::all(d - 1)
                .unwrap()
                .map(|s| QSym::fundamental(&s))
                .collect::<Vec<_>>()
        })
        .collect();
    for a in &fund {
        for b in &fund {
            let d = a.degrees()[0] + b.degrees()[0];
            if d > depth.cap(5) {
                continue;
            }
            let lhs = vartheta(&a.multiply(b));
            let rhs = vartheta(a).multiply(&vartheta(b));
            ensure(lhs == rhs, || format!("ϑ not multiplicative on {a} · {b}"))?;
        }
    }
    Ok(())
}

fn gpoly(coeffs: &[i64]) -> PolynomialX {
    PolynomialX::from_ints(coeffs)
}

fn toric_g(depth: Depth) -> Result<(), String> {
    for m in 3..=12 {
        let p = GradedPoset::polygon(m).unwrap();
        let expected = gpoly(&[1, m as i64 - 3]);
        let by_poset = fg_poly_poset(&p).g;
        let by_linear = g_on_qsym(&p.qsym());
        let coords = theta_expansion(&p.qsym()).map_err(|e| e.to_string())?;
        let mut by_theta = PolynomialX::zero();
        for (w, c) in coords.terms() {
            by_theta = &by_theta + &g_theta(w).scale(c);
        }
        ensure(by_poset == expected, || {
            format!("polygon {m}: poset route {by_poset}")
        })?;
        ensure(by_linear == expected, || {
            format!("polygon {m}: linear route {by_linear}")
        })?;
        ensure(by_theta == expected, || {
            format!("polygon {m}: Θ route {by_theta}")
        })?;
    }
    let factors: Vec<(String, GradedPoset)> = vec![
        ("chain:1".into(), GradedPoset::chain(1).unwrap()),
        ("chain:2".into(), GradedPoset::chain(2).unwrap()),
        ("polygon:3".into(), GradedPoset::polygon(3).unwrap()),
        ("polygon:4".into(), GradedPoset::polygon(4).unwrap()),
        ("polygon:5".into(), GradedPoset::polygon(5).unwrap()),
        ("boolean:2".into(), GradedPoset::boolean(2).unwrap()),
        ("boolean:3".into(), GradedPoset::boolean(3).unwrap()),
        ("cube:2".into(), GradedPoset::cube_faces(2).unwrap()),
    ];
    let max_rank = depth.cap(6);
    for (i, (a, p)) in factors.iter().enumerate() {
        for (b, q) in &factors[i..] {
            if p.rank() + q.rank() > max_rank {
                continue;
            }
            let prod = p.product(q).unwrap();
            let gp = g_on_qsym(&p.qsym());
            let gq = g_on_qsym(&q.qsym());
            let g_prod = g_on_qsym(&prod.qsym());
            ensure(g_prod == &gp * &gq, || {
                format!("g({a} x {b}) = {g_prod}, g·g = {}", &gp * &gq)
            })?;
            let by_poset = fg_poly_poset(&prod).g;
            ensure(by_poset == g_prod, || {
                format!("g({a} x {b}): poset route {by_poset}")
            })?;
            let alg = g_on_qsym(&p.qsym().multiply(&q.qsym()));
            ensure(alg == &gp * &gq, || {
                format!("g not multiplicative on F({a})·F({b})")
            })?;
        }
    }
    let checks = [
        ("cd", PolynomialX::zero()),
        ("cc", gpoly(&[2, -2])),
        ("d", gpoly(&[0, 4])),
        ("dc", gpoly(&[0, 4])),
    ];
    for (w, expected) in checks {
        let by_formula = g_theta(&word(w));
        let by_linear = g_on_qsym(&theta(&word(w)));
        ensure(by_formula == expected, || {
            format!("g(Θ_{w}) = {by_formula}")
        })?;
        ensure(by_linear == expected, || {
            format!("linear g(Θ_{w}) = {by_linear}")
        })?;
    }
    let g1_formula = g_theta(&CdWord::one());
    let g1_linear = g_on_qsym(&theta(&CdWord::one()));
    ensure(
        g1_formula == gpoly(&[2]) && g1_linear == gpoly(&[2]),
        || format!("g(Θ_1): closed form {g1_formula}, linear {g1_linear}"),
    )?;
    for n in 0..=depth.cap(8) {
        for w in cd_words(n) {
            let by_formula = g_theta(&w);
            if n <= depth.cap(7) {
                let by_linear = g_on_qsym(&theta(&w));
                ensure(by_formula == by_linear, || {
                    format!("g(Θ_{w}): {by_formula} vs {by_linear}")
                })?;
            }
            ensure(by_formula.is_zero() != w.is_even(), || {
                format!("g(Θ_{w}) vanishing")
            })?;
            let (mut runs, m) = w.runs();
            runs.reverse();
            let permuted = g_theta(&CdWord::from_runs(&runs, m));
            ensure(permuted == by_formula, || {
                format!("g(Θ_{w}) depends on run order")
            })?;
        }
    }
    Ok(())
}

fn zonotope(_depth: Depth) -> Result<(), String> {
    for k in 1..=4 {
        ensure(zonotope_map_check(k).map_err(|e| e.to_string())?, || {
            format!("ϑ(F(L_0)) ≠ 2F(Z) for the {k}-cube")
        })?;
        let f = GradedPoset::cube_faces(k).unwrap().qsym().scale(&int(2));
        let coords = theta_expansion(&f).map_err(|e| e.to_string())?;
        for (w, c) in coords.terms() {
            ensure(c.is_integer(), || {
                format!("2F({k}-cube) has Θ_{w}-coordinate {c}")
            })?;
        }
    }
    Ok(())
}

fn membership(depth: Depth) -> Result<(), String> {
    let witness = FlagVector::new(2, [1, 3, 3, 6].iter().map(|&v| int(v)).collect()).unwrap();
    peak_membership(&QSym::from_flag_vector(&witness)).map_err(|e| e.to_string())?;
    let chain = GradedPoset::chain(2).unwrap();
    ensure(!chain.is_eulerian(), || {
        "chain 2 passes the Eulerian test".into()
    })?;
    ensure(!is_in_peak_algebra(&chain.qsym()), || {
        "F(chain 2) lies in Π".into()
    })?;

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let small =
        |rng: &mut StdRng| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
    for _ in 0..8 {
        let f: Vec<Rational> = (0..4).map(|_| small(&mut rng)).collect();
        let input = QSym::from_dense(3, Basis::M, f.clone());
        let expected = QSym::from_dense(
            3,
            Basis::M,
            vec![f[0].clone(), f[1].clone(), f[1].clone(), &f[1] * int(2)],
        );
        let got = eulerian_projection(&input).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("π({input}) = {got}"))?;
    }
    let m1 = QSym::monomial(&Subset::new(1, [1]).unwrap());
    ensure(eulerian_projection(&m1).unwrap().is_zero(), || {
        "π(M_{1}) ≠ 0 in degree 2".into()
    })?;
    let m1_squared = QSym::monomial(&Subset::empty(0).unwrap()).pow(2);
    ensure(!eulerian_projection(&m1_squared).unwrap().is_zero(), || {
        "π(M_(1)²) = 0".into()
    })?;

    for d in 1..=depth.cap(6) {
        let n = d - 1;
        for _ in 0..4 {
            let coords =
                CdPolynomial::from_terms(cd_words(n).into_iter().map(|w| (w, small(&mut rng))));
            let base = theta_combination(&coords);
            let psi = cd_index(&base).map_err(|e| e.to_string())?;
            let proj = eulerian_projection(&base).map_err(|e| e.to_string())?;
            ensure(proj == base, || {
                format!("π moves an element of Π in degree {d}")
            })?;
            let perturbation = QSym::from_basis(
                n,
                Basis::K,
                Subset::all(n)
                    .unwrap()
                    .filter(|s| !s.is_right_sparse())
                    .map(|s| (s, small(&mut rng))),
            )
            .unwrap();
            let moved = &base + &perturbation;
            let psi2 = cd_index(&moved).map_err(|e| e.to_string())?;
            ensure(psi == psi2, || {
                format!("cd-index changes along a π-fiber in degree {d}")
            })?;
            let proj2 = eulerian_projection(&moved).map_err(|e| e.to_string())?;
            ensure(proj2 == base, || {
                format!("π not constant on a fiber in degree {d}")
            })?;
            ensure(perturbation.bar().is_zero(), || {
                format!("perturbation survives bar in degree {d}")
            })?;
        }
    }
    let one = QSym::one();
    ensure(eulerian_projection(&one).unwrap() == one, || {
        "π(1) ≠ 1".into()
    })?;
    Ok(())
}
