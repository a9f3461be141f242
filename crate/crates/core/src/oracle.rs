//! Slow reference implementations used to cross-check the fast paths.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::combinat::Composition;
use crate::qsym::{Monomial, QSym};
use crate::Rational;

type Poly = HashMap<Vec<u32>, Rational>;

/// All strictly increasing index sequences of length `k` in `0..vars`.
fn index_sequences(vars: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, vars: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..vars {
            cur.push(i);
            go(i + 1, vars, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, vars, k, &mut Vec::new(), &mut out);
    out
}

fn expand(f: &QSym, vars: usize) -> Poly {
    let mut out = Poly::new();
    for (m, c) in f.terms() {
        let parts = m.composition();
        for idx in index_sequences(vars, parts.len()) {
            let mut exp = vec![0u32; vars];
            for (&i, &p) in idx.iter().zip(parts.parts()) {
                exp[i] = p;
            }
            *out.entry(exp).or_insert_with(Rational::zero) += c;
        }
    }
    out
}

/// Multiply two quasisymmetric functions as honest polynomials in as many
/// variables as the total degree, then read `M_γ` off the coefficient of
/// `x_1^{γ_1} ⋯ x_k^{γ_k}`.
pub fn power_series_product(a: &QSym, b: &QSym) -> QSym {
    let da = a.degrees().last().copied().unwrap_or(0);
    let db = b.degrees().last().copied().unwrap_or(0);
    let vars = (da + db).max(1) as usize;
    let pa = expand(a, vars);
    let pb = expand(b, vars);
    let mut prod = Poly::new();
    for (ea, ca) in &pa {
        for (eb, cb) in &pb {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *prod.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    let mut out = Vec::new();
    for (e, c) in prod {
        let k = e.iter().take_while(|&&x| x > 0).count();
        if e[k..].iter().any(|&x| x > 0) {
            continue;
        }
        let beta = Composition::new(e[..k].to_vec()).expect("positive parts");
        out.push((Monomial::of_composition(&beta).expect("small degree"), c));
    }
    QSym::from_terms(out)
}

/// Antipode from the defining recursion `Σ s(M_{β'}) M_{β''} = 0` over
/// deconcatenations `β = β'β''` of a nonempty `β`.
pub fn recursive_antipode(f: &QSym) -> QSym {
    let mut memo: BTreeMap<Vec<u32>, QSym> = BTreeMap::new();
    let mut out = QSym::zero();
    for (m, c) in f.terms() {
        let beta = m.composition().parts().to_vec();
        out += &antipode_monomial(&beta, &mut memo).scale(c);
    }
    out
}

fn antipode_monomial(beta: &[u32], memo: &mut BTreeMap<Vec<u32>, QSym>) -> QSym {
    if beta.is_empty() {
        return QSym::one();
    }
    if let Some(v) = memo.get(beta) {
        return v.clone();
    }
    let mut acc = QSym::zero();
    for cut in 0..beta.len() {
        let left = antipode_monomial(&beta[..cut], memo);
        let right = QSym::monomial_composition(
            &Composition::new(beta[cut..].to_vec()).expect("positive parts"),
        )
        .expect("small degree");
        acc += &left.multiply(&right);
    }
    let v = -&acc;
    memo.insert(beta.to_vec(), v.clone());
    v
}
