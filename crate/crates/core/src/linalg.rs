//! Exact rational linear algebra for the small dense systems that show up
//! in basis changes (cd-index solves, Omega expansions, rank checks).

use num::{One, Signed, Zero};

use crate::Rational;

/// Integer as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `2^k` as a rational.
pub fn pow2(k: u32) -> Rational {
    Rational::from_integer(num::BigInt::one() << k as usize)
}

/// Row-reduced echelon form, in place. Returns the pivot column of each
/// nonzero row, in order.
pub fn row_reduce(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    row_reduce(&mut m, ncols).len()
}

/// Why a linear solve failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The coefficient columns are linearly dependent.
    Singular,
    /// No exact solution; `row` is an equation left with a nonzero residual.
    Inconsistent { row: usize },
}

/// Solve `A x = b` for a system with linearly independent columns.
///
/// `a` is given row-major (one equation per row). Overdetermined systems are
/// accepted as long as they are exactly consistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, SolveError> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, ncols + 1);
    if let Some(pos) = pivots.iter().position(|&c| c == ncols) {
        return Err(SolveError::Inconsistent { row: pos });
    }
    if pivots.len() < ncols {
        return Err(SolveError::Singular);
    }
    Ok(aug
        .into_iter()
        .take(ncols)
        .map(|mut r| r.pop().unwrap())
        .collect())
}

/// Largest absolute value in a vector (zero for empty input).
pub fn max_abs(v: &[Rational]) -> Rational {
    v.iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_square_system() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(&a, &[int(5), int(10)]).unwrap();
        assert_eq!(x, vec![int(1), int(3)]);
    }

    #[test]
    fn detects_singular_and_inconsistent() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&a, &[int(1), int(2)]), Err(SolveError::Singular));
        let a = vec![vec![int(1)], vec![int(2)]];
        assert!(matches!(
            solve(&a, &[int(1), int(3)]),
            Err(SolveError::Inconsistent { .. })
        ));
        assert_eq!(solve(&a, &[int(2), int(4)]), Ok(vec![int(2)]));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![int(1), int(0), int(1)],
            vec![int(0), int(1), int(1)],
            vec![int(1), int(1), int(2)],
        ];
        assert_eq!(rank(&rows), 2);
        assert_eq!(pow2(10), int(1024));
    }
}
