//! Smith and Hermite normal forms, integer kernels and integer solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Result of [`smith_normal_form`]: `u · m · v = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Diagonal entries `d₁ | d₂ | …`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivot choice is the entry of least nonzero absolute value in the active
/// block, ties broken by lowest (row, col).
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                return Smith { d, u, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { d, u, v }
}

fn min_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.nrows() {
        for j in t..d.ncols() {
            let a = d.get(i, j);
            if a.is_zero() {
                continue;
            }
            let a = a.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
///
/// Returns the nonzero rows (echelon, positive pivots, entries above each
/// pivot reduced into `[0, pivot)`) and their pivot columns.
pub fn hermite_rows(m: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !a.get(i, c).is_zero()
                    && best.is_none_or(|b| a.get(i, c).abs() < a.get(b, c).abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(r, b);
            let pivot = a.get(r, c).clone();
            let mut others = false;
            for i in r + 1..rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let q = -a.get(i, c).div_floor(&pivot);
                a.add_row_multiple(i, r, &q);
                others |= !a.get(i, c).is_zero();
            }
            if !others {
                break;
            }
        }
        if a.get(r, c).is_zero() {
            continue;
        }
        if a.get(r, c).is_negative() {
            a.negate_row(r);
        }
        let pivot = a.get(r, c).clone();
        for i in 0..r {
            let q = -a.get(i, c).div_floor(&pivot);
            a.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    (a.select_rows(0..r), pivots)
}

/// Basis (as rows) of the integer kernel `{x ∈ ℤⁿ : m·x = 0}`.
///
/// The returned basis spans a saturated sublattice.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let r = s.rank();
    let cols = m.ncols();
    let basis: Vec<Vec<BigInt>> = (r..cols).map(|j| s.v.column(j)).collect();
    let (h, _) = hermite_rows(&IntMatrix::from_big_rows(basis, cols));
    h
}

/// An integer solution of `m·x = b`, if one exists.
pub fn integer_solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.nrows(), b.len());
    let s = smith_normal_form(m);
    let ub = s.u.apply(b);
    let diag = s.diagonal();
    let mut y = vec![BigInt::zero(); m.ncols()];
    for (i, x) in ub.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !x.is_zero() {
                return None;
            }
        } else {
            let (q, r) = x.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(s.v.apply(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[0].is_zero() && w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
        let s = check(&IntMatrix::zeros(2, 2));
        assert!(s.d.is_zero());
        assert!(s.u.is_identity() && s.v.is_identity());
    }

    #[test]
    fn diag_two_three() {
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rectangular() {
        let s = check(&IntMatrix::from_rows(&[
            [2, 4, 4],
            [-6, 6, 12],
            [10, -4, -16],
        ]));
        assert_eq!(
            s.diagonal(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        check(&IntMatrix::from_rows(&[[1, 2, 3]]));
        check(&IntMatrix::from_rows(&[[0], [4], [6]]));
        check(&IntMatrix::zeros(0, 3));
    }

    #[test]
    fn hermite_is_canonical() {
        let a = IntMatrix::from_rows(&[[1, 1], [1, -1]]);
        let b = IntMatrix::from_rows(&[[2, 0], [3, 1], [0, 2]]);
        assert_eq!(hermite_rows(&a), hermite_rows(&b));
        let (h, p) = hermite_rows(&a);
        assert_eq!(h, IntMatrix::from_rows(&[[1, 1], [0, 2]]));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_rows(&[[1, 1, 0, 0], [0, 0, 1, 1]]);
        let k = integer_kernel(&m);
        assert_eq!(k.nrows(), 2);
        for r in k.rows() {
            assert!(m.apply(r).iter().all(Zero::is_zero));
        }
        let two = IntMatrix::from_rows(&[[2]]);
        assert!(integer_solve(&two, &[BigInt::from(3)]).is_none());
        assert_eq!(
            integer_solve(&two, &[BigInt::from(4)]),
            Some(vec![BigInt::from(2)])
        );
    }
}
