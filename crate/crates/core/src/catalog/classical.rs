//! Classical groups on sublattices of `ℤᵐ` with the standard coordinates
//! `e₁, …, e_m`, and strong representatives `u` in those coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::intlin::{IntMatrix, RatVector};
use crate::rootdata::RootDatum;

/// A cocharacter lattice spanned by the rows of `basis` inside `ℤᵐ`, with
/// roots and coroots written in the standard coordinates.
pub(crate) struct Ambient {
    pub basis: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
}

fn unit(m: usize, i: usize) -> Vec<i64> {
    (0..m).map(|k| i64::from(k == i)).collect()
}

fn diff(m: usize, i: usize) -> Vec<i64> {
    (0..m)
        .map(|k| i64::from(k == i) - i64::from(k == i + 1))
        .collect()
}

fn scaled(mut v: Vec<i64>, k: i64) -> Vec<i64> {
    v.iter_mut().for_each(|x| *x *= k);
    v
}

fn plus_last_two(m: usize) -> Vec<i64> {
    (0..m).map(|k| i64::from(k + 2 >= m)).collect()
}

impl Ambient {
    /// `SL_n`: the sum-zero lattice with basis `e_k − e_{k+1}`.
    pub fn type_a(n: usize) -> Self {
        let simple: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| diff(n, i)).collect();
        Ambient {
            basis: simple.clone(),
            roots: simple.clone(),
            coroots: simple,
        }
    }

    /// `SO_{2n+1}` on `ℤⁿ`, or `Spin_{2n+1}` on the even-sum lattice.
    pub fn type_b(n: usize, spin: bool) -> Self {
        let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i)).collect();
        let mut coroots = roots.clone();
        roots.push(unit(n, n - 1));
        coroots.push(scaled(unit(n, n - 1), 2));
        let basis = if spin {
            coroots.clone()
        } else {
            (0..n).map(|i| unit(n, i)).collect()
        };
        Ambient {
            basis,
            roots,
            coroots,
        }
    }

    /// `Sp_{2n}` on `ℤⁿ`.
    pub fn type_c(n: usize) -> Self {
        let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i)).collect();
        let mut coroots = roots.clone();
        roots.push(scaled(unit(n, n - 1), 2));
        coroots.push(unit(n, n - 1));
        Ambient {
            basis: (0..n).map(|i| unit(n, i)).collect(),
            roots,
            coroots,
        }
    }

    /// `SO_{2n}` on `ℤⁿ`, or `Spin_{2n}` on the even-sum lattice.
    pub fn type_d(n: usize, spin: bool) -> Self {
        let mut roots: Vec<Vec<i64>> = Vec::new();
        if n >= 2 {
            roots = (0..n - 1).map(|i| diff(n, i)).collect();
            roots.push(plus_last_two(n));
        }
        let basis = match (spin, n) {
            (false, _) => (0..n).map(|i| unit(n, i)).collect(),
            (true, 1) => vec![vec![2]],
            (true, _) => roots.clone(),
        };
        Ambient {
            basis,
            roots: roots.clone(),
            coroots: roots,
        }
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }

    fn basis_transpose(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.basis).transpose()
    }

    pub fn datum(&self) -> Result<RootDatum> {
        let k = self.rank();
        if k == 0 {
            return RootDatum::from_big(0, Vec::new(), Vec::new(), None);
        }
        let b = IntMatrix::from_rows(&self.basis);
        let big = |v: &[i64]| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };
        let roots = self.roots.iter().map(|a| b.apply(&big(a))).collect();
        let coroots = self
            .coroots
            .iter()
            .map(|c| {
                self.coordinates(&RatVector::from_i64(c, 1))
                    .as_integers()
                    .map(<[BigInt]>::to_vec)
                    .ok_or_else(|| Error::InvalidCocharacter("coroot outside the lattice".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        RootDatum::from_big(k, roots, coroots, None)
    }

    /// Lattice coordinates of an ambient rational cocharacter.
    pub fn coordinates(&self, v: &RatVector) -> RatVector {
        if self.rank() == 0 {
            return RatVector::zero(0);
        }
        let sol = self
            .basis_transpose()
            .solve_rational(&v.to_rationals())
            .expect("cocharacter lies in the span of the lattice");
        RatVector::from_rationals(&sol)
    }

    /// An ambient involution written in lattice coordinates.
    pub fn restrict(&self, t: &IntMatrix) -> IntMatrix {
        let k = self.rank();
        let cols: Vec<Vec<BigInt>> = self
            .basis
            .iter()
            .map(|b| {
                let image = t.apply(&b.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
                self.coordinates(&RatVector::from_ints(&image))
                    .as_integers()
                    .expect("lattice is stable")
                    .to_vec()
            })
            .collect();
        IntMatrix::from_columns(&cols, k)
    }
}

/// `v ↦ −reverse(v)` on `ℤⁿ`.
pub(crate) fn antidiagonal(n: usize) -> IntMatrix {
    let mut t = IntMatrix::zeros(n, n);
    for i in 0..n {
        t.set(i, n - 1 - i, BigInt::from(-1));
    }
    t
}

/// `diag(1, …, 1, −1)` on `ℤⁿ`.
pub(crate) fn last_sign(n: usize) -> IntMatrix {
    let mut t = IntMatrix::identity(n);
    if n > 0 {
        t.set(n - 1, n - 1, BigInt::from(-1));
    }
    t
}

/// Builds an ambient vector from `(numerator, denominator)` blocks.
pub(crate) fn blocks(parts: &[(usize, i64, i64)]) -> RatVector {
    let mut out = Vec::new();
    for &(count, num, den) in parts {
        out.extend(std::iter::repeat_n(
            BigRational::new(num.into(), den.into()),
            count,
        ));
    }
    if out.is_empty() {
        return RatVector::zero(0);
    }
    RatVector::from_rationals(&out)
}

/// `u` for `SU(p, q)`: half of `ζᵢ = q/n` for `i ≤ p` and `q/n − 1` after.
pub(crate) fn su_rep(p: usize, q: usize) -> RatVector {
    let n = (p + q) as i64;
    let q = q as i64;
    blocks(&[(p, q, 2 * n), (q as usize, q - n, 2 * n)])
}

/// `u = (0^{n−b}, ½^b)`: `b` negated planes in `SO` or `Sp` coordinates.
pub(crate) fn halves(n: usize, b: usize) -> RatVector {
    blocks(&[(n - b, 0, 1), (b, 1, 2)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ambient_data() {
        assert_eq!(Ambient::type_a(4).datum().unwrap().type_label(), "A3");
        assert_eq!(Ambient::type_b(3, true).datum().unwrap().type_label(), "B3");
        assert_eq!(Ambient::type_c(3).datum().unwrap().type_label(), "C3");
        assert_eq!(
            Ambient::type_d(4, false).datum().unwrap().type_label(),
            "D4"
        );
        assert_eq!(Ambient::type_d(1, true).datum().unwrap().rank(), 1);
        assert_eq!(Ambient::type_a(1).datum().unwrap().rank(), 0);
        let a = Ambient::type_d(3, true);
        let t = a.restrict(&last_sign(3));
        assert!(t.mul(&t).is_identity());
        assert_eq!(su_rep(2, 1).to_strings(), vec!["1/6", "1/6", "-1/3"]);
    }
}
