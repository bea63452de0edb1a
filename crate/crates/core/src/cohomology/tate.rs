use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intlin::{IntMatrix, Lattice, QuotientGroup, RatVector};

/// The elementary 2-group `A = L^τ / (1+τ)L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGroup {
    fixed: Lattice,
    image: Lattice,
    generators: Vec<Vec<BigInt>>,
}

impl TwoGroup {
    /// Number of order-2 generators `k`; `|A| = 2^k`.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn order(&self) -> BigInt {
        BigInt::one() << self.rank()
    }

    /// Coset generators, each in `L^τ`.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn generator_vectors(&self) -> Vec<RatVector> {
        self.generators
            .iter()
            .map(|g| RatVector::from_ints(g))
            .collect()
    }

    /// `L^τ`.
    pub fn fixed_lattice(&self) -> &Lattice {
        &self.fixed
    }

    /// `(1+τ)L`, the lattice that is divided out.
    pub fn image_lattice(&self) -> &Lattice {
        &self.image
    }

    /// Canonical representative of `v + (1+τ)L`.
    pub fn reduce(&self, v: &RatVector) -> RatVector {
        self.image.reduce_rat(v)
    }
}

/// `Ĥ⁰(τ, L) = L^τ / (1+τ)L` for an involution `τ` preserving `L`.
pub fn torus_tate_h0(tau: &IntMatrix, l: &Lattice) -> Result<TwoGroup> {
    let n = l.ambient();
    if tau.nrows() != n || tau.ncols() != n {
        return Err(Error::NotInvolution);
    }
    if !l.is_stable_under(tau) || l.basis().rows().any(|b| tau.apply(&tau.apply(b)) != b) {
        return Err(Error::NotInvolution);
    }
    let one = IntMatrix::identity(n);
    let fixed = l.kernel_of(&tau.sub(&one));
    let image = l.image(&tau.add(&one));
    let q = QuotientGroup::new(&fixed, &image).expect("(1+τ)L lies in L^τ");
    let generators = q
        .generators()
        .into_iter()
        .map(|(g, d)| {
            assert_eq!(
                d,
                BigInt::from(2),
                "Tate group of an involution is elementary abelian of exponent 2"
            );
            g
        })
        .collect();
    Ok(TwoGroup {
        fixed,
        image,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h0(rows: &[[i64; 2]]) -> usize {
        torus_tate_h0(&IntMatrix::from_rows(rows), &Lattice::standard(2))
            .unwrap()
            .rank()
    }

    #[test]
    fn rank_two_examples() {
        assert_eq!(h0(&[[1, 0], [0, 1]]), 2);
        assert_eq!(h0(&[[-1, 0], [0, -1]]), 0);
        assert_eq!(h0(&[[0, 1], [1, 0]]), 0);
        assert_eq!(
            torus_tate_h0(
                &IntMatrix::from_rows(&[[1, 1], [0, 1]]),
                &Lattice::standard(2)
            ),
            Err(Error::NotInvolution)
        );
    }

    #[test]
    fn sl4_outer() {
        // v ↦ −reverse(v) on the sum-zero lattice of ℤ⁴.
        let tau =
            IntMatrix::from_rows(&[[0, 0, 0, -1], [0, 0, -1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]);
        let x = Lattice::from_rows(4, &[[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1]]);
        let a = torus_tate_h0(&tau, &x).unwrap();
        assert_eq!(a.order(), BigInt::from(2));
        assert_eq!(a.fixed_lattice().rank(), 2);
    }
}
