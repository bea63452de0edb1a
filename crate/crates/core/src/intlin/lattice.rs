use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::normal::{hermite_rows, integer_kernel, smith_normal_form};
use super::{IntMatrix, RatVector};
use crate::error::{Error, Result};

/// A subgroup of ℤⁿ, stored by its row Hermite normal form.
///
/// Two lattices are equal iff they are the same subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    /// The lattice generated by the rows of `generators`.
    pub fn from_generators(generators: &IntMatrix) -> Self {
        let (basis, pivots) = hermite_rows(generators);
        Lattice {
            ambient: generators.ncols(),
            basis,
            pivots,
        }
    }

    pub fn from_rows<R: AsRef<[i64]>>(ambient: usize, rows: &[R]) -> Self {
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let m = IntMatrix::from_rows(rows);
        assert_eq!(m.ncols(), ambient);
        Self::from_generators(&m)
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<BigInt>]) -> Self {
        Self::from_generators(&IntMatrix::from_big_rows(vectors.to_vec(), ambient))
    }

    pub fn standard(n: usize) -> Self {
        Self::from_generators(&IntMatrix::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        Lattice {
            ambient: n,
            basis: IntMatrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    /// Hermite basis, one generator per row.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<BigInt>> {
        self.basis.to_rows()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient);
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (k, &c) in self.pivots.iter().enumerate() {
            if rem[..c].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let p = self.basis.get(k, c);
            let (q, r) = rem[c].div_rem(p);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rem.iter_mut().zip(self.basis.row(k)) {
                *x -= &q * b;
            }
            coords.push(q);
        }
        rem.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.rows().all(|r| self.contains(r))
    }

    /// Canonical representative of the coset `v + self` for an integer vector.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.reduce_rat(&RatVector::from_ints(v))
            .numerators()
            .to_vec()
    }

    /// Canonical representative of `u + self`: each pivot coordinate is
    /// brought into `[0, pivot)` by subtracting integer multiples of the
    /// corresponding Hermite row, in pivot order.
    pub fn reduce_rat(&self, u: &RatVector) -> RatVector {
        assert_eq!(u.len(), self.ambient);
        let den = u.denominator().clone();
        let mut num = u.numerators().to_vec();
        for (k, &c) in self.pivots.iter().enumerate() {
            let p = self.basis.get(k, c);
            let q = num[c].div_floor(&(p * &den));
            if q.is_zero() {
                continue;
            }
            let scaled = &q * &den;
            for (x, b) in num.iter_mut().zip(self.basis.row(k)) {
                *x -= &scaled * b;
            }
        }
        RatVector::new(num, den)
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        Self::from_generators(&IntMatrix::vstack(
            &[&self.basis, &other.basis],
            self.ambient,
        ))
    }

    pub fn intersection(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        // (x, y) with x·A = y·B, i.e. the kernel of [A; -B]ᵀ.
        let stacked = IntMatrix::vstack(&[&self.basis, &other.basis.neg()], self.ambient);
        let kernel = integer_kernel(&stacked.transpose());
        let a = self.rank();
        let gens: Vec<Vec<BigInt>> = kernel
            .rows()
            .map(|k| self.basis.apply_left(&k[..a]))
            .collect();
        Self::from_vectors(self.ambient, &gens)
    }

    /// `{ w ∈ self : m·w ∈ target }` for a linear map `m` (column convention).
    pub fn preimage(&self, m: &IntMatrix, target: &Lattice) -> Lattice {
        assert_eq!(m.ncols(), self.ambient);
        assert_eq!(m.nrows(), target.ambient);
        // Columns m·bᵢ and -tⱼ; kernel vectors give combinations landing in target.
        let images = m.mul(&self.basis.transpose());
        let block = IntMatrix::hstack(&[&images, &target.basis.transpose().neg()], m.nrows());
        let kernel = integer_kernel(&block);
        let a = self.rank();
        let gens: Vec<Vec<BigInt>> = kernel
            .rows()
            .map(|k| self.basis.apply_left(&k[..a]))
            .collect();
        Self::from_vectors(self.ambient, &gens)
    }

    /// `{ w ∈ self : m·w = 0 }`.
    pub fn kernel_of(&self, m: &IntMatrix) -> Lattice {
        self.preimage(m, &Lattice::zero(m.nrows()))
    }

    /// Image of the lattice under `m` (column convention).
    pub fn image(&self, m: &IntMatrix) -> Lattice {
        assert_eq!(m.ncols(), self.ambient);
        let gens: Vec<Vec<BigInt>> = self.basis.rows().map(|r| m.apply(r)).collect();
        Self::from_vectors(m.nrows(), &gens)
    }

    pub fn scaled(&self, k: &BigInt) -> Lattice {
        Self::from_generators(&self.basis.scale(k))
    }

    /// `(ℚ ⊗ self) ∩ ℤⁿ`.
    pub fn saturation(&self) -> Lattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let orth = integer_kernel(&self.basis);
        Lattice::standard(self.ambient).kernel_of(&orth)
    }

    pub fn is_saturated(&self) -> bool {
        *self == self.saturation()
    }

    /// Whether `m` maps the lattice into itself.
    pub fn is_stable_under(&self, m: &IntMatrix) -> bool {
        self.basis.rows().all(|r| self.contains(&m.apply(r)))
    }

    /// Index `[self : sub]`; `None` when infinite.
    pub fn index_of(&self, sub: &Lattice) -> Result<Option<BigInt>> {
        Ok(QuotientGroup::new(self, sub)?.order())
    }
}

/// The abelian group `big / small` with explicit invariant-factor generators.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    big: Lattice,
    factors: Vec<BigInt>,
    new_basis: IntMatrix,
    to_new: IntMatrix,
}

impl QuotientGroup {
    /// Fails with `NotASublattice` if some generator of `small` is not in `big`.
    pub fn new(big: &Lattice, small: &Lattice) -> Result<Self> {
        assert_eq!(big.ambient, small.ambient);
        let r = big.rank();
        let mut coords = Vec::with_capacity(small.rank());
        for (i, g) in small.basis.rows().enumerate() {
            coords.push(big.coordinates(g).ok_or(Error::NotASublattice(i))?);
        }
        let s = IntMatrix::from_big_rows(coords, r);
        let smith = smith_normal_form(&s);
        let mut factors = smith.diagonal();
        factors.resize(r, BigInt::zero());
        // u·S·v = D: new basis rows v⁻¹·B; small is spanned by dⱼ·(new row j).
        let (vinv_num, vinv_den) = smith.v.inverse().expect("unimodular");
        debug_assert!(vinv_den.is_one());
        let new_basis = vinv_num.mul(&big.basis);
        Ok(QuotientGroup {
            big: big.clone(),
            factors,
            new_basis,
            to_new: smith.v,
        })
    }

    /// Invariant factors `d₁ | d₂ | …`, one per rank of `big`, with `0` for
    /// free summands and `1` for trivial ones.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    /// Factors other than 1.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.factors.iter().any(Zero::is_zero) {
            None
        } else {
            Some(self.factors.iter().product())
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Generator vectors paired with their orders, trivial ones omitted.
    pub fn generators(&self) -> Vec<(Vec<BigInt>, BigInt)> {
        self.factors
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_one())
            .map(|(j, d)| (self.new_basis.row(j).to_vec(), d.clone()))
            .collect()
    }

    /// Class of `v ∈ big` as coordinates against [`Self::generators`],
    /// reduced modulo each finite order.
    pub fn classify(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let x = self.big.coordinates(v)?;
        let y = self.to_new.apply_left(&x);
        Some(
            y.into_iter()
                .zip(&self.factors)
                .filter(|(_, d)| !d.is_one())
                .map(|(c, d)| if d.is_zero() { c } else { c.mod_floor(d) })
                .collect(),
        )
    }

    /// Every element of a finite quotient as class coordinates, in
    /// lexicographic order of the coordinates.
    pub fn elements(&self) -> Option<Vec<Vec<BigInt>>> {
        self.order()?;
        let orders: Vec<BigInt> = self.generators().into_iter().map(|(_, d)| d).collect();
        let mut out = vec![Vec::new()];
        for d in &orders {
            let mut next = Vec::new();
            for prefix in &out {
                let mut c = BigInt::zero();
                while &c < d {
                    let mut p: Vec<BigInt> = prefix.clone();
                    p.push(c.clone());
                    next.push(p);
                    c += 1;
                }
            }
            out = next;
        }
        Some(out)
    }

    /// The vector `Σ cⱼ gⱼ` for class coordinates `c`.
    pub fn element_vector(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let gens = self.generators();
        assert_eq!(gens.len(), coords.len());
        let mut v = vec![BigInt::zero(); self.big.ambient];
        for ((g, _), c) in gens.iter().zip(coords) {
            for (x, y) in v.iter_mut().zip(g) {
                *x += c * y;
            }
        }
        v
    }
}

/// Invariant factors of `l / s`; see [`QuotientGroup::invariant_factors`].
pub fn lattice_quotient_invariants(l: &Lattice, s: &Lattice) -> Result<Vec<BigInt>> {
    Ok(QuotientGroup::new(l, s)?.invariant_factors().to_vec())
}

/// Canonical representative of `u + Λ`.
pub fn coset_canonical_rep(u: &RatVector, lambda: &Lattice) -> RatVector {
    lambda.reduce_rat(u)
}

/// A lattice in ℚⁿ stored as `lattice / scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatLattice {
    pub scale: BigInt,
    pub lattice: Lattice,
}

impl RatLattice {
    pub fn integral(lattice: Lattice) -> Self {
        RatLattice {
            scale: BigInt::one(),
            lattice,
        }
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        let scaled = v.scale(&self.scale, &BigInt::one());
        scaled
            .as_integers()
            .is_some_and(|w| self.lattice.contains(w))
    }

    /// Basis vectors as rational vectors.
    pub fn basis_vectors(&self) -> Vec<RatVector> {
        self.lattice
            .basis()
            .rows()
            .map(|r| RatVector::new(r.to_vec(), self.scale.clone()))
            .collect()
    }
}
