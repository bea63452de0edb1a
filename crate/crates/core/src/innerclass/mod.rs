//! Inner classes: a diagram involution with its lattice action `τ₀` on
//! `X₊`, the imaginary roots it fixes, and the associated Levi datum.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intlin::{IntMatrix, Lattice};
use crate::rootdata::RootDatum;

/// A validated inner class. `tau0` is the action of the quasicompact
/// involution on `X₊`; roots are acted on by its transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerClass {
    datum: RootDatum,
    perm: Vec<usize>,
    tau0: IntMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    Imaginary,
    Real,
    Complex,
}

/// Imaginary roots `Φ^δ` with a simple system and its reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImaginarySubsystem {
    /// Indices into the datum's root system.
    pub roots: Vec<usize>,
    /// Indices of the simple imaginary roots, in root-system order.
    pub simple: Vec<usize>,
    pub reflections: Vec<IntMatrix>,
}

impl InnerClass {
    pub fn new(datum: RootDatum, perm: Vec<usize>, tau0: IntMatrix) -> Result<Self> {
        let ic = InnerClass { datum, perm, tau0 };
        validate_inner_class(&ic)?;
        Ok(ic)
    }

    /// The compact (equal rank) inner class: `δ = 1`, `τ₀ = 1`.
    pub fn compact(datum: RootDatum) -> Self {
        let l = datum.semisimple_rank();
        let n = datum.rank();
        InnerClass {
            datum,
            perm: (0..l).collect(),
            tau0: IntMatrix::identity(n),
        }
    }

    /// Derives `τ₀` from the diagram permutation for a semisimple datum.
    pub fn from_diagram(datum: RootDatum, perm: Vec<usize>) -> Result<Self> {
        if !datum.is_semisimple() {
            return Err(Error::NotSemisimple {
                rank: datum.rank(),
                semisimple_rank: datum.semisimple_rank(),
            });
        }
        let n = datum.rank();
        if perm.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for {n} simple roots",
                perm.len()
            )));
        }
        check_permutation(&perm)?;
        // τ₀·B = B_perm, with B the matrix of simple coroot columns.
        let b = IntMatrix::from_columns(datum.simple_coroots(), n);
        let cols: Vec<Vec<BigInt>> = perm
            .iter()
            .map(|&p| datum.simple_coroots()[p].clone())
            .collect();
        let bp = IntMatrix::from_columns(&cols, n);
        let (inv, den) = b.inverse()?;
        let prod = bp.mul(&inv);
        let mut tau0 = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = prod.get(i, j);
                if x % &den != BigInt::from(0) {
                    return Err(Error::NotInvolution);
                }
                tau0.set(i, j, x / &den);
            }
        }
        Self::new(datum, perm, tau0)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn tau0(&self) -> &IntMatrix {
        &self.tau0
    }

    /// Whether `τ₀` is the identity (the equal rank class).
    pub fn is_equal_rank(&self) -> bool {
        self.tau0.is_identity()
    }

    /// `ker(τ₀ − 1)` for `sign = 1`, `ker(τ₀ + 1)` for `sign = -1`.
    pub fn fixed_sublattice(&self, sign: i8) -> Lattice {
        fixed_sublattice(&self.tau0, sign)
    }

    pub fn imaginary_root_subsystem(&self) -> ImaginarySubsystem {
        let system = self.datum.root_system();
        let tt = self.tau0.transpose();
        let roots: Vec<usize> = (0..system.len())
            .filter(|&k| tt.apply(&system.roots[k]) == system.roots[k])
            .collect();
        let positive: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&k| system.is_positive(k))
            .collect();
        let coeffs: HashSet<&[i64]> = positive
            .iter()
            .map(|&k| system.coefficients[k].as_slice())
            .collect();
        let simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&k| {
                let c = &system.coefficients[k];
                !positive.iter().any(|&g| {
                    let diff: Vec<i64> = c
                        .iter()
                        .zip(&system.coefficients[g])
                        .map(|(a, b)| a - b)
                        .collect();
                    coeffs.contains(diff.as_slice())
                })
            })
            .collect();
        let reflections = simple
            .iter()
            .map(|&k| self.datum.reflection(k).expect("valid index"))
            .collect();
        ImaginarySubsystem {
            roots,
            simple,
            reflections,
        }
    }

    /// Simple reflections `s_{αᵢ}` for the `δ`-fixed simple roots.
    pub fn w0_generators(&self) -> Vec<IntMatrix> {
        (0..self.perm.len())
            .filter(|&i| self.perm[i] == i)
            .map(|i| self.datum.simple_reflection(i))
            .collect()
    }

    /// The equal rank Levi `M_f`: same lattices, roots `Φ^δ`, same `τ₀`.
    pub fn centralizer_mf_datum(&self) -> Result<(RootDatum, InnerClass)> {
        let sub = self.imaginary_root_subsystem();
        let system = self.datum.root_system();
        let roots: Vec<Vec<BigInt>> = sub
            .simple
            .iter()
            .map(|&k| system.roots[k].clone())
            .collect();
        let coroots: Vec<Vec<BigInt>> = sub
            .simple
            .iter()
            .map(|&k| system.coroots[k].clone())
            .collect();
        let name = self.datum.name().map(|s| format!("M_f({s})"));
        let mf = RootDatum::from_big(self.datum.rank(), roots, coroots, name)?;
        let ic = InnerClass::new(
            mf.clone(),
            (0..sub.simple.len()).collect(),
            self.tau0.clone(),
        )?;
        Ok((mf, ic))
    }

    /// Type of root `k` with respect to the involution `tau` of `X₊`.
    pub fn classify_root(&self, tau: &IntMatrix, k: usize) -> Result<RootType> {
        Ok(self.classify_all(tau)?[k])
    }

    /// Types of every root with respect to `tau`.
    pub fn classify_all(&self, tau: &IntMatrix) -> Result<Vec<RootType>> {
        let system = self.datum.root_system();
        let n = self.datum.rank();
        if tau.nrows() != n || tau.ncols() != n {
            return Err(Error::NotRootCompatible);
        }
        let tt = tau.transpose();
        let neg = |v: &[BigInt]| -> Vec<BigInt> { v.iter().map(|x| -x).collect() };
        system
            .roots
            .iter()
            .map(|r| {
                let image = tt.apply(r);
                if system.index_of_root(&image).is_none() {
                    Err(Error::NotRootCompatible)
                } else if &image == r {
                    Ok(RootType::Imaginary)
                } else if image == neg(r) {
                    Ok(RootType::Real)
                } else {
                    Ok(RootType::Complex)
                }
            })
            .collect()
    }

    /// The same inner class in new coordinates `v ↦ u·v` on `X₊`.
    pub fn change_basis(&self, u: &IntMatrix) -> Result<InnerClass> {
        let datum = self.datum.change_basis(u)?;
        let (inv, den) = u.inverse()?;
        debug_assert!(den == BigInt::from(1) || den == BigInt::from(-1));
        let tau0 = u.mul(&self.tau0).mul(&inv).scale(&den);
        InnerClass::new(datum, self.perm.clone(), tau0)
    }
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let l = perm.len();
    let mut seen = vec![false; l];
    for &p in perm {
        if p >= l || seen[p] {
            return Err(Error::NotInvolutive(
                "diagram map is not a permutation".into(),
            ));
        }
        seen[p] = true;
    }
    if (0..l).any(|i| perm[perm[i]] != i) {
        return Err(Error::NotInvolutive(
            "diagram permutation does not square to the identity".into(),
        ));
    }
    Ok(())
}

/// Checks every inner class invariant, in the order: shapes, involutivity,
/// then per simple index the chamber and compatibility conditions.
pub fn validate_inner_class(ic: &InnerClass) -> Result<()> {
    let d = &ic.datum;
    let (n, l) = (d.rank(), d.semisimple_rank());
    if ic.tau0.nrows() != n || ic.tau0.ncols() != n {
        return Err(Error::DimensionMismatch(format!("tau0 must be {n}x{n}")));
    }
    if ic.perm.len() != l {
        return Err(Error::DimensionMismatch(format!(
            "permutation of length {} for {l} simple roots",
            ic.perm.len()
        )));
    }
    check_permutation(&ic.perm)?;
    if !ic.tau0.mul(&ic.tau0).is_identity() {
        return Err(Error::NotInvolutive(
            "tau0 does not square to the identity".into(),
        ));
    }
    let system = d.root_system();
    let tt = ic.tau0.transpose();
    for i in 0..l {
        let image = ic.tau0.apply(&d.simple_coroots()[i]);
        if system
            .index_of_coroot(&image)
            .is_some_and(|k| !system.is_positive(k))
        {
            return Err(Error::ChamberViolation(i));
        }
        let p = ic.perm[i];
        if image != d.simple_coroots()[p] || tt.apply(&d.simple_roots()[p]) != d.simple_roots()[i] {
            return Err(Error::NotBasedCompatible(i));
        }
    }
    Ok(())
}

/// `ker(τ − sign) ∩ ℤⁿ`.
pub fn fixed_sublattice(tau: &IntMatrix, sign: i8) -> Lattice {
    let n = tau.nrows();
    let shift = IntMatrix::identity(n).scale(&BigInt::from(sign));
    Lattice::standard(n).kernel_of(&tau.sub(&shift))
}
