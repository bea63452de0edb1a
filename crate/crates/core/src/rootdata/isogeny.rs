use num_bigint::BigInt;
use num_traits::Zero;

use super::RootDatum;
use crate::error::{Error, Result};
use crate::intlin::{integer_kernel, IntMatrix};

/// A central isogeny `G → Ḡ` given by an injective map of cocharacter
/// lattices `X₊(G) → X₊(Ḡ)` (column convention).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyMap {
    source: RootDatum,
    target: RootDatum,
    map: IntMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsogenyKind {
    SimplyConnected,
    Adjoint,
}

impl IsogenyMap {
    /// Checks that `map` is injective, sends each simple coroot to the
    /// matching simple coroot, and pulls each simple root back to the
    /// matching simple root.
    pub fn new(source: RootDatum, target: RootDatum, map: IntMatrix) -> Result<Self> {
        if map.nrows() != target.rank() || map.ncols() != source.rank() {
            return Err(Error::InvalidIsogeny(format!(
                "map is {}x{}, expected {}x{}",
                map.nrows(),
                map.ncols(),
                target.rank(),
                source.rank()
            )));
        }
        if source.rank() != target.rank() || map.rank() != source.rank() {
            return Err(Error::InvalidIsogeny(
                "map is not injective with finite cokernel".into(),
            ));
        }
        if source.semisimple_rank() != target.semisimple_rank() {
            return Err(Error::InvalidIsogeny("semisimple ranks differ".into()));
        }
        let mt = map.transpose();
        for i in 0..source.semisimple_rank() {
            if map.apply(&source.simple_coroots()[i]) != target.simple_coroots()[i] {
                return Err(Error::InvalidIsogeny(format!(
                    "simple coroot {i} is not preserved"
                )));
            }
            if mt.apply(&target.simple_roots()[i]) != source.simple_roots()[i] {
                return Err(Error::InvalidIsogeny(format!(
                    "simple root {i} is not preserved"
                )));
            }
        }
        Ok(IsogenyMap {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &RootDatum {
        &self.source
    }

    pub fn target(&self) -> &RootDatum {
        &self.target
    }

    pub fn lattice_map(&self) -> &IntMatrix {
        &self.map
    }

    /// Order of the kernel `A = X₊(Ḡ) / F·X₊(G)`.
    pub fn kernel_order(&self) -> BigInt {
        self.map.determinant().magnitude().clone().into()
    }

    /// Transports an endomorphism of the source cocharacter lattice to the
    /// target: `F·m·F⁻¹`, failing if the result is not integral.
    pub fn transport(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let (inv, den) = self.map.inverse()?;
        let prod = self.map.mul(m).mul(&inv);
        let mut out = IntMatrix::zeros(prod.nrows(), prod.ncols());
        for i in 0..prod.nrows() {
            for j in 0..prod.ncols() {
                let x = prod.get(i, j);
                if !(x % &den).is_zero() {
                    return Err(Error::IncompatibleInnerClass(
                        "involution does not preserve the target lattice".into(),
                    ));
                }
                out.set(i, j, x / &den);
            }
        }
        Ok(out)
    }
}

/// The simply connected cover or adjoint quotient of `d` with its isogeny.
///
/// The derived part is replaced and the central cocharacters are carried
/// along: the cover has `X₊ = ℤΔ^∨ ⊕ rad(X₊)`, the quotient has
/// `X₊ = (coweights of the roots) ⊕ X₊/(X₊ ∩ ℚΔ^∨)`. For the cover the
/// map runs cover → `d`; for the quotient it runs `d` → quotient.
pub fn isogeny_datum(d: &RootDatum, kind: IsogenyKind) -> Result<(RootDatum, IsogenyMap)> {
    let n = d.rank();
    let l = d.semisimple_rank();
    let cartan = d.cartan_matrix();
    match kind {
        IsogenyKind::SimplyConnected => {
            let radical = d.radical();
            // Columns: simple coroots, then a basis of the radical.
            let mut cols: Vec<Vec<BigInt>> = d.simple_coroots().to_vec();
            cols.extend(radical.basis_vectors());
            let map = IntMatrix::from_columns(&cols, n);
            let unit = |i: usize| -> Vec<BigInt> {
                (0..n).map(|k| BigInt::from(u8::from(k == i))).collect()
            };
            let coroots = (0..l).map(unit).collect();
            let roots = (0..l)
                .map(|i| {
                    (0..n)
                        .map(|k| {
                            if k < l {
                                BigInt::from(cartan[k][i])
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            let sc = RootDatum::from_big(n, roots, coroots, None)?;
            let f = IsogenyMap::new(sc.clone(), d.clone(), map)?;
            Ok((sc, f))
        }
        IsogenyKind::Adjoint => {
            // v ↦ (⟨αᵢ, v⟩)ᵢ ⊕ (coordinates of v modulo the coroot span).
            let span = d.coroot_span();
            let complement = if span.rank() == 0 {
                IntMatrix::identity(n)
            } else {
                integer_kernel(span.basis())
            };
            let map = IntMatrix::vstack(&[&d.root_matrix(), &complement], n);
            let unit = |i: usize| -> Vec<BigInt> {
                (0..n).map(|k| BigInt::from(u8::from(k == i))).collect()
            };
            let roots = (0..l).map(unit).collect();
            let coroots = (0..l)
                .map(|i| {
                    (0..n)
                        .map(|k| {
                            if k < l {
                                BigInt::from(cartan[i][k])
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            let ad = RootDatum::from_big(n, roots, coroots, None)?;
            let f = IsogenyMap::new(d.clone(), ad.clone(), map)?;
            Ok((ad, f))
        }
    }
}

/// As [`isogeny_datum`], but refuses data with a central torus.
pub fn isogeny_datum_strict(d: &RootDatum, kind: IsogenyKind) -> Result<(RootDatum, IsogenyMap)> {
    if !d.is_semisimple() {
        return Err(Error::NotSemisimple {
            rank: d.rank(),
            semisimple_rank: d.semisimple_rank(),
        });
    }
    isogeny_datum(d, kind)
}
