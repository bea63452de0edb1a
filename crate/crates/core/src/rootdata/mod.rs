//! Root data of complex reductive groups.
//!
//! Characters and cocharacters are both `ℤⁿ` with the dot pairing. Linear
//! maps act on column vectors.

mod cartan;
mod isogeny;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlin::{IntMatrix, Lattice, QuotientGroup, RatLattice};

pub use cartan::{cartan_type, CartanComponent};
pub use isogeny::{isogeny_datum, isogeny_datum_strict, IsogenyKind, IsogenyMap};

/// A validated root datum: simple roots in `X^* = ℤⁿ`, simple coroots in
/// `X₊ = ℤⁿ`.
#[derive(Clone, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<BigInt>>,
    simple_coroots: Vec<Vec<BigInt>>,
    name: Option<String>,
    cartan: Vec<Vec<i64>>,
    components: Vec<CartanComponent>,
    system: RootSystem,
}

/// The full root system of a datum.
///
/// Positive roots come first, ordered by height and then lexicographically
/// by their simple-root coefficients; entry `i + N` is the negative of entry
/// `i`, where `N` is the number of positive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub roots: Vec<Vec<BigInt>>,
    pub coroots: Vec<Vec<BigInt>>,
    /// Simple-root coefficients of each root.
    pub coefficients: Vec<Vec<i64>>,
    /// `reflection_index[i][k]` is the index of `s_{αᵢ}(root k)`.
    pub reflection_index: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn height(&self, k: usize) -> i64 {
        self.coefficients[k].iter().sum()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.positive_count()
    }

    pub fn index_of_root(&self, root: &[BigInt]) -> Option<usize> {
        self.roots.iter().position(|r| r.as_slice() == root)
    }

    pub fn index_of_coroot(&self, coroot: &[BigInt]) -> Option<usize> {
        self.coroots.iter().position(|r| r.as_slice() == coroot)
    }
}

impl RootDatum {
    /// Validates and builds a datum from integer rows.
    pub fn new<R: AsRef<[i64]>>(
        rank: usize,
        simple_roots: &[R],
        simple_coroots: &[R],
    ) -> Result<Self> {
        let conv = |rows: &[R]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        Self::from_big(rank, conv(simple_roots), conv(simple_coroots), None)
    }

    pub fn from_big(
        rank: usize,
        simple_roots: Vec<Vec<BigInt>>,
        simple_coroots: Vec<Vec<BigInt>>,
        name: Option<String>,
    ) -> Result<Self> {
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        if simple_roots.len() > rank {
            return Err(Error::DimensionMismatch(format!(
                "{} simple roots exceed rank {rank}",
                simple_roots.len()
            )));
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            if v.len() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in a rank {rank} datum",
                    v.len()
                )));
            }
        }
        let l = simple_roots.len();
        if IntMatrix::from_big_rows(simple_roots.clone(), rank).rank() < l {
            return Err(Error::LinearlyDependent("simple roots"));
        }
        if IntMatrix::from_big_rows(simple_coroots.clone(), rank).rank() < l {
            return Err(Error::LinearlyDependent("simple coroots"));
        }
        let mut cartan = vec![vec![0i64; l]; l];
        for (i, row) in cartan.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                let p = dot(&simple_roots[j], &simple_coroots[i]);
                *c = p
                    .to_i64()
                    .filter(|x| x.abs() <= 3)
                    .ok_or_else(|| Error::NotFiniteType(format!("pairing ({i},{j}) is {p}")))?;
            }
        }
        let components = cartan_type(&cartan)?;
        let bound = 2 * components
            .iter()
            .map(CartanComponent::positive_roots)
            .sum::<usize>();
        let system = close_roots(&simple_roots, &simple_coroots, &cartan, rank, bound)?;
        Ok(RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            name,
            cartan,
            components,
            system,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Dimension `n` of `X₊`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number `ℓ` of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn is_semisimple(&self) -> bool {
        self.semisimple_rank() == self.rank
    }

    pub fn simple_roots(&self) -> &[Vec<BigInt>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<BigInt>] {
        &self.simple_coroots
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `C[i][j] = ⟨αⱼ, αᵢ^∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn components(&self) -> &[CartanComponent] {
        &self.components
    }

    /// Type string such as `A1xA1`, or `T` for a torus.
    pub fn type_label(&self) -> String {
        let mut s: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        if !self.is_semisimple() {
            s.push(format!("T{}", self.rank - self.semisimple_rank()));
        }
        s.join("x")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.system
    }

    /// Matrix of simple-root rows, `ℓ × n`.
    pub fn root_matrix(&self) -> IntMatrix {
        IntMatrix::from_big_rows(self.simple_roots.clone(), self.rank)
    }

    /// Matrix of simple-coroot rows, `ℓ × n`.
    pub fn coroot_matrix(&self) -> IntMatrix {
        IntMatrix::from_big_rows(self.simple_coroots.clone(), self.rank)
    }

    /// Swaps roots and coroots.
    pub fn dual(&self) -> RootDatum {
        RootDatum::from_big(
            self.rank,
            self.simple_coroots.clone(),
            self.simple_roots.clone(),
            None,
        )
        .expect("dual of a valid datum is valid")
    }

    /// The same datum in new coordinates `v ↦ u·v` on `X₊`; roots transform
    /// by the inverse transpose. `u` must be unimodular.
    pub fn change_basis(&self, u: &IntMatrix) -> Result<RootDatum> {
        let (inv, den) = u.inverse()?;
        if den != BigInt::from(1) || u.nrows() != self.rank {
            return Err(Error::DimensionMismatch(
                "change of basis must be unimodular".into(),
            ));
        }
        let inv_t = inv.transpose();
        RootDatum::from_big(
            self.rank,
            self.simple_roots.iter().map(|r| inv_t.apply(r)).collect(),
            self.simple_coroots.iter().map(|c| u.apply(c)).collect(),
            self.name.clone(),
        )
    }

    /// Matrix of `s_α: v ↦ v − ⟨α, v⟩α^∨` on `X₊` for root index `k`.
    pub fn reflection(&self, k: usize) -> Result<IntMatrix> {
        let size = self.system.len();
        if k >= size {
            return Err(Error::IndexOutOfRange { index: k, size });
        }
        Ok(reflection_matrix(
            &self.system.roots[k],
            &self.system.coroots[k],
        ))
    }

    /// Reflection in the `i`-th simple root.
    pub fn simple_reflection(&self, i: usize) -> IntMatrix {
        reflection_matrix(&self.simple_roots[i], &self.simple_coroots[i])
    }

    /// `X₊ ∩ ℚ·Δ^∨`, the saturation of the coroot lattice.
    pub fn coroot_span(&self) -> Lattice {
        Lattice::from_vectors(self.rank, &self.simple_coroots).saturation()
    }

    /// `{v ∈ X₊ : ⟨α, v⟩ = 0 for all roots α}`.
    pub fn radical(&self) -> Lattice {
        Lattice::standard(self.rank).kernel_of(&self.root_matrix())
    }

    /// Fundamental coweights `ωᵢ^∨` in the coroot span with `⟨αⱼ, ωᵢ^∨⟩ = δᵢⱼ`,
    /// as rows `ωᵢ^∨ = (Σₖ cᵢₖ αₖ^∨) / den`.
    pub fn fundamental_coweights(&self) -> (IntMatrix, BigInt) {
        let l = self.semisimple_rank();
        if l == 0 {
            return (IntMatrix::zeros(0, self.rank), BigInt::from(1));
        }
        let c = IntMatrix::from_rows(&self.cartan);
        let (inv, den) = c.inverse().expect("Cartan matrix is invertible");
        (inv.mul(&self.coroot_matrix()), den)
    }
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("name", &self.name)
            .field("type", &self.type_label())
            .field("rank", &self.rank)
            .field("simple_roots", &self.root_matrix())
            .field("simple_coroots", &self.coroot_matrix())
            .finish()
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflection_matrix(root: &[BigInt], coroot: &[BigInt]) -> IntMatrix {
    let n = root.len();
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j) - &coroot[i] * &root[j];
            m.set(i, j, v);
        }
    }
    m
}

/// Closure of the simple roots under simple reflections, on coefficient
/// vectors, with the coroot of each root tracked alongside.
fn close_roots(
    simple_roots: &[Vec<BigInt>],
    simple_coroots: &[Vec<BigInt>],
    cartan: &[Vec<i64>],
    rank: usize,
    bound: usize,
) -> Result<RootSystem> {
    let l = cartan.len();
    let unit = |i: usize| -> Vec<i64> { (0..l).map(|k| i64::from(k == i)).collect() };
    // s_i on root coefficients: c_i -= Σ_j C[i][j] c_j; on coroot coefficients: d_i -= Σ_j C[j][i] d_j.
    let reflect_root = |i: usize, c: &[i64]| -> Vec<i64> {
        let mut out = c.to_vec();
        out[i] -= (0..l).map(|j| cartan[i][j] * c[j]).sum::<i64>();
        out
    };
    let reflect_coroot = |i: usize, d: &[i64]| -> Vec<i64> {
        let mut out = d.to_vec();
        out[i] -= (0..l).map(|j| cartan[j][i] * d[j]).sum::<i64>();
        out
    };
    let mut pos: Vec<(Vec<i64>, Vec<i64>)> = (0..l).map(|i| (unit(i), unit(i))).collect();
    let mut seen: HashSet<Vec<i64>> = pos.iter().map(|p| p.0.clone()).collect();
    let mut k = 0;
    while k < pos.len() {
        for i in 0..l {
            let (c, d) = &pos[k];
            let nc = reflect_root(i, c);
            if nc.iter().any(|&x| x < 0) || seen.contains(&nc) {
                continue;
            }
            let nd = reflect_coroot(i, d);
            seen.insert(nc.clone());
            pos.push((nc, nd));
            if 2 * pos.len() > bound {
                return Err(Error::NotFiniteType(format!(
                    "root closure exceeds {bound} roots"
                )));
            }
        }
        k += 1;
    }
    pos.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
    });
    let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| -x).collect() };
    let all: Vec<(Vec<i64>, Vec<i64>)> = pos
        .iter()
        .cloned()
        .chain(pos.iter().map(|(c, d)| (neg(c), neg(d))))
        .collect();
    let combine = |coeffs: &[i64], basis: &[Vec<BigInt>]| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); rank];
        for (c, b) in coeffs.iter().zip(basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += y * c;
            }
        }
        v
    };
    let index: std::collections::HashMap<&[i64], usize> = all
        .iter()
        .enumerate()
        .map(|(k, (c, _))| (c.as_slice(), k))
        .collect();
    let reflection_index = (0..l)
        .map(|i| {
            all.iter()
                .map(|(c, _)| index[reflect_root(i, c).as_slice()])
                .collect()
        })
        .collect();
    Ok(RootSystem {
        roots: all.iter().map(|(c, _)| combine(c, simple_roots)).collect(),
        coroots: all
            .iter()
            .map(|(_, d)| combine(d, simple_coroots))
            .collect(),
        coefficients: all.into_iter().map(|(c, _)| c).collect(),
        reflection_index,
    })
}

/// The full root system of `d`.
pub fn generate_all_roots(d: &RootDatum) -> Result<RootSystem> {
    let bound = 2 * d
        .components
        .iter()
        .map(CartanComponent::positive_roots)
        .sum::<usize>();
    close_roots(&d.simple_roots, &d.simple_coroots, &d.cartan, d.rank, bound)
}

/// Matrix of the reflection in root `root_index` acting on `X₊`.
pub fn reflection_action(d: &RootDatum, root_index: usize) -> Result<IntMatrix> {
    d.reflection(root_index)
}

/// `X₊ + Σ ℤωᵢ^∨`, the lattice with `L_Z / X₊` the torsion center of the
/// derived group. Equals `{v : ⟨α, v⟩ ∈ ℤ ∀α}` for semisimple data.
pub fn center_lattice(d: &RootDatum) -> RatLattice {
    let (w, den) = d.fundamental_coweights();
    let scaled_x = IntMatrix::identity(d.rank).scale(&den);
    let lattice = Lattice::from_generators(&IntMatrix::vstack(&[&scaled_x, &w], d.rank));
    RatLattice {
        scale: den,
        lattice,
    }
}

/// Invariant factors `d₁ | d₂ | …` (each `> 1`) of
/// `π₁ = (X₊ ∩ ℚΔ^∨) / ℤΔ^∨`; the trivial group is reported as `[1]`.
pub fn fundamental_group_invariants(d: &RootDatum) -> Vec<BigInt> {
    let span = d.coroot_span();
    let coroots = Lattice::from_vectors(d.rank, &d.simple_coroots);
    let q = QuotientGroup::new(&span, &coroots).expect("coroots lie in their span");
    let nontrivial = q.nontrivial_factors();
    if nontrivial.is_empty() {
        vec![BigInt::from(1)]
    } else {
        nontrivial
    }
}
