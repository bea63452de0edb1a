use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::innerclass::InnerClass;
use crate::intlin::{integer_solve, IntMatrix, Lattice, QuotientGroup, RatVector};

/// A `τ₀`-fixed rational cocharacter `ζ` pairing integrally with every
/// root, so that `exp(2πiζ)` is central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCocharacter {
    ic: InnerClass,
    zeta: RatVector,
}

impl InvariantCocharacter {
    pub fn new(ic: InnerClass, zeta: RatVector) -> Result<Self> {
        let n = ic.datum().rank();
        if zeta.len() != n {
            return Err(Error::InvalidCocharacter(format!(
                "length {} in rank {n}",
                zeta.len()
            )));
        }
        if ic.tau0().apply_rat(&zeta) != zeta {
            return Err(Error::InvalidCocharacter(format!(
                "{zeta} is not fixed by tau0"
            )));
        }
        if let Some(i) = ic
            .datum()
            .simple_roots()
            .iter()
            .position(|a| !zeta.pair(a).is_integer())
        {
            return Err(Error::InvalidCocharacter(format!(
                "{zeta} pairs non-integrally with simple root {i}"
            )));
        }
        Ok(InvariantCocharacter { ic, zeta })
    }

    pub fn trivial(ic: InnerClass) -> Self {
        let n = ic.datum().rank();
        InvariantCocharacter {
            ic,
            zeta: RatVector::zero(n),
        }
    }

    pub fn inner_class(&self) -> &InnerClass {
        &self.ic
    }

    pub fn zeta(&self) -> &RatVector {
        &self.zeta
    }
}

/// The group `C_δ = Z_tor^δ / (1+δ)Z_tor` of central invariants, realized
/// as `K/M` with cocharacters scaled by `2N`.
///
/// Here `N = 2e` with `e` the denominator of the fundamental coweights,
/// `K = {w ∈ 2ℤⁿ : ⟨α, w⟩ ∈ 2Nℤ, (1−τ₀)w ∈ 2Nℤⁿ}` and
/// `M = (2Nℤⁿ + (1+τ₀)·{w : ⟨α, w⟩ ∈ 2Nℤ}) ∩ 2ℤⁿ`.
#[derive(Clone, Debug)]
pub struct CentralInvariantGroup {
    ic: InnerClass,
    scale: BigInt,
    quotient: QuotientGroup,
}

/// One element of `C_δ` with its `τ₀`-fixed representative, if any.
#[derive(Clone, Debug)]
pub struct CentralClass {
    /// Coordinates against the invariant-factor generators.
    pub coords: Vec<BigInt>,
    /// Some cocharacter representing the class (not necessarily fixed).
    pub cocharacter: RatVector,
    pub zeta: Result<InvariantCocharacter>,
}

impl CentralInvariantGroup {
    pub fn new(ic: &InnerClass) -> Self {
        let d = ic.datum();
        let n = d.rank();
        let (_, e) = d.fundamental_coweights();
        let big_n = BigInt::from(2) * e;
        let scale = BigInt::from(2) * &big_n;
        let roots = d.root_matrix();
        let tau = ic.tau0();
        let one = IntMatrix::identity(n);
        let even = Lattice::standard(n).scaled(&BigInt::from(2));
        let root_target = Lattice::standard(roots.nrows()).scaled(&scale);
        let stacked = IntMatrix::vstack(&[&roots, &one.sub(tau)], n);
        let k = even.preimage(
            &stacked,
            &Lattice::standard(roots.nrows() + n).scaled(&scale),
        );
        let l2n = Lattice::standard(n).preimage(&roots, &root_target);
        let m = Lattice::standard(n)
            .scaled(&scale)
            .sum(&l2n.image(&one.add(tau)))
            .intersection(&even);
        let quotient = QuotientGroup::new(&k, &m).expect("M ⊆ K");
        CentralInvariantGroup {
            ic: ic.clone(),
            scale,
            quotient,
        }
    }

    /// Invariant factors of `C_δ`, trivial ones omitted.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.quotient.nontrivial_factors()
    }

    pub fn order(&self) -> BigInt {
        self.quotient
            .order()
            .expect("central invariant group is finite")
    }

    /// Every class with its representative, in coordinate order; the
    /// trivial class comes first.
    pub fn classes(&self) -> Vec<CentralClass> {
        self.quotient
            .elements()
            .expect("finite")
            .into_iter()
            .map(|coords| {
                let w = self.quotient.element_vector(&coords);
                let v = RatVector::new(w, self.scale.clone());
                let zeta = self.fixed_representative(&v, &coords);
                CentralClass {
                    coords,
                    cocharacter: v,
                    zeta,
                }
            })
            .collect()
    }

    /// Finds `ζ = v + λ`, `λ ∈ X₊`, with `τ₀ζ = ζ`, reduced modulo `X₊^{τ₀}`.
    fn fixed_representative(
        &self,
        v: &RatVector,
        coords: &[BigInt],
    ) -> Result<InvariantCocharacter> {
        let n = self.ic.datum().rank();
        let one_minus = IntMatrix::identity(n).sub(self.ic.tau0());
        let x = one_minus.apply_rat(v);
        let x = x.as_integers().expect("(1−τ₀)v is integral on K");
        let neg: Vec<BigInt> = x.iter().map(|t| -t).collect();
        let lambda = integer_solve(&one_minus, &neg)
            .ok_or_else(|| Error::RepresentativeUnavailable(format!("{coords:?}")))?;
        let zeta = v.add_ints(&lambda);
        let q = self.ic.fixed_sublattice(1);
        InvariantCocharacter::new(self.ic.clone(), q.reduce_rat(&zeta))
    }

    /// Class coordinates of a cocharacter `v` with `⟨α, v⟩ ∈ ℤ` and
    /// `(1−τ₀)v ∈ X₊`.
    pub fn class_of(&self, v: &RatVector) -> Result<Vec<BigInt>> {
        let d = self.ic.datum();
        let n = d.rank();
        if v.len() != n {
            return Err(Error::InvalidCocharacter(format!(
                "length {} in rank {n}",
                v.len()
            )));
        }
        if d.simple_roots().iter().any(|a| !v.pair(a).is_integer()) {
            return Err(Error::InvalidCocharacter(format!("{v} is not central")));
        }
        let one_minus = IntMatrix::identity(n).sub(self.ic.tau0());
        if !one_minus.apply_rat(v).is_integral() {
            return Err(Error::InvalidCocharacter(format!(
                "{v} is not fixed modulo X"
            )));
        }
        // The τ₀-fixed part of the radical component lies in (1+τ₀)L_Z.
        let r = radical_component(&self.ic, v);
        let r_plus = r.add(&self.ic.tau0().apply_rat(&r)).half();
        let w = v.sub(&r_plus).scale(&self.scale, &BigInt::one());
        let w = w.as_integers().ok_or_else(|| {
            Error::InvalidCocharacter(format!("{v} has an unexpected denominator"))
        })?;
        self.quotient.classify(w).ok_or_else(|| {
            Error::InvalidCocharacter(format!("{v} is outside the invariant lattice"))
        })
    }
}

/// Component of `v` along the radical, complementary to the coroot span.
fn radical_component(ic: &InnerClass, v: &RatVector) -> RatVector {
    let d = ic.datum();
    let l = d.semisimple_rank();
    if l == 0 {
        return v.clone();
    }
    // v = Σ aᵢ αᵢ^∨ + r with ⟨αⱼ, r⟩ = 0, so Cᵀa = (⟨αⱼ, v⟩)ⱼ.
    let pairings: Vec<BigRational> = d.simple_roots().iter().map(|a| v.pair(a)).collect();
    let ct = IntMatrix::from_rows(d.cartan_matrix()).transpose();
    let a = ct
        .solve_rational(&pairings)
        .expect("Cartan matrix is invertible");
    let mut rest = v.to_rationals();
    for (ai, c) in a.iter().zip(d.simple_coroots()) {
        for (x, y) in rest.iter_mut().zip(c) {
            *x -= ai * BigRational::from_integer(y.clone());
        }
    }
    RatVector::from_rationals(&rest)
}

/// `C_δ` with one representative per class; see [`CentralInvariantGroup`].
pub fn central_invariant_classgroup(ic: &InnerClass) -> (Vec<CentralClass>, Vec<BigInt>) {
    let g = CentralInvariantGroup::new(ic);
    (g.classes(), g.invariant_factors())
}
