use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::central::{CentralInvariantGroup, InvariantCocharacter};
use super::tate::{torus_tate_h0, TwoGroup};
use crate::error::{Error, Result};
use crate::innerclass::InnerClass;
use crate::intlin::{IntMatrix, Lattice, RatVector};

/// Default cap on `|F(ζ)|`.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// Which Weyl subgroup acts on `F(ζ)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GeneratorSet {
    /// Reflections in the simple imaginary roots.
    #[default]
    Wi,
    /// Reflections in the `δ`-fixed simple roots.
    W0,
    /// Caller-supplied matrices.
    Custom,
}

impl GeneratorSet {
    pub fn generators(self, ic: &InnerClass) -> Vec<IntMatrix> {
        match self {
            GeneratorSet::Wi => ic.imaginary_root_subsystem().reflections,
            GeneratorSet::W0 => ic.w0_generators(),
            GeneratorSet::Custom => Vec::new(),
        }
    }
}

/// `F(ζ) = (½ζ + ½Q) mod ½(1+τ₀)X₊` with an optional orbit partition.
///
/// Elements are the canonical representatives `u`, sorted ascending.
#[derive(Clone, Debug)]
pub struct StrongClassSet {
    zeta: InvariantCocharacter,
    group: TwoGroup,
    elements: Vec<RatVector>,
    index: HashMap<RatVector, usize>,
    orbits: Option<Vec<Vec<usize>>>,
    generator_set: Option<GeneratorSet>,
}

impl StrongClassSet {
    pub fn zeta(&self) -> &InvariantCocharacter {
        &self.zeta
    }

    pub fn two_group(&self) -> &TwoGroup {
        &self.group
    }

    pub fn elements(&self) -> &[RatVector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Orbits as ascending index lists, sorted by smallest member.
    pub fn orbits(&self) -> Option<&[Vec<usize>]> {
        self.orbits.as_deref()
    }

    pub fn generator_set(&self) -> Option<GeneratorSet> {
        self.generator_set
    }

    /// Orbit representatives (smallest element of each orbit).
    pub fn representatives(&self) -> Option<Vec<RatVector>> {
        Some(
            self.orbits
                .as_ref()?
                .iter()
                .map(|o| self.elements[o[0]].clone())
                .collect(),
        )
    }

    /// Canonical representative of `u` modulo `½(1+τ₀)X₊`.
    pub fn canonical(&self, u: &RatVector) -> RatVector {
        self.group.reduce(&u.double()).half()
    }

    /// Index of the element equivalent to `u`, if it lies in `F(ζ)`.
    pub fn position(&self, u: &RatVector) -> Option<usize> {
        self.index.get(&self.canonical(u)).copied()
    }
}

/// Enumerates `F(ζ)` with the default cap.
pub fn strong_class_set(z: &InvariantCocharacter) -> Result<StrongClassSet> {
    strong_class_set_capped(z, DEFAULT_CAP)
}

pub fn strong_class_set_capped(z: &InvariantCocharacter, cap: u64) -> Result<StrongClassSet> {
    let ic = z.inner_class();
    let n = ic.datum().rank();
    let group = torus_tate_h0(ic.tau0(), &Lattice::standard(n))?;
    let size = group.order();
    if size > BigInt::from(cap) {
        return Err(Error::TooLarge {
            size: size.to_string(),
            cap: cap.to_string(),
        });
    }
    // v = 2u ranges over ζ + Σ εⱼ gⱼ modulo (1+τ₀)X₊.
    let mut vs = vec![z.zeta().clone()];
    for g in group.generators() {
        let shifted: Vec<RatVector> = vs.iter().map(|v| v.add_ints(g)).collect();
        vs.extend(shifted);
    }
    let mut elements: Vec<RatVector> = vs.iter().map(|v| group.reduce(v).half()).collect();
    elements.sort();
    elements.dedup();
    debug_assert_eq!(elements.len().to_u64(), size.to_u64());
    let index = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, u)| (u, i))
        .collect();
    Ok(StrongClassSet {
        zeta: z.clone(),
        group,
        elements,
        index,
        orbits: None,
        generator_set: None,
    })
}

/// Partitions `F` into orbits of the group generated by `gens`.
pub fn weyl_orbit_partition(
    f: &StrongClassSet,
    gens: &[IntMatrix],
    set: GeneratorSet,
) -> Result<StrongClassSet> {
    let tau = f.zeta.inner_class().tau0();
    for (i, g) in gens.iter().enumerate() {
        if g.nrows() != tau.nrows() || g.ncols() != tau.ncols() || g.mul(tau) != tau.mul(g) {
            return Err(Error::GeneratorIncompatible(i));
        }
    }
    let mut orbit_of = vec![usize::MAX; f.len()];
    let mut orbits = Vec::new();
    for start in 0..f.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let u = &f.elements[members[k]];
            for (i, g) in gens.iter().enumerate() {
                let j = f
                    .position(&g.apply_rat(u))
                    .ok_or(Error::GeneratorIncompatible(i))?;
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }
    let mut out = f.clone();
    out.orbits = Some(orbits);
    out.generator_set = Some(set);
    Ok(out)
}

/// `|H¹(σ, G)|` for the real forms with central invariant `[ζ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Result {
    pub count: usize,
    pub representatives: Vec<RatVector>,
    pub orbit_sizes: Vec<usize>,
    /// `|F(ζ)|`.
    pub set_size: usize,
}

pub fn h1_count(z: &InvariantCocharacter, set: GeneratorSet) -> Result<H1Result> {
    h1_count_capped(z, set, DEFAULT_CAP)
}

pub fn h1_count_capped(z: &InvariantCocharacter, set: GeneratorSet, cap: u64) -> Result<H1Result> {
    let f = strong_class_set_capped(z, cap)?;
    let gens = set.generators(z.inner_class());
    let f = weyl_orbit_partition(&f, &gens, set)?;
    let orbits = f.orbits().expect("partitioned");
    Ok(H1Result {
        count: orbits.len(),
        representatives: f.representatives().expect("partitioned"),
        orbit_sizes: orbits.iter().map(Vec::len).collect(),
        set_size: f.len(),
    })
}

/// The same count computed on the equal rank Levi `M_f`.
pub fn h1_via_mf(z: &InvariantCocharacter) -> Result<usize> {
    let (_, mf_ic) = z.inner_class().centralizer_mf_datum()?;
    let mz = InvariantCocharacter::new(mf_ic, z.zeta().clone())?;
    Ok(h1_count(&mz, GeneratorSet::Wi)?.count)
}

/// One row of the strong real form profile.
#[derive(Clone, Debug)]
pub struct ProfileEntry {
    pub class: Vec<BigInt>,
    pub cocharacter: RatVector,
    pub h1: Result<(InvariantCocharacter, H1Result)>,
}

/// `|H¹|` for every central invariant class of the inner class.
pub fn srf_profile(ic: &InnerClass, set: GeneratorSet) -> Vec<ProfileEntry> {
    CentralInvariantGroup::new(ic)
        .classes()
        .into_iter()
        .map(|c| ProfileEntry {
            class: c.coords,
            cocharacter: c.cocharacter,
            h1: c.zeta.and_then(|z| h1_count(&z, set).map(|r| (z, r))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootDatum;

    fn sl2() -> InnerClass {
        InnerClass::compact(RootDatum::new(1, &[[2]], &[[1]]).unwrap())
    }

    /// SL₄ on the sum-zero sublattice, basis `e_k − e_{k+1}`, outer class.
    fn sl4_outer() -> InnerClass {
        let c = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];
        let roots: Vec<Vec<i64>> = (0..3).map(|j| (0..3).map(|i| c[i][j]).collect()).collect();
        let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|r: [i64; 3]| r.to_vec());
        let d = RootDatum::new(3, &roots, id.as_ref()).unwrap();
        InnerClass::from_diagram(d, vec![2, 1, 0]).unwrap()
    }

    fn count(ic: &InnerClass, zeta: RatVector) -> usize {
        let z = InvariantCocharacter::new(ic.clone(), zeta).unwrap();
        h1_count(&z, GeneratorSet::Wi).unwrap().count
    }

    #[test]
    fn sl2_forms() {
        let ic = sl2();
        assert_eq!(count(&ic, RatVector::from_i64(&[0], 1)), 2);
        assert_eq!(count(&ic, RatVector::from_i64(&[1], 2)), 1);
        let f = strong_class_set(&InvariantCocharacter::trivial(ic.clone())).unwrap();
        assert_eq!(f.len(), 2);
        let (classes, factors) = super::super::central_invariant_classgroup(&ic);
        assert_eq!(factors, vec![BigInt::from(2)]);
        assert_eq!(classes.len(), 2);
        let total: usize = srf_profile(&ic, GeneratorSet::Wi)
            .iter()
            .map(|e| e.h1.as_ref().unwrap().1.count)
            .sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn sl4_outer_classes() {
        let ic = sl4_outer();
        let profile = srf_profile(&ic, GeneratorSet::Wi);
        let counts: Vec<usize> = profile
            .iter()
            .map(|e| e.h1.as_ref().unwrap().1.count)
            .collect();
        assert_eq!(counts, vec![2, 1]);
        for e in &profile {
            let (z, r) = e.h1.as_ref().unwrap();
            assert_eq!(h1_via_mf(z).unwrap(), r.count);
            assert_eq!(h1_count(z, GeneratorSet::W0).unwrap().count, r.count);
        }
    }

    #[test]
    fn cap_and_bad_generators() {
        let z = InvariantCocharacter::trivial(sl2());
        assert!(matches!(
            strong_class_set_capped(&z, 1),
            Err(Error::TooLarge { .. })
        ));
        let z = InvariantCocharacter::new(sl2(), RatVector::from_i64(&[1], 2)).unwrap();
        let f = strong_class_set(&z).unwrap();
        let id = IntMatrix::identity(1);
        let doubling = IntMatrix::from_rows(&[[2]]);
        let err = weyl_orbit_partition(&f, &[id, doubling], GeneratorSet::Custom).unwrap_err();
        assert_eq!(err, Error::GeneratorIncompatible(1));
        let wrong_shape = IntMatrix::identity(2);
        assert_eq!(
            weyl_orbit_partition(&f, &[wrong_shape], GeneratorSet::Custom).unwrap_err(),
            Error::GeneratorIncompatible(0)
        );
    }
}
