mod common;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use galh1::catalog::named_real_form;
use galh1::cohomology::{
    h1_count, h1_via_mf, strong_class_set, torus_tate_h0, weyl_orbit_partition, GeneratorSet,
};
use galh1::fibers::{finite_center_h1, FinitePresentation};
use galh1::intlin::{IntMatrix, Lattice};
use galh1::oracle::{brute_tate, FiniteAbelianPresentation, TateDegree};

#[test]
fn center_h1_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..200 {
        let (tau, rels) = common::random_tate_instance(&mut rng);
        let n = tau.nrows();
        let pres = |action: &IntMatrix| FinitePresentation {
            big: Lattice::standard(n),
            small: Lattice::from_rows(n, &rels),
            action: action.clone(),
        };
        let brute = FiniteAbelianPresentation {
            n,
            relations: rels.clone(),
            involution: common::small(&tau),
        };
        let h1 = finite_center_h1(&pres(&tau)).unwrap().order;
        assert_eq!(
            h1,
            BigInt::from(brute_tate(&brute, TateDegree::H1).unwrap()),
            "{tau:?} {rels:?}"
        );
        let h0 = finite_center_h1(&pres(&tau.neg())).unwrap().order;
        assert_eq!(
            h0,
            BigInt::from(brute_tate(&brute, TateDegree::H0).unwrap()),
            "{tau:?} {rels:?}"
        );
    }
}

#[test]
fn torus_tate_groups_account_for_two_torsion() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let tau = common::random_involution(&mut rng, n);
        let plus = torus_tate_h0(&tau, &Lattice::standard(n)).unwrap().order();
        let minus = torus_tate_h0(&tau.neg(), &Lattice::standard(n))
            .unwrap()
            .order();
        let two: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 2 } else { 0 }).collect())
            .collect();
        let brute = FiniteAbelianPresentation {
            n,
            relations: two,
            involution: common::small(&tau),
        };
        assert_eq!(
            (plus * minus).to_u64().unwrap(),
            brute_tate(&brute, TateDegree::H0).unwrap()
        );
    }
}

#[test]
fn orbit_partition_matches_brute_force() {
    for name in [
        "su(2,1)",
        "sl(4,R)",
        "sp(2,1)",
        "so(4,3)",
        "so(3,3)",
        "spin(4,4)",
        "so*(6)",
        "g2.split",
        "f4.split",
        "psu(2,2)",
    ] {
        let f = named_real_form(name).unwrap();
        let brute = common::brute_h1_form(&f);
        assert_eq!(
            h1_count(&f.zeta, GeneratorSet::Wi).unwrap().count,
            brute,
            "{name}"
        );
    }
}

#[test]
fn generator_sets_and_levi_agree() {
    for name in [
        "sl(5,R)",
        "sl(3,H)",
        "su(3,2)",
        "so(5,5)",
        "spin*(8)",
        "e6.quaternionic",
        "pso(6,4)",
    ] {
        let f = named_real_form(name).unwrap();
        let wi = h1_count(&f.zeta, GeneratorSet::Wi).unwrap();
        let w0 = h1_count(&f.zeta, GeneratorSet::W0).unwrap();
        assert_eq!(wi.count, w0.count, "{name}");
        assert_eq!(h1_via_mf(&f.zeta).unwrap(), wi.count, "{name}");
        assert_eq!(wi.orbit_sizes.iter().sum::<usize>(), wi.set_size);
    }
}

#[test]
fn incompatible_generators_are_rejected() {
    let f = named_real_form("sl(3,R)").unwrap();
    let set = strong_class_set(&f.zeta).unwrap();
    let bad = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
    if bad.mul(f.ic.tau0()) != f.ic.tau0().mul(&bad) {
        assert!(weyl_orbit_partition(&set, &[bad], GeneratorSet::Custom).is_err());
    }
}
