mod common;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

use galh1::catalog::named_real_form;
use galh1::oracle::brute_roots;
use galh1::rootdata::{
    center_lattice, fundamental_group_invariants, generate_all_roots, isogeny_datum,
    isogeny_datum_strict, IsogenyKind, RootDatum,
};
use galh1::Error;

fn roots_of(d: &RootDatum) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let conv = |rows: &[Vec<BigInt>]| {
        rows.iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    };
    (conv(d.simple_roots()), conv(d.simple_coroots()))
}

#[test]
fn root_counts_match_closure() {
    for (name, count) in [
        ("sl(5,R)", 20),
        ("so(4,3)", 18),
        ("sp(3,0)", 18),
        ("so(5,3)", 24),
        ("g2.split", 12),
        ("f4.split", 48),
        ("e6.compact", 72),
        ("e7.split", 126),
        ("e8.split", 240),
    ] {
        let d = named_real_form(name).unwrap().datum;
        assert_eq!(generate_all_roots(&d).unwrap().len(), count, "{name}");
        let (r, c) = roots_of(&d);
        assert_eq!(brute_roots(&r, &c, 1000).unwrap().len(), count, "{name}");
    }
}

#[test]
fn isogenies_and_fundamental_groups() {
    let sc = named_real_form("su(3,0)").unwrap().datum;
    assert_eq!(fundamental_group_invariants(&sc), vec![BigInt::from(1)]);
    let (ad, f) = isogeny_datum(&sc, IsogenyKind::Adjoint).unwrap();
    assert_eq!(fundamental_group_invariants(&ad), vec![BigInt::from(3)]);
    assert_eq!(f.kernel_order(), BigInt::from(3));
    let d4 = named_real_form("pso(8,0)").unwrap().datum;
    assert_eq!(
        fundamental_group_invariants(&d4),
        vec![BigInt::from(2), BigInt::from(2)]
    );
    let (back, g) = isogeny_datum(&d4, IsogenyKind::SimplyConnected).unwrap();
    assert_eq!(fundamental_group_invariants(&back), vec![BigInt::from(1)]);
    assert_eq!(g.kernel_order(), BigInt::from(4));
    let torus = RootDatum::new(1, &[] as &[[i64; 1]], &[]).unwrap();
    assert!(matches!(
        isogeny_datum_strict(&torus, IsogenyKind::Adjoint),
        Err(Error::NotSemisimple { .. })
    ));
}

#[test]
fn center_lattice_of_semisimple_groups_contains_coweights() {
    let d = named_real_form("sp(2,1)").unwrap().datum;
    let (w, den) = d.fundamental_coweights();
    let z = center_lattice(&d);
    for row in w.rows() {
        assert!(z.contains(&galh1::intlin::RatVector::new(row.to_vec(), den.clone())));
    }
}

#[test]
fn change_of_basis_preserves_type() {
    let mut rng = StdRng::seed_from_u64(7);
    for name in ["su(2,2)", "so(3,2)", "g2.split", "sp(4,R)"] {
        let d = named_real_form(name).unwrap().datum;
        let (u, _) = common::random_unimodular(&mut rng, d.rank(), 6);
        let e = d.change_basis(&u).unwrap();
        assert_eq!(e.cartan_matrix(), d.cartan_matrix());
        assert_eq!(e.root_system().len(), d.root_system().len());
        assert_eq!(
            fundamental_group_invariants(&e),
            fundamental_group_invariants(&d)
        );
    }
}

#[test]
fn rejects_bad_data() {
    let dependent = RootDatum::new(2, &[[1, 0], [2, 0]], &[[2, 0], [1, 0]]);
    assert!(matches!(dependent, Err(Error::LinearlyDependent(_))));
    let affine = RootDatum::new(2, &[[2, -2], [-2, 2]], &[[1, 0], [0, 1]]);
    assert!(matches!(
        affine,
        Err(Error::LinearlyDependent(_)) | Err(Error::NotFiniteType(_))
    ));
    let d = RootDatum::new(1, &[[2]], &[[1]]).unwrap();
    assert!(matches!(
        d.reflection(5),
        Err(Error::IndexOutOfRange { .. })
    ));
}
