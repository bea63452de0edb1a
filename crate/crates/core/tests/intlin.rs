mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use galh1::intlin::{
    format_rational, hermite_rows, integer_kernel, integer_solve, lattice_quotient_invariants,
    parse_rational, smith_normal_form, IntMatrix, Lattice, QuotientGroup, RatVector,
};
use galh1::oracle::brute_torsion_profile;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_is_a_diagonal_factorization(rows in matrix(3, 4)) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs() == BigInt::from(1));
        prop_assert!(s.v.determinant().abs() == BigInt::from(1));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        prop_assert_eq!(s.rank(), m.rank());
    }

    #[test]
    fn hermite_spans_the_same_lattice(rows in matrix(4, 3)) {
        let m = IntMatrix::from_rows(&rows);
        let (h, pivots) = hermite_rows(&m);
        let a = Lattice::from_generators(&m);
        let b = Lattice::from_generators(&h);
        prop_assert!(a.contains_lattice(&b) && b.contains_lattice(&a));
        prop_assert_eq!(pivots.len(), m.rank());
        for w in pivots.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn kernel_and_solve(rows in matrix(2, 4), x in prop::collection::vec(-5i64..=5, 4)) {
        let m = IntMatrix::from_rows(&rows);
        let k = integer_kernel(&m);
        for r in k.rows() {
            prop_assert!(m.apply(r).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(k.nrows(), 4 - m.rank());
        let b = m.apply(&common::big(&x));
        let y = integer_solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.apply(&y), b);
    }

    #[test]
    fn quotient_matches_element_count(rows in matrix(3, 3)) {
        let n = 3;
        let mut rels = rows.clone();
        rels.extend((0..n).map(|i| (0..n).map(|j| if i == j { 6 } else { 0 }).collect::<Vec<i64>>()));
        let small = Lattice::from_rows(n, &rels);
        let q = QuotientGroup::new(&Lattice::standard(n), &small).unwrap();
        let factors = q.invariant_factors().to_vec();
        let profile = brute_torsion_profile(n, &rels, 6).unwrap();
        for (m, count) in (1..=6u64).zip(profile) {
            let expect: u64 = factors.iter().map(|d| d.gcd(&BigInt::from(m)).to_u64().unwrap()).product();
            prop_assert_eq!(expect, count);
        }
        let elements = q.elements().unwrap();
        prop_assert_eq!(BigInt::from(elements.len()), q.order().unwrap());
    }

    #[test]
    fn rational_round_trip(n in -50i64..50, d in 1i64..20) {
        let v = RatVector::from_i64(&[n], d);
        let text = format_rational(&v.get(0));
        prop_assert_eq!(parse_rational(&text).unwrap(), v.get(0));
    }
}

#[test]
fn invariants_with_free_part() {
    let big = Lattice::standard(3);
    let small = Lattice::from_rows(3, &[[2, 0, 0], [0, 3, 0]]);
    let f = lattice_quotient_invariants(&big, &small).unwrap();
    assert_eq!(f, vec![BigInt::from(1), BigInt::from(6), BigInt::from(0)]);
    assert!(QuotientGroup::new(&small, &big).is_err());
}

#[test]
fn sum_and_intersection() {
    let a = Lattice::from_rows(2, &[[2, 0], [0, 1]]);
    let b = Lattice::from_rows(2, &[[3, 0], [0, 1]]);
    let meet = a.intersection(&b);
    assert!(meet.contains(&common::big(&[6, 0])) && !meet.contains(&common::big(&[2, 0])));
    assert!(a.sum(&b).contains_lattice(&Lattice::standard(2)));
    assert_eq!(
        Lattice::standard(2).index_of(&meet).unwrap(),
        Some(BigInt::from(6))
    );
}
