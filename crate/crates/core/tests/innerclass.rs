use galh1::catalog::named_real_form;
use galh1::innerclass::{validate_inner_class, InnerClass, RootType};
use galh1::intlin::IntMatrix;
use galh1::rootdata::RootDatum;
use galh1::Error;

fn a2() -> RootDatum {
    RootDatum::new(2, &[[2, -1], [-1, 2]], &[[1, 0], [0, 1]]).unwrap()
}

#[test]
fn compact_and_outer_classes() {
    let compact = InnerClass::compact(a2());
    assert!(compact.is_equal_rank());
    assert_eq!(compact.imaginary_root_subsystem().roots.len(), 6);
    let outer = InnerClass::from_diagram(a2(), vec![1, 0]).unwrap();
    assert!(!outer.is_equal_rank());
    assert_eq!(outer.fixed_sublattice(1).rank(), 1);
    assert!(validate_inner_class(&outer).is_ok());
    let types = outer.classify_all(outer.tau0()).unwrap();
    assert!(types.contains(&RootType::Complex));
}

#[test]
fn validation_errors() {
    let swap = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
    let e = InnerClass::new(a2(), vec![0, 1], swap).unwrap_err();
    assert_eq!(e, Error::NotBasedCompatible(0));
    let e =
        InnerClass::new(a2(), vec![0, 1], IntMatrix::from_rows(&[[-1, 0], [0, -1]])).unwrap_err();
    assert_eq!(e, Error::ChamberViolation(0));
    let e = InnerClass::new(a2(), vec![1, 1], IntMatrix::identity(2)).unwrap_err();
    assert!(matches!(e, Error::NotInvolutive(_)));
}

#[test]
fn split_forms_have_levi_mf() {
    let f = named_real_form("sl(5,R)").unwrap();
    let (mf, mic) = f.ic.centralizer_mf_datum().unwrap();
    assert!(mic.perm().iter().enumerate().all(|(i, &p)| i == p));
    assert!(mf.semisimple_rank() < f.datum.semisimple_rank());
    let e6 = named_real_form("e6.split").unwrap();
    let (mf, _) = e6.ic.centralizer_mf_datum().unwrap();
    assert_eq!(mf.semisimple_rank(), 4);
}
