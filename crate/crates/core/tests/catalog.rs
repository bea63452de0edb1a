use galh1::catalog::{
    build, named_real_form, spin_quadratic_oracle, table_names, ExceptionalGroup, FormName, Table,
};
use galh1::cohomology::{h1_count, GeneratorSet};
use galh1::Error;

fn h1(name: &FormName) -> usize {
    let f = build(*name).unwrap();
    h1_count(&f.zeta, GeneratorSet::Wi).unwrap().count
}

#[test]
fn spin_matches_quadratic_oracle() {
    for s in 2..=16usize {
        for q in 0..=s {
            let name = FormName::Spin(s - q, q);
            assert_eq!(
                h1(&name) as u64,
                spin_quadratic_oracle((s - q) as u64, q as u64),
                "{name}"
            );
        }
    }
}

#[test]
fn e6_adjoint_equals_simply_connected() {
    for row in ExceptionalGroup::E6.forms() {
        let name = |adjoint| FormName::Exceptional {
            group: ExceptionalGroup::E6,
            form: row.0,
            adjoint,
        };
        let sc = build(name(false)).unwrap();
        let ad = build(name(true)).unwrap();
        assert_eq!(
            h1_count(&sc.zeta, GeneratorSet::Wi).unwrap().count,
            h1_count(&ad.zeta, GeneratorSet::Wi).unwrap().count,
            "{}",
            sc.name
        );
    }
}

#[test]
fn table_names_round_trip() {
    for table in Table::ALL {
        for name in table_names(table, 6) {
            let text = name.to_string();
            assert_eq!(text.parse::<FormName>().unwrap(), name);
            assert_eq!(named_real_form(&text).unwrap().name, name);
        }
    }
}

#[test]
fn errors() {
    assert!(matches!(
        named_real_form("su(0,0)"),
        Err(Error::InvalidSignature(_))
    ));
    assert!(matches!(
        named_real_form("pso(2,0)"),
        Err(Error::InvalidSignature(_))
    ));
    assert!(matches!(
        named_real_form("pso*'(6)"),
        Err(Error::InvalidSignature(_))
    ));
    assert!(matches!(
        named_real_form("h4.split"),
        Err(Error::UnknownName(_))
    ));
    assert!(matches!(
        named_real_form("sl(x,R)"),
        Err(Error::UnknownName(_)) | Err(Error::InvalidSignature(_))
    ));
}
