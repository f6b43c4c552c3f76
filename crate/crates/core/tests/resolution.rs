use superfit::fitting::GenericSetup;
use superfit::resolution::{
    buchsbaum_rim, check_complex, compare, default_j_max, predict_conjecture41, resolve, resolve_complex, ShapeReading,
};

#[test]
fn even_maps_follow_buchsbaum_rim() {
    for (d, m) in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4)] {
        let s = GenericSetup::new(d, 0, m, 0, 0).unwrap();
        let i_max = m - d + 1;
        let table = resolve(&s.phi, i_max, default_j_max(d, 0)).unwrap();
        let br = buchsbaum_rim(d, m, i_max).unwrap();
        assert!(compare(&table, &br).exact_match(), "({d},{m})\n{table}\n{br}");
    }
}

#[test]
fn resolutions_are_exact_minimal_complexes() {
    for (d, e, m, n) in [(1, 1, 1, 1), (1, 0, 1, 1), (0, 1, 1, 1), (1, 1, 2, 0), (2, 0, 3, 0)] {
        let s = GenericSetup::new(d, e, m, n, 0).unwrap();
        let res = resolve_complex(&s.phi, 3, default_j_max(d, e)).unwrap();
        let checks = check_complex(&res).unwrap();
        assert!(checks.passed(), "{:?}: {checks:?}", s.spec);
        assert!(!checks.euler.is_empty());
    }
}

#[test]
fn exterior_reading_matches_small_cases() {
    for (d, e, m, n) in [(1, 1, 1, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 2, 1)] {
        let s = GenericSetup::new(d, e, m, n, 0).unwrap();
        let table = resolve(&s.phi, 3, default_j_max(d, e)).unwrap();
        let p = predict_conjecture41(d, e, m, n, 3, ShapeReading::Exterior);
        assert!(compare(&table, &p.table).exact_match(), "{:?}\n{table}\n{}", s.spec, p.table);
    }
}

#[test]
fn readings_agree_on_the_two_by_two_case() {
    let a = predict_conjecture41(1, 1, 1, 1, 3, ShapeReading::Exterior);
    let b = predict_conjecture41(1, 1, 1, 1, 3, ShapeReading::Literal);
    assert!(compare(&a.table, &b.table).exact_match());
    let a = predict_conjecture41(2, 0, 3, 0, 3, ShapeReading::Exterior);
    let b = predict_conjecture41(2, 0, 3, 0, 3, ShapeReading::Literal);
    assert!(!compare(&a.table, &b.table).totals_match());
}

#[test]
fn presentation_degrees() {
    let s = GenericSetup::new(1, 1, 2, 1, 0).unwrap();
    let table = resolve(&s.phi, 1, default_j_max(1, 1)).unwrap();
    assert_eq!(table.get(0, 0), (1, 1));
    assert_eq!(table.get(1, 1), (2, 1));
}
