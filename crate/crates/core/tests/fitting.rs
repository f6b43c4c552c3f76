use proptest::prelude::*;
use superfit::fitting::{
    corollary2_z, filtration_dim, ideal_i_lambda, lambda_span, lie_apply, rho, specialize_ideal, verify_cor2, verify_thm1a,
    GenericSetup, LieGenerator,
};
use superfit::linalg::graded_dim;
use superfit::schur::{hook_schur_dim, lambda_de, partitions_of, Partition};
use superfit::superpoly::SuperPoly;

fn setup() -> impl Strategy<Value = GenericSetup> {
    (0usize..3, 0usize..3, 0usize..3, 0usize..3)
        .prop_filter("small", |(d, e, m, n)| d + e <= 3 && m + n <= 3)
        .prop_map(|(d, e, m, n)| GenericSetup::new(d, e, m, n, 0).unwrap())
}

fn shape() -> impl Strategy<Value = Partition> {
    (1u32..4).prop_flat_map(|t| prop::sample::select(partitions_of(t, None, None)))
}

fn rep_dim(l: &Partition, s: &GenericSetup) -> usize {
    let c = l.conjugate();
    (hook_schur_dim(&c, s.spec.m, s.spec.n) * hook_schur_dim(&c, s.spec.d, s.spec.e)) as usize
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn irreducible_pieces_have_hook_dimension(s in setup(), l in shape()) {
        prop_assert_eq!(lambda_span(&l, &s).unwrap().len(), rep_dim(&l, &s));
    }

    #[test]
    fn fitting_ideals_are_invariant(s in setup(), l in shape(), pick in any::<prop::sample::Index>()) {
        let span = lambda_span(&l, &s).unwrap();
        prop_assume!(!span.is_empty());
        let ideal = ideal_i_lambda(&l, &s).unwrap();
        let f = pick.get(&span);
        for g in LieGenerator::all(&s) {
            prop_assert!(ideal.contains(&lie_apply(&g, f, &s).unwrap()).unwrap());
        }
    }

    #[test]
    fn filtration_quotients(s in setup(), t in 1u32..4) {
        let mut total = 0;
        for l in partitions_of(t, None, None) {
            let q = filtration_dim(&l, &s).unwrap();
            prop_assert_eq!(q, rep_dim(&l, &s));
            total += q;
        }
        let (m, n, d, e) = (s.spec.m, s.spec.n, s.spec.d, s.spec.e);
        prop_assert_eq!(total as u128, graded_dim(m * d + n * e, m * e + n * d, t as usize));
    }
}

#[test]
fn rho_gives_minors_and_the_super_determinant() {
    let s = GenericSetup::new(2, 0, 2, 0, 0).unwrap();
    let minor = SuperPoly::parse(&s.ring, "x_1_1*x_2_2 - x_1_2*x_2_1").unwrap();
    assert_eq!(rho(&s, &[0, 1], &[0, 1]).unwrap(), minor);
    let s = GenericSetup::new(1, 1, 1, 1, 0).unwrap();
    let sdet = SuperPoly::parse(&s.ring, "x_1_1*y_1_1 - a_1_1*b_1_1").unwrap();
    assert_eq!(rho(&s, &[0, 1], &[0, 1]).unwrap(), sdet);
}

#[test]
fn corollary_element_generates_the_annihilator() {
    for (d, e, m, n) in [(1, 1, 2, 0), (1, 1, 1, 1), (0, 2, 2, 0), (1, 0, 2, 0), (0, 1, 0, 2), (1, 1, 1, 2), (0, 2, 0, 3)] {
        let s = GenericSetup::new(d, e, m, n, 0).unwrap();
        let z = corollary2_z(&s).unwrap();
        assert_eq!(z.degree(), Some(lambda_de(d as u32, e as u32).size()));
        assert!(verify_cor2(&s).unwrap().status.passed(), "{:?}", s.spec);
    }
    // neither m > d, n > e nor a square shape: the cokernel is free
    assert!(corollary2_z(&GenericSetup::new(2, 0, 1, 0, 0).unwrap()).is_err());
}

#[test]
fn specializing_to_the_generic_map_changes_nothing() {
    let s = GenericSetup::new(1, 1, 1, 1, 0).unwrap();
    let i = ideal_i_lambda(&lambda_de(1, 1), &s).unwrap();
    assert!(specialize_ideal(&i, &s, &s.phi).unwrap().equals(&i).unwrap());
}

#[test]
fn characteristic_dependence() {
    let report = |p| verify_thm1a(&GenericSetup::new(1, 2, 2, 0, p).unwrap()).unwrap().status.passed();
    assert!(report(0));
    assert!(!report(3));
    assert!(report(5));
}
