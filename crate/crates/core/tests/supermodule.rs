use proptest::prelude::*;
use superfit::fitting::GenericSetup;
use superfit::supermodule::{row_matrix, GradedFreeModule, GradedMatrix, ModuleElement};
use superfit::superpoly::{Ring, RingSpec, SuperPoly};

fn ring() -> Ring {
    RingSpec::new(vec!["x".into(), "y".into()], vec!["a".into(), "b".into()], 0).unwrap()
}

/// A 2×2 map `R ⊕ R(odd)` <- `R(-1) ⊕ R(-1, odd)` with linear entries of
/// the right parity, given by coefficient pairs.
fn random_map(c: &[(i64, i64); 4]) -> GradedMatrix {
    let r = ring();
    let lin = |(p, q): (i64, i64), odd: bool| {
        let (u, v) = if odd { ("a", "b") } else { ("x", "y") };
        SuperPoly::parse(&r, &format!("{p}*{u} + {q}*{v}")).unwrap()
    };
    let entries = vec![vec![lin(c[0], false), lin(c[1], true)], vec![lin(c[2], true), lin(c[3], false)]];
    GradedMatrix::new(&r, GradedFreeModule::uniform(1, 1, 0), GradedFreeModule::uniform(1, 1, 1), entries).unwrap()
}

fn coeffs() -> impl Strategy<Value = [(i64, i64); 4]> {
    prop::array::uniform4((-2i64..3, -2i64..3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn syzygies_are_relations(c in coeffs()) {
        let phi = random_map(&c);
        let syz = phi.syzygies().unwrap();
        prop_assert!(phi.compose(&syz).unwrap().is_zero());
    }

    #[test]
    fn annihilator_kills_the_cokernel(c in coeffs()) {
        let phi = random_map(&c);
        let ann = phi.annihilator().unwrap();
        let image = phi.image_gb().unwrap();
        for f in ann.generators() {
            for k in 0..phi.rows() {
                prop_assert!(image.contains(&ModuleElement::basis(&phi.ring, phi.rows(), k).scale(f)));
            }
        }
        let oracle = phi.annihilator_oracle(3);
        for (t, (dim, _)) in oracle.iter().enumerate() {
            prop_assert_eq!(ann.gb().dim_in_degree(t as u32), *dim);
        }
    }

    #[test]
    fn json_round_trip(c in coeffs()) {
        let phi = random_map(&c);
        prop_assert_eq!(GradedMatrix::from_json(&phi.to_json(), None).unwrap(), phi);
    }
}

#[test]
fn inhomogeneous_entries_are_rejected() {
    let r = ring();
    let bad = vec![vec![SuperPoly::parse(&r, "a").unwrap()]];
    assert!(GradedMatrix::new(&r, GradedFreeModule::uniform(1, 0, 0), GradedFreeModule::uniform(1, 0, 1), bad).is_err());
    let bad = vec![vec![SuperPoly::parse(&r, "x^2").unwrap()]];
    assert!(GradedMatrix::new(&r, GradedFreeModule::uniform(1, 0, 0), GradedFreeModule::uniform(1, 0, 1), bad).is_err());
}

#[test]
fn minimalize_keeps_the_cokernel() {
    let r = ring();
    let p = |s: &str| SuperPoly::parse(&r, s).unwrap();
    let entries = vec![vec![p("1"), p("x")], vec![p("y"), p("x*y")]];
    let phi = GradedMatrix::new(&r, GradedFreeModule::new(2, 0, vec![0, -1]).unwrap(), GradedFreeModule::new(2, 0, vec![0, 1]).unwrap(), entries).unwrap();
    let min = phi.minimalize();
    assert!(min.is_minimal());
    for s in -1..5 {
        assert_eq!(min.cokernel_dim(s), phi.cokernel_dim(s));
    }
}

#[test]
fn generic_presentations() {
    for (d, e, m, n) in [(1, 1, 1, 1), (0, 2, 2, 0), (1, 0, 2, 1), (2, 1, 1, 1)] {
        let s = GenericSetup::new(d, e, m, n, 0).unwrap();
        assert_eq!((s.phi.rows(), s.phi.cols()), (d + e, m + n));
        assert!(s.phi.compose(&s.phi.syzygies().unwrap()).unwrap().is_zero());
    }
}

#[test]
fn row_matrix_annihilator_of_an_ideal_quotient() {
    // coker of R^k -> R is R/I, so its annihilator is I
    let r = ring();
    let gens = vec![SuperPoly::parse(&r, "x*a").unwrap(), SuperPoly::parse(&r, "y^2").unwrap()];
    let phi = row_matrix(&r, &gens).unwrap();
    let ideal = superfit::groebner::Ideal::new(&r, gens).unwrap();
    assert!(phi.annihilator().unwrap().equals(&ideal).unwrap());
}
