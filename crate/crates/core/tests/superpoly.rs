use proptest::prelude::*;
use superfit::superpoly::{FieldElem, Ring, RingSpec, SuperMonomial, SuperPoly};

fn ring(characteristic: u64) -> Ring {
    RingSpec::new(vec!["x".into(), "y".into()], vec!["a".into(), "b".into(), "c".into()], characteristic).unwrap()
}

fn build(r: &Ring, terms: &[([u16; 2], u64, i64)]) -> SuperPoly {
    SuperPoly::from_terms(
        r,
        terms.iter().map(|(e, o, c)| (SuperMonomial::from_parts(e, *o), FieldElem::from_int(*c, r.characteristic))).collect(),
    )
}

fn terms() -> impl Strategy<Value = Vec<([u16; 2], u64, i64)>> {
    prop::collection::vec(([0u16..3, 0u16..3], 0u64..8, -4i64..5), 0..5)
}

/// Terms of a single parity.
fn homogeneous(parity: u64) -> impl Strategy<Value = Vec<([u16; 2], u64, i64)>> {
    terms().prop_map(move |ts| ts.into_iter().filter(|t| t.1.count_ones() as u64 % 2 == parity).collect())
}

proptest! {
    #[test]
    fn ring_axioms(f in terms(), g in terms(), h in terms(), p in prop::sample::select(vec![0u64, 2, 5])) {
        let r = ring(p);
        let (f, g, h) = (build(&r, &f), build(&r, &g), build(&r, &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&g + &h) * &f, &(&g * &f) + &(&h * &f));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &SuperPoly::one(&r), f.clone());
        prop_assert_eq!(&(-&f) + &f, SuperPoly::zero(&r));
    }

    #[test]
    fn super_commutativity(pf in 0u64..2, pg in 0u64..2, f in homogeneous(0), g in homogeneous(1), f1 in homogeneous(1), g0 in homogeneous(0)) {
        let r = ring(0);
        let f = build(&r, if pf == 0 { &f } else { &f1 });
        let g = build(&r, if pg == 0 { &g0 } else { &g });
        let fg = &f * &g;
        let gf = &g * &f;
        if pf * pg == 1 {
            prop_assert_eq!(fg, -&gf);
        } else {
            prop_assert_eq!(fg, gf);
        }
    }

    #[test]
    fn odd_elements_square_to_zero(f in homogeneous(1)) {
        let f = build(&ring(0), &f);
        prop_assert!((&f * &f).is_zero());
    }

    #[test]
    fn text_and_json_round_trip(f in terms(), p in prop::sample::select(vec![0u64, 7])) {
        let r = ring(p);
        let f = build(&r, &f);
        prop_assert_eq!(SuperPoly::parse(&r, &f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(SuperPoly::from_json_terms(&r, &f.to_json_terms()).unwrap(), f);
    }

    #[test]
    fn homogeneous_components_sum_back(f in terms()) {
        let f = build(&ring(0), &f);
        let top = f.max_degree().unwrap_or(0);
        let sum = (0..=top).fold(SuperPoly::zero(f.ring()), |acc, t| &acc + &f.component(t));
        prop_assert_eq!(sum, f);
    }
}

#[test]
fn anticommuting_generators() {
    let r = ring(0);
    let p = |s: &str| SuperPoly::parse(&r, s).unwrap();
    assert_eq!(p("a*b"), p("-b*a"));
    assert!(p("a*a").is_zero());
    assert_eq!(p("(x + a)*(x - a)"), p("x^2"));
    assert_eq!(p("(a + b)*(a - b)"), p("-2*a*b"));
}

#[test]
fn rational_and_modular_coefficients() {
    let q = ring(0);
    let half = SuperPoly::parse(&q, "1/2*x").unwrap();
    assert_eq!(&half + &half, SuperPoly::parse(&q, "x").unwrap());
    let f5 = ring(5);
    assert!(SuperPoly::parse(&f5, "5*x*a").unwrap().is_zero());
    assert_eq!(SuperPoly::parse(&f5, "1/2*x").unwrap(), SuperPoly::parse(&f5, "3*x").unwrap());
}
