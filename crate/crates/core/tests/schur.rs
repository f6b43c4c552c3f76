use proptest::prelude::*;
use superfit::schur::{cauchy_check, hook_schur_dim, hook_schur_dim_by_parity, lambda_de, partitions_of, Partition};

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn cauchy_identity(t in 0u32..7, m in 0usize..4, n in 0usize..4, d in 0usize..4, e in 0usize..3) {
        prop_assert!(cauchy_check(t, (m, n), (d, e)));
    }

    #[test]
    fn conjugation_is_an_involution(l in partition()) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn parity_split_sums_to_the_dimension(l in partition(), m in 0usize..4, n in 0usize..4) {
        let [even, odd] = hook_schur_dim_by_parity(&l, m, n);
        prop_assert_eq!(even + odd, hook_schur_dim(&l, m, n));
    }

    #[test]
    fn hook_condition(l in partition(), m in 0usize..4, n in 0usize..4) {
        let nonzero = hook_schur_dim(&l, m, n) > 0;
        prop_assert_eq!(nonzero, l.part(m) <= n as u32);
    }

    #[test]
    fn super_duality(l in partition(), m in 0usize..4, n in 0usize..4) {
        // swapping the roles of even and odd conjugates the shape
        prop_assert_eq!(hook_schur_dim(&l, m, n), hook_schur_dim(&l.conjugate(), n, m));
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..8).map(|t| partitions_of(t, None, None).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
    assert_eq!(partitions_of(6, Some(2), Some(4)).len(), 2);
}

#[test]
fn classical_and_exterior_dimensions() {
    for m in 0..5u128 {
        for t in 0..5u32 {
            let row = Partition::new(vec![t]).unwrap();
            let col = Partition::new(vec![1; t as usize]).unwrap();
            let sym = if m == 0 { u128::from(t == 0) } else { binom(m + t as u128 - 1, t as u128) };
            assert_eq!(hook_schur_dim(&row, m as usize, 0), sym);
            assert_eq!(hook_schur_dim(&col, m as usize, 0), binom(m, t as u128));
            assert_eq!(hook_schur_dim(&row, 0, m as usize), binom(m, t as u128));
        }
    }
    assert_eq!(hook_schur_dim(&Partition::new(vec![2, 1]).unwrap(), 3, 0), 8);
}

#[test]
fn rectangle_minus_a_box() {
    assert_eq!(lambda_de(2, 0).parts(), &[2]);
    assert_eq!(lambda_de(1, 1).parts(), &[2, 1]);
    assert_eq!(lambda_de(0, 2).parts(), &[1, 1]);
    assert_eq!(lambda_de(2, 2).parts(), &[3, 3, 2]);
    assert_eq!(lambda_de(0, 0).size(), 0);
}
