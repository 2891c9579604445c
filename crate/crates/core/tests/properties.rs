use hocalc_core::functor::{gamma2, gamma2_oracle, tilde_sq, tilde_sq_oracle};
use hocalc_core::homotopy::{pi4_closed_form, pi4_sigma_k_pipeline};
use hocalc_core::matrix::IntMatrix;
use hocalc_core::parse::parse_group;
use hocalc_core::space::{expand_sigma_k_smash, hilton_milnor_pi, FormMultiset};
use hocalc_core::{AbMap, AbPresentation, FgAbGroup, GroupOrder};
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = FgAbGroup> {
    prop::collection::vec(prop_oneof![Just(0u64), 2u64..=12], 0..=3).prop_map(|v| FgAbGroup::from_cyclic_orders(&v))
}

fn finite_group() -> impl Strategy<Value = FgAbGroup> {
    prop::collection::vec(2u64..=12, 0..=3).prop_map(|v| FgAbGroup::from_cyclic_orders(&v))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

/// A random unimodular matrix as a product of elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, k, swap) in ops {
            let mut e = IntMatrix::identity(n);
            if swap {
                e = IntMatrix::from_rows(
                    &(0..n)
                        .map(|r| {
                            let src = if r == i {
                                j
                            } else if r == j {
                                i
                            } else {
                                r
                            };
                            (0..n).map(|c| i64::from(c == src)).collect()
                        })
                        .collect::<Vec<_>>(),
                );
            } else if i != j {
                e.set(i, j, k.into());
            }
            u = e.mul(&u);
        }
        u
    })
}

fn order(p: &AbPresentation) -> GroupOrder {
    p.canonicalize().order()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_invariant_under_unimodular_change(
        m in matrix(3, 3), u in unimodular(3), v in unimodular(3)
    ) {
        let m = IntMatrix::from_rows(&m);
        let a = AbPresentation::new(3, m.clone()).unwrap().canonicalize();
        let b = AbPresentation::new(3, u.mul(&m).mul(&v)).unwrap().canonicalize();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(AbPresentation::of_group(&a).canonicalize(), a);
    }

    #[test]
    fn orders_multiply_under_direct_sum(a in finite_group(), b in finite_group()) {
        let (GroupOrder::Finite(x), GroupOrder::Finite(y), GroupOrder::Finite(s)) =
            (a.order(), b.order(), a.direct_sum(&b).order()) else { panic!("finite groups") };
        prop_assert_eq!(x * y, s);
    }

    #[test]
    fn kernel_and_image_orders_multiply_to_source(
        target in prop::collection::vec(2u64..=9, 1..=3),
        mults in prop::collection::vec(1u64..=3, 1..=3),
        entries in matrix(3, 3),
    ) {
        // source orders are multiples of every target order, so any matrix is well defined
        let lcm = target.iter().product::<u64>();
        let source: Vec<u64> = mults.iter().map(|k| k * lcm).collect();
        let rows: Vec<Vec<i64>> = entries[..target.len()].iter().map(|r| r[..source.len()].to_vec()).collect();
        let f = AbMap::new(
            AbPresentation::cyclic_sum(&source),
            AbPresentation::cyclic_sum(&target),
            IntMatrix::from_rows(&rows),
        ).unwrap();
        let (GroupOrder::Finite(k), GroupOrder::Finite(i), GroupOrder::Finite(s)) =
            (order(&f.kernel()), order(&f.image()), order(f.source())) else { panic!("finite groups") };
        prop_assert_eq!(k * i, s);
    }

    #[test]
    fn quadratic_functors_match_their_presentations(a in small_group()) {
        prop_assert_eq!(gamma2(&a), gamma2_oracle(&a).unwrap());
        prop_assert_eq!(tilde_sq(&a), tilde_sq_oracle(&a).unwrap());
    }

    #[test]
    fn groups_round_trip_through_text(a in small_group()) {
        prop_assert_eq!(parse_group(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn hilton_milnor_ignores_wedge_order(a in small_group(), seed in any::<u64>(), n in 3u32..=5) {
        let list = expand_sigma_k_smash(&a).to_list();
        let mut shuffled = list.clone();
        // deterministic Fisher-Yates from the seed
        let mut s = seed;
        for i in (1..shuffled.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(
            hilton_milnor_pi(&FormMultiset::from_list(list), n).unwrap(),
            hilton_milnor_pi(&FormMultiset::from_list(shuffled), n).unwrap()
        );
    }

    #[test]
    fn pi4_closed_form_matches_pipeline(a in small_group()) {
        prop_assert_eq!(pi4_closed_form(&a).unwrap(), pi4_sigma_k_pipeline(&a).unwrap().group);
    }
}
