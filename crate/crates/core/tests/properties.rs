//! Structural invariants as properties over random semigroups and ideals.

mod common;

use std::sync::Arc;

use num_integer::Integer;
use proptest::prelude::*;
use ulrich::ulrich::enumerate_ulrich;
use ulrich::{is_ulrich, NumericalSemigroup, RelativeIdeal};

fn semigroup_strategy(max_frobenius: i64) -> impl Strategy<Value = Arc<NumericalSemigroup>> {
    prop::collection::vec(2i64..16, 1..5).prop_filter_map("needs gcd 1 and small F", move |gens| {
        let h = NumericalSemigroup::from_generators(&gens).ok()?;
        (h.frobenius() <= max_frobenius).then(|| Arc::new(h))
    })
}

fn ideal_strategy(h: Arc<NumericalSemigroup>) -> impl Strategy<Value = RelativeIdeal> {
    prop::collection::vec(1i64..24, 1..4).prop_filter_map("members only", move |zs| {
        let zs: Vec<i64> = zs.into_iter().filter(|&z| h.contains(z)).collect();
        RelativeIdeal::new(&h, &zs).ok()
    })
}

fn with_two_ideals() -> impl Strategy<Value = (Arc<NumericalSemigroup>, RelativeIdeal, RelativeIdeal)> {
    semigroup_strategy(20).prop_flat_map(|h| {
        (Just(h.clone()), ideal_strategy(h.clone()), ideal_strategy(h))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Selmer: `genus = (Σ Ap(H, n)) / n − (n − 1)/2` and `F = max Ap − n`.
    #[test]
    fn apery_sums_give_genus_and_frobenius(h in semigroup_strategy(30), extra in 0usize..3) {
        let n = h.generators()[extra.min(h.embedding_dimension() - 1)];
        let ap = h.apery_set(n).unwrap();
        prop_assert_eq!(ap.len() as i64, n);
        let sum: i64 = ap.iter().sum();
        prop_assert_eq!(2 * sum, n * (2 * h.genus() as i64 + n - 1));
        prop_assert_eq!(*ap.iter().max().unwrap() - n, h.frobenius());
        let model = common::Model::new(h.generators(), 128);
        prop_assert_eq!(common::frobenius(&model.member), h.frobenius());
    }

    #[test]
    fn sylvester_formula(a in 2i64..40, b in 2i64..40) {
        prop_assume!(a.gcd(&b) == 1 && a != b);
        let h = NumericalSemigroup::from_generators(&[a, b]).unwrap();
        prop_assert_eq!(h.frobenius(), a * b - a - b);
        prop_assert_eq!(2 * h.genus() as i64, (a - 1) * (b - 1));
        prop_assert!(h.is_symmetric());
    }

    /// `is_almost_symmetric` errors when its two criteria disagree.
    #[test]
    fn almost_symmetry_criteria_agree(h in semigroup_strategy(30)) {
        let as_ = h.is_almost_symmetric().unwrap();
        if h.is_symmetric() {
            prop_assert!(as_);
        }
        let pf = h.pseudo_frobenius().unwrap();
        prop_assert_eq!(pf.len(), h.cm_type().unwrap());
        prop_assert_eq!(*pf.last().unwrap(), h.frobenius());
        prop_assert_eq!(h.is_symmetric(), pf.len() == 1);
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        (h, e, f) in with_two_ideals(),
        g in prop::collection::vec(1i64..12, 1..3),
    ) {
        let g: Vec<i64> = g.into_iter().filter(|&z| h.contains(z)).collect();
        prop_assume!(!g.is_empty());
        let g = RelativeIdeal::new(&h, &g).unwrap();
        prop_assert_eq!(e.multiply(&f).unwrap(), f.multiply(&e).unwrap());
        prop_assert_eq!(
            e.multiply(&f).unwrap().multiply(&g).unwrap(),
            e.multiply(&f.multiply(&g).unwrap()).unwrap()
        );
        prop_assert_eq!(e.sum(&f).unwrap(), f.sum(&e).unwrap());
    }

    /// `F·(E:F) ⊆ E ⊆ E:F` and `E:F` is the largest such ideal.
    #[test]
    fn colon_is_the_residual((_h, e, f) in with_two_ideals(), z in -20i64..40) {
        let c = e.colon(&f).unwrap();
        prop_assert!(c.multiply(&f).unwrap().is_subset(&e).unwrap());
        prop_assert!(e.is_subset(&c).unwrap());
        let shifted = f.shift(z);
        prop_assert_eq!(shifted.is_subset(&e).unwrap(), c.contains(z));
    }

    #[test]
    fn normal_form_is_unique((h, e, _f) in with_two_ideals(), extra in prop::collection::vec(0i64..40, 0..4)) {
        let mut gens = e.generators().to_vec();
        for x in extra {
            gens.push(e.generators()[0] + x * h.multiplicity());
            if h.contains(x) {
                gens.push(e.generators()[gens.len() % e.nu()] + x);
            }
        }
        gens.reverse();
        prop_assert_eq!(RelativeIdeal::new(&h, &gens).unwrap(), e);
    }

    /// `ℓ(R/I²) = ℓ(R/I) + ℓ(I/I²)`.
    #[test]
    fn colength_is_additive((_h, e, _f) in with_two_ideals()) {
        let square = e.multiply(&e).unwrap();
        prop_assert_eq!(
            square.colength().unwrap(),
            e.colength().unwrap() + e.difference(&square).unwrap().len()
        );
    }

    /// Each certified ideal really satisfies `I² = t^a I` with `t^a ∈ I`.
    #[test]
    fn certificates_are_sound((_h, e, _f) in with_two_ideals()) {
        let c = is_ulrich(&e).unwrap();
        if c.stability_ok {
            prop_assert!(e.contains(c.reduction_degree));
            prop_assert_eq!(e.multiply(&e).unwrap(), e.shift(c.reduction_degree));
        }
        prop_assert_eq!(c.nu, e.nu());
        prop_assert_eq!(c.colength, e.colength().unwrap());
        prop_assert_eq!(c.is_ulrich(), c.nu >= 2 && c.stability_ok && c.freeness_ok);
    }

    /// Stability at any generator forces stability at the smallest one.
    #[test]
    fn reduction_degree_is_the_smallest_generator((_h, e, _f) in with_two_ideals()) {
        let square = e.multiply(&e).unwrap();
        for &a in e.generators() {
            if square == e.shift(a) {
                prop_assert_eq!(a, e.generators()[0]);
            }
        }
    }

    /// Raising the window factor changes no answer.
    #[test]
    fn window_factor_is_invisible((h, e, f) in with_two_ideals()) {
        let wide = Arc::new(h.rescaled(4));
        let e4 = RelativeIdeal::new(&wide, e.generators()).unwrap();
        let f4 = RelativeIdeal::new(&wide, f.generators()).unwrap();
        prop_assert_eq!(e.colon(&f).unwrap().generators().to_vec(), e4.colon(&f4).unwrap().generators().to_vec());
        prop_assert_eq!(is_ulrich(&e).unwrap().verdict, is_ulrich(&e4).unwrap().verdict);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Results only grow with the bound and stop growing at `2·genus`.
    #[test]
    fn enumeration_is_monotone_in_the_bound(h in semigroup_strategy(14), b in 0i64..20) {
        let e = h.multiplicity();
        let low = enumerate_ulrich(&h, e + b).unwrap();
        let high = enumerate_ulrich(&h, e + b + 7).unwrap();
        prop_assert!(low.iter().all(|c| high.contains(c)));
        prop_assert!(low.iter().all(|c| c.reduction_degree <= e + b));
        let saturated = enumerate_ulrich(&h, 2 * h.genus() as i64 + e).unwrap();
        let beyond = enumerate_ulrich(&h, 4 * h.genus() as i64 + 3 * e).unwrap();
        prop_assert_eq!(saturated, beyond);
    }
}
