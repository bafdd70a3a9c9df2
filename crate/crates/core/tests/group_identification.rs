use clifford_atlas::group::FiniteGroup;
use clifford_atlas::ident::{
    automorphism_count, fingerprint, isomorphic, recognize, verify_isomorphism, IsoOutcome, Named, Recognition,
};
use clifford_atlas::perm::{alternating_group, symmetric_group, Perm, PermGroup};
use clifford_atlas::structure::center;
use proptest::prelude::*;

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(&v).unwrap())
}

fn group_strategy() -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (2usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 1..3)))
}

fn finite(n: usize, gens: &[Perm]) -> FiniteGroup {
    PermGroup::new(n, gens.to_vec()).unwrap().as_finite_group().unwrap().0
}

/// The same abstract group realized on a relabelled point set.
fn relabelled(n: usize, gens: &[Perm], sigma: &Perm) -> FiniteGroup {
    let conj: Vec<Perm> = gens.iter().map(|g| sigma.inverse() * *g * *sigma).collect();
    finite(n, &conj)
}

fn reference(name: Named) -> Option<FiniteGroup> {
    let p = match name {
        Named::Symmetric(d) => symmetric_group(d),
        Named::Alternating(d) => alternating_group(d),
        _ => return None,
    };
    Some(p.as_finite_group().unwrap().0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inner_automorphisms_divide_aut((n, gens) in group_strategy()) {
        let g = finite(n, &gens);
        let aut = automorphism_count(&g, 10_000_000).unwrap();
        let inner = (g.order() / center(&g).order()) as u64;
        prop_assert_eq!(aut % inner, 0);
    }

    #[test]
    fn conjugate_copies_are_certified((n, gens, sigma) in (2usize..=5).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(perm_strategy(n), 1..3), perm_strategy(n))
    })) {
        let g = finite(n, &gens);
        let h = relabelled(n, &gens, &sigma);
        prop_assert_eq!(fingerprint(&g), fingerprint(&h));
        match isomorphic(&g, &h, 1_000_000) {
            IsoOutcome::Certified(c) => prop_assert!(verify_isomorphism(&g, &h, &c.map).is_some()),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn recognition_agrees_with_isomorphism((n, gens) in group_strategy()) {
        let g = finite(n, &gens);
        if let Recognition::Named(name) = recognize(&g, 1_000_000) {
            if let Some(r) = reference(name) {
                prop_assert!(isomorphic(&g, &r, 1_000_000).is_certified());
            }
        }
        for (d, sym) in [(3, true), (4, true), (4, false), (5, false), (5, true)] {
            let r = reference(if sym { Named::Symmetric(d) } else { Named::Alternating(d) }).unwrap();
            if isomorphic(&g, &r, 1_000_000).is_certified() {
                let want = if sym { Named::Symmetric(d) } else { Named::Alternating(d) };
                prop_assert_eq!(recognize(&g, 1_000_000), Recognition::Named(want));
            }
        }
    }
}
