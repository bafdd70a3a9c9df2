use std::collections::HashSet;

use clifford_atlas::perm::{Perm, PermGroup};
use proptest::prelude::*;

/// Brute-force closure by repeated right multiplication.
fn closure_count(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let mut seen = HashSet::new();
    seen.insert(Perm::identity(degree));
    let mut frontier = vec![Perm::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x * *g;
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

fn group_strategy() -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (2usize..=8).prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 0..3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_order_matches_closure((n, gens) in group_strategy()) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let brute = closure_count(n, &gens);
        prop_assert_eq!(g.order(), brute.len() as u128);
        let elems = g.elements().unwrap();
        let listed: HashSet<Perm> = elems.into_iter().collect();
        prop_assert_eq!(&listed, &brute);
    }

    #[test]
    fn membership_matches_closure((n, gens) in group_strategy(), probe in (2usize..=8).prop_flat_map(perm_strategy)) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        if probe.degree() == n {
            let brute = closure_count(n, &gens);
            prop_assert_eq!(g.contains(&probe).unwrap(), brute.contains(&probe));
        } else {
            prop_assert!(g.contains(&probe).is_err());
        }
    }

    #[test]
    fn set_stabilizer_is_exact((n, gens) in group_strategy(), mask in 0u32..256) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let set: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        let stab = g.set_stabilizer(&set);
        let m = set.iter().fold(0u32, |a, &x| a | 1 << x);
        let brute: HashSet<Perm> =
            closure_count(n, &gens).into_iter().filter(|p| p.apply_mask(m) == m).collect();
        prop_assert_eq!(stab.order(), brute.len() as u128);
        for p in stab.elements().unwrap() {
            prop_assert!(brute.contains(&p));
        }
    }
}
