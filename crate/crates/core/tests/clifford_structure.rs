use clifford_atlas::clifford::InnerClifford;
use clifford_atlas::error::Error;
use clifford_atlas::group::{FiniteGroup, Subgroup};
use clifford_atlas::ident::{isomorphic, IsoOutcome};
use clifford_atlas::perm::{symmetric_group, Perm};
use clifford_atlas::structure::{complement_search, quotient};

/// Tuples of lifts of the Coxeter generators `(i, i+1)` of `S(d)` through
/// `g → g/n ≅ S(d)` that satisfy the Coxeter relations. A complement
/// exists exactly when this is nonzero.
fn coxeter_lifts(g: &FiniteGroup, n: &Subgroup, d: usize) -> usize {
    let q = quotient(g, n).unwrap();
    let (sd, elems) = symmetric_group(d).as_finite_group().unwrap();
    let IsoOutcome::Certified(cert) = isomorphic(&sd, &q.group, 2_000_000) else {
        panic!("quotient is not S{d}");
    };
    let index = |p: Perm| (0..sd.order()).find(|&i| elems[i] == p).unwrap();
    let options: Vec<Vec<usize>> = (0..d - 1)
        .map(|i| {
            let s = index(Perm::from_cycles(d, &[&[i, i + 1]]).unwrap());
            let r = q.representative(cert.map[s]);
            n.members().iter().map(|&m| g.mul(r, m)).collect()
        })
        .collect();
    fn extend(g: &FiniteGroup, options: &[Vec<usize>], cur: &mut Vec<usize>) -> usize {
        if let Some(&last) = cur.last() {
            let k = cur.len() - 1;
            if g.element_order(last) != 2 {
                return 0;
            }
            for (j, &t) in cur[..k].iter().enumerate() {
                let want = if j + 1 == k { 3 } else { 2 };
                if g.element_order(g.mul(t, last)) != want {
                    return 0;
                }
            }
        }
        if cur.len() == options.len() {
            return 1;
        }
        let mut total = 0;
        for &x in &options[cur.len()] {
            cur.push(x);
            total += extend(g, options, cur);
            cur.pop();
        }
        total
    }
    extend(g, &options, &mut Vec::new())
}

#[test]
fn one_qubit_inner_group_splits() {
    let c = InnerClifford::build(1).unwrap();
    let n1 = &c.proper_normal_subgroups()[0];
    assert_eq!(complement_search(c.group(), n1, 10_000).unwrap().order(), 6);
    // the four conjugate copies of S3 in S4
    assert_eq!(coxeter_lifts(c.group(), n1, 3), 4);
}

#[test]
fn two_qubit_inner_group_does_not_split_over_z2_4() {
    let c = InnerClifford::build(2).unwrap();
    let normals = c.proper_normal_subgroups();
    let (n1, n2) = (&normals[0], &normals[1]);
    assert_eq!((n1.order(), n2.order()), (16, 5760));

    let budget = 1_000_000;
    match complement_search(c.group(), n1, budget) {
        Err(Error::ComplementNotFound { attempts }) => assert!(attempts < budget, "search did not finish"),
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(coxeter_lifts(c.group(), n1, 6), 0);

    // the order-5760 subgroup does split
    let e = c.group().subgroup_as_group(n2).unwrap();
    let k = complement_search(&e.group, &e.pull_back(n1).unwrap(), budget).unwrap();
    assert_eq!(k.order(), 360);
}

#[test]
fn two_qubit_quotients_and_lattice() {
    use clifford_atlas::structure::{join, normal_subgroups};

    let c = InnerClifford::build(2).unwrap();
    let g = c.group();
    let all = normal_subgroups(g);
    assert_eq!(all.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 16, 5760, 11520]);
    for n in &all {
        assert_eq!(g.order() % n.order(), 0);
        for &a in n.members() {
            assert!(n.contains(g.inv(a)));
            for &b in n.members().iter().step_by(37) {
                assert!(n.contains(g.mul(a, b)));
            }
        }
    }
    for a in &all {
        for b in &all {
            let j = join(g, a, b);
            let m = a.intersection(b, g).unwrap();
            assert!(all.iter().any(|n| n.same_members(&j)));
            assert!(all.iter().any(|n| n.same_members(&m)));
        }
    }

    let (n1, n2) = (&all[1], &all[2]);
    assert!(n1.is_subset(n2));
    let q = quotient(g, n1).unwrap();
    assert_eq!(q.group.order(), 720);
    let e = g.subgroup_as_group(n2).unwrap();
    let q2 = quotient(&e.group, &e.pull_back(n1).unwrap()).unwrap();
    assert_eq!(q2.group.order(), 360);
    // N2/N1 sits in G/N1 as the index-2 image of N2 under the coset map
    let image = q.image(n2).unwrap();
    assert_eq!(image.order(), 360);
    assert_eq!(q.group.order() / image.order(), 2);
    for x in 0..q2.group.order() {
        for y in (0..q2.group.order()).step_by(11) {
            let lift = |z: usize| q.coset_of(e.to_parent(q2.representative(z)));
            assert_eq!(lift(q2.group.mul(x, y)), q.group.mul(lift(x), lift(y)));
        }
    }
}
