//! Structural algorithms on [`FiniteGroup`]: centers, quotients, conjugacy
//! classes, the normal subgroup lattice, derived subgroups and complements.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{CayleyGraph, FiniteGroup, Subgroup};

/// Elements commuting with every generator.
pub fn center(g: &FiniteGroup) -> Subgroup {
    let gens = g.generators();
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| gens.iter().enumerate().all(|(j, &t)| g.cayley().right(x, j) == g.mul(t, x)))
        .collect();
    g.subgroup_from_members(&members).expect("center is a subgroup")
}

/// True when conjugation by every generator of `g` preserves `n`.
pub fn is_normal(g: &FiniteGroup, n: &Subgroup) -> bool {
    g.generators().iter().all(|&t| n.generators().iter().all(|&x| n.contains(g.conj(x, t))))
}

/// A quotient group together with the coset bookkeeping.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
}

impl Quotient {
    /// Quotient element containing parent element `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }

    /// Least parent element of coset `q`.
    pub fn representative(&self, q: usize) -> usize {
        self.reps[q]
    }

    /// Image of a parent subgroup containing the kernel.
    pub fn image(&self, h: &Subgroup) -> Result<Subgroup> {
        let mut members: Vec<usize> = h.members().iter().map(|&x| self.coset_of(x)).collect();
        members.sort_unstable();
        members.dedup();
        self.group.subgroup_from_members(&members)
    }
}

/// The coset group `g / n`.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    g.check_owner(n)?;
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut raw = vec![u32::MAX; order];
    let mut raw_reps = Vec::new();
    for x in 0..order {
        if raw[x] != u32::MAX {
            continue;
        }
        let id = raw_reps.len() as u32;
        raw_reps.push(x);
        for &m in n.members() {
            raw[g.mul(x, m)] = id;
        }
    }
    // Relabel cosets in BFS order of the induced Cayley graph.
    let k = g.generators().len();
    let q = raw_reps.len();
    let mut label = vec![u32::MAX; q];
    let mut order_of = vec![0usize];
    label[raw[0] as usize] = 0;
    let mut right = Vec::with_capacity(q * k);
    let mut parent = vec![0u32];
    let mut parent_gen = vec![0u8];
    let mut head = 0;
    while head < order_of.len() {
        let rep = raw_reps[order_of[head]];
        for j in 0..k {
            let c = raw[g.cayley().right(rep, j)] as usize;
            if label[c] == u32::MAX {
                label[c] = order_of.len() as u32;
                order_of.push(c);
                parent.push(head as u32);
                parent_gen.push(j as u8);
            }
            right.push(label[c]);
        }
        head += 1;
    }
    let cayley = CayleyGraph::from_raw(k, right, parent, parent_gen)?;
    let coset_of = raw.iter().map(|&c| label[c as usize]).collect();
    let reps = order_of.iter().map(|&c| raw_reps[c]).collect();
    Ok(Quotient { group: FiniteGroup::from_cayley(cayley), coset_of, reps })
}

/// Orbits of the conjugation action, each sorted, ordered by least member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut classes = Vec::new();
    for x in 0..n {
        if seen.put(x) {
            continue;
        }
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &t in g.generators() {
                let c = g.conj(y, t);
                if !seen.put(c) {
                    class.push(c);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Subgroup join: the subgroup generated by both.
pub fn join(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let seeds: Vec<usize> = a.generators().iter().chain(b.generators()).copied().collect();
    g.subgroup_generated(&seeds)
}

/// Every normal subgroup of `g`, trivial and whole included, sorted by
/// order.
///
/// Each normal subgroup is a union of conjugacy classes, hence the join of
/// the normal closures of its classes; closing the class closures under
/// pairwise joins therefore produces the whole lattice.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: Vec<Subgroup> = Vec::new();
    let push = |found: &mut Vec<Subgroup>, s: Subgroup| {
        if found.iter().any(|f| f.same_members(&s)) {
            false
        } else {
            found.push(s);
            true
        }
    };
    for class in conjugacy_classes(g) {
        // a class is closed under conjugation, so it generates a normal subgroup
        push(&mut found, g.subgroup_generated(&class));
    }
    let mut i = 0;
    while i < found.len() {
        let mut j = 0;
        while j < i {
            if !found[i].is_subset(&found[j]) && !found[j].is_subset(&found[i]) {
                let s = join(g, &found[i], &found[j]);
                push(&mut found, s);
            }
            j += 1;
        }
        i += 1;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    found
}

/// Subgroup generated by all commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    g.normal_closure(&seeds)
}

pub fn is_perfect(g: &FiniteGroup) -> bool {
    derived_subgroup(g).order() == g.order()
}

/// Orders of the derived series down to its terminal member.
pub fn derived_series_orders(g: &FiniteGroup) -> Vec<usize> {
    let mut orders = vec![g.order()];
    let mut current = g.clone();
    loop {
        let d = derived_subgroup(&current);
        if d.order() == current.order() {
            return orders;
        }
        orders.push(d.order());
        current = current.subgroup_as_group(&d).expect("own subgroup").group;
    }
}

/// Search for a complement of the normal subgroup `n`.
///
/// Lifts a small generating set of `g / n` and tries every correction of
/// the lifts by elements of `n`, in a fixed order. Each tried tuple counts
/// as one attempt. A complement meets every coset of `n` exactly once, so
/// running to completion without a hit rules out complements for this
/// generating set; running out of `budget` proves nothing.
pub fn complement_search(g: &FiniteGroup, n: &Subgroup, budget: u64) -> Result<Subgroup> {
    let q = quotient(g, n)?;
    let target = q.group.order();
    let qgens = q.group.small_generating_set();
    let lifts: Vec<usize> = qgens.iter().map(|&x| q.representative(x)).collect();
    let qorders: Vec<usize> = qgens.iter().map(|&x| q.group.element_order(x)).collect();
    // candidate lifts per generator, filtered by matching element order
    let options: Vec<Vec<usize>> = lifts
        .iter()
        .zip(&qorders)
        .map(|(&l, &o)| n.members().iter().map(|&m| g.mul(l, m)).filter(|&c| g.element_order(c) == o).collect())
        .collect();
    let mut attempts = 0u64;
    if options.iter().any(Vec::is_empty) {
        return Err(Error::ComplementNotFound { attempts });
    }
    let mut idx = vec![0usize; options.len()];
    loop {
        if attempts >= budget {
            return Err(Error::ComplementNotFound { attempts });
        }
        attempts += 1;
        let seeds: Vec<usize> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        if let Some(k) = g.subgroup_generated_bounded(&seeds, target) {
            if k.order() == target && n.members().iter().all(|&m| m == 0 || !k.contains(m)) {
                return Ok(k);
            }
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Err(Error::ComplementNotFound { attempts });
            }
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
