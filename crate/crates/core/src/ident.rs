//! Identification of abstract groups: invariant fingerprints, isomorphism
//! and automorphism search, recognition of small named groups, and the
//! structure of the outer automorphism group.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::perm::{alternating_group, symmetric_group};
use crate::structure::{center, conjugacy_classes, derived_series_orders, derived_subgroup, is_normal, quotient};

/// Exhaustive homomorphism re-verification threshold.
pub const EXHAUSTIVE_VERIFY_LIMIT: usize = 10_000;

/// Class-level invariant: size, element order and the (size, order) of the
/// classes reached by the 2nd, 3rd and 5th powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassKey {
    pub size: usize,
    pub order: u32,
    pub powers: [(usize, u32); 3],
}

/// Invariants that isomorphic groups share.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub order_histogram: BTreeMap<u32, usize>,
    pub power_signature: Vec<ClassKey>,
    /// Elementary divisors of the abelianization, as prime powers.
    pub abelian_invariants: Vec<usize>,
    pub derived_series: Vec<usize>,
    pub center_order: usize,
}

impl fmt::Display for Fingerprint {
    /// Canonical text form, one invariant per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "order {}", self.order)?;
        writeln!(f, "class_sizes {}", join(&self.class_sizes))?;
        let hist: Vec<String> = self.order_histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
        writeln!(f, "order_histogram {}", hist.join(" "))?;
        for k in &self.power_signature {
            let p: Vec<String> = k.powers.iter().map(|(s, o)| format!("{s}/{o}")).collect();
            writeln!(f, "class {}/{} -> {}", k.size, k.order, p.join(" "))?;
        }
        writeln!(f, "abelianization {}", join(&self.abelian_invariants))?;
        writeln!(f, "derived_series {}", join(&self.derived_series))?;
        writeln!(f, "center {}", self.center_order)
    }
}

/// Per-group data shared by the fingerprint and the search.
struct ClassData {
    orders: Vec<u32>,
    class_of: Vec<u32>,
    classes: Vec<Vec<usize>>,
    keys: Vec<ClassKey>,
}

impl ClassData {
    fn new(g: &FiniteGroup) -> ClassData {
        let orders = g.element_orders();
        let classes = conjugacy_classes(g);
        let mut class_of = vec![0u32; g.order()];
        for (c, members) in classes.iter().enumerate() {
            for &x in members {
                class_of[x] = c as u32;
            }
        }
        let base = |x: usize| (classes[class_of[x] as usize].len(), orders[x]);
        let keys = classes
            .iter()
            .map(|members| {
                let r = members[0];
                let powers = [2u64, 3, 5].map(|p| base(g.pow(r, p)));
                ClassKey { size: members.len(), order: orders[r], powers }
            })
            .collect();
        ClassData { orders, class_of, classes, keys }
    }

    fn key(&self, x: usize) -> ClassKey {
        self.keys[self.class_of[x] as usize]
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Elementary divisors of an abelian group, from counts of elements whose
/// order divides `p^k`.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<usize> {
    let orders = g.element_orders();
    let mut out = Vec::new();
    for p in prime_factors(g.order()) {
        // d_k = log_p #{x : x^(p^k) = 1} = Σ_i min(e_i, k)
        let mut d = vec![0u32];
        let mut pk = 1usize;
        loop {
            pk *= p;
            let count = orders.iter().filter(|&&o| pk.is_multiple_of(o as usize)).count();
            let mut e = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                e += 1;
            }
            d.push(e);
            if d[d.len() - 1] == d[d.len() - 2] {
                break;
            }
        }
        // number of cyclic factors of order at least p^k is d_k − d_{k−1}
        let at_least: Vec<u32> = d.windows(2).map(|w| w[1] - w[0]).collect();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..at_least[k] - next {
                out.push(p.pow(k as u32 + 1));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    fingerprint_with(g, &ClassData::new(g))
}

fn fingerprint_with(g: &FiniteGroup, data: &ClassData) -> Fingerprint {
    let mut class_sizes: Vec<usize> = data.classes.iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    let mut order_histogram = BTreeMap::new();
    for &o in &data.orders {
        *order_histogram.entry(o).or_insert(0) += 1;
    }
    let mut power_signature = data.keys.clone();
    power_signature.sort_unstable();
    let d = derived_subgroup(g);
    let ab = quotient(g, &d).expect("derived subgroup is normal");
    Fingerprint {
        order: g.order(),
        class_sizes,
        order_histogram,
        power_signature,
        abelian_invariants: abelian_invariants(&ab.group),
        derived_series: derived_series_orders(g),
        center_order: center(g).order(),
    }
}

/// How an isomorphism certificate was re-verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verification {
    /// `φ(xy) = φ(x)φ(y)` for every pair.
    Exhaustive,
    /// Full products of a deterministic grid of `n × n` elements.
    SpotGrid(usize),
}

/// A verified isomorphism, stored as the full element map.
#[derive(Clone, Debug)]
pub struct IsoCertificate {
    pub map: Vec<usize>,
    pub generators: Vec<usize>,
    pub images: Vec<usize>,
    pub verification: Verification,
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Certified(IsoCertificate),
    Refuted(String),
    Inconclusive { nodes: u64 },
}

impl IsoOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, IsoOutcome::Certified(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, IsoOutcome::Refuted(_))
    }
}

/// Check that `map` is a bijective homomorphism `g → h`.
pub fn verify_isomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) -> Option<Verification> {
    if g.order() != h.order() || map.len() != g.order() {
        return None;
    }
    let mut hit = FixedBitSet::with_capacity(h.order());
    for &y in map {
        if y >= h.order() || hit.put(y) {
            return None;
        }
    }
    let n = g.order();
    let (xs, verification): (Vec<usize>, _) = if n <= EXHAUSTIVE_VERIFY_LIMIT {
        ((0..n).collect(), Verification::Exhaustive)
    } else {
        let step = n / 997 + 1;
        let xs: Vec<usize> = (0..n).step_by(step).collect();
        let len = xs.len();
        (xs, Verification::SpotGrid(len))
    };
    for &a in &xs {
        for &b in &xs {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(verification)
}

enum Mode {
    First,
    All,
}

/// Generator-image backtrack shared by isomorphism and automorphism search.
struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gd: &'a ClassData,
    hd: &'a ClassData,
    gens: Vec<usize>,
    budget: u64,
    nodes: u64,
    found: Vec<Vec<usize>>,
    count: u64,
    keep_maps: bool,
}

impl<'a> Search<'a> {
    /// Candidate images for generator `i`; the first generator only needs
    /// class representatives, since composing with an inner automorphism of
    /// `h` moves its image anywhere in its class.
    fn candidates(&self, i: usize) -> Vec<usize> {
        let key = self.gd.key(self.gens[i]);
        if i == 0 {
            self.hd
                .classes
                .iter()
                .enumerate()
                .filter(|(c, _)| self.hd.keys[*c] == key)
                .map(|(_, m)| m[0])
                .collect()
        } else {
            (0..self.h.order()).filter(|&y| self.hd.key(y) == key).collect()
        }
    }

    /// Orders of short words in the new generator and each earlier one.
    fn words_agree(&self, images: &[usize], i: usize) -> bool {
        let (g, h) = (self.g, self.h);
        let s = self.gens[i];
        let t = images[i];
        for j in 0..i {
            let (a, b) = (self.gens[j], images[j]);
            let pairs = [
                (g.mul(a, s), h.mul(b, t)),
                (g.mul(a, g.inv(s)), h.mul(b, h.inv(t))),
                (g.commutator(a, s), h.commutator(b, t)),
                (g.mul(g.mul(a, a), s), h.mul(h.mul(b, b), t)),
            ];
            if pairs.iter().any(|&(x, y)| self.gd.orders[x] != self.hd.orders[y]) {
                return false;
            }
        }
        true
    }

    /// Extend generator images to a full map by breadth-first search over
    /// right multiplication, failing on the first inconsistency.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let n = self.g.order();
        let mut map = vec![usize::MAX; n];
        let mut used = FixedBitSet::with_capacity(n);
        map[0] = 0;
        used.insert(0);
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for (k, &s) in self.gens.iter().enumerate() {
                let y = self.g.mul(x, s);
                let fy = self.h.mul(map[x], images[k]);
                if map[y] == usize::MAX {
                    if used.put(fy) {
                        return None;
                    }
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        (queue.len() == n).then_some(map)
    }

    /// Returns false when the budget runs out.
    fn run(&mut self, images: &mut Vec<usize>, mode: &Mode, first_filter: Option<usize>) -> bool {
        let i = images.len();
        if i == self.gens.len() {
            if let Some(map) = self.extend(images) {
                self.count += 1;
                if self.keep_maps || matches!(mode, Mode::First) {
                    self.found.push(map);
                }
            }
            return true;
        }
        let mut cands = self.candidates(i);
        if let (0, Some(rep)) = (i, first_filter) {
            cands.retain(|&c| c == rep);
        }
        for c in cands {
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            images.push(c);
            if self.words_agree(images, i) && !self.run(images, mode, first_filter) {
                return false;
            }
            images.pop();
            if matches!(mode, Mode::First) && !self.found.is_empty() {
                return true;
            }
        }
        true
    }
}

/// Decide whether `g ≅ h` within `budget` search nodes.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup, budget: u64) -> IsoOutcome {
    if g.order() != h.order() {
        return IsoOutcome::Refuted(format!("orders {} and {} differ", g.order(), h.order()));
    }
    let (gd, hd) = (ClassData::new(g), ClassData::new(h));
    let (fg, fh) = (fingerprint_with(g, &gd), fingerprint_with(h, &hd));
    if fg != fh {
        return IsoOutcome::Refuted(first_difference(&fg, &fh));
    }
    let gens = g.small_generating_set();
    let mut search = Search {
        g,
        h,
        gd: &gd,
        hd: &hd,
        gens: gens.clone(),
        budget,
        nodes: 0,
        found: Vec::new(),
        count: 0,
        keep_maps: false,
    };
    let mut images = Vec::new();
    let finished = search.run(&mut images, &Mode::First, None);
    if let Some(map) = search.found.pop() {
        let verification = verify_isomorphism(g, h, &map)
            .expect("search produced a map that fails independent verification");
        let images = gens.iter().map(|&s| map[s]).collect();
        return IsoOutcome::Certified(IsoCertificate { map, generators: gens, images, verification });
    }
    if finished {
        IsoOutcome::Refuted("exhaustive generator-image search found no isomorphism".into())
    } else {
        IsoOutcome::Inconclusive { nodes: search.nodes }
    }
}

fn first_difference(a: &Fingerprint, b: &Fingerprint) -> String {
    let field = if a.class_sizes != b.class_sizes {
        "class sizes"
    } else if a.order_histogram != b.order_histogram {
        "element orders"
    } else if a.power_signature != b.power_signature {
        "power maps"
    } else if a.abelian_invariants != b.abelian_invariants {
        "abelianization"
    } else if a.derived_series != b.derived_series {
        "derived series"
    } else {
        "center"
    };
    format!("fingerprints differ in {field}")
}

/// Automorphisms found by an exhaustive search, grouped by the class
/// representative the first generator is sent to.
pub struct AutomorphismData {
    pub count: u64,
    pub generators: Vec<usize>,
    /// Full element maps of the automorphisms sending the first generator
    /// to a class representative. Every coset of the inner automorphisms
    /// meets this set.
    pub representatives: Vec<Vec<usize>>,
}

fn automorphism_search(g: &FiniteGroup, budget: u64, keep_maps: bool) -> Option<AutomorphismData> {
    let gd = ClassData::new(g);
    let gens = g.small_generating_set();
    if gens.is_empty() {
        return Some(AutomorphismData { count: 1, generators: gens, representatives: vec![vec![0]] });
    }
    let mut search = Search {
        g,
        h: g,
        gd: &gd,
        hd: &gd,
        gens: gens.clone(),
        budget,
        nodes: 0,
        found: Vec::new(),
        count: 0,
        keep_maps,
    };
    let mut total = 0u64;
    let reps = search.candidates(0);
    for rep in reps {
        search.count = 0;
        let mut images = Vec::new();
        if !search.run(&mut images, &Mode::All, Some(rep)) {
            return None;
        }
        total += search.count * gd.classes[gd.class_of[rep] as usize].len() as u64;
    }
    Some(AutomorphismData { count: total, generators: gens, representatives: search.found })
}

/// `|Aut(g)|`, or `None` if the budget ran out.
pub fn automorphism_count(g: &FiniteGroup, budget: u64) -> Option<u64> {
    automorphism_search(g, budget, false).map(|a| a.count)
}

/// Whether the automorphism given by its generator images is conjugation
/// by some element.
fn is_inner(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    (0..g.order()).any(|x| gens.iter().zip(images).all(|(&s, &t)| g.conj(s, x) == t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OuterStructure {
    Trivial,
    Z2,
    Klein,
    Z4,
    Other { order: u64 },
}

impl fmt::Display for OuterStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OuterStructure::Trivial => write!(f, "1"),
            OuterStructure::Z2 => write!(f, "Z2"),
            OuterStructure::Klein => write!(f, "Z2xZ2"),
            OuterStructure::Z4 => write!(f, "Z4"),
            OuterStructure::Other { order } => write!(f, "order {order}"),
        }
    }
}

/// `Out(g) = Aut(g)/Inn(g)`; order 4 is split into Klein and cyclic by
/// squaring coset representatives.
pub fn outer_structure(g: &FiniteGroup, budget: u64) -> Option<OuterStructure> {
    let data = automorphism_search(g, budget, true)?;
    let inner = (g.order() / center(g).order()) as u64;
    let out = data.count / inner;
    Some(match out {
        1 => OuterStructure::Trivial,
        2 => OuterStructure::Z2,
        4 => {
            let gens = &data.generators;
            let cyclic = data.representatives.iter().any(|phi| {
                let squared: Vec<usize> = gens.iter().map(|&s| phi[phi[s]]).collect();
                !is_inner(g, gens, &squared)
            });
            if cyclic {
                OuterStructure::Z4
            } else {
                OuterStructure::Klein
            }
        }
        order => OuterStructure::Other { order },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Named {
    Cyclic(usize),
    Klein,
    ElementaryAbelian2(u32),
    Symmetric(usize),
    Alternating(usize),
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Cyclic(n) => write!(f, "Z{n}"),
            Named::Klein => write!(f, "Z2xZ2"),
            Named::ElementaryAbelian2(k) => write!(f, "Z2^{k}"),
            Named::Symmetric(n) => write!(f, "S{n}"),
            Named::Alternating(n) => write!(f, "A{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Recognition {
    Named(Named),
    Unknown,
    Inconclusive,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Cyclic, elementary abelian 2-group, then `S(n)` and `A(n)` for `n ≤ 6`.
pub fn recognize(g: &FiniteGroup, budget: u64) -> Recognition {
    let n = g.order();
    let orders = g.element_orders();
    if orders.iter().any(|&o| o as usize == n) {
        return Recognition::Named(Named::Cyclic(n));
    }
    if g.is_abelian() && orders.iter().all(|&o| o <= 2) {
        let k = n.trailing_zeros();
        return Recognition::Named(if k == 2 { Named::Klein } else { Named::ElementaryAbelian2(k) });
    }
    let mut inconclusive = false;
    for d in 3..=6 {
        let candidates = [
            (factorial(d), Named::Symmetric(d), symmetric_group(d)),
            (factorial(d) / 2, Named::Alternating(d), alternating_group(d)),
        ];
        for (order, name, reference) in candidates {
            if order != n {
                continue;
            }
            let (r, _) = reference.as_finite_group().expect("small reference group");
            match isomorphic(g, &r, budget) {
                IsoOutcome::Certified(_) => return Recognition::Named(name),
                IsoOutcome::Inconclusive { .. } => inconclusive = true,
                IsoOutcome::Refuted(_) => {}
            }
        }
    }
    if inconclusive {
        Recognition::Inconclusive
    } else {
        Recognition::Unknown
    }
}

/// Orbit lengths of `g` acting by conjugation on the nonidentity elements
/// of an elementary abelian normal 2-subgroup, sorted.
pub fn module_orbit_signature(g: &FiniteGroup, n: &Subgroup) -> Result<Vec<usize>> {
    g.check_owner(n)?;
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    if n.members().iter().any(|&x| x != 0 && g.mul(x, x) != 0)
        || n.members().iter().any(|&a| n.members().iter().any(|&b| g.mul(a, b) != g.mul(b, a)))
    {
        return Err(Error::UnexpectedStructure("subgroup is not elementary abelian of exponent 2".into()));
    }
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut lengths = Vec::new();
    for &x in n.members() {
        if x == 0 || seen.put(x) {
            continue;
        }
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            for &t in g.generators() {
                let c = g.conj(orbit[i], t);
                if !seen.put(c) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        lengths.push(orbit.len());
    }
    lengths.sort_unstable();
    Ok(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::{cyclic, sym};

    fn klein() -> FiniteGroup {
        // Z2 × Z2 as pairs of bits under xor
        FiniteGroup::from_generators(0u8, &[1, 2], |a, b| a ^ b, 4).unwrap().0
    }

    fn perm_group(g: crate::perm::PermGroup) -> FiniteGroup {
        g.as_finite_group().unwrap().0
    }

    #[test]
    fn fingerprints_separate_z4_and_klein() {
        let (a, b) = (fingerprint(&klein()), fingerprint(&cyclic(4)));
        assert_ne!(a, b);
        assert_eq!(a.order_histogram, BTreeMap::from([(1, 1), (2, 3)]));
        assert_eq!(b.order_histogram, BTreeMap::from([(1, 1), (2, 1), (4, 2)]));
        assert!(isomorphic(&klein(), &cyclic(4), 100).is_refuted());
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelian_invariants(&cyclic(12)), vec![3, 4]);
        assert_eq!(abelian_invariants(&klein()), vec![2, 2]);
        assert_eq!(fingerprint(&sym(4)).abelian_invariants, vec![2]);
        assert_eq!(fingerprint(&perm_group(alternating_group(5))).abelian_invariants, Vec::<usize>::new());
        assert_eq!(fingerprint(&perm_group(alternating_group(4))).abelian_invariants, vec![3]);
    }

    #[test]
    fn isomorphism_of_different_presentations() {
        let a = sym(4);
        let b = perm_group(symmetric_group(4));
        match isomorphic(&a, &b, 10_000) {
            IsoOutcome::Certified(c) => {
                assert_eq!(c.verification, Verification::Exhaustive);
                assert!(verify_isomorphism(&a, &b, &c.map).is_some());
            }
            other => panic!("expected certificate, got {other:?}"),
        }
        assert!(isomorphic(&sym(4), &perm_group(alternating_group(4)), 100).is_refuted());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&klein(), 1000), Some(6));
        assert_eq!(automorphism_count(&cyclic(8), 1000), Some(4));
        assert_eq!(automorphism_count(&sym(4), 10_000), Some(24));
        let a6 = perm_group(alternating_group(6));
        assert_eq!(automorphism_count(&a6, 100_000), Some(1440));
        let s6 = perm_group(symmetric_group(6));
        assert_eq!(automorphism_count(&s6, 100_000), Some(1440));
        assert_eq!(automorphism_count(&s6, 1), None);
    }

    #[test]
    fn outer_structures() {
        let a6 = perm_group(alternating_group(6));
        assert_eq!(outer_structure(&a6, 100_000), Some(OuterStructure::Klein));
        let s6 = perm_group(symmetric_group(6));
        assert_eq!(outer_structure(&s6, 100_000), Some(OuterStructure::Z2));
        assert_eq!(outer_structure(&sym(4), 100_000), Some(OuterStructure::Trivial));
        // Aut(Z5) = Z4, all of it outer
        assert_eq!(outer_structure(&cyclic(5), 1000), Some(OuterStructure::Z4));
        // Aut(Z8) = Z2 × Z2
        assert_eq!(outer_structure(&cyclic(8), 1000), Some(OuterStructure::Klein));
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize(&cyclic(3), 1000), Recognition::Named(Named::Cyclic(3)));
        assert_eq!(recognize(&klein(), 1000), Recognition::Named(Named::Klein));
        let e16 = FiniteGroup::from_generators(0u8, &[1, 2, 4, 8], |a, b| a ^ b, 16).unwrap().0;
        assert_eq!(recognize(&e16, 1000), Recognition::Named(Named::ElementaryAbelian2(4)));
        assert_eq!(recognize(&sym(4), 10_000), Recognition::Named(Named::Symmetric(4)));
        let a5 = perm_group(alternating_group(5));
        assert_eq!(recognize(&a5, 10_000), Recognition::Named(Named::Alternating(5)));
        // Z2 × Z4 has order 8 and is none of the named groups
        let z2z4 = FiniteGroup::from_generators((0u8, 0u8), &[(1, 0), (0, 1)], |a, b| ((a.0 + b.0) % 2, (a.1 + b.1) % 4), 8)
            .unwrap()
            .0;
        assert_eq!(recognize(&z2z4, 1000), Recognition::Unknown);
    }

    #[test]
    fn module_signatures() {
        let s4 = sym(4);
        let v4 = crate::structure::normal_subgroups(&s4).into_iter().find(|n| n.order() == 4).unwrap();
        assert_eq!(module_orbit_signature(&s4, &v4).unwrap(), vec![3]);
        let e16 = FiniteGroup::from_generators(0u8, &[1, 2, 4, 8], |a, b| a ^ b, 16).unwrap().0;
        assert_eq!(module_orbit_signature(&e16, &e16.whole()).unwrap(), vec![1; 15]);
        assert_eq!(module_orbit_signature(&cyclic(4), &cyclic(4).whole()).unwrap_err(),
            Error::UnexpectedStructure("subgroup is not elementary abelian of exponent 2".into()));
    }

    #[test]
    fn fingerprint_text_is_canonical() {
        let a = fingerprint(&sym(4)).to_string();
        let b = fingerprint(&perm_group(symmetric_group(4))).to_string();
        assert_eq!(a, b);
        assert!(a.starts_with("order 24\nclass_sizes 1 3 6 6 8\n"));
    }
}
