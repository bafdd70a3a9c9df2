//! Abstract finite groups realized as Cayley graphs.
//!
//! Every group in this crate is produced by a breadth-first closure of some
//! concrete generating set (matrices, permutations, cosets). The closure
//! records `x · g` for every element `x` and generator `g`, together with the
//! BFS tree, which is all that is needed to multiply arbitrary elements: the
//! product `a · b` is obtained by right-multiplying `a` along the word of `b`.
//! Small groups additionally get a materialized multiplication table.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type ElementSet<T> = IndexSet<T, FxBuildHasher>;

/// Groups up to this order get a full multiplication table.
pub const TABLE_LIMIT: usize = 6000;

/// Right-multiplication table and BFS tree of a closure.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    gen_count: usize,
    right: Vec<u32>,
    parent: Vec<u32>,
    parent_gen: Vec<u8>,
}

impl CayleyGraph {
    pub fn order(&self) -> usize {
        self.parent.len()
    }

    pub fn gen_count(&self) -> usize {
        self.gen_count
    }

    /// `x · generator[j]`
    pub fn right(&self, x: usize, j: usize) -> usize {
        self.right[x * self.gen_count + j] as usize
    }

    /// Reassemble from raw tables, checking shape and tree consistency.
    pub fn from_raw(gen_count: usize, right: Vec<u32>, parent: Vec<u32>, parent_gen: Vec<u8>) -> Result<CayleyGraph> {
        let n = parent.len();
        let bad = |m: &str| Error::Parse(format!("inconsistent Cayley table: {m}"));
        if right.len() != n * gen_count || parent_gen.len() != n || n == 0 {
            return Err(bad("shape"));
        }
        if right.iter().any(|&r| r as usize >= n) {
            return Err(bad("index out of range"));
        }
        for x in 1..n {
            let (p, j) = (parent[x] as usize, parent_gen[x] as usize);
            if p >= x || j >= gen_count || right[p * gen_count + j] as usize != x {
                return Err(bad("tree"));
            }
        }
        Ok(CayleyGraph { gen_count, right, parent, parent_gen })
    }

    pub fn raw_parts(&self) -> (&[u32], &[u32], &[u8]) {
        (&self.right, &self.parent, &self.parent_gen)
    }
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// Element 0 is the identity; the ordering is deterministic given the
/// generator order. Fails with `LimitExceeded` once more than `limit`
/// elements have been found.
pub fn closure<T, F>(identity: T, generators: &[T], mut mul: F, limit: usize) -> Result<(ElementSet<T>, CayleyGraph)>
where
    T: Eq + Hash,
    F: FnMut(&T, &T) -> T,
{
    assert!(generators.len() < 256, "at most 255 generators");
    let k = generators.len();
    let mut elements: ElementSet<T> = IndexSet::with_hasher(FxBuildHasher);
    elements.insert(identity);
    let mut right = Vec::new();
    let mut parent = vec![0u32];
    let mut parent_gen = vec![0u8];
    let mut head = 0;
    while head < elements.len() {
        for (j, g) in generators.iter().enumerate() {
            let y = mul(&elements[head], g);
            let (idx, fresh) = elements.insert_full(y);
            if fresh {
                if elements.len() > limit {
                    return Err(Error::LimitExceeded { limit });
                }
                parent.push(head as u32);
                parent_gen.push(j as u8);
            }
            right.push(idx as u32);
        }
        head += 1;
    }
    Ok((elements, CayleyGraph { gen_count: k, right, parent, parent_gen }))
}

/// A finite group with elements `0..order`, identity `0`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    tag: u64,
    cayley: CayleyGraph,
    generators: Vec<usize>,
    inverse: Vec<u32>,
    table: Option<Vec<u16>>,
}

impl FiniteGroup {
    pub fn from_cayley(cayley: CayleyGraph) -> FiniteGroup {
        let n = cayley.order();
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        cayley.gen_count.hash(&mut h);
        cayley.right.hash(&mut h);
        let tag = h.finish();
        let generators = (0..cayley.gen_count).map(|j| cayley.right(0, j)).collect();
        let mut g = FiniteGroup { tag, cayley, generators, inverse: Vec::new(), table: None };
        if n <= TABLE_LIMIT {
            g.table = Some(g.build_table());
        }
        g.inverse = g.build_inverses();
        g
    }

    /// Closure of concrete generators, returning the group and its elements
    /// in index order.
    pub fn from_generators<T, F>(identity: T, generators: &[T], mul: F, limit: usize) -> Result<(FiniteGroup, ElementSet<T>)>
    where
        T: Eq + Hash,
        F: FnMut(&T, &T) -> T,
    {
        let (elements, cayley) = closure(identity, generators, mul, limit)?;
        Ok((FiniteGroup::from_cayley(cayley), elements))
    }

    fn build_table(&self) -> Vec<u16> {
        let n = self.order();
        let mut t = vec![0u16; n * n];
        for a in 0..n {
            let row = &mut t[a * n..(a + 1) * n];
            row[0] = a as u16;
            for b in 1..n {
                let p = self.cayley.parent[b] as usize;
                let j = self.cayley.parent_gen[b] as usize;
                row[b] = self.cayley.right(row[p] as usize, j) as u16;
            }
        }
        t
    }

    fn build_inverses(&self) -> Vec<u32> {
        let n = self.order();
        let gen_inv: Vec<usize> = (0..self.cayley.gen_count)
            .map(|j| {
                let (mut prev, mut cur) = (0, self.generators[j]);
                while cur != 0 {
                    prev = cur;
                    cur = self.cayley.right(cur, j);
                }
                prev
            })
            .collect();
        let mut inv = vec![0u32; n];
        for x in 1..n {
            let p = self.cayley.parent[x] as usize;
            let j = self.cayley.parent_gen[x] as usize;
            inv[x] = self.mul(gen_inv[j], inv[p] as usize) as u32;
        }
        inv
    }

    pub fn order(&self) -> usize {
        self.cayley.order()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Fingerprint of the concrete Cayley table; guards against mixing
    /// subgroups of different groups.
    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn cayley(&self) -> &CayleyGraph {
        &self.cayley
    }

    /// `(parent, generator slot)` with `x = parent · generators[slot]`.
    pub fn parent(&self, x: usize) -> Option<(usize, usize)> {
        (x != 0).then(|| (self.cayley.parent[x] as usize, self.cayley.parent_gen[x] as usize))
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.table {
            return t[a * self.order() + b] as usize;
        }
        let mut word: SmallVec<[u8; 64]> = SmallVec::new();
        let mut x = b;
        while x != 0 {
            word.push(self.cayley.parent_gen[x]);
            x = self.cayley.parent[x] as usize;
        }
        word.iter().rev().fold(a, |acc, &j| self.cayley.right(acc, j as usize))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g⁻¹ · x · g`
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ · b⁻¹ · a · b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let (mut acc, mut base) = (0, x);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let (mut k, mut y) = (1, x);
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<u32> {
        (0..self.order()).map(|x| self.element_order(x) as u32).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_generated(&[])
    }

    pub fn whole(&self) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert_range(..);
        Subgroup {
            group_tag: self.tag,
            members: (0..self.order()).collect(),
            mask,
            generators: self.generators.iter().copied().filter(|&g| g != 0).collect(),
        }
    }

    /// Least subgroup containing `seeds`.
    pub fn subgroup_generated(&self, seeds: &[usize]) -> Subgroup {
        let mut b = SubgroupBuilder::new(self);
        for &s in seeds {
            b.add(s, usize::MAX);
        }
        b.finish()
    }

    /// Like [`subgroup_generated`](Self::subgroup_generated) but gives up
    /// once the subgroup exceeds `max` elements.
    pub fn subgroup_generated_bounded(&self, seeds: &[usize], max: usize) -> Option<Subgroup> {
        let mut b = SubgroupBuilder::new(self);
        for &s in seeds {
            if !b.add(s, max) {
                return None;
            }
        }
        Some(b.finish())
    }

    /// Validate that `members` is a subgroup and wrap it.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Result<Subgroup> {
        let mut mask = FixedBitSet::with_capacity(self.order());
        for &m in members {
            if m >= self.order() {
                return Err(Error::UnexpectedStructure(format!("element {m} out of range")));
            }
            mask.insert(m);
        }
        let gens = {
            let mut b = SubgroupBuilder::new(self);
            for &m in members {
                b.add(m, usize::MAX);
            }
            b.finish()
        };
        if gens.mask != mask {
            return Err(Error::UnexpectedStructure("member set is not closed".into()));
        }
        Ok(gens)
    }

    /// Smallest subgroup containing `seeds` that is normal in `self`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup {
        let mut b = SubgroupBuilder::new(self);
        for &s in seeds {
            b.add(s, usize::MAX);
        }
        loop {
            let missing = self.generators.iter().find_map(|&t| {
                b.gens.iter().map(|&x| self.conj(x, t)).find(|&c| !b.mask.contains(c))
            });
            match missing {
                Some(c) => {
                    b.add(c, usize::MAX);
                }
                None => return b.finish(),
            }
        }
    }

    /// A small generating set: an element of maximal order plus, when
    /// possible, one partner generating the whole group; otherwise greedy
    /// by descending element order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return Vec::new();
        }
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = (1..n).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
        let first = by_order[0];
        if orders[first] as usize == n {
            return vec![first];
        }
        for &y in by_order.iter().take(96) {
            if let Some(s) = self.subgroup_generated_bounded(&[first, y], n) {
                if s.order() == n {
                    return vec![first, y];
                }
            }
        }
        let mut b = SubgroupBuilder::new(self);
        for &y in &by_order {
            if b.members.len() == n {
                break;
            }
            b.add(y, usize::MAX);
        }
        b.gens
    }

    /// The subgroup as a group in its own right.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<Embedding> {
        self.check_owner(h)?;
        let (group, elements) =
            FiniteGroup::from_generators(0usize, h.generators(), |&a, &b| self.mul(a, b), h.order())?;
        let to_parent: Vec<usize> = elements.into_iter().collect();
        let mut from_parent = vec![u32::MAX; self.order()];
        for (i, &p) in to_parent.iter().enumerate() {
            from_parent[p] = i as u32;
        }
        Ok(Embedding { group, to_parent, from_parent, parent_tag: self.tag })
    }

    pub(crate) fn check_owner(&self, h: &Subgroup) -> Result<()> {
        if h.group_tag != self.tag || h.mask.len() != self.order() {
            return Err(Error::ForeignSubgroup);
        }
        Ok(())
    }
}

/// Incremental subgroup closure.
pub(crate) struct SubgroupBuilder<'a> {
    g: &'a FiniteGroup,
    pub(crate) mask: FixedBitSet,
    pub(crate) members: Vec<usize>,
    pub(crate) gens: Vec<usize>,
}

impl<'a> SubgroupBuilder<'a> {
    pub(crate) fn new(g: &'a FiniteGroup) -> Self {
        let mut mask = FixedBitSet::with_capacity(g.order());
        mask.insert(0);
        SubgroupBuilder { g, mask, members: vec![0], gens: Vec::new() }
    }

    /// Adjoin `s`; returns false if the subgroup grew past `max`.
    pub(crate) fn add(&mut self, s: usize, max: usize) -> bool {
        if self.mask.contains(s) {
            return true;
        }
        self.gens.push(s);
        let old = self.members.len();
        let mut i = 0;
        while i < self.members.len() {
            let x = self.members[i];
            let gens: &[usize] = if i < old { std::slice::from_ref(&s) } else { &self.gens };
            for &h in gens {
                let y = self.g.mul(x, h);
                if !self.mask.put(y) {
                    self.members.push(y);
                    if self.members.len() > max {
                        return false;
                    }
                }
            }
            i += 1;
        }
        true
    }

    pub(crate) fn finish(mut self) -> Subgroup {
        self.members.sort_unstable();
        Subgroup { group_tag: self.g.tag, members: self.members, mask: self.mask, generators: self.gens }
    }
}

/// A subgroup of a specific [`FiniteGroup`], stored as a sorted member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    group_tag: u64,
    members: Vec<usize>,
    mask: FixedBitSet,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn group_tag(&self) -> u64 {
        self.group_tag
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn same_members(&self, other: &Subgroup) -> bool {
        self.group_tag == other.group_tag && self.mask == other.mask
    }

    pub fn intersection(&self, other: &Subgroup, g: &FiniteGroup) -> Result<Subgroup> {
        g.check_owner(self)?;
        g.check_owner(other)?;
        let common: Vec<usize> = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        g.subgroup_from_members(&common)
    }

    /// Text form: a header carrying the parent fingerprint, then one member
    /// index per line.
    pub fn serialize(&self) -> String {
        let mut s = format!("# subgroup of group {:016x} order {}\n", self.group_tag, self.order());
        for m in &self.members {
            s.push_str(&m.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str, g: &FiniteGroup) -> Result<Subgroup> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty subgroup file".into()))?;
        let tag = header
            .strip_prefix("# subgroup of group ")
            .and_then(|r| r.split_whitespace().next())
            .and_then(|t| u64::from_str_radix(t, 16).ok())
            .ok_or_else(|| Error::Parse(format!("bad subgroup header {header:?}")))?;
        if tag != g.tag() {
            return Err(Error::ForeignSubgroup);
        }
        let members = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad member {l:?}"))))
            .collect::<Result<Vec<_>>>()?;
        g.subgroup_from_members(&members)
    }
}

/// A subgroup realized as its own [`FiniteGroup`] with index maps.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub group: FiniteGroup,
    to_parent: Vec<usize>,
    from_parent: Vec<u32>,
    parent_tag: u64,
}

impl Embedding {
    pub fn to_parent(&self, x: usize) -> usize {
        self.to_parent[x]
    }

    pub fn from_parent(&self, p: usize) -> Option<usize> {
        let v = self.from_parent[p];
        (v != u32::MAX).then_some(v as usize)
    }

    /// Intersection of a parent subgroup with the image, as a subgroup of
    /// the embedded group.
    pub fn pull_back(&self, h: &Subgroup) -> Result<Subgroup> {
        if h.group_tag != self.parent_tag {
            return Err(Error::ForeignSubgroup);
        }
        let members: Vec<usize> = h.members().iter().filter_map(|&p| self.from_parent(p)).collect();
        self.group.subgroup_from_members(&members)
    }

    pub fn push_forward(&self, h: &Subgroup, parent: &FiniteGroup) -> Result<Subgroup> {
        self.group.check_owner(h)?;
        let members: Vec<usize> = h.members().iter().map(|&x| self.to_parent[x]).collect();
        parent.subgroup_from_members(&members)
    }
}
