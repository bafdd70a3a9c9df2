//! Steiner systems from the extended binary Golay code, their automorphism
//! groups, `M22` and its hexad stabilizers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::ident::{fingerprint, isomorphic, module_orbit_signature, IsoCertificate, IsoOutcome};
use crate::perm::{alternating_group, Perm, PermGroup};
use crate::structure::{complement_search, is_perfect, normal_subgroups, quotient};

/// Quadratic residues modulo 23.
pub const QR23: [usize; 11] = [1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18];

/// A binary linear code of length at most 32, rows as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    pub length: usize,
    pub rows: Vec<u32>,
}

/// Row-reduce to a basis.
fn echelon(vectors: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &v in vectors {
        let mut v = v;
        for &b in &basis {
            let lead = 31 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

impl BinaryCode {
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// All `2^k` codewords.
    pub fn codewords(&self) -> Vec<u32> {
        let mut words = vec![0u32];
        for &r in &self.rows {
            let more: Vec<u32> = words.iter().map(|w| w ^ r).collect();
            words.extend(more);
        }
        words
    }

    pub fn weight_enumerator(&self) -> BTreeMap<u32, usize> {
        let mut hist = BTreeMap::new();
        for w in self.codewords() {
            *hist.entry(w.count_ones()).or_insert(0) += 1;
        }
        hist
    }

    pub fn minimum_weight(&self) -> u32 {
        self.codewords().into_iter().filter(|&w| w != 0).map(u32::count_ones).min().unwrap_or(0)
    }

    /// Rows pairwise orthogonal and dimension half the length.
    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length
            && self.rows.iter().all(|&a| self.rows.iter().all(|&b| (a & b).count_ones() % 2 == 0))
    }

    pub fn bitstring(&self, w: u32) -> String {
        (0..self.length).map(|i| if w >> i & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// Every codeword as a bitstring, position 0 first.
    pub fn dump_codewords(&self) -> String {
        let mut words = self.codewords();
        words.sort_unstable();
        words.iter().map(|&w| self.bitstring(w) + "\n").collect()
    }

    /// Code spanned by a codeword dump.
    pub fn parse_codewords(text: &str) -> Result<BinaryCode> {
        let mut length = None;
        let mut words = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let line = line.trim();
            if *length.get_or_insert(line.len()) != line.len() || line.len() > 32 {
                return Err(Error::Parse(format!("bad codeword length in {line:?}")));
            }
            let mut w = 0u32;
            for (i, c) in line.chars().enumerate() {
                match c {
                    '1' => w |= 1 << i,
                    '0' => {}
                    _ => return Err(Error::Parse(format!("bad bit {c:?}"))),
                }
            }
            words.push(w);
        }
        Ok(BinaryCode { length: length.unwrap_or(0), rows: echelon(&words) })
    }
}

/// The extended Golay code: cyclic shifts of the residue indicator modulo
/// 23, each extended by a parity bit at position 23.
pub fn golay_code() -> Result<BinaryCode> {
    let base: u32 = QR23.iter().fold(0, |m, &r| m | 1 << r);
    let shifts: Vec<u32> = (0..23)
        .map(|s| {
            let rotated = ((base << s) | (base >> (23 - s))) & ((1 << 23) - 1);
            rotated | ((rotated.count_ones() & 1) << 23)
        })
        .collect();
    let code = BinaryCode { length: 24, rows: echelon(&shifts) };
    let expected = BTreeMap::from([(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]);
    if code.dimension() != 12 || code.weight_enumerator() != expected || !code.is_self_dual() {
        return Err(Error::ConstructionFailed(format!(
            "residue construction gave dimension {} and weights {:?}",
            code.dimension(),
            code.weight_enumerator()
        )));
    }
    Ok(code)
}

/// `S(t, k, v)`: blocks are bitmasks over points `0..v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub t: usize,
    pub k: usize,
    pub v: usize,
    pub blocks: Vec<u32>,
}

fn binomial_table() -> [[u64; 33]; 33] {
    let mut c = [[0u64; 33]; 33];
    for n in 0..33 {
        c[n][0] = 1;
        for k in 1..=n {
            c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
        }
    }
    c
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        0
    } else {
        binomial_table()[n][k]
    }
}

/// Colex rank of a subset given as a bitmask.
fn colex_rank(mask: u32, table: &[[u64; 33]; 33]) -> usize {
    let mut r = 0u64;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        r += table[c][i];
        i += 1;
        m &= m - 1;
    }
    r as usize
}

/// All `k`-subsets of a bitmask.
fn subsets_of(mask: u32, k: usize, out: &mut Vec<u32>) {
    fn rec(rest: u32, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if (rest.count_ones() as usize) < k {
            return;
        }
        let low = rest & rest.wrapping_neg();
        rec(rest & !low, k - 1, acc | low, out);
        rec(rest & !low, k, acc, out);
    }
    rec(mask, k, 0, out);
}

pub fn points_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

impl SteinerSystem {
    pub fn new(t: usize, k: usize, v: usize, mut blocks: Vec<u32>) -> SteinerSystem {
        blocks.sort_unstable();
        SteinerSystem { t, k, v, blocks }
    }

    /// Blocks through point `p`.
    pub fn replication(&self, p: usize) -> usize {
        self.blocks.iter().filter(|&&b| b >> p & 1 == 1).count()
    }

    /// Header `t k v`, then one block per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.t, self.k, self.v);
        for &b in &self.blocks {
            let pts: Vec<String> = points_of(b).iter().map(ToString::to_string).collect();
            s.push_str(&pts.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<SteinerSystem> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<usize> = lines
            .next()
            .ok_or_else(|| Error::Parse("empty design file".into()))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header field {t:?}"))))
            .collect::<Result<_>>()?;
        let [t, k, v] = header[..] else {
            return Err(Error::Parse("header needs three fields".into()));
        };
        if v > 32 {
            return Err(Error::Parse(format!("{v} points exceed 32")));
        }
        let mut blocks = Vec::new();
        for line in lines {
            let mut mask = 0u32;
            for tok in line.split_whitespace() {
                let p: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
                if p >= v || mask >> p & 1 == 1 {
                    return Err(Error::Parse(format!("bad block {line:?}")));
                }
                mask |= 1 << p;
            }
            if mask.count_ones() as usize != k {
                return Err(Error::Parse(format!("block {line:?} does not have {k} points")));
            }
            blocks.push(mask);
        }
        Ok(SteinerSystem::new(t, k, v, blocks))
    }

    /// Block index of every `t`-subset, by colex rank. `None` if some
    /// subset is not in exactly one block.
    fn subset_index(&self) -> Option<Vec<u32>> {
        let table = binomial_table();
        let mut idx = vec![u32::MAX; table[self.v][self.t] as usize];
        let mut buf = Vec::new();
        for (bi, &b) in self.blocks.iter().enumerate() {
            buf.clear();
            subsets_of(b, self.t, &mut buf);
            for &s in &buf {
                let r = colex_rank(s, &table);
                if idx[r] != u32::MAX {
                    return None;
                }
                idx[r] = bi as u32;
            }
        }
        idx.iter().all(|&i| i != u32::MAX).then_some(idx)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinerReport {
    pub subsets: u64,
    pub covered_once: u64,
    pub uncovered: u64,
    pub covered_more: u64,
}

impl SteinerReport {
    pub fn passed(&self) -> bool {
        self.covered_once == self.subsets
    }
}

/// Exhaustive count of how often each `t`-subset is covered.
pub fn verify_steiner(s: &SteinerSystem) -> SteinerReport {
    let table = binomial_table();
    let total = table[s.v][s.t];
    let mut counts = vec![0u16; total as usize];
    let mut buf = Vec::new();
    let all = if s.v == 32 { u32::MAX } else { (1u32 << s.v) - 1 };
    for &b in &s.blocks {
        buf.clear();
        if b & !all != 0 || b.count_ones() as usize != s.k {
            continue;
        }
        subsets_of(b, s.t, &mut buf);
        for &sub in &buf {
            counts[colex_rank(sub, &table)] += 1;
        }
    }
    let mut r = SteinerReport { subsets: total, covered_once: 0, uncovered: 0, covered_more: 0 };
    for c in counts {
        match c {
            0 => r.uncovered += 1,
            1 => r.covered_once += 1,
            _ => r.covered_more += 1,
        }
    }
    r
}

fn require_steiner(s: SteinerSystem) -> Result<SteinerSystem> {
    let r = verify_steiner(&s);
    if r.passed() {
        Ok(s)
    } else {
        Err(Error::NotSteiner(format!(
            "S({},{},{}): {} uncovered, {} covered more than once",
            s.t, s.k, s.v, r.uncovered, r.covered_more
        )))
    }
}

/// Supports of the weight-8 codewords, checked as an `S(5,8,24)`.
pub fn octad_design(code: &BinaryCode) -> Result<SteinerSystem> {
    let blocks = code.codewords().into_iter().filter(|w| w.count_ones() == 8).collect();
    require_steiner(SteinerSystem::new(5, 8, code.length, blocks))
}

/// Blocks through `p` with `p` removed; later points shift down by one.
pub fn derive(s: &SteinerSystem, p: usize) -> Result<SteinerSystem> {
    if s.t < 2 || p >= s.v {
        return Err(Error::NotSteiner(format!("cannot derive S({},{},{}) at {p}", s.t, s.k, s.v)));
    }
    let low = (1u32 << p) - 1;
    let blocks = s
        .blocks
        .iter()
        .filter(|&&b| b >> p & 1 == 1)
        .map(|&b| (b & low) | ((b >> (p + 1)) << p))
        .collect();
    require_steiner(SteinerSystem::new(s.t - 1, s.k - 1, s.v - 1, blocks))
}

/// GF(4) = {0, 1, ω, ω²} encoded 0..3; addition is xor.
const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

/// Points and lines of `PG(2, q)` for `q ∈ {2, 4}` as `S(2, q+1, q²+q+1)`.
pub fn projective_plane(q: usize) -> Result<SteinerSystem> {
    if q != 2 && q != 4 {
        return Err(Error::ConstructionFailed(format!("projective plane of order {q} not supported")));
    }
    let mul = |a: u8, b: u8| if q == 2 { a & b } else { GF4_MUL[a as usize][b as usize] };
    // normalized: first nonzero coordinate is 1
    let mut points = Vec::new();
    for a in 0..q as u8 {
        for b in 0..q as u8 {
            for c in 0..q as u8 {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    points.push(v);
                }
            }
        }
    }
    let blocks = points
        .iter()
        .map(|l| {
            points.iter().enumerate().fold(0u32, |m, (i, p)| {
                let dot = mul(l[0], p[0]) ^ mul(l[1], p[1]) ^ mul(l[2], p[2]);
                if dot == 0 {
                    m | 1 << i
                } else {
                    m
                }
            })
        })
        .collect();
    require_steiner(SteinerSystem::new(2, q + 1, points.len(), blocks))
}

/// Backtracking search for point maps `a → b` sending blocks to blocks.
struct DesignSearch<'a> {
    a: &'a SteinerSystem,
    b: &'a SteinerSystem,
    a_index: Vec<u32>,
    b_index: Vec<u32>,
    table: [[u64; 33]; 33],
}

impl<'a> DesignSearch<'a> {
    fn new(a: &'a SteinerSystem, b: &'a SteinerSystem) -> Option<DesignSearch<'a>> {
        if (a.t, a.k, a.v, a.blocks.len()) != (b.t, b.k, b.v, b.blocks.len()) {
            return None;
        }
        Some(DesignSearch { a, b, a_index: a.subset_index()?, b_index: b.subset_index()?, table: binomial_table() })
    }

    fn block_a(&self, s: u32) -> u32 {
        self.a.blocks[self.a_index[colex_rank(s, &self.table)] as usize]
    }

    fn block_b(&self, s: u32) -> u32 {
        self.b.blocks[self.b_index[colex_rank(s, &self.table)] as usize]
    }

    fn image_mask(map: &[usize], mask: u32) -> u32 {
        points_of(mask).iter().fold(0, |m, &p| m | 1 << map[p])
    }

    /// After mapping point `m`, every `t`-subset of mapped points through
    /// `m` must send its block's mapped part into the image block and the
    /// rest outside it.
    fn consistent(&self, map: &[usize], m: usize) -> bool {
        let t = self.a.t;
        if m + 1 < t {
            return true;
        }
        let earlier = (1u32 << m) - 1;
        let mapped = earlier | 1 << m;
        let mut subs = Vec::new();
        subsets_of(earlier, t - 1, &mut subs);
        for s in subs {
            let s = s | 1 << m;
            let block = self.block_a(s);
            let img = self.block_b(Self::image_mask(map, s));
            let inside = Self::image_mask(map, block & mapped);
            let outside = Self::image_mask(map, !block & mapped);
            if inside & !img != 0 || outside & img != 0 {
                return false;
            }
        }
        true
    }

    /// First complete map extending `prefix`.
    fn extend(&self, prefix: &[usize]) -> Option<Vec<usize>> {
        let v = self.a.v;
        let mut map = prefix.to_vec();
        let mut used = prefix.iter().fold(0u32, |m, &p| m | 1 << p);
        if (0..map.len()).any(|m| !self.consistent(&map[..=m], m)) {
            return None;
        }
        fn rec(s: &DesignSearch, map: &mut Vec<usize>, used: &mut u32, v: usize) -> bool {
            let m = map.len();
            if m == v {
                return true;
            }
            for y in 0..v {
                if *used >> y & 1 == 1 {
                    continue;
                }
                map.push(y);
                *used |= 1 << y;
                if s.consistent(map, m) && rec(s, map, used, v) {
                    return true;
                }
                *used &= !(1 << y);
                map.pop();
            }
            false
        }
        rec(self, &mut map, &mut used, v).then_some(map)
    }
}

/// Whether a point permutation maps every block onto a block.
pub fn is_design_automorphism(s: &SteinerSystem, p: &Perm) -> bool {
    s.blocks.iter().all(|&b| s.blocks.binary_search(&p.apply_mask(b)).is_ok())
}

/// Full automorphism group of a design on at most 24 points.
///
/// Levels run from the last point down. At level `i` the generators found
/// so far fix `0..i` pointwise, and a new automorphism is searched for each
/// image of `i` outside their current orbit.
pub fn design_automorphisms(s: &SteinerSystem) -> Result<PermGroup> {
    let search = DesignSearch::new(s, s).ok_or_else(|| Error::NotSteiner("blocks do not form a Steiner system".into()))?;
    let v = s.v;
    let mut gens: Vec<Perm> = Vec::new();
    for i in (0..v).rev() {
        let mut orbit = orbit_of(&gens, i, v);
        for j in i + 1..v {
            if orbit[j] {
                continue;
            }
            let mut prefix: Vec<usize> = (0..i).collect();
            prefix.push(j);
            if let Some(map) = search.extend(&prefix) {
                let p = Perm::from_images(&map)?;
                if !is_design_automorphism(s, &p) {
                    return Err(Error::ConstructionFailed("search returned a non-automorphism".into()));
                }
                gens.push(p);
                orbit = orbit_of(&gens, i, v);
            }
        }
    }
    PermGroup::new(v, gens)
}

fn orbit_of(gens: &[Perm], x: usize, v: usize) -> Vec<bool> {
    let mut seen = vec![false; v];
    seen[x] = true;
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in gens {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    seen
}

/// A point bijection `a → b` mapping blocks onto blocks, if any.
pub fn design_isomorphism(a: &SteinerSystem, b: &SteinerSystem) -> Option<Perm> {
    let search = DesignSearch::new(a, b)?;
    let map = search.extend(&[])?;
    let p = Perm::from_images(&map).ok()?;
    a.blocks.iter().all(|&blk| b.blocks.binary_search(&p.apply_mask(blk)).is_ok()).then_some(p)
}

pub const M22_ORDER: u128 = 443_520;

/// Derived subgroup of the automorphism group of `S(3,6,22)`, checked to
/// have order 443520 and index 2.
pub fn mathieu_m22(aut: &PermGroup) -> Result<PermGroup> {
    let m22 = aut.derived_subgroup();
    if m22.order() != M22_ORDER || aut.order() != 2 * M22_ORDER {
        return Err(Error::UnexpectedStructure(format!(
            "derived subgroup of order {} in a group of order {}",
            m22.order(),
            aut.order()
        )));
    }
    Ok(m22)
}

/// Setwise stabilizer of a block, as a permutation group and an abstract
/// group.
pub fn hexad_stabilizer(m22: &PermGroup, block: u32) -> Result<(PermGroup, FiniteGroup)> {
    let stab = m22.set_stabilizer(&points_of(block));
    let (g, _) = stab.as_finite_group()?;
    Ok((stab, g))
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal
/// subgroup.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let normals: Vec<Subgroup> = normal_subgroups(g).into_iter().filter(|n| n.order() > 1).collect();
    normals
        .iter()
        .filter(|n| !normals.iter().any(|m| m.order() < n.order() && m.is_subset(n)))
        .cloned()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateTier {
    /// Explicit isomorphism, independently verified.
    Direct,
    /// Every structural invariant agrees; no explicit map.
    Structural,
    None,
}

/// Structural comparison of two candidate copies of `Z₂⁴ ⋊ A(6)`.
#[derive(Clone, Debug, Serialize)]
pub struct BridgeReport {
    pub fingerprints_equal: bool,
    pub perfect: (bool, bool),
    /// A unique minimal normal subgroup, elementary abelian of order 16.
    pub unique_minimal_z2_4: (bool, bool),
    /// Quotient by that subgroup certified isomorphic to `A(6)`.
    pub quotient_a6: (bool, bool),
    pub module_signatures: (Vec<usize>, Vec<usize>),
    /// A complement to the minimal normal subgroup was found.
    pub split: (bool, bool),
    pub tier: CertificateTier,
    #[serde(skip)]
    pub certificate: Option<IsoCertificate>,
}

struct Side {
    perfect: bool,
    z2_4: Option<Subgroup>,
    quotient_a6: bool,
    signature: Vec<usize>,
    split: bool,
}

fn analyse_side(g: &FiniteGroup, a6: &FiniteGroup, budget: u64) -> Side {
    let perfect = is_perfect(g);
    let minimal = minimal_normal_subgroups(g);
    let z2_4 = match minimal.as_slice() {
        [n] if n.order() == 16 && n.members().iter().all(|&x| g.mul(x, x) == 0) => Some(n.clone()),
        _ => None,
    };
    let (mut quotient_a6, mut signature, mut split) = (false, Vec::new(), false);
    if let Some(n) = &z2_4 {
        if let Ok(q) = quotient(g, n) {
            quotient_a6 = isomorphic(&q.group, a6, budget).is_certified();
        }
        signature = module_orbit_signature(g, n).unwrap_or_default();
        split = complement_search(g, n, budget).is_ok();
    }
    Side { perfect, z2_4, quotient_a6, signature, split }
}

/// Compare two groups expected to be `Z₂⁴ ⋊ A(6)`: direct isomorphism
/// within `budget` nodes, with the structural invariants as fallback.
pub fn bridge_check(left: &FiniteGroup, right: &FiniteGroup, budget: u64) -> BridgeReport {
    let a6 = alternating_group(6).as_finite_group().expect("A6 enumerates").0;
    let (l, r) = (analyse_side(left, &a6, budget), analyse_side(right, &a6, budget));
    let fingerprints_equal = fingerprint(left) == fingerprint(right);
    let structural = fingerprints_equal
        && l.perfect
        && r.perfect
        && l.z2_4.is_some()
        && r.z2_4.is_some()
        && l.quotient_a6
        && r.quotient_a6
        && l.signature == r.signature
        && l.split
        && r.split;
    let certificate = match isomorphic(left, right, budget) {
        IsoOutcome::Certified(c) => Some(c),
        _ => None,
    };
    let tier = if certificate.is_some() {
        CertificateTier::Direct
    } else if structural {
        CertificateTier::Structural
    } else {
        CertificateTier::None
    };
    BridgeReport {
        fingerprints_equal,
        perfect: (l.perfect, r.perfect),
        unique_minimal_z2_4: (l.z2_4.is_some(), r.z2_4.is_some()),
        quotient_a6: (l.quotient_a6, r.quotient_a6),
        module_signatures: (l.signature, r.signature),
        split: (l.split, r.split),
        tier,
        certificate,
    }
}

/// `S(3,6,22)` by deriving the octad design at points 23 and 22.
pub fn witt_22() -> Result<SteinerSystem> {
    let s24 = octad_design(&golay_code()?)?;
    derive(&derive(&s24, 23)?, 22)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay() {
        let c = golay_code().unwrap();
        assert_eq!(c.dimension(), 12);
        assert_eq!(c.minimum_weight(), 8);
        assert!(c.codewords().contains(&0));
        assert!(c.codewords().iter().all(|w| w.count_ones() % 4 == 0));
        let back = BinaryCode::parse_codewords(&c.dump_codewords()).unwrap();
        assert_eq!(back.codewords().len(), 4096);
        assert_eq!(back.weight_enumerator(), c.weight_enumerator());
        assert!(c.dump_codewords().lines().all(|l| l.len() == 24));
    }

    #[test]
    fn witt_designs() {
        let s24 = octad_design(&golay_code().unwrap()).unwrap();
        assert_eq!(s24.blocks.len(), 759);
        let r = verify_steiner(&s24);
        assert_eq!((r.subsets, r.covered_once), (42504, 42504));
        for (i, &a) in s24.blocks.iter().enumerate().step_by(7) {
            for &b in &s24.blocks[i + 1..] {
                assert!([0, 2, 4].contains(&(a & b).count_ones()));
            }
        }
        let s23 = derive(&s24, 23).unwrap();
        assert_eq!(s23.blocks.len(), 253);
        assert_eq!(759 * 8, 24 * 253);
        let s22 = derive(&s23, 22).unwrap();
        assert_eq!(s22.blocks.len(), 77);
        assert!((0..22).all(|p| s22.replication(p) == 21));
        assert_eq!(verify_steiner(&s22).covered_once, 1540);
    }

    #[test]
    fn corrupted_and_tiny() {
        let s22 = witt_22().unwrap();
        let mut broken = s22.clone();
        broken.blocks.remove(10);
        let r = verify_steiner(&broken);
        assert_eq!(r.uncovered, 20);
        assert!(!r.passed());
        let six = SteinerSystem::new(3, 6, 22, s22.blocks[..6].to_vec());
        assert!(!verify_steiner(&six).passed());
    }

    #[test]
    fn planes() {
        let fano = projective_plane(2).unwrap();
        assert_eq!((fano.v, fano.blocks.len()), (7, 7));
        let pg24 = projective_plane(4).unwrap();
        assert_eq!((pg24.v, pg24.blocks.len()), (21, 21));
        assert_eq!(verify_steiner(&pg24).covered_once, 210);
        assert!((0..21).all(|p| pg24.replication(p) == 5));
        assert!(projective_plane(3).is_err());
    }

    #[test]
    fn fano_automorphisms() {
        let fano = projective_plane(2).unwrap();
        let aut = design_automorphisms(&fano).unwrap();
        assert_eq!(aut.order(), 168);
        assert!(aut.contains(&Perm::identity(7)).unwrap());
        for p in aut.elements().unwrap() {
            assert!(is_design_automorphism(&fano, &p));
        }
    }

    #[test]
    fn text_round_trip() {
        let fano = projective_plane(2).unwrap();
        let text = fano.to_text();
        assert!(text.starts_with("2 3 7\n"));
        assert_eq!(SteinerSystem::parse(&text).unwrap(), fano);
        assert!(SteinerSystem::parse("2 3 7\n0 1\n").is_err());
    }

    #[test]
    fn derived_point_of_s22_is_pg24() {
        let s22 = witt_22().unwrap();
        let s21 = derive(&s22, 21).unwrap();
        assert!(design_isomorphism(&s21, &projective_plane(4).unwrap()).is_some());
    }
}
