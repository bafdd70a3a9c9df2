//! Point-line geometry of the n-qubit Pauli operators modulo phases.
//!
//! A point is a nonzero symplectic vector `(x, z)` over GF(2); bit `q` of
//! each mask belongs to tensor factor `q`, counting from the left. Two
//! points commute when `x·z' + x'·z = 0`. Lines are the maximal sets of
//! pairwise commuting points.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::clifford::InnerClifford;
use crate::cyclotomic::Cyclo8;
use crate::error::{Error, Result};
use crate::matrix::{pauli_factor, UMatrix};
use crate::perm::{action_homomorphism, PermGroup};

/// A nonzero symplectic vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PauliPoint {
    pub x: u8,
    pub z: u8,
}

impl PauliPoint {
    pub fn commutes(&self, other: &PauliPoint) -> bool {
        ((self.x & other.z) ^ (other.x & self.z)).count_ones().is_multiple_of(2)
    }

    /// Symplectic sum, the point of the product operator.
    pub fn sum(&self, other: &PauliPoint) -> PauliPoint {
        PauliPoint { x: self.x ^ other.x, z: self.z ^ other.z }
    }

    /// `I`, `X`, `Y` or `Z` on factor `q`.
    pub fn factor(&self, q: usize) -> char {
        match (self.x >> q & 1, self.z >> q & 1) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (1, 1) => 'Y',
            _ => 'Z',
        }
    }

    /// Tensor word such as `XIZ`.
    pub fn word(&self, qubits: usize) -> String {
        (0..qubits).map(|q| self.factor(q)).collect()
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    /// The Hermitian operator `σ ⊗ … ⊗ σ`.
    pub fn matrix(&self, qubits: usize) -> UMatrix {
        (0..qubits).fold(UMatrix::identity(1), |acc, q| {
            acc.tensor(&pauli_factor(self.x >> q & 1 == 1, self.z >> q & 1 == 1))
        })
    }
}

/// Points plus lines as sorted index sets.
#[derive(Clone, Debug, Serialize)]
pub struct PointLineGeometry {
    pub qubits: usize,
    pub points: Vec<PauliPoint>,
    pub lines: Vec<Vec<usize>>,
}

fn letter_code(c: char) -> u8 {
    match c {
        'X' => 1,
        'Y' => 2,
        'Z' => 3,
        _ => 0,
    }
}

impl PointLineGeometry {
    /// Sub-geometry on explicit lines over the same point list.
    pub fn with_lines(&self, lines: Vec<Vec<usize>>) -> PointLineGeometry {
        PointLineGeometry { qubits: self.qubits, points: self.points.clone(), lines }
    }

    pub fn point_index(&self, p: &PauliPoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// Indices of the lines through point `p`.
    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&l| self.lines[l].contains(&p)).collect()
    }

    /// Points that lie on at least one line.
    pub fn covered_points(&self) -> Vec<usize> {
        let mut pts: Vec<usize> = self.lines.iter().flatten().copied().collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// Commutation graph as adjacency bitmasks.
    pub fn commutation_graph(&self) -> Vec<u64> {
        let n = self.points.len();
        (0..n)
            .map(|i| {
                (0..n).filter(|&j| j != i && self.points[i].commutes(&self.points[j])).fold(0u64, |m, j| m | 1 << j)
            })
            .collect()
    }

    /// Display label: `1 2 3` for `I⊗X, I⊗Y, I⊗Z`, `a b c` for `X⊗I, Y⊗I,
    /// Z⊗I`, `4..12` for the rest in `XX, XY, …, ZZ` order. Other qubit
    /// counts use the tensor word.
    pub fn label(&self, p: usize) -> String {
        let pt = self.points[p];
        if self.qubits != 2 {
            return pt.word(self.qubits);
        }
        let w: Vec<char> = pt.word(2).chars().collect();
        match (w[0], w[1]) {
            ('I', c) => letter_code(c).to_string(),
            (c, 'I') => ["a", "b", "c"][letter_code(c) as usize - 1].to_string(),
            (a, b) => (4 + 3 * (letter_code(a) - 1) + (letter_code(b) - 1)).to_string(),
        }
    }
}

/// Bron–Kerbosch with pivoting over bitmask adjacency.
pub fn maximal_cliques(adj: &[u64]) -> Vec<Vec<usize>> {
    fn bk(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let n = adj.len();
    assert!(n <= 64, "clique search works on at most 64 vertices");
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut masks = Vec::new();
    bk(adj, 0, all, 0, &mut masks);
    let mut cliques: Vec<Vec<usize>> =
        masks.into_iter().map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect();
    cliques.sort();
    cliques
}

/// Points are the `4ⁿ − 1` nonzero vectors, ordered by their tensor words
/// read as base-4 numbers (`I < X < Y < Z`, leftmost factor most
/// significant); lines are the maximal commuting sets.
pub fn build_pauli_geometry(qubits: usize) -> Result<PointLineGeometry> {
    if !(1..=3).contains(&qubits) {
        return Err(Error::UnsupportedQubitCount(qubits));
    }
    let mut points = Vec::new();
    for code in 1..(1usize << (2 * qubits)) {
        let (mut x, mut z) = (0u8, 0u8);
        for q in 0..qubits {
            let digit = code >> (2 * (qubits - 1 - q)) & 3;
            let (bx, bz) = [(0, 0), (1, 0), (1, 1), (0, 1)][digit];
            x |= bx << q;
            z |= bz << q;
        }
        points.push(PauliPoint { x, z });
    }
    let mut geom = PointLineGeometry { qubits, points, lines: Vec::new() };
    geom.lines = maximal_cliques(&geom.commutation_graph());
    Ok(geom)
}

/// Number of maximal totally isotropic subspaces: `(2+1)(2²+1)…(2ⁿ+1)`.
pub fn polar_space_line_count(qubits: u32) -> u64 {
    (1..=qubits).map(|k| (1u64 << k) + 1).product()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GqReport {
    pub line_sizes_ok: bool,
    pub point_degrees_ok: bool,
    pub antiflags: usize,
    /// Antiflags with exactly one line through the point meeting the line.
    pub antiflags_with_unique_transversal: usize,
}

impl GqReport {
    pub fn passed(&self) -> bool {
        self.line_sizes_ok && self.point_degrees_ok && self.antiflags == self.antiflags_with_unique_transversal
    }
}

/// Check the generalized quadrangle axioms with parameters `(s, t)` on the
/// points covered by the lines.
pub fn verify_gq_axioms(geom: &PointLineGeometry, s: usize, t: usize) -> GqReport {
    let pts = geom.covered_points();
    let line_sizes_ok = geom.lines.iter().all(|l| l.len() == s + 1);
    let point_degrees_ok = pts.iter().all(|&p| geom.lines_through(p).len() == t + 1);
    let (mut antiflags, mut unique) = (0, 0);
    for &p in &pts {
        let through = geom.lines_through(p);
        for line in &geom.lines {
            if line.contains(&p) {
                continue;
            }
            antiflags += 1;
            let meeting = through.iter().filter(|&&m| geom.lines[m].iter().any(|q| line.contains(q))).count();
            if meeting == 1 {
                unique += 1;
            }
        }
    }
    GqReport { line_sizes_ok, point_degrees_ok, antiflags, antiflags_with_unique_transversal: unique }
}

/// All partitions of the points into disjoint lines, as sorted line-index
/// lists.
pub fn spreads(geom: &PointLineGeometry) -> Vec<Vec<usize>> {
    let n = geom.points.len();
    let all: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let masks: Vec<u64> = geom.lines.iter().map(|l| l.iter().fold(0u64, |m, &p| m | 1 << p)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(masks: &[u64], covered: u64, all: u64, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if covered == all {
            let mut s = chosen.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        let p = (!covered & all).trailing_zeros();
        for (i, &m) in masks.iter().enumerate() {
            if m >> p & 1 == 1 && m & covered == 0 {
                chosen.push(i);
                rec(masks, covered | m, all, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&masks, 0, all, &mut chosen, &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpreadStructure {
    pub spreads: usize,
    /// Every pair of distinct spreads shares exactly one line.
    pub pairwise_single_line: bool,
    /// Number of times each line occurs across all spreads.
    pub line_multiplicities: Vec<usize>,
    /// Shared lines are in bijection with pairs of spreads, the edges of a
    /// complete graph on the spreads.
    pub complete_graph: bool,
}

pub fn spread_structure(geom: &PointLineGeometry, all: &[Vec<usize>]) -> SpreadStructure {
    let mut mult = vec![0usize; geom.lines.len()];
    for s in all {
        for &l in s {
            mult[l] += 1;
        }
    }
    let mut shared = Vec::new();
    let mut pairwise = true;
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let common: Vec<usize> = all[i].iter().filter(|l| all[j].contains(l)).copied().collect();
            pairwise &= common.len() == 1;
            shared.extend(common);
        }
    }
    shared.sort_unstable();
    let distinct = shared.windows(2).all(|w| w[0] != w[1]);
    let k = all.len();
    let complete_graph = pairwise && distinct && shared.len() == k * (k - 1) / 2 && shared.len() == geom.lines.len();
    SpreadStructure { spreads: k, pairwise_single_line: pairwise, line_multiplicities: mult, complete_graph }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LineKind {
    Product,
    Entangled,
}

/// Entangled when every point acts nontrivially on both qubits.
pub fn classify_line_entanglement(geom: &PointLineGeometry) -> Vec<LineKind> {
    geom.lines
        .iter()
        .map(|l| {
            if l.iter().all(|&p| geom.points[p].weight() == 2) {
                LineKind::Entangled
            } else {
                LineKind::Product
            }
        })
        .collect()
}

/// Exact eigenbasis analysis of a two-qubit line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchmidtReport {
    /// For each sign pair `(ε₁, ε₂)`, whether the 2×2 reshaped eigenvector
    /// has zero determinant (a product state).
    pub product_states: [bool; 4],
    pub projectors_sum_to_identity: bool,
    pub kind: LineKind,
}

/// Projectors `(I + ε₁A)(I + ε₂B)/4` on two of the line's operators.
pub fn eigenbasis_schmidt_check(geom: &PointLineGeometry, line: usize) -> Result<SchmidtReport> {
    if geom.qubits != 2 {
        return Err(Error::UnsupportedQubitCount(geom.qubits));
    }
    let l = &geom.lines[line];
    if l.len() != 3 {
        return Err(Error::InconsistentLine(format!("line {line} has {} points", l.len())));
    }
    let a = geom.points[l[0]].matrix(2);
    let b = geom.points[l[1]].matrix(2);
    let id = UMatrix::identity(4);
    let quarter = Cyclo8::from_ints([1, 0, 0, 0], 2);
    let mut product_states = [false; 4];
    let mut sum = UMatrix::scalar(4, &Cyclo8::zero());
    for (k, (e1, e2)) in [(1, 1), (1, -1), (-1, 1), (-1, -1)].into_iter().enumerate() {
        let fa = id.add(&a.scale(&Cyclo8::from_int(e1)));
        let fb = id.add(&b.scale(&Cyclo8::from_int(e2)));
        let p = fa.mul(&fb).scale(&quarter);
        if !p.trace().is_one() {
            return Err(Error::InconsistentLine(format!("projector trace {} on line {line}", p.trace())));
        }
        if p.mul(&p) != p {
            return Err(Error::InconsistentLine(format!("projector on line {line} is not idempotent")));
        }
        let col = (0..4)
            .find(|&c| (0..4).any(|r| !p.get(r, c).is_zero()))
            .ok_or_else(|| Error::InconsistentLine("zero projector".into()))?;
        let v: Vec<&Cyclo8> = (0..4).map(|r| p.get(r, col)).collect();
        let det = &(v[0] * v[3]) - &(v[1] * v[2]);
        product_states[k] = det.is_zero();
        sum = sum.add(&p);
    }
    let kind = if product_states.iter().all(|&z| !z) { LineKind::Entangled } else { LineKind::Product };
    Ok(SchmidtReport { product_states, projectors_sum_to_identity: sum.is_identity(), kind })
}

/// Commutation tested as `AB − BA = 0` on the Hermitian representatives.
pub fn matrices_commute(geom: &PointLineGeometry, i: usize, j: usize) -> bool {
    let a = geom.points[i].matrix(geom.qubits);
    let b = geom.points[j].matrix(geom.qubits);
    a.mul(&b).sub(&b.mul(&a)).is_zero()
}

/// Vertex bijections `a → b` preserving adjacency. Stops after `limit`
/// maps when one is given; returns the count and the first map found.
pub fn graph_isomorphisms(a: &[u64], b: &[u64], limit: Option<u64>) -> (u64, Option<Vec<usize>>) {
    let n = a.len();
    if n != b.len() {
        return (0, None);
    }
    let deg_a: Vec<u32> = a.iter().map(|m| m.count_ones()).collect();
    let deg_b: Vec<u32> = b.iter().map(|m| m.count_ones()).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    let mut count = 0u64;
    let mut first = None;
    fn rec(
        v: usize,
        a: &[u64],
        b: &[u64],
        deg: (&[u32], &[u32]),
        map: &mut Vec<usize>,
        used: &mut u64,
        count: &mut u64,
        first: &mut Option<Vec<usize>>,
        limit: Option<u64>,
    ) -> bool {
        if v == a.len() {
            *count += 1;
            if first.is_none() {
                *first = Some(map.clone());
            }
            return limit.is_none_or(|l| *count < l);
        }
        for w in 0..b.len() {
            if *used >> w & 1 == 1 || deg.0[v] != deg.1[w] {
                continue;
            }
            let ok = (0..v).all(|u| (a[v] >> u & 1) == (b[w] >> map[u] & 1));
            if !ok {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            let go_on = rec(v + 1, a, b, deg, map, used, count, first, limit);
            *used &= !(1 << w);
            map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(0, a, b, (&deg_a, &deg_b), &mut map, &mut used, &mut count, &mut first, limit);
    (count, first)
}

/// Complement of the line graph of `K₆`: the 15 pairs of six symbols,
/// adjacent when disjoint.
pub fn complement_line_graph_k6() -> (Vec<(usize, usize)>, Vec<u64>) {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
    let adj = pairs
        .iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(c, d))| a != c && a != d && b != c && b != d)
                .fold(0u64, |m, (k, _)| m | 1 << k)
        })
        .collect();
    (pairs, adj)
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphModelReport {
    pub commutation_degrees: Vec<u32>,
    pub model_degrees: Vec<u32>,
    /// Point `i` maps to pair `isomorphism[i]` of the model.
    pub isomorphism: Option<Vec<(usize, usize)>>,
    pub automorphisms: u64,
}

pub fn graph_model_check(geom: &PointLineGeometry) -> GraphModelReport {
    let ours = geom.commutation_graph();
    let (pairs, model) = complement_line_graph_k6();
    let (_, first) = graph_isomorphisms(&ours, &model, Some(1));
    let (automorphisms, _) = graph_isomorphisms(&ours, &ours, None);
    GraphModelReport {
        commutation_degrees: ours.iter().map(|m| m.count_ones()).collect(),
        model_degrees: model.iter().map(|m| m.count_ones()).collect(),
        isomorphism: first.map(|m| m.into_iter().map(|k| pairs[k]).collect()),
        automorphisms,
    }
}

/// Point lookup for operators of the form `phase · P` with `phase⁴ = 1`.
pub struct PointLookup {
    table: HashMap<UMatrix, usize>,
}

impl PointLookup {
    pub fn new(geom: &PointLineGeometry) -> PointLookup {
        let mut table = HashMap::new();
        for (i, p) in geom.points.iter().enumerate() {
            let m = p.matrix(geom.qubits);
            for k in 0..4 {
                table.insert(m.scale(&Cyclo8::zeta_pow(2 * k)), i);
            }
        }
        PointLookup { table }
    }

    pub fn find(&self, m: &UMatrix) -> Option<usize> {
        self.table.get(m).copied()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationReport {
    pub image_order: u128,
    pub kernel_order: usize,
    /// The kernel equals the order-16 normal subgroup of the inner group.
    pub kernel_is_minimal_normal: bool,
    pub preserves_lines: bool,
    #[serde(skip)]
    pub image: PermGroup,
}

/// Action of the inner two-qubit Clifford group on the 15 points by
/// `U·g·U†`, signs ignored.
pub fn conjugation_action_check(inner: &InnerClifford, geom: &PointLineGeometry) -> Result<ConjugationReport> {
    if inner.qubits != geom.qubits {
        return Err(Error::UnsupportedQubitCount(geom.qubits));
    }
    let lookup = PointLookup::new(geom);
    let mats: Vec<UMatrix> = geom.points.iter().map(|p| p.matrix(geom.qubits)).collect();
    let g = inner.group();
    let action = |x: usize, p: usize| {
        let u = inner.matrix_of(x);
        let image = u.mul(&mats[p]).mul(&u.adjoint());
        lookup.find(&image).unwrap_or(usize::MAX)
    };
    // a missing image surfaces as a non-bijective generator
    let (image, kernel) = action_homomorphism(g, |x, p| action(x, p).min(geom.points.len()), geom.points.len())
        .map_err(|e| Error::ActionInconsistent(e.to_string()))?;
    let line_masks: Vec<u64> = geom.lines.iter().map(|l| l.iter().fold(0u64, |m, &p| m | 1 << p)).collect();
    let mut sorted_masks = line_masks.clone();
    sorted_masks.sort_unstable();
    let preserves_lines = image.elements()?.iter().all(|perm| {
        line_masks.iter().all(|&m| {
            let img = (0..geom.points.len()).filter(|&p| m >> p & 1 == 1).fold(0u64, |acc, p| acc | 1 << perm.apply(p));
            sorted_masks.binary_search(&img).is_ok()
        })
    });
    let kernel_is_minimal_normal = inner
        .proper_normal_subgroups()
        .iter()
        .find(|n| n.order() == 16)
        .is_some_and(|n| n.same_members(&kernel));
    Ok(ConjugationReport {
        image_order: image.order(),
        kernel_order: kernel.order(),
        kernel_is_minimal_normal,
        preserves_lines,
        image,
    })
}

/// The projective line over `GF(2) × GF(2)` and its grid.
#[derive(Clone, Debug, Serialize)]
pub struct RingLineGrid {
    /// Admissible pairs `(x, y)`; ring elements are 2-bit masks, one bit
    /// per coordinate.
    pub points: Vec<(u8, u8)>,
    /// Fibres of the first coordinate projection.
    pub rows: Vec<Vec<usize>>,
    /// Fibres of the second coordinate projection.
    pub columns: Vec<Vec<usize>>,
    /// Geometry point index of each ring point.
    pub to_pauli: Vec<usize>,
    /// Geometry line index of each row, then each column.
    pub grid_lines: Vec<usize>,
}

/// Enumerate the ring's projective line and match it with the nine
/// two-factor points, rows and columns going to the two parallel classes
/// of entangled lines.
pub fn ring_projective_line_grid(geom: &PointLineGeometry) -> Result<RingLineGrid> {
    // Units of GF(2)×GF(2): only (1,1). A pair is admissible when it
    // generates R², i.e. is nonzero in each coordinate.
    let units = [3u8];
    let mut classes: Vec<Vec<(u8, u8)>> = Vec::new();
    for x in 0..4u8 {
        for y in 0..4u8 {
            if x | y != 3 || classes.iter().any(|c| c.contains(&(x, y))) {
                continue;
            }
            classes.push(units.iter().map(|&u| (x & u, y & u)).collect());
        }
    }
    let points: Vec<(u8, u8)> = classes.iter().map(|c| c[0]).collect();
    let proj = |&(x, y): &(u8, u8), bit: u8| ((x >> bit) & 1, (y >> bit) & 1);
    let gf2_line = [(1u8, 0u8), (0, 1), (1, 1)];
    let fibres = |bit: u8| -> Vec<Vec<usize>> {
        gf2_line
            .iter()
            .map(|q| (0..points.len()).filter(|&i| proj(&points[i], bit) == *q).collect())
            .collect()
    };
    let (rows, columns) = (fibres(0), fibres(1));

    let kinds = classify_line_entanglement(geom);
    let entangled: Vec<usize> = (0..geom.lines.len()).filter(|&l| kinds[l] == LineKind::Entangled).collect();
    let fail = |m: &str| Error::UnexpectedStructure(format!("ring line grid: {m}"));
    if entangled.len() != 6 {
        return Err(fail("expected six entangled lines"));
    }
    // Parallel class of the first entangled line: it and the lines missing it.
    let meets = |a: usize, b: usize| geom.lines[a].iter().any(|p| geom.lines[b].contains(p));
    let first = entangled[0];
    let row_lines: Vec<usize> = entangled.iter().copied().filter(|&l| l == first || !meets(l, first)).collect();
    let col_lines: Vec<usize> = entangled.iter().copied().filter(|l| !row_lines.contains(l)).collect();
    if row_lines.len() != 3 || col_lines.len() != 3 {
        return Err(fail("entangled lines do not split into two parallel classes"));
    }
    let mut to_pauli = vec![usize::MAX; points.len()];
    for (r, row) in rows.iter().enumerate() {
        for (c, col) in columns.iter().enumerate() {
            let common: Vec<usize> = row.iter().filter(|i| col.contains(i)).copied().collect();
            let meet: Vec<usize> =
                geom.lines[row_lines[r]].iter().filter(|p| geom.lines[col_lines[c]].contains(p)).copied().collect();
            if common.len() != 1 || meet.len() != 1 {
                return Err(fail("grid lines do not meet in single points"));
            }
            to_pauli[common[0]] = meet[0];
        }
    }
    let grid_lines = row_lines.into_iter().chain(col_lines).collect();
    Ok(RingLineGrid { points, rows, columns, to_pauli, grid_lines })
}

/// DOT rendering of the commutation graph; edges on entangled lines are
/// drawn bold.
pub fn to_dot(geom: &PointLineGeometry) -> String {
    let kinds = classify_line_entanglement(geom);
    let mut s = String::from("graph pauli {\n  node [shape=circle];\n");
    for (i, p) in geom.points.iter().enumerate() {
        let _ = writeln!(s, "  p{i} [label=\"{}\" tooltip=\"{}\"];", geom.label(i), p.word(geom.qubits));
    }
    let adj = geom.commutation_graph();
    for i in 0..geom.points.len() {
        for j in i + 1..geom.points.len() {
            if adj[i] >> j & 1 == 0 {
                continue;
            }
            let bold = geom
                .lines
                .iter()
                .zip(&kinds)
                .any(|(l, k)| *k == LineKind::Entangled && l.contains(&i) && l.contains(&j));
            let style = if bold { " [style=bold penwidth=3]" } else { "" };
            let _ = writeln!(s, "  p{i} -- p{j}{style};");
        }
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct JsonPoint {
    label: String,
    word: String,
    x: Vec<u8>,
    z: Vec<u8>,
}

#[derive(Serialize)]
struct JsonGeometry {
    qubits: usize,
    points: Vec<JsonPoint>,
    lines: Vec<Vec<usize>>,
}

/// JSON dump: points as bit vectors, lines as point-index lists.
pub fn to_json(geom: &PointLineGeometry) -> String {
    let points = geom
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| JsonPoint {
            label: geom.label(i),
            word: p.word(geom.qubits),
            x: (0..geom.qubits).map(|q| p.x >> q & 1).collect(),
            z: (0..geom.qubits).map(|q| p.z >> q & 1).collect(),
        })
        .collect();
    let doc = JsonGeometry { qubits: geom.qubits, points, lines: geom.lines.clone() };
    serde_json::to_string_pretty(&doc).expect("geometry serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w2() -> PointLineGeometry {
        build_pauli_geometry(2).unwrap()
    }

    fn line_of(geom: &PointLineGeometry, words: [&str; 3]) -> usize {
        let idx: Vec<usize> = words
            .iter()
            .map(|w| geom.points.iter().position(|p| p.word(2) == *w).unwrap())
            .collect();
        let mut idx = idx;
        idx.sort_unstable();
        geom.lines.iter().position(|l| *l == idx).unwrap()
    }

    #[test]
    fn sizes() {
        let g1 = build_pauli_geometry(1).unwrap();
        assert_eq!(g1.points.len(), 3);
        assert!(g1.commutation_graph().iter().all(|&m| m == 0));
        assert_eq!(g1.lines, vec![vec![0], vec![1], vec![2]]);
        let g2 = w2();
        assert_eq!((g2.points.len(), g2.lines.len()), (15, 15));
        assert!(g2.lines.iter().all(|l| l.len() == 3));
        assert!((0..15).all(|p| g2.lines_through(p).len() == 3));
        let g3 = build_pauli_geometry(3).unwrap();
        assert_eq!(g3.points.len(), 63);
        assert_eq!(g3.lines.len() as u64, polar_space_line_count(3));
        assert!(g3.lines.iter().all(|l| l.len() == 7));
        assert_eq!(polar_space_line_count(2), 15);
        assert!(build_pauli_geometry(4).is_err());
    }

    #[test]
    fn labels() {
        let g = w2();
        let labels: Vec<String> = (0..15).map(|i| g.label(i)).collect();
        let xx = g.points.iter().position(|p| p.word(2) == "XX").unwrap();
        assert_eq!(labels[xx], "4");
        let ix = g.points.iter().position(|p| p.word(2) == "IX").unwrap();
        assert_eq!(labels[ix], "1");
        let zi = g.points.iter().position(|p| p.word(2) == "ZI").unwrap();
        assert_eq!(labels[zi], "c");
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 15);
    }

    #[test]
    fn gq_axioms() {
        let g = w2();
        let r = verify_gq_axioms(&g, 2, 2);
        assert!(r.passed());
        assert_eq!(r.antiflags, 180);
        assert_eq!(r.antiflags_with_unique_transversal, 180);
        let kinds = classify_line_entanglement(&g);
        let grid: Vec<Vec<usize>> =
            g.lines.iter().zip(&kinds).filter(|(_, k)| **k == LineKind::Entangled).map(|(l, _)| l.clone()).collect();
        let sub = verify_gq_axioms(&g.with_lines(grid), 2, 2);
        assert!(!sub.point_degrees_ok);
    }

    #[test]
    fn spread_count_and_k6() {
        let g = w2();
        let all = spreads(&g);
        assert_eq!(all.len(), 6);
        for s in &all {
            let mut pts: Vec<usize> = s.iter().flat_map(|&l| g.lines[l].clone()).collect();
            pts.sort_unstable();
            assert_eq!(pts, (0..15).collect::<Vec<_>>());
        }
        let st = spread_structure(&g, &all);
        assert!(st.pairwise_single_line && st.complete_graph);
        assert!(st.line_multiplicities.iter().all(|&m| m == 2));
    }

    #[test]
    fn entanglement_classes_agree() {
        let g = w2();
        let kinds = classify_line_entanglement(&g);
        assert_eq!(kinds.iter().filter(|k| **k == LineKind::Entangled).count(), 6);
        for l in 0..15 {
            let r = eigenbasis_schmidt_check(&g, l).unwrap();
            assert_eq!(r.kind, kinds[l], "line {l}");
            assert!(r.projectors_sum_to_identity);
        }
        assert_eq!(kinds[line_of(&g, ["IX", "XI", "XX"])], LineKind::Product);
        let bell = eigenbasis_schmidt_check(&g, line_of(&g, ["XX", "YY", "ZZ"])).unwrap();
        assert_eq!(bell.product_states, [false; 4]);
        let comp = eigenbasis_schmidt_check(&g, line_of(&g, ["IZ", "ZI", "ZZ"])).unwrap();
        assert_eq!(comp.product_states, [true; 4]);
    }

    #[test]
    fn commutation_two_ways() {
        let g = w2();
        let mut pairs = 0;
        for i in 0..15 {
            for j in i + 1..15 {
                assert_eq!(g.points[i].commutes(&g.points[j]), matrices_commute(&g, i, j));
                pairs += 1;
            }
        }
        assert_eq!(pairs, 105);
    }

    #[test]
    fn graph_model() {
        let r = graph_model_check(&w2());
        assert!(r.commutation_degrees.iter().all(|&d| d == 6));
        assert!(r.model_degrees.iter().all(|&d| d == 6));
        assert!(r.isomorphism.is_some());
        assert_eq!(r.automorphisms, 720);
    }

    #[test]
    fn ring_line() {
        let g = w2();
        let grid = ring_projective_line_grid(&g).unwrap();
        assert_eq!(grid.points.len(), 9);
        assert_eq!(grid.rows.len() + grid.columns.len(), 6);
        for p in 0..9 {
            let on = grid.rows.iter().chain(&grid.columns).filter(|l| l.contains(&p)).count();
            assert_eq!(on, 2);
        }
        let mut images = grid.to_pauli.clone();
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), 9);
        assert!(images.iter().all(|&p| g.points[p].weight() == 2));
        let kinds = classify_line_entanglement(&g);
        assert!(grid.grid_lines.iter().all(|&l| kinds[l] == LineKind::Entangled));
        for (k, fibre) in grid.rows.iter().chain(&grid.columns).enumerate() {
            let mut pts: Vec<usize> = fibre.iter().map(|&i| grid.to_pauli[i]).collect();
            pts.sort_unstable();
            assert_eq!(pts, g.lines[grid.grid_lines[k]]);
        }
    }

    #[test]
    fn exports() {
        let g = w2();
        let dot = to_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 45);
        assert_eq!(dot.matches("style=bold").count(), 18);
        assert_eq!(dot.matches("[label=").count(), 15);
        let json: serde_json::Value = serde_json::from_str(&to_json(&g)).unwrap();
        assert_eq!(json["points"].as_array().unwrap().len(), 15);
        assert_eq!(json["lines"].as_array().unwrap().len(), 15);
    }

    #[test]
    fn one_qubit_action() {
        let inner = InnerClifford::build(1).unwrap();
        let g = build_pauli_geometry(1).unwrap();
        let r = conjugation_action_check(&inner, &g).unwrap();
        assert_eq!((r.image_order, r.kernel_order), (6, 4));
        assert!(r.preserves_lines);
    }
}
