//! Permutation groups of degree at most 24: stabilizer chains, membership,
//! orbits, stabilizers and full enumeration.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, Subgroup};

pub const MAX_DEGREE: usize = 24;

/// Enumeration threshold for [`PermGroup::elements`] and friends.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// A permutation of `{0..degree-1}`. Composition `p * q` applies `p` first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        let mut images = [0u8; MAX_DEGREE];
        for (i, v) in images.iter_mut().enumerate() {
            *v = i as u8;
        }
        Perm { degree: degree as u8, images }
    }

    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeMismatch { expected: MAX_DEGREE, found: n });
        }
        let mut p = Perm::identity(n);
        let mut seen = 0u32;
        for (i, &v) in images.iter().enumerate() {
            if v >= n || seen & (1 << v) != 0 {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen |= 1 << v;
            p.images[i] = v as u8;
        }
        Ok(p)
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut p = Perm::identity(degree);
        for cycle in cycles {
            if cycle.iter().any(|&x| x >= degree) {
                return Err(Error::Parse(format!("cycle {cycle:?} exceeds degree {degree}")));
            }
            let mut c = Perm::identity(degree);
            for k in 0..cycle.len() {
                c.images[cycle[k]] = cycle[(k + 1) % cycle.len()] as u8;
            }
            p = p * c;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.degree()]
    }

    pub fn inverse(&self) -> Perm {
        let mut q = *self;
        for i in 0..self.degree() {
            q.images[self.images[i] as usize] = i as u8;
        }
        q
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.images[i] as usize == i)
    }

    pub fn pow(&self, e: u64) -> Perm {
        let mut out = Perm::identity(self.degree());
        for _ in 0..e {
            out = out * *self;
        }
        out
    }

    /// Nontrivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        self.cycles().iter().fold(1, |acc, c| acc / gcd(acc, c.len() as u64) * c.len() as u64)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn moves_any(&self) -> bool {
        !self.is_identity()
    }

    /// Image of a point set, sorted.
    pub fn apply_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }

    /// Image of a bitmask of points.
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            out |= 1 << self.images[x];
            m &= m - 1;
        }
        out
    }

    /// `p: 0→3 1→7 ...`
    pub fn to_image_list(&self) -> String {
        let parts: Vec<String> = (0..self.degree()).map(|i| format!("{i}→{}", self.images[i])).collect();
        format!("p: {}", parts.join(" "))
    }

    pub fn parse_image_list(s: &str) -> Result<Perm> {
        let body = s
            .trim()
            .strip_prefix("p:")
            .ok_or_else(|| Error::Parse(format!("missing 'p:' prefix in {s:?}")))?;
        let mut images = Vec::new();
        for (k, tok) in body.split_whitespace().enumerate() {
            let (a, b) = tok.split_once('→').ok_or_else(|| Error::Parse(format!("bad token {tok:?}")))?;
            let parse = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?}")));
            if parse(a)? != k {
                return Err(Error::Parse(format!("points out of order at {tok:?}")));
            }
            images.push(parse(b)?);
        }
        Perm::from_images(&images)
    }
}

impl std::ops::Mul for Perm {
    type Output = Perm;

    fn mul(self, rhs: Perm) -> Perm {
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self;
        for i in 0..self.degree() {
            out.images[i] = rhs.images[self.images[i] as usize];
        }
        out
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// One level of a stabilizer chain: base point, the generators of the
/// pointwise stabilizer of the earlier base points, and a transversal.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[β]` maps the base point to `β`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        Level { base, gens: Vec::new(), transversal: vec![None; degree], orbit: Vec::new() }
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Perm::identity(degree));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            let u = self.transversal[beta].unwrap();
            for g in &self.gens {
                let gamma = g.apply(beta);
                if self.transversal[gamma].is_none() {
                    self.transversal[gamma] = Some(u * *g);
                    self.orbit.push(gamma);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group with a stabilizer chain on an ascending base.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeMismatch { expected: MAX_DEGREE, found: degree });
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let mut group = PermGroup { degree, generators, levels: Vec::new() };
        group.schreier_sims();
        Ok(group)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).expect("degree in range")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths down the chain.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Deterministic incremental Schreier–Sims. New base points are always the
    /// least point moved by the generator that needs them.
    fn schreier_sims(&mut self) {
        let n = self.degree;
        let gens: Vec<Perm> = self.generators.iter().copied().filter(Perm::moves_any).collect();
        let mut levels: Vec<Level> = Vec::new();
        for g in &gens {
            if levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = (0..n).find(|&x| g.apply(x) != x).unwrap();
                levels.push(Level::new(b, n));
            }
        }
        levels.sort_by_key(|l| l.base);
        // Each generator goes to every level whose earlier base points it fixes.
        for g in &gens {
            for i in 0..levels.len() {
                if levels[..i].iter().all(|l| g.apply(l.base) == l.base) {
                    levels[i].gens.push(*g);
                }
            }
        }
        for l in &mut levels {
            l.rebuild(n);
        }

        let mut i = levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart = None;
            'outer: for oi in 0..levels[iu].orbit.len() {
                let beta = levels[iu].orbit[oi];
                let u_beta = levels[iu].transversal[beta].unwrap();
                for gi in 0..levels[iu].gens.len() {
                    let s = levels[iu].gens[gi];
                    let gamma = s.apply(beta);
                    let u_gamma = levels[iu].transversal[gamma].unwrap();
                    let schreier = u_beta * s * u_gamma.inverse();
                    let (h, j) = sift(&levels, schreier, iu + 1);
                    let mut j = j;
                    if j == levels.len() {
                        if h.is_identity() {
                            continue;
                        }
                        let b = (0..n).find(|&x| h.apply(x) != x).unwrap();
                        let mut lvl = Level::new(b, n);
                        lvl.transversal[b] = Some(Perm::identity(n));
                        lvl.orbit = vec![b];
                        levels.push(lvl);
                        j = levels.len() - 1;
                        for l in iu + 1..=j {
                            levels[l].gens.push(h);
                            levels[l].rebuild(n);
                        }
                    } else {
                        for l in iu + 1..=j {
                            levels[l].gens.push(h);
                            levels[l].rebuild(n);
                        }
                    }
                    restart = Some(j);
                    break 'outer;
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        self.levels = levels;
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: p.degree() });
        }
        let (h, j) = sift(&self.levels, *p, 0);
        Ok(j == self.levels.len() && h.is_identity())
    }

    /// Orbit of a point, in discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut out = vec![point];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let y = g.apply(out[i]);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    /// Orbits of all points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let mut o = self.orbit(x);
                o.sort_unstable();
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Orbit of a point set (as a bitmask) under the group.
    pub fn set_orbit(&self, set: &[usize]) -> Vec<u32> {
        let start = set.iter().fold(0u32, |m, &x| m | 1 << x);
        let mut seen = ElementSet::default();
        seen.insert(start);
        let mut i = 0;
        while i < seen.len() {
            let m = seen[i];
            for g in &self.generators {
                seen.insert(g.apply_mask(m));
            }
            i += 1;
        }
        seen.into_iter().collect()
    }

    /// Every element, as `u_{L-1} · … · u_0` over the transversals.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > ENUMERATION_LIMIT {
            return Err(Error::TooLarge { order });
        }
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<Perm> = level.orbit.iter().map(|&b| level.transversal[b].unwrap()).collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for p in &out {
                for u in &reps {
                    next.push(*p * *u);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Abstract group on the enumerated elements, generated by this group's
    /// generators. The element count is checked against the chain order.
    pub fn as_finite_group(&self) -> Result<(FiniteGroup, ElementSet<Perm>)> {
        let order = self.order();
        if order > ENUMERATION_LIMIT {
            return Err(Error::TooLarge { order });
        }
        let (g, elems) = FiniteGroup::from_generators(
            Perm::identity(self.degree),
            &self.generators,
            |a, b| *a * *b,
            order as usize,
        )?;
        if g.order() as u128 != order {
            return Err(Error::ConstructionFailed(format!(
                "closure found {} elements, chain order {order}",
                g.order()
            )));
        }
        Ok((g, elems))
    }

    /// Subgroup generated by the given elements, which are kept as generators
    /// only when they enlarge the group built so far.
    pub fn subgroup_from_elements<'a>(&self, elements: impl IntoIterator<Item = &'a Perm>) -> PermGroup {
        let mut h = PermGroup::trivial(self.degree);
        for p in elements {
            if !h.contains(p).unwrap_or(false) {
                let mut gens = h.generators.clone();
                gens.push(*p);
                h = PermGroup::new(self.degree, gens).expect("degree already checked");
            }
        }
        h
    }

    /// `{p ∈ G : p(s) = s}`. Filters the enumeration below
    /// [`ENUMERATION_LIMIT`], backtracks over base images above it.
    pub fn set_stabilizer(&self, set: &[usize]) -> PermGroup {
        let mask = set.iter().fold(0u32, |m, &x| m | 1 << x);
        if self.order() <= ENUMERATION_LIMIT {
            let elems = self.elements().expect("under the enumeration limit");
            let keep: Vec<&Perm> = elems.iter().filter(|p| p.apply_mask(mask) == mask).collect();
            return self.subgroup_from_elements(keep);
        }
        self.set_stabilizer_backtrack(mask)
    }

    fn set_stabilizer_backtrack(&self, mask: u32) -> PermGroup {
        // g = u_{L-1}·…·u_0 sends base point b_j to (u_j·…·u_0)(b_j), so the
        // partial product after choosing u_0..u_j fixes the first j+1 base
        // images.
        let mut found = PermGroup::trivial(self.degree);
        let mut stack: Vec<(usize, Perm)> = vec![(0, Perm::identity(self.degree))];
        while let Some((j, partial)) = stack.pop() {
            if j == self.levels.len() {
                if partial.apply_mask(mask) == mask && !found.contains(&partial).unwrap_or(true) {
                    let mut gens = found.generators.clone();
                    gens.push(partial);
                    found = PermGroup::new(self.degree, gens).expect("degree checked");
                }
                continue;
            }
            let level = &self.levels[j];
            let inside = mask & (1 << level.base) != 0;
            for &beta in level.orbit.iter().rev() {
                let cand = level.transversal[beta].unwrap() * partial;
                let img = cand.apply(level.base);
                if (mask & (1 << img) != 0) == inside {
                    stack.push((j + 1, cand));
                }
            }
        }
        found
    }

    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        self.set_stabilizer(&[point])
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g).unwrap_or(false))
    }

    /// Normal closure of `seeds` under this group's generators.
    pub fn normal_closure(&self, seeds: &[Perm]) -> PermGroup {
        let mut n = self.subgroup_from_elements(seeds);
        let mut queue: Vec<Perm> = n.generators.clone();
        while let Some(x) = queue.pop() {
            for g in &self.generators {
                let c = g.inverse() * x * *g;
                if !n.contains(&c).unwrap_or(false) {
                    let mut gens = n.generators.clone();
                    gens.push(c);
                    n = PermGroup::new(self.degree, gens).expect("degree checked");
                    queue.push(c);
                }
            }
        }
        n
    }

    /// Normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut seeds = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse() * b.inverse() * *a * *b;
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// Generator file: one permutation per line in image-list form.
    pub fn generators_to_text(&self) -> String {
        self.generators.iter().map(|g| g.to_image_list() + "\n").collect()
    }

    pub fn parse_generators(degree: usize, text: &str) -> Result<PermGroup> {
        let gens = text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(Perm::parse_image_list)
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }
}

/// Sift `g` through levels `from..`; returns the residue and the level at
/// which sifting stopped (`levels.len()` if it went through).
fn sift(levels: &[Level], mut g: Perm, from: usize) -> (Perm, usize) {
    for (j, level) in levels.iter().enumerate().skip(from) {
        let beta = g.apply(level.base);
        match &level.transversal[beta] {
            Some(u) => g = g * u.inverse(),
            None => return (g, j),
        }
    }
    (g, levels.len())
}

pub fn symmetric_group(n: usize) -> PermGroup {
    assert!((2..=MAX_DEGREE).contains(&n), "degree must lie in 2..=24");
    let transposition = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
    let cycle: Vec<usize> = (0..n).collect();
    let long = Perm::from_cycles(n, &[&cycle]).unwrap();
    PermGroup::new(n, vec![transposition, long]).unwrap()
}

pub fn alternating_group(n: usize) -> PermGroup {
    assert!((2..=MAX_DEGREE).contains(&n), "degree must lie in 2..=24");
    let gens = (2..n).map(|k| Perm::from_cycles(n, &[&[0, 1, k]]).unwrap()).collect();
    PermGroup::new(n, gens).unwrap()
}

/// Permutation image and kernel of a left action of `g` on `0..degree`.
///
/// `action(x, p)` must satisfy `action(a·b, p) = action(a, action(b, p))`.
/// Generator images are propagated along the Cayley tree, then a spread of
/// elements is compared against the action directly.
pub fn action_homomorphism(
    g: &FiniteGroup,
    action: impl Fn(usize, usize) -> usize,
    degree: usize,
) -> Result<(PermGroup, Subgroup)> {
    let gens = g.generators();
    let mut gen_perms = Vec::with_capacity(gens.len());
    for &x in gens {
        let images: Vec<usize> = (0..degree).map(|p| action(x, p)).collect();
        let perm = Perm::from_images(&images)
            .map_err(|_| Error::ActionInconsistent(format!("generator {x} does not act bijectively")))?;
        gen_perms.push(perm);
    }
    let mut phi = vec![Perm::identity(degree); g.order()];
    let mut done = vec![false; g.order()];
    done[g.identity()] = true;
    // Cayley indices are in BFS order, so parents precede children.
    for x in 0..g.order() {
        if let Some((parent, slot)) = g.parent(x) {
            debug_assert!(done[parent]);
            phi[x] = gen_perms[slot] * phi[parent];
            done[x] = true;
        }
    }
    let stride = (g.order() / 1000).max(1);
    for x in (0..g.order()).step_by(stride) {
        for p in 0..degree {
            if action(x, p) != phi[x].apply(p) {
                return Err(Error::ActionInconsistent(format!(
                    "element {x} sends point {p} to {}, propagated image gives {}",
                    action(x, p),
                    phi[x].apply(p)
                )));
            }
        }
    }
    let kernel_members: Vec<usize> = (0..g.order()).filter(|&x| phi[x].is_identity()).collect();
    let kernel = g.subgroup_from_members(&kernel_members)?;
    let image = PermGroup::new(degree, gen_perms)?;
    if image.order() * kernel.order() as u128 != g.order() as u128 {
        return Err(Error::ActionInconsistent(format!(
            "image {} times kernel {} differs from group order {}",
            image.order(),
            kernel.order(),
            g.order()
        )));
    }
    Ok((image, kernel))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_basics() {
        let p = Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let q = Perm::from_cycles(5, &[&[0, 3]]).unwrap();
        // p first, then q: 0 → 1 → 1
        assert_eq!((p * q).apply(0), 1);
        assert_eq!((p * q).apply(2), 3);
        assert!((p * p.inverse()).is_identity());
        assert_eq!(p.order(), 3);
        assert!(p.is_even());
        assert!(!q.is_even());
        assert_eq!(p.to_string(), "(0 1 2)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        let text = p.to_image_list();
        assert_eq!(text, "p: 0→1 1→2 2→0 3→3 4→4");
        assert_eq!(Perm::parse_image_list(&text).unwrap(), p);
        assert!(Perm::from_images(&[0, 0, 1]).is_err());
    }

    #[test]
    fn reference_orders() {
        assert_eq!(symmetric_group(4).order(), 24);
        assert_eq!(symmetric_group(6).order(), 720);
        assert_eq!(alternating_group(6).order(), 360);
        assert_eq!(alternating_group(2).order(), 1);
        assert_eq!(symmetric_group(12).order(), 479_001_600);
        assert_eq!(symmetric_group(24).order(), (1..=24u128).product());
    }

    #[test]
    fn membership() {
        let a6 = alternating_group(6);
        let t = Perm::from_cycles(6, &[&[2, 5]]).unwrap();
        assert!(!a6.contains(&t).unwrap());
        assert!(a6.contains(&Perm::identity(6)).unwrap());
        assert!(a6.contains(&Perm::from_cycles(6, &[&[0, 1], &[2, 3]]).unwrap()).unwrap());
        assert!(a6.generators().iter().all(|g| a6.contains(g).unwrap()));
        assert_eq!(a6.contains(&Perm::identity(5)), Err(Error::DegreeMismatch { expected: 6, found: 5 }));
    }

    #[test]
    fn enumeration_matches_chain() {
        for g in [symmetric_group(5), alternating_group(6), symmetric_group(2)] {
            let elems = g.elements().unwrap();
            assert_eq!(elems.len() as u128, g.order());
            let set: std::collections::HashSet<_> = elems.iter().collect();
            assert_eq!(set.len(), elems.len());
            assert!(elems.iter().all(|p| g.contains(p).unwrap()));
        }
        assert!(matches!(symmetric_group(12).elements(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn stabilizers() {
        let s3 = symmetric_group(3);
        assert_eq!(s3.set_stabilizer(&[0]).order(), 2);
        let s6 = symmetric_group(6);
        assert_eq!(s6.set_stabilizer(&[0, 1, 2, 3, 4, 5]).order(), 720);
        assert_eq!(s6.set_stabilizer(&[1, 4]).order(), 48);
        // backtrack path
        let s12 = symmetric_group(12);
        let st = s12.set_stabilizer(&[0, 5, 9]);
        assert_eq!(st.order(), 6 * 362_880);
        assert!(st.generators().iter().all(|g| g.apply_mask(0b10_0010_0001) == 0b10_0010_0001));
    }

    #[test]
    fn derived_and_finite() {
        let s5 = symmetric_group(5);
        assert_eq!(s5.derived_subgroup().order(), 60);
        let a6 = alternating_group(6);
        assert_eq!(a6.derived_subgroup().order(), 360);
        let (g, elems) = a6.as_finite_group().unwrap();
        assert_eq!(g.order(), 360);
        assert_eq!(elems.len(), 360);
        assert!(crate::structure::is_perfect(&g));
        let (s6, _) = symmetric_group(6).as_finite_group().unwrap();
        assert_eq!(crate::structure::conjugacy_classes(&s6).len(), 11);
    }

    #[test]
    fn actions() {
        let (s4, elems) = symmetric_group(4).as_finite_group().unwrap();
        // `p * q` applies `p` first, so inverses turn the natural action into a left one
        let (img, ker) = action_homomorphism(&s4, |x, p| elems[x].inverse().apply(p), 4).unwrap();
        assert_eq!(img.order(), 24);
        assert_eq!(ker.order(), 1);
        let (img, ker) = action_homomorphism(&s4, |_, p| p, 3).unwrap();
        assert_eq!(img.order(), 1);
        assert_eq!(ker.order(), 24);
        // sign action on two points
        let (img, ker) =
            action_homomorphism(&s4, |x, p| if elems[x].is_even() { p } else { 1 - p }, 2).unwrap();
        assert_eq!((img.order(), ker.order()), (2, 12));
        // a right action is rejected
        let right = action_homomorphism(&s4, |x, p| elems[x].apply(p), 4);
        assert!(matches!(right, Err(Error::ActionInconsistent(_))));
    }

    #[test]
    fn generator_text_round_trip() {
        let a5 = alternating_group(5);
        let text = a5.generators_to_text();
        let back = PermGroup::parse_generators(5, &text).unwrap();
        assert_eq!(back.order(), 60);
    }
}
