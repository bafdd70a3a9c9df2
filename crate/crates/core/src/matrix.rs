//! Matrices over `Q(ζ₈)`, the Pauli and Clifford generators, and exact
//! matrix-group closure.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::cyclotomic::{inv_sqrt2, Cyclo8};
use crate::error::{Error, Result};
use crate::group::{closure, CayleyGraph, ElementSet, FiniteGroup};

/// A square matrix over [`Cyclo8`], row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UMatrix {
    dim: usize,
    entries: Vec<Cyclo8>,
}

impl UMatrix {
    pub fn new(dim: usize, entries: Vec<Cyclo8>) -> UMatrix {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim²");
        UMatrix { dim, entries }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Cyclo8) -> UMatrix {
        UMatrix::new(dim, (0..dim * dim).map(|k| f(k / dim, k % dim)).collect())
    }

    pub fn identity(dim: usize) -> UMatrix {
        UMatrix::from_fn(dim, |r, c| if r == c { Cyclo8::one() } else { Cyclo8::zero() })
    }

    pub fn scalar(dim: usize, s: &Cyclo8) -> UMatrix {
        UMatrix::from_fn(dim, |r, c| if r == c { s.clone() } else { Cyclo8::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclo8 {
        &self.entries[r * self.dim + c]
    }

    pub fn entries(&self) -> &[Cyclo8] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> UMatrix {
        UMatrix::from_fn(self.dim, |r, c| self.get(c, r).conjugate())
    }

    pub fn trace(&self) -> Cyclo8 {
        (0..self.dim).fold(Cyclo8::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn scale(&self, s: &Cyclo8) -> UMatrix {
        UMatrix::new(self.dim, self.entries.iter().map(|e| e * s).collect())
    }

    pub fn add(&self, other: &UMatrix) -> UMatrix {
        assert_eq!(self.dim, other.dim);
        UMatrix::new(self.dim, self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &UMatrix) -> UMatrix {
        assert_eq!(self.dim, other.dim);
        UMatrix::new(self.dim, self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> UMatrix {
        UMatrix::new(self.dim, self.entries.iter().map(|e| -e).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyclo8::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == UMatrix::identity(self.dim)
    }

    /// The scalar `s` if the matrix equals `s·I`.
    pub fn as_scalar(&self) -> Option<&Cyclo8> {
        let s = self.get(0, 0);
        let ok = (0..self.dim).all(|r| {
            (0..self.dim).all(|c| if r == c { self.get(r, c) == s } else { self.get(r, c).is_zero() })
        });
        ok.then_some(s)
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.adjoint()).is_identity()
    }

    pub fn mul(&self, other: &UMatrix) -> UMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        if let (Some((ea, a)), Some((eb, b))) =
            (Cyclo8::scaled_parts(&self.entries), Cyclo8::scaled_parts(&other.entries))
        {
            let mut out = Vec::with_capacity(d * d);
            for r in 0..d {
                for c in 0..d {
                    let mut acc = [0i128; 4];
                    for k in 0..d {
                        Cyclo8::mul_acc(&mut acc, &a[r * d + k], &b[k * d + c]);
                    }
                    out.push(Cyclo8::from_scaled(acc, ea + eb));
                }
            }
            return UMatrix::new(d, out);
        }
        UMatrix::from_fn(d, |r, c| {
            (0..d).fold(Cyclo8::zero(), |acc, k| &acc + &(self.get(r, k) * other.get(k, c)))
        })
    }

    /// Kronecker product, row-major: `(a⊗b)[(i,k),(j,l)] = a[i,j]·b[k,l]`.
    pub fn tensor(&self, other: &UMatrix) -> UMatrix {
        let (m, n) = (self.dim, other.dim);
        UMatrix::from_fn(m * n, |r, c| self.get(r / n, c / n) * other.get(r % n, c % n))
    }

    /// One-line dump: entries separated by ` | `.
    pub fn dump_entries(&self) -> String {
        self.entries.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
    }

    pub fn parse_entries(s: &str) -> Result<UMatrix> {
        let entries = s.split(" | ").map(str::parse).collect::<Result<Vec<Cyclo8>>>()?;
        let dim = (entries.len() as f64).sqrt() as usize;
        if dim * dim != entries.len() || dim == 0 {
            return Err(Error::Parse(format!("{} entries do not form a square matrix", entries.len())));
        }
        Ok(UMatrix::new(dim, entries))
    }
}

impl fmt::Debug for UMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "UMatrix({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn sigma_x() -> UMatrix {
    UMatrix::from_fn(2, |r, c| Cyclo8::from_int((r != c) as i64))
}

pub fn sigma_y() -> UMatrix {
    let i = Cyclo8::i();
    UMatrix::new(2, vec![Cyclo8::zero(), -&i, i, Cyclo8::zero()])
}

pub fn sigma_z() -> UMatrix {
    UMatrix::new(2, vec![Cyclo8::one(), Cyclo8::zero(), Cyclo8::zero(), Cyclo8::from_int(-1)])
}

/// `H = [[1, 1], [1, −1]] / √2`
pub fn hadamard() -> UMatrix {
    let s = inv_sqrt2();
    UMatrix::new(2, vec![s.clone(), s.clone(), s.clone(), -&s])
}

/// `P = diag(1, i)`
pub fn phase() -> UMatrix {
    UMatrix::new(2, vec![Cyclo8::one(), Cyclo8::zero(), Cyclo8::zero(), Cyclo8::i()])
}

/// `CZ = diag(1, 1, 1, −1)`
pub fn controlled_z() -> UMatrix {
    UMatrix::from_fn(4, |r, c| {
        if r != c {
            Cyclo8::zero()
        } else if r == 3 {
            Cyclo8::from_int(-1)
        } else {
            Cyclo8::one()
        }
    })
}

/// Single-qubit Pauli for a symplectic pair `(x, z)`: X, Z or Y.
pub fn pauli_factor(x: bool, z: bool) -> UMatrix {
    match (x, z) {
        (false, false) => UMatrix::identity(2),
        (true, false) => sigma_x(),
        (false, true) => sigma_z(),
        (true, true) => sigma_y(),
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 1 || n == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedQubitCount(n))
    }
}

/// `σx, σy, σz` on each qubit, padded with identities.
pub fn pauli_generators(n: usize) -> Result<Vec<UMatrix>> {
    check_qubits(n)?;
    let mut gens = Vec::new();
    for q in 0..n {
        for p in [sigma_x(), sigma_y(), sigma_z()] {
            let m = (0..n).fold(UMatrix::identity(1), |acc, k| {
                acc.tensor(&if k == q { p.clone() } else { UMatrix::identity(2) })
            });
            gens.push(m);
        }
    }
    Ok(gens)
}

/// `{H, P}` for one qubit, `{H⊗H, H⊗P, CZ}` for two.
pub fn clifford_generators(n: usize) -> Result<Vec<UMatrix>> {
    check_qubits(n)?;
    Ok(match n {
        1 => vec![hadamard(), phase()],
        _ => vec![hadamard().tensor(&hadamard()), hadamard().tensor(&phase()), controlled_z()],
    })
}

/// `2^(2n+2)`
pub fn pauli_order_formula(n: u32) -> u128 {
    1u128 << (2 * n + 2)
}

/// `2^(n²+2n+3) · ∏_{j=1..n} (4^j − 1)`
pub fn clifford_order_formula(n: u32) -> u128 {
    let product: u128 = (1..=n).map(|j| (1u128 << (2 * j)) - 1).product();
    (1u128 << (n * n + 2 * n + 3)) * product
}

/// A closed matrix group with its Cayley graph.
#[derive(Clone)]
pub struct MatGroup {
    dim: usize,
    elements: ElementSet<UMatrix>,
    generators: Vec<usize>,
    cayley: CayleyGraph,
}

impl MatGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn element(&self, i: usize) -> &UMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> impl Iterator<Item = &UMatrix> {
        self.elements.iter()
    }

    pub fn index_of(&self, m: &UMatrix) -> Option<usize> {
        self.elements.get_index_of(m)
    }

    pub fn contains(&self, m: &UMatrix) -> bool {
        self.elements.contains(m)
    }

    /// Element indices of the generators, in generator order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn cayley(&self) -> &CayleyGraph {
        &self.cayley
    }

    /// Abstract group whose multiplication follows the recorded Cayley graph.
    pub fn as_finite_group(&self) -> FiniteGroup {
        FiniteGroup::from_cayley(self.cayley.clone())
    }

    /// Hash of the sorted element hashes, independent of element order.
    pub fn content_hash(&self) -> u64 {
        let mut hs: Vec<u64> = self
            .elements
            .iter()
            .map(|m| {
                let mut h = DefaultHasher::new();
                m.hash(&mut h);
                h.finish()
            })
            .collect();
        hs.sort_unstable();
        let mut h = DefaultHasher::new();
        hs.hash(&mut h);
        h.finish()
    }

    /// Matrix dump: `index: e00 | e01 | ...`, one element per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, m) in self.elements.iter().enumerate() {
            s.push_str(&format!("{i}: {}\n", m.dump_entries()));
        }
        s
    }

    /// Cache file: header, matrix dump, then the Cayley graph rows.
    pub fn to_cache(&self) -> String {
        let mut s = format!(
            "# matgroup dim {} order {} gens {} hash {:016x}\n",
            self.dim,
            self.order(),
            self.cayley.gen_count(),
            self.content_hash()
        );
        s.push_str(&self.dump());
        s.push_str("# cayley\n");
        let (right, parent, parent_gen) = self.cayley.raw_parts();
        let k = self.cayley.gen_count();
        for x in 0..self.order() {
            let row: Vec<String> = right[x * k..(x + 1) * k].iter().map(u32::to_string).collect();
            s.push_str(&format!("{} {} {}\n", parent[x], parent_gen[x], row.join(" ")));
        }
        s
    }

    /// Load a cache written by [`to_cache`](Self::to_cache), validating the
    /// element count and the content hash.
    pub fn from_cache(text: &str) -> Result<MatGroup> {
        let bad = |m: String| Error::Parse(format!("matgroup cache: {m}"));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 10 || fields[0] != "#" || fields[1] != "matgroup" {
            return Err(bad(format!("bad header {header:?}")));
        }
        let num = |i: usize| fields[i].parse::<usize>().map_err(|_| bad(format!("bad header field {}", fields[i])));
        let (dim, order, k) = (num(3)?, num(5)?, num(7)?);
        let hash = u64::from_str_radix(fields[9], 16).map_err(|_| bad("bad hash".into()))?;
        let mut elements: ElementSet<UMatrix> = ElementSet::default();
        for i in 0..order {
            let line = lines.next().ok_or_else(|| bad("truncated dump".into()))?;
            let (idx, body) = line.split_once(": ").ok_or_else(|| bad(format!("bad line {i}")))?;
            if idx.parse::<usize>().ok() != Some(i) {
                return Err(bad(format!("index mismatch at {i}")));
            }
            let m = UMatrix::parse_entries(body)?;
            if m.dim != dim || !elements.insert(m) {
                return Err(bad(format!("bad element {i}")));
            }
        }
        if lines.next() != Some("# cayley") {
            return Err(bad("missing cayley section".into()));
        }
        let (mut right, mut parent, mut parent_gen) = (Vec::new(), Vec::new(), Vec::new());
        for _ in 0..order {
            let line = lines.next().ok_or_else(|| bad("truncated cayley".into()))?;
            let nums: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(format!("bad number {t}"))))
                .collect::<Result<_>>()?;
            if nums.len() != k + 2 {
                return Err(bad("bad cayley row".into()));
            }
            parent.push(nums[0]);
            parent_gen.push(nums[1] as u8);
            right.extend_from_slice(&nums[2..]);
        }
        let cayley = CayleyGraph::from_raw(k, right, parent, parent_gen)?;
        let generators = (0..k).map(|j| cayley.right(0, j)).collect();
        let g = MatGroup { dim, elements, generators, cayley };
        if g.order() != order || g.content_hash() != hash || !g.element(0).is_identity() {
            return Err(bad("content hash mismatch".into()));
        }
        Ok(g)
    }
}

/// Breadth-first closure of unitary generators (`frontier × generators`).
pub fn close(generators: &[UMatrix], limit: usize) -> Result<MatGroup> {
    let dim = generators.first().map_or(1, UMatrix::dim);
    assert!(generators.iter().all(|g| g.dim() == dim), "generators must share a dimension");
    let (elements, cayley) = closure(UMatrix::identity(dim), generators, |a, b| a.mul(b), limit)?;
    let generators = (0..generators.len()).map(|j| cayley.right(0, j)).collect();
    Ok(MatGroup { dim, elements, generators, cayley })
}

/// The `n`-qubit Pauli group.
pub fn pauli_group(n: usize) -> Result<MatGroup> {
    close(&pauli_generators(n)?, 2 * pauli_order_formula(n as u32) as usize)
}

/// The `n`-qubit Clifford group, with the limit at twice the predicted order.
pub fn clifford_group(n: usize) -> Result<MatGroup> {
    close(&clifford_generators(n)?, 2 * clifford_order_formula(n as u32) as usize)
}

/// Indices of the scalar matrices of a group.
pub fn scalar_elements(g: &MatGroup) -> Vec<usize> {
    (0..g.order()).filter(|&i| g.element(i).as_scalar().is_some()).collect()
}

/// `U · M · U†`
pub fn conjugate_by(u: &UMatrix, m: &UMatrix) -> UMatrix {
    u.mul(m).mul(&u.adjoint())
}
