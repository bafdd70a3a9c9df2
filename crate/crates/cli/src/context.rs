//! Heavy objects shared between claims, each built at most once per run.

use std::fs;
use std::sync::OnceLock;

use clifford_atlas::clifford::InnerClifford;
use clifford_atlas::design::{
    bridge_check, design_automorphisms, golay_code, hexad_stabilizer, mathieu_m22, octad_design, derive,
    BinaryCode, BridgeReport, SteinerSystem,
};
use clifford_atlas::geometry::{build_pauli_geometry, conjugation_action_check, ConjugationReport, PointLineGeometry};
use clifford_atlas::group::{FiniteGroup, Subgroup};
use clifford_atlas::ident::{isomorphic, IsoOutcome};
use clifford_atlas::matrix::{clifford_group, clifford_order_formula, MatGroup};
use clifford_atlas::perm::{alternating_group, symmetric_group, PermGroup};
use clifford_atlas::structure::quotient;

use crate::config::RunConfig;

/// Why a claim could not be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Internal(String),
    Io(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Internal(m) => write!(f, "internal error: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<clifford_atlas::error::Error> for Failure {
    fn from(e: clifford_atlas::error::Error) -> Failure {
        Failure::Internal(e.to_string())
    }
}

pub type Outcome<T> = Result<T, Failure>;

/// An inner Clifford group with its proper nontrivial normal subgroups.
pub struct CliffordData {
    pub inner: InnerClifford,
    pub normals: Vec<Subgroup>,
}

impl CliffordData {
    pub fn group(&self) -> &FiniteGroup {
        self.inner.group()
    }

    /// The smaller of the two proper normal subgroups.
    pub fn n1(&self) -> Outcome<&Subgroup> {
        self.normals.first().ok_or_else(|| Failure::Internal("no proper normal subgroup".into()))
    }

    /// The larger of the two proper normal subgroups.
    pub fn n2(&self) -> Outcome<&Subgroup> {
        self.normals.get(1).ok_or_else(|| Failure::Internal("fewer than two proper normal subgroups".into()))
    }

    pub fn n2_group(&self) -> Outcome<FiniteGroup> {
        Ok(self.group().subgroup_as_group(self.n2()?)?.group)
    }
}

pub struct WittData {
    pub code: BinaryCode,
    pub s24: SteinerSystem,
    pub s23: SteinerSystem,
    pub s22: SteinerSystem,
    pub aut: PermGroup,
    pub m22: PermGroup,
    /// Three blocks with their stabilizers in `M22`.
    pub hexads: Vec<(u32, PermGroup, FiniteGroup)>,
    /// Stabilizer of the first block in the full automorphism group.
    pub block_stabilizer_aut: FiniteGroup,
}

pub struct References {
    pub s3: FiniteGroup,
    pub s4: FiniteGroup,
    pub a4: FiniteGroup,
    pub a6: FiniteGroup,
    pub s6: FiniteGroup,
    pub perms: Vec<(&'static str, PermGroup)>,
}

/// Named isomorphism outcomes reused by several claims.
pub struct Certificates {
    pub c1_s4: OnceLock<IsoOutcome>,
    pub c2_quotient_a6: OnceLock<Outcome<IsoOutcome>>,
    pub c2_quotient_s6: OnceLock<Outcome<IsoOutcome>>,
    pub bridge: OnceLock<Outcome<BridgeReport>>,
}

pub struct Context {
    pub config: RunConfig,
    c1: OnceLock<Outcome<CliffordData>>,
    c2: OnceLock<Outcome<CliffordData>>,
    w2: OnceLock<Outcome<PointLineGeometry>>,
    witt: OnceLock<Outcome<WittData>>,
    refs: OnceLock<References>,
    conjugation: OnceLock<Outcome<ConjugationReport>>,
    pub certs: Certificates,
}

fn clifford_data(qubits: usize, matrices: MatGroup) -> Outcome<CliffordData> {
    let inner = InnerClifford::from_matrices(qubits, matrices)?;
    let normals = inner.proper_normal_subgroups();
    Ok(CliffordData { inner, normals })
}

impl Context {
    pub fn new(config: RunConfig) -> Context {
        Context {
            config,
            c1: OnceLock::new(),
            c2: OnceLock::new(),
            w2: OnceLock::new(),
            witt: OnceLock::new(),
            refs: OnceLock::new(),
            conjugation: OnceLock::new(),
            certs: Certificates {
                c1_s4: OnceLock::new(),
                c2_quotient_a6: OnceLock::new(),
                c2_quotient_s6: OnceLock::new(),
                bridge: OnceLock::new(),
            },
        }
    }

    pub fn c1(&self) -> Outcome<&CliffordData> {
        self.c1
            .get_or_init(|| clifford_data(1, clifford_group(1)?))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn c2(&self) -> Outcome<&CliffordData> {
        self.c2.get_or_init(|| clifford_data(2, self.load_c2()?)).as_ref().map_err(Clone::clone)
    }

    /// The two-qubit closure, read from and written to the cache file when
    /// one is configured.
    fn load_c2(&self) -> Outcome<MatGroup> {
        let expected = clifford_order_formula(2) as usize;
        let Some(path) = &self.config.cache else {
            return Ok(clifford_group(2)?);
        };
        if path.exists() {
            let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let g = MatGroup::from_cache(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            if g.order() != expected || g.dim() != 4 {
                return Err(Failure::Io(format!("{}: cached group has order {}", path.display(), g.order())));
            }
            return Ok(g);
        }
        let g = clifford_group(2)?;
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
        }
        fs::write(path, g.to_cache()).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        Ok(g)
    }

    pub fn w2(&self) -> Outcome<&PointLineGeometry> {
        self.w2.get_or_init(|| Ok(build_pauli_geometry(2)?)).as_ref().map_err(Clone::clone)
    }

    pub fn witt(&self) -> Outcome<&WittData> {
        self.witt
            .get_or_init(|| {
                let code = golay_code()?;
                let s24 = octad_design(&code)?;
                let s23 = derive(&s24, 23)?;
                let s22 = derive(&s23, 22)?;
                let aut = design_automorphisms(&s22)?;
                let m22 = mathieu_m22(&aut)?;
                let picks = [0, s22.blocks.len() / 2, s22.blocks.len() - 1];
                let mut hexads = Vec::new();
                for i in picks {
                    let (p, g) = hexad_stabilizer(&m22, s22.blocks[i])?;
                    hexads.push((s22.blocks[i], p, g));
                }
                let block = clifford_atlas::design::points_of(s22.blocks[0]);
                let block_stabilizer_aut = aut.set_stabilizer(&block).as_finite_group()?.0;
                Ok(WittData { code, s24, s23, s22, aut, m22, hexads, block_stabilizer_aut })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn refs(&self) -> &References {
        self.refs.get_or_init(|| {
            let fg = |p: &PermGroup| p.as_finite_group().expect("reference groups enumerate").0;
            let perms = vec![
                ("S3", symmetric_group(3)),
                ("S4", symmetric_group(4)),
                ("A4", alternating_group(4)),
                ("A6", alternating_group(6)),
                ("S6", symmetric_group(6)),
            ];
            References {
                s3: fg(&perms[0].1),
                s4: fg(&perms[1].1),
                a4: fg(&perms[2].1),
                a6: fg(&perms[3].1),
                s6: fg(&perms[4].1),
                perms,
            }
        })
    }

    pub fn c1_s4(&self) -> Outcome<&IsoOutcome> {
        let c1 = self.c1()?;
        Ok(self.certs.c1_s4.get_or_init(|| isomorphic(c1.group(), &self.refs().s4, self.config.budget_iso)))
    }

    pub fn c2_quotient_a6(&self) -> Outcome<&IsoOutcome> {
        self.certs
            .c2_quotient_a6
            .get_or_init(|| {
                let c2 = self.c2()?;
                let n2 = c2.group().subgroup_as_group(c2.n2()?)?;
                let n1_in_n2 = n2.pull_back(c2.n1()?)?;
                let q = quotient(&n2.group, &n1_in_n2)?;
                Ok(isomorphic(&q.group, &self.refs().a6, self.config.budget_iso))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn c2_quotient_s6(&self) -> Outcome<&IsoOutcome> {
        self.certs
            .c2_quotient_s6
            .get_or_init(|| {
                let c2 = self.c2()?;
                let q = quotient(c2.group(), c2.n1()?)?;
                Ok(isomorphic(&q.group, &self.refs().s6, self.config.budget_iso))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn bridge(&self) -> Outcome<&BridgeReport> {
        self.certs
            .bridge
            .get_or_init(|| {
                let u6 = self.c2()?.n2_group()?;
                let hexad = &self.witt()?.hexads[0].2;
                Ok(bridge_check(&u6, hexad, self.config.budget_iso))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Conjugation action of the inner two-qubit group on the 15 points.
    pub fn conjugation(&self) -> Outcome<&ConjugationReport> {
        self.conjugation
            .get_or_init(|| Ok(conjugation_action_check(&self.c2()?.inner, self.w2()?)?))
            .as_ref()
            .map_err(Clone::clone)
    }
}
