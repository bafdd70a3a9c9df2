//! Acceptance suite: ten criteria, exact values only. Prints one line per
//! criterion and exits non-zero if any fails.

use std::fmt::Debug;
use std::process::ExitCode;
use std::time::Instant;

use clifford_atlas::clifford::InnerClifford;
use clifford_atlas::design::{
    bridge_check, design_automorphisms, golay_code, hexad_stabilizer, mathieu_m22, octad_design, points_of,
    projective_plane, verify_steiner, CertificateTier, SteinerSystem,
};
use clifford_atlas::error::Error;
use clifford_atlas::geometry::{
    build_pauli_geometry, classify_line_entanglement, conjugation_action_check, eigenbasis_schmidt_check,
    graph_model_check, matrices_commute, ring_projective_line_grid, spread_structure, spreads, verify_gq_axioms,
    LineKind,
};
use clifford_atlas::group::{FiniteGroup, Subgroup};
use clifford_atlas::ident::{
    automorphism_count, isomorphic, outer_structure, recognize, verify_isomorphism, IsoCertificate, IsoOutcome,
    Named, OuterStructure, Recognition,
};
use clifford_atlas::matrix::{clifford_group, clifford_order_formula, pauli_group, pauli_order_formula};
use clifford_atlas::perm::{alternating_group, symmetric_group, Perm, PermGroup};
use clifford_atlas::structure::{complement_search, is_perfect, quotient};

const ISO_BUDGET: u64 = 2_000_000;
const AUT_BUDGET: u64 = 20_000_000;

#[derive(Default)]
struct Criterion {
    failures: Vec<String>,
}

impl Criterion {
    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn eq<T: PartialEq + Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

/// Certificates collected along the way, re-verified by the last criterion.
struct Certified {
    name: &'static str,
    from: FiniteGroup,
    to: FiniteGroup,
    cert: IsoCertificate,
}

struct Shared {
    c1: InnerClifford,
    c2: InnerClifford,
    a6: FiniteGroup,
    s6: FiniteGroup,
    perm_groups: Vec<(&'static str, PermGroup)>,
    certificates: Vec<Certified>,
    hexad: Option<FiniteGroup>,
}

fn normals(c: &InnerClifford) -> Vec<Subgroup> {
    c.proper_normal_subgroups()
}

fn as_group(g: &FiniteGroup, h: &Subgroup) -> FiniteGroup {
    g.subgroup_as_group(h).expect("own subgroup").group
}

fn named(g: &FiniteGroup) -> Recognition {
    recognize(g, ISO_BUDGET)
}

fn certify(c: &mut Criterion, s: &mut Shared, name: &'static str, from: &FiniteGroup, to: &FiniteGroup) {
    match isomorphic(from, to, ISO_BUDGET) {
        IsoOutcome::Certified(cert) => {
            s.certificates.push(Certified { name, from: from.clone(), to: to.clone(), cert })
        }
        other => c.check(&format!("{name}: {other:?}"), false),
    }
}

fn complement(c: &mut Criterion, what: &str, g: &FiniteGroup, n: &Subgroup, want: usize) {
    match complement_search(g, n, ISO_BUDGET) {
        Ok(k) => {
            c.eq(&format!("{what} complement order"), k.order(), want);
            c.check(&format!("{what} complement meets N trivially"), n.members().iter().all(|&m| m == 0 || !k.contains(m)));
        }
        Err(Error::ComplementNotFound { attempts }) if attempts < ISO_BUDGET => c.check(
            &format!("{what}: no complement, all {attempts} lifts of a generating set tried (extension does not split)"),
            false,
        ),
        Err(e) => c.check(&format!("{what}: {e}"), false),
    }
}

fn criterion_1(c: &mut Criterion, _: &mut Shared) {
    for (n, want) in [(1usize, 16usize), (2, 64)] {
        let g = pauli_group(n).unwrap();
        c.eq(&format!("|P{n}|"), g.order(), want);
        c.eq(&format!("2^(2n+2) for n={n}"), pauli_order_formula(n as u32), want as u128);
    }
}

fn criterion_2(c: &mut Criterion, s: &mut Shared) {
    c.eq("|C1|", s.c1.matrices.order(), 192);
    c.eq("|C2|", s.c2.matrices.order(), 92160);
    // reference values: 192, 92160 and the three-qubit inner order
    c.eq("formula n=1", clifford_order_formula(1), 192);
    c.eq("formula n=2", clifford_order_formula(2), 92160);
    c.eq("inner formula n=3", clifford_order_formula(3) / 8, 92_897_280);
    let start = Instant::now();
    let again = clifford_group(2).unwrap();
    c.check("C2 closure under 120 s", start.elapsed().as_secs() < 120);
    c.eq("C2 closure content hash stable", again.content_hash(), s.c2.matrices.content_hash());
}

fn criterion_3(c: &mut Criterion, s: &mut Shared) {
    for (name, inner) in [("C1", &s.c1), ("C2", &s.c2)] {
        let z = as_group(&inner.full, &inner.center);
        c.eq(&format!("center of {name}"), named(&z), Recognition::Named(Named::Cyclic(8)));
    }
}

fn criterion_4(c: &mut Criterion, s: &mut Shared) {
    let g = s.c1.group().clone();
    let s4 = symmetric_group(4).as_finite_group().unwrap().0;
    certify(c, s, "C1 inner ~ S4", &g, &s4);
    let ns = normals(&s.c1);
    c.eq("normal subgroup count", ns.len(), 2);
    if ns.len() != 2 {
        return;
    }
    c.eq("N1", named(&as_group(&g, &ns[0])), Recognition::Named(Named::Klein));
    c.eq("N2", named(&as_group(&g, &ns[1])), Recognition::Named(Named::Alternating(4)));
    let n2 = g.subgroup_as_group(&ns[1]).unwrap();
    let q = quotient(&n2.group, &n2.pull_back(&ns[0]).unwrap()).unwrap();
    c.eq("N2/N1", named(&q.group), Recognition::Named(Named::Cyclic(3)));
    let q = quotient(&g, &ns[0]).unwrap();
    c.eq("G/N1", named(&q.group), Recognition::Named(Named::Symmetric(3)));
}

fn criterion_5(c: &mut Criterion, s: &mut Shared) {
    let g = s.c2.group().clone();
    c.eq("inner order", g.order(), 11520);
    let ns = normals(&s.c2);
    c.eq("normal orders", ns.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![16, 5760]);
    if ns.len() != 2 {
        return;
    }
    c.eq("N1", named(&as_group(&g, &ns[0])), Recognition::Named(Named::ElementaryAbelian2(4)));
    let n2 = g.subgroup_as_group(&ns[1]).unwrap();
    c.check("N2 perfect", is_perfect(&n2.group));
    let n1_in_n2 = n2.pull_back(&ns[0]).unwrap();
    let qa = quotient(&n2.group, &n1_in_n2).unwrap();
    let a6 = s.a6.clone();
    certify(c, s, "N2/N1 ~ A6", &qa.group, &a6);
    let qs = quotient(&g, &ns[0]).unwrap();
    let s6 = s.s6.clone();
    certify(c, s, "G/N1 ~ S6", &qs.group, &s6);
    complement(c, "N1 in N2", &n2.group, &n1_in_n2, 360);
    complement(c, "N1 in G", &g, &ns[0], 720);
}

fn criterion_6(c: &mut Criterion, s: &mut Shared) {
    let start = Instant::now();
    c.eq("|Aut(A6)|", automorphism_count(&s.a6, AUT_BUDGET), Some(1440));
    c.eq("Out(A6)", outer_structure(&s.a6, AUT_BUDGET), Some(OuterStructure::Klein));
    c.eq("|Aut(S6)|", automorphism_count(&s.s6, AUT_BUDGET), Some(1440));
    c.eq("Out(S6)", outer_structure(&s.s6, AUT_BUDGET), Some(OuterStructure::Z2));
    c.check("A6/S6 cases under 5 min", start.elapsed().as_secs() < 300);
    let ns = normals(&s.c2);
    let u6 = as_group(s.c2.group(), &ns[1]);
    c.eq("Out(U6)", outer_structure(&u6, AUT_BUDGET), Some(OuterStructure::Klein));
}

fn criterion_7(c: &mut Criterion, s: &mut Shared) {
    let w = build_pauli_geometry(2).unwrap();
    c.eq("points", w.points.len(), 15);
    c.eq("lines", w.lines.len(), 15);
    let gq = verify_gq_axioms(&w, 2, 2);
    c.check("3 points per line", gq.line_sizes_ok);
    c.check("3 lines per point", gq.point_degrees_ok);
    c.eq("antiflags", (gq.antiflags, gq.antiflags_with_unique_transversal), (180, 180));
    let all = spreads(&w);
    c.eq("spreads", all.len(), 6);
    let st = spread_structure(&w, &all);
    c.check("spreads share one line pairwise", st.pairwise_single_line);
    c.check("K6 structure", st.complete_graph);
    let kinds = classify_line_entanglement(&w);
    let entangled = kinds.iter().filter(|&&k| k == LineKind::Entangled).count();
    c.eq("entangled / product", (entangled, kinds.len() - entangled), (6, 9));
    for (i, k) in kinds.iter().enumerate() {
        let r = eigenbasis_schmidt_check(&w, i).unwrap();
        c.eq(&format!("line {i} classifiers"), r.kind, *k);
        c.check(&format!("line {i} projectors resolve identity"), r.projectors_sum_to_identity);
    }
    let gm = graph_model_check(&w);
    c.check("graph is 6-regular", gm.commutation_degrees.iter().all(|&d| d == 6));
    c.check("graph ~ complement of L(K6)", gm.isomorphism.is_some());
    c.eq("graph automorphisms", gm.automorphisms, 720);
    let act = conjugation_action_check(&s.c2, &w).unwrap();
    c.eq("action image", act.image_order, 720);
    c.eq("action kernel", act.kernel_order, 16);
    c.check("kernel is N1", act.kernel_is_minimal_normal);
    s.perm_groups.push(("conjugation image", act.image.clone()));
    let w3 = build_pauli_geometry(3).unwrap();
    c.eq("n=3 points", w3.points.len(), 63);
    c.eq("n=3 maximal cliques", w3.lines.len(), 135);
    let grid = ring_projective_line_grid(&w).unwrap();
    c.eq("ring line points", grid.points.len(), 9);
    c.eq("rows + columns", (grid.rows.len(), grid.columns.len()), (3, 3));
    let mut gl = grid.grid_lines.clone();
    gl.sort_unstable();
    gl.dedup();
    c.eq("grid lines distinct", gl.len(), 6);
    c.check("grid lines are the entangled lines", gl.iter().all(|&l| kinds[l] == LineKind::Entangled));
}

fn criterion_8(c: &mut Criterion, s: &mut Shared) {
    let code = golay_code().unwrap();
    let we: Vec<(u32, usize)> = code.weight_enumerator().into_iter().collect();
    c.eq("Golay weights", we, vec![(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]);
    let s24 = octad_design(&code).unwrap();
    let s23 = clifford_atlas::design::derive(&s24, 23).unwrap();
    let s22 = clifford_atlas::design::derive(&s23, 22).unwrap();
    for (name, d, blocks, subsets) in
        [("S(5,8,24)", &s24, 759, 42504u64), ("S(4,7,23)", &s23, 253, 8855), ("S(3,6,22)", &s22, 77, 1540)]
    {
        let r = verify_steiner(d);
        c.eq(&format!("{name} blocks"), d.blocks.len(), blocks);
        c.eq(&format!("{name} covered once"), (r.subsets, r.covered_once), (subsets, subsets));
    }
    let six = SteinerSystem::new(3, 6, 22, s22.blocks[..6].to_vec());
    c.check("six-block candidate refuted", !verify_steiner(&six).passed());
    let aut = design_automorphisms(&s22).unwrap();
    c.eq("|Aut S(3,6,22)|", aut.order(), 887040);
    let m22 = mathieu_m22(&aut).unwrap();
    c.eq("|M22|", m22.order(), 443520);
    c.eq("M22 perfect", m22.derived_subgroup().order(), 443520);
    c.eq("block orbit", m22.set_orbit(&points_of(s22.blocks[0])).len(), 77);
    let picks = [0, 38, 76];
    for i in picks {
        let (p, g) = hexad_stabilizer(&m22, s22.blocks[i]).unwrap();
        c.eq(&format!("hexad stabilizer of block {i}"), (p.order(), g.order()), (5760, 5760));
        s.perm_groups.push(("hexad stabilizer", p));
        if s.hexad.is_none() {
            s.hexad = Some(g);
        }
    }
    s.perm_groups.push(("point stabilizer in M22", m22.point_stabilizer(21)));
    s.perm_groups.push(("Aut PG(2,2)", design_automorphisms(&projective_plane(2).unwrap()).unwrap()));
}

fn criterion_9(c: &mut Criterion, s: &mut Shared) {
    let Some(hexad) = s.hexad.clone() else {
        c.check("hexad stabilizer available", false);
        return;
    };
    let ns = normals(&s.c2);
    let u6 = as_group(s.c2.group(), &ns[1]);
    let b = bridge_check(&u6, &hexad, ISO_BUDGET);
    c.check("fingerprints equal", b.fingerprints_equal);
    c.eq("perfect", b.perfect, (true, true));
    c.eq("unique minimal Z2^4", b.unique_minimal_z2_4, (true, true));
    c.eq("module signatures equal", b.module_signatures.0 == b.module_signatures.1 && !b.module_signatures.0.is_empty(), true);
    c.eq("split", b.split, (true, true));
    c.eq("quotients A6", b.quotient_a6, (true, true));
    c.eq("tier", b.tier, CertificateTier::Direct);
    if let Some(cert) = b.certificate {
        s.certificates.push(Certified { name: "U6 ~ hexad stabilizer", from: u6, to: hexad, cert });
    }
}

fn criterion_10(c: &mut Criterion, s: &mut Shared) {
    for (name, p) in &s.perm_groups {
        if p.order() >= 100_000 {
            continue;
        }
        let (g, _) =
            FiniteGroup::from_generators(Perm::identity(p.degree()), p.generators(), |a, b| *a * *b, 100_000).unwrap();
        c.eq(&format!("{name}: chain vs closure"), p.order(), g.order() as u128);
    }
    let w = build_pauli_geometry(2).unwrap();
    let mut agree = 0;
    for i in 0..15 {
        for j in i + 1..15 {
            agree += usize::from(w.points[i].commutes(&w.points[j]) == matrices_commute(&w, i, j));
        }
    }
    c.eq("commutation pairs agreeing", agree, 105);
    c.check("certificates collected", s.certificates.len() >= 4);
    for cert in &s.certificates {
        c.check(&format!("{} re-verified", cert.name), verify_isomorphism(&cert.from, &cert.to, &cert.cert.map).is_some());
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut shared = Shared {
        c1: InnerClifford::build(1).expect("C1"),
        c2: InnerClifford::build(2).expect("C2"),
        a6: alternating_group(6).as_finite_group().unwrap().0,
        s6: symmetric_group(6).as_finite_group().unwrap().0,
        perm_groups: ["S3", "S4", "A4", "A5", "A6", "S6"]
            .iter()
            .map(|&n| {
                let d = n[1..].parse().unwrap();
                (n, if n.starts_with('S') { symmetric_group(d) } else { alternating_group(d) })
            })
            .collect(),
        certificates: Vec::new(),
        hexad: None,
    };
    println!("setup: {:.2}s", start.elapsed().as_secs_f64());
    let criteria: [fn(&mut Criterion, &mut Shared); 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = 0;
    for (i, run) in criteria.iter().enumerate() {
        let mut c = Criterion::default();
        let t = Instant::now();
        run(&mut c, &mut shared);
        let secs = t.elapsed().as_secs_f64();
        if c.failures.is_empty() {
            println!("criterion {}: PASS ({secs:.2}s)", i + 1);
        } else {
            failed += 1;
            println!("criterion {}: FAIL ({secs:.2}s)", i + 1);
            for f in &c.failures {
                println!("    {f}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
