use clifford_atlas::design::{
    derive, design_automorphisms, golay_code, hexad_stabilizer, is_design_automorphism, mathieu_m22, octad_design,
    projective_plane, witt_22,
};
use clifford_atlas::ident::{outer_structure, OuterStructure};

#[test]
fn double_counting() {
    let s24 = octad_design(&golay_code().unwrap()).unwrap();
    let s23 = derive(&s24, 23).unwrap();
    let s22 = derive(&s23, 22).unwrap();
    assert_eq!(s23.blocks.len(), s24.replication(23));
    assert_eq!(s22.blocks.len(), s23.replication(22));
    assert_eq!(759 * 8, 24 * 253);
    assert_eq!(s24.blocks.len() * 8, 24 * s24.replication(0));
    assert_eq!(s22.blocks.len() * 6, 22 * s22.replication(0));
    assert_eq!(77 * 6, 22 * 21);
}

#[test]
fn automorphisms_are_reverified_exhaustively() {
    let fano = projective_plane(2).unwrap();
    let aut = design_automorphisms(&fano).unwrap();
    assert!(aut.elements().unwrap().iter().all(|p| is_design_automorphism(&fano, p)));

    let s22 = witt_22().unwrap();
    let aut = design_automorphisms(&s22).unwrap();
    let all = aut.elements().unwrap();
    assert_eq!(all.len(), 887040);
    assert!(all.iter().all(|p| is_design_automorphism(&s22, p)));
}

#[test]
fn hexad_stabilizers_agree() {
    let s22 = witt_22().unwrap();
    let m22 = mathieu_m22(&design_automorphisms(&s22).unwrap()).unwrap();
    let mut orders = Vec::new();
    for i in [0, 20, 50] {
        let (p, g) = hexad_stabilizer(&m22, s22.blocks[i]).unwrap();
        orders.push((p.order(), g.order()));
        if i == 0 {
            assert_eq!(outer_structure(&g, 20_000_000), Some(OuterStructure::Klein));
        }
    }
    assert_eq!(orders, vec![(5760, 5760); 3]);
}
