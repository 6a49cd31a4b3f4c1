use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::constructors::{
    construct_assoc, construct_gl, construct_psl, construct_sl, construct_sl_a, construct_sl_natural, matrix_element,
    AssocKind,
};
use crate::exact::qi;
use crate::superalg::{StructureTable, validate_lie, Kind};

fn dims_of(d: &RootDatum) -> Vec<(usize, usize)> {
    d.components.iter().map(|c| (c.even_dim, c.odd_dim)).collect()
}

#[test]
fn psl22_root_spaces() {
    let (p, _) = construct_psl(1).unwrap();
    let cartan = p.provenance().cartan.clone().unwrap();
    let d = weight_decomposition(&p, &cartan).unwrap();
    assert_eq!(d.components.len(), 8);
    let w = |a: i64, b: i64| vec![qi(a), qi(b)];
    // +-2 eps_1, +-2 eps_1' are even lines; +-eps_1 +- eps_1' are odd planes
    for (weight, dims) in [
        (w(2, 0), (1, 0)),
        (w(-2, 0), (1, 0)),
        (w(0, 2), (1, 0)),
        (w(0, -2), (1, 0)),
        (w(1, 1), (0, 2)),
        (w(1, -1), (0, 2)),
        (w(-1, 1), (0, 2)),
        (w(-1, -1), (0, 2)),
    ] {
        let c = d.find(&weight).unwrap();
        assert_eq!((c.even_dim, c.odd_dim), dims, "{weight:?}");
    }
    assert_eq!((d.zero_component.even_dim, d.zero_component.odd_dim), (2, 0));
    let expected = expected_ann_roots(1).unwrap();
    let got: Vec<_> = d.components.iter().map(|c| (c.weight.clone(), c.even_dim, c.odd_dim)).collect();
    let want: Vec<_> = expected.iter().map(|r| (r.weight.clone(), r.even_dim, r.odd_dim)).collect();
    assert_eq!(got, want);
}

#[test]
fn psl33_root_spaces() {
    let (p, _) = construct_psl(2).unwrap();
    let d = weight_decomposition(&p, p.provenance().cartan.as_ref().unwrap()).unwrap();
    assert_eq!(d.components.len(), 30);
    assert!(dims_of(&d).iter().all(|&(e, o)| e + o == 1));
    assert_eq!(d.components.iter().filter(|c| c.even_dim == 1).count(), 12);
    assert_eq!(d.components.iter().filter(|c| c.odd_dim == 1).count(), 18);
    check_grading_closure(&p, &d).unwrap();
}

#[test]
fn expected_root_counts() {
    let r1 = expected_ann_roots(1).unwrap();
    assert_eq!(r1.len(), 8);
    let r2 = expected_ann_roots(2).unwrap();
    assert_eq!(r2.len(), 30);
    assert_eq!(r2.iter().filter(|r| r.even_dim == 1 && r.odd_dim == 0).count(), 12);
    assert_eq!(r2.iter().filter(|r| r.even_dim == 0 && r.odd_dim == 1).count(), 18);
    assert!(expected_ann_roots(0).is_err());
}

#[test]
fn abelian_cartan_is_all_zero_weight() {
    let l = validate_lie(StructureTable::new(crate::superalg::SuperSpace::even(3), Kind::Lie)).unwrap();
    let cartan = CartanBasis::new((0..3).map(|i| l.basis_vector(i)).collect(), CartanTag::Custom);
    let d = weight_decomposition(&l, &cartan).unwrap();
    assert!(d.components.is_empty());
    assert_eq!(d.zero_component.dim(), 3);
}

#[test]
fn central_cartan_element_has_zero_coordinates() {
    let s = construct_sl(3, 3).unwrap();
    let hp = s.provenance().cartan_prime.clone().unwrap();
    assert_eq!(hp.rank(), 5);
    let d = weight_decomposition(&s, &hp).unwrap();
    assert_eq!(d.components.len(), 30);
    assert!(d.components.iter().all(|c| c.weight[0].is_zero()));
}

#[test]
fn decomposition_errors() {
    let s = construct_sl(2, 0).unwrap();
    // e12 is nilpotent
    let e = matrix_element(&s, &[(0, 1, qi(1))]).unwrap();
    let err = weight_decomposition(&s, &CartanBasis::new(vec![e.clone()], CartanTag::Custom)).unwrap_err();
    assert!(matches!(err, Error::NotDiagonalizable { cartan_index: 0, .. }));
    // e12 - e21 has eigenvalues +-2i
    let r = matrix_element(&s, &[(0, 1, qi(1)), (1, 0, qi(-1))]).unwrap();
    let err = weight_decomposition(&s, &CartanBasis::new(vec![r], CartanTag::Custom)).unwrap_err();
    assert!(matches!(err, Error::NonSplitSpectrum { .. }));
    let h = matrix_element(&s, &[(0, 0, qi(1)), (1, 1, qi(-1))]).unwrap();
    let err = weight_decomposition(&s, &CartanBasis::new(vec![h, e], CartanTag::Custom)).unwrap_err();
    assert_eq!(err, Error::CartanNotCommuting(0, 1));
}

#[test]
fn psl_is_graded_by_itself() {
    for n in 1..=2 {
        let (p, _) = construct_psl(n).unwrap();
        let cover = p.provenance().cover.clone().unwrap();
        let r = verify_delta_graded(&p, &cover).unwrap();
        assert_eq!(r.verdict, Verdict::Graded, "{r:?}");
        assert_eq!(r.matched_root_system, Some(n));
        let z = check_z_trivial(&p, &cover).unwrap();
        assert!(z.passed);
        assert!(is_zero_vector(&z.z));
    }
}

#[test]
fn gl33_fails_the_zero_part_condition() {
    let g = construct_gl(3, 3).unwrap();
    let cover = g.provenance().cover.clone().unwrap();
    let r = verify_delta_graded(&g, &cover).unwrap();
    assert_eq!(r.verdict, Verdict::NotGraded);
    assert!(r.condition1.passed && r.condition2.passed);
    assert!(!r.condition3.passed);
    assert_eq!((r.condition3.zero_dim, r.condition3.bracket_dim), (6, 5));
    // z itself is a sum of brackets of opposite odd root vectors
    let z = g.provenance().central.clone().unwrap();
    let zc = check_z_trivial(&g, &cover).unwrap();
    assert!(zc.passed);
    assert_eq!(zc.z, z);
}

#[test]
fn sl_a_grassmann_is_ann_graded() {
    let a = construct_assoc(&AssocKind::Grassmann(1)).unwrap();
    let l = construct_sl_a(3, 3, &a).unwrap();
    let cover = l.provenance().cover.clone().unwrap();
    let r = verify_delta_graded(&l, &cover).unwrap();
    assert_eq!(r.verdict, Verdict::Graded);
    assert_eq!(r.matched_root_system, Some(2));
    assert!(check_z_trivial(&l, &cover).unwrap().passed);
    let g = three_grading(&l, &r.datum, &GradingStyle::Height).unwrap();
    assert_eq!(g.minus.dim() + g.zero.dim() + g.plus.dim(), l.dim());
}

#[test]
fn natural_module_breaks_z_triviality() {
    let l = construct_sl_natural(2, 2).unwrap();
    let cover = l.provenance().cover.clone().unwrap();
    let z = check_z_trivial(&l, &cover).unwrap();
    assert!(!z.passed);
    let (i, v) = z.witness.unwrap();
    assert!(l.space().label(i).unwrap().starts_with("v["));
    assert!(!is_zero_vector(&v));
}

#[test]
fn broken_embedding_is_rejected() {
    let (p, _) = construct_psl(1).unwrap();
    let good = p.provenance().cover.clone().unwrap();
    let bad = CoverEmbedding::from_fn(1, |i, j| {
        let v = good.image(i, j).clone();
        if (i, j) == (0, 1) {
            v.iter().map(|c| c * &qi(2)).collect()
        } else {
            v
        }
    });
    assert!(matches!(verify_delta_graded(&p, &bad), Err(Error::NotHomomorphism(_))));
}

#[test]
fn psl33_height_grading() {
    let (p, _) = construct_psl(2).unwrap();
    let d = weight_decomposition(&p, p.provenance().cartan.as_ref().unwrap()).unwrap();
    let g = three_grading(&p, &d, &GradingStyle::Height).unwrap();
    assert_eq!(g.dims(p.space(), 1), (0, 9));
    assert_eq!(g.dims(p.space(), -1), (0, 9));
    assert_eq!(g.dims(p.space(), 0), (16, 0));
}

#[test]
fn psl22_sl2_grading() {
    let (p, _) = construct_psl(1).unwrap();
    let cover = p.provenance().cover.clone().unwrap();
    // e = e12 + e1'2', f = e21 + e2'1'
    let e: Vec<_> = crate::exact::linalg::add(cover.image(0, 1), cover.image(2, 3));
    let f: Vec<_> = crate::exact::linalg::add(cover.image(1, 0), cover.image(3, 2));
    let h = p.bracket(&e, &f);
    let d = weight_decomposition(&p, &CartanBasis::new(vec![h], CartanTag::Custom)).unwrap();
    let g = three_grading(&p, &d, &GradingStyle::Sl2 { h_index: 0 }).unwrap();
    assert_eq!(g.dims(p.space(), 1), (2, 2));
    assert_eq!(g.dims(p.space(), -1), (2, 2));
    assert_eq!(g.dims(p.space(), 0), (2, 4));
    assert_eq!(crate::superalg::subalgebra_from_generators(&p, &[e, f]).dim(), 3);
}

#[test]
fn height_grading_of_sl_a_dual_numbers() {
    let a = construct_assoc(&AssocKind::DualNumbers).unwrap();
    let l = construct_sl_a(3, 3, &a).unwrap();
    let cover = l.provenance().cover.clone().unwrap();
    let d = weight_decomposition(&l, &lifted_cartan(&l, &cover)).unwrap();
    check_grading_closure(&l, &d).unwrap();
    let g = three_grading(&l, &d, &GradingStyle::Height).unwrap();
    for x in g.plus.basis() {
        for y in g.plus.basis() {
            assert!(is_zero_vector(&l.bracket(x, y)));
        }
    }
}

#[test]
fn height_style_needs_rank_four() {
    let (p, _) = construct_psl(1).unwrap();
    let d = weight_decomposition(&p, p.provenance().cartan.as_ref().unwrap()).unwrap();
    assert!(matches!(three_grading(&p, &d, &GradingStyle::Height), Err(Error::BadParams(_))));
}
