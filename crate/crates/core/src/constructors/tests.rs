use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::exact::linalg::unit_vector;
use crate::exact::{q, qi};
use crate::superalg::{center, validate_jordan, validate_lie};

fn dims(l: &impl Algebra) -> (usize, usize) {
    (l.space().even_dim(), l.space().odd_dim())
}

#[test]
fn gl_dimensions_and_brackets() {
    let g = construct_gl(1, 0).unwrap();
    assert_eq!(g.dim(), 1);
    assert!(g.table().is_zero());
    assert_eq!(construct_gl(3, 3).unwrap().dim(), 36);
    assert!(matches!(construct_gl(0, 0), Err(Error::BadParams(_))));
    let g = construct_gl(2, 2).unwrap();
    let z = g.provenance().central.clone().unwrap();
    for i in 0..16 {
        assert!(g.bracket(&z, &unit_vector(16, i)).iter().all(|c| c.is_zero()));
    }
}

#[test]
fn sl_dimensions() {
    assert_eq!(construct_sl(2, 0).unwrap().dim(), 3);
    let s = construct_sl(2, 2).unwrap();
    assert_eq!(s.dim(), 15);
    let z = s.provenance().central.clone().unwrap();
    assert_eq!(supertrace(&s, &z).unwrap(), qi(0));
    assert_eq!(construct_sl(3, 3).unwrap().dim(), 35);
    assert!(construct_sl(1, 0).is_err());
    // sl(2,1) has no central identity
    let s = construct_sl(2, 1).unwrap();
    assert!(s.provenance().central.is_none());
}

#[test]
fn sl_diagonal_labels() {
    let s = construct_sl(2, 1).unwrap();
    let labels: Vec<_> = (0..s.dim()).filter_map(|i| s.space().label(i)).collect();
    assert_eq!(labels.len(), s.dim(), "{labels:?}");
    assert!(labels.contains(&"e[2,2]+e[1',1']"), "{labels:?}");
    assert!(labels.contains(&"e[1,1]+e[1',1']"));
}

#[test]
fn psl_dimensions() {
    let (p, proj) = construct_psl(1).unwrap();
    assert_eq!(p.dim(), 14);
    assert_eq!(dims(&p), (6, 8));
    assert_eq!(proj.cols(), 15);
    assert_eq!(center(&p).dim(), 0);
    assert_eq!(p.provenance().cartan.as_ref().unwrap().rank(), 2);
    assert!(p.provenance().central.as_ref().unwrap().iter().all(|c| c.is_zero()));
    let (p3, _) = construct_psl(2).unwrap();
    assert_eq!(p3.dim(), 34);
    assert_eq!(p3.provenance().cartan.as_ref().unwrap().rank(), 4);
    assert!(p3.provenance().cover.is_some());
}

#[test]
fn assoc_kinds() {
    let g = construct_assoc(&AssocKind::Grassmann(1)).unwrap();
    assert_eq!(g.dim(), 2);
    assert_eq!(g.parity(1), Parity::Odd);
    assert!(g.mul(&unit_vector(2, 1), &unit_vector(2, 1)).iter().all(|c| c.is_zero()));
    assert_eq!(construct_assoc(&AssocKind::MatrixSuper(1, 1)).unwrap().dim(), 4);
    assert_eq!(construct_assoc(&AssocKind::Field).unwrap().dim(), 1);
    assert_eq!(construct_assoc(&AssocKind::Grassmann(3)).unwrap().dim(), 8);
    assert!(matches!(construct_assoc(&AssocKind::Grassmann(0)), Err(Error::BadParams(_))));
    assert!(matches!(construct_assoc(&AssocKind::MatrixSuper(0, 0)), Err(Error::BadParams(_))));
}

#[test]
fn grassmann_two_signs() {
    let g = construct_assoc(&AssocKind::Grassmann(2)).unwrap();
    // bitmask order: 1, xi1, xi2, xi1xi2
    assert_eq!(g.mul(&unit_vector(4, 1), &unit_vector(4, 2)), unit_vector(4, 3));
    let minus: Vec<_> = unit_vector(4, 3).iter().map(|c| -c).collect();
    assert_eq!(g.mul(&unit_vector(4, 2), &unit_vector(4, 1)), minus);
}

#[test]
fn sl_a_over_field_is_sl() {
    let f = construct_assoc(&AssocKind::Field).unwrap();
    let s = construct_sl_a(2, 1, &f).unwrap();
    let t = construct_sl(2, 1).unwrap();
    assert_eq!(s.dim(), t.dim());
    assert_eq!(s.table().entries().collect::<Vec<_>>(), t.table().entries().collect::<Vec<_>>());
}

#[test]
fn sl_a_dimensions() {
    let dual = construct_assoc(&AssocKind::DualNumbers).unwrap();
    let s = construct_sl_a(3, 3, &dual).unwrap();
    assert_eq!(s.dim(), 70);
    assert_eq!(dims(&s), (34, 36));
    let grass = construct_assoc(&AssocKind::Grassmann(1)).unwrap();
    let s = construct_sl_a(3, 3, &grass).unwrap();
    assert_eq!(s.dim(), 70);
    assert_eq!(dims(&s), (35, 35));
    let p = s.provenance();
    assert!(p.central.is_some());
    assert_eq!(p.cartan.as_ref().unwrap().rank(), 4);
    assert_eq!(p.cartan_prime.as_ref().unwrap().rank(), 5);
    assert!(p.cover.is_some());
}

#[test]
fn sl_a_over_matrix_superalgebra() {
    let m = construct_assoc(&AssocKind::MatrixSuper(1, 1)).unwrap();
    let s = construct_sl_a(2, 2, &m).unwrap();
    // [gl(2,2) (x) M_{1,1}, same] = sl(4,4) in disguise
    assert_eq!(s.dim(), 63);
    assert!(validate_lie(s.into_table()).is_ok());
}

#[test]
fn m11_products() {
    let j = construct_jordan(&JordanKind::M11).unwrap();
    let e = |s: &str| unit_vector(4, j.space().index_of_label(s).unwrap());
    let e1 = e("e1");
    let e2 = e("e2");
    let x = e("x");
    let y = e("y");
    let diff: Vec<_> = e1.iter().zip(&e2).map(|(a, b)| a - b).collect();
    assert_eq!(j.mul(&x, &y), diff);
    let neg: Vec<_> = diff.iter().map(|c| -c).collect();
    assert_eq!(j.mul(&y, &x), neg);
    let half_x: Vec<_> = x.iter().map(|c| c * &q(1, 2)).collect();
    assert_eq!(j.mul(&e1, &x), half_x);
    assert_eq!(j.mul(&e1, &e1), e1);
    assert!(j.mul(&e1, &e2).iter().all(|c| c.is_zero()));
    assert!(validate_jordan(j.into_table()).is_ok());
}

#[test]
fn jordan_dimensions() {
    for n in 1..=2 {
        let m = construct_jordan(&JordanKind::Mplus(n)).unwrap();
        assert_eq!(m.dim(), 4 * n * n);
        assert!(validate_jordan(m.into_table()).is_ok());
    }
    for n in 1..=2 {
        let p = construct_jordan(&JordanKind::JP(n)).unwrap();
        assert_eq!(dims(&p), (n * n, n * n));
        assert!(validate_jordan(p.into_table()).is_ok());
        let qj = construct_jordan(&JordanKind::JQ(n)).unwrap();
        assert_eq!(dims(&qj), (n * n, n * n));
        assert!(validate_jordan(qj.into_table()).is_ok());
    }
    assert_eq!(dims(&construct_jordan(&JordanKind::JP(4)).unwrap()), (16, 16));
    assert_eq!(dims(&construct_jordan(&JordanKind::JQ(4)).unwrap()), (16, 16));
    assert!(construct_jordan(&JordanKind::JP(0)).is_err());
}

#[test]
fn supertrace_values() {
    let g = construct_gl(3, 3).unwrap();
    let idx = |s: &str| g.space().index_of_label(s).unwrap();
    assert_eq!(supertrace(&g, &unit_vector(36, idx("e[1,1]"))).unwrap(), qi(1));
    assert_eq!(supertrace(&g, &unit_vector(36, idx("e[1',1']"))).unwrap(), qi(-1));
    assert_eq!(supertrace(&g, g.provenance().central.as_ref().unwrap()).unwrap(), qi(0));
    let g = construct_gl(2, 1).unwrap();
    assert_eq!(supertrace(&g, g.provenance().central.as_ref().unwrap()).unwrap(), qi(1));
    let m = construct_assoc(&AssocKind::DualNumbers).unwrap();
    let s = construct_sl_a(2, 1, &m).unwrap();
    assert!(matches!(supertrace(&s, &vec![qi(0); s.dim()]), Err(Error::WrongAlgebra { .. })));
}

#[test]
fn constructed_lie_algebras_validate() {
    for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        assert!(validate_lie(construct_gl(m, n).unwrap().into_table()).is_ok());
        assert!(validate_lie(construct_sl(m, n).unwrap().into_table()).is_ok());
    }
}
