use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::constructors::{construct_assoc, construct_gl, construct_sl, AssocKind};
use crate::exact::linalg::{unit_vector, zero_vector};
use crate::exact::{qi, Matrix, Rational, Subspace};

fn sl2() -> LieSuperalgebra {
    // basis e, h, f
    let mut t = StructureTable::new(SuperSpace::even(3), Kind::Lie);
    t.set_product(0, 2, vec![(1, qi(1))]).unwrap();
    t.set_product(2, 0, vec![(1, qi(-1))]).unwrap();
    t.set_product(1, 0, vec![(0, qi(2))]).unwrap();
    t.set_product(0, 1, vec![(0, qi(-2))]).unwrap();
    t.set_product(1, 2, vec![(2, qi(-2))]).unwrap();
    t.set_product(2, 1, vec![(2, qi(2))]).unwrap();
    validate_lie(t).unwrap()
}

fn unit(d: usize, i: usize) -> Vec<Rational> {
    unit_vector(d, i)
}

/// Brute-force super Jacobi over every ordered triple, independent of the
/// validator's sorted-triple shortcut.
fn jacobi_all_triples(l: &LieSuperalgebra) -> bool {
    let d = l.dim();
    let s = |a: usize, b: usize| Parity::sign(l.parity(a), l.parity(b));
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (unit(d, i), unit(d, j), unit(d, k));
                let a = l.bracket(&l.bracket(&x, &y), &z);
                let b = l.bracket(&l.bracket(&y, &z), &x);
                let c = l.bracket(&l.bracket(&z, &x), &y);
                for t in 0..d {
                    let v = &(&(&s(i, k) * &a[t]) + &(&s(j, i) * &b[t])) + &(&s(k, j) * &c[t]);
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn sl21_passes_and_satisfies_jacobi_on_all_triples() {
    let l = construct_sl(2, 1).unwrap();
    assert_eq!(l.dim(), 8);
    assert!(jacobi_all_triples(&l));
    assert!(validate_lie(l.into_table()).is_ok());
}

#[test]
fn abelian_table_validates() {
    let t = StructureTable::new(SuperSpace::from_bits(&[0, 1, 1]).unwrap(), Kind::Lie);
    assert!(validate_lie(t).is_ok());
}

#[test]
fn nonzero_square_of_even_element_is_rejected() {
    let mut t = StructureTable::new(SuperSpace::even(2), Kind::Lie);
    t.set_product(0, 0, vec![(1, qi(1))]).unwrap();
    assert!(matches!(validate_lie(t), Err(Error::AxiomViolation { .. })));
}

#[test]
fn parity_violating_entry_is_refused() {
    let mut t = StructureTable::new(SuperSpace::from_bits(&[0, 1]).unwrap(), Kind::Lie);
    let err = t.set_product(0, 0, vec![(1, qi(1))]).unwrap_err();
    assert!(matches!(err, Error::AxiomViolation { axiom: "parity homogeneity", .. }));
}

#[test]
fn grassmann_and_field_are_associative() {
    for k in [AssocKind::Field, AssocKind::Grassmann(1), AssocKind::DualNumbers] {
        let a = construct_assoc(&k).unwrap();
        assert!(validate_assoc(a.into_table()).is_ok());
    }
}

#[test]
fn broken_unit_is_reported() {
    let mut t = construct_assoc(&AssocKind::Grassmann(1)).unwrap().into_table();
    t.set_product(0, 1, Vec::new()).unwrap();
    assert_eq!(validate_assoc(t).unwrap_err(), Error::MissingUnit);
    let mut t = construct_assoc(&AssocKind::Field).unwrap().into_table();
    t.set_unit(None).unwrap();
    assert_eq!(validate_assoc(t).unwrap_err(), Error::MissingUnit);
}

#[test]
fn matrix_product_labelled_jordan_is_rejected() {
    let t = matrix_units_assoc(2, 2).with_kind(Kind::Jordan);
    assert!(matches!(validate_jordan(t), Err(Error::AxiomViolation { axiom: "supercommutativity", .. })));
}

#[test]
fn field_is_jordan() {
    let t = construct_assoc(&AssocKind::Field).unwrap().into_table().with_kind(Kind::Jordan);
    assert!(validate_jordan(t).is_ok());
}

#[test]
fn kind_mismatch() {
    let t = StructureTable::new(SuperSpace::even(1), Kind::Assoc);
    assert!(matches!(validate_lie(t), Err(Error::KindMismatch { .. })));
}

#[test]
fn gl11_odd_bracket() {
    let g = construct_gl(1, 1).unwrap();
    let x = g.space().index_of_label("e[1,1']").unwrap();
    let y = g.space().index_of_label("e[1',1]").unwrap();
    let mut want = zero_vector(4);
    want[0] = qi(1);
    want[3] = qi(1);
    assert_eq!(g.bracket(&unit(4, x), &unit(4, y)), want);
    assert_eq!(bracket(&g, &zero_vector(4), &unit(4, y)).unwrap(), zero_vector(4));
    assert!(matches!(bracket(&g, &zero_vector(3), &unit(4, y)), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn sl2_relations_and_ad_h() {
    let l = sl2();
    assert_eq!(l.bracket(&unit(3, 0), &unit(3, 2)), unit(3, 1));
    let ad = ad_matrix(&l, &unit(3, 1));
    assert_eq!(ad, Matrix::diagonal(&[qi(2), qi(0), qi(-2)]));
    assert!(ad_matrix(&l, &zero_vector(3)).is_zero());
    // sl(2,0) in the matrix-unit basis e12, e21, e22 - e11
    let s = construct_sl(2, 0).unwrap();
    let h = crate::constructors::matrix_element(&s, &[(0, 0, qi(1)), (1, 1, qi(-1))]).unwrap();
    let mut eig = crate::exact::rational_eigenvalues(&ad_matrix(&s, &h)).unwrap();
    eig.sort();
    assert_eq!(eig, vec![(qi(-2), 1), (qi(0), 1), (qi(2), 1)]);
}

#[test]
fn centers() {
    let gl = construct_gl(2, 2).unwrap();
    let z = center(&gl);
    assert_eq!(z.dim(), 1);
    assert!(z.contains(gl.provenance().central.as_ref().unwrap()));
    let t = StructureTable::new(SuperSpace::from_bits(&[0, 1, 0]).unwrap(), Kind::Lie);
    assert_eq!(center(&validate_lie(t).unwrap()).dim(), 3);
    assert_eq!(center(&sl2()).dim(), 0);
}

#[test]
fn derived_algebras() {
    let gl = construct_gl(2, 1).unwrap();
    let der = derived_subalgebra(&gl);
    assert_eq!(der.dim(), 8);
    let sl = construct_sl(2, 1).unwrap();
    let slr = sl.provenance().realization.as_ref().unwrap();
    assert_eq!(der, Subspace::span(9, slr.basis()));
    let ab = validate_lie(StructureTable::new(SuperSpace::even(2), Kind::Lie)).unwrap();
    assert_eq!(derived_subalgebra(&ab).dim(), 0);
    assert!(is_perfect(&construct_sl(3, 3).unwrap()));
    assert_eq!(construct_sl(3, 3).unwrap().dim(), 35);
}

#[test]
fn derived_subalgebra_is_an_ideal() {
    let gl = construct_gl(2, 1).unwrap();
    let der = derived_subalgebra(&gl);
    for b in der.basis() {
        for i in 0..gl.dim() {
            assert!(der.contains(&gl.bracket(&unit(9, i), b)));
        }
    }
}

#[test]
fn central_quotients() {
    let sl = construct_sl(2, 2).unwrap();
    let z = Subspace::span(15, &[sl.provenance().central.clone().unwrap()]);
    let (psl, proj) = quotient_central(&sl, &z).unwrap();
    assert_eq!(psl.dim(), 14);
    assert_eq!(proj.rows(), 14);
    assert_eq!(center(&psl).dim(), 0);
    assert!(validate_lie(psl.into_table()).is_ok());

    let (same, proj) = quotient_central(&sl, &Subspace::zero(15)).unwrap();
    assert_eq!(same.table(), sl.table());
    assert_eq!(proj, Matrix::identity(15));

    let sl33 = construct_sl(3, 3).unwrap();
    let z = Subspace::span(35, &[sl33.provenance().central.clone().unwrap()]);
    assert_eq!(quotient_central(&sl33, &z).unwrap().0.dim(), 34);

    let not_central = Subspace::span(15, &[unit(15, 0)]);
    assert!(matches!(quotient_central(&sl, &not_central), Err(Error::NotCentral { index: 0 })));
}

#[test]
fn projection_is_a_homomorphism() {
    let sl = construct_sl(2, 2).unwrap();
    let z = Subspace::span(15, &[sl.provenance().central.clone().unwrap()]);
    let (psl, proj) = quotient_central(&sl, &z).unwrap();
    for i in 0..15 {
        for j in 0..15 {
            let (x, y) = (unit(15, i), unit(15, j));
            let lhs = proj.mul_vec(&sl.bracket(&x, &y));
            let rhs = psl.bracket(&proj.mul_vec(&x), &proj.mul_vec(&y));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn tensor_with_field_is_gl() {
    let gl = construct_gl(2, 1).unwrap();
    let f = construct_assoc(&AssocKind::Field).unwrap();
    let t = tensor_lie_assoc(&gl, &f).unwrap();
    assert_eq!(t.table().entries().collect::<Vec<_>>(), gl.table().entries().collect::<Vec<_>>());
}

#[test]
fn producto_sign_in_gl33_tensor_grassmann() {
    let gl = construct_gl(3, 3).unwrap();
    let l = tensor_lie_assoc(&gl, &construct_assoc(&AssocKind::Grassmann(1)).unwrap()).unwrap();
    assert!(validate_lie(l.table().clone()).is_ok());
    let d = l.dim();
    let idx = |s: &str| l.space().index_of_label(s).unwrap();
    let x = unit(d, idx("e[1,2]|xi1"));
    let y = unit(d, idx("e[2,1']|1"));
    let mut want = zero_vector(d);
    want[idx("e[1,1']|xi1")] = qi(-1);
    assert_eq!(l.bracket(&x, &y), want);
    let z = unit(d, idx("e[2,3]|xi1"));
    assert_eq!(l.bracket(&x, &z), zero_vector(d));
}

#[test]
fn producto_sign_exhaustive_on_matrix_units() {
    // [e_ij (x) a, e_jk (x) b] = (-1)^{|a|(|j|+|k|)} e_ik (x) ab for i, j, k distinct
    let gl = construct_gl(2, 1).unwrap();
    let a = construct_assoc(&AssocKind::Grassmann(2)).unwrap();
    let l = tensor_lie_assoc(&gl, &a).unwrap();
    let r = l.provenance().realization.clone().unwrap();
    let da = a.dim();
    let par = |i: usize| if i < 2 { 0 } else { 1 };
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if i == j || j == k || i == k {
                    continue;
                }
                for s in 0..da {
                    for t in 0..da {
                        let x = unit(l.dim(), r.ambient_index(i, j, s));
                        let y = unit(l.dim(), r.ambient_index(j, k, t));
                        let mut want = zero_vector(l.dim());
                        let ab = a.mul(&unit(da, s), &unit(da, t));
                        let sa = a.parity(s).bit() as usize;
                        let sign = if sa * (par(j) + par(k)) % 2 == 1 { qi(-1) } else { qi(1) };
                        for (u, c) in ab.iter().enumerate() {
                            want[r.ambient_index(i, k, u)] = &sign * c;
                        }
                        assert_eq!(l.bracket(&x, &y), want, "i={i} j={j} k={k} s={s} t={t}");
                    }
                }
            }
        }
    }
}

#[test]
fn generated_subalgebras() {
    let l = sl2();
    assert_eq!(subalgebra_from_generators(&l, &[]).dim(), 0);
    assert_eq!(subalgebra_from_generators(&l, &[unit(3, 0), unit(3, 2)]).dim(), 3);
    let all: Vec<_> = (0..3).map(|i| unit(3, i)).collect();
    assert_eq!(subalgebra_from_generators(&l, &all).dim(), 3);
}

#[test]
fn homogeneous_brackets_have_additive_parity() {
    let l = construct_sl(2, 1).unwrap();
    let d = l.dim();
    for i in 0..d {
        for j in 0..d {
            let p = l.bracket(&unit(d, i), &unit(d, j));
            if p.iter().any(|c| !c.is_zero()) {
                assert_eq!(l.space().parity_of(&p), Some(l.parity(i) + l.parity(j)));
            }
        }
    }
}
