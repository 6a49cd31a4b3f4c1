//! The committed fixtures are exactly what the constructors produce. Run with
//! `SUPERGRADE_BLESS=1` to regenerate them.

mod common;

use supergrade::sca::{parse_sca, validate, write_sca};
use supergrade_core::constructors::{
    construct_assoc, construct_gl, construct_jordan, construct_psl, construct_sl, construct_sl_a,
    construct_sl_natural, matrix_element, AssocKind, JordanKind,
};
use supergrade_core::exact::{qi, Rational};
use supergrade_core::superalg::{Algebra, JordanSuperalgebra, LieSuperalgebra};

fn lines(vs: &[Vec<Rational>]) -> String {
    vs.iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",") + "\n").collect()
}

fn lie(l: &LieSuperalgebra) -> String {
    write_sca(l.table())
}

fn jordan(j: &JordanSuperalgebra) -> String {
    write_sca(j.table())
}

fn mat(j: &JordanSuperalgebra, entries: &[(usize, usize, i64)]) -> Vec<Rational> {
    let e: Vec<_> = entries.iter().map(|&(r, c, x)| (r - 1, c - 1, qi(x))).collect();
    matrix_element(j, &e).unwrap()
}

/// `(e1, e2, x, y)` inside JP(4) or JQ(4), from their 8x8 matrix entries.
fn m11_elements(j: &JordanSuperalgebra, jq: bool) -> [Vec<Rational>; 4] {
    let e1 = mat(j, &[(1, 1, 1), (2, 2, 1), (5, 5, 1), (6, 6, 1)]);
    let e2 = mat(j, &[(3, 3, 1), (4, 4, 1), (7, 7, 1), (8, 8, 1)]);
    let (x, y) = if jq {
        (mat(j, &[(1, 7, 1), (2, 8, 1), (5, 3, 1), (6, 4, 1)]), mat(j, &[(7, 1, 2), (8, 2, 2), (3, 5, 2), (4, 6, 2)]))
    } else {
        (mat(j, &[(1, 7, 1), (2, 8, 1), (3, 5, -1), (4, 6, -1)]), mat(j, &[(7, 1, 2), (8, 2, 2), (5, 3, 2), (6, 4, 2)]))
    };
    [e1, e2, x, y]
}

fn generated() -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    let (psl22, _) = construct_psl(1).unwrap();
    let (psl33, _) = construct_psl(2).unwrap();
    out.push(("sl2.sca", lie(&construct_sl(2, 0).unwrap())));
    out.push(("sl21.sca", lie(&construct_sl(2, 1).unwrap())));
    out.push(("sl33.sca", lie(&construct_sl(3, 3).unwrap())));
    out.push(("gl33.sca", lie(&construct_gl(3, 3).unwrap())));
    out.push(("psl22.sca", lie(&psl22)));
    out.push(("psl22.cartan", lines(&psl22.provenance().cartan.as_ref().unwrap().elements)));
    out.push(("psl33.sca", lie(&psl33)));
    out.push(("psl33.cartan", lines(&psl33.provenance().cartan.as_ref().unwrap().elements)));
    out.push(("sl33_natural.sca", lie(&construct_sl_natural(3, 3).unwrap())));
    for (name, kind) in [
        ("slA33_field.sca", AssocKind::Field),
        ("slA33_dual.sca", AssocKind::DualNumbers),
        ("slA33_grassmann1.sca", AssocKind::Grassmann(1)),
        ("slA33_matrix11.sca", AssocKind::MatrixSuper(1, 1)),
    ] {
        out.push((name, lie(&construct_sl_a(3, 3, &construct_assoc(&kind).unwrap()).unwrap())));
    }
    out.push(("m11.sca", jordan(&construct_jordan(&JordanKind::M11).unwrap())));
    out.push(("mplus2.sca", jordan(&construct_jordan(&JordanKind::Mplus(2)).unwrap())));
    for (prefix, kind, jq) in [("jp4", JordanKind::JP(4), false), ("jq4", JordanKind::JQ(4), true)] {
        let j = construct_jordan(&kind).unwrap();
        let names = ["e1", "e2", "x", "y"];
        for (n, v) in names.iter().zip(m11_elements(&j, jq)) {
            let file: &'static str = Box::leak(format!("{prefix}_{n}.vec").into_boxed_str());
            out.push((file, lines(&[v])));
        }
        let file: &'static str = Box::leak(format!("{prefix}.sca").into_boxed_str());
        out.push((file, jordan(&j)));
    }
    out
}

#[test]
fn fixtures_match_constructors() {
    let dir = common::fixtures();
    let bless = std::env::var_os("SUPERGRADE_BLESS").is_some();
    for (name, text) in generated() {
        let path = dir.join(name);
        if bless {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let committed = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(committed == text, "{name} is stale; rerun with SUPERGRADE_BLESS=1");
        if name.ends_with(".sca") {
            let t = parse_sca(&committed).unwrap();
            assert_eq!(write_sca(&t), committed, "{name} is not canonical");
            validate(t).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
