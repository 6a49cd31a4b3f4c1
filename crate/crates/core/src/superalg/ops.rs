use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::table::accumulate;
use super::{
    validate_assoc, Algebra, AssocSuperalgebra, Kind, LieSuperalgebra, MatrixRealization, Parity,
    Provenance, StructureTable, SuperSpace,
};
use crate::error::Error;
use crate::exact::linalg::{span_closure, unit_vector, zero_vector, SparseVec, Vector};
use crate::exact::{Matrix, Rational, RowReducer, Subspace};

/// Checked bracket of two elements.
pub fn bracket(l: &LieSuperalgebra, x: &[Rational], y: &[Rational]) -> Result<Vector, Error> {
    for v in [x, y] {
        if v.len() != l.dim() {
            return Err(Error::DimensionMismatch { expected: l.dim(), got: v.len() });
        }
    }
    Ok(l.bracket(x, y))
}

/// Matrix of `ad x : y -> [x, y]`.
pub fn ad_matrix(l: &LieSuperalgebra, x: &[Rational]) -> Matrix {
    l.table().left_mul_matrix(x)
}

/// `{x : [x, b] = 0 for every basis vector b}`.
pub fn center(l: &LieSuperalgebra) -> Subspace {
    let t = l.table();
    let d = t.dim();
    // one linear condition on the coordinates of x per (j, k)
    let mut red = RowReducer::new(d);
    for j in 0..d {
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for i in 0..d {
            for (k, c) in t.basis_product(i, j) {
                rows.entry(*k).or_default().push((i, c.clone()));
            }
        }
        for row in rows.values() {
            red.insert_sparse(row);
            if red.rank() == d {
                return Subspace::zero(d);
            }
        }
    }
    Subspace::span(d, &red.kernel())
}

/// `span{[b_i, b_j]}`.
pub fn derived_subalgebra(l: &LieSuperalgebra) -> Subspace {
    let t = l.table();
    let d = t.dim();
    let mut red = RowReducer::new(d);
    for i in 0..d {
        for j in i..d {
            let p = t.basis_product(i, j);
            if !p.is_empty() {
                red.insert_sparse(p);
            }
        }
    }
    red.into_subspace()
}

pub fn is_perfect(l: &LieSuperalgebra) -> bool {
    derived_subalgebra(l).dim() == l.dim()
}

/// The subalgebra spanned by a closed graded subspace, as a standalone algebra
/// on the subspace's canonical basis.
pub fn subalgebra(l: &LieSuperalgebra, sub: &Subspace) -> Result<LieSuperalgebra, Error> {
    let table = l.table().restrict(sub)?;
    Ok(LieSuperalgebra { table, provenance: Provenance::named(format!("subalgebra of {}", l.provenance().name)) })
}

/// Smallest subalgebra containing `gens`.
pub fn subalgebra_from_generators(l: &LieSuperalgebra, gens: &[Vector]) -> Subspace {
    span_closure(l.dim(), gens, |x, y| l.bracket(x, y))
}

/// Quotient by a central graded subspace. Returns the quotient and the
/// projection from old to new coordinates.
pub fn quotient_central(l: &LieSuperalgebra, z: &Subspace) -> Result<(LieSuperalgebra, Matrix), Error> {
    let d = l.dim();
    for (index, v) in z.basis().iter().enumerate() {
        for j in 0..d {
            if l.bracket(v, &unit_vector(d, j)).iter().any(|c| !c.is_zero()) {
                return Err(Error::NotCentral { index });
            }
        }
    }
    let (table, proj) = l.table().quotient(z)?;
    let name = format!("{} / center", l.provenance().name);
    Ok((LieSuperalgebra { table, provenance: Provenance::named(name) }, proj))
}

/// Label of matrix index `i` in `gl(m, n)`: `1..m` then `1'..n'`.
pub fn index_label(i: usize, m: usize) -> String {
    if i < m {
        format!("{}", i + 1)
    } else {
        format!("{}'", i - m + 1)
    }
}

/// Label of the matrix unit `e_ij`.
pub fn unit_label(i: usize, j: usize, m: usize) -> String {
    format!("e[{},{}]", index_label(i, m), index_label(j, m))
}

/// The matrix superalgebra `M_{m,n}` on matrix units `e_ij`, ordered
/// lexicographically with unbarred indices first.
pub fn matrix_units_assoc(m: usize, n: usize) -> StructureTable {
    let s = m + n;
    let par = |i: usize| if i < m { Parity::Even } else { Parity::Odd };
    let mut parities = Vec::with_capacity(s * s);
    let mut labels = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            parities.push(par(i) + par(j));
            labels.push(Some(unit_label(i, j, m)));
        }
    }
    let mut space = SuperSpace::new(parities);
    space.set_labels(labels);
    let mut t = StructureTable::new(space, Kind::Assoc);
    for i in 0..s {
        for j in 0..s {
            for l in 0..s {
                t.set_product(i * s + j, j * s + l, alloc::vec![(i * s + l, Rational::one())])
                    .expect("matrix unit products are homogeneous");
            }
        }
    }
    let mut unit = zero_vector(s * s);
    for i in 0..s {
        unit[i * s + i] = Rational::one();
    }
    t.set_unit(Some(unit)).expect("identity is even");
    t
}

/// Graded tensor product with `(a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'`.
pub fn tensor_assoc(a: &AssocSuperalgebra, b: &AssocSuperalgebra) -> AssocSuperalgebra {
    let ta = a.table();
    let tb = b.table();
    let (da, db) = (ta.dim(), tb.dim());
    let mut parities = Vec::with_capacity(da * db);
    let mut labels = Vec::with_capacity(da * db);
    for i in 0..da {
        for s in 0..db {
            parities.push(ta.parity(i) + tb.parity(s));
            labels.push(match (ta.space().label(i), tb.space().label(s)) {
                (Some(x), Some(y)) => Some(format!("{x}|{y}")),
                _ => None,
            });
        }
    }
    let mut space = SuperSpace::new(parities);
    space.set_labels(labels);
    let mut t = StructureTable::new(space, Kind::Assoc);
    for i in 0..da {
        for s in 0..db {
            for j in 0..da {
                let aa = ta.basis_product(i, j);
                if aa.is_empty() {
                    continue;
                }
                let sgn = Parity::sign(tb.parity(s), ta.parity(j));
                for u in 0..db {
                    let bb = tb.basis_product(s, u);
                    if bb.is_empty() {
                        continue;
                    }
                    let mut out: SparseVec = Vec::new();
                    for (k, c) in aa {
                        for (v, e) in bb {
                            out.push((k * db + v, &(&sgn * c) * e));
                        }
                    }
                    out.sort_by_key(|(k, _)| *k);
                    t.set_product(i * db + s, j * db + u, out).expect("tensor products are homogeneous");
                }
            }
        }
    }
    let ua = a.unit();
    let ub = b.unit();
    let mut unit = zero_vector(da * db);
    for (i, x) in ua.iter().enumerate() {
        for (s, y) in ub.iter().enumerate() {
            unit[i * db + s] = x * y;
        }
    }
    t.set_unit(Some(unit)).expect("unit of a tensor product is even");
    let out = validate_assoc(t).expect("graded tensor product of associative superalgebras is associative");
    out.with_provenance(Provenance::named(format!("{} (x) {}", a.provenance().name, b.provenance().name)))
}

/// The Lie superalgebra with the supercommutator `[x, y] = xy - (-1)^{|x||y|} yx`.
pub fn commutator_algebra(a: &AssocSuperalgebra) -> LieSuperalgebra {
    let ta = a.table();
    let d = ta.dim();
    let mut t = StructureTable::new(ta.space().clone(), Kind::Lie);
    for i in 0..d {
        for j in 0..d {
            let mut acc = zero_vector(d);
            accumulate(&mut acc, &Rational::one(), ta.basis_product(i, j));
            let s = -Parity::sign(ta.parity(i), ta.parity(j));
            accumulate(&mut acc, &s, ta.basis_product(j, i));
            t.set_product_dense(i, j, &acc).expect("supercommutators are homogeneous");
        }
    }
    // The supercommutator of an associative superalgebra always satisfies the
    // axioms, so no re-validation pass is needed.
    LieSuperalgebra { table: t, provenance: a.provenance().clone() }
}

/// `gl(m, n) (x) A` with the supercommutator of `M_{m,n} (x) A`.
///
/// `g0` must be a `gl(m, n)` built on matrix units.
pub fn tensor_lie_assoc(g0: &LieSuperalgebra, a: &AssocSuperalgebra) -> Result<LieSuperalgebra, Error> {
    let r = g0
        .provenance()
        .realization
        .as_ref()
        .filter(|r| r.coeff_dim() == 1 && r.modulo().is_empty() && r.basis().len() == r.ambient_dim())
        .ok_or(Error::WrongAlgebra { expected: "gl(m,n) on matrix units" })?;
    let (m, n) = (r.m(), r.n());
    let mats = validate_assoc(matrix_units_assoc(m, n)).expect("matrix units form an associative superalgebra");
    let prod = tensor_assoc(&mats, a);
    let lie = commutator_algebra(&prod);
    let d = lie.dim();
    let realization =
        MatrixRealization::new(m, n, a.unit().to_vec(), (0..d).map(|i| unit_vector(d, i)).collect(), Vec::new())
            .expect("standard basis is independent");
    let name = format!("gl({m},{n}) (x) {}", a.provenance().name);
    Ok(lie.with_provenance(crate::constructors::matrix_provenance(name, realization)))
}
