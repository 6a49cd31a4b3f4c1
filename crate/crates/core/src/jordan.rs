//! Jordan superalgebras: symmetrization, Peirce decompositions, the
//! Tits–Kantor–Koecher construction and its inverse, and `M_{1,1}^+`
//! certificates.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::linalg::{axpy, is_zero_vector, scale, sparse_axpy, sub, to_dense, to_sparse, zero_vector, SparseVec, Vector};
use crate::exact::poly::{diagonalizable_eigenvalues, SpectrumDefect};
use crate::exact::{q, rational_eigenvalues, Rational, RowReducer, Subspace};
use crate::roots::{three_grading, weight_decomposition, GradingStyle, ThreeGrading};
use crate::superalg::table::accumulate;
use crate::superalg::{
    validate_jordan, validate_lie, Algebra, AssocSuperalgebra, CartanBasis, CartanTag, CoverEmbedding,
    JordanSuperalgebra, Kind, LieSuperalgebra, Parity, Provenance, StructureTable, SuperSpace,
};

/// `X . Y = (XY + (-1)^{|X||Y|} YX) / 2` on the same graded space.
pub fn symmetrized(a: &AssocSuperalgebra) -> JordanSuperalgebra {
    let ta = a.table();
    let d = ta.dim();
    let half = q(1, 2);
    let mut t = StructureTable::new(ta.space().clone(), Kind::Jordan);
    for i in 0..d {
        for j in 0..d {
            let mut acc = zero_vector(d);
            accumulate(&mut acc, &half, ta.basis_product(i, j));
            let s = &half * &Parity::sign(ta.parity(i), ta.parity(j));
            accumulate(&mut acc, &s, ta.basis_product(j, i));
            t.set_product_dense(i, j, &acc).expect("symmetrized products are homogeneous");
        }
    }
    t.set_unit(Some(a.unit().to_vec())).expect("unit is even");
    // the symmetrization of an associative superalgebra is always Jordan
    JordanSuperalgebra::from_table_unchecked(t).with_provenance(a.provenance().clone())
}

/// `J = J_0 + J_1 + J_2` with `J_i = {v : e . v = (i/2) v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceDecomposition {
    pub idempotent: Vector,
    /// `parts[i] = J_i`.
    pub parts: [Subspace; 3],
}

impl PeirceDecomposition {
    pub fn dims(&self) -> [usize; 3] {
        [self.parts[0].dim(), self.parts[1].dim(), self.parts[2].dim()]
    }
}

pub fn peirce(j: &JordanSuperalgebra, e1: &[Rational]) -> Result<PeirceDecomposition, Error> {
    let d = j.dim();
    if e1.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: e1.len() });
    }
    if j.space().parity_of(e1) != Some(Parity::Even) {
        return Err(Error::NotHomogeneous);
    }
    if j.mul(e1, e1) != e1 {
        return Err(Error::NotIdempotent);
    }
    let m = j.table().left_mul_matrix(e1);
    let eigenvalues = match diagonalizable_eigenvalues(&m) {
        Ok(e) => e,
        Err(SpectrumDefect::Repeated(eigenvalue)) => return Err(Error::NotDiagonalizable { cartan_index: 0, eigenvalue }),
        Err(SpectrumDefect::NonSplit) => {
            rational_eigenvalues(&m)?;
            unreachable!("a non-split minimal polynomial has an irrational eigenvalue")
        }
    };
    let mut parts = [Subspace::zero(d), Subspace::zero(d), Subspace::zero(d)];
    for lambda in eigenvalues {
        let i = [Rational::zero(), q(1, 2), Rational::one()]
            .iter()
            .position(|x| *x == lambda)
            .ok_or_else(|| Error::UnexpectedEigenvalue(lambda.clone()))?;
        parts[i] = Subspace::span(d, &m.shift(&lambda).kernel());
    }
    Ok(PeirceDecomposition { idempotent: e1.to_vec(), parts })
}

/// Checks `J_2 . J_0 = 0` and `(J_2, J, J_0) = 0` for the associator
/// `(a, b, c) = (a.b).c - a.(b.c)`.
pub fn check_peirce_laws(j: &JordanSuperalgebra, p: &PeirceDecomposition) -> Result<(), Error> {
    for a in p.parts[2].basis() {
        for c in p.parts[0].basis() {
            if !is_zero_vector(&j.mul(a, c)) {
                return Err(Error::ClosureFailure("J_2 . J_0 != 0".into()));
            }
            for b in 0..j.dim() {
                let b = j.basis_vector(b);
                let assoc = sub(&j.mul(&j.mul(a, &b), c), &j.mul(a, &j.mul(&b, c)));
                if !is_zero_vector(&assoc) {
                    return Err(Error::ClosureFailure("(J_2, J, J_0) != 0".into()));
                }
            }
        }
    }
    Ok(())
}

/// `TKK(J) = J-bar + [J, J-bar] + J` on the basis `T(1) | T(0) | T(-1)`.
#[derive(Clone, Debug)]
pub struct TkkAlgebra {
    pub lie: LieSuperalgebra,
    pub parts: ThreeGrading,
    /// Basis of `T(0)` as flattened operator pairs: the matrix of the action
    /// on `T(1)` (row-major), then the action on `T(-1)`.
    pub inner: Vec<Vector>,
    pub jordan_dim: usize,
    pub e: Vector,
    pub f: Vector,
    pub h: Vector,
}

impl TkkAlgebra {
    /// Index of `a` (a basis index of `J`) in `T(1)`.
    pub fn plus_index(&self, a: usize) -> usize {
        a
    }

    /// Index of `a-bar` in `T(-1)`.
    pub fn minus_index(&self, a: usize) -> usize {
        self.jordan_dim + self.inner.len() + a
    }

    /// An element of `J` placed in `T(1)`.
    pub fn plus(&self, x: &[Rational]) -> Vector {
        let mut v = zero_vector(self.lie.dim());
        v[..self.jordan_dim].clone_from_slice(x);
        v
    }

    /// An element of `J` placed in `T(-1)`.
    pub fn minus(&self, x: &[Rational]) -> Vector {
        let mut v = zero_vector(self.lie.dim());
        let start = self.minus_index(0);
        v[start..start + self.jordan_dim].clone_from_slice(x);
        v
    }
}

/// Operator-pair arithmetic over `J`; pairs are flattened to `2 d^2`
/// coordinates, each block row-major.
struct Ops<'a> {
    j: &'a JordanSuperalgebra,
    d: usize,
}

impl Ops<'_> {
    fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.j.table().product_sparse(x, y)
    }

    fn basis(&self, i: usize) -> SparseVec {
        vec![(i, Rational::one())]
    }

    fn sign(&self, a: usize, b: usize) -> Rational {
        Parity::sign(self.j.parity(a), self.j.parity(b))
    }

    /// Flattened pair `D(a, b)`: on `T(1)`,
    /// `c -> 2((ab)c + a(bc) - (-1)^{|a||b|} b(ac))`; on `T(-1)`,
    /// `c -> 2(-(ab)c + a(bc) - (-1)^{|a||b|} b(ac))`.
    fn inner_derivation(&self, a: usize, b: usize) -> SparseVec {
        let d = self.d;
        let two = Rational::from_integer(2);
        let ab = self.mul(&self.basis(a), &self.basis(b));
        let s = -&self.sign(a, b);
        let mut out: SparseVec = Vec::new();
        for c in 0..d {
            let cv = self.basis(c);
            let t1 = self.mul(&ab, &cv);
            let t2 = self.mul(&self.basis(a), &self.mul(&self.basis(b), &cv));
            let t3 = self.mul(&self.basis(b), &self.mul(&self.basis(a), &cv));
            let rest = sparse_axpy(&t2, &s, &t3);
            let plus = sparse_axpy(&rest, &Rational::one(), &t1);
            let minus = sparse_axpy(&rest, &-Rational::one(), &t1);
            for (r, x) in plus {
                out.push((r * d + c, &two * &x));
            }
            for (r, x) in minus {
                out.push((d * d + r * d + c, &two * &x));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        out
    }

    fn coord_parity(&self, k: usize) -> Parity {
        let k = k % (self.d * self.d);
        self.j.parity(k / self.d) + self.j.parity(k % self.d)
    }

    fn pair_parity(&self, s: &SparseVec) -> Parity {
        s.first().map_or(Parity::Even, |(k, _)| self.coord_parity(*k))
    }

    /// Product of two flattened operator pairs, componentwise.
    fn compose(&self, s: &SparseVec, t: &SparseVec) -> SparseVec {
        let d = self.d;
        let dd = d * d;
        let mut out: SparseVec = Vec::new();
        // (ST)[r][c] = sum_k S[r][k] T[k][c]
        let mut t_rows: Vec<SparseVec> = vec![Vec::new(); 2 * d];
        for (k, x) in t {
            let block = k / dd;
            let (row, col) = ((k % dd) / d, k % d);
            t_rows[block * d + row].push((block * dd + row * d + col, x.clone()));
        }
        for (k, x) in s {
            let block = k / dd;
            let (r, mid) = ((k % dd) / d, k % d);
            for (kt, y) in &t_rows[block * d + mid] {
                let c = kt % d;
                out.push((block * dd + r * d + c, x * y));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        let mut merged: SparseVec = Vec::new();
        for (k, x) in out {
            match merged.last_mut() {
                Some((lk, lx)) if *lk == k => *lx += &x,
                _ => merged.push((k, x)),
            }
        }
        merged.retain(|(_, x)| !x.is_zero());
        merged
    }

    fn supercommutator(&self, s: &SparseVec, t: &SparseVec) -> SparseVec {
        let sign = -Parity::sign(self.pair_parity(s), self.pair_parity(t));
        sparse_axpy(&self.compose(s, t), &sign, &self.compose(t, s))
    }

    /// `S c` on the block `block` (0 for `T(1)`, 1 for `T(-1)`), for a basis
    /// vector `c` of `J`.
    fn apply(&self, s: &SparseVec, block: usize, c: usize) -> SparseVec {
        let d = self.d;
        let dd = d * d;
        s.iter()
            .filter(|(k, _)| k / dd == block && k % d == c)
            .map(|(k, x)| ((k % dd) / d, x.clone()))
            .collect()
    }
}

/// The Tits–Kantor–Koecher Lie superalgebra of a unital Jordan superalgebra.
pub fn tkk(j: &JordanSuperalgebra) -> Result<TkkAlgebra, Error> {
    let d = j.dim();
    let unit = j.table().unit().ok_or(Error::MissingUnit)?.to_vec();
    let ops = Ops { j, d };

    // T(0): span of the D(a, b), closed under the supercommutator
    let mut red = RowReducer::new(2 * d * d);
    let mut derivations = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let v = ops.inner_derivation(a, b);
            if !v.is_empty() {
                red.insert_sparse(&v);
            }
            derivations.push(v);
        }
    }
    loop {
        let basis = red.sparse_basis();
        let mut grew = false;
        for s in &basis {
            for t in &basis {
                if red.insert_sparse(&ops.supercommutator(s, t)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let inner_sub = red.into_subspace();
    let inner: Vec<SparseVec> = inner_sub.basis().iter().map(|v| to_sparse(v)).collect();
    let k = inner.len();
    let coords = |v: &SparseVec| -> Vector {
        inner_sub
            .coords(&to_dense(v, 2 * d * d))
            .expect("T(0) is closed by construction")
    };
    let inner_parity: Vec<Parity> = inner.iter().map(|s| ops.pair_parity(s)).collect();

    let n = 2 * d + k;
    let t1 = |a: usize| a;
    let t0 = |s: usize| d + s;
    let tm = |a: usize| d + k + a;
    let mut parities = Vec::with_capacity(n);
    parities.extend((0..d).map(|a| j.parity(a)));
    parities.extend(inner_parity.iter().copied());
    parities.extend((0..d).map(|a| j.parity(a)));
    let mut labels: Vec<Option<String>> = Vec::with_capacity(n);
    let jl = |a: usize| j.space().label(a).map(String::from).unwrap_or_else(|| format!("b{}", a + 1));
    labels.extend((0..d).map(|a| Some(jl(a))));
    labels.extend((0..k).map(|s| Some(format!("t[{}]", s + 1))));
    labels.extend((0..d).map(|a| Some(format!("bar({})", jl(a)))));
    let mut space = SuperSpace::new(parities);
    if !space.set_labels(labels) {
        space = SuperSpace::new(space.parities().to_vec());
    }
    let mut t = StructureTable::new(space, Kind::Lie);
    let set = |t: &mut StructureTable, i: usize, jx: usize, v: SparseVec| -> Result<(), Error> {
        if v.is_empty() {
            return Ok(());
        }
        t.set_product(i, jx, v)
    };
    let offset = |v: Vector, base: usize| -> SparseVec {
        to_sparse(&v).into_iter().map(|(i, x)| (base + i, x)).collect()
    };

    // [a, b-bar] = D(a, b)
    for a in 0..d {
        for b in 0..d {
            let dv = &derivations[a * d + b];
            if dv.is_empty() {
                continue;
            }
            let c = offset(coords(dv), d);
            let s = -Parity::sign(j.parity(a), j.parity(b));
            let neg: SparseVec = c.iter().map(|(i, x)| (*i, &s * x)).collect();
            set(&mut t, t1(a), tm(b), c)?;
            set(&mut t, tm(b), t1(a), neg)?;
        }
    }
    // [s, c] = A_s c and [s, c-bar] = B_s c
    for (si, s) in inner.iter().enumerate() {
        for c in 0..d {
            for (block, base, idx) in [(0, 0, t1(c)), (1, d + k, tm(c))] {
                let v: SparseVec = ops.apply(s, block, c).into_iter().map(|(r, x)| (base + r, x)).collect();
                let sign = -Parity::sign(inner_parity[si], j.parity(c));
                let neg: SparseVec = v.iter().map(|(i, x)| (*i, &sign * x)).collect();
                set(&mut t, t0(si), idx, v)?;
                set(&mut t, idx, t0(si), neg)?;
            }
        }
    }
    // [s, t] = supercommutator of operator pairs
    for (si, s) in inner.iter().enumerate() {
        for (ti, tt) in inner.iter().enumerate() {
            let v = ops.supercommutator(s, tt);
            if !v.is_empty() {
                set(&mut t, t0(si), t0(ti), offset(coords(&v), d))?;
            }
        }
    }
    let lie = validate_lie(t).map_err(|e| match e {
        Error::AxiomViolation { indices, .. } if indices.len() == 3 => {
            Error::JacobiFailure([indices[0], indices[1], indices[2]])
        }
        other => other,
    })?;
    let lie = lie.with_provenance(Provenance::named(format!("TKK({})", j.provenance().name)));

    let mut e = zero_vector(n);
    e[..d].clone_from_slice(&unit);
    let mut f = zero_vector(n);
    f[d + k..].clone_from_slice(&unit);
    let h = lie.bracket(&e, &f);
    let span = |r: core::ops::Range<usize>| {
        let vs: Vec<Vector> = r.map(|i| lie.basis_vector(i)).collect();
        Subspace::span(n, &vs)
    };
    let parts = ThreeGrading { minus: span(d + k..n), zero: span(d..d + k), plus: span(0..d) };
    for part in [&parts.plus, &parts.minus] {
        for x in part.basis() {
            for y in part.basis() {
                if !is_zero_vector(&lie.bracket(x, y)) {
                    return Err(Error::NotThreeGraded("[T(+-1), T(+-1)] != 0".into()));
                }
            }
        }
    }
    let inner = inner.iter().map(|s| to_dense(s, 2 * d * d)).collect();
    Ok(TkkAlgebra { lie, parts, inner, jordan_dim: d, e, f, h })
}

/// `J = L(1)` for the grading by `ad [e, f]`, with `x . y = [[x, f], y] / 2`
/// and unit `e`.
pub fn jordan_from_3grading(l: &LieSuperalgebra, e: &[Rational], f: &[Rational]) -> Result<JordanSuperalgebra, Error> {
    let dl = l.dim();
    for v in [e, f] {
        if v.len() != dl {
            return Err(Error::DimensionMismatch { expected: dl, got: v.len() });
        }
    }
    let h = l.bracket(e, f);
    let datum = weight_decomposition(l, &CartanBasis::new(vec![h], CartanTag::Custom))?;
    let grading = three_grading(l, &datum, &GradingStyle::Sl2 { h_index: 0 })?;
    if !grading.plus.contains(e) || !grading.minus.contains(f) {
        return Err(Error::NotThreeGraded("e must lie in L(1) and f in L(-1)".into()));
    }
    let basis = grading.plus.basis();
    let d = basis.len();
    let mut parities = Vec::with_capacity(d);
    for b in basis {
        parities.push(l.space().parity_of(b).ok_or(Error::NotHomogeneous)?);
    }
    let labels = basis
        .iter()
        .map(|b| match to_sparse(b).as_slice() {
            [(i, c)] if c.is_one() => l.space().label(*i).map(String::from),
            _ => None,
        })
        .collect();
    let mut space = SuperSpace::new(parities);
    space.set_labels(labels);
    let mut t = StructureTable::new(space, Kind::Jordan);
    let half = q(1, 2);
    let xf: Vec<Vector> = basis.iter().map(|x| l.bracket(x, f)).collect();
    for (a, xa) in xf.iter().enumerate() {
        for (b, y) in basis.iter().enumerate() {
            let p = scale(&l.bracket(xa, y), &half);
            let c = grading.plus.coords(&p).ok_or_else(|| Error::NotThreeGraded("[[x, f], y] leaves L(1)".into()))?;
            t.set_product_dense(a, b, &c)?;
        }
    }
    let u = grading.plus.coords(e).expect("e lies in L(1)");
    for i in 0..d {
        let p = t.product(&u, &crate::exact::linalg::unit_vector(d, i));
        if p != crate::exact::linalg::unit_vector(d, i) {
            return Err(Error::UnitFailure(i));
        }
    }
    t.set_unit(Some(u))?;
    Ok(validate_jordan(t)?.with_provenance(Provenance::named(format!("J({})", l.provenance().name))))
}

/// Results of checking the `M_{1,1}^+` multiplication table on four elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M11Certificate {
    pub e1: Vector,
    pub e2: Vector,
    pub x: Vector,
    pub y: Vector,
    /// `(relation, holds)` in a fixed order.
    pub relations: Vec<(&'static str, bool)>,
}

impl M11Certificate {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}

/// Checks `e1^2 = e1`, `e2^2 = e2`, `e1.e2 = 0`, `x.y = e1 - e2 = -y.x`,
/// `e_i.x = x/2`, `e_i.y = y/2`, `e1 + e2 = 1` and the parities.
pub fn certify_m11(
    j: &JordanSuperalgebra,
    e1: &[Rational],
    e2: &[Rational],
    x: &[Rational],
    y: &[Rational],
) -> Result<M11Certificate, Error> {
    let d = j.dim();
    for v in [e1, e2, x, y] {
        if v.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: v.len() });
        }
    }
    let half = q(1, 2);
    let diff = sub(e1, e2);
    let unit = j.table().unit().ok_or(Error::MissingUnit)?;
    let par = |v: &[Rational], p: Parity| j.space().parity_of(v) == Some(p) && !is_zero_vector(v);
    let mut sum = e1.to_vec();
    axpy(&mut sum, &Rational::one(), e2);
    let relations = vec![
        ("e1, e2 even; x, y odd", par(e1, Parity::Even) && par(e2, Parity::Even) && par(x, Parity::Odd) && par(y, Parity::Odd)),
        ("e1.e1 = e1", j.mul(e1, e1) == e1),
        ("e2.e2 = e2", j.mul(e2, e2) == e2),
        ("e1.e2 = 0", is_zero_vector(&j.mul(e1, e2))),
        ("x.y = e1 - e2", j.mul(x, y) == diff),
        ("y.x = e2 - e1", j.mul(y, x) == scale(&diff, &-Rational::one())),
        ("e1.x = x/2", j.mul(e1, x) == scale(x, &half)),
        ("e2.x = x/2", j.mul(e2, x) == scale(x, &half)),
        ("e1.y = y/2", j.mul(e1, y) == scale(y, &half)),
        ("e2.y = y/2", j.mul(e2, y) == scale(y, &half)),
        ("e1 + e2 = 1", sum == unit),
    ];
    Ok(M11Certificate { e1: e1.to_vec(), e2: e2.to_vec(), x: x.to_vec(), y: y.to_vec(), relations })
}

/// Embedding of `sl(2,2)` into `TKK(J)` generated by an `M_{1,1}^+`
/// certificate: `e1 -> e_12`, `e2 -> e_1'2'`, `x -> e_12'`, `y/2 -> e_1'2`,
/// and the `T(-1)` copies to the transposed units. The remaining four odd
/// units are brackets of these.
pub fn m11_cover(t: &TkkAlgebra, cert: &M11Certificate) -> CoverEmbedding {
    let l = &t.lie;
    let half = q(1, 2);
    let y = scale(&cert.y, &half);
    // indices: 0 = 1, 1 = 2, 2 = 1', 3 = 2'
    let mut images: Vec<Option<Vector>> = vec![None; 16];
    let mut put = |i: usize, j: usize, v: Vector| images[i * 4 + j] = Some(v);
    put(0, 1, t.plus(&cert.e1));
    put(2, 3, t.plus(&cert.e2));
    put(0, 3, t.plus(&cert.x));
    put(2, 1, t.plus(&y));
    put(1, 0, t.minus(&cert.e1));
    put(3, 2, t.minus(&cert.e2));
    put(1, 2, t.minus(&cert.x));
    put(3, 0, t.minus(&y));
    let get = |images: &Vec<Option<Vector>>, i: usize, j: usize| images[i * 4 + j].clone().expect("image set");
    // e_11' = [e_12, e_21'], e_1'1 = [e_1'2, e_21], e_22' = [e_21, e_12'], e_2'2 = [e_2'1, e_12]
    let e11b = l.bracket(&get(&images, 0, 1), &get(&images, 1, 2));
    let e1b1 = l.bracket(&get(&images, 2, 1), &get(&images, 1, 0));
    let e22b = l.bracket(&get(&images, 1, 0), &get(&images, 0, 3));
    let e2b2 = l.bracket(&get(&images, 3, 0), &get(&images, 0, 1));
    images[2] = Some(e11b);
    images[2 * 4] = Some(e1b1);
    images[4 + 3] = Some(e22b);
    images[3 * 4 + 1] = Some(e2b2);
    CoverEmbedding::from_parts(1, images)
}
