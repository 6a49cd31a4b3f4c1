//! Factories for the concrete algebras: `gl(m,n)`, `sl(m,n)`,
//! `psl(n+1,n+1)`, coefficient superalgebras, `sl_{m,n}(A)` and the Jordan
//! families `M_{n,n}^+`, `JP_n`, `JQ_n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::linalg::{to_sparse, unit_vector, zero_vector, Vector};
use crate::exact::{BasisCoords, Matrix, Rational, Subspace};
use crate::jordan::symmetrized;
use crate::superalg::{
    self, commutator_algebra, derived_subalgebra, matrix_units_assoc, quotient_central, subalgebra,
    tensor_lie_assoc, validate_assoc, validate_jordan, Algebra, AssocSuperalgebra, CartanBasis,
    CartanTag, CoverEmbedding, JordanSuperalgebra, Kind, LieSuperalgebra, MatrixRealization, Parity,
    Provenance, StructureTable, SuperSpace,
};

pub use crate::superalg::{index_label, unit_label};

/// Coefficient superalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssocKind {
    Field,
    /// `Q[t]/(t^2)`, `t` even.
    DualNumbers,
    /// Exterior algebra on `k` odd generators.
    Grassmann(usize),
    /// Full matrix superalgebra `M_{p,q}`.
    MatrixSuper(usize, usize),
}

/// Jordan superalgebra families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JordanKind {
    Mplus(usize),
    JP(usize),
    JQ(usize),
    M11,
}

/// Provenance for an algebra realized inside `gl(m,n) (x) A`: records `z`,
/// the diagonal Cartan bases and, for square shapes, the embedded copy of
/// `sl(m,m) (x) 1`.
pub fn matrix_provenance(name: String, r: MatrixRealization) -> Provenance {
    let s = r.size();
    let mut p = Provenance::named(name);
    let mut identity = zero_vector(r.ambient_dim());
    for i in 0..s {
        crate::exact::linalg::axpy(&mut identity, &Rational::one(), &r.unit_tensor(i, i));
    }
    p.central = r.element(&identity);
    let mut h = Vec::new();
    for k in 0..s.saturating_sub(1) {
        if k + 1 == r.m() {
            continue;
        }
        let mut v = r.unit_tensor(k, k);
        crate::exact::linalg::axpy(&mut v, &-Rational::one(), &r.unit_tensor(k + 1, k + 1));
        match r.element(&v) {
            Some(e) => h.push(e),
            None => {
                h.clear();
                break;
            }
        }
    }
    if !h.is_empty() || s <= 2 {
        if let Some(z) = p.central.as_ref().filter(|z| z.iter().any(|c| !c.is_zero())) {
            let mut hp = vec![z.clone()];
            hp.extend(h.iter().cloned());
            p.cartan_prime = Some(CartanBasis::new(hp, CartanTag::HPrime));
        }
        p.cartan = Some(CartanBasis::new(h, CartanTag::H));
    }
    if r.m() == r.n() && r.m() >= 2 {
        let mut images = Vec::with_capacity(s * s);
        let mut complete = true;
        for i in 0..s {
            for j in 0..s {
                if i == j {
                    images.push(None);
                    continue;
                }
                match r.matrix_unit(i, j) {
                    Some(e) => images.push(Some(e)),
                    None => complete = false,
                }
            }
        }
        if complete {
            p.cover = Some(CoverEmbedding::from_parts(r.m() - 1, images));
        }
    }
    p.realization = Some(r);
    p
}

fn identity_realization(m: usize, n: usize, coeff_unit: Vector) -> MatrixRealization {
    let d = (m + n) * (m + n) * coeff_unit.len();
    MatrixRealization::new(m, n, coeff_unit, (0..d).map(|i| unit_vector(d, i)).collect(), Vec::new())
        .expect("standard basis is independent")
}

/// `gl(m, n)` on matrix units with the supercommutator.
pub fn construct_gl(m: usize, n: usize) -> Result<LieSuperalgebra, Error> {
    if m + n == 0 {
        return Err(Error::BadParams("gl(m,n) needs m + n >= 1".into()));
    }
    let assoc = validate_assoc(matrix_units_assoc(m, n)).expect("matrix units are associative");
    let lie = commutator_algebra(&assoc);
    let r = identity_realization(m, n, vec![Rational::one()]);
    Ok(lie.with_provenance(matrix_provenance(format!("gl({m},{n})"), r)))
}

/// Coefficients of the supertrace functional on `gl(m, n)`.
fn supertrace_row(m: usize, n: usize) -> Vector {
    let s = m + n;
    let mut row = zero_vector(s * s);
    for i in 0..s {
        row[i * s + i] = if i < m { Rational::one() } else { -Rational::one() };
    }
    row
}

/// Label for a vector that is a signed sum of labelled basis vectors with
/// coefficients +-1: positive terms first, each group in index order.
fn combination_label(v: &[Rational], space: &SuperSpace) -> Option<String> {
    let terms = to_sparse(v);
    if terms.len() < 2 || terms.iter().any(|(_, c)| !(c.is_one() || (-c).is_one())) {
        return None;
    }
    let mut out = String::new();
    for positive in [true, false] {
        for (k, c) in &terms {
            if c.is_one() != positive {
                continue;
            }
            if !positive {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(space.label(*k)?);
        }
    }
    Some(out)
}

/// The supertrace-zero subalgebra `sl(m, n)`, on the canonical kernel basis of
/// the supertrace functional.
pub fn construct_sl(m: usize, n: usize) -> Result<LieSuperalgebra, Error> {
    if m + n < 2 {
        return Err(Error::BadParams("sl(m,n) needs m + n >= 2".into()));
    }
    let gl = construct_gl(m, n)?;
    let s = m + n;
    let str_row = Matrix::from_rows(s * s, &[supertrace_row(m, n)]);
    let sub = Subspace::span(s * s, &str_row.kernel());
    let mut sl = subalgebra(&gl, &sub)?;
    let labels = sub
        .basis()
        .iter()
        .enumerate()
        .map(|(i, v)| sl.space().label(i).map(String::from).or_else(|| combination_label(v, gl.space())))
        .collect();
    let mut table = sl.clone().into_table();
    table.space_mut().set_labels(labels);
    sl = LieSuperalgebra::from_table_unchecked(table);
    let r = MatrixRealization::new(m, n, vec![Rational::one()], sub.basis().to_vec(), Vec::new())
        .expect("canonical basis is independent");
    Ok(sl.with_provenance(matrix_provenance(format!("sl({m},{n})"), r)))
}

/// `psl(n+1, n+1) = sl(n+1, n+1) / <z>` with the projection from `sl`.
pub fn construct_psl(n: usize) -> Result<(LieSuperalgebra, Matrix), Error> {
    if n == 0 {
        return Err(Error::BadParams("psl(n+1,n+1) needs n >= 1".into()));
    }
    let sl = construct_sl(n + 1, n + 1)?;
    let z = sl.provenance().central.clone().expect("identity lies in sl(n,n)");
    let zsub = Subspace::span(sl.dim(), &[z]);
    let (psl, proj) = quotient_central(&sl, &zsub)?;
    let slr = sl.provenance().realization.as_ref().expect("sl carries its realization");
    let kept: Vec<Vector> = (0..sl.dim())
        .filter(|i| !zsub.pivots().contains(i))
        .map(|i| slr.basis()[i].clone())
        .collect();
    let s = 2 * (n + 1);
    let mut identity = zero_vector(s * s);
    for i in 0..s {
        identity[i * s + i] = Rational::one();
    }
    let r = MatrixRealization::new(n + 1, n + 1, vec![Rational::one()], kept, vec![identity])
        .expect("complement of the center is independent of it");
    let psl = psl.with_provenance(matrix_provenance(format!("psl({},{})", n + 1, n + 1), r));
    Ok((psl, proj))
}

fn single(k: usize) -> Vec<(usize, Rational)> {
    vec![(k, Rational::one())]
}

/// Coefficient superalgebras over Q.
pub fn construct_assoc(kind: &AssocKind) -> Result<AssocSuperalgebra, Error> {
    let (table, name) = match *kind {
        AssocKind::Field => {
            let mut space = SuperSpace::even(1);
            space.set_labels(vec![Some("1".into())]);
            let mut t = StructureTable::new(space, Kind::Assoc);
            t.set_product(0, 0, single(0))?;
            t.set_unit(Some(vec![Rational::one()]))?;
            (t, String::from("Q"))
        }
        AssocKind::DualNumbers => {
            let mut space = SuperSpace::even(2);
            space.set_labels(vec![Some("1".into()), Some("t".into())]);
            let mut t = StructureTable::new(space, Kind::Assoc);
            t.set_product(0, 0, single(0))?;
            t.set_product(0, 1, single(1))?;
            t.set_product(1, 0, single(1))?;
            t.set_unit(Some(unit_vector(2, 0)))?;
            (t, String::from("Q[t]/(t^2)"))
        }
        AssocKind::Grassmann(k) => {
            if k == 0 || k > 8 {
                return Err(Error::BadParams("grassmann(k) needs 1 <= k <= 8".into()));
            }
            (grassmann(k), format!("Lambda({k})"))
        }
        AssocKind::MatrixSuper(p, q) => {
            if p + q == 0 {
                return Err(Error::BadParams("matrix_super(p,q) needs p + q >= 1".into()));
            }
            (matrix_units_assoc(p, q), format!("M({p},{q})"))
        }
    };
    Ok(validate_assoc(table)?.with_provenance(Provenance::named(name)))
}

/// Basis: monomials `xi_S` indexed by bitmask `S` in increasing order.
fn grassmann(k: usize) -> StructureTable {
    let d = 1usize << k;
    let parities = (0..d)
        .map(|s: usize| if s.count_ones() % 2 == 1 { Parity::Odd } else { Parity::Even })
        .collect();
    let labels = (0..d)
        .map(|s: usize| {
            if s == 0 {
                return Some(String::from("1"));
            }
            let mut l = String::new();
            for g in 0..k {
                if s & (1 << g) != 0 {
                    l.push_str(&format!("xi{}", g + 1));
                }
            }
            Some(l)
        })
        .collect();
    let mut space = SuperSpace::new(parities);
    space.set_labels(labels);
    let mut t = StructureTable::new(space, Kind::Assoc);
    for a in 0..d {
        for b in 0..d {
            if a & b != 0 {
                continue;
            }
            // sign of reordering xi_a xi_b into increasing order
            let mut inversions = 0;
            for ga in 0..k {
                if a & (1 << ga) != 0 {
                    inversions += (b & ((1 << ga) - 1)).count_ones();
                }
            }
            let c = if inversions % 2 == 0 { Rational::one() } else { -Rational::one() };
            t.set_product(a, b, vec![(a | b, c)]).expect("monomial products are homogeneous");
        }
    }
    t.set_unit(Some(unit_vector(d, 0))).expect("1 is even");
    t
}

/// `sl_{m,n}(A) = [gl(m,n) (x) A, gl(m,n) (x) A]` as a standalone algebra.
pub fn construct_sl_a(m: usize, n: usize, a: &AssocSuperalgebra) -> Result<LieSuperalgebra, Error> {
    if m == 0 || n == 0 {
        return Err(Error::BadParams("sl_A(m,n) needs m, n >= 1".into()));
    }
    let gl = construct_gl(m, n)?;
    let big = tensor_lie_assoc(&gl, a)?;
    let der = derived_subalgebra(&big);
    let sla = subalgebra(&big, &der)?;
    let r = MatrixRealization::new(m, n, a.unit().to_vec(), der.basis().to_vec(), Vec::new())
        .expect("canonical basis is independent");
    let name = format!("sl_({m},{n})({})", a.provenance().name);
    Ok(sla.with_provenance(matrix_provenance(name, r)))
}

/// Table of the subalgebra with the given (independent) basis, which need not
/// be in echelon form.
fn restrict_to_basis(
    t: &StructureTable,
    basis: Vec<Vector>,
    labels: Vec<Option<String>>,
) -> Result<StructureTable, Error> {
    let d = t.dim();
    let coords = BasisCoords::new(d, basis.clone()).ok_or_else(|| Error::BadParams("dependent basis".into()))?;
    let mut parities = Vec::with_capacity(basis.len());
    for v in &basis {
        parities.push(t.space().parity_of(v).ok_or(Error::NotHomogeneous)?);
    }
    let mut space = SuperSpace::new(parities);
    space.set_labels(labels);
    let mut out = StructureTable::new(space, t.kind());
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let p = t.product(x, y);
            let c = coords.coords(&p).ok_or_else(|| {
                Error::ClosureFailure(format!("product of basis vectors {i} and {j} leaves the span"))
            })?;
            out.set_product_dense(i, j, &c)?;
        }
    }
    if let Some(u) = t.unit() {
        let c = coords.coords(u).ok_or(Error::MissingUnit)?;
        out.set_unit(Some(c))?;
    }
    Ok(out)
}

/// Jordan superalgebras realized inside `M_{n,n}^+`.
pub fn construct_jordan(kind: &JordanKind) -> Result<JordanSuperalgebra, Error> {
    match *kind {
        JordanKind::Mplus(n) => {
            if n == 0 {
                return Err(Error::BadParams("Mplus(n) needs n >= 1".into()));
            }
            let j = symmetrized(&construct_assoc(&AssocKind::MatrixSuper(n, n))?);
            let r = identity_realization(n, n, vec![Rational::one()]);
            Ok(j.with_provenance(jordan_provenance(format!("M({n},{n})+"), r)))
        }
        JordanKind::M11 => {
            let mp = construct_jordan(&JordanKind::Mplus(1))?;
            // e1 = E11, e2 = E22, x = E12, y = 2 E21 (indices 0 = 1, 1 = 1')
            let two = Rational::from_integer(2);
            let mut y = zero_vector(4);
            y[2] = two;
            let basis = vec![unit_vector(4, 0), unit_vector(4, 3), unit_vector(4, 1), y];
            let labels = ["e1", "e2", "x", "y"].iter().map(|s| Some(String::from(*s))).collect();
            let t = restrict_to_basis(mp.table(), basis.clone(), labels)?;
            let r = MatrixRealization::new(1, 1, vec![Rational::one()], basis, Vec::new()).expect("independent");
            Ok(validate_jordan(t)?.with_provenance(jordan_provenance("M(1,1)+".into(), r)))
        }
        JordanKind::JP(n) | JordanKind::JQ(n) => {
            if n == 0 {
                return Err(Error::BadParams("JP(n)/JQ(n) need n >= 1".into()));
            }
            let mp = construct_jordan(&JordanKind::Mplus(n))?;
            let s = 2 * n;
            let e = |r: usize, c: usize| unit_vector(s * s, r * s + c);
            let add = |a: Vector, b: Vector, sign: i64| -> Vector {
                a.iter().zip(&b).map(|(x, y)| x + &(y * &Rational::from_integer(sign))).collect()
            };
            let mut basis = Vec::new();
            let mut labels = Vec::new();
            let is_p = matches!(kind, JordanKind::JP(_));
            for r in 0..n {
                for c in 0..n {
                    // a at (r, c); the odd-odd block carries a^t (JP) or a (JQ)
                    let other = if is_p { e(n + c, n + r) } else { e(n + r, n + c) };
                    basis.push(add(e(r, c), other, 1));
                    labels.push(Some(format!("a[{},{}]", r + 1, c + 1)));
                }
            }
            if is_p {
                for r in 0..n {
                    for c in r + 1..n {
                        basis.push(add(e(r, n + c), e(c, n + r), -1));
                        labels.push(Some(format!("b[{},{}]", r + 1, c + 1)));
                    }
                }
                for r in 0..n {
                    for c in r..n {
                        let v = if r == c { e(n + r, c) } else { add(e(n + r, c), e(n + c, r), 1) };
                        basis.push(v);
                        labels.push(Some(format!("c[{},{}]", r + 1, c + 1)));
                    }
                }
            } else {
                for r in 0..n {
                    for c in 0..n {
                        basis.push(add(e(r, n + c), e(n + r, c), 1));
                        labels.push(Some(format!("b[{},{}]", r + 1, c + 1)));
                    }
                }
            }
            let t = restrict_to_basis(mp.table(), basis.clone(), labels)?;
            let name = if is_p { format!("JP({n})") } else { format!("JQ({n})") };
            let r = MatrixRealization::new(n, n, vec![Rational::one()], basis, Vec::new()).expect("independent");
            // a subalgebra of a special Jordan superalgebra is Jordan; closure was checked above
            Ok(JordanSuperalgebra::from_table_unchecked(t).with_provenance(jordan_provenance(name, r)))
        }
    }
}

/// `sl(m, n)` extended by its natural module `V = F^{m|n}` as an abelian
/// ideal: `[X, v] = Xv`, `[v, w] = 0`. The identity of `sl(n, n)` acts
/// nontrivially on `V`, which makes this a test case for `z`-triviality.
pub fn construct_sl_natural(m: usize, n: usize) -> Result<LieSuperalgebra, Error> {
    let sl = construct_sl(m, n)?;
    let r = sl.provenance().realization.clone().expect("sl carries its realization");
    let (ds, s) = (sl.dim(), m + n);
    let d = ds + s;
    let mut parities = sl.space().parities().to_vec();
    let mut labels: Vec<Option<String>> = (0..ds).map(|i| sl.space().label(i).map(String::from)).collect();
    for i in 0..s {
        parities.push(if i < m { Parity::Even } else { Parity::Odd });
        labels.push(Some(format!("v[{}]", index_label(i, m))));
    }
    let mut space = SuperSpace::new(parities);
    space.set_labels(labels);
    let mut t = StructureTable::new(space, Kind::Lie);
    for (i, j, k, c) in sl.table().entries() {
        t.add_to_product(i, j, k, c)?;
    }
    for (x, amb) in r.basis().iter().enumerate() {
        for (pos, c) in amb.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (row, col) = (pos / s, pos % s);
            // X v_col contributes c v_row
            let v = ds + col;
            t.add_to_product(x, v, ds + row, c)?;
            let sign = -Parity::sign(t.parity(x), t.parity(v));
            t.add_to_product(v, x, ds + row, &(&sign * c))?;
        }
    }
    let l = superalg::validate_lie(t)?;
    let mut p = Provenance::named(format!("sl({m},{n}) + F^({m}|{n})"));
    if let Some(cover) = sl.provenance().cover.as_ref() {
        let pad = |v: &Vector| {
            let mut w = v.clone();
            w.resize(d, Rational::zero());
            w
        };
        p.cover = Some(CoverEmbedding::from_fn(cover.n(), |i, j| pad(cover.image(i, j))));
    }
    Ok(l.with_provenance(p))
}

fn jordan_provenance(name: String, r: MatrixRealization) -> Provenance {
    let mut p = Provenance::named(name);
    p.realization = Some(r);
    p
}

/// Supertrace of an element of an algebra realized by matrices without
/// coefficients (`gl`, `sl`, and `psl`, where it is well defined).
pub fn supertrace(l: &LieSuperalgebra, x: &[Rational]) -> Result<Rational, Error> {
    let r = l
        .provenance()
        .realization
        .as_ref()
        .filter(|r| r.coeff_dim() == 1)
        .ok_or(Error::WrongAlgebra { expected: "a matrix Lie superalgebra" })?;
    if x.len() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), got: x.len() });
    }
    let row = supertrace_row(r.m(), r.n());
    let dot = |v: &[Rational]| -> Rational { v.iter().zip(&row).map(|(a, b)| a * b).sum() };
    if r.modulo().iter().any(|v| !dot(v).is_zero()) {
        return Err(Error::WrongAlgebra { expected: "a quotient on which the supertrace is defined" });
    }
    Ok(dot(&r.ambient(x)))
}

/// Algebra coordinates of a matrix given as `(row, col, coefficient)` triples
/// (0-based, unbarred indices first), tensored with the coefficient unit.
pub fn matrix_element(l: &impl Algebra, entries: &[(usize, usize, Rational)]) -> Option<Vector> {
    let r = l.provenance().realization.as_ref()?;
    let mut v = zero_vector(r.ambient_dim());
    for (i, j, c) in entries {
        crate::exact::linalg::axpy(&mut v, c, &r.unit_tensor(*i, *j));
    }
    r.element(&v)
}

#[cfg(test)]
mod tests;
