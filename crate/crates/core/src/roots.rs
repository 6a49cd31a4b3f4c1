//! Weight-space decompositions, `A(n,n)` root patterns, root-graded
//! verification and 3-gradings.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::linalg::{is_zero_vector, zero_vector, Vector};
use crate::exact::poly::{diagonalizable_eigenvalues, SpectrumDefect};
use crate::exact::{rational_eigenvalues, Matrix, Rational, RowReducer, Subspace};
use crate::superalg::{
    center, is_perfect, subalgebra, Algebra, CartanBasis, CartanTag, CoverEmbedding, LieSuperalgebra, Parity,
    SuperSpace,
};

/// Values `alpha(h_i)` on a Cartan basis.
pub type Weight = Vec<Rational>;

/// A simultaneous eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub weight: Weight,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// Canonical (RREF) basis; every vector is homogeneous.
    pub basis: Vec<Vector>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub cartan: CartanBasis,
    /// Nonzero weights in lexicographic order.
    pub components: Vec<Component>,
    pub zero_component: Component,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// The component of weight `w` (including the zero weight), if any.
    pub fn find(&self, w: &[Rational]) -> Option<&Component> {
        if w.iter().all(Rational::is_zero) {
            return Some(&self.zero_component);
        }
        self.components.binary_search_by(|c| c.weight.as_slice().cmp(w)).ok().map(|i| &self.components[i])
    }

    /// Zero component first, then the roots.
    pub fn all_components(&self) -> impl Iterator<Item = &Component> {
        core::iter::once(&self.zero_component).chain(self.components.iter())
    }
}

fn parity_split(space: &SuperSpace) -> [(Parity, Subspace); 2] {
    let d = space.dim();
    let pick = |p: Parity| {
        let basis: Vec<Vector> = (0..d)
            .filter(|&i| space.parity(i) == p)
            .map(|i| crate::exact::linalg::unit_vector(d, i))
            .collect();
        Subspace::span(d, &basis)
    };
    [(Parity::Even, pick(Parity::Even)), (Parity::Odd, pick(Parity::Odd))]
}

fn check_cartan(l: &LieSuperalgebra, cartan: &CartanBasis) -> Result<(), Error> {
    for (i, h) in cartan.elements.iter().enumerate() {
        if h.len() != l.dim() {
            return Err(Error::DimensionMismatch { expected: l.dim(), got: h.len() });
        }
        if l.space().parity_of(h) != Some(Parity::Even) {
            return Err(Error::NotHomogeneous);
        }
        for (j, k) in cartan.elements.iter().enumerate().skip(i + 1) {
            // lifts into a central extension may bracket to a central element,
            // which still leaves ad h and ad k commuting
            let c = l.bracket(h, k);
            if !is_zero_vector(&c) && (0..l.dim()).any(|b| !is_zero_vector(&l.bracket(&c, &l.basis_vector(b)))) {
                return Err(Error::CartanNotCommuting(i, j));
            }
        }
    }
    Ok(())
}

/// Simultaneous rational eigenspace decomposition of `ad h_i` over a Cartan
/// basis.
pub fn weight_decomposition(l: &LieSuperalgebra, cartan: &CartanBasis) -> Result<RootDatum, Error> {
    check_cartan(l, cartan)?;
    let d = l.dim();
    // (weight so far, parity, invariant subspace)
    let mut parts: Vec<(Weight, Parity, Subspace)> = parity_split(l.space())
        .into_iter()
        .filter(|(_, s)| !s.is_zero())
        .map(|(p, s)| (Vec::new(), p, s))
        .collect();
    for (ci, h) in cartan.elements.iter().enumerate() {
        let mut next = Vec::new();
        for (w, p, sub) in parts {
            let images: Vec<Vector> = sub
                .basis()
                .iter()
                .map(|b| sub.coords(&l.bracket(h, b)).expect("Cartan elements preserve weight spaces"))
                .collect();
            let restricted = Matrix::from_columns(sub.dim(), &images);
            let eigenvalues = match diagonalizable_eigenvalues(&restricted) {
                Ok(e) => e,
                Err(SpectrumDefect::Repeated(eigenvalue)) => {
                    return Err(Error::NotDiagonalizable { cartan_index: ci, eigenvalue })
                }
                Err(SpectrumDefect::NonSplit) => {
                    rational_eigenvalues(&restricted)?;
                    unreachable!("a non-split minimal polynomial has an irrational eigenvalue")
                }
            };
            for lambda in eigenvalues {
                let kernel = restricted.shift(&lambda).kernel();
                let vectors: Vec<Vector> = kernel.iter().map(|c| sub.combine(c)).collect();
                let mut w2 = w.clone();
                w2.push(lambda);
                next.push((w2, p, Subspace::span(d, &vectors)));
            }
        }
        parts = next;
    }
    let mut grouped: BTreeMap<Weight, (usize, usize, Vec<Vector>)> = BTreeMap::new();
    for (w, p, sub) in parts {
        let entry = grouped.entry(w).or_default();
        match p {
            Parity::Even => entry.0 += sub.dim(),
            Parity::Odd => entry.1 += sub.dim(),
        }
        entry.2.extend(sub.basis().iter().cloned());
    }
    let rank = cartan.rank();
    let mut zero_component = Component { weight: vec![Rational::zero(); rank], even_dim: 0, odd_dim: 0, basis: Vec::new() };
    let mut components = Vec::new();
    for (weight, (even_dim, odd_dim, vectors)) in grouped {
        let basis = Subspace::span(d, &vectors).basis().to_vec();
        let c = Component { weight, even_dim, odd_dim, basis };
        if c.weight.iter().all(Rational::is_zero) {
            zero_component = c;
        } else {
            components.push(c);
        }
    }
    Ok(RootDatum { cartan: cartan.clone(), components, zero_component })
}

/// Type of the root `eps_i - eps_j`: `1` for unbarred `i` and barred `j`,
/// `-1` for barred `i` and unbarred `j`, `0` otherwise.
fn root_height(n: usize, i: usize, j: usize) -> i8 {
    match (i > n, j > n) {
        (false, true) => 1,
        (true, false) => -1,
        _ => 0,
    }
}

/// Weight of `e_ij` against the canonical Cartan basis of `psl(n+1, n+1)`:
/// `e_kk - e_{k+1,k+1}` for unbarred `k`, then the barred analogues.
fn unit_weight(n: usize, i: usize, j: usize) -> Weight {
    let diag = |a: usize, k: usize| -> i64 {
        // coefficient of e_aa in the k-th Cartan element
        let block = k / n;
        let first = block * (n + 1) + k % n;
        if a == first {
            1
        } else if a == first + 1 {
            -1
        } else {
            0
        }
    };
    (0..2 * n).map(|k| Rational::from_integer(diag(i, k) - diag(j, k))).collect()
}

/// A root of `A(n,n)` with the dimensions of its root space in
/// `psl(n+1, n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedRoot {
    pub weight: Weight,
    pub even_dim: usize,
    pub odd_dim: usize,
}

/// The roots `eps_i - eps_j` (`i != j`) as weights on the canonical diagonal
/// Cartan basis of `psl(n+1, n+1)`, sorted, with multiplicities.
pub fn expected_ann_roots(n: usize) -> Result<Vec<ExpectedRoot>, Error> {
    if n == 0 {
        return Err(Error::BadParams("A(n,n) needs n >= 1".into()));
    }
    let s = 2 * (n + 1);
    let mut map: BTreeMap<Weight, (usize, usize)> = BTreeMap::new();
    for i in 0..s {
        for j in 0..s {
            if i == j {
                continue;
            }
            let e = map.entry(unit_weight(n, i, j)).or_default();
            if (i > n) == (j > n) {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
    }
    Ok(map.into_iter().map(|(weight, (even_dim, odd_dim))| ExpectedRoot { weight, even_dim, odd_dim }).collect())
}

/// Bracket of two matrix units of `gl(n+1, n+1)` (`size` indices, barred
/// indices `> n`), as `(row, col, coefficient)` terms.
fn unit_bracket(n: usize, (i, j): (usize, usize), (k, l): (usize, usize)) -> Vec<(usize, usize, Rational)> {
    let par = |a: usize| (a > n) as u8;
    let pa = (par(i) + par(j)) % 2;
    let pb = (par(k) + par(l)) % 2;
    let mut out = Vec::new();
    if j == k {
        out.push((i, l, Rational::one()));
    }
    if l == i {
        let c = if pa * pb == 1 { Rational::one() } else { -Rational::one() };
        out.push((k, j, c));
    }
    out
}

type GlElement = BTreeMap<(usize, usize), Rational>;

fn gl_bracket(n: usize, a: &GlElement, b: &GlElement) -> GlElement {
    let mut out = GlElement::new();
    for (x, ca) in a {
        for (y, cb) in b {
            for (r, c, v) in unit_bracket(n, *x, *y) {
                let e = out.entry((r, c)).or_insert_with(Rational::zero);
                *e += &(ca * cb) * &v;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Image of an element of `gl` supported on off-diagonal units.
fn image_of(l: &LieSuperalgebra, cover: &CoverEmbedding, x: &GlElement) -> Option<Vector> {
    let mut out = zero_vector(l.dim());
    for ((i, j), c) in x {
        if i == j {
            return None;
        }
        crate::exact::linalg::axpy(&mut out, c, cover.image(*i, *j));
    }
    Some(out)
}

fn unit(i: usize, j: usize) -> GlElement {
    let mut m = GlElement::new();
    m.insert((i, j), Rational::one());
    m
}

/// Checks that the images of the off-diagonal matrix units respect every
/// bracket relation of `sl(n+1, n+1)` that can be expressed on them.
pub fn check_homomorphism(l: &LieSuperalgebra, cover: &CoverEmbedding) -> Result<(), Error> {
    let n = cover.n();
    let s = cover.size();
    for i in 0..s {
        for j in 0..s {
            if i != j && cover.image(i, j).len() != l.dim() {
                return Err(Error::DimensionMismatch { expected: l.dim(), got: cover.image(i, j).len() });
            }
            if i != j && l.space().parity_of(cover.image(i, j)) != Some(Parity::from_bit(((i > n) ^ (j > n)) as u8).unwrap()) {
                return Err(Error::NotHomomorphism(format!("image of e_{{{i},{j}}} has the wrong parity")));
            }
        }
    }
    let off: Vec<(usize, usize)> = (0..s).flat_map(|i| (0..s).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    for &a in &off {
        for &b in &off {
            let want = gl_bracket(n, &unit(a.0, a.1), &unit(b.0, b.1));
            if let Some(img) = image_of(l, cover, &want) {
                if l.bracket(cover.image(a.0, a.1), cover.image(b.0, b.1)) != img {
                    return Err(Error::NotHomomorphism(format!(
                        "[e_{:?}, e_{:?}] is not preserved",
                        a, b
                    )));
                }
            }
        }
    }
    // relations through the diagonal: [[e_ab, e_ba], e_cd]
    for &(a, b) in off.iter().filter(|(a, b)| a < b) {
        let h = gl_bracket(n, &unit(a, b), &unit(b, a));
        let hi = l.bracket(cover.image(a, b), cover.image(b, a));
        for &(c, d) in &off {
            let want = gl_bracket(n, &h, &unit(c, d));
            let img = image_of(l, cover, &want).expect("diagonal elements preserve off-diagonal units");
            if l.bracket(&hi, cover.image(c, d)) != img {
                return Err(Error::NotHomomorphism(format!(
                    "[[e_{:?}, e_{:?}], e_{:?}] is not preserved",
                    (a, b),
                    (b, a),
                    (c, d)
                )));
            }
        }
    }
    Ok(())
}

/// `h_k = [phi e_{k,k+1}, phi e_{k+1,k}]` over unbarred then barred `k`.
pub fn lifted_cartan(l: &LieSuperalgebra, cover: &CoverEmbedding) -> CartanBasis {
    let n = cover.n();
    let mut elements = Vec::with_capacity(2 * n);
    for block in 0..2 {
        for k in 0..n {
            let a = block * (n + 1) + k;
            elements.push(l.bracket(cover.image(a, a + 1), cover.image(a + 1, a)));
        }
    }
    CartanBasis::new(elements, CartanTag::H)
}

/// Image of `z`: `sum_k [phi e_{k k'}, phi e_{k' k}]`.
pub fn central_image(l: &LieSuperalgebra, cover: &CoverEmbedding) -> Vector {
    let n = cover.n();
    let mut z = zero_vector(l.dim());
    for k in 0..=n {
        let b = n + 1 + k;
        crate::exact::linalg::axpy(&mut z, &Rational::one(), &l.bracket(cover.image(k, b), cover.image(b, k)));
    }
    z
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverEvidence {
    pub passed: bool,
    pub generated_dim: usize,
    pub center_dim: usize,
    pub perfect: bool,
    pub expected_quotient_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSetEvidence {
    pub passed: bool,
    /// Nonzero weights that are not roots of `A(n,n)`.
    pub unexpected: Vec<Weight>,
    /// Roots of `A(n,n)` with no root space.
    pub missing: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroPartEvidence {
    pub passed: bool,
    pub zero_dim: usize,
    pub bracket_dim: usize,
    /// A zero-weight basis vector outside `sum [L_alpha, L_-alpha]`.
    pub witness: Option<Vector>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Graded,
    NotGraded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingReport {
    pub verdict: Verdict,
    pub condition1: CoverEvidence,
    pub condition2: RootSetEvidence,
    pub condition3: ZeroPartEvidence,
    /// `Some(n)` when the weights are exactly the roots of `A(n,n)`.
    pub matched_root_system: Option<usize>,
    pub datum: RootDatum,
}

/// Checks the three conditions of an `A(n,n)`-grading: the embedded cover
/// generates a central cover of `psl(n+1, n+1)`, the weights of its lifted
/// Cartan are roots (or zero), and `L_0 = sum [L_alpha, L_-alpha]`.
pub fn verify_delta_graded(l: &LieSuperalgebra, cover: &CoverEmbedding) -> Result<GradingReport, Error> {
    check_homomorphism(l, cover)?;
    let n = cover.n();
    let s = cover.size();
    let gens: Vec<Vector> = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .map(|(i, j)| cover.image(i, j).clone())
        .collect();
    let g = crate::superalg::subalgebra_from_generators(l, &gens);
    let sub = subalgebra(l, &g)?;
    let perfect = is_perfect(&sub);
    let center_dim = center(&sub).dim();
    let expected_quotient_dim = 4 * (n + 1) * (n + 1) - 2;
    let condition1 = CoverEvidence {
        passed: perfect && g.dim() - center_dim == expected_quotient_dim,
        generated_dim: g.dim(),
        center_dim,
        perfect,
        expected_quotient_dim,
    };

    let cartan = lifted_cartan(l, cover);
    let datum = weight_decomposition(l, &cartan)?;
    let expected = expected_ann_roots(n)?;
    let expected_weights: Vec<&Weight> = expected.iter().map(|r| &r.weight).collect();
    let unexpected: Vec<Weight> = datum
        .components
        .iter()
        .filter(|c| expected_weights.binary_search(&&c.weight).is_err())
        .map(|c| c.weight.clone())
        .collect();
    let missing: Vec<Weight> =
        expected.iter().filter(|r| datum.find(&r.weight).is_none()).map(|r| r.weight.clone()).collect();
    let condition2 = RootSetEvidence { passed: unexpected.is_empty(), unexpected, missing };

    let condition3 = zero_part_evidence(l, &datum);
    let graded = condition1.passed && condition2.passed && condition3.passed;
    let matched_root_system = (condition2.passed && condition2.missing.is_empty()).then_some(n);
    Ok(GradingReport {
        verdict: if graded { Verdict::Graded } else { Verdict::NotGraded },
        condition1,
        condition2,
        condition3,
        matched_root_system,
        datum,
    })
}

fn zero_part_evidence(l: &LieSuperalgebra, datum: &RootDatum) -> ZeroPartEvidence {
    let mut red = RowReducer::new(l.dim());
    for c in &datum.components {
        let neg: Weight = c.weight.iter().map(|x| -x).collect();
        if c.weight > neg {
            continue;
        }
        if let Some(opp) = datum.find(&neg) {
            for x in &c.basis {
                for y in &opp.basis {
                    red.insert(&l.bracket(x, y));
                }
            }
        }
    }
    let brackets = red.into_subspace();
    let witness = datum.zero_component.basis.iter().find(|b| !brackets.contains(b)).cloned();
    ZeroPartEvidence {
        passed: witness.is_none() && brackets.dim() == datum.zero_component.dim(),
        zero_dim: datum.zero_component.dim(),
        bracket_dim: brackets.dim(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZCheck {
    pub passed: bool,
    pub z: Vector,
    /// A basis index `i` with `[z, b_i] != 0`, and that bracket.
    pub witness: Option<(usize, Vector)>,
}

/// Whether the image of `z` acts trivially on `L`.
pub fn check_z_trivial(l: &LieSuperalgebra, cover: &CoverEmbedding) -> Result<ZCheck, Error> {
    check_homomorphism(l, cover)?;
    let z = central_image(l, cover);
    let witness = (0..l.dim()).find_map(|i| {
        let v = l.bracket(&z, &l.basis_vector(i));
        (!is_zero_vector(&v)).then_some((i, v))
    });
    Ok(ZCheck { passed: witness.is_none(), z, witness })
}

/// How to assign degrees to weight components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingStyle {
    /// Against the lifted diagonal Cartan of `A(n,n)` (`n >= 2`): roots
    /// `eps_i - eps_j'` have degree 1, `eps_i' - eps_j` degree -1.
    Height,
    /// Eigenvalues `2, 0, -2` of the Cartan element with the given index have
    /// degrees `1, 0, -1`.
    Sl2 { h_index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeGrading {
    pub minus: Subspace,
    pub zero: Subspace,
    pub plus: Subspace,
}

impl ThreeGrading {
    pub fn part(&self, degree: i8) -> Option<&Subspace> {
        match degree {
            -1 => Some(&self.minus),
            0 => Some(&self.zero),
            1 => Some(&self.plus),
            _ => None,
        }
    }

    /// `(even, odd)` dimensions of the part of the given degree.
    pub fn dims(&self, space: &SuperSpace, degree: i8) -> (usize, usize) {
        let part = self.part(degree).expect("degree in -1..=1");
        let odd = part.basis().iter().filter(|b| space.parity_of(b) == Some(Parity::Odd)).count();
        (part.dim() - odd, odd)
    }
}

fn degree_of(datum: &RootDatum, style: &GradingStyle, w: &[Rational]) -> Result<i8, Error> {
    match style {
        GradingStyle::Sl2 { h_index } => {
            let v = w.get(*h_index).ok_or_else(|| Error::BadParams("Cartan index out of range".into()))?;
            match crate::exact::poly::to_i64(v) {
                Some(2) => Ok(1),
                Some(0) => Ok(0),
                Some(-2) => Ok(-1),
                _ => Err(Error::NotThreeGraded(format!("eigenvalue {v} outside {{-2, 0, 2}}"))),
            }
        }
        GradingStyle::Height => {
            if w.iter().all(Rational::is_zero) {
                return Ok(0);
            }
            let rank = datum.rank();
            if rank < 4 || !rank.is_multiple_of(2) {
                return Err(Error::BadParams("height grading needs the lifted Cartan of A(n,n), n >= 2".into()));
            }
            let n = rank / 2;
            let s = 2 * (n + 1);
            for i in 0..s {
                for j in 0..s {
                    if i != j && unit_weight(n, i, j).as_slice() == w {
                        return Ok(root_height(n, i, j));
                    }
                }
            }
            Err(Error::NotThreeGraded(format!("weight {} is not a root of A({n},{n})", show(w))))
        }
    }
}

fn show(w: &[Rational]) -> String {
    let parts: Vec<String> = w.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(","))
}

/// Splits `L` into degrees -1, 0, 1 and checks `[L(i), L(j)] ⊆ L(i+j)` with
/// `L(+-2) = 0`.
pub fn three_grading(l: &LieSuperalgebra, datum: &RootDatum, style: &GradingStyle) -> Result<ThreeGrading, Error> {
    let d = l.dim();
    let mut vectors: [Vec<Vector>; 3] = Default::default();
    let mut degrees: Vec<(i8, &Component)> = Vec::new();
    for c in datum.all_components() {
        let deg = degree_of(datum, style, &c.weight)?;
        vectors[(deg + 1) as usize].extend(c.basis.iter().cloned());
        degrees.push((deg, c));
    }
    let [m, z, p] = vectors;
    let grading = ThreeGrading { minus: Subspace::span(d, &m), zero: Subspace::span(d, &z), plus: Subspace::span(d, &p) };
    let parts = [&grading.minus, &grading.zero, &grading.plus];
    for (da, a) in &degrees {
        for (db, b) in &degrees {
            let target = da + db;
            for x in &a.basis {
                for y in &b.basis {
                    let v = l.bracket(x, y);
                    let ok = match target {
                        -1..=1 => parts[(target + 1) as usize].contains(&v),
                        _ => is_zero_vector(&v),
                    };
                    if !ok {
                        return Err(Error::NotThreeGraded(format!(
                            "[L{}, L{}] leaves L({target})",
                            show(&a.weight),
                            show(&b.weight)
                        )));
                    }
                }
            }
        }
    }
    Ok(grading)
}

/// Checks `[L_alpha, L_beta] ⊆ L_{alpha+beta}` (zero when `alpha + beta` is
/// not a weight) on all pairs of component basis vectors.
pub fn check_grading_closure(l: &LieSuperalgebra, datum: &RootDatum) -> Result<(), Error> {
    let comps: Vec<&Component> = datum.all_components().collect();
    let spans: Vec<Subspace> = comps.iter().map(|c| Subspace::span(l.dim(), &c.basis)).collect();
    for a in &comps {
        for b in &comps {
            let sum: Weight = a.weight.iter().zip(&b.weight).map(|(x, y)| x + y).collect();
            let target = comps.iter().position(|c| c.weight == sum);
            for x in &a.basis {
                for y in &b.basis {
                    let v = l.bracket(x, y);
                    let ok = match target {
                        Some(t) => spans[t].contains(&v),
                        None => is_zero_vector(&v),
                    };
                    if !ok {
                        return Err(Error::ClosureFailure(format!(
                            "[L{}, L{}] is not in L{}",
                            show(&a.weight),
                            show(&b.weight),
                            show(&sum)
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
