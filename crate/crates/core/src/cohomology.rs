//! Second cohomology with trivial coefficients, universal central extensions,
//! cover-kernel checks and central-isogeny fingerprints.
//!
//! A 2-cochain of parity `p` is stored through its values `phi(b_i, b_j)` on
//! pairs `i <= j` with `|b_i| + |b_j| = p`; the remaining values follow from
//! super-skewness `phi(x, y) = -(-1)^{|x||y|} phi(y, x)`, which also forces
//! `phi(b_i, b_i) = 0` for even `b_i`. The cocycle identity is
//!
//! ```text
//! (-1)^{|x||z|} phi([x,y],z) + (-1)^{|y||x|} phi([y,z],x) + (-1)^{|z||y|} phi([z,x],y) = 0
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::linalg::{is_zero_vector, solve_linear, to_dense, unit_vector, SparseVec, Vector};
use crate::exact::{Matrix, Rational, RowReducer, Subspace};
use crate::roots::{weight_decomposition, Weight};
use crate::superalg::{
    center, derived_subalgebra, quotient_central, validate_lie, Algebra, CartanBasis, Kind, LieSuperalgebra,
    Parity, Provenance, StructureTable, SuperSpace,
};

/// A super-skew bilinear form `phi(b_i, b_j) = form[i][j]` of fixed parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    pub parity: Parity,
    pub form: Matrix,
}

impl Cocycle2 {
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let fy = self.form.mul_vec(y);
        x.iter().zip(&fy).fold(Rational::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    pub fn basis_value(&self, i: usize, j: usize) -> &Rational {
        self.form.get(i, j)
    }

    /// Checks the cocycle identity on every ordered basis triple.
    pub fn is_cocycle(&self, l: &LieSuperalgebra) -> bool {
        let d = l.dim();
        let s = |i: usize, j: usize| Parity::sign(l.parity(i), l.parity(j));
        let phi = |u: &SparseVec, z: usize| {
            u.iter().fold(Rational::zero(), |acc, (k, c)| &acc + &(c * self.form.get(*k, z)))
        };
        let t = l.table();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let v = &(&(&s(x, z) * &phi(t.basis_product(x, y), z))
                        + &(&s(y, x) * &phi(t.basis_product(y, z), x)))
                        + &(&s(z, y) * &phi(t.basis_product(z, x), y));
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Coordinates on the space of super-skew cochains of one parity.
struct Cochains {
    parity: Parity,
    dim: usize,
    signs: Vec<Parity>,
    slot: Vec<Option<usize>>,
    pairs: Vec<(usize, usize)>,
}

impl Cochains {
    fn new(l: &LieSuperalgebra, parity: Parity) -> Self {
        let d = l.dim();
        let signs: Vec<Parity> = (0..d).map(|i| l.parity(i)).collect();
        let mut slot = alloc::vec![None; d * d];
        let mut pairs = Vec::new();
        for i in 0..d {
            for j in i..d {
                if signs[i] + signs[j] != parity || (i == j && !signs[i].is_odd()) {
                    continue;
                }
                slot[i * d + j] = Some(pairs.len());
                pairs.push((i, j));
            }
        }
        Cochains { parity, dim: d, signs, slot, pairs }
    }

    fn len(&self) -> usize {
        self.pairs.len()
    }

    /// `phi(b_i, b_j) = sign * unknown`.
    fn var(&self, i: usize, j: usize) -> Option<(usize, Rational)> {
        if i <= j {
            self.slot[i * self.dim + j].map(|v| (v, Rational::one()))
        } else {
            self.slot[j * self.dim + i].map(|v| (v, -Parity::sign(self.signs[i], self.signs[j])))
        }
    }

    /// Adds `coeff * phi(u, b_z)` to `row`.
    fn add_term(&self, row: &mut BTreeMap<usize, Rational>, coeff: &Rational, u: &SparseVec, z: usize) {
        for (k, c) in u {
            if let Some((v, s)) = self.var(*k, z) {
                let e = row.entry(v).or_insert_with(Rational::zero);
                *e += &(&(coeff * c) * &s);
            }
        }
    }

    fn to_cocycle(&self, v: &[Rational]) -> Cocycle2 {
        let d = self.dim;
        let mut form = Matrix::zeros(d, d);
        for (x, &(i, j)) in v.iter().zip(&self.pairs) {
            if x.is_zero() {
                continue;
            }
            form.set(i, j, x.clone());
            if i != j {
                form.set(j, i, &-Parity::sign(self.signs[i], self.signs[j]) * x);
            }
        }
        Cocycle2 { parity: self.parity, form }
    }

    fn cocycle_reducer(&self, l: &LieSuperalgebra) -> RowReducer {
        let t = l.table();
        let s = |i: usize, j: usize| Parity::sign(self.signs[i], self.signs[j]);
        let mut red = RowReducer::new(self.len());
        // sorted triples suffice for the same reason as in the Jacobi check
        for x in 0..self.dim {
            for y in x..self.dim {
                for z in y..self.dim {
                    let mut row = BTreeMap::new();
                    self.add_term(&mut row, &s(x, z), t.basis_product(x, y), z);
                    self.add_term(&mut row, &s(y, x), t.basis_product(y, z), x);
                    self.add_term(&mut row, &s(z, y), t.basis_product(z, x), y);
                    let sparse: SparseVec = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !sparse.is_empty() {
                        red.insert_sparse(&sparse);
                    }
                }
            }
        }
        red
    }

    fn coboundary_reducer(&self, l: &LieSuperalgebra) -> RowReducer {
        let t = l.table();
        let mut per_k: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (v, &(i, j)) in self.pairs.iter().enumerate() {
            for (k, c) in t.basis_product(i, j) {
                per_k.entry(*k).or_default().push((v, c.clone()));
            }
        }
        let mut red = RowReducer::new(self.len());
        for row in per_k.values() {
            red.insert_sparse(row);
        }
        red
    }
}

/// Canonical basis of `Z^2` of the given parity.
pub fn cocycle_space(l: &LieSuperalgebra, parity: Parity) -> Vec<Cocycle2> {
    let c = Cochains::new(l, parity);
    c.cocycle_reducer(l).kernel().iter().map(|v| c.to_cocycle(v)).collect()
}

/// Basis of `B^2 = {f o [.,.]}` of the given parity.
pub fn coboundary_space(l: &LieSuperalgebra, parity: Parity) -> Vec<Cocycle2> {
    let c = Cochains::new(l, parity);
    c.coboundary_reducer(l).basis().iter().map(|v| c.to_cocycle(v)).collect()
}

/// Cocycles whose classes form a basis of `H^2` of the given parity: the
/// `Z^2` basis vectors reduced modulo `B^2`, keeping those that are new.
pub fn h2_basis(l: &LieSuperalgebra, parity: Parity) -> Vec<Cocycle2> {
    let c = Cochains::new(l, parity);
    let mut red = c.coboundary_reducer(l);
    let mut out = Vec::new();
    for z in c.cocycle_reducer(l).kernel() {
        let rem = red.reduce(&z);
        if !is_zero_vector(&rem) {
            red.insert(&rem);
            out.push(c.to_cocycle(&rem));
        }
    }
    out
}

/// `(dim H^2_even, dim H^2_odd)`.
pub fn h2_dims(l: &LieSuperalgebra) -> (usize, usize) {
    let dim = |p: Parity| {
        let c = Cochains::new(l, p);
        c.len() - c.cocycle_reducer(l).rank() - c.coboundary_reducer(l).rank()
    };
    (dim(Parity::Even), dim(Parity::Odd))
}

/// A surjective homomorphism `extended -> base` with central kernel.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub base: LieSuperalgebra,
    pub cocycles: Vec<Cocycle2>,
    pub extended: LieSuperalgebra,
    /// `dim base x dim extended`.
    pub projection: Matrix,
}

impl CentralExtension {
    /// Checks that `projection` is a surjective homomorphism with central kernel.
    pub fn from_projection(
        base: LieSuperalgebra,
        extended: LieSuperalgebra,
        projection: Matrix,
    ) -> Result<Self, Error> {
        let ext = CentralExtension { base, cocycles: Vec::new(), extended, projection };
        ext.verify()?;
        Ok(ext)
    }

    pub fn verify(&self) -> Result<(), Error> {
        let (d, e) = (self.base.dim(), self.extended.dim());
        let p = &self.projection;
        if p.rows() != d || p.cols() != e {
            return Err(Error::DimensionMismatch { expected: d * e, got: p.rows() * p.cols() });
        }
        if p.rank() != d {
            return Err(Error::NotHomomorphism(String::from("projection is not surjective")));
        }
        let images: Vec<Vector> = (0..e).map(|i| p.column(i)).collect();
        for i in 0..e {
            if self.base.space().parity_of(&images[i]).is_some_and(|q| q != self.extended.parity(i)) {
                return Err(Error::NotHomomorphism(format!("projection changes the parity of basis vector {i}")));
            }
            for j in i..e {
                let lhs = p.mul_vec(&to_dense(self.extended.table().basis_product(i, j), e));
                if lhs != self.base.bracket(&images[i], &images[j]) {
                    return Err(Error::NotHomomorphism(format!("bracket of basis vectors {i}, {j}")));
                }
            }
        }
        for (index, k) in self.kernel().basis().iter().enumerate() {
            if (0..e).any(|j| !is_zero_vector(&self.extended.bracket(k, &unit_vector(e, j)))) {
                return Err(Error::NotCentral { index });
            }
        }
        Ok(())
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.extended.dim(), &self.projection.kernel())
    }

    /// A preimage of `x` under the projection.
    pub fn lift(&self, x: &[Rational]) -> Vector {
        solve_linear(&self.projection, x).expect("projection is surjective")
    }
}

/// The universal central extension of a perfect algebra:
/// `L (+) span{c_r}` with `[x, y]^ = [x, y] + sum_r phi_r(x, y) c_r` over an
/// `H^2` basis (even classes first).
pub fn uce(l: &LieSuperalgebra) -> Result<CentralExtension, Error> {
    let derived = derived_subalgebra(l).dim();
    if derived != l.dim() {
        return Err(Error::NotPerfect { derived, dim: l.dim() });
    }
    let mut cocycles = h2_basis(l, Parity::Even);
    cocycles.extend(h2_basis(l, Parity::Odd));
    let d = l.dim();
    let e = d + cocycles.len();
    let mut parities: Vec<Parity> = l.space().parities().to_vec();
    parities.extend(cocycles.iter().map(|c| c.parity));
    let mut space = SuperSpace::new(parities);
    let mut labels: Vec<Option<String>> = l.space().labels().to_vec();
    labels.extend((1..=cocycles.len()).map(|r| Some(format!("c[{r}]"))));
    if !space.set_labels(labels) {
        space.set_labels(alloc::vec![None; e]);
    }
    let mut t = StructureTable::new(space, Kind::Lie);
    for i in 0..d {
        for j in 0..d {
            let mut v = l.table().basis_product(i, j).clone();
            for (r, c) in cocycles.iter().enumerate() {
                let x = c.basis_value(i, j);
                if !x.is_zero() {
                    v.push((d + r, x.clone()));
                }
            }
            if !v.is_empty() {
                t.set_product(i, j, v)?;
            }
        }
    }
    let pad = |v: &Vector| {
        let mut w = v.clone();
        w.resize(e, Rational::zero());
        w
    };
    let mut prov = Provenance::named(format!("uce({})", l.provenance().name));
    prov.cartan = l.provenance().cartan.as_ref().map(|c| CartanBasis::new(c.elements.iter().map(pad).collect(), c.tag));
    let extended = validate_lie(t)?.with_provenance(prov);
    let mut projection = Matrix::zeros(d, e);
    for i in 0..d {
        projection.set(i, i, Rational::one());
    }
    let ext = CentralExtension { base: l.clone(), cocycles, extended, projection };
    ext.verify()?;
    Ok(ext)
}

/// How one root space of the base lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLift {
    pub weight: Weight,
    pub base_dims: (usize, usize),
    pub lifted_dims: (usize, usize),
    /// The projection maps the lifted space onto the base space bijectively.
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub passed: bool,
    pub kernel_dim: usize,
    pub kernel_in_zero_weight: bool,
    pub roots: Vec<RootLift>,
    /// Weights of the extension that are not roots of the base.
    pub unexpected: Vec<Weight>,
}

/// Decomposes the extension against lifts of `cartan` and checks that the
/// kernel sits in weight zero while every root space maps isomorphically.
pub fn cover_kernel_check(ext: &CentralExtension, cartan: &CartanBasis) -> Result<KernelReport, Error> {
    let base = weight_decomposition(&ext.base, cartan)?;
    let lifted = CartanBasis::new(cartan.elements.iter().map(|h| ext.lift(h)).collect(), cartan.tag);
    let up = weight_decomposition(&ext.extended, &lifted)?;
    let kernel = ext.kernel();
    let zero = Subspace::span(ext.extended.dim(), &up.zero_component.basis);
    let kernel_in_zero_weight = zero.contains_subspace(&kernel);
    let mut roots = Vec::new();
    for c in &base.components {
        let (lifted_dims, isomorphic) = match up.find(&c.weight) {
            Some(u) => {
                let images: Vec<Vector> = u.basis.iter().map(|v| ext.projection.mul_vec(v)).collect();
                let img = Subspace::span(ext.base.dim(), &images);
                let iso = img.dim() == u.dim() && img == Subspace::span(ext.base.dim(), &c.basis);
                ((u.even_dim, u.odd_dim), iso)
            }
            None => ((0, 0), false),
        };
        roots.push(RootLift { weight: c.weight.clone(), base_dims: (c.even_dim, c.odd_dim), lifted_dims, isomorphic });
    }
    let unexpected: Vec<Weight> =
        up.components.iter().filter(|u| base.find(&u.weight).is_none()).map(|u| u.weight.clone()).collect();
    let passed = kernel_in_zero_weight && unexpected.is_empty() && roots.iter().all(|r| r.isomorphic);
    Ok(KernelReport { passed, kernel_dim: kernel.dim(), kernel_in_zero_weight, roots, unexpected })
}

/// Invariants of an algebra that are preserved by isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dims: (usize, usize),
    /// Graded dimensions of `L, L', L'', ...` until the series stabilizes.
    pub derived_series: Vec<(usize, usize)>,
    pub center_dim: usize,
    pub h2: (usize, usize),
    /// Sorted graded dimensions of the nonzero weight spaces, when a Cartan
    /// was supplied.
    pub roots: Option<Vec<(usize, usize)>>,
}

fn graded_dims(l: &LieSuperalgebra, s: &Subspace) -> (usize, usize) {
    let even: Vec<Vector> = s.basis().iter().map(|v| l.space().split(v).0).collect();
    let e = Subspace::span(l.dim(), &even).dim();
    (e, s.dim() - e)
}

fn derived_series(l: &LieSuperalgebra) -> Vec<Subspace> {
    let d = l.dim();
    let mut series = alloc::vec![Subspace::full(d)];
    loop {
        let last = series.last().expect("series starts with L");
        let b = last.basis();
        let mut red = RowReducer::new(d);
        for i in 0..b.len() {
            for j in i..b.len() {
                red.insert(&l.bracket(&b[i], &b[j]));
            }
        }
        let next = red.into_subspace();
        if next.dim() == last.dim() {
            return series;
        }
        series.push(next);
    }
}

pub fn fingerprint(l: &LieSuperalgebra) -> Fingerprint {
    Fingerprint {
        dims: (l.space().even_dim(), l.space().odd_dim()),
        derived_series: derived_series(l).iter().map(|s| graded_dims(l, s)).collect(),
        center_dim: center(l).dim(),
        h2: h2_dims(l),
        roots: None,
    }
}

/// [`fingerprint`] together with the root-space dimensions for `cartan`.
pub fn fingerprint_with_cartan(l: &LieSuperalgebra, cartan: &CartanBasis) -> Result<Fingerprint, Error> {
    let datum = weight_decomposition(l, cartan)?;
    let mut roots: Vec<(usize, usize)> = datum.components.iter().map(|c| (c.even_dim, c.odd_dim)).collect();
    roots.sort_unstable();
    Ok(Fingerprint { roots: Some(roots), ..fingerprint(l) })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Isogeny {
    /// The central quotients share every invariant (not a proof of isomorphism).
    Equal,
    /// Some invariant of the central quotients differs, so the algebras are
    /// not centrally isogenous.
    Different,
    /// The invariants agree but one of the algebras is not perfect, so central
    /// isogeny is not the right notion.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyReport {
    pub verdict: Isogeny,
    /// Fingerprints of `l1 / Z(l1)` and `l2 / Z(l2)`.
    pub left: Fingerprint,
    pub right: Fingerprint,
}

/// The algebra modulo its full center.
pub fn central_quotient(l: &LieSuperalgebra) -> LieSuperalgebra {
    quotient_central(l, &center(l)).expect("the center is central").0
}

/// Compares `l1 / Z(l1)` with `l2 / Z(l2)` by fingerprint.
pub fn isogenous(l1: &LieSuperalgebra, l2: &LieSuperalgebra) -> IsogenyReport {
    let left = fingerprint(&central_quotient(l1));
    let right = fingerprint(&central_quotient(l2));
    let perfect = |l: &LieSuperalgebra| derived_subalgebra(l).dim() == l.dim();
    let verdict = if left != right {
        Isogeny::Different
    } else if perfect(l1) && perfect(l2) {
        Isogeny::Equal
    } else {
        Isogeny::Inconclusive
    };
    IsogenyReport { verdict, left, right }
}
