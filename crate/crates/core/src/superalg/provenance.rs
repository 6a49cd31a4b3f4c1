use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::linalg::{zero_vector, Vector};
use crate::exact::{BasisCoords, Rational};

/// Which Cartan subalgebra a basis spans.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CartanTag {
    /// The diagonal Cartan `h` of the simple quotient (or its lift).
    H,
    /// `h' = F z + h`.
    HPrime,
    Custom,
}

/// Even, pairwise commuting elements used to grade an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanBasis {
    pub elements: Vec<Vector>,
    pub tag: CartanTag,
}

impl CartanBasis {
    pub fn new(elements: Vec<Vector>, tag: CartanTag) -> Self {
        CartanBasis { elements, tag }
    }

    pub fn rank(&self) -> usize {
        self.elements.len()
    }
}

/// Images of the off-diagonal matrix units `e_ij` of `sl(n+1, n+1)` in an
/// algebra. Indices run over `0..2(n+1)`: first the unbarred indices, then the
/// barred ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverEmbedding {
    n: usize,
    images: Vec<Option<Vector>>,
}

impl CoverEmbedding {
    /// An embedding with every off-diagonal image supplied by `image(i, j)`.
    pub fn from_fn(n: usize, mut image: impl FnMut(usize, usize) -> Vector) -> Self {
        let s = 2 * (n + 1);
        let mut images = Vec::with_capacity(s * s);
        for i in 0..s {
            for j in 0..s {
                images.push(if i == j { None } else { Some(image(i, j)) });
            }
        }
        CoverEmbedding { n, images }
    }

    pub(crate) fn from_parts(n: usize, images: Vec<Option<Vector>>) -> Self {
        CoverEmbedding { n, images }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of matrix indices, `2(n+1)`.
    pub fn size(&self) -> usize {
        2 * (self.n + 1)
    }

    /// Whether index `i` is barred (odd).
    pub fn is_barred(&self, i: usize) -> bool {
        i > self.n
    }

    pub fn image(&self, i: usize, j: usize) -> &Vector {
        self.images[i * self.size() + j].as_ref().expect("diagonal matrix units have no image")
    }
}

/// Coordinates of an algebra's basis inside `gl(m, n)` or `gl(m, n) (x) A`.
///
/// The ambient index of `e_ij (x) a_s` is `(i (m+n) + j) dim A + s`.
#[derive(Clone, Debug)]
pub struct MatrixRealization {
    m: usize,
    n: usize,
    coeff_dim: usize,
    coeff_unit: Vector,
    basis: Vec<Vector>,
    modulo: Vec<Vector>,
    coords: BasisCoords,
}

impl MatrixRealization {
    /// `basis` gives ambient coordinates of each algebra basis vector;
    /// `modulo` spans ambient directions that are factored out. Returns `None`
    /// if the combined family is dependent.
    pub fn new(
        m: usize,
        n: usize,
        coeff_unit: Vector,
        basis: Vec<Vector>,
        modulo: Vec<Vector>,
    ) -> Option<Self> {
        let coeff_dim = coeff_unit.len();
        let ambient = (m + n) * (m + n) * coeff_dim;
        let mut all = basis.clone();
        all.extend(modulo.iter().cloned());
        let coords = BasisCoords::new(ambient, all)?;
        Some(MatrixRealization { m, n, coeff_dim, coeff_unit, basis, modulo, coords })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    pub fn coeff_unit(&self) -> &[Rational] {
        &self.coeff_unit
    }

    pub fn ambient_dim(&self) -> usize {
        self.size() * self.size() * self.coeff_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn modulo(&self) -> &[Vector] {
        &self.modulo
    }

    pub fn ambient_index(&self, i: usize, j: usize, s: usize) -> usize {
        (i * self.size() + j) * self.coeff_dim + s
    }

    /// Ambient coordinates of `e_ij (x) 1`.
    pub fn unit_tensor(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.ambient_dim());
        for (s, c) in self.coeff_unit.iter().enumerate() {
            v[self.ambient_index(i, j, s)] = c.clone();
        }
        v
    }

    /// Algebra coordinates of an ambient vector, if it lies in the realized span.
    pub fn element(&self, ambient: &[Rational]) -> Option<Vector> {
        let mut c = self.coords.coords(ambient)?;
        c.truncate(self.basis.len());
        Some(c)
    }

    /// Algebra coordinates of `e_ij (x) 1`.
    pub fn matrix_unit(&self, i: usize, j: usize) -> Option<Vector> {
        self.element(&self.unit_tensor(i, j))
    }

    /// Ambient representative of an algebra element.
    pub fn ambient(&self, x: &[Rational]) -> Vector {
        let mut out = zero_vector(self.ambient_dim());
        for (c, b) in x.iter().zip(&self.basis) {
            crate::exact::linalg::axpy(&mut out, c, b);
        }
        out
    }
}

/// Construction metadata carried alongside a validated algebra.
#[derive(Clone, Debug, Default)]
pub struct Provenance {
    pub name: String,
    pub realization: Option<MatrixRealization>,
    /// The distinguished central element `z` (identity matrix), when present.
    pub central: Option<Vector>,
    pub cartan: Option<CartanBasis>,
    pub cartan_prime: Option<CartanBasis>,
    /// Embedded copy of `sl(n+1, n+1)` (or a cover of `psl`) used for gradings.
    pub cover: Option<CoverEmbedding>,
}

impl Provenance {
    pub fn named(name: impl Into<String>) -> Self {
        Provenance { name: name.into(), ..Default::default() }
    }
}
