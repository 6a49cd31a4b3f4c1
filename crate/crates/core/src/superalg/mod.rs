//! Z/2-graded spaces, structure tables, axiom validators and generic algebra
//! operations.

mod ops;
mod provenance;
mod space;
pub(crate) mod table;

use alloc::vec;
use alloc::vec::Vec;

pub use ops::{
    ad_matrix, bracket, center, commutator_algebra, derived_subalgebra, index_label, is_perfect,
    matrix_units_assoc, quotient_central, subalgebra, subalgebra_from_generators, tensor_assoc,
    tensor_lie_assoc, unit_label,
};
pub use provenance::{CartanBasis, CartanTag, CoverEmbedding, MatrixRealization, Provenance};
pub use space::{Parity, SuperSpace};
pub use table::{Kind, StructureTable};

use crate::error::Error;
use crate::exact::linalg::{sparse_axpy, to_sparse, SparseVec, Vector};
use crate::exact::Rational;

/// An element written in an algebra's basis.
pub type Element = Vector;

/// Shared read access to validated algebras.
pub trait Algebra {
    fn table(&self) -> &StructureTable;
    fn provenance(&self) -> &Provenance;

    fn dim(&self) -> usize {
        self.table().dim()
    }

    fn space(&self) -> &SuperSpace {
        self.table().space()
    }

    fn parity(&self, i: usize) -> Parity {
        self.table().parity(i)
    }

    /// Bilinear product; panics if the lengths do not match the dimension.
    fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.table().product(x, y)
    }

    fn basis_vector(&self, i: usize) -> Vector {
        crate::exact::linalg::unit_vector(self.dim(), i)
    }

    fn zero_element(&self) -> Vector {
        crate::exact::linalg::zero_vector(self.dim())
    }
}

macro_rules! algebra_wrapper {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug)]
        pub struct $name {
            table: StructureTable,
            provenance: Provenance,
        }

        impl $name {
            pub fn with_provenance(mut self, provenance: Provenance) -> Self {
                self.provenance = provenance;
                self
            }

            pub fn provenance_mut(&mut self) -> &mut Provenance {
                &mut self.provenance
            }

            /// Wraps a table whose axioms are known to hold by construction.
            #[allow(dead_code)]
            pub(crate) fn from_table_unchecked(table: StructureTable) -> Self {
                $name { table, provenance: Provenance::default() }
            }

            pub fn into_table(self) -> StructureTable {
                self.table
            }
        }

        impl Algebra for $name {
            fn table(&self) -> &StructureTable {
                &self.table
            }

            fn provenance(&self) -> &Provenance {
                &self.provenance
            }
        }
    };
}

algebra_wrapper!(LieSuperalgebra, "A structure table that has passed [`validate_lie`].");
algebra_wrapper!(AssocSuperalgebra, "A structure table that has passed [`validate_assoc`].");
algebra_wrapper!(JordanSuperalgebra, "A structure table that has passed [`validate_jordan`].");

impl LieSuperalgebra {
    /// The supercommutator bracket; panics on a dimension mismatch (see
    /// [`bracket`] for the checked form).
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.table.product(x, y)
    }
}

impl AssocSuperalgebra {
    pub fn unit(&self) -> &[Rational] {
        self.table.unit().expect("validated associative algebras are unital")
    }
}

impl JordanSuperalgebra {
    pub fn unit(&self) -> &[Rational] {
        self.table.unit().expect("validated Jordan algebras are unital")
    }
}

fn expect_kind(t: &StructureTable, kind: Kind) -> Result<(), Error> {
    if t.kind() != kind {
        return Err(Error::KindMismatch { expected: kind.name(), got: t.kind().name() });
    }
    Ok(())
}

fn sign(t: &StructureTable, i: usize, j: usize) -> Rational {
    Parity::sign(t.parity(i), t.parity(j))
}

/// Checks super-anticommutativity and the super Jacobi identity on basis
/// triples.
pub fn validate_lie(t: StructureTable) -> Result<LieSuperalgebra, Error> {
    expect_kind(&t, Kind::Lie)?;
    check_super_symmetry(&t, -Rational::one(), "super-anticommutativity")?;
    let d = t.dim();
    // With anticommutativity in place the cyclic sum is, up to sign, invariant
    // under permutations, so sorted triples suffice.
    for i in 0..d {
        for j in i..d {
            let ij = t.basis_product(i, j);
            for k in j..d {
                let mut acc = scaled(&t.product_with_basis(ij, k), &sign(&t, i, k));
                let jk = t.basis_product(j, k);
                acc = sparse_axpy(&acc, &sign(&t, j, i), &t.product_with_basis(jk, i));
                let ki = t.basis_product(k, i);
                acc = sparse_axpy(&acc, &sign(&t, k, j), &t.product_with_basis(ki, j));
                if !acc.is_empty() {
                    return Err(Error::AxiomViolation {
                        axiom: "super Jacobi identity",
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }
    Ok(LieSuperalgebra { table: t, provenance: Provenance::default() })
}

/// `b_i b_j = factor (-1)^{|i||j|} b_j b_i` for all basis pairs.
fn check_super_symmetry(t: &StructureTable, factor: Rational, axiom: &'static str) -> Result<(), Error> {
    let d = t.dim();
    for i in 0..d {
        for j in i..d {
            let c = &factor * &sign(t, i, j);
            let rhs = scaled(t.basis_product(j, i), &c);
            if t.basis_product(i, j) != &rhs {
                return Err(Error::AxiomViolation { axiom, indices: vec![i, j] });
            }
        }
    }
    Ok(())
}

fn scaled(v: &[(usize, Rational)], c: &Rational) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(k, x)| (*k, x * c)).collect()
}

fn check_unit(t: &StructureTable) -> Result<(), Error> {
    let u = to_sparse(t.unit().ok_or(Error::MissingUnit)?);
    for i in 0..t.dim() {
        let e = [(i, Rational::one())];
        if t.product_sparse(&u, &e) != e || t.product_sparse(&e, &u) != e {
            return Err(Error::MissingUnit);
        }
    }
    Ok(())
}

/// Checks associativity on basis triples and that the declared unit is a
/// two-sided identity.
pub fn validate_assoc(t: StructureTable) -> Result<AssocSuperalgebra, Error> {
    expect_kind(&t, Kind::Assoc)?;
    check_unit(&t)?;
    let d = t.dim();
    for i in 0..d {
        for j in 0..d {
            let ij = t.basis_product(i, j);
            for k in 0..d {
                let left = t.product_with_basis(ij, k);
                let right = t.basis_with_product(i, t.basis_product(j, k));
                if left != right {
                    return Err(Error::AxiomViolation { axiom: "associativity", indices: vec![i, j, k] });
                }
            }
        }
    }
    Ok(AssocSuperalgebra { table: t, provenance: Provenance::default() })
}

/// Checks supercommutativity, the unit, and the fully linearized super Jordan
/// identity
///
/// ```text
/// ((xy)z)t + s2 ((yt)z)x + s3 ((tx)z)y = (xy)(zt) + s2 (yt)(zx) + s3 (tx)(zy)
/// ```
///
/// on all basis quadruples, where `s2`, `s3` are the Koszul signs of the
/// reorderings `(y,t,z,x)` and `(t,x,z,y)` of `(x,y,z,t)`.
pub fn validate_jordan(t: StructureTable) -> Result<JordanSuperalgebra, Error> {
    expect_kind(&t, Kind::Jordan)?;
    check_super_symmetry(&t, Rational::one(), "supercommutativity")?;
    check_unit(&t)?;
    let d = t.dim();
    // triple[(i*d + j)*d + k] = ((b_i b_j) b_k)
    let mut triple: Vec<SparseVec> = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            let ij = t.basis_product(i, j);
            for k in 0..d {
                triple.push(t.product_with_basis(ij, k));
            }
        }
    }
    let tri = |i: usize, j: usize, k: usize| &triple[(i * d + j) * d + k];
    for x in 0..d {
        for y in 0..d {
            for t_ in 0..d {
                for z in 0..d {
                    let b = |i: usize| t.parity(i).bit() as u32;
                    let koszul = |e: u32| if e.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
                    let s1 = Rational::one();
                    let s2 = koszul(b(x) * b(y) + b(t_) * b(z) + b(t_) * b(x) + b(z) * b(x));
                    let s3 = koszul(b(t_) * b(x) + b(t_) * b(z) + b(t_) * b(y) + b(z) * b(y));
                    let mut acc: SparseVec = Vec::new();
                    acc = sparse_axpy(&acc, &s1, &t.product_with_basis(tri(x, y, z), t_));
                    acc = sparse_axpy(&acc, &s2, &t.product_with_basis(tri(y, t_, z), x));
                    acc = sparse_axpy(&acc, &s3, &t.product_with_basis(tri(t_, x, z), y));
                    let m1 = -&s1;
                    let m2 = -&s2;
                    let m3 = -&s3;
                    acc = sparse_axpy(&acc, &m1, &t.product_sparse(t.basis_product(x, y), t.basis_product(z, t_)));
                    acc = sparse_axpy(&acc, &m2, &t.product_sparse(t.basis_product(y, t_), t.basis_product(z, x)));
                    acc = sparse_axpy(&acc, &m3, &t.product_sparse(t.basis_product(t_, x), t.basis_product(z, y)));
                    if !acc.is_empty() {
                        return Err(Error::AxiomViolation {
                            axiom: "linearized super Jordan identity",
                            indices: vec![x, y, z, t_],
                        });
                    }
                }
            }
        }
    }
    Ok(JordanSuperalgebra { table: t, provenance: Provenance::default() })
}

#[cfg(test)]
mod tests;
