use alloc::vec;
use alloc::vec::Vec;

use super::space::{Parity, SuperSpace};
use crate::error::Error;
use crate::exact::linalg::{sparse_axpy, to_sparse, zero_vector, SparseVec, Subspace, Vector};
use crate::exact::{Matrix, Rational};

/// Which axioms a structure table is meant to satisfy.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Lie,
    Assoc,
    Jordan,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Lie => "lie",
            Kind::Assoc => "assoc",
            Kind::Jordan => "jordan",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        match s {
            "lie" => Some(Kind::Lie),
            "assoc" => Some(Kind::Assoc),
            "jordan" => Some(Kind::Jordan),
            _ => None,
        }
    }
}

/// Structure constants `b_i b_j = sum_k c_ij^k b_k` on a graded basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    space: SuperSpace,
    kind: Kind,
    products: Vec<SparseVec>,
    unit: Option<Vector>,
}

impl StructureTable {
    /// The zero product on `space`.
    pub fn new(space: SuperSpace, kind: Kind) -> Self {
        let d = space.dim();
        StructureTable { space, kind, products: vec![Vec::new(); d * d], unit: None }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn space_mut(&mut self) -> &mut SuperSpace {
        &mut self.space
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.unit.as_deref()
    }

    pub fn set_unit(&mut self, unit: Option<Vector>) -> Result<(), Error> {
        if let Some(u) = &unit {
            if u.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), got: u.len() });
            }
            if self.space.parity_of(u) != Some(Parity::Even) {
                return Err(Error::NotHomogeneous);
            }
        }
        self.unit = unit;
        Ok(())
    }

    /// Sets `b_i b_j`. Fails if an index is out of range or the value is not
    /// of parity `|b_i| + |b_j|`.
    pub fn set_product(&mut self, i: usize, j: usize, value: SparseVec) -> Result<(), Error> {
        let d = self.dim();
        for idx in [i, j] {
            if idx >= d {
                return Err(Error::DimensionMismatch { expected: d, got: idx + 1 });
            }
        }
        let want = self.parity(i) + self.parity(j);
        let mut last = None;
        for (k, c) in &value {
            if *k >= d {
                return Err(Error::DimensionMismatch { expected: d, got: k + 1 });
            }
            if last.is_some_and(|l| l >= *k) {
                return Err(Error::BadParams("product entries must have increasing indices".into()));
            }
            last = Some(*k);
            if c.is_zero() {
                return Err(Error::BadParams("explicit zero structure constant".into()));
            }
            if self.parity(*k) != want {
                return Err(Error::AxiomViolation { axiom: "parity homogeneity", indices: vec![i, j, *k] });
            }
        }
        self.products[i * d + j] = value;
        Ok(())
    }

    /// Sets `b_i b_j` from a dense vector.
    pub fn set_product_dense(&mut self, i: usize, j: usize, value: &[Rational]) -> Result<(), Error> {
        self.set_product(i, j, to_sparse(value))
    }

    /// `b_i b_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    /// Bilinear extension to dense vectors.
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        assert!(x.len() == d && y.len() == d, "dimension mismatch in product");
        let mut out = zero_vector(d);
        let ys: Vec<(usize, &Rational)> =
            y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &ys {
                let ab = a * *b;
                for (k, c) in self.basis_product(i, *j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Bilinear extension to sparse vectors.
    pub fn product_sparse(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let p = self.basis_product(*i, *j);
                if !p.is_empty() {
                    out = sparse_axpy(&out, &(a * b), p);
                }
            }
        }
        out
    }

    /// `v b_j` for a sparse `v`.
    pub fn product_with_basis(&self, x: &[(usize, Rational)], j: usize) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (i, a) in x {
            let p = self.basis_product(*i, j);
            if !p.is_empty() {
                out = sparse_axpy(&out, a, p);
            }
        }
        out
    }

    /// `b_i v` for a sparse `v`.
    pub fn basis_with_product(&self, i: usize, y: &[(usize, Rational)]) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (j, b) in y {
            let p = self.basis_product(i, *j);
            if !p.is_empty() {
                out = sparse_axpy(&out, b, p);
            }
        }
        out
    }

    /// All nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let d = self.dim();
        self.products
            .iter()
            .enumerate()
            .flat_map(move |(ij, row)| row.iter().map(move |(k, c)| (ij / d, ij % d, *k, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.products.iter().all(Vec::is_empty)
    }

    /// Matrix of `y -> x y` (left multiplication) in the basis.
    pub fn left_mul_matrix(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in self.basis_product(i, j) {
                    let cur = m.get(*k, j).clone();
                    m.set(*k, j, cur + a * c);
                }
            }
        }
        m
    }

    /// The table of a subspace closed under the product, on its canonical basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<StructureTable, Error> {
        let basis = sub.basis();
        let mut parities = Vec::with_capacity(basis.len());
        for v in basis {
            parities.push(self.space.parity_of(v).ok_or(Error::NotHomogeneous)?);
        }
        let mut space = SuperSpace::new(parities);
        // keep labels of ambient basis vectors that survive unchanged
        let labels = basis
            .iter()
            .map(|v| {
                let s = to_sparse(v);
                match s.as_slice() {
                    [(k, c)] if c.is_one() => self.space.label(*k).map(Into::into),
                    _ => None,
                }
            })
            .collect();
        space.set_labels(labels);
        let mut out = StructureTable::new(space, self.kind);
        let sparse_basis: Vec<SparseVec> = basis.iter().map(|v| to_sparse(v)).collect();
        for (i, x) in sparse_basis.iter().enumerate() {
            for (j, y) in sparse_basis.iter().enumerate() {
                let p = self.product_sparse(x, y);
                if p.is_empty() {
                    continue;
                }
                let dense = crate::exact::linalg::to_dense(&p, self.dim());
                let c = sub.coords(&dense).ok_or_else(|| {
                    Error::ClosureFailure(alloc::format!("product of basis vectors {i} and {j} leaves the subspace"))
                })?;
                out.set_product_dense(i, j, &c)?;
            }
        }
        if let Some(u) = &self.unit {
            if let Some(c) = sub.coords(u) {
                out.unit = Some(c);
            }
        }
        Ok(out)
    }

    /// Quotient by an ideal, on the complement spanned by the basis vectors
    /// that are not pivots of the ideal's canonical basis. Returns the table
    /// and the projection matrix (old coordinates to new).
    pub fn quotient(&self, ideal: &Subspace) -> Result<(StructureTable, Matrix), Error> {
        let d = self.dim();
        let mut keep = vec![true; d];
        for &p in ideal.pivots() {
            keep[p] = false;
        }
        let kept: Vec<usize> = (0..d).filter(|&i| keep[i]).collect();
        let mut new_index = vec![usize::MAX; d];
        for (n, &o) in kept.iter().enumerate() {
            new_index[o] = n;
        }
        let project = |v: &[Rational]| -> Vector {
            let r = ideal.reduce(v);
            kept.iter().map(|&o| r[o].clone()).collect()
        };
        let mut proj = Matrix::zeros(kept.len(), d);
        for c in 0..d {
            let mut e = zero_vector(d);
            e[c] = Rational::one();
            for (r, x) in project(&e).into_iter().enumerate() {
                proj.set(r, c, x);
            }
        }
        let parities = kept.iter().map(|&o| self.parity(o)).collect();
        let mut space = SuperSpace::new(parities);
        space.set_labels(kept.iter().map(|&o| self.space.label(o).map(Into::into)).collect());
        let mut out = StructureTable::new(space, self.kind);
        for (ni, &i) in kept.iter().enumerate() {
            for (nj, &j) in kept.iter().enumerate() {
                let p = self.basis_product(i, j);
                if p.is_empty() {
                    continue;
                }
                let dense = crate::exact::linalg::to_dense(p, d);
                out.set_product_dense(ni, nj, &project(&dense))?;
            }
        }
        if let Some(u) = &self.unit {
            out.unit = Some(project(u));
        }
        Ok((out, proj))
    }

    /// The same algebra on another homogeneous basis of the whole space.
    pub fn change_basis(&self, basis: &[Vector]) -> Result<StructureTable, Error> {
        let d = self.dim();
        let coords = crate::exact::BasisCoords::new(d, basis.to_vec())
            .filter(|_| basis.len() == d)
            .ok_or_else(|| Error::BadParams("change of basis needs a basis".into()))?;
        let mut parities = Vec::with_capacity(d);
        for v in basis {
            parities.push(self.space.parity_of(v).ok_or(Error::NotHomogeneous)?);
        }
        let mut out = StructureTable::new(SuperSpace::new(parities), self.kind);
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let p = self.product(x, y);
                let c = coords.coords(&p).expect("full basis spans everything");
                out.set_product_dense(i, j, &c)?;
            }
        }
        if let Some(u) = &self.unit {
            out.unit = coords.coords(u);
        }
        Ok(out)
    }

    /// Adds `coeff * b_k` to `b_i b_j`.
    pub fn add_to_product(&mut self, i: usize, j: usize, k: usize, coeff: &Rational) -> Result<(), Error> {
        let cur = self.basis_product(i, j).clone();
        let next = sparse_axpy(&cur, coeff, &[(k, Rational::one())]);
        self.set_product(i, j, next)
    }

    #[cfg(test)]
    pub(crate) fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }
}

/// `acc += coeff * v` for dense accumulators fed by sparse vectors.
pub(crate) fn accumulate(acc: &mut [Rational], coeff: &Rational, v: &[(usize, Rational)]) {
    for (k, c) in v {
        acc[*k] += coeff * c;
    }
}
