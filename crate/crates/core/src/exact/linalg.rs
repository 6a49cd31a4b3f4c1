//! Dense and sparse exact linear algebra over the rationals.
//!
//! Every routine returns canonical forms: reduced row-echelon bases and kernel
//! bases with free variables set to one in increasing column order. Higher
//! layers compare subspaces by comparing these bases for equality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::rational::Rational;

/// A coordinate vector.
pub type Vector = Vec<Rational>;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

/// `acc += coeff * v`
pub fn axpy(acc: &mut [Rational], coeff: &Rational, v: &[Rational]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coeff * x;
        }
    }
}

pub fn scale(v: &[Rational], c: &Rational) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &[(usize, Rational)], len: usize) -> Vector {
    let mut out = zero_vector(len);
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged column");
            for (r, x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&x| Rational::from_integer(x)).collect() }
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// `self - lambda * I`
    pub fn shift(&self, lambda: &Rational) -> Matrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            m.data[idx] -= lambda;
        }
        m
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead);
            let inv = m.get(lead, c).recip();
            for k in c..m.cols {
                let idx = lead * m.cols + k;
                if !m.data[idx].is_zero() {
                    m.data[idx] = &m.data[idx] * &inv;
                }
            }
            let pivot_row = m.row(lead)[c..].to_vec();
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for (k, x) in pivot_row.iter().enumerate() {
                    if !x.is_zero() {
                        let idx = r * m.cols + c + k;
                        m.data[idx] -= &factor * x;
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Null-space basis, one vector per free column in increasing order, with
    /// that free variable set to one and the other free variables zero.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize], cols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vector(cols);
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            v
        })
        .collect()
}

/// Particular solution of `a x = b` with every free variable zero, or `None`
/// when the system is inconsistent.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Option<Vector> {
    assert_eq!(b.len(), a.rows(), "right-hand side length must equal row count");
    let mut aug = Matrix::zeros(a.rows(), a.cols() + 1);
    for (r, br) in b.iter().enumerate() {
        for c in 0..a.cols() {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, a.cols(), br.clone());
    }
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = zero_vector(a.cols());
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = red.get(row, a.cols()).clone();
    }
    Some(x)
}

/// Incrementally maintained reduced row-echelon basis over sparse rows.
///
/// Rows are kept fully reduced: each stored row has a leading one at its pivot
/// and zeros at every other pivot column.
#[derive(Clone, Debug)]
pub struct RowReducer {
    width: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
    scratch: Vec<Rational>,
}

impl RowReducer {
    pub fn new(width: usize) -> Self {
        RowReducer {
            width,
            rows: Vec::new(),
            pivot_row: vec![None; width],
            scratch: vec![Rational::zero(); width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the current span; returns the sparse remainder.
    pub fn reduce_sparse(&mut self, v: &[(usize, Rational)]) -> SparseVec {
        let mut touched: Vec<usize> = Vec::with_capacity(v.len() * 2);
        for (i, x) in v {
            debug_assert!(*i < self.width);
            self.scratch[*i] = x.clone();
            touched.push(*i);
        }
        for (i, _) in v {
            if let Some(r) = self.pivot_row[*i] {
                let c = self.scratch[*i].clone();
                if c.is_zero() {
                    continue;
                }
                for (j, y) in &self.rows[r] {
                    if self.scratch[*j].is_zero() {
                        touched.push(*j);
                    }
                    self.scratch[*j] -= &c * y;
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut out = Vec::new();
        for j in touched {
            let x = core::mem::take(&mut self.scratch[j]);
            if !x.is_zero() {
                out.push((j, x));
            }
        }
        out
    }

    pub fn reduce(&mut self, v: &[Rational]) -> Vector {
        let sparse = to_sparse(v);
        to_dense(&self.reduce_sparse(&sparse), self.width)
    }

    pub fn contains_sparse(&mut self, v: &[(usize, Rational)]) -> bool {
        self.reduce_sparse(v).is_empty()
    }

    pub fn contains(&mut self, v: &[Rational]) -> bool {
        self.contains_sparse(&to_sparse(v))
    }

    /// Adds `v` to the span. Returns `true` if the rank grew.
    pub fn insert_sparse(&mut self, v: &[(usize, Rational)]) -> bool {
        let mut rem = self.reduce_sparse(v);
        if rem.is_empty() {
            return false;
        }
        let pivot = rem[0].0;
        let inv = rem[0].1.recip();
        if !inv.is_one() {
            for (_, x) in rem.iter_mut() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(j, _)| *j) {
                let c = row[pos].1.clone();
                *row = sparse_axpy(row, &-c, &rem);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(rem);
        true
    }

    pub fn insert(&mut self, v: &[Rational]) -> bool {
        self.insert_sparse(&to_sparse(v))
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    /// Rows sorted by pivot column (the RREF of the span).
    pub fn sparse_basis(&self) -> Vec<SparseVec> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r[0].0);
        rows
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.sparse_basis().iter().map(|r| to_dense(r, self.width)).collect()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_rref_rows(self.width, self.basis())
    }

    /// Null space of the matrix whose rows were inserted.
    pub fn kernel(&self) -> Vec<Vector> {
        let basis = self.sparse_basis();
        let mut is_pivot = vec![false; self.width];
        for r in &basis {
            is_pivot[r[0].0] = true;
        }
        // column-wise view of non-pivot entries
        let mut col_entries: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.width];
        for r in &basis {
            let p = r[0].0;
            for (j, x) in &r[1..] {
                col_entries[*j].push((p, x.clone()));
            }
        }
        (0..self.width)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = zero_vector(self.width);
                v[free] = Rational::one();
                for (p, x) in &col_entries[free] {
                    v[*p] = -x;
                }
                v
            })
            .collect()
    }
}

/// `a + c * b` on sparse vectors.
pub fn sparse_axpy(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A linear subspace of `Q^n`, stored as its RREF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut red = RowReducer::new(ambient);
        for v in vectors {
            red.insert(v);
        }
        red.into_subspace()
    }

    fn from_rref_rows(ambient: usize, rows: Vec<Vector>) -> Self {
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("zero row in RREF"))
            .collect();
        Subspace { ambient, rows, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Canonical (RREF) basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coords(&self, v: &[Rational]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (coef, row) in c.iter().zip(&self.rows) {
            axpy(&mut residual, &-coef, row);
        }
        is_zero_vector(&residual).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coords(v).is_some()
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coords: &[Rational]) -> Vector {
        let mut out = zero_vector(self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            axpy(&mut out, c, row);
        }
        out
    }

    /// Canonical representative of `v` modulo this subspace (zero at every pivot).
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut red = RowReducer::new(self.ambient);
        for v in self.rows.iter().chain(&other.rows) {
            red.insert(v);
        }
        red.into_subspace()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Solve sum a_i u_i - sum b_j w_j = 0.
        let mut cols: Vec<Vector> = self.rows.clone();
        cols.extend(other.rows.iter().map(|w| w.iter().map(|x| -x).collect()));
        let system = Matrix::from_columns(self.ambient, &cols);
        let vecs: Vec<Vector> = system
            .kernel()
            .iter()
            .map(|k| self.combine(&k[..self.dim()]))
            .collect();
        Subspace::span(self.ambient, &vecs)
    }
}

/// Coordinates with respect to an arbitrary (not necessarily RREF) basis.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    basis: Vec<Vector>,
    span: Subspace,
    /// Row `r` expresses RREF row `r` in terms of the original basis.
    transform: Matrix,
}

impl BasisCoords {
    /// Returns `None` if the vectors are linearly dependent.
    pub fn new(ambient: usize, basis: Vec<Vector>) -> Option<Self> {
        let k = basis.len();
        let mut aug = Matrix::zeros(k, ambient + k);
        for (r, v) in basis.iter().enumerate() {
            assert_eq!(v.len(), ambient);
            for (c, x) in v.iter().enumerate() {
                aug.set(r, c, x.clone());
            }
            aug.set(r, ambient + r, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.iter().filter(|&&p| p < ambient).count() < k {
            return None;
        }
        let mut rows = Vec::with_capacity(k);
        let mut transform = Matrix::zeros(k, k);
        for r in 0..k {
            rows.push(red.row(r)[..ambient].to_vec());
            for c in 0..k {
                transform.set(r, c, red.get(r, ambient + c).clone());
            }
        }
        let span = Subspace::from_rref_rows(ambient, rows);
        Some(BasisCoords { basis, span, transform })
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn coords(&self, v: &[Rational]) -> Option<Vector> {
        let d = self.span.coords(v)?;
        let k = self.basis.len();
        let mut out = zero_vector(k);
        for (r, dr) in d.iter().enumerate() {
            if dr.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let t = self.transform.get(r, c);
                if !t.is_zero() {
                    *o += dr * t;
                }
            }
        }
        Some(out)
    }
}

/// Smallest subspace containing `seed` and closed under a bilinear `product`.
/// The result is returned as its canonical RREF basis.
pub fn span_closure<F>(ambient: usize, seed: &[Vector], mut product: F) -> Subspace
where
    F: FnMut(&[Rational], &[Rational]) -> Vector,
{
    let mut red = RowReducer::new(ambient);
    let mut gens: Vec<Vector> = Vec::new();
    for v in seed {
        if red.insert(v) {
            gens.push(v.clone());
        }
    }
    let mut i = 0;
    while i < gens.len() {
        for j in 0..=i {
            for (a, b) in [(i, j), (j, i)] {
                let p = product(&gens[a], &gens[b]);
                if red.insert(&p) {
                    gens.push(p);
                }
            }
        }
        i += 1;
    }
    red.into_subspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{q, qi};

    fn m(rows: usize, cols: usize, e: &[i64]) -> Matrix {
        Matrix::from_i64(rows, cols, e)
    }

    #[test]
    fn rref_proportional_rows() {
        let (r, p) = m(2, 2, &[1, 2, 2, 4]).rref();
        assert_eq!(p, vec![0]);
        assert_eq!(r, m(2, 2, &[1, 2, 0, 0]));
    }

    #[test]
    fn rref_identity_and_full_rank() {
        let id = Matrix::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        // Hand elimination: R2 -= R1 gives [0,-2]; scale; back-substitute.
        assert_eq!(m(2, 2, &[1, 1, 1, -1]).rref(), (Matrix::identity(2), vec![0, 1]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(2, 2).kernel().len(), 2);
        assert!(Matrix::identity(2).kernel().is_empty());
        assert_eq!(m(1, 2, &[1, 2]).kernel(), vec![vec![qi(-2), qi(1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3, 2), qi(-7)];
        assert_eq!(solve_linear(&Matrix::identity(2), &b), Some(b.clone()));
        assert_eq!(solve_linear(&m(1, 2, &[1, 1]), &[qi(2)]), Some(vec![qi(2), qi(0)]));
        assert_eq!(solve_linear(&m(2, 1, &[1, 1]), &[qi(1), qi(2)]), None);
    }

    #[test]
    fn row_reducer_matches_dense_rref() {
        let a = m(3, 4, &[0, 2, 4, 1, 1, 1, 1, 1, 1, 3, 5, 2]);
        let mut red = RowReducer::new(4);
        for r in a.row_vectors() {
            red.insert(&r);
        }
        let (r, p) = a.rref();
        assert_eq!(red.pivots(), p);
        assert_eq!(red.basis(), r.row_vectors()[..p.len()].to_vec());
        assert_eq!(red.kernel(), a.kernel());
    }

    #[test]
    fn subspace_intersection_and_coords() {
        let u = Subspace::span(3, &[vec![qi(1), qi(0), qi(0)], vec![qi(0), qi(1), qi(0)]]);
        let w = Subspace::span(3, &[vec![qi(1), qi(1), qi(1)], vec![qi(0), qi(0), qi(1)]]);
        let i = u.intersect(&w);
        assert_eq!(i.basis(), &[vec![qi(1), qi(1), qi(0)]]);
        assert_eq!(u.coords(&[qi(3), qi(-2), qi(0)]), Some(vec![qi(3), qi(-2)]));
        assert_eq!(u.coords(&[qi(3), qi(-2), qi(1)]), None);
    }

    #[test]
    fn basis_coords_general_basis() {
        let b = vec![vec![qi(1), qi(1)], vec![qi(1), qi(-1)]];
        let bc = BasisCoords::new(2, b).unwrap();
        assert_eq!(bc.coords(&[qi(3), qi(1)]), Some(vec![qi(2), qi(1)]));
        assert!(BasisCoords::new(2, vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }
}
