//! Finite-dimensional algebras given by structure constants, with the
//! predicates and constructions the classification pipeline needs:
//! associativity and nilpotency checks, multiplication kernels, quotients,
//! direct sums, central components, and basis changes.

use serde::{Deserialize, Serialize};

use crate::field::{make_field, FieldElement, FieldSpec};
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// An `n`-dimensional algebra with basis `e_0, .., e_{n-1}` and
/// multiplication `e_i e_j = sum_k c_{ij}^k e_k`.
///
/// Equality compares the field, dimension and structure constants; basis
/// labels are display-only.
#[derive(Debug, Clone)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    /// Dense structure constants, indexed `[(i * n + j) * n + k]`.
    sc: Vec<FieldElement>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.sc == other.sc
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// The algebra with all products zero.
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        let sc = vec![FieldElement(0); dim * dim * dim];
        Self { field, dim, sc, labels: None }
    }

    /// Build from a sparse product table; pairs not mentioned multiply to zero.
    pub fn from_products(
        field: FieldSpec,
        dim: usize,
        products: &[(usize, usize, Vec<(usize, FieldElement)>)],
    ) -> Self {
        let mut a = Self::zero(field, dim);
        for (i, j, terms) in products {
            for &(k, c) in terms {
                a.set_sc(*i, *j, k, c);
            }
        }
        a
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) {
        if let Some(ls) = &labels {
            assert_eq!(ls.len(), self.dim);
        }
        self.labels = labels;
    }

    pub fn sc(&self, i: usize, j: usize, k: usize) -> FieldElement {
        self.sc[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_sc(&mut self, i: usize, j: usize, k: usize, c: FieldElement) {
        assert!(i < self.dim && j < self.dim && k < self.dim);
        assert!(c.0 < self.field.q());
        self.sc[(i * self.dim + j) * self.dim + k] = c;
    }

    /// The product `e_i e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[FieldElement] {
        let base = (i * self.dim + j) * self.dim;
        &self.sc[base..base + self.dim]
    }

    fn unit(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement(0); self.dim];
        v[i] = FieldElement(1);
        v
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let f = &self.field;
        let mut out = vec![FieldElement(0); self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi.0 == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj.0 == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                let prod = self.basis_product(i, j);
                for k in 0..self.dim {
                    if prod[k].0 != 0 {
                        out[k] = f.add(out[k], f.mul(c, prod[k]));
                    }
                }
            }
        }
        out
    }

    pub fn is_associative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let lhs = self.multiply(self.basis_product(i, j), &self.unit(k));
                    let rhs = self.multiply(&self.unit(i), self.basis_product(j, k));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// The span of all products, `A^2`.
    pub fn square_subspace(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                rows.push(self.basis_product(i, j).to_vec());
            }
        }
        Subspace::from_rows(self.field.clone(), self.dim, rows)
    }

    /// The descending chain `A^2, A^3, ..` until it reaches zero or
    /// stabilises. `A^{k+1}` is spanned by the products `A^k . A`.
    pub fn power_subspaces(&self) -> Vec<Subspace> {
        let mut chain = Vec::new();
        let mut prev = Subspace::full(self.field.clone(), self.dim);
        loop {
            let mut rows = Vec::new();
            for r in 0..prev.dim() {
                for j in 0..self.dim {
                    rows.push(self.multiply(prev.basis_row(r), &self.unit(j)));
                }
            }
            let next = Subspace::from_rows(self.field.clone(), self.dim, rows);
            if next == prev {
                break;
            }
            let done = next.dim() == 0;
            chain.push(next.clone());
            if done {
                break;
            }
            prev = next;
        }
        chain
    }

    pub fn is_nilpotent(&self) -> bool {
        match self.power_subspaces().last() {
            Some(last) => last.dim() == 0,
            None => self.dim == 0,
        }
    }

    /// The ideal `{v : v e_j = e_j v = 0 for all j}`.
    pub fn multiplication_kernel(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                // (v e_j)_k = sum_i v_i c_{ij}^k and (e_j v)_k = sum_i v_i c_{ji}^k
                let left: Vec<FieldElement> = (0..n).map(|i| self.sc(i, j, k)).collect();
                let right: Vec<FieldElement> = (0..n).map(|i| self.sc(j, i, k)).collect();
                rows.push(left);
                rows.push(right);
            }
        }
        Matrix::from_rows(self.field.clone(), n, rows).kernel()
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim);
        for r in 0..s.dim() {
            for j in 0..self.dim {
                if !s.contains(&self.multiply(s.basis_row(r), &self.unit(j)))
                    || !s.contains(&self.multiply(&self.unit(j), s.basis_row(r)))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient by a two-sided ideal, presented on the coordinates at the
    /// non-pivot columns of the ideal's RREF basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, QuotientMap)> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let kept: Vec<usize> =
            (0..self.dim).filter(|c| !ideal.pivots().contains(c)).collect();
        let map = QuotientMap { ideal: ideal.clone(), kept: kept.clone() };
        let qdim = kept.len();
        let mut q = Algebra::zero(self.field.clone(), qdim);
        for (a, &ia) in kept.iter().enumerate() {
            for (b, &ib) in kept.iter().enumerate() {
                let w = ideal.reduce_mod(self.basis_product(ia, ib));
                for (k, &ik) in kept.iter().enumerate() {
                    q.set_sc(a, b, k, w[ik]);
                }
            }
        }
        if let Some(ls) = &self.labels {
            q.labels = Some(kept.iter().map(|&i| ls[i].clone()).collect());
        }
        Ok((q, map))
    }

    /// Block direct sum; cross products are zero.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n1 = self.dim;
        let n = n1 + other.dim;
        let mut out = Algebra::zero(self.field.clone(), n);
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    out.set_sc(i, j, k, self.sc(i, j, k));
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    out.set_sc(n1 + i, n1 + j, n1 + k, other.sc(i, j, k));
                }
            }
        }
        Ok(out)
    }

    /// True iff the algebra splits off a direct summand inside its
    /// multiplication kernel, equivalently iff `C(A)` is not contained in
    /// `A^2`: a kernel element outside `A^2` spans such a summand, because
    /// any complement containing `A^2` absorbs all products.
    pub fn has_central_component(&self) -> bool {
        !self.multiplication_kernel().is_contained_in(&self.square_subspace())
    }

    /// The same multiplication expressed on the basis whose vectors are the
    /// columns of `p` (column `i` is the new `e_i` in old coordinates).
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        assert_eq!(p.rows(), self.dim);
        assert_eq!(p.cols(), self.dim);
        let new_basis = p.transpose(); // rows = new basis vectors
        let inv = new_basis.inverse().ok_or(Error::SingularMatrix)?;
        let mut out = Algebra::zero(self.field.clone(), self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let w = self.multiply(new_basis.row(i), new_basis.row(j));
                // w = coords . new_basis, so coords = w . new_basis^{-1}.
                let coords = inv.mul_vec_left(&w);
                for k in 0..self.dim {
                    out.set_sc(i, j, k, coords[k]);
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> AlgebraJson {
        let mut products = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let terms: Vec<(usize, u32)> = (0..self.dim)
                    .filter(|&k| self.sc(i, j, k).0 != 0)
                    .map(|k| (k, self.sc(i, j, k).0))
                    .collect();
                if !terms.is_empty() {
                    products.push((i, j, terms));
                }
            }
        }
        AlgebraJson {
            field: FieldJson { p: self.field.p(), m: self.field.m() },
            dim: self.dim,
            labels: self.labels.clone(),
            products,
        }
    }
}

/// The projection attached to a quotient: reduce modulo the ideal, then
/// keep the non-pivot coordinates.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    ideal: Subspace,
    kept: Vec<usize>,
}

impl QuotientMap {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn kept_coordinates(&self) -> &[usize] {
        &self.kept
    }

    pub fn project(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let r = self.ideal.reduce_mod(v);
        self.kept.iter().map(|&i| r[i]).collect()
    }

    /// The canonical section: place quotient coordinates back at the kept
    /// positions.
    pub fn lift(&self, w: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(w.len(), self.kept.len());
        let mut v = vec![FieldElement(0); self.ideal.ambient_dim()];
        for (idx, &pos) in self.kept.iter().enumerate() {
            v[pos] = w[idx];
        }
        v
    }
}

/// Wire format for algebras. Products are `[i, j, [[k, coeff], ..]]` with
/// 0-based indices and integer field-element encodings; omitted pairs
/// multiply to zero.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub products: Vec<(usize, usize, Vec<(usize, u32)>)>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldJson {
    pub p: u32,
    pub m: u32,
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<Algebra> {
        let field = make_field(self.field.p, self.field.m)?;
        if let Some(ls) = &self.labels {
            if ls.len() != self.dim {
                return Err(Error::InvalidAlgebra(format!(
                    "{} labels for dimension {}",
                    ls.len(),
                    self.dim
                )));
            }
        }
        let mut a = Algebra::zero(field.clone(), self.dim);
        let mut seen_pairs = std::collections::HashSet::new();
        for (i, j, terms) in &self.products {
            if *i >= self.dim || *j >= self.dim {
                return Err(Error::InvalidAlgebra(format!(
                    "product index ({i}, {j}) out of range"
                )));
            }
            if !seen_pairs.insert((*i, *j)) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate product entry for ({i}, {j})"
                )));
            }
            let mut seen_terms = std::collections::HashSet::new();
            for &(k, c) in terms {
                if k >= self.dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "term index {k} out of range"
                    )));
                }
                if c >= field.q() {
                    return Err(Error::InvalidAlgebra(format!(
                        "coefficient {c} out of range for field of order {}",
                        field.q()
                    )));
                }
                if !seen_terms.insert(k) {
                    return Err(Error::InvalidAlgebra(format!(
                        "duplicate term index {k} in product ({i}, {j})"
                    )));
                }
                a.set_sc(*i, *j, k, FieldElement(c));
            }
        }
        a.labels = self.labels.clone();
        Ok(a)
    }
}
