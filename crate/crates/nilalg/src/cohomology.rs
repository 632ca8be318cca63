//! Scalar second cohomology of an algebra with trivial coefficients:
//! cocycles, coboundaries, canonical coset representatives for `H^2`, the
//! symmetric subvariant, and cocycle radicals.
//!
//! A scalar cocycle is an `n x n` matrix `T` with `theta(e_i, e_j) = T_ij`,
//! flattened row-major into a vector of length `n^2` whenever it enters a
//! subspace computation, so that `Z^2`, `B^2` and `H^2` all reuse the
//! canonical `Subspace` machinery.

use crate::algebra::Algebra;
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// A scalar 2-cocycle: a bilinear map `A x A -> F` satisfying
/// `theta(ab, c) = theta(a, bc)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    matrix: Matrix,
}

impl Cocycle {
    /// Checked constructor: verifies the cocycle identity on all basis
    /// triples of `a`.
    pub fn new(a: &Algebra, matrix: Matrix) -> Result<Cocycle> {
        if !satisfies_cocycle_identity(a, &matrix) {
            return Err(Error::NotACocycle);
        }
        Ok(Cocycle { matrix })
    }

    /// Unchecked constructor for raw bilinear maps.
    pub fn from_matrix_unchecked(matrix: Matrix) -> Cocycle {
        assert_eq!(matrix.rows(), matrix.cols());
        Cocycle { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Evaluate the bilinear form: `x T y^t`.
    pub fn evaluate(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let f = self.matrix.field();
        let xt = self.matrix.mul_vec_left(x);
        let mut acc = FieldElement(0);
        for (a, b) in xt.iter().zip(y) {
            acc = f.add(acc, f.mul(*a, *b));
        }
        acc
    }

    pub fn flatten(&self) -> Vec<FieldElement> {
        self.matrix.data().to_vec()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.matrix[(i, j)] == self.matrix[(j, i)]))
    }
}

pub fn satisfies_cocycle_identity(a: &Algebra, t: &Matrix) -> bool {
    let n = a.dim();
    if t.rows() != n || t.cols() != n {
        return false;
    }
    let c = Cocycle { matrix: t.clone() };
    let unit = |i: usize| -> Vec<FieldElement> {
        (0..n).map(|k| FieldElement(u32::from(k == i))).collect()
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = c.evaluate(a.basis_product(i, j), &unit(k));
                let rhs = c.evaluate(&unit(i), a.basis_product(j, k));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

pub fn unflatten(field: &FieldSpec, n: usize, v: &[FieldElement]) -> Matrix {
    assert_eq!(v.len(), n * n);
    Matrix::new(field.clone(), n, n, v.to_vec())
}

/// `Z^2(A, F)` as a subspace of `F^{n^2}`: the solution space of the linear
/// constraints `sum_l c_{ij}^l T_{lk} = sum_l c_{jk}^l T_{il}`.
pub fn cocycle_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let f = a.field().clone();
    let idx = |i: usize, j: usize| i * n + j;
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![FieldElement(0); n * n];
                for l in 0..n {
                    let lhs = a.sc(i, j, l);
                    if lhs.0 != 0 {
                        row[idx(l, k)] = f.add(row[idx(l, k)], lhs);
                    }
                    let rhs = a.sc(j, k, l);
                    if rhs.0 != 0 {
                        row[idx(i, l)] = f.sub(row[idx(i, l)], rhs);
                    }
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(f, n * n, rows).kernel()
}

/// `B^2(A, F)`: the span of the matrices `M^(k)` with `M^(k)_ij = c_{ij}^k`.
pub fn coboundary_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = vec![FieldElement(0); n * n];
        for i in 0..n {
            for j in 0..n {
                row[i * n + j] = a.sc(i, j, k);
            }
        }
        rows.push(row);
    }
    Subspace::from_rows(a.field().clone(), n * n, rows)
}

/// The space of symmetric `n x n` matrices, flattened.
pub fn symmetric_matrix_space(field: &FieldSpec, n: usize) -> Subspace {
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut row = vec![FieldElement(0); n * n];
            row[i * n + j] = FieldElement(1);
            row[j * n + i] = FieldElement(1);
            rows.push(row);
        }
    }
    Subspace::from_rows(field.clone(), n * n, rows)
}

/// Intersect a space of flattened cocycle matrices with the symmetric ones.
pub fn symmetric_subspace(s: &Subspace) -> Subspace {
    let n2 = s.ambient_dim();
    let n = (n2 as f64).sqrt().round() as usize;
    assert_eq!(n * n, n2, "ambient dimension is not a square");
    s.intersect(&symmetric_matrix_space(s.field(), n))
}

/// Common radical of a set of cocycles:
/// `{v : v T_i = 0 and T_i v^t = 0 for all i}`.
pub fn radical(thetas: &[Cocycle]) -> Subspace {
    assert!(!thetas.is_empty(), "radical of an empty cocycle list");
    let n = thetas[0].dim();
    let f = thetas[0].matrix().field().clone();
    let mut rows = Vec::with_capacity(2 * n * thetas.len());
    for t in thetas {
        assert_eq!(t.dim(), n);
        let m = t.matrix();
        let mt = m.transpose();
        // v T = 0 stacks T^t; T v^t = 0 stacks T.
        for i in 0..n {
            rows.push(mt.row(i).to_vec());
            rows.push(m.row(i).to_vec());
        }
    }
    Matrix::from_rows(f, n, rows).kernel()
}

/// `Z^2`, `B^2` and canonical representatives for `H^2`, with the symmetric
/// variants of each.
#[derive(Debug, Clone)]
pub struct CohomologySpaces {
    field: FieldSpec,
    n: usize,
    pub z2: Subspace,
    pub b2: Subspace,
    pub h2_reps: Vec<Cocycle>,
    pub sym_z2: Subspace,
    pub sym_b2: Subspace,
    pub sym_h2_reps: Vec<Cocycle>,
}

/// Compute the cohomology data of an algebra.
pub fn h2(a: &Algebra) -> CohomologySpaces {
    let n = a.dim();
    let field = a.field().clone();
    let z2 = cocycle_space(a);
    let b2 = coboundary_space(a);
    debug_assert!(b2.is_contained_in(&z2), "coboundaries must be cocycles");
    let h2_reps = complement_reps(&z2, &b2, &b2)
        .into_iter()
        .map(|v| Cocycle::from_matrix_unchecked(unflatten(&field, n, &v)))
        .collect();
    let sym_z2 = symmetric_subspace(&z2);
    let sym_b2 = symmetric_subspace(&b2);
    let sym_h2_reps = complement_reps(&sym_z2, &sym_b2, &b2)
        .into_iter()
        .map(|v| Cocycle::from_matrix_unchecked(unflatten(&field, n, &v)))
        .collect();
    CohomologySpaces { field, n, z2, b2, h2_reps, sym_z2, sym_b2, sym_h2_reps }
}

/// Basis of a complement of `sub` inside `z`, with every vector reduced
/// modulo `reduce_against` (canonical coset representatives).
fn complement_reps(z: &Subspace, sub: &Subspace, reduce_against: &Subspace) -> Vec<Vec<FieldElement>> {
    let mut span = sub.clone();
    let mut reps = Vec::new();
    for i in 0..z.dim() {
        let r = span.reduce_mod(z.basis_row(i));
        if r.iter().any(|c| c.0 != 0) {
            reps.push(reduce_against.reduce_mod(&r));
            span = span.sum(&Subspace::from_rows(
                span.field().clone(),
                span.ambient_dim(),
                vec![r],
            ));
        }
    }
    reps
}

impl CohomologySpaces {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn dim_z2(&self) -> usize {
        self.z2.dim()
    }

    pub fn dim_b2(&self) -> usize {
        self.b2.dim()
    }

    pub fn dim_h2(&self) -> usize {
        self.h2_reps.len()
    }

    pub fn dim_sym_z2(&self) -> usize {
        self.sym_z2.dim()
    }

    pub fn dim_sym_b2(&self) -> usize {
        self.sym_b2.dim()
    }

    pub fn dim_sym_h2(&self) -> usize {
        self.sym_h2_reps.len()
    }

    pub fn reps(&self, symmetric: bool) -> &[Cocycle] {
        if symmetric {
            &self.sym_h2_reps
        } else {
            &self.h2_reps
        }
    }

    /// The cocycle `sum_t coords[t] * rep_t`.
    pub fn lift(&self, coords: &[FieldElement], symmetric: bool) -> Cocycle {
        let reps = self.reps(symmetric);
        assert_eq!(coords.len(), reps.len());
        let f = &self.field;
        let mut acc = vec![FieldElement(0); self.n * self.n];
        for (c, rep) in coords.iter().zip(reps) {
            if c.0 == 0 {
                continue;
            }
            for (a, r) in acc.iter_mut().zip(rep.flatten()) {
                *a = f.add(*a, f.mul(*c, r));
            }
        }
        Cocycle::from_matrix_unchecked(unflatten(&self.field, self.n, &acc))
    }

    /// Canonical coset representative of a flattened cocycle.
    pub fn reduce(&self, flat: &[FieldElement]) -> Vec<FieldElement> {
        self.b2.reduce_mod(flat)
    }

    /// Coordinates of a reduced flattened cocycle with respect to the chosen
    /// representative basis, if it lies in its span.
    pub fn coordinates(&self, reduced: &[FieldElement], symmetric: bool) -> Option<Vec<FieldElement>> {
        let reps = self.reps(symmetric);
        if reps.is_empty() {
            return if reduced.iter().all(|c| c.0 == 0) {
                Some(Vec::new())
            } else {
                None
            };
        }
        let rows: Vec<Vec<FieldElement>> = reps.iter().map(|r| r.flatten()).collect();
        let rep_matrix = Matrix::from_rows(self.field.clone(), self.n * self.n, rows);
        // Solve coords . reps = reduced, i.e. reps^t coords^t = reduced^t.
        rep_matrix.transpose().solve(reduced)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn f(p: u32, m: u32) -> FieldSpec {
        make_field(p, m).unwrap()
    }

    fn a11(field: &FieldSpec) -> Algebra {
        Algebra::zero(field.clone(), 1)
    }

    fn a21(field: &FieldSpec) -> Algebra {
        Algebra::zero(field.clone(), 2)
    }

    fn a22(field: &FieldSpec) -> Algebra {
        Algebra::from_products(field.clone(), 2, &[(0, 0, vec![(1, field.element(1))])])
    }

    fn a36(field: &FieldSpec) -> Algebra {
        let one = field.element(1);
        Algebra::from_products(
            field.clone(),
            3,
            &[
                (0, 0, vec![(1, one)]),
                (0, 1, vec![(2, one)]),
                (1, 0, vec![(2, one)]),
            ],
        )
    }

    /// Flattened matrix with a single 1 at (i, j).
    fn delta(field: &FieldSpec, n: usize, i: usize, j: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement(0); n * n];
        v[i * n + j] = field.element(1);
        v
    }

    fn add_vecs(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
    }

    #[test]
    fn cocycle_space_examples() {
        for field in [f(2, 1), f(3, 1), f(5, 1)] {
            // Zero algebra on two generators: every bilinear map is a cocycle.
            assert_eq!(cocycle_space(&a21(&field)).dim(), 4);
            // a^2 = b: spanned by D_aa and D_ab + D_ba.
            let z = cocycle_space(&a22(&field));
            assert_eq!(z.dim(), 2);
            assert!(z.contains(&delta(&field, 2, 0, 0)));
            let sym = add_vecs(&field, &delta(&field, 2, 0, 1), &delta(&field, 2, 1, 0));
            assert!(z.contains(&sym));
            // One-dimensional zero algebra: spanned by D_aa.
            let z1 = cocycle_space(&a11(&field));
            assert_eq!(z1.dim(), 1);
            assert!(z1.contains(&delta(&field, 1, 0, 0)));
        }
    }

    #[test]
    fn coboundary_space_examples() {
        let f3 = f(3, 1);
        assert_eq!(coboundary_space(&a21(&f3)).dim(), 0);
        let b = coboundary_space(&a22(&f3));
        assert_eq!(b.dim(), 1);
        assert!(b.contains(&delta(&f3, 2, 0, 0)));

        // Oracle for a^2 = b, ab = ba = c: build the matrices M^(k) by hand
        // from the table and take their rank.
        let mut rows = Vec::new();
        for k in 0..3usize {
            let mut row = vec![FieldElement(0); 9];
            // products: (0,0) -> e_1, (0,1) -> e_2, (1,0) -> e_2
            if k == 1 {
                row[0] = f3.element(1); // M^(1)_{00}
            }
            if k == 2 {
                row[1] = f3.element(1); // M^(2)_{01}
                row[3] = f3.element(1); // M^(2)_{10}
            }
            rows.push(row);
        }
        let oracle_rank = Matrix::from_rows(f3.clone(), 9, rows).rank();
        assert_eq!(oracle_rank, 2);
        assert_eq!(coboundary_space(&a36(&f3)).dim(), oracle_rank);
    }

    #[test]
    fn cocycle_identity_checked_on_construction() {
        let f3 = f(3, 1);
        let a = a22(&f3);
        let z = cocycle_space(&a);
        for i in 0..z.dim() {
            let m = unflatten(&f3, 2, z.basis_row(i));
            assert!(Cocycle::new(&a, m).is_ok());
        }
        // D_ba alone is not a cocycle of a^2 = b.
        let bad = unflatten(&f3, 2, &delta(&f3, 2, 1, 0));
        assert!(matches!(Cocycle::new(&a, bad), Err(Error::NotACocycle)));
    }

    #[test]
    fn h2_dimensions_and_representatives() {
        for field in [f(2, 1), f(3, 1), f(5, 1)] {
            let h = h2(&a22(&field));
            assert_eq!(h.dim_z2(), 2);
            assert_eq!(h.dim_b2(), 1);
            assert_eq!(h.dim_h2(), 1);
            // The canonical representative is exactly D_ab + D_ba.
            let expected = add_vecs(&field, &delta(&field, 2, 0, 1), &delta(&field, 2, 1, 0));
            assert_eq!(h.h2_reps[0].flatten(), expected);

            let h = h2(&a21(&field));
            assert_eq!(h.dim_h2(), 4);
            assert_eq!(h.dim_b2(), 0);

            // Representatives are reduced and stay reduced.
            for rep in &h.h2_reps {
                assert_eq!(h.reduce(&rep.flatten()), rep.flatten());
            }
        }
    }

    #[test]
    fn symmetric_parts() {
        let f5 = f(5, 1);
        let z = cocycle_space(&a21(&f5));
        let sym = symmetric_subspace(&z);
        assert_eq!(sym.dim(), 3);
        assert!(sym.contains(&delta(&f5, 2, 0, 0)));
        assert!(sym.contains(&add_vecs(&f5, &delta(&f5, 2, 0, 1), &delta(&f5, 2, 1, 0))));
        assert!(sym.contains(&delta(&f5, 2, 1, 1)));

        // An antisymmetric line meets the symmetric space trivially over F_5.
        let anti = Subspace::from_rows(
            f5.clone(),
            4,
            vec![add_vecs(
                &f5,
                &delta(&f5, 2, 0, 1),
                &delta(&f5, 2, 1, 0).iter().map(|&c| f5.neg(c)).collect::<Vec<_>>(),
            )],
        );
        assert_eq!(symmetric_subspace(&anti).dim(), 0);

        // In characteristic 2, D_ab + D_ba is itself symmetric.
        let f2 = f(2, 1);
        let line = Subspace::from_rows(
            f2.clone(),
            4,
            vec![add_vecs(&f2, &delta(&f2, 2, 0, 1), &delta(&f2, 2, 1, 0))],
        );
        assert_eq!(symmetric_subspace(&line).dim(), 1);
    }

    #[test]
    fn symmetric_h2_of_a36_is_one_dimensional() {
        for field in [f(2, 1), f(3, 1), f(5, 1)] {
            let a = a36(&field);
            let h = h2(&a);
            assert_eq!(h.dim_sym_h2(), 1);
            // The representative is S_ac + S_bb up to a coboundary.
            let n = 3;
            let mut sigma = vec![FieldElement(0); n * n];
            sigma[0 * n + 2] = field.element(1);
            sigma[2 * n + 0] = field.element(1);
            sigma[1 * n + 1] = field.element(1);
            let rep = h.sym_h2_reps[0].flatten();
            let diff: Vec<FieldElement> =
                rep.iter().zip(&sigma).map(|(&x, &y)| field.sub(x, y)).collect();
            assert!(h.b2.contains(&diff));
        }
    }

    #[test]
    fn radical_examples() {
        let f3 = f(3, 1);
        let a = a21(&f3);
        let daa = Cocycle::new(&a, unflatten(&f3, 2, &delta(&f3, 2, 0, 0))).unwrap();
        let r = radical(&[daa.clone()]);
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&[f3.element(0), f3.element(1)]));

        let dbb = Cocycle::new(&a, unflatten(&f3, 2, &delta(&f3, 2, 1, 1))).unwrap();
        assert_eq!(radical(&[daa, dbb]).dim(), 0);
    }

    #[test]
    fn radical_of_a33_always_contains_c() {
        // a^2 = alpha c, b^2 = c: every cocycle kills c on both sides.
        for field in [f(3, 1), f(5, 1)] {
            for alpha in 1..field.q() {
                let a = Algebra::from_products(
                    field.clone(),
                    3,
                    &[
                        (0, 0, vec![(2, field.element(alpha))]),
                        (1, 1, vec![(2, field.element(1))]),
                    ],
                );
                let z = cocycle_space(&a);
                let c = [field.element(0), field.element(0), field.element(1)];
                for i in 0..z.dim() {
                    let t = Cocycle::new(&a, unflatten(&field, 3, z.basis_row(i))).unwrap();
                    assert!(radical(&[t]).contains(&c));
                }
            }
        }
    }

    #[test]
    fn lift_and_coordinates_roundtrip() {
        let f3 = f(3, 1);
        let h = h2(&a21(&f3));
        let coords = vec![f3.element(1), f3.element(2), f3.element(0), f3.element(1)];
        let lifted = h.lift(&coords, false);
        let reduced = h.reduce(&lifted.flatten());
        assert_eq!(h.coordinates(&reduced, false).unwrap(), coords);
    }
}
