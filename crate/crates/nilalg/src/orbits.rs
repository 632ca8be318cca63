//! Automorphism groups, their action on cohomology, orbit enumeration of
//! useful subspaces, and the central-extension construction.
//!
//! A subspace of `H^2` is *useful* when the common radical of (canonical
//! lifts of) its cocycles meets the multiplication kernel trivially; the
//! extensions built from one orbit of useful subspaces are isomorphic, and
//! extensions from different orbits are not. Orbits are found by breadth
//! first search with generator actions and canonical-subspace hashing.

use std::collections::{HashSet, VecDeque};

use crate::algebra::Algebra;
use crate::cohomology::{self, Cocycle, CohomologySpaces};
use crate::field::{FieldElement, FieldSpec};
use crate::isomorphism::all_isomorphisms;
use crate::linalg::{enumerate_subspaces, Matrix, Subspace};
use crate::{Error, Result};

/// An algebra automorphism; columns of the matrix are the images of the
/// basis vectors, so a row vector `v` maps to `v P^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    matrix: Matrix,
}

impl Automorphism {
    /// Checked constructor: the matrix must be an invertible multiplicative
    /// self-map of `a`.
    pub fn new(a: &Algebra, matrix: Matrix) -> Result<Automorphism> {
        if !crate::isomorphism::verify_morphism(a, a, &matrix) {
            return Err(Error::InvalidAlgebra(
                "matrix is not an automorphism of the algebra".into(),
            ));
        }
        Ok(Automorphism { matrix })
    }

    pub fn from_matrix_unchecked(matrix: Matrix) -> Automorphism {
        assert_eq!(matrix.rows(), matrix.cols());
        Automorphism { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        self.matrix.transpose().mul_vec_left(v)
    }
}

/// The automorphism group of an algebra: always a generating set, the full
/// element list whenever it was enumerated, and the group order.
#[derive(Debug, Clone)]
pub struct AutGroup {
    pub order: u128,
    pub generators: Vec<Automorphism>,
    pub elements: Option<Vec<Automorphism>>,
}

/// Order of `GL_n(F_q)`.
pub fn gl_order(field: &FieldSpec, n: usize) -> u128 {
    let q = field.q() as u128;
    let qn = q.pow(n as u32);
    (0..n as u32).map(|i| qn - q.pow(i)).product()
}

/// A generating set for `GL_n(F_q)`: a primitive scaling, the basis cycle,
/// and one transvection. Elementary row operations are products of their
/// conjugates, so these generate the whole group.
pub fn gl_generators(field: &FieldSpec, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    let zeta = field.primitive_element();
    if zeta != field.one() {
        let mut d = Matrix::identity(field.clone(), n);
        d[(0, 0)] = zeta;
        gens.push(d);
    }
    if n >= 2 {
        let mut cycle = Matrix::zeros(field.clone(), n, n);
        for j in 0..n {
            cycle[((j + 1) % n, j)] = field.one();
        }
        gens.push(cycle);
        let mut trans = Matrix::identity(field.clone(), n);
        trans[(0, 1)] = field.one();
        gens.push(trans);
    }
    gens
}

const GL_SCAN_GUARD: u128 = 100_000_000;

/// Compute `Aut(A)`. The zero algebra gets the standard `GL_n` generators
/// and the order formula without an element list; otherwise the full
/// element list is found by backtracking over images of a generating set.
pub fn automorphism_group(a: &Algebra) -> Result<AutGroup> {
    let n = a.dim();
    let field = a.field().clone();
    if a.square_subspace().dim() == 0 {
        return Ok(AutGroup {
            order: gl_order(&field, n),
            generators: gl_generators(&field, n)
                .into_iter()
                .map(Automorphism::from_matrix_unchecked)
                .collect(),
            elements: None,
        });
    }
    if gl_order(&field, n) > GL_SCAN_GUARD {
        return Err(Error::GuardExceeded(format!(
            "GL_{n}({}) has more than {GL_SCAN_GUARD} elements",
            field.q()
        )));
    }
    let elements: Vec<Automorphism> = all_isomorphisms(a, a)?
        .into_iter()
        .map(Automorphism::from_matrix_unchecked)
        .collect();
    Ok(AutGroup {
        order: elements.len() as u128,
        generators: elements.clone(),
        elements: Some(elements),
    })
}

/// The action of an automorphism on a scalar cocycle: `T -> P^t T P`.
pub fn act_on_cocycle(phi: &Automorphism, theta: &Cocycle) -> Cocycle {
    let p = phi.matrix();
    let m = p.transpose().matmul(theta.matrix()).matmul(p);
    Cocycle::from_matrix_unchecked(m)
}

/// The induced action on a subspace of `H^2` expressed in representative
/// coordinates: act on each basis cocycle, reduce modulo `B^2`, and express
/// the result in the representative basis again.
pub fn act_on_h2_subspace(
    phi: &Automorphism,
    omega: &Subspace,
    h: &CohomologySpaces,
    symmetric: bool,
) -> Subspace {
    let hdim = h.reps(symmetric).len();
    assert_eq!(omega.ambient_dim(), hdim);
    let mut rows = Vec::with_capacity(omega.dim());
    for i in 0..omega.dim() {
        let theta = h.lift(omega.basis_row(i), symmetric);
        let moved = act_on_cocycle(phi, &theta);
        let reduced = h.reduce(&moved.flatten());
        let coords = h
            .coordinates(&reduced, symmetric)
            .expect("the action preserves the span of the representatives");
        rows.push(coords);
    }
    Subspace::from_rows(h.field().clone(), hdim, rows)
}

/// All `s`-dimensional subspaces of `H^2` (or of its symmetric part) whose
/// lifted cocycle tuple has radical meeting `C(A)` trivially.
pub fn useful_subspaces(
    a: &Algebra,
    h: &CohomologySpaces,
    s: usize,
    symmetric: bool,
) -> Vec<Subspace> {
    assert!(s >= 1, "usefulness concerns positive-dimensional subspaces");
    let hdim = h.reps(symmetric).len();
    if s > hdim {
        return Vec::new();
    }
    let kernel = a.multiplication_kernel();
    let mut out = Vec::new();
    for omega in enumerate_subspaces(h.field(), hdim, s) {
        let thetas: Vec<Cocycle> = (0..omega.dim())
            .map(|i| h.lift(omega.basis_row(i), symmetric))
            .collect();
        let rad = cohomology::radical(&thetas);
        if rad.intersect(&kernel).dim() == 0 {
            out.push(omega);
        }
    }
    out
}

/// One canonical representative per `Aut(A)`-orbit on the useful
/// `s`-dimensional subspaces, together with the orbit sizes. Orbits are
/// explored with the group's generators; the representative is the
/// minimal canonical basis in its orbit and the list is sorted by it.
pub fn orbit_representatives(
    a: &Algebra,
    s: usize,
    symmetric: bool,
) -> Result<Vec<(Subspace, usize)>> {
    let h = cohomology::h2(a);
    let aut = automorphism_group(a)?;
    orbit_representatives_with(a, &h, &aut, s, symmetric)
}

/// Orbit enumeration with precomputed cohomology and automorphism data.
pub fn orbit_representatives_with(
    a: &Algebra,
    h: &CohomologySpaces,
    aut: &AutGroup,
    s: usize,
    symmetric: bool,
) -> Result<Vec<(Subspace, usize)>> {
    let useful = useful_subspaces(a, h, s, symmetric);
    let useful_set: HashSet<Subspace> = useful.iter().cloned().collect();
    let mut visited: HashSet<Subspace> = HashSet::new();
    let mut out: Vec<(Subspace, usize)> = Vec::new();
    for seed in &useful {
        if visited.contains(seed) {
            continue;
        }
        let mut queue = VecDeque::new();
        let mut rep = seed.clone();
        let mut size = 0usize;
        visited.insert(seed.clone());
        queue.push_back(seed.clone());
        while let Some(cur) = queue.pop_front() {
            size += 1;
            if cur.sort_key() < rep.sort_key() {
                rep = cur.clone();
            }
            for g in &aut.generators {
                let next = act_on_h2_subspace(g, &cur, h, symmetric);
                if !visited.contains(&next) {
                    assert!(
                        useful_set.contains(&next),
                        "the automorphism action must preserve usefulness"
                    );
                    visited.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        out.push((rep, size));
    }
    out.sort_by_key(|(rep, _)| rep.sort_key());
    let total: usize = out.iter().map(|(_, n)| n).sum();
    assert_eq!(total, useful.len(), "orbit sizes must sum to the useful count");
    Ok(out)
}

/// Central extension of `a` by the span of the given cocycles: the algebra
/// on `n + s` coordinates with `c_{ij}^{n+t} = theta_t(e_i, e_j)` and the
/// adjoined coordinates multiplying to zero. The cocycles must be linearly
/// independent modulo `B^2`, otherwise the result would split off a central
/// component.
pub fn central_extension(a: &Algebra, cocycles: &[Cocycle]) -> Result<Algebra> {
    assert!(!cocycles.is_empty());
    let n = a.dim();
    for c in cocycles {
        if !cohomology::satisfies_cocycle_identity(a, c.matrix()) {
            return Err(Error::NotACocycle);
        }
    }
    let b2 = cohomology::coboundary_space(a);
    let reduced: Vec<Vec<FieldElement>> =
        cocycles.iter().map(|c| b2.reduce_mod(&c.flatten())).collect();
    let span = Subspace::from_rows(a.field().clone(), n * n, reduced);
    if span.dim() != cocycles.len() {
        return Err(Error::DependentCocycles);
    }
    Ok(central_extension_unchecked(
        a,
        &cocycles.iter().map(|c| c.matrix().clone()).collect::<Vec<_>>(),
    ))
}

/// Extension construction without the cocycle and independence checks;
/// callers supply arbitrary bilinear maps at their own risk.
pub fn central_extension_unchecked(a: &Algebra, mats: &[Matrix]) -> Algebra {
    let n = a.dim();
    let s = mats.len();
    let mut out = Algebra::zero(a.field().clone(), n + s);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_sc(i, j, k, a.sc(i, j, k));
            }
            for (t, m) in mats.iter().enumerate() {
                assert_eq!(m.rows(), n);
                out.set_sc(i, j, n + t, m[(i, j)]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{h2, unflatten};
    use crate::field::make_field;

    fn f(p: u32, m: u32) -> FieldSpec {
        make_field(p, m).unwrap()
    }

    fn a22(field: &FieldSpec) -> Algebra {
        Algebra::from_products(field.clone(), 2, &[(0, 0, vec![(1, field.element(1))])])
    }

    fn a32(field: &FieldSpec) -> Algebra {
        Algebra::from_products(field.clone(), 3, &[(0, 0, vec![(1, field.element(1))])])
    }

    fn delta(field: &FieldSpec, n: usize, i: usize, j: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement(0); n * n];
        v[i * n + j] = field.element(1);
        v
    }

    fn add_vecs(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
    }

    /// Brute-force enumeration of all invertible n x n matrices.
    fn all_invertible(field: &FieldSpec, n: usize) -> Vec<Matrix> {
        let q = field.q() as u64;
        let total = q.pow((n * n) as u32);
        let mut out = Vec::new();
        for enc in 0..total {
            let mut rest = enc;
            let mut data = Vec::with_capacity(n * n);
            for _ in 0..n * n {
                data.push(FieldElement((rest % q) as u32));
                rest /= q;
            }
            let m = Matrix::new(field.clone(), n, n, data);
            if m.inverse().is_some() {
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn gl_generators_generate_the_group() {
        for (p, m, n) in [(2, 1, 2), (3, 1, 2), (5, 1, 2), (7, 1, 2), (2, 2, 2), (3, 2, 2), (2, 3, 2), (2, 1, 3), (3, 1, 3), (2, 2, 3), (2, 1, 4)] {
            let field = f(p, m);
            let gens = gl_generators(&field, n);
            let id = Matrix::identity(field.clone(), n);
            let mut seen: HashSet<Vec<u32>> = HashSet::new();
            let key = |m: &Matrix| m.data().iter().map(|e| e.0).collect::<Vec<u32>>();
            let mut queue = VecDeque::new();
            seen.insert(key(&id));
            queue.push_back(id);
            while let Some(cur) = queue.pop_front() {
                for g in &gens {
                    let next = cur.matmul(g);
                    if seen.insert(key(&next)) {
                        queue.push_back(next);
                    }
                }
            }
            assert_eq!(seen.len() as u128, gl_order(&field, n), "GL_{n}(F_{})", field.q());
        }
    }

    #[test]
    fn automorphism_group_of_zero_algebra_uses_the_formula() {
        for q in [2u32, 3, 5, 7] {
            let field = f(q, 1);
            let aut = automorphism_group(&Algebra::zero(field.clone(), 2)).unwrap();
            let q = q as u128;
            assert_eq!(aut.order, (q * q - 1) * (q * q - q));
            assert!(aut.elements.is_none());
        }
    }

    #[test]
    fn automorphism_group_of_a22_matches_brute_force() {
        let f3 = f(3, 1);
        let a = a22(&f3);
        let aut = automorphism_group(&a).unwrap();
        // Oracle: filter all 48 invertible 2 x 2 matrices by the
        // homomorphism condition.
        let brute: Vec<Matrix> = all_invertible(&f3, 2)
            .into_iter()
            .filter(|p| crate::isomorphism::verify_morphism(&a, &a, p))
            .collect();
        assert_eq!(brute.len(), 6);
        assert_eq!(aut.order, 6);
        let keys: HashSet<Vec<u32>> = aut
            .elements
            .unwrap()
            .iter()
            .map(|a| a.matrix().data().iter().map(|e| e.0).collect())
            .collect();
        for b in &brute {
            assert!(keys.contains(&b.data().iter().map(|e| e.0).collect::<Vec<u32>>()));
        }
    }

    #[test]
    fn automorphism_group_of_a32_matches_brute_force_and_formula() {
        let f3 = f(3, 1);
        let a = a32(&f3);
        let aut = automorphism_group(&a).unwrap();
        let brute = all_invertible(&f3, 3)
            .into_iter()
            .filter(|p| crate::isomorphism::verify_morphism(&a, &a, p))
            .count();
        // Images: a -> ua + *b + *c, b -> u^2 b, c -> *b + wc; q^3 (q-1)^2 maps.
        assert_eq!(brute as u128, 27 * 4);
        assert_eq!(aut.order, brute as u128);
    }

    #[test]
    fn automorphism_group_of_a11_is_trivial_over_f2() {
        let f2 = f(2, 1);
        let aut = automorphism_group(&Algebra::zero(f2, 1)).unwrap();
        assert_eq!(aut.order, 1);
    }

    #[test]
    fn act_on_cocycle_examples() {
        let f5 = f(5, 1);
        let a = Algebra::zero(f5.clone(), 2);
        let daa = Cocycle::new(&a, unflatten(&f5, 2, &delta(&f5, 2, 0, 0))).unwrap();

        let id = Automorphism::from_matrix_unchecked(Matrix::identity(f5.clone(), 2));
        assert_eq!(act_on_cocycle(&id, &daa), daa);

        let swap =
            Automorphism::from_matrix_unchecked(Matrix::from_ints(f5.clone(), vec![
                vec![0, 1],
                vec![1, 0],
            ]));
        assert_eq!(act_on_cocycle(&swap, &daa).flatten(), delta(&f5, 2, 1, 1));

        let diag =
            Automorphism::from_matrix_unchecked(Matrix::from_ints(f5.clone(), vec![
                vec![2, 0],
                vec![0, 1],
            ]));
        let moved = act_on_cocycle(&diag, &daa);
        let mut expected = vec![FieldElement(0); 4];
        expected[0] = f5.element(4);
        assert_eq!(moved.flatten(), expected);
    }

    #[test]
    fn act_on_h2_subspace_examples() {
        let f3 = f(3, 1);
        let a = Algebra::zero(f3.clone(), 2);
        let h = h2(&a);

        let line = Subspace::from_rows(
            f3.clone(),
            h.dim_sym_h2(),
            vec![vec![f3.element(1), f3.element(0), f3.element(1)]],
        );
        let id = Automorphism::from_matrix_unchecked(Matrix::identity(f3.clone(), 2));
        assert_eq!(act_on_h2_subspace(&id, &line, &h, true), line);

        // diag(1, 2) fixes S_aa + S_bb because 2^2 = 1.
        let diag =
            Automorphism::from_matrix_unchecked(Matrix::from_ints(f3.clone(), vec![
                vec![1, 0],
                vec![0, 2],
            ]));
        assert_eq!(act_on_h2_subspace(&diag, &line, &h, true), line);

        // On the one-dimensional H^2 of a^2 = b every automorphism fixes
        // the only line.
        let a = a22(&f3);
        let h = h2(&a);
        let full = Subspace::full(f3.clone(), h.dim_h2());
        for phi in automorphism_group(&a).unwrap().elements.unwrap() {
            assert_eq!(act_on_h2_subspace(&phi, &full, &h, false), full);
        }
    }

    #[test]
    fn useful_subspace_counts() {
        // One-dimensional algebra: no 2-dimensional subspaces exist at all.
        let f3 = f(3, 1);
        let a = Algebra::zero(f3.clone(), 1);
        let h = h2(&a);
        assert!(useful_subspaces(&a, &h, 2, false).is_empty());

        // a^2 = alpha c, b^2 = c never has useful lines: c is always radical.
        let a33 = Algebra::from_products(
            f3.clone(),
            3,
            &[
                (0, 0, vec![(2, f3.element(1))]),
                (1, 1, vec![(2, f3.element(1))]),
            ],
        );
        let h = h2(&a33);
        assert!(useful_subspaces(&a33, &h, 1, false).is_empty());

        // Zero algebra on two generators over F_2: 12 of the 15 lines of the
        // 4-dimensional H^2 are useful. Oracle: enumerate the 15 nonzero
        // matrices directly and test radical = 0.
        let f2 = f(2, 1);
        let z2 = Algebra::zero(f2.clone(), 2);
        let h = h2(&z2);
        let useful = useful_subspaces(&z2, &h, 1, false);
        let mut oracle = 0;
        for enc in 1u32..16 {
            let data: Vec<FieldElement> =
                (0..4).map(|b| FieldElement((enc >> b) & 1)).collect();
            let t = Cocycle::from_matrix_unchecked(unflatten(&f2, 2, &data));
            if cohomology::radical(&[t]).dim() == 0 {
                oracle += 1;
            }
        }
        assert_eq!(oracle, 12);
        assert_eq!(useful.len(), 12);
    }

    #[test]
    fn orbit_reps_for_lines_over_zero_algebra_f3() {
        // Full H^2 of the 2-dimensional zero algebra over F_3: six orbits.
        // Oracle: partition the useful lines by brute-force conjugacy under
        // all of GL_2(F_3).
        let f3 = f(3, 1);
        let a = Algebra::zero(f3.clone(), 2);
        let h = h2(&a);
        let useful = useful_subspaces(&a, &h, 1, false);
        let reps = orbit_representatives(&a, 1, false).unwrap();
        assert_eq!(reps.len(), 6);
        assert_eq!(reps.iter().map(|(_, n)| n).sum::<usize>(), useful.len());

        let gl = all_invertible(&f3, 2);
        let mut orbit_of: Vec<Option<usize>> = vec![None; useful.len()];
        let mut orbit_count = 0;
        for i in 0..useful.len() {
            if orbit_of[i].is_some() {
                continue;
            }
            orbit_of[i] = Some(orbit_count);
            for g in &gl {
                let phi = Automorphism::from_matrix_unchecked(g.clone());
                let moved = act_on_h2_subspace(&phi, &useful[i], &h, false);
                let j = useful.iter().position(|u| *u == moved).unwrap();
                orbit_of[j] = Some(orbit_count);
            }
            orbit_count += 1;
        }
        assert_eq!(orbit_count, 6);
    }

    #[test]
    fn one_orbit_for_a22_lines() {
        for q in [2u32, 3, 5] {
            let field = f(q, 1);
            let a = a22(&field);
            let reps = orbit_representatives(&a, 1, false).unwrap();
            assert_eq!(reps.len(), 1);
        }
    }

    #[test]
    fn symmetric_two_dimensional_orbits_over_f2() {
        // Symmetric H^2 of the zero algebra on two generators over F_2 is
        // 3-dimensional; all 7 planes are useful and split into 3 orbits.
        // Oracle: brute-force conjugacy under the 6 elements of GL_2(F_2).
        let f2 = f(2, 1);
        let a = Algebra::zero(f2.clone(), 2);
        let h = h2(&a);
        let useful = useful_subspaces(&a, &h, 2, true);
        assert_eq!(useful.len(), 7);

        let gl = all_invertible(&f2, 2);
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut assigned = vec![false; useful.len()];
        for i in 0..useful.len() {
            if assigned[i] {
                continue;
            }
            let mut members = vec![i];
            assigned[i] = true;
            for g in &gl {
                let phi = Automorphism::from_matrix_unchecked(g.clone());
                let moved = act_on_h2_subspace(&phi, &useful[i], &h, true);
                let j = useful.iter().position(|u| *u == moved).unwrap();
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(j);
                }
            }
            orbits.push(members);
        }
        assert_eq!(orbits.len(), 3);
        let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 3]);

        let reps = orbit_representatives(&a, 2, true).unwrap();
        assert_eq!(reps.len(), 3);
        let mut rep_sizes: Vec<usize> = reps.iter().map(|&(_, n)| n).collect();
        rep_sizes.sort();
        assert_eq!(rep_sizes, sizes);
    }

    #[test]
    fn central_extension_examples() {
        let f3 = f(3, 1);

        // a^2 = b extended by D_ab + D_ba gives a^2 = b, ab = ba = c.
        let a = a22(&f3);
        let theta = Cocycle::new(
            &a,
            unflatten(&f3, 2, &add_vecs(&f3, &delta(&f3, 2, 0, 1), &delta(&f3, 2, 1, 0))),
        )
        .unwrap();
        let ext = central_extension(&a, &[theta]).unwrap();
        assert!(ext.is_associative());
        assert_eq!(ext.sc(0, 0, 1), f3.element(1));
        assert_eq!(ext.sc(0, 1, 2), f3.element(1));
        assert_eq!(ext.sc(1, 0, 2), f3.element(1));

        // The 1-dimensional zero algebra extended by D_aa gives a^2 = b.
        let a1 = Algebra::zero(f3.clone(), 1);
        let daa = Cocycle::new(&a1, unflatten(&f3, 1, &delta(&f3, 1, 0, 0))).unwrap();
        assert_eq!(central_extension(&a1, &[daa]).unwrap(), a22(&f3));

        // The 3-dimensional zero algebra extended by S_aa + S_bb + S_cc.
        let z3 = Algebra::zero(f3.clone(), 3);
        let mut m = vec![FieldElement(0); 9];
        m[0] = f3.element(1);
        m[4] = f3.element(1);
        m[8] = f3.element(1);
        let theta = Cocycle::new(&z3, unflatten(&f3, 3, &m)).unwrap();
        let ext = central_extension(&z3, &[theta]).unwrap();
        assert_eq!(ext.dim(), 4);
        for i in 0..3 {
            assert_eq!(ext.sc(i, i, 3), f3.element(1));
        }
        assert!(ext.is_associative() && ext.is_commutative() && ext.is_nilpotent());
    }

    #[test]
    fn central_extension_rejects_bad_input() {
        let f3 = f(3, 1);
        let a = a22(&f3);
        // D_ba alone is not a cocycle.
        let bad = Cocycle::from_matrix_unchecked(unflatten(&f3, 2, &delta(&f3, 2, 1, 0)));
        assert!(matches!(
            central_extension(&a, &[bad]),
            Err(Error::NotACocycle)
        ));
        // D_aa is a coboundary of a^2 = b: dependent modulo B^2.
        let cob = Cocycle::new(&a, unflatten(&f3, 2, &delta(&f3, 2, 0, 0))).unwrap();
        assert!(matches!(
            central_extension(&a, &[cob]),
            Err(Error::DependentCocycles)
        ));
    }

    #[test]
    fn extension_kernel_is_the_adjoined_space_for_useful_lines() {
        let f3 = f(3, 1);
        let a = Algebra::zero(f3.clone(), 2);
        let h = h2(&a);
        for omega in useful_subspaces(&a, &h, 1, false) {
            let theta = h.lift(omega.basis_row(0), false);
            let ext = central_extension(&a, &[theta]).unwrap();
            let kernel = ext.multiplication_kernel();
            assert_eq!(kernel.dim(), 1);
            assert!(kernel.contains(&[
                f3.element(0),
                f3.element(0),
                f3.element(1)
            ]));
            assert!(!ext.has_central_component());
        }
    }
}
