//! Brute-force isomorphism oracle for structure-constant algebras.
//!
//! The oracle is intentionally independent of the orbit machinery: it
//! decides isomorphism by backtracking over images of a minimal generating
//! set, so its verdicts can cross-check the extension construction.
//!
//! The search plan is built once per left-hand algebra: pick standard basis
//! vectors spanning `A / A^2`, grow a product basis from them, and record
//! every multiplicative relation as a constraint scheduled at the earliest
//! stage where all of its ingredients are determined. At full depth the
//! candidate map is assembled, checked for invertibility and verified on
//! all basis pairs before it is reported.

use crate::algebra::Algebra;
use crate::cohomology::{coboundary_space, cocycle_space, symmetric_subspace};
use crate::field::FieldElement;
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// Basis-independent data attached to an algebra; equal for isomorphic
/// algebras, used to reject most non-isomorphic pairs before any search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantVector {
    pub dim: usize,
    /// Dimensions of `A, A^2, A^3, ..` down to zero or stabilisation.
    pub power_dims: Vec<usize>,
    pub kernel_dim: usize,
    /// Dimension of `C(A)` meet `A^2`.
    pub kernel_in_square_dim: usize,
    pub commutative: bool,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub dim_sym_z2: usize,
    pub dim_sym_b2: usize,
    pub dim_sym_h2: usize,
}

pub fn invariant_vector(a: &Algebra) -> InvariantVector {
    let mut power_dims = vec![a.dim()];
    power_dims.extend(a.power_subspaces().iter().map(|s| s.dim()));
    let kernel = a.multiplication_kernel();
    let square = a.square_subspace();
    let z2 = cocycle_space(a);
    let b2 = coboundary_space(a);
    let sym_z2 = symmetric_subspace(&z2);
    let sym_b2 = symmetric_subspace(&b2);
    InvariantVector {
        dim: a.dim(),
        power_dims,
        kernel_in_square_dim: kernel.intersect(&square).dim(),
        kernel_dim: kernel.dim(),
        commutative: a.is_commutative(),
        dim_z2: z2.dim(),
        dim_b2: b2.dim(),
        dim_h2: z2.dim() - b2.dim(),
        dim_sym_z2: sym_z2.dim(),
        dim_sym_b2: sym_b2.dim(),
        dim_sym_h2: sym_z2.dim() - sym_b2.dim(),
    }
}

/// Check that `p` (columns = images of basis vectors) is an invertible
/// multiplicative map from `a` to `b` on all basis pairs.
pub fn verify_morphism(a: &Algebra, b: &Algebra, p: &Matrix) -> bool {
    if a.dim() != b.dim() || p.rows() != a.dim() || p.cols() != a.dim() {
        return false;
    }
    if p.inverse().is_none() {
        return false;
    }
    let images = p.transpose(); // row i = image of e_i
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            // The image of a vector v is v . P^t.
            let lhs = images.mul_vec_left(a.basis_product(i, j));
            let rhs = b.multiply(images.row(i), images.row(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Decide whether two algebras over the same field are isomorphic. Returns
/// a witness matrix (columns = images of the first algebra's basis) for a
/// positive, `None` after an exhausted search for a negative.
pub fn are_isomorphic(a: &Algebra, b: &Algebra) -> Result<Option<Matrix>> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let a_zero = a.square_subspace().dim() == 0;
    let b_zero = b.square_subspace().dim() == 0;
    if a_zero || b_zero {
        // Only the zero algebra has no products at all.
        return Ok(if a_zero && b_zero {
            Some(Matrix::identity(a.field().clone(), a.dim()))
        } else {
            None
        });
    }
    if invariant_vector(a) != invariant_vector(b) {
        return Ok(None);
    }
    let mut found = search_morphisms(a, b, false)?;
    Ok(found.pop())
}

/// All invertible multiplicative maps from `a` onto `b`. For `a == b` this
/// enumerates the automorphism group.
pub fn all_isomorphisms(a: &Algebra, b: &Algebra) -> Result<Vec<Matrix>> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.dim() != b.dim() {
        return Ok(Vec::new());
    }
    search_morphisms(a, b, true)
}

const NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug)]
enum Node {
    /// Standard basis vector chosen as a generator (assigned at its stage).
    Gen,
    /// Product of two earlier nodes.
    Prod(usize, usize),
}

#[derive(Debug)]
struct Constraint {
    u: usize,
    v: usize,
    /// `img(w_u) img(w_v) = sum_t coeffs[t] img(w_t)`.
    coeffs: Vec<FieldElement>,
}

struct Plan {
    k: usize,
    nodes: Vec<Node>,
    stages: Vec<usize>,
    /// Standard basis expressed in the node basis (row `i` = coords of `e_i`).
    std_in_nodes: Matrix,
    /// Constraints grouped by the stage at which they become checkable.
    constraints: Vec<Vec<Constraint>>,
}

fn build_plan(a: &Algebra) -> Result<Plan> {
    let n = a.dim();
    let f = a.field().clone();
    let a2 = a.square_subspace();

    // Generators: standard basis vectors spanning A / A^2.
    let mut gens = Vec::new();
    let mut span = a2.clone();
    for i in 0..n {
        let mut e = vec![FieldElement(0); n];
        e[i] = FieldElement(1);
        if !span.contains(&e) {
            gens.push(i);
            span = span.sum(&Subspace::from_rows(f.clone(), n, vec![e]));
        }
    }
    let k = gens.len();

    let mut nodes = Vec::new();
    let mut stages = Vec::new();
    let mut node_coords: Vec<Vec<FieldElement>> = Vec::new();
    for (slot, &g) in gens.iter().enumerate() {
        let mut e = vec![FieldElement(0); n];
        e[g] = FieldElement(1);
        nodes.push(Node::Gen);
        stages.push(slot + 1);
        node_coords.push(e);
    }
    let mut node_span = Subspace::from_rows(f.clone(), n, node_coords.clone());

    // Grow a basis by products, preferring pairs that complete early.
    while node_span.dim() < n {
        let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
        for u in 0..nodes.len() {
            for v in 0..nodes.len() {
                candidates.push((stages[u].max(stages[v]), u, v));
            }
        }
        candidates.sort();
        let mut grew = false;
        for (stage, u, v) in candidates {
            let p = a.multiply(&node_coords[u], &node_coords[v]);
            if !node_span.contains(&p) {
                nodes.push(Node::Prod(u, v));
                stages.push(stage);
                node_span = node_span.sum(&Subspace::from_rows(f.clone(), n, vec![p.clone()]));
                node_coords.push(p);
                grew = true;
                break;
            }
        }
        if !grew {
            return Err(Error::Unsupported(
                "algebra is not generated by its degree-one part".into(),
            ));
        }
    }

    let expr = Matrix::from_rows(f.clone(), n, node_coords.clone());
    let std_in_nodes = expr.inverse().expect("node vectors form a basis");

    // Every product of two node vectors is a relation; the pair that
    // defines a product node is a definition, not a constraint.
    let mut defining = vec![None; n];
    for (t, nd) in nodes.iter().enumerate() {
        if let Node::Prod(u, v) = nd {
            defining[t] = Some((*u, *v));
        }
    }
    let mut constraints: Vec<Vec<Constraint>> = (0..=k).map(|_| Vec::new()).collect();
    for u in 0..n {
        for v in 0..n {
            if defining.iter().any(|d| *d == Some((u, v))) {
                continue;
            }
            let p = a.multiply(&node_coords[u], &node_coords[v]);
            // p = coeffs . node_coords, so coeffs = p . expr^{-1}.
            let coeffs = std_in_nodes.mul_vec_left(&p);
            let mut stage = stages[u].max(stages[v]);
            for (t, c) in coeffs.iter().enumerate() {
                if c.0 != 0 {
                    stage = stage.max(stages[t]);
                }
            }
            constraints[stage].push(Constraint { u, v, coeffs });
        }
    }

    Ok(Plan { k, nodes, stages, std_in_nodes, constraints })
}

fn search_morphisms(a: &Algebra, b: &Algebra, collect_all: bool) -> Result<Vec<Matrix>> {
    let plan = build_plan(a)?;
    let n = a.dim();
    let f = a.field().clone();
    let q = f.q() as u128;
    let raw = q.pow(n as u32).saturating_pow(plan.k as u32);
    if raw > NODE_BUDGET as u128 {
        return Err(Error::GuardExceeded(format!(
            "isomorphism search space of {raw} candidate tuples"
        )));
    }

    let b2 = b.square_subspace();
    let mut state = SearchState {
        a,
        b,
        plan: &plan,
        imgs: vec![Vec::new(); n],
        out: Vec::new(),
        collect_all,
        nodes_visited: 0,
    };
    state.recurse(1, &b2)?;
    Ok(state.out)
}

struct SearchState<'a> {
    a: &'a Algebra,
    b: &'a Algebra,
    plan: &'a Plan,
    imgs: Vec<Vec<FieldElement>>,
    out: Vec<Matrix>,
    collect_all: bool,
    nodes_visited: u64,
}

impl SearchState<'_> {
    /// Returns `Ok(true)` when a witness was found and the caller may stop.
    fn recurse(&mut self, stage: usize, indep: &Subspace) -> Result<bool> {
        let n = self.a.dim();
        let f = self.a.field().clone();
        if stage > self.plan.k {
            let found = self.emit();
            return Ok(found && !self.collect_all);
        }
        let gen_node = self
            .plan
            .nodes
            .iter()
            .enumerate()
            .position(|(t, nd)| matches!(nd, Node::Gen) && self.plan.stages[t] == stage)
            .expect("one generator per stage");

        let q = f.q() as u64;
        let total = q.pow(n as u32);
        for enc in 0..total {
            self.nodes_visited += 1;
            if self.nodes_visited > NODE_BUDGET {
                return Err(Error::GuardExceeded(format!(
                    "isomorphism search exceeded {NODE_BUDGET} nodes"
                )));
            }
            let mut v = Vec::with_capacity(n);
            let mut rest = enc;
            for _ in 0..n {
                v.push(FieldElement((rest % q) as u32));
                rest /= q;
            }
            // Generator images must stay independent modulo B^2.
            if indep.contains(&v) {
                continue;
            }
            self.imgs[gen_node] = v.clone();

            // Determine product nodes completed at this stage.
            for t in 0..n {
                if self.plan.stages[t] == stage {
                    if let Node::Prod(u, w) = self.plan.nodes[t] {
                        self.imgs[t] = self.b.multiply(&self.imgs[u], &self.imgs[w]);
                    }
                }
            }
            // Check every relation that becomes decidable now.
            let mut ok = true;
            for c in &self.plan.constraints[stage] {
                let lhs = self.b.multiply(&self.imgs[c.u], &self.imgs[c.v]);
                let mut rhs = vec![FieldElement(0); n];
                for (t, coef) in c.coeffs.iter().enumerate() {
                    if coef.0 != 0 {
                        for (r, i) in rhs.iter_mut().zip(&self.imgs[t]) {
                            *r = f.add(*r, f.mul(*coef, *i));
                        }
                    }
                }
                if lhs != rhs {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let next_indep = indep.sum(&Subspace::from_rows(f.clone(), n, vec![v]));
            if self.recurse(stage + 1, &next_indep)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Assemble the candidate matrix, verify it, and record it.
    fn emit(&mut self) -> bool {
        let n = self.a.dim();
        let f = self.a.field().clone();
        let node_imgs = Matrix::from_rows(f, n, self.imgs.clone());
        // Row i of std_in_nodes gives e_i in node coordinates, so the image
        // of e_i is that row times the node image matrix.
        let std_imgs = self.plan.std_in_nodes.matmul(&node_imgs);
        let p = std_imgs.transpose(); // columns = images
        if verify_morphism(self.a, self.b, &p) {
            self.out.push(p);
            true
        } else {
            false
        }
    }
}
