//! Finite-dimensional associative algebras given by structure constants
//! over a [`FieldSpec`]: group algebras, ideals and subalgebras with
//! canonical echelon bases, idempotent scans, annihilators, multiplier
//! algebras and semidirect products.

use crate::ffield::{FieldSpec, Scalar};
use crate::homs::AlgHom;
use crate::linalg;
use crate::{Error, Result, DEFAULT_MAX_ELEMENTS};
use rayon::prelude::*;
use std::fmt;
use std::sync::Arc;

/// An associative algebra with basis `b_0 .. b_{dim-1}` and structure
/// constants `c[i][j]` = coordinates of `b_i * b_j`. Associativity is
/// verified exhaustively at construction.
pub struct Algebra {
    pub field: Arc<FieldSpec>,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Dense structure tensor: `structure[i][j]` is the coordinate vector
    /// of `b_i * b_j`.
    pub structure: Vec<Vec<Vec<Scalar>>>,
    /// Sparse view of the same tensor, for the enumeration hot path.
    sparse: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub unit: Option<Vec<Scalar>>,
    pub is_commutative: bool,
    pub name: String,
    /// Set when the algebra was built as a group algebra.
    pub group: Option<Arc<crate::groups::Group>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name, self.dim)
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.structure == other.structure && self.unit == other.unit
    }
}
impl Eq for Algebra {}

impl Algebra {
    /// Builds an algebra from a dense structure tensor; checks associativity
    /// on every basis triple and locates the unit if one exists.
    pub fn new(
        field: Arc<FieldSpec>,
        labels: Vec<String>,
        structure: Vec<Vec<Vec<Scalar>>>,
        name: &str,
    ) -> Result<Arc<Algebra>> {
        let dim = labels.len();
        assert!(structure.len() == dim && structure.iter().all(|r| r.len() == dim));
        let mut alg = Algebra {
            field,
            dim,
            labels,
            structure,
            sparse: Vec::new(),
            unit: None,
            is_commutative: true,
            name: name.to_string(),
            group: None,
        };
        alg.rebuild_caches();
        // associativity on all basis triples
        for i in 0..dim {
            for j in 0..dim {
                let ij = alg.structure[i][j].clone();
                for k in 0..dim {
                    let left = alg.mul_vec(&ij, &alg.basis_vec(k));
                    let jk = &alg.structure[j][k];
                    let right = alg.mul_vec(&alg.basis_vec(i), jk);
                    if left != right {
                        return Err(Error::AxiomFailed {
                            axiom: "algebra associativity",
                            witness: format!("basis triple ({i},{j},{k}) in {name}"),
                        });
                    }
                }
            }
        }
        alg.is_commutative =
            (0..dim).all(|i| (0..dim).all(|j| alg.structure[i][j] == alg.structure[j][i]));
        alg.unit = alg.find_unit();
        Ok(Arc::new(alg))
    }

    fn rebuild_caches(&mut self) {
        self.sparse = self
            .structure
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .filter(|&(_, &c)| c != 0)
                            .map(|(k, &c)| (k, c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
    }

    fn find_unit(&self) -> Option<Vec<Scalar>> {
        if self.dim == 0 {
            return None;
        }
        // solve u * b_i = b_i and b_i * u = b_i for all i
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(self.dim);
        let mut b = Vec::new();
        for j in 0..self.dim {
            let mut col = Vec::new();
            for i in 0..self.dim {
                col.extend_from_slice(&self.structure[j][i]);
                col.extend_from_slice(&self.structure[i][j]);
            }
            cols.push(col);
        }
        for i in 0..self.dim {
            b.extend(self.basis_vec(i));
            b.extend(self.basis_vec(i));
        }
        let u = linalg::solve_columns(&self.field, &cols, &b)?;
        Some(u)
    }

    #[inline]
    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![0; self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = 1;
        v
    }

    pub fn add_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect()
    }

    pub fn sub_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect()
    }

    pub fn scale_vec(&self, c: Scalar, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|&a| self.field.mul(c, a)).collect()
    }

    /// Product of two coordinate vectors through the structure tensor.
    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        self.mul_vec_into(x, y, &mut out);
        out
    }

    /// Allocation-free product for the enumeration hot path.
    #[inline]
    pub fn mul_vec_into(&self, x: &[Scalar], y: &[Scalar], out: &mut [Scalar]) {
        out.fill(0);
        let f = &*self.field;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row = &self.sparse[i];
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let xy = f.mul(xi, yj);
                for &(k, c) in &row[j] {
                    out[k] = f.add(out[k], f.mul(xy, c));
                }
            }
        }
    }

    pub fn pow_vec(&self, x: &[Scalar], e: u64) -> Vec<Scalar> {
        // unit-free exponentiation: e >= 1
        assert!(e >= 1);
        let mut acc = x.to_vec();
        let mut scratch = self.zero_vec();
        for _ in 1..e {
            self.mul_vec_into(&acc, x, &mut scratch);
            std::mem::swap(&mut acc, &mut scratch);
        }
        acc
    }

    /// Total number of elements |F|^dim.
    pub fn element_count(&self) -> u128 {
        (self.field.order as u128).pow(self.dim as u32)
    }

    /// Canonical integer encoding of a coordinate vector, base |F|.
    pub fn encode(&self, coords: &[Scalar]) -> u64 {
        coords
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.field.order + c as u64)
    }

    pub fn decode(&self, mut code: u64) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        for c in v.iter_mut() {
            *c = (code % self.field.order) as Scalar;
            code /= self.field.order;
        }
        v
    }

    pub fn decode_into(&self, mut code: u64, out: &mut [Scalar]) {
        for c in out.iter_mut() {
            *c = (code % self.field.order) as Scalar;
            code /= self.field.order;
        }
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Scalar>) -> Element {
        assert_eq!(coords.len(), self.dim);
        Element {
            parent: self.clone(),
            coords,
        }
    }

    pub fn display_vec(&self, coords: &[Scalar]) -> String {
        let terms: Vec<String> = coords
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.labels[i].clone()
                } else {
                    format!("{}*{}", c, self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// An algebra element: a coordinate vector tied to its parent.
#[derive(Clone)]
pub struct Element {
    pub parent: Arc<Algebra>,
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn mul(&self, other: &Element) -> Element {
        self.parent
            .element(self.parent.mul_vec(&self.coords, &other.coords))
    }
    pub fn add(&self, other: &Element) -> Element {
        self.parent
            .element(self.parent.add_vec(&self.coords, &other.coords))
    }
    pub fn pow(&self, e: u64) -> Element {
        self.parent.element(self.parent.pow_vec(&self.coords, e))
    }
    pub fn code(&self) -> u64 {
        self.parent.encode(&self.coords)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parent.display_vec(&self.coords))
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.parent == other.parent
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    Subspace,
    Subalgebra,
    Ideal,
}

/// A subspace of an algebra in reduced echelon form; reduced bases are the
/// canonical form, so subspace equality is plain basis equality.
#[derive(Clone)]
pub struct Subspace {
    pub parent: Arc<Algebra>,
    pub basis: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    pub kind: SubspaceKind,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}, {:?})",
            self.basis.len(),
            self.parent.name,
            self.kind
        )
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.basis == other.basis
    }
}

impl Subspace {
    pub fn from_spanning(
        parent: &Arc<Algebra>,
        vectors: &[Vec<Scalar>],
        kind: SubspaceKind,
    ) -> Subspace {
        let mut basis: Vec<Vec<Scalar>> = vectors.to_vec();
        let pivots = linalg::rref(&parent.field, &mut basis);
        Subspace {
            parent: parent.clone(),
            basis,
            pivots,
            kind,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of elements |F|^dim.
    pub fn size(&self) -> u128 {
        (self.parent.field.order as u128).pow(self.dim() as u32)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        linalg::coords_in_span(&self.parent.field, &self.basis, &self.pivots, v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        linalg::coords_in_span(&self.parent.field, &self.basis, &self.pivots, v)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The whole algebra as a subspace of itself.
    pub fn full(parent: &Arc<Algebra>, kind: SubspaceKind) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = (0..parent.dim).map(|i| parent.basis_vec(i)).collect();
        Subspace::from_spanning(parent, &vectors, kind)
    }

    /// Extracts the subspace as a standalone algebra in its echelon basis,
    /// together with the inclusion homomorphism. Requires closure under
    /// multiplication.
    pub fn as_algebra(&self, name: &str) -> Result<(Arc<Algebra>, AlgHom)> {
        let d = self.dim();
        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = self.parent.mul_vec(&self.basis[i], &self.basis[j]);
                structure[i][j] = self.coords_of(&prod).ok_or(Error::NotASubalgebra)?;
            }
        }
        let labels = (0..d).map(|i| format!("s{i}")).collect();
        let alg = Algebra::new(self.parent.field.clone(), labels, structure, name)?;
        let inclusion = AlgHom::from_columns(&alg, &self.parent, self.basis.clone())?;
        Ok((alg, inclusion))
    }
}

/// Group algebra FG: one basis vector per group element, multiplication
/// extended distributively from the group table.
pub fn group_algebra(field: &Arc<FieldSpec>, group: &Arc<crate::groups::Group>) -> Arc<Algebra> {
    let n = group.n;
    let labels: Vec<String> = (0..n)
        .map(|i| {
            if i == group.id_index {
                "e".to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    let mut structure = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut v = vec![0 as Scalar; n];
            v[group.mul[i][j]] = 1;
            structure[i][j] = v;
        }
    }
    let name = format!("{}[{}]", field.name(), group.name);
    let alg =
        Algebra::new(field.clone(), labels, structure, &name).expect("group table is associative");
    // Arc::new consumed the value; re-wrap with provenance
    let mut inner = Arc::try_unwrap(alg).expect("sole owner");
    inner.group = Some(group.clone());
    Arc::new(inner)
}

/// Kernel of the coefficient-sum map of a group algebra; dimension |G|-1.
pub fn augmentation_ideal(a: &Arc<Algebra>) -> Result<Subspace> {
    let group = a.group.as_ref().ok_or(Error::NotAGroupAlgebra)?;
    let id = group.id_index;
    let mut vectors = Vec::new();
    for g in 0..group.n {
        if g == id {
            continue;
        }
        let mut v = a.zero_vec();
        v[g] = 1;
        v[id] = a.field.neg(1);
        vectors.push(v);
    }
    let s = Subspace::from_spanning(a, &vectors, SubspaceKind::Ideal);
    debug_assert!(is_ideal(a, &s));
    Ok(s)
}

/// Smallest subalgebra/ideal containing the generators, with canonical
/// echelon basis.
pub fn span_closure(a: &Arc<Algebra>, gens: &[Vec<Scalar>], kind: SubspaceKind) -> Subspace {
    let mut basis: Vec<Vec<Scalar>> = gens.to_vec();
    linalg::rref(&a.field, &mut basis);
    loop {
        let mut new_vectors = basis.clone();
        match kind {
            SubspaceKind::Subspace => {}
            SubspaceKind::Subalgebra => {
                for x in &basis {
                    for y in &basis {
                        new_vectors.push(a.mul_vec(x, y));
                    }
                }
            }
            SubspaceKind::Ideal => {
                for x in &basis {
                    for i in 0..a.dim {
                        let b = a.basis_vec(i);
                        new_vectors.push(a.mul_vec(&b, x));
                        new_vectors.push(a.mul_vec(x, &b));
                    }
                    for y in &basis {
                        new_vectors.push(a.mul_vec(x, y));
                    }
                }
            }
        }
        let before = basis.len();
        let pivots = linalg::rref(&a.field, &mut new_vectors);
        if new_vectors.len() == before {
            return Subspace {
                parent: a.clone(),
                basis: new_vectors,
                pivots,
                kind,
            };
        }
        basis = new_vectors;
    }
}

/// True iff `a * s ⊆ s` and `s * a ⊆ s`.
pub fn is_ideal(a: &Arc<Algebra>, s: &Subspace) -> bool {
    assert_eq!(s.parent.dim, a.dim, "dimension mismatch");
    for v in &s.basis {
        for i in 0..a.dim {
            let b = a.basis_vec(i);
            if !s.contains(&a.mul_vec(&b, v)) || !s.contains(&a.mul_vec(v, &b)) {
                return false;
            }
        }
    }
    true
}

/// True iff the subspace is closed under multiplication.
pub fn is_subalgebra(s: &Subspace) -> bool {
    s.basis
        .iter()
        .all(|x| s.basis.iter().all(|y| s.contains(&s.parent.mul_vec(x, y))))
}

/// All x with x^2 = x, in ascending code order. Bounded exhaustive scan.
pub fn idempotent_elements(a: &Arc<Algebra>, bound: u64) -> Result<Vec<Vec<Scalar>>> {
    let total = a.element_count();
    if total > bound as u128 {
        return Err(Error::BoundExceeded {
            needed: total,
            bound,
        });
    }
    let total = total as u64;
    let chunk = 1u64 << 12;
    let mut codes: Vec<u64> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|blk| {
            let lo = blk * chunk;
            let hi = (lo + chunk).min(total);
            let mut x = a.zero_vec();
            let mut sq = a.zero_vec();
            let mut found = Vec::new();
            for code in lo..hi {
                a.decode_into(code, &mut x);
                a.mul_vec_into(&x, &x, &mut sq);
                if sq == x {
                    found.push(code);
                }
            }
            found
        })
        .collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| a.decode(c)).collect())
}

/// Annihilator {x : x*a = a*x = 0 for all a} as a canonical subspace.
pub fn annihilator(a: &Arc<Algebra>) -> Subspace {
    // one equation per (basis i, output coordinate k), both sides
    let mut equations = Vec::new();
    for i in 0..a.dim {
        for k in 0..a.dim {
            let left: Vec<Scalar> = (0..a.dim).map(|j| a.structure[j][i][k]).collect();
            let right: Vec<Scalar> = (0..a.dim).map(|j| a.structure[i][j][k]).collect();
            equations.push(left);
            equations.push(right);
        }
    }
    let basis = linalg::nullspace(&a.field, &equations, a.dim);
    Subspace::from_spanning(a, &basis, SubspaceKind::Ideal)
}

/// Span of all products, S^2, as a subspace.
pub fn square_span(a: &Arc<Algebra>) -> Subspace {
    let mut vectors = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            vectors.push(a.structure[i][j].clone());
        }
    }
    Subspace::from_spanning(a, &vectors, SubspaceKind::Subspace)
}

/// The multiplier algebra M(S) of a commutative algebra S with
/// `Ann(S) = 0` or `S^2 = S`: all linear maps m with m(xy) = m(x)y, as an
/// algebra under composition, plus the canonical map s -> (x -> s x).
pub fn multiplier_algebra(s: &Arc<Algebra>) -> Result<(Arc<Algebra>, AlgHom)> {
    if !s.is_commutative {
        return Err(Error::MultiplierHypothesis(
            "S must be commutative".to_string(),
        ));
    }
    let ann = annihilator(s);
    let sq = square_span(s);
    if !ann.is_zero() && sq.dim() != s.dim {
        return Err(Error::MultiplierHypothesis(format!(
            "Ann(S) has dimension {} != 0 and S^2 has dimension {} < {}",
            ann.dim(),
            sq.dim(),
            s.dim
        )));
    }
    let n = s.dim;
    // unknown matrix M (column-major: entry (row r, col c) at index c*n + r),
    // constraints M * (b_i b_j) = (M b_i) * b_j for all basis pairs
    let mut equations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = &s.structure[i][j];
            for k in 0..n {
                // coefficient of unknown M[r][c] in coordinate k of
                // M(b_i b_j) - M(b_i) b_j
                let mut eq = vec![0 as Scalar; n * n];
                for c in 0..n {
                    for r in 0..n {
                        let mut coeff = if r == k { s.field.mul(prod[c], 1) } else { 0 };
                        // minus (M b_i) b_j: M b_i has coordinate r equal to
                        // M[r][i]; multiplied by b_j contributes
                        // M[r][i] * c[r][j][k]
                        if c == i {
                            coeff = s.field.sub(coeff, s.structure[r][j][k]);
                        }
                        eq[c * n + r] = s.field.add(eq[c * n + r], coeff);
                    }
                }
                equations.push(eq);
            }
        }
    }
    let basis = linalg::nullspace(&s.field, &equations, n * n);
    let m_dim = basis.len();
    // multiplication on M(S) is composition; express products in the basis
    let to_matrix = |v: &[Scalar]| -> Vec<Vec<Scalar>> {
        // columns of the map
        (0..n).map(|c| v[c * n..(c + 1) * n].to_vec()).collect()
    };
    let apply = |m: &[Vec<Scalar>], x: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![0 as Scalar; n];
        for (c, col) in m.iter().enumerate() {
            if x[c] == 0 {
                continue;
            }
            for r in 0..n {
                out[r] = s.field.add(out[r], s.field.mul(x[c], col[r]));
            }
        }
        out
    };
    let mut sub_rows = basis.clone();
    let pivots = linalg::rref(&s.field, &mut sub_rows);
    let mats: Vec<Vec<Vec<Scalar>>> = sub_rows.iter().map(|v| to_matrix(v)).collect();
    let mut structure = vec![vec![Vec::new(); m_dim]; m_dim];
    for i in 0..m_dim {
        for j in 0..m_dim {
            // composition m_i ∘ m_j, vectorized column-major
            let mut comp = vec![0 as Scalar; n * n];
            for c in 0..n {
                let col = apply(&mats[i], &mats[j][c]);
                comp[c * n..(c + 1) * n].copy_from_slice(&col);
            }
            structure[i][j] = linalg::coords_in_span(&s.field, &sub_rows, &pivots, &comp)
                .ok_or(Error::NotASubalgebra)?;
        }
    }
    let labels = (0..m_dim).map(|i| format!("m{i}")).collect();
    let m_alg = Algebra::new(
        s.field.clone(),
        labels,
        structure,
        &format!("M({})", s.name),
    )?;
    // canonical map: s -> left multiplication by s
    let mut cols = Vec::new();
    for i in 0..n {
        let mut vecm = vec![0 as Scalar; n * n];
        for c in 0..n {
            let col = &s.structure[i][c];
            vecm[c * n..(c + 1) * n].copy_from_slice(col);
        }
        let coords =
            linalg::coords_in_span(&s.field, &sub_rows, &pivots, &vecm).ok_or_else(|| {
                Error::MultiplierHypothesis("left multiplication is not a multiplier".to_string())
            })?;
        cols.push(coords);
    }
    let canonical = AlgHom::from_columns(s, &m_alg, cols)?;
    Ok((m_alg, canonical))
}

/// A two-sided action of `acting` on `acted`: `left[i][j]` is the
/// coordinate vector of `r_i . s_j`, `right[j][i]` that of `s_j . r_i`.
/// For commutative data the two tensors coincide.
#[derive(Clone)]
pub struct AlgebraAction {
    pub acting: Arc<Algebra>,
    pub acted: Arc<Algebra>,
    pub left: Vec<Vec<Vec<Scalar>>>,
    pub right: Vec<Vec<Vec<Scalar>>>,
}

impl fmt::Debug for AlgebraAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraAction({} on {})",
            self.acting.name, self.acted.name
        )
    }
}

impl AlgebraAction {
    /// Symmetric action with a single tensor `tensor[i][j] = r_i . s_j`
    /// (the commutative case: `s . r` is defined as `r . s`).
    pub fn symmetric(
        acting: &Arc<Algebra>,
        acted: &Arc<Algebra>,
        tensor: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<AlgebraAction> {
        let right = (0..acted.dim)
            .map(|j| (0..acting.dim).map(|i| tensor[i][j].clone()).collect())
            .collect();
        Self::two_sided(acting, acted, tensor, right)
    }

    /// General bimodule-style action; validates all compatibility laws on
    /// basis triples.
    pub fn two_sided(
        acting: &Arc<Algebra>,
        acted: &Arc<Algebra>,
        left: Vec<Vec<Vec<Scalar>>>,
        right: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<AlgebraAction> {
        let act = AlgebraAction {
            acting: acting.clone(),
            acted: acted.clone(),
            left,
            right,
        };
        act.validate()?;
        Ok(act)
    }

    pub fn act_left(&self, r: &[Scalar], s: &[Scalar]) -> Vec<Scalar> {
        let f = &self.acted.field;
        let mut out = self.acted.zero_vec();
        for (i, &ri) in r.iter().enumerate() {
            if ri == 0 {
                continue;
            }
            for (j, &sj) in s.iter().enumerate() {
                if sj == 0 {
                    continue;
                }
                let c = f.mul(ri, sj);
                for k in 0..out.len() {
                    out[k] = f.add(out[k], f.mul(c, self.left[i][j][k]));
                }
            }
        }
        out
    }

    pub fn act_right(&self, s: &[Scalar], r: &[Scalar]) -> Vec<Scalar> {
        let f = &self.acted.field;
        let mut out = self.acted.zero_vec();
        for (j, &sj) in s.iter().enumerate() {
            if sj == 0 {
                continue;
            }
            for (i, &ri) in r.iter().enumerate() {
                if ri == 0 {
                    continue;
                }
                let c = f.mul(sj, ri);
                for k in 0..out.len() {
                    out[k] = f.add(out[k], f.mul(c, self.right[j][i][k]));
                }
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        let r_alg = &self.acting;
        let s_alg = &self.acted;
        let fail = |law: &'static str, w: String| Error::AxiomFailed {
            axiom: law,
            witness: w,
        };
        for i in 0..r_alg.dim {
            let ri = r_alg.basis_vec(i);
            for j in 0..r_alg.dim {
                let rj = r_alg.basis_vec(j);
                let rij = &r_alg.structure[i][j];
                for k in 0..s_alg.dim {
                    let sk = s_alg.basis_vec(k);
                    // (r r') . s = r . (r' . s)
                    if self.act_left(rij, &sk) != self.act_left(&ri, &self.act_left(&rj, &sk)) {
                        return Err(fail(
                            "action (rr').s = r.(r'.s)",
                            format!("(r{i},r{j},s{k})"),
                        ));
                    }
                    // s . (r r') = (s . r) . r'
                    if self.act_right(&sk, rij) != self.act_right(&self.act_right(&sk, &ri), &rj) {
                        return Err(fail(
                            "action s.(rr') = (s.r).r'",
                            format!("(s{k},r{i},r{j})"),
                        ));
                    }
                }
            }
            for j in 0..s_alg.dim {
                let sj = s_alg.basis_vec(j);
                for k in 0..s_alg.dim {
                    let sk = s_alg.basis_vec(k);
                    let sjk = &s_alg.structure[j][k];
                    // r . (s s') = (r . s) s'
                    if self.act_left(&ri, sjk) != s_alg.mul_vec(&self.act_left(&ri, &sj), &sk) {
                        return Err(fail(
                            "action r.(ss') = (r.s)s'",
                            format!("(r{i},s{j},s{k})"),
                        ));
                    }
                    // (s s') . r = s (s' . r)
                    if self.act_right(sjk, &ri) != s_alg.mul_vec(&sj, &self.act_right(&sk, &ri)) {
                        return Err(fail(
                            "action (ss').r = s(s'.r)",
                            format!("(s{j},s{k},r{i})"),
                        ));
                    }
                    // (s . r) s' = s (r . s')  (middle compatibility)
                    if s_alg.mul_vec(&self.act_right(&sj, &ri), &sk)
                        != s_alg.mul_vec(&sj, &self.act_left(&ri, &sk))
                    {
                        return Err(fail(
                            "action (s.r)s' = s(r.s')",
                            format!("(s{j},r{i},s{k})"),
                        ));
                    }
                    // (r . s) . r' = r . (s . r')  (bimodule middle)
                    for l in 0..r_alg.dim {
                        let rl = r_alg.basis_vec(l);
                        if self.act_right(&self.act_left(&ri, &sj), &rl)
                            != self.act_left(&ri, &self.act_right(&sj, &rl))
                        {
                            return Err(fail(
                                "action (r.s).r' = r.(s.r')",
                                format!("(r{i},s{j},r{l})"),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The multiplication action of an algebra on an ideal expressed in the
    /// ideal's own echelon basis.
    pub fn multiplication_on_ideal(
        a: &Arc<Algebra>,
        ideal: &Subspace,
        ideal_alg: &Arc<Algebra>,
    ) -> Result<AlgebraAction> {
        let mut left = vec![vec![Vec::new(); ideal_alg.dim]; a.dim];
        let mut right = vec![vec![Vec::new(); a.dim]; ideal_alg.dim];
        for i in 0..a.dim {
            let bi = a.basis_vec(i);
            for (j, sv) in ideal.basis.iter().enumerate() {
                let l = a.mul_vec(&bi, sv);
                let r = a.mul_vec(sv, &bi);
                left[i][j] = ideal.coords_of(&l).ok_or(Error::NotAnIdeal)?;
                right[j][i] = ideal.coords_of(&r).ok_or(Error::NotAnIdeal)?;
            }
        }
        AlgebraAction::two_sided(a, ideal_alg, left, right)
    }
}

/// Split extension R ⊕ S with multiplication
/// `(r,a)(r',a') = (rr', r.a' + a.r' + aa')`. Returns the algebra together
/// with the two embeddings and the projection onto R.
pub fn semidirect_product(
    r: &Arc<Algebra>,
    s: &Arc<Algebra>,
    act: &AlgebraAction,
) -> Result<(Arc<Algebra>, AlgHom, AlgHom, AlgHom)> {
    assert!(Arc::ptr_eq(&act.acting, r) || act.acting == *r);
    assert!(Arc::ptr_eq(&act.acted, s) || act.acted == *s);
    let dr = r.dim;
    let ds = s.dim;
    let dim = dr + ds;
    let field = r.field.clone();
    let pad = |rv: &[Scalar], sv: &[Scalar]| -> Vec<Scalar> {
        let mut v = Vec::with_capacity(dim);
        v.extend_from_slice(rv);
        v.extend_from_slice(sv);
        v
    };
    let zr = r.zero_vec();
    let zs = s.zero_vec();
    let mut structure = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let v = if i < dr && j < dr {
                pad(&r.structure[i][j], &zs)
            } else if i < dr {
                // (r,0)(0,s) = (0, r.s)
                pad(&zr, &act.left[i][j - dr])
            } else if j < dr {
                pad(&zr, &act.right[i - dr][j])
            } else {
                pad(&zr, &s.structure[i - dr][j - dr])
            };
            structure[i][j] = v;
        }
    }
    let mut labels: Vec<String> = r.labels.iter().map(|l| format!("r:{l}")).collect();
    labels.extend(s.labels.iter().map(|l| format!("s:{l}")));
    let name = format!("{} |x {}", r.name, s.name);
    let alg = Algebra::new(field, labels, structure, &name)?;
    let embed_r = AlgHom::from_columns(r, &alg, (0..dr).map(|i| alg.basis_vec(i)).collect())?;
    let embed_s = AlgHom::from_columns(s, &alg, (0..ds).map(|i| alg.basis_vec(dr + i)).collect())?;
    let proj_cols: Vec<Vec<Scalar>> = (0..dim)
        .map(|i| if i < dr { r.basis_vec(i) } else { r.zero_vec() })
        .collect();
    let proj_r = AlgHom::from_columns(&alg, r, proj_cols)?;
    Ok((alg, embed_r, embed_s, proj_r))
}

/// Idempotent scan with the crate default bound.
pub fn idempotents_default(a: &Arc<Algebra>) -> Result<Vec<Vec<Scalar>>> {
    idempotent_elements(a, DEFAULT_MAX_ELEMENTS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;
    use crate::groups;

    fn gf(p: u64, k: u32) -> Arc<FieldSpec> {
        FieldSpec::make(p, k).unwrap()
    }

    #[test]
    fn group_algebra_sizes() {
        // GF(5)[D4] where D4 is the Klein four-group, size 625
        let f5 = gf(5, 1);
        let k4 = groups::catalog((4, 2)).unwrap();
        let a = group_algebra(&f5, &k4);
        assert_eq!(a.element_count(), 625);
        assert!(a.unit.is_some());
        assert!(a.is_commutative);

        let f2 = gf(2, 1);
        let triv = groups::catalog((1, 1)).unwrap();
        let t = group_algebra(&f2, &triv);
        assert_eq!(t.element_count(), 2);

        let f4 = gf(2, 2);
        let r = group_algebra(&f4, &k4);
        assert_eq!(r.element_count(), 256);

        let s3 = groups::catalog((6, 1)).unwrap();
        let ns = group_algebra(&f2, &s3);
        assert!(!ns.is_commutative);
    }

    #[test]
    fn augmentation_ideal_dimensions() {
        let f5 = gf(5, 1);
        let k4 = groups::catalog((4, 2)).unwrap();
        let a = group_algebra(&f5, &k4);
        let aug = augmentation_ideal(&a).unwrap();
        assert_eq!(aug.dim(), 3);
        assert_eq!(aug.size(), 125);
        assert!(is_ideal(&a, &aug));

        let f2 = gf(2, 1);
        let c6 = groups::catalog((6, 2)).unwrap();
        let b = group_algebra(&f2, &c6);
        assert_eq!(augmentation_ideal(&b).unwrap().dim(), 5);

        let triv = groups::catalog((1, 1)).unwrap();
        let t = group_algebra(&f2, &triv);
        assert!(augmentation_ideal(&t).unwrap().is_zero());
    }

    #[test]
    fn one_generator_ideal_in_aug() {
        // z = e + a + 4b + 4ab inside GF(5)[K4] spans a 1-dimensional ideal
        let f5 = gf(5, 1);
        let k4 = groups::catalog((4, 2)).unwrap();
        let a = group_algebra(&f5, &k4);
        let z = vec![1, 1, 4, 4];
        let j = span_closure(&a, &[z], SubspaceKind::Ideal);
        assert_eq!(j.dim(), 1);
        assert_eq!(j.size(), 5);
        assert!(is_ideal(&a, &j));
        let aug = augmentation_ideal(&a).unwrap();
        assert!(aug.contains_subspace(&j));
        assert_ne!(aug, j);
    }

    #[test]
    fn span_closure_edges() {
        let f2 = gf(2, 1);
        let c2 = groups::catalog((2, 1)).unwrap();
        let a = group_algebra(&f2, &c2);
        assert!(span_closure(&a, &[], SubspaceKind::Ideal).is_zero());
        let basis: Vec<Vec<Scalar>> = (0..a.dim).map(|i| a.basis_vec(i)).collect();
        assert_eq!(span_closure(&a, &basis, SubspaceKind::Ideal).dim(), a.dim);
        // the span of the unit is not an ideal when |G| > 1
        let unit_span =
            Subspace::from_spanning(&a, &[a.unit.clone().unwrap()], SubspaceKind::Subspace);
        assert!(!is_ideal(&a, &unit_span));
        // zero subspace is an ideal
        assert!(is_ideal(
            &a,
            &Subspace::from_spanning(&a, &[], SubspaceKind::Ideal)
        ));
    }

    #[test]
    fn idempotent_scans() {
        let f2 = gf(2, 1);
        let f3 = gf(3, 1);
        let c2 = groups::catalog((2, 1)).unwrap();
        let a2 = group_algebra(&f2, &c2);
        let idem = idempotents_default(&a2).unwrap();
        let codes: Vec<u64> = idem.iter().map(|v| a2.encode(v)).collect();
        assert_eq!(codes, vec![0, 1]);

        let a3 = group_algebra(&f3, &c2);
        let idem3 = idempotents_default(&a3).unwrap();
        assert_eq!(idem3.len(), 4);
        // {0, 1, 2+2x, 2+x}
        let codes3: Vec<u64> = idem3.iter().map(|v| a3.encode(v)).collect();
        assert_eq!(codes3, vec![0, 1, 5, 8]);
    }

    #[test]
    fn annihilator_cases() {
        let f2 = gf(2, 1);
        let c2 = groups::catalog((2, 1)).unwrap();
        let a = group_algebra(&f2, &c2);
        // augmentation ideal of GF(2)[C2] is 1-dim, square zero
        let aug = augmentation_ideal(&a).unwrap();
        let (s_alg, _) = aug.as_algebra("Aug").unwrap();
        let ann = annihilator(&s_alg);
        assert_eq!(ann.dim(), s_alg.dim);
        // unital algebra has zero annihilator
        assert!(annihilator(&a).is_zero());
    }

    #[test]
    fn multiplier_algebra_cases() {
        let f3 = gf(3, 1);
        let c2 = groups::catalog((2, 1)).unwrap();
        let s = group_algebra(&f3, &c2);
        let (m, canonical) = multiplier_algebra(&s).unwrap();
        assert_eq!(m.dim, s.dim);
        assert!(canonical.is_bijective());

        // a field is its own multiplier algebra
        let triv = groups::catalog((1, 1)).unwrap();
        let k = group_algebra(&f3, &triv);
        let (mk, can) = multiplier_algebra(&k).unwrap();
        assert_eq!(mk.dim, 1);
        assert!(can.is_bijective());

        // span{1+x} in GF(2)[C2]: S^2 = 0 and Ann(S) = S, both hypotheses fail
        let f2 = gf(2, 1);
        let a2 = group_algebra(&f2, &c2);
        let aug = augmentation_ideal(&a2).unwrap();
        let (s_alg, _) = aug.as_algebra("span{1+x}").unwrap();
        assert!(matches!(
            multiplier_algebra(&s_alg),
            Err(Error::MultiplierHypothesis(_))
        ));
    }

    #[test]
    fn semidirect_product_cases() {
        let f3 = gf(3, 1);
        let c2 = groups::catalog((2, 1)).unwrap();
        let r = group_algebra(&f3, &c2);
        let aug = augmentation_ideal(&r).unwrap();
        let (s_alg, _) = aug.as_algebra("Aug").unwrap();
        let act = AlgebraAction::multiplication_on_ideal(&r, &aug, &s_alg).unwrap();
        let (a, embed_r, embed_s, proj) = semidirect_product(&r, &s_alg, &act).unwrap();
        assert_eq!(a.dim, 3);
        assert_eq!(a.element_count(), 27);
        // projection ∘ embedding = identity on R
        let comp = proj.compose(&embed_r).unwrap();
        assert!(comp.is_identity());
        let _ = embed_s;

        // zero action, zero multiplication: direct-sum-like algebra
        let zero_s = Algebra::new(f3.clone(), vec!["m0".into()], vec![vec![vec![0]]], "M").unwrap();
        let zt = vec![vec![vec![0 as Scalar]; 1]; r.dim];
        let act0 = AlgebraAction::symmetric(&r, &zero_s, zt).unwrap();
        let (d, _, _, _) = semidirect_product(&r, &zero_s, &act0).unwrap();
        assert_eq!(d.dim, 3);
    }
}
