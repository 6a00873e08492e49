//! Algebra homomorphisms as certified column matrices, and exhaustive
//! enumeration of homomorphisms between group algebras: every map found is
//! checked against the Cayley edges of the source group, which certifies
//! multiplicativity on the whole basis.

use crate::algebra::{
    idempotent_elements, is_ideal, is_subalgebra, Algebra, Subspace, SubspaceKind,
};
use crate::ffield::Scalar;
use crate::linalg;
use crate::{Error, Result};
use rayon::prelude::*;
use std::fmt;
use std::sync::Arc;

/// A linear multiplicative map; `cols[i]` is the image of source basis
/// vector `b_i`. Not required to preserve units.
#[derive(Clone)]
pub struct AlgHom {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub cols: Vec<Vec<Scalar>>,
}

impl fmt::Debug for AlgHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgHom({} -> {})", self.source.name, self.target.name)
    }
}

impl PartialEq for AlgHom {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.cols == other.cols
    }
}
impl Eq for AlgHom {}

impl AlgHom {
    /// Certifies multiplicativity on every basis pair before accepting the
    /// matrix.
    pub fn from_columns(
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
        cols: Vec<Vec<Scalar>>,
    ) -> Result<AlgHom> {
        if source.field != target.field {
            return Err(Error::IncompatibleParents(format!(
                "{} and {} are over different fields",
                source.name, target.name
            )));
        }
        if cols.len() != source.dim || cols.iter().any(|c| c.len() != target.dim) {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix shape does not match {} -> {}",
                source.name, target.name
            )));
        }
        let h = AlgHom {
            source: source.clone(),
            target: target.clone(),
            cols,
        };
        for i in 0..source.dim {
            for j in 0..source.dim {
                let lhs = h.apply(&source.structure[i][j]);
                let rhs = target.mul_vec(&h.cols[i], &h.cols[j]);
                if lhs != rhs {
                    return Err(Error::AxiomFailed {
                        axiom: "hom multiplicativity",
                        witness: format!("basis pair ({i},{j})"),
                    });
                }
            }
        }
        Ok(h)
    }

    /// Already certified elsewhere (e.g. by Cayley-edge verification).
    pub(crate) fn from_columns_certified(
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
        cols: Vec<Vec<Scalar>>,
    ) -> AlgHom {
        AlgHom {
            source: source.clone(),
            target: target.clone(),
            cols,
        }
    }

    pub fn identity(a: &Arc<Algebra>) -> AlgHom {
        AlgHom {
            source: a.clone(),
            target: a.clone(),
            cols: (0..a.dim).map(|i| a.basis_vec(i)).collect(),
        }
    }

    pub fn zero(source: &Arc<Algebra>, target: &Arc<Algebra>) -> AlgHom {
        AlgHom {
            source: source.clone(),
            target: target.clone(),
            cols: vec![target.zero_vec(); source.dim],
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = &self.target.field;
        let mut out = self.target.zero_vec();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(c, self.cols[i][k]));
            }
        }
        out
    }

    /// self ∘ first.
    pub fn compose(&self, first: &AlgHom) -> Result<AlgHom> {
        if first.target != self.source {
            return Err(Error::IncompatibleParents(
                "composition: inner target differs from outer source".to_string(),
            ));
        }
        let cols = first.cols.iter().map(|c| self.apply(c)).collect();
        Ok(AlgHom {
            source: first.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    /// Kernel as a canonical ideal of the source.
    pub fn kernel(&self) -> Subspace {
        // x in ker iff sum x_i cols[i] = 0; one equation per target coord
        let equations: Vec<Vec<Scalar>> = (0..self.target.dim)
            .map(|k| (0..self.source.dim).map(|i| self.cols[i][k]).collect())
            .collect();
        let basis = linalg::nullspace(&self.source.field, &equations, self.source.dim);
        let s = Subspace::from_spanning(&self.source, &basis, SubspaceKind::Ideal);
        debug_assert!(is_ideal(&self.source, &s));
        s
    }

    /// Image as a canonical subalgebra of the target.
    pub fn image(&self) -> Subspace {
        let s = Subspace::from_spanning(&self.target, &self.cols, SubspaceKind::Subalgebra);
        debug_assert!(is_subalgebra(&s));
        s
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().dim() == self.target.dim
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(i, c)| c.iter().enumerate().all(|(k, &x)| x == u16::from(k == i)))
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    /// φ ∘ φ = φ.
    pub fn is_idempotent_endo(&self) -> bool {
        self.is_endo() && self.cols.iter().all(|c| self.apply(c) == *c)
    }
}

/// The functor k(-): a group homomorphism induces an algebra homomorphism
/// between the corresponding group algebras.
pub fn functor_on_group_hom(
    src_alg: &Arc<Algebra>,
    tgt_alg: &Arc<Algebra>,
    gh: &crate::groups::GroupHom,
) -> Result<AlgHom> {
    let sg = src_alg.group.as_ref().ok_or(Error::NotAGroupAlgebra)?;
    let tg = tgt_alg.group.as_ref().ok_or(Error::NotAGroupAlgebra)?;
    if **sg != *gh.source || **tg != *gh.target {
        return Err(Error::IncompatibleParents(
            "group homomorphism does not match the group algebras".to_string(),
        ));
    }
    let cols = (0..src_alg.dim)
        .map(|g| tgt_alg.basis_vec(gh.map[g]))
        .collect();
    AlgHom::from_columns(src_alg, tgt_alg, cols)
}

/// Extends an idempotent `f` (image of the source identity) and generator
/// images to a homomorphism by propagation along the Cayley spanning tree;
/// the result is fully certified.
pub fn hom_from_generator_images(
    src: &Arc<Algebra>,
    tgt: &Arc<Algebra>,
    f: &[Scalar],
    gen_images: &[Vec<Scalar>],
) -> Result<AlgHom> {
    let group = src.group.clone().ok_or(Error::NotAGroupAlgebra)?;
    if gen_images.len() != group.generators.len() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} generator images, got {}",
            group.generators.len(),
            gen_images.len()
        )));
    }
    let mut values = vec![tgt.zero_vec(); group.n];
    values[group.id_index] = f.to_vec();
    for &g in &group.bfs_order() {
        if g == group.id_index {
            continue;
        }
        let (h, i) = group.tree[g].expect("tree covers the group");
        values[g] = tgt.mul_vec(&values[h], &gen_images[i]);
    }
    AlgHom::from_columns(src, tgt, values)
}

/// One homomorphism in tabulated form: the image of every source basis
/// vector plus its search key.
#[derive(Clone, Debug)]
pub struct HomTable {
    /// code of the image of the source identity
    pub f_code: u64,
    /// codes of the generator images, in generator order
    pub gen_codes: Vec<u64>,
    /// image of basis vector `b_g`, indexed by group element
    pub values: Vec<Vec<Scalar>>,
}

impl HomTable {
    pub fn apply(&self, tgt: &Algebra, v: &[Scalar]) -> Vec<Scalar> {
        let f = &tgt.field;
        let mut out = tgt.zero_vec();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(c, self.values[i][k]));
            }
        }
        out
    }

    /// φ ∘ φ = φ on the tabulated columns.
    pub fn is_idempotent(&self, tgt: &Algebra) -> bool {
        self.values.iter().all(|c| self.apply(tgt, c) == *c)
    }

    pub fn into_hom(self, src: &Arc<Algebra>, tgt: &Arc<Algebra>) -> AlgHom {
        AlgHom::from_columns_certified(src, tgt, self.values)
    }
}

/// Result of an exhaustive scan: total number of homomorphisms plus the
/// tables retained by the filter, sorted by `(f_code, gen_codes)`.
pub struct HomSurvey {
    pub count: u64,
    pub kept: Vec<HomTable>,
}

/// Enumerates every algebra homomorphism from a group algebra `src` into
/// `tgt` over the same field. For each idempotent `f` of the target the
/// generator images are drawn from the corner `f·tgt·f`, filtered by the
/// generator orders, and each tuple is verified on all Cayley edges.
/// `keep` selects which homomorphisms are materialized.
pub fn survey_homs(
    src: &Arc<Algebra>,
    tgt: &Arc<Algebra>,
    bound: u64,
    keep: impl Fn(&HomTable) -> bool + Sync,
) -> Result<HomSurvey> {
    let group = src.group.clone().ok_or(Error::NotAGroupAlgebra)?;
    if src.field != tgt.field {
        return Err(Error::IncompatibleParents(format!(
            "{} and {} are over different fields",
            src.name, tgt.name
        )));
    }
    let total_elems = tgt.element_count();
    if total_elems > bound as u128 {
        return Err(Error::BoundExceeded {
            needed: total_elems,
            bound,
        });
    }
    let idems = idempotent_elements(tgt, bound)?;
    let ngens = group.generators.len();
    let bfs = group.bfs_order();
    let mut count = 0u64;
    let mut kept: Vec<HomTable> = Vec::new();

    for f in &idems {
        let f_code = tgt.encode(f);
        // candidate generator images: corner elements of the right order
        let cands: Vec<Vec<Vec<Scalar>>> = (0..ngens)
            .map(|gi| {
                let ord = group.elem_order[group.generators[gi]] as u64;
                scan_candidates(tgt, f, ord)
            })
            .collect();
        if cands.iter().any(|c| c.is_empty()) {
            continue;
        }
        let rest_total: u64 = cands.iter().skip(1).map(|c| c.len() as u64).product();

        if ngens == 0 {
            let table = build_table(tgt, &group, &bfs, f, &[]);
            count += 1; // identity-only source: f itself is the hom
            if keep(&table) {
                kept.push(table);
            }
            continue;
        }

        // parallel over the first generator's candidates, sequential odometer
        // over the rest; deterministic because results are reduced in order
        let per_first: Vec<(u64, Vec<HomTable>)> = cands[0]
            .par_iter()
            .map(|u0| {
                let mut local_count = 0u64;
                let mut local_kept = Vec::new();
                let mut tuple: Vec<&Vec<Scalar>> = Vec::with_capacity(ngens);
                let mut scratch = tgt.zero_vec();
                for rest_idx in 0..rest_total {
                    tuple.clear();
                    tuple.push(u0);
                    let mut ri = rest_idx;
                    for c in cands.iter().skip(1) {
                        tuple.push(&c[(ri % c.len() as u64) as usize]);
                        ri /= c.len() as u64;
                    }
                    if let Some(values) =
                        propagate_and_verify(tgt, &group, &bfs, f, &tuple, &mut scratch)
                    {
                        local_count += 1;
                        let table = HomTable {
                            f_code,
                            gen_codes: tuple.iter().map(|u| tgt.encode(u)).collect(),
                            values,
                        };
                        if keep(&table) {
                            local_kept.push(table);
                        }
                    }
                }
                (local_count, local_kept)
            })
            .collect();
        for (c, k) in per_first {
            count += c;
            kept.extend(k);
        }
    }
    kept.sort_by(|a, b| (a.f_code, &a.gen_codes).cmp(&(b.f_code, &b.gen_codes)));
    Ok(HomSurvey { count, kept })
}

/// Elements u of the corner f·T·f with u^ord = f, in ascending code order.
fn scan_candidates(tgt: &Arc<Algebra>, f: &[Scalar], ord: u64) -> Vec<Vec<Scalar>> {
    let total = tgt.element_count() as u64;
    let chunk = 1u64 << 12;
    let mut found: Vec<u64> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|blk| {
            let lo = blk * chunk;
            let hi = (lo + chunk).min(total);
            let mut x = tgt.zero_vec();
            let mut buf = tgt.zero_vec();
            let mut acc = tgt.zero_vec();
            let mut local = Vec::new();
            'outer: for code in lo..hi {
                tgt.decode_into(code, &mut x);
                tgt.mul_vec_into(f, &x, &mut buf);
                if buf != x {
                    continue;
                }
                tgt.mul_vec_into(&x, f, &mut buf);
                if buf != x {
                    continue;
                }
                // x^ord == f, with early exit if a power leaves the corner
                acc.copy_from_slice(&x);
                for _ in 1..ord {
                    tgt.mul_vec_into(&acc, &x, &mut buf);
                    std::mem::swap(&mut acc, &mut buf);
                    if acc.iter().all(|&c| c == 0) && f.iter().any(|&c| c != 0) {
                        continue 'outer;
                    }
                }
                if acc == *f {
                    local.push(code);
                }
            }
            local
        })
        .collect();
    found.sort_unstable();
    found.into_iter().map(|c| tgt.decode(c)).collect()
}

fn build_table(
    tgt: &Arc<Algebra>,
    group: &crate::groups::Group,
    bfs: &[usize],
    f: &[Scalar],
    tuple: &[&Vec<Scalar>],
) -> HomTable {
    let mut values = vec![tgt.zero_vec(); group.n];
    values[group.id_index] = f.to_vec();
    for &g in bfs {
        if g == group.id_index {
            continue;
        }
        let (h, i) = group.tree[g].expect("tree covers the group");
        values[g] = tgt.mul_vec(&values[h], tuple[i]);
    }
    HomTable {
        f_code: tgt.encode(f),
        gen_codes: tuple.iter().map(|u| tgt.encode(u)).collect(),
        values,
    }
}

/// Tree propagation followed by verification of every Cayley edge
/// `value(g) * u_i == value(g * gen_i)`; this certifies multiplicativity on
/// all basis pairs by induction over the tree.
fn propagate_and_verify(
    tgt: &Arc<Algebra>,
    group: &crate::groups::Group,
    bfs: &[usize],
    f: &[Scalar],
    tuple: &[&Vec<Scalar>],
    scratch: &mut [Scalar],
) -> Option<Vec<Vec<Scalar>>> {
    let mut values = vec![tgt.zero_vec(); group.n];
    values[group.id_index] = f.to_vec();
    for &g in bfs {
        if g == group.id_index {
            continue;
        }
        let (h, i) = group.tree[g].expect("tree covers the group");
        let mut v = tgt.zero_vec();
        tgt.mul_vec_into(&values[h], tuple[i], &mut v);
        values[g] = v;
    }
    for g in 0..group.n {
        for (i, u) in tuple.iter().enumerate() {
            tgt.mul_vec_into(&values[g], u, scratch);
            if scratch != &values[group.mul[g][group.generators[i]]][..] {
                return None;
            }
        }
    }
    Some(values)
}

/// Number of homomorphisms src -> tgt.
pub fn count_homs(src: &Arc<Algebra>, tgt: &Arc<Algebra>, bound: u64) -> Result<u64> {
    Ok(survey_homs(src, tgt, bound, |_| false)?.count)
}

/// All homomorphisms src -> tgt in canonical order.
pub fn all_homs(src: &Arc<Algebra>, tgt: &Arc<Algebra>, bound: u64) -> Result<Vec<AlgHom>> {
    let survey = survey_homs(src, tgt, bound, |_| true)?;
    Ok(survey
        .kept
        .into_iter()
        .map(|t| t.into_hom(src, tgt))
        .collect())
}

/// All idempotent endomorphisms of a group algebra, in canonical order,
/// together with the total endomorphism count.
pub fn idempotent_endos(a: &Arc<Algebra>, bound: u64) -> Result<(u64, Vec<AlgHom>)> {
    let survey = survey_homs(a, a, bound, |t| t.is_idempotent(a))?;
    let homs = survey.kept.into_iter().map(|t| t.into_hom(a, a)).collect();
    Ok((survey.count, homs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_algebra;
    use crate::ffield::FieldSpec;
    use crate::groups;
    use crate::DEFAULT_MAX_ELEMENTS;

    fn ga(p: u64, k: u32, id: (u32, u32)) -> Arc<Algebra> {
        group_algebra(
            &FieldSpec::make(p, k).unwrap(),
            &groups::catalog(id).unwrap(),
        )
    }

    #[test]
    fn endo_counts_small_rows() {
        let bound = DEFAULT_MAX_ELEMENTS;
        assert_eq!(
            count_homs(&ga(2, 1, (1, 1)), &ga(2, 1, (1, 1)), bound).unwrap(),
            2
        );
        assert_eq!(
            count_homs(&ga(3, 1, (2, 1)), &ga(3, 1, (2, 1)), bound).unwrap(),
            9
        );
        assert_eq!(
            count_homs(&ga(2, 1, (3, 1)), &ga(2, 1, (3, 1)), bound).unwrap(),
            8
        );
        assert_eq!(
            count_homs(&ga(2, 2, (3, 1)), &ga(2, 2, (3, 1)), bound).unwrap(),
            64
        );
        assert_eq!(
            count_homs(&ga(2, 1, (4, 2)), &ga(2, 1, (4, 2)), bound).unwrap(),
            65
        );
    }

    #[test]
    fn cross_homs_c6_to_c3() {
        // AllHoms(GF(2)[C6], GF(2)[C3]) has 8 elements
        let src = ga(2, 1, (6, 2));
        let tgt = ga(2, 1, (3, 1));
        let homs = all_homs(&src, &tgt, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(homs.len(), 8);
        for h in &homs {
            assert_eq!(h.apply(&src.zero_vec()), tgt.zero_vec());
        }
        // canonical order is ascending in (f, generator image)
        let keys: Vec<(u64, u64)> = homs
            .iter()
            .map(|h| {
                let f = h.apply(&src.unit.clone().unwrap());
                (tgt.encode(&f), tgt.encode(&h.cols[1]))
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn idempotent_endos_match_table() {
        let a = ga(3, 1, (2, 1));
        let (end, ie) = idempotent_endos(&a, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(end, 9);
        assert_eq!(ie.len(), 6);
        for h in &ie {
            assert!(h.is_idempotent_endo());
        }

        let b = ga(2, 1, (3, 1));
        let (end_b, ie_b) = idempotent_endos(&b, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(end_b, 8);
        assert_eq!(ie_b.len(), 5);
    }

    #[test]
    fn kernel_image_and_predicates() {
        let src = ga(2, 1, (6, 2));
        let tgt = ga(2, 1, (3, 1));
        let sg = src.group.clone().unwrap();
        let tg = tgt.group.clone().unwrap();
        // C6 -> C3 reduction mod 3
        let gh = groups::group_hom(&sg, &tg, &[1]).unwrap();
        let h = functor_on_group_hom(&src, &tgt, &gh).unwrap();
        assert!(h.is_surjective());
        assert!(!h.is_injective());
        assert_eq!(h.kernel().dim(), 3);
        assert_eq!(h.image().dim(), 3);
        assert!(!h.is_bijective());

        let idh = AlgHom::identity(&src);
        assert!(idh.is_identity() && idh.is_bijective() && idh.is_idempotent_endo());
        let z = AlgHom::zero(&src, &tgt);
        assert!(AlgHom::from_columns(&src, &tgt, z.cols.clone()).is_ok());

        // composition: h after identity equals h
        let c = h.compose(&idh).unwrap();
        assert_eq!(c, h);
    }

    #[test]
    fn from_columns_rejects_non_homs() {
        let a = ga(2, 1, (2, 1));
        // swap of basis vectors: sends e to g, not multiplicative
        let cols = vec![a.basis_vec(1), a.basis_vec(0)];
        assert!(matches!(
            AlgHom::from_columns(&a, &a, cols),
            Err(Error::AxiomFailed { .. })
        ));
    }

    #[test]
    fn generator_image_extension() {
        let a = ga(2, 1, (4, 1));
        let unit = a.unit.clone().unwrap();
        // identity via generator images
        let h = hom_from_generator_images(&a, &a, &unit, &[a.basis_vec(1)]).unwrap();
        assert!(h.is_identity());
        // image that violates the generator order is rejected
        let g_plus_g3: Vec<Scalar> = a.add_vec(&a.basis_vec(1), &a.basis_vec(3));
        let bad = hom_from_generator_images(&a, &a, &unit, &[g_plus_g3]);
        assert!(bad.is_err());
    }
}
