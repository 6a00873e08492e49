//! Crossed modules of algebras: a boundary homomorphism ∂ : S -> R together
//! with a two-sided action of R on S satisfying
//!   XModAlg1: ∂(r.s) = r ∂(s)  and  ∂(s.r) = ∂(s) r,
//!   XModAlg2: ∂(s).s' = s s' = s.∂(s').
//! Constructors cover ideal inclusions, modules with zero multiplication,
//! surjections with annihilating kernel, and the multiplier map.

use crate::algebra::{
    is_ideal, multiplier_algebra, square_span, Algebra, AlgebraAction, Subspace, SubspaceKind,
};
use crate::ffield::Scalar;
use crate::homs::AlgHom;
use crate::linalg;
use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

pub struct XModAlg {
    pub source: Arc<Algebra>,
    pub range: Arc<Algebra>,
    pub boundary: AlgHom,
    pub action: AlgebraAction,
    /// embedding of the source into its ambient algebra (identity when the
    /// crossed module is not presented as a sub-object)
    pub s_embed: AlgHom,
    pub r_embed: AlgHom,
    pub name: String,
}

impl fmt::Debug for XModAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl XModAlg {
    /// Shape-checks only; axioms are checked separately so that violating
    /// instances can still be inspected and reported.
    pub fn assemble(
        boundary: AlgHom,
        action: AlgebraAction,
        s_embed: Option<AlgHom>,
        r_embed: Option<AlgHom>,
    ) -> Result<XModAlg> {
        let source = boundary.source.clone();
        let range = boundary.target.clone();
        if action.acting != range || action.acted != source {
            return Err(Error::IncompatibleParents(
                "action does not match the boundary's algebras".to_string(),
            ));
        }
        let s_embed = s_embed.unwrap_or_else(|| AlgHom::identity(&source));
        let r_embed = r_embed.unwrap_or_else(|| AlgHom::identity(&range));
        if s_embed.source != source || r_embed.source != range {
            return Err(Error::IncompatibleParents(
                "ambient embeddings do not start at the crossed module's algebras".to_string(),
            ));
        }
        let name = format!("[{}->{}]", source.name, range.name);
        Ok(XModAlg {
            source,
            range,
            boundary,
            action,
            s_embed,
            r_embed,
            name,
        })
    }

    /// Assembles and verifies both crossed module axioms.
    pub fn new(boundary: AlgHom, action: AlgebraAction) -> Result<XModAlg> {
        let x = XModAlg::assemble(boundary, action, None, None)?;
        x.check()?;
        Ok(x)
    }

    /// XModAlg1 on every basis pair, both sides.
    pub fn check_pre(&self) -> Result<()> {
        let s = &self.source;
        let r = &self.range;
        for i in 0..r.dim {
            let ri = r.basis_vec(i);
            for j in 0..s.dim {
                let sj = s.basis_vec(j);
                let lhs = self.boundary.apply(&self.action.act_left(&ri, &sj));
                let rhs = r.mul_vec(&ri, &self.boundary.cols[j]);
                if lhs != rhs {
                    return Err(Error::AxiomFailed {
                        axiom: "XModAlg1",
                        witness: format!("d(r{i}.s{j}) != r{i} d(s{j}) in {}", self.name),
                    });
                }
                let lhs = self.boundary.apply(&self.action.act_right(&sj, &ri));
                let rhs = r.mul_vec(&self.boundary.cols[j], &ri);
                if lhs != rhs {
                    return Err(Error::AxiomFailed {
                        axiom: "XModAlg1",
                        witness: format!("d(s{j}.r{i}) != d(s{j}) r{i} in {}", self.name),
                    });
                }
            }
        }
        Ok(())
    }

    /// Both axioms on every basis pair.
    pub fn check(&self) -> Result<()> {
        self.check_pre()?;
        let s = &self.source;
        for i in 0..s.dim {
            let si = s.basis_vec(i);
            let di = &self.boundary.cols[i];
            for j in 0..s.dim {
                let sj = s.basis_vec(j);
                let prod = &s.structure[i][j];
                if self.action.act_left(di, &sj) != *prod {
                    return Err(Error::AxiomFailed {
                        axiom: "XModAlg2",
                        witness: format!("d(s{i}).s{j} != s{i} s{j} in {}", self.name),
                    });
                }
                if self.action.act_right(&si, &self.boundary.cols[j]) != *prod {
                    return Err(Error::AxiomFailed {
                        axiom: "XModAlg2",
                        witness: format!("s{i}.d(s{j}) != s{i} s{j} in {}", self.name),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_pre_xmod(&self) -> bool {
        self.check_pre().is_ok()
    }

    pub fn is_xmod(&self) -> bool {
        self.check().is_ok()
    }

    /// `[|S|, |R|]`.
    pub fn size(&self) -> [u128; 2] {
        [self.source.element_count(), self.range.element_count()]
    }
}

/// The inclusion of an ideal: S = the ideal in its echelon basis, R = the
/// whole algebra, action by multiplication on both sides.
pub fn xmod_by_ideal(a: &Arc<Algebra>, ideal: &Subspace) -> Result<XModAlg> {
    if !is_ideal(a, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let (s_alg, inclusion) = ideal.as_algebra(&format!("ideal of {}", a.name))?;
    let action = AlgebraAction::multiplication_on_ideal(a, ideal, &s_alg)?;
    let boundary = inclusion.clone();
    let x = XModAlg::assemble(boundary, action, Some(inclusion), None)?;
    x.check()?;
    Ok(x)
}

/// Zero boundary on a module: the acted algebra must have zero
/// multiplication, so both axioms degenerate.
pub fn xmod_by_module(action: AlgebraAction) -> Result<XModAlg> {
    if !square_span(&action.acted).is_zero() {
        return Err(Error::AxiomFailed {
            axiom: "module multiplication",
            witness: format!("{} has nonzero products", action.acted.name),
        });
    }
    let boundary = AlgHom::zero(&action.acted, &action.acting);
    let x = XModAlg::assemble(boundary, action, None, None)?;
    x.check()?;
    Ok(x)
}

/// A surjection d : S -> R with ker(d)·S = S·ker(d) = 0 becomes a crossed
/// module: r acts on s through any preimage of r, which the kernel
/// condition makes well defined.
pub fn xmod_by_central_extension(d: &AlgHom) -> Result<XModAlg> {
    if !d.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let s = &d.source;
    let r = &d.target;
    let ker = d.kernel();
    for kv in &ker.basis {
        for i in 0..s.dim {
            let b = s.basis_vec(i);
            if s.mul_vec(kv, &b).iter().any(|&c| c != 0)
                || s.mul_vec(&b, kv).iter().any(|&c| c != 0)
            {
                return Err(Error::IllDefinedAction(format!(
                    "ker(d) does not annihilate {}",
                    s.name
                )));
            }
        }
    }
    // one preimage per range basis vector
    let preimages: Vec<Vec<Scalar>> = (0..r.dim)
        .map(|j| {
            linalg::solve_columns(&s.field, &d.cols, &r.basis_vec(j)).expect("d is surjective")
        })
        .collect();
    let mut left = vec![vec![Vec::new(); s.dim]; r.dim];
    let mut right = vec![vec![Vec::new(); r.dim]; s.dim];
    for j in 0..r.dim {
        for i in 0..s.dim {
            let b = s.basis_vec(i);
            left[j][i] = s.mul_vec(&preimages[j], &b);
            right[i][j] = s.mul_vec(&b, &preimages[j]);
        }
    }
    let action = AlgebraAction::two_sided(r, s, left, right)?;
    let x = XModAlg::assemble(d.clone(), action, None, None)?;
    x.check()?;
    Ok(x)
}

/// The canonical map S -> M(S) into the multiplier algebra; requires S
/// commutative with Ann(S) = 0 or S² = S.
pub fn xmod_by_multiplier(s: &Arc<Algebra>) -> Result<XModAlg> {
    let (m, canonical) = multiplier_algebra(s)?; // hypotheses checked inside
    let n = s.dim;
    // the action m . x = m(x) needs each M(S) basis vector as a matrix; the
    // algebra only retains structure constants, so recompute the echelon
    // basis of the multiplier space (same equations, same order)
    let mats = multiplier_basis_matrices(s)?;
    assert_eq!(mats.len(), m.dim);
    let apply_mat = |mat: &Vec<Vec<Scalar>>, x: &[Scalar]| -> Vec<Scalar> {
        let mut out = s.zero_vec();
        for (c, col) in mat.iter().enumerate() {
            if x[c] == 0 {
                continue;
            }
            for k in 0..n {
                out[k] = s.field.add(out[k], s.field.mul(x[c], col[k]));
            }
        }
        out
    };
    let mut left = vec![vec![Vec::new(); n]; m.dim];
    let mut right = vec![vec![Vec::new(); m.dim]; n];
    for j in 0..m.dim {
        for i in 0..n {
            let v = apply_mat(&mats[j], &s.basis_vec(i));
            left[j][i] = v.clone();
            right[i][j] = v;
        }
    }
    let action = AlgebraAction::two_sided(&m, s, left, right)?;
    let x = XModAlg::assemble(canonical, action, None, None)?;
    x.check()?;
    Ok(x)
}

/// Echelon basis of the multiplier space as column-major matrices,
/// consistent with the basis order used by `multiplier_algebra`.
fn multiplier_basis_matrices(s: &Arc<Algebra>) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let n = s.dim;
    let mut equations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = &s.structure[i][j];
            for k in 0..n {
                let mut eq = vec![0 as Scalar; n * n];
                for c in 0..n {
                    for r in 0..n {
                        let mut coeff = if r == k { prod[c] } else { 0 };
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
    Ok(basis
        .iter()
        .map(|v| (0..n).map(|c| v[c * n..(c + 1) * n].to_vec()).collect())
        .collect())
}

/// Sub-crossed-module on subspaces of the source and range; verifies
/// closure under multiplication, boundary and action, and threads the
/// ambient embeddings through.
pub fn sub_xmod(x: &XModAlg, s_sub: &Subspace, r_sub: &Subspace, name: &str) -> Result<XModAlg> {
    if s_sub.parent != x.source || r_sub.parent != x.range {
        return Err(Error::IncompatibleParents(
            "subspaces do not live in the crossed module's algebras".to_string(),
        ));
    }
    let (s_alg, s_inc) = s_sub.as_algebra(&format!("{name}-src"))?;
    let (r_alg, r_inc) = r_sub.as_algebra(&format!("{name}-rng"))?;
    // boundary restricts
    let mut b_cols = Vec::new();
    for v in &s_sub.basis {
        let img = x.boundary.apply(v);
        b_cols.push(r_sub.coords_of(&img).ok_or(Error::OutsideTarget)?);
    }
    let boundary = AlgHom::from_columns(&s_alg, &r_alg, b_cols)?;
    // action restricts
    let mut left = vec![vec![Vec::new(); s_alg.dim]; r_alg.dim];
    let mut right = vec![vec![Vec::new(); r_alg.dim]; s_alg.dim];
    for (j, rv) in r_sub.basis.iter().enumerate() {
        for (i, sv) in s_sub.basis.iter().enumerate() {
            let l = x.action.act_left(rv, sv);
            let r = x.action.act_right(sv, rv);
            left[j][i] = s_sub.coords_of(&l).ok_or(Error::OutsideTarget)?;
            right[i][j] = s_sub.coords_of(&r).ok_or(Error::OutsideTarget)?;
        }
    }
    let action = AlgebraAction::two_sided(&r_alg, &s_alg, left, right)?;
    let s_embed = x.s_embed.compose(&s_inc)?;
    let r_embed = x.r_embed.compose(&r_inc)?;
    let sub = XModAlg::assemble(boundary, action, Some(s_embed), Some(r_embed))?;
    sub.check()?;
    Ok(sub)
}

/// Expresses an ambient vector in the coordinates of an embedded algebra.
pub(crate) fn lift_through(embed: &AlgHom, ambient: &[Scalar]) -> Option<Vec<Scalar>> {
    linalg::solve_columns(&embed.target.field, &embed.cols, ambient)
}

/// True iff `sub` sits inside `sup`: same ambient algebras, source and
/// range contained, and boundary/action agreeing through the embeddings.
pub fn is_sub_xmod(sub: &XModAlg, sup: &XModAlg) -> bool {
    if sub.s_embed.target != sup.s_embed.target || sub.r_embed.target != sup.r_embed.target {
        return false;
    }
    // lift each basis vector of sub into sup's coordinates
    let lift_s: Option<Vec<Vec<Scalar>>> = sub
        .s_embed
        .cols
        .iter()
        .map(|v| lift_through(&sup.s_embed, v))
        .collect();
    let lift_r: Option<Vec<Vec<Scalar>>> = sub
        .r_embed
        .cols
        .iter()
        .map(|v| lift_through(&sup.r_embed, v))
        .collect();
    let (lift_s, lift_r) = match (lift_s, lift_r) {
        (Some(a), Some(b)) => (a, b),
        _ => return false,
    };
    // boundary agrees
    for (i, sv) in lift_s.iter().enumerate() {
        let via_sup = sup.r_embed.apply(&sup.boundary.apply(sv));
        let via_sub = sub.r_embed.apply(&sub.boundary.cols[i]);
        if via_sup != via_sub {
            return false;
        }
    }
    // action agrees on basis pairs
    for (j, rv) in lift_r.iter().enumerate() {
        let rj = sub.range.basis_vec(j);
        for (i, sv) in lift_s.iter().enumerate() {
            let si = sub.source.basis_vec(i);
            let sup_l = sup.s_embed.apply(&sup.action.act_left(rv, sv));
            let sub_l = sub.s_embed.apply(&sub.action.act_left(&rj, &si));
            if sup_l != sub_l {
                return false;
            }
            let sup_r = sup.s_embed.apply(&sup.action.act_right(sv, rv));
            let sub_r = sub.s_embed.apply(&sub.action.act_right(&si, &rj));
            if sup_r != sub_r {
                return false;
            }
        }
    }
    true
}

/// A morphism of crossed modules: a pair of algebra homomorphisms
/// commuting with the boundaries and the actions.
pub struct XModMorphism {
    pub source: Arc<XModAlg>,
    pub target: Arc<XModAlg>,
    pub s_hom: AlgHom,
    pub r_hom: AlgHom,
}

impl fmt::Debug for XModMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "XModMorphism({} -> {})",
            self.source.name, self.target.name
        )
    }
}

impl XModMorphism {
    pub fn new(
        source: Arc<XModAlg>,
        target: Arc<XModAlg>,
        s_hom: AlgHom,
        r_hom: AlgHom,
    ) -> Result<XModMorphism> {
        let m = XModMorphism {
            source,
            target,
            s_hom,
            r_hom,
        };
        m.check()?;
        Ok(m)
    }

    pub fn check(&self) -> Result<()> {
        if self.s_hom.source != self.source.source
            || self.s_hom.target != self.target.source
            || self.r_hom.source != self.source.range
            || self.r_hom.target != self.target.range
        {
            return Err(Error::IncompatibleParents(
                "morphism components do not match the crossed modules".to_string(),
            ));
        }
        // boundary square commutes
        for i in 0..self.source.source.dim {
            let lhs = self.target.boundary.apply(&self.s_hom.cols[i]);
            let rhs = self.r_hom.apply(&self.source.boundary.cols[i]);
            if lhs != rhs {
                return Err(Error::AxiomFailed {
                    axiom: "morphism boundary square",
                    witness: format!("s{i}"),
                });
            }
        }
        // equivariance on basis pairs, both sides
        for j in 0..self.source.range.dim {
            let rj = self.source.range.basis_vec(j);
            let rj_img = &self.r_hom.cols[j];
            for i in 0..self.source.source.dim {
                let si = self.source.source.basis_vec(i);
                let si_img = &self.s_hom.cols[i];
                let lhs = self.s_hom.apply(&self.source.action.act_left(&rj, &si));
                let rhs = self.target.action.act_left(rj_img, si_img);
                if lhs != rhs {
                    return Err(Error::AxiomFailed {
                        axiom: "morphism equivariance",
                        witness: format!("(r{j},s{i})"),
                    });
                }
                let lhs = self.s_hom.apply(&self.source.action.act_right(&si, &rj));
                let rhs = self.target.action.act_right(si_img, rj_img);
                if lhs != rhs {
                    return Err(Error::AxiomFailed {
                        axiom: "morphism equivariance",
                        witness: format!("(s{i},r{j})"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn identity(x: &Arc<XModAlg>) -> XModMorphism {
        XModMorphism {
            source: x.clone(),
            target: x.clone(),
            s_hom: AlgHom::identity(&x.source),
            r_hom: AlgHom::identity(&x.range),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.s_hom.is_injective() && self.r_hom.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.s_hom.is_surjective() && self.r_hom.is_surjective()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The kernel crossed module, as a sub-crossed-module of the source.
    pub fn kernel(&self) -> Result<XModAlg> {
        let ks = self.s_hom.kernel();
        let kr = self.r_hom.kernel();
        let ks = Subspace::from_spanning(&self.source.source, &ks.basis, SubspaceKind::Ideal);
        let kr = Subspace::from_spanning(&self.source.range, &kr.basis, SubspaceKind::Ideal);
        sub_xmod(&self.source, &ks, &kr, "ker")
    }

    /// The image crossed module, as a sub-crossed-module of the target.
    pub fn image(&self) -> Result<XModAlg> {
        let is_ = Subspace::from_spanning(
            &self.target.source,
            &self.s_hom.cols,
            SubspaceKind::Subalgebra,
        );
        let ir = Subspace::from_spanning(
            &self.target.range,
            &self.r_hom.cols,
            SubspaceKind::Subalgebra,
        );
        sub_xmod(&self.target, &is_, &ir, "im")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{augmentation_ideal, group_algebra, span_closure};
    use crate::ffield::FieldSpec;
    use crate::groups;

    fn ga(p: u64, k: u32, id: (u32, u32)) -> Arc<Algebra> {
        group_algebra(
            &FieldSpec::make(p, k).unwrap(),
            &groups::catalog(id).unwrap(),
        )
    }

    #[test]
    fn ideal_xmods() {
        // GF(5)[K4] with its augmentation ideal: Size [125, 625]
        let a = ga(5, 1, (4, 2));
        let aug = augmentation_ideal(&a).unwrap();
        let x = xmod_by_ideal(&a, &aug).unwrap();
        assert_eq!(x.size(), [125, 625]);
        assert!(x.is_xmod());

        // one-generator ideal J: Size [5, 625]
        let j = span_closure(&a, &[vec![1, 1, 4, 4]], SubspaceKind::Ideal);
        let xj = xmod_by_ideal(&a, &j).unwrap();
        assert_eq!(xj.size(), [5, 625]);

        // non-commutative ambient algebra
        let s3 = ga(2, 1, (6, 1));
        let aug3 = augmentation_ideal(&s3).unwrap();
        let x3 = xmod_by_ideal(&s3, &aug3).unwrap();
        assert!(x3.is_xmod());

        // a non-ideal subspace is rejected
        let unit_span =
            Subspace::from_spanning(&a, &[a.unit.clone().unwrap()], SubspaceKind::Ideal);
        assert!(matches!(
            xmod_by_ideal(&a, &unit_span),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn pre_but_not_xmod() {
        // zero boundary with the multiplication action on S = R = GF(2)[C2]
        let a = ga(2, 1, (2, 1));
        let full = Subspace::full(&a, SubspaceKind::Ideal);
        let action = AlgebraAction::multiplication_on_ideal(&a, &full, &a).unwrap();
        let x = XModAlg::assemble(AlgHom::zero(&a, &a), action, None, None).unwrap();
        assert!(x.is_pre_xmod());
        assert!(!x.is_xmod());
        assert!(matches!(
            x.check(),
            Err(Error::AxiomFailed {
                axiom: "XModAlg2",
                ..
            })
        ));
    }

    #[test]
    fn module_xmod() {
        // augmentation ideal of GF(2)[C2] squares to zero: a module over R
        let r = ga(2, 1, (2, 1));
        let aug = augmentation_ideal(&r).unwrap();
        let (s, _) = aug.as_algebra("M").unwrap();
        let action = AlgebraAction::multiplication_on_ideal(&r, &aug, &s).unwrap();
        let x = xmod_by_module(action).unwrap();
        assert_eq!(x.size(), [2, 4]);
        assert!(x.is_xmod());

        // a module constructor rejects S with products
        let full = Subspace::full(&r, SubspaceKind::Ideal);
        let bad = AlgebraAction::multiplication_on_ideal(&r, &full, &r).unwrap();
        assert!(xmod_by_module(bad).is_err());
    }

    #[test]
    fn central_extension_xmod() {
        // identity is a central extension with zero kernel
        let r = ga(3, 1, (2, 1));
        let x = xmod_by_central_extension(&AlgHom::identity(&r)).unwrap();
        assert!(x.is_xmod());
        assert_eq!(x.size(), [9, 9]);

        // augmentation map GF(2)[C2] -> GF(2): kernel does not annihilate
        let a = ga(2, 1, (2, 1));
        let k = ga(2, 1, (1, 1));
        let aug_map = AlgHom::from_columns(&a, &k, vec![vec![1], vec![1]]).unwrap();
        assert!(matches!(
            xmod_by_central_extension(&aug_map),
            Err(Error::IllDefinedAction(_))
        ));

        // non-surjective map is rejected
        let zero = AlgHom::zero(&a, &k);
        assert!(matches!(
            xmod_by_central_extension(&zero),
            Err(Error::NotSurjective)
        ));
    }

    #[test]
    fn multiplier_xmod() {
        let s = ga(3, 1, (2, 1));
        let x = xmod_by_multiplier(&s).unwrap();
        assert!(x.is_xmod());
        assert_eq!(x.size(), [9, 9]);

        // hypothesis failure: square-zero S
        let a = ga(2, 1, (2, 1));
        let aug = augmentation_ideal(&a).unwrap();
        let (sq0, _) = aug.as_algebra("N").unwrap();
        assert!(xmod_by_multiplier(&sq0).is_err());
    }

    #[test]
    fn sub_xmods_and_morphisms() {
        let a = ga(5, 1, (4, 2));
        let aug = augmentation_ideal(&a).unwrap();
        let x = Arc::new(xmod_by_ideal(&a, &aug).unwrap());
        // J = <1+a+4b+4ab> inside the augmentation crossed module
        let j_amb = span_closure(&a, &[vec![1, 1, 4, 4]], SubspaceKind::Ideal);
        let j_in_s = Subspace::from_spanning(
            &x.source,
            &j_amb
                .basis
                .iter()
                .map(|v| aug.coords_of(v).unwrap())
                .collect::<Vec<_>>(),
            SubspaceKind::Ideal,
        );
        let r_full = Subspace::full(&x.range, SubspaceKind::Subalgebra);
        let sub = sub_xmod(&x, &j_in_s, &r_full, "J").unwrap();
        assert_eq!(sub.size(), [5, 625]);
        assert!(is_sub_xmod(&sub, &x));
        assert!(is_sub_xmod(&x, &x));
        assert!(!is_sub_xmod(&x, &sub));

        // identity morphism and its kernel/image
        let idm = XModMorphism::identity(&x);
        assert!(idm.check().is_ok());
        assert!(idm.is_bijective());
        let ker = idm.kernel().unwrap();
        assert_eq!(ker.size(), [1, 1]);
        let img = idm.image().unwrap();
        assert_eq!(img.size(), x.size());
    }
}
