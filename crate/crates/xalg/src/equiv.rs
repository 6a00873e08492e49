//! The equivalence between crossed modules and cat¹-algebras:
//! a crossed module ∂ : S -> R yields the cat¹-algebra on R ⋉ S with
//! s(r,a) = r, t(r,a) = r + ∂a, e(r) = (r,0); a cat¹-algebra yields the
//! crossed module t|ker(s) : ker(s) -> R with r acting through e(r).
//! Both roundtrips come back isomorphic, and the isomorphisms are built and
//! machine-verified here.

use crate::algebra::{semidirect_product, AlgebraAction};
use crate::cat1alg::{Cat1Alg, Cat1Morphism};
use crate::ffield::Scalar;
use crate::homs::AlgHom;
use crate::xmodalg::{XModAlg, XModMorphism};
use crate::Result;
use std::sync::Arc;

/// R ⋉ S with tail the projection, head r + ∂a, embedding r -> (r,0).
pub fn cat1_of_xmod(x: &XModAlg) -> Result<Cat1Alg> {
    let r = &x.range;
    let s = &x.source;
    let (a, embed_r, _embed_s, proj_r) = semidirect_product(r, s, &x.action)?;
    let tail = proj_r;
    let mut head_cols = Vec::with_capacity(a.dim);
    for i in 0..r.dim {
        head_cols.push(r.basis_vec(i));
    }
    for j in 0..s.dim {
        head_cols.push(x.boundary.cols[j].clone());
    }
    let head = AlgHom::from_columns(&a, r, head_cols)?;
    let c = Cat1Alg::assemble(tail, head, embed_r, None, None)?;
    c.check()?;
    Ok(c)
}

/// S = ker(s) in its echelon basis, boundary t restricted, action through
/// the embedding: r.a = e(r) a and a.r = a e(r).
pub fn xmod_of_cat1(c: &Cat1Alg) -> Result<XModAlg> {
    let a = &c.algebra;
    let r = &c.range;
    let ker = c.kernel_of_tail();
    let (s_alg, s_inc) = ker.as_algebra(&format!("ker tail of {}", c.name))?;
    // boundary: head restricted to the kernel
    let b_cols: Vec<Vec<Scalar>> = ker.basis.iter().map(|v| c.head.apply(v)).collect();
    let boundary = AlgHom::from_columns(&s_alg, r, b_cols)?;
    // conjugate action through e; stays in ker(s) because s(e(r) a) = r s(a) = 0
    let mut left = vec![vec![Vec::new(); s_alg.dim]; r.dim];
    let mut right = vec![vec![Vec::new(); r.dim]; s_alg.dim];
    for j in 0..r.dim {
        let er = &c.embedding.cols[j];
        for (i, kv) in ker.basis.iter().enumerate() {
            let l = a.mul_vec(er, kv);
            let rr = a.mul_vec(kv, er);
            left[j][i] = ker.coords_of(&l).expect("e(r) ker(s) lands in ker(s)");
            right[i][j] = ker.coords_of(&rr).expect("ker(s) e(r) lands in ker(s)");
        }
    }
    let action = AlgebraAction::two_sided(r, &s_alg, left, right)?;
    let x = XModAlg::assemble(boundary, action, Some(s_inc), None)?;
    x.check()?;
    Ok(x)
}

/// The isomorphism from a crossed module onto the roundtrip through its
/// cat¹-algebra: a -> (0,a) on sources, identity on ranges. Returns the
/// verified bijective morphism together with the roundtripped object.
pub fn roundtrip_iso_xmod(x: &Arc<XModAlg>) -> Result<(Arc<XModAlg>, XModMorphism)> {
    let c = cat1_of_xmod(x)?;
    let back = Arc::new(xmod_of_cat1(&c)?);
    let dr = x.range.dim;
    // the source of `back` is ker(proj_R) inside R ⋉ S; express (0, s_i)
    let semidirect = &c.algebra;
    let ker = c.kernel_of_tail();
    let mut s_cols = Vec::with_capacity(x.source.dim);
    for i in 0..x.source.dim {
        let mut amb = semidirect.zero_vec();
        amb[dr + i] = 1;
        s_cols.push(
            ker.coords_of(&amb)
                .expect("(0,s) lies in the kernel of the projection"),
        );
    }
    let s_hom = AlgHom::from_columns(&x.source, &back.source, s_cols)?;
    let r_hom = AlgHom::identity(&x.range);
    let iso = XModMorphism::new(x.clone(), back.clone(), s_hom, r_hom)?;
    if !iso.is_bijective() {
        return Err(crate::Error::AxiomFailed {
            axiom: "roundtrip isomorphism",
            witness: format!("{} is not bijective onto its roundtrip", x.name),
        });
    }
    Ok((back, iso))
}

/// The isomorphism from a cat¹-algebra onto the roundtrip through its
/// crossed module: a -> (s(a), a - e(s(a))) on top algebras, identity on
/// ranges.
pub fn roundtrip_iso_cat1(c: &Arc<Cat1Alg>) -> Result<(Arc<Cat1Alg>, Cat1Morphism)> {
    let x = xmod_of_cat1(c)?;
    let back = Arc::new(cat1_of_xmod(&x)?);
    let a = &c.algebra;
    let ker = c.kernel_of_tail();
    let dr = c.range.dim;
    let mut a_cols = Vec::with_capacity(a.dim);
    for i in 0..a.dim {
        let bi = a.basis_vec(i);
        let r_part = &c.tail.cols[i];
        let es = c.embedding.apply(r_part);
        let s_part_amb = a.sub_vec(&bi, &es);
        let s_part = ker
            .coords_of(&s_part_amb)
            .expect("a - e(s(a)) lies in ker(s)");
        let mut col = back.algebra.zero_vec();
        col[..dr].copy_from_slice(r_part);
        col[dr..].copy_from_slice(&s_part);
        a_cols.push(col);
    }
    let a_hom = AlgHom::from_columns(a, &back.algebra, a_cols)?;
    let r_hom = AlgHom::identity(&c.range);
    let iso = Cat1Morphism::new(c.clone(), back.clone(), a_hom, r_hom)?;
    if !iso.is_bijective() {
        return Err(crate::Error::AxiomFailed {
            axiom: "roundtrip isomorphism",
            witness: format!("{} is not bijective onto its roundtrip", c.name),
        });
    }
    Ok((back, iso))
}

/// On R ⋉ S built from a crossed module, head - tail equals ∂ after
/// projecting onto S. Used as a structural sanity check.
pub fn head_minus_tail_is_boundary(x: &XModAlg, c: &Cat1Alg) -> bool {
    let dr = x.range.dim;
    for i in 0..c.algebra.dim {
        let diff = x.range.sub_vec(&c.head.cols[i], &c.tail.cols[i]);
        let s_part: Vec<Scalar> = if i < dr {
            x.source.zero_vec()
        } else {
            x.source.basis_vec(i - dr)
        };
        if diff != x.boundary.apply(&s_part) {
            return false;
        }
    }
    true
}

/// Convenience: is the roundtrip of `x` equal to `x` up to the canonical
/// isomorphism (always true when the roundtrip morphisms verify)?
pub fn xmod_roundtrip_ok(x: &Arc<XModAlg>) -> bool {
    roundtrip_iso_xmod(x).is_ok()
}

pub fn cat1_roundtrip_ok(c: &Arc<Cat1Alg>) -> bool {
    roundtrip_iso_cat1(c).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{augmentation_ideal, group_algebra, span_closure, Algebra, SubspaceKind};
    use crate::cat1alg::{cat1_by_endomorphisms, identity_cat1};
    use crate::ffield::FieldSpec;
    use crate::groups;
    use crate::xmodalg::xmod_by_ideal;

    fn ga(p: u64, k: u32, id: (u32, u32)) -> Arc<Algebra> {
        group_algebra(
            &FieldSpec::make(p, k).unwrap(),
            &groups::catalog(id).unwrap(),
        )
    }

    #[test]
    fn xmod_to_cat1_sizes_and_invariant() {
        // GF(5)[K4] with augmentation ideal: cat1 on a 625*125-element algebra
        let a = ga(5, 1, (4, 2));
        let aug = augmentation_ideal(&a).unwrap();
        let x = xmod_by_ideal(&a, &aug).unwrap();
        let c = cat1_of_xmod(&x).unwrap();
        assert_eq!(c.size(), [625 * 125, 625]);
        assert!(c.is_cat1());
        assert!(head_minus_tail_is_boundary(&x, &c));
    }

    #[test]
    fn xmod_roundtrips() {
        // commutative and non-commutative cases
        for (p, id) in [(5u64, (4, 2)), (2, (6, 1)), (3, (6, 1)), (2, (4, 1))] {
            let a = ga(p, 1, id);
            let aug = augmentation_ideal(&a).unwrap();
            let x = Arc::new(xmod_by_ideal(&a, &aug).unwrap());
            let (back, iso) = roundtrip_iso_xmod(&x).unwrap();
            assert_eq!(back.size(), x.size());
            assert!(iso.is_bijective());
        }
        // a one-generator ideal too
        let a = ga(5, 1, (4, 2));
        let j = span_closure(&a, &[vec![1, 1, 4, 4]], SubspaceKind::Ideal);
        let x = Arc::new(xmod_by_ideal(&a, &j).unwrap());
        assert!(xmod_roundtrip_ok(&x));
    }

    #[test]
    fn cat1_roundtrips() {
        let a = ga(2, 2, (4, 2));
        let c = Arc::new(identity_cat1(&a));
        let (back, iso) = roundtrip_iso_cat1(&c).unwrap();
        assert_eq!(back.size(), c.size());
        assert!(iso.is_bijective());

        // an endo-built cat1 with a proper range
        let b = ga(2, 1, (2, 1));
        let eps = AlgHom::from_columns(&b, &b, vec![b.basis_vec(0), b.basis_vec(0)]).unwrap();
        let cb = Arc::new(cat1_by_endomorphisms(&eps, &eps).unwrap());
        assert!(cat1_roundtrip_ok(&cb));
    }

    #[test]
    fn cat1_to_xmod_is_xmod() {
        let a = ga(2, 1, (4, 2));
        let c = Arc::new(identity_cat1(&a));
        let x = xmod_of_cat1(&c).unwrap();
        assert!(x.is_xmod());
        assert_eq!(x.size(), [1, a.element_count()]);
    }
}
