//! Cat¹-algebras: an algebra A with tail and head homomorphisms s, t onto a
//! range R, and an embedding e with
//!   Cat1Alg1: s ∘ e = id_R = t ∘ e,
//!   Cat1Alg2: ker(s) · ker(t) = 0 = ker(t) · ker(s).

use crate::algebra::{Algebra, Subspace, SubspaceKind};
use crate::ffield::Scalar;
use crate::homs::AlgHom;
use crate::xmodalg::lift_through;
use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

pub struct Cat1Alg {
    pub algebra: Arc<Algebra>,
    pub range: Arc<Algebra>,
    pub tail: AlgHom,
    pub head: AlgHom,
    pub embedding: AlgHom,
    /// ambient embeddings, identity unless built as a sub-object
    pub a_embed: AlgHom,
    pub r_embed: AlgHom,
    pub name: String,
}

impl fmt::Debug for Cat1Alg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl Cat1Alg {
    /// Shape-checks only, so violating instances can be inspected.
    pub fn assemble(
        tail: AlgHom,
        head: AlgHom,
        embedding: AlgHom,
        a_embed: Option<AlgHom>,
        r_embed: Option<AlgHom>,
    ) -> Result<Cat1Alg> {
        let algebra = tail.source.clone();
        let range = tail.target.clone();
        if head.source != algebra
            || head.target != range
            || embedding.source != range
            || embedding.target != algebra
        {
            return Err(Error::IncompatibleParents(
                "tail, head and embedding do not share algebras".to_string(),
            ));
        }
        let a_embed = a_embed.unwrap_or_else(|| AlgHom::identity(&algebra));
        let r_embed = r_embed.unwrap_or_else(|| AlgHom::identity(&range));
        if a_embed.source != algebra || r_embed.source != range {
            return Err(Error::IncompatibleParents(
                "ambient embeddings do not start at the cat1-algebra's algebras".to_string(),
            ));
        }
        let name = format!("[{}=>{}]", algebra.name, range.name);
        Ok(Cat1Alg {
            algebra,
            range,
            tail,
            head,
            embedding,
            a_embed,
            r_embed,
            name,
        })
    }

    pub fn new(tail: AlgHom, head: AlgHom, embedding: AlgHom) -> Result<Cat1Alg> {
        let c = Cat1Alg::assemble(tail, head, embedding, None, None)?;
        c.check()?;
        Ok(c)
    }

    /// Cat1Alg1: both retractions are the identity on R.
    pub fn check_pre(&self) -> Result<()> {
        let se = self.tail.compose(&self.embedding)?;
        if !se.is_identity() {
            return Err(Error::AxiomFailed {
                axiom: "Cat1Alg1",
                witness: format!("tail o embedding != id in {}", self.name),
            });
        }
        let te = self.head.compose(&self.embedding)?;
        if !te.is_identity() {
            return Err(Error::AxiomFailed {
                axiom: "Cat1Alg1",
                witness: format!("head o embedding != id in {}", self.name),
            });
        }
        Ok(())
    }

    /// Both axioms; the second kernel-product order is skipped when the
    /// algebra is commutative.
    pub fn check(&self) -> Result<()> {
        self.check_pre()?;
        let ks = self.kernel_of_tail();
        let kt = self.head.kernel();
        for x in &ks.basis {
            for y in &kt.basis {
                if self.algebra.mul_vec(x, y).iter().any(|&c| c != 0) {
                    return Err(Error::AxiomFailed {
                        axiom: "Cat1Alg2",
                        witness: format!("ker(s)ker(t) != 0 in {}", self.name),
                    });
                }
                if !self.algebra.is_commutative
                    && self.algebra.mul_vec(y, x).iter().any(|&c| c != 0)
                {
                    return Err(Error::AxiomFailed {
                        axiom: "Cat1Alg2",
                        witness: format!("ker(t)ker(s) != 0 in {}", self.name),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_pre_cat1(&self) -> bool {
        self.check_pre().is_ok()
    }

    pub fn is_cat1(&self) -> bool {
        self.check().is_ok()
    }

    pub fn kernel_of_tail(&self) -> Subspace {
        self.tail.kernel()
    }

    /// `[|A|, |R|]`.
    pub fn size(&self) -> [u128; 2] {
        [self.algebra.element_count(), self.range.element_count()]
    }
}

/// The cat¹-algebra defined by a pair of idempotent endomorphisms of A with
/// a common image: R is the image in its echelon basis, e its inclusion,
/// and s, t the corestrictions.
pub fn cat1_by_endomorphisms(sigma: &AlgHom, tau: &AlgHom) -> Result<Cat1Alg> {
    if !sigma.is_endo() || !tau.is_endo() || sigma.source != tau.source {
        return Err(Error::IncompatibleParents(
            "expected two endomorphisms of the same algebra".to_string(),
        ));
    }
    if !sigma.is_idempotent_endo() || !tau.is_idempotent_endo() {
        return Err(Error::NotIdempotent);
    }
    let a = &sigma.source;
    let img = sigma.image();
    if img != tau.image() {
        return Err(Error::ImageMismatch);
    }
    let (r, inclusion) = img.as_algebra(&format!("im in {}", a.name))?;
    let corestrict = |h: &AlgHom| -> Result<AlgHom> {
        let cols: Vec<Vec<Scalar>> = h
            .cols
            .iter()
            .map(|c| img.coords_of(c).expect("endomorphism maps into its image"))
            .collect();
        AlgHom::from_columns(a, &r, cols)
    };
    let tail = corestrict(sigma)?;
    let head = corestrict(tau)?;
    let c = Cat1Alg::assemble(tail, head, inclusion, None, None)?;
    c.check()?;
    Ok(c)
}

/// The cat¹-algebra with A = R and all structure maps the identity.
pub fn identity_cat1(a: &Arc<Algebra>) -> Cat1Alg {
    Cat1Alg::new(
        AlgHom::identity(a),
        AlgHom::identity(a),
        AlgHom::identity(a),
    )
    .expect("identity maps satisfy both axioms")
}

/// Sub-cat¹-algebra on subspaces of A and R closed under all three
/// structure maps.
pub fn sub_cat1(c: &Cat1Alg, a_sub: &Subspace, r_sub: &Subspace, name: &str) -> Result<Cat1Alg> {
    if a_sub.parent != c.algebra || r_sub.parent != c.range {
        return Err(Error::IncompatibleParents(
            "subspaces do not live in the cat1-algebra's algebras".to_string(),
        ));
    }
    let (a_alg, a_inc) = a_sub.as_algebra(&format!("{name}-top"))?;
    let (r_alg, r_inc) = r_sub.as_algebra(&format!("{name}-rng"))?;
    let restrict = |h: &AlgHom,
                    dom: &Subspace,
                    cod: &Subspace,
                    dom_alg: &Arc<Algebra>,
                    cod_alg: &Arc<Algebra>|
     -> Result<AlgHom> {
        let cols = dom
            .basis
            .iter()
            .map(|v| cod.coords_of(&h.apply(v)).ok_or(Error::OutsideTarget))
            .collect::<Result<Vec<_>>>()?;
        AlgHom::from_columns(dom_alg, cod_alg, cols)
    };
    let tail = restrict(&c.tail, a_sub, r_sub, &a_alg, &r_alg)?;
    let head = restrict(&c.head, a_sub, r_sub, &a_alg, &r_alg)?;
    let embedding = restrict(&c.embedding, r_sub, a_sub, &r_alg, &a_alg)?;
    let a_embed = c.a_embed.compose(&a_inc)?;
    let r_embed = c.r_embed.compose(&r_inc)?;
    let sub = Cat1Alg::assemble(tail, head, embedding, Some(a_embed), Some(r_embed))?;
    sub.check()?;
    Ok(sub)
}

/// True iff `sub` sits inside `sup` with agreeing structure maps, compared
/// through the ambient embeddings.
pub fn is_sub_cat1(sub: &Cat1Alg, sup: &Cat1Alg) -> bool {
    if sub.a_embed.target != sup.a_embed.target || sub.r_embed.target != sup.r_embed.target {
        return false;
    }
    let lift_a: Option<Vec<Vec<Scalar>>> = sub
        .a_embed
        .cols
        .iter()
        .map(|v| lift_through(&sup.a_embed, v))
        .collect();
    let lift_r: Option<Vec<Vec<Scalar>>> = sub
        .r_embed
        .cols
        .iter()
        .map(|v| lift_through(&sup.r_embed, v))
        .collect();
    let (lift_a, lift_r) = match (lift_a, lift_r) {
        (Some(a), Some(r)) => (a, r),
        _ => return false,
    };
    for (i, av) in lift_a.iter().enumerate() {
        if sup.r_embed.apply(&sup.tail.apply(av)) != sub.r_embed.apply(&sub.tail.cols[i]) {
            return false;
        }
        if sup.r_embed.apply(&sup.head.apply(av)) != sub.r_embed.apply(&sub.head.cols[i]) {
            return false;
        }
    }
    for (j, rv) in lift_r.iter().enumerate() {
        if sup.a_embed.apply(&sup.embedding.apply(rv)) != sub.a_embed.apply(&sub.embedding.cols[j])
        {
            return false;
        }
    }
    true
}

/// A morphism of cat¹-algebras: a pair of homomorphisms commuting with
/// tail, head and embedding.
pub struct Cat1Morphism {
    pub source: Arc<Cat1Alg>,
    pub target: Arc<Cat1Alg>,
    pub a_hom: AlgHom,
    pub r_hom: AlgHom,
}

impl fmt::Debug for Cat1Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cat1Morphism({} -> {})",
            self.source.name, self.target.name
        )
    }
}

impl Cat1Morphism {
    pub fn new(
        source: Arc<Cat1Alg>,
        target: Arc<Cat1Alg>,
        a_hom: AlgHom,
        r_hom: AlgHom,
    ) -> Result<Cat1Morphism> {
        let m = Cat1Morphism {
            source,
            target,
            a_hom,
            r_hom,
        };
        m.check()?;
        Ok(m)
    }

    pub fn check(&self) -> Result<()> {
        if self.a_hom.source != self.source.algebra
            || self.a_hom.target != self.target.algebra
            || self.r_hom.source != self.source.range
            || self.r_hom.target != self.target.range
        {
            return Err(Error::IncompatibleParents(
                "morphism components do not match the cat1-algebras".to_string(),
            ));
        }
        let squares: [(&AlgHom, &AlgHom, &AlgHom, &AlgHom, &'static str); 3] = [
            (
                &self.target.tail,
                &self.a_hom,
                &self.r_hom,
                &self.source.tail,
                "tail square",
            ),
            (
                &self.target.head,
                &self.a_hom,
                &self.r_hom,
                &self.source.head,
                "head square",
            ),
            (
                &self.target.embedding,
                &self.r_hom,
                &self.a_hom,
                &self.source.embedding,
                "embedding square",
            ),
        ];
        for (outer, inner, left, right, which) in squares {
            let via_target = outer.compose(inner)?;
            let via_source = left.compose(right)?;
            if via_target != via_source {
                return Err(Error::AxiomFailed {
                    axiom: "cat1 morphism square",
                    witness: which.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn identity(c: &Arc<Cat1Alg>) -> Cat1Morphism {
        Cat1Morphism {
            source: c.clone(),
            target: c.clone(),
            a_hom: AlgHom::identity(&c.algebra),
            r_hom: AlgHom::identity(&c.range),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.a_hom.is_injective() && self.r_hom.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.a_hom.is_surjective() && self.r_hom.is_surjective()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Image as a sub-cat¹-algebra of the target.
    pub fn image(&self) -> Result<Cat1Alg> {
        let ia = Subspace::from_spanning(
            &self.target.algebra,
            &self.a_hom.cols,
            SubspaceKind::Subalgebra,
        );
        let ir = Subspace::from_spanning(
            &self.target.range,
            &self.r_hom.cols,
            SubspaceKind::Subalgebra,
        );
        sub_cat1(&self.target, &ia, &ir, "im")
    }

    /// Kernel as a sub-cat¹-algebra of the source.
    pub fn kernel(&self) -> Result<Cat1Alg> {
        let ka = self.a_hom.kernel();
        let kr = self.r_hom.kernel();
        sub_cat1(&self.source, &ka, &kr, "ker")
    }
}
