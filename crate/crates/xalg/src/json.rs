//! JSON persistence for algebras, homomorphisms, crossed modules and
//! cat¹-algebras. Matrices are stored column-wise: entry `matrix[j]` is the
//! image of the j-th source basis vector. Every emitted document parses back
//! to an equal object.

use crate::algebra::{group_algebra, Algebra, AlgebraAction};
use crate::cat1alg::Cat1Alg;
use crate::ffield::FieldSpec;
use crate::ffield::Scalar;
use crate::groups;
use crate::homs::AlgHom;
use crate::xmodalg::XModAlg;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub structure: Vec<Vec<Vec<Scalar>>>,
    pub unit: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomJson {
    pub source: AlgebraJson,
    pub target: AlgebraJson,
    pub matrix: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub left: Vec<Vec<Vec<Scalar>>>,
    pub right: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XModJson {
    pub source: AlgebraJson,
    pub range: AlgebraJson,
    pub boundary: Vec<Vec<Scalar>>,
    pub action: ActionJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cat1Json {
    #[serde(rename = "A")]
    pub a: AlgebraJson,
    #[serde(rename = "R")]
    pub r: AlgebraJson,
    pub tail: Vec<Vec<Scalar>>,
    pub head: Vec<Vec<Scalar>>,
    pub embedding: Vec<Vec<Scalar>>,
}

pub fn algebra_to_json(a: &Algebra) -> AlgebraJson {
    AlgebraJson {
        field: a.field.name(),
        dim: a.dim,
        labels: a.labels.clone(),
        structure: a.structure.clone(),
        unit: a.unit.clone(),
        group: a
            .group
            .as_ref()
            .map(|g| format!("{},{}", g.small_group_id.0, g.small_group_id.1)),
        name: Some(a.name.clone()),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<Arc<Algebra>> {
    let field = FieldSpec::parse(&j.field)?;
    if j.labels.len() != j.dim
        || j.structure.len() != j.dim
        || j.structure
            .iter()
            .any(|p| p.len() != j.dim || p.iter().any(|r| r.len() != j.dim))
    {
        return Err(bad("structure tensor shape does not match dim"));
    }
    let order = field.order as Scalar;
    if j.structure.iter().flatten().flatten().any(|&c| c >= order) {
        return Err(bad("structure constant outside the field"));
    }
    // group provenance: rebuild the group algebra and require an exact match
    if let Some(gid) = &j.group {
        let group = groups::parse_group(gid)?;
        let ga = group_algebra(&field, &group);
        if ga.structure != j.structure {
            return Err(bad(format!(
                "structure constants do not belong to the group algebra of {gid}"
            )));
        }
        if let Some(u) = &j.unit {
            if ga.unit.as_ref() != Some(u) {
                return Err(bad("unit does not match the group algebra's identity"));
            }
        }
        return Ok(ga);
    }
    let name = j.name.clone().unwrap_or_else(|| "A".to_string());
    let a = Algebra::new(field, j.labels.clone(), j.structure.clone(), &name)?;
    if let Some(u) = &j.unit {
        if a.unit.as_ref() != Some(u) {
            return Err(bad("declared unit is not the multiplicative identity"));
        }
    }
    Ok(a)
}

pub fn hom_to_json(h: &AlgHom) -> HomJson {
    HomJson {
        source: algebra_to_json(&h.source),
        target: algebra_to_json(&h.target),
        matrix: h.cols.clone(),
    }
}

pub fn hom_from_json(j: &HomJson) -> Result<AlgHom> {
    let source = algebra_from_json(&j.source)?;
    let target = algebra_from_json(&j.target)?;
    AlgHom::from_columns(&source, &target, j.matrix.clone())
}

pub fn xmod_to_json(x: &XModAlg) -> XModJson {
    XModJson {
        source: algebra_to_json(&x.source),
        range: algebra_to_json(&x.range),
        boundary: x.boundary.cols.clone(),
        action: ActionJson {
            left: x.action.left.clone(),
            right: x.action.right.clone(),
        },
    }
}

/// Rebuilds the crossed module. Shapes and the action laws are verified
/// here; the crossed module axioms are left to the caller so that violating
/// inputs can still be reported with a witness.
pub fn xmod_from_json(j: &XModJson) -> Result<XModAlg> {
    let source = algebra_from_json(&j.source)?;
    let range = algebra_from_json(&j.range)?;
    let boundary = AlgHom::from_columns(&source, &range, j.boundary.clone())?;
    let action = AlgebraAction::two_sided(
        &range,
        &source,
        j.action.left.clone(),
        j.action.right.clone(),
    )?;
    XModAlg::assemble(boundary, action, None, None)
}

pub fn cat1_to_json(c: &Cat1Alg) -> Cat1Json {
    Cat1Json {
        a: algebra_to_json(&c.algebra),
        r: algebra_to_json(&c.range),
        tail: c.tail.cols.clone(),
        head: c.head.cols.clone(),
        embedding: c.embedding.cols.clone(),
    }
}

/// Rebuilds the cat¹-algebra; like [`xmod_from_json`] this checks shapes and
/// multiplicativity only, leaving the cat¹ axioms to the caller.
pub fn cat1_from_json(j: &Cat1Json) -> Result<Cat1Alg> {
    let a = algebra_from_json(&j.a)?;
    let r = algebra_from_json(&j.r)?;
    let tail = AlgHom::from_columns(&a, &r, j.tail.clone())?;
    let head = AlgHom::from_columns(&a, &r, j.head.clone())?;
    let embedding = AlgHom::from_columns(&r, &a, j.embedding.clone())?;
    Cat1Alg::assemble(tail, head, embedding, None, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::augmentation_ideal;
    use crate::cat1alg::identity_cat1;
    use crate::equiv::cat1_of_xmod;
    use crate::xmodalg::xmod_by_ideal;

    fn gf3c2() -> Arc<Algebra> {
        group_algebra(
            &FieldSpec::make(3, 1).unwrap(),
            &groups::catalog((2, 1)).unwrap(),
        )
    }

    #[test]
    fn algebra_roundtrip_with_and_without_provenance() {
        let a = gf3c2();
        let mut j = algebra_to_json(&a);
        let back = algebra_from_json(&j).unwrap();
        assert_eq!(back.structure, a.structure);
        assert!(back.group.is_some());
        // dropping the provenance still yields the same multiplication
        j.group = None;
        let plain = algebra_from_json(&j).unwrap();
        assert_eq!(plain.structure, a.structure);
        assert!(plain.group.is_none());
        // serde round-trip through text
        let text = serde_json::to_string(&algebra_to_json(&a)).unwrap();
        let parsed: AlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, algebra_to_json(&a));
    }

    #[test]
    fn algebra_rejects_bad_input() {
        let a = gf3c2();
        let mut j = algebra_to_json(&a);
        j.structure[0][0][0] = 7; // not a GF(3) code
        assert!(algebra_from_json(&j).is_err());
        let mut j = algebra_to_json(&a);
        j.group = Some("3,1".to_string());
        assert!(algebra_from_json(&j).is_err());
        let mut j = algebra_to_json(&a);
        j.unit = Some(vec![0, 1]);
        assert!(algebra_from_json(&j).is_err());
    }

    #[test]
    fn hom_roundtrip() {
        let a = gf3c2();
        let h = AlgHom::identity(&a);
        let j = hom_to_json(&h);
        let back = hom_from_json(&j).unwrap();
        assert_eq!(back.cols, h.cols);
        // a non-multiplicative matrix is rejected
        let mut j2 = j.clone();
        j2.matrix = vec![vec![0, 1], vec![0, 1]];
        assert!(hom_from_json(&j2).is_err());
    }

    #[test]
    fn xmod_and_cat1_roundtrip() {
        let a = gf3c2();
        let i = augmentation_ideal(&a).unwrap();
        let x = xmod_by_ideal(&a, &i).unwrap();
        let j = xmod_to_json(&x);
        let back = xmod_from_json(&j).unwrap();
        back.check().unwrap();
        assert_eq!(back.size(), x.size());
        assert_eq!(xmod_to_json(&back), j);

        let c = cat1_of_xmod(&Arc::new(x)).unwrap();
        let cj = cat1_to_json(&c);
        let cback = cat1_from_json(&cj).unwrap();
        cback.check().unwrap();
        assert_eq!(cback.size(), c.size());
        assert_eq!(cat1_to_json(&cback), cj);

        let idc = identity_cat1(&a);
        let text = serde_json::to_string_pretty(&cat1_to_json(&idc)).unwrap();
        let parsed: Cat1Json = serde_json::from_str(&text).unwrap();
        assert_eq!(cat1_from_json(&parsed).unwrap().size(), idc.size());
    }
}
