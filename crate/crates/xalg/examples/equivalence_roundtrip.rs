//! Crossed modules and cat1-algebras are equivalent: convert one into the
//! other and back, and verify the canonical isomorphism.
//!
//!     cargo run --example equivalence_roundtrip

use std::sync::Arc;
use xalg::algebra::{augmentation_ideal, group_algebra};
use xalg::cat1alg::identity_cat1;
use xalg::equiv::{cat1_of_xmod, roundtrip_iso_cat1, roundtrip_iso_xmod, xmod_of_cat1};
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::xmodalg::xmod_by_ideal;

fn main() -> xalg::Result<()> {
    // crossed module -> cat1 -> crossed module
    let r = group_algebra(&FieldSpec::parse("GF(3)")?, &groups::parse_group("C2")?);
    let i = augmentation_ideal(&r)?;
    let cm = Arc::new(xmod_by_ideal(&r, &i)?);
    println!("CM: Size {:?}", cm.size());

    let c = cat1_of_xmod(&cm)?;
    println!("cat1(CM): Size {:?}, IsCat1Alg: {}", c.size(), c.is_cat1());

    let sm = xmod_of_cat1(&c)?;
    println!("xmod(cat1(CM)): Size {:?}", sm.size());

    let (_back, iso) = roundtrip_iso_xmod(&cm)?;
    println!("canonical isomorphism bijective: {}", iso.is_bijective());

    // cat1 -> crossed module -> cat1, over a non-commutative group algebra
    let a = group_algebra(&FieldSpec::parse("GF(4)")?, &groups::parse_group("S3")?);
    let c = Arc::new(identity_cat1(&a));
    let cm = xmod_of_cat1(&c)?;
    println!("xmod(C): Size {:?}", cm.size());
    let (_back, iso) = roundtrip_iso_cat1(&c)?;
    println!("canonical isomorphism bijective: {}", iso.is_bijective());
    Ok(())
}
