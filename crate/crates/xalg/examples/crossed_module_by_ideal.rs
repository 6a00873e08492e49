//! The crossed module of an ideal: the augmentation ideal I of GF(5)[C2xC2]
//! includes into the group algebra, which acts on it by multiplication.
//!
//!     cargo run --example crossed_module_by_ideal

use std::sync::Arc;
use xalg::algebra::{augmentation_ideal, group_algebra, span_closure, SubspaceKind};
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::xmodalg::{is_sub_xmod, xmod_by_ideal};

fn main() -> xalg::Result<()> {
    let field = FieldSpec::parse("GF(5)")?;
    let a = group_algebra(&field, &groups::parse_group("4,2")?);
    println!("|A| = {}", a.element_count());

    let i = augmentation_ideal(&a)?;
    println!("|I| = {}", i.size());

    let cm = xmod_by_ideal(&a, &i)?;
    println!(
        "CM = {}, Size {:?}, IsXModAlg: {}",
        cm.name,
        cm.size(),
        cm.is_xmod()
    );

    // a smaller ideal inside I gives a sub-crossed-module
    let j = span_closure(&a, &[vec![1, 1, 4, 4]], SubspaceKind::Ideal);
    println!("|J| = {}", j.size());
    let pm = xmod_by_ideal(&a, &j)?;
    println!("PM = {}, Size {:?}", pm.name, pm.size());
    println!(
        "PM is a sub-crossed-module of CM: {}",
        is_sub_xmod(&pm, &cm)
    );

    let _ = Arc::new(cm); // crossed modules are shared behind Arc elsewhere
    Ok(())
}
