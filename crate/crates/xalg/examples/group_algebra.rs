//! Build a group algebra, inspect its elements, and find its idempotents.
//!
//!     cargo run --example group_algebra

use xalg::algebra::{group_algebra, idempotent_elements};
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::DEFAULT_MAX_ELEMENTS;

fn main() -> xalg::Result<()> {
    let field = FieldSpec::parse("GF(3)")?;
    let group = groups::parse_group("C2")?;
    let a = group_algebra(&field, &group);

    println!("algebra: {}", a.name);
    println!("dim: {}, elements: {}", a.dim, a.element_count());
    println!("commutative: {}", a.is_commutative);

    // every element has an integer code; idempotents solve x^2 = x
    let idems = idempotent_elements(&a, DEFAULT_MAX_ELEMENTS)?;
    println!("idempotents ({}):", idems.len());
    for v in &idems {
        println!("  code {:>3}: {}", a.encode(v), a.display_vec(v));
    }
    Ok(())
}
