//! Build cat1-algebra structures on a group algebra from pairs of idempotent
//! endomorphisms with a common image.
//!
//!     cargo run --example cat1_from_endomorphisms

use xalg::algebra::group_algebra;
use xalg::cat1alg::{cat1_by_endomorphisms, identity_cat1};
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::homs::idempotent_endos;
use xalg::DEFAULT_MAX_ELEMENTS;

fn main() -> xalg::Result<()> {
    let field = FieldSpec::parse("GF(3)")?;
    let a = group_algebra(&field, &groups::parse_group("C2")?);

    // the identity endomorphism always works: tail = head = embedding = id
    let c = identity_cat1(&a);
    println!("identity cat1: {} Size {:?}", c.name, c.size());

    // every valid (tail, head) pair comes from idempotent endomorphisms
    let (end, idems) = idempotent_endos(&a, DEFAULT_MAX_ELEMENTS)?;
    println!("|End| = {end}, |IE| = {}", idems.len());

    let mut valid = 0;
    for s in &idems {
        for t in &idems {
            match cat1_by_endomorphisms(s, t) {
                Ok(c) => {
                    valid += 1;
                    println!("  cat1 #{valid}: Size {:?}", c.size());
                }
                Err(e) => {
                    // rejected pairs violate image equality or kernel products
                    let _ = e;
                }
            }
        }
    }
    println!("|C({})| = {valid}", a.name);
    Ok(())
}
