//! Enumerate every algebra homomorphism GF(2)[C6] -> GF(2)[C3].
//!
//!     cargo run --example all_homs

use xalg::algebra::group_algebra;
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::homs::all_homs;
use xalg::DEFAULT_MAX_ELEMENTS;

fn main() -> xalg::Result<()> {
    let field = FieldSpec::parse("GF(2)")?;
    let a = group_algebra(&field, &groups::parse_group("C6")?);
    let r = group_algebra(&field, &groups::parse_group("C3")?);

    let homs = all_homs(&a, &r, DEFAULT_MAX_ELEMENTS)?;
    println!("|AllHoms({}, {})| = {}", a.name, r.name, homs.len());

    for (k, h) in homs.iter().enumerate() {
        // a homomorphism is determined by the images of the group generators
        let images: Vec<String> = h.cols.iter().map(|c| r.display_vec(c)).collect();
        println!("  #{k}: basis images [{}]", images.join(", "));
        println!(
            "      injective: {}, surjective: {}",
            h.is_injective(),
            h.is_surjective()
        );
    }
    Ok(())
}
