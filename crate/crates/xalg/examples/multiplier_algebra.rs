//! The multiplier algebra M(S) and the crossed module S -> M(S).
//!
//!     cargo run --example multiplier_algebra

use xalg::algebra::{augmentation_ideal, group_algebra, multiplier_algebra};
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::xmodalg::xmod_by_multiplier;

fn main() -> xalg::Result<()> {
    // S = augmentation ideal of GF(3)[C2]: one-dimensional with S^2 = S
    let field = FieldSpec::parse("GF(3)")?;
    let a = group_algebra(&field, &groups::parse_group("C2")?);
    let i = augmentation_ideal(&a)?;
    let (s, _inclusion) = i.as_algebra("S")?;

    let (m, canonical) = multiplier_algebra(&s)?;
    println!("S: dim {}, M(S): dim {}", s.dim, m.dim);
    println!(
        "canonical map S -> M(S) injective: {}",
        canonical.is_injective()
    );

    let x = xmod_by_multiplier(&s)?;
    println!(
        "{}: Size {:?}, IsXModAlg: {}",
        x.name,
        x.size(),
        x.is_xmod()
    );

    // the hypotheses are real: a square-zero ideal with annihilator is rejected
    let a2 = group_algebra(&FieldSpec::parse("GF(2)")?, &groups::parse_group("C2")?);
    let i2 = augmentation_ideal(&a2)?;
    let (s2, _) = i2.as_algebra("S2")?;
    match xmod_by_multiplier(&s2) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("GF(2)[C2] augmentation ideal rejected: {e}"),
    }
    Ok(())
}
