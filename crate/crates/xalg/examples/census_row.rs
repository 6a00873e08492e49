//! Compute one row of the endomorphism census and compare it against the
//! published table and the closed-form oracle.
//!
//!     cargo run --release --example census_row

use xalg::census::{compute_row, cyclic_end_oracle, paper_table};
use xalg::DEFAULT_MAX_ELEMENTS;

fn main() -> xalg::Result<()> {
    // GF(2)[C3xC3]: the largest row required to finish in seconds
    let row = paper_table()
        .into_iter()
        .find(|r| r.field == "GF(2)" && r.gap_id == (9, 2))
        .expect("row is in the table");

    let result = compute_row(&row, DEFAULT_MAX_ELEMENTS)?;
    let c = result.computed.expect("not skipped");
    println!("{} {:?} ({}):", row.field, row.gap_id, row.group);
    println!("  |FG|  = {:>6} (published {})", c.size_fg, row.size_fg);
    println!("  |End| = {:>6} (published {})", c.end, row.end);
    println!("  |IE|  = {:>6} (published {})", c.ie, row.ie);
    println!("  |C|   = {:>6} (published {})", c.cat1, row.cat1);
    println!("  flags: {:?}", result.flags.list());

    // semisimple cyclic rows have a closed form for |End|
    println!("oracle |End(GF(2)[C9])| = {:?}", cyclic_end_oracle(2, 9));
    Ok(())
}
