//! Decompose a 2-generator code of block lengths (6,12) over F_3 + uF_3 and
//! count its generators from the component ranks.

use gqc::codes::{crt_decompose, generator_count_bounds, GqcCode};
use gqc::Field;

fn main() -> gqc::Result<()> {
    let f = Field::prime(3)?;
    let code = GqcCode::parse(&f, &[6, 12], &[vec!["x^4-1", "x^2-x"], vec!["x^3", "x^2+1"]])?;
    let d = crt_decompose(&code)?;
    println!("{}", serde_json::to_string_pretty(&d.to_json(code.ring())).unwrap());
    let gc = generator_count_bounds(&code)?;
    println!("component ranks {:?}, free {:?}, generators needed {}", gc.ranks, gc.free, gc.k);
    Ok(())
}
