//! Canonical generators of cyclic codes over F_2 + uF_2 of length 4.

use gqc::codes::classify_cyclic;
use gqc::{Field, RPoly, Ring};

fn main() -> gqc::Result<()> {
    let r = Ring::new(Field::prime(2)?);
    let cases: [&[&str]; 4] = [&["x+1+u"], &["u"], &["x^2+1", "u*(x+1)"], &["x^3+x^2+x+1+u*(x+1)"]];
    for gens in cases {
        let gens: Vec<RPoly> = gens.iter().map(|s| RPoly::parse(s, &r)).collect::<gqc::Result<_>>()?;
        let c = classify_cyclic(&r, 4, &gens)?;
        let shown: Vec<String> = gens.iter().map(|g| g.fmt(&r)).collect();
        println!("<{}> = {}", shown.join(", "), c.describe(&r));
    }
    Ok(())
}
