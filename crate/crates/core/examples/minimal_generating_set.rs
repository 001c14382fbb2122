//! Minimal generating set and size of a 1-generator code, checked against enumeration.

use gqc::onegen::{gray_matrix, minimal_generating_set_unchecked, OneGenSpec};
use gqc::Field;

fn main() -> gqc::Result<()> {
    let f = Field::prime(2)?;
    let spec = OneGenSpec::parse(&f, &[2, 4], &["x+1+u", "x^3+x^2+x+1+u"])?;
    let mg = minimal_generating_set_unchecked(&spec);
    println!("{}", serde_json::to_string_pretty(&mg.to_json(spec.ring())).unwrap());
    let rows: Vec<_> = mg.rows().cloned().collect();
    println!("Gray matrix of S1 and S2:\n{}", gray_matrix(&spec.code().ambient(), &rows));
    println!("formula size {:?}, enumerated size {:?}", mg.size(), spec.code().span().size(&f));
    Ok(())
}
