//! Append a cyclic block to a 1-generator code and compare the predicted
//! rank and bound with enumeration.

use gqc::analysis::{Metric, DEFAULT_CAP};
use gqc::onegen::{concatenate_cor45, OneGenSpec};
use gqc::{Field, RPoly, Ring};

fn main() -> gqc::Result<()> {
    let f = Field::prime(2)?;
    let r = Ring::new(f.clone());
    let spec = OneGenSpec::parse(&f, &[3, 4], &["1+x+x^2", "1+x^2"])?;
    let cyc = RPoly::parse("x^4+x^2+x+1", &r)?;
    let c = concatenate_cor45(&spec, 7, &cyc, Metric::Lee, DEFAULT_CAP)?;
    println!("{}", c.code);
    println!("case {:?}, rank {:?}, bound {:?}", c.case, c.rank, c.bound);
    println!("distance of the 1-generator code {}, of the cyclic block {}", c.d_gqc, c.d_cyclic);
    Ok(())
}
