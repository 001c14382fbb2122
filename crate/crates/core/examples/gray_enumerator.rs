//! Gray-image parameters and weight enumerators of small 1-generator codes.

use gqc::analysis::{gray_params, weight_enumerator, Metric, DEFAULT_CAP};
use gqc::codes::GqcCode;
use gqc::Field;

fn main() -> gqc::Result<()> {
    let cases: [(u32, &[usize], [&str; 2]); 4] =
        [(2, &[2, 2], ["1+u", "u*x+u+1"]), (2, &[2, 4], ["1+u", "u*x^2+(1+u)x+1+u"]), (3, &[2, 2], ["1+u", "u*x+1+u"]), (5, &[2, 3], ["1+u", "u*x+1+u"])];
    for (p, blocks, gens) in cases {
        let f = Field::prime(p)?;
        let code = GqcCode::parse(&f, blocks, &[gens.to_vec()])?;
        let params = gray_params(&code, DEFAULT_CAP)?;
        let we = weight_enumerator(&code, Metric::GrayHamming, DEFAULT_CAP)?;
        println!("{code}\n  {params}  W = {}", we.polynomial());
    }
    Ok(())
}
