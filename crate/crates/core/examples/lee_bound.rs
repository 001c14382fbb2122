//! Distance lower bound for free 1-generator codes, next to the exact Lee distance.

use gqc::analysis::{min_distance, Metric, DEFAULT_CAP};
use gqc::onegen::{distance_lower_bound, OneGenSpec};
use gqc::Field;

fn main() -> gqc::Result<()> {
    let f = Field::prime(2)?;
    for (blocks, gens) in [([3, 4], ["1+x+x^2", "1+x^2"]), ([4, 6], ["1+x^2", "(1+x+x^2)^2"])] {
        let spec = OneGenSpec::parse(&f, &blocks, &gens)?;
        let rep = distance_lower_bound(&spec, Metric::Lee, DEFAULT_CAP)?;
        let exact = min_distance(&spec.code(), Metric::Lee, DEFAULT_CAP)?;
        println!("{}\n  {}\n  exact Lee distance {exact}", spec.code(), rep.to_json(spec.ring()));
    }
    Ok(())
}
