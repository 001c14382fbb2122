//! Best Gray-image distance per dimension among 1-generator codes of block lengths (2,4).

use gqc::analysis::{Metric, DEFAULT_CAP};
use gqc::cli::search::{search, SearchConfig};
use gqc::Field;

fn main() -> gqc::Result<()> {
    let cfg = SearchConfig { field: Field::prime(2)?, blocks: vec![2, 4], max_deg: 3, metric: Metric::GrayHamming, budget: 10_000, seed: None, cap: DEFAULT_CAP, timing: false };
    let table = search(&cfg)?;
    print!("{}", table.to_csv());
    println!("{} candidates, {} distances computed", table.candidates, table.evaluated);
    Ok(())
}
