//! Euclidean dual, Hermitian product and generator counts of a QC code of index 2.

use gqc::qc::{check_thm55, euclid_dual, hermitian_product, GaloisExtR, QcCode};
use gqc::Field;

fn main() -> gqc::Result<()> {
    let f = Field::prime(2)?;
    let c = QcCode::parse(&f, 3, 2, &[vec!["1+x", "1+u*x^2"]])?;
    let d = euclid_dual(&c)?;
    println!("|C| = {:?}, |C^perp| = {:?}", c.span().size(&f), d.span().size(&f));
    let g = &c.gqc().generators()[0];
    for h in d.gqc().generators().iter().take(3) {
        println!("<{}, {}> = {}", c.gqc().format_tuple(g), c.gqc().format_tuple(h), hermitian_product(c.ring(), g, h, 3)?.fmt(c.ring()));
    }
    println!("{}", serde_json::to_string_pretty(&check_thm55(&c)?.to_json()).unwrap());
    let ext = GaloisExtR::new(c.ring(), 2, None)?;
    let view = ext.ext_view(g, 3)?;
    println!("over R[y]/({}): {} coefficients", ext.modulus().fmt(c.ring()), view.len());
    Ok(())
}
