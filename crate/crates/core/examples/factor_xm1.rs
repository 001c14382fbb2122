//! Factor x^m - 1 over a few fields and print the CRT idempotents.

use gqc::poly::{crt_idempotents, factor_cyclotomic};
use gqc::{Field, Ring};

fn main() -> gqc::Result<()> {
    for (spec, m) in [("GF(3,1)", 6), ("GF(3,1)", 12), ("GF(2,1)", 7), ("GF(2,2)", 15)] {
        let f: Field = spec.parse()?;
        let fact = factor_cyclotomic(m, &f)?;
        println!("x^{m}-1 over {spec}: {}", fact.fmt(&f));
    }
    let f = Field::prime(3)?;
    let r = Ring::new(f.clone());
    let fact = factor_cyclotomic(12, &f)?;
    for (fc, e) in fact.factors.iter().zip(crt_idempotents(&fact, &f)) {
        println!("  idempotent for ({})^{}: {}", fc.g.fmt(&f), fact.p_power, e.fmt(&r));
    }
    Ok(())
}
