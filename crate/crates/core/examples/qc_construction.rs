//! Index-2 quasi-cyclic code over F_2 from a cyclic code of length 7 over
//! F_2 + uF_2, with its product bound.

use gqc::analysis::{FqSubspace, DEFAULT_CAP};
use gqc::qc::{construct_cor52, fq_distance, fq_enumerator};
use gqc::{Field, RPoly, Ring};

fn main() -> gqc::Result<()> {
    let f = Field::prime(2)?;
    let r = Ring::new(f.clone());
    let v = RPoly::parse("x^4+(1+u)x^3+(1+u)x^2+u*x+1+u", &r)?;
    let c = construct_cor52(&r, &v, 7, None, DEFAULT_CAP)?;
    for row in c.row_strings(&f, 3) {
        println!("{row}");
    }
    println!("g = {}, d~ = {:?}, d_B = {:?}, bound {:?}", c.g.fmt(&f), c.d_tilde, c.d_b, c.bound);
    let three = FqSubspace::spanned_by(14, &c.rows[..3], &f);
    println!("first three rows: dimension {}, distance {:?}", three.dim(), fq_distance(&three, &f, DEFAULT_CAP)?);
    println!("all shifts: dimension {}, weights {:?}", c.dim(), fq_enumerator(&c.span, &f, DEFAULT_CAP)?);
    Ok(())
}
