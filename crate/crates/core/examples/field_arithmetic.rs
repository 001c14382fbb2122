//! Arithmetic in GF(4) and in R = GF(4) + uGF(4), and the Gray map over F_2 + uF_2.

use gqc::rring::{gray, lee_weight};
use gqc::{Field, Ring};

fn main() -> gqc::Result<()> {
    let f: Field = "GF(2,2)".parse()?;
    let a = f.parse_elem("[0,1]")?;
    let b = f.parse_elem("[1,1]")?;
    println!("in {f}: a*b = {}, a^-1 = {}", f.format_elem(f.mul(a, b)), f.format_elem(f.inv(a)?));

    let r = Ring::new(f.clone());
    let x = r.parse("[0,1]+u")?;
    println!("in R: x^2 = {}, unit: {}", r.format(r.mul(x, x)), r.is_unit(x));
    println!("u is a unit: {}", r.is_unit(r.u()));

    let r2 = Ring::new(Field::prime(2)?);
    let v: Vec<_> = ["0", "1", "u", "1+u"].iter().map(|s| r2.parse(s)).collect::<gqc::Result<_>>()?;
    let g: Vec<String> = gray(&r2, &v).iter().map(|e| r2.field().format_elem(*e)).collect();
    println!("Gray image of (0, 1, u, 1+u): {}, Lee weight {}", g.join(""), lee_weight(&r2, &v)?);
    Ok(())
}
