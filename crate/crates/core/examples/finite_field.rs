//! Arithmetic in GF(8) and a determinant over GF(9).

use minsimple::field::{Field, FieldElem, Mat};
use minsimple::{PrimePower, Result};

fn main() -> Result<()> {
    let f = Field::new(PrimePower::new(8)?)?;
    println!("GF(8) modulus coefficients {:?}", f.modulus());
    let w = f.primitive_element();
    for k in 0..7 {
        let x = f.pow(w, k);
        println!("w^{k} = {:?}", f.coefficients(x));
    }

    let f9 = Field::new(PrimePower::new(9)?)?;
    let m = Mat::new(2, vec![FieldElem(1), FieldElem(3), FieldElem(4), FieldElem(2)])?;
    println!("det over GF(9): {:?}", f9.coefficients(m.det(&f9)));
    Ok(())
}
