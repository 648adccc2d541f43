//! Isomorphism tests and a brute-force outer automorphism count.

use minsimple::classification::brute_force_out_order;
use minsimple::constructions::{alt, dihedral, psl2, sym};
use minsimple::kernel::{fingerprint, is_isomorphic};
use minsimple::{PrimePower, Result};

fn main() -> Result<()> {
    let a5 = alt(5)?;
    let p4 = psl2(PrimePower::new(4)?)?;
    let p5 = psl2(PrimePower::new(5)?)?;
    println!("PSL(2,4) = A5: {}", is_isomorphic(&p4, &a5)?);
    println!("PSL(2,5) = A5: {}", is_isomorphic(&p5, &a5)?);
    println!("S4 = D12: {}", is_isomorphic(&sym(4)?, &dihedral(12)?)?);
    println!("A5 invariants: {:?}", fingerprint(&a5)?);
    println!("|Out(A5)| = {}", brute_force_out_order(&a5)?);
    Ok(())
}
