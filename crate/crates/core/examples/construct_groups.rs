//! Builds the minimal simple groups the engine knows and prints their
//! permutation degrees and orders.

use minsimple::constructions::{psl2, psl3_3, sz};
use minsimple::{Group, PrimePower, Result};

fn show(name: &str, g: &Group) {
    println!("{name:<10} degree {:>3} order {:>5}", g.degree(), g.order());
}

fn main() -> Result<()> {
    for q in [4, 5, 7, 8, 13, 27] {
        show(&format!("PSL(2,{q})"), &psl2(PrimePower::new(q)?)?);
    }
    show("PSL(3,3)", &psl3_3()?);
    let g = sz(PrimePower::new(8)?)?;
    show("Sz(8)", &g);
    println!("Sz(8) simple: {}", g.is_simple()?);
    Ok(())
}
