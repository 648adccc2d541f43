//! Every subgroup subnormal or soluble of bounded length: the shapes this
//! forces on S5 and C2 x S5.

use minsimple::classification::{check_dichotomy, Conclusion};
use minsimple::constructions::{cyclic, direct_product, sym};
use minsimple::lattice::LatticeBudget;
use minsimple::{Group, Result};

fn show(name: &str, g: &Group, d: usize) -> Result<()> {
    let report = check_dichotomy(g, None, d, &LatticeBudget::default())?;
    print!("{name}, d = {d}: hypothesis {}; ", report.holds());
    match &report.conclusion {
        Conclusion::Soluble(l) => println!("soluble of derived length {l}"),
        Conclusion::Extension { s, quotient, m } => println!(
            "|S| = {}, G/S of order {} with minimal normal subgroup of order {}",
            s.order(),
            quotient.order(),
            m.order()
        ),
        Conclusion::Neither => println!("neither"),
    }
    Ok(())
}

fn main() -> Result<()> {
    show("S4", &sym(4)?, 3)?;
    show("S5", &sym(5)?, 3)?;
    show("C2 x S5", &direct_product(&cyclic(2)?, &sym(5)?)?, 3)?;
    show("S5", &sym(5)?, 1)?;
    Ok(())
}
