//! Compares the family conditions for minimal simple groups with lattice
//! searches on PSL(2,q).

use minsimple::classification::{metabelian_member, psl2_family, s4_criterion, thompson_member};
use minsimple::constructions::{psl2, sym};
use minsimple::lattice::{all_subgroups, contains_isomorphic_copy, LatticeBudget};
use minsimple::{PrimePower, Result};

fn main() -> Result<()> {
    let budget = LatticeBudget::default();
    let s4 = sym(4)?;
    println!("   q  family  search  metabelian  S4 rule  S4 found");
    for n in [4, 5, 7, 8, 9, 11, 13] {
        let q = PrimePower::new(n)?;
        let g = psl2(q)?;
        let lattice = all_subgroups(&g, &budget)?;
        let id = psl2_family(q);
        let minimal = lattice.is_minimal_simple()?;
        let metabelian = if minimal {
            let rule = metabelian_member(id)?;
            format!("{}/{}", rule, lattice.all_proper_metabelian().passed())
        } else {
            "-".into()
        };
        let found = contains_isomorphic_copy(&g, &s4, &budget)?.is_some();
        println!(
            "{:>4}  {:>6}  {:>6}  {:>10}  {:>7}  {:>8}",
            n,
            thompson_member(id),
            minimal,
            metabelian,
            s4_criterion(q),
            found
        );
    }
    Ok(())
}
