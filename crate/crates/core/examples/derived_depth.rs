//! When every subgroup above H is subnormal, some derived term of G lies
//! in H. Runs over all subgroups of S4.

use minsimple::classification::derived_depth_in;
use minsimple::constructions::sym;
use minsimple::lattice::{all_subgroups, LatticeBudget};
use minsimple::Result;

fn main() -> Result<()> {
    let g = sym(4)?;
    let lattice = all_subgroups(&g, &LatticeBudget::default())?;
    for c in lattice.classes() {
        let res = derived_depth_in(&lattice, &c.representative)?;
        match (res.r, res.witness) {
            (Some(r), _) => println!("H of order {:>2}: r = {r}", c.order),
            (None, Some(w)) => println!(
                "H of order {:>2}: non-subnormal subgroup of order {} above it",
                c.order,
                w.order()
            ),
            (None, None) => unreachable!(),
        }
    }
    Ok(())
}
