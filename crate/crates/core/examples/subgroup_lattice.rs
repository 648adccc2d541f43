//! Conjugacy classes of subgroups of PSL(2,7).

use minsimple::constructions::psl2;
use minsimple::lattice::{all_subgroups, LatticeBudget};
use minsimple::{PrimePower, Result};

fn main() -> Result<()> {
    let g = psl2(PrimePower::new(7)?)?;
    let lattice = all_subgroups(&g, &LatticeBudget::default())?;
    println!("{:>6} {:>6} {:>12} {:>7}", "order", "class", "derived len", "defect");
    for c in lattice.classes() {
        println!(
            "{:>6} {:>6} {:>12} {:>7}",
            c.order,
            c.class_size,
            c.derived_length.map_or("-".into(), |d| d.to_string()),
            c.defect_in_parent.map_or("-".into(), |d| d.to_string()),
        );
    }
    println!(
        "{} classes, {} subgroups, largest proper derived length {}",
        lattice.class_count(),
        lattice.total_subgroups(),
        lattice.max_proper_derived_length()?
    );
    Ok(())
}
