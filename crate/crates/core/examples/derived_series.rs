//! Derived series and subnormal defects.

use minsimple::constructions::{dihedral, gl2_3, psl3_3_parabolic, sl2_3, sym};
use minsimple::{Permutation, Result};

fn main() -> Result<()> {
    let s4 = sym(4)?;
    println!("S4 derived series orders: {:?}", s4.derived_series().orders());

    println!("SL(2,3) derived length {:?}", sl2_3()?.derived_length());
    println!("GL(2,3) derived length {:?}", gl2_3()?.derived_length());
    let (h, k) = psl3_3_parabolic()?;
    println!(
        "parabolic H of PSL(3,3): order {}, derived length {:?}, |K| = {}",
        h.order(),
        h.derived_length(),
        k.order()
    );

    // A reflection in D8 is subnormal of defect 2, a reflection in D12 is not.
    let d8 = dihedral(4)?;
    let r = d8.subgroup(vec![Permutation::from_cycles(4, &[&[1, 3]])?])?;
    println!("reflection in D8: defect {:?}", d8.subnormal_defect(&r)?);
    let d12 = dihedral(6)?;
    let r = d12.subgroup(vec![Permutation::from_cycles(6, &[&[1, 5], &[2, 4]])?])?;
    println!("reflection in D12: defect {:?}", d12.subnormal_defect(&r)?);
    Ok(())
}
