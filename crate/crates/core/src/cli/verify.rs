//! Claim suites run by `verify`.

use clap::ValueEnum;

use super::report::{Outcome, Report};
use crate::classification::{
    brute_force_out_order, metabelian_member, out_order, psl2_family, s4_criterion,
    thompson_member, Family, FamilyId,
};
use crate::constructions::{
    alt, dihedral, gl2_3, psl2, psl3_3, psl3_3_parabolic, sl2_3, sym, sz,
    sz_frobenius_subgroup, sz_torus,
};
use crate::error::Result;
use crate::field::PrimePower;
use crate::kernel::{is_isomorphic, Group};
use crate::lattice::{all_subgroups, contains_isomorphic_copy, LatticeBudget, LatticeVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClaimSet {
    /// Which PSL(2,q) have only metabelian proper subgroups.
    #[value(alias = "prop22")]
    Metabelian,
    /// Arithmetic S4 criterion against subgroup search.
    S4,
    /// Family conditions against lattice search.
    #[value(alias = "thompson")]
    MinimalSimple,
    /// Outer automorphism group orders.
    #[value(alias = "table1")]
    Out,
    /// Derived lengths of the PSL(3,3) parabolic and related groups.
    #[value(alias = "remark")]
    DerivedLength,
    /// Frobenius and torus-normalizer subgroups of Sz(8).
    Suzuki,
    All,
}

pub struct Context {
    pub budget: LatticeBudget,
    pub extended: bool,
}

const SMALL_Q: [u64; 7] = [4, 5, 7, 8, 9, 11, 13];

fn pp(q: u64) -> PrimePower {
    PrimePower::new(q).expect("hard-coded prime power")
}

fn length_text(len: Option<usize>) -> String {
    len.map_or_else(|| "NOT_SOLUBLE".to_string(), |l| l.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn run_set(set: ClaimSet, ctx: &Context) -> Vec<Report> {
    match set {
        ClaimSet::Metabelian => metabelian(ctx),
        ClaimSet::S4 => s4(ctx),
        ClaimSet::MinimalSimple => minimal_simple(ctx),
        ClaimSet::Out => out(),
        ClaimSet::DerivedLength => derived_length(ctx),
        ClaimSet::Suzuki => suzuki(ctx),
        ClaimSet::All => {
            let mut all = Vec::new();
            for s in [
                ClaimSet::Metabelian,
                ClaimSet::S4,
                ClaimSet::MinimalSimple,
                ClaimSet::Out,
                ClaimSet::DerivedLength,
                ClaimSet::Suzuki,
            ] {
                all.extend(run_set(s, ctx));
            }
            all
        }
    }
}

fn extended_only(ctx: &Context, claim: String, inputs: &str, expected: &str) -> Option<Report> {
    (!ctx.extended).then(|| Report::skipped(claim, inputs, expected, "needs --extended"))
}

fn metabelian(ctx: &Context) -> Vec<Report> {
    let mut out = Vec::new();
    let budget = ctx.budget;
    for q in [4, 5, 8, 13] {
        out.push(metabelian_pass(q, &budget));
    }
    out.push(Report::run(
        "metabelian/psl2/7",
        "psl2 7",
        "FAIL, every non-metabelian proper subgroup is S4 of derived length 3",
        || {
            let g = psl2(pp(7))?;
            let lattice = all_subgroups(&g, &budget)?;
            let bad = lattice.non_metabelian_proper();
            let criterion = metabelian_member(psl2_family(pp(7)))?;
            match lattice.all_proper_metabelian() {
                LatticeVerdict::Fail {
                    witness,
                    derived_length,
                } => {
                    let s4 = sym(4)?;
                    let mut all_s4 = true;
                    for c in &bad {
                        all_s4 &= is_isomorphic(&c.representative, &s4)?;
                    }
                    let pass = all_s4 && derived_length == Some(3) && !criterion;
                    Ok(Outcome::new(
                        format!(
                            "FAIL, {} non-metabelian classes, all S4 {}, witness derived length {}",
                            bad.len(),
                            all_s4,
                            length_text(derived_length)
                        ),
                        pass,
                    )
                    .with_witness(&witness))
                }
                LatticeVerdict::Pass => Ok(Outcome::new("PASS", false)),
            }
        },
    ));
    out.push(
        extended_only(ctx, "metabelian/psl2/27".into(), "psl2 27", "PASS")
            .unwrap_or_else(|| metabelian_pass(27, &budget)),
    );
    out
}

fn metabelian_pass(q: u64, budget: &LatticeBudget) -> Report {
    Report::run(
        format!("metabelian/psl2/{q}"),
        format!("psl2 {q}"),
        "PASS",
        || {
            let criterion = metabelian_member(psl2_family(pp(q)))?;
            let g = psl2(pp(q))?;
            Ok(match all_subgroups(&g, budget)?.all_proper_metabelian() {
                LatticeVerdict::Pass => Outcome::new("PASS", criterion),
                LatticeVerdict::Fail { witness, .. } => {
                    Outcome::new("FAIL", false).with_witness(&witness)
                }
            })
        },
    )
}

fn s4(ctx: &Context) -> Vec<Report> {
    SMALL_Q
        .iter()
        .map(|&q| {
            let expected = s4_criterion(pp(q));
            Report::run(
                format!("s4-criterion/psl2/{q}"),
                format!("psl2 {q}"),
                format!("contains S4 = {}", yes_no(expected)),
                || {
                    let found = contains_isomorphic_copy(&psl2(pp(q))?, &sym(4)?, &ctx.budget)?;
                    let o = Outcome::new(
                        format!("contains S4 = {}", yes_no(found.is_some())),
                        found.is_some() == expected,
                    );
                    Ok(match &found {
                        Some(w) => o.with_witness(w),
                        None => o,
                    })
                },
            )
        })
        .collect()
}

fn minimal_simple_report(claim: String, inputs: String, expected: bool, g: impl FnOnce() -> Result<Group>, budget: &LatticeBudget) -> Report {
    Report::run(claim, inputs, format!("minimal simple = {}", yes_no(expected)), || {
        let g = g()?;
        let lattice = all_subgroups(&g, budget)?;
        let found = lattice.is_minimal_simple()?;
        let o = Outcome::new(format!("minimal simple = {}", yes_no(found)), found == expected);
        let insoluble = lattice.proper_classes().find(|c| !c.is_soluble());
        Ok(match insoluble {
            Some(c) => o.with_witness(&c.representative),
            None => o,
        })
    })
}

fn minimal_simple(ctx: &Context) -> Vec<Report> {
    let mut out: Vec<Report> = SMALL_Q
        .iter()
        .map(|&q| {
            let expected = thompson_member(psl2_family(pp(q)));
            minimal_simple_report(
                format!("minimal-simple/psl2/{q}"),
                format!("psl2 {q}"),
                expected,
                || psl2(pp(q)),
                &ctx.budget,
            )
        })
        .collect();
    let psl3 = thompson_member(FamilyId::new(Family::Psl3_3, 0));
    let sz8 = thompson_member(FamilyId::new(Family::SzTwoP, 3));
    for (name, expected, build) in [
        ("psl3_3", psl3, psl3_3 as fn() -> Result<Group>),
        ("sz 8", sz8, || sz(pp(8))),
    ] {
        let claim = format!("minimal-simple/{}", name.replace(' ', "/"));
        let expected_text = format!("minimal simple = {}", yes_no(expected));
        out.push(
            extended_only(ctx, claim.clone(), name, &expected_text).unwrap_or_else(|| {
                minimal_simple_report(claim, name.into(), expected, build, &ctx.budget)
            }),
        );
    }
    out
}

fn out() -> Vec<Report> {
    let mut rows = Vec::new();
    for family in Family::ALL {
        let params: &[u64] = if family == Family::Psl3_3 { &[0] } else { &[2, 3, 5, 7] };
        for &p in params {
            let id = FamilyId::new(family, p);
            if !thompson_member(id) {
                continue;
            }
            let expected = match family {
                Family::Psl2TwoP | Family::SzTwoP => p,
                Family::Psl2ThreeP => 2 * p,
                Family::Psl2P | Family::Psl3_3 => 2,
            };
            let claim = format!("out/{id}");
            rows.push(Report::run(claim, id.to_string(), format!("|Out| = {expected}"), || {
                let o = out_order(id)?;
                Ok(Outcome::new(
                    format!("|Out| = {}·{}·{} = {}", o.d, o.f, o.g, o.total),
                    o.total == expected && o.d * o.f * o.g == o.total,
                ))
            }));
        }
    }
    rows.push(Report::run(
        "out/alt5-search",
        "alt 5",
        "|Out| = 2, matching PSL(2,2^2)",
        || {
            let found = brute_force_out_order(&alt(5)?)?;
            let row = out_order(FamilyId::new(Family::Psl2TwoP, 2))?.total;
            Ok(Outcome::new(format!("|Out| = {found}"), found == 2 && row == 2))
        },
    ));
    rows
}

fn derived_length_check(claim: &str, inputs: &str, expected: usize, g: impl FnOnce() -> Result<Group>) -> Report {
    Report::run(claim, inputs, format!("derived length {expected}"), || {
        let found = g()?.derived_length();
        Ok(Outcome::new(format!("derived length {}", length_text(found)), found == Some(expected)))
    })
}

fn max_proper(q: u64, expected: usize, budget: &LatticeBudget) -> Report {
    Report::run(
        format!("derived-length/max-proper/psl2/{q}"),
        format!("psl2 {q}"),
        format!("max proper derived length {expected}"),
        || {
            let found = all_subgroups(&psl2(pp(q))?, budget)?.max_proper_derived_length()?;
            Ok(Outcome::new(format!("max proper derived length {found}"), found == expected))
        },
    )
}

fn derived_length(ctx: &Context) -> Vec<Report> {
    let mut out = vec![
        derived_length_check("derived-length/sl2_3", "sl2_3", 3, sl2_3),
        derived_length_check("derived-length/gl2_3", "gl2_3", 4, gl2_3),
        Report::run(
            "derived-length/psl3_3-parabolic",
            "psl3_3 block upper triangular H, unipotent K",
            "|H| = 432, |K| = 9, K elementary abelian normal, H/K ≅ GL(2,3), derived length 5",
            || {
                let (h, k) = psl3_3_parabolic()?;
                let elementary = k.is_abelian()
                    && k.element_order_histogram()?.iter().all(|&(o, _)| o <= 3);
                let normal = h.is_normal_subgroup(&k);
                let quotient = h.quotient_group(&k)?;
                let iso = is_isomorphic(&quotient, &gl2_3()?)?;
                let dl = h.derived_length();
                let pass =
                    h.order() == 432 && k.order() == 9 && elementary && normal && iso && dl == Some(5);
                Ok(Outcome::new(
                    format!(
                        "|H| = {}, |K| = {}, elementary {}, normal {}, H/K ≅ GL(2,3) {}, derived length {}",
                        h.order(),
                        k.order(),
                        elementary,
                        normal,
                        iso,
                        length_text(dl)
                    ),
                    pass,
                ))
            },
        ),
        max_proper(7, 3, &ctx.budget),
        max_proper(8, 2, &ctx.budget),
    ];
    let claim = "derived-length/max-proper/psl3_3".to_string();
    let expected = "max proper derived length 5";
    out.push(
        extended_only(ctx, claim.clone(), "psl3_3", expected).unwrap_or_else(|| {
            Report::run(claim, "psl3_3", expected, || {
                let found = all_subgroups(&psl3_3()?, &ctx.budget)?.max_proper_derived_length()?;
                Ok(Outcome::new(format!("max proper derived length {found}"), found == 5))
            })
        }),
    );
    out
}

fn suzuki(ctx: &Context) -> Vec<Report> {
    let q = pp(8);
    let mut out = vec![
        Report::run("suzuki/order/8", "sz 8", "order 29120, degree 65", || {
            let g = sz(q)?;
            Ok(Outcome::new(
                format!("order {}, degree {}", g.order(), g.degree()),
                g.order() == 29120 && g.degree() == 65,
            ))
        }),
        Report::run(
            "suzuki/frobenius/8",
            "sz 8",
            "order 448, not metabelian",
            || {
                let f = sz_frobenius_subgroup(q)?;
                Ok(Outcome::new(
                    format!(
                        "order {}, metabelian {}, derived length {}",
                        f.order(),
                        f.is_metabelian(),
                        length_text(f.derived_length())
                    ),
                    f.order() == 448 && !f.is_metabelian(),
                ))
            },
        ),
        Report::run(
            "suzuki/torus-normalizer/8",
            "sz 8",
            "normalizer of C7 has order 14, dihedral",
            || {
                let g = sz(q)?;
                let t = sz_torus(q)?;
                let n = g.normalizer(&t)?;
                let dihedral = is_isomorphic(&n, &dihedral(7)?)?;
                Ok(Outcome::new(
                    format!("order {}, dihedral {}", n.order(), dihedral),
                    n.order() == 14 && dihedral,
                ))
            },
        ),
    ];
    let claim = "suzuki/max-proper/8".to_string();
    let expected = "max proper derived length 3";
    out.push(
        extended_only(ctx, claim.clone(), "sz 8", expected).unwrap_or_else(|| {
            Report::run(claim, "sz 8", expected, || {
                let found = all_subgroups(&sz(q)?, &ctx.budget)?.max_proper_derived_length()?;
                Ok(Outcome::new(format!("max proper derived length {found}"), found == 3))
            })
        }),
    );
    out
}
