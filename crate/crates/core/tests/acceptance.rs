//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Reference values come from the brute-force oracles in `common`.

mod common;

use std::time::{Duration, Instant};

use common::{closure_order, looks_like_s4, Table};
use minsimple::classification::{
    brute_force_out_order, check_dichotomy, derived_depth_in, metabelian_member, out_order,
    psl2_family, s4_criterion, thompson_member, Conclusion, Family, FamilyId,
};
use minsimple::constructions::{
    alt, cyclic, dihedral, direct_product, gl2_3, psl2, psl3_3, psl3_3_parabolic, quaternion8,
    sl2_3, sym, sz, sz_frobenius_subgroup, sz_torus,
};
use minsimple::kernel::is_isomorphic;
use minsimple::lattice::{all_subgroups, contains_isomorphic_copy, LatticeBudget, LatticeVerdict};
use minsimple::{Group, PrimePower};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pp(q: u64) -> PrimePower {
    PrimePower::new(q).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn whole(t: &Table) -> common::Subset {
    t.whole()
}

fn c1_orders() -> Outcome {
    let start = Instant::now();
    for q in [4u64, 5, 7, 8, 9, 11, 13, 27] {
        let g = ok(psl2(pp(q)))?;
        let expected = q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 };
        check(g.order() == expected, || format!("psl2({q}) order {}", g.order()))?;
    }
    let p33 = ok(psl3_3())?;
    let expected = (27 - 1) * (27 - 3) * (27 - 9) / (3 - 1);
    check(p33.order() == expected, || format!("psl3_3 order {}", p33.order()))?;
    let s = ok(sz(pp(8)))?;
    check(s.order() == 64 * 65 * 7, || format!("sz(8) order {}", s.order()))?;
    within(start, Duration::from_secs(5))?;
    // Closure cross-check, outside the timed part.
    for q in [4u64, 7, 13, 27] {
        let g = ok(psl2(pp(q)))?;
        check(closure_order(&g) as u64 == g.order(), || format!("closure psl2({q})"))?;
    }
    check(closure_order(&p33) == 5616, || "closure psl3_3".into())?;
    check(closure_order(&s) == 29120, || "closure sz(8)".into())?;
    Ok("PSL(2,q) for 8 values of q, PSL(3,3) = 5616, Sz(8) = 29120".into())
}

fn c2_minimal_simple() -> Outcome {
    let b = LatticeBudget::default();
    let mut found = Vec::new();
    for (q, expected) in [
        (4, true),
        (5, true),
        (7, true),
        (8, true),
        (13, true),
        (9, false),
        (11, false),
    ] {
        let start = Instant::now();
        let g = ok(psl2(pp(q)))?;
        let lattice = ok(all_subgroups(&g, &b))?;
        let got = ok(lattice.is_minimal_simple())?;
        check(got == expected, || format!("psl2({q}): {got}"))?;
        check(thompson_member(psl2_family(pp(q))) == expected, || {
            format!("family condition disagrees at q = {q}")
        })?;
        within(start, Duration::from_secs(600))?;
        found.push(format!("{q}:{got}"));
    }
    Ok(found.join(" "))
}

fn c3_metabelian() -> Outcome {
    let b = LatticeBudget::default();
    for q in [4, 5, 8, 13] {
        let lattice = ok(all_subgroups(&ok(psl2(pp(q)))?, &b))?;
        check(lattice.all_proper_metabelian().passed(), || format!("psl2({q}) not PASS"))?;
        check(ok(metabelian_member(psl2_family(pp(q))))?, || {
            format!("family condition says psl2({q}) is not metabelian")
        })?;
    }
    let g = ok(psl2(pp(7)))?;
    let lattice = ok(all_subgroups(&g, &b))?;
    let (witness, dl) = match lattice.all_proper_metabelian() {
        LatticeVerdict::Fail {
            witness,
            derived_length,
        } => (witness, derived_length),
        LatticeVerdict::Pass => return Err("psl2(7) passed".into()),
    };
    check(dl == Some(3), || format!("witness derived length {dl:?}"))?;
    let t = Table::new(&g);
    check(looks_like_s4(&t, &t.subset_of(&witness)), || "witness is not S4".into())?;
    // Oracle: every non-metabelian proper subgroup is S4.
    let subs = t.all_subgroups();
    let bad: Vec<_> = subs
        .iter()
        .filter(|s| Table::size(s) < 168 && !matches!(t.derived_length(s), Some(d) if d <= 2))
        .collect();
    check(!bad.is_empty() && bad.iter().all(|s| looks_like_s4(&t, s)), || {
        "non-metabelian subgroup other than S4".into()
    })?;
    let classes = lattice.non_metabelian_proper();
    check(
        classes.iter().map(|c| c.class_size).sum::<u64>() == bad.len() as u64,
        || "lattice and oracle disagree on non-metabelian subgroups".into(),
    )?;
    Ok(format!(
        "PASS for q = 4,5,8,13; psl2(7) fails only at S4 ({} subgroups in {} classes)",
        bad.len(),
        classes.len()
    ))
}

fn c4_s4_criterion() -> Outcome {
    let b = LatticeBudget::default();
    let s4 = ok(sym(4))?;
    let mut row = Vec::new();
    for q in [4, 5, 7, 8, 9, 11, 13] {
        let g = ok(psl2(pp(q)))?;
        let found = ok(contains_isomorphic_copy(&g, &s4, &b))?;
        if let Some(w) = &found {
            let t = Table::new(w);
            check(looks_like_s4(&t, &whole(&t)), || format!("q = {q}: witness not S4"))?;
        }
        check(found.is_some() == s4_criterion(pp(q)), || format!("disagreement at q = {q}"))?;
        row.push(format!("{q}:{}", found.is_some()));
    }
    Ok(row.join(" "))
}

fn c5_parabolic() -> Outcome {
    let start = Instant::now();
    let (h, k) = ok(psl3_3_parabolic())?;
    check(h.order() == 432 && k.order() == 9, || {
        format!("|H| = {}, |K| = {}", h.order(), k.order())
    })?;
    let th = Table::new(&h);
    let hs = whole(&th);
    let ks = th.subset_of(&k);
    check(th.is_normal_in(&ks, &hs), || "K not normal".into())?;
    let k_elems = Table::members(&ks);
    check(
        k_elems.iter().all(|&x| x == th.identity || th.element_order(x) == 3)
            && k_elems.iter().all(|&a| k_elems.iter().all(|&b| th.mul[a][b] == th.mul[b][a])),
        || "K not elementary abelian".into(),
    )?;
    check(th.derived_length(&hs) == Some(5), || "derived length of H".into())?;
    check(h.derived_length() == Some(5), || "library derived length of H".into())?;
    let quotient = ok(h.quotient_group(&k))?;
    let gl = ok(gl2_3())?;
    let tq = Table::new(&quotient);
    let tgl = Table::new(&gl);
    // GL(2,3): order 48, derived length 4, 13 involutions.
    for (name, t) in [("H/K", &tq), ("GL(2,3)", &tgl)] {
        let all = whole(t);
        check(
            t.len() == 48 && t.derived_length(&all) == Some(4) && t.involutions(&all) == 13,
            || format!("{name} invariants"),
        )?;
    }
    check(ok(is_isomorphic(&quotient, &gl))?, || "H/K not isomorphic to GL(2,3)".into())?;
    let sl = ok(sl2_3())?;
    let tsl = Table::new(&sl);
    check(tsl.derived_length(&whole(&tsl)) == Some(3) && sl.derived_length() == Some(3), || {
        "SL(2,3) derived length".into()
    })?;
    check(gl.derived_length() == Some(4), || "GL(2,3) derived length".into())?;
    within(start, Duration::from_secs(30))?;
    Ok("|H| = 432, |K| = 9, H/K = GL(2,3), lengths 5, 3, 4".into())
}

fn c6_suzuki() -> Outcome {
    let start = Instant::now();
    let q = pp(8);
    let f = ok(sz_frobenius_subgroup(q))?;
    let tf = Table::new(&f);
    let fl = tf.derived_length(&whole(&tf));
    check(tf.len() == 448 && !matches!(fl, Some(d) if d <= 2), || {
        format!("Frobenius subgroup order {} length {fl:?}", tf.len())
    })?;
    let g = ok(sz(q))?;
    let t = ok(sz_torus(q))?;
    check(t.order() == 7, || "torus order".into())?;
    let n = ok(g.normalizer(&t))?;
    let tn = Table::new(&n);
    let all = whole(&tn);
    // The only non-abelian group of order 14 is dihedral.
    check(tn.len() == 14 && Table::size(&tn.center(&all)) == 1, || {
        format!("normalizer order {}", tn.len())
    })?;
    check(ok(is_isomorphic(&n, &ok(dihedral(7))?))?, || "normalizer not dihedral".into())?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("|F| = 448 with derived length {}, N(C7) = D14", fl.unwrap_or(0)))
}

fn c7_out() -> Outcome {
    let mut rows = 0;
    for family in Family::ALL {
        for p in [2u64, 3, 5, 7] {
            let id = FamilyId::new(family, p);
            if !thompson_member(id) {
                check(out_order(id).is_err(), || format!("{id} accepted"))?;
                continue;
            }
            let o = ok(out_order(id))?;
            let expected = match family {
                Family::Psl2TwoP | Family::SzTwoP => p,
                Family::Psl2ThreeP => 2 * p,
                Family::Psl2P | Family::Psl3_3 => 2,
            };
            check(o.total == expected && o.d * o.f * o.g == o.total, || format!("{id}: {o:?}"))?;
            rows += 1;
        }
    }
    let a5 = ok(brute_force_out_order(&ok(alt(5))?))?;
    let row = ok(out_order(FamilyId::new(Family::Psl2TwoP, 2)))?.total;
    check(a5 == 2 && row == 2, || format!("Out(A5) by search {a5}, row {row}"))?;
    Ok(format!("{rows} rows, Out(A5) = 2 by search"))
}

fn c8_derived_depth() -> Outcome {
    let start = Instant::now();
    let groups = [
        ("Q8", ok(quaternion8())?),
        ("D8", ok(dihedral(4))?),
        ("C2xC4", ok(direct_product(&ok(cyclic(2))?, &ok(cyclic(4))?))?),
        ("S4", ok(sym(4))?),
        ("A4", ok(alt(4))?),
    ];
    let mut pairs = 0;
    let mut subnormal_pairs = 0;
    for (name, g) in &groups {
        let t = Table::new(g);
        let gs = whole(&t);
        let subs = t.all_subgroups();
        let series = t.derived_series(&gs);
        let lattice = ok(all_subgroups(g, &LatticeBudget::default()))?;
        for h in lattice.all_members() {
            pairs += 1;
            let hs = t.subset_of(&h);
            let all_above = subs
                .iter()
                .filter(|k| Table::is_subset(&hs, k))
                .all(|k| t.defect(k, &gs).is_some());
            let res = ok(derived_depth_in(&lattice, &h))?;
            check(res.all_subnormal_above == all_above, || format!("{name}: subnormality"))?;
            if !all_above {
                continue;
            }
            subnormal_pairs += 1;
            let r = res.r.ok_or_else(|| format!("{name}: missing r"))?;
            check(Table::is_subset(&series[r], &hs), || format!("{name}: G^(r) not in H"))?;
            check(r == 0 || !Table::is_subset(&series[r - 1], &hs), || {
                format!("{name}: r not least")
            })?;
            check((r == 0) == (hs == gs), || format!("{name}: r = 0 iff H = G"))?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{pairs} pairs, {subnormal_pairs} with every subgroup above subnormal"))
}

fn c9_dichotomy() -> Outcome {
    let start = Instant::now();
    let b = LatticeBudget::default();
    let s5 = ok(sym(5))?;
    let r = ok(check_dichotomy(&s5, None, 3, &b))?;
    check(r.holds(), || "S5 hypothesis".into())?;
    match &r.conclusion {
        Conclusion::Extension { s, m, quotient } => {
            check(s.is_trivial() && quotient.order() == 120, || "S5: S".into())?;
            let tm = Table::new(m);
            let all = whole(&tm);
            check(tm.len() == 60 && tm.derived_length(&all).is_none(), || "S5: M".into())?;
        }
        other => return Err(format!("S5 conclusion {other:?}")),
    }
    let c2s5 = ok(direct_product(&ok(cyclic(2))?, &s5))?;
    let r = ok(check_dichotomy(&c2s5, None, 3, &b))?;
    match &r.conclusion {
        Conclusion::Extension { s, .. } => {
            let t = Table::new(&c2s5);
            let ss = t.subset_of(s);
            check(Table::size(&ss) == 2 && t.is_normal_in(&ss, &whole(&t)), || {
                "C2 x S5: S".into()
            })?;
            let c2 = Group::from_generators(c2s5.degree(), vec![c2s5.generators()[0].clone()]);
            check(s == &ok(c2)?, || "C2 x S5: S is not the C2 factor".into())?;
        }
        other => return Err(format!("C2 x S5 conclusion {other:?}")),
    }
    let bounds: Vec<Option<usize>> = (1..=5).map(Some).chain([None]).collect();
    for g in [ok(sym(4))?, s5, ok(alt(5))?] {
        let r = ok(check_dichotomy(&g, None, 1, &b))?;
        for (i, &n) in bounds.iter().enumerate() {
            for d in 1..=5 {
                if !r.hypothesis_holds(n, d) {
                    continue;
                }
                for &n2 in &bounds[i..] {
                    for d2 in d..=5 {
                        check(r.hypothesis_holds(n2, d2), || {
                            format!("order {}: ({n:?},{d}) to ({n2:?},{d2})", g.order())
                        })?;
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok("S5 and C2 x S5 extensions, monotone on the 6x5 grid".into())
}

fn c10_extended() -> Outcome {
    let b = LatticeBudget::extended();
    let p33 = ok(all_subgroups(&ok(psl3_3())?, &b))?;
    let max = ok(p33.max_proper_derived_length())?;
    check(max == 5, || format!("psl3_3 max proper derived length {max}"))?;
    let p27 = ok(all_subgroups(&ok(psl2(pp(27)))?, &b))?;
    check(p27.all_proper_metabelian().passed(), || "psl2(27) not PASS".into())?;
    check(!s4_criterion(pp(27)), || "criterion predicts S4 in psl2(27)".into())?;
    Ok(format!(
        "psl3_3: {} classes, max length 5; psl2(27): {} classes, all metabelian",
        p33.class_count(),
        p27.class_count()
    ))
}

fn c11_kernel() -> Outcome {
    let start = Instant::now();
    let mut groups: Vec<(String, Group)> = Vec::new();
    for q in [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27] {
        groups.push((format!("psl2({q})"), ok(psl2(pp(q)))?));
    }
    groups.push(("psl3_3".into(), ok(psl3_3())?));
    let (h, k) = ok(psl3_3_parabolic())?;
    groups.push(("H".into(), h));
    groups.push(("K".into(), k));
    groups.push(("F".into(), ok(sz_frobenius_subgroup(pp(8)))?));
    groups.push(("sl2_3".into(), ok(sl2_3())?));
    groups.push(("gl2_3".into(), ok(gl2_3())?));
    groups.push(("Q8".into(), ok(quaternion8())?));
    for n in 2..=7 {
        groups.push((format!("S{n}"), ok(sym(n))?));
        groups.push((format!("A{n}"), ok(alt(n))?));
    }
    for (name, g) in &groups {
        check(g.order() <= 10_000, || format!("{name} too large"))?;
        check(closure_order(g) as u64 == g.order(), || format!("{name}: closure order"))?;
        let series = g.derived_series();
        for w in series.terms.windows(2) {
            check(g.is_normal_subgroup(&w[1]) && w[0].is_normal_subgroup(&w[1]), || {
                format!("{name}: derived term not normal")
            })?;
        }
        if g.order() <= 2000 {
            for n in ok(g.normal_subgroups())? {
                let q = ok(g.quotient_group(&n))?;
                check(q.order() * n.order() == g.order(), || format!("{name}: quotient order"))?;
            }
        }
    }
    // Lagrange and orbit-stabilizer on every lattice, defect chains on
    // every subgroup of the smaller ones.
    let b = LatticeBudget::default();
    let mut classes = 0;
    for (name, g) in &groups {
        if g.order() > b.max_group_order {
            continue;
        }
        let lattice = ok(all_subgroups(g, &b))?;
        for c in lattice.classes() {
            classes += 1;
            check(g.order() % c.order == 0, || format!("{name}: Lagrange"))?;
            let n = ok(g.normalizer(&c.representative))?;
            check(c.class_size * n.order() == g.order(), || format!("{name}: class size"))?;
            if g.order() <= 720 {
                let chain = ok(g.normal_closure_chain(&c.representative))?;
                let orders = chain.orders();
                check(orders.windows(2).all(|w| w[1] < w[0]), || {
                    format!("{name}: defect chain not decreasing")
                })?;
                for w in chain.terms.windows(2) {
                    check(w[0].is_normal_subgroup(&w[1]), || format!("{name}: chain step"))?;
                }
                let defect = ok(g.subnormal_defect(&c.representative))?;
                check(defect.is_some() == (chain.terms.last() == Some(&c.representative)), || {
                    format!("{name}: defect")
                })?;
            }
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} groups, {classes} subgroup classes", groups.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("orders", c1_orders),
        ("minimal simple vs search", c2_minimal_simple),
        ("metabelian proper subgroups", c3_metabelian),
        ("S4 criterion vs search", c4_s4_criterion),
        ("PSL(3,3) parabolic and GL(2,3)", c5_parabolic),
        ("Sz(8) subgroups", c6_suzuki),
        ("outer automorphism orders", c7_out),
        ("derived term inside H", c8_derived_depth),
        ("dichotomy", c9_dichotomy),
        ("extended lattices", c10_extended),
        ("kernel properties", c11_kernel),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {why} ({secs:.2} s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
