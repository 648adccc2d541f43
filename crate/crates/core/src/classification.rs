//! The families of minimal simple groups, their arithmetic criteria, and
//! finite-instance checkers built on the subgroup lattice.

use std::fmt;

use serde::Serialize;

use crate::constructions::{psl2, psl3_3, sz};
use crate::error::{Error, Result};
use crate::field::{is_prime, PrimePower};
use crate::kernel::{automorphism_count, is_isomorphic, Group, ISO_BUDGET};
use crate::lattice::{all_subgroups, LatticeBudget, SubgroupLattice};

/// The five families of minimal simple groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// PSL(2, 2^p)
    Psl2TwoP,
    /// PSL(2, 3^p)
    Psl2ThreeP,
    /// PSL(2, p)
    Psl2P,
    /// PSL(3, 3)
    Psl3_3,
    /// Sz(2^p)
    SzTwoP,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Psl2TwoP,
        Family::Psl2ThreeP,
        Family::Psl2P,
        Family::Psl3_3,
        Family::SzTwoP,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyId {
    pub family: Family,
    /// The prime `p` of the family; ignored for PSL(3,3).
    pub param: u64,
}

impl FamilyId {
    pub fn new(family: Family, param: u64) -> Self {
        FamilyId { family, param }
    }

    /// The field order `q`, if it fits in a `u64`.
    pub fn field_order(&self) -> Option<u64> {
        let p = self.param;
        match self.family {
            Family::Psl2TwoP | Family::SzTwoP => 2u64.checked_pow(u32::try_from(p).ok()?),
            Family::Psl2ThreeP => 3u64.checked_pow(u32::try_from(p).ok()?),
            Family::Psl2P => Some(p),
            Family::Psl3_3 => Some(3),
        }
    }

    pub fn group_order(&self) -> Option<u64> {
        let q = self.field_order()?;
        let q2 = q.checked_mul(q)?;
        match self.family {
            Family::Psl3_3 => Some(5616),
            Family::SzTwoP => q2.checked_mul(q2 + 1)?.checked_mul(q - 1),
            _ => Some(q.checked_mul(q2 - 1)? / if q % 2 == 1 { 2 } else { 1 }),
        }
    }

    /// Builds the group as a permutation group.
    pub fn construct(&self) -> Result<Group> {
        let q = self
            .field_order()
            .ok_or_else(|| Error::InvalidParameter(format!("{self} is too large")))?;
        match self.family {
            Family::Psl3_3 => psl3_3(),
            Family::SzTwoP => sz(PrimePower::new(q)?),
            _ => psl2(PrimePower::new(q)?),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.param;
        match self.family {
            Family::Psl2TwoP => write!(f, "PSL(2,2^{p})"),
            Family::Psl2ThreeP => write!(f, "PSL(2,3^{p})"),
            Family::Psl2P => write!(f, "PSL(2,{p})"),
            Family::Psl3_3 => write!(f, "PSL(3,3)"),
            Family::SzTwoP => write!(f, "Sz(2^{p})"),
        }
    }
}

/// The family id naming PSL(2,q). PSL(2,5) is filed as PSL(2,4), the same
/// group. Membership is not implied.
pub fn psl2_family(q: PrimePower) -> FamilyId {
    match (q.p(), q.f()) {
        (5, 1) => FamilyId::new(Family::Psl2TwoP, 2),
        (2, f) => FamilyId::new(Family::Psl2TwoP, f.into()),
        (3, f) if f > 1 => FamilyId::new(Family::Psl2ThreeP, f.into()),
        (p, 1) => FamilyId::new(Family::Psl2P, p),
        // No family has this shape; report the base prime so membership fails.
        (p, _) => FamilyId::new(Family::Psl2P, p.pow(q.f())),
    }
}

/// Whether the parameter satisfies the family's defining condition.
pub fn thompson_member(id: FamilyId) -> bool {
    let p = id.param;
    match id.family {
        Family::Psl2TwoP => is_prime(p),
        Family::Psl2ThreeP | Family::SzTwoP => is_prime(p) && p % 2 == 1,
        Family::Psl2P => is_prime(p) && p > 3 && (p * p + 1).is_multiple_of(5),
        Family::Psl3_3 => true,
    }
}

fn require_member(id: FamilyId) -> Result<()> {
    if thompson_member(id) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{id} is not minimal simple")))
    }
}

/// Whether every proper subgroup of the family member is metabelian.
pub fn metabelian_member(id: FamilyId) -> Result<bool> {
    require_member(id)?;
    Ok(match id.family {
        Family::Psl2TwoP | Family::Psl2ThreeP => true,
        Family::Psl2P => !(id.param * id.param - 1).is_multiple_of(16),
        Family::Psl3_3 | Family::SzTwoP => false,
    })
}

/// Arithmetic test for PSL(2,q) containing a copy of S4.
pub fn s4_criterion(q: PrimePower) -> bool {
    let r = q.q() % 16;
    r * r % 16 == 1
}

/// `|Out(M)| = d·f·g`: diagonal, field and graph parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OutFactors {
    pub d: u64,
    pub f: u64,
    pub g: u64,
    pub total: u64,
}

impl OutFactors {
    fn new(d: u64, f: u64, g: u64) -> Self {
        OutFactors {
            d,
            f,
            g,
            total: d * f * g,
        }
    }
}

pub fn out_order(id: FamilyId) -> Result<OutFactors> {
    require_member(id)?;
    let p = id.param;
    Ok(match id.family {
        Family::Psl2TwoP => OutFactors::new(1, p, 1),
        Family::Psl2ThreeP => OutFactors::new(2, p, 1),
        Family::Psl2P => OutFactors::new(2, 1, 1),
        Family::Psl3_3 => OutFactors::new(1, 1, 2),
        Family::SzTwoP => OutFactors::new(1, p, 1),
    })
}

/// `|Aut(G)| / |Inn(G)|` by exhaustive automorphism search.
pub fn brute_force_out_order(g: &Group) -> Result<u64> {
    let aut = automorphism_count(g, ISO_BUDGET)?;
    let inn = g.order() / g.center()?.order();
    Ok(aut / inn)
}

/// Family members of the given order. Distinct members never share an order,
/// except that PSL(2,4) and PSL(2,5) are the same group and only the first
/// satisfies its family's condition.
pub fn family_by_order(order: u64) -> Option<FamilyId> {
    if order == 5616 {
        return Some(FamilyId::new(Family::Psl3_3, 0));
    }
    let mut p = 2;
    while p < 64 {
        if is_prime(p) {
            for family in [Family::Psl2TwoP, Family::Psl2ThreeP, Family::SzTwoP] {
                let id = FamilyId::new(family, p);
                if thompson_member(id) && id.group_order() == Some(order) {
                    return Some(id);
                }
            }
        }
        p += 1;
    }
    // PSL(2,p) has order about p³/2.
    let mut p = 5;
    while p * p * p / 2 <= order.saturating_mul(2) {
        let id = FamilyId::new(Family::Psl2P, p);
        if thompson_member(id) && id.group_order() == Some(order) {
            return Some(id);
        }
        p += 1;
    }
    None
}

/// Result of checking that every subgroup between `H` and `G` is subnormal,
/// and if so the least `r` with `G^(r) ≤ H`.
#[derive(Clone, Debug)]
pub struct DerivedDepth {
    pub all_subnormal_above: bool,
    pub r: Option<usize>,
    /// An intermediate subgroup that is not subnormal in `G`.
    pub witness: Option<Group>,
}

/// For `H ≤ G`: if every subgroup containing `H` is subnormal in `G`, some
/// term of the derived series of `G` lies in `H`.
pub fn derived_depth(g: &Group, h: &Group, budget: &LatticeBudget) -> Result<DerivedDepth> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let lattice = all_subgroups(g, budget)?;
    derived_depth_in(&lattice, h)
}

/// As [`derived_depth`], reusing an enumerated lattice of `G`.
pub fn derived_depth_in(lattice: &SubgroupLattice, h: &Group) -> Result<DerivedDepth> {
    let g = lattice.parent();
    for class in lattice.classes() {
        if class.defect_in_parent.is_some() || class.order % h.order() != 0 {
            continue;
        }
        if let Some(k) = class.members().find(|k| h.is_subgroup_of(k)) {
            return Ok(DerivedDepth {
                all_subnormal_above: false,
                r: None,
                witness: Some(k),
            });
        }
    }
    let series = g.derived_series();
    let r = series.terms.iter().position(|t| t.is_subgroup_of(h));
    if r.is_none() {
        return Err(Error::Precondition(
            "no derived term lies in H although every subgroup above H is subnormal".into(),
        ));
    }
    if (r == Some(0)) != (h == g) {
        return Err(Error::Precondition("r = 0 must hold exactly when H = G".into()));
    }
    Ok(DerivedDepth {
        all_subnormal_above: true,
        r,
        witness: None,
    })
}

/// Whether `g` lies between a minimal simple group `M` and `Aut(M)`,
/// recognized by: trivial soluble radical, a unique minimal normal subgroup
/// `M`, `M` minimal simple, and `C_G(M) = 1`. Returns `M` on success.
pub fn is_almost_minimal_simple(g: &Group, budget: &LatticeBudget) -> Result<Option<Group>> {
    if g.is_trivial() || !g.soluble_radical()?.is_trivial() {
        return Ok(None);
    }
    let mut minimal = g.minimal_normal_subgroups()?;
    if minimal.len() != 1 {
        return Ok(None);
    }
    let m = minimal.pop().unwrap();
    if !crate::lattice::is_minimal_simple(&m, budget)? {
        return Ok(None);
    }
    if !g.centralizer(&m)?.is_trivial() {
        return Ok(None);
    }
    Ok(Some(m))
}

/// Bound on subnormal defect; `None` means any finite defect.
pub type DefectBound = Option<usize>;

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub order: u64,
    pub class_size: u64,
    pub defect: Option<usize>,
    pub derived_length: Option<usize>,
    pub generators: Vec<String>,
}

impl ClassRecord {
    pub fn subnormal_within(&self, n: DefectBound) -> bool {
        match (self.defect, n) {
            (Some(k), Some(n)) => k <= n,
            (Some(_), None) => true,
            (None, _) => false,
        }
    }

    /// Subnormal within the defect bound, or soluble of length at most `d`.
    pub fn satisfies(&self, n: DefectBound, d: usize) -> bool {
        self.subnormal_within(n) || matches!(self.derived_length, Some(l) if l <= d)
    }
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Conclusion {
    Soluble(usize),
    /// `S` normal soluble of bounded length, `G/S` almost minimal simple
    /// with minimal normal subgroup `M`.
    Extension {
        s: Group,
        quotient: Group,
        m: Group,
    },
    Neither,
}

#[derive(Clone, Debug)]
pub struct DichotomyReport {
    pub order: u64,
    pub n: DefectBound,
    pub d: usize,
    pub records: Vec<ClassRecord>,
    pub conclusion: Conclusion,
    /// Largest derived length among soluble subgroups that are not
    /// subnormal within the bound.
    pub observed_max_length: Option<usize>,
}

impl DichotomyReport {
    pub fn hypothesis_holds(&self, n: DefectBound, d: usize) -> bool {
        self.records.iter().all(|r| r.satisfies(n, d))
    }

    pub fn holds(&self) -> bool {
        self.hypothesis_holds(self.n, self.d)
    }

    /// A class violating both arms, if any.
    pub fn violation(&self) -> Option<&ClassRecord> {
        self.records.iter().find(|r| !r.satisfies(self.n, self.d))
    }
}

/// Classifies every subgroup class of `g` as subnormal (with defect) or
/// soluble (with derived length), and determines which shape `g` has:
/// soluble, or an extension of a normal soluble `S` of length at most `d`
/// by an almost minimal simple group.
pub fn check_dichotomy(
    g: &Group,
    n: DefectBound,
    d: usize,
    budget: &LatticeBudget,
) -> Result<DichotomyReport> {
    let lattice = all_subgroups(g, budget)?;
    let records: Vec<ClassRecord> = lattice
        .classes()
        .iter()
        .map(|c| ClassRecord {
            order: c.order,
            class_size: c.class_size,
            defect: c.defect_in_parent,
            derived_length: c.derived_length,
            generators: c
                .representative
                .generators()
                .iter()
                .map(ToString::to_string)
                .collect(),
        })
        .collect();
    let observed_max_length = records
        .iter()
        .filter(|r| !r.subnormal_within(n))
        .filter_map(|r| r.derived_length)
        .max();
    let conclusion = if let Some(len) = g.derived_length() {
        Conclusion::Soluble(len)
    } else {
        let s = g.soluble_radical()?;
        let fits = matches!(s.derived_length(), Some(l) if l <= d);
        let quotient = if s.is_trivial() {
            g.clone()
        } else {
            g.quotient_group(&s)?
        };
        match is_almost_minimal_simple(&quotient, budget)? {
            Some(m) if fits => Conclusion::Extension { s, quotient, m },
            _ => Conclusion::Neither,
        }
    };
    Ok(DichotomyReport {
        order: g.order(),
        n,
        d,
        records,
        conclusion,
        observed_max_length,
    })
}

#[derive(Clone, Debug)]
pub struct DivisorCheck {
    pub family: FamilyId,
    pub index: u64,
    pub out: OutFactors,
    pub divides: bool,
}

/// For `S ⊴ M ⊴ G` with `M/S` minimal simple: `|G:M|` divides `|Out(M/S)|`.
pub fn out_divisor_check(g: &Group, s: &Group, m: &Group) -> Result<DivisorCheck> {
    if !s.is_subgroup_of(m) || !m.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !m.is_normal_subgroup(s) || !g.is_normal_subgroup(m) {
        return Err(Error::NotNormal);
    }
    let section_order = m.order() / s.order();
    let family = family_by_order(section_order).ok_or_else(|| {
        Error::Precondition(format!("no minimal simple group has order {section_order}"))
    })?;
    let section = if s.is_trivial() {
        m.clone()
    } else {
        m.quotient_group(s)?
    };
    if !section.is_simple()? {
        return Err(Error::Precondition("M/S is not simple".into()));
    }
    if section_order <= ISO_BUDGET && !is_isomorphic(&section, &family.construct()?)? {
        return Err(Error::Precondition(format!("M/S is not isomorphic to {family}")));
    }
    let out = out_order(family)?;
    let index = g.order() / m.order();
    Ok(DivisorCheck {
        family,
        index,
        out,
        divides: out.total % index == 0,
    })
}
