//! Conjugacy classes of subgroups by cyclic extension.
//!
//! Every subgroup `V` with a normal subgroup `U` of prime index `p` is
//! `⟨U, z⟩` for some `z` of `p`-power order normalizing `U` with `z^p ∈ U`.
//! Starting from the trivial group this reaches every soluble subgroup, layer
//! by layer in the number of prime factors of the order. Non-soluble
//! subgroups are reached the same way from their perfect residuals, which
//! are seeded beforehand as soluble residuals of two-generator subgroups.
//!
//! Subgroups are handled as bitsets over the parent's element table; every
//! conjugate of every class is kept in a hash map, so conjugacy testing is a
//! lookup.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::kernel::{is_isomorphic, ElementTable, Group, Permutation};

/// Limits on lattice enumeration. Exceeding any of them is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeBudget {
    pub max_group_order: u64,
    pub max_subgroups: u64,
    pub time_limit: Option<Duration>,
}

impl Default for LatticeBudget {
    fn default() -> Self {
        LatticeBudget {
            max_group_order: 6000,
            max_subgroups: 1_000_000,
            time_limit: None,
        }
    }
}

impl LatticeBudget {
    /// Budget for the long runs: PSL(3,3), PSL(2,27) and Sz(8).
    pub fn extended() -> Self {
        LatticeBudget {
            max_group_order: 30_000,
            ..Default::default()
        }
    }
}

/// One conjugacy class of subgroups of a parent group.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Group,
    pub class_size: u64,
    pub order: u64,
    pub derived_length: Option<usize>,
    pub defect_in_parent: Option<usize>,
    pub normalizer_order: u64,
    conjugators: Vec<Permutation>,
}

impl SubgroupClass {
    /// Every subgroup in the class, the representative first.
    pub fn members(&self) -> impl Iterator<Item = Group> + '_ {
        self.conjugators
            .iter()
            .map(|x| self.representative.conjugate_by(x))
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_length.is_some()
    }
}

/// All conjugacy classes of subgroups of a group, sorted by order.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    parent: Group,
    classes: Vec<SubgroupClass>,
}

/// Outcome of a lattice-wide predicate; failures carry a witness of minimal
/// order.
#[derive(Clone, Debug)]
pub enum LatticeVerdict {
    Pass,
    Fail {
        witness: Group,
        derived_length: Option<usize>,
    },
}

impl LatticeVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, LatticeVerdict::Pass)
    }
}

impl SubgroupLattice {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn total_subgroups(&self) -> u64 {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    /// Classes other than the whole group.
    pub fn proper_classes(&self) -> impl Iterator<Item = &SubgroupClass> {
        let order = self.parent.order();
        self.classes.iter().filter(move |c| c.order < order)
    }

    /// Every subgroup, class by class.
    pub fn all_members(&self) -> impl Iterator<Item = Group> + '_ {
        self.classes.iter().flat_map(SubgroupClass::members)
    }

    /// Non-metabelian proper subgroup classes, smallest first.
    pub fn non_metabelian_proper(&self) -> Vec<&SubgroupClass> {
        self.proper_classes()
            .filter(|c| !matches!(c.derived_length, Some(d) if d <= 2))
            .collect()
    }

    pub fn all_proper_metabelian(&self) -> LatticeVerdict {
        match self.non_metabelian_proper().first() {
            None => LatticeVerdict::Pass,
            Some(c) => LatticeVerdict::Fail {
                witness: c.representative.clone(),
                derived_length: c.derived_length,
            },
        }
    }

    /// Non-abelian simple with every proper subgroup soluble.
    pub fn is_minimal_simple(&self) -> Result<bool> {
        let g = &self.parent;
        if g.is_abelian() || !g.is_simple()? {
            return Ok(false);
        }
        Ok(self.proper_classes().all(SubgroupClass::is_soluble))
    }

    /// Largest derived length of a proper subgroup. Fails if some proper
    /// subgroup is not soluble.
    pub fn max_proper_derived_length(&self) -> Result<usize> {
        let mut best = 0;
        for c in self.proper_classes() {
            match c.derived_length {
                Some(d) => best = best.max(d),
                None => {
                    return Err(Error::Precondition(format!(
                        "proper subgroup of order {} is not soluble",
                        c.order
                    )))
                }
            }
        }
        Ok(best)
    }

    /// A subgroup isomorphic to `target`, if any.
    pub fn find_isomorphic(&self, target: &Group) -> Result<Option<Group>> {
        for c in &self.classes {
            if c.order == target.order()
                && c.derived_length == target.derived_length()
                && is_isomorphic(&c.representative, target)?
            {
                return Ok(Some(c.representative.clone()));
            }
        }
        Ok(None)
    }
}

pub fn all_subgroups(g: &Group, budget: &LatticeBudget) -> Result<SubgroupLattice> {
    Enumerator::new(g, budget)?.run()
}

/// Searches `g` for a subgroup isomorphic to `target`, returning a witness.
/// Element orders are checked first, so an impossible target is rejected
/// without enumerating the lattice.
pub fn contains_isomorphic_copy(
    g: &Group,
    target: &Group,
    budget: &LatticeBudget,
) -> Result<Option<Group>> {
    if target.order() > g.order() || !g.order().is_multiple_of(target.order()) {
        return Ok(None);
    }
    let available: Vec<u64> = g
        .element_order_histogram()?
        .into_iter()
        .map(|(o, _)| o)
        .collect();
    let needed = target.element_order_histogram()?;
    if needed.iter().any(|(o, _)| !available.contains(o)) {
        return Ok(None);
    }
    all_subgroups(g, budget)?.find_isomorphic(target)
}

pub fn all_proper_metabelian(g: &Group, budget: &LatticeBudget) -> Result<LatticeVerdict> {
    Ok(all_subgroups(g, budget)?.all_proper_metabelian())
}

pub fn is_minimal_simple(g: &Group, budget: &LatticeBudget) -> Result<bool> {
    if g.is_abelian() || !g.is_simple()? {
        return Ok(false);
    }
    all_subgroups(g, budget)?.is_minimal_simple()
}

pub fn max_proper_derived_length(g: &Group, budget: &LatticeBudget) -> Result<usize> {
    all_subgroups(g, budget)?.max_proper_derived_length()
}

type Bits = Box<[u64]>;

fn bits_with(n: usize, members: impl IntoIterator<Item = usize>) -> Bits {
    let mut b = vec![0u64; n.div_ceil(64)].into_boxed_slice();
    for i in members {
        b[i / 64] |= 1 << (i % 64);
    }
    b
}

#[inline]
fn has(b: &[u64], i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn members(b: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in b.iter().enumerate() {
        let mut x = word;
        while x != 0 {
            out.push(w * 64 + x.trailing_zeros() as usize);
            x &= x - 1;
        }
    }
    out
}

fn prime_factor_count(mut n: u64) -> u32 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

fn distinct_primes(mut n: u64) -> u32 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += 1;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// A prime-power-order element standing for its cyclic subgroup.
struct Zuppo {
    element: usize,
    prime: u64,
    /// index of `element^prime`
    power: usize,
}

struct RawClass {
    bits: Bits,
    gens: Vec<usize>,
    conjugators: Vec<Permutation>,
    normalizer_order: u64,
    layer: u32,
}

struct Enumerator<'a> {
    group: &'a Group,
    table: &'a ElementTable,
    n: usize,
    /// per generator `s` of the parent: `i ↦ index(s⁻¹ eᵢ s)`
    conj: Vec<Vec<u32>>,
    seen: HashMap<Bits, usize>,
    classes: Vec<RawClass>,
    total: u64,
    budget: LatticeBudget,
    start: Instant,
}

impl<'a> Enumerator<'a> {
    fn new(group: &'a Group, budget: &LatticeBudget) -> Result<Self> {
        let order = group.order();
        if order > budget.max_group_order {
            return Err(Error::BudgetExceeded {
                what: "lattice group order",
                value: order,
                limit: budget.max_group_order,
            });
        }
        let table = group.element_table()?;
        let conj = group
            .generators()
            .iter()
            .map(|s| {
                table
                    .elements
                    .iter()
                    .map(|e| table.index_of(&e.conjugate_by(s)).unwrap() as u32)
                    .collect()
            })
            .collect();
        Ok(Enumerator {
            group,
            table,
            n: table.len(),
            conj,
            seen: HashMap::new(),
            classes: Vec::new(),
            total: 0,
            budget: *budget,
            start: Instant::now(),
        })
    }

    fn check_time(&self) -> Result<()> {
        if let Some(limit) = self.budget.time_limit {
            if self.start.elapsed() > limit {
                return Err(Error::TimeLimit(limit));
            }
        }
        Ok(())
    }

    fn index(&self, p: &Permutation) -> usize {
        self.table.index_of(p).expect("element of the parent group")
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index(&(&self.table.elements[a] * &self.table.elements[b]))
    }

    fn zuppos(&self) -> Vec<Zuppo> {
        let mut marked = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n {
            if marked[x] {
                continue;
            }
            let e = &self.table.elements[x];
            let ord = e.order();
            if ord == 1 || distinct_primes(ord) != 1 {
                continue;
            }
            let prime = (2..=ord).find(|d| ord.is_multiple_of(*d)).unwrap();
            for j in 1..ord {
                if j % prime != 0 {
                    marked[self.index(&e.pow(j))] = true;
                }
            }
            out.push(Zuppo {
                element: x,
                prime,
                power: self.index(&e.pow(prime)),
            });
        }
        out
    }

    /// Records the subgroup with element set `bits` unless it is conjugate to
    /// one already known. Returns its class id.
    fn register(&mut self, bits: Bits, gens: Vec<usize>) -> Result<usize> {
        if let Some(&id) = self.seen.get(&bits) {
            return Ok(id);
        }
        let id = self.classes.len();
        let order = members(&bits).len() as u64;
        let mut orbit: Vec<(Bits, Permutation)> = vec![(bits.clone(), self.group.identity())];
        self.seen.insert(bits.clone(), id);
        let mut k = 0;
        while k < orbit.len() {
            for (s, table) in self.conj.iter().enumerate() {
                let image = bits_with(self.n, members(&orbit[k].0).into_iter().map(|i| table[i] as usize));
                if self.seen.contains_key(&image) {
                    continue;
                }
                self.seen.insert(image.clone(), id);
                let x = &orbit[k].1 * &self.group.generators()[s];
                orbit.push((image, x));
            }
            k += 1;
        }
        self.total += orbit.len() as u64;
        if self.total > self.budget.max_subgroups {
            return Err(Error::BudgetExceeded {
                what: "subgroup count",
                value: self.total,
                limit: self.budget.max_subgroups,
            });
        }
        let class_size = orbit.len() as u64;
        let group_order = self.n as u64;
        debug_assert_eq!(group_order % class_size, 0);
        self.classes.push(RawClass {
            bits,
            gens,
            conjugators: orbit.into_iter().map(|(_, x)| x).collect(),
            normalizer_order: group_order / class_size,
            layer: prime_factor_count(order),
        });
        Ok(id)
    }

    fn normalizer_bits(&self, class: &RawClass) -> Bits {
        let gens: Vec<&Permutation> = class.gens.iter().map(|&i| &self.table.elements[i]).collect();
        bits_with(
            self.n,
            (0..self.n).filter(|&x| {
                let e = &self.table.elements[x];
                gens.iter()
                    .all(|u| has(&class.bits, self.index(&u.conjugate_by(e))))
            }),
        )
    }

    fn bits_of(&self, g: &Group) -> Result<Bits> {
        Ok(bits_with(
            self.n,
            g.elements()?.iter().map(|e| self.index(e)),
        ))
    }

    fn gens_of(&self, g: &Group) -> Vec<usize> {
        g.generators().iter().map(|e| self.index(e)).collect()
    }

    /// Perfect subgroups found as soluble residuals of `⟨x, y⟩`, with `x` a
    /// conjugacy class representative and `y` running over representatives
    /// of the conjugation orbits of the centralizer of `x`.
    fn seed_perfect_subgroups(&mut self) -> Result<()> {
        let g = self.group;
        let residual = g.soluble_residual();
        if residual.is_trivial() {
            return Ok(());
        }
        let bits = self.bits_of(&residual)?;
        let gens = self.gens_of(&residual);
        self.register(bits, gens)?;

        let group_order = g.order();
        let mut found: Vec<Group> = vec![residual];
        let classes = g.conjugacy_classes()?;
        for class in &classes {
            let x = &self.table.elements[class[0]];
            if x.is_identity() {
                continue;
            }
            let cx = g.centralizer(&Group::from_generators(g.degree(), vec![x.clone()])?)?;
            let mut visited = vec![false; self.n];
            for y0 in 0..self.n {
                if visited[y0] {
                    continue;
                }
                // Orbit of y0 under conjugation by C(x).
                visited[y0] = true;
                let mut orbit = vec![y0];
                let mut k = 0;
                while k < orbit.len() {
                    let e = &self.table.elements[orbit[k]];
                    for c in cx.generators() {
                        let z = self.index(&e.conjugate_by(c));
                        if !visited[z] {
                            visited[z] = true;
                            orbit.push(z);
                        }
                    }
                    k += 1;
                }
                self.check_time()?;
                let y = &self.table.elements[y0];
                if (x * y) == (y * x) {
                    continue;
                }
                let h = Group::from_generators(g.degree(), vec![x.clone(), y.clone()])?;
                let order = h.order();
                // Non-soluble orders are even, divisible by 4 and by at least
                // three primes.
                if order == group_order || order % 4 != 0 || distinct_primes(order) < 3 {
                    continue;
                }
                let r = h.soluble_residual();
                if r.is_trivial() || found.iter().any(|f| f == &r) {
                    continue;
                }
                let bits = self.bits_of(&r)?;
                let gens = self.gens_of(&r);
                self.register(bits, gens)?;
                found.push(r);
            }
        }
        Ok(())
    }

    fn extend_class(&mut self, id: usize, zuppos: &[Zuppo]) -> Result<()> {
        let normalizer = self.normalizer_bits(&self.classes[id]);
        debug_assert_eq!(
            members(&normalizer).len() as u64,
            self.classes[id].normalizer_order
        );
        let base: Vec<usize> = members(&self.classes[id].bits);
        for z in zuppos {
            if !has(&normalizer, z.element)
                || has(&self.classes[id].bits, z.element)
                || !has(&self.classes[id].bits, z.power)
            {
                continue;
            }
            let mut elems = base.clone();
            let mut coset = base.clone();
            for _ in 1..z.prime {
                coset = coset.iter().map(|&u| self.mul(u, z.element)).collect();
                elems.extend_from_slice(&coset);
            }
            let bits = bits_with(self.n, elems);
            if self.seen.contains_key(&bits) {
                continue;
            }
            let mut gens = self.classes[id].gens.clone();
            gens.push(z.element);
            self.register(bits, gens)?;
        }
        Ok(())
    }

    fn run(mut self) -> Result<SubgroupLattice> {
        let identity = self.index(&self.group.identity());
        self.register(bits_with(self.n, [identity]), Vec::new())?;
        self.seed_perfect_subgroups()?;
        let zuppos = self.zuppos();
        let top = prime_factor_count(self.n as u64);
        for layer in 0..=top {
            let ids: Vec<usize> = (0..self.classes.len())
                .filter(|&i| self.classes[i].layer == layer)
                .collect();
            for id in ids {
                self.check_time()?;
                self.extend_class(id, &zuppos)?;
            }
        }
        self.finish()
    }

    fn finish(self) -> Result<SubgroupLattice> {
        let parent = self.group;
        let parent_order = parent.order();
        let mut classes = Vec::with_capacity(self.classes.len());
        for raw in self.classes {
            let gens = raw
                .gens
                .iter()
                .map(|&i| self.table.elements[i].clone())
                .collect();
            let rep = Group::from_generators(parent.degree(), gens)?;
            let order = rep.order();
            assert_eq!(order, members(&raw.bits).len() as u64);
            assert_eq!(parent_order % order, 0, "Lagrange");
            assert_eq!(raw.conjugators.len() as u64 * raw.normalizer_order, parent_order);
            classes.push(SubgroupClass {
                derived_length: rep.derived_length(),
                defect_in_parent: parent.subnormal_defect(&rep)?,
                representative: rep,
                class_size: raw.conjugators.len() as u64,
                order,
                normalizer_order: raw.normalizer_order,
                conjugators: raw.conjugators,
            });
        }
        // Stable sort keeps discovery order within an order.
        classes.sort_by_key(|c| c.order);
        Ok(SubgroupLattice {
            parent: parent.clone(),
            classes,
        })
    }
}
