//! Finite permutation groups and the structural operations on them.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use super::chain::StabChain;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Largest order for which explicit element enumeration is allowed.
pub const ELEMENT_BUDGET: u64 = 40_000;

/// Element list of a group plus a reverse index.
#[derive(Debug)]
pub struct ElementTable {
    pub elements: Vec<Permutation>,
    pub index: HashMap<Permutation, u32>,
}

impl ElementTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }
}

/// A finite permutation group given by generators. The stabilizer chain and
/// the element table are computed on first use and cached.
pub struct Group {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabChain>,
    table: OnceLock<ElementTable>,
}

impl Clone for Group {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        Group {
            degree: self.degree,
            gens: self.gens.clone(),
            chain,
            table: OnceLock::new(),
        }
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(degree {}, gens [", self.degree)?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

/// Set equality of the underlying groups.
impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.gens.iter().all(|g| self.contains(g))
    }
}

impl Eq for Group {}

impl Group {
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Group {
            degree,
            gens,
            chain: OnceLock::new(),
            table: OnceLock::new(),
        })
    }

    fn with_chain(degree: usize, gens: Vec<Permutation>, chain: StabChain) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        Group {
            degree,
            gens,
            chain: cell,
            table: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Group::with_chain(degree, Vec::new(), StabChain::new(degree))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::from_generators(self.degree, &self.gens))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Exact membership by sifting; `false` on degree mismatch.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn is_member(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.contains(p))
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    fn require_subgroup(&self, h: &Group) -> Result<()> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: h.degree,
            });
        }
        if !h.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        Ok(())
    }

    /// Subgroup generated by `gens`, which must all lie in `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<Group> {
        for g in &gens {
            self.check_degree(g)?;
            if !self.contains(g) {
                return Err(Error::NotSubgroup);
            }
        }
        Group::from_generators(self.degree, gens)
    }

    /// Group generated by the generators of both.
    pub fn join(&self, other: &Group) -> Group {
        let mut gens = self.gens.clone();
        let mut chain = self.chain().clone();
        for g in &other.gens {
            if chain.insert(g) {
                gens.push(g.clone());
            }
        }
        Group::with_chain(self.degree, gens, chain)
    }

    /// Explicit element list, in chain order.
    pub fn element_table(&self) -> Result<&ElementTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let order = self.order();
        if order > ELEMENT_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "element enumeration",
                value: order,
                limit: ELEMENT_BUDGET,
            });
        }
        Ok(self.table.get_or_init(|| {
            let elements = self.chain().elements();
            let index = elements
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i as u32))
                .collect();
            ElementTable { elements, index }
        }))
    }

    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(&self.element_table()?.elements)
    }

    /// Smallest normal subgroup of `self` containing `h`.
    pub fn normal_closure(&self, h: &Group) -> Result<Group> {
        self.require_subgroup(h)?;
        Ok(self.normal_closure_of(h.gens.iter().cloned()))
    }

    /// Normal closure of the given elements, which are assumed to lie in `self`.
    fn normal_closure_of(&self, seeds: impl IntoIterator<Item = Permutation>) -> Group {
        let mut chain = StabChain::new(self.degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for s in seeds {
            if chain.insert(&s) {
                gens.push(s);
            }
        }
        let mut k = 0;
        while k < gens.len() {
            for x in &self.gens {
                let c = gens[k].conjugate_by(x);
                if chain.insert(&c) {
                    gens.push(c);
                }
            }
            k += 1;
        }
        Group::with_chain(self.degree, gens, chain)
    }

    pub fn is_normal_subgroup(&self, h: &Group) -> bool {
        h.is_subgroup_of(self)
            && h.gens
                .iter()
                .all(|n| self.gens.iter().all(|x| h.contains(&n.conjugate_by(x))))
    }

    /// Commutator subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Group {
        let mut seeds = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure_of(seeds)
    }

    pub fn derived_series(&self) -> SeriesRecord {
        let mut terms = vec![self.clone()];
        loop {
            let last = terms.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                terms.push(next);
                break;
            }
            terms.push(next);
        }
        SeriesRecord {
            terms,
            kind: SeriesKind::Derived,
        }
    }

    /// Least `d` with `G^(d) = 1`, or `None` when the group is not soluble.
    pub fn derived_length(&self) -> Option<usize> {
        let series = self.derived_series();
        if series.terms.last().unwrap().is_trivial() {
            Some(series.terms.len() - 1)
        } else {
            None
        }
    }

    /// Last term of the derived series (perfect).
    pub fn soluble_residual(&self) -> Group {
        self.derived_series().terms.pop().unwrap()
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_length().is_some()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| (a * b) == (b * a))
        })
    }

    pub fn is_metabelian(&self) -> bool {
        matches!(self.derived_length(), Some(d) if d <= 2)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// The descending chain `K₀ = G`, `K_{i+1}` = normal closure of `h` in
    /// `K_i`, until it stabilizes.
    pub fn normal_closure_chain(&self, h: &Group) -> Result<SeriesRecord> {
        self.require_subgroup(h)?;
        let mut terms = vec![self.clone()];
        loop {
            let last = terms.last().unwrap();
            if last.order() == h.order() {
                break;
            }
            let next = last.normal_closure_of(h.gens.iter().cloned());
            if next.order() == last.order() {
                break;
            }
            terms.push(next);
        }
        Ok(SeriesRecord {
            terms,
            kind: SeriesKind::NormalClosure,
        })
    }

    /// Least `r` with a chain `h = H₀ ⊴ H₁ ⊴ … ⊴ H_r = self`, or `None` if `h`
    /// is not subnormal.
    pub fn subnormal_defect(&self, h: &Group) -> Result<Option<usize>> {
        let chain = self.normal_closure_chain(h)?;
        let last = chain.terms.last().unwrap();
        if last.order() == h.order() {
            Ok(Some(chain.terms.len() - 1))
        } else {
            Ok(None)
        }
    }

    /// Greedy group on the elements of `self` satisfying `keep`.
    fn filter_subgroup(&self, keep: impl Fn(&Permutation) -> bool) -> Result<Group> {
        let mut chain = StabChain::new(self.degree);
        let mut gens = Vec::new();
        for x in self.elements()? {
            if !chain.contains(x) && keep(x) {
                chain.insert(x);
                gens.push(x.clone());
            }
        }
        Ok(Group::with_chain(self.degree, gens, chain))
    }

    /// Elements of `self` commuting with every element of `h`.
    pub fn centralizer(&self, h: &Group) -> Result<Group> {
        self.require_subgroup(h)?;
        self.filter_subgroup(|x| h.gens.iter().all(|y| (x * y) == (y * x)))
    }

    pub fn center(&self) -> Result<Group> {
        self.centralizer(self)
    }

    /// Elements of `self` conjugating `h` onto itself.
    pub fn normalizer(&self, h: &Group) -> Result<Group> {
        self.require_subgroup(h)?;
        self.filter_subgroup(|x| h.gens.iter().all(|y| h.contains(&y.conjugate_by(x))))
    }

    /// Conjugacy classes as lists of element indices into the element table,
    /// each class starting with its smallest index. Classes are ordered by
    /// their first element.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<usize>>> {
        let table = self.element_table()?;
        let n = table.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut class = vec![start];
            let mut k = 0;
            while k < class.len() {
                let x = &table.elements[class[k]];
                for s in &self.gens {
                    let y = table.index_of(&x.conjugate_by(s)).unwrap();
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        class.push(y);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        Ok(classes)
    }

    /// All normal subgroups, from normal closures of conjugacy classes and
    /// their joins. Sorted by order; the first entry is trivial and the last
    /// is `self`.
    pub fn normal_subgroups(&self) -> Result<Vec<Group>> {
        let table = self.element_table()?;
        let classes = self.conjugacy_classes()?;
        let mut found: Vec<Group> = vec![Group::trivial(self.degree)];
        let push_new = |found: &mut Vec<Group>, g: Group| -> bool {
            if found.iter().any(|f| f == &g) {
                false
            } else {
                found.push(g);
                true
            }
        };
        for class in &classes {
            let rep = &table.elements[class[0]];
            if rep.is_identity() {
                continue;
            }
            let n = self.normal_closure_of(std::iter::once(rep.clone()));
            push_new(&mut found, n);
        }
        // Close under joins.
        let mut i = 0;
        while i < found.len() {
            let mut j = 0;
            while j < i {
                let joined = found[i].join(&found[j]);
                push_new(&mut found, joined);
                j += 1;
            }
            i += 1;
        }
        found.sort_by_key(|g| g.order());
        Ok(found)
    }

    pub fn is_simple(&self) -> Result<bool> {
        Ok(self.order() > 1 && self.normal_subgroups()?.len() == 2)
    }

    /// Normal subgroups that are minimal among the non-trivial ones.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<Group>> {
        let normals = self.normal_subgroups()?;
        let nontrivial: Vec<&Group> = normals.iter().filter(|n| !n.is_trivial()).collect();
        Ok(nontrivial
            .iter()
            .filter(|n| {
                !nontrivial
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .map(|n| (*n).clone())
            .collect())
    }

    /// Largest normal soluble subgroup.
    pub fn soluble_radical(&self) -> Result<Group> {
        let normals = self.normal_subgroups()?;
        let radical = normals
            .iter()
            .filter(|n| n.is_soluble())
            .fold(Group::trivial(self.degree), |acc, n| acc.join(n));
        debug_assert!(radical.is_soluble());
        Ok(radical)
    }

    /// Permutation image of `self / n` acting on the cosets of `n`.
    pub fn quotient_group(&self, n: &Group) -> Result<Group> {
        self.require_subgroup(n)?;
        if !self.is_normal_subgroup(n) {
            return Err(Error::NotNormal);
        }
        let table = self.element_table()?;
        let n_elems = n.elements()?;
        let mut label = vec![u32::MAX; table.len()];
        let mut reps: Vec<usize> = Vec::new();
        for start in 0..table.len() {
            if label[start] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start);
            let g = &table.elements[start];
            for m in n_elems {
                let idx = table.index_of(&(g * m)).unwrap();
                label[idx] = id;
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|s| {
                let images = reps
                    .iter()
                    .map(|&r| label[table.index_of(&(&table.elements[r] * s)).unwrap()])
                    .collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        Group::from_generators(reps.len(), gens)
    }

    /// Conjugate subgroup `x⁻¹ self x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Group {
        let gens = self.gens.iter().map(|g| g.conjugate_by(x)).collect();
        Group::from_generators(self.degree, gens).expect("degrees match")
    }

    /// Sorted `(element order, count)` pairs.
    pub fn element_order_histogram(&self) -> Result<Vec<(u64, u64)>> {
        let mut counts: std::collections::BTreeMap<u64, u64> = Default::default();
        for e in self.elements()? {
            *counts.entry(e.order()).or_default() += 1;
        }
        Ok(counts.into_iter().collect())
    }

    /// Orbit of `point` under the group, in discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            for g in &self.gens {
                let y = g.apply(orbit[k]);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Stabilizer of `point`, built from Schreier generators.
    pub fn point_stabilizer(&self, point: usize) -> Group {
        let orbit = self.orbit(point);
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[point] = Some(self.identity());
        let mut chain = StabChain::new(self.degree);
        let mut gens = Vec::new();
        for &beta in &orbit {
            for g in &self.gens {
                let img = g.apply(beta);
                if reps[img].is_none() {
                    reps[img] = Some(reps[beta].as_ref().unwrap() * g);
                }
            }
        }
        for &beta in &orbit {
            for g in &self.gens {
                let img = g.apply(beta);
                let s = &(reps[beta].as_ref().unwrap() * g) * &reps[img].as_ref().unwrap().inverse();
                if chain.insert(&s) {
                    gens.push(s);
                }
            }
        }
        debug_assert_eq!(chain.order() * orbit.len() as u64, self.order());
        Group::with_chain(self.degree, gens, chain)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    NormalClosure,
}

/// A descending series of subgroups, first term the whole group.
#[derive(Clone, Debug)]
pub struct SeriesRecord {
    pub terms: Vec<Group>,
    pub kind: SeriesKind,
}

impl SeriesRecord {
    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(Group::order).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alt, cyclic, dihedral, direct_product, quaternion8, sym};

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn generators_must_share_degree() {
        let err = Group::from_generators(4, vec![p("(0 1)", 4), p("(0 1)", 5)]).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                expected: 4,
                found: 5
            }
        );
    }

    #[test]
    fn basic_orders() {
        let a5 = Group::from_generators(5, vec![p("(0 1 2 3 4)", 5), p("(0 1 2)", 5)]).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(Group::from_generators(3, vec![]).unwrap().order(), 1);
        let s4 = Group::from_generators(4, vec![p("(0 1)", 4), p("(0 1 2 3)", 4)]).unwrap();
        assert_eq!(s4.order(), 24);
    }

    #[test]
    fn membership() {
        let a5 = alt(5).unwrap();
        assert!(a5.is_member(&p("(0 1 2)", 5)).unwrap());
        assert!(!a5.is_member(&p("(0 1)", 5)).unwrap());
        assert!(sym(4).unwrap().is_member(&p("(0 1)(2 3)", 4)).unwrap());
        assert!(a5.is_member(&p("(0 1)", 4)).is_err());
    }

    #[test]
    fn derived_series_examples() {
        let s4 = sym(4).unwrap();
        assert_eq!(s4.derived_series().orders(), vec![24, 12, 4, 1]);
        assert_eq!(Group::trivial(3).derived_series().orders(), vec![1]);
        assert_eq!(sym(5).unwrap().derived_series().orders(), vec![120, 60, 60]);
        assert!(alt(5).unwrap().is_perfect());
        assert_eq!(alt(5).unwrap().derived_length(), None);
        assert_eq!(cyclic(6).unwrap().derived_subgroup().order(), 1);
    }

    #[test]
    fn predicates() {
        let s3 = sym(3).unwrap();
        assert!(s3.is_metabelian());
        let s4 = sym(4).unwrap();
        assert!(!s4.is_metabelian());
        assert!(s4.is_soluble());
        let t = Group::trivial(2);
        assert!(t.is_abelian() && t.is_metabelian() && t.is_soluble() && t.is_perfect());
        assert_eq!(t.derived_length(), Some(0));
        assert_eq!(cyclic(5).unwrap().derived_length(), Some(1));
    }

    #[test]
    fn normal_closure_examples() {
        let s4 = sym(4).unwrap();
        let t = s4.subgroup(vec![p("(0 1)", 4)]).unwrap();
        assert_eq!(s4.normal_closure(&t).unwrap().order(), 24);
        let v = s4.subgroup(vec![p("(0 1)(2 3)", 4)]).unwrap();
        assert_eq!(s4.normal_closure(&v).unwrap().order(), 4);
        let a4 = s4.derived_subgroup();
        assert_eq!(s4.normal_closure(&a4).unwrap(), a4);
        let outside = Group::from_generators(4, vec![p("(0 1)", 4)]).unwrap();
        assert_eq!(
            alt(4).unwrap().normal_closure(&outside).unwrap_err(),
            Error::NotSubgroup
        );
    }

    #[test]
    fn subnormal_defects() {
        let s4 = sym(4).unwrap();
        let t = s4.subgroup(vec![p("(0 1)", 4)]).unwrap();
        assert_eq!(s4.subnormal_defect(&t).unwrap(), None);
        assert_eq!(s4.subnormal_defect(&s4).unwrap(), Some(0));
        let a4 = s4.derived_subgroup();
        assert_eq!(s4.subnormal_defect(&a4).unwrap(), Some(1));
        // ⟨(0 1)(2 3)⟩ ⊴ V4 ⊴ S4
        let c2 = s4.subgroup(vec![p("(0 1)(2 3)", 4)]).unwrap();
        assert_eq!(s4.subnormal_defect(&c2).unwrap(), Some(2));
    }

    #[test]
    fn centralizers_and_normalizers() {
        assert_eq!(quaternion8().unwrap().center().unwrap().order(), 2);
        let s3 = sym(3).unwrap();
        assert_eq!(s3.centralizer(&s3).unwrap().order(), 1);
        let s4 = sym(4).unwrap();
        let c4 = s4.subgroup(vec![p("(0 1 2 3)", 4)]).unwrap();
        assert_eq!(s4.normalizer(&c4).unwrap().order(), 8);
    }

    #[test]
    fn normal_subgroup_lists() {
        let orders = |g: &Group| -> Vec<u64> {
            g.normal_subgroups().unwrap().iter().map(Group::order).collect()
        };
        assert_eq!(orders(&sym(4).unwrap()), vec![1, 4, 12, 24]);
        assert_eq!(orders(&alt(5).unwrap()), vec![1, 60]);
        assert_eq!(orders(&cyclic(6).unwrap()), vec![1, 2, 3, 6]);
        assert!(alt(5).unwrap().is_simple().unwrap());
    }

    #[test]
    fn soluble_radicals() {
        let s4 = sym(4).unwrap();
        assert_eq!(s4.soluble_radical().unwrap(), s4);
        assert_eq!(alt(5).unwrap().soluble_radical().unwrap().order(), 1);
        let g = direct_product(&cyclic(2).unwrap(), &sym(5).unwrap()).unwrap();
        let r = g.soluble_radical().unwrap();
        assert_eq!(r.order(), 2);
        assert!(r.generators().iter().all(|x| x.images()[2..].iter().enumerate().all(|(i, &y)| y as usize == i + 2)));
    }

    #[test]
    fn quotients() {
        let s4 = sym(4).unwrap();
        let v4 = s4.derived_subgroup().derived_subgroup();
        let q = s4.quotient_group(&v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert_eq!(s4.quotient_group(&s4).unwrap().order(), 1);
        assert_eq!(s4.quotient_group(&Group::trivial(4)).unwrap().order(), 24);
        let t = s4.subgroup(vec![p("(0 1)", 4)]).unwrap();
        assert_eq!(s4.quotient_group(&t).unwrap_err(), Error::NotNormal);
        let d = dihedral(6).unwrap();
        assert!(d.quotient_group(&d.derived_subgroup()).unwrap().is_abelian());
    }

    #[test]
    fn stabilizers() {
        let s5 = sym(5).unwrap();
        assert_eq!(s5.point_stabilizer(3).order(), 24);
        assert!(s5.is_transitive());
    }
}
