//! Isomorphism of small permutation groups: invariant fingerprint first, then
//! a backtracking search over images of a generating pair (or short
//! generating tuple).

use super::group::Group;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default largest order accepted by [`is_isomorphic`].
pub const ISO_BUDGET: u64 = 10_000;

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: u64,
    pub element_orders: Vec<(u64, u64)>,
    pub derived_length: Option<usize>,
    /// Sorted `(element order, class size)` over conjugacy classes.
    pub classes: Vec<(u64, usize)>,
}

pub fn fingerprint(g: &Group) -> Result<Fingerprint> {
    let table = g.element_table()?;
    let mut classes: Vec<(u64, usize)> = g
        .conjugacy_classes()?
        .iter()
        .map(|c| (table.elements[c[0]].order(), c.len()))
        .collect();
    classes.sort_unstable();
    Ok(Fingerprint {
        order: g.order(),
        element_orders: g.element_order_histogram()?,
        derived_length: g.derived_length(),
        classes,
    })
}

fn check_budget(g: &Group, limit: u64) -> Result<()> {
    let order = g.order();
    if order > limit {
        return Err(Error::BudgetExceeded {
            what: "isomorphism",
            value: order,
            limit,
        });
    }
    Ok(())
}

/// Per-element data used to match generator images.
struct ClassInfo {
    /// class id of each element index
    class_of: Vec<usize>,
    /// (element order, class size) for each class
    signature: Vec<(u64, usize)>,
    classes: Vec<Vec<usize>>,
}

fn class_info(g: &Group) -> Result<ClassInfo> {
    let table = g.element_table()?;
    let classes = g.conjugacy_classes()?;
    let mut class_of = vec![0; table.len()];
    let mut signature = Vec::with_capacity(classes.len());
    for (id, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = id;
        }
        signature.push((table.elements[c[0]].order(), c.len()));
    }
    Ok(ClassInfo {
        class_of,
        signature,
        classes,
    })
}

/// A short generating tuple of `g`, preferring a pair whose second element
/// lies in a small conjugacy class.
fn small_generating_tuple(g: &Group, info: &ClassInfo) -> Result<Vec<Permutation>> {
    let table = g.element_table()?;
    let order = g.order();
    if order == 1 {
        return Ok(Vec::new());
    }
    let mut by_size: Vec<usize> = (0..info.classes.len()).collect();
    by_size.sort_by_key(|&c| (info.classes[c].len(), c));
    let budget = 20_000usize;
    let mut tried = 0usize;
    for &cx in &by_size {
        let x = &table.elements[info.classes[cx][0]];
        if x.is_identity() {
            continue;
        }
        if Group::from_generators(g.degree(), vec![x.clone()])?.order() == order {
            return Ok(vec![x.clone()]);
        }
        for &cy in &by_size {
            for &y in &info.classes[cy] {
                tried += 1;
                if tried > budget {
                    return Ok(reduced_generators(g));
                }
                let y = &table.elements[y];
                if y.is_identity() {
                    continue;
                }
                let h = Group::from_generators(g.degree(), vec![x.clone(), y.clone()])?;
                if h.order() == order {
                    return Ok(vec![x.clone(), y.clone()]);
                }
            }
        }
    }
    Ok(reduced_generators(g))
}

fn reduced_generators(g: &Group) -> Vec<Permutation> {
    let mut chain = super::chain::StabChain::new(g.degree());
    g.generators()
        .iter()
        .filter(|x| chain.insert(x))
        .cloned()
        .collect()
}

/// Checks whether `a_gens ↦ images` extends to an isomorphism from
/// `a` onto a group of order `b_order`.
fn extends_to_isomorphism(
    a: &Group,
    a_gens: &[Permutation],
    images: &[Permutation],
    b_order: usize,
) -> bool {
    let table = a.element_table().expect("checked by caller");
    let n = table.len();
    let mut map: Vec<Option<Permutation>> = vec![None; n];
    let e = table.index_of(&a.identity()).unwrap();
    map[e] = Some(Permutation::identity(images.first().map_or(0, |p| p.degree())));
    let mut queue = vec![e];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for (g, img) in a_gens.iter().zip(images) {
            let y = table.index_of(&(&table.elements[x] * g)).unwrap();
            let candidate = map[x].as_ref().unwrap() * img;
            match &map[y] {
                Some(existing) => {
                    if *existing != candidate {
                        return false;
                    }
                }
                None => {
                    map[y] = Some(candidate);
                    queue.push(y);
                }
            }
        }
        k += 1;
    }
    if queue.len() != n || n != b_order {
        return false;
    }
    let mut imgs: Vec<&Permutation> = map.iter().map(|m| m.as_ref().unwrap()).collect();
    imgs.sort();
    imgs.dedup();
    imgs.len() == n
}

/// Search state shared by isomorphism and automorphism enumeration.
struct Search<'a> {
    a: &'a Group,
    a_gens: Vec<Permutation>,
    /// for each generator, candidate image element indices in `b`
    candidates: Vec<Vec<usize>>,
    b: &'a Group,
    /// order of each product `a_gens[0] * a_gens[i]`
    pair_orders: Vec<u64>,
}

impl Search<'_> {
    fn run(&self, mut visit: impl FnMut(&[Permutation]) -> bool) {
        let b_table = self.b.element_table().expect("checked by caller");
        let mut chosen: Vec<Permutation> = Vec::with_capacity(self.a_gens.len());
        self.recurse(b_table, &mut chosen, &mut visit);
    }

    fn recurse(
        &self,
        b_table: &super::group::ElementTable,
        chosen: &mut Vec<Permutation>,
        visit: &mut impl FnMut(&[Permutation]) -> bool,
    ) -> bool {
        let depth = chosen.len();
        if depth == self.a_gens.len() {
            if extends_to_isomorphism(self.a, &self.a_gens, chosen, b_table.len()) {
                return visit(chosen);
            }
            return true;
        }
        for &c in &self.candidates[depth] {
            let img = &b_table.elements[c];
            if depth > 0 && (&chosen[0] * img).order() != self.pair_orders[depth] {
                continue;
            }
            chosen.push(img.clone());
            let go_on = self.recurse(b_table, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn build_search<'a>(
    a: &'a Group,
    b: &'a Group,
    first_up_to_conjugacy: bool,
) -> Result<Search<'a>> {
    let a_info = class_info(a)?;
    let b_info = class_info(b)?;
    let a_table = a.element_table()?;
    let a_gens = small_generating_tuple(a, &a_info)?;
    let mut candidates = Vec::with_capacity(a_gens.len());
    for (depth, g) in a_gens.iter().enumerate() {
        let sig = a_info.signature[a_info.class_of[a_table.index_of(g).unwrap()]];
        let mut cands = Vec::new();
        for (id, class) in b_info.classes.iter().enumerate() {
            if b_info.signature[id] != sig {
                continue;
            }
            if depth == 0 && first_up_to_conjugacy {
                cands.push(class[0]);
            } else {
                cands.extend_from_slice(class);
            }
        }
        candidates.push(cands);
    }
    let pair_orders = a_gens
        .iter()
        .map(|g| (&a_gens[0] * g).order())
        .collect();
    Ok(Search {
        a,
        a_gens,
        candidates,
        b,
        pair_orders,
    })
}

/// Exact isomorphism test for groups of order at most `limit`.
pub fn is_isomorphic_with_budget(a: &Group, b: &Group, limit: u64) -> Result<bool> {
    Ok(find_isomorphism_with_budget(a, b, limit)?.is_some())
}

pub fn is_isomorphic(a: &Group, b: &Group) -> Result<bool> {
    is_isomorphic_with_budget(a, b, ISO_BUDGET)
}

/// Returns images in `b` of a generating tuple of `a` defining an isomorphism.
pub fn find_isomorphism_with_budget(
    a: &Group,
    b: &Group,
    limit: u64,
) -> Result<Option<(Vec<Permutation>, Vec<Permutation>)>> {
    check_budget(a, limit)?;
    check_budget(b, limit)?;
    if a.order() != b.order() {
        return Ok(None);
    }
    if fingerprint(a)? != fingerprint(b)? {
        return Ok(None);
    }
    if a.order() == 1 {
        return Ok(Some((Vec::new(), Vec::new())));
    }
    let search = build_search(a, b, true)?;
    let mut found = None;
    search.run(|imgs| {
        found = Some(imgs.to_vec());
        false
    });
    Ok(found.map(|imgs| (search.a_gens.clone(), imgs)))
}

/// Number of automorphisms of `g`, by exhaustive search over generator images.
pub fn automorphism_count(g: &Group, limit: u64) -> Result<u64> {
    check_budget(g, limit)?;
    if g.order() == 1 {
        return Ok(1);
    }
    let search = build_search(g, g, false)?;
    let mut count = 0u64;
    search.run(|_| {
        count += 1;
        true
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alt, dihedral, psl2, quaternion8, sym, cyclic, direct_product};
    use crate::field::PrimePower;

    #[test]
    fn psl2_4_is_a5() {
        let a5 = alt(5).unwrap();
        let p4 = psl2(PrimePower::new(4).unwrap()).unwrap();
        let p5 = psl2(PrimePower::new(5).unwrap()).unwrap();
        assert!(is_isomorphic(&p4, &a5).unwrap());
        assert!(is_isomorphic(&p4, &p5).unwrap());
    }

    #[test]
    fn s4_is_not_d12() {
        assert!(!is_isomorphic(&sym(4).unwrap(), &dihedral(12).unwrap()).unwrap());
        assert_ne!(
            fingerprint(&sym(4).unwrap()).unwrap().element_orders,
            fingerprint(&dihedral(12).unwrap()).unwrap().element_orders
        );
    }

    #[test]
    fn same_fingerprint_different_group() {
        // C4 x C2 vs Q8 vs D8 share order but not structure.
        let c4c2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert!(!is_isomorphic(&c4c2, &quaternion8().unwrap()).unwrap());
        assert!(!is_isomorphic(&dihedral(4).unwrap(), &quaternion8().unwrap()).unwrap());
    }

    #[test]
    fn reflexive() {
        for g in [sym(4).unwrap(), quaternion8().unwrap(), alt(5).unwrap()] {
            assert!(is_isomorphic(&g, &g).unwrap());
        }
    }

    #[test]
    fn automorphisms_of_small_groups() {
        assert_eq!(automorphism_count(&alt(5).unwrap(), 1000).unwrap(), 120);
        assert_eq!(automorphism_count(&sym(3).unwrap(), 1000).unwrap(), 6);
        assert_eq!(automorphism_count(&quaternion8().unwrap(), 1000).unwrap(), 24);
        assert_eq!(automorphism_count(&cyclic(5).unwrap(), 1000).unwrap(), 4);
    }

    #[test]
    fn budget_is_explicit() {
        let s8 = sym(8).unwrap();
        assert!(is_isomorphic(&s8, &s8).unwrap_err().is_budget());
    }
}
