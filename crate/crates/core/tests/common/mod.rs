//! Brute-force reference computations on raw image tables. Nothing here
//! uses the library's stabilizer chains or lattice code.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use minsimple::{Group, Permutation};

pub type Perm = Vec<u32>;

/// `a` then `b`.
pub fn mul(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inv(a: &[u32]) -> Perm {
    let mut r = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x as usize] = i as u32;
    }
    r
}

pub fn raw_gens(g: &Group) -> Vec<Perm> {
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

/// All elements of the group generated by `gens`, by breadth-first closure.
pub fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = (0..degree as u32).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let y = mul(&out[k], g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        k += 1;
    }
    out
}

pub fn closure_order(g: &Group) -> usize {
    closure(g.degree(), &raw_gens(g)).len()
}

/// A small group with a full multiplication table.
pub struct Table {
    pub elems: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub identity: usize,
}

pub type Subset = Vec<bool>;

impl Table {
    pub fn new(g: &Group) -> Self {
        let elems = closure(g.degree(), &raw_gens(g));
        let index: HashMap<Perm, usize> =
            elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        let inv = elems.iter().map(|a| index[&inv(a)]).collect();
        Table {
            identity: 0,
            elems,
            index,
            mul,
            inv,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        self.index[p.images()]
    }

    /// Subgroup generated by element indices.
    pub fn generate(&self, gens: &[usize]) -> Subset {
        let mut set = vec![false; self.len()];
        set[self.identity] = true;
        let mut list = vec![self.identity];
        let mut k = 0;
        while k < list.len() {
            for &g in gens {
                let y = self.mul[list[k]][g];
                if !set[y] {
                    set[y] = true;
                    list.push(y);
                }
            }
            k += 1;
        }
        set
    }

    pub fn subset_of(&self, g: &Group) -> Subset {
        let gens: Vec<usize> = g.generators().iter().map(|p| self.index_of(p)).collect();
        self.generate(&gens)
    }

    pub fn members(s: &Subset) -> Vec<usize> {
        s.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    }

    pub fn size(s: &Subset) -> usize {
        s.iter().filter(|&&b| b).count()
    }

    /// Every subgroup: each is reached from a smaller one by adjoining one
    /// element.
    pub fn all_subgroups(&self) -> Vec<Subset> {
        let trivial = self.generate(&[]);
        let mut seen: HashSet<Subset> = HashSet::from([trivial.clone()]);
        let mut out = vec![(trivial, Vec::<usize>::new())];
        let mut k = 0;
        while k < out.len() {
            let (set, gens) = out[k].clone();
            for (x, &inside) in set.iter().enumerate() {
                if inside {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(x);
                let s = self.generate(&g2);
                if seen.insert(s.clone()) {
                    out.push((s, g2));
                }
            }
            k += 1;
        }
        out.into_iter().map(|(s, _)| s).collect()
    }

    pub fn conjugate(&self, s: &Subset, x: usize) -> Subset {
        let mut r = vec![false; self.len()];
        for a in Self::members(s) {
            r[self.mul[self.mul[self.inv[x]][a]][x]] = true;
        }
        r
    }

    /// Number of conjugacy classes among the given subgroups.
    pub fn class_count(&self, subs: &[Subset]) -> usize {
        let mut done: HashSet<Subset> = HashSet::new();
        let mut classes = 0;
        for s in subs {
            if done.contains(s) {
                continue;
            }
            classes += 1;
            for x in 0..self.len() {
                done.insert(self.conjugate(s, x));
            }
        }
        classes
    }

    pub fn is_normal_in(&self, n: &Subset, g: &Subset) -> bool {
        Self::members(g).into_iter().all(|x| self.conjugate(n, x) == *n)
    }

    pub fn commutator_subgroup(&self, s: &Subset) -> Subset {
        let m = Self::members(s);
        let mut gens = Vec::new();
        for &a in &m {
            for &b in &m {
                let c = self.mul[self.mul[self.inv[a]][self.inv[b]]][self.mul[a][b]];
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.generate(&gens)
    }

    /// Derived length, or `None` if the series stalls above the identity.
    pub fn derived_length(&self, s: &Subset) -> Option<usize> {
        let mut cur = s.clone();
        let mut len = 0;
        while Self::size(&cur) > 1 {
            let next = self.commutator_subgroup(&cur);
            if next == cur {
                return None;
            }
            cur = next;
            len += 1;
        }
        Some(len)
    }

    pub fn center(&self, s: &Subset) -> Subset {
        let m = Self::members(s);
        let mut r = vec![false; self.len()];
        for &z in &m {
            if m.iter().all(|&a| self.mul[z][a] == self.mul[a][z]) {
                r[z] = true;
            }
        }
        r
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.mul[y][x];
            k += 1;
        }
        k
    }
}

impl Table {
    pub fn is_subset(a: &Subset, b: &Subset) -> bool {
        a.iter().zip(b).all(|(&x, &y)| !x || y)
    }

    /// Normal closure of `h` in `k`.
    pub fn normal_closure(&self, h: &Subset, k: &Subset) -> Subset {
        let mut gens = Vec::new();
        for x in Self::members(k) {
            for a in Self::members(h) {
                gens.push(self.mul[self.mul[self.inv[x]][a]][x]);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.generate(&gens)
    }

    /// Subnormal defect of `h` in `g` by iterated normal closures.
    pub fn defect(&self, h: &Subset, g: &Subset) -> Option<usize> {
        let mut k = g.clone();
        let mut steps = 0;
        while k != *h {
            let next = self.normal_closure(h, &k);
            if next == k {
                return None;
            }
            k = next;
            steps += 1;
        }
        Some(steps)
    }

    pub fn derived_series(&self, g: &Subset) -> Vec<Subset> {
        let mut terms = vec![g.clone()];
        loop {
            let next = self.commutator_subgroup(terms.last().unwrap());
            if &next == terms.last().unwrap() {
                return terms;
            }
            terms.push(next);
        }
    }

    pub fn whole(&self) -> Subset {
        vec![true; self.len()]
    }

    pub fn involutions(&self, s: &Subset) -> usize {
        Self::members(s)
            .into_iter()
            .filter(|&x| self.element_order(x) == 2)
            .count()
    }
}

/// Order 24, derived length 3 and trivial center together single out S4.
pub fn looks_like_s4(t: &Table, s: &Subset) -> bool {
    Table::size(s) == 24 && t.derived_length(s) == Some(3) && Table::size(&t.center(s)) == 1
}
