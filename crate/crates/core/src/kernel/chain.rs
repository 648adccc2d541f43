//! Base and strong generating set, built by incremental Schreier–Sims.

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[β]` maps the base point to `β`.
    transversal: Vec<Option<Permutation>>,
    /// Inverses of the transversal entries.
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        inverse[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            inverse,
        }
    }

    fn add_point(&mut self, beta: usize, rep: Permutation) {
        self.inverse[beta] = Some(rep.inverse());
        self.transversal[beta] = Some(rep);
        self.orbit.push(beta);
    }
}

/// Stabilizer chain `G = G₀ ≥ G₁ ≥ … ≥ G_k = 1` where `G_{i+1}` is the
/// stabilizer of `base[i]` in `G_i`.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators<'a>(
        degree: usize,
        gens: impl IntoIterator<Item = &'a Permutation>,
    ) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.insert(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    /// Strips `g` through the levels starting at `from`. Returns the residue;
    /// it is the identity exactly when `g` lies in `G_from`.
    fn sift(&self, from: usize, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels[from..] {
            let beta = h.apply(level.base);
            match &level.inverse[beta] {
                Some(u) => h = &h * u,
                None => return h,
            }
        }
        h
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(0, g).is_identity()
    }

    /// Adds `g` to the group. Returns `false` if it was already a member.
    pub fn insert(&mut self, g: &Permutation) -> bool {
        if self.sift(0, g).is_identity() {
            return false;
        }
        self.add_generator(0, g.clone());
        true
    }

    fn add_generator(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let base = g
                .first_moved()
                .expect("identity is never added as a generator");
            self.levels.push(Level::new(self.degree, base));
        }
        let old_len;
        let gen_count;
        {
            let level = &mut self.levels[i];
            level.gens.push(g);
            old_len = level.orbit.len();
            gen_count = level.gens.len();
            let newest = gen_count - 1;
            for k in 0..old_len {
                let beta = level.orbit[k];
                let img = level.gens[newest].apply(beta);
                if level.transversal[img].is_none() {
                    let rep = level.transversal[beta].as_ref().unwrap() * &level.gens[newest];
                    level.add_point(img, rep);
                }
            }
            let mut k = old_len;
            while k < level.orbit.len() {
                let beta = level.orbit[k];
                for s in 0..gen_count {
                    let img = level.gens[s].apply(beta);
                    if level.transversal[img].is_none() {
                        let rep = level.transversal[beta].as_ref().unwrap() * &level.gens[s];
                        level.add_point(img, rep);
                    }
                }
                k += 1;
            }
        }

        // Schreier generators not yet tested: every old orbit point with the
        // new generator, every new orbit point with all generators.
        let mut k = 0;
        loop {
            let (beta, gens_to_use): (usize, std::ops::Range<usize>) = {
                let level = &self.levels[i];
                if k >= level.orbit.len() {
                    break;
                }
                let beta = level.orbit[k];
                if k < old_len {
                    (beta, gen_count - 1..gen_count)
                } else {
                    (beta, 0..gen_count)
                }
            };
            for s in gens_to_use {
                let schreier = {
                    let level = &self.levels[i];
                    let gen = &level.gens[s];
                    let img = gen.apply(beta);
                    let u = level.transversal[beta].as_ref().unwrap();
                    let w = level.inverse[img].as_ref().unwrap();
                    &(u * gen) * w
                };
                if schreier.is_identity() {
                    continue;
                }
                let residue = self.sift(i + 1, &schreier);
                if !residue.is_identity() {
                    self.add_generator(i + 1, residue);
                }
            }
            k += 1;
        }
    }

    /// All elements, as products of transversal entries from the deepest
    /// level up. Order is deterministic.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &beta in &level.orbit {
                let u = level.transversal[beta].as_ref().unwrap();
                for h in &out {
                    next.push(h * u);
                }
            }
            out = next;
        }
        out
    }

    /// Generators of each level, deduplicated; together a strong generating set.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Orbit of the first base point, or empty for the trivial group.
    pub fn base_orbit(&self) -> &[usize] {
        self.levels.first().map(|l| l.orbit.as_slice()).unwrap_or(&[])
    }
}
