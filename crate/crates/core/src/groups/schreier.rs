//! Deterministic Schreier-Sims: group order and membership without listing
//! elements.

use std::collections::HashMap;

use super::Perm;

struct Level {
    base_point: usize,
    gens: Vec<Perm>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: HashMap<usize, Perm>,
}

impl Level {
    fn new(base_point: usize, gens: Vec<Perm>, n: usize) -> Self {
        let mut lvl = Level {
            base_point,
            gens,
            transversal: HashMap::new(),
        };
        lvl.rebuild(n);
        lvl
    }

    fn rebuild(&mut self, n: usize) {
        self.transversal.clear();
        self.transversal.insert(self.base_point, Perm::identity(n));
        let mut queue = vec![self.base_point];
        while let Some(b) = queue.pop() {
            let ub = self.transversal[&b].clone();
            for s in &self.gens {
                let c = s.apply(b);
                if let std::collections::hash_map::Entry::Vacant(e) = self.transversal.entry(c) {
                    e.insert(ub.mul(s));
                    queue.push(c);
                }
            }
        }
    }
}

pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(n: usize, gens: &[Perm]) -> Self {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain { n, levels: Vec::new() };
        if gens.is_empty() {
            return chain;
        }
        let first = (0..n).find(|&x| gens[0].apply(x) != x).expect("non-identity");
        chain.levels.push(Level::new(first, gens, n));
        chain.complete(0);
        chain
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(lvl.base_point);
            match lvl.transversal.get(&b) {
                Some(u) => h = h.mul(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn add_strong_generator(&mut self, h: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let bp = (0..self.n).find(|&x| h.apply(x) != x).expect("non-identity residue");
            self.levels.push(Level::new(bp, Vec::new(), self.n));
        }
        for lvl in &mut self.levels[from..=to] {
            lvl.gens.push(h.clone());
            lvl.rebuild(self.n);
        }
    }

    fn complete(&mut self, top: usize) {
        let mut i = self.levels.len() as isize - 1;
        while i >= top as isize {
            let iu = i as usize;
            let mut found = None;
            'scan: for (b, ub) in &self.levels[iu].transversal {
                for s in &self.levels[iu].gens {
                    let c = s.apply(*b);
                    let uc = &self.levels[iu].transversal[&c];
                    let schreier = ub.mul(s).mul(&uc.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift(&schreier, iu + 1);
                    if !h.is_identity() {
                        found = Some((h, j));
                        break 'scan;
                    }
                }
            }
            match found {
                Some((h, j)) => {
                    self.add_strong_generator(h, iu + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u128)
            .product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.n && {
            let (h, _) = self.sift(g, 0);
            h.is_identity()
        }
    }
}
