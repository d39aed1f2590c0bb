//! Permutation groups via a deterministic Schreier–Sims stabilizer chain.
//!
//! Permutations are image vectors: `p[x]` is the image of point `x`, and
//! composition `compose(a, b)` applies `b` first. Everything here is
//! deterministic — base points, orbit expansion and generator processing all
//! follow fixed orders, so group data is reproducible run to run.

use crate::{Error, Result};

pub fn identity(degree: usize) -> Vec<usize> {
    (0..degree).collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// Orbit identifier (least member) per point under a set of permutations.
pub fn point_orbits(degree: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut id: Vec<usize> = (0..degree).collect();
    // Union-find with path halving; union by keeping the smaller root.
    fn find(id: &mut [usize], mut x: usize) -> usize {
        while id[x] != x {
            id[x] = id[id[x]];
            x = id[x];
        }
        x
    }
    for g in gens {
        for x in 0..degree {
            let (a, b) = (find(&mut id, x), find(&mut id, g[x]));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                id[hi] = lo;
            }
        }
    }
    (0..degree).map(|x| find(&mut id, x)).collect()
}

struct Level {
    point: usize,
    /// Generators first deposited at this level. The group acting at level
    /// `i` is generated by the `new_gens` of every level at depth >= i: a
    /// permutation deposited at depth j fixes the base points of all
    /// shallower levels, so it belongs to every stabilizer above it.
    new_gens: Vec<Vec<usize>>,
    /// `transversal[p]` maps the level's base point to `p`.
    transversal: Vec<Option<Vec<usize>>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[point] = Some(identity(degree));
        Level {
            point,
            new_gens: Vec::new(),
            transversal,
            orbit: vec![point],
        }
    }
}

/// A permutation group with a full stabilizer chain.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Vec<usize>>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> PermGroup {
        let mut cleaned: Vec<Vec<usize>> = generators
            .into_iter()
            .filter(|g| !is_identity(g))
            .collect();
        cleaned.sort();
        cleaned.dedup();
        for g in &cleaned {
            assert_eq!(g.len(), degree, "generator degree mismatch");
        }
        let mut group = PermGroup {
            degree,
            generators: cleaned.clone(),
            levels: Vec::new(),
        };
        if !cleaned.is_empty() {
            let point = (0..degree)
                .find(|&x| cleaned.iter().any(|g| g[x] != x))
                .expect("non-identity generators move a point");
            group.levels.push(Level::new(degree, point));
            group.levels[0].new_gens = cleaned;
            group.complete_chain();
        }
        group
    }

    /// Generators of the group acting at `level`: everything deposited at
    /// this depth or deeper.
    fn cumulative_gens(&self, level: usize) -> Vec<Vec<usize>> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.new_gens.iter().cloned())
            .collect()
    }

    fn rebuild_level(&mut self, level: usize) {
        let gens = self.cumulative_gens(level);
        let lvl = &mut self.levels[level];
        lvl.transversal = vec![None; self.degree];
        lvl.transversal[lvl.point] = Some(identity(self.degree));
        lvl.orbit = vec![lvl.point];
        let mut head = 0;
        while head < lvl.orbit.len() {
            let p = lvl.orbit[head];
            head += 1;
            for g in &gens {
                let q = g[p];
                if lvl.transversal[q].is_none() {
                    let rep = compose(g, lvl.transversal[p].as_ref().unwrap());
                    lvl.transversal[q] = Some(rep);
                    lvl.orbit.push(q);
                }
            }
        }
        lvl.orbit.sort_unstable();
    }

    /// Verify the chain bottom-up, Schreier–Sims style: at each level every
    /// Schreier generator must sift to the identity through the deeper
    /// levels. A surviving residue is deposited at the level where its sift
    /// stopped (it fixes every base point above) and verification resumes
    /// there, so all affected levels are re-checked before the loop ends.
    fn complete_chain(&mut self) {
        let mut level = 0usize;
        'outer: loop {
            self.rebuild_level(level);
            let gens = self.cumulative_gens(level);
            let orbit = self.levels[level].orbit.clone();
            for &p in &orbit {
                for s in &gens {
                    let (schreier, _) = {
                        let lvl = &self.levels[level];
                        let rep_p = lvl.transversal[p].as_ref().unwrap();
                        let q = s[p];
                        let rep_q = lvl.transversal[q].as_ref().unwrap();
                        (compose(&invert(rep_q), &compose(s, rep_p)), q)
                    };
                    let (residue, at) = strip_against(&self.levels[level + 1..], &schreier);
                    if is_identity(&residue) {
                        continue;
                    }
                    // The residue fixes the base points of levels
                    // 0..level+at inclusive, so it belongs at this depth.
                    let depth = level + 1 + at;
                    if depth == self.levels.len() {
                        let point = (0..self.degree).find(|&x| residue[x] != x).unwrap();
                        self.levels.push(Level::new(self.degree, point));
                    }
                    self.levels[depth].new_gens.push(residue);
                    level = depth;
                    continue 'outer;
                }
            }
            if level == 0 {
                return;
            }
            level -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    /// Sifts a permutation through the chain; returns the residue and the
    /// level where sifting stopped.
    fn strip(&self, perm: &[usize]) -> (Vec<usize>, usize) {
        let mut h = perm.to_vec();
        for (i, level) in self.levels.iter().enumerate() {
            let image = h[level.point];
            match &level.transversal[image] {
                None => return (h, i),
                Some(rep) => h = compose(&invert(rep), &h),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, perm: &[usize]) -> bool {
        if perm.len() != self.degree {
            return false;
        }
        let (residue, _) = self.strip(perm);
        is_identity(&residue)
    }

    /// Orbits of the whole group on points, as sorted lists.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let ids = point_orbits(self.degree, &self.generators);
        let mut buckets: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &id) in ids.iter().enumerate() {
            buckets.entry(id).or_default().push(x);
        }
        buckets.into_values().collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// All group elements, rejecting groups larger than `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::BadArgument(format!(
                "group of order {order} exceeds the element cap {cap}"
            )));
        }
        let mut out = vec![identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &p in &level.orbit {
                let rep = level.transversal[p].as_ref().unwrap();
                for tail in &out {
                    next.push(compose(rep, tail));
                }
            }
            out = next;
        }
        debug_assert_eq!(out.len() as u128, order);
        Ok(out)
    }
}

fn strip_against(levels: &[Level], perm: &[usize]) -> (Vec<usize>, usize) {
    let mut h = perm.to_vec();
    for (i, level) in levels.iter().enumerate() {
        let image = h[level.point];
        match &level.transversal[image] {
            None => return (h, i),
            Some(rep) => h = compose(&invert(rep), &h),
        }
    }
    (h, levels.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        // a = (0 1), b = (1 2); a∘b sends 2 -> 1 -> 0? No: b(2)=1, a(1)=0.
        let a = vec![1, 0, 2];
        let b = vec![0, 2, 1];
        assert_eq!(compose(&a, &b), vec![1, 2, 0]);
        assert_eq!(compose(&invert(&a), &a), identity(3));
    }

    #[test]
    fn symmetric_group_order() {
        let transposition = vec![1, 0, 2, 3];
        let cycle = vec![1, 2, 3, 0];
        let g = PermGroup::new(4, vec![transposition.clone(), cycle]);
        assert_eq!(g.order(), 24);
        assert!(g.is_transitive());
        assert!(g.contains(&transposition));
        assert!(g.contains(&vec![3, 2, 1, 0]));
        let elements = g.elements(100).unwrap();
        assert_eq!(elements.len(), 24);
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
    }

    #[test]
    fn dihedral_and_cyclic() {
        let rot = vec![1, 2, 3, 4, 5, 0];
        let refl = vec![0, 5, 4, 3, 2, 1];
        assert_eq!(PermGroup::new(6, vec![rot.clone()]).order(), 6);
        let d6 = PermGroup::new(6, vec![rot, refl]);
        assert_eq!(d6.order(), 12);
        assert!(!d6.contains(&vec![1, 0, 2, 3, 4, 5]));
    }

    #[test]
    fn intransitive_orbits() {
        // Swap within {0,1} and a 3-cycle on {2,3,4}.
        let a = vec![1, 0, 2, 3, 4];
        let b = vec![0, 1, 3, 4, 2];
        let g = PermGroup::new(5, vec![a, b]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(!g.is_transitive());
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(4, vec![identity(4)]);
        assert_eq!(g.order(), 1);
        assert_eq!(g.orbits().len(), 4);
        assert_eq!(g.elements(10).unwrap(), vec![identity(4)]);
    }

    #[test]
    fn element_cap_guard() {
        let transposition = vec![1, 0, 2, 3];
        let cycle = vec![1, 2, 3, 0];
        let g = PermGroup::new(4, vec![transposition, cycle]);
        assert!(g.elements(10).is_err());
    }

    #[test]
    fn klein_four_inside_s4() {
        let a = vec![1, 0, 3, 2];
        let b = vec![2, 3, 0, 1];
        let g = PermGroup::new(4, vec![a, b]);
        assert_eq!(g.order(), 4);
        assert!(g.is_transitive());
        // Every non-identity element is an involution.
        for e in g.elements(10).unwrap() {
            assert!(is_identity(&compose(&e, &e)));
        }
    }
}
