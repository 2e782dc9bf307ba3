//! Deterministic Schreier–Sims.

use num_bigint::BigUint;
use num_traits::One;

use super::Permutation;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps `point` to `b`, for `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, gens: Vec<Permutation>, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens,
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit.clear();
        self.orbit.push(self.point);
        let mut next = 0;
        while next < self.orbit.len() {
            let beta = self.orbit[next];
            next += 1;
            for s in &self.gens {
                let image = s.apply(beta);
                if self.transversal[image].is_none() {
                    let u = self.transversal[beta].as_ref().unwrap().then(s);
                    self.transversal[image] = Some(u);
                    self.orbit.push(image);
                }
            }
        }
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    /// Builds the stabiliser chain, choosing base points as the smallest point moved
    /// by a generator not yet accounted for.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_base(degree, generators, &[])
    }

    /// Like [`from_generators`](Self::from_generators) but starts from a
    /// caller-supplied base prefix, which is extended as needed.
    pub fn with_base(degree: usize, generators: Vec<Permutation>, base: &[usize]) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let mut strong: Vec<Permutation> = Vec::new();
        for g in &generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut points: Vec<usize> = Vec::new();
        for &b in base {
            if b < degree && !points.contains(&b) {
                points.push(b);
            }
        }
        for g in &strong {
            if points.iter().all(|&b| g.apply(b) == b) {
                points.push(g.first_moved_point().unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(points.len());
        for (i, &point) in points.iter().enumerate() {
            let gens = strong
                .iter()
                .filter(|g| points[..i].iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            levels.push(Level::new(point, gens, degree));
        }
        let mut group = PermGroup {
            degree,
            generators,
            levels,
            order: BigUint::one(),
        };
        group.complete();
        group.levels.retain(|l| l.orbit.len() > 1);
        group.order = group
            .levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        Ok(group)
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let level = i as usize;
            let orbit = self.levels[level].orbit.clone();
            let gens = self.levels[level].gens.clone();
            for &beta in &orbit {
                let u_beta = self.levels[level].transversal[beta].clone().unwrap();
                for s in &gens {
                    let image = s.apply(beta);
                    let u_image = self.levels[level].transversal[image].as_ref().unwrap();
                    let h = u_beta.then(s).then(&u_image.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, stop) = self.strip(h, level + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if stop == self.levels.len() {
                        let point = residue.first_moved_point().unwrap();
                        self.levels.push(Level::new(point, Vec::new(), self.degree));
                    }
                    for l in level + 1..=stop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit();
                    }
                    i = stop as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through the levels starting at `start`; returns the residue and the
    /// level where sifting stopped (`levels.len()` when it passed them all).
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.point);
            match &level.transversal[beta] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, l),
            }
        }
        let len = self.levels.len();
        (g, len)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Orbit lengths along the stabiliser chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: p.degree(),
            });
        }
        let (residue, _) = self.strip(p.clone(), 0);
        Ok(residue.is_identity())
    }
}

/// Exact order of the group generated by `generators` on `degree` points.
pub fn group_order(degree: usize, generators: Vec<Permutation>) -> Result<BigUint> {
    Ok(PermGroup::from_generators(degree, generators)?
        .order()
        .clone())
}
