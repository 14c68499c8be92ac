//! Permutation groups with a base and strong generating set, conjugacy-class
//! enumeration, and the Gassmann-triple search.

mod classes;
mod search;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classes::{
    are_conjugate_subgroups, conjugacy_classes, conjugating_element, gassmann_equivalent,
    has_required_class, ClassTable, DEFAULT_MAX_ELEMENTS,
};
pub use search::{
    quotient_is_s3, search_candidates, IntermediateReport, PairReport, SearchOptions,
    SearchReport, UnionSource, Verdict,
};

/// A permutation of `{0, .., n-1}`, stored as its image array. Products are
/// read left to right: `a.then(b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidGroup(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                let y = c[(i + 1) % c.len()];
                if x as usize >= degree || y as usize >= degree {
                    return Err(Error::InvalidGroup(format!("cycle {c:?} leaves 0..{degree}")));
                }
                images[x as usize] = y;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut seen = vec![false; self.images.len()];
        let mut lens = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(lens)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::from_images(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Cycle lengths in descending order, fixed points included.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(pub Vec<usize>);

impl CycleType {
    pub fn count(&self, len: usize) -> usize {
        self.0.iter().filter(|&&l| l == len).count()
    }

    /// Multiset containment of at least three 6-cycles and six 3-cycles.
    pub fn contains_required(&self) -> bool {
        self.count(6) >= 3 && self.count(3) >= 6
    }
}

/// One level of the stabilizer chain.
#[derive(Debug, Clone)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// Orbit position of each point, `u32::MAX` outside the orbit.
    pos: Vec<u32>,
    transversal: Vec<Option<Permutation>>,
    inv_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut l = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: Vec::new(),
            transversal: Vec::new(),
            inv_transversal: Vec::new(),
        };
        l.rebuild(degree);
        l
    }

    fn rebuild(&mut self, degree: usize) {
        self.pos = vec![u32::MAX; degree];
        self.transversal = vec![None; degree];
        self.orbit = vec![self.base];
        self.pos[self.base as usize] = 0;
        self.transversal[self.base as usize] = Some(Permutation::identity(degree));
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.gens {
                let q = s.apply(p);
                if self.pos[q as usize] == u32::MAX {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    let u = self.transversal[p as usize].as_ref().unwrap().then(s);
                    self.transversal[q as usize] = Some(u);
                }
            }
            i += 1;
        }
        self.inv_transversal = self
            .transversal
            .iter()
            .map(|t| t.as_ref().map(Permutation::inverse))
            .collect();
    }
}

/// A permutation group together with a stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

/// JSON group file: `{ "degree": n, "generators": [[images], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.contains(g))
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Deterministic Schreier-Sims.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidGroup("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidGroup(format!(
                    "generator {g:?} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let mut grp = PermGroup {
            degree,
            generators,
            levels: Vec::new(),
        };
        grp.schreier_sims();
        Ok(grp)
    }

    pub fn from_file(file: GroupFile) -> Result<Self> {
        Self::new(file.degree, file.generators)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            degree: self.degree,
            generators: self.generators.clone(),
        }
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new(degree, Vec::new())
    }

    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]])?);
            let cyc: Vec<u32> = (0..degree as u32).collect();
            gens.push(Permutation::from_cycles(degree, &[&cyc])?);
        }
        Self::new(degree, gens)
    }

    fn add_base_point_for(&mut self, g: &Permutation) {
        let p = (0..self.degree as u32)
            .find(|&p| g.apply(p) != p)
            .expect("non-identity permutation moves a point");
        self.levels.push(Level::new(p, self.degree));
    }

    fn schreier_sims(&mut self) {
        let gens: Vec<_> = self.generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if self.levels.iter().all(|l| g.apply(l.base) == l.base) {
                self.add_base_point_for(g);
            }
        }
        for g in &gens {
            // A generator belongs to every level up to the first base point it moves.
            for l in &mut self.levels {
                l.gens.push(g.clone());
                if g.apply(l.base) != l.base {
                    break;
                }
            }
        }
        for l in &mut self.levels {
            l.rebuild(self.degree);
        }
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let lvl = i - 1;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &beta in &orbit {
                let u = self.levels[lvl].transversal[beta as usize].clone().unwrap();
                for s in &gens {
                    let img = s.apply(beta);
                    let h = u
                        .then(s)
                        .then(self.levels[lvl].inv_transversal[img as usize].as_ref().unwrap());
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = self.strip_from(h, lvl + 1);
                    if !res.is_identity() {
                        if j == self.levels.len() {
                            self.add_base_point_for(&res);
                        }
                        for l in lvl + 1..=j {
                            self.levels[l].gens.push(res.clone());
                            self.levels[l].rebuild(self.degree);
                        }
                        i = j + 1;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through the chain from `start`; returns the residue and the
    /// level where sifting stopped (`levels.len()` on success).
    fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let b = g.apply(level.base);
            match &level.inv_transversal[b as usize] {
                Some(inv) => g = g.then(inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, j) = self.strip_from(g.clone(), 0);
        j == self.levels.len() && res.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// All strong generators, deduplicated.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Basic orbit lengths along the stabilizer chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// The order if it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Index of an element of the group in `0..order`, from its coordinates
    /// along the stabilizer chain. The element must lie in the group.
    pub fn index_of(&self, g: &Permutation) -> u64 {
        let mut imgs: Vec<u32> = self.levels.iter().map(|l| g.apply(l.base)).collect();
        let mut idx = 0u64;
        let mut mult = 1u64;
        for (l, level) in self.levels.iter().enumerate() {
            let p = imgs[l];
            let pos = level.pos[p as usize];
            debug_assert!(pos != u32::MAX, "element is not in the group");
            idx += pos as u64 * mult;
            mult *= level.orbit.len() as u64;
            let inv = level.inv_transversal[p as usize].as_ref().unwrap();
            for img in imgs.iter_mut().skip(l + 1) {
                *img = inv.apply(*img);
            }
        }
        idx
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element_at(&self, mut idx: u64) -> Permutation {
        let mut coords = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let n = level.orbit.len() as u64;
            coords.push((idx % n) as usize);
            idx /= n;
        }
        let mut g = Permutation::identity(self.degree);
        for (level, &c) in self.levels.iter().zip(&coords).rev() {
            let p = level.orbit[c];
            g = g.then(level.transversal[p as usize].as_ref().unwrap());
        }
        g
    }

    /// Every element, in index order. Refuses groups above `max_elements`.
    pub fn elements(&self, max_elements: u64) -> Result<Vec<Permutation>> {
        let n = self.checked_order(max_elements)?;
        Ok((0..n).map(|i| self.element_at(i)).collect())
    }

    pub(crate) fn checked_order(&self, max_elements: u64) -> Result<u64> {
        match self.order_u64() {
            Some(n) if n <= max_elements => Ok(n),
            _ => Err(Error::TooLarge(format!(
                "group of order {} exceeds the element bound {max_elements}",
                self.order()
            ))),
        }
    }

    /// Stabilizer of `point`, generated by reduced Schreier generators.
    pub fn point_stabilizer(&self, point: u32) -> Result<PermGroup> {
        if point as usize >= self.degree {
            return Err(Error::InvalidGroup(format!("point {point} outside 0..{}", self.degree)));
        }
        let mut trans: Vec<Option<Permutation>> = vec![None; self.degree];
        trans[point as usize] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![point];
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            for s in &self.generators {
                let q = s.apply(p);
                if trans[q as usize].is_none() {
                    trans[q as usize] = Some(trans[p as usize].as_ref().unwrap().then(s));
                    orbit.push(q);
                }
            }
            i += 1;
        }
        let mut stab = PermGroup::trivial(self.degree)?;
        let target = self.order() / BigUint::from(orbit.len());
        for &beta in &orbit {
            for s in &self.generators {
                if stab.order() == target {
                    return Ok(stab);
                }
                let u = trans[beta as usize].as_ref().unwrap();
                let v = trans[s.apply(beta) as usize].as_ref().unwrap();
                let h = u.then(s).then(&v.inverse());
                if !stab.contains(&h) {
                    let mut gens = stab.generators.clone();
                    gens.push(h);
                    stab = PermGroup::new(self.degree, gens)?;
                }
            }
        }
        Ok(stab)
    }

    /// Smallest group containing both.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        for g in &other.generators {
            if !self.contains(g) {
                gens.push(g.clone());
            }
        }
        PermGroup::new(self.degree, gens)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Whether `self` is normalized by every generator of `by`.
    pub fn is_normalized_by(&self, by: &PermGroup) -> bool {
        by.generators
            .iter()
            .all(|u| self.generators.iter().all(|h| self.contains(&h.conjugate_by(u))))
    }
}

/// A subgroup of a fixed parent group.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<PermGroup>,
    group: PermGroup,
}

impl Subgroup {
    pub fn new(parent: Arc<PermGroup>, generators: Vec<Permutation>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if !parent.contains(g) {
                return Err(Error::NotSubgroup(format!("generator {i} is not in the parent group")));
            }
        }
        let group = PermGroup::new(parent.degree(), generators)?;
        Ok(Subgroup { parent, group })
    }

    pub fn from_group(parent: Arc<PermGroup>, group: PermGroup) -> Result<Self> {
        Self::new(parent, group.generators.clone())
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent
    }
}

impl std::ops::Deref for Subgroup {
    type Target = PermGroup;
    fn deref(&self) -> &PermGroup {
        &self.group
    }
}

/// Order as a JSON number when it fits in `u64`, otherwise as a string.
pub(crate) fn order_json(n: &BigUint) -> serde_json::Value {
    match u64::try_from(n) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(n.to_string()),
    }
}
