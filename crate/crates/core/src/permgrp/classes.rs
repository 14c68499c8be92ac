use rayon::prelude::*;

use super::{PermGroup, Permutation, Subgroup};
use crate::error::{Error, Result};

/// Default cap on the number of group elements enumerated.
pub const DEFAULT_MAX_ELEMENTS: u64 = 2_000_000;

/// Conjugacy classes of a group, stored as a class id for every element index.
#[derive(Debug, Clone)]
pub struct ClassTable {
    class_of: Vec<u32>,
    /// Smallest element index in each class.
    reps: Vec<u64>,
    sizes: Vec<u64>,
}

/// `s^-1 x s`, without materializing the inverse.
fn conj(x: &Permutation, s: &Permutation) -> Permutation {
    let mut images = vec![0u32; x.degree()];
    for (i, &xi) in x.images().iter().enumerate() {
        images[s.apply(i as u32) as usize] = s.apply(xi);
    }
    Permutation { images }
}

impl ClassTable {
    pub fn new(g: &PermGroup, max_elements: u64) -> Result<Self> {
        let n = g.checked_order(max_elements)?;
        let gens: Vec<_> = g.generators().iter().filter(|s| !s.is_identity()).cloned().collect();
        let mut class_of = vec![u32::MAX; n as usize];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            class_of[start as usize] = id;
            queue.clear();
            queue.push(g.element_at(start));
            let mut size = 1u64;
            while let Some(x) = queue.pop() {
                for s in &gens {
                    let y = conj(&x, s);
                    let iy = g.index_of(&y) as usize;
                    if class_of[iy] == u32::MAX {
                        class_of[iy] = id;
                        size += 1;
                        queue.push(y);
                    }
                }
            }
            reps.push(start);
            sizes.push(size);
        }
        Ok(ClassTable {
            class_of,
            reps,
            sizes,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Class id of an element of the group the table was built for.
    pub fn class_of(&self, g: &PermGroup, x: &Permutation) -> u32 {
        self.class_of[g.index_of(x) as usize]
    }

    pub fn representatives(&self, g: &PermGroup) -> Vec<(Permutation, u64)> {
        self.reps
            .iter()
            .zip(&self.sizes)
            .map(|(&i, &s)| (g.element_at(i), s))
            .collect()
    }

    /// `|H ∩ C|` for every class `C`, in class-id order.
    pub fn intersection_counts(&self, g: &PermGroup, h: &PermGroup, max_elements: u64) -> Result<Vec<u64>> {
        let n = h.checked_order(max_elements)?;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup("subgroup is not contained in the ambient group".into()));
        }
        let k = self.len();
        let counts = (0..n)
            .into_par_iter()
            .fold(
                || vec![0u64; k],
                |mut acc, i| {
                    acc[self.class_of(g, &h.element_at(i)) as usize] += 1;
                    acc
                },
            )
            .reduce(
                || vec![0u64; k],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        Ok(counts)
    }

    /// Whether two subgroups meet every class in equally many elements.
    pub fn gassmann(&self, g: &PermGroup, h1: &PermGroup, h2: &PermGroup, max_elements: u64) -> Result<bool> {
        if h1.order() != h2.order() {
            return Ok(false);
        }
        Ok(self.intersection_counts(g, h1, max_elements)? == self.intersection_counts(g, h2, max_elements)?)
    }
}

/// Conjugacy classes as `(smallest-index representative, size)`.
pub fn conjugacy_classes(g: &PermGroup, max_elements: u64) -> Result<Vec<(Permutation, u64)>> {
    Ok(ClassTable::new(g, max_elements)?.representatives(g))
}

/// Whether some class has at least three 6-cycles and six 3-cycles.
pub fn has_required_class(g: &PermGroup, max_elements: u64) -> Result<bool> {
    if g.degree() < 36 {
        return Ok(false);
    }
    Ok(conjugacy_classes(g, max_elements)?
        .iter()
        .any(|(p, _)| p.cycle_type().contains_required()))
}

fn check_parents(h1: &Subgroup, h2: &Subgroup) -> Result<()> {
    if h1.same_parent(h2) {
        Ok(())
    } else {
        Err(Error::NotSubgroup("subgroups have different parent groups".into()))
    }
}

pub fn gassmann_equivalent(h1: &Subgroup, h2: &Subgroup, max_elements: u64) -> Result<bool> {
    check_parents(h1, h2)?;
    let g = h1.parent();
    let table = ClassTable::new(g, max_elements)?;
    table.gassmann(g, h1.group(), h2.group(), max_elements)
}

/// The first element `x` of `g` (in index order) with `x^-1 H1 x = H2`.
pub fn conjugating_element(
    g: &PermGroup,
    h1: &PermGroup,
    h2: &PermGroup,
    max_elements: u64,
) -> Result<Option<Permutation>> {
    let n = g.checked_order(max_elements)?;
    if h1.order() != h2.order() {
        return Ok(None);
    }
    let gens: Vec<_> = h1.generators().iter().filter(|s| !s.is_identity()).collect();
    Ok((0..n).into_par_iter().find_map_first(|i| {
        let x = g.element_at(i);
        gens.iter().all(|s| h2.contains(&conj(s, &x))).then_some(x)
    }))
}

pub fn are_conjugate_subgroups(h1: &Subgroup, h2: &Subgroup, max_elements: u64) -> Result<bool> {
    check_parents(h1, h2)?;
    Ok(conjugating_element(h1.parent(), h1.group(), h2.group(), max_elements)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn s3_classes() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let mut sizes: Vec<u64> = conjugacy_classes(&s3, 100).unwrap().iter().map(|c| c.1).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let triv = PermGroup::trivial(4).unwrap();
        assert_eq!(conjugacy_classes(&triv, 100).unwrap().len(), 1);
    }

    #[test]
    fn too_large() {
        let s8 = PermGroup::symmetric(8).unwrap();
        assert_eq!(ClassTable::new(&s8, 1000).unwrap_err().kind(), "TooLarge");
    }

    #[test]
    fn s3_subgroup_relations() {
        let s3 = Arc::new(PermGroup::symmetric(3).unwrap());
        let t = Subgroup::new(s3.clone(), vec![perm(&[1, 0, 2])]).unwrap();
        let t2 = Subgroup::new(s3.clone(), vec![perm(&[0, 2, 1])]).unwrap();
        let c3 = Subgroup::new(s3.clone(), vec![perm(&[1, 2, 0])]).unwrap();
        assert!(!gassmann_equivalent(&t, &c3, 100).unwrap());
        assert!(gassmann_equivalent(&t, &t2, 100).unwrap());
        assert!(are_conjugate_subgroups(&t, &t2, 100).unwrap());
        assert!(!are_conjugate_subgroups(&t, &c3, 100).unwrap());
    }

    #[test]
    fn small_groups_lack_required_class() {
        assert!(!has_required_class(&PermGroup::symmetric(3).unwrap(), 100).unwrap());
        assert!(!has_required_class(&PermGroup::trivial(36).unwrap(), 100).unwrap());
    }
}
