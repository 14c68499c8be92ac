#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::PathBuf;

use eulersign_core::{GroupFile, PermGroup, Permutation};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn load_group(name: &str) -> PermGroup {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    let file: GroupFile = serde_json::from_str(&text).unwrap();
    PermGroup::from_file(file).unwrap()
}

pub fn load_groups(name: &str) -> Vec<PermGroup> {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    let files: Vec<GroupFile> = serde_json::from_str(&text).unwrap();
    files.into_iter().map(|f| PermGroup::from_file(f).unwrap()).collect()
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// All elements generated by `gens`, by breadth-first closure; `None` once
/// more than `limit` elements have been found.
pub fn brute_closure(degree: usize, gens: &[Vec<u32>], limit: usize) -> Option<HashSet<Vec<u32>>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

fn inverse(a: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// Class id of every element, by conjugating with every element.
pub fn brute_classes(elements: &HashSet<Vec<u32>>) -> HashMap<Vec<u32>, usize> {
    let mut class = HashMap::new();
    let mut next = 0;
    let mut sorted: Vec<_> = elements.iter().cloned().collect();
    sorted.sort();
    for x in &sorted {
        if class.contains_key(x) {
            continue;
        }
        for g in &sorted {
            let c = compose(&compose(&inverse(g), x), g);
            class.insert(c, next);
        }
        next += 1;
    }
    class
}

pub fn brute_class_sizes(elements: &HashSet<Vec<u32>>) -> Vec<u64> {
    let class = brute_classes(elements);
    let mut sizes = vec![0u64; class.values().max().map_or(0, |m| m + 1)];
    for c in class.values() {
        sizes[*c] += 1;
    }
    sizes.sort_unstable();
    sizes
}

pub fn images(p: &Permutation) -> Vec<u32> {
    p.images().to_vec()
}

/// `x` on `Z/6 x Z/6` (point `(i, j)` is `6j + i`): `i -> i + 1` on rows
/// `j < 3`, `i -> i + 2` on rows `j >= 3`. Cycle type `6^3 3^6`.
pub fn witness_x() -> Permutation {
    let v = (0..36u32)
        .map(|p| {
            let (i, j) = (p % 6, p / 6);
            6 * j + (i + if j < 3 { 1 } else { 2 }) % 6
        })
        .collect();
    Permutation::from_images(v).unwrap()
}

/// Row shift `j -> j + 1`.
pub fn witness_y() -> Permutation {
    let v = (0..36u32).map(|p| 6 * ((p / 6 + 1) % 6) + p % 6).collect();
    Permutation::from_images(v).unwrap()
}

/// Sign of `chi(SL_2(Z[1/S]))` from `zeta(-1) * prod (1 - p) = -1/12 * prod (1 - p)`,
/// kept as an exact fraction.
pub fn serre_chi_sl2(primes: &[u64]) -> (i128, i128) {
    let prod: i128 = primes.iter().map(|&p| 1 - p as i128).product();
    (-prod, 12)
}

pub mod families {
    use eulersign_core::{
        is_realizable, local_h2_group, BwValue, CenterModule, InvariantFamily, LBehavior, Place,
    };
    use rand::seq::SliceRandom;
    use rand::Rng;

    const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

    fn is_outer(center: CenterModule) -> bool {
        matches!(
            center,
            CenterModule::NormOneMu { .. } | CenterModule::RestrictedMu2 | CenterModule::TrialityMu2
        )
    }

    pub fn random_place<R: Rng>(center: CenterModule, rng: &mut R) -> Place {
        let outer = is_outer(center);
        let behavior = |rng: &mut R| {
            if !outer {
                LBehavior::NotApplicable
            } else if rng.gen_bool(0.5) {
                LBehavior::Split
            } else {
                LBehavior::Nonsplit
            }
        };
        match rng.gen_range(0..6) {
            0 => Place::real(behavior(rng)),
            1 => Place::complex(if outer { LBehavior::Split } else { LBehavior::NotApplicable }),
            _ => Place::finite(*PRIMES.choose(rng).unwrap(), behavior(rng)),
        }
    }

    /// A uniformly random group element, collapsed to its orbit half the time.
    pub fn random_value<R: Rng>(center: CenterModule, place: &Place, rng: &mut R) -> BwValue {
        let v = *local_h2_group(center, place).elements().choose(rng).unwrap();
        if rng.gen_bool(0.5) {
            v.collapsed()
        } else {
            v
        }
    }

    pub fn random_family<R: Rng>(center: CenterModule, len: usize, rng: &mut R) -> InvariantFamily {
        let pairs: Vec<_> = (0..len)
            .map(|_| {
                let p = random_place(center, rng);
                let v = random_value(center, &p, rng);
                (p, v)
            })
            .collect();
        InvariantFamily::from_pairs(center, pairs).unwrap()
    }

    /// Every value, plain and collapsed, of the local group at `place`.
    pub fn all_values(center: CenterModule, place: &Place) -> Vec<BwValue> {
        let mut out = Vec::new();
        for v in local_h2_group(center, place).elements() {
            out.push(v);
            if v.collapsed() != v {
                out.push(v.collapsed());
            }
        }
        out
    }

    /// A random realizable family on the same places as `template`, found by
    /// adjusting the last coordinate.
    pub fn realizable_like<R: Rng>(template: &InvariantFamily, rng: &mut R) -> Option<InvariantFamily> {
        let center = template.center();
        let places: Vec<Place> = template.profile().per_place.iter().map(|(p, _)| *p).collect();
        let (last, init) = places.split_last()?;
        let head: Vec<(Place, BwValue)> = init.iter().map(|p| (*p, random_value(center, p, rng))).collect();
        let mut tail = all_values(center, last);
        tail.shuffle(rng);
        tail.into_iter().find_map(|v| {
            let mut pairs = head.clone();
            pairs.push((*last, v));
            let f = InvariantFamily::from_pairs(center, pairs).unwrap();
            is_realizable(&f).unwrap().then_some(f)
        })
    }

    /// A place and a value with nontrivial reduction, if the center has any.
    pub fn odd_entry<R: Rng>(center: CenterModule, rng: &mut R) -> Option<(Place, BwValue)> {
        for _ in 0..64 {
            let p = random_place(center, rng);
            let odd: Vec<BwValue> = all_values(center, &p).into_iter().filter(|v| v.reduced() == 1).collect();
            if let Some(v) = odd.choose(rng) {
                return Some((p, *v));
            }
        }
        None
    }
}
