//! Local-global realizability of Brauer-Witt invariant families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{BwValue, CenterModule, H2Group, LBehavior, Place, PlaceKind};

/// `H^2(k_v, Z)` for the center `Z` at the place `v`.
pub fn local_h2_group(center: CenterModule, place: &Place) -> H2Group {
    use H2Group::*;
    if place.kind == PlaceKind::Complex {
        return Cyclic(1);
    }
    let split = place.l_behavior == LBehavior::Split;
    let finite = place.kind == PlaceKind::Finite;
    let two_if = |even: bool| if even { Cyclic(2) } else { Cyclic(1) };
    match center {
        CenterModule::Trivial => Cyclic(1),
        CenterModule::Mu2 => Cyclic(2),
        CenterModule::Mu2xMu2 => Pair,
        CenterModule::MuN { n } => {
            if finite {
                Cyclic(n)
            } else {
                two_if(n % 2 == 0)
            }
        }
        CenterModule::NormOneMu { order } => {
            if finite && split {
                Cyclic(order)
            } else {
                two_if(order % 2 == 0)
            }
        }
        CenterModule::RestrictedMu2 => {
            if split {
                Pair
            } else {
                two_if(finite)
            }
        }
        CenterModule::TrialityMu2 => {
            if split {
                Pair
            } else {
                two_if(finite && place.d4_split_count == Some(3))
            }
        }
    }
}

/// The local groups at the places of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalH2Profile {
    pub center: CenterModule,
    pub per_place: Vec<(Place, H2Group)>,
}

impl LocalH2Profile {
    /// Profile with every group taken from [`local_h2_group`].
    pub fn new(center: CenterModule, places: impl IntoIterator<Item = Place>) -> Self {
        let per_place = places
            .into_iter()
            .map(|p| (p, local_h2_group(center, &p)))
            .collect();
        LocalH2Profile { center, per_place }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, (place, group)) in self.per_place.iter().enumerate() {
            let expect = local_h2_group(self.center, place);
            if expect != *group {
                return Err(Error::InvalidFamily(format!(
                    "place {i}: group {group:?} does not match {expect:?} for center {:?}",
                    self.center
                )));
            }
        }
        Ok(())
    }
}

/// Local invariants at finitely many places; every other place carries zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyWire", into = "FamilyWire")]
pub struct InvariantFamily {
    profile: LocalH2Profile,
    values: Vec<BwValue>,
}

impl InvariantFamily {
    pub fn new(profile: LocalH2Profile, values: Vec<BwValue>) -> Result<Self> {
        profile.validate()?;
        if profile.per_place.len() != values.len() {
            return Err(Error::InvalidFamily(format!(
                "{} places but {} values",
                profile.per_place.len(),
                values.len()
            )));
        }
        for (i, ((_, g), v)) in profile.per_place.iter().zip(&values).enumerate() {
            if v.group() != *g {
                return Err(Error::InvalidFamily(format!(
                    "place {i}: value lives in {:?}, expected {g:?}",
                    v.group()
                )));
            }
        }
        Ok(InvariantFamily { profile, values })
    }

    /// Family over one center from `(place, value)` pairs.
    pub fn from_pairs(center: CenterModule, pairs: impl IntoIterator<Item = (Place, BwValue)>) -> Result<Self> {
        let (places, values): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        Self::new(LocalH2Profile::new(center, places), values)
    }

    pub fn empty(center: CenterModule) -> Self {
        InvariantFamily {
            profile: LocalH2Profile {
                center,
                per_place: Vec::new(),
            },
            values: Vec::new(),
        }
    }

    pub fn center(&self) -> CenterModule {
        self.profile.center
    }

    pub fn profile(&self) -> &LocalH2Profile {
        &self.profile
    }

    pub fn values(&self) -> &[BwValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn push(&mut self, place: Place, value: BwValue) -> Result<()> {
        let g = local_h2_group(self.profile.center, &place);
        if value.group() != g {
            return Err(Error::InvalidFamily(format!(
                "value lives in {:?}, expected {g:?}",
                value.group()
            )));
        }
        self.profile.per_place.push((place, g));
        self.values.push(value);
        Ok(())
    }

    /// Pointwise sum over a common profile.
    pub fn add(&self, other: &InvariantFamily) -> Result<InvariantFamily> {
        if self.profile != other.profile {
            return Err(Error::InvalidFamily("families have different profiles".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(InvariantFamily {
            profile: self.profile.clone(),
            values,
        })
    }

    pub fn neg(&self) -> InvariantFamily {
        InvariantFamily {
            profile: self.profile.clone(),
            values: self.values.iter().map(BwValue::neg).collect(),
        }
    }
}

/// Sum of the `Z/2`-reductions of all coordinates.
pub fn reduced_sum(family: &InvariantFamily) -> u8 {
    family.values.iter().fold(0, |acc, v| acc ^ v.reduced())
}

/// Outcome of a realizability query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Realizability {
    Realizable,
    NotRealizable,
    /// The local groups carry no global constraint (odd-order center).
    Vacuous,
}

impl Realizability {
    pub fn holds(self) -> bool {
        self != Realizability::NotRealizable
    }
}

/// Decides whether the family is the localization of a global class.
pub fn realizability(family: &InvariantFamily) -> Result<Realizability> {
    let from_bool = |b: bool| {
        if b {
            Realizability::Realizable
        } else {
            Realizability::NotRealizable
        }
    };
    match family.center() {
        CenterModule::Trivial => Ok(Realizability::Vacuous),
        CenterModule::MuN { n } if n % 2 == 1 => Ok(Realizability::Vacuous),
        CenterModule::NormOneMu { order } if order % 2 == 1 => Ok(Realizability::Vacuous),
        CenterModule::MuN { n } => Ok(from_bool(signed_sum_vanishes(family, n))),
        CenterModule::Mu2
        | CenterModule::Mu2xMu2
        | CenterModule::NormOneMu { .. }
        | CenterModule::RestrictedMu2 => Ok(from_bool(reduced_sum(family) == 0)),
        CenterModule::TrialityMu2 => Err(Error::UnsupportedCenter(
            "no sum rule is known for trialitarian centers".into(),
        )),
    }
}

/// Boolean form of [`realizability`]; vacuous cases count as realizable and
/// log a warning.
pub fn is_realizable(family: &InvariantFamily) -> Result<bool> {
    let r = realizability(family)?;
    if r == Realizability::Vacuous {
        log::warn!(
            "center {:?} imposes no global constraint; realizability is vacuous",
            family.center()
        );
    }
    Ok(r.holds())
}

/// For `mu_n` with `n` even: the invariants embed in `Q/Z` (a real value `v`
/// as `v * n/2` in `Z/n`) and must sum to zero for some choice of orbit
/// representative at each collapsed coordinate.
fn signed_sum_vanishes(family: &InvariantFamily, n: u32) -> bool {
    let n = n as usize;
    let mut reach = vec![false; n];
    reach[0] = true;
    for (v, (place, _)) in family.values.iter().zip(&family.profile.per_place) {
        let BwValue::Cyclic { order, value, .. } = *v else {
            return false;
        };
        let scale = n / order as usize;
        let x = value as usize * scale % n;
        let choices: Vec<usize> = if v.is_orbit_collapsed() && place.kind == PlaceKind::Finite {
            vec![x, (n - x) % n]
        } else {
            vec![x]
        };
        let mut next = vec![false; n];
        for (s, _) in reach.iter().enumerate().filter(|(_, r)| **r) {
            for c in &choices {
                next[(s + c) % n] = true;
            }
        }
        reach = next;
    }
    reach[0]
}

/// Number of global classes mapping to a family once the coordinate at
/// `omitted_place` is forgotten.
pub fn fiber_count(profile: &LocalH2Profile, omitted_place: &Place) -> Result<u32> {
    match profile.center {
        CenterModule::NormOneMu { order } if order % 2 == 0 => {
            Ok(if omitted_place.l_behavior == LBehavior::Split {
                order / 2
            } else {
                1
            })
        }
        c => Err(Error::UnsupportedCenter(format!(
            "fiber count is defined for norm-one tori of even order, got {c:?}"
        ))),
    }
}

/// Whether two families over the same kind of center have equal reduced sums.
pub fn mod2_sum_equal(f1: &InvariantFamily, f2: &InvariantFamily) -> Result<bool> {
    for f in [f1, f2] {
        if f.center() == CenterModule::TrialityMu2 {
            return Err(Error::UnsupportedCenter(
                "no sum rule is known for trialitarian centers".into(),
            ));
        }
    }
    if f1.center() != f2.center() {
        return Err(Error::InvalidFamily(format!(
            "centers differ: {:?} vs {:?}",
            f1.center(),
            f2.center()
        )));
    }
    Ok(reduced_sum(f1) == reduced_sum(f2))
}

#[derive(Serialize, Deserialize)]
struct FamilyWire {
    center: CenterModule,
    places: Vec<EntryWire>,
}

#[derive(Serialize, Deserialize)]
struct EntryWire {
    #[serde(flatten)]
    place: Place,
    group: H2Group,
    value: ValueWire,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    orbit_collapsed: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ValueWire {
    Cyclic(u32),
    Pair([u8; 2]),
}

impl From<InvariantFamily> for FamilyWire {
    fn from(f: InvariantFamily) -> Self {
        let places = f
            .profile
            .per_place
            .iter()
            .zip(&f.values)
            .map(|((place, group), v)| EntryWire {
                place: *place,
                group: *group,
                value: match *v {
                    BwValue::Cyclic { value, .. } => ValueWire::Cyclic(value),
                    BwValue::Pair { a, b, .. } => ValueWire::Pair([a, b]),
                },
                orbit_collapsed: v.is_orbit_collapsed(),
            })
            .collect();
        FamilyWire {
            center: f.profile.center,
            places,
        }
    }
}

impl TryFrom<FamilyWire> for InvariantFamily {
    type Error = Error;

    fn try_from(w: FamilyWire) -> Result<Self> {
        let mut per_place = Vec::new();
        let mut values = Vec::new();
        for (i, e) in w.places.into_iter().enumerate() {
            let v = match (e.group, e.value) {
                (H2Group::Cyclic(m), ValueWire::Cyclic(x)) if m >= 1 && x < m => BwValue::cyclic(m, x),
                (H2Group::Pair, ValueWire::Pair([a, b])) if a <= 1 && b <= 1 => BwValue::pair(a, b),
                _ => {
                    return Err(Error::InvalidFamily(format!(
                        "place {i}: value does not lie in its group"
                    )))
                }
            };
            per_place.push((e.place, e.group));
            values.push(if e.orbit_collapsed { v.collapsed() } else { v });
        }
        InvariantFamily::new(
            LocalH2Profile {
                center: w.center,
                per_place,
            },
            values,
        )
    }
}
