//! The parity invariant `d(G)`, the sign of the Euler characteristic, and the
//! bounded sign classifier.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duality::{local_h2_group, realizability, InvariantFamily, Realizability};
use crate::error::{Error, Result};
use crate::tables::{check_place, forms_at_place, is_census_record, place_class_of};
use crate::types::{
    center_of, BwValue, CartanType, CenterModule, FieldSignature, Family, GlobalDescriptor,
    LBehavior, LocalFormRecord, Place, PlaceClass, PlaceKind, Twist,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroReason {
    ComplexPlace,
    PositiveFundamentalRank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignResult {
    pub sign: Sign,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d_parity: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zero_reason: Option<ZeroReason>,
}

impl SignResult {
    fn zero(reason: ZeroReason) -> Self {
        SignResult {
            sign: Sign::Zero,
            d_parity: None,
            zero_reason: Some(reason),
        }
    }

    fn from_parity(d: u8) -> Self {
        SignResult {
            sign: if d == 0 { Sign::Positive } else { Sign::Negative },
            d_parity: Some(d),
            zero_reason: None,
        }
    }
}

impl GlobalDescriptor {
    /// Checks the descriptor against the census and the field signatures.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDescriptor(m));
        let cartan = self.cartan.canonicalize()?;
        if cartan != self.cartan {
            return bad(format!("type {} is not canonical, use {cartan}", self.cartan));
        }
        if self.k_sig.degree() == 0 {
            return Err(Error::InvalidSignatures("k has degree zero".into()));
        }
        let count = |k: PlaceKind| self.places_in_s.iter().filter(|(p, _)| p.kind == k).count() as u32;
        let (reals, complexes) = (count(PlaceKind::Real), count(PlaceKind::Complex));
        if reals != self.k_sig.real_count || complexes != self.k_sig.complex_count {
            return bad(format!(
                "S must contain every archimedean place: signature ({}, {}) but {reals} real and {complexes} complex entries",
                self.k_sig.real_count, self.k_sig.complex_count
            ));
        }
        for (i, (place, rec)) in self.places_in_s.iter().enumerate() {
            check_place(cartan, place).map_err(|e| match e {
                Error::InvalidDescriptor(m) => Error::InvalidDescriptor(format!("place {i}: {m}")),
                other => other,
            })?;
            if rec.cartan != cartan {
                return bad(format!("place {i}: record is of type {}, descriptor is {cartan}", rec.cartan));
            }
            let mut expect = place_class_of(cartan, place);
            if cartan == CartanType::new(Family::D, 4, Twist::Outer3) && expect == PlaceClass::RealSplit {
                expect = PlaceClass::Real;
            }
            if rec.place_class != expect {
                return bad(format!(
                    "place {i}: record class {:?} does not match place class {expect:?}",
                    rec.place_class
                ));
            }
            if expect != PlaceClass::Complex && cartan.is_triality() && rec.d4_split_count != place.d4_split_count {
                return bad(format!("place {i}: record and place disagree on d4_split_count"));
            }
            if !is_census_record(rec) {
                return Err(Error::UnknownForm(format!("place {i}: {} ({:?})", rec.label, rec.place_class)));
            }
        }
        if let Some(l_sig) = self.l_sig {
            if cartan.twist != Twist::Outer2 {
                return bad("l_sig is only meaningful for outer forms of order two".into());
            }
            let (inner, outer, cx) = archimedean_factor_counts(self.k_sig, l_sig)?;
            let arch = |beh: LBehavior| {
                self.places_in_s
                    .iter()
                    .filter(|(p, _)| p.kind == PlaceKind::Real && p.l_behavior == beh)
                    .count() as u32
            };
            if inner != arch(LBehavior::Split) || outer != arch(LBehavior::Nonsplit) || cx != complexes {
                return bad("l_sig disagrees with the l_behavior of the real places".into());
            }
        }
        Ok(())
    }
}

fn sign_of_entries<'a>(entries: impl IntoIterator<Item = (&'a Place, &'a LocalFormRecord)> + Clone) -> SignResult {
    let mut positive_delta = false;
    for (place, rec) in entries.clone() {
        match place.kind {
            PlaceKind::Complex => return SignResult::zero(ZeroReason::ComplexPlace),
            PlaceKind::Real if rec.has_positive_fundamental_rank() => positive_delta = true,
            _ => {}
        }
    }
    if positive_delta {
        return SignResult::zero(ZeroReason::PositiveFundamentalRank);
    }
    SignResult::from_parity(parity_sum(entries))
}

fn parity_sum<'a>(entries: impl IntoIterator<Item = (&'a Place, &'a LocalFormRecord)>) -> u8 {
    entries
        .into_iter()
        .map(|(place, rec)| match place.kind {
            PlaceKind::Finite => rec.rank % 2,
            _ => (rec.dim_sym.unwrap_or(0) / 2) % 2,
        })
        .fold(0, |a, b| (a + b as u8) % 2)
}

/// `d(G)`: half-dimensions of the real symmetric spaces plus the local ranks
/// at the finite places of `S`, mod 2.
pub fn d_parity(desc: &GlobalDescriptor) -> Result<u8> {
    desc.validate()?;
    for (place, rec) in &desc.places_in_s {
        if place.kind == PlaceKind::Complex {
            return Err(Error::NotApplicable("descriptor has a complex place".into()));
        }
        if place.kind == PlaceKind::Real && rec.has_positive_fundamental_rank() {
            return Err(Error::NotApplicable(format!(
                "real form {} has positive fundamental rank",
                rec.label
            )));
        }
    }
    Ok(parity_sum(desc.places_in_s.iter().map(|(p, r)| (p, r))))
}

/// Sign of the Euler characteristic of the S-arithmetic subgroups.
pub fn sign_chi(desc: &GlobalDescriptor) -> Result<SignResult> {
    desc.validate()?;
    Ok(sign_of_entries(desc.places_in_s.iter().map(|(p, r)| (p, r))))
}

/// `(inner real, outer real, complex)` archimedean factor counts from the
/// signatures `(r, s)` of `k` and `(R, S)` of the quadratic extension `l`.
pub fn archimedean_factor_counts(k_sig: FieldSignature, l_sig: FieldSignature) -> Result<(u32, u32, u32)> {
    let (r, s) = (k_sig.real_count, k_sig.complex_count);
    let (big_r, big_s) = (l_sig.real_count, l_sig.complex_count);
    if big_r + 2 * big_s != 2 * (r + 2 * s) {
        return Err(Error::InvalidSignatures(format!(
            "[l:k] = 2 needs R + 2S = 2(r + 2s), got ({big_r}, {big_s}) over ({r}, {s})"
        )));
    }
    if big_r % 2 != 0 {
        return Err(Error::InvalidSignatures(format!("R = {big_r} must be even")));
    }
    if big_s < 2 * s {
        return Err(Error::InvalidSignatures(format!(
            "each complex place of k lies under two of l, so S >= 2s; got S = {big_s}, s = {s}"
        )));
    }
    Ok((big_r / 2, big_s - 2 * s, s))
}

/// `d(G)` for a `6D4` form over the given finite places of `S`: the number of
/// places splitting into exactly three places of `l`, mod 2.
pub fn d4_sextic_d_parity(nonarch_places: &[Place]) -> Result<u8> {
    let mut d = 0;
    for (i, p) in nonarch_places.iter().enumerate() {
        if p.kind != PlaceKind::Finite {
            return Err(Error::InvalidDescriptor(format!("place {i} is archimedean")));
        }
        match p.d4_split_count {
            None => return Err(Error::MissingD4Data(format!("place {i} has no d4_split_count"))),
            Some(3) => d ^= 1,
            Some(1 | 2 | 6) => {}
            Some(c) => {
                return Err(Error::InvalidDescriptor(format!(
                    "place {i}: d4_split_count {c} is not one of 1, 2, 3, 6"
                )))
            }
        }
    }
    Ok(d)
}

/// Number of finite places of `S` at which the group is an outer form.
pub fn outer_finite_places(desc: &GlobalDescriptor) -> usize {
    desc.places_in_s
        .iter()
        .filter(|(p, _)| p.kind == PlaceKind::Finite && p.l_behavior == LBehavior::Nonsplit)
        .count()
}

// ---------------------------------------------------------------------------
// Classifier

type Choice = (Place, LocalFormRecord);

/// Place shapes of the given kind that the type admits.
fn place_variants(cartan: CartanType, kind: PlaceKind, p: u64) -> Vec<Place> {
    let base = |b: LBehavior| match kind {
        PlaceKind::Real => Place::real(b),
        PlaceKind::Complex => Place::complex(b),
        PlaceKind::Finite => Place::finite(p, b),
    };
    match cartan.twist {
        Twist::Inner => vec![base(LBehavior::NotApplicable)],
        Twist::Outer2 if kind == PlaceKind::Complex => vec![base(LBehavior::Split)],
        Twist::Outer2 => vec![base(LBehavior::Split), base(LBehavior::Nonsplit)],
        tw => {
            let deg = tw.degree() as u8;
            let counts: &[u8] = match (tw, kind) {
                (_, PlaceKind::Complex) => &[deg],
                (Twist::Outer3, PlaceKind::Real) => &[3],
                (Twist::Outer3, _) => &[3, 1],
                (_, PlaceKind::Real) => &[6, 3],
                _ => &[6, 3, 2, 1],
            };
            counts
                .iter()
                .map(|&c| {
                    let b = if c == deg { LBehavior::Split } else { LBehavior::Nonsplit };
                    base(b).with_d4_count(c)
                })
                .collect()
        }
    }
}

fn options(cartan: CartanType, kind: PlaceKind) -> Result<Vec<Choice>> {
    let mut out = Vec::new();
    for place in place_variants(cartan, kind, 2) {
        for rec in forms_at_place(cartan, &place)? {
            out.push((place, rec));
        }
    }
    Ok(out)
}

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Whether the local invariants come from a global class, allowing one extra
/// finite place outside `S` to carry an arbitrary invariant.
fn admissible(center: CenterModule, cartan: CartanType, entries: &[Choice]) -> bool {
    if center == CenterModule::TrialityMu2 {
        return true;
    }
    let family = InvariantFamily::from_pairs(center, entries.iter().map(|(p, r)| (*p, r.bw)));
    let Ok(family) = family else {
        return false;
    };
    match realizability(&family) {
        Ok(Realizability::NotRealizable) => {}
        Ok(_) => return true,
        Err(_) => return false,
    }
    let aux_prime = PRIMES[entries.len().min(PRIMES.len() - 1)];
    place_variants(cartan, PlaceKind::Finite, aux_prime)
        .into_iter()
        .any(|aux| {
            local_h2_group(center, &aux).elements().into_iter().any(|v: BwValue| {
                let mut f = family.clone();
                f.push(aux, v).is_ok() && matches!(realizability(&f), Ok(r) if r.holds())
            })
        })
}

/// Signs attained by descriptors with at most `max_real_places` archimedean
/// places and at most `max_finite_places` finite places in `S`.
pub fn classify(cartan: CartanType, max_real_places: u32, max_finite_places: u32) -> Result<BTreeSet<Sign>> {
    let cartan = cartan.canonicalize()?;
    if max_real_places == 0 {
        return Err(Error::InvalidQuery("at least one archimedean place is required".into()));
    }
    let center = center_of(cartan);
    let real = options(cartan, PlaceKind::Real)?;
    let complex = options(cartan, PlaceKind::Complex)?;
    let finite = options(cartan, PlaceKind::Finite)?;

    let mut shapes = Vec::new();
    for a in 1..=max_real_places as usize {
        for r in 0..=a {
            for f in 0..=max_finite_places as usize {
                shapes.push((r, a - r, f));
            }
        }
    }
    let signs = shapes
        .par_iter()
        .flat_map_iter(|&(r, s, f)| {
            let reals: Vec<_> = real.iter().combinations_with_replacement(r).collect();
            let cxs: Vec<_> = complex.iter().combinations_with_replacement(s).collect();
            let fins: Vec<_> = finite.iter().combinations_with_replacement(f).collect();
            let mut found = BTreeSet::new();
            for (rr, cc, ff) in itertools::iproduct!(&reals, &cxs, &fins) {
                let entries: Vec<Choice> = rr
                    .iter()
                    .chain(cc.iter())
                    .cloned()
                    .cloned()
                    .chain(ff.iter().zip(PRIMES).map(|((p, rec), q)| {
                        let mut p = *p;
                        p.residue_char = Some(q);
                        (p, rec.clone())
                    }))
                    .collect();
                let result = sign_of_entries(entries.iter().map(|(p, r)| (p, r)));
                if found.contains(&result.sign) {
                    continue;
                }
                if admissible(center, cartan, &entries) {
                    found.insert(result.sign);
                }
            }
            found
        })
        .collect::<BTreeSet<_>>();
    Ok(signs)
}
