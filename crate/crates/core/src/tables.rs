//! Census of local forms: real Lie groups and p-adic Tits indices for every
//! Cartan-Killing type, with ranks, symmetric-space data and Brauer-Witt
//! values.
//!
//! Real symmetric-space dimensions and fundamental ranks are derived from the
//! data of a maximal compact subgroup `K`: `dim X = dim g - dim K` and
//! `delta = rank g - rank K`.

use serde::{Deserialize, Serialize};

use crate::duality::local_h2_group;
use crate::error::{Error, Result};
use crate::types::{
    center_of, BwValue, CartanType, Family, LBehavior, LocalFormRecord, Place, PlaceClass,
    PlaceKind, Twist,
};

/// A slice of the census: one `(type, place class, decomposition count)` key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceMeta {
    pub cartan: CartanType,
    pub place_class: PlaceClass,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d4_split_count: Option<u8>,
    /// The sign argument for this type counts outer places instead of using
    /// the Brauer-Witt invariant to pin down rank parity.
    pub parity_exempt: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTable {
    pub entries: Vec<LocalFormRecord>,
    pub slices: Vec<SliceMeta>,
}

impl FormTable {
    pub fn slice(
        &self,
        cartan: CartanType,
        class: PlaceClass,
        count: Option<u8>,
    ) -> impl Iterator<Item = &LocalFormRecord> {
        self.entries.iter().filter(move |r| {
            r.cartan == cartan && r.place_class == class && r.d4_split_count == count
        })
    }
}

const TITS_NOTE: &str = "absolute ranks derived from Tits 1966";

/// Census for every canonical type of rank at most `max_rank`.
pub fn census(max_rank: u32) -> FormTable {
    let mut entries = Vec::new();
    let mut slices = Vec::new();
    for c in CartanType::all_up_to(max_rank) {
        let recs = forms_for(c);
        let exempt = parity_exempt(c);
        for r in &recs {
            let key = (r.place_class, r.d4_split_count);
            if !slices
                .iter()
                .any(|s: &SliceMeta| s.cartan == c && (s.place_class, s.d4_split_count) == key)
            {
                let note = match (c.family, r.place_class) {
                    (Family::D, PlaceClass::PadicSplit | PlaceClass::PadicNonsplit)
                    | (Family::E, PlaceClass::PadicSplit) => Some(TITS_NOTE.to_string()),
                    _ => None,
                };
                slices.push(SliceMeta {
                    cartan: c,
                    place_class: r.place_class,
                    d4_split_count: r.d4_split_count,
                    parity_exempt: exempt,
                    note,
                });
            }
        }
        entries.extend(recs);
    }
    FormTable { entries, slices }
}

fn parity_exempt(c: CartanType) -> bool {
    let n = c.rank;
    match (c.family, c.twist) {
        (Family::A, Twist::Outer2) => n.is_multiple_of(2) && (n / 2) % 2 == 1,
        (Family::D, Twist::Outer2) => n.is_multiple_of(2) && (n / 2).is_multiple_of(2),
        (Family::D, Twist::Inner) => n.is_multiple_of(2) && (n / 2).is_multiple_of(2),
        (Family::D, Twist::Outer6) => true,
        (Family::C, _) => n % 4 == 3,
        _ => false,
    }
}

/// Real forms of the type: the forms at real places where the twist is
/// visible. For `3D4`, whose real places always split, these are the inner
/// forms.
pub fn real_forms(cartan: CartanType) -> Result<Vec<LocalFormRecord>> {
    let cartan = cartan.canonicalize()?;
    let all = forms_for(cartan);
    let pick = |class| -> Vec<LocalFormRecord> {
        all.iter().filter(|r| r.place_class == class).cloned().collect()
    };
    let real = pick(PlaceClass::Real);
    Ok(if real.is_empty() {
        pick(PlaceClass::RealSplit)
    } else {
        real
    })
}

/// p-adic forms at a place with the given behavior in `l`. For triality types
/// the nonsplit answer merges every decomposition count.
pub fn padic_forms(cartan: CartanType, l_behavior: LBehavior) -> Result<Vec<LocalFormRecord>> {
    let cartan = cartan.canonicalize()?;
    let class = match (cartan.is_inner(), l_behavior) {
        (true, LBehavior::Split | LBehavior::NotApplicable) => PlaceClass::PadicSplit,
        (true, LBehavior::Nonsplit) => {
            return Err(Error::InvalidQuery(format!(
                "inner type {cartan} has no nonsplit places"
            )))
        }
        (false, LBehavior::Split) => PlaceClass::PadicSplit,
        (false, LBehavior::Nonsplit) => PlaceClass::PadicNonsplit,
        (false, LBehavior::NotApplicable) => {
            return Err(Error::InvalidQuery(format!(
                "outer type {cartan} needs a split or nonsplit behavior"
            )))
        }
    };
    Ok(forms_for(cartan)
        .into_iter()
        .filter(|r| r.place_class == class)
        .collect())
}

/// Place class of the census slice that applies at `place`.
pub fn place_class_of(cartan: CartanType, place: &Place) -> PlaceClass {
    let split = cartan.is_inner() || place.l_behavior != LBehavior::Nonsplit;
    match (place.kind, split) {
        (PlaceKind::Complex, _) => PlaceClass::Complex,
        (PlaceKind::Real, true) if cartan.is_inner() => PlaceClass::Real,
        (PlaceKind::Real, true) => PlaceClass::RealSplit,
        (PlaceKind::Real, false) => PlaceClass::Real,
        (PlaceKind::Finite, true) => PlaceClass::PadicSplit,
        (PlaceKind::Finite, false) => PlaceClass::PadicNonsplit,
    }
}

/// Forms that can occur at a given place. Validates the place against the
/// type (l-behavior, decomposition count).
pub fn forms_at_place(cartan: CartanType, place: &Place) -> Result<Vec<LocalFormRecord>> {
    let cartan = cartan.canonicalize()?;
    check_place(cartan, place)?;
    let class = place_class_of(cartan, place);
    let count = if cartan.is_triality() {
        place.d4_split_count
    } else {
        None
    };
    if cartan == CartanType::new(Family::D, 4, Twist::Outer3) && class == PlaceClass::RealSplit {
        // 3D4 keeps its real forms in the real slice.
        return Ok(forms_for(cartan)
            .into_iter()
            .filter(|r| r.place_class == PlaceClass::Real)
            .collect());
    }
    Ok(forms_for(cartan)
        .into_iter()
        .filter(|r| r.place_class == class && (class == PlaceClass::Complex || r.d4_split_count == count))
        .collect())
}

/// Checks the l-behavior and decomposition data of a place for a type.
pub fn check_place(cartan: CartanType, place: &Place) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidDescriptor(msg));
    match place.kind {
        PlaceKind::Finite => match place.residue_char {
            Some(p) if is_prime(p) => {}
            other => return bad(format!("finite place needs a prime residue characteristic, got {other:?}")),
        },
        _ => {
            if place.residue_char.is_some() {
                return bad("archimedean places carry no residue characteristic".into());
            }
        }
    }
    if cartan.is_inner() {
        if place.l_behavior != LBehavior::NotApplicable {
            return bad(format!("inner type {cartan} requires l_behavior not_applicable"));
        }
        if place.d4_split_count.is_some() {
            return bad(format!("d4_split_count given for non-triality type {cartan}"));
        }
        return Ok(());
    }
    if place.l_behavior == LBehavior::NotApplicable {
        return bad(format!("outer type {cartan} requires split or nonsplit l_behavior"));
    }
    if place.kind == PlaceKind::Complex && place.l_behavior != LBehavior::Split {
        return bad("complex places split in every extension".into());
    }
    if !cartan.is_triality() {
        if place.d4_split_count.is_some() {
            return bad(format!("d4_split_count given for non-triality type {cartan}"));
        }
        return Ok(());
    }
    let deg = cartan.twist.degree() as u8;
    let Some(count) = place.d4_split_count else {
        return Err(Error::MissingD4Data(format!("place of a {cartan} descriptor lacks d4_split_count")));
    };
    let allowed: &[u8] = match (cartan.twist, place.kind) {
        (Twist::Outer3, PlaceKind::Complex) => &[3],
        (_, PlaceKind::Complex) => &[6],
        (Twist::Outer3, PlaceKind::Real) => &[3],
        (Twist::Outer3, PlaceKind::Finite) => &[1, 3],
        (_, PlaceKind::Real) => &[3, 6],
        _ => &[1, 2, 3, 6],
    };
    if !allowed.contains(&count) {
        return bad(format!("d4_split_count {count} impossible at this place for {cartan}"));
    }
    let split = count == deg || place.kind == PlaceKind::Complex;
    if split != (place.l_behavior == LBehavior::Split) {
        return bad(format!(
            "l_behavior {:?} inconsistent with d4_split_count {count}",
            place.l_behavior
        ));
    }
    Ok(())
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The stored Brauer-Witt value of a census record.
pub fn lookup_bw(record: &LocalFormRecord) -> Result<BwValue> {
    let cartan = record.cartan.canonicalize()?;
    forms_for(cartan)
        .into_iter()
        .find(|r| {
            r.place_class == record.place_class
                && r.label == record.label
                && r.d4_split_count == record.d4_split_count
                && r.rank == record.rank
        })
        .map(|r| r.bw)
        .ok_or_else(|| {
            Error::UnknownForm(format!(
                "{} ({:?}) of {}",
                record.label, record.place_class, record.cartan
            ))
        })
}

/// Whether `record` is exactly a census row (bw included).
pub fn is_census_record(record: &LocalFormRecord) -> bool {
    record
        .cartan
        .canonicalize()
        .map(|c| forms_for(c).iter().any(|r| r == record))
        .unwrap_or(false)
}

/// A place at which the record's slice applies; used to look up its H^2 group.
pub fn representative_place(record: &LocalFormRecord) -> Place {
    let beh = |split: bool| {
        if record.cartan.is_inner() {
            LBehavior::NotApplicable
        } else if split {
            LBehavior::Split
        } else {
            LBehavior::Nonsplit
        }
    };
    let mut place = match record.place_class {
        PlaceClass::Real => {
            let split = record.cartan == CartanType::new(Family::D, 4, Twist::Outer3);
            Place::real(beh(split))
        }
        PlaceClass::RealSplit => Place::real(beh(true)),
        PlaceClass::Complex => Place::complex(if record.cartan.is_inner() {
            LBehavior::NotApplicable
        } else {
            LBehavior::Split
        }),
        PlaceClass::PadicSplit => Place::finite(2, beh(true)),
        PlaceClass::PadicNonsplit => Place::finite(2, beh(false)),
    };
    if record.cartan.is_triality() {
        place.d4_split_count = record
            .d4_split_count
            .or(Some(record.cartan.twist.degree() as u8));
    }
    place
}

// ---------------------------------------------------------------------------
// Construction

struct Ctx {
    cartan: CartanType,
}

impl Ctx {
    /// Real form from its maximal compact subgroup data.
    fn real(
        &self,
        class: PlaceClass,
        label: impl Into<String>,
        real_rank: u32,
        k_dim: u32,
        k_rank: u32,
        bw: BwValue,
    ) -> LocalFormRecord {
        let g = self.cartan.lie_algebra_dim();
        LocalFormRecord {
            cartan: self.cartan,
            place_class: class,
            label: label.into(),
            rank: real_rank,
            dim_sym: Some(g - k_dim),
            fundamental_rank: Some(self.cartan.rank - k_rank),
            bw,
            d4_split_count: None,
        }
    }

    fn padic(&self, class: PlaceClass, label: impl Into<String>, rank: u32, bw: BwValue) -> LocalFormRecord {
        LocalFormRecord {
            cartan: self.cartan,
            place_class: class,
            label: label.into(),
            rank,
            dim_sym: None,
            fundamental_rank: None,
            bw,
            d4_split_count: None,
        }
    }

    fn complex(&self) -> LocalFormRecord {
        let g = self.cartan.lie_algebra_dim();
        LocalFormRecord {
            cartan: self.cartan,
            place_class: PlaceClass::Complex,
            label: "complex".into(),
            rank: self.cartan.rank,
            dim_sym: Some(g),
            fundamental_rank: Some(self.cartan.rank),
            bw: BwValue::cyclic(1, 0),
            d4_split_count: None,
        }
    }
}

fn cyc(m: u32, x: u32) -> BwValue {
    BwValue::cyclic(m, x)
}

/// Order-2 real H^2 group value: `Z/2` when `even`, trivial otherwise.
fn z2_if(even: bool, x: u32) -> BwValue {
    if even {
        cyc(2, x)
    } else {
        cyc(1, 0)
    }
}

fn so_dim(p: u32) -> u32 {
    p * p.saturating_sub(1) / 2
}

/// Every census row of a canonical type, all place classes.
pub(crate) fn forms_for(c: CartanType) -> Vec<LocalFormRecord> {
    let mut out = match (c.family, c.twist) {
        (Family::A, Twist::Inner) => inner_a(c),
        (Family::A, _) => outer_a(c),
        (Family::B, _) => type_b(c),
        (Family::C, _) => type_c(c),
        (Family::D, Twist::Inner) => inner_d(c),
        (Family::D, Twist::Outer2) => outer2_d(c),
        (Family::D, _) => triality_d4(c),
        (Family::E, _) if c.rank == 6 => type_e6(c),
        (Family::E, _) if c.rank == 7 => type_e7(c),
        _ => type_e8_f4_g2(c),
    };
    out.push(Ctx { cartan: c }.complex());
    out
}

fn retag(recs: Vec<LocalFormRecord>, cartan: CartanType, class: PlaceClass, count: Option<u8>) -> Vec<LocalFormRecord> {
    recs.into_iter()
        .map(|mut r| {
            r.cartan = cartan;
            r.place_class = class;
            r.d4_split_count = count;
            r
        })
        .collect()
}

fn inner_real_a(n: u32) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: CartanType::inner(Family::A, n) };
    let m = n + 1;
    let even = m.is_multiple_of(2);
    let mut v = vec![x.real(
        PlaceClass::Real,
        format!("SL_{m}(R)"),
        n,
        so_dim(m),
        m / 2,
        z2_if(even, 0),
    )];
    if even {
        let h = m / 2;
        let label = if n == 1 { "SU(2)".to_string() } else { format!("SU*({m})") };
        v.push(x.real(PlaceClass::Real, label, h - 1, h * (2 * h + 1), h, cyc(2, 1)));
    }
    v
}

/// `SL_{m/d}(D_d)` for every Schur index `d | m`, values in `Z/m`.
fn schur_forms(x: &Ctx, m: u32) -> Vec<LocalFormRecord> {
    (1..=m)
        .filter(|d| m.is_multiple_of(*d))
        .map(|d| {
            let r = m / d;
            x.padic(
                PlaceClass::PadicSplit,
                format!("SL_{r}(D_{d})"),
                r - 1,
                cyc(m, r % m).collapsed(),
            )
        })
        .collect()
}

fn inner_a(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let mut v = inner_real_a(c.rank);
    v.extend(schur_forms(&x, c.rank + 1));
    v
}

fn outer_a(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let n = c.rank;
    let m = n + 1;
    let even = m.is_multiple_of(2);
    let mut v = Vec::new();
    for q in 0..=m / 2 {
        let p = m - q;
        let k_dim = p * p + q * q - 1;
        v.push(x.real(PlaceClass::Real, format!("SU({p},{q})"), q, k_dim, n, z2_if(even, p % 2)));
    }
    v.extend(retag(inner_real_a(n), c, PlaceClass::RealSplit, None));
    v.extend(schur_forms(&x, m));
    let h = m / 2;
    if even {
        v.push(x.padic(PlaceClass::PadicNonsplit, "quasi-split", h, cyc(2, 0)));
        v.push(x.padic(PlaceClass::PadicNonsplit, "non-quasi-split", h - 1, cyc(2, 1)));
    } else {
        v.push(x.padic(PlaceClass::PadicNonsplit, "quasi-split", h, cyc(1, 0)));
    }
    v
}

fn type_b(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let n = c.rank;
    let mut v = Vec::new();
    // One representative per isomorphism class: the signature (2n+1-p, p)
    // with p = n mod 2.
    for p in (0..=2 * n + 1).filter(|p| p % 2 == n % 2) {
        let q = 2 * n + 1 - p;
        let bw = ((p * p.saturating_sub(1)) as i64 - (n * (n - 1)) as i64) / 2;
        let (hi, lo) = (p.max(q), p.min(q));
        v.push(x.real(
            PlaceClass::Real,
            format!("SO({hi},{lo})"),
            lo,
            so_dim(p) + so_dim(q),
            p / 2 + q / 2,
            cyc(2, bw.rem_euclid(2) as u32),
        ));
    }
    v.push(x.padic(PlaceClass::PadicSplit, "split", n, cyc(2, 0)));
    v.push(x.padic(PlaceClass::PadicSplit, "non-split", n - 1, cyc(2, 1)));
    v
}

fn type_c(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let n = c.rank;
    let mut v = vec![x.real(PlaceClass::Real, format!("Sp_{}(R)", 2 * n), n, n * n, n, cyc(2, 0))];
    for q in 0..=n / 2 {
        let p = n - q;
        v.push(x.real(
            PlaceClass::Real,
            format!("Sp({p},{q})"),
            q,
            p * (2 * p + 1) + q * (2 * q + 1),
            n,
            cyc(2, 1),
        ));
    }
    v.push(x.padic(PlaceClass::PadicSplit, "split", n, cyc(2, 0)));
    v.push(x.padic(PlaceClass::PadicSplit, "non-split", n / 2, cyc(2, 1)));
    v
}

/// `SO(p,q)`, `p + q = 2N`, for the given parity of `q`, with `p >= q`.
fn so_pq(x: &Ctx, class: PlaceClass, odd: bool, bw: impl Fn(u32, u32) -> BwValue) -> Vec<LocalFormRecord> {
    let big_n = x.cartan.rank;
    (0..=big_n)
        .filter(|q| (q % 2 == 1) == odd)
        .map(|q| {
            let p = 2 * big_n - q;
            x.real(class, format!("SO({p},{q})"), q, so_dim(p) + so_dim(q), p / 2 + q / 2, bw(p, q))
        })
        .collect()
}

fn so_star(x: &Ctx, class: PlaceClass, bw: BwValue) -> LocalFormRecord {
    let big_n = x.cartan.rank;
    x.real(class, format!("SO*({})", 2 * big_n), big_n / 2, big_n * big_n, big_n, bw)
}

/// Brauer-Witt class of `SO(p,q)` over the reals: trivial iff `p - q = 0 mod 8`.
fn so_trivial(p: u32, q: u32) -> bool {
    (p as i64 - q as i64).rem_euclid(8) == 0
}

fn inner_d_real(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let n = c.rank;
    if n.is_multiple_of(2) {
        let pair = |p, q| if so_trivial(p, q) { BwValue::pair(0, 0) } else { BwValue::pair(1, 1) };
        let mut v = so_pq(&x, PlaceClass::Real, false, pair);
        // SO*(8) is isomorphic to SO(6,2).
        if n >= 6 {
            v.push(so_star(&x, PlaceClass::Real, BwValue::pair(0, 1).collapsed()));
        }
        v
    } else {
        so_pq(&x, PlaceClass::Real, true, |p, q| cyc(2, u32::from(!so_trivial(p, q))))
    }
}

fn inner_d_padic(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let n = c.rank;
    let h = n / 2;
    if n.is_multiple_of(2) {
        vec![
            x.padic(PlaceClass::PadicSplit, "split", n, BwValue::pair(0, 0)),
            x.padic(PlaceClass::PadicSplit, "Tits(ooo.ooo**)", n - 2, BwValue::pair(1, 1)),
            x.padic(PlaceClass::PadicSplit, "Tits(*o*.o*o*o)", h, BwValue::pair(0, 1).collapsed()),
        ]
    } else {
        vec![
            x.padic(PlaceClass::PadicSplit, "split", n, cyc(4, 0)),
            x.padic(PlaceClass::PadicSplit, "Tits(ooo.oo**)", n - 2, cyc(4, 2)),
            x.padic(PlaceClass::PadicSplit, "Tits(*o*.o***)", h - 1, cyc(4, 1).collapsed()),
        ]
    }
}

fn inner_d(c: CartanType) -> Vec<LocalFormRecord> {
    let mut v = inner_d_real(c);
    v.extend(inner_d_padic(c));
    v
}

fn outer2_d(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let n = c.rank;
    let inner = c.inner_counterpart();
    let mut v = Vec::new();
    if n % 2 == 1 {
        v.extend(so_pq(&x, PlaceClass::Real, false, |_, _| cyc(2, 0)));
        v.push(so_star(&x, PlaceClass::Real, cyc(2, 1)));
    } else {
        v.extend(so_pq(&x, PlaceClass::Real, true, |_, _| cyc(1, 0)));
    }
    v.extend(retag(inner_d_real(inner), c, PlaceClass::RealSplit, None));
    v.extend(retag(inner_d_padic(inner), c, PlaceClass::PadicSplit, None));
    let h = n / 2;
    if n % 2 == 1 {
        v.push(x.padic(PlaceClass::PadicNonsplit, "quasi-split", n - 1, cyc(2, 0)));
        v.push(x.padic(PlaceClass::PadicNonsplit, "Tits(fold *o*.o*oo)", h, cyc(2, 1)));
    } else {
        v.push(x.padic(PlaceClass::PadicNonsplit, "quasi-split", n - 1, cyc(2, 0)));
        v.push(x.padic(PlaceClass::PadicNonsplit, "Tits(fold *o*.o*o**)", h - 1, cyc(2, 1)));
    }
    v
}

fn triality_d4(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let inner = CartanType::inner(Family::D, 4);
    let deg = c.twist.degree() as u8;
    let real_inner = inner_d_real(inner);
    // Only two inner p-adic indices survive up to triality.
    let padic_inner: Vec<_> = inner_d_padic(inner).into_iter().take(2).collect();
    let mut v = Vec::new();
    if c.twist == Twist::Outer3 {
        v.extend(retag(real_inner, c, PlaceClass::Real, Some(3)));
        v.extend(retag(padic_inner, c, PlaceClass::PadicSplit, Some(3)));
        let mut qs = x.padic(PlaceClass::PadicNonsplit, "quasi-split", 2, cyc(1, 0));
        qs.d4_split_count = Some(1);
        v.push(qs);
    } else {
        v.extend(retag(real_inner, c, PlaceClass::RealSplit, Some(deg)));
        let outer_real = so_pq(&x, PlaceClass::Real, true, |_, _| cyc(1, 0));
        v.extend(retag(outer_real, c, PlaceClass::Real, Some(3)));
        v.extend(retag(padic_inner, c, PlaceClass::PadicSplit, Some(deg)));
        let nonsplit = [
            (3, "quasi-split 2D4", 3, cyc(2, 0)),
            (3, "Tits(fold *o**)", 1, cyc(2, 1)),
            (2, "quasi-split 3D4", 2, cyc(1, 0)),
            (1, "quasi-split 6D4", 2, cyc(1, 0)),
        ];
        for (count, label, rank, bw) in nonsplit {
            let mut r = x.padic(PlaceClass::PadicNonsplit, label, rank, bw);
            r.d4_split_count = Some(count);
            v.push(r);
        }
    }
    v
}

fn type_e6(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let inner = Ctx { cartan: c.inner_counterpart() };
    let z = cyc(1, 0);
    let inner_real = vec![
        inner.real(PlaceClass::Real, "E6(6)", 6, 36, 4, z),
        inner.real(PlaceClass::Real, "E6(-26)", 2, 52, 4, z),
    ];
    let inner_padic = vec![
        inner.padic(PlaceClass::PadicSplit, "split", 6, cyc(3, 0)),
        inner.padic(PlaceClass::PadicSplit, "Tits(1E6^16_2)", 2, cyc(3, 1).collapsed()),
    ];
    if c.is_inner() {
        return inner_real.into_iter().chain(inner_padic).collect();
    }
    let mut v = vec![
        x.real(PlaceClass::Real, "E6(2)", 4, 38, 6, z),
        x.real(PlaceClass::Real, "E6(-14)", 2, 46, 6, z),
        x.real(PlaceClass::Real, "E6(-78)", 0, 78, 6, z),
    ];
    v.extend(retag(inner_real, c, PlaceClass::RealSplit, None));
    v.extend(retag(inner_padic, c, PlaceClass::PadicSplit, None));
    v.push(x.padic(PlaceClass::PadicNonsplit, "quasi-split", 4, z));
    v
}

fn type_e7(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    vec![
        x.real(PlaceClass::Real, "E7(7)", 7, 63, 7, cyc(2, 0)),
        x.real(PlaceClass::Real, "E7(-5)", 4, 69, 7, cyc(2, 1)),
        x.real(PlaceClass::Real, "E7(-25)", 3, 79, 7, cyc(2, 0)),
        x.real(PlaceClass::Real, "E7(-133)", 0, 133, 7, cyc(2, 1)),
        x.padic(PlaceClass::PadicSplit, "split", 7, cyc(2, 0)),
        x.padic(PlaceClass::PadicSplit, "non-split", 4, cyc(2, 1)),
    ]
}

fn type_e8_f4_g2(c: CartanType) -> Vec<LocalFormRecord> {
    let x = Ctx { cartan: c };
    let z = cyc(1, 0);
    let real: &[(&str, u32, u32, u32)] = match c.family {
        Family::E => &[("E8(8)", 8, 120, 8), ("E8(-24)", 4, 136, 8), ("E8(-248)", 0, 248, 8)],
        Family::F => &[("F4(4)", 4, 24, 4), ("F4(-20)", 1, 36, 4), ("F4(-52)", 0, 52, 4)],
        _ => &[("G2(2)", 2, 6, 2), ("G2(-14)", 0, 14, 2)],
    };
    let mut v: Vec<_> = real
        .iter()
        .map(|&(label, rr, kd, kr)| x.real(PlaceClass::Real, label, rr, kd, kr, z))
        .collect();
    v.push(x.padic(PlaceClass::PadicSplit, "split", c.rank, z));
    v
}

/// Checks that `bw` lies in the local group prescribed by the center.
pub fn bw_in_local_group(record: &LocalFormRecord) -> bool {
    let place = representative_place(record);
    local_h2_group(center_of(record.cartan), &place) == record.bw.group()
}
