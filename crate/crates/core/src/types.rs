//! Domain types shared by the census, duality and sign layers.
//!
//! Every type here is an immutable value with a JSON form: field names are
//! kept stable and enums serialize as lowercase strings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Letter of a Cartan-Killing family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Order of the `*`-action of the absolute Galois group on the Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    Inner,
    Outer2,
    Outer3,
    Outer6,
}

impl Twist {
    pub fn degree(self) -> u32 {
        match self {
            Twist::Inner => 1,
            Twist::Outer2 => 2,
            Twist::Outer3 => 3,
            Twist::Outer6 => 6,
        }
    }

    fn from_degree(d: u32) -> Option<Twist> {
        match d {
            1 => Some(Twist::Inner),
            2 => Some(Twist::Outer2),
            3 => Some(Twist::Outer3),
            6 => Some(Twist::Outer6),
            _ => None,
        }
    }
}

/// Inner or outer Cartan-Killing type of an absolutely almost simple group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: u32,
    pub twist: Twist,
}

impl CartanType {
    pub const fn new(family: Family, rank: u32, twist: Twist) -> Self {
        CartanType { family, rank, twist }
    }

    pub const fn inner(family: Family, rank: u32) -> Self {
        Self::new(family, rank, Twist::Inner)
    }

    /// Maps low-rank coincidences to one representative and rejects
    /// impossible family/rank/twist combinations.
    pub fn canonicalize(self) -> Result<CartanType> {
        use Family::*;
        let CartanType { family, rank, twist } = self;
        let bad = |why: &str| Err(Error::InvalidType(format!("{self}: {why}")));
        if rank == 0 {
            return bad("rank must be positive");
        }
        let t = match family {
            A => {
                if rank == 1 && twist != Twist::Inner {
                    return bad("A1 admits no outer forms");
                }
                if matches!(twist, Twist::Outer3 | Twist::Outer6) {
                    return bad("only D4 admits triality twists");
                }
                self
            }
            B => {
                if twist != Twist::Inner {
                    return bad("type B admits no outer forms");
                }
                if rank == 1 {
                    CartanType::inner(A, 1)
                } else {
                    self
                }
            }
            C => {
                if twist != Twist::Inner {
                    return bad("type C admits no outer forms");
                }
                match rank {
                    1 => CartanType::inner(A, 1),
                    2 => CartanType::inner(B, 2),
                    _ => self,
                }
            }
            D => {
                if rank < 3 {
                    return bad("D1 and D2 are not simple");
                }
                if matches!(twist, Twist::Outer3 | Twist::Outer6) && rank != 4 {
                    return bad("only D4 admits triality twists");
                }
                if rank == 3 {
                    CartanType::new(A, 3, twist)
                } else {
                    self
                }
            }
            E => {
                if !(6..=8).contains(&rank) {
                    return bad("E admits ranks 6, 7, 8 only");
                }
                if twist != Twist::Inner && !(rank == 6 && twist == Twist::Outer2) {
                    return bad("only E6 admits an outer twist, of order two");
                }
                self
            }
            F => {
                if rank != 4 || twist != Twist::Inner {
                    return bad("F4 is the only type F");
                }
                self
            }
            G => {
                if rank != 2 || twist != Twist::Inner {
                    return bad("G2 is the only type G");
                }
                self
            }
        };
        Ok(t)
    }

    /// Whether the Dynkin diagram has nontrivial symmetries, i.e. whether
    /// inner and outer forms have to be distinguished in notation.
    pub fn has_diagram_symmetry(&self) -> bool {
        match self.family {
            Family::A => self.rank >= 2,
            Family::D => self.rank >= 4,
            Family::E => self.rank == 6,
            _ => false,
        }
    }

    pub fn is_inner(&self) -> bool {
        self.twist == Twist::Inner
    }

    pub fn is_triality(&self) -> bool {
        matches!(self.twist, Twist::Outer3 | Twist::Outer6)
    }

    /// The inner type with the same diagram.
    pub fn inner_counterpart(&self) -> CartanType {
        CartanType::inner(self.family, self.rank)
    }

    /// Complex dimension of the Lie algebra.
    pub fn lie_algebra_dim(&self) -> u32 {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// All canonical types of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: u32) -> Vec<CartanType> {
        use Family::*;
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(CartanType::inner(A, n));
            if n >= 2 {
                out.push(CartanType::new(A, n, Twist::Outer2));
            }
        }
        out.extend((2..=max_rank).map(|n| CartanType::inner(B, n)));
        out.extend((3..=max_rank).map(|n| CartanType::inner(C, n)));
        for n in 4..=max_rank {
            out.push(CartanType::inner(D, n));
            out.push(CartanType::new(D, n, Twist::Outer2));
            if n == 4 {
                out.push(CartanType::new(D, 4, Twist::Outer3));
                out.push(CartanType::new(D, 4, Twist::Outer6));
            }
        }
        if max_rank >= 6 {
            out.push(CartanType::inner(E, 6));
            out.push(CartanType::new(E, 6, Twist::Outer2));
        }
        for n in 7..=max_rank.min(8) {
            out.push(CartanType::inner(E, n));
        }
        if max_rank >= 4 {
            out.push(CartanType::inner(F, 4));
        }
        if max_rank >= 2 {
            out.push(CartanType::inner(G, 2));
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_diagram_symmetry() || !self.is_inner() {
            write!(f, "{}", self.twist.degree())?;
        }
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `E8`, `1A2`, `2A3`, `3D4`, `6D4`, and the superscript forms `²A3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(format!("cannot parse type {s:?}"));
        let s = s.trim();
        let mut chars = s.chars().peekable();
        let twist_digit = match chars.peek().copied() {
            Some(c @ '0'..='9') => {
                chars.next();
                c.to_digit(10)
            }
            Some('¹') => {
                chars.next();
                Some(1)
            }
            Some('²') => {
                chars.next();
                Some(2)
            }
            Some('³') => {
                chars.next();
                Some(3)
            }
            Some('⁶') => {
                chars.next();
                Some(6)
            }
            _ => None,
        };
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest: String = chars.collect();
        let rank: u32 = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        let twist = match twist_digit {
            None => Twist::Inner,
            Some(d) => Twist::from_degree(d).ok_or_else(bad)?,
        };
        Ok(CartanType { family, rank, twist })
    }
}

/// The Galois module `Z(G0)`, the center of the quasi-split inner form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CenterModule {
    Trivial,
    Mu2,
    #[serde(rename = "mu2xmu2")]
    Mu2xMu2,
    /// Kernel of the norm `R_{l/k}(mu_m) -> mu_m` for the quadratic `l/k`.
    NormOneMu { order: u32 },
    /// `R_{l/k}(mu_2)` for the quadratic `l/k`.
    RestrictedMu2,
    MuN { n: u32 },
    /// Center of a trialitarian `D4`: `mu2 x mu2` with the diagram action.
    TrialityMu2,
}

/// Center of the simply-connected quasi-split group of the given type.
pub fn center_of(cartan: CartanType) -> CenterModule {
    use Family::*;
    let n = cartan.rank;
    match (cartan.family, cartan.twist) {
        (E, _) if n == 8 => CenterModule::Trivial,
        (F, _) | (G, _) => CenterModule::Trivial,
        (A, Twist::Inner) if n == 1 => CenterModule::Mu2,
        (A, Twist::Inner) => CenterModule::MuN { n: n + 1 },
        (A, _) => CenterModule::NormOneMu { order: n + 1 },
        (B, _) | (C, _) => CenterModule::Mu2,
        (D, Twist::Inner) if n.is_multiple_of(2) => CenterModule::Mu2xMu2,
        (D, Twist::Inner) => CenterModule::MuN { n: 4 },
        (D, Twist::Outer2) if n.is_multiple_of(2) => CenterModule::RestrictedMu2,
        (D, Twist::Outer2) => CenterModule::NormOneMu { order: 4 },
        (D, _) => CenterModule::TrialityMu2,
        (E, Twist::Inner) if n == 6 => CenterModule::MuN { n: 3 },
        (E, _) if n == 6 => CenterModule::NormOneMu { order: 3 },
        (E, _) => CenterModule::Mu2,
    }
}

/// Abstract structure of a local group `H^2(k_v, Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum H2Group {
    /// `Z/m`; `m = 1` is the trivial group.
    Cyclic(u32),
    /// `Z/2 x Z/2`.
    Pair,
}

impl H2Group {
    pub fn order(&self) -> u32 {
        match self {
            H2Group::Cyclic(m) => *m,
            H2Group::Pair => 4,
        }
    }

    /// Every element, in a fixed order.
    pub fn elements(&self) -> Vec<BwValue> {
        match *self {
            H2Group::Cyclic(m) => (0..m).map(|x| BwValue::cyclic(m, x)).collect(),
            H2Group::Pair => [(0, 0), (0, 1), (1, 0), (1, 1)]
                .into_iter()
                .map(|(a, b)| BwValue::pair(a, b))
                .collect(),
        }
    }
}

/// A local Brauer-Witt invariant, optionally stored up to the action of the
/// outer automorphisms (inversion on `Z/m`, swap on `Z/2 x Z/2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BwValueWire", into = "BwValueWire")]
pub enum BwValue {
    Cyclic {
        order: u32,
        value: u32,
        orbit_collapsed: bool,
    },
    Pair {
        a: u8,
        b: u8,
        orbit_collapsed: bool,
    },
}

impl BwValue {
    pub fn cyclic(order: u32, value: u32) -> Self {
        assert!(order >= 1, "cyclic group order must be positive");
        BwValue::Cyclic {
            order,
            value: value % order,
            orbit_collapsed: false,
        }
    }

    pub fn pair(a: u8, b: u8) -> Self {
        BwValue::Pair {
            a: a & 1,
            b: b & 1,
            orbit_collapsed: false,
        }
    }

    pub fn zero(group: H2Group) -> Self {
        match group {
            H2Group::Cyclic(m) => BwValue::cyclic(m, 0),
            H2Group::Pair => BwValue::pair(0, 0),
        }
    }

    pub fn group(&self) -> H2Group {
        match *self {
            BwValue::Cyclic { order, .. } => H2Group::Cyclic(order),
            BwValue::Pair { .. } => H2Group::Pair,
        }
    }

    pub fn is_orbit_collapsed(&self) -> bool {
        match *self {
            BwValue::Cyclic {
                orbit_collapsed, ..
            }
            | BwValue::Pair {
                orbit_collapsed, ..
            } => orbit_collapsed,
        }
    }

    /// Canonical orbit representative: `min(x, m - x)` or the
    /// lexicographically smaller of `(a, b)` and `(b, a)`.
    pub fn collapsed(self) -> Self {
        match self {
            BwValue::Cyclic { order, value, .. } => BwValue::Cyclic {
                order,
                value: value.min((order - value) % order),
                orbit_collapsed: true,
            },
            BwValue::Pair { a, b, .. } => BwValue::Pair {
                a: a.min(b),
                b: a.max(b),
                orbit_collapsed: true,
            },
        }
    }

    /// All members of the orbit of this value, without the collapsed flag.
    pub fn orbit(&self) -> Vec<BwValue> {
        let mut v = match *self {
            BwValue::Cyclic { order, value, .. } => {
                vec![BwValue::cyclic(order, value), BwValue::cyclic(order, order - value)]
            }
            BwValue::Pair { a, b, .. } => vec![BwValue::pair(a, b), BwValue::pair(b, a)],
        };
        v.dedup();
        v
    }

    pub fn same_orbit(&self, other: &BwValue) -> bool {
        self.collapsed() == other.collapsed()
    }

    pub fn is_trivial(&self) -> bool {
        match *self {
            BwValue::Cyclic { value, .. } => value == 0,
            BwValue::Pair { a, b, .. } => a == 0 && b == 0,
        }
    }

    /// Image under the unique orbit-invariant map to `Z/2`: the value mod 2 on
    /// an even cyclic group, zero on an odd one, `a + b` on a pair.
    pub fn reduced(&self) -> u8 {
        match *self {
            BwValue::Cyclic { order, value, .. } => {
                if order % 2 == 0 {
                    (value % 2) as u8
                } else {
                    0
                }
            }
            BwValue::Pair { a, b, .. } => (a + b) % 2,
        }
    }

    /// Group sum. The result is orbit-collapsed if either summand is, which
    /// keeps `reduced` additive.
    pub fn add(&self, other: &BwValue) -> Result<BwValue> {
        let sum = match (*self, *other) {
            (
                BwValue::Cyclic { order, value, .. },
                BwValue::Cyclic {
                    order: o2,
                    value: v2,
                    ..
                },
            ) if order == o2 => BwValue::cyclic(order, value + v2),
            (BwValue::Pair { a, b, .. }, BwValue::Pair { a: a2, b: b2, .. }) => {
                BwValue::pair(a ^ a2, b ^ b2)
            }
            _ => {
                return Err(Error::InvalidFamily(format!(
                    "cannot add values of groups {:?} and {:?}",
                    self.group(),
                    other.group()
                )))
            }
        };
        if self.is_orbit_collapsed() || other.is_orbit_collapsed() {
            Ok(sum.collapsed())
        } else {
            Ok(sum)
        }
    }

    pub fn neg(&self) -> BwValue {
        match *self {
            BwValue::Cyclic {
                order,
                value,
                orbit_collapsed,
            } => {
                let v = BwValue::cyclic(order, order - value);
                if orbit_collapsed {
                    v.collapsed()
                } else {
                    v
                }
            }
            pair => pair,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct BwValueWire {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    group_order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    value: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pair: Option<(u8, u8)>,
    #[serde(default)]
    orbit_collapsed: bool,
}

impl From<BwValue> for BwValueWire {
    fn from(v: BwValue) -> Self {
        match v {
            BwValue::Cyclic {
                order,
                value,
                orbit_collapsed,
            } => BwValueWire {
                group_order: Some(order),
                value: Some(value),
                pair: None,
                orbit_collapsed,
            },
            BwValue::Pair {
                a,
                b,
                orbit_collapsed,
            } => BwValueWire {
                group_order: None,
                value: None,
                pair: Some((a, b)),
                orbit_collapsed,
            },
        }
    }
}

impl TryFrom<BwValueWire> for BwValue {
    type Error = String;

    fn try_from(w: BwValueWire) -> std::result::Result<Self, String> {
        let v = match (w.group_order, w.value, w.pair) {
            (Some(m), Some(x), None) if m >= 1 && x < m => BwValue::cyclic(m, x),
            (None, None, Some((a, b))) if a <= 1 && b <= 1 => BwValue::pair(a, b),
            _ => return Err("bw value needs either group_order+value in range or a 0/1 pair".into()),
        };
        if w.orbit_collapsed {
            let c = v.collapsed();
            if c != BwValue::from_parts(v, true) {
                return Err("orbit_collapsed value is not the canonical representative".into());
            }
            Ok(c)
        } else {
            Ok(v)
        }
    }
}

impl BwValue {
    fn from_parts(v: BwValue, collapsed: bool) -> BwValue {
        match v {
            BwValue::Cyclic { order, value, .. } => BwValue::Cyclic {
                order,
                value,
                orbit_collapsed: collapsed,
            },
            BwValue::Pair { a, b, .. } => BwValue::Pair {
                a,
                b,
                orbit_collapsed: collapsed,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaceKind {
    Real,
    Complex,
    Finite,
}

/// Decomposition of a place in the minimal field `l` over which the group
/// becomes inner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LBehavior {
    Split,
    Nonsplit,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Place {
    pub kind: PlaceKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residue_char: Option<u64>,
    pub l_behavior: LBehavior,
    /// Number of places of `l` above this place; trialitarian types only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d4_split_count: Option<u8>,
}

impl Place {
    pub fn real(l_behavior: LBehavior) -> Self {
        Place {
            kind: PlaceKind::Real,
            residue_char: None,
            l_behavior,
            d4_split_count: None,
        }
    }

    pub fn complex(l_behavior: LBehavior) -> Self {
        Place {
            kind: PlaceKind::Complex,
            residue_char: None,
            l_behavior,
            d4_split_count: None,
        }
    }

    pub fn finite(p: u64, l_behavior: LBehavior) -> Self {
        Place {
            kind: PlaceKind::Finite,
            residue_char: Some(p),
            l_behavior,
            d4_split_count: None,
        }
    }

    pub fn with_d4_count(mut self, count: u8) -> Self {
        self.d4_split_count = Some(count);
        self
    }

    pub fn is_archimedean(&self) -> bool {
        self.kind != PlaceKind::Finite
    }
}

/// Signature `(r, s)`: numbers of real and complex places.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSignature {
    pub real_count: u32,
    pub complex_count: u32,
}

impl FieldSignature {
    pub fn new(real_count: u32, complex_count: u32) -> Result<Self> {
        let sig = FieldSignature {
            real_count,
            complex_count,
        };
        if sig.degree() == 0 {
            return Err(Error::InvalidSignatures("degree r + 2s must be at least 1".into()));
        }
        Ok(sig)
    }

    pub fn degree(&self) -> u32 {
        self.real_count + 2 * self.complex_count
    }

    pub fn is_totally_real(&self) -> bool {
        self.complex_count == 0
    }
}

/// Which slice of the census a local form belongs to.
///
/// `Real` holds the forms at real places where the twist is still visible
/// (all real places of an inner type, the non-split real places of an outer
/// type); `RealSplit` holds the inner forms met at real places of an outer
/// type that split in `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaceClass {
    Real,
    RealSplit,
    Complex,
    PadicSplit,
    PadicNonsplit,
}

impl PlaceClass {
    pub fn is_real(self) -> bool {
        matches!(self, PlaceClass::Real | PlaceClass::RealSplit)
    }

    pub fn is_padic(self) -> bool {
        matches!(self, PlaceClass::PadicSplit | PlaceClass::PadicNonsplit)
    }
}

/// One local form of a given type: a real Lie group or a Tits index over a
/// p-adic field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalFormRecord {
    pub cartan: CartanType,
    pub place_class: PlaceClass,
    pub label: String,
    /// `k_v`-rank (real rank at archimedean places).
    pub rank: u32,
    /// Dimension of the symmetric space; archimedean forms only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim_sym: Option<u32>,
    /// Fundamental rank; archimedean forms only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fundamental_rank: Option<u32>,
    pub bw: BwValue,
    /// Decomposition count the form applies to; trialitarian types only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d4_split_count: Option<u8>,
}

impl LocalFormRecord {
    pub fn has_positive_fundamental_rank(&self) -> bool {
        self.fundamental_rank.unwrap_or(0) > 0
    }
}

/// A simply-connected simple group over a number field, described by the
/// signature data and its local form at every place of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalDescriptor {
    pub cartan: CartanType,
    pub k_sig: FieldSignature,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_sig: Option<FieldSignature>,
    #[serde(rename = "places_in_S")]
    pub places_in_s: Vec<(Place, LocalFormRecord)>,
}
