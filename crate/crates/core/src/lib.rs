//! Local-global computations for the sign of the Euler characteristic of
//! S-arithmetic groups: the census of local forms, Brauer-Witt realizability,
//! the parity invariant `d(G)`, and a permutation-group engine for Gassmann
//! triples.

pub mod duality;
pub mod error;
pub mod permgrp;
pub mod sign;
pub mod tables;
pub mod types;

pub use duality::{
    fiber_count, is_realizable, local_h2_group, mod2_sum_equal, realizability, reduced_sum,
    InvariantFamily, LocalH2Profile, Realizability,
};
pub use error::{Error, Result};
pub use permgrp::{
    are_conjugate_subgroups, conjugacy_classes, gassmann_equivalent, has_required_class,
    quotient_is_s3, search_candidates, ClassTable, CycleType, GroupFile, PermGroup, Permutation,
    SearchOptions, SearchReport, Subgroup, Verdict, DEFAULT_MAX_ELEMENTS,
};
pub use sign::{
    archimedean_factor_counts, classify, d4_sextic_d_parity, d_parity, outer_finite_places,
    sign_chi, Sign, SignResult, ZeroReason,
};
pub use tables::{
    census, check_place, forms_at_place, lookup_bw, padic_forms, real_forms, FormTable, SliceMeta,
};
pub use types::{
    center_of, BwValue, CartanType, CenterModule, Family, FieldSignature, GlobalDescriptor,
    H2Group, LBehavior, LocalFormRecord, Place, PlaceClass, PlaceKind, Twist,
};
