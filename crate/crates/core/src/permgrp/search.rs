use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classes::{conjugating_element, ClassTable, DEFAULT_MAX_ELEMENTS};
use super::{order_json, PermGroup, Permutation};
use crate::error::{Error, Result};

/// Whether `H` is normal of index 6 in `U` with nonabelian quotient, i.e.
/// `U/H` is isomorphic to `S3`.
pub fn quotient_is_s3(u: &PermGroup, h: &PermGroup) -> Result<bool> {
    if !h.is_subgroup_of(u) {
        return Err(Error::NotSubgroup("H is not contained in U".into()));
    }
    if u.order() != h.order() * 6u32 {
        return Ok(false);
    }
    if !h.is_normalized_by(u) {
        return Ok(false);
    }
    let gens = u.generators();
    let nonabelian = gens.iter().enumerate().any(|(i, a)| {
        gens[i + 1..].iter().any(|b| {
            let comm = a.inverse().then(&b.inverse()).then(a).then(b);
            !h.contains(&comm)
        })
    });
    Ok(nonabelian)
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub max_elements: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

/// Where an intermediate subgroup `U` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnionSource {
    User,
    Join,
    Normalizer,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntermediateReport {
    pub source: UnionSource,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<usize>,
    pub order: serde_json::Value,
    pub s3_over_h: bool,
    pub s3_over_h2: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub index: usize,
    pub order: serde_json::Value,
    pub gassmann_equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conjugate: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub candidate: usize,
    pub intermediates: Vec<IntermediateReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "fails cycle-type condition")]
    FailsCycleType,
    #[serde(rename = "no almost conjugate subgroup")]
    NoAlmostConjugate,
    #[serde(rename = "no S3 intermediate subgroup")]
    NoS3Intermediate,
    #[serde(rename = "candidate")]
    Candidate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub degree: usize,
    pub order: serde_json::Value,
    pub degree_multiple_of_six: bool,
    pub stabilizer_order: serde_json::Value,
    pub class_count: usize,
    pub has_required_class: bool,
    pub candidates: Vec<CandidateReport>,
    pub pairs: Vec<PairReport>,
    pub verdict: Verdict,
}

/// Elements normalizing both subgroups, as a group.
fn common_normalizer(g: &PermGroup, h1: &PermGroup, h2: &PermGroup, max_elements: u64) -> Result<PermGroup> {
    let n = g.checked_order(max_elements)?;
    let normalizes = |x: &Permutation, h: &PermGroup| {
        h.generators().iter().all(|s| h.contains(&s.conjugate_by(x)))
    };
    let elems: Vec<Permutation> = (0..n)
        .into_par_iter()
        .map(|i| g.element_at(i))
        .filter(|x| !x.is_identity() && normalizes(x, h1) && normalizes(x, h2))
        .collect();
    let mut grp = PermGroup::trivial(g.degree())?;
    for x in elems {
        if !grp.contains(&x) {
            let mut gens = grp.generators().to_vec();
            gens.push(x);
            grp = PermGroup::new(g.degree(), gens)?;
        }
    }
    Ok(grp)
}

/// Runs the Gassmann-triple check on a transitive group: pairs the point
/// stabilizer `H` with each supplied candidate `H'`, keeps the almost
/// conjugate non-conjugate ones, and looks for `U >= H, H'` with both
/// quotients isomorphic to `S3` among the supplied intermediates, `<H, H'>`,
/// and the common normalizer.
pub fn search_candidates(
    g: &PermGroup,
    candidates: &[PermGroup],
    intermediates: &[PermGroup],
    opts: SearchOptions,
) -> Result<SearchReport> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive(format!(
            "orbit of 0 has {} of {} points",
            g.orbit(0).len(),
            g.degree()
        )));
    }
    let max = opts.max_elements;
    for (i, c) in candidates.iter().chain(intermediates).enumerate() {
        if !c.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!("supplied subgroup {i} is not contained in G")));
        }
    }
    let table = ClassTable::new(g, max)?;
    let required = g.degree() >= 36
        && table
            .representatives(g)
            .iter()
            .any(|(p, _)| p.cycle_type().contains_required());
    let h = g.point_stabilizer(0)?;

    let mut cand_reports = Vec::new();
    let mut pairs = Vec::new();
    for (i, h2) in candidates.iter().enumerate() {
        let eq = table.gassmann(g, &h, h2, max)?;
        let conjugate = if eq {
            Some(conjugating_element(g, &h, h2, max)?.is_some())
        } else {
            None
        };
        cand_reports.push(CandidateReport {
            index: i,
            order: order_json(&h2.order()),
            gassmann_equivalent: eq,
            conjugate,
        });
        if !(eq && conjugate == Some(false)) {
            continue;
        }
        let mut us: Vec<(UnionSource, Option<usize>, PermGroup)> = intermediates
            .iter()
            .enumerate()
            .map(|(j, u)| (UnionSource::User, Some(j), u.clone()))
            .collect();
        us.push((UnionSource::Join, None, h.join(h2)?));
        us.push((UnionSource::Normalizer, None, common_normalizer(g, &h, h2, max)?));
        let mut inter = Vec::new();
        for (source, index, u) in us {
            if !h.is_subgroup_of(&u) || !h2.is_subgroup_of(&u) {
                continue;
            }
            inter.push(IntermediateReport {
                source,
                index,
                order: order_json(&u.order()),
                s3_over_h: quotient_is_s3(&u, &h)?,
                s3_over_h2: quotient_is_s3(&u, h2)?,
            });
        }
        pairs.push(PairReport {
            candidate: i,
            intermediates: inter,
        });
    }
    let found_u = pairs
        .iter()
        .any(|p| p.intermediates.iter().any(|u| u.s3_over_h && u.s3_over_h2));
    let verdict = if !required {
        Verdict::FailsCycleType
    } else if pairs.is_empty() {
        Verdict::NoAlmostConjugate
    } else if !found_u {
        Verdict::NoS3Intermediate
    } else {
        Verdict::Candidate
    };
    Ok(SearchReport {
        degree: g.degree(),
        order: order_json(&g.order()),
        degree_multiple_of_six: g.degree().is_multiple_of(6),
        stabilizer_order: order_json(&h.order()),
        class_count: table.len(),
        has_required_class: required,
        candidates: cand_reports,
        pairs,
        verdict,
    })
}
