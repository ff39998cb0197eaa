//! Inexactness of family subsets: a subset of J_k(X) is inexact when some
//! other (2k)-independent n-set Y has J_k(Y) ≠ J_k(X) yet still containing
//! the subset. Over a finite field the witness space is enumerable, so the
//! existential definition becomes a bounded exhaustive search.

use std::collections::BTreeSet;

use crate::apartments::{FamilyKind, JFamily};
use crate::combin::{binomial, k_subsets};
use crate::exec;
use crate::finfield::{is_m_independent, Prime};
use crate::subspaces::{enumerate_subspaces, Subspace};
use crate::{Error, Result};

/// Outcome of an inexactness search. `NotInexact` certifies the whole
/// candidate space was exhausted.
#[derive(Debug, Clone)]
pub enum InexactVerdict {
    Inexact { witness: Vec<Vec<u32>> },
    NotInexact,
}

impl InexactVerdict {
    pub fn is_inexact(&self) -> bool {
        matches!(self, InexactVerdict::Inexact { .. })
    }
}

struct YSearch {
    points: Vec<Subspace>,
    candidates: Vec<Vec<usize>>,
}

fn prepare_search(family: &JFamily, budget: u64) -> Result<YSearch> {
    if family.kind() != FamilyKind::Spans {
        return Err(Error::domain("inexactness is defined for span families"));
    }
    let points = enumerate_subspaces(family.p(), family.ambient(), 1);
    let combos = binomial(points.len(), family.n());
    if combos > budget as u128 {
        return Err(Error::Budget {
            examined: combos.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    Ok(YSearch {
        candidates: k_subsets(points.len(), family.n()),
        points,
    })
}

/// Member ranks of the family that also belong to J_k(Y), or None when Y is
/// not (2k)-independent.
///
/// Membership uses the point-count criterion: a k-dimensional member P lies
/// in J_k(Y) exactly when P contains k of the points of Y (more than k
/// would contradict (2k)-independence).
fn intersection_with(
    p: Prime,
    family: &JFamily,
    y_reps: &[Vec<u32>],
) -> Result<Option<BTreeSet<usize>>> {
    if !is_m_independent(p, y_reps, 2 * family.k())? {
        return Ok(None);
    }
    let k = family.k();
    let ranks = family
        .members()
        .iter()
        .enumerate()
        .filter(|(_, m)| {
            y_reps.iter().filter(|y| m.contains_vector(y)).count() == k
        })
        .map(|(r, _)| r)
        .collect();
    Ok(Some(ranks))
}

/// Decides whether `subset` (given as member ranks) is inexact, returning
/// an explicit witness Y or a certificate that the search space is
/// exhausted. Exceeding `budget` is an error distinct from `NotInexact`.
pub fn is_inexact(
    family: &JFamily,
    subset: &BTreeSet<usize>,
    budget: u64,
) -> Result<InexactVerdict> {
    if subset.iter().any(|&r| r >= family.len()) {
        return Err(Error::domain("is_inexact: member rank out of range"));
    }
    let search = prepare_search(family, budget)?;
    let p = family.p();
    let total = family.len();
    let found = exec::indexed_find_map(search.candidates.len(), |ci| {
        let idx = &search.candidates[ci];
        let y_reps: Vec<Vec<u32>> = idx
            .iter()
            .map(|&i| search.points[i - 1].basis().row(0).to_vec())
            .collect();
        match intersection_with(p, family, &y_reps) {
            Ok(Some(ranks)) if ranks.len() < total && subset.is_subset(&ranks) => Some(y_reps),
            _ => None,
        }
    });
    Ok(match found {
        Some(witness) => InexactVerdict::Inexact { witness },
        None => InexactVerdict::NotInexact,
    })
}

/// Every intersection J_k(X) ∩ J_k(Y) over valid witnesses Y, as
/// (Y representatives, member ranks) pairs. A subset of the family is
/// inexact exactly when it is contained in one of these.
pub fn family_intersections(
    family: &JFamily,
    budget: u64,
) -> Result<Vec<(Vec<Vec<u32>>, BTreeSet<usize>)>> {
    let search = prepare_search(family, budget)?;
    let p = family.p();
    let total = family.len();
    let out = exec::slice_filter_map(&search.candidates, |idx| {
        let y_reps: Vec<Vec<u32>> = idx
            .iter()
            .map(|&i| search.points[i - 1].basis().row(0).to_vec())
            .collect();
        match intersection_with(p, family, &y_reps) {
            Ok(Some(ranks)) if ranks.len() < total => Some((y_reps, ranks)),
            _ => None,
        }
    });
    Ok(out)
}

/// The maximal inexact subsets of the family, found by exhausting the
/// witness space and keeping the inclusion-maximal intersections.
pub fn maximal_inexact_subsets(family: &JFamily, budget: u64) -> Result<Vec<BTreeSet<usize>>> {
    let all: BTreeSet<BTreeSet<usize>> = family_intersections(family, budget)?
        .into_iter()
        .map(|(_, ranks)| ranks)
        .collect();
    Ok(all
        .iter()
        .filter(|s| !all.iter().any(|t| *s != t && t.is_superset(s)))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartments::{
        gf2_four_independent_five_set, special_subsets, Apartment, Frame,
    };
    use crate::finfield::Prime;

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    const BUDGET: u64 = 10_000_000;

    #[test]
    fn special_subsets_of_base_apartment_are_inexact_with_expected_witness() {
        // for a base, replacing x_i by x_i + x_j leaves the special subset
        // (+i,+j) inside the new family
        let apt = Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap();
        let fam = apt.family();
        for s in special_subsets(fam).unwrap() {
            let verdict = is_inexact(fam, &s.member_ranks, BUDGET).unwrap();
            assert!(verdict.is_inexact(), "special ({},{}) must be inexact", s.i, s.j);
        }
        // the full family is not inexact
        let all: BTreeSet<usize> = (0..fam.len()).collect();
        assert!(!is_inexact(fam, &all, BUDGET).unwrap().is_inexact());
    }

    #[test]
    fn maximal_inexact_subsets_of_base_apartment_are_the_specials() {
        let apt = Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap();
        let fam = apt.family();
        let maximal = maximal_inexact_subsets(fam, BUDGET).unwrap();
        let specials: BTreeSet<BTreeSet<usize>> = special_subsets(fam)
            .unwrap()
            .into_iter()
            .map(|s| s.member_ranks)
            .collect();
        let maximal_set: BTreeSet<BTreeSet<usize>> = maximal.into_iter().collect();
        assert_eq!(maximal_set, specials);
    }

    #[test]
    fn four_independent_five_set_specials_are_not_inexact() {
        let fam =
            JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        for s in special_subsets(&fam).unwrap() {
            let verdict = is_inexact(&fam, &s.member_ranks, BUDGET).unwrap();
            assert!(
                !verdict.is_inexact(),
                "special ({},{}) must not be inexact here",
                s.i,
                s.j
            );
        }
    }

    #[test]
    fn every_intersection_lies_in_a_special_subset() {
        // inexact subsets are exactly subsets of the J∩J_k(Y) intersections,
        // so this verifies containment-in-special for all of them at once
        let apt = Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap();
        let fam = apt.family();
        let specials: Vec<BTreeSet<usize>> = special_subsets(fam)
            .unwrap()
            .into_iter()
            .map(|s| s.member_ranks)
            .collect();
        let intersections = family_intersections(fam, BUDGET).unwrap();
        assert!(!intersections.is_empty());
        for (_, ranks) in &intersections {
            assert!(
                specials.iter().any(|s| s.is_superset(ranks)),
                "intersection {ranks:?} escapes all special subsets"
            );
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let apt = Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap();
        let subset = BTreeSet::from([0usize]);
        assert!(matches!(
            is_inexact(apt.family(), &subset, 10),
            Err(Error::Budget { budget: 10, .. })
        ));
    }
}
