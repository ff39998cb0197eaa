//! Special and complement subsets of an indexed family, their exact sizes
//! a(n,k) = C(n-2,k-2) + C(n-1,k), the rational bound b(n,k), and the
//! distance oracle that recovers d(P,Q) from the number of complement
//! subsets containing both.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::JFamily;
use crate::combin::binomial;
use crate::subspaces::Subspace;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MarkKind {
    /// J(+i,+j) ∪ J(−i)
    Special,
    /// J(+i,−j)
    Complement,
}

/// A marked subset of a family, identified by the ordered index pair (i, j)
/// and carrying the member ranks it selects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSubset {
    pub i: usize,
    pub j: usize,
    pub kind: MarkKind,
    pub member_ranks: BTreeSet<usize>,
}

impl MarkedSubset {
    pub fn members(&self, family: &JFamily) -> Vec<Subspace> {
        self.member_ranks
            .iter()
            .map(|&r| family.members()[r].clone())
            .collect()
    }

    pub fn member_set(&self, family: &JFamily) -> BTreeSet<Subspace> {
        self.member_ranks
            .iter()
            .map(|&r| family.members()[r].clone())
            .collect()
    }
}

fn check_marked_preconditions(family: &JFamily) -> Result<()> {
    if family.k() < 2 {
        return Err(Error::domain("marked subsets need k >= 2"));
    }
    if family.n() < 2 * family.k() {
        return Err(Error::domain("marked subsets need n >= 2k"));
    }
    Ok(())
}

/// All n(n−1) special subsets J(+i,+j) ∪ J(−i) of the family, each of
/// exactly a(n,k) members.
pub fn special_subsets(family: &JFamily) -> Result<Vec<MarkedSubset>> {
    check_marked_preconditions(family)?;
    let n = family.n();
    let expected = a_of(n, family.k())?;
    let mut out = Vec::with_capacity(n * (n - 1));
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let member_ranks: BTreeSet<usize> = family
                .subsets()
                .iter()
                .enumerate()
                .filter(|(_, a)| (a.contains(i) && a.contains(j)) || !a.contains(i))
                .map(|(r, _)| r)
                .collect();
            if member_ranks.len() as u128 != expected {
                return Err(Error::invariant(format!(
                    "special subset ({i},{j}) has {} members, expected {expected}",
                    member_ranks.len()
                )));
            }
            out.push(MarkedSubset {
                i,
                j,
                kind: MarkKind::Special,
                member_ranks,
            });
        }
    }
    Ok(out)
}

/// All n(n−1) complement subsets J(+i,−j) = J \ (J(+i,+j) ∪ J(−i)).
pub fn complement_subsets(family: &JFamily) -> Result<Vec<MarkedSubset>> {
    check_marked_preconditions(family)?;
    let n = family.n();
    let mut out = Vec::with_capacity(n * (n - 1));
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let member_ranks: BTreeSet<usize> = family
                .subsets()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(i) && !a.contains(j))
                .map(|(r, _)| r)
                .collect();
            out.push(MarkedSubset {
                i,
                j,
                kind: MarkKind::Complement,
                member_ranks,
            });
        }
    }
    Ok(out)
}

/// a(n,k) = C(n−2,k−2) + C(n−1,k): the exact size of every special subset.
pub fn a_of(n: usize, k: usize) -> Result<u128> {
    if k < 2 || n < 2 * k {
        return Err(Error::domain(format!("a(n,k) needs n >= 2k >= 4, got ({n},{k})")));
    }
    Ok(binomial(n - 2, k - 2) + binomial(n - 1, k))
}

/// b(n,k) = C(2k−1,k)·n / k as an exact rational; it need not be an integer.
pub fn b_of(n: usize, k: usize) -> Result<Ratio<u128>> {
    if k < 2 || n <= 2 * k {
        return Err(Error::domain(format!("b(n,k) needs n > 2k >= 4, got ({n},{k})")));
    }
    Ok(Ratio::new(binomial(2 * k - 1, k) * n as u128, k as u128))
}

/// Recovers d(P,Q) for members P, Q by counting the complement subsets that
/// contain both: the count equals (k−m)(n−k−m) exactly when d(P,Q) = m.
///
/// The solved m must be unique in [0, min(k, n−k)]; ambiguity would mean the
/// family is invalid and is reported as an invariant violation.
pub fn distance_via_complements(family: &JFamily, p: &Subspace, q: &Subspace) -> Result<usize> {
    let rp = family
        .member_rank(p)
        .ok_or_else(|| Error::domain("distance_via_complements: P is not a member"))?;
    let rq = family
        .member_rank(q)
        .ok_or_else(|| Error::domain("distance_via_complements: Q is not a member"))?;
    let (n, k) = (family.n(), family.k());
    let count = complement_subsets(family)?
        .iter()
        .filter(|c| c.member_ranks.contains(&rp) && c.member_ranks.contains(&rq))
        .count() as u128;
    let bound = k.min(n - k);
    let values: Vec<u128> = (0..=bound)
        .map(|m| ((k - m) * (n - k - m)) as u128)
        .collect();
    let distinct: BTreeSet<&u128> = values.iter().collect();
    if distinct.len() != values.len() {
        return Err(Error::invariant(format!(
            "(k-m)(n-k-m) is not injective on 0..={bound} at (n,k) = ({n},{k})"
        )));
    }
    values
        .iter()
        .position(|&v| v == count)
        .ok_or_else(|| {
            Error::invariant(format!(
                "no m in 0..={bound} matches complement count {count} at (n,k) = ({n},{k})"
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartments::{gf2_four_independent_five_set, Apartment, Frame, JFamily};
    use crate::finfield::Prime;
    use crate::graphs::grassmann_distance;

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn counts_a_and_b() {
        assert_eq!(a_of(5, 2).unwrap(), 7);
        assert_eq!(a_of(4, 2).unwrap(), 4);
        assert_eq!(b_of(5, 2).unwrap(), Ratio::new(15, 2));
        // closed form of the k = 2 case: b(n,2) = 3n/2
        for n in 5..=12 {
            assert_eq!(b_of(n, 2).unwrap(), Ratio::new(3 * n as u128, 2));
        }
        assert!(a_of(3, 2).is_err());
        assert!(b_of(4, 2).is_err());
    }

    #[test]
    fn a_exceeds_b_except_five_two() {
        let mut exceptions = Vec::new();
        for k in 2..=5usize {
            for n in (2 * k + 1)..=12 {
                let a = Ratio::from_integer(a_of(n, k).unwrap());
                let b = b_of(n, k).unwrap();
                if a <= b {
                    exceptions.push((n, k));
                }
            }
        }
        assert_eq!(exceptions, vec![(5, 2)]);
    }

    #[test]
    fn special_subset_census_j52() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let specials = special_subsets(&fam).unwrap();
        assert_eq!(specials.len(), 20);
        for s in &specials {
            assert_eq!(s.member_ranks.len(), 7);
        }
    }

    #[test]
    fn special_subset_census_j42() {
        let apt = Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap();
        let specials = special_subsets(apt.family()).unwrap();
        assert_eq!(specials.len(), 12);
        for s in &specials {
            assert_eq!(s.member_ranks.len(), 4);
        }
    }

    #[test]
    fn special_parts_are_disjoint() {
        // J(+i,+j) and J(-i) partition each special subset
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        for i in 1..=5usize {
            for j in 1..=5usize {
                if i == j {
                    continue;
                }
                let plus_plus = fam
                    .subsets()
                    .iter()
                    .filter(|a| a.contains(i) && a.contains(j))
                    .count();
                let minus = fam.subsets().iter().filter(|a| !a.contains(i)).count();
                assert_eq!(plus_plus as u128, binomial(3, 0));
                assert_eq!(minus as u128, binomial(4, 2));
                assert_eq!(plus_plus as u128 + minus as u128, a_of(5, 2).unwrap());
            }
        }
    }

    #[test]
    fn complement_sizes() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let complements = complement_subsets(&fam).unwrap();
        assert_eq!(complements.len(), 20);
        let total = fam.len() as u128;
        for c in &complements {
            assert_eq!(c.member_ranks.len() as u128, total - a_of(5, 2).unwrap());
        }
    }

    #[test]
    fn distance_via_complements_matches_lemma_counts() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let complements = complement_subsets(&fam).unwrap();
        for (rp, p) in fam.members().iter().enumerate() {
            for q in fam.members() {
                let rq = fam.member_rank(q).unwrap();
                let count = complements
                    .iter()
                    .filter(|c| c.member_ranks.contains(&rp) && c.member_ranks.contains(&rq))
                    .count();
                let m = grassmann_distance(p, q).unwrap();
                assert_eq!(count, (2 - m) * (3 - m), "m = {m}");
                assert_eq!(distance_via_complements(&fam, p, q).unwrap(), m);
            }
        }
    }

    #[test]
    fn distance_via_complements_rejects_non_members() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let outsider = Subspace::span(gf(2), 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert!(distance_via_complements(&fam, &outsider, &fam.members()[0]).is_err());
    }
}
