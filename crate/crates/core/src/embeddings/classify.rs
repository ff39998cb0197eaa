//! Recognition of J(n,k)-subsets: find a distance-preserving index
//! bijection from J(n,k) onto a member set, then recover the structural
//! witness — the parabolic pair (S, U) with its frame points at n = 2k, or
//! the (2k)-independent family X above a fixed S (first type) / Y below a
//! fixed U (second type) otherwise. Witness recovery retraces the
//! intersection/sum constructions, so every classification doubles as a
//! runtime check of the classification theorem on that instance.

use std::collections::{BTreeMap, HashSet};

use crate::combin::{binomial, k_subsets};
use crate::exec;
use crate::finfield::is_m_independent;
use crate::graphs::{grassmann_distance, GrassmannGraph, KSubset, VertexGraph};
use crate::subspaces::{quotient_lift, quotient_push, Subspace};
use crate::{Error, Result};

use super::push_into_model;

/// Classification outcome for a claimed J(n,k)-subset.
#[derive(Debug, Clone)]
pub enum JSubsetWitness {
    /// n = 2k: an apartment of the parabolic interval [lower, upper], with
    /// the (k'−k+1)-dimensional frame points recovered.
    ApartmentInParabolic {
        lower: Subspace,
        upper: Subspace,
        points: Vec<Subspace>,
        iso: Vec<usize>,
    },
    /// spans of a (2k)-independent family above `lower`; `vectors` live in
    /// the quotient model of V'/lower.
    First {
        lower: Subspace,
        vectors: Vec<Vec<u32>>,
        iso: Vec<usize>,
    },
    /// hyperplane intersections below `upper`; `vectors` are the dual
    /// generators in the coordinate model of `upper`.
    Second {
        upper: Subspace,
        vectors: Vec<Vec<u32>>,
        iso: Vec<usize>,
    },
    NotJSubset { reason: String },
}

impl JSubsetWitness {
    pub fn is_j_subset(&self) -> bool {
        !matches!(self, JSubsetWitness::NotJSubset { .. })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            JSubsetWitness::ApartmentInParabolic { .. } => "apartment_in_parabolic",
            JSubsetWitness::First { .. } => "first",
            JSubsetWitness::Second { .. } => "second",
            JSubsetWitness::NotJSubset { .. } => "not_j_subset",
        }
    }

    /// The index bijection, when the members form a J-subset: entry r is
    /// the member position assigned to the r-th k-subset in lex order.
    pub fn iso(&self) -> Option<&[usize]> {
        match self {
            JSubsetWitness::ApartmentInParabolic { iso, .. }
            | JSubsetWitness::First { iso, .. }
            | JSubsetWitness::Second { iso, .. } => Some(iso),
            JSubsetWitness::NotJSubset { .. } => None,
        }
    }

    pub fn lower(&self) -> Option<&Subspace> {
        match self {
            JSubsetWitness::ApartmentInParabolic { lower, .. }
            | JSubsetWitness::First { lower, .. } => Some(lower),
            _ => None,
        }
    }

    pub fn upper(&self) -> Option<&Subspace> {
        match self {
            JSubsetWitness::ApartmentInParabolic { upper, .. }
            | JSubsetWitness::Second { upper, .. } => Some(upper),
            _ => None,
        }
    }
}

fn not_j(reason: impl Into<String>) -> JSubsetWitness {
    JSubsetWitness::NotJSubset {
        reason: reason.into(),
    }
}

/// Decides whether `members` is a J(n,k)-subset and recovers its witness.
///
/// k > n−k is folded onto n−k through the complement isomorphism of the
/// Johnson graph; the member set is unchanged by that reduction. A failed
/// witness reconstruction on a set that does admit a distance bijection is
/// an invariant violation, never a quiet `NotJSubset`.
pub fn classify_j_subset(members: &[Subspace], n: usize, k: usize) -> Result<JSubsetWitness> {
    if k == 0 || k >= n {
        return Err(Error::domain("classify needs 1 <= k <= n-1"));
    }
    let k = k.min(n - k);
    let expected = binomial(n, k);
    if members.len() as u128 != expected {
        return Ok(not_j(format!(
            "expected {expected} members, got {}",
            members.len()
        )));
    }
    let first = &members[0];
    if members
        .iter()
        .any(|m| m.p() != first.p() || m.ambient() != first.ambient())
    {
        return Err(Error::domain("members live in different ambient spaces"));
    }
    if members.iter().any(|m| m.dim() != first.dim()) {
        return Ok(not_j("members have unequal dimensions"));
    }
    let distinct: HashSet<&Subspace> = members.iter().collect();
    if distinct.len() != members.len() {
        return Ok(not_j("members are not distinct"));
    }
    if first.dim() < k {
        return Ok(not_j("member dimension is below k"));
    }

    let subsets: Vec<KSubset> = k_subsets(n, k)
        .into_iter()
        .map(|e| KSubset::new(n, e).expect("valid subset"))
        .collect();
    let jd = johnson_matrix(&subsets);
    let md = member_matrix(members)?;
    let Some(iso) = find_distance_bijection(&jd, &md) else {
        return Ok(not_j("no distance-preserving index bijection exists"));
    };

    if n == 2 * k {
        // the complement automorphism of J(2k,k) can flip the orientation
        // the point recovery needs; try both
        if let Some(w) = try_parabolic(members, &subsets, &iso)? {
            return Ok(w);
        }
        let flipped = complement_iso(&subsets, &iso);
        if let Some(w) = try_parabolic(members, &subsets, &flipped)? {
            return Ok(w);
        }
        return Err(Error::invariant(
            "distance bijection exists but parabolic witness recovery failed",
        ));
    }

    if k == 1 {
        // a clique: lies in a star (first) or a top (second)
        if let Some(w) = try_first(members, &subsets, &iso)? {
            return Ok(w);
        }
        if let Some(w) = try_second(members, &subsets, &iso)? {
            return Ok(w);
        }
        return Err(Error::invariant(
            "clique is in neither a star nor a top, which cannot happen",
        ));
    }

    // 2 <= k < n-k: the star/top sizes decide the type
    let (star_size, top_size) = adjacent_pair_clique_sizes(members, &iso, &jd)?;
    let witness = if (star_size, top_size) == (n - k + 1, k + 1) {
        try_first(members, &subsets, &iso)?
    } else if (star_size, top_size) == (k + 1, n - k + 1) {
        try_second(members, &subsets, &iso)?
    } else {
        return Err(Error::invariant(format!(
            "star/top sizes ({star_size},{top_size}) match neither type at (n,k) = ({n},{k})"
        )));
    };
    witness.ok_or_else(|| {
        Error::invariant(format!(
            "type decided by star/top sizes ({star_size},{top_size}) but witness recovery failed"
        ))
    })
}

fn johnson_matrix(subsets: &[KSubset]) -> Vec<Vec<usize>> {
    subsets
        .iter()
        .map(|a| {
            subsets
                .iter()
                .map(|b| a.k() - a.intersection_size(b))
                .collect()
        })
        .collect()
}

fn member_matrix(members: &[Subspace]) -> Result<Vec<Vec<usize>>> {
    members
        .iter()
        .map(|a| {
            members
                .iter()
                .map(|b| grassmann_distance(a, b))
                .collect::<Result<_>>()
        })
        .collect()
}

/// Backtracking search for a bijection matching the two distance matrices.
/// Vertices are assigned in a connectivity-first order and candidates are
/// prefiltered by sorted distance profiles.
fn find_distance_bijection(jd: &[Vec<usize>], md: &[Vec<usize>]) -> Option<Vec<usize>> {
    let s = jd.len();
    if md.len() != s {
        return None;
    }
    let profile = |row: &Vec<usize>| {
        let mut p = row.clone();
        p.sort_unstable();
        p
    };
    let jprof: Vec<Vec<usize>> = jd.iter().map(profile).collect();
    let mprof: Vec<Vec<usize>> = md.iter().map(profile).collect();

    // order: repeatedly take the unassigned vertex with the most already
    // ordered neighbors (ties to the lowest index)
    let mut order = Vec::with_capacity(s);
    let mut placed = vec![false; s];
    order.push(0);
    placed[0] = true;
    while order.len() < s {
        let next = (0..s)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                order
                    .iter()
                    .filter(|&&w| jd[v][w] == 1)
                    .count()
            })
            .expect("vertex left");
        order.push(next);
        placed[next] = true;
    }

    let mut assigned = vec![usize::MAX; s]; // johnson vertex -> member
    let mut used = vec![false; s];
    fn dfs(
        pos: usize,
        order: &[usize],
        jd: &[Vec<usize>],
        md: &[Vec<usize>],
        jprof: &[Vec<usize>],
        mprof: &[Vec<usize>],
        assigned: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for m in 0..md.len() {
            if used[m] || jprof[v] != mprof[m] {
                continue;
            }
            if order[..pos]
                .iter()
                .any(|&w| md[assigned[w]][m] != jd[w][v])
            {
                continue;
            }
            assigned[v] = m;
            used[m] = true;
            if dfs(pos + 1, order, jd, md, jprof, mprof, assigned, used) {
                return true;
            }
            used[m] = false;
            assigned[v] = usize::MAX;
        }
        false
    }
    dfs(0, &order, jd, md, &jprof, &mprof, &mut assigned, &mut used).then_some(assigned)
}

fn complement_iso(subsets: &[KSubset], iso: &[usize]) -> Vec<usize> {
    let n = subsets[0].n();
    subsets
        .iter()
        .map(|a| {
            let c = a.complement();
            let rank = crate::combin::subset_rank(n, c.elems());
            iso[rank]
        })
        .collect()
}

fn intersect_all(members: &[Subspace]) -> Result<Subspace> {
    let mut it = members.iter();
    let mut acc = it.next().expect("nonempty").clone();
    for m in it {
        acc = acc.intersect(m)?;
    }
    Ok(acc)
}

fn sum_all(members: &[Subspace]) -> Result<Subspace> {
    let mut it = members.iter();
    let mut acc = it.next().expect("nonempty").clone();
    for m in it {
        acc = acc.sum(m)?;
    }
    Ok(acc)
}

/// Intersection of the members whose index subset contains i, one per index.
fn index_meets(
    members: &[Subspace],
    subsets: &[KSubset],
    iso: &[usize],
) -> Result<Vec<Subspace>> {
    let n = subsets[0].n();
    (1..=n)
        .map(|i| {
            let selected: Vec<Subspace> = subsets
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(i))
                .map(|(r, _)| members[iso[r]].clone())
                .collect();
            intersect_all(&selected)
        })
        .collect()
}

fn index_sums(members: &[Subspace], subsets: &[KSubset], iso: &[usize]) -> Result<Vec<Subspace>> {
    let n = subsets[0].n();
    (1..=n)
        .map(|i| {
            let selected: Vec<Subspace> = subsets
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(i))
                .map(|(r, _)| members[iso[r]].clone())
                .collect();
            sum_all(&selected)
        })
        .collect()
}

fn try_parabolic(
    members: &[Subspace],
    subsets: &[KSubset],
    iso: &[usize],
) -> Result<Option<JSubsetWitness>> {
    let k = subsets[0].k();
    let kp = members[0].dim();
    if kp < k {
        return Ok(None);
    }
    let lower = intersect_all(members)?;
    let upper = sum_all(members)?;
    if lower.dim() != kp - k || upper.dim() != kp + k {
        return Ok(None);
    }
    let points = index_meets(members, subsets, iso)?;
    for t in &points {
        if t.dim() != kp - k + 1 || !t.contains(&lower) || !upper.contains(t) {
            return Ok(None);
        }
    }
    // members must be exactly the sums of their index points
    for (r, a) in subsets.iter().enumerate() {
        let mut acc = lower.clone();
        for &i in a.elems() {
            acc = acc.sum(&points[i - 1])?;
        }
        if acc != members[iso[r]] {
            return Ok(None);
        }
    }
    // the pushed points must form a base of the 2k-dimensional quotient
    let carrier = quotient_push(&upper, &lower)?;
    let reps: Vec<Vec<u32>> = points
        .iter()
        .map(|t| {
            let line = push_into_model(t, &lower, &carrier)?;
            Ok(line.basis().row(0).to_vec())
        })
        .collect::<Result<_>>()?;
    if !is_m_independent(members[0].p(), &reps, 2 * k).unwrap_or(false) {
        return Ok(None);
    }
    Ok(Some(JSubsetWitness::ApartmentInParabolic {
        lower,
        upper,
        points,
        iso: iso.to_vec(),
    }))
}

fn try_first(
    members: &[Subspace],
    subsets: &[KSubset],
    iso: &[usize],
) -> Result<Option<JSubsetWitness>> {
    let k = subsets[0].k();
    let kp = members[0].dim();
    if kp < k {
        return Ok(None);
    }
    let lower = intersect_all(members)?;
    if lower.dim() != kp - k {
        return Ok(None);
    }
    let meets = index_meets(members, subsets, iso)?;
    let mut vectors = Vec::with_capacity(meets.len());
    for t in &meets {
        if t.dim() != kp - k + 1 || !t.contains(&lower) {
            return Ok(None);
        }
        let line = quotient_push(t, &lower)?;
        vectors.push(line.basis().row(0).to_vec());
    }
    let p = members[0].p();
    if !is_m_independent(p, &vectors, 2 * k).unwrap_or(false) {
        return Ok(None);
    }
    // reconstruction: every member is the lift of the span of its vectors
    let quotient_n = members[0].ambient() - lower.dim();
    for (r, a) in subsets.iter().enumerate() {
        let rows: Vec<Vec<u32>> = a.elems().iter().map(|&i| vectors[i - 1].clone()).collect();
        let rebuilt = quotient_lift(&Subspace::span(p, quotient_n, &rows)?, &lower)?;
        if rebuilt != members[iso[r]] {
            return Ok(None);
        }
    }
    Ok(Some(JSubsetWitness::First {
        lower,
        vectors,
        iso: iso.to_vec(),
    }))
}

fn try_second(
    members: &[Subspace],
    subsets: &[KSubset],
    iso: &[usize],
) -> Result<Option<JSubsetWitness>> {
    let k = subsets[0].k();
    let kp = members[0].dim();
    let upper = sum_all(members)?;
    if upper.dim() != kp + k {
        return Ok(None);
    }
    let sums = index_sums(members, subsets, iso)?;
    let p = members[0].p();
    let mut vectors = Vec::with_capacity(sums.len());
    for u in &sums {
        if u.dim() != kp + k - 1 || !upper.contains(u) {
            return Ok(None);
        }
        // dual generator of the hyperplane inside the model of `upper`
        let in_model = crate::subspaces::coords_in(u, &upper)?;
        let line = in_model.annihilator();
        if line.dim() != 1 {
            return Ok(None);
        }
        vectors.push(line.basis().row(0).to_vec());
    }
    if !is_m_independent(p, &vectors, 2 * k).unwrap_or(false) {
        return Ok(None);
    }
    // reconstruction: each member is the intersection of its hyperplanes,
    // i.e. the annihilator (in the model) of the span of its dual vectors
    let model_n = upper.dim();
    for (r, a) in subsets.iter().enumerate() {
        let rows: Vec<Vec<u32>> = a.elems().iter().map(|&i| vectors[i - 1].clone()).collect();
        let expected = Subspace::span(p, model_n, &rows)?.annihilator();
        let actual = crate::subspaces::coords_in(&members[iso[r]], &upper)?;
        if expected != actual {
            return Ok(None);
        }
    }
    Ok(Some(JSubsetWitness::Second {
        upper,
        vectors,
        iso: iso.to_vec(),
    }))
}

/// Star/top sizes seen at one adjacent member pair (ranks 0 and 1 in lex
/// order are always Johnson-adjacent).
fn adjacent_pair_clique_sizes(
    members: &[Subspace],
    iso: &[usize],
    jd: &[Vec<usize>],
) -> Result<(usize, usize)> {
    debug_assert_eq!(jd[0][1], 1);
    let p = &members[iso[0]];
    let q = &members[iso[1]];
    let meet = p.intersect(q)?;
    let join = p.sum(q)?;
    let star = members.iter().filter(|m| m.contains(&meet)).count();
    let top = members.iter().filter(|m| join.contains(m)).count();
    Ok((star, top))
}

/// Sizes of all stars and tops of a family, keyed by the witnessing
/// (k'−1)- and (k'+1)-subspaces; only cliques with at least two members
/// appear, matching how stars and tops of a J-subset are defined.
pub fn star_top_census(
    members: &[Subspace],
) -> Result<(BTreeMap<Subspace, usize>, BTreeMap<Subspace, usize>)> {
    let mut stars = BTreeMap::new();
    let mut tops = BTreeMap::new();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if grassmann_distance(a, b)? != 1 {
                continue;
            }
            let meet = a.intersect(b)?;
            let join = a.sum(b)?;
            stars
                .entry(meet.clone())
                .or_insert_with(|| members.iter().filter(|m| m.contains(&meet)).count());
            tops.entry(join.clone())
                .or_insert_with(|| members.iter().filter(|m| join.contains(m)).count());
        }
    }
    Ok((stars, tops))
}

/// Result of an exhaustive (or budget-cut) search for all J(n,k)-subsets of
/// a Grassmann graph.
#[derive(Debug)]
pub struct JSubsetSearch {
    /// sorted member-id sets with their witnesses
    pub found: Vec<(Vec<usize>, JSubsetWitness)>,
    pub exhaustive: bool,
    pub nodes: u64,
}

/// Enumerates every vertex set of `g` whose induced metric is J(n,k), by
/// backtracking over Johnson vertices with distance-matrix pruning, then
/// classifies each. Exceeding `budget` search nodes stops the search and
/// marks the result non-exhaustive.
pub fn find_all_j_subsets(
    g: &GrassmannGraph,
    n: usize,
    k: usize,
    budget: u64,
) -> Result<JSubsetSearch> {
    if k == 0 || k >= n {
        return Err(Error::domain("find_all_j_subsets needs 1 <= k <= n-1"));
    }
    let k = k.min(n - k);
    let size = binomial(n, k) as usize;
    let v = g.vertex_count();
    if size > v {
        return Ok(JSubsetSearch {
            found: Vec::new(),
            exhaustive: true,
            nodes: 0,
        });
    }
    let subsets: Vec<KSubset> = k_subsets(n, k)
        .into_iter()
        .map(|e| KSubset::new(n, e).expect("valid subset"))
        .collect();
    let jd = johnson_matrix(&subsets);
    // all-pairs closed-form distances of the host graph
    let md: Vec<Vec<usize>> = exec::indexed_map(v, |a| {
        (0..v)
            .map(|b| grassmann_distance(g.vertex(a), g.vertex(b)).expect("same k"))
            .collect()
    });

    struct Search<'a> {
        jd: &'a [Vec<usize>],
        md: &'a [Vec<usize>],
        budget: u64,
        nodes: u64,
        exhausted: bool,
        assigned: Vec<usize>,
        used: Vec<bool>,
        found: HashSet<Vec<usize>>,
    }
    impl Search<'_> {
        fn dfs(&mut self, pos: usize) {
            if self.exhausted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            if pos == self.jd.len() {
                let mut set = self.assigned.clone();
                set.sort_unstable();
                self.found.insert(set);
                return;
            }
            for m in 0..self.md.len() {
                if self.used[m] {
                    continue;
                }
                if (0..pos).any(|w| self.md[self.assigned[w]][m] != self.jd[w][pos]) {
                    continue;
                }
                self.assigned.push(m);
                self.used[m] = true;
                self.dfs(pos + 1);
                self.assigned.pop();
                self.used[m] = false;
            }
        }
    }
    let mut search = Search {
        jd: &jd,
        md: &md,
        budget,
        nodes: 0,
        exhausted: false,
        assigned: Vec::with_capacity(size),
        used: vec![false; v],
        found: HashSet::new(),
    };
    search.dfs(0);

    let mut sets: Vec<Vec<usize>> = search.found.into_iter().collect();
    sets.sort();
    let classified: Vec<Result<(Vec<usize>, JSubsetWitness)>> = exec::slice_map(&sets, |set| {
        let members: Vec<Subspace> = set.iter().map(|&i| g.vertex(i).clone()).collect();
        let witness = classify_j_subset(&members, n, k)?;
        if !witness.is_j_subset() {
            return Err(Error::invariant(format!(
                "set {set:?} has the J({n},{k}) metric but failed classification: {witness:?}"
            )));
        }
        Ok((set.clone(), witness))
    });
    let found = classified.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(JSubsetSearch {
        found,
        exhaustive: !search.exhausted,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartments::{gf2_four_independent_five_set, Apartment, Frame, JFamily};
    use crate::finfield::Prime;

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn apartment_classifies_as_parabolic_with_trivial_bounds() {
        let apt = Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap();
        let w = classify_j_subset(apt.members(), 4, 2).unwrap();
        match &w {
            JSubsetWitness::ApartmentInParabolic { lower, upper, points, .. } => {
                assert!(lower.is_zero());
                assert!(upper.is_full());
                assert_eq!(points.len(), 4);
                for pt in points {
                    assert_eq!(pt.dim(), 1);
                }
            }
            other => panic!("expected parabolic witness, got {other:?}"),
        }
    }

    #[test]
    fn five_set_family_classifies_first_type() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let w = classify_j_subset(fam.members(), 5, 2).unwrap();
        match &w {
            JSubsetWitness::First { lower, vectors, .. } => {
                assert!(lower.is_zero());
                assert_eq!(vectors.len(), 5);
                // recovered points match the generating set up to scalars
                let original: HashSet<Subspace> = gf2_four_independent_five_set()
                    .iter()
                    .map(|v| Subspace::line(gf(2), v).unwrap())
                    .collect();
                let recovered: HashSet<Subspace> = vectors
                    .iter()
                    .map(|v| Subspace::line(gf(2), v).unwrap())
                    .collect();
                assert_eq!(original, recovered);
            }
            other => panic!("expected first type, got {other:?}"),
        }
    }

    #[test]
    fn dual_five_set_family_classifies_second_type() {
        let fam =
            JFamily::dual_from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let w = classify_j_subset(fam.members(), 5, 2).unwrap();
        assert_eq!(w.kind_name(), "second");
    }

    #[test]
    fn annihilator_changes_type() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let duals: Vec<Subspace> = fam.members().iter().map(|m| m.annihilator()).collect();
        let w = classify_j_subset(&duals, 5, 2).unwrap();
        assert_eq!(w.kind_name(), "second");
    }

    #[test]
    fn star_top_sizes_follow_the_type() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let (stars, tops) = star_top_census(fam.members()).unwrap();
        // first type at (n,k) = (5,2): stars of n-k+1 = 4, tops of k+1 = 3
        assert!(stars.values().all(|&s| s == 4));
        assert!(tops.values().all(|&t| t == 3));
        let duals: Vec<Subspace> = fam.members().iter().map(|m| m.annihilator()).collect();
        let (stars_d, tops_d) = star_top_census(&duals).unwrap();
        assert!(stars_d.values().all(|&s| s == 3));
        assert!(tops_d.values().all(|&t| t == 4));
    }

    #[test]
    fn perturbed_member_set_is_rejected() {
        let fam = JFamily::from_vectors(gf(2), 4, &gf2_four_independent_five_set(), 2).unwrap();
        let mut members = fam.members().to_vec();
        // replace one member with a subspace that breaks the metric
        let replacement = Subspace::span(gf(2), 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert!(fam.member_rank(&replacement).is_none());
        members[0] = replacement;
        let w = classify_j_subset(&members, 5, 2).unwrap();
        assert!(!w.is_j_subset());
    }

    #[test]
    fn wrong_cardinality_is_not_a_j_subset() {
        let apt = Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap();
        let members = &apt.members()[..5];
        let w = classify_j_subset(members, 4, 2).unwrap();
        assert!(!w.is_j_subset());
    }

    #[test]
    fn triangle_of_lines_classifies_for_k_one() {
        let p = gf(2);
        let members = vec![
            Subspace::line(p, &[1, 0, 0]).unwrap(),
            Subspace::line(p, &[0, 1, 0]).unwrap(),
            Subspace::line(p, &[0, 0, 1]).unwrap(),
        ];
        let w = classify_j_subset(&members, 3, 1).unwrap();
        assert!(w.is_j_subset());
    }

    #[test]
    fn find_all_j31_subsets_in_gamma_1_are_the_triples() {
        let g = GrassmannGraph::new(gf(2), 3, 1).unwrap();
        let search = find_all_j_subsets(&g, 3, 1, 10_000_000).unwrap();
        assert!(search.exhaustive);
        assert_eq!(search.found.len() as u128, binomial(7, 3));
    }

    #[test]
    fn find_all_budget_cut_is_flagged() {
        let g = GrassmannGraph::new(gf(2), 4, 2).unwrap();
        let search = find_all_j_subsets(&g, 4, 2, 50).unwrap();
        assert!(!search.exhaustive);
    }
}
