//! Apartments and indexed J-families: frames of projective points, the
//! families J_k(X) spanned by (2k)-independent vector sets (and their dual
//! intersection-of-hyperplanes form), special / inexact / complement
//! subsets, the apartment graph with its constructive connectivity
//! algorithm, and the mixed-type intersection analysis.

mod graph;
mod inexact;
mod marked;
mod mixed;

pub use graph::{apartment_graph, apartments_adjacent, connect_apartments, ApartmentGraph};
pub use inexact::{family_intersections, is_inexact, maximal_inexact_subsets, InexactVerdict};
pub use marked::{
    a_of, b_of, complement_subsets, distance_via_complements, special_subsets, MarkKind,
    MarkedSubset,
};
pub use mixed::{
    mixed_intersection, search_mixed_configs, search_mixed_configs_sequential, MixedConfig,
    MixedIntersection, MixedSearch,
};

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combin::{binomial, k_subsets};
use crate::exec;
use crate::finfield::{violating_subset, Matrix, Prime};
use crate::graphs::{grassmann_distance, johnson_distance, GrassmannGraph, KSubset};
use crate::subspaces::Subspace;
use crate::{Error, Result};

/// An ordered frame: n one-dimensional subspaces of GF(p)^n whose canonical
/// representatives are linearly independent. A frame is a base of V
/// considered modulo scalars.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    points: Vec<Subspace>,
}

impl Frame {
    pub fn new(points: Vec<Subspace>) -> Result<Frame> {
        let Some(first) = points.first() else {
            return Err(Error::domain("frame: no points"));
        };
        let n = first.ambient();
        let p = first.p();
        if points.len() != n {
            return Err(Error::domain(format!(
                "frame: {} points in ambient dimension {n}",
                points.len()
            )));
        }
        if points.iter().any(|pt| pt.ambient() != n || pt.p() != p) {
            return Err(Error::domain("frame: mixed ambient spaces"));
        }
        if points.iter().any(|pt| pt.dim() != 1) {
            return Err(Error::domain("frame: every point must be one-dimensional"));
        }
        let reps: Vec<Vec<u32>> = points.iter().map(|pt| pt.basis().row(0).to_vec()).collect();
        if Matrix::from_rows(p, &reps)?.rank() != n {
            return Err(Error::domain("frame: representatives are dependent"));
        }
        Ok(Frame { points })
    }

    /// Builds a frame from representative vectors, canonicalizing each point.
    pub fn from_vectors(p: Prime, n: usize, vectors: &[Vec<u32>]) -> Result<Frame> {
        let points = vectors
            .iter()
            .map(|v| {
                if v.len() != n {
                    return Err(Error::AmbientMismatch(v.len(), n));
                }
                Subspace::line(p, v)
            })
            .collect::<Result<Vec<_>>>()?;
        Frame::new(points)
    }

    /// The frame of the standard basis e_1, …, e_n.
    pub fn standard(p: Prime, n: usize) -> Frame {
        let vectors: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        Frame::from_vectors(p, n, &vectors).expect("standard basis is independent")
    }

    /// A random frame: rejection-sample vectors until they are independent.
    pub fn random(p: Prime, n: usize, rng: &mut impl Rng) -> Frame {
        let q = p.get();
        loop {
            let vectors: Vec<Vec<u32>> = (0..n)
                .map(|_| (0..n).map(|_| rng.random_range(0..q)).collect())
                .collect();
            if vectors.iter().any(|v| v.iter().all(|&e| e == 0)) {
                continue;
            }
            if let Ok(f) = Frame::from_vectors(p, n, &vectors) {
                return f;
            }
        }
    }

    pub fn p(&self) -> Prime {
        self.points[0].p()
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Subspace] {
        &self.points
    }

    /// Canonical representative vector of point `i` (0-based).
    pub fn representative(&self, i: usize) -> &[u32] {
        self.points[i].basis().row(0)
    }

    pub fn representatives(&self) -> Vec<Vec<u32>> {
        (0..self.n())
            .map(|i| self.representative(i).to_vec())
            .collect()
    }

    /// The unordered point set; two bases span the same apartment exactly
    /// when these sets coincide.
    pub fn point_set(&self) -> BTreeSet<Subspace> {
        self.points.iter().cloned().collect()
    }

    /// Same frame with points in canonical sorted order.
    pub fn canonical(&self) -> Frame {
        let mut points = self.points.clone();
        points.sort();
        Frame { points }
    }
}

/// Which construction produced an indexed family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// members are spans of k-subsets of X
    Spans,
    /// members are annihilators of spans of k-subsets of Y (equivalently,
    /// intersections of the hyperplanes y⁰)
    DualIntersections,
}

/// An indexed family: one subspace per k-subset of {1..n}, built either as
/// J_k(X) (spans) or J*_k(Y) (hyperplane intersections). Apartments are the
/// special case where X is a base.
#[derive(Debug, Clone)]
pub struct JFamily {
    p: Prime,
    ambient: usize,
    k: usize,
    kind: FamilyKind,
    vectors: Vec<Vec<u32>>,
    subsets: Vec<KSubset>,
    members: Vec<Subspace>,
    member_index: HashMap<Subspace, usize>,
}

impl JFamily {
    /// J_k(X) for a (2k)-independent X of n ≥ 2k vectors: member(A) is the
    /// span of {x_i : i ∈ A}. Errors name a violating 2k-subset.
    pub fn from_vectors(
        p: Prime,
        ambient: usize,
        vectors: &[Vec<u32>],
        k: usize,
    ) -> Result<JFamily> {
        let n = vectors.len();
        if n < 2 * k {
            return Err(Error::domain(format!(
                "family needs n >= 2k, got n = {n}, k = {k}"
            )));
        }
        if let Some(bad) = violating_subset(p, vectors, 2 * k)? {
            return Err(Error::domain(format!(
                "vectors are not {}-independent: subset {bad:?} (0-based) is dependent",
                2 * k
            )));
        }
        Self::build(p, ambient, vectors, k, FamilyKind::Spans)
    }

    /// J*_k(Y) inside U ≅ GF(p)^ambient: member(A) is the annihilator of
    /// span{y_i : i ∈ A}, i.e. the intersection of the k hyperplanes y_i⁰.
    pub fn dual_from_vectors(
        p: Prime,
        ambient: usize,
        dual_vectors: &[Vec<u32>],
        k: usize,
    ) -> Result<JFamily> {
        let n = dual_vectors.len();
        if n < 2 * k {
            return Err(Error::domain(format!(
                "family needs n >= 2k, got n = {n}, k = {k}"
            )));
        }
        if let Some(bad) = violating_subset(p, dual_vectors, 2 * k)? {
            return Err(Error::domain(format!(
                "dual vectors are not {}-independent: subset {bad:?} (0-based) is dependent",
                2 * k
            )));
        }
        Self::build(p, ambient, dual_vectors, k, FamilyKind::DualIntersections)
    }

    fn build(
        p: Prime,
        ambient: usize,
        vectors: &[Vec<u32>],
        k: usize,
        kind: FamilyKind,
    ) -> Result<JFamily> {
        let n = vectors.len();
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::domain("family vectors must share the ambient space"));
        }
        if k == 0 || k >= n {
            return Err(Error::domain(format!(
                "family needs 0 < k < n, got k = {k}, n = {n}"
            )));
        }
        let subsets: Vec<KSubset> = k_subsets(n, k)
            .into_iter()
            .map(|elems| KSubset::new(n, elems).expect("valid subset"))
            .collect();
        let members: Vec<Subspace> = subsets
            .iter()
            .map(|a| {
                let rows: Vec<Vec<u32>> = a
                    .elems()
                    .iter()
                    .map(|&i| vectors[i - 1].clone())
                    .collect();
                let span = Subspace::span(p, ambient, &rows)?;
                Ok(match kind {
                    FamilyKind::Spans => span,
                    FamilyKind::DualIntersections => span.annihilator(),
                })
            })
            .collect::<Result<_>>()?;
        let mut member_index = HashMap::with_capacity(members.len());
        for (r, m) in members.iter().enumerate() {
            if member_index.insert(m.clone(), r).is_some() {
                return Err(Error::invariant(format!(
                    "family member map is not injective at {m:?}"
                )));
            }
        }
        Ok(JFamily {
            p,
            ambient,
            k,
            kind,
            vectors: vectors.to_vec(),
            subsets,
            members,
            member_index,
        })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index subsets in lex order; `members()[r]` belongs to `subsets()[r]`.
    pub fn subsets(&self) -> &[KSubset] {
        &self.subsets
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn member(&self, subset: &KSubset) -> Result<&Subspace> {
        if subset.n() != self.n() || subset.k() != self.k {
            return Err(Error::domain("member: subset has wrong (n, k)"));
        }
        let rank = crate::combin::subset_rank(self.n(), subset.elems());
        Ok(&self.members[rank])
    }

    pub fn member_rank(&self, s: &Subspace) -> Option<usize> {
        self.member_index.get(s).copied()
    }

    pub fn member_set(&self) -> BTreeSet<Subspace> {
        self.members.iter().cloned().collect()
    }

    /// The hyperplanes y_i⁰ of a dual family.
    pub fn hyperplanes(&self) -> Result<Vec<Subspace>> {
        if self.kind != FamilyKind::DualIntersections {
            return Err(Error::domain("hyperplanes: not a dual family"));
        }
        self.vectors
            .iter()
            .map(|y| Ok(Subspace::line(self.p, y)?.annihilator()))
            .collect()
    }

    /// First pair whose member distance differs from the Johnson distance
    /// of the index sets, if any. `None` certifies the family is the image
    /// of an isometric embedding of J(n,k).
    pub fn johnson_isometry_violation(&self) -> Result<Option<(KSubset, KSubset)>> {
        for (ra, a) in self.subsets.iter().enumerate() {
            for (rb, b) in self.subsets.iter().enumerate().skip(ra + 1) {
                let dj = johnson_distance(a, b)?;
                let dg = grassmann_distance(&self.members[ra], &self.members[rb])?;
                if dj != dg {
                    return Ok(Some((a.clone(), b.clone())));
                }
            }
        }
        Ok(None)
    }
}

/// An apartment of G_k(V): the C(n,k) subspaces spanned by k-subsets of a
/// frame. Identity is decided by the unordered frame point set.
#[derive(Debug, Clone)]
pub struct Apartment {
    frame: Frame,
    family: JFamily,
}

impl PartialEq for Apartment {
    fn eq(&self, other: &Self) -> bool {
        self.family.k == other.family.k && self.frame.point_set() == other.frame.point_set()
    }
}

impl Eq for Apartment {}

impl Apartment {
    /// All C(n,k) members spanned by k-subsets of the frame.
    pub fn from_frame(frame: Frame, k: usize) -> Result<Apartment> {
        let n = frame.n();
        if k == 0 || k >= n {
            return Err(Error::domain(format!(
                "apartment needs 1 <= k <= n-1, got k = {k}, n = {n}"
            )));
        }
        let family = JFamily::build(
            frame.p(),
            n,
            &frame.representatives(),
            k,
            FamilyKind::Spans,
        )?;
        Ok(Apartment { frame, family })
    }

    /// An apartment whose member set contains both `s` and `u`, built by
    /// extending a basis adapted to s∩u ⊆ s, u ⊆ s+u to a basis of V.
    pub fn containing(s: &Subspace, u: &Subspace) -> Result<Apartment> {
        if s.dim() != u.dim() {
            return Err(Error::domain("containing: subspaces of unequal dimension"));
        }
        let p = s.p();
        let n = s.ambient();
        let k = s.dim();
        if k == 0 || k >= n {
            return Err(Error::domain("containing: need 1 <= k <= n-1"));
        }
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n);
        let mut rank = 0usize;
        let mut extend_by = |cands: Vec<Vec<u32>>, rows: &mut Vec<Vec<u32>>| -> Result<()> {
            for v in cands {
                let mut trial = rows.clone();
                trial.push(v.clone());
                let r = Matrix::from_rows(p, &trial)?.rank();
                if r > rank {
                    rows.push(v);
                    rank = r;
                }
            }
            Ok(())
        };
        extend_by(s.intersect(u)?.basis().row_vecs(), &mut rows)?;
        extend_by(s.basis().row_vecs(), &mut rows)?;
        extend_by(u.basis().row_vecs(), &mut rows)?;
        let standard: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        extend_by(standard, &mut rows)?;
        let apartment = Apartment::from_frame(Frame::from_vectors(p, n, &rows)?, k)?;
        debug_assert!(apartment.member_set().contains(s));
        debug_assert!(apartment.member_set().contains(u));
        Ok(apartment)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn k(&self) -> usize {
        self.family.k()
    }

    pub fn family(&self) -> &JFamily {
        &self.family
    }

    pub fn member(&self, subset: &KSubset) -> Result<&Subspace> {
        self.family.member(subset)
    }

    pub fn members(&self) -> &[Subspace] {
        self.family.members()
    }

    pub fn member_set(&self) -> BTreeSet<Subspace> {
        self.family.member_set()
    }

    /// Member vertex ids inside a Grassmann graph, indexed by subset rank.
    pub fn member_ids(&self, g: &GrassmannGraph) -> Result<Vec<usize>> {
        self.members()
            .iter()
            .map(|m| {
                g.vertex_id(m).ok_or_else(|| {
                    Error::invariant(format!("apartment member {m:?} is not a graph vertex"))
                })
            })
            .collect()
    }
}

/// Enumerates one apartment per unordered frame of GF(p)^n, in the
/// deterministic order induced by sorted projective points.
///
/// The candidate space is all n-subsets of projective points; `budget`
/// bounds how many candidates may be examined and the enumeration refuses
/// to start beyond it.
pub fn all_apartments(p: Prime, n: usize, k: usize, budget: u64) -> Result<Vec<Apartment>> {
    all_apartments_impl(p, n, k, budget, false)
}

/// Single-threaded reference for [`all_apartments`]; identical output.
pub fn all_apartments_sequential(
    p: Prime,
    n: usize,
    k: usize,
    budget: u64,
) -> Result<Vec<Apartment>> {
    all_apartments_impl(p, n, k, budget, true)
}

fn all_apartments_impl(
    p: Prime,
    n: usize,
    k: usize,
    budget: u64,
    sequential: bool,
) -> Result<Vec<Apartment>> {
    let points = crate::subspaces::enumerate_subspaces(p, n, 1);
    let combos = binomial(points.len(), n);
    if combos > budget as u128 {
        return Err(Error::Budget {
            examined: combos.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    let candidates = k_subsets(points.len(), n);
    let make = |idx: &Vec<usize>| -> Option<Apartment> {
        let picked: Vec<Subspace> = idx.iter().map(|&i| points[i - 1].clone()).collect();
        let reps: Vec<Vec<u32>> = picked.iter().map(|pt| pt.basis().row(0).to_vec()).collect();
        if Matrix::from_rows(p, &reps).ok()?.rank() != n {
            return None;
        }
        let frame = Frame::new(picked).ok()?;
        Apartment::from_frame(frame, k).ok()
    };
    let apartments = if sequential {
        exec::slice_filter_map_seq(&candidates, make)
    } else {
        exec::slice_filter_map(&candidates, make)
    };
    Ok(apartments)
}

/// Convenience: the apartment of a random frame.
pub fn random_apartment(p: Prime, n: usize, k: usize, rng: &mut impl Rng) -> Result<Apartment> {
    Apartment::from_frame(Frame::random(p, n, rng), k)
}

/// The 4-independent five-element set {e1, e2, e3, e4, e1+e2+e3+e4} of
/// GF(2)^4: the standard small example of a non-base (2k)-independent set.
pub fn gf2_four_independent_five_set() -> Vec<Vec<u32>> {
    let mut vectors: Vec<Vec<u32>> = (0..4)
        .map(|i| (0..4).map(|j| u32::from(i == j)).collect())
        .collect();
    vectors.push(vec![1, 1, 1, 1]);
    vectors
}

pub(crate) fn check_same_parameters(a: &Apartment, b: &Apartment) -> Result<()> {
    if a.frame.p() != b.frame.p() {
        return Err(Error::ModulusMismatch(a.frame.p().get(), b.frame.p().get()));
    }
    if a.frame.n() != b.frame.n() || a.k() != b.k() {
        return Err(Error::domain("apartments live in different Grassmannians"));
    }
    Ok(())
}
