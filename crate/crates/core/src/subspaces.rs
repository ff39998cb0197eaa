//! Canonical subspace values of GF(p)^n and the lattice operations on them:
//! span, sum, intersection, containment, annihilator duality, quotient
//! push/lift, and parabolic intervals [S, U]_k.
//!
//! A `Subspace` is always held as an RREF basis with zero rows removed, so
//! value equality coincides with equality of row spaces. The dual space is
//! identified with GF(p)^n through the standard dot product, which makes the
//! annihilator simply the kernel of the basis matrix. Quotients V/S get the
//! concrete coordinate model indexed by the non-pivot columns of S's basis.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combin::gaussian_binomial;
use crate::finfield::{digits_to_row, row_to_digits, Matrix, Prime};
use crate::{Error, Result};

/// A k-dimensional subspace of GF(p)^n in canonical (RREF) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of arbitrary row vectors; the empty list gives the zero subspace.
    pub fn span(p: Prime, n: usize, vectors: &[Vec<u32>]) -> Result<Subspace> {
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::domain(format!(
                "span: vectors must all live in GF({})^{n}",
                p.get()
            )));
        }
        let m = Matrix::from_rows(p, vectors)?;
        Ok(Subspace::from_matrix_cols(&m, n))
    }

    /// Canonicalizes the row space of `m` into a subspace of GF(p)^cols.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        Subspace::from_matrix_cols(m, m.cols())
    }

    fn from_matrix_cols(m: &Matrix, n: usize) -> Subspace {
        let (basis, _) = m.rref();
        debug_assert!(basis.rows() == 0 || basis.cols() == n);
        let basis = if basis.rows() == 0 {
            Matrix::zeros(m.modulus(), 0, n)
        } else {
            basis
        };
        Subspace { n, basis }
    }

    /// Strict loader: the rows must already be a canonical RREF basis.
    pub fn from_rows_canonical(p: Prime, n: usize, rows: &[Vec<u32>]) -> Result<Subspace> {
        let s = Subspace::span(p, n, rows)?;
        if s.dim() != rows.len() || s.basis.row_vecs() != rows {
            return Err(Error::NotCanonical(
                "rows are not a reduced-row-echelon basis".into(),
            ));
        }
        Ok(s)
    }

    pub fn zero(p: Prime, n: usize) -> Subspace {
        Subspace {
            n,
            basis: Matrix::zeros(p, 0, n),
        }
    }

    pub fn full(p: Prime, n: usize) -> Subspace {
        Subspace {
            n,
            basis: Matrix::identity(p, n),
        }
    }

    /// One-dimensional subspace spanned by `v` (must be nonzero).
    pub fn line(p: Prime, v: &[u32]) -> Result<Subspace> {
        let s = Subspace::span(p, v.len(), &[v.to_vec()])?;
        if s.dim() != 1 {
            return Err(Error::domain("line: zero vector"));
        }
        Ok(s)
    }

    pub fn p(&self) -> Prime {
        self.basis.modulus()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.n
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.p() != other.p() {
            return Err(Error::ModulusMismatch(self.p().get(), other.p().get()));
        }
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Reduces `v` modulo this subspace: the result has zeros in all pivot
    /// coordinates of the basis and differs from `v` by an element of the
    /// subspace.
    pub fn reduce_vector(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p().get();
        let mut out = v.to_vec();
        for (i, &pc) in self.basis.pivot_cols().iter().enumerate() {
            let factor = out[pc];
            if factor == 0 {
                continue;
            }
            for c in 0..self.n {
                let sub = (factor * self.basis.row(i)[c]) % p;
                out[c] = (out[c] + p - sub) % p;
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.reduce_vector(v).iter().all(|&e| e == 0)
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.n == other.n
            && self.p() == other.p()
            && other
                .basis
                .row_vecs()
                .iter()
                .all(|r| self.contains_vector(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = self.basis.stack(&other.basis)?;
        Ok(Subspace::from_matrix_cols(&stacked, self.n))
    }

    /// Exact intersection, computed through annihilator duality:
    /// a ∩ b = (a⁰ + b⁰)⁰.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        self.annihilator().sum(&other.annihilator()).map(|s| s.annihilator())
    }

    /// The annihilator under the standard pairing: all x* with x*·x = 0 for
    /// x in this subspace. An inclusion-reversing involution of dimension
    /// n − dim.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.p(), self.n);
        }
        Subspace {
            n: self.n,
            basis: self.basis.kernel(),
        }
    }

    /// All vectors of the subspace, zero included, in deterministic order.
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        let p = self.p().get();
        let d = self.dim();
        let mut out = Vec::with_capacity((p as usize).pow(d as u32));
        let mut coeffs = vec![0u32; d];
        loop {
            let mut v = vec![0u32; self.n];
            for (i, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (slot, &b) in v.iter_mut().zip(self.basis.row(i)) {
                    *slot = (*slot + c * b) % p;
                }
            }
            out.push(v);
            let mut i = 0;
            while i < d {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
        out
    }

    /// Canonical digit string of the basis, rows joined by '/'.
    pub fn digits(&self) -> String {
        self.basis
            .row_vecs()
            .iter()
            .map(|r| row_to_digits(r))
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "<0 in GF({})^{}>", self.p().get(), self.n)
        } else {
            write!(f, "<{} in GF({})^{}>", self.digits(), self.p().get(), self.n)
        }
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// Lexicographic on (p, ambient, dim, canonical basis digits); the digit
    /// order is what fixes the deterministic vertex order of graphs.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p().get(), self.n, self.dim())
            .cmp(&(other.p().get(), other.n, other.dim()))
            .then_with(|| {
                for r in 0..self.dim() {
                    match self.basis.row(r).cmp(other.basis.row(r)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    p: u32,
    n: usize,
    rows: Vec<String>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceJson {
            p: self.p().get(),
            n: self.n,
            rows: self
                .basis
                .row_vecs()
                .iter()
                .map(|r| row_to_digits(r))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    /// Rejects non-canonical bases; use [`Subspace::span`] to normalize
    /// untrusted rows instead.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SubspaceJson::deserialize(deserializer)?;
        let p = Prime::new(raw.p).map_err(D::Error::custom)?;
        let rows: Vec<Vec<u32>> = raw
            .rows
            .iter()
            .map(|s| digits_to_row(p, s))
            .collect::<Result<_>>()
            .map_err(D::Error::custom)?;
        Subspace::from_rows_canonical(p, raw.n, &rows).map_err(D::Error::custom)
    }
}

/// Outcome of checking the annihilator laws on a list of subspaces.
#[derive(Debug, Clone)]
pub enum LawVerdict {
    Pass,
    Fail {
        law: &'static str,
        lhs: Subspace,
        rhs: Subspace,
    },
}

impl LawVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, LawVerdict::Pass)
    }
}

/// Checks (S1+⋯+Sm)⁰ = S1⁰∩⋯∩Sm⁰ and (S1∩⋯∩Sm)⁰ = S1⁰+⋯+Sm⁰ on the given
/// list, reporting the first law violated if any.
pub fn annihilator_laws(subspaces: &[Subspace]) -> Result<LawVerdict> {
    let Some(first) = subspaces.first() else {
        return Ok(LawVerdict::Pass);
    };
    for s in subspaces {
        first.check_ambient(s)?;
    }
    let mut sum = first.clone();
    let mut meet = first.clone();
    let mut ann_meet = first.annihilator();
    let mut ann_sum = first.annihilator();
    for s in &subspaces[1..] {
        sum = sum.sum(s)?;
        meet = meet.intersect(s)?;
        ann_meet = ann_meet.intersect(&s.annihilator())?;
        ann_sum = ann_sum.sum(&s.annihilator())?;
    }
    if sum.annihilator() != ann_meet {
        return Ok(LawVerdict::Fail {
            law: "(S1+...+Sm)^0 = S1^0 ∩ ... ∩ Sm^0",
            lhs: sum.annihilator(),
            rhs: ann_meet,
        });
    }
    if meet.annihilator() != ann_sum {
        return Ok(LawVerdict::Fail {
            law: "(S1∩...∩Sm)^0 = S1^0 + ... + Sm^0",
            lhs: meet.annihilator(),
            rhs: ann_sum,
        });
    }
    Ok(LawVerdict::Pass)
}

/// Image of `s` in the quotient V/`modded`, in the coordinate model indexed
/// by the non-pivot columns of `modded`'s basis. Requires `modded ⊆ s`.
pub fn quotient_push(s: &Subspace, modded: &Subspace) -> Result<Subspace> {
    s.check_ambient(modded)?;
    if !s.contains(modded) {
        return Err(Error::domain("quotient_push: modded subspace not contained"));
    }
    let keep: Vec<usize> = non_pivot_cols(modded);
    let rows: Vec<Vec<u32>> = s
        .basis
        .row_vecs()
        .iter()
        .map(|r| {
            let red = modded.reduce_vector(r);
            keep.iter().map(|&c| red[c]).collect()
        })
        .collect();
    Subspace::span(s.p(), keep.len(), &rows)
}

/// Right inverse of [`quotient_push`]: lifts a subspace of the quotient
/// model back into GF(p)^n, adding `modded` itself.
pub fn quotient_lift(s_bar: &Subspace, modded: &Subspace) -> Result<Subspace> {
    let keep = non_pivot_cols(modded);
    if s_bar.ambient() != keep.len() {
        return Err(Error::AmbientMismatch(s_bar.ambient(), keep.len()));
    }
    if s_bar.p() != modded.p() {
        return Err(Error::ModulusMismatch(s_bar.p().get(), modded.p().get()));
    }
    let n = modded.ambient();
    let mut rows: Vec<Vec<u32>> = s_bar
        .basis
        .row_vecs()
        .iter()
        .map(|r| {
            let mut v = vec![0u32; n];
            for (&c, &e) in keep.iter().zip(r) {
                v[c] = e;
            }
            v
        })
        .collect();
    rows.extend(modded.basis.row_vecs());
    Subspace::span(modded.p(), n, &rows)
}

fn non_pivot_cols(s: &Subspace) -> Vec<usize> {
    let pivots = s.basis().pivot_cols();
    (0..s.ambient()).filter(|c| !pivots.contains(c)).collect()
}

/// Rewrites a subspace of GF(p)^d in the coordinates of a d-dimensional
/// `carrier` subspace: each abstract basis row maps to row · carrier_basis.
pub fn embed_in(abstract_sub: &Subspace, carrier: &Subspace) -> Result<Subspace> {
    if abstract_sub.ambient() != carrier.dim() {
        return Err(Error::AmbientMismatch(abstract_sub.ambient(), carrier.dim()));
    }
    let m = abstract_sub.basis().mul(carrier.basis())?;
    Ok(Subspace::from_matrix_cols(&m, carrier.ambient()))
}

/// Inverse of [`embed_in`]: expresses `s ⊆ carrier` in carrier coordinates.
/// Because the carrier basis is in RREF, the coordinates of a vector are its
/// entries at the carrier's pivot columns.
pub fn coords_in(s: &Subspace, carrier: &Subspace) -> Result<Subspace> {
    if !carrier.contains(s) {
        return Err(Error::domain("coords_in: subspace not inside carrier"));
    }
    let pivots = carrier.basis().pivot_cols();
    let rows: Vec<Vec<u32>> = s
        .basis
        .row_vecs()
        .iter()
        .map(|r| pivots.iter().map(|&c| r[c]).collect())
        .collect();
    Subspace::span(s.p(), carrier.dim(), &rows)
}

/// Enumerates every k-dimensional subspace of GF(p)^n in canonical order.
///
/// Walks all pivot-column patterns and all fillings of the free cells of the
/// RREF shape, so each subspace is produced exactly once; the result is
/// sorted by canonical basis digits.
pub fn enumerate_subspaces(p: Prime, n: usize, k: usize) -> Vec<Subspace> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Subspace::zero(p, n)];
    }
    let q = p.get();
    let mut out = Vec::with_capacity(gaussian_binomial(n, k, q as u128) as usize);
    for pivots in crate::combin::k_subsets(n, k) {
        let pivots: Vec<usize> = pivots.iter().map(|&c| c - 1).collect();
        // free cells: (row i, col c) with c > pivots[i] and c not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let pivots = &pivots;
                ((pivots[i] + 1)..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut values = vec![0u32; free.len()];
        loop {
            let mut rows = vec![vec![0u32; n]; k];
            for (i, &c) in pivots.iter().enumerate() {
                rows[i][c] = 1;
            }
            for (&(i, c), &v) in free.iter().zip(&values) {
                rows[i][c] = v;
            }
            let basis = Matrix::from_rows(p, &rows).expect("uniform rows");
            debug_assert!(basis.is_canonical());
            out.push(Subspace { n, basis });
            let mut t = 0;
            while t < values.len() {
                values[t] += 1;
                if values[t] < q {
                    break;
                }
                values[t] = 0;
                t += 1;
            }
            if t == values.len() {
                break;
            }
        }
    }
    out.sort();
    out
}

/// The parabolic interval [S, U]_k: all k-dimensional subspaces between a
/// fixed lower and upper bound. `lower = 0` gives the star model, `upper = V`
/// the top model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicInterval {
    lower: Subspace,
    upper: Subspace,
    k: usize,
}

impl ParabolicInterval {
    pub fn new(lower: Subspace, upper: Subspace, k: usize) -> Result<ParabolicInterval> {
        lower.check_ambient(&upper)?;
        if !upper.contains(&lower) {
            return Err(Error::domain("interval: lower bound not inside upper bound"));
        }
        Ok(ParabolicInterval { lower, upper, k })
    }

    pub fn lower(&self) -> &Subspace {
        &self.lower
    }

    pub fn upper(&self) -> &Subspace {
        &self.upper
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Exactly the k-dimensional subspaces P with lower ⊆ P ⊆ upper, in
    /// canonical order. Empty when k falls outside [dim lower, dim upper].
    ///
    /// Count equals the Gaussian binomial [u−s choose k−s]_p.
    pub fn members(&self) -> Result<Vec<Subspace>> {
        let s = self.lower.dim();
        let u = self.upper.dim();
        if self.k < s || self.k > u {
            return Ok(Vec::new());
        }
        // model the quotient upper/lower, enumerate (k-s)-subspaces of the
        // abstract (u-s)-space, and pull them back through the carrier
        let carrier = quotient_push(&self.upper, &self.lower)?;
        let mut out: Vec<Subspace> = enumerate_subspaces(self.lower.p(), u - s, self.k - s)
            .iter()
            .map(|x| {
                let in_quotient = embed_in(x, &carrier)?;
                quotient_lift(&in_quotient, &self.lower)
            })
            .collect::<Result<_>>()?;
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn sub(p: u32, n: usize, rows: &[&str]) -> Subspace {
        let p = gf(p);
        let rows: Vec<Vec<u32>> = rows.iter().map(|s| digits_to_row(p, s).unwrap()).collect();
        Subspace::span(p, n, &rows).unwrap()
    }

    #[test]
    fn span_canonicalizes() {
        let a = sub(2, 4, &["1000", "0100"]);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.digits(), "1000/0100");
        // row-equivalent generating sets give the same value
        let b = sub(2, 4, &["1100", "0100"]);
        assert_eq!(a, b);
        let empty = Subspace::span(gf(2), 4, &[]).unwrap();
        assert_eq!(empty, Subspace::zero(gf(2), 4));
        assert!(Subspace::span(gf(2), 4, &[vec![1, 0]]).is_err());
    }

    #[test]
    fn strict_loader_rejects_non_canonical() {
        let p = gf(2);
        assert!(Subspace::from_rows_canonical(p, 4, &[vec![1, 1, 0, 0], vec![0, 1, 0, 0]]).is_err());
        assert!(Subspace::from_rows_canonical(p, 4, &[vec![1, 0, 1, 0], vec![0, 1, 1, 0]]).is_ok());
    }

    #[test]
    fn sum_and_intersection_of_coordinate_planes() {
        let a = sub(2, 4, &["1000", "0100"]);
        let b = sub(2, 4, &["0100", "0010"]);
        assert_eq!(a.sum(&b).unwrap().dim(), 3);
        assert_eq!(a.intersect(&b).unwrap(), sub(2, 4, &["0100"]));

        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);

        let c = sub(2, 4, &["0010", "0001"]);
        assert!(a.intersect(&c).unwrap().is_zero());
        assert!(a.sum(&c).unwrap().is_full());

        let other = sub(2, 3, &["100"]);
        assert!(a.sum(&other).is_err());
    }

    #[test]
    fn modular_dimension_law_exhaustive_gf2_4() {
        let all2 = enumerate_subspaces(gf(2), 4, 2);
        for a in &all2 {
            for b in &all2 {
                let sum = a.sum(b).unwrap();
                let meet = a.intersect(b).unwrap();
                assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
                assert!(sum.contains(a) && sum.contains(b));
                assert!(a.contains(&meet) && b.contains(&meet));
            }
        }
    }

    #[test]
    fn annihilator_standard_cases() {
        let a = sub(2, 4, &["1000", "0100"]);
        assert_eq!(a.annihilator(), sub(2, 4, &["0010", "0001"]));
        assert_eq!(
            Subspace::zero(gf(2), 4).annihilator(),
            Subspace::full(gf(2), 4)
        );
        // oracle: the annihilator of <1111> is the even-weight subspace,
        // checked by enumerating all 16 vectors
        let ones = sub(2, 4, &["1111"]);
        let ann = ones.annihilator();
        assert_eq!(ann.dim(), 3);
        let mut members = 0;
        for bits in 0..16u32 {
            let v: Vec<u32> = (0..4).map(|i| (bits >> i) & 1).collect();
            let even = v.iter().sum::<u32>() % 2 == 0;
            assert_eq!(ann.contains_vector(&v), even);
            members += usize::from(even);
        }
        assert_eq!(members, 8);
    }

    #[test]
    fn annihilator_is_inclusion_reversing_involution() {
        for (p, n) in [(2u32, 4usize), (3, 3)] {
            let prime = gf(p);
            let all: Vec<Subspace> = (0..=n)
                .flat_map(|k| enumerate_subspaces(prime, n, k))
                .collect();
            for a in &all {
                assert_eq!(a.annihilator().annihilator(), *a);
                assert_eq!(a.annihilator().dim(), n - a.dim());
                for b in &all {
                    assert_eq!(
                        a.contains(b),
                        b.annihilator().contains(&a.annihilator()),
                        "duality must reverse inclusion"
                    );
                }
            }
        }
    }

    #[test]
    fn annihilator_laws_exhaustive_pairs_gf2() {
        let all2 = enumerate_subspaces(gf(2), 4, 2);
        assert_eq!(all2.len(), 35);
        for a in &all2 {
            assert!(annihilator_laws(std::slice::from_ref(a)).unwrap().passed());
            for b in &all2 {
                assert!(annihilator_laws(&[a.clone(), b.clone()]).unwrap().passed());
            }
        }
    }

    #[test]
    fn annihilator_laws_exhaustive_triples_gf3() {
        let lines = enumerate_subspaces(gf(3), 3, 1);
        assert_eq!(lines.len(), 13);
        for a in &lines {
            for b in &lines {
                for c in &lines {
                    let verdict =
                        annihilator_laws(&[a.clone(), b.clone(), c.clone()]).unwrap();
                    assert!(verdict.passed(), "failed on {a:?} {b:?} {c:?}");
                }
            }
        }
    }

    #[test]
    fn quotient_push_and_lift() {
        let s = sub(2, 4, &["1000", "0100"]);
        let line = sub(2, 4, &["1000"]);
        let pushed = quotient_push(&s, &line).unwrap();
        assert_eq!(pushed.ambient(), 3);
        assert_eq!(pushed.dim(), 1);

        // lifting zero gives the modded subspace back
        let zero_bar = Subspace::zero(gf(2), 3);
        assert_eq!(quotient_lift(&zero_bar, &line).unwrap(), line);

        assert!(quotient_push(&line, &s).is_err());
    }

    #[test]
    fn quotient_round_trip_exhaustive() {
        // push(lift(x, S), S) = x for all 2-dim x of the 3-dim quotient of
        // GF(2)^4 by a line
        let line = sub(2, 4, &["0100"]);
        for x in enumerate_subspaces(gf(2), 3, 2) {
            let lifted = quotient_lift(&x, &line).unwrap();
            assert_eq!(lifted.dim(), 3);
            assert!(lifted.contains(&line));
            assert_eq!(quotient_push(&lifted, &line).unwrap(), x);
        }
    }

    #[test]
    fn interval_member_counts_match_gaussian_binomials() {
        let p = gf(2);
        let whole = ParabolicInterval::new(Subspace::zero(p, 4), Subspace::full(p, 4), 2).unwrap();
        let members = whole.members().unwrap();
        assert_eq!(members.len(), 35);
        assert_eq!(members, enumerate_subspaces(p, 4, 2));

        // star [S>_2 with dim S = 1: [3 1]_2 = 7 members
        let star = ParabolicInterval::new(sub(2, 4, &["1000"]), Subspace::full(p, 4), 2).unwrap();
        let star_members = star.members().unwrap();
        assert_eq!(star_members.len(), 7);
        for m in &star_members {
            assert!(m.contains(star.lower()));
        }

        // top <U]_2 with dim U = 3: [3 2]_2 = 7 members
        let top =
            ParabolicInterval::new(Subspace::zero(p, 4), sub(2, 4, &["1000", "0100", "0010"]), 2)
                .unwrap();
        let top_members = top.members().unwrap();
        assert_eq!(top_members.len(), 7);
        for m in &top_members {
            assert!(top.upper().contains(m));
        }

        // degenerate k outside the dimension range
        let empty = ParabolicInterval::new(sub(2, 4, &["1000"]), sub(2, 4, &["1000"]), 3).unwrap();
        assert!(empty.members().unwrap().is_empty());
    }

    #[test]
    fn enumeration_count_matches_formula() {
        for (p, n, k) in [(2u32, 4usize, 2usize), (2, 5, 2), (3, 3, 1), (3, 4, 2), (5, 3, 2)] {
            let subs = enumerate_subspaces(gf(p), n, k);
            assert_eq!(
                subs.len() as u128,
                gaussian_binomial(n, k, p as u128),
                "count at ({p},{n},{k})"
            );
            // all canonical, all distinct, sorted
            for w in subs.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn vectors_enumerates_whole_subspace() {
        let s = sub(3, 3, &["100", "010"]);
        let vs = s.vectors();
        assert_eq!(vs.len(), 9);
        for v in &vs {
            assert!(s.contains_vector(v));
        }
    }

    #[test]
    fn subspace_json_round_trip() {
        let s = sub(2, 4, &["1010", "0110"]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"p":2,"n":4,"rows":["1010","0110"]}"#);
        let back: Subspace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        // non-canonical input is rejected on load
        assert!(serde_json::from_str::<Subspace>(r#"{"p":2,"n":4,"rows":["1100","0100"]}"#).is_err());
        // the zero subspace keeps its ambient dimension
        let z = Subspace::zero(gf(3), 5);
        let back: Subspace = serde_json::from_str(&serde_json::to_string(&z).unwrap()).unwrap();
        assert_eq!(back, z);
    }
}
