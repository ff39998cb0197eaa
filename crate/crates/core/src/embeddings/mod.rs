//! Maps between Grassmannians and their verification: isometric-embedding
//! audits, maps induced by linear injections ((l)_k and its dual twin),
//! classification of J(n,k)-subsets with witness recovery, the
//! J-mapping/isometry equivalence checks, and recovery of the inducing
//! linear map for strong J-mappings.

mod classify;
mod jmap;
mod recover;

pub use classify::{
    classify_j_subset, find_all_j_subsets, star_top_census, JSubsetSearch, JSubsetWitness,
};
pub use jmap::{
    is_j_mapping, verify_theorem_main, JMappingMode, JMappingReport, TheoremMainReport,
};
pub use recover::{verify_strong_corollaries, NormalForm, StrongReport};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exec;
use crate::finfield::{Matrix, Prime};
use crate::graphs::{grassmann_distance, GrassmannGraph, VertexGraph};
use crate::subspaces::{coords_in, embed_in, enumerate_subspaces, quotient_lift, quotient_push, Subspace};
use crate::{Error, Result};

/// An explicit finite map G_k(V) → G_k'(V') under test: one target subspace
/// per source vertex. Source and target graphs are shared immutably.
#[derive(Debug, Clone)]
pub struct SubspaceMap {
    source: Arc<GrassmannGraph>,
    target: Arc<GrassmannGraph>,
    table: Vec<Subspace>,
}

impl SubspaceMap {
    pub fn new(
        source: Arc<GrassmannGraph>,
        target: Arc<GrassmannGraph>,
        table: Vec<Subspace>,
    ) -> Result<SubspaceMap> {
        if table.len() != source.vertex_count() {
            return Err(Error::domain(format!(
                "map table has {} entries for {} source vertices",
                table.len(),
                source.vertex_count()
            )));
        }
        for s in &table {
            if s.p() != target.p() || s.ambient() != target.n() || s.dim() != target.k() {
                return Err(Error::domain(format!(
                    "table value {s:?} is not a vertex shape of the target Grassmannian"
                )));
            }
        }
        Ok(SubspaceMap {
            source,
            target,
            table,
        })
    }

    pub fn source(&self) -> &Arc<GrassmannGraph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GrassmannGraph> {
        &self.target
    }

    pub fn table(&self) -> &[Subspace] {
        &self.table
    }

    pub fn image(&self, vertex: usize) -> &Subspace {
        &self.table[vertex]
    }

    pub fn image_of(&self, s: &Subspace) -> Result<&Subspace> {
        let id = self
            .source
            .vertex_id(s)
            .ok_or_else(|| Error::domain("image_of: not a source vertex"))?;
        Ok(&self.table[id])
    }

    /// Replaces one table entry; the workhorse for building the mutated
    /// negatives that the falsification checks run on.
    pub fn with_entry(&self, vertex: usize, value: Subspace) -> Result<SubspaceMap> {
        let mut table = self.table.clone();
        table[vertex] = value;
        SubspaceMap::new(self.source.clone(), self.target.clone(), table)
    }

    /// Post-composes with the annihilator isomorphism of the target.
    pub fn annihilator_composed(&self) -> Result<SubspaceMap> {
        let target = Arc::new(GrassmannGraph::new(
            self.target.p(),
            self.target.n(),
            self.target.n() - self.target.k(),
        )?);
        let table = self.table.iter().map(|s| s.annihilator()).collect();
        SubspaceMap::new(self.source.clone(), target, table)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceMapJson {
    pub source: crate::graphs::GraphJson,
    pub target: crate::graphs::GraphJson,
    pub table: Vec<(usize, Subspace)>,
}

impl From<&SubspaceMap> for SubspaceMapJson {
    fn from(f: &SubspaceMap) -> SubspaceMapJson {
        SubspaceMapJson {
            source: f.source.as_ref().into(),
            target: f.target.as_ref().into(),
            table: f.table.iter().cloned().enumerate().collect(),
        }
    }
}

/// Verdict of a full pairwise isometry audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsometryVerdict {
    Pass,
    /// two source vertices with equal images
    FailInjective { a: usize, b: usize },
    /// a pair whose distance changes
    FailDistance {
        a: usize,
        b: usize,
        source: usize,
        target: usize,
    },
}

impl IsometryVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, IsometryVerdict::Pass)
    }
}

/// Exhaustive isometric-embedding check: injectivity plus distance
/// preservation on every vertex pair, via the closed-form distances.
pub fn is_isometric_embedding(f: &SubspaceMap) -> Result<IsometryVerdict> {
    let n = f.source.vertex_count();
    let violation = exec::indexed_find_map(n, |a| {
        for b in (a + 1)..n {
            if f.table[a] == f.table[b] {
                return Some(IsometryVerdict::FailInjective { a, b });
            }
            let ds = grassmann_distance(f.source.vertex(a), f.source.vertex(b)).ok()?;
            let dt = grassmann_distance(&f.table[a], &f.table[b]).ok()?;
            if ds != dt {
                return Some(IsometryVerdict::FailDistance {
                    a,
                    b,
                    source: ds,
                    target: dt,
                });
            }
        }
        None
    });
    Ok(violation.unwrap_or(IsometryVerdict::Pass))
}

/// A linear injection l: GF(p)^n → GF(p)^n' (vectors act on the left of the
/// matrix) with its verified independence grade: the largest m such that
/// every j ≤ m independent vectors stay independent under l.
///
/// Over a prime field every field endomorphism is the identity, so the
/// semilinear maps of the general theory degenerate to linear ones and an
/// injection always verifies at full grade n. The grade is still measured
/// exhaustively rather than assumed.
#[derive(Debug, Clone)]
pub struct LinearEmbedding {
    matrix: Matrix,
    grade: usize,
}

impl LinearEmbedding {
    pub fn new(matrix: Matrix) -> Result<LinearEmbedding> {
        let n = matrix.rows();
        if matrix.rank() != n {
            return Err(Error::domain(
                "linear embedding must be injective (full row rank)",
            ));
        }
        let grade = verified_grade(&matrix);
        Ok(LinearEmbedding { matrix, grade })
    }

    pub fn identity(p: Prime, n: usize) -> LinearEmbedding {
        LinearEmbedding::new(Matrix::identity(p, n)).expect("identity is injective")
    }

    /// The inclusion GF(p)^n ↪ GF(p)^n' on the first n coordinates.
    pub fn inclusion(p: Prime, n: usize, n_prime: usize) -> Result<LinearEmbedding> {
        if n > n_prime {
            return Err(Error::domain("inclusion needs n <= n'"));
        }
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n_prime).map(|j| u32::from(i == j)).collect())
            .collect();
        LinearEmbedding::new(Matrix::from_rows(p, &rows)?)
    }

    pub fn p(&self) -> Prime {
        self.matrix.modulus()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>> {
        let row = Matrix::from_rows(self.p(), &[v.to_vec()])?;
        Ok(row.mul(&self.matrix)?.row(0).to_vec())
    }

    /// ⟨l(P)⟩: the span of the image of a subspace.
    pub fn image_of(&self, s: &Subspace) -> Result<Subspace> {
        let m = s.basis().mul(&self.matrix)?;
        Ok(Subspace::from_matrix(&m))
    }
}

/// Largest m such that every j-dimensional subspace (j ≤ m) keeps its
/// dimension under the matrix, checked by exhausting subspaces per level.
fn verified_grade(matrix: &Matrix) -> usize {
    let p = matrix.modulus();
    let n = matrix.rows();
    for m in 1..=n {
        let ok = enumerate_subspaces(p, n, m).iter().all(|s| {
            s.basis()
                .mul(matrix)
                .map(|img| img.rank() == m)
                .unwrap_or(false)
        });
        if !ok {
            return m - 1;
        }
    }
    n
}

/// (l)_k: P ↦ ⟨l(P)⟩, an adjacency-preserving injection for grade ≥ k+1 and
/// an isometric embedding for grade ≥ 2k.
pub fn linear_image_map(l: &LinearEmbedding, k: usize) -> Result<SubspaceMap> {
    if l.grade() < k + 1 {
        return Err(Error::domain(format!(
            "(l)_k needs grade >= k+1 = {}, verified grade is {}",
            k + 1,
            l.grade()
        )));
    }
    let source = Arc::new(GrassmannGraph::new(l.p(), l.domain_dim(), k)?);
    let target = Arc::new(GrassmannGraph::new(l.p(), l.codomain_dim(), k)?);
    let table = source
        .vertices()
        .iter()
        .map(|s| l.image_of(s))
        .collect::<Result<_>>()?;
    SubspaceMap::new(source, target, table)
}

/// (l)*_k: P ↦ ⟨l(P)⟩⁰, landing in the dual model Γ_{n'−k}.
pub fn linear_dual_map(l: &LinearEmbedding, k: usize) -> Result<SubspaceMap> {
    if l.grade() < k + 1 {
        return Err(Error::domain(format!(
            "(l)*_k needs grade >= k+1 = {}, verified grade is {}",
            k + 1,
            l.grade()
        )));
    }
    let source = Arc::new(GrassmannGraph::new(l.p(), l.domain_dim(), k)?);
    let target = Arc::new(GrassmannGraph::new(
        l.p(),
        l.codomain_dim(),
        l.codomain_dim() - k,
    )?);
    let table = source
        .vertices()
        .iter()
        .map(|s| Ok(l.image_of(s)?.annihilator()))
        .collect::<Result<_>>()?;
    SubspaceMap::new(source, target, table)
}

/// The identity map on a Grassmann graph.
pub fn identity_map(g: Arc<GrassmannGraph>) -> Result<SubspaceMap> {
    let table = g.vertices().to_vec();
    SubspaceMap::new(g.clone(), g, table)
}

/// The annihilator isomorphism Γ_k(V) → Γ_{n−k}(V*), as a table map.
pub fn annihilator_map(g: Arc<GrassmannGraph>) -> Result<SubspaceMap> {
    identity_map(g)?.annihilator_composed()
}

/// Post-composes f with Φ_S: each image is lifted from the quotient model
/// V'/S back to V', so the target Grassmannian gains dim S. Requires the
/// current target to be exactly the quotient model of `s`.
pub fn compose_quotient_lift(f: &SubspaceMap, s: &Subspace) -> Result<SubspaceMap> {
    let model_dim = s.ambient() - s.dim();
    if f.target().n() != model_dim {
        return Err(Error::AmbientMismatch(f.target().n(), model_dim));
    }
    if f.target().p() != s.p() {
        return Err(Error::ModulusMismatch(f.target().p().get(), s.p().get()));
    }
    let target = Arc::new(GrassmannGraph::new(
        s.p(),
        s.ambient(),
        f.target().k() + s.dim(),
    )?);
    let table = f
        .table
        .iter()
        .map(|x| quotient_lift(x, s))
        .collect::<Result<_>>()?;
    SubspaceMap::new(f.source.clone(), target, table)
}

/// Post-composes f with Φ^U: images move from the abstract model of U into
/// the ambient space of U. Requires the current target to be that model.
pub fn compose_interval_embed(f: &SubspaceMap, u: &Subspace) -> Result<SubspaceMap> {
    if f.target().n() != u.dim() {
        return Err(Error::AmbientMismatch(f.target().n(), u.dim()));
    }
    if f.target().p() != u.p() {
        return Err(Error::ModulusMismatch(f.target().p().get(), u.p().get()));
    }
    let target = Arc::new(GrassmannGraph::new(u.p(), u.ambient(), f.target().k())?);
    let table = f
        .table
        .iter()
        .map(|x| embed_in(x, u))
        .collect::<Result<_>>()?;
    SubspaceMap::new(f.source.clone(), target, table)
}

/// Rewrites `s` (containing `lower`, inside the carrier's lift) in the
/// abstract coordinates of the quotient-model `carrier`.
pub(crate) fn push_into_model(
    s: &Subspace,
    lower: &Subspace,
    carrier: &Subspace,
) -> Result<Subspace> {
    coords_in(&quotient_push(s, lower)?, carrier)
}
