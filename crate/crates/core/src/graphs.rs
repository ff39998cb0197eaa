//! Grassmann graphs Γ_k(V) and Johnson graphs J(n,k) with interned
//! vertices, exact closed-form distances, a generic BFS oracle used to
//! validate them, and the star/top maximal-clique structure.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::combin::{binomial, gaussian_binomial, k_subsets};
use crate::exec;
use crate::finfield::Prime;
use crate::subspaces::{enumerate_subspaces, ParabolicInterval, Subspace};
use crate::{Error, Result};

/// A k-element subset of {1, …, n}, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KSubset {
    n: usize,
    elems: Vec<usize>,
}

impl KSubset {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<KSubset> {
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&e| e == 0 || e > n) {
            return Err(Error::domain(format!("elements must lie in 1..={n}")));
        }
        Ok(KSubset { n, elems })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn intersection_size(&self, other: &KSubset) -> usize {
        self.elems.iter().filter(|e| other.contains(**e)).count()
    }

    /// The complement {1, …, n} \ X: an involution carrying J(n,k) onto
    /// J(n, n−k), stars onto tops and tops onto stars.
    pub fn complement(&self) -> KSubset {
        let elems = (1..=self.n).filter(|&e| !self.contains(e)).collect();
        KSubset { n: self.n, elems }
    }
}

/// Johnson distance k − |x ∩ y|.
pub fn johnson_distance(x: &KSubset, y: &KSubset) -> Result<usize> {
    if x.n() != y.n() || x.k() != y.k() {
        return Err(Error::domain("johnson_distance: mismatched (n, k)"));
    }
    Ok(x.k() - x.intersection_size(y))
}

/// Grassmann distance k − dim(s ∩ u) = dim(s + u) − k.
pub fn grassmann_distance(s: &Subspace, u: &Subspace) -> Result<usize> {
    if s.dim() != u.dim() {
        return Err(Error::domain("grassmann_distance: unequal dimensions"));
    }
    Ok(s.dim() - s.intersect(u)?.dim())
}

/// Read-only adjacency view shared by every graph in the crate.
pub trait VertexGraph {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[usize];
}

/// BFS distances from `src` to every vertex; `None` marks unreachable.
pub fn bfs_from(g: &(impl VertexGraph + ?Sized), src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact BFS distance between two vertices, `None` when disconnected.
pub fn bfs_distance(g: &(impl VertexGraph + ?Sized), src: usize, dst: usize) -> Option<usize> {
    bfs_from(g, src)[dst]
}

/// Greatest pairwise distance. A disconnected graph is a construction bug
/// and reported as a domain error.
pub fn diameter(g: &(impl VertexGraph + Sync + ?Sized)) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::domain("diameter of the empty graph"));
    }
    let eccentricities = exec::indexed_map(n, |v| {
        bfs_from(g, v)
            .into_iter()
            .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))
    });
    eccentricities
        .into_iter()
        .try_fold(0usize, |acc, e| e.map(|e| acc.max(e)))
        .ok_or_else(|| Error::domain("graph is disconnected"))
}

/// The Johnson graph J(n,k): vertices are the k-subsets of {1..n} in lex
/// order, edges join subsets meeting in k−1 elements.
#[derive(Debug, Clone)]
pub struct JohnsonGraph {
    n: usize,
    k: usize,
    vertices: Vec<KSubset>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl JohnsonGraph {
    pub fn new(n: usize, k: usize) -> Result<JohnsonGraph> {
        if k > n {
            return Err(Error::domain(format!("J({n},{k}) needs k <= n")));
        }
        let vertices: Vec<KSubset> = k_subsets(n, k)
            .into_iter()
            .map(|elems| KSubset { n, elems })
            .collect();
        debug_assert_eq!(vertices.len() as u128, binomial(n, k));
        let adjacency = exec::indexed_map(vertices.len(), |i| {
            (0..vertices.len())
                .filter(|&j| {
                    j != i && vertices[i].intersection_size(&vertices[j]) + 1 == k
                })
                .collect()
        });
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.elems.clone(), i))
            .collect();
        Ok(JohnsonGraph {
            n,
            k,
            vertices,
            adjacency,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[KSubset] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &KSubset {
        &self.vertices[id]
    }

    pub fn vertex_id(&self, s: &KSubset) -> Option<usize> {
        if s.n() != self.n {
            return None;
        }
        self.index.get(s.elems()).copied()
    }
}

impl VertexGraph for JohnsonGraph {
    fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }
}

/// The Grassmann graph Γ_k(V) for V = GF(p)^n: vertices are all canonical
/// k-subspaces ordered by basis digits, edges join subspaces meeting in
/// dimension k−1.
#[derive(Debug, Clone)]
pub struct GrassmannGraph {
    p: Prime,
    n: usize,
    k: usize,
    vertices: Vec<Subspace>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<Subspace, usize>,
}

impl GrassmannGraph {
    /// Builds vertices and adjacency, fanning the pairwise intersection
    /// tests out to the rayon pool when the `parallel` feature is on.
    pub fn new(p: Prime, n: usize, k: usize) -> Result<GrassmannGraph> {
        Self::build(p, n, k, false)
    }

    /// Single-threaded reference constructor; same output as [`Self::new`].
    pub fn new_sequential(p: Prime, n: usize, k: usize) -> Result<GrassmannGraph> {
        Self::build(p, n, k, true)
    }

    fn build(p: Prime, n: usize, k: usize, sequential: bool) -> Result<GrassmannGraph> {
        if k > n {
            return Err(Error::domain(format!("Grassmann graph needs k <= n, got ({n},{k})")));
        }
        let vertices = enumerate_subspaces(p, n, k);
        debug_assert_eq!(
            vertices.len() as u128,
            gaussian_binomial(n, k, p.get() as u128)
        );
        // adjacency through dim(u+v) = k+1: one stacked rank per pair, and a
        // route independent of the intersection-based closed-form distance
        let row = |i: usize| -> Vec<usize> {
            (0..vertices.len())
                .filter(|&j| {
                    j != i
                        && k > 0
                        && vertices[i]
                            .basis()
                            .stack(vertices[j].basis())
                            .map(|m| m.rank() == k + 1)
                            .unwrap_or(false)
                })
                .collect()
        };
        let adjacency = if sequential {
            exec::indexed_map_seq(vertices.len(), row)
        } else {
            exec::indexed_map(vertices.len(), row)
        };
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        Ok(GrassmannGraph {
            p,
            n,
            k,
            vertices,
            adjacency,
            index,
        })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[Subspace] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &Subspace {
        &self.vertices[id]
    }

    pub fn vertex_id(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }
}

impl VertexGraph for GrassmannGraph {
    fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CliqueKind {
    /// [S⟩_k for S of dimension k−1
    Star,
    /// ⟨U]_k for U of dimension k+1
    Top,
    /// the single clique of all vertices when k = 1 or k = n−1
    Whole,
}

#[derive(Debug, Clone)]
pub struct MaximalClique {
    pub kind: CliqueKind,
    pub witness: Subspace,
    pub members: Vec<usize>,
}

/// Every maximal clique of Γ_k(V).
///
/// For 1 < k < n−1 these are exactly the stars (one per (k−1)-subspace) and
/// tops (one per (k+1)-subspace), emitted in canonical witness order; for
/// k = 1 or k = n−1 the whole vertex set is one clique.
pub fn maximal_cliques(g: &GrassmannGraph) -> Result<Vec<MaximalClique>> {
    let (p, n, k) = (g.p(), g.n(), g.k());
    if k == 0 || k == n {
        return Ok(vec![MaximalClique {
            kind: CliqueKind::Whole,
            witness: Subspace::full(p, n),
            members: (0..g.vertex_count()).collect(),
        }]);
    }
    if k == 1 || k == n - 1 {
        return Ok(vec![MaximalClique {
            kind: CliqueKind::Whole,
            witness: Subspace::full(p, n),
            members: (0..g.vertex_count()).collect(),
        }]);
    }
    let mut out = Vec::new();
    for witness in enumerate_subspaces(p, n, k - 1) {
        let members: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| g.vertex(v).contains(&witness))
            .collect();
        out.push(MaximalClique {
            kind: CliqueKind::Star,
            witness,
            members,
        });
    }
    for witness in enumerate_subspaces(p, n, k + 1) {
        let members: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| witness.contains(g.vertex(v)))
            .collect();
        out.push(MaximalClique {
            kind: CliqueKind::Top,
            witness,
            members,
        });
    }
    // sanity: member counts are the Gaussian binomials of the interval model
    for c in &out {
        let expected = match c.kind {
            CliqueKind::Star => ParabolicInterval::new(
                c.witness.clone(),
                Subspace::full(p, n),
                k,
            )?
            .members()?
            .len(),
            CliqueKind::Top => {
                ParabolicInterval::new(Subspace::zero(p, n), c.witness.clone(), k)?
                    .members()?
                    .len()
            }
            CliqueKind::Whole => g.vertex_count(),
        };
        if c.members.len() != expected {
            return Err(Error::invariant(format!(
                "clique at witness {:?} has {} members, expected {expected}",
                c.witness,
                c.members.len()
            )));
        }
    }
    Ok(out)
}

/// Serialized graph form shared by both graph kinds.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphJson {
    Grassmann {
        p: u32,
        n: usize,
        k: usize,
        vertices: Vec<Subspace>,
        edges: Vec<(usize, usize)>,
    },
    Johnson {
        n: usize,
        k: usize,
        vertices: Vec<Vec<usize>>,
        edges: Vec<(usize, usize)>,
    },
}

fn edge_list(g: &(impl VertexGraph + ?Sized)) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        for &w in g.neighbors(v) {
            if v < w {
                edges.push((v, w));
            }
        }
    }
    edges.sort_unstable();
    edges
}

impl From<&GrassmannGraph> for GraphJson {
    fn from(g: &GrassmannGraph) -> GraphJson {
        GraphJson::Grassmann {
            p: g.p().get(),
            n: g.n(),
            k: g.k(),
            vertices: g.vertices().to_vec(),
            edges: edge_list(g),
        }
    }
}

impl From<&JohnsonGraph> for GraphJson {
    fn from(g: &JohnsonGraph) -> GraphJson {
        GraphJson::Johnson {
            n: g.n(),
            k: g.k(),
            vertices: g.vertices().iter().map(|v| v.elems().to_vec()).collect(),
            edges: edge_list(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn ks(n: usize, elems: &[usize]) -> KSubset {
        KSubset::new(n, elems.to_vec()).unwrap()
    }

    #[test]
    fn johnson_distance_cases() {
        let a = ks(5, &[1, 2]);
        assert_eq!(johnson_distance(&a, &a).unwrap(), 0);
        assert_eq!(johnson_distance(&a, &ks(5, &[1, 3])).unwrap(), 1);
        assert_eq!(johnson_distance(&a, &ks(5, &[3, 4])).unwrap(), 2);
        assert!(johnson_distance(&a, &ks(5, &[1, 2, 3])).is_err());
        assert!(johnson_distance(&a, &ks(6, &[1, 2])).is_err());
    }

    #[test]
    fn grassmann_distance_cases() {
        let p = gf(2);
        let a = Subspace::span(p, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let b = Subspace::span(p, 4, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let c = Subspace::span(p, 4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        assert_eq!(grassmann_distance(&a, &a).unwrap(), 0);
        assert_eq!(grassmann_distance(&a, &b).unwrap(), 1);
        assert_eq!(grassmann_distance(&a, &c).unwrap(), 2);
        let line = Subspace::span(p, 4, &[vec![1, 0, 0, 0]]).unwrap();
        assert!(grassmann_distance(&a, &line).is_err());
    }

    #[test]
    fn complement_is_involutive_isomorphism() {
        let j52 = JohnsonGraph::new(5, 2).unwrap();
        let j53 = JohnsonGraph::new(5, 3).unwrap();
        assert_eq!(ks(5, &[1, 2]).complement(), ks(5, &[3, 4, 5]));
        for v in j52.vertices() {
            assert_eq!(v.complement().complement(), *v);
        }
        // adjacency preserved across the complement bijection, exhaustively
        for a in j52.vertices() {
            for b in j52.vertices() {
                let d = johnson_distance(a, b).unwrap();
                let dc = johnson_distance(&a.complement(), &b.complement()).unwrap();
                assert_eq!(d, dc);
                let ia = j53.vertex_id(&a.complement()).unwrap();
                let ib = j53.vertex_id(&b.complement()).unwrap();
                assert_eq!(d == 1, j53.neighbors(ia).contains(&ib));
            }
        }
    }

    #[test]
    fn johnson_graph_shape() {
        let j = JohnsonGraph::new(5, 2).unwrap();
        assert_eq!(j.vertex_count(), 10);
        for v in 0..j.vertex_count() {
            assert_eq!(j.neighbors(v).len(), 6); // k(n-k) = 2*3
            assert!(!j.neighbors(v).contains(&v));
            for &w in j.neighbors(v) {
                assert!(j.neighbors(w).contains(&v));
            }
        }
    }

    #[test]
    fn grassmann_graph_shape_and_bfs_agreement() {
        let g = GrassmannGraph::new(gf(2), 4, 2).unwrap();
        assert_eq!(g.vertex_count(), 35);
        // closed-form distance equals BFS distance on every pair
        for s in 0..g.vertex_count() {
            let bfs = bfs_from(&g, s);
            for t in 0..g.vertex_count() {
                let closed = grassmann_distance(g.vertex(s), g.vertex(t)).unwrap();
                assert_eq!(bfs[t], Some(closed));
            }
        }
        assert_eq!(diameter(&g).unwrap(), 2);
    }

    #[test]
    fn sequential_constructor_agrees() {
        let a = GrassmannGraph::new(gf(3), 3, 1).unwrap();
        let b = GrassmannGraph::new_sequential(gf(3), 3, 1).unwrap();
        assert_eq!(a.vertices(), b.vertices());
        assert_eq!(a.adjacency, b.adjacency);
    }

    #[test]
    fn johnson_diameters() {
        assert_eq!(diameter(&JohnsonGraph::new(5, 2).unwrap()).unwrap(), 2);
        assert_eq!(diameter(&JohnsonGraph::new(6, 3).unwrap()).unwrap(), 3);
    }

    #[test]
    fn maximal_cliques_of_gamma_2_gf2_4() {
        let g = GrassmannGraph::new(gf(2), 4, 2).unwrap();
        let cliques = maximal_cliques(&g).unwrap();
        let stars: Vec<_> = cliques
            .iter()
            .filter(|c| c.kind == CliqueKind::Star)
            .collect();
        let tops: Vec<_> = cliques
            .iter()
            .filter(|c| c.kind == CliqueKind::Top)
            .collect();
        assert_eq!(stars.len(), 15);
        assert_eq!(tops.len(), 15);
        for c in &cliques {
            assert_eq!(c.members.len(), 7);
            // each emitted set is a clique
            for (a, &i) in c.members.iter().enumerate() {
                for &j in &c.members[a + 1..] {
                    assert!(g.neighbors(i).contains(&j));
                }
            }
        }
        // every edge lies in exactly one star and one top
        for v in 0..g.vertex_count() {
            for &w in g.neighbors(v) {
                if v > w {
                    continue;
                }
                let in_stars = stars
                    .iter()
                    .filter(|c| c.members.contains(&v) && c.members.contains(&w))
                    .count();
                let in_tops = tops
                    .iter()
                    .filter(|c| c.members.contains(&v) && c.members.contains(&w))
                    .count();
                assert_eq!((in_stars, in_tops), (1, 1));
            }
        }
    }

    #[test]
    fn degenerate_clique_for_k_one() {
        let g = GrassmannGraph::new(gf(2), 3, 1).unwrap();
        let cliques = maximal_cliques(&g).unwrap();
        assert_eq!(cliques.len(), 1);
        assert_eq!(cliques[0].kind, CliqueKind::Whole);
        assert_eq!(cliques[0].members.len(), 7);
    }

    #[test]
    fn annihilator_is_graph_isomorphism() {
        // vertex- and edge-exhaustive check that S -> S^0 maps Γ_2(GF(2)^4)
        // isomorphically onto Γ_2 of the dual model
        let g = GrassmannGraph::new(gf(2), 4, 2).unwrap();
        for s in 0..g.vertex_count() {
            assert!(g.vertex_id(&g.vertex(s).annihilator()).is_some());
            for t in 0..g.vertex_count() {
                let d = grassmann_distance(g.vertex(s), g.vertex(t)).unwrap();
                let dd = grassmann_distance(
                    &g.vertex(s).annihilator(),
                    &g.vertex(t).annihilator(),
                )
                .unwrap();
                assert_eq!(d, dd);
            }
        }
    }

    #[test]
    fn graph_json_round_trip() {
        let g = GrassmannGraph::new(gf(2), 3, 1).unwrap();
        let json = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        match back {
            GraphJson::Grassmann { p, n, k, vertices, edges } => {
                assert_eq!((p, n, k), (2, 3, 1));
                assert_eq!(vertices.len(), 7);
                assert_eq!(edges.len(), 21);
            }
            GraphJson::Johnson { .. } => panic!("wrong kind"),
        }
    }
}
