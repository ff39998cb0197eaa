//! The apartment graph A_k: apartments are adjacent when their member-set
//! intersection is a maximal inexact (equivalently special) subset. Includes
//! the constructive path algorithm behind its connectedness: align the two
//! frames one point at a time, then peel the linear-combination coefficients
//! of each swapped point one term at a time.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::{a_of, check_same_parameters, special_subsets, all_apartments, Apartment, Frame};
use crate::exec;
use crate::finfield::{Matrix, Prime};
use crate::graphs::VertexGraph;
use crate::subspaces::{enumerate_subspaces, Subspace};
use crate::{Error, Result};

/// True iff the member-set intersection of `a` and `b` equals one of the
/// special subsets of `a`. Symmetric for valid apartments.
pub fn apartments_adjacent(a: &Apartment, b: &Apartment) -> Result<bool> {
    check_same_parameters(a, b)?;
    if a == b {
        return Ok(false);
    }
    let bs = b.member_set();
    let inter: BTreeSet<Subspace> = a
        .members()
        .iter()
        .filter(|m| bs.contains(m))
        .cloned()
        .collect();
    let expected = a_of(a.frame().n(), a.k())?;
    if inter.len() as u128 != expected {
        return Ok(false);
    }
    for s in special_subsets(a.family())? {
        if s.member_set(a.family()) == inter {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The graph A_k on all apartments of G_k(V).
#[derive(Debug, Clone)]
pub struct ApartmentGraph {
    apartments: Vec<Apartment>,
    adjacency: Vec<Vec<usize>>,
}

impl ApartmentGraph {
    pub fn apartments(&self) -> &[Apartment] {
        &self.apartments
    }
}

impl VertexGraph for ApartmentGraph {
    fn vertex_count(&self) -> usize {
        self.apartments.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }
}

/// Builds A_k over every apartment of GF(p)^n, interning members into dense
/// ids so the pairwise intersection tests are integer work.
pub fn apartment_graph(p: Prime, n: usize, k: usize, budget: u64) -> Result<ApartmentGraph> {
    let apartments = all_apartments(p, n, k, budget)?;
    let vertex_ids: HashMap<Subspace, u32> = enumerate_subspaces(p, n, k)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();
    let expected = a_of(n, k)? as usize;
    struct Interned {
        members: Vec<u32>,
        specials: HashSet<Vec<u32>>,
    }
    let interned: Vec<Interned> = apartments
        .iter()
        .map(|a| {
            let by_rank: Vec<u32> = a.members().iter().map(|m| vertex_ids[m]).collect();
            let mut members = by_rank.clone();
            members.sort_unstable();
            let specials = special_subsets(a.family())?
                .into_iter()
                .map(|s| {
                    let mut ids: Vec<u32> =
                        s.member_ranks.iter().map(|&r| by_rank[r]).collect();
                    ids.sort_unstable();
                    ids
                })
                .collect();
            Ok(Interned { members, specials })
        })
        .collect::<Result<_>>()?;
    let adjacency = exec::indexed_map(interned.len(), |i| {
        (0..interned.len())
            .filter(|&j| {
                if i == j {
                    return false;
                }
                let inter = sorted_intersection(&interned[i].members, &interned[j].members);
                inter.len() == expected && interned[i].specials.contains(&inter)
            })
            .collect()
    });
    Ok(ApartmentGraph {
        apartments,
        adjacency,
    })
}

fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// A path from `a` to `b` in A_k with every consecutive pair adjacent,
/// following the two-phase construction: frame alignment (replace one frame
/// point at a time, choosing the lowest-index hyperplane that misses the
/// incoming point), then coefficient peeling of each single-point swap.
pub fn connect_apartments(a: &Apartment, b: &Apartment) -> Result<Vec<Apartment>> {
    check_same_parameters(a, b)?;
    let n = a.frame().n();
    let k = a.k();
    if k < 2 || 2 * k > n {
        return Err(Error::domain("connect_apartments needs 1 < k <= n-k"));
    }
    let p = a.frame().p();
    let target: BTreeSet<Subspace> = b.frame().point_set();
    let mut path = vec![a.clone()];
    let mut cur: Vec<Subspace> = a.frame().canonical().points().to_vec();
    loop {
        let cur_set: BTreeSet<Subspace> = cur.iter().cloned().collect();
        if cur_set == target {
            break;
        }
        let shared = cur_set.intersection(&target).count();
        let next: Vec<Subspace> = if shared == n - 1 {
            b.frame().canonical().points().to_vec()
        } else {
            let incoming = target
                .iter()
                .find(|pt| !cur_set.contains(pt))
                .expect("sets differ")
                .clone();
            let removable: Vec<usize> = (0..n)
                .filter(|&i| !target.contains(&cur[i]))
                .collect();
            let drop_at = removable
                .iter()
                .copied()
                .find(|&i| {
                    let rest: Vec<Vec<u32>> = (0..n)
                        .filter(|&t| t != i)
                        .map(|t| cur[t].basis().row(0).to_vec())
                        .collect();
                    !Subspace::span(p, n, &rest)
                        .map(|s| s.contains_vector(incoming.basis().row(0)))
                        .unwrap_or(true)
                })
                .ok_or_else(|| {
                    Error::invariant("no removable frame point misses the incoming point")
                })?;
            let mut next = cur.clone();
            next[drop_at] = incoming;
            next.sort();
            next
        };
        let segment = peel_single_swap(p, n, k, &cur, &next)?;
        for apt in segment {
            if path.last() != Some(&apt) {
                path.push(apt);
            }
        }
        cur = next;
    }
    debug_assert_eq!(path.last(), Some(b));
    Ok(path)
}

/// Path of apartments between two bases sharing n−1 points: write the
/// incoming point in the coordinates of the old base and add its nonzero
/// terms one at a time; each step changes a single coefficient, which is
/// exactly the adjacent case.
fn peel_single_swap(
    p: Prime,
    n: usize,
    k: usize,
    cur: &[Subspace],
    next: &[Subspace],
) -> Result<Vec<Apartment>> {
    let cur_set: BTreeSet<Subspace> = cur.iter().cloned().collect();
    let next_set: BTreeSet<Subspace> = next.iter().cloned().collect();
    let incoming: Vec<&Subspace> = next_set.difference(&cur_set).collect();
    if incoming.is_empty() {
        return Ok(vec![Apartment::from_frame(Frame::new(cur.to_vec())?, k)?]);
    }
    if incoming.len() != 1 {
        return Err(Error::invariant("peel expects bases sharing n-1 points"));
    }
    let incoming = incoming[0];
    let outgoing_at = (0..n)
        .find(|&i| !next_set.contains(&cur[i]))
        .expect("one point leaves");

    let base = Matrix::from_rows(
        p,
        &cur.iter()
            .map(|pt| pt.basis().row(0).to_vec())
            .collect::<Vec<_>>(),
    )?;
    let coords = solve_coordinates(&base, incoming.basis().row(0))?;
    if coords[outgoing_at] == 0 {
        return Err(Error::invariant(
            "incoming point lies in the span of the retained points",
        ));
    }
    let terms: Vec<usize> = (0..n)
        .filter(|&t| t != outgoing_at && coords[t] != 0)
        .collect();

    let q = p.get();
    let mut running: Vec<u32> = cur[outgoing_at]
        .basis()
        .row(0)
        .iter()
        .map(|&e| (e * coords[outgoing_at]) % q)
        .collect();
    let mut out = vec![Apartment::from_frame(Frame::new(cur.to_vec())?, k)?];
    for &t in &terms {
        for (slot, &e) in running.iter_mut().zip(cur[t].basis().row(0)) {
            *slot = (*slot + coords[t] * e) % q;
        }
        let mut pts = cur.to_vec();
        pts[outgoing_at] = Subspace::line(p, &running)?;
        out.push(Apartment::from_frame(Frame::new(pts)?, k)?);
    }
    debug_assert_eq!(out.last().unwrap().frame().point_set(), next_set);
    Ok(out)
}

/// Solves x · base = v for a full-rank square base matrix.
fn solve_coordinates(base: &Matrix, v: &[u32]) -> Result<Vec<u32>> {
    let inv = invert(base)?;
    let row = Matrix::from_rows(base.modulus(), &[v.to_vec()])?;
    Ok(row.mul(&inv)?.row(0).to_vec())
}

/// Gauss-Jordan inverse via the augmented [M | I] reduction.
fn invert(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::domain("invert: matrix is not square"));
    }
    let p = m.modulus();
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let mut row = m.row(r).to_vec();
        row.extend((0..n).map(|c| u32::from(c == r)));
        rows.push(row);
    }
    let (reduced, rank) = Matrix::from_rows(p, &rows)?.rref();
    // the identity block keeps the augmented rank at n, so singularity shows
    // up as a pivot escaping the left block
    if rank != n || reduced.pivot_cols().iter().any(|&c| c >= n) {
        return Err(Error::domain("invert: matrix is singular"));
    }
    let inv_rows: Vec<Vec<u32>> = (0..n).map(|r| reduced.row(r)[n..].to_vec()).collect();
    Matrix::from_rows(p, &inv_rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartments::random_apartment;
    use crate::graphs::{bfs_from, diameter};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn standard_apartment() -> Apartment {
        Apartment::from_frame(Frame::standard(gf(2), 4), 2).unwrap()
    }

    #[test]
    fn single_coefficient_substitution_is_adjacent() {
        let a = standard_apartment();
        // x4 -> x4 + x1
        let vectors = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 0, 0, 1],
        ];
        let b = Apartment::from_frame(Frame::from_vectors(gf(2), 4, &vectors).unwrap(), 2).unwrap();
        assert!(apartments_adjacent(&a, &b).unwrap());
        assert!(apartments_adjacent(&b, &a).unwrap());
        assert!(!apartments_adjacent(&a, &a).unwrap());
    }

    #[test]
    fn two_point_difference_is_generically_not_adjacent() {
        let a = standard_apartment();
        let vectors = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
        ];
        let b = Apartment::from_frame(Frame::from_vectors(gf(2), 4, &vectors).unwrap(), 2).unwrap();
        assert!(!apartments_adjacent(&a, &b).unwrap());
    }

    #[test]
    fn trivial_path() {
        let a = standard_apartment();
        let path = connect_apartments(&a, &a).unwrap();
        assert_eq!(path.len(), 1);
        assert_eq!(path[0], a);
    }

    #[test]
    fn coefficient_one_substitution_gives_length_two_path() {
        let a = standard_apartment();
        let vectors = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 1],
        ];
        let b = Apartment::from_frame(Frame::from_vectors(gf(2), 4, &vectors).unwrap(), 2).unwrap();
        let path = connect_apartments(&a, &b).unwrap();
        assert_eq!(path.len(), 2);
        assert_eq!(path[0], a);
        assert_eq!(path[1], b);
        assert!(apartments_adjacent(&path[0], &path[1]).unwrap());
    }

    #[test]
    fn random_paths_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..8 {
            let a = random_apartment(gf(2), 4, 2, &mut rng).unwrap();
            let b = random_apartment(gf(2), 4, 2, &mut rng).unwrap();
            let path = connect_apartments(&a, &b).unwrap();
            assert_eq!(path.first(), Some(&a));
            assert_eq!(path.last(), Some(&b));
            assert!(path.len() <= 4 * 4 + 1);
            for w in path.windows(2) {
                assert!(
                    apartments_adjacent(&w[0], &w[1]).unwrap(),
                    "consecutive apartments must be adjacent"
                );
            }
        }
    }

    #[test]
    fn gf3_paths_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..4 {
            let a = random_apartment(gf(3), 4, 2, &mut rng).unwrap();
            let b = random_apartment(gf(3), 4, 2, &mut rng).unwrap();
            let path = connect_apartments(&a, &b).unwrap();
            assert_eq!(path.first(), Some(&a));
            assert_eq!(path.last(), Some(&b));
            for w in path.windows(2) {
                assert!(apartments_adjacent(&w[0], &w[1]).unwrap());
            }
        }
    }

    #[test]
    fn small_apartment_graph_is_connected() {
        // (2,4,2): 840 apartments; connectivity via BFS
        let g = apartment_graph(gf(2), 4, 2, 10_000_000).unwrap();
        assert_eq!(g.vertex_count(), 840);
        let dist = bfs_from(&g, 0);
        assert!(dist.iter().all(|d| d.is_some()));
        assert!(diameter(&g).is_ok());
    }

    #[test]
    fn solve_and_invert() {
        let m = Matrix::from_rows(gf(3), &[vec![1, 2, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        let inv = invert(&m).unwrap();
        let prod = m.mul(&inv).unwrap();
        assert_eq!(prod, Matrix::identity(gf(3), 3));
        let coords = solve_coordinates(&m, &[2, 1, 2]).unwrap();
        let recon = Matrix::from_rows(gf(3), &[coords]).unwrap().mul(&m).unwrap();
        assert_eq!(recon.row(0), &[2, 1, 2]);
        // det = 3 ≡ 0 mod 3: singular over GF(3)
        let s = Matrix::from_rows(gf(3), &[vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert!(invert(&s).is_err());
    }
}
