//! Strong J-mappings and recovery of the inducing linear map: a passing
//! strong map must factor as Φ^U_S ∘ (l)_k, possibly composed with the
//! target annihilator. The map l is solved from the images of the standard
//! frame points — scalars pinned through images of ⟨e_1 + e_j, …⟩ vertices —
//! and the factored form is replayed over every vertex.

use crate::apartments::{Apartment, Frame};
use crate::finfield::Matrix;
use crate::graphs::VertexGraph;
use crate::subspaces::{embed_in, quotient_lift, quotient_push, Subspace};
use crate::{Error, Result};

use super::classify::JSubsetWitness;
use super::jmap::{verify_theorem_main, JMappingMode, TheoremMainReport};
use super::{push_into_model, LinearEmbedding, SubspaceMap};

/// Which normal form the recovery matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    /// f = Φ^U_S ∘ (l)_k
    PrimalInterval { lower: Subspace, upper: Subspace },
    /// f = annihilator ∘ (Φ^U_S ∘ (l)_k): recovered after composing with the
    /// target annihilator
    DualComposed { lower: Subspace, upper: Subspace },
}

/// Report of the strong-J-mapping analysis.
#[derive(Debug)]
pub struct StrongReport {
    pub theorem_main: TheoremMainReport,
    pub strong: bool,
    pub normal_form: Option<NormalForm>,
    pub recovered: Option<LinearEmbedding>,
    /// the factored form reproduces f on every vertex
    pub reproduces: bool,
    /// recovery failure on a passing strong instance; must never fire
    pub falsification: Option<String>,
}

/// Detects strength (some apartment image is an apartment in a parabolic
/// subspace), recovers the inducing linear map, and replays it vertex by
/// vertex. Requires k ≤ n−k; larger k is handled by the caller through the
/// dual-model reduction of the source.
pub fn verify_strong_corollaries(
    f: &SubspaceMap,
    mode: JMappingMode,
    budget: u64,
) -> Result<StrongReport> {
    let (n, k) = (f.source().n(), f.source().k());
    if k < 2 || n - 1 <= k {
        return Err(Error::domain("strong analysis needs 1 < k < n-1"));
    }
    if k > n - k {
        return Err(Error::domain(
            "strong analysis expects k <= n-k; reduce through the dual model first",
        ));
    }
    let theorem_main = verify_theorem_main(f, mode, budget)?;
    if !(theorem_main.j_pass() && theorem_main.iso_pass() && theorem_main.falsification.is_none())
    {
        return Ok(StrongReport {
            theorem_main,
            strong: false,
            normal_form: None,
            recovered: None,
            reproduces: false,
            falsification: None,
        });
    }

    // strong: some apartment image is an apartment in a parabolic subspace,
    // i.e. a parabolic witness, or a first/second witness whose recovered
    // family is actually a base of its model
    let strong = theorem_main.j_report.images.iter().any(|(_, w)| match w {
        JSubsetWitness::ApartmentInParabolic { .. } => true,
        JSubsetWitness::First { vectors, .. } | JSubsetWitness::Second { vectors, .. } => {
            Matrix::from_rows(f.target().p(), vectors)
                .map(|m| m.rank() == n)
                .unwrap_or(false)
        }
        JSubsetWitness::NotJSubset { .. } => false,
    });
    if !strong {
        return Ok(StrongReport {
            theorem_main,
            strong: false,
            normal_form: None,
            recovered: None,
            reproduces: false,
            falsification: None,
        });
    }

    let (primal_target, dual) = match theorem_main.uniform_kind {
        Some("second") => (f.annihilator_composed()?, true),
        _ => (f.clone(), false),
    };
    let lower = match (dual, &theorem_main.common_lower, &theorem_main.common_upper) {
        (false, Some(lower), _) => lower.clone(),
        // the dual of a second-type map is first-type below upper⁰
        (true, _, Some(upper)) => upper.annihilator(),
        _ => {
            return Ok(StrongReport {
                theorem_main,
                strong: true,
                normal_form: None,
                recovered: None,
                reproduces: false,
                falsification: Some("no common bounding subspace to recover from".into()),
            })
        }
    };

    match recover_primal(&primal_target, &lower) {
        Ok((l, upper, reproduces)) => {
            let normal_form = if dual {
                NormalForm::DualComposed {
                    lower,
                    upper,
                }
            } else {
                NormalForm::PrimalInterval {
                    lower,
                    upper,
                }
            };
            let falsification = (!reproduces)
                .then(|| "recovered linear map does not reproduce f".to_string());
            Ok(StrongReport {
                theorem_main,
                strong: true,
                normal_form: Some(normal_form),
                recovered: Some(l),
                reproduces,
                falsification,
            })
        }
        Err(e) => Ok(StrongReport {
            theorem_main,
            strong: true,
            normal_form: None,
            recovered: None,
            reproduces: false,
            falsification: Some(format!("recovery failed on a passing instance: {e}")),
        }),
    }
}

/// Recovers l: V → U/S from a map known to land in [S, ·]_k' and replays
/// Φ^U_S ∘ (l)_k over every vertex. Returns the embedding, the recovered
/// upper bound U, and the replay verdict.
fn recover_primal(f: &SubspaceMap, lower: &Subspace) -> Result<(LinearEmbedding, Subspace, bool)> {
    let p = f.source().p();
    let (n, k) = (f.source().n(), f.source().k());
    // U = sum of all images; for an induced map this is S + <l(V)>
    let mut upper = lower.clone();
    for s in f.table() {
        upper = upper.sum(s)?;
    }
    if upper.dim() != lower.dim() + n {
        return Err(Error::invariant(format!(
            "image span has dimension {}, expected dim S + n = {}",
            upper.dim(),
            lower.dim() + n
        )));
    }
    let carrier = quotient_push(&upper, lower)?;

    // frame-point images: T_i = ∩ of the images of the standard-apartment
    // members through e_i, pushed into the n-dimensional model of U/S
    let apartment = Apartment::from_frame(Frame::standard(p, n), k)?;
    let mut model_points = Vec::with_capacity(n);
    for i in 1..=n {
        let mut meet: Option<Subspace> = None;
        for (r, subset) in apartment.family().subsets().iter().enumerate() {
            if !subset.contains(i) {
                continue;
            }
            let image = f.image_of(&apartment.members()[r])?;
            meet = Some(match meet {
                None => image.clone(),
                Some(acc) => acc.intersect(image)?,
            });
        }
        let t = meet.expect("index occurs in some subset");
        let line = push_into_model(&t, lower, &carrier)?;
        if line.dim() != 1 {
            return Err(Error::invariant(format!(
                "frame point {i} does not map to a point (dim {})",
                line.dim()
            )));
        }
        model_points.push(line.basis().row(0).to_vec());
    }

    // pin the scalars: l(e_1) := x_1, and for each j the image of a vertex
    // through e_1 + e_j meets <x_1, x_j> in exactly <x_1 + λ_j x_j>
    let q = p.get();
    let mut scalars = vec![0u32; n];
    scalars[0] = 1;
    for j in 1..n {
        let mut rows = Vec::with_capacity(k);
        let mut probe = vec![0u32; n];
        probe[0] = 1;
        probe[j] = 1;
        rows.push(probe);
        for t in (1..n).filter(|&t| t != j).take(k - 1) {
            let mut e = vec![0u32; n];
            e[t] = 1;
            rows.push(e);
        }
        let vertex = Subspace::span(p, n, &rows)?;
        let image = push_into_model(f.image_of(&vertex)?, lower, &carrier)?;
        let plane = Subspace::span(
            p,
            carrier.dim(),
            &[model_points[0].clone(), model_points[j].clone()],
        )?;
        let meet = image.intersect(&plane)?;
        if meet.dim() != 1 {
            return Err(Error::invariant(format!(
                "scalar probe for index {j} meets the coordinate plane in dim {}",
                meet.dim()
            )));
        }
        let rep = meet.basis().row(0);
        let (mut a, mut b) = (0u32, 0u32);
        'scan: for ca in 0..q {
            for cb in 0..q {
                let combo: Vec<u32> = model_points[0]
                    .iter()
                    .zip(&model_points[j])
                    .map(|(&x, &y)| (ca * x + cb * y) % q)
                    .collect();
                if combo == rep {
                    (a, b) = (ca, cb);
                    break 'scan;
                }
            }
        }
        if a == 0 {
            return Err(Error::invariant(format!(
                "scalar probe for index {j} has no x_1 component"
            )));
        }
        scalars[j] = (b * p.inverse(a)) % q;
        if scalars[j] == 0 {
            return Err(Error::invariant(format!(
                "recovered scalar for index {j} vanishes"
            )));
        }
    }

    let rows: Vec<Vec<u32>> = model_points
        .iter()
        .zip(&scalars)
        .map(|(x, &s)| x.iter().map(|&e| (e * s) % q).collect())
        .collect();
    let l = LinearEmbedding::new(Matrix::from_rows(p, &rows)?)?;

    // replay: f(P) must equal the lift of <l(P)> through the carrier
    let mut reproduces = true;
    for v in 0..f.source().vertex_count() {
        let image_model = l.image_of(f.source().vertex(v))?;
        let rebuilt = quotient_lift(&embed_in(&image_model, &carrier)?, lower)?;
        if &rebuilt != f.image(v) {
            reproduces = false;
            break;
        }
    }
    Ok((l, upper, reproduces))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::embeddings::{
        annihilator_map, compose_quotient_lift, identity_map, linear_image_map,
    };
    use crate::finfield::Prime;
    use crate::graphs::GrassmannGraph;

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    const BUDGET: u64 = 10_000_000;

    #[test]
    fn invertible_map_recovers_up_to_scalar() {
        let m = Matrix::from_rows(
            gf(2),
            &[
                vec![1, 1, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
            ],
        )
        .unwrap();
        let l = LinearEmbedding::new(m).unwrap();
        let f = linear_image_map(&l, 2).unwrap();
        let report =
            verify_strong_corollaries(&f, JMappingMode::Exhaustive, BUDGET).unwrap();
        assert!(report.strong);
        assert!(report.reproduces, "{report:?}");
        assert!(report.falsification.is_none());
        assert!(matches!(
            report.normal_form,
            Some(NormalForm::PrimalInterval { .. })
        ));
    }

    #[test]
    fn annihilator_matches_dual_normal_form() {
        let g = Arc::new(GrassmannGraph::new(gf(2), 4, 2).unwrap());
        let f = annihilator_map(g).unwrap();
        let report =
            verify_strong_corollaries(&f, JMappingMode::Exhaustive, BUDGET).unwrap();
        assert!(report.strong);
        assert!(report.reproduces, "{report:?}");
        assert!(matches!(
            report.normal_form,
            Some(NormalForm::DualComposed { .. })
        ));
    }

    #[test]
    fn interval_shaped_map_recovers() {
        // Φ_S ∘ (l)_2 with S a line of GF(2)^6 and l: GF(2)^4 -> GF(2)^5
        let l = LinearEmbedding::inclusion(gf(2), 4, 5).unwrap();
        let base = linear_image_map(&l, 2).unwrap();
        let s = Subspace::line(gf(2), &[0, 0, 0, 0, 0, 1]).unwrap();
        let f = compose_quotient_lift(&base, &s).unwrap();
        let report =
            verify_strong_corollaries(&f, JMappingMode::Exhaustive, BUDGET).unwrap();
        assert!(report.strong);
        assert!(report.reproduces, "{report:?}");
        match report.normal_form {
            Some(NormalForm::PrimalInterval { ref lower, .. }) => assert_eq!(lower, &s),
            ref other => panic!("unexpected form {other:?}"),
        }
    }

    #[test]
    fn non_strong_or_failing_maps_report_without_recovery() {
        let g = Arc::new(GrassmannGraph::new(gf(2), 4, 2).unwrap());
        let f = identity_map(g.clone()).unwrap();
        let bad = f.with_entry(0, g.vertex(1).clone()).unwrap();
        let report =
            verify_strong_corollaries(&bad, JMappingMode::Exhaustive, BUDGET).unwrap();
        assert!(!report.strong);
        assert!(report.recovered.is_none());
        assert!(report.falsification.is_none());
    }
}
