//! J-mapping checks: a map is a J-mapping when the image of every apartment
//! is a J(n,k)-subset. The instance-level equivalence with being an
//! isometric embedding — including injectivity and the uniform-type /
//! common-subspace consequences — is verified here; any one-directional
//! discrepancy is surfaced as a falsification candidate.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apartments::{all_apartments, random_apartment, Apartment, Frame};
use crate::exec;
use crate::graphs::VertexGraph;
use crate::subspaces::Subspace;
use crate::{Error, Result};

use super::classify::{classify_j_subset, JSubsetWitness};
use super::{is_isometric_embedding, IsometryVerdict, SubspaceMap};

/// How the apartments of the source are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JMappingMode {
    /// every apartment of the source Grassmannian
    Exhaustive,
    /// `count` random frames drawn from the seeded generator; the seed only
    /// affects which apartments are visited, never any verdict on them
    Sampled { count: usize, seed: u64 },
}

/// Outcome of a J-mapping audit, with one classified witness per visited
/// apartment when the map passes.
#[derive(Debug)]
pub struct JMappingReport {
    pub pass: bool,
    pub offending: Option<Frame>,
    pub checked: usize,
    pub exhaustive: bool,
    pub images: Vec<(Frame, JSubsetWitness)>,
}

/// Classifies the image of every (or each sampled) apartment of the source.
/// Fails, naming the offending apartment, as soon as one image is not a
/// J(n,k)-subset.
pub fn is_j_mapping(f: &SubspaceMap, mode: JMappingMode, budget: u64) -> Result<JMappingReport> {
    let (p, n, k) = (f.source().p(), f.source().n(), f.source().k());
    let (apartments, exhaustive) = match mode {
        JMappingMode::Exhaustive => (all_apartments(p, n, k, budget)?, true),
        JMappingMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let apts: Vec<Apartment> = (0..count)
                .map(|_| random_apartment(p, n, k, &mut rng))
                .collect::<Result<_>>()?;
            (apts, false)
        }
    };
    let checked = apartments.len();
    let outcomes: Vec<Result<(Frame, JSubsetWitness)>> = exec::slice_map(&apartments, |apt| {
        let ids = apt.member_ids(f.source())?;
        let image: Vec<Subspace> = ids.iter().map(|&id| f.image(id).clone()).collect();
        let witness = classify_j_subset(&image, n, k)?;
        Ok((apt.frame().clone(), witness))
    });
    let mut images = Vec::with_capacity(checked);
    for outcome in outcomes {
        let (frame, witness) = outcome?;
        if !witness.is_j_subset() {
            return Ok(JMappingReport {
                pass: false,
                offending: Some(frame),
                checked,
                exhaustive,
                images,
            });
        }
        images.push((frame, witness));
    }
    Ok(JMappingReport {
        pass: true,
        offending: None,
        checked,
        exhaustive,
        images,
    })
}

/// Instance report for the J-mapping ⇔ isometric-embedding equivalence.
#[derive(Debug)]
pub struct TheoremMainReport {
    pub j_report: JMappingReport,
    pub isometry: IsometryVerdict,
    pub agree: bool,
    /// checked when the map is a J-mapping; must then hold
    pub injective: Option<bool>,
    /// kind shared by all apartment images of a passing map
    pub uniform_kind: Option<&'static str>,
    pub common_lower: Option<Subspace>,
    pub common_upper: Option<Subspace>,
    /// set whenever any verified consequence fails; this firing means the
    /// mathematics and the implementation disagree somewhere
    pub falsification: Option<String>,
}

impl TheoremMainReport {
    pub fn j_pass(&self) -> bool {
        self.j_report.pass
    }

    pub fn iso_pass(&self) -> bool {
        self.isometry.is_pass()
    }
}

/// Runs both verdicts on `f` and cross-checks every consequence that must
/// hold on a passing instance: verdict agreement, injectivity, uniform
/// image type, and the common lower/upper subspace of the image witnesses.
pub fn verify_theorem_main(
    f: &SubspaceMap,
    mode: JMappingMode,
    budget: u64,
) -> Result<TheoremMainReport> {
    let j_report = is_j_mapping(f, mode, budget)?;
    let isometry = is_isometric_embedding(f)?;
    let agree = j_report.pass == isometry.is_pass();
    let mut falsification = None;
    if !agree {
        falsification = Some(format!(
            "verdicts disagree: j_mapping = {}, isometric = {:?}, offending apartment = {:?}",
            j_report.pass, isometry, j_report.offending
        ));
    }

    let mut injective = None;
    let mut uniform_kind = None;
    let mut common_lower = None;
    let mut common_upper = None;
    if j_report.pass {
        let distinct: std::collections::HashSet<&Subspace> = f.table().iter().collect();
        let inj = distinct.len() == f.source().vertex_count();
        injective = Some(inj);
        if !inj && falsification.is_none() {
            falsification = Some("J-mapping with a non-injective table".into());
        }

        let kinds: Vec<&'static str> = j_report
            .images
            .iter()
            .map(|(_, w)| w.kind_name())
            .collect();
        if let Some(first) = kinds.first() {
            if kinds.iter().all(|k| k == first) {
                uniform_kind = Some(*first);
            } else if falsification.is_none() {
                falsification = Some("apartment images have mixed J-subset types".into());
            }
        }

        if uniform_kind.is_some() {
            let lowers: Vec<&Subspace> = j_report
                .images
                .iter()
                .filter_map(|(_, w)| w.lower())
                .collect();
            if !lowers.is_empty() && lowers.len() == j_report.images.len() {
                if lowers.iter().all(|s| *s == lowers[0]) {
                    common_lower = Some(lowers[0].clone());
                } else if falsification.is_none() {
                    falsification =
                        Some("first-type/parabolic images disagree on the lower subspace".into());
                }
            }
            let uppers: Vec<&Subspace> = j_report
                .images
                .iter()
                .filter_map(|(_, w)| w.upper())
                .collect();
            if !uppers.is_empty() && uppers.len() == j_report.images.len() {
                if uppers.iter().all(|s| *s == uppers[0]) {
                    common_upper = Some(uppers[0].clone());
                } else if uniform_kind == Some("second") && falsification.is_none() {
                    falsification =
                        Some("second-type images disagree on the upper subspace".into());
                }
            }
        }
    }

    Ok(TheoremMainReport {
        j_report,
        isometry,
        agree,
        injective,
        uniform_kind,
        common_lower,
        common_upper,
        falsification,
    })
}
