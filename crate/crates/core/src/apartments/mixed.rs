//! Mixed-type configurations in a 2k-dimensional space W: a (2k)-independent
//! X ⊂ W and a (2k)-independent Y ⊂ W* whose hyperplanes y⁰ are spanned by
//! subsets of X while every ⟨x⟩ is an intersection of hyperplanes. The
//! intersection Z = J_k(X) ∩ J*_k(Y) is what the b(n,k) bound controls.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::apartments::JFamily;
use crate::combin::{binomial, k_subsets};
use crate::exec;
use crate::finfield::{is_m_independent, row_to_digits, digits_to_row, Matrix, Prime};
use crate::subspaces::{enumerate_subspaces, Subspace};
use crate::{Error, Result};

/// A validated mixed configuration. `hyperplanes[i]` is the annihilator of
/// `y[i]`; the indexing of X and Y is independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedConfig {
    p: Prime,
    k: usize,
    n: usize,
    x: Vec<Vec<u32>>,
    y: Vec<Vec<u32>>,
    hyperplanes: Vec<Subspace>,
}

impl MixedConfig {
    /// Builds and fully validates a configuration from X and the dual
    /// vectors Y; all violations are reported together, field by field.
    pub fn new(p: Prime, k: usize, n: usize, x: Vec<Vec<u32>>, y: Vec<Vec<u32>>) -> Result<MixedConfig> {
        let hyperplanes = y
            .iter()
            .map(|v| Ok(Subspace::line(p, v)?.annihilator()))
            .collect::<Result<Vec<_>>>()?;
        let cfg = MixedConfig {
            p,
            k,
            n,
            x,
            y,
            hyperplanes,
        };
        let issues = cfg.issues()?;
        if !issues.is_empty() {
            return Err(Error::domain(format!(
                "invalid mixed config: {}",
                issues.join("; ")
            )));
        }
        Ok(cfg)
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &[Vec<u32>] {
        &self.x
    }

    pub fn y(&self) -> &[Vec<u32>] {
        &self.y
    }

    pub fn hyperplanes(&self) -> &[Subspace] {
        &self.hyperplanes
    }

    /// Every violated invariant, one message per field. Empty means valid.
    pub fn issues(&self) -> Result<Vec<String>> {
        let mut issues = Vec::new();
        let w = 2 * self.k;
        if self.k < 2 {
            issues.push(format!("k = {} but the analysis needs k >= 2", self.k));
        }
        if self.n <= w {
            issues.push(format!("n = {} but the analysis needs n > 2k = {w}", self.n));
        }
        if self.x.len() != self.n || self.y.len() != self.n {
            issues.push(format!(
                "expected {} vectors in X and Y, got {} and {}",
                self.n,
                self.x.len(),
                self.y.len()
            ));
            return Ok(issues);
        }
        if self.x.iter().chain(&self.y).any(|v| v.len() != w) {
            issues.push(format!("all vectors must live in GF({})^{w}", self.p.get()));
            return Ok(issues);
        }
        if !is_m_independent(self.p, &self.x, w)? {
            issues.push(format!("X is not {w}-independent"));
        }
        if !is_m_independent(self.p, &self.y, w)? {
            issues.push(format!("Y is not {w}-independent"));
        }
        for (i, (v, u)) in self.y.iter().zip(&self.hyperplanes).enumerate() {
            let expected = Subspace::line(self.p, v)?.annihilator();
            if *u != expected {
                issues.push(format!("hyperplane {i} is not the annihilator of y_{i}"));
            }
            if u.dim() + 1 != w {
                issues.push(format!("hyperplane {i} has dimension {}", u.dim()));
            }
        }
        // every hyperplane must be spanned by a subset of X: with X being
        // (2k)-independent this means exactly 2k-1 of the x's lie inside
        for (j, u) in self.hyperplanes.iter().enumerate() {
            let inside = self.x.iter().filter(|v| u.contains_vector(v)).count();
            if inside != w - 1 {
                issues.push(format!(
                    "hyperplane {j} contains {inside} points of X, expected {}",
                    w - 1
                ));
            }
        }
        // every <x_i> must be the intersection of the hyperplanes through it
        for (i, v) in self.x.iter().enumerate() {
            let through: Vec<&Subspace> = self
                .hyperplanes
                .iter()
                .filter(|u| u.contains_vector(v))
                .collect();
            let mut meet = Subspace::full(self.p, w);
            for u in through {
                meet = meet.intersect(u)?;
            }
            match Subspace::line(self.p, v) {
                Ok(line) if meet == line => {}
                _ => issues.push(format!(
                    "<x_{i}> is not the intersection of its hyperplanes (got dim {})",
                    meet.dim()
                )),
            }
        }
        Ok(issues)
    }
}

#[derive(Serialize, Deserialize)]
struct MixedConfigJson {
    p: u32,
    k: usize,
    n: usize,
    x: Vec<String>,
    y: Vec<String>,
}

impl Serialize for MixedConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MixedConfigJson {
            p: self.p.get(),
            k: self.k,
            n: self.n,
            x: self.x.iter().map(|v| row_to_digits(v)).collect(),
            y: self.y.iter().map(|v| row_to_digits(v)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MixedConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MixedConfigJson::deserialize(deserializer)?;
        let p = Prime::new(raw.p).map_err(D::Error::custom)?;
        let x = raw
            .x
            .iter()
            .map(|s| digits_to_row(p, s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let y = raw
            .y
            .iter()
            .map(|s| digits_to_row(p, s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        MixedConfig::new(p, raw.k, raw.n, x, y).map_err(D::Error::custom)
    }
}

/// The intersection Z = J_k(X) ∩ J*_k(Y) of a configuration: the members
/// spanned by k-subsets of X that are also intersections of k distinct
/// hyperplanes.
#[derive(Debug, Clone)]
pub struct MixedIntersection {
    pub members: Vec<Subspace>,
}

impl MixedIntersection {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn mixed_intersection(cfg: &MixedConfig) -> Result<MixedIntersection> {
    let spans = JFamily::from_vectors(cfg.p, 2 * cfg.k, &cfg.x, cfg.k)?;
    let mut members = Vec::new();
    for subset in k_subsets(cfg.n, cfg.k) {
        let mut meet = Subspace::full(cfg.p, 2 * cfg.k);
        for &j in &subset {
            meet = meet.intersect(&cfg.hyperplanes[j - 1])?;
        }
        if meet.dim() == cfg.k && spans.member_rank(&meet).is_some() && !members.contains(&meet) {
            members.push(meet);
        }
    }
    members.sort();
    Ok(MixedIntersection { members })
}

/// Search outcome: every valid configuration found plus the number of
/// candidate X-sets examined. An empty `configs` with a completed search
/// means none exist at these parameters.
#[derive(Debug, Clone)]
pub struct MixedSearch {
    pub configs: Vec<MixedConfig>,
    pub examined: u64,
}

/// Exhaustive search for mixed configurations at (p, k, n) with W = GF(p)^2k.
///
/// Candidate X-sets are n-subsets of the projective points; for each
/// (2k)-independent X the hyperplane candidates are the spans of its
/// (2k−1)-subsets, and a choice of n of them survives only if every index is
/// covered exactly 2k−1 times (forced by the double count n(2k−1) together
/// with Y-independence) and the resulting Y is (2k)-independent. `budget`
/// bounds the X-candidate count.
pub fn search_mixed_configs(p: Prime, k: usize, n: usize, budget: u64) -> Result<MixedSearch> {
    search_impl(p, k, n, budget, false)
}

/// Single-threaded reference for [`search_mixed_configs`]; identical output.
pub fn search_mixed_configs_sequential(
    p: Prime,
    k: usize,
    n: usize,
    budget: u64,
) -> Result<MixedSearch> {
    search_impl(p, k, n, budget, true)
}

fn search_impl(p: Prime, k: usize, n: usize, budget: u64, sequential: bool) -> Result<MixedSearch> {
    if k < 2 {
        return Err(Error::domain("mixed search needs k >= 2"));
    }
    if n <= 2 * k {
        return Err(Error::domain(format!(
            "mixed search needs n > 2k, got n = {n}, k = {k}"
        )));
    }
    let w = 2 * k;
    let points = enumerate_subspaces(p, w, 1);
    let combos = binomial(points.len(), n);
    if combos > budget as u128 {
        return Err(Error::Budget {
            examined: combos.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    let candidates = k_subsets(points.len(), n);
    let hyper_subsets = k_subsets(n, w - 1);
    let per_x = |idx: &Vec<usize>| -> Option<Vec<MixedConfig>> {
        let x: Vec<Vec<u32>> = idx
            .iter()
            .map(|&i| points[i - 1].basis().row(0).to_vec())
            .collect();
        if !is_m_independent(p, &x, w).ok()? {
            return None;
        }
        // spans of (2k-1)-subsets of X and their dual generators
        let duals: Vec<Vec<u32>> = hyper_subsets
            .iter()
            .map(|subset| {
                let rows: Vec<Vec<u32>> = subset.iter().map(|&i| x[i - 1].clone()).collect();
                let kernel = Matrix::from_rows(p, &rows).ok()?.kernel();
                (kernel.rows() == 1).then(|| kernel.row(0).to_vec())
            })
            .collect::<Option<_>>()?;
        let mut found = Vec::new();
        for choice in k_subsets(hyper_subsets.len(), n) {
            // exact-cover filter: each index in exactly 2k-1 chosen subsets
            let mut cover = vec![0usize; n];
            for &c in &choice {
                for &i in &hyper_subsets[c - 1] {
                    cover[i - 1] += 1;
                }
            }
            if cover.iter().any(|&c| c != w - 1) {
                continue;
            }
            let y: Vec<Vec<u32>> = choice.iter().map(|&c| duals[c - 1].clone()).collect();
            if !is_m_independent(p, &y, w).ok()? {
                continue;
            }
            if let Ok(cfg) = MixedConfig::new(p, k, n, x.clone(), y) {
                found.push(cfg);
            }
        }
        (!found.is_empty()).then_some(found)
    };
    let nested = if sequential {
        exec::slice_filter_map_seq(&candidates, per_x)
    } else {
        exec::slice_filter_map(&candidates, per_x)
    };
    Ok(MixedSearch {
        configs: nested.into_iter().flatten().collect(),
        examined: candidates.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    use crate::apartments::{a_of, b_of};

    fn gf(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn search_rejects_n_equal_2k() {
        assert!(matches!(
            search_mixed_configs(gf(2), 2, 4, 1_000_000),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn search_budget_guard() {
        assert!(matches!(
            search_mixed_configs(gf(2), 2, 5, 10),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn gf2_search_configs_validate_and_satisfy_bounds() {
        let search = search_mixed_configs(gf(2), 2, 5, 10_000_000).unwrap();
        assert_eq!(search.examined, binomial(15, 5) as u64);
        let a = a_of(5, 2).unwrap();
        let b = b_of(5, 2).unwrap();
        for cfg in &search.configs {
            assert!(cfg.issues().unwrap().is_empty());
            let z = mixed_intersection(cfg).unwrap();
            assert!(Ratio::from_integer(z.size() as u128) <= b);
            assert!((z.size() as u128) < a);
            assert!(z.size() <= 5);
        }
    }

    #[test]
    fn sequential_search_agrees() {
        let a = search_mixed_configs(gf(2), 2, 5, 10_000_000).unwrap();
        let b = search_mixed_configs_sequential(gf(2), 2, 5, 10_000_000).unwrap();
        assert_eq!(a.examined, b.examined);
        assert_eq!(a.configs, b.configs);
    }

    #[test]
    fn config_json_round_trip() {
        let search = search_mixed_configs(gf(2), 2, 5, 10_000_000).unwrap();
        if let Some(cfg) = search.configs.first() {
            let json = serde_json::to_string(cfg).unwrap();
            let back: MixedConfig = serde_json::from_str(&json).unwrap();
            assert_eq!(&back, cfg);
        }
    }

    #[test]
    fn invalid_config_reports_issues() {
        let p = gf(2);
        // Y vectors that are not annihilator-compatible with the conditions:
        // simply too small an n
        let x: Vec<Vec<u32>> = vec![vec![1, 0, 0, 0]; 4];
        let y = x.clone();
        let err = MixedConfig::new(p, 2, 4, x, y).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("n > 2k")));
    }
}
