use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::blowup::Weighting;
use crate::count::{BigCount, CliqueCounter};
use crate::error::{Error, Result};
use crate::graph::{all_k_clique_independent_sets, all_max_independent_sets, Graph};
use crate::search::brute::{brute_force_min_with, SearchBudget};

/// Every m-weighting uniform on `support`: each choice of the `m mod |U|`
/// vertices that receive the ceiling, in lexicographic order of that choice.
pub fn all_uniform_weightings(g: &Graph, support: &[usize], m: u64) -> Result<Vec<Weighting>> {
    let mut set = support.to_vec();
    set.sort_unstable();
    set.dedup();
    g.checked_mask(&set)?;
    if set.is_empty() {
        return if m == 0 { Ok(vec![Weighting::zeros(g.n())]) } else { Err(Error::EmptySupport(m)) };
    }
    let size = set.len() as u64;
    let floor = m / size;
    let r = (m % size) as usize;
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..r).collect();
    loop {
        let mut weights = vec![0; g.n()];
        for &v in &set {
            weights[v] = floor;
        }
        for &i in &pick {
            weights[set[i]] += 1;
        }
        out.push(Weighting::new(weights)?);
        // next r-subset of 0..|U| in lexicographic order
        let Some(i) = (0..r).rev().find(|&i| pick[i] < set.len() - r + i) else {
            break;
        };
        pick[i] += 1;
        for j in (i + 1)..r {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepFinding {
    pub min_value: BigCount,
    pub minimizer_count: u64,
    /// Best value over all weightings uniform on a k-clique independent set.
    pub best_uniform_value: BigCount,
    /// First k-clique independent set (by size, then lexicographically)
    /// with a uniform weighting attaining `best_uniform_value`.
    pub witness_set: Vec<usize>,
    pub witness: Weighting,
    /// Some weighting uniform on some k-clique independent set is minimal.
    pub conjecture_holds: bool,
    /// Some weighting uniform on some maximum independent set is minimal.
    pub uniform_alpha_minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepOutcome {
    Evaluated(SweepFinding),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub graph: usize,
    pub m: u64,
    pub k: usize,
    pub outcome: SweepOutcome,
}

/// Rows are ordered by graph index, then `m`, then `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    fn evaluated(&self) -> impl Iterator<Item = (&SweepRow, &SweepFinding)> {
        self.rows.iter().filter_map(|row| match &row.outcome {
            SweepOutcome::Evaluated(f) => Some((row, f)),
            SweepOutcome::Skipped(_) => None,
        })
    }

    /// Instances where no uniform weighting on a k-clique independent set
    /// attains the minimum.
    pub fn violations(&self) -> Vec<&SweepRow> {
        self.evaluated().filter(|(_, f)| !f.conjecture_holds).map(|(r, _)| r).collect()
    }

    /// Instances where no uniform-α weighting attains the minimum.
    pub fn non_uniform_alpha(&self) -> Vec<&SweepRow> {
        self.evaluated().filter(|(_, f)| !f.uniform_alpha_minimal).map(|(r, _)| r).collect()
    }

    pub fn skipped(&self) -> usize {
        self.rows.iter().filter(|r| matches!(r.outcome, SweepOutcome::Skipped(_))).count()
    }
}

/// Largest vertex count for which k-clique independent sets are enumerated.
const SWEEP_MAX_VERTICES: usize = 20;

/// For each graph, total and clique size: the exact minimum of π_k, and
/// whether a weighting uniform on a k-clique independent set (respectively a
/// maximum independent set) attains it. Instances beyond the budget are
/// skipped and recorded.
pub fn conjecture_sweep(
    graphs: &[Graph],
    m_range: RangeInclusive<u64>,
    k_range: RangeInclusive<usize>,
    budget: SearchBudget,
) -> Result<SweepReport> {
    if *k_range.start() < 2 {
        return Err(Error::CliqueSize { k: *k_range.start(), min: 2 });
    }
    let mut rows = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let max_indep = all_max_independent_sets(g);
        for m in m_range.clone() {
            for k in k_range.clone() {
                let outcome = match evaluate(g, m, k, budget, &max_indep) {
                    Ok(f) => SweepOutcome::Evaluated(f),
                    Err(Error::BudgetExceeded { required, budget }) => {
                        SweepOutcome::Skipped(format!("{required} weightings exceed the budget of {budget}"))
                    }
                    Err(Error::TooManyVertices { n, max }) => {
                        SweepOutcome::Skipped(format!("{n} vertices exceed the sweep limit of {max}"))
                    }
                    Err(e) => return Err(e),
                };
                rows.push(SweepRow { graph: index, m, k, outcome });
            }
        }
    }
    Ok(SweepReport { rows })
}

fn evaluate(g: &Graph, m: u64, k: usize, budget: SearchBudget, max_indep: &[Vec<usize>]) -> Result<SweepFinding> {
    if g.n() > SWEEP_MAX_VERTICES {
        return Err(Error::TooManyVertices { n: g.n(), max: SWEEP_MAX_VERTICES });
    }
    let brute = brute_force_min_with(g, m, k, budget)?;
    let counter = CliqueCounter::new(g, g.all_mask(), k, m);
    let mut best: Option<(BigCount, Vec<usize>, Weighting)> = None;
    for set in all_k_clique_independent_sets(g, k)? {
        if set.is_empty() && m > 0 {
            continue;
        }
        for w in all_uniform_weightings(g, &set, m)? {
            let value = counter.count(w.weights());
            if best.as_ref().is_none_or(|b| value < b.0) {
                best = Some((value, set.clone(), w));
            }
        }
    }
    let (best_value, witness_set, witness) = best.expect("the empty set or a vertex is always clique independent");
    let mut uniform_alpha_minimal = false;
    'outer: for set in max_indep {
        for w in all_uniform_weightings(g, set, m)? {
            if counter.count(w.weights()) == brute.min_value {
                uniform_alpha_minimal = true;
                break 'outer;
            }
        }
    }
    Ok(SweepFinding {
        conjecture_holds: best_value == brute.min_value,
        min_value: brute.min_value,
        minimizer_count: brute.minimizer_count,
        best_uniform_value: best_value,
        witness_set,
        witness,
        uniform_alpha_minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::nonisomorphic_graphs;

    #[test]
    fn placements_are_lexicographic() {
        let g = Graph::empty(4).unwrap();
        let all = all_uniform_weightings(&g, &[3, 0, 2], 5).unwrap();
        let got: Vec<&[u64]> = all.iter().map(|w| w.weights()).collect();
        assert_eq!(got, vec![&[2, 0, 2, 1][..], &[2, 0, 1, 2], &[1, 0, 2, 2]]);
        assert_eq!(all_uniform_weightings(&g, &[1], 3).unwrap().len(), 1);
        assert_eq!(all_uniform_weightings(&g, &[0, 1, 2, 3], 8).unwrap().len(), 1);
        assert!(all_uniform_weightings(&g, &[], 1).is_err());
    }

    #[test]
    fn small_graphs_have_no_violations() {
        let graphs: Vec<Graph> = (1..=4).flat_map(nonisomorphic_graphs).filter(Graph::is_connected).collect();
        let report = conjecture_sweep(&graphs, 0..=6, 2..=3, SearchBudget::default()).unwrap();
        assert_eq!(report.rows.len(), graphs.len() * 7 * 2);
        assert_eq!(report.skipped(), 0);
        assert!(report.violations().is_empty());
        // for edges the minimum is always uniform-α
        assert!(report.non_uniform_alpha().iter().all(|r| r.k == 3));
    }

    #[test]
    fn path_is_flagged_for_triangles() {
        let report = conjecture_sweep(&[Graph::path(3).unwrap()], 9..=9, 3..=3, SearchBudget::default()).unwrap();
        let SweepOutcome::Evaluated(f) = &report.rows[0].outcome else { panic!() };
        assert_eq!(f.min_value, 14u64);
        assert!(f.conjecture_holds);
        assert!(f.uniform_alpha_minimal);
    }

    #[test]
    fn budget_skips_are_recorded() {
        let tight = SearchBudget { max_weightings: 10, minimizer_cap: 10 };
        let report = conjecture_sweep(&[Graph::empty(4).unwrap()], 5..=5, 2..=2, tight).unwrap();
        assert_eq!(report.skipped(), 1);
        assert!(conjecture_sweep(&[], 0..=1, 1..=2, tight).is_err());
    }
}
