use alloc::vec::Vec;

use crate::blowup::{count_cliques_formula, uniform_weighting, Weighting};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{independence_number, max_independent_set, max_k_clique_independent_set, Graph};

/// π_k of a uniform-α weighting against a weighting uniform on a largest
/// k-clique independent set. Both sets are the lexicographically smallest of
/// their kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictGapReport {
    pub k: usize,
    pub m: u64,
    pub alpha: usize,
    pub alpha_k: usize,
    pub independent_set: Vec<usize>,
    pub clique_independent_set: Vec<usize>,
    pub uniform_alpha: Weighting,
    pub uniform_alpha_value: BigCount,
    pub uniform_clique_independent: Weighting,
    pub uniform_clique_independent_value: BigCount,
    /// `k >= 3` and `m >= k * alpha_k`.
    pub hypotheses_met: bool,
    /// The uniform-α value is strictly smaller.
    pub strict: bool,
}

pub fn strict_gap_check(g: &Graph, m: u64, k: usize) -> Result<StrictGapReport> {
    if k < 2 {
        return Err(Error::CliqueSize { k, min: 2 });
    }
    let independent_set = max_independent_set(g);
    let kci = max_k_clique_independent_set(g, k)?;
    let alpha = independence_number(g);
    let alpha_k = kci.len();
    let uniform_alpha = uniform_weighting(g, &independent_set, m)?;
    let uniform_kci = uniform_weighting(g, &kci, m)?;
    let uniform_alpha_value = count_cliques_formula(g, &uniform_alpha, k)?;
    let uniform_kci_value = count_cliques_formula(g, &uniform_kci, k)?;
    let hypotheses_met = k >= 3 && (k as u128) * (alpha_k as u128) <= m as u128;
    Ok(StrictGapReport {
        k,
        m,
        alpha,
        alpha_k,
        independent_set,
        clique_independent_set: kci,
        strict: uniform_alpha_value < uniform_kci_value,
        uniform_alpha,
        uniform_alpha_value,
        uniform_clique_independent: uniform_kci,
        uniform_clique_independent_value: uniform_kci_value,
        hypotheses_met,
    })
}
