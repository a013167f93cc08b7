use alloc::vec;
use alloc::vec::Vec;

use crate::blowup::Weighting;
use crate::count::{BigCount, CliqueCounter};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_WEIGHTINGS: u64 = 10_000_000;
pub const MINIMIZER_CAP: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Refuse instances with more weak compositions than this.
    pub max_weightings: u64,
    /// Store at most this many minimizers; the total is still counted.
    pub minimizer_cap: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_weightings: DEFAULT_MAX_WEIGHTINGS,
            minimizer_cap: MINIMIZER_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub k: usize,
    pub m: u64,
    pub min_value: BigCount,
    /// Minimizers in colex order of their weight vectors, at most `cap`.
    pub minimizers: Vec<Weighting>,
    pub minimizer_count: u64,
    /// Complete weightings evaluated; pruned subtrees are not counted.
    pub visited: u64,
    /// Number of m-weightings, `C(m + n - 1, n - 1)`.
    pub total_weightings: BigCount,
    pub cap: usize,
}

impl SearchResult {
    pub fn truncated(&self) -> bool {
        self.minimizer_count > self.minimizers.len() as u64
    }
}

/// Number of weak compositions of `m` into `n` parts.
pub fn weak_composition_count(m: u64, n: usize) -> BigCount {
    if n == 0 {
        return BigCount::from(u64::from(m == 0));
    }
    BigCount::binomial(m + n as u64 - 1, n as u64 - 1)
}

pub fn brute_force_min(g: &Graph, m: u64, k: usize) -> Result<SearchResult> {
    brute_force_min_with(g, m, k, SearchBudget::default())
}

/// Exact minimum of π_k(G(w)) over every m-weighting of `g`.
///
/// Weightings are enumerated in colex order (the last vertex varies
/// slowest). π_k is non-decreasing in each weight, so the count of a partial
/// weighting with the unassigned vertices at zero bounds every completion
/// from below; subtrees whose bound already exceeds the best value are cut.
/// Ties are never cut, so the minimizer set is complete.
pub fn brute_force_min_with(g: &Graph, m: u64, k: usize, budget: SearchBudget) -> Result<SearchResult> {
    if k == 0 {
        return Err(Error::CliqueSize { k, min: 1 });
    }
    let n = g.n();
    if n == 0 && m > 0 {
        return Err(Error::EmptySupport(m));
    }
    let total = weak_composition_count(m, n);
    if total > budget.max_weightings {
        return Err(Error::BudgetExceeded {
            required: total,
            budget: budget.max_weightings,
        });
    }
    let counter = CliqueCounter::new(g, g.all_mask(), k, m);
    let small = run(n, m, budget.minimizer_cap, |w| counter.count_u128(w));
    let (min_value, minimizers, minimizer_count, visited) = match small {
        Some(found) => (BigCount::from(found.best), found.minimizers, found.count, found.visited),
        None => {
            let found = run(n, m, budget.minimizer_cap, |w| Some(counter.count(w)))
                .expect("big-integer evaluation never overflows");
            (found.best, found.minimizers, found.count, found.visited)
        }
    };
    Ok(SearchResult {
        k,
        m,
        min_value,
        minimizers,
        minimizer_count,
        visited,
        total_weightings: total,
        cap: budget.minimizer_cap,
    })
}

struct Found<V> {
    best: V,
    minimizers: Vec<Weighting>,
    count: u64,
    visited: u64,
}

struct Walk<'a, V, F> {
    eval: &'a F,
    weights: Vec<u64>,
    best: Option<V>,
    minimizers: Vec<Weighting>,
    count: u64,
    visited: u64,
    cap: usize,
    overflow: bool,
}

impl<V: Ord + Clone, F: Fn(&[u64]) -> Option<V>> Walk<'_, V, F> {
    fn leaf(&mut self) {
        self.visited += 1;
        let Some(value) = (self.eval)(&self.weights) else {
            self.overflow = true;
            return;
        };
        let better = self.best.as_ref().is_none_or(|b| value < *b);
        let tied = self.best.as_ref() == Some(&value);
        if better {
            self.best = Some(value);
            self.minimizers.clear();
            self.count = 0;
        }
        if better || tied {
            self.count += 1;
            if self.minimizers.len() < self.cap {
                self.minimizers.push(Weighting::new(self.weights.clone()).expect("sum is m"));
            }
        }
    }

    /// Assigns vertex `v`, then `v - 1`, ..., with `rem` weight left.
    fn descend(&mut self, v: usize, rem: u64) {
        if self.overflow {
            return;
        }
        if v == 0 {
            self.weights[0] = rem;
            self.leaf();
            self.weights[0] = 0;
            return;
        }
        for x in 0..=rem {
            self.weights[v] = x;
            if let Some(best) = &self.best {
                match (self.eval)(&self.weights) {
                    // larger x only raises the bound
                    Some(bound) if bound > *best => break,
                    Some(_) => {}
                    None => {
                        self.overflow = true;
                        break;
                    }
                }
            }
            self.descend(v - 1, rem - x);
        }
        self.weights[v] = 0;
    }
}

fn run<V: Ord + Clone, F: Fn(&[u64]) -> Option<V>>(n: usize, m: u64, cap: usize, eval: F) -> Option<Found<V>> {
    let mut walk = Walk {
        eval: &eval,
        weights: vec![0; n],
        best: None,
        minimizers: Vec::new(),
        count: 0,
        visited: 0,
        cap,
        overflow: false,
    };
    if n == 0 {
        walk.leaf();
    } else {
        walk.descend(n - 1, m);
    }
    if walk.overflow {
        return None;
    }
    Some(Found {
        best: walk.best.expect("at least one weighting exists"),
        minimizers: walk.minimizers,
        count: walk.count,
        visited: walk.visited,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::count_cliques_formula;

    fn w(v: &[u64]) -> Weighting {
        Weighting::new(v.to_vec()).unwrap()
    }

    /// Unpruned enumeration of every weak composition, for comparison.
    fn exhaustive(g: &Graph, m: u64, k: usize) -> (BigCount, Vec<Weighting>) {
        fn go(n: usize, m: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if prefix.len() + 1 == n {
                prefix.push(m);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for x in 0..=m {
                prefix.push(x);
                go(n, m - x, prefix, out);
                prefix.pop();
            }
        }
        let mut all = Vec::new();
        go(g.n(), m, &mut Vec::new(), &mut all);
        let values: Vec<(BigCount, Weighting)> = all
            .into_iter()
            .map(|x| {
                let x = Weighting::new(x).unwrap();
                (count_cliques_formula(g, &x, k).unwrap(), x)
            })
            .collect();
        let min = values.iter().map(|(v, _)| v.clone()).min().unwrap();
        let mut mins: Vec<Weighting> = values.into_iter().filter(|(v, _)| *v == min).map(|(_, x)| x).collect();
        mins.sort_by(|a, b| a.weights().iter().rev().cmp(b.weights().iter().rev()));
        (min, mins)
    }

    #[test]
    fn path_counterexample_minimum() {
        let path = Graph::path(3).unwrap();
        let r = brute_force_min(&path, 9, 3).unwrap();
        assert_eq!(r.min_value, 14u64);
        assert!(r.min_value <= 21u64);
        assert!(!r.minimizers.contains(&w(&[3, 3, 3])));
        assert_eq!(r.minimizers, vec![w(&[5, 0, 4]), w(&[4, 0, 5])]);
    }

    #[test]
    fn edgeless_balanced_minimum() {
        let e = Graph::empty(3).unwrap();
        let r = brute_force_min(&e, 7, 2).unwrap();
        assert_eq!(r.min_value, (3 + 1 + 1) as u64);
        assert_eq!(r.minimizer_count, 3);
        for x in &r.minimizers {
            let mut v = x.weights().to_vec();
            v.sort_unstable();
            assert_eq!(v, vec![2, 2, 3]);
        }
    }

    #[test]
    fn single_edge_all_minimal() {
        let e = Graph::path(2).unwrap();
        let r = brute_force_min(&e, 2, 2).unwrap();
        assert_eq!(r.min_value, 1u64);
        assert_eq!(r.minimizer_count, 3);
        assert_eq!(r.minimizers, vec![w(&[2, 0]), w(&[1, 1]), w(&[0, 2])]);
        assert_eq!(r.total_weightings, 3u64);
    }

    #[test]
    fn pruned_search_matches_exhaustive() {
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        for g in [prism, Graph::path(4).unwrap(), Graph::cycle(5).unwrap(), Graph::complete(3).unwrap()] {
            for m in 0..=5 {
                for k in 1..=4 {
                    let r = brute_force_min(&g, m, k).unwrap();
                    let (min, mins) = exhaustive(&g, m, k);
                    assert_eq!(r.min_value, min);
                    assert_eq!(r.minimizers, mins);
                    assert_eq!(r.minimizer_count, mins.len() as u64);
                    assert!(r.visited as u128 <= r.total_weightings.to_u128().unwrap());
                }
            }
        }
    }

    #[test]
    fn cap_and_budget() {
        let e = Graph::empty(4).unwrap();
        let r = brute_force_min_with(&e, 8, 1, SearchBudget { max_weightings: 1000, minimizer_cap: 5 }).unwrap();
        assert_eq!(r.minimizer_count, 165);
        assert_eq!(r.minimizers.len(), 5);
        assert!(r.truncated());
        let err = brute_force_min_with(&e, 8, 2, SearchBudget { max_weightings: 100, minimizer_cap: 5 }).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { required: BigCount::from(165u64), budget: 100 });
        assert!(brute_force_min(&e, 3, 0).is_err());
        assert!(brute_force_min(&Graph::empty(0).unwrap(), 3, 2).is_err());
        assert_eq!(brute_force_min(&Graph::empty(0).unwrap(), 0, 2).unwrap().min_value, 0u64);
    }

    #[test]
    fn falls_back_to_big_integers() {
        let g = Graph::empty(2).unwrap();
        let r = brute_force_min(&g, 400, 60).unwrap();
        assert_eq!(r.min_value, BigCount::binomial(200, 60) + BigCount::binomial(200, 60));
        assert_eq!(r.minimizers, vec![w(&[200, 200])]);
    }
}
