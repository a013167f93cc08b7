//! Weightings and the blow-up construction `G(w)`.

use alloc::vec::Vec;

use crate::count::{BigCount, CliqueCounter};
use crate::error::{Error, Result};
use crate::graph::{
    bit, count_cliques_in, full_mask, independence_number_in, is_independent, mask_of,
    max_independent_superset_in, members, Graph, Mask, MAX_VERTICES,
};

/// Default vertex budget for explicit blow-up enumeration.
pub const DEFAULT_MAX_BLOWUP: usize = 25;

/// Non-negative integer weight per vertex; `total` is the sum `m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weighting {
    weights: Vec<u64>,
    total: u64,
}

impl Weighting {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        let total = weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .ok_or(Error::WeightOverflow)?;
        Ok(Self { weights, total })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            weights: alloc::vec![0; n],
            total: 0,
        }
    }

    pub fn ones(n: usize) -> Self {
        Self {
            weights: alloc::vec![1; n],
            total: n as u64,
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<u64> {
        self.weights
    }

    pub fn get(&self, v: usize) -> u64 {
        self.weights[v]
    }

    /// Total weight `m`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn max_weight(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    /// Vertices with non-zero weight, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&v| self.weights[v] > 0).collect()
    }

    pub(crate) fn support_mask(&self) -> Mask {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 0)
            .fold(0, |m, (v, _)| m | bit(v))
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.weights.len() == g.n() {
            Ok(())
        } else {
            Err(Error::WeightingSize {
                expected: g.n(),
                got: self.weights.len(),
            })
        }
    }

    /// Moves `amount` from `from` to `to`; the total is unchanged.
    pub(crate) fn transfer(&mut self, from: usize, to: usize, amount: u64) {
        debug_assert!(self.weights[from] >= amount);
        self.weights[from] -= amount;
        self.weights[to] += amount;
    }

    pub(crate) fn set(&mut self, v: usize, value: u64) {
        self.total = self.total - self.weights[v] + value;
        self.weights[v] = value;
    }

    /// Whether `w` is zero off `support` and takes only the values
    /// `⌊m/|U|⌋` and `⌈m/|U|⌉` on it.
    pub fn is_uniform_on(&self, support: &[usize]) -> bool {
        let set = mask_of(support);
        let size = set.count_ones() as u64;
        if support.iter().any(|&v| v >= self.weights.len()) {
            return false;
        }
        if size == 0 {
            return self.total == 0;
        }
        let floor = self.total / size;
        let ceil = floor + u64::from(!self.total.is_multiple_of(size));
        self.weights.iter().enumerate().all(|(v, &w)| {
            if set & bit(v) != 0 {
                w == floor || w == ceil
            } else {
                w == 0
            }
        })
    }
}

/// A vertex `(v, i)` of `G(w)` with the 1-based copy index `i ∈ [w(v)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlowupVertex {
    pub vertex: usize,
    pub copy: u64,
}

/// `G(w)`: each vertex `v` becomes a clique on `(v, 1), ..., (v, w(v))`, and
/// copies of adjacent vertices are completely joined.
#[derive(Clone, Debug)]
pub struct BlowupGraph {
    pub base: Graph,
    pub weighting: Weighting,
    pub vertices: Vec<BlowupVertex>,
    offsets: Vec<usize>,
    pub graph: Graph,
}

impl BlowupGraph {
    /// Index of `(v, i)` in [`BlowupGraph::graph`].
    pub fn index_of(&self, v: BlowupVertex) -> Option<usize> {
        if v.vertex >= self.base.n() || v.copy == 0 || v.copy > self.weighting.get(v.vertex) {
            return None;
        }
        Some(self.offsets[v.vertex] + (v.copy - 1) as usize)
    }
}

pub fn build_blowup(g: &Graph, w: &Weighting) -> Result<BlowupGraph> {
    w.check_against(g)?;
    if w.total() > MAX_VERTICES as u64 {
        return Err(Error::TooManyVertices {
            n: usize::try_from(w.total()).unwrap_or(usize::MAX),
            max: MAX_VERTICES,
        });
    }
    let m = w.total() as usize;
    let mut vertices = Vec::with_capacity(m);
    let mut offsets = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        offsets.push(vertices.len());
        for copy in 1..=w.get(v) {
            vertices.push(BlowupVertex { vertex: v, copy });
        }
    }
    let block = |v: usize| -> Mask {
        let len = w.get(v) as usize;
        if len == 0 {
            0
        } else {
            full_mask(len) << offsets[v]
        }
    };
    let adj = vertices
        .iter()
        .enumerate()
        .map(|(idx, bv)| {
            let own = block(bv.vertex) & !bit(idx);
            g.neighbors(bv.vertex).fold(own, |acc, u| acc | block(u))
        })
        .collect();
    Ok(BlowupGraph {
        base: g.clone(),
        weighting: w.clone(),
        vertices,
        offsets,
        graph: Graph::from_adjacency(adj),
    })
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::CliqueSize { k, min: 1 })
    } else {
        Ok(())
    }
}

/// π_k(G(w)) by the closed formula over cliques of `g` and compositions of
/// `k`. Only cliques inside the support contribute, so zero-weight vertices
/// are skipped up front.
pub fn count_cliques_formula(g: &Graph, w: &Weighting, k: usize) -> Result<BigCount> {
    w.check_against(g)?;
    check_k(k)?;
    let counter = CliqueCounter::new(g, w.support_mask(), k, w.max_weight());
    Ok(counter.count(w.weights()))
}

/// π_k(G(w)) by building `G(w)` and counting its k-cliques directly.
pub fn count_cliques_oracle(g: &Graph, w: &Weighting, k: usize) -> Result<BigCount> {
    count_cliques_oracle_within(g, w, k, DEFAULT_MAX_BLOWUP)
}

pub fn count_cliques_oracle_within(
    g: &Graph,
    w: &Weighting,
    k: usize,
    max_vertices: usize,
) -> Result<BigCount> {
    w.check_against(g)?;
    check_k(k)?;
    if w.total() > max_vertices as u64 {
        return Err(Error::BudgetExceeded {
            required: BigCount::from(w.total()),
            budget: max_vertices as u64,
        });
    }
    let b = build_blowup(g, w)?;
    Ok(BigCount::from(count_cliques_in(
        b.graph.adjacency(),
        b.graph.all_mask(),
        k,
    )))
}

/// π_2(G(w)) = Σ_v C(w(v), 2) + Σ_{uv ∈ E} w(u) w(v).
pub fn count_edges_formula(g: &Graph, w: &Weighting) -> Result<BigCount> {
    w.check_against(g)?;
    let inside: BigCount = w
        .weights()
        .iter()
        .map(|&x| BigCount::binomial(x, 2))
        .sum();
    let across: BigCount = g
        .edges()
        .into_iter()
        .map(|(u, v)| BigCount::from(num_bigint::BigUint::from(w.get(u)) * w.get(v)))
        .sum();
    Ok(inside + across)
}

/// Weighting uniform on `support`: `r = m mod |U|` vertices get `⌈m/|U|⌉`
/// (the first `r` of the sorted support), the rest `⌊m/|U|⌋`, all others 0.
pub fn uniform_weighting(g: &Graph, support: &[usize], m: u64) -> Result<Weighting> {
    let set = g.checked_mask(support)?;
    let size = set.count_ones() as u64;
    let mut weights = alloc::vec![0u64; g.n()];
    if size == 0 {
        return if m == 0 {
            Ok(Weighting::zeros(g.n()))
        } else {
            Err(Error::EmptySupport(m))
        };
    }
    let floor = m / size;
    let rem = m % size;
    for (rank, v) in members(set).enumerate() {
        weights[v] = floor + u64::from((rank as u64) < rem);
    }
    Weighting::new(weights)
}

/// Whether `w` is uniform on some maximum independent set of `g`.
pub fn is_uniform_alpha(g: &Graph, w: &Weighting) -> Result<bool> {
    w.check_against(g)?;
    let support = w.support();
    if !is_independent(g, &support)? {
        return Ok(false);
    }
    let alpha = independence_number_in(g.adjacency(), g.all_mask()) as u64;
    if alpha == 0 {
        return Ok(w.total() == 0);
    }
    let floor = w.total() / alpha;
    let ceil = floor + u64::from(!w.total().is_multiple_of(alpha));
    if support.iter().any(|&v| w.get(v) != floor && w.get(v) != ceil) {
        return Ok(false);
    }
    if floor > 0 {
        // every vertex of the independent set carries weight
        return Ok(support.len() as u64 == alpha);
    }
    // the zero-weight remainder of the set must complete the support
    Ok(max_independent_superset_in(g.adjacency(), g.all_mask(), w.support_mask()).is_some())
}

/// Deletes zero-weight vertices: the induced subgraph on the support and the
/// restricted weighting.
pub fn restrict_to_support(g: &Graph, w: &Weighting) -> Result<(Graph, Weighting)> {
    w.check_against(g)?;
    let support = w.support();
    let sub = g.induced(&support)?;
    let weights = support.iter().map(|&v| w.get(v)).collect();
    Ok((sub, Weighting::new(weights)?))
}
