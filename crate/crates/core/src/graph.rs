//! Simple graphs on at most 64 vertices with bitset adjacency.
//!
//! Vertices are the indices `0..n`. Every search in this module is exact;
//! wherever several optimal vertex sets exist, the lexicographically smallest
//! sorted vertex list is returned.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest supported vertex count (one `u64` adjacency word per vertex).
pub const MAX_VERTICES: usize = 64;

pub(crate) type Mask = u64;

#[inline]
pub(crate) const fn bit(v: usize) -> Mask {
    1 << v
}

#[inline]
pub(crate) const fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Bits strictly above `v`.
#[inline]
pub(crate) const fn above(v: usize) -> Mask {
    if v >= 63 {
        0
    } else {
        Mask::MAX << (v + 1)
    }
}

pub(crate) fn mask_of(vertices: &[usize]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

/// Ascending vertex indices of a mask.
pub(crate) fn members(mut mask: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Mask>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Self {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    /// Builds a simple graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<Mask>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        for (v, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row & bit(v), 0);
            debug_assert_eq!(row & !full_mask(adj.len()), 0);
            debug_assert!(members(row).all(|u| adj[u] & bit(v) != 0));
        }
        Self {
            n: adj.len(),
            adj,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = full_mask(n) & !bit(v);
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges)
    }

    /// Attaches per-vertex labels; they must be unique and one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        members(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| members(self.adj[u] & above(u)).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Same vertex count and edge set, labels ignored.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = full_mask(self.n);
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let next = members(frontier).fold(0, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == all
    }

    /// Subgraph induced by `vertices` (sorted, deduplicated), relabelled to
    /// `0..len` in ascending order of the original indices.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = members(mask_of(vertices)).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(u, v))
                    .fold(0, |m, (j, _)| m | bit(j))
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    pub(crate) fn adjacency(&self) -> &[Mask] {
        &self.adj
    }

    pub(crate) fn all_mask(&self) -> Mask {
        full_mask(self.n)
    }

    pub(crate) fn checked_mask(&self, vertices: &[usize]) -> Result<Mask> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        Ok(mask_of(vertices))
    }
}

/// The k-cliques of a graph, each stored as a sorted vertex list, in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSet {
    pub k: usize,
    pub members: Vec<Vec<usize>>,
}

impl CliqueSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, clique: &[usize]) -> bool {
        self.members
            .binary_search_by(|m| m.as_slice().cmp(clique))
            .is_ok()
    }
}

/// Calls `f` on every k-clique inside `within`, in lexicographic order.
pub(crate) fn for_each_clique(adj: &[Mask], within: Mask, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn extend(adj: &[Mask], cand: Mask, k: usize, stack: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if stack.len() == k {
            f(stack);
            return;
        }
        if (cand.count_ones() as usize) < k - stack.len() {
            return;
        }
        for v in members(cand) {
            stack.push(v);
            extend(adj, cand & adj[v] & above(v), k, stack, f);
            stack.pop();
        }
    }
    if k == 0 {
        return;
    }
    let mut stack = Vec::with_capacity(k);
    extend(adj, within, k, &mut stack, f);
}

/// Number of k-cliques inside `within`.
pub(crate) fn count_cliques_in(adj: &[Mask], within: Mask, k: usize) -> u128 {
    fn go(adj: &[Mask], cand: Mask, left: usize) -> u128 {
        if left == 1 {
            return cand.count_ones() as u128;
        }
        if (cand.count_ones() as usize) < left {
            return 0;
        }
        members(cand)
            .map(|v| go(adj, cand & adj[v] & above(v), left - 1))
            .sum()
    }
    if k == 0 {
        return 0;
    }
    go(adj, within, k)
}

/// Whether `within` contains a clique of `size` vertices.
pub(crate) fn has_clique(adj: &[Mask], within: Mask, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (within.count_ones() as usize) < size {
        return false;
    }
    if size == 1 {
        return true;
    }
    members(within).any(|v| has_clique(adj, within & adj[v] & above(v), size - 1))
}

pub(crate) fn is_clique_mask(adj: &[Mask], set: Mask) -> bool {
    members(set).all(|v| set & !bit(v) & !adj[v] == 0)
}

pub fn enumerate_cliques(g: &Graph, k: usize) -> CliqueSet {
    let mut members = Vec::new();
    for_each_clique(&g.adj, g.all_mask(), k, &mut |c| members.push(c.to_vec()));
    CliqueSet { k, members }
}

/// π_k(g), the number of k-cliques.
pub fn count_cliques(g: &Graph, k: usize) -> u128 {
    count_cliques_in(&g.adj, g.all_mask(), k)
}

pub fn is_independent(g: &Graph, s: &[usize]) -> Result<bool> {
    let set = g.checked_mask(s)?;
    Ok(members(set).all(|v| g.adj[v] & set == 0))
}

/// Independence number of `G[within]` by branch and bound.
pub(crate) fn independence_number_in(adj: &[Mask], within: Mask) -> usize {
    fn go(adj: &[Mask], cand: Mask, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut cand = cand;
        let mut size = size;
        // vertices of degree <= 1 in G[cand] can always be taken
        loop {
            let low = members(cand).find(|&v| (adj[v] & cand).count_ones() <= 1);
            match low {
                Some(v) => {
                    size += 1;
                    cand &= !(adj[v] | bit(v));
                }
                None => break,
            }
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = members(cand)
            .max_by_key(|&v| ((adj[v] & cand).count_ones(), core::cmp::Reverse(v)))
            .expect("cand is non-empty");
        go(adj, cand & !(adj[v] | bit(v)), size + 1, best);
        go(adj, cand & !bit(v), size, best);
    }
    let mut best = 0;
    go(adj, within, 0, &mut best);
    best
}

/// Lexicographically smallest maximum independent set of `G[within]` that
/// contains `required`, or `None` if `required` is not contained in any.
pub(crate) fn max_independent_superset_in(adj: &[Mask], within: Mask, required: Mask) -> Option<Vec<usize>> {
    let alpha = independence_number_in(adj, within);
    if required & !within != 0 || members(required).any(|v| adj[v] & required != 0) {
        return None;
    }
    let blocked = members(required).fold(0, |m, v| m | adj[v]);
    let mut cand = within & !blocked & !required;
    let mut chosen = required;
    if chosen.count_ones() as usize + independence_number_in(adj, cand) < alpha {
        return None;
    }
    for v in members(cand) {
        if cand & bit(v) == 0 {
            continue;
        }
        let rest = cand & !adj[v] & above(v);
        if chosen.count_ones() as usize + 1 + independence_number_in(adj, rest) == alpha {
            chosen |= bit(v);
            cand = rest;
        } else {
            cand &= !bit(v);
        }
    }
    Some(members(chosen).collect())
}

pub fn independence_number(g: &Graph) -> usize {
    independence_number_in(&g.adj, g.all_mask())
}

/// A maximum independent set; the lexicographically smallest one.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_independent_superset_in(&g.adj, g.all_mask(), 0).expect("the empty set extends")
}

/// Lexicographically smallest maximum independent set containing `required`.
pub fn max_independent_superset(g: &Graph, required: &[usize]) -> Result<Option<Vec<usize>>> {
    let req = g.checked_mask(required)?;
    Ok(max_independent_superset_in(&g.adj, g.all_mask(), req))
}

/// Every maximum independent set, in lexicographic order.
pub fn all_max_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn go(adj: &[Mask], cand: Mask, chosen: &mut Vec<usize>, target: usize, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == target {
            out.push(chosen.clone());
            return;
        }
        if chosen.len() + (cand.count_ones() as usize) < target {
            return;
        }
        for v in members(cand) {
            chosen.push(v);
            go(adj, cand & !adj[v] & above(v), chosen, target, out);
            chosen.pop();
        }
    }
    let alpha = independence_number(g);
    let mut out = Vec::new();
    go(&g.adj, g.all_mask(), &mut Vec::new(), alpha, &mut out);
    out
}

/// Whether no k vertices of `s` form a k-clique.
pub fn is_k_clique_independent(g: &Graph, s: &[usize], k: usize) -> Result<bool> {
    let set = g.checked_mask(s)?;
    Ok(!has_clique(&g.adj, set, k))
}

/// Largest k-clique independent set (no k of its vertices form a k-clique),
/// lexicographically smallest among those of maximum size.
pub fn max_k_clique_independent_set(g: &Graph, k: usize) -> Result<Vec<usize>> {
    if k < 2 {
        return Err(Error::CliqueSize { k, min: 2 });
    }
    // include-first DFS over ascending vertices visits equal-size sets in
    // lexicographic order, so the first set of maximum size found is kept
    fn go(adj: &[Mask], k: usize, chosen: Mask, cand: Mask, best: &mut (usize, Mask)) {
        let size = chosen.count_ones() as usize;
        if size + cand.count_ones() as usize <= best.0 {
            return;
        }
        if cand == 0 {
            *best = (size, chosen);
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !bit(v);
        if !has_clique(adj, chosen & adj[v], k - 1) {
            go(adj, k, chosen | bit(v), rest, best);
        }
        go(adj, k, chosen, rest, best);
    }
    let mut best = (0, 0);
    go(&g.adj, k, 0, g.all_mask(), &mut best);
    Ok(members(best.1).collect())
}

/// α_k(g).
pub fn k_clique_independence_number(g: &Graph, k: usize) -> Result<usize> {
    Ok(max_k_clique_independent_set(g, k)?.len())
}

/// Every k-clique independent set (including the empty set), ordered by
/// size then lexicographically.
pub fn all_k_clique_independent_sets(g: &Graph, k: usize) -> Result<Vec<Vec<usize>>> {
    if k < 2 {
        return Err(Error::CliqueSize { k, min: 2 });
    }
    fn go(adj: &[Mask], k: usize, chosen: Mask, cand: Mask, out: &mut Vec<Mask>) {
        out.push(chosen);
        for v in members(cand) {
            if !has_clique(adj, chosen & adj[v], k - 1) {
                go(adj, k, chosen | bit(v), cand & above(v), out);
            }
        }
    }
    let mut out = Vec::new();
    go(&g.adj, k, 0, g.all_mask(), &mut out);
    let mut sets: Vec<Vec<usize>> = out.into_iter().map(|m| members(m).collect()).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

/// Ordering `v_1, ..., v_n` in which every `N[v_i] \ {v_1, ..., v_{i-1}}` is
/// a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

/// Checks the clique condition at every position of `order`, which must be a
/// permutation of the vertices.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n || order.iter().any(|&v| v >= g.n) || mask_of(order) != g.all_mask() {
        return false;
    }
    peo_condition_holds(&g.adj, order)
}

fn peo_condition_holds(adj: &[Mask], order: &[usize]) -> bool {
    let mut earlier = 0;
    for &v in order {
        let later_closed = (adj[v] | bit(v)) & !earlier;
        if !is_clique_mask(adj, later_closed) {
            return false;
        }
        earlier |= bit(v);
    }
    true
}

/// Maximum cardinality search on `G[within]`, reversed, then verified
/// against the clique condition.
pub(crate) fn elimination_ordering_in(adj: &[Mask], within: Mask) -> Option<Vec<usize>> {
    let count = within.count_ones() as usize;
    let mut numbered = 0;
    let mut weight = [0u32; MAX_VERTICES];
    let mut selection = Vec::with_capacity(count);
    for _ in 0..count {
        let v = members(within & !numbered)
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        selection.push(v);
        numbered |= bit(v);
        for u in members(adj[v] & within & !numbered) {
            weight[u] += 1;
        }
    }
    selection.reverse();
    let sub: Vec<Mask> = adj.iter().map(|r| r & within).collect();
    // vertices outside `within` are treated as already eliminated
    let mut earlier = !within;
    for &v in &selection {
        let later_closed = (sub[v] | bit(v)) & !earlier;
        if !is_clique_mask(&sub, later_closed) {
            return None;
        }
        earlier |= bit(v);
    }
    Some(selection)
}

pub fn find_elimination_ordering(g: &Graph) -> Option<EliminationOrdering> {
    let order = elimination_ordering_in(&g.adj, g.all_mask())?;
    debug_assert!(is_perfect_elimination_ordering(g, &order));
    Some(EliminationOrdering { order })
}

pub fn is_chordal(g: &Graph) -> bool {
    find_elimination_ordering(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn naive_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << g.n()) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let vs: Vec<usize> = members(mask).collect();
            if vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b))) {
                out.push(vs);
            }
        }
        out.sort();
        out
    }

    fn naive_alpha_k(g: &Graph, k: usize) -> usize {
        (0u64..(1 << g.n()))
            .filter(|&m| naive_cliques(g, k).iter().all(|c| mask_of(c) & m != mask_of(c)))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn rejects_non_simple_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn labels_must_be_unique() {
        let g = Graph::path(2).unwrap();
        assert!(matches!(
            g.clone().with_labels(vec!["a".into(), "a".into()]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(g.with_labels(vec!["a".into()]).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(enumerate_cliques(&Graph::complete(3).unwrap(), 3).len(), 1);
        assert_eq!(enumerate_cliques(&prism(), 3).members, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(enumerate_cliques(&prism(), 7).is_empty());
        assert!(enumerate_cliques(&prism(), 0).is_empty());
    }

    #[test]
    fn clique_enumeration_matches_naive_on_small_graphs() {
        // every graph on 5 vertices, plus a pseudo-random sample on 12
        for code in 0u32..(1 << 10) {
            let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| ((u + 1)..5).map(move |v| (u, v))).collect();
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            for k in 1..=5 {
                assert_eq!(enumerate_cliques(&g, k).members, naive_cliques(&g, k));
                assert_eq!(count_cliques(&g, k), naive_cliques(&g, k).len() as u128);
            }
        }
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..20 {
            let mut edges = Vec::new();
            for u in 0..12 {
                for v in (u + 1)..12 {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state.is_multiple_of(2) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(12, &edges).unwrap();
            for k in 1..=5 {
                assert_eq!(enumerate_cliques(&g, k).members, naive_cliques(&g, k));
            }
        }
    }

    #[test]
    fn independence_examples() {
        let p = prism();
        assert!(is_independent(&p, &[4]).unwrap());
        assert!(!is_independent(&p, &[0, 1, 2]).unwrap());
        assert!(is_independent(&p, &[9]).is_err());
        assert_eq!(max_independent_set(&Graph::empty(5).unwrap()), vec![0, 1, 2, 3, 4]);
        assert_eq!(max_independent_set(&p), vec![0, 4]);
        assert_eq!(max_independent_set(&Graph::path(3).unwrap()), vec![0, 2]);
        assert_eq!(max_independent_set(&Graph::empty(0).unwrap()), Vec::<usize>::new());
    }

    #[test]
    fn independence_number_matches_naive() {
        for code in 0u32..(1 << 10) {
            let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| ((u + 1)..5).map(move |v| (u, v))).collect();
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let best = (0u64..32)
                .filter(|&m| members(m).all(|v| g.adjacency()[v] & m == 0))
                .map(|m| members(m).collect::<Vec<_>>())
                .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
                .unwrap();
            assert_eq!(max_independent_set(&g), best);
            assert_eq!(max_k_clique_independent_set(&g, 2).unwrap().len(), best.len());
            assert_eq!(all_max_independent_sets(&g)[0], best);
            for k in 2..=4 {
                assert_eq!(k_clique_independence_number(&g, k).unwrap(), naive_alpha_k(&g, k));
            }
        }
    }

    #[test]
    fn k_clique_independent_examples() {
        assert_eq!(max_k_clique_independent_set(&Graph::path(3).unwrap(), 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(max_k_clique_independent_set(&Graph::complete(4).unwrap(), 2).unwrap().len(), 1);
        assert_eq!(max_k_clique_independent_set(&Graph::complete(4).unwrap(), 3).unwrap(), vec![0, 1]);
        assert!(max_k_clique_independent_set(&prism(), 1).is_err());
        let sets = all_k_clique_independent_sets(&Graph::complete(3).unwrap(), 3).unwrap();
        assert_eq!(sets.len(), 7);
    }

    #[test]
    fn chordality() {
        let tree = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let peo = find_elimination_ordering(&tree).unwrap();
        assert!(is_perfect_elimination_ordering(&tree, &peo.order));
        assert!(find_elimination_ordering(&Graph::cycle(4).unwrap()).is_none());
        assert!(find_elimination_ordering(&Graph::cycle(5).unwrap()).is_none());
        assert!(!is_chordal(&prism()));
        let k4 = Graph::complete(4).unwrap();
        assert!(is_perfect_elimination_ordering(&k4, &[2, 0, 3, 1]));
        assert!(is_perfect_elimination_ordering(&tree, &[1, 3, 4, 2, 0]));
        assert!(!is_perfect_elimination_ordering(&tree, &[0, 1, 2, 3, 4]));
        assert!(!is_perfect_elimination_ordering(&tree, &[0, 1, 2]));
    }

    #[test]
    fn chordality_matches_definition_on_all_five_vertex_graphs() {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let perms = permutations(5);
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| ((u + 1)..5).map(move |v| (u, v))).collect();
        for code in 0u32..(1 << 10) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let by_definition = perms.iter().any(|p| is_perfect_elimination_ordering(&g, p));
            assert_eq!(is_chordal(&g), by_definition, "{edges:?}");
        }
    }

    #[test]
    fn connectivity_and_induced() {
        assert!(Graph::path(4).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let sub = prism().induced(&[0, 1, 3]).unwrap();
        assert_eq!(sub.edges(), vec![(0, 1), (0, 2)]);
    }
}
