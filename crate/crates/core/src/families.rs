//! Special graph families: the Sperner graph `B_n`, complete multipartite
//! graphs, level injections in the Boolean lattice, and small corpora.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::blowup::Weighting;
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, members, Graph, Mask};

/// Largest ground set for `B_n` (32 vertices).
pub const MAX_SPERNER_N: usize = 5;

/// Comparability graph of the subsets of `[n]`: `XY` is an edge iff one is a
/// proper subset of the other. Vertices are ordered by (size, bitmask);
/// element `i` of `[n]` is bit `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpernerGraph {
    pub n: usize,
    pub graph: Graph,
    masks: Vec<u32>,
    vertex_of: Vec<usize>,
}

impl SpernerGraph {
    pub fn subset_mask(&self, v: usize) -> u32 {
        self.masks[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.masks[v].count_ones() as usize
    }

    pub fn vertex_of_mask(&self, mask: u32) -> usize {
        self.vertex_of[mask as usize]
    }

    /// Vertices of level `l`, ascending (and so by mask).
    pub fn level_vertices(&self, l: usize) -> Vec<usize> {
        (0..self.masks.len()).filter(|&v| self.level(v) == l).collect()
    }

    /// Vertex of `[n] \ X`.
    pub fn complement(&self, v: usize) -> usize {
        let full = (1u32 << self.n) - 1;
        self.vertex_of_mask(full & !self.masks[v])
    }

    /// Level ⌈n/2⌉.
    pub fn middle(&self) -> usize {
        self.n.div_ceil(2)
    }
}

pub fn subset_label(mask: u32) -> String {
    let items: Vec<String> = (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("{}", i + 1))
        .collect();
    format!("{{{}}}", items.join(","))
}

pub fn build_sperner(n: usize) -> Result<SpernerGraph> {
    if n == 0 || n > MAX_SPERNER_N {
        return Err(Error::SpernerOrder(n));
    }
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let mut vertex_of = vec![0; masks.len()];
    for (v, &m) in masks.iter().enumerate() {
        vertex_of[m as usize] = v;
    }
    let mut edges = Vec::new();
    for (u, &x) in masks.iter().enumerate() {
        for (v, &y) in masks.iter().enumerate().skip(u + 1) {
            let nested = (x & y == x) || (x & y == y);
            if nested {
                edges.push((u, v));
            }
        }
    }
    let labels = masks.iter().map(|&m| subset_label(m)).collect();
    let graph = Graph::from_edges(masks.len(), &edges)?.with_labels(labels)?;
    Ok(SpernerGraph {
        n,
        graph,
        masks,
        vertex_of,
    })
}

/// Vertices at level ⌈n/2⌉.
pub fn middle_level(b: &SpernerGraph) -> Vec<usize> {
    b.level_vertices(b.middle())
}

/// `w'(X) = w([n] \ X)`; π_k is invariant because complementation is an
/// automorphism of `B_n`.
pub fn complement_weighting(b: &SpernerGraph, w: &Weighting) -> Result<Weighting> {
    w.check_against(&b.graph)?;
    Weighting::new((0..b.graph.n()).map(|v| w.get(b.complement(v))).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LevelDirection {
    Up,
    Down,
}

impl LevelDirection {
    pub fn as_str(self) -> &'static str {
        match self {
            LevelDirection::Up => "up",
            LevelDirection::Down => "down",
        }
    }

    pub(crate) fn relation(self) -> &'static str {
        match self {
            LevelDirection::Up => "<",
            LevelDirection::Down => ">",
        }
    }
}

impl fmt::Display for LevelDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Injection from level `r` into level `r ± 1` along containment, as
/// `(source, image)` vertex pairs in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMatching {
    pub r: usize,
    pub direction: LevelDirection,
    pub pairs: Vec<(usize, usize)>,
}

impl LevelMatching {
    pub fn target_level(&self) -> usize {
        match self.direction {
            LevelDirection::Up => self.r + 1,
            LevelDirection::Down => self.r - 1,
        }
    }

    /// Checks injectivity, containment, and that all of level `r` is covered.
    pub fn is_saturating(&self, b: &SpernerGraph) -> bool {
        let sources = b.level_vertices(self.r);
        let mut src: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        let mut dst: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        src.sort_unstable();
        dst.sort_unstable();
        dst.dedup();
        let contained = self.pairs.iter().all(|&(s, t)| {
            let (x, y) = (b.subset_mask(s), b.subset_mask(t));
            b.level(t) == self.target_level()
                && match self.direction {
                    LevelDirection::Up => x & y == x && x != y,
                    LevelDirection::Down => x & y == y && x != y,
                }
        });
        src == sources && dst.len() == self.pairs.len() && contained
    }
}

/// Maximum bipartite matching (augmenting paths) between level `r` and the
/// adjacent level along containment. Sources are processed in mask order and
/// targets tried in mask order, so the result is deterministic.
pub fn hall_level_matching(b: &SpernerGraph, r: usize, direction: LevelDirection) -> Result<LevelMatching> {
    let applies = match direction {
        LevelDirection::Up => 2 * r < b.n,
        LevelDirection::Down => 2 * r > b.n && r <= b.n,
    };
    if !applies {
        return Err(Error::HallPrecondition {
            n: b.n,
            r,
            direction,
        });
    }
    let sources = b.level_vertices(r);
    let target_level = match direction {
        LevelDirection::Up => r + 1,
        LevelDirection::Down => r - 1,
    };
    let targets = b.level_vertices(target_level);
    let options: Vec<Vec<usize>> = sources
        .iter()
        .map(|&s| {
            (0..targets.len())
                .filter(|&j| b.graph.has_edge(s, targets[j]))
                .collect()
        })
        .collect();

    fn augment(i: usize, options: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &j in &options[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|o| augment(o, options, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; targets.len()];
    for i in 0..sources.len() {
        let mut seen = vec![false; targets.len()];
        augment(i, &options, &mut seen, &mut owner);
    }
    let mut image = vec![None; sources.len()];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            image[*i] = Some(targets[j]);
        }
    }
    let pairs = sources
        .iter()
        .zip(&image)
        .filter_map(|(&s, t)| t.map(|t| (s, t)))
        .collect();
    Ok(LevelMatching {
        r,
        direction,
        pairs,
    })
}

/// Part sizes of a complete multipartite graph, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultipartiteSpec {
    sizes: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::EmptyMultipartite);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Vertex lists of the parts `I_1, ..., I_r` as laid out by
    /// [`build_multipartite`]: consecutive index ranges.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut start = 0;
        self.sizes
            .iter()
            .map(|&s| {
                let part = (start..start + s).collect();
                start += s;
                part
            })
            .collect()
    }
}

/// Complete multipartite graph; vertex labels are `P<part>.<index>`,
/// both 1-based.
pub fn build_multipartite(spec: &MultipartiteSpec) -> Result<Graph> {
    let parts = spec.parts();
    let n = spec.vertex_count();
    let mut part_of = vec![0; n];
    let mut labels = Vec::with_capacity(n);
    for (p, part) in parts.iter().enumerate() {
        for (i, &v) in part.iter().enumerate() {
            part_of[v] = p;
            labels.push(format!("P{}.{}", p + 1, i + 1));
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)?.with_labels(labels)
}

/// Maximal partite sets if `g` is complete multipartite: non-adjacency must
/// be an equivalence relation. Parts are sorted by size descending, then by
/// smallest vertex.
pub fn recognize_multipartite(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let adj = g.adjacency();
    let all = full_mask(n);
    let mut assigned: Mask = 0;
    let mut parts = Vec::new();
    for v in 0..n {
        if assigned & bit(v) != 0 {
            continue;
        }
        let class = all & !adj[v];
        for u in members(class) {
            if all & !adj[u] != class {
                return None;
            }
        }
        assigned |= class;
        parts.push(members(class).collect::<Vec<_>>());
    }
    parts.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
    Some(parts)
}

/// Every graph on `n` vertices up to isomorphism, one representative per
/// class (the one with the smallest edge code), ordered by edge count then
/// code. Exhaustive; intended for `n <= 6`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration is limited to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut index = [[0usize; 6]; 6];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let code_of = |edges: u32, perm: &[usize]| -> u32 {
        let mut out = 0u32;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if edges >> i & 1 == 1 {
                out |= 1 << index[perm[u]][perm[v]];
            }
        }
        out
    };
    let mut reps: Vec<u32> = (0u32..(1 << pairs.len()))
        .filter(|&code| perms.iter().all(|p| code_of(code, p) >= code))
        .collect();
    reps.sort_by_key(|&c| (c.count_ones(), c));
    reps.into_iter()
        .map(|code| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("generated edges are simple")
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
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

/// Partitions of `n` into positive parts, each listed in descending order.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=left.min(max)).rev() {
            prefix.push(part);
            go(left - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}
