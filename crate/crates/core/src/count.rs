//! Exact counting: arbitrary-precision counts, memoized binomials, and the
//! closed-form k-clique count of a blow-up.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::graph::{for_each_clique, Graph, Mask};

/// Exact non-negative integer count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// `C(n, k)` computed exactly.
    pub fn binomial(n: u64, k: u64) -> Self {
        if k > n {
            return Self::zero();
        }
        let k = k.min(n - k);
        let mut acc = BigUint::from(1u32);
        for i in 0..k {
            acc *= n - i;
            acc /= i + 1;
        }
        Self(acc)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<u128> for BigCount {
    fn from(v: u128) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl FromStr for BigCount {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(Self)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl core::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialOrd<u64> for BigCount {
    fn partial_cmp(&self, other: &u64) -> Option<core::cmp::Ordering> {
        Some(self.0.cmp(&BigUint::from(*other)))
    }
}

/// Pascal rows `C(w, j)` for `j <= k_max`, grown on demand.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    k_max: usize,
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(k_max: usize) -> Self {
        let mut first = vec![BigUint::zero(); k_max + 1];
        first[0] = BigUint::from(1u32);
        Self {
            k_max,
            rows: vec![first],
        }
    }

    fn grow(&mut self, w: usize) {
        while self.rows.len() <= w {
            let prev = self.rows.last().expect("row 0 exists");
            let mut row = vec![BigUint::zero(); self.k_max + 1];
            row[0] = BigUint::from(1u32);
            for j in 1..=self.k_max {
                row[j] = &prev[j - 1] + &prev[j];
            }
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, w: u64, j: usize) -> &BigUint {
        assert!(j <= self.k_max, "column {j} beyond table width {}", self.k_max);
        let w = usize::try_from(w).expect("weight fits in usize");
        self.grow(w);
        &self.rows[w][j]
    }
}

/// Compositions of `k` into `parts` positive parts, in colex order.
pub fn compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if left < slots {
            return;
        }
        for first in 1..=(left - slots + 1) {
            prefix.push(first);
            go(left - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(k, parts, &mut Vec::with_capacity(parts), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Precomputed cliques for repeated evaluation of the closed formula
///
/// ```text
/// π_k(G(w)) = Σ_{i=1..k} Σ_{{v_1..v_i} ∈ K_i(G)} Σ_{k_1+..+k_i=k, k_j>=1} Π_j C(w(v_j), k_j)
/// ```
///
/// on one graph. The inner sum over compositions is the coefficient of `x^k`
/// in `Π_j ((1 + x)^{w(v_j)} - 1)`, computed by truncated polynomial
/// products. Evaluation first tries checked `u128` arithmetic and falls back
/// to big integers on overflow, so results are always exact.
#[derive(Clone, Debug)]
pub(crate) struct CliqueCounter {
    k: usize,
    cliques: Vec<Vec<usize>>,
    small: Vec<Vec<Option<u128>>>,
}

impl CliqueCounter {
    /// Cliques inside `within` only; weights outside it must be zero.
    pub(crate) fn new(g: &Graph, within: Mask, k: usize, max_weight: u64) -> Self {
        let mut cliques = Vec::new();
        for i in 1..=k {
            let before = cliques.len();
            for_each_clique(g.adjacency(), within, i, &mut |c| cliques.push(c.to_vec()));
            if cliques.len() == before {
                break;
            }
        }
        let rows = usize::try_from(max_weight.min(4096)).unwrap_or(4096) + 1;
        let mut small: Vec<Vec<Option<u128>>> = vec![vec![None; k + 1]; rows];
        for w in 0..rows {
            small[w][0] = Some(1);
            for j in 1..=k {
                small[w][j] = if w == 0 {
                    Some(0)
                } else {
                    match (small[w - 1][j - 1], small[w - 1][j]) {
                        (Some(a), Some(b)) => a.checked_add(b),
                        _ => None,
                    }
                };
            }
        }
        Self { k, cliques, small }
    }

    fn count_small(&self, w: &[u64]) -> Option<u128> {
        let k = self.k;
        let mut total: u128 = 0;
        let mut poly = vec![0u128; k + 1];
        let mut next = vec![0u128; k + 1];
        for clique in &self.cliques {
            if clique.iter().any(|&v| w[v] == 0) {
                continue;
            }
            poly.iter_mut().for_each(|c| *c = 0);
            poly[0] = 1;
            for (depth, &v) in clique.iter().enumerate() {
                let row = self.small.get(usize::try_from(w[v]).ok()?)?;
                next.iter_mut().for_each(|c| *c = 0);
                // after `depth + 1` factors the lowest degree is `depth + 1`
                for d in (depth + 1)..=k {
                    let mut acc: u128 = 0;
                    for j in 1..=(d - depth) {
                        let c = poly[d - j];
                        if c != 0 {
                            acc = acc.checked_add(c.checked_mul(row[j]?)?)?;
                        }
                    }
                    next[d] = acc;
                }
                core::mem::swap(&mut poly, &mut next);
            }
            total = total.checked_add(poly[k])?;
        }
        Some(total)
    }

    fn count_big(&self, w: &[u64]) -> BigCount {
        let k = self.k;
        let mut table = BinomialTable::new(k);
        let mut total = BigUint::zero();
        for clique in &self.cliques {
            if clique.iter().any(|&v| w[v] == 0) {
                continue;
            }
            let mut poly = vec![BigUint::zero(); k + 1];
            poly[0] = BigUint::from(1u32);
            for (depth, &v) in clique.iter().enumerate() {
                let row: Vec<BigUint> = (0..=k).map(|j| table.get(w[v], j).clone()).collect();
                let mut next = vec![BigUint::zero(); k + 1];
                for d in (depth + 1)..=k {
                    for j in 1..=(d - depth) {
                        if !poly[d - j].is_zero() {
                            next[d] += &poly[d - j] * &row[j];
                        }
                    }
                }
                poly = next;
            }
            total += &poly[k];
        }
        BigCount(total)
    }

    pub(crate) fn count(&self, w: &[u64]) -> BigCount {
        match self.count_small(w) {
            Some(v) => BigCount::from(v),
            None => self.count_big(w),
        }
    }

    /// Exact count when it fits in `u128`.
    pub(crate) fn count_u128(&self, w: &[u64]) -> Option<u128> {
        self.count_small(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(BigCount::binomial(6, 3), 20u64);
        assert_eq!(BigCount::binomial(10, 5), 252u64);
        assert_eq!(BigCount::binomial(3, 4), 0u64);
        assert_eq!(BigCount::binomial(0, 0), 1u64);
        let mut t = BinomialTable::new(3);
        assert_eq!(*t.get(6, 3), BigUint::from(20u32));
        assert_eq!(*t.get(2, 3), BigUint::from(0u32));
        assert_eq!(*t.get(0, 0), BigUint::from(1u32));
        let big = BigCount::binomial(200, 100);
        assert_eq!(
            big.to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
    }

    #[test]
    fn compositions_are_colex_and_complete() {
        assert_eq!(compositions(4, 2), vec![vec![3, 1], vec![2, 2], vec![1, 3]]);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
        // C(k-1, i-1) compositions
        for k in 1..8 {
            for i in 1..=k {
                let c = compositions(k, i);
                assert_eq!(BigCount::from(c.len() as u64), BigCount::binomial(k as u64 - 1, i as u64 - 1));
                assert!(c.iter().all(|p| p.iter().sum::<usize>() == k && p.iter().all(|&x| x >= 1)));
            }
        }
    }

    #[test]
    fn counter_falls_back_to_big_integers() {
        let g = Graph::complete(1).unwrap();
        let c = CliqueCounter::new(&g, 1, 60, 200);
        let w = [200u64];
        assert_eq!(c.count_u128(&w), None);
        assert_eq!(c.count(&w), BigCount::binomial(200, 60));
        let c = CliqueCounter::new(&g, 1, 3, 10);
        // weights beyond the small table also fall back
        assert_eq!(c.count(&[100]), BigCount::binomial(100, 3));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let x: BigCount = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(x.to_string(), "123456789012345678901234567890");
        assert!("-1".parse::<BigCount>().is_err());
    }
}
