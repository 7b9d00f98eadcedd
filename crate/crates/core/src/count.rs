//! Counting source-to-sink paths of the finite Hasse quiver by length.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hasse::HasseGraph;

/// Number of maximal green sequences of each length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LengthDistribution {
    counts: BTreeMap<usize, BigUint>,
}

impl LengthDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `n` sequences of length `len`; zero counts are not stored.
    pub fn add(&mut self, len: usize, n: BigUint) {
        if !n.is_zero() {
            *self.counts.entry(len).or_default() += n;
        }
    }

    pub fn merge(&mut self, other: LengthDistribution) {
        for (len, n) in other.counts {
            self.add(len, n);
        }
    }

    pub fn get(&self, len: usize) -> BigUint {
        self.counts.get(&len).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&l, n)| (l, n))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min_length(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    /// `ℓ(Q)`.
    pub fn max_length(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Whether the lengths that occur form an interval.
    pub fn no_gap(&self) -> bool {
        match (self.min_length(), self.max_length()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == self.counts.len(),
            _ => true,
        }
    }
}

impl FromIterator<(usize, u64)> for LengthDistribution {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        let mut d = LengthDistribution::new();
        for (l, n) in iter {
            d.add(l, BigUint::from(n));
        }
        d
    }
}

/// Serialized as `{"<length>": "<decimal>", ...}` in increasing length.
impl Serialize for LengthDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.counts.len()))?;
        for (len, n) in &self.counts {
            map.serialize_entry(&len.to_string(), &n.to_str_radix(10))?;
        }
        map.end()
    }
}

/// Kahn's algorithm, always emitting the smallest available vertex index.
pub fn topo_sort(h: &HasseGraph) -> Result<Vec<usize>> {
    let n = h.vertex_count();
    let mut indeg = h.in_degrees();
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for w in h.successors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    if order.len() != n {
        return Err(Error::CycleDetected);
    }
    Ok(order)
}

/// Path counts by length ending at one vertex: `values[k]` paths of length
/// `offset + k`, stored as little-endian fixed-width limb groups.
struct LengthList {
    offset: usize,
    values: Vec<u64>,
}

/// Number of source-to-sink paths of each length.
///
/// Vertices are processed in `order`; each one pushes its list, shifted by
/// one, into its successors and is then freed, so only the lists of the
/// current frontier are alive. Every count at a vertex is at most the
/// number of source-to-sink paths (each vertex reaches the sink), so a
/// fixed limb width derived from that total never overflows.
pub fn count_paths(h: &HasseGraph, order: &[usize]) -> Result<LengthDistribution> {
    let n = h.vertex_count();
    let s = h.source();
    let t = h.sink();
    if order.len() != n || order.first() != Some(&s) || order.last() != Some(&t) {
        return Err(Error::invariant("order must run from source to sink"));
    }
    let limbs = (total_paths(h, order).bits() as usize).div_ceil(64).max(1);

    let mut lists: Vec<Option<LengthList>> = (0..n).map(|_| None).collect();
    let mut start = vec![0u64; limbs];
    start[0] = 1;
    lists[s] = Some(LengthList {
        offset: 0,
        values: start,
    });
    for &v in order {
        let Some(list) = lists[v].take() else {
            continue;
        };
        if v == t {
            return Ok(decode(&list, limbs));
        }
        for w in h.successors(v) {
            let target = lists[w].get_or_insert_with(|| LengthList {
                offset: list.offset + 1,
                values: Vec::new(),
            });
            add_shifted(target, &list, limbs);
        }
    }
    Err(Error::SinkUnreachable)
}

/// `target += x` shifted by one length.
fn add_shifted(target: &mut LengthList, x: &LengthList, limbs: usize) {
    let x_lo = x.offset + 1;
    let x_len = x.values.len() / limbs;
    if target.values.is_empty() {
        target.offset = x_lo;
    }
    if x_lo < target.offset {
        let pad = (target.offset - x_lo) * limbs;
        target.values.splice(0..0, std::iter::repeat_n(0, pad));
        target.offset = x_lo;
    }
    let start = (x_lo - target.offset) * limbs;
    let need = start + x_len * limbs;
    if target.values.len() < need {
        target.values.resize(need, 0);
    }
    for k in 0..x_len {
        let dst = &mut target.values[start + k * limbs..start + (k + 1) * limbs];
        let src = &x.values[k * limbs..(k + 1) * limbs];
        let mut carry = false;
        for (d, &s) in dst.iter_mut().zip(src) {
            let (sum, c1) = d.overflowing_add(s);
            let (sum, c2) = sum.overflowing_add(u64::from(carry));
            *d = sum;
            carry = c1 || c2;
        }
        debug_assert!(!carry, "limb overflow");
    }
}

fn decode(list: &LengthList, limbs: usize) -> LengthDistribution {
    let mut d = LengthDistribution::new();
    for (k, chunk) in list.values.chunks(limbs).enumerate() {
        let digits: Vec<u32> = chunk
            .iter()
            .flat_map(|&w| [w as u32, (w >> 32) as u32])
            .collect();
        d.add(list.offset + k, BigUint::new(digits));
    }
    d
}

/// Number of source-to-sink paths regardless of length.
pub fn total_paths(h: &HasseGraph, order: &[usize]) -> BigUint {
    let mut paths: Vec<BigUint> = vec![BigUint::zero(); h.vertex_count()];
    paths[h.source()] = BigUint::one();
    for &v in order {
        if paths[v].is_zero() {
            continue;
        }
        let pv = std::mem::take(&mut paths[v]);
        if v == h.sink() {
            return pv;
        }
        for w in h.successors(v) {
            paths[w] += &pv;
        }
    }
    BigUint::zero()
}

/// Exact decimal rounded half-to-even at four significant digits and
/// rendered as `d.ddde+k`.
pub fn sci4(n: &BigUint) -> String {
    let digits = n.to_str_radix(10);
    let bytes = digits.as_bytes();
    let exp = bytes.len() - 1;
    if bytes.len() <= 4 {
        let mut m = digits.clone();
        while m.len() < 4 {
            m.push('0');
        }
        return format!("{}.{}e+{}", &m[..1], &m[1..], exp);
    }
    let mut head: u32 = digits[..4].parse().expect("digits");
    let rest = &bytes[4..];
    let round_up = match rest[0] {
        b'6'..=b'9' => true,
        b'5' => rest[1..].iter().any(|&c| c != b'0') || head % 2 == 1,
        _ => false,
    };
    let mut exp = exp;
    if round_up {
        head += 1;
        if head == 10000 {
            head = 1000;
            exp += 1;
        }
    }
    let m = head.to_string();
    format!("{}.{}e+{}", &m[..1], &m[1..], exp)
}

/// The report for one quiver, serialized in the documented field order.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    #[serde(rename = "type")]
    pub type_name: String,
    pub hasse: HasseSize,
    pub counts: LengthDistribution,
    pub total: String,
    pub total_sci: String,
    pub min_length: usize,
    pub max_length: usize,
    pub no_gap: bool,
    #[serde(skip)]
    pub vertex_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HasseSize {
    pub vertices: usize,
    pub arrows: usize,
}

impl Summary {
    /// Whether the shortest sequence has one mutation per vertex.
    pub fn min_length_is_rank(&self) -> bool {
        self.min_length == self.vertex_count
    }
}

pub fn summarize(
    dist: &LengthDistribution,
    type_name: &str,
    vertex_count: usize,
    hasse: HasseSize,
) -> Summary {
    let total = dist.total();
    Summary {
        type_name: type_name.to_string(),
        hasse,
        counts: dist.clone(),
        total: total.to_str_radix(10),
        total_sci: sci4(&total),
        min_length: dist.min_length().unwrap_or(0),
        max_length: dist.max_length().unwrap_or(0),
        no_gap: dist.no_gap(),
        vertex_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn graph(n: usize, edges: &[(u32, u32)]) -> HasseGraph {
        HasseGraph::from_edges(n, edges.to_vec(), 0, n as u32 - 1)
    }

    fn dist(h: &HasseGraph) -> LengthDistribution {
        count_paths(h, &topo_sort(h).unwrap()).unwrap()
    }

    /// Paths by length via memoized DFS from each vertex to the sink.
    fn dfs_oracle(h: &HasseGraph) -> LengthDistribution {
        fn go(
            h: &HasseGraph,
            v: usize,
            memo: &mut HashMap<usize, BTreeMap<usize, BigUint>>,
        ) -> BTreeMap<usize, BigUint> {
            if let Some(m) = memo.get(&v) {
                return m.clone();
            }
            let mut out = BTreeMap::new();
            if v == h.sink() {
                out.insert(0, BigUint::one());
            }
            for w in h.successors(v).collect::<Vec<_>>() {
                for (l, n) in go(h, w, memo) {
                    *out.entry(l + 1).or_default() += n;
                }
            }
            memo.insert(v, out.clone());
            out
        }
        let mut d = LengthDistribution::new();
        for (l, n) in go(h, h.source(), &mut HashMap::new()) {
            d.add(l, n);
        }
        d
    }

    #[test]
    fn topo_examples() {
        let chain = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(topo_sort(&chain).unwrap(), vec![0, 1, 2]);
        let diamond = graph(4, &[(0, 2), (0, 1), (1, 3), (2, 3)]);
        assert_eq!(topo_sort(&diamond).unwrap(), vec![0, 1, 2, 3]);
        let cyc = HasseGraph::from_edges(3, vec![(0, 1), (1, 2), (2, 1)], 0, 2);
        assert!(matches!(topo_sort(&cyc), Err(Error::CycleDetected)));
    }

    #[test]
    fn count_examples() {
        let edge = graph(2, &[(0, 1)]);
        assert_eq!(dist(&edge), [(1, 1)].into_iter().collect());
        let diamond = graph(5, &[(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(dist(&diamond), [(2, 1), (3, 1)].into_iter().collect());
    }

    #[test]
    fn distribution_queries() {
        let d: LengthDistribution = [(5, 4), (7, 1)].into_iter().collect();
        assert_eq!(d.min_length(), Some(5));
        assert_eq!(d.max_length(), Some(7));
        assert_eq!(d.total(), BigUint::from(5u32));
        assert!(!d.no_gap());
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"5":"4","7":"1"}"#);
        let e: LengthDistribution = [(9, 1), (10, 2), (11, 1)].into_iter().collect();
        assert!(e.no_gap());
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"9":"1","10":"2","11":"1"}"#
        );
    }

    #[test]
    fn sci_rounding() {
        let cases = [
            ("1", "1.000e+0"),
            ("210284", "2.103e+5"),
            ("12345", "1.234e+4"),
            ("12355", "1.236e+4"),
            ("123450001", "1.235e+8"),
            ("99995", "1.000e+5"),
            ("99985", "9.998e+4"),
            ("31104", "3.110e+4"),
        ];
        for (n, want) in cases {
            assert_eq!(sci4(&n.parse().unwrap()), want, "{n}");
        }
    }

    #[test]
    fn wide_counts_cross_limbs() {
        // A chain of 70 diamonds has 2^70 paths, all of length 140.
        let mut edges = Vec::new();
        for k in 0..70u32 {
            let b = 3 * k;
            edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
        }
        let h = graph(211, &edges);
        let d = dist(&h);
        assert_eq!(d.get(140), BigUint::one() << 70);
        assert_eq!(d, dfs_oracle(&h));
    }

    fn random_dag() -> impl Strategy<Value = HasseGraph> {
        (3usize..40).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..120).prop_map(move |pairs| {
                // Spine 0 -> 1 -> ... -> n-1 keeps the sink reachable.
                let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|v| (v, v + 1)).collect();
                for (a, b) in pairs {
                    if a < b {
                        edges.push((a as u32, b as u32));
                    }
                }
                HasseGraph::from_edges(n, edges, 0, n as u32 - 1)
            })
        })
    }

    proptest! {
        #[test]
        fn dp_matches_memoized_dfs(h in random_dag()) {
            let order = topo_sort(&h).unwrap();
            for (u, w) in h.edges() {
                let pu = order.iter().position(|&x| x == *u as usize).unwrap();
                let pw = order.iter().position(|&x| x == *w as usize).unwrap();
                prop_assert!(pu < pw);
            }
            let d = count_paths(&h, &order).unwrap();
            prop_assert_eq!(d.total(), total_paths(&h, &order));
            prop_assert_eq!(d, dfs_oracle(&h));
        }
    }
}
