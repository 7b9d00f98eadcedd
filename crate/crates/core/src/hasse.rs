//! Breadth-first construction of the Hasse quiver of support τ-tilting
//! modules below `A`, restricted to the catalog, and its pruning to the part
//! that can still reach `0`.

use std::fmt::Write as _;

use rustc_hash::FxHashMap;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::prec::{bits_of, PrecTable};

/// A support τ-tilting module as the sorted list of the catalog indices of
/// its summands. Catalog order is the lexicographic triple order, so two
/// modules are isomorphic iff their index lists are equal.
pub type Summands = [u16];

/// Computes `M(T, j) = ⋂_{i ≠ j} COEXIST(T_i)` for every position `j` at
/// once and returns the downward mutation at each position, if any.
///
/// `M(T, j)` always contains `T_j`; it has at most one other element `T'_j`,
/// and the mutation goes down iff `T'_j ≺ T_j`.
pub fn mutations(t: &Summands, table: &PrecTable) -> Result<Vec<Option<Vec<u16>>>> {
    let m = t.len();
    let words = table.words();
    let universe = universe(table.len(), words);
    // prefix[k] = AND of rows t[0..k], suffix[k] = AND of rows t[k..m].
    let mut prefix = vec![universe.clone(); m + 1];
    let mut suffix = vec![universe; m + 1];
    for k in 0..m {
        let row = table.coexist_row(t[k] as usize);
        for w in 0..words {
            prefix[k + 1][w] = prefix[k][w] & row[w];
        }
    }
    for k in (0..m).rev() {
        let row = table.coexist_row(t[k] as usize);
        for w in 0..words {
            suffix[k][w] = suffix[k + 1][w] & row[w];
        }
    }
    let mut out = Vec::with_capacity(m);
    for j in 0..m {
        let cands: Vec<u64> = (0..words)
            .map(|w| prefix[j][w] & suffix[j + 1][w])
            .collect();
        out.push(pick_mutation(t, j, &cands, table)?);
    }
    Ok(out)
}

/// Downward mutation of `T` at position `j`, or `None` if the exchange is
/// upward or leaves the catalog.
pub fn mutate(t: &Summands, j: usize, table: &PrecTable) -> Result<Option<Vec<u16>>> {
    let words = table.words();
    let mut cands = universe(table.len(), words);
    for (i, &x) in t.iter().enumerate() {
        if i != j {
            let row = table.coexist_row(x as usize);
            for w in 0..words {
                cands[w] &= row[w];
            }
        }
    }
    pick_mutation(t, j, &cands, table)
}

fn universe(n: usize, words: usize) -> Vec<u64> {
    let mut u = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        u[words - 1] = (1u64 << (n % 64)) - 1;
    }
    if n == 0 {
        u.fill(0);
    }
    u
}

fn pick_mutation(
    t: &Summands,
    j: usize,
    cands: &[u64],
    table: &PrecTable,
) -> Result<Option<Vec<u16>>> {
    let found: u32 = cands.iter().map(|w| w.count_ones()).sum();
    let current = t[j] as usize;
    if found == 0 || found > 2 || cands[current / 64] >> (current % 64) & 1 == 0 {
        return Err(Error::CardinalityViolation {
            position: j,
            found: found as usize,
        });
    }
    if found == 1 {
        return Ok(None);
    }
    let other = bits_of(cands)
        .find(|&y| y != current)
        .expect("two candidates");
    if !table.prec(other, current) {
        return Ok(None);
    }
    let mut next = t.to_vec();
    next[j] = other as u16;
    next.sort_unstable();
    Ok(Some(next))
}

/// The Hasse quiver as a static graph with CSR adjacency.
#[derive(Clone, Debug)]
pub struct HasseGraph {
    rank: usize,
    /// Summand lists, `rank` indices per vertex.
    modules: Vec<u16>,
    /// Edges grouped by source, in discovery order.
    edges: Vec<(u32, u32)>,
    out_offsets: Vec<usize>,
    seen: FxHashMap<Box<[u16]>, u32>,
    source: u32,
    sink: u32,
}

impl HasseGraph {
    fn from_parts(
        rank: usize,
        modules: Vec<u16>,
        edges: Vec<(u32, u32)>,
        source: u32,
        sink: u32,
    ) -> Self {
        let n = modules.len() / rank.max(1);
        let mut out_offsets = vec![0usize; n + 1];
        for &(u, _) in &edges {
            out_offsets[u as usize + 1] += 1;
        }
        for k in 0..n {
            out_offsets[k + 1] += out_offsets[k];
        }
        debug_assert!(edges.windows(2).all(|w| w[0].0 <= w[1].0));
        let seen = modules
            .chunks(rank)
            .enumerate()
            .map(|(i, t)| (Box::<[u16]>::from(t), i as u32))
            .collect();
        HasseGraph {
            rank,
            modules,
            edges,
            out_offsets,
            seen,
            source,
            sink,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges[self.out_offsets[v]..self.out_offsets[v + 1]]
            .iter()
            .map(|&(_, w)| w as usize)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count()];
        for &(_, w) in &self.edges {
            d[w as usize] += 1;
        }
        d
    }

    pub fn module(&self, v: usize) -> &Summands {
        &self.modules[v * self.rank..(v + 1) * self.rank]
    }

    /// Vertex of a summand list, if present.
    pub fn find(&self, t: &Summands) -> Option<usize> {
        self.seen.get(t).map(|&v| v as usize)
    }

    /// The vertex of `A = ⊕ P_i`.
    pub fn source(&self) -> usize {
        self.source as usize
    }

    /// The vertex of `0 = ⊕ P_i^-`.
    pub fn sink(&self) -> usize {
        self.sink as usize
    }

    /// Builds a graph from an explicit edge list; used for testing the
    /// graph algorithms on hand-made DAGs. Each vertex gets a one-element
    /// dummy module.
    pub fn from_edges(vertices: usize, mut edges: Vec<(u32, u32)>, source: u32, sink: u32) -> Self {
        edges.sort_by_key(|&(u, _)| u);
        let modules = (0..vertices as u16).collect();
        Self::from_parts(1, modules, edges, source, sink)
    }
}

/// Breadth-first search from `A` over downward mutations.
///
/// Vertices are numbered in discovery order and positions are tried in
/// ascending order, so the numbering is a deterministic function of the
/// catalog.
pub fn build_hasse(cat: &Catalog, table: &PrecTable) -> Result<HasseGraph> {
    if cat.len() > u16::MAX as usize {
        return Err(Error::invariant(
            "catalog too large for 16-bit summand indices",
        ));
    }
    let rank = cat.vertex_count();
    let start: Vec<u16> = cat
        .projective_generator()
        .iter()
        .map(|&i| i as u16)
        .collect();
    let zero: Vec<u16> = cat.zero_module().iter().map(|&i| i as u16).collect();

    let mut modules: Vec<u16> = start.clone();
    let mut seen: FxHashMap<Box<[u16]>, u32> = FxHashMap::default();
    seen.insert(start.into_boxed_slice(), 0);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut j = 0usize;
    while j * rank < modules.len() {
        let t = modules[j * rank..(j + 1) * rank].to_vec();
        for next in mutations(&t, table)?.into_iter().flatten() {
            debug_assert!(pairwise_compatible(&next, table), "incompatible summands");
            let target = match seen.get(next.as_slice()) {
                Some(&k) => k,
                None => {
                    let k = (modules.len() / rank) as u32;
                    modules.extend_from_slice(&next);
                    seen.insert(next.into_boxed_slice(), k);
                    k
                }
            };
            edges.push((j as u32, target));
        }
        j += 1;
    }
    let sink = *seen.get(zero.as_slice()).ok_or(Error::SinkUnreachable)?;
    drop(seen);
    Ok(HasseGraph::from_parts(rank, modules, edges, 0, sink))
}

/// All summands distinct and pairwise compatible.
pub fn pairwise_compatible(t: &Summands, table: &PrecTable) -> bool {
    t.iter().enumerate().all(|(i, &x)| {
        t[i + 1..]
            .iter()
            .all(|&y| x != y && table.compatible(x as usize, y as usize))
    })
}

/// Keeps exactly the vertices from which the sink is reachable, renumbered
/// in their original order.
pub fn prune_to_finite(h: &HasseGraph) -> HasseGraph {
    let n = h.vertex_count();
    let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, w) in &h.edges {
        preds[w as usize].push(u);
    }
    let mut keep = vec![false; n];
    keep[h.sink()] = true;
    let mut stack = vec![h.sink];
    while let Some(v) = stack.pop() {
        for &u in &preds[v as usize] {
            if !keep[u as usize] {
                keep[u as usize] = true;
                stack.push(u);
            }
        }
    }
    drop(preds);
    let mut new_index = vec![u32::MAX; n];
    let mut modules = Vec::new();
    let mut next = 0u32;
    for v in 0..n {
        if keep[v] {
            new_index[v] = next;
            next += 1;
            modules.extend_from_slice(h.module(v));
        }
    }
    let edges = h
        .edges
        .iter()
        .filter(|&&(u, w)| keep[u as usize] && keep[w as usize])
        .map(|&(u, w)| (new_index[u as usize], new_index[w as usize]))
        .collect();
    HasseGraph::from_parts(
        h.rank,
        modules,
        edges,
        new_index[h.source()],
        new_index[h.sink()],
    )
}

/// Graphviz rendering; vertices are labelled with their summand triples.
pub fn emit_dot(h: &HasseGraph, cat: &Catalog) -> String {
    let mut s = String::from("digraph hasse {\n");
    for v in 0..h.vertex_count() {
        let label: Vec<String> = h
            .module(v)
            .iter()
            .map(|&x| cat.triple(x as usize).to_string())
            .collect();
        writeln!(s, "  {v} [label=\"{}\"];", label.join(" ")).unwrap();
    }
    for &(u, w) in h.edges() {
        writeln!(s, "  {u} -> {w};").unwrap();
    }
    s.push_str("}\n");
    s
}
