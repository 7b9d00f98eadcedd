//! Acyclic quivers, their Dynkin / extended Dynkin classification, and the
//! orientation-changing operations (opposite, sink/source reflection).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite connected acyclic quiver on vertices `0..vertices`.
///
/// Parallel arrows are allowed (the Kronecker quiver is `0 ⇉ 1`). The
/// constructor enforces the invariants; every other function in the crate
/// may assume them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

#[derive(Deserialize)]
struct RawQuiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
    #[serde(default)]
    name: Option<String>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let q = Quiver {
            vertices,
            arrows,
            name: None,
        };
        q.check()?;
        Ok(q)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Parses the `{"vertices": m, "arrows": [[s,t],...], "name": ...}` format.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawQuiver = serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "quiver JSON",
            detail: e.to_string(),
        })?;
        let q = Quiver {
            vertices: raw.vertices,
            arrows: raw.arrows,
            name: raw.name,
        };
        q.check()?;
        Ok(q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("quiver serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    fn check(&self) -> Result<()> {
        if self.vertices == 0 {
            return Err(Error::Empty);
        }
        for (index, &(s, t)) in self.arrows.iter().enumerate() {
            for vertex in [s, t] {
                if vertex >= self.vertices {
                    return Err(Error::VertexOutOfRange {
                        index,
                        vertex,
                        vertex_count: self.vertices,
                    });
                }
            }
        }
        self.topological_order()?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    /// Vertices in a topological order (sources first), smallest index first
    /// among ties. Fails on loops and directed cycles.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices;
        let mut indeg = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(s, t) in &self.arrows {
            if s == t {
                return Err(Error::CyclicQuiver(s));
            }
            indeg[t] += 1;
            out[s].push(t);
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::CyclicQuiver(stuck));
        }
        Ok(order)
    }

    fn is_connected(&self) -> bool {
        let adj = self.neighbors();
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Underlying-graph adjacency, one entry per arrow end.
    fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(s, t) in &self.arrows {
            adj[s].push(t);
            adj[t].push(s);
        }
        adj
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != i)
    }

    /// Every arrow reversed, in place in the arrow list.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
            name: self.name.clone(),
        }
    }

    /// Reverses the arrows incident to a sink or source `i`.
    pub fn reflect(&self, i: usize) -> Result<Quiver> {
        if i >= self.vertices {
            return Err(Error::VertexOutOfRange {
                index: 0,
                vertex: i,
                vertex_count: self.vertices,
            });
        }
        if !self.is_sink(i) && !self.is_source(i) {
            return Err(Error::NotSinkOrSource(i));
        }
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == i || t == i { (t, s) } else { (s, t) })
            .collect();
        Ok(Quiver {
            vertices: self.vertices,
            arrows,
            name: self.name.clone(),
        })
    }

    /// All acyclic re-orientations of the underlying graph, keyed by the
    /// bitmask of reversed arrows (bit `k` reverses arrow `k`), in mask order.
    pub fn orientations(&self) -> Result<Vec<(u32, Quiver)>> {
        let e = self.arrows.len();
        if e > 12 {
            return Err(Error::TooManyOrientations(e));
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << e) {
            let arrows = self
                .arrows
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| if mask >> k & 1 == 1 { (t, s) } else { (s, t) })
                .collect();
            match Quiver::new(self.vertices, arrows) {
                Ok(q) => out.push((mask, q)),
                Err(Error::CyclicQuiver(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }

    pub fn classify(&self) -> Result<QuiverClass> {
        classify(self)
    }
}

/// Representation type of a quiver, read off its underlying graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuiverClass {
    /// `A_n` on `n` vertices.
    A(usize),
    /// `D_n` on `n` vertices, `n >= 4`.
    D(usize),
    /// `E_6`, `E_7`, `E_8`.
    E(usize),
    /// `Ã_{a,b}`: a cycle on `a + b` vertices with `a` arrows one way round
    /// and `b` the other. Normalized so that `a >= b >= 1`.
    ATilde { a: usize, b: usize },
    /// `D̃_n` on `n + 1` vertices, `n >= 4`.
    DTilde(usize),
    /// `Ẽ_6`, `Ẽ_7`, `Ẽ_8`.
    ETilde(usize),
}

impl QuiverClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(
            self,
            QuiverClass::A(_) | QuiverClass::D(_) | QuiverClass::E(_)
        )
    }

    pub fn is_tame(&self) -> bool {
        !self.is_dynkin()
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            QuiverClass::A(n) | QuiverClass::D(n) | QuiverClass::E(n) => n,
            QuiverClass::ATilde { a, b } => a + b,
            QuiverClass::DTilde(n) | QuiverClass::ETilde(n) => n + 1,
        }
    }

    /// Number of positive roots, i.e. indecomposable modules, for Dynkin types.
    pub fn positive_roots(&self) -> Option<usize> {
        match *self {
            QuiverClass::A(n) => Some(n * (n + 1) / 2),
            QuiverClass::D(n) => Some(n * (n - 1)),
            QuiverClass::E(6) => Some(36),
            QuiverClass::E(7) => Some(63),
            QuiverClass::E(8) => Some(120),
            _ => None,
        }
    }
}

impl fmt::Display for QuiverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverClass::A(n) => write!(f, "A{n}"),
            QuiverClass::D(n) => write!(f, "D{n}"),
            QuiverClass::E(n) => write!(f, "E{n}"),
            QuiverClass::ATilde { a, b } => write!(f, "Atilde{a},{b}"),
            QuiverClass::DTilde(n) => write!(f, "Dtilde{n}"),
            QuiverClass::ETilde(n) => write!(f, "Etilde{n}"),
        }
    }
}

/// Classifies a validated quiver by its underlying graph.
///
/// Acyclicity and connectivity are already guaranteed by [`Quiver::new`];
/// anything that is not (extended) ADE yields [`Error::Unsupported`].
pub fn classify(q: &Quiver) -> Result<QuiverClass> {
    let m = q.vertex_count();
    let e = q.arrows().len();
    if e + 1 == m {
        classify_tree(q)
    } else if e == m {
        classify_cycle(q)
    } else {
        Err(Error::Unsupported(format!(
            "{m} vertices and {e} arrows: more than one cycle in the underlying graph"
        )))
    }
}

fn classify_tree(q: &Quiver) -> Result<QuiverClass> {
    let m = q.vertex_count();
    let adj = q.neighbors();
    let branch: Vec<usize> = (0..m).filter(|&v| adj[v].len() >= 3).collect();
    let unsupported = |why: &str| Err(Error::Unsupported(why.to_string()));
    match branch.as_slice() {
        [] => Ok(QuiverClass::A(m)),
        &[c] => {
            let mut arms: Vec<usize> = adj[c].iter().map(|&w| arm_length(&adj, c, w)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(QuiverClass::D(k + 3)),
                [1, 2, 2] => Ok(QuiverClass::E(6)),
                [1, 2, 3] => Ok(QuiverClass::E(7)),
                [1, 2, 4] => Ok(QuiverClass::E(8)),
                [2, 2, 2] => Ok(QuiverClass::ETilde(6)),
                [1, 3, 3] => Ok(QuiverClass::ETilde(7)),
                [1, 2, 5] => Ok(QuiverClass::ETilde(8)),
                [1, 1, 1, 1] => Ok(QuiverClass::DTilde(4)),
                _ => unsupported(&format!("star with arms {arms:?}")),
            }
        }
        &[c1, c2] => {
            let leaves = |c: usize| adj[c].iter().filter(|&&w| adj[w].len() == 1).count();
            if adj[c1].len() == 3 && adj[c2].len() == 3 && leaves(c1) == 2 && leaves(c2) == 2 {
                Ok(QuiverClass::DTilde(m - 1))
            } else {
                unsupported("two branch points that are not both forks of two leaves")
            }
        }
        _ => unsupported("more than two branch points"),
    }
}

/// Number of vertices on the arm that leaves `center` through `first`.
fn arm_length(adj: &[Vec<usize>], center: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, first, 1);
    while adj[cur].len() == 2 {
        let next = if adj[cur][0] == prev {
            adj[cur][1]
        } else {
            adj[cur][0]
        };
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

fn classify_cycle(q: &Quiver) -> Result<QuiverClass> {
    let m = q.vertex_count();
    let adj = q.neighbors();
    if adj.iter().any(|nbrs| nbrs.len() != 2) {
        return Err(Error::Unsupported(
            "underlying graph has a cycle with extra branches".to_string(),
        ));
    }
    // Walk the cycle arrow by arrow, counting arrows that point along the walk.
    let mut used = vec![false; q.arrows().len()];
    let mut cur = 0;
    let (mut forward, mut backward) = (0, 0);
    for _ in 0..m {
        let (k, &(s, t)) = q
            .arrows()
            .iter()
            .enumerate()
            .find(|&(k, &(s, t))| !used[k] && (s == cur || t == cur))
            .ok_or_else(|| Error::invariant("cycle walk lost its way"))?;
        used[k] = true;
        if s == cur {
            forward += 1;
            cur = t;
        } else {
            backward += 1;
            cur = s;
        }
    }
    if cur != 0 || forward == 0 || backward == 0 {
        return Err(Error::invariant("cycle walk did not close"));
    }
    Ok(QuiverClass::ATilde {
        a: forward.max(backward),
        b: forward.min(backward),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: usize, arrows: &[(usize, usize)]) -> Result<Quiver> {
        Quiver::new(m, arrows.to_vec())
    }

    #[test]
    fn classify_examples() {
        let d4 = q(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(d4.classify().unwrap(), QuiverClass::DTilde(4));
        assert_eq!(q(1, &[]).unwrap().classify().unwrap(), QuiverClass::A(1));
        assert_eq!(q(3, &[(0, 1), (1, 2), (2, 0)]), Err(Error::CyclicQuiver(0)));
    }

    #[test]
    fn distinct_validation_errors() {
        assert_eq!(q(2, &[(0, 0), (0, 1)]), Err(Error::CyclicQuiver(0)));
        assert_eq!(q(3, &[(0, 1)]), Err(Error::Disconnected));
        assert!(matches!(
            q(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, .. })
        ));
        assert_eq!(q(0, &[]), Err(Error::Empty));
        // Three parallel arrows: the generalized Kronecker quiver is wild.
        let k3 = q(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(matches!(k3.classify(), Err(Error::Unsupported(_))));
        // Star with five arms.
        let star = q(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert!(matches!(star.classify(), Err(Error::Unsupported(_))));
        // T(2,2,3)-like tree that is neither E nor extended E: arms (2,2,3).
        let t = q(8, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7)]).unwrap();
        assert!(matches!(t.classify(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn classify_families() {
        let kron = q(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(kron.classify().unwrap(), QuiverClass::ATilde { a: 1, b: 1 });
        let a21 = q(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(a21.classify().unwrap(), QuiverClass::ATilde { a: 2, b: 1 });
        let d5 = q(5, &[(0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(d5.classify().unwrap(), QuiverClass::D(5));
        let dt5 = q(6, &[(0, 2), (1, 2), (3, 2), (4, 3), (5, 3)]).unwrap();
        assert_eq!(dt5.classify().unwrap(), QuiverClass::DTilde(5));
        // Parallel arrows inside a bigger cycle graph are wild.
        let wild = q(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(matches!(wild.classify(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn opposite_and_reflect() {
        let a2 = q(2, &[(0, 1)]).unwrap();
        assert_eq!(a2.opposite().arrows(), &[(1, 0)]);

        let d4 = q(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(d4.opposite().arrows(), &[(2, 0), (2, 1), (3, 2), (4, 2)]);
        assert_eq!(d4.opposite().opposite(), d4);

        let r = d4.reflect(3).unwrap();
        assert_eq!(r.arrows(), &[(0, 2), (1, 2), (3, 2), (2, 4)]);
        assert_eq!(r.reflect(3).unwrap(), d4);
        assert_eq!(d4.reflect(2), Err(Error::NotSinkOrSource(2)));
    }

    #[test]
    fn orientations_skip_cycles() {
        let a21 = q(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let all = a21.orientations().unwrap();
        // 8 orientations of a triangle, 2 of them cyclic.
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|(_, o)| o.classify().is_ok()));
    }

    #[test]
    fn json_round_trip() {
        let d4 = q(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap().named("d4");
        let text = d4.to_json();
        assert_eq!(
            text,
            r#"{"vertices":5,"arrows":[[0,2],[1,2],[2,3],[2,4]],"name":"d4"}"#
        );
        assert_eq!(Quiver::from_json(&text).unwrap(), d4);
        assert!(matches!(Quiver::from_json("{"), Err(Error::Parse { .. })));
    }
}
