//! The finite set `Λ` of indecomposables (and shifted projectives) that can
//! occur as summands along a maximal green sequence, together with their
//! dimension vectors.
//!
//! For a tame quiver `Λ` is the union of
//! * the preprojectives `τ^{-r} P_i` with `0 ≤ r < m + p_i`,
//! * the regular modules whose `τ`-orbit contains a nonsincere module,
//! * the preinjectives `τ^r I_i` with `0 ≤ r < m + q_i`,
//! * the shifted projectives `P_i^-`,
//!
//! where `p_i` (resp. `q_i`) is the first step after which every
//! `τ^{-s} P_i` (resp. `τ^s I_i`) is sincere and `m = max(p_i, q_i)`.
//! For a Dynkin quiver it is simply every indecomposable plus the `P_i^-`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::matrix::DimVector;
use crate::quiver::{Quiver, QuiverClass};

/// The three families of indecomposables, in catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleClass {
    Preprojective = 0,
    Regular = 1,
    /// Preinjectives, and the shifted projectives `P_b^-` as `c = -1`.
    Preinjective = 2,
}

/// `(a, b, c)` encoding of a catalog member:
///
/// * `(0, b, c)`: `τ^{-c} P_b`,
/// * `(1, b, c)`: the regular module of `τ`-period `b` with numbering `c`,
/// * `(2, b, c)`: `τ^c I_b`, and `(2, b, -1)` is `P_b^-`.
///
/// Ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleTriple {
    pub class: TripleClass,
    pub b: usize,
    pub c: i64,
}

impl ModuleTriple {
    pub fn preprojective(vertex: usize, shift: usize) -> Self {
        ModuleTriple {
            class: TripleClass::Preprojective,
            b: vertex,
            c: shift as i64,
        }
    }

    pub fn regular(period: usize, numbering: usize) -> Self {
        ModuleTriple {
            class: TripleClass::Regular,
            b: period,
            c: numbering as i64,
        }
    }

    pub fn preinjective(vertex: usize, shift: usize) -> Self {
        ModuleTriple {
            class: TripleClass::Preinjective,
            b: vertex,
            c: shift as i64,
        }
    }

    pub fn shifted_projective(vertex: usize) -> Self {
        ModuleTriple {
            class: TripleClass::Preinjective,
            b: vertex,
            c: -1,
        }
    }

    pub fn is_shifted_projective(&self) -> bool {
        self.class == TripleClass::Preinjective && self.c == -1
    }

    pub fn as_tuple(&self) -> (u8, usize, i64) {
        (self.class as u8, self.b, self.c)
    }
}

impl fmt::Display for ModuleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.class as u8, self.b, self.c)
    }
}

impl FromStr for ModuleTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "triple",
            detail: format!("expected (a,b,c), got {s:?}"),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<i64> = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let &[a, b, c] = parts.as_slice() else {
            return Err(bad());
        };
        if b < 0 {
            return Err(bad());
        }
        let class = match a {
            0 if c >= 0 => TripleClass::Preprojective,
            1 if c >= 0 && b >= 1 => TripleClass::Regular,
            2 if c >= -1 => TripleClass::Preinjective,
            _ => return Err(bad()),
        };
        Ok(ModuleTriple {
            class,
            b: b as usize,
            c,
        })
    }
}

impl Serialize for ModuleTriple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_tuple().serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogKind {
    RepFinite,
    Tame,
}

/// Output of the regular-orbit scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regulars {
    /// `(1, b, c)` triples in numbering order with their dimension vectors.
    pub triples: Vec<(ModuleTriple, DimVector)>,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub m_thresh: usize,
}

/// Dimension vectors of every nonsincere indecomposable of a tame algebra.
///
/// Each such module is an `A_i`-module for some `i`, and since every `A_i` is
/// representation-finite its indecomposables are exactly the `τ_{A_i}^{-1}`
/// orbits of the `A_i`-projectives.
pub fn nonsincere_modules(alg: &PathAlgebra) -> Result<BTreeSet<DimVector>> {
    let n = alg.vertex_count();
    // A_i has at most E8's 120 positive roots, or n(n-1) for type D.
    let cap = n * n + 120;
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let mut v = alg.restricted_cartan[i].column(j);
            let mut steps = 0;
            while !v.has_negative() {
                if steps > cap {
                    return Err(Error::OrbitOverflow(v.0, cap));
                }
                let next = alg.restricted_coxeter_inv[i].apply(&v);
                out.insert(v);
                v = next;
                steps += 1;
            }
        }
    }
    Ok(out)
}

/// Walks each nonsincere vector along its `τ`-orbit (and `τ⁻¹`-orbit) to
/// sort it into preprojective, preinjective or regular, collecting the
/// regular orbits and the thresholds `p_i`, `q_i`, `m`.
///
/// `nonsincere` is iterated in lexicographic order so the regular
/// numbering is deterministic.
pub fn build_regulars(alg: &PathAlgebra, nonsincere: &BTreeSet<DimVector>) -> Result<Regulars> {
    let n = alg.vertex_count();
    let mut p = vec![0usize; n];
    let mut q = vec![0usize; n];
    let mut triples = Vec::new();
    let mut assigned: BTreeSet<DimVector> = BTreeSet::new();
    let mut numbering = 1usize;
    let cap = nonsincere.len() + 1;

    for u in nonsincere {
        if assigned.contains(u) {
            continue;
        }
        let mut orbit: Vec<DimVector> = Vec::new();
        let mut v = u.clone();
        let mut w = u.clone();
        let mut b = 0usize;
        loop {
            if b > cap {
                return Err(Error::OrbitOverflow(u.0.clone(), cap));
            }
            // Projective branch first: a vector meeting both at the same
            // step is booked as preprojective.
            if let Some(j) = alg.is_prj(&v) {
                p[j] = p[j].max(b + 1);
                break;
            }
            if let Some(k) = alg.is_inj(&w) {
                q[k] = q[k].max(b + 1);
                break;
            }
            if b >= 1 && &v == u {
                for dim in orbit.drain(..) {
                    assigned.insert(dim.clone());
                    triples.push((ModuleTriple::regular(b, numbering), dim));
                    numbering += 1;
                }
                break;
            }
            let next_v = alg.coxeter.apply(&v);
            orbit.push(std::mem::replace(&mut v, next_v));
            w = alg.coxeter_inv.apply(&w);
            b += 1;
        }
    }
    let m_thresh = p.iter().chain(&q).copied().max().unwrap_or(0);
    Ok(Regulars {
        triples,
        p,
        q,
        m_thresh,
    })
}

/// `Λ` with its dimension-vector map and O(1) lookups by triple.
#[derive(Clone, Debug)]
pub struct Catalog {
    kind: CatalogKind,
    algebra: PathAlgebra,
    entries: Vec<ModuleTriple>,
    dims: Vec<DimVector>,
    index: HashMap<ModuleTriple, usize>,
    /// Index of `(0, i, 0)`.
    proj_start: Vec<usize>,
    /// Index of `(2, i, -1)`.
    inj_start: Vec<usize>,
    /// For regular entries: index of the first member of the orbit.
    orbit_start: Vec<usize>,
    p: Vec<usize>,
    q: Vec<usize>,
    m_thresh: usize,
    nonsincere: Vec<DimVector>,
}

impl Catalog {
    /// Picks the tame or representation-finite construction from the
    /// quiver's class.
    pub fn for_quiver(q: &Quiver) -> Result<Self> {
        let class = q.classify()?;
        if class.is_dynkin() {
            build_catalog_repfinite(q)
        } else {
            build_catalog(q)
        }
    }

    pub fn kind(&self) -> CatalogKind {
        self.kind
    }

    pub fn algebra(&self) -> &PathAlgebra {
        &self.algebra
    }

    pub fn vertex_count(&self) -> usize {
        self.algebra.vertex_count()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn triples(&self) -> &[ModuleTriple] {
        &self.entries
    }

    pub fn triple(&self, idx: usize) -> ModuleTriple {
        self.entries[idx]
    }

    /// `𝔐(X)` by catalog index.
    pub fn dim(&self, idx: usize) -> &DimVector {
        &self.dims[idx]
    }

    pub fn index_of(&self, t: &ModuleTriple) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn dim_of(&self, t: &ModuleTriple) -> Result<&DimVector> {
        self.index_of(t)
            .map(|i| &self.dims[i])
            .ok_or(Error::IndexOutOfCatalog(*t))
    }

    /// Index of `τ^{-r} P_i`, if it is in the catalog.
    pub fn preprojective(&self, i: usize, r: usize) -> Option<usize> {
        let idx = self.proj_start[i] + r;
        let t = self.entries.get(idx)?;
        (t.class == TripleClass::Preprojective && t.b == i).then_some(idx)
    }

    /// Index of `τ^r I_i` (`r = -1` gives `P_i^-`), if it is in the catalog.
    pub fn preinjective(&self, i: usize, r: i64) -> Option<usize> {
        let idx = (self.inj_start[i] as i64 + r + 1) as usize;
        let t = self.entries.get(idx)?;
        (t.class == TripleClass::Preinjective && t.b == i).then_some(idx)
    }

    pub fn shifted_projective(&self, i: usize) -> usize {
        self.inj_start[i]
    }

    /// Catalog index of `A = ⊕ P_i`, sorted.
    pub fn projective_generator(&self) -> Vec<usize> {
        self.proj_start.clone()
    }

    /// Catalog index of `0 = ⊕ P_i^-`, sorted.
    pub fn zero_module(&self) -> Vec<usize> {
        self.inj_start.clone()
    }

    /// `Φ^k 𝔐(Y)` for a regular entry, read off its orbit (`k` may be negative).
    pub fn regular_shift(&self, idx: usize, k: i64) -> &DimVector {
        let t = &self.entries[idx];
        debug_assert_eq!(t.class, TripleClass::Regular);
        let start = self.orbit_start[idx];
        let period = t.b as i64;
        let pos = (idx - start) as i64;
        &self.dims[start + (pos + k).rem_euclid(period) as usize]
    }

    pub fn regular_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.entries[i].class == TripleClass::Regular)
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn m_thresh(&self) -> usize {
        self.m_thresh
    }

    /// The set `S` of nonsincere dimension vectors (empty for Dynkin catalogs).
    pub fn nonsincere(&self) -> &[DimVector] {
        &self.nonsincere
    }

    pub fn is_prj(&self, u: &DimVector) -> Option<usize> {
        self.algebra.is_prj(u)
    }

    pub fn is_inj(&self, u: &DimVector) -> Option<usize> {
        self.algebra.is_inj(u)
    }

    pub fn is_prj_restricted(&self, i: usize, u: &DimVector) -> Option<usize> {
        self.algebra.is_prj_restricted(i, u)
    }

    fn assemble(
        kind: CatalogKind,
        algebra: PathAlgebra,
        mut members: Vec<(ModuleTriple, DimVector)>,
        p: Vec<usize>,
        q: Vec<usize>,
        m_thresh: usize,
        nonsincere: Vec<DimVector>,
    ) -> Result<Self> {
        members.sort_by_key(|m| m.0);
        let n = algebra.vertex_count();
        let (entries, dims): (Vec<_>, Vec<_>) = members.into_iter().unzip();
        let index: HashMap<_, _> = entries.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        if index.len() != entries.len() {
            return Err(Error::invariant("duplicate triple in catalog"));
        }

        let mut seen = HashMap::new();
        for (t, d) in entries.iter().zip(&dims) {
            if t.is_shifted_projective() {
                continue;
            }
            if let Some(prev) = seen.insert(d.clone(), *t) {
                return Err(Error::invariant(format!(
                    "{prev} and {t} share dimension vector {d}"
                )));
            }
        }

        let find = |t: ModuleTriple| index.get(&t).copied().ok_or(Error::IndexOutOfCatalog(t));
        let proj_start = (0..n)
            .map(|i| find(ModuleTriple::preprojective(i, 0)))
            .collect::<Result<Vec<_>>>()?;
        let inj_start = (0..n)
            .map(|i| find(ModuleTriple::shifted_projective(i)))
            .collect::<Result<Vec<_>>>()?;

        let mut orbit_start = vec![usize::MAX; entries.len()];
        let mut idx = 0;
        while idx < entries.len() {
            let t = entries[idx];
            if t.class == TripleClass::Regular {
                for k in 0..t.b {
                    orbit_start[idx + k] = idx;
                }
                idx += t.b;
            } else {
                idx += 1;
            }
        }

        Ok(Catalog {
            kind,
            algebra,
            entries,
            dims,
            index,
            proj_start,
            inj_start,
            orbit_start,
            p,
            q,
            m_thresh,
            nonsincere,
        })
    }
}

/// Builds `Λ` for a tame (extended Dynkin) quiver.
pub fn build_catalog(quiver: &Quiver) -> Result<Catalog> {
    let algebra = PathAlgebra::new(quiver)?;
    let nonsincere = nonsincere_modules(&algebra)?;
    let regs = build_regulars(&algebra, &nonsincere)?;
    let n = algebra.vertex_count();
    let m = regs.m_thresh;

    let mut members = regs.triples.clone();
    for i in 0..n {
        let mut v = algebra.dim_projective(i);
        for r in 0..m + regs.p[i] {
            if r > 0 {
                v = algebra.coxeter_inv.apply(&v);
            }
            members.push((ModuleTriple::preprojective(i, r), v.clone()));
        }
        let mut v = algebra.dim_injective(i);
        for r in 0..m + regs.q[i] {
            if r > 0 {
                v = algebra.coxeter.apply(&v);
            }
            members.push((ModuleTriple::preinjective(i, r), v.clone()));
        }
        members.push((
            ModuleTriple::shifted_projective(i),
            -algebra.dim_projective(i),
        ));
    }
    Catalog::assemble(
        CatalogKind::Tame,
        algebra,
        members,
        regs.p,
        regs.q,
        m,
        nonsincere.into_iter().collect(),
    )
}

/// Builds the catalog of a Dynkin quiver: every `τ^{-r} P_i` (walked until
/// `Φ⁻¹` leaves the module cone) plus the shifted projectives.
pub fn build_catalog_repfinite(quiver: &Quiver) -> Result<Catalog> {
    let algebra = PathAlgebra::new(quiver)?;
    let n = algebra.vertex_count();
    let cap = n * n + 120;
    let mut members = Vec::new();
    for i in 0..n {
        let mut v = algebra.dim_projective(i);
        let mut r = 0;
        loop {
            members.push((ModuleTriple::preprojective(i, r), v.clone()));
            let next = algebra.coxeter_inv.apply(&v);
            if next.has_negative() {
                // The orbit must end at an injective.
                if algebra.is_inj(&v).is_none() {
                    return Err(Error::invariant(format!(
                        "τ⁻-orbit of P_{i} ended at non-injective {v}"
                    )));
                }
                break;
            }
            v = next;
            r += 1;
            if r > cap {
                return Err(Error::OrbitOverflow(v.0, cap));
            }
        }
        members.push((
            ModuleTriple::shifted_projective(i),
            -algebra.dim_projective(i),
        ));
    }
    Catalog::assemble(
        CatalogKind::RepFinite,
        algebra,
        members,
        vec![0; n],
        vec![0; n],
        0,
        Vec::new(),
    )
}

/// Closed forms for `#S` by type, where known.
pub fn expected_nonsincere_count(class: QuiverClass) -> Option<usize> {
    match class {
        QuiverClass::ATilde { a, b } => {
            let n = a + b - 1;
            Some(n * (n + 1))
        }
        QuiverClass::DTilde(n) => Some(n * (3 * n + 1) / 2 - 3),
        QuiverClass::ETilde(6) => Some(60),
        QuiverClass::ETilde(7) => Some(91),
        QuiverClass::ETilde(8) => Some(135),
        _ => None,
    }
}

impl Serialize for Catalog {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            triple: ModuleTriple,
            dim: &'a DimVector,
        }
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .zip(&self.dims)
            .map(|(t, d)| Entry { triple: *t, dim: d })
            .collect();
        let mut st = s.serialize_struct("Catalog", 6)?;
        st.serialize_field(
            "kind",
            match self.kind {
                CatalogKind::RepFinite => "rep-finite",
                CatalogKind::Tame => "tame",
            },
        )?;
        st.serialize_field("size", &self.entries.len())?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("m_thresh", &self.m_thresh)?;
        st.serialize_field("nonsincere_count", &self.nonsincere.len())?;
        st.end()
    }
}
