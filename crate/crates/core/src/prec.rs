//! The relation `X ≺ Y` on the catalog.
//!
//! For `X`, `Y` not both regular, `X ≺ Y` holds exactly when
//! `Hom(X, τY) = 0` (with `X ≺ P_i^-` meaning `X e_i = 0`, and `P_i^- ≺ Y`
//! always). For two regular modules it is decided by moving both along
//! `τ` until they are supported away from some vertex `i`, where the
//! representation-finite rule for `A_i` applies.
//!
//! A pair is `τ`-rigid iff `X ≺ Y` and `Y ≺ X`, and an arrow
//! `M ⊕ X → M ⊕ Y` of the Hasse quiver exists iff `Y ≺ X`.

use rayon::prelude::*;

use crate::catalog::{Catalog, CatalogKind, TripleClass};
use crate::error::{Error, Result};
use crate::matrix::DimVector;

/// Which rule decided a comparison; reported by the `prec` debugging command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `X = P_i^-`, or a pair whose Hom space into `τY` always vanishes.
    Always,
    PreprojectivePair,
    PreprojectiveRegular,
    PreprojectivePreinjective,
    RegularDifferentPeriods,
    RegularPair,
    RegularPreinjective,
    PreinjectivePair,
    /// `X ≺ P_i^-` in a representation-finite catalog: `X e_i = 0`.
    SupportVanishing,
}

/// Decides `X ≺ Y` for catalog indices `x`, `y`.
pub fn prec(cat: &Catalog, x: usize, y: usize) -> Result<bool> {
    compare(cat, x, y).map(|(b, _)| b)
}

/// `X ≺ Y` together with the rule that decided it.
pub fn compare(cat: &Catalog, x: usize, y: usize) -> Result<(bool, Branch)> {
    match cat.kind() {
        CatalogKind::Tame => compare_tame(cat, x, y),
        CatalogKind::RepFinite => compare_repfinite(cat, x, y),
    }
}

fn zero_at(v: &DimVector, j: usize) -> bool {
    v[j] == 0
}

fn compare_repfinite(cat: &Catalog, x: usize, y: usize) -> Result<(bool, Branch)> {
    let (tx, ty) = (cat.triple(x), cat.triple(y));
    if tx.is_shifted_projective() {
        return Ok((true, Branch::Always));
    }
    if ty.is_shifted_projective() {
        return Ok((zero_at(cat.dim(x), ty.b), Branch::SupportVanishing));
    }
    // Both preprojective: X = τ^{-s} P_j, Y = τ^{-r} P_i.
    let (s, r) = (tx.c, ty.c);
    if s >= r {
        return Ok((true, Branch::PreprojectivePair));
    }
    let idx = cat
        .preprojective(ty.b, (r - s - 1) as usize)
        .ok_or(Error::IndexOutOfCatalog(ty))?;
    Ok((zero_at(cat.dim(idx), tx.b), Branch::PreprojectivePair))
}

fn compare_tame(cat: &Catalog, x: usize, y: usize) -> Result<(bool, Branch)> {
    use TripleClass::*;
    let (tx, ty) = (cat.triple(x), cat.triple(y));
    let res = match (tx.class, ty.class) {
        (Preprojective, Preprojective) => {
            let ok = tx.c >= ty.c || {
                let shift = (ty.c - tx.c - 1) as usize;
                let idx = cat
                    .preprojective(ty.b, shift)
                    .ok_or(Error::IndexOutOfCatalog(ty))?;
                zero_at(cat.dim(idx), tx.b)
            };
            (ok, Branch::PreprojectivePair)
        }
        (Preprojective, Regular) => {
            let k = (tx.c + 1).rem_euclid(ty.b as i64);
            (
                zero_at(cat.regular_shift(y, k), tx.b),
                Branch::PreprojectiveRegular,
            )
        }
        (Preprojective, Preinjective) => {
            let shift = ty.c + tx.c + 1;
            let ok = (shift as usize) < cat.q()[ty.b] && {
                let idx = cat
                    .preinjective(ty.b, shift)
                    .ok_or(Error::IndexOutOfCatalog(ty))?;
                zero_at(cat.dim(idx), tx.b)
            };
            (ok, Branch::PreprojectivePreinjective)
        }
        (Regular, Regular) => {
            if tx.b != ty.b {
                (true, Branch::RegularDifferentPeriods)
            } else {
                (case_regular_pair(cat, x, y)?, Branch::RegularPair)
            }
        }
        (Regular, Preinjective) => {
            let k = (ty.c + 1).rem_euclid(tx.b as i64);
            (
                zero_at(cat.regular_shift(x, -k), ty.b),
                Branch::RegularPreinjective,
            )
        }
        (Preinjective, Preinjective) => {
            let ok = tx.c <= ty.c || {
                let idx = cat
                    .preinjective(tx.b, tx.c - ty.c - 1)
                    .ok_or(Error::IndexOutOfCatalog(tx))?;
                zero_at(cat.dim(idx), ty.b)
            };
            (ok, Branch::PreinjectivePair)
        }
        _ => (true, Branch::Always),
    };
    Ok(res)
}

/// `X ≺ Y` for two regular catalog entries.
///
/// Tubes of different rank are Hom-orthogonal, so different periods give
/// `true` at once. Otherwise look for a shift `τ^r` and a vertex `i` with
/// both `τ^r X`, `τ^r Y` supported away from `i`; over the
/// representation-finite `A_i` both lie on `τ_{A_i}`-orbits of projectives,
/// and walking them back decides the rep-finite rule.
pub fn case_regular_pair(cat: &Catalog, x: usize, y: usize) -> Result<bool> {
    let (tx, ty) = (cat.triple(x), cat.triple(y));
    debug_assert!(tx.class == TripleClass::Regular && ty.class == TripleClass::Regular);
    if tx.b != ty.b {
        return Ok(true);
    }
    let alg = cat.algebra();
    let n = cat.vertex_count();
    let cap = n * n + 120;
    for i in 0..n {
        let phi_bar = &alg.restricted_coxeter[i];
        for r in 0..tx.b as i64 {
            let mut u = cat.regular_shift(x, r).clone();
            let mut v = cat.regular_shift(y, r).clone();
            if u[i] != 0 || v[i] != 0 {
                continue;
            }
            let mut j = alg.is_prj_restricted(i, &u);
            let mut k = alg.is_prj_restricted(i, &v);
            let mut steps = 0;
            while j.is_none() && k.is_none() {
                u = phi_bar.apply(&u);
                v = phi_bar.apply(&v);
                j = alg.is_prj_restricted(i, &u);
                k = alg.is_prj_restricted(i, &v);
                steps += 1;
                if steps > cap {
                    return Err(Error::LoopOverflow { vertex: i, cap });
                }
            }
            if k.is_some() {
                return Ok(true);
            }
            let j = j.expect("loop exits with a projective");
            if phi_bar.apply(&v)[j] == 0 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Fixed-width bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRows {
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    fn from_rows(cols: usize, rows: Vec<Vec<u64>>) -> Self {
        let words = cols.div_ceil(64).max(1);
        let mut data = Vec::with_capacity(rows.len() * words);
        for r in rows {
            debug_assert_eq!(r.len(), words);
            data.extend(r);
        }
        BitRows { words, data }
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }
}

pub(crate) fn bits_of(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                w * 64 + b
            })
        })
    })
}

/// Dense `≺` matrix over `Λ × Λ` plus the `COEXIST` rows derived from it.
#[derive(Clone, Debug)]
pub struct PrecTable {
    size: usize,
    prec: BitRows,
    coexist: BitRows,
}

impl PrecTable {
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn prec(&self, x: usize, y: usize) -> bool {
        self.prec.get(x, y)
    }

    pub fn compatible(&self, x: usize, y: usize) -> bool {
        self.coexist.get(x, y)
    }

    /// `COEXIST(X)` as a bit row over catalog indices.
    pub fn coexist_row(&self, x: usize) -> &[u64] {
        self.coexist.row(x)
    }

    pub fn coexist(&self, x: usize) -> Vec<usize> {
        bits_of(self.coexist.row(x)).collect()
    }

    pub fn words(&self) -> usize {
        self.coexist.words()
    }

    /// Number of unordered compatible pairs.
    pub fn compatible_pairs(&self) -> usize {
        (0..self.size).map(|x| self.coexist(x).len()).sum::<usize>() / 2
    }
}

/// Fills the full `≺` table (rows in parallel; the result does not depend on
/// the thread count) and derives `COEXIST`.
pub fn build_prec_table(cat: &Catalog) -> Result<PrecTable> {
    let n = cat.len();
    let words = n.div_ceil(64).max(1);
    let rows: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut row = vec![0u64; words];
            for y in 0..n {
                if prec(cat, x, y)? {
                    row[y / 64] |= 1 << (y % 64);
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let prec = BitRows::from_rows(n, rows);
    let coexist_rows = (0..n)
        .map(|x| {
            let mut row = vec![0u64; words];
            for y in (0..n).filter(|&y| y != x) {
                if prec.get(x, y) && prec.get(y, x) {
                    row[y / 64] |= 1 << (y % 64);
                }
            }
            row
        })
        .collect();
    Ok(PrecTable {
        size: n,
        prec,
        coexist: BitRows::from_rows(n, coexist_rows),
    })
}

/// Largest set of pairwise compatible regular catalog members.
pub fn max_regular_clique(cat: &Catalog, table: &PrecTable) -> usize {
    let regular: Vec<usize> = cat.regular_indices().collect();
    fn grow(table: &PrecTable, chosen: usize, candidates: &[usize]) -> usize {
        let mut best = chosen;
        for (k, &c) in candidates.iter().enumerate() {
            let rest: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&d| table.compatible(c, d))
                .collect();
            if chosen + 1 + rest.len() <= best {
                continue;
            }
            best = best.max(grow(table, chosen + 1, &rest));
        }
        best
    }
    grow(table, 0, &regular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, ModuleTriple};
    use crate::presets::preset;

    fn dtilde4() -> Catalog {
        build_catalog(&preset("Dtilde4-paper").unwrap()).unwrap()
    }

    #[test]
    fn shifted_projectives_precede_everything() {
        let cat = dtilde4();
        let table = build_prec_table(&cat).unwrap();
        for i in 0..5 {
            let p = cat.shifted_projective(i);
            for y in 0..cat.len() {
                assert!(table.prec(p, y));
                // Column of P_i^-: exactly the members with zero at i.
                let expected = cat.triple(y).is_shifted_projective() || cat.dim(y)[i] == 0;
                assert_eq!(
                    table.prec(y, p),
                    expected,
                    "{} vs {}",
                    cat.triple(y),
                    cat.triple(p)
                );
            }
        }
    }

    #[test]
    fn simple_examples() {
        let cat = dtilde4();
        let idx = |t: ModuleTriple| cat.index_of(&t).unwrap();
        let p00 = idx(ModuleTriple::preprojective(0, 0));
        let p01 = idx(ModuleTriple::preprojective(0, 1));
        assert!(prec(&cat, p00, p00).unwrap());
        assert!(!prec(&cat, p00, p01).unwrap());
        assert_eq!(
            compare(&cat, p00, p01).unwrap().1,
            Branch::PreprojectivePair
        );
    }

    #[test]
    fn reflexive_on_modules() {
        for name in [
            "Dtilde4-paper",
            "Dtilde:5",
            "Etilde:6",
            "Atilde:2,1",
            "A:4",
            "D:4",
        ] {
            let cat = crate::catalog::Catalog::for_quiver(&preset(name).unwrap()).unwrap();
            for x in 0..cat.len() {
                assert!(prec(&cat, x, x).unwrap(), "{name}: {}", cat.triple(x));
            }
        }
    }

    #[test]
    fn regular_pairs_of_distinct_periods() {
        let cat = build_catalog(&preset("Etilde8-paper").unwrap()).unwrap();
        let regs: Vec<usize> = cat.regular_indices().collect();
        for &x in &regs {
            for &y in &regs {
                if cat.triple(x).b != cat.triple(y).b {
                    assert!(case_regular_pair(&cat, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn regular_cliques_bounded() {
        for name in ["Dtilde4-paper", "Dtilde:5", "Etilde:6", "Atilde:2,2"] {
            let q = preset(name).unwrap();
            let cat = build_catalog(&q).unwrap();
            let table = build_prec_table(&cat).unwrap();
            assert!(
                max_regular_clique(&cat, &table) <= q.vertex_count() - 2,
                "{name}"
            );
        }
    }

    #[test]
    fn bits_iterate_in_order() {
        let words = [0b1010u64, 1u64 << 63];
        assert_eq!(bits_of(&words).collect::<Vec<_>>(), vec![1, 3, 127]);
    }
}
