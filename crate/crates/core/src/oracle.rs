//! Direct enumeration of maximal green sequences by mutating the framed
//! quiver. Independent of the catalog and Hasse machinery, and exponential,
//! so only suitable for small cases.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::count::LengthDistribution;
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// An ice quiver on `m` mutable vertices `0..m` and `m` frozen vertices
/// `m..2m`, as a skew-symmetric exchange matrix: `b[x][y] > 0` means
/// `b[x][y]` arrows `x → y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IceQuiver {
    m: usize,
    b: Vec<i64>,
}

impl IceQuiver {
    pub fn mutable_count(&self) -> usize {
        self.m
    }

    pub fn entry(&self, x: usize, y: usize) -> i64 {
        self.b[x * 2 * self.m + y]
    }

    fn set(&mut self, x: usize, y: usize, v: i64) {
        let n = 2 * self.m;
        self.b[x * n + y] = v;
    }

    /// Frozen copy of mutable vertex `i`.
    pub fn frozen(&self, i: usize) -> usize {
        self.m + i
    }
}

/// `Q` plus one frozen vertex `c(i)` and an arrow `i → c(i)` per vertex.
pub fn framed(q: &Quiver) -> IceQuiver {
    let m = q.vertex_count();
    let mut r = IceQuiver {
        m,
        b: vec![0; 4 * m * m],
    };
    for &(s, t) in q.arrows() {
        r.set(s, t, r.entry(s, t) + 1);
        r.set(t, s, r.entry(t, s) - 1);
    }
    for i in 0..m {
        r.set(i, m + i, 1);
        r.set(m + i, i, -1);
    }
    r
}

/// Mutation at the mutable vertex `k`, in place.
pub fn ice_mutate_in_place(r: &mut IceQuiver, k: usize) {
    let n = 2 * r.m;
    // Row and column k are read before they are negated at the end.
    for x in (0..n).filter(|&x| x != k) {
        let bxk = r.b[x * n + k];
        if bxk == 0 {
            continue;
        }
        for y in (0..n).filter(|&y| y != k) {
            let bky = r.b[k * n + y];
            r.b[x * n + y] += bxk.signum() * (bxk * bky).max(0);
        }
    }
    for y in 0..n {
        r.b[k * n + y] = -r.b[k * n + y];
        r.b[y * n + k] = -r.b[y * n + k];
    }
    for x in r.m..n {
        for y in r.m..n {
            r.b[x * n + y] = 0;
        }
    }
}

pub fn ice_mutate(r: &IceQuiver, k: usize) -> IceQuiver {
    let mut out = r.clone();
    ice_mutate_in_place(&mut out, k);
    out
}

/// Mutable vertices with no arrow from a frozen vertex. Fails if some vertex
/// has frozen arrows in both directions.
pub fn green_vertices(r: &IceQuiver) -> Result<Vec<usize>> {
    let m = r.m;
    let mut green = Vec::new();
    for i in 0..m {
        let (mut into, mut out) = (false, false);
        for f in m..2 * m {
            let e = r.entry(f, i);
            into |= e > 0;
            out |= e < 0;
        }
        if into && out {
            return Err(Error::SignIncoherence(i));
        }
        if !into {
            green.push(i);
        }
    }
    Ok(green)
}

/// Whether `r` is the coframed quiver of `q` up to a permutation of the
/// mutable vertices: each frozen `c(i)` has a single arrow, to some `σ(i)`,
/// `σ` is a bijection, and `σ` carries `Q` onto the mutable part.
fn is_coframed(r: &IceQuiver, q: &IceQuiver) -> bool {
    let m = r.m;
    let mut sigma = vec![usize::MAX; m];
    let mut used = vec![false; m];
    for (i, s) in sigma.iter_mut().enumerate() {
        let f = r.frozen(i);
        let targets: Vec<usize> = (0..m).filter(|&x| r.entry(f, x) != 0).collect();
        match targets.as_slice() {
            [x] if r.entry(f, *x) == 1 && !used[*x] => {
                *s = *x;
                used[*x] = true;
            }
            _ => return false,
        }
    }
    (0..m).all(|i| (0..m).all(|j| r.entry(sigma[i], sigma[j]) == q.entry(i, j)))
}

/// Maximal green sequences of `q` of length at most `max_len`, counted by
/// length. Longer green sequences are abandoned without being counted.
pub fn enumerate_mgs(q: &Quiver, max_len: usize) -> Result<LengthDistribution> {
    let start = framed(q);
    let first = green_vertices(&start)?;
    let parts: Vec<Result<Vec<u64>>> = first
        .par_iter()
        .map(|&k| {
            let mut r = ice_mutate(&start, k);
            let mut counts = vec![0u64; max_len + 1];
            dfs(&mut r, &start, 1, max_len, &mut counts)?;
            Ok(counts)
        })
        .collect();
    let mut dist = LengthDistribution::new();
    if first.is_empty() {
        dist.add(0, BigUint::from(1u32));
    }
    for part in parts {
        for (len, n) in part?.into_iter().enumerate() {
            dist.add(len, BigUint::from(n));
        }
    }
    Ok(dist)
}

fn dfs(
    r: &mut IceQuiver,
    start: &IceQuiver,
    depth: usize,
    max_len: usize,
    counts: &mut [u64],
) -> Result<()> {
    let green = green_vertices(r)?;
    if green.is_empty() {
        if !is_coframed(r, start) {
            return Err(Error::invariant("terminal seed is not the coframed quiver"));
        }
        counts[depth] += 1;
        return Ok(());
    }
    if depth == max_len {
        return Ok(());
    }
    for k in green {
        ice_mutate_in_place(r, k);
        dfs(r, start, depth + 1, max_len, counts)?;
        ice_mutate_in_place(r, k);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: usize, arrows: &[(usize, usize)]) -> Quiver {
        Quiver::new(m, arrows.to_vec()).unwrap()
    }

    #[test]
    fn framed_examples() {
        let a1 = framed(&q(1, &[]));
        assert_eq!(a1.entry(0, 1), 1);
        assert_eq!(a1.entry(1, 0), -1);
        let a2 = framed(&q(2, &[(0, 1)]));
        assert_eq!((a2.entry(0, 1), a2.entry(0, 2), a2.entry(1, 3)), (1, 1, 1));
        assert_eq!(green_vertices(&a2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn mutation_is_involutive() {
        let r = framed(&q(3, &[(0, 1), (2, 1)]));
        for k in 0..3 {
            assert_eq!(ice_mutate(&ice_mutate(&r, k), k), r);
        }
        let kron = framed(&q(2, &[(0, 1), (0, 1)]));
        let s = ice_mutate(&ice_mutate(&kron, 0), 1);
        assert_eq!(ice_mutate(&ice_mutate(&s, 1), 1), s);
    }

    #[test]
    fn a1_turns_red() {
        let r = ice_mutate(&framed(&q(1, &[])), 0);
        assert_eq!(r.entry(1, 0), 1);
        assert!(green_vertices(&r).unwrap().is_empty());
    }

    #[test]
    fn a2_hand_mutations() {
        let r = ice_mutate(&framed(&q(2, &[(0, 1)])), 0);
        assert_eq!(green_vertices(&r).unwrap(), vec![1]);
        let r = ice_mutate(&r, 1);
        assert!(green_vertices(&r).unwrap().is_empty());
    }

    #[test]
    fn frozen_block_stays_zero() {
        let mut r = framed(&q(3, &[(0, 1), (1, 2)]));
        for k in [0, 1, 2, 0, 1, 0] {
            ice_mutate_in_place(&mut r, k);
            for x in 3..6 {
                for y in 3..6 {
                    assert_eq!(r.entry(x, y), 0);
                }
            }
        }
    }

    #[test]
    fn small_distributions() {
        let a1 = enumerate_mgs(&q(1, &[]), 5).unwrap();
        assert_eq!(a1, [(1, 1)].into_iter().collect());
        let a2 = enumerate_mgs(&q(2, &[(0, 1)]), 5).unwrap();
        assert_eq!(a2, [(2, 1), (3, 1)].into_iter().collect());
        let kron = enumerate_mgs(&q(2, &[(0, 1), (0, 1)]), 2).unwrap();
        assert_eq!(kron, [(2, 1)].into_iter().collect());
        // Raising the cap does not uncover longer Kronecker sequences.
        let kron10 = enumerate_mgs(&q(2, &[(0, 1), (0, 1)]), 10).unwrap();
        assert_eq!(kron10, kron);
    }
}
