//! Cartan and Coxeter matrices of a path algebra `A = KQ` and of the
//! restrictions `A_i = K(Q \ {i})`, embedded back into `Z^{Q_0}`.
//!
//! Conventions: `C[j][k]` is the number of paths from `k` to `j`, so column
//! `k` is `dim P_k` and row `i` is `dim I_i`. The Coxeter matrix is
//! `Φ = -Cᵗ C⁻¹` and sends `dim X` to `dim τX` for non-projective `X`.

use crate::error::Result;
use crate::matrix::{DimVector, IntMatrix};
use crate::quiver::Quiver;

/// Number of paths from `k` to `j` (trivial paths included), as `C[j][k]`.
pub fn cartan_matrix(q: &Quiver) -> IntMatrix {
    path_matrix(
        q.vertex_count(),
        q.arrows(),
        &q.topological_order().expect("valid quiver"),
    )
}

fn path_matrix(n: usize, arrows: &[(usize, usize)], order: &[usize]) -> IntMatrix {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(s, t) in arrows {
        out[s].push(t);
    }
    let mut c = IntMatrix::zeros(n);
    for k in 0..n {
        let mut count = vec![0i64; n];
        count[k] = 1;
        for &v in order {
            if count[v] == 0 {
                continue;
            }
            for &w in &out[v] {
                count[w] += count[v];
            }
        }
        for j in 0..n {
            c[(j, k)] = count[j];
        }
    }
    c
}

/// `Φ = -Cᵗ C⁻¹`.
pub fn coxeter_matrix(cartan: &IntMatrix) -> Result<IntMatrix> {
    Ok(-cartan.transpose().mul(&cartan.inverse()?))
}

/// The Cartan matrix `C̄_{A_i}` of `A_i` on `A` and its Coxeter matrix.
///
/// `C̄[j][k] = 1` iff there is a path from `k` to `j` once every arrow
/// touching `i` is erased. Row and column `i` are the unit vector `e_i`.
pub fn restricted_matrices(q: &Quiver, i: usize) -> Result<(IntMatrix, IntMatrix)> {
    let arrows: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .copied()
        .filter(|&(s, t)| s != i && t != i)
        .collect();
    let order = q.topological_order()?;
    let mut c = path_matrix(q.vertex_count(), &arrows, &order);
    for j in 0..q.vertex_count() {
        for k in 0..q.vertex_count() {
            c[(j, k)] = c[(j, k)].min(1);
        }
    }
    let phi = coxeter_matrix(&c)?;
    Ok((c, phi))
}

/// Matrix data of `A = KQ` precomputed once per quiver.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub cartan: IntMatrix,
    pub coxeter: IntMatrix,
    pub coxeter_inv: IntMatrix,
    /// `C̄_{A_i}` per vertex.
    pub restricted_cartan: Vec<IntMatrix>,
    /// `Φ̄_{A_i}` per vertex.
    pub restricted_coxeter: Vec<IntMatrix>,
    /// `Φ̄_{A_i}⁻¹` per vertex.
    pub restricted_coxeter_inv: Vec<IntMatrix>,
}

impl PathAlgebra {
    pub fn new(q: &Quiver) -> Result<Self> {
        let cartan = cartan_matrix(q);
        let coxeter = coxeter_matrix(&cartan)?;
        let coxeter_inv = coxeter.inverse()?;
        let n = q.vertex_count();
        let mut restricted_cartan = Vec::with_capacity(n);
        let mut restricted_coxeter = Vec::with_capacity(n);
        let mut restricted_coxeter_inv = Vec::with_capacity(n);
        for i in 0..n {
            let (c, phi) = restricted_matrices(q, i)?;
            restricted_coxeter_inv.push(phi.inverse()?);
            restricted_cartan.push(c);
            restricted_coxeter.push(phi);
        }
        Ok(PathAlgebra {
            cartan,
            coxeter,
            coxeter_inv,
            restricted_cartan,
            restricted_coxeter,
            restricted_coxeter_inv,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.cartan.size()
    }

    pub fn dim_projective(&self, k: usize) -> DimVector {
        self.cartan.column(k)
    }

    pub fn dim_injective(&self, k: usize) -> DimVector {
        self.cartan.row(k)
    }

    /// `k` if `u = dim P_k`.
    pub fn is_prj(&self, u: &DimVector) -> Option<usize> {
        (0..self.vertex_count()).find(|&k| self.column_eq(&self.cartan, k, u))
    }

    /// `k` if `u = dim I_k`.
    pub fn is_inj(&self, u: &DimVector) -> Option<usize> {
        let n = self.vertex_count();
        (0..n).find(|&k| (0..n).all(|j| self.cartan[(k, j)] == u[j]))
    }

    /// `k ≠ i` if `u` is the dimension vector of the `A_i`-projective `P_k`.
    /// Column `i` of `C̄_{A_i}` is `e_i`, which is not an `A_i`-module, so it
    /// never matches.
    pub fn is_prj_restricted(&self, i: usize, u: &DimVector) -> Option<usize> {
        (0..self.vertex_count())
            .filter(|&k| k != i)
            .find(|&k| self.column_eq(&self.restricted_cartan[i], k, u))
    }

    fn column_eq(&self, m: &IntMatrix, k: usize, u: &DimVector) -> bool {
        (0..self.vertex_count()).all(|j| m[(j, k)] == u[j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::preset;

    #[test]
    fn cartan_examples() {
        let a2 = Quiver::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(cartan_matrix(&a2).rows(), vec![vec![1, 0], vec![1, 1]]);
        let a1 = Quiver::new(1, vec![]).unwrap();
        assert_eq!(cartan_matrix(&a1).rows(), vec![vec![1]]);
        let kron = Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(cartan_matrix(&kron).rows(), vec![vec![1, 0], vec![2, 1]]);
    }

    #[test]
    fn coxeter_examples() {
        let a2 = Quiver::new(2, vec![(0, 1)]).unwrap();
        let phi = coxeter_matrix(&cartan_matrix(&a2)).unwrap();
        assert_eq!(phi.rows(), vec![vec![0, -1], vec![1, -1]]);
        assert_eq!(phi.pow(3), IntMatrix::identity(2));

        let d4 = preset("Dtilde4-paper").unwrap();
        let alg = PathAlgebra::new(&d4).unwrap();
        for i in 0..5 {
            assert_eq!(
                alg.coxeter.apply(&alg.dim_projective(i)),
                -alg.dim_injective(i)
            );
        }
    }

    #[test]
    fn restricted_dtilde4_at_0() {
        // Erasing 0 → 2 leaves 1 → 2 → {3, 4}: a D4 on vertices 1..4.
        let d4 = preset("Dtilde4-paper").unwrap();
        let (c, _) = restricted_matrices(&d4, 0).unwrap();
        assert_eq!(
            c.rows(),
            vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 0],
                vec![0, 1, 1, 1, 0],
                vec![0, 1, 1, 0, 1],
            ]
        );
    }

    #[test]
    fn restricted_a1() {
        let a1 = Quiver::new(1, vec![]).unwrap();
        let (c, phi) = restricted_matrices(&a1, 0).unwrap();
        assert_eq!(c.rows(), vec![vec![1]]);
        assert_eq!(phi.rows(), vec![vec![-1]]);
    }

    #[test]
    fn lookups() {
        let d4 = preset("Dtilde4-paper").unwrap();
        let alg = PathAlgebra::new(&d4).unwrap();
        assert_eq!(alg.is_prj(&alg.dim_projective(3)), Some(3));
        assert_eq!(alg.is_inj(&alg.dim_injective(0)), Some(0));
        let zero = DimVector::zeros(5);
        assert_eq!(alg.is_prj(&zero), None);
        assert_eq!(alg.is_inj(&zero), None);
        for i in 0..5 {
            assert_eq!(alg.is_prj_restricted(i, &zero), None);
            assert_eq!(alg.is_prj_restricted(i, &DimVector::unit(5, i)), None);
        }
    }
}
