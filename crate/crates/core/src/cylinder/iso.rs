use serde::Serialize;

use super::HopfCrossedCylinder;
use crate::crossed::CrossedProductAlgebra;
use crate::cyclic::{operator_matrix, AlgebraCyclic, Paracyclic};
use crate::linalg::{Accumulator, SparseMatrix, SparseVec};
use crate::tensor::TensorShape;

fn crossed_shape(cp: &CrossedProductAlgebra, n: usize) -> TensorShape {
    TensorShape::new(vec![cp.product.dim(); n + 1])
}

/// `Φ_n: (A #_σ H)^{⊗(n+1)} → M_{n,n}`,
/// `(g_0^{(2)}, g_1^{(3)}, …, g_n^{(n+2)} | S(g_0^{(1)} g_1^{(2)}⋯g_n^{(n+1)})·a_0, …, S(g_n^{(1)})·a_n)`.
pub fn phi_matrix(cyl: &HopfCrossedCylinder, cp: &CrossedProductAlgebra, n: usize) -> SparseMatrix {
    let hopf = cyl.hopf();
    let act = cyl.action();
    let f = cyl.field();
    let dh = cyl.dim_h();
    let src = crossed_shape(cp, n);
    let dst = cyl.shape(n, n);
    operator_matrix(dst.size(), src.size(), |x| {
        let idx = src.decode(x);
        let (a, g): (Vec<usize>, Vec<usize>) = idx.iter().map(|y| (y / dh, y % dh)).unzip();
        let mut terms: Vec<(crate::field::Scalar, Vec<Vec<usize>>)> = vec![(f.one(), Vec::new())];
        for (k, &gk) in g.iter().enumerate() {
            let legs = hopf.legs(gk, k + 2);
            let mut next = Vec::new();
            for (c, prefix) in &terms {
                for (y, l) in legs.iter() {
                    let mut pr = prefix.clone();
                    pr.push(l.clone());
                    next.push((c * y, pr));
                }
            }
            terms = next;
        }
        let mut acc = Accumulator::new();
        for (c, legs) in terms {
            let mut factors: Vec<SparseVec> = (0..=n).map(|k| SparseVec::unit(legs[k][k + 1], f)).collect();
            for i in 0..=n {
                // a_i gets S(g_i^{(1)} g_{i+1}^{(2)} ⋯ g_n^{(n+1-i)})
                let prod = hopf.product_of((i..=n).map(|k| legs[k][k - i]));
                factors.push(act.apply(&hopf.antipode(&prod), &SparseVec::unit(a[i], f)));
            }
            dst.accumulate(&mut acc, &c, &factors);
        }
        acc.finish()
    })
}

/// `Ψ_n: M_{n,n} → (A #_σ H)^{⊗(n+1)}`,
/// `((g_0^{(1)}⋯g_n^{(1)})·a_0 ⊗ g_0^{(2)}, (g_1^{(2)}⋯g_n^{(2)})·a_1 ⊗ g_1^{(3)}, …)`.
pub fn psi_matrix(cyl: &HopfCrossedCylinder, cp: &CrossedProductAlgebra, n: usize) -> SparseMatrix {
    let hopf = cyl.hopf();
    let act = cyl.action();
    let f = cyl.field();
    let dh = cyl.dim_h();
    let src = cyl.shape(n, n);
    let dst = crossed_shape(cp, n);
    operator_matrix(dst.size(), src.size(), |x| {
        let (g, a) = cyl.decode(n, n, x);
        let mut terms: Vec<(crate::field::Scalar, Vec<Vec<usize>>)> = vec![(f.one(), Vec::new())];
        for (k, &gk) in g.iter().enumerate() {
            let legs = hopf.legs(gk, k + 2);
            let mut next = Vec::new();
            for (c, prefix) in &terms {
                for (y, l) in legs.iter() {
                    let mut pr = prefix.clone();
                    pr.push(l.clone());
                    next.push((c * y, pr));
                }
            }
            terms = next;
        }
        let mut acc = Accumulator::new();
        for (c, legs) in terms {
            let factors: Vec<SparseVec> = (0..=n)
                .map(|i| {
                    let prod = hopf.product_of((i..=n).map(|k| legs[k][i]));
                    let moved = act.apply(&prod, &SparseVec::unit(a[i], f));
                    let h = legs[i][i + 1];
                    moved.map_indices(|ai| ai * dh + h)
                })
                .collect();
            dst.accumulate(&mut acc, &c, &factors);
        }
        acc.finish()
    })
}

/// Outcome of the `Φ`/`Ψ` comparison in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiPsiCheck {
    pub degree: usize,
    pub inverse: bool,
    pub cyclic: bool,
    pub faces: bool,
    pub degeneracies: bool,
}

impl PhiPsiCheck {
    pub fn passed(&self) -> bool {
        self.inverse && self.cyclic && self.faces && self.degeneracies
    }

    /// Compares `Φ`, `Ψ` and every cyclic operator in degree `n`.
    pub fn run(cyl: &HopfCrossedCylinder, cp: &CrossedProductAlgebra, n: usize) -> PhiPsiCheck {
        let phi = phi_matrix(cyl, cp, n);
        let psi = psi_matrix(cyl, cp, n);
        let inverse = phi.mul(&psi).map_or(false, |m| m.is_identity())
            && psi.mul(&phi).map_or(false, |m| m.is_identity());
        let nat = AlgebraCyclic::new(std::sync::Arc::new(cp.product.clone()));
        let diag = cyl.diagonal();
        let commutes = |a: SparseMatrix, b: SparseMatrix| a == b;
        let cyclic = commutes(
            operator_matrix(diag.dim(n), diag.dim(n), |x| diag.cyclic(n, x)).mul(&phi).unwrap(),
            phi.mul(&operator_matrix(nat.dim(n), nat.dim(n), |x| nat.cyclic(n, x))).unwrap(),
        );
        let faces = n == 0 || {
            let below = phi_matrix(cyl, cp, n - 1);
            (0..=n).all(|i| {
                commutes(
                    operator_matrix(diag.dim(n - 1), diag.dim(n), |x| diag.face(n, i, x)).mul(&phi).unwrap(),
                    below.mul(&operator_matrix(nat.dim(n - 1), nat.dim(n), |x| nat.face(n, i, x))).unwrap(),
                )
            })
        };
        let above = phi_matrix(cyl, cp, n + 1);
        let degeneracies = (0..=n).all(|i| {
            commutes(
                operator_matrix(diag.dim(n + 1), diag.dim(n), |x| diag.degeneracy(n, i, x)).mul(&phi).unwrap(),
                above.mul(&operator_matrix(nat.dim(n + 1), nat.dim(n), |x| nat.degeneracy(n, i, x))).unwrap(),
            )
        });
        PhiPsiCheck {
            degree: n,
            inverse,
            cyclic,
            faces,
            degeneracies,
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::fixtures::*;
    use super::*;
    use crate::algebra::matrix_algebra;
    use crate::crossed::{build_crossed_product, ActionMap, Cocycle};
    use crate::hopf::trivial_hopf;

    fn crossed(c: &HopfCrossedCylinder) -> CrossedProductAlgebra {
        build_crossed_product(c.action(), c.cocycle()).unwrap()
    }

    #[test]
    fn trivial_hopf_gives_identity() {
        let h = Arc::new(trivial_hopf(Q));
        let a = Arc::new(matrix_algebra(Q, 2));
        let c = HopfCrossedCylinder::new(ActionMap::trivial(Arc::clone(&h), a), Cocycle::trivial(h)).unwrap();
        let cp = crossed(&c);
        for n in 0..3 {
            assert!(phi_matrix(&c, &cp, n).is_identity());
        }
    }

    #[test]
    fn phi_and_psi_are_inverse_cyclic_maps() {
        for (name, c) in all() {
            let cp = crossed(&c);
            for n in 0..=2 {
                let r = PhiPsiCheck::run(&c, &cp, n);
                assert!(r.passed(), "{name}: {r:?}");
            }
        }
    }
}
