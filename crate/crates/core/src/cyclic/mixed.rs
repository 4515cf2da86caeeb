use serde::Serialize;

use crate::error::{check_cap, Error, Result, Violation};
use crate::field::FieldSpec;
use crate::linalg::{induced_map_fn, mat_rank, quotient_space, QuotientSpace, SparseMatrix, SparseVec, Subspace};

use super::{operator_matrix, Paracyclic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomologyMethod {
    Hochschild,
    CyclicBicomplex,
    Hopf,
}

/// Homology dimensions over an explicit degree range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub method: HomologyMethod,
    pub degrees: Vec<usize>,
    pub dims: Vec<usize>,
}

/// A graded space with `b: C_n → C_{n-1}` and `B: C_n → C_{n+1}` through degree `top`.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    field: FieldSpec,
    dims: Vec<usize>,
    b: Vec<SparseMatrix>,
    big_b: Vec<SparseMatrix>,
}

impl MixedComplex {
    /// `b[n]` maps degree `n` to `n - 1` (`b[0]` has no rows); `big_b[n]` maps `n` to `n + 1`
    /// for `n < top`.
    pub fn new(
        field: FieldSpec,
        dims: Vec<usize>,
        b: Vec<SparseMatrix>,
        big_b: Vec<SparseMatrix>,
    ) -> Result<Self> {
        let top = dims.len().checked_sub(1).ok_or_else(|| Error::Input("empty mixed complex".into()))?;
        if b.len() != top + 1 || big_b.len() != top {
            return Err(Error::DimensionMismatch("mixed complex operator count".into()));
        }
        for n in 0..=top {
            let rows = if n == 0 { 0 } else { dims[n - 1] };
            if b[n].rows() != rows || b[n].cols() != dims[n] {
                return Err(Error::DimensionMismatch(format!("b in degree {n}")));
            }
            if n < top && (big_b[n].rows() != dims[n + 1] || big_b[n].cols() != dims[n]) {
                return Err(Error::DimensionMismatch(format!("B in degree {n}")));
            }
        }
        Ok(MixedComplex {
            field,
            dims,
            b,
            big_b,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn b(&self, n: usize) -> &SparseMatrix {
        &self.b[n]
    }

    pub fn big_b(&self, n: usize) -> &SparseMatrix {
        &self.big_b[n]
    }

    /// `b² = 0`, `B² = 0` and `bB + Bb = 0` on every basis vector through `top`.
    pub fn check(&self) -> std::result::Result<(), Violation> {
        let top = self.top();
        let mul = |x: &SparseMatrix, y: &SparseMatrix| x.mul(y).expect("composable");
        for n in 2..=top {
            if !mul(&self.b[n - 1], &self.b[n]).is_zero() {
                return Err(Violation::new("b²=0", format!("degree {n}")));
            }
        }
        for n in 0..top.saturating_sub(1) {
            if !mul(&self.big_b[n + 1], &self.big_b[n]).is_zero() {
                return Err(Violation::new("B²=0", format!("degree {n}")));
            }
        }
        for n in 0..top {
            let mut sum = mul(&self.b[n + 1], &self.big_b[n]);
            if n >= 1 {
                sum = sum.add(&mul(&self.big_b[n - 1], &self.b[n])).expect("same shape");
            }
            if !sum.is_zero() {
                return Err(Violation::new("bB+Bb=0", format!("degree {n}")));
            }
        }
        Ok(())
    }

    /// `dim ker b_n − rank b_{n+1}` for `n ≤ max_degree < top`.
    pub fn hochschild(&self, max_degree: usize) -> Result<HomologyReport> {
        if max_degree >= self.top() {
            return Err(Error::Input(format!(
                "Hochschild homology through {max_degree} needs chains through {}",
                max_degree + 1
            )));
        }
        let ranks = crate::par::map_slice(&self.b[..=max_degree + 1], mat_rank);
        let dims = (0..=max_degree)
            .map(|n| self.dims[n] - ranks[n] - ranks[n + 1])
            .collect();
        Ok(HomologyReport {
            method: HomologyMethod::Hochschild,
            degrees: (0..=max_degree).collect(),
            dims,
        })
    }

    fn cc_dims(&self, n: usize) -> Vec<usize> {
        (0..=n / 2).map(|k| self.dims[n - 2 * k]).collect()
    }

    /// `b + B: CC_n → CC_{n-1}` on `CC_n = ⊕_k C_{n-2k}` (slot `k` holds `C_{n-2k}`).
    fn total_differential(&self, n: usize) -> SparseMatrix {
        let src = self.cc_dims(n);
        if n == 0 {
            return SparseMatrix::zero(0, src[0]);
        }
        let dst = self.cc_dims(n - 1);
        let offset = |sizes: &[usize], k: usize| sizes[..k].iter().sum::<usize>();
        let rows: usize = dst.iter().sum();
        let cols: usize = src.iter().sum();
        let mut triplets: Vec<(usize, usize, crate::field::Scalar)> = Vec::new();
        for k in 0..src.len() {
            let deg = n - 2 * k;
            let c0 = offset(&src, k);
            if deg >= 1 {
                let r0 = offset(&dst, k);
                triplets.extend(self.b[deg].entries().into_iter().map(|(r, c, v)| (r0 + r, c0 + c, v)));
            }
            if k >= 1 {
                let r0 = offset(&dst, k - 1);
                triplets.extend(self.big_b[deg].entries().into_iter().map(|(r, c, v)| (r0 + r, c0 + c, v)));
            }
        }
        SparseMatrix::from_triplets(rows, cols, triplets).expect("blocks are disjoint")
    }

    /// `HC_n` from the truncated `(b, B)`-bicomplex, `n ≤ max_degree < top`.
    pub fn cyclic(&self, max_degree: usize) -> Result<HomologyReport> {
        if max_degree >= self.top() {
            return Err(Error::Input(format!(
                "cyclic homology through {max_degree} needs chains through {}",
                max_degree + 1
            )));
        }
        let ranks = crate::par::map_range(max_degree + 2, |n| mat_rank(&self.total_differential(n)));
        let dims = (0..=max_degree)
            .map(|n| self.cc_dims(n).iter().sum::<usize>() - ranks[n] - ranks[n + 1])
            .collect();
        Ok(HomologyReport {
            method: HomologyMethod::CyclicBicomplex,
            degrees: (0..=max_degree).collect(),
            dims,
        })
    }
}

/// The degreewise quotient by the span of all degeneracy images.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub quotients: Vec<QuotientSpace>,
}

impl Normalization {
    pub fn of(m: &dyn Paracyclic, top: usize, cap: usize) -> Result<Self> {
        let mut quotients = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let dim = m.dim(n);
            check_cap(dim, cap, || format!("chain space in degree {n}"))?;
            let degenerate: Vec<SparseVec> = if n == 0 {
                Vec::new()
            } else {
                let below = m.dim(n - 1);
                crate::par::map_range(below * n, |k| m.degeneracy(n - 1, k / below, k % below))
            };
            quotients.push(quotient_space(dim, Subspace::span(dim, &degenerate))?);
        }
        Ok(Normalization { quotients })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.quotients.iter().map(|q| q.dim()).collect()
    }

    /// The map induced on quotients by `f: M_src → M_dst`.
    pub fn induce(
        &self,
        src: usize,
        dst: usize,
        what: &str,
        f: impl Fn(usize) -> SparseVec,
    ) -> Result<SparseMatrix> {
        induced_map_fn(&self.quotients[src], &self.quotients[dst], f).map_err(|e| {
            Error::NotWellDefined(format!(
                "{what} on normalized degree {src} (denominator vector {})",
                e.denominator_row
            ))
        })
    }
}

/// `(N(M), b, sN)` through degree `top`, with the normalization used.
pub fn normalized_mixed_complex(
    m: &dyn Paracyclic,
    top: usize,
    cap: usize,
) -> Result<(MixedComplex, Normalization)> {
    let norm = Normalization::of(m, top, cap)?;
    let dims = norm.dims();
    let mut b = vec![SparseMatrix::zero(0, dims[0])];
    for n in 1..=top {
        b.push(norm.induce(n, n - 1, "b", |x| m.hochschild_b(n, x))?);
    }
    let mut big_b = Vec::with_capacity(top);
    for n in 0..top {
        big_b.push(norm.induce(n, n + 1, "B", |x| m.connes_b(n, x, true))?);
    }
    Ok((MixedComplex::new(m.field(), dims, b, big_b)?, norm))
}

/// `(M, b, (1 − λ)sN)` through degree `top`, without normalization.
pub fn unnormalized_mixed_complex(m: &dyn Paracyclic, top: usize, cap: usize) -> Result<MixedComplex> {
    let dims: Vec<usize> = (0..=top).map(|n| m.dim(n)).collect();
    for (n, &d) in dims.iter().enumerate() {
        check_cap(d, cap, || format!("chain space in degree {n}"))?;
    }
    let mut b = vec![SparseMatrix::zero(0, dims[0])];
    for n in 1..=top {
        b.push(operator_matrix(dims[n - 1], dims[n], |x| m.hochschild_b(n, x)));
    }
    let big_b = (0..top)
        .map(|n| operator_matrix(dims[n + 1], dims[n], |x| m.connes_b(n, x, false)))
        .collect();
    MixedComplex::new(m.field(), dims, b, big_b)
}

/// Hochschild homology on the normalized complex, degrees `0..=max_degree`.
pub fn hochschild_homology(m: &dyn Paracyclic, max_degree: usize, cap: usize) -> Result<HomologyReport> {
    let norm = Normalization::of(m, max_degree + 1, cap)?;
    let dims = norm.dims();
    let mut b = vec![SparseMatrix::zero(0, dims[0])];
    for n in 1..=max_degree + 1 {
        b.push(norm.induce(n, n - 1, "b", |x| m.hochschild_b(n, x))?);
    }
    let big_b = (0..=max_degree)
        .map(|n| SparseMatrix::zero(dims[n + 1], dims[n]))
        .collect();
    MixedComplex::new(m.field(), dims, b, big_b)?.hochschild(max_degree)
}

pub fn cyclic_homology_mixed(mc: &MixedComplex, max_degree: usize) -> Result<HomologyReport> {
    mc.cyclic(max_degree)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::{check_cyclic, check_paracyclic, paracyclic_violations, AlgebraCyclic, ScaledCyclic};
    use super::*;
    use crate::algebra::{dual_numbers, ground_algebra, group_algebra, matrix_algebra, FiniteGroup};
    use crate::linalg::DEFAULT_DIM_CAP;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn natural(a: crate::algebra::FinDimAlgebra) -> AlgebraCyclic {
        AlgebraCyclic::new(Arc::new(a))
    }

    #[test]
    fn ground_field_operators_are_trivial() {
        let m = natural(ground_algebra(Q));
        for n in 0..4 {
            assert_eq!(m.dim(n), 1);
            assert_eq!(m.cyclic(n, 0), SparseVec::unit(0, Q));
            assert_eq!(m.degeneracy(n, 0, 0), SparseVec::unit(0, Q));
        }
    }

    #[test]
    fn group_algebra_wraparound_face_and_cyclicity() {
        let m = natural(group_algebra(Q, &FiniteGroup::cyclic(2)));
        // δ_1(g ⊗ g) = g·g = e
        assert_eq!(m.face(1, 1, 3), SparseVec::unit(0, Q));
        assert_eq!(check_cyclic(&m, 3), Ok(()));
        assert_eq!(m.dim(2), 8);
    }

    #[test]
    fn scaled_tau_breaks_the_quadratic_relation() {
        let m = natural(group_algebra(Q, &FiniteGroup::cyclic(2)));
        let bad = ScaledCyclic {
            inner: &m,
            factor: Q.from_i64(2),
        };
        let names: Vec<String> = paracyclic_violations(&bad, 2).into_iter().map(|v| v.axiom).collect();
        assert!(names.iter().any(|n| n == "σ_0τ=τ²σ_n"), "{names:?}");
        assert_eq!(check_paracyclic(&bad, 2).unwrap_err().axiom, "σ_0τ=τ²σ_n");
    }

    #[test]
    fn normalized_dimensions() {
        let dn = natural(dual_numbers(Q));
        assert_eq!(Normalization::of(&dn, 3, DEFAULT_DIM_CAP).unwrap().dims(), vec![2, 2, 2, 2]);
        let k = natural(ground_algebra(Q));
        assert_eq!(Normalization::of(&k, 3, DEFAULT_DIM_CAP).unwrap().dims(), vec![1, 0, 0, 0]);
        let c2 = natural(group_algebra(Q, &FiniteGroup::cyclic(2)));
        assert_eq!(Normalization::of(&c2, 3, DEFAULT_DIM_CAP).unwrap().dims(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn connes_operator_in_degree_zero() {
        // B(g) = 1 ⊗ g + g ⊗ 1 before normalization; only 1 ⊗ g survives modulo degeneracies
        let c2 = natural(group_algebra(Q, &FiniteGroup::cyclic(2)));
        let full = c2.connes_b(0, 1, false);
        let e_g = 1; // (e, g)
        let g_e = 2; // (g, e)
        assert_eq!(full, SparseVec::from_pairs([(e_g, Q.one()), (g_e, Q.one())]));
        let (mc, norm) = normalized_mixed_complex(&c2, 2, DEFAULT_DIM_CAP).unwrap();
        let lifted = norm.quotients[1].lift(&mc.big_b(0).mul_vec(&SparseVec::unit(1, Q)));
        assert!(norm.quotients[1].denominator().contains(&lifted.sub(&full)));
        let k = natural(ground_algebra(Q));
        let (mk, _) = normalized_mixed_complex(&k, 3, DEFAULT_DIM_CAP).unwrap();
        assert!((0..3).all(|n| mk.big_b(n).is_zero()));
    }

    #[test]
    fn mixed_identities_on_algebras() {
        for a in [
            group_algebra(Q, &FiniteGroup::cyclic(2)),
            dual_numbers(Q),
            matrix_algebra(Q, 2),
            group_algebra(Q, &FiniteGroup::symmetric3()),
        ] {
            let m = natural(a);
            let (mc, _) = normalized_mixed_complex(&m, 3, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(mc.check(), Ok(()));
            let raw = unnormalized_mixed_complex(&m, 3, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(raw.check(), Ok(()));
        }
    }

    #[test]
    fn hochschild_baselines() {
        let hh = |a| hochschild_homology(&natural(a), 3, DEFAULT_DIM_CAP).unwrap().dims;
        assert_eq!(hh(ground_algebra(Q)), vec![1, 0, 0, 0]);
        assert_eq!(hh(group_algebra(Q, &FiniteGroup::cyclic(2)))[0], 2);
        assert_eq!(hh(matrix_algebra(Q, 2))[0], 1);
    }

    #[test]
    fn hh0_is_the_commutator_quotient() {
        // oracle: dim A/[A,A] from the span of all commutators of basis elements
        let a = matrix_algebra(Q, 2);
        let d = a.dim();
        let comms: Vec<SparseVec> = (0..d * d)
            .map(|k| a.mul_basis(k / d, k % d).sub(a.mul_basis(k % d, k / d)))
            .collect();
        let span = Subspace::span(d, &comms);
        assert_eq!(d - span.dim(), 1);
        let hh = hochschild_homology(&natural(a), 1, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(hh.dims[0], d - span.dim());
    }

    #[test]
    fn cyclic_baselines() {
        let hc = |a| {
            let (mc, _) = normalized_mixed_complex(&natural(a), 4, DEFAULT_DIM_CAP).unwrap();
            mc.cyclic(3).unwrap().dims
        };
        assert_eq!(hc(ground_algebra(Q)), vec![1, 0, 1, 0]);
        let c2 = hc(group_algebra(Q, &FiniteGroup::cyclic(2)));
        // Wedderburn: Q[C2] ≅ Q × Q, so HC is twice HC(Q)
        let k = hc(ground_algebra(Q));
        assert_eq!(c2, k.iter().map(|x| 2 * x).collect::<Vec<_>>());
        assert_eq!(&hc(matrix_algebra(Q, 2))[..3], &[1, 0, 1]);
    }

    #[test]
    fn unnormalized_and_normalized_agree() {
        let m = natural(dual_numbers(Q));
        let (mc, _) = normalized_mixed_complex(&m, 3, DEFAULT_DIM_CAP).unwrap();
        let raw = unnormalized_mixed_complex(&m, 3, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(mc.cyclic(2).unwrap().dims, raw.cyclic(2).unwrap().dims);
        assert_eq!(mc.hochschild(2).unwrap().dims, raw.hochschild(2).unwrap().dims);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let m = natural(matrix_algebra(Q, 2));
        assert!(matches!(
            Normalization::of(&m, 3, 100),
            Err(Error::DimensionCap { .. })
        ));
    }
}
