//! Paracyclic and cyclic modules given by basis-wise operators, their
//! relation checkers, normalization, Connes' operator, and mixed complexes.

mod mixed;
mod natural;

pub use mixed::{
    cyclic_homology_mixed, hochschild_homology, normalized_mixed_complex, unnormalized_mixed_complex,
    HomologyMethod, HomologyReport, MixedComplex, Normalization,
};
pub use natural::AlgebraCyclic;

use crate::error::Violation;
use crate::field::FieldSpec;
use crate::linalg::{apply_linear, SparseMatrix, SparseVec};

/// A paracyclic module `M_n` with faces `δ_i: M_n → M_{n-1}`, degeneracies
/// `σ_i: M_n → M_{n+1}` and `τ: M_n → M_n`, each given on basis vectors.
pub trait Paracyclic: Sync {
    fn field(&self) -> FieldSpec;
    fn dim(&self, n: usize) -> usize;
    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec;
    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec;
    fn cyclic(&self, n: usize, x: usize) -> SparseVec;

    fn face_vec(&self, n: usize, i: usize, v: &SparseVec) -> SparseVec {
        apply_linear(v, |x| self.face(n, i, x))
    }

    fn degeneracy_vec(&self, n: usize, i: usize, v: &SparseVec) -> SparseVec {
        apply_linear(v, |x| self.degeneracy(n, i, x))
    }

    fn cyclic_vec(&self, n: usize, v: &SparseVec) -> SparseVec {
        apply_linear(v, |x| self.cyclic(n, x))
    }

    /// `b = Σ (-1)^i δ_i` on `M_n`, `n ≥ 1`.
    fn hochschild_b(&self, n: usize, x: usize) -> SparseVec {
        let f = self.field();
        let mut out = SparseVec::zero();
        for i in 0..=n {
            out = out.add_scaled(&sign(f, i), &self.face(n, i, x));
        }
        out
    }

    /// `λ = (-1)^n τ`.
    fn lambda_vec(&self, n: usize, v: &SparseVec) -> SparseVec {
        self.cyclic_vec(n, v).scaled(&sign(self.field(), n))
    }

    /// `N = Σ_{i=0}^{n} λ^i`.
    fn norm_vec(&self, n: usize, v: &SparseVec) -> SparseVec {
        let mut acc = v.clone();
        let mut cur = v.clone();
        for _ in 0..n {
            cur = self.lambda_vec(n, &cur);
            acc = acc.add(&cur);
        }
        acc
    }

    /// The extra degeneracy `s = τ σ_n: M_n → M_{n+1}`.
    fn extra_degeneracy_vec(&self, n: usize, v: &SparseVec) -> SparseVec {
        self.cyclic_vec(n + 1, &self.degeneracy_vec(n, n, v))
    }

    /// Connes' operator: `s N` when `normalized`, `(1 - λ) s N` otherwise.
    fn connes_b(&self, n: usize, x: usize, normalized: bool) -> SparseVec {
        let f = self.field();
        let sn = self.extra_degeneracy_vec(n, &self.norm_vec(n, &SparseVec::unit(x, f)));
        if normalized {
            sn
        } else {
            sn.sub(&self.lambda_vec(n + 1, &sn))
        }
    }
}

pub(crate) fn sign(f: FieldSpec, k: usize) -> crate::field::Scalar {
    if k % 2 == 0 {
        f.one()
    } else {
        -f.one()
    }
}

/// The matrix of a basis-wise linear map from a space of dimension `cols`.
pub fn operator_matrix(rows: usize, cols: usize, f: impl Fn(usize) -> SparseVec + Sync + Send) -> SparseMatrix {
    let columns = crate::par::map_range(cols, f);
    SparseMatrix::from_columns(rows, &columns)
}

fn iterate(m: &dyn Paracyclic, n: usize, times: usize, v: SparseVec) -> SparseVec {
    (0..times).fold(v, |acc, _| m.cyclic_vec(n, &acc))
}

/// Names a relation family, for reports and for [`paracyclic_violations`].
pub const RELATIONS: [&str; 7] = [
    "δ_iδ_j=δ_{j-1}δ_i",
    "σ_iσ_j=σ_{j+1}σ_i",
    "δ_iσ_j simplicial identities",
    "δ_iτ=τδ_{i-1}",
    "δ_0τ=δ_n",
    "σ_iτ=τσ_{i-1}",
    "σ_0τ=τ²σ_n",
];

/// Checks the relation family `which` (an index into [`RELATIONS`]) in degree `n`.
fn check_family(m: &dyn Paracyclic, which: usize, n: usize) -> Option<Violation> {
    let f = m.field();
    let dim = m.dim(n);
    let fail = |x: usize, detail: String| {
        Some(Violation::new(
            RELATIONS[which],
            format!("degree {n}, {detail}, basis {x}"),
        ))
    };
    crate::par::find_first(dim, |x| {
        let e = SparseVec::unit(x, f);
        match which {
            0 if n >= 2 => {
                for j in 0..=n {
                    let dj = m.face(n, j, x);
                    for i in 0..j {
                        let lhs = m.face_vec(n - 1, i, &dj);
                        let rhs = m.face_vec(n - 1, j - 1, &m.face(n, i, x));
                        if lhs != rhs {
                            return fail(x, format!("i={i}, j={j}"));
                        }
                    }
                }
                None
            }
            1 => {
                for j in 0..=n {
                    let sj = m.degeneracy(n, j, x);
                    for i in 0..=j {
                        let lhs = m.degeneracy_vec(n + 1, i, &sj);
                        let rhs = m.degeneracy_vec(n + 1, j + 1, &m.degeneracy(n, i, x));
                        if lhs != rhs {
                            return fail(x, format!("i={i}, j={j}"));
                        }
                    }
                }
                None
            }
            2 => {
                for j in 0..=n {
                    let sj = m.degeneracy(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = m.face_vec(n + 1, i, &sj);
                        let rhs = if i < j {
                            m.degeneracy_vec(n - 1, j - 1, &m.face(n, i, x))
                        } else if i == j || i == j + 1 {
                            e.clone()
                        } else {
                            m.degeneracy_vec(n - 1, j, &m.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            return fail(x, format!("i={i}, j={j}"));
                        }
                    }
                }
                None
            }
            3 if n >= 1 => {
                let t = m.cyclic(n, x);
                for i in 1..=n {
                    let lhs = m.face_vec(n, i, &t);
                    let rhs = m.cyclic_vec(n - 1, &m.face(n, i - 1, x));
                    if lhs != rhs {
                        return fail(x, format!("i={i}"));
                    }
                }
                None
            }
            4 if n >= 1 => {
                let lhs = m.face_vec(n, 0, &m.cyclic(n, x));
                if lhs != m.face(n, n, x) {
                    fail(x, String::new())
                } else {
                    None
                }
            }
            5 => {
                let t = m.cyclic(n, x);
                for i in 1..=n {
                    let lhs = m.degeneracy_vec(n, i, &t);
                    let rhs = m.cyclic_vec(n + 1, &m.degeneracy(n, i - 1, x));
                    if lhs != rhs {
                        return fail(x, format!("i={i}"));
                    }
                }
                None
            }
            6 => {
                let lhs = m.degeneracy_vec(n, 0, &m.cyclic(n, x));
                let rhs = iterate(m, n + 1, 2, m.degeneracy(n, n, x));
                if lhs != rhs {
                    fail(x, String::new())
                } else {
                    None
                }
            }
            _ => None,
        }
    })
}

/// Every simplicial and paracyclic relation on every basis vector of degree
/// `≤ max_degree`, degree by degree; the first failure is reported.
pub fn check_paracyclic(m: &dyn Paracyclic, max_degree: usize) -> Result<(), Violation> {
    for n in 0..=max_degree {
        for which in 0..RELATIONS.len() {
            if let Some(v) = check_family(m, which, n) {
                return Err(v);
            }
        }
    }
    Ok(())
}

/// One violation per failing relation family, in [`RELATIONS`] order.
pub fn paracyclic_violations(m: &dyn Paracyclic, max_degree: usize) -> Vec<Violation> {
    (0..RELATIONS.len())
        .filter_map(|which| (0..=max_degree).find_map(|n| check_family(m, which, n)))
        .collect()
}

/// `τ^{n+1} = id` in every degree `≤ max_degree`.
pub fn check_cyclicity(m: &dyn Paracyclic, max_degree: usize) -> Result<(), Violation> {
    let f = m.field();
    for n in 0..=max_degree {
        let hit = crate::par::find_first(m.dim(n), |x| {
            let e = SparseVec::unit(x, f);
            (iterate(m, n, n + 1, e.clone()) != e)
                .then(|| Violation::new("τ^{n+1}=id", format!("degree {n}, basis {x}")))
        });
        if let Some(v) = hit {
            return Err(v);
        }
    }
    Ok(())
}

/// `check_paracyclic` followed by `check_cyclicity`.
pub fn check_cyclic(m: &dyn Paracyclic, max_degree: usize) -> Result<(), Violation> {
    check_paracyclic(m, max_degree)?;
    check_cyclicity(m, max_degree)
}

/// A paracyclic module with `τ` scaled by a constant; used to exercise the checkers.
pub struct ScaledCyclic<'a, M: Paracyclic> {
    pub inner: &'a M,
    pub factor: crate::field::Scalar,
}

impl<M: Paracyclic> Paracyclic for ScaledCyclic<'_, M> {
    fn field(&self) -> FieldSpec {
        self.inner.field()
    }
    fn dim(&self, n: usize) -> usize {
        self.inner.dim(n)
    }
    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.inner.face(n, i, x)
    }
    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.inner.degeneracy(n, i, x)
    }
    fn cyclic(&self, n: usize, x: usize) -> SparseVec {
        self.inner.cyclic(n, x).scaled(&self.factor)
    }
}
