use std::sync::Arc;

use crate::algebra::FinDimAlgebra;
use crate::field::FieldSpec;
use crate::linalg::{Accumulator, SparseVec};
use crate::tensor::TensorShape;

use super::Paracyclic;

/// The cyclic module `A^♮` with `A^♮_n = A^{⊗(n+1)}`.
#[derive(Clone, Debug)]
pub struct AlgebraCyclic {
    algebra: Arc<FinDimAlgebra>,
}

impl AlgebraCyclic {
    pub fn new(algebra: Arc<FinDimAlgebra>) -> Self {
        AlgebraCyclic { algebra }
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn shape(&self, n: usize) -> TensorShape {
        TensorShape::new(vec![self.algebra.dim(); n + 1])
    }

    fn build(&self, n_out: usize, factors: Vec<SparseVec>) -> SparseVec {
        let mut acc = Accumulator::new();
        self.shape(n_out)
            .accumulate(&mut acc, &self.field().one(), &factors);
        acc.finish()
    }
}

impl Paracyclic for AlgebraCyclic {
    fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    fn dim(&self, n: usize) -> usize {
        self.algebra.dim().pow(n as u32 + 1)
    }

    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        let idx = self.shape(n).decode(x);
        let f = self.field();
        let mut factors: Vec<SparseVec> = Vec::with_capacity(n);
        if i < n {
            for (k, &a) in idx.iter().enumerate() {
                if k == i {
                    factors.push(self.algebra.mul_basis(a, idx[k + 1]).clone());
                } else if k != i + 1 {
                    factors.push(SparseVec::unit(a, f));
                }
            }
        } else {
            factors.push(self.algebra.mul_basis(idx[n], idx[0]).clone());
            factors.extend(idx[1..n].iter().map(|&a| SparseVec::unit(a, f)));
        }
        self.build(n - 1, factors)
    }

    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec {
        let idx = self.shape(n).decode(x);
        let f = self.field();
        let mut factors: Vec<SparseVec> = idx.iter().map(|&a| SparseVec::unit(a, f)).collect();
        factors.insert(i + 1, self.algebra.unit().clone());
        self.build(n + 1, factors)
    }

    fn cyclic(&self, n: usize, x: usize) -> SparseVec {
        let shape = self.shape(n);
        let mut idx = shape.decode(x);
        idx.rotate_right(1);
        SparseVec::unit(shape.encode(&idx), self.field())
    }
}
