//! Mixed-radix indexing of tensor-power bases.

use crate::field::Scalar;
use crate::linalg::{Accumulator, SparseVec};

/// Shape of `V_0 ⊗ ... ⊗ V_{r-1}`; the first factor is most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorShape { dims }
    }

    /// `h` copies of `dh` followed by `a` copies of `da`.
    pub fn blocks(dh: usize, h: usize, da: usize, a: usize) -> Self {
        let mut dims = vec![dh; h];
        dims.extend(std::iter::repeat(da).take(a));
        TensorShape { dims }
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter()
            .zip(&self.dims)
            .fold(0, |acc, (&i, &d)| {
                debug_assert!(i < d);
                acc * d + i
            })
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = x % d;
            x /= d;
        }
        out
    }

    /// `coeff * (f_0 ⊗ ... ⊗ f_{r-1})` added into `acc`.
    pub fn accumulate(&self, acc: &mut Accumulator, coeff: &Scalar, factors: &[SparseVec]) {
        debug_assert_eq!(factors.len(), self.dims.len());
        if coeff.is_zero() || factors.iter().any(|f| f.is_zero()) {
            return;
        }
        fn rec(
            shape: &TensorShape,
            acc: &mut Accumulator,
            factors: &[SparseVec],
            k: usize,
            index: usize,
            c: Scalar,
        ) {
            if k == factors.len() {
                acc.add(index, &c);
                return;
            }
            for (i, x) in factors[k].iter() {
                rec(shape, acc, factors, k + 1, index * shape.dims[k] + i, &c * x);
            }
        }
        rec(self, acc, factors, 0, 0, coeff.clone());
    }

    pub fn tensor(&self, coeff: &Scalar, factors: &[SparseVec]) -> SparseVec {
        let mut acc = Accumulator::new();
        self.accumulate(&mut acc, coeff, factors);
        acc.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn encode_decode_roundtrip(dims in proptest::collection::vec(1usize..5, 0..5), seed in 0usize..10_000) {
            let shape = TensorShape::new(dims);
            let x = seed % shape.size();
            prop_assert_eq!(shape.encode(&shape.decode(x)), x);
        }
    }
}
