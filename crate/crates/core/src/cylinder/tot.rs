use std::collections::BTreeMap;

use super::HopfCrossedCylinder;
use crate::cyclic::{sign, MixedComplex, Normalization, Paracyclic};
use crate::error::{check_cap, Error, Result, Violation};
use crate::field::Scalar;
use crate::linalg::{apply_linear, induced_map_fn, quotient_space, QuotientSpace, SparseMatrix, SparseVec, Subspace};

/// `N(M)_{p,q} = M_{p,q} / (im s + im σ)` for `p + q ≤ top`.
#[derive(Clone, Debug)]
pub struct BiNormalization {
    top: usize,
    quotients: BTreeMap<(usize, usize), QuotientSpace>,
}

impl BiNormalization {
    pub fn new(cyl: &HopfCrossedCylinder, top: usize, cap: usize) -> Result<Self> {
        let keys: Vec<(usize, usize)> = (0..=top).flat_map(|n| (0..=n).map(move |p| (p, n - p))).collect();
        for &(p, q) in &keys {
            check_cap(cyl.dim(p, q), cap, || format!("cylinder bidegree ({p},{q})"))?;
        }
        let built = crate::par::map_slice(&keys, |&(p, q)| {
            let mut degenerate = Vec::new();
            if p >= 1 {
                let below = cyl.dim(p - 1, q);
                for i in 0..p {
                    degenerate.extend((0..below).map(|x| cyl.hdegen(p - 1, q, i, x)));
                }
            }
            if q >= 1 {
                let below = cyl.dim(p, q - 1);
                for i in 0..q {
                    degenerate.extend((0..below).map(|x| cyl.vdegen(p, q - 1, i, x)));
                }
            }
            let dim = cyl.dim(p, q);
            quotient_space(dim, Subspace::span(dim, &degenerate))
        });
        let mut quotients = BTreeMap::new();
        for (k, q) in keys.into_iter().zip(built) {
            quotients.insert(k, q?);
        }
        Ok(BiNormalization { top, quotients })
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn quotient(&self, p: usize, q: usize) -> &QuotientSpace {
        &self.quotients[&(p, q)]
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.quotient(p, q).dim()
    }

    pub fn induce(
        &self,
        src: (usize, usize),
        dst: (usize, usize),
        what: &str,
        f: impl Fn(usize) -> SparseVec,
    ) -> Result<SparseMatrix> {
        induced_map_fn(self.quotient(src.0, src.1), self.quotient(dst.0, dst.1), f).map_err(|e| {
            Error::NotWellDefined(format!(
                "{what} on normalized bidegree ({},{}) (denominator vector {})",
                src.0, src.1, e.denominator_row
            ))
        })
    }
}

/// `Tot(N(M))` with `b + b̄` and `B + T B̄`, plus its block layout.
#[derive(Clone, Debug)]
pub struct TotComplex {
    pub mixed: MixedComplex,
    /// Per degree `n`, the blocks `(p, q, offset)` in increasing `p`.
    pub blocks: Vec<Vec<(usize, usize, usize)>>,
    pub norm: BiNormalization,
}

impl TotComplex {
    pub fn block_of(&self, n: usize, index: usize) -> (usize, usize) {
        let blocks = &self.blocks[n];
        let k = blocks.partition_point(|&(_, _, off)| off <= index) - 1;
        (blocks[k].0, blocks[k].1)
    }

    fn offset(&self, p: usize, q: usize) -> usize {
        self.blocks[p + q][p].2
    }

    /// The component of a degree-`n` vector in bidegree `(p, q)`.
    pub fn component(&self, v: &SparseVec, p: usize, q: usize) -> SparseVec {
        let off = self.offset(p, q);
        let len = self.norm.dim(p, q);
        SparseVec::from_pairs(
            v.iter()
                .filter(|(i, _)| *i >= off && *i < off + len)
                .map(|(i, c)| (i - off, c.clone())),
        )
    }
}

/// The raw count `Σ_{p+q=n} dim M_{p,q}` before normalization.
pub fn tot_raw_dim(cyl: &HopfCrossedCylinder, n: usize) -> usize {
    (0..=n).map(|p| cyl.dim(p, n - p)).sum()
}

type Blocks = BTreeMap<(usize, usize), SparseMatrix>;

fn block_matrix(
    rows: usize,
    cols: usize,
    parts: impl IntoIterator<Item = (usize, usize, SparseMatrix)>,
) -> SparseMatrix {
    let mut triplets: Vec<(usize, usize, Scalar)> = Vec::new();
    for (r0, c0, m) in parts {
        triplets.extend(m.entries().into_iter().map(|(r, c, v)| (r0 + r, c0 + c, v)));
    }
    SparseMatrix::from_triplets(rows, cols, triplets).expect("blocks are disjoint")
}

/// `Tot(N(M))` through degree `top`; the mixed-complex identities are checked
/// before returning.
pub fn tot_mixed_complex(cyl: &HopfCrossedCylinder, top: usize, cap: usize) -> Result<TotComplex> {
    let f = cyl.field();
    let norm = BiNormalization::new(cyl, top + 1, cap)?;
    let keys: Vec<(usize, usize)> = (0..=top + 1).flat_map(|n| (0..=n).map(move |p| (p, n - p))).collect();
    let collect = |pairs: Vec<((usize, usize), Option<Result<SparseMatrix>>)>| -> Result<Blocks> {
        let mut out = Blocks::new();
        for (k, m) in pairs {
            if let Some(m) = m {
                out.insert(k, m?);
            }
        }
        Ok(out)
    };
    let bv = collect(crate::par::map_slice(&keys, |&(p, q)| {
        ((p, q), (q >= 1).then(|| {
            let col = cyl.column(p);
            norm.induce((p, q), (p, q - 1), "b", |x| col.hochschild_b(q, x))
        }))
    }))?;
    let bh = collect(crate::par::map_slice(&keys, |&(p, q)| {
        ((p, q), (p >= 1 && p + q <= top).then(|| {
            let row = cyl.row(q);
            norm.induce((p, q), (p - 1, q), "b̄", |x| row.hochschild_b(p, x).scaled(&sign(f, q)))
        }))
    }))?;
    let big_bv = collect(crate::par::map_slice(&keys, |&(p, q)| {
        ((p, q), (p + q <= top).then(|| {
            let col = cyl.column(p);
            norm.induce((p, q), (p, q + 1), "B", |x| col.connes_b(q, x, true))
        }))
    }))?;
    let big_bh = collect(crate::par::map_slice(&keys, |&(p, q)| {
        ((p, q), (p + q < top).then(|| {
            let row = cyl.row(q);
            norm.induce((p, q), (p + 1, q), "B̄", |x| row.connes_b(p, x, true).scaled(&sign(f, q)))
        }))
    }))?;
    // T = 1 − (bB + Bb) on each column
    let mut twist = Blocks::new();
    for &(p, q) in keys.iter().filter(|(p, q)| p + q <= top) {
        let d = norm.dim(p, q);
        let mut hom = bv[&(p, q + 1)].mul(&big_bv[&(p, q)])?;
        if q >= 1 {
            hom = hom.add(&big_bv[&(p, q - 1)].mul(&bv[&(p, q)])?)?;
        }
        twist.insert((p, q), SparseMatrix::identity(d, f).add(&hom.scaled(&-f.one()))?);
    }

    let mut blocks = Vec::with_capacity(top + 1);
    let mut dims = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut off = 0;
        let mut row = Vec::with_capacity(n + 1);
        for p in 0..=n {
            row.push((p, n - p, off));
            off += norm.dim(p, n - p);
        }
        blocks.push(row);
        dims.push(off);
    }
    let off = |p: usize, q: usize| blocks[p + q][p].2;
    let mut b = vec![SparseMatrix::zero(0, dims[0])];
    for n in 1..=top {
        let mut parts = Vec::new();
        for p in 0..=n {
            let q = n - p;
            if q >= 1 {
                parts.push((off(p, q - 1), off(p, q), bv[&(p, q)].clone()));
            }
            if p >= 1 {
                parts.push((off(p - 1, q), off(p, q), bh[&(p, q)].clone()));
            }
        }
        b.push(block_matrix(dims[n - 1], dims[n], parts));
    }
    let mut big_b = Vec::with_capacity(top);
    for n in 0..top {
        let mut parts = Vec::new();
        for p in 0..=n {
            let q = n - p;
            parts.push((off(p, q + 1), off(p, q), big_bv[&(p, q)].clone()));
            parts.push((off(p + 1, q), off(p, q), twist[&(p + 1, q)].mul(&big_bh[&(p, q)])?));
        }
        big_b.push(block_matrix(dims[n + 1], dims[n], parts));
    }
    let mixed = MixedComplex::new(f, dims, b, big_b)?;
    mixed.check().map_err(|v| Violation::new(format!("Tot: {}", v.axiom), v.location))?;
    Ok(TotComplex { mixed, blocks, norm })
}

/// Both Tot differentials respect the filtration by weight `q + 2k` of the
/// `(b, B)`-bicomplex (`k` the power of `u`): `b` never raises `q`, and `B`
/// raises it by at most two.
pub fn filtration_check(tot: &TotComplex, max_degree: usize) -> std::result::Result<(), Violation> {
    let top = tot.mixed.top();
    for n in 0..=max_degree.min(top) {
        if n >= 1 {
            for (r, c, _) in tot.mixed.b(n).entries() {
                let (ps, qs) = tot.block_of(n, c);
                let (pt, qt) = tot.block_of(n - 1, r);
                if qt > qs {
                    return Err(Violation::new(
                        "b+b̄ preserves the filtration",
                        format!("({ps},{qs}) -> ({pt},{qt})"),
                    ));
                }
            }
        }
        if n < top {
            for (r, c, _) in tot.mixed.big_b(n).entries() {
                let (ps, qs) = tot.block_of(n, c);
                let (pt, qt) = tot.block_of(n + 1, r);
                if qt > qs + 2 {
                    return Err(Violation::new(
                        "B+TB̄ preserves the filtration",
                        format!("({ps},{qs}) -> ({pt},{qt})"),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn shuffles(n: usize, k: usize) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mu: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let nu: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let inversions: usize = mu.iter().map(|m| nu.iter().filter(|v| *v < m).count()).sum();
        out.push((mu, nu, inversions % 2 == 1));
    }
    out
}

/// `f₀` on `M_{p,q}`: the signed sum over `(q, p)`-shuffles `(μ, ν)` of
/// `σ_{ν_p}⋯σ_{ν_1} s_{μ_q}⋯s_{μ_1}`.
pub fn shuffle_f0(cyl: &HopfCrossedCylinder, p: usize, q: usize, x: usize) -> SparseVec {
    let f = cyl.field();
    let n = p + q;
    let mut out = SparseVec::zero();
    for (mu, nu, odd) in shuffles(n, q) {
        let mut v = SparseVec::unit(x, f);
        for (k, &m) in mu.iter().enumerate() {
            v = apply_linear(&v, |y| cyl.hdegen(p + k, q, m, y));
        }
        for (k, &m) in nu.iter().enumerate() {
            v = apply_linear(&v, |y| cyl.vdegen(n, q + k, m, y));
        }
        out = if odd { out.sub(&v) } else { out.add(&v) };
    }
    out
}

/// `f₀: Tot(N(M)) → N(dM)` is well defined and `b ∘ f₀ = f₀ ∘ (b + b̄)`
/// through `max_degree`.
pub fn shuffle_f0_check(
    cyl: &HopfCrossedCylinder,
    tot: &TotComplex,
    max_degree: usize,
    cap: usize,
) -> Result<()> {
    let diag = cyl.diagonal();
    let dnorm = Normalization::of(&diag, max_degree, cap)?;
    let mut maps = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let mut parts = Vec::new();
        for &(p, q, off) in &tot.blocks[n] {
            let m = induced_map_fn(tot.norm.quotient(p, q), &dnorm.quotients[n], |x| shuffle_f0(cyl, p, q, x))
                .map_err(|_| Error::NotWellDefined(format!("f₀ on bidegree ({p},{q})")))?;
            parts.push((0, off, m));
        }
        maps.push(block_matrix(dnorm.quotients[n].dim(), tot.mixed.dims()[n], parts));
    }
    for n in 1..=max_degree {
        let bd = dnorm.induce(n, n - 1, "b", |x| diag.hochschild_b(n, x))?;
        let lhs = bd.mul(&maps[n])?;
        let rhs = maps[n - 1].mul(tot.mixed.b(n))?;
        if lhs != rhs {
            return Err(Violation::new("b∘f₀=f₀∘(b+b̄)", format!("degree {n}")).into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::cyclic::normalized_mixed_complex;
    use crate::linalg::DEFAULT_DIM_CAP;

    #[test]
    fn raw_tot_dimension_for_s2() {
        assert_eq!(tot_raw_dim(&s2(), 2), 84);
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(2, 1).len(), 2);
        assert_eq!(shuffles(3, 1).len(), 3);
        assert_eq!(shuffles(0, 0).len(), 1);
        // (μ, ν) = ({1}, {0}) is a transposition
        assert!(shuffles(2, 1).iter().any(|(m, _, odd)| m == &vec![1] && *odd));
    }

    #[test]
    fn f0_in_bidegree_zero_is_the_identity() {
        let c = s3();
        for x in 0..c.dim(0, 0) {
            assert_eq!(shuffle_f0(&c, 0, 0, x), SparseVec::unit(x, Q));
        }
    }

    #[test]
    fn tot_is_a_mixed_complex_on_every_scenario() {
        for (name, c) in all() {
            let tot = tot_mixed_complex(&c, 3, DEFAULT_DIM_CAP).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(tot.mixed.check(), Ok(()), "{name}");
            assert_eq!(filtration_check(&tot, 3), Ok(()), "{name}");
        }
    }

    #[test]
    fn twist_is_the_cylindrical_power() {
        // on normalized columns 1 − (bB + Bb) = τ^{q+1}
        let c = s3();
        let norm = BiNormalization::new(&c, 3, DEFAULT_DIM_CAP).unwrap();
        for (p, q) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let col = c.column(p);
            let bv_up = norm.induce((p, q + 1), (p, q), "b", |x| col.hochschild_b(q + 1, x)).unwrap();
            let bb = norm.induce((p, q), (p, q + 1), "B", |x| col.connes_b(q, x, true)).unwrap();
            let mut hom = bv_up.mul(&bb).unwrap();
            if q >= 1 {
                let bv = norm.induce((p, q), (p, q - 1), "b", |x| col.hochschild_b(q, x)).unwrap();
                let bb_down = norm.induce((p, q - 1), (p, q), "B", |x| col.connes_b(q - 1, x, true)).unwrap();
                hom = hom.add(&bb_down.mul(&bv).unwrap()).unwrap();
            }
            let t = SparseMatrix::identity(norm.dim(p, q), Q).add(&hom.scaled(&-Q.one())).unwrap();
            let power = norm
                .induce((p, q), (p, q), "τ", |x| {
                    let mut v = SparseVec::unit(x, Q);
                    for _ in 0..=q {
                        v = col.cyclic_vec(q, &v);
                    }
                    v
                })
                .unwrap();
            assert_eq!(t, power, "({p},{q})");
        }
    }

    #[test]
    fn f0_is_a_chain_map() {
        for c in [s1(), s2(), s3()] {
            let tot = tot_mixed_complex(&c, 2, DEFAULT_DIM_CAP).unwrap();
            shuffle_f0_check(&c, &tot, 2, DEFAULT_DIM_CAP).unwrap();
        }
    }

    #[test]
    fn tot_and_diagonal_have_the_same_cyclic_homology() {
        for (name, c) in all() {
            let tot = tot_mixed_complex(&c, 3, DEFAULT_DIM_CAP).unwrap();
            let (diag, _) = normalized_mixed_complex(&c.diagonal(), 3, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(tot.mixed.cyclic(2).unwrap().dims, diag.cyclic(2).unwrap().dims, "{name}");
            assert_eq!(tot.mixed.hochschild(2).unwrap().dims, diag.hochschild(2).unwrap().dims, "{name}");
        }
    }
}
