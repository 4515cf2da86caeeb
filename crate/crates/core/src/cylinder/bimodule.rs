use std::sync::Arc;

use super::HopfCrossedCylinder;
use crate::algebra::{ground_algebra, FinDimAlgebra};
use crate::crossed::{build_crossed_product, ActionMap, Cocycle};
use crate::cyclic::{operator_matrix, sign, HomologyMethod, HomologyReport};
use crate::error::{check_cap, Result, Violation};
use crate::field::FieldSpec;
use crate::hopf::HopfAlgebra;
use crate::linalg::{mat_rank, Accumulator, SparseMatrix, SparseVec};
use crate::tensor::TensorShape;

/// `H_σ = k #_σ H`; basis element `h̄` has the index of `h`.
pub fn twisted_hopf_algebra(hopf: &Arc<HopfAlgebra>, cocycle: &Cocycle) -> Result<FinDimAlgebra> {
    let k = Arc::new(ground_algebra(hopf.field()));
    let act = ActionMap::trivial(Arc::clone(hopf), k);
    Ok(build_crossed_product(&act, cocycle)?.product)
}

/// A bimodule over an algebra whose basis is indexed like `H`.
pub trait Bimodule: Sync {
    fn field(&self) -> FieldSpec;
    fn dim(&self) -> usize;
    fn left(&self, h: usize, m: usize) -> SparseVec;
    fn right(&self, m: usize, h: usize) -> SparseVec;

    fn left_vec(&self, h: &SparseVec, m: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in h.iter() {
            for (j, d) in m.iter() {
                acc.add_vec(&(c * d), &self.left(i, j));
            }
        }
        acc.finish()
    }

    fn right_vec(&self, m: &SparseVec, h: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, d) in m.iter() {
            for (i, c) in h.iter() {
                acc.add_vec(&(c * d), &self.right(j, i));
            }
        }
        acc.finish()
    }
}

/// A left `H`-module.
pub trait LeftModule: Sync {
    fn field(&self) -> FieldSpec;
    fn dim(&self) -> usize;
    fn act(&self, h: usize, m: usize) -> SparseVec;

    fn act_vec(&self, h: &SparseVec, m: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in h.iter() {
            for (j, d) in m.iter() {
                acc.add_vec(&(c * d), &self.act(i, j));
            }
        }
        acc.finish()
    }
}

/// `M_q = H ⊗ A^{⊗(q+1)}` over `H_σ`:
/// `h·(g ⊗ a) = σ(h^{(q+3)}, g^{(2)}) h^{(q+2)} g^{(1)} ⊗ h^{(1)}a_0 ⊗ … ⊗ h^{(q+1)}a_q` and
/// `(g ⊗ a)·h = σ(g^{(2)}, h^{(2)}) g^{(1)} h^{(1)} ⊗ a`.
pub struct BimoduleMq<'a> {
    pub cyl: &'a HopfCrossedCylinder,
    pub q: usize,
}

impl Bimodule for BimoduleMq<'_> {
    fn field(&self) -> FieldSpec {
        self.cyl.field()
    }

    fn dim(&self) -> usize {
        self.cyl.dim(0, self.q)
    }

    fn left(&self, h: usize, m: usize) -> SparseVec {
        let (cyl, q) = (self.cyl, self.q);
        let hopf = cyl.hopf();
        let (g, a) = cyl.decode(0, q, m);
        let shape = cyl.shape(0, q);
        let mut acc = Accumulator::new();
        for (ch, lh) in hopf.legs(h, q + 3).iter() {
            for (cg, lg) in hopf.legs(g[0], 2).iter() {
                let c = &(ch * cg) * cyl.cocycle().basis(lh[q + 2], lg[1]);
                if c.is_zero() {
                    continue;
                }
                let mut factors = vec![hopf.algebra().mul_basis(lh[q + 1], lg[0]).clone()];
                factors.extend((0..=q).map(|k| cyl.action().apply_basis(lh[k], a[k]).clone()));
                shape.accumulate(&mut acc, &c, &factors);
            }
        }
        acc.finish()
    }

    fn right(&self, m: usize, h: usize) -> SparseVec {
        let (cyl, q) = (self.cyl, self.q);
        let hopf = cyl.hopf();
        let f = cyl.field();
        let (g, a) = cyl.decode(0, q, m);
        let shape = cyl.shape(0, q);
        let mut acc = Accumulator::new();
        for (cg, lg) in hopf.legs(g[0], 2).iter() {
            for (ch, lh) in hopf.legs(h, 2).iter() {
                let c = &(cg * ch) * cyl.cocycle().basis(lg[1], lh[1]);
                if c.is_zero() {
                    continue;
                }
                let mut factors = vec![hopf.algebra().mul_basis(lg[0], lh[0]).clone()];
                factors.extend(a.iter().map(|&i| SparseVec::unit(i, f)));
                shape.accumulate(&mut acc, &c, &factors);
            }
        }
        acc.finish()
    }
}

/// Unit, associativity on both sides and the bimodule law, on every basis tuple.
pub fn check_bimodule(m: &dyn Bimodule, hs: &FinDimAlgebra) -> std::result::Result<(), Violation> {
    let f = m.field();
    let (dm, dh) = (m.dim(), hs.dim());
    let unit = hs.unit();
    let found = crate::par::find_first(dm, |x| {
        let e = SparseVec::unit(x, f);
        if m.left_vec(unit, &e) != e {
            return Some(Violation::new("1·m=m", format!("basis {x}")));
        }
        if m.right_vec(&e, unit) != e {
            return Some(Violation::new("m·1=m", format!("basis {x}")));
        }
        for h in 0..dh {
            let eh = SparseVec::unit(h, f);
            for l in 0..dh {
                let el = SparseVec::unit(l, f);
                let hl = hs.mul_basis(h, l);
                let where_ = || format!("h={h}, l={l}, basis {x}");
                if m.left_vec(&eh, &m.left(l, x)) != m.left_vec(hl, &e) {
                    return Some(Violation::new("h·(l·m)=(hl)·m", where_()));
                }
                if m.right_vec(&m.right(x, h), &el) != m.right_vec(&e, hl) {
                    return Some(Violation::new("(m·h)·l=m·(hl)", where_()));
                }
                if m.right_vec(&m.left(h, x), &el) != m.left_vec(&eh, &m.right(x, l)) {
                    return Some(Violation::new("(h·m)·l=h·(m·l)", where_()));
                }
            }
        }
        None
    });
    match found {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// An `H_σ`-bimodule as a left `H`-module:
/// `h ▶ m = σ⁻¹(S(h^{(2)}), h^{(3)}) h̄^{(4)} m S(h^{(1)})‾`.
pub struct TildeModule<'a> {
    pub hopf: &'a HopfAlgebra,
    pub cocycle: &'a Cocycle,
    pub bimodule: &'a dyn Bimodule,
}

impl LeftModule for TildeModule<'_> {
    fn field(&self) -> FieldSpec {
        self.bimodule.field()
    }

    fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    fn act(&self, h: usize, m: usize) -> SparseVec {
        let f = self.field();
        let mut acc = Accumulator::new();
        for (c, l) in self.hopf.legs(h, 4).iter() {
            let s2 = self.hopf.antipode(&SparseVec::unit(l[1], f));
            let coeff = c * &self.cocycle.eval_inv(&s2, &SparseVec::unit(l[2], f));
            if coeff.is_zero() {
                continue;
            }
            let s1 = self.hopf.antipode(&SparseVec::unit(l[0], f));
            let right = self.bimodule.right_vec(&SparseVec::unit(m, f), &s1);
            let v = self.bimodule.left_vec(&SparseVec::unit(l[3], f), &right);
            acc.add_vec(&coeff, &v);
        }
        acc.finish()
    }
}

/// `M` with `h·m = ε(h) m`.
pub struct TrivialModule<'a> {
    pub hopf: &'a HopfAlgebra,
    pub dim: usize,
}

impl LeftModule for TrivialModule<'_> {
    fn field(&self) -> FieldSpec {
        self.hopf.field()
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn act(&self, h: usize, m: usize) -> SparseVec {
        SparseVec::single(m, self.hopf.counit_basis(h).clone())
    }
}

/// The explicit `E¹` action on `M_q`:
/// `σ⁻¹(S(h^{(3)}), h^{(4)}) σ(h^{(q+6)}, g^{(1)}) σ(h^{(q+7)} g^{(2)}, S(h^{(2)}))
///  h^{(q+8)} g^{(3)} S(h^{(1)}) ⊗ h^{(5)}(a_0) ⊗ … ⊗ h^{(q+5)}(a_q)`.
pub struct MqAction<'a> {
    pub cyl: &'a HopfCrossedCylinder,
    pub q: usize,
}

impl LeftModule for MqAction<'_> {
    fn field(&self) -> FieldSpec {
        self.cyl.field()
    }

    fn dim(&self) -> usize {
        self.cyl.dim(0, self.q)
    }

    fn act(&self, h: usize, m: usize) -> SparseVec {
        let (cyl, q) = (self.cyl, self.q);
        let hopf = cyl.hopf();
        let sigma = cyl.cocycle();
        let f = cyl.field();
        let e = |i: usize| SparseVec::unit(i, f);
        let (g, a) = cyl.decode(0, q, m);
        let shape = cyl.shape(0, q);
        let mut acc = Accumulator::new();
        for (ch, lh) in hopf.legs(h, q + 8).iter() {
            let s1 = hopf.antipode(&e(lh[0]));
            let s2 = hopf.antipode(&e(lh[1]));
            let c0 = ch * &sigma.eval_inv(&hopf.antipode(&e(lh[2])), &e(lh[3]));
            if c0.is_zero() {
                continue;
            }
            let av: Vec<SparseVec> = (0..=q).map(|k| cyl.action().apply_basis(lh[4 + k], a[k]).clone()).collect();
            for (cg, lg) in hopf.legs(g[0], 3).iter() {
                let c1 = &(&c0 * cg) * sigma.basis(lh[q + 5], lg[0]);
                let hg = hopf.algebra().mul_basis(lh[q + 6], lg[1]);
                let c = &c1 * &sigma.eval(hg, &s2);
                if c.is_zero() {
                    continue;
                }
                let head = hopf.mul(hopf.algebra().mul_basis(lh[q + 7], lg[2]), &s1);
                let mut factors = vec![head];
                factors.extend(av.iter().cloned());
                shape.accumulate(&mut acc, &c, &factors);
            }
        }
        acc.finish()
    }
}

/// `1 ▶ m = m` and `(gh) ▶ m = g ▶ (h ▶ m)` on every basis tuple.
pub fn check_module_law(m: &dyn LeftModule, hopf: &HopfAlgebra) -> std::result::Result<(), Violation> {
    let f = m.field();
    let dh = hopf.dim();
    let found = crate::par::find_first(m.dim(), |x| {
        let e = SparseVec::unit(x, f);
        if m.act_vec(hopf.unit(), &e) != e {
            return Some(Violation::new("1▶m=m", format!("basis {x}")));
        }
        for g in 0..dh {
            for h in 0..dh {
                let lhs = m.act_vec(hopf.algebra().mul_basis(g, h), &e);
                let rhs = m.act_vec(&SparseVec::unit(g, f), &m.act(h, x));
                if lhs != rhs {
                    return Some(Violation::new("(gh)▶m=g▶(h▶m)", format!("g={g}, h={h}, basis {x}")));
                }
            }
        }
        None
    });
    match found {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// The explicit `E¹` action on `M_q` agrees with `▶` on the bimodule `M_q`.
pub fn mq_action_matches(cyl: &HopfCrossedCylinder, q: usize) -> std::result::Result<(), Violation> {
    let bm = BimoduleMq { cyl, q };
    let tilde = TildeModule {
        hopf: cyl.hopf(),
        cocycle: cyl.cocycle(),
        bimodule: &bm,
    };
    let explicit = MqAction { cyl, q };
    let dh = cyl.dim_h();
    let found = crate::par::find_first(dh * bm.dim(), |k| {
        let (h, m) = (k / bm.dim(), k % bm.dim());
        (explicit.act(h, m) != tilde.act(h, m))
            .then(|| Violation::new("E¹ action = ▶ on M_q", format!("q={q}, h={h}, basis {m}")))
    });
    match found {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

fn chain_shape(dh: usize, n: usize, dm: usize) -> TensorShape {
    let mut dims = vec![dh; n];
    dims.push(dm);
    TensorShape::new(dims)
}

/// `C_n(H_σ, M) = H_σ^{⊗n} ⊗ M` with `δ_0 = (h_2, …, m·h_1)`, interior
/// merges, and `δ_n = (h_1, …, h_n·m)`.
pub struct HochschildComplex<'a> {
    pub algebra: &'a FinDimAlgebra,
    pub bimodule: &'a dyn Bimodule,
}

impl HochschildComplex<'_> {
    pub fn dim(&self, n: usize) -> usize {
        self.algebra.dim().pow(n as u32) * self.bimodule.dim()
    }

    pub fn shape(&self, n: usize) -> TensorShape {
        chain_shape(self.algebra.dim(), n, self.bimodule.dim())
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        let f = self.bimodule.field();
        let idx = self.shape(n).decode(x);
        let (h, m) = (&idx[..n], idx[n]);
        let mut factors: Vec<SparseVec> = Vec::with_capacity(n);
        if i == 0 {
            factors.extend(h[1..].iter().map(|&j| SparseVec::unit(j, f)));
            factors.push(self.bimodule.right(m, h[0]));
        } else if i < n {
            for (k, &j) in h.iter().enumerate() {
                if k == i {
                    continue;
                }
                factors.push(if k == i - 1 {
                    self.algebra.mul_basis(j, h[i]).clone()
                } else {
                    SparseVec::unit(j, f)
                });
            }
            factors.push(SparseVec::unit(m, f));
        } else {
            factors.extend(h[..n - 1].iter().map(|&j| SparseVec::unit(j, f)));
            factors.push(self.bimodule.left(h[n - 1], m));
        }
        self.shape(n - 1).tensor(&f.one(), &factors)
    }

    pub fn differential(&self, n: usize) -> SparseMatrix {
        let f = self.bimodule.field();
        operator_matrix(self.dim(n - 1), self.dim(n), |x| {
            let mut acc = Accumulator::new();
            for i in 0..=n {
                acc.add_vec(&sign(f, i), &self.face(n, i, x));
            }
            acc.finish()
        })
    }
}

/// `H^{⊗n} ⊗ M` with `d(h_1, …, h_n, m) = ε(h_1)(h_2, …, m) + Σ (−1)^i (…, h_i h_{i+1}, …)
/// + (−1)^n (h_1, …, h_{n-1}, h_n ▶ m)`.
pub struct HopfHomologyComplex<'a> {
    pub hopf: &'a HopfAlgebra,
    pub module: &'a dyn LeftModule,
}

impl HopfHomologyComplex<'_> {
    pub fn dim(&self, n: usize) -> usize {
        self.hopf.dim().pow(n as u32) * self.module.dim()
    }

    pub fn shape(&self, n: usize) -> TensorShape {
        chain_shape(self.hopf.dim(), n, self.module.dim())
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        let f = self.module.field();
        let idx = self.shape(n).decode(x);
        let (h, m) = (&idx[..n], idx[n]);
        let mut factors: Vec<SparseVec> = Vec::with_capacity(n);
        let mut coeff = f.one();
        if i == 0 {
            coeff = self.hopf.counit_basis(h[0]).clone();
            factors.extend(h[1..].iter().map(|&j| SparseVec::unit(j, f)));
            factors.push(SparseVec::unit(m, f));
        } else if i < n {
            for (k, &j) in h.iter().enumerate() {
                if k == i {
                    continue;
                }
                factors.push(if k == i - 1 {
                    self.hopf.algebra().mul_basis(j, h[i]).clone()
                } else {
                    SparseVec::unit(j, f)
                });
            }
            factors.push(SparseVec::unit(m, f));
        } else {
            factors.extend(h[..n - 1].iter().map(|&j| SparseVec::unit(j, f)));
            factors.push(self.module.act(h[n - 1], m));
        }
        self.shape(n - 1).tensor(&coeff, &factors)
    }

    pub fn differential(&self, n: usize) -> SparseMatrix {
        let f = self.module.field();
        operator_matrix(self.dim(n - 1), self.dim(n), |x| {
            let mut acc = Accumulator::new();
            for i in 0..=n {
                acc.add_vec(&sign(f, i), &self.face(n, i, x));
            }
            acc.finish()
        })
    }

    /// `H_p(H; M)` for `p ≤ max_p`, after checking `d² = 0` through `max_p + 1`.
    pub fn homology(&self, max_p: usize, cap: usize) -> Result<HomologyReport> {
        for n in 0..=max_p + 1 {
            check_cap(self.dim(n), cap, || format!("Hopf homology chains in degree {n}"))?;
        }
        let mut d = vec![SparseMatrix::zero(0, self.dim(0))];
        d.extend(crate::par::map_range(max_p + 1, |k| self.differential(k + 1)));
        for n in 2..=max_p + 1 {
            if !d[n - 1].mul(&d[n])?.is_zero() {
                return Err(Violation::new("d²=0 (Hopf homology)", format!("degree {n}")).into());
            }
        }
        let ranks = crate::par::map_slice(&d, mat_rank);
        let dims = (0..=max_p).map(|n| self.dim(n) - ranks[n] - ranks[n + 1]).collect();
        Ok(HomologyReport {
            method: HomologyMethod::Hopf,
            degrees: (0..=max_p).collect(),
            dims,
        })
    }
}

/// The identification of row `q` at degree `p` with `C_p(H_σ, M_q)`,
/// `(g_0, …, g_p | a) ↦ (ḡ_1, …, ḡ_p, g_0 ⊗ a)`, intertwines every face.
pub fn row_identification_check(
    cyl: &HopfCrossedCylinder,
    hs: &FinDimAlgebra,
    q: usize,
    max_p: usize,
) -> std::result::Result<(), Violation> {
    let bm = BimoduleMq { cyl, q };
    let hc = HochschildComplex {
        algebra: hs,
        bimodule: &bm,
    };
    let iota = |p: usize, x: usize| -> usize {
        let (g, a) = cyl.decode(p, q, x);
        let mut m = vec![g[0]];
        m.extend(a);
        let mut idx = g[1..].to_vec();
        idx.push(cyl.shape(0, q).encode(&m));
        hc.shape(p).encode(&idx)
    };
    for p in 1..=max_p {
        let found = crate::par::find_first(cyl.dim(p, q), |x| {
            for j in 0..=p {
                let lhs = SparseVec::from_pairs(cyl.hface(p, q, j, x).iter().map(|(y, c)| (iota(p - 1, y), c.clone())));
                if lhs != hc.face(p, j, iota(p, x)) {
                    return Some(Violation::new(
                        "row face = Hochschild face",
                        format!("q={q}, p={p}, j={j}, basis {x}"),
                    ));
                }
            }
            None
        });
        if let Some(v) = found {
            return Err(v);
        }
    }
    Ok(())
}

/// `Θ` and `𝔗` between `C_n(H_σ, M)` and `C_n(H; M̃)`.
pub struct MacLane<'a> {
    pub hopf: &'a HopfAlgebra,
    pub cocycle: &'a Cocycle,
    pub bimodule: &'a dyn Bimodule,
}

impl MacLane<'_> {
    fn shape(&self, n: usize) -> TensorShape {
        chain_shape(self.hopf.dim(), n, self.bimodule.dim())
    }

    /// `Θ(h̄_1, …, h̄_n, m) = (h_1^{(2)}, …, h_n^{(2)}, m h̄_1^{(1)}⋯h̄_n^{(1)})`.
    pub fn theta(&self, n: usize) -> SparseMatrix {
        let f = self.bimodule.field();
        let shape = self.shape(n);
        operator_matrix(shape.size(), shape.size(), |x| {
            let idx = shape.decode(x);
            let mut acc = Accumulator::new();
            for (c, legs) in self.hopf.legs_of_tuple(&idx[..n], 2) {
                let mut m = SparseVec::unit(idx[n], f);
                for l in &legs {
                    m = self.bimodule.right_vec(&m, &SparseVec::unit(l[0], f));
                }
                let mut factors: Vec<SparseVec> = legs.iter().map(|l| SparseVec::unit(l[1], f)).collect();
                factors.push(m);
                shape.accumulate(&mut acc, &c, &factors);
            }
            acc.finish()
        })
    }

    /// `𝔗(h_1, …, h_n, m) = Π σ⁻¹(S(h_i^{(2)}), h_i^{(3)}) (h̄_1^{(4)}, …, h̄_n^{(4)},
    /// m S(h_n^{(1)})‾ ⋯ S(h_1^{(1)})‾)`.
    pub fn inverse(&self, n: usize) -> SparseMatrix {
        let f = self.bimodule.field();
        let shape = self.shape(n);
        operator_matrix(shape.size(), shape.size(), |x| {
            let idx = shape.decode(x);
            let mut acc = Accumulator::new();
            for (c, legs) in self.hopf.legs_of_tuple(&idx[..n], 4) {
                let mut coeff = c;
                for l in &legs {
                    let s = self.hopf.antipode(&SparseVec::unit(l[1], f));
                    coeff = &coeff * &self.cocycle.eval_inv(&s, &SparseVec::unit(l[2], f));
                }
                if coeff.is_zero() {
                    continue;
                }
                let mut m = SparseVec::unit(idx[n], f);
                for l in legs.iter().rev() {
                    m = self.bimodule.right_vec(&m, &self.hopf.antipode(&SparseVec::unit(l[0], f)));
                }
                let mut factors: Vec<SparseVec> = legs.iter().map(|l| SparseVec::unit(l[3], f)).collect();
                factors.push(m);
                shape.accumulate(&mut acc, &coeff, &factors);
            }
            acc.finish()
        })
    }
}

/// `Θ𝔗 = 𝔗Θ = id` and `Θ δ_i = δ_i Θ` for every face, degrees `≤ max_p`.
pub fn maclane_check(
    hs: &FinDimAlgebra,
    hopf: &HopfAlgebra,
    cocycle: &Cocycle,
    bimodule: &dyn Bimodule,
    max_p: usize,
) -> std::result::Result<(), Violation> {
    let ml = MacLane {
        hopf,
        cocycle,
        bimodule,
    };
    let tilde = TildeModule {
        hopf,
        cocycle,
        bimodule,
    };
    let hoch = HochschildComplex {
        algebra: hs,
        bimodule,
    };
    let hopf_cx = HopfHomologyComplex { hopf, module: &tilde };
    let mut prev: Option<SparseMatrix> = None;
    for n in 0..=max_p {
        let theta = ml.theta(n);
        let inv = ml.inverse(n);
        let id_ok = |m: std::result::Result<SparseMatrix, _>| m.map_or(false, |m: SparseMatrix| m.is_identity());
        if !id_ok(theta.mul(&inv)) || !id_ok(inv.mul(&theta)) {
            return Err(Violation::new("Θ𝔗=𝔗Θ=id", format!("degree {n}")));
        }
        if let Some(theta_below) = &prev {
            for i in 0..=n {
                let hf = operator_matrix(hoch.dim(n - 1), hoch.dim(n), |x| hoch.face(n, i, x));
                let pf = operator_matrix(hopf_cx.dim(n - 1), hopf_cx.dim(n), |x| hopf_cx.face(n, i, x));
                if theta_below.mul(&hf).ok() != pf.mul(&theta).ok() {
                    return Err(Violation::new("Θδ_i=δ_iΘ", format!("degree {n}, i={i}")));
                }
            }
        }
        prev = Some(theta);
    }
    Ok(())
}
