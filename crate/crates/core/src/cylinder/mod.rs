//! The cylindrical module `A ♮_σ H = {H^{⊗(p+1)} ⊗ A^{⊗(q+1)}}` and everything built on it.
//!
//! Vertical operators `(δ, σ, τ)` act on the `A` side and move `q`; horizontal
//! operators `(d, s, t)` act on the `H` side and move `p`.

mod bimodule;
mod iso;
mod tot;

pub use bimodule::{
    check_bimodule, check_module_law, maclane_check, mq_action_matches, row_identification_check,
    twisted_hopf_algebra, Bimodule, BimoduleMq, HochschildComplex, HopfHomologyComplex, LeftModule,
    MacLane, MqAction, TildeModule, TrivialModule,
};
pub use iso::{phi_matrix, psi_matrix, PhiPsiCheck};
pub use tot::{filtration_check, shuffle_f0_check, tot_mixed_complex, tot_raw_dim, BiNormalization, TotComplex};

use std::sync::Arc;

use crate::crossed::{validate_cocycle, validate_weak_action, ActionMap, Cocycle};
use crate::cyclic::{check_paracyclic, Paracyclic};
use crate::error::{Error, Result, Violation};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{is_cocommutative, HopfAlgebra};
use crate::linalg::{apply_linear, Accumulator, SparseVec};
use crate::tensor::TensorShape;

#[derive(Clone, Debug)]
pub struct HopfCrossedCylinder {
    hopf: Arc<HopfAlgebra>,
    action: ActionMap,
    cocycle: Cocycle,
}

impl HopfCrossedCylinder {
    pub fn new(action: ActionMap, cocycle: Cocycle) -> Result<Self> {
        validate_weak_action(&action)?;
        validate_cocycle(&cocycle, &action)?;
        if !is_cocommutative(action.hopf()) {
            return Err(Error::Violation(Violation::new("cocommutativity", "coproduct table")));
        }
        Ok(Self::new_unchecked(action, cocycle))
    }

    /// Skips every precondition; used to watch identities fail on bad input.
    pub fn new_unchecked(action: ActionMap, cocycle: Cocycle) -> Self {
        HopfCrossedCylinder {
            hopf: Arc::clone(action.hopf()),
            action,
            cocycle,
        }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn action(&self) -> &ActionMap {
        &self.action
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn field(&self) -> FieldSpec {
        self.hopf.field()
    }

    pub fn dim_h(&self) -> usize {
        self.hopf.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.action.algebra().dim()
    }

    pub fn shape(&self, p: usize, q: usize) -> TensorShape {
        TensorShape::blocks(self.dim_h(), p + 1, self.dim_a(), q + 1)
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.dim_h().pow(p as u32 + 1) * self.dim_a().pow(q as u32 + 1)
    }

    /// Splits a basis index into its `H` and `A` factors.
    pub fn decode(&self, p: usize, q: usize, x: usize) -> (Vec<usize>, Vec<usize>) {
        let mut idx = self.shape(p, q).decode(x);
        let a = idx.split_off(p + 1);
        (idx, a)
    }

    fn unit_h(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.field())
    }

    fn assemble(
        &self,
        p: usize,
        q: usize,
        terms: impl IntoIterator<Item = (Scalar, Vec<SparseVec>, Vec<SparseVec>)>,
    ) -> SparseVec {
        let shape = self.shape(p, q);
        let mut acc = Accumulator::new();
        for (c, mut h, a) in terms {
            h.extend(a);
            shape.accumulate(&mut acc, &c, &h);
        }
        acc.finish()
    }

    fn antipode_of_product(&self, legs: impl IntoIterator<Item = usize>) -> SparseVec {
        self.hopf.antipode(&self.hopf.product_of(legs))
    }

    /// `τ(g | a) = (g^{(2)} | S(g_0^{(1)}⋯g_p^{(1)})(a_q), a_0, …, a_{q-1})`.
    pub fn vcyclic(&self, p: usize, q: usize, x: usize) -> SparseVec {
        let (g, a) = self.decode(p, q, x);
        let terms = self.hopf.legs_of_tuple(&g, 2).into_iter().map(|(c, legs)| {
            let s = self.antipode_of_product(legs.iter().map(|l| l[0]));
            let mut av = vec![self.action.apply(&s, &self.unit_a(a[q]))];
            av.extend(a[..q].iter().map(|&i| self.unit_a(i)));
            (c, legs.iter().map(|l| self.unit_h(l[1])).collect(), av)
        });
        self.assemble(p, q, terms)
    }

    fn unit_a(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.field())
    }

    /// `δ_i` for `i < q` multiplies `a_i a_{i+1}`; `δ_q = δ_0 τ`.
    pub fn vface(&self, p: usize, q: usize, i: usize, x: usize) -> SparseVec {
        assert!(q >= 1 && i <= q);
        if i == q {
            let t = self.vcyclic(p, q, x);
            return apply_linear(&t, |y| self.vface(p, q, 0, y));
        }
        let (g, a) = self.decode(p, q, x);
        let alg = self.action.algebra();
        let mut av: Vec<SparseVec> = Vec::with_capacity(q);
        for (k, &ak) in a.iter().enumerate() {
            if k == i + 1 {
                continue;
            }
            av.push(if k == i {
                alg.mul_basis(ak, a[i + 1]).clone()
            } else {
                self.unit_a(ak)
            });
        }
        let h = g.iter().map(|&j| self.unit_h(j)).collect();
        self.assemble(p, q - 1, [(self.field().one(), h, av)])
    }

    /// The displayed last vertical face `(g^{(2)} | S(g_0^{(1)}⋯g_p^{(1)})(a_q) a_0, a_1, …)`.
    pub fn vface_displayed(&self, p: usize, q: usize, x: usize) -> SparseVec {
        let (g, a) = self.decode(p, q, x);
        let alg = self.action.algebra();
        let terms = self.hopf.legs_of_tuple(&g, 2).into_iter().map(|(c, legs)| {
            let s = self.antipode_of_product(legs.iter().map(|l| l[0]));
            let moved = self.action.apply(&s, &self.unit_a(a[q]));
            let mut av = vec![alg.mul(&moved, &self.unit_a(a[0]))];
            av.extend(a[1..q].iter().map(|&i| self.unit_a(i)));
            (c, legs.iter().map(|l| self.unit_h(l[1])).collect(), av)
        });
        self.assemble(p, q - 1, terms)
    }

    /// `σ_i` inserts `1_A` after `a_i`.
    pub fn vdegen(&self, p: usize, q: usize, i: usize, x: usize) -> SparseVec {
        assert!(i <= q);
        let (g, a) = self.decode(p, q, x);
        let mut av: Vec<SparseVec> = a.iter().map(|&j| self.unit_a(j)).collect();
        av.insert(i + 1, self.action.algebra().unit().clone());
        let h = g.iter().map(|&j| self.unit_h(j)).collect();
        self.assemble(p, q + 1, [(self.field().one(), h, av)])
    }

    /// `t(g | a) = (g_p^{(q+2)}, g_0, …, g_{p-1} | g_p^{(1)}(a_0), …, g_p^{(q+1)}(a_q))`.
    pub fn hcyclic(&self, p: usize, q: usize, x: usize) -> SparseVec {
        let (g, a) = self.decode(p, q, x);
        let terms = self.hopf.legs(g[p], q + 2).iter().map(|(c, legs)| {
            let mut h = vec![self.unit_h(legs[q + 1])];
            h.extend(g[..p].iter().map(|&j| self.unit_h(j)));
            let av = (0..=q).map(|k| self.action.apply_basis(legs[k], a[k]).clone()).collect();
            (c.clone(), h, av)
        }).collect::<Vec<_>>();
        self.assemble(p, q, terms)
    }

    /// `d_i` for `i < p` merges `g_i^{(1)} g_{i+1}^{(1)}` with the factor
    /// `σ(g_i^{(2)}, g_{i+1}^{(2)})`; `d_p = d_0 t`.
    pub fn hface(&self, p: usize, q: usize, i: usize, x: usize) -> SparseVec {
        assert!(p >= 1 && i <= p);
        if i == p {
            let t = self.hcyclic(p, q, x);
            return apply_linear(&t, |y| self.hface(p, q, 0, y));
        }
        let (g, a) = self.decode(p, q, x);
        let av: Vec<SparseVec> = a.iter().map(|&j| self.unit_a(j)).collect();
        let mut terms = Vec::new();
        for (c, l) in self.hopf.legs_of_tuple(&[g[i], g[i + 1]], 2) {
            let coeff = &c * self.cocycle.basis(l[0][1], l[1][1]);
            if coeff.is_zero() {
                continue;
            }
            let mut h: Vec<SparseVec> = Vec::with_capacity(p);
            for k in 0..=p {
                if k == i + 1 {
                    continue;
                }
                h.push(if k == i {
                    self.hopf.algebra().mul_basis(l[0][0], l[1][0]).clone()
                } else {
                    self.unit_h(g[k])
                });
            }
            terms.push((coeff, h, av.clone()));
        }
        self.assemble(p - 1, q, terms)
    }

    /// The displayed last horizontal face
    /// `(g_p^{(q+2)} g_0^{(1)}, g_1, … | σ(g_p^{(q+3)}, g_0^{(2)}) g_p^{(1)}(a_0), …)`.
    pub fn hface_displayed(&self, p: usize, q: usize, x: usize) -> SparseVec {
        let (g, a) = self.decode(p, q, x);
        let mut out = Vec::new();
        for (cp, lp) in self.hopf.legs(g[p], q + 3).iter() {
            for (c0, l0) in self.hopf.legs(g[0], 2).iter() {
                let coeff = &(cp * c0) * self.cocycle.basis(lp[q + 2], l0[1]);
                if coeff.is_zero() {
                    continue;
                }
                let mut h = vec![self.hopf.algebra().mul_basis(lp[q + 1], l0[0]).clone()];
                h.extend(g[1..p].iter().map(|&j| self.unit_h(j)));
                let av = (0..=q).map(|k| self.action.apply_basis(lp[k], a[k]).clone()).collect();
                out.push((coeff, h, av));
            }
        }
        self.assemble(p - 1, q, out)
    }

    /// `s_i` inserts `1_H` after `g_i`.
    pub fn hdegen(&self, p: usize, q: usize, i: usize, x: usize) -> SparseVec {
        assert!(i <= p);
        let (g, a) = self.decode(p, q, x);
        let mut h: Vec<SparseVec> = g.iter().map(|&j| self.unit_h(j)).collect();
        h.insert(i + 1, self.hopf.unit().clone());
        let av = a.iter().map(|&j| self.unit_a(j)).collect();
        self.assemble(p + 1, q, [(self.field().one(), h, av)])
    }

    pub fn row(&self, q: usize) -> Row<'_> {
        Row { cyl: self, q }
    }

    pub fn column(&self, p: usize) -> Column<'_> {
        Column { cyl: self, p }
    }

    pub fn diagonal(&self) -> Diagonal<'_> {
        Diagonal { cyl: self }
    }
}

/// Row `q`: degree `p`, operators `(d, s, t)`.
pub struct Row<'a> {
    pub cyl: &'a HopfCrossedCylinder,
    pub q: usize,
}

impl Paracyclic for Row<'_> {
    fn field(&self) -> FieldSpec {
        self.cyl.field()
    }
    fn dim(&self, n: usize) -> usize {
        self.cyl.dim(n, self.q)
    }
    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.cyl.hface(n, self.q, i, x)
    }
    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.cyl.hdegen(n, self.q, i, x)
    }
    fn cyclic(&self, n: usize, x: usize) -> SparseVec {
        self.cyl.hcyclic(n, self.q, x)
    }
}

/// Column `p`: degree `q`, operators `(δ, σ, τ)`.
pub struct Column<'a> {
    pub cyl: &'a HopfCrossedCylinder,
    pub p: usize,
}

impl Paracyclic for Column<'_> {
    fn field(&self) -> FieldSpec {
        self.cyl.field()
    }
    fn dim(&self, n: usize) -> usize {
        self.cyl.dim(self.p, n)
    }
    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.cyl.vface(self.p, n, i, x)
    }
    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.cyl.vdegen(self.p, n, i, x)
    }
    fn cyclic(&self, n: usize, x: usize) -> SparseVec {
        self.cyl.vcyclic(self.p, n, x)
    }
}

/// The diagonal `M_{n,n}` with `δ_i d_i`, `σ_i s_i` and `τ t`.
pub struct Diagonal<'a> {
    pub cyl: &'a HopfCrossedCylinder,
}

impl Paracyclic for Diagonal<'_> {
    fn field(&self) -> FieldSpec {
        self.cyl.field()
    }
    fn dim(&self, n: usize) -> usize {
        self.cyl.dim(n, n)
    }
    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        let h = self.cyl.hface(n, n, i, x);
        apply_linear(&h, |y| self.cyl.vface(n - 1, n, i, y))
    }
    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec {
        let h = self.cyl.hdegen(n, n, i, x);
        apply_linear(&h, |y| self.cyl.vdegen(n + 1, n, i, y))
    }
    fn cyclic(&self, n: usize, x: usize) -> SparseVec {
        let h = self.cyl.hcyclic(n, n, x);
        apply_linear(&h, |y| self.cyl.vcyclic(n, n, y))
    }
}

/// Names of the vertical/horizontal commutation families.
pub const COMMUTATIONS: [&str; 9] = [
    "δ_id_j=d_jδ_i",
    "δ_is_j=s_jδ_i",
    "δ_it=tδ_i",
    "σ_id_j=d_jσ_i",
    "σ_is_j=s_jσ_i",
    "σ_it=tσ_i",
    "τd_j=d_jτ",
    "τs_j=s_jτ",
    "τt=tτ",
];

type Op<'a> = Box<dyn Fn(usize, usize, &SparseVec) -> SparseVec + Sync + 'a>;

/// Maps `(p, q, v) ↦ op(v)` together with the bidegree shift of `op`.
fn ops_of_kind<'a>(cyl: &'a HopfCrossedCylinder, vertical: bool, kind: usize, p: usize, q: usize) -> Vec<(String, (isize, isize), Op<'a>)> {
    let mut out: Vec<(String, (isize, isize), Op<'a>)> = Vec::new();
    let (deg, _) = if vertical { (q, p) } else { (p, q) };
    let lin = move |f: Box<dyn Fn(usize, usize, usize) -> SparseVec + Sync + 'a>| -> Op<'a> {
        Box::new(move |p, q, v: &SparseVec| apply_linear(v, |x| f(p, q, x)))
    };
    match (vertical, kind) {
        (true, 0) if deg >= 1 => {
            for i in 0..=deg {
                out.push((format!("i={i}"), (0, -1), lin(Box::new(move |p, q, x| cyl.vface(p, q, i, x)))));
            }
        }
        (true, 1) => {
            for i in 0..=deg {
                out.push((format!("i={i}"), (0, 1), lin(Box::new(move |p, q, x| cyl.vdegen(p, q, i, x)))));
            }
        }
        (true, 2) => out.push((String::new(), (0, 0), lin(Box::new(move |p, q, x| cyl.vcyclic(p, q, x))))),
        (false, 0) if deg >= 1 => {
            for j in 0..=deg {
                out.push((format!("j={j}"), (-1, 0), lin(Box::new(move |p, q, x| cyl.hface(p, q, j, x)))));
            }
        }
        (false, 1) => {
            for j in 0..=deg {
                out.push((format!("j={j}"), (1, 0), lin(Box::new(move |p, q, x| cyl.hdegen(p, q, j, x)))));
            }
        }
        (false, 2) => out.push((String::new(), (0, 0), lin(Box::new(move |p, q, x| cyl.hcyclic(p, q, x))))),
        _ => {}
    }
    out
}

fn shift(p: usize, d: isize) -> usize {
    (p as isize + d) as usize
}

fn check_commutation(cyl: &HopfCrossedCylinder, family: usize, p: usize, q: usize) -> Option<Violation> {
    let f = cyl.field();
    let verticals = ops_of_kind(cyl, true, family / 3, p, q);
    let horizontals = ops_of_kind(cyl, false, family % 3, p, q);
    crate::par::find_first(cyl.dim(p, q), |x| {
        let e = SparseVec::unit(x, f);
        for (vn, (vp, vq), v) in &verticals {
            for (hn, (hp, hq), h) in &horizontals {
                let (pv, qv) = (shift(p, *vp), shift(q, *vq));
                let (ph, qh) = (shift(p, *hp), shift(q, *hq));
                let lhs = v(ph, qh, &h(p, q, &e));
                let rhs = h(pv, qv, &v(p, q, &e));
                if lhs != rhs {
                    return Some(Violation::new(
                        COMMUTATIONS[family],
                        format!("bidegree ({p},{q}), {vn} {hn}, basis {x}").replace("  ", " "),
                    ));
                }
            }
        }
        None
    })
}

fn with_place(v: Violation, place: String) -> Violation {
    Violation::new(v.axiom, format!("{place}, {}", v.location))
}

/// The identity `d_i d_{i+1} = d_i d_i` on every row.
pub fn check_face_cocycle_identity(cyl: &HopfCrossedCylinder, max_p: usize, max_q: usize) -> std::result::Result<(), Violation> {
    for p in 2..=max_p {
        for q in 0..=max_q {
            let hit = crate::par::find_first(cyl.dim(p, q), |x| {
                for i in 0..p {
                    let lhs = apply_linear(&cyl.hface(p, q, i + 1, x), |y| cyl.hface(p - 1, q, i, y));
                    let rhs = apply_linear(&cyl.hface(p, q, i, x), |y| cyl.hface(p - 1, q, i, y));
                    if lhs != rhs {
                        return Some(Violation::new(
                            "d_id_{i+1}=d_id_i",
                            format!("bidegree ({p},{q}), i={i}, basis {x}"),
                        ));
                    }
                }
                None
            });
            if let Some(v) = hit {
                return Err(v);
            }
        }
    }
    Ok(())
}

/// `t^{p+1} τ^{q+1} = id` on `M_{p,q}`.
pub fn check_cylindrical_condition(cyl: &HopfCrossedCylinder, max_p: usize, max_q: usize) -> std::result::Result<(), Violation> {
    let f = cyl.field();
    for p in 0..=max_p {
        for q in 0..=max_q {
            let hit = crate::par::find_first(cyl.dim(p, q), |x| {
                let e = SparseVec::unit(x, f);
                let mut v = e.clone();
                for _ in 0..=q {
                    v = apply_linear(&v, |y| cyl.vcyclic(p, q, y));
                }
                for _ in 0..=p {
                    v = apply_linear(&v, |y| cyl.hcyclic(p, q, y));
                }
                (v != e).then(|| Violation::new("t^{p+1}τ^{q+1}=id", format!("bidegree ({p},{q}), basis {x}")))
            });
            if let Some(v) = hit {
                return Err(v);
            }
        }
    }
    Ok(())
}

/// The displayed last faces agree with `δ_0 τ` and `d_0 t`.
pub fn check_displayed_last_faces(cyl: &HopfCrossedCylinder, max_p: usize, max_q: usize) -> std::result::Result<(), Violation> {
    for p in 0..=max_p {
        for q in 0..=max_q {
            let hit = crate::par::find_first(cyl.dim(p, q), |x| {
                if q >= 1 && cyl.vface(p, q, q, x) != cyl.vface_displayed(p, q, x) {
                    return Some(Violation::new("δ_q as displayed = δ_0τ", format!("bidegree ({p},{q}), basis {x}")));
                }
                if p >= 1 && cyl.hface(p, q, p, x) != cyl.hface_displayed(p, q, x) {
                    return Some(Violation::new("d_p as displayed = d_0t", format!("bidegree ({p},{q}), basis {x}")));
                }
                None
            });
            if let Some(v) = hit {
                return Err(v);
            }
        }
    }
    Ok(())
}

/// Every identity of a cylindrical module through bidegree `(max_p, max_q)`:
/// the face cocycle identity, paracyclic rows and columns, the nine
/// commutation families and the cylindrical condition. The first failure is
/// reported.
pub fn check_cylindrical(cyl: &HopfCrossedCylinder, max_p: usize, max_q: usize) -> std::result::Result<(), Violation> {
    check_face_cocycle_identity(cyl, max_p, max_q)?;
    for q in 0..=max_q {
        check_paracyclic(&cyl.row(q), max_p).map_err(|v| with_place(v, format!("row q={q}")))?;
    }
    for p in 0..=max_p {
        check_paracyclic(&cyl.column(p), max_q).map_err(|v| with_place(v, format!("column p={p}")))?;
    }
    for p in 0..=max_p {
        for q in 0..=max_q {
            for family in 0..COMMUTATIONS.len() {
                if let Some(v) = check_commutation(cyl, family, p, q) {
                    return Err(v);
                }
            }
        }
    }
    check_cylindrical_condition(cyl, max_p, max_q)?;
    check_displayed_last_faces(cyl, max_p, max_q)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::algebra::{dual_numbers, function_algebra, ground_algebra, FiniteGroup};
    use crate::crossed::lift_group_cocycle;
    use crate::hopf::group_hopf;

    pub const Q: FieldSpec = FieldSpec::Rationals;

    /// `(−1)^{x₂y₁}` on `C2×C2` with index `2x₁ + x₂`.
    pub fn s2_table() -> Vec<Scalar> {
        let mut t = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                let (x2, y1) = (x % 2, y / 2);
                t.push(if x2 * y1 == 1 { -Q.one() } else { Q.one() });
            }
        }
        t
    }

    pub fn s1() -> HopfCrossedCylinder {
        let h = Arc::new(group_hopf(Q, &FiniteGroup::cyclic(2)));
        let a = Arc::new(ground_algebra(Q));
        HopfCrossedCylinder::new(ActionMap::trivial(Arc::clone(&h), a), Cocycle::trivial(h)).unwrap()
    }

    pub fn s2_parts() -> (ActionMap, Cocycle) {
        let g = FiniteGroup::by_name("C2xC2").unwrap();
        let h = Arc::new(group_hopf(Q, &g));
        let a = Arc::new(ground_algebra(Q));
        let c = lift_group_cocycle(&g, Arc::clone(&h), &s2_table()).unwrap();
        (ActionMap::trivial(h, a), c)
    }

    pub fn s2() -> HopfCrossedCylinder {
        let (act, c) = s2_parts();
        HopfCrossedCylinder::new(act, c).unwrap()
    }

    pub fn s3() -> HopfCrossedCylinder {
        let g = FiniteGroup::cyclic(2);
        let h = Arc::new(group_hopf(Q, &g));
        let a = Arc::new(function_algebra(Q, &g));
        let act = ActionMap::translation(Arc::clone(&h), a, &g).unwrap();
        HopfCrossedCylinder::new(act, Cocycle::trivial(h)).unwrap()
    }

    pub fn s4() -> HopfCrossedCylinder {
        let f = FieldSpec::PrimeField(2);
        let h = Arc::new(group_hopf(f, &FiniteGroup::cyclic(2)));
        let a = Arc::new(ground_algebra(f));
        HopfCrossedCylinder::new(ActionMap::trivial(Arc::clone(&h), a), Cocycle::trivial(h)).unwrap()
    }

    pub fn s5() -> HopfCrossedCylinder {
        let h = Arc::new(group_hopf(Q, &FiniteGroup::cyclic(2)));
        let a = Arc::new(dual_numbers(Q));
        // e fixes everything; g: 1 ↦ 1, x ↦ −x
        let table = vec![
            SparseVec::unit(0, Q),
            SparseVec::unit(1, Q),
            SparseVec::unit(0, Q),
            SparseVec::single(1, -Q.one()),
        ];
        let act = ActionMap::from_table(Arc::clone(&h), a, table).unwrap();
        HopfCrossedCylinder::new(act, Cocycle::trivial(h)).unwrap()
    }

    pub fn all() -> Vec<(&'static str, HopfCrossedCylinder)> {
        vec![("S1", s1()), ("S2", s2()), ("S3", s3()), ("S4", s4()), ("S5", s5())]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::cyclic::check_cyclic;

    #[test]
    fn chain_space_dimensions() {
        let c = s2();
        for (p, q) in [(0, 0), (1, 0), (2, 3)] {
            assert_eq!(c.dim(p, q), 4usize.pow(p as u32 + 1));
        }
        assert_eq!(s5().dim(1, 1), 16);
    }

    #[test]
    fn tau_t_is_identity_in_bidegree_zero_for_s1() {
        let c = s1();
        for x in 0..c.dim(0, 0) {
            let t = c.hcyclic(0, 0, x);
            assert_eq!(apply_linear(&t, |y| c.vcyclic(0, 0, y)), SparseVec::unit(x, Q));
        }
    }

    #[test]
    fn s2_wraparound_face_on_group_likes() {
        // u = (0,1) at index 1, v = (1,0) at index 2; σ(u,v) = −1, σ(v,u) = 1
        let c = s2();
        let (u, v) = (1, 2);
        let uv = 3; // u·v = (1,1)
        // d_1(v, u | 1) = σ(v, u)·(u v | 1) via d_0 t, and t(v,u|1) = (u,v|1)
        let x = c.shape(1, 0).encode(&[v, u, 0]);
        assert_eq!(c.hface(1, 0, 1, x), SparseVec::single(uv, -Q.one()));
        let y = c.shape(1, 0).encode(&[u, v, 0]);
        assert_eq!(c.hface(1, 0, 1, y), SparseVec::single(uv, Q.one()));
        assert_eq!(c.hface(1, 0, 0, y), SparseVec::single(uv, -Q.one()));
    }

    #[test]
    fn every_scenario_is_cylindrical() {
        for (name, c) in all() {
            assert_eq!(check_cylindrical(&c, 2, 2), Ok(()), "{name}");
        }
    }

    #[test]
    fn diagonal_is_cyclic() {
        for (name, c) in all() {
            let d = c.diagonal();
            assert_eq!(d.dim(1), (c.dim_h() * c.dim_a()).pow(2), "{name}");
            assert_eq!(check_cyclic(&d, 2), Ok(()), "{name}");
        }
    }

    #[test]
    fn s3_rows_are_paracyclic_not_cyclic() {
        let c = s3();
        let row = c.row(0);
        assert!(crate::cyclic::check_cyclicity(&row, 1).is_err());
        assert_eq!(check_paracyclic(&row, 2), Ok(()));
    }

    #[test]
    fn perturbed_cocycle_breaks_the_face_identity() {
        let (act, c) = s2_parts();
        for h in 0..4 {
            for l in 0..4 {
                let bad = c.perturbed(h, l, -c.basis(h, l).clone());
                let cyl = HopfCrossedCylinder::new_unchecked(act.clone(), bad);
                let err = check_cylindrical(&cyl, 2, 0).unwrap_err();
                assert_eq!(err.axiom, "d_id_{i+1}=d_id_i", "σ({h},{l})");
            }
        }
    }

    #[test]
    fn scaled_action_is_caught() {
        // doubling the action of g on the dual numbers breaks the paracyclic column
        let c = s5();
        let mut table = c.action().table().to_vec();
        table[3] = table[3].scaled(&Q.from_i64(2));
        let act = ActionMap::from_table(Arc::clone(c.hopf()), Arc::clone(c.action().algebra()), table).unwrap();
        let bad = HopfCrossedCylinder::new_unchecked(act, c.cocycle().clone());
        assert!(check_cylindrical(&bad, 1, 1).is_err());
    }
}
