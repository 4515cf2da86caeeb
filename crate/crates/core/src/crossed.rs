//! Weak actions, scalar 2-cocycles, and the crossed product `A #_σ H`.

use std::sync::Arc;

use crate::algebra::{validate_algebra, FinDimAlgebra, FiniteGroup};
use crate::error::{Error, Result, Violation};
use crate::field::Scalar;
use crate::hopf::{is_cocommutative, HopfAlgebra};
use crate::linalg::{solve_linear, Accumulator, SparseMatrix, SparseVec};

/// `h ⊗ a ↦ h(a)`, stored as `table[h * dim A + a]`.
#[derive(Clone, Debug)]
pub struct ActionMap {
    hopf: Arc<HopfAlgebra>,
    algebra: Arc<FinDimAlgebra>,
    table: Vec<SparseVec>,
}

impl ActionMap {
    pub fn from_table(
        hopf: Arc<HopfAlgebra>,
        algebra: Arc<FinDimAlgebra>,
        table: Vec<SparseVec>,
    ) -> Result<Self> {
        let (dh, da) = (hopf.dim(), algebra.dim());
        if table.len() != dh * da {
            return Err(Error::DimensionMismatch(format!(
                "action table needs {} entries, got {}",
                dh * da,
                table.len()
            )));
        }
        if table.iter().any(|v| v.max_index().map_or(false, |i| i >= da)) {
            return Err(Error::DimensionMismatch("action value out of range".into()));
        }
        if hopf.field() != algebra.field() {
            return Err(Error::Input("Hopf algebra and algebra live over different fields".into()));
        }
        Ok(ActionMap {
            hopf,
            algebra,
            table,
        })
    }

    /// `h(a) = ε(h) a`.
    pub fn trivial(hopf: Arc<HopfAlgebra>, algebra: Arc<FinDimAlgebra>) -> Self {
        let (dh, da) = (hopf.dim(), algebra.dim());
        let table = (0..dh * da)
            .map(|k| SparseVec::single(k % da, hopf.counit_basis(k / da).clone()))
            .collect();
        ActionMap {
            hopf,
            algebra,
            table,
        }
    }

    /// `g(e_a) = e_{perm[g][a]}` for a Hopf algebra with group-like basis.
    pub fn permutation(
        hopf: Arc<HopfAlgebra>,
        algebra: Arc<FinDimAlgebra>,
        perm: &[Vec<usize>],
    ) -> Result<Self> {
        let (dh, da) = (hopf.dim(), algebra.dim());
        if !hopf.is_group_like_basis() {
            return Err(Error::Input("permutation actions need a group-like basis".into()));
        }
        if perm.len() != dh || perm.iter().any(|p| p.len() != da || p.iter().any(|&x| x >= da)) {
            return Err(Error::Input(format!(
                "permutation action needs {dh} rows of {da} indices below {da}"
            )));
        }
        let f = algebra.field();
        let table = (0..dh * da)
            .map(|k| SparseVec::unit(perm[k / da][k % da], f))
            .collect();
        Self::from_table(hopf, algebra, table)
    }

    /// The translation action of `kG` on `k^G`: `g(δ_x) = δ_{gx}`.
    pub fn translation(
        hopf: Arc<HopfAlgebra>,
        algebra: Arc<FinDimAlgebra>,
        group: &FiniteGroup,
    ) -> Result<Self> {
        let n = group.order();
        if hopf.dim() != n || algebra.dim() != n {
            return Err(Error::DimensionMismatch(
                "translation needs H = kG and A = k^G for the same group".into(),
            ));
        }
        let perm: Vec<Vec<usize>> = (0..n)
            .map(|g| (0..n).map(|x| group.mul(g, x)).collect())
            .collect();
        Self::permutation(hopf, algebra, &perm)
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn algebra(&self) -> &Arc<FinDimAlgebra> {
        &self.algebra
    }

    pub fn table(&self) -> &[SparseVec] {
        &self.table
    }

    pub fn apply_basis(&self, h: usize, a: usize) -> &SparseVec {
        &self.table[h * self.algebra.dim() + a]
    }

    /// `h(a)` for basis `h` and an arbitrary element `a`.
    pub fn apply_to(&self, h: usize, a: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, c) in a.iter() {
            acc.add_vec(c, self.apply_basis(h, j));
        }
        acc.finish()
    }

    /// `h(a)` extended bilinearly.
    pub fn apply(&self, h: &SparseVec, a: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in h.iter() {
            for (j, y) in a.iter() {
                acc.add_vec(&(x * y), self.apply_basis(i, j));
            }
        }
        acc.finish()
    }

    fn labels(&self) -> (&[String], &[String]) {
        (self.hopf.algebra().labels(), self.algebra.labels())
    }
}

/// Measuring, unitality on both sides, and the module axiom, on all basis tuples.
pub fn validate_weak_action(act: &ActionMap) -> std::result::Result<(), Violation> {
    let h = act.hopf();
    let a = act.algebra();
    let (dh, da) = (h.dim(), a.dim());
    let f = a.field();
    let (hl, al) = act.labels();
    for i in 0..dh {
        let lhs = act.apply_to(i, a.unit());
        if lhs != a.unit().scaled(h.counit_basis(i)) {
            return Err(Violation::new("h(1)=ε(h)1", hl[i].clone()));
        }
    }
    for j in 0..da {
        if act.apply(h.unit(), &SparseVec::unit(j, f)) != SparseVec::unit(j, f) {
            return Err(Violation::new("1(a)=a", al[j].clone()));
        }
    }
    let measuring = crate::par::find_first(dh * da * da, |t| {
        let (i, j, k) = (t / (da * da), (t / da) % da, t % da);
        let lhs = act.apply_to(i, a.mul_basis(j, k));
        let mut rhs = Accumulator::new();
        for (c, legs) in h.legs(i, 2).iter() {
            let x = act.apply_basis(legs[0], j);
            let y = act.apply_basis(legs[1], k);
            rhs.add_vec(c, &a.mul(x, y));
        }
        (lhs != rhs.finish()).then(|| {
            Violation::new(
                "h(ab)=h(1)(a)h(2)(b)",
                format!("h={}, a={}, b={}", hl[i], al[j], al[k]),
            )
        })
    });
    if let Some(v) = measuring {
        return Err(v);
    }
    module_axiom(act)
}

fn module_axiom(act: &ActionMap) -> std::result::Result<(), Violation> {
    let h = act.hopf();
    let da = act.algebra().dim();
    let dh = h.dim();
    let (hl, al) = act.labels();
    let hit = crate::par::find_first(dh * dh * da, |t| {
        let (i, j, k) = (t / (dh * da), (t / da) % dh, t % da);
        let lhs = act.apply_to(i, act.apply_basis(j, k));
        let rhs = act.apply(h.algebra().mul_basis(i, j), &SparseVec::unit(k, act.algebra().field()));
        (lhs != rhs).then(|| {
            Violation::new(
                "h(l(a))=hl(a)",
                format!("h={}, l={}, a={}", hl[i], hl[j], al[k]),
            )
        })
    });
    match hit {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// A scalar bilinear form `σ` on `H ⊗ H` together with its convolution inverse.
#[derive(Clone, Debug)]
pub struct Cocycle {
    hopf: Arc<HopfAlgebra>,
    values: Vec<Scalar>,
    inverse: Vec<Scalar>,
}

/// Convolution product `(x ∗ y)(h, l) = x(h1, l1) y(h2, l2)` of tables on `H ⊗ H`.
pub fn convolution(hopf: &HopfAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = hopf.dim();
    (0..d * d)
        .map(|hl| {
            let mut s = hopf.field().zero();
            for (c, legs) in hopf.legs_of_tuple(&[hl / d, hl % d], 2) {
                let (h, l) = (&legs[0], &legs[1]);
                let t = &x[h[0] * d + l[0]] * &y[h[1] * d + l[1]];
                s = &s + &(&c * &t);
            }
            s
        })
        .collect()
}

/// `(h, l) ↦ ε(h) ε(l)`.
pub fn convolution_unit(hopf: &HopfAlgebra) -> Vec<Scalar> {
    let d = hopf.dim();
    (0..d * d)
        .map(|k| hopf.counit_basis(k / d) * hopf.counit_basis(k % d))
        .collect()
}

/// The two-sided convolution inverse, or `None` when it does not exist.
pub fn convolution_inverse(hopf: &HopfAlgebra, values: &[Scalar]) -> Option<Vec<Scalar>> {
    let d = hopf.dim();
    let f = hopf.field();
    if values.len() != d * d {
        return None;
    }
    // (σ ∗ X)(h, l) = Σ σ(h1, l1) X(h2, l2); one equation per (h, l), unknowns X(·,·)
    let rows: Vec<SparseVec> = (0..d * d)
        .map(|hl| {
            let mut acc = Accumulator::new();
            for (c, legs) in hopf.legs_of_tuple(&[hl / d, hl % d], 2) {
                let (h, l) = (&legs[0], &legs[1]);
                acc.add(h[1] * d + l[1], &(&c * &values[h[0] * d + l[0]]));
            }
            acc.finish()
        })
        .collect();
    let unit = convolution_unit(hopf);
    let rhs = SparseVec::from_dense(&unit);
    let x = solve_linear(&SparseMatrix::from_rows(d * d, rows), &rhs).ok()??;
    let x = x.to_dense(d * d, f);
    (convolution(hopf, &x, values) == unit && convolution(hopf, values, &x) == unit).then_some(x)
}

impl Cocycle {
    /// `σ(h, l) = ε(h) ε(l)`.
    pub fn trivial(hopf: Arc<HopfAlgebra>) -> Self {
        let values = convolution_unit(&hopf);
        Cocycle {
            hopf,
            inverse: values.clone(),
            values,
        }
    }

    /// Wraps a table `values[h * d + l]`, computing the convolution inverse.
    pub fn from_table(hopf: Arc<HopfAlgebra>, values: Vec<Scalar>) -> Result<Self> {
        let d = hopf.dim();
        if values.len() != d * d {
            return Err(Error::DimensionMismatch(format!(
                "cocycle table needs {} values, got {}",
                d * d,
                values.len()
            )));
        }
        let inverse = convolution_inverse(&hopf, &values)
            .ok_or_else(|| Error::Input("cocycle is not convolution invertible".into()))?;
        Ok(Cocycle {
            hopf,
            values,
            inverse,
        })
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn inverse_values(&self) -> &[Scalar] {
        &self.inverse
    }

    pub fn basis(&self, h: usize, l: usize) -> &Scalar {
        &self.values[h * self.hopf.dim() + l]
    }

    pub fn inv_basis(&self, h: usize, l: usize) -> &Scalar {
        &self.inverse[h * self.hopf.dim() + l]
    }

    fn pair(&self, table: &[Scalar], h: &SparseVec, l: &SparseVec) -> Scalar {
        let d = self.hopf.dim();
        let mut s = self.hopf.field().zero();
        for (i, x) in h.iter() {
            for (j, y) in l.iter() {
                s = &s + &(&(x * y) * &table[i * d + j]);
            }
        }
        s
    }

    /// `σ(h, l)` extended bilinearly.
    pub fn eval(&self, h: &SparseVec, l: &SparseVec) -> Scalar {
        self.pair(&self.values, h, l)
    }

    /// `σ⁻¹(h, l)` extended bilinearly.
    pub fn eval_inv(&self, h: &SparseVec, l: &SparseVec) -> Scalar {
        self.pair(&self.inverse, h, l)
    }

    /// A copy with one value replaced; the inverse is recomputed when it exists.
    pub fn perturbed(&self, h: usize, l: usize, value: Scalar) -> Cocycle {
        let mut values = self.values.clone();
        values[h * self.hopf.dim() + l] = value;
        let inverse = convolution_inverse(&self.hopf, &values).unwrap_or_else(|| self.inverse.clone());
        Cocycle {
            hopf: Arc::clone(&self.hopf),
            values,
            inverse,
        }
    }
}

/// Extends a normalized group 2-cocycle `c(x, y)` linearly to `kG ⊗ kG`.
pub fn lift_group_cocycle(
    group: &FiniteGroup,
    hopf: Arc<HopfAlgebra>,
    table: &[Scalar],
) -> Result<Cocycle> {
    let n = group.order();
    if hopf.dim() != n || !hopf.is_group_like_basis() || table.len() != n * n {
        return Err(Error::Input(format!(
            "group cocycle needs kG with |G| = {n} and an {n}x{n} table"
        )));
    }
    let labels = group.labels();
    let e = group.identity();
    let c = |x: usize, y: usize| &table[x * n + y];
    for x in 0..n {
        if !c(e, x).is_one() {
            return Err(Error::Input(format!(
                "normality: c(e,{})≠1",
                labels[x]
            )));
        }
        if !c(x, e).is_one() {
            return Err(Error::Input(format!(
                "normality: c({},e)≠1",
                labels[x]
            )));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if c(x, y).is_zero() {
                return Err(Error::Input(format!(
                    "group cocycle value c({},{}) is zero",
                    labels[x], labels[y]
                )));
            }
            for z in 0..n {
                let lhs = c(x, y) * c(group.mul(x, y), z);
                let rhs = c(y, z) * c(x, group.mul(y, z));
                if lhs != rhs {
                    return Err(Error::Input(format!(
                        "group cocycle identity fails at ({}, {}, {})",
                        labels[x], labels[y], labels[z]
                    )));
                }
            }
        }
    }
    let inverse: Vec<Scalar> = table.iter().map(|v| v.inv().expect("nonzero")).collect();
    Ok(Cocycle {
        hopf,
        values: table.to_vec(),
        inverse,
    })
}

/// Normality, the cocycle property, the twisted module property and the
/// convolution-inverse identities.
pub fn validate_cocycle(c: &Cocycle, act: &ActionMap) -> std::result::Result<(), Violation> {
    let h = c.hopf();
    if !Arc::ptr_eq(h, act.hopf()) && **h != **act.hopf() {
        return Err(Violation::new("shared Hopf algebra", "cocycle and action"));
    }
    let d = h.dim();
    let f = h.field();
    let hl = h.algebra().labels();
    let e = |i: usize| SparseVec::unit(i, f);
    for i in 0..d {
        let eps = h.counit_basis(i);
        if &c.eval(&e(i), h.unit()) != eps || &c.eval(h.unit(), &e(i)) != eps {
            return Err(Violation::new("normality σ(h,1)=σ(1,h)=ε(h)", hl[i].clone()));
        }
    }
    // Σ h1(σ(l1,m1)) σ(h2, l2 m2) = Σ σ(h1,l1) σ(h2 l2, m); h acts on scalars through ε
    let cocycle = crate::par::find_first(d * d * d, |t| {
        let (i, j, k) = (t / (d * d), (t / d) % d, t % d);
        let mut lhs = f.zero();
        for (x, legs) in h.legs_of_tuple(&[i, j, k], 2) {
            let (hh, ll, mm) = (&legs[0], &legs[1], &legs[2]);
            let term = &(h.counit_basis(hh[0]) * c.basis(ll[0], mm[0]))
                * &c.eval(&e(hh[1]), h.algebra().mul_basis(ll[1], mm[1]));
            lhs = &lhs + &(&x * &term);
        }
        let mut rhs = f.zero();
        for (x, legs) in h.legs_of_tuple(&[i, j], 2) {
            let (hh, ll) = (&legs[0], &legs[1]);
            let term = c.basis(hh[0], ll[0]) * &c.eval(h.algebra().mul_basis(hh[1], ll[1]), &e(k));
            rhs = &rhs + &(&x * &term);
        }
        (lhs != rhs).then(|| {
            Violation::new(
                "cocycle property",
                format!("({}, {}, {})", hl[i], hl[j], hl[k]),
            )
        })
    });
    if let Some(v) = cocycle {
        return Err(v);
    }
    if let Some(v) = twisted_module_violation(c, act) {
        return Err(v);
    }
    let unit = convolution_unit(h);
    if convolution(h, c.values(), c.inverse_values()) != unit
        || convolution(h, c.inverse_values(), c.values()) != unit
    {
        return Err(Violation::new("σ∗σ⁻¹=σ⁻¹∗σ=ε⊗ε", "convolution algebra"));
    }
    Ok(())
}

/// `Σ h1(l1(a)) σ(h2, l2)` against `Σ σ(h1, l1) (h2 l2)(a)`.
fn twisted_module_violation(c: &Cocycle, act: &ActionMap) -> Option<Violation> {
    let h = c.hopf();
    let (d, da) = (h.dim(), act.algebra().dim());
    let (hl, al) = act.labels();
    crate::par::find_first(d * d * da, |t| {
        let (i, j, k) = (t / (d * da), (t / da) % d, t % da);
        let (lhs, rhs) = twisted_sides(c, act, i, j, k);
        (lhs != rhs).then(|| {
            Violation::new(
                "twisted module property",
                format!("h={}, l={}, a={}", hl[i], hl[j], al[k]),
            )
        })
    })
}

fn twisted_sides(c: &Cocycle, act: &ActionMap, i: usize, j: usize, k: usize) -> (SparseVec, SparseVec) {
    let h = c.hopf();
    let mut lhs = Accumulator::new();
    let mut rhs = Accumulator::new();
    for (x, legs) in h.legs_of_tuple(&[i, j], 2) {
        let (hh, ll) = (&legs[0], &legs[1]);
        let inner = act.apply_to(hh[0], act.apply_basis(ll[0], k));
        lhs.add_vec(&(&x * c.basis(hh[1], ll[1])), &inner);
        let hl2 = h.algebra().mul_basis(hh[1], ll[1]);
        let acted = act.apply(hl2, &SparseVec::unit(k, h.field()));
        rhs.add_vec(&(&x * c.basis(hh[0], ll[0])), &acted);
    }
    (lhs.finish(), rhs.finish())
}

/// Runs the weak-action-to-action argument on every basis triple:
/// `h(l(a)) = (F∗σ⁻¹)(h,l) = (G∗σ⁻¹)(h,l) = hl(a)`.
pub fn verify_action_upgrade(act: &ActionMap, c: &Cocycle) -> std::result::Result<(), Violation> {
    let h = c.hopf();
    let (d, da) = (h.dim(), act.algebra().dim());
    let (hl, al) = act.labels();
    let f = h.field();
    let hit = crate::par::find_first(d * d * da, |t| {
        let (i, j, k) = (t / (d * da), (t / da) % d, t % da);
        let mut f_conv = Accumulator::new();
        let mut g_conv = Accumulator::new();
        for (x, legs) in h.legs_of_tuple(&[i, j], 2) {
            let (hh, ll) = (&legs[0], &legs[1]);
            let (fv, gv) = twisted_sides(c, act, hh[0], ll[0], k);
            let w = &x * c.inv_basis(hh[1], ll[1]);
            f_conv.add_vec(&w, &fv);
            g_conv.add_vec(&w, &gv);
        }
        let (f_conv, g_conv) = (f_conv.finish(), g_conv.finish());
        let h_of_l = act.apply_to(i, act.apply_basis(j, k));
        let hl_of = act.apply(h.algebra().mul_basis(i, j), &SparseVec::unit(k, f));
        let at = || format!("h={}, l={}, a={}", hl[i], hl[j], al[k]);
        if h_of_l != f_conv {
            Some(Violation::new("h(l(a))=F∗σ⁻¹(h,l)", at()))
        } else if f_conv != g_conv {
            Some(Violation::new("F∗σ⁻¹=G∗σ⁻¹", at()))
        } else if g_conv != hl_of {
            Some(Violation::new("G∗σ⁻¹(h,l)=hl(a)", at()))
        } else {
            None
        }
    });
    match hit {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// `A #_σ H` with basis `a ⊗ h` at index `a * dim H + h`.
#[derive(Clone, Debug)]
pub struct CrossedProductAlgebra {
    pub product: FinDimAlgebra,
    pub action: ActionMap,
    pub cocycle: Cocycle,
}

impl CrossedProductAlgebra {
    pub fn index(&self, a: usize, h: usize) -> usize {
        a * self.action.hopf().dim() + h
    }

    pub fn embed_a(&self, a: &SparseVec) -> SparseVec {
        let dh = self.action.hopf().dim();
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in self.action.hopf().unit().iter() {
                acc.add(i * dh + j, &(x * y));
            }
        }
        acc.finish()
    }

    pub fn embed_h(&self, h: &SparseVec) -> SparseVec {
        let dh = self.action.hopf().dim();
        let mut acc = Accumulator::new();
        for (i, x) in self.action.algebra().unit().iter() {
            for (j, y) in h.iter() {
                acc.add(i * dh + j, &(x * y));
            }
        }
        acc.finish()
    }
}

/// `(a ⊗ h)(b ⊗ l) = a h1(b) σ(h2, l1) ⊗ h3 l2` on basis elements.
pub fn crossed_product_rule(act: &ActionMap, c: &Cocycle, a: usize, h: usize, b: usize, l: usize) -> SparseVec {
    let hopf = act.hopf();
    let alg = act.algebra();
    let dh = hopf.dim();
    let f = alg.field();
    let mut acc = Accumulator::new();
    for (x, hh) in hopf.legs(h, 3).iter() {
        let left = alg.mul(&SparseVec::unit(a, f), act.apply_basis(hh[0], b));
        if left.is_zero() {
            continue;
        }
        for (y, ll) in hopf.legs(l, 2).iter() {
            let coeff = &(x * y) * c.basis(hh[1], ll[0]);
            if coeff.is_zero() {
                continue;
            }
            let right = hopf.algebra().mul_basis(hh[2], ll[1]);
            for (i, u) in left.iter() {
                for (j, v) in right.iter() {
                    acc.add(i * dh + j, &(&coeff * &(u * v)));
                }
            }
        }
    }
    acc.finish()
}

/// Builds and independently re-validates `A #_σ H`.
pub fn build_crossed_product(act: &ActionMap, c: &Cocycle) -> Result<CrossedProductAlgebra> {
    validate_weak_action(act)?;
    validate_cocycle(c, act)?;
    if !is_cocommutative(act.hopf()) {
        return Err(Error::Violation(Violation::new(
            "cocommutativity",
            "coproduct table",
        )));
    }
    let hopf = act.hopf();
    let alg = act.algebra();
    let (dh, da) = (hopf.dim(), alg.dim());
    let n = dh * da;
    let table = crate::par::map_range(n * n, |k| {
        let (x, y) = (k / n, k % n);
        crossed_product_rule(act, c, x / dh, x % dh, y / dh, y % dh)
    });
    let labels = (0..n)
        .map(|x| format!("{}#{}", alg.labels()[x / dh], hopf.algebra().labels()[x % dh]))
        .collect();
    let mut unit = Accumulator::new();
    for (i, x) in alg.unit().iter() {
        for (j, y) in hopf.unit().iter() {
            unit.add(i * dh + j, &(x * y));
        }
    }
    let product = FinDimAlgebra::new(alg.field(), labels, table, unit.finish())?;
    validate_algebra(&product)?;
    Ok(CrossedProductAlgebra {
        product,
        action: act.clone(),
        cocycle: c.clone(),
    })
}

/// The smash product `(a ⊗ h)(b ⊗ l) = a h1(b) ⊗ h2 l`, written out independently.
pub fn smash_product_table(act: &ActionMap) -> Vec<SparseVec> {
    let hopf = act.hopf();
    let alg = act.algebra();
    let (dh, da) = (hopf.dim(), alg.dim());
    let f = alg.field();
    let n = dh * da;
    (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            let (a, h, b, l) = (x / dh, x % dh, y / dh, y % dh);
            let mut acc = Accumulator::new();
            for (c, legs) in hopf.legs(h, 2).iter() {
                let left = alg.mul(&SparseVec::unit(a, f), act.apply_basis(legs[0], b));
                let right = hopf.algebra().mul_basis(legs[1], l);
                for (i, u) in left.iter() {
                    for (j, v) in right.iter() {
                        acc.add(i * dh + j, &(c * &(u * v)));
                    }
                }
            }
            acc.finish()
        })
        .collect()
}
