//! Finite-dimensional Hopf algebras: axiom checks, Sweedler expansions,
//! cocommutativity, semisimplicity and integrals.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::algebra::{group_algebra, ground_algebra, AlgElement, FinDimAlgebra, FiniteGroup};
use crate::error::{Error, Result, Violation};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{mat_rank, solve_linear, Accumulator, SparseMatrix, SparseVec};

/// Terms of `Δ^{(n)}(h)`: each term is a coefficient and one basis index per leg.
pub type Terms = Vec<(Scalar, Vec<usize>)>;

/// `Δ^{(n)}(x)` as an explicit, sorted sum of pure tensors with `n + 1` legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerExpansion {
    pub legs: usize,
    pub terms: Terms,
}

pub struct HopfAlgebra {
    algebra: FinDimAlgebra,
    coproduct: Vec<SparseVec>,
    counit: Vec<Scalar>,
    antipode: Vec<SparseVec>,
    expansions: RwLock<HashMap<(usize, usize), Arc<Terms>>>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra {
            algebra: self.algebra.clone(),
            coproduct: self.coproduct.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            expansions: RwLock::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfAlgebra")
            .field("algebra", &self.algebra)
            .field("coproduct", &self.coproduct)
            .field("counit", &self.counit)
            .field("antipode", &self.antipode)
            .finish()
    }
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.coproduct == other.coproduct
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl HopfAlgebra {
    /// `coproduct[i]` is `Δ(e_i)` in the basis `e_j ⊗ e_k` (index `j * d + k`).
    /// Only shapes are checked here; see [`validate_hopf`].
    pub fn new(
        algebra: FinDimAlgebra,
        coproduct: Vec<SparseVec>,
        counit: Vec<Scalar>,
        antipode: Vec<SparseVec>,
    ) -> Result<Self> {
        let d = algebra.dim();
        if coproduct.len() != d || counit.len() != d || antipode.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "Hopf tables must have one entry per basis vector ({d})"
            )));
        }
        if coproduct.iter().any(|v| v.max_index().map_or(false, |i| i >= d * d))
            || antipode.iter().any(|v| v.max_index().map_or(false, |i| i >= d))
        {
            return Err(Error::DimensionMismatch("Hopf table index out of range".into()));
        }
        Ok(HopfAlgebra {
            algebra,
            coproduct,
            counit,
            antipode,
            expansions: RwLock::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn unit(&self) -> &SparseVec {
        self.algebra.unit()
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.algebra.mul(x, y)
    }

    pub fn coproduct_basis(&self, i: usize) -> &SparseVec {
        &self.coproduct[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.antipode[i]
    }

    pub fn coproduct(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            acc.add_vec(c, &self.coproduct[i]);
        }
        acc.finish()
    }

    pub fn counit(&self, x: &SparseVec) -> Scalar {
        let mut s = self.field().zero();
        for (i, c) in x.iter() {
            s = &s + &(c * &self.counit[i]);
        }
        s
    }

    pub fn antipode(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            acc.add_vec(c, &self.antipode[i]);
        }
        acc.finish()
    }

    /// Index of the unit when it is a basis vector (true for every constructor here).
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit();
        (u.nnz() == 1 && u.leading().map_or(false, |(_, c)| c.is_one()))
            .then(|| u.leading().unwrap().0)
    }

    /// Cached `Δ^{(legs-1)}(e_i)`; `legs = 1` is `e_i` itself.
    pub fn legs(&self, i: usize, legs: usize) -> Arc<Terms> {
        assert!(legs >= 1);
        if let Some(t) = self.expansions.read().unwrap().get(&(i, legs)) {
            return Arc::clone(t);
        }
        let terms = if legs == 1 {
            vec![(self.field().one(), vec![i])]
        } else {
            let prev = self.legs(i, legs - 1);
            let d = self.dim();
            let mut acc: HashMap<Vec<usize>, Scalar> = HashMap::new();
            for (c, idx) in prev.iter() {
                for (jk, x) in self.coproduct[idx[0]].iter() {
                    let mut key = Vec::with_capacity(legs);
                    key.push(jk / d);
                    key.push(jk % d);
                    key.extend_from_slice(&idx[1..]);
                    let v = c * x;
                    let e = acc.entry(key).or_insert_with(|| self.field().zero());
                    *e = &*e + &v;
                }
            }
            let mut t: Terms = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c, k))
                .collect();
            t.sort_by(|a, b| a.1.cmp(&b.1));
            t
        };
        let terms = Arc::new(terms);
        self.expansions
            .write()
            .unwrap()
            .insert((i, legs), Arc::clone(&terms));
        terms
    }

    /// Joint expansion of several basis elements, each split into `legs` legs.
    /// Each term carries `out[k][j]`: leg `j` of element `k`.
    pub fn legs_of_tuple(&self, elems: &[usize], legs: usize) -> Vec<(Scalar, Vec<Vec<usize>>)> {
        let mut out: Vec<(Scalar, Vec<Vec<usize>>)> = vec![(self.field().one(), Vec::new())];
        for &g in elems {
            let t = self.legs(g, legs);
            let mut next = Vec::with_capacity(out.len() * t.len());
            for (c, prefix) in &out {
                for (x, idx) in t.iter() {
                    let mut p = prefix.clone();
                    p.push(idx.clone());
                    next.push((c * x, p));
                }
            }
            out = next;
        }
        out
    }

    /// Left-to-right product of basis elements.
    pub fn product_of(&self, basis: impl IntoIterator<Item = usize>) -> SparseVec {
        let f = self.field();
        basis
            .into_iter()
            .fold(self.unit().clone(), |acc, i| self.mul(&acc, &SparseVec::unit(i, f)))
    }

    /// Basis elements that are group-like: `Δ(g) = g ⊗ g`, `ε(g) = 1`.
    pub fn is_group_like_basis(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            self.coproduct[i] == SparseVec::unit(i * d + i, self.field()) && self.counit[i].is_one()
        })
    }
}

fn tensor_square_mul(h: &HopfAlgebra, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let d = h.dim();
    let mut acc = Accumulator::new();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            let left = h.algebra().mul_basis(i / d, j / d);
            let right = h.algebra().mul_basis(i % d, j % d);
            let c = a * b;
            for (k, u) in left.iter() {
                for (l, v) in right.iter() {
                    acc.add(k * d + l, &(&c * &(u * v)));
                }
            }
        }
    }
    acc.finish()
}

/// Applies `f ⊗ g` to a vector of `V ⊗ V` (`dim V = d`); `g` lands in a space of dimension `db`.
fn map_tensor_square(
    x: &SparseVec,
    d: usize,
    db: usize,
    f: impl Fn(usize) -> SparseVec,
    g: impl Fn(usize) -> SparseVec,
) -> SparseVec {
    let mut acc = Accumulator::new();
    for (ij, c) in x.iter() {
        let (u, v) = (f(ij / d), g(ij % d));
        for (k, a) in u.iter() {
            for (l, b) in v.iter() {
                acc.add(k * db + l, &(c * &(a * b)));
            }
        }
    }
    acc.finish()
}

/// Checks coassociativity, counit laws, multiplicativity of `Δ` and `ε`, and the
/// antipode law on every basis vector.
pub fn validate_hopf(h: &HopfAlgebra) -> std::result::Result<(), Violation> {
    crate::algebra::validate_algebra(h.algebra())?;
    let d = h.dim();
    let f = h.field();
    let label = |i: usize| h.algebra().labels()[i].clone();
    let unit_vec = |i: usize| SparseVec::unit(i, f);
    for i in 0..d {
        let delta = h.coproduct_basis(i);
        // (Δ ⊗ 1)Δ = (1 ⊗ Δ)Δ, both in H⊗H⊗H indexed (a*d + b)*d + c
        let left = map_tensor_square(delta, d, d, |a| h.coproduct_basis(a).clone(), unit_vec);
        let right = map_tensor_square(delta, d, d * d, unit_vec, |b| h.coproduct_basis(b).clone());
        if left != right {
            return Err(Violation::new("coassociativity", label(i)));
        }
        let scal = |j: usize| SparseVec::single(0, h.counit_basis(j).clone());
        let eps_left = map_tensor_square(delta, d, d, scal, unit_vec);
        let eps_right = map_tensor_square(delta, d, 1, unit_vec, scal);
        if eps_left != unit_vec(i) || eps_right != unit_vec(i) {
            return Err(Violation::new("counit law", label(i)));
        }
        let mut sl = Accumulator::new();
        let mut sr = Accumulator::new();
        for (jk, c) in delta.iter() {
            let (j, k) = (jk / d, jk % d);
            sl.add_vec(c, &h.mul(h.antipode_basis(j), &unit_vec(k)));
            sr.add_vec(c, &h.mul(&unit_vec(j), h.antipode_basis(k)));
        }
        let expected = h.unit().scaled(h.counit_basis(i));
        if sl.finish() != expected || sr.finish() != expected {
            return Err(Violation::new("antipode law", label(i)));
        }
    }
    let one = h.unit();
    let one_one = map_tensor_square(&SparseVec::unit(0, f), 1, d, |_| one.clone(), |_| one.clone());
    if h.coproduct(one) != one_one {
        return Err(Violation::new("coproduct is an algebra map", "unit"));
    }
    if !h.counit(one).is_one() {
        return Err(Violation::new("counit is an algebra map", "unit"));
    }
    let hit = crate::par::find_first(d * d, |ij| {
        let (i, j) = (ij / d, ij % d);
        let prod = h.algebra().mul_basis(i, j);
        let lhs = h.coproduct(prod);
        let rhs = tensor_square_mul(h, h.coproduct_basis(i), h.coproduct_basis(j));
        if lhs != rhs {
            return Some(Violation::new(
                "coproduct is an algebra map",
                format!("({}, {})", label(i), label(j)),
            ));
        }
        if h.counit(prod) != h.counit_basis(i) * h.counit_basis(j) {
            return Some(Violation::new(
                "counit is an algebra map",
                format!("({}, {})", label(i), label(j)),
            ));
        }
        None
    });
    match hit {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// `Δ^{(n)}(x)` with `n + 1` legs; `n = 0` is `x`.
pub fn iterated_coproduct(h: &HopfAlgebra, x: &AlgElement, n: usize) -> Result<SweedlerExpansion> {
    if x.dim() != h.dim() {
        return Err(Error::DimensionMismatch(format!(
            "element of dimension {} in a Hopf algebra of dimension {}",
            x.dim(),
            h.dim()
        )));
    }
    let mut acc: HashMap<Vec<usize>, Scalar> = HashMap::new();
    for (i, c) in x.vector().iter() {
        for (t, idx) in h.legs(i, n + 1).iter() {
            let e = acc.entry(idx.clone()).or_insert_with(|| h.field().zero());
            *e = &*e + &(c * t);
        }
    }
    let mut terms: Terms = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (c, k))
        .collect();
    terms.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(SweedlerExpansion { legs: n + 1, terms })
}

impl SweedlerExpansion {
    /// Applies `ε` to leg `k`, giving an expansion with one leg fewer.
    pub fn collapse_leg(&self, h: &HopfAlgebra, k: usize) -> SweedlerExpansion {
        let mut acc: HashMap<Vec<usize>, Scalar> = HashMap::new();
        for (c, idx) in &self.terms {
            let mut key = idx.clone();
            let e = key.remove(k);
            let v = c * h.counit_basis(e);
            let slot = acc.entry(key).or_insert_with(|| h.field().zero());
            *slot = &*slot + &v;
        }
        let mut terms: Terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c, k))
            .collect();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        SweedlerExpansion {
            legs: self.legs - 1,
            terms,
        }
    }
}

pub fn is_cocommutative(h: &HopfAlgebra) -> bool {
    let d = h.dim();
    (0..d).all(|i| {
        let delta = h.coproduct_basis(i);
        delta.map_indices(|jk| (jk % d) * d + jk / d) == *delta
    })
}

/// Dickson's trace-form test in characteristic 0; Maschke for group algebras
/// in characteristic `p`.
pub fn is_semisimple(h: &HopfAlgebra) -> Result<bool> {
    let a = h.algebra();
    let d = a.dim();
    match h.field() {
        FieldSpec::Rationals => {
            let f = h.field();
            let trace_of_left_mul = |x: &SparseVec| {
                let mut t = f.zero();
                for k in 0..d {
                    if let Some(c) = a.mul(x, &SparseVec::unit(k, f)).get(k) {
                        t = &t + c;
                    }
                }
                t
            };
            let rows: Vec<SparseVec> = (0..d)
                .map(|i| {
                    SparseVec::from_pairs(
                        (0..d).map(|j| (j, trace_of_left_mul(a.mul_basis(i, j)))),
                    )
                })
                .collect();
            Ok(mat_rank(&SparseMatrix::from_rows(d, rows)) == d)
        }
        FieldSpec::PrimeField(p) => {
            if h.is_group_like_basis() {
                Ok(d as u64 % p != 0)
            } else {
                Err(Error::Unsupported(format!(
                    "semisimplicity in characteristic {p} is only decided for group algebras"
                )))
            }
        }
    }
}

/// The normalized left integral: `hΛ = ε(h)Λ` for all `h` and `ε(Λ) = 1`.
pub fn normalized_integral(h: &HopfAlgebra) -> Option<SparseVec> {
    let d = h.dim();
    let f = h.field();
    // unknowns Λ_k; equations (e_i Λ - ε(e_i) Λ)_m = 0 and ε(Λ) = 1
    let mut rows = Vec::new();
    for i in 0..d {
        let mut per_m: Vec<Accumulator> = (0..d).map(|_| Accumulator::new()).collect();
        for k in 0..d {
            let col = h
                .algebra()
                .mul_basis(i, k)
                .sub(&SparseVec::single(k, h.counit_basis(i).clone()));
            for (m, c) in col.iter() {
                per_m[m].add(k, c);
            }
        }
        rows.extend(per_m.into_iter().map(|a| a.finish()));
    }
    let n_eq = rows.len();
    rows.push(SparseVec::from_pairs((0..d).map(|k| (k, h.counit_basis(k).clone()))));
    let m = SparseMatrix::from_rows(d, rows);
    let lambda = solve_linear(&m, &SparseVec::unit(n_eq, f)).ok()??;
    Some(lambda)
}

/// `kG` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_hopf(field: FieldSpec, g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    HopfAlgebra::new(
        group_algebra(field, g),
        (0..n).map(|x| SparseVec::unit(x * n + x, field)).collect(),
        vec![field.one(); n],
        (0..n).map(|x| SparseVec::unit(g.inv(x), field)).collect(),
    )
    .expect("group Hopf tables")
}

/// `k^G`: `Δ(δ_x) = Σ_{yz=x} δ_y ⊗ δ_z`, `ε(δ_x) = [x = e]`, `S(δ_x) = δ_{x⁻¹}`.
/// Cocommutative exactly when `G` is abelian.
pub fn dual_group_hopf(field: FieldSpec, g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let coproduct = (0..n)
        .map(|x| {
            SparseVec::from_pairs(
                (0..n)
                    .map(|y| (y, g.mul(g.inv(y), x)))
                    .map(|(y, z)| (y * n + z, field.one())),
            )
        })
        .collect();
    let counit = (0..n)
        .map(|x| if x == g.identity() { field.one() } else { field.zero() })
        .collect();
    let antipode = (0..n).map(|x| SparseVec::unit(g.inv(x), field)).collect();
    HopfAlgebra::new(
        crate::algebra::function_algebra(field, g),
        coproduct,
        counit,
        antipode,
    )
    .expect("dual group Hopf tables")
}

/// Sweedler's four-dimensional Hopf algebra (basis `1, g, x, gx`); needs odd characteristic or 0.
pub fn sweedler_hopf(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("Sweedler's algebra needs characteristic != 2".into()));
    }
    let f = field;
    let e = |i: usize| SparseVec::unit(i, f);
    let neg = |i: usize| SparseVec::single(i, -f.one());
    let z = SparseVec::zero;
    // rows: left factor 1, g, x, gx; columns likewise
    let table = vec![
        e(0), e(1), e(2), e(3),
        e(1), e(0), e(3), e(2),
        e(2), neg(3), z(), z(),
        e(3), neg(2), z(), z(),
    ];
    let alg = FinDimAlgebra::new(
        f,
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        table,
        e(0),
    )?;
    let t = |a: usize, b: usize| a * 4 + b;
    let coproduct = vec![
        e(t(0, 0)),
        e(t(1, 1)),
        SparseVec::from_pairs([(t(2, 0), f.one()), (t(1, 2), f.one())]),
        SparseVec::from_pairs([(t(3, 1), f.one()), (t(0, 3), f.one())]),
    ];
    let counit = vec![f.one(), f.one(), f.zero(), f.zero()];
    let antipode = vec![e(0), e(1), neg(3), e(2)];
    HopfAlgebra::new(alg, coproduct, counit, antipode)
}

/// The ground field as a Hopf algebra.
pub fn trivial_hopf(field: FieldSpec) -> HopfAlgebra {
    HopfAlgebra::new(
        ground_algebra(field),
        vec![SparseVec::unit(0, field)],
        vec![field.one()],
        vec![SparseVec::unit(0, field)],
    )
    .expect("trivial Hopf tables")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn group_hopf_validates() {
        for g in [
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::by_name("C2xC2").unwrap(),
            FiniteGroup::symmetric3(),
        ] {
            let h = group_hopf(Q, &g);
            assert_eq!(validate_hopf(&h), Ok(()));
            assert!(is_cocommutative(&h));
        }
        assert_eq!(validate_hopf(&group_hopf(FieldSpec::PrimeField(2), &FiniteGroup::cyclic(2))), Ok(()));
    }

    #[test]
    fn antipodes_of_small_groups() {
        let c2 = group_hopf(Q, &FiniteGroup::cyclic(2));
        assert_eq!(c2.antipode_basis(1), &SparseVec::unit(1, Q));
        let c3 = group_hopf(Q, &FiniteGroup::cyclic(3));
        assert_eq!(c3.antipode_basis(1), &SparseVec::unit(2, Q));
        let s3 = group_hopf(Q, &FiniteGroup::symmetric3());
        for t in 1..=3 {
            assert_eq!(s3.antipode_basis(t), &SparseVec::unit(t, Q));
        }
    }

    #[test]
    fn wrong_antipode_is_caught() {
        let g = group_hopf(Q, &FiniteGroup::cyclic(2));
        let bad = HopfAlgebra::new(
            g.algebra().clone(),
            (0..2).map(|i| g.coproduct_basis(i).clone()).collect(),
            vec![Q.one(), Q.one()],
            vec![SparseVec::unit(0, Q), SparseVec::unit(0, Q)],
        )
        .unwrap();
        assert_eq!(validate_hopf(&bad).unwrap_err().axiom, "antipode law");
    }

    #[test]
    fn sweedler_is_a_noncocommutative_hopf_algebra() {
        let h = sweedler_hopf(Q).unwrap();
        assert_eq!(validate_hopf(&h), Ok(()));
        // Δ(x) = x⊗1 + g⊗x differs from its flip 1⊗x + x⊗g
        let flipped = h.coproduct_basis(2).map_indices(|jk| (jk % 4) * 4 + jk / 4);
        assert_ne!(&flipped, h.coproduct_basis(2));
        assert!(!is_cocommutative(&h));
    }

    #[test]
    fn dual_group_is_cocommutative_for_abelian_groups() {
        let h = dual_group_hopf(Q, &FiniteGroup::cyclic(3));
        assert_eq!(validate_hopf(&h), Ok(()));
        assert!(is_cocommutative(&h));
        let s3 = dual_group_hopf(Q, &FiniteGroup::symmetric3());
        assert_eq!(validate_hopf(&s3), Ok(()));
        assert!(!is_cocommutative(&s3));
    }

    #[test]
    fn group_like_expansions() {
        let h = group_hopf(Q, &FiniteGroup::cyclic(2));
        let g = AlgElement::basis(2, 1, Q);
        let e3 = iterated_coproduct(&h, &g, 2).unwrap();
        assert_eq!(e3.terms, vec![(Q.one(), vec![1, 1, 1])]);
        let delta = iterated_coproduct(&h, &g, 1).unwrap();
        assert_eq!(delta.terms, vec![(Q.one(), vec![1, 1])]);
        let sum = AlgElement::from_coords(&[Q.one(), Q.one()]);
        let s = iterated_coproduct(&h, &sum, 2).unwrap();
        assert_eq!(s.terms, vec![(Q.one(), vec![0, 0, 0]), (Q.one(), vec![1, 1, 1])]);
    }

    #[test]
    fn semisimplicity() {
        assert!(is_semisimple(&group_hopf(Q, &FiniteGroup::cyclic(2))).unwrap());
        assert!(is_semisimple(&trivial_hopf(Q)).unwrap());
        let f2 = FieldSpec::PrimeField(2);
        assert!(!is_semisimple(&group_hopf(f2, &FiniteGroup::cyclic(2))).unwrap());
        assert!(is_semisimple(&group_hopf(FieldSpec::PrimeField(3), &FiniteGroup::cyclic(2))).unwrap());
        assert!(!is_semisimple(&sweedler_hopf(Q).unwrap()).unwrap());
        assert!(matches!(
            is_semisimple(&dual_group_hopf(FieldSpec::PrimeField(3), &FiniteGroup::cyclic(2))),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn trace_radical_of_f2c2_is_spanned_by_e_plus_g() {
        // the oracle: over F2 the element e+g squares to zero and is central
        let f2 = FieldSpec::PrimeField(2);
        let a = group_algebra(f2, &FiniteGroup::cyclic(2));
        let n = SparseVec::from_pairs([(0, f2.one()), (1, f2.one())]);
        assert!(a.mul(&n, &n).is_zero());
    }

    #[test]
    fn integrals() {
        let h = group_hopf(Q, &FiniteGroup::cyclic(2));
        let half = Q.parse_scalar("1/2").unwrap();
        assert_eq!(
            normalized_integral(&h),
            Some(SparseVec::from_pairs([(0, half.clone()), (1, half)]))
        );
        let d = dual_group_hopf(Q, &FiniteGroup::cyclic(3));
        assert_eq!(normalized_integral(&d), Some(SparseVec::unit(0, Q)));
        assert_eq!(normalized_integral(&group_hopf(FieldSpec::PrimeField(2), &FiniteGroup::cyclic(2))), None);
    }

    fn hopf_zoo() -> Vec<HopfAlgebra> {
        vec![
            group_hopf(Q, &FiniteGroup::symmetric3()),
            dual_group_hopf(Q, &FiniteGroup::by_name("C2xC2").unwrap()),
            sweedler_hopf(Q).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn collapsing_a_leg_drops_one_coproduct(which in 0usize..3, basis in 0usize..4, n in 1usize..4, leg in 0usize..4) {
            let h = &hopf_zoo()[which];
            let i = basis % h.dim();
            let x = AlgElement::basis(h.dim(), i, Q);
            let big = iterated_coproduct(h, &x, n).unwrap();
            let small = iterated_coproduct(h, &x, n - 1).unwrap();
            prop_assert_eq!(big.collapse_leg(h, leg % (n + 1)), small);
        }

        #[test]
        fn antipode_is_an_involution_when_cocommutative(basis in 0usize..6) {
            let h = group_hopf(Q, &FiniteGroup::symmetric3());
            let x = SparseVec::unit(basis, Q);
            prop_assert_eq!(h.antipode(&h.antipode(&x)), x);
        }
    }
}
