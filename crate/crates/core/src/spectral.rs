//! The column filtration of `Tot`, the pages `E¹` and `E²`, the invariant
//! complex `N₀` and the semisimple collapse comparison.

use std::sync::Arc;

use serde::Serialize;

use crate::crossed::build_crossed_product;
use crate::cyclic::{
    check_cyclicity, check_paracyclic, hochschild_homology, normalized_mixed_complex, AlgebraCyclic, Normalization, Paracyclic,
};
use crate::cylinder::{tot_mixed_complex, HopfCrossedCylinder, HopfHomologyComplex, LeftModule, MqAction};
use crate::error::{check_cap, Error, Result, Violation};
use crate::field::FieldSpec;
use crate::hopf::{is_semisimple, normalized_integral};
use crate::linalg::{
    apply_linear, induced_map_fn, kernel_basis, mat_rank, quotient_space, QuotientSpace, SparseMatrix, SparseVec,
    Subquotient, Subspace,
};

/// Both `Tot` differentials map `F^i` into `F^i` through `max_degree`.
pub fn filtration_check(cyl: &HopfCrossedCylinder, max_degree: usize, cap: usize) -> Result<()> {
    let tot = tot_mixed_complex(cyl, max_degree, cap)?;
    crate::cylinder::filtration_check(&tot, max_degree)?;
    Ok(())
}

/// Entry dimensions of one page, `entries[p][q]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralPage {
    pub page: usize,
    pub entries: Vec<Vec<usize>>,
}

impl SpectralPage {
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.entries[p][q]
    }

    pub fn max_p(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn max_q(&self) -> usize {
        self.entries[0].len() - 1
    }
}

/// `E¹_{p,q}` as row homology of the horizontally normalized cylinder and as
/// `H_p(H; M_q)`; the two must agree entrywise.
pub fn compute_e1(cyl: &HopfCrossedCylinder, max_p: usize, max_q: usize, cap: usize) -> Result<SpectralPage> {
    let columns = crate::par::map_range(max_q + 1, |q| -> Result<Vec<usize>> {
        let rows = hochschild_homology(&cyl.row(q), max_p, cap)?.dims;
        let module = MqAction { cyl, q };
        let hopf = HopfHomologyComplex {
            hopf: cyl.hopf(),
            module: &module,
        };
        let via_hopf = hopf.homology(max_p, cap)?.dims;
        if let Some(p) = (0..=max_p).find(|&p| rows[p] != via_hopf[p]) {
            return Err(Violation::new(
                "E¹: row homology = Hopf homology",
                format!("(p,q)=({p},{q}): {} vs {}", rows[p], via_hopf[p]),
            )
            .into());
        }
        Ok(rows)
    });
    let columns: Vec<Vec<usize>> = columns.into_iter().collect::<Result<_>>()?;
    let entries = (0..=max_p).map(|p| columns.iter().map(|c| c[p]).collect()).collect();
    Ok(SpectralPage { page: 1, entries })
}

/// `N_p = {H_p(row_q)}_q` with the vertical operators induced on homology.
#[derive(Clone, Debug)]
pub struct ColumnCyclicModule {
    pub p: usize,
    field: FieldSpec,
    carriers: Vec<Subquotient>,
    faces: Vec<Vec<Vec<SparseVec>>>,
    degeneracies: Vec<Vec<Vec<SparseVec>>>,
    cyclic: Vec<Vec<SparseVec>>,
}

impl ColumnCyclicModule {
    /// Highest vertical degree carried.
    pub fn top(&self) -> usize {
        self.carriers.len() - 1
    }

    pub fn carrier(&self, q: usize) -> &Subquotient {
        &self.carriers[q]
    }
}

impl Paracyclic for ColumnCyclicModule {
    fn field(&self) -> FieldSpec {
        self.field
    }

    fn dim(&self, n: usize) -> usize {
        self.carriers[n].dim()
    }

    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.faces[n][i][x].clone()
    }

    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.degeneracies[n][i][x].clone()
    }

    fn cyclic(&self, n: usize, x: usize) -> SparseVec {
        self.cyclic[n][x].clone()
    }
}

struct RowHomology {
    quotient: QuotientSpace,
    homology: Subquotient,
}

fn row_homology(cyl: &HopfCrossedCylinder, p: usize, q: usize, cap: usize) -> Result<RowHomology> {
    let row = cyl.row(q);
    let norm = Normalization::of(&row, p + 1, cap)?;
    let dims = norm.dims();
    let d_out = if p == 0 {
        SparseMatrix::zero(0, dims[0])
    } else {
        norm.induce(p, p - 1, "b̄", |x| row.hochschild_b(p, x))?
    };
    let d_in = norm.induce(p + 1, p, "b̄", |x| row.hochschild_b(p + 1, x))?;
    let homology = Subquotient::homology(dims[p], &d_out, &d_in, cyl.field())?;
    let quotient = norm.quotients.into_iter().nth(p).expect("degree p normalized");
    Ok(RowHomology { quotient, homology })
}

fn induce_vertical(
    src: &RowHomology,
    dst: &RowHomology,
    what: &str,
    p: usize,
    q: usize,
    f: impl Fn(usize) -> SparseVec,
) -> Result<Vec<SparseVec>> {
    let not_well_defined = |stage: &str, row: usize| {
        Error::NotWellDefined(format!("{what} at (p,q)=({p},{q}) on {stage} (denominator vector {row})"))
    };
    let on_quotient =
        induced_map_fn(&src.quotient, &dst.quotient, f).map_err(|e| not_well_defined("normalized rows", e.denominator_row))?;
    let columns = on_quotient.column_vectors();
    let on_homology = src
        .homology
        .induced(&dst.homology, |i| columns[i].clone())
        .map_err(|e| not_well_defined("row homology", e.denominator_row))?;
    Ok(on_homology.column_vectors())
}

/// The column `N_p` through vertical degree `max_q + 2`, every operator
/// induced with well-definedness checked; the cyclic relations are verified
/// through `max_q` and `τ^{q+1} = id` through `max_q + 1`.
pub fn induced_column_cyclic(
    cyl: &HopfCrossedCylinder,
    p: usize,
    max_q: usize,
    cap: usize,
) -> Result<ColumnCyclicModule> {
    let top = max_q + 2;
    let rows = crate::par::map_range(top + 1, |q| row_homology(cyl, p, q, cap));
    let rows: Vec<RowHomology> = rows.into_iter().collect::<Result<_>>()?;
    let mut faces = vec![Vec::new()];
    let mut degeneracies = Vec::new();
    let mut cyclic = Vec::new();
    for q in 0..=top {
        if q >= 1 {
            let fs = (0..=q)
                .map(|i| induce_vertical(&rows[q], &rows[q - 1], &format!("δ_{i}"), p, q, |x| cyl.vface(p, q, i, x)))
                .collect::<Result<Vec<_>>>()?;
            faces.push(fs);
        }
        if q < top {
            let ds = (0..=q)
                .map(|i| induce_vertical(&rows[q], &rows[q + 1], &format!("σ_{i}"), p, q, |x| cyl.vdegen(p, q, i, x)))
                .collect::<Result<Vec<_>>>()?;
            degeneracies.push(ds);
        }
        cyclic.push(induce_vertical(&rows[q], &rows[q], "τ", p, q, |x| cyl.vcyclic(p, q, x))?);
    }
    let column = ColumnCyclicModule {
        p,
        field: cyl.field(),
        carriers: rows.into_iter().map(|r| r.homology).collect(),
        faces,
        degeneracies,
        cyclic,
    };
    verify_cyclic(&column, max_q, &format!("column p={p}"))?;
    Ok(column)
}

fn verify_cyclic(m: &dyn Paracyclic, max_q: usize, what: &str) -> Result<()> {
    check_paracyclic(m, max_q)
        .and_then(|_| check_cyclicity(m, max_q + 1))
        .map_err(|v| Violation::new(v.axiom, format!("{what}, {}", v.location)).into())
}

/// `HC_q` of a cyclic module through `max_degree`, with the mixed-complex identities checked.
fn cyclic_homology_of(m: &dyn Paracyclic, max_degree: usize, cap: usize, what: &str) -> Result<Vec<usize>> {
    let (mc, _) = normalized_mixed_complex(m, max_degree + 1, cap)?;
    mc.check().map_err(|v| Violation::new(format!("{what}: {}", v.axiom), v.location))?;
    Ok(mc.cyclic(max_degree)?.dims)
}

/// `E²_{p,q} = HC_q(N_p)`.
pub fn compute_e2(cyl: &HopfCrossedCylinder, max_p: usize, max_q: usize, cap: usize) -> Result<SpectralPage> {
    let entries = crate::par::map_range(max_p + 1, |p| {
        let column = induced_column_cyclic(cyl, p, max_q, cap)?;
        cyclic_homology_of(&column, max_q, cap, &format!("column p={p}"))
    });
    Ok(SpectralPage {
        page: 2,
        entries: entries.into_iter().collect::<Result<_>>()?,
    })
}

/// `N_{0,q} = M_q^H` under the `E¹` action, with the vertical operators restricted.
#[derive(Clone, Debug)]
pub struct InvariantComplex {
    field: FieldSpec,
    spaces: Vec<Subspace>,
    faces: Vec<Vec<Vec<SparseVec>>>,
    degeneracies: Vec<Vec<Vec<SparseVec>>>,
    cyclic: Vec<Vec<SparseVec>>,
}

impl InvariantComplex {
    pub fn space(&self, q: usize) -> &Subspace {
        &self.spaces[q]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }
}

impl Paracyclic for InvariantComplex {
    fn field(&self) -> FieldSpec {
        self.field
    }

    fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim()
    }

    fn face(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.faces[n][i][x].clone()
    }

    fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec {
        self.degeneracies[n][i][x].clone()
    }

    fn cyclic(&self, n: usize, x: usize) -> SparseVec {
        self.cyclic[n][x].clone()
    }
}

fn require_semisimple(cyl: &HopfCrossedCylinder) -> Result<SparseVec> {
    let refuse = || {
        Error::Unsupported(
            "non-semisimple Hopf algebra: N₀ is only identified with invariants when H is semisimple; \
             use e2 (coinvariants) instead"
                .into(),
        )
    };
    if !is_semisimple(cyl.hopf())? {
        return Err(refuse());
    }
    normalized_integral(cyl.hopf()).ok_or_else(refuse)
}

/// `{m : h ▶ m = ε(h) m for all h}` and the coinvariant quotient `M_q / span(h ▶ m − ε(h) m)`.
fn invariants_and_coinvariants(cyl: &HopfCrossedCylinder, q: usize) -> Result<(Subspace, QuotientSpace)> {
    let module = MqAction { cyl, q };
    let (dh, dm) = (cyl.dim_h(), module.dim());
    let defects: Vec<SparseVec> = crate::par::map_range(dh * dm, |k| {
        let (h, x) = (k / dm, k % dm);
        module
            .act(h, x)
            .sub(&SparseVec::single(x, cyl.hopf().counit_basis(h).clone()))
    });
    let mut triplets = Vec::new();
    for (k, col) in defects.iter().enumerate() {
        let (h, x) = (k / dm, k % dm);
        triplets.extend(col.iter().map(|(r, c)| (h * dm + r, x, c.clone())));
    }
    let stacked = SparseMatrix::from_triplets(dh * dm, dm, triplets)?;
    let invariants = kernel_basis(&stacked, cyl.field());
    let coinvariants = quotient_space(dm, Subspace::span(dm, &defects))?;
    Ok((invariants, coinvariants))
}

fn restrict(
    src: &Subspace,
    dst: &Subspace,
    what: &str,
    q: usize,
    f: impl Fn(usize) -> SparseVec,
) -> std::result::Result<Vec<SparseVec>, Violation> {
    (0..src.dim())
        .map(|j| {
            dst.coordinates(&apply_linear(src.basis_vector(j), &f)).ok_or_else(|| {
                Violation::new(format!("{what} preserves invariants"), format!("q={q}, invariant {j}"))
            })
        })
        .collect()
}

/// `N₀` through `max_q + 2`; refuses non-semisimple `H`. Checks that the
/// averaging `Λ ▶ −` lands in invariants, that invariants map isomorphically
/// onto coinvariants, and that the vertical operators restrict.
pub fn invariant_complex_n0(cyl: &HopfCrossedCylinder, max_q: usize, cap: usize) -> Result<InvariantComplex> {
    let lambda = require_semisimple(cyl)?;
    let f = cyl.field();
    let top = max_q + 2;
    for q in 0..=top {
        check_cap(cyl.dim(0, q), cap, || format!("M_{q}"))?;
    }
    let mut spaces = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let (inv, coinv) = invariants_and_coinvariants(cyl, q)?;
        let module = MqAction { cyl, q };
        for x in 0..module.dim() {
            if !inv.contains(&module.act_vec(&lambda, &SparseVec::unit(x, f))) {
                return Err(Violation::new("Λ▶m is invariant", format!("q={q}, basis {x}")).into());
            }
        }
        let images: Vec<SparseVec> = (0..inv.dim()).map(|j| coinv.project(inv.basis_vector(j))).collect();
        let rank = mat_rank(&SparseMatrix::from_columns(coinv.dim(), &images));
        if rank != inv.dim() || rank != coinv.dim() {
            return Err(Violation::new(
                "invariants ≅ coinvariants",
                format!("q={q}: dims {} and {}, rank {rank}", inv.dim(), coinv.dim()),
            )
            .into());
        }
        spaces.push(inv);
    }
    let mut faces = vec![Vec::new()];
    let mut degeneracies = Vec::new();
    let mut cyclic = Vec::new();
    for q in 0..=top {
        if q >= 1 {
            let fs = (0..=q)
                .map(|i| restrict(&spaces[q], &spaces[q - 1], &format!("δ_{i}"), q, |x| cyl.vface(0, q, i, x)))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            faces.push(fs);
        }
        if q < top {
            let ds = (0..=q)
                .map(|i| restrict(&spaces[q], &spaces[q + 1], &format!("σ_{i}"), q, |x| cyl.vdegen(0, q, i, x)))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            degeneracies.push(ds);
        }
        cyclic.push(restrict(&spaces[q], &spaces[q], "τ", q, |x| cyl.vcyclic(0, q, x))?);
    }
    let n0 = InvariantComplex {
        field: f,
        spaces,
        faces,
        degeneracies,
        cyclic,
    };
    verify_cyclic(&n0, max_q, "N₀")?;
    Ok(n0)
}

/// `HC_q(A #_σ H)` computed directly against `HC_q(N₀)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseReport {
    pub crossed_product: Vec<usize>,
    pub invariant_complex: Vec<usize>,
    pub passed: bool,
}

pub fn collapse_check(cyl: &HopfCrossedCylinder, max_degree: usize, cap: usize) -> Result<CollapseReport> {
    let n0 = invariant_complex_n0(cyl, max_degree, cap)?;
    let invariant_complex = cyclic_homology_of(&n0, max_degree, cap, "N₀")?;
    let cp = build_crossed_product(cyl.action(), cyl.cocycle())?;
    let natural = AlgebraCyclic::new(Arc::new(cp.product));
    let crossed_product = cyclic_homology_of(&natural, max_degree, cap, "(A#_σH)♮")?;
    Ok(CollapseReport {
        passed: crossed_product == invariant_complex,
        crossed_product,
        invariant_complex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, matrix_algebra};
    use crate::crossed::{ActionMap, Cocycle};
    use crate::cylinder::fixtures::*;
    use crate::hopf::trivial_hopf;
    use crate::linalg::DEFAULT_DIM_CAP as CAP;

    fn trivial_h(a: crate::algebra::FinDimAlgebra) -> HopfCrossedCylinder {
        let h = Arc::new(trivial_hopf(Q));
        HopfCrossedCylinder::new(ActionMap::trivial(Arc::clone(&h), Arc::new(a)), Cocycle::trivial(h)).unwrap()
    }

    fn direct_hc(a: crate::algebra::FinDimAlgebra, max: usize) -> Vec<usize> {
        cyclic_homology_of(&AlgebraCyclic::new(Arc::new(a)), max, CAP, "A").unwrap()
    }

    #[test]
    fn filtration_is_preserved() {
        for c in [s1(), s2()] {
            filtration_check(&c, 2, CAP).unwrap();
        }
    }

    #[test]
    fn semisimple_e1_vanishes_above_column_zero() {
        for c in [s1(), s2(), s3()] {
            let e1 = compute_e1(&c, 2, 2, CAP).unwrap();
            for p in 1..=2 {
                for q in 0..=2 {
                    assert_eq!(e1.get(p, q), 0, "p={p}, q={q}");
                }
            }
        }
    }

    #[test]
    fn trivial_hopf_rows_are_constant() {
        let c = trivial_h(dual_numbers(Q));
        let e1 = compute_e1(&c, 2, 2, CAP).unwrap();
        assert_eq!(e1.entries, vec![vec![2, 4, 8], vec![0, 0, 0], vec![0, 0, 0]]);
    }

    #[test]
    fn s4_bottom_row() {
        // M_0 = F_2[C2] with trivial conjugation is two copies of the trivial
        // module, and H_p(C2; F_2) = F_2 in every degree
        let e1 = compute_e1(&s4(), 2, 2, CAP).unwrap();
        for p in 0..=2 {
            assert_eq!(e1.get(p, 0), 2, "p={p}");
        }
    }

    #[test]
    fn column_zero_of_trivial_hopf_is_the_algebra() {
        let c = trivial_h(matrix_algebra(Q, 2));
        let e2 = compute_e2(&c, 0, 2, CAP).unwrap();
        assert_eq!(e2.entries[0], direct_hc(matrix_algebra(Q, 2), 2));
        let c = trivial_h(dual_numbers(Q));
        let e2 = compute_e2(&c, 0, 2, CAP).unwrap();
        assert_eq!(e2.entries[0], direct_hc(dual_numbers(Q), 2));
    }

    #[test]
    fn s2_column_zero_is_cyclic_in_degree_one() {
        let col = induced_column_cyclic(&s2(), 0, 1, CAP).unwrap();
        crate::cyclic::check_cyclicity(&col, 1).unwrap();
    }

    #[test]
    fn s4_columns_are_well_defined() {
        let col = induced_column_cyclic(&s4(), 1, 2, CAP).unwrap();
        assert_eq!(col.top(), 4);
        let e2 = compute_e2(&s4(), 2, 2, CAP).unwrap();
        let e1 = compute_e1(&s4(), 2, 2, CAP).unwrap();
        for p in 0..=2 {
            for q in 0..=2 {
                assert!(e2.get(p, q) <= e1.get(p, q));
            }
        }
    }

    #[test]
    fn semisimple_e2_concentrates_and_converges() {
        for c in [s1(), s2(), s3()] {
            let e2 = compute_e2(&c, 2, 2, CAP).unwrap();
            let cp = build_crossed_product(c.action(), c.cocycle()).unwrap();
            let hc = direct_hc(cp.product, 2);
            for n in 0..=2 {
                let total: usize = (0..=n).map(|p| e2.get(p, n - p)).sum();
                assert_eq!(total, hc[n], "n={n}");
            }
            for p in 1..=2 {
                assert!(e2.entries[p].iter().all(|&d| d == 0));
            }
        }
    }

    #[test]
    fn invariants_of_trivial_hopf_are_everything() {
        let c = trivial_h(dual_numbers(Q));
        let n0 = invariant_complex_n0(&c, 1, CAP).unwrap();
        assert_eq!(n0.dims(), vec![2, 4, 8, 16]);
    }

    #[test]
    fn invariant_dimensions() {
        // S2: h ▶ g = σ(h,g)σ(g,h)⁻¹ g, and the commutator pairing of the
        // cocycle is nondegenerate, so only the identity survives
        assert_eq!(invariant_complex_n0(&s2(), 0, CAP).unwrap().space(0).dim(), 1);
        // S3: conjugation is trivial and C2 permutes the two idempotents of k^{C2}
        assert_eq!(invariant_complex_n0(&s3(), 0, CAP).unwrap().space(0).dim(), 2);
    }

    #[test]
    fn collapse_on_semisimple_scenarios() {
        let expect = [(s1(), vec![2, 0, 2]), (s2(), vec![1, 0, 1]), (s3(), vec![1, 0, 1])];
        for (c, dims) in expect {
            let r = collapse_check(&c, 2, CAP).unwrap();
            assert!(r.passed, "{r:?}");
            assert_eq!(r.crossed_product, dims);
        }
        assert_eq!(direct_hc(matrix_algebra(Q, 2), 2), vec![1, 0, 1]);
    }

    #[test]
    fn collapse_refuses_non_semisimple() {
        match collapse_check(&s4(), 2, CAP) {
            Err(Error::Unsupported(msg)) => assert!(msg.contains("non-semisimple")),
            other => panic!("{other:?}"),
        }
    }
}
