use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::sparse::{apply_linear, Accumulator, SparseMatrix, SparseVec};

/// Incremental reduced row echelon form.
#[derive(Clone, Debug)]
struct Rref {
    rows: Vec<SparseVec>,
    row_of_pivot: HashMap<usize, usize>,
}

impl Rref {
    fn new() -> Self {
        Rref {
            rows: Vec::new(),
            row_of_pivot: HashMap::new(),
        }
    }

    /// `v` minus its components along the pivot columns.
    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        let mut touched = false;
        for (i, c) in v.iter() {
            if let Some(&r) = self.row_of_pivot.get(&i) {
                acc.add_vec(&-c, &self.rows[r]);
                touched = true;
            }
        }
        if !touched {
            return v.clone();
        }
        acc.add_vec(&v.leading().map(|(_, c)| c.one_like()).unwrap(), v);
        acc.finish()
    }

    /// Inserts `v`; returns whether the span grew.
    fn insert(&mut self, v: &SparseVec) -> bool {
        let w = self.reduce(v);
        let Some((pivot, lead)) = w.leading() else {
            return false;
        };
        let w = w.scaled(&lead.inv().expect("leading entry is nonzero"));
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(pivot) {
                let c = -c;
                *row = row.add_scaled(&c, &w);
            }
        }
        self.row_of_pivot.insert(pivot, self.rows.len());
        self.rows.push(w);
        true
    }

    fn into_sorted(mut self) -> (Vec<usize>, Vec<SparseVec>) {
        self.rows
            .sort_by_key(|r| r.leading().map(|(i, _)| i).unwrap_or(usize::MAX));
        let pivots = self
            .rows
            .iter()
            .map(|r| r.leading().expect("nonzero row").0)
            .collect();
        (pivots, self.rows)
    }
}

/// A subspace of `k^n`, held as its canonical reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    pivots: Vec<usize>,
    basis: SparseMatrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            pivots: Vec::new(),
            basis: SparseMatrix::zero(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient_dim,
            pivots: (0..ambient_dim).collect(),
            basis: SparseMatrix::identity(ambient_dim, field),
        }
    }

    pub fn span<'a>(ambient_dim: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut rref = Rref::new();
        for v in vectors {
            debug_assert!(v.max_index().map_or(true, |m| m < ambient_dim));
            rref.insert(v);
        }
        let (pivots, rows) = rref.into_sorted();
        Subspace {
            ambient_dim,
            pivots,
            basis: SparseMatrix::from_rows(ambient_dim, rows),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &SparseMatrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> &SparseVec {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    /// The canonical residue of `v` modulo this subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        let mut touched = false;
        for (i, c) in v.iter() {
            if let Some(r) = self.pivot_row(i) {
                acc.add_vec(&-c, self.basis.row(r));
                touched = true;
            }
        }
        if !touched {
            return v.clone();
        }
        acc.add_vec(&v.leading().unwrap().1.one_like(), v);
        acc.finish()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_pairs(v.iter().filter_map(|(i, c)| {
            self.pivot_row(i).map(|r| (r, c.clone()))
        })))
    }

    /// The vector with the given basis coordinates.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        apply_linear(coords, |r| self.basis.row(r).clone())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.row_vectors().iter().all(|v| other.contains(v))
    }
}

/// Rank over the field of the entries.
pub fn mat_rank(m: &SparseMatrix) -> usize {
    // Forward elimination only: each stored row is keyed by its leading column.
    let mut by_lead: HashMap<usize, SparseVec> = HashMap::new();
    for row in m.row_vectors() {
        let mut v = row.clone();
        while let Some((lead, c)) = v.leading() {
            match by_lead.get(&lead) {
                Some(r) => {
                    let c = -c;
                    v = v.add_scaled(&c, r);
                }
                None => {
                    let inv = c.inv().expect("nonzero");
                    by_lead.insert(lead, v.scaled(&inv));
                    break;
                }
            }
        }
    }
    by_lead.len()
}

/// Canonical echelon basis of the right kernel `{x : m x = 0}`.
pub fn kernel_basis(m: &SparseMatrix, field: FieldSpec) -> Subspace {
    let row_space = Subspace::span(m.cols(), m.row_vectors());
    let pivots = row_space.pivots();
    let mut is_pivot = vec![false; m.cols()];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<SparseVec> = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut pairs = vec![(f, field.one())];
            for (r, &p) in pivots.iter().enumerate() {
                if let Some(c) = row_space.basis_vector(r).get(f) {
                    pairs.push((p, -c));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    Subspace::span(m.cols(), &vectors)
}

/// A solution of `m x = rhs` with free variables set to zero, if consistent.
pub fn solve_linear(m: &SparseMatrix, rhs: &SparseVec) -> Result<Option<SparseVec>> {
    if rhs.max_index().map_or(false, |i| i >= m.rows()) {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side longer than {} rows",
            m.rows()
        )));
    }
    let n = m.cols();
    let augmented: Vec<SparseVec> = m
        .row_vectors()
        .iter()
        .enumerate()
        .map(|(r, row)| match rhs.get(r) {
            Some(c) => row.add(&SparseVec::single(n, c.clone())),
            None => row.clone(),
        })
        .collect();
    let reduced = Subspace::span(n + 1, &augmented);
    if reduced.pivots().last() == Some(&n) {
        return Ok(None);
    }
    Ok(Some(SparseVec::from_pairs(
        reduced
            .pivots()
            .iter()
            .enumerate()
            .filter_map(|(r, &p)| reduced.basis_vector(r).get(n).map(|c| (p, c.clone()))),
    )))
}

/// `k^n / D`, represented by the standard basis vectors off the pivots of `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    denominator: Subspace,
    reps: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    /// Ambient indices of the representative basis vectors.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn representative_matrix(&self, field: FieldSpec) -> SparseMatrix {
        SparseMatrix::from_rows(
            self.ambient_dim,
            self.reps.iter().map(|&j| SparseVec::unit(j, field)).collect(),
        )
    }

    /// Coordinates of the class of `v` in the quotient basis.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let w = self.denominator.reduce(v);
        SparseVec::from_pairs(w.iter().map(|(i, c)| {
            (
                self.position[i].expect("residue lies on representatives"),
                c.clone(),
            )
        }))
    }

    /// The ambient vector representing quotient coordinates `x`.
    pub fn lift(&self, x: &SparseVec) -> SparseVec {
        x.map_indices(|i| self.reps[i])
    }
}

pub fn quotient_space(ambient_dim: usize, denominator: Subspace) -> Result<QuotientSpace> {
    if denominator.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "denominator lives in dimension {}, ambient is {ambient_dim}",
            denominator.ambient_dim()
        )));
    }
    let mut is_pivot = vec![false; ambient_dim];
    for &p in denominator.pivots() {
        is_pivot[p] = true;
    }
    let reps: Vec<usize> = (0..ambient_dim).filter(|&j| !is_pivot[j]).collect();
    let mut position = vec![None; ambient_dim];
    for (k, &j) in reps.iter().enumerate() {
        position[j] = Some(k);
    }
    Ok(QuotientSpace {
        ambient_dim,
        denominator,
        reps,
        position,
    })
}

/// Where an induced map fails to exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotWellDefined {
    /// Index of the offending basis vector of the source denominator.
    pub denominator_row: usize,
}

/// The map induced on quotients by a basis-to-vector provider `f`.
pub fn induced_map_fn(
    src: &QuotientSpace,
    dst: &QuotientSpace,
    f: impl Fn(usize) -> SparseVec,
) -> std::result::Result<SparseMatrix, NotWellDefined> {
    for (r, d) in src.denominator().basis().row_vectors().iter().enumerate() {
        let image = apply_linear(d, &f);
        if !dst.denominator().contains(&image) {
            return Err(NotWellDefined { denominator_row: r });
        }
    }
    let columns: Vec<SparseVec> = src.representatives().iter().map(|&j| dst.project(&f(j))).collect();
    Ok(SparseMatrix::from_columns(dst.dim(), &columns))
}

/// The map induced on quotients by `f` (rows index `dst`'s ambient space).
pub fn induced_map(
    f: &SparseMatrix,
    src: &QuotientSpace,
    dst: &QuotientSpace,
) -> Result<std::result::Result<SparseMatrix, NotWellDefined>> {
    if f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, quotients live in {} -> {}",
            f.rows(),
            f.cols(),
            src.ambient_dim(),
            dst.ambient_dim()
        )));
    }
    let cols = f.column_vectors();
    Ok(induced_map_fn(src, dst, |j| cols[j].clone()))
}

/// `ker(d_out) / im(d_in)` with canonical representatives.
#[derive(Clone, Debug)]
pub struct Subquotient {
    cycles: Subspace,
    classes: QuotientSpace,
}

impl Subquotient {
    /// Homology at a chain space of dimension `n` where `d_out: C_n -> C_{n-1}`
    /// and `d_in: C_{n+1} -> C_n`.
    pub fn homology(
        n: usize,
        d_out: &SparseMatrix,
        d_in: &SparseMatrix,
        field: FieldSpec,
    ) -> Result<Subquotient> {
        if d_out.cols() != n || d_in.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "homology at dimension {n} with maps {}x{} and {}x{}",
                d_out.rows(),
                d_out.cols(),
                d_in.rows(),
                d_in.cols()
            )));
        }
        let cycles = if d_out.rows() == 0 {
            Subspace::full(n, field)
        } else {
            kernel_basis(d_out, field)
        };
        let boundaries: Vec<SparseVec> = d_in
            .column_vectors()
            .iter()
            .map(|b| {
                cycles.coordinates(b).ok_or_else(|| {
                    Error::NotWellDefined("boundary is not a cycle (d^2 != 0)".into())
                })
            })
            .collect::<Result<_>>()?;
        let k = cycles.dim();
        let classes = quotient_space(k, Subspace::span(k, &boundaries))?;
        Ok(Subquotient { cycles, classes })
    }

    pub fn dim(&self) -> usize {
        self.classes.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.cycles.ambient_dim()
    }

    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    /// A cycle representing the `j`-th basis class.
    pub fn representative(&self, j: usize) -> SparseVec {
        self.cycles
            .basis_vector(self.classes.representatives()[j])
            .clone()
    }

    /// Class coordinates of a cycle; `None` if `v` is not a cycle.
    pub fn class_of(&self, v: &SparseVec) -> Option<SparseVec> {
        self.cycles.coordinates(v).map(|c| self.classes.project(&c))
    }

    /// The map induced on homology by the chain-level provider `f`.
    pub fn induced(
        &self,
        target: &Subquotient,
        f: impl Fn(usize) -> SparseVec,
    ) -> std::result::Result<SparseMatrix, NotWellDefined> {
        let on_cycles = |i: usize| -> Option<SparseVec> {
            let image = apply_linear(self.cycles.basis_vector(i), &f);
            target.cycles.coordinates(&image)
        };
        for (r, b) in self
            .classes
            .denominator()
            .basis()
            .row_vectors()
            .iter()
            .enumerate()
        {
            let mut acc = Accumulator::new();
            for (i, c) in b.iter() {
                match on_cycles(i) {
                    Some(v) => acc.add_vec(c, &v),
                    None => return Err(NotWellDefined { denominator_row: r }),
                }
            }
            if !target.classes.denominator().contains(&acc.finish()) {
                return Err(NotWellDefined { denominator_row: r });
            }
        }
        let mut columns = Vec::with_capacity(self.dim());
        for &i in self.classes.representatives() {
            match on_cycles(i) {
                Some(v) => columns.push(target.classes.project(&v)),
                None => return Err(NotWellDefined { denominator_row: usize::MAX }),
            }
        }
        Ok(SparseMatrix::from_columns(target.dim(), &columns))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| SparseVec::from_dense(&r.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>()))
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(mat_rank(&SparseMatrix::identity(3, q())), 3);
        assert_eq!(mat_rank(&SparseMatrix::zero(2, 5)), 0);
        assert_eq!(mat_rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&SparseMatrix::identity(2, q()), q()).dim(), 0);
        assert_eq!(kernel_basis(&SparseMatrix::zero(2, 3), q()).dim(), 3);
        let f2 = FieldSpec::PrimeField(2);
        let one = SparseMatrix::from_rows(2, vec![SparseVec::from_dense(&[f2.one(), f2.one()])]);
        let k = kernel_basis(&one, f2);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_vector(0), &SparseVec::from_dense(&[f2.one(), f2.one()]));
    }

    #[test]
    fn solve_examples() {
        let id = SparseMatrix::identity(2, q());
        let rhs = SparseVec::from_dense(&[q().from_i64(5), q().from_i64(7)]);
        assert_eq!(solve_linear(&id, &rhs).unwrap(), Some(rhs.clone()));
        let zero = SparseMatrix::zero(1, 1);
        assert_eq!(solve_linear(&zero, &SparseVec::unit(0, q())).unwrap(), None);
        let two = m(&[&[2]]);
        let x = solve_linear(&two, &SparseVec::unit(0, q())).unwrap().unwrap();
        assert_eq!(x.get(0).unwrap(), &q().parse_scalar("1/2").unwrap());
    }

    #[test]
    fn quotient_examples() {
        let d = Subspace::span(3, &[SparseVec::unit(0, q())]);
        assert_eq!(quotient_space(3, d).unwrap().dim(), 2);
        assert_eq!(quotient_space(4, Subspace::zero(4)).unwrap().dim(), 4);
        assert_eq!(quotient_space(2, Subspace::full(2, q())).unwrap().dim(), 0);
        assert!(quotient_space(2, Subspace::zero(3)).is_err());
    }

    #[test]
    fn induced_examples() {
        let src = quotient_space(2, Subspace::span(2, &[SparseVec::unit(0, q())])).unwrap();
        let dst = src.clone();
        let id = SparseMatrix::identity(2, q());
        assert!(induced_map(&id, &src, &dst).unwrap().unwrap().is_identity());
        let zero = SparseMatrix::zero(2, 2);
        assert!(induced_map(&zero, &src, &dst).unwrap().unwrap().is_zero());
        // f(e0) = e1 with e0 in the source denominator but e1 not in the target's
        let swap = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(
            induced_map(&swap, &src, &dst).unwrap(),
            Err(NotWellDefined { denominator_row: 0 })
        );
    }

    #[test]
    fn homology_of_a_circle() {
        // d1 : k^2 (edges) -> k^2 (vertices), edge a: v0 -> v1, edge b: v1 -> v0
        let d1 = m(&[&[-1, 1], &[1, -1]]);
        let d0 = SparseMatrix::zero(0, 2);
        let h0 = Subquotient::homology(2, &d0, &d1, q()).unwrap();
        let h1 = Subquotient::homology(2, &d1, &SparseMatrix::zero(2, 0), q()).unwrap();
        assert_eq!((h0.dim(), h1.dim()), (1, 1));
    }
}
