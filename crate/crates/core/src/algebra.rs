//! Finite-dimensional unital associative algebras given by structure constants,
//! and the finite groups that feed the group and function algebra constructors.

use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{kernel_basis, Accumulator, SparseMatrix, SparseVec};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates `table` (row-major, `order x order`) as a group law.
    pub fn from_table(name: &str, order: usize, table: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        if order == 0 || table.len() != order * order || labels.len() != order {
            return Err(Error::Input(format!("group `{name}`: table must be {order}x{order}")));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(Error::Input(format!("group `{name}`: entry out of range")));
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::Input(format!("group `{name}`: no identity element")))?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::Input(format!(
                            "group `{name}`: not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                    .ok_or_else(|| Error::Input(format!("group `{name}`: {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup {
            name: name.to_string(),
            order,
            table,
            identity,
            inverse,
            labels,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        FiniteGroup::from_table(&format!("C{n}"), n, table, labels).expect("cyclic group law")
    }

    /// `G x H` with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, n) = (g.order, h.order);
        let order = m * n;
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let (x1, x2) = (x / n, x % n);
                let (y1, y2) = (y / n, y % n);
                table[x * order + y] = g.mul(x1, y1) * n + h.mul(x2, y2);
            }
        }
        let labels = (0..order)
            .map(|x| format!("({},{})", g.labels[x / n], h.labels[x % n]))
            .collect();
        FiniteGroup::from_table(&format!("{}x{}", g.name, h.name), order, table, labels)
            .expect("product group law")
    }

    /// The symmetric group on three letters, elements as permutations of `0..3`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = vec![0; 36];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                // (p q)(i) = p(q(i))
                table[a * 6 + b] = index([p[q[0]], p[q[1]], p[q[2]]]);
            }
        }
        let labels = ["e", "(01)", "(12)", "(02)", "(012)", "(021)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::from_table("S3", 6, table, labels).expect("S3 group law")
    }

    /// `C<n>`, `C<n>xC<m>` (any number of factors) or `S3`.
    pub fn by_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if name == "S3" {
            return Ok(Self::symmetric3());
        }
        let mut out: Option<FiniteGroup> = None;
        for part in name.split('x') {
            let n: usize = part
                .strip_prefix('C')
                .and_then(|s| s.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Input(format!("unknown group `{name}`")))?;
            let c = Self::cyclic(n);
            out = Some(match out {
                None => c,
                Some(g) => Self::direct_product(&g, &c),
            });
        }
        out.ok_or_else(|| Error::Input(format!("unknown group `{name}`")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// An element of a [`FinDimAlgebra`] in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElement {
    dim: usize,
    vec: SparseVec,
}

impl AlgElement {
    pub fn new(dim: usize, vec: SparseVec) -> Result<Self> {
        if vec.max_index().map_or(false, |i| i >= dim) {
            return Err(Error::DimensionMismatch(format!("element outside dimension {dim}")));
        }
        Ok(AlgElement { dim, vec })
    }

    pub fn from_coords(coords: &[Scalar]) -> Self {
        AlgElement {
            dim: coords.len(),
            vec: SparseVec::from_dense(coords),
        }
    }

    pub fn basis(dim: usize, i: usize, field: FieldSpec) -> Self {
        AlgElement {
            dim,
            vec: SparseVec::unit(i, field),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vector(&self) -> &SparseVec {
        &self.vec
    }

    pub fn coords(&self, field: FieldSpec) -> Vec<Scalar> {
        self.vec.to_dense(self.dim, field)
    }
}

/// Structure constants `e_i e_j = Σ c_ij^k e_k`, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    table: Vec<SparseVec>,
    unit: SparseVec,
}

impl FinDimAlgebra {
    /// Structurally checks the table; axioms are checked by [`validate_algebra`].
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        table: Vec<SparseVec>,
        unit: SparseVec,
    ) -> Result<Self> {
        let d = labels.len();
        if table.len() != d * d {
            return Err(Error::DimensionMismatch(format!(
                "structure constants need {} products, got {}",
                d * d,
                table.len()
            )));
        }
        let out_of_range = |v: &SparseVec| v.max_index().map_or(false, |i| i >= d);
        if table.iter().any(out_of_range) || out_of_range(&unit) {
            return Err(Error::DimensionMismatch("basis index out of range".into()));
        }
        Ok(FinDimAlgebra {
            field,
            labels,
            table,
            unit,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_vec(&(a * b), self.mul_basis(i, j));
            }
        }
        acc.finish()
    }

    /// Left-to-right product of a list of elements (the unit if empty).
    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a SparseVec>) -> SparseVec {
        xs.into_iter()
            .fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn multiply(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        if x.dim != self.dim() || y.dim != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "elements of dimension {} and {} in an algebra of dimension {}",
                x.dim,
                y.dim,
                self.dim()
            )));
        }
        Ok(AlgElement {
            dim: self.dim(),
            vec: self.mul(&x.vec, &y.vec),
        })
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Dimension of the center, from the linear system `x e_j = e_j x`.
    pub fn center_dim(&self) -> usize {
        let d = self.dim();
        // unknown x = Σ x_i e_i; equation (j, k): Σ_i x_i (c_ij^k - c_ji^k) = 0
        let mut rows = Vec::with_capacity(d * d);
        for j in 0..d {
            let mut per_k: Vec<Accumulator> = (0..d).map(|_| Accumulator::new()).collect();
            for i in 0..d {
                let diff = self.mul_basis(i, j).sub(self.mul_basis(j, i));
                for (k, c) in diff.iter() {
                    per_k[k].add(i, c);
                }
            }
            rows.extend(per_k.into_iter().map(|a| a.finish()));
        }
        kernel_basis(&SparseMatrix::from_rows(d, rows), self.field).dim()
    }

    fn basis_label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

impl fmt::Display for FinDimAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algebra of dim {} over {}", self.dim(), self.field)
    }
}

/// Associativity on all basis triples and the unit laws on all basis vectors.
pub fn validate_algebra(a: &FinDimAlgebra) -> std::result::Result<(), Violation> {
    let d = a.dim();
    let f = a.field;
    for i in 0..d {
        let e = SparseVec::unit(i, f);
        if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
            return Err(Violation::new(
                "unit law",
                format!("basis {}", a.basis_label(i)),
            ));
        }
    }
    let hit = crate::par::find_first(d * d * d, |t| {
        let (i, j, k) = (t / (d * d), (t / d) % d, t % d);
        let left = a.mul(a.mul_basis(i, j), &SparseVec::unit(k, f));
        let right = a.mul(&SparseVec::unit(i, f), a.mul_basis(j, k));
        (left != right).then_some((i, j, k))
    });
    match hit {
        Some((i, j, k)) => Err(Violation::new(
            "associativity",
            format!(
                "({}, {}, {})",
                a.basis_label(i),
                a.basis_label(j),
                a.basis_label(k)
            ),
        )),
        None => Ok(()),
    }
}

/// The group algebra `kG` with basis indexed by group elements.
pub fn group_algebra(field: FieldSpec, g: &FiniteGroup) -> FinDimAlgebra {
    let n = g.order();
    let table = (0..n * n)
        .map(|k| SparseVec::unit(g.mul(k / n, k % n), field))
        .collect();
    FinDimAlgebra::new(
        field,
        g.labels().to_vec(),
        table,
        SparseVec::unit(g.identity(), field),
    )
    .expect("group algebra table")
}

/// `M_n(k)` with matrix units `e_ij` at index `i * n + j`.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> FinDimAlgebra {
    assert!(n >= 1, "matrix algebra needs n >= 1");
    let d = n * n;
    let mut table = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            table.push(if j == k {
                SparseVec::unit(i * n + l, field)
            } else {
                SparseVec::zero()
            });
        }
    }
    let labels = (0..d).map(|a| format!("e{}{}", a / n + 1, a % n + 1)).collect();
    let unit = SparseVec::from_pairs((0..n).map(|i| (i * n + i, field.one())));
    FinDimAlgebra::new(field, labels, table, unit).expect("matrix algebra table")
}

/// `k^G`: indicator functions `δ_x` with pointwise product.
pub fn function_algebra(field: FieldSpec, g: &FiniteGroup) -> FinDimAlgebra {
    let n = g.order();
    let table = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                SparseVec::unit(k / n, field)
            } else {
                SparseVec::zero()
            }
        })
        .collect();
    let labels = g.labels().iter().map(|l| format!("d_{l}")).collect();
    let unit = SparseVec::from_pairs((0..n).map(|i| (i, field.one())));
    FinDimAlgebra::new(field, labels, table, unit).expect("function algebra table")
}

/// `k[x]/(x^2)` with basis `1, x`.
pub fn dual_numbers(field: FieldSpec) -> FinDimAlgebra {
    let table = vec![
        SparseVec::unit(0, field),
        SparseVec::unit(1, field),
        SparseVec::unit(1, field),
        SparseVec::zero(),
    ];
    FinDimAlgebra::new(
        field,
        vec!["1".into(), "x".into()],
        table,
        SparseVec::unit(0, field),
    )
    .expect("dual numbers table")
}

/// The ground field as a one-dimensional algebra.
pub fn ground_algebra(field: FieldSpec) -> FinDimAlgebra {
    FinDimAlgebra::new(
        field,
        vec!["1".into()],
        vec![SparseVec::unit(0, field)],
        SparseVec::unit(0, field),
    )
    .expect("ground field table")
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn group_algebras_validate() {
        for g in [
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::by_name("C2xC2").unwrap(),
            FiniteGroup::symmetric3(),
        ] {
            let a = group_algebra(Q, &g);
            assert_eq!(validate_algebra(&a), Ok(()));
            assert_eq!(a.dim(), g.order());
        }
        assert!(group_algebra(Q, &FiniteGroup::by_name("C2xC2").unwrap()).is_commutative());
        assert!(!group_algebra(Q, &FiniteGroup::symmetric3()).is_commutative());
    }

    #[test]
    fn c2_relation_and_unit() {
        let a = group_algebra(Q, &FiniteGroup::cyclic(2));
        let g = AlgElement::basis(2, 1, Q);
        let e = AlgElement::basis(2, 0, Q);
        assert_eq!(a.multiply(&g, &g).unwrap(), e);
        let x = AlgElement::from_coords(&[Q.from_i64(3), Q.from_i64(-2)]);
        assert_eq!(a.multiply(&e, &x).unwrap(), x);
        assert!(a.multiply(&x, &AlgElement::basis(3, 0, Q)).is_err());
    }

    #[test]
    fn dual_numbers_square_to_zero() {
        let a = dual_numbers(Q);
        let x = AlgElement::basis(2, 1, Q);
        assert!(a.multiply(&x, &x).unwrap().vector().is_zero());
        assert_eq!(validate_algebra(&a), Ok(()));
    }

    #[test]
    fn broken_unit_is_reported() {
        let a = FinDimAlgebra::new(
            Q,
            vec!["b0".into()],
            vec![SparseVec::single(0, Q.from_i64(2))],
            SparseVec::unit(0, Q),
        )
        .unwrap();
        assert_eq!(validate_algebra(&a).unwrap_err().axiom, "unit law");
    }

    #[test]
    fn matrix_units() {
        let m2 = matrix_algebra(Q, 2);
        assert_eq!(validate_algebra(&m2), Ok(()));
        // e12 e21 = e11
        assert_eq!(m2.mul_basis(1, 2), &SparseVec::unit(0, Q));
        assert_eq!(m2.center_dim(), 1);
        let m1 = matrix_algebra(Q, 1);
        assert_eq!(m1, {
            let mut g = ground_algebra(Q);
            g.labels = vec!["e11".into()];
            g
        });
        let f2 = FieldSpec::PrimeField(2);
        let m2f = matrix_algebra(f2, 2);
        assert_eq!(validate_algebra(&m2f), Ok(()));
        assert_eq!(m2f.mul_basis(1, 2), &SparseVec::unit(0, f2));
    }

    #[test]
    fn function_algebra_idempotents() {
        let a = function_algebra(Q, &FiniteGroup::cyclic(2));
        assert_eq!(a.mul_basis(0, 0), &SparseVec::unit(0, Q));
        assert!(a.mul_basis(0, 1).is_zero());
        assert_eq!(validate_algebra(&a), Ok(()));
        assert!(a.is_commutative());
        let x = SparseVec::from_dense(&[Q.from_i64(5), Q.from_i64(7)]);
        assert_eq!(a.mul(a.unit(), &x), x);
    }

    #[test]
    fn group_table_validation() {
        // not associative: a "group" where 1*1 = 0 but with a broken row
        let bad = FiniteGroup::from_table("bad", 3, vec![0, 1, 2, 1, 0, 0, 2, 0, 0], vec!["a".into(), "b".into(), "c".into()]);
        assert!(bad.is_err());
        assert!(FiniteGroup::by_name("D4").is_err());
    }
}
