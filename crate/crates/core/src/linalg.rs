//! Dense exact linear algebra over the rationals.
//!
//! Every subspace is kept in reduced row-echelon form, so two subspaces are
//! equal exactly when their [`EchelonBasis`] values compare equal.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{check_len, Result};
use crate::rational::{self, Rational};

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: rational::zeros(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the empty case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            check_len(cols, row.len())?;
            data.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        check_len(rows * cols, data.len())?;
        Ok(Matrix { rows, cols, data })
    }

    /// Integer-entry convenience constructor, mostly for tests.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows.iter().flatten().map(|&x| rational::int(x)).collect();
        Matrix {
            rows: rows.len(),
            cols: C,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn as_flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Rational> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        rational::is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_len(self.cols, v.len())?;
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        f.write_str("]")
    }
}

/// Incremental Gauss-Jordan reduction.
///
/// Rows are pushed one at a time and reduced against the basis collected so
/// far; the basis is kept in reduced row-echelon form after every push. Tall,
/// sparse constraint systems never have to be materialized as a [`Matrix`].
#[derive(Debug, Clone)]
pub struct EchelonBuilder {
    cols: usize,
    // Sorted by pivot column.
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(cols: usize) -> Self {
        EchelonBuilder {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current basis without inserting it.
    pub fn reduce(&self, row: &mut [Rational]) {
        for (basis_row, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = -row[p].clone();
            rational::axpy(row, &factor, basis_row);
        }
    }

    /// Pushes a row; returns `true` when it increased the rank.
    pub fn push(&mut self, mut row: Vec<Rational>) -> Result<bool> {
        check_len(self.cols, row.len())?;
        if self.rank() == self.cols {
            return Ok(false);
        }
        self.reduce(&mut row);
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = row[lead].recip();
        for x in row.iter_mut().skip(lead) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for basis_row in &mut self.rows {
            if basis_row[lead].is_zero() {
                continue;
            }
            let factor = -basis_row[lead].clone();
            rational::axpy(basis_row, &factor, &row);
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, row);
        Ok(true)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> EchelonBasis {
        EchelonBasis {
            ambient_dim: self.cols,
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn into_basis(self) -> EchelonBasis {
        EchelonBasis {
            ambient_dim: self.cols,
            rows: self.rows,
            pivots: self.pivots,
        }
    }

    /// Kernel of the pushed rows, as a canonical basis.
    pub fn nullspace(&self) -> EchelonBasis {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut kernel = EchelonBuilder::new(self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = rational::unit(self.cols, free);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            kernel
                .push(v)
                .expect("kernel vector has the ambient length");
        }
        kernel.into_basis()
    }
}

/// Canonical basis of a subspace of `Q^ambient_dim`: the nonzero rows of a
/// reduced row-echelon matrix, pivots equal to one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EchelonBasis {
    ambient_dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        EchelonBuilder::new(ambient_dim).into_basis()
    }

    pub fn full(ambient_dim: usize) -> Self {
        EchelonBasis {
            ambient_dim,
            rows: (0..ambient_dim)
                .map(|i| rational::unit(ambient_dim, i))
                .collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors, in canonical form.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut builder = EchelonBuilder::new(ambient_dim);
        for v in vectors {
            builder.push(v)?;
        }
        Ok(builder.into_basis())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient_dim, self.rows.clone()).expect("rows have ambient length")
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        check_len(self.ambient_dim, v.len())?;
        // Canonical rows: the only candidate combination uses v's pivot entries.
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let factor = -r[p].clone();
                rational::axpy(&mut r, &factor, row);
            }
        }
        Ok(rational::is_zero_vec(&r))
    }

    pub fn is_subspace_of(&self, other: &EchelonBasis) -> Result<bool> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &EchelonBasis) -> Result<EchelonBasis> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        let mut builder = EchelonBuilder {
            cols: self.ambient_dim,
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        };
        for row in &other.rows {
            builder.push(row.clone())?;
        }
        Ok(builder.into_basis())
    }

    /// Vectors `a` with `a . v = 0` for every `v` in the subspace. A vector lies
    /// in the subspace iff it is orthogonal to every row returned here.
    pub fn annihilator(&self) -> EchelonBasis {
        let mut builder = EchelonBuilder::new(self.ambient_dim);
        builder.rows = self.rows.clone();
        builder.pivots = self.pivots.clone();
        builder.nullspace()
    }
}

impl fmt::Debug for EchelonBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EchelonBasis(dim {} in {}) ", self.dim(), self.ambient_dim)?;
        f.debug_list()
            .entries(
                self.rows
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
            )
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

pub fn rref(m: &Matrix) -> Rref {
    let mut builder = EchelonBuilder::new(m.cols());
    for row in m.row_iter() {
        builder.push(row.to_vec()).expect("row has matrix width");
    }
    let rank = builder.rank();
    let pivot_cols = builder.pivots().to_vec();
    let mut rows = builder.rows;
    rows.resize(m.rows(), rational::zeros(m.cols()));
    Rref {
        reduced: Matrix::from_rows(m.cols(), rows).expect("rows have matrix width"),
        rank,
        pivot_cols,
    }
}

pub fn nullspace(m: &Matrix) -> EchelonBasis {
    let mut builder = EchelonBuilder::new(m.cols());
    for row in m.row_iter() {
        builder.push(row.to_vec()).expect("row has matrix width");
    }
    builder.nullspace()
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    check_len(a.rows(), b.len())?;
    let n = a.cols();
    let mut builder = EchelonBuilder::new(n + 1);
    for (row, rhs) in a.row_iter().zip(b) {
        let mut augmented = row.to_vec();
        augmented.push(rhs.clone());
        builder.push(augmented)?;
    }
    if builder.pivots().last() == Some(&n) {
        return Ok(None);
    }
    let mut x = rational::zeros(n);
    for (row, &p) in builder.rows.iter().zip(builder.pivots()) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

pub fn subspace_contains(s: &EchelonBasis, v: &[Rational]) -> Result<bool> {
    s.contains(v)
}

pub fn subspace_sum(s1: &EchelonBasis, s2: &EchelonBasis) -> Result<EchelonBasis> {
    s1.sum(s2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn rref_identity_rank_one_and_zero() {
        let r = rref(&Matrix::identity(2));
        assert_eq!(r.reduced, Matrix::identity(2));
        assert_eq!((r.rank, r.pivot_cols.clone()), (2, vec![0, 1]));

        let r = rref(&Matrix::from_ints(&[[1, 1], [2, 2]]));
        assert_eq!(r.reduced, Matrix::from_ints(&[[1, 1], [0, 0]]));
        assert_eq!((r.rank, r.pivot_cols.clone()), (1, vec![0]));

        let r = rref(&Matrix::zeros(2, 2));
        assert_eq!(r.reduced, Matrix::zeros(2, 2));
        assert_eq!((r.rank, r.pivot_cols.len()), (0, 0));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::identity(2)).dim(), 0);

        let k = nullspace(&Matrix::from_ints(&[[1, 1]]));
        assert_eq!(k.rows(), &[vec![int(1), int(-1)]]);

        let k = nullspace(&Matrix::zeros(2, 2));
        assert_eq!(k, EchelonBasis::full(2));
    }

    #[test]
    fn solve_examples() {
        let x = solve(&Matrix::identity(2), &[int(3), frac(-1, 2)]).unwrap();
        assert_eq!(x, Some(vec![int(3), frac(-1, 2)]));

        let a = Matrix::from_ints(&[[1, 1]]);
        let x = solve(&a, &[int(2)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![int(2)]);

        let a = Matrix::from_ints(&[[1], [1]]);
        assert_eq!(solve(&a, &[int(1), int(2)]).unwrap(), None);

        assert!(matches!(
            solve(&a, &[int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn containment_examples() {
        let line = EchelonBasis::span(2, [vec![int(1), int(1)]]).unwrap();
        assert!(subspace_contains(&line, &[int(0), int(0)]).unwrap());
        assert!(!subspace_contains(&line, &[int(1), int(0)]).unwrap());
        assert!(subspace_contains(&line, &[int(2), int(2)]).unwrap());
        assert!(subspace_contains(&line, &[int(2)]).is_err());
    }

    #[test]
    fn sum_examples() {
        let line = EchelonBasis::span(2, [vec![int(1), int(1)]]).unwrap();
        assert_eq!(subspace_sum(&line, &EchelonBasis::zero(2)).unwrap(), line);
        assert_eq!(subspace_sum(&line, &line).unwrap(), line);
        let x = EchelonBasis::span(2, [vec![int(1), int(0)]]).unwrap();
        let y = EchelonBasis::span(2, [vec![int(0), int(1)]]).unwrap();
        assert_eq!(subspace_sum(&x, &y).unwrap(), EchelonBasis::full(2));
        assert!(subspace_sum(&x, &EchelonBasis::zero(3)).is_err());
    }

    #[test]
    fn annihilator_detects_membership() {
        let plane = EchelonBasis::span(3, [vec![int(1), int(2), int(0)], vec![int(0), int(0), int(1)]])
            .unwrap();
        let ann = plane.annihilator();
        assert_eq!(ann.dim(), 1);
        for row in plane.rows() {
            let dot: Rational = row.iter().zip(&ann.rows()[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(small_rational(), r * c)
                .prop_map(move |data| Matrix::from_flat(r, c, data).unwrap())
        })
    }

    /// Two matrices of equal width; half the time the second is a row mix of
    /// the first, so equal spans actually occur.
    fn matrix_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
        (1usize..4, 1usize..5, 1usize..5, any::<bool>()).prop_flat_map(|(r, s, c, mix)| {
            (
                proptest::collection::vec(small_rational(), r * c),
                proptest::collection::vec(small_rational(), s * c),
                proptest::collection::vec(small_rational(), s * r),
            )
                .prop_map(move |(a, b, t)| {
                    let a = Matrix::from_flat(r, c, a).unwrap();
                    let b = if mix {
                        Matrix::from_flat(s, r, t).unwrap().mul(&a).unwrap()
                    } else {
                        Matrix::from_flat(s, c, b).unwrap()
                    };
                    (a, b)
                })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let once = rref(&m).reduced;
            prop_assert_eq!(rref(&once).reduced, once);
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            let r = rref(&m);
            let k = nullspace(&m);
            prop_assert_eq!(r.rank + k.dim(), m.cols());
            for v in k.rows() {
                prop_assert!(rational::is_zero_vec(&m.mul_vec(v).unwrap()));
            }
        }

        #[test]
        fn equality_matches_mutual_containment((a, b) in matrix_pair()) {
            let sa = EchelonBasis::span(a.cols(), a.row_iter().map(<[_]>::to_vec)).unwrap();
            let sb = EchelonBasis::span(b.cols(), b.row_iter().map(<[_]>::to_vec)).unwrap();
            let mutual = sa.is_subspace_of(&sb).unwrap() && sb.is_subspace_of(&sa).unwrap();
            prop_assert_eq!(sa == sb, mutual);
        }

        #[test]
        fn rational_round_trips(a in small_rational(), b in small_rational()) {
            prop_assert_eq!((&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b) / &b, a);
            }
        }
    }
}
