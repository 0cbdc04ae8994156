//! Lie superalgebras given by graded structure constants.
//!
//! Basis vectors are ordered even first: indices `0..m` are even and
//! `m..m+n` are odd. The constants are stored densely for every ordered pair,
//! so `validate` can cross-check the redundant half instead of assuming it.

use std::fmt;

use num_traits::Zero;

use crate::error::{check_len, Error, Result};
use crate::linalg::Matrix;
use crate::parity::Parity;
use crate::rational::{self, Rational};
use crate::subspaces;
use crate::violation::{compare, Identity, Violation};

#[derive(Clone, PartialEq, Eq)]
pub struct LieSuperalgebra {
    name: String,
    dim_even: usize,
    dim_odd: usize,
    // c[(i * dim + j) * dim + k] is the e_k coefficient of [e_i, e_j].
    constants: Vec<Rational>,
}

impl LieSuperalgebra {
    /// Wraps a dense constant table without validating it.
    pub fn from_constants(
        name: impl Into<String>,
        dim_even: usize,
        dim_odd: usize,
        constants: Vec<Rational>,
    ) -> Result<Self> {
        let dim = dim_even + dim_odd;
        check_len(dim * dim * dim, constants.len())?;
        Ok(LieSuperalgebra {
            name: name.into(),
            dim_even,
            dim_odd,
            constants,
        })
    }

    pub fn from_fn(
        name: impl Into<String>,
        dim_even: usize,
        dim_odd: usize,
        mut f: impl FnMut(usize, usize, usize) -> Rational,
    ) -> Self {
        let dim = dim_even + dim_odd;
        let mut constants = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    constants.push(f(i, j, k));
                }
            }
        }
        LieSuperalgebra {
            name: name.into(),
            dim_even,
            dim_odd,
            constants,
        }
    }

    pub fn zero_brackets(name: impl Into<String>, dim_even: usize, dim_odd: usize) -> Self {
        Self::from_fn(name, dim_even, dim_odd, |_, _, _| Rational::zero())
    }

    /// Returns `self` if every structural axiom holds.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.is_empty() {
            Ok(self)
        } else {
            Err(Error::Invalid(report))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }

    pub fn dim_even(&self) -> usize {
        self.dim_even
    }

    pub fn dim_odd(&self) -> usize {
        self.dim_odd
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.dim_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// Index range of the basis vectors of parity `p`.
    pub fn block(&self, p: Parity) -> std::ops::Range<usize> {
        match p {
            Parity::Even => 0..self.dim_even,
            Parity::Odd => self.dim_even..self.dim(),
        }
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.constants[(i * n + j) * n + k]
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim();
        let start = (i * n + j) * n;
        &self.constants[start..start + n]
    }

    /// `[x, y]` on raw coordinates. Lengths are the caller's responsibility.
    pub(crate) fn bracket_raw(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = rational::zeros(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                rational::axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    /// `[e_i, y]`.
    pub(crate) fn bracket_basis_left(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = rational::zeros(self.dim());
        for (j, yj) in y.iter().enumerate() {
            rational::axpy(&mut out, yj, self.basis_bracket(i, j));
        }
        out
    }

    /// `[x, e_j]`.
    pub(crate) fn bracket_basis_right(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = rational::zeros(self.dim());
        for (i, xi) in x.iter().enumerate() {
            rational::axpy(&mut out, xi, self.basis_bracket(i, j));
        }
        out
    }

    pub fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        check_len(self.dim(), x.len())?;
        check_len(self.dim(), y.len())?;
        Ok(self.bracket_raw(x, y))
    }

    pub fn bracket(&self, x: &AlgebraVector, y: &AlgebraVector) -> Result<AlgebraVector> {
        let coords = self.bracket_coords(&x.coords, &y.coords)?;
        let parity = match (x.parity, y.parity) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(AlgebraVector { coords, parity })
    }

    /// Matrix of `ad(e_i)`: column `j` holds `[e_i, e_j]`.
    pub fn adjoint(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                m[(k, j)] = c.clone();
            }
        }
        m
    }

    /// Checks super skew-symmetry, grading compatibility, and the super-Jacobi
    /// identity on every basis tuple.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let sign = (self.parity(i) * self.parity(j)).sign();
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    let mirrored = -self.constant(j, i, k) * Rational::from_integer(sign.into());
                    if *c != mirrored {
                        violations.push(Violation {
                            identity: Identity::SkewSymmetry,
                            indices: vec![i, j, k],
                            component: k,
                            lhs: c.clone(),
                            rhs: mirrored,
                        });
                    }
                    if !c.is_zero() && self.parity(k) != self.parity(i) + self.parity(j) {
                        violations.push(Violation {
                            identity: Identity::Grading,
                            indices: vec![i, j, k],
                            component: k,
                            lhs: c.clone(),
                            rhs: Rational::zero(),
                        });
                    }
                }
            }
        }
        // [[e_i,e_j],e_k] = [e_i,[e_j,e_k]] - (-1)^{p_i p_j} [e_j,[e_i,e_k]]
        for i in 0..n {
            for j in 0..n {
                let sign = (self.parity(i) * self.parity(j)).sign();
                for k in 0..n {
                    let lhs = self.bracket_basis_right(self.basis_bracket(i, j), k);
                    let mut rhs = self.bracket_basis_left(i, self.basis_bracket(j, k));
                    let second = self.bracket_basis_left(j, self.basis_bracket(i, k));
                    rational::axpy(&mut rhs, &rational::int(-sign), &second);
                    compare(&mut violations, Identity::Jacobi, &[i, j, k], &lhs, &rhs);
                }
            }
        }
        ValidationReport { violations }
    }

    /// Direct sum with the basis reordered so all even vectors precede all odd ones.
    pub fn direct_sum(&self, other: &LieSuperalgebra) -> Result<LieSuperalgebra> {
        for summand in [self, other] {
            let report = summand.validate();
            if !report.is_empty() {
                return Err(Error::Invalid(report));
            }
        }
        let (m1, n1) = (self.dim_even, self.dim_odd);
        let (m2, n2) = (other.dim_even, other.dim_odd);
        let m = m1 + m2;
        let left: Vec<usize> = (0..m1).chain(m..m + n1).collect();
        let right: Vec<usize> = (m1..m).chain(m + n1..m + n1 + n2).collect();
        let dim = m + n1 + n2;
        let mut constants = rational::zeros(dim * dim * dim);
        for (summand, map) in [(self, &left), (other, &right)] {
            let d = summand.dim();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let c = summand.constant(i, j, k);
                        if !c.is_zero() {
                            constants[(map[i] * dim + map[j]) * dim + map[k]] = c.clone();
                        }
                    }
                }
            }
        }
        let name = format!("{}+{}", self.name, other.name);
        LieSuperalgebra::from_constants(name, m, n1 + n2, constants)
    }

    /// Quotient by the center, on the complement spanned by the standard basis
    /// vectors at the non-pivot columns of the center's echelon basis.
    pub fn quotient_by_center(&self) -> Quotient {
        let center = subspaces::center(self);
        let n = self.dim();
        let mut is_pivot = vec![false; n];
        for &p in center.pivots() {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let mut w = v.to_vec();
            for (row, &p) in center.rows().iter().zip(center.pivots()) {
                if !w[p].is_zero() {
                    let factor = -w[p].clone();
                    rational::axpy(&mut w, &factor, row);
                }
            }
            complement.iter().map(|&c| w[c].clone()).collect()
        };
        let q = complement.len();
        let mut projection = Matrix::zeros(q, n);
        for j in 0..n {
            for (a, x) in project(&rational::unit(n, j)).into_iter().enumerate() {
                projection[(a, j)] = x;
            }
        }
        let dim_even = complement.iter().filter(|&&c| c < self.dim_even).count();
        let mut constants = Vec::with_capacity(q * q * q);
        for &a in &complement {
            for &b in &complement {
                constants.extend(project(self.basis_bracket(a, b)));
            }
        }
        let algebra = LieSuperalgebra::from_constants(
            format!("{}/Z", self.name),
            dim_even,
            q - dim_even,
            constants,
        )
        .expect("quotient table has cubic size");
        Quotient {
            algebra,
            projection,
            complement,
        }
    }
}

impl fmt::Debug for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieSuperalgebra({} ({}|{}))", self.name, self.dim_even, self.dim_odd)
    }
}

/// `L / Z(L)` together with the projection `L -> L/Z(L)`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieSuperalgebra,
    /// `dim(L/Z) x dim(L)`; column `j` is the image of `e_j`.
    pub projection: Matrix,
    /// Indices of the basis vectors of `L` that map to the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.projection.mul_vec(v)
    }
}

/// Element of the algebra, optionally tagged as homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraVector {
    pub coords: Vec<Rational>,
    pub parity: Option<Parity>,
}

impl AlgebraVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        AlgebraVector {
            coords,
            parity: None,
        }
    }

    pub fn basis(algebra: &LieSuperalgebra, i: usize) -> Self {
        AlgebraVector {
            coords: rational::unit(algebra.dim(), i),
            parity: Some(algebra.parity(i)),
        }
    }

    /// Tags `coords` with parity `p`, rejecting vectors with support outside that block.
    pub fn homogeneous(algebra: &LieSuperalgebra, coords: Vec<Rational>, p: Parity) -> Result<Self> {
        check_len(algebra.dim(), coords.len())?;
        let block = algebra.block(p);
        if coords
            .iter()
            .enumerate()
            .any(|(i, x)| !x.is_zero() && !block.contains(&i))
        {
            return Err(Error::Input(format!("vector is not homogeneous of parity {p}")));
        }
        Ok(AlgebraVector {
            coords,
            parity: Some(p),
        })
    }

    pub fn is_zero(&self) -> bool {
        rational::is_zero_vec(&self.coords)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, identity: Identity) -> bool {
        self.violations.iter().any(|v| v.identity == identity)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(8) {
            write!(f, "; {v}")?;
        }
        if self.violations.len() > 8 {
            f.write_str("; ...")?;
        }
        Ok(())
    }
}
