//! Naive reference solver for the solution-space dimensions.
//!
//! Every unknown is kept (no skew-symmetry or grading elimination), every
//! constraint is enumerated over all index tuples, and ranks come from a
//! separate sparse Gaussian elimination. Nothing here calls the library's
//! linear algebra.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

type Row = BTreeMap<usize, BigRational>;

pub struct Oracle {
    n: usize,
    odd: Vec<bool>,
    c: Vec<BigRational>,
}

fn sign(odd: bool) -> BigRational {
    if odd {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

fn add(row: &mut Row, col: usize, v: BigRational) {
    if v.is_zero() {
        return;
    }
    let e = row.entry(col).or_insert_with(BigRational::zero);
    *e += v;
    if e.is_zero() {
        row.remove(&col);
    }
}

/// Row echelon form keyed by leading column; only the rank is needed.
#[derive(Default)]
struct Elimination {
    pivots: HashMap<usize, Row>,
}

impl Elimination {
    fn insert(&mut self, mut row: Row) {
        while let Some((&lead, _)) = row.iter().next() {
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let factor = row[&lead].clone();
                    for (col, v) in pivot {
                        add(&mut row, *col, -(&factor * v));
                    }
                }
                None => {
                    let inv = row[&lead].recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Oracle {
    pub fn new(n: usize, odd: Vec<bool>, c: Vec<BigRational>) -> Self {
        assert_eq!(odd.len(), n);
        assert_eq!(c.len(), n * n * n);
        Oracle { n, odd, c }
    }

    fn c(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.c[(i * self.n + j) * self.n + k]
    }

    fn p(&self, i: usize) -> bool {
        self.odd[i]
    }

    /// Grading rows for a linear map with unknown `M[k][l]` at `k * n + l`.
    fn linear_grading(&self, elim: &mut Elimination, degree_odd: bool) {
        let n = self.n;
        for k in 0..n {
            for l in 0..n {
                if self.p(k) != (self.p(l) ^ degree_odd) {
                    elim.insert(Row::from([(k * n + l, BigRational::one())]));
                }
            }
        }
    }

    /// `D[e_i,e_j] = [D e_i, e_j] + (-1)^{τ|i|} [e_i, D e_j]`.
    pub fn der_dim(&self, degree_odd: bool) -> usize {
        let n = self.n;
        let mut elim = Elimination::default();
        self.linear_grading(&mut elim, degree_odd);
        for i in 0..n {
            let s = sign(degree_odd && self.p(i));
            for j in 0..n {
                for k in 0..n {
                    let mut row = Row::new();
                    for l in 0..n {
                        add(&mut row, k * n + l, self.c(i, j, l).clone());
                        add(&mut row, l * n + i, -self.c(l, j, k).clone());
                        add(&mut row, l * n + j, -(&s * self.c(i, l, k)));
                    }
                    elim.insert(row);
                }
            }
        }
        n * n - elim.rank()
    }

    /// `γ[e_i,e_j] = (-1)^{τ|i|} [e_i, γ e_j]`.
    pub fn centroid_dim(&self, degree_odd: bool) -> usize {
        let n = self.n;
        let mut elim = Elimination::default();
        self.linear_grading(&mut elim, degree_odd);
        for i in 0..n {
            let s = sign(degree_odd && self.p(i));
            for j in 0..n {
                for k in 0..n {
                    let mut row = Row::new();
                    for l in 0..n {
                        add(&mut row, k * n + l, self.c(i, j, l).clone());
                        add(&mut row, l * n + j, -(&s * self.c(i, l, k)));
                    }
                    elim.insert(row);
                }
            }
        }
        n * n - elim.rank()
    }

    /// Even `f` with `[f e_i, e_j] = [e_i, f e_j]`.
    pub fn commuting_dim(&self) -> usize {
        let n = self.n;
        let mut elim = Elimination::default();
        self.linear_grading(&mut elim, false);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = Row::new();
                    for l in 0..n {
                        add(&mut row, l * n + i, self.c(l, j, k).clone());
                        add(&mut row, l * n + j, -self.c(i, l, k).clone());
                    }
                    elim.insert(row);
                }
            }
        }
        n * n - elim.rank()
    }

    /// Full `n^3` unknowns `d[i][j][k]`; grading, skew, and the identity
    /// `δ([e_x,e_y],e_z) = (-1)^{τ|x|}[e_x,δ(e_y,e_z)] + (-1)^{|y||z|}[δ(e_x,e_z),e_y]`.
    pub fn bider_dim(&self, degree_odd: bool) -> usize {
        let n = self.n;
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        let mut elim = Elimination::default();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.p(k) != (self.p(i) ^ self.p(j) ^ degree_odd) {
                        elim.insert(Row::from([(idx(i, j, k), BigRational::one())]));
                    }
                    let mut skew = Row::new();
                    add(&mut skew, idx(i, j, k), BigRational::one());
                    add(&mut skew, idx(j, i, k), sign(self.p(i) && self.p(j)));
                    elim.insert(skew);
                }
            }
        }
        for x in 0..n {
            let sx = sign(degree_odd && self.p(x));
            for y in 0..n {
                for z in 0..n {
                    let syz = sign(self.p(y) && self.p(z));
                    for k in 0..n {
                        let mut row = Row::new();
                        for l in 0..n {
                            add(&mut row, idx(l, z, k), self.c(x, y, l).clone());
                            add(&mut row, idx(y, z, l), -(&sx * self.c(x, l, k)));
                            add(&mut row, idx(x, z, l), -(&syz * self.c(l, y, k)));
                        }
                        elim.insert(row);
                    }
                }
            }
        }
        n * n * n - elim.rank()
    }
}

/// Reads structure constants straight off the library type.
pub fn from_core(algebra: &superbider_core::LieSuperalgebra) -> Oracle {
    let odd = (0..algebra.dim()).map(|i| algebra.parity(i).is_odd()).collect();
    Oracle::new(algebra.dim(), odd, algebra.constants().to_vec())
}

#[cfg(test)]
mod self_check {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    /// sl2 typed in by hand: h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h.
    fn sl2() -> Oracle {
        let mut c = vec![BigRational::zero(); 27];
        let mut set = |i: usize, j: usize, k: usize, v: i64| {
            c[(i * 3 + j) * 3 + k] = int(v);
            c[(j * 3 + i) * 3 + k] = int(-v);
        };
        set(0, 1, 1, 2);
        set(0, 2, 2, -2);
        set(1, 2, 0, 1);
        Oracle::new(3, vec![false; 3], c)
    }

    #[test]
    fn oracle_on_hand_built_sl2() {
        let o = sl2();
        assert_eq!(o.der_dim(false), 3);
        assert_eq!(o.centroid_dim(false), 1);
        assert_eq!(o.commuting_dim(), 1);
        assert_eq!(o.bider_dim(false), 1);
        assert_eq!(o.der_dim(true), 0);
    }

    #[test]
    fn oracle_on_abelian() {
        let o = Oracle::new(3, vec![false, false, true], vec![BigRational::zero(); 27]);
        assert_eq!(o.centroid_dim(false), 5);
        assert_eq!(o.centroid_dim(true), 4);
        assert_eq!(o.der_dim(false), 5);
    }
}
