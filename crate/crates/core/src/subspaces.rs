//! Derived algebra, center, centralizers, and the structural hypotheses the
//! theorems depend on.

use num_traits::Zero;

use crate::algebra::LieSuperalgebra;
use crate::error::{check_len, Result};
use crate::linalg::{EchelonBasis, EchelonBuilder};
use crate::rational::Rational;

/// `L' = span{[e_i, e_j]}`.
pub fn derived_algebra(algebra: &LieSuperalgebra) -> EchelonBasis {
    let n = algebra.dim();
    let mut builder = EchelonBuilder::new(n);
    for i in 0..n {
        for j in 0..n {
            builder
                .push(algebra.basis_bracket(i, j).to_vec())
                .expect("bracket has algebra length");
        }
    }
    let derived = builder.into_basis();
    assert_graded(algebra, &derived);
    derived
}

/// `Z(L)`, as the kernel of the stacked adjoint matrices `ad(e_i)`.
pub fn center(algebra: &LieSuperalgebra) -> EchelonBasis {
    let n = algebra.dim();
    let mut builder = EchelonBuilder::new(n);
    for i in 0..n {
        for k in 0..n {
            let row = (0..n).map(|j| algebra.constant(i, j, k).clone()).collect();
            builder.push(row).expect("row has algebra length");
        }
    }
    let z = builder.nullspace();
    assert_graded(algebra, &z);
    z
}

/// `Z_L(S) = {v : [s, v] = 0 for all s in S}`, constrained per basis vector of `S`.
pub fn centralizer(algebra: &LieSuperalgebra, s: &EchelonBasis) -> Result<EchelonBasis> {
    let n = algebra.dim();
    check_len(n, s.ambient_dim())?;
    let mut builder = EchelonBuilder::new(n);
    for generator in s.rows() {
        // column j of ad(s) is [s, e_j]
        let columns: Vec<Vec<Rational>> = (0..n)
            .map(|j| algebra.bracket_basis_right(generator, j))
            .collect();
        for k in 0..n {
            builder.push(columns.iter().map(|col| col[k].clone()).collect())?;
        }
    }
    let z = builder.nullspace();
    assert_graded(algebra, &z);
    Ok(z)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub is_perfect: bool,
    pub is_centerless: bool,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub centralizer_of_derived_dim: usize,
}

pub fn hypotheses(algebra: &LieSuperalgebra) -> HypothesisReport {
    let derived = derived_algebra(algebra);
    let z = center(algebra);
    let zd = centralizer(algebra, &derived).expect("derived algebra lives in L");
    HypothesisReport {
        is_perfect: derived.dim() == algebra.dim(),
        is_centerless: z.dim() == 0,
        derived_dim: derived.dim(),
        center_dim: z.dim(),
        centralizer_of_derived_dim: zd.dim(),
    }
}

/// True when every basis row, split into its even and odd coordinate blocks,
/// has both halves inside the subspace.
pub fn is_graded(algebra: &LieSuperalgebra, s: &EchelonBasis) -> bool {
    let m = algebra.dim_even();
    s.rows().iter().all(|row| {
        let mut even = row.clone();
        for x in even.iter_mut().skip(m) {
            *x = Rational::zero();
        }
        let mut odd = row.clone();
        for x in odd.iter_mut().take(m) {
            *x = Rational::zero();
        }
        s.contains(&even).unwrap_or(false) && s.contains(&odd).unwrap_or(false)
    })
}

fn assert_graded(algebra: &LieSuperalgebra, s: &EchelonBasis) {
    assert!(
        is_graded(algebra, s),
        "subspace of {} is not graded; sign bookkeeping is broken",
        algebra.name()
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, AlgebraSpec};
    use crate::rational::int;

    fn alg(spec: AlgebraSpec) -> LieSuperalgebra {
        make(&spec).unwrap()
    }

    #[test]
    fn derived_examples() {
        assert_eq!(derived_algebra(&alg(AlgebraSpec::Abelian(2, 1))).dim(), 0);
        assert_eq!(derived_algebra(&alg(AlgebraSpec::Sl2)), EchelonBasis::full(3));
        let gl = alg(AlgebraSpec::Gl(1, 1));
        let expected = EchelonBasis::span(
            4,
            [
                vec![int(1), int(1), int(0), int(0)],
                vec![int(0), int(0), int(1), int(0)],
                vec![int(0), int(0), int(0), int(1)],
            ],
        )
        .unwrap();
        assert_eq!(derived_algebra(&gl), expected);
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(&alg(AlgebraSpec::Abelian(2, 1))), EchelonBasis::full(3));
        assert!(center(&alg(AlgebraSpec::Sl2)).is_zero());
        let z = center(&alg(AlgebraSpec::Gl(1, 1)));
        assert_eq!(z.rows(), &[vec![int(1), int(1), int(0), int(0)]]);
    }

    #[test]
    fn centralizer_examples() {
        let sl2 = alg(AlgebraSpec::Sl2);
        assert_eq!(centralizer(&sl2, &EchelonBasis::zero(3)).unwrap(), EchelonBasis::full(3));
        assert!(centralizer(&sl2, &EchelonBasis::full(3)).unwrap().is_zero());
        let ab = alg(AlgebraSpec::Abelian(1, 1));
        let s = EchelonBasis::span(2, [vec![int(1), int(0)]]).unwrap();
        assert_eq!(centralizer(&ab, &s).unwrap(), EchelonBasis::full(2));
        assert!(centralizer(&ab, &EchelonBasis::zero(3)).is_err());
    }

    #[test]
    fn hypothesis_flags() {
        let h = hypotheses(&alg(AlgebraSpec::Sl2));
        assert!(h.is_perfect && h.is_centerless);
        assert_eq!(h.centralizer_of_derived_dim, 0);

        let h = hypotheses(&alg(AlgebraSpec::Gl(1, 1)));
        assert!(!h.is_perfect && !h.is_centerless);

        let h = hypotheses(&alg(AlgebraSpec::Abelian(1, 0)));
        assert!(!h.is_perfect && !h.is_centerless);
        assert_eq!(h.centralizer_of_derived_dim, 1);
    }

    #[test]
    fn zero_algebra_is_degenerate_but_legal() {
        let z = alg(AlgebraSpec::Abelian(0, 0));
        let h = hypotheses(&z);
        assert!(h.is_perfect && h.is_centerless);
        assert_eq!(h.derived_dim, 0);
    }

    #[test]
    fn subspace_relations_on_catalog() {
        for spec in crate::catalog::verified_catalog() {
            let l = alg(spec);
            let z = center(&l);
            assert_eq!(z, centralizer(&l, &EchelonBasis::full(l.dim())).unwrap());
            let d = derived_algebra(&l);
            let zd = centralizer(&l, &d).unwrap();
            assert!(z.is_subspace_of(&zd).unwrap());
            if d.dim() == l.dim() {
                assert_eq!(zd, z);
            }
        }
    }

    #[test]
    fn direct_sum_components() {
        let gl = alg(AlgebraSpec::Gl(1, 1));
        let sl2 = alg(AlgebraSpec::Sl2);
        let sum = sl2.direct_sum(&gl).unwrap();
        assert_eq!(
            derived_algebra(&sum).dim(),
            derived_algebra(&sl2).dim() + derived_algebra(&gl).dim()
        );
        assert_eq!(center(&sum).dim(), center(&gl).dim());
    }
}
