//! Homogeneous linear maps: superderivations, the centroid, and linear
//! super-commuting maps, each solved as the kernel of an exactly assembled
//! constraint system.
//!
//! A map is stored as the matrix acting on coordinates: column `j` is the
//! image of `e_j`. Unknowns are the matrix entries allowed by the degree, in
//! row-major order. Constraint rows are indexed by a basis pair `(a, b)` and an
//! output coordinate `k`; bilinearity makes basis pairs sufficient.

use std::fmt;

use num_traits::Zero;

use crate::algebra::LieSuperalgebra;
use crate::error::{check_len, Error, Result};
use crate::linalg::{EchelonBasis, EchelonBuilder, Matrix};
use crate::parity::Parity;
use crate::rational::{self, Rational};
use crate::subspaces;
use crate::violation::{compare, Identity, Violation};

/// Square matrix plus the degree `τ` with `f(L_i) ⊆ L_{i+τ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLinearMap {
    matrix: Matrix,
    degree: Parity,
}

impl GradedLinearMap {
    /// Checks that `matrix` is square of the algebra's size and vanishes off
    /// the blocks allowed by `degree`.
    pub fn new(algebra: &LieSuperalgebra, matrix: Matrix, degree: Parity) -> Result<Self> {
        let n = algebra.dim();
        check_len(n, matrix.rows())?;
        check_len(n, matrix.cols())?;
        for r in 0..n {
            for s in 0..n {
                if !matrix[(r, s)].is_zero() && algebra.parity(r) != algebra.parity(s) + degree {
                    return Err(Error::Input(format!(
                        "entry ({r},{s}) is nonzero but outside the {degree} blocks"
                    )));
                }
            }
        }
        Ok(GradedLinearMap { matrix, degree })
    }

    pub fn identity(algebra: &LieSuperalgebra) -> Self {
        GradedLinearMap {
            matrix: Matrix::identity(algebra.dim()),
            degree: Parity::Even,
        }
    }

    pub fn zero(algebra: &LieSuperalgebra, degree: Parity) -> Self {
        GradedLinearMap {
            matrix: Matrix::zeros(algebra.dim(), algebra.dim()),
            degree,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn degree(&self) -> Parity {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        GradedLinearMap {
            matrix: self.matrix.scale(s),
            degree: self.degree,
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.matrix.mul_vec(v)
    }

    /// Image of the basis vector `e_j`.
    pub fn image_of_basis(&self, j: usize) -> Vec<Rational> {
        self.matrix.column(j)
    }

    pub(crate) fn apply_raw(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v).expect("vector has algebra length")
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Row-major flattening, used as the coordinate vector of the map.
    pub fn vectorized(&self) -> &[Rational] {
        self.matrix.as_flat()
    }
}

impl fmt::Display for GradedLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let mut first = true;
        for r in 0..n {
            for s in 0..n {
                let x = &self.matrix[(r, s)];
                if !x.is_zero() {
                    if !first {
                        f.write_str(" ")?;
                    }
                    write!(f, "({r},{s}):{x}")?;
                    first = false;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    Derivation,
    Centroid,
    Commuting,
}

impl MapKind {
    pub fn name(self) -> &'static str {
        match self {
            MapKind::Derivation => "der",
            MapKind::Centroid => "centroid",
            MapKind::Commuting => "commuting",
        }
    }

    fn identity(self) -> Identity {
        match self {
            MapKind::Derivation => Identity::DerivationRule,
            MapKind::Centroid => Identity::CentroidRule,
            MapKind::Commuting => Identity::CommutingRule,
        }
    }
}

/// Solution space of one homogeneous degree. `basis` is the canonical echelon
/// basis of the vectorized matrices, unpacked into maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpace {
    pub kind: MapKind,
    pub degree: Parity,
    pub basis: Vec<GradedLinearMap>,
    algebra_dim: usize,
    echelon: EchelonBasis,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.echelon
    }

    pub fn contains(&self, map: &GradedLinearMap) -> bool {
        map.degree() == self.degree
            && self.echelon.contains(map.vectorized()).unwrap_or(false)
    }

    /// `Σ coeffs[i] * basis[i]`.
    pub fn combination(&self, coeffs: &[Rational]) -> Result<GradedLinearMap> {
        check_len(self.dim(), coeffs.len())?;
        let len = self.echelon.ambient_dim();
        let mut flat = rational::zeros(len);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            rational::axpy(&mut flat, c, b.vectorized());
        }
        let n = self.algebra_dim;
        Ok(GradedLinearMap {
            matrix: Matrix::from_flat(n, n, flat)?,
            degree: self.degree,
        })
    }
}

struct Unknowns {
    n: usize,
    slots: Vec<Option<usize>>,
    count: usize,
}

impl Unknowns {
    fn new(algebra: &LieSuperalgebra, degree: Parity) -> Self {
        let n = algebra.dim();
        let mut count = 0;
        let slots = (0..n * n)
            .map(|flat| {
                let (r, s) = (flat / n, flat % n);
                (algebra.parity(r) == algebra.parity(s) + degree).then(|| {
                    count += 1;
                    count - 1
                })
            })
            .collect();
        Unknowns { n, slots, count }
    }

    fn add(&self, row: &mut [Rational], r: usize, s: usize, value: &Rational) {
        if value.is_zero() {
            return;
        }
        if let Some(u) = self.slots[r * self.n + s] {
            row[u] += value;
        }
    }

    fn embed(&self, solution: &[Rational]) -> Vec<Rational> {
        self.slots
            .iter()
            .map(|slot| slot.map_or_else(Rational::zero, |u| solution[u].clone()))
            .collect()
    }
}

/// Constraint rows for basis pair `(a, b)`, one per output coordinate.
fn constraint_rows(
    algebra: &LieSuperalgebra,
    kind: MapKind,
    degree: Parity,
    unknowns: &Unknowns,
    a: usize,
    b: usize,
) -> Vec<Vec<Rational>> {
    let n = algebra.dim();
    let mut rows = vec![rational::zeros(unknowns.count); n];
    let sign = rational::int((degree * algebra.parity(a)).sign());
    let minus_one = rational::int(-1);

    // f([e_a, e_b])_k = Σ_l c[a][b][l] M[k][l]
    if matches!(kind, MapKind::Derivation | MapKind::Centroid) {
        for (l, c) in algebra.basis_bracket(a, b).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, row) in rows.iter_mut().enumerate() {
                unknowns.add(row, k, l, c);
            }
        }
    }
    // [f(e_a), e_b]_k = Σ_i M[i][a] c[i][b][k]
    let left_coeff = match kind {
        MapKind::Derivation => Some(minus_one.clone()),
        MapKind::Commuting => Some(rational::int(1)),
        MapKind::Centroid => None,
    };
    if let Some(coeff) = left_coeff {
        for i in 0..n {
            for (k, c) in algebra.basis_bracket(i, b).iter().enumerate() {
                unknowns.add(&mut rows[k], i, a, &(c * &coeff));
            }
        }
    }
    // [e_a, f(e_b)]_k = Σ_i M[i][b] c[a][i][k]
    let right_coeff = match kind {
        MapKind::Derivation | MapKind::Centroid => -sign,
        MapKind::Commuting => minus_one,
    };
    for i in 0..n {
        for (k, c) in algebra.basis_bracket(a, i).iter().enumerate() {
            unknowns.add(&mut rows[k], i, b, &(c * &right_coeff));
        }
    }
    rows
}

fn solve_space(algebra: &LieSuperalgebra, kind: MapKind, degree: Parity) -> MapSpace {
    let n = algebra.dim();
    let unknowns = Unknowns::new(algebra, degree);
    let mut builder = EchelonBuilder::new(unknowns.count);
    for a in 0..n {
        for b in 0..n {
            for row in constraint_rows(algebra, kind, degree, &unknowns, a, b) {
                builder.push(row).expect("row has unknown count");
            }
        }
    }
    let kernel = builder.nullspace();
    let echelon = EchelonBasis::span(n * n, kernel.rows().iter().map(|v| unknowns.embed(v)))
        .expect("embedded vectors have n^2 entries");
    let basis: Vec<GradedLinearMap> = echelon
        .rows()
        .iter()
        .map(|row| GradedLinearMap {
            matrix: Matrix::from_flat(n, n, row.clone()).expect("n^2 entries"),
            degree,
        })
        .collect();
    for map in &basis {
        let v = violations(algebra, kind, map);
        assert!(v.is_empty(), "{} basis map fails re-substitution: {}", kind.name(), v[0]);
    }
    MapSpace {
        kind,
        degree,
        basis,
        algebra_dim: n,
        echelon,
    }
}

/// `Der_τ(L)`: `D([x,y]) = [D(x),y] + (-1)^{|D||x|}[x,D(y)]`.
pub fn derivation_space(algebra: &LieSuperalgebra, degree: Parity) -> MapSpace {
    solve_space(algebra, MapKind::Derivation, degree)
}

/// `Γ_τ(L)`: `γ([x,y]) = (-1)^{|γ||x|}[x,γ(y)]`.
pub fn centroid_space(algebra: &LieSuperalgebra, degree: Parity) -> MapSpace {
    solve_space(algebra, MapKind::Centroid, degree)
}

/// Even maps with `[f(x),y] = [x,f(y)]`.
pub fn commuting_map_space(algebra: &LieSuperalgebra) -> MapSpace {
    solve_space(algebra, MapKind::Commuting, Parity::Even)
}

/// Evaluates the defining identity of `kind` at every basis pair, directly from
/// the map's matrix. Block-structure violations are reported too.
pub fn violations(algebra: &LieSuperalgebra, kind: MapKind, map: &GradedLinearMap) -> Vec<Violation> {
    let n = algebra.dim();
    let mut out = Vec::new();
    if map.dim() != n {
        out.push(Violation {
            identity: Identity::DegreeBlock,
            indices: vec![],
            component: 0,
            lhs: rational::int(map.dim() as i64),
            rhs: rational::int(n as i64),
        });
        return out;
    }
    let degree = map.degree();
    if kind == MapKind::Commuting && degree != Parity::Even {
        out.push(Violation {
            identity: Identity::DegreeBlock,
            indices: vec![],
            component: 0,
            lhs: rational::int(1),
            rhs: rational::int(0),
        });
    }
    for r in 0..n {
        for s in 0..n {
            let x = &map.matrix()[(r, s)];
            if !x.is_zero() && algebra.parity(r) != algebra.parity(s) + degree {
                out.push(Violation {
                    identity: Identity::DegreeBlock,
                    indices: vec![r, s],
                    component: r,
                    lhs: x.clone(),
                    rhs: Rational::zero(),
                });
            }
        }
    }
    let images: Vec<Vec<Rational>> = (0..n).map(|j| map.image_of_basis(j)).collect();
    for a in 0..n {
        let sign = rational::int((degree * algebra.parity(a)).sign());
        for b in 0..n {
            let (lhs, rhs) = match kind {
                MapKind::Derivation => {
                    let lhs = map.apply_raw(algebra.basis_bracket(a, b));
                    let mut rhs = algebra.bracket_basis_right(&images[a], b);
                    rational::axpy(&mut rhs, &sign, &algebra.bracket_basis_left(a, &images[b]));
                    (lhs, rhs)
                }
                MapKind::Centroid => {
                    let lhs = map.apply_raw(algebra.basis_bracket(a, b));
                    let mut rhs = algebra.bracket_basis_left(a, &images[b]);
                    rhs.iter_mut().for_each(|x| *x *= &sign);
                    (lhs, rhs)
                }
                MapKind::Commuting => (
                    algebra.bracket_basis_right(&images[a], b),
                    algebra.bracket_basis_left(a, &images[b]),
                ),
            };
            compare(&mut out, kind.identity(), &[a, b], &lhs, &rhs);
        }
    }
    out
}

pub fn satisfies(algebra: &LieSuperalgebra, kind: MapKind, map: &GradedLinearMap) -> bool {
    violations(algebra, kind, map).is_empty()
}

/// Where a commuting map failed to be an even centroid element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutingWitness {
    /// `f([x,y]) != [x, f(y)]` at the basis pair.
    NotInCentroid { map_index: usize, pair: (usize, usize) },
    /// `[[w,z],[u, f([x,y]) - [x,f(y)]]] != 0` at the basis tuple `(w,z,u,x,y)`.
    DoubleBracket { map_index: usize, tuple: [usize; 5] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingCertificate {
    pub passed: bool,
    pub commuting_dim: usize,
    pub centroid_dim: usize,
    pub witness: Option<CommutingWitness>,
}

/// For `L = L'` with `Z_L(L') = 0`, checks that every linear super-commuting
/// map lies in `Γ_0(L)`, together with the double-bracket identity that feeds
/// the argument, over all basis 5-tuples.
pub fn verify_commuting_in_centroid(algebra: &LieSuperalgebra) -> Result<CommutingCertificate> {
    let hyp = subspaces::hypotheses(algebra);
    if !hyp.is_perfect {
        return Err(Error::Precondition(format!(
            "{} is not perfect (dim L' = {} < dim L = {})",
            algebra.name(),
            hyp.derived_dim,
            algebra.dim()
        )));
    }
    if hyp.centralizer_of_derived_dim != 0 {
        return Err(Error::Precondition(format!(
            "{}: Z_L(L') is nonzero (dim {})",
            algebra.name(),
            hyp.centralizer_of_derived_dim
        )));
    }
    let commuting = commuting_map_space(algebra);
    let centroid = centroid_space(algebra, Parity::Even);
    let n = algebra.dim();
    let mut witness = None;
    'maps: for (idx, f) in commuting.basis.iter().enumerate() {
        let images: Vec<Vec<Rational>> = (0..n).map(|j| f.image_of_basis(j)).collect();
        for x in 0..n {
            for (y, fy) in images.iter().enumerate() {
                // g = f([x,y]) - [x, f(y)]
                let mut g = f.apply_raw(algebra.basis_bracket(x, y));
                rational::axpy(&mut g, &rational::int(-1), &algebra.bracket_basis_left(x, fy));
                if rational::is_zero_vec(&g) {
                    continue;
                }
                witness.get_or_insert(CommutingWitness::NotInCentroid {
                    map_index: idx,
                    pair: (x, y),
                });
                for u in 0..n {
                    let ug = algebra.bracket_basis_left(u, &g);
                    if rational::is_zero_vec(&ug) {
                        continue;
                    }
                    for w in 0..n {
                        for z in 0..n {
                            let outer = algebra.bracket_raw(algebra.basis_bracket(w, z), &ug);
                            if !rational::is_zero_vec(&outer) {
                                witness = Some(CommutingWitness::DoubleBracket {
                                    map_index: idx,
                                    tuple: [w, z, u, x, y],
                                });
                                break 'maps;
                            }
                        }
                    }
                }
            }
        }
        if witness.is_none() && !centroid.contains(f) {
            // The identity held pairwise but the echelon test disagrees; report
            // the first pair the direct checker flags.
            let v = violations(algebra, MapKind::Centroid, f);
            let pair = v.first().map_or((0, 0), |v| {
                (v.indices.first().copied().unwrap_or(0), v.indices.get(1).copied().unwrap_or(0))
            });
            witness = Some(CommutingWitness::NotInCentroid { map_index: idx, pair });
        }
    }
    Ok(CommutingCertificate {
        passed: witness.is_none(),
        commuting_dim: commuting.dim(),
        centroid_dim: centroid.dim(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, AlgebraSpec};

    fn alg(spec: AlgebraSpec) -> LieSuperalgebra {
        make(&spec).unwrap()
    }

    fn sl2x2() -> LieSuperalgebra {
        alg(AlgebraSpec::sum(AlgebraSpec::Sl2, AlgebraSpec::Sl2))
    }

    #[test]
    fn abelian_spaces_are_all_even_maps() {
        let (m, n) = (2, 1);
        let l = alg(AlgebraSpec::Abelian(m, n));
        assert_eq!(derivation_space(&l, Parity::Even).dim(), m * m + n * n);
        assert_eq!(centroid_space(&l, Parity::Even).dim(), m * m + n * n);
        assert_eq!(commuting_map_space(&l).dim(), m * m + n * n);
        assert_eq!(derivation_space(&l, Parity::Odd).dim(), 2 * m * n);
    }

    #[test]
    fn sl2_dimensions() {
        let l = alg(AlgebraSpec::Sl2);
        assert_eq!(derivation_space(&l, Parity::Even).dim(), 3);
        assert_eq!(centroid_space(&l, Parity::Even).dim(), 1);
        assert_eq!(centroid_space(&l, Parity::Odd).dim(), 0);
        assert_eq!(commuting_map_space(&l).dim(), 1);
    }

    #[test]
    fn sl2_sum_dimensions() {
        let l = sl2x2();
        assert_eq!(derivation_space(&l, Parity::Even).dim(), 6);
        assert_eq!(commuting_map_space(&l).dim(), 2);
    }

    #[test]
    fn inner_derivations_of_sl2() {
        let l = alg(AlgebraSpec::Sl2);
        let der = derivation_space(&l, Parity::Even);
        for i in 0..3 {
            let ad = GradedLinearMap::new(&l, l.adjoint(i), Parity::Even).unwrap();
            assert!(der.contains(&ad));
        }
    }

    #[test]
    fn scalars_are_in_every_centroid() {
        for spec in crate::catalog::verified_catalog() {
            let l = alg(spec);
            let id = GradedLinearMap::identity(&l).scale(&rational::frac(-7, 3));
            assert!(centroid_space(&l, Parity::Even).contains(&id));
            assert!(satisfies(&l, MapKind::Centroid, &id));
        }
    }

    #[test]
    fn zero_algebra_spaces_vanish() {
        let l = alg(AlgebraSpec::Abelian(0, 0));
        for p in Parity::BOTH {
            assert_eq!(derivation_space(&l, p).dim(), 0);
            assert_eq!(centroid_space(&l, p).dim(), 0);
        }
        assert_eq!(commuting_map_space(&l).dim(), 0);
    }

    #[test]
    fn block_structure_enforced() {
        let l = alg(AlgebraSpec::Gl(1, 1));
        let mut m = Matrix::zeros(4, 4);
        m[(0, 2)] = rational::int(1);
        assert!(GradedLinearMap::new(&l, m.clone(), Parity::Even).is_err());
        assert!(GradedLinearMap::new(&l, m, Parity::Odd).is_ok());
    }

    #[test]
    fn commuting_theorem_on_sl2_and_sum() {
        for l in [alg(AlgebraSpec::Sl2), sl2x2()] {
            let cert = verify_commuting_in_centroid(&l).unwrap();
            assert!(cert.passed, "{cert:?}");
            assert!(cert.commuting_dim <= cert.centroid_dim);
        }
        let cert = verify_commuting_in_centroid(&alg(AlgebraSpec::Sl2)).unwrap();
        assert_eq!((cert.commuting_dim, cert.centroid_dim), (1, 1));
    }

    #[test]
    fn commuting_theorem_preconditions() {
        let err = verify_commuting_in_centroid(&alg(AlgebraSpec::Gl(1, 1))).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref s) if s.contains("not perfect")));
        assert!(verify_commuting_in_centroid(&alg(AlgebraSpec::Abelian(2, 1))).is_err());
    }

    #[test]
    fn non_centroid_map_is_flagged() {
        let l = alg(AlgebraSpec::Sl2);
        let ad_h = GradedLinearMap::new(&l, l.adjoint(0), Parity::Even).unwrap();
        assert!(!satisfies(&l, MapKind::Centroid, &ad_h));
        assert!(satisfies(&l, MapKind::Derivation, &ad_h));
        assert!(!satisfies(&l, MapKind::Commuting, &ad_h));
    }
}
