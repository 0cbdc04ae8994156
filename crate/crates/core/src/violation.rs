use std::fmt;

use crate::rational::Rational;

/// The identity or structural condition a [`Violation`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    SkewSymmetry,
    Grading,
    Jacobi,
    Biderivation,
    CrossBracket,
    PerfectLeibniz,
    SecondSlotLeibniz,
    DerivationRule,
    CentroidRule,
    CommutingRule,
    DegreeBlock,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::SkewSymmetry => "super-skew-symmetry",
            Identity::Grading => "grading",
            Identity::Jacobi => "super-jacobi",
            Identity::Biderivation => "biderivation-identity",
            Identity::CrossBracket => "cross-bracket-identity",
            Identity::PerfectLeibniz => "perfect-leibniz-identity",
            Identity::SecondSlotLeibniz => "second-slot-leibniz",
            Identity::DerivationRule => "superderivation-rule",
            Identity::CentroidRule => "centroid-rule",
            Identity::CommutingRule => "super-commuting-rule",
            Identity::DegreeBlock => "degree-block",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed coordinate of an identity: the basis indices it was evaluated at,
/// the output coordinate, and the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: Identity,
    pub indices: Vec<usize>,
    pub component: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} at ({}) component {}: lhs {} != rhs {}",
            self.identity,
            idx.join(","),
            self.component,
            self.lhs,
            self.rhs
        )
    }
}

/// Compares two coordinate vectors and records every mismatching component.
pub(crate) fn compare(
    out: &mut Vec<Violation>,
    identity: Identity,
    indices: &[usize],
    lhs: &[Rational],
    rhs: &[Rational],
) {
    for (k, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if l != r {
            out.push(Violation {
                identity,
                indices: indices.to_vec(),
                component: k,
                lhs: l.clone(),
                rhs: r.clone(),
            });
        }
    }
}
